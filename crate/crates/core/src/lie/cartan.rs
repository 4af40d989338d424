use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::{frac, q, zeros, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SimpleFactor {
    pub family: Family,
    pub rank: usize,
}

impl SimpleFactor {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidCartanType(format!("{}{}", family.letter(), rank)))
        }
    }

    /// Symmetric Gram matrix `(α_i, α_j)` of the simple roots, Bourbaki
    /// numbering. Long roots of non-simply-laced types have squared length 2
    /// (3 for G2), short roots squared length 1.
    pub fn gram(&self) -> Vec<Vec<Q>> {
        let n = self.rank;
        let mut b: Vec<Vec<Q>> = (0..n).map(|_| zeros(n)).collect();
        let mut edge = |i: usize, j: usize, v: Q| {
            b[i][j] = v.clone();
            b[j][i] = v;
        };
        match self.family {
            Family::A => {
                for i in 0..n.saturating_sub(1) {
                    edge(i, i + 1, q(-1));
                }
            }
            Family::B => {
                for i in 0..n - 1 {
                    edge(i, i + 1, q(-1));
                }
            }
            Family::C => {
                for i in 0..n - 2 {
                    edge(i, i + 1, frac(-1, 2));
                }
                edge(n - 2, n - 1, q(-1));
            }
            Family::D => {
                for i in 0..n - 2 {
                    edge(i, i + 1, q(-1));
                }
                edge(n - 3, n - 1, q(-1));
            }
            Family::E => {
                edge(0, 2, q(-1));
                edge(1, 3, q(-1));
                for i in 2..n - 1 {
                    edge(i, i + 1, q(-1));
                }
            }
            Family::F => {
                edge(0, 1, q(-1));
                edge(1, 2, q(-1));
                edge(2, 3, frac(-1, 2));
            }
            Family::G => edge(0, 1, frac(-3, 2)),
        }
        for i in 0..n {
            b[i][i] = match (self.family, i) {
                (Family::B, i) if i == n - 1 => q(1),
                (Family::C, i) if i < n - 1 => q(1),
                (Family::F, 2 | 3) => q(1),
                (Family::G, 0) => q(1),
                (Family::G, 1) => q(3),
                _ => q(2),
            };
        }
        b
    }

    pub fn weyl_order(&self) -> u128 {
        let fact = |k: usize| (1..=k as u128).product::<u128>();
        let n = self.rank;
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }

    pub fn dim(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 2),
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::E => match n {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Family::F => 52,
            Family::G => 14,
        }
    }
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A semisimple type as an ordered product of simple factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    factors: Vec<SimpleFactor>,
}

impl CartanType {
    pub fn new(factors: Vec<SimpleFactor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidCartanType("empty product".into()));
        }
        Ok(Self { factors })
    }

    pub fn simple(family: Family, rank: usize) -> Result<Self> {
        Self::new(vec![SimpleFactor::new(family, rank)?])
    }

    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }

    /// Starting simple-root index of each factor.
    pub fn offsets(&self) -> Vec<usize> {
        self.factors
            .iter()
            .scan(0, |acc, f| {
                let o = *acc;
                *acc += f.rank;
                Some(o)
            })
            .collect()
    }

    /// Block-diagonal Gram matrix of the simple roots.
    pub fn gram(&self) -> Vec<Vec<Q>> {
        let n = self.rank();
        let mut b: Vec<Vec<Q>> = (0..n).map(|_| zeros(n)).collect();
        for (f, off) in self.factors.iter().zip(self.offsets()) {
            for (i, row) in f.gram().into_iter().enumerate() {
                for (j, x) in row.into_iter().enumerate() {
                    b[off + i][off + j] = x;
                }
            }
        }
        b
    }

    /// Cartan matrix `A[i][j] = α_j(h_i) = 2 (α_i, α_j) / (α_i, α_i)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let b = self.gram();
        let n = b.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let v = q(2) * &b[i][j] / &b[i][i];
                        crate::rational::to_i64(&v).expect("integral Cartan entry")
                    })
                    .collect()
            })
            .collect()
    }

    pub fn weyl_order(&self) -> u128 {
        self.factors.iter().map(SimpleFactor::weyl_order).product()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(SimpleFactor::dim).sum()
    }

    /// Sub-product keeping only the listed factors, in order.
    pub fn restrict(&self, keep: &[usize]) -> Result<CartanType> {
        CartanType::new(keep.iter().map(|&i| self.factors[i]).collect())
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Parses `A2`, `A1xA1`, `A1×A1`, `B2+G2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidCartanType(s.to_string());
        let factors = s
            .split(['x', 'X', '×', '+', '*'])
            .map(|part| {
                let part = part.trim();
                let mut chars = part.chars();
                let family = chars.next().and_then(Family::from_letter).ok_or_else(bad)?;
                let rank: usize = chars.as_str().trim().parse().map_err(|_| bad())?;
                SimpleFactor::new(family, rank)
            })
            .collect::<Result<Vec<_>>>()?;
        CartanType::new(factors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_products() {
        let t: CartanType = "A1xA1".parse().unwrap();
        assert_eq!(t.rank(), 2);
        assert_eq!(t.to_string(), "A1xA1");
        assert_eq!("A1×B2".parse::<CartanType>().unwrap().rank(), 3);
        assert!("D3".parse::<CartanType>().is_err());
        assert!("E9".parse::<CartanType>().is_err());
        assert!("B1".parse::<CartanType>().is_err());
        assert!("Q2".parse::<CartanType>().is_err());
    }

    #[test]
    fn cartan_matrices() {
        let b2: CartanType = "B2".parse().unwrap();
        assert_eq!(b2.cartan_matrix(), vec![vec![2, -1], vec![-2, 2]]);
        let c3: CartanType = "C3".parse().unwrap();
        assert_eq!(c3.cartan_matrix(), vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]);
        let g2: CartanType = "G2".parse().unwrap();
        assert_eq!(g2.cartan_matrix(), vec![vec![2, -3], vec![-1, 2]]);
        let f4: CartanType = "F4".parse().unwrap();
        assert_eq!(f4.cartan_matrix()[1][2], -1);
        assert_eq!(f4.cartan_matrix()[2][1], -2);
    }

    #[test]
    fn weyl_orders() {
        assert_eq!("A2".parse::<CartanType>().unwrap().weyl_order(), 6);
        assert_eq!("B3".parse::<CartanType>().unwrap().weyl_order(), 48);
        assert_eq!("D4".parse::<CartanType>().unwrap().weyl_order(), 192);
        assert_eq!("A1xG2".parse::<CartanType>().unwrap().weyl_order(), 24);
    }
}
