use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{fmt_q, Q};

/// Which torus a weight is a functional on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeightContext {
    /// The Cartan subalgebra `t` of `k`, dual to the chosen basis of `t`.
    T,
    /// The standard Cartan subalgebra of `g`, dual to the simple coroots
    /// (fundamental-weight coordinates).
    HStd,
}

impl WeightContext {
    pub fn tag(self) -> &'static str {
        match self {
            WeightContext::T => "t",
            WeightContext::HStd => "h_std",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub context: WeightContext,
    pub coords: Vec<Q>,
}

impl Weight {
    pub fn new(context: WeightContext, coords: Vec<Q>) -> Self {
        Self { context, coords }
    }

    pub fn zero(context: WeightContext, dim: usize) -> Self {
        Self::new(context, crate::rational::zeros(dim))
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    fn check(&self, other: &Weight) -> Result<()> {
        if self.context != other.context {
            return Err(Error::ContextMismatch(format!(
                "{} vs {}",
                self.context.tag(),
                other.context.tag()
            )));
        }
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: other.dim() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Weight) -> Result<Weight> {
        self.check(other)?;
        Ok(Weight::new(self.context, crate::rational::add_vec(&self.coords, &other.coords)))
    }

    pub fn sub(&self, other: &Weight) -> Result<Weight> {
        self.check(other)?;
        Ok(Weight::new(self.context, crate::rational::sub_vec(&self.coords, &other.coords)))
    }

    pub fn scale(&self, c: &Q) -> Weight {
        Weight::new(self.context, crate::rational::scale_vec(c, &self.coords))
    }

    pub fn is_zero(&self) -> bool {
        crate::rational::is_zero_vec(&self.coords)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(fmt_q).collect();
        write!(f, "{}({})", self.context.tag(), parts.join(","))
    }
}

/// Finite multiset of weights; iteration is in canonical (sorted) order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightMultiset {
    entries: BTreeMap<Weight, usize>,
}

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, w: Weight, mult: usize) {
        if mult > 0 {
            *self.entries.entry(w).or_insert(0) += mult;
        }
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, w: &Weight) -> usize {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, usize)> {
        self.entries.iter().map(|(w, &m)| (w, m))
    }

    /// Half the sum with multiplicities; `None` for the empty multiset.
    pub fn half_sum(&self) -> Option<Weight> {
        let (first, _) = self.entries.iter().next()?;
        let mut acc = crate::rational::zeros(first.dim());
        for (w, m) in &self.entries {
            for (a, x) in acc.iter_mut().zip(&w.coords) {
                *a += x * crate::rational::q(*m as i64);
            }
        }
        let half = crate::rational::frac(1, 2);
        Some(Weight::new(first.context, crate::rational::scale_vec(&half, &acc)))
    }
}

impl FromIterator<Weight> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = Weight>>(iter: I) -> Self {
        let mut s = Self::new();
        for w in iter {
            s.insert(w, 1);
        }
        s
    }
}
