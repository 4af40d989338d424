//! Semisimple Lie algebras over the rationals: Cartan types, root systems,
//! Chevalley bases, Weyl groups and weights.

pub mod algebra;
pub mod cartan;
pub mod roots;
pub mod weight;
pub mod weyl;

pub use algebra::{BasisLabel, Element, LieAlgebra};
pub use cartan::{CartanType, Family, SimpleFactor};
pub use roots::{PositiveSystem, RootSystem};
pub use weight::{Weight, WeightContext, WeightMultiset};
pub use weyl::{weyl_dimension, weyl_elements_of_length, WeylElement};

use crate::error::Result;
use crate::rational::Q;

pub fn build_algebra(ty: &CartanType) -> LieAlgebra {
    LieAlgebra::new(ty)
}

impl LieAlgebra {
    /// Half-sum of the standard positive roots, in fundamental coordinates.
    pub fn rho_tilde(&self) -> Weight {
        Weight::new(WeightContext::HStd, self.standard_positive().rho(self.roots()))
    }

    /// Weyl elements of length `r` for the standard positive system.
    pub fn weyl_elements_of_length(&self, r: usize) -> Result<Vec<WeylElement>> {
        weyl::weyl_elements_of_length(self.roots(), &self.standard_positive(), r)
    }

    pub fn weyl_dimension(&self, nu: &Weight) -> Result<num_bigint::BigInt> {
        if nu.context != WeightContext::HStd {
            return Err(crate::Error::ContextMismatch("expected an h_std weight".into()));
        }
        weyl_dimension(self.roots(), &self.standard_positive(), &nu.coords)
    }

    /// Values `α_i(h)` of the simple roots on a Cartan element given by its
    /// coordinates on the simple coroots.
    pub fn simple_root_values(&self, cartan_coords: &[Q]) -> Vec<Q> {
        let a = self.roots().cartan_matrix();
        (0..self.rank())
            .map(|i| {
                (0..self.rank()).fold(Q::from_integer(0.into()), |acc, j| {
                    acc + &cartan_coords[j] * crate::rational::q(a[j][i])
                })
            })
            .collect()
    }
}
