//! Normal-form algebra instances and their multiplication.

mod dynamic;
mod element;
mod laurent;
mod quantum_plane;
mod supercircle;

pub use dynamic::AnyElement;
pub(crate) use element::join_terms;
pub use element::{Element, Monomial};
pub use laurent::{Laurent, LaurentMonomial};
pub use quantum_plane::{QpMonomial, QuantumPlane};
pub use supercircle::{SuperMonomial, Supercircle};

use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// An associative unital algebra with a monomial basis.
pub trait Algebra: Clone + Send + Sync + 'static {
    type Monomial: Monomial;

    /// Instance name as used on the command line.
    fn name(&self) -> &'static str;

    /// Product of two basis monomials, `None` when it vanishes.
    fn mul_monomials(
        &self,
        a: &Self::Monomial,
        b: &Self::Monomial,
    ) -> Option<(Scalar, Self::Monomial)>;

    /// Two-sided inverse of a basis monomial, if it is a unit.
    fn invert_monomial(&self, _m: &Self::Monomial) -> Option<(Scalar, Self::Monomial)> {
        None
    }

    /// All monomials with `degree() <= bound`, in ascending order.
    fn monomials(&self, bound: u32) -> Vec<Self::Monomial>;

    fn mul(
        &self,
        a: &Element<Self::Monomial>,
        b: &Element<Self::Monomial>,
    ) -> Element<Self::Monomial> {
        let mut out = Element::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                if let Some((c, m)) = self.mul_monomials(ma, mb) {
                    out.add_term(&(ca * cb) * &c, m);
                }
            }
        }
        out
    }

    /// Integer power; negative exponents need a single invertible term.
    fn pow(&self, a: &Element<Self::Monomial>, exp: i64) -> Result<Element<Self::Monomial>> {
        let base = if exp < 0 { self.inverse(a)? } else { a.clone() };
        let mut acc = Element::one();
        for _ in 0..exp.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        Ok(acc)
    }

    fn inverse(&self, a: &Element<Self::Monomial>) -> Result<Element<Self::Monomial>> {
        let not_invertible = || Error::NotInvertible(a.to_string());
        let (c, m) = a.as_term().ok_or_else(not_invertible)?;
        let (d, inv) = self.invert_monomial(m).ok_or_else(not_invertible)?;
        Ok(Element::term(&c.inv()? * &d, inv))
    }
}
