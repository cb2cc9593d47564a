use std::cmp::Ordering;
use std::fmt;

use super::{Algebra, Monomial};
use crate::scalars::Scalar;

/// The Laurent polynomial ring `K[x, x^-1]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Laurent;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentMonomial(pub i32);

impl fmt::Display for LaurentMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => f.write_str("1"),
            1 => f.write_str("x"),
            k => write!(f, "x^{k}"),
        }
    }
}

impl Monomial for LaurentMonomial {
    fn one() -> Self {
        LaurentMonomial(0)
    }

    fn degree(&self) -> u32 {
        self.0.unsigned_abs()
    }

    fn display_cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl Algebra for Laurent {
    type Monomial = LaurentMonomial;

    fn name(&self) -> &'static str {
        "laurent"
    }

    fn mul_monomials(
        &self,
        a: &LaurentMonomial,
        b: &LaurentMonomial,
    ) -> Option<(Scalar, LaurentMonomial)> {
        Some((Scalar::one(), LaurentMonomial(a.0 + b.0)))
    }

    fn invert_monomial(&self, m: &LaurentMonomial) -> Option<(Scalar, LaurentMonomial)> {
        Some((Scalar::one(), LaurentMonomial(-m.0)))
    }

    fn monomials(&self, bound: u32) -> Vec<LaurentMonomial> {
        let b = bound as i32;
        (-b..=b).map(LaurentMonomial).collect()
    }
}
