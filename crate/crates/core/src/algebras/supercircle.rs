use std::cmp::Ordering;
use std::fmt;

use super::{Algebra, Monomial};
use crate::scalars::Scalar;

/// Functions on the supercircle: `a0(x) + a1(x) th` with `th^2 = 0`, where
/// `a0`, `a1` are Fourier polynomials in `u = exp(tau x)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Supercircle;

/// `u^k` (even) or `u^k th` (odd).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperMonomial {
    pub k: i32,
    pub odd: bool,
}

impl SuperMonomial {
    pub fn even(k: i32) -> Self {
        SuperMonomial { k, odd: false }
    }

    pub fn odd(k: i32) -> Self {
        SuperMonomial { k, odd: true }
    }
}

impl fmt::Display for SuperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u = match self.k {
            0 => None,
            1 => Some("u".to_string()),
            k => Some(format!("u^{k}")),
        };
        match (u, self.odd) {
            (None, false) => f.write_str("1"),
            (None, true) => f.write_str("th"),
            (Some(u), false) => f.write_str(&u),
            (Some(u), true) => write!(f, "{u}*th"),
        }
    }
}

impl Monomial for SuperMonomial {
    fn one() -> Self {
        SuperMonomial::even(0)
    }

    fn degree(&self) -> u32 {
        self.k.unsigned_abs()
    }

    fn display_cmp(&self, other: &Self) -> Ordering {
        self.odd.cmp(&other.odd).then(other.k.cmp(&self.k))
    }
}

impl Algebra for Supercircle {
    type Monomial = SuperMonomial;

    fn name(&self) -> &'static str {
        "super"
    }

    fn mul_monomials(
        &self,
        a: &SuperMonomial,
        b: &SuperMonomial,
    ) -> Option<(Scalar, SuperMonomial)> {
        if a.odd && b.odd {
            return None;
        }
        Some((
            Scalar::one(),
            SuperMonomial {
                k: a.k + b.k,
                odd: a.odd || b.odd,
            },
        ))
    }

    fn invert_monomial(&self, m: &SuperMonomial) -> Option<(Scalar, SuperMonomial)> {
        (!m.odd).then(|| (Scalar::one(), SuperMonomial::even(-m.k)))
    }

    fn monomials(&self, bound: u32) -> Vec<SuperMonomial> {
        let b = bound as i32;
        (-b..=b)
            .flat_map(|k| [SuperMonomial::even(k), SuperMonomial::odd(k)])
            .collect()
    }
}
