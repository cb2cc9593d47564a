use std::cmp::Ordering;
use std::fmt;

use super::{Algebra, Monomial};
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// The quantum plane `K_q[x, y]` with `xy = q yx`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumPlane {
    q: Scalar,
    q_inv: Scalar,
}

/// `x^x y^y` in normal order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QpMonomial {
    pub x: u32,
    pub y: u32,
}

impl QpMonomial {
    pub fn new(x: u32, y: u32) -> Self {
        QpMonomial { x, y }
    }
}

impl fmt::Display for QpMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("x", self.x), ("y", self.y)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

impl Monomial for QpMonomial {
    fn one() -> Self {
        QpMonomial { x: 0, y: 0 }
    }

    fn degree(&self) -> u32 {
        self.x + self.y
    }

    fn display_cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then(other.x.cmp(&self.x))
    }
}

impl QuantumPlane {
    pub fn new(q: Scalar) -> Result<Self> {
        let q_inv = q
            .inv()
            .map_err(|_| Error::InvalidParameter("q must be nonzero".into()))?;
        Ok(QuantumPlane { q, q_inv })
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }
}

impl Algebra for QuantumPlane {
    type Monomial = QpMonomial;

    fn name(&self) -> &'static str {
        "quantum-plane"
    }

    fn mul_monomials(&self, a: &QpMonomial, b: &QpMonomial) -> Option<(Scalar, QpMonomial)> {
        // y^s x^r = q^{-rs} x^r y^s
        let swaps = a.y as i64 * b.x as i64;
        let c = self.q_inv.pow(swaps).expect("q is invertible");
        Some((c, QpMonomial::new(a.x + b.x, a.y + b.y)))
    }

    fn monomials(&self, bound: u32) -> Vec<QpMonomial> {
        let mut out = Vec::new();
        for d in 0..=bound {
            for x in (0..=d).rev() {
                out.push(QpMonomial::new(x, d - x));
            }
        }
        out
    }
}
