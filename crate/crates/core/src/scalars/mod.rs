//! The coefficient field ℚ(q, p, τ).

mod poly;
mod scalar;

pub use poly::{Exponent, Poly, NVARS};
pub use scalar::{Assignment, Scalar};

/// The formal parameters of the coefficient field, in canonical lex order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    Q,
    P,
    Tau,
}

impl Param {
    pub const ALL: [Param; NVARS] = [Param::Q, Param::P, Param::Tau];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Param::Q => "q",
            Param::P => "p",
            Param::Tau => "tau",
        }
    }

    pub fn from_name(name: &str) -> Option<Param> {
        match name {
            "q" => Some(Param::Q),
            "p" => Some(Param::P),
            "tau" | "τ" => Some(Param::Tau),
            _ => None,
        }
    }
}
