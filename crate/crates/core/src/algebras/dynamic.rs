use std::fmt;

use super::{
    Algebra, Element, Laurent, LaurentMonomial, QpMonomial, QuantumPlane, SuperMonomial,
    Supercircle,
};
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// An element of any of the three instances, tagged at runtime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyElement {
    QuantumPlane(QuantumPlane, Element<QpMonomial>),
    Laurent(Element<LaurentMonomial>),
    Super(Element<SuperMonomial>),
}

impl AnyElement {
    pub fn algebra_name(&self) -> &'static str {
        match self {
            AnyElement::QuantumPlane(a, _) => a.name(),
            AnyElement::Laurent(_) => Laurent.name(),
            AnyElement::Super(_) => Supercircle.name(),
        }
    }

    fn mixed(&self, other: &AnyElement) -> Error {
        Error::MixedInstances {
            left: self.algebra_name(),
            right: other.algebra_name(),
        }
    }

    pub fn multiply(&self, other: &AnyElement) -> Result<AnyElement> {
        match (self, other) {
            (AnyElement::QuantumPlane(a, x), AnyElement::QuantumPlane(b, y)) if a == b => {
                Ok(AnyElement::QuantumPlane(a.clone(), a.mul(x, y)))
            }
            (AnyElement::Laurent(x), AnyElement::Laurent(y)) => {
                Ok(AnyElement::Laurent(Laurent.mul(x, y)))
            }
            (AnyElement::Super(x), AnyElement::Super(y)) => {
                Ok(AnyElement::Super(Supercircle.mul(x, y)))
            }
            _ => Err(self.mixed(other)),
        }
    }

    pub fn add(&self, other: &AnyElement) -> Result<AnyElement> {
        match (self, other) {
            (AnyElement::QuantumPlane(a, x), AnyElement::QuantumPlane(b, y)) if a == b => {
                Ok(AnyElement::QuantumPlane(a.clone(), x + y))
            }
            (AnyElement::Laurent(x), AnyElement::Laurent(y)) => Ok(AnyElement::Laurent(x + y)),
            (AnyElement::Super(x), AnyElement::Super(y)) => Ok(AnyElement::Super(x + y)),
            _ => Err(self.mixed(other)),
        }
    }

    pub fn scalar_multiply(&self, c: &Scalar) -> AnyElement {
        match self {
            AnyElement::QuantumPlane(a, x) => AnyElement::QuantumPlane(a.clone(), x.scale(c)),
            AnyElement::Laurent(x) => AnyElement::Laurent(x.scale(c)),
            AnyElement::Super(x) => AnyElement::Super(x.scale(c)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            AnyElement::QuantumPlane(_, x) => x.is_zero(),
            AnyElement::Laurent(x) => x.is_zero(),
            AnyElement::Super(x) => x.is_zero(),
        }
    }

    pub fn degree_bound(&self) -> Option<u32> {
        match self {
            AnyElement::QuantumPlane(_, x) => x.degree_bound(),
            AnyElement::Laurent(x) => x.degree_bound(),
            AnyElement::Super(x) => x.degree_bound(),
        }
    }
}

impl fmt::Display for AnyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyElement::QuantumPlane(_, x) => x.fmt(f),
            AnyElement::Laurent(x) => x.fmt(f),
            AnyElement::Super(x) => x.fmt(f),
        }
    }
}
