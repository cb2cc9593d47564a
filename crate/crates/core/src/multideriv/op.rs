use std::fmt;
use std::sync::Arc;

use crate::algebras::{Element, Monomial};
use crate::scalars::Scalar;

/// Action of an operator on a single basis monomial.
pub type MonomialMap<M> = Arc<dyn Fn(&M) -> Element<M> + Send + Sync>;

/// A scalar-linear operator `A -> A`, given by its values on monomials.
///
/// `Zero` and `Identity` are tracked structurally so that triangularity of
/// an operator matrix can be decided without probing.
#[derive(Clone)]
pub struct LinearOp<M: Monomial> {
    kind: OpKind<M>,
}

#[derive(Clone)]
enum OpKind<M: Monomial> {
    Zero,
    Identity,
    Map {
        forward: MonomialMap<M>,
        inverse: Option<MonomialMap<M>>,
    },
}

impl<M: Monomial> LinearOp<M> {
    pub fn zero() -> Self {
        LinearOp { kind: OpKind::Zero }
    }

    pub fn identity() -> Self {
        LinearOp {
            kind: OpKind::Identity,
        }
    }

    pub fn from_fn(f: impl Fn(&M) -> Element<M> + Send + Sync + 'static) -> Self {
        LinearOp {
            kind: OpKind::Map {
                forward: Arc::new(f),
                inverse: None,
            },
        }
    }

    pub fn invertible(
        forward: impl Fn(&M) -> Element<M> + Send + Sync + 'static,
        inverse: impl Fn(&M) -> Element<M> + Send + Sync + 'static,
    ) -> Self {
        LinearOp {
            kind: OpKind::Map {
                forward: Arc::new(forward),
                inverse: Some(Arc::new(inverse)),
            },
        }
    }

    /// An operator that rescales each monomial, `m -> c(m) m`, with `c(m) != 0`.
    pub fn monomial_scaling(c: impl Fn(&M) -> Scalar + Send + Sync + 'static) -> Self {
        let c = Arc::new(c);
        let c2 = Arc::clone(&c);
        Self::invertible(
            move |m| Element::term(c(m), m.clone()),
            move |m| {
                let s = c2(m).inv().expect("scaling factor is a unit");
                Element::term(s, m.clone())
            },
        )
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.kind, OpKind::Zero)
    }

    pub fn is_identity(&self) -> bool {
        matches!(self.kind, OpKind::Identity)
    }

    pub fn has_inverse(&self) -> bool {
        match &self.kind {
            OpKind::Zero => false,
            OpKind::Identity => true,
            OpKind::Map { inverse, .. } => inverse.is_some(),
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        match &self.kind {
            OpKind::Zero => None,
            OpKind::Identity => Some(Self::identity()),
            OpKind::Map { forward, inverse } => inverse.as_ref().map(|inv| LinearOp {
                kind: OpKind::Map {
                    forward: Arc::clone(inv),
                    inverse: Some(Arc::clone(forward)),
                },
            }),
        }
    }

    pub fn apply_monomial(&self, m: &M) -> Element<M> {
        match &self.kind {
            OpKind::Zero => Element::zero(),
            OpKind::Identity => Element::monomial(m.clone()),
            OpKind::Map { forward, .. } => forward(m),
        }
    }

    pub fn apply(&self, a: &Element<M>) -> Element<M> {
        match &self.kind {
            OpKind::Zero => Element::zero(),
            OpKind::Identity => a.clone(),
            OpKind::Map { forward, .. } => a.map_monomials(|m| forward(m)),
        }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearOp<M>) -> LinearOp<M> {
        match (&self.kind, &inner.kind) {
            (OpKind::Zero, _) | (_, OpKind::Zero) => Self::zero(),
            (OpKind::Identity, _) => inner.clone(),
            (_, OpKind::Identity) => self.clone(),
            (
                OpKind::Map {
                    forward: f,
                    inverse: fi,
                },
                OpKind::Map {
                    forward: g,
                    inverse: gi,
                },
            ) => {
                let (f, g) = (Arc::clone(f), Arc::clone(g));
                let forward: MonomialMap<M> = Arc::new(move |m: &M| g(m).map_monomials(|n| f(n)));
                let inverse = match (fi, gi) {
                    (Some(fi), Some(gi)) => {
                        let (fi, gi) = (Arc::clone(fi), Arc::clone(gi));
                        let inv: MonomialMap<M> =
                            Arc::new(move |m: &M| fi(m).map_monomials(|n| gi(n)));
                        Some(inv)
                    }
                    _ => None,
                };
                LinearOp {
                    kind: OpKind::Map { forward, inverse },
                }
            }
        }
    }

    pub fn plus(&self, other: &LinearOp<M>) -> LinearOp<M> {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (a, b) = (self.clone(), other.clone());
        Self::from_fn(move |m| &a.apply_monomial(m) + &b.apply_monomial(m))
    }

    pub fn scaled(&self, c: &Scalar) -> LinearOp<M> {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        let (a, c_fwd) = (self.clone(), c.clone());
        match self.inverse() {
            Some(inv) => {
                let c_inv = c.inv().expect("nonzero");
                LinearOp::invertible(
                    move |m| a.apply_monomial(m).scale(&c_fwd),
                    move |m| inv.apply_monomial(m).scale(&c_inv),
                )
            }
            None => LinearOp::from_fn(move |m| a.apply_monomial(m).scale(&c_fwd)),
        }
    }

    pub fn neg(&self) -> LinearOp<M> {
        self.scaled(&Scalar::from(-1))
    }

    /// Equality of the two operators on every monomial in `probe`.
    pub fn agrees_on(&self, other: &LinearOp<M>, probe: &[M]) -> bool {
        probe
            .iter()
            .all(|m| self.apply_monomial(m) == other.apply_monomial(m))
    }
}

impl<M: Monomial> fmt::Debug for LinearOp<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            OpKind::Zero => f.write_str("LinearOp(zero)"),
            OpKind::Identity => f.write_str("LinearOp(identity)"),
            OpKind::Map { inverse, .. } => write!(
                f,
                "LinearOp(map{})",
                if inverse.is_some() {
                    ", invertible"
                } else {
                    ""
                }
            ),
        }
    }
}

/// Square matrix of operators; products compose entries (`(AB)_ij = Σ A_ik ∘ B_kj`).
pub type OpMatrix<M> = Vec<Vec<LinearOp<M>>>;

pub fn transpose<M: Monomial>(m: &OpMatrix<M>) -> OpMatrix<M> {
    let n = m.len();
    (0..n)
        .map(|i| (0..n).map(|j| m[j][i].clone()).collect())
        .collect()
}
