//! Skew multi-derivations `(∂_i, σ_ij)` and their free structure `(σ̄, σ̂)`.
//!
//! A left basis `ω_1..ω_n` of one-forms determines operators by
//! `da = Σ_i ∂_i(a) ω_i` and `ω_i a = Σ_j σ_ij(a) ω_j`. Indices are 0-based in
//! this API.

mod checks;
mod free;
mod op;

pub use checks::{monomial_pairs, AxiomReport, OrthogonalityWitness};
pub use free::Triangularity;
pub use op::{transpose, LinearOp, MonomialMap, OpMatrix};

use crate::algebras::{Algebra, Element};
use crate::error::{Error, Result};
use crate::scalars::Scalar;

type Elem<A> = Element<<A as Algebra>::Monomial>;

/// The convolution inverses making a multi-derivation free.
#[derive(Clone, Debug)]
pub struct FreeStructure<M: crate::algebras::Monomial> {
    pub sigma_bar: OpMatrix<M>,
    pub sigma_hat: OpMatrix<M>,
}

#[derive(Clone, Debug)]
pub struct MultiDerivation<A: Algebra> {
    algebra: A,
    labels: Vec<String>,
    partials: Vec<LinearOp<A::Monomial>>,
    sigma: OpMatrix<A::Monomial>,
    free: Option<FreeStructure<A::Monomial>>,
    /// `ω_i ω_j = c_ij v`; present only when two-forms are modelled.
    wedge_table: Option<Vec<Vec<Scalar>>>,
}

impl<A: Algebra> MultiDerivation<A> {
    pub fn new(
        algebra: A,
        labels: Vec<String>,
        partials: Vec<LinearOp<A::Monomial>>,
        sigma: OpMatrix<A::Monomial>,
    ) -> Result<Self> {
        let n = labels.len();
        if partials.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: partials.len(),
            });
        }
        if sigma.len() != n || sigma.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: sigma.len(),
            });
        }
        Ok(MultiDerivation {
            algebra,
            labels,
            partials,
            sigma,
            free: None,
            wedge_table: None,
        })
    }

    pub fn with_free_structure(mut self, free: FreeStructure<A::Monomial>) -> Self {
        self.free = Some(free);
        self
    }

    pub fn without_free_structure(mut self) -> Self {
        self.free = None;
        self
    }

    pub fn with_wedge_table(mut self, table: Vec<Vec<Scalar>>) -> Self {
        self.wedge_table = Some(table);
        self
    }

    /// Replaces one entry of σ, dropping any derived free structure.
    pub fn with_sigma_entry(mut self, i: usize, j: usize, op: LinearOp<A::Monomial>) -> Self {
        self.sigma[i][j] = op;
        self.free = None;
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn algebra(&self) -> &A {
        &self.algebra
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn free(&self) -> Option<&FreeStructure<A::Monomial>> {
        self.free.as_ref()
    }

    pub(crate) fn require_free(&self) -> Result<&FreeStructure<A::Monomial>> {
        self.free.as_ref().ok_or(Error::NoFreeStructure)
    }

    pub fn wedge_table(&self) -> Option<&Vec<Vec<Scalar>>> {
        self.wedge_table.as_ref()
    }

    pub fn sigma_ops(&self) -> &OpMatrix<A::Monomial> {
        &self.sigma
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.dim() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                n: self.dim(),
            })
        }
    }

    pub fn partial(&self, i: usize) -> Result<&LinearOp<A::Monomial>> {
        self.check_index(i)?;
        Ok(&self.partials[i])
    }

    pub fn sigma(&self, i: usize, j: usize) -> Result<&LinearOp<A::Monomial>> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(&self.sigma[i][j])
    }

    pub fn apply_partial(&self, i: usize, a: &Elem<A>) -> Result<Elem<A>> {
        Ok(self.partial(i)?.apply(a))
    }

    pub fn apply_sigma(&self, i: usize, j: usize, a: &Elem<A>) -> Result<Elem<A>> {
        Ok(self.sigma(i, j)?.apply(a))
    }

    /// The matrix `σ(a) ∈ M_n(A)`.
    pub fn sigma_matrix(&self, a: &Elem<A>) -> Vec<Vec<Elem<A>>> {
        self.sigma
            .iter()
            .map(|row| row.iter().map(|op| op.apply(a)).collect())
            .collect()
    }

    pub fn apply_sigma_bar(&self, i: usize, j: usize, a: &Elem<A>) -> Result<Elem<A>> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(self.require_free()?.sigma_bar[i][j].apply(a))
    }

    pub fn apply_sigma_hat(&self, i: usize, j: usize, a: &Elem<A>) -> Result<Elem<A>> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(self.require_free()?.sigma_hat[i][j].apply(a))
    }

    /// Product in `M_n(A)`.
    pub fn matrix_product(&self, a: &[Vec<Elem<A>>], b: &[Vec<Elem<A>>]) -> Vec<Vec<Elem<A>>> {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = Element::zero();
                        for k in 0..n {
                            acc += &self.algebra.mul(&a[i][k], &b[k][j]);
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }
}
