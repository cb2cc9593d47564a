use super::{transpose, FreeStructure, LinearOp, MultiDerivation, OpMatrix};
use crate::algebras::{Algebra, Monomial};
use crate::error::{Error, Result};

/// Shape of an operator matrix, judged by its structural zeros.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Triangularity {
    Diagonal,
    Upper,
    Lower,
}

pub fn triangularity<M: Monomial>(m: &OpMatrix<M>) -> Option<Triangularity> {
    let n = m.len();
    let below = (0..n).any(|i| (0..i).any(|j| !m[i][j].is_zero()));
    let above = (0..n).any(|i| (i + 1..n).any(|j| !m[i][j].is_zero()));
    match (below, above) {
        (false, false) => Some(Triangularity::Diagonal),
        (false, true) => Some(Triangularity::Upper),
        (true, false) => Some(Triangularity::Lower),
        (true, true) => None,
    }
}

fn sum<M: Monomial>(ops: impl IntoIterator<Item = LinearOp<M>>) -> LinearOp<M> {
    ops.into_iter()
        .fold(LinearOp::zero(), |acc, op| acc.plus(&op))
}

/// Two-sided inverse of a triangular operator matrix under composition,
/// by back-substitution from the inverted diagonal.
pub fn invert_triangular<M: Monomial>(m: &OpMatrix<M>) -> Result<OpMatrix<M>> {
    let n = m.len();
    let shape = triangularity(m).ok_or(Error::NotTriangular)?;
    let mut inv: OpMatrix<M> = vec![vec![LinearOp::zero(); n]; n];
    let mut diag_inv = Vec::with_capacity(n);
    for (i, row) in m.iter().enumerate() {
        let d = row[i].inverse().ok_or(Error::NonInvertibleDiagonal(i))?;
        inv[i][i] = d.clone();
        diag_inv.push(d);
    }
    match shape {
        Triangularity::Diagonal => {}
        Triangularity::Lower => {
            // (M·N)_ij = Σ_{k=j..i} M_ik ∘ N_kj = 0 for i > j.
            for i in 0..n {
                for j in 0..i {
                    let s = sum((j..i).map(|k| m[i][k].compose(&inv[k][j])));
                    inv[i][j] = diag_inv[i].compose(&s).neg();
                }
            }
        }
        Triangularity::Upper => {
            // (M·N)_ij = Σ_{k=i..j} M_ik ∘ N_kj = 0 for i < j.
            for i in (0..n).rev() {
                for j in i + 1..n {
                    let s = sum((i + 1..=j).map(|k| m[i][k].compose(&inv[k][j])));
                    inv[i][j] = diag_inv[i].compose(&s).neg();
                }
            }
        }
    }
    Ok(inv)
}

impl<A: Algebra> MultiDerivation<A> {
    pub fn sigma_shape(&self) -> Option<Triangularity> {
        triangularity(self.sigma_ops())
    }

    /// Builds `σ̄ = (σᵀ)⁻¹` and `σ̂ = (σ̄ᵀ)⁻¹` for triangular σ with invertible
    /// diagonal, which is exactly the content of the four freeness identities.
    pub fn derive_free_structure(&self) -> Result<Self> {
        if self.sigma_shape().is_none() {
            return Err(Error::NotTriangular);
        }
        let sigma_bar = invert_triangular(&transpose(self.sigma_ops()))?;
        let sigma_hat = invert_triangular(&transpose(&sigma_bar))?;
        Ok(self.clone().with_free_structure(FreeStructure {
            sigma_bar,
            sigma_hat,
        }))
    }
}
