use super::{Elem, MultiDerivation};
use crate::algebras::{Algebra, Element};
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::scalars::Scalar;

/// All ordered pairs of monomials of degree at most `bound`.
pub fn monomial_pairs<A: Algebra>(algebra: &A, bound: u32) -> Vec<(A::Monomial, A::Monomial)> {
    let ms = algebra.monomials(bound);
    ms.iter()
        .flat_map(|a| ms.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

/// Results of the structural axiom checks on a set of sample pairs.
#[derive(Debug, Clone)]
pub struct AxiomReport {
    /// `σ_ij(ab) = Σ_k σ_ik(a) σ_kj(b)`.
    pub homomorphism: CheckReport,
    /// `∂_j(ab) = Σ_i ∂_i(a) σ_ij(b) + a ∂_j(b)`.
    pub leibniz: CheckReport,
    /// `σ_ij(1) = δ_ij` and `∂_j(1) = 0`.
    pub unit: CheckReport,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.homomorphism.passed() && self.leibniz.passed() && self.unit.passed()
    }
}

/// For each `i`, pairs `(a, b)` with `Σ_α a ∂_j(b) = δ_ij`.
#[derive(Debug, Clone)]
pub struct OrthogonalityWitness<M: crate::algebras::Monomial> {
    pub pairs: Vec<Vec<(Element<M>, Element<M>)>>,
}

fn delta<M: crate::algebras::Monomial>(i: usize, j: usize) -> Element<M> {
    if i == j {
        Element::one()
    } else {
        Element::zero()
    }
}

impl<A: Algebra> MultiDerivation<A> {
    pub fn check_axioms(&self, samples: &[(A::Monomial, A::Monomial)]) -> AxiomReport {
        let n = self.dim();
        let alg = self.algebra();
        let mut homomorphism = CheckReport::new("sigma-homomorphism");
        let mut leibniz = CheckReport::new("twisted-leibniz");
        let mut unit = CheckReport::new("unit");

        let one = Element::one();
        for i in 0..n {
            let d = self.partials[i].apply(&one);
            unit.record(d.is_zero(), || format!("∂_{i}(1) = {d}"));
            for j in 0..n {
                let s = self.sigma[i][j].apply(&one);
                unit.record(s == delta(i, j), || format!("σ_{i}{j}(1) = {s}"));
            }
        }

        for (ma, mb) in samples {
            let a = Element::monomial(ma.clone());
            let b = Element::monomial(mb.clone());
            let ab = alg.mul(&a, &b);
            let sa = self.sigma_matrix(&a);
            let sb = self.sigma_matrix(&b);
            let sab = self.sigma_matrix(&ab);
            let prod = self.matrix_product(&sa, &sb);
            for i in 0..n {
                for j in 0..n {
                    homomorphism.record(sab[i][j] == prod[i][j], || {
                        format!(
                            "σ_{i}{j}({ma} * {mb}) = {} but Σ_k σ_{i}k({ma}) σ_k{j}({mb}) = {}",
                            sab[i][j], prod[i][j]
                        )
                    });
                }
            }
            for j in 0..n {
                let lhs = self.partials[j].apply(&ab);
                let mut rhs = alg.mul(&a, &self.partials[j].apply(&b));
                for i in 0..n {
                    rhs += &alg.mul(&self.partials[i].apply(&a), &sb[i][j]);
                }
                leibniz.record(lhs == rhs, || {
                    format!("∂_{j}({ma} * {mb}) = {lhs} but the twisted rule gives {rhs}")
                });
            }
        }
        AxiomReport {
            homomorphism,
            leibniz,
            unit,
        }
    }

    /// Checks the four identities
    /// `Σ_k σ̄_jk σ_ik = Σ_k σ_kj σ̄_ki = Σ_k σ̂_jk σ̄_ik = Σ_k σ̄_kj σ̂_ki = δ_ij`
    /// on each monomial of `probe`.
    pub fn check_free_structure(&self, probe: &[A::Monomial]) -> Result<CheckReport> {
        let free = self.require_free()?;
        let (s, bar, hat) = (&self.sigma, &free.sigma_bar, &free.sigma_hat);
        let n = self.dim();
        let mut report = CheckReport::new("freeness");
        for m in probe {
            let a = Element::monomial(m.clone());
            for i in 0..n {
                for j in 0..n {
                    let expected = if i == j { a.clone() } else { Element::zero() };
                    let sums: [Elem<A>; 4] = [
                        (0..n).fold(Element::zero(), |acc, k| {
                            acc + bar[j][k].apply(&s[i][k].apply(&a))
                        }),
                        (0..n).fold(Element::zero(), |acc, k| {
                            acc + s[k][j].apply(&bar[k][i].apply(&a))
                        }),
                        (0..n).fold(Element::zero(), |acc, k| {
                            acc + hat[j][k].apply(&bar[i][k].apply(&a))
                        }),
                        (0..n).fold(Element::zero(), |acc, k| {
                            acc + bar[k][j].apply(&hat[k][i].apply(&a))
                        }),
                    ];
                    for (idx, v) in sums.iter().enumerate() {
                        report.record(*v == expected, || {
                            format!("identity {} at ({i},{j}) on {m}: got {v}", idx + 1)
                        });
                    }
                }
            }
        }
        Ok(report)
    }

    pub fn check_orthogonality(&self, witness: &OrthogonalityWitness<A::Monomial>) -> CheckReport {
        let n = self.dim();
        let mut report = CheckReport::new("orthogonality");
        report.record(witness.pairs.len() == n, || {
            format!("witness has {} rows, expected {n}", witness.pairs.len())
        });
        for (i, row) in witness.pairs.iter().enumerate().take(n) {
            for j in 0..n {
                let mut acc = Element::zero();
                for (a, b) in row {
                    acc += &self.algebra().mul(a, &self.partials[j].apply(b));
                }
                report.record(acc == delta(i, j), || {
                    format!("Σ a ∂_{j}(b) over witness {i} is {acc}")
                });
            }
        }
        report
    }

    /// The scalar `q_i` with `σ_ii⁻¹ ∘ ∂_i ∘ σ_ii = q_i ∂_i` on all monomials of
    /// degree at most `probe_degree`, or `None` when no single scalar works.
    pub fn detect_skew_q(&self, i: usize, probe_degree: u32) -> Result<Option<Scalar>> {
        self.check_index(i)?;
        let n = self.dim();
        if (0..n).any(|j| j != i && !(self.sigma[i][j].is_zero() && self.sigma[j][i].is_zero())) {
            return Err(Error::NotDiagonal(i));
        }
        let s = &self.sigma[i][i];
        let s_inv = s.inverse().ok_or(Error::NonInvertibleDiagonal(i))?;
        let d = &self.partials[i];
        let mut found: Option<Scalar> = None;
        for m in self.algebra().monomials(probe_degree) {
            let a = Element::monomial(m);
            let lhs = s_inv.apply(&d.apply(&s.apply(&a)));
            let rhs = d.apply(&a);
            let Some((mono, c)) = rhs.terms().next() else {
                if !lhs.is_zero() {
                    return Ok(None);
                }
                continue;
            };
            let ratio = &lhs.coeff(mono) / c;
            if found.as_ref().is_some_and(|f| *f != ratio) || lhs != rhs.scale(&ratio) {
                return Ok(None);
            }
            found = Some(ratio);
        }
        Ok(found)
    }
}
