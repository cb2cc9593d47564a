//! Right-linear functionals on forms, divergences and the induced integrals.

use std::fmt;

use crate::algebras::{Algebra, Element, LaurentMonomial, Monomial, SuperMonomial};
use crate::error::{Error, Result};
use crate::forms::{InnerStructure, OneForm, TwoForm};
use crate::multideriv::MultiDerivation;
use crate::report::CheckReport;
use crate::scalars::Scalar;

/// A right-linear map on one-forms, given by its values `f(ω_i)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Functional1<M: Monomial> {
    pub values: Vec<Element<M>>,
}

/// A right-linear map on two-forms, given by `f(v)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Functional2<M: Monomial> {
    pub value_on_volume: Element<M>,
}

impl<M: Monomial> Functional1<M> {
    pub fn zero(n: usize) -> Self {
        Functional1 {
            values: vec![Element::zero(); n],
        }
    }

    /// The dual basis functional `ξ_i(ω_j) = δ_ij`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut f = Self::zero(n);
        f.values[i] = Element::one();
        f
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Element::is_zero)
    }
}

impl<M: Monomial> Functional2<M> {
    pub fn volume_dual() -> Self {
        Functional2 {
            value_on_volume: Element::one(),
        }
    }
}

/// Functionals of any supported degree; degree 0 is identified with `A`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Functional<M: Monomial> {
    Zero(Element<M>),
    One(Functional1<M>),
    Two(Functional2<M>),
}

impl<M: Monomial> Functional<M> {
    pub fn degree(&self) -> usize {
        match self {
            Functional::Zero(_) => 0,
            Functional::One(_) => 1,
            Functional::Two(_) => 2,
        }
    }
}

/// Forms of any supported degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Form<M: Monomial> {
    Zero(Element<M>),
    One(OneForm<M>),
    Two(TwoForm<M>),
}

impl<M: Monomial> Form<M> {
    pub fn degree(&self) -> usize {
        match self {
            Form::Zero(_) => 0,
            Form::One(_) => 1,
            Form::Two(_) => 2,
        }
    }
}

/// The choice of `Λ(x^-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// Left as the free constant `c`.
    Symbolic,
    /// `c = τ`.
    Tau,
    One,
}

impl Normalization {
    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "c" => Some(Normalization::Symbolic),
            "tau" | "τ" => Some(Normalization::Tau),
            "1" => Some(Normalization::One),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Normalization::Symbolic => "c",
            Normalization::Tau => "tau",
            Normalization::One => "1",
        }
    }
}

/// `value · c` where `c` is the chosen normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralResult {
    pub value: Scalar,
    pub normalization: Normalization,
}

impl IntegralResult {
    /// The result as a field element, or `None` while `c` stays symbolic.
    pub fn resolved(&self) -> Option<Scalar> {
        match self.normalization {
            Normalization::Symbolic => None,
            Normalization::Tau => Some(&self.value * &Scalar::tau()),
            Normalization::One => Some(self.value.clone()),
        }
    }
}

impl fmt::Display for IntegralResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.resolved() {
            return write!(f, "{v}");
        }
        let v = &self.value;
        if v.is_zero() {
            f.write_str("0")
        } else if v.is_one() {
            f.write_str("c")
        } else if (-v).is_one() {
            f.write_str("-c")
        } else if v.as_monomial().is_some() {
            write!(f, "{v}*c")
        } else {
            write!(f, "({v})*c")
        }
    }
}

/// Coefficient of `x^-1`.
pub fn residue(a: &Element<LaurentMonomial>) -> Scalar {
    a.coeff(&LaurentMonomial(-1))
}

/// `Λ(a) = res(a) Λ(x^-1)`.
pub fn integral_laurent(
    a: &Element<LaurentMonomial>,
    normalization: Normalization,
) -> IntegralResult {
    IntegralResult {
        value: residue(a),
        normalization,
    }
}

/// `Λ(a0 + a1 th)`: the constant Fourier coefficient of `a1`.
pub fn integral_berezin(a: &Element<SuperMonomial>) -> Scalar {
    a.coeff(&SuperMonomial::odd(0))
}

type Elem<A> = Element<<A as Algebra>::Monomial>;
type F1<A> = Functional1<<A as Algebra>::Monomial>;
type F2<A> = Functional2<<A as Algebra>::Monomial>;

impl<A: Algebra> MultiDerivation<A> {
    fn check_functional(&self, f: &F1<A>) -> Result<()> {
        if f.values.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: f.values.len(),
            })
        }
    }

    pub fn functional(&self, values: Vec<Elem<A>>) -> Result<F1<A>> {
        let f = Functional1 { values };
        self.check_functional(&f)?;
        Ok(f)
    }

    pub fn basis_functional(&self, i: usize) -> Result<F1<A>> {
        self.partial(i)?;
        Ok(Functional1::basis(self.dim(), i))
    }

    /// `f(Σ_j ω_j b_j) = Σ_j f(ω_j) b_j`.
    pub fn evaluate_functional(&self, f: &F1<A>, w: &OneForm<A::Monomial>) -> Result<Elem<A>> {
        self.check_functional(f)?;
        let b = self.right_normal_form(w)?;
        let mut acc = Element::zero();
        for (fj, bj) in f.values.iter().zip(&b) {
            acc += &self.algebra().mul(fj, bj);
        }
        Ok(acc)
    }

    /// `f(c v)` through `c v = v c'`.
    pub fn evaluate_functional2(&self, f: &F2<A>, t: &TwoForm<A::Monomial>) -> Result<Elem<A>> {
        let c = self.volume_left_to_right(&t.coeff)?;
        Ok(self.algebra().mul(&f.value_on_volume, &c))
    }

    /// `(f·a)(ω_j) = f(a ω_j)`.
    pub fn functional_times(&self, f: &F1<A>, a: &Elem<A>) -> Result<F1<A>> {
        self.check_functional(f)?;
        let bar = &self.require_free()?.sigma_bar;
        let n = self.dim();
        let values = (0..n)
            .map(|j| {
                let mut acc = Element::zero();
                for k in 0..n {
                    acc += &self.algebra().mul(&f.values[k], &bar[k][j].apply(a));
                }
                acc
            })
            .collect();
        Ok(Functional1 { values })
    }

    /// `(f·ω)(ω') = f(ω ω')`.
    pub fn dot(
        &self,
        f: &Functional<A::Monomial>,
        w: &Form<A::Monomial>,
    ) -> Result<Functional<A::Monomial>> {
        match (f, w) {
            (Functional::One(f), Form::Zero(a)) => {
                Ok(Functional::One(self.functional_times(f, a)?))
            }
            (Functional::Two(f), Form::Zero(a)) => {
                let c = self.volume_left_to_right(a)?;
                Ok(Functional::Two(Functional2 {
                    value_on_volume: self.algebra().mul(&f.value_on_volume, &c),
                }))
            }
            (Functional::Two(f), Form::One(w)) => Ok(Functional::One(self.dot2(f, w)?)),
            _ => Err(Error::UnsupportedDegree {
                n: f.degree(),
                m: w.degree(),
            }),
        }
    }

    /// The degree-1 functional `f·ω` for `f` of degree 2.
    pub fn dot2(&self, f: &F2<A>, w: &OneForm<A::Monomial>) -> Result<F1<A>> {
        let values = (0..self.dim())
            .map(|j| {
                let t = self.wedge(w, &OneForm::basis(self.dim(), j))?;
                self.evaluate_functional2(f, &t)
            })
            .collect::<Result<_>>()?;
        Ok(Functional1 { values })
    }

    /// `∇_0(f) = Σ_{i,j,k} σ̄_kj(∂_j(σ̂_ki(f(ω_i))))`.
    pub fn divergence_general(&self, f: &F1<A>) -> Result<Elem<A>> {
        self.check_functional(f)?;
        let free = self.require_free()?;
        let n = self.dim();
        let mut out = Element::zero();
        for k in 0..n {
            let mut c = Element::zero();
            for i in 0..n {
                c += &free.sigma_hat[k][i].apply(&f.values[i]);
            }
            if c.is_zero() {
                continue;
            }
            for j in 0..n {
                let d = self.partial(j)?.apply(&c);
                out += &free.sigma_bar[k][j].apply(&d);
            }
        }
        Ok(out)
    }

    /// The factors `q_i` of a diagonal calculus of skew q-derivations.
    pub fn skew_q_factors(&self, probe_degree: u32) -> Result<Vec<Scalar>> {
        (0..self.dim())
            .map(|i| {
                self.detect_skew_q(i, probe_degree)?
                    .ok_or(Error::NotSkewQ(i))
            })
            .collect()
    }

    /// `∇_0(f) = Σ_i q_i ∂_i(f(ω_i))`, with the factors detected on monomials
    /// up to degree 4.
    pub fn divergence_diagonal(&self, f: &F1<A>) -> Result<Elem<A>> {
        let qs = self.skew_q_factors(4)?;
        self.divergence_diagonal_with(f, &qs)
    }

    pub fn divergence_diagonal_with(&self, f: &F1<A>, qs: &[Scalar]) -> Result<Elem<A>> {
        self.check_functional(f)?;
        if qs.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: qs.len(),
            });
        }
        let mut out = Element::zero();
        for (i, (v, qi)) in f.values.iter().zip(qs).enumerate() {
            out += &self.partial(i)?.apply(v).scale(qi);
        }
        Ok(out)
    }

    /// `∇_0(f) = -f(θ)`.
    pub fn divergence_inner(&self, f: &F1<A>, s: &InnerStructure<A::Monomial>) -> Result<Elem<A>> {
        Ok(-self.evaluate_functional(f, &s.theta)?)
    }

    /// `∇_1(f)(ω) = ∇_0(f·ω) + f(dω)`.
    pub fn nabla1_apply(&self, f: &F2<A>, w: &OneForm<A::Monomial>) -> Result<Elem<A>> {
        let div = self.divergence_general(&self.dot2(f, w)?)?;
        let dw = self.differential1(w)?;
        Ok(&div + &self.evaluate_functional2(f, &dw)?)
    }

    /// `∇_1(f)` by its values on the basis forms, which are closed.
    pub fn nabla1(&self, f: &F2<A>) -> Result<F1<A>> {
        let values = (0..self.dim())
            .map(|i| self.divergence_general(&self.dot2(f, &OneForm::basis(self.dim(), i))?))
            .collect::<Result<_>>()?;
        Ok(Functional1 { values })
    }

    /// `∇_0(∇_1(f))` for every `f` with `f(v)` a monomial of degree at most `bound`.
    pub fn flatness_check(&self, bound: u32) -> Result<CheckReport> {
        let mut report = CheckReport::new("flatness");
        for m in self.algebra().monomials(bound) {
            let f = Functional2 {
                value_on_volume: Element::monomial(m.clone()),
            };
            let r = self.divergence_general(&self.nabla1(&f)?)?;
            report.record(r.is_zero(), || format!("f(v) = {m}: ∇0(∇1 f) = {r}"));
        }
        Ok(report)
    }
}
