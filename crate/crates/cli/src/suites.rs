//! Check suites run by `ncforms check`.

use clap::ValueEnum;
use ncforms_core::algebras::{
    Element, Laurent, LaurentMonomial, QuantumPlane, SuperMonomial, Supercircle,
};
use ncforms_core::forms::InnerStructure;
use ncforms_core::integral::{integral_berezin, residue, Functional1};
use ncforms_core::multideriv::{monomial_pairs, MultiDerivation};
use ncforms_core::report::CheckReport;
use ncforms_core::scalars::Scalar;
use ncforms_core::Error;

use crate::parse::Syntax;
use crate::DomainError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Axioms,
    Freeness,
    Leibniz,
    Inner,
    Divergence,
    Flatness,
    Integral,
    All,
}

/// Instance-specific pieces of the suites.
pub trait Instance: Syntax {
    fn inner_structure(
        _md: &MultiDerivation<Self>,
    ) -> Option<Result<InnerStructure<Self::Monomial>, Error>> {
        None
    }

    /// The integral of an element, when one is defined.
    fn integral(_a: &Element<Self::Monomial>) -> Option<Scalar> {
        None
    }

    /// Value of the integral on a basis monomial.
    fn integral_of_monomial(_m: &Self::Monomial) -> Scalar {
        Scalar::zero()
    }
}

impl Instance for QuantumPlane {}

impl Instance for Laurent {
    fn inner_structure(
        md: &MultiDerivation<Laurent>,
    ) -> Option<Result<InnerStructure<LaurentMonomial>, Error>> {
        let x = LaurentMonomial(1);
        let q = md
            .apply_sigma(0, 0, &Element::monomial(x))
            .map(|s| s.coeff(&x));
        Some(q.and_then(|q| InnerStructure::jackson(&q)))
    }

    fn integral(a: &Element<LaurentMonomial>) -> Option<Scalar> {
        Some(residue(a))
    }

    fn integral_of_monomial(m: &LaurentMonomial) -> Scalar {
        if m.0 == -1 {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }
}

impl Instance for Supercircle {
    fn integral(a: &Element<SuperMonomial>) -> Option<Scalar> {
        Some(integral_berezin(a))
    }

    fn integral_of_monomial(m: &SuperMonomial) -> Scalar {
        if *m == SuperMonomial::odd(0) {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }
}

type Groups = Vec<Vec<CheckReport>>;

/// Runs `suite` with monomials of degree at most `bound`. Each inner vector
/// is one output line. `all` skips suites that do not apply to the instance.
pub fn run<A: Instance>(
    md: &MultiDerivation<A>,
    suite: Suite,
    bound: u32,
) -> Result<Groups, DomainError> {
    let name = md.algebra().name();
    let mut out = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Axioms {
        let r = md.check_axioms(&monomial_pairs(md.algebra(), bound));
        out.push(vec![r.homomorphism, r.leibniz, r.unit]);
    }
    if all || suite == Suite::Freeness {
        let free = md.derive_free_structure()?;
        out.push(vec![
            free.check_free_structure(&md.algebra().monomials(bound))?
        ]);
    }
    if all || suite == Suite::Leibniz {
        out.push(vec![leibniz(md, bound)?]);
    }
    if all || suite == Suite::Inner {
        match A::inner_structure(md) {
            Some(Ok(s)) => {
                let r = md.inner_check(&s, &md.algebra().monomials(bound))?;
                out.push(vec![r.commutator, r.cartan_maurer]);
            }
            Some(Err(e)) if !all => return Err(e.into()),
            None if !all => {
                return Err(DomainError(format!(
                    "algebra '{name}' has no known inner structure"
                )))
            }
            _ => {}
        }
    }
    if all || suite == Suite::Divergence {
        out.push(divergence(md, bound)?);
    }
    if all || suite == Suite::Flatness {
        if md.wedge_table().is_some() {
            out.push(vec![md.flatness_check(bound)?]);
        } else if !all {
            return Err(Error::TwoFormsUnsupported.into());
        }
    }
    if all || suite == Suite::Integral {
        if A::integral(&Element::zero()).is_some() {
            out.push(integral(md, bound)?);
        } else if !all {
            return Err(DomainError(format!(
                "no integral is defined on algebra '{name}'"
            )));
        }
    }
    Ok(out)
}

fn leibniz<A: Instance>(md: &MultiDerivation<A>, bound: u32) -> Result<CheckReport, DomainError> {
    let mut report = CheckReport::new("leibniz-d");
    for (ma, mb) in monomial_pairs(md.algebra(), bound) {
        let a = Element::monomial(ma.clone());
        let b = Element::monomial(mb.clone());
        let lhs = md.differential0(&md.algebra().mul(&a, &b));
        let rhs =
            &md.act_right(&md.differential0(&a), &b)? + &md.act_left(&a, &md.differential0(&b))?;
        report.record(lhs == rhs, || format!("d({ma}*{mb})"));
    }
    Ok(report)
}

type Div<'a, A> = Box<
    dyn Fn(
            &Functional1<<A as ncforms_core::algebras::Algebra>::Monomial>,
        ) -> Result<Element<<A as ncforms_core::algebras::Algebra>::Monomial>, Error>
        + 'a,
>;

fn divergences<A: Instance>(
    md: &MultiDerivation<A>,
) -> Result<Vec<(&'static str, Div<'_, A>)>, Error> {
    let mut out: Vec<(&'static str, Div<'_, A>)> =
        vec![("divergence-general", Box::new(|f| md.divergence_general(f)))];
    if let Ok(qs) = md.skew_q_factors(4) {
        out.push((
            "divergence-diagonal",
            Box::new(move |f| md.divergence_diagonal_with(f, &qs)),
        ));
    }
    if let Some(Ok(s)) = A::inner_structure(md) {
        out.push((
            "divergence-inner",
            Box::new(move |f| md.divergence_inner(f, &s)),
        ));
    }
    Ok(out)
}

/// `∇0(f·a) = ∇0(f)a + f(da)` for each applicable divergence, with `f` a
/// monomial multiple of a basis functional, and `∇0(ξ_i) = 0` for the
/// general and diagonal ones.
fn divergence<A: Instance>(
    md: &MultiDerivation<A>,
    bound: u32,
) -> Result<Vec<CheckReport>, DomainError> {
    let n = md.dim();
    let ms = md.algebra().monomials(bound);
    let mut basis = CheckReport::new("basis-functionals");
    let mut out = Vec::new();
    for (name, div) in divergences(md)? {
        let mut report = CheckReport::new(name);
        for i in 0..n {
            let xi = Functional1::basis(n, i);
            let v = div(&xi)?;
            if name != "divergence-inner" {
                basis.record(v.is_zero(), || format!("{name}(xi_{i}) = {v}"));
            }
            for mf in &ms {
                let mut f = Functional1::zero(n);
                f.values[i] = Element::monomial(mf.clone());
                let df = div(&f)?;
                for ma in &ms {
                    let a = Element::monomial(ma.clone());
                    let lhs = div(&md.functional_times(&f, &a)?)?;
                    let da = md.differential0(&a);
                    let rhs = &md.algebra().mul(&df, &a) + &md.evaluate_functional(&f, &da)?;
                    report.record(lhs == rhs, || format!("f_{i} = {mf}, a = {ma}"));
                }
            }
        }
        out.push(report);
    }
    out.push(basis);
    Ok(out)
}

/// The integral on basis monomials and its vanishing on divergences.
fn integral<A: Instance>(
    md: &MultiDerivation<A>,
    bound: u32,
) -> Result<Vec<CheckReport>, DomainError> {
    let n = md.dim();
    let integrate = |a: &Element<A::Monomial>| A::integral(a).expect("integral is defined");
    let ms = md.algebra().monomials(bound);
    let mut values = CheckReport::new("integral-values");
    let mut cokernel = CheckReport::new("integral-of-divergence");
    for m in &ms {
        let got = integrate(&Element::monomial(m.clone()));
        values.record(got == A::integral_of_monomial(m), || {
            format!("integral of {m} = {got}")
        });
        for i in 0..n {
            let mut f = Functional1::zero(n);
            f.values[i] = Element::monomial(m.clone());
            let v = integrate(&md.divergence_general(&f)?);
            cokernel.record(v.is_zero(), || format!("f_{i} = {m}: {v}"));
        }
    }
    Ok(vec![values, cokernel])
}
