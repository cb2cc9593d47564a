mod common;

use ncforms_core::algebras::{
    Algebra, Element, Laurent, LaurentMonomial, QpMonomial, SuperMonomial, Supercircle,
};
use ncforms_core::forms::{InnerStructure, OneForm, TwoForm};
use ncforms_core::instances;
use ncforms_core::multideriv::{monomial_pairs, LinearOp, MultiDerivation, OrthogonalityWitness};
use ncforms_core::scalars::Scalar;
use ncforms_core::Error;

type Qp = Element<QpMonomial>;

fn q() -> Scalar {
    Scalar::q()
}

fn p() -> Scalar {
    Scalar::p()
}

fn pw(s: &Scalar, k: i64) -> Scalar {
    s.pow(k).unwrap()
}

fn qp(c: Scalar, x: u32, y: u32) -> Qp {
    Element::term(c, QpMonomial::new(x, y))
}

/// σ(x^r y^s) written out entry by entry.
fn sigma_closed_form(qs: &Scalar, ps: &Scalar, r: u32, s: u32) -> [[Qp; 2]; 2] {
    let (ri, si) = (r as i64, s as i64);
    let off = if s == 0 {
        Element::zero()
    } else {
        qp(&pw(ps, ri) * &(&pw(ps, si) - &Scalar::one()), r + 1, s - 1)
    };
    [
        [qp(&pw(ps, ri) * &pw(qs, si), r, s), off],
        [Element::zero(), qp(&pw(ps, ri + si) * &pw(qs, -ri), r, s)],
    ]
}

#[test]
fn axioms_hold_on_every_instance() {
    let qpm = instances::quantum_plane(q(), p()).unwrap();
    let r = qpm.check_axioms(&monomial_pairs(qpm.algebra(), 4));
    assert!(r.passed(), "{:?}", r.homomorphism.failures.first());

    let la = instances::jackson(q()).unwrap();
    assert!(la.check_axioms(&monomial_pairs(&Laurent, 6)).passed());
    let classical = instances::jackson(Scalar::one()).unwrap();
    assert!(classical
        .check_axioms(&monomial_pairs(&Laurent, 6))
        .passed());

    let sc = instances::supercircle(Scalar::tau()).unwrap();
    assert!(sc.check_axioms(&monomial_pairs(&Supercircle, 4)).passed());
}

#[test]
fn corrupted_sigma_is_detected() {
    let md = instances::quantum_plane(q(), p()).unwrap();
    let doubled = md.sigma(0, 0).unwrap().scaled(&Scalar::from(2));
    let bad = md.with_sigma_entry(0, 0, doubled);
    let r = bad.check_axioms(&monomial_pairs(bad.algebra(), 2));
    assert!(!r.homomorphism.passed());
    assert!(!r.unit.passed());
    assert!(bad.free().is_none());
}

#[test]
fn sigma_matches_closed_form() {
    for (qs, ps) in [(q(), p()), (Scalar::ratio(2, 3), Scalar::ratio(-5, 2))] {
        let md = instances::quantum_plane(qs.clone(), ps.clone()).unwrap();
        for r in 0..=5 {
            for s in 0..=5 {
                let m = qp(Scalar::one(), r, s);
                let expected = sigma_closed_form(&qs, &ps, r, s);
                let got = md.sigma_matrix(&m);
                for i in 0..2 {
                    for j in 0..2 {
                        assert_eq!(got[i][j], expected[i][j], "σ_{i}{j}(x^{r} y^{s})");
                    }
                }
            }
        }
    }
}

#[test]
fn free_structures_satisfy_the_identities() {
    let qpm = instances::quantum_plane(q(), p()).unwrap();
    assert!(qpm
        .check_free_structure(&qpm.algebra().monomials(6))
        .unwrap()
        .passed());
    let la = instances::jackson(q()).unwrap();
    assert!(la
        .check_free_structure(&Laurent.monomials(6))
        .unwrap()
        .passed());
    let sc = instances::supercircle(Scalar::tau()).unwrap();
    let probe = Supercircle.monomials(4);
    assert!(sc.check_free_structure(&probe).unwrap().passed());

    let free = sc.free().unwrap();
    for i in 0..2 {
        for j in 0..2 {
            let s = sc.sigma(i, j).unwrap();
            assert!(free.sigma_bar[i][j].agrees_on(s, &probe));
            assert!(free.sigma_hat[i][j].agrees_on(s, &probe));
        }
    }
}

#[test]
fn quantum_plane_free_structure_by_hand() {
    // σ̄ inverts σᵀ: diagonal inverses, σ̄_21 = -σ_22⁻¹ σ_12 σ_11⁻¹, and σ̂_12 = p σ_12.
    let md = instances::quantum_plane(q(), p()).unwrap();
    let free = md.free().unwrap();
    for m in md.algebra().monomials(5) {
        let (r, s) = (m.x as i64, m.y as i64);
        let a = Element::monomial(m);
        let inv11 = &pw(&p(), -r) * &pw(&q(), -s);
        let inv22 = &pw(&p(), -r - s) * &pw(&q(), r);
        assert_eq!(free.sigma_bar[0][0].apply(&a), a.scale(&inv11));
        assert_eq!(free.sigma_bar[1][1].apply(&a), a.scale(&inv22));
        assert!(free.sigma_bar[0][1].apply(&a).is_zero());
        let s12 = md.apply_sigma(0, 1, &a.scale(&inv11)).unwrap();
        let s12_bar = -&s12.map_monomials(|n| {
            let c = &pw(&p(), -(n.x as i64) - n.y as i64) * &pw(&q(), n.x as i64);
            Element::term(c, *n)
        });
        assert_eq!(free.sigma_bar[1][0].apply(&a), s12_bar);
        assert_eq!(
            free.sigma_hat[0][1].apply(&a),
            md.apply_sigma(0, 1, &a).unwrap().scale(&p())
        );
        assert!(free.sigma_hat[1][0].apply(&a).is_zero());
    }
}

#[test]
fn non_triangular_sigma_has_no_derived_structure() {
    let id = LinearOp::<LaurentMonomial>::identity();
    let md = MultiDerivation::new(
        Laurent,
        vec!["a".into(), "b".into()],
        vec![LinearOp::zero(), LinearOp::zero()],
        vec![vec![id.clone(), id.clone()], vec![id.clone(), id]],
    )
    .unwrap();
    assert_eq!(
        md.derive_free_structure().unwrap_err(),
        Error::NotTriangular
    );
}

#[test]
fn skew_q_detection() {
    let la = instances::jackson(q()).unwrap();
    assert_eq!(la.detect_skew_q(0, 5).unwrap(), Some(q()));
    let classical = instances::jackson(Scalar::one()).unwrap();
    assert_eq!(classical.detect_skew_q(0, 5).unwrap(), Some(Scalar::one()));
    let sc = instances::supercircle(Scalar::tau()).unwrap();
    assert_eq!(sc.detect_skew_q(0, 3).unwrap(), Some(Scalar::one()));
    assert_eq!(sc.detect_skew_q(1, 3).unwrap(), Some(Scalar::from(-1)));
    let qpm = instances::quantum_plane(q(), p()).unwrap();
    assert_eq!(qpm.detect_skew_q(0, 3).unwrap_err(), Error::NotDiagonal(0));
}

#[test]
fn orthogonality_witnesses() {
    let qpm = instances::quantum_plane(q(), p()).unwrap();
    let w = OrthogonalityWitness {
        pairs: vec![
            vec![(Element::one(), qp(Scalar::one(), 1, 0))],
            vec![(Element::one(), qp(Scalar::one(), 0, 1))],
        ],
    };
    assert!(qpm.check_orthogonality(&w).passed());

    let la = instances::jackson(q()).unwrap();
    let w = OrthogonalityWitness {
        pairs: vec![vec![(
            Element::one(),
            Element::monomial(LaurentMonomial(1)),
        )]],
    };
    assert!(la.check_orthogonality(&w).passed());

    let tau = Scalar::tau();
    let sc = instances::supercircle(tau.clone()).unwrap();
    let w = OrthogonalityWitness {
        pairs: vec![
            vec![(
                Element::term(tau.inv().unwrap(), SuperMonomial::even(-1)),
                Element::monomial(SuperMonomial::even(1)),
            )],
            vec![(Element::one(), Element::monomial(SuperMonomial::odd(0)))],
        ],
    };
    assert!(sc.check_orthogonality(&w).passed());

    let wrong = OrthogonalityWitness {
        pairs: vec![
            vec![(Element::one(), Element::monomial(SuperMonomial::even(1)))],
            vec![(Element::one(), Element::monomial(SuperMonomial::odd(0)))],
        ],
    };
    assert!(!sc.check_orthogonality(&wrong).passed());
}

fn leibniz_and_bimodule<A: Algebra>(
    md: &MultiDerivation<A>,
    mut sample: impl FnMut(&mut rand::rngs::StdRng) -> Element<A::Monomial>,
    seed: u64,
    cases: usize,
) {
    let mut r = common::rng(seed);
    let alg = md.algebra();
    for _ in 0..cases {
        let (a, b, c) = (sample(&mut r), sample(&mut r), sample(&mut r));
        let ab = alg.mul(&a, &b);
        let lhs = md.differential0(&ab);
        let rhs = &md.act_right(&md.differential0(&a), &b).unwrap()
            + &md.act_left(&a, &md.differential0(&b)).unwrap();
        assert_eq!(lhs, rhs, "d({a} * {b})");

        let w = md.differential0(&c);
        let w = &w + &md.act_left(&a, &w).unwrap();
        assert_eq!(
            md.act_right(&md.act_left(&a, &w).unwrap(), &b).unwrap(),
            md.act_left(&a, &md.act_right(&w, &b).unwrap()).unwrap()
        );
        assert_eq!(
            md.act_right(&md.act_right(&w, &a).unwrap(), &b).unwrap(),
            md.act_right(&w, &ab).unwrap()
        );
        let rn = md.right_normal_form(&w).unwrap();
        assert_eq!(md.from_right_normal_form(&rn).unwrap(), w);
    }
}

#[test]
fn leibniz_rule_and_bimodule_laws_on_random_elements() {
    let qpm = instances::quantum_plane(q(), p()).unwrap();
    leibniz_and_bimodule(&qpm, |r| common::qp_element(r, 3, 3), 11, 200);
    let la = instances::jackson(q()).unwrap();
    leibniz_and_bimodule(&la, |r| common::laurent_element(r, 3, 5), 12, 200);
    let sc = instances::supercircle(Scalar::tau()).unwrap();
    leibniz_and_bimodule(&sc, |r| common::super_element(r, 3, 4), 13, 200);
}

#[test]
fn exterior_derivative_squares_to_zero() {
    let md = instances::quantum_plane(q(), p()).unwrap();
    for m in md.algebra().monomials(6) {
        let d2 = md
            .differential1(&md.differential0(&Element::monomial(m)))
            .unwrap();
        assert!(d2.is_zero(), "d(d({m})) = {d2}");
    }
}

#[test]
fn two_form_products_are_compatible_with_the_bimodule() {
    let md = instances::quantum_plane(q(), p()).unwrap();
    let mut r = common::rng(21);
    for _ in 0..60 {
        let a = common::qp_element(&mut r, 2, 3);
        let b = common::qp_element(&mut r, 2, 3);
        let w = md.differential0(&common::qp_element(&mut r, 2, 3));
        let eta = md
            .one_form(vec![
                common::qp_element(&mut r, 2, 2),
                common::qp_element(&mut r, 2, 2),
            ])
            .unwrap();
        // (ω a) η = ω (a η)
        assert_eq!(
            md.wedge(&md.act_right(&w, &a).unwrap(), &eta).unwrap(),
            md.wedge(&w, &md.act_left(&a, &eta).unwrap()).unwrap()
        );
        // ω (η b) = (ω η) b
        assert_eq!(
            md.wedge(&w, &md.act_right(&eta, &b).unwrap()).unwrap(),
            md.act_right2(&md.wedge(&w, &eta).unwrap(), &b).unwrap()
        );
        // graded Leibniz rule in degree one
        let da = md.differential0(&a);
        assert_eq!(
            md.differential1(&md.act_left(&a, &eta).unwrap()).unwrap(),
            TwoForm {
                coeff: &md.wedge(&da, &eta).unwrap().coeff
                    + &md
                        .act_left2(&a, &md.differential1(&eta).unwrap())
                        .unwrap()
                        .coeff
            }
        );
        assert_eq!(
            md.differential1(&md.act_right(&eta, &a).unwrap()).unwrap(),
            TwoForm {
                coeff: &md
                    .act_right2(&md.differential1(&eta).unwrap(), &a)
                    .unwrap()
                    .coeff
                    - &md.wedge(&eta, &da).unwrap().coeff
            }
        );
        let c = md.volume_left_to_right(&a).unwrap();
        assert_eq!(md.volume_right_action(&c).unwrap(), a);
    }
}

#[test]
fn volume_form_commutation_agrees_with_the_wedge() {
    let md = instances::quantum_plane(q(), p()).unwrap();
    let dx = md.basis_form(0).unwrap();
    let dy = md.basis_form(1).unwrap();
    for m in md.algebra().monomials(5) {
        let a = Element::monomial(m);
        let via_wedge = md.wedge(&dx, &md.act_right(&dy, &a).unwrap()).unwrap();
        assert_eq!(via_wedge.coeff, md.volume_right_action(&a).unwrap());
    }
}

#[test]
fn jackson_calculus_is_inner() {
    for qs in [q(), Scalar::ratio(2, 3), Scalar::from(-3)] {
        let md = instances::jackson(qs.clone()).unwrap();
        let s = InnerStructure::jackson(&qs).unwrap();
        let probe: Vec<LaurentMonomial> = (-6..=6).map(LaurentMonomial).collect();
        let report = md.inner_check(&s, &probe).unwrap();
        assert!(report.passed(), "{:?}", report.commutator.failures);
        assert_eq!(report.commutator.checked, 13);
    }
    assert_eq!(
        InnerStructure::jackson(&Scalar::one()).unwrap_err(),
        Error::NotInner
    );
}

#[test]
fn right_normal_form_of_a_one_form() {
    let md = instances::quantum_plane(q(), p()).unwrap();
    // y dx = dx (q^-1 y) + dy (-(p-1) p^-1 x)
    let w = OneForm {
        coeffs: vec![qp(Scalar::one(), 0, 1), Element::zero()],
    };
    let rn = md.right_normal_form(&w).unwrap();
    let qi = q().inv().unwrap();
    assert_eq!(rn[0], qp(qi.clone(), 0, 1));
    let c = -&(&(&p() - &Scalar::one()) / &p());
    assert_eq!(rn[1], qp(c, 1, 0));
}
