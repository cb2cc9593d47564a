#![allow(dead_code)]

use ncforms_core::algebras::{Element, LaurentMonomial, QpMonomial, SuperMonomial};
use ncforms_core::scalars::{Poly, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut StdRng) -> BigRational {
    let n: i64 = rng.gen_range(-5..=5);
    let d: i64 = rng.gen_range(1..=4);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn poly(rng: &mut StdRng, max_terms: usize, max_exp: u32) -> Poly {
    let mut p = Poly::zero();
    for _ in 0..rng.gen_range(0..=max_terms) {
        let e = [
            rng.gen_range(0..=max_exp),
            rng.gen_range(0..=max_exp),
            rng.gen_range(0..=max_exp.min(1)),
        ];
        p = &p + &Poly::term(e, small_rational(rng));
    }
    p
}

pub fn scalar(rng: &mut StdRng) -> Scalar {
    let num = poly(rng, 3, 2);
    let mut den = poly(rng, 2, 2);
    if den.is_zero() {
        den = Poly::one();
    }
    Scalar::normalize(num, den).expect("nonzero denominator")
}

/// Coefficients for random algebra elements: mostly rationals, sometimes
/// rational functions.
pub fn coefficient(rng: &mut StdRng) -> Scalar {
    if rng.gen_bool(0.7) {
        let mut c = small_rational(rng);
        if c == BigRational::from_integer(0.into()) {
            c = BigRational::from_integer(1.into());
        }
        Scalar::rational(c)
    } else {
        let s = scalar(rng);
        if s.is_zero() {
            Scalar::q()
        } else {
            s
        }
    }
}

pub fn qp_element(rng: &mut StdRng, max_terms: usize, max_deg: u32) -> Element<QpMonomial> {
    Element::from_terms((0..rng.gen_range(0..=max_terms)).map(|_| {
        let x = rng.gen_range(0..=max_deg);
        let y = rng.gen_range(0..=max_deg - x);
        (coefficient(rng), QpMonomial::new(x, y))
    }))
}

pub fn laurent_element(rng: &mut StdRng, max_terms: usize, bound: i32) -> Element<LaurentMonomial> {
    Element::from_terms((0..rng.gen_range(0..=max_terms)).map(|_| {
        (
            coefficient(rng),
            LaurentMonomial(rng.gen_range(-bound..=bound)),
        )
    }))
}

pub fn super_element(rng: &mut StdRng, max_terms: usize, bound: i32) -> Element<SuperMonomial> {
    Element::from_terms((0..rng.gen_range(0..=max_terms)).map(|_| {
        let k = rng.gen_range(-bound..=bound);
        let m = if rng.gen_bool(0.5) {
            SuperMonomial::odd(k)
        } else {
            SuperMonomial::even(k)
        };
        (coefficient(rng), m)
    }))
}
