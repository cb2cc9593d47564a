#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

use ncforms_core::algebras::{Element, LaurentMonomial, QpMonomial, SuperMonomial};
use ncforms_core::scalars::Scalar;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn ncforms(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_ncforms"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(path).expect("golden file exists")
}

fn small_int(r: &mut StdRng) -> i64 {
    let n = r.gen_range(1..=9);
    if r.gen_bool(0.5) {
        -n
    } else {
        n
    }
}

/// Sum of up to three terms `c q^a p^b tau^c`, never zero.
fn poly(r: &mut StdRng) -> Scalar {
    let mut acc = Scalar::zero();
    while acc.is_zero() {
        for _ in 0..r.gen_range(1..=3) {
            let mut t = Scalar::from(small_int(r));
            for base in [Scalar::q(), Scalar::p(), Scalar::tau()] {
                t = &t * &base.pow(r.gen_range(0..=2)).unwrap();
            }
            acc = &acc + &t;
        }
    }
    acc
}

/// A random nonzero scalar: rationals, signed monomials and quotients.
pub fn scalar(r: &mut StdRng) -> Scalar {
    match r.gen_range(0..4) {
        0 => Scalar::ratio(small_int(r), r.gen_range(1..=7)),
        1 => {
            let e = [
                r.gen_range(-2..=2),
                r.gen_range(-2..=2),
                r.gen_range(-2..=2),
            ];
            let mut t = Scalar::from(small_int(r));
            for (base, e) in [Scalar::q(), Scalar::p(), Scalar::tau()].iter().zip(e) {
                t = &t * &base.pow(e).unwrap();
            }
            t
        }
        2 => poly(r),
        _ => &poly(r) / &poly(r),
    }
}

/// Coefficient for stress tests: mostly small rationals, sometimes symbolic.
pub fn coefficient(r: &mut StdRng) -> Scalar {
    if r.gen_bool(0.8) {
        Scalar::ratio(small_int(r), r.gen_range(1..=4))
    } else {
        scalar(r)
    }
}

pub fn qp_element(
    r: &mut StdRng,
    terms: usize,
    max_deg: u32,
    c: fn(&mut StdRng) -> Scalar,
) -> Element<QpMonomial> {
    Element::from_terms((0..r.gen_range(0..=terms)).map(|_| {
        let x = r.gen_range(0..=max_deg);
        let y = r.gen_range(0..=max_deg - x);
        (c(r), QpMonomial::new(x, y))
    }))
}

pub fn laurent_element(
    r: &mut StdRng,
    terms: usize,
    bound: i32,
    c: fn(&mut StdRng) -> Scalar,
) -> Element<LaurentMonomial> {
    Element::from_terms(
        (0..r.gen_range(0..=terms)).map(|_| (c(r), LaurentMonomial(r.gen_range(-bound..=bound)))),
    )
}

pub fn super_element(
    r: &mut StdRng,
    terms: usize,
    bound: i32,
    c: fn(&mut StdRng) -> Scalar,
) -> Element<SuperMonomial> {
    Element::from_terms((0..r.gen_range(0..=terms)).map(|_| {
        let k = r.gen_range(-bound..=bound);
        let m = if r.gen_bool(0.5) {
            SuperMonomial::odd(k)
        } else {
            SuperMonomial::even(k)
        };
        (c(r), m)
    }))
}
