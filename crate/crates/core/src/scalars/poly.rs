//! Sparse multivariate polynomials over ℚ in the three field parameters.
//!
//! Exponent vectors are ordered lexicographically with `q > p > tau`, which is
//! the monomial order used for canonical forms. The leading term of a
//! polynomial is therefore the last entry of its term map.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Param;
use crate::error::{Error, Result};

pub const NVARS: usize = 3;

pub type Exponent = [u32; NVARS];

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Exponent, BigRational>,
}

fn divides(a: &Exponent, b: &Exponent) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn total_degree(e: &Exponent) -> u32 {
    e.iter().sum()
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term([0; NVARS], c)
    }

    pub fn term(e: Exponent, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Poly { terms }
    }

    pub fn var(param: Param) -> Self {
        let mut e = [0; NVARS];
        e[param.index()] = 1;
        Self::term(e, BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&[0; NVARS]).cloned(),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Exponent, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn mul_term(&self, e: &Exponent, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(f, v)| {
                let mut g = *f;
                for k in 0..NVARS {
                    g[k] += e[k];
                }
                (g, v * c)
            })
            .collect();
        Poly { terms }
    }

    /// Makes the leading coefficient 1; the zero polynomial is returned as is.
    pub fn monic(&self) -> Poly {
        match self.leading_term() {
            None => Poly::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn uses(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e[var] > 0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Coefficients of `self` as a univariate polynomial in `var`, indexed by degree.
    fn coefficients_in(&self, var: usize) -> Vec<Poly> {
        let mut out = vec![Poly::zero(); self.degree_in(var) as usize + 1];
        for (e, c) in &self.terms {
            let mut f = *e;
            f[var] = 0;
            out[e[var] as usize].terms.insert(f, c.clone());
        }
        out
    }

    fn leading_coefficient_in(&self, var: usize) -> Poly {
        let d = self.degree_in(var);
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            if e[var] == d {
                let mut f = *e;
                f[var] = 0;
                out.terms.insert(f, c.clone());
            }
        }
        out
    }

    fn add_assign_term(&mut self, e: Exponent, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Exact division. Returns `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        let (de, dc) = divisor.leading_term()?;
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let (de, dc) = (*de, dc.clone());
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((re, rc)) = rem.leading_term() {
            if !divides(&de, re) {
                return None;
            }
            let mut e = *re;
            for k in 0..NVARS {
                e[k] -= de[k];
            }
            let c = rc / &dc;
            rem = &rem - &divisor.mul_term(&e, &c);
            quot.add_assign_term(e, c);
        }
        Some(quot)
    }

    fn min_exponent(&self, other: &Exponent) -> Exponent {
        let mut m = *other;
        for e in self.terms.keys() {
            for k in 0..NVARS {
                m[k] = m[k].min(e[k]);
            }
        }
        m
    }

    /// Greatest common divisor, normalized to leading coefficient 1.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.as_constant().is_some() || b.as_constant().is_some() {
            return Poly::one();
        }
        if a.len() == 1 {
            let (e, _) = a.leading_term().unwrap();
            return Poly::term(b.min_exponent(e), BigRational::one());
        }
        if b.len() == 1 {
            let (e, _) = b.leading_term().unwrap();
            return Poly::term(a.min_exponent(e), BigRational::one());
        }
        let (ma, mb) = (a.monomial_content(), b.monomial_content());
        if ma != [0; NVARS] || mb != [0; NVARS] {
            let mut m = ma;
            for k in 0..NVARS {
                m[k] = m[k].min(mb[k]);
            }
            let rest = Poly::gcd(&a.div_monomial(&ma), &b.div_monomial(&mb));
            return rest.mul_term(&m, &BigRational::one());
        }
        for v in 0..NVARS {
            match (a.uses(v), b.uses(v)) {
                (true, false) => return Poly::gcd(&a.content_in(v), b),
                (false, true) => return Poly::gcd(a, &b.content_in(v)),
                _ => {}
            }
        }
        let shared: Vec<usize> = (0..NVARS).filter(|&v| a.uses(v)).collect();
        if shared.iter().all(|&v| coprime_in(a, b, v)) {
            return Poly::one();
        }
        let v = *shared
            .iter()
            .min_by_key(|&&v| a.degree_in(v) + b.degree_in(v))
            .expect("nonconstant");
        let ca = a.content_in(v);
        let cb = b.content_in(v);
        let content = Poly::gcd(&ca, &cb);
        let pa = a.exact_div(&ca).expect("content divides");
        let pb = b.exact_div(&cb).expect("content divides");
        let prim = interpolated_gcd(&pa, &pb, v).unwrap_or_else(|| primitive_gcd(pa, pb, v));
        (&content * &prim).monic()
    }

    /// Largest monomial dividing every term.
    fn monomial_content(&self) -> Exponent {
        let mut m = match self.terms.keys().next() {
            Some(e) => *e,
            None => return [0; NVARS],
        };
        for e in self.terms.keys() {
            for k in 0..NVARS {
                m[k] = m[k].min(e[k]);
            }
        }
        m
    }

    fn div_monomial(&self, m: &Exponent) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let mut f = *e;
            for k in 0..NVARS {
                f[k] -= m[k];
            }
            out.terms.insert(f, c.clone());
        }
        out
    }

    /// Dense coefficients in `var` after fixing the other variables at `point`.
    fn specialize(&self, var: usize, point: &[BigRational; NVARS]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.degree_in(var) as usize + 1];
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for k in (0..NVARS).filter(|&k| k != var) {
                t *= num_traits::pow(point[k].clone(), e[k] as usize);
            }
            out[e[var] as usize] += t;
        }
        out
    }

    /// gcd of the coefficients of `self` viewed as a polynomial in `var`.
    fn content_in(&self, var: usize) -> Poly {
        let mut g = Poly::zero();
        for c in self.coefficients_in(var) {
            if c.is_zero() {
                continue;
            }
            g = Poly::gcd(&g, &c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn primitive_part_in(&self, var: usize) -> Poly {
        let c = self.content_in(var);
        self.exact_div(&c).expect("content divides").monic()
    }

    fn mul_var_pow(&self, var: usize, k: u32) -> Poly {
        let mut e = [0; NVARS];
        e[var] = k;
        self.mul_term(&e, &BigRational::one())
    }

    /// Pseudo-remainder of `self` by `b` with respect to `var`.
    fn pseudo_rem(&self, b: &Poly, var: usize) -> Poly {
        let db = b.degree_in(var);
        let lcb = b.leading_coefficient_in(var);
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(var) >= db {
            let dr = r.degree_in(var);
            let lcr = r.leading_coefficient_in(var);
            r = &(&lcb * &r) - &(&lcr.mul_var_pow(var, dr - db) * b);
        }
        r
    }

    pub fn eval(&self, values: &[Option<BigRational>; NVARS]) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (k, &d) in e.iter().enumerate() {
                if d == 0 {
                    continue;
                }
                let v = values[k]
                    .as_ref()
                    .ok_or(Error::UnassignedParameter(Param::ALL[k].name()))?;
                t *= num_traits::pow(v.clone(), d as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Replaces the assigned variables by their values, keeping the others symbolic.
    pub fn substitute(&self, values: &[Option<BigRational>; NVARS]) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            let mut f = *e;
            for k in 0..NVARS {
                if let Some(v) = &values[k] {
                    t *= num_traits::pow(v.clone(), e[k] as usize);
                    f[k] = 0;
                }
            }
            out.add_assign_term(f, t);
        }
        out
    }

    /// Terms in print order: descending total degree, then descending lex.
    pub(crate) fn print_order(&self) -> Vec<(&Exponent, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(
            |(a, _), (b, _)| match total_degree(b).cmp(&total_degree(a)) {
                Ordering::Equal => b.cmp(a),
                o => o,
            },
        );
        v
    }
}

const SPECIALIZATION_POINTS: [[i64; NVARS]; 4] =
    [[3, 5, 7], [-2, 11, 13], [17, -3, 19], [23, 29, -5]];

/// True when `a` and `b` certainly have no common factor involving `var`:
/// an image under specialization of the other variables that keeps both
/// leading coefficients is coprime.
fn coprime_in(a: &Poly, b: &Poly, var: usize) -> bool {
    let (la, lb) = (a.leading_coefficient_in(var), b.leading_coefficient_in(var));
    for pt in &SPECIALIZATION_POINTS {
        let point = pt.map(|v| BigRational::from_integer(BigInt::from(v)));
        let values = point.clone().map(Some);
        let nonzero = |lc: &Poly| lc.eval(&values).map(|v| !v.is_zero()).unwrap_or(false);
        if nonzero(&la) && nonzero(&lb) {
            return univariate_gcd_degree(a.specialize(var, &point), b.specialize(var, &point))
                == 0;
        }
    }
    false
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn univariate_gcd_degree(f: Vec<BigRational>, g: Vec<BigRational>) -> usize {
    univariate_gcd(f, g).len().saturating_sub(1)
}

fn univariate_gcd(mut f: Vec<BigRational>, mut g: Vec<BigRational>) -> Vec<BigRational> {
    trim(&mut f);
    trim(&mut g);
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_empty() {
        let lead = g.last().expect("nonempty").clone();
        while f.len() >= g.len() {
            let shift = f.len() - g.len();
            let c = f.last().expect("nonempty") / &lead;
            for (i, gi) in g.iter().enumerate() {
                f[i + shift] -= &c * gi;
            }
            f.pop();
            trim(&mut f);
        }
        std::mem::swap(&mut f, &mut g);
    }
    f
}

fn from_univariate(coeffs: &[BigRational], var: usize) -> Poly {
    let mut out = Poly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        let mut e = [0; NVARS];
        e[var] = k as u32;
        out.add_assign_term(e, c.clone());
    }
    out
}

fn at(var: usize, value: i64) -> [Option<BigRational>; NVARS] {
    let mut values: [Option<BigRational>; NVARS] = Default::default();
    values[var] = Some(BigRational::from_integer(BigInt::from(value)));
    values
}

/// gcd of `a` and `b`, both primitive in `x`, by evaluating one of the other
/// variables at integer points, recursing, interpolating and verifying by
/// division. `None` if no verified candidate turns up.
fn interpolated_gcd(a: &Poly, b: &Poly, x: usize) -> Option<Poly> {
    let Some(y) = (0..NVARS).find(|&v| v != x && (a.uses(v) || b.uses(v))) else {
        let point = [
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
        ];
        let g = univariate_gcd(a.specialize(x, &point), b.specialize(x, &point));
        return Some(from_univariate(&g, x).monic());
    };
    let (la, lb) = (a.leading_coefficient_in(x), b.leading_coefficient_in(x));
    let gamma = Poly::gcd(&la, &lb);
    let bound = (gamma.degree_in(y) + a.degree_in(y).min(b.degree_in(y))) as usize;
    let mut images: Vec<(i64, Poly)> = Vec::new();
    let mut best = u32::MAX;
    for c in 1..=(4 * bound as i64 + 24) {
        let values = at(y, c);
        let gc = gamma.substitute(&values);
        if gc.is_zero() || la.substitute(&values).is_zero() || lb.substitute(&values).is_zero() {
            continue;
        }
        let g = Poly::gcd(&a.substitute(&values), &b.substitute(&values));
        let d = g.degree_in(x);
        if d == 0 {
            return Some(Poly::one());
        }
        if d > best {
            continue;
        }
        if d < best {
            best = d;
            images.clear();
        }
        let Some(g) = (&g * &gc).exact_div(&g.leading_coefficient_in(x)) else {
            continue;
        };
        images.push((c, g));
        if images.len() > bound {
            let candidate = interpolate(&images, y).primitive_part_in(x);
            if a.exact_div(&candidate).is_some() && b.exact_div(&candidate).is_some() {
                return Some(candidate);
            }
            images.clear();
            best = u32::MAX;
        }
    }
    None
}

/// The polynomial in `y` taking value `g_k` at `y = c_k`.
fn interpolate(images: &[(i64, Poly)], y: usize) -> Poly {
    let mut out = Poly::zero();
    let mut ye = [0; NVARS];
    ye[y] = 1;
    for (k, (ck, gk)) in images.iter().enumerate() {
        let mut basis = Poly::one();
        let mut denom = BigRational::one();
        for (j, (cj, _)) in images.iter().enumerate() {
            if j == k {
                continue;
            }
            let shift = Poly::constant(BigRational::from_integer(BigInt::from(-cj)));
            basis = &basis * &(&Poly::term(ye, BigRational::one()) + &shift);
            denom *= BigRational::from_integer(BigInt::from(ck - cj));
        }
        out = &out + &(&basis * gk).scale(&denom.recip());
    }
    out
}

fn primitive_gcd(a: Poly, b: Poly, var: usize) -> Poly {
    let (mut f, mut g) = if a.degree_in(var) >= b.degree_in(var) {
        (a, b)
    } else {
        (b, a)
    };
    loop {
        if g.is_zero() {
            return f.primitive_part_in(var);
        }
        if g.degree_in(var) == 0 {
            return Poly::one();
        }
        let r = f.pseudo_rem(&g, var);
        f = g;
        g = if r.is_zero() {
            r
        } else {
            r.primitive_part_in(var)
        };
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_assign_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_assign_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            for (f, d) in &rhs.terms {
                let mut g = *e;
                for k in 0..NVARS {
                    g[k] += f[k];
                }
                out.add_assign_term(g, c * d);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

pub(crate) fn write_rational(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Writes `|coeff| * q^a * p^b * tau^c` (signed exponents allowed) without the sign.
pub(crate) fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    magnitude: &BigRational,
    exps: &[i64; NVARS],
) -> fmt::Result {
    let mut parts = Vec::new();
    if !magnitude.is_one() || exps.iter().all(|&e| e == 0) {
        parts.push(if magnitude.is_integer() {
            magnitude.numer().to_string()
        } else {
            format!("{}/{}", magnitude.numer(), magnitude.denom())
        });
    }
    for (k, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(Param::ALL[k].name().to_string()),
            _ => parts.push(format!("{}^{}", Param::ALL[k].name(), e)),
        }
    }
    f.write_str(&parts.join("*"))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.print_order().into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let signed = e.map(|d| d as i64);
            write_monomial(f, &c.abs(), &signed)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Self {
        Poly::constant(BigRational::from_integer(BigInt::from(n)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Poly {
        Poly::var(Param::Q)
    }
    fn p() -> Poly {
        Poly::var(Param::P)
    }
    fn t() -> Poly {
        Poly::var(Param::Tau)
    }
    fn c(n: i64) -> Poly {
        Poly::from(n)
    }

    #[test]
    fn gcd_of_difference_of_squares() {
        let a = &(&q() * &q()) - &c(1);
        let b = &q() - &c(1);
        assert_eq!(Poly::gcd(&a, &b), b);
    }

    #[test]
    fn gcd_multivariate_common_factor() {
        // (q + p)(q - tau) and (q + p)(p + 2)
        let f = &q() + &p();
        let a = &f * &(&q() - &t());
        let b = &f * &(&p() + &c(2));
        assert_eq!(Poly::gcd(&a, &b), f);
        let g = &(&q() * &p()) - &c(1);
        let a2 = &(&g * &g) * &(&q() + &c(3));
        let b2 = &(&g * &(&q() - &c(3))) * &t();
        assert_eq!(Poly::gcd(&a2, &b2), g.monic());
    }

    #[test]
    fn gcd_coprime_is_one() {
        let a = &(&q() * &p()) + &c(1);
        let b = &q() + &p();
        assert!(Poly::gcd(&a, &b).is_one());
    }

    #[test]
    fn exact_division() {
        let a = &(&q() + &p()) * &(&q() - &p());
        assert_eq!(a.exact_div(&(&q() - &p())), Some(&q() + &p()));
        assert_eq!(a.exact_div(&(&q() + &c(1))), None);
    }

    #[test]
    fn display_orders_by_degree() {
        let a = &(&(&q() * &q()) - &p()) + &c(3);
        assert_eq!(a.to_string(), "q^2 - p + 3");
    }
}
