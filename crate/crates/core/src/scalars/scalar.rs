use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::{write_monomial, write_rational, NVARS};
use super::{Param, Poly};
use crate::error::{Error, Result};

/// An element of ℚ(q, p, τ), stored as a reduced fraction of polynomials.
///
/// The numerator and denominator are coprime and the denominator's leading
/// coefficient (lex order `q > p > tau`) is 1, so structural equality is
/// field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

/// Exact rational values for some or all of the parameters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    values: [Option<BigRational>; NVARS],
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, param: Param, value: BigRational) -> Self {
        self.values[param.index()] = Some(value);
        self
    }

    pub fn set(&mut self, param: Param, value: BigRational) {
        self.values[param.index()] = Some(value);
    }

    pub fn get(&self, param: Param) -> Option<&BigRational> {
        self.values[param.index()].as_ref()
    }

    pub fn is_empty(&self) -> bool {
        self.values.iter().all(Option::is_none)
    }
}

impl Scalar {
    pub fn normalize(num: Poly, den: Poly) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Scalar::zero());
        }
        if let Some(c) = den.as_constant() {
            return Ok(Scalar {
                num: num.scale(&c.recip()),
                den: Poly::one(),
            });
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        let lc = den.leading_coefficient().recip();
        Ok(Scalar {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn zero() -> Scalar {
        Scalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Scalar {
        Scalar::from_poly(Poly::one())
    }

    pub fn from_poly(num: Poly) -> Scalar {
        Scalar {
            num,
            den: Poly::one(),
        }
    }

    pub fn param(param: Param) -> Scalar {
        Scalar::from_poly(Poly::var(param))
    }

    pub fn q() -> Scalar {
        Scalar::param(Param::Q)
    }

    pub fn p() -> Scalar {
        Scalar::param(Param::P)
    }

    pub fn tau() -> Scalar {
        Scalar::param(Param::Tau)
    }

    pub fn rational(r: BigRational) -> Scalar {
        Scalar::from_poly(Poly::constant(r))
    }

    pub fn ratio(n: i64, d: i64) -> Scalar {
        assert!(d != 0, "division by zero in scalar field");
        Scalar::rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    /// `Some((c, e))` when the value is `c * q^e0 * p^e1 * tau^e2`.
    pub fn as_monomial(&self) -> Option<(BigRational, [i64; NVARS])> {
        if self.num.len() != 1 || self.den.len() != 1 {
            return None;
        }
        let (ne, nc) = self.num.leading_term()?;
        let (de, dc) = self.den.leading_term()?;
        let mut e = [0i64; NVARS];
        for k in 0..NVARS {
            e[k] = ne[k] as i64 - de[k] as i64;
        }
        Some((nc / dc, e))
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lc = self.num.leading_coefficient().recip();
        Ok(Scalar {
            num: self.den.scale(&lc),
            den: self.num.scale(&lc),
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, exp: i64) -> Result<Scalar> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut n = exp.unsigned_abs();
        let mut acc = Scalar::one();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Exact value at a full assignment of the parameters that occur.
    pub fn evaluate(&self, assignment: &Assignment) -> Result<BigRational> {
        let n = self.num.eval(&assignment.values)?;
        let d = self.den.eval(&assignment.values)?;
        if d.is_zero() {
            return Err(Error::PoleAtAssignment);
        }
        Ok(n / d)
    }

    /// Partial substitution: assigned parameters become rational constants.
    pub fn substitute(&self, assignment: &Assignment) -> Result<Scalar> {
        if assignment.is_empty() {
            return Ok(self.clone());
        }
        let num = self.num.substitute(&assignment.values);
        let den = self.den.substitute(&assignment.values);
        if den.is_zero() {
            return Err(Error::PoleAtAssignment);
        }
        Scalar::normalize(num, den)
    }

    /// Sign used when printing a single-term value.
    pub fn is_negative(&self) -> bool {
        self.as_monomial().is_some_and(|(c, _)| c.is_negative())
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return Scalar::from_poly(&self.num + &rhs.num);
            }
            return Scalar::normalize(&self.num + &rhs.num, self.den.clone())
                .expect("nonzero denominator");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Scalar::normalize(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_poly(&self.num * &rhs.num);
        }
        // Cross-cancel before multiplying so the result stays reduced.
        let g1 = Poly::gcd(&self.num, &rhs.den);
        let g2 = Poly::gcd(&rhs.num, &self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g1).expect("gcd divides");
        let n2 = rhs.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lc = den.leading_coefficient().recip();
        Scalar {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs)
            .expect("division by zero in scalar field")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_poly(Poly::from(n))
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::rational(r)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

/// Prints in the expression syntax accepted by the command-line parser.
///
/// Single-term values use signed exponents (`-2*q^-1*p`); anything else is
/// printed as `num` or `(num)/(den)`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((c, e)) = self.as_monomial() {
            if c.is_negative() {
                f.write_str("-")?;
            }
            return write_monomial(f, &c.abs(), &e);
        }
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.len() == 1 {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        match self.den.as_constant() {
            Some(c) => {
                f.write_str("/")?;
                write_rational(f, &c)
            }
            None if self.den.len() == 1 && !self.den.to_string().contains('*') => {
                write!(f, "/{}", self.den)
            }
            None => write!(f, "/({})", self.den),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}
