use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Neg, Sub};

use crate::error::Result;
use crate::scalars::{Assignment, Scalar};

/// A normal-form basis monomial of one of the algebra instances.
pub trait Monomial: Clone + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn one() -> Self;

    /// Size used for exhaustive sampling bounds.
    fn degree(&self) -> u32;

    /// Order used when printing: `Less` means printed first.
    fn display_cmp(&self, other: &Self) -> Ordering;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// A finite linear combination of monomials with nonzero scalar coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element<M: Monomial> {
    terms: BTreeMap<M, Scalar>,
}

impl<M: Monomial> Element<M> {
    pub fn zero() -> Self {
        Element {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(M::one())
    }

    pub fn monomial(m: M) -> Self {
        Self::term(Scalar::one(), m)
    }

    pub fn term(c: Scalar, m: M) -> Self {
        let mut e = Self::zero();
        e.add_term(c, m);
        e
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(c, M::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Scalar, M)>) -> Self {
        let mut e = Self::zero();
        for (c, m) in terms {
            e.add_term(c, m);
        }
        e
    }

    pub fn add_term(&mut self, c: Scalar, m: M) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&M, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &M) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The scalar `c` if the element is `c * 1`.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&M::one()).cloned(),
            _ => None,
        }
    }

    /// The single term `(c, m)` if the element has exactly one.
    pub fn as_term(&self) -> Option<(&Scalar, &M)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, m))
        } else {
            None
        }
    }

    /// Largest monomial degree present, `None` for zero.
    pub fn degree_bound(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Element {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn map_monomials(&self, mut f: impl FnMut(&M) -> Self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out += &f(m).scale(c);
        }
        out
    }

    pub fn substitute(&self, assignment: &Assignment) -> Result<Self> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(c.substitute(assignment)?, m.clone());
        }
        Ok(out)
    }

    /// Terms in the canonical print order.
    pub fn display_terms(&self) -> Vec<(&M, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.display_cmp(b.0));
        v
    }
}

impl<M: Monomial> Default for Element<M> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<M: Monomial> std::ops::AddAssign<&Element<M>> for Element<M> {
    fn add_assign(&mut self, rhs: &Element<M>) {
        for (m, c) in &rhs.terms {
            self.add_term(c.clone(), m.clone());
        }
    }
}

impl<M: Monomial> std::ops::SubAssign<&Element<M>> for Element<M> {
    fn sub_assign(&mut self, rhs: &Element<M>) {
        for (m, c) in &rhs.terms {
            self.add_term(-c, m.clone());
        }
    }
}

impl<M: Monomial> Add for &Element<M> {
    type Output = Element<M>;
    fn add(self, rhs: &Element<M>) -> Element<M> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<M: Monomial> Sub for &Element<M> {
    type Output = Element<M>;
    fn sub(self, rhs: &Element<M>) -> Element<M> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<M: Monomial> Add for Element<M> {
    type Output = Element<M>;
    fn add(mut self, rhs: Element<M>) -> Element<M> {
        self += &rhs;
        self
    }
}

impl<M: Monomial> Sub for Element<M> {
    type Output = Element<M>;
    fn sub(mut self, rhs: Element<M>) -> Element<M> {
        self -= &rhs;
        self
    }
}

impl<M: Monomial> Neg for &Element<M> {
    type Output = Element<M>;
    fn neg(self) -> Element<M> {
        Element {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl<M: Monomial> Neg for Element<M> {
    type Output = Element<M>;
    fn neg(self) -> Element<M> {
        -&self
    }
}

/// One printed summand: sign and unsigned body.
pub(crate) struct PrintedTerm {
    pub negative: bool,
    pub body: String,
}

/// Formats `c * m * suffix`, where `suffix` is a basis-form label or empty.
pub(crate) fn print_term<M: Monomial>(c: &Scalar, m: &M, suffix: &str) -> PrintedTerm {
    let mut factors = Vec::new();
    let negative;
    if c.as_monomial().is_some() {
        negative = c.is_negative();
        let mag = if negative { -c } else { c.clone() };
        if !mag.is_one() {
            factors.push(mag.to_string());
        }
    } else {
        negative = false;
        factors.push(format!("({c})"));
    }
    if !m.is_one() {
        factors.push(m.to_string());
    }
    if !suffix.is_empty() {
        factors.push(suffix.to_string());
    }
    if factors.is_empty() {
        factors.push("1".into());
    }
    PrintedTerm {
        negative,
        body: factors.join("*"),
    }
}

pub(crate) fn join_terms(terms: impl IntoIterator<Item = PrintedTerm>) -> String {
    let mut out = String::new();
    for (i, t) in terms.into_iter().enumerate() {
        match (i, t.negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&t.body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<M: Monomial> Element<M> {
    /// Printed form of `self * label`, parenthesizing sums.
    pub(crate) fn printed_with_suffix(&self, suffix: &str) -> Option<PrintedTerm> {
        if self.is_zero() {
            return None;
        }
        if let Some((c, m)) = self.as_term() {
            return Some(print_term(c, m, suffix));
        }
        Some(PrintedTerm {
            negative: false,
            body: format!("({self})*{suffix}"),
        })
    }
}

impl<M: Monomial> fmt::Display for Element<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_constant() {
            return write!(f, "{c}");
        }
        let terms = self
            .display_terms()
            .into_iter()
            .map(|(m, c)| print_term(c, m, ""));
        f.write_str(&join_terms(terms))
    }
}

impl<M: Monomial> fmt::Debug for Element<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}
