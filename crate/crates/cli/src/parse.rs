//! Expressions over one of the algebra instances: elements, one-forms and
//! (on the quantum plane) two-forms.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' ('-'? INT | '(' '-'? INT ')'))?
//! atom  := INT | NAME | '(' expr ')'
//! ```

use std::fmt;

use ncforms_core::algebras::{
    Algebra, Element, Laurent, LaurentMonomial, QpMonomial, QuantumPlane, SuperMonomial,
    Supercircle,
};
use ncforms_core::forms::{OneForm, TwoForm};
use ncforms_core::instances::Params;
use ncforms_core::multideriv::MultiDerivation;
use ncforms_core::scalars::{Param, Scalar};
use num_bigint::BigInt;

/// How an algebra instance spells its generators and basis forms.
pub trait Syntax: Algebra {
    fn generator(&self, name: &str) -> Option<Element<Self::Monomial>>;
}

impl Syntax for QuantumPlane {
    fn generator(&self, name: &str) -> Option<Element<QpMonomial>> {
        match name {
            "x" => Some(Element::monomial(QpMonomial::new(1, 0))),
            "y" => Some(Element::monomial(QpMonomial::new(0, 1))),
            _ => None,
        }
    }
}

impl Syntax for Laurent {
    fn generator(&self, name: &str) -> Option<Element<LaurentMonomial>> {
        (name == "x").then(|| Element::monomial(LaurentMonomial(1)))
    }
}

impl Syntax for Supercircle {
    fn generator(&self, name: &str) -> Option<Element<SuperMonomial>> {
        match name {
            "u" => Some(Element::monomial(SuperMonomial::even(1))),
            "th" => Some(Element::monomial(SuperMonomial::odd(0))),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Syntax {
        offset: usize,
        message: String,
    },
    Token {
        token: String,
        algebra: &'static str,
    },
    Domain(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { offset, message } => {
                write!(f, "syntax error at byte {offset}: {message}")
            }
            ParseError::Token { token, algebra } => {
                write!(f, "token '{token}' not in algebra '{algebra}'")
            }
            ParseError::Domain(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for ParseError {}

impl From<ncforms_core::Error> for ParseError {
    fn from(e: ncforms_core::Error) -> Self {
        ParseError::Domain(e.to_string())
    }
}

/// A parsed value: an element or a form in left normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value<M: ncforms_core::algebras::Monomial> {
    Element(Element<M>),
    OneForm(OneForm<M>),
    TwoForm(TwoForm<M>),
}

impl<M: ncforms_core::algebras::Monomial> Value<M> {
    pub fn degree(&self) -> usize {
        match self {
            Value::Element(_) => 0,
            Value::OneForm(_) => 1,
            Value::TwoForm(_) => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Sym(char),
}

fn canonical_name(s: &str) -> &str {
    match s {
        "ϑ" => "th",
        "dϑ" => "dth",
        "τ" => "tau",
        other => other,
    }
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut iter = input.char_indices().peekable();
    while let Some(&(i, c)) = iter.peek() {
        if c.is_whitespace() {
            iter.next();
        } else if c.is_ascii_digit() {
            let mut end = i;
            while let Some(&(j, d)) = iter.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = j + d.len_utf8();
                iter.next();
            }
            let n: BigInt = input[i..end].parse().expect("digits");
            out.push((i, Tok::Int(n)));
        } else if c.is_alphabetic() {
            let mut end = i;
            while let Some(&(j, d)) = iter.peek() {
                if !(d.is_alphanumeric() || d == '_') {
                    break;
                }
                end = j + d.len_utf8();
                iter.next();
            }
            out.push((i, Tok::Name(canonical_name(&input[i..end]).to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Sym(c)));
            iter.next();
        } else {
            return Err(ParseError::Syntax {
                offset: i,
                message: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a, A: Syntax> {
    md: &'a MultiDerivation<A>,
    params: &'a Params,
    tokens: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

type Val<A> = Value<<A as Algebra>::Monomial>;

impl<'a, A: Syntax> Parser<'a, A> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Val<A>, ParseError> {
        let mut acc = self.term()?;
        loop {
            let at = self.offset();
            if self.eat('+') {
                let rhs = self.term()?;
                acc = add(acc, rhs, false, at)?;
            } else if self.eat('-') {
                let rhs = self.term()?;
                acc = add(acc, rhs, true, at)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Val<A>, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                let rhs = self.unary()?;
                acc = self.mul(acc, rhs)?;
            } else if self.eat('/') {
                let at = self.offset();
                let rhs = self.unary()?;
                let c = match rhs {
                    Value::Element(e) => e.as_constant(),
                    _ => None,
                };
                let c = match c {
                    Some(c) if !c.is_zero() => c,
                    Some(_) => return Err(ParseError::Domain("division by zero".into())),
                    None => {
                        return Err(ParseError::Syntax {
                            offset: at,
                            message: "can only divide by a scalar".into(),
                        })
                    }
                };
                acc = scale(acc, &c.inv()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Val<A>, ParseError> {
        if self.eat('-') {
            let v = self.unary()?;
            return Ok(scale(v, &Scalar::from(-1)));
        }
        self.power()
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let paren = self.eat('(');
        let negative = self.eat('-');
        let n = match self.peek() {
            Some(Tok::Int(n)) => n.clone(),
            _ => return self.error("expected an integer exponent"),
        };
        let n: i64 = match i64::try_from(n) {
            Ok(n) => n,
            Err(_) => return self.error("exponent too large"),
        };
        self.pos += 1;
        if paren && !self.eat(')') {
            return self.error("expected ')'");
        }
        Ok(if negative { -n } else { n })
    }

    fn power(&mut self) -> Result<Val<A>, ParseError> {
        let at = self.offset();
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = self.exponent()?;
        match base {
            Value::Element(b) => {
                if let Some(c) = b.as_constant() {
                    return Ok(Value::Element(Element::constant(c.pow(e)?)));
                }
                Ok(Value::Element(self.md.algebra().pow(&b, e)?))
            }
            other if e == 1 => Ok(other),
            _ => Err(ParseError::Syntax {
                offset: at,
                message: "powers of forms are not supported".into(),
            }),
        }
    }

    fn atom(&mut self) -> Result<Val<A>, ParseError> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Value::Element(Element::constant(Scalar::rational(
                    n.into(),
                ))))
            }
            Some(Tok::Name(name)) => {
                self.pos += 1;
                self.name(&name, at)
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return self.error("expected ')'");
                }
                Ok(v)
            }
            Some(Tok::Sym(c)) => self.error(format!("unexpected '{c}'")),
            None => self.error("unexpected end of input"),
        }
    }

    fn name(&self, name: &str, at: usize) -> Result<Val<A>, ParseError> {
        if let Some(param) = Param::from_name(name) {
            return Ok(Value::Element(Element::constant(
                self.params.get(param).clone(),
            )));
        }
        if let Some(g) = self.md.algebra().generator(name) {
            return Ok(Value::Element(g));
        }
        if let Some(i) = self.md.labels().iter().position(|l| l == name) {
            return Ok(Value::OneForm(self.md.basis_form(i)?));
        }
        if is_known_token(name) {
            return Err(ParseError::Token {
                token: name.to_string(),
                algebra: self.md.algebra().name(),
            });
        }
        Err(ParseError::Syntax {
            offset: at,
            message: format!("unknown name '{name}'"),
        })
    }

    fn mul(&self, a: Val<A>, b: Val<A>) -> Result<Val<A>, ParseError> {
        let md = self.md;
        Ok(match (a, b) {
            (Value::Element(a), Value::Element(b)) => Value::Element(md.algebra().mul(&a, &b)),
            (Value::Element(a), Value::OneForm(w)) => Value::OneForm(md.act_left(&a, &w)?),
            (Value::OneForm(w), Value::Element(b)) => Value::OneForm(md.act_right(&w, &b)?),
            (Value::OneForm(w), Value::OneForm(e)) => Value::TwoForm(md.wedge(&w, &e)?),
            (Value::Element(a), Value::TwoForm(t)) => Value::TwoForm(md.act_left2(&a, &t)?),
            (Value::TwoForm(t), Value::Element(b)) => Value::TwoForm(md.act_right2(&t, &b)?),
            _ => {
                return Err(ParseError::Domain(
                    "forms of degree above 2 are not supported".into(),
                ))
            }
        })
    }
}

fn is_known_token(name: &str) -> bool {
    matches!(name, "x" | "y" | "u" | "th" | "dx" | "dy" | "dth")
}

fn scale<M: ncforms_core::algebras::Monomial>(v: Value<M>, c: &Scalar) -> Value<M> {
    match v {
        Value::Element(e) => Value::Element(e.scale(c)),
        Value::OneForm(w) => Value::OneForm(w.scale(c)),
        Value::TwoForm(t) => Value::TwoForm(TwoForm {
            coeff: t.coeff.scale(c),
        }),
    }
}

fn add<M: ncforms_core::algebras::Monomial>(
    a: Value<M>,
    b: Value<M>,
    subtract: bool,
    at: usize,
) -> Result<Value<M>, ParseError> {
    let b = if subtract {
        scale(b, &Scalar::from(-1))
    } else {
        b
    };
    match (a, b) {
        (Value::Element(a), Value::Element(b)) => Ok(Value::Element(&a + &b)),
        (Value::OneForm(a), Value::OneForm(b)) => Ok(Value::OneForm(&a + &b)),
        (Value::TwoForm(a), Value::TwoForm(b)) => Ok(Value::TwoForm(TwoForm {
            coeff: &a.coeff + &b.coeff,
        })),
        // 0 is allowed as a summand of any degree
        (Value::Element(z), other) | (other, Value::Element(z)) if z.is_zero() => Ok(other),
        _ => Err(ParseError::Syntax {
            offset: at,
            message: "cannot add forms of different degree".into(),
        }),
    }
}

/// Parses `input` in the calculus `md`, with parameters taken from `params`.
pub fn parse<A: Syntax>(
    input: &str,
    md: &MultiDerivation<A>,
    params: &Params,
) -> Result<Value<A::Monomial>, ParseError> {
    let tokens = tokenize(input)?;
    let mut p = Parser {
        md,
        params,
        tokens,
        pos: 0,
        end: input.len(),
    };
    let v = p.expr()?;
    if p.pos < p.tokens.len() {
        return p.error("unexpected trailing input");
    }
    Ok(v)
}

/// Parses an expression that must be an algebra element.
pub fn parse_element<A: Syntax>(
    input: &str,
    md: &MultiDerivation<A>,
    params: &Params,
) -> Result<Element<A::Monomial>, ParseError> {
    match parse(input, md, params)? {
        Value::Element(e) => Ok(e),
        other => Err(ParseError::Domain(format!(
            "expected an algebra element, got a {}-form",
            other.degree()
        ))),
    }
}

/// Canonical printed form of a value.
pub fn print<A: Algebra>(v: &Value<A::Monomial>, md: &MultiDerivation<A>) -> String {
    match v {
        Value::Element(e) => e.to_string(),
        Value::OneForm(w) => w.display_with(md.labels()),
        Value::TwoForm(t) => t.display_with(&md.labels().join("*")),
    }
}
