//! The three built-in calculi: the two-parameter calculus on the quantum
//! plane, the Jackson q-derivative on Laurent polynomials, and the
//! `(∂_x, ∂_th)` calculus on the supercircle.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex};

use crate::algebras::{
    Algebra, Element, Laurent, LaurentMonomial, QpMonomial, QuantumPlane, SuperMonomial,
    Supercircle,
};
use crate::error::{Error, Result};
use crate::multideriv::{LinearOp, MultiDerivation};
use crate::scalars::{Assignment, Param, Scalar};

/// Values of the field parameters used to build an instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub q: Scalar,
    pub p: Scalar,
    pub tau: Scalar,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            q: Scalar::q(),
            p: Scalar::p(),
            tau: Scalar::tau(),
        }
    }
}

impl Params {
    /// Symbolic parameters, with the assigned ones replaced by their values.
    pub fn from_assignment(assignment: &Assignment) -> Self {
        let pick = |param: Param| match assignment.get(param) {
            Some(v) => Scalar::rational(v.clone()),
            None => Scalar::param(param),
        };
        Params {
            q: pick(Param::Q),
            p: pick(Param::P),
            tau: pick(Param::Tau),
        }
    }

    pub fn get(&self, param: Param) -> &Scalar {
        match param {
            Param::Q => &self.q,
            Param::P => &self.p,
            Param::Tau => &self.tau,
        }
    }
}

struct Memo<K, V> {
    table: Mutex<HashMap<K, V>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    fn new() -> Self {
        Memo {
            table: Mutex::new(HashMap::new()),
        }
    }

    fn get_or(&self, key: &K, compute: impl FnOnce() -> V) -> V {
        if let Some(v) = self.table.lock().expect("memo lock").get(key) {
            return v.clone();
        }
        let v = compute();
        self.table
            .lock()
            .expect("memo lock")
            .insert(key.clone(), v.clone());
        v
    }
}

type QpElem = Element<QpMonomial>;
type Matrix2 = [[QpElem; 2]; 2];

/// σ and ∂ on the quantum plane, computed on monomials from the generator
/// relations `dx x = p x dx`, `dx y = q y dx + (p-1) x dy`,
/// `dy x = p q^-1 x dy`, `dy y = p y dy`.
struct QpTables {
    algebra: QuantumPlane,
    generators: [Matrix2; 2],
    sigma: Memo<QpMonomial, Arc<Matrix2>>,
    partials: Memo<QpMonomial, Arc<[QpElem; 2]>>,
}

impl QpTables {
    fn new(algebra: QuantumPlane, p: &Scalar) -> Self {
        let q = algebra.q().clone();
        let x = QpMonomial::new(1, 0);
        let y = QpMonomial::new(0, 1);
        let sx: Matrix2 = [
            [Element::term(p.clone(), x), Element::zero()],
            [Element::zero(), Element::term(p / &q, x)],
        ];
        let sy: Matrix2 = [
            [
                Element::term(q.clone(), y),
                Element::term(p - &Scalar::one(), x),
            ],
            [Element::zero(), Element::term(p.clone(), y)],
        ];
        QpTables {
            algebra,
            generators: [sx, sy],
            sigma: Memo::new(),
            partials: Memo::new(),
        }
    }

    /// Splits `x^r y^s` as (first generator, remaining monomial).
    fn split(m: &QpMonomial) -> (usize, QpMonomial) {
        if m.x > 0 {
            (0, QpMonomial::new(m.x - 1, m.y))
        } else {
            (1, QpMonomial::new(0, m.y - 1))
        }
    }

    fn generator(g: usize) -> QpMonomial {
        if g == 0 {
            QpMonomial::new(1, 0)
        } else {
            QpMonomial::new(0, 1)
        }
    }

    fn sigma(&self, m: &QpMonomial) -> Arc<Matrix2> {
        self.sigma.get_or(m, || {
            if *m == QpMonomial::new(0, 0) {
                return Arc::new([
                    [Element::one(), Element::zero()],
                    [Element::zero(), Element::one()],
                ]);
            }
            let (g, rest) = Self::split(m);
            let left = &self.generators[g];
            let right = self.sigma(&rest);
            let entry = |i: usize, j: usize| {
                &self.algebra.mul(&left[i][0], &right[0][j])
                    + &self.algebra.mul(&left[i][1], &right[1][j])
            };
            Arc::new([[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]])
        })
    }

    fn partials(&self, m: &QpMonomial) -> Arc<[QpElem; 2]> {
        self.partials.get_or(m, || {
            if *m == QpMonomial::new(0, 0) {
                return Arc::new([Element::zero(), Element::zero()]);
            }
            // ∂_j(g b) = σ_gj(b) + g ∂_j(b)
            let (g, rest) = Self::split(m);
            let sigma_rest = self.sigma(&rest);
            let d_rest = self.partials(&rest);
            let gen = Element::monomial(Self::generator(g));
            let entry = |j: usize| &sigma_rest[g][j] + &self.algebra.mul(&gen, &d_rest[j]);
            Arc::new([entry(0), entry(1)])
        })
    }
}

/// Coefficient `c` of a monomial-scaling operator value `c·m`.
fn scaling_factor<M: crate::algebras::Monomial>(value: &Element<M>, m: &M) -> Scalar {
    debug_assert_eq!(value.len(), 1, "diagonal entry must rescale monomials");
    value.coeff(m)
}

/// The first-order calculus on `K_q[x,y]` with basis `dx, dy`, including the
/// two-form relations `dx dx = dy dy = 0`, `dy dx = -p q^-1 dx dy`.
pub fn quantum_plane(q: Scalar, p: Scalar) -> Result<MultiDerivation<QuantumPlane>> {
    if p.is_zero() {
        return Err(Error::InvalidParameter("p must be nonzero".into()));
    }
    let algebra = QuantumPlane::new(q.clone())?;
    let tables = Arc::new(QpTables::new(algebra.clone(), &p));

    let diag = |i: usize| {
        let t = Arc::clone(&tables);
        LinearOp::monomial_scaling(move |m: &QpMonomial| scaling_factor(&t.sigma(m)[i][i], m))
    };
    let off = {
        let t = Arc::clone(&tables);
        LinearOp::from_fn(move |m: &QpMonomial| t.sigma(m)[0][1].clone())
    };
    let partial = |j: usize| {
        let t = Arc::clone(&tables);
        LinearOp::from_fn(move |m: &QpMonomial| t.partials(m)[j].clone())
    };
    let sigma = vec![vec![diag(0), off], vec![LinearOp::zero(), diag(1)]];
    let minus_p_over_q = -(&p / &q);
    let md = MultiDerivation::new(
        algebra,
        vec!["dx".into(), "dy".into()],
        vec![partial(0), partial(1)],
        sigma,
    )?
    .with_wedge_table(vec![
        vec![Scalar::zero(), Scalar::one()],
        vec![minus_p_over_q, Scalar::zero()],
    ]);
    md.derive_free_structure()
}

/// The q-integer `[k]_q = (q^k - 1)/(q - 1)`, equal to `k` at `q = 1`.
pub fn q_integer(q: &Scalar, k: i64) -> Scalar {
    if q.is_one() {
        return Scalar::from(k);
    }
    let qk = q.pow(k).expect("q is nonzero");
    &(&qk - &Scalar::one()) / &(q - &Scalar::one())
}

/// Jackson's q-derivative on `K[x, x^-1]`, twisted by `f(x) -> f(qx)`.
/// At `q = 1` this is the ordinary derivative with trivial twist.
pub fn jackson(q: Scalar) -> Result<MultiDerivation<Laurent>> {
    if q.is_zero() {
        return Err(Error::InvalidParameter("q must be nonzero".into()));
    }
    let ints: Arc<Memo<i32, Scalar>> = Arc::new(Memo::new());
    let powers: Arc<Memo<i32, Scalar>> = Arc::new(Memo::new());
    let partial = {
        let q = q.clone();
        LinearOp::from_fn(move |m: &LaurentMonomial| {
            let c = ints.get_or(&m.0, || q_integer(&q, m.0 as i64));
            Element::term(c, LaurentMonomial(m.0 - 1))
        })
    };
    let sigma = if q.is_one() {
        LinearOp::identity()
    } else {
        let q = q.clone();
        LinearOp::monomial_scaling(move |m: &LaurentMonomial| {
            powers.get_or(&m.0, || q.pow(m.0 as i64).expect("q is nonzero"))
        })
    };
    MultiDerivation::new(Laurent, vec!["dx".into()], vec![partial], vec![vec![sigma]])?
        .derive_free_structure()
}

/// `d/dx` on Fourier polynomials in `u = exp(tau x)` together with the odd
/// derivative `∂_th`, twisted by `diag(id, parity)`.
pub fn supercircle(tau: Scalar) -> Result<MultiDerivation<Supercircle>> {
    if tau.is_zero() {
        return Err(Error::InvalidParameter("tau must be nonzero".into()));
    }
    let d_x = LinearOp::from_fn(move |m: &SuperMonomial| {
        Element::term(&tau * &Scalar::from(m.k as i64), *m)
    });
    let d_th = LinearOp::from_fn(|m: &SuperMonomial| {
        if m.odd {
            Element::monomial(SuperMonomial::even(m.k))
        } else {
            Element::zero()
        }
    });
    let parity = LinearOp::monomial_scaling(|m: &SuperMonomial| {
        if m.odd {
            Scalar::from(-1)
        } else {
            Scalar::one()
        }
    });
    let sigma = vec![
        vec![LinearOp::identity(), LinearOp::zero()],
        vec![LinearOp::zero(), parity],
    ];
    MultiDerivation::new(
        Supercircle,
        vec!["dx".into(), "dth".into()],
        vec![d_x, d_th],
        sigma,
    )?
    .derive_free_structure()
}
