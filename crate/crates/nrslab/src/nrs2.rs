//! The explicit NRS(2) system: exact and floating evaluation of the two
//! component maps, Newton iteration on the residual, and classification of
//! limits against the pairwise root sums.

use num::complex::Complex64;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::polyspec::PolySpec;
use crate::scalar::{binomial_ext, rat_to_f64, Rat};

/// Term table for one component: exponent pair (x0 power, x1 power) to
/// rational coefficient.
type Terms = BTreeMap<(u32, u32), Rat>;

#[derive(Clone, Debug)]
pub struct Nrs2System {
    pub spec: PolySpec,
    pub t: Rat,
    residual0: Terms,
    residual1: Terms,
}

fn add_term(terms: &mut Terms, e0: i64, e1: i64, c: Rat) {
    if c.is_zero() {
        return;
    }
    assert!(e0 >= 0 && e1 >= 0, "negative exponent in term table");
    let entry = terms.entry((e0 as u32, e1 as u32)).or_insert_with(Rat::zero);
    *entry += c;
    if entry.is_zero() {
        terms.remove(&(e0 as u32, e1 as u32));
    }
}

fn t_pow(t: &Rat, j: i64) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..j.unsigned_abs() {
        acc *= t.clone();
    }
    if j < 0 {
        Rat::one() / acc
    } else {
        acc
    }
}

impl Nrs2System {
    pub fn new(spec: PolySpec) -> Result<Self> {
        let d = spec.degree() as i64;
        if d < 2 {
            return Err(Error::IndexOutOfRange(format!("degree {d} < 2")));
        }
        if spec.coeff(1).is_zero() {
            return Err(Error::ZeroA1);
        }
        if spec.coeff(2).is_zero() {
            return Err(Error::ZeroA2);
        }
        let t = spec.coeff(0) / spec.coeff(1);
        let a2 = spec.coeff(2);

        // f_{0,2} - x_0: terms -(a_{i+1}/a_2) t^j x_1^j x_0^{i-2j} binom(i-j, j)
        let mut residual0 = Terms::new();
        for i in -1..d {
            for j in 0..=i.div_euclid(2) {
                let b = binomial_ext(i - j, j);
                if b.is_zero() {
                    continue;
                }
                let c = -(spec.coeff(i + 1) / a2.clone()) * t_pow(&t, j) * Rat::from_integer(b);
                add_term(&mut residual0, i - 2 * j, j, c);
            }
        }

        // f_{1,2} - x_1: terms -(a_{i+2}/a_2) t^j x_1^{j+1} x_0^{i-2j} binom(i-j, j);
        // the (i,j) = (-2,-1) corner contributes the constant -a_1/a_2 via
        // binom(-1,-1) = 1.
        let mut residual1 = Terms::new();
        for i in -2..d - 1 {
            for j in -1..=i.div_euclid(2) {
                let b = binomial_ext(i - j, j);
                if b.is_zero() {
                    continue;
                }
                let c = -(spec.coeff(i + 2) / a2.clone()) * t_pow(&t, j) * Rat::from_integer(b);
                add_term(&mut residual1, i - 2 * j, j + 1, c);
            }
        }

        Ok(Nrs2System {
            spec,
            t,
            residual0,
            residual1,
        })
    }

    /// Coefficient of x0^e0 x1^e1 in residual component `which` (0 or 1);
    /// zero for absent or negative exponents.
    pub fn residual_coeff(&self, which: usize, e0: i64, e1: i64) -> Rat {
        if e0 < 0 || e1 < 0 {
            return Rat::zero();
        }
        let terms = if which == 0 { &self.residual0 } else { &self.residual1 };
        terms
            .get(&(e0 as u32, e1 as u32))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    fn eval_terms_rat(terms: &Terms, x0: &Rat, x1: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(e0, e1), c) in terms {
            let mut v = c.clone();
            for _ in 0..e0 {
                v *= x0.clone();
            }
            for _ in 0..e1 {
                v *= x1.clone();
            }
            acc += v;
        }
        acc
    }

    fn eval_terms_c(terms: &Terms, x0: Complex64, x1: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&(e0, e1), c) in terms {
            acc += rat_to_f64(c) * x0.powu(e0) * x1.powu(e1);
        }
        acc
    }

    /// Exact residual (f_{0,2} - x_0, f_{1,2} - x_1).
    pub fn eval_residual_rat(&self, x0: &Rat, x1: &Rat) -> (Rat, Rat) {
        (
            Self::eval_terms_rat(&self.residual0, x0, x1),
            Self::eval_terms_rat(&self.residual1, x0, x1),
        )
    }

    pub fn eval_f02_rat(&self, x0: &Rat, x1: &Rat) -> Rat {
        Self::eval_terms_rat(&self.residual0, x0, x1) + x0.clone()
    }

    pub fn eval_f12_rat(&self, x0: &Rat, x1: &Rat) -> Rat {
        Self::eval_terms_rat(&self.residual1, x0, x1) + x1.clone()
    }

    pub fn eval_residual_c(&self, x0: Complex64, x1: Complex64) -> (Complex64, Complex64) {
        (
            Self::eval_terms_c(&self.residual0, x0, x1),
            Self::eval_terms_c(&self.residual1, x0, x1),
        )
    }

    pub fn eval_residual_f64(&self, x0: f64, x1: f64) -> (f64, f64) {
        let (r0, r1) = self.eval_residual_c(Complex64::new(x0, 0.0), Complex64::new(x1, 0.0));
        (r0.re, r1.re)
    }

    pub fn eval_f02_c(&self, x0: Complex64, x1: Complex64) -> Complex64 {
        Self::eval_terms_c(&self.residual0, x0, x1) + x0
    }

    pub fn eval_f12_c(&self, x0: Complex64, x1: Complex64) -> Complex64 {
        Self::eval_terms_c(&self.residual1, x0, x1) + x1
    }

    fn diff_terms(terms: &Terms, var: usize) -> Terms {
        let mut out = Terms::new();
        for (&(e0, e1), c) in terms {
            let (e, rest) = if var == 0 { (e0, (e1,)) } else { (e1, (e0,)) };
            if e == 0 {
                continue;
            }
            let nc = c.clone() * Rat::from_integer(e.into());
            let key = if var == 0 {
                (e0 - 1, rest.0)
            } else {
                (rest.0, e1 - 1)
            };
            let entry = out.entry(key).or_insert_with(Rat::zero);
            *entry += nc;
        }
        out
    }

    /// Analytic Jacobian of the residual, term-wise differentiation.
    pub fn jacobian_c(&self, x0: Complex64, x1: Complex64) -> [[Complex64; 2]; 2] {
        let d00 = Self::eval_terms_c(&Self::diff_terms(&self.residual0, 0), x0, x1);
        let d01 = Self::eval_terms_c(&Self::diff_terms(&self.residual0, 1), x0, x1);
        let d10 = Self::eval_terms_c(&Self::diff_terms(&self.residual1, 0), x0, x1);
        let d11 = Self::eval_terms_c(&Self::diff_terms(&self.residual1, 1), x0, x1);
        [[d00, d01], [d10, d11]]
    }

    /// One Newton step on the residual system.
    pub fn newton_step(&self, x0: Complex64, x1: Complex64) -> Result<(Complex64, Complex64)> {
        let j = self.jacobian_c(x0, x1);
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        let scale = (j[0][0].norm() * j[1][1].norm() + j[0][1].norm() * j[1][0].norm()).max(1.0);
        if det.norm() < 1e-14 * scale {
            return Err(Error::SingularJacobian);
        }
        let (f0, f1) = self.eval_residual_c(x0, x1);
        let dx0 = (f0 * j[1][1] - f1 * j[0][1]) / det;
        let dx1 = (f1 * j[0][0] - f0 * j[1][0]) / det;
        Ok((x0 - dx0, x1 - dx1))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IterStatus {
    Converged,
    Diverged,
    MaxIter,
    Singular,
}

impl IterStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            IterStatus::Converged => "converged",
            IterStatus::Diverged => "diverged",
            IterStatus::MaxIter => "max-iter",
            IterStatus::Singular => "singular",
        }
    }
}

#[derive(Clone, Debug)]
pub struct IterTrace {
    pub start: (Complex64, Complex64),
    pub iterates: Vec<(Complex64, Complex64)>,
    pub status: IterStatus,
    pub steps: usize,
    pub limit: Option<(Complex64, Complex64)>,
}

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_MAXITER: usize = 200;
const DIVERGE_NORM: f64 = 1e12;

pub fn iterate(sys: &Nrs2System, start: (Complex64, Complex64), tol: f64, maxiter: usize) -> IterTrace {
    let mut trace = IterTrace {
        start,
        iterates: vec![start],
        status: IterStatus::MaxIter,
        steps: 0,
        limit: None,
    };
    let (mut x0, mut x1) = start;
    for step in 0..=maxiter {
        let (f0, f1) = sys.eval_residual_c(x0, x1);
        if (f0.norm_sqr() + f1.norm_sqr()).sqrt() < tol {
            trace.status = IterStatus::Converged;
            trace.steps = step;
            trace.limit = Some((x0, x1));
            return trace;
        }
        if (x0.norm_sqr() + x1.norm_sqr()).sqrt() > DIVERGE_NORM {
            trace.status = IterStatus::Diverged;
            trace.steps = step;
            return trace;
        }
        if step == maxiter {
            break;
        }
        match sys.newton_step(x0, x1) {
            Ok(next) => {
                (x0, x1) = next;
                trace.iterates.push(next);
            }
            Err(_) => {
                trace.status = IterStatus::Singular;
                trace.steps = step;
                return trace;
            }
        }
    }
    trace.steps = maxiter;
    trace
}

/// All pairs (i, j), i < j, whose root sum lies within tol of the limit's
/// first coordinate. More than one entry means the match is ambiguous.
pub fn classify_limit(spec: &PolySpec, limit0: Complex64, tol: f64) -> Vec<(usize, usize)> {
    let d = spec.degree();
    let mut out = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let s = rat_to_f64(&spec.roots[i]) + rat_to_f64(&spec.roots[j]);
            if (limit0 - Complex64::new(s, 0.0)).norm() < tol {
                out.push((i, j));
            }
        }
    }
    out
}
