//! Sparse multivariate Laurent polynomials over exact rationals, plus an
//! unreduced fraction field over them for the few places that need symbolic
//! division.

use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::scalar::{Coeff, Rat};

/// Exponent vector, stored sparsely; zero exponents are never kept.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default, Hash)]
pub struct Mono(BTreeMap<u32, i32>);

impl Mono {
    pub fn unit() -> Self {
        Mono(BTreeMap::new())
    }

    pub fn var(v: u32, e: i32) -> Self {
        let mut m = BTreeMap::new();
        if e != 0 {
            m.insert(v, e);
        }
        Mono(m)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out = self.0.clone();
        for (&v, &e) in &other.0 {
            let cur = out.entry(v).or_insert(0);
            *cur += e;
            if *cur == 0 {
                out.remove(&v);
            }
        }
        Mono(out)
    }

    pub fn exponent(&self, v: u32) -> i32 {
        self.0.get(&v).copied().unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = (u32, i32)> + '_ {
        self.0.iter().map(|(&v, &e)| (v, e))
    }
}

/// Sparse Laurent polynomial: map from exponent vector to nonzero rational
/// coefficient. Variables are plain ids; each module fixes its own convention.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SparseLaurent {
    terms: BTreeMap<Mono, Rat>,
}

impl SparseLaurent {
    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::unit(), c);
        }
        SparseLaurent { terms }
    }

    pub fn var(v: u32) -> Self {
        Self::monomial(Mono::var(v, 1), Rat::one())
    }

    /// x_v^e for any integer e, including negative.
    pub fn var_pow(v: u32, e: i32) -> Self {
        Self::monomial(Mono::var(v, e), Rat::one())
    }

    pub fn monomial(m: Mono, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SparseLaurent { terms }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coeff(&self, m: &Mono) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    fn insert_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparseLaurent {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }

    /// Substitutes variable `from` by variable `to` (used for z1 = z_{m+1}).
    pub fn rename_var(&self, from: u32, to: u32) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e_from = m.exponent(from);
            let mut nm = m.mul(&Mono::var(from, -e_from));
            if e_from != 0 {
                nm = nm.mul(&Mono::var(to, e_from));
            }
            out.insert_term(nm, c.clone());
        }
        out
    }

    /// Evaluates at rational points given by `vals[v]`; every variable that
    /// occurs must have a nonzero value when it has a negative exponent.
    pub fn eval(&self, vals: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.vars() {
                let x = &vals[v as usize];
                let p = if e >= 0 {
                    num_pow(x, e as u32)
                } else {
                    Rat::one() / num_pow(x, (-e) as u32)
                };
                t *= p;
            }
            acc += t;
        }
        acc
    }

    /// Largest exponent of `v` over all terms (None when v is absent).
    pub fn max_exponent(&self, v: u32) -> Option<i32> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }
}

fn num_pow(x: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= x.clone();
    }
    acc
}

impl Zero for SparseLaurent {
    fn zero() -> Self {
        SparseLaurent::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for SparseLaurent {
    fn one() -> Self {
        Self::constant(Rat::one())
    }
}

impl Add for SparseLaurent {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for (m, c) in rhs.terms {
            out.insert_term(m, c);
        }
        out
    }
}

impl Sub for SparseLaurent {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for SparseLaurent {
    type Output = Self;
    fn neg(self) -> Self {
        SparseLaurent {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul for SparseLaurent {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl Coeff for SparseLaurent {
    fn from_rat(r: Rat) -> Self {
        Self::constant(r)
    }
}

impl fmt::Display for SparseLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", crate::scalar::format_rat(c))?;
            for (v, e) in m.vars() {
                write!(f, "*v{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Unreduced fraction over a coefficient ring. Equality is by cross
/// multiplication, so no GCDs are ever needed; sizes stay small at the desk
/// scale where this is used (fully symbolic d <= 4).
#[derive(Clone, Debug)]
pub struct Frac<T> {
    pub num: T,
    pub den: T,
}

impl<T: Coeff> Frac<T> {
    pub fn new(num: T, den: T) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Frac { num, den }
    }

    pub fn from_ring(x: T) -> Self {
        Frac {
            num: x,
            den: T::one(),
        }
    }
}

impl<T: Coeff> PartialEq for Frac<T> {
    fn eq(&self, other: &Self) -> bool {
        self.num.clone() * other.den.clone() == other.num.clone() * self.den.clone()
    }
}

impl<T: Coeff> Zero for Frac<T> {
    fn zero() -> Self {
        Frac {
            num: T::zero(),
            den: T::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<T: Coeff> One for Frac<T> {
    fn one() -> Self {
        Frac {
            num: T::one(),
            den: T::one(),
        }
    }
}

impl<T: Coeff> Add for Frac<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Frac {
            num: self.num * rhs.den.clone() + rhs.num * self.den.clone(),
            den: self.den * rhs.den,
        }
    }
}

impl<T: Coeff> Sub for Frac<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Coeff> Neg for Frac<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Frac {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<T: Coeff> Mul for Frac<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Frac {
            num: self.num * rhs.num,
            den: self.den * rhs.den,
        }
    }
}

impl<T: Coeff> Div for Frac<T> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.num.is_zero(), "division by zero");
        Frac {
            num: self.num * rhs.den,
            den: self.den * rhs.num,
        }
    }
}

impl<T: Coeff> Coeff for Frac<T> {
    fn from_rat(r: Rat) -> Self {
        Frac::from_ring(T::from_rat(r))
    }
}
