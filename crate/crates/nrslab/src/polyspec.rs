//! Input polynomials given by their roots, and dense univariate polynomials
//! used for the elimination polynomial g and the pairwise-sum product.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::comb::subsets_k;
use crate::error::{Error, Result};
use crate::scalar::{format_rat, parse_rat, Coeff, Rat};
use crate::symfunc::elem_sym;

/// Degree-d polynomial f(z) = a0 prod (1 - z/z_i), held by its roots.
#[derive(Clone, Debug, PartialEq)]
pub struct PolySpec {
    pub a0: Rat,
    pub roots: Vec<Rat>,
    coeffs: Vec<Rat>,
}

#[derive(Serialize, Deserialize)]
struct PolySpecFile {
    a0: String,
    roots: Vec<String>,
}

impl PolySpec {
    pub fn new(a0: Rat, roots: Vec<Rat>) -> Result<Self> {
        let coeffs = poly_from_roots(&a0, &roots)?;
        Ok(PolySpec { a0, roots, coeffs })
    }

    /// Monic polynomial with the given roots: a0 is chosen so the z^d
    /// coefficient is 1 (a0 = (-1)^d prod z_i).
    pub fn monic(roots: Vec<Rat>) -> Result<Self> {
        let mut a0 = roots.iter().fold(Rat::one(), |a, b| a * b.clone());
        if roots.len() % 2 == 1 {
            a0 = -a0;
        }
        Self::new(a0, roots)
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    /// a_i, with a_i = 0 outside 0 <= i <= d.
    pub fn coeff(&self, i: i64) -> Rat {
        if i < 0 || i as usize >= self.coeffs.len() {
            Rat::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn inv_roots(&self) -> Vec<Rat> {
        self.roots
            .iter()
            .map(|r| Rat::one() / r.clone())
            .collect()
    }

    pub fn to_json(&self) -> String {
        let file = PolySpecFile {
            a0: format_rat(&self.a0),
            roots: self.roots.iter().map(format_rat).collect(),
        };
        serde_json::to_string_pretty(&file).expect("serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let file: PolySpecFile = serde_json::from_str(s)?;
        let a0 = parse_rat(&file.a0)?;
        let roots = file
            .roots
            .iter()
            .map(|r| parse_rat(r))
            .collect::<Result<Vec<_>>>()?;
        Self::new(a0, roots)
    }
}

/// Coefficients a_0..a_d from a0 and the roots, via
/// (-1)^i a_i / a_0 = e_i(1/z_1, ..., 1/z_d).
pub fn poly_from_roots(a0: &Rat, roots: &[Rat]) -> Result<Vec<Rat>> {
    if a0.is_zero() {
        return Err(Error::ZeroLeading);
    }
    if roots.iter().any(|r| r.is_zero()) {
        return Err(Error::ZeroRoot);
    }
    let inv: Vec<Rat> = roots.iter().map(|r| Rat::one() / r.clone()).collect();
    let mut out = Vec::with_capacity(roots.len() + 1);
    for i in 0..=roots.len() {
        let mut c = a0.clone() * elem_sym(i, &inv);
        if i % 2 == 1 {
            c = -c;
        }
        out.push(c);
    }
    Ok(out)
}

/// Dense univariate polynomial over a coefficient ring, ascending powers.
#[derive(Clone, Debug)]
pub struct UniPoly<C> {
    pub coeffs: Vec<C>,
}

impl<C: Coeff> UniPoly<C> {
    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn constant(c: C) -> Self {
        let mut p = UniPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// c1*x + c0
    pub fn linear(c0: C, c1: C) -> Self {
        let mut p = UniPoly {
            coeffs: vec![c0, c1],
        };
        p.trim();
        p
    }

    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        Self::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }
}

impl<C: Coeff> PartialEq for UniPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|i| self.coeff(i) == other.coeff(i))
    }
}

/// Monic polynomial of degree binom(d,2) whose roots are all pairwise sums
/// z_i + z_j, i < j.
pub fn pairwise_sum_poly<C: Coeff>(roots: &[C]) -> UniPoly<C> {
    let mut acc = UniPoly::constant(C::one());
    for pair in subsets_k(roots.len(), 2) {
        let s = roots[pair[0]].clone() + roots[pair[1]].clone();
        acc = acc.mul(&UniPoly::linear(-s, C::one()));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    #[test]
    fn from_roots_examples() {
        // single root 1: f = 1 - z
        assert_eq!(
            poly_from_roots(&rat(1), &[rat(1)]).unwrap(),
            vec![rat(1), rat(-1)]
        );
        // roots 1,2,3 with a0 = 1: (1-z)(1-z/2)(1-z/3)
        assert_eq!(
            poly_from_roots(&rat(1), &[rat(1), rat(2), rat(3)]).unwrap(),
            vec![rat(1), ratio(-11, 6), rat(1), ratio(-1, 6)]
        );
        // scaled by 6
        assert_eq!(
            poly_from_roots(&rat(6), &[rat(1), rat(2), rat(3)]).unwrap(),
            vec![rat(6), rat(-11), rat(6), rat(-1)]
        );
        assert!(matches!(
            poly_from_roots(&rat(0), &[rat(1)]),
            Err(Error::ZeroLeading)
        ));
        assert!(matches!(
            poly_from_roots(&rat(1), &[rat(0)]),
            Err(Error::ZeroRoot)
        ));
    }

    #[test]
    fn coeff_indexing_out_of_range() {
        let p = PolySpec::new(rat(1), vec![rat(1), rat(2)]).unwrap();
        assert!(p.coeff(-1).is_zero());
        assert!(p.coeff(3).is_zero());
        assert!(!p.coeff(2).is_zero());
    }

    #[test]
    fn monic_spec_matches_expanded_product() {
        // (z-1)(z-2)(z-3) = z^3 - 6z^2 + 11z - 6
        let p = PolySpec::monic(vec![rat(1), rat(2), rat(3)]).unwrap();
        assert_eq!(
            p.coeffs().to_vec(),
            vec![rat(-6), rat(11), rat(-6), rat(1)]
        );
    }

    #[test]
    fn reciprocal_elementary_round_trip() {
        let spec = PolySpec::new(ratio(3, 2), vec![rat(2), ratio(-1, 3), rat(5)]).unwrap();
        let inv = spec.inv_roots();
        for i in 0..=3usize {
            let mut lhs = spec.coeff(i as i64) / spec.a0.clone();
            if i % 2 == 1 {
                lhs = -lhs;
            }
            assert_eq!(lhs, elem_sym(i, &inv));
        }
    }

    #[test]
    fn json_round_trip() {
        let p = PolySpec::new(ratio(1, 2), vec![rat(1), ratio(-3, 4)]).unwrap();
        let q = PolySpec::from_json(&p.to_json()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn pairwise_sum_examples() {
        // roots (1,2) -> z - 3
        let p = pairwise_sum_poly(&[rat(1), rat(2)]);
        assert_eq!(p.coeffs, vec![rat(-3), rat(1)]);
        // roots (1,2,3) -> (z-3)(z-4)(z-5) = z^3 - 12z^2 + 47z - 60
        let p = pairwise_sum_poly(&[rat(1), rat(2), rat(3)]);
        assert_eq!(p.coeffs, vec![rat(-60), rat(47), rat(-12), rat(1)]);
        // degenerate roots (0,0,0) -> z^3
        let p = pairwise_sum_poly(&[rat(0), rat(0), rat(0)]);
        assert_eq!(p.coeffs, vec![rat(0), rat(0), rat(0), rat(1)]);
    }
}
