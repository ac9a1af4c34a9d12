//! Exact combinatorial identities behind the graph counting: Vandermonde
//! convolution, the multinomial matrix identity, the Newton series of a
//! product of binomial coefficients, and two falling-factorial expansions.

use num::bigint::BigInt;
use num_traits::{One, Zero};

use crate::comb::subsets_k;
use crate::error::{Error, Result};
use crate::polyspec::UniPoly;
use crate::scalar::{binomial, factorial, falling_rat, rat, Rat};

/// Non-negative values indexed by the non-empty subsets of [r], stored by
/// bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetTuple {
    pub r: usize,
    values: Vec<u64>,
}

impl SubsetTuple {
    pub fn zero(r: usize) -> Self {
        SubsetTuple {
            r,
            values: vec![0; 1 << r],
        }
    }

    pub fn get(&self, mask: usize) -> u64 {
        self.values[mask]
    }

    pub fn set(&mut self, mask: usize, v: u64) {
        assert!(mask > 0 && mask < (1 << self.r), "subset must be non-empty");
        self.values[mask] = v;
    }

    /// Total over the non-empty subsets.
    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }

    /// Sum of values over the subsets containing element i (1-based).
    pub fn margin(&self, i: usize) -> u64 {
        (1..1 << self.r)
            .filter(|m| m & (1 << (i - 1)) != 0)
            .map(|m| self.values[m])
            .sum()
    }
}

/// A multiset in L(m, n): values at positions n+1..m, non-decreasing, with
/// the value at position i at most i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedMultiset {
    pub entries: Vec<u64>,
}

impl BoundedMultiset {
    pub fn mult(&self, i: u64) -> u64 {
        self.entries.iter().filter(|&&x| x == i).count() as u64
    }
}

/// All multisets in L(m, n).
pub fn bounded_multisets(m: u64, n: u64) -> Vec<BoundedMultiset> {
    fn rec(pos: u64, m: u64, min: u64, cur: &mut Vec<u64>, out: &mut Vec<BoundedMultiset>) {
        if pos > m {
            out.push(BoundedMultiset {
                entries: cur.clone(),
            });
            return;
        }
        for v in min..=pos {
            cur.push(v);
            rec(pos + 1, m, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > m {
        return out;
    }
    rec(n + 1, m, 1, &mut Vec::new(), &mut out);
    out
}

/// c_m(lambda): product over i of binom(m-i+1 - sum_{j>i} mult_j, mult_i).
pub fn c_coeff(m: u64, lambda: &BoundedMultiset) -> BigInt {
    let mut acc = BigInt::one();
    for i in 1..=m {
        let tail: u64 = (i + 1..=m).map(|j| lambda.mult(j)).sum();
        let n = m as i64 - i as i64 + 1 - tail as i64;
        acc *= binomial(n, lambda.mult(i) as i64);
    }
    acc
}

/// Vandermonde convolution: sum_i binom(a,i) binom(b,l-i) = binom(a+b,l).
pub fn check_bin_sum(a: u64, b: u64, l: u64) -> bool {
    let lhs: BigInt = (0..=l)
        .map(|i| binomial(a as i64, i as i64) * binomial(b as i64, (l - i) as i64))
        .sum();
    lhs == binomial((a + b) as i64, l as i64)
}

fn enumerate_matrices(xs: &[u64], ys: &[u64]) -> Vec<Vec<Vec<u64>>> {
    fn fill_row(
        row: usize,
        xs: &[u64],
        cols: &mut Vec<u64>,
        cur: &mut Vec<Vec<u64>>,
        out: &mut Vec<Vec<Vec<u64>>>,
    ) {
        if row == xs.len() {
            if cols.iter().all(|&c| c == 0) {
                out.push(cur.clone());
            }
            return;
        }
        fn fill_cell(
            row: usize,
            col: usize,
            rem: u64,
            xs: &[u64],
            cols: &mut Vec<u64>,
            line: &mut Vec<u64>,
            cur: &mut Vec<Vec<u64>>,
            out: &mut Vec<Vec<Vec<u64>>>,
        ) {
            if col == cols.len() {
                if rem == 0 {
                    cur.push(line.clone());
                    fill_row(row + 1, xs, cols, cur, out);
                    cur.pop();
                }
                return;
            }
            for v in 0..=rem.min(cols[col]) {
                cols[col] -= v;
                line.push(v);
                fill_cell(row, col + 1, rem - v, xs, cols, line, cur, out);
                line.pop();
                cols[col] += v;
            }
        }
        fill_cell(row, 0, xs[row], xs, cols, &mut Vec::new(), cur, out);
    }
    let mut out = Vec::new();
    let mut cols = ys.to_vec();
    fill_row(0, xs, &mut cols, &mut Vec::new(), &mut out);
    out
}

/// Multinomial matrix identity: the sum of 1/prod a_{i,j}! over non-negative
/// integer matrices with row sums xs and column sums ys equals
/// A!/(prod x_i! prod y_j!).
pub fn check_rec(xs: &[u64], ys: &[u64]) -> Result<bool> {
    let a: u64 = xs.iter().sum();
    if a != ys.iter().sum::<u64>() {
        return Err(Error::SumMismatch);
    }
    let mut lhs = Rat::zero();
    for m in enumerate_matrices(xs, ys) {
        let denom: BigInt = m
            .iter()
            .flatten()
            .map(|&v| factorial(v))
            .product();
        lhs += Rat::one() / Rat::from_integer(denom);
    }
    let denom: BigInt = xs
        .iter()
        .chain(ys)
        .map(|&v| factorial(v))
        .product();
    let rhs = Rat::from_integer(factorial(a)) / Rat::from_integer(denom);
    Ok(lhs == rhs)
}

fn enumerate_subset_tuples(nu: &[u64]) -> Vec<SubsetTuple> {
    let r = nu.len();
    fn rec(
        mask: usize,
        r: usize,
        budget: &mut Vec<u64>,
        cur: &mut SubsetTuple,
        out: &mut Vec<SubsetTuple>,
    ) {
        if mask == 1 << r {
            if budget.iter().all(|&b| b == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let members: Vec<usize> = (0..r).filter(|i| mask & (1 << i) != 0).collect();
        let cap = members.iter().map(|&i| budget[i]).min().unwrap_or(0);
        for v in 0..=cap {
            for &i in &members {
                budget[i] -= v;
            }
            cur.set(mask, v);
            rec(mask + 1, r, budget, cur, out);
            for &i in &members {
                budget[i] += v;
            }
        }
        if cap + 1 > 0 {
            cur.set(mask, 0);
        }
    }
    let mut out = Vec::new();
    rec(1, r, &mut nu.to_vec(), &mut SubsetTuple::zero(r), &mut out);
    out
}

/// Newton series of a product of binomial coefficients:
/// sum_k (d)_k sum_{s in S(nu,k)} 1/prod s(U)! = prod_i binom(d, nu(i)),
/// where s ranges over non-negative tuples on the non-empty subsets of [r]
/// with margins nu(i).
pub fn check_t_su(d: u64, nu: &[u64]) -> bool {
    let mut lhs = Rat::zero();
    for s in enumerate_subset_tuples(nu) {
        let k = s.total();
        let denom: BigInt = (1..1 << nu.len()).map(|m| factorial(s.get(m))).product();
        lhs += falling_rat(&rat(d as i64), k) / Rat::from_integer(denom);
    }
    let rhs: Rat = nu
        .iter()
        .map(|&v| Rat::from_integer(binomial(d as i64, v as i64)))
        .product();
    lhs == rhs
}

/// Falling factorial (d)_k as a polynomial in d.
pub fn falling_poly(k: u64) -> UniPoly<Rat> {
    let mut acc = UniPoly::constant(Rat::one());
    for i in 0..k as i64 {
        acc = acc.mul(&UniPoly::linear(rat(-i), Rat::one()));
    }
    acc
}

/// prod_{i=1}^m (d - i + 1 + s_1 + ... + s_i)
/// = sum_i (d)_i sum_{lambda in L(m,i)} c_m(lambda) prod_j (s_j)_{mult_j},
/// as polynomials in d.
pub fn check_s_exp(m: u64, s: &[Rat]) -> bool {
    assert_eq!(s.len() as u64, m);
    let mut lhs = UniPoly::constant(Rat::one());
    let mut partial = Rat::zero();
    for i in 1..=m as i64 {
        partial += s[i as usize - 1].clone();
        lhs = lhs.mul(&UniPoly::linear(rat(-i + 1) + partial.clone(), Rat::one()));
    }
    let mut rhs = UniPoly::zero();
    for i in 0..=m {
        let mut inner = Rat::zero();
        for lambda in bounded_multisets(m, i) {
            let mut term = Rat::from_integer(c_coeff(m, &lambda));
            for (j, sj) in s.iter().enumerate() {
                term *= falling_rat(sj, lambda.mult(j as u64 + 1));
            }
            inner += term;
        }
        rhs = rhs.add(&falling_poly(i).scale(&inner));
    }
    lhs == rhs
}

/// x(U) = prod_i (x_{U(i)} - i + 1) with U listed in increasing order.
pub fn x_of_subset(x: &[Rat], u: &[usize]) -> Rat {
    u.iter()
        .enumerate()
        .map(|(i, &ui)| x[ui].clone() - rat(i as i64))
        .product()
}

/// prod_{i=1}^r (y + x_i - i + 1) = sum_i (y)_i sum_{|U| = r-i} x(U),
/// as polynomials in y.
pub fn check_s_exp_2(r: usize, x: &[Rat]) -> bool {
    assert_eq!(x.len(), r);
    let mut lhs = UniPoly::constant(Rat::one());
    for i in 1..=r as i64 {
        lhs = lhs.mul(&UniPoly::linear(x[i as usize - 1].clone() - rat(i - 1), Rat::one()));
    }
    let mut rhs = UniPoly::zero();
    for i in 0..=r {
        let inner: Rat = subsets_k(r, r - i)
            .iter()
            .map(|u| x_of_subset(x, u))
            .sum();
        rhs = rhs.add(&falling_poly(i as u64).scale(&inner));
    }
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn bin_sum_exhaustive() {
        assert!(check_bin_sum(2, 3, 0));
        assert!(check_bin_sum(2, 3, 2));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        for a in 0..=8 {
            for b in 0..=8 {
                for l in 0..=8 {
                    assert!(check_bin_sum(a, b, l), "a={a} b={b} l={l}");
                }
            }
        }
    }

    #[test]
    fn rec_small_cases() {
        // m=1: single matrix
        assert!(check_rec(&[3], &[1, 2]).unwrap());
        // 2x2 with all margins 1: two matrices
        assert!(check_rec(&[1, 1], &[1, 1]).unwrap());
        assert!(matches!(check_rec(&[1], &[2]), Err(Error::SumMismatch)));
    }

    #[test]
    fn rec_exhaustive() {
        for a in 0..=6u64 {
            for m in 1..=3usize {
                for n in 1..=3usize {
                    for xs in crate::comb::compositions_nn(a as u32, m as u32) {
                        for ys in crate::comb::compositions_nn(a as u32, n as u32) {
                            let x: Vec<u64> = xs.parts.iter().map(|&v| v as u64).collect();
                            let y: Vec<u64> = ys.parts.iter().map(|&v| v as u64).collect();
                            assert!(check_rec(&x, &y).unwrap(), "x={x:?} y={y:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn t_su_r1_collapses() {
        // single subset {1}: only s({1}) = nu(1) contributes
        for d in 0..=5u64 {
            for v in 0..=4u64 {
                let tuples = enumerate_subset_tuples(&[v]);
                assert_eq!(tuples.len(), 1);
                assert_eq!(tuples[0].get(1), v);
                assert!(check_t_su(d, &[v]));
            }
        }
    }

    #[test]
    fn t_su_worked_example() {
        assert!(check_t_su(4, &[1, 2]));
        let rhs = Rat::from_integer(binomial(4, 1) * binomial(4, 2));
        assert_eq!(rhs, rat(24));
    }

    #[test]
    fn t_su_exhaustive() {
        for d in 0..=6u64 {
            for r in 1..=3usize {
                let total = 4usize.pow(r as u32);
                for code in 0..total {
                    let mut nu = Vec::with_capacity(r);
                    let mut c = code;
                    for _ in 0..r {
                        nu.push((c % 4) as u64);
                        c /= 4;
                    }
                    assert!(check_t_su(d, &nu), "d={d} nu={nu:?}");
                }
            }
        }
    }

    #[test]
    fn s_exp_small() {
        assert!(check_s_exp(0, &[]));
        assert!(check_s_exp(2, &[rat(1), rat(1)]));
    }

    #[test]
    fn s_exp_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for m in 0..=5u64 {
            for _ in 0..4 {
                let s: Vec<Rat> = (0..m).map(|_| rat(rng.gen_range(-4i64..=4))).collect();
                assert!(check_s_exp(m, &s), "m={m} s={s:?}");
            }
        }
        // non-integer values
        assert!(check_s_exp(3, &[ratio(1, 2), ratio(-2, 3), ratio(5, 7)]));
    }

    #[test]
    fn s_exp_2_small() {
        assert!(check_s_exp_2(0, &[]));
        // r=1: y + x1 on both sides
        assert!(check_s_exp_2(1, &[rat(9)]));
    }

    #[test]
    fn s_exp_2_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for r in 0..=5usize {
            for _ in 0..4 {
                let x: Vec<Rat> = (0..r).map(|_| rat(rng.gen_range(-5i64..=5))).collect();
                assert!(check_s_exp_2(r, &x), "r={r} x={x:?}");
            }
        }
        assert!(check_s_exp_2(2, &[ratio(3, 2), ratio(-1, 4)]));
    }

    #[test]
    fn falling_poly_expansion() {
        // (d)_0 = 1, (d)_{k+1} = (d)_k (d - k)
        let mut acc = UniPoly::constant(Rat::one());
        for k in 0..5u64 {
            assert_eq!(falling_poly(k), acc);
            acc = acc.mul(&UniPoly::linear(rat(-(k as i64)), Rat::one()));
        }
        assert_eq!(falling_poly(3).eval(&rat(5)), rat(60));
    }

    #[test]
    fn bounded_multiset_shapes() {
        // L(m, m) holds only the empty multiset
        assert_eq!(bounded_multisets(3, 3).len(), 1);
        assert!(bounded_multisets(3, 3)[0].entries.is_empty());
        // L(2, 0): values at positions 1, 2 with v1 = 1, v2 in {1, 2}
        let l20 = bounded_multisets(2, 0);
        assert_eq!(l20.len(), 2);
        assert!(l20.iter().all(|l| l.entries[0] == 1));
    }
}
