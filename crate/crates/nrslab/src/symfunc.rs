//! Elementary and complete homogeneous symmetric functions, the alternating
//! convolution mu_n, and the identity checkers built on them.

use crate::comb::compositions_pos;
use crate::error::{Error, Result};
use crate::scalar::Coeff;

/// e_k(vals): sum over k-subsets. e_0 = 1, e_k = 0 for k > len.
pub fn elem_sym<C: Coeff>(k: usize, vals: &[C]) -> C {
    if k > vals.len() {
        return C::zero();
    }
    // dp[j] = e_j of the prefix processed so far
    let mut dp: Vec<C> = vec![C::zero(); k + 1];
    dp[0] = C::one();
    for v in vals {
        for j in (1..=k).rev() {
            dp[j] = dp[j].clone() + dp[j - 1].clone() * v.clone();
        }
    }
    dp[k].clone()
}

/// h_k(vals): sum over weakly increasing k-tuples. h_0 = 1; h_k of the empty
/// list is 0 for k >= 1.
pub fn complete_hom<C: Coeff>(k: usize, vals: &[C]) -> C {
    if k == 0 {
        return C::one();
    }
    if vals.is_empty() {
        return C::zero();
    }
    let mut dp: Vec<C> = vec![C::zero(); k + 1];
    dp[0] = C::one();
    for v in vals {
        for j in 1..=k {
            dp[j] = dp[j].clone() + dp[j - 1].clone() * v.clone();
        }
    }
    dp[k].clone()
}

/// mu_n(xs; ys) = sum_{l=0}^{n} (-1)^l h_l(xs) e_{n-l}(ys); 0 for negative n.
pub fn mu<C: Coeff>(n: i64, xs: &[C], ys: &[C]) -> C {
    if n < 0 {
        return C::zero();
    }
    let n = n as usize;
    let mut acc = C::zero();
    for l in 0..=n {
        let term = complete_hom(l, xs) * elem_sym(n - l, ys);
        if l % 2 == 0 {
            acc = acc + term;
        } else {
            acc = acc - term;
        }
    }
    acc
}

/// e_c = prod e_{c(i)} over the parts of a composition.
pub fn elem_sym_comp<C: Coeff>(parts: &[u32], vals: &[C]) -> C {
    parts
        .iter()
        .fold(C::one(), |acc, &p| acc * elem_sym(p as usize, vals))
}

pub fn complete_hom_comp<C: Coeff>(parts: &[u32], vals: &[C]) -> C {
    parts
        .iter()
        .fold(C::one(), |acc, &p| acc * complete_hom(p as usize, vals))
}

/// sum_{i=0}^{n} (-1)^i h_i e_{n-i} equals 1 for n = 0 and 0 for n > 0.
pub fn check_eh_identity<C: Coeff>(n: usize, vals: &[C]) -> bool {
    let mut acc = C::zero();
    for i in 0..=n {
        let term = complete_hom(i, vals) * elem_sym(n - i, vals);
        if i % 2 == 0 {
            acc = acc + term;
        } else {
            acc = acc - term;
        }
    }
    if n == 0 {
        acc.is_one()
    } else {
        acc.is_zero()
    }
}

/// The two composition identities: sum over positive compositions of n of
/// (-1)^{|c|} e_c equals (-1)^n h_n, and the same with e and h swapped.
pub fn check_ec_hc_identities<C: Coeff>(n: usize, vals: &[C]) -> bool {
    let comps = compositions_pos(n as u32);
    let mut e_sum = C::zero();
    let mut h_sum = C::zero();
    for c in &comps {
        let sign_neg = c.len() % 2 == 1;
        let e_term = elem_sym_comp(&c.parts, vals);
        let h_term = complete_hom_comp(&c.parts, vals);
        if sign_neg {
            e_sum = e_sum - e_term;
            h_sum = h_sum - h_term;
        } else {
            e_sum = e_sum + e_term;
            h_sum = h_sum + h_term;
        }
    }
    let mut rhs_e = complete_hom(n, vals);
    let mut rhs_h = elem_sym(n, vals);
    if n % 2 == 1 {
        rhs_e = -rhs_e;
        rhs_h = -rhs_h;
    }
    e_sum == rhs_e && h_sum == rhs_h
}

/// The product expansion relating e_n of all reciprocal roots times
/// z_1...z_m to convolutions split at m. `inv_roots[i]` must be 1/roots[i].
pub fn check_e_z_prod<C: Coeff>(n: usize, m: usize, roots: &[C], inv_roots: &[C]) -> Result<bool> {
    let d = roots.len();
    if roots.iter().any(|r| r.is_zero()) {
        return Err(Error::ZeroRoot);
    }
    if m < 1 || m > d || n > d {
        return Err(Error::IndexOutOfRange(format!("n={n}, m={m}, d={d}")));
    }
    let head = &roots[..m];
    let inv_tail = &inv_roots[m..];
    let prod_head = head.iter().fold(C::one(), |a, b| a * b.clone());
    let lhs = elem_sym(n, inv_roots) * prod_head;
    let mut ok = true;
    if n <= m {
        let mut rhs = C::zero();
        for i in 0..=n {
            rhs = rhs + elem_sym(m - n + i, head) * elem_sym(i, inv_tail);
        }
        ok &= lhs == rhs;
    }
    if n >= m {
        let mut rhs = C::zero();
        for i in 0..=m {
            rhs = rhs + elem_sym(i, head) * elem_sym(n - m + i, inv_tail);
        }
        ok &= lhs == rhs;
    }
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use num_traits::{One, Zero};
    use super::*;
    use crate::laurent::SparseLaurent;
    use crate::scalar::{rat, ratio, Rat};

    /// Brute-force oracle: e_k by explicit subset enumeration.
    fn elem_sym_oracle(k: usize, vals: &[Rat]) -> Rat {
        crate::comb::subsets_k(vals.len(), k)
            .into_iter()
            .map(|s| s.iter().fold(Rat::one(), |a, &i| a * vals[i].clone()))
            .fold(Rat::zero(), |a, b| a + b)
    }

    /// Brute-force oracle: h_k by explicit multiset enumeration.
    fn complete_hom_oracle(k: usize, vals: &[Rat]) -> Rat {
        fn rec(k: usize, start: usize, vals: &[Rat], acc: Rat, out: &mut Rat) {
            if k == 0 {
                *out += acc;
                return;
            }
            for i in start..vals.len() {
                rec(k - 1, i, vals, acc.clone() * vals[i].clone(), out);
            }
        }
        let mut out = Rat::zero();
        rec(k, 0, vals, Rat::one(), &mut out);
        out
    }

    #[test]
    fn elem_sym_examples() {
        // k=0 -> 1 (empty product convention)
        assert!(elem_sym(0, &[rat(5), rat(7)]).is_one());
        // k > len -> 0
        assert!(elem_sym(3, &[rat(1), rat(2)]).is_zero());
        // oracle-frozen: e_2(1,2,3) = 11
        assert_eq!(elem_sym(2, &[rat(1), rat(2), rat(3)]), rat(11));
        assert_eq!(elem_sym_oracle(2, &[rat(1), rat(2), rat(3)]), rat(11));
    }

    #[test]
    fn complete_hom_examples() {
        assert!(complete_hom(0, &[rat(9)]).is_one());
        // oracle-frozen: h_2(1,2) = 1 + 2 + 4 = 7
        assert_eq!(complete_hom(2, &[rat(1), rat(2)]), rat(7));
        assert_eq!(complete_hom_oracle(2, &[rat(1), rat(2)]), rat(7));
        // h_1 = e_1 symbolically
        let vals: Vec<SparseLaurent> = (0..3).map(SparseLaurent::var).collect();
        assert_eq!(complete_hom(1, &vals), elem_sym(1, &vals));
    }

    #[test]
    fn eh_oracle_agreement() {
        let vals = [ratio(1, 2), rat(-3), ratio(5, 7), rat(2), rat(4), rat(-1)];
        for k in 0..=5 {
            assert_eq!(elem_sym(k, &vals), elem_sym_oracle(k, &vals));
            assert_eq!(complete_hom(k, &vals), complete_hom_oracle(k, &vals));
        }
    }

    #[test]
    fn mu_examples() {
        assert!(mu::<Rat>(0, &[], &[]).is_one());
        // n=1: e1(ys) - h1(xs) = y - x
        assert_eq!(mu(1, &[rat(4)], &[rat(9)]), rat(5));
        // n=2, xs=(1), ys=(2,3): e2 - h1*e1 + h2 = 6 - 5 + 1 = 2
        assert_eq!(mu(2, &[rat(1)], &[rat(2), rat(3)]), rat(2));
        assert!(mu::<Rat>(-1, &[rat(1)], &[rat(2)]).is_zero());
    }

    #[test]
    fn eh_identity_ranges() {
        let vals = [rat(1), rat(2), rat(3)];
        for n in 0..=8 {
            assert!(check_eh_identity(n, &vals));
        }
        // symbolic, two indeterminates
        let sym: Vec<SparseLaurent> = (0..2).map(SparseLaurent::var).collect();
        for n in 0..=5 {
            assert!(check_eh_identity(n, &sym));
        }
    }

    #[test]
    fn ec_hc_identity_ranges() {
        assert!(check_ec_hc_identities(1, &[rat(5)]));
        assert!(check_ec_hc_identities(3, &[rat(1), rat(2)]));
        let sym: Vec<SparseLaurent> = (0..2).map(SparseLaurent::var).collect();
        for n in 0..=4 {
            assert!(check_ec_hc_identities(n, &sym));
        }
    }

    #[test]
    fn e_z_prod_cases() {
        let roots: Vec<Rat> = [1, 2, 3, 4].map(rat).to_vec();
        let inv: Vec<Rat> = roots.iter().map(|r| Rat::one() / r.clone()).collect();
        for n in 0..=4 {
            for m in 1..=4 {
                assert!(check_e_z_prod(n, m, &roots, &inv).unwrap(), "n={n} m={m}");
            }
        }
        // symbolic, d=4
        let z: Vec<SparseLaurent> = (0..4).map(SparseLaurent::var).collect();
        let zi: Vec<SparseLaurent> = (0..4).map(|i| SparseLaurent::var_pow(i, -1)).collect();
        for n in 0..=4 {
            for m in 1..=3 {
                assert!(check_e_z_prod(n, m, &z, &zi).unwrap(), "sym n={n} m={m}");
            }
        }
        let zero_root = [rat(0), rat(1)];
        let inv2 = [rat(0), rat(1)];
        assert!(matches!(
            check_e_z_prod(1, 1, &zero_root, &inv2),
            Err(crate::error::Error::ZeroRoot)
        ));
    }
}
