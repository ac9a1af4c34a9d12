//! The matrices M, U, V attached to a head/tail split of the roots, the
//! determinant identities det(M) = det(U+V) = prod (z_i - z_j), the row
//! degeneration under z_1 = z_{m+1}, and the factored Jacobian determinant
//! with a finite-difference cross-check for m = 2.

use num_traits::{One, Zero};

use crate::attractor::{build_alpha, pt_closed, AlgebraCtx, AttractorPoint, FieldCoeff};
use crate::error::{Error, Result};
use crate::laurent::{Mono, SparseLaurent};
use crate::matrix::Mat;
use crate::nrs2::Nrs2System;
use crate::polyspec::PolySpec;
use crate::scalar::{rat_to_f64, Coeff, Rat};
use crate::symfunc::{complete_hom, elem_sym, mu};

/// Roots split into the m selected head roots z_1..z_m and the d-m tail
/// roots z_{m+1}..z_d, with their reciprocals.
#[derive(Clone, Debug)]
pub struct RootSplit<C> {
    pub head: Vec<C>,
    pub tail: Vec<C>,
    pub inv_head: Vec<C>,
    pub inv_tail: Vec<C>,
}

impl<C: Coeff> RootSplit<C> {
    pub fn d(&self) -> usize {
        self.head.len() + self.tail.len()
    }

    pub fn m(&self) -> usize {
        self.head.len()
    }

    fn all_inv(&self) -> Vec<C> {
        let mut v = self.inv_head.clone();
        v.extend(self.inv_tail.iter().cloned());
        v
    }

    /// Coefficient a_k of the polynomial normalized to a_0 = 1:
    /// a_k = (-1)^k e_k(1/z_1, ..., 1/z_d).
    pub fn a_hat(&self, k: i64) -> C {
        if k < 0 || k as usize > self.d() {
            return C::zero();
        }
        let mut v = elem_sym(k as usize, &self.all_inv());
        if k % 2 == 1 {
            v = -v;
        }
        v
    }

    fn prod_head(&self) -> C {
        self.head.iter().fold(C::one(), |a, b| a * b.clone())
    }

    fn prod_tail(&self) -> C {
        self.tail.iter().fold(C::one(), |a, b| a * b.clone())
    }
}

impl RootSplit<Rat> {
    pub fn from_roots(head: Vec<Rat>, tail: Vec<Rat>) -> Result<Self> {
        if head.iter().chain(&tail).any(|z| z.is_zero()) {
            return Err(Error::ZeroRoot);
        }
        let inv_head = head.iter().map(|z| Rat::one() / z.clone()).collect();
        let inv_tail = tail.iter().map(|z| Rat::one() / z.clone()).collect();
        Ok(RootSplit {
            head,
            tail,
            inv_head,
            inv_tail,
        })
    }

    pub fn from_spec(spec: &PolySpec, selection: &[usize]) -> Result<Self> {
        let head: Vec<Rat> = selection.iter().map(|&i| spec.roots[i].clone()).collect();
        let tail: Vec<Rat> = (0..spec.degree())
            .filter(|i| !selection.contains(i))
            .map(|i| spec.roots[i].clone())
            .collect();
        Self::from_roots(head, tail)
    }
}

impl RootSplit<SparseLaurent> {
    /// Fully symbolic split: head variables 0..m-1, tail variables m..d-1.
    pub fn symbolic(d: usize, m: usize) -> Self {
        Self::symbolic_vars((0..m as u32).collect(), (m as u32..d as u32).collect())
    }

    /// Symbolic split with the substitution z_{m+1} = z_1 already applied:
    /// the first tail root reuses variable 0.
    pub fn symbolic_z1_eq_zm1(d: usize, m: usize) -> Self {
        let mut tail_vars: Vec<u32> = vec![0];
        tail_vars.extend(m as u32 + 1..d as u32);
        Self::symbolic_vars((0..m as u32).collect(), tail_vars)
    }

    fn symbolic_vars(head_vars: Vec<u32>, tail_vars: Vec<u32>) -> Self {
        RootSplit {
            head: head_vars.iter().map(|&v| SparseLaurent::var(v)).collect(),
            tail: tail_vars.iter().map(|&v| SparseLaurent::var(v)).collect(),
            inv_head: head_vars
                .iter()
                .map(|&v| SparseLaurent::var_pow(v, -1))
                .collect(),
            inv_tail: tail_vars
                .iter()
                .map(|&v| SparseLaurent::var_pow(v, -1))
                .collect(),
        }
    }
}

/// The column operations col(j1) -> col(j1) - a_{j2-j1} col(j2) (j2 from m-1
/// down to 2, j1 from j2-1 down to 1) followed by the row operations
/// row(i1) -> row(i1) - h_{i1-i2}(z_tail) row(i2) (i2 from 2 up to m-1, i1
/// from i2+1 up to m) reduce M to U + V. Both sequences, in application
/// order.
fn reduction_ops(m: usize) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let mut col_ops = Vec::new();
    let mut j2 = m as i64 - 1;
    while j2 >= 2 {
        let mut j1 = j2 - 1;
        while j1 >= 1 {
            col_ops.push((j1 as usize, j2 as usize));
            j1 -= 1;
        }
        j2 -= 1;
    }
    let mut row_ops = Vec::new();
    for i2 in 2..=m.saturating_sub(1) {
        for i1 in i2 + 1..=m {
            row_ops.push((i1, i2));
        }
    }
    (col_ops, row_ops)
}

/// The matrix M: the unique matrix carried to U + V by the determinant-
/// preserving reduction in `reduction_ops`, built here by inverting those
/// operations. For m <= 2 no operations occur and M = U + V entrywise, so
/// row 1 consists of the bare mu convolutions and rows i >= 2 of their
/// prod z_head multiples with the lower-triangular e correction.
pub fn build_m_matrix<C: Coeff>(split: &RootSplit<C>) -> Mat<C> {
    let m = split.m();
    let mut mat = build_u_matrix(split).add(&build_v_matrix(split));
    let (col_ops, row_ops) = reduction_ops(m);
    for &(i1, i2) in row_ops.iter().rev() {
        for j in 0..m {
            let add = complete_hom(i1 - i2, &split.tail) * mat.get(i2 - 1, j).clone();
            mat.set(i1 - 1, j, mat.get(i1 - 1, j).clone() + add);
        }
    }
    for &(j1, j2) in col_ops.iter().rev() {
        let a = split.a_hat((j2 - j1) as i64);
        for i in 0..m {
            let add = a.clone() * mat.get(i, j2 - 1).clone();
            mat.set(i, j1 - 1, mat.get(i, j1 - 1).clone() + add);
        }
    }
    mat
}

/// Applies the forward reduction to M and checks the result is U + V.
pub fn check_reduction_to_uv<C: Coeff>(split: &RootSplit<C>) -> bool {
    let m = split.m();
    let mut mat = build_m_matrix(split);
    let (col_ops, row_ops) = reduction_ops(m);
    for &(j1, j2) in &col_ops {
        let a = split.a_hat((j2 - j1) as i64);
        for i in 0..m {
            let sub = a.clone() * mat.get(i, j2 - 1).clone();
            mat.set(i, j1 - 1, mat.get(i, j1 - 1).clone() - sub);
        }
    }
    for &(i1, i2) in &row_ops {
        for j in 0..m {
            let sub = complete_hom(i1 - i2, &split.tail) * mat.get(i2 - 1, j).clone();
            mat.set(i1 - 1, j, mat.get(i1 - 1, j).clone() - sub);
        }
    }
    mat == build_u_matrix(split).add(&build_v_matrix(split))
}

pub fn build_u_matrix<C: Coeff>(split: &RootSplit<C>) -> Mat<C> {
    let d = split.d() as i64;
    let m = split.m();
    let prod_head = split.prod_head();
    Mat::from_fn(m, m, |r, c| {
        let i = (r + 1) as i64;
        let j = (c + 1) as i64;
        let base = mu(d - 2 * m as i64 + j - i + 1, &split.head, &split.tail);
        if i == 1 {
            base
        } else {
            base * prod_head.clone()
        }
    })
}

pub fn build_v_matrix<C: Coeff>(split: &RootSplit<C>) -> Mat<C> {
    let m = split.m();
    let prod_tail = split.prod_tail();
    Mat::from_fn(m, m, |r, c| {
        let i = (r + 1) as i64;
        let j = (c + 1) as i64;
        if j < i {
            -(mu(i - j - 1, &split.inv_head, &split.inv_tail) * prod_tail.clone())
        } else {
            C::zero()
        }
    })
}

/// prod_{j <= m, i > m} (z_i - z_j) over the split.
pub fn target_product<C: Coeff>(split: &RootSplit<C>) -> C {
    let mut acc = C::one();
    for h in &split.head {
        for t in &split.tail {
            acc = acc * (t.clone() - h.clone());
        }
    }
    acc
}

pub fn check_det_m_eq_det_uv<C: Coeff>(split: &RootSplit<C>) -> bool {
    let m = build_m_matrix(split);
    let uv = build_u_matrix(split).add(&build_v_matrix(split));
    m.det_cofactor() == uv.det_cofactor()
}

/// det(U+V) = prod (z_i - z_j); also checks det(M) against the same product.
pub fn check_factorization<C: Coeff>(split: &RootSplit<C>) -> bool {
    let target = target_product(split);
    let uv = build_u_matrix(split).add(&build_v_matrix(split));
    uv.det_cofactor() == target && build_m_matrix(split).det_cofactor() == target
}

/// z_1 row_1 + sum_{i=2}^m e_{m-i}(1/z_2..1/z_m) row_i, columnwise. Zero for
/// every column exactly when z_1 = z_{m+1}.
pub fn lin_combo_residual<C: Coeff>(mat: &Mat<C>, split: &RootSplit<C>) -> Vec<C> {
    let m = split.m();
    let z1 = split.head[0].clone();
    let inv_rest = &split.inv_head[1..];
    (0..m)
        .map(|c| {
            let mut acc = z1.clone() * mat.get(0, c).clone();
            for i in 2..=m {
                acc = acc + elem_sym(m - i, inv_rest) * mat.get(i - 1, c).clone();
            }
            acc
        })
        .collect()
}

/// The row combination annihilates U+V, and both determinants vanish. The
/// combination is stated against U+V because the reduction mixes rows of M
/// with tail-dependent multipliers, which reweights the null covector.
pub fn check_lin_combo<C: Coeff>(split: &RootSplit<C>) -> bool {
    let uv = build_u_matrix(split).add(&build_v_matrix(split));
    lin_combo_residual(&uv, split).iter().all(|x| x.is_zero())
        && uv.det_cofactor().is_zero()
        && build_m_matrix(split).det_cofactor().is_zero()
}

/// Symbolic det(U+V) has degree m in each tail variable, and the coefficient
/// of prod z_tail^m is exactly 1.
pub fn check_degree_and_top_coeff(d: usize, m: usize) -> bool {
    let split = RootSplit::symbolic(d, m);
    let det = build_u_matrix(&split)
        .add(&build_v_matrix(&split))
        .det_cofactor();
    let tail_vars: Vec<u32> = (m as u32..d as u32).collect();
    for &v in &tail_vars {
        if det.max_exponent(v) != Some(m as i32) {
            return false;
        }
    }
    let mut top = SparseLaurent::zero();
    for (mono, c) in det.terms() {
        if tail_vars.iter().all(|&v| mono.exponent(v) == m as i32) {
            let mut rest = Mono::unit();
            for (v, e) in mono.vars() {
                if !tail_vars.contains(&v) {
                    rest = rest.mul(&Mono::var(v, e));
                }
            }
            top = top + SparseLaurent::monomial(rest, c.clone());
        }
    }
    top.is_one()
}

/// Split of the context's roots by a selection, in the context's field.
pub fn split_from_ctx<C: FieldCoeff>(ctx: &AlgebraCtx<C>, selection: &[usize]) -> RootSplit<C> {
    let head = ctx.selected_roots(selection);
    let tail: Vec<C> = (0..ctx.degree())
        .filter(|i| !selection.contains(i))
        .map(|i| ctx.roots[i].clone())
        .collect();
    let inv_head = head.iter().map(|z| C::one() / z.clone()).collect();
    let inv_tail = tail.iter().map(|z| C::one() / z.clone()).collect();
    RootSplit {
        head,
        tail,
        inv_head,
        inv_tail,
    }
}

/// Dual route for the determinant identity: the Jacobian assembled from the
/// shifted-tail-sum derivative closed forms, scaled by ((a_m/a_0) prod z)^m,
/// must equal both det(U+V) and the pairwise root-difference product.
pub fn check_jacobian_route<C: FieldCoeff>(ctx: &AlgebraCtx<C>, selection: &[usize]) -> Result<bool> {
    let m = selection.len();
    let alpha = build_alpha(ctx, m, selection)?;
    let jac = jacobian_closed(ctx, &alpha)?;
    let prod_all = ctx.roots.iter().fold(C::one(), |a, b| a * b.clone());
    let base = ctx.a(m as i64) / ctx.a(0) * prod_all;
    let lhs = jac.det_cofactor() * pow_c(&base, m);
    let split = split_from_ctx(ctx, selection);
    let uv = build_u_matrix(&split)
        .add(&build_v_matrix(&split))
        .det_cofactor();
    Ok(lhs == uv && uv == target_product(&split))
}

/// Jacobian of the NRS(m) residual map at an attractor point, assembled from
/// the closed forms for the partial derivatives of the shifted tail sums.
/// Requires a_{m-1} != 0 (the closed forms divide by it).
pub fn jacobian_closed<C: FieldCoeff>(
    ctx: &AlgebraCtx<C>,
    alpha: &AttractorPoint<C>,
) -> Result<Mat<C>> {
    let d = ctx.degree() as i64;
    let m = alpha.m;
    let am = ctx.a(m as i64);
    let am1 = ctx.a(m as i64 - 1);
    if am.is_zero() {
        return Err(Error::ZeroAm);
    }
    if am1.is_zero() {
        return Err(Error::ZeroAm1);
    }
    let head = ctx.selected_roots(&alpha.selection);
    let tail: Vec<C> = (0..ctx.degree())
        .filter(|i| !alpha.selection.contains(i))
        .map(|i| ctx.roots[i].clone())
        .collect();
    let r = -(am1 / am.clone());
    let prod_all = ctx.roots.iter().fold(C::one(), |a, b| a * b.clone());
    // the a_0 factor makes the expression invariant under scaling all a_i
    let mut kk = ctx.a(0) / -(am.clone() * prod_all);
    if d % 2 == 1 {
        kk = -kk;
    }
    // T(q) = sum_l (-1)^l h_{d-q-l}(head) e_l(tail) = (-1)^{d-q} mu_{d-q}
    let t_sum = |q: i64| -> C {
        let mut v = mu(d - q, &head, &tail);
        if (d - q).rem_euclid(2) == 1 {
            v = -v;
        }
        v
    };
    // partial of PT(x, s) wrt x_j at alpha
    let d_pt = |s: i64, j: usize| -> C {
        if j == 0 {
            let mut v = kk.clone() * t_sum(m as i64 + s);
            if s == 0 {
                v = v + C::one();
            }
            v
        } else {
            let mut acc = C::zero();
            for k in 2..=(m - j + 1) as i64 {
                acc = acc - ctx.a(m as i64 - 1 - j as i64 - (k - 2)) / am.clone()
                    * t_sum(m as i64 - 1 + k + s);
            }
            kk.clone() * acc / pow_c(&r, j)
        }
    };
    let mut pt = Vec::with_capacity(m + 1);
    for s in 0..=m as i64 {
        // the shifted tail sum is an empty sum beyond s = d - m + 1
        if s > d - m as i64 + 1 {
            pt.push(C::zero());
        } else {
            pt.push(pt_closed(ctx, alpha, s)?);
        }
    }
    Ok(Mat::from_fn(m, m, |i, j| {
        let mut acc = if i == 0 {
            d_pt(0, j)
        } else {
            let mut v = C::zero();
            for l in 0..i as i64 {
                v = v + alpha.coords[i - l as usize].clone()
                    * pow_c(&r, l as usize)
                    * d_pt(l + 1, j);
            }
            if 1 <= j && j <= i {
                v = v + pow_c(&r, i - j) * pt[i - j + 1].clone();
            }
            v
        };
        if i == j {
            acc = acc - C::one();
        }
        acc
    }))
}

fn pow_c<C: Coeff>(x: &C, n: usize) -> C {
    let mut acc = C::one();
    for _ in 0..n {
        acc = acc * x.clone();
    }
    acc
}

/// Right side of the factorization theorem with the polynomial's actual
/// coefficients: prod (z_i - z_j) / (a_m prod z_i)^m.
pub fn factored_det(spec: &PolySpec, selection: &[usize]) -> Result<Rat> {
    let m = selection.len();
    if spec.coeff(m as i64).is_zero() {
        return Err(Error::ZeroAm);
    }
    let split = RootSplit::from_spec(spec, selection)?;
    let prod_all = spec.roots.iter().fold(Rat::one(), |a, b| a * b.clone());
    let mut denom = Rat::one();
    let base = spec.coeff(m as i64) * prod_all;
    for _ in 0..m {
        denom *= base.clone();
    }
    Ok(target_product(&split) / denom)
}

/// Central finite-difference Jacobian of the NRS(2) residual scaled by 1/a_0
/// (the scaling under which the determinant equals `factored_det` with the
/// actual coefficients).
pub fn jacobian_numeric_m2(spec: &PolySpec, alpha: &AttractorPoint<Rat>) -> Result<[[f64; 2]; 2]> {
    if alpha.m != 2 {
        return Err(Error::IndexOutOfRange(format!("m={} (need 2)", alpha.m)));
    }
    let sys = Nrs2System::new(spec.clone())?;
    let a0 = rat_to_f64(&spec.a0);
    let x = [rat_to_f64(&alpha.coords[0]), rat_to_f64(&alpha.coords[1])];
    let mut jac = [[0.0; 2]; 2];
    for i in 0..2 {
        let h = 1e-6 * x[i].abs().max(1.0);
        let mut xp = x;
        let mut xm = x;
        xp[i] += h;
        xm[i] -= h;
        if xp[i] == x[i] || xm[i] == x[i] {
            return Err(Error::SingularStep);
        }
        let fp = sys.eval_residual_f64(xp[0], xp[1]);
        let fm = sys.eval_residual_f64(xm[0], xm[1]);
        jac[0][i] = (fp.0 - fm.0) / (2.0 * h) / a0;
        jac[1][i] = (fp.1 - fm.1) / (2.0 * h) / a0;
    }
    Ok(jac)
}

pub fn det2(j: &[[f64; 2]; 2]) -> f64 {
    j[0][0] * j[1][1] - j[0][1] * j[1][0]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::attractor::{build_alpha, AlgebraCtx};
    use crate::comb::subsets_k;
    use crate::scalar::{rat, ratio};

    fn rational_split(roots: &[i64], m: usize) -> RootSplit<Rat> {
        let rr: Vec<Rat> = roots.iter().map(|&x| rat(x)).collect();
        RootSplit::from_roots(rr[..m].to_vec(), rr[m..].to_vec()).unwrap()
    }

    #[test]
    fn m1_matrix_is_root_product() {
        // M = [mu_{d-1}(z1; tail)] = [prod (z_i - z_1)]
        let split = RootSplit::symbolic(3, 1);
        let m = build_m_matrix(&split);
        let z = |i| SparseLaurent::var(i);
        let expect = (z(1) - z(0)) * (z(2) - z(0));
        assert_eq!(m.det_cofactor(), expect);
        assert_eq!(m.det_cofactor(), target_product(&split));
    }

    #[test]
    fn v_entry_example_d3_m2() {
        // V_{2,1} = -mu_0 * z3 = -z3; diagonal and above zero
        let split = RootSplit::symbolic(3, 2);
        let v = build_v_matrix(&split);
        assert_eq!(*v.get(1, 0), -SparseLaurent::var(2));
        assert!(v.get(0, 0).is_zero());
        assert!(v.get(0, 1).is_zero());
        assert!(v.get(1, 1).is_zero());
    }

    #[test]
    fn symbolic_factorization_small() {
        for (d, m) in [(3, 2), (4, 2), (4, 3)] {
            let split = RootSplit::symbolic(d, m);
            assert!(check_det_m_eq_det_uv(&split), "detM=detUV (d={d},m={m})");
            assert!(check_factorization(&split), "product (d={d},m={m})");
            assert!(check_reduction_to_uv(&split), "reduction (d={d},m={m})");
        }
    }

    #[test]
    fn rational_factorization_larger() {
        for (roots, m) in [
            (vec![2i64, -3, 5, 7, 11], 2),
            (vec![1, 2, -4, 9, 13], 3),
            (vec![3, -1, 2, 5, -7, 8], 2),
        ] {
            let split = rational_split(&roots, m);
            assert!(check_det_m_eq_det_uv(&split));
            assert!(check_factorization(&split));
            assert!(check_reduction_to_uv(&split));
        }
    }

    #[test]
    fn jacobian_route_symbolic() {
        use crate::laurent::Frac;
        for (d, m) in [(3usize, 2usize), (4, 2)] {
            let ctx = AlgebraCtx::<Frac<SparseLaurent>>::symbolic(d);
            let sel: Vec<usize> = (0..m).collect();
            assert!(check_jacobian_route(&ctx, &sel).unwrap(), "(d={d},m={m})");
        }
    }

    #[test]
    fn jacobian_route_rational() {
        for (roots, m) in [
            (vec![2i64, -3, 5, 7, 11], 2usize),
            (vec![1, 2, -4, 9, 13], 3),
            (vec![3, -1, 2, 5, -7, 8], 2),
        ] {
            let rr: Vec<Rat> = roots.iter().map(|&x| rat(x)).collect();
            let spec = PolySpec::new(rat(1), rr).unwrap();
            let ctx = AlgebraCtx::from_spec(&spec);
            let sel: Vec<usize> = (0..m).collect();
            assert!(check_jacobian_route(&ctx, &sel).unwrap());
            // a non-leading selection as well
            let d = spec.degree();
            let sel2: Vec<usize> = (d - m..d).collect();
            assert!(check_jacobian_route(&ctx, &sel2).unwrap());
        }
    }

    #[test]
    fn lin_combo_vanishes() {
        for (d, m) in [(3, 2), (4, 2), (4, 3)] {
            let split = RootSplit::symbolic_z1_eq_zm1(d, m);
            assert!(check_lin_combo(&split), "(d={d},m={m})");
        }
        // rational with z1 = z3 for d=4, m=2
        let rr: Vec<Rat> = [2i64, 3, 2, 5].iter().map(|&x| rat(x)).collect();
        let split = RootSplit::from_roots(rr[..2].to_vec(), rr[2..].to_vec()).unwrap();
        assert!(check_lin_combo(&split));
        // and the full determinant vanishes too
        assert!(build_u_matrix(&split)
            .add(&build_v_matrix(&split))
            .det_cofactor()
            .is_zero());
    }

    #[test]
    fn degree_and_top_coeff() {
        assert!(check_degree_and_top_coeff(3, 2));
        assert!(check_degree_and_top_coeff(4, 2));
        assert!(check_degree_and_top_coeff(4, 3));
    }

    #[test]
    fn factored_det_worked_value() {
        let spec = PolySpec::monic(vec![rat(1), rat(2), rat(3)]).unwrap();
        assert_eq!(factored_det(&spec, &[0, 1]).unwrap(), ratio(1, 648));
        // repeated root across the split kills a factor
        let spec2 = PolySpec::monic(vec![rat(2), rat(3), rat(2), rat(5)]).unwrap();
        assert!(factored_det(&spec2, &[0, 1]).unwrap().is_zero());
    }

    #[test]
    fn numeric_jacobian_matches_factored_det() {
        let spec = PolySpec::monic(vec![rat(1), rat(2), rat(3)]).unwrap();
        let ctx = AlgebraCtx::from_spec(&spec);
        for sel in subsets_k(3, 2) {
            let alpha = build_alpha(&ctx, 2, &sel).unwrap();
            let jac = jacobian_numeric_m2(&spec, &alpha).unwrap();
            let exact = rat_to_f64(&factored_det(&spec, &sel).unwrap());
            let rel = (det2(&jac) - exact).abs() / exact.abs();
            assert!(rel < 1e-6, "sel={sel:?} rel={rel}");
        }
        let exact = rat_to_f64(&factored_det(&spec, &[0, 1]).unwrap());
        assert!((exact - 1.0 / 648.0).abs() < 1e-15);
    }

    #[test]
    fn numeric_jacobian_vanishing_case() {
        let spec = PolySpec::monic(vec![rat(2), rat(3), rat(2), rat(5)]).unwrap();
        let ctx = AlgebraCtx::from_spec(&spec);
        let alpha = build_alpha(&ctx, 2, &[0, 1]).unwrap();
        let jac = jacobian_numeric_m2(&spec, &alpha).unwrap();
        assert!(det2(&jac).abs() < 1e-6);
    }
}
