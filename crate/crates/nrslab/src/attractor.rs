//! The explicitly constructed attractor points of NRS(m): the set V(m), the
//! shifted tail sums PT_m evaluated two independent ways, and the exact
//! fixed-point certification.

use std::ops::Div;

use crate::comb::{compositions_pos, subsets_k};
use crate::error::{Error, Result};
use crate::laurent::{Frac, SparseLaurent};
use crate::polyspec::PolySpec;
use crate::scalar::{Coeff, Rat};
use crate::symfunc::elem_sym;
use crate::symfunc::complete_hom;

/// Field-like coefficients: everything in `Coeff` plus exact division.
pub trait FieldCoeff: Coeff + Div<Output = Self> {}
impl<T: Coeff + Div<Output = T>> FieldCoeff for T {}

/// Roots, reciprocal roots, and coefficients a_0..a_d of the input
/// polynomial, all in one coefficient field.
#[derive(Clone, Debug)]
pub struct AlgebraCtx<C> {
    pub roots: Vec<C>,
    pub inv_roots: Vec<C>,
    coeffs: Vec<C>,
}

impl AlgebraCtx<Rat> {
    pub fn from_spec(spec: &PolySpec) -> Self {
        AlgebraCtx {
            roots: spec.roots.clone(),
            inv_roots: spec.inv_roots(),
            coeffs: spec.coeffs().to_vec(),
        }
    }
}

impl AlgebraCtx<Frac<SparseLaurent>> {
    /// Fully symbolic roots z_1..z_d (variable ids 0..d-1), normalized a0 = 1.
    pub fn symbolic(d: usize) -> Self {
        let roots: Vec<_> = (0..d as u32)
            .map(|i| Frac::from_ring(SparseLaurent::var(i)))
            .collect();
        let inv_roots: Vec<_> = (0..d as u32)
            .map(|i| Frac::from_ring(SparseLaurent::var_pow(i, -1)))
            .collect();
        let mut coeffs = Vec::with_capacity(d + 1);
        for i in 0..=d {
            let mut c = elem_sym(i, &inv_roots);
            if i % 2 == 1 {
                c = -c;
            }
            coeffs.push(c);
        }
        AlgebraCtx {
            roots,
            inv_roots,
            coeffs,
        }
    }
}

impl<C: FieldCoeff> AlgebraCtx<C> {
    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    /// a_i with zero outside 0 <= i <= d.
    pub fn a(&self, i: i64) -> C {
        if i < 0 || i as usize >= self.coeffs.len() {
            C::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    fn tail_indices(&self, selection: &[usize]) -> Vec<usize> {
        (0..self.degree())
            .filter(|i| !selection.contains(i))
            .collect()
    }

    pub fn selected_roots(&self, selection: &[usize]) -> Vec<C> {
        selection.iter().map(|&i| self.roots[i].clone()).collect()
    }

    pub fn tail_inv_roots(&self, selection: &[usize]) -> Vec<C> {
        self.tail_indices(selection)
            .iter()
            .map(|&i| self.inv_roots[i].clone())
            .collect()
    }
}

fn pow_c<C: Coeff>(x: &C, n: usize) -> C {
    let mut acc = C::one();
    for _ in 0..n {
        acc = acc * x.clone();
    }
    acc
}

/// One attractor point: the selected m roots play z_1..z_m.
#[derive(Clone, Debug, PartialEq)]
pub struct AttractorPoint<C> {
    pub m: usize,
    pub selection: Vec<usize>,
    pub coords: Vec<C>,
}

/// Builds alpha for a given m-subset of the roots:
/// alpha_0 = sum of selected roots, and for l >= 1
/// alpha_l = h_{l-1}(1/z_tail) (-a_{m-1}/a_m)^l (a_m/a_0) (-1)^m prod z_sel.
pub fn build_alpha<C: FieldCoeff>(
    ctx: &AlgebraCtx<C>,
    m: usize,
    selection: &[usize],
) -> Result<AttractorPoint<C>> {
    let d = ctx.degree();
    if m < 1 || m > d {
        return Err(Error::IndexOutOfRange(format!("m={m}, d={d}")));
    }
    if selection.len() != m
        || selection.iter().any(|&i| i >= d)
        || (1..m).any(|i| selection[i] <= selection[i - 1])
    {
        return Err(Error::IndexOutOfRange("selection".into()));
    }
    if ctx.a(m as i64).is_zero() {
        return Err(Error::ZeroAm);
    }
    if ctx.roots.iter().any(|r| r.is_zero()) {
        return Err(Error::ZeroRoot);
    }
    let sel = ctx.selected_roots(selection);
    let inv_tail = ctx.tail_inv_roots(selection);
    let prod_sel = sel.iter().fold(C::one(), |a, b| a * b.clone());
    let ratio = -(ctx.a(m as i64 - 1) / ctx.a(m as i64));
    let am_over_a0 = ctx.a(m as i64) / ctx.a(0);
    let sign_m = if m % 2 == 0 { C::one() } else { -C::one() };

    let mut coords = Vec::with_capacity(m);
    coords.push(sel.iter().fold(C::zero(), |a, b| a + b.clone()));
    for l in 1..m {
        let c = complete_hom(l - 1, &inv_tail)
            * pow_c(&ratio, l)
            * am_over_a0.clone()
            * sign_m.clone()
            * prod_sel.clone();
        coords.push(c);
    }
    Ok(AttractorPoint {
        m,
        selection: selection.to_vec(),
        coords,
    })
}

/// V(m): one point per m-subset, deduplicated by exact coordinate equality.
pub fn v_set<C: FieldCoeff>(ctx: &AlgebraCtx<C>, m: usize) -> Result<Vec<AttractorPoint<C>>> {
    let mut out: Vec<AttractorPoint<C>> = Vec::new();
    for sel in subsets_k(ctx.degree(), m) {
        let p = build_alpha(ctx, m, &sel)?;
        if !out.iter().any(|q| q.coords == p.coords) {
            out.push(p);
        }
    }
    Ok(out)
}

/// PT_m(alpha; s) from the closed forms: the three cases s = 0, s = 1 and
/// 2 <= s <= d-m+1.
pub fn pt_closed<C: FieldCoeff>(
    ctx: &AlgebraCtx<C>,
    alpha: &AttractorPoint<C>,
    s: i64,
) -> Result<C> {
    let d = ctx.degree() as i64;
    let m = alpha.m as i64;
    if s < 0 || s > d - m + 1 {
        return Err(Error::IndexOutOfRange(format!("s={s}")));
    }
    let sel = ctx.selected_roots(&alpha.selection);
    let prod_sel = sel.iter().fold(C::one(), |a, b| a * b.clone());
    let am = ctx.a(m);
    Ok(match s {
        0 => ctx.a(m - 1) / am + sel.iter().fold(C::zero(), |a, b| a + b.clone()),
        1 => {
            let t = ctx.a(0) / (am * prod_sel);
            if m % 2 == 0 {
                C::one() - t
            } else {
                C::one() + t
            }
        }
        _ => {
            let inv_tail = ctx.tail_inv_roots(&alpha.selection);
            let mut v = ctx.a(0) * elem_sym((s - 1) as usize, &inv_tail) / (am * prod_sel);
            if (s - m).rem_euclid(2) == 1 {
                v = -v;
            }
            v
        }
    })
}

/// expr_m(alpha; k) = (-1)^{k-1} e_k(z_sel) for k >= 1.
pub fn expr_alpha<C: FieldCoeff>(ctx: &AlgebraCtx<C>, alpha: &AttractorPoint<C>, k: usize) -> C {
    let sel = ctx.selected_roots(&alpha.selection);
    let mut v = elem_sym(k, &sel);
    if k % 2 == 0 {
        v = -v;
    }
    v
}

/// PT_m(alpha; s) through the definitional positive-composition expansion.
pub fn pt_composition<C: FieldCoeff>(
    ctx: &AlgebraCtx<C>,
    alpha: &AttractorPoint<C>,
    s: i64,
) -> Result<C> {
    let d = ctx.degree() as i64;
    let m = alpha.m as i64;
    if s < 0 || s > d - m + 1 {
        return Err(Error::IndexOutOfRange(format!("s={s}")));
    }
    let am = ctx.a(m);
    let mut acc = C::zero();
    for i in 0..=(d - m - s + 1) {
        if i + s < 2 {
            continue;
        }
        let mut comp_sum = C::zero();
        for c in compositions_pos(i as u32) {
            let mut term = C::one();
            for &p in &c.parts {
                term = term * expr_alpha(ctx, alpha, p as usize);
            }
            comp_sum = comp_sum + term;
        }
        acc = acc - ctx.a(m - 1 + i + s) / am.clone() * comp_sum;
    }
    Ok(acc)
}

/// The m fixed-point relations of the iteration maps at alpha, with PT taken
/// from the compositional route. All must hold exactly.
pub fn certify_fixed_point<C: FieldCoeff>(
    ctx: &AlgebraCtx<C>,
    alpha: &AttractorPoint<C>,
) -> Result<bool> {
    let m = alpha.m;
    let d = ctx.degree() as i64;
    let ratio = -(ctx.a(m as i64 - 1) / ctx.a(m as i64));
    // the shifted tail sum is empty beyond s = d - m + 1
    let pt = |s: i64| {
        if s > d - m as i64 + 1 {
            Ok(C::zero())
        } else {
            pt_composition(ctx, alpha, s)
        }
    };

    // alpha_0 = -a_{m-1}/a_m + PT(alpha; 0)
    if alpha.coords[0] != ratio.clone() + pt(0)? {
        return Ok(false);
    }
    if m >= 2 {
        // alpha_1 = -a_{m-1}/a_m + alpha_1 PT(alpha; 1)
        let rhs = ratio.clone() + alpha.coords[1].clone() * pt(1)?;
        if alpha.coords[1] != rhs {
            return Ok(false);
        }
    }
    for i in 2..m {
        let mut rhs = C::zero();
        for j in 0..i {
            rhs = rhs
                + alpha.coords[i - j].clone() * pow_c(&ratio, j) * pt(j as i64 + 1)?;
        }
        if alpha.coords[i] != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
