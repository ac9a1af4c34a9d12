//! Directed simple graphs: enumeration, the edge-weight generating identity
//! against signed lattice-path counts, and the bijection between adjacency
//! matrices and size-bounded subset sequences.

use std::collections::BTreeSet;

use crate::comb::compositions_nn;
use crate::error::{Error, Result};
use crate::lgv::{enumerate_vd, signed_path_count, VdVariant};
use crate::scalar::Coeff;
use crate::symfunc::elem_sym;

/// Adjacency matrix of a directed graph with no loops, no parallel edges,
/// and no 2-cycles. Entry (i, j) means an edge from i to j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DsgMatrix {
    pub r: usize,
    bits: Vec<bool>,
}

impl DsgMatrix {
    pub fn empty(r: usize) -> Self {
        DsgMatrix {
            r,
            bits: vec![false; r * r],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.r + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        assert!(i != j || !v, "diagonal must stay zero");
        self.bits[i * self.r + j] = v;
    }

    pub fn is_valid(&self) -> bool {
        for i in 0..self.r {
            if self.get(i, i) {
                return false;
            }
            for j in 0..i {
                if self.get(i, j) && self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Edges as (from, to), 0-based.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.r {
            for j in 0..self.r {
                if self.get(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Leading principal submatrix on the first k vertices.
    pub fn principal(&self, k: usize) -> DsgMatrix {
        let mut m = DsgMatrix::empty(k);
        for i in 0..k {
            for j in 0..k {
                if self.get(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Column in-degree sequence.
    pub fn rho2(&self) -> Vec<usize> {
        (0..self.r)
            .map(|j| (0..self.r).filter(|&i| self.get(i, j)).count())
            .collect()
    }
}

/// All directed simple graphs on d vertices: each unordered pair is absent,
/// oriented one way, or the other, giving 3^binom(d,2) matrices.
pub fn enumerate_dsg(d: usize) -> Vec<DsgMatrix> {
    let pairs: Vec<(usize, usize)> = (0..d)
        .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
        .collect();
    let mut out = vec![DsgMatrix::empty(d)];
    for &(i, j) in &pairs {
        let mut next = Vec::with_capacity(out.len() * 3);
        for m in out {
            next.push(m.clone());
            let mut a = m.clone();
            a.set(i, j, true);
            next.push(a);
            let mut b = m;
            b.set(j, i, true);
            next.push(b);
        }
        out = next;
    }
    out
}

/// w(G) = product of z_i over edges (i, j), summed over the graphs with
/// exactly l edges.
pub fn dsg_weight_sum<C: Coeff>(d: usize, l: usize, roots: &[C]) -> C {
    assert_eq!(roots.len(), d);
    let mut acc = C::zero();
    for g in enumerate_dsg(d) {
        if g.edge_count() != l {
            continue;
        }
        let w = g
            .edges()
            .iter()
            .fold(C::one(), |acc, &(i, _)| acc * roots[i].clone());
        acc = acc + w;
    }
    acc
}

/// Edge-weight generating identity: the l-edge weight sum equals
/// sum over compositions c of l into d-1 parts of e_c(z) times the signed
/// count of vertex-disjoint path systems VD(c).
pub fn check_simple_graph_gen<C: Coeff>(d: usize, l: usize, roots: &[C]) -> bool {
    let lhs = dsg_weight_sum(d, l, roots);
    let mut rhs = C::zero();
    for c in compositions_nn(l as u32, (d - 1) as u32) {
        if c.parts.iter().any(|&p| p as usize > d) {
            continue;
        }
        let ec = c
            .parts
            .iter()
            .fold(C::one(), |acc, &p| acc * elem_sym(p as usize, roots));
        if ec.is_zero() {
            continue;
        }
        let parts: Vec<i64> = c.parts.iter().map(|&p| p as i64).collect();
        let signed = signed_path_count(&enumerate_vd(d, &parts, VdVariant::Full));
        rhs = rhs + ec * C::from_int(signed);
    }
    lhs == rhs
}

/// A sequence of subsets of [r], with members written 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SbSequence {
    pub r: usize,
    pub sets: Vec<BTreeSet<usize>>,
}

impl SbSequence {
    pub fn new(r: usize, sets: Vec<BTreeSet<usize>>) -> Self {
        assert!(sets.iter().all(|s| s.iter().all(|&x| 1 <= x && x <= r)));
        SbSequence { r, sets }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn is_size_bounded(&self) -> bool {
        self.sets.iter().enumerate().all(|(i, s)| s.len() <= i + 1)
    }

    /// Smallest 1-based position containing j, or 0 if absent.
    pub fn l_index(&self, j: usize) -> usize {
        self.sets
            .iter()
            .position(|s| s.contains(&j))
            .map_or(0, |i| i + 1)
    }

    /// R_j: drop the last set when j never appears; otherwise drop the first
    /// set containing j and remove j from every later set.
    pub fn reduce(&self, j: usize) -> SbSequence {
        let lj = self.l_index(j);
        let sets = if lj == 0 {
            self.sets[..self.sets.len().saturating_sub(1)].to_vec()
        } else {
            let mut out: Vec<BTreeSet<usize>> = self.sets[..lj - 1].to_vec();
            for s in &self.sets[lj..] {
                let mut t = s.clone();
                t.remove(&j);
                out.push(t);
            }
            out
        };
        SbSequence { r: self.r, sets }
    }

    /// Per-element occurrence counts across the sequence.
    pub fn rho1(&self) -> Vec<usize> {
        (1..=self.r)
            .map(|j| self.sets.iter().filter(|s| s.contains(&j)).count())
            .collect()
    }
}

/// Membership in B(k, r): the sequence and every iterated reduction
/// R_i(R_{i+1}(... R_r(sigma))) must be size-bounded.
pub fn is_in_b(sigma: &SbSequence) -> bool {
    if !sigma.is_size_bounded() {
        return false;
    }
    let mut cur = sigma.clone();
    for j in (1..=sigma.r).rev() {
        cur = cur.reduce(j);
        if !cur.is_size_bounded() {
            return false;
        }
    }
    true
}

/// The inductive encoding of an adjacency matrix as a member of B(r-1, r).
pub fn encode(m: &DsgMatrix) -> SbSequence {
    let r = m.r;
    if r <= 1 {
        return SbSequence::new(r, Vec::new());
    }
    let prev = encode(&m.principal(r - 1));
    let sigma = &prev.sets;
    // U: out-neighborhood of the new vertex r (1-based members)
    let u: BTreeSet<usize> = (0..r - 1)
        .filter(|&j| m.get(r - 1, j))
        .map(|j| j + 1)
        .collect();
    // in-edges to the new vertex, listed over [r-1] \ U in increasing order
    let g: Vec<usize> = (1..r).filter(|j| !u.contains(j)).collect();
    let v: Vec<bool> = g.iter().map(|&j| m.get(j - 1, r - 1)).collect();
    let mut sets: Vec<BTreeSet<usize>>;
    if let Some(i1) = v.iter().position(|&b| b) {
        let i1 = i1 + 1;
        let pivot = u.len() + i1;
        sets = Vec::with_capacity(r - 1);
        for i in 1..=r - 1 {
            if i < pivot {
                sets.push(sigma[i - 1].clone());
            } else if i == pivot {
                let mut s = u.clone();
                s.insert(r);
                sets.push(s);
            } else {
                let mut s = sigma[i - 2].clone();
                if v[i - u.len() - 1] {
                    s.insert(r);
                }
                sets.push(s);
            }
        }
    } else {
        sets = sigma.clone();
        sets.push(u);
    }
    SbSequence::new(r, sets)
}

/// Inverse of `encode` on B(r-1, r).
pub fn decode(sigma: &SbSequence) -> Result<DsgMatrix> {
    let r = sigma.r;
    if sigma.len() + 1 != r || !is_in_b(sigma) {
        return Err(Error::NotInB);
    }
    decode_unchecked(sigma)
}

fn decode_unchecked(sigma: &SbSequence) -> Result<DsgMatrix> {
    let r = sigma.r;
    if r <= 1 {
        return Ok(DsgMatrix::empty(r));
    }
    let i1 = sigma.l_index(r);
    let mut m = DsgMatrix::empty(r);
    let u: BTreeSet<usize> = if i1 == 0 {
        sigma.sets[r - 2].clone()
    } else {
        let mut s = sigma.sets[i1 - 1].clone();
        s.remove(&r);
        s
    };
    if u.contains(&r) {
        return Err(Error::NotInB);
    }
    for &j in &u {
        m.set(r - 1, j - 1, true);
    }
    if i1 > 0 {
        let g: Vec<usize> = (1..r).filter(|j| !u.contains(j)).collect();
        for (i, s) in sigma.sets.iter().enumerate() {
            if s.contains(&r) {
                let idx = i + 1 - u.len();
                if idx == 0 || idx > g.len() {
                    return Err(Error::NotInB);
                }
                m.set(g[idx - 1] - 1, r - 1, true);
            }
        }
    }
    let reduced = SbSequence {
        r: r - 1,
        sets: sigma.reduce(r).sets,
    };
    let inner = decode_unchecked(&reduced)?;
    for i in 0..r - 1 {
        for j in 0..r - 1 {
            if inner.get(i, j) {
                m.set(i, j, true);
            }
        }
    }
    if !m.is_valid() {
        return Err(Error::NotInB);
    }
    Ok(m)
}
