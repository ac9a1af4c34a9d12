//! Compositions, subsets, and small combinatorial helpers.
//!
//! Two composition notions coexist and are kept as distinct types: ordered
//! positive parts with free length, and fixed-length non-negative parts.

/// Composition of `n` into positive parts; `C(0)` holds exactly the empty one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompositionPos {
    pub parts: Vec<u32>,
}

impl CompositionPos {
    pub fn len(&self) -> usize {
        self.parts.len()
    }
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
    pub fn target(&self) -> u32 {
        self.parts.iter().sum()
    }
}

/// Composition of `h` into exactly `r` non-negative parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompositionNN {
    pub parts: Vec<u32>,
}

impl CompositionNN {
    pub fn len(&self) -> usize {
        self.parts.len()
    }
    pub fn target(&self) -> u32 {
        self.parts.iter().sum()
    }
}

/// All compositions of n into positive integer parts (2^(n-1) of them for
/// n >= 1; the single empty composition for n = 0).
pub fn compositions_pos(n: u32) -> Vec<CompositionPos> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, cur: &mut Vec<u32>, out: &mut Vec<CompositionPos>) {
        if rem == 0 {
            out.push(CompositionPos { parts: cur.clone() });
            return;
        }
        for p in 1..=rem {
            cur.push(p);
            rec(rem - p, cur, out);
            cur.pop();
        }
    }
    rec(n, &mut cur, &mut out);
    out
}

/// All length-r tuples of non-negative integers summing to h.
pub fn compositions_nn(h: u32, r: u32) -> Vec<CompositionNN> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, slots: u32, cur: &mut Vec<u32>, out: &mut Vec<CompositionNN>) {
        if slots == 0 {
            if rem == 0 {
                out.push(CompositionNN { parts: cur.clone() });
            }
            return;
        }
        if slots == 1 {
            cur.push(rem);
            out.push(CompositionNN { parts: cur.clone() });
            cur.pop();
            return;
        }
        for p in 0..=rem {
            cur.push(p);
            rec(rem - p, slots - 1, cur, out);
            cur.pop();
        }
    }
    if r == 0 {
        if h == 0 {
            out.push(CompositionNN { parts: vec![] });
        }
        return out;
    }
    rec(h, r, &mut cur, &mut out);
    out
}

/// All k-subsets of 0..n, each in increasing order.
pub fn subsets_k(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Number of out-of-order pairs in a sequence.
pub fn inversions(seq: &[i64]) -> usize {
    let mut inv = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inv += 1;
            }
        }
    }
    inv
}

/// All permutations of 0..n (used by small determinant expansions and the
/// surjection check).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(n, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_pos_counts() {
        assert_eq!(compositions_pos(0), vec![CompositionPos { parts: vec![] }]);
        let c3 = compositions_pos(3);
        assert_eq!(c3.len(), 4);
        assert!(c3.contains(&CompositionPos { parts: vec![3] }));
        assert!(c3.contains(&CompositionPos { parts: vec![1, 2] }));
        assert!(c3.contains(&CompositionPos { parts: vec![2, 1] }));
        assert!(c3.contains(&CompositionPos {
            parts: vec![1, 1, 1]
        }));
        assert_eq!(compositions_pos(4).len(), 8);
        for n in 1..=8u32 {
            assert_eq!(compositions_pos(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn compositions_nn_counts() {
        assert_eq!(
            compositions_nn(0, 3),
            vec![CompositionNN {
                parts: vec![0, 0, 0]
            }]
        );
        let c = compositions_nn(2, 2);
        assert_eq!(
            c,
            vec![
                CompositionNN { parts: vec![0, 2] },
                CompositionNN { parts: vec![1, 1] },
                CompositionNN { parts: vec![2, 0] },
            ]
        );
        assert_eq!(compositions_nn(1, 4).len(), 4);
        // count = binom(h+r-1, r-1)
        assert_eq!(compositions_nn(5, 3).len(), 21);
    }

    #[test]
    fn inversion_count() {
        assert_eq!(inversions(&[1, 2, 3]), 0);
        assert_eq!(inversions(&[3, 2, 1]), 3);
        assert_eq!(inversions(&[2, 1, 3]), 1);
    }

    #[test]
    fn subsets_counts() {
        assert_eq!(subsets_k(5, 2).len(), 10);
        assert_eq!(subsets_k(4, 0), vec![Vec::<usize>::new()]);
    }
}
