//! Small exact matrices: cofactor determinants for polynomial entries and
//! fraction-free (Bareiss) elimination for rational entries.

use std::ops::Div;

use crate::scalar::Coeff;

#[derive(Clone, Debug, PartialEq)]
pub struct Mat<C> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<C>,
}

impl<C: Coeff> Mat<C> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![C::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &C {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[C] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j).clone() + other.get(i, j).clone()
        })
    }

    pub fn mul_vec(&self, v: &[C]) -> Vec<C> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(C::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn map<D: Coeff>(&self, mut f: impl FnMut(&C) -> D) -> Mat<D> {
        Mat::from_fn(self.rows, self.cols, |i, j| f(self.get(i, j)))
    }

    /// Determinant by cofactor expansion; division-free, fine for the m <= 4
    /// symbolic matrices this engine produces.
    pub fn det_cofactor(&self) -> C {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        match n {
            0 => return C::one(),
            1 => return self.get(0, 0).clone(),
            _ => {}
        }
        let mut acc = C::zero();
        for j in 0..n {
            let entry = self.get(0, j);
            if entry.is_zero() {
                continue;
            }
            let minor = Mat::from_fn(n - 1, n - 1, |r, c| {
                self.get(r + 1, if c < j { c } else { c + 1 }).clone()
            });
            let term = entry.clone() * minor.det_cofactor();
            if j % 2 == 0 {
                acc = acc + term;
            } else {
                acc = acc - term;
            }
        }
        acc
    }
}

impl<C: Coeff + Div<Output = C>> Mat<C> {
    /// Fraction-free Gaussian elimination (Bareiss). Exact over any field or
    /// integral domain where the intermediate divisions are exact.
    pub fn det_bareiss(&self) -> C {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return C::one();
        }
        let mut a = self.clone();
        let mut sign_neg = false;
        let mut prev = C::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                // pivot search
                let mut found = None;
                for i in k + 1..n {
                    if !a.get(i, k).is_zero() {
                        found = Some(i);
                        break;
                    }
                }
                match found {
                    None => return C::zero(),
                    Some(i) => {
                        for j in 0..n {
                            let x = a.get(k, j).clone();
                            let y = a.get(i, j).clone();
                            a.set(k, j, y);
                            a.set(i, j, x);
                        }
                        sign_neg = !sign_neg;
                    }
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a.get(i, j).clone() * a.get(k, k).clone()
                        - a.get(i, k).clone() * a.get(k, j).clone();
                    a.set(i, j, num / prev.clone());
                }
                a.set(i, k, C::zero());
            }
            prev = a.get(k, k).clone();
        }
        let det = a.get(n - 1, n - 1).clone();
        if sign_neg {
            -det
        } else {
            det
        }
    }
}

#[cfg(test)]
mod tests {
    use num_traits::{One, Zero};
    use super::*;
    use crate::laurent::SparseLaurent;
    use crate::scalar::{rat, Rat};

    #[test]
    fn cofactor_and_bareiss_agree() {
        let m = Mat::from_fn(3, 3, |i, j| rat(((i * 3 + j) * (i + 2 * j) % 7) as i64 - 3));
        assert_eq!(m.det_cofactor(), m.det_bareiss());
        let singular = Mat::from_fn(3, 3, |i, j| rat((i + j) as i64));
        assert!(singular.det_cofactor().is_zero());
        assert!(singular.det_bareiss().is_zero());
    }

    #[test]
    fn bareiss_needs_pivot_swap() {
        let mut m = Mat::<Rat>::zero(2, 2);
        m.set(0, 1, rat(3));
        m.set(1, 0, rat(2));
        assert_eq!(m.det_bareiss(), rat(-6));
    }

    #[test]
    fn symbolic_vandermonde() {
        // det [[1,1],[x,y]] = y - x
        let x = SparseLaurent::var(0);
        let y = SparseLaurent::var(1);
        let m = Mat::from_fn(2, 2, |i, j| {
            if i == 0 {
                SparseLaurent::constant(rat(1))
            } else if j == 0 {
                x.clone()
            } else {
                y.clone()
            }
        });
        assert_eq!(m.det_cofactor(), y - x);
    }

    #[test]
    fn empty_det_is_one() {
        let m = Mat::<Rat>::zero(0, 0);
        assert!(m.det_cofactor().is_one());
        assert!(m.det_bareiss().is_one());
    }
}
