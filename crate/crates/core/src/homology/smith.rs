//! Smith normal form over an exact integer ring.

use crate::error::{Error, Result};
use crate::homology::matrix::Matrix;
use crate::scalar::Scalar;

/// `d = u * a * v` with `u`, `v` unimodular and `d` diagonal, `d_1 | d_2 | ... | d_rank`,
/// all diagonal entries nonnegative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm<T> {
    pub u: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
    pub rank: usize,
}

impl<T: Scalar> SmithForm<T> {
    /// The nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<T> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Diagonal of `d` of length `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<T> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Basis of the kernel of the original matrix: the trailing columns of `v`.
    pub fn kernel_basis(&self) -> Vec<Vec<T>> {
        (self.rank..self.v.cols()).map(|j| self.v.column(j)).collect()
    }

    /// An integer solution `x` of `a x = b`, if one exists.
    pub fn solve(&self, b: &[T]) -> Result<Option<Vec<T>>> {
        let ub = self.u.mul_vec(b)?;
        let mut y = vec![T::zero(); self.v.cols()];
        for (i, c) in ub.iter().enumerate() {
            if i < self.rank {
                let (q, r) = c.div_rem(&self.d[(i, i)]);
                if !r.is_zero() {
                    return Ok(None);
                }
                y[i] = q;
            } else if !c.is_zero() {
                return Ok(None);
            }
        }
        Ok(Some(self.v.mul_vec(&y)?))
    }
}

/// Computes the Smith normal form of `a`.
pub fn smith_normal_form<T: Scalar>(a: &Matrix<T>) -> SmithForm<T> {
    match smith_normal_form_with(a, &|| false) {
        Ok(s) => s,
        Err(_) => unreachable!("never cancelled"),
    }
}

/// Like [`smith_normal_form`], polling `cancel` between elimination rounds and
/// returning [`Error::Cancelled`] once it reports `true`.
pub fn smith_normal_form_with<T: Scalar>(a: &Matrix<T>, cancel: &dyn Fn() -> bool) -> Result<SmithForm<T>> {
    let (m, n) = a.shape();
    let mut d = a.clone();
    let mut u = Matrix::identity(m);
    let mut v = Matrix::identity(n);

    let mut t = 0;
    while t < m.min(n) {
        if cancel() {
            return Err(Error::Cancelled);
        }
        let Some((pi, pj)) = smallest_nonzero(&d, (t..m).flat_map(|i| (t..n).map(move |j| (i, j)))) else {
            break;
        };
        move_pivot(&mut d, &mut u, &mut v, t, pi, pj);

        loop {
            if cancel() {
                return Err(Error::Cancelled);
            }
            let pivot = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = d[(i, t)].div_floor(&pivot);
                d.add_row_multiple(i, t, &-q.clone());
                u.add_row_multiple(i, t, &-q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = d[(t, j)].div_floor(&pivot);
                d.add_col_multiple(j, t, &-q.clone());
                v.add_col_multiple(j, t, &-q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                // A remainder smaller than the pivot survived; promote it.
                let cross = (t..m).map(|i| (i, t)).chain((t + 1..n).map(|j| (t, j)));
                let (pi, pj) = smallest_nonzero(&d, cross).expect("pivot row/column is nonzero");
                move_pivot(&mut d, &mut u, &mut v, t, pi, pj);
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match bad {
                Some(i) => {
                    d.add_row_multiple(t, i, &T::one());
                    u.add_row_multiple(t, i, &T::one());
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    Ok(SmithForm { u, d, v, rank: t })
}

fn smallest_nonzero<T: Scalar>(
    d: &Matrix<T>,
    cells: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), T)> = None;
    for (i, j) in cells {
        let v = &d[(i, j)];
        if v.is_zero() {
            continue;
        }
        let a = v.abs();
        if best.as_ref().is_none_or(|(_, b)| a < *b) {
            let unit = a.is_one();
            best = Some(((i, j), a));
            if unit {
                break;
            }
        }
    }
    best.map(|(pos, _)| pos)
}

fn move_pivot<T: Scalar>(d: &mut Matrix<T>, u: &mut Matrix<T>, v: &mut Matrix<T>, t: usize, i: usize, j: usize) {
    d.swap_rows(t, i);
    u.swap_rows(t, i);
    d.swap_cols(t, j);
    v.swap_cols(t, j);
}
