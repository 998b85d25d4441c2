// Brute-force reference computations, deliberately naive and independent of
// the engine: ranks by Gaussian elimination over Q, invariant factors by
// determinantal divisors (gcd of all i×i minors).

#![allow(dead_code)]

use engeltori::homology::Matrix;
use engeltori::{BigInt, IntChainComplex};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn rank_over_q(m: &Matrix<BigInt>) -> usize {
    let (rows, cols) = m.shape();
    let mut a: Vec<Vec<BigRational>> =
        (0..rows).map(|i| m.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let f = &a[r][c] / &a[rank][c];
                for k in c..cols {
                    let sub = &f * &a[rank][k];
                    a[r][k] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn det(m: &[Vec<BigInt>]) -> BigInt {
    // cofactor expansion; only ever called on tiny minors
    match m.len() {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        n => {
            let mut total = BigInt::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect()).collect();
                let term = &m[0][j] * det(&minor);
                if j % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(s: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in s..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Nonzero invariant factors from determinantal divisors. Exponential in the
/// matrix size; keep inputs at most 7×7 or so.
pub fn invariant_factors(m: &Matrix<BigInt>) -> Vec<BigInt> {
    let (rows, cols) = m.shape();
    let mut divisors = vec![BigInt::one()];
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in combinations(rows, k) {
            for cs in combinations(cols, k) {
                let sub: Vec<Vec<BigInt>> = rs.iter().map(|&r| cs.iter().map(|&c| m[(r, c)].clone()).collect()).collect();
                g = g.gcd(&det(&sub));
            }
        }
        if g.is_zero() {
            break;
        }
        divisors.push(g);
    }
    divisors.windows(2).map(|w| (&w[1] / &w[0]).abs()).collect()
}

/// Per degree: (betti number, torsion coefficients > 1).
pub fn homology(c: &IntChainComplex) -> Vec<(usize, Vec<BigInt>)> {
    let n = c.dims().len();
    let mut out: Vec<(usize, Vec<BigInt>)> = (0..n)
        .map(|k| {
            let rank_out = if k == 0 { 0 } else { rank_over_q(&c.boundary(k)) };
            let rank_in = rank_over_q(&c.boundary(k + 1));
            let torsion = invariant_factors(&c.boundary(k + 1)).into_iter().filter(|d| !d.is_one()).collect();
            (c.dims()[k] - rank_out - rank_in, torsion)
        })
        .collect();
    while out.last().is_some_and(|(b, t)| *b == 0 && t.is_empty()) {
        out.pop();
    }
    out
}

/// Same shape as [`homology`], read off an engine result.
pub fn describe(g: &engeltori::IntGradedGroup) -> Vec<(usize, Vec<BigInt>)> {
    g.groups().iter().map(|h| (h.free_rank(), h.invariant_factors().to_vec())).collect()
}

/// Whether every boundary of `c` is small enough for the minor enumeration.
pub fn small_enough(c: &IntChainComplex, limit: usize) -> bool {
    c.boundaries().iter().all(|b| b.rows().min(b.cols()) <= limit && b.rows().max(b.cols()) <= limit + 3)
}
