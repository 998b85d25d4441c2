//! Seeded generators for randomized checks: knots, matrices, unimodular
//! changes of basis and chain complexes with known homology.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::homology::{ChainComplex, FgAbGroup, GradedGroup, Matrix};
use crate::knot::{BraidWord, FrontEvent, FrontWord};
use crate::scalar::Scalar;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A braid on at most `max_strands` strands with at most `max_len` letters whose
/// closure is a knot.
pub fn braid_knot(rng: &mut impl Rng, max_strands: usize, max_len: usize) -> BraidWord {
    loop {
        let n = rng.gen_range(1..=max_strands.max(1));
        let len = if n == 1 { 0 } else { rng.gen_range(0..=max_len) };
        let word = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..n) as i32;
                if rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        let b = BraidWord::new(n, word);
        if b.validate().is_knot() {
            return b;
        }
    }
}

/// A front with at most `max_strands` strands present at any column and roughly
/// `len` events before closing up, with exactly one component.
pub fn front_knot(rng: &mut impl Rng, max_strands: usize, len: usize) -> FrontWord {
    let max_strands = max_strands.max(2);
    loop {
        let mut events = vec![FrontEvent::LeftCusp(0)];
        let mut k = 2usize;
        for _ in 0..len {
            let mut options = Vec::new();
            if k + 2 <= max_strands {
                options.push(0);
            }
            if k >= 2 {
                options.push(1);
            }
            if k >= 4 {
                options.push(2);
            }
            match *options.choose(rng).expect("crossings always possible") {
                0 => {
                    events.push(FrontEvent::LeftCusp(rng.gen_range(0..=k)));
                    k += 2;
                }
                1 => events.push(FrontEvent::Crossing(rng.gen_range(0..k - 1))),
                _ => {
                    events.push(FrontEvent::RightCusp(rng.gen_range(0..k - 1)));
                    k -= 2;
                }
            }
        }
        while k > 0 {
            events.push(FrontEvent::RightCusp(rng.gen_range(0..k - 1)));
            k -= 2;
        }
        let f = FrontWord::new(events);
        if f.validate().is_knot() {
            return f;
        }
    }
}

pub fn matrix<T: Scalar>(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> Matrix<T> {
    let data = (0..rows * cols).map(|_| T::from_i64_exact(rng.gen_range(-bound..=bound))).collect();
    Matrix::from_vec(rows, cols, data).expect("sized")
}

/// A random unimodular matrix and its inverse, as a product of `steps` elementary moves.
pub fn unimodular<T: Scalar>(rng: &mut impl Rng, n: usize, steps: usize) -> (Matrix<T>, Matrix<T>) {
    let mut u = Matrix::identity(n);
    let mut inv = Matrix::identity(n);
    if n == 0 {
        return (u, inv);
    }
    for _ in 0..steps {
        match rng.gen_range(0..3) {
            0 if n >= 2 => {
                let (i, j) = distinct_pair(rng, n);
                let c = T::from_i64_exact(rng.gen_range(-3..=3));
                // u ← E u with E = I + c e_ij; inv ← inv E^{-1}
                u.add_row_multiple(i, j, &c);
                inv.add_col_multiple(j, i, &-c);
            }
            1 if n >= 2 => {
                let (i, j) = distinct_pair(rng, n);
                u.swap_rows(i, j);
                inv.swap_cols(i, j);
            }
            _ => {
                let i = rng.gen_range(0..n);
                u.negate_row(i);
                inv.negate_col(i);
            }
        }
    }
    (u, inv)
}

fn distinct_pair(rng: &mut impl Rng, n: usize) -> (usize, usize) {
    let i = rng.gen_range(0..n);
    let mut j = rng.gen_range(0..n - 1);
    if j >= i {
        j += 1;
    }
    (i, j)
}

/// A complex that is a direct sum of elementary pieces `Z --d--> Z` and lone `Z`s,
/// disguised by a random change of basis in every degree, together with the
/// homology it must have.
pub fn disguised_complex(rng: &mut impl Rng, top: usize, max_pieces: usize) -> (ChainComplex<BigInt>, GradedGroup<BigInt>) {
    let mut dims = vec![0usize; top + 1];
    // (degree of the upper cell, multiplier) per elementary piece
    let mut pieces: Vec<(usize, i64)> = Vec::new();
    let mut lone: Vec<usize> = Vec::new();
    for _ in 0..rng.gen_range(1..=max_pieces.max(1)) {
        if top >= 1 && rng.gen_bool(0.6) {
            let k = rng.gen_range(1..=top);
            let d = *[1i64, 1, 2, 2, 3, 4, 6].choose(rng).expect("nonempty");
            pieces.push((k, d));
            dims[k] += 1;
            dims[k - 1] += 1;
        } else {
            let k = rng.gen_range(0..=top);
            lone.push(k);
            dims[k] += 1;
        }
    }
    let mut next = vec![0usize; top + 1];
    let mut boundaries: Vec<Matrix<BigInt>> = (1..=top).map(|k| Matrix::zeros(dims[k - 1], dims[k])).collect();
    let mut expected: Vec<Vec<BigInt>> = vec![Vec::new(); top + 1];
    for &(k, d) in &pieces {
        let hi = next[k];
        next[k] += 1;
        let lo = next[k - 1];
        next[k - 1] += 1;
        boundaries[k - 1][(lo, hi)] = BigInt::from(d);
        expected[k - 1].push(BigInt::from(d));
    }
    for &k in &lone {
        expected[k].push(BigInt::from(0));
    }
    let bases: Vec<(Matrix<BigInt>, Matrix<BigInt>)> = dims.iter().map(|&n| unimodular(rng, n, 3 * n + 2)).collect();
    // d'_k = P_{k-1} d_k P_k^{-1}
    let boundaries = boundaries
        .iter()
        .enumerate()
        .map(|(i, b)| &(&bases[i].0 * b) * &bases[i + 1].1)
        .collect();
    let complex = ChainComplex::new(dims, boundaries).expect("shapes");
    let homology = GradedGroup::new(expected.into_iter().map(FgAbGroup::from_cyclic_orders).collect());
    (complex, homology)
}

/// Simplicial chain complex of a random complex on `vertices` vertices with
/// simplices up to dimension `top`, closed under taking faces.
pub fn simplicial_complex(rng: &mut impl Rng, vertices: usize, top: usize, density: f64) -> ChainComplex<BigInt> {
    let mut simplices: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); top + 1];
    for v in 0..vertices {
        simplices[0].insert(vec![v]);
    }
    for k in 1..=top {
        for s in subsets(vertices, k + 1) {
            if !rng.gen_bool(density) {
                continue;
            }
            let faces_present = (0..s.len()).all(|skip| {
                let f: Vec<usize> = s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                simplices[k - 1].contains(&f)
            });
            if faces_present {
                simplices[k].insert(s);
            }
        }
    }
    while simplices.len() > 1 && simplices.last().is_some_and(|s| s.is_empty()) {
        simplices.pop();
    }
    let lists: Vec<Vec<Vec<usize>>> = simplices.into_iter().map(|s| s.into_iter().collect()).collect();
    let dims: Vec<usize> = lists.iter().map(Vec::len).collect();
    let boundaries = (1..lists.len())
        .map(|k| {
            let mut m = Matrix::zeros(dims[k - 1], dims[k]);
            for (j, s) in lists[k].iter().enumerate() {
                for skip in 0..s.len() {
                    let f: Vec<usize> = s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                    let row = lists[k - 1].binary_search(&f).expect("closed under faces");
                    m[(row, j)] = BigInt::from(if skip % 2 == 0 { 1 } else { -1 });
                }
            }
            m
        })
        .collect();
    ChainComplex::new(dims, boundaries).expect("shapes")
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}
