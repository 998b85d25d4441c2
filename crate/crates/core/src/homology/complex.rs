use crate::error::{Error, Result};
use crate::homology::group::{FgAbGroup, GradedGroup};
use crate::homology::matrix::Matrix;
use crate::homology::smith::smith_normal_form;
use crate::scalar::Scalar;

/// A bounded chain complex of free abelian groups `C_0 <- C_1 <- ... <- C_top`.
///
/// `boundary(k)` is the matrix of `d_k: C_k -> C_{k-1}` with `dims[k-1]` rows and
/// `dims[k]` columns. Degrees with zero cells are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex<T> {
    dims: Vec<usize>,
    boundaries: Vec<Matrix<T>>,
}

impl<T: Scalar> ChainComplex<T> {
    /// `boundaries[k - 1]` is `d_k`. Shapes are checked here, `d∘d = 0` by [`Self::check`].
    pub fn new(dims: Vec<usize>, boundaries: Vec<Matrix<T>>) -> Result<Self> {
        if boundaries.len() + 1 != dims.len().max(1) {
            return Err(Error::ShapeMismatch(format!(
                "{} degrees need {} boundary maps, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                boundaries.len()
            )));
        }
        for (k, b) in boundaries.iter().enumerate() {
            let want = (dims[k], dims[k + 1]);
            if b.shape() != want {
                return Err(Error::ShapeMismatch(format!(
                    "d{} is {}x{}, expected {}x{}",
                    k + 1,
                    b.rows(),
                    b.cols(),
                    want.0,
                    want.1
                )));
            }
        }
        Ok(ChainComplex { dims, boundaries })
    }

    /// Complex with every boundary map zero.
    pub fn with_zero_boundaries(dims: Vec<usize>) -> Self {
        let boundaries = dims.windows(2).map(|w| Matrix::zeros(w[0], w[1])).collect();
        ChainComplex { dims, boundaries }
    }

    /// One cell in degree 0.
    pub fn point() -> Self {
        Self::with_zero_boundaries(vec![1])
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.dims.len().checked_sub(1)
    }

    pub fn rank(&self, k: usize) -> usize {
        self.dims.get(k).copied().unwrap_or(0)
    }

    pub fn boundaries(&self) -> &[Matrix<T>] {
        &self.boundaries
    }

    /// `d_k`, a zero matrix of the right shape outside the stored range.
    pub fn boundary(&self, k: usize) -> Matrix<T> {
        if k >= 1 && k < self.dims.len() {
            self.boundaries[k - 1].clone()
        } else {
            Matrix::zeros(if k == 0 { 0 } else { self.rank(k - 1) }, self.rank(k))
        }
    }

    /// Verifies `d_k ∘ d_{k+1} = 0` in every degree.
    pub fn check(&self) -> Result<()> {
        for k in 1..self.boundaries.len() {
            let comp = &self.boundaries[k - 1] * &self.boundaries[k];
            if !comp.is_zero() {
                return Err(Error::NotAComplex { degree: k });
            }
        }
        Ok(())
    }

    /// Euler characteristic of the cell counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().enumerate().map(|(k, &d)| if k % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
    }

    pub fn map_scalar<U: Scalar>(&self, f: impl Fn(&T) -> U + Copy) -> ChainComplex<U> {
        ChainComplex { dims: self.dims.clone(), boundaries: self.boundaries.iter().map(|b| b.map(f)).collect() }
    }
}

/// `H_k = ker d_k / im d_{k+1}` for every degree, via Smith normal forms.
pub fn homology<T: Scalar>(c: &ChainComplex<T>) -> Result<GradedGroup<T>> {
    c.check()?;
    let n = c.dims.len();
    let snfs: Vec<_> = c.boundaries.iter().map(smith_normal_form).collect();
    let rank_of = |k: usize| if k >= 1 && k < n { snfs[k - 1].rank } else { 0 };
    let groups = (0..n)
        .map(|k| {
            let cycles = c.dims[k] - rank_of(k);
            let boundary_rank = rank_of(k + 1);
            let torsion = if k + 1 < n { snfs[k].invariant_factors() } else { Vec::new() };
            let g = FgAbGroup::from_cyclic_orders(torsion);
            g.direct_sum(&FgAbGroup::free(cycles - boundary_rank))
        })
        .collect();
    Ok(GradedGroup::new(groups))
}

/// Tensor product complex: `(C ⊗ D)_n = ⊕_{i+j=n} C_i ⊗ D_j` with
/// `d(a ⊗ b) = da ⊗ b + (-1)^i a ⊗ db`.
///
/// Basis of degree `n` is ordered by `i` ascending, then `a`, then `b`.
pub fn tensor<T: Scalar>(c: &ChainComplex<T>, d: &ChainComplex<T>) -> Result<ChainComplex<T>> {
    c.check()?;
    d.check()?;
    if c.dims.is_empty() || d.dims.is_empty() {
        return Ok(ChainComplex::with_zero_boundaries(Vec::new()));
    }
    let top = c.dims.len() + d.dims.len() - 2;
    // blocks[n] = list of (i, j, offset) for i + j = n
    let blocks: Vec<Vec<(usize, usize, usize)>> = (0..=top)
        .map(|n| {
            let mut off = 0;
            let mut out = Vec::new();
            for i in 0..=n {
                let j = n - i;
                if i < c.dims.len() && j < d.dims.len() {
                    out.push((i, j, off));
                    off += c.dims[i] * d.dims[j];
                }
            }
            out
        })
        .collect();
    let dims: Vec<usize> = (0..=top).map(|n| blocks[n].iter().map(|&(i, j, _)| c.dims[i] * d.dims[j]).sum()).collect();

    let mut boundaries = Vec::with_capacity(top);
    for n in 1..=top {
        let mut m = Matrix::zeros(dims[n - 1], dims[n]);
        let offset_of = |i: usize, j: usize| blocks[n - 1].iter().find(|b| b.0 == i && b.1 == j).map(|b| b.2);
        for &(i, j, src) in &blocks[n] {
            if i >= 1 {
                let blk = c.boundary(i).kronecker(&Matrix::identity(d.dims[j]));
                let dst = offset_of(i - 1, j).expect("block exists");
                paste(&mut m, &blk, dst, src);
            }
            if j >= 1 {
                let mut blk = Matrix::identity(c.dims[i]).kronecker(&d.boundary(j));
                if i % 2 == 1 {
                    blk = blk.scale(&-T::one());
                }
                let dst = offset_of(i, j - 1).expect("block exists");
                paste(&mut m, &blk, dst, src);
            }
        }
        boundaries.push(m);
    }
    ChainComplex::new(dims, boundaries)
}

fn paste<T: Scalar>(m: &mut Matrix<T>, blk: &Matrix<T>, row0: usize, col0: usize) {
    for i in 0..blk.rows() {
        for j in 0..blk.cols() {
            m[(row0 + i, col0 + j)] = m[(row0 + i, col0 + j)].clone() + blk[(i, j)].clone();
        }
    }
}
