use crate::error::{Error, Result};
use crate::homology::group::FgAbGroup;
use crate::homology::matrix::Matrix;
use crate::homology::smith::smith_normal_form;
use crate::scalar::{gcd_all, Scalar};

/// Exactness of `A_0 --f_1--> A_1 --f_2--> ... --f_m--> A_m`, given as `[f_1, ..., f_m]`
/// with `f_i` a `dim A_i × dim A_{i-1}` matrix.
///
/// Checked at the interior terms `A_1 .. A_{m-1}`: the composite must vanish and
/// every kernel basis vector of `f_{i+1}` must lie in the integer image of `f_i`.
/// Leading and trailing zero maps are written as matrices with an empty side.
pub fn is_exact<T: Scalar>(maps: &[Matrix<T>]) -> Result<bool> {
    for (i, w) in maps.windows(2).enumerate() {
        if w[1].cols() != w[0].rows() {
            return Err(Error::ShapeMismatch(format!(
                "map {} has target of rank {} but map {} has source of rank {}",
                i + 1,
                w[0].rows(),
                i + 2,
                w[1].cols()
            )));
        }
    }
    for w in maps.windows(2) {
        let (into, out) = (&w[0], &w[1]);
        if !(out * into).is_zero() {
            return Ok(false);
        }
        let image = smith_normal_form(into);
        let kernel = smith_normal_form(out).kernel_basis();
        for z in &kernel {
            if image.solve(z)?.is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn free_coordinates<'a, T: Scalar>(v: &'a [T], group: &FgAbGroup<T>) -> Result<&'a [T]> {
    let r = group.free_rank();
    if v.len() == r {
        return Ok(v);
    }
    if v.len() != group.num_generators() {
        return Err(Error::ShapeMismatch(format!(
            "vector of length {} in a group with {} free and {} torsion generators",
            v.len(),
            r,
            group.invariant_factors().len()
        )));
    }
    for (k, (c, d)) in v[r..].iter().zip(group.invariant_factors()).enumerate() {
        if !c.is_multiple_of(d) {
            return Err(Error::TorsionCoordinate(r + k));
        }
    }
    Ok(&v[..r])
}

/// Largest `d >= 0` with `v ∈ d·G_free`: the gcd of the free coordinates.
///
/// `v` lists coordinates in the canonical basis of `group`, either just the free
/// part or free part followed by torsion coordinates (which must vanish).
pub fn divisibility<T: Scalar>(v: &[T], group: &FgAbGroup<T>) -> Result<T> {
    Ok(gcd_all(free_coordinates(v, group)?))
}

pub fn is_primitive<T: Scalar>(v: &[T], group: &FgAbGroup<T>) -> Result<bool> {
    Ok(divisibility(v, group)?.is_one())
}
