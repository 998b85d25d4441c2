use std::fmt;

use crate::error::{Error, Result};
use crate::homology::matrix::Matrix;
use crate::homology::smith::smith_normal_form;
use crate::scalar::Scalar;

/// A finitely generated abelian group `Z^r ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k` in
/// invariant-factor form: every `d_i >= 2` and `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FgAbGroup<T> {
    free_rank: usize,
    invariant_factors: Vec<T>,
}

impl<T: Scalar> FgAbGroup<T> {
    pub fn trivial() -> Self {
        FgAbGroup { free_rank: 0, invariant_factors: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup { free_rank: rank, invariant_factors: Vec::new() }
    }

    pub fn cyclic(order: T) -> Self {
        Self::from_cyclic_orders(std::iter::once(order))
    }

    /// Canonical form of `⊕ Z/n_i`, where an order of `0` stands for `Z`.
    pub fn from_cyclic_orders(orders: impl IntoIterator<Item = T>) -> Self {
        let mut free_rank = 0;
        let mut torsion = Vec::new();
        for n in orders {
            let n = n.abs();
            if n.is_zero() {
                free_rank += 1;
            } else if !n.is_one() {
                torsion.push(n);
            }
        }
        let k = torsion.len();
        let snf = smith_normal_form(&Matrix::diagonal(k, k, &torsion));
        let invariant_factors = snf.invariant_factors().into_iter().filter(|d| !d.is_one()).collect();
        FgAbGroup { free_rank, invariant_factors }
    }

    /// Takes a free rank and an arbitrary list of torsion orders and canonicalises.
    pub fn new(free_rank: usize, torsion: impl IntoIterator<Item = T>) -> Result<Self> {
        let torsion: Vec<T> = torsion.into_iter().collect();
        if torsion.iter().any(|t| !t.is_positive()) {
            return Err(Error::Format("torsion orders must be positive".into()));
        }
        let mut g = Self::from_cyclic_orders(torsion);
        g.free_rank = free_rank;
        Ok(g)
    }

    /// The cokernel `Z^cols / rowspace(a)` of a relation matrix: rows are relations,
    /// columns are generators.
    pub fn from_presentation(a: &Matrix<T>) -> Self {
        let snf = smith_normal_form(a);
        let free_rank = a.cols() - snf.rank;
        let invariant_factors = snf.invariant_factors().into_iter().filter(|d| !d.is_one()).collect();
        FgAbGroup { free_rank, invariant_factors }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[T] {
        &self.invariant_factors
    }

    /// Number of cyclic summands in the canonical decomposition.
    pub fn num_generators(&self) -> usize {
        self.free_rank + self.invariant_factors.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn free_part(&self) -> Self {
        Self::free(self.free_rank)
    }

    pub fn torsion_part(&self) -> Self {
        FgAbGroup { free_rank: 0, invariant_factors: self.invariant_factors.clone() }
    }

    /// Cyclic orders of the summands, `0` for each `Z`.
    pub fn cyclic_orders(&self) -> impl Iterator<Item = T> + '_ {
        std::iter::repeat_n(T::zero(), self.free_rank).chain(self.invariant_factors.iter().cloned())
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_cyclic_orders(self.cyclic_orders().chain(other.cyclic_orders()))
    }

    /// `Z/a ⊗ Z/b = Z/gcd(a, b)`, `Z ⊗ G = G`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut orders = Vec::new();
        for a in self.cyclic_orders() {
            for b in other.cyclic_orders() {
                orders.push(a.gcd(&b));
            }
        }
        Self::from_cyclic_orders(orders)
    }

    /// `Tor(Z/a, Z/b) = Z/gcd(a, b)`; free summands contribute nothing.
    pub fn tor(&self, other: &Self) -> Self {
        let mut orders = Vec::new();
        for a in &self.invariant_factors {
            for b in &other.invariant_factors {
                orders.push(a.gcd(b));
            }
        }
        Self::from_cyclic_orders(orders)
    }

    pub fn map_scalar<U: Scalar>(&self, f: impl Fn(&T) -> U) -> FgAbGroup<U> {
        FgAbGroup { free_rank: self.free_rank, invariant_factors: self.invariant_factors.iter().map(f).collect() }
    }
}

impl<T: Scalar> fmt::Display for FgAbGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// Groups indexed by degree `0, 1, 2, ...`; degrees past the end are zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedGroup<T> {
    groups: Vec<FgAbGroup<T>>,
}

impl<T: Scalar> GradedGroup<T> {
    pub fn new(mut groups: Vec<FgAbGroup<T>>) -> Self {
        while groups.last().is_some_and(|g| g.is_trivial()) {
            groups.pop();
        }
        GradedGroup { groups }
    }

    /// Torsion-free graded group with the given Betti numbers.
    pub fn from_betti(betti: &[usize]) -> Self {
        Self::new(betti.iter().map(|&r| FgAbGroup::free(r)).collect())
    }

    pub fn degree(&self, k: usize) -> FgAbGroup<T> {
        self.groups.get(k).cloned().unwrap_or_else(FgAbGroup::trivial)
    }

    /// One past the highest nonzero degree.
    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn groups(&self) -> &[FgAbGroup<T>] {
        &self.groups
    }

    pub fn betti(&self) -> Vec<usize> {
        self.groups.iter().map(FgAbGroup::free_rank).collect()
    }

    /// Cohomology by universal coefficients: `H^k = Free(H_k) ⊕ Tors(H_{k-1})`.
    pub fn cohomology(&self) -> Self {
        let n = self.groups.len() + 1;
        Self::new(
            (0..n)
                .map(|k| {
                    let tors = if k == 0 { FgAbGroup::trivial() } else { self.degree(k - 1).torsion_part() };
                    self.degree(k).free_part().direct_sum(&tors)
                })
                .collect(),
        )
    }

    /// Reduced version: one `Z` removed from degree 0 (when present).
    pub fn reduced(&self) -> Self {
        let mut groups = self.groups.clone();
        if let Some(g0) = groups.first_mut() {
            if g0.free_rank > 0 {
                g0.free_rank -= 1;
            }
        }
        Self::new(groups)
    }

    pub fn map_scalar<U: Scalar>(&self, f: impl Fn(&T) -> U + Copy) -> GradedGroup<U> {
        GradedGroup { groups: self.groups.iter().map(|g| g.map_scalar(f)).collect() }
    }
}

impl<T: Scalar> fmt::Display for GradedGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.groups.is_empty() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self.groups.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type G = FgAbGroup<i64>;

    #[test]
    fn presentation_examples() {
        assert_eq!(G::from_presentation(&Matrix::from_rows(&[[0]])), G::free(1));
        let g = G::from_presentation(&Matrix::from_rows(&[[2, 0], [0, 3]]));
        assert_eq!(g.invariant_factors(), &[6]);
        assert_eq!(g.free_rank(), 0);
        assert_eq!(G::from_presentation(&Matrix::from_rows(&[[1, -1]])), G::free(1));
    }

    #[test]
    fn canonical_form_is_unique() {
        let a = G::from_cyclic_orders([4, 6, 0, 1, 2]);
        let b = G::from_cyclic_orders([2, 12, 2, 0]);
        assert_eq!(a, b);
        assert_eq!(a.invariant_factors(), &[2, 2, 12]);
        assert_eq!(a.to_string(), "Z + Z/2 + Z/2 + Z/12");
    }

    #[test]
    fn tensor_and_tor() {
        let z2 = G::cyclic(2);
        let z3 = G::cyclic(3);
        assert_eq!(z2.tensor(&z3), G::trivial());
        assert_eq!(z2.tor(&z2), z2);
        assert_eq!(G::free(2).tensor(&G::cyclic(4)), G::from_cyclic_orders([4, 4]));
        assert_eq!(G::free(2).tor(&G::cyclic(4)), G::trivial());
    }

    #[test]
    fn cohomology_of_moore_space() {
        // H_* = (Z, Z/2): H^* = (Z, 0, Z/2)
        let h = GradedGroup::new(vec![G::free(1), G::cyclic(2)]);
        let c = h.cohomology();
        assert_eq!(c, GradedGroup::new(vec![G::free(1), G::trivial(), G::cyclic(2)]));
    }

    #[test]
    fn graded_trims_trailing_zeros() {
        let g = GradedGroup::<i64>::from_betti(&[1, 0, 0]);
        assert_eq!(g.len(), 1);
        assert_eq!(g.degree(5), G::trivial());
    }
}
