use crate::homology::group::{FgAbGroup, GradedGroup};
use crate::scalar::Scalar;

/// Künneth prediction for the homology of a tensor product of free complexes:
/// `H_n = ⊕_{i+j=n} A_i ⊗ B_j  ⊕  ⊕_{i+j=n-1} Tor(A_i, B_j)`.
pub fn kunneth_predict<T: Scalar>(a: &GradedGroup<T>, b: &GradedGroup<T>) -> GradedGroup<T> {
    if a.is_empty() || b.is_empty() {
        return GradedGroup::new(Vec::new());
    }
    let top = a.len() + b.len() - 1;
    let groups = (0..=top)
        .map(|n| {
            let mut g = FgAbGroup::trivial();
            for i in 0..=n {
                let j = n - i;
                g = g.direct_sum(&a.degree(i).tensor(&b.degree(j)));
                if n >= 1 && i <= n - 1 {
                    g = g.direct_sum(&a.degree(i).tor(&b.degree(n - 1 - i)));
                }
            }
            g
        })
        .collect();
    GradedGroup::new(groups)
}

/// Reduced homology of `S^n \ K` from the (unreduced) homology of a compact,
/// locally contractible `K ⊂ S^n`: `H̃_i(S^n \ K) ≅ H̃^{n-i-1}(K)`.
///
/// An empty `K` (trivial homology) gives the reduced homology of `S^n` itself.
pub fn alexander_duality<T: Scalar>(n: usize, k: &GradedGroup<T>) -> GradedGroup<T> {
    if k.is_empty() {
        let mut groups = vec![FgAbGroup::trivial(); n + 1];
        groups[n] = FgAbGroup::free(1);
        return GradedGroup::new(groups);
    }
    let reduced_cohomology = k.cohomology().reduced();
    let groups = (0..=n)
        .map(|i| match (n - i).checked_sub(1) {
            Some(p) => reduced_cohomology.degree(p),
            None => FgAbGroup::trivial(),
        })
        .collect();
    GradedGroup::new(groups)
}

#[cfg(test)]
mod tests {
    use super::*;

    type G = FgAbGroup<i64>;
    type H = GradedGroup<i64>;

    #[test]
    fn torsion_free_has_no_tor() {
        let a = H::from_betti(&[1, 1]);
        let b = H::from_betti(&[1, 2, 1]);
        assert_eq!(kunneth_predict(&a, &b), H::from_betti(&[1, 3, 3, 1]));
    }

    #[test]
    fn circle_factor_shifts_and_sums() {
        // H_k(S^1 x X) = H_{k-1}(X) ⊕ H_k(X)
        let x = H::new(vec![G::free(1), G::from_cyclic_orders([0, 3]), G::free(2)]);
        let p = kunneth_predict(&H::from_betti(&[1, 1]), &x);
        for k in 0..5 {
            let prev = if k == 0 { G::trivial() } else { x.degree(k - 1) };
            assert_eq!(p.degree(k), prev.direct_sum(&x.degree(k)));
        }
    }

    #[test]
    fn moore_spaces_produce_tor_term() {
        let m = H::new(vec![G::free(1), G::cyclic(2)]);
        let p = kunneth_predict(&m, &m);
        assert_eq!(p.degree(3), G::cyclic(2));
    }

    #[test]
    fn duality_examples() {
        let torus = H::from_betti(&[1, 2, 1]);
        let c = alexander_duality(4, &torus);
        assert_eq!(c.degree(2), G::free(2));
        assert_eq!(c.degree(1), G::free(1));
        assert_eq!(c.degree(3), G::trivial());

        let knot = H::from_betti(&[1, 1]);
        let c = alexander_duality(3, &knot);
        assert_eq!(c.degree(1), G::free(1));
        assert_eq!(c.degree(2), G::trivial());

        assert!(alexander_duality(3, &H::from_betti(&[1])).is_empty());
    }

    #[test]
    fn duality_of_empty_set_is_sphere() {
        let c = alexander_duality(3, &H::new(vec![]));
        assert_eq!(c, H::from_betti(&[0, 0, 0, 1]));
    }

    #[test]
    fn duality_moves_torsion_down_one_degree() {
        // RP^2 ⊂ S^4: H̃^1 = 0, H^2 = Z/2, so H̃_1(complement) = Z/2.
        let rp2 = H::new(vec![G::free(1), G::cyclic(2)]);
        let c = alexander_duality(4, &rp2);
        assert_eq!(c.degree(1), G::cyclic(2));
        assert_eq!(c.degree(2), G::trivial());
    }
}
