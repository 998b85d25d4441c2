//! Transverse and Legendrian tori of product type and their linking classes.
//!
//! A transverse torus here is `C × K` inside the standard neighbourhood
//! `S^1 × D^3` of a transverse curve `C`, with profile `K` a transverse knot
//! given as a braid closure. Its self-linking class lives in the rank-2 free
//! part of `H_2` of the torus complement spanned by the meridians
//! `α = S^1 × pt × ∂D^2` and `β = pt × S^1 × ∂D^2`, and equals `sl(K)·α`; the
//! pushoff direction is the `w`-coordinate of the local model.
//!
//! A Legendrian torus is `S^1 × K ⊂ S^1 × N` for a nullhomologous Legendrian
//! knot `K` in a closed contact 3-manifold `N`. Its Thurston–Bennequin class
//! is `tb(K)·(S^1 × μ_K)` in `H_2(M \ L) ≅ H_1(N) ⊕ H_2(N) ⊕ Z`.
//!
//! Classes are compared only through their divisibility, which does not depend
//! on the chosen basis. Equal divisibility never certifies isotopy.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::{divisibility, FgAbGroup};
use crate::knot::{BraidWord, FrontWord, Sign};
use crate::{IntGradedGroup, IntGroup};

/// Name of a transverse core curve. Cores are unique up to transverse isotopy,
/// so nothing beyond a label is stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoreLabel(pub String);

impl Default for CoreLabel {
    fn default() -> Self {
        CoreLabel("C".to_string())
    }
}

/// The standard `S^1 × D^3_R` neighbourhood of a transverse curve.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct LocalEngelNeighborhood;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransverseTorusModel {
    pub core: CoreLabel,
    pub profile: BraidWord,
    pub ambient: LocalEngelNeighborhood,
    /// Profile before any stabilization; every stabilization is smoothly isotopic to it.
    pub smooth_origin: BraidWord,
    pub stabilizations: usize,
    /// `C × K` bounds `C × F` for a Seifert surface `F` of `K`.
    pub nullhomologous: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LegendrianTorusModel {
    pub profile: FrontWord,
    pub ambient_n: IntGradedGroup,
    /// Asserted, not checked: `K` is nullhomologous in `N`.
    pub nullhomologous: bool,
    pub smooth_origin: FrontWord,
    pub stabilizations: usize,
}

/// Basis in which a [`HomClass`] is written.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    /// `{α, β}`, the meridian tori of a transverse torus complement.
    #[serde(rename = "alpha_beta")]
    Meridians,
    /// `{S^1 × μ_K}`, the distinguished summand of a product complement.
    #[serde(rename = "s1_x_mu")]
    ProductMeridian,
}

impl Basis {
    pub fn size(self) -> usize {
        match self {
            Basis::Meridians => 2,
            Basis::ProductMeridian => 1,
        }
    }

    pub fn labels(self) -> &'static [&'static str] {
        match self {
            Basis::Meridians => &["alpha", "beta"],
            Basis::ProductMeridian => &["S1xmu_K"],
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(", "))
    }
}

/// An element of a free abelian group written in a named basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomClass {
    basis: Basis,
    coords: Vec<BigInt>,
}

impl HomClass {
    pub fn new(basis: Basis, coords: Vec<BigInt>) -> Result<Self> {
        if coords.len() != basis.size() {
            return Err(Error::ShapeMismatch(format!(
                "{} coordinates for the basis {basis} of size {}",
                coords.len(),
                basis.size()
            )));
        }
        Ok(HomClass { basis, coords })
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn divisibility(&self) -> BigInt {
        divisibility(&self.coords, &FgAbGroup::free(self.basis.size())).expect("coordinates match the basis")
    }

    /// Coordinates after the change of basis `coords ↦ coords · m` (row-vector action).
    pub fn transform(&self, m: &crate::IntMatrix) -> Result<HomClass> {
        let row = crate::homology::Matrix::from_vec(1, self.coords.len(), self.coords.clone())?;
        let image = row.checked_mul(m)?;
        HomClass::new(self.basis, image.entries().to_vec())
    }
}

impl fmt::Display for HomClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> =
            self.coords.iter().zip(self.basis.labels()).map(|(c, l)| format!("{c}·{l}")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    Distinct,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    /// The two divisibilities, present exactly when they differ.
    pub certificate: Option<(BigInt, BigInt)>,
}

pub fn build_dpv_torus(core: CoreLabel, profile: BraidWord) -> Result<TransverseTorusModel> {
    profile.require_knot()?;
    Ok(TransverseTorusModel {
        core,
        smooth_origin: profile.clone(),
        profile,
        ambient: LocalEngelNeighborhood,
        stabilizations: 0,
        nullhomologous: true,
    })
}

/// `sl(K)·α + 0·β`.
pub fn self_linking_class(t: &TransverseTorusModel) -> Result<HomClass> {
    let sl = t.profile.self_linking()?;
    HomClass::new(Basis::Meridians, vec![BigInt::from(sl), BigInt::zero()])
}

/// Replaces the profile by its `n`-fold negative Markov stabilization.
pub fn stabilize_torus(t: &TransverseTorusModel, n: usize) -> TransverseTorusModel {
    let mut out = t.clone();
    for _ in 0..n {
        out.profile = out.profile.markov_stabilize(Sign::Negative);
    }
    out.stabilizations += n;
    out
}

/// Hypotheses under which the linking class of a torus in a 4-manifold takes
/// values in the free group on the two meridians.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransverseAmbient {
    #[serde(rename = "H3_is_zero")]
    pub h3_is_zero: bool,
    pub torus_nullhomologous: bool,
}

impl Default for TransverseAmbient {
    fn default() -> Self {
        TransverseAmbient { h3_is_zero: true, torus_nullhomologous: true }
    }
}

pub fn complement_h2_transverse(ambient: TransverseAmbient) -> Result<(IntGroup, Basis)> {
    if !ambient.h3_is_zero {
        return Err(Error::HypothesisViolated("H_3(M) must vanish".into()));
    }
    if !ambient.torus_nullhomologous {
        return Err(Error::HypothesisViolated("the torus must be nullhomologous in H_2(M)".into()));
    }
    Ok((FgAbGroup::free(2), Basis::Meridians))
}

/// `H_2(S^1 × N \ S^1 × K)` split as `H_1(N) ⊕ H_2(N) ⊕ Z`, the last summand
/// generated by `S^1 × μ_K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductComplementH2 {
    pub group: IntGroup,
    pub h1: IntGroup,
    pub h2: IntGroup,
    pub basis: Basis,
}

fn check_closed_3_manifold(n: &IntGradedGroup) -> Result<()> {
    let z = FgAbGroup::free(1);
    if n.len() > 4 {
        return Err(Error::NotClosed3Manifold(format!("nonzero homology in degree {}", n.len() - 1)));
    }
    if n.degree(0) != z {
        return Err(Error::NotClosed3Manifold(format!("H_0 = {}, expected Z", n.degree(0))));
    }
    if n.degree(3) != z {
        return Err(Error::NotClosed3Manifold(format!("H_3 = {}, expected Z", n.degree(3))));
    }
    if !n.degree(2).is_free() {
        return Err(Error::NotClosed3Manifold(format!("H_2 = {} has torsion", n.degree(2))));
    }
    if n.degree(2).free_rank() != n.degree(1).free_rank() {
        return Err(Error::NotClosed3Manifold("rank H_2 differs from rank H_1".into()));
    }
    Ok(())
}

pub fn complement_h2_product(n: &IntGradedGroup) -> Result<ProductComplementH2> {
    check_closed_3_manifold(n)?;
    let (h1, h2) = (n.degree(1), n.degree(2));
    let group = h1.direct_sum(&h2).direct_sum(&FgAbGroup::free(1));
    Ok(ProductComplementH2 { group, h1, h2, basis: Basis::ProductMeridian })
}

pub fn build_legendrian_torus(profile: FrontWord, ambient_n: IntGradedGroup, nullhomologous: bool) -> Result<LegendrianTorusModel> {
    profile.require_knot()?;
    check_closed_3_manifold(&ambient_n)?;
    Ok(LegendrianTorusModel { smooth_origin: profile.clone(), profile, ambient_n, nullhomologous, stabilizations: 0 })
}

/// `n` Legendrian stabilizations of the profile, all of the given sign.
pub fn stabilize_legendrian_torus(l: &LegendrianTorusModel, n: usize, sign: Sign) -> Result<LegendrianTorusModel> {
    let mut out = l.clone();
    for _ in 0..n {
        out.profile = out.profile.stabilize(sign)?;
    }
    out.stabilizations += n;
    Ok(out)
}

/// `tb(K)·(S^1 × μ_K)`.
pub fn tb_class(l: &LegendrianTorusModel) -> Result<HomClass> {
    if !l.nullhomologous {
        return Err(Error::HypothesisViolated("the profile must be nullhomologous in N".into()));
    }
    complement_h2_product(&l.ambient_n)?;
    let tb = l.profile.tb()?;
    HomClass::new(Basis::ProductMeridian, vec![BigInt::from(tb)])
}

pub fn distinguish(c1: &HomClass, c2: &HomClass) -> Result<Verdict> {
    if c1.basis != c2.basis {
        return Err(Error::BasisMismatch(c1.basis.to_string(), c2.basis.to_string()));
    }
    let (d1, d2) = (c1.divisibility(), c2.divisibility());
    Ok(if d1 != d2 {
        Verdict { outcome: Outcome::Distinct, certificate: Some((d1, d2)) }
    } else {
        Verdict { outcome: Outcome::Inconclusive, certificate: None }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Transverse,
    Legendrian,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Profile {
    Braid(BraidWord),
    Front(FrontWord),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub index: usize,
    /// `sl(K_n)` or `tb(K_n)`.
    pub profile_invariant: i64,
    pub class: HomClass,
    pub divisibility: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairVerdict {
    pub i: usize,
    pub j: usize,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub kind: FamilyKind,
    pub members: Vec<FamilyMember>,
    pub pairs: Vec<PairVerdict>,
    /// The ladder `sl(K_0) - n` (transverse) or `tb(K_0) - n` (Legendrian) as it is
    /// usually quoted, one stabilization lowering the invariant by one.
    pub quoted_ladder: Vec<i64>,
    /// Every member is a stabilization of the same profile, hence smoothly isotopic to it.
    pub smoothly_isotopic: bool,
}

impl FamilyReport {
    pub fn all_distinct(&self) -> bool {
        self.pairs.iter().all(|p| p.verdict.outcome == Outcome::Distinct)
    }

    pub fn divisibilities(&self) -> Vec<BigInt> {
        self.members.iter().map(|m| m.divisibility.clone()).collect()
    }

    pub fn implemented_ladder(&self) -> Vec<i64> {
        self.members.iter().map(|m| m.profile_invariant).collect()
    }

    /// Whether the quoted ladder would separate the family as well.
    pub fn quoted_ladder_distinct(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.quoted_ladder.iter().all(|v| seen.insert(v.abs()))
    }
}

/// Options for [`theorem_family`] beyond the base profile.
#[derive(Clone, Debug)]
pub struct FamilyOptions {
    pub core: CoreLabel,
    pub ambient_n: IntGradedGroup,
    pub nullhomologous: bool,
    pub legendrian_sign: Sign,
}

impl Default for FamilyOptions {
    fn default() -> Self {
        FamilyOptions {
            core: CoreLabel::default(),
            ambient_n: IntGradedGroup::from_betti(&[1, 0, 0, 1]),
            nullhomologous: true,
            legendrian_sign: Sign::Negative,
        }
    }
}

/// Builds the stabilization family `T_0..T_m` (or `L_0..L_m`), computes every
/// class and compares all pairs.
pub fn theorem_family(base: &Profile, count: usize, opts: &FamilyOptions) -> Result<FamilyReport> {
    let (kind, members) = match base {
        Profile::Braid(b) => {
            let t0 = build_dpv_torus(opts.core.clone(), b.clone())?;
            let mut members = Vec::with_capacity(count + 1);
            let mut t = t0;
            for n in 0..=count {
                if n > 0 {
                    t = stabilize_torus(&t, 1);
                }
                let class = self_linking_class(&t)?;
                members.push(FamilyMember {
                    index: n,
                    profile_invariant: t.profile.self_linking()?,
                    divisibility: class.divisibility(),
                    class,
                });
            }
            (FamilyKind::Transverse, members)
        }
        Profile::Front(f) => {
            let l0 = build_legendrian_torus(f.clone(), opts.ambient_n.clone(), opts.nullhomologous)?;
            let mut members = Vec::with_capacity(count + 1);
            let mut l = l0;
            for n in 0..=count {
                if n > 0 {
                    l = stabilize_legendrian_torus(&l, 1, opts.legendrian_sign)?;
                }
                let class = tb_class(&l)?;
                members.push(FamilyMember {
                    index: n,
                    profile_invariant: l.profile.tb()?,
                    divisibility: class.divisibility(),
                    class,
                });
            }
            (FamilyKind::Legendrian, members)
        }
    };
    let mut pairs = Vec::new();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            pairs.push(PairVerdict { i, j, verdict: distinguish(&members[i].class, &members[j].class)? });
        }
    }
    let base_value = members[0].profile_invariant;
    let quoted_ladder = (0..=count as i64).map(|n| base_value - n).collect();
    Ok(FamilyReport { kind, members, pairs, quoted_ladder, smoothly_isotopic: true })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn class(v: &[i64]) -> HomClass {
        HomClass::new(Basis::Meridians, big(v)).unwrap()
    }

    #[test]
    fn dpv_construction() {
        assert!(build_dpv_torus(CoreLabel::default(), BraidWord::unknot()).is_ok());
        assert!(build_dpv_torus(CoreLabel::default(), BraidWord::torus_knot_2(3)).is_ok());
        assert_eq!(
            build_dpv_torus(CoreLabel::default(), BraidWord::torus_knot_2(2)),
            Err(Error::MultiComponent(2))
        );
    }

    #[test]
    fn self_linking_classes() {
        let u = build_dpv_torus(CoreLabel::default(), BraidWord::unknot()).unwrap();
        assert_eq!(self_linking_class(&u).unwrap().coords(), big(&[-1, 0]));
        let t = build_dpv_torus(CoreLabel::default(), BraidWord::torus_knot_2(3)).unwrap();
        assert_eq!(self_linking_class(&t).unwrap().coords(), big(&[1, 0]));
        let s = stabilize_torus(&u, 1);
        assert_eq!(self_linking_class(&s).unwrap().coords(), big(&[-3, 0]));
    }

    #[test]
    fn stabilization_counts() {
        let u = build_dpv_torus(CoreLabel::default(), BraidWord::unknot()).unwrap();
        assert_eq!(stabilize_torus(&u, 0), u);
        assert_eq!(stabilize_torus(&u, 5).profile.self_linking().unwrap(), -11);
        assert_eq!(stabilize_torus(&u, 5).smooth_origin, BraidWord::unknot());
    }

    #[test]
    fn transverse_complement_hypotheses() {
        let ok = complement_h2_transverse(TransverseAmbient::default()).unwrap();
        assert_eq!(ok, (FgAbGroup::free(2), Basis::Meridians));
        for amb in [
            TransverseAmbient { h3_is_zero: false, torus_nullhomologous: true },
            TransverseAmbient { h3_is_zero: true, torus_nullhomologous: false },
        ] {
            let e = complement_h2_transverse(amb).unwrap_err();
            assert!(e.is_hypothesis_violation());
        }
    }

    #[test]
    fn product_complement_examples() {
        let s3 = IntGradedGroup::from_betti(&[1, 0, 0, 1]);
        assert_eq!(complement_h2_product(&s3).unwrap().group, FgAbGroup::free(1));
        let s1s2 = IntGradedGroup::from_betti(&[1, 1, 1, 1]);
        assert_eq!(complement_h2_product(&s1s2).unwrap().group, FgAbGroup::free(3));
        let t3 = IntGradedGroup::from_betti(&[1, 3, 3, 1]);
        assert_eq!(complement_h2_product(&t3).unwrap().group, FgAbGroup::free(7));
        // lens space L(5,1): H_1 = Z/5 survives as torsion
        let lens = IntGradedGroup::new(vec![
            FgAbGroup::free(1),
            FgAbGroup::cyclic(BigInt::from(5)),
            FgAbGroup::trivial(),
            FgAbGroup::free(1),
        ]);
        let g = complement_h2_product(&lens).unwrap().group;
        assert_eq!((g.free_rank(), g.invariant_factors()), (1, &[BigInt::from(5)][..]));
    }

    #[test]
    fn product_complement_rejects_non_manifolds() {
        for bad in [
            IntGradedGroup::from_betti(&[1, 1]),
            IntGradedGroup::from_betti(&[2, 0, 0, 1]),
            IntGradedGroup::from_betti(&[1, 0, 0, 1, 1]),
            IntGradedGroup::from_betti(&[1, 1, 0, 1]),
        ] {
            assert!(matches!(complement_h2_product(&bad), Err(Error::NotClosed3Manifold(_))));
        }
    }

    #[test]
    fn tb_classes() {
        let s3 = IntGradedGroup::from_betti(&[1, 0, 0, 1]);
        let l = build_legendrian_torus(FrontWord::unknot(), s3.clone(), true).unwrap();
        assert_eq!(tb_class(&l).unwrap().coords(), big(&[-1]));
        let l1 = stabilize_legendrian_torus(&l, 1, Sign::Positive).unwrap();
        assert_eq!(tb_class(&l1).unwrap().coords(), big(&[-2]));
        let tr = build_legendrian_torus(FrontWord::trefoil(), s3.clone(), true).unwrap();
        assert_eq!(tb_class(&tr).unwrap().coords(), big(&[1]));
        let bad = build_legendrian_torus(FrontWord::unknot(), s3, false).unwrap();
        assert!(tb_class(&bad).unwrap_err().is_hypothesis_violation());
    }

    #[test]
    fn verdicts() {
        let v = distinguish(&class(&[-1, 0]), &class(&[-3, 0])).unwrap();
        assert_eq!(v.outcome, Outcome::Distinct);
        assert_eq!(v.certificate, Some((BigInt::from(1), BigInt::from(3))));
        let v = distinguish(&class(&[-1, 0]), &class(&[1, 0])).unwrap();
        assert_eq!(v.outcome, Outcome::Inconclusive);
        let c = class(&[4, 6]);
        assert_eq!(distinguish(&c, &c).unwrap().outcome, Outcome::Inconclusive);
        let other = HomClass::new(Basis::ProductMeridian, big(&[1])).unwrap();
        assert!(matches!(distinguish(&c, &other), Err(Error::BasisMismatch(..))));
    }

    #[test]
    fn families() {
        let t = theorem_family(&Profile::Braid(BraidWord::unknot()), 5, &FamilyOptions::default()).unwrap();
        assert_eq!(t.pairs.len(), 15);
        assert!(t.all_distinct());
        assert_eq!(t.divisibilities(), big(&[1, 3, 5, 7, 9, 11]));
        assert_eq!(t.quoted_ladder, vec![-1, -2, -3, -4, -5, -6]);
        assert!(t.quoted_ladder_distinct());

        let l = theorem_family(&Profile::Front(FrontWord::unknot()), 5, &FamilyOptions::default()).unwrap();
        assert_eq!(l.divisibilities(), big(&[1, 2, 3, 4, 5, 6]));
        assert!(l.all_distinct());

        let e = theorem_family(&Profile::Braid(BraidWord::unknot()), 0, &FamilyOptions::default()).unwrap();
        assert!(e.pairs.is_empty());
    }
}
