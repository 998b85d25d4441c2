//! Scenario checks behind the `verify` subcommands: the two stabilization
//! families, the product-complement and torus-complement instances, and a
//! seeded sweep over the algebraic and knot-theoretic laws.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use crate::catalog;
use crate::error::Result;
use crate::homology::{
    alexander_duality, divisibility, homology, is_exact, smith_normal_form, tensor, FgAbGroup, Matrix,
};
use crate::knot::{transverse_pushoff, BraidWord, FrontWord, Sign};
use crate::random;
use crate::torus::{complement_h2_product, theorem_family, FamilyOptions, FamilyReport, Profile};
use crate::{IntGradedGroup, IntGroup};

/// Transverse family on the unknot braid: `count` stabilizations, all pairs compared.
pub fn thm11(count: usize) -> Result<FamilyReport> {
    theorem_family(&Profile::Braid(BraidWord::unknot()), count, &FamilyOptions::default())
}

/// Legendrian family on the tb = -1 unknot front inside `S^1 × S^3`.
pub fn thm12(count: usize) -> Result<FamilyReport> {
    theorem_family(&Profile::Front(FrontWord::unknot()), count, &FamilyOptions::default())
}

/// One product-complement comparison: `H_2` of `S^1 × (N \ K)` computed from
/// chain complexes against the closed-form prediction from `H_*(N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductComplementCase {
    pub name: String,
    pub ambient: IntGradedGroup,
    pub computed: IntGroup,
    pub predicted: IntGroup,
}

impl ProductComplementCase {
    pub fn agrees(&self) -> bool {
        self.computed == self.predicted
    }
}

fn product_case(name: &str, ambient: IntGradedGroup, spine: &crate::IntChainComplex) -> Result<ProductComplementCase> {
    let circle = catalog::get("circle")?.complex;
    let computed = homology(&tensor(&circle, spine)?)?.degree(2);
    let predicted = complement_h2_product(&ambient)?.group;
    Ok(ProductComplementCase { name: name.to_string(), ambient, computed, predicted })
}

/// Knots in `S^3` (unknot, trefoil, cinquefoil) plus the local unknot in `S^1 × S^2`.
pub fn lemma42() -> Result<Vec<ProductComplementCase>> {
    let s3 = catalog::get("sphere3")?.expected;
    let mut cases = Vec::new();
    for (name, braid) in [
        ("unknot", BraidWord::unknot()),
        ("trefoil", BraidWord::torus_knot_2(3)),
        ("cinquefoil", BraidWord::torus_knot_2(5)),
    ] {
        cases.push(product_case(name, s3.clone(), &catalog::wirtinger_spine(&braid)?)?);
    }
    let s1s2 = catalog::get("s1xs2")?.expected;
    let local = catalog::get("s1xs2_local_unknot_complement")?.complex;
    cases.push(product_case("s1xs2_local_unknot", s1s2, &local)?);
    Ok(cases)
}

/// The Mayer–Vietoris segment
/// `0 → H_2(∂νT) → H_2(νT) ⊕ H_2(M \ νT) → H_2(M)` for the unknotted torus in `S^4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusSegment {
    /// Maps in arrow order, starting with the zero map into `H_2(∂νT)`.
    pub maps: Vec<Matrix<BigInt>>,
    pub exact: bool,
    pub f_injective: bool,
    /// Reduced `H_2` of the torus complement by sphere duality.
    pub complement_h2: IntGroup,
}

pub fn torus_segment() -> Result<TorusSegment> {
    let torus = catalog::get("torus2")?.expected;
    let complement_h2 = alexander_duality(4, &torus).degree(2);
    let nbhd_h2 = 1usize;
    let sphere4 = crate::IntChainComplex::with_zero_boundaries(vec![1, 0, 0, 0, 1]);
    let ambient_h2 = homology(&sphere4)?.degree(2).num_generators();
    let boundary_h2 = 3usize;
    let middle = nbhd_h2 + complement_h2.free_rank();
    // [S^1×S^1×pt, α, β] ↦ [(T, 0), (0, α), (0, β)]
    let mut f = Matrix::zeros(middle, boundary_h2);
    for i in 0..boundary_h2.min(middle) {
        f[(i, i)] = BigInt::one();
    }
    let maps = vec![Matrix::zeros(boundary_h2, 0), f.clone(), Matrix::zeros(ambient_h2, middle)];
    let exact = is_exact(&maps)?;
    let f_injective = smith_normal_form(&f).rank == boundary_h2;
    Ok(TorusSegment { maps, exact, f_injective, complement_h2 })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawCheck {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<LawCheck>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures.is_empty())
    }
}

struct Tally(Vec<LawCheck>);

impl Tally {
    fn record(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        let idx = match self.0.iter().position(|c| c.name == name) {
            Some(i) => i,
            None => {
                self.0.push(LawCheck { name, checked: 0, failures: Vec::new() });
                self.0.len() - 1
            }
        };
        let c = &mut self.0[idx];
        c.checked += 1;
        if !ok {
            c.failures.push(detail());
        }
    }
}

fn is_odd(x: i64) -> bool {
    x.rem_euclid(2) == 1
}

/// Runs `samples` random instances of every law with a seeded generator.
pub fn laws(seed: u64, samples: usize) -> Result<LawReport> {
    let mut rng = random::rng(seed);
    let mut t = Tally(Vec::new());
    for _ in 0..samples {
        knot_laws(&mut rng, &mut t)?;
        algebra_laws(&mut rng, &mut t)?;
    }
    Ok(LawReport { seed, samples, checks: t.0 })
}

fn knot_laws(rng: &mut impl Rng, t: &mut Tally) -> Result<()> {
    let b = random::braid_knot(rng, 5, 12);
    let sl = b.self_linking()?;
    t.record("braid sl odd", is_odd(sl), || format!("{b:?}: sl = {sl}"));
    let neg = b.markov_stabilize(Sign::Negative);
    let pos = b.markov_stabilize(Sign::Positive);
    t.record("markov negative lowers sl by 2", neg.self_linking()? == sl - 2, || format!("{b:?}"));
    t.record("markov positive keeps sl", pos.self_linking()? == sl, || format!("{b:?}"));

    let f = random::front_knot(rng, 6, 10);
    let o = f.orient()?;
    let (tb, rot) = (o.tb(), o.rot());
    t.record("tb + rot odd", is_odd(tb + rot), || format!("{f:?}: tb {tb}, rot {rot}"));
    for sign in [Sign::Positive, Sign::Negative] {
        let s = f.stabilize(sign)?.orient()?;
        let ok = s.tb() == tb - 1 && s.rot() == rot + sign.as_i64();
        t.record("stabilization shifts (tb, rot)", ok, || {
            format!("{f:?} {sign}: ({tb}, {rot}) -> ({}, {})", s.tb(), s.rot())
        });
    }
    let r = o.reversed();
    t.record("reversal negates rot", r.rot() == -rot && r.tb() == tb, || format!("{f:?}"));
    for sign in [Sign::Positive, Sign::Negative] {
        let p = transverse_pushoff(tb, rot, sign);
        t.record("pushoff sl odd", is_odd(p), || format!("{f:?} {sign}: {p}"));
    }
    Ok(())
}

fn algebra_laws(rng: &mut impl Rng, t: &mut Tally) -> Result<()> {
    let (rows, cols) = (rng.gen_range(0..=8), rng.gen_range(0..=8));
    let a: Matrix<BigInt> = random::matrix(rng, rows, cols, 50);
    let s = smith_normal_form(&a);
    let reproduces = &(&s.u * &a) * &s.v == s.d;
    let unimodular = s.u.is_unimodular() && s.v.is_unimodular();
    let factors = s.invariant_factors();
    let chain = factors.windows(2).all(|w| (&w[1] % &w[0]).is_zero());
    t.record("smith form reproduces", reproduces && unimodular && chain, || format!("{a:?}"));

    let (c, expected) = random::disguised_complex(rng, 3, 6);
    let h = homology(&c)?;
    t.record("homology of disguised complexes", h == expected, || format!("{h} vs {expected}"));

    let v: Vec<BigInt> = (0..2).map(|_| BigInt::from(rng.gen_range(-60..=60))).collect();
    let (u, _) = random::unimodular::<BigInt>(rng, 2, 8);
    let moved = Matrix::from_vec(1, 2, v.clone())?.checked_mul(&u)?;
    let free = FgAbGroup::free(2);
    let same = divisibility(&v, &free)? == divisibility(moved.entries(), &free)?;
    t.record("divisibility basis invariant", same, || format!("{v:?} under {u:?}"));
    Ok(())
}
