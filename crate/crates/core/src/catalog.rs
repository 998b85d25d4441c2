//! Built-in complexes with known homology, and presentation 2-complexes of
//! knot complements read off braid closures.

use std::path::Path;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::homology::{homology, tensor, ChainComplex, FgAbGroup, GradedGroup, Matrix};
use crate::knot::BraidWord;
use crate::{IntChainComplex, IntGradedGroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: String,
    pub complex: IntChainComplex,
    /// Homology the complex is known to have, written down independently of the engine.
    pub expected: IntGradedGroup,
    pub provenance: String,
}

impl CatalogEntry {
    /// Recomputes the homology and compares it with the stated value.
    pub fn verify(&self) -> Result<bool> {
        Ok(homology(&self.complex)? == self.expected)
    }
}

/// Every built-in id, in a stable order.
pub const IDS: &[&str] = &[
    "point",
    "circle",
    "disk",
    "sphere2",
    "sphere3",
    "torus2",
    "torus3",
    "solid_torus",
    "s1xs2",
    "unknot_complement",
    "trefoil_spine",
    "cinquefoil_spine",
    "moore_z2",
    "s1xs2_local_unknot_complement",
];

fn zero_complex(dims: &[usize]) -> IntChainComplex {
    ChainComplex::with_zero_boundaries(dims.to_vec())
}

fn betti(b: &[usize]) -> IntGradedGroup {
    GradedGroup::from_betti(b)
}

fn entry(id: &str, complex: IntChainComplex, expected: IntGradedGroup, provenance: &str) -> CatalogEntry {
    CatalogEntry { id: id.to_string(), complex, expected, provenance: provenance.to_string() }
}

fn circle() -> IntChainComplex {
    zero_complex(&[1, 1])
}

fn disk() -> IntChainComplex {
    ChainComplex::new(vec![1, 1, 1], vec![Matrix::zeros(1, 1), Matrix::from_rows(&[[1]])]).expect("shapes")
}

fn sphere(n: usize) -> IntChainComplex {
    let mut dims = vec![0; n + 1];
    dims[0] = 1;
    dims[n] = 1;
    zero_complex(&dims)
}

fn product(a: &IntChainComplex, b: &IntChainComplex) -> IntChainComplex {
    tensor(a, b).expect("catalog complexes are valid")
}

pub fn get(id: &str) -> Result<CatalogEntry> {
    let e = match id {
        "point" => entry(id, ChainComplex::point(), betti(&[1]), "single 0-cell"),
        "circle" => entry(id, circle(), betti(&[1, 1]), "one 0-cell, one 1-cell, zero boundary"),
        "disk" => entry(id, disk(), betti(&[1]), "circle with a 2-cell attached along the 1-cell"),
        "sphere2" => entry(id, sphere(2), betti(&[1, 0, 1]), "0-cell plus 2-cell"),
        "sphere3" => entry(id, sphere(3), betti(&[1, 0, 0, 1]), "0-cell plus 3-cell"),
        "torus2" => entry(id, zero_complex(&[1, 2, 1]), betti(&[1, 2, 1]), "standard CW torus, all boundaries zero"),
        "torus3" => entry(
            id,
            product(&product(&circle(), &circle()), &circle()),
            betti(&[1, 3, 3, 1]),
            "circle x circle x circle",
        ),
        "solid_torus" | "unknot_complement" => entry(
            id,
            product(&circle(), &disk()),
            betti(&[1, 1]),
            "circle x disk; the unknot complement in S^3 is a solid torus",
        ),
        "s1xs2" => entry(id, product(&circle(), &sphere(2)), betti(&[1, 1, 1, 1]), "circle x sphere2"),
        "trefoil_spine" => entry(
            id,
            ChainComplex::new(vec![1, 2, 1], vec![Matrix::zeros(1, 2), Matrix::from_rows(&[[1], [-1]])])
                .expect("shapes"),
            betti(&[1, 1, 0]),
            "presentation <x, y | xyx = yxy>; exponent sums of x, y in xyxy^-1x^-1y^-1 are 1, -1",
        ),
        "cinquefoil_spine" => entry(
            id,
            wirtinger_spine(&BraidWord::torus_knot_2(5))?,
            betti(&[1, 1, 0]),
            "Wirtinger spine of the closure of sigma_1^5",
        ),
        "moore_z2" => entry(
            id,
            ChainComplex::new(vec![1, 1, 1], vec![Matrix::zeros(1, 1), Matrix::from_rows(&[[2]])]).expect("shapes"),
            GradedGroup::new(vec![FgAbGroup::free(1), FgAbGroup::cyclic(BigInt::from(2))]),
            "2-cell attached to a circle by a degree-2 map",
        ),
        "s1xs2_local_unknot_complement" => entry(
            id,
            zero_complex(&[1, 2, 1]),
            betti(&[1, 2, 1]),
            "(S^1 x S^2) # (S^1 x D^2) up to homotopy: S^1 v S^1 v S^2; \
             Mayer-Vietoris over the separating sphere gives H_1 = Z^2, H_2 = Z",
        ),
        _ => return Err(Error::UnknownId(id.to_string())),
    };
    Ok(e)
}

/// Looks for `<dir>/<id>.json` in the chain-complex format before falling back to [`get`].
/// The homology of an override entry is taken to be whatever the engine computes.
pub fn get_with_override(id: &str, dir: Option<&Path>) -> Result<CatalogEntry> {
    if let Some(dir) = dir {
        let path = dir.join(format!("{id}.json"));
        if path.is_file() {
            let text = std::fs::read_to_string(&path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
            let complex = crate::io::parse_complex(&text)?;
            let expected = homology(&complex)?;
            return Ok(CatalogEntry {
                id: id.to_string(),
                complex,
                expected,
                provenance: format!("user override {}", path.display()),
            });
        }
    }
    get(id)
}

/// Closure diagram of a braid, traced as a cyclic sequence of crossing visits.
struct ClosureDiagram {
    /// For each crossing: (over arc, incoming under arc, outgoing under arc, sign).
    crossings: Vec<(usize, usize, usize, i32)>,
    arcs: usize,
}

fn closure_diagram(b: &BraidWord) -> Result<ClosureDiagram> {
    b.require_knot()?;
    let n = b.strands();
    let word = b.word();
    let len = word.len();
    if len == 0 {
        return Ok(ClosureDiagram { crossings: Vec::new(), arcs: 1 });
    }
    // A positive letter σ_i carries the strand entering at position i-1 over the one at i.
    let mut over_arc = vec![None; len];
    let mut under = vec![(0usize, 0usize); len];
    let mut arc = 0usize;
    let (mut pos, mut level) = (0usize, 0usize);
    for _ in 0..n * len {
        let l = word[level];
        let i = l.unsigned_abs() as usize;
        if pos + 1 == i || pos == i {
            let from_left = pos + 1 == i;
            let is_over = from_left == (l > 0);
            if is_over {
                over_arc[level] = Some(arc);
            } else {
                under[level].0 = arc;
                arc += 1;
                under[level].1 = arc;
            }
            pos = if from_left { i } else { i - 1 };
        }
        level += 1;
        if level == len {
            level = 0;
        }
    }
    debug_assert_eq!((pos, level), (0, 0));
    let arcs = arc;
    let wrap = |a: usize| a % arcs;
    let crossings = (0..len)
        .map(|t| {
            let o = over_arc[t].expect("every crossing has an over strand");
            (wrap(o), wrap(under[t].0), wrap(under[t].1), word[t].signum())
        })
        .collect();
    Ok(ClosureDiagram { crossings, arcs })
}

/// Presentation 2-complex of the complement of the closure of `b` in `S^3`: one
/// 0-cell, a 1-cell per arc, a 2-cell per Wirtinger relator with the last one
/// dropped. `d_2` holds the exponent sums of the relators (abelianized Fox derivatives).
pub fn wirtinger_spine(b: &BraidWord) -> Result<IntChainComplex> {
    let diagram = closure_diagram(b)?;
    let arcs = diagram.arcs;
    let relators: Vec<Vec<(usize, i32)>> = diagram
        .crossings
        .iter()
        .map(|&(over, inc, out, eps)| vec![(over, eps), (inc, 1), (over, -eps), (out, -1)])
        .collect();
    let kept = relators.len().saturating_sub(1);
    let mut d2 = Matrix::zeros(arcs, kept);
    for (j, r) in relators.iter().take(kept).enumerate() {
        for &(g, e) in r {
            d2[(g, j)] += BigInt::from(e);
        }
    }
    ChainComplex::new(vec![1, arcs, kept], vec![Matrix::zeros(1, arcs), d2])
}
