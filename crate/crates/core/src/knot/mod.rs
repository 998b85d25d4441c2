//! Combinatorial knot presentations: transverse knots as braid closures and
//! Legendrian knots as front diagrams, with their classical invariants.
//!
//! Conventions. Fronts live in the `(x, z)` plane of `(R^3, ker(dz - y dx))`
//! with `y = dz/dx`; the viewer sits at `y = -∞`, so at a crossing the strand
//! of smaller slope is in front. Crossing signs follow the right-hand rule on
//! the projected oriented tangents. A cusp is *down* if the orientation passes
//! through it from the upper branch to the lower one, *up* otherwise.
//! `tb = writhe - cusps/2`, `rot = (down - up)/2`, and the transverse pushoffs
//! have `sl = tb ∓ rot`. For braid closures `sl = exponent sum - strands`.

mod braid;
mod front;

use serde::{Deserialize, Serialize};

pub use braid::BraidWord;
pub use front::{CuspClass, Direction, FrontEvent, FrontWord, OrientedFront};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "+" | "plus" | "positive" | "pos" => Ok(Sign::Positive),
            "-" | "minus" | "negative" | "neg" => Ok(Sign::Negative),
            other => Err(format!("expected `+` or `-`, got `{other}`")),
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// Outcome of checking a braid or front word. Never an error by itself.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub problems: Vec<String>,
    /// Components of the closure, when the word is structurally sound.
    pub components: Option<usize>,
    /// Cycles of the underlying permutation (braids only), 1-based positions.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cycles: Vec<Vec<usize>>,
}

impl ValidationReport {
    pub fn is_knot(&self) -> bool {
        self.valid && self.components == Some(1)
    }
}

/// Classical invariants of one presentation; Legendrian fields are absent for
/// braids and the transverse field is absent for fronts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalInvariants {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tb: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rot: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sl: Option<i64>,
    pub components: usize,
}

/// Self-linking number of the positive (`tb - rot`) or negative (`tb + rot`)
/// transverse pushoff of a Legendrian knot.
pub fn transverse_pushoff(tb: i64, rot: i64, sign: Sign) -> i64 {
    match sign {
        Sign::Positive => tb - rot,
        Sign::Negative => tb + rot,
    }
}

/// Bennequin inequality `sl <= 2g - 1`.
pub fn bennequin_check(sl: i64, genus: u32) -> bool {
    sl <= 2 * i64::from(genus) - 1
}
