//! Reading inputs. Every loader also accepts the JSON the CLI itself emits,
//! so outputs can be fed back in.

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use engeltori::catalog;
use engeltori::homology::homology;
use engeltori::io::{self, ScenarioManifest};
use engeltori::torus::Profile;
use engeltori::{IntChainComplex, IntGradedGroup};
use serde_json::Value;

pub const CATALOG_ENV: &str = "ENGELTORI_CATALOG_DIR";

pub fn catalog_dir() -> Option<PathBuf> {
    std::env::var_os(CATALOG_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    io::parse_value(&text).with_context(|| format!("parsing {}", path.display()))
}

/// The value under `key` when present, otherwise the value itself.
fn unwrap_key<'a>(v: &'a Value, key: &str) -> &'a Value {
    v.get(key).unwrap_or(v)
}

pub fn profile(path: &Path) -> Result<Profile> {
    let v = read_json(path)?;
    Ok(io::profile_from_value(unwrap_key(&v, "profile")).with_context(|| format!("profile in {}", path.display()))?)
}

pub fn manifest(path: &Path) -> Result<ScenarioManifest> {
    let v = read_json(path)?;
    Ok(io::manifest_from_value(unwrap_key(&v, "manifest")).with_context(|| format!("manifest {}", path.display()))?)
}

/// A complex from a file or `catalog:<id>`.
pub fn complex(arg: &str) -> Result<IntChainComplex> {
    if let Some(id) = arg.strip_prefix("catalog:") {
        return Ok(catalog::get_with_override(id, catalog_dir().as_deref())?.complex);
    }
    let v = read_json(Path::new(arg))?;
    Ok(io::complex_from_value(unwrap_key(&v, "complex")).with_context(|| format!("chain complex in {arg}"))?)
}

/// Homology given directly, or computed from a complex, a file of either kind or `catalog:<id>`.
pub enum GradedInput {
    Complex(IntChainComplex),
    Groups(IntGradedGroup),
}

impl GradedInput {
    pub fn homology(&self) -> Result<IntGradedGroup> {
        match self {
            GradedInput::Complex(c) => Ok(homology(c)?),
            GradedInput::Groups(g) => Ok(g.clone()),
        }
    }
}

pub fn graded(arg: &str) -> Result<GradedInput> {
    if arg.starts_with("catalog:") {
        return Ok(GradedInput::Complex(complex(arg)?));
    }
    let v = read_json(Path::new(arg))?;
    let inner = unwrap_key(&v, "complex");
    if inner.get("dims").is_some() {
        return Ok(GradedInput::Complex(io::complex_from_value(inner).with_context(|| format!("chain complex in {arg}"))?));
    }
    let groups = unwrap_key(&v, "homology");
    Ok(GradedInput::Groups(io::graded_from_value(groups).with_context(|| format!("graded group in {arg}"))?))
}
