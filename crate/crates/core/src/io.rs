//! JSON formats.
//!
//! * braid: `{"strands": n, "word": [i, -i, ...]}`
//! * front: `{"events": [{"kind": "L"|"R"|"X", "pos": p}, ...]}`
//! * chain complex: `{"dims": [...], "boundaries": [d_1, d_2, ...]}`, each `d_k` a
//!   row-major list of rows with `dims[k-1]` rows and `dims[k]` columns (an empty
//!   list when there are no rows)
//! * graded group: `{"groups": [{"free_rank": r, "torsion": [d, ...]}, ...]}`, one
//!   entry per degree from 0; a bare list of groups is accepted on input
//! * scenario manifest: `{"kind": "transverse"|"legendrian", "profile": <braid or
//!   front>, "ambient": {"N": <graded group or "catalog:id">}, "stabilizations": m}`
//!
//! Integers that do not fit in 64 bits are written as decimal strings.

use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::catalog;
use crate::error::{Error, Result};
use crate::homology::{homology, ChainComplex, FgAbGroup, GradedGroup, Matrix};
use crate::knot::{BraidWord, FrontWord, Sign};
use crate::torus::{CoreLabel, FamilyKind, Profile, TransverseAmbient};
use crate::{IntChainComplex, IntGradedGroup, IntGroup};

fn fmt_err(e: impl std::fmt::Display) -> Error {
    Error::Format(e.to_string())
}

pub fn parse_value(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(fmt_err)
}

pub fn int_to_value(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => json!(i),
        None => Value::String(v.to_string()),
    }
}

pub fn int_from_value(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(Error::Format(format!("expected an integer, got {n}")))
            }
        }
        Value::String(s) => s.trim().parse().map_err(|_| Error::Format(format!("expected an integer, got \"{s}\""))),
        other => Err(Error::Format(format!("expected an integer, got {other}"))),
    }
}

fn usize_field(obj: &Map<String, Value>, key: &str) -> Result<usize> {
    obj.get(key)
        .and_then(Value::as_u64)
        .map(|u| u as usize)
        .ok_or_else(|| Error::Format(format!("missing or non-integer field `{key}`")))
}

pub fn braid_from_value(v: &Value) -> Result<BraidWord> {
    BraidWord::deserialize(v).map_err(|e| Error::Format(format!("braid: {e}")))
}

pub fn front_from_value(v: &Value) -> Result<FrontWord> {
    FrontWord::deserialize(v).map_err(|e| Error::Format(format!("front: {e}")))
}

/// A braid if the object has `strands`, a front if it has `events`.
pub fn profile_from_value(v: &Value) -> Result<Profile> {
    let obj = v.as_object().ok_or_else(|| Error::Format("profile must be a JSON object".into()))?;
    if obj.contains_key("strands") {
        Ok(Profile::Braid(braid_from_value(v)?))
    } else if obj.contains_key("events") {
        Ok(Profile::Front(front_from_value(v)?))
    } else {
        Err(Error::Format("profile needs either `strands`/`word` (braid) or `events` (front)".into()))
    }
}

pub fn parse_profile(text: &str) -> Result<Profile> {
    profile_from_value(&parse_value(text)?)
}

pub fn profile_to_value(p: &Profile) -> Value {
    match p {
        Profile::Braid(b) => serde_json::to_value(b).expect("serializable"),
        Profile::Front(f) => serde_json::to_value(f).expect("serializable"),
    }
}

fn matrix_from_value(v: &Value, rows: usize, cols: usize, what: &str) -> Result<Matrix<BigInt>> {
    let list = v.as_array().ok_or_else(|| Error::Format(format!("{what} must be a list of rows")))?;
    if rows == 0 || cols == 0 {
        // An empty side carries no entries; accept `[]` or a list of empty rows.
        if list.iter().all(|r| r.as_array().is_some_and(|r| r.is_empty())) && (list.is_empty() || list.len() == rows) {
            return Ok(Matrix::zeros(rows, cols));
        }
    }
    if list.len() != rows {
        return Err(Error::ShapeMismatch(format!("{what} has {} rows, expected {rows}", list.len())));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for (i, r) in list.iter().enumerate() {
        let r = r.as_array().ok_or_else(|| Error::Format(format!("{what} row {i} is not a list")))?;
        if r.len() != cols {
            return Err(Error::ShapeMismatch(format!("{what} row {i} has {} entries, expected {cols}", r.len())));
        }
        for x in r {
            data.push(int_from_value(x)?);
        }
    }
    Matrix::from_vec(rows, cols, data)
}

fn matrix_to_value(m: &Matrix<BigInt>) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(int_to_value).collect())).collect())
}

pub fn complex_from_value(v: &Value) -> Result<IntChainComplex> {
    let obj = v.as_object().ok_or_else(|| Error::Format("chain complex must be a JSON object".into()))?;
    let dims: Vec<usize> = obj
        .get("dims")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Format("missing `dims`".into()))?
        .iter()
        .map(|d| d.as_u64().map(|u| u as usize).ok_or_else(|| Error::Format("`dims` entries must be nonnegative integers".into())))
        .collect::<Result<_>>()?;
    let empty = Vec::new();
    let raw = match obj.get("boundaries") {
        Some(b) => b.as_array().ok_or_else(|| Error::Format("`boundaries` must be a list".into()))?,
        None => &empty,
    };
    let expected = dims.len().saturating_sub(1);
    if raw.len() != expected {
        return Err(Error::ShapeMismatch(format!("{} degrees need {expected} boundary matrices, got {}", dims.len(), raw.len())));
    }
    let boundaries = raw
        .iter()
        .enumerate()
        .map(|(k, m)| matrix_from_value(m, dims[k], dims[k + 1], &format!("d{}", k + 1)))
        .collect::<Result<Vec<_>>>()?;
    ChainComplex::new(dims, boundaries)
}

pub fn parse_complex(text: &str) -> Result<IntChainComplex> {
    complex_from_value(&parse_value(text)?)
}

pub fn complex_to_value(c: &IntChainComplex) -> Value {
    json!({
        "dims": c.dims(),
        "boundaries": c.boundaries().iter().map(matrix_to_value).collect::<Vec<_>>(),
    })
}

pub fn group_to_value(g: &IntGroup) -> Value {
    json!({
        "free_rank": g.free_rank(),
        "torsion": g.invariant_factors().iter().map(int_to_value).collect::<Vec<_>>(),
    })
}

pub fn group_from_value(v: &Value) -> Result<IntGroup> {
    let obj = v.as_object().ok_or_else(|| Error::Format("group must be an object".into()))?;
    let free_rank = usize_field(obj, "free_rank")?;
    let torsion = match obj.get("torsion") {
        None => Vec::new(),
        Some(t) => t
            .as_array()
            .ok_or_else(|| Error::Format("`torsion` must be a list".into()))?
            .iter()
            .map(int_from_value)
            .collect::<Result<Vec<_>>>()?,
    };
    FgAbGroup::new(free_rank, torsion)
}

pub fn graded_to_value(g: &IntGradedGroup) -> Value {
    json!({ "groups": g.groups().iter().map(group_to_value).collect::<Vec<_>>() })
}

/// Accepts `{"groups": [...]}` or a bare list.
pub fn graded_from_value(v: &Value) -> Result<IntGradedGroup> {
    let list = match v {
        Value::Array(a) => a,
        Value::Object(o) => o
            .get("groups")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Format("graded group needs a `groups` list".into()))?,
        _ => return Err(Error::Format("graded group must be a list or an object with `groups`".into())),
    };
    Ok(GradedGroup::new(list.iter().map(group_from_value).collect::<Result<_>>()?))
}

/// Either an explicit graded group or the homology of a catalog entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradedSource {
    Inline(IntGradedGroup),
    Catalog(String),
}

impl GradedSource {
    pub fn from_value(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => Ok(GradedSource::Catalog(s.strip_prefix("catalog:").unwrap_or(s).to_string())),
            other => Ok(GradedSource::Inline(graded_from_value(other)?)),
        }
    }

    pub fn resolve(&self, catalog_dir: Option<&Path>) -> Result<IntGradedGroup> {
        match self {
            GradedSource::Inline(g) => Ok(g.clone()),
            GradedSource::Catalog(id) => homology(&catalog::get_with_override(id, catalog_dir)?.complex),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OutputPaths {
    pub json: Option<PathBuf>,
    pub text: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScenarioManifest {
    pub kind: FamilyKind,
    pub profile: Profile,
    pub core: CoreLabel,
    /// Homology of the closed 3-manifold `N` (Legendrian scenarios); defaults to `S^3`.
    pub ambient_n: GradedSource,
    /// Hypothesis flags for the transverse complement computation.
    pub transverse_ambient: TransverseAmbient,
    pub nullhomologous: bool,
    pub stabilizations: usize,
    pub sign: Sign,
    pub output: OutputPaths,
}

pub fn manifest_from_value(v: &Value) -> Result<ScenarioManifest> {
    let obj = v.as_object().ok_or_else(|| Error::Format("manifest must be a JSON object".into()))?;
    let kind: FamilyKind = obj
        .get("kind")
        .ok_or_else(|| Error::Format("manifest needs `kind`".into()))
        .and_then(|k| FamilyKind::deserialize(k).map_err(|e| Error::Format(format!("kind: {e}"))))?;
    let profile = profile_from_value(obj.get("profile").ok_or_else(|| Error::Format("manifest needs `profile`".into()))?)?;
    match (kind, &profile) {
        (FamilyKind::Transverse, Profile::Braid(_)) | (FamilyKind::Legendrian, Profile::Front(_)) => {}
        _ => return Err(Error::Format("transverse scenarios take a braid profile, legendrian ones a front".into())),
    }
    let empty = Map::new();
    let ambient = match obj.get("ambient") {
        None | Some(Value::Null) => &empty,
        Some(Value::Object(o)) => o,
        Some(_) => return Err(Error::Format("`ambient` must be an object".into())),
    };
    let ambient_n = match ambient.get("N") {
        Some(n) => GradedSource::from_value(n)?,
        None => GradedSource::Catalog("sphere3".into()),
    };
    let flag = |o: &Map<String, Value>, key: &str| -> Result<bool> {
        match o.get(key) {
            None => Ok(true),
            Some(Value::Bool(b)) => Ok(*b),
            Some(_) => Err(Error::Format(format!("`{key}` must be a boolean"))),
        }
    };
    let transverse_ambient = TransverseAmbient {
        h3_is_zero: flag(ambient, "H3_is_zero")?,
        torus_nullhomologous: flag(ambient, "torus_nullhomologous")?,
    };
    let nullhomologous = flag(ambient, "nullhomologous")?;
    let stabilizations = match obj.get("stabilizations") {
        None => 0,
        Some(s) => s.as_u64().ok_or_else(|| Error::Format("`stabilizations` must be a nonnegative integer".into()))? as usize,
    };
    let sign = match obj.get("sign") {
        None => Sign::Negative,
        Some(s) => Sign::deserialize(s).map_err(|e| Error::Format(format!("sign: {e}")))?,
    };
    let core = match obj.get("core") {
        None => CoreLabel::default(),
        Some(Value::String(s)) => CoreLabel(s.clone()),
        Some(_) => return Err(Error::Format("`core` must be a string label".into())),
    };
    let mut output = OutputPaths::default();
    if let Some(o) = obj.get("output").and_then(Value::as_object) {
        output.json = o.get("json").and_then(Value::as_str).map(PathBuf::from);
        output.text = o.get("text").and_then(Value::as_str).map(PathBuf::from);
    }
    Ok(ScenarioManifest { kind, profile, core, ambient_n, transverse_ambient, nullhomologous, stabilizations, sign, output })
}

pub fn parse_manifest(text: &str) -> Result<ScenarioManifest> {
    manifest_from_value(&parse_value(text)?)
}

pub fn manifest_to_value(m: &ScenarioManifest) -> Value {
    let n = match &m.ambient_n {
        GradedSource::Inline(g) => graded_to_value(g),
        GradedSource::Catalog(id) => Value::String(format!("catalog:{id}")),
    };
    let mut ambient = json!({
        "N": n,
        "nullhomologous": m.nullhomologous,
        "H3_is_zero": m.transverse_ambient.h3_is_zero,
        "torus_nullhomologous": m.transverse_ambient.torus_nullhomologous,
    });
    if m.kind == FamilyKind::Transverse {
        ambient.as_object_mut().expect("object").remove("nullhomologous");
    }
    let mut out = json!({
        "kind": m.kind,
        "core": m.core.0,
        "profile": profile_to_value(&m.profile),
        "ambient": ambient,
        "stabilizations": m.stabilizations,
        "sign": m.sign,
    });
    if m.output != OutputPaths::default() {
        let mut o = Map::new();
        if let Some(p) = &m.output.json {
            o.insert("json".into(), Value::String(p.display().to_string()));
        }
        if let Some(p) = &m.output.text {
            o.insert("text".into(), Value::String(p.display().to_string()));
        }
        out["output"] = Value::Object(o);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_round_trip() {
        let c = catalog::get("trefoil_spine").unwrap().complex;
        let v = complex_to_value(&c);
        assert_eq!(v, json!({"dims": [1, 2, 1], "boundaries": [[[0, 0]], [[1], [-1]]]}));
        assert_eq!(complex_from_value(&v).unwrap(), c);
    }

    #[test]
    fn empty_sides() {
        let c = parse_complex(r#"{"dims": [0, 2], "boundaries": [[]]}"#).unwrap();
        assert_eq!(c.dims(), &[0, 2]);
        let c = parse_complex(r#"{"dims": [2, 0], "boundaries": [[[], []]]}"#).unwrap();
        assert_eq!(c.boundary(1).shape(), (2, 0));
        let c = parse_complex(r#"{"dims": [1]}"#).unwrap();
        assert_eq!(c.dims(), &[1]);
    }

    #[test]
    fn malformed_complexes() {
        assert!(parse_complex(r#"{"dims": [1, 1], "boundaries": []}"#).is_err());
        assert!(parse_complex(r#"{"dims": [1, 2], "boundaries": [[[0]]]}"#).is_err());
        assert!(parse_complex(r#"{"dims": [1, 1], "boundaries": [[["x"]]]}"#).is_err());
        assert!(parse_complex("not json").is_err());
    }

    #[test]
    fn big_integers_survive() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let v = int_to_value(&big);
        assert!(v.is_string());
        assert_eq!(int_from_value(&v).unwrap(), big);
        assert_eq!(int_from_value(&json!(-7)).unwrap(), BigInt::from(-7));
    }

    #[test]
    fn graded_forms() {
        let g = graded_from_value(&json!([{"free_rank": 1, "torsion": []}, {"free_rank": 0, "torsion": [2, 3]}])).unwrap();
        assert_eq!(g.degree(1).invariant_factors(), &[BigInt::from(6)]);
        let v = graded_to_value(&g);
        assert_eq!(graded_from_value(&v).unwrap(), g);
        assert!(graded_from_value(&json!({"groups": [{"torsion": []}]})).is_err());
    }

    #[test]
    fn profiles() {
        assert!(matches!(parse_profile(r#"{"strands": 2, "word": [1, 1, 1]}"#).unwrap(), Profile::Braid(_)));
        assert!(matches!(parse_profile(r#"{"events": [{"kind": "L", "pos": 0}, {"kind": "R", "pos": 0}]}"#).unwrap(), Profile::Front(_)));
        assert!(parse_profile(r#"{"foo": 1}"#).is_err());
    }

    #[test]
    fn manifest_round_trip() {
        let text = r#"{"kind": "legendrian",
                       "profile": {"events": [{"kind": "L", "pos": 0}, {"kind": "R", "pos": 0}]},
                       "ambient": {"N": "catalog:s1xs2"},
                       "stabilizations": 3}"#;
        let m = parse_manifest(text).unwrap();
        assert_eq!(m.stabilizations, 3);
        assert_eq!(m.ambient_n, GradedSource::Catalog("s1xs2".into()));
        assert_eq!(m.ambient_n.resolve(None).unwrap(), IntGradedGroup::from_betti(&[1, 1, 1, 1]));
        let again = manifest_from_value(&manifest_to_value(&m)).unwrap();
        assert_eq!(again, m);
    }

    #[test]
    fn manifest_kind_must_match_profile() {
        let text = r#"{"kind": "transverse", "profile": {"events": [{"kind": "L", "pos": 0}, {"kind": "R", "pos": 0}]}}"#;
        assert!(parse_manifest(text).is_err());
    }
}
