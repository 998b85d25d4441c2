use std::path::Path;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use engeltori::catalog;
use engeltori::homology::{alexander_duality, homology, kunneth_predict, tensor};
use engeltori::io::{self, ScenarioManifest};
use engeltori::knot::{transverse_pushoff, BraidWord, FrontWord, Sign};
use engeltori::torus::{
    build_dpv_torus, build_legendrian_torus, complement_h2_product, complement_h2_transverse, distinguish,
    self_linking_class, stabilize_legendrian_torus, stabilize_torus, tb_class, theorem_family, FamilyKind,
    FamilyOptions, FamilyReport, HomClass, Outcome, Profile, Verdict,
};
use engeltori::verify;
use engeltori::{Error, IntGradedGroup, IntGroup};
use serde_json::{json, Value};

use crate::args::{CatalogCommand, Cli, Command, HomologyCommand, KnotCommand, RenderCommand, TorusCommand, VerifyCommand};
use crate::load::{self, catalog_dir};
use crate::output::{table, Report};
use crate::render;

pub fn dispatch(cli: Cli) -> Result<Report> {
    match cli.command {
        Command::Knot(KnotCommand::Invariants { file }) => knot_invariants(&load::profile(&file)?),
        Command::Knot(KnotCommand::Stabilize { file, sign, count }) => {
            let sign = Sign::from_str(&sign).map_err(|e| anyhow::anyhow!("--sign: {e}"))?;
            knot_stabilize(&load::profile(&file)?, sign, count)
        }
        Command::Homology(h) => match h.command {
            Some(HomologyCommand::Kunneth { a, b }) => kunneth(&a, &b),
            Some(HomologyCommand::Alexander { sphere_dim, input }) => alexander(sphere_dim, &input),
            None => homology_of(h.input.as_deref().expect("clap requires an input")),
        },
        Command::Torus(TorusCommand::SlClass { manifest }) => {
            let m = load::manifest(&manifest)?;
            require_kind(&m, FamilyKind::Transverse, "sl-class")?;
            Ok(class_report(&m, &manifest_class(&m)?))
        }
        Command::Torus(TorusCommand::TbClass { manifest }) => {
            let m = load::manifest(&manifest)?;
            require_kind(&m, FamilyKind::Legendrian, "tb-class")?;
            Ok(class_report(&m, &manifest_class(&m)?))
        }
        Command::Torus(TorusCommand::Distinguish { first, second }) => {
            let (a, b) = (load::manifest(&first)?, load::manifest(&second)?);
            distinguish_manifests(&a, &b)
        }
        Command::Torus(TorusCommand::Family { manifest }) => torus_family(&load::manifest(&manifest)?),
        Command::Verify(VerifyCommand::Thm11 { count }) => Ok(family_report("thm11", &verify::thm11(count)?)),
        Command::Verify(VerifyCommand::Thm12 { count }) => Ok(family_report("thm12", &verify::thm12(count)?)),
        Command::Verify(VerifyCommand::Lemma42) => lemma42(),
        Command::Verify(VerifyCommand::Segment) => segment(),
        Command::Verify(VerifyCommand::Laws { seed, samples }) => laws(seed, samples),
        Command::Render(RenderCommand::Front { file, svg }) => render_front(&file, &svg),
        Command::Catalog(CatalogCommand::List) => catalog_list(),
        Command::Catalog(CatalogCommand::Show { id }) => catalog_show(&id),
    }
}

fn braid_fields(b: &BraidWord) -> Result<(Value, String)> {
    let sl = b.self_linking()?;
    let json = json!({
        "kind": "braid",
        "profile": b,
        "strands": b.strands(),
        "exponent_sum": b.exponent_sum(),
        "components": 1,
        "sl": sl,
    });
    let text = format!("braid on {} strands, {} letters\nsl = {sl}\n", b.strands(), b.word().len());
    Ok((json, text))
}

fn front_fields(f: &FrontWord) -> Result<(Value, String)> {
    let o = f.orient()?;
    let (tb, rot) = (o.tb(), o.rot());
    let (sl_plus, sl_minus) = (transverse_pushoff(tb, rot, Sign::Positive), transverse_pushoff(tb, rot, Sign::Negative));
    let json = json!({
        "kind": "front",
        "profile": f,
        "components": 1,
        "writhe": o.writhe(),
        "cusps": f.cusp_count(),
        "up_cusps": o.up_cusps(),
        "down_cusps": o.down_cusps(),
        "tb": tb,
        "rot": rot,
        "sl_plus": sl_plus,
        "sl_minus": sl_minus,
    });
    let text = format!(
        "front with {} events, {} cusps, writhe {}\ntb = {tb}\nrot = {rot}\nsl of pushoffs: {sl_plus} (+), {sl_minus} (-)\n",
        f.events().len(),
        f.cusp_count(),
        o.writhe()
    );
    Ok((json, text))
}

fn profile_fields(p: &Profile) -> Result<(Value, String)> {
    match p {
        Profile::Braid(b) => braid_fields(b),
        Profile::Front(f) => front_fields(f),
    }
}

fn knot_invariants(p: &Profile) -> Result<Report> {
    let (json, text) = profile_fields(p)?;
    Ok(Report::new(json, text))
}

fn knot_stabilize(p: &Profile, sign: Sign, count: usize) -> Result<Report> {
    let (before, _) = profile_fields(p)?;
    let out = match p {
        Profile::Braid(b) => Profile::Braid((0..count).fold(b.clone(), |b, _| b.markov_stabilize(sign))),
        Profile::Front(f) => {
            let mut f = f.clone();
            for _ in 0..count {
                f = f.stabilize(sign)?;
            }
            Profile::Front(f)
        }
    };
    let (mut json, text) = profile_fields(&out)?;
    json["stabilizations"] = json!(count);
    json["sign"] = json!(sign);
    json["before"] = before;
    let header = format!("{count} stabilization(s) of sign {sign}\n");
    Ok(Report::new(json, header + &text))
}

fn graded_json(g: &IntGradedGroup) -> Value {
    let mut v = io::graded_to_value(g);
    v["display"] = g.groups().iter().map(|h| Value::String(h.to_string())).collect();
    v
}

fn graded_text(g: &IntGradedGroup) -> String {
    if g.is_empty() {
        return "all homology groups vanish\n".to_string();
    }
    g.groups().iter().enumerate().map(|(k, h)| format!("H_{k} = {h}\n")).collect()
}

fn homology_of(arg: &str) -> Result<Report> {
    let c = load::complex(arg)?;
    let h = homology(&c)?;
    let mut json = graded_json(&h);
    json["cells"] = json!(c.dims());
    json["euler_characteristic"] = json!(c.euler_characteristic());
    Ok(Report::new(json, graded_text(&h)))
}

fn kunneth(a: &str, b: &str) -> Result<Report> {
    let (ia, ib) = (load::graded(a)?, load::graded(b)?);
    let predicted = kunneth_predict(&ia.homology()?, &ib.homology()?);
    let mut json = graded_json(&predicted);
    let mut text = format!("predicted:\n{}", graded_text(&predicted));
    let mut ok = true;
    if let (load::GradedInput::Complex(ca), load::GradedInput::Complex(cb)) = (&ia, &ib) {
        let direct = homology(&tensor(ca, cb)?)?;
        ok = direct == predicted;
        json["direct"] = graded_json(&direct);
        json["agrees"] = json!(ok);
        text += &format!("tensor complex:\n{}agrees: {ok}\n", graded_text(&direct));
    }
    Ok(Report::new(json, text).with_ok(ok))
}

fn alexander(n: usize, arg: &str) -> Result<Report> {
    let k = load::graded(arg)?.homology()?;
    if k.len() > n {
        return Err(Error::HypothesisViolated(format!(
            "a proper subcomplex of S^{n} has no homology in degree {}",
            k.len() - 1
        ))
        .into());
    }
    let dual = alexander_duality(n, &k);
    let mut json = graded_json(&dual);
    json["sphere_dim"] = json!(n);
    json["reduced"] = json!(true);
    let text = format!("reduced homology of the complement in S^{n}:\n{}", graded_text(&dual));
    Ok(Report::new(json, text))
}

fn require_kind(m: &ScenarioManifest, kind: FamilyKind, cmd: &str) -> Result<()> {
    if m.kind != kind {
        bail!(Error::Format(format!("{cmd} needs a {} manifest", serde_json::to_value(kind)?.as_str().unwrap_or("?"))));
    }
    Ok(())
}

/// A computed class with the group it lives in and the profile invariant behind it.
struct ManifestClass {
    class: HomClass,
    group: IntGroup,
    invariant: (&'static str, i64),
}

fn manifest_class(m: &ScenarioManifest) -> Result<ManifestClass> {
    match &m.profile {
        Profile::Braid(b) => {
            if m.sign == Sign::Positive && m.stabilizations > 0 {
                bail!(Error::Format(
                    "positive Markov stabilization is a transverse isotopy; transverse scenarios stabilize negatively".into()
                ));
            }
            let (group, _) = complement_h2_transverse(m.transverse_ambient)?;
            let t = stabilize_torus(&build_dpv_torus(m.core.clone(), b.clone())?, m.stabilizations);
            Ok(ManifestClass { class: self_linking_class(&t)?, group, invariant: ("sl", t.profile.self_linking()?) })
        }
        Profile::Front(f) => {
            let n = m.ambient_n.resolve(catalog_dir().as_deref())?;
            let l = build_legendrian_torus(f.clone(), n.clone(), m.nullhomologous)?;
            let l = stabilize_legendrian_torus(&l, m.stabilizations, m.sign)?;
            let group = complement_h2_product(&n)?.group;
            Ok(ManifestClass { class: tb_class(&l)?, group, invariant: ("tb", l.profile.tb()?) })
        }
    }
}

fn class_json(c: &HomClass) -> Value {
    json!({
        "basis": c.basis(),
        "coords": c.coords().iter().map(io::int_to_value).collect::<Vec<_>>(),
    })
}

fn class_report(m: &ScenarioManifest, mc: &ManifestClass) -> Report {
    let name = if m.kind == FamilyKind::Transverse { "slf" } else { "tb" };
    let d = mc.class.divisibility();
    let json = json!({
        "manifest": io::manifest_to_value(m),
        "class": class_json(&mc.class),
        "divisibility": io::int_to_value(&d),
        mc.invariant.0: mc.invariant.1,
        "complement_h2": io::group_to_value(&mc.group),
    });
    let text = format!(
        "{}(K) = {}\n{name}(T) = {} in H_2 = {}\ndivisibility {d}\n",
        mc.invariant.0, mc.invariant.1, mc.class, mc.group
    );
    Report::new(json, text)
}

fn verdict_json(v: &Verdict) -> Value {
    json!({
        "outcome": v.outcome,
        "certificate": v.certificate.as_ref().map(|(a, b)| vec![io::int_to_value(a), io::int_to_value(b)]),
    })
}

fn distinguish_manifests(a: &ScenarioManifest, b: &ScenarioManifest) -> Result<Report> {
    let (ca, cb) = (manifest_class(a)?, manifest_class(b)?);
    let v = distinguish(&ca.class, &cb.class)?;
    let mut json = verdict_json(&v);
    json["first"] = class_report(a, &ca).json;
    json["second"] = class_report(b, &cb).json;
    let text = format!(
        "first:  {} (divisibility {})\nsecond: {} (divisibility {})\n{}\n",
        ca.class,
        ca.class.divisibility(),
        cb.class,
        cb.class.divisibility(),
        match v.outcome {
            Outcome::Distinct => "Distinct: not isotopic, not even formally",
            Outcome::Inconclusive => "Inconclusive: equal divisibility decides nothing",
        }
    );
    Ok(Report::new(json, text))
}

fn torus_family(m: &ScenarioManifest) -> Result<Report> {
    if m.kind == FamilyKind::Transverse {
        complement_h2_transverse(m.transverse_ambient)?;
        if m.sign == Sign::Positive {
            bail!(Error::Format("transverse families stabilize negatively".into()));
        }
    }
    let opts = FamilyOptions {
        core: m.core.clone(),
        ambient_n: m.ambient_n.resolve(catalog_dir().as_deref())?,
        nullhomologous: m.nullhomologous,
        legendrian_sign: m.sign,
    };
    let r = theorem_family(&m.profile, m.stabilizations, &opts)?;
    let mut rep = family_report("family", &r);
    rep.json["manifest"] = io::manifest_to_value(m);
    // a family with collisions is a valid answer, not a failed check
    Ok(rep.with_ok(true))
}

fn family_report(name: &str, r: &FamilyReport) -> Report {
    let invariant = match r.kind {
        FamilyKind::Transverse => "sl",
        FamilyKind::Legendrian => "tb",
    };
    let members: Vec<Value> = r
        .members
        .iter()
        .map(|m| {
            json!({
                "index": m.index,
                invariant: m.profile_invariant,
                "class": class_json(&m.class),
                "divisibility": io::int_to_value(&m.divisibility),
            })
        })
        .collect();
    let pairs: Vec<Value> = r
        .pairs
        .iter()
        .map(|p| {
            let mut v = verdict_json(&p.verdict);
            v["i"] = json!(p.i);
            v["j"] = json!(p.j);
            v
        })
        .collect();
    let distinct = r.pairs.iter().filter(|p| p.verdict.outcome == Outcome::Distinct).count();
    let json = json!({
        "scenario": name,
        "kind": r.kind,
        "count": r.members.len().saturating_sub(1),
        "members": members,
        "pairs": pairs,
        "distinct_pairs": distinct,
        "all_distinct": r.all_distinct(),
        "implemented_ladder": r.implemented_ladder(),
        "quoted_ladder": r.quoted_ladder,
        "quoted_ladder_distinct": r.quoted_ladder_distinct(),
        "smoothly_isotopic": r.smoothly_isotopic,
    });

    let member_rows: Vec<Vec<String>> = r
        .members
        .iter()
        .map(|m| vec![m.index.to_string(), m.profile_invariant.to_string(), m.class.to_string(), m.divisibility.to_string()])
        .collect();
    let pair_rows: Vec<Vec<String>> = r
        .pairs
        .iter()
        .map(|p| {
            let cert = p.verdict.certificate.as_ref().map(|(a, b)| format!("{a} vs {b}")).unwrap_or_else(|| "-".into());
            vec![p.i.to_string(), p.j.to_string(), format!("{:?}", p.verdict.outcome), cert]
        })
        .collect();
    let mut text = table(&["n", invariant, "class", "divisibility"], &member_rows);
    text.push('\n');
    text += &table(&["i", "j", "verdict", "certificate"], &pair_rows);
    text += &format!(
        "\n{distinct} of {} pairs Distinct; all members smoothly isotopic\nladder as computed: {:?}\nladder with unit steps: {:?}\n",
        r.pairs.len(),
        r.implemented_ladder(),
        r.quoted_ladder
    );
    Report::new(json, text).with_ok(r.all_distinct())
}

fn lemma42() -> Result<Report> {
    let cases = verify::lemma42()?;
    let rows: Vec<Vec<String>> = cases
        .iter()
        .map(|c| vec![c.name.clone(), c.ambient.to_string(), c.computed.to_string(), c.predicted.to_string(), c.agrees().to_string()])
        .collect();
    let ok = cases.iter().all(|c| c.agrees());
    let json = json!({
        "scenario": "lemma42",
        "cases": cases.iter().map(|c| json!({
            "name": c.name,
            "ambient": io::graded_to_value(&c.ambient),
            "computed": io::group_to_value(&c.computed),
            "predicted": io::group_to_value(&c.predicted),
            "agrees": c.agrees(),
        })).collect::<Vec<_>>(),
        "all_agree": ok,
    });
    let text = table(&["knot", "H_*(N)", "H_2 from complexes", "H_1(N)+H_2(N)+Z", "agrees"], &rows);
    Ok(Report::new(json, text).with_ok(ok))
}

fn segment() -> Result<Report> {
    let s = verify::torus_segment()?;
    let ok = s.exact && s.f_injective && s.complement_h2 == IntGroup::free(2);
    let shapes: Vec<Value> = s.maps.iter().map(|m| json!([m.rows(), m.cols()])).collect();
    let json = json!({
        "scenario": "segment",
        "map_shapes": shapes,
        "f": s.maps.get(1).map(|f| (0..f.rows()).map(|i| f.row(i).iter().map(io::int_to_value).collect::<Vec<_>>()).collect::<Vec<_>>()),
        "exact": s.exact,
        "f_injective": s.f_injective,
        "complement_h2": io::group_to_value(&s.complement_h2),
    });
    let text = format!(
        "0 -> H_2(boundary) = Z^3 -> H_2(nbhd) + H_2(complement) -> H_2(S^4)\nexact: {}\nf injective: {}\nH_2 of the torus complement: {}\n",
        s.exact, s.f_injective, s.complement_h2
    );
    Ok(Report::new(json, text).with_ok(ok))
}

fn laws(seed: u64, samples: usize) -> Result<Report> {
    let r = verify::laws(seed, samples)?;
    let rows: Vec<Vec<String>> =
        r.checks.iter().map(|c| vec![c.name.to_string(), c.checked.to_string(), c.failures.len().to_string()]).collect();
    let json = json!({
        "scenario": "laws",
        "seed": r.seed,
        "samples": r.samples,
        "checks": r.checks.iter().map(|c| json!({"law": c.name, "checked": c.checked, "failures": c.failures})).collect::<Vec<_>>(),
        "passed": r.passed(),
    });
    let mut text = format!("seed {seed}, {samples} samples\n");
    text += &table(&["law", "checked", "failures"], &rows);
    for c in &r.checks {
        for f in c.failures.iter().take(3) {
            text += &format!("  {}: {f}\n", c.name);
        }
    }
    Ok(Report::new(json, text).with_ok(r.passed()))
}

fn render_front(file: &Path, out: &Path) -> Result<Report> {
    let Profile::Front(f) = load::profile(file)? else {
        bail!(Error::Format("render front needs a front profile".into()));
    };
    f.require_knot()?;
    let drawing = render::front_svg(&f)?;
    std::fs::write(out, &drawing.svg).with_context(|| format!("writing {}", out.display()))?;
    let json = json!({
        "svg": out.display().to_string(),
        "events": f.events().len(),
        "paths": drawing.paths,
        "width": drawing.width,
        "height": drawing.height,
    });
    Ok(Report::new(json, format!("wrote {} ({} arcs)\n", out.display(), drawing.paths)))
}

fn catalog_list() -> Result<Report> {
    let dir = catalog_dir();
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for id in catalog::IDS {
        let e = catalog::get_with_override(id, dir.as_deref())?;
        rows.push(vec![e.id.clone(), format!("{:?}", e.complex.dims()), e.expected.to_string()]);
        entries.push(json!({"id": e.id, "cells": e.complex.dims(), "homology": graded_json(&e.expected), "provenance": e.provenance}));
    }
    Ok(Report::new(json!({ "entries": entries }), table(&["id", "cells", "homology"], &rows)))
}

fn catalog_show(id: &str) -> Result<Report> {
    let e = catalog::get_with_override(id, catalog_dir().as_deref())?;
    let json = json!({
        "id": e.id,
        "provenance": e.provenance,
        "complex": io::complex_to_value(&e.complex),
        "homology": graded_json(&e.expected),
    });
    let text = format!("{}: {}\ncells {:?}\nhomology {}\n", e.id, e.provenance, e.complex.dims(), e.expected);
    Ok(Report::new(json, text))
}
