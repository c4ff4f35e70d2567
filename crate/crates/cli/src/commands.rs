use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context};
use rkcodes::cyclic::{
    algorithm1_construct, is_quasi_cyclic, is_quasi_skew_cyclic, phi_image_quasicyclic_check, psi_image_check,
    SkewShiftSpec,
};
use rkcodes::format::{AutomorphismFile, CodeFile, ComponentsFile, PhiSpecFile, TableFile};
use rkcodes::gray::{phi_vec, psi_vec};
use rkcodes::weights::{
    cwe, hamming_we, macwilliams_hamming, swe, verify_cwe_macwilliams, verify_swe_macwilliams, UnitClasses,
    UnitGroup,
};
use rkcodes::{Error, Guard, Layout, LinearCode, PhiSpec, RingSpec, RkElement, RkVector};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use crate::{Form, GroupArg};

const TABLE1: &str = include_str!("../data/table1.json");

pub struct Ctx {
    pub guard: Guard,
    pub layout: Layout,
}

/// Output of one command: `ok` is false on a verification mismatch.
pub struct Report {
    pub ok: bool,
    pub json: Value,
    pub text: String,
}

fn parse<T: DeserializeOwned>(text: &str, origin: &str) -> anyhow::Result<T> {
    serde_json::from_str(text).with_context(|| format!("cannot parse {origin}"))
}

fn load<T: DeserializeOwned>(path: &Path) -> anyhow::Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse(&text, &path.display().to_string())
}

fn load_code(ctx: &Ctx, path: &Path) -> anyhow::Result<LinearCode> {
    let file: CodeFile = load(path)?;
    file.to_code(ctx.guard)
        .with_context(|| format!("invalid code in {}", path.display()))
}

fn write_json(path: &Path, value: &impl serde::Serialize) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    fs::write(path, text + "\n").with_context(|| format!("cannot write {}", path.display()))
}

fn word_json(w: &RkVector) -> Value {
    json!(w.entries().iter().map(|e| e.coeffs().to_vec()).collect::<Vec<_>>())
}

fn residues(w: &RkVector) -> Vec<u32> {
    w.entries().iter().map(|e| e.coeff(0)).collect()
}

fn residue_string(w: &RkVector) -> String {
    let parts: Vec<String> = residues(w).iter().map(u32::to_string).collect();
    format!("({})", parts.join(" "))
}

fn distance_json(d: &Result<usize, Error>) -> Value {
    match d {
        Ok(v) => json!(v),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

fn distance_text(d: &Result<usize, Error>) -> String {
    match d {
        Ok(v) => v.to_string(),
        Err(e) => e.to_string(),
    }
}

fn layout_name(layout: Layout) -> &'static str {
    match layout {
        Layout::Interleaved => "interleaved",
        Layout::ComponentMajor => "component-major",
    }
}

pub fn analyze(ctx: &Ctx, path: &Path) -> anyhow::Result<Report> {
    let code = load_code(ctx, path)?;
    let d_h = code.hamming_distance();
    let d_l = code.lee_distance();
    let parts = code.decompose(ctx.guard)?;
    let euclid = code.is_self_dual(ctx.guard)?;
    let herm = code.is_hermitian_self_dual(ctx.guard)?;

    let mut text = String::new();
    writeln!(text, "code: {code}")?;
    writeln!(text, "|C| = {}", code.size())?;
    writeln!(text, "d_H = {}", distance_text(&d_h))?;
    writeln!(text, "d_L = {}", distance_text(&d_l))?;
    let mut comps = Vec::new();
    for (i, p) in parts.components().iter().enumerate() {
        let gens: Vec<String> = p.generators().iter().map(residue_string).collect();
        writeln!(text, "component {i}: <{}> size {}", gens.join(", "), p.size())?;
        comps.push(json!({
            "position": i,
            "generators": p.generators().iter().map(residues).collect::<Vec<_>>(),
            "size": p.size(),
            "hamming_distance": distance_json(&p.hamming_distance()),
        }));
    }
    writeln!(text, "Euclidean self-dual: {euclid}")?;
    writeln!(text, "Hermitian self-dual: {herm}")?;
    Ok(Report {
        ok: true,
        json: json!({
            "ring": code.ring(),
            "n": code.len(),
            "size": code.size(),
            "hamming_distance": distance_json(&d_h),
            "lee_distance": distance_json(&d_l),
            "components": comps,
            "euclidean_self_dual": euclid,
            "hermitian_self_dual": herm,
        }),
        text,
    })
}

pub fn dual(ctx: &Ctx, path: &Path, hermitian: bool, out: Option<&Path>) -> anyhow::Result<Report> {
    let code = load_code(ctx, path)?;
    let (kind, d) = if hermitian {
        ("Hermitian", code.hermitian_dual(ctx.guard)?)
    } else {
        ("Euclidean", code.euclidean_dual(ctx.guard)?)
    };
    let file = CodeFile::from_code(&d);
    if let Some(out) = out {
        write_json(out, &file)?;
    }
    let mut text = String::new();
    writeln!(text, "{kind} dual: {d}")?;
    writeln!(text, "|C| |dual| = {} * {} = {}", code.size(), d.size(), code.size() * d.size())?;
    Ok(Report {
        ok: true,
        json: json!({ "kind": kind.to_lowercase(), "size": d.size(), "dual": file }),
        text,
    })
}

fn unit_group(ring: RingSpec, group: GroupArg, guard: Guard) -> anyhow::Result<(&'static str, UnitGroup)> {
    Ok(match group {
        GroupArg::Trivial => ("trivial", UnitGroup::trivial(ring)),
        GroupArg::Full => ("full", UnitGroup::full(ring, guard)?),
    })
}

pub fn macwilliams(ctx: &Ctx, path: &Path, form: Form, group: GroupArg) -> anyhow::Result<Report> {
    let code = load_code(ctx, path)?;
    let dual = code.euclidean_dual(ctx.guard)?;
    let mut text = String::new();
    let (ok, json) = match form {
        Form::Hamming => {
            let q = code.ring().cardinality()?;
            let w = hamming_we(&code);
            let predicted = macwilliams_hamming(&w, code.size() as u128, q)?;
            let actual = hamming_we(&dual);
            let ok = predicted == actual;
            writeln!(text, "W_C(X, Y) = {}", w.to_polynomial_string())?;
            writeln!(text, "transform of W_C = {}", predicted.to_polynomial_string())?;
            writeln!(text, "W_dual(X, Y) = {}", actual.to_polynomial_string())?;
            writeln!(text, "verdict: {ok}")?;
            (
                ok,
                json!({ "form": "hamming", "code": w, "transform": predicted, "dual": actual, "verdict": ok }),
            )
        }
        Form::Cwe => {
            let v = verify_cwe_macwilliams(&code, ctx.guard)?;
            writeln!(text, "cwe identity with T: {}", v.euclidean)?;
            writeln!(text, "cwe identity with T_H: {}", v.hermitian)?;
            writeln!(
                text,
                "evaluation: {}",
                if v.separating { "separating map (proof)" } else { "affine panel" }
            )?;
            writeln!(text, "verdict: {}", v.holds())?;
            (
                v.holds(),
                json!({
                    "form": "cwe",
                    "code": cwe(&code, ctx.guard)?,
                    "dual": cwe(&dual, ctx.guard)?,
                    "hermitian_dual": cwe(&code.hermitian_dual(ctx.guard)?, ctx.guard)?,
                    "check": v,
                    "verdict": v.holds(),
                }),
            )
        }
        Form::Swe => {
            let (name, g) = unit_group(code.ring(), group, ctx.guard)?;
            let classes = UnitClasses::new(&g, ctx.guard)?;
            let ok = verify_swe_macwilliams(&code, &g, ctx.guard)?;
            let reps: Vec<String> = classes
                .representatives()
                .iter()
                .map(|&i| code.ring().element_at(i as u128).to_string())
                .collect();
            writeln!(text, "group: {name} ({} units)", g.members().len())?;
            writeln!(text, "class representatives: {}", reps.join(", "))?;
            writeln!(text, "verdict: {ok}")?;
            (
                ok,
                json!({
                    "form": "swe",
                    "group": name,
                    "representatives": reps,
                    "code": swe(&code, &classes),
                    "dual": swe(&dual, &classes),
                    "verdict": ok,
                }),
            )
        }
    };
    Ok(Report { ok, json, text })
}

pub fn cyclic_check(ctx: &Ctx, path: &Path, d: usize, phi: Option<&Path>) -> anyhow::Result<Report> {
    let code = load_code(ctx, path)?;
    let direct = is_quasi_cyclic(&code, d)?;
    let parts = code.decompose(ctx.guard)?;
    let mut text = String::new();
    writeln!(text, "quasi-cyclic of index {d}: {}", direct.verdict)?;
    let mut component_verdicts = Vec::new();
    for (i, p) in parts.components().iter().enumerate() {
        let v = is_quasi_cyclic(p, d)?;
        writeln!(text, "component {i}: {}", v.verdict)?;
        component_verdicts.push(v);
    }
    let all_components = component_verdicts.iter().all(|v| v.verdict);
    let mut ok = all_components == direct.verdict;
    writeln!(text, "agrees with components: {ok}")?;
    let mut image = Value::Null;
    if let Some(phi) = phi {
        let spec = load::<PhiSpecFile>(phi)?.to_spec(code.ring())?;
        let v = phi_image_quasicyclic_check(&code, &spec, d, ctx.guard)?;
        writeln!(text, "phi image quasi-cyclic of index {}: {}", spec.len() * d, v.verdict)?;
        ok &= v.verdict == direct.verdict;
        image = serde_json::to_value(&v)?;
    }
    Ok(Report {
        ok,
        json: json!({
            "check": direct,
            "components": component_verdicts,
            "phi_image": image,
            "agreement": ok,
        }),
        text,
    })
}

fn load_theta(path: &Path, k: u32) -> anyhow::Result<rkcodes::AutomorphismSpec> {
    load::<AutomorphismFile>(path)?
        .to_spec(k)
        .with_context(|| format!("invalid automorphism in {}", path.display()))
}

pub fn skew_check(ctx: &Ctx, path: &Path, theta: &Path, d: usize) -> anyhow::Result<Report> {
    let code = load_code(ctx, path)?;
    let theta = load_theta(theta, code.ring().k())?;
    let spec = SkewShiftSpec::new(code.len(), d, theta.clone())?;
    let direct = is_quasi_skew_cyclic(&code, &spec)?;
    let image = psi_image_check(&code, &spec)?;
    let ok = direct.verdict == image.verdict;
    let mut text = String::new();
    writeln!(text, "quasi-{theta}-cyclic of index {d}: {}", direct.verdict)?;
    if let Some(w) = &direct.witness {
        writeln!(text, "witness: {w:?}")?;
    }
    writeln!(text, "psi image check: {}", image.verdict)?;
    writeln!(text, "agreement: {ok}")?;
    Ok(Report {
        ok,
        json: json!({ "check": direct, "psi_image": image, "agreement": ok }),
        text,
    })
}

pub fn skew_construct(
    ctx: &Ctx,
    components: &Path,
    theta: &Path,
    d: usize,
    out: Option<&Path>,
) -> anyhow::Result<Report> {
    let file: ComponentsFile = load(components)?;
    let comps = file
        .to_components(ctx.guard)
        .with_context(|| format!("invalid components in {}", components.display()))?;
    let ring = comps.ring();
    let theta = load_theta(theta, ring.k())?;
    let mut text = String::new();
    match algorithm1_construct(ring, file.n, d, &theta, &comps, ctx.guard) {
        Ok(built) => {
            let code_file = CodeFile::from_code(&built.code);
            if let Some(out) = out {
                write_json(out, &code_file)?;
            }
            writeln!(text, "constructed: {}", built.code)?;
            writeln!(text, "certified quasi-{theta}-cyclic of index {d}: {}", built.certificate.verdict)?;
            Ok(Report {
                ok: built.certificate.verdict,
                json: json!({ "code": code_file, "certificate": built.certificate }),
                text,
            })
        }
        Err(Error::Precondition(violations)) => {
            writeln!(text, "construction rejected:")?;
            for v in &violations {
                writeln!(text, "  {v}")?;
            }
            Ok(Report {
                ok: false,
                json: json!({ "violations": violations }),
                text,
            })
        }
        Err(Error::Certification(msg)) => {
            writeln!(text, "certification failed: {msg}")?;
            Ok(Report {
                ok: false,
                json: json!({ "certification_failure": msg }),
                text,
            })
        }
        Err(e) => Err(e.into()),
    }
}

fn psi_rows(w: &RkVector, layout: Layout) -> Vec<Vec<u32>> {
    let data = psi_vec(w, layout);
    let chunk = match layout {
        Layout::ComponentMajor => w.len(),
        Layout::Interleaved => w.ring().width(),
    };
    data.chunks(chunk.max(1)).map(<[u32]>::to_vec).collect()
}

fn image_code(code: &LinearCode, spec: &PhiSpec, guard: Guard) -> anyhow::Result<LinearCode> {
    let words = code
        .codewords()
        .map(|c| phi_vec(spec, c))
        .collect::<Result<BTreeSet<_>, _>>()?;
    Ok(LinearCode::from_codewords(spec.codomain(), code.len() * spec.len(), words, guard)?)
}

pub fn gray(ctx: &Ctx, path: &Path, phi: Option<&Path>) -> anyhow::Result<Report> {
    let code = load_code(ctx, path)?;
    let mut text = String::new();
    writeln!(text, "layout: {}", layout_name(ctx.layout))?;
    let mut gens = Vec::new();
    for g in code.generators() {
        let rows = psi_rows(g, ctx.layout);
        writeln!(text, "psi{g} =")?;
        for r in &rows {
            let cells: Vec<String> = r.iter().map(u32::to_string).collect();
            writeln!(text, "  {}", cells.join(" "))?;
        }
        gens.push(json!({ "word": word_json(g), "psi": rows }));
    }
    let mut image = Value::Null;
    if let Some(phi) = phi {
        let spec = load::<PhiSpecFile>(phi)?.to_spec(code.ring())?;
        let img = image_code(&code, &spec, ctx.guard)?;
        let d_l = img.lee_distance();
        writeln!(text, "phi image: {img}")?;
        writeln!(text, "phi image d_L = {}", distance_text(&d_l))?;
        image = json!({
            "code": CodeFile::from_code(&img),
            "size": img.size(),
            "lee_distance": distance_json(&d_l),
        });
    }
    Ok(Report {
        ok: true,
        json: json!({ "layout": layout_name(ctx.layout), "generators": gens, "phi_image": image }),
        text,
    })
}

pub fn table1(ctx: &Ctx, fixture: Option<&Path>) -> anyhow::Result<Report> {
    let table: TableFile = match fixture {
        Some(p) => load(p)?,
        None => parse(TABLE1, "bundled table fixture")?,
    };
    let mut text = String::new();
    writeln!(text, "{}", table.title)?;
    writeln!(text, "{:<44} {:>3} {:>4} {:>5} {:>9}  match", "row", "n", "d_L", "size", "expected")?;
    let mut outcomes = Vec::new();
    for row in &table.rows {
        let out = row
            .evaluate(ctx.guard)
            .with_context(|| format!("row {}", row.label))?;
        writeln!(
            text,
            "{:<44} {:>3} {:>4} {:>5} {:>9}  {}",
            out.label,
            out.image_length,
            out.lee_distance,
            out.size,
            format!("({},{})", out.expected.lee_distance, out.expected.size),
            if out.matches { "yes" } else { "NO" }
        )?;
        outcomes.push(out);
    }
    let ok = outcomes.iter().all(|o| o.matches);
    writeln!(text, "{} of {} rows match", outcomes.iter().filter(|o| o.matches).count(), outcomes.len())?;
    Ok(Report {
        ok,
        json: json!({ "title": table.title, "rows": outcomes, "all_match": ok }),
        text,
    })
}

/// Elements of `ring` whose coefficients all lie in `0..=max`.
fn bounded_elements(ring: RingSpec, max: u32, guard: Guard) -> anyhow::Result<Vec<RkElement>> {
    Ok(ring
        .elements(guard)?
        .into_iter()
        .filter(|e| e.coeffs().iter().all(|&c| c <= max))
        .collect())
}

struct Candidate {
    spec: PhiSpec,
    lee_distance: usize,
    size: usize,
}

pub fn search_phi(ctx: &Ctx, path: &Path, l: usize, max_coeff: Option<u32>, top: usize) -> anyhow::Result<Report> {
    let code = load_code(ctx, path)?;
    let ring = code.ring();
    let Some(lower) = ring.lower() else {
        bail!("phi maps need k >= 1, the code is over {ring}");
    };
    if l < 2 {
        bail!("l must be at least 2");
    }
    if code.is_zero_code() {
        let text = "skipped: zero code has no nonzero codeword, d_L undefined\n".to_string();
        return Ok(Report {
            ok: true,
            json: json!({ "results": [], "skipped": "zero code" }),
            text,
        });
    }
    let max = max_coeff.unwrap_or(ring.m() - 1).min(ring.m() - 1);
    let choices = bounded_elements(lower, max, ctx.guard)?;
    let slots = 2 * (l - 1);
    ctx.guard
        .check_pow("phi candidates", choices.len() as u128, slots as u32)?;
    let total = choices.len().pow(slots as u32);
    let mut found = Vec::new();
    let mut digits = vec![0usize; slots];
    for _ in 0..total {
        let beta: Vec<RkElement> = digits[..l - 1].iter().map(|&i| choices[i].clone()).collect();
        let beta_prime: Vec<RkElement> = digits[l - 1..].iter().map(|&i| choices[i].clone()).collect();
        if let Ok(spec) = PhiSpec::new(ring.k(), beta, beta_prime) {
            let img = image_code(&code, &spec, ctx.guard)?;
            found.push(Candidate {
                lee_distance: img.lee_distance()?,
                size: img.size(),
                spec,
            });
        }
        for d in digits.iter_mut() {
            *d += 1;
            if *d < choices.len() {
                break;
            }
            *d = 0;
        }
    }
    found.sort_by_key(|c| std::cmp::Reverse((c.lee_distance, c.size)));
    let mut text = String::new();
    writeln!(text, "{} candidates with l = {l}, coefficients in 0..={max}", found.len())?;
    let shown: Vec<&Candidate> = found.iter().take(top).collect();
    for c in &shown {
        let beta: Vec<String> = c.spec.beta().iter().map(ToString::to_string).collect();
        let beta_prime: Vec<String> = c.spec.beta_prime().iter().map(ToString::to_string).collect();
        writeln!(
            text,
            "d_L {:>2}  size {:>4}  beta [{}]  beta' [{}]",
            c.lee_distance,
            c.size,
            beta.join(", "),
            beta_prime.join(", ")
        )?;
    }
    let results: Vec<Value> = shown
        .iter()
        .map(|c| {
            json!({
                "phi": PhiSpecFile::from_spec(&c.spec),
                "lee_distance": c.lee_distance,
                "size": c.size,
            })
        })
        .collect();
    Ok(Report {
        ok: true,
        json: json!({ "candidates": found.len(), "results": results }),
        text,
    })
}
