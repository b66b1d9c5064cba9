//! Subcommand drivers. Each returns the exit code and rendered output.

use std::path::Path;

use pointed_ext::catext::{axiom_suite, random_suite, Ambient};
use pointed_ext::dhr::{check_g_functor, check_transport_independence, random_transport, Transport};
use pointed_ext::fusion::{self, FusionData, Report};
use pointed_ext::lattice::{build_unchecked, discriminant_group, GramMatrix};
use pointed_ext::models::{kac_partner, minimal_model};
use pointed_ext::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::file::CategoryFile;
use crate::render::{cyc_json, cyc_text, error_json, Document, Format};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn done(doc: &Document, format: Format) -> Outcome {
        Outcome {
            code: if doc.passed() { EXIT_PASS } else { EXIT_FAIL },
            stdout: doc.render(format),
            stderr: String::new(),
        }
    }

    pub fn input_error(msg: &str, format: Format) -> Outcome {
        Outcome {
            code: EXIT_INPUT,
            stdout: if format == Format::Json { error_json(msg) } else { String::new() },
            stderr: format!("error: {}\n", msg),
        }
    }
}

/// Rows separated by `;` or newlines, entries by whitespace or commas. A
/// path to an existing file is read first.
pub fn parse_gram(src: &str) -> Result<GramMatrix, String> {
    let text = if Path::new(src).is_file() {
        std::fs::read_to_string(src).map_err(|e| format!("cannot read {}: {}", src, e))?
    } else {
        src.to_string()
    };
    let mut rows = Vec::new();
    for row in text.split(|c| c == ';' || c == '\n') {
        let row = row.trim();
        if row.is_empty() {
            continue;
        }
        let entries = row
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<i64>().map_err(|_| format!("bad Gram entry {:?}", s)))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(entries);
    }
    if rows.is_empty() {
        return Err(String::from("empty Gram matrix"));
    }
    GramMatrix::new(rows).map_err(|e| e.to_string())
}

const SUITES: [&str; 6] = ["fusion-ring", "pentagon", "hexagon", "ribbon", "verlinde", "modular"];

/// Runs every validator. Missing entries become located failures; other
/// errors are input errors.
pub fn validate(d: &FusionData) -> Result<Vec<Report>, String> {
    let mut out = Vec::new();
    for (i, r) in fusion::verify_all(d).into_iter().enumerate() {
        match r {
            Ok(rep) => out.push(rep),
            Err(Error::MissingEntry(s)) => {
                let mut rep = Report::new(SUITES[i]);
                rep.record(false, || Report::fail("missing-entry", vec![], s, None, None));
                out.push(rep);
            }
            Err(e) => return Err(e.to_string()),
        }
    }
    Ok(out)
}

pub fn verify(path: &Path, emit: Option<&Path>, format: Format) -> Outcome {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::input_error(&format!("cannot read {}: {}", path.display(), e), format),
    };
    let file = match CategoryFile::parse(&text) {
        Ok(f) => f,
        Err(e) => return Outcome::input_error(&e, format),
    };
    let d = match file.to_data() {
        Ok(d) => d,
        Err(e) => return Outcome::input_error(&e, format),
    };
    let reports = match validate(&d) {
        Ok(r) => r,
        Err(e) => return Outcome::input_error(&e, format),
    };
    let mut doc = Document::new("verify");
    doc.section(
        "category",
        json!({ "rank": d.rank(), "cyclotomic_order": d.cyclotomic_order(), "labels": d.labels() }),
        format!("rank {}, cyclotomic order {}, labels {}", d.rank(), d.cyclotomic_order(), d.labels().join(" ")),
    );
    for r in reports {
        doc.report(r);
    }
    if let Some(p) = emit {
        if let Err(e) = std::fs::write(p, CategoryFile::from_data(&d).render()) {
            return Outcome::input_error(&format!("cannot write {}: {}", p.display(), e), format);
        }
    }
    Outcome::done(&doc, format)
}

fn matrix_sections(doc: &mut Document, d: &FusionData) -> Result<(), String> {
    let md = fusion::pointed_modular_data(d).map_err(|e| e.to_string())?;
    let s_json: Vec<Vec<Value>> = md.s.iter().map(|r| r.iter().map(cyc_json).collect()).collect();
    let s_text: Vec<String> = md
        .s
        .iter()
        .enumerate()
        .map(|(i, r)| format!("{}: {}", d.label(i), r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" | ")))
        .collect();
    doc.section("S", Value::from(s_json), s_text.join("\n"));
    let t_text: Vec<String> = md.t.iter().enumerate().map(|(i, c)| format!("{}: {}", d.label(i), cyc_text(c))).collect();
    doc.section("T", Value::from(md.t.iter().map(cyc_json).collect::<Vec<_>>()), t_text.join("\n"));
    doc.section("gauss_sum", cyc_json(&md.gauss), cyc_text(&md.gauss));
    Ok(())
}

pub fn lattice(gram: &str, emit: Option<&Path>, format: Format) -> Outcome {
    let g = match parse_gram(gram) {
        Ok(g) => g,
        Err(e) => return Outcome::input_error(&e, format),
    };
    let grp = discriminant_group(&g);
    let d = match build_unchecked(&grp) {
        Ok(d) => d,
        Err(e) => return Outcome::input_error(&e.to_string(), format),
    };
    let mut doc = Document::new("lattice");
    doc.section(
        "group",
        json!({ "order": grp.order(), "invariant_factors": grp.invariant_factors(), "det": g.det() }),
        format!("order {}, invariant factors {:?}, det {}", grp.order(), grp.invariant_factors(), g.det()),
    );
    let elems: Vec<Value> = (0..grp.order())
        .map(|a| json!({ "label": grp.label(a), "q": grp.quadratic(a).to_string(), "twist": cyc_json(d.twist(a)) }))
        .collect();
    let elems_text: Vec<String> = (0..grp.order())
        .map(|a| format!("{}: q = {}, θ = {}", grp.label(a), grp.quadratic(a), cyc_text(d.twist(a))))
        .collect();
    doc.section("elements", Value::from(elems), elems_text.join("\n"));
    if let Err(e) = matrix_sections(&mut doc, &d) {
        return Outcome::input_error(&e, format);
    }
    match validate(&d) {
        Ok(rs) => rs.into_iter().for_each(|r| doc.report(r)),
        Err(e) => return Outcome::input_error(&e, format),
    }
    if let Some(p) = emit {
        if let Err(e) = std::fs::write(p, CategoryFile::from_data(&d).render()) {
            return Outcome::input_error(&format!("cannot write {}: {}", p.display(), e), format);
        }
    }
    Outcome::done(&doc, format)
}

pub fn minimal(m: i64, format: Format) -> Outcome {
    let t = match minimal_model(m) {
        Ok(t) => t,
        Err(e) => return Outcome::input_error(&e.to_string(), format),
    };
    let mut doc = Document::new("minimal-model");
    doc.section("central_charge", Value::from(t.central_charge.to_string()), t.central_charge.to_string());
    let rows: Vec<Value> = t
        .weights
        .iter()
        .map(|w| json!({ "r": w.r, "s": w.s, "h": w.h.to_string(), "twist": cyc_json(&w.twist) }))
        .collect();
    let rows_text: Vec<String> =
        t.weights.iter().map(|w| format!("h_{{{},{}}} = {}, θ = {}", w.r, w.s, w.h, cyc_text(&w.twist))).collect();
    doc.section("weights", Value::from(rows), rows_text.join("\n"));
    let dd: Vec<String> = t.dedup().iter().map(|w| w.h.to_string()).collect();
    doc.section("distinct_weights", Value::from(dd.clone()), dd.join(" "));
    let mut rep = Report::new("kac-symmetry");
    for w in &t.weights {
        let (r, s) = kac_partner(m, w.r, w.s);
        let ok = t.weight(r, s).is_some_and(|p| p.h == w.h && p.twist == w.twist);
        rep.record(ok, || Report::fail("kac-symmetry", vec![w.r as usize, w.s as usize], format!("h_{{{},{}}}", w.r, w.s), None, None));
    }
    doc.report(rep);
    Outcome::done(&doc, format)
}

fn ambient(gram: &str, format: Format) -> Result<Ambient, Outcome> {
    let g = parse_gram(gram).map_err(|e| Outcome::input_error(&e, format))?;
    Ambient::from_gram(&g).map_err(|e| Outcome::input_error(&e.to_string(), format))
}

pub fn catext(gram: &str, max_len: usize, trials: usize, seed: u64, format: Format) -> Outcome {
    if max_len == 0 || trials == 0 {
        return Outcome::input_error("--max-len and --trials must be positive", format);
    }
    let amb = match ambient(gram, format) {
        Ok(a) => a,
        Err(o) => return o,
    };
    let mut doc = Document::new("catext");
    doc.section(
        "setup",
        json!({ "order": amb.order(), "max_len": max_len, "trials": trials, "seed": seed }),
        format!("order {}, max_len {}, trials {}, seed {}", amb.order(), max_len, trials, seed),
    );
    match axiom_suite(&amb) {
        Ok(r) => doc.report(r),
        Err(e) => return Outcome::input_error(&e.to_string(), format),
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match random_suite(&amb, max_len, trials, &mut |k| rng.gen_range(0..k)) {
        Ok(r) => doc.report(r),
        Err(e) => return Outcome::input_error(&e.to_string(), format),
    }
    Outcome::done(&doc, format)
}

/// Seeded transports on the grid `1/40`.
pub fn transports(count: usize, seed: u64) -> Result<Vec<Transport>, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_transport(40, &mut |k| rng.gen_range(0..k))).collect()
}

pub fn dhr(gram: &str, count: usize, seed: u64, format: Format) -> Outcome {
    if count == 0 {
        return Outcome::input_error("--transports must be positive", format);
    }
    let amb = match ambient(gram, format) {
        Ok(a) => a,
        Err(o) => return o,
    };
    let mut doc = Document::new("dhr");
    doc.section(
        "setup",
        json!({ "order": amb.order(), "transports": count, "seed": seed }),
        format!("order {}, transports {}, seed {}", amb.order(), count, seed),
    );
    match check_g_functor(&amb) {
        Ok(r) => doc.report(r),
        Err(e) => return Outcome::input_error(&e.to_string(), format),
    }
    let trs = match transports(count, seed) {
        Ok(t) => t,
        Err(e) => return Outcome::input_error(&e.to_string(), format),
    };
    match check_transport_independence(&amb, &trs) {
        Ok(r) => doc.report(r),
        Err(e) => return Outcome::input_error(&e.to_string(), format),
    }
    Outcome::done(&doc, format)
}
