//! Versioned JSON file format for multiplicity-free braided fusion data.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use pointed_ext::fusion::FusionData;
use pointed_ext::scalar::Q128;
use pointed_ext::{Cyc, CycField};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FEntry {
    pub tuple: [String; 6],
    pub value: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct REntry {
    pub tuple: [String; 3],
    pub value: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistEntry {
    pub label: String,
    pub value: Vec<String>,
}

/// Values are coefficient vectors over `1, ζ, ζ², …` with `ζ = e^{2πi/N}`,
/// entries written as `"p"` or `"p/q"`, trailing zeros omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryFile {
    pub schema_version: u32,
    pub cyclotomic_order: u32,
    pub labels: Vec<String>,
    pub unit: String,
    pub dual: BTreeMap<String, String>,
    pub fusion: Vec<[String; 3]>,
    #[serde(rename = "F")]
    pub f: Vec<FEntry>,
    #[serde(rename = "R")]
    pub r: Vec<REntry>,
    pub twist: Vec<TwistEntry>,
}

/// Writes a value as a trimmed coefficient vector.
pub fn encode(c: &Cyc) -> Vec<String> {
    let mut v: Vec<String> = c.coeffs().iter().map(|q| q.to_string()).collect();
    while v.last().is_some_and(|s| s == "0") {
        v.pop();
    }
    v
}

fn decode(field: &Arc<CycField>, what: &str, v: &[String]) -> Result<Cyc, String> {
    if v.len() > field.degree() {
        return Err(format!(
            "{}: {} coefficients exceed the degree {} of the cyclotomic field",
            what,
            v.len(),
            field.degree()
        ));
    }
    let qs = v
        .iter()
        .map(|s| s.trim().parse::<Q128>().map_err(|e| format!("{}: bad coefficient {:?}: {}", what, s, e)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Cyc::from_coeffs(field, &qs))
}

impl CategoryFile {
    pub fn from_data(d: &FusionData) -> CategoryFile {
        let l = |i: usize| d.label(i).to_string();
        CategoryFile {
            schema_version: SCHEMA_VERSION,
            cyclotomic_order: d.cyclotomic_order(),
            labels: d.labels().to_vec(),
            unit: l(d.unit()),
            dual: (0..d.rank()).map(|i| (l(i), l(d.dual(i)))).collect(),
            fusion: d.fusion_triples().into_iter().map(|(a, b, c)| [l(a), l(b), l(c)]).collect(),
            f: d.f_entries()
                .iter()
                .map(|(t, v)| FEntry { tuple: t.map(l), value: encode(v) })
                .collect(),
            r: d.r_entries()
                .iter()
                .map(|(t, v)| REntry { tuple: t.map(l), value: encode(v) })
                .collect(),
            twist: (0..d.rank()).map(|i| TwistEntry { label: l(i), value: encode(d.twist(i)) }).collect(),
        }
    }

    /// Checks the schema and builds the data. Errors are schema violations.
    pub fn to_data(&self) -> Result<FusionData, String> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(format!("unsupported schema_version {} (expected {})", self.schema_version, SCHEMA_VERSION));
        }
        let field = CycField::new(self.cyclotomic_order).map_err(|e| e.to_string())?;
        let mut index = BTreeMap::new();
        for (i, name) in self.labels.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                return Err(format!("label {:?} declared twice", name));
            }
        }
        let idx = |name: &str| index.get(name).copied().ok_or_else(|| format!("unknown label {:?}", name));
        let unit = idx(&self.unit)?;
        let n = self.labels.len();
        let mut dual = vec![None; n];
        for (a, b) in &self.dual {
            dual[idx(a)?] = Some(idx(b)?);
        }
        let dual = dual
            .into_iter()
            .enumerate()
            .map(|(i, d)| d.ok_or_else(|| format!("dual of {:?} missing", self.labels[i])))
            .collect::<Result<Vec<_>, _>>()?;
        let mut fusion = Vec::with_capacity(self.fusion.len());
        let mut seen = BTreeSet::new();
        for [a, b, c] in &self.fusion {
            let t = (idx(a)?, idx(b)?, idx(c)?);
            if !seen.insert(t) {
                return Err(format!("fusion triple ({}, {}, {}) listed twice", a, b, c));
            }
            fusion.push(t);
        }
        let mut f = BTreeMap::new();
        for e in &self.f {
            let mut t = [0usize; 6];
            for (k, name) in e.tuple.iter().enumerate() {
                t[k] = idx(name)?;
            }
            let v = decode(&field, &format!("F{:?}", e.tuple), &e.value)?;
            if f.insert(t, v).is_some() {
                return Err(format!("F{:?} listed twice", e.tuple));
            }
        }
        let mut r = BTreeMap::new();
        for e in &self.r {
            let t = [idx(&e.tuple[0])?, idx(&e.tuple[1])?, idx(&e.tuple[2])?];
            let v = decode(&field, &format!("R{:?}", e.tuple), &e.value)?;
            if r.insert(t, v).is_some() {
                return Err(format!("R{:?} listed twice", e.tuple));
            }
        }
        let mut twist = vec![None; n];
        for e in &self.twist {
            let i = idx(&e.label)?;
            if twist[i].is_some() {
                return Err(format!("twist of {:?} listed twice", e.label));
            }
            twist[i] = Some(decode(&field, &format!("twist {:?}", e.label), &e.value)?);
        }
        let twist = twist
            .into_iter()
            .enumerate()
            .map(|(i, t)| t.ok_or_else(|| format!("twist of {:?} missing", self.labels[i])))
            .collect::<Result<Vec<_>, _>>()?;
        FusionData::new(self.labels.clone(), unit, dual, &fusion, f, r, twist, self.cyclotomic_order)
            .map_err(|e| e.to_string())
    }

    pub fn parse(text: &str) -> Result<CategoryFile, String> {
        serde_json::from_str(text).map_err(|e| format!("schema error: {}", e))
    }

    /// Pretty JSON with a trailing newline.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}
