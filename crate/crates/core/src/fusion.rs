//! Multiplicity-free fusion data with braiding and twist, and exact validators.
//!
//! Index conventions (fixed for the whole crate):
//!
//! * `N(i, j, k) ∈ {0, 1}` is the dimension of `Hom(i ⊗ j, k)`.
//! * `F[a, b, c, d, e, f]` is the scalar of the associator
//!   `(a ⊗ b) ⊗ c → a ⊗ (b ⊗ c)` restricted to total charge `d`, from the
//!   basis vector with `a ⊗ b → e` to the one with `b ⊗ c → f`. It is
//!   admissible when `N(a,b,e) N(e,c,d) N(b,c,f) N(a,f,d) = 1`.
//! * `R[a, b, c]` is the scalar of the braiding `a ⊗ b → b ⊗ a` in the
//!   fusion channel `c`; admissible when `N(a,b,c) = 1`.
//!
//! Pentagon, for all admissible labels:
//! `F[f,c,d,e,g,l] F[a,b,l,e,f,k] = Σ_h F[a,b,c,g,f,h] F[a,h,d,e,g,k] F[b,c,d,k,h,l]`.
//!
//! Hexagons:
//! `R[c,a,e] F[a,c,b,d,e,g] R[c,b,g] = Σ_f F[c,a,b,d,e,f] R[c,f,d] F[a,b,c,d,f,g]`
//! and the same identity with `R[c,a,e]`, `R[c,b,g]`, `R[c,f,d]` replaced by
//! the inverses of `R[a,c,e]`, `R[b,c,g]`, `R[f,c,d]`.
//!
//! Ribbon balancing: `θ_k = R[j,i,k] R[i,j,k] θ_i θ_j`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::scalar::{Cyc, CycField};

/// One violated identity with its coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub check: String,
    pub coords: Vec<usize>,
    pub detail: String,
    pub lhs: Option<Cyc>,
    pub rhs: Option<Cyc>,
}

/// Outcome of one validation suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new(suite: &str) -> Report {
        Report { suite: String::from(suite), checked: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record(&mut self, ok: bool, f: impl FnOnce() -> Failure) {
        self.checked += 1;
        if !ok {
            self.failures.push(f());
        }
    }

    pub fn fail(
        check: &str,
        coords: Vec<usize>,
        detail: String,
        lhs: Option<Cyc>,
        rhs: Option<Cyc>,
    ) -> Failure {
        Failure { check: String::from(check), coords, detail, lhs, rhs }
    }

    /// Sorts failures by check name and coordinates.
    pub fn sort(&mut self) {
        self.failures
            .sort_by(|a, b| (&a.check, &a.coords).cmp(&(&b.check, &b.coords)));
    }
}

/// Labels, fusion rules, F, R and twists of a multiplicity-free category.
#[derive(Clone, Debug)]
pub struct FusionData {
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    nmat: Vec<u8>,
    prod: Vec<Vec<usize>>,
    f: BTreeMap<[usize; 6], Cyc>,
    r: BTreeMap<[usize; 3], Cyc>,
    twist: Vec<Cyc>,
    field: Arc<CycField>,
}

impl FusionData {
    /// Builds the data. Label ranges and `N ∈ {0, 1}` are enforced here;
    /// the axioms are left to the validators.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        fusion: &[(usize, usize, usize)],
        f: BTreeMap<[usize; 6], Cyc>,
        r: BTreeMap<[usize; 3], Cyc>,
        twist: Vec<Cyc>,
        order: u32,
    ) -> Result<FusionData, Error> {
        let n = labels.len();
        if n == 0 || unit >= n || dual.len() != n || twist.len() != n {
            return Err(Error::Structural(String::from("label tables have inconsistent sizes")));
        }
        if dual.iter().any(|&d| d >= n) {
            return Err(Error::Structural(String::from("dual map out of range")));
        }
        let mut nmat = vec![0u8; n * n * n];
        for &(i, j, k) in fusion {
            if i >= n || j >= n || k >= n {
                return Err(Error::Structural(String::from("fusion triple out of range")));
            }
            let slot = &mut nmat[(i * n + j) * n + k];
            if *slot == 1 {
                return Err(Error::Structural(format!(
                    "fusion triple ({}, {}, {}) listed twice",
                    i, j, k
                )));
            }
            *slot = 1;
        }
        for key in f.keys() {
            if key.iter().any(|&x| x >= n) {
                return Err(Error::Structural(String::from("F tuple out of range")));
            }
        }
        for key in r.keys() {
            if key.iter().any(|&x| x >= n) {
                return Err(Error::Structural(String::from("R tuple out of range")));
            }
        }
        let field = CycField::new(order)?;
        let lift = |x: Cyc| -> Result<Cyc, Error> {
            if order % x.order() != 0 {
                return Err(Error::OrderMismatch(x.order(), order));
            }
            Ok(x.lift_to(&field))
        };
        let f = f.into_iter().map(|(k, v)| lift(v).map(|v| (k, v))).collect::<Result<_, _>>()?;
        let r = r.into_iter().map(|(k, v)| lift(v).map(|v| (k, v))).collect::<Result<_, _>>()?;
        let twist = twist.into_iter().map(lift).collect::<Result<_, _>>()?;
        let mut d = FusionData {
            labels,
            unit,
            dual,
            nmat,
            prod: Vec::new(),
            f,
            r,
            twist,
            field,
        };
        d.rebuild_products();
        Ok(d)
    }

    fn rebuild_products(&mut self) {
        let n = self.labels.len();
        self.prod = (0..n * n)
            .map(|ij| (0..n).filter(|&k| self.nmat[ij * n + k] == 1).collect())
            .collect();
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn label_index(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn cyclotomic_order(&self) -> u32 {
        self.field.order()
    }

    pub fn n(&self, i: usize, j: usize, k: usize) -> u8 {
        let n = self.labels.len();
        self.nmat[(i * n + j) * n + k]
    }

    /// Channels `k` with `N(i, j, k) = 1`.
    pub fn products(&self, i: usize, j: usize) -> &[usize] {
        &self.prod[i * self.labels.len() + j]
    }

    /// All admissible fusion triples in lexicographic order.
    pub fn fusion_triples(&self) -> Vec<(usize, usize, usize)> {
        let n = self.rank();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for &k in self.products(i, j) {
                    out.push((i, j, k));
                }
            }
        }
        out
    }

    pub fn f_entries(&self) -> &BTreeMap<[usize; 6], Cyc> {
        &self.f
    }

    pub fn r_entries(&self) -> &BTreeMap<[usize; 3], Cyc> {
        &self.r
    }

    pub fn twists(&self) -> &[Cyc] {
        &self.twist
    }

    pub fn twist(&self, i: usize) -> &Cyc {
        &self.twist[i]
    }

    pub fn f_admissible(&self, t: [usize; 6]) -> bool {
        let [a, b, c, d, e, f] = t;
        self.n(a, b, e) == 1 && self.n(e, c, d) == 1 && self.n(b, c, f) == 1 && self.n(a, f, d) == 1
    }

    pub fn f_symbol(&self, t: [usize; 6]) -> Result<&Cyc, Error> {
        self.f.get(&t).ok_or_else(|| Error::MissingEntry(format!("F{}", self.fmt_tuple(&t))))
    }

    pub fn r_symbol(&self, a: usize, b: usize, c: usize) -> Result<&Cyc, Error> {
        self.r
            .get(&[a, b, c])
            .ok_or_else(|| Error::MissingEntry(format!("R{}", self.fmt_tuple(&[a, b, c]))))
    }

    /// F-value or zero when the tuple is not admissible.
    fn f_or_zero(&self, t: [usize; 6]) -> Result<Cyc, Error> {
        if self.f_admissible(t) {
            Ok(self.f_symbol(t)?.clone())
        } else {
            Ok(Cyc::zero(&self.field))
        }
    }

    pub fn fmt_tuple(&self, t: &[usize]) -> String {
        let mut s = String::from("(");
        for (i, &x) in t.iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            s.push_str(&self.labels[x]);
        }
        s.push(')');
        s
    }

    /// Replaces an F entry.
    pub fn set_f(&mut self, t: [usize; 6], v: Cyc) {
        self.f.insert(t, v.lift_to(&self.field));
    }

    /// Replaces an R entry.
    pub fn set_r(&mut self, t: [usize; 3], v: Cyc) {
        self.r.insert(t, v.lift_to(&self.field));
    }

    /// Replaces a twist.
    pub fn set_twist(&mut self, i: usize, v: Cyc) {
        self.twist[i] = v.lift_to(&self.field);
    }

    /// Sets one fusion coefficient.
    pub fn set_fusion(&mut self, i: usize, j: usize, k: usize, v: bool) {
        let n = self.labels.len();
        self.nmat[(i * n + j) * n + k] = v as u8;
        self.rebuild_products();
    }

    /// Every product `i ⊗ j` is a single label.
    pub fn is_pointed(&self) -> bool {
        self.prod.iter().all(|p| p.len() == 1)
    }

    /// The unique channel of `i ⊗ j` in a pointed category.
    pub fn sum(&self, i: usize, j: usize) -> usize {
        self.products(i, j)[0]
    }

    /// Admissible tuples with missing F or R entries.
    pub fn missing_entries(&self) -> Vec<String> {
        let n = self.rank();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for &e in self.products(a, b) {
                    if !self.r.contains_key(&[a, b, e]) {
                        out.push(format!("R{}", self.fmt_tuple(&[a, b, e])));
                    }
                    for c in 0..n {
                        for &d in self.products(e, c) {
                            for &f in self.products(b, c) {
                                let t = [a, b, c, d, e, f];
                                if self.n(a, f, d) == 1 && !self.f.contains_key(&t) {
                                    out.push(format!("F{}", self.fmt_tuple(&t)));
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// Unit, duality and associativity of the fusion ring.
pub fn verify_fusion_ring(d: &FusionData) -> Report {
    let n = d.rank();
    let u = d.unit();
    let mut rep = Report::new("fusion-ring");
    for i in 0..n {
        for k in 0..n {
            let want = (i == k) as u8;
            rep.record(d.n(u, i, k) == want && d.n(i, u, k) == want, || {
                Report::fail(
                    "unit",
                    vec![i, k],
                    format!("N(1,{0},{1}) or N({0},1,{1}) != δ", d.label(i), d.label(k)),
                    None,
                    None,
                )
            });
        }
    }
    for i in 0..n {
        for j in 0..n {
            let want = (j == d.dual(i)) as u8;
            rep.record(d.n(i, j, u) == want, || {
                Report::fail(
                    "duality",
                    vec![i, j],
                    format!("N({},{},1) = {} but dual({}) = {}", d.label(i), d.label(j), d.n(i, j, u), d.label(i), d.label(d.dual(i))),
                    None,
                    None,
                )
            });
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let lhs: u32 = (0..n).map(|m| (d.n(i, j, m) * d.n(m, k, l)) as u32).sum();
                    let rhs: u32 = (0..n).map(|m| (d.n(j, k, m) * d.n(i, m, l)) as u32).sum();
                    rep.record(lhs == rhs, || {
                        Report::fail(
                            "associativity",
                            vec![i, j, k, l],
                            format!("{} != {} at {}", lhs, rhs, d.fmt_tuple(&[i, j, k, l])),
                            None,
                            None,
                        )
                    });
                }
            }
        }
    }
    rep
}

/// Pentagon identity over all admissible label tuples.
pub fn verify_pentagon(d: &FusionData) -> Result<Report, Error> {
    let n = d.rank();
    let mut rep = Report::new("pentagon");
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for dd in 0..n {
                    for &f in d.products(a, b) {
                        for &g in d.products(f, c) {
                            for &e in d.products(g, dd) {
                                for &l in d.products(c, dd) {
                                    for &k in d.products(b, l) {
                                        if d.n(a, k, e) == 0 {
                                            continue;
                                        }
                                        let lhs = &d.f_or_zero([f, c, dd, e, g, l])?
                                            * &d.f_or_zero([a, b, l, e, f, k])?;
                                        let mut rhs = Cyc::zero(d.field());
                                        for &h in d.products(b, c) {
                                            let t1 = d.f_or_zero([a, b, c, g, f, h])?;
                                            if t1.is_zero() {
                                                continue;
                                            }
                                            let t2 = d.f_or_zero([a, h, dd, e, g, k])?;
                                            if t2.is_zero() {
                                                continue;
                                            }
                                            let t3 = d.f_or_zero([b, c, dd, k, h, l])?;
                                            rhs = &rhs + &(&(&t1 * &t2) * &t3);
                                        }
                                        let ok = lhs == rhs;
                                        rep.record(ok, || {
                                            let coords = vec![a, b, c, dd, e, f, g, k, l];
                                            Report::fail(
                                                "pentagon",
                                                coords.clone(),
                                                format!("(a,b,c,d,e;f,g,k,l) = {}", d.fmt_tuple(&coords)),
                                                Some(lhs.clone()),
                                                Some(rhs.clone()),
                                            )
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(rep)
}

/// Both hexagon identities over all admissible label tuples.
pub fn verify_hexagon(d: &FusionData) -> Result<Report, Error> {
    let n = d.rank();
    let mut rep = Report::new("hexagon");
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for (e, g, dd) in hexagon_frames(d, a, b, c) {
                    let (l1, r1, l2, r2) = hexagon_sides(d, a, b, c, dd, e, g)?;
                    let coords = vec![a, b, c, dd, e, g];
                    rep.record(l1 == r1, || {
                        Report::fail(
                            "hexagon",
                            coords.clone(),
                            format!("(a,b,c,d;e,g) = {}", d.fmt_tuple(&coords)),
                            Some(l1.clone()),
                            Some(r1.clone()),
                        )
                    });
                    rep.record(l2 == r2, || {
                        Report::fail(
                            "hexagon-inverse",
                            coords.clone(),
                            format!("(a,b,c,d;e,g) = {}", d.fmt_tuple(&coords)),
                            Some(l2.clone()),
                            Some(r2.clone()),
                        )
                    });
                }
            }
        }
    }
    Ok(rep)
}

/// Channels `(e, g, d)` with `e ∈ a⊗c`, `g ∈ c⊗b`, `d ∈ e⊗b ∩ a⊗g`.
fn hexagon_frames(d: &FusionData, a: usize, b: usize, c: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for &e in d.products(a, c) {
        for &g in d.products(c, b) {
            for &dd in d.products(e, b) {
                if d.n(a, g, dd) == 1 {
                    out.push((e, g, dd));
                }
            }
        }
    }
    out
}

type Sides = (Cyc, Cyc, Cyc, Cyc);

#[allow(clippy::many_single_char_names)]
fn hexagon_sides(
    d: &FusionData,
    a: usize,
    b: usize,
    c: usize,
    dd: usize,
    e: usize,
    g: usize,
) -> Result<Sides, Error> {
    let fm = d.f_or_zero([a, c, b, dd, e, g])?;
    let l1 = &(&d.r_symbol(c, a, e)?.clone() * &fm) * d.r_symbol(c, b, g)?;
    let l2 = &(&d.r_symbol(a, c, e)?.inv()? * &fm) * &d.r_symbol(b, c, g)?.inv()?;
    let mut r1 = Cyc::zero(d.field());
    let mut r2 = Cyc::zero(d.field());
    for &f in d.products(a, b) {
        let x = d.f_or_zero([c, a, b, dd, e, f])?;
        let y = d.f_or_zero([a, b, c, dd, f, g])?;
        if x.is_zero() || y.is_zero() {
            continue;
        }
        let xy = &x * &y;
        if d.n(c, f, dd) == 1 {
            r1 = &r1 + &(&xy * d.r_symbol(c, f, dd)?);
        }
        if d.n(f, c, dd) == 1 {
            r2 = &r2 + &(&xy * &d.r_symbol(f, c, dd)?.inv()?);
        }
    }
    Ok((l1, r1, l2, r2))
}

/// Hexagon status restricted to the frames of one label triple `(a, b, c)`.
pub fn hexagon_holds_for(d: &FusionData, a: usize, b: usize, c: usize) -> Result<bool, Error> {
    for (e, g, dd) in hexagon_frames(d, a, b, c) {
        let (l1, r1, l2, r2) = hexagon_sides(d, a, b, c, dd, e, g)?;
        if l1 != r1 || l2 != r2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Balancing of the twist against the double braiding, and for every
/// invertible `a` the self-braiding relation `θ(a) = R(a,a; a⊗a)` of the
/// positive-dimension ribbon structure.
pub fn verify_ribbon(d: &FusionData) -> Result<Report, Error> {
    let n = d.rank();
    let mut rep = Report::new("ribbon");
    for a in 0..n {
        if d.products(a, d.dual(a)) != [d.unit()] {
            continue;
        }
        if let [k] = *d.products(a, a) {
            let lhs = d.twist(a).clone();
            let rhs = d.r_symbol(a, a, k)?.clone();
            rep.record(lhs == rhs, || {
                Report::fail(
                    "self-braiding",
                    vec![a, a, k],
                    format!("(a,a;k) = {}", d.fmt_tuple(&[a, a, k])),
                    Some(lhs.clone()),
                    Some(rhs.clone()),
                )
            });
        }
    }
    for i in 0..n {
        for j in 0..n {
            for &k in d.products(i, j) {
                let rhs = &(&(d.r_symbol(j, i, k)? * d.r_symbol(i, j, k)?) * d.twist(i)) * d.twist(j);
                let lhs = d.twist(k).clone();
                rep.record(lhs == rhs, || {
                    Report::fail(
                        "ribbon",
                        vec![i, j, k],
                        format!("(i,j;k) = {}", d.fmt_tuple(&[i, j, k])),
                        Some(lhs.clone()),
                        Some(rhs.clone()),
                    )
                });
            }
        }
    }
    Ok(rep)
}

/// Unnormalized S-matrix, diagonal T and Gauss sum of a pointed category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularData {
    pub s: Vec<Vec<Cyc>>,
    pub t: Vec<Cyc>,
    pub gauss: Cyc,
}

/// `S̃[λ][μ] = (R(μ,λ) R(λ,μ))⁻¹`, `T = diag(θ)`, `g = Σ θ`.
pub fn pointed_modular_data(d: &FusionData) -> Result<ModularData, Error> {
    if !d.is_pointed() {
        return Err(Error::NotPointed);
    }
    let n = d.rank();
    let mut s = Vec::with_capacity(n);
    for l in 0..n {
        let mut row = Vec::with_capacity(n);
        for m in 0..n {
            let k = d.sum(l, m);
            let mono = d.r_symbol(m, l, k)? * d.r_symbol(l, m, k)?;
            row.push(mono.inv()?);
        }
        s.push(row);
    }
    let t: Vec<Cyc> = d.twists().to_vec();
    let mut gauss = Cyc::zero(d.field());
    for x in &t {
        gauss = &gauss + x;
    }
    Ok(ModularData { s, t, gauss })
}

fn matmul(a: &[Vec<Cyc>], b: &[Vec<Cyc>], field: &Arc<CycField>) -> Vec<Vec<Cyc>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = Cyc::zero(field);
                    for k in 0..n {
                        acc = &acc + &(&a[i][k] * &b[k][j]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Recovers the fusion table from `S̃` by the Verlinde formula.
pub fn verlinde_check(d: &FusionData) -> Result<Report, Error> {
    let md = pointed_modular_data(d)?;
    let n = d.rank();
    let mut rep = Report::new("verlinde");
    let conj: Vec<Vec<Cyc>> = md.s.iter().map(|r| r.iter().map(Cyc::conj).collect()).collect();
    for i in 0..n {
        for j in 0..n {
            let ij: Vec<Cyc> = (0..n).map(|s| &md.s[i][s] * &md.s[j][s]).collect();
            for k in 0..n {
                let mut acc = Cyc::zero(d.field());
                for s in 0..n {
                    acc = &acc + &(&ij[s] * &conj[k][s]);
                }
                let got = acc.scale(1, n as i128);
                let want = Cyc::rational(d.field(), d.n(i, j, k) as i128, 1);
                rep.record(got == want, || {
                    Report::fail(
                        "verlinde",
                        vec![i, j, k],
                        format!("N{}", d.fmt_tuple(&[i, j, k])),
                        Some(got.clone()),
                        Some(want.clone()),
                    )
                });
            }
        }
    }
    Ok(rep)
}

/// Unitarity up to scale and `(S̃T)³ = g S̃²`; degenerate data is reported.
pub fn modular_relation_check(d: &FusionData) -> Result<Report, Error> {
    let md = pointed_modular_data(d)?;
    let n = d.rank();
    let field = d.field();
    let mut rep = Report::new("modular");
    rep.record(!md.gauss.is_zero(), || {
        Report::fail("gauss-sum", vec![], String::from("Gauss sum vanishes (non-modular)"), Some(md.gauss.clone()), None)
    });
    let sh: Vec<Vec<Cyc>> = (0..n).map(|i| (0..n).map(|j| md.s[j][i].conj()).collect()).collect();
    let ssh = matmul(&md.s, &sh, field);
    for i in 0..n {
        for j in 0..n {
            let want = if j == i {
                Cyc::rational(field, n as i128, 1)
            } else {
                Cyc::zero(field)
            };
            rep.record(ssh[i][j] == want, || {
                Report::fail(
                    "unitarity",
                    vec![i, j],
                    format!("(S S^†){}", d.fmt_tuple(&[i, j])),
                    Some(ssh[i][j].clone()),
                    Some(want.clone()),
                )
            });
        }
    }
    let st: Vec<Vec<Cyc>> = (0..n).map(|i| (0..n).map(|j| &md.s[i][j] * &md.t[j]).collect()).collect();
    let st2 = matmul(&st, &st, field);
    let st3 = matmul(&st2, &st, field);
    let s2 = matmul(&md.s, &md.s, field);
    for i in 0..n {
        for j in 0..n {
            let want = if j == d.dual(i) {
                Cyc::rational(field, n as i128, 1)
            } else {
                Cyc::zero(field)
            };
            rep.record(s2[i][j] == want, || {
                Report::fail(
                    "s-squared",
                    vec![i, j],
                    format!("(S^2){}", d.fmt_tuple(&[i, j])),
                    Some(s2[i][j].clone()),
                    Some(want.clone()),
                )
            });
        }
    }
    for i in 0..n {
        for j in 0..n {
            let want = &md.gauss * &s2[i][j];
            rep.record(st3[i][j] == want, || {
                Report::fail(
                    "st-cubed",
                    vec![i, j],
                    format!("((S T)^3){}", d.fmt_tuple(&[i, j])),
                    Some(st3[i][j].clone()),
                    Some(want.clone()),
                )
            });
        }
    }
    Ok(rep)
}

/// Runs ring, pentagon, hexagon and ribbon (plus the pointed modular checks
/// when applicable), stopping the chain at the first structural error.
pub fn verify_all(d: &FusionData) -> Vec<Result<Report, Error>> {
    let mut out = vec![Ok(verify_fusion_ring(d))];
    out.push(verify_pentagon(d));
    out.push(verify_hexagon(d));
    out.push(verify_ribbon(d));
    if d.is_pointed() {
        out.push(verlinde_check(d));
        out.push(modular_relation_check(d));
    }
    out
}
