//! Even lattices, their discriminant groups and the pointed braided
//! categories they carry.
//!
//! For an even non-degenerate Gram matrix `G` the dual lattice `Υ°` has
//! coordinates `G⁻¹ x` (`x` integral) in the lattice basis. With a Smith
//! decomposition `U G V = D` the group `Υ°/Υ` is `⊕ Z/d_i` and the element
//! with coordinates `c` (`0 ≤ c_i < d_i`) has section `V D⁻¹ c`.
//!
//! The half form `B(x, y) = Σ_{i>j} x_i G_ij y_j + Σ_i x_i G_ii y_i / 2`
//! satisfies `B + Bᵀ = (·|·)` and is integral on `Υ`. Writing
//! `δ(b, c) = s(b) + s(c) - s(b + c) ∈ Υ`, the builder uses
//!
//! * `R(λ, μ) = exp(iπ (s(λ)|s(μ)))`, `θ(λ) = exp(iπ (s(λ)|s(λ)))`,
//! * `F(a, b, c) = exp(iπ [B(s(a), δ(b, c)) + B(δ(a, b), s(c))])`.
//!
//! The F exponent is the coboundary-corrected one that makes the pentagon
//! and hexagons hold for every even lattice; the builder re-runs all
//! validators on its own output.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use alloc::collections::BTreeMap;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;

use crate::error::Error;
use crate::fusion::{self, FusionData};
use crate::scalar::{exp_i_pi, Cyc, CycField};

/// Rational numbers used for lattice coordinates and pairings.
pub type Q = Ratio<i64>;

/// Integer matrix as rows.
pub type IMat = Vec<Vec<i64>>;

/// Symmetric even integral matrix with nonzero determinant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramMatrix {
    rows: IMat,
}

impl GramMatrix {
    pub fn new(rows: IMat) -> Result<GramMatrix, Error> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        for i in 0..n {
            for j in 0..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric);
                }
            }
            if rows[i][i] % 2 != 0 {
                return Err(Error::OddLattice);
            }
        }
        if determinant(&rows) == 0 {
            return Err(Error::Singular);
        }
        Ok(GramMatrix { rows })
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &IMat {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn det(&self) -> i64 {
        determinant(&self.rows)
    }

    /// `(x|y)` for rational coordinate vectors.
    pub fn pair(&self, x: &[Q], y: &[Q]) -> Q {
        let n = self.rank();
        let mut acc = Q::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                acc += x[i] * Q::from_integer(self.rows[i][j]) * y[j];
            }
        }
        acc
    }

    /// The half form `B(x, y)`.
    pub fn half(&self, x: &[Q], y: &[Q]) -> Q {
        let n = self.rank();
        let mut acc = Q::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..i {
                acc += x[i] * Q::from_integer(self.rows[i][j]) * y[j];
            }
            acc += x[i] * Q::from_integer(self.rows[i][i] / 2) * y[i];
        }
        acc
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &GramMatrix) -> GramMatrix {
        let n = self.rank();
        let m = other.rank();
        let mut rows = vec![vec![0; n + m]; n + m];
        for i in 0..n {
            rows[i][..n].copy_from_slice(&self.rows[i]);
        }
        for i in 0..m {
            rows[n + i][n..].copy_from_slice(&other.rows[i]);
        }
        GramMatrix { rows }
    }
}

/// Determinant by fraction-free elimination.
pub fn determinant(m: &IMat) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// Cartan matrices of simply-laced root systems (`A_n`, `D_n`, `E_6..8`).
pub fn cartan(kind: char, n: usize) -> Result<GramMatrix, Error> {
    let mut rows = vec![vec![0i64; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |rows: &mut IMat, i: usize, j: usize| {
        rows[i][j] = -1;
        rows[j][i] = -1;
    };
    match (kind, n) {
        ('A', n) if n >= 1 => {
            for i in 1..n {
                link(&mut rows, i - 1, i);
            }
        }
        ('D', n) if n >= 4 => {
            for i in 1..n - 1 {
                link(&mut rows, i - 1, i);
            }
            link(&mut rows, n - 3, n - 1);
        }
        ('E', n) if (6..=8).contains(&n) => {
            for i in 1..n - 1 {
                link(&mut rows, i - 1, i);
            }
            link(&mut rows, 2, n - 1);
        }
        _ => return Err(Error::BadParameter(format!("no Cartan matrix {}{}", kind, n))),
    }
    GramMatrix::new(rows)
}

/// `U · M · V = D` with `U`, `V` unimodular and `d_1 | d_2 | …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IMat,
    pub d: IMat,
    pub v: IMat,
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n).map(|i| (0..n).map(|j| (i == j) as i128).collect()).collect()
}

fn to_i64(m: Vec<Vec<i128>>) -> IMat {
    m.into_iter()
        .map(|r| r.into_iter().map(|x| i64::try_from(x).expect("Smith transform overflow")).collect())
        .collect()
}

/// Smith normal form with a fixed pivot rule (smallest magnitude, first in
/// row-major order).
pub fn smith_normal_form(m: &IMat) -> SmithForm {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut u = identity(rows);
    let mut v = identity(cols);
    let row_op = |a: &mut Vec<Vec<i128>>, u: &mut Vec<Vec<i128>>, dst: usize, src: usize, q: i128| {
        for j in 0..a[0].len() {
            a[dst][j] -= q * a[src][j];
        }
        for j in 0..u[0].len() {
            u[dst][j] -= q * u[src][j];
        }
    };
    let col_op = |a: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, dst: usize, src: usize, q: i128| {
        for row in a.iter_mut() {
            row[dst] -= q * row[src];
        }
        for row in v.iter_mut() {
            row[dst] -= q * row[src];
        }
    };
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j] != 0 && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            a.swap(t, pi);
            u.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..rows {
                let q = Integer::div_floor(&a[i][t], &a[t][t]);
                if q != 0 {
                    row_op(&mut a, &mut u, i, t, q);
                }
                if a[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = Integer::div_floor(&a[t][j], &a[t][t]);
                if q != 0 {
                    col_op(&mut a, &mut v, j, t, q);
                }
                if a[t][j] != 0 {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let p = a[t][t];
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => row_op(&mut a, &mut u, t, i, -1),
                None => break,
            }
        }
        if a[t][t] < 0 {
            for j in 0..cols {
                a[t][j] = -a[t][j];
            }
            for j in 0..rows {
                u[t][j] = -u[t][j];
            }
        }
    }
    SmithForm { u: to_i64(u), d: to_i64(a), v: to_i64(v) }
}

/// `Υ°/Υ` with its fixed section and pairing.
#[derive(Clone, Debug)]
pub struct DiscriminantGroup {
    gram: GramMatrix,
    factors: Vec<i64>,
    section: Vec<Vec<Q>>,
}

impl DiscriminantGroup {
    pub fn gram(&self) -> &GramMatrix {
        &self.gram
    }

    /// Invariant factors `d_1 | d_2 | …`, each greater than one.
    pub fn invariant_factors(&self) -> &[i64] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.section.len()
    }

    /// Mixed-radix coordinates of an element index.
    pub fn coords(&self, mut idx: usize) -> Vec<i64> {
        let mut c = vec![0i64; self.factors.len()];
        for k in (0..self.factors.len()).rev() {
            let d = self.factors[k] as usize;
            c[k] = (idx % d) as i64;
            idx /= d;
        }
        c
    }

    /// Element index of coordinates (reduced modulo the factors).
    pub fn index(&self, c: &[i64]) -> usize {
        let mut idx = 0usize;
        for (k, &d) in self.factors.iter().enumerate() {
            idx = idx * d as usize + c[k].rem_euclid(d) as usize;
        }
        idx
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let ca = self.coords(a);
        let cb = self.coords(b);
        let s: Vec<i64> = ca.iter().zip(&cb).map(|(x, y)| x + y).collect();
        self.index(&s)
    }

    pub fn neg(&self, a: usize) -> usize {
        let c: Vec<i64> = self.coords(a).iter().map(|x| -x).collect();
        self.index(&c)
    }

    /// Human-readable element name.
    pub fn label(&self, a: usize) -> String {
        let c = self.coords(a);
        match c.len() {
            0 => String::from("0"),
            1 => format!("{}", c[0]),
            _ => {
                let parts: Vec<String> = c.iter().map(|x| format!("{}", x)).collect();
                format!("({})", parts.join(","))
            }
        }
    }

    /// Representative of the class in `Υ°`, lattice-basis coordinates.
    pub fn section(&self, a: usize) -> &[Q] {
        &self.section[a]
    }

    /// `(s(λ)|s(μ))`.
    pub fn pairing(&self, a: usize, b: usize) -> Q {
        self.gram.pair(&self.section[a], &self.section[b])
    }

    /// `q(λ) = (s(λ)|s(λ)) mod 2`, in `[0, 2)`.
    pub fn quadratic(&self, a: usize) -> Q {
        modq(self.pairing(a, a), 2)
    }

    /// `b(λ, μ) = (s(λ)|s(μ)) mod 1`, in `[0, 1)`.
    pub fn bilinear(&self, a: usize, b: usize) -> Q {
        modq(self.pairing(a, b), 1)
    }

    /// `δ(b, c) = s(b) + s(c) - s(b + c)`, an integral vector.
    pub fn defect(&self, b: usize, c: usize) -> Vec<Q> {
        let bc = self.add(b, c);
        (0..self.gram.rank())
            .map(|i| self.section[b][i] + self.section[c][i] - self.section[bc][i])
            .collect()
    }

    /// The same group with representatives moved by lattice vectors.
    /// The shift of the zero class is ignored so that `s(0) = 0`.
    pub fn shifted(&self, shift: impl Fn(usize) -> Vec<i64>) -> DiscriminantGroup {
        let mut out = self.clone();
        for a in 1..self.order() {
            let s = shift(a);
            for (x, d) in out.section[a].iter_mut().zip(s) {
                *x += Q::from_integer(d);
            }
        }
        out
    }
}

fn modq(x: Q, m: i64) -> Q {
    let m = Q::from_integer(m);
    let k = (x / m).floor();
    x - k * m
}

/// Discriminant group of an even non-degenerate lattice.
pub fn discriminant_group(g: &GramMatrix) -> DiscriminantGroup {
    let n = g.rank();
    let snf = smith_normal_form(g.rows());
    let diag: Vec<i64> = (0..n).map(|i| snf.d[i][i]).collect();
    let keep: Vec<usize> = (0..n).filter(|&i| diag[i] > 1).collect();
    let factors: Vec<i64> = keep.iter().map(|&i| diag[i]).collect();
    let order: usize = factors.iter().map(|&d| d as usize).product();
    let mut grp = DiscriminantGroup { gram: g.clone(), factors, section: Vec::with_capacity(order) };
    for idx in 0..order {
        let c = grp.coords(idx);
        let mut y = vec![Q::zero(); n];
        for (k, &i) in keep.iter().enumerate() {
            let t = Q::new(c[k], diag[i]);
            if t.is_zero() {
                continue;
            }
            for (r, yr) in y.iter_mut().enumerate() {
                *yr += Q::from_integer(snf.v[r][i]) * t;
            }
        }
        grp.section.push(y);
    }
    grp
}

/// `ε(α, β) = Π_{i>j} (-1)^{α_i G_ij β_j}` on integer exponent vectors.
pub fn epsilon(g: &GramMatrix, alpha: &[i64], beta: &[i64]) -> Cyc {
    let n = g.rank();
    let mut e = 0i64;
    for i in 0..n {
        for j in 0..i {
            e += alpha[i] * g.entry(i, j) * beta[j];
        }
    }
    let f = CycField::new(1).expect("order one");
    Cyc::rational(&f, if e.rem_euclid(2) == 0 { 1 } else { -1 }, 1)
}

fn lcm_den(acc: i64, x: &Q) -> i64 {
    acc.lcm(x.denom())
}

/// The pointed braided category of `Υ°/Υ` from its Gram matrix.
pub fn build_pointed_mtc(g: &GramMatrix) -> Result<FusionData, Error> {
    build_from_group(&discriminant_group(g))
}

/// Builder over a given group and section; re-validates its output.
pub fn build_from_group(grp: &DiscriminantGroup) -> Result<FusionData, Error> {
    let d = build_unchecked(grp)?;
    for rep in fusion::verify_all(&d) {
        let rep = rep?;
        if !rep.passed() {
            return Err(Error::Internal(format!(
                "lattice builder produced data failing {}: {:?}",
                rep.suite,
                rep.failures.first().map(|f| &f.detail)
            )));
        }
    }
    Ok(d)
}

/// Exponent `q` (in units of `iπ`) of every F-symbol.
pub fn f_exponent(grp: &DiscriminantGroup, a: usize, b: usize, c: usize) -> Q {
    let g = grp.gram();
    let dbc = grp.defect(b, c);
    let dab = grp.defect(a, b);
    g.half(grp.section(a), &dbc) + g.half(&dab, grp.section(c))
}

/// Builds the data without running the validators.
pub fn build_unchecked(grp: &DiscriminantGroup) -> Result<FusionData, Error> {
    let n = grp.order();
    let mut den = 1i64;
    let mut fexp = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            den = lcm_den(den, &grp.pairing(a, b));
            for c in 0..n {
                let q = f_exponent(grp, a, b, c);
                den = lcm_den(den, &q);
                fexp.insert((a, b, c), q);
            }
        }
    }
    let order = u32::try_from(2 * den).map_err(|_| Error::Internal(String::from("order overflow")))?;
    let field = CycField::new(order)?;
    let e = |q: Q| exp_i_pi(&field, *q.numer(), *q.denom());
    let labels: Vec<String> = (0..n).map(|a| grp.label(a)).collect();
    let dual: Vec<usize> = (0..n).map(|a| grp.neg(a)).collect();
    let mut fusion = Vec::with_capacity(n * n);
    let mut r = BTreeMap::new();
    let mut f = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            let ab = grp.add(a, b);
            fusion.push((a, b, ab));
            r.insert([a, b, ab], e(grp.pairing(a, b)));
            for c in 0..n {
                let bc = grp.add(b, c);
                let abc = grp.add(ab, c);
                f.insert([a, b, c, abc, ab, bc], e(fexp[&(a, b, c)]));
            }
        }
    }
    let twist = (0..n).map(|a| e(grp.pairing(a, a))).collect();
    FusionData::new(labels, 0, dual, &fusion, f, r, twist, order)
}

/// Quotient of `Υ°` coordinates: whether `x` lies in `Υ`.
pub fn in_lattice(x: &[Q]) -> bool {
    x.iter().all(|q| q.is_integer())
}
