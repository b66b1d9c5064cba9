//! Exact arithmetic in cyclotomic fields.
//!
//! An element of `Q(ζ_N)` is stored as a polynomial in `ζ_N` with integer
//! numerators over one positive common denominator, reduced modulo the
//! `N`-th cyclotomic polynomial `Φ_N`. Reduction modulo `Φ_N` (rather than
//! `x^N - 1`) makes the representation canonical, so equality is structural.
//!
//! Values of different orders are combined after lifting both to the least
//! common multiple of the orders.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::Error;

/// Rational number type used for exposed coefficients.
pub type Q128 = Ratio<i128>;

fn ck_mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("cyclotomic coefficient overflow")
}

fn ck_add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("cyclotomic coefficient overflow")
}

fn ck_sub(a: i128, b: i128) -> i128 {
    a.checked_sub(b).expect("cyclotomic coefficient overflow")
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

/// Exact division of integer polynomials by a monic divisor (low degree first).
fn div_monic(num: &[i128], den: &[i128]) -> Vec<i128> {
    let d = den.len() - 1;
    let mut rem = num.to_vec();
    if rem.len() <= d {
        return vec![0];
    }
    let mut quo = vec![0i128; rem.len() - d];
    for i in (d..rem.len()).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        quo[i - d] = c;
        for (j, &p) in den.iter().enumerate() {
            rem[i - d + j] = ck_sub(rem[i - d + j], ck_mul(c, p));
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quo
}

fn cyclotomic_memo(n: u32, memo: &mut BTreeMap<u32, Vec<i128>>) -> Vec<i128> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut p = vec![0i128; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in divisors(n) {
        if d < n {
            let q = cyclotomic_memo(d, memo);
            p = div_monic(&p, &q);
        }
    }
    memo.insert(n, p.clone());
    p
}

/// Coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i128> {
    let mut memo = BTreeMap::new();
    cyclotomic_memo(n, &mut memo)
}

/// The field `Q(ζ_N)` together with its reduction modulus.
#[derive(Debug, PartialEq, Eq)]
pub struct CycField {
    order: u32,
    phi: Vec<i128>,
}

impl CycField {
    /// Builds `Q(ζ_N)`; `N = 0` is rejected.
    pub fn new(order: u32) -> Result<Arc<CycField>, Error> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(Arc::new(CycField {
            order,
            phi: cyclotomic_polynomial(order),
        }))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Degree of `Φ_N`.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn modulus(&self) -> &[i128] {
        &self.phi
    }

    fn reduce(&self, mut p: Vec<i128>) -> Vec<i128> {
        let d = self.degree();
        if p.len() > d {
            for i in (d..p.len()).rev() {
                let c = p[i];
                if c == 0 {
                    continue;
                }
                for (j, &q) in self.phi.iter().enumerate() {
                    p[i - d + j] = ck_sub(p[i - d + j], ck_mul(c, q));
                }
            }
            p.truncate(d);
        }
        p
    }
}

/// `ζ_N^k` in the given field.
pub fn root_in(field: &Arc<CycField>, k: i64) -> Cyc {
    let n = field.order as i64;
    let e = k.rem_euclid(n) as usize;
    let mut p = vec![0i128; e + 1];
    p[e] = 1;
    Cyc::from_parts(field.clone(), p, 1)
}

/// `ζ_N^k` in canonical form.
pub fn root_of_unity(order: u32, k: i64) -> Result<Cyc, Error> {
    let f = CycField::new(order)?;
    Ok(root_in(&f, k))
}

/// `exp(iπ q)` for a rational `q = num/den`, in the field of order `2·den`
/// (or the supplied multiple of it).
pub fn exp_i_pi(field: &Arc<CycField>, num: i64, den: i64) -> Cyc {
    let n = field.order as i64;
    let t = 2 * den;
    assert!(n % t == 0, "field order {} does not contain exp(iπ·{}/{})", n, num, den);
    root_in(field, num * (n / t))
}

/// An element of `Q(ζ_N)`.
#[derive(Clone)]
pub struct Cyc {
    field: Arc<CycField>,
    num: Vec<i128>,
    den: i128,
}

impl Cyc {
    fn from_parts(field: Arc<CycField>, num: Vec<i128>, den: i128) -> Cyc {
        let num = field.reduce(num);
        let mut c = Cyc { field, num, den };
        c.normalize();
        c
    }

    fn normalize(&mut self) {
        while let Some(&0) = self.num.last() {
            self.num.pop();
        }
        if self.num.is_empty() {
            self.den = 1;
            return;
        }
        let mut g = self.den.abs();
        for &c in &self.num {
            g = g.gcd(&c);
        }
        if self.den < 0 {
            g = -g;
        }
        if g != 1 {
            for c in self.num.iter_mut() {
                *c /= g;
            }
            self.den /= g;
        }
    }

    pub fn zero(field: &Arc<CycField>) -> Cyc {
        Cyc { field: field.clone(), num: Vec::new(), den: 1 }
    }

    pub fn one(field: &Arc<CycField>) -> Cyc {
        Cyc::from_parts(field.clone(), vec![1], 1)
    }

    /// The rational `p/q` as an element of the field.
    pub fn rational(field: &Arc<CycField>, p: i128, q: i128) -> Cyc {
        assert!(q != 0, "zero denominator");
        Cyc::from_parts(field.clone(), vec![p], q)
    }

    /// Builds an element from rational coefficients in the power basis.
    /// Vectors at least as long as `deg Φ_N` are reduced.
    pub fn from_coeffs(field: &Arc<CycField>, coeffs: &[Q128]) -> Cyc {
        let mut den: i128 = 1;
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let num = coeffs.iter().map(|c| ck_mul(*c.numer(), den / c.denom())).collect();
        Cyc::from_parts(field.clone(), num, den)
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    /// Canonical coefficient vector (trailing zeros removed).
    pub fn coeffs(&self) -> Vec<Q128> {
        self.num.iter().map(|&c| Q128::new(c, self.den)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.num.len() == 1 && self.num[0] == 1 && self.den == 1
    }

    /// Returns the rational value when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Q128> {
        match self.num.len() {
            0 => Some(Q128::from_integer(0)),
            1 => Some(Q128::new(self.num[0], self.den)),
            _ => None,
        }
    }

    /// Re-expresses the element in `Q(ζ_M)`; `M` must be a multiple of the order.
    pub fn lift_to(&self, field: &Arc<CycField>) -> Cyc {
        if Arc::ptr_eq(field, &self.field) || field.order == self.field.order {
            return Cyc { field: field.clone(), num: self.num.clone(), den: self.den };
        }
        let m = field.order;
        let n = self.field.order;
        assert!(m % n == 0, "cannot lift order {} to {}", n, m);
        let step = (m / n) as usize;
        let mut p = vec![0i128; self.num.len().saturating_sub(1) * step + 1];
        for (i, &c) in self.num.iter().enumerate() {
            p[i * step] = c;
        }
        if self.num.is_empty() {
            return Cyc::zero(field);
        }
        Cyc::from_parts(field.clone(), p, self.den)
    }

    /// Lifts to order `m` (a multiple of the current order).
    pub fn lift(&self, m: u32) -> Result<Cyc, Error> {
        let f = CycField::new(m)?;
        if m % self.order() != 0 {
            return Err(Error::OrderMismatch(self.order(), m));
        }
        Ok(self.lift_to(&f))
    }

    fn common(a: &Cyc, b: &Cyc) -> (Cyc, Cyc) {
        if a.field.order == b.field.order {
            return (a.clone(), Cyc { field: a.field.clone(), num: b.num.clone(), den: b.den });
        }
        let m = a.field.order.lcm(&b.field.order);
        let f = if m == a.field.order {
            a.field.clone()
        } else if m == b.field.order {
            b.field.clone()
        } else {
            CycField::new(m).expect("nonzero order")
        };
        (a.lift_to(&f), b.lift_to(&f))
    }

    fn add_same(a: &Cyc, b: &Cyc) -> Cyc {
        let len = a.num.len().max(b.num.len());
        let mut p = vec![0i128; len];
        for (i, &c) in a.num.iter().enumerate() {
            p[i] = ck_mul(c, b.den);
        }
        for (i, &c) in b.num.iter().enumerate() {
            p[i] = ck_add(p[i], ck_mul(c, a.den));
        }
        let mut r = Cyc { field: a.field.clone(), num: p, den: ck_mul(a.den, b.den) };
        r.normalize();
        r
    }

    fn mul_same(a: &Cyc, b: &Cyc) -> Cyc {
        if a.is_zero() || b.is_zero() {
            return Cyc::zero(&a.field);
        }
        let mut p = vec![0i128; a.num.len() + b.num.len() - 1];
        for (i, &x) in a.num.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.num.iter().enumerate() {
                if y != 0 {
                    p[i + j] = ck_add(p[i + j], ck_mul(x, y));
                }
            }
        }
        Cyc::from_parts(a.field.clone(), p, ck_mul(a.den, b.den))
    }

    /// Applies the Galois automorphism `ζ_N ↦ ζ_N^k` (`gcd(k, N) = 1`).
    pub fn galois(&self, k: i64) -> Cyc {
        let n = self.field.order as i64;
        if self.is_zero() {
            return self.clone();
        }
        let mut p = vec![0i128; n as usize];
        for (i, &c) in self.num.iter().enumerate() {
            let e = ((i as i64) * k).rem_euclid(n) as usize;
            p[e] = ck_add(p[e], c);
        }
        Cyc::from_parts(self.field.clone(), p, self.den)
    }

    /// Complex conjugation, `ζ_N ↦ ζ_N^{N-1}`.
    pub fn conj(&self) -> Cyc {
        self.galois(-1)
    }

    /// Multiplicative inverse; zero is rejected.
    pub fn inv(&self) -> Result<Cyc, Error> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let c = self.conj();
        let nrm = Cyc::mul_same(self, &c);
        if let Some(r) = nrm.as_rational() {
            return Ok(c.scale(*r.denom(), *r.numer()));
        }
        let n = self.field.order as i64;
        let mut prod = Cyc::one(&self.field);
        for k in 2..n {
            if k.gcd(&n) == 1 {
                prod = Cyc::mul_same(&prod, &self.galois(k));
            }
        }
        let full = Cyc::mul_same(self, &prod);
        let r = full.as_rational().expect("field norm is rational");
        Ok(prod.scale(*r.denom(), *r.numer()))
    }

    /// Multiplies by the rational `p/q`.
    pub fn scale(&self, p: i128, q: i128) -> Cyc {
        assert!(q != 0, "zero denominator");
        let mut r = Cyc {
            field: self.field.clone(),
            num: self.num.iter().map(|&c| ck_mul(c, p)).collect(),
            den: ck_mul(self.den, q),
        };
        r.normalize();
        r
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Cyc, Error> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Cyc::one(&self.field);
        while k > 0 {
            if k & 1 == 1 {
                acc = Cyc::mul_same(&acc, &base);
            }
            base = Cyc::mul_same(&base, &base);
            k >>= 1;
        }
        Ok(acc)
    }

    /// Numeric embedding `ζ_N ↦ exp(2πi/N)`; for display only.
    pub fn approx_complex(&self) -> (f64, f64) {
        let n = self.field.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, &c) in self.num.iter().enumerate() {
            let ang = 2.0 * core::f64::consts::PI * (i as f64) / n;
            re += (c as f64) * libm::cos(ang);
            im += (c as f64) * libm::sin(ang);
        }
        (re / self.den as f64, im / self.den as f64)
    }

    /// When the element is a root of unity `ζ_N^k`, returns `k`.
    pub fn root_exponent(&self) -> Option<u32> {
        let n = self.field.order;
        (0..n).find(|&k| *self == root_in(&self.field, k as i64))
    }
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Cyc) -> bool {
        if self.field.order == other.field.order {
            return self.num == other.num && self.den == other.den;
        }
        let (a, b) = Cyc::common(self, other);
        a.num == b.num && a.den == b.den
    }
}

impl Eq for Cyc {}

impl PartialOrd for Cyc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but deterministic total order (order, then coefficients), used
/// only to sort report entries.
impl Ord for Cyc {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.field.order, &self.num, self.den).cmp(&(other.field.order, &other.num, other.den))
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc({}; ", self.field.order)?;
        fmt::Display::fmt(self, f)?;
        write!(f, ")")
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate() {
            if *c.numer() == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                _ => write!(f, "({})·ζ{}^{}", c, self.field.order, i)?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn add(self, rhs: &Cyc) -> Cyc {
        let (a, b) = Cyc::common(self, rhs);
        Cyc::add_same(&a, &b)
    }
}

impl<'a> Sub<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn sub(self, rhs: &Cyc) -> Cyc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Cyc> for &'a Cyc {
    type Output = Cyc;
    fn mul(self, rhs: &Cyc) -> Cyc {
        let (a, b) = Cyc::common(self, rhs);
        Cyc::mul_same(&a, &b)
    }
}

impl<'a> Neg for &'a Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc {
            field: self.field.clone(),
            num: self.num.iter().map(|&c| -c).collect(),
            den: self.den,
        }
    }
}

impl Add for Cyc {
    type Output = Cyc;
    fn add(self, rhs: Cyc) -> Cyc {
        &self + &rhs
    }
}

impl Sub for Cyc {
    type Output = Cyc;
    fn sub(self, rhs: Cyc) -> Cyc {
        &self - &rhs
    }
}

impl Mul for Cyc {
    type Output = Cyc;
    fn mul(self, rhs: Cyc) -> Cyc {
        &self * &rhs
    }
}

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn lift_round_trip() {
        let x = root_of_unity(3, 1).unwrap();
        let y = x.lift(12).unwrap();
        assert_eq!(x, y);
        assert_eq!(y, root_of_unity(12, 4).unwrap());
    }
}
