//! Word calculus for left and right charge creation over arg-valued
//! intervals in a pointed braided category.
//!
//! A state is a list of charges in tensor order together with a phase
//! relative to the right-nested basis `x₁ ⊗ (x₂ ⊗ (… ⊗ x_n))`. A word is
//! applied right to left to the vacuum.
//!
//! * `L(λ, Ĩ)` puts `λ` in front and multiplies by `q(λ, Ĩ; C)`, where `C`
//!   is the current configuration of charges. Write `Ĩ = Ĩ₀ + n` with the
//!   principal lift `Ĩ₀` (left end in `[-1/2, 1/2)`) and sort the charges by
//!   the left end of their principal lifts, most anticlockwise first:
//!   `s_1, …, s_k`. If `t` of them lie strictly anticlockwise of `Ĩ₀` then
//!   `q = Π_{j≤t} β(λ, s_j, s_{j+1} + … + s_k)⁻¹ · M(λ, ΣC)ⁿ` with
//!   `β(a, b, c) = F(a,b,c)⁻¹ R(a,b) F(b,a,c)` and
//!   `M(a, b) = θ(a+b) / (θ(a) θ(b))`.
//! * `R(λ, J̃)` is `L(λ, J̃)` followed by braiding `λ` past the whole state,
//!   which moves it to the back: `R(λ, ΣK) · A(K, λ)` with the associator
//!   phase `A(x₁…x_n, y) = Π_{i<n} F(x_i, x_{i+1} + … + x_n, y)`.
//! * `L*(λ, Ĩ)` removes a front charge `λ` with the conjugate phase of its
//!   creation, and otherwise creates `-λ` with a conjugated phase.
//! * A merged generator carries the value of a sub-word of `L`s and places
//!   its charges together at the hull interval: the label times the phase
//!   of creating the parts there, divided by the same on the vacuum.
//! * `Swap` and `ToBack` are the braidings that rewrites introduce.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::circle::{turns, ArgInterval, Turns};
use crate::error::Error;
use crate::fusion::{self, FusionData, Report};
use crate::lattice::{self, DiscriminantGroup, GramMatrix};
use crate::scalar::{Cyc, CycField};

/// Group, fusion data and dense phase tables for a pointed category.
#[derive(Clone, Debug)]
pub struct Ambient {
    grp: DiscriminantGroup,
    data: FusionData,
    n: usize,
    add: Vec<usize>,
    f: Vec<Cyc>,
    f_inv: Vec<Cyc>,
    r: Vec<Cyc>,
    r_inv: Vec<Cyc>,
    theta: Vec<Cyc>,
    theta_inv: Vec<Cyc>,
}

impl Ambient {
    pub fn from_gram(g: &GramMatrix) -> Result<Ambient, Error> {
        let grp = lattice::discriminant_group(g);
        let data = lattice::build_from_group(&grp)?;
        Ambient::new(grp, data)
    }

    /// Wraps possibly unvalidated data; every pointed entry must exist.
    pub fn new(grp: DiscriminantGroup, data: FusionData) -> Result<Ambient, Error> {
        let n = grp.order();
        if data.rank() != n || !data.is_pointed() {
            return Err(Error::NotPointed);
        }
        let add: Vec<usize> = (0..n * n).map(|x| grp.add(x / n, x % n)).collect();
        let mut f = Vec::with_capacity(n * n * n);
        let mut f_inv = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let ab = add[a * n + b];
                    let bc = add[b * n + c];
                    let v = data.f_symbol([a, b, c, add[ab * n + c], ab, bc])?.clone();
                    f_inv.push(v.inv()?);
                    f.push(v);
                }
            }
        }
        let mut r = Vec::with_capacity(n * n);
        let mut r_inv = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let v = data.r_symbol(a, b, add[a * n + b])?.clone();
                r_inv.push(v.inv()?);
                r.push(v);
            }
        }
        let theta = data.twists().to_vec();
        let theta_inv = theta.iter().map(|t| t.inv()).collect::<Result<Vec<_>, _>>()?;
        Ok(Ambient { grp, data, n, add, f, f_inv, r, r_inv, theta, theta_inv })
    }

    pub fn group(&self) -> &DiscriminantGroup {
        &self.grp
    }

    pub fn data(&self) -> &FusionData {
        &self.data
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Arc<CycField> {
        self.data.field()
    }

    pub fn one(&self) -> Cyc {
        Cyc::one(self.field())
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.data.dual(a)
    }

    pub fn sum(&self, xs: &[usize]) -> usize {
        xs.iter().fold(0, |acc, &x| self.add(acc, x))
    }

    pub fn f(&self, a: usize, b: usize, c: usize) -> &Cyc {
        &self.f[(a * self.n + b) * self.n + c]
    }

    pub fn f_inv(&self, a: usize, b: usize, c: usize) -> &Cyc {
        &self.f_inv[(a * self.n + b) * self.n + c]
    }

    pub fn r(&self, a: usize, b: usize) -> &Cyc {
        &self.r[a * self.n + b]
    }

    pub fn r_inv(&self, a: usize, b: usize) -> &Cyc {
        &self.r_inv[a * self.n + b]
    }

    pub fn theta(&self, a: usize) -> &Cyc {
        &self.theta[a]
    }

    /// `β(a, b, c)`: braiding the first two factors of `a ⊗ (b ⊗ c)`.
    pub fn braid_front(&self, a: usize, b: usize, c: usize) -> Cyc {
        &(self.f_inv(a, b, c) * self.r(a, b)) * self.f(b, a, c)
    }

    pub fn braid_front_inv(&self, a: usize, b: usize, c: usize) -> Cyc {
        &(self.f_inv(b, a, c) * self.r_inv(a, b)) * self.f(a, b, c)
    }

    /// `θ(a+b) / (θ(a) θ(b))`.
    pub fn monodromy(&self, a: usize, b: usize) -> Cyc {
        &(&self.theta[self.add(a, b)] * &self.theta_inv[a]) * &self.theta_inv[b]
    }

    /// `A(xs, y)`: from `(x₁ ⊗ … ⊗ x_n) ⊗ y` to the right-nested basis.
    pub fn assoc(&self, xs: &[usize], y: usize) -> Cyc {
        let mut acc = self.one();
        let mut tail = 0;
        for i in (0..xs.len()).rev() {
            if i + 1 < xs.len() {
                acc = &acc * self.f(xs[i], tail, y);
            }
            tail = self.add(xs[i], tail);
        }
        acc
    }

    pub fn assoc_inv(&self, xs: &[usize], y: usize) -> Cyc {
        let mut acc = self.one();
        let mut tail = 0;
        for i in (0..xs.len()).rev() {
            if i + 1 < xs.len() {
                acc = &acc * self.f_inv(xs[i], tail, y);
            }
            tail = self.add(xs[i], tail);
        }
        acc
    }

    /// Phase of creating `parts` one after another at the same interval,
    /// the last part first.
    pub fn stacked_phase(&self, parts: &[usize], iv: &ArgInterval, members: &[Member]) -> Cyc {
        let mut ms: Vec<Member> = members.to_vec();
        let mut q = self.one();
        for (i, &p) in parts.iter().enumerate().rev() {
            q = &q * &self.insertion_phase(p, iv, &ms);
            ms.insert(0, Member { sector: p, interval: *iv, rank: parts.len() - i });
        }
        q
    }

    /// Insertion phase `q(λ, Ĩ; C)`.
    pub fn insertion_phase(&self, lam: usize, iv: &ArgInterval, members: &[Member]) -> Cyc {
        let (n, i0) = iv.principal();
        let a0 = i0.a();
        let mut sorted: Vec<(Turns, usize, usize)> =
            members.iter().map(|m| (m.interval.principal().1.a(), m.rank, m.sector)).collect();
        sorted.sort_by(|x, y| (y.0, y.1).cmp(&(x.0, x.1)));
        let t = sorted.iter().filter(|x| x.0 > a0).count();
        let mut suffix = vec![0usize; sorted.len() + 1];
        for j in (0..sorted.len()).rev() {
            suffix[j] = self.add(sorted[j].2, suffix[j + 1]);
        }
        let mut q = self.one();
        for j in 0..t {
            q = &q * &self.braid_front_inv(lam, sorted[j].2, suffix[j + 1]);
        }
        if n != 0 {
            let m = self.monodromy(lam, suffix[0]);
            q = &q * &m.pow(n).expect("monodromy is a unit");
        }
        q
    }
}

/// One generator of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    L(usize, ArgInterval),
    R(usize, ArgInterval),
    /// Adjoint of `L(λ, Ĩ)`.
    LAdj(usize, ArgInterval),
    /// A sub-word of `L`s inserted as one charge at `interval`.
    Merged { parts: Vec<usize>, label: Cyc, interval: ArgInterval },
    /// Braiding of the two front factors (inverse braiding if `inverse`).
    Swap { inverse: bool },
    /// Braiding of the front factor past all others.
    ToBack,
}

impl Generator {
    pub fn interval(&self) -> Option<&ArgInterval> {
        match self {
            Generator::L(_, i) | Generator::R(_, i) | Generator::LAdj(_, i) => Some(i),
            Generator::Merged { interval, .. } => Some(interval),
            _ => None,
        }
    }

    fn with_interval(&self, iv: ArgInterval) -> Generator {
        match self {
            Generator::L(s, _) => Generator::L(*s, iv),
            Generator::R(s, _) => Generator::R(*s, iv),
            Generator::LAdj(s, _) => Generator::LAdj(*s, iv),
            Generator::Merged { parts, label, .. } => {
                Generator::Merged { parts: parts.clone(), label: label.clone(), interval: iv }
            }
            g => g.clone(),
        }
    }
}

/// Generators listed left to right; the last one acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExtWord {
    pub gens: Vec<Generator>,
}

impl ExtWord {
    pub fn new(gens: Vec<Generator>) -> ExtWord {
        ExtWord { gens }
    }

    pub fn empty() -> ExtWord {
        ExtWord::default()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// `self · other`: `other` acts first.
    pub fn then(&self, other: &ExtWord) -> ExtWord {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        ExtWord { gens }
    }

    pub fn rotate(&self, t: Turns) -> ExtWord {
        let gens = self
            .gens
            .iter()
            .map(|g| match g.interval() {
                Some(iv) => g.with_interval(iv.rotate(t)),
                None => g.clone(),
            })
            .collect();
        ExtWord { gens }
    }
}

/// A placed charge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Member {
    pub sector: usize,
    pub interval: ArgInterval,
    /// Order among charges stacked on one interval, higher is more
    /// anticlockwise. Zero for charges created alone.
    pub rank: usize,
}

/// Total sector, charges in tensor order and the phase.
#[derive(Clone, Debug)]
pub struct WordValue {
    pub sector: usize,
    pub phase: Cyc,
    pub members: Vec<Member>,
}

impl WordValue {
    pub fn vacuum(amb: &Ambient) -> WordValue {
        WordValue { sector: 0, phase: amb.one(), members: Vec::new() }
    }

    pub fn tensor(&self) -> Vec<usize> {
        self.members.iter().map(|m| m.sector).collect()
    }

    /// Same vector: equal tensor factors and equal phase.
    pub fn same(&self, other: &WordValue) -> bool {
        self.sector == other.sector && self.tensor() == other.tensor() && self.phase == other.phase
    }
}

fn sectors(ms: &[Member]) -> Vec<usize> {
    ms.iter().map(|m| m.sector).collect()
}

/// Applies one generator to a state.
pub fn apply(amb: &Ambient, st: &mut WordValue, g: &Generator) -> Result<(), Error> {
    match g {
        Generator::L(lam, iv) => {
            let q = amb.insertion_phase(*lam, iv, &st.members);
            st.phase = &st.phase * &q;
            st.members.insert(0, Member { sector: *lam, interval: *iv, rank: 0 });
            st.sector = amb.add(*lam, st.sector);
        }
        Generator::R(lam, iv) => {
            apply(amb, st, &Generator::L(*lam, *iv))?;
            apply(amb, st, &Generator::ToBack)?;
        }
        Generator::ToBack => {
            if st.members.is_empty() {
                return Err(Error::Precondition(String::from("ToBack on the vacuum")));
            }
            let front = st.members.remove(0);
            let rest = sectors(&st.members);
            let k = amb.sum(&rest);
            st.phase = &(&st.phase * amb.r(front.sector, k)) * &amb.assoc(&rest, front.sector);
            st.members.push(front);
        }
        Generator::Swap { inverse } => {
            if st.members.len() < 2 {
                return Err(Error::Precondition(String::from("Swap needs two charges")));
            }
            let x = st.members[0].sector;
            let y = st.members[1].sector;
            let rest = amb.sum(&sectors(&st.members[2..]));
            let s = if *inverse { amb.braid_front_inv(y, x, rest) } else { amb.braid_front(x, y, rest) };
            st.phase = &st.phase * &s;
            st.members.swap(0, 1);
        }
        Generator::LAdj(lam, iv) => {
            if st.members.first().map(|m| m.sector) == Some(*lam) {
                st.members.remove(0);
                let q = amb.insertion_phase(*lam, iv, &st.members);
                st.phase = &st.phase * &q.conj();
                st.sector = amb.add(amb.neg(*lam), st.sector);
            } else {
                let nl = amb.neg(*lam);
                let q = amb.insertion_phase(nl, iv, &st.members);
                st.phase = &st.phase * &q.conj();
                st.members.insert(0, Member { sector: nl, interval: *iv, rank: 0 });
                st.sector = amb.add(nl, st.sector);
            }
        }
        Generator::Merged { parts, label, interval } => {
            let on_state = amb.stacked_phase(parts, interval, &st.members);
            let on_vacuum = amb.stacked_phase(parts, interval, &[]);
            st.phase = &(&(&st.phase * label) * &on_state) * &on_vacuum.inv()?;
            let mut ms: Vec<Member> = parts
                .iter()
                .enumerate()
                .map(|(i, &s)| Member { sector: s, interval: *interval, rank: parts.len() - i })
                .collect();
            ms.extend(st.members.drain(..));
            st.members = ms;
            st.sector = amb.add(amb.sum(parts), st.sector);
        }
    }
    Ok(())
}

/// Value of `w` on the vacuum.
pub fn eval_word(amb: &Ambient, w: &ExtWord) -> Result<WordValue, Error> {
    let mut st = WordValue::vacuum(amb);
    for g in w.gens.iter().rev() {
        apply(amb, &mut st, g)?;
    }
    Ok(st)
}

fn eval(amb: &Ambient, gens: &[Generator], probe: &ExtWord) -> Result<WordValue, Error> {
    eval_word(amb, &ExtWord::new(gens.to_vec()).then(probe))
}

fn require(cond: bool, what: &str) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(String::from(what)))
    }
}

/// Left and right charges on anticlockwise-ordered intervals commute, and
/// so do the adjoint of the left one and the right one.
pub fn check_locality(
    amb: &Ambient,
    lam: usize,
    iv: &ArgInterval,
    mu: usize,
    jv: &ArgInterval,
    probe: &ExtWord,
) -> Result<bool, Error> {
    require(iv.anticlockwise_to(jv)?, "first interval must be anticlockwise to the second")?;
    let l = Generator::L(lam, *iv);
    let r = Generator::R(mu, *jv);
    let a = eval(amb, &[l.clone(), r.clone()], probe)?;
    let b = eval(amb, &[r.clone(), l.clone()], probe)?;
    let base = ExtWord::new(vec![l]).then(probe);
    let ad = Generator::LAdj(lam, *iv);
    let c = eval(amb, &[ad.clone(), r.clone()], &base)?;
    let d = eval(amb, &[r, ad], &base)?;
    Ok(a.same(&b) && c.same(&d))
}

/// `v(L(λ,Ĩ) L(μ,J̃) p) / v(L(μ,J̃) L(λ,Ĩ) p)`.
pub fn exchange_phase(
    amb: &Ambient,
    lam: usize,
    iv: &ArgInterval,
    mu: usize,
    jv: &ArgInterval,
    probe: &ExtWord,
) -> Result<Cyc, Error> {
    let a = eval(amb, &[Generator::L(lam, *iv), Generator::L(mu, *jv)], probe)?;
    let b = eval(amb, &[Generator::L(mu, *jv), Generator::L(lam, *iv)], probe)?;
    Ok(&a.phase * &b.phase.inv()?)
}

/// Two left charges in a common interval, `Ĩ` anticlockwise to `J̃`,
/// exchange by the braiding `β(μ, λ, Σp)`.
pub fn check_braid_statistics(
    amb: &Ambient,
    lam: usize,
    iv: &ArgInterval,
    mu: usize,
    jv: &ArgInterval,
    probe: &ExtWord,
) -> Result<bool, Error> {
    require(iv.anticlockwise_to(jv)?, "first interval must be anticlockwise to the second")?;
    require(iv.hull(jv).is_some(), "intervals must lie in a common interval")?;
    let a = eval(amb, &[Generator::L(lam, *iv), Generator::L(mu, *jv)], probe)?;
    let mut b = eval(amb, &[Generator::L(mu, *jv), Generator::L(lam, *iv)], probe)?;
    apply(amb, &mut b, &Generator::Swap { inverse: false })?;
    Ok(a.same(&b))
}

/// `Ĩ` anticlockwise to `J̃`, both left ends in the same cell
/// `[k - 1/2, k + 1/2)` of the reference point.
pub fn mergeable(iv: &ArgInterval, jv: &ArgInterval) -> bool {
    iv.anticlockwise_to(jv).unwrap_or(false) && iv.principal().0 == jv.principal().0
}

/// Merged generator for `L(λ,Ĩ) L(μ,J̃)` at `Õ`.
pub fn merged(amb: &Ambient, lam: usize, iv: &ArgInterval, mu: usize, jv: &ArgInterval, o: &ArgInterval) -> Result<Generator, Error> {
    require(iv.contained_in(o) && jv.contained_in(o), "intervals must lie in the merge interval")?;
    require(mergeable(iv, jv), "first interval must be anticlockwise to the second within one cell")?;
    let v = eval_word(amb, &ExtWord::new(vec![Generator::L(lam, *iv), Generator::L(mu, *jv)]))?;
    Ok(Generator::Merged { parts: vec![lam, mu], label: v.phase, interval: *o })
}

/// `L(λ,Ĩ) L(μ,J̃) p = L(L(λ,Ĩ)μ, Õ) p` when `Õ` avoids the probe charges.
pub fn check_fusion_merge(
    amb: &Ambient,
    lam: usize,
    iv: &ArgInterval,
    mu: usize,
    jv: &ArgInterval,
    o: &ArgInterval,
    probe: &ExtWord,
) -> Result<bool, Error> {
    let m = merged(amb, lam, iv, mu, jv, o)?;
    let p = eval_word(amb, probe)?;
    require(p.members.iter().all(|x| x.interval.disjoint(o)), "merge interval must avoid probe charges")?;
    let a = eval(amb, &[Generator::L(lam, *iv), Generator::L(mu, *jv)], probe)?;
    let b = eval(amb, &[m], probe)?;
    Ok(a.same(&b))
}

/// Right action of a composite: the `L`-word `L(a_m,Ĩ_m)⋯L(a_1,Ĩ_1)`
/// braided past the probe equals `R(a_1,Ĩ_1)⋯R(a_m,Ĩ_m)`.
pub fn check_r_order_reversal(
    amb: &Ambient,
    secs: &[usize],
    ivs: &[ArgInterval],
    probe: &ExtWord,
) -> Result<bool, Error> {
    require(secs.len() == ivs.len() && !secs.is_empty(), "one interval per sector")?;
    for k in 1..ivs.len() {
        require(ivs[k].anticlockwise_to(&ivs[k - 1])?, "each interval must be anticlockwise to its predecessor")?;
    }
    let mut hull = ivs[0];
    for iv in &ivs[1..] {
        hull = hull.hull(iv).ok_or_else(|| Error::Precondition(String::from("intervals must lie in a common interval")))?;
    }
    let lword: Vec<Generator> = (0..secs.len()).rev().map(|k| Generator::L(secs[k], ivs[k])).collect();
    let mut lhs = eval(amb, &lword, probe)?;
    let m = secs.len();
    let parts: Vec<usize> = sectors(&lhs.members[..m]);
    let rest: Vec<usize> = sectors(&lhs.members[m..]);
    let (sp, sk) = (amb.sum(&parts), amb.sum(&rest));
    let s = &(&amb.assoc_inv(&parts, sk) * amb.r(sp, sk)) * &amb.assoc(&rest, sp);
    lhs.phase = &lhs.phase * &s;
    lhs.members.rotate_left(m);
    let rword: Vec<Generator> = (0..secs.len()).map(|k| Generator::R(secs[k], ivs[k])).collect();
    let rhs = eval(amb, &rword, probe)?;
    Ok(lhs.same(&rhs))
}

/// Outcome of replaying both hexagons on three charges.
#[derive(Clone, Debug)]
pub struct HexagonReplay {
    /// Word values agree with each single-step route.
    pub words_consistent: bool,
    /// The two routes give the same phase, per hexagon.
    pub routes_agree: [bool; 2],
    pub route_phases: [[Cyc; 2]; 2],
    /// Status reported by the fusion validator on the same triple.
    pub validator: bool,
}

impl HexagonReplay {
    pub fn holds(&self) -> bool {
        self.words_consistent && self.routes_agree[0] && self.routes_agree[1]
    }

    pub fn agrees_with_validator(&self) -> bool {
        self.holds() == self.validator
    }
}

/// Braids the block `i ⊗ j` past `k`, once with `k` anticlockwise of both
/// and once clockwise, in one step and in two.
pub fn derive_hexagon(amb: &Ambient, i: usize, j: usize, k: usize) -> Result<HexagonReplay, Error> {
    let iv = ArgInterval::new(turns(1, 20), turns(2, 20))?;
    let jv = ArgInterval::new(turns(3, 20), turns(4, 20))?;
    let k_acw = ArgInterval::new(turns(5, 20), turns(6, 20))?;
    let k_cw = ArgInterval::new(turns(-1, 20), turns(0, 1))?;
    let empty = ExtWord::empty();
    let (li, lj) = (Generator::L(i, iv), Generator::L(j, jv));
    let ij = amb.add(i, j);
    let mut consistent = true;
    let mut routes = Vec::new();
    let mut agree = [false; 2];
    for (h, kv) in [k_acw, k_cw].iter().enumerate() {
        let lk = Generator::L(k, *kv);
        let x = eval(amb, &[li.clone(), lj.clone(), lk.clone()], &empty)?;
        let y = eval(amb, &[lk.clone(), li.clone(), lj.clone()], &empty)?;
        let z = eval(amb, &[li.clone(), lk.clone(), lj.clone()], &empty)?;
        let (two_step, one_step, first, second) = if h == 0 {
            let s1 = amb.braid_front(i, k, j);
            let s2 = amb.r(j, k).clone();
            let one = amb.f_inv(i, j, k) * amb.r(ij, k);
            (&s1 * &s2, one, s1, s2)
        } else {
            let s1 = amb.braid_front(k, i, j).inv()?;
            let s2 = amb.r_inv(k, j).clone();
            let one = amb.f_inv(i, j, k) * amb.r_inv(k, ij);
            (&s1 * &s2, one, s1, s2)
        };
        consistent &= y.phase == &first * &z.phase;
        consistent &= z.phase == &second * &x.phase;
        consistent &= y.phase == &one_step * &x.phase;
        agree[h] = two_step == one_step;
        routes.push([two_step, one_step]);
    }
    let validator = fusion::hexagon_holds_for(&amb.data, i, j, k)?;
    Ok(HexagonReplay {
        words_consistent: consistent,
        routes_agree: agree,
        route_phases: [routes[0].clone(), routes[1].clone()],
        validator,
    })
}

/// `L(λ, Ĩ)Ω = R(λ, Ĩ)Ω`.
pub fn check_neutrality(amb: &Ambient, lam: usize, iv: &ArgInterval) -> Result<bool, Error> {
    let a = eval_word(amb, &ExtWord::new(vec![Generator::L(lam, *iv)]))?;
    let b = eval_word(amb, &ExtWord::new(vec![Generator::R(lam, *iv)]))?;
    Ok(a.same(&b))
}

/// Enlarging generator `idx` to `bigger` leaves the value unchanged.
/// `bigger` must contain the old interval, avoid every other charge and
/// keep its left end in the same cell `[k - 1/2, k + 1/2)`.
pub fn check_isotony(amb: &Ambient, w: &ExtWord, idx: usize, bigger: &ArgInterval) -> Result<bool, Error> {
    let g = w.gens.get(idx).ok_or_else(|| Error::Precondition(String::from("no such generator")))?;
    let old = g.interval().ok_or_else(|| Error::Precondition(String::from("generator has no interval")))?;
    require(old.contained_in(bigger), "enlargement must contain the interval")?;
    require(old.principal().0 == bigger.principal().0, "enlargement must stay in one cell")?;
    for (k, h) in w.gens.iter().enumerate() {
        if let (true, Some(iv)) = (k != idx, h.interval()) {
            require(iv.disjoint(bigger), "enlargement must avoid other charges")?;
        }
    }
    let mut w2 = w.clone();
    w2.gens[idx] = g.with_interval(*bigger);
    Ok(eval_word(amb, w)?.same(&eval_word(amb, &w2)?))
}

/// Phase picked up by rotating every interval by `k` full turns.
pub fn full_turn_phase(amb: &Ambient, w: &ExtWord, k: i64) -> Result<Cyc, Error> {
    let a = eval_word(amb, w)?;
    let b = eval_word(amb, &w.rotate(Turns::from_integer(k)))?;
    require(a.tensor() == b.tensor(), "rotation changed the tensor order")?;
    Ok(&b.phase * &a.phase.inv()?)
}

/// Predicted full-turn phase `(θ(Σλ) / Π θ(λ))^k` for a word of `L`/`R`.
pub fn predicted_full_turn_phase(amb: &Ambient, w: &ExtWord, k: i64) -> Result<Cyc, Error> {
    let mut total = 0;
    let mut prod = amb.one();
    for g in &w.gens {
        match g {
            Generator::L(s, _) | Generator::R(s, _) => {
                total = amb.add(total, *s);
                prod = &prod * amb.theta(*s);
            }
            _ => return Err(Error::Precondition(String::from("only L and R generators"))),
        }
    }
    (amb.theta(total) * &prod.inv()?).pow(k)
}

/// A rewrite allowed by the exchange, braiding and merge identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rewrite {
    /// `L L → Swap · L L` with the two charges exchanged.
    Exchange(usize),
    /// `R → ToBack · L`.
    RightToLeft(usize),
    /// `L L → L(merged)`.
    Merge(usize),
}

/// All rewrites applicable to `w`.
pub fn rewrite_sites(w: &ExtWord) -> Vec<Rewrite> {
    let mut out = Vec::new();
    for (p, g) in w.gens.iter().enumerate() {
        if let Generator::R(..) = g {
            out.push(Rewrite::RightToLeft(p));
        }
        if let (Generator::L(_, iv), Some(Generator::L(_, jv))) = (g, w.gens.get(p + 1)) {
            if iv.disjoint(jv) {
                if let Some(o) = iv.hull(jv) {
                    out.push(Rewrite::Exchange(p));
                    let clear = mergeable(iv, jv)
                        && w.gens.iter().enumerate().all(|(k, h)| {
                        k == p || k == p + 1 || h.interval().map_or(true, |x| x.disjoint(&o))
                    });
                    if clear {
                        out.push(Rewrite::Merge(p));
                    }
                }
            }
        }
    }
    out
}

/// Applies one rewrite; the result has the same value as `w`.
pub fn apply_rewrite(amb: &Ambient, w: &ExtWord, rw: &Rewrite) -> Result<ExtWord, Error> {
    let mut gens = w.gens.clone();
    match *rw {
        Rewrite::RightToLeft(p) => match gens[p].clone() {
            Generator::R(s, iv) => {
                gens.splice(p..=p, [Generator::ToBack, Generator::L(s, iv)]);
            }
            _ => return Err(Error::Precondition(String::from("not a right generator"))),
        },
        Rewrite::Exchange(p) => match (gens[p].clone(), gens.get(p + 1).cloned()) {
            (Generator::L(l, iv), Some(Generator::L(m, jv))) => {
                let inverse = !iv.anticlockwise_to(&jv)?;
                gens.splice(p..=p + 1, [Generator::Swap { inverse }, Generator::L(m, jv), Generator::L(l, iv)]);
            }
            _ => return Err(Error::Precondition(String::from("not two left generators"))),
        },
        Rewrite::Merge(p) => match (gens[p].clone(), gens.get(p + 1).cloned()) {
            (Generator::L(l, iv), Some(Generator::L(m, jv))) => {
                let o = iv.hull(&jv).ok_or_else(|| Error::Precondition(String::from("no common interval")))?;
                let g = merged(amb, l, &iv, m, &jv, &o)?;
                gens.splice(p..=p + 1, [g]);
            }
            _ => return Err(Error::Precondition(String::from("not two left generators"))),
        },
    }
    Ok(ExtWord::new(gens))
}

/// Applies rewrites chosen by `pick(number_of_sites)` until none remain or
/// `steps` is reached, checking the value after every step.
pub fn check_confluence(
    amb: &Ambient,
    w: &ExtWord,
    steps: usize,
    pick: &mut dyn FnMut(usize) -> usize,
) -> Result<(bool, usize), Error> {
    let target = eval_word(amb, w)?;
    let mut cur = w.clone();
    let mut done = 0;
    for _ in 0..steps {
        let sites = rewrite_sites(&cur);
        if sites.is_empty() {
            break;
        }
        let rw = &sites[pick(sites.len()) % sites.len()];
        cur = apply_rewrite(amb, &cur, rw)?;
        done += 1;
        if !eval_word(amb, &cur)?.same(&target) {
            return Ok((false, done));
        }
    }
    Ok((true, done))
}

/// Subgroup generated by `gens` with a path-independence report: every
/// recorded factorization evaluates the same as its two-block merged form.
pub fn closure_from_generators(amb: &Ambient, gens: &[usize]) -> Result<(BTreeSet<usize>, Report), Error> {
    let mut reach = BTreeSet::new();
    reach.insert(0usize);
    let mut paths: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new())];
    let mut frontier = vec![(0usize, Vec::new())];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (s, path) in frontier {
            for &g in gens {
                let t = amb.add(s, g);
                if reach.insert(t) {
                    let mut p: Vec<usize> = path.clone();
                    p.push(g);
                    paths.push((t, p.clone()));
                    next.push((t, p));
                }
            }
        }
        frontier = next;
    }
    for &g in gens {
        let mut cyc = vec![g];
        while amb.sum(&cyc) != 0 {
            cyc.push(g);
        }
        paths.push((0, cyc));
    }
    let mut rep = Report::new("closure");
    for (s, path) in &paths {
        if path.len() < 2 {
            continue;
        }
        let m = path.len();
        let ivs: Vec<ArgInterval> = (0..m)
            .map(|k| ArgInterval::new(turns(2 * k as i64 + 1, 4 * m as i64 + 4), turns(2 * k as i64 + 2, 4 * m as i64 + 4)))
            .collect::<Result<_, _>>()?;
        let word: Vec<Generator> = (0..m).map(|k| Generator::L(path[k], ivs[k])).collect();
        let plain = eval_word(amb, &ExtWord::new(word.clone()))?;
        let h = m / 2;
        let mut blocks = Vec::new();
        for (lo, hi) in [(0, h), (h, m)] {
            let sub = ExtWord::new(word[lo..hi].to_vec());
            let v = eval_word(amb, &sub)?;
            let o = ArgInterval::new(ivs[lo].a(), ivs[hi - 1].b())?;
            blocks.push(Generator::Merged { parts: path[lo..hi].to_vec(), label: v.phase, interval: o });
        }
        let grouped = eval_word(amb, &ExtWord::new(blocks))?;
        let ok = plain.same(&grouped) && plain.sector == *s;
        rep.record(ok, || fusion::Failure {
            check: String::from("factorization"),
            coords: path.clone(),
            detail: format!("sector {} via {:?}", amb.group().label(*s), path),
            lhs: Some(plain.phase.clone()),
            rhs: Some(grouped.phase.clone()),
        });
    }
    Ok((reach, rep))
}

fn at(a: i64, b: i64, q: i64) -> ArgInterval {
    ArgInterval::from_ratio(a, b, q).expect("fixed interval")
}

fn outcome(r: Result<bool, Error>) -> (bool, String) {
    match r {
        Ok(ok) => (ok, String::new()),
        Err(e) => (false, format!("{}", e)),
    }
}

/// Probe words the axiom suite runs against.
pub fn standard_probes(n: usize) -> Vec<ExtWord> {
    let one = 1 % n;
    let last = (n - 1) % n;
    vec![
        ExtWord::empty(),
        ExtWord::new(vec![Generator::L(one, at(-3, -2, 10))]),
        ExtWord::new(vec![Generator::L(one, at(6, 7, 10)), Generator::R(last, at(-4, -3, 10))]),
        ExtWord::new(vec![Generator::L(one, at(11, 12, 20)), Generator::L(last, at(17, 18, 10))]),
    ]
}

/// Interval pairs `(Ĩ, J̃)` with `Ĩ` anticlockwise to `J̃`, all clear of
/// the standard probes.
pub fn standard_pairs() -> Vec<(ArgInterval, ArgInterval)> {
    vec![
        (at(1, 2, 10), at(0, 1, 20)),
        (at(3, 4, 10), at(1, 2, 10)),
        (at(9, 10, 20), at(7, 8, 20)),
        (at(11, 12, 10), at(21, 22, 20)),
    ]
}

/// Neutrality, isotony, locality with its adjoint form, braid statistics,
/// fusion merge, R-order reversal for up to three charges and the hexagon
/// replay, exhaustively over sectors on fixed configurations.
pub fn axiom_suite(amb: &Ambient) -> Result<Report, Error> {
    let mut rep = Report::new("catext");
    let n = amb.order();
    let probes = standard_probes(n);
    let pairs = standard_pairs();
    let triples = [
        [at(0, 1, 20), at(2, 3, 20), at(4, 5, 20)],
        [at(1, 2, 10), at(3, 4, 10), at(9, 10, 20)],
        [at(10, 11, 10), at(23, 24, 20), at(25, 26, 20)],
    ];
    let push = |rep: &mut Report, check: &str, coords: Vec<usize>, r: Result<bool, Error>, what: &dyn Fn() -> String| {
        let (ok, err) = outcome(r);
        rep.record(ok, || fusion::Failure {
            check: String::from(check),
            coords,
            detail: if err.is_empty() { what() } else { format!("{}: {}", what(), err) },
            lhs: None,
            rhs: None,
        });
    };
    for l in 0..n {
        for (k, iv) in [at(1, 3, 10), at(-2, -1, 10), at(7, 9, 10)].iter().enumerate() {
            push(&mut rep, "neutrality", vec![l, k], check_neutrality(amb, l, iv), &|| format!("{} on {}", l, iv));
        }
        for (pi, p) in probes.iter().enumerate() {
            for (k, (small, big)) in [(at(1, 2, 10), at(1, 5, 20)), (at(7, 8, 20), at(13, 17, 40))].iter().enumerate() {
                for (gi, g) in [Generator::L(l, *small), Generator::R(l, *small)].into_iter().enumerate() {
                    let w = ExtWord::new(vec![g]).then(p);
                    push(&mut rep, "isotony", vec![l, pi, k, gi], check_isotony(amb, &w, 0, big), &|| {
                        format!("{:?} grown to {}", w.gens, big)
                    });
                }
            }
        }
        for m in 0..n {
            for (pi, p) in probes.iter().enumerate() {
                for (ci, (i, j)) in pairs.iter().enumerate() {
                    let c = vec![l, m, pi, ci];
                    let what = || format!("{} on {} / {} on {}, probe {:?}", l, i, m, j, p.gens);
                    push(&mut rep, "locality", c.clone(), check_locality(amb, l, i, m, j, p), &what);
                    push(&mut rep, "braid-statistics", c.clone(), check_braid_statistics(amb, l, i, m, j, p), &what);
                    let o = j.hull(i).ok_or_else(|| Error::Internal(String::from("no hull")))?;
                    push(&mut rep, "fusion-merge", c.clone(), check_fusion_merge(amb, l, i, m, j, &o, p), &what);
                    push(&mut rep, "r-order-reversal", c, check_r_order_reversal(amb, &[m, l], &[*j, *i], p), &what);
                }
            }
            for k in 0..n {
                let h = derive_hexagon(amb, l, m, k)?;
                rep.record(h.holds() && h.agrees_with_validator(), || fusion::Failure {
                    check: String::from("hexagon-replay"),
                    coords: vec![l, m, k],
                    detail: format!("{:?}", h),
                    lhs: None,
                    rhs: None,
                });
                for (ti, t) in triples.iter().enumerate() {
                    let p = &probes[ti % probes.len()];
                    push(&mut rep, "r-order-reversal", vec![l, m, k, ti], check_r_order_reversal(amb, &[l, m, k], t, p), &|| {
                        format!("{}, {}, {} on {:?}", l, m, k, t)
                    });
                }
            }
        }
        push(&mut rep, "r-order-reversal", vec![l], check_r_order_reversal(amb, &[l], &[at(1, 2, 10)], &probes[2]), &|| {
            format!("{} alone", l)
        });
    }
    Ok(rep)
}

/// A random word of `L`/`R` generators on disjoint slots of width `1/24`,
/// some lifted by a full turn. `pick(k)` returns a value in `0..k`.
pub fn random_word(n: usize, max_len: usize, pick: &mut dyn FnMut(usize) -> usize) -> Result<ExtWord, Error> {
    let len = 1 + pick(max_len.clamp(1, 24));
    let mut slots: Vec<i64> = (0..24).collect();
    let mut gens = Vec::new();
    for _ in 0..len {
        let k = slots.remove(pick(slots.len()));
        let lift = if pick(5) == 0 { pick(3) as i64 - 1 } else { 0 };
        let iv = ArgInterval::from_ratio(k + 24 * lift - 12, k + 24 * lift - 11, 24)?;
        let s = pick(n);
        gens.push(if pick(2) == 0 { Generator::L(s, iv) } else { Generator::R(s, iv) });
    }
    Ok(ExtWord::new(gens))
}

/// Random words: every rewrite order agrees with direct evaluation, a
/// full turn multiplies by the predicted phase, and enlarging the first
/// generator inside its cell changes nothing.
pub fn random_suite(amb: &Ambient, max_len: usize, trials: usize, pick: &mut dyn FnMut(usize) -> usize) -> Result<Report, Error> {
    let mut rep = Report::new("catext-random");
    for trial in 0..trials {
        let w = random_word(amb.order(), max_len, pick)?;
        let (ok, steps) = check_confluence(amb, &w, 12, pick)?;
        rep.record(ok, || fusion::Failure {
            check: String::from("confluence"),
            coords: vec![trial],
            detail: format!("{:?} after {} rewrites", w.gens, steps),
            lhs: None,
            rhs: None,
        });
        let k = pick(3) as i64 - 1;
        let got = full_turn_phase(amb, &w, k)?;
        let want = predicted_full_turn_phase(amb, &w, k)?;
        rep.record(got == want, || fusion::Failure {
            check: String::from("rotation"),
            coords: vec![trial],
            detail: format!("{:?} turned {} times", w.gens, k),
            lhs: Some(want.clone()),
            rhs: Some(got.clone()),
        });
        let iv = *w.gens[0].interval().ok_or_else(|| Error::Internal(String::from("interval")))?;
        let big = ArgInterval::new(iv.a() - turns(1, 48), iv.b() + turns(1, 48))?;
        match check_isotony(amb, &w, 0, &big) {
            Ok(ok) => rep.record(ok, || fusion::Failure {
                check: String::from("isotony"),
                coords: vec![trial],
                detail: format!("{:?} grown to {}", w.gens, big),
                lhs: None,
                rhs: None,
            }),
            Err(Error::Precondition(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(rep)
}
