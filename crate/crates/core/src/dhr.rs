//! Localized endomorphisms of a pointed model and their statistics.
//!
//! Transport unitaries act by phases, so the statistics operator of two
//! endomorphisms is read off word values: with `v₁₂ = v(L(λ₁,Ĩ₁) L(λ₂,Ĩ₂))`
//! the braiding seen at a configuration is `R(λ₁,λ₂) · v₁₂ / v₂₁`, which is
//! `1` when `Ĩ₂` is anticlockwise to `Ĩ₁`.

use alloc::format;
use alloc::string::String;
use alloc::vec;

use crate::catext::{eval_word, Ambient, ExtWord, Generator};
use crate::circle::{turns, ArgInterval};
use crate::error::Error;
use crate::fusion::{Failure, Report};
use crate::scalar::Cyc;

/// The reference interval `(0, 1/2)`.
pub fn reference_interval() -> ArgInterval {
    ArgInterval::new(turns(0, 1), turns(1, 2)).expect("upper half circle")
}

/// An endomorphism of sector `sector` localized in `loc ⊂ Ĩ₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DhrEndo {
    pub sector: usize,
    pub loc: ArgInterval,
    pub reference: ArgInterval,
}

impl DhrEndo {
    pub fn new(sector: usize, loc: ArgInterval) -> Result<DhrEndo, Error> {
        DhrEndo::with_reference(sector, loc, reference_interval())
    }

    pub fn with_reference(sector: usize, loc: ArgInterval, reference: ArgInterval) -> Result<DhrEndo, Error> {
        if !loc.contained_in(&reference) {
            return Err(Error::Precondition(format!("{} is not inside {}", loc, reference)));
        }
        Ok(DhrEndo { sector, loc, reference })
    }

    /// Identity endomorphism localized everywhere in the reference.
    pub fn identity() -> DhrEndo {
        let r = reference_interval();
        DhrEndo { sector: 0, loc: r, reference: r }
    }
}

/// `ρ₁ ⊠ ρ₂ = ρ₂ ∘ ρ₁`, localized in the hull of both localizations.
pub fn compose(amb: &Ambient, a: &DhrEndo, b: &DhrEndo) -> Result<DhrEndo, Error> {
    if a.reference != b.reference {
        return Err(Error::Precondition(String::from("different reference intervals")));
    }
    let loc = a.loc.hull(&b.loc).ok_or_else(|| Error::Internal(String::from("no hull inside the reference")))?;
    DhrEndo::with_reference(amb.add(a.sector, b.sector), loc, a.reference)
}

fn pair_value(amb: &Ambient, l1: usize, i1: &ArgInterval, l2: usize, i2: &ArgInterval) -> Result<Cyc, Error> {
    Ok(eval_word(amb, &ExtWord::new(vec![Generator::L(l1, *i1), Generator::L(l2, *i2)]))?.phase)
}

/// `R(λ₁,λ₂) · v₁₂ / v₂₁` at the given localizations.
pub fn braiding_image(amb: &Ambient, l1: usize, i1: &ArgInterval, l2: usize, i2: &ArgInterval) -> Result<Cyc, Error> {
    let v12 = pair_value(amb, l1, i1, l2, i2)?;
    let v21 = pair_value(amb, l2, i2, l1, i1)?;
    Ok(&(amb.r(l1, l2) * &v12) * &v21.inv()?)
}

/// Disjoint `Ĩ₁, Ĩ₂ ⊂ Ĩ₀` with `Ĩ₂` anticlockwise to `Ĩ₁`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Transport {
    pub first: ArgInterval,
    pub second: ArgInterval,
}

impl Transport {
    pub fn new(first: ArgInterval, second: ArgInterval, reference: &ArgInterval) -> Result<Transport, Error> {
        if !first.contained_in(reference) || !second.contained_in(reference) {
            return Err(Error::Precondition(String::from("transported intervals must lie in the reference")));
        }
        if !second.anticlockwise_to(&first)? {
            return Err(Error::Precondition(String::from("second interval must be anticlockwise to the first")));
        }
        Ok(Transport { first, second })
    }

    /// `(0.05, 0.2)` and `(0.3, 0.45)` inside the upper half circle.
    pub fn standard() -> Transport {
        Transport {
            first: ArgInterval::new(turns(1, 20), turns(4, 20)).expect("interval"),
            second: ArgInterval::new(turns(6, 20), turns(9, 20)).expect("interval"),
        }
    }
}

/// `ε(ρ₁, ρ₂) = T₁₂ · ε' / T₂₁` where `ε'` is the value at the transported
/// configuration and `T` are the transport phases.
pub fn statistics_operator_via(amb: &Ambient, r1: &DhrEndo, r2: &DhrEndo, tr: &Transport) -> Result<Cyc, Error> {
    let (l1, l2) = (r1.sector, r2.sector);
    let v12 = pair_value(amb, l1, &r1.loc, l2, &r2.loc)?;
    let v21 = pair_value(amb, l2, &r2.loc, l1, &r1.loc)?;
    let w12 = pair_value(amb, l1, &tr.first, l2, &tr.second)?;
    let w21 = pair_value(amb, l2, &tr.second, l1, &tr.first)?;
    let eps_t = braiding_image(amb, l1, &tr.first, l2, &tr.second)?;
    let t12 = &v12 * &w12.inv()?;
    let t21 = &v21 * &w21.inv()?;
    Ok(&(&t12 * &eps_t) * &t21.inv()?)
}

pub fn statistics_operator(amb: &Ambient, r1: &DhrEndo, r2: &DhrEndo) -> Result<Cyc, Error> {
    if r1.reference != r2.reference {
        return Err(Error::Precondition(String::from("different reference intervals")));
    }
    statistics_operator_via(amb, r1, r2, &Transport::standard())
}

/// `ε(ρ₂, ρ₁) ε(ρ₁, ρ₂)`.
pub fn monodromy(amb: &Ambient, r1: &DhrEndo, r2: &DhrEndo) -> Result<Cyc, Error> {
    Ok(&statistics_operator(amb, r2, r1)? * &statistics_operator(amb, r1, r2)?)
}

/// For every sector pair: the braiding of the fusion data equals the
/// statistics operator of endomorphisms localized in the reference, the
/// value at the transported configuration is `1`, and at a few other
/// localizations the statistics operator equals the braiding image.
pub fn check_g_functor(amb: &Ambient) -> Result<Report, Error> {
    let mut rep = Report::new("dhr");
    let i0 = reference_interval();
    let tr = Transport::standard();
    let configs = [
        (i0, i0),
        (tr.first, tr.second),
        (tr.second, tr.first),
        (ArgInterval::new(turns(1, 10), turns(3, 10))?, ArgInterval::new(turns(2, 10), turns(4, 10))?),
    ];
    for l1 in 0..amb.order() {
        for l2 in 0..amb.order() {
            let a = DhrEndo::new(l1, i0)?;
            let b = DhrEndo::new(l2, i0)?;
            let eps = statistics_operator(amb, &a, &b)?;
            let want = amb.r(l1, l2).clone();
            rep.record(eps == want, || Failure {
                check: String::from("braiding"),
                coords: vec![l1, l2],
                detail: format!("G(B) vs statistics at ({}, {})", amb.group().label(l1), amb.group().label(l2)),
                lhs: Some(want.clone()),
                rhs: Some(eps.clone()),
            });
            let flat = braiding_image(amb, l1, &tr.first, l2, &tr.second)?;
            rep.record(flat.is_one(), || Failure {
                check: String::from("localized"),
                coords: vec![l1, l2],
                detail: String::from("statistics at anticlockwise localization"),
                lhs: Some(flat.clone()),
                rhs: None,
            });
            for (k, (c1, c2)) in configs.iter().enumerate() {
                let a = DhrEndo::new(l1, *c1)?;
                let b = DhrEndo::new(l2, *c2)?;
                let eps = statistics_operator(amb, &a, &b)?;
                let img = braiding_image(amb, l1, c1, l2, c2)?;
                rep.record(eps == img, || Failure {
                    check: String::from("configuration"),
                    coords: vec![l1, l2, k],
                    detail: format!("localization {} / {}", c1, c2),
                    lhs: Some(img.clone()),
                    rhs: Some(eps.clone()),
                });
            }
        }
    }
    Ok(rep)
}

/// The statistics operator does not depend on the transport: for every
/// sector pair and a few localizations, each transport in `choices` gives
/// the value of the standard one.
pub fn check_transport_independence(amb: &Ambient, choices: &[Transport]) -> Result<Report, Error> {
    let mut rep = Report::new("dhr-transport");
    let i0 = reference_interval();
    let locs = [
        (i0, i0),
        (ArgInterval::new(turns(1, 10), turns(2, 10))?, ArgInterval::new(turns(3, 10), turns(4, 10))?),
        (ArgInterval::new(turns(3, 10), turns(4, 10))?, ArgInterval::new(turns(1, 10), turns(2, 10))?),
    ];
    for l1 in 0..amb.order() {
        for l2 in 0..amb.order() {
            for (k, (c1, c2)) in locs.iter().enumerate() {
                let a = DhrEndo::new(l1, *c1)?;
                let b = DhrEndo::new(l2, *c2)?;
                let want = statistics_operator(amb, &a, &b)?;
                for (t, tr) in choices.iter().enumerate() {
                    let got = statistics_operator_via(amb, &a, &b, tr)?;
                    rep.record(got == want, || Failure {
                        check: String::from("transport"),
                        coords: vec![l1, l2, k, t],
                        detail: format!("transport {} / {}", tr.first, tr.second),
                        lhs: Some(want.clone()),
                        rhs: Some(got.clone()),
                    });
                }
            }
        }
    }
    Ok(rep)
}

/// Disjoint transport intervals inside the reference, `second`
/// anticlockwise to `first`, on a grid of `1/den`. `pick(k)` returns a
/// value in `0..k`.
pub fn random_transport(den: i64, pick: &mut dyn FnMut(usize) -> usize) -> Result<Transport, Error> {
    let half = den / 2;
    if half < 4 {
        return Err(Error::BadParameter(format!("grid 1/{} too coarse", den)));
    }
    let mut cuts: alloc::vec::Vec<i64> = alloc::vec::Vec::new();
    while cuts.len() < 4 {
        let c = pick(half as usize + 1) as i64;
        if !cuts.contains(&c) {
            cuts.push(c);
        }
    }
    cuts.sort_unstable();
    let first = ArgInterval::new(turns(cuts[0], den), turns(cuts[1], den))?;
    let second = ArgInterval::new(turns(cuts[2], den), turns(cuts[3], den))?;
    Transport::new(first, second, &reference_interval())
}
