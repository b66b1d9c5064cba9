//! Arg-valued intervals on the circle and homotopy classes of two-point paths.
//!
//! Angles are rational numbers of full turns. The point with turn-angle `θ`
//! is `exp(2πiθ)`; an [`ArgInterval`] `(a, b)` carries the continuous argument
//! `θ ↦ 2πθ` on `(a, b)`, so `(a, b)` and `(a + 1, b + 1)` are different
//! arg-valued intervals over the same circle interval.

use core::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::Error;

/// Rational number of turns.
pub type Turns = Ratio<i64>;

/// Shorthand for the rational `p/q`.
pub fn turns(p: i64, q: i64) -> Turns {
    Turns::new(p, q)
}

fn floor(x: Turns) -> i64 {
    x.numer().div_floor(x.denom())
}

fn is_integer(x: Turns) -> bool {
    x.is_integer()
}

/// Open arg-valued interval `(a, b)` with `0 < b - a < 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArgInterval {
    a: Turns,
    b: Turns,
}

impl ArgInterval {
    pub fn new(a: Turns, b: Turns) -> Result<ArgInterval, Error> {
        let len = b - a;
        if len <= Turns::zero() || len >= Turns::one() {
            return Err(Error::EmptyInterval);
        }
        Ok(ArgInterval { a, b })
    }

    /// Convenience constructor from `(pa/q, pb/q)`.
    pub fn from_ratio(pa: i64, pb: i64, q: i64) -> Result<ArgInterval, Error> {
        ArgInterval::new(turns(pa, q), turns(pb, q))
    }

    pub fn a(&self) -> Turns {
        self.a
    }

    pub fn b(&self) -> Turns {
        self.b
    }

    pub fn len(&self) -> Turns {
        self.b - self.a
    }

    pub fn midpoint(&self) -> Turns {
        (self.a + self.b) / Turns::from_integer(2)
    }

    /// `self ⊂ outer` as arg-valued intervals.
    pub fn contained_in(&self, outer: &ArgInterval) -> bool {
        outer.a <= self.a && self.b <= outer.b
    }

    /// Rotation by `t` turns.
    pub fn rotate(&self, t: Turns) -> ArgInterval {
        ArgInterval { a: self.a + t, b: self.b + t }
    }

    /// Whether the underlying circle intervals are disjoint.
    pub fn disjoint(&self, other: &ArgInterval) -> bool {
        self.winding(other).is_some()
    }

    /// For disjoint circle intervals, the unique `k` with `self`
    /// anticlockwise to `other` rotated by `k` turns.
    pub fn winding(&self, other: &ArgInterval) -> Option<i64> {
        let k = floor(self.a - other.b);
        let shifted = other.rotate(Turns::from_integer(k));
        if shifted.b <= self.a && self.b <= shifted.a + Turns::one() {
            Some(k)
        } else {
            None
        }
    }

    /// Whether the arg-valued intervals overlap as real intervals.
    pub fn overlaps_lift(&self, other: &ArgInterval) -> bool {
        self.a < other.b && other.a < self.b
    }

    /// `self` anticlockwise to `other`: `arg_J(ζ) < arg_I(z) < arg_J(ζ) + 2π`.
    pub fn anticlockwise_to(&self, other: &ArgInterval) -> Result<bool, Error> {
        let k = self.winding(other).ok_or(Error::OverlappingIntervals)?;
        Ok(k == 0)
    }

    /// The lift with `a ∈ [-1/2, 1/2)` and the number of whole turns removed.
    pub fn principal(&self) -> (i64, ArgInterval) {
        let n = floor(self.a + turns(1, 2));
        (n, self.rotate(Turns::from_integer(-n)))
    }

    /// Display form with `a ∈ [0, 1)`.
    pub fn normalized(&self) -> ArgInterval {
        let n = floor(self.a);
        self.rotate(Turns::from_integer(-n))
    }

    /// Smallest arg-valued interval containing both, when it is non-dense.
    pub fn hull(&self, other: &ArgInterval) -> Option<ArgInterval> {
        let a = if self.a < other.a { self.a } else { other.a };
        let b = if self.b > other.b { self.b } else { other.b };
        ArgInterval::new(a, b).ok()
    }
}

impl fmt::Debug for ArgInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

impl fmt::Display for ArgInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// `contains(inner, outer)`: `inner ⊂ outer` with matching arg functions.
pub fn contains(inner: &ArgInterval, outer: &ArgInterval) -> bool {
    inner.contained_in(outer)
}

/// `anticlockwise_to(i, j)`; overlapping circle intervals are rejected.
pub fn anticlockwise_to(i: &ArgInterval, j: &ArgInterval) -> Result<bool, Error> {
    i.anticlockwise_to(j)
}

/// `rotate(i, t)`.
pub fn rotate(i: &ArgInterval, t: Turns) -> ArgInterval {
    i.rotate(t)
}

/// Homotopy class of a path in the two-point configuration space of the
/// circle, recorded by the turn-lifts of both points at each end.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathClass {
    start: (Turns, Turns),
    end: (Turns, Turns),
}

fn distinct(p: (Turns, Turns)) -> bool {
    !is_integer(p.0 - p.1)
}

impl PathClass {
    pub fn new(start: (Turns, Turns), end: (Turns, Turns)) -> Result<PathClass, Error> {
        if !distinct(start) || !distinct(end) {
            return Err(Error::Collision);
        }
        Ok(PathClass { start, end })
    }

    /// The constant path at a configuration.
    pub fn identity(at: (Turns, Turns)) -> Result<PathClass, Error> {
        PathClass::new(at, at)
    }

    pub fn start(&self) -> (Turns, Turns) {
        self.start
    }

    pub fn end(&self) -> (Turns, Turns) {
        self.end
    }

    /// Lift displacement of each point.
    pub fn displacement(&self) -> (Turns, Turns) {
        (self.end.0 - self.start.0, self.end.1 - self.start.1)
    }

    /// Concatenation `p` then `q`.
    pub fn compose(&self, q: &PathClass) -> Result<PathClass, Error> {
        if self.end != q.start {
            return Err(Error::PathMismatch);
        }
        Ok(PathClass { start: self.start, end: q.end })
    }

    /// Swaps the roles of the two points.
    pub fn swapped(&self) -> PathClass {
        PathClass {
            start: (self.start.1, self.start.0),
            end: (self.end.1, self.end.0),
        }
    }
}

impl fmt::Debug for PathClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[({}, {}) -> ({}, {})]",
            self.start.0, self.start.1, self.end.0, self.end.1
        )
    }
}

/// Half-turn clockwise motion of the first point, the second fixed.
pub fn braid_path(zi: Turns, zj: Turns) -> Result<PathClass, Error> {
    PathClass::new((zi, zj), (zi - turns(1, 2), zj))
}

/// `compose(p, q)`.
pub fn compose(p: &PathClass, q: &PathClass) -> Result<PathClass, Error> {
    p.compose(q)
}
