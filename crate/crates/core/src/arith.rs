//! Exact integer and rational primitives.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error, Result};

/// Remainder of `y` modulo `x`, taken in `{1, ..., x}` rather than
/// `{0, ..., x-1}`: multiples of `x` map to `x`.
pub fn rem_pos(x: i64, y: i64) -> Result<i64> {
    if x < 2 {
        return Err(invalid(format!("rem_pos modulus must be >= 2, got {x}")));
    }
    Ok(rem_pos_unchecked(x, y))
}

/// [`rem_pos`] without the modulus check, for hot loops that have already
/// validated `x >= 2`.
#[inline]
pub(crate) fn rem_pos_unchecked(x: i64, y: i64) -> i64 {
    let r = y.rem_euclid(x);
    if r == 0 {
        x
    } else {
        r
    }
}

/// gcd of the absolute values; 0 for an empty sequence.
pub fn content(values: &[i64]) -> i64 {
    values.iter().fold(0i64, |g, &v| g.gcd(&v))
}

/// An exact rational, always stored in lowest terms with a positive
/// denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rat(Ratio<i64>);

impl Rat {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(invalid("zero denominator"));
        }
        Ok(Rat(Ratio::new(num, den)))
    }

    pub fn int(v: i64) -> Self {
        Rat(Ratio::from_integer(v))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn floor(&self) -> i64 {
        self.numer().div_euclid(self.denom())
    }

    pub fn ceil(&self) -> i64 {
        Integer::div_ceil(&self.numer(), &self.denom())
    }

    pub fn is_positive(&self) -> bool {
        self.numer() > 0
    }

    /// Exact comparison with an integer.
    pub fn cmp_int(&self, z: i64) -> Ordering {
        (self.numer() as i128).cmp(&(z as i128 * self.denom() as i128))
    }
}

impl From<i64> for Rat {
    fn from(v: i64) -> Self {
        Rat::int(v)
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        Rat(self.0 + rhs.0)
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        Rat(self.0 - rhs.0)
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        Rat(self.0 * rhs.0)
    }
}

impl Mul<i64> for Rat {
    type Output = Rat;
    fn mul(self, rhs: i64) -> Rat {
        Rat(self.0 * rhs)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
        };
        match s.split_once('/') {
            Some((p, q)) => Rat::new(parse(p)?, parse(q)?),
            None => Ok(Rat::int(parse(s)?)),
        }
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The half-open interval `[lo, hi)`; empty when `hi <= lo`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfOpenInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl HalfOpenInterval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        HalfOpenInterval { lo, hi }
    }

    pub fn is_empty(&self) -> bool {
        self.hi <= self.lo
    }

    pub fn contains(&self, x: Rat) -> bool {
        self.lo <= x && x < self.hi
    }

    pub fn contains_int(&self, z: i64) -> bool {
        self.lo.cmp_int(z) != Ordering::Greater && self.hi.cmp_int(z) == Ordering::Greater
    }

    /// The dilate `t * [lo, hi)`.
    pub fn dilate(&self, t: i64) -> HalfOpenInterval {
        HalfOpenInterval::new(self.lo * t, self.hi * t)
    }

    /// Whether `z` lies in `t * self` for some positive integer `t`.
    ///
    /// The candidates are `t` with `z / hi < t <= z / lo`; the largest of
    /// them is `floor(z / lo)`, so it is the only one worth testing.
    pub fn some_dilate_contains(&self, z: i64) -> bool {
        if self.is_empty() || z <= 0 || !self.lo.is_positive() {
            return false;
        }
        let t = (Rat::int(z) * Rat::new(self.lo.denom(), self.lo.numer()).expect("lo > 0")).floor();
        t >= 1 && self.dilate(t).contains_int(z)
    }

    /// Least `t0` from which consecutive dilates overlap or touch, i.e.
    /// `t * hi >= (t + 1) * lo` for all `t >= t0`. `None` for an empty
    /// interval.
    pub fn overlap_index(&self) -> Option<i64> {
        if self.is_empty() {
            return None;
        }
        let width = self.hi - self.lo;
        let ratio = self.lo * Rat::new(width.denom(), width.numer()).expect("width > 0");
        Some(ratio.ceil().max(1))
    }

    /// Start of the infinite ray contained in the union of all dilates.
    pub fn ray_start(&self) -> Option<Rat> {
        self.overlap_index().map(|t0| self.lo * t0)
    }
}

impl fmt::Display for HalfOpenInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.lo, self.hi)
    }
}

/// Summary of `∪_I ∪_{t >= 1} t·I` on the positive integers up to a horizon.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RaySummary {
    /// Every integer at or beyond this point is covered.
    pub ray_start: Option<Rat>,
    /// Integers in `[1, horizon]` covered by no dilate, ascending.
    pub gaps: Vec<i64>,
    pub horizon: i64,
}

/// Union of all positive dilates of `intervals`, restricted to `[1, horizon]`.
///
/// Coverage is computed by enumerating dilates `t` while `t * lo <= horizon`;
/// the ray start is reported alongside but is not relied on for the gaps.
pub fn scaled_union(intervals: &[HalfOpenInterval], horizon: i64) -> Result<RaySummary> {
    if horizon < 1 {
        return Err(invalid(format!("horizon must be positive, got {horizon}")));
    }
    if let Some(bad) = intervals.iter().find(|iv| !iv.lo.is_positive()) {
        return Err(invalid(format!("interval {bad} has nonpositive left endpoint")));
    }
    let h = horizon as usize;
    let mut covered = vec![false; h + 1];
    let mut ray_start: Option<Rat> = None;
    for iv in intervals.iter().filter(|iv| !iv.is_empty()) {
        let mut t = 1i64;
        loop {
            let dil = iv.dilate(t);
            if dil.lo.cmp_int(horizon) == Ordering::Greater {
                break;
            }
            let first = dil.lo.ceil().max(1);
            // last integer strictly below hi
            let last = (dil.hi.ceil() - 1).min(horizon);
            for z in first..=last {
                covered[z as usize] = true;
            }
            t += 1;
        }
        let r = iv.ray_start().expect("nonempty");
        ray_start = Some(ray_start.map_or(r, |cur| cur.min(r)));
    }
    let gaps = (1..=horizon).filter(|&z| !covered[z as usize]).collect();
    Ok(RaySummary {
        ray_start,
        gaps,
        horizon,
    })
}
