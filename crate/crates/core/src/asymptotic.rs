//! The modular criterion for asymptotic hollowness.
//!
//! A tuple `a = (a(1), ..., a(n-1))` is asymptotically hollow when
//! `K_(a; N)` is hollow for infinitely many `N`. Past an explicit threshold
//! this is decided by the finite family of inequalities
//!
//! ```text
//! sum_{j != i} rem_pos(a(i), t a(j)) <= t + (n - 3) a(i)
//! ```
//!
//! over all `i` and `1 <= t <= a(i) - 1`; it suffices to check
//! `t <= a(i) / 2`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::rem_pos_unchecked;
use crate::error::{invalid, Error, Result};
use crate::par;
use crate::simplex::{is_hollow, parse_int_list, SimplexSpec};

/// A tuple of positive integers, stored in ascending order (the criterion
/// does not depend on the order of the entries).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TupleA(Vec<i64>);

impl TupleA {
    pub fn new(mut entries: Vec<i64>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(invalid(format!(
                "tuple needs at least two entries, got {}",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|&&v| v < 1) {
            return Err(invalid(format!("entries must be positive, got {bad}")));
        }
        entries.sort_unstable();
        Ok(TupleA(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `n`, one more than the number of entries.
    pub fn n(&self) -> i64 {
        self.0.len() as i64 + 1
    }

    /// No entry equals one.
    pub fn is_nontrivial(&self) -> bool {
        self.0[0] >= 2
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// This tuple with `y` appended (re-sorted).
    pub fn extended(&self, y: i64) -> Result<TupleA> {
        let mut v = self.0.clone();
        v.push(y);
        TupleA::new(v)
    }
}

impl fmt::Display for TupleA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

impl FromStr for TupleA {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TupleA::new(parse_int_list(s)?)
    }
}

impl Serialize for TupleA {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TupleA {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A pair `(i, t)` at which the criterion fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionWitness {
    /// 0-based position in the ascending tuple.
    pub i: usize,
    pub modulus: i64,
    pub t: i64,
    pub lhs: i64,
    pub rhs: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionValue {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

#[inline]
fn criterion_sides(a: &[i64], i: usize, t: i64) -> (i64, i64) {
    let ai = a[i];
    let lhs = a
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, &aj)| rem_pos_unchecked(ai, t * (aj % ai)))
        .sum();
    let n = a.len() as i64 + 1;
    (lhs, t + (n - 3) * ai)
}

/// Both sides of the inequality at `(i, t)`, for `1 <= t <= a(i) - 1`.
pub fn criterion_inequality(a: &TupleA, i: usize, t: i64) -> Result<CriterionValue> {
    let ai = *a
        .entries()
        .get(i)
        .ok_or_else(|| invalid(format!("index {i} out of range")))?;
    if t < 1 || t > ai - 1 {
        return Err(invalid(format!("t = {t} outside 1..={}", ai - 1)));
    }
    let (lhs, rhs) = criterion_sides(a.entries(), i, t);
    Ok(CriterionValue {
        lhs,
        rhs,
        holds: lhs <= rhs,
    })
}

/// Which `t` to test for each entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Range {
    /// `1 <= t <= a(i) - 1`.
    Full,
    /// `1 <= t <= a(i) / 2`.
    #[default]
    Half,
}

impl Range {
    pub fn t_max(self, ai: i64) -> i64 {
        match self {
            Range::Full => ai - 1,
            Range::Half => ai / 2,
        }
    }
}

impl FromStr for Range {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Range::Full),
            "half" => Ok(Range::Half),
            _ => Err(Error::Parse(format!("range must be full or half, got {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsymVerdict {
    pub asymptotically_hollow: bool,
    /// Least failing `(i, t)`, ordered by `i` then `t`.
    pub witness: Option<CriterionWitness>,
}

/// Decides asymptotic hollowness. On failure the least `(i, t)` is reported.
pub fn is_asymptotically_hollow(a: &TupleA, range: Range) -> AsymVerdict {
    let entries = a.entries();
    // offsets[i] = number of (i', t) pairs with i' < i
    let mut offsets = Vec::with_capacity(entries.len() + 1);
    offsets.push(0i64);
    for &ai in entries {
        let count = if ai >= 2 { range.t_max(ai).max(0) } else { 0 };
        offsets.push(offsets.last().unwrap() + count);
    }
    let total = *offsets.last().unwrap();
    let witness = par::find_first_in_range(0, total, |flat| {
        let i = offsets.partition_point(|&o| o <= flat) - 1;
        let t = flat - offsets[i] + 1;
        let (lhs, rhs) = criterion_sides(entries, i, t);
        (lhs > rhs).then(|| CriterionWitness {
            i,
            modulus: entries[i],
            t,
            lhs,
            rhs,
        })
    });
    AsymVerdict {
        asymptotically_hollow: witness.is_none(),
        witness,
    }
}

/// The size conditions on `N` under which the criterion applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thresholds {
    /// `max_{i != j} (a(i) - 1) a(j)`; for `N` at least this the criterion
    /// is sufficient.
    pub m_bound: i64,
    /// `(sum a - 1) * max (a(i) - 1)`; for `N` beyond this it is also
    /// necessary.
    pub big_m_bound: i64,
    /// `max(m_bound, big_m_bound)`: hollowness is constant for `N > c`.
    pub c: i64,
}

pub fn thresholds(a: &TupleA) -> Thresholds {
    let e = a.entries();
    let mut m_bound = 0;
    for (i, &ai) in e.iter().enumerate() {
        for (j, &aj) in e.iter().enumerate() {
            if i != j {
                m_bound = m_bound.max((ai - 1) * aj);
            }
        }
    }
    let max_less_one = e.iter().map(|v| v - 1).max().unwrap_or(0);
    let big_m_bound = (a.sum() - 1) * max_less_one;
    Thresholds {
        m_bound,
        big_m_bound,
        c: m_bound.max(big_m_bound),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShortcutRule {
    /// Some subset of the other entries sums to 1 mod `a(j)`.
    REquals1,
    /// Some subset sums to 0 mod `a(j)` with a member not divisible by it.
    REquals0Nondivisor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShortcutHit {
    pub rule: ShortcutRule,
    /// 0-based positions in the ascending tuple.
    pub subset: Vec<usize>,
    /// The zero-residue rule with no member coprime to `a(j)` is not
    /// provably sound; such hits are only reported after every `t` has been
    /// checked directly.
    pub verified_directly: bool,
}

fn other_subsets(len: usize, j: usize) -> impl Iterator<Item = Vec<usize>> {
    let others: Vec<usize> = (0..len).filter(|&i| i != j).collect();
    (1..=others.len()).flat_map(move |k| others.clone().into_iter().combinations(k))
}

fn require_nontrivial(a: &TupleA, j: usize) -> Result<i64> {
    if !a.is_nontrivial() {
        return Err(Error::PreconditionViolation(
            "shortcut rules need every entry >= 2".into(),
        ));
    }
    a.entries()
        .get(j)
        .copied()
        .ok_or_else(|| invalid(format!("index {j} out of range")))
}

/// Subset-sum shortcuts that settle the criterion at `j` for every `t`.
pub fn shortcut_all_t(a: &TupleA, j: usize) -> Result<Option<ShortcutHit>> {
    let aj = require_nontrivial(a, j)?;
    let e = a.entries();
    let mut pending_zero: Option<Vec<usize>> = None;
    for subset in other_subsets(e.len(), j) {
        let r = subset.iter().map(|&s| e[s]).sum::<i64>().rem_euclid(aj);
        if r == 1 {
            return Ok(Some(ShortcutHit {
                rule: ShortcutRule::REquals1,
                subset,
                verified_directly: false,
            }));
        }
        if r == 0 {
            if subset.iter().any(|&s| e[s].gcd(&aj) == 1) {
                return Ok(Some(ShortcutHit {
                    rule: ShortcutRule::REquals0Nondivisor,
                    subset,
                    verified_directly: false,
                }));
            }
            let nondivisor = subset.iter().any(|&s| e[s] % aj != 0 || aj % e[s] != 0);
            if nondivisor && pending_zero.is_none() {
                pending_zero = Some(subset);
            }
        }
    }
    if let Some(subset) = pending_zero {
        let all_hold = (1..aj).all(|t| {
            let (lhs, rhs) = criterion_sides(e, j, t);
            lhs <= rhs
        });
        if all_hold {
            return Ok(Some(ShortcutHit {
                rule: ShortcutRule::REquals0Nondivisor,
                subset,
                verified_directly: true,
            }));
        }
    }
    Ok(None)
}

/// Subset-sum shortcut for a single `t`: some subset `S` of the other
/// entries has `t * sum_S ≡ z (mod a(j))` with `1 <= z <= t`, or `z = 0`
/// with some member `s` having `a(j) ∤ t a(s)`. Returns the subset.
pub fn shortcut_single_t(a: &TupleA, j: usize, t: i64) -> Result<Option<Vec<usize>>> {
    let aj = require_nontrivial(a, j)?;
    if t < 1 || t >= aj {
        return Err(invalid(format!("t = {t} outside 1..={}", aj - 1)));
    }
    let e = a.entries();
    for subset in other_subsets(e.len(), j) {
        let z = (t * subset.iter().map(|&s| e[s]).sum::<i64>()).rem_euclid(aj);
        let hit = if z == 0 {
            subset.iter().any(|&s| (t * e[s]) % aj != 0)
        } else {
            z <= t
        };
        if hit {
            return Ok(Some(subset));
        }
    }
    Ok(None)
}

/// Criterion against brute force on `K_(a; N)` for `N` in `(c, c + window]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgreementRow {
    pub tuple: TupleA,
    pub c: i64,
    pub criterion: bool,
    /// `N` where brute force disagrees with the criterion.
    pub mismatches: Vec<i64>,
    /// Mismatches not of the known kind: a hollow simplex at an `N` that
    /// some entry divides, where the extremal lattice point can land on a
    /// facet instead of inside.
    pub unexplained: Vec<i64>,
    /// Brute-force hollowness is the same for every `N` in the window.
    pub stable: bool,
    /// Same, over the `N` divisible by no entry.
    pub stable_off_multiples: bool,
}

impl AgreementRow {
    /// Zero mismatches and a constant status over the whole window.
    pub fn passed_strict(&self) -> bool {
        self.mismatches.is_empty() && self.stable
    }

    /// Every mismatch is of the known kind, and the status is constant
    /// away from multiples of the entries.
    pub fn passed(&self) -> bool {
        self.unexplained.is_empty() && self.stable_off_multiples
    }
}

pub fn oracle_agreement(a: &TupleA, window: i64) -> Result<AgreementRow> {
    if window < 1 {
        return Err(invalid(format!("window must be positive, got {window}")));
    }
    let c = thresholds(a).c;
    let criterion = is_asymptotically_hollow(a, Range::Half).asymptotically_hollow;
    let mut mismatches = Vec::new();
    let mut unexplained = Vec::new();
    let mut seen = [false; 2];
    let mut seen_off = [false; 2];
    for big_n in c + 1..=c + window {
        let spec = SimplexSpec::new(a.entries().to_vec(), big_n)?;
        let hollow = is_hollow(&spec).hollow;
        let multiple = a.entries().iter().any(|&x| big_n % x == 0);
        seen[hollow as usize] = true;
        if !multiple {
            seen_off[hollow as usize] = true;
        }
        if hollow != criterion {
            mismatches.push(big_n);
            if !(hollow && multiple) {
                unexplained.push(big_n);
            }
        }
    }
    Ok(AgreementRow {
        tuple: a.clone(),
        c,
        criterion,
        mismatches,
        unexplained,
        stable: !(seen[0] && seen[1]),
        stable_off_multiples: !(seen_off[0] && seen_off[1]),
    })
}
