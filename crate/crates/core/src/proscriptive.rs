//! Proscriptive intervals: ranges of `y` that cannot complete a prefix
//! `b = (b(1), ..., b(n-2))` to an asymptotically hollow `(b, y)`.
//!
//! For a position `i` and `m >= 1` let
//! `g(i, j, m) = floor((m b(j) - 1) / b(i))`, `f(i, m) = sum_j g(i, j, m)`,
//! `H(i, m) = n - 3 + f(i, m)` and `s = sum b - 1`. Then no `y` in any dilate
//! `t * [b(i)/m, s/H(i, m))` gives an asymptotically hollow tuple.

use serde::{Deserialize, Serialize};

use crate::arith::{rem_pos_unchecked, scaled_union, HalfOpenInterval, Rat, RaySummary};
use crate::asymptotic::{is_asymptotically_hollow, Range, TupleA};
use crate::error::{invalid, Result};
use crate::par;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProscriptiveDatum {
    /// 0-based position in the ascending prefix.
    pub i: usize,
    pub entry: i64,
    pub m: i64,
    pub g_row: Vec<i64>,
    pub f: i64,
    #[serde(rename = "H")]
    pub h: i64,
    pub base_interval: HalfOpenInterval,
    pub trivial: bool,
}

/// The datum for position `i` and multiplier `m`, with `n = len(b) + 2`.
pub fn proscriptive_datum(b: &TupleA, i: usize, m: i64) -> Result<ProscriptiveDatum> {
    let e = b.entries();
    let bi = *e
        .get(i)
        .ok_or_else(|| invalid(format!("index {i} out of range")))?;
    if m < 1 {
        return Err(invalid(format!("m must be positive, got {m}")));
    }
    let n = e.len() as i64 + 2;
    let s = b.sum() - 1;
    let g_row: Vec<i64> = e.iter().map(|&bj| (m * bj - 1).div_euclid(bi)).collect();
    let f: i64 = g_row.iter().sum();
    let h = n - 3 + f;
    // h >= 1 since len(b) >= 2
    let base_interval = HalfOpenInterval::new(Rat::new(bi, m)?, Rat::new(s, h)?);
    Ok(ProscriptiveDatum {
        i,
        entry: bi,
        m,
        g_row,
        f,
        h,
        trivial: base_interval.is_empty(),
        base_interval,
    })
}

/// `sum_{j != i} rem_pos(b(i), m b(j)) <= m + (n - 4) b(i)`, the modular form
/// of triviality. Entries equal to one have no nontrivial data.
pub fn trivial_by_remainders(b: &TupleA, i: usize, m: i64) -> bool {
    let e = b.entries();
    let bi = e[i];
    if bi < 2 {
        return true;
    }
    let n = e.len() as i64 + 2;
    let lhs: i64 = e
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, &bj)| rem_pos_unchecked(bi, m * bj))
        .sum();
    lhs <= m + (n - 4) * bi
}

/// All nontrivial data, `m` ranging over `1..b(i)` for each position.
/// Larger `m` are always trivial.
pub fn nontrivial_data(b: &TupleA) -> Vec<ProscriptiveDatum> {
    let pairs: Vec<(usize, i64)> = b
        .entries()
        .iter()
        .enumerate()
        .flat_map(|(i, &bi)| (1..bi).map(move |m| (i, m)))
        .collect();
    let data = par::map(pairs, |(i, m)| {
        proscriptive_datum(b, i, m).expect("indices in range")
    });
    data.into_iter().filter(|d| !d.trivial).collect()
}

/// The closed-form estimate `b(i) (1 + s - m) / (2m)` from a nontrivial
/// datum. Not a strict bound on extensions: `(2, 3, 8)` is asymptotically
/// hollow but the datum at entry 3, `m = 1` gives 6. The ray start of the
/// datum's interval is a true bound; the derived horizon takes the larger.
pub fn extension_bound(b: &TupleA, i: usize, m: i64) -> Result<Rat> {
    let d = proscriptive_datum(b, i, m)?;
    if d.trivial {
        return Err(invalid(format!(
            "datum (i={i}, m={m}) is trivial; no bound applies"
        )));
    }
    let s = b.sum() - 1;
    Rat::new(d.entry * (1 + s - m), 2 * m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "policy", content = "value")]
pub enum HorizonPolicy {
    /// Derived from the data: large enough to reach every ray start and
    /// every bound from [`extension_bound`].
    Derived,
    Explicit(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrefixReport {
    pub b: TupleA,
    pub s: i64,
    pub nontrivial_data: Vec<ProscriptiveDatum>,
    /// `None` when every datum is trivial: then `b` is itself asymptotically
    /// hollow and the extensions are unbounded.
    pub union: Option<RaySummary>,
    /// Gaps `y >= 2` for which `(b, y)` is asymptotically hollow.
    pub candidates: Vec<i64>,
    pub infinite: bool,
}

/// The search of a prefix for its nontrivial asymptotically hollow
/// extensions `(b, y)`, `y >= 2`, in any position of the sorted tuple.
pub fn candidate_extensions(b: &TupleA, policy: HorizonPolicy) -> Result<PrefixReport> {
    let s = b.sum() - 1;
    let data = nontrivial_data(b);
    if data.is_empty() {
        return Ok(PrefixReport {
            b: b.clone(),
            s,
            nontrivial_data: data,
            union: None,
            candidates: Vec::new(),
            infinite: true,
        });
    }
    let horizon = match policy {
        HorizonPolicy::Explicit(h) => h,
        HorizonPolicy::Derived => default_horizon(b, &data)?,
    };
    let intervals: Vec<HalfOpenInterval> = data.iter().map(|d| d.base_interval).collect();
    let union = scaled_union(&intervals, horizon)?;
    let gaps: Vec<i64> = union.gaps.iter().copied().filter(|&y| y >= 2).collect();
    let candidates = par::filter(gaps, |&y| {
        let ext = b.extended(y).expect("positive entries");
        is_asymptotically_hollow(&ext, Range::Half).asymptotically_hollow
    });
    Ok(PrefixReport {
        b: b.clone(),
        s,
        nontrivial_data: data,
        union: Some(union),
        candidates,
        infinite: false,
    })
}

fn default_horizon(b: &TupleA, data: &[ProscriptiveDatum]) -> Result<i64> {
    let mut h = 1;
    for d in data {
        h = h.max(extension_bound(b, d.i, d.m)?.ceil());
        if let Some(r) = d.base_interval.ray_start() {
            h = h.max(r.ceil());
        }
    }
    Ok(h)
}
