//! The sets `S(x, r)` and `S0(x, r)`.
//!
//! `z` lies in `S(x, r)` when `rem_pos(x, z t) <= x - (r - 1) t` for every
//! integer `1 <= t <= x / r`. `S0` is the same set, except that the `t`
//! with `rem_pos(x, z t) = x` are skipped.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::arith::rem_pos_unchecked;
use crate::error::{invalid, Error, Result};
use crate::par;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SRVariant {
    S,
    S0,
}

impl std::str::FromStr for SRVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" | "s" => Ok(SRVariant::S),
            "S0" | "s0" => Ok(SRVariant::S0),
            _ => Err(Error::Parse(format!("variant must be S or S0, got {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SRSet {
    pub x: i64,
    pub r: i64,
    pub members: BTreeSet<i64>,
    pub variant: SRVariant,
}

fn member(x: i64, r: i64, z: i64, variant: SRVariant) -> bool {
    (1..=x / r).all(|t| {
        let rem = rem_pos_unchecked(x, z * t);
        (variant == SRVariant::S0 && rem == x) || rem <= x - (r - 1) * t
    })
}

/// Exhaustive construction over `z in 1..=x`, `t in 1..=x/r`.
pub fn s_set_bruteforce(x: i64, r: i64, variant: SRVariant) -> Result<SRSet> {
    if r < 2 {
        return Err(invalid(format!("r must be >= 2, got {r}")));
    }
    if x < 2 * r {
        return Err(invalid(format!("need x >= 2r, got x={x}, r={r}")));
    }
    let members = (1..=x).filter(|&z| member(x, r, z, variant)).collect();
    Ok(SRSet {
        x,
        r,
        members,
        variant,
    })
}

/// The three-branch closed form, without checking `x >= r^2`.
pub fn closed_form_members(x: i64, r: i64) -> BTreeSet<i64> {
    let v: Vec<i64> = if x % r != 0 {
        vec![1, x - r, x - r + 1]
    } else if r == 2 && x % 4 == 0 {
        vec![1, x / 2 - 1, x - 1]
    } else {
        vec![1, x - r + 1]
    };
    v.into_iter().collect()
}

/// Closed form for `S(x, r)`, valid for `x >= r^2`.
pub fn s_set_closed_form(x: i64, r: i64) -> Result<SRSet> {
    if r < 2 || x < 2 {
        return Err(invalid(format!("need x, r > 1, got x={x}, r={r}")));
    }
    if x < r * r {
        return Err(Error::OutOfValidity(format!(
            "closed form needs x >= r^2 = {}, got x={x}",
            r * r
        )));
    }
    Ok(SRSet {
        x,
        r,
        members: closed_form_members(x, r),
        variant: SRVariant::S,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepMismatch {
    pub x: i64,
    pub r: i64,
    pub bruteforce: BTreeSet<i64>,
    pub closed_form: BTreeSet<i64>,
}

/// Compares brute force with the closed form for `r in r_range`,
/// `r^2 <= x <= x_max`. Returns every disagreement, in `(r, x)` order.
pub fn closed_form_sweep(r_lo: i64, r_hi: i64, x_max: i64) -> Result<Vec<SweepMismatch>> {
    if r_lo < 2 || r_hi < r_lo {
        return Err(invalid(format!("need 2 <= r_lo <= r_hi, got {r_lo}..={r_hi}")));
    }
    let cells: Vec<(i64, i64)> = (r_lo..=r_hi)
        .flat_map(|r| (r * r..=x_max).map(move |x| (r, x)))
        .collect();
    let found = par::map(cells, |(r, x)| -> Result<Option<SweepMismatch>> {
        let brute = s_set_bruteforce(x, r, SRVariant::S)?.members;
        let closed = s_set_closed_form(x, r)?.members;
        Ok((brute != closed).then_some(SweepMismatch {
            x,
            r,
            bruteforce: brute,
            closed_form: closed,
        }))
    });
    let mut out = Vec::new();
    for m in found {
        out.extend(m?);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryProbe {
    pub r: i64,
    /// Least `x >= 2r` from which brute force and closed form agree up to
    /// `x_max`.
    pub least_agreeing_x: i64,
    pub r_squared: i64,
    /// `r * ceil(r / 2)`.
    pub r_ceil_half_r: i64,
    pub x_max: i64,
}

/// For each `r`, where the closed form starts to hold (up to `x_max`).
/// Diagnostic only: the sharp hypothesis is not known.
pub fn boundary_probe(r_lo: i64, r_hi: i64, x_max: i64) -> Result<Vec<BoundaryProbe>> {
    if r_lo < 2 || r_hi < r_lo {
        return Err(invalid(format!("need 2 <= r_lo <= r_hi, got {r_lo}..={r_hi}")));
    }
    let rs: Vec<i64> = (r_lo..=r_hi).collect();
    let probes = par::map(rs, |r| -> Result<BoundaryProbe> {
        if x_max < 2 * r {
            return Err(invalid(format!("x_max must be >= 2r = {}", 2 * r)));
        }
        let mut least = x_max + 1;
        for x in (2 * r..=x_max).rev() {
            if s_set_bruteforce(x, r, SRVariant::S)?.members != closed_form_members(x, r) {
                break;
            }
            least = x;
        }
        Ok(BoundaryProbe {
            r,
            least_agreeing_x: least,
            r_squared: r * r,
            r_ceil_half_r: r * ((r + 1) / 2),
            x_max,
        })
    });
    probes.into_iter().collect()
}
