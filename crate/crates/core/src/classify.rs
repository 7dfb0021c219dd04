//! Finite-search classification of nontrivial asymptotically hollow triples,
//! and the family `a_n` of tuples with large least entry.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::asymptotic::TupleA;
use crate::error::{invalid, Error, Result};
use crate::par;
use crate::proscriptive::{candidate_extensions, HorizonPolicy};

/// `2 <= a <= a_max` for the least entry; every entry at most `x_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationBox {
    pub a_max: i64,
    pub x_max: i64,
}

impl ClassificationBox {
    pub fn new(a_max: i64, x_max: i64) -> Result<Self> {
        if a_max < 2 || a_max > x_max {
            return Err(invalid(format!(
                "need 2 <= a_max <= x_max, got a_max={a_max}, x_max={x_max}"
            )));
        }
        Ok(ClassificationBox { a_max, x_max })
    }
}

pub type Triple = (i64, i64, i64);

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleSet {
    pub sporadic: BTreeSet<Triple>,
    /// `x` such that `(2, x, x + 1)` is present.
    pub family_xs: BTreeSet<i64>,
}

impl TripleSet {
    /// Splits triples into the `(2, x, x + 1)` family and the rest.
    pub fn from_triples(triples: impl IntoIterator<Item = Triple>) -> Self {
        let mut set = TripleSet::default();
        for t in triples {
            match t {
                (2, x, y) if y == x + 1 => {
                    set.family_xs.insert(x);
                }
                _ => {
                    set.sporadic.insert(t);
                }
            }
        }
        set
    }

    pub fn triples(&self) -> Vec<Triple> {
        let mut all: BTreeSet<Triple> = self.sporadic.clone();
        all.extend(self.family_xs.iter().map(|&x| (2, x, x + 1)));
        all.into_iter().collect()
    }

    pub fn len(&self) -> usize {
        self.sporadic.len() + self.family_xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Keeps triples whose least entry is exactly `a`.
    pub fn with_min_entry(&self, a: i64) -> TripleSet {
        TripleSet::from_triples(self.triples().into_iter().filter(|t| t.0 == a))
    }

    /// Keeps triples whose least entry is at most `a_max`.
    pub fn with_min_entry_at_most(&self, a_max: i64) -> TripleSet {
        TripleSet::from_triples(self.triples().into_iter().filter(|t| t.0 <= a_max))
    }
}

/// Every nontrivial asymptotically hollow triple `(a, x, y)`, `a <= x <= y`,
/// in the box.
///
/// Each prefix `(a, x)` is searched with its proscriptive intervals, which
/// leave finitely many `y`; those are then checked with the full criterion.
/// A pair prefix always has a nontrivial datum; an unbounded prefix aborts
/// the search.
pub fn classify_triples(bx: ClassificationBox) -> Result<TripleSet> {
    let prefixes: Vec<(i64, i64)> = (2..=bx.a_max)
        .flat_map(|a| (a..=bx.x_max).map(move |x| (a, x)))
        .collect();
    let per_prefix = par::map(prefixes, |(a, x)| -> Result<Vec<Triple>> {
        let b = TupleA::new(vec![a, x])?;
        let report = candidate_extensions(&b, HorizonPolicy::Derived)?;
        if report.infinite {
            return Err(Error::PreconditionViolation(format!(
                "prefix ({a},{x}) has no nontrivial proscriptive interval"
            )));
        }
        Ok(report
            .candidates
            .into_iter()
            .filter(|&y| y >= x && y <= bx.x_max)
            .map(|y| (a, x, y))
            .collect())
    });
    let mut triples = Vec::new();
    for r in per_prefix {
        triples.extend(r?);
    }
    Ok(TripleSet::from_triples(triples))
}

const SPORADIC: [Triple; 11] = [
    (2, 3, 5),
    (2, 3, 8),
    (2, 5, 9),
    (3, 4, 6),
    (3, 5, 7),
    (3, 5, 8),
    (3, 8, 10),
    (4, 6, 9),
    (4, 7, 10),
    (5, 8, 12),
    (6, 10, 15),
];

/// The known list of nontrivial asymptotically hollow triples, restricted
/// to entries at most `x_max`.
pub fn known_triples(x_max: i64) -> Result<TripleSet> {
    if x_max < 2 {
        return Err(invalid(format!("x_max must be >= 2, got {x_max}")));
    }
    let family = (2..x_max).map(|x| (2, x, x + 1));
    Ok(TripleSet::from_triples(
        SPORADIC
            .iter()
            .copied()
            .chain(family)
            .filter(|t| t.2 <= x_max),
    ))
}

/// Largest supported `n`; beyond it the criterion products leave `i64`.
pub const A_N_MAX: i64 = 12;

/// `(2^{2n-5} - 2^{n-3}, 2^{2n-5} + 2^{n-3}, 2^{2n-4} - 1, ...)`, each entry
/// after the third double its predecessor; `n - 1` entries.
pub fn a_n_family(n: i64) -> Result<TupleA> {
    if n < 4 {
        return Err(invalid(format!("n must be >= 4, got {n}")));
    }
    if n > A_N_MAX {
        return Err(invalid(format!("n must be <= {A_N_MAX}, got {n}")));
    }
    let p = |e: i64| 1i64 << e;
    let mut v = vec![
        p(2 * n - 5) - p(n - 3),
        p(2 * n - 5) + p(n - 3),
        p(2 * n - 4) - 1,
    ];
    while (v.len() as i64) < n - 1 {
        let last = *v.last().unwrap();
        v.push(2 * last);
    }
    TupleA::new(v)
}
