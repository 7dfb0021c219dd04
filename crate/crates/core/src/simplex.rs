//! The simplex `K_alpha = cvx{0, e_1, ..., e_{n-1}, alpha^T}` for
//! `alpha = (a(1), ..., a(n-1); d)`.
//!
//! Every lattice point of `K_alpha` other than a vertex has barycentric
//! weight `k/d` on `alpha` for some `1 <= k < d`, and that `k` pins down the
//! other weights: `lambda_i = 1 - {k a(i) / d}` (zero when `d | k a(i)`).
//! The point exists iff these weights sum to at most one. Enumerating `k`
//! is therefore the exact ground-truth oracle for hollowness and emptiness.
//! Its cost is `O(d * n)`, so `d` is the complexity driver.
//!
//! All inequalities are evaluated after clearing the denominator `d`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::{content, Rat};
use crate::error::{invalid, Error, Result};
use crate::par;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplexSpec {
    a: Vec<i64>,
    d: i64,
}

impl SimplexSpec {
    pub fn new(a: Vec<i64>, d: i64) -> Result<Self> {
        if a.len() < 2 {
            return Err(invalid(format!(
                "simplex needs at least two entries before d, got {}",
                a.len()
            )));
        }
        if let Some(bad) = a.iter().find(|&&v| v < 1) {
            return Err(invalid(format!("entries must be positive, got {bad}")));
        }
        if d < 1 {
            return Err(invalid(format!("d must be positive, got {d}")));
        }
        Ok(SimplexSpec { a, d })
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// Ambient dimension `n` (the number of entries of `alpha`, `d` included).
    pub fn dim(&self) -> usize {
        self.a.len() + 1
    }

    /// `1 <= a(i) < d` for all `i` and `cont(a, d) = 1`.
    pub fn is_normalized(&self) -> bool {
        self.a.iter().all(|&v| v < self.d) && self.content() == 1
    }

    /// `cont(alpha)`, the gcd of all entries including `d`.
    pub fn content(&self) -> i64 {
        content(&self.a).gcd(&self.d)
    }

    /// Reduces every `a(i)` modulo `d` and drops the entries that become
    /// zero (each such entry splits off a direct summand).
    pub fn normalize(&self) -> Result<SimplexSpec> {
        let reduced: Vec<i64> = self
            .a
            .iter()
            .map(|v| v.rem_euclid(self.d))
            .filter(|&v| v != 0)
            .collect();
        SimplexSpec::new(reduced, self.d)
    }

    /// `(b ++ a; d)`.
    pub fn with_prefix(&self, prefix: &[i64]) -> Result<SimplexSpec> {
        let mut a = prefix.to_vec();
        a.extend_from_slice(&self.a);
        SimplexSpec::new(a, self.d)
    }

    /// `d * (sum of barycentric weights)` at `k`, or `None` as soon as it
    /// exceeds `d` (no lattice point for this `k`). The flag reports whether
    /// some `d | k a(i)`.
    #[inline]
    fn scaled_weight(&self, k: i64) -> Option<(i64, bool)> {
        let d = self.d;
        let mut sum = k;
        let mut divides = false;
        for &ai in &self.a {
            let r = (k * ai) % d;
            if r == 0 {
                divides = true;
            } else {
                sum += d - r;
                if sum > d {
                    return None;
                }
            }
        }
        Some((sum, divides))
    }

    fn report(&self, k: i64, sum: i64, divides: bool) -> LatticePointReport {
        let d = self.d;
        let mut coords: Vec<i64> = self
            .a
            .iter()
            .map(|&ai| {
                let ka = k * ai;
                if ka % d == 0 {
                    ka / d
                } else {
                    ka.div_euclid(d) + 1
                }
            })
            .collect();
        coords.push(k);
        let location = if !divides && sum < d {
            Location::Interior
        } else {
            Location::FacetBoundary
        };
        LatticePointReport {
            k,
            coords,
            location,
            lambda_sum: Rat::new(sum, d).expect("d > 0"),
        }
    }
}

impl fmt::Display for SimplexSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.a.iter().join(","), self.d)
    }
}

impl FromStr for SimplexSpec {
    type Err = Error;

    /// `"3,5,7:30"`.
    fn from_str(s: &str) -> Result<Self> {
        let (head, d) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected a(1),...,a(n-1):d, got {s:?}")))?;
        let a = parse_int_list(head)?;
        let d = d
            .trim()
            .parse::<i64>()
            .map_err(|e| Error::Parse(format!("bad d in {s:?}: {e}")))?;
        SimplexSpec::new(a, d)
    }
}

impl Serialize for SimplexSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SimplexSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub(crate) fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    if s.trim().is_empty() {
        return Err(Error::Parse("empty tuple".into()));
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad entry {t:?}: {e}")))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Location {
    Interior,
    FacetBoundary,
}

/// A non-extreme lattice point of `K_alpha`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticePointReport {
    /// The weight on `alpha` is `k/d`.
    pub k: i64,
    pub coords: Vec<i64>,
    pub location: Location,
    /// Sum of the barycentric weights on `e_1, ..., e_{n-1}, alpha`.
    pub lambda_sum: Rat,
}

/// All non-extreme lattice points, ascending in `k`. Points with weight sum
/// exactly one, or with some vanishing weight, are tagged as boundary.
pub fn enumerate_non_extreme_points(spec: &SimplexSpec) -> Vec<LatticePointReport> {
    (1..spec.d)
        .filter_map(|k| {
            spec.scaled_weight(k)
                .map(|(sum, divides)| spec.report(k, sum, divides))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HollowVerdict {
    pub hollow: bool,
    /// Interior point with the least `k`, when not hollow.
    pub witness: Option<LatticePointReport>,
}

/// No lattice point strictly inside `K_alpha`.
pub fn is_hollow(spec: &SimplexSpec) -> HollowVerdict {
    let witness = par::find_first_in_range(1, spec.d, |k| match spec.scaled_weight(k) {
        Some((sum, false)) if sum < spec.d => Some(spec.report(k, sum, false)),
        _ => None,
    });
    HollowVerdict {
        hollow: witness.is_none(),
        witness,
    }
}

/// The only lattice points of `K_alpha` are its vertices.
pub fn is_empty(spec: &SimplexSpec) -> bool {
    par::find_first_in_range(1, spec.d, |k| spec.scaled_weight(k).map(|_| ())).is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EmptyReason {
    /// Some `a(i) = 1` and the remaining entries of `alpha` are coprime.
    UnitEntry,
    /// `cont(V, d) = 1` for `V` the entries indexed by subsets summing to 0 mod `d`.
    GcdUnion,
}

/// Cheap sufficient conditions for emptiness.
pub fn empty_sufficient(spec: &SimplexSpec) -> Option<EmptyReason> {
    let a = spec.a();
    let d = spec.d();
    for (i, &ai) in a.iter().enumerate() {
        if ai == 1 {
            let rest: Vec<i64> = a
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &v)| v)
                .chain(std::iter::once(d))
                .collect();
            if content(&rest) == 1 {
                return Some(EmptyReason::UnitEntry);
            }
        }
    }
    let union = zero_sum_union(spec);
    let mut v: Vec<i64> = union.iter().map(|&i| a[i]).collect();
    v.push(d);
    (content(&v) == 1).then_some(EmptyReason::GcdUnion)
}

/// Union (0-based indices, ascending) of all nonempty index sets `T` with
/// `d | sum_{t in T} a(t)`.
pub fn zero_sum_union(spec: &SimplexSpec) -> Vec<usize> {
    let a = spec.a();
    let d = spec.d();
    let mut in_union = vec![false; a.len()];
    for mask in 1u64..(1u64 << a.len()) {
        let sum: i64 = (0..a.len()).filter(|i| mask >> i & 1 == 1).map(|i| a[i]).sum();
        if sum % d == 0 {
            for (i, flag) in in_union.iter_mut().enumerate() {
                if mask >> i & 1 == 1 {
                    *flag = true;
                }
            }
        }
    }
    (0..a.len()).filter(|&i| in_union[i]).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetVolumes {
    /// Ordered as opposite-alpha, opposite-e_1, ..., opposite-e_{n-1},
    /// opposite-0.
    pub volumes: Vec<i64>,
    /// Facets that are standard (unimodular) simplices.
    pub standard_count: usize,
}

pub fn facet_volumes(spec: &SimplexSpec) -> FacetVolumes {
    let d = spec.d();
    let mut volumes = Vec::with_capacity(spec.dim() + 1);
    volumes.push(1);
    volumes.extend(spec.a().iter().map(|ai| ai.gcd(&d)));
    let sum: i64 = spec.a().iter().sum();
    volumes.push((sum - 1).gcd(&d));
    let standard_count = volumes.iter().filter(|&&v| v == 1).count();
    FacetVolumes {
        volumes,
        standard_count,
    }
}

/// Cotorsion of the subgroup generated by the differences of a facet's
/// vertices, computed as the gcd of the maximal minors of the difference
/// matrix. `facet` follows the [`FacetVolumes`] ordering.
pub fn facet_cotorsion_oracle(spec: &SimplexSpec, facet: usize) -> Result<i64> {
    let n = spec.dim();
    if facet > n {
        return Err(invalid(format!("facet index {facet} out of range 0..={n}")));
    }
    // vertex list: 0, e_1, ..., e_{n-1}, alpha
    let mut vertices: Vec<Vec<i64>> = Vec::with_capacity(n + 1);
    vertices.push(vec![0; n]);
    for i in 0..n - 1 {
        let mut e = vec![0; n];
        e[i] = 1;
        vertices.push(e);
    }
    let mut alpha = spec.a().to_vec();
    alpha.push(spec.d());
    vertices.push(alpha);
    let omitted = match facet {
        0 => n,
        f if f == n => 0,
        f => f,
    };
    let kept: Vec<&Vec<i64>> = vertices
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != omitted)
        .map(|(_, v)| v)
        .collect();
    let base = kept[0];
    // columns are difference vectors; rows are coordinates
    let cols: Vec<Vec<i64>> = kept[1..]
        .iter()
        .map(|v| v.iter().zip(base).map(|(x, y)| x - y).collect())
        .collect();
    let mut g: i128 = 0;
    for skip in 0..n {
        let minor: Vec<Vec<i128>> = (0..n)
            .filter(|&r| r != skip)
            .map(|r| cols.iter().map(|c| c[r] as i128).collect())
            .collect();
        g = g.gcd(&det_bareiss(minor));
    }
    Ok(g as i64)
}

/// Exact determinant by fraction-free Gaussian elimination.
fn det_bareiss(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// A nonempty index set `T` (1-based) with `sum_T a(i) ≡ 0 or 1 (mod d)`,
/// which certifies lattice width one. Subsets are scanned by size, then
/// lexicographically; the first hit is returned.
pub fn width_one(spec: &SimplexSpec) -> Result<Option<Vec<usize>>> {
    if spec.d() <= 1 {
        return Err(invalid("width_one requires d > 1"));
    }
    let a = spec.a();
    let d = spec.d();
    for size in 1..=a.len() {
        for combo in (0..a.len()).combinations(size) {
            let r = combo.iter().map(|&i| a[i]).sum::<i64>().rem_euclid(d);
            if r == 0 || r == 1 {
                return Ok(Some(combo.into_iter().map(|i| i + 1).collect()));
            }
        }
    }
    Ok(None)
}

/// The functional `(eps(1), ..., eps(n-1), -m)` with `eps` the indicator of
/// `subset` (1-based) and `sum_T a(i) = eps + m d`, `eps ∈ {0, 1}`.
pub fn width_one_functional(spec: &SimplexSpec, subset: &[usize]) -> Result<Vec<i64>> {
    let a = spec.a();
    if subset.iter().any(|&i| i == 0 || i > a.len()) {
        return Err(invalid("subset index out of range"));
    }
    let sum: i64 = subset.iter().map(|&i| a[i - 1]).sum();
    let (m, eps) = sum.div_mod_floor(&spec.d());
    if eps > 1 {
        return Err(invalid(format!("subset sums to {eps} mod d, not 0 or 1")));
    }
    let mut phi = vec![0; a.len()];
    for &i in subset {
        phi[i - 1] = 1;
    }
    phi.push(-m);
    Ok(phi)
}

/// `max - min` of a functional over the vertices of `K_alpha`.
pub fn functional_width(spec: &SimplexSpec, phi: &[i64]) -> i64 {
    let n = spec.dim();
    let mut values = vec![0i64];
    values.extend(phi.iter().take(n - 1).copied());
    values.push(spec.a().iter().zip(phi).map(|(x, y)| x * y).sum::<i64>() + spec.d() * phi[n - 1]);
    values.iter().max().unwrap() - values.iter().min().unwrap()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WidthBound {
    pub s: i64,
    /// Distinct augmented rows, entries reduced to `(-d/2, d/2]`.
    pub rows: Vec<Vec<i64>>,
}

fn centered(v: i64, d: i64) -> i64 {
    let r = v.rem_euclid(d);
    if 2 * r > d {
        r - d
    } else {
        r
    }
}

/// Upper bound on the lattice width from the augmented rows of all
/// equivalent `K_alpha'`.
///
/// The weight row of `K_alpha` is `(1 - sum a, a(1), ..., a(n-1), -1)` mod
/// `d`, one entry per vertex. Moving any vertex whose weight `w` is a unit
/// to the `alpha` position and rescaling by `-w^{-1}` gives an equivalent
/// simplex whose augmented row is the scaled weight row with that vertex
/// dropped. `s` is the least positive entry, or `1 + |u|` for a negative
/// entry `u`, over all such rows.
pub fn width_upper_bound(spec: &SimplexSpec) -> Result<WidthBound> {
    let d = spec.d();
    if d <= 1 {
        return Err(Error::PreconditionViolation(
            "width bound requires d > 1".into(),
        ));
    }
    let sum: i64 = spec.a().iter().sum();
    let mut weights = vec![1 - sum];
    weights.extend_from_slice(spec.a());
    weights.push(-1);
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (j, &w) in weights.iter().enumerate() {
        let w = w.rem_euclid(d);
        let Some(inv) = mod_inverse(w, d) else {
            continue;
        };
        let u = -inv;
        let row: Vec<i64> = weights
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .map(|(_, &x)| centered(u * x, d))
            .collect();
        if !rows.contains(&row) {
            rows.push(row);
        }
    }
    if rows.iter().flatten().any(|&v| v == 0) {
        return Err(Error::PreconditionViolation(format!(
            "{spec}: a reduced augmented entry is 0 (some edge carries lattice points)"
        )));
    }
    let s = rows
        .iter()
        .flatten()
        .map(|&u| if u > 0 { u } else { 1 + u.abs() })
        .min()
        .expect("the last vertex always has unit weight");
    Ok(WidthBound { s, rows })
}

fn mod_inverse(w: i64, d: i64) -> Option<i64> {
    let e = w.extended_gcd(&d);
    (e.gcd == 1).then(|| e.x.rem_euclid(d))
}

/// The `n = 3` construction for the pair `(a, x)` and `N`: write
/// `N = m x + r` with `1 <= r <= x` and take the lattice point `(1, 1, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairConstruction {
    pub m: i64,
    pub r: i64,
    pub point: [i64; 3],
    pub lambda_sum: Rat,
    /// `(N - x)(a - 1) >= x^2`.
    pub hypothesis: bool,
}

pub fn n3_construction(a: i64, x: i64, big_n: i64) -> Result<PairConstruction> {
    if !(2 <= a && a <= x) {
        return Err(invalid(format!("need 2 <= a <= x, got a={a}, x={x}")));
    }
    if big_n < 1 {
        return Err(invalid("N must be positive"));
    }
    let m = (big_n - 1).div_euclid(x);
    let r = big_n - m * x;
    // lambda_1 = 1 - m a / N, lambda_2 = r / N, lambda_3 = m / N
    let lambda_sum = Rat::new(big_n - m * a + r + m, big_n)?;
    Ok(PairConstruction {
        m,
        r,
        point: [1, 1, m],
        lambda_sum,
        hypothesis: (big_n - x) * (a - 1) >= x * x,
    })
}

/// The construction, when the hypothesis holds and it lands strictly inside.
pub fn n3_interior_witness(a: i64, x: i64, big_n: i64) -> Result<Option<PairConstruction>> {
    let c = n3_construction(a, x, big_n)?;
    let inside = c.m >= 1 && c.m * a < big_n && c.lambda_sum < Rat::int(1);
    Ok((c.hypothesis && inside).then_some(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> SimplexSpec {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let s = spec("3,5,7:30");
        assert_eq!(s.a(), &[3, 5, 7]);
        assert_eq!(s.d(), 30);
        assert_eq!(s.to_string(), "3,5,7:30");
        assert!("3,5,7".parse::<SimplexSpec>().is_err());
        assert!("3:5".parse::<SimplexSpec>().is_err());
        assert!("3,0:5".parse::<SimplexSpec>().is_err());
        assert!("3,4:0".parse::<SimplexSpec>().is_err());
        assert!("3,x:5".parse::<SimplexSpec>().is_err());
    }

    #[test]
    fn normalization_is_explicit() {
        let s = spec("5,12,7:5");
        assert!(!s.is_normalized());
        assert_eq!(s.normalize().unwrap().to_string(), "2,2:5");
        assert!(spec("2,3:13").is_normalized());
        assert!(!spec("2,4:6").is_normalized());
    }

    #[test]
    fn points_2_3_12_are_all_boundary() {
        let pts = enumerate_non_extreme_points(&spec("2,3:12"));
        assert!(pts.iter().all(|p| p.location == Location::FacetBoundary));
        let k3 = pts.iter().find(|p| p.k == 3).unwrap();
        assert_eq!(k3.lambda_sum, Rat::int(1));
        let k4 = pts.iter().find(|p| p.k == 4).unwrap();
        assert_eq!(k4.coords, vec![1, 1, 4]);
        assert!(pts.windows(2).all(|w| w[0].k < w[1].k));
    }

    #[test]
    fn points_2_3_13_has_interior_1_1_4() {
        let pts = enumerate_non_extreme_points(&spec("2,3:13"));
        let p = pts.iter().find(|p| p.k == 4).unwrap();
        assert_eq!(p.coords, vec![1, 1, 4]);
        assert_eq!(p.location, Location::Interior);
        assert_eq!(p.lambda_sum, Rat::new(10, 13).unwrap());
    }

    #[test]
    fn trivial_tuple_has_no_interior() {
        let pts = enumerate_non_extreme_points(&spec("1,1:5"));
        assert!(pts.iter().all(|p| p.location != Location::Interior));
    }

    #[test]
    fn hollow_examples() {
        assert!(is_hollow(&spec("3,5,7:30")).hollow);
        let v = is_hollow(&spec("2,3:13"));
        assert!(!v.hollow);
        assert_eq!(v.witness.unwrap().k, 4);
        assert!(is_hollow(&spec("1,7:9")).hollow);
    }

    #[test]
    fn empty_examples() {
        assert!(is_empty(&spec("3,5,7:31")));
        assert!(!is_empty(&spec("3,5,7:35")));
        assert!(is_empty(&spec("1,1:1")));
        assert!(!is_empty(&spec("2,4:6")));
    }

    #[test]
    fn coords_are_the_barycentric_combination() {
        // coords = sum lambda_i e_i + (k/d) alpha, checked with rationals
        for s in ["2,3:13", "3,5,7:35", "2,4:6", "4,6,9:40"] {
            let s = spec(s);
            for p in enumerate_non_extreme_points(&s) {
                let d = s.d();
                for (i, &ai) in s.a().iter().enumerate() {
                    let frac = Rat::new((p.k * ai).rem_euclid(d), d).unwrap();
                    let lam = if frac == Rat::int(0) { Rat::int(0) } else { Rat::int(1) - frac };
                    let c = lam + Rat::new(p.k * ai, d).unwrap();
                    assert_eq!(c, Rat::int(p.coords[i]));
                }
            }
        }
    }

    #[test]
    fn sufficient_conditions() {
        assert_eq!(empty_sufficient(&spec("1,2:5")), Some(EmptyReason::UnitEntry));
        assert_eq!(empty_sufficient(&spec("3,5,7:31")), None);
        assert!(zero_sum_union(&spec("3,5,7:31")).is_empty());
        assert_eq!(empty_sufficient(&spec("2,4:6")), None);
        // 2 + 3 = 5: U = {1, 2}, cont(2, 3, 5) = 1
        assert_eq!(empty_sufficient(&spec("2,3,4:5")), Some(EmptyReason::GcdUnion));
        assert!(is_empty(&spec("2,3,4:5")));
    }

    #[test]
    fn facet_volume_examples() {
        let f = facet_volumes(&spec("3,5,7:30"));
        assert_eq!(f.volumes, vec![1, 3, 5, 1, 2]);
        assert_eq!(f.standard_count, 2);
        assert_eq!(facet_volumes(&spec("1,1:1")).volumes, vec![1, 1, 1, 1]);
        let s = spec("3,5,7:30");
        assert_eq!(facet_cotorsion_oracle(&s, 0).unwrap(), 1);
        assert_eq!(facet_cotorsion_oracle(&s, 1).unwrap(), 3);
        assert_eq!(facet_cotorsion_oracle(&s, 4).unwrap(), 2);
        assert!(facet_cotorsion_oracle(&s, 5).is_err());
    }

    #[test]
    fn bareiss_small() {
        assert_eq!(det_bareiss(vec![vec![2, 0], vec![0, 3]]), 6);
        assert_eq!(det_bareiss(vec![vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(det_bareiss(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]), -3);
        assert_eq!(det_bareiss(vec![vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn width_one_examples() {
        let s = spec("2,3,3,3,4:12");
        let t = width_one(&s).unwrap().unwrap();
        // size 4 is the least size that works; {1,2,3,5} precedes {1,3,4,5}
        assert_eq!(t, vec![1, 2, 3, 5]);
        let phi = width_one_functional(&s, &t).unwrap();
        assert_eq!(functional_width(&s, &phi), 1);
        let phi = width_one_functional(&s, &[1, 3, 4, 5]).unwrap();
        assert_eq!(functional_width(&s, &phi), 1);

        assert_eq!(width_one(&spec("1,5:7")).unwrap(), Some(vec![1]));
        assert_eq!(width_one(&spec("2,2:5")).unwrap(), None);
        assert!(width_one(&spec("2,2:1")).is_err());
    }

    #[test]
    fn width_bound_examples() {
        let b = width_upper_bound(&spec("2,3,3,3,4:12")).unwrap();
        assert_eq!(b.s, 2);
        assert_eq!(b.rows, vec![vec![-2, 2, 3, 3, 3, 4]]);

        let b = width_upper_bound(&spec("2,3,3,4:12")).unwrap();
        assert_eq!(b.s, 1);
        assert_eq!(b.rows.len(), 2);
        assert!(b.rows.contains(&vec![1, 2, 3, 3, 4]));
        let mut other = vec![1, -2, -3, -3, -4];
        other.sort();
        assert!(b.rows.iter().any(|r| {
            let mut r = r.clone();
            r.sort();
            r == other
        }));

        assert_eq!(width_upper_bound(&spec("1,1:3")).unwrap().s, 1);
        assert!(matches!(
            width_upper_bound(&spec("2,6:6")),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn pair_construction_examples() {
        let w = n3_interior_witness(2, 3, 13).unwrap().unwrap();
        assert_eq!(w.point, [1, 1, 4]);
        assert_eq!(w.lambda_sum, Rat::new(10, 13).unwrap());

        let c = n3_construction(2, 3, 12).unwrap();
        assert!(c.hypothesis);
        assert_eq!(c.lambda_sum, Rat::int(1));
        assert_eq!(n3_interior_witness(2, 3, 12).unwrap(), None);
        assert!(is_hollow(&spec("2,3:12")).hollow);

        assert!(!n3_construction(2, 3, 5).unwrap().hypothesis);
        assert_eq!(n3_interior_witness(2, 3, 5).unwrap(), None);
        assert!(n3_construction(1, 3, 5).is_err());
        assert!(n3_construction(4, 3, 5).is_err());
    }
}
