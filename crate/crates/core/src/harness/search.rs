//! Exhaustive integer searches over parameter space.
//!
//! Each search settles a sharpness question about the two-sided bound
//! `Q <= lambda_max <= Q * tau` by exact integer arithmetic — no floats, so
//! an empty witness list is a proof over the scanned range, and every
//! reported witness can be rechecked by hand.

use serde::{Deserialize, Serialize};

use crate::rational::Rational;

use super::HarnessError;

/// Largest `n_max` accepted by [`tau_upper_search`].
pub const TAU_SEARCH_MAX: usize = 2000;

/// Largest `n_max` accepted by [`epsilon_witness_search`].
pub const EPSILON_SEARCH_MAX: usize = 600;

/// Largest entry accepted by [`no_linear_shift_bound`].
pub const SHIFT_SEARCH_MAX: usize = 100_000;

/// A degree pair `(lo, hi)` on `n` vertices where tau would reach `0.54 n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauViolation {
    pub n: usize,
    pub lo: usize,
    pub hi: usize,
    pub lhs: i64,
    pub rhs: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauSearchResult {
    pub n_max: usize,
    /// Number of `(n, lo, hi)` triples covered by the scan.
    pub scanned: u64,
    pub violations: u64,
    pub witnesses: Vec<TauViolation>,
}

/// Scans all degree pairs `1 <= lo <= hi <= n - 1` for `n <= n_max`,
/// asking whether `tau = (hi - lo + n) lo / (lo + hi)` can reach `0.54 n`,
/// i.e. whether `50 lo (hi - lo + n) >= 27 n (lo + hi)` has a solution.
///
/// It never does: tau tops out at `n/2` (on regular degree pairs), so the
/// witness list stays empty. The left side is linear in `hi`, so checking
/// the two extreme values of `hi` per `(n, lo)` pair covers every triple;
/// a row is only enumerated in full if an endpoint violates.
pub fn tau_upper_search(n_max: usize) -> Result<TauSearchResult, HarnessError> {
    if !(3..=TAU_SEARCH_MAX).contains(&n_max) {
        return Err(HarnessError::InvalidRange {
            message: format!("tau search needs 3 <= n_max <= {TAU_SEARCH_MAX}, got {n_max}"),
        });
    }
    let mut scanned: u64 = 0;
    let mut violations: u64 = 0;
    let mut witnesses = Vec::new();
    for n in 3..=n_max as i64 {
        for lo in 1..n {
            let violates = |hi: i64| 50 * lo * (hi - lo + n) >= 27 * n * (lo + hi);
            scanned += (n - lo) as u64;
            if violates(lo) || violates(n - 1) {
                for hi in lo..n {
                    if violates(hi) {
                        violations += 1;
                        witnesses.push(TauViolation {
                            n: n as usize,
                            lo: lo as usize,
                            hi: hi as usize,
                            lhs: 50 * lo * (hi - lo + n),
                            rhs: 27 * n * (lo + hi),
                        });
                    }
                }
            }
        }
    }
    Ok(TauSearchResult {
        n_max,
        scanned,
        violations,
        witnesses,
    })
}

/// A parameter triple `(n, k, d)` of the one-sided family whose exact
/// eigenvalue exceeds `0.53 n` times the degree bound `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsilonWitness {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub lhs: i64,
    pub rhs: i64,
    /// `lambda_max / Q = (d + k)(n - k) / (d + n - k)`, exactly.
    pub lambda_over_q: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsilonSearchResult {
    pub n_max: usize,
    /// Buildable triples evaluated.
    pub scanned: u64,
    pub violations: u64,
    pub witnesses: Vec<EpsilonWitness>,
    /// The scanned triple maximizing `lambda_over_q / n`.
    pub best: Option<EpsilonWitness>,
}

/// Scans the one-sided family over `n <= n_max`, restricted to buildable
/// parameters in the exact-eigenvalue regime `d >= n - k`, and reports
/// every triple with `lambda_max / Q > 0.53 n`, i.e. with
/// `100 (d + k)(n - k) > 53 n (d + n - k)`.
///
/// Witnesses exist from `n = 20` on, showing that the worst-case factor
/// between the two sides of the main bound really does grow linearly with
/// a coefficient above 1/2; the supremum of `lambda_over_q / n` over the
/// family is `4 - 2 sqrt(3) = 0.5358...`.
pub fn epsilon_witness_search(n_max: usize) -> Result<EpsilonSearchResult, HarnessError> {
    if !(3..=EPSILON_SEARCH_MAX).contains(&n_max) {
        return Err(HarnessError::InvalidRange {
            message: format!(
                "epsilon search needs 3 <= n_max <= {EPSILON_SEARCH_MAX}, got {n_max}"
            ),
        });
    }
    let mut scanned: u64 = 0;
    let mut violations: u64 = 0;
    let mut witnesses = Vec::new();
    let mut best: Option<(i64, i64, EpsilonWitness)> = None;
    for n in 3..=n_max {
        for k in 1..=n - 2 {
            let m = n - k;
            for d in k.max(m)..=n - 1 {
                if (d - k) % 2 == 1 && m % 2 == 1 {
                    continue; // not buildable
                }
                scanned += 1;
                let (ni, ki, di, mi) = (n as i64, k as i64, d as i64, m as i64);
                let lhs = 100 * (di + ki) * mi;
                let rhs = 53 * ni * (di + mi);
                let witness = EpsilonWitness {
                    n,
                    k,
                    d,
                    lhs,
                    rhs,
                    lambda_over_q: Rational::new((di + ki) * mi, di + mi),
                };
                if lhs > rhs {
                    violations += 1;
                    witnesses.push(witness);
                }
                // ratio/n = (d + k)(n - k) / (n (d + n - k)), compared
                // exactly by cross-multiplication.
                let (num, den) = ((di + ki) * mi, ni * (di + mi));
                let better = match &best {
                    None => true,
                    Some((bn, bd, _)) => num * bd > bn * den,
                };
                if better {
                    best = Some((num, den, witness));
                }
            }
        }
    }
    Ok(EpsilonSearchResult {
        n_max,
        scanned,
        violations,
        witnesses,
        best: best.map(|(_, _, w)| w),
    })
}

/// One row of the family refuting any bound of the shape
/// `lambda_max <= Q * (n/2 + C)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftExcessRow {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// Exact top eigenvalue `(d + k) / d`.
    pub lambda_max: Rational,
    /// Exact ratio `lambda_max / Q = (15 n^2 - 12 n) / (28 n - 16)`.
    pub lambda_over_q: Rational,
    /// `lambda_over_q - n/2 = (n^2 - 4n) / (28 n - 16)`, which grows
    /// without bound.
    pub excess_over_half_n: Rational,
}

/// Evaluates the family `(n, k = n/4, d = n - 1)` for each requested
/// `n = 8, 12, 16, ...` (multiples of 4). Every member is buildable and in
/// the exact-eigenvalue regime, and the excess of `lambda_max / Q` over
/// `n/2` is strictly increasing — so no constant shift `C` can rescue a
/// `Q * (n/2 + C)` upper bound.
pub fn no_linear_shift_bound(n_list: &[usize]) -> Result<Vec<ShiftExcessRow>, HarnessError> {
    if n_list.is_empty() {
        return Err(HarnessError::InvalidRange {
            message: "shift search needs at least one n".to_string(),
        });
    }
    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        if n < 8 || n % 4 != 0 || n > SHIFT_SEARCH_MAX {
            return Err(HarnessError::InvalidRange {
                message: format!(
                    "shift search needs multiples of 4 with 8 <= n <= {SHIFT_SEARCH_MAX}, got {n}"
                ),
            });
        }
        let k = n / 4;
        let d = n - 1;
        let m = n - k;
        debug_assert!(d >= m, "always in the exact regime");
        debug_assert!((d - k) % 2 == 0 || m % 2 == 0, "always buildable");
        let (ni, ki, di, mi) = (n as i64, k as i64, d as i64, m as i64);
        let lambda_over_q = Rational::new((di + ki) * mi, di + mi);
        rows.push(ShiftExcessRow {
            n,
            k,
            d,
            lambda_max: Rational::new(di + ki, di),
            lambda_over_q,
            excess_over_half_n: lambda_over_q - Rational::new(ni, 2),
        });
    }
    Ok(rows)
}
