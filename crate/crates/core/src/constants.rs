//! The combinatorial constants, computed exactly.
//!
//! * `Q`: maximum over edges of `1/deg(u) + 1/deg(v)`. It is a lower bound
//!   for the largest normalized-Laplacian eigenvalue, and `Q * tau` an upper
//!   bound.
//! * `tau`: maximum over edges, endpoints ordered so `deg(w) >= deg(v)`, of
//!   `(deg(w) - deg(v) + n) * deg(v) / (deg(v) + deg(w))`.
//! * `h`: the Cheeger constant, `min |E(S, S^c)| / min(vol S, vol S^c)` over
//!   proper subsets, by exhaustive enumeration.
//! * `h_bar`: the dual-Cheeger constant, `max 2|E(V1, V2)| / (vol V1 + vol
//!   V2)` over disjoint nonempty `V1`, `V2`, by exhaustive enumeration.
//!
//! All four are returned as [`Rational`]s together with witnesses; argmax and
//! argmin ties break towards the lexicographically smallest witness. The L1
//! quotients that characterize `Q` (over edge functions) and `h` (over
//! shifted vertex functions) are evaluated here too, in floating point for
//! bulk sampling and in exact arithmetic for witness certification.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSubset};
use crate::rational::Rational;
use crate::spectral::{OrientedGraph, SpectralError};

/// Largest vertex count for the exhaustive Cheeger enumeration.
pub const CHEEGER_ENUM_MAX: usize = 22;

/// Largest vertex count for the exhaustive dual-Cheeger enumeration.
pub const DUAL_CHEEGER_ENUM_MAX: usize = 13;

/// Largest edge count for the bipartite-subgraph characterization of `Q`.
pub const BIPARTITE_SUBGRAPH_MAX_EDGES: usize = 18;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstantsError {
    #[error("NotConnected: this constant is only defined for connected graphs")]
    NotConnected,
    #[error("TooLarge: {what} {size} exceeds the enumeration limit {max}")]
    TooLarge {
        what: &'static str,
        size: usize,
        max: usize,
    },
    #[error("ZeroFunction: the function is identically zero")]
    ZeroFunction,
    #[error("ConstantFunction: the shifted quotient needs a non-constant function")]
    ConstantFunction,
    #[error("LengthMismatch: expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}

impl From<SpectralError> for ConstantsError {
    fn from(e: SpectralError) -> Self {
        match e {
            SpectralError::ZeroFunction => ConstantsError::ZeroFunction,
            SpectralError::LengthMismatch { expected, got } => {
                ConstantsError::LengthMismatch { expected, got }
            }
            other => unreachable!("unexpected spectral error in constants: {other}"),
        }
    }
}

/// `Q` and its lexicographically smallest witness edge.
pub fn q_constant(g: &Graph) -> (Rational, (usize, usize)) {
    let mut best: Option<(Rational, (usize, usize))> = None;
    for (u, v) in g.edges() {
        let value = edge_q_value(g, u, v);
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            best = Some((value, (u, v)));
        }
    }
    best.expect("graphs always have an edge")
}

/// `1/deg(u) + 1/deg(v)` for one edge.
pub fn edge_q_value(g: &Graph, u: usize, v: usize) -> Rational {
    let (du, dv) = (g.degree(u) as i64, g.degree(v) as i64);
    Rational::new(du + dv, du * dv)
}

/// `tau` and its lexicographically smallest witness edge.
pub fn tau_constant(g: &Graph) -> (Rational, (usize, usize)) {
    let n = g.vertex_count() as i64;
    let mut best: Option<(Rational, (usize, usize))> = None;
    for (u, v) in g.edges() {
        let (lo, hi) = if g.degree(u) <= g.degree(v) {
            (g.degree(u) as i64, g.degree(v) as i64)
        } else {
            (g.degree(v) as i64, g.degree(u) as i64)
        };
        let value = Rational::new((hi - lo + n) * lo, lo + hi);
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            best = Some((value, (u, v)));
        }
    }
    best.expect("graphs always have an edge")
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.vertex_count())
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(0u32, |acc, &w| acc | 1 << w)
        })
        .collect()
}

fn mask_members(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

/// Cheeger constant by exhaustive subset enumeration, with the
/// lexicographically smallest optimal subset.
///
/// Requires a connected graph with at most [`CHEEGER_ENUM_MAX`] vertices.
pub fn cheeger_constant(g: &Graph) -> Result<(Rational, VertexSubset), ConstantsError> {
    if !g.is_connected() {
        return Err(ConstantsError::NotConnected);
    }
    let n = g.vertex_count();
    if n > CHEEGER_ENUM_MAX {
        return Err(ConstantsError::TooLarge {
            what: "vertex count",
            size: n,
            max: CHEEGER_ENUM_MAX,
        });
    }
    let adj = adjacency_masks(g);
    let degrees: Vec<u64> = (0..n).map(|v| g.degree(v) as u64).collect();
    let total: u64 = degrees.iter().sum();
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };

    // S and its complement give the same quotient, so fixing vertex 0 in S
    // loses nothing; the lexicographically smallest witness starts with 0.
    let mut best: Option<(u64, u64, u32)> = None; // (cut, min volume, mask)
    for mask in (1..full).step_by(2) {
        let outside = full & !mask;
        let mut cut: u64 = 0;
        let mut vol: u64 = 0;
        let mut bits = mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            cut += (adj[v] & outside).count_ones() as u64;
            vol += degrees[v];
        }
        let min_vol = vol.min(total - vol);
        let better = match &best {
            None => true,
            Some((bc, bm, bmask)) => {
                // cut/min_vol < bc/bm, comparing exactly.
                match (cut * bm).cmp(&(bc * min_vol)) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Greater => false,
                    std::cmp::Ordering::Equal => mask_members(mask) < mask_members(*bmask),
                }
            }
        };
        if better {
            best = Some((cut, min_vol, mask));
        }
    }
    let (cut, min_vol, mask) = best.expect("a proper subset exists for n >= 2");
    Ok((
        Rational::new(cut as i64, min_vol as i64),
        VertexSubset::from_mask(mask),
    ))
}

/// Dual-Cheeger constant by exhaustive enumeration of disjoint nonempty
/// pairs `(V1, V2)`, with the lexicographically smallest optimal pair.
///
/// Defined for any graph with at most [`DUAL_CHEEGER_ENUM_MAX`] vertices; it
/// is exactly 1 on graphs with a bipartite "core" (in particular on all
/// bipartite graphs) and below 1 otherwise.
pub fn dual_cheeger_constant(
    g: &Graph,
) -> Result<(Rational, (VertexSubset, VertexSubset)), ConstantsError> {
    let n = g.vertex_count();
    if n > DUAL_CHEEGER_ENUM_MAX {
        return Err(ConstantsError::TooLarge {
            what: "vertex count",
            size: n,
            max: DUAL_CHEEGER_ENUM_MAX,
        });
    }
    let adj = adjacency_masks(g);
    let full: u32 = (1 << n) - 1;
    // Volume of every subset, filled in by lowest set bit.
    let mut vol = vec![0u64; 1 << n];
    for mask in 1..=full {
        let low = mask.trailing_zeros() as usize;
        vol[mask as usize] = vol[(mask & (mask - 1)) as usize] + g.degree(low) as u64;
    }

    // Swapping V1 and V2 leaves the quotient unchanged, so demand that the
    // smallest assigned vertex sit in V1.
    let mut best: Option<(u64, u64, u32, u32)> = None; // (2*cut, vol sum, m1, m2)
    for m1 in 1..full {
        let comp = full & !m1;
        if comp == 0 {
            continue;
        }
        let t1 = m1.trailing_zeros();
        let mut m2 = comp;
        while m2 != 0 {
            if t1 < m2.trailing_zeros() {
                let mut cut: u64 = 0;
                let mut bits = m1;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    cut += (adj[v] & m2).count_ones() as u64;
                }
                let num = 2 * cut;
                let den = vol[m1 as usize] + vol[m2 as usize];
                let better = match &best {
                    None => true,
                    Some((bn, bd, bm1, bm2)) => match (num * bd).cmp(&(bn * den)) {
                        std::cmp::Ordering::Greater => true,
                        std::cmp::Ordering::Less => false,
                        std::cmp::Ordering::Equal => {
                            (mask_members(m1), mask_members(m2))
                                < (mask_members(*bm1), mask_members(*bm2))
                        }
                    },
                };
                if better {
                    best = Some((num, den, m1, m2));
                }
            }
            m2 = (m2 - 1) & comp;
        }
    }
    let (num, den, m1, m2) = best.expect("two vertices exist");
    Ok((
        Rational::new(num as i64, den as i64),
        (VertexSubset::from_mask(m1), VertexSubset::from_mask(m2)),
    ))
}

/// L1 quotient over edge functions:
/// `sum over vertices |netflow(v)| / deg(v)` divided by `sum |gamma|`.
///
/// Bounded above by `Q`, with equality on single-edge indicators of
/// `Q`-optimal edges.
pub fn l1_edge_quotient(og: &OrientedGraph, gamma: &[f64]) -> Result<f64, ConstantsError> {
    if gamma.len() != og.edge_count() {
        return Err(ConstantsError::LengthMismatch {
            expected: og.edge_count(),
            got: gamma.len(),
        });
    }
    if gamma.iter().all(|&x| x == 0.0) {
        return Err(ConstantsError::ZeroFunction);
    }
    let net = og.vertex_net_flow(gamma)?;
    let g = og.graph();
    let numerator: f64 = net
        .iter()
        .enumerate()
        .map(|(v, &x)| x.abs() / g.degree(v) as f64)
        .sum();
    let denominator: f64 = gamma.iter().map(|x| x.abs()).sum();
    Ok(numerator / denominator)
}

/// Exact-arithmetic version of [`l1_edge_quotient`]; used to certify that
/// witnesses achieve `Q` exactly.
pub fn l1_edge_quotient_exact(
    og: &OrientedGraph,
    gamma: &[Rational],
) -> Result<Rational, ConstantsError> {
    if gamma.len() != og.edge_count() {
        return Err(ConstantsError::LengthMismatch {
            expected: og.edge_count(),
            got: gamma.len(),
        });
    }
    if gamma.iter().all(Rational::is_zero) {
        return Err(ConstantsError::ZeroFunction);
    }
    let g = og.graph();
    let mut net = vec![Rational::zero(); g.vertex_count()];
    for (&(input, output), &value) in og.edges().iter().zip(gamma) {
        net[input] += value;
        net[output] += -value;
    }
    let numerator: Rational = net
        .iter()
        .enumerate()
        .map(|(v, x)| x.abs() * Rational::new(1, g.degree(v) as i64))
        .sum();
    let denominator: Rational = gamma.iter().map(Rational::abs).sum();
    Ok(numerator / denominator)
}

/// Plain L1 quotient over vertex functions:
/// `sum over edges |f(u) - f(v)|` divided by `sum deg(v) |f(v)|`.
///
/// Bounded above by 1, with equality on single-vertex indicators.
pub fn l1_vertex_quotient_plain(g: &Graph, f: &[f64]) -> Result<f64, ConstantsError> {
    if f.len() != g.vertex_count() {
        return Err(ConstantsError::LengthMismatch {
            expected: g.vertex_count(),
            got: f.len(),
        });
    }
    if f.iter().all(|&x| x == 0.0) {
        return Err(ConstantsError::ZeroFunction);
    }
    let numerator: f64 = g.edges().map(|(u, v)| (f[u] - f[v]).abs()).sum();
    let denominator: f64 = f
        .iter()
        .enumerate()
        .map(|(v, &x)| g.degree(v) as f64 * x.abs())
        .sum();
    Ok(numerator / denominator)
}

/// Best-shift L1 quotient over vertex functions:
/// `sum over edges |f(u) - f(v)|` divided by
/// `min over shifts t of sum deg(v) |f(v) - t|`.
///
/// The denominator is piecewise linear in `t`, so its minimum — a
/// degree-weighted median — is attained at one of the values of `f`; only
/// those shifts are evaluated. Bounded below by the Cheeger constant, with
/// equality on indicators of Cheeger-optimal subsets.
pub fn l1_vertex_quotient_maxt(g: &Graph, f: &[f64]) -> Result<f64, ConstantsError> {
    if f.len() != g.vertex_count() {
        return Err(ConstantsError::LengthMismatch {
            expected: g.vertex_count(),
            got: f.len(),
        });
    }
    let mut shifts = f.to_vec();
    shifts.sort_by(f64::total_cmp);
    shifts.dedup();
    if shifts.len() < 2 {
        return Err(ConstantsError::ConstantFunction);
    }
    let numerator: f64 = g.edges().map(|(u, v)| (f[u] - f[v]).abs()).sum();
    let denominator = shifts
        .iter()
        .map(|&t| {
            f.iter()
                .enumerate()
                .map(|(v, &x)| g.degree(v) as f64 * (x - t).abs())
                .sum::<f64>()
        })
        .fold(f64::INFINITY, f64::min);
    Ok(numerator / denominator)
}

/// Exact-arithmetic version of [`l1_vertex_quotient_maxt`]; certifies that
/// Cheeger witnesses achieve `h` exactly.
pub fn l1_vertex_quotient_maxt_exact(
    g: &Graph,
    f: &[Rational],
) -> Result<Rational, ConstantsError> {
    if f.len() != g.vertex_count() {
        return Err(ConstantsError::LengthMismatch {
            expected: g.vertex_count(),
            got: f.len(),
        });
    }
    let mut shifts = f.to_vec();
    shifts.sort();
    shifts.dedup();
    if shifts.len() < 2 {
        return Err(ConstantsError::ConstantFunction);
    }
    let numerator: Rational = g
        .edges()
        .map(|(u, v)| (f[u] - f[v]).abs())
        .sum();
    let denominator = shifts
        .iter()
        .map(|&t| {
            f.iter()
                .enumerate()
                .map(|(v, &x)| Rational::integer(g.degree(v) as i64) * (x - t).abs())
                .sum::<Rational>()
        })
        .min()
        .expect("at least two shifts");
    Ok(numerator / denominator)
}

/// `Q` recomputed through its bipartite-subgraph characterization: the
/// maximum over nonempty bipartite edge subsets `H` of
/// `sum over vertices deg_H(v)/deg(v)` divided by `|E(H)|`.
///
/// Exhaustive over all `2^|E| - 1` subsets; requires at most
/// [`BIPARTITE_SUBGRAPH_MAX_EDGES`] edges. Agrees exactly with
/// [`q_constant`] — a useful independent oracle, since single edges are
/// bipartite and averaging cannot beat the best edge.
pub fn q_via_bipartite_subgraphs(g: &Graph) -> Result<Rational, ConstantsError> {
    let m = g.edge_count();
    if m > BIPARTITE_SUBGRAPH_MAX_EDGES {
        return Err(ConstantsError::TooLarge {
            what: "edge count",
            size: m,
            max: BIPARTITE_SUBGRAPH_MAX_EDGES,
        });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let edge_values: Vec<Rational> = edges
        .iter()
        .map(|&(u, v)| edge_q_value(g, u, v))
        .collect();
    let n = g.vertex_count();
    let mut parent = vec![0usize; n];
    let mut parity = vec![0u8; n];

    let mut best: Option<Rational> = None;
    for mask in 1u32..1 << m {
        if !edge_subset_is_bipartite(&edges, mask, &mut parent, &mut parity) {
            continue;
        }
        let mut sum = Rational::zero();
        let mut count: i64 = 0;
        let mut bits = mask;
        while bits != 0 {
            let e = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            sum += edge_values[e];
            count += 1;
        }
        let value = sum / Rational::integer(count);
        if best.as_ref().is_none_or(|b| value > *b) {
            best = Some(value);
        }
    }
    Ok(best.expect("single edges are bipartite"))
}

/// Union-find with parities: false as soon as an odd cycle closes.
fn edge_subset_is_bipartite(
    edges: &[(usize, usize)],
    mask: u32,
    parent: &mut [usize],
    parity: &mut [u8],
) -> bool {
    for (i, p) in parent.iter_mut().enumerate() {
        *p = i;
    }
    parity.fill(0);

    fn find(parent: &[usize], parity: &[u8], mut x: usize) -> (usize, u8) {
        let mut p = 0;
        while parent[x] != x {
            p ^= parity[x];
            x = parent[x];
        }
        (x, p)
    }

    let mut bits = mask;
    while bits != 0 {
        let e = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let (u, v) = edges[e];
        let (ru, pu) = find(parent, parity, u);
        let (rv, pv) = find(parent, parity, v);
        if ru == rv {
            if pu == pv {
                return false;
            }
        } else {
            parent[ru] = rv;
            parity[ru] = pu ^ pv ^ 1;
        }
    }
    true
}

/// Removes the degree-weighted mean: the result is orthogonal to constants
/// in the degree inner product, as the shifted-quotient bounds require.
pub fn orthogonalize_to_constants(g: &Graph, f: &[f64]) -> Vec<f64> {
    assert_eq!(f.len(), g.vertex_count(), "one value per vertex");
    let vol = g.total_volume() as f64;
    let mean: f64 = f
        .iter()
        .enumerate()
        .map(|(v, &x)| g.degree(v) as f64 * x)
        .sum::<f64>()
        / vol;
    f.iter().map(|&x| x - mean).collect()
}

/// Everything the bounds checker wants to know about a graph's constants.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantsRecord {
    pub q: Rational,
    pub q_argmax_edge: (usize, usize),
    pub tau: Rational,
    pub tau_argmax_edge: (usize, usize),
    /// Exact upper bound `Q * tau`.
    pub q_times_tau: Rational,
    /// Present when the graph is connected and small enough to enumerate.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub h: Option<CheegerWitness>,
    /// Present when the graph is small enough to enumerate.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub h_bar: Option<DualCheegerWitness>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheegerWitness {
    pub value: Rational,
    pub subset: VertexSubset,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DualCheegerWitness {
    pub value: Rational,
    pub part_one: VertexSubset,
    pub part_two: VertexSubset,
}

impl ConstantsRecord {
    /// Computes whatever is in range: `Q` and `tau` always, `h` when the
    /// graph is connected with at most [`CHEEGER_ENUM_MAX`] vertices,
    /// `h_bar` when it has at most [`DUAL_CHEEGER_ENUM_MAX`] vertices.
    pub fn compute(g: &Graph) -> ConstantsRecord {
        let (q, q_argmax_edge) = q_constant(g);
        let (tau, tau_argmax_edge) = tau_constant(g);
        let h = cheeger_constant(g)
            .ok()
            .map(|(value, subset)| CheegerWitness { value, subset });
        let h_bar = dual_cheeger_constant(g)
            .ok()
            .map(|(value, (part_one, part_two))| DualCheegerWitness {
                value,
                part_one,
                part_two,
            });
        ConstantsRecord {
            q,
            q_argmax_edge,
            tau,
            tau_argmax_edge,
            q_times_tau: q * tau,
            h,
            h_bar,
        }
    }
}
