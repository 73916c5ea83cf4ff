//! Constructors for graph families with predictable extremal spectra.
//!
//! The centerpiece is the *one-sided* family: a `k`-vertex independent set
//! joined completely to an `(d - k)`-regular circulant on the remaining
//! `n - k` vertices. Every joined vertex ends with degree `n - k`, every
//! circulant vertex with degree `d`. For `d >= n - k` the largest
//! normalized-Laplacian eigenvalue is exactly `(d + k) / d`, which makes the
//! family a sharp stress test for eigenvalue bounds driven by degrees; for
//! smaller `d` the value is only pinned inside `[(d + k) / d, n / d]`.
//!
//! Classical families (complete, complete bipartite, cycle, path, petal) are
//! provided both for their own sake and because each one is a specialization
//! or a degenerate corner of the one-sided construction.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("InvalidParameters: {reason}")]
    InvalidParameters { reason: String },
    #[error(
        "ParityImpossible: no {r}-regular circulant on {m} vertices exists; \
         r and m cannot both be odd"
    )]
    ParityImpossible { m: usize, r: usize },
    #[error(
        "NonExistent: no admissible graph for (n={n}, k={k}, d={d}); \
         d-k and n-k are both odd"
    )]
    NonExistent { n: usize, k: usize, d: usize },
}

fn invalid(reason: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameters {
        reason: reason.into(),
    }
}

/// Validated parameters `(n, k, d)` for the one-sided construction:
/// `n >= 3` vertices total, `1 <= k <= n - 2` joined vertices, and a target
/// degree `k <= d <= n - 1` for the circulant side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OneSidedParams {
    n: usize,
    k: usize,
    d: usize,
}

impl OneSidedParams {
    pub fn new(n: usize, k: usize, d: usize) -> Result<OneSidedParams, FamilyError> {
        if n < 3 {
            return Err(invalid(format!("need n >= 3 vertices, got n={n}")));
        }
        if k == 0 || k > n - 2 {
            return Err(invalid(format!(
                "need 1 <= k <= n-2 joined vertices, got k={k} with n={n}"
            )));
        }
        if d < k || d > n - 1 {
            return Err(invalid(format!(
                "need k <= d <= n-1, got d={d} with k={k}, n={n}"
            )));
        }
        Ok(OneSidedParams { n, k, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Vertices on the circulant side.
    pub fn m(&self) -> usize {
        self.n - self.k
    }

    /// Internal degree of the circulant side.
    pub fn r(&self) -> usize {
        self.d - self.k
    }
}

/// Whether the one-sided graph exists: the `(d - k)`-regular circulant on
/// `n - k` vertices needs one of those two numbers even.
pub fn exists_one_sided(params: &OneSidedParams) -> bool {
    params.r().is_multiple_of(2) || params.m().is_multiple_of(2)
}

/// The edge set of the standard `r`-regular circulant on `m` vertices:
/// offsets `1..=r/2` around the ring, plus the antipodal matching when `r`
/// is odd (which forces `m` even). `r = 0` yields an empty edge set.
pub fn circulant_edges(m: usize, r: usize) -> Result<Vec<(usize, usize)>, FamilyError> {
    if m == 0 || r >= m {
        return Err(invalid(format!(
            "a circulant needs 0 <= r < m, got m={m}, r={r}"
        )));
    }
    if r % 2 == 1 && m % 2 == 1 {
        return Err(FamilyError::ParityImpossible { m, r });
    }
    let mut edges = Vec::with_capacity(m * r / 2);
    for offset in 1..=r / 2 {
        for i in 0..m {
            let j = (i + offset) % m;
            edges.push((i.min(j), i.max(j)));
        }
    }
    if r % 2 == 1 {
        for i in 0..m / 2 {
            edges.push((i, i + m / 2));
        }
    }
    edges.sort_unstable();
    Ok(edges)
}

/// The `r`-regular circulant on `m` vertices as a graph (`r >= 1`, since
/// graphs here have no isolated vertices).
pub fn circulant_regular(m: usize, r: usize) -> Result<Graph, FamilyError> {
    if r == 0 {
        return Err(invalid("a 0-regular circulant has no edges"));
    }
    let edges = circulant_edges(m, r)?;
    Ok(Graph::from_edge_list(m, &edges).expect("circulant construction is valid"))
}

/// Builds the one-sided graph: vertices `0..n-k` form the circulant side,
/// vertices `n-k..n` the joined independent set.
pub fn build_one_sided(params: &OneSidedParams) -> Result<Graph, FamilyError> {
    if !exists_one_sided(params) {
        return Err(FamilyError::NonExistent {
            n: params.n,
            k: params.k,
            d: params.d,
        });
    }
    let m = params.m();
    let mut edges = circulant_edges(m, params.r())?;
    for joined in m..params.n {
        for i in 0..m {
            edges.push((i, joined));
        }
    }
    Ok(Graph::from_edge_list(params.n, &edges).expect("one-sided construction is valid"))
}

/// Prediction for the largest normalized-Laplacian eigenvalue of the
/// one-sided graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LambdaPrediction {
    Exact(Rational),
    Interval { lower: Rational, upper: Rational },
}

/// `(d + k) / d` exactly when `d >= n - k`; otherwise only the enclosure
/// `[(d + k) / d, n / d]` is guaranteed.
pub fn predict_lambda_max(params: &OneSidedParams) -> LambdaPrediction {
    let (n, k, d) = (params.n as i64, params.k as i64, params.d as i64);
    let lower = Rational::new(d + k, d);
    if params.d >= params.m() {
        LambdaPrediction::Exact(lower)
    } else {
        LambdaPrediction::Interval {
            lower,
            upper: Rational::new(n, d),
        }
    }
}

/// The degree bound `Q` of the one-sided graph, in closed form.
///
/// When `d >= n - k` the two degrees present are `d >= n - k`, and a
/// joined-to-circulant edge attains `1/d + 1/(n - k)`. When `d = k` the
/// circulant side is empty, the graph is complete bipartite and only such
/// edges exist. Otherwise (`k < d < n - k`) the circulant-internal edges
/// win with `2/d`.
pub fn predict_q(params: &OneSidedParams) -> Rational {
    let (n, k, d) = (params.n as i64, params.k as i64, params.d as i64);
    if params.d >= params.m() || params.d == params.k {
        Rational::new(1, d) + Rational::new(1, n - k)
    } else {
        Rational::new(2, d)
    }
}

/// The complete graph on `n >= 2` vertices.
pub fn complete_graph(n: usize) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(invalid(format!("a complete graph needs n >= 2, got {n}")));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edge_list(n, &edges).expect("complete graph is valid"))
}

/// The complete bipartite graph with sides `0..a` and `a..a+b` (`a, b >= 1`).
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, FamilyError> {
    if a == 0 || b == 0 {
        return Err(invalid(format!(
            "a complete bipartite graph needs both sides nonempty, got {a} and {b}"
        )));
    }
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edge_list(a + b, &edges).expect("complete bipartite graph is valid"))
}

/// The cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(invalid(format!("a cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n))).collect();
    Ok(Graph::from_edge_list(n, &edges).expect("cycle is valid"))
}

/// The path on `n >= 2` vertices.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(invalid(format!("a path needs n >= 2, got {n}")));
    }
    let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Ok(Graph::from_edge_list(n, &edges).expect("path is valid"))
}

/// The petal graph: `m >= 1` triangles sharing the single center vertex 0.
/// Isomorphic to the one-sided graph with `k = 1`, `d = 2` on `2m + 1`
/// vertices.
pub fn petal(m: usize) -> Result<Graph, FamilyError> {
    if m == 0 {
        return Err(invalid("a petal graph needs at least one triangle"));
    }
    let mut edges: Vec<(usize, usize)> = (1..=2 * m).map(|i| (0, i)).collect();
    for i in 1..=m {
        edges.push((2 * i - 1, 2 * i));
    }
    Ok(Graph::from_edge_list(2 * m + 1, &edges).expect("petal is valid"))
}
