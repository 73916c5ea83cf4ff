//! Laplacian matrices and residual-certified dense spectra.
//!
//! Three matrices are attached to a graph here:
//!
//! * the normalized Laplacian `L = I - D^{-1} A` (not symmetric),
//! * its symmetric conjugate `S = I - D^{-1/2} A D^{-1/2}` (same spectrum),
//! * the edge Laplacian `B^T D^{-1} B` built from a choice of edge
//!   orientations, whose nonzero spectrum agrees with `L`'s and whose kernel
//!   dimension is the cycle-space dimension `|E| - |V| + #components`.
//!
//! Spectra are computed with cyclic Jacobi rotations driven to a tiny
//! off-diagonal norm, then certified a posteriori: the returned
//! `residual_bound` is the largest `||M v - lambda v||_2` over all returned
//! eigenpairs, recomputed against the original matrix, and must not exceed
//! the caller's tolerance. Eigenvalues come back ascending.

use thiserror::Error;

use crate::graph::Graph;
use crate::matrix::{DenseMatrix, DenseSymmetricMatrix};

/// Default residual tolerance for spectra.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Eigenvalues below this threshold (in absolute value) count as zero when
/// classifying kernel dimensions.
pub const ZERO_EIGENVALUE_TOL: f64 = 1e-8;

/// Default cap on the order of a dense eigenproblem; override with the
/// `CHEEGERLAB_MAX_N` environment variable (at your own risk — Jacobi is
/// cubic per sweep).
pub const DEFAULT_MAX_DENSE_ORDER: usize = 2048;

/// Environment variable overriding [`DEFAULT_MAX_DENSE_ORDER`].
pub const MAX_N_ENV: &str = "CHEEGERLAB_MAX_N";

const OFF_NORM_TARGET: f64 = 1e-12;
const MAX_SWEEPS: usize = 60;
const GRAM_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("ConvergenceFailure: off-diagonal norm {off_norm:e} after {sweeps} Jacobi sweeps")]
    ConvergenceFailure { sweeps: usize, off_norm: f64 },
    #[error("certification failed: {quantity} = {value:e} exceeds {limit:e}")]
    Certification {
        quantity: &'static str,
        value: f64,
        limit: f64,
    },
    #[error("TooLarge: dense eigenproblem of order {dim} exceeds guard {max} (set {MAX_N_ENV} to raise it)")]
    TooLarge { dim: usize, max: usize },
    #[error("ZeroFunction: the function is identically zero")]
    ZeroFunction,
    #[error("LengthMismatch: expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}

/// Current cap on dense eigenproblem order.
pub fn max_dense_order() -> usize {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&v| v > 0)
        .unwrap_or(DEFAULT_MAX_DENSE_ORDER)
}

fn max_edge_order() -> usize {
    2 * max_dense_order()
}

/// A graph together with a direction for every edge.
///
/// Every spectral quantity derived from an orientation is invariant under
/// reversing edges; the canonical constructor orients each edge from its
/// smaller to its larger endpoint, and [`OrientedGraph::with_flips`] exists
/// so tests can verify the invariance.
#[derive(Debug, Clone, PartialEq)]
pub struct OrientedGraph {
    graph: Graph,
    edges: Vec<(usize, usize)>,
}

impl OrientedGraph {
    /// Canonical orientation: each edge `(u, v)` with `u < v` points from
    /// `u` (input) to `v` (output); edges are in lexicographic order.
    pub fn new(graph: &Graph) -> Self {
        let edges = graph.edges().collect();
        OrientedGraph {
            graph: graph.clone(),
            edges,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Directed edges as `(input, output)` pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Copy with the selected edges reversed. The underlying undirected
    /// graph is unchanged.
    pub fn with_flips(&self, flips: &[bool]) -> Self {
        assert_eq!(flips.len(), self.edges.len(), "one flip flag per edge");
        let edges = self
            .edges
            .iter()
            .zip(flips)
            .map(|(&(a, b), &f)| if f { (b, a) } else { (a, b) })
            .collect();
        OrientedGraph {
            graph: self.graph.clone(),
            edges,
        }
    }

    /// Net flow into each vertex: incoming minus outgoing values of `gamma`,
    /// accumulated in edge order (so the floating-point result is exactly
    /// reproducible and exactly invariant under flip-plus-negate).
    pub fn vertex_net_flow(&self, gamma: &[f64]) -> Result<Vec<f64>, SpectralError> {
        if gamma.len() != self.edges.len() {
            return Err(SpectralError::LengthMismatch {
                expected: self.edges.len(),
                got: gamma.len(),
            });
        }
        let mut net = vec![0.0; self.graph.vertex_count()];
        for (&(input, output), &value) in self.edges.iter().zip(gamma) {
            net[input] += value;
            net[output] -= value;
        }
        Ok(net)
    }
}

/// `L = I - D^{-1} A`; row `v` holds `-1/deg(v)` at the neighbors of `v`.
pub fn normalized_laplacian(g: &Graph) -> DenseMatrix {
    let n = g.vertex_count();
    let mut m = DenseMatrix::zeros(n, n);
    for v in 0..n {
        m.set(v, v, 1.0);
        let inv_deg = 1.0 / g.degree(v) as f64;
        for &w in g.neighbors(v) {
            m.set(v, w, -inv_deg);
        }
    }
    m
}

/// `S = I - D^{-1/2} A D^{-1/2}`, similar to the normalized Laplacian and
/// therefore sharing its spectrum.
pub fn symmetric_laplacian(g: &Graph) -> DenseSymmetricMatrix {
    DenseSymmetricMatrix::from_fn(g.vertex_count(), |i, j| {
        if i == j {
            1.0
        } else if g.has_edge(i, j) {
            -1.0 / ((g.degree(i) * g.degree(j)) as f64).sqrt()
        } else {
            0.0
        }
    })
}

/// Vertex-by-edge incidence matrix: `+1` at an edge's input vertex, `-1` at
/// its output. Every column sums to zero.
pub fn incidence_matrix(og: &OrientedGraph) -> DenseMatrix {
    let n = og.graph().vertex_count();
    let mut m = DenseMatrix::zeros(n, og.edge_count());
    for (e, &(input, output)) in og.edges().iter().enumerate() {
        m.set(input, e, 1.0);
        m.set(output, e, -1.0);
    }
    m
}

/// Edge Laplacian `B^T D^{-1} B` where `B` is the incidence matrix.
///
/// Entry `(e, f)` sums `sign_e(v) * sign_f(v) / deg(v)` over shared
/// endpoints; the diagonal entry of an edge is `1/deg(u) + 1/deg(v)`.
pub fn edge_laplacian(og: &OrientedGraph) -> Result<DenseSymmetricMatrix, SpectralError> {
    let m = og.edge_count();
    let max = max_edge_order();
    if m > max {
        return Err(SpectralError::TooLarge { dim: m, max });
    }
    let g = og.graph();
    // Incident (edge index, sign) pairs per vertex.
    let mut incident: Vec<Vec<(usize, f64)>> = vec![Vec::new(); g.vertex_count()];
    for (e, &(input, output)) in og.edges().iter().enumerate() {
        incident[input].push((e, 1.0));
        incident[output].push((e, -1.0));
    }
    let mut out = DenseSymmetricMatrix::zeros(m);
    for (v, edges) in incident.iter().enumerate() {
        let inv_deg = 1.0 / g.degree(v) as f64;
        for (i, &(e, se)) in edges.iter().enumerate() {
            for &(f, sf) in &edges[i..] {
                out.add_sym(e, f, se * sf * inv_deg);
            }
        }
    }
    Ok(out)
}

/// Eigenvalues (ascending), eigenvectors (as matrix columns) and the
/// a-posteriori residual bound certifying them.
#[derive(Debug, Clone)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    eigenvectors: DenseMatrix,
    residual_bound: f64,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn order(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn lambda_max(&self) -> f64 {
        *self.eigenvalues.last().expect("nonempty spectrum")
    }

    /// Second-smallest eigenvalue.
    pub fn lambda_2(&self) -> f64 {
        assert!(self.eigenvalues.len() >= 2, "need at least two eigenvalues");
        self.eigenvalues[1]
    }

    /// Unit eigenvector for `eigenvalues()[i]`.
    pub fn eigenvector(&self, i: usize) -> Vec<f64> {
        self.eigenvectors.column(i)
    }

    pub fn eigenvectors(&self) -> &DenseMatrix {
        &self.eigenvectors
    }

    pub fn residual_bound(&self) -> f64 {
        self.residual_bound
    }

    /// Number of eigenvalues within [`ZERO_EIGENVALUE_TOL`] of zero.
    pub fn zero_multiplicity(&self) -> usize {
        self.eigenvalues
            .iter()
            .filter(|l| l.abs() < ZERO_EIGENVALUE_TOL)
            .count()
    }

    pub fn nonzero_eigenvalues(&self) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .copied()
            .filter(|l| l.abs() >= ZERO_EIGENVALUE_TOL)
            .collect()
    }
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                sum += a[p * n + q] * a[p * n + q];
            }
        }
    }
    sum.sqrt()
}

/// Cyclic Jacobi: returns `(diagonal, accumulated rotations, sweeps used)`.
fn jacobi(m: &DenseSymmetricMatrix) -> Result<(Vec<f64>, DenseMatrix, usize), SpectralError> {
    let n = m.order();
    let mut a: Vec<f64> = (0..n * n).map(|i| m.get(i / n, i % n)).collect();
    let mut v = DenseMatrix::identity(n);

    for sweep in 0..=MAX_SWEEPS {
        let off = off_norm(&a, n);
        if off <= OFF_NORM_TARGET {
            let diag = (0..n).map(|i| a[i * n + i]).collect();
            return Ok((diag, v, sweep));
        }
        if sweep == MAX_SWEEPS {
            return Err(SpectralError::ConvergenceFailure {
                sweeps: sweep,
                off_norm: off,
            });
        }
        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                // Smaller-magnitude root of t^2 + 2*theta*t - 1 = 0; the
                // large-theta branch avoids squaring overflow.
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r * n + p];
                    let arq = a[r * n + q];
                    let new_rp = c * arp - s * arq;
                    let new_rq = s * arp + c * arq;
                    a[r * n + p] = new_rp;
                    a[p * n + r] = new_rp;
                    a[r * n + q] = new_rq;
                    a[q * n + r] = new_rq;
                }
                for r in 0..n {
                    let vrp = v.get(r, p);
                    let vrq = v.get(r, q);
                    v.set(r, p, c * vrp - s * vrq);
                    v.set(r, q, s * vrp + c * vrq);
                }
            }
        }
    }
    unreachable!("loop returns or errors before falling through")
}

/// Full spectrum of a symmetric matrix, certified to `tol`.
pub fn spectrum(m: &DenseSymmetricMatrix, tol: f64) -> Result<Spectrum, SpectralError> {
    let n = m.order();
    let max = max_dense_order();
    if n > max {
        return Err(SpectralError::TooLarge { dim: n, max });
    }
    let (diag, vecs, _sweeps) = jacobi(m)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| diag[i].total_cmp(&diag[j]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let eigenvectors = vecs.permuted_columns(&order);

    let mut residual: f64 = 0.0;
    for (i, &lambda) in eigenvalues.iter().enumerate() {
        let v = eigenvectors.column(i);
        let mv = m.mul_vec(&v);
        let r = mv
            .iter()
            .zip(&v)
            .map(|(a, b)| (a - lambda * b) * (a - lambda * b))
            .sum::<f64>()
            .sqrt();
        residual = residual.max(r);
    }
    if residual > tol {
        return Err(SpectralError::Certification {
            quantity: "residual",
            value: residual,
            limit: tol,
        });
    }

    let mut gram_dev: f64 = 0.0;
    for i in 0..n {
        for j in i..n {
            let dot: f64 = (0..n)
                .map(|r| eigenvectors.get(r, i) * eigenvectors.get(r, j))
                .sum();
            let target = if i == j { 1.0 } else { 0.0 };
            gram_dev = gram_dev.max((dot - target).abs());
        }
    }
    if gram_dev > GRAM_TOL {
        return Err(SpectralError::Certification {
            quantity: "orthonormality",
            value: gram_dev,
            limit: GRAM_TOL,
        });
    }

    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
        residual_bound: residual,
    })
}

/// Spectrum of the normalized Laplacian, with eigenvectors mapped back to
/// vertex eigenfunctions of `L` itself (`f = D^{-1/2} g`, renormalized).
///
/// The residual bound is recomputed against `L`, so the certificate applies
/// to the returned eigenfunctions; they are orthonormal in the
/// degree-weighted inner product rather than the Euclidean one.
pub fn vertex_spectrum(g: &Graph, tol: f64) -> Result<Spectrum, SpectralError> {
    let n = g.vertex_count();
    let sym = spectrum(&symmetric_laplacian(g), tol)?;

    let mut eigenvectors = DenseMatrix::zeros(n, n);
    let inv_sqrt_deg: Vec<f64> = (0..n).map(|v| 1.0 / (g.degree(v) as f64).sqrt()).collect();
    for i in 0..n {
        let mut f: Vec<f64> = sym
            .eigenvector(i)
            .iter()
            .zip(&inv_sqrt_deg)
            .map(|(x, s)| x * s)
            .collect();
        let norm = f.iter().map(|x| x * x).sum::<f64>().sqrt();
        for x in &mut f {
            *x /= norm;
        }
        for (r, &x) in f.iter().enumerate() {
            eigenvectors.set(r, i, x);
        }
    }

    let lap = normalized_laplacian(g);
    let mut residual: f64 = 0.0;
    for (i, &lambda) in sym.eigenvalues().iter().enumerate() {
        let f = eigenvectors.column(i);
        let lf = lap.mul_vec(&f);
        let r = lf
            .iter()
            .zip(&f)
            .map(|(a, b)| (a - lambda * b) * (a - lambda * b))
            .sum::<f64>()
            .sqrt();
        residual = residual.max(r);
    }
    if residual > tol {
        return Err(SpectralError::Certification {
            quantity: "residual",
            value: residual,
            limit: tol,
        });
    }

    Ok(Spectrum {
        eigenvalues: sym.eigenvalues().to_vec(),
        eigenvectors,
        residual_bound: residual,
    })
}

/// Spectrum of the edge Laplacian for the given orientation.
pub fn edge_spectrum(og: &OrientedGraph, tol: f64) -> Result<Spectrum, SpectralError> {
    spectrum(&edge_laplacian(og)?, tol)
}

/// Rayleigh quotient of the normalized Laplacian:
/// `sum over edges (f(u)-f(v))^2 / sum over vertices deg(v) f(v)^2`.
pub fn rayleigh_vertex(g: &Graph, f: &[f64]) -> Result<f64, SpectralError> {
    if f.len() != g.vertex_count() {
        return Err(SpectralError::LengthMismatch {
            expected: g.vertex_count(),
            got: f.len(),
        });
    }
    if f.iter().all(|&x| x == 0.0) {
        return Err(SpectralError::ZeroFunction);
    }
    let numerator: f64 = g
        .edges()
        .map(|(u, v)| (f[u] - f[v]) * (f[u] - f[v]))
        .sum();
    let denominator: f64 = f
        .iter()
        .enumerate()
        .map(|(v, &x)| g.degree(v) as f64 * x * x)
        .sum();
    Ok(numerator / denominator)
}

/// Rayleigh quotient of the edge Laplacian:
/// `sum over vertices netflow(v)^2 / deg(v)` divided by `sum gamma^2`.
///
/// For the indicator of a single edge this is `1/deg(u) + 1/deg(v)`.
pub fn rayleigh_edge(og: &OrientedGraph, gamma: &[f64]) -> Result<f64, SpectralError> {
    if gamma.iter().all(|&x| x == 0.0) {
        if gamma.len() != og.edge_count() {
            return Err(SpectralError::LengthMismatch {
                expected: og.edge_count(),
                got: gamma.len(),
            });
        }
        return Err(SpectralError::ZeroFunction);
    }
    let net = og.vertex_net_flow(gamma)?;
    let g = og.graph();
    let numerator: f64 = net
        .iter()
        .enumerate()
        .map(|(v, &x)| x * x / g.degree(v) as f64)
        .sum();
    let denominator: f64 = gamma.iter().map(|&x| x * x).sum();
    Ok(numerator / denominator)
}
