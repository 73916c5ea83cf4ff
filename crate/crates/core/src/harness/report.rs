//! The bounds checker: one graph in, a structured pass/fail report out.
//!
//! Every inequality the library promises is rechecked numerically on the
//! concrete graph. Each check records its two sides and the slack
//! `rhs - lhs`; a check passes when the slack is no worse than a tolerance
//! derived from the eigensolver's certified residual, so a failing entry
//! means a genuine violation rather than numerical noise.

use serde::{Deserialize, Serialize};

use crate::constants::{ConstantsRecord, CHEEGER_ENUM_MAX, DUAL_CHEEGER_ENUM_MAX};
use crate::graph::Graph;
use crate::spectral::{self, OrientedGraph, Spectrum};

use super::{graph_fingerprint, HarnessError};

/// Floor for the pass/fail tolerance; the actual tolerance is
/// `max(CHECK_BASE_TOL, 10 * residual_bound)`.
pub const CHECK_BASE_TOL: f64 = 1e-9;

/// Two spectra that must agree do so at least this tightly.
pub const SPECTRA_AGREEMENT_TOL: f64 = 1e-8;

/// Eigenfunctions away from eigenvalue 1 must be constant on duplicate
/// classes to this relative accuracy.
pub const DUPLICATE_CLASS_TOL: f64 = 1e-7;

/// Eigenvalues this close to 1 are exempt from the duplicate-class check.
const EIGENVALUE_ONE_EXCLUSION: f64 = 1e-6;

/// One verified inequality `lhs <= rhs` (up to tolerance).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub id: String,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`; negative values within tolerance still pass.
    pub slack: f64,
    pub pass: bool,
}

/// Everything checked about one graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    /// FNV-1a hash of the vertex count and edge list, as 16 hex digits.
    pub fingerprint: String,
    pub connected: bool,
    pub bipartite: bool,
    pub constants: ConstantsRecord,
    pub lambda_2: f64,
    pub lambda_max: f64,
    /// Largest certified eigenpair residual across the solves performed.
    pub residual_bound: f64,
    /// The pass/fail tolerance actually applied.
    pub tolerance: f64,
    pub checks: Vec<CheckEntry>,
    /// Human-readable reasons for any checks that were skipped.
    pub notices: Vec<String>,
    pub all_pass: bool,
}

impl BoundsReport {
    pub fn check(&self, id: &str) -> Option<&CheckEntry> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn failing_ids(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.id.as_str())
            .collect()
    }
}

/// Runs every applicable check on a connected graph. `tol` is the residual
/// bound demanded of the eigensolver (see [`spectral::DEFAULT_TOL`]).
pub fn check_graph(g: &Graph, tol: f64) -> Result<BoundsReport, HarnessError> {
    if !g.is_connected() {
        return Err(HarnessError::NotConnected);
    }
    build_report(g, tol)
}

/// Like [`check_graph`] but accepts disconnected graphs: the checks whose
/// statements require connectivity are skipped with a notice, everything
/// else still runs (and still holds, component by component).
pub fn check_graph_lenient(g: &Graph, tol: f64) -> Result<BoundsReport, HarnessError> {
    build_report(g, tol)
}

fn push(checks: &mut Vec<CheckEntry>, tol: f64, id: &str, lhs: f64, rhs: f64) {
    let slack = rhs - lhs;
    checks.push(CheckEntry {
        id: id.to_string(),
        lhs,
        rhs,
        slack,
        pass: slack >= -tol,
    });
}

fn build_report(g: &Graph, tol: f64) -> Result<BoundsReport, HarnessError> {
    let n = g.vertex_count();
    let m = g.edge_count();
    let connected = g.is_connected();
    let components = g.component_count();
    let constants = ConstantsRecord::compute(g);

    let vs = spectral::vertex_spectrum(g, tol)?;
    let og = OrientedGraph::new(g);
    let mut notices = Vec::new();
    let edge_limit = 2 * spectral::max_dense_order();
    let es: Option<Spectrum> = if m <= edge_limit {
        Some(spectral::edge_spectrum(&og, tol)?)
    } else {
        notices.push(format!(
            "edge-spectrum checks skipped: {m} edges exceed the dense limit {edge_limit}"
        ));
        None
    };

    let residual_bound = es
        .as_ref()
        .map_or(vs.residual_bound(), |e| {
            vs.residual_bound().max(e.residual_bound())
        });
    let check_tol = CHECK_BASE_TOL.max(10.0 * residual_bound);

    let lambda_2 = vs.lambda_2();
    let lambda_max = vs.lambda_max();
    let mut checks = Vec::new();

    // The headline two-sided bound: Q <= lambda_max <= Q * tau.
    let q = constants.q.to_f64();
    push(&mut checks, check_tol, "main-lower", q, lambda_max);
    push(
        &mut checks,
        check_tol,
        "main-upper",
        lambda_max,
        constants.q_times_tau.to_f64(),
    );

    // Cheeger: 1 - sqrt(1 - h^2) <= lambda_2 <= 2h.
    match &constants.h {
        Some(w) => {
            let h = w.value.to_f64();
            let lower = 1.0 - (1.0 - h * h).max(0.0).sqrt();
            push(&mut checks, check_tol, "cheeger-lower", lower, lambda_2);
            push(&mut checks, check_tol, "cheeger-upper", lambda_2, 2.0 * h);
        }
        None => notices.push(if connected {
            format!(
                "cheeger checks skipped: {n} vertices exceed the enumeration limit {CHEEGER_ENUM_MAX}"
            )
        } else {
            "cheeger checks skipped: graph is disconnected".to_string()
        }),
    }

    // Dual Cheeger: 2 h_bar <= lambda_max <= 1 + sqrt(1 - (1 - h_bar)^2).
    match &constants.h_bar {
        Some(w) => {
            let hb = w.value.to_f64();
            push(
                &mut checks,
                check_tol,
                "dual-cheeger-lower",
                2.0 * hb,
                lambda_max,
            );
            let upper = 1.0 + (1.0 - (1.0 - hb) * (1.0 - hb)).max(0.0).sqrt();
            push(
                &mut checks,
                check_tol,
                "dual-cheeger-upper",
                lambda_max,
                upper,
            );
        }
        None => notices.push(format!(
            "dual-cheeger checks skipped: {n} vertices exceed the enumeration limit {DUAL_CHEEGER_ENUM_MAX}"
        )),
    }

    if let Some(es) = &es {
        // The vertex and edge formulations share their nonzero spectrum...
        let nonzero = n - vs.zero_multiplicity();
        let mut a: Vec<f64> = vs.eigenvalues().to_vec();
        let mut b: Vec<f64> = es.eigenvalues().to_vec();
        a.sort_by(|x, y| y.total_cmp(x));
        b.sort_by(|x, y| y.total_cmp(x));
        let agreement = if b.len() < nonzero {
            f64::INFINITY
        } else {
            a.iter()
                .zip(&b)
                .take(nonzero)
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max)
        };
        push(
            &mut checks,
            check_tol,
            "spectra-agreement",
            agreement,
            SPECTRA_AGREEMENT_TOL,
        );

        // ...and their kernel dimensions are the component count and
        // `edges - vertices + components` respectively.
        let vertex_kernel_error = vs.zero_multiplicity().abs_diff(components);
        let edge_kernel_error = es.zero_multiplicity().abs_diff(m + components - n);
        push(
            &mut checks,
            check_tol,
            "zero-multiplicity",
            (vertex_kernel_error + edge_kernel_error) as f64,
            0.0,
        );
    }

    push(&mut checks, check_tol, "lambda-max-ceiling", lambda_max, 2.0);
    push(
        &mut checks,
        check_tol,
        "lambda-max-floor",
        n as f64 / (n as f64 - 1.0),
        lambda_max,
    );

    // Vertices with identical neighborhoods pin down their eigenfunctions:
    // away from eigenvalue 1, an eigenfunction takes one value per class.
    let duplicate_classes: Vec<Vec<usize>> = g
        .duplicate_classes()
        .into_iter()
        .filter(|c| c.len() >= 2)
        .collect();
    let mut worst: f64 = 0.0;
    if !duplicate_classes.is_empty() {
        for (i, &lambda) in vs.eigenvalues().iter().enumerate() {
            if (lambda - 1.0).abs() <= EIGENVALUE_ONE_EXCLUSION {
                continue;
            }
            let f = vs.eigenvector(i);
            let norm_inf = f.iter().fold(0.0f64, |acc, &x| acc.max(x.abs()));
            for class in &duplicate_classes {
                let lo = class.iter().map(|&v| f[v]).fold(f64::INFINITY, f64::min);
                let hi = class
                    .iter()
                    .map(|&v| f[v])
                    .fold(f64::NEG_INFINITY, f64::max);
                worst = worst.max((hi - lo) / norm_inf);
            }
        }
    }
    push(
        &mut checks,
        check_tol,
        "duplicate-eigenfunction",
        worst,
        DUPLICATE_CLASS_TOL,
    );

    let all_pass = checks.iter().all(|c| c.pass);
    Ok(BoundsReport {
        vertex_count: n,
        edge_count: m,
        fingerprint: format!("{:016x}", graph_fingerprint(g)),
        connected,
        bipartite: g.is_bipartite(),
        constants,
        lambda_2,
        lambda_max,
        residual_bound,
        tolerance: check_tol,
        checks,
        notices,
        all_pass,
    })
}
