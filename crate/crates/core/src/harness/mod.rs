//! Randomized and exhaustive verification of everything the library claims.
//!
//! [`report`] rechecks the full inequality suite on a single graph;
//! [`search`] settles sharpness questions by exact integer scans; this
//! module drives them: seeded random graph generation, a fuzz loop that
//! writes replay files for any violation, a worked demo graph, and a
//! numeric cross-check of the one-sided family's predicted spectra.
//!
//! Determinism is load-bearing: the same seed always yields the same
//! graphs, the same reports, and byte-identical serialized output.

pub mod report;
pub mod search;

use std::fmt::Write as _;
use std::path::PathBuf;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constants::q_constant;
use crate::families::{
    build_one_sided, predict_lambda_max, predict_q, FamilyError, LambdaPrediction, OneSidedParams,
};
use crate::graph::Graph;
use crate::io::format_edge_list;
use crate::rational::Rational;
use crate::spectral::{self, SpectralError};

pub use report::{check_graph, check_graph_lenient, BoundsReport, CheckEntry};
pub use search::{
    epsilon_witness_search, no_linear_shift_bound, tau_upper_search, EpsilonSearchResult,
    EpsilonWitness, ShiftExcessRow, TauSearchResult, TauViolation,
};

/// How many times the generator redraws before giving up on connectivity.
pub const RESAMPLE_LIMIT: usize = 1000;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("NotConnected: the strict checker requires a connected graph")]
    NotConnected,
    #[error("ResampleLimit: no connected sample after {attempts} attempts")]
    ResampleLimit { attempts: usize },
    #[error("InvalidRange: {message}")]
    InvalidRange { message: String },
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("Io: {0}")]
    Io(#[from] std::io::Error),
}

/// FNV-1a over the vertex count and the canonical edge list: a stable
/// content identifier for logs, CSV rows, and replay file names.
pub fn graph_fingerprint(g: &Graph) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |value: u64| {
        for byte in value.to_le_bytes() {
            hash ^= u64::from(byte);
            hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
        }
    };
    eat(g.vertex_count() as u64);
    for (u, v) in g.edges() {
        eat(u as u64);
        eat(v as u64);
    }
    hash
}

fn spans_one_component(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = n;
    for &(u, v) in edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            components -= 1;
        }
    }
    components == 1
}

/// Draws from the uniform edge-probability model conditioned on
/// connectivity, by rejection (at most [`RESAMPLE_LIMIT`] redraws).
pub fn random_connected_graph(
    n: usize,
    p: f64,
    rng: &mut impl Rng,
) -> Result<Graph, HarnessError> {
    if n < 2 {
        return Err(HarnessError::InvalidRange {
            message: format!("need n >= 2 vertices, got {n}"),
        });
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(HarnessError::InvalidRange {
            message: format!("need an edge probability in (0, 1], got {p}"),
        });
    }
    for _ in 0..RESAMPLE_LIMIT {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        if spans_one_component(n, &edges) {
            return Ok(Graph::from_edge_list(n, &edges)
                .expect("a connected sample is a valid graph"));
        }
    }
    Err(HarnessError::ResampleLimit {
        attempts: RESAMPLE_LIMIT,
    })
}

/// A uniform `[-1, 1]` vector, redrawn until its 1-norm clears 1e-6 so
/// downstream quotients never see an (almost) zero function.
pub fn sample_unit_function(len: usize, rng: &mut impl Rng) -> Vec<f64> {
    loop {
        let f: Vec<f64> = (0..len).map(|_| rng.gen_range(-1.0..=1.0)).collect();
        if f.iter().map(|x| x.abs()).sum::<f64>() >= 1e-6 {
            return f;
        }
    }
}

/// Parameters of one fuzz run. Everything that influences the outcome is
/// part of the config, so a run is reproducible from this struct alone.
#[derive(Debug, Clone)]
pub struct FuzzConfig {
    pub trials: usize,
    pub n_min: usize,
    pub n_max: usize,
    /// Each trial draws its edge probability from this list.
    pub edge_probabilities: Vec<f64>,
    pub seed: u64,
    /// Residual tolerance handed to the eigensolver.
    pub tol: f64,
    /// Directory for replay files of failing graphs, if any.
    pub save_failures: Option<PathBuf>,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            trials: 40,
            n_min: 4,
            n_max: 14,
            edge_probabilities: vec![0.3, 0.5, 0.8],
            seed: 0,
            tol: spectral::DEFAULT_TOL,
            save_failures: None,
        }
    }
}

/// Outcome of checking one sampled graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialOutcome {
    pub trial: usize,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub p: f64,
    pub fingerprint: String,
    pub all_pass: bool,
    pub checks: Vec<CheckEntry>,
}

/// Aggregate of a fuzz run; serializes byte-identically for equal configs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzSummary {
    pub master_seed: u64,
    pub trials: Vec<TrialOutcome>,
    pub total_checks: usize,
    pub failing_trials: usize,
    pub replay_files: Vec<String>,
}

impl FuzzSummary {
    /// One row per check per graph.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("trial,seed,n,m,p,fingerprint,check_id,lhs,rhs,slack,pass\n");
        for t in &self.trials {
            for c in &t.checks {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},{}",
                    t.trial, t.seed, t.n, t.m, t.p, t.fingerprint, c.id, c.lhs, c.rhs, c.slack,
                    c.pass
                )
                .expect("writing to a String cannot fail");
            }
        }
        out
    }
}

/// Runs the full check suite on a stream of seeded random connected
/// graphs. Any failing graph is dumped as a replay file (edge list plus
/// `# key=value` comments) when a directory is configured.
pub fn fuzz(config: &FuzzConfig) -> Result<FuzzSummary, HarnessError> {
    if config.n_min < 2 || config.n_min > config.n_max {
        return Err(HarnessError::InvalidRange {
            message: format!(
                "need 2 <= n_min <= n_max, got {}..={}",
                config.n_min, config.n_max
            ),
        });
    }
    if config.edge_probabilities.is_empty()
        || config
            .edge_probabilities
            .iter()
            .any(|&p| !(p > 0.0 && p <= 1.0))
    {
        return Err(HarnessError::InvalidRange {
            message: "edge probabilities must be a nonempty list within (0, 1]".to_string(),
        });
    }

    let mut master = ChaCha8Rng::seed_from_u64(config.seed);
    let mut trials = Vec::with_capacity(config.trials);
    let mut total_checks = 0;
    let mut failing_trials = 0;
    let mut replay_files = Vec::new();

    for trial in 0..config.trials {
        let seed = master.next_u64();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(config.n_min..=config.n_max);
        let p = config.edge_probabilities[rng.gen_range(0..config.edge_probabilities.len())];
        let g = random_connected_graph(n, p, &mut rng)?;
        let report = check_graph(&g, config.tol)?;
        let fingerprint = report.fingerprint.clone();
        total_checks += report.checks.len();
        if !report.all_pass {
            failing_trials += 1;
            if let Some(dir) = &config.save_failures {
                let path = dir.join(format!("replay-trial{trial:04}-seed{seed:016x}.edges"));
                let mut text = String::new();
                let _ = writeln!(text, "# trial={trial}");
                let _ = writeln!(text, "# seed={seed}");
                let _ = writeln!(text, "# p={p}");
                let _ = writeln!(text, "# fingerprint={fingerprint}");
                let _ = writeln!(text, "# failing={}", report.failing_ids().join(","));
                text.push_str(&format_edge_list(&g));
                std::fs::create_dir_all(dir)?;
                std::fs::write(&path, text)?;
                replay_files.push(path.display().to_string());
            }
        }
        trials.push(TrialOutcome {
            trial,
            seed,
            n,
            m: g.edge_count(),
            p,
            fingerprint,
            all_pass: report.all_pass,
            checks: report.checks,
        });
    }

    Ok(FuzzSummary {
        master_seed: config.seed,
        trials,
        total_checks,
        failing_trials,
        replay_files,
    })
}

/// A worked example packaged for display.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DemoReport {
    pub description: String,
    pub edge_list: String,
    pub report: BoundsReport,
}

/// The smallest graph showing the lower bound biting above the regular
/// floor: a triangle with a two-edge tail. Its pendant edge has endpoint
/// degrees 1 and 2, so `Q = 3/2` while `n/(n-1) = 5/4`, and the top
/// eigenvalue is forced into `[3/2, 3]` — all on a non-bipartite graph,
/// so the ceiling of 2 is strict as well.
pub fn lower_sharpness_demo(tol: f64) -> Result<DemoReport, HarnessError> {
    let g = Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])
        .expect("demo graph is valid");
    let report = check_graph(&g, tol)?;
    Ok(DemoReport {
        description: "triangle with a two-edge tail: the pendant edge forces Q = 3/2, \
                      above the regular floor n/(n-1) = 5/4"
            .to_string(),
        edge_list: format_edge_list(&g),
        report,
    })
}

/// The one-sided family's predictions, checked against a numerical solve.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OneSidedVerification {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub q: Rational,
    pub q_predicted: Rational,
    pub q_matches: bool,
    pub lambda_max: f64,
    pub prediction: LambdaPrediction,
    pub lambda_within_tolerance: bool,
    pub residual_bound: f64,
}

/// Builds the graph for `params`, solves it, and compares the computed `Q`
/// and top eigenvalue against the family's closed forms.
pub fn verify_one_sided_numeric(
    params: &OneSidedParams,
    tol: f64,
) -> Result<OneSidedVerification, HarnessError> {
    let g = build_one_sided(params)?;
    let (q, _) = q_constant(&g);
    let q_predicted = predict_q(params);
    let spectrum = spectral::vertex_spectrum(&g, tol)?;
    let check_tol = report::CHECK_BASE_TOL.max(10.0 * spectrum.residual_bound());
    let lambda_max = spectrum.lambda_max();
    let prediction = predict_lambda_max(params);
    let lambda_within_tolerance = match prediction {
        LambdaPrediction::Exact(v) => (lambda_max - v.to_f64()).abs() <= check_tol,
        LambdaPrediction::Interval { lower, upper } => {
            lambda_max >= lower.to_f64() - check_tol && lambda_max <= upper.to_f64() + check_tol
        }
    };
    Ok(OneSidedVerification {
        n: params.n(),
        k: params.k(),
        d: params.d(),
        q,
        q_predicted,
        q_matches: q == q_predicted,
        lambda_max,
        prediction,
        lambda_within_tolerance,
        residual_bound: spectrum.residual_bound(),
    })
}
