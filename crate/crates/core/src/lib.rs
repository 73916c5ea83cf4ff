//! Spectral bounds for undirected graphs, verified numerically and in exact
//! arithmetic.
//!
//! The library centres on two combinatorial quantities attached to a finite
//! simple graph: `Q`, the maximum over edges of `1/deg(v) + 1/deg(w)`, and a
//! companion factor `tau`. Together they pin the largest eigenvalue of the
//! normalized Laplacian from both sides: `Q <= lambda_n <= Q * tau`. The
//! crate computes these constants exactly as rationals, computes spectra with
//! a residual-certified dense eigensolver, and cross-checks the inequalities
//! (plus the classical Cheeger and dual-Cheeger bounds) on demand.
//!
//! Module map:
//!
//! * [`graph`] — validated simple graphs, subsets, connectivity, duplicate
//!   vertex classes.
//! * [`io`] — the plain-text edge-list format used by the CLI and replay
//!   files.
//! * [`matrix`] — small dense matrices; just enough linear algebra for the
//!   spectral routines.
//! * [`rational`] — exact fractions used for every combinatorial constant.
//! * [`spectral`] — normalized/symmetric/edge Laplacians, incidence matrices,
//!   Jacobi eigensolver with a posteriori residual bounds, Rayleigh quotients.
//! * [`constants`] — `Q`, `tau`, the Cheeger constant `h`, the dual-Cheeger
//!   constant `h_bar`, and the L1 quotients that characterize them.
//! * [`families`] — generators with known spectra: one-sided bipartite
//!   graphs, complete/bipartite/cycle/path/petal graphs.
//! * [`harness`] — seeded random graphs, the bounds checker, the fuzzer, and
//!   the exhaustive integer searches behind the sharpness claims.
//!
//! The `cheegerlab` binary exposes all of this as `analyze`, `family`,
//! `fuzz`, `search` and `demo` subcommands.
//!
//! ```
//! use cheegerlab::constants::{cheeger_constant, q_constant, tau_constant};
//! use cheegerlab::harness::check_graph;
//! use cheegerlab::spectral::{vertex_spectrum, DEFAULT_TOL};
//! use cheegerlab::{Graph, Rational};
//!
//! # fn main() -> Result<(), Box<dyn std::error::Error>> {
//! // A triangle with a two-edge tail: the pendant edge decides Q.
//! let g = Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])?;
//!
//! let (q, edge) = q_constant(&g);
//! assert_eq!((q, edge), (Rational::new(3, 2), (3, 4)));
//! let (tau, _) = tau_constant(&g);
//! assert_eq!(q * tau, Rational::new(15, 4));
//! let (h, subset) = cheeger_constant(&g)?;
//! assert_eq!(h, Rational::new(1, 3));
//! assert_eq!(subset.members(), &[0, 1, 2]);
//!
//! let spectrum = vertex_spectrum(&g, DEFAULT_TOL)?;
//! assert!(q.to_f64() <= spectrum.lambda_max());
//! assert!(spectrum.lambda_max() <= (q * tau).to_f64());
//!
//! let report = check_graph(&g, DEFAULT_TOL)?;
//! assert!(report.all_pass);
//! # Ok(())
//! # }
//! ```

pub mod constants;
pub mod families;
pub mod graph;
pub mod harness;
pub mod io;
pub mod matrix;
pub mod rational;
pub mod spectral;

pub use graph::{Graph, GraphError, VertexSubset};
pub use rational::Rational;
pub use spectral::{OrientedGraph, Spectrum};
