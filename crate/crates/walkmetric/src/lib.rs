//! # walkmetric
//!
//! Turns any finite weighted undirected graph into a Euclidean metric
//! space through lazy random walks. The transition operator is
//! symmetrized against its stationary distribution, its spectrum yields
//! homogeneous node coordinates, and the Green function of the
//! normalized Laplacian induces inner products, norms, angles, and
//! distances on the nodes. The squared distances are commute times; the
//! squared norms are first-passage times.
//!
//! ## Pipeline
//!
//! ```rust
//! use walkmetric::graph::{Graph, GraphKind};
//! use walkmetric::walk::{LazyWalk, Laziness};
//! use walkmetric::spectral::MetricSpace;
//!
//! let g = Graph::generate(GraphKind::Cycle(50)).unwrap();
//! let walk = LazyWalk::new(g, Laziness::uniform(50, 1.0).unwrap()).unwrap();
//! let (spectrum, space) = MetricSpace::from_walk(&walk).unwrap();
//!
//! // adjacent vertices of the 50-cycle sit 9.899 steps apart
//! assert!((space.distance(0, 1) - 9.899).abs() < 1e-3);
//! # let _ = spectrum;
//! ```
//!
//! Every spectral quantity is cross-checked by the [`oracle`] module:
//! hitting times from a direct linear solve, commute times against
//! `volume * effective_resistance`, and Monte Carlo walk simulation.
//!
//! The `examples/` directory has one runnable program per capability;
//! the `walkmetric` binary exposes the same operations as subcommands.

pub mod cli;
pub mod error;
pub mod export;
pub mod graph;
pub mod linalg;
pub mod metric;
pub mod oracle;
pub mod spectral;
pub mod walk;

pub use error::{Error, Result};

use graph::Graph;
use spectral::{MetricSpace, Spectrum};
use walk::{LazyWalk, Laziness};

/// The full pipeline output for one graph: walk operators, spectrum, and
/// the induced metric space.
pub struct Analysis {
    pub walk: LazyWalk,
    pub spectrum: Spectrum,
    pub space: MetricSpace,
}

/// Runs graph -> lazy walk -> spectrum -> metric space in one call.
pub fn analyze(graph: Graph, beta: Laziness) -> Result<Analysis> {
    let walk = LazyWalk::new(graph, beta)?;
    let (spectrum, space) = MetricSpace::from_walk(&walk)?;
    Ok(Analysis {
        walk,
        spectrum,
        space,
    })
}
