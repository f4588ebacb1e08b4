//! Shared corpus and independent oracles for integration tests.
#![allow(dead_code)] // not every test target uses every helper

use ndarray::Array2;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use walkmetric::graph::{Graph, GraphKind};
use walkmetric::linalg;

/// Erdos-Renyi G(n, p), resampled until connected.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut w = Array2::<f64>::zeros((n, n));
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen::<f64>() < p {
                    w[[u, v]] = 1.0;
                    w[[v, u]] = 1.0;
                }
            }
        }
        if let Ok(g) = Graph::from_weights(w, None) {
            if g.is_connected() {
                return g;
            }
        }
    }
}

/// The acceptance corpus: path 50, cycle 51, cycle 50, complete 20,
/// lattice 8x8, and five random connected graphs on 60 nodes.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut graphs = vec![
        ("path50".to_string(), Graph::generate(GraphKind::Path(50)).unwrap()),
        ("cycle51".to_string(), Graph::generate(GraphKind::Cycle(51)).unwrap()),
        ("cycle50".to_string(), Graph::generate(GraphKind::Cycle(50)).unwrap()),
        ("complete20".to_string(), Graph::generate(GraphKind::Complete(20)).unwrap()),
        ("lattice8x8".to_string(), Graph::generate(GraphKind::Lattice2d(8, 8)).unwrap()),
    ];
    for k in 0..5 {
        graphs.push((format!("random60_{k}"), random_connected(60, 0.08, 1000 + k)));
    }
    graphs
}

pub const BETAS: [f64; 3] = [1.0, 0.6, 0.3];

/// All-pairs effective resistance from the grounded-Laplacian inverse:
/// R(x, y) = M_xx + M_yy - 2 M_xy with M the inverse of the Laplacian
/// minus its last row and column. Purely linear-algebra ground truth,
/// independent of the spectral pipeline.
pub fn resistance_matrix(g: &Graph) -> Array2<f64> {
    let n = g.node_count();
    let deg = g.weighted_degrees();
    let m = n - 1;
    let mut lap = Array2::<f64>::zeros((m, m));
    for u in 0..m {
        for v in 0..m {
            lap[[u, v]] = if u == v { deg[u] } else { -g.weight(u, v) };
        }
    }
    let mut inv = Array2::<f64>::zeros((m, m));
    for col in 0..m {
        let mut e = ndarray::Array1::<f64>::zeros(m);
        e[col] = 1.0;
        let x = linalg::solve(&lap, &e).unwrap();
        for row in 0..m {
            inv[[row, col]] = x[row];
        }
    }
    let mut r = Array2::<f64>::zeros((n, n));
    let entry = |x: usize, y: usize| -> f64 {
        if x == y {
            0.0
        } else if y == n - 1 {
            inv[[x, x]]
        } else if x == n - 1 {
            inv[[y, y]]
        } else {
            inv[[x, x]] + inv[[y, y]] - 2.0 * inv[[x, y]]
        }
    };
    for x in 0..n {
        for y in 0..n {
            r[[x, y]] = entry(x, y);
        }
    }
    r
}
