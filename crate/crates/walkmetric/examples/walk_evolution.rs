//! Evolving a point mass under the lazy walk: the distribution relaxes
//! to the stationary pi at a rate set by the spectral gap.

use ndarray::Array1;
use walkmetric::graph::{Graph, GraphKind};
use walkmetric::walk::{LazyWalk, Laziness};
use walkmetric::Result;

fn main() -> Result<()> {
    let n = 20;
    let g = Graph::generate(GraphKind::Lattice2d(4, 5))?;
    let walk = LazyWalk::new(g, Laziness::uniform(n, 0.8)?)?;
    let pi = walk.stationary();

    let mut sigma = Array1::<f64>::zeros(n);
    sigma[0] = 1.0;
    println!("4x5 lattice, beta = 0.8, point mass at node 0:");
    for steps in [0usize, 1, 5, 20, 100, 400] {
        let s = walk.evolve(&sigma, steps);
        let dist: f64 = (0..n).map(|x| (s[x] - pi[x]).abs()).sum::<f64>() / 2.0;
        println!("  after {steps:>3} steps: total-variation distance to pi = {dist:.6}");
    }
    println!(
        "detailed balance violation of the fixed point: {:.3e}",
        walk.detailed_balance_violation()
    );
    Ok(())
}
