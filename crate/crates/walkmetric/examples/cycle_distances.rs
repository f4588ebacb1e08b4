//! Distances on the 50-cycle: adjacent nodes end up ~9.9 steps apart,
//! antipodal nodes ~35.4, even though every hop has unit weight.

use walkmetric::graph::{Graph, GraphKind};
use walkmetric::walk::Laziness;
use walkmetric::{analyze, Result};

fn main() -> Result<()> {
    let n = 50;
    let g = Graph::generate(GraphKind::Cycle(n))?;
    let a = analyze(g, Laziness::uniform(n, 1.0)?)?;

    println!("cycle N = {n}, beta = 1");
    for k in [1, 5, 12, 25] {
        println!(
            "  d(0, {k:2}) = {:8.3}   d^2 = {:10.3}",
            a.space.distance(0, k),
            a.space.squared_distance(0, k)
        );
    }
    println!(
        "  hitting h(0 -> 25) = {:.3} (half the commute, by symmetry)",
        a.space.hitting_spectral(0, 25)
    );
    Ok(())
}
