//! Low-dimensional node coordinates from the leading non-stationary
//! eigenvectors: a cycle embeds onto a circle, a chain onto a line.

use walkmetric::graph::{Graph, GraphKind};
use walkmetric::metric::embedding_coords;
use walkmetric::walk::Laziness;
use walkmetric::{analyze, Result};

fn main() -> Result<()> {
    let n = 40;
    let g = Graph::generate(GraphKind::Cycle(n))?;
    let a = analyze(g, Laziness::uniform(n, 1.0)?)?;

    let xy = embedding_coords(&a.spectrum, 2)?;
    println!("cycle N = {n}, k = 2 embedding (first 8 nodes):");
    for x in 0..8 {
        println!("  node {x:2}: ({:9.5}, {:9.5})", xy[[x, 0]], xy[[x, 1]]);
    }
    let radii: Vec<f64> = (0..n)
        .map(|x| (xy[[x, 0]].powi(2) + xy[[x, 1]].powi(2)).sqrt())
        .collect();
    let (lo, hi) = radii
        .iter()
        .fold((f64::INFINITY, 0.0f64), |(l, h), &r| (l.min(r), h.max(r)));
    println!("  radius range [{lo:.6}, {hi:.6}] -- a circle");

    let m = 30;
    let p = Graph::generate(GraphKind::Path(m))?;
    let pa = analyze(p, Laziness::uniform(m, 1.0)?)?;
    let line = embedding_coords(&pa.spectrum, 1)?;
    println!("chain N = {m}, k = 1 embedding: ends at {:.4} and {:.4}, center at {:.4}",
        line[[0, 0]], line[[m - 1, 0]], line[[m / 2, 0]]);
    Ok(())
}
