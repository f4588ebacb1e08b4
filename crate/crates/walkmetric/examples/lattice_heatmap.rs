//! Renders the pairwise distance matrix of a 16x12 grid as a PGM
//! heatmap (dark = close, bright = far) plus a CSV table.

use std::path::Path;

use walkmetric::export::{matrix_csv, write_pgm};
use walkmetric::graph::{Graph, GraphKind};
use walkmetric::metric::DistanceMode;
use walkmetric::walk::Laziness;
use walkmetric::{analyze, Result};

fn main() -> Result<()> {
    let (rows, cols) = (16, 12);
    let g = Graph::generate(GraphKind::Lattice2d(rows, cols))?;
    let n = g.node_count();
    let labels = g.labels();
    let a = analyze(g, Laziness::uniform(n, 1.0)?)?;

    let d = a.space.distance_matrix(DistanceMode::Sqrt);
    write_pgm(Path::new("lattice_distances.pgm"), &d)?;
    std::fs::write("lattice_distances.csv", matrix_csv(&d, &labels))?;

    println!("lattice {rows}x{cols}: wrote lattice_distances.pgm and .csv");
    println!(
        "  corner-to-corner d(0, {}) = {:.3}",
        n - 1,
        a.space.distance(0, n - 1)
    );
    println!("  nearest-neighbor d(0, 1) = {:.3}", a.space.distance(0, 1));
    Ok(())
}
