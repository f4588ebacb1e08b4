//! Cross-validates the spectral hitting times against the linear-solve
//! oracle and Monte Carlo simulation over sampled node pairs.

use walkmetric::graph::{Graph, GraphKind};
use walkmetric::oracle::validate;
use walkmetric::walk::Laziness;
use walkmetric::{analyze, Result};

fn main() -> Result<()> {
    let n = 48;
    let g = Graph::generate(GraphKind::Lattice2d(8, 6))?;
    let beta = Laziness::uniform(n, 0.7)?;
    let a = analyze(g.clone(), beta.clone())?;

    let rows = validate(&g, &beta, &a.space, 8, 20_000, 42)?;
    println!("{:>4} {:>4} {:>14} {:>14} {:>12} {:>10} {:>10}",
        "x", "y", "spectral", "solve", "rel_disc", "mc_mean", "mc_se");
    let mut worst = 0.0f64;
    for r in &rows {
        println!(
            "{:>4} {:>4} {:>14.6} {:>14.6} {:>12.3e} {:>10.3} {:>10.3}",
            r.x, r.y, r.spectral, r.solve, r.rel_discrepancy, r.mc_mean, r.mc_stderr
        );
        worst = worst.max(r.rel_discrepancy);
        let z = (r.mc_mean - r.solve).abs() / r.mc_stderr;
        assert!(z < 5.0, "Monte Carlo mean {} sigma away from solve", z);
    }
    println!("worst spectral-vs-solve relative discrepancy: {worst:.3e}");
    Ok(())
}
