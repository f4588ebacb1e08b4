//! The Green function route to hitting times, checked against a direct
//! linear solve of (I - T_del) h = 1 and the electrical identity
//! d^2 = volume * effective_resistance at beta = 1.

use walkmetric::graph::{Graph, GraphKind};
use walkmetric::oracle::{effective_resistance, hitting_solve};
use walkmetric::walk::Laziness;
use walkmetric::{analyze, Result};

fn main() -> Result<()> {
    let (rows, cols) = (6, 6);
    let g = Graph::generate(GraphKind::Lattice2d(rows, cols))?;
    let n = g.node_count();
    let vol = g.volume();
    let a = analyze(g.clone(), Laziness::uniform(n, 1.0)?)?;

    let (x, y) = (0, n - 1);
    let spectral = a.space.hitting_spectral(x, y);
    let solved = hitting_solve(&g, a.walk.beta(), y)?[x];
    println!("lattice {rows}x{cols}, hitting {x} -> {y}:");
    println!("  spectral (Green function)  = {spectral:.10}");
    println!("  linear solve               = {solved:.10}");
    println!("  |difference|               = {:.3e}", (spectral - solved).abs());

    let d2 = a.space.squared_distance(x, y);
    let r = effective_resistance(&g, x, y)?;
    println!("commute time vs circuit theory:");
    println!("  d^2({x}, {y})                   = {d2:.10}");
    println!("  volume * R_eff             = {:.10}", vol * r);
    Ok(())
}
