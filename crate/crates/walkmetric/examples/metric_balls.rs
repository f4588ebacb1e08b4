//! Metric balls B(x, r) under the commute-time distance. On a cycle the
//! balls around a node grow symmetrically in both directions.

use walkmetric::graph::{Graph, GraphKind};
use walkmetric::walk::Laziness;
use walkmetric::{analyze, Result};

fn main() -> Result<()> {
    let n = 50;
    let g = Graph::generate(GraphKind::Cycle(n))?;
    let a = analyze(g, Laziness::uniform(n, 1.0)?)?;

    println!("cycle N = {n}, balls around node 0:");
    for r in [5.0, 10.0, 14.0, 20.0, 30.0] {
        let ball = a.space.metric_ball(0, r);
        let members: Vec<String> = ball.iter().map(|x| x.to_string()).collect();
        println!("  r = {r:5.1}: |B| = {:2}  {{{}}}", ball.len(), members.join(", "));
    }
    Ok(())
}
