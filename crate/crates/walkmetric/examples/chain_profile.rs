//! Norm and angle profile along a 100-node chain with laziness 0.6.
//! Endpoints are the hardest nodes to reach, so they carry the largest
//! first-passage norms; the two ends sit nearly orthogonal.

use walkmetric::graph::{Graph, GraphKind};
use walkmetric::walk::Laziness;
use walkmetric::{analyze, Result};

fn main() -> Result<()> {
    let n = 100;
    let g = Graph::generate(GraphKind::Path(n))?;
    let a = analyze(g, Laziness::uniform(n, 0.6)?)?;

    let f = a.space.first_passage();
    println!("chain N = {n}, beta = 0.6");
    println!("  |v_0|   = {:9.3}  (sqrt of first-passage {:.1})", a.space.squared_norm(0).sqrt(), f[0]);
    println!("  |v_50|  = {:9.3}  (sqrt of first-passage {:.1})", a.space.squared_norm(50).sqrt(), f[50]);
    println!("  d(0, 1)   = {:8.3}", a.space.distance(0, 1));
    println!("  d(0, 99)  = {:8.3}", a.space.distance(0, 99));
    println!("  angle(0, 99)  = {:7.3} deg", a.space.angle_degrees(0, 99));
    println!("  angle(0, 50)  = {:7.3} deg", a.space.angle_degrees(0, 50));

    // Laziness only rescales time: halving beta doubles every commute time.
    let g2 = Graph::generate(GraphKind::Path(n))?;
    let a2 = analyze(g2, Laziness::uniform(n, 0.3)?)?;
    println!(
        "  d^2(0,99) at beta 0.3 / beta 0.6 = {:.6}",
        a2.space.squared_distance(0, 99) / a.space.squared_distance(0, 99)
    );
    Ok(())
}
