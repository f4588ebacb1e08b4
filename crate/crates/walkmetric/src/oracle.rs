//! Independent ground truth: hitting times by direct linear solve,
//! effective resistance, and seeded Monte Carlo walk simulation. These
//! never touch the spectral path they are used to validate.

use ndarray::{Array1, Array2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::MetricSpace;
use crate::walk::{transition_matrix, Laziness};

/// Per-trial step cap; a trial that exceeds it is dropped and flagged.
pub const STEP_CAP: u64 = 1_000_000_000;

/// Expected steps to first arrival at `target` from every node, from the
/// dense linear system (I - T_deleted) h = 1 with partial pivoting.
pub fn hitting_solve(g: &Graph, beta: &Laziness, target: usize) -> Result<Array1<f64>> {
    let n = g.node_count();
    if target >= n {
        return Err(Error::NodeOutOfRange { node: target, n });
    }
    g.check_connected()?;
    let t = transition_matrix(g, beta)?;

    let others: Vec<usize> = (0..n).filter(|&x| x != target).collect();
    let m = others.len();
    let mut a = Array2::<f64>::zeros((m, m));
    for (i, &x) in others.iter().enumerate() {
        for (j, &y) in others.iter().enumerate() {
            a[[i, j]] = if i == j { 1.0 - t[[x, y]] } else { -t[[x, y]] };
        }
    }
    let rhs = Array1::<f64>::ones(m);
    let sol = crate::linalg::solve(&a, &rhs)?;

    let mut h = Array1::<f64>::zeros(n);
    for (i, &x) in others.iter().enumerate() {
        h[x] = sol[i];
    }
    Ok(h)
}

/// Full hitting matrix by linear solves, h[[x, y]] = h_xy.
pub fn hitting_solve_matrix(g: &Graph, beta: &Laziness) -> Result<Array2<f64>> {
    let n = g.node_count();
    let mut h = Array2::<f64>::zeros((n, n));
    for y in 0..n {
        let col = hitting_solve(g, beta, y)?;
        for x in 0..n {
            h[[x, y]] = col[x];
        }
    }
    Ok(h)
}

/// Effective resistance between x and y with edge weights as
/// conductances: ground y, inject unit current at x, read the potential.
pub fn effective_resistance(g: &Graph, x: usize, y: usize) -> Result<f64> {
    let n = g.node_count();
    for node in [x, y] {
        if node >= n {
            return Err(Error::NodeOutOfRange { node, n });
        }
    }
    if x == y {
        return Ok(0.0);
    }
    g.check_connected()?;
    let deg = g.weighted_degrees();

    let others: Vec<usize> = (0..n).filter(|&v| v != y).collect();
    let m = others.len();
    let mut lap = Array2::<f64>::zeros((m, m));
    let mut rhs = Array1::<f64>::zeros(m);
    for (i, &u) in others.iter().enumerate() {
        for (j, &v) in others.iter().enumerate() {
            lap[[i, j]] = if u == v { deg[u] } else { -g.weight(u, v) };
        }
        if u == x {
            rhs[i] = 1.0;
        }
    }
    let potential = crate::linalg::solve(&lap, &rhs)?;
    let ix = others.iter().position(|&u| u == x).unwrap();
    Ok(potential[ix])
}

/// Monte Carlo estimate of a hitting time.
#[derive(Debug, Clone, Copy)]
pub struct SimResult {
    pub mean: f64,
    pub stderr: f64,
    pub trials_used: u64,
    /// Trials dropped because they exceeded [`STEP_CAP`].
    pub censored: u64,
}

/// Simulates first arrival at y from x over independent trials. Each
/// trial draws its stream from (seed, trial index), so results do not
/// depend on scheduling and reproduce exactly for a fixed seed.
pub fn simulate_hitting(
    g: &Graph,
    beta: &Laziness,
    x: usize,
    y: usize,
    trials: u64,
    seed: u64,
) -> Result<SimResult> {
    let n = g.node_count();
    for node in [x, y] {
        if node >= n {
            return Err(Error::NodeOutOfRange { node, n });
        }
    }
    if trials == 0 {
        return Err(Error::Usage("trials must be at least 1".into()));
    }
    if beta.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: beta.len(),
        });
    }
    g.check_connected()?;

    // adjacency with cumulative weights for one-draw inversion sampling
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut cumweights: Vec<Vec<f64>> = vec![Vec::new(); n];
    for u in 0..n {
        let mut acc = 0.0;
        for v in 0..n {
            let w = g.weight(u, v);
            if w > 0.0 {
                acc += w;
                neighbors[u].push(v);
                cumweights[u].push(acc);
            }
        }
    }

    let mut sum = 0.0f64;
    let mut sum_sq = 0.0f64;
    let mut used = 0u64;
    let mut censored = 0u64;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        let mut node = x;
        let mut steps = 0u64;
        let arrived = loop {
            if node == y {
                break true;
            }
            if steps >= STEP_CAP {
                break false;
            }
            // first a laziness Bernoulli, then cumulative-weight inversion
            if rng.gen::<f64>() < beta.get(node) {
                let total = *cumweights[node].last().unwrap();
                let u = rng.gen::<f64>() * total;
                let k = cumweights[node].partition_point(|&c| c <= u);
                node = neighbors[node][k.min(neighbors[node].len() - 1)];
            }
            steps += 1;
        };
        if arrived {
            let s = steps as f64;
            sum += s;
            sum_sq += s * s;
            used += 1;
        } else {
            censored += 1;
        }
    }
    if used == 0 {
        return Err(Error::Consistency(
            "all Monte Carlo trials exceeded the step cap".into(),
        ));
    }
    let mean = sum / used as f64;
    let stderr = if used > 1 {
        let var = (sum_sq - sum * sum / used as f64) / (used as f64 - 1.0);
        (var.max(0.0) / used as f64).sqrt()
    } else {
        0.0
    };
    Ok(SimResult {
        mean,
        stderr,
        trials_used: used,
        censored,
    })
}

/// One row of a validation report: the three routes to the same hitting
/// time, side by side.
#[derive(Debug, Clone)]
pub struct OracleRow {
    pub x: usize,
    pub y: usize,
    pub spectral: f64,
    pub solve: f64,
    pub mc_mean: f64,
    pub mc_stderr: f64,
    /// |spectral - solve| / |solve|.
    pub rel_discrepancy: f64,
}

/// Cross-validates spectral hitting times against the linear solve and a
/// Monte Carlo run over sampled ordered pairs.
pub fn validate(
    g: &Graph,
    beta: &Laziness,
    ms: &MetricSpace,
    pairs: usize,
    trials: u64,
    seed: u64,
) -> Result<Vec<OracleRow>> {
    let n = g.node_count();
    let h_solve = hitting_solve_matrix(g, beta)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(pairs);
    for k in 0..pairs {
        let x = rng.gen_range(0..n);
        let mut y = rng.gen_range(0..n);
        while y == x {
            y = rng.gen_range(0..n);
        }
        let spectral = ms.hitting_spectral(x, y);
        let solve = h_solve[[x, y]];
        let sim = simulate_hitting(g, beta, x, y, trials, seed.wrapping_add(k as u64 + 1))?;
        rows.push(OracleRow {
            x,
            y,
            spectral,
            solve,
            mc_mean: sim.mean,
            mc_stderr: sim.stderr,
            rel_discrepancy: (spectral - solve).abs() / solve.abs(),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphKind;

    fn uniform(n: usize, b: f64) -> Laziness {
        Laziness::uniform(n, b).unwrap()
    }

    #[test]
    fn hitting_solve_single_edge() {
        let g = Graph::generate(GraphKind::Path(2)).unwrap();
        let h = hitting_solve(&g, &uniform(2, 1.0), 1).unwrap();
        assert_eq!(h.to_vec(), vec![1.0, 0.0]);
    }

    #[test]
    fn hitting_solve_path3() {
        let g = Graph::generate(GraphKind::Path(3)).unwrap();
        let h = hitting_solve(&g, &uniform(3, 1.0), 2).unwrap();
        assert!((h[0] - 4.0).abs() < 1e-12);
        assert!((h[1] - 3.0).abs() < 1e-12);
        assert_eq!(h[2], 0.0);
    }

    #[test]
    fn hitting_solve_complete3() {
        let g = Graph::generate(GraphKind::Complete(3)).unwrap();
        let h = hitting_solve(&g, &uniform(3, 1.0), 2).unwrap();
        assert!((h[0] - 2.0).abs() < 1e-12);
        assert!((h[1] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn hitting_entries_at_least_one() {
        let g = Graph::generate(GraphKind::Lattice2d(3, 3)).unwrap();
        let h = hitting_solve_matrix(&g, &uniform(9, 0.4)).unwrap();
        for x in 0..9 {
            for y in 0..9 {
                if x != y {
                    assert!(h[[x, y]] >= 1.0);
                }
            }
        }
    }

    #[test]
    fn lazy_scaling_at_the_solve_level() {
        let g = Graph::generate(GraphKind::Cycle(11)).unwrap();
        let b = 0.25;
        let h1 = hitting_solve(&g, &uniform(11, 1.0), 4).unwrap();
        let hb = hitting_solve(&g, &uniform(11, b), 4).unwrap();
        for x in 0..11 {
            if x == 4 {
                continue;
            }
            let want = h1[x] / b;
            assert!((hb[x] - want).abs() / want <= 1e-10);
        }
    }

    #[test]
    fn effective_resistance_cases() {
        let edge = Graph::parse_edge_list("0 1 1").unwrap();
        assert!((effective_resistance(&edge, 0, 1).unwrap() - 1.0).abs() < 1e-12);

        let k3 = Graph::generate(GraphKind::Complete(3)).unwrap();
        assert!((effective_resistance(&k3, 0, 2).unwrap() - 2.0 / 3.0).abs() < 1e-12);

        let p100 = Graph::generate(GraphKind::Path(100)).unwrap();
        assert!((effective_resistance(&p100, 0, 99).unwrap() - 99.0).abs() < 1e-8);

        assert_eq!(effective_resistance(&k3, 1, 1).unwrap(), 0.0);
    }

    #[test]
    fn simulate_single_edge_is_deterministic() {
        let g = Graph::generate(GraphKind::Path(2)).unwrap();
        let r = simulate_hitting(&g, &uniform(2, 1.0), 0, 1, 100, 42).unwrap();
        assert_eq!(r.mean, 1.0);
        assert_eq!(r.stderr, 0.0);
        assert_eq!(r.censored, 0);
    }

    #[test]
    fn simulate_complete3_matches_solve() {
        let g = Graph::generate(GraphKind::Complete(3)).unwrap();
        let r = simulate_hitting(&g, &uniform(3, 1.0), 0, 1, 100_000, 7).unwrap();
        assert!((r.mean - 2.0).abs() <= 4.0 * r.stderr);
    }

    #[test]
    fn simulate_lazy_path3() {
        let g = Graph::generate(GraphKind::Path(3)).unwrap();
        let r = simulate_hitting(&g, &uniform(3, 0.5), 0, 2, 100_000, 11).unwrap();
        assert!((r.mean - 8.0).abs() <= 4.0 * r.stderr);
    }

    #[test]
    fn simulate_reproduces_for_identical_seed() {
        let g = Graph::generate(GraphKind::Cycle(6)).unwrap();
        let a = simulate_hitting(&g, &uniform(6, 0.8), 0, 3, 5_000, 99).unwrap();
        let b = simulate_hitting(&g, &uniform(6, 0.8), 0, 3, 5_000, 99).unwrap();
        assert_eq!(a.mean, b.mean);
        assert_eq!(a.stderr, b.stderr);
        let c = simulate_hitting(&g, &uniform(6, 0.8), 0, 3, 5_000, 100).unwrap();
        assert_ne!(a.mean, c.mean);
    }

    #[test]
    fn weighted_sampling_respects_affinities() {
        // 0 -- 1 heavy, 0 -- 2 light: hitting 1 from 0 should be fast
        let g = Graph::parse_edge_list("0 1 10\n0 2 1\n1 2 1").unwrap();
        let beta = uniform(3, 1.0);
        let solve = hitting_solve(&g, &beta, 1).unwrap();
        let sim = simulate_hitting(&g, &beta, 0, 1, 50_000, 5).unwrap();
        assert!((sim.mean - solve[0]).abs() <= 4.0 * sim.stderr);
    }
}
