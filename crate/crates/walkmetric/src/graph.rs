//! Weighted undirected graphs: parsing, generators, validation.

use std::collections::HashMap;
use std::collections::VecDeque;
use std::fmt::Write as _;

use ndarray::{Array1, Array2};

use crate::error::{Error, Result, MAX_NODES};

/// An undirected graph on dense node ids `0..n` with a symmetric
/// non-negative affinity matrix. Immutable after construction.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    weights: Array2<f64>,
    labels: Option<Vec<String>>,
}

/// Canonical unit-weight topologies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Path(usize),
    Cycle(usize),
    Lattice2d(usize, usize),
    Complete(usize),
}

impl Graph {
    /// Builds a graph from a dense weight matrix, enforcing symmetry,
    /// non-negativity, a zero diagonal, and positive degrees.
    pub fn from_weights(weights: Array2<f64>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = weights.nrows();
        if weights.ncols() != n {
            return Err(Error::Consistency("weight matrix not square".into()));
        }
        if n > MAX_NODES {
            return Err(Error::TooLarge { n });
        }
        if let Some(lbls) = &labels {
            if lbls.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: lbls.len(),
                });
            }
        }
        for x in 0..n {
            if weights[[x, x]] != 0.0 {
                return Err(Error::SelfLoop(x.to_string()));
            }
            for y in 0..n {
                let w = weights[[x, y]];
                if w < 0.0 {
                    return Err(Error::NegativeWeight {
                        u: x.to_string(),
                        v: y.to_string(),
                        weight: w,
                    });
                }
                if w != weights[[y, x]] {
                    return Err(Error::NonSymmetric {
                        max_dev: (w - weights[[y, x]]).abs(),
                    });
                }
            }
        }
        let g = Graph { n, weights, labels };
        for (x, d) in g.weighted_degrees().iter().enumerate() {
            if *d <= 0.0 {
                return Err(Error::IsolatedVertex(x));
            }
        }
        Ok(g)
    }

    /// Parses the edge-list text format: lines `u v [w]`, `#` comments,
    /// blank lines ignored. Duplicate edges sum; weights symmetrized.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut intern: HashMap<String, usize> = HashMap::new();
        let mut labels: Vec<String> = Vec::new();
        let mut edges: Vec<(usize, usize, f64)> = Vec::new();

        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 2 && toks.len() != 3 {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: format!("expected 2 or 3 tokens, got {}", toks.len()),
                });
            }
            let (u, v) = (toks[0], toks[1]);
            if u == v {
                return Err(Error::SelfLoop(u.to_string()));
            }
            let w = if toks.len() == 3 {
                toks[2].parse::<f64>().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    msg: format!("bad weight {:?}", toks[2]),
                })?
            } else {
                1.0
            };
            if !w.is_finite() || w < 0.0 {
                return Err(Error::NegativeWeight {
                    u: u.to_string(),
                    v: v.to_string(),
                    weight: w,
                });
            }
            let mut id = |label: &str| -> usize {
                *intern.entry(label.to_string()).or_insert_with(|| {
                    labels.push(label.to_string());
                    labels.len() - 1
                })
            };
            let (ui, vi) = (id(u), id(v));
            edges.push((ui, vi, w));
        }
        if edges.is_empty() {
            return Err(Error::EmptyInput);
        }

        let n = labels.len();
        if n > MAX_NODES {
            return Err(Error::TooLarge { n });
        }

        // If every label is a number and they cover 0..n exactly, keep the
        // user's numbering instead of first-appearance order.
        let remap: Option<Vec<usize>> = {
            let parsed: Option<Vec<usize>> =
                labels.iter().map(|l| l.parse::<usize>().ok()).collect();
            parsed.filter(|ids| {
                let mut seen = vec![false; n];
                ids.iter().all(|&i| {
                    if i < n && !seen[i] {
                        seen[i] = true;
                        true
                    } else {
                        false
                    }
                })
            })
        };

        let mut weights = Array2::<f64>::zeros((n, n));
        let map = |i: usize| remap.as_ref().map_or(i, |r| r[i]);
        for (u, v, w) in edges {
            let (u, v) = (map(u), map(v));
            weights[[u, v]] += w;
            weights[[v, u]] += w;
        }
        let labels = if remap.is_some() {
            None
        } else {
            Some(labels)
        };
        Graph::from_weights(weights, labels)
    }

    pub fn generate(kind: GraphKind) -> Result<Self> {
        let unit_edges = |n: usize, edges: Vec<(usize, usize)>| -> Result<Graph> {
            let mut w = Array2::<f64>::zeros((n, n));
            for (u, v) in edges {
                w[[u, v]] = 1.0;
                w[[v, u]] = 1.0;
            }
            Graph::from_weights(w, None)
        };
        match kind {
            GraphKind::Path(n) => {
                require(n >= 2, "path", 2, n)?;
                unit_edges(n, (0..n - 1).map(|i| (i, i + 1)).collect())
            }
            GraphKind::Cycle(n) => {
                require(n >= 2, "cycle", 2, n)?;
                unit_edges(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
            }
            GraphKind::Complete(n) => {
                require(n >= 2, "complete", 2, n)?;
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        edges.push((u, v));
                    }
                }
                unit_edges(n, edges)
            }
            GraphKind::Lattice2d(r, c) => {
                require(r >= 2, "lattice2d", 2, r)?;
                require(c >= 2, "lattice2d", 2, c)?;
                let at = |i: usize, j: usize| i * c + j;
                let mut edges = Vec::new();
                for i in 0..r {
                    for j in 0..c {
                        if j + 1 < c {
                            edges.push((at(i, j), at(i, j + 1)));
                        }
                        if i + 1 < r {
                            edges.push((at(i, j), at(i + 1, j)));
                        }
                    }
                }
                unit_edges(r * c, edges)
            }
        }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &Array2<f64> {
        &self.weights
    }

    pub fn weight(&self, x: usize, y: usize) -> f64 {
        self.weights[[x, y]]
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.n).map(|x| self.label(x)).collect()
    }

    pub fn edge_count(&self) -> usize {
        let mut count = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.weights[[u, v]] > 0.0 {
                    count += 1;
                }
            }
        }
        count
    }

    /// Weighted degree deg(x) = sum_y w_xy.
    pub fn weighted_degrees(&self) -> Array1<f64> {
        Array1::from_iter((0..self.n).map(|x| self.weights.row(x).sum()))
    }

    /// Graph volume: sum of all weighted degrees.
    pub fn volume(&self) -> f64 {
        self.weighted_degrees().sum()
    }

    /// Breadth-first reachability from node 0 over positive-weight edges.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            for (y, seen_y) in seen.iter_mut().enumerate() {
                if !*seen_y && self.weights[[x, y]] > 0.0 {
                    *seen_y = true;
                    reached += 1;
                    queue.push_back(y);
                }
            }
        }
        reached == self.n
    }

    pub fn check_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Serializes to the edge-list format: sorted `u v w` lines with
    /// shortest round-trip float formatting, so weights survive bit-exactly.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                let w = self.weights[[u, v]];
                if w > 0.0 {
                    let _ = writeln!(out, "{} {} {}", self.label(u), self.label(v), w);
                }
            }
        }
        out
    }
}

fn require(ok: bool, kind: &'static str, min: usize, got: usize) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::SizeBelowMinimum { kind, min, got })
    }
}
