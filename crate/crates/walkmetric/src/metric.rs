//! The probabilistic Euclidean structure: inner products, norms, angles,
//! commute-time distances, hitting and first-passage times, metric balls,
//! and embedding coordinates.

use ndarray::{Array1, Array2};

use crate::error::{Error, Result};
use crate::spectral::{MetricSpace, Spectrum};

/// Distance convention for user-facing matrices. `Sqrt` is the Euclidean
/// distance (square root of the commute time); `Commute` is the raw
/// squared quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceMode {
    Commute,
    Sqrt,
}

impl std::str::FromStr for DistanceMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "commute" => Ok(DistanceMode::Commute),
            "sqrt" => Ok(DistanceMode::Sqrt),
            other => Err(Error::Usage(format!(
                "unknown distance mode {other:?} (expected commute or sqrt)"
            ))),
        }
    }
}

impl MetricSpace {
    /// Green-function inner product of nodes x and y, in steps:
    /// sum_{s>=2} psi'_{s,x} psi'_{s,y} / (1 - mu_s).
    pub fn inner_product(&self, x: usize, y: usize) -> f64 {
        let pp = self.psi_prime();
        self.lambdas()
            .iter()
            .enumerate()
            .map(|(j, l)| pp[[x, j]] * pp[[y, j]] / l)
            .sum()
    }

    /// Squared norm of node x; equals the first-passage time f_x.
    pub fn squared_norm(&self, x: usize) -> f64 {
        self.inner_product(x, x)
    }

    /// Angle between nodes in degrees, in [0, 180].
    pub fn angle_degrees(&self, x: usize, y: usize) -> f64 {
        if x == y {
            return 0.0;
        }
        let nx = self.squared_norm(x).sqrt();
        let ny = self.squared_norm(y).sqrt();
        assert!(nx > 0.0 && ny > 0.0, "zero node norm on a connected graph");
        let cos = (self.inner_product(x, y) / (nx * ny)).clamp(-1.0, 1.0);
        cos.acos().to_degrees()
    }

    /// Commute time between x and y; the squared probabilistic distance.
    pub fn squared_distance(&self, x: usize, y: usize) -> f64 {
        if x == y {
            return 0.0;
        }
        let pp = self.psi_prime();
        let d2: f64 = self
            .lambdas()
            .iter()
            .enumerate()
            .map(|(j, l)| {
                let diff = pp[[x, j]] - pp[[y, j]];
                diff * diff / l
            })
            .sum();
        d2.max(0.0)
    }

    /// Euclidean distance between nodes: sqrt of the commute time.
    pub fn distance(&self, x: usize, y: usize) -> f64 {
        self.squared_distance(x, y).sqrt()
    }

    /// Expected steps from x to first arrival at y, evaluated spectrally:
    /// h_xy = sum_{s>=2} (psi'^2_{s,y} - psi'_{s,x} psi'_{s,y}) / (1 - mu_s).
    pub fn hitting_spectral(&self, x: usize, y: usize) -> f64 {
        if x == y {
            return 0.0;
        }
        let pp = self.psi_prime();
        self.lambdas()
            .iter()
            .enumerate()
            .map(|(j, l)| (pp[[y, j]] * pp[[y, j]] - pp[[x, j]] * pp[[y, j]]) / l)
            .sum()
    }

    /// First-passage times f_x = ||x||^2 for every node.
    pub fn first_passage(&self) -> Array1<f64> {
        Array1::from_iter((0..self.n()).map(|x| self.squared_norm(x)))
    }

    /// Full hitting-time matrix, h[[x, y]] = h_xy.
    pub fn hitting_matrix(&self) -> Array2<f64> {
        let n = self.n();
        let mut h = Array2::<f64>::zeros((n, n));
        for x in 0..n {
            for y in 0..n {
                h[[x, y]] = self.hitting_spectral(x, y);
            }
        }
        h
    }

    /// Full pairwise distance matrix in the requested convention.
    pub fn distance_matrix(&self, mode: DistanceMode) -> Array2<f64> {
        let n = self.n();
        let mut d = Array2::<f64>::zeros((n, n));
        for x in 0..n {
            for y in x + 1..n {
                let d2 = self.squared_distance(x, y);
                let v = match mode {
                    DistanceMode::Commute => d2,
                    DistanceMode::Sqrt => d2.sqrt(),
                };
                d[[x, y]] = v;
                d[[y, x]] = v;
            }
        }
        d
    }

    /// Open metric ball {y : distance(x, y) < r} in the sqrt convention.
    pub fn metric_ball(&self, x: usize, r: f64) -> Vec<usize> {
        (0..self.n())
            .filter(|&y| self.distance(x, y) < r)
            .collect()
    }

    /// Full per-node metric report.
    pub fn node_metrics(&self) -> NodeMetrics {
        let n = self.n();
        let hitting = self.hitting_matrix();
        let squared_distance = self.distance_matrix(DistanceMode::Commute);
        let mut angle = Array2::<f64>::zeros((n, n));
        for x in 0..n {
            for y in x + 1..n {
                let a = self.angle_degrees(x, y);
                angle[[x, y]] = a;
                angle[[y, x]] = a;
            }
        }
        NodeMetrics {
            first_passage: self.first_passage(),
            hitting,
            squared_distance,
            angle,
        }
    }
}

/// Assembled metric tables for a whole graph.
#[derive(Debug, Clone)]
pub struct NodeMetrics {
    /// f_x, steps.
    pub first_passage: Array1<f64>,
    /// h_xy, steps; generally asymmetric.
    pub hitting: Array2<f64>,
    /// Commute times d^2(x, y), steps.
    pub squared_distance: Array2<f64>,
    /// Pairwise angles, degrees in [0, 180].
    pub angle: Array2<f64>,
}

/// Embedding coordinates: column j holds the components of eigenvector
/// psi_{j+2}, the leading non-stationary modes of the symmetrized walk.
pub fn embedding_coords(spec: &Spectrum, k: usize) -> Result<Array2<f64>> {
    let n = spec.n();
    if k < 1 || k > n - 1 {
        return Err(Error::DimensionOutOfRange { k, max: n - 1 });
    }
    let mut coords = Array2::<f64>::zeros((n, k));
    for j in 0..k {
        for x in 0..n {
            coords[[x, j]] = spec.eigenvectors()[[x, j + 1]];
        }
    }
    Ok(coords)
}
