//! Spectrum of the symmetrized walk operator, homogeneous coordinates,
//! and the Green function on the complement of the stationary mode.

use ndarray::{Array1, Array2};

use crate::error::{Error, Result};
use crate::linalg::{jacobi_eigh, SweepOrder};
use crate::walk::LazyWalk;

/// Eigenvalues (descending) and orthonormal eigenvectors (columns) of a
/// symmetric matrix, with a fixed sign convention: the largest-magnitude
/// entry of each eigenvector is positive.
#[derive(Debug, Clone)]
pub struct Spectrum {
    eigenvalues: Array1<f64>,
    eigenvectors: Array2<f64>,
}

impl Spectrum {
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &Array1<f64> {
        &self.eigenvalues
    }

    pub fn eigenvalue(&self, s: usize) -> f64 {
        self.eigenvalues[s]
    }

    /// Eigenvector columns, column s ordered by descending eigenvalue.
    pub fn eigenvectors(&self) -> &Array2<f64> {
        &self.eigenvectors
    }
}

/// Full eigendecomposition of a symmetric matrix via cyclic Jacobi sweeps.
pub fn eigh(a: &Array2<f64>) -> Result<Spectrum> {
    eigh_with_order(a, SweepOrder::RowCyclic)
}

/// Same as [`eigh`] but with an explicit rotation order. Metric results
/// must agree between orders even on degenerate eigenspaces.
pub fn eigh_with_order(a: &Array2<f64>, order: SweepOrder) -> Result<Spectrum> {
    let (vals, vecs) = jacobi_eigh(a, order)?;
    let n = vals.len();

    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| vals[j].partial_cmp(&vals[i]).unwrap().then(i.cmp(&j)));

    let mut eigenvalues = Array1::<f64>::zeros(n);
    let mut eigenvectors = Array2::<f64>::zeros((n, n));
    for (s, &i) in idx.iter().enumerate() {
        eigenvalues[s] = vals[i];
        let col = vecs.column(i);
        // first entry of largest magnitude decides the sign
        let mut lead = 0;
        for k in 1..n {
            if col[k].abs() > col[lead].abs() {
                lead = k;
            }
        }
        let flip = if col[lead] < 0.0 { -1.0 } else { 1.0 };
        for k in 0..n {
            eigenvectors[[k, s]] = flip * col[k];
        }
    }
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
    })
}

/// Homogeneous coordinates psi'_{s,x} = psi_{s,x} / sqrt(pi_x) for the
/// non-stationary modes s >= 2, together with the spectral gaps. This is
/// everything the Green function and the node metrics need.
#[derive(Debug, Clone)]
pub struct MetricSpace {
    pi: Array1<f64>,
    /// N x (N-1); column s-2 holds psi'_s.
    psi_prime: Array2<f64>,
    /// lambda_s = 1 - mu_s for s >= 2, all positive.
    lambdas: Vec<f64>,
}

impl MetricSpace {
    pub fn n(&self) -> usize {
        self.pi.len()
    }

    pub fn stationary(&self) -> &Array1<f64> {
        &self.pi
    }

    pub fn psi_prime(&self) -> &Array2<f64> {
        &self.psi_prime
    }

    /// Laplacian eigenvalues 1 - mu_s, s >= 2.
    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    /// Reciprocal gaps 1/(1 - mu_s), s >= 2, in units of steps.
    pub fn gaps(&self) -> Vec<f64> {
        self.lambdas.iter().map(|l| 1.0 / l).collect()
    }
}

/// Builds the metric space from a walk spectrum and stationary vector.
pub fn homogeneous_coordinates(spec: &Spectrum, pi: &Array1<f64>) -> Result<MetricSpace> {
    let n = spec.n();
    if pi.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: pi.len(),
        });
    }
    for (node, &p) in pi.iter().enumerate() {
        if p <= 0.0 {
            return Err(Error::NonPositiveStationary { node });
        }
    }
    if (spec.eigenvalue(0) - 1.0).abs() > 1e-9 {
        return Err(Error::Consistency(format!(
            "leading eigenvalue {} is not 1",
            spec.eigenvalue(0)
        )));
    }
    if n > 1 && spec.eigenvalue(1) >= 1.0 - 1e-9 {
        // mu_2 = 1 means a second stationary mode
        return Err(Error::Disconnected);
    }
    // The Perron vector must be sqrt(pi); the sign convention already makes
    // it entrywise positive.
    for x in 0..n {
        let dev = (spec.eigenvectors()[[x, 0]] - pi[x].sqrt()).abs();
        if dev > 1e-7 {
            return Err(Error::Consistency(format!(
                "psi_1[{x}] deviates from sqrt(pi) by {dev:e}"
            )));
        }
    }

    let mut psi_prime = Array2::<f64>::zeros((n, n - 1));
    let mut lambdas = Vec::with_capacity(n - 1);
    for s in 1..n {
        lambdas.push(1.0 - spec.eigenvalue(s));
        for x in 0..n {
            psi_prime[[x, s - 1]] = spec.eigenvectors()[[x, s]] / pi[x].sqrt();
        }
    }
    Ok(MetricSpace {
        pi: pi.clone(),
        psi_prime,
        lambdas,
    })
}

impl MetricSpace {
    /// Convenience: spectrum + homogeneous coordinates for a walk.
    pub fn from_walk(walk: &LazyWalk) -> Result<(Spectrum, MetricSpace)> {
        let spec = eigh(walk.symmetrized())?;
        let ms = homogeneous_coordinates(&spec, walk.stationary())?;
        Ok((spec, ms))
    }

    /// Applies the Green function (1 - T_hat)^{-1} restricted to the
    /// complement of the stationary mode, in homogeneous coordinates:
    /// sum_{s>=2} psi'_s <psi'_s, v>_pi / (1 - mu_s).
    /// Any component along the stationary direction is projected out.
    pub fn green_apply(&self, v: &Array1<f64>) -> Array1<f64> {
        let n = self.n();
        let mut out = Array1::<f64>::zeros(n);
        for (j, &lambda) in self.lambdas.iter().enumerate() {
            let col = self.psi_prime.column(j);
            let coeff: f64 = (0..n).map(|x| self.pi[x] * col[x] * v[x]).sum();
            let scale = coeff / lambda;
            for x in 0..n {
                out[x] += scale * col[x];
            }
        }
        out
    }
}
