//! Dense kernels: cyclic Jacobi eigendecomposition and a pivoted solver.

use ndarray::{Array1, Array2};

use crate::error::{Error, Result};

/// Order in which Jacobi rotations traverse the strict upper triangle.
/// Either order converges; metric outputs must not depend on the choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SweepOrder {
    #[default]
    RowCyclic,
    ColumnCyclic,
}

const MAX_SWEEPS: usize = 30;

/// Cyclic Jacobi rotations for a real symmetric matrix. Returns unsorted
/// eigenvalues and the orthogonal matrix of eigenvectors (as columns).
/// Converges when off(A) <= 1e-13 * ||A||_F.
pub fn jacobi_eigh(a: &Array2<f64>, order: SweepOrder) -> Result<(Array1<f64>, Array2<f64>)> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::Consistency("eigh input not square".into()));
    }
    let mut max_dev = 0.0f64;
    for x in 0..n {
        for y in 0..x {
            max_dev = max_dev.max((a[[x, y]] - a[[y, x]]).abs());
        }
    }
    if max_dev > 1e-10 {
        return Err(Error::NonSymmetric { max_dev });
    }

    let mut a = a.clone();
    let mut v = Array2::<f64>::eye(n);
    let fro = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = 1e-13 * fro;

    let pairs: Vec<(usize, usize)> = match order {
        SweepOrder::RowCyclic => {
            let mut p = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    p.push((i, j));
                }
            }
            p
        }
        SweepOrder::ColumnCyclic => {
            let mut p = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    p.push((i, j));
                }
            }
            p
        }
    };

    for _ in 0..MAX_SWEEPS {
        if off_norm(&a) <= threshold {
            return Ok((a.diag().to_owned(), v));
        }
        for &(p, q) in &pairs {
            let apq = a[[p, q]];
            if apq == 0.0 {
                continue;
            }
            let theta = (a[[q, q]] - a[[p, p]]) / (2.0 * apq);
            let t = if theta >= 0.0 {
                1.0 / (theta + (1.0 + theta * theta).sqrt())
            } else {
                -1.0 / (-theta + (1.0 + theta * theta).sqrt())
            };
            let c = 1.0 / (1.0 + t * t).sqrt();
            let s = t * c;
            // A <- J^T A J, V <- V J with J the (p,q) plane rotation
            for k in 0..n {
                let akp = a[[k, p]];
                let akq = a[[k, q]];
                a[[k, p]] = c * akp - s * akq;
                a[[k, q]] = s * akp + c * akq;
            }
            for k in 0..n {
                let apk = a[[p, k]];
                let aqk = a[[q, k]];
                a[[p, k]] = c * apk - s * aqk;
                a[[q, k]] = s * apk + c * aqk;
            }
            for k in 0..n {
                let vkp = v[[k, p]];
                let vkq = v[[k, q]];
                v[[k, p]] = c * vkp - s * vkq;
                v[[k, q]] = s * vkp + c * vkq;
            }
        }
    }
    let off = off_norm(&a);
    if off <= threshold {
        Ok((a.diag().to_owned(), v))
    } else {
        Err(Error::NoConvergence { off_norm: off })
    }
}

fn off_norm(a: &Array2<f64>) -> f64 {
    let n = a.nrows();
    let mut s = 0.0;
    for x in 0..n {
        for y in 0..n {
            if x != y {
                s += a[[x, y]] * a[[x, y]];
            }
        }
    }
    s.sqrt()
}

/// Solves A x = b by Gaussian elimination with partial pivoting.
pub fn solve(a: &Array2<f64>, b: &Array1<f64>) -> Result<Array1<f64>> {
    let n = a.nrows();
    if a.ncols() != n || b.len() != n {
        return Err(Error::Consistency("solve dimensions mismatch".into()));
    }
    let mut m = a.clone();
    let mut x = b.clone();
    for col in 0..n {
        let mut pivot = col;
        for row in col + 1..n {
            if m[[row, col]].abs() > m[[pivot, col]].abs() {
                pivot = row;
            }
        }
        if m[[pivot, col]] == 0.0 {
            return Err(Error::Consistency("singular linear system".into()));
        }
        if pivot != col {
            for k in col..n {
                m.swap([col, k], [pivot, k]);
            }
            x.swap(col, pivot);
        }
        let d = m[[col, col]];
        for row in col + 1..n {
            let factor = m[[row, col]] / d;
            if factor == 0.0 {
                continue;
            }
            for k in col..n {
                m[[row, k]] -= factor * m[[col, k]];
            }
            x[row] -= factor * x[col];
        }
    }
    for col in (0..n).rev() {
        let mut acc = x[col];
        for k in col + 1..n {
            acc -= m[[col, k]] * x[k];
        }
        x[col] = acc / m[[col, col]];
    }
    Ok(x)
}
