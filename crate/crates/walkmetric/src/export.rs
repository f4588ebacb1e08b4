//! File exports: CSV matrices, embedding coordinates, spectrum dumps,
//! and binary PGM heatmaps.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use ndarray::{Array1, Array2};

use crate::error::Result;
use crate::spectral::Spectrum;

/// Formats with the given number of significant digits, printf-%g style.
pub fn fmt_sig(v: f64, sig: usize) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if exp < -4 || exp >= sig as i32 {
        format!("{:.*e}", sig - 1, v)
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        let s = format!("{:.*}", decimals, v);
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    }
}

/// Symmetric-matrix CSV: header row with node labels, 12 significant
/// digits per entry.
pub fn matrix_csv(m: &Array2<f64>, labels: &[String]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "node,{}", labels.join(","));
    for (x, row) in m.rows().into_iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|&v| fmt_sig(v, 12)).collect();
        let _ = writeln!(out, "{},{}", labels[x], cells.join(","));
    }
    out
}

/// Embedding CSV: `node,deg,c1..ck`, with the degree column included for
/// plot sizing.
pub fn embedding_csv(coords: &Array2<f64>, degrees: &Array1<f64>, labels: &[String]) -> String {
    let k = coords.ncols();
    let mut out = String::from("node,deg");
    for j in 1..=k {
        let _ = write!(out, ",c{j}");
    }
    out.push('\n');
    for x in 0..coords.nrows() {
        let _ = write!(out, "{},{}", labels[x], fmt_sig(degrees[x], 12));
        for j in 0..k {
            let _ = write!(out, ",{}", fmt_sig(coords[[x, j]], 12));
        }
        out.push('\n');
    }
    out
}

/// Spectrum CSV with header `s,mu,psi_1..psi_N`; row s holds mu_s and the
/// components of eigenvector psi_s.
pub fn spectrum_csv(spec: &Spectrum) -> String {
    let n = spec.n();
    let mut out = String::from("s,mu");
    for x in 1..=n {
        let _ = write!(out, ",psi_{x}");
    }
    out.push('\n');
    for s in 0..n {
        let _ = write!(out, "{},{}", s + 1, fmt_sig(spec.eigenvalue(s), 12));
        for x in 0..n {
            let _ = write!(out, ",{}", fmt_sig(spec.eigenvectors()[[x, s]], 12));
        }
        out.push('\n');
    }
    out
}

/// Renders a matrix as binary PGM (P5), one pixel per entry, min-max
/// scaled to 0..255. A constant matrix maps to all-zero pixels.
pub fn pgm_bytes(m: &Array2<f64>) -> Vec<u8> {
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for &v in m.iter() {
        min = min.min(v);
        max = max.max(v);
    }
    let span = max - min;
    let mut out = format!("P5\n{cols} {rows}\n255\n").into_bytes();
    for &v in m.iter() {
        let px = if span > 0.0 {
            ((v - min) / span * 255.0).round() as u8
        } else {
            0
        };
        out.push(px);
    }
    out
}

pub fn write_pgm(path: &Path, m: &Array2<f64>) -> Result<()> {
    fs::write(path, pgm_bytes(m))?;
    Ok(())
}
