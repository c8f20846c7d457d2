//! Closed-form spectra of circular graphs.

use std::f64::consts::PI;

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Harmonic basis `u_k(m) = e^(j2πmk/n) / √n` with `λ_k = e^(-j2πk/n)`,
/// the eigenpairs of the directed circular adjacency matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DftBasis {
    /// Column `k` is `u_k`.
    pub vectors: Array2<Complex64>,
    pub eigenvalues: Vec<Complex64>,
}

impl DftBasis {
    /// `max_k max_m |(A u_k)(m) - λ_k u_k(m)|`
    pub fn substitution_residual(&self, a: &Array2<f64>) -> Result<f64> {
        let n = self.eigenvalues.len();
        if a.dim() != (n, n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: a.nrows(),
            });
        }
        let mut worst = 0.0f64;
        for (k, &lambda) in self.eigenvalues.iter().enumerate() {
            let u = self.vectors.column(k);
            for m in 0..n {
                let au: Complex64 = (0..n).map(|i| u[i] * a[[m, i]]).sum();
                worst = worst.max((au - lambda * u[m]).norm());
            }
        }
        Ok(worst)
    }
}

pub fn dft_basis(n: usize) -> Result<DftBasis> {
    if n < 2 {
        return Err(Error::InvalidSize(format!(
            "DFT basis needs n >= 2, got {n}"
        )));
    }
    let scale = 1.0 / (n as f64).sqrt();
    let vectors = Array2::from_shape_fn((n, n), |(m, k)| {
        // reduce the phase index first to keep the argument small
        let phase = 2.0 * PI * ((m * k) % n) as f64 / n as f64;
        Complex64::from_polar(scale, phase)
    });
    let eigenvalues = (0..n)
        .map(|k| Complex64::from_polar(1.0, -2.0 * PI * k as f64 / n as f64))
        .collect();
    Ok(DftBasis {
        vectors,
        eigenvalues,
    })
}

/// `2 - 2 cos(2πk/n)` for `k = 0..n`, ascending.
pub fn circular_laplacian_eigenvalues(n: usize) -> Vec<f64> {
    let mut out: Vec<f64> = (0..n)
        .map(|k| 2.0 - 2.0 * (2.0 * PI * k as f64 / n as f64).cos())
        .collect();
    out.sort_by(f64::total_cmp);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Topology;

    #[test]
    fn first_vector_is_constant() {
        let b = dft_basis(8).unwrap();
        assert!((b.eigenvalues[0] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        for m in 0..8 {
            assert!((b.vectors[[m, 0]].re - 8f64.sqrt().recip()).abs() < 1e-15);
        }
    }

    #[test]
    fn substitution_on_directed_circle() {
        let a = Topology::DirectedCircular.generate(8).unwrap().adjacency();
        assert!(dft_basis(8).unwrap().substitution_residual(&a).unwrap() < 1e-12);
    }
}
