use ndarray::Array2;
use serde::Serialize;

use super::zero_tolerance;
use crate::error::{Error, Result};

/// Largest matrix accepted by [`characteristic_polynomial`].
pub const MAX_CHARPOLY_SIZE: usize = 20;

/// Monic polynomial, coefficients in descending powers `[1, c1, ..., cN]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharPoly {
    pub coefficients: Vec<f64>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients.iter().fold(0.0, |acc, c| acc * x + c)
    }

    fn is_integral(&self) -> bool {
        self.coefficients
            .iter()
            .all(|c| (c - c.round()).abs() < 1e-6 * (1.0 + c.abs()))
    }

    fn rounded(mut self) -> Self {
        self.coefficients
            .iter_mut()
            .for_each(|c| *c = c.round() + 0.0);
        self
    }
}

/// `det(λI - M)` by the Faddeev–LeVerrier recursion.
///
/// With `B_0 = I`, `c_k = -tr(M B_{k-1}) / k` and `B_k = M B_{k-1} + c_k I`.
/// Integer matrices give integer coefficients up to rounding, which is
/// removed.
pub fn characteristic_polynomial(m: &Array2<f64>) -> Result<CharPoly> {
    let (rows, cols) = m.dim();
    if rows != cols {
        return Err(Error::NotSquare(rows, cols));
    }
    if rows > MAX_CHARPOLY_SIZE {
        return Err(Error::TooLarge {
            n: rows,
            max: MAX_CHARPOLY_SIZE,
        });
    }
    let n = rows;
    let mut coefficients = Vec::with_capacity(n + 1);
    coefficients.push(1.0);
    let mut b = Array2::<f64>::eye(n);
    for k in 1..=n {
        let mb = m.dot(&b);
        let c = -mb.diag().sum() / k as f64;
        coefficients.push(c);
        b = mb;
        for i in 0..n {
            b[[i, i]] += c;
        }
    }
    let integral_input = m.iter().all(|v| v.fract() == 0.0);
    let cp = CharPoly { coefficients };
    Ok(if integral_input { cp.rounded() } else { cp })
}

/// Product of `(λ - μ)` over the distinct values among `eigenvalues`.
///
/// Eigenvalues within `1e-6 · max(1, |λ|max)` of each other are one root.
/// When `cp` has integral coefficients the result is rounded as well.
pub fn minimal_polynomial(cp: &CharPoly, eigenvalues: &[f64]) -> CharPoly {
    let mut sorted = eigenvalues.to_vec();
    sorted.sort_by(f64::total_cmp);
    let tol = 1e3 * zero_tolerance(&sorted);
    let zero = zero_tolerance(&sorted);

    let mut roots: Vec<f64> = Vec::new();
    let mut cluster: Vec<f64> = Vec::new();
    for &l in &sorted {
        if let Some(&last) = cluster.last() {
            if l - last > tol {
                roots.push(mean(&cluster));
                cluster.clear();
            }
        }
        cluster.push(l);
    }
    if !cluster.is_empty() {
        roots.push(mean(&cluster));
    }

    let mut coefficients = vec![1.0];
    for mut r in roots {
        if r.abs() < zero {
            r = 0.0;
        }
        coefficients.push(0.0);
        for i in (1..coefficients.len()).rev() {
            coefficients[i] -= r * coefficients[i - 1];
        }
    }
    let minimal = CharPoly { coefficients };
    if cp.is_integral() {
        minimal.rounded()
    } else {
        minimal
    }
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}
