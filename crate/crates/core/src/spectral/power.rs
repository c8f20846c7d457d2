use ndarray::{Array1, Array2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::check_symmetric;
use crate::error::{Error, Result};
use crate::DEFAULT_SEED;

const CONVERGENCE: f64 = 1e-12;
const MAX_REDRAWS: usize = 16;

/// One eigenpair found by the power method.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenPair {
    pub value: f64,
    pub vector: Vec<f64>,
    /// Iterations spent before the update fell under 1e-12 (or the cap).
    pub iterations: usize,
    /// `‖W u - λ u‖` against the original matrix.
    pub residual: f64,
}

/// Largest-magnitude eigenpairs of a symmetric `W` by power iteration with
/// deflation `W ← W - λ u uᵀ`, seeded with [`DEFAULT_SEED`].
pub fn power_method_eig(
    w: &Array2<f64>,
    count: usize,
    iterations: usize,
) -> Result<Vec<EigenPair>> {
    power_method_seeded(w, count, iterations, DEFAULT_SEED)
}

/// [`power_method_eig`] with an explicit seed for the random ±1 start vectors.
pub fn power_method_seeded(
    w: &Array2<f64>,
    count: usize,
    iterations: usize,
    seed: u64,
) -> Result<Vec<EigenPair>> {
    check_symmetric(w)?;
    let n = w.nrows();
    if count > n {
        return Err(Error::DimensionTooLarge { dim: count, max: n });
    }
    if iterations == 0 {
        return Err(Error::InvalidSize(
            "power method needs at least one iteration".into(),
        ));
    }
    let scale = w
        .iter()
        .fold(0.0f64, |acc, v| acc.max(v.abs()))
        .max(f64::MIN_POSITIVE);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut deflated = w.clone();
    let mut pairs = Vec::with_capacity(count);

    for _ in 0..count {
        let mut u = Array1::zeros(n);
        let mut steps = 0;
        for _ in 0..MAX_REDRAWS {
            let x: Array1<f64> = (0..n)
                .map(|_| if rng.gen::<bool>() { 1.0 } else { -1.0 })
                .collect();
            let wx = deflated.dot(&x);
            if norm(&wx) > 1e-12 * scale * (n as f64).sqrt() {
                u = &x / norm(&x);
                break;
            }
        }
        if norm(&u) == 0.0 {
            // what is left of the matrix is numerically zero
            u[pairs.len() % n.max(1)] = 1.0;
        }
        while steps < iterations {
            steps += 1;
            let next = deflated.dot(&u);
            let len = norm(&next);
            if len == 0.0 {
                break;
            }
            let next = next / len;
            let moved = norm(&(&next - &u)).min(norm(&(&next + &u)));
            u = next;
            if moved < CONVERGENCE {
                break;
            }
        }
        let value = u.dot(&deflated.dot(&u));
        let residual = norm(&(w.dot(&u) - value * &u));
        for i in 0..n {
            for j in 0..n {
                deflated[[i, j]] -= value * u[i] * u[j];
            }
        }
        let mut vector = u.to_vec();
        super::align_sign(&mut vector);
        pairs.push(EigenPair {
            value,
            vector,
            iterations: steps,
            residual,
        });
    }
    Ok(pairs)
}

fn norm(v: &Array1<f64>) -> f64 {
    v.dot(v).sqrt()
}
