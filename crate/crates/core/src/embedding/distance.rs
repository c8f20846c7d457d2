use ndarray::{Array1, Array2};

use super::{embed, Mapping};
use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph, LaplacianVariant};
use crate::spectral::{eig_generalized, eig_symmetric, MatrixKind};

fn require_connected(g: &Graph, vertices: &[usize]) -> Result<()> {
    if g.is_directed() {
        return Err(Error::Directed);
    }
    let n = g.n();
    if let Some(&index) = vertices.iter().find(|&&v| v >= n) {
        return Err(Error::IndexOutOfRange { index, n });
    }
    let components = connected_components(g);
    if components.len() > 1 {
        return Err(Error::Disconnected { components });
    }
    Ok(())
}

fn norm(v: &Array1<f64>) -> f64 {
    v.dot(v).sqrt()
}

/// `√V_V · ‖(p_m - p_n) D^(-1/2)‖` with `p_m` the rows of `P^t`.
pub fn diffusion_distance(g: &Graph, m: usize, n: usize, t: u32) -> Result<f64> {
    require_connected(g, &[m, n])?;
    let p = g.transition_matrix();
    let mut pt = Array2::<f64>::eye(g.n());
    for _ in 0..t {
        pt = pt.dot(&p);
    }
    let s = Array1::from(g.degrees().inv_sqrt());
    let diff = (&pt.row(m) - &pt.row(n)) * &s;
    let value = g.volume().sqrt() * norm(&diff);
    debug_assert!({
        let spectral = diffusion_distance_spectral(g, m, n, t)?;
        (value - spectral).abs() <= 1e-8 * (1.0 + value)
    });
    Ok(value)
}

/// The same distance through the eigenmap `ψ_k = u_k (1 - λ_k)^t` of the
/// generalized problem, all `n - 1` nonconstant columns.
pub fn diffusion_distance_spectral(g: &Graph, m: usize, n: usize, t: u32) -> Result<f64> {
    require_connected(g, &[m, n])?;
    let e = eig_generalized(g)?;
    let mut sq = 0.0;
    for k in 1..g.n() {
        let u = e.vector(k);
        let scale = (1.0 - e.eigenvalues[k]).powi(t as i32);
        let d = (u[m] - u[n]) * scale;
        sq += d * d;
    }
    Ok((g.volume() * sq).sqrt())
}

/// `√V_V · ‖q_m - q_n‖` over the full commute-time embedding.
pub fn commute_time_distance(g: &Graph, m: usize, n: usize) -> Result<f64> {
    require_connected(g, &[m, n])?;
    if m == n {
        return Ok(0.0);
    }
    let e = embed(g, Mapping::CommuteTime, g.n() - 1)?;
    let diff = &e.coords.row(m) - &e.coords.row(n);
    let value = g.volume().sqrt() * norm(&diff);
    debug_assert!({
        let other = commute_time_pinv(g, m, n)?;
        (value - other).abs() <= 1e-8 * (1.0 + value)
    });
    Ok(value)
}

/// `√(V_V · (L⁺_mm + L⁺_nn - 2 L⁺_mn))`
pub fn commute_time_pinv(g: &Graph, m: usize, n: usize) -> Result<f64> {
    require_connected(g, &[m, n])?;
    let lp = laplacian_pseudoinverse(&g.laplacian(&LaplacianVariant::Standard)?)?;
    let r = lp[[m, m]] + lp[[n, n]] - 2.0 * lp[[m, n]];
    Ok((g.volume() * r.max(0.0)).sqrt())
}

/// `U · diag(0, 1/λ_1, ..., 1/λ_(N-1)) · Uᵀ` for a Laplacian with a single
/// zero eigenvalue.
pub fn laplacian_pseudoinverse(l: &Array2<f64>) -> Result<Array2<f64>> {
    let e = eig_symmetric(l, MatrixKind::Laplacian)?;
    let zeros = e.zero_multiplicity();
    if zeros != 1 {
        return Err(Error::MultipleZeroEigenvalues(zeros));
    }
    let inv: Array1<f64> = e
        .eigenvalues
        .iter()
        .enumerate()
        .map(|(k, &l)| if k == 0 { 0.0 } else { 1.0 / l })
        .collect();
    let u = &e.eigenvectors;
    Ok((u * &inv).dot(&u.t()))
}
