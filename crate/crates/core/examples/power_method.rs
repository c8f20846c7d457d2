//! Largest-magnitude eigenpairs of `W_N` by power iteration with deflation,
//! next to the dense solver.

use spectral_graph::io::parse_edge_csv;
use spectral_graph::spectral::{decompose, power_method_eig, MatrixKind};

fn main() -> spectral_graph::Result<()> {
    let g = parse_edge_csv(include_str!("../data/weighted8.csv"), false)?;
    let pairs = power_method_eig(&g.normalized_weights(), 4, 200)?;

    let mut exact = decompose(&g, MatrixKind::NormalizedWeight)?
        .eigenvalues
        .to_vec();
    exact.sort_by(|a, b| b.abs().total_cmp(&a.abs()));
    for (p, x) in pairs.iter().zip(&exact) {
        println!(
            "power {:>8.4}  dense {:>8.4}  iterations {:>3}  residual {:.1e}",
            p.value, x, p.iterations, p.residual
        );
    }
    Ok(())
}
