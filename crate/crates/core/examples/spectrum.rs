//! Eigenvalues of every graph matrix of the weighted 8-vertex graph.

use spectral_graph::io::parse_edge_csv;
use spectral_graph::spectral::{decompose, MatrixKind};

fn main() -> spectral_graph::Result<()> {
    let g = parse_edge_csv(include_str!("../data/weighted8.csv"), false)?;
    for kind in [
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::NormalizedLaplacian,
        MatrixKind::GeneralizedLaplacian,
        MatrixKind::NormalizedWeight,
    ] {
        let e = decompose(&g, kind)?;
        let values: Vec<String> = e.eigenvalues.iter().map(|l| format!("{l:.4}")).collect();
        println!(
            "{:<22} zeros={} [{}]",
            kind.name(),
            e.zero_multiplicity(),
            values.join(", ")
        );
    }

    let e = decompose(&g, MatrixKind::Laplacian)?;
    println!("fiedler vector {:.3}", e.vector(1));
    Ok(())
}
