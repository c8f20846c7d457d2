//! Two-way clustering by the sign of the Fiedler vector, for each
//! eigenproblem, plus the eigengap that says how much to trust it.

use spectral_graph::embedding::{fiedler_bipartition, relative_eigengap, FiedlerVariant};
use spectral_graph::io::parse_edge_csv;
use spectral_graph::spectral::{decompose, MatrixKind};

fn main() -> spectral_graph::Result<()> {
    let g = parse_edge_csv(include_str!("../data/weighted8.csv"), false)?;
    for variant in [
        FiedlerVariant::Laplacian,
        FiedlerVariant::Generalized,
        FiedlerVariant::Normalized,
    ] {
        let p = fiedler_bipartition(&g, variant)?;
        println!("{variant:?}: E = {:?}, H = {:?}", p.e(), p.h());
    }
    let e = decompose(&g, MatrixKind::Laplacian)?;
    println!(
        "δ_r(1) = {:.3}",
        relative_eigengap(e.eigenvalues.as_slice().unwrap_or(&[]), 1)?
    );

    let split = parse_edge_csv(include_str!("../data/two_components8.csv"), false)?;
    let p = fiedler_bipartition(&split, FiedlerVariant::Laplacian)?;
    println!("two components: {:?}", p.sets);
    Ok(())
}
