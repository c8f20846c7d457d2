//! Characteristic and minimal polynomials of adjacency and Laplacian
//! matrices.

use spectral_graph::graph::LaplacianVariant;
use spectral_graph::io::parse_edge_csv;
use spectral_graph::spectral::{
    characteristic_polynomial, eig_symmetric, minimal_polynomial, MatrixKind,
};

fn main() -> spectral_graph::Result<()> {
    let connected = parse_edge_csv(include_str!("../data/unweighted8.csv"), false)?;
    let split = parse_edge_csv(include_str!("../data/two_components8.csv"), false)?;

    let a = connected.adjacency();
    let cp = characteristic_polynomial(&a)?;
    println!("adjacency  p(λ) = {:?}", cp.coefficients);
    println!("edges = -c2 = {}", -cp.coefficients[2]);

    let l = split.laplacian(&LaplacianVariant::Standard)?;
    let cp = characteristic_polynomial(&l)?;
    let e = eig_symmetric(&l, MatrixKind::Laplacian)?;
    let mp = minimal_polynomial(&cp, e.eigenvalues.as_slice().unwrap_or(&[]));
    println!("laplacian  p(λ) = {:?}", cp.coefficients);
    println!("minimal    P(λ) = {:?}", mp.coefficients);
    println!("p(4) = {}", cp.eval(4.0));
    Ok(())
}
