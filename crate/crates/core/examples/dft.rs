//! The DFT basis diagonalizes the directed circle, and the undirected circle
//! has the closed-form spectrum `2 - 2 cos(2πk/N)`.

use spectral_graph::graph::{LaplacianVariant, Topology};
use spectral_graph::spectral::{
    circular_laplacian_eigenvalues, dft_basis, eig_symmetric, MatrixKind,
};

fn main() -> spectral_graph::Result<()> {
    for n in [4, 8, 16] {
        let a = Topology::DirectedCircular.generate(n)?.adjacency();
        let residual = dft_basis(n)?.substitution_residual(&a)?;
        println!("N = {n:>2}  ‖A U - U Λ‖ = {residual:.2e}");
    }

    let l = Topology::Circular
        .generate(8)?
        .laplacian(&LaplacianVariant::Standard)?;
    let dense = eig_symmetric(&l, MatrixKind::Laplacian)?;
    for (x, y) in dense
        .eigenvalues
        .iter()
        .zip(circular_laplacian_eigenvalues(8))
    {
        println!("{x:.6}  {y:.6}");
    }
    Ok(())
}
