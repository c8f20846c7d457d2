//! Kronecker and Cartesian products: their adjacency spectra are the
//! products and sums of the factor spectra.

use spectral_graph::graph::{graph_product, ProductKind, Topology};
use spectral_graph::spectral::{decompose, MatrixKind};

fn main() -> spectral_graph::Result<()> {
    let path = Topology::Path.generate(3)?;
    let circle = Topology::Circular.generate(4)?;
    let a = decompose(&path, MatrixKind::Adjacency)?.eigenvalues;
    let b = decompose(&circle, MatrixKind::Adjacency)?.eigenvalues;

    for kind in [ProductKind::Kronecker, ProductKind::Cartesian] {
        let p = graph_product(&path, &circle, kind);
        let got = decompose(&p, MatrixKind::Adjacency)?.eigenvalues;
        let mut want: Vec<f64> = a
            .iter()
            .flat_map(|&x| {
                b.iter().map(move |&y| match kind {
                    ProductKind::Kronecker => x * y,
                    ProductKind::Cartesian => x + y,
                })
            })
            .collect();
        want.sort_by(f64::total_cmp);
        let worst = got
            .iter()
            .zip(&want)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        println!(
            "{kind:?}: {} vertices, {} edges, max spectrum mismatch {worst:.1e}",
            p.n(),
            p.edge_count()
        );
    }
    Ok(())
}
