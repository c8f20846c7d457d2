//! Commute-time distances through the Laplacian pseudo-inverse.

use spectral_graph::embedding::{commute_time_distance, laplacian_pseudoinverse};
use spectral_graph::graph::LaplacianVariant;
use spectral_graph::io::parse_edge_csv;

fn main() -> spectral_graph::Result<()> {
    let g = parse_edge_csv(include_str!("../data/weighted8.csv"), false)?;
    let lp = laplacian_pseudoinverse(&g.laplacian(&LaplacianVariant::Standard)?)?;
    println!("L+ diagonal {:.3}", lp.diag());

    for m in 0..g.n() {
        let row: Vec<String> = (0..g.n())
            .map(|n| commute_time_distance(&g, m, n).map(|d| format!("{d:5.2}")))
            .collect::<Result<_, _>>()?;
        println!("{}", row.join(" "));
    }
    Ok(())
}
