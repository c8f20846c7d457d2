//! PageRank scores on a star, a circle and the weighted graph.

use spectral_graph::graph::Topology;
use spectral_graph::io::parse_edge_csv;
use spectral_graph::sampling::pagerank;

fn main() -> spectral_graph::Result<()> {
    let graphs = [
        ("star", Topology::Star.generate(5)?),
        ("circle", Topology::Circular.generate(6)?),
        (
            "weighted8",
            parse_edge_csv(include_str!("../data/weighted8.csv"), false)?,
        ),
    ];
    for (name, g) in &graphs {
        let r = pagerank(g, 0.85, 1e-12)?;
        println!("{name:<10} {:.4?}  sum {:.12}", r, r.iter().sum::<f64>());
    }
    Ok(())
}
