//! Maximum flow between two vertices and the saturated cut it certifies.

use spectral_graph::cuts::max_flow_min_cut;
use spectral_graph::io::parse_edge_csv;

fn main() -> spectral_graph::Result<()> {
    let g = parse_edge_csv(include_str!("../data/weighted8.csv"), false)?;
    let f = max_flow_min_cut(&g, 0, 6)?;
    println!("max flow 0 -> 6 = {:.2}", f.max_flow);
    for (m, n, c) in &f.cut_edges {
        println!("  cut edge ({m}, {n}) capacity {c}");
    }
    println!("source side {:?}", f.source_side);
    Ok(())
}
