//! Diffusion distances from the random-walk matrix and from the diffusion
//! eigenmap, for a few step counts.

use spectral_graph::embedding::{diffusion_distance, diffusion_distance_spectral};
use spectral_graph::io::parse_edge_csv;

fn main() -> spectral_graph::Result<()> {
    let g = parse_edge_csv(include_str!("../data/weighted8.csv"), false)?;
    println!("V_V = {:.2}", g.volume());
    for t in [1, 2, 4, 8] {
        for (m, n) in [(1, 3), (6, 3), (0, 7)] {
            let walk = diffusion_distance(&g, m, n, t)?;
            let spectral = diffusion_distance_spectral(&g, m, n, t)?;
            println!("t = {t}  D({m},{n}) = {walk:.4}  (eigenmap {spectral:.4})");
        }
    }
    Ok(())
}
