//! Down-scaling a random graph with each sampling strategy.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectral_graph::graph::connected_components;
use spectral_graph::sampling::{downscale, SampleConfig, SampleMethod};
use spectral_graph::Graph;

fn main() -> spectral_graph::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut edges = Vec::new();
    for m in 0..40 {
        for n in m + 1..40 {
            if rng.gen_bool(0.08) {
                edges.push((m, n, rng.gen_range(0.1..1.0)));
            }
        }
    }
    let g = Graph::new(40, false, &edges)?;
    println!("input: {} vertices, {} edges", g.n(), g.edge_count());

    for method in SampleMethod::ALL {
        let s = downscale(&g, &SampleConfig::new(method, 12).with_seed(1))?;
        println!(
            "{method:<3} kept {:>2} vertices, {:>2} edges, {} components",
            s.vertices.len(),
            s.graph.edge_count(),
            connected_components(&s.graph).len()
        );
    }
    Ok(())
}
