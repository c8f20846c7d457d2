//! Degrees, walks, distances, spanning tree, Euler paths and betweenness.

use spectral_graph::graph::{
    betweenness, connected_components, distances, euler_path_exists, k_neighborhood,
    minimum_spanning_tree, walk_counts,
};
use spectral_graph::io::parse_edge_csv;

fn main() -> spectral_graph::Result<()> {
    let g = parse_edge_csv(include_str!("../data/weighted8.csv"), false)?;
    println!(
        "degrees {:.2?}  volume {:.2}",
        g.degrees().values(),
        g.volume()
    );
    println!("components {:?}", connected_components(&g));

    let walks = walk_counts(&g, 3)?;
    println!("walks of length 3 from 0 to 7: {}", walks.exact[[0, 7]]);
    println!("2-neighbourhood of 5: {:?}", k_neighborhood(&g, 5, 2)?);

    let d = distances(&g)?;
    println!("diameter {}  closeness {:.4?}", d.diameter, d.closeness);

    let tree = minimum_spanning_tree(&g)?;
    println!("spanning tree cost {:.4} over {:?}", tree.cost, tree.edges);
    println!("euler {:?}", euler_path_exists(&g)?);

    let b = betweenness(&g)?;
    println!("vertex betweenness {:.2?}", b.vertex);
    Ok(())
}
