//! k-means on the rows of a spectral embedding, against the sign-pattern
//! clusters it refines.

use spectral_graph::embedding::{
    embed, kmeans_refine, normalize_embedding, sign_clusters, Mapping, Normalization,
};
use spectral_graph::io::parse_edge_csv;
use spectral_graph::DEFAULT_SEED;

fn main() -> spectral_graph::Result<()> {
    let g = parse_edge_csv(include_str!("../data/weighted8.csv"), false)?;
    let e = normalize_embedding(
        &embed(&g, Mapping::Generalized, 2)?,
        Normalization::UnitNorm,
    )?;
    println!("sign clusters {:?}", sign_clusters(&e));
    for k in 2..=4 {
        let a = kmeans_refine(&e, k, DEFAULT_SEED)?;
        println!(
            "k = {k}: labels {:?}, {} iterations, objective {:.4}",
            a.labels,
            a.iterations,
            a.objective(&e.coords)
        );
    }
    Ok(())
}
