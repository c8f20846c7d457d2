//! Every eigenmap in two dimensions, then the normalization schemes applied
//! to the Laplacian one.

use spectral_graph::embedding::{embed, normalize_embedding, Mapping, Normalization};
use spectral_graph::io::{embedding_csv, parse_edge_csv};

fn main() -> spectral_graph::Result<()> {
    let g = parse_edge_csv(include_str!("../data/weighted8.csv"), false)?;
    for mapping in [
        Mapping::Laplacian,
        Mapping::Generalized,
        Mapping::Normalized,
        Mapping::CommuteTime,
        Mapping::Diffusion { t: 2 },
        Mapping::CumulativeDiffusion,
    ] {
        let e = embed(&g, mapping, 2)?;
        println!("# {} (λ = {:.4?})", mapping.name(), e.eigenvalues);
        print!("{}", embedding_csv(&e, None));
    }

    let base = embed(&g, Mapping::Laplacian, 2)?;
    for scheme in Normalization::ALL {
        let e = normalize_embedding(&base, scheme)?;
        println!(
            "{scheme}: q0 = {:.3}, q7 = {:.3}",
            e.coords.row(0),
            e.coords.row(7)
        );
    }
    Ok(())
}
