//! Exhaustive minimum cuts under every metric, a sweep along the Fiedler
//! order and the Cheeger bounds.

use spectral_graph::cuts::{brute_force_min_cut, cheeger_bounds, cut_value, sweep_cut, CutMetric};
use spectral_graph::io::parse_edge_csv;
use spectral_graph::spectral::{decompose, eig_generalized, MatrixKind};

fn main() -> spectral_graph::Result<()> {
    let g = parse_edge_csv(include_str!("../data/weighted8.csv"), false)?;
    println!("Cut({{0,1,2,3}}) = {:.2}", cut_value(&g, &[0, 1, 2, 3])?);

    for metric in CutMetric::ALL {
        let r = brute_force_min_cut(&g, metric)?;
        println!(
            "{:<10} {:.4}  E = {:?}",
            metric.name(),
            r.value,
            r.partition.e()
        );
    }

    let fiedler = decompose(&g, MatrixKind::Laplacian)?;
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&a, &b| fiedler.eigenvectors[[a, 1]].total_cmp(&fiedler.eigenvectors[[b, 1]]));
    let sweep = sweep_cut(&g, &order, CutMetric::Ratio)?;
    println!(
        "sweep over {order:?}: {:.4} E = {:?}",
        sweep.value,
        sweep.partition.e()
    );

    let l1 = eig_generalized(&g)?.eigenvalues[1];
    let (lo, hi) = cheeger_bounds(l1)?;
    let phi = brute_force_min_cut(&g, CutMetric::Cheeger)?.value;
    println!("{lo:.4} <= φ = {phi:.4} <= {hi:.4}");
    Ok(())
}
