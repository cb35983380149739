//! Compare the bottleneck partition against classical baselines.
//!
//! Runs IB, k-means on item columns and average-linkage agglomerative
//! clustering on the same synthetic data, then cross-scores all three
//! with the adjusted Rand index.
//!
//! Run with: cargo run --example baseline_comparison

use ibscale::baselines::{self, ItemVectors, Linkage};
use ibscale::emit;
use ibscale::probability::{estimate_joint, JointMode};
use ibscale::solver::{self, SolverConfig};
use ibscale::synth::{generate_synthetic, SyntheticSpec};

fn main() -> ibscale::Result<()> {
    let spec = SyntheticSpec::uniform_groups(
        300,
        3,
        4,
        vec![
            vec![2.0, 4.0, 6.0],
            vec![2.0, 4.0, 6.0],
            vec![3.0, 5.0, 7.0],
        ],
        1.0,
        17,
    );
    let (matrix, planted) = generate_synthetic(&spec)?;

    let joint = estimate_joint(&matrix, JointMode::AnswerLevel)?;
    let config = SolverConfig {
        restarts: 32,
        seed: 4,
        ..Default::default()
    };
    let ib = solver::harden(&solver::solve(&joint, 3, &config)?, matrix.item_ids())?;

    let vectors = ItemVectors::from_responses(&matrix)?;
    let km = baselines::kmeans(&vectors, 3, 4, 32)?;
    let tree = baselines::agglomerative(&vectors, Linkage::Average)?;
    let agg = tree.cut(3)?;

    let named = [("ib", &ib), ("kmeans", &km), ("agglomerative", &agg)];
    println!("ARI against the planted partition:");
    for (name, part) in &named {
        let ari = baselines::adjusted_rand_index(part, &planted)?;
        println!("  {name:>14}: {ari:.4}");
    }

    println!("pairwise ARI:");
    for (a, pa) in &named {
        for (b, pb) in &named {
            print!("  {a}/{b} = {:.4}", baselines::adjusted_rand_index(pa, pb)?);
        }
        println!();
    }

    println!("\nagglomerative merge history:\n{}", emit::linkage_ascii(&tree));
    Ok(())
}
