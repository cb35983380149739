//! Score cluster internal consistency with Cronbach's alpha.
//!
//! Clusters synthetic items, then computes alpha for each recovered
//! cluster and for the full item set.
//!
//! Run with: cargo run --example reliability

use ibscale::baselines::cronbach_alpha;
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
        13,
    );
    let (matrix, _) = generate_synthetic(&spec)?;
    let joint = estimate_joint(&matrix, JointMode::AnswerLevel)?;
    let config = SolverConfig {
        restarts: 32,
        seed: 9,
        ..Default::default()
    };
    let hard = solver::harden(&solver::solve(&joint, 3, &config)?, matrix.item_ids())?;

    for (c, indices) in hard.member_indices().iter().enumerate() {
        let alpha = cronbach_alpha(&matrix, indices)?;
        let ids: Vec<&str> = indices
            .iter()
            .map(|&i| matrix.item_ids()[i].as_str())
            .collect();
        println!("cluster {} {{{}}}: alpha = {alpha:.4}", c + 1, ids.join(", "));
    }

    let all: Vec<usize> = (0..matrix.item_count()).collect();
    println!("all items: alpha = {:.4}", cronbach_alpha(&matrix, &all)?);
    Ok(())
}
