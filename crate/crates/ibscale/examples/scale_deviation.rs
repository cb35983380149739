//! Check a partition against the bundled 29-item motivation instrument.
//!
//! Simulates respondents over the instrument's 7 subscales with profile
//! means descending along the self-determination continuum, clusters
//! the items at t = 2 and t = 7, and reports which items deviate from
//! their theoretical subscale as well as the continuum alignment score.
//!
//! Run with: cargo run --example scale_deviation

use ibscale::probability::{estimate_joint, JointMode};
use ibscale::scales::{self, builtin_scale_map};
use ibscale::solver::{self, SolverConfig};
use ibscale::synth::{generate_synthetic, SyntheticSpec};

fn main() -> ibscale::Result<()> {
    let map = builtin_scale_map();
    println!("instrument: {} items in {} subscales", map.item_count(), {
        map.subscale_items().len()
    });
    for (name, items) in map.subscale_items() {
        println!("  {:>20}: {{{}}}", name, items.join(", "));
    }

    let groups: Vec<Vec<String>> = map
        .subscale_items()
        .iter()
        .map(|(_, items)| items.iter().map(|s| s.to_string()).collect())
        .collect();
    let spec = SyntheticSpec {
        respondents: 300,
        groups,
        // One mean per subscale in continuum order, two profiles.
        profile_means: vec![
            vec![6.0, 6.0, 6.0, 4.0, 2.0, 2.0, 2.0],
            vec![5.0, 5.0, 5.0, 4.0, 3.0, 3.0, 3.0],
        ],
        noise_sd: 1.0,
        level_count: 7,
        seed: 31,
    };
    let (matrix, _) = generate_synthetic(&spec)?;
    let joint = estimate_joint(&matrix, JointMode::AnswerLevel)?;

    for t in [2usize, 7] {
        let config = SolverConfig {
            restarts: 32,
            seed: 31,
            ..Default::default()
        };
        let hard = solver::harden(&solver::solve(&joint, t, &config)?, matrix.item_ids())?;
        println!("\nt = {t}:");
        for (c, members) in hard.members().iter().enumerate() {
            println!("  cluster {}: {{{}}}", c + 1, members.join(", "));
        }
        let deviations = scales::deviation_report(&hard, &map)?;
        if deviations.is_empty() {
            println!("  no deviating items");
        }
        for d in &deviations {
            println!(
                "  item {:>4} expected {:?} but sits with {:?}",
                d.item,
                d.expected,
                d.cluster_majority.join(" / ")
            );
        }
        let (alignment, degenerate) = scales::partition_alignment(&hard, &map)?;
        println!(
            "  continuum alignment: {alignment:.4}{}",
            if degenerate { " (degenerate)" } else { "" }
        );
    }
    Ok(())
}
