//! Solve the Information Bottleneck problem at a single cluster count.
//!
//! Generates a small synthetic questionnaire, estimates the item/answer
//! joint distribution and compresses the 9 items into 3 clusters.
//!
//! Run with: cargo run --example solve_basic

use ibscale::probability::{estimate_joint, mutual_information, JointMode};
use ibscale::solver::{self, SolverConfig};
use ibscale::synth::{generate_synthetic, SyntheticSpec};

fn main() -> ibscale::Result<()> {
    let spec = SyntheticSpec::uniform_groups(
        200,
        3,
        3,
        vec![vec![2.0, 4.0, 6.0], vec![3.0, 5.0, 7.0]],
        1.0,
        11,
    );
    let (matrix, _) = generate_synthetic(&spec)?;

    let joint = estimate_joint(&matrix, JointMode::AnswerLevel)?;
    println!("I(X;Y) = {:.4} nats", mutual_information(&joint));

    let config = SolverConfig {
        beta: 50.0,
        restarts: 32,
        seed: 1,
        ..Default::default()
    };
    let solution = solver::solve(&joint, 3, &config)?;
    println!(
        "t = 3: I(T;X) = {:.4}, I(T;Y) = {:.4}, functional = {:.4}, converged = {}",
        solution.info_tx, solution.info_ty, solution.functional_value, solution.converged
    );

    let hard = solver::harden(&solution, matrix.item_ids())?;
    for (c, members) in hard.members().iter().enumerate() {
        println!("cluster {}: {{{}}}", c + 1, members.join(", "));
    }

    // Soft memberships of the first item across the three clusters.
    let memberships: Vec<String> = solution
        .assignment
        .iter()
        .map(|row| format!("{:.3}", row[0]))
        .collect();
    println!("p(t | item \"1\") = [{}]", memberships.join(", "));
    Ok(())
}
