//! Reproducible run bundles driven by a manifest.
//!
//! Writes a synthetic dataset, builds a RunManifest, executes the sweep
//! into an output directory, then re-runs the saved manifest and checks
//! the outputs are byte-identical.
//!
//! Run with: cargo run --example run_bundle

use std::fs;

use ibscale::probability::JointMode;
use ibscale::run::{self, RunManifest};
use ibscale::solver::SolverConfig;
use ibscale::synth::{generate_synthetic, SyntheticSpec};

fn main() -> ibscale::Result<()> {
    let dir = std::env::temp_dir().join("ibscale-run-bundle");
    let _ = fs::remove_dir_all(&dir);

    let spec = SyntheticSpec::uniform_groups(
        200,
        3,
        3,
        vec![vec![2.0, 4.0, 6.0], vec![3.0, 5.0, 7.0]],
        1.0,
        19,
    );
    let (matrix, planted) = generate_synthetic(&spec)?;
    run::write_synthetic(&dir, &matrix, &planted, &spec)?;
    let data = dir.join("data.csv");

    let manifest = RunManifest {
        tool_version: run::TOOL_VERSION.to_string(),
        input_path: data.to_string_lossy().into_owned(),
        input_sha256: run::file_sha256(&data)?,
        delimiter: ',',
        level_count: 7,
        joint_mode: JointMode::AnswerLevel,
        solver: SolverConfig {
            restarts: 32,
            seed: 7,
            ..Default::default()
        },
        t_min: 1,
        t_max: 5,
        warm_start: true,
        scale_map_path: None,
        out_dir: dir.join("out").to_string_lossy().into_owned(),
    };

    let written = run::run_sweep(&manifest)?;
    println!("first run wrote:");
    for path in &written {
        println!("  {}", path.display());
    }

    let saved = RunManifest::load(dir.join("out/manifest.json"))?;
    let snapshot: Vec<Vec<u8>> = written.iter().map(|p| fs::read(p).unwrap()).collect();
    let rerun = run::run_sweep(&saved)?;
    let identical = rerun
        .iter()
        .zip(&snapshot)
        .all(|(p, bytes)| fs::read(p).unwrap() == *bytes);
    println!("rerun from saved manifest byte-identical: {identical}");
    Ok(())
}
