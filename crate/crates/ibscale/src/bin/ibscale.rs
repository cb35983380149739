//! Command-line front end: ingestion summaries, single solves, hierarchy
//! sweeps, baseline comparisons, synthetic data generation and scale
//! reports. All heavy lifting lives in the library.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::RngCore;

use ibscale::baselines::Linkage;
use ibscale::probability::JointMode;
use ibscale::run::{self, ErrorRecord, RunManifest};
use ibscale::scales::{self, ScaleMap};
use ibscale::solver::{Annealing, SolverConfig};
use ibscale::synth::{generate_synthetic, SyntheticSpec};
use ibscale::{response, Result};

#[derive(Parser)]
#[command(name = "ibscale", version, about = "Information Bottleneck clustering of questionnaire items")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Answer,
    Respondent,
}

impl From<ModeArg> for JointMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Answer => JointMode::AnswerLevel,
            ModeArg::Respondent => JointMode::Respondent,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LinkageArg {
    Single,
    Complete,
    Average,
}

impl From<LinkageArg> for Linkage {
    fn from(l: LinkageArg) -> Self {
        match l {
            LinkageArg::Single => Linkage::Single,
            LinkageArg::Complete => Linkage::Complete,
            LinkageArg::Average => Linkage::Average,
        }
    }
}

#[derive(Args)]
struct InputArgs {
    /// CSV file: header row of item labels, one respondent per row.
    input: PathBuf,
    /// Cell delimiter.
    #[arg(long, default_value = ",")]
    delimiter: char,
    /// Number of answer levels.
    #[arg(long, default_value_t = 7)]
    levels: u8,
}

#[derive(Args)]
struct SolverArgs {
    /// Joint distribution mode.
    #[arg(long, value_enum, default_value = "answer")]
    mode: ModeArg,
    #[arg(long, default_value_t = 50.0)]
    beta: f64,
    /// Geometric beta annealing as start:ratio:stages, e.g. 1:2:6.
    #[arg(long)]
    anneal: Option<String>,
    #[arg(long, default_value_t = 100)]
    restarts: usize,
    #[arg(long, default_value_t = 500)]
    max_iterations: usize,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Master seed; omitted = drawn at random and printed.
    #[arg(long)]
    seed: Option<u64>,
    /// Additive smoothing on joint counts.
    #[arg(long, default_value_t = 0.0)]
    smoothing: f64,
}

impl SolverArgs {
    fn to_config(&self) -> Result<SolverConfig> {
        let annealing = match &self.anneal {
            None => None,
            Some(text) => {
                let parts: Vec<&str> = text.split(':').collect();
                let parsed = (parts.len() == 3)
                    .then(|| {
                        Some(Annealing {
                            start: parts[0].parse().ok()?,
                            ratio: parts[1].parse().ok()?,
                            stages: parts[2].parse().ok()?,
                        })
                    })
                    .flatten();
                match parsed {
                    Some(a) => Some(a),
                    None => {
                        return Err(ibscale::Error::DomainError(format!(
                            "--anneal expects start:ratio:stages, got {text:?}"
                        )))
                    }
                }
            }
        };
        let seed = self.seed.unwrap_or_else(|| {
            let s = rand::thread_rng().next_u64();
            eprintln!("no --seed given; using seed {s}");
            s
        });
        Ok(SolverConfig {
            beta: self.beta,
            annealing,
            restarts: self.restarts,
            max_iterations: self.max_iterations,
            convergence_tol: self.tol,
            seed,
            smoothing: self.smoothing,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse a CSV file and print ingestion statistics.
    Ingest {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Solve the IB problem at a single cluster count.
    Solve {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        solver: SolverArgs,
        /// Cluster count.
        #[arg(short, long)]
        t: usize,
        /// Write solution.json here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep cluster counts and write the full hierarchy bundle.
    Sweep {
        /// Re-run an existing manifest instead of giving flags.
        #[arg(long, conflicts_with_all = ["input", "t_min", "t_max"])]
        manifest: Option<PathBuf>,
        input: Option<PathBuf>,
        #[arg(long, default_value = ",")]
        delimiter: char,
        #[arg(long, default_value_t = 7)]
        levels: u8,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long, default_value_t = 1)]
        t_min: usize,
        #[arg(long, default_value_t = 7)]
        t_max: usize,
        /// Seed level t+1 with a split of level t's winner.
        #[arg(long, default_value_t = false)]
        warm_start: bool,
        /// Scale map CSV, or the literal "builtin".
        #[arg(long)]
        scale_map: Option<String>,
        /// Output directory for the bundle.
        #[arg(long, default_value = "ibscale-out")]
        out: PathBuf,
    },
    /// Compare IB against k-means and agglomerative clustering.
    Compare {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(short, long)]
        k: usize,
        #[arg(long, value_enum, default_value = "average")]
        linkage: LinkageArg,
        /// Also write the comparison as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a synthetic dataset with planted item groups.
    Synth {
        #[arg(long, default_value_t = 300)]
        respondents: usize,
        /// Group sizes, e.g. "4,4,4". Ignored with --builtin-scale.
        #[arg(long, default_value = "4,4,4")]
        groups: String,
        /// Profile means, one row per profile: "2,4,6;4,6,2;6,2,4".
        #[arg(long, default_value = "2,4,6;4,6,2;6,2,4")]
        means: String,
        /// Use the bundled 29-item subscale structure as the groups
        /// (means rows must then have 7 entries, one per subscale).
        #[arg(long, default_value_t = false)]
        builtin_scale: bool,
        #[arg(long, default_value_t = 1.0)]
        noise: f64,
        #[arg(long, default_value_t = 7)]
        levels: u8,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value = "ibscale-synth")]
        out: PathBuf,
    },
    /// Solve at one cluster count and report scale deviations.
    Report {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(short, long)]
        t: usize,
        /// Scale map CSV; defaults to the bundled instrument.
        #[arg(long, default_value = "builtin")]
        scale_map: String,
    },
}

fn load_map(spec: &str) -> Result<ScaleMap> {
    if spec == "builtin" {
        Ok(scales::builtin_scale_map())
    } else {
        ScaleMap::from_csv_path(spec)
    }
}

fn manifest_for(
    input: &InputArgs,
    solver: &SolverArgs,
    t_min: usize,
    t_max: usize,
    warm_start: bool,
    scale_map: Option<String>,
    out_dir: &str,
) -> Result<RunManifest> {
    run::build_manifest(
        &input.input.to_string_lossy(),
        input.delimiter,
        input.levels,
        solver.mode.into(),
        solver.to_config()?,
        t_min,
        t_max,
        warm_start,
        scale_map,
        out_dir,
    )
}

fn cmd_ingest(input: &InputArgs) -> Result<()> {
    let (matrix, report) =
        response::read_csv_path(&input.input, input.delimiter as u8, input.levels)?;
    println!("items:       {}", matrix.item_count());
    println!("respondents: {}", matrix.respondent_count());
    println!("dropped:     {} row(s)", report.dropped_rows);
    if !report.dropped_lines.is_empty() {
        println!("dropped lines: {:?}", report.dropped_lines);
    }
    println!("answer histograms (levels 1..={}):", matrix.level_count());
    for (id, hist) in matrix.item_ids().iter().zip(matrix.histograms()) {
        println!("  {:>8}: {:?}", id, hist);
    }
    Ok(())
}

fn cmd_solve(input: &InputArgs, solver: &SolverArgs, t: usize, out: Option<&PathBuf>) -> Result<()> {
    let manifest = manifest_for(input, solver, t, t, false, None, "")?;
    let doc = run::run_solve(&manifest, t)?;
    match out {
        Some(path) => {
            run::write_json(path, &doc)?;
            println!("wrote {}", path.display());
        }
        None => println!("{}", serde_json::to_string_pretty(&doc)?),
    }
    Ok(())
}

fn cmd_compare(
    input: &InputArgs,
    solver: &SolverArgs,
    k: usize,
    linkage: Linkage,
    out: Option<&PathBuf>,
) -> Result<()> {
    let manifest = manifest_for(input, solver, k, k, false, None, "")?;
    let report = run::run_compare(&manifest, k, linkage)?;
    if let Some(w) = &report.warning {
        eprintln!("warning: {w}");
    }
    println!("pairwise ARI (k = {k}):");
    print!("{:>15}", "");
    for m in &report.methods {
        print!("{:>15}", m.name);
    }
    println!();
    for (i, m) in report.methods.iter().enumerate() {
        print!("{:>15}", m.name);
        for j in 0..report.methods.len() {
            print!("{:>15.4}", report.ari[i][j]);
        }
        println!();
    }
    for m in &report.methods {
        println!("{} clusters:", m.name);
        for (c, members) in m.members.iter().enumerate() {
            println!("  C{}: {{{}}}", c + 1, members.join(", "));
        }
    }
    if let Some(path) = out {
        run::write_json(path, &report)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn parse_means(text: &str) -> Result<Vec<Vec<f64>>> {
    text.split(';')
        .map(|row| {
            row.split(',')
                .map(|v| {
                    v.trim().parse::<f64>().map_err(|_| {
                        ibscale::Error::DomainError(format!("bad mean value {v:?}"))
                    })
                })
                .collect()
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn cmd_synth(
    respondents: usize,
    groups: &str,
    means: &str,
    builtin_scale: bool,
    noise: f64,
    levels: u8,
    seed: Option<u64>,
    out: &Path,
) -> Result<()> {
    let seed = seed.unwrap_or_else(|| {
        let s = rand::thread_rng().next_u64();
        eprintln!("no --seed given; using seed {s}");
        s
    });
    let profile_means = parse_means(means)?;
    let spec = if builtin_scale {
        let map = scales::builtin_scale_map();
        let groups: Vec<Vec<String>> = map
            .subscale_items()
            .iter()
            .map(|(_, items)| items.iter().map(|s| s.to_string()).collect())
            .collect();
        SyntheticSpec {
            respondents,
            groups,
            profile_means,
            noise_sd: noise,
            level_count: levels,
            seed,
        }
    } else {
        let sizes: Vec<usize> = groups
            .split(',')
            .map(|v| {
                v.trim()
                    .parse()
                    .map_err(|_| ibscale::Error::DomainError(format!("bad group size {v:?}")))
            })
            .collect::<Result<_>>()?;
        let mut next = 1usize;
        let groups = sizes
            .iter()
            .map(|&size| {
                let g: Vec<String> = (next..next + size).map(|i| i.to_string()).collect();
                next += size;
                g
            })
            .collect();
        SyntheticSpec {
            respondents,
            groups,
            profile_means,
            noise_sd: noise,
            level_count: levels,
            seed,
        }
    };
    let (matrix, planted) = generate_synthetic(&spec)?;
    let written = run::write_synthetic(out, &matrix, &planted, &spec)?;
    for path in written {
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn cmd_report(input: &InputArgs, solver: &SolverArgs, t: usize, scale_map: &str) -> Result<()> {
    let map = load_map(scale_map)?;
    let manifest = manifest_for(input, solver, t, t, false, None, "")?;
    let doc = run::run_solve(&manifest, t)?;
    let deviations = scales::deviation_report(&doc.hardened, &map)?;
    let (alignment, degenerate) = scales::partition_alignment(&doc.hardened, &map)?;
    println!("t = {t}, functional = {:.6}", doc.solution.functional_value);
    for (c, members) in doc.hardened.members().iter().enumerate() {
        println!("C{}: {{{}}}", c + 1, members.join(", "));
    }
    if deviations.is_empty() {
        println!("no deviating items");
    } else {
        println!("deviating items:");
        for d in &deviations {
            println!(
                "  item {:>4}: expected {:?}, cluster majority {:?}{}",
                d.item,
                d.expected,
                d.cluster_majority.join(" / "),
                if d.cluster_mixed { " (mixed cluster)" } else { "" }
            );
        }
    }
    println!(
        "continuum alignment: {:.4}{}",
        alignment,
        if degenerate { " (degenerate)" } else { "" }
    );
    Ok(())
}

fn dispatch(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Ingest { input } => cmd_ingest(&input),
        Command::Solve {
            input,
            solver,
            t,
            out,
        } => cmd_solve(&input, &solver, t, out.as_ref()),
        Command::Sweep {
            manifest,
            input,
            delimiter,
            levels,
            solver,
            t_min,
            t_max,
            warm_start,
            scale_map,
            out,
        } => {
            let manifest = match manifest {
                Some(path) => RunManifest::load(path)?,
                None => {
                    let input = input.ok_or_else(|| {
                        ibscale::Error::DomainError("sweep needs an input file or --manifest".into())
                    })?;
                    let input = InputArgs {
                        input,
                        delimiter,
                        levels,
                    };
                    manifest_for(
                        &input,
                        &solver,
                        t_min,
                        t_max,
                        warm_start,
                        scale_map,
                        &out.to_string_lossy(),
                    )?
                }
            };
            let written = run::run_sweep(&manifest)?;
            for path in written {
                println!("wrote {}", path.display());
            }
            Ok(())
        }
        Command::Compare {
            input,
            solver,
            k,
            linkage,
            out,
        } => cmd_compare(&input, &solver, k, linkage.into(), out.as_ref()),
        Command::Synth {
            respondents,
            groups,
            means,
            builtin_scale,
            noise,
            levels,
            seed,
            out,
        } => cmd_synth(
            respondents,
            &groups,
            &means,
            builtin_scale,
            noise,
            levels,
            seed,
            &out,
        ),
        Command::Report {
            input,
            solver,
            t,
            scale_map,
        } => cmd_report(&input, &solver, t, &scale_map),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let record = ErrorRecord::from_error(&err);
            eprintln!("{}", serde_json::to_string(&record).unwrap());
            ExitCode::FAILURE
        }
    }
}
