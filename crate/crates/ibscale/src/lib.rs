//! Information Bottleneck clustering for Likert questionnaire items.
//!
//! Items are treated as a categorical variable X and compressed into
//! clusters T while preserving information about the answer variable Y,
//! by minimizing I(T;X) - beta * I(T;Y) with a multi-restart iterative
//! solver. On top of the solver, the crate provides:
//!
//! - joint-distribution estimation from response matrices ([`probability`])
//! - a gradual partition across cluster counts with dendrogram links
//!   ([`hierarchy`]) and DOT/ASCII emitters ([`emit`])
//! - classical baselines: k-means, agglomerative clustering, Cronbach's
//!   alpha and the adjusted Rand index ([`baselines`])
//! - scale diagnostics against a theoretical item-to-subscale map,
//!   including the bundled 29-item academic motivation instrument
//!   ([`scales`])
//! - seeded synthetic populations with planted structure ([`synth`])
//! - reproducible run bundles and manifests ([`run`])
//!
//! See the `examples/` directory for one runnable example per
//! capability, and the `ibscale` binary for the command-line interface.

// Index-heavy numeric loops read better than iterator chains here.
#![allow(clippy::needless_range_loop)]

pub mod baselines;
pub mod emit;
pub mod error;
pub mod hierarchy;
pub mod partition;
pub mod probability;
pub mod response;
pub mod run;
pub mod scales;
pub mod solver;
pub mod synth;

pub use error::{Error, Result};
pub use partition::Partition;
pub use probability::{
    entropy, estimate_joint, estimate_joint_smoothed, kl_divergence, mutual_information,
    JointDistribution, JointMode,
};
pub use response::{read_csv, read_csv_path, IngestReport, ResponseMatrix};
pub use solver::{IbSolution, SolverConfig};
