//! Iterative Information Bottleneck solver.
//!
//! Items X are compressed into clusters T while preserving information
//! about the answer variable Y, by minimizing L = I(T;X) - beta * I(T;Y).
//! The fixed-point updates are
//!
//! ```text
//! p(t)     = sum_x p(x) p(t|x)
//! p(y|t)   = sum_x p(y|x) p(x|t)
//! p(t|x)   = p(t) exp(-beta * KL(p(y|x) || p(y|t))) / Z(x, beta)
//! ```
//!
//! iterated from a random initialization. Each sweep applies the p(t|x)
//! update and then re-derives p(t) and p(y|t), so the functional value
//! recorded at the end of a sweep is non-increasing at fixed beta. The
//! solver runs many independent seeded restarts and keeps the solution
//! with the lowest functional value.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::probability::JointDistribution;

/// Hard upper bound on items for [`exhaustive_oracle`].
pub const ENUMERATION_BOUND: usize = 12;

/// Geometric beta schedule: `start, start*ratio, ...` for `stages` stages.
/// The solver appends a final stage at the configured beta when the
/// schedule ends below it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Annealing {
    pub start: f64,
    pub ratio: f64,
    pub stages: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub beta: f64,
    pub annealing: Option<Annealing>,
    pub restarts: usize,
    pub max_iterations: usize,
    pub convergence_tol: f64,
    pub seed: u64,
    pub smoothing: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            beta: 50.0,
            annealing: None,
            restarts: 100,
            max_iterations: 500,
            convergence_tol: 1e-8,
            seed: 0,
            smoothing: 0.0,
        }
    }
}

impl SolverConfig {
    fn validate(&self) -> Result<()> {
        if self.beta <= 0.0 || self.restarts == 0 || self.convergence_tol <= 0.0 {
            return Err(Error::DomainError(
                "solver config requires beta > 0, restarts >= 1, tol > 0".into(),
            ));
        }
        Ok(())
    }

    fn beta_schedule(&self) -> Vec<f64> {
        let mut betas = Vec::new();
        if let Some(a) = self.annealing {
            let mut b = a.start;
            for _ in 0..a.stages {
                betas.push(b);
                b *= a.ratio;
            }
        }
        if betas.last().is_none_or(|&b| b != self.beta) {
            betas.push(self.beta);
        }
        betas
    }
}

/// A soft IB solution at one cluster count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IbSolution {
    pub cluster_count: usize,
    pub beta: f64,
    /// `assignment[t][x]` = p(t|x); each item column sums to 1.
    pub assignment: Vec<Vec<f64>>,
    /// p(t).
    pub cluster_prior: Vec<f64>,
    /// `relevance[t][y]` = p(y|t); rows of empty clusters are all zero.
    pub relevance: Vec<Vec<f64>>,
    pub functional_value: f64,
    pub info_tx: f64,
    pub info_ty: f64,
    pub iterations: usize,
    pub converged: bool,
    pub seed: u64,
    /// Clusters whose prior collapsed to zero; they are excluded from the
    /// relevance update but never reseeded.
    pub empty_clusters: Vec<usize>,
}

/// Precomputed per-joint quantities shared by every sweep.
struct Ctx<'a> {
    joint: &'a JointDistribution,
    cond: Vec<Vec<f64>>,
}

impl<'a> Ctx<'a> {
    fn new(joint: &'a JointDistribution) -> Self {
        Self {
            joint,
            cond: joint.conditional_rows(),
        }
    }

    fn items(&self) -> usize {
        self.joint.item_count()
    }

    fn categories(&self) -> usize {
        self.joint.category_count()
    }
}

fn derive_prior_relevance(
    ctx: &Ctx,
    assignment: &[Vec<f64>],
) -> (Vec<f64>, Vec<Vec<f64>>, Vec<usize>) {
    let t = assignment.len();
    let px = ctx.joint.marginal_x();
    let mut prior = vec![0.0; t];
    let mut relevance = vec![vec![0.0; ctx.categories()]; t];
    let mut empty = Vec::new();
    for c in 0..t {
        for x in 0..ctx.items() {
            prior[c] += px[x] * assignment[c][x];
        }
        if prior[c] > 0.0 {
            for (x, row) in ctx.joint.rows().iter().enumerate() {
                let w = assignment[c][x];
                if w > 0.0 {
                    for (y, &pxy) in row.iter().enumerate() {
                        relevance[c][y] += w * pxy;
                    }
                }
            }
            for v in &mut relevance[c] {
                *v /= prior[c];
            }
        } else {
            empty.push(c);
        }
    }
    (prior, relevance, empty)
}

fn information_terms(
    ctx: &Ctx,
    assignment: &[Vec<f64>],
    prior: &[f64],
    relevance: &[Vec<f64>],
) -> (f64, f64) {
    let px = ctx.joint.marginal_x();
    let py = ctx.joint.marginal_y();
    let mut info_tx = 0.0;
    for (c, row) in assignment.iter().enumerate() {
        if prior[c] == 0.0 {
            continue;
        }
        for (x, &a) in row.iter().enumerate() {
            if a > 0.0 {
                info_tx += a * px[x] * (a / prior[c]).ln();
            }
        }
    }
    let mut info_ty = 0.0;
    for (c, rel) in relevance.iter().enumerate() {
        if prior[c] == 0.0 {
            continue;
        }
        for (y, &r) in rel.iter().enumerate() {
            let pty = prior[c] * r;
            if pty > 0.0 && py[y] > 0.0 {
                info_ty += pty * (r / py[y]).ln();
            }
        }
    }
    (info_tx.max(0.0), info_ty.max(0.0))
}

fn finish_solution(
    ctx: &Ctx,
    beta: f64,
    assignment: Vec<Vec<f64>>,
    iterations: usize,
    converged: bool,
    seed: u64,
) -> IbSolution {
    let (prior, relevance, empty) = derive_prior_relevance(ctx, &assignment);
    let (info_tx, info_ty) = information_terms(ctx, &assignment, &prior, &relevance);
    IbSolution {
        cluster_count: assignment.len(),
        beta,
        assignment,
        cluster_prior: prior,
        relevance,
        functional_value: info_tx - beta * info_ty,
        info_tx,
        info_ty,
        iterations,
        converged,
        seed,
        empty_clusters: empty,
    }
}

/// Random Dirichlet(1) initialization of p(t|x), deterministic per seed,
/// with p(t) and p(y|t) derived from it.
pub fn initialize(joint: &JointDistribution, t: usize, seed: u64) -> Result<IbSolution> {
    check_cluster_count(t, joint.item_count())?;
    let ctx = Ctx::new(joint);
    let assignment = random_assignment(&ctx, t, seed);
    Ok(finish_solution(&ctx, 1.0, assignment, 0, false, seed))
}

fn random_assignment(ctx: &Ctx, t: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assignment = vec![vec![0.0; ctx.items()]; t];
    for x in 0..ctx.items() {
        // Exponential(1) draws normalized per column give Dirichlet(1).
        let mut sum = 0.0;
        let mut col = vec![0.0; t];
        for entry in col.iter_mut() {
            let u: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
            *entry = -u.ln();
            sum += *entry;
        }
        for (c, entry) in col.iter().enumerate() {
            assignment[c][x] = entry / sum;
        }
    }
    assignment
}

fn check_cluster_count(t: usize, items: usize) -> Result<()> {
    if t == 0 || t > items {
        return Err(Error::InvalidClusterCount { t, items });
    }
    Ok(())
}

/// One full sweep of the update equations at `state.beta`. The returned
/// state is self-consistent and its functional value does not exceed the
/// input's (up to rounding) when the input state is itself consistent.
pub fn iterate(joint: &JointDistribution, state: &IbSolution) -> IbSolution {
    let ctx = Ctx::new(joint);
    let mut assignment = state.assignment.clone();
    sweep(
        &ctx,
        state.beta,
        &mut assignment,
        &state.cluster_prior,
        &state.relevance,
    );
    finish_solution(
        &ctx,
        state.beta,
        assignment,
        state.iterations + 1,
        state.converged,
        state.seed,
    )
}

/// Applies the p(t|x) update in place, reading the given consistent
/// prior/relevance. Returns the max absolute entry change.
fn sweep(
    ctx: &Ctx,
    beta: f64,
    assignment: &mut [Vec<f64>],
    prior: &[f64],
    relevance: &[Vec<f64>],
) -> f64 {
    let t = assignment.len();
    let log_prior: Vec<f64> = prior
        .iter()
        .map(|&p| if p > 0.0 { p.ln() } else { f64::NEG_INFINITY })
        .collect();
    // Log-domain weights with max subtraction so large beta cannot
    // underflow everything to zero at once.
    let mut max_delta: f64 = 0.0;
    let mut weights = vec![0.0f64; t];
    for x in 0..ctx.items() {
        let cond_x = &ctx.cond[x];
        let mut best = f64::NEG_INFINITY;
        for c in 0..t {
            let w = if log_prior[c].is_finite() {
                let mut kl = 0.0;
                for (y, &p) in cond_x.iter().enumerate() {
                    if p > 0.0 {
                        let q = relevance[c][y];
                        if q == 0.0 {
                            kl = f64::INFINITY;
                            break;
                        }
                        kl += p * (p / q).ln();
                    }
                }
                if kl.is_finite() {
                    log_prior[c] - beta * kl
                } else {
                    f64::NEG_INFINITY
                }
            } else {
                f64::NEG_INFINITY
            };
            weights[c] = w;
            if w > best {
                best = w;
            }
        }
        if best == f64::NEG_INFINITY {
            // Every cluster is unreachable for this item (infinite KL
            // everywhere); keep its previous column.
            continue;
        }
        let mut z = 0.0;
        for w in weights.iter_mut() {
            *w = (*w - best).exp();
            z += *w;
        }
        for c in 0..t {
            let new = weights[c] / z;
            let delta = (new - assignment[c][x]).abs();
            if delta > max_delta {
                max_delta = delta;
            }
            assignment[c][x] = new;
        }
    }
    max_delta
}

/// I(T;X) - beta * I(T;Y) for the stored assignment, recomputed from the
/// joint rather than read from the solution's cached fields.
pub fn functional(joint: &JointDistribution, state: &IbSolution) -> f64 {
    let ctx = Ctx::new(joint);
    let (prior, relevance, _) = derive_prior_relevance(&ctx, &state.assignment);
    let (info_tx, info_ty) = information_terms(&ctx, &state.assignment, &prior, &relevance);
    info_tx - state.beta * info_ty
}

fn run_single(ctx: &Ctx, t: usize, config: &SolverConfig, seed: u64) -> IbSolution {
    let assignment = random_assignment(ctx, t, seed);
    run_schedule(ctx, assignment, config, seed)
}

fn run_schedule(
    ctx: &Ctx,
    mut assignment: Vec<Vec<f64>>,
    config: &SolverConfig,
    seed: u64,
) -> IbSolution {
    let mut iterations = 0;
    let mut converged = false;
    let betas = config.beta_schedule();
    let final_beta = *betas.last().unwrap();
    for beta in betas {
        converged = false;
        for _ in 0..config.max_iterations {
            let (prior, relevance, _) = derive_prior_relevance(ctx, &assignment);
            let delta = sweep(ctx, beta, &mut assignment, &prior, &relevance);
            iterations += 1;
            if delta < config.convergence_tol {
                converged = true;
                break;
            }
        }
    }
    finish_solution(ctx, final_beta, assignment, iterations, converged, seed)
}

/// Runs the configured beta schedule to convergence from a caller-supplied
/// initial assignment instead of a random one.
pub fn solve_from(
    joint: &JointDistribution,
    assignment: Vec<Vec<f64>>,
    config: &SolverConfig,
) -> Result<IbSolution> {
    let t = assignment.len();
    check_cluster_count(t, joint.item_count())?;
    config.validate()?;
    if assignment.iter().any(|r| r.len() != joint.item_count()) {
        return Err(Error::DimensionError {
            left: assignment[0].len(),
            right: joint.item_count(),
        });
    }
    let ctx = Ctx::new(joint);
    Ok(run_schedule(&ctx, assignment, config, config.seed))
}

fn restart_seed(base: u64, restart: usize) -> u64 {
    // splitmix64 over (base, index) so restart streams never overlap.
    let mut z = base
        .wrapping_add(0x9E37_79B9_7F4A_7C15u64.wrapping_mul(restart as u64 + 1));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Multi-restart solve: `config.restarts` independent seeded runs, the
/// winner chosen by lowest functional value with ties broken by lowest
/// restart index. The result is identical however the restarts are
/// scheduled across threads.
pub fn solve(joint: &JointDistribution, t: usize, config: &SolverConfig) -> Result<IbSolution> {
    check_cluster_count(t, joint.item_count())?;
    config.validate()?;
    let ctx = Ctx::new(joint);
    let best = (0..config.restarts)
        .into_par_iter()
        .map(|r| (r, run_single(&ctx, t, config, restart_seed(config.seed, r))))
        .min_by(|(ra, a), (rb, b)| {
            a.functional_value
                .total_cmp(&b.functional_value)
                .then(ra.cmp(rb))
        })
        .map(|(_, s)| s)
        .unwrap();
    Ok(best)
}

/// Per-item argmax of p(t|x); ties go to the lowest cluster index, empty
/// clusters are dropped and labels renumbered by first occurrence.
pub fn harden(state: &IbSolution, item_ids: &[String]) -> Result<Partition> {
    if item_ids.len() != columns(state) {
        return Err(Error::DimensionError {
            left: item_ids.len(),
            right: columns(state),
        });
    }
    Partition::new(item_ids.to_vec(), harden_labels(state))
}

/// Raw argmax labels before canonical relabeling.
pub fn harden_labels(state: &IbSolution) -> Vec<usize> {
    (0..columns(state))
        .map(|x| {
            let mut best = 0;
            for c in 1..state.cluster_count {
                if state.assignment[c][x] > state.assignment[best][x] {
                    best = c;
                }
            }
            best
        })
        .collect()
}

fn columns(state: &IbSolution) -> usize {
    state.assignment.first().map_or(0, |r| r.len())
}

/// (I(T;X), I(T;Y)) for a hard partition: I(T;X) reduces to H(T) and
/// I(T;Y) is the mutual information of the pooled cluster-by-category
/// table.
pub fn partition_information(joint: &JointDistribution, partition: &Partition) -> (f64, f64) {
    let k = partition.cluster_count();
    let py = joint.marginal_y();
    let mut pooled = vec![vec![0.0; joint.category_count()]; k];
    for (x, row) in joint.rows().iter().enumerate() {
        let c = partition.cluster_of_index(x);
        for (y, &p) in row.iter().enumerate() {
            pooled[c][y] += p;
        }
    }
    let mut h_t = 0.0;
    let mut info_ty = 0.0;
    for row in &pooled {
        let pt: f64 = row.iter().sum();
        if pt > 0.0 {
            h_t -= pt * pt.ln();
            for (y, &pty) in row.iter().enumerate() {
                if pty > 0.0 && py[y] > 0.0 {
                    info_ty += pty * (pty / (pt * py[y])).ln();
                }
            }
        }
    }
    (h_t.max(0.0), info_ty.max(0.0))
}

/// The hard partition found by [`exhaustive_oracle`], with its relevance
/// information.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    pub labels: Vec<usize>,
    pub info_ty: f64,
}

/// Enumerates every surjective hard assignment of items to `t` clusters
/// (canonical labelings only) and returns the one maximizing I(T;Y) —
/// the beta-to-infinity optimum the iterative solver is validated
/// against. Bounded to [`ENUMERATION_BOUND`] items.
pub fn exhaustive_oracle(joint: &JointDistribution, t: usize) -> Result<OracleResult> {
    let items = joint.item_count();
    check_cluster_count(t, items)?;
    if items > ENUMERATION_BOUND {
        return Err(Error::EnumerationBound {
            items,
            max: ENUMERATION_BOUND,
        });
    }
    let py = joint.marginal_y();
    let mut labels = vec![0usize; items];
    let mut best_labels = None;
    let mut best_ity = f64::NEG_INFINITY;

    // Restricted-growth enumeration: item i may use labels 0..=used.
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        joint: &JointDistribution,
        py: &[f64],
        t: usize,
        labels: &mut Vec<usize>,
        item: usize,
        used: usize,
        best_ity: &mut f64,
        best_labels: &mut Option<Vec<usize>>,
    ) {
        let items = joint.item_count();
        if item == items {
            if used != t {
                return;
            }
            let mut pooled = vec![vec![0.0; joint.category_count()]; t];
            for (x, row) in joint.rows().iter().enumerate() {
                for (y, &p) in row.iter().enumerate() {
                    pooled[labels[x]][y] += p;
                }
            }
            let mut ity = 0.0;
            for row in &pooled {
                let pt: f64 = row.iter().sum();
                for (y, &pty) in row.iter().enumerate() {
                    if pty > 0.0 && py[y] > 0.0 {
                        ity += pty * (pty / (pt * py[y])).ln();
                    }
                }
            }
            if ity > *best_ity {
                *best_ity = ity;
                *best_labels = Some(labels.clone());
            }
            return;
        }
        // Prune: remaining items must still be able to reach t labels.
        if used + (items - item) < t {
            return;
        }
        let cap = (used + 1).min(t);
        for label in 0..cap {
            labels[item] = label;
            let next_used = used.max(label + 1);
            recurse(joint, py, t, labels, item + 1, next_used, best_ity, best_labels);
        }
    }

    recurse(
        joint,
        py,
        t,
        &mut labels,
        0,
        0,
        &mut best_ity,
        &mut best_labels,
    );
    Ok(OracleResult {
        labels: best_labels.unwrap(),
        info_ty: best_ity.max(0.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::probability::{entropy, mutual_information, JointDistribution};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    fn test_joint_4x3(seed: u64) -> JointDistribution {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut raw = vec![vec![0.0f64; 3]; 4];
        let mut total = 0.0;
        for row in &mut raw {
            for v in row.iter_mut() {
                *v = rng.gen_range(0.01..1.0);
                total += *v;
            }
        }
        for row in &mut raw {
            for v in row.iter_mut() {
                *v /= total;
            }
        }
        // Exact renormalization so the 1e-12 sum invariant holds.
        let s: f64 = raw.iter().flatten().sum();
        for row in &mut raw {
            for v in row.iter_mut() {
                *v /= s;
            }
        }
        JointDistribution::new(raw).unwrap()
    }

    fn check_solution_invariants(joint: &JointDistribution, s: &IbSolution) {
        for x in 0..joint.item_count() {
            let col: f64 = (0..s.cluster_count).map(|c| s.assignment[c][x]).sum();
            assert!(close(col, 1.0, 1e-9), "column {x} sums to {col}");
        }
        for c in 0..s.cluster_count {
            if s.cluster_prior[c] > 0.0 {
                let row: f64 = s.relevance[c].iter().sum();
                assert!(close(row, 1.0, 1e-9));
            }
        }
        let px = joint.marginal_x();
        for c in 0..s.cluster_count {
            let p: f64 = (0..joint.item_count())
                .map(|x| px[x] * s.assignment[c][x])
                .sum();
            assert!(close(p, s.cluster_prior[c], 1e-9));
        }
        assert!(s.info_ty <= s.info_tx + 1e-9);
        assert!(close(
            s.functional_value,
            s.info_tx - s.beta * s.info_ty,
            1e-9
        ));
    }

    #[test]
    fn initialize_single_cluster_is_marginal() {
        let joint = test_joint_4x3(1);
        let s = initialize(&joint, 1, 7).unwrap();
        assert!(s.assignment[0].iter().all(|&a| close(a, 1.0, 1e-12)));
        for (y, &py) in joint.marginal_y().iter().enumerate() {
            assert!(close(s.relevance[0][y], py, 1e-12));
        }
    }

    #[test]
    fn initialize_is_deterministic() {
        let joint = test_joint_4x3(2);
        let a = initialize(&joint, 3, 99).unwrap();
        let b = initialize(&joint, 3, 99).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn initialize_full_cluster_count_passes_invariants() {
        let joint = test_joint_4x3(3);
        let s = initialize(&joint, 4, 5).unwrap();
        check_solution_invariants(&joint, &s);
    }

    #[test]
    fn initialize_rejects_bad_cluster_count() {
        let joint = test_joint_4x3(4);
        assert!(matches!(
            initialize(&joint, 0, 1),
            Err(Error::InvalidClusterCount { .. })
        ));
        assert!(matches!(
            initialize(&joint, 5, 1),
            Err(Error::InvalidClusterCount { .. })
        ));
    }

    #[test]
    fn iterate_fixed_point_is_idempotent() {
        let joint = test_joint_4x3(5);
        let config = SolverConfig {
            beta: 10.0,
            restarts: 8,
            convergence_tol: 1e-13,
            max_iterations: 2000,
            seed: 3,
            ..Default::default()
        };
        let s = solve(&joint, 2, &config).unwrap();
        assert!(s.converged);
        let next = iterate(&joint, &s);
        for c in 0..2 {
            for x in 0..4 {
                assert!(close(next.assignment[c][x], s.assignment[c][x], 1e-10));
            }
        }
    }

    #[test]
    fn tiny_beta_decouples_assignment_from_items() {
        let joint = test_joint_4x3(6);
        let mut s = initialize(&joint, 2, 11).unwrap();
        s.beta = 1e-6;
        let next = iterate(&joint, &s);
        for x in 0..4 {
            for c in 0..2 {
                assert!(close(next.assignment[c][x], s.cluster_prior[c], 1e-5));
            }
        }
    }

    #[test]
    fn sweep_matches_linear_domain_transliteration() {
        // Oracle: the update equations evaluated naively in linear domain.
        let joint = test_joint_4x3(7);
        let beta = 2.0;
        let mut s = initialize(&joint, 2, 21).unwrap();
        s.beta = beta;
        let next = iterate(&joint, &s);

        let cond = joint.conditional_rows();
        let px = joint.marginal_x();
        let mut naive = vec![vec![0.0f64; 4]; 2];
        for x in 0..4 {
            let mut z = 0.0;
            for c in 0..2 {
                let mut kl = 0.0;
                for y in 0..3 {
                    if cond[x][y] > 0.0 {
                        kl += cond[x][y] * (cond[x][y] / s.relevance[c][y]).ln();
                    }
                }
                naive[c][x] = s.cluster_prior[c] * (-beta * kl).exp();
                z += naive[c][x];
            }
            for c in 0..2 {
                naive[c][x] /= z;
            }
        }
        let mut prior = [0.0; 2];
        for c in 0..2 {
            for x in 0..4 {
                prior[c] += px[x] * naive[c][x];
            }
        }
        let mut relevance = vec![vec![0.0; 3]; 2];
        for c in 0..2 {
            for x in 0..4 {
                for y in 0..3 {
                    relevance[c][y] += joint.prob(x, y) * naive[c][x] / prior[c];
                }
            }
        }
        for c in 0..2 {
            for x in 0..4 {
                assert!(close(next.assignment[c][x], naive[c][x], 1e-12));
            }
            assert!(close(next.cluster_prior[c], prior[c], 1e-12));
            for y in 0..3 {
                assert!(close(next.relevance[c][y], relevance[c][y], 1e-12));
            }
        }
    }

    #[test]
    fn functional_zero_for_single_cluster() {
        let joint = test_joint_4x3(8);
        let s = initialize(&joint, 1, 0).unwrap();
        assert!(close(functional(&joint, &s), 0.0, 1e-12));
        assert!(close(s.info_tx, 0.0, 1e-12));
        assert!(close(s.info_ty, 0.0, 1e-12));
    }

    #[test]
    fn functional_identity_assignment_recovers_marginals() {
        let joint = test_joint_4x3(9);
        let mut s = initialize(&joint, 4, 0).unwrap();
        for c in 0..4 {
            for x in 0..4 {
                s.assignment[c][x] = if c == x { 1.0 } else { 0.0 };
            }
        }
        s.beta = 1.0;
        let refreshed = finish_solution(&Ctx::new(&joint), 1.0, s.assignment.clone(), 0, false, 0);
        let h_x = entropy(joint.marginal_x()).unwrap();
        let mi = mutual_information(&joint);
        assert!(close(refreshed.info_tx, h_x, 1e-12));
        assert!(close(refreshed.info_ty, mi, 1e-12));
        assert!(close(functional(&joint, &refreshed), h_x - mi, 1e-12));
    }

    #[test]
    fn functional_matches_brute_force_lifted_joints() {
        // Oracle: build p(t,x) and p(t,y) explicitly and evaluate both MI
        // terms by direct summation.
        let joint = test_joint_4x3(10);
        let s = initialize(&joint, 3, 17).unwrap();
        let px = joint.marginal_x();
        let py = joint.marginal_y();
        let mut ptx = vec![vec![0.0; 4]; 3];
        let mut pty = vec![vec![0.0; 3]; 3];
        for c in 0..3 {
            for x in 0..4 {
                ptx[c][x] = s.assignment[c][x] * px[x];
                for y in 0..3 {
                    pty[c][y] += s.assignment[c][x] * joint.prob(x, y);
                }
            }
        }
        let pt: Vec<f64> = ptx.iter().map(|r| r.iter().sum()).collect();
        let mut itx = 0.0;
        let mut ity = 0.0;
        for c in 0..3 {
            for x in 0..4 {
                if ptx[c][x] > 0.0 {
                    itx += ptx[c][x] * (ptx[c][x] / (pt[c] * px[x])).ln();
                }
            }
            for y in 0..3 {
                if pty[c][y] > 0.0 {
                    ity += pty[c][y] * (pty[c][y] / (pt[c] * py[y])).ln();
                }
            }
        }
        let mut state = s.clone();
        state.beta = 4.0;
        assert!(close(functional(&joint, &state), itx - 4.0 * ity, 1e-12));
    }

    #[test]
    fn monotone_descent_and_convergence() {
        for seed in 0..10u64 {
            let joint = test_joint_4x3(100 + seed);
            let mut state = initialize(&joint, 2, seed).unwrap();
            state.beta = 30.0;
            state = iterate(&joint, &state);
            let mut last = state.functional_value;
            for _ in 0..200 {
                state = iterate(&joint, &state);
                assert!(
                    state.functional_value <= last + 1e-10,
                    "ascent: {} -> {}",
                    last,
                    state.functional_value
                );
                last = state.functional_value;
            }
            check_solution_invariants(&joint, &state);
        }
    }

    #[test]
    fn solve_single_cluster_gives_zero_functional() {
        let joint = test_joint_4x3(11);
        let config = SolverConfig {
            restarts: 1,
            ..Default::default()
        };
        let s = solve(&joint, 1, &config).unwrap();
        assert!(close(s.functional_value, 0.0, 1e-12));
    }

    #[test]
    fn solve_full_cluster_count_reaches_identity_relevance() {
        let joint = test_joint_4x3(12);
        let config = SolverConfig {
            restarts: 16,
            seed: 4,
            ..Default::default()
        };
        let s = solve(&joint, 4, &config).unwrap();
        let mi = mutual_information(&joint);
        assert!(s.info_ty >= 0.999 * mi, "{} vs {}", s.info_ty, mi);
    }

    #[test]
    fn solve_is_deterministic() {
        let joint = test_joint_4x3(13);
        let config = SolverConfig {
            restarts: 12,
            seed: 8,
            ..Default::default()
        };
        let a = solve(&joint, 2, &config).unwrap();
        let b = solve(&joint, 2, &config).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn harden_argmax_and_ties() {
        let ids: Vec<String> = ["a", "b"].iter().map(|s| s.to_string()).collect();
        let state = IbSolution {
            cluster_count: 2,
            beta: 50.0,
            assignment: vec![vec![0.9, 0.5], vec![0.1, 0.5]],
            cluster_prior: vec![0.7, 0.3],
            relevance: vec![vec![1.0], vec![1.0]],
            functional_value: 0.0,
            info_tx: 0.0,
            info_ty: 0.0,
            iterations: 0,
            converged: true,
            seed: 0,
            empty_clusters: vec![],
        };
        let p = harden(&state, &ids).unwrap();
        // 0.9 beats 0.1; the exact tie goes to the lowest cluster index.
        assert_eq!(p.labels(), &[0, 0]);
    }

    #[test]
    fn harden_matches_independent_scan() {
        let joint = test_joint_4x3(14);
        let s = initialize(&joint, 3, 123).unwrap();
        let labels = harden_labels(&s);
        for x in 0..4 {
            for c in 0..3 {
                assert!(s.assignment[labels[x]][x] >= s.assignment[c][x]);
            }
        }
    }

    #[test]
    fn oracle_merges_identical_rows() {
        // Two groups with identical conditional rows within group.
        let joint = JointDistribution::new(vec![
            vec![0.20, 0.05],
            vec![0.20, 0.05],
            vec![0.05, 0.20],
            vec![0.05, 0.20],
        ])
        .unwrap();
        let r = exhaustive_oracle(&joint, 2).unwrap();
        assert_eq!(r.labels, vec![0, 0, 1, 1]);
        assert!(close(r.info_ty, mutual_information(&joint), 1e-12));
    }

    #[test]
    fn oracle_three_items_two_clusters() {
        let joint = JointDistribution::new(vec![
            vec![0.30, 0.05],
            vec![0.10, 0.15],
            vec![0.05, 0.35],
        ])
        .unwrap();
        let r = exhaustive_oracle(&joint, 2).unwrap();
        // Direct evaluation of all 3 bipartitions.
        let candidates = [vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1]];
        let ids: Vec<String> = (0..3).map(|i| i.to_string()).collect();
        let mut best = f64::NEG_INFINITY;
        let mut best_labels = vec![];
        for labels in &candidates {
            let p = Partition::new(ids.clone(), labels.clone()).unwrap();
            let (_, ity) = partition_information(&joint, &p);
            if ity > best {
                best = ity;
                best_labels = labels.clone();
            }
        }
        assert_eq!(r.labels, best_labels);
        assert!(close(r.info_ty, best, 1e-12));
    }

    #[test]
    fn oracle_identity_at_full_count() {
        let joint = test_joint_4x3(15);
        let r = exhaustive_oracle(&joint, 4).unwrap();
        assert_eq!(r.labels, vec![0, 1, 2, 3]);
        assert!(close(r.info_ty, mutual_information(&joint), 1e-12));
    }

    #[test]
    fn oracle_respects_enumeration_bound() {
        let n = 13;
        let mut raw = vec![vec![0.0; 2]; n];
        for (i, row) in raw.iter_mut().enumerate() {
            row[0] = if i % 2 == 0 { 0.06 } else { 0.02 };
            row[1] = 1.0 / n as f64 - row[0];
            row[1] = row[1].abs();
        }
        let total: f64 = raw.iter().flatten().sum();
        for row in &mut raw {
            for v in row.iter_mut() {
                *v /= total;
            }
        }
        let joint = JointDistribution::new(raw).unwrap();
        assert!(matches!(
            exhaustive_oracle(&joint, 2),
            Err(Error::EnumerationBound { .. })
        ));
    }

    #[test]
    fn compression_bound_holds() {
        let joint = test_joint_4x3(16);
        for t in 1..=4usize {
            let config = SolverConfig {
                restarts: 6,
                seed: 2,
                ..Default::default()
            };
            let s = solve(&joint, t, &config).unwrap();
            assert!(s.info_tx <= (t as f64).ln() + 1e-9);
            check_solution_invariants(&joint, &s);
        }
    }
}
