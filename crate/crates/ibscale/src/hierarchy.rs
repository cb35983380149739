//! Gradual partition of items across a range of cluster counts, with
//! cross-level parent links forming a dendrogram.
//!
//! Each level is solved independently (IB does not guarantee that the
//! level t+1 partition refines level t), so the dendrogram links are
//! reconstructed afterwards by maximal item overlap. Nestedness is
//! reported but never assumed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::probability::JointDistribution;
use crate::solver::{self, IbSolution, SolverConfig};

/// One solved level of the hierarchy. The information scores are those
/// of the hardened partition, so they can be recomputed from the stored
/// partition and joint alone.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Level {
    pub t: usize,
    pub partition: Partition,
    pub info_tx: f64,
    pub info_ty: f64,
    pub functional_value: f64,
    /// Converged soft functional of the winning restart.
    pub soft_functional: f64,
}

/// A parent edge between clusters of adjacent levels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkEdge {
    pub parent_t: usize,
    pub parent_cluster: usize,
    pub child_t: usize,
    pub child_cluster: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartitionHierarchy {
    pub t_min: usize,
    pub t_max: usize,
    pub beta: f64,
    pub levels: Vec<Level>,
    pub links: Vec<LinkEdge>,
    /// For each adjacent level pair, whether the finer level is an exact
    /// refinement of the coarser one.
    pub nested: Vec<bool>,
}

impl PartitionHierarchy {
    pub fn level(&self, t: usize) -> Option<&Level> {
        self.levels.iter().find(|l| l.t == t)
    }
}

/// Solves every cluster count in `t_min..=t_max` and links the hardened
/// partitions. With `warm_start`, level t's winning solution seeds one
/// extra candidate restart at level t+1 by splitting its heaviest
/// cluster; the candidate competes on functional value like any other
/// restart.
pub fn sweep(
    joint: &JointDistribution,
    item_ids: &[String],
    t_min: usize,
    t_max: usize,
    config: &SolverConfig,
    warm_start: bool,
) -> Result<PartitionHierarchy> {
    if t_min < 1 || t_min > t_max || t_max > joint.item_count() {
        return Err(Error::InvalidClusterCount {
            t: t_max,
            items: joint.item_count(),
        });
    }
    if item_ids.len() != joint.item_count() {
        return Err(Error::DimensionError {
            left: item_ids.len(),
            right: joint.item_count(),
        });
    }

    let mut levels = Vec::new();
    let mut prev_soft: Option<IbSolution> = None;
    for t in t_min..=t_max {
        let mut best = solver::solve(joint, t, config)?;
        if warm_start {
            if let Some(prev) = prev_soft.as_ref().filter(|p| p.cluster_count + 1 == t) {
                let seeded = split_heaviest(prev);
                let candidate = solver::solve_from(joint, seeded, config)?;
                if candidate.functional_value < best.functional_value {
                    best = candidate;
                }
            }
        }
        let partition = solver::harden(&best, item_ids)?;
        let (info_tx, info_ty) = solver::partition_information(joint, &partition);
        levels.push(Level {
            t,
            partition,
            info_tx,
            info_ty,
            functional_value: info_tx - config.beta * info_ty,
            soft_functional: best.functional_value,
        });
        prev_soft = Some(best);
    }

    let mut links = Vec::new();
    let mut nested = Vec::new();
    for pair in levels.windows(2) {
        let (coarse, fine) = (&pair[0], &pair[1]);
        let parents = link_levels(&coarse.partition, &fine.partition)?;
        for (child_cluster, &parent_cluster) in parents.iter().enumerate() {
            links.push(LinkEdge {
                parent_t: coarse.t,
                parent_cluster,
                child_t: fine.t,
                child_cluster,
            });
        }
        nested.push(refines(&fine.partition, &coarse.partition));
    }

    Ok(PartitionHierarchy {
        t_min,
        t_max,
        beta: config.beta,
        levels,
        links,
        nested,
    })
}

/// Duplicates the heaviest cluster's assignment row with a deterministic
/// asymmetric split, producing a (t+1)-cluster starting point.
fn split_heaviest(prev: &IbSolution) -> Vec<Vec<f64>> {
    let heaviest = prev
        .cluster_prior
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .unwrap_or(0);
    let items = prev.assignment[0].len();
    let mut seeded = prev.assignment.clone();
    let mut extra = vec![0.0; items];
    for x in 0..items {
        // Alternate the split direction per item so the two halves start
        // distinguishable.
        let w = if x % 2 == 0 { 0.7 } else { 0.3 };
        extra[x] = seeded[heaviest][x] * (1.0 - w);
        seeded[heaviest][x] *= w;
    }
    seeded.push(extra);
    seeded
}

/// Parent coarse-cluster index for each fine cluster, chosen by maximal
/// Jaccard item overlap with ties broken by lowest coarse index.
pub fn link_levels(coarse: &Partition, fine: &Partition) -> Result<Vec<usize>> {
    if !coarse.same_items(fine) {
        return Err(Error::DomainError(
            "partitions cover different item sets".into(),
        ));
    }
    if coarse.cluster_count() > fine.cluster_count() {
        return Err(Error::DomainError(
            "coarse partition has more clusters than fine".into(),
        ));
    }
    let coarse_members: Vec<Vec<String>> = coarse.members();
    let fine_members: Vec<Vec<String>> = fine.members();
    let mut parents = Vec::with_capacity(fine_members.len());
    for fm in &fine_members {
        let mut best = 0usize;
        let mut best_j = -1.0f64;
        for (c, cm) in coarse_members.iter().enumerate() {
            let inter = fm.iter().filter(|id| cm.contains(id)).count() as f64;
            let union = (fm.len() + cm.len()) as f64 - inter;
            let j = if union > 0.0 { inter / union } else { 0.0 };
            if j > best_j {
                best_j = j;
                best = c;
            }
        }
        parents.push(best);
    }
    Ok(parents)
}

/// True when every fine cluster is wholly contained in one coarse cluster.
pub fn refines(fine: &Partition, coarse: &Partition) -> bool {
    if !coarse.same_items(fine) {
        return false;
    }
    fine.members().iter().all(|fm| {
        let parent = coarse.cluster_of(&fm[0]);
        fm.iter().all(|id| coarse.cluster_of(id) == parent)
    })
}

/// The (I(T;X), I(T;Y)) point per level, ordered by t.
pub fn info_plane(hierarchy: &PartitionHierarchy) -> Vec<(f64, f64)> {
    hierarchy
        .levels
        .iter()
        .map(|l| (l.info_tx, l.info_ty))
        .collect()
}
