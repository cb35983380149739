//! Synthetic respondent populations with planted item structure, used
//! to verify the pipeline since real questionnaire datasets of this
//! kind are rarely published.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::response::ResponseMatrix;

/// Recipe for a synthetic response matrix. Items are grouped; each
/// respondent belongs to one of `profile_means.len()` profiles
/// (assigned round-robin) and answers item i with
/// `clamp(round(mean[profile][group(i)] + Normal(0, noise_sd)))`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SyntheticSpec {
    pub respondents: usize,
    /// Item ids per planted group.
    pub groups: Vec<Vec<String>>,
    /// `profile_means[profile][group]`, each within `1..=level_count`.
    pub profile_means: Vec<Vec<f64>>,
    pub noise_sd: f64,
    pub level_count: u8,
    pub seed: u64,
}

impl SyntheticSpec {
    fn validate(&self) -> Result<()> {
        if self.respondents == 0 || self.groups.is_empty() || self.profile_means.is_empty() {
            return Err(Error::EmptyInput);
        }
        if self.groups.iter().any(|g| g.is_empty()) {
            return Err(Error::DomainError("empty item group".into()));
        }
        if self.noise_sd < 0.0 {
            return Err(Error::DomainError("noise_sd must be non-negative".into()));
        }
        for row in &self.profile_means {
            if row.len() != self.groups.len() {
                return Err(Error::DimensionError {
                    left: row.len(),
                    right: self.groups.len(),
                });
            }
            for &m in row {
                if m < 1.0 || m > self.level_count as f64 {
                    return Err(Error::DomainError(format!(
                        "profile mean {m} outside 1..={}",
                        self.level_count
                    )));
                }
            }
        }
        Ok(())
    }

    /// Convenience recipe: `group_count` groups of `group_size` items
    /// named "1", "2", ... in order.
    pub fn uniform_groups(
        respondents: usize,
        group_count: usize,
        group_size: usize,
        profile_means: Vec<Vec<f64>>,
        noise_sd: f64,
        seed: u64,
    ) -> Self {
        let groups = (0..group_count)
            .map(|g| {
                (0..group_size)
                    .map(|i| (g * group_size + i + 1).to_string())
                    .collect()
            })
            .collect();
        Self {
            respondents,
            groups,
            profile_means,
            noise_sd,
            level_count: 7,
            seed,
        }
    }
}

/// Generates the response matrix together with the planted item
/// partition. Deterministic per seed.
pub fn generate_synthetic(spec: &SyntheticSpec) -> Result<(ResponseMatrix, Partition)> {
    spec.validate()?;
    let mut item_ids = Vec::new();
    let mut labels = Vec::new();
    let mut group_of = Vec::new();
    for (g, group) in spec.groups.iter().enumerate() {
        for id in group {
            item_ids.push(id.clone());
            labels.push(g);
            group_of.push(g);
        }
    }
    let planted = Partition::new(item_ids.clone(), labels)?;

    let profiles = spec.profile_means.len();
    let max_level = spec.level_count as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let noise = if spec.noise_sd > 0.0 {
        Some(Normal::new(0.0, spec.noise_sd).expect("validated sd"))
    } else {
        None
    };

    let mut rows = Vec::with_capacity(spec.respondents);
    for r in 0..spec.respondents {
        let profile = r % profiles;
        let mut row = Vec::with_capacity(item_ids.len());
        for &g in &group_of {
            let mut v = spec.profile_means[profile][g];
            if let Some(n) = &noise {
                v += n.sample(&mut rng);
            }
            row.push(v.round().clamp(1.0, max_level) as u8);
        }
        rows.push(row);
    }
    let matrix = ResponseMatrix::new(item_ids, rows, spec.level_count)?;
    Ok((matrix, planted))
}
