//! Joint distributions over items and answer categories, and the
//! information-theoretic primitives built on them. All logarithms are
//! natural, so every quantity is in nats.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::response::ResponseMatrix;

const SUM_TOL: f64 = 1e-12;
const DIST_TOL: f64 = 1e-9;

/// How to turn a response matrix into a joint distribution p(x, y).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
#[derive(Default)]
pub enum JointMode {
    /// Y indexes the answer levels; p(x, y) counts how often item x was
    /// answered with level y. This is the default.
    #[default]
    AnswerLevel,
    /// Y indexes the respondents; p(x, y) is respondent y's score on
    /// item x, normalized by the grand total.
    Respondent,
}


impl std::fmt::Display for JointMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            JointMode::AnswerLevel => write!(f, "answer"),
            JointMode::Respondent => write!(f, "respondent"),
        }
    }
}

/// A normalized joint distribution p(x, y) over items (rows) and answer
/// categories (columns), with cached marginals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JointDistribution {
    joint: Vec<Vec<f64>>,
    marginal_x: Vec<f64>,
    marginal_y: Vec<f64>,
}

impl JointDistribution {
    pub fn new(joint: Vec<Vec<f64>>) -> Result<Self> {
        if joint.is_empty() || joint[0].is_empty() {
            return Err(Error::EmptyInput);
        }
        let cols = joint[0].len();
        let mut total = 0.0;
        for row in &joint {
            if row.len() != cols {
                return Err(Error::DimensionError {
                    left: row.len(),
                    right: cols,
                });
            }
            let mut row_sum = 0.0;
            for &p in row {
                if p.is_nan() || p < 0.0 {
                    return Err(Error::NotADistribution { sum: p });
                }
                row_sum += p;
            }
            if row_sum == 0.0 {
                return Err(Error::DomainError(
                    "joint has an all-zero item row".into(),
                ));
            }
            total += row_sum;
        }
        if (total - 1.0).abs() > SUM_TOL {
            return Err(Error::NotADistribution { sum: total });
        }
        let marginal_x: Vec<f64> = joint.iter().map(|r| r.iter().sum()).collect();
        let marginal_y: Vec<f64> = (0..cols)
            .map(|j| joint.iter().map(|r| r[j]).sum())
            .collect();
        Ok(Self {
            joint,
            marginal_x,
            marginal_y,
        })
    }

    pub fn item_count(&self) -> usize {
        self.joint.len()
    }

    pub fn category_count(&self) -> usize {
        self.joint[0].len()
    }

    pub fn prob(&self, x: usize, y: usize) -> f64 {
        self.joint[x][y]
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.joint
    }

    pub fn marginal_x(&self) -> &[f64] {
        &self.marginal_x
    }

    pub fn marginal_y(&self) -> &[f64] {
        &self.marginal_y
    }

    /// Conditional rows p(y | x); each row sums to 1.
    pub fn conditional_rows(&self) -> Vec<Vec<f64>> {
        self.joint
            .iter()
            .zip(&self.marginal_x)
            .map(|(row, &px)| row.iter().map(|&p| p / px).collect())
            .collect()
    }

    /// The transposed joint, swapping the roles of X and Y.
    pub fn transposed(&self) -> JointDistribution {
        let cols = self.category_count();
        let t: Vec<Vec<f64>> = (0..cols)
            .map(|j| self.joint.iter().map(|r| r[j]).collect())
            .collect();
        // Transposing can create all-zero rows when a category is unused;
        // bypass validation since normalization and symmetry still hold.
        let marginal_x = self.marginal_y.clone();
        let marginal_y = self.marginal_x.clone();
        JointDistribution {
            joint: t,
            marginal_x,
            marginal_y,
        }
    }
}

/// Build p(x, y) from raw responses. With `JointMode::AnswerLevel` the
/// cell (x, y) holds count(item x answered level y) / (respondents * items);
/// with `JointMode::Respondent` it holds score(respondent y, item x) over
/// the grand score total.
pub fn estimate_joint(responses: &ResponseMatrix, mode: JointMode) -> Result<JointDistribution> {
    estimate_joint_smoothed(responses, mode, 0.0)
}

/// Like [`estimate_joint`] but adds `lambda` to every count cell before
/// normalizing, killing empty cells that would otherwise produce
/// infinite KL divergences downstream. `lambda = 0` reproduces the
/// plain estimate.
pub fn estimate_joint_smoothed(
    responses: &ResponseMatrix,
    mode: JointMode,
    lambda: f64,
) -> Result<JointDistribution> {
    if lambda < 0.0 {
        return Err(Error::DomainError("smoothing must be non-negative".into()));
    }
    let items = responses.item_count();
    let counts: Vec<Vec<f64>> = match mode {
        JointMode::AnswerLevel => {
            let levels = responses.level_count() as usize;
            let mut c = vec![vec![lambda; levels]; items];
            for row in responses.rows() {
                for (i, &v) in row.iter().enumerate() {
                    c[i][v as usize - 1] += 1.0;
                }
            }
            c
        }
        JointMode::Respondent => {
            let n = responses.respondent_count();
            let mut c = vec![vec![lambda; n]; items];
            for (r, row) in responses.rows().iter().enumerate() {
                for (i, &v) in row.iter().enumerate() {
                    c[i][r] += v as f64;
                }
            }
            c
        }
    };
    let total: f64 = counts.iter().flatten().sum();
    let joint = counts
        .into_iter()
        .map(|row| row.into_iter().map(|c| c / total).collect())
        .collect();
    JointDistribution::new(joint)
}

fn check_distribution(p: &[f64]) -> Result<()> {
    let sum: f64 = p.iter().sum();
    if p.iter().any(|&v| v < 0.0) || (sum - 1.0).abs() > DIST_TOL {
        return Err(Error::NotADistribution { sum });
    }
    Ok(())
}

/// Shannon entropy H(p) = -sum p ln p, with 0 ln 0 = 0.
pub fn entropy(p: &[f64]) -> Result<f64> {
    check_distribution(p)?;
    Ok(entropy_unchecked(p))
}

pub(crate) fn entropy_unchecked(p: &[f64]) -> f64 {
    -p.iter()
        .filter(|&&v| v > 0.0)
        .map(|&v| v * v.ln())
        .sum::<f64>()
}

/// I(X;Y) = sum p(x,y) ln [ p(x,y) / (p(x) p(y)) ]; zero cells contribute
/// nothing.
pub fn mutual_information(joint: &JointDistribution) -> f64 {
    let mut mi = 0.0;
    for (row, &px) in joint.rows().iter().zip(joint.marginal_x()) {
        for (j, &pxy) in row.iter().enumerate() {
            if pxy > 0.0 {
                mi += pxy * (pxy / (px * joint.marginal_y()[j])).ln();
            }
        }
    }
    mi.max(0.0)
}

/// KL(p || q) = sum p ln(p/q); returns +infinity when p puts mass where
/// q has none.
pub fn kl_divergence(p: &[f64], q: &[f64]) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::DimensionError {
            left: p.len(),
            right: q.len(),
        });
    }
    check_distribution(p)?;
    check_distribution(q)?;
    Ok(kl_unchecked(p, q))
}

pub(crate) fn kl_unchecked(p: &[f64], q: &[f64]) -> f64 {
    let mut d = 0.0;
    for (&pk, &qk) in p.iter().zip(q) {
        if pk > 0.0 {
            if qk == 0.0 {
                return f64::INFINITY;
            }
            d += pk * (pk / qk).ln();
        }
    }
    d.max(0.0)
}
