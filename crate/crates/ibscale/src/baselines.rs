//! Classical reference methods: k-means and agglomerative clustering of
//! items embedded as respondent-score vectors, Cronbach's alpha, and the
//! adjusted Rand index for partition agreement.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::response::ResponseMatrix;

/// Items as points in respondent space: one vector per item, length =
/// number of respondents.
#[derive(Debug, Clone, PartialEq)]
pub struct ItemVectors {
    item_ids: Vec<String>,
    vectors: Vec<Vec<f64>>,
}

impl ItemVectors {
    pub fn new(item_ids: Vec<String>, vectors: Vec<Vec<f64>>) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::EmptyInput);
        }
        let dim = vectors[0].len();
        if dim < 2 {
            return Err(Error::DomainError(
                "item vectors need at least 2 coordinates".into(),
            ));
        }
        if item_ids.len() != vectors.len() || vectors.iter().any(|v| v.len() != dim) {
            return Err(Error::DimensionError {
                left: item_ids.len(),
                right: vectors.len(),
            });
        }
        Ok(Self { item_ids, vectors })
    }

    pub fn from_responses(responses: &ResponseMatrix) -> Result<Self> {
        Self::new(responses.item_ids().to_vec(), responses.item_columns())
    }

    pub fn item_ids(&self) -> &[String] {
        &self.item_ids
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vector(&self, i: usize) -> &[f64] {
        &self.vectors[i]
    }
}

fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// Lloyd's algorithm with Euclidean distance and seeded random-point
/// initialization, best of `restarts` by within-cluster sum of squares.
pub fn kmeans(
    vectors: &ItemVectors,
    k: usize,
    seed: u64,
    restarts: usize,
) -> Result<Partition> {
    let n = vectors.len();
    if k == 0 || k > n {
        return Err(Error::InvalidClusterCount { t: k, items: n });
    }
    let mut best: Option<(f64, Vec<usize>)> = None;
    for r in 0..restarts.max(1) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(r as u64));
        let (labels, wcss) = lloyd(vectors, k, &mut rng);
        let better = match &best {
            None => true,
            Some((best_wcss, _)) => wcss < *best_wcss,
        };
        if better {
            best = Some((wcss, labels));
        }
    }
    let (_, labels) = best.unwrap();
    Partition::new(vectors.item_ids().to_vec(), labels)
}

fn lloyd(vectors: &ItemVectors, k: usize, rng: &mut ChaCha8Rng) -> (Vec<usize>, f64) {
    let n = vectors.len();
    let dim = vectors.vector(0).len();
    let mut indices: Vec<usize> = (0..n).collect();
    indices.shuffle(rng);
    let mut centroids: Vec<Vec<f64>> =
        indices[..k].iter().map(|&i| vectors.vector(i).to_vec()).collect();

    let mut labels = vec![0usize; n];
    for _ in 0..200 {
        let mut changed = false;
        for i in 0..n {
            let mut best = 0;
            let mut best_d = sq_dist(vectors.vector(i), &centroids[0]);
            for (c, centroid) in centroids.iter().enumerate().skip(1) {
                let d = sq_dist(vectors.vector(i), centroid);
                if d < best_d {
                    best_d = d;
                    best = c;
                }
            }
            if labels[i] != best {
                labels[i] = best;
                changed = true;
            }
        }
        // Empty-cluster repair: move in the point farthest from its own
        // centroid.
        loop {
            let mut counts = vec![0usize; k];
            for &l in &labels {
                counts[l] += 1;
            }
            let Some(empty) = counts.iter().position(|&c| c == 0) else {
                break;
            };
            let farthest = (0..n)
                .filter(|&i| counts[labels[i]] > 1)
                .max_by(|&a, &b| {
                    sq_dist(vectors.vector(a), &centroids[labels[a]])
                        .total_cmp(&sq_dist(vectors.vector(b), &centroids[labels[b]]))
                })
                .unwrap();
            labels[farthest] = empty;
            changed = true;
        }
        for (c, centroid) in centroids.iter_mut().enumerate() {
            let members: Vec<usize> = (0..n).filter(|&i| labels[i] == c).collect();
            for d in 0..dim {
                centroid[d] =
                    members.iter().map(|&i| vectors.vector(i)[d]).sum::<f64>()
                        / members.len() as f64;
            }
        }
        if !changed {
            break;
        }
    }
    let wcss: f64 = (0..n)
        .map(|i| sq_dist(vectors.vector(i), &centroids[labels[i]]))
        .sum();
    (labels, wcss)
}

/// Within-cluster sum of squares of an arbitrary labeling, used for
/// comparing against the solver's result.
pub fn wcss(vectors: &ItemVectors, labels: &[usize]) -> f64 {
    let k = labels.iter().max().map_or(0, |&m| m + 1);
    let dim = vectors.vector(0).len();
    let mut total = 0.0;
    for c in 0..k {
        let members: Vec<usize> = (0..vectors.len()).filter(|&i| labels[i] == c).collect();
        if members.is_empty() {
            continue;
        }
        let mut centroid = vec![0.0; dim];
        for &i in &members {
            for d in 0..dim {
                centroid[d] += vectors.vector(i)[d];
            }
        }
        for v in &mut centroid {
            *v /= members.len() as f64;
        }
        for &i in &members {
            total += sq_dist(vectors.vector(i), &centroid);
        }
    }
    total
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
#[derive(Default)]
pub enum Linkage {
    Single,
    Complete,
    #[default]
    Average,
}


impl std::fmt::Display for Linkage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Linkage::Single => write!(f, "single"),
            Linkage::Complete => write!(f, "complete"),
            Linkage::Average => write!(f, "average"),
        }
    }
}

/// One agglomerative merge step. Cluster ids follow the usual stepwise
/// convention: leaves are `0..n`, the i-th merge creates cluster `n + i`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Merge {
    pub cluster_a: usize,
    pub cluster_b: usize,
    pub distance: f64,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinkageTree {
    pub item_ids: Vec<String>,
    pub linkage: Linkage,
    pub merges: Vec<Merge>,
}

impl LinkageTree {
    /// Cuts the tree into `k` clusters by undoing the last `k - 1` merges.
    pub fn cut(&self, k: usize) -> Result<Partition> {
        let n = self.item_ids.len();
        if k == 0 || k > n {
            return Err(Error::InvalidClusterCount { t: k, items: n });
        }
        let mut parent: Vec<usize> = (0..2 * n - 1).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for (step, m) in self.merges.iter().take(n - k).enumerate() {
            let new_id = n + step;
            let ra = find(&mut parent, m.cluster_a);
            let rb = find(&mut parent, m.cluster_b);
            parent[ra] = new_id;
            parent[rb] = new_id;
        }
        let labels: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
        Partition::new(self.item_ids.clone(), labels)
    }
}

/// Bottom-up merging under Euclidean distance with the chosen linkage,
/// using Lance-Williams distance updates.
pub fn agglomerative(vectors: &ItemVectors, linkage: Linkage) -> Result<LinkageTree> {
    let n = vectors.len();
    if n < 2 {
        return Err(Error::DomainError(
            "agglomerative clustering needs at least 2 items".into(),
        ));
    }
    // Active cluster list: (stepwise id, size). dist[i][j] between active
    // clusters by position.
    let mut active: Vec<(usize, usize)> = (0..n).map(|i| (i, 1)).collect();
    let mut dist: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| sq_dist(vectors.vector(i), vectors.vector(j)).sqrt())
                .collect()
        })
        .collect();

    let mut merges = Vec::with_capacity(n - 1);
    for step in 0..n - 1 {
        let m = active.len();
        let (mut bi, mut bj, mut best) = (0, 1, f64::INFINITY);
        for i in 0..m {
            for j in i + 1..m {
                if dist[i][j] < best {
                    best = dist[i][j];
                    bi = i;
                    bj = j;
                }
            }
        }
        let (id_a, size_a) = active[bi];
        let (id_b, size_b) = active[bj];
        merges.push(Merge {
            cluster_a: id_a.min(id_b),
            cluster_b: id_a.max(id_b),
            distance: best,
            size: size_a + size_b,
        });

        // Lance-Williams update of distances to the merged cluster.
        let mut new_row = Vec::with_capacity(m - 2);
        for x in 0..m {
            if x == bi || x == bj {
                continue;
            }
            let da = dist[bi][x];
            let db = dist[bj][x];
            let d = match linkage {
                Linkage::Single => da.min(db),
                Linkage::Complete => da.max(db),
                Linkage::Average => {
                    (size_a as f64 * da + size_b as f64 * db) / (size_a + size_b) as f64
                }
            };
            new_row.push(d);
        }

        // Drop bj then bi (bj > bi), append the merged cluster.
        for row in dist.iter_mut() {
            row.remove(bj);
            row.remove(bi);
        }
        dist.remove(bj);
        dist.remove(bi);
        active.remove(bj);
        active.remove(bi);
        for (row, &d) in dist.iter_mut().zip(&new_row) {
            row.push(d);
        }
        new_row.push(0.0);
        dist.push(new_row);
        active.push((n + step, size_a + size_b));
    }

    Ok(LinkageTree {
        item_ids: vectors.item_ids().to_vec(),
        linkage,
        merges,
    })
}

/// Cronbach's alpha over a subset of item columns, with sample (n-1)
/// variances: alpha = k/(k-1) * (1 - sum(item variances) / var(total)).
pub fn cronbach_alpha(responses: &ResponseMatrix, items: &[usize]) -> Result<f64> {
    let k = items.len();
    let n = responses.respondent_count();
    if k < 2 || n < 2 {
        return Err(Error::DomainError(
            "alpha needs at least 2 items and 2 respondents".into(),
        ));
    }
    if items.iter().any(|&i| i >= responses.item_count()) {
        return Err(Error::DomainError("item index out of range".into()));
    }
    let totals: Vec<f64> = responses
        .rows()
        .iter()
        .map(|row| items.iter().map(|&i| row[i] as f64).sum())
        .collect();
    let total_var = sample_variance(&totals);
    if total_var == 0.0 {
        return Err(Error::DegenerateScale);
    }
    let item_var_sum: f64 = items
        .iter()
        .map(|&i| {
            let col: Vec<f64> = responses.rows().iter().map(|row| row[i] as f64).collect();
            sample_variance(&col)
        })
        .sum();
    Ok(k as f64 / (k as f64 - 1.0) * (1.0 - item_var_sum / total_var))
}

fn sample_variance(values: &[f64]) -> f64 {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0)
}

/// Chance-corrected pair-counting agreement between two partitions of
/// the same items; 1.0 for identical partitions up to relabeling. Items
/// are matched by id, so the two partitions may list them in different
/// orders. When the ARI denominator vanishes (both partitions trivial),
/// returns 1.0 by convention.
pub fn adjusted_rand_index(a: &Partition, b: &Partition) -> Result<f64> {
    if !a.same_items(b) {
        return Err(Error::DomainError(
            "partitions cover different item sets".into(),
        ));
    }
    let n = a.item_count();
    let ka = a.cluster_count();
    let kb = b.cluster_count();
    let mut table = vec![vec![0usize; kb]; ka];
    for (i, id) in a.item_ids().iter().enumerate() {
        let ca = a.cluster_of_index(i);
        let cb = b.cluster_of(id).unwrap();
        table[ca][cb] += 1;
    }
    let choose2 = |x: usize| (x * x.saturating_sub(1)) as f64 / 2.0;
    let sum_cells: f64 = table.iter().flatten().map(|&c| choose2(c)).sum();
    let sum_a: f64 = table.iter().map(|r| choose2(r.iter().sum())).sum();
    let sum_b: f64 = (0..kb)
        .map(|j| choose2(table.iter().map(|r| r[j]).sum()))
        .sum();
    let expected = sum_a * sum_b / choose2(n);
    let max_index = 0.5 * (sum_a + sum_b);
    if (max_index - expected).abs() < f64::EPSILON {
        return Ok(1.0);
    }
    Ok((sum_cells - expected) / (max_index - expected))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn kmeans_single_cluster() {
        let v = ItemVectors::new(ids(3), vec![vec![1.0, 2.0], vec![3.0, 4.0], vec![5.0, 6.0]])
            .unwrap();
        let p = kmeans(&v, 1, 0, 4).unwrap();
        assert_eq!(p.cluster_count(), 1);
    }

    #[test]
    fn kmeans_recovers_separated_groups() {
        let v = ItemVectors::new(
            ids(6),
            vec![
                vec![0.0, 0.1],
                vec![0.1, 0.0],
                vec![0.05, 0.05],
                vec![10.0, 10.1],
                vec![10.1, 10.0],
                vec![10.05, 10.05],
            ],
        )
        .unwrap();
        let p = kmeans(&v, 2, 7, 8).unwrap();
        assert_eq!(p.labels(), &[0, 0, 0, 1, 1, 1]);
    }

    #[test]
    fn kmeans_matches_exhaustive_wcss() {
        // 6 items, k = 2: compare with the minimum WCSS over all 31
        // bipartitions enumerated directly.
        let v = ItemVectors::new(
            ids(6),
            vec![
                vec![1.0, 2.0],
                vec![2.0, 1.5],
                vec![4.0, 4.5],
                vec![5.0, 4.0],
                vec![1.5, 1.0],
                vec![4.5, 5.0],
            ],
        )
        .unwrap();
        let p = kmeans(&v, 2, 3, 32).unwrap();
        let got = wcss(&v, p.labels());

        let mut best = f64::INFINITY;
        for mask in 1..31u32 {
            let labels: Vec<usize> =
                (0..6).map(|i| ((mask >> i) & 1) as usize).collect();
            best = best.min(wcss(&v, &labels));
        }
        assert!(close(got, best, 1e-9), "{got} vs {best}");
    }

    #[test]
    fn kmeans_rejects_bad_k() {
        let v = ItemVectors::new(ids(2), vec![vec![0.0, 0.0], vec![1.0, 1.0]]).unwrap();
        assert!(matches!(
            kmeans(&v, 3, 0, 1),
            Err(Error::InvalidClusterCount { .. })
        ));
    }

    #[test]
    fn agglomerative_two_items() {
        let v = ItemVectors::new(ids(2), vec![vec![0.0, 0.0], vec![3.0, 4.0]]).unwrap();
        let tree = agglomerative(&v, Linkage::Average).unwrap();
        assert_eq!(tree.merges.len(), 1);
        assert!(close(tree.merges[0].distance, 5.0, 1e-12));
    }

    #[test]
    fn agglomerative_first_merge_is_nearest_pair() {
        let v = ItemVectors::new(
            ids(3),
            vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![10.0, 0.0]],
        )
        .unwrap();
        for linkage in [Linkage::Single, Linkage::Complete, Linkage::Average] {
            let tree = agglomerative(&v, linkage).unwrap();
            assert_eq!((tree.merges[0].cluster_a, tree.merges[0].cluster_b), (0, 1));
        }
    }

    /// Brute-force linkage oracle: recompute inter-cluster distances from
    /// member lists at every step instead of Lance-Williams updates.
    fn brute_force_merges(v: &ItemVectors, linkage: Linkage) -> Vec<Merge> {
        let n = v.len();
        let mut clusters: Vec<(usize, Vec<usize>)> =
            (0..n).map(|i| (i, vec![i])).collect();
        let mut merges = Vec::new();
        for step in 0..n - 1 {
            let m = clusters.len();
            let (mut bi, mut bj, mut best) = (0, 1, f64::INFINITY);
            for i in 0..m {
                for j in i + 1..m {
                    let mut ds = Vec::new();
                    for &a in &clusters[i].1 {
                        for &b in &clusters[j].1 {
                            ds.push(sq_dist(v.vector(a), v.vector(b)).sqrt());
                        }
                    }
                    let d = match linkage {
                        Linkage::Single => ds.iter().cloned().fold(f64::INFINITY, f64::min),
                        Linkage::Complete => ds.iter().cloned().fold(0.0, f64::max),
                        Linkage::Average => ds.iter().sum::<f64>() / ds.len() as f64,
                    };
                    if d < best {
                        best = d;
                        bi = i;
                        bj = j;
                    }
                }
            }
            let (id_b, members_b) = clusters.remove(bj);
            let (id_a, members_a) = clusters.remove(bi);
            let mut merged = members_a;
            merged.extend(members_b);
            merges.push(Merge {
                cluster_a: id_a.min(id_b),
                cluster_b: id_a.max(id_b),
                distance: best,
                size: merged.len(),
            });
            clusters.push((n + step, merged));
        }
        merges
    }

    #[test]
    fn agglomerative_matches_brute_force_oracle() {
        let mut vectors = Vec::new();
        // Seeded pseudo-random 5x4 data, fixed here for reproducibility.
        let raw = [
            [3.1, 0.4, 2.2, 5.0],
            [2.9, 0.6, 2.0, 4.8],
            [7.2, 6.6, 1.1, 0.3],
            [0.5, 4.4, 6.3, 2.2],
            [7.0, 6.3, 1.4, 0.2],
        ];
        for row in raw {
            vectors.push(row.to_vec());
        }
        let v = ItemVectors::new(ids(5), vectors).unwrap();
        for linkage in [Linkage::Single, Linkage::Complete, Linkage::Average] {
            let tree = agglomerative(&v, linkage).unwrap();
            let oracle = brute_force_merges(&v, linkage);
            assert_eq!(tree.merges.len(), oracle.len());
            for (a, b) in tree.merges.iter().zip(&oracle) {
                assert_eq!((a.cluster_a, a.cluster_b), (b.cluster_a, b.cluster_b));
                assert!(close(a.distance, b.distance, 1e-9));
            }
        }
    }

    #[test]
    fn linkage_distances_non_decreasing_for_average() {
        let raw = [
            [1.0, 2.0],
            [1.1, 2.1],
            [5.0, 5.0],
            [5.2, 4.9],
            [9.0, 1.0],
        ];
        let v = ItemVectors::new(ids(5), raw.iter().map(|r| r.to_vec()).collect()).unwrap();
        let tree = agglomerative(&v, Linkage::Average).unwrap();
        for pair in tree.merges.windows(2) {
            assert!(pair[0].distance <= pair[1].distance + 1e-12);
        }
    }

    #[test]
    fn cut_tree_produces_k_clusters() {
        let raw = [[0.0, 0.0], [0.1, 0.0], [5.0, 5.0], [5.1, 5.0]];
        let v = ItemVectors::new(ids(4), raw.iter().map(|r| r.to_vec()).collect()).unwrap();
        let tree = agglomerative(&v, Linkage::Average).unwrap();
        let p = tree.cut(2).unwrap();
        assert_eq!(p.labels(), &[0, 0, 1, 1]);
        assert_eq!(tree.cut(1).unwrap().cluster_count(), 1);
        assert_eq!(tree.cut(4).unwrap().cluster_count(), 4);
    }

    #[test]
    fn alpha_perfect_for_duplicated_items() {
        let m = ResponseMatrix::new(
            ids(3),
            vec![vec![1, 1, 1], vec![4, 4, 4], vec![7, 7, 7], vec![2, 2, 2]],
            7,
        )
        .unwrap();
        let a = cronbach_alpha(&m, &[0, 1, 2]).unwrap();
        assert!(close(a, 1.0, 1e-12));
    }

    #[test]
    fn alpha_shift_invariant() {
        // item2 = item1 + 2 everywhere.
        let m = ResponseMatrix::new(
            ids(2),
            vec![vec![1, 3], vec![4, 6], vec![2, 4], vec![5, 7]],
            7,
        )
        .unwrap();
        let a = cronbach_alpha(&m, &[0, 1]).unwrap();
        assert!(close(a, 1.0, 1e-12));
    }

    #[test]
    fn alpha_matches_hand_computed_variances() {
        // 4 respondents x 3 items; oracle computed with independent
        // variance evaluations below.
        let rows = vec![vec![1, 2, 3], vec![2, 4, 3], vec![3, 3, 5], vec![4, 5, 6]];
        let m = ResponseMatrix::new(ids(3), rows.clone(), 7).unwrap();
        let a = cronbach_alpha(&m, &[0, 1, 2]).unwrap();

        let var = |xs: &[f64]| {
            let mean = xs.iter().sum::<f64>() / xs.len() as f64;
            xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (xs.len() as f64 - 1.0)
        };
        let cols: Vec<Vec<f64>> = (0..3)
            .map(|i| rows.iter().map(|r| r[i] as f64).collect())
            .collect();
        let totals: Vec<f64> = rows
            .iter()
            .map(|r| r.iter().map(|&v| v as f64).sum())
            .collect();
        let expected =
            1.5 * (1.0 - (var(&cols[0]) + var(&cols[1]) + var(&cols[2])) / var(&totals));
        assert!(close(a, expected, 1e-12));
    }

    #[test]
    fn alpha_degenerate_scale_errors() {
        let m = ResponseMatrix::new(ids(2), vec![vec![2, 5], vec![2, 5]], 7).unwrap();
        assert!(matches!(
            cronbach_alpha(&m, &[0, 1]),
            Err(Error::DegenerateScale)
        ));
    }

    #[test]
    fn ari_identity_and_relabeling() {
        let a = Partition::new(ids(6), vec![0, 0, 1, 1, 2, 2]).unwrap();
        let b = Partition::new(ids(6), vec![2, 2, 0, 0, 1, 1]).unwrap();
        assert!(close(adjusted_rand_index(&a, &a).unwrap(), 1.0, 1e-12));
        assert!(close(adjusted_rand_index(&a, &b).unwrap(), 1.0, 1e-12));
    }

    #[test]
    fn ari_matches_pair_enumeration() {
        // Oracle: classify all 15 pairs of 6 items as together/apart in
        // each partition and apply the pair-counting formula directly.
        let a = Partition::new(ids(6), vec![0, 0, 0, 1, 1, 2]).unwrap();
        let b = Partition::new(ids(6), vec![0, 0, 1, 1, 2, 2]).unwrap();
        let ari = adjusted_rand_index(&a, &b).unwrap();

        let la = a.labels();
        let lb = b.labels();
        let mut together_both = 0.0;
        let mut together_a = 0.0;
        let mut together_b = 0.0;
        let mut pairs = 0.0;
        for i in 0..6 {
            for j in i + 1..6 {
                pairs += 1.0;
                let sa = la[i] == la[j];
                let sb = lb[i] == lb[j];
                if sa {
                    together_a += 1.0;
                }
                if sb {
                    together_b += 1.0;
                }
                if sa && sb {
                    together_both += 1.0;
                }
            }
        }
        let expected = together_a * together_b / pairs;
        let max_index = 0.5 * (together_a + together_b);
        let oracle = (together_both - expected) / (max_index - expected);
        assert!(close(ari, oracle, 1e-12));
    }

    #[test]
    fn ari_symmetric() {
        let a = Partition::new(ids(5), vec![0, 0, 1, 1, 1]).unwrap();
        let b = Partition::new(ids(5), vec![0, 1, 1, 0, 1]).unwrap();
        let ab = adjusted_rand_index(&a, &b).unwrap();
        let ba = adjusted_rand_index(&b, &a).unwrap();
        assert!(close(ab, ba, 1e-12));
    }

    #[test]
    fn ari_trivial_convention() {
        let a = Partition::new(ids(4), vec![0, 0, 0, 0]).unwrap();
        assert!(close(adjusted_rand_index(&a, &a).unwrap(), 1.0, 1e-12));
    }

    #[test]
    fn ari_rejects_item_mismatch() {
        let a = Partition::new(ids(3), vec![0, 0, 1]).unwrap();
        let b = Partition::new(vec!["x".into(), "y".into(), "z".into()], vec![0, 0, 1]).unwrap();
        assert!(matches!(
            adjusted_rand_index(&a, &b),
            Err(Error::DomainError(_))
        ));
    }
}
