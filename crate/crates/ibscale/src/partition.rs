//! Hard partitions of items into clusters.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A hard assignment of every item to exactly one cluster. Cluster
/// indices are contiguous `0..cluster_count` and ordered by first item
/// occurrence, so two structurally equal partitions compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    item_ids: Vec<String>,
    cluster_of: Vec<usize>,
    cluster_count: usize,
}

impl Partition {
    /// Build from raw labels; labels are canonicalized to first-occurrence
    /// order, so the input labels need not be contiguous.
    pub fn new(item_ids: Vec<String>, labels: Vec<usize>) -> Result<Self> {
        if item_ids.len() != labels.len() {
            return Err(Error::DimensionError {
                left: item_ids.len(),
                right: labels.len(),
            });
        }
        if item_ids.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut relabel: Vec<(usize, usize)> = Vec::new();
        let mut cluster_of = Vec::with_capacity(labels.len());
        for &raw in &labels {
            let idx = match relabel.iter().find(|(orig, _)| *orig == raw) {
                Some(&(_, idx)) => idx,
                None => {
                    let idx = relabel.len();
                    relabel.push((raw, idx));
                    idx
                }
            };
            cluster_of.push(idx);
        }
        Ok(Self {
            item_ids,
            cluster_of,
            cluster_count: relabel.len(),
        })
    }

    pub fn item_ids(&self) -> &[String] {
        &self.item_ids
    }

    pub fn item_count(&self) -> usize {
        self.item_ids.len()
    }

    pub fn cluster_count(&self) -> usize {
        self.cluster_count
    }

    pub fn cluster_of_index(&self, item: usize) -> usize {
        self.cluster_of[item]
    }

    pub fn labels(&self) -> &[usize] {
        &self.cluster_of
    }

    pub fn cluster_of(&self, item_id: &str) -> Option<usize> {
        self.item_ids
            .iter()
            .position(|id| id == item_id)
            .map(|i| self.cluster_of[i])
    }

    /// Per-cluster item-id lists, indexed by cluster.
    pub fn members(&self) -> Vec<Vec<String>> {
        let mut m = vec![Vec::new(); self.cluster_count];
        for (id, &c) in self.item_ids.iter().zip(&self.cluster_of) {
            m[c].push(id.clone());
        }
        m
    }

    /// Per-cluster item index lists.
    pub fn member_indices(&self) -> Vec<Vec<usize>> {
        let mut m = vec![Vec::new(); self.cluster_count];
        for (i, &c) in self.cluster_of.iter().enumerate() {
            m[c].push(i);
        }
        m
    }

    /// True when both partitions cover the same item ids (order-insensitive).
    pub fn same_items(&self, other: &Partition) -> bool {
        if self.item_ids.len() != other.item_ids.len() {
            return false;
        }
        let mut a = self.item_ids.clone();
        let mut b = other.item_ids.clone();
        a.sort();
        b.sort();
        a == b
    }
}
