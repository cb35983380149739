//! Theoretical scale structure: the item-to-subscale map of the bundled
//! 29-item academic motivation instrument, deviation detection against a
//! clustering, and a continuum-alignment diagnostic.

use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hierarchy::PartitionHierarchy;
use crate::partition::Partition;

/// Subscale names of the bundled instrument, in continuum order.
pub const AMOTIVATION: &str = "Amotivation";
pub const EXTERNAL_ATTENDANCE: &str = "External Regulation by Attendance";
pub const EXTERNAL_SOCIAL: &str = "External Regulation by Social Interaction";
pub const INTROJECTED: &str = "Introjected Regulation";
pub const IDENTIFIED: &str = "Identified Regulation";
pub const INTEGRATED: &str = "Integrated Regulation";
pub const INTRINSIC: &str = "Intrinsic Motivation";

/// Maps each item to its theoretical subscale and orders the subscales
/// along the self-determination continuum. Subscales may share a rank
/// (the two external-regulation forms are tied in the builtin map).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScaleMap {
    entries: Vec<(String, String)>,
    ranks: Vec<(String, u32)>,
}

impl ScaleMap {
    pub fn new(entries: Vec<(String, String)>, ranks: Vec<(String, u32)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyInput);
        }
        for (item, subscale) in &entries {
            if entries.iter().filter(|(i, _)| i == item).count() > 1 {
                return Err(Error::DomainError(format!(
                    "item {item:?} mapped more than once"
                )));
            }
            if !ranks.iter().any(|(s, _)| s == subscale) {
                return Err(Error::DomainError(format!(
                    "subscale {subscale:?} has no continuum rank"
                )));
            }
        }
        Ok(Self { entries, ranks })
    }

    /// Two-column CSV (item id, subscale). The continuum order of a
    /// loaded map is the order in which subscales first appear.
    pub fn from_reader<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(true)
            .trim(csv::Trim::All)
            .from_reader(reader);
        let mut entries = Vec::new();
        let mut ranks: Vec<(String, u32)> = Vec::new();
        for record in rdr.records() {
            let record = record?;
            if record.len() != 2 {
                return Err(Error::DomainError(
                    "scale map rows must have exactly two columns".into(),
                ));
            }
            let item = record[0].to_string();
            let subscale = record[1].to_string();
            if !ranks.iter().any(|(s, _)| s == &subscale) {
                ranks.push((subscale.clone(), ranks.len() as u32));
            }
            entries.push((item, subscale));
        }
        Self::new(entries, ranks)
    }

    pub fn from_csv_path<P: AsRef<Path>>(path: P) -> Result<Self> {
        Self::from_reader(std::fs::File::open(path)?)
    }

    pub fn subscale_of(&self, item: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(i, _)| i == item)
            .map(|(_, s)| s.as_str())
    }

    pub fn rank_of(&self, subscale: &str) -> Option<u32> {
        self.ranks
            .iter()
            .find(|(s, _)| s == subscale)
            .map(|&(_, r)| r)
    }

    pub fn item_ids(&self) -> Vec<&str> {
        self.entries.iter().map(|(i, _)| i.as_str()).collect()
    }

    pub fn item_count(&self) -> usize {
        self.entries.len()
    }

    /// Subscales in continuum order with their member items.
    pub fn subscale_items(&self) -> Vec<(&str, Vec<&str>)> {
        self.ranks
            .iter()
            .map(|(s, _)| {
                (
                    s.as_str(),
                    self.entries
                        .iter()
                        .filter(|(_, sub)| sub == s)
                        .map(|(i, _)| i.as_str())
                        .collect(),
                )
            })
            .collect()
    }
}

/// The 29-item map of the bundled questionnaire, with the two external
/// regulation subscales tied at one continuum rank.
pub fn builtin_scale_map() -> ScaleMap {
    let csv = include_str!("../data/leal2013_scale_map.csv");
    let loaded = ScaleMap::from_reader(csv.as_bytes()).expect("bundled scale map is valid");
    let ranks = vec![
        (AMOTIVATION.to_string(), 0),
        (EXTERNAL_ATTENDANCE.to_string(), 1),
        (EXTERNAL_SOCIAL.to_string(), 1),
        (INTROJECTED.to_string(), 2),
        (IDENTIFIED.to_string(), 3),
        (INTEGRATED.to_string(), 4),
        (INTRINSIC.to_string(), 5),
    ];
    ScaleMap::new(loaded.entries, ranks).expect("bundled scale map is valid")
}

/// An item whose theoretical subscale is not its cluster's plurality
/// subscale.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Deviation {
    pub item: String,
    pub expected: String,
    /// The plurality subscale(s) of the item's cluster; more than one
    /// when the plurality is tied.
    pub cluster_majority: Vec<String>,
    /// True when the cluster's plurality was tied.
    pub cluster_mixed: bool,
}

/// Flags every item whose subscale differs from the plurality subscale
/// of its cluster. Ties mark all tied subscales and flag the cluster as
/// mixed. The partition must cover exactly the mapped items.
pub fn deviation_report(partition: &Partition, map: &ScaleMap) -> Result<Vec<Deviation>> {
    if partition.item_count() != map.item_count() {
        return Err(Error::DomainError(format!(
            "partition covers {} items but the scale map has {}",
            partition.item_count(),
            map.item_count()
        )));
    }
    for id in partition.item_ids() {
        if map.subscale_of(id).is_none() {
            return Err(Error::DomainError(format!("item {id:?} is not mapped")));
        }
    }

    // Plurality subscale(s) per cluster.
    let members = partition.members();
    let mut plurality: Vec<(Vec<String>, bool)> = Vec::with_capacity(members.len());
    for cluster in &members {
        let mut counts: Vec<(String, usize)> = Vec::new();
        for id in cluster {
            let sub = map.subscale_of(id).unwrap().to_string();
            match counts.iter_mut().find(|(s, _)| *s == sub) {
                Some((_, c)) => *c += 1,
                None => counts.push((sub, 1)),
            }
        }
        let max = counts.iter().map(|&(_, c)| c).max().unwrap_or(0);
        let tied: Vec<String> = counts
            .iter()
            .filter(|&&(_, c)| c == max)
            .map(|(s, _)| s.clone())
            .collect();
        let mixed = tied.len() > 1;
        plurality.push((tied, mixed));
    }

    let mut report = Vec::new();
    for (i, id) in partition.item_ids().iter().enumerate() {
        let cluster = partition.cluster_of_index(i);
        let expected = map.subscale_of(id).unwrap().to_string();
        let (majority, mixed) = &plurality[cluster];
        if !majority.contains(&expected) {
            report.push(Deviation {
                item: id.clone(),
                expected,
                cluster_majority: majority.clone(),
                cluster_mixed: *mixed,
            });
        }
    }
    Ok(report)
}

/// Per-level continuum alignment of a hierarchy.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlignmentScore {
    pub t: usize,
    pub score: f64,
    /// True when the partition has no same-cluster pairs, making the
    /// score vacuous.
    pub degenerate: bool,
}

/// Fraction of same-cluster item pairs whose subscales are adjacent or
/// equal on the continuum (rank difference at most 1). A partition with
/// no same-cluster pairs scores 1.0 and is flagged degenerate.
pub fn partition_alignment(partition: &Partition, map: &ScaleMap) -> Result<(f64, bool)> {
    let ids = partition.item_ids();
    let ranks: Vec<u32> = ids
        .iter()
        .map(|id| {
            map.subscale_of(id)
                .and_then(|s| map.rank_of(s))
                .ok_or_else(|| Error::DomainError(format!("item {id:?} is not mapped")))
        })
        .collect::<Result<_>>()?;
    let mut same_cluster = 0usize;
    let mut aligned = 0usize;
    for i in 0..ids.len() {
        for j in i + 1..ids.len() {
            if partition.cluster_of_index(i) == partition.cluster_of_index(j) {
                same_cluster += 1;
                if ranks[i].abs_diff(ranks[j]) <= 1 {
                    aligned += 1;
                }
            }
        }
    }
    if same_cluster == 0 {
        return Ok((1.0, true));
    }
    Ok((aligned as f64 / same_cluster as f64, false))
}

pub fn continuum_alignment(
    hierarchy: &PartitionHierarchy,
    map: &ScaleMap,
) -> Result<Vec<AlignmentScore>> {
    hierarchy
        .levels
        .iter()
        .map(|level| {
            let (score, degenerate) = partition_alignment(&level.partition, map)?;
            Ok(AlignmentScore {
                t: level.t,
                score,
                degenerate,
            })
        })
        .collect()
}
