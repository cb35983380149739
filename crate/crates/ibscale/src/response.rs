//! Respondents-by-items answer matrix and CSV ingestion.

use std::collections::HashSet;
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default number of answer levels (7-point Likert scale).
pub const DEFAULT_LEVEL_COUNT: u8 = 7;

/// A rectangular table of ordinal answers: one row per respondent, one
/// column per item, every value in `1..=level_count`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResponseMatrix {
    item_ids: Vec<String>,
    values: Vec<Vec<u8>>,
    level_count: u8,
}

impl ResponseMatrix {
    pub fn new(item_ids: Vec<String>, values: Vec<Vec<u8>>, level_count: u8) -> Result<Self> {
        if item_ids.is_empty() || values.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut seen = HashSet::new();
        for id in &item_ids {
            if id.is_empty() || !seen.insert(id.clone()) {
                return Err(Error::DomainError(format!(
                    "item ids must be unique and non-empty, got {id:?}"
                )));
            }
        }
        for (r, row) in values.iter().enumerate() {
            if row.len() != item_ids.len() {
                return Err(Error::DimensionError {
                    left: row.len(),
                    right: item_ids.len(),
                });
            }
            for (c, &v) in row.iter().enumerate() {
                if v < 1 || v > level_count {
                    return Err(Error::InvalidLevel {
                        row: r,
                        item: item_ids[c].clone(),
                        value: v as i64,
                        max: level_count,
                    });
                }
            }
        }
        Ok(Self {
            item_ids,
            values,
            level_count,
        })
    }

    pub fn item_ids(&self) -> &[String] {
        &self.item_ids
    }

    pub fn item_count(&self) -> usize {
        self.item_ids.len()
    }

    pub fn respondent_count(&self) -> usize {
        self.values.len()
    }

    pub fn level_count(&self) -> u8 {
        self.level_count
    }

    pub fn value(&self, respondent: usize, item: usize) -> u8 {
        self.values[respondent][item]
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.values
    }

    /// One column per item, as real-valued vectors of length `respondent_count`.
    pub fn item_columns(&self) -> Vec<Vec<f64>> {
        (0..self.item_count())
            .map(|i| self.values.iter().map(|row| row[i] as f64).collect())
            .collect()
    }

    /// Per-item histogram of answer levels, `histograms[item][level-1]`.
    pub fn histograms(&self) -> Vec<Vec<usize>> {
        let mut h = vec![vec![0usize; self.level_count as usize]; self.item_count()];
        for row in &self.values {
            for (i, &v) in row.iter().enumerate() {
                h[i][v as usize - 1] += 1;
            }
        }
        h
    }
}

/// What ingestion dropped and why.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IngestReport {
    pub dropped_rows: usize,
    /// 1-based line numbers of rows dropped for missing answers.
    pub dropped_lines: Vec<usize>,
}

/// CSV layout: first row = item labels, each following row = one
/// respondent's integer levels. A blank cell marks a missing answer and
/// drops the whole row.
pub fn read_csv<R: Read>(
    reader: R,
    delimiter: u8,
    level_count: u8,
) -> Result<(ResponseMatrix, IngestReport)> {
    let mut rdr = csv::ReaderBuilder::new()
        .delimiter(delimiter)
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);

    let item_ids: Vec<String> = rdr
        .headers()?
        .iter()
        .map(|s| s.trim().to_string())
        .collect();

    let mut values = Vec::new();
    let mut report = IngestReport::default();
    for (idx, record) in rdr.records().enumerate() {
        let record = record?;
        let line = idx + 2; // 1-based, after the header
        if record.len() != item_ids.len() {
            return Err(Error::Parse {
                line,
                message: format!("expected {} cells, found {}", item_ids.len(), record.len()),
            });
        }
        if record.iter().any(|cell| cell.trim().is_empty()) {
            report.dropped_rows += 1;
            report.dropped_lines.push(line);
            continue;
        }
        let mut row = Vec::with_capacity(item_ids.len());
        for (c, cell) in record.iter().enumerate() {
            let v: i64 = cell.trim().parse().map_err(|_| Error::Parse {
                line,
                message: format!("cell {:?} is not an integer", cell),
            })?;
            if v < 1 || v > level_count as i64 {
                return Err(Error::InvalidLevel {
                    row: idx,
                    item: item_ids[c].clone(),
                    value: v,
                    max: level_count,
                });
            }
            row.push(v as u8);
        }
        values.push(row);
    }

    let matrix = ResponseMatrix::new(item_ids, values, level_count)?;
    Ok((matrix, report))
}

pub fn read_csv_path<P: AsRef<Path>>(
    path: P,
    delimiter: u8,
    level_count: u8,
) -> Result<(ResponseMatrix, IngestReport)> {
    let file = std::fs::File::open(path)?;
    read_csv(file, delimiter, level_count)
}
