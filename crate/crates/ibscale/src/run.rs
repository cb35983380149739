//! Reproducible run bundles: a manifest describing every input and
//! knob, and writers that turn one manifest into a deterministic set of
//! JSON/DOT/ASCII output files.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::baselines::{self, ItemVectors, Linkage};
use crate::emit;
use crate::error::{Error, Result};
use crate::hierarchy::{self, PartitionHierarchy};
use crate::partition::Partition;
use crate::probability::{estimate_joint_smoothed, JointDistribution, JointMode};
use crate::response::{self, IngestReport, ResponseMatrix};
use crate::scales::{self, AlignmentScore, Deviation, ScaleMap};
use crate::solver::{self, IbSolution, SolverConfig};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Everything needed to reproduce a run byte for byte. Echoed verbatim
/// into every output bundle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool_version: String,
    pub input_path: String,
    pub input_sha256: String,
    pub delimiter: char,
    pub level_count: u8,
    pub joint_mode: JointMode,
    pub solver: SolverConfig,
    pub t_min: usize,
    pub t_max: usize,
    pub warm_start: bool,
    pub scale_map_path: Option<String>,
    pub out_dir: String,
}

impl RunManifest {
    pub fn load<P: AsRef<Path>>(path: P) -> Result<Self> {
        Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn file_sha256<P: AsRef<Path>>(path: P) -> Result<String> {
    Ok(sha256_hex(&fs::read(path)?))
}

pub fn write_json<T: Serialize, P: AsRef<Path>>(path: P, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

/// The sweep bundle's main document. It embeds the joint distribution,
/// so every reported information value can be recomputed from this file
/// alone.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HierarchyDocument {
    pub manifest: RunManifest,
    pub ingest: IngestReport,
    pub item_ids: Vec<String>,
    pub joint: Vec<Vec<f64>>,
    pub hierarchy: PartitionHierarchy,
}

/// Per-level scale diagnostics, present when a scale map was supplied.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScaleReport {
    pub t: usize,
    pub deviations: Vec<Deviation>,
    pub alignment: AlignmentScore,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionDocument {
    pub manifest: RunManifest,
    pub t: usize,
    pub item_ids: Vec<String>,
    pub solution: IbSolution,
    pub hardened: Partition,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodResult {
    pub name: String,
    pub members: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub k: usize,
    pub linkage: Linkage,
    pub methods: Vec<MethodResult>,
    /// Pairwise ARI matrix in method order.
    pub ari: Vec<Vec<f64>>,
    pub warning: Option<String>,
}

pub fn load_responses(manifest: &RunManifest) -> Result<(ResponseMatrix, IngestReport)> {
    response::read_csv_path(
        &manifest.input_path,
        manifest.delimiter as u8,
        manifest.level_count,
    )
}

pub fn build_joint(manifest: &RunManifest, responses: &ResponseMatrix) -> Result<JointDistribution> {
    estimate_joint_smoothed(responses, manifest.joint_mode, manifest.solver.smoothing)
}

fn load_scale_map(manifest: &RunManifest) -> Result<Option<ScaleMap>> {
    match &manifest.scale_map_path {
        None => Ok(None),
        Some(path) if path == "builtin" => Ok(Some(scales::builtin_scale_map())),
        Some(path) => Ok(Some(ScaleMap::from_csv_path(path)?)),
    }
}

/// Runs the full sweep described by the manifest and writes the bundle:
/// manifest.json, hierarchy.json, dendrogram.dot, dendrogram.txt,
/// info_plane.json and (with a scale map) scale_report.json.
pub fn run_sweep(manifest: &RunManifest) -> Result<Vec<PathBuf>> {
    let out = PathBuf::from(&manifest.out_dir);
    fs::create_dir_all(&out)?;
    let (responses, ingest) = load_responses(manifest)?;
    let joint = build_joint(manifest, &responses)?;
    let h = hierarchy::sweep(
        &joint,
        responses.item_ids(),
        manifest.t_min,
        manifest.t_max,
        &manifest.solver,
        manifest.warm_start,
    )?;

    let mut written = Vec::new();
    let manifest_path = out.join("manifest.json");
    write_json(&manifest_path, manifest)?;
    written.push(manifest_path);

    let doc = HierarchyDocument {
        manifest: manifest.clone(),
        ingest,
        item_ids: responses.item_ids().to_vec(),
        joint: joint.rows().to_vec(),
        hierarchy: h.clone(),
    };
    let hierarchy_path = out.join("hierarchy.json");
    write_json(&hierarchy_path, &doc)?;
    written.push(hierarchy_path);

    let dot_path = out.join("dendrogram.dot");
    fs::write(&dot_path, emit::hierarchy_dot(&h))?;
    written.push(dot_path);

    let ascii_path = out.join("dendrogram.txt");
    fs::write(&ascii_path, emit::hierarchy_ascii(&h))?;
    written.push(ascii_path);

    let plane_path = out.join("info_plane.json");
    write_json(&plane_path, &hierarchy::info_plane(&h))?;
    written.push(plane_path);

    if let Some(map) = load_scale_map(manifest)? {
        let reports: Vec<ScaleReport> = h
            .levels
            .iter()
            .map(|level| {
                let deviations = scales::deviation_report(&level.partition, &map)?;
                let (score, degenerate) = scales::partition_alignment(&level.partition, &map)?;
                Ok(ScaleReport {
                    t: level.t,
                    deviations,
                    alignment: AlignmentScore {
                        t: level.t,
                        score,
                        degenerate,
                    },
                })
            })
            .collect::<Result<_>>()?;
        let report_path = out.join("scale_report.json");
        write_json(&report_path, &reports)?;
        written.push(report_path);
    }
    Ok(written)
}

/// Solves a single cluster count and writes solution.json (or returns
/// the document for printing).
pub fn run_solve(manifest: &RunManifest, t: usize) -> Result<SolutionDocument> {
    let (responses, _) = load_responses(manifest)?;
    let joint = build_joint(manifest, &responses)?;
    let solution = solver::solve(&joint, t, &manifest.solver)?;
    let hardened = solver::harden(&solution, responses.item_ids())?;
    Ok(SolutionDocument {
        manifest: manifest.clone(),
        t,
        item_ids: responses.item_ids().to_vec(),
        solution,
        hardened,
    })
}

/// IB vs k-means vs agglomerative-cut-at-k on the same data.
pub fn run_compare(
    manifest: &RunManifest,
    k: usize,
    linkage: Linkage,
) -> Result<ComparisonReport> {
    let (responses, _) = load_responses(manifest)?;
    let joint = build_joint(manifest, &responses)?;
    let ib = solver::harden(
        &solver::solve(&joint, k, &manifest.solver)?,
        responses.item_ids(),
    )?;
    let vectors = ItemVectors::from_responses(&responses)?;
    let km = baselines::kmeans(
        &vectors,
        k,
        manifest.solver.seed,
        manifest.solver.restarts,
    )?;
    let tree = baselines::agglomerative(&vectors, linkage)?;
    let agg = tree.cut(k)?;

    let parts = [("ib", &ib), ("kmeans", &km), ("agglomerative", &agg)];
    let mut ari = vec![vec![0.0; parts.len()]; parts.len()];
    for i in 0..parts.len() {
        for j in 0..parts.len() {
            ari[i][j] = baselines::adjusted_rand_index(parts[i].1, parts[j].1)?;
        }
    }
    let warning = (k == 1)
        .then(|| "k = 1: ARI is undefined for trivial partitions, reported as 1.0 by convention".to_string());
    Ok(ComparisonReport {
        k,
        linkage,
        methods: parts
            .iter()
            .map(|(name, p)| MethodResult {
                name: name.to_string(),
                members: p.members(),
            })
            .collect(),
        ari,
        warning,
    })
}

/// Writes a synthetic dataset as data.csv plus planted.json.
pub fn write_synthetic(
    out_dir: &Path,
    matrix: &ResponseMatrix,
    planted: &Partition,
    spec: &crate::synth::SyntheticSpec,
) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(out_dir)?;
    let mut written = Vec::new();

    let csv_path = out_dir.join("data.csv");
    let mut wtr = csv::Writer::from_path(&csv_path)?;
    wtr.write_record(matrix.item_ids())?;
    for row in matrix.rows() {
        wtr.write_record(row.iter().map(|v| v.to_string()))?;
    }
    wtr.flush()?;
    written.push(csv_path);

    #[derive(Serialize)]
    struct PlantedDocument<'a> {
        spec: &'a crate::synth::SyntheticSpec,
        planted: &'a Partition,
    }
    let planted_path = out_dir.join("planted.json");
    write_json(&planted_path, &PlantedDocument { spec, planted })?;
    written.push(planted_path);
    Ok(written)
}

/// Builds a manifest from resolved CLI inputs, hashing the input file.
#[allow(clippy::too_many_arguments)]
pub fn build_manifest(
    input_path: &str,
    delimiter: char,
    level_count: u8,
    joint_mode: JointMode,
    solver: SolverConfig,
    t_min: usize,
    t_max: usize,
    warm_start: bool,
    scale_map_path: Option<String>,
    out_dir: &str,
) -> Result<RunManifest> {
    Ok(RunManifest {
        tool_version: TOOL_VERSION.to_string(),
        input_path: input_path.to_string(),
        input_sha256: file_sha256(input_path)?,
        delimiter,
        level_count,
        joint_mode,
        solver,
        t_min,
        t_max,
        warm_start,
        scale_map_path,
        out_dir: out_dir.to_string(),
    })
}

/// Machine-readable error record emitted on standard error by the CLI.
#[derive(Debug, Serialize)]
pub struct ErrorRecord {
    pub error: String,
    pub kind: String,
}

impl ErrorRecord {
    pub fn from_error(err: &Error) -> Self {
        let kind = match err {
            Error::EmptyInput => "empty_input",
            Error::InvalidLevel { .. } => "invalid_level",
            Error::NotADistribution { .. } => "not_a_distribution",
            Error::DimensionError { .. } => "dimension_error",
            Error::InvalidClusterCount { .. } => "invalid_cluster_count",
            Error::EnumerationBound { .. } => "enumeration_bound",
            Error::DomainError(_) => "domain_error",
            Error::DegenerateScale => "degenerate_scale",
            Error::Parse { .. } => "parse_error",
            Error::Io(_) => "io_error",
            Error::Csv(_) => "csv_error",
            Error::Json(_) => "json_error",
        };
        Self {
            error: err.to_string(),
            kind: kind.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth::SyntheticSpec;

    fn demo_manifest(dir: &Path) -> RunManifest {
        let spec = SyntheticSpec::uniform_groups(
            60,
            2,
            3,
            vec![vec![2.0, 6.0], vec![6.0, 2.0]],
            0.5,
            11,
        );
        let (matrix, planted) = crate::synth::generate_synthetic(&spec).unwrap();
        write_synthetic(dir, &matrix, &planted, &spec).unwrap();
        RunManifest {
            tool_version: TOOL_VERSION.to_string(),
            input_path: dir.join("data.csv").to_string_lossy().into_owned(),
            input_sha256: file_sha256(dir.join("data.csv")).unwrap(),
            delimiter: ',',
            level_count: 7,
            joint_mode: JointMode::AnswerLevel,
            solver: SolverConfig {
                restarts: 16,
                seed: 5,
                ..Default::default()
            },
            t_min: 1,
            t_max: 3,
            warm_start: false,
            scale_map_path: None,
            out_dir: dir.join("out").to_string_lossy().into_owned(),
        }
    }

    #[test]
    fn sweep_bundle_is_reproducible_and_self_describing() {
        let dir = tempfile::tempdir().unwrap();
        let manifest = demo_manifest(dir.path());
        let first = run_sweep(&manifest).unwrap();
        let snapshot: Vec<Vec<u8>> =
            first.iter().map(|p| fs::read(p).unwrap()).collect();
        let second = run_sweep(&manifest).unwrap();
        assert_eq!(first, second);
        for (path, bytes) in second.iter().zip(&snapshot) {
            assert_eq!(&fs::read(path).unwrap(), bytes, "{path:?} changed");
        }

        // hierarchy.json alone must allow recomputing every MI value.
        let doc: HierarchyDocument = serde_json::from_str(
            &fs::read_to_string(dir.path().join("out/hierarchy.json")).unwrap(),
        )
        .unwrap();
        let joint = JointDistribution::new(doc.joint.clone()).unwrap();
        for level in &doc.hierarchy.levels {
            let (itx, ity) = solver::partition_information(&joint, &level.partition);
            assert!((itx - level.info_tx).abs() <= 1e-12);
            assert!((ity - level.info_ty).abs() <= 1e-12);
        }
    }

    #[test]
    fn compare_report_is_square_and_symmetric() {
        let dir = tempfile::tempdir().unwrap();
        let manifest = demo_manifest(dir.path());
        let report = run_compare(&manifest, 2, Linkage::Average).unwrap();
        assert_eq!(report.methods.len(), 3);
        for i in 0..3 {
            assert!((report.ari[i][i] - 1.0).abs() <= 1e-12);
            for j in 0..3 {
                assert!((report.ari[i][j] - report.ari[j][i]).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn solve_document_echoes_config() {
        let dir = tempfile::tempdir().unwrap();
        let manifest = demo_manifest(dir.path());
        let doc = run_solve(&manifest, 2).unwrap();
        assert_eq!(doc.manifest, manifest);
        assert_eq!(doc.solution.cluster_count, 2);
        assert_eq!(doc.hardened.item_count(), 6);
    }
}
