//! Command implementations behind the `arbor` binary. Each returns the JSON
//! document to emit and the process exit status; the binary only parses
//! flags and writes output.

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;

use crate::algebra::{charpoly, invariant_factors, Modulus};
use crate::error::{Error, Result};
use crate::figures::{self, Fixture, ReconstructedInstance, Reproduction, MfMatch};
use crate::parse::{parse_map, parse_orientation, parse_tree};
use crate::report::{to_json_string, PolyJson};
use crate::sweep::{check_n_range, n_cap, run_verify, search_det_mf, DetMfConfig, OrientationMode, SweepConfig};
use crate::theorems::{basis_witness, verify_instance, InstanceReport, VerifyOptions, WitnessMode};
use crate::tree::{encode_prufer, enumerate_trees_capped, canonical_form, Orientation};
use crate::algebra::Polynomial;

/// Exit statuses.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Everything a command may read. Fields a command does not use are ignored.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub tree: Option<String>,
    pub map: Option<String>,
    pub orientation: Option<String>,
    pub n_range: Option<RangeInclusive<usize>>,
    pub orientations: OrientationMode,
    pub primes: Vec<u64>,
    pub seed: u64,
    pub workers: usize,
    pub all_witnesses: bool,
    pub paths_only: bool,
    pub sample_budget: Option<usize>,
    pub figure: Option<String>,
    pub fixtures: Option<PathBuf>,
    /// Run every check in `verify` (path transport, basis witness, row reductions),
    /// not only the matrix identities.
    pub full: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            tree: None,
            map: None,
            orientation: None,
            n_range: None,
            orientations: OrientationMode::Canonical,
            primes: Vec::new(),
            seed: 0,
            workers: 1,
            all_witnesses: false,
            paths_only: false,
            sample_budget: None,
            figure: None,
            fixtures: None,
            full: false,
        }
    }
}

#[derive(Debug)]
pub struct CmdOutput {
    pub json: String,
    pub status: i32,
    /// Human-oriented notes (timings) for stderr; never part of the JSON.
    pub notes: Vec<String>,
}

impl CmdOutput {
    fn new<T: Serialize>(v: &T, pass: bool) -> Self {
        CmdOutput {
            json: to_json_string(v),
            status: if pass { EXIT_PASS } else { EXIT_CLAIM_FAILED },
            notes: Vec::new(),
        }
    }
}

/// Exit status for an error: claim failures are 1, everything else 2.
pub fn exit_status(e: &Error) -> i32 {
    if e.is_claim_failure() {
        EXIT_CLAIM_FAILED
    } else {
        EXIT_USAGE
    }
}

#[derive(Serialize)]
struct ErrorJson {
    error: String,
    kind: &'static str,
}

/// JSON body for a failed command.
pub fn error_json(e: &Error) -> String {
    to_json_string(&ErrorJson {
        error: e.to_string(),
        kind: e.kind(),
    })
}

fn required<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str> {
    v.as_deref()
        .ok_or_else(|| Error::parse(1, 1, format!("missing --{flag}")))
}

// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct Modular {
    #[serde(serialize_with = "crate::report::ser_decimal")]
    p: u64,
    unoriented_charpoly: PolyJson,
    unoriented_invariant_factors: Vec<PolyJson>,
    similar_to_companion: bool,
    witness_is_basis: bool,
}

#[derive(Serialize)]
struct AnalyzeReport {
    command: &'static str,
    #[serde(flatten)]
    instance: InstanceReport,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    modular: Vec<Modular>,
}

pub fn cmd_analyze(cfg: &RunConfig) -> Result<CmdOutput> {
    let tree = Arc::new(parse_tree(required(&cfg.tree, "tree")?)?);
    let f = parse_map(Arc::clone(&tree), required(&cfg.map, "map")?)?;
    let o = match &cfg.orientation {
        Some(s) => parse_orientation(&tree, s)?,
        None => Orientation::canonical(tree.edge_count()),
    };
    let opts = VerifyOptions {
        witness: if cfg.all_witnesses {
            WitnessMode::All
        } else {
            WitnessMode::Canonical
        },
        ..VerifyOptions::full()
    };
    let instance = verify_instance(&f, &o, &opts)?;
    let n = tree.edge_count();
    let b = crate::dynamics::unoriented_matrix(&f)?;
    let witness = basis_witness(&f, &o, 1, 1).ok();
    let mut modular = Vec::new();
    for &p in &cfg.primes {
        let m = Modulus::new(p)?;
        let bp = b.reduce_mod(m);
        let factors = invariant_factors(&bp)?;
        let companion = crate::algebra::companion::<i64>((), n)?.reduce_mod(m);
        modular.push(Modular {
            p,
            unoriented_charpoly: PolyJson::from(&charpoly(&bp)?),
            unoriented_invariant_factors: factors.iter().map(PolyJson::from).collect(),
            similar_to_companion: factors == invariant_factors(&companion)?,
            witness_is_basis: witness.as_ref().is_some_and(|w| w.is_basis_mod(p)),
        });
    }
    let pass = instance.all_pass;
    Ok(CmdOutput::new(
        &AnalyzeReport {
            command: "analyze",
            instance,
            modular,
        },
        pass,
    ))
}

// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct EnumeratedTree {
    code: String,
    edges: String,
    prufer: String,
    path_graph: bool,
}

#[derive(Serialize)]
struct EnumerateRow {
    vertices: String,
    trees: String,
    cycles: String,
    instances_canonical: String,
    list: Vec<EnumeratedTree>,
}

#[derive(Serialize)]
struct EnumerateReport {
    command: &'static str,
    per_vertex_count: Vec<EnumerateRow>,
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

/// Unlabeled trees for every vertex count `n + 1`, `n` in range.
pub fn cmd_enumerate(cfg: &RunConfig) -> Result<CmdOutput> {
    let range = cfg
        .n_range
        .clone()
        .ok_or_else(|| Error::parse(1, 1, "missing --n or --vertices"))?;
    check_n_range(&range, n_cap())?;
    let mut rows = Vec::new();
    for n in range {
        let v = n + 1;
        let trees = enumerate_trees_capped(v, n_cap() + 1)?;
        let cycles = factorial(n);
        rows.push(EnumerateRow {
            vertices: v.to_string(),
            trees: trees.len().to_string(),
            cycles: cycles.to_string(),
            instances_canonical: (cycles * trees.len() as u128).to_string(),
            list: trees
                .iter()
                .map(|t| EnumeratedTree {
                    code: canonical_form(t),
                    edges: t.edge_list_string(),
                    prufer: encode_prufer(t)
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(","),
                    path_graph: t.is_path_graph(),
                })
                .collect(),
        });
    }
    Ok(CmdOutput::new(
        &EnumerateReport {
            command: "enumerate",
            per_vertex_count: rows,
        },
        true,
    ))
}

// ---------------------------------------------------------------------------

pub fn sweep_config(cfg: &RunConfig) -> Result<SweepConfig> {
    let range = cfg
        .n_range
        .clone()
        .ok_or_else(|| Error::parse(1, 1, "missing --n"))?;
    let mut sc = SweepConfig::new(range, cfg.orientations);
    sc.seed = cfg.seed;
    sc.workers = cfg.workers;
    sc.paths_only = cfg.paths_only;
    if cfg.full {
        sc.options = VerifyOptions::full();
    }
    Ok(sc)
}

/// Exhaustive claim checks. Wall-clock time goes to `notes`, not the JSON,
/// so the document is byte-stable.
pub fn cmd_verify(cfg: &RunConfig) -> Result<CmdOutput> {
    let sc = sweep_config(cfg)?;
    let t0 = Instant::now();
    let summary = run_verify(&sc)?;
    let mut out = CmdOutput::new(&summary, summary.all_pass);
    out.notes.push(format!(
        "verify: {} instances in {:.2?} on {} worker(s)",
        summary.total_instances,
        t0.elapsed(),
        sc.workers
    ));
    Ok(out)
}

// ---------------------------------------------------------------------------

/// The basis matrix characteristic polynomial quoted for figure 1(a) with
/// `J = [1, 2]`, constant term first.
pub const FIG1A_MF_CHARPOLY: [i64; 6] = [1, -1, 0, 0, -1, 1];

#[derive(Serialize)]
struct ReconstructionSummary {
    searched: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    found: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    first: Option<ReconstructedInstance>,
    /// Figure 1(a) only: a basis matrix with the quoted charpoly.
    #[serde(skip_serializing_if = "Option::is_none")]
    quoted_mf: Option<QuotedMf>,
}

#[derive(Serialize)]
struct QuotedMf {
    want: PolyJson,
    found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    example: Option<MfMatch>,
}

#[derive(Serialize)]
struct ReproduceOutput {
    #[serde(flatten)]
    reproduction: Reproduction,
    reconstruction: ReconstructionSummary,
}

fn load_fixture(cfg: &RunConfig, id: &str) -> Result<Fixture> {
    match &cfg.fixtures {
        Some(dir) => figures::load(dir, id),
        None => figures::builtin(id),
    }
}

fn reconstruction_summary(fx: &Fixture) -> Result<ReconstructionSummary> {
    if fx.n > figures::RECONSTRUCTION_MAX_N {
        return Ok(ReconstructionSummary {
            searched: false,
            reason: Some(format!(
                "n = {} is beyond the search limit {}",
                fx.n,
                figures::RECONSTRUCTION_MAX_N
            )),
            found: "0".into(),
            first: None,
            quoted_mf: None,
        });
    }
    let recs = figures::reconstruct(fx, usize::MAX)?;
    let quoted_mf = if fx.figure == "1a" {
        let want = Polynomial::from_i64((), &FIG1A_MF_CHARPOLY);
        let example = figures::find_mf_with_charpoly(&recs, &want)?;
        Some(QuotedMf {
            want: PolyJson::from(&want),
            found: example.is_some(),
            example,
        })
    } else {
        None
    };
    Ok(ReconstructionSummary {
        searched: true,
        reason: None,
        found: recs.len().to_string(),
        first: recs.first().map(Into::into),
        quoted_mf,
    })
}

/// Checks one figure against its caption. A mismatch still emits the full
/// comparison, with exit status 1.
pub fn cmd_reproduce(cfg: &RunConfig) -> Result<CmdOutput> {
    let id = required(&cfg.figure, "figure")?;
    let fx = load_fixture(cfg, id)?;
    let reproduction = figures::reproduce(&fx)?;
    let pass = reproduction.require_match().is_ok();
    let reconstruction = reconstruction_summary(&fx)?;
    Ok(CmdOutput::new(
        &ReproduceOutput {
            reproduction,
            reconstruction,
        },
        pass,
    ))
}

// ---------------------------------------------------------------------------

/// `|det Mf|` survey. Odd determinants are asserted everywhere, and unit
/// determinants on path graphs; anything else is reported, not judged.
pub fn cmd_search_detmf(cfg: &RunConfig) -> Result<CmdOutput> {
    let range = cfg
        .n_range
        .clone()
        .ok_or_else(|| Error::parse(1, 1, "missing --n"))?;
    let mut dc = DetMfConfig::new(range);
    dc.paths_only = cfg.paths_only;
    dc.sample_budget = cfg.sample_budget;
    dc.seed = cfg.seed;
    dc.workers = cfg.workers;
    let t0 = Instant::now();
    let report = search_det_mf(&dc)?;
    let pass = report.all_odd
        && (!cfg.paths_only
            || report
                .per_n
                .iter()
                .all(|r| r.all_unit && r.all_petrie != Some(false)));
    let mut out = CmdOutput::new(&report, pass);
    out.notes
        .push(format!("search-detmf: finished in {:.2?}", t0.elapsed()));
    Ok(out)
}
