//! Exhaustive and sampled sweeps over `(tree, cycle, orientation)`.
//!
//! Work is split into `(tree, cycle)` units, mapped on a worker pool, and
//! folded in unit order, so the output does not depend on the worker count.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::dynamics::{all_cycles, oriented_matrix, VertexMap};
use crate::error::{Error, Result};
use crate::report::{ser_decimal, Claim};
use crate::sampling::{sample_indices, sampled_orientations};
use crate::theorems::{
    basis_witness, coprime_pairs, petrie_check, verify_instance, InstanceId, VerifyOptions,
};
use crate::tree::{canonical_form, enumerate_trees_capped, Orientation, Tree};

/// Default cap on `n` (edges); vertex count is `n + 1`.
pub const DEFAULT_N_CAP: usize = 9;

/// Cap on `n`, overridable through `ARBOR_CAP_N`.
pub fn n_cap() -> usize {
    std::env::var("ARBOR_CAP_N")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_N_CAP)
}

pub fn check_n_range(range: &RangeInclusive<usize>, cap: usize) -> Result<()> {
    if *range.start() < 2 {
        return Err(Error::TooFewVertices(range.start() + 1));
    }
    if *range.end() > cap {
        return Err(Error::CapExceeded {
            what: "n",
            value: *range.end(),
            cap,
        });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrientationMode {
    Canonical,
    All,
    /// Canonical plus this many seeded random ones.
    Sample(usize),
}

impl OrientationMode {
    pub fn label(&self) -> String {
        match self {
            OrientationMode::Canonical => "canonical".into(),
            OrientationMode::All => "all".into(),
            OrientationMode::Sample(k) => format!("sample:{k}"),
        }
    }

    fn orientations(&self, seed: u64, key: &str, n: usize) -> Vec<Orientation> {
        match *self {
            OrientationMode::Canonical => vec![Orientation::canonical(n)],
            OrientationMode::All => Orientation::all(n).collect(),
            OrientationMode::Sample(k) => sampled_orientations(seed, key, n, k),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub n_range: RangeInclusive<usize>,
    pub orientations: OrientationMode,
    pub seed: u64,
    pub workers: usize,
    pub options: VerifyOptions,
    pub cap: usize,
    /// Restrict to path graphs labeled along the line.
    pub paths_only: bool,
}

impl SweepConfig {
    pub fn new(n_range: RangeInclusive<usize>, orientations: OrientationMode) -> Self {
        SweepConfig {
            n_range,
            orientations,
            seed: 0,
            workers: 1,
            options: VerifyOptions::core(),
            cap: n_cap(),
            paths_only: false,
        }
    }
}

/// The trees a sweep visits for a given `n`.
pub fn sweep_trees(n: usize, paths_only: bool) -> Result<Vec<Arc<Tree>>> {
    if paths_only {
        return Ok(vec![Arc::new(Tree::path(n + 1)?)]);
    }
    Ok(enumerate_trees_capped(n + 1, n + 1)?
        .into_iter()
        .map(Arc::new)
        .collect())
}

pub(crate) fn run_pool<T: Send, F: Fn() -> T + Send>(workers: usize, job: F) -> T {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    pool.install(job)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub id: InstanceId,
    pub claim: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PerN {
    #[serde(serialize_with = "ser_decimal")]
    pub n: usize,
    #[serde(serialize_with = "ser_decimal")]
    pub trees: usize,
    #[serde(serialize_with = "ser_decimal")]
    pub cycles: usize,
    #[serde(serialize_with = "ser_decimal")]
    pub instances: u64,
    #[serde(serialize_with = "ser_decimal")]
    pub passed: u64,
    #[serde(serialize_with = "ser_decimal")]
    pub failed: u64,
    /// Failure count per claim (all claims listed).
    pub claim_failures: BTreeMap<String, String>,
    /// Instances where each claim was decided (not "not applicable").
    pub claim_decided: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifySummary {
    pub command: &'static str,
    #[serde(serialize_with = "ser_decimal")]
    pub n_min: usize,
    #[serde(serialize_with = "ser_decimal")]
    pub n_max: usize,
    pub orientations: String,
    #[serde(serialize_with = "ser_decimal")]
    pub seed: u64,
    pub paths_only: bool,
    pub per_n: Vec<PerN>,
    #[serde(serialize_with = "ser_decimal")]
    pub total_instances: u64,
    #[serde(serialize_with = "ser_decimal")]
    pub total_failed: u64,
    pub all_pass: bool,
    /// First failures, capped.
    pub failures: Vec<Failure>,
}

const MAX_REPORTED_FAILURES: usize = 50;

#[derive(Default)]
struct UnitTally {
    instances: u64,
    failed: u64,
    claim_failures: BTreeMap<&'static str, u64>,
    claim_decided: BTreeMap<&'static str, u64>,
    failures: Vec<Failure>,
}

fn run_unit(tree: &Arc<Tree>, image: &[usize], cfg: &SweepConfig, code: &str) -> Result<UnitTally> {
    let f = VertexMap::new(Arc::clone(tree), image.to_vec())?;
    let key = format!("{code}|{}", f.image_string());
    let mut tally = UnitTally::default();
    for o in cfg.orientations.orientations(cfg.seed, &key, tree.edge_count()) {
        let r = verify_instance(&f, &o, &cfg.options)?;
        tally.instances += 1;
        if !r.all_pass {
            tally.failed += 1;
        }
        for (name, c) in r.claims.iter() {
            *tally.claim_failures.entry(name).or_default() += c.is_fail() as u64;
            *tally.claim_decided.entry(name).or_default() += c.as_bool().is_some() as u64;
            if let Claim::Fail { detail } = c {
                if tally.failures.len() < MAX_REPORTED_FAILURES {
                    tally.failures.push(Failure {
                        id: r.id.clone(),
                        claim: name.to_string(),
                        detail: detail.clone(),
                    });
                }
            }
        }
    }
    Ok(tally)
}

/// Runs the claim checks over every instance in the configured range.
pub fn run_verify(cfg: &SweepConfig) -> Result<VerifySummary> {
    check_n_range(&cfg.n_range, cfg.cap)?;
    let mut per_n = Vec::new();
    let mut failures = Vec::new();
    for n in cfg.n_range.clone() {
        let trees = sweep_trees(n, cfg.paths_only)?;
        let cycles = all_cycles(n + 1);
        let codes: Vec<String> = trees.iter().map(|t| canonical_form(t)).collect();
        let units: Vec<(usize, usize)> = (0..trees.len())
            .flat_map(|t| (0..cycles.len()).map(move |c| (t, c)))
            .collect();
        let tallies: Vec<Result<UnitTally>> = run_pool(cfg.workers, || {
            units
                .par_iter()
                .map(|&(t, c)| run_unit(&trees[t], &cycles[c], cfg, &codes[t]))
                .collect()
        });
        let mut row = PerN {
            n,
            trees: trees.len(),
            cycles: cycles.len(),
            instances: 0,
            passed: 0,
            failed: 0,
            claim_failures: BTreeMap::new(),
            claim_decided: BTreeMap::new(),
        };
        let mut claim_failures: BTreeMap<&str, u64> = BTreeMap::new();
        let mut claim_decided: BTreeMap<&str, u64> = BTreeMap::new();
        for t in tallies {
            let t = t?;
            row.instances += t.instances;
            row.failed += t.failed;
            for (k, v) in t.claim_failures {
                *claim_failures.entry(k).or_default() += v;
            }
            for (k, v) in t.claim_decided {
                *claim_decided.entry(k).or_default() += v;
            }
            for f in t.failures {
                if failures.len() < MAX_REPORTED_FAILURES {
                    failures.push(f);
                }
            }
        }
        row.passed = row.instances - row.failed;
        row.claim_failures = claim_failures
            .into_iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        row.claim_decided = claim_decided
            .into_iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        per_n.push(row);
    }
    let total_instances = per_n.iter().map(|r| r.instances).sum();
    let total_failed: u64 = per_n.iter().map(|r| r.failed).sum();
    Ok(VerifySummary {
        command: "verify",
        n_min: *cfg.n_range.start(),
        n_max: *cfg.n_range.end(),
        orientations: cfg.orientations.label(),
        seed: cfg.seed,
        paths_only: cfg.paths_only,
        per_n,
        total_instances,
        total_failed,
        all_pass: total_failed == 0,
        failures,
    })
}

// ---------------------------------------------------------------------------
// |det Mf| survey

#[derive(Clone, Debug)]
pub struct DetMfConfig {
    pub n_range: RangeInclusive<usize>,
    pub paths_only: bool,
    /// Upper bound on `(tree, cycle)` instances per `n`; larger spaces are
    /// sampled with the seed.
    pub sample_budget: Option<usize>,
    pub seed: u64,
    pub workers: usize,
    pub cap: usize,
}

impl DetMfConfig {
    pub fn new(n_range: RangeInclusive<usize>) -> Self {
        DetMfConfig {
            n_range,
            paths_only: false,
            sample_budget: None,
            seed: 0,
            workers: 1,
            cap: n_cap(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct HistogramEntry {
    pub abs_det: String,
    pub count: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct NonUnitWitness {
    pub tree: String,
    pub edges: String,
    pub map: String,
    pub start: String,
    pub j: String,
    pub det_mf: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct DetMfPerN {
    pub n: String,
    pub instances: String,
    pub witnesses: String,
    pub sampled: bool,
    pub histogram: Vec<HistogramEntry>,
    pub all_odd: bool,
    pub all_unit: bool,
    /// Only meaningful for path graphs with same-direction edges.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub all_petrie: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct DetMfReport {
    pub command: String,
    pub n_min: String,
    pub n_max: String,
    pub paths_only: bool,
    pub seed: String,
    pub per_n: Vec<DetMfPerN>,
    pub all_odd: bool,
    pub all_unit: bool,
    /// First non-unit witnesses found, capped.
    pub non_unit: Vec<NonUnitWitness>,
}

const MAX_NON_UNIT: usize = 50;

struct DetMfUnit {
    dets: Vec<(usize, usize, u64)>,
    petrie: bool,
}

/// Tabulates `|det Mf|` over every instance and every coprime `(start, j)`,
/// canonical orientation (a change of orientation multiplies `Mf` on the
/// right by a ±1 diagonal matrix, so `|det Mf|` does not depend on it).
pub fn search_det_mf(cfg: &DetMfConfig) -> Result<DetMfReport> {
    check_n_range(&cfg.n_range, cfg.cap)?;
    let mut per_n = Vec::new();
    let mut non_unit = Vec::new();
    for n in cfg.n_range.clone() {
        let trees = sweep_trees(n, cfg.paths_only)?;
        let cycles = all_cycles(n + 1);
        let total = trees.len() * cycles.len();
        let (chosen, sampled) = match cfg.sample_budget {
            Some(b) if b < total => (
                sample_indices(cfg.seed, &format!("detmf n={n}"), total, b),
                true,
            ),
            _ => ((0..total).collect(), false),
        };
        let pairs = coprime_pairs(n);
        let o = Orientation::canonical(n);
        let units: Vec<Result<DetMfUnit>> = run_pool(cfg.workers, || {
            chosen
                .par_iter()
                .map(|&idx| {
                    let tree = &trees[idx / cycles.len()];
                    let f = VertexMap::new(Arc::clone(tree), cycles[idx % cycles.len()].clone())?;
                    let mut dets = Vec::with_capacity(pairs.len());
                    let mut petrie = true;
                    for &(start, j) in &pairs {
                        let w = basis_witness(&f, &o, start, j)?;
                        petrie &= petrie_check(&w.mf);
                        dets.push((start, j, w.abs_det()));
                    }
                    Ok(DetMfUnit { dets, petrie })
                })
                .collect()
        });
        let mut hist: BTreeMap<u64, u64> = BTreeMap::new();
        let mut all_petrie = true;
        let mut witnesses = 0u64;
        for (unit, &idx) in units.into_iter().zip(&chosen) {
            let unit = unit?;
            all_petrie &= unit.petrie;
            for (start, j, d) in unit.dets {
                witnesses += 1;
                *hist.entry(d).or_default() += 1;
                if d != 1 && non_unit.len() < MAX_NON_UNIT {
                    let tree = &trees[idx / cycles.len()];
                    let f = VertexMap::new(Arc::clone(tree), cycles[idx % cycles.len()].clone())?;
                    // confirm the sign too
                    let w = basis_witness(&f, &o, start, j)?;
                    non_unit.push(NonUnitWitness {
                        tree: canonical_form(tree),
                        edges: tree.edge_list_string(),
                        map: f.image_string(),
                        start: start.to_string(),
                        j: j.to_string(),
                        det_mf: w.det_mf.to_string(),
                    });
                }
            }
        }
        per_n.push(DetMfPerN {
            n: n.to_string(),
            instances: chosen.len().to_string(),
            witnesses: witnesses.to_string(),
            sampled,
            all_odd: hist.keys().all(|d| d % 2 == 1),
            all_unit: hist.keys().all(|&d| d == 1),
            histogram: hist
                .into_iter()
                .map(|(d, c)| HistogramEntry {
                    abs_det: d.to_string(),
                    count: c.to_string(),
                })
                .collect(),
            all_petrie: cfg.paths_only.then_some(all_petrie),
        });
    }
    Ok(DetMfReport {
        command: "search-detmf".into(),
        n_min: cfg.n_range.start().to_string(),
        n_max: cfg.n_range.end().to_string(),
        paths_only: cfg.paths_only,
        seed: cfg.seed.to_string(),
        all_odd: per_n.iter().all(|r| r.all_odd),
        all_unit: per_n.iter().all(|r| r.all_unit),
        per_n,
        non_unit,
    })
}

/// Convenience for tests and examples: every `(map, orientation)` instance
/// on one tree.
pub fn instances_on(tree: &Arc<Tree>, mode: OrientationMode, seed: u64) -> Vec<(VertexMap, Orientation)> {
    let n = tree.edge_count();
    let code = canonical_form(tree);
    all_cycles(n + 1)
        .into_iter()
        .flat_map(|img| {
            let f = VertexMap::new(Arc::clone(tree), img).expect("cycles are valid");
            let key = format!("{code}|{}", f.image_string());
            mode.orientations(seed, &key, n)
                .into_iter()
                .map(move |o| (f.clone(), o))
        })
        .collect()
}

/// Unused-orientation guard for callers that build matrices directly.
pub fn matrices_for(f: &VertexMap, o: &Orientation) -> Result<crate::dynamics::TransitionMatrices> {
    oriented_matrix(f, o)
}
