//! Randomized soundness harness: draws homogeneous ideals, analyzes each with
//! the exact oracle, and checks every bound and internal identity.
//!
//! Trial `i` draws from a ChaCha8 stream keyed by the master seed and `i`, so
//! results do not depend on scheduling and the summary is reproducible.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bounds::{analyze, AnalyzeOptions, BoundReport};
use crate::error::{Error, Result};
use crate::groebner::{Ideal, DEFAULT_MAX_RETRIES};
use crate::lpp::{weak_egh_experiment, WeakEghReport};
use crate::oracle::OracleBudget;
use crate::parse::write_ideal;
use crate::ring::{random_form_with, PolyRing, Polynomial};

/// Restriction on `dim S/I` of the sampled ideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimFilter {
    AtMost(usize),
    AtLeast(usize),
    Exactly(usize),
}

impl DimFilter {
    pub fn accepts(self, d: usize) -> bool {
        match self {
            DimFilter::AtMost(k) => d <= k,
            DimFilter::AtLeast(k) => d >= k,
            DimFilter::Exactly(k) => d == k,
        }
    }

    fn describe(self) -> String {
        match self {
            DimFilter::AtMost(k) => format!("<={k}"),
            DimFilter::AtLeast(k) => format!(">={k}"),
            DimFilter::Exactly(k) => format!("={k}"),
        }
    }
}

/// Additional report-only studies run on top of the soundness checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Experiment {
    /// Compare `reg(S/I)` with `reg(S/LPP(I; D))` on Artinian ideals.
    WeakEgh,
}

#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub trials: usize,
    pub seed: u64,
    pub prime: u32,
    pub n_min: usize,
    pub n_max: usize,
    pub degree_min: u32,
    pub degree_max: u32,
    pub gens_min: usize,
    /// `None` means `n + 1`.
    pub gens_max: Option<usize>,
    pub dim: Option<DimFilter>,
    pub budget: OracleBudget,
    /// Support size cap of each random generator; `None` draws dense forms.
    pub max_terms: Option<usize>,
    /// Redraws allowed per trial to satisfy the dimension filter.
    pub max_attempts: usize,
    pub experiment: Option<Experiment>,
    /// Where failing ideals are written, one file per trial.
    pub reproducer_dir: Option<PathBuf>,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            trials: 100,
            seed: 0,
            prime: PolyRing::DEFAULT_PRIME,
            n_min: 2,
            n_max: 3,
            degree_min: 1,
            degree_max: 3,
            gens_min: 1,
            gens_max: None,
            dim: None,
            budget: OracleBudget::default(),
            max_terms: Some(4),
            max_attempts: 200,
            experiment: None,
            reproducer_dir: None,
        }
    }
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        if self.n_min == 0 || self.n_min > self.n_max {
            return bad(format!("empty variable range {}..={}", self.n_min, self.n_max));
        }
        if self.degree_min == 0 || self.degree_min > self.degree_max {
            return bad(format!("empty degree range {}..={}", self.degree_min, self.degree_max));
        }
        if self.gens_min == 0 || self.gens_max.is_some_and(|g| g < self.gens_min) {
            return bad("empty generator-count range".into());
        }
        if self.max_terms == Some(0) {
            return bad("generators need at least one term".into());
        }
        if self.max_attempts == 0 {
            return bad("need at least one sampling attempt per trial".into());
        }
        if self.experiment == Some(Experiment::WeakEgh) && self.dim.is_some_and(|f| f != DimFilter::Exactly(0)) {
            return bad("the weak-egh experiment only runs on Artinian ideals (--dim 0)".into());
        }
        PolyRing::new(self.n_min, self.prime)?;
        Ok(())
    }

    fn effective_dim(&self) -> Option<DimFilter> {
        match self.experiment {
            Some(Experiment::WeakEgh) => Some(DimFilter::Exactly(0)),
            None => self.dim,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrialStatus {
    Passed,
    Failed,
    /// The exact oracle exceeded its budget.
    SkippedBudget,
    /// No draw satisfied the dimension filter.
    SkippedFilter,
    /// No filter-regular system of parameters was found.
    SkippedGenericity,
}

impl TrialStatus {
    fn as_str(&self) -> &'static str {
        match self {
            TrialStatus::Passed => "passed",
            TrialStatus::Failed => "failed",
            TrialStatus::SkippedBudget => "skipped_budget",
            TrialStatus::SkippedFilter => "skipped_filter",
            TrialStatus::SkippedGenericity => "skipped_genericity",
        }
    }
}

/// Outcome of one trial.
#[derive(Clone, Debug)]
pub struct TrialRecord {
    pub index: usize,
    pub status: TrialStatus,
    pub nvars: usize,
    pub degree: Option<u32>,
    pub d: Option<usize>,
    pub reg: Option<u32>,
    /// Names of the checks evaluated, with whether each held.
    pub checks: Vec<(String, bool)>,
    pub failures: Vec<String>,
    pub ideal: Option<String>,
    pub weak_egh: Option<WeakEghReport>,
    pub report: Option<BoundReport>,
}

#[derive(Clone, Debug)]
pub struct FuzzSummary {
    pub config: FuzzConfig,
    pub records: Vec<TrialRecord>,
    pub reproducers: Vec<PathBuf>,
}

impl FuzzSummary {
    fn count(&self, status: TrialStatus) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn passed(&self) -> usize {
        self.count(TrialStatus::Passed)
    }

    pub fn failed(&self) -> usize {
        self.count(TrialStatus::Failed)
    }

    pub fn skipped(&self) -> usize {
        self.records.len() - self.passed() - self.failed()
    }

    /// `(evaluated, held)` per check name, over all trials.
    pub fn check_tallies(&self) -> BTreeMap<String, (usize, usize)> {
        let mut tally: BTreeMap<String, (usize, usize)> = BTreeMap::new();
        for record in &self.records {
            for (name, held) in &record.checks {
                let entry = tally.entry(name.clone()).or_default();
                entry.0 += 1;
                entry.1 += usize::from(*held);
            }
        }
        tally
    }

    /// Deterministic JSON summary: no timings, trials in index order.
    pub fn to_json(&self) -> Value {
        let c = &self.config;
        let s = |x: &dyn ToString| Value::String(x.to_string());
        let mut by_dim: BTreeMap<usize, usize> = BTreeMap::new();
        for r in &self.records {
            if let Some(d) = r.d {
                *by_dim.entry(d).or_default() += 1;
            }
        }
        let checks: serde_json::Map<String, Value> = self
            .check_tallies()
            .into_iter()
            .map(|(name, (evaluated, held))| (name, json!({ "evaluated": s(&evaluated), "held": s(&held) })))
            .collect();
        let trials: Vec<Value> = self
            .records
            .iter()
            .map(|r| {
                let mut v = json!({
                    "trial": s(&r.index),
                    "status": r.status.as_str(),
                    "n": s(&r.nvars),
                    "D": r.degree.map_or(Value::Null, |x| s(&x)),
                    "d": r.d.map_or(Value::Null, |x| s(&x)),
                    "reg_quotient": r.reg.map_or(Value::Null, |x| s(&x)),
                });
                if !r.failures.is_empty() {
                    v["failures"] = json!(r.failures);
                    v["ideal"] = json!(r.ideal);
                }
                if let Some(w) = &r.weak_egh {
                    v["weak_egh"] = json!({
                        "c": s(&w.c),
                        "reg_ideal": s(&w.reg_ideal),
                        "reg_lpp": s(&w.reg_lpp),
                        "closed_form": w.closed_form_used,
                        "holds": w.holds,
                    });
                }
                v
            })
            .collect();
        let mut out = json!({
            "config": {
                "trials": s(&c.trials),
                "seed": s(&c.seed),
                "p": s(&c.prime),
                "n": format!("{}..={}", c.n_min, c.n_max),
                "D": format!("{}..={}", c.degree_min, c.degree_max),
                "generators": format!("{}..={}", c.gens_min, c.gens_max.map_or("n+1".to_string(), |g| g.to_string())),
                "dim": c.effective_dim().map_or(Value::Null, |f| Value::String(f.describe())),
                "max_terms": c.max_terms.map_or(Value::Null, |t| s(&t)),
                "max_strand_dim": s(&c.budget.max_strand_dim),
            },
            "passed": s(&self.passed()),
            "failed": s(&self.failed()),
            "skipped": {
                "budget": s(&self.count(TrialStatus::SkippedBudget)),
                "filter": s(&self.count(TrialStatus::SkippedFilter)),
                "genericity": s(&self.count(TrialStatus::SkippedGenericity)),
            },
            "by_dimension": by_dim.iter().map(|(d, k)| (d.to_string(), s(k))).collect::<serde_json::Map<_, _>>(),
            "checks": checks,
            "reproducers": self.reproducers.iter().map(|p| p.display().to_string()).collect::<Vec<_>>(),
            "trials": trials,
        });
        if self.config.experiment == Some(Experiment::WeakEgh) {
            let runs: Vec<&WeakEghReport> = self.records.iter().filter_map(|r| r.weak_egh.as_ref()).collect();
            out["weak_egh"] = json!({
                "compared": s(&runs.len()),
                "holds": s(&runs.iter().filter(|w| w.holds).count()),
                "violations": s(&runs.iter().filter(|w| !w.holds).count()),
            });
        }
        out
    }
}

/// Draws one ideal. Zero draws are rejected and redrawn.
fn draw_ideal(config: &FuzzConfig, rng: &mut ChaCha8Rng) -> Ideal {
    let n = rng.gen_range(config.n_min..=config.n_max);
    let ring = PolyRing::new(n, config.prime).expect("validated prime");
    let gens_max = config.gens_max.unwrap_or(n + 1).max(config.gens_min);
    loop {
        let count = rng.gen_range(config.gens_min..=gens_max);
        let gens: Vec<Polynomial> = (0..count)
            .map(|_| {
                let degree = rng.gen_range(config.degree_min..=config.degree_max);
                random_form_with(ring, degree, config.max_terms, rng)
            })
            .collect();
        let ideal = Ideal::new(ring, gens).expect("random forms are homogeneous");
        if !ideal.is_zero() && !ideal.is_unit() {
            return ideal;
        }
    }
}

fn run_trial(config: &FuzzConfig, index: usize) -> TrialRecord {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index as u64);
    let filter = config.effective_dim();
    let mut accepted = None;
    let mut last_n = config.n_min;
    for _ in 0..config.max_attempts {
        let ideal = draw_ideal(config, &mut rng);
        last_n = ideal.ring().nvars();
        let d = ideal.dim_and_height().expect("proper ideal").0;
        if filter.is_none_or(|f| f.accepts(d)) {
            accepted = Some(ideal);
            break;
        }
    }
    let mut record = TrialRecord {
        index,
        status: TrialStatus::SkippedFilter,
        nvars: last_n,
        degree: None,
        d: None,
        reg: None,
        checks: Vec::new(),
        failures: Vec::new(),
        ideal: None,
        weak_egh: None,
        report: None,
    };
    let Some(ideal) = accepted else {
        return record;
    };
    record.degree = Some(ideal.max_generator_degree());
    record.d = ideal.dim_and_height().ok().map(|(d, _)| d);
    let lsop_seed: u64 = rng.gen();
    match check_ideal(&ideal, lsop_seed, config, &mut record) {
        Ok(()) => {
            record.status = if record.failures.is_empty() {
                TrialStatus::Passed
            } else {
                TrialStatus::Failed
            };
        }
        Err(Error::BudgetExceeded { .. }) => record.status = TrialStatus::SkippedBudget,
        Err(Error::GenericityFailure { .. }) => record.status = TrialStatus::SkippedGenericity,
        Err(other) => {
            record.failures.push(other.to_string());
            record.status = TrialStatus::Failed;
        }
    }
    if record.status == TrialStatus::Failed {
        record.ideal = Some(write_ideal(ideal.ring(), ideal.generators()));
    }
    record
}

/// Every per-instance soundness check; failures are appended to `record`.
fn check_ideal(ideal: &Ideal, lsop_seed: u64, config: &FuzzConfig, record: &mut TrialRecord) -> Result<()> {
    let options = AnalyzeOptions {
        seed: lsop_seed,
        exact: true,
        betti: false,
        budget: config.budget,
        max_retries: DEFAULT_MAX_RETRIES,
    };
    let report = analyze(ideal, &options)?;
    let d = report.invariants.d;
    record.reg = report.exact.as_ref().map(|e| e.reg_quotient);
    let check = |record: &mut TrialRecord, name: &str, held: bool| {
        record.checks.push((name.to_string(), held));
        if !held {
            record.failures.push(format!("{name} fails"));
        }
    };
    for v in &report.verdicts {
        if v.conditional {
            record.checks.push((v.name.to_string(), v.holds));
        } else {
            check(record, v.name, v.holds);
        }
    }
    let checks = &report.checks;
    check(record, "artinian_length_bound", checks.artinian_length_bound);
    check(record, "multiplicity_le_length", checks.multiplicity_le_length);
    for (name, value) in [
        ("green_c", checks.green_c),
        ("green_cprime", checks.green_cprime),
        ("green_cprime_from_c", checks.green_cprime_from_c),
        ("euler_identity", checks.euler_identity),
    ] {
        if let Some(held) = value {
            check(record, name, held);
        }
    }
    if d >= 1 {
        // analyze already compared both sides of the length identity
        let ld = report.invariants.length;
        check(record, "length_identity", ld.saturated_side == ld.defect);
    }
    let lsop = ideal.filter_regular_lsop(lsop_seed, DEFAULT_MAX_RETRIES)?;
    for i in 0..d {
        let partial = ideal.sum_with(&lsop[..i])?;
        let by_maximal = partial.saturate_maximal()?;
        let by_form = partial.saturate(&lsop[i])?;
        check(record, "saturation_identity", by_maximal.same_as(&by_form));
    }
    if config.experiment == Some(Experiment::WeakEgh) && d == 0 {
        let w = weak_egh_experiment(ideal, &config.budget)?;
        record.checks.push(("weak_egh".to_string(), w.holds));
        record.weak_egh = Some(w);
    }
    record.report = Some(report);
    Ok(())
}

fn write_reproducer(dir: &Path, record: &TrialRecord) -> std::io::Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join(format!("trial-{:05}.ideal", record.index));
    let mut text = String::new();
    for failure in &record.failures {
        text.push_str(&format!("# {failure}\n"));
    }
    text.push_str(record.ideal.as_deref().unwrap_or_default());
    std::fs::write(&path, text)?;
    Ok(path)
}

/// Runs all trials in parallel and aggregates them in index order.
pub fn run_fuzz(config: &FuzzConfig) -> Result<FuzzSummary> {
    config.validate()?;
    let records: Vec<TrialRecord> = (0..config.trials)
        .into_par_iter()
        .map(|i| run_trial(config, i))
        .collect();
    let mut reproducers = Vec::new();
    if let Some(dir) = &config.reproducer_dir {
        for record in records.iter().filter(|r| r.status == TrialStatus::Failed) {
            let path = write_reproducer(dir, record)
                .map_err(|e| Error::InvalidArgument(format!("cannot write reproducer in {}: {e}", dir.display())))?;
            reproducers.push(path);
        }
    }
    Ok(FuzzSummary {
        config: config.clone(),
        records,
        reproducers,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;

    fn small(trials: usize, seed: u64) -> FuzzConfig {
        FuzzConfig {
            trials,
            seed,
            n_max: 3,
            degree_max: 2,
            ..FuzzConfig::default()
        }
    }

    #[test]
    fn empty_run() {
        let summary = run_fuzz(&small(0, 1)).unwrap();
        assert_eq!(summary.records.len(), 0);
        assert_eq!(summary.to_json()["passed"], "0");
    }

    #[test]
    fn small_run_passes_and_is_deterministic() {
        let a = run_fuzz(&small(12, 3)).unwrap();
        assert_eq!(a.failed(), 0, "{}", a.to_json());
        assert!(a.passed() > 0);
        let b = run_fuzz(&small(12, 3)).unwrap();
        assert_eq!(a.to_json().to_string(), b.to_json().to_string());
    }

    #[test]
    fn dimension_filter_is_respected() {
        let config = FuzzConfig {
            dim: Some(DimFilter::AtLeast(2)),
            n_max: 4,
            ..small(6, 9)
        };
        let summary = run_fuzz(&config).unwrap();
        for r in &summary.records {
            if r.status != TrialStatus::SkippedFilter {
                assert!(r.d.unwrap() >= 2);
            }
        }
    }

    #[test]
    fn invalid_configs() {
        let bad_n = FuzzConfig { n_min: 4, n_max: 3, ..FuzzConfig::default() };
        assert!(bad_n.validate().is_err());
        let bad_d = FuzzConfig { degree_max: 0, ..FuzzConfig::default() };
        assert!(bad_d.validate().is_err());
        let bad_exp = FuzzConfig {
            experiment: Some(Experiment::WeakEgh),
            dim: Some(DimFilter::AtLeast(1)),
            ..FuzzConfig::default()
        };
        assert!(bad_exp.validate().is_err());
    }

    #[test]
    fn weak_egh_mode_reports() {
        let config = FuzzConfig {
            experiment: Some(Experiment::WeakEgh),
            ..small(4, 5)
        };
        let summary = run_fuzz(&config).unwrap();
        let json = summary.to_json();
        assert!(json.get("weak_egh").is_some());
        for r in summary.records.iter().filter(|r| r.status == TrialStatus::Passed) {
            assert_eq!(r.d, Some(0));
            assert!(r.weak_egh.is_some());
        }
    }

    #[test]
    fn reproducers_round_trip() {
        let dir = std::env::temp_dir().join(format!("regbound-repro-{}", std::process::id()));
        let r = PolyRing::with_default_prime(2).unwrap();
        let gens = vec![&(&r.var(0) * &r.var(1)) - &(&r.var(1) * &r.var(1)).scale(5)];
        let record = TrialRecord {
            index: 7,
            status: TrialStatus::Failed,
            nvars: 2,
            degree: Some(2),
            d: Some(1),
            reg: None,
            checks: Vec::new(),
            failures: vec!["example".into()],
            ideal: Some(write_ideal(r, &gens)),
            weak_egh: None,
            report: None,
        };
        let path = write_reproducer(&dir, &record).unwrap();
        let (ring, parsed) = parse_ideal(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(ring, r);
        assert_eq!(parsed, gens);
        std::fs::remove_dir_all(dir).ok();
    }
}
