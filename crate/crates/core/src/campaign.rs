//! Seeded or exhaustive verification campaigns.
//!
//! A campaign streams weight vectors, expands each into powers `t`, runs
//! the selected checks, and collects one record per `(weights, t)` in
//! enumeration order. With timings off, the report is a pure function of
//! the config.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::{depth_oracle, Backend, OracleOptions, DEFAULT_MAX_BASIS, DEFAULT_MAX_DEGREES};
use crate::path::{depth_formula, path_ideal, DeltaProfile, WeightVector};
use crate::witness::{
    colon_by_g, colon_by_rho, colon_x2_identity, first_power_witness, g_monomial,
    leaf_colon_identity, LeafEdge,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Formula,
    Oracle,
    Witness,
    ColonCheck,
    Verify,
    Table,
}

impl Mode {
    pub fn default_checks(self) -> Vec<Check> {
        match self {
            Mode::Formula | Mode::Table => Vec::new(),
            Mode::Oracle => vec![Check::Oracle],
            Mode::Witness => vec![Check::Witness],
            Mode::ColonCheck => vec![Check::Colon],
            Mode::Verify => Check::ALL.to_vec(),
        }
    }
}

/// One family of checks run on every instance where it applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Oracle depth of `S/I^t` against the formula.
    Oracle,
    /// At `t = 1`: the witness colon and `depth(S/I) = k + 1`.
    FirstPower,
    /// Closed-form colons against brute force.
    Colon,
    /// `ρ_t ∉ I^t` and `depth(S/(I^t : ρ_t))` against the formula.
    Witness,
}

impl Check {
    pub const ALL: [Check; 4] = [
        Check::Oracle,
        Check::FirstPower,
        Check::Colon,
        Check::Witness,
    ];
}

impl std::str::FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Check::Oracle),
            "first-power" => Ok(Check::FirstPower),
            "colon" => Ok(Check::Colon),
            "witness" => Ok(Check::Witness),
            other => Err(Error::Precondition(format!("unknown check `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Sampling {
    /// Every nondecreasing vector within the bounds, ordered by `(n, w)`.
    Exhaustive,
    Random {
        samples: usize,
    },
    /// Exactly these vectors; the bounds are ignored.
    Given {
        weights: Vec<Vec<u32>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub mode: Mode,
    pub n_min: usize,
    pub n_max: usize,
    pub w_max: u32,
    /// Largest power; `None` means `|Δ| + t_slack` per weight vector.
    pub t_max: Option<u32>,
    pub t_slack: u32,
    pub sampling: Sampling,
    pub seed: u64,
    pub checks: Vec<Check>,
    /// Draw only weight vectors with at least one repeated adjacent weight.
    pub nonempty_delta: bool,
    pub max_degrees: usize,
    pub max_basis: usize,
    pub backend: Backend,
    /// Instances with more variables get formula-only records.
    pub oracle_var_cap: usize,
    pub timings: bool,
    /// Harness self-test: report `formula + 1` at `t = 1`.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub corrupt_formula: bool,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            mode: Mode::Verify,
            n_min: 1,
            n_max: 6,
            w_max: 3,
            t_max: None,
            t_slack: 2,
            sampling: Sampling::Random { samples: 100 },
            seed: 0,
            checks: Check::ALL.to_vec(),
            nonempty_delta: false,
            max_degrees: DEFAULT_MAX_DEGREES,
            max_basis: DEFAULT_MAX_BASIS,
            backend: Backend::Exact,
            oracle_var_cap: 9,
            timings: false,
            corrupt_formula: false,
        }
    }
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_min == 0 || self.n_min > self.n_max {
            return Err(Error::Precondition(format!(
                "need 1 <= n_min <= n_max, got {}..={}",
                self.n_min, self.n_max
            )));
        }
        if self.w_max == 0 {
            return Err(Error::Precondition("w_max must be positive".into()));
        }
        if self.t_max == Some(0) {
            return Err(Error::Precondition("t_max must be positive".into()));
        }
        if let Sampling::Given { weights } = &self.sampling {
            return weights
                .iter()
                .try_for_each(|w| WeightVector::new(w.clone()).map(drop));
        }
        if self.nonempty_delta && self.n_max < 3 {
            return Err(Error::Precondition("a nonempty Δ needs n_max >= 3".into()));
        }
        Ok(())
    }

    fn oracle_options(&self) -> OracleOptions {
        OracleOptions {
            backend: self.backend,
            max_degrees: self.max_degrees,
            max_basis: self.max_basis,
            // Instances already run in parallel.
            parallel: false,
        }
    }
}

fn nondecreasing(n: usize, w_max: u32) -> Vec<Vec<u32>> {
    fn extend(n: usize, w_max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in cur.last().copied().unwrap_or(1)..=w_max {
            cur.push(v);
            extend(n, w_max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, w_max, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Increment `k` with probability `2^-(k+1)`, truncated by the caller.
fn geometric(rng: &mut ChaCha8Rng) -> u32 {
    let mut k = 0;
    while k < 32 && rng.gen_bool(0.5) {
        k += 1;
    }
    k
}

fn sample_weights(rng: &mut ChaCha8Rng, cfg: &CampaignConfig) -> Vec<u32> {
    let n = rng.gen_range(cfg.n_min..=cfg.n_max);
    let mut w = Vec::with_capacity(n);
    let mut cur = (1 + geometric(rng)).min(cfg.w_max);
    w.push(cur);
    for _ in 1..n {
        cur = (cur + geometric(rng)).min(cfg.w_max);
        w.push(cur);
    }
    w
}

/// The weight vectors of a campaign, in report order.
pub fn weight_stream(cfg: &CampaignConfig) -> Result<Vec<WeightVector>> {
    cfg.validate()?;
    let keep = |w: &Vec<u32>| {
        !cfg.nonempty_delta
            || w.windows(2)
                .take(w.len().saturating_sub(2))
                .any(|p| p[0] == p[1])
    };
    let raw: Vec<Vec<u32>> = match &cfg.sampling {
        Sampling::Exhaustive => (cfg.n_min..=cfg.n_max)
            .flat_map(|n| nondecreasing(n, cfg.w_max))
            .filter(keep)
            .collect(),
        Sampling::Random { samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let mut out = Vec::with_capacity(*samples);
            while out.len() < *samples {
                let w = sample_weights(&mut rng, cfg);
                if keep(&w) {
                    out.push(w);
                }
            }
            out
        }
        Sampling::Given { weights } => weights.clone(),
    };
    raw.into_iter().map(WeightVector::new).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    /// A budget ran out; nothing was concluded.
    Skipped,
    /// Too large for the oracle; formula only.
    Unverified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub index: usize,
    pub weights: Vec<u32>,
    pub t: u32,
    pub seed: u64,
    pub formula: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<usize>,
    pub checks: BTreeMap<String, bool>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub weight_vectors: usize,
    pub instances: usize,
    pub matches: usize,
    pub mismatches: usize,
    pub skips: usize,
    pub unverified: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl CampaignReport {
    /// `0` when nothing mismatched, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.summary.passed {
            0
        } else {
            1
        }
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.status == Status::Mismatch)
    }

    /// Writes `records.jsonl`, `summary.csv` and `report.json` into `dir`.
    pub fn write_to(&self, dir: &Path) -> std::io::Result<()> {
        fs::create_dir_all(dir)?;
        let mut jsonl = std::io::BufWriter::new(fs::File::create(dir.join("records.jsonl"))?);
        for r in &self.records {
            serde_json::to_writer(&mut jsonl, r)?;
            jsonl.write_all(b"\n")?;
        }
        jsonl.flush()?;
        fs::write(dir.join("summary.csv"), self.summary_csv()?)?;
        fs::write(
            dir.join("report.json"),
            serde_json::to_string_pretty(self)? + "\n",
        )?;
        Ok(())
    }

    /// One row per instance.
    pub fn summary_csv(&self) -> std::io::Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "index",
            "weights",
            "t",
            "formula",
            "oracle",
            "status",
            "failed_checks",
            "reason",
        ])?;
        for r in &self.records {
            let weights: Vec<String> = r.weights.iter().map(ToString::to_string).collect();
            let failed: Vec<&str> = r
                .checks
                .iter()
                .filter(|(_, ok)| !**ok)
                .map(|(k, _)| k.as_str())
                .collect();
            let status = serde_json::to_value(r.status)?
                .as_str()
                .unwrap_or_default()
                .to_owned();
            w.write_record([
                r.index.to_string(),
                weights.join(","),
                r.t.to_string(),
                r.formula.to_string(),
                r.oracle.map(|d| d.to_string()).unwrap_or_default(),
                status,
                failed.join(" "),
                r.reason.clone().unwrap_or_default(),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

struct Instance {
    w: WeightVector,
    t: u32,
}

fn instances(cfg: &CampaignConfig) -> Result<(usize, Vec<Instance>)> {
    let weights = weight_stream(cfg)?;
    let count = weights.len();
    let mut out = Vec::new();
    for w in weights {
        let top = cfg
            .t_max
            .unwrap_or(DeltaProfile::of_weights(&w).delta.len() as u32 + cfg.t_slack);
        out.extend((1..=top).map(|t| Instance { w: w.clone(), t }));
    }
    Ok((count, out))
}

/// Result of one oracle call: a depth, or a skip reason.
fn oracle_depth(
    ideal: &crate::MonomialIdeal,
    opts: &OracleOptions,
) -> Result<std::result::Result<usize, String>> {
    match depth_oracle(ideal, opts) {
        Ok(r) => Ok(Ok(r.depth)),
        Err(e @ Error::BudgetExceeded { .. }) => Ok(Err(e.to_string())),
        Err(e) => Err(e),
    }
}

fn run_instance(cfg: &CampaignConfig, index: usize, inst: &Instance) -> Record {
    let start = Instant::now();
    let mut record = Record {
        index,
        weights: inst.w.as_slice().to_vec(),
        t: inst.t,
        seed: cfg.seed,
        formula: 0,
        oracle: None,
        checks: BTreeMap::new(),
        status: Status::Match,
        reason: None,
        elapsed_ms: None,
    };
    if let Err(e) = evaluate(cfg, inst, &mut record) {
        record.status = Status::Mismatch;
        record.reason = Some(format!("error: {e}"));
    }
    if record.status == Status::Match && record.checks.values().any(|ok| !ok) {
        record.status = Status::Mismatch;
    }
    if cfg.timings {
        record.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    record
}

fn evaluate(cfg: &CampaignConfig, inst: &Instance, rec: &mut Record) -> Result<()> {
    let (w, t) = (&inst.w, inst.t);
    let profile = DeltaProfile::of_weights(w);
    let witness_range = 2..=profile.delta.len() as u32 + 1;
    rec.formula = depth_formula(w, t)? + u32::from(cfg.corrupt_formula && t == 1);

    let opts = cfg.oracle_options();
    let oracle_allowed = w.n_vars() <= cfg.oracle_var_cap;
    let wants = |c: Check| cfg.checks.contains(&c);
    let skip = |rec: &mut Record, reason: String| {
        rec.status = Status::Skipped;
        rec.reason.get_or_insert(reason);
    };

    let needs_oracle =
        wants(Check::Oracle) || (wants(Check::FirstPower) && t == 1 && !profile.delta.is_empty());
    if needs_oracle {
        if oracle_allowed {
            match oracle_depth(&path_ideal(w).power(t)?, &opts)? {
                Ok(d) => rec.oracle = Some(d),
                Err(reason) => skip(rec, reason),
            }
        } else {
            rec.status = Status::Unverified;
            rec.reason = Some(format!(
                "{} variables exceed the oracle cap {}",
                w.n_vars(),
                cfg.oracle_var_cap
            ));
        }
    }
    if wants(Check::Oracle) {
        if let Some(d) = rec.oracle {
            rec.checks
                .insert("oracle_depth".into(), d == rec.formula as usize);
        }
    }

    if wants(Check::FirstPower) && t == 1 && !profile.delta.is_empty() {
        let (f, closed) = first_power_witness(w)?;
        rec.checks.insert(
            "first_power_colon".into(),
            path_ideal(w).colon(&f)? == closed,
        );
        if let Some(d) = rec.oracle {
            rec.checks
                .insert("first_power_depth".into(), d == profile.counts.k + 1);
        }
    }

    if wants(Check::Colon) {
        let power = path_ideal(w).power(t)?;
        if witness_range.contains(&t) {
            let g = g_monomial(w, t)?.g;
            rec.checks
                .insert("colon_by_g".into(), power.colon(&g)? == colon_by_g(w, t)?);
            let model = colon_by_rho(w, t)?;
            rec.checks.insert(
                "colon_by_rho".into(),
                power.colon(&model.witness.rho)? == model.predicted,
            );
        }
        let n = w.n();
        if n >= 2 && w.w(1) == w.w(2) {
            rec.checks
                .insert("colon_x2".into(), colon_x2_identity(w, t)?);
        }
        if t >= 2 {
            rec.checks.insert(
                "leaf_first".into(),
                leaf_colon_identity(w, t, LeafEdge::First)?,
            );
            if n == 1 || w.w(n - 1) == w.w(n) {
                rec.checks.insert(
                    "leaf_last".into(),
                    leaf_colon_identity(w, t, LeafEdge::Last)?,
                );
            }
        }
    }

    if wants(Check::Witness) && witness_range.contains(&t) {
        let model = colon_by_rho(w, t)?;
        let power = path_ideal(w).power(t)?;
        rec.checks.insert(
            "rho_outside_power".into(),
            !power.contains(&model.witness.rho)?,
        );
        if oracle_allowed {
            match oracle_depth(&power.colon(&model.witness.rho)?, &opts)? {
                Ok(d) => {
                    rec.checks
                        .insert("rho_colon_depth".into(), d == rec.formula as usize);
                }
                Err(reason) => skip(rec, reason),
            }
        }
    }
    Ok(())
}

/// Runs the campaign; instances are evaluated in parallel and reported in
/// enumeration order.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignReport> {
    let (weight_vectors, work) = instances(cfg)?;
    let records: Vec<Record> = work
        .par_iter()
        .enumerate()
        .map(|(i, inst)| run_instance(cfg, i, inst))
        .collect();
    let count = |s: Status| records.iter().filter(|r| r.status == s).count();
    let mismatches = count(Status::Mismatch);
    let summary = Summary {
        weight_vectors,
        instances: records.len(),
        matches: count(Status::Match),
        mismatches,
        skips: count(Status::Skipped),
        unverified: count(Status::Unverified),
        passed: mismatches == 0,
    };
    for r in records.iter().filter(|r| r.status == Status::Mismatch) {
        log::error!(
            "mismatch: weights {:?} t={} seed={} checks {:?}",
            r.weights,
            r.t,
            r.seed,
            r.checks
        );
    }
    Ok(CampaignReport {
        config: cfg.clone(),
        records,
        summary,
    })
}
