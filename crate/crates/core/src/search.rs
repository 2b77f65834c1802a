//! Exhaustive verification campaigns over canonical words.
//!
//! Every campaign splits the word space of each length by its first
//! `ceil(log2(workers))` symbols and scans the subtrees on a dedicated rayon
//! pool. Partial results are merged in task order and then sorted, so a
//! report depends only on the configuration, never on scheduling or on the
//! worker count. Wall time is kept out of the serialized report for the same
//! reason.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::check::CheckResult;
use crate::critical::{self, CftOutcome};
use crate::duval;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::naive;
use crate::periodicity::{self, mu_of, period_of, unbordered};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    MainTheorem,
    Corollary,
    Cft,
    Lemmas,
    ExtremalRatio,
}

impl Target {
    pub const ALL: [Target; 5] = [
        Target::MainTheorem,
        Target::Corollary,
        Target::Cft,
        Target::Lemmas,
        Target::ExtremalRatio,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::MainTheorem => "main-theorem",
            Target::Corollary => "corollary",
            Target::Cft => "cft",
            Target::Lemmas => "lemmas",
            Target::ExtremalRatio => "extremal-ratio",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::precondition(format!("unknown target {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CampaignConfig {
    pub alphabet: u8,
    pub max_len: usize,
    pub target: Target,
    pub workers: usize,
    pub canonical_only: bool,
}

impl CampaignConfig {
    pub fn new(target: Target, alphabet: u8, max_len: usize) -> Self {
        CampaignConfig {
            alphabet,
            max_len,
            target,
            workers: 1,
            canonical_only: true,
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_canonical_only(mut self, canonical_only: bool) -> Self {
        self.canonical_only = canonical_only;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.alphabet == 0 || self.alphabet > crate::word::MAX_ALPHABET {
            return Err(Error::precondition("alphabet size must be in 1..=26"));
        }
        if self.max_len == 0 {
            return Err(Error::precondition("max_len must be at least 1"));
        }
        if self.workers == 0 {
            return Err(Error::precondition("worker count must be at least 1"));
        }
        Ok(())
    }
}

/// A counterexample, already re-checked against the brute-force oracles.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub property: String,
    pub word: Word,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extension: Option<Word>,
    pub detail: String,
    /// False when the brute-force oracle disagrees with the fast routine,
    /// which points at a bug rather than a counterexample.
    pub confirmed: bool,
}

/// A nontrivial extension with `|u| = |w| - 2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TightCase {
    pub w: Word,
    pub u: Word,
}

/// The longest words with `∂ ≠ μ` found for one value of `μ`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalRecord {
    pub mu: usize,
    pub length: usize,
    /// Period of `witness`.
    pub period: usize,
    pub ratio: f64,
    /// Least canonical word attaining `length`.
    pub witness: Word,
    pub count: u64,
    /// `Some(n)` when the record matches the `n`-th Assous-Pouzet word.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assous_pouzet: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignReport {
    pub target: Target,
    pub alphabet: u8,
    pub max_len: usize,
    pub canonical_only: bool,
    pub words_scanned: u64,
    pub verified: bool,
    /// Words where the property holds only vacuously.
    pub vacuous: u64,
    pub violations: Vec<Violation>,
    pub tight_cases: Vec<TightCase>,
    pub extremal_records: Vec<ExtremalRecord>,
    pub checks: Vec<CheckResult>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl CampaignReport {
    fn new(cfg: &CampaignConfig) -> Self {
        CampaignReport {
            target: cfg.target,
            alphabet: cfg.alphabet,
            max_len: cfg.max_len,
            canonical_only: cfg.canonical_only,
            words_scanned: 0,
            verified: true,
            vacuous: 0,
            violations: Vec::new(),
            tight_cases: Vec::new(),
            extremal_records: Vec::new(),
            checks: Vec::new(),
            wall_time: Duration::ZERO,
        }
    }

    fn finish(mut self, started: Instant) -> Self {
        self.violations.sort();
        self.violations.dedup();
        self.tight_cases.sort();
        self.tight_cases.dedup();
        for c in &mut self.checks {
            c.normalize();
        }
        self.verified = self.violations.is_empty() && self.checks.iter().all(|c| !matches!(c.status, crate::check::CheckStatus::Fail));
        self.wall_time = started.elapsed();
        self
    }
}

/// Results of one subtree, merged left to right.
trait Partial: Default + Send {
    fn merge(&mut self, other: Self);
}

fn partition_depth(workers: usize) -> usize {
    workers.next_power_of_two().trailing_zeros() as usize
}

fn scan<A, F>(cfg: &CampaignConfig, min_len: usize, visit: F) -> Result<A>
where
    A: Partial,
    F: Fn(&Word, &mut A) + Sync,
{
    let depth = partition_depth(cfg.workers);
    let tasks: Vec<(usize, Vec<u8>)> = (min_len..=cfg.max_len)
        .flat_map(|len| {
            enumerate::prefixes(cfg.alphabet, depth.min(len), cfg.canonical_only)
                .into_iter()
                .map(move |p| (len, p))
        })
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::Runtime(e.to_string()))?;
    let parts: Vec<A> = pool.install(|| {
        tasks
            .par_iter()
            .map(|(len, prefix)| {
                let mut acc = A::default();
                enumerate::for_each_word(cfg.alphabet, *len, cfg.canonical_only, prefix, |w| {
                    visit(w, &mut acc)
                });
                acc
            })
            .collect()
    });
    Ok(parts.into_iter().fold(A::default(), |mut acc, p| {
        acc.merge(p);
        acc
    }))
}

fn require_target(cfg: &CampaignConfig, target: Target) -> Result<()> {
    cfg.validate()?;
    if cfg.target != target {
        return Err(Error::precondition(format!(
            "configuration targets {}, not {target}",
            cfg.target
        )));
    }
    Ok(())
}

/// Fast primitives and brute-force oracles agree on `s`.
fn primitives_agree(s: &[u8]) -> bool {
    if s.is_empty() {
        return true;
    }
    period_of(s) == naive::period(s)
        && mu_of(s).0 == naive::mu(s)
        && unbordered(s) == naive::unbordered(s)
        && (1..s.len()).all(|p| critical::local_period_of(s, p) == naive::local_period(s, p))
}

#[derive(Default)]
struct CheckPartial {
    scanned: u64,
    vacuous: u64,
    checks: Vec<CheckResult>,
    violations: Vec<Violation>,
    tight: Vec<TightCase>,
}

impl CheckPartial {
    fn check(&mut self, result: CheckResult) {
        match self.checks.iter_mut().find(|c| c.lemma == result.lemma) {
            Some(existing) => existing.merge(result),
            None => self.checks.push(result),
        }
    }
}

impl Partial for CheckPartial {
    fn merge(&mut self, other: Self) {
        self.scanned += other.scanned;
        self.vacuous += other.vacuous;
        for c in other.checks {
            self.check(c);
        }
        self.violations.extend(other.violations);
        self.tight.extend(other.tight);
    }
}

fn into_report(cfg: &CampaignConfig, started: Instant, part: CheckPartial, check_order: &[&str]) -> CampaignReport {
    let mut report = CampaignReport::new(cfg);
    report.words_scanned = part.scanned;
    report.vacuous = part.vacuous;
    report.violations = part.violations;
    report.tight_cases = part.tight;
    let mut checks = part.checks;
    for id in check_order {
        if !checks.iter().any(|c| c.lemma == *id) {
            checks.push(CheckResult::new(*id));
        }
    }
    checks.sort_by_key(|c| check_order.iter().position(|id| *id == c.lemma).unwrap_or(usize::MAX));
    report.checks = checks;
    report.finish(started)
}

/// No nontrivial Duval extension has `|u| >= |w| - 1`; tight cases
/// `|u| = |w| - 2` are collected.
pub fn verify_main_theorem(cfg: &CampaignConfig) -> Result<CampaignReport> {
    require_target(cfg, Target::MainTheorem)?;
    let started = Instant::now();
    let part: CheckPartial = scan(cfg, 1, |w, acc: &mut CheckPartial| {
        acc.scanned += 1;
        let s = w.symbols();
        if !unbordered(s) {
            return;
        }
        let n = s.len();
        let mut check = CheckResult::new("main-theorem");
        duval::visit_extensions(s, duval::extension_horizon(w), &mut |wu| {
            if period_of(wu) == n {
                return;
            }
            let ulen = wu.len() - n;
            let u = Word::from_parts(wu[n..].to_vec(), w.alphabet());
            check.record(ulen + 1 < n, || format!("w={w} u={u}"));
            if ulen + 1 >= n {
                let confirmed = naive::is_duval_extension(s, &wu[n..]) && naive::period(wu) != n;
                acc.violations.push(Violation {
                    property: "main-theorem".into(),
                    word: w.clone(),
                    extension: Some(u.clone()),
                    detail: format!("nontrivial extension with |u| = {ulen} >= |w| - 1 = {}", n - 1),
                    confirmed,
                });
            } else if ulen + 2 == n {
                acc.tight.push(TightCase { w: w.clone(), u });
            }
        });
        acc.check(check);
    })?;
    Ok(into_report(cfg, started, part, &["main-theorem"]))
}

/// `|w| >= 3μ(w) - 2` implies `∂(w) = μ(w)`.
pub fn verify_corollary(cfg: &CampaignConfig) -> Result<CampaignReport> {
    require_target(cfg, Target::Corollary)?;
    let started = Instant::now();
    let part: CheckPartial = scan(cfg, 1, |w, acc: &mut CheckPartial| {
        acc.scanned += 1;
        let s = w.symbols();
        let (mu, _) = mu_of(s);
        let mut check = CheckResult::new("corollary1");
        if s.len() + 2 >= 3 * mu {
            let period = period_of(s);
            check.record(period == mu, || format!("w={w}"));
            if period != mu {
                acc.violations.push(Violation {
                    property: "corollary1".into(),
                    word: w.clone(),
                    extension: None,
                    detail: format!("|w| = {} >= 3*{mu} - 2 but period {period} != mu {mu}", s.len()),
                    confirmed: naive::mu(s) == mu && naive::period(s) == period,
                });
            }
        }
        acc.check(check);
    })?;
    Ok(into_report(cfg, started, part, &["corollary1"]))
}

/// Every word of length at least 2 with `∂ >= 2` has a critical point below
/// its period. Period-1 words are counted as vacuous.
pub fn verify_cft(cfg: &CampaignConfig) -> Result<CampaignReport> {
    require_target(cfg, Target::Cft)?;
    let started = Instant::now();
    let part: CheckPartial = scan(cfg, 2, |w, acc: &mut CheckPartial| {
        acc.scanned += 1;
        let mut check = CheckResult::new("cft");
        match critical::cft_outcome(w) {
            CftOutcome::Vacuous => acc.vacuous += 1,
            CftOutcome::Holds(_) => check.record(true, String::new),
            CftOutcome::Violated => {
                check.record(false, || format!("w={w}"));
                let s = w.symbols();
                let period = naive::period(s);
                let confirmed = (1..period.min(s.len())).all(|p| naive::local_period(s, p) != period);
                acc.violations.push(Violation {
                    property: "cft".into(),
                    word: w.clone(),
                    extension: None,
                    detail: format!("no critical point below period {period}"),
                    confirmed,
                });
            }
            CftOutcome::OutOfScope => {}
        }
        acc.check(check);
    })?;
    Ok(into_report(cfg, started, part, &["cft"]))
}

/// Longest `x` tried in the Lemma 4 sweep.
pub const LEMMA4_MAX_X: usize = 4;

const LEMMA_ORDER: [&str; 12] = [
    "lemma1",
    "corollary-lemma1",
    "lemma3",
    "lemma4",
    "lemma5",
    "lemma6",
    "theorem1",
    "minimal-structure",
    "lemma7-context",
    "lemma2-context",
    "lemma2-odd-form-context",
    "proof-context",
];

/// Property sweeps for the preliminary lemmas over every canonical word of
/// length `1..=max_len`.
pub fn run_lemma_sweeps(cfg: &CampaignConfig) -> Result<CampaignReport> {
    require_target(cfg, Target::Lemmas)?;
    let started = Instant::now();
    let alphabet = cfg.alphabet;
    let max_len = cfg.max_len;
    let part: CheckPartial = scan(cfg, 1, |w, acc: &mut CheckPartial| {
        acc.scanned += 1;
        let mut results = vec![
            duval::lemma1_instances(w),
            duval::corollary_instances(w, max_len),
            duval::lemma3_instances(w, alphabet),
            critical::lemma4_instances(w, alphabet, LEMMA4_MAX_X),
            periodicity::lemma5_instances(w),
            critical::lemma6_instances(w),
            duval::theorem1_instances(w),
            duval::minimality_form_instances(w),
        ];
        results.extend(duval::context_instances(w));
        for r in results {
            if r.violation_count > 0 {
                acc.violations.push(Violation {
                    property: r.lemma.clone(),
                    word: w.clone(),
                    extension: None,
                    detail: r.violations.join("; "),
                    confirmed: primitives_agree(w.symbols()),
                });
            }
            acc.check(r);
        }
    })?;
    Ok(into_report(cfg, started, part, &LEMMA_ORDER))
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Best {
    length: usize,
    period: usize,
    witness: Word,
    count: u64,
}

#[derive(Default)]
struct ExtremalPartial {
    scanned: u64,
    best: BTreeMap<usize, Best>,
}

impl ExtremalPartial {
    fn offer(&mut self, mu: usize, cand: Best) {
        match self.best.get_mut(&mu) {
            None => {
                self.best.insert(mu, cand);
            }
            Some(cur) => match cand.length.cmp(&cur.length) {
                Ordering::Greater => *cur = cand,
                Ordering::Equal => {
                    cur.count += cand.count;
                    if cand.witness < cur.witness {
                        cur.witness = cand.witness;
                        cur.period = cand.period;
                    }
                }
                Ordering::Less => {}
            },
        }
    }
}

impl Partial for ExtremalPartial {
    fn merge(&mut self, other: Self) {
        self.scanned += other.scanned;
        for (mu, b) in other.best {
            self.offer(mu, b);
        }
    }
}

/// For each `μ`, the longest words with `∂ ≠ μ`, sorted by descending
/// `|w|/μ`. Assous-Pouzet words that fit in the range are checked against
/// their closed-form metrics and tagged on the matching record.
pub fn extremal_ratio_scan(cfg: &CampaignConfig) -> Result<CampaignReport> {
    require_target(cfg, Target::ExtremalRatio)?;
    let started = Instant::now();
    let part: ExtremalPartial = scan(cfg, 1, |w, acc: &mut ExtremalPartial| {
        acc.scanned += 1;
        let s = w.symbols();
        let (mu, _) = mu_of(s);
        let period = period_of(s);
        if period != mu {
            acc.offer(
                mu,
                Best {
                    length: s.len(),
                    period,
                    witness: w.clone(),
                    count: 1,
                },
            );
        }
    })?;

    let mut report = CampaignReport::new(cfg);
    report.words_scanned = part.scanned;
    let mut bound = CheckResult::new("corollary1-bound");
    let mut family = CheckResult::new("assous-pouzet");
    let mut records: Vec<ExtremalRecord> = part
        .best
        .into_iter()
        .map(|(mu, b)| {
            bound.record(b.length + 2 < 3 * mu, || format!("w={} mu={mu}", b.witness));
            if b.length + 2 >= 3 * mu {
                report.violations.push(Violation {
                    property: "corollary1".into(),
                    word: b.witness.clone(),
                    extension: None,
                    detail: format!("|w| = {} >= 3*{mu} - 2 with period {} != mu", b.length, b.period),
                    confirmed: naive::mu(b.witness.symbols()) == mu && naive::period(b.witness.symbols()) != mu,
                });
            }
            ExtremalRecord {
                mu,
                length: b.length,
                period: b.period,
                ratio: b.length as f64 / mu as f64,
                witness: b.witness,
                count: b.count,
                assous_pouzet: None,
            }
        })
        .collect();

    if cfg.alphabet >= 2 {
        for n in (1..).take_while(|n| 7 * n + 10 <= cfg.max_len) {
            let w = duval::family_assous_pouzet(n)?;
            let s = w.symbols();
            let (len, mu, period) = (s.len(), mu_of(s).0, period_of(s));
            let ok = len == 7 * n + 10 && mu == 3 * n + 6 && period == 4 * n + 7;
            family.record(ok, || format!("n={n} w={w} |w|={len} mu={mu} period={period}"));
            if !ok {
                report.violations.push(Violation {
                    property: "assous-pouzet".into(),
                    word: w.clone(),
                    extension: None,
                    detail: format!("|w|={len} mu={mu} period={period}"),
                    confirmed: naive::mu(s) == mu && naive::period(s) == period,
                });
            } else if let Some(r) = records.iter_mut().find(|r| r.mu == mu && r.length == len) {
                r.assous_pouzet = Some(n);
            }
        }
    }

    records.sort_by(|a, b| {
        (b.length * a.mu)
            .cmp(&(a.length * b.mu))
            .then(a.mu.cmp(&b.mu))
    });
    report.extremal_records = records;
    report.checks = vec![bound, family];
    Ok(report.finish(started))
}

/// Dispatches on `cfg.target`.
pub fn run(cfg: &CampaignConfig) -> Result<CampaignReport> {
    match cfg.target {
        Target::MainTheorem => verify_main_theorem(cfg),
        Target::Corollary => verify_corollary(cfg),
        Target::Cft => verify_cft(cfg),
        Target::Lemmas => run_lemma_sweeps(cfg),
        Target::ExtremalRatio => extremal_ratio_scan(cfg),
    }
}
