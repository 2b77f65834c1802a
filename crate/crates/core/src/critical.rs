//! Local periods, repetition words and critical points.
//!
//! A repetition word of length `l` at point `p` (with `w = xy`, `|x| = p`)
//! must agree with `y` on its first `min(l, |y|)` symbols and with `x` on its
//! last `min(l, |x|)` symbols; symbols outside `w` are free. The local period
//! is the least `l` for which those two constraints are consistent. For
//! `l <= |w|` they pin every symbol, so the shortest repetition word at a
//! point is unique.

use serde::Serialize;

use crate::check::CheckResult;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::periodicity::{period_of, shortest_border_len, unbordered};
use crate::word::{overlaps, Word};

fn check_point(w: &Word, p: usize) -> Result<()> {
    if p == 0 || p >= w.len() {
        return Err(Error::Range {
            what: "point",
            value: p,
            len: w.len(),
        });
    }
    Ok(())
}

/// Whether a word of length `l` can be a repetition word at point `p`.
fn fits(s: &[u8], p: usize, l: usize) -> bool {
    let lo = l.saturating_sub(p);
    let hi = l.min(s.len() - p);
    (lo..hi).all(|i| s[p + i] == s[p + i - l])
}

pub(crate) fn local_period_of(s: &[u8], p: usize) -> usize {
    (1..=s.len())
        .find(|&l| fits(s, p, l))
        .expect("the full length always fits")
}

fn repetition_word_of(s: &[u8], p: usize, l: usize) -> Vec<u8> {
    let right = s.len() - p;
    (0..l)
        .map(|i| if i < right { s[p + i] } else { s[p + i - l] })
        .collect()
}

/// `∂(w, p)` for a point `1 <= p < |w|`.
pub fn local_period(w: &Word, p: usize) -> Result<usize> {
    check_point(w, p)?;
    Ok(local_period_of(w.symbols(), p))
}

pub fn shortest_repetition_word(w: &Word, p: usize) -> Result<Word> {
    check_point(w, p)?;
    let s = w.symbols();
    let l = local_period_of(s, p);
    Ok(Word::from_parts(repetition_word_of(s, p, l), w.alphabet()))
}

pub(crate) fn critical_points_of(s: &[u8]) -> Vec<usize> {
    let period = period_of(s);
    (1..s.len())
        .filter(|&p| local_period_of(s, p) == period)
        .collect()
}

/// Points `p` with `∂(w, p) = ∂(w)`, ascending.
pub fn critical_points(w: &Word) -> Result<Vec<usize>> {
    if w.len() < 2 {
        return Err(Error::precondition("critical_points requires |w| >= 2"));
    }
    Ok(critical_points_of(w.symbols()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalPeriodProfile {
    pub word: Word,
    pub period: usize,
    /// Entry `i` is the local period at point `i + 1`.
    pub local_periods: Vec<usize>,
    pub critical_points: Vec<usize>,
    #[serde(skip)]
    pub witnesses: Vec<Word>,
}

/// Profile over all points of a nonempty word. A single letter has no points.
pub fn local_profile(w: &Word) -> Result<LocalPeriodProfile> {
    if w.is_empty() {
        return Err(Error::precondition("local_profile requires a nonempty word"));
    }
    let s = w.symbols();
    let period = period_of(s);
    let local_periods: Vec<usize> = (1..s.len()).map(|p| local_period_of(s, p)).collect();
    let witnesses = local_periods
        .iter()
        .enumerate()
        .map(|(i, &l)| Word::from_parts(repetition_word_of(s, i + 1, l), w.alphabet()))
        .collect();
    let critical_points = local_periods
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == period)
        .map(|(i, _)| i + 1)
        .collect();
    Ok(LocalPeriodProfile {
        word: w.clone(),
        period,
        local_periods,
        critical_points,
        witnesses,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CftOutcome {
    /// Some critical point lies strictly below the period.
    Holds(usize),
    /// `∂(w) = 1`: every point is critical but none is below the period.
    Vacuous,
    Violated,
    /// Words shorter than 2 are outside the theorem.
    OutOfScope,
}

pub(crate) fn cft_outcome_of(s: &[u8]) -> CftOutcome {
    if s.len() < 2 {
        return CftOutcome::OutOfScope;
    }
    let period = period_of(s);
    if period == 1 {
        return CftOutcome::Vacuous;
    }
    match (1..period.min(s.len())).find(|&p| local_period_of(s, p) == period) {
        Some(p) => CftOutcome::Holds(p),
        None => CftOutcome::Violated,
    }
}

pub fn cft_outcome(w: &Word) -> CftOutcome {
    cft_outcome_of(w.symbols())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub alphabet: u8,
    pub max_len: usize,
    pub words_scanned: u64,
    /// Words with period 1, where the theorem holds vacuously.
    pub vacuous: u64,
    pub violations: Vec<Word>,
}

impl VerificationReport {
    pub fn verified(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Sequential scan of all canonical words of length `2..=max_len`.
pub fn verify_cft(alphabet: u8, max_len: usize) -> Result<VerificationReport> {
    if alphabet == 0 || max_len < 2 {
        return Err(Error::precondition("verify_cft requires k >= 1 and n >= 2"));
    }
    let mut report = VerificationReport {
        alphabet,
        max_len,
        words_scanned: 0,
        vacuous: 0,
        violations: Vec::new(),
    };
    for len in 2..=max_len {
        enumerate::for_each_word(alphabet, len, true, &[], |w| {
            report.words_scanned += 1;
            match cft_outcome(w) {
                CftOutcome::Vacuous => report.vacuous += 1,
                CftOutcome::Violated => report.violations.push(w.clone()),
                CftOutcome::Holds(_) | CftOutcome::OutOfScope => {}
            }
        });
    }
    Ok(report)
}

/// For unbordered `w` and each critical point `p`, the two sides of the
/// factorization at `p` do not overlap.
pub fn lemma6_instances(w: &Word) -> CheckResult {
    const ID: &str = "lemma6";
    let s = w.symbols();
    if s.len() < 2 || !unbordered(s) {
        return CheckResult::not_applicable(ID);
    }
    let mut result = CheckResult::new(ID);
    for p in critical_points_of(s) {
        let (u, v) = (w.prefix(p), w.suffix(s.len() - p));
        let ok = !overlaps(&u, &v).expect("both sides are nonempty");
        result.record(ok, || format!("w={w} p={p}"));
    }
    result
}

/// For unbordered `w = u0 u1` split at a critical point and every `x` over
/// `alphabet` of length at most `max_x`, both `u0 x u1` and `u1 x u0` are
/// unbordered or have a minimum border of length at least `|w|`.
pub fn lemma4_instances(w: &Word, alphabet: u8, max_x: usize) -> CheckResult {
    const ID: &str = "lemma4";
    let s = w.symbols();
    if s.len() < 2 || !unbordered(s) {
        return CheckResult::not_applicable(ID);
    }
    let mut result = CheckResult::new(ID);
    let n = s.len();
    for p in critical_points_of(s) {
        let (u0, u1) = (&s[..p], &s[p..]);
        for x_len in 0..=max_x {
            enumerate::for_each_word(alphabet, x_len, false, &[], |x| {
                for (left, right) in [(u0, u1), (u1, u0)] {
                    let joined = [left, x.symbols(), right].concat();
                    let g = shortest_border_len(&joined);
                    result.record(g == 0 || g >= n, || {
                        format!("w={w} p={p} x={x} word={}", Word::from_parts(joined.clone(), alphabet.max(w.alphabet())))
                    });
                }
            });
        }
    }
    result
}
