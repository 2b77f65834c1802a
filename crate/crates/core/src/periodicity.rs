//! Borders, periods and unbordered factors.
//!
//! Only proper borders (strictly shorter than the word) are reported here.
//! The Duval sequence in [`crate::duval`] uses the other convention, where an
//! unbordered word counts as its own shortest border; see
//! [`shortest_border_or_self`].

use serde::Serialize;

use crate::check::CheckResult;
use crate::error::{Error, Result};
use crate::word::{FactorRef, Word};

/// `b[i]`, for each prefix length `i` in `1..=|w|`, is the length of the
/// longest proper border of that prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderTable {
    table: Vec<usize>,
}

impl BorderTable {
    /// Entry for the prefix of length `i` (1-based).
    pub fn get(&self, i: usize) -> usize {
        self.table[i - 1]
    }

    /// Longest proper border length of the whole word.
    pub fn last(&self) -> usize {
        *self.table.last().expect("border tables are nonempty")
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.table
    }
}

/// Failure function over a raw symbol slice; `out[i]` is the border length
/// of `s[..=i]`.
pub(crate) fn failure(s: &[u8]) -> Vec<usize> {
    let mut table = vec![0; s.len()];
    let mut k = 0;
    for i in 1..s.len() {
        while k > 0 && s[i] != s[k] {
            k = table[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        table[i] = k;
    }
    table
}

pub(crate) fn longest_border_len(s: &[u8]) -> usize {
    failure(s).last().copied().unwrap_or(0)
}

pub(crate) fn unbordered(s: &[u8]) -> bool {
    longest_border_len(s) == 0
}

/// Shortest proper border length, 0 when unbordered.
pub(crate) fn shortest_border_len(s: &[u8]) -> usize {
    let table = failure(s);
    let mut b = table.last().copied().unwrap_or(0);
    while b > 0 && table[b - 1] > 0 {
        b = table[b - 1];
    }
    b
}

/// Length of the longest unbordered prefix; 0 only for the empty slice.
pub(crate) fn longest_unbordered_prefix_len(s: &[u8]) -> usize {
    failure(s)
        .iter()
        .rposition(|&b| b == 0)
        .map_or(0, |i| i + 1)
}

fn require_nonempty(w: &Word, op: &str) -> Result<()> {
    if w.is_empty() {
        return Err(Error::precondition(format!("{op} requires a nonempty word")));
    }
    Ok(())
}

pub fn border_table(w: &Word) -> Result<BorderTable> {
    require_nonempty(w, "border_table")?;
    Ok(BorderTable {
        table: failure(w.symbols()),
    })
}

/// Shortest proper nonempty border, `None` for unbordered words.
pub fn shortest_border(w: &Word) -> Result<Option<Word>> {
    require_nonempty(w, "shortest_border")?;
    match shortest_border_len(w.symbols()) {
        0 => Ok(None),
        b => Ok(Some(w.prefix(b))),
    }
}

/// Shortest border where an unbordered word is its own border.
pub fn shortest_border_or_self(w: &Word) -> Result<Word> {
    Ok(shortest_border(w)?.unwrap_or_else(|| w.clone()))
}

pub fn is_unbordered(w: &Word) -> Result<bool> {
    require_nonempty(w, "is_unbordered")?;
    Ok(unbordered(w.symbols()))
}

/// All periods of `w`, ascending. Each border of length `b` gives period
/// `|w| - b`, and `|w|` itself is always a period.
pub fn periods_all(w: &Word) -> Result<Vec<usize>> {
    let table = border_table(w)?;
    let n = w.len();
    let mut periods = Vec::new();
    let mut b = table.last();
    while b > 0 {
        periods.push(n - b);
        b = table.get(b);
    }
    periods.push(n);
    Ok(periods)
}

pub fn period(w: &Word) -> Result<usize> {
    require_nonempty(w, "period")?;
    Ok(period_of(w.symbols()))
}

pub(crate) fn period_of(s: &[u8]) -> usize {
    s.len() - longest_border_len(s)
}

/// `μ(w)` with its witness: the leftmost start achieving the maximum length.
pub fn mu(w: &Word) -> Result<(usize, FactorRef)> {
    require_nonempty(w, "mu")?;
    let (len, start) = mu_of(w.symbols());
    Ok((len, FactorRef::new(start + 1, len)))
}

/// Returns `(μ, 0-based start)` over a nonempty slice.
pub(crate) fn mu_of(s: &[u8]) -> (usize, usize) {
    let n = s.len();
    let mut best = (0, 0);
    for start in 0..n {
        if n - start <= best.0 {
            break;
        }
        let len = longest_unbordered_prefix_len(&s[start..]);
        if len > best.0 {
            best = (len, start);
        }
    }
    best
}

pub fn longest_unbordered_prefix(w: &Word) -> Result<usize> {
    require_nonempty(w, "longest_unbordered_prefix")?;
    Ok(longest_unbordered_prefix_len(w.symbols()))
}

/// Flat summary of the periodic structure of a word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodicityReport {
    pub word: Word,
    pub length: usize,
    pub period: usize,
    pub mu: usize,
    pub mu_start: usize,
    pub mu_len: usize,
    pub periods: Vec<usize>,
}

impl PeriodicityReport {
    pub fn mu_witness(&self) -> FactorRef {
        FactorRef::new(self.mu_start, self.mu_len)
    }
}

pub fn analyze(w: &Word) -> Result<PeriodicityReport> {
    let periods = periods_all(w)?;
    let (mu, witness) = mu(w)?;
    Ok(PeriodicityReport {
        word: w.clone(),
        length: w.len(),
        period: periods[0],
        mu,
        mu_start: witness.start,
        mu_len: witness.len,
        periods,
    })
}

/// For unbordered `w`: every `uw` and `wv`, with `u` a proper nonempty prefix
/// and `v` a proper nonempty suffix, is unbordered. Bordered `w` yields a
/// not-applicable result.
pub fn lemma5_instances(w: &Word) -> CheckResult {
    const ID: &str = "lemma5";
    let s = w.symbols();
    if s.is_empty() || !unbordered(s) {
        return CheckResult::not_applicable(ID);
    }
    let mut result = CheckResult::new(ID);
    let n = s.len();
    for k in 1..n {
        let uw = [&s[..k], s].concat();
        result.record(unbordered(&uw), || format!("w={w} u={}", w.prefix(k)));
        let wv = [s, &s[n - k..]].concat();
        result.record(unbordered(&wv), || format!("w={w} v={}", w.suffix(k)));
    }
    result
}
