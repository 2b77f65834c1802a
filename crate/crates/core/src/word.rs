//! Finite words over a small ordered alphabet.
//!
//! Symbols are stored as ids `0..k`. Text form maps `'a'` to 0, `'b'` to 1 and
//! so on, which caps the alphabet at 26 letters. All public positions are
//! 1-based.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_ALPHABET: u8 = 26;

/// An immutable finite word.
///
/// Equality, ordering and hashing look only at the symbol sequence; the
/// declared alphabet size is a construction-time bound, not part of identity.
#[derive(Clone)]
pub struct Word {
    symbols: Vec<u8>,
    alphabet: u8,
}

/// A 1-based reference to a nonempty factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FactorRef {
    pub start: usize,
    pub len: usize,
}

impl FactorRef {
    pub fn new(start: usize, len: usize) -> Self {
        FactorRef { start, len }
    }

    /// Last position covered, 1-based.
    pub fn end(&self) -> usize {
        self.start + self.len - 1
    }

    pub(crate) fn range(&self) -> std::ops::Range<usize> {
        self.start - 1..self.start - 1 + self.len
    }
}

impl Word {
    pub fn new(symbols: Vec<u8>, alphabet: u8) -> Result<Self> {
        if alphabet == 0 || alphabet > MAX_ALPHABET {
            return Err(Error::precondition(format!(
                "alphabet size must be in 1..={MAX_ALPHABET}, got {alphabet}"
            )));
        }
        if let Some(&symbol) = symbols.iter().find(|&&s| s >= alphabet) {
            return Err(Error::Symbol { symbol, alphabet });
        }
        Ok(Word { symbols, alphabet })
    }

    pub(crate) fn from_parts(symbols: Vec<u8>, alphabet: u8) -> Self {
        debug_assert!(symbols.iter().all(|&s| s < alphabet));
        Word { symbols, alphabet }
    }

    pub fn empty(alphabet: u8) -> Result<Self> {
        Word::new(Vec::new(), alphabet)
    }

    /// Decodes lowercase ASCII text. The resulting word has alphabet size 26.
    pub fn decode_text(text: &str) -> Result<Self> {
        let symbols = text
            .chars()
            .enumerate()
            .map(|(i, ch)| match ch {
                'a'..='z' => Ok(ch as u8 - b'a'),
                _ => Err(Error::Format { ch, position: i + 1 }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word::from_parts(symbols, MAX_ALPHABET))
    }

    pub fn encode_text(&self) -> String {
        self.symbols.iter().map(|&s| (b'a' + s) as char).collect()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn alphabet(&self) -> u8 {
        self.alphabet
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    /// Symbol at 1-based position `i`.
    pub fn at(&self, i: usize) -> Result<u8> {
        if i == 0 || i > self.len() {
            return Err(Error::Range {
                what: "position",
                value: i,
                len: self.len(),
            });
        }
        Ok(self.symbols[i - 1])
    }

    pub fn factor(&self, r: FactorRef) -> Result<Word> {
        if r.start == 0 || r.len == 0 || r.start + r.len - 1 > self.len() {
            return Err(Error::Range {
                what: "factor",
                value: r.start,
                len: self.len(),
            });
        }
        Ok(self.slice(r.range()))
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.slice(0..len.min(self.len()))
    }

    pub fn suffix(&self, len: usize) -> Word {
        let n = self.len();
        self.slice(n - len.min(n)..n)
    }

    pub(crate) fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word::from_parts(self.symbols[range].to_vec(), self.alphabet)
    }

    /// Concatenation; the result carries the larger of the two alphabets.
    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.symbols);
        symbols.extend_from_slice(&other.symbols);
        Word::from_parts(symbols, self.alphabet.max(other.alphabet))
    }

    /// A copy with one more symbol appended.
    pub fn pushed(&self, symbol: u8) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.push(symbol);
        Word::from_parts(symbols, self.alphabet.max(symbol + 1))
    }

    pub fn is_factor_of(&self, other: &Word) -> bool {
        find(other.symbols(), self.symbols()).is_some()
    }

    /// Distinct symbols occurring in the word, ascending.
    pub fn letters(&self) -> Vec<u8> {
        let mut seen = [false; MAX_ALPHABET as usize];
        for &s in &self.symbols {
            seen[s as usize] = true;
        }
        (0..MAX_ALPHABET).filter(|&s| seen[s as usize]).collect()
    }
}

/// Index of the first occurrence of `needle` in `haystack`, 0-based.
pub(crate) fn find(haystack: &[u8], needle: &[u8]) -> Option<usize> {
    if needle.is_empty() {
        return Some(0);
    }
    haystack.windows(needle.len()).position(|win| win == needle)
}

/// All 0-based start positions of `needle` in `haystack`.
pub(crate) fn occurrences(haystack: &[u8], needle: &[u8]) -> Vec<usize> {
    if needle.is_empty() {
        return (0..=haystack.len()).collect();
    }
    haystack
        .windows(needle.len())
        .enumerate()
        .filter(|(_, win)| *win == needle)
        .map(|(i, _)| i)
        .collect()
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.symbols.hash(state);
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shortlex: shorter words first, then lexicographic.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.symbols.cmp(&other.symbols))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("ε");
        }
        f.write_str(&self.encode_text())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?}/{})", self.encode_text(), self.alphabet)
    }
}

impl std::str::FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::decode_text(s)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.encode_text())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        Word::decode_text(&text).map_err(serde::de::Error::custom)
    }
}

/// Whether `u` and `v` overlap: one is a factor of the other, or a nonempty
/// suffix of one is a prefix of the other.
pub fn overlaps(u: &Word, v: &Word) -> Result<bool> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::precondition("overlaps requires nonempty words"));
    }
    if u.is_factor_of(v) || v.is_factor_of(u) {
        return Ok(true);
    }
    let (us, vs) = (u.symbols(), v.symbols());
    let max = us.len().min(vs.len());
    Ok((1..=max).any(|k| us[us.len() - k..] == vs[..k] || vs[vs.len() - k..] == us[..k]))
}

/// Least image of `w` under bijective letter renaming: letters are renumbered
/// in order of first occurrence.
pub fn canonicalize(w: &Word) -> Word {
    let mut map = [u8::MAX; MAX_ALPHABET as usize];
    let mut next = 0u8;
    let symbols = w
        .symbols()
        .iter()
        .map(|&s| {
            let slot = &mut map[s as usize];
            if *slot == u8::MAX {
                *slot = next;
                next += 1;
            }
            *slot
        })
        .collect();
    Word::from_parts(symbols, w.alphabet())
}

pub fn is_canonical(w: &Word) -> bool {
    let mut next = 0u8;
    for &s in w.symbols() {
        if s > next {
            return false;
        }
        if s == next {
            next += 1;
        }
    }
    true
}
