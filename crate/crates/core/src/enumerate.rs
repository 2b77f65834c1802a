//! Exhaustive generation of words of a fixed length, optionally restricted to
//! canonical representatives (restricted-growth strings: each symbol is at
//! most one more than the largest symbol seen before it).

use crate::word::Word;

fn next_fresh(prefix: &[u8]) -> u8 {
    prefix.iter().map(|&s| s + 1).max().unwrap_or(0)
}

/// Whether `prefix` can start a word that the enumeration would produce.
pub fn is_valid_prefix(alphabet: u8, canonical_only: bool, prefix: &[u8]) -> bool {
    if prefix.iter().any(|&s| s >= alphabet) {
        return false;
    }
    !canonical_only || crate::word::is_canonical(&Word::from_parts(prefix.to_vec(), alphabet))
}

/// Calls `f` on every word of length `len` that starts with `prefix`, in
/// lexicographic order.
pub fn for_each_word<F: FnMut(&Word)>(
    alphabet: u8,
    len: usize,
    canonical_only: bool,
    prefix: &[u8],
    mut f: F,
) {
    if prefix.len() > len || !is_valid_prefix(alphabet, canonical_only, prefix) {
        return;
    }
    let mut buf = prefix.to_vec();
    let fresh = next_fresh(prefix);
    descend(alphabet, len, canonical_only, &mut buf, fresh, &mut f);
}

fn descend<F: FnMut(&Word)>(
    alphabet: u8,
    len: usize,
    canonical_only: bool,
    buf: &mut Vec<u8>,
    fresh: u8,
    f: &mut F,
) {
    if buf.len() == len {
        f(&Word::from_parts(buf.clone(), alphabet));
        return;
    }
    let limit = if canonical_only {
        (fresh + 1).min(alphabet)
    } else {
        alphabet
    };
    for s in 0..limit {
        buf.push(s);
        descend(alphabet, len, canonical_only, buf, fresh.max(s + 1), f);
        buf.pop();
    }
}

/// Every valid prefix of exactly `depth` symbols, lexicographic.
pub fn prefixes(alphabet: u8, depth: usize, canonical_only: bool) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for_each_word(alphabet, depth, canonical_only, &[], |w| {
        out.push(w.symbols().to_vec())
    });
    out
}

/// Collects the words of one length. Meant for small spaces.
pub fn words(alphabet: u8, len: usize, canonical_only: bool) -> Vec<Word> {
    let mut out = Vec::new();
    for_each_word(alphabet, len, canonical_only, &[], |w| out.push(w.clone()));
    out
}
