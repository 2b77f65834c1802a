//! Quadratic-or-worse routines written straight from the definitions.
//!
//! Campaigns re-run every violation they find through these before emitting
//! it. Nothing here shares code with the fast paths.

/// `s[..k]` equals `s[n-k..]`.
pub fn is_border(s: &[u8], k: usize) -> bool {
    k >= 1 && k <= s.len() && s[..k] == s[s.len() - k..]
}

pub fn unbordered(s: &[u8]) -> bool {
    !s.is_empty() && (1..s.len()).all(|k| !is_border(s, k))
}

pub fn is_period(s: &[u8], p: usize) -> bool {
    p >= 1 && p <= s.len() && (0..s.len() - p).all(|i| s[i] == s[i + p])
}

pub fn period(s: &[u8]) -> usize {
    (1..=s.len()).find(|&p| is_period(s, p)).unwrap_or(0)
}

pub fn periods(s: &[u8]) -> Vec<usize> {
    (1..=s.len()).filter(|&p| is_period(s, p)).collect()
}

/// Longest unbordered factor length, over all `O(n^2)` factors.
pub fn mu(s: &[u8]) -> usize {
    let n = s.len();
    let mut best = 0;
    for i in 0..n {
        for j in i + 1..=n {
            if j - i > best && unbordered(&s[i..j]) {
                best = j - i;
            }
        }
    }
    best
}

/// `u` is a suffix of `x'x` and a prefix of `yy'` for some `x'`, `y'`.
pub fn is_repetition_word(u: &[u8], x: &[u8], y: &[u8]) -> bool {
    (u.ends_with(x) || x.ends_with(u)) && (u.starts_with(y) || y.starts_with(u))
}

/// Any repetition word of length `l` must start with `y` (or a prefix of
/// it) and end with `x` (or a suffix of it); this builds the one candidate
/// compatible with `y` and fills the rest from `x`, then tests it literally.
fn candidate(x: &[u8], y: &[u8], l: usize) -> Vec<u8> {
    if l <= y.len() {
        return y[..l].to_vec();
    }
    let tail = l - y.len();
    let mut u = y.to_vec();
    if tail <= x.len() {
        u.extend_from_slice(&x[x.len() - tail..]);
    } else {
        u.extend(std::iter::repeat_n(0, tail - x.len()));
        u.extend_from_slice(x);
    }
    u
}

pub fn local_period(s: &[u8], p: usize) -> usize {
    let (x, y) = s.split_at(p);
    (1..)
        .find(|&l| is_repetition_word(&candidate(x, y, l), x, y))
        .expect("|x| + |y| always works")
}

/// `wu` is a Duval extension of `w`: `w` unbordered, `u` nonempty, and
/// every factor of `wu` longer than `|w|` is bordered.
pub fn is_duval_extension(w: &[u8], u: &[u8]) -> bool {
    if !unbordered(w) || u.is_empty() {
        return false;
    }
    let wu = [w, u].concat();
    let n = wu.len();
    (0..n).all(|i| (i + w.len() + 1..=n).all(|j| !unbordered(&wu[i..j])))
}
