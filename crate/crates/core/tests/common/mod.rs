//! Brute-force references written from the definitions, over plain byte
//! strings. They share no code with the library.

#![allow(dead_code)]

pub fn has_border(s: &[u8], k: usize) -> bool {
    s[..k] == s[s.len() - k..]
}

/// All proper nonempty border lengths, ascending.
pub fn borders(s: &[u8]) -> Vec<usize> {
    (1..s.len()).filter(|&k| has_border(s, k)).collect()
}

pub fn is_unbordered(s: &[u8]) -> bool {
    !s.is_empty() && (1..s.len()).all(|k| !has_border(s, k))
}

pub fn periods(s: &[u8]) -> Vec<usize> {
    (1..=s.len())
        .filter(|&p| s.iter().zip(&s[p..]).all(|(a, b)| a == b))
        .collect()
}

pub fn period(s: &[u8]) -> usize {
    periods(s)[0]
}

/// Longest unbordered factor, scanning lengths downward.
pub fn mu(s: &[u8]) -> usize {
    let n = s.len();
    (1..=n)
        .rev()
        .find(|&l| (0..=n - l).any(|i| is_unbordered(&s[i..i + l])))
        .unwrap_or(0)
}

const FREE: u8 = u8::MAX;

/// The repetition words of length `l` at point `p`, as a template with
/// unconstrained positions set to `FREE`; `None` when none exists.
pub fn repetition_template(s: &[u8], p: usize, l: usize) -> Option<Vec<u8>> {
    let (x, y) = s.split_at(p);
    let mut r: Vec<Option<u8>> = vec![None; l];
    for (j, &c) in y.iter().enumerate().take(l) {
        r[j] = Some(c);
    }
    for (j, &c) in x.iter().rev().enumerate().take(l) {
        let slot = &mut r[l - 1 - j];
        match *slot {
            Some(d) if d != c => return None,
            _ => *slot = Some(c),
        }
    }
    let r: Vec<u8> = r.into_iter().map(|c| c.unwrap_or(FREE)).collect();
    let right = r.starts_with(y) || y.starts_with(&r);
    let left = r.ends_with(x) || x.ends_with(&r);
    (right && left).then_some(r)
}

pub fn local_period(s: &[u8], p: usize) -> usize {
    (1..).find(|&l| repetition_template(s, p, l).is_some()).unwrap()
}

pub fn critical_points(s: &[u8]) -> Vec<usize> {
    let per = period(s);
    (1..s.len()).filter(|&p| local_period(s, p) == per).collect()
}

/// Every factor of `wu` longer than `|w|` is bordered.
pub fn is_duval_extension(w: &[u8], u: &[u8]) -> bool {
    let wu = [w, u].concat();
    let n = wu.len();
    is_unbordered(w)
        && !u.is_empty()
        && (0..n).all(|i| (i + w.len() + 1..=n).all(|j| !is_unbordered(&wu[i..j])))
}

/// All words of length `n` over `0..k`, lexicographic.
pub fn all_words(k: u8, n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k).map(move |c| {
                    let mut v = w.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out
}

/// First occurrences of letters appear in order `0, 1, 2, ...`.
pub fn is_canonical(s: &[u8]) -> bool {
    let mut next = 0;
    for &c in s {
        if c > next {
            return false;
        }
        if c == next {
            next += 1;
        }
    }
    true
}

pub fn text(s: &[u8]) -> String {
    s.iter().map(|&c| (b'a' + c) as char).collect()
}

pub fn bytes(t: &str) -> Vec<u8> {
    t.bytes().map(|c| c - b'a').collect()
}
