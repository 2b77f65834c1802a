//! Duval extensions and the machinery around them.
//!
//! `wu` is a Duval extension of an unbordered `w` when every factor of `wu`
//! longer than `|w|` is bordered. It is trivial when `∂(wu) = |w|`, i.e. `u`
//! is a prefix of some power of `w`. Extensions are prefix-closed: if `wu`
//! is one, so is `wv` for every nonempty prefix `v` of `u`, which is what the
//! depth-first enumeration here relies on.

use serde::Serialize;

use crate::check::CheckResult;
use crate::error::{Error, Result};
use crate::periodicity::{failure, longest_unbordered_prefix_len, mu_of, period_of, shortest_border_len, unbordered};
use crate::word::{find, occurrences, FactorRef, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    NotExtension,
    Trivial,
    NontrivialMinimal,
    NontrivialNonMinimal,
}

impl Verdict {
    pub fn is_extension(self) -> bool {
        self != Verdict::NotExtension
    }

    pub fn is_nontrivial(self) -> bool {
        matches!(self, Verdict::NontrivialMinimal | Verdict::NontrivialNonMinimal)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DuvalClassification {
    pub w: Word,
    pub u: Word,
    pub verdict: Verdict,
    pub period_wu: usize,
    pub mu_wu: usize,
    /// An unbordered factor of `wu` longer than `|w|`; only for non-extensions.
    pub witness: Option<FactorRef>,
    /// `u = u'a` and `w = u'bw'` with `a != b`.
    pub structural_form: bool,
}

fn require_unbordered(w: &Word) -> Result<()> {
    if w.is_empty() || !unbordered(w.symbols()) {
        return Err(Error::precondition(format!("{w} is not a nonempty unbordered word")));
    }
    Ok(())
}

/// `u = u'a`, `w = u'bw'`, `a != b`.
pub fn has_structural_form(w: &Word, u: &Word) -> bool {
    let (ws, us) = (w.symbols(), u.symbols());
    let k = us.len();
    k >= 1 && k <= ws.len() && us[..k - 1] == ws[..k - 1] && us[k - 1] != ws[k - 1]
}

pub fn classify_extension(w: &Word, u: &Word) -> Result<DuvalClassification> {
    require_unbordered(w)?;
    if u.is_empty() {
        return Err(Error::precondition("u must be nonempty"));
    }
    let wu = w.concat(u);
    let s = wu.symbols();
    let n = w.len();
    let (mu_wu, mu_start) = mu_of(s);
    let period_wu = period_of(s);
    let (verdict, witness) = if mu_wu > n {
        (Verdict::NotExtension, Some(FactorRef::new(mu_start + 1, mu_wu)))
    } else if period_wu == n {
        (Verdict::Trivial, None)
    } else if (1..u.len()).all(|k| period_of(&s[..n + k]) == n) {
        (Verdict::NontrivialMinimal, None)
    } else {
        (Verdict::NontrivialNonMinimal, None)
    };
    Ok(DuvalClassification {
        w: w.clone(),
        u: u.clone(),
        verdict,
        period_wu,
        mu_wu,
        witness,
        structural_form: has_structural_form(w, u),
    })
}

/// Whether every suffix of `buf` longer than `wlen` is bordered.
fn suffixes_bordered(buf: &[u8], wlen: usize) -> bool {
    let rev: Vec<u8> = buf.iter().rev().copied().collect();
    let table = failure(&rev);
    table[wlen..].iter().all(|&b| b > 0)
}

/// Depth-first walk over every `u`, `1 <= |u| <= max_extra`, such that `wu`
/// is a Duval extension. Only letters occurring in `w` are tried: a letter
/// absent from `w` makes the length-`|w|+1` suffix ending at its first
/// occurrence unbordered, so such branches are always dead. The callback
/// receives the symbols of `wu`.
pub(crate) fn visit_extensions<F: FnMut(&[u8])>(w: &[u8], max_extra: usize, f: &mut F) {
    let mut letters: Vec<u8> = w.to_vec();
    letters.sort_unstable();
    letters.dedup();
    let mut buf = w.to_vec();
    walk(&mut buf, w.len(), &letters, max_extra, f);
}

fn walk<F: FnMut(&[u8])>(buf: &mut Vec<u8>, wlen: usize, letters: &[u8], max_extra: usize, f: &mut F) {
    if buf.len() - wlen >= max_extra {
        return;
    }
    for &c in letters {
        buf.push(c);
        if suffixes_bordered(buf, wlen) {
            f(buf);
            walk(buf, wlen, letters, max_extra, f);
        }
        buf.pop();
    }
}

/// All `u` with `1 <= |u| <= max_extra` making `wu` a Duval extension, in
/// depth-first symbol order.
pub fn enumerate_extensions(w: &Word, max_extra: usize) -> Result<Vec<(Word, DuvalClassification)>> {
    require_unbordered(w)?;
    let mut found = Vec::new();
    let n = w.len();
    visit_extensions(w.symbols(), max_extra, &mut |wu| {
        found.push(Word::from_parts(wu[n..].to_vec(), w.alphabet()));
    });
    found
        .into_iter()
        .map(|u| classify_extension(w, &u).map(|c| (u, c)))
        .collect()
}

/// Search horizon for `|u|`. Past `|w|` symbols a trivial prefix of `u`
/// already contains a second occurrence of `w`, which forces triviality, so
/// `2|w|` leaves room to spare while still exposing any nontrivial extension
/// that reaches `|u| >= |w| - 1`.
pub fn extension_horizon(w: &Word) -> usize {
    2 * w.len()
}

/// Longest `|u|` over nontrivial Duval extensions `wu` within
/// [`extension_horizon`]; 0 if there are none.
pub fn max_nontrivial_extension_len(w: &Word) -> Result<usize> {
    require_unbordered(w)?;
    let n = w.len();
    let mut best = 0;
    visit_extensions(w.symbols(), extension_horizon(w), &mut |wu| {
        if period_of(wu) != n {
            best = best.max(wu.len() - n);
        }
    });
    Ok(best)
}

/// Nontrivial extensions of `w` within the horizon, as `u` words, in
/// depth-first order.
pub fn nontrivial_extensions(w: &Word) -> Result<Vec<Word>> {
    require_unbordered(w)?;
    let n = w.len();
    let mut out = Vec::new();
    visit_extensions(w.symbols(), extension_horizon(w), &mut |wu| {
        if period_of(wu) != n {
            out.push(Word::from_parts(wu[n..].to_vec(), w.alphabet()));
        }
    });
    Ok(out)
}

/// Minimal nontrivial extensions: `u` follows the periodic continuation of
/// `w` and deviates only in its last letter.
pub fn minimal_extensions(w: &Word) -> Result<Vec<Word>> {
    require_unbordered(w)?;
    let ws = w.symbols();
    let n = ws.len();
    let letters = w.letters();
    let mut out = Vec::new();
    let mut buf = ws.to_vec();
    for k in 0..extension_horizon(w) {
        let periodic = ws[k % n];
        for &c in &letters {
            if c == periodic {
                continue;
            }
            buf.push(c);
            if suffixes_bordered(&buf, n) {
                out.push(Word::from_parts(buf[n..].to_vec(), w.alphabet()));
            }
            buf.pop();
        }
        buf.push(periodic);
    }
    Ok(out)
}

/// The opening decomposition of a nontrivial extension `wu`:
/// `z` is the longest suffix of `w` occurring in `zu` at a positive
/// position, `w = w'az`, and `u = u'bzr` where `bz` sits at the rightmost
/// such occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProofContext {
    pub w: Word,
    pub u: Word,
    pub z: Word,
    pub a: u8,
    pub b: u8,
    pub w_prime: Word,
    pub u_prime: Word,
    pub r: Word,
    /// `az0` is the longest unbordered prefix of `az`.
    pub z0: Word,
    /// `bz1` is the longest unbordered prefix of `bz`.
    pub z1: Word,
    pub t0: Word,
    /// `z` is empty; `u` is then a power of a single letter.
    pub degenerate: bool,
}

impl ProofContext {
    /// Structural claims that must hold for every extracted context; returns
    /// a description of each one that fails.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.a == self.b {
            out.push("a == b".to_string());
        }
        if self.w_prime.is_empty() {
            out.push("w' is empty".to_string());
        }
        if self.z == self.w {
            out.push("z == w".to_string());
        }
        let az = [&[self.a][..], self.z.symbols()].concat();
        let zu = [self.z.symbols(), self.u.symbols()].concat();
        if find(&zu, &az).is_some() {
            out.push("az occurs in zu".to_string());
        }
        let zr = self.t0.symbols();
        if occurrences(zr, self.z.symbols()).len() != 1 && !self.degenerate {
            out.push("z occurs in zr more than once".to_string());
        }
        out
    }
}

pub fn extract_proof_context(w: &Word, u: &Word) -> Result<ProofContext> {
    let class = classify_extension(w, u)?;
    if !class.verdict.is_nontrivial() {
        return Err(Error::precondition(format!(
            "{w}.{u} is not a nontrivial Duval extension"
        )));
    }
    let (ws, us) = (w.symbols(), u.symbols());
    let n = ws.len();
    let zlen = (0..=n)
        .rev()
        .find(|&l| {
            let zu = [&ws[n - l..], us].concat();
            find(&zu[1..], &ws[n - l..]).is_some()
        })
        .expect("the empty suffix always occurs");
    if zlen == n {
        return Err(Error::Invariant(format!("z = w for {w}.{u}")));
    }
    let z = &ws[n - zlen..];
    let zu = [z, us].concat();
    let rightmost = *occurrences(&zu[1..], z).last().expect("z occurs") + 1;
    // position of bz's z inside u, 0-based
    let zpos = match rightmost.checked_sub(zlen) {
        Some(p) if p >= 1 => p,
        _ => {
            return Err(Error::Invariant(format!(
                "rightmost occurrence of z in zu has no preceding letter in u for {w}.{u}"
            )))
        }
    };
    let a = ws[n - zlen - 1];
    let b = us[zpos - 1];
    let az = [&[a][..], z].concat();
    let bz = [&[b][..], z].concat();
    let k = w.alphabet().max(u.alphabet());
    let word = |s: &[u8]| Word::from_parts(s.to_vec(), k);
    Ok(ProofContext {
        w: w.clone(),
        u: u.clone(),
        z: word(z),
        a,
        b,
        w_prime: word(&ws[..n - zlen - 1]),
        u_prime: word(&us[..zpos - 1]),
        r: word(&us[zpos + zlen..]),
        z0: word(&z[..longest_unbordered_prefix_len(&az) - 1]),
        z1: word(&z[..longest_unbordered_prefix_len(&bz) - 1]),
        t0: word(&[z, &us[zpos + zlen..]].concat()),
        degenerate: zlen == 0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SequenceStatus {
    Terminated,
    /// The state `(parity, t)` repeated, so the iteration would loop.
    NonProgress,
}

/// The sequences `a_i`, `s_i`, `s'_i`, `s''_i`, `t_i` built from two distinct
/// letters and a start word. `t[0]` is `t_0`; `s[0]` is `s_1`, and likewise
/// for `s_prime` and `s_dprime`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DuvalSequence {
    pub a0: u8,
    pub a1: u8,
    pub t: Vec<Word>,
    pub s: Vec<Word>,
    pub s_prime: Vec<Word>,
    pub s_dprime: Vec<Word>,
    pub m: Option<usize>,
    pub status: SequenceStatus,
}

impl DuvalSequence {
    pub fn letter(&self, i: usize) -> u8 {
        if i.is_multiple_of(2) {
            self.a0
        } else {
            self.a1
        }
    }

    /// `s_i` for `i >= 1`, with `s_0 = ε`.
    pub fn s_at(&self, i: usize) -> Word {
        if i == 0 {
            Word::from_parts(Vec::new(), self.t[0].alphabet())
        } else {
            self.s[i - 1].clone()
        }
    }

    pub fn is_terminated(&self) -> bool {
        self.status == SequenceStatus::Terminated
    }
}

/// Iterates the sequence definitions until `s_i = t_{i-1}`. Shortest borders
/// here follow the convention that an unbordered word is its own shortest
/// border. Stops with [`SequenceStatus::NonProgress`] if `t` stays unchanged
/// for two consecutive steps without terminating, since the state then
/// repeats.
pub fn compute_duval_sequence(a0: u8, a1: u8, t0: &Word) -> Result<DuvalSequence> {
    if a0 == a1 {
        return Err(Error::precondition("a0 and a1 must differ"));
    }
    if t0.is_empty() {
        return Err(Error::precondition("t0 must be nonempty"));
    }
    let k = t0.alphabet().max(a0.max(a1) + 1);
    let word = |s: &[u8]| Word::from_parts(s.to_vec(), k);
    let mut seq = DuvalSequence {
        a0,
        a1,
        t: vec![word(t0.symbols())],
        s: Vec::new(),
        s_prime: Vec::new(),
        s_dprime: Vec::new(),
        m: None,
        status: SequenceStatus::Terminated,
    };
    let mut i = 1;
    loop {
        let ai = seq.letter(i);
        let next = seq.letter(i + 1);
        let prev = seq.t[i - 1].symbols().to_vec();
        let ai_prev = [&[ai][..], &prev].concat();
        let border = match shortest_border_len(&ai_prev) {
            0 => ai_prev.len(),
            b => b,
        };
        let si = &ai_prev[1..border];
        let lup = longest_unbordered_prefix_len(&[&[next][..], si].concat());
        let (sp, sdp) = si.split_at(lup - 1);
        let ti = &prev[..prev.len() - sdp.len()];
        seq.s.push(word(si));
        seq.s_prime.push(word(sp));
        seq.s_dprime.push(word(sdp));
        seq.t.push(word(ti));
        if si == prev.as_slice() {
            seq.m = Some(i);
            return Ok(seq);
        }
        if i >= 2 && seq.t[i] == seq.t[i - 2] {
            seq.status = SequenceStatus::NonProgress;
            return Ok(seq);
        }
        i += 1;
    }
}

/// `|s_1| < ... < |s_m| = |t_{m-1}| <= ... <= |t_0|`, `s_m = t_{m-1}` and
/// `|t_0| <= |s_m| + |s_{m-1}|`.
pub fn check_lemma7(seq: &DuvalSequence) -> CheckResult {
    const ID: &str = "lemma7";
    let Some(m) = seq.m.filter(|_| seq.is_terminated()) else {
        return CheckResult::not_applicable(ID);
    };
    let mut result = CheckResult::new(ID);
    let violation = lemma7_violation(seq, m);
    result.record(violation.is_none(), || {
        format!(
            "a0={} a1={} t0={}: {}",
            letter_name(seq.a0),
            letter_name(seq.a1),
            seq.t[0],
            violation.clone().unwrap_or_default()
        )
    });
    result
}

fn lemma7_violation(seq: &DuvalSequence, m: usize) -> Option<String> {
    let s = |i: usize| seq.s_at(i).len();
    let t = |i: usize| seq.t[i].len();
    for i in 1..m {
        if s(i) >= s(i + 1) {
            return Some(format!("|s_{i}| < |s_{}| fails", i + 1));
        }
    }
    if s(m) != t(m - 1) {
        return Some(format!("|s_{m}| = |t_{}| fails", m - 1));
    }
    for i in 1..m {
        if t(i) > t(i - 1) {
            return Some(format!("|t_{i}| <= |t_{}| fails", i - 1));
        }
    }
    if seq.s_at(m) != seq.t[m - 1] {
        return Some(format!("s_{m} = t_{} fails", m - 1));
    }
    if t(0) > s(m) + s(m - 1) {
        return Some(format!("|t_0| <= |s_{m}| + |s_{}| fails", m - 1));
    }
    None
}

fn letter_name(s: u8) -> char {
    (b'a' + s) as char
}

/// Which clause of Lemma 2 to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma2Form {
    /// As stated: `m = 1` requires `a0 t0` unbordered.
    Stated,
    /// The form the main argument relies on: every odd `m`, including 1,
    /// gets the odd clause (`a1 s_m` unbordered, `|t0| <= |s_m| + |z0|`).
    OddIncludesOne,
}

pub fn check_lemma2(t0: &Word, a0: u8, a1: u8, z: &Word) -> CheckResult {
    check_lemma2_form(t0, a0, a1, z, Lemma2Form::Stated)
}

pub fn check_lemma2_form(t0: &Word, a0: u8, a1: u8, z: &Word, form: Lemma2Form) -> CheckResult {
    let id = match form {
        Lemma2Form::Stated => "lemma2",
        Lemma2Form::OddIncludesOne => "lemma2-odd-form",
    };
    let (ts, zs) = (t0.symbols(), z.symbols());
    let a0z = [&[a0][..], zs].concat();
    let a1z = [&[a1][..], zs].concat();
    if a0 == a1 || t0.is_empty() || !ts.starts_with(zs) || find(ts, &a0z).is_some() || find(ts, &a1z).is_some() {
        return CheckResult::not_applicable(id);
    }
    let seq = compute_duval_sequence(a0, a1, t0).expect("inputs validated");
    let Some(m) = seq.m.filter(|_| seq.is_terminated()) else {
        return CheckResult::not_applicable(id);
    };
    let z0 = longest_unbordered_prefix_len(&a0z) - 1;
    let z1 = longest_unbordered_prefix_len(&a1z) - 1;
    let sm = seq.s_at(m);
    let (case, ok) = if m == 1 && form == Lemma2Form::Stated {
        ("m=1: a0 t0 unbordered", unbordered(&[&[a0][..], ts].concat()))
    } else if m % 2 == 1 {
        (
            "m odd: a1 s_m unbordered, |t0| <= |s_m| + |z0|",
            unbordered(&[&[a1][..], sm.symbols()].concat()) && ts.len() <= sm.len() + z0,
        )
    } else {
        (
            "m even: a0 s_m unbordered, |t0| <= |s_m| + |z1|",
            unbordered(&[&[a0][..], sm.symbols()].concat()) && ts.len() <= sm.len() + z1,
        )
    };
    let mut result = CheckResult::new(id);
    result.record(ok, || {
        format!(
            "a0={} a1={} t0={t0} z={z} m={m} [{case}]",
            letter_name(a0),
            letter_name(a1)
        )
    });
    result
}

/// Given `zf = gzh` with `f`, `g` nonempty and `az` not occurring in `zf`,
/// `agz'` is unbordered where `az'` is the longest unbordered prefix of `az`.
pub fn check_lemma3(z: &Word, f: &Word, g: &Word, h: &Word, a: u8) -> CheckResult {
    const ID: &str = "lemma3";
    let zf = [z.symbols(), f.symbols()].concat();
    let gzh = [g.symbols(), z.symbols(), h.symbols()].concat();
    let az = [&[a][..], z.symbols()].concat();
    if f.is_empty() || g.is_empty() || zf != gzh || find(&zf, &az).is_some() {
        return CheckResult::not_applicable(ID);
    }
    let zp = &z.symbols()[..longest_unbordered_prefix_len(&az) - 1];
    let agzp = [&[a][..], g.symbols(), zp].concat();
    let mut result = CheckResult::new(ID);
    result.record(unbordered(&agzp), || {
        format!("z={z} f={f} g={g} h={h} a={}", letter_name(a))
    });
    result
}

/// Every lemma-3 instance whose `zf` equals `y`, with `a` ranging over the
/// first `alphabet` letters.
pub fn lemma3_instances(y: &Word, alphabet: u8) -> CheckResult {
    let mut result = CheckResult::new("lemma3");
    let ys = y.symbols();
    let k = alphabet.max(y.alphabet());
    let word = |s: &[u8]| Word::from_parts(s.to_vec(), k);
    for zlen in 0..ys.len() {
        let (z, f) = ys.split_at(zlen);
        for pos in occurrences(ys, z).into_iter().filter(|&p| p >= 1 && p + zlen <= ys.len()) {
            let (g, h) = (&ys[..pos], &ys[pos + zlen..]);
            for a in 0..alphabet {
                result.merge(check_lemma3(&word(z), &word(f), &word(g), &word(h), a));
            }
        }
    }
    result
}

/// Lemma 1 on a single word: if some unbordered factor of length `μ(w)`
/// occurs twice then `μ(w) = ∂(w)`.
pub fn lemma1_instances(w: &Word) -> CheckResult {
    const ID: &str = "lemma1";
    let s = w.symbols();
    if s.is_empty() {
        return CheckResult::not_applicable(ID);
    }
    let (mu, _) = mu_of(s);
    let mut factors: Vec<&[u8]> = s.windows(mu).filter(|f| unbordered(f)).collect();
    factors.sort_unstable();
    if !factors.windows(2).any(|p| p[0] == p[1]) {
        return CheckResult::not_applicable(ID);
    }
    let mut result = CheckResult::new(ID);
    result.record(mu == period_of(s), || format!("w={w}"));
    result
}

/// The corollary on one unbordered `w`: every Duval extension `wu` with
/// `|wu| <= max_total` in which `w` occurs twice is trivial.
pub fn corollary_instances(w: &Word, max_total: usize) -> CheckResult {
    const ID: &str = "corollary-lemma1";
    let s = w.symbols();
    if s.is_empty() || !unbordered(s) || max_total <= s.len() {
        return CheckResult::not_applicable(ID);
    }
    let n = s.len();
    let mut result = CheckResult::not_applicable(ID);
    visit_extensions(s, max_total - n, &mut |wu| {
        if find(&wu[1..], s).is_some() {
            result.record(period_of(wu) == n, || {
                format!("w={w} u={}", Word::from_parts(wu[n..].to_vec(), w.alphabet()))
            });
        }
    });
    result
}

/// Lemma 1 and its corollary over all canonical words of length `1..=n`.
pub fn check_lemma1_and_corollary(alphabet: u8, max_len: usize) -> CheckResult {
    let mut result = CheckResult::new("lemma1+corollary");
    for len in 1..=max_len {
        crate::enumerate::for_each_word(alphabet, len, true, &[], |w| {
            result.merge(lemma1_instances(w));
            result.merge(corollary_instances(w, max_len));
        });
    }
    result
}

/// Theorem 1 on a single pair: a minimal extension's `u` occurs in `w`.
pub fn check_theorem1_pair(w: &Word, u: &Word) -> CheckResult {
    const ID: &str = "theorem1";
    match classify_extension(w, u) {
        Ok(c) if c.verdict == Verdict::NontrivialMinimal => {
            let mut result = CheckResult::new(ID);
            result.record(u.is_factor_of(w), || format!("w={w} u={u}"));
            result
        }
        _ => CheckResult::not_applicable(ID),
    }
}

/// Theorem 1 over every minimal nontrivial extension of `w`.
pub fn theorem1_instances(w: &Word) -> CheckResult {
    const ID: &str = "theorem1";
    let Ok(minimal) = minimal_extensions(w) else {
        return CheckResult::not_applicable(ID);
    };
    let mut result = CheckResult::not_applicable(ID);
    for u in minimal {
        result.record(u.is_factor_of(w), || format!("w={w} u={u}"));
    }
    result
}

/// Prefix-minimal extensions of `w` agree with the structural description
/// `u = u'a`, `w = u'bw'`, `a != b`. Every minimal `u` is checked, and so is
/// every structurally-formed `u` the enumeration finds.
pub fn minimality_form_instances(w: &Word) -> CheckResult {
    const ID: &str = "minimal-structure";
    let Ok(minimal) = minimal_extensions(w) else {
        return CheckResult::not_applicable(ID);
    };
    let mut result = CheckResult::not_applicable(ID);
    for u in &minimal {
        result.record(has_structural_form(w, u), || format!("w={w} u={u} minimal but not structural"));
    }
    let n = w.len();
    visit_extensions(w.symbols(), n, &mut |wu| {
        let u = Word::from_parts(wu[n..].to_vec(), w.alphabet());
        if has_structural_form(w, &u) {
            result.record(minimal.contains(&u), || format!("w={w} u={u} structural but not minimal"));
        }
    });
    result
}

/// Lemma 7, Lemma 2 and the context invariants on the proof context of
/// every nontrivial extension of `w`. On these inputs the lemmas are
/// asserted: a stalled sequence or a failed precondition counts as a
/// violation.
pub fn context_instances(w: &Word) -> [CheckResult; 4] {
    let mut lemma7 = CheckResult::not_applicable("lemma7-context");
    let mut lemma2 = CheckResult::not_applicable("lemma2-context");
    let mut lemma2_odd = CheckResult::not_applicable("lemma2-odd-form-context");
    let mut invariants = CheckResult::not_applicable("proof-context");
    let Ok(extensions) = nontrivial_extensions(w) else {
        return [lemma7, lemma2, lemma2_odd, invariants];
    };
    for u in extensions {
        let ctx = match extract_proof_context(w, &u) {
            Ok(ctx) => ctx,
            Err(e) => {
                invariants.record(false, || format!("w={w} u={u}: {e}"));
                continue;
            }
        };
        let broken = ctx.invariant_violations();
        invariants.record(broken.is_empty(), || format!("w={w} u={u}: {}", broken.join(", ")));
        if ctx.degenerate {
            continue;
        }
        let label = || format!("w={w} u={u} z={} t0={}", ctx.z, ctx.t0);
        let seq = match compute_duval_sequence(ctx.a, ctx.b, &ctx.t0) {
            Ok(seq) => seq,
            Err(e) => {
                lemma7.record(false, || format!("{}: {e}", label()));
                continue;
            }
        };
        let l7 = check_lemma7(&seq);
        if l7.is_not_applicable() {
            lemma7.record(false, || format!("{}: sequence did not terminate", label()));
        } else {
            lemma7.record(l7.passed(), || format!("{}: {}", label(), l7.violations.join("; ")));
        }
        for (form, acc) in [(Lemma2Form::Stated, &mut lemma2), (Lemma2Form::OddIncludesOne, &mut lemma2_odd)] {
            let l2 = check_lemma2_form(&ctx.t0, ctx.a, ctx.b, &ctx.z, form);
            if l2.is_not_applicable() {
                acc.record(false, || format!("{}: preconditions fail on extracted context", label()));
            } else {
                acc.record(l2.passed(), || format!("{}: {}", label(), l2.violations.join("; ")));
            }
        }
    }
    [lemma7, lemma2, lemma2_odd, invariants]
}

fn power(symbol: u8, count: usize) -> impl Iterator<Item = u8> {
    std::iter::repeat_n(symbol, count)
}

/// `w = a^n b a^(n+m) b b`, `u = a^(n+m) b a^n`: a nontrivial extension with
/// `|u| = |w| - 2`.
pub fn family_tightness(n: usize, m: usize) -> Result<(Word, Word)> {
    if n < 1 || m < 1 {
        return Err(Error::precondition("tightness family needs n, m >= 1"));
    }
    let w: Vec<u8> = power(0, n)
        .chain(power(1, 1))
        .chain(power(0, n + m))
        .chain(power(1, 2))
        .collect();
    let u: Vec<u8> = power(0, n + m).chain(power(1, 1)).chain(power(0, n)).collect();
    Ok((Word::from_parts(w, 2), Word::from_parts(u, 2)))
}

/// `a^n b a^(n+1) b a^n b a^(n+2) b a^n b a^(n+1) b a^n`, of length `7n+10`
/// with `μ = 3n+6` and `∂ = 4n+7`.
pub fn family_assous_pouzet(n: usize) -> Result<Word> {
    if n < 1 {
        return Err(Error::precondition("Assous-Pouzet family needs n >= 1"));
    }
    let blocks = [n, n + 1, n, n + 2, n, n + 1, n];
    let mut symbols = Vec::with_capacity(7 * n + 10);
    for (i, &len) in blocks.iter().enumerate() {
        if i > 0 {
            symbols.push(1);
        }
        symbols.extend(power(0, len));
    }
    Ok(Word::from_parts(symbols, 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    const EXAMPLE_W: &str = "abaabbabaababb";

    #[test]
    fn classification_examples() {
        let c = classify_extension(&w(EXAMPLE_W), &w("aaba")).unwrap();
        assert_eq!(c.verdict, Verdict::NontrivialNonMinimal);
        assert_eq!((c.period_wu, c.mu_wu), (15, 14));

        let c = classify_extension(&w(EXAMPLE_W), &w("aa")).unwrap();
        assert_eq!(c.verdict, Verdict::NontrivialMinimal);
        assert!(c.structural_form);

        let c = classify_extension(&w(EXAMPLE_W), &w("abaaba")).unwrap();
        assert_eq!(c.verdict, Verdict::NontrivialMinimal);
        assert_eq!(c.period_wu, 17);
        assert!(c.structural_form);

        let c = classify_extension(&w("ab"), &w("a")).unwrap();
        assert_eq!(c.verdict, Verdict::Trivial);
        assert_eq!(c.witness, None);

        let c = classify_extension(&w("ab"), &w("b")).unwrap();
        assert_eq!(c.verdict, Verdict::NotExtension);
        let witness = c.witness.unwrap();
        assert_eq!(w("abb").factor(witness).unwrap(), w("abb"));
    }

    #[test]
    fn classification_preconditions() {
        assert!(classify_extension(&w("aba"), &w("a")).is_err());
        assert!(classify_extension(&w("ab"), &w("")).is_err());
        assert!(classify_extension(&w(""), &w("a")).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let found = enumerate_extensions(&w("abaabb"), 4).unwrap();
        let hit = found.iter().find(|(u, _)| *u == w("aaba")).unwrap();
        assert!(hit.1.verdict.is_nontrivial());

        let found = enumerate_extensions(&w("ab"), 2).unwrap();
        let us: Vec<String> = found.iter().map(|(u, _)| u.to_string()).collect();
        assert_eq!(us, ["a", "ab"]);
        assert!(found.iter().all(|(_, c)| c.verdict == Verdict::Trivial));

        let found = enumerate_extensions(&w("ba"), 1).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].0, w("b"));
        assert_eq!(found[0].1.verdict, Verdict::Trivial);

        assert!(enumerate_extensions(&w("aa"), 3).is_err());
    }

    #[test]
    fn max_extension_examples() {
        assert_eq!(max_nontrivial_extension_len(&w("abaabb")).unwrap(), 4);
        assert_eq!(max_nontrivial_extension_len(&w("ab")).unwrap(), 0);
        assert_eq!(max_nontrivial_extension_len(&w(EXAMPLE_W)).unwrap(), 6);
    }

    #[test]
    fn proof_context_of_first_example() {
        let ctx = extract_proof_context(&w("abaabb"), &w("aaba")).unwrap();
        assert_eq!(ctx.z, w("b"));
        assert_eq!((ctx.a, ctx.b), (1, 0));
        assert_eq!(ctx.w_prime, w("abaa"));
        assert_eq!(ctx.u_prime, w("a"));
        assert_eq!(ctx.r, w("a"));
        assert_eq!(ctx.t0, w("ba"));
        assert_eq!(ctx.z0, w(""));
        assert_eq!(ctx.z1, w("b"));
        assert!(!ctx.degenerate);
        assert!(ctx.invariant_violations().is_empty());
    }

    #[test]
    fn proof_context_of_long_example() {
        let ctx = extract_proof_context(&w(EXAMPLE_W), &w("abaaba")).unwrap();
        assert_eq!(ctx.t0, ctx.z.concat(&ctx.r));
        let rebuilt_w = ctx.w_prime.pushed(ctx.a).concat(&ctx.z);
        let rebuilt_u = ctx.u_prime.pushed(ctx.b).concat(&ctx.z).concat(&ctx.r);
        assert_eq!(rebuilt_w, w(EXAMPLE_W));
        assert_eq!(rebuilt_u, w("abaaba"));
        assert!(ctx.invariant_violations().is_empty());
    }

    #[test]
    fn proof_context_rejects_trivial() {
        assert!(matches!(
            extract_proof_context(&w("ab"), &w("aba")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn sequence_terminates_immediately() {
        let seq = compute_duval_sequence(0, 1, &w("ba")).unwrap();
        assert_eq!(seq.m, Some(1));
        assert_eq!(seq.s[0], w("ba"));
        assert!(check_lemma7(&seq).passed());
    }

    #[test]
    fn sequence_on_ab() {
        // bab has shortest border b, so s_1 = ε and t_1 = t_0; then aab is
        // unbordered, so s_2 = ab = t_1
        let seq = compute_duval_sequence(0, 1, &w("ab")).unwrap();
        assert_eq!(seq.s[0], w(""));
        assert_eq!(seq.t[1], w("ab"));
        assert_eq!(seq.m, Some(2));
        assert_eq!(seq.status, SequenceStatus::Terminated);
        assert!(check_lemma7(&seq).passed());
    }

    #[test]
    fn sequence_preconditions() {
        assert!(compute_duval_sequence(0, 0, &w("ab")).is_err());
        assert!(compute_duval_sequence(0, 1, &w("")).is_err());
    }

    #[test]
    fn sequence_definitions_hold() {
        let seq = compute_duval_sequence(1, 0, &w("baabab")).unwrap();
        for i in 1..=seq.s.len() {
            let s = &seq.s[i - 1];
            assert_eq!(seq.s_prime[i - 1].concat(&seq.s_dprime[i - 1]), *s);
            assert_eq!(seq.t[i].concat(&seq.s_dprime[i - 1]), seq.t[i - 1]);
        }
    }

    #[test]
    fn lemma7_not_applicable_on_nonprogress() {
        let mut seq = compute_duval_sequence(0, 1, &w("ba")).unwrap();
        seq.status = SequenceStatus::NonProgress;
        seq.m = None;
        assert!(check_lemma7(&seq).is_not_applicable());
    }

    #[test]
    fn lemma2_cases() {
        // a0 t0 = aba is bordered although m = 1
        let r = check_lemma2(&w("ba"), 0, 1, &w("b"));
        assert_eq!(r.status, crate::check::CheckStatus::Fail);
        assert!(check_lemma2(&w("ba"), 0, 1, &w("a")).is_not_applicable());
        let ctx = extract_proof_context(&w("abaabb"), &w("aaba")).unwrap();
        assert!(check_lemma2(&ctx.t0, ctx.a, ctx.b, &ctx.z).passed());
    }

    #[test]
    fn lemma2_stated_m1_clause_fails_on_extracted_context() {
        let ctx = extract_proof_context(&w("abaabb"), &w("aab")).unwrap();
        assert_eq!((ctx.z.clone(), ctx.t0.clone(), ctx.a, ctx.b), (w("b"), w("b"), 1, 0));
        let seq = compute_duval_sequence(ctx.a, ctx.b, &ctx.t0).unwrap();
        assert_eq!(seq.m, Some(1));
        assert!(check_lemma7(&seq).passed());
        let stated = check_lemma2(&ctx.t0, ctx.a, ctx.b, &ctx.z);
        assert_eq!(stated.status, crate::check::CheckStatus::Fail);
        let odd = check_lemma2_form(&ctx.t0, ctx.a, ctx.b, &ctx.z, Lemma2Form::OddIncludesOne);
        assert!(odd.passed());
    }

    #[test]
    fn lemma3_cases() {
        // zf = gzh with z = a, f = ba, g = ab, h = ε; az = ba occurs in aba
        assert!(check_lemma3(&w("a"), &w("ba"), &w("ab"), &w(""), 1).is_not_applicable());
        assert!(check_lemma3(&w("ab"), &w("b"), &w(""), &w("b"), 0).is_not_applicable());
        // zf = aab = (a)(a)(b): z = a, f = ab, g = a, h = b, letter b
        assert!(check_lemma3(&w("a"), &w("ab"), &w("a"), &w("b"), 1).passed());
        assert!(lemma3_instances(&w("abaab"), 2).passed());
    }

    #[test]
    fn theorem1_pairs() {
        assert!(check_theorem1_pair(&w(EXAMPLE_W), &w("aa")).passed());
        assert!(check_theorem1_pair(&w(EXAMPLE_W), &w("abaaba")).passed());
        assert!(check_theorem1_pair(&w(EXAMPLE_W), &w("aaba")).is_not_applicable());
    }

    #[test]
    fn minimal_extensions_of_example_word() {
        let minimal = minimal_extensions(&w(EXAMPLE_W)).unwrap();
        assert!(minimal.contains(&w("aa")));
        assert!(minimal.contains(&w("abaaba")));
        assert!(!minimal.contains(&w("aaba")));
        assert!(theorem1_instances(&w(EXAMPLE_W)).passed());
        assert!(minimality_form_instances(&w(EXAMPLE_W)).passed());
    }

    #[test]
    fn lemma1_examples() {
        assert!(lemma1_instances(&w("a")).is_not_applicable());
        assert!(check_lemma1_and_corollary(1, 1).passed());
        assert!(lemma1_instances(&w("abab")).passed());
        assert!(check_lemma1_and_corollary(2, 8).passed());
    }

    #[test]
    fn tightness_examples() {
        assert_eq!(family_tightness(1, 1).unwrap(), (w("abaabb"), w("aaba")));
        let (tw, tu) = family_tightness(2, 1).unwrap();
        assert_eq!(tw, w("aabaaabb"));
        assert_eq!(tu, w("aaabaa"));
        let (tw, tu) = family_tightness(1, 2).unwrap();
        assert_eq!((tw.clone(), tu.clone()), (w("abaaabb"), w("aaaba")));
        assert_eq!(tu.len(), tw.len() - 2);
        assert!(classify_extension(&tw, &tu).unwrap().verdict.is_nontrivial());
        assert!(family_tightness(0, 1).is_err());
    }

    #[test]
    fn assous_pouzet_examples() {
        for (n, len, mu, period) in [(1, 17, 9, 11), (2, 24, 12, 15), (3, 31, 15, 19)] {
            let x = family_assous_pouzet(n).unwrap();
            assert_eq!(x.len(), len);
            assert_eq!(mu_of(x.symbols()).0, mu);
            assert_eq!(period_of(x.symbols()), period);
        }
        assert_eq!(family_assous_pouzet(1).unwrap(), w("abaababaaababaaba"));
        assert!(family_assous_pouzet(0).is_err());
    }
}
