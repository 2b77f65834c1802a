//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use wordlab::duval::{self, Verdict};
use wordlab::periodicity::{self, border_table, periods_all, shortest_border};
use wordlab::search::{self, CampaignConfig, CampaignReport, Target};
use wordlab::{critical, enumerate, output, CheckResult, Word};

const BUDGET_1: Duration = Duration::from_secs(1);
const BUDGET_2: Duration = Duration::from_secs(5);
const BUDGET_3: Duration = Duration::from_secs(600);
const BUDGET_4: Duration = Duration::from_secs(60);
const BUDGET_5: Duration = Duration::from_secs(300);
const BUDGET_6: Duration = Duration::from_secs(10);
const BUDGET_7: Duration = Duration::from_secs(120);
const BUDGET_8: Duration = Duration::from_secs(600);

const RANDOM_SEED: u64 = 0x5eed_0009;
const RANDOM_WORDS: usize = 10_000;
const RANDOM_MAX_LEN: usize = 40;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(budget: Duration, started: Instant) -> Result<(), String> {
    let took = started.elapsed();
    ensure(took < budget, || format!("took {took:.2?}, budget {budget:?}"))
}

fn campaign(target: Target, k: u8, n: usize, workers: usize) -> CampaignReport {
    search::run(&CampaignConfig::new(target, k, n).with_workers(workers)).unwrap()
}

fn clean(r: &CampaignReport) -> Result<(), String> {
    ensure(r.verified && r.violations.is_empty(), || {
        format!("{} k={} n={}: {:?}", r.target, r.alphabet, r.max_len, r.violations.first())
    })
}

fn criterion_1() -> Outcome {
    let started = Instant::now();
    let a = output::analyze(&w("abaaba")).unwrap();
    let p = &a.periodicity;
    ensure((p.period, p.mu, p.periods.as_slice()) == (3, 3, &[3, 5, 6][..]), || format!("{p:?}"))?;
    let b = output::analyze(&w("abaab")).unwrap();
    ensure(b.local.critical_points == [2, 4], || format!("{:?}", b.local.critical_points))?;
    ensure(b.local.local_periods == [2, 3, 1, 3], || format!("{:?}", b.local.local_periods))?;
    let words: Vec<String> = b.local.witnesses.iter().map(Word::to_string).collect();
    ensure(words == ["ba", "aab", "a", "baa"], || format!("repetition words {words:?}"))?;
    within(BUDGET_1, started)?;
    Ok("abaaba: period 3, mu 3, periods {3,5,6}; abaab: points {2,4}".into())
}

fn criterion_2() -> Outcome {
    let started = Instant::now();
    let base = w("abaabbabaababb");
    let c = duval::classify_extension(&base, &w("aaba")).unwrap();
    ensure(
        (c.verdict, c.period_wu, c.mu_wu) == (Verdict::NontrivialNonMinimal, 15, 14),
        || format!("u=aaba: {c:?}"),
    )?;
    let c = duval::classify_extension(&base, &w("aa")).unwrap();
    ensure(c.verdict == Verdict::NontrivialMinimal, || format!("u=aa: {c:?}"))?;
    let c = duval::classify_extension(&base, &w("abaaba")).unwrap();
    ensure((c.verdict, c.period_wu) == (Verdict::NontrivialMinimal, 17), || format!("v=abaaba: {c:?}"))?;
    for u in ["aaba", "aa", "abaaba"] {
        let wu = [base.symbols(), &common::bytes(u)].concat();
        ensure(common::is_duval_extension(base.symbols(), &common::bytes(u)), || format!("oracle rejects {u}"))?;
        ensure(common::period(&wu) != base.len(), || format!("oracle finds {u} trivial"))?;
    }
    let longest = duval::max_nontrivial_extension_len(&base).unwrap();
    ensure(longest == 6, || format!("longest nontrivial |u| = {longest}"))?;
    within(BUDGET_2, started)?;
    Ok("aaba non-minimal (15, 14), aa minimal, abaaba minimal (17), longest |u| = 6".into())
}

/// Extensions by depth-first search using only the oracle's definition;
/// the extension property is closed under taking prefixes of `u`.
fn oracle_longest_nontrivial(w: &[u8], k: u8) -> usize {
    fn go(w: &[u8], u: &mut Vec<u8>, k: u8, best: &mut usize) {
        if u.len() >= 2 * w.len() {
            return;
        }
        for c in 0..k {
            u.push(c);
            if common::is_duval_extension(w, u) {
                if common::period(&[w, u.as_slice()].concat()) != w.len() {
                    *best = (*best).max(u.len());
                }
                go(w, u, k, best);
            }
            u.pop();
        }
    }
    let mut best = 0;
    go(w, &mut Vec::new(), k, &mut best);
    best
}

fn criterion_3() -> Outcome {
    let started = Instant::now();
    let mut tight = Vec::new();
    for (k, n, lengths) in [(2u8, 9usize, 6..=9usize), (3, 7, 6..=7)] {
        let r = campaign(Target::MainTheorem, k, n, 1);
        clean(&r)?;
        for len in lengths {
            let case = r.tight_cases.iter().find(|t| t.w.len() == len);
            let case = case.ok_or_else(|| format!("k={k}: no tight case with |w| = {len}"))?;
            let (ws, us) = (case.w.symbols(), case.u.symbols());
            ensure(
                common::is_duval_extension(ws, us) && common::period(&[ws, us].concat()) != ws.len(),
                || format!("oracle rejects tight case {} {}", case.w, case.u),
            )?;
        }
        tight.push(r.tight_cases.len());
    }
    for len in 1..=7 {
        for s in common::all_words(2, len) {
            if common::is_canonical(&s) && common::is_unbordered(&s) {
                let best = oracle_longest_nontrivial(&s, 2);
                ensure(best + 1 < len || best == 0, || format!("oracle counterexample at {}", common::text(&s)))?;
                let fast = duval::max_nontrivial_extension_len(&Word::new(s.clone(), 2).unwrap()).unwrap();
                ensure(fast == best, || format!("{}: fast {fast}, oracle {best}", common::text(&s)))?;
            }
        }
    }
    within(BUDGET_3, started)?;
    Ok(format!(
        "0 violations at binary 9 and ternary 7; {} and {} tight cases; oracle agrees up to 7",
        tight[0], tight[1]
    ))
}

fn criterion_4() -> Outcome {
    let started = Instant::now();
    for n in 1..=4 {
        for m in 1..=4 {
            let (w, u) = duval::family_tightness(n, m).unwrap();
            let c = duval::classify_extension(&w, &u).unwrap();
            ensure(c.verdict.is_nontrivial(), || format!("n={n} m={m}: {c:?}"))?;
            ensure(u.len() + 2 == w.len(), || format!("n={n} m={m}: |u|={} |w|={}", u.len(), w.len()))?;
            ensure(common::is_duval_extension(w.symbols(), u.symbols()), || format!("n={n} m={m}: oracle"))?;
        }
    }
    within(BUDGET_4, started)?;
    Ok("16 members nontrivial with |u| = |w| - 2".into())
}

fn criterion_5() -> Outcome {
    let started = Instant::now();
    let mut scanned = 0;
    for (k, n) in [(2u8, 16usize), (3, 10)] {
        let r = campaign(Target::Corollary, k, n, 4);
        clean(&r)?;
        scanned += r.words_scanned;
    }
    within(BUDGET_5, started)?;
    Ok(format!("0 violations over {scanned} canonical words"))
}

fn criterion_6() -> Outcome {
    let started = Instant::now();
    for n in 1..=5 {
        let w = duval::family_assous_pouzet(n).unwrap();
        let s = w.symbols();
        let got = (w.len(), periodicity::mu(&w).unwrap().0, periodicity::period(&w).unwrap());
        let oracle = (s.len(), common::mu(s), common::period(s));
        let want = (7 * n + 10, 3 * n + 6, 4 * n + 7);
        ensure(got == want && oracle == want, || format!("n={n}: got {got:?}, oracle {oracle:?}, want {want:?}"))?;
    }
    within(BUDGET_6, started)?;
    Ok("n = 1..5 match |w| = 7n+10, mu = 3n+6, period = 4n+7".into())
}

fn criterion_7() -> Outcome {
    let started = Instant::now();
    let mut vacuous = 0;
    for (k, n) in [(2u8, 14usize), (3, 9)] {
        let r = campaign(Target::Cft, k, n, 1);
        clean(&r)?;
        vacuous += r.vacuous;
    }
    for len in 2..=10 {
        for s in common::all_words(2, len) {
            let per = common::period(&s);
            if per >= 2 {
                let p = common::critical_points(&s);
                ensure(p.iter().any(|&p| p < per), || format!("oracle counterexample {}", common::text(&s)))?;
            }
        }
    }
    within(BUDGET_7, started)?;
    Ok(format!("0 violations at binary 14 and ternary 9 ({vacuous} unary words vacuous)"))
}

fn context_results(k: u8, max_len: usize) -> Vec<CheckResult> {
    let mut acc: Vec<CheckResult> = Vec::new();
    for len in 1..=max_len {
        for word in enumerate::words(k, len, true) {
            for (i, r) in duval::context_instances(&word).into_iter().enumerate() {
                match acc.get_mut(i) {
                    Some(a) => a.merge(r),
                    None => acc.push(r),
                }
            }
        }
    }
    acc
}

fn criterion_8() -> Outcome {
    let started = Instant::now();
    let r = campaign(Target::Lemmas, 2, 10, 4);
    let asserted = ["lemma1", "lemma4", "lemma5", "lemma6", "theorem1"];
    for id in asserted {
        let c = r.checks.iter().find(|c| c.lemma == id).ok_or_else(|| format!("{id} missing"))?;
        ensure(c.passed() && c.instances > 0, || format!("{id}: {:?}", c.violations.first()))?;
    }

    let mut failures = Vec::new();
    let mut notes = Vec::new();
    for k in [2u8, 3] {
        let ctx = context_results(k, 8);
        let [l7, l2, l2_odd, inv] = &ctx[..] else {
            return Err("unexpected context result shape".into());
        };
        for c in [l7, l2, inv] {
            if !c.passed() {
                failures.push(format!(
                    "k={k} {}: {} of {} fail, e.g. {}",
                    c.lemma,
                    c.violation_count,
                    c.instances,
                    c.violations.first().map_or("", String::as_str)
                ));
            }
        }
        notes.push(format!(
            "k={k}: {} contexts, odd-m form {} of {} hold",
            l7.instances,
            l2_odd.instances - l2_odd.violation_count,
            l2_odd.instances
        ));
    }

    // arbitrary (a0, a1, t0): recorded only
    let (mut terminated, mut stalled, mut l7_ok, mut l2_ok, mut l2_na, mut total) = (0, 0, 0, 0, 0, 0);
    for len in 1..=8 {
        for t0 in common::all_words(2, len) {
            let t0 = Word::new(t0, 2).unwrap();
            for (a0, a1) in [(0, 1), (1, 0)] {
                total += 1;
                let seq = duval::compute_duval_sequence(a0, a1, &t0).unwrap();
                if seq.is_terminated() {
                    terminated += 1;
                } else {
                    stalled += 1;
                }
                l7_ok += usize::from(duval::check_lemma7(&seq).passed());
                let z = t0.prefix(1);
                let l2 = duval::check_lemma2(&t0, a0, a1, &z);
                l2_ok += usize::from(l2.passed());
                l2_na += usize::from(l2.is_not_applicable());
            }
        }
    }
    notes.push(format!(
        "arbitrary inputs (recorded): {total} sequences, {terminated} terminated, {stalled} stalled, \
         lemma7 {l7_ok} hold, lemma2 {l2_ok} hold / {l2_na} n/a"
    ));
    within(BUDGET_8, started)?;
    if failures.is_empty() {
        Ok(format!("lemma sweeps clean at binary 10; {}", notes.join("; ")))
    } else {
        Err(format!(
            "lemma sweeps clean at binary 10, but on proof contexts: {}; {}",
            failures.join("; "),
            notes.join("; ")
        ))
    }
}

fn compare(w: &Word) -> Result<(), String> {
    let s = w.symbols();
    let n = s.len();
    let label = || w.to_string();
    let table = border_table(w).unwrap();
    for i in 1..=n {
        let longest = common::borders(&s[..i]).last().copied().unwrap_or(0);
        ensure(table.get(i) == longest, || format!("{}: border table at {i}", label()))?;
    }
    ensure(periods_all(w).unwrap() == common::periods(s), || format!("{}: periods", label()))?;
    ensure(periodicity::period(w).unwrap() == common::period(s), || format!("{}: period", label()))?;
    ensure(periodicity::mu(w).unwrap().0 == common::mu(s), || format!("{}: mu", label()))?;
    ensure(
        periodicity::is_unbordered(w).unwrap() == common::is_unbordered(s),
        || format!("{}: unbordered", label()),
    )?;
    let shortest = shortest_border(w).unwrap().map_or(0, |b| b.len());
    ensure(
        shortest == common::borders(s).first().copied().unwrap_or(0),
        || format!("{}: shortest border", label()),
    )?;
    if n >= 2 {
        for p in 1..n {
            let l = critical::local_period(w, p).unwrap();
            ensure(l == common::local_period(s, p), || format!("{}: local period at {p}", label()))?;
        }
        ensure(
            critical::critical_points(w).unwrap() == common::critical_points(s),
            || format!("{}: critical points", label()),
        )?;
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let mut exhaustive = 0;
    for len in 1..=12 {
        for s in common::all_words(2, len) {
            compare(&Word::new(s, 2).unwrap())?;
            exhaustive += 1;
        }
    }
    let mut rng = StdRng::seed_from_u64(RANDOM_SEED);
    for _ in 0..RANDOM_WORDS {
        let len = rng.random_range(1..=RANDOM_MAX_LEN);
        let s: Vec<u8> = (0..len).map(|_| rng.random_range(0..3)).collect();
        compare(&Word::new(s, 3).unwrap())?;
    }
    Ok(format!("{exhaustive} binary words and {RANDOM_WORDS} random ternary words agree"))
}

fn cli_verify(target: &str, k: &str, n: &str, threads: &str) -> Result<(Option<i32>, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_wordlab"))
        .args(["verify", target, "--alphabet", k, "--max-len", n, "--threads", threads])
        .env_remove("WORDLAB_THREADS")
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.status.code(), out.stdout))
}

fn criterion_10() -> Outcome {
    let runs = [
        ("main-theorem", "2", "10"),
        ("corollary", "2", "14"),
        ("cft", "3", "8"),
        ("lemmas", "2", "8"),
        ("extremal-ratio", "2", "14"),
    ];
    for (target, k, n) in runs {
        let one = cli_verify(target, k, n, "1")?;
        let eight = cli_verify(target, k, n, "8")?;
        ensure(one == eight, || format!("{target} k={k} n={n}: outputs differ"))?;
        ensure(!one.1.is_empty(), || format!("{target}: empty output"))?;
        let lib1 = serde_json::to_string(&campaign(target.parse().unwrap(), 3, 7, 1)).unwrap();
        let lib8 = serde_json::to_string(&campaign(target.parse().unwrap(), 3, 7, 8)).unwrap();
        ensure(lib1 == lib8, || format!("{target}: library reports differ at k=3 n=7"))?;
    }
    Ok("all five verify targets byte-identical at --threads 1 and 8".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("worked examples", criterion_1),
        ("Duval extension example", criterion_2),
        ("main theorem", criterion_3),
        ("tightness family", criterion_4),
        ("corollary", criterion_5),
        ("Assous-Pouzet family", criterion_6),
        ("critical factorization", criterion_7),
        ("lemma sweeps", criterion_8),
        ("oracle equivalence", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = check();
        let took = started.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({took:.2?}): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({took:.2?}): {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
