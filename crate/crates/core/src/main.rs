use std::fs;
use std::io::{self, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use wordlab::output::{self, Analysis, ExtensionList, FamilyReport, OutputRecord};
use wordlab::search::{self, CampaignConfig, CampaignReport, Target};
use wordlab::{duval, DuvalClassification, Word};

const OK: u8 = 0;
const FAILED: u8 = 1;
const USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "wordlab", version, about = "Borders, periods and unbordered factors of finite words")]
struct Cli {
    /// Print aligned tables instead of JSON.
    #[arg(long, global = true)]
    plain: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Periods, maximal unbordered factor, local periods and critical points.
    Analyze { word: String },
    /// Classify wu as a Duval extension of the unbordered word w.
    Classify { w: String, u: String },
    /// List the Duval extensions of w up to a length bound.
    Extensions {
        w: String,
        #[arg(long, default_value_t = 8)]
        max_extra: usize,
    },
    /// Run an exhaustive campaign.
    Verify {
        #[arg(value_parser = parse_target)]
        target: Target,
        #[arg(long, default_value_t = 2)]
        alphabet: u8,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, env = "WORDLAB_THREADS", value_parser = clap::value_parser!(u32).range(1..))]
        threads: Option<u32>,
    },
    /// Generate a member of a word family and report its metrics.
    Family {
        name: FamilyName,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// Analyze every word of a newline-delimited file, one JSON line each.
    Batch { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Tightness,
    AssousPouzet,
}

fn parse_target(s: &str) -> Result<Target, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Target::ALL.iter().map(|t| t.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE)
        }
    }
}

fn run(cli: Cli) -> wordlab::Result<u8> {
    let plain = cli.plain;
    match cli.command {
        Command::Analyze { word } => {
            let a = output::analyze(&Word::decode_text(&word)?)?;
            emit(plain, "analyze", &a, plain_analysis);
            Ok(OK)
        }
        Command::Classify { w, u } => {
            let (w, u) = (Word::decode_text(&w)?, Word::decode_text(&u)?);
            let c = duval::classify_extension(&w, &u)?;
            emit(plain, "classify", &c, plain_classification);
            Ok(OK)
        }
        Command::Extensions { w, max_extra } => {
            let list = output::extensions(&Word::decode_text(&w)?, max_extra)?;
            emit(plain, "extensions", &list, plain_extensions);
            Ok(OK)
        }
        Command::Verify {
            target,
            alphabet,
            max_len,
            threads,
        } => {
            let workers = match threads {
                Some(t) => t as usize,
                None => std::thread::available_parallelism().map_or(1, |n| n.get()),
            };
            let cfg = CampaignConfig::new(target, alphabet, max_len).with_workers(workers);
            let start = Instant::now();
            let report = search::run(&cfg)?;
            emit(plain, "verify", &report, plain_campaign);
            eprintln!("wall time: {:.3}s", start.elapsed().as_secs_f64());
            Ok(if report.verified { OK } else { FAILED })
        }
        Command::Family { name, n, m } => {
            let report = match name {
                FamilyName::Tightness => output::family_tightness(n, m)?,
                FamilyName::AssousPouzet => output::family_assous_pouzet(n)?,
            };
            emit(plain, "family", &report, plain_family);
            Ok(OK)
        }
        Command::Batch { file } => batch(&file),
    }
}

fn batch(path: &PathBuf) -> wordlab::Result<u8> {
    let text = fs::read_to_string(path)
        .map_err(|e| wordlab::Error::Runtime(format!("cannot read {}: {e}", path.display())))?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut code = OK;
    for (i, line) in text.lines().enumerate() {
        if line.is_empty() {
            continue;
        }
        match Word::decode_text(line).and_then(|w| output::analyze(&w)) {
            Ok(a) => {
                let _ = writeln!(out, "{}", OutputRecord::new("analyze", a).to_json_line());
            }
            Err(e) => {
                eprintln!("line {}: {e}", i + 1);
                code = FAILED;
            }
        }
    }
    Ok(code)
}

fn emit<T: Serialize>(plain: bool, command: &'static str, payload: &T, render: fn(&T) -> String) {
    if plain {
        print!("{}", render(payload));
    } else {
        println!("{}", OutputRecord::new(command, payload).to_json());
    }
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut s = String::new();
    for r in rows {
        let mut line = String::new();
        for (c, cell) in r.iter().enumerate() {
            if c + 1 < r.len() {
                line.push_str(&format!("{cell:<w$}  ", w = widths[c]));
            } else {
                line.push_str(cell);
            }
        }
        s.push_str(line.trim_end());
        s.push('\n');
    }
    s
}

fn row<const N: usize>(cells: [&dyn ToString; N]) -> Vec<String> {
    cells.iter().map(|c| c.to_string()).collect()
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn plain_analysis(a: &Analysis) -> String {
    let p = &a.periodicity;
    let mut s = table(&[
        row([&"word", &p.word]),
        row([&"length", &p.length]),
        row([&"period", &p.period]),
        row([&"mu", &format!("{} (start {}, length {})", p.mu, p.mu_start, p.mu_len)]),
        row([&"periods", &join(&p.periods)]),
        row([&"critical points", &join(&a.local.critical_points)]),
    ]);
    if !a.local.local_periods.is_empty() {
        let mut rows = vec![row([&"point", &"local period", &"repetition word", &"critical"])];
        for (i, (&l, r)) in a.local.local_periods.iter().zip(&a.local.witnesses).enumerate() {
            let mark = if l == a.local.period { "*" } else { "" };
            rows.push(row([&(i + 1), &l, r, &mark]));
        }
        s.push('\n');
        s.push_str(&table(&rows));
    }
    s
}

fn classification_rows(c: &DuvalClassification) -> Vec<Vec<String>> {
    let verdict = serde_json::to_value(c.verdict).expect("verdict serializes");
    let witness = c
        .witness
        .map_or_else(|| "-".to_string(), |r| format!("start {}, length {}", r.start, r.len));
    vec![
        row([&"w", &c.w]),
        row([&"u", &c.u]),
        row([&"verdict", &verdict.as_str().unwrap_or_default()]),
        row([&"period(wu)", &c.period_wu]),
        row([&"mu(wu)", &c.mu_wu]),
        row([&"witness", &witness]),
        row([&"structural form", &c.structural_form]),
    ]
}

fn plain_classification(c: &DuvalClassification) -> String {
    table(&classification_rows(c))
}

fn plain_extensions(list: &ExtensionList) -> String {
    let mut rows = vec![row([&"u", &"|u|", &"verdict", &"period(wu)", &"mu(wu)"])];
    for c in &list.extensions {
        let verdict = serde_json::to_value(c.verdict).expect("verdict serializes");
        rows.push(row([&c.u, &c.u.len(), &verdict.as_str().unwrap_or_default(), &c.period_wu, &c.mu_wu]));
    }
    let head = table(&[
        row([&"w", &list.w]),
        row([&"max extra", &list.max_extra]),
        row([&"longest nontrivial |u|", &list.max_nontrivial_len]),
    ]);
    format!("{head}\n{}", table(&rows))
}

fn plain_family(f: &FamilyReport) -> String {
    let p = &f.word;
    let mut rows = vec![
        row([&"family", &f.family]),
        row([&"n", &f.n]),
        row([&"word", &p.word]),
        row([&"length", &p.length]),
        row([&"period", &p.period]),
        row([&"mu", &p.mu]),
    ];
    if let Some(m) = f.m {
        rows.insert(2, row([&"m", &m]));
    }
    if let Some(c) = &f.extension {
        rows.extend(classification_rows(c).into_iter().skip(1));
    }
    table(&rows)
}

fn plain_campaign(r: &CampaignReport) -> String {
    let mut s = table(&[
        row([&"target", &r.target]),
        row([&"alphabet", &r.alphabet]),
        row([&"max length", &r.max_len]),
        row([&"words scanned", &r.words_scanned]),
        row([&"vacuous", &r.vacuous]),
        row([&"verified", &r.verified]),
        row([&"violations", &r.violations.len()]),
        row([&"tight cases", &r.tight_cases.len()]),
    ]);
    if !r.checks.is_empty() {
        let mut rows = vec![row([&"check", &"instances", &"violations", &"status"])];
        for c in &r.checks {
            let status = serde_json::to_value(c.status).expect("status serializes");
            rows.push(row([&c.lemma, &c.instances, &c.violation_count, &status.as_str().unwrap_or_default()]));
        }
        s.push('\n');
        s.push_str(&table(&rows));
    }
    if !r.extremal_records.is_empty() {
        let mut rows = vec![row([&"mu", &"length", &"period", &"ratio", &"count", &"witness"])];
        for e in &r.extremal_records {
            rows.push(row([&e.mu, &e.length, &e.period, &format!("{:.4}", e.ratio), &e.count, &e.witness]));
        }
        s.push('\n');
        s.push_str(&table(&rows));
    }
    if !r.violations.is_empty() {
        let mut rows = vec![row([&"property", &"word", &"extension", &"detail"])];
        for v in &r.violations {
            let ext = v.extension.as_ref().map_or_else(|| "-".to_string(), Word::to_string);
            rows.push(row([&v.property, &v.word, &ext, &v.detail]));
        }
        s.push('\n');
        s.push_str(&table(&rows));
    }
    s
}
