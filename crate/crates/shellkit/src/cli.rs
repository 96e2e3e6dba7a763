//! The `shellkit` command: analyze | pss | count | enumerate | peel |
//! linext | gen, JSON output by default and text with `--text`.
//!
//! Exit status 0 on success (an unshellable complex is a result, not an
//! error), 1 on domain errors, 2 on usage errors.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_traits::Zero;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::family::{self, FacetFamily, Mode, Word};
use crate::generators::{self, ChessboardShape};
use crate::oracle;
use crate::peeling;
use crate::poset;
use crate::search::{self, SearchOptions, WordOrder};
use crate::shelling::{self, CopHooliganTable, PssRowFamily};

#[derive(Parser)]
#[command(
    name = "shellkit",
    version,
    about = "Decide, count and enumerate shellings, peelings and linear extensions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// plain text output instead of JSON
    #[arg(long, global = true)]
    text: bool,

    /// worker threads for per-suffix solving and search partitioning;
    /// results never depend on this
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// cross-check results against the brute-force permutation filter
    /// (families with at most 8 sets)
    #[arg(long, global = true)]
    oracle: bool,

    /// progress lines on stderr, one per search level
    #[arg(long, global = true)]
    verbose: bool,

    /// spill directory for stored search levels (overrides
    /// SHELLKIT_LEVEL_SPILL_DIR)
    #[arg(long, global = true)]
    spill_dir: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify cops and hooligans per suffix and report failure modes
    Analyze {
        /// facet file, `-` for stdin
        file: String,
        /// render the intersection table instead of JSON
        #[arg(long)]
        table: bool,
        /// drop facets contained in other facets before validation
        #[arg(long)]
        maximalize: bool,
    },
    /// Compress the potential setments of each suffix into 012e-rows
    Pss {
        file: String,
        /// include the rows themselves, rendered positionally
        #[arg(long)]
        stats: bool,
        #[arg(long)]
        maximalize: bool,
    },
    /// Count all shellings exactly
    Count {
        file: String,
        /// also report counts by first and by last letter
        #[arg(long)]
        letters: bool,
        #[arg(long)]
        maximalize: bool,
    },
    /// List shellings, one word per line in text mode
    Enumerate {
        file: String,
        /// stop after this many words
        #[arg(long)]
        limit: Option<usize>,
        /// print facet contents instead of indices
        #[arg(long)]
        facets: bool,
        #[arg(long)]
        maximalize: bool,
    },
    /// Peelings of arbitrary set families
    Peel {
        #[command(subcommand)]
        action: PeelAction,
    },
    /// Count the linear extensions of a poset
    Linext {
        /// poset file, `-` for stdin
        file: String,
    },
    /// Emit benchmark facet families on standard output
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
}

#[derive(Subcommand)]
enum PeelAction {
    /// Count all peelings exactly
    Count {
        file: String,
        #[arg(long)]
        letters: bool,
    },
    /// List peelings
    Enumerate {
        file: String,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        facets: bool,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// All 2-subsets of {1..m}
    M2 { m: usize },
    /// Partition matroid transversals for the given block sizes
    Pm { sizes: Vec<usize> },
    /// Spanning trees of an edge-list file (`u v` per line), or `k<m>`
    /// for the complete graph on m vertices
    Trees { graph: String },
    /// Chessboard complex of left-aligned rows of the given lengths
    Cb { lengths: Vec<usize> },
}

/// Runs the command line. `argv` excludes the program name; everything for
/// standard output goes to `out`.
pub fn run(argv: &[String], out: &mut dyn Write) -> i32 {
    let mut full = Vec::with_capacity(argv.len() + 1);
    full.push("shellkit".to_string());
    full.extend(argv.iter().cloned());
    let cli = match Cli::try_parse_from(&full) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli, argv, out) {
        Ok(()) => 0,
        Err(Error::OracleDomain(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

struct Ctx {
    echo: Vec<String>,
    text: bool,
    threads: usize,
    oracle: bool,
    search: SearchOptions,
}

fn dispatch(cli: &Cli, argv: &[String], out: &mut dyn Write) -> Result<()> {
    let ctx = Ctx {
        echo: echo_args(argv),
        text: cli.text,
        threads: cli.threads.max(1),
        oracle: cli.oracle,
        search: SearchOptions {
            threads: cli.threads.max(1),
            spill_dir: cli.spill_dir.clone(),
            verbose: cli.verbose,
            ..SearchOptions::default()
        },
    };
    match &cli.command {
        Command::Analyze {
            file,
            table,
            maximalize,
        } => {
            let (fam, digest) = load_family(file, Mode::Shelling, *maximalize)?;
            cmd_analyze(&ctx, &fam, digest, *table, out)
        }
        Command::Pss {
            file,
            stats,
            maximalize,
        } => {
            let (fam, digest) = load_family(file, Mode::Shelling, *maximalize)?;
            cmd_pss(&ctx, &fam, digest, *stats, out)
        }
        Command::Count {
            file,
            letters,
            maximalize,
        } => {
            let (fam, digest) = load_family(file, Mode::Shelling, *maximalize)?;
            cmd_count(&ctx, &fam, digest, *letters, out)
        }
        Command::Enumerate {
            file,
            limit,
            facets,
            maximalize,
        } => {
            let (fam, digest) = load_family(file, Mode::Shelling, *maximalize)?;
            cmd_enumerate(&ctx, &fam, digest, *limit, *facets, out)
        }
        Command::Peel { action } => match action {
            PeelAction::Count { file, letters } => {
                let (fam, digest) = load_family(file, Mode::Peeling, false)?;
                cmd_count(&ctx, &fam, digest, *letters, out)
            }
            PeelAction::Enumerate {
                file,
                limit,
                facets,
            } => {
                let (fam, digest) = load_family(file, Mode::Peeling, false)?;
                cmd_enumerate(&ctx, &fam, digest, *limit, *facets, out)
            }
        },
        Command::Linext { file } => cmd_linext(&ctx, file, out),
        Command::Gen { family } => cmd_gen(family, out),
    }
}

/// Command echo for reports: tuning flags that cannot affect results are
/// omitted so reruns with different thread counts stay byte-identical.
fn echo_args(argv: &[String]) -> Vec<String> {
    let mut echo = Vec::with_capacity(argv.len());
    let mut skip_value = false;
    for arg in argv {
        if skip_value {
            skip_value = false;
            continue;
        }
        match arg.as_str() {
            "--threads" | "--spill-dir" => skip_value = true,
            "--verbose" => {}
            a if a.starts_with("--threads=") || a.starts_with("--spill-dir=") => {}
            _ => echo.push(arg.clone()),
        }
    }
    echo
}

fn read_input(path: &str) -> Result<(String, String, bool)> {
    let (bytes, is_json) = if path == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        (buf, false)
    } else {
        let is_json = Path::new(path).extension().is_some_and(|e| e == "json");
        (std::fs::read(path)?, is_json)
    };
    let digest = format!("sha256:{:x}", Sha256::digest(&bytes));
    Ok((
        String::from_utf8_lossy(&bytes).into_owned(),
        digest,
        is_json,
    ))
}

fn load_family(path: &str, mode: Mode, maximalize: bool) -> Result<(FacetFamily, String)> {
    let (text, digest, is_json) = read_input(path)?;
    let mut lists: Vec<Vec<String>> = if is_json {
        serde_json::from_str(&text).map_err(|e| Error::FacetJson(e.to_string()))?
    } else {
        family::facet_lines(&text)
    };
    if maximalize {
        lists = family::maximalize(lists);
    }
    Ok((FacetFamily::from_tokens(&lists, mode)?, digest))
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Shelling => "shelling",
        Mode::Peeling => "peeling",
    }
}

fn decimal(c: &num_bigint::BigUint) -> String {
    c.to_string()
}

fn one_based(set: crate::sets::IndexSubset) -> Vec<usize> {
    set.iter().map(|i| i + 1).collect()
}

/// Nonempty potential setments of one suffix; the empty one always exists
/// and is left out of reported totals.
fn suffix_pss_count(rows: &PssRowFamily, k: usize) -> num_bigint::BigUint {
    let total: num_bigint::BigUint = rows
        .rows(k)
        .iter()
        .map(crate::rows::Row012e::cardinality)
        .sum();
    if rows.is_pss(crate::sets::IndexSubset::EMPTY, k) {
        total - 1u32
    } else {
        total
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct TimingJson {
    classify: u128,
    solve: u128,
    search: u128,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct WitnessJson {
    suffix: usize,
    hooligan: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct FailuresJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    type1: Option<Option<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    type2: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    type2_witnesses: Option<Vec<WitnessJson>>,
    type3: bool,
    type4: bool,
}

fn failures_json(
    table: Option<&CopHooliganTable>,
    rows: &PssRowFamily,
    no_full_words: bool,
) -> FailuresJson {
    let type3 = shelling::detect_type3(rows);
    let (type1, type2, type2_witnesses) = match table {
        Some(table) => {
            let type1 = shelling::detect_type1(table)
                .map(|ks| ks.into_iter().map(|k| k + 1).collect::<Vec<_>>());
            let (t2, wit) = shelling::detect_type2(table);
            let witnesses = t2.then(|| {
                wit.into_iter()
                    .map(|(k, h)| WitnessJson {
                        suffix: k + 1,
                        hooligan: h + 1,
                    })
                    .collect()
            });
            (Some(type1), Some(t2), witnesses)
        }
        None => (None, None, None),
    };
    FailuresJson {
        type1,
        type2,
        type2_witnesses,
        type3,
        type4: no_full_words,
    }
}

fn failures_text(f: &FailuresJson) -> String {
    let mut parts = Vec::new();
    if let Some(Some(ks)) = &f.type1 {
        parts.push(format!(
            "type1 (cop-less suffixes {})",
            ks.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        ));
    }
    if f.type2 == Some(true) {
        parts.push("type2 (every suffix has a non-policeable hooligan)".into());
    }
    if f.type3 {
        parts.push("type3 (no full-cosize setment)".into());
    }
    if f.type4 {
        parts.push("type4 (no full words)".into());
    }
    if parts.is_empty() {
        "none".into()
    } else {
        parts.join("; ")
    }
}

fn oracle_guard(fam: &FacetFamily) -> Result<()> {
    if fam.len() > 8 {
        return Err(Error::OracleDomain(format!(
            "--oracle needs at most 8 sets, family has {}",
            fam.len()
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------- analyze

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct PolicedJson {
    hooligan: usize,
    cops: Vec<usize>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SuffixJson {
    k: usize,
    cops: Vec<usize>,
    policeable: Vec<PolicedJson>,
    non_policeable: Vec<usize>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct AnalyzeJson {
    command: Vec<String>,
    input_digest: String,
    n: usize,
    suffixes: Vec<SuffixJson>,
    max_partial_length: usize,
    failures: FailuresJson,
    timing_ms: TimingJson,
}

fn cmd_analyze(
    ctx: &Ctx,
    fam: &FacetFamily,
    digest: String,
    table_view: bool,
    out: &mut dyn Write,
) -> Result<()> {
    let t0 = Instant::now();
    let table = shelling::classify(fam);
    let t_classify = t0.elapsed().as_millis();
    let t1 = Instant::now();
    let rows = shelling::pss_rows_from_table(&table, ctx.threads);
    let t_solve = t1.elapsed().as_millis();
    let t2 = Instant::now();
    let max_len = search::max_partial_length_opts(&rows, &ctx.search);
    let t_search = t2.elapsed().as_millis();
    if ctx.oracle {
        oracle_guard(fam)?;
        verify_pss_against_direct(fam, &rows)?;
    }
    let failures = failures_json(Some(&table), &rows, max_len < fam.len());
    if table_view || ctx.text {
        write_analyze_table(fam, &table, out)?;
        writeln!(out, "max partial length: {max_len} of {}", fam.len())?;
        writeln!(out, "failures: {}", failures_text(&failures))?;
        return Ok(());
    }
    let report = AnalyzeJson {
        command: ctx.echo.clone(),
        input_digest: digest,
        n: fam.len(),
        suffixes: (0..fam.len())
            .map(|k| {
                let class = table.suffix(k);
                SuffixJson {
                    k: k + 1,
                    cops: one_based(class.cops),
                    policeable: class
                        .policeable
                        .iter()
                        .map(|&(h, cops)| PolicedJson {
                            hooligan: h + 1,
                            cops: one_based(cops),
                        })
                        .collect(),
                    non_policeable: one_based(class.non_policeable),
                }
            })
            .collect(),
        max_partial_length: max_len,
        failures,
        timing_ms: TimingJson {
            classify: t_classify,
            solve: t_solve,
            search: t_search,
        },
    };
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&report).expect("serialize")
    )?;
    Ok(())
}

/// The intersection table: row k shows `F_j ∩ F_k` for every j, written
/// `[..]` when j is a cop for k, bare when j is a policeable hooligan, and
/// with a trailing `!` when j is non-policeable.
fn write_analyze_table(
    fam: &FacetFamily,
    table: &CopHooliganTable,
    out: &mut dyn Write,
) -> Result<()> {
    let n = fam.len();
    let cell = |k: usize, j: usize| -> String {
        if j == k {
            return "*".to_string();
        }
        let inter = fam.facet(j).intersection(fam.facet(k));
        let mut tokens: Vec<&str> = inter.iter().map(|v| fam.vertex_name(v)).collect();
        if tokens.is_empty() {
            tokens.push("-");
        }
        let body = tokens.join(",");
        let class = table.suffix(k);
        if class.cops.contains(j) {
            format!("[{body}]")
        } else if class.non_policeable.contains(j) {
            format!("{body}!")
        } else {
            body
        }
    };
    let mut grid: Vec<Vec<String>> = Vec::with_capacity(n + 1);
    let mut header = vec![String::new()];
    header.extend((1..=n).map(|j| format!("F{j}")));
    grid.push(header);
    for k in 0..n {
        let mut row = vec![format!("F{}", k + 1)];
        row.extend((0..n).map(|j| cell(k, j)));
        grid.push(row);
    }
    let widths: Vec<usize> = (0..=n)
        .map(|c| grid.iter().map(|row| row[c].len()).max().unwrap_or(0))
        .collect();
    for row in &grid {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, cell)| format!("{:<width$}", cell, width = widths[c]))
            .collect();
        writeln!(out, "{}", line.join("  ").trim_end())?;
    }
    Ok(())
}

fn verify_pss_against_direct(fam: &FacetFamily, rows: &PssRowFamily) -> Result<()> {
    let n = fam.len();
    for k in 0..n {
        for a in crate::sets::IndexSubset::full(n).without(k).subsets() {
            if rows.is_pss(a, k) != oracle::is_pss_direct(fam, a, k) {
                return Err(Error::OracleMismatch {
                    detail: format!("setment {a} with suffix {} disagrees", k + 1),
                });
            }
        }
    }
    Ok(())
}

// -------------------------------------------------------------------- pss

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct PssSuffixJson {
    k: usize,
    pss_count: String,
    row_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    rows: Option<Vec<String>>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct PssJson {
    command: Vec<String>,
    input_digest: String,
    n: usize,
    pss_total: String,
    row_total: usize,
    suffixes: Vec<PssSuffixJson>,
    timing_ms: TimingJson,
}

fn cmd_pss(
    ctx: &Ctx,
    fam: &FacetFamily,
    digest: String,
    stats: bool,
    out: &mut dyn Write,
) -> Result<()> {
    let t0 = Instant::now();
    let table = shelling::classify(fam);
    let t_classify = t0.elapsed().as_millis();
    let t1 = Instant::now();
    let rows = shelling::pss_rows_from_table(&table, ctx.threads);
    let t_solve = t1.elapsed().as_millis();
    if ctx.oracle {
        oracle_guard(fam)?;
        verify_pss_against_direct(fam, &rows)?;
    }
    let n = fam.len();
    if ctx.text {
        for k in 0..n {
            let per_k = rows.rows(k);
            writeln!(
                out,
                "k={}: pss={} rows={}",
                k + 1,
                suffix_pss_count(&rows, k),
                per_k.len()
            )?;
            if stats {
                for row in per_k {
                    writeln!(out, "  {}", row.dump(n))?;
                }
            }
        }
        writeln!(
            out,
            "total: pss={} rows={}",
            rows.nonempty_pss_count(),
            rows.row_count()
        )?;
        return Ok(());
    }
    let report = PssJson {
        command: ctx.echo.clone(),
        input_digest: digest,
        n,
        pss_total: decimal(&rows.nonempty_pss_count()),
        row_total: rows.row_count(),
        suffixes: (0..n)
            .map(|k| {
                let per_k = rows.rows(k);
                PssSuffixJson {
                    k: k + 1,
                    pss_count: decimal(&suffix_pss_count(&rows, k)),
                    row_count: per_k.len(),
                    rows: stats.then(|| per_k.iter().map(|r| r.dump(n)).collect()),
                }
            })
            .collect(),
        timing_ms: TimingJson {
            classify: t_classify,
            solve: t_solve,
            search: 0,
        },
    };
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&report).expect("serialize")
    )?;
    Ok(())
}

// ------------------------------------------------------------------ count

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CountJson {
    command: Vec<String>,
    input_digest: String,
    n: usize,
    mode: &'static str,
    pss_total: String,
    row_total: usize,
    count: String,
    max_partial_length: usize,
    failures: FailuresJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    by_first: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    by_last: Option<Vec<String>>,
    timing_ms: TimingJson,
}

fn build_rows(
    ctx: &Ctx,
    fam: &FacetFamily,
) -> (Option<CopHooliganTable>, PssRowFamily, u128, u128) {
    match fam.mode() {
        Mode::Shelling => {
            let t0 = Instant::now();
            let table = shelling::classify(fam);
            let t_classify = t0.elapsed().as_millis();
            let t1 = Instant::now();
            let rows = shelling::pss_rows_from_table(&table, ctx.threads);
            (Some(table), rows, t_classify, t1.elapsed().as_millis())
        }
        Mode::Peeling => {
            let t1 = Instant::now();
            let rows = peeling::peeling_pss_rows_with_threads(fam, ctx.threads);
            (None, rows, 0, t1.elapsed().as_millis())
        }
    }
}

fn cmd_count(
    ctx: &Ctx,
    fam: &FacetFamily,
    digest: String,
    letters: bool,
    out: &mut dyn Write,
) -> Result<()> {
    let (table, rows, t_classify, t_solve) = build_rows(ctx, fam);
    let t2 = Instant::now();
    let outcome = search::count_report(&rows, &ctx.search);
    let by_first = letters.then(|| search::count_by_first_letter(&rows, &ctx.search));
    let t_search = t2.elapsed().as_millis();
    if ctx.oracle {
        oracle_guard(fam)?;
        let brute = oracle::full_words_brute(fam);
        if num_bigint::BigUint::from(brute.len()) != outcome.count {
            return Err(Error::OracleMismatch {
                detail: format!(
                    "count {} but the permutation filter finds {}",
                    outcome.count,
                    brute.len()
                ),
            });
        }
    }
    let failures = failures_json(table.as_ref(), &rows, outcome.count.is_zero());
    if ctx.text {
        writeln!(out, "count: {}", outcome.count)?;
        writeln!(
            out,
            "max partial length: {} of {}",
            outcome.max_partial_length,
            fam.len()
        )?;
        writeln!(out, "pss total: {}", rows.nonempty_pss_count())?;
        writeln!(out, "rows: {}", rows.row_count())?;
        writeln!(out, "failures: {}", failures_text(&failures))?;
        if letters {
            let fmt = |v: &[num_bigint::BigUint]| {
                v.iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            writeln!(out, "by first letter: {}", fmt(by_first.as_ref().unwrap()))?;
            writeln!(out, "by last letter: {}", fmt(&outcome.by_last))?;
        }
        return Ok(());
    }
    let report = CountJson {
        command: ctx.echo.clone(),
        input_digest: digest,
        n: fam.len(),
        mode: mode_name(fam.mode()),
        pss_total: decimal(&rows.nonempty_pss_count()),
        row_total: rows.row_count(),
        count: decimal(&outcome.count),
        max_partial_length: outcome.max_partial_length,
        failures,
        by_first: by_first.map(|v| v.iter().map(decimal).collect()),
        by_last: letters.then(|| outcome.by_last.iter().map(decimal).collect()),
        timing_ms: TimingJson {
            classify: t_classify,
            solve: t_solve,
            search: t_search,
        },
    };
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&report).expect("serialize")
    )?;
    Ok(())
}

// -------------------------------------------------------------- enumerate

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct EnumerateJson {
    command: Vec<String>,
    input_digest: String,
    n: usize,
    mode: &'static str,
    count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    words: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    facet_words: Option<Vec<Vec<Vec<String>>>>,
    timing_ms: TimingJson,
}

fn cmd_enumerate(
    ctx: &Ctx,
    fam: &FacetFamily,
    digest: String,
    limit: Option<usize>,
    facets: bool,
    out: &mut dyn Write,
) -> Result<()> {
    let (_, rows, t_classify, t_solve) = build_rows(ctx, fam);
    let t2 = Instant::now();
    let facet_line = |word: &Word| -> String {
        word.letters()
            .iter()
            .map(|&a| format!("{{{}}}", fam.facet_tokens(a as usize).join(" ")))
            .collect::<Vec<_>>()
            .join(" ")
    };
    if ctx.text && ctx.threads <= 1 && !ctx.oracle {
        // stream directly; nothing needs the full list
        let mut produced = 0usize;
        for word in search::enumerate_full_words(&rows, limit, WordOrder::Lexicographic) {
            if facets {
                writeln!(out, "{}", facet_line(&word))?;
            } else {
                writeln!(out, "{word}")?;
            }
            produced += 1;
        }
        let _ = produced;
        return Ok(());
    }
    let words = search::enumerate_collect(&rows, limit, WordOrder::Lexicographic, ctx.threads);
    if ctx.oracle {
        oracle_guard(fam)?;
        let mut brute = oracle::full_words_brute(fam);
        brute.sort();
        let mut got = words.clone();
        got.sort();
        got.dedup();
        let complete = limit.is_none_or(|l| words.len() < l);
        if got.len() != words.len()
            || (complete && got != brute)
            || (!complete && !got.iter().all(|w| brute.binary_search(w).is_ok()))
        {
            return Err(Error::OracleMismatch {
                detail: "enumerated words disagree with the permutation filter".into(),
            });
        }
    }
    let t_search = t2.elapsed().as_millis();
    if ctx.text {
        for word in &words {
            if facets {
                writeln!(out, "{}", facet_line(word))?;
            } else {
                writeln!(out, "{word}")?;
            }
        }
        return Ok(());
    }
    let report = EnumerateJson {
        command: ctx.echo.clone(),
        input_digest: digest,
        n: fam.len(),
        mode: mode_name(fam.mode()),
        count: words.len(),
        words: (!facets).then(|| {
            words
                .iter()
                .map(|w| w.letters().iter().map(|&a| a as usize + 1).collect())
                .collect()
        }),
        facet_words: facets.then(|| {
            words
                .iter()
                .map(|w| {
                    w.letters()
                        .iter()
                        .map(|&a| {
                            fam.facet_tokens(a as usize)
                                .iter()
                                .map(|s| s.to_string())
                                .collect()
                        })
                        .collect()
                })
                .collect()
        }),
        timing_ms: TimingJson {
            classify: t_classify,
            solve: t_solve,
            search: t_search,
        },
    };
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&report).expect("serialize")
    )?;
    Ok(())
}

// ----------------------------------------------------------------- linext

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct LinextJson {
    command: Vec<String>,
    input_digest: String,
    elements: usize,
    count: String,
    timing_ms: TimingJson,
}

fn cmd_linext(ctx: &Ctx, file: &str, out: &mut dyn Write) -> Result<()> {
    let (text, digest, _) = read_input(file)?;
    let p = poset::parse_poset(&text)?;
    let fam = poset::poset_to_ideals(&p);
    let t1 = Instant::now();
    let rows = peeling::peeling_pss_rows_with_threads(&fam, ctx.threads);
    let t_solve = t1.elapsed().as_millis();
    let t2 = Instant::now();
    let count = search::count_report(&rows, &ctx.search).count;
    let t_search = t2.elapsed().as_millis();
    if ctx.oracle {
        if p.len() > 8 {
            return Err(Error::OracleDomain(format!(
                "--oracle needs at most 8 elements, poset has {}",
                p.len()
            )));
        }
        let brute = oracle::linear_extensions_brute(&p);
        let ideal = oracle::linear_extensions_ideal_dp(&p);
        if brute != count || ideal != count {
            return Err(Error::OracleMismatch {
                detail: format!("count {count}, permutations {brute}, ideal lattice {ideal}"),
            });
        }
    }
    if ctx.text {
        writeln!(out, "linear extensions: {count}")?;
        return Ok(());
    }
    let report = LinextJson {
        command: ctx.echo.clone(),
        input_digest: digest,
        elements: p.len(),
        count: decimal(&count),
        timing_ms: TimingJson {
            classify: 0,
            solve: t_solve,
            search: t_search,
        },
    };
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&report).expect("serialize")
    )?;
    Ok(())
}

// -------------------------------------------------------------------- gen

fn cmd_gen(family: &GenFamily, out: &mut dyn Write) -> Result<()> {
    let facets = match family {
        GenFamily::M2 { m } => generators::m2m_facets(*m)?,
        GenFamily::Pm { sizes } => {
            generators::partition_matroid_facets(&generators::named_blocks(sizes))?
        }
        GenFamily::Trees { graph } => generators::spanning_tree_facets(&load_edges(graph)?)?,
        GenFamily::Cb { lengths } => {
            generators::chessboard_facets(&ChessboardShape::new(lengths.clone())?)
        }
    };
    for facet in facets {
        writeln!(out, "{}", facet.join(" "))?;
    }
    Ok(())
}

fn load_edges(graph: &str) -> Result<Vec<(String, String)>> {
    if let Some(m) = graph
        .strip_prefix('k')
        .and_then(|s| s.parse::<usize>().ok())
    {
        return Ok(generators::complete_graph_edges(m));
    }
    let (text, _, _) = read_input(graph)?;
    let mut edges = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match (parts.next(), parts.next(), parts.next()) {
            (Some(u), Some(v), None) => edges.push((u.to_string(), v.to_string())),
            _ => {
                return Err(Error::MalformedEdge {
                    line: line.to_string(),
                })
            }
        }
    }
    Ok(edges)
}
