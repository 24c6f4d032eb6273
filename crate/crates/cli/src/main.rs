//! Command-line driver: graph export, degree scans, exact distances with
//! optional table caching, automorphism enumeration, the verification suite,
//! and Frame–Stewart solving/comparison.
//!
//! Exit codes: 0 = query answered / all checks pass, 1 = a check found a
//! counterexample, 2 = usage or feasibility error.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hanoi_core::state::parse_state;
use hanoi_core::{graph, metric, solver, symmetry};
use hanoi_core::{CheckResult, Error, PuzzleParams, Result};

mod cache;

#[derive(Parser)]
#[command(
    name = "hanoi",
    version,
    about = "Tower of Hanoi graphs: exact metrics, symmetry checks, Frame-Stewart plans"
)]
struct Cli {
    /// Emit machine-readable JSON lines instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the whole graph to stdout.
    Export {
        #[arg(long)]
        k: u8,
        #[arg(long)]
        n: u8,
        #[arg(long, value_enum)]
        format: ExportFormat,
    },
    /// Exhaustive degree scan: histogram plus the corner degree dichotomy.
    DegreeScan {
        #[arg(long)]
        k: u8,
        #[arg(long)]
        n: u8,
    },
    /// Exact distance between two states.
    Dist {
        #[arg(long)]
        k: u8,
        #[arg(long)]
        n: u8,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Directory of cached distance tables, created on miss.
        #[arg(long, value_name = "DIR")]
        cache: Option<PathBuf>,
    },
    /// Enumerate the automorphism group and report its structure.
    Aut {
        #[arg(long)]
        k: u8,
        #[arg(long)]
        n: u8,
    },
    /// Run mechanical verification checks; exits 1 on any counterexample.
    Verify {
        #[arg(long)]
        k: u8,
        #[arg(long)]
        n: u8,
        #[arg(long, value_enum)]
        check: CheckKind,
    },
    /// Synthesize the Frame-Stewart plan between two corners.
    Solve {
        #[arg(long)]
        k: u8,
        #[arg(long)]
        n: u8,
        #[arg(long)]
        from: u8,
        #[arg(long)]
        to: u8,
        /// Print every move.
        #[arg(long)]
        emit_moves: bool,
    },
    /// Frame-Stewart count vs exact distance between corners 0 and 1.
    Compare {
        #[arg(long)]
        k: u8,
        #[arg(long)]
        n: u8,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Adjlist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    All,
    Lemma2,
    Lemma4,
    Lemma5,
    Lemma6,
    Prop3,
    Adjacency,
    Theorem,
}

/// One `verify` output line; always emitted as a JSON record so the results
/// are machine-parseable regardless of flags.
#[derive(Serialize)]
struct VerificationRecord {
    check: &'static str,
    k: u8,
    n: u8,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<u64>,
    elapsed_ms: u64,
}

impl VerificationRecord {
    fn emit(&self) {
        println!(
            "{}",
            serde_json::to_string(self).expect("record serializes")
        );
    }
}

/// One move of an emitted plan, in the documented field order.
#[derive(Serialize)]
struct PlanMoveRecord {
    step: usize,
    disk: u8,
    from: u8,
    to: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(err) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Export { k, n, format } => export(*k, *n, *format),
        Command::DegreeScan { k, n } => degree_scan(*k, *n, cli.json),
        Command::Dist {
            k,
            n,
            from,
            to,
            cache,
        } => dist(*k, *n, from, to, cache.as_deref(), cli.json),
        Command::Aut { k, n } => aut(*k, *n, cli.json),
        Command::Verify { k, n, check } => verify(*k, *n, *check),
        Command::Solve {
            k,
            n,
            from,
            to,
            emit_moves,
        } => solve(*k, *n, *from, *to, *emit_moves, cli.json),
        Command::Compare { k, n } => compare(*k, *n, cli.json),
    }
}

fn export(k: u8, n: u8, format: ExportFormat) -> Result<ExitCode> {
    let params = PuzzleParams::new(k, n)?;
    let mut out = io::BufWriter::new(io::stdout().lock());
    match format {
        ExportFormat::Dot => graph::export_dot(params, graph::DotOptions::default(), &mut out)?,
        ExportFormat::Adjlist => graph::export_adjacency_jsonl(params, &mut out)?,
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn degree_scan(k: u8, n: u8, json: bool) -> Result<ExitCode> {
    let params = PuzzleParams::new(k, n)?;
    let histogram = graph::degree_histogram(params)?;
    let check = symmetry::degree_dichotomy_check(params)?;
    if json {
        println!(
            "{}",
            serde_json::json!({
                "k": k,
                "n": n,
                "degrees": histogram,
                "pass": check.pass,
                "counterexample": check.counterexample,
            })
        );
    } else {
        for (degree, count) in &histogram {
            println!("degree {degree}: {count} vertices");
        }
        match &check.counterexample {
            None => println!("degree dichotomy: pass"),
            Some(witness) => println!("degree dichotomy: FAIL — {witness}"),
        }
    }
    Ok(exit_for(check.pass))
}

fn dist(
    k: u8,
    n: u8,
    from: &str,
    to: &str,
    cache_dir: Option<&std::path::Path>,
    json: bool,
) -> Result<ExitCode> {
    let params = PuzzleParams::new(k, n)?;
    let from = parse_state(from, params)?;
    let to = parse_state(to, params)?;
    let distance = match cache_dir {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            let path = dir.join(cache::cache_file_name(params, from.code()));
            let table = if path.exists() {
                let table = cache::load_distance_table(&path)?;
                if table.params() != params || table.source_code() != from.code() {
                    return Err(Error::Inconsistency {
                        context: "cache file",
                        detail: format!("{} does not hold the requested table", path.display()),
                    });
                }
                table
            } else {
                let table = metric::bfs_from(params, from)?;
                cache::save_distance_table(&table, dir)?;
                table
            };
            table.distance_to(to)?
        }
        None => metric::distance(params, from, to)?,
    };
    if json {
        println!(
            "{}",
            serde_json::json!({
                "k": k,
                "n": n,
                "from": from.to_string(),
                "to": to.to_string(),
                "distance": distance,
            })
        );
    } else {
        println!("{distance}");
    }
    Ok(ExitCode::SUCCESS)
}

fn aut(k: u8, n: u8, json: bool) -> Result<ExitCode> {
    let params = PuzzleParams::new(k, n)?;
    let started = Instant::now();
    let set = symmetry::enumerate_automorphisms(params)?;
    let mut report = symmetry::verify_group_structure(&set)?;
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    if json {
        println!(
            "{}",
            serde_json::to_string(&report).expect("report serializes")
        );
    } else {
        println!("automorphisms: {}", report.order);
        println!("symmetric group on {k} pegs: {}", report.is_symmetric_group);
        println!("elapsed: {} ms", report.elapsed_ms);
    }
    Ok(ExitCode::SUCCESS)
}

fn describe_nearest_corner(report: &metric::NearestCornerReport) -> Option<String> {
    report.counterexample.as_ref().map(|w| {
        format!(
            "vertex {} (substructure {}): distance {} to its own corner is not below \
             distance {} to corner {}",
            w.vertex, w.home_corner, w.home_distance, w.other_distance, w.other_corner
        )
    })
}

fn verify(k: u8, n: u8, kind: CheckKind) -> Result<ExitCode> {
    let params = PuzzleParams::new(k, n)?;
    let needs_group = matches!(
        kind,
        CheckKind::All | CheckKind::Lemma6 | CheckKind::Prop3 | CheckKind::Theorem
    );
    let set = if needs_group {
        Some(symmetry::enumerate_automorphisms(params)?)
    } else {
        None
    };
    let group = || set.as_ref().expect("group enumerated for this check");

    let mut records: Vec<VerificationRecord> = Vec::new();
    let mut run_check = |name: &'static str, f: &dyn Fn() -> Result<(CheckResult, Option<u64>)>| {
        let started = Instant::now();
        let (result, order) = f()?;
        records.push(VerificationRecord {
            check: name,
            k,
            n,
            pass: result.pass,
            counterexample: result.counterexample,
            order,
            elapsed_ms: started.elapsed().as_millis() as u64,
        });
        Ok::<(), Error>(())
    };

    let plain = |r: CheckResult| (r, None);
    let wants = |c: CheckKind| kind == CheckKind::All || kind == c;
    if wants(CheckKind::Lemma2) {
        run_check("lemma2", &|| {
            symmetry::degree_dichotomy_check(params).map(plain)
        })?;
    }
    if wants(CheckKind::Lemma4) {
        run_check("lemma4", &|| {
            metric::largest_disk_move_check(params).map(plain)
        })?;
    }
    if wants(CheckKind::Lemma5) {
        run_check("lemma5", &|| {
            let report = metric::nearest_corner_report(params)?;
            let result = match describe_nearest_corner(&report) {
                None => CheckResult::pass(),
                Some(witness) => CheckResult::fail(witness),
            };
            Ok(plain(result))
        })?;
    }
    if wants(CheckKind::Lemma6) {
        run_check("lemma6", &|| {
            Ok(plain(symmetry::substructure_preservation_check_in(group())))
        })?;
    }
    if wants(CheckKind::Prop3) {
        run_check("prop3", &|| {
            Ok(plain(symmetry::corner_fixing_is_identity_in(group())))
        })?;
    }
    if kind == CheckKind::Adjacency || (kind == CheckKind::All && n >= 2) {
        run_check("adjacency", &|| {
            symmetry::adjacency_observation_check(params).map(plain)
        })?;
    }
    if wants(CheckKind::Theorem) {
        run_check(
            "theorem",
            &|| match symmetry::verify_group_structure(group()) {
                Ok(report) => {
                    let result = if report.is_symmetric_group {
                        CheckResult::pass()
                    } else {
                        CheckResult::fail(format!(
                            "group of order {} is not the symmetric group on {k} pegs",
                            report.order
                        ))
                    };
                    Ok((result, Some(report.order)))
                }
                Err(Error::GroupAxiomViolated { detail }) => {
                    Ok((CheckResult::fail(detail), Some(group().order() as u64)))
                }
                Err(other) => Err(other),
            },
        )?;
    }

    let mut all_pass = true;
    for record in &records {
        record.emit();
        all_pass &= record.pass;
    }
    Ok(exit_for(all_pass))
}

fn solve(k: u8, n: u8, from: u8, to: u8, emit_moves: bool, json: bool) -> Result<ExitCode> {
    let params = PuzzleParams::new(k, n)?;
    let plan = solver::frame_stewart_plan(params, from, to)?;
    let count = solver::frame_stewart_count(n, k)?;
    if json {
        if emit_moves {
            for (i, mv) in plan.moves().iter().enumerate() {
                let record = PlanMoveRecord {
                    step: i + 1,
                    disk: mv.disk,
                    from: mv.from_peg,
                    to: mv.to_peg,
                };
                println!(
                    "{}",
                    serde_json::to_string(&record).expect("move serializes")
                );
            }
        } else {
            println!(
                "{}",
                serde_json::json!({
                    "k": k,
                    "n": n,
                    "from": from,
                    "to": to,
                    "moves": plan.len(),
                    "split": count.split,
                })
            );
        }
    } else {
        let split = count
            .split
            .map(|t| format!(" (top split t={t})"))
            .unwrap_or_default();
        println!(
            "{} moves from {} to {}{split}",
            plan.len(),
            plan.start(),
            plan.end()
        );
        if emit_moves {
            for (i, mv) in plan.moves().iter().enumerate() {
                println!("{}. {mv}", i + 1);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn compare(k: u8, n: u8, json: bool) -> Result<ExitCode> {
    let params = PuzzleParams::new(k, n)?;
    let report = solver::compare_exact(params, 0, 1)?;
    if json {
        println!(
            "{}",
            serde_json::json!({
                "k": k,
                "n": n,
                "from": report.from_peg,
                "to": report.to_peg,
                "fs_count": report.fs_count,
                "exact_distance": report.exact_distance,
                "equal": report.equal,
            })
        );
    } else {
        println!(
            "frame-stewart {} moves; exact distance {}; {}",
            report.fs_count,
            report.exact_distance,
            if report.equal { "equal" } else { "NOT equal" }
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn exit_for(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
