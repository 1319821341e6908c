use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cubic3ec::graph::{generalized_petersen, read_graph6_lines, to_graph6, tutte_p92, GeneralizedPetersenParams};
use cubic3ec::product::{base_graph, generate_family};
use cubic3ec::CubicGraph;
use cubic3ec_cli::claims::{self, ClaimReport, Subject};
use cubic3ec_cli::{exit_code, family_levels, report_all, DEFAULT_SEED};
use serde_json::json;

const USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "cubic3ec", version, about = "Certificates for uniquely 3-edge colorable cubic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print graphs as graph6 lines.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Run one claim and print its JSON report.
    Verify(VerifyArgs),
    /// Run every claim for family members with up to `k` copies.
    ReportAll(ReportArgs),
}

#[derive(Subcommand)]
enum GenKind {
    /// Generalized Petersen graph P(m, k).
    Petersen { m: usize, k: usize },
    /// Tutte's labeling of P(9,2).
    TutteP92,
    /// All members with `k` copies of P(9,2); build traces go to `--json`
    /// (or standard error).
    Family {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Common {
    /// RNG seed for sampled checks.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Also write the JSON report to this file.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
    /// Include wall-clock times in the report (makes output run-dependent).
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of the registered claims.
    claim: String,
    /// graph6 file, or `-` for standard input.
    #[arg(long)]
    graph: Option<String>,
    /// Number of copies, for family claims.
    #[arg(long)]
    k: Option<usize>,
    /// First factor (multiplicativity).
    #[arg(long)]
    g1: Option<String>,
    /// Second factor (multiplicativity).
    #[arg(long)]
    g2: Option<String>,
    /// Check every spec instead of a seeded sample of 50.
    #[arg(long)]
    all_specs: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct ReportArgs {
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[command(flatten)]
    common: Common,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE)
}

fn read_graphs(source: &str) -> Result<Vec<CubicGraph>, String> {
    let mut text = String::new();
    if source == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| format!("reading standard input: {e}"))?;
    } else {
        text = std::fs::read_to_string(source).map_err(|e| format!("reading {source}: {e}"))?;
    }
    let graphs = read_graph6_lines(&text).map_err(|e| format!("{source}: {e}"))?;
    if graphs.is_empty() {
        return Err(format!("{source}: no graphs"));
    }
    Ok(graphs)
}

fn set_threads(threads: Option<usize>) {
    if let Some(n) = threads {
        // Only fails if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn emit(value: &impl serde::Serialize, json_path: &Option<PathBuf>) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).unwrap();
    println!("{text}");
    if let Some(path) = json_path {
        std::fs::write(path, format!("{text}\n")).map_err(|e| format!("writing {}: {e}", path.display()))?;
    }
    Ok(())
}

fn gen(kind: GenKind) -> ExitCode {
    let mut out = std::io::stdout().lock();
    match kind {
        GenKind::Petersen { m, k } => match GeneralizedPetersenParams::new(m, k).and_then(generalized_petersen) {
            Ok(g) => writeln!(out, "{}", to_graph6(&g)).unwrap(),
            Err(e) => return usage(e),
        },
        GenKind::TutteP92 => writeln!(out, "{}", to_graph6(&tutte_p92())).unwrap(),
        GenKind::Family { k, json } => {
            let members = match generate_family(k) {
                Ok(m) => m,
                Err(e) => return usage(e),
            };
            let traces: Vec<serde_json::Value> = members
                .iter()
                .map(|m| {
                    let mut t: serde_json::Value = serde_json::from_str(&m.trace_json()).unwrap();
                    t["graph6"] = json!(to_graph6(&m.graph));
                    t
                })
                .collect();
            for m in &members {
                writeln!(out, "{}", to_graph6(&m.graph)).unwrap();
            }
            let text = serde_json::to_string_pretty(&traces).unwrap();
            match json {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, format!("{text}\n")) {
                        return usage(format!("writing {}: {e}", path.display()));
                    }
                }
                None => eprintln!("{text}"),
            }
        }
    }
    ExitCode::SUCCESS
}

fn verify(args: VerifyArgs) -> ExitCode {
    set_threads(args.common.threads);
    if !claims::CLAIMS.contains(&args.claim.as_str()) {
        return usage(format!("unknown claim '{}'; known claims: {}", args.claim, claims::CLAIMS.join(", ")));
    }
    let subject = |default: &str| -> Result<Subject, String> {
        match &args.graph {
            Some(src) => {
                let graphs = read_graphs(src)?;
                let label = std::path::Path::new(src).file_stem().map_or("stdin".into(), |s| s.to_string_lossy().into_owned());
                Ok(Subject { label: if src == "-" { "stdin".into() } else { label }, graphs, traces: None })
            }
            None => Ok(Subject::single(default, base_graph())),
        }
    };
    let family = |k: Option<usize>| -> Result<(usize, Vec<_>), String> {
        let k = k.ok_or("this claim needs --k")?;
        if k < 2 {
            return Err("--k must be at least 2 for family claims".into());
        }
        let levels = family_levels(k).map_err(|e| e.to_string())?;
        Ok((k, levels.into_iter().last().unwrap()))
    };
    let run = || -> Result<ClaimReport, String> {
        Ok(match args.claim.as_str() {
            "unique-coloring" => claims::unique_coloring(&subject("P(9,2)")?),
            "three-hamilton" => claims::three_hamilton(&subject("P(9,2)")?),
            "triangle-free" => claims::triangle_free(&subject("P(9,2)")?),
            "nonplanar" => claims::nonplanar(&subject("P(9,2)")?),
            "petersen-minor" => match (args.k, &args.graph) {
                (Some(_), None) => {
                    let (k, ms) = family(args.k)?;
                    claims::petersen_minor(&Subject::family(k, ms))
                }
                _ => claims::petersen_minor(&subject("P(9,2)")?),
            },
            "genus-exhaustive" => match (args.k, &args.graph) {
                (Some(_), None) => {
                    let (k, ms) = family(args.k)?;
                    claims::genus_exhaustive(&Subject::family(k, ms), Some(k))
                }
                _ => claims::genus_exhaustive(&subject("P(9,2)")?, None),
            },
            "projective-search" => claims::projective_search(&subject("P(9,2)")?),
            "genus-p92" => claims::genus_p92(),
            "projective-p92" => claims::projective_p92(),
            "genus-family-k" => {
                let (k, ms) = family(args.k)?;
                claims::genus_family(k, &ms)
            }
            "multiplicativity" => {
                let corpus = claims::factor_corpus();
                let load = |src: &Option<String>| -> Result<Vec<(String, CubicGraph)>, String> {
                    match src {
                        Some(s) => Ok(read_graphs(s)?.into_iter().map(|g| (s.clone(), g)).collect()),
                        None => Ok(corpus.iter().map(|(n, g)| (n.to_string(), g.clone())).collect()),
                    }
                };
                let (a, b) = (load(&args.g1)?, load(&args.g2)?);
                let pairs: Vec<_> = a.iter().flat_map(|x| b.iter().map(move |y| (x.clone(), y.clone()))).collect();
                claims::multiplicativity(&pairs, args.all_specs, args.common.seed)
            }
            _ => unreachable!("claim list checked above"),
        })
    };
    let report = match claims::timed_result(args.common.timings, run) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    if let Err(e) = emit(&report, &args.common.json) {
        return usage(e);
    }
    ExitCode::from(exit_code([report.verdict]))
}

fn report_all_cmd(args: ReportArgs) -> ExitCode {
    set_threads(args.common.threads);
    let report = match report_all(args.k, args.common.seed, args.common.timings) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    if let Err(e) = emit(&report, &args.common.json) {
        return usage(e);
    }
    ExitCode::from(exit_code(report.claims.iter().map(|c| c.verdict)))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    match cli.command {
        Command::Gen { kind } => gen(kind),
        Command::Verify(args) => verify(args),
        Command::ReportAll(args) => report_all_cmd(args),
    }
}
