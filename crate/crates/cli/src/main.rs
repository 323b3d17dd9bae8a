//! `polyforge`: build group families, certify them against their defining
//! laws, reproduce the order/type tables across parameter ranges, and emit
//! JSON reports and DOT graphs.

mod report;

use std::io::Write;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand};

use polyforge_core::cpr::{build_cpr, certify, export_dot, to_graph};
use polyforge_core::families::FamilyId;
use polyforge_core::fp::DEFAULT_MAX_COSETS;

use report::{cpr_family, run_task, Engine, Report, TaskRecord};

const EXIT_FAIL: u8 = 1;
const EXIT_RESOURCE: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "polyforge", version, about, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one family instance: order, Schläfli type, intersection
    /// property, and (with --engine both) cross-check the two engines.
    Verify {
        /// Family spec, e.g. G1:n=10, H:n=12,s=3,t=4, M2:b=3, L2:t=5, S9b
        spec: String,
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Iterate a family over parameter ranges and aggregate verdicts.
    Sweep {
        /// Family selector: H, G1, G1..G8, L1, L2, L3, M1, M2, S8a, S8b,
        /// S9a, S9b, or `sporadic` for all four (repeatable)
        #[arg(long = "family", required = true)]
        families: Vec<String>,
        /// n range, inclusive (e.g. 10..12), for H and G sweeps
        #[arg(long)]
        n: Option<String>,
        /// s range for H sweeps (defaults to every admissible s)
        #[arg(long)]
        s: Option<String>,
        /// t range for H and L2/L3 sweeps (H default: every admissible t)
        #[arg(long)]
        t: Option<String>,
        /// b range for M1/M2 sweeps
        #[arg(long)]
        b: Option<String>,
        /// worker threads (default: all available)
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Write the labeled permutation representation graph as DOT.
    Graph {
        /// Family spec; only G1, G2, G4, G6, G7, G8 have graphs
        spec: String,
        /// output path
        #[arg(short, long)]
        output: std::path::PathBuf,
    },
}

#[derive(Args)]
struct RunOpts {
    /// fp (coset enumeration), perm (permutation engine), or both
    #[arg(long)]
    engine: Option<String>,
    /// coset cap per enumeration (env POLYFORGE_MAX_COSETS also works)
    #[arg(long)]
    max_cosets: Option<usize>,
    /// also write the report as JSON
    #[arg(long)]
    json: Option<std::path::PathBuf>,
    /// drop timestamps and timings so reports compare byte for byte
    #[arg(long)]
    no_volatile: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Verify { spec, opts } => {
            let id: FamilyId = spec.parse().map_err(|e| format!("{e}"))?;
            id.build().map_err(|e| format!("{e}"))?;
            let engine = engine_choice(&opts, &id)?;
            let record = run_task(&id, engine, max_cosets(&opts), !opts.no_volatile);
            finish(vec![record], &opts)
        }
        Command::Sweep {
            families,
            n,
            s,
            t,
            b,
            jobs,
            opts,
        } => {
            let ids = expand_sweep(&families, n.as_deref(), s.as_deref(), t.as_deref(), b.as_deref())?;
            if ids.is_empty() {
                return Err("sweep selects no instances".into());
            }
            let cap = max_cosets(&opts);
            let volatile = !opts.no_volatile;
            let engine_override = match &opts.engine {
                Some(e) => Some(Engine::parse(e).ok_or("engine is fp, perm or both")?),
                None => None,
            };
            let jobs = jobs
                .unwrap_or_else(|| {
                    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
                })
                .max(1);
            let records = run_parallel(&ids, engine_override, cap, volatile, jobs);
            finish(records, &opts)
        }
        Command::Graph { spec, output } => {
            let id: FamilyId = spec.parse().map_err(|e| format!("{e}"))?;
            let (family, n) = cpr_family(&id)
                .ok_or_else(|| format!("{id} has no permutation representation graph"))?;
            let triple = build_cpr(family, n).map_err(|e| format!("{e}"))?;
            let dot = export_dot(&to_graph(&triple));
            std::fs::write(&output, dot).map_err(|e| format!("writing {}: {e}", output.display()))?;
            let cert = certify(&triple).map_err(|e| format!("{e}"))?;
            println!(
                "{id}: degree {} order {} type {{{},{}}} relations {} intersection {} -> {}",
                cert.degree,
                cert.order,
                cert.schlafli.0,
                cert.schlafli.1,
                if cert.relations_ok { "ok" } else { "FAIL" },
                if cert.intersection_ok { "ok" } else { "FAIL" },
                output.display()
            );
            for note in &cert.notes {
                println!("  note: {note}");
            }
            Ok(ExitCode::from(if cert.passed { 0 } else { EXIT_FAIL }))
        }
    }
}

fn engine_choice(opts: &RunOpts, id: &FamilyId) -> Result<Engine, String> {
    match &opts.engine {
        Some(e) => Engine::parse(e).ok_or_else(|| "engine is fp, perm or both".into()),
        None => Ok(Engine::default_for(id)),
    }
}

fn max_cosets(opts: &RunOpts) -> usize {
    opts.max_cosets
        .or_else(|| {
            std::env::var("POLYFORGE_MAX_COSETS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_MAX_COSETS)
}

fn finish(records: Vec<TaskRecord>, opts: &RunOpts) -> Result<ExitCode, String> {
    for r in &records {
        println!("{}", r.summary_line());
    }
    let report = Report::new(!opts.no_volatile, records);
    if let Some(path) = &opts.json {
        let json = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
        let mut f = std::fs::File::create(path).map_err(|e| format!("{}: {e}", path.display()))?;
        f.write_all(json.as_bytes()).map_err(|e| e.to_string())?;
        f.write_all(b"\n").map_err(|e| e.to_string())?;
    }
    let code = if report.all_passed() {
        0
    } else if report.any_resource_error() {
        EXIT_RESOURCE
    } else {
        EXIT_FAIL
    };
    Ok(ExitCode::from(code))
}

fn run_parallel(
    ids: &[FamilyId],
    engine_override: Option<Engine>,
    cap: usize,
    volatile: bool,
    jobs: usize,
) -> Vec<TaskRecord> {
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<TaskRecord>>> = Mutex::new((0..ids.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(ids.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= ids.len() {
                    break;
                }
                let id = &ids[i];
                let engine = engine_override.unwrap_or_else(|| Engine::default_for(id));
                let record = run_task(id, engine, cap, volatile);
                slots.lock().expect("no panics while holding the lock")[i] = Some(record);
            });
        }
    });
    slots
        .into_inner()
        .expect("workers finished")
        .into_iter()
        .map(|r| r.expect("every slot filled"))
        .collect()
}

/// Inclusive `A..B` (or a bare `A`).
fn parse_range(text: &str, what: &str) -> Result<(u32, u32), String> {
    let parse_end = |tok: &str| {
        tok.trim()
            .parse::<u32>()
            .map_err(|_| format!("{what}: '{tok}' is not a nonnegative integer"))
    };
    match text.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse_end(a)?, parse_end(b)?);
            if a > b {
                return Err(format!("{what}: empty range {a}..{b}"));
            }
            Ok((a, b))
        }
        None => {
            let v = parse_end(text)?;
            Ok((v, v))
        }
    }
}

fn expand_sweep(
    families: &[String],
    n: Option<&str>,
    s: Option<&str>,
    t: Option<&str>,
    b: Option<&str>,
) -> Result<Vec<FamilyId>, String> {
    let n_range = n.map(|x| parse_range(x, "--n")).transpose()?;
    let s_range = s.map(|x| parse_range(x, "--s")).transpose()?;
    let t_range = t.map(|x| parse_range(x, "--t")).transpose()?;
    let b_range = b.map(|x| parse_range(x, "--b")).transpose()?;
    let need = |r: Option<(u32, u32)>, flag: &str, fam: &str| {
        r.ok_or_else(|| format!("sweeping {fam} needs {flag}"))
    };

    let mut ids = Vec::new();
    for family in families {
        for tag in expand_family_selector(family)? {
            match tag.as_str() {
                "H" => {
                    let (n0, n1) = need(n_range, "--n", "H")?;
                    for n in n0..=n1 {
                        let (s0, s1) = s_range.unwrap_or((2, n));
                        let (t0, t1) = t_range.unwrap_or((2, n));
                        for s in s0.max(2)..=s1.min(n) {
                            for t in t0.max(2)..=t1.min(n) {
                                if s + t < n {
                                    ids.push(FamilyId::H { n, s, t });
                                }
                            }
                        }
                    }
                }
                "L1" => ids.push(FamilyId::L1),
                "L2" | "L3" => {
                    let i = if tag == "L2" { 2 } else { 3 };
                    let (t0, t1) = need(t_range, "--t", &tag)?;
                    for t in t0..=t1 {
                        ids.push(FamilyId::L { i, t });
                    }
                }
                "M1" | "M2" => {
                    let i = if tag == "M1" { 1 } else { 2 };
                    let (b0, b1) = need(b_range, "--b", &tag)?;
                    for b in b0..=b1 {
                        ids.push(FamilyId::M { i, b });
                    }
                }
                "S8a" | "S8b" | "S9a" | "S9b" => {
                    ids.push(tag.parse::<FamilyId>().map_err(|e| e.to_string())?)
                }
                g => {
                    let i: u8 = g
                        .strip_prefix('G')
                        .and_then(|d| d.parse().ok())
                        .filter(|i| (1..=8).contains(i))
                        .ok_or_else(|| format!("unknown family selector '{g}'"))?;
                    let (n0, n1) = need(n_range, "--n", g)?;
                    for n in n0..=n1 {
                        ids.push(FamilyId::G { i, n });
                    }
                }
            }
        }
    }
    Ok(ids)
}

/// `G1..G8` expands to the listed range; `sporadic` to all four exceptional
/// presentations; anything else passes through as a single tag.
fn expand_family_selector(text: &str) -> Result<Vec<String>, String> {
    let text = text.trim();
    if text == "sporadic" || text == "sporadics" {
        return Ok(["S8a", "S8b", "S9a", "S9b"].map(String::from).to_vec());
    }
    if let Some((a, b)) = text.split_once("..") {
        let parse_g = |tok: &str| {
            tok.trim()
                .strip_prefix('G')
                .and_then(|d| d.parse::<u8>().ok())
                .filter(|i| (1..=8).contains(i))
                .ok_or_else(|| format!("bad G-range endpoint '{tok}'"))
        };
        let (lo, hi) = (parse_g(a)?, parse_g(b)?);
        if lo > hi {
            return Err(format!("empty family range {text}"));
        }
        return Ok((lo..=hi).map(|i| format!("G{i}")).collect());
    }
    Ok(vec![text.to_string()])
}
