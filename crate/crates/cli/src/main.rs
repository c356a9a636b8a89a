//! `arlab`: construct objects, verify them, run oracles and print reports.
//!
//! Exit codes: 0 pass, 1 check failed, 2 usage or parse error, 3 cap hit.

mod report;

use arlab_core::catalog::{
    build_d_member, build_ex_friendship, build_h_member, is_member_d, is_member_e, is_member_f, is_member_h,
    FamilyDescriptor,
};
use arlab_core::colorings::{self, EdgeColoring};
use arlab_core::graph::{friendship, io, turan, Graph};
use arlab_core::matching::{check_ge, gallai_edmonds, has_perfect_matching, is_factor_critical, tutte_violator};
use arlab_core::oracles::{
    check_lemma_aa, f_vertex_bound, oracle_ar, oracle_ex, oracle_extremal_set, oracle_f, OracleReport, Status,
    TuranPattern, SCHEMA,
};
use arlab_core::rainbow::{find_rainbow_in_family, PatternSpec};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "arlab", version, about = "Rainbow-subgraph workbench: constructions, verification and small-case oracles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for parallel enumeration.
    #[arg(long, global = true, env = "ARLAB_WORKERS")]
    workers: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Graph6,
    Md,
}

#[derive(Args, Debug, Default)]
struct Params {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    nu: Option<usize>,
    #[arg(long)]
    delta: Option<usize>,
    /// Order of the factor-critical block of an H member.
    #[arg(long)]
    c_order: Option<usize>,
    /// Comma-separated Y degrees of an H member.
    #[arg(long, value_delimiter = ',')]
    y_degrees: Vec<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a graph or an edge-coloring.
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        #[command(flatten)]
        params: Params,
    },
    /// Check a graph or coloring read from a file (`-` for stdin).
    Verify {
        input: PathBuf,
        #[arg(long, value_enum)]
        check: CheckKind,
        /// Rainbow targets such as `K1,4;4K2` or `F3`.
        #[arg(long)]
        targets: Option<String>,
        /// Family for membership checks: H, E, D or F.
        #[arg(long)]
        family: Option<String>,
        #[command(flatten)]
        params: Params,
    },
    /// Run a brute-force oracle.
    Oracle {
        #[arg(value_enum)]
        kind: OracleKind,
        #[command(flatten)]
        params: Params,
        /// Target family for `ar`, e.g. `F2` or `K1,3;3K2`.
        #[arg(long)]
        family: Option<String>,
        /// Forbidden pattern for `ex`: `K3` or `Fk`.
        #[arg(long)]
        pattern: Option<String>,
        #[arg(long)]
        r_lo: Option<usize>,
        #[arg(long)]
        r_hi: Option<usize>,
        #[arg(long)]
        cap_vertices: Option<usize>,
        #[arg(long)]
        cap_partitions: Option<u64>,
        /// Cap on generated classes for `ex`.
        #[arg(long)]
        cap_classes: Option<usize>,
    },
    /// Print a reproduction table.
    Report {
        #[arg(value_enum)]
        suite: Suite,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConstructKind {
    Turan,
    Friendship,
    HMember,
    DMember,
    ExFriendship,
    ColoringK2,
    ColoringTwoCliques,
    ColoringCliqueC,
    ColoringLowerF,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CheckKind {
    RainbowFree,
    Membership,
    GeStructure,
    FactorCritical,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleKind {
    Ex,
    F,
    Ar,
    ExtremalSet,
    LemmaAa,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub(crate) enum Suite {
    Acceptance,
    Formulas,
    Families,
}

/// A failure with its exit code.
#[derive(Debug)]
pub(crate) struct Exit {
    code: u8,
    message: String,
}

impl Exit {
    pub(crate) fn usage(message: impl std::fmt::Display) -> Self {
        Exit { code: 2, message: message.to_string() }
    }
}

impl From<arlab_core::Error> for Exit {
    fn from(e: arlab_core::Error) -> Self {
        Exit::usage(e)
    }
}

/// Text to emit and the exit code that goes with it.
pub(crate) struct Output {
    pub(crate) text: String,
    pub(crate) code: u8,
}

fn need(value: Option<usize>, flag: &str) -> Result<usize, Exit> {
    value.ok_or_else(|| Exit::usage(format!("missing --{flag}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(workers) = cli.common.workers {
        if workers == 0 {
            eprintln!("error: --workers must be at least 1");
            return ExitCode::from(2);
        }
        let _ = rayon::ThreadPoolBuilder::new().num_threads(workers).build_global();
    }
    let result = match cli.command {
        Command::Construct { kind, params } => construct(kind, &params, cli.common.format),
        Command::Verify { input, check, targets, family, params } => {
            verify(&input, check, targets.as_deref(), family.as_deref(), &params)
        }
        Command::Oracle { kind, params, family, pattern, r_lo, r_hi, cap_vertices, cap_partitions, cap_classes } => {
            let caps = OracleCaps { cap_vertices, cap_partitions, cap_classes };
            oracle(kind, &params, family.as_deref(), pattern.as_deref(), (r_lo, r_hi), caps, cli.common.format)
        }
        Command::Report { suite } => report::run(suite, cli.common.format),
    };
    match result {
        Ok(out) => match emit(&out.text, cli.common.out.as_ref()) {
            Ok(()) => ExitCode::from(out.code),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

enum Built {
    Graph(Graph),
    Coloring(EdgeColoring),
}

fn construct(kind: ConstructKind, p: &Params, format: Option<Format>) -> Result<Output, Exit> {
    let built = match kind {
        ConstructKind::Turan => Built::Graph(turan(need(p.n, "n")?, need(p.k, "k")?)?),
        ConstructKind::Friendship => Built::Graph(friendship(need(p.k, "k")?)?),
        ConstructKind::HMember => Built::Graph(build_h_member(&FamilyDescriptor::H {
            nu: need(p.nu, "nu")?,
            delta: need(p.delta, "delta")?,
            c_order: need(p.c_order, "c-order")?,
            y_degrees: p.y_degrees.clone(),
        })?),
        ConstructKind::DMember => Built::Graph(build_d_member(need(p.k, "k")?)?),
        ConstructKind::ExFriendship => Built::Graph(build_ex_friendship(need(p.n, "n")?, need(p.k, "k")?)?),
        ConstructKind::ColoringK2 => Built::Coloring(colorings::coloring_k2_star(need(p.n, "n")?)?),
        ConstructKind::ColoringTwoCliques => {
            Built::Coloring(colorings::coloring_two_cliques(need(p.n, "n")?, need(p.k, "k")?)?)
        }
        ConstructKind::ColoringCliqueC => {
            Built::Coloring(colorings::coloring_clique_plus_c(need(p.n, "n")?, need(p.k, "k")?)?)
        }
        ConstructKind::ColoringLowerF => {
            Built::Coloring(colorings::coloring_lower_friendship(need(p.n, "n")?, need(p.k, "k")?)?)
        }
    };
    let text = match (built, format) {
        (Built::Graph(g), None | Some(Format::Graph6)) => io::to_graph6(&g),
        (Built::Graph(g), Some(Format::Json)) => io::to_json(&g),
        (Built::Coloring(c), None | Some(Format::Json)) => colorings::to_json(&c),
        (_, Some(f)) => return Err(Exit::usage(format!("format {f:?} is not available for construct"))),
    };
    Ok(Output { text, code: 0 })
}

fn read_input(path: &PathBuf) -> Result<String, Exit> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map(|_| s)
    } else {
        std::fs::read_to_string(path)
    };
    text.map_err(|e| Exit::usage(format!("cannot read {}: {e}", path.display())))
}

fn parse_graph(text: &str) -> Result<Graph, Exit> {
    let t = text.trim();
    let g = if t.starts_with('{') { io::from_json(t) } else { io::from_graph6(t) };
    g.map_err(Exit::from)
}

#[derive(Serialize)]
struct VerifyReport {
    schema: &'static str,
    check: String,
    params: serde_json::Value,
    passed: bool,
    certificate: serde_json::Value,
}

fn verify(
    input: &PathBuf,
    check: CheckKind,
    targets: Option<&str>,
    family: Option<&str>,
    p: &Params,
) -> Result<Output, Exit> {
    let text = read_input(input)?;
    let (name, params, passed, certificate) = match check {
        CheckKind::RainbowFree => {
            let targets = targets.ok_or_else(|| Exit::usage("rainbow-free needs --targets"))?;
            let patterns = PatternSpec::parse_list(targets)?;
            if patterns.is_empty() {
                return Err(Exit::usage("--targets lists no pattern"));
            }
            let c = colorings::from_json(&text)?;
            let hit = find_rainbow_in_family(&c, &patterns);
            let cert = match &hit {
                Some(e) => json!({ "embedding": e }),
                None => json!({ "n": c.n(), "r": c.r(), "searched": targets }),
            };
            ("rainbow-free", json!({ "targets": targets }), hit.is_none(), cert)
        }
        CheckKind::Membership => {
            let g = parse_graph(&text)?;
            let family = family.ok_or_else(|| Exit::usage("membership needs --family"))?;
            let (ok, params) = match family {
                "D" => {
                    let k = need(p.k, "k")?;
                    (is_member_d(&g, k), json!({ "family": "D", "k": k }))
                }
                "H" | "E" | "F" => {
                    let (nu, delta) = (need(p.nu, "nu")?, need(p.delta, "delta")?);
                    let ok = match family {
                        "H" => is_member_h(&g, nu, delta),
                        "E" => is_member_e(&g, nu, delta),
                        _ => is_member_f(&g, nu, delta),
                    };
                    (ok, json!({ "family": family, "nu": nu, "delta": delta }))
                }
                other => return Err(Exit::usage(format!("unknown family {other:?} (expected H, E, D or F)"))),
            };
            let cert = json!({ "n": g.n(), "edges": g.edge_count(), "max_degree": g.max_degree() });
            ("membership", params, ok, cert)
        }
        CheckKind::GeStructure => {
            let g = parse_graph(&text)?;
            let dec = gallai_edmonds(&g);
            let outcome = check_ge(&g, &dec);
            let cert = json!({
                "d_components": dec.d_components,
                "a": dec.a,
                "c": dec.c,
                "failure": outcome.as_ref().err(),
            });
            ("ge-structure", json!({}), outcome.is_ok(), cert)
        }
        CheckKind::FactorCritical => {
            let g = parse_graph(&text)?;
            let ok = is_factor_critical(&g);
            let cert = if ok {
                json!({ "n": g.n() })
            } else if g.n() % 2 == 0 {
                json!({ "reason": "even order" })
            } else {
                let v = (0..g.n())
                    .find(|&v| !has_perfect_matching(&g.remove_vertices(&[v]).expect("vertex in range").graph))
                    .expect("some deletion has no perfect matching");
                let rest = g.remove_vertices(&[v]).expect("vertex in range");
                let barrier: Option<Vec<usize>> =
                    tutte_violator(&rest.graph).map(|t| t.into_iter().map(|x| rest.original[x]).collect());
                json!({ "vertex": v, "tutte_set": barrier })
            };
            ("factor-critical", json!({}), ok, cert)
        }
    };
    let report = VerifyReport { schema: SCHEMA, check: name.into(), params, passed, certificate };
    let text = serde_json::to_string_pretty(&report).expect("plain data serializes");
    Ok(Output { text, code: if passed { 0 } else { 1 } })
}

struct OracleCaps {
    cap_vertices: Option<usize>,
    cap_partitions: Option<u64>,
    cap_classes: Option<usize>,
}

fn parse_turan_pattern(text: &str) -> Result<TuranPattern, Exit> {
    match PatternSpec::parse(text) {
        _ if text.trim() == "K3" => Ok(TuranPattern::Triangle),
        Ok(PatternSpec::Friendship(1)) => Ok(TuranPattern::Triangle),
        Ok(PatternSpec::Friendship(k)) => Ok(TuranPattern::Friendship(k)),
        _ => Err(Exit::usage(format!("pattern {text:?} must be K3 or Fk"))),
    }
}

const DEFAULT_PARTITION_CAP: u64 = 2_000_000;

fn oracle(
    kind: OracleKind,
    p: &Params,
    family: Option<&str>,
    pattern: Option<&str>,
    (r_lo, r_hi): (Option<usize>, Option<usize>),
    caps: OracleCaps,
    format: Option<Format>,
) -> Result<Output, Exit> {
    let report = match kind {
        OracleKind::Ex => {
            let n = need(p.n, "n")?;
            let pattern = parse_turan_pattern(pattern.ok_or_else(|| Exit::usage("ex needs --pattern"))?)?;
            oracle_ex(n, pattern, caps.cap_classes)
        }
        OracleKind::F => {
            let (nu, delta) = (need(p.nu, "nu")?, need(p.delta, "delta")?);
            if nu == 0 || delta == 0 {
                return Err(Exit::usage("--nu and --delta must be positive"));
            }
            oracle_f(nu, delta, cap_vertices(caps.cap_vertices, nu, delta)?)
        }
        OracleKind::ExtremalSet => {
            let (nu, delta) = (need(p.nu, "nu")?, need(p.delta, "delta")?);
            if nu == 0 || delta == 0 {
                return Err(Exit::usage("--nu and --delta must be positive"));
            }
            oracle_extremal_set(nu, delta, cap_vertices(caps.cap_vertices, nu, delta)?)
        }
        OracleKind::Ar => {
            let n = need(p.n, "n")?;
            let family = PatternSpec::parse_list(family.ok_or_else(|| Exit::usage("ar needs --family"))?)?;
            if family.is_empty() {
                return Err(Exit::usage("--family lists no pattern"));
            }
            let m = n * n.saturating_sub(1) / 2;
            let cap = caps.cap_partitions.unwrap_or(DEFAULT_PARTITION_CAP);
            oracle_ar(n, &family, r_lo.unwrap_or(1), r_hi.unwrap_or(m), Some(cap))
        }
        OracleKind::LemmaAa => {
            let n = need(p.n, "n")?;
            if n > 8 {
                return Err(Exit::usage("lemma-aa supports --n up to 8"));
            }
            check_lemma_aa(n, need(p.k, "k")?)
        }
    };
    let text = render_report(&report, format)?;
    let code = if report.status == Status::Capped { 3 } else { 0 };
    Ok(Output { text, code })
}

fn cap_vertices(cap: Option<usize>, nu: usize, delta: usize) -> Result<usize, Exit> {
    let cap = cap.unwrap_or_else(|| f_vertex_bound(nu, delta));
    if cap > 40 {
        return Err(Exit::usage(format!("--cap-vertices {cap} is beyond desk scale (at most 40)")));
    }
    Ok(cap)
}

fn render_report(report: &OracleReport, format: Option<Format>) -> Result<String, Exit> {
    match format {
        None | Some(Format::Json) => Ok(report.to_json()),
        Some(Format::Csv) => Ok(format!("{}\n{}", OracleReport::CSV_HEADER, report.csv_row())),
        Some(f) => Err(Exit::usage(format!("format {f:?} is not available for oracle reports"))),
    }
}
