//! The `cist` command line.
//!
//! Exit codes: 0 success; 1 the input is rejected (condition fails, no
//! partition exists, trees are not CISTs); 2 unreadable input or bad
//! arguments; 3 an internal invariant failed.

mod certificate;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::cist::{verify_cists_definitional, verify_cists_leafrule, TreePair, Verdict};
use crate::error::Error;
use crate::graph::{
    parse_edge_list, parse_label_pairs, write_edge_list, ConditionReport, Edge, Ext, Graph,
};
use crate::oracle::{oracle_2cist_partition, Family, GenSpec};

pub use certificate::{
    certify, construct_certified, input_digest, Certificate, Verdicts, SCHEMA_VERSION,
};

#[derive(Debug, Parser)]
#[command(
    name = "cist",
    version,
    about = "Two completely independent spanning trees under μ₂(G) >= n"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the main output to this file.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Seed for random generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for the exhaustive search.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report n, δ, κ, σ₂, μ₂ and whether the construction applies.
    Check { path: PathBuf },
    /// Build two CISTs and emit a certificate.
    Construct { path: PathBuf },
    /// Check two spanning trees against both CIST criteria.
    Verify {
        path: PathBuf,
        #[arg(long, value_name = "FILE")]
        t1: PathBuf,
        #[arg(long, value_name = "FILE")]
        t2: PathBuf,
    },
    /// Search all bipartitions for a 2-CIST-partition.
    Oracle { path: PathBuf },
    /// Generate a graph: complete N | complete_bipartite A B | sharpness S T |
    /// lemma3_fixture [big|singleton_uv|singleton] | fan_random N | case_fixture LABEL.
    Gen { family: String, params: Vec<String> },
}

/// A failed command: exit code and message.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::PreconditionFailed(_)
            | Error::NotASpanningTree { .. }
            | Error::GenerationFailed { .. } => 1,
            Error::InternalInvariantViolation(_) => 3,
            _ => 2,
        };
        Failure(code, e.to_string())
    }
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn print(&mut self, text: &str) -> Result<(), Failure> {
        self.out
            .write_all(text.as_bytes())
            .map_err(|e| Failure(2, format!("writing output: {e}")))
    }

    fn note(&mut self, text: &str) {
        let _ = self.err.write_all(text.as_bytes());
    }
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                2
            } else {
                let _ = out.write_all(text.as_bytes());
                0
            };
        }
    };
    let mut io = Io { out, err };
    match dispatch(&cli, &mut io) {
        Ok(code) => code,
        Err(Failure(code, message)) => {
            io.note(&format!("error: {message}\n"));
            code
        }
    }
}

fn dispatch(cli: &Cli, io: &mut Io) -> Result<i32, Failure> {
    match &cli.command {
        Command::Check { path } => cmd_check(cli, io, path),
        Command::Construct { path } => cmd_construct(cli, io, path),
        Command::Verify { path, t1, t2 } => cmd_verify(cli, io, path, t1, t2),
        Command::Oracle { path } => cmd_oracle(cli, io, path),
        Command::Gen { family, params } => cmd_gen(cli, io, family, params),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(2, format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Graph, Failure> {
    let text = read(path)?;
    parse_edge_list(&text).map_err(|e| Failure(2, format!("{}: {e}", path.display())))
}

fn emit(cli: &Cli, io: &mut Io, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure(2, format!("{}: {e}", path.display())))
        }
        None => io.print(text),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("output serializes");
    text.push('\n');
    text
}

fn report_text(r: &ConditionReport) -> String {
    let show = |e: Ext| {
        e.finite()
            .map_or_else(|| "inf".to_owned(), |v| v.to_string())
    };
    format!(
        "n: {}\nedges: {}\nmin_degree: {}\nkappa: {}\nsigma2: {}\nmu2: {}\nconnected: {}\nfan_ok: {}\n",
        r.n,
        r.m_edges,
        r.min_degree,
        r.kappa,
        show(r.sigma2),
        show(r.mu2),
        r.is_connected,
        r.fan_ok
    )
}

fn cmd_check(cli: &Cli, io: &mut Io, path: &Path) -> Result<i32, Failure> {
    let g = load(path)?;
    let report = ConditionReport::compute(&g);
    let text = if cli.json {
        json(&report)
    } else {
        report_text(&report)
    };
    emit(cli, io, &text)?;
    Ok(if report.fan_ok { 0 } else { 1 })
}

fn cmd_construct(cli: &Cli, io: &mut Io, path: &Path) -> Result<i32, Failure> {
    let g = load(path)?;
    let cert = certify(&g)?;
    let text = cert.to_json();
    match &cli.out {
        Some(_) => {
            emit(cli, io, &text)?;
            let summary = if cli.json {
                json(&serde_json::json!({ "branch": cert.trace.branch, "verdicts": cert.verdicts }))
            } else {
                format!(
                    "branch: {}\nV1: {}\nV2: {}\nverdicts: partition={} definitional={} leafrule={}\n",
                    cert.trace.branch,
                    cert.partition.v1,
                    cert.partition.v2,
                    cert.verdicts.partition_ok,
                    cert.verdicts.definitional_ok,
                    cert.verdicts.leafrule_ok
                )
            };
            io.print(&summary)?;
        }
        None => io.print(&text)?,
    }
    if !cert.verdicts.all_ok() {
        return Err(Failure(3, "certificate failed its own verification".into()));
    }
    Ok(0)
}

/// Reads a tree file as edges of `g`, in `g`'s input labels.
fn load_tree(g: &Graph, path: &Path, tree: u8) -> Result<Vec<Edge>, Failure> {
    let text = read(path)?;
    let pairs =
        parse_label_pairs(&text).map_err(|e| Failure(2, format!("{}: {e}", path.display())))?;
    let vertex = |label: usize| {
        g.vertex_of(label).ok_or_else(|| {
            Failure::from(Error::NotASpanningTree {
                tree,
                reason: format!("{label} is not a vertex of the graph"),
            })
        })
    };
    pairs
        .pairs
        .iter()
        .map(|&(u, v, _)| Ok(Edge::new(vertex(u)?, vertex(v)?)))
        .collect()
}

#[derive(Serialize)]
struct VerifyOutput {
    definitional: Verdict,
    leafrule: Verdict,
    agree: bool,
}

fn cmd_verify(cli: &Cli, io: &mut Io, path: &Path, t1: &Path, t2: &Path) -> Result<i32, Failure> {
    let g = load(path)?;
    let pair = TreePair::new(load_tree(&g, t1, 1)?, load_tree(&g, t2, 2)?);
    let labels = g.labels();
    let definitional = verify_cists_definitional(&g, &pair)?.relabel(labels);
    let leafrule = verify_cists_leafrule(&g, &pair)?.relabel(labels);
    let agree = definitional.ok == leafrule.ok;
    let code = match (agree, definitional.ok) {
        (false, _) => 3,
        (true, true) => 0,
        (true, false) => 1,
    };
    let text = if cli.json {
        json(&VerifyOutput {
            definitional,
            leafrule,
            agree,
        })
    } else {
        let line = |name: &str, v: &Verdict| match &v.witness {
            None => format!("{name}: ok\n"),
            Some(w) => format!("{name}: FAIL ({w})\n"),
        };
        let mut text = line("definitional", &definitional) + &line("leafrule", &leafrule);
        if !agree {
            text.push_str("verifiers disagree\n");
        }
        text
    };
    emit(cli, io, &text)?;
    Ok(code)
}

fn cmd_oracle(cli: &Cli, io: &mut Io, path: &Path) -> Result<i32, Failure> {
    let g = load(path)?;
    let mut result = match cli.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Failure(2, format!("thread pool: {e}")))?
            .install(|| oracle_2cist_partition(&g))?,
        None => oracle_2cist_partition(&g)?,
    };
    result.partition = result.partition.map(|p| p.relabel(g.labels()));
    let text = if cli.json {
        json(&result)
    } else {
        let mut text = format!(
            "found: {}\nchecked: {}\n",
            result.found, result.partitions_checked
        );
        if let Some(p) = &result.partition {
            text.push_str(&format!("V1: {}\nV2: {}\n", p.v1, p.v2));
        }
        text
    };
    emit(cli, io, &text)?;
    Ok(if result.found { 0 } else { 1 })
}

fn gen_spec(family: &str, params: &[String], seed: u64) -> Result<GenSpec, Failure> {
    let bad = |why: &str| Failure(2, format!("gen {family}: {why}"));
    let nums = || -> Result<Vec<usize>, Failure> {
        params
            .iter()
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| bad(&format!("bad number {p:?}")))
            })
            .collect()
    };
    let family = match (family, params.len()) {
        ("complete", 1) => Family::Complete { n: nums()?[0] },
        ("complete_bipartite", 2) => {
            let v = nums()?;
            Family::CompleteBipartite { a: v[0], b: v[1] }
        }
        ("sharpness", 2) => {
            let v = nums()?;
            Family::Sharpness { s: v[0], t: v[1] }
        }
        ("lemma3_fixture", 0 | 1) => match params.first().map_or("big", String::as_str) {
            "big" => Family::Lemma3Fixture {
                singleton: false,
                uv_edge: true,
            },
            "singleton_uv" => Family::Lemma3Fixture {
                singleton: true,
                uv_edge: true,
            },
            "singleton" => Family::Lemma3Fixture {
                singleton: true,
                uv_edge: false,
            },
            other => return Err(bad(&format!("unknown variant {other:?}"))),
        },
        ("fan_random", 1) => Family::FanRandom { n: nums()?[0] },
        ("case_fixture", 1) => Family::CaseFixture {
            label: params[0].clone(),
        },
        (
            "complete" | "complete_bipartite" | "sharpness" | "lemma3_fixture" | "fan_random"
            | "case_fixture",
            _,
        ) => return Err(bad("wrong number of parameters")),
        _ => return Err(bad("unknown family")),
    };
    Ok(GenSpec { family, seed })
}

fn cmd_gen(cli: &Cli, io: &mut Io, family: &str, params: &[String]) -> Result<i32, Failure> {
    let spec = gen_spec(family, params, cli.seed)?;
    let g = spec.generate().map_err(|e| match e {
        Error::NotApplicable(why) => Failure(1, why),
        e => Failure::from(e),
    })?;
    let report = ConditionReport::compute(&g);
    let summary = if cli.json {
        json(&serde_json::json!({ "spec": spec, "report": report }))
    } else {
        report_text(&report)
    };
    emit(cli, io, &write_edge_list(&g))?;
    if cli.out.is_some() {
        io.print(&summary)?;
    } else {
        io.note(&summary);
    }
    Ok(0)
}
