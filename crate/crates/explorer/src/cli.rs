//! The `energy` command line.
//!
//! Exit codes: 0 success, 1 infeasible input (including certified
//! non-existence), 2 budget exhausted without a certificate, 3 format error.

use std::io::Write;
use std::net::SocketAddr;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use energy_core::search::{self, Budget, SearchObjective, DEFAULT_MATCH_TOL};
use energy_core::spectrum::DEFAULT_GROUP_TOL;
use energy_core::{complete_spectrum, graph6, Graph, KnownFamily, SearchError, SearchResult, SearchSpec, Spectrum};
use serde_json::json;

use crate::reference::verify_all;
use crate::table::{fmt4, render, rows};
use crate::values::parse_list;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_FORMAT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "energy", version, about = "Graph energy: spectra, completion tables and extremal searches")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveArg {
    Max,
    Min,
}

#[derive(Debug, clap::Args)]
pub struct ClassArgs {
    /// Number of edges.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub regular: Option<usize>,
    #[arg(long)]
    pub bipartite: bool,
    #[arg(long)]
    pub connected: bool,
    #[arg(long)]
    pub tree: bool,
    /// Complement is a disjoint union of cycles.
    #[arg(long)]
    pub complement_cycles: bool,
    /// Cap on canonical graphs generated.
    #[arg(long, default_value_t = Budget::default().max_graphs)]
    pub max_graphs: u64,
    #[arg(long, default_value_t = Budget::default().max_seconds)]
    pub max_seconds: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Two-value completion table for n, m and known eigenvalues K.
    Complete {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Comma separated; accepts phi, phi-1, sqrt(X) and v:multiplicity.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        known: String,
        #[arg(long)]
        json: bool,
    },
    /// Spectrum and energy of a graph6-encoded graph.
    Spectrum {
        #[arg(long, allow_hyphen_values = true)]
        graph6: String,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive extremal-energy search over a graph class.
    Search {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_enum)]
        objective: ObjectiveArg,
        #[arg(long)]
        json: bool,
    },
    /// Find graphs with a given spectrum, or certify there are none.
    Realize {
        #[arg(long)]
        n: usize,
        /// Comma separated eigenvalues, `v:multiplicity` allowed.
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        /// Per-eigenvalue matching tolerance.
        #[arg(long, default_value_t = DEFAULT_MATCH_TOL)]
        tol: f64,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long)]
        json: bool,
    },
    /// Regenerate the published tables and check the maximal-energy graphs.
    VerifyTables {
        #[arg(long)]
        json: bool,
    },
    /// Run the REST service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: std::net::IpAddr,
        /// Session documents are loaded from and saved to this directory.
        #[arg(long)]
        session_dir: Option<PathBuf>,
    },
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_FORMAT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err((code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

type CmdResult = Result<i32, (i32, String)>;

fn format_err(e: impl std::fmt::Display) -> (i32, String) {
    (EXIT_FORMAT, e.to_string())
}

fn infeasible(e: impl std::fmt::Display) -> (i32, String) {
    (EXIT_INFEASIBLE, e.to_string())
}

fn emit(out: &mut dyn Write, text: &str) -> CmdResult {
    out.write_all(text.as_bytes()).map_err(|e| (EXIT_FORMAT, e.to_string()))?;
    Ok(EXIT_OK)
}

fn emit_json(out: &mut dyn Write, value: &serde_json::Value) -> CmdResult {
    let mut text = serde_json::to_string_pretty(value).expect("json values serialize");
    text.push('\n');
    emit(out, &text)
}

fn execute(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Complete { n, m, known, json } => {
            let k = KnownFamily::new(parse_list(&known).map_err(format_err)?);
            let cands = complete_spectrum(n, m, &k).map_err(infeasible)?;
            let r = rows(&cands);
            if json {
                emit_json(out, &json!({ "n": n, "m": m, "known": k.values(), "rows": r }))
            } else {
                let head = format!(
                    "n = {n}, m = {m}, |K| = {}, C+ = {}, C- = {}, D = {}\n",
                    k.len(),
                    fmt4(k.c_plus),
                    fmt4(k.c_minus),
                    fmt4(k.d)
                );
                emit(out, &(head + &render(&r)))
            }
        }
        Command::Spectrum { graph6: code, json } => {
            let g = graph6::decode(&code).map_err(format_err)?;
            spectrum_report(&g, json, out)
        }
        Command::Search { n, class, objective, json } => {
            let objective = match objective {
                ObjectiveArg::Max => SearchObjective::MaxEnergy,
                ObjectiveArg::Min => SearchObjective::MinEnergy,
            };
            let spec = class_spec(n, &class).objective(objective);
            let result = match search::extremal_energy(&spec) {
                Ok(r) => r,
                Err(e @ (SearchError::InvalidSpec(_) | SearchError::EmptyClass { .. })) => return Err(infeasible(e)),
                Err(e) => return Err(format_err(e)),
            };
            report_result(&result, &spec, json, out)?;
            Ok(if result.exhausted { EXIT_OK } else { EXIT_BUDGET })
        }
        Command::Realize { n, target, tol, class, json } => {
            let values = parse_list(&target).map_err(format_err)?;
            let spec = class_spec(n, &class).realize(Spectrum::new(values), tol);
            let result = search::realize_spectrum(&spec).map_err(infeasible)?;
            report_result(&result, &spec, json, out)?;
            Ok(if !result.best.is_empty() {
                EXIT_OK
            } else if result.certifies_nonexistence() {
                EXIT_INFEASIBLE
            } else {
                EXIT_BUDGET
            })
        }
        Command::VerifyTables { json } => {
            let checks = verify_all();
            if json {
                emit_json(out, &json!(checks))?;
            } else {
                let mut text = String::new();
                for c in &checks {
                    text += &format!("{} {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
                }
                emit(out, &text)?;
            }
            Ok(if checks.iter().all(|c| c.passed) { EXIT_OK } else { EXIT_INFEASIBLE })
        }
        Command::Serve { port, host, session_dir } => {
            let state = match session_dir {
                Some(dir) => crate::api::AppState::with_dir(dir).map_err(format_err)?,
                None => crate::api::AppState::in_memory(),
            };
            let addr = SocketAddr::new(host, port);
            let rt = tokio::runtime::Runtime::new().map_err(format_err)?;
            let _ = writeln!(out, "listening on http://{addr}");
            let _ = out.flush();
            rt.block_on(crate::api::serve(state, addr)).map_err(format_err)?;
            Ok(EXIT_OK)
        }
    }
}

fn class_spec(n: usize, c: &ClassArgs) -> SearchSpec {
    let mut spec = SearchSpec::new(n).budget(Budget { max_graphs: c.max_graphs, max_seconds: c.max_seconds });
    spec.m = c.m;
    spec.constraints.regular = c.regular;
    spec.constraints.bipartite = c.bipartite;
    spec.constraints.connected = c.connected;
    spec.constraints.tree = c.tree;
    spec.constraints.complement_of_cycles = c.complement_cycles;
    spec
}

fn spectrum_report(g: &Graph, json: bool, out: &mut dyn Write) -> CmdResult {
    let s = energy_core::eigenvalues(g);
    let report = s.report();
    let groups = s.groups(DEFAULT_GROUP_TOL);
    if json {
        return emit_json(
            out,
            &json!({
                "n": g.n(),
                "m": g.m(),
                "spectrum": s.values(),
                "groups": groups,
                "report": report,
                "bipartite": g.is_bipartite(),
                "connected": g.is_connected(),
            }),
        );
    }
    let spectrum: Vec<String> = groups
        .iter()
        .map(|e| if e.multiplicity == 1 { fmt4(e.value) } else { format!("{}^{}", fmt4(e.value), e.multiplicity) })
        .collect();
    let text = format!(
        "n = {}, m = {}, triangles = {}\nspectrum: {}\nenergy: {:.6}\nKoolen-Moulton bound: {:.6}\n",
        g.n(),
        g.m(),
        g.triangle_count(),
        spectrum.join(", "),
        report.energy,
        report.km_bound
    );
    emit(out, &text)
}

/// Cycle lengths of the complement when it is 2-regular.
fn complement_cycles(g: &Graph) -> Option<Vec<usize>> {
    let c = energy_core::construct::complement(g);
    if c.degrees().iter().any(|&d| d != 2) {
        return None;
    }
    let mut sizes: Vec<usize> = c.components().iter().map(|mask| mask.count_ones() as usize).collect();
    sizes.sort_unstable();
    Some(sizes)
}

fn report_result(r: &SearchResult, spec: &SearchSpec, json: bool, out: &mut dyn Write) -> Result<(), (i32, String)> {
    if json {
        emit_json(out, &json!(r))?;
        return Ok(());
    }
    let mut text = format!(
        "graphs examined: {}, exhausted: {}\n",
        r.graphs_examined, r.exhausted
    );
    for v in &r.fast_fail {
        text += &format!("moment test failed: {}\n", serde_json::to_string(v).expect("serializable"));
    }
    if r.best.is_empty() {
        text += if r.certifies_nonexistence() { "no such graph\n" } else { "none found within the budget\n" };
    }
    for f in &r.best {
        text += &format!("{}  E = {:.6}", f.graph6, f.energy);
        if spec.constraints.complement_of_cycles {
            if let Some(cycles) = f.graph.as_ref().and_then(complement_cycles) {
                let parts: Vec<String> = cycles.iter().map(|l| format!("C{l}")).collect();
                text += &format!("  complement of {}", parts.join(" + "));
            }
        }
        text.push('\n');
    }
    emit(out, &text).map(|_| ())
}
