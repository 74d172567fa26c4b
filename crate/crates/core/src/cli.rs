// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Command-line front end. Every command forwards to the library and only
//! formats the result.
//!
//! Exit codes: 0 success, 1 computation error, 2 usage or input error.

use std::fs;
use std::io::BufReader;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::dynamics::{self, Rate, TimeUnit};
pub use crate::format::sig6;
use crate::entropy;
use crate::generators;
use crate::graph::Graph;
use crate::metrics::{self, ComponentPolicy, Sampling, StatsConfig};
use crate::replication;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    /// JSON with full precision.
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "netentropy", version, about = "Small-world statistics, network entropy and entropy dating")]
pub struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Measure n, L and C of an edge-list file and evaluate its entropy.
    Stats(StatsArgs),
    /// Network entropy H = C log_L(n).
    Entropy(EntropyArgs),
    /// Continuous growth rate between two quantities.
    Rate(RateArgs),
    /// Duration of a growth process.
    Date(DateArgs),
    /// Entropy gained per unit time by adding members to a network.
    Value(ValueArgs),
    /// Write a synthetic graph or cluster hierarchy.
    Generate(GenerateArgs),
    /// Recompute every published scenario and report pass/fail.
    Replicate,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    pub path: PathBuf,
    /// Fail on disconnected graphs instead of measuring the largest component.
    #[arg(long)]
    pub strict_connectivity: bool,
    /// Number of BFS sources for sampled path length.
    #[arg(long, value_parser = parse_count)]
    pub sample_size: Option<usize>,
    /// Always compute the exact path length.
    #[arg(long, conflicts_with = "sample_size")]
    pub exact: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct EntropyArgs {
    #[arg(long = "n")]
    pub n: f64,
    #[arg(long = "L", default_value_t = std::f64::consts::E)]
    pub path_length: f64,
    #[arg(long = "C", default_value_t = 1.0)]
    pub clustering: f64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct RateArgs {
    #[arg(long)]
    pub q1: f64,
    #[arg(long)]
    pub q2: f64,
    /// Elapsed time in years.
    #[arg(long, conflicts_with_all = ["elapsed", "unit"])]
    pub years: Option<f64>,
    /// Elapsed time in `--unit`.
    #[arg(long, requires = "unit")]
    pub elapsed: Option<f64>,
    #[arg(long, value_parser = parse_unit)]
    pub unit: Option<TimeUnit>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct DateArgs {
    /// Growth rate per `--unit`.
    #[arg(long = "m")]
    pub rate: f64,
    #[arg(long, value_parser = parse_unit, default_value = "year")]
    pub unit: TimeUnit,
    /// Starting quantity (exponential interpretation).
    #[arg(long, requires = "to", conflicts_with = "linear_entropy")]
    pub from: Option<f64>,
    /// Final quantity (exponential interpretation).
    #[arg(long, requires = "from")]
    pub to: Option<f64>,
    /// Final entropy, dated as H / m (linear interpretation).
    #[arg(long)]
    pub linear_entropy: Option<f64>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct ValueArgs {
    #[arg(long = "m")]
    pub rate: f64,
    #[arg(long = "C")]
    pub clustering: f64,
    #[arg(long = "L")]
    pub path_length: f64,
    #[arg(long)]
    pub n1: f64,
    #[arg(long = "A")]
    pub added: f64,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(subcommand)]
    pub kind: GenerateKind,
    /// Output file; stdout when omitted.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GenerateKind {
    Complete {
        #[arg(long, value_parser = parse_count)]
        n: usize,
    },
    Ring {
        #[arg(long, value_parser = parse_count)]
        n: usize,
        #[arg(long, value_parser = parse_count)]
        k: usize,
    },
    /// Watts–Strogatz rewired ring lattice.
    Ws {
        #[arg(long, value_parser = parse_count)]
        n: usize,
        #[arg(long, value_parser = parse_count)]
        k: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Nested cluster hierarchy as nested arrays.
    Hierarchy {
        #[arg(long, value_parser = parse_count)]
        branching: usize,
        #[arg(long, value_parser = parse_count)]
        depth: usize,
    },
}

/// Accepts integers written in scientific notation, such as `1e3`.
fn parse_count(s: &str) -> Result<usize, String> {
    if let Ok(v) = s.parse::<usize>() {
        return Ok(v);
    }
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if v.is_finite() && v >= 0.0 && v.fract() == 0.0 && v <= usize::MAX as f64 {
        Ok(v as usize)
    } else {
        Err(format!("`{s}` is not a non-negative integer"))
    }
}

fn parse_unit(s: &str) -> Result<TimeUnit, String> {
    s.parse().map_err(|e: dynamics::DynamicsError| e.to_string())
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        CommandResult { exit_code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(exit_code: i32, message: impl std::fmt::Display) -> Self {
        CommandResult {
            exit_code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

fn render<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(value).expect("payload serializes");
            s.push('\n');
            s
        }
        Format::Text => text(),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                CommandResult { exit_code: EXIT_USAGE, stdout: String::new(), stderr: rendered }
            } else {
                CommandResult::ok(rendered)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> CommandResult {
    let f = cli.format;
    match &cli.command {
        Command::Stats(a) => cmd_stats(a, f),
        Command::Entropy(a) => cmd_entropy(a, f),
        Command::Rate(a) => cmd_rate(a, f),
        Command::Date(a) => cmd_date(a, f),
        Command::Value(a) => cmd_value(a, f),
        Command::Generate(a) => cmd_generate(a, f),
        Command::Replicate => cmd_replicate(f),
    }
}

fn load_graph(path: &PathBuf) -> Result<Graph, String> {
    let file = fs::File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Graph::from_edge_list(BufReader::new(file)).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn cmd_stats(a: &StatsArgs, format: Format) -> CommandResult {
    let graph = match load_graph(&a.path) {
        Ok(g) => g,
        Err(e) => return CommandResult::fail(EXIT_USAGE, e),
    };
    let sampling = match (a.exact, a.sample_size) {
        (true, _) => Sampling::Exact,
        (false, Some(sources)) => Sampling::Sampled { sources, seed: a.seed },
        (false, None) => Sampling::Auto {
            exact_limit: metrics::AUTO_EXACT_LIMIT,
            sources: metrics::DEFAULT_SAMPLE_SOURCES,
            seed: a.seed,
        },
    };
    let config = StatsConfig {
        component_policy: if a.strict_connectivity {
            ComponentPolicy::Strict
        } else {
            ComponentPolicy::Largest
        },
        sampling,
    };
    let stats = match metrics::network_stats(&graph, &config) {
        Ok(s) => s,
        Err(e) => return CommandResult::fail(EXIT_COMPUTATION, e),
    };
    let n = stats.n as f64;
    let entropy = entropy::network_entropy(n, stats.path_length, stats.clustering);
    let ideal = n.ln();

    let payload = json!({
        "stats": stats,
        "entropy": entropy.as_ref().ok(),
        "entropy_error": entropy.as_ref().err().map(|e| e.to_string()),
        "ideal_entropy": ideal,
    });
    CommandResult::ok(render(format, &payload, || {
        let mut out = String::new();
        out.push_str(&format!("n\t{}\n", stats.n));
        out.push_str(&format!("L\t{}\n", sig6(stats.path_length)));
        out.push_str(&format!("C\t{}\n", sig6(stats.clustering)));
        match stats.method {
            metrics::PathLengthMethod::Exact => out.push_str("method\texact\n"),
            metrics::PathLengthMethod::Sampled { sources, seed } => {
                out.push_str(&format!("method\tsampled ({sources} sources, seed {seed})\n"))
            }
        }
        if let Some(r) = stats.restricted_to_largest_component {
            out.push_str(&format!(
                "note\tlargest of {} components ({} of {} nodes)\n",
                r.components, stats.n, r.original_nodes
            ));
        }
        match &entropy {
            Ok(r) => {
                out.push_str(&format!("eta\t{}\n", sig6(r.eta)));
                out.push_str(&format!("H\t{}\n", sig6(r.entropy)));
            }
            Err(e) => out.push_str(&format!("H\tundefined: {e}\n")),
        }
        out.push_str(&format!("H_ideal\t{}\n", sig6(ideal)));
        out
    }))
}

pub fn cmd_entropy(a: &EntropyArgs, format: Format) -> CommandResult {
    match entropy::network_entropy(a.n, a.path_length, a.clustering) {
        Ok(r) => CommandResult::ok(render(format, &r, || {
            format!(
                "n\t{}\nL\t{}\nC\t{}\neta\t{}\nH\t{}\nH_ideal\t{}\n",
                sig6(r.n),
                sig6(r.path_length),
                sig6(r.clustering),
                sig6(r.eta),
                sig6(r.entropy),
                sig6(r.ideal_entropy)
            )
        })),
        Err(e) => CommandResult::fail(EXIT_COMPUTATION, e),
    }
}

pub fn cmd_rate(a: &RateArgs, format: Format) -> CommandResult {
    let (elapsed, unit) = match (a.years, a.elapsed, a.unit) {
        (Some(y), None, _) => (y, TimeUnit::Year),
        (None, Some(t), Some(u)) => (t, u),
        _ => return CommandResult::fail(EXIT_USAGE, "give either --years or --elapsed with --unit"),
    };
    match dynamics::exponential_rate(a.q1, a.q2, elapsed, unit) {
        Ok(r) => {
            let payload = json!({
                "result": r,
                "percent_per_year": r.rate.percent_per(TimeUnit::Year),
                "percent_per_decade": r.rate.percent_per(TimeUnit::Decade),
                "percent_per_millennium": r.rate.percent_per(TimeUnit::Millennium),
            });
            CommandResult::ok(render(format, &payload, || {
                format!(
                    "m\t{} per {}\nper decade\t{}%\nper millennium\t{}%\n",
                    sig6(r.rate.value),
                    r.rate.unit,
                    sig6(r.rate.percent_per(TimeUnit::Decade)),
                    sig6(r.rate.percent_per(TimeUnit::Millennium))
                )
            }))
        }
        Err(e) => CommandResult::fail(EXIT_COMPUTATION, e),
    }
}

pub fn cmd_date(a: &DateArgs, format: Format) -> CommandResult {
    let rate = Rate::new(a.rate, a.unit);
    let result = match (a.from, a.to, a.linear_entropy) {
        (Some(from), Some(to), None) => dynamics::date_duration(rate, from, to),
        (None, None, Some(h)) => dynamics::linear_duration(rate, h),
        _ => return CommandResult::fail(EXIT_USAGE, "give --from and --to, or --linear-entropy"),
    };
    match result {
        Ok(d) => CommandResult::ok(render(format, &d, || {
            let interpretation = match d.interpretation {
                dynamics::Interpretation::Exponential => "exponential",
                dynamics::Interpretation::Linear => "linear",
            };
            format!("duration\t{} {}\ninterpretation\t{}\n", sig6(d.duration), d.unit(), interpretation)
        })),
        Err(e) => CommandResult::fail(EXIT_COMPUTATION, e),
    }
}

pub fn cmd_value(a: &ValueArgs, format: Format) -> CommandResult {
    match entropy::value_delta(a.rate, a.clustering, a.path_length, a.n1, a.added) {
        Ok(v) => CommandResult::ok(render(format, &json!({ "value_delta": v }), || {
            format!("value_delta\t{}\n", sig6(v))
        })),
        Err(e) => CommandResult::fail(EXIT_COMPUTATION, e),
    }
}

pub fn cmd_generate(a: &GenerateArgs, format: Format) -> CommandResult {
    let (body, summary) = match &a.kind {
        GenerateKind::Complete { n } => graph_output(generators::complete_graph(*n), "complete"),
        GenerateKind::Ring { n, k } => graph_output(generators::ring_lattice(*n, *k), "ring"),
        GenerateKind::Ws { n, k, p, seed } => graph_output(generators::watts_strogatz(*n, *k, *p, *seed), "ws"),
        GenerateKind::Hierarchy { branching, depth } => match generators::nested_hierarchy(*branching, *depth) {
            Ok(h) => {
                let mut text = h.to_nested_text();
                text.push('\n');
                let summary = json!({
                    "kind": "hierarchy",
                    "leaves": h.leaf_count(),
                    "branching": h.branching,
                    "depth": h.depth,
                });
                Ok((text, summary))
            }
            Err(e) => Err(e),
        },
    }
    .map_or_else(|e| (Err(e), Value::Null), |(b, s)| (Ok(b), s));

    let body = match body {
        Ok(b) => b,
        Err(e) => return CommandResult::fail(EXIT_COMPUTATION, e),
    };
    match &a.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &body) {
                return CommandResult::fail(EXIT_USAGE, format!("{}: {e}", path.display()));
            }
            let mut summary = summary;
            summary["path"] = json!(path.display().to_string());
            CommandResult::ok(render(format, &summary, || {
                format!("wrote {}\n", path.display())
            }))
        }
        None => CommandResult::ok(body),
    }
}

fn graph_output(
    graph: Result<Graph, generators::GeneratorError>,
    kind: &str,
) -> Result<(String, Value), generators::GeneratorError> {
    let g = graph?;
    let summary = json!({ "kind": kind, "nodes": g.node_count(), "edges": g.edge_count() });
    Ok((g.to_edge_list_string(), summary))
}

pub fn cmd_replicate(format: Format) -> CommandResult {
    let report = replication::run_all();
    let stdout = match format {
        Format::Structured => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        Format::Text => report.to_text(),
    };
    CommandResult {
        exit_code: if report.all_pass { EXIT_OK } else { EXIT_COMPUTATION },
        stdout,
        stderr: String::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_accept_scientific_notation() {
        assert_eq!(parse_count("1e3"), Ok(1000));
        assert_eq!(parse_count("42"), Ok(42));
        assert!(parse_count("2.5").is_err());
        assert!(parse_count("-1").is_err());
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(["netentropy", "entropy"]).exit_code, EXIT_USAGE);
        assert_eq!(run(["netentropy", "bogus"]).exit_code, EXIT_USAGE);
        assert_eq!(run(["netentropy", "--help"]).exit_code, EXIT_OK);
    }
}
