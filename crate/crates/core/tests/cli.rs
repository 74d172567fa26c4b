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

use std::fs;
use std::process::Command;

use netentropy::cli::{run, EXIT_COMPUTATION, EXIT_OK, EXIT_USAGE};
use netentropy::dynamics::{exponential_rate, TimeUnit};
use netentropy::generators::watts_strogatz;
use netentropy::metrics::{network_stats, StatsConfig};
use netentropy::replication::{self, Report};
use serde_json::Value;

fn structured(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["netentropy", "--format", "structured"];
    full.extend_from_slice(args);
    let out = run(full);
    let value = serde_json::from_str(&out.stdout).unwrap_or(Value::Null);
    (out.exit_code, value)
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn stats_on_complete_graph_reports_log_base_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "k4.txt", "a b\na c\na d\nb c\nb d\nc d\n");
    let (code, v) = structured(&["stats", &path]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["stats"]["n"], 4);
    assert_eq!(v["stats"]["path_length"], 1.0);
    assert_eq!(v["stats"]["clustering"], 1.0);
    assert!(v["entropy"].is_null());
    assert!(v["entropy_error"].as_str().unwrap().contains("greater than 1"));
    assert_eq!(v["ideal_entropy"].as_f64().unwrap(), 4f64.ln());

    let text = run(["netentropy", "stats", &path]);
    assert!(text.stdout.contains("H\tundefined"));
}

#[test]
fn stats_on_path_graph() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "p3.txt", "# path\na b\nb c\n");
    let (code, v) = structured(&["stats", &path]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["stats"]["path_length"].as_f64().unwrap(), 4.0 / 3.0);
    assert_eq!(v["stats"]["clustering"], 0.0);
    assert_eq!(v["entropy"]["entropy"], 0.0);
    assert_eq!(v["stats"]["method"]["kind"], "exact");
}

#[test]
fn stats_matches_library_on_generated_graph() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ws.txt");
    let out = run([
        "netentropy", "generate", "ws", "--n", "1000", "--k", "10", "--p", "0.01", "--seed", "7", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.exit_code, EXIT_OK, "{}", out.stderr);

    let (code, v) = structured(&["stats", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let lib = network_stats(&watts_strogatz(1000, 10, 0.01, 7).unwrap(), &StatsConfig::default()).unwrap();
    assert_eq!(v["stats"]["n"], lib.n);
    assert_eq!(v["stats"]["path_length"].as_f64().unwrap(), lib.path_length);
    assert_eq!(v["stats"]["clustering"].as_f64().unwrap(), lib.clustering);
}

#[test]
fn stats_connectivity_policies() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "split.txt", "a b\nb c\nc a\nx y\n");
    let (code, v) = structured(&["stats", &path]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["stats"]["n"], 3);
    assert_eq!(v["stats"]["restricted_to_largest_component"]["components"], 2);
    let strict = run(["netentropy", "stats", "--strict-connectivity", &path]);
    assert_eq!(strict.exit_code, EXIT_COMPUTATION);
    assert!(strict.stderr.contains("disconnected"));
}

#[test]
fn stats_sampling_flags() {
    let dir = tempfile::tempdir().unwrap();
    let edges: String = (0..50).map(|i| format!("{} {}\n", i, (i + 1) % 50)).collect();
    let path = write_temp(&dir, "c50.txt", &edges);
    let (_, v) = structured(&["stats", &path, "--sample-size", "1e1", "--seed", "3"]);
    assert_eq!(v["stats"]["method"]["kind"], "sampled");
    assert_eq!(v["stats"]["method"]["sources"], 10);
    let (_, exact) = structured(&["stats", &path, "--exact"]);
    assert_eq!(exact["stats"]["method"]["kind"], "exact");
    assert_eq!(run(["netentropy", "stats", &path, "--sample-size", "0"]).exit_code, EXIT_COMPUTATION);
}

#[test]
fn stats_input_errors_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_temp(&dir, "bad.txt", "a a\n");
    assert_eq!(run(["netentropy", "stats", &bad]).exit_code, EXIT_USAGE);
    let missing = dir.path().join("nope.txt");
    assert_eq!(run(["netentropy", "stats", missing.to_str().unwrap()]).exit_code, EXIT_USAGE);
}

#[test]
fn entropy_command() {
    let (code, v) = structured(&["entropy", "--n", "1e11", "--L", "2.49", "--C", "0.53"]);
    assert_eq!(code, EXIT_OK);
    let lib = netentropy::network_entropy(1e11, 2.49, 0.53).unwrap();
    assert_eq!(v["entropy"].as_f64().unwrap(), lib.entropy);
    assert!((lib.entropy - 14.71).abs() <= 0.01);

    let (_, one) = structured(&["entropy", "--n", "1", "--L", "2.49", "--C", "0.53"]);
    assert_eq!(one["entropy"], 0.0);

    let (_, alt) = structured(&["entropy", "--n", "616000", "--L", "3.16", "--C", "0.53"]);
    assert!((alt["entropy"].as_f64().unwrap() - 6.14).abs() <= 0.01);

    let text = run(["netentropy", "entropy", "--n", "1e11", "--L", "2.49", "--C", "0.53"]);
    assert!(text.stdout.contains("H\t14.7148\n"), "{}", text.stdout);

    assert_eq!(run(["netentropy", "entropy", "--n", "10", "--L", "1"]).exit_code, EXIT_COMPUTATION);
}

#[test]
fn rate_command() {
    let (code, v) = structured(&["rate", "--q1", "200000", "--q2", "616000", "--years", "332"]);
    assert_eq!(code, EXIT_OK);
    let lib = exponential_rate(200_000.0, 616_000.0, 332.0, TimeUnit::Year).unwrap();
    assert_eq!(v["result"]["rate"]["value"].as_f64().unwrap(), lib.rate.value);
    let per_decade = v["percent_per_decade"].as_f64().unwrap();
    assert!((3.3..=3.5).contains(&per_decade));

    let (_, myr) = structured(&["rate", "--q1", "14.0766", "--q2", "14.7148", "--elapsed", "3", "--unit", "myr"]);
    assert_eq!(myr["result"]["rate"]["unit"], "myr");
    assert!((myr["result"]["rate"]["value"].as_f64().unwrap() - 0.01478).abs() < 1e-5);

    assert_eq!(run(["netentropy", "rate", "--q1", "1", "--q2", "2"]).exit_code, EXIT_USAGE);
    assert_eq!(
        run(["netentropy", "rate", "--q1", "-1", "--q2", "2", "--years", "1"]).exit_code,
        EXIT_COMPUTATION
    );
}

#[test]
fn date_command() {
    let (code, v) = structured(&["date", "--m", "5.66e-5", "--from", "100", "--to", "616500"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["interpretation"], "exponential");
    assert!((v["duration"].as_f64().unwrap() - 154_000.0).abs() <= 2_000.0);

    let (_, linear) = structured(&["date", "--m", "0.01478", "--unit", "myr", "--linear-entropy", "14.71"]);
    assert_eq!(linear["interpretation"], "linear");
    assert!((linear["duration"].as_f64().unwrap() - 995.0).abs() <= 1.0);

    assert_eq!(run(["netentropy", "date", "--m", "1"]).exit_code, EXIT_USAGE);
    assert_eq!(
        run(["netentropy", "date", "--m", "0", "--from", "1", "--to", "2"]).exit_code,
        EXIT_COMPUTATION
    );
}

#[test]
fn value_command() {
    let (code, v) = structured(&["value", "--m", "1", "--C", "1", "--L", "2.718281828", "--n1", "100", "--A", "0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["value_delta"], 0.0);
    let (_, pop) = structured(&["value", "--m", "1", "--C", "0.79", "--L", "3.65", "--n1", "5281347", "--A", "344718653"]);
    assert!((pop["value_delta"].as_f64().unwrap() - 2.559).abs() <= 0.005);
}

#[test]
fn generate_commands() {
    let ring = run(["netentropy", "generate", "ring", "--n", "6", "--k", "2"]);
    assert_eq!(ring.exit_code, EXIT_OK);
    assert_eq!(ring.stdout.lines().count(), 6);

    let hierarchy = run(["netentropy", "generate", "hierarchy", "--branching", "3", "--depth", "3"]);
    let parsed = netentropy::generators::ClusterHierarchy::from_nested_text(hierarchy.stdout.trim()).unwrap();
    assert!(netentropy::generators::verify_hierarchy(&parsed).valid);
    assert_eq!(parsed.leaf_count(), 27);

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k5.txt");
    let (code, summary) = structured(&["generate", "complete", "--n", "5", "--out", out.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(summary["edges"], 10);
    assert_eq!(fs::read_to_string(&out).unwrap().lines().count(), 10);

    assert_eq!(run(["netentropy", "generate", "ring", "--n", "6", "--k", "3"]).exit_code, EXIT_COMPUTATION);
}

#[test]
fn replicate_command_round_trips() {
    let out = run(["netentropy", "--format", "structured", "replicate"]);
    assert_eq!(out.exit_code, EXIT_OK);
    let report: Report = serde_json::from_str(&out.stdout).unwrap();
    assert!(report.all_pass);
    assert_eq!(report, replication::run_all());
    let again: Report = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(again, report);

    let text = run(["netentropy", "replicate"]);
    assert!(text.stdout.ends_with("overall: PASS\n"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_netentropy");
    let ok = Command::new(bin).args(["entropy", "--n", "27", "--L", "3", "--C", "1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("eta\t3\n"));
    let usage = Command::new(bin).args(["entropy", "--L", "3"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let computation = Command::new(bin).args(["entropy", "--n", "0"]).output().unwrap();
    assert_eq!(computation.status.code(), Some(1));
}
