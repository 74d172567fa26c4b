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

//! Small-world network statistics and the entropy arithmetic built on them.
//!
//! A network of `n` nodes with average path length `L` and clustering
//! coefficient `C` is assigned the entropy `H = C · log_L(n)`. The crate
//! measures `n`, `L` and `C` on real or generated graphs, evaluates `H` and
//! its derived quantities (growth rates, process rates, durations, network
//! value), and recomputes a set of published figures as a regression
//! report.
//!
//! | module | contents |
//! |---|---|
//! | [`graph`] | undirected simple graphs, edge-list I/O, components |
//! | [`metrics`] | exact and sampled `L`, clustering `C`, [`metrics::network_stats`] |
//! | [`entropy`] | `eta`, `H`, Shannon entropy, multipliers, value delta |
//! | [`dynamics`] | growth rates, basal rates, entropy dating, glottochronology |
//! | [`generators`] | complete, ring lattice, Watts–Strogatz, nested hierarchies |
//! | [`replication`] | published scenarios and their pass/fail report |
//! | [`cli`] | the `netentropy` command |
//!
//! Runnable walkthroughs for each area live in `examples/`.

pub mod cli;
pub mod dynamics;
pub mod entropy;
pub mod format;
pub mod generators;
pub mod graph;
pub mod metrics;
pub mod replication;

pub use dynamics::{Rate, TimeUnit};
pub use entropy::{network_entropy, EntropyReport};
pub use graph::Graph;
pub use metrics::{network_stats, NetworkStats, StatsConfig};
