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

use netentropy::entropy::eta;
use netentropy::generators::{nested_hierarchy, verify_hierarchy, watts_strogatz, ClusterHierarchy};
use netentropy::metrics::{average_path_length_exact, clustering_coefficient};

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|x| big.contains(x))
}

#[test]
fn binary_hierarchy_nesting_by_brute_force() {
    let h = nested_hierarchy(2, 4).unwrap();
    assert_eq!(h.leaf_count(), 16);
    assert_eq!(h.generations[2].len(), 4);
    assert!(h.generations[2].iter().all(|c| c.len() == 4));
    for k in 1..h.generations.len() {
        for child in &h.generations[k] {
            let parents = h.generations[k - 1].iter().filter(|p| is_subset(child, p)).count();
            assert_eq!(parents, 1);
        }
    }
    assert!(verify_hierarchy(&h).valid);
}

#[test]
fn depth_five_binary_hierarchy_agrees_with_eta() {
    let h = nested_hierarchy(2, 5).unwrap();
    assert!(verify_hierarchy(&h).valid);
    assert_eq!(eta(32.0, 2.0).unwrap(), 5.0);
    assert_eq!(h.depth, 5);
}

#[test]
fn moved_leaf_breaks_nesting() {
    // Non-contiguous leaves are fine as long as every pair sits inside its parent.
    let h = ClusterHierarchy::from_nested_text("[[[0,2],[1,3]],[[4,5],[6,7]]]").unwrap();
    assert!(verify_hierarchy(&h).valid);

    let mut moved = nested_hierarchy(2, 3).unwrap();
    moved.generations[1][0] = vec![0, 1, 2, 4];
    moved.generations[1][1] = vec![3, 5, 6, 7];
    let check = verify_hierarchy(&moved);
    assert!(!check.valid);
    assert!(check.violations.iter().all(|v| v.generation >= 1));
    assert_eq!(check.violations[0].generation, 2);
}

#[test]
fn one_seed_shows_the_small_world_effect() {
    let lattice = watts_strogatz(1000, 10, 0.0, 3).unwrap();
    let rewired = watts_strogatz(1000, 10, 0.01, 3).unwrap();
    let (l0, c0) = (average_path_length_exact(&lattice).unwrap(), clustering_coefficient(&lattice));
    let (l, c) = (average_path_length_exact(&rewired).unwrap(), clustering_coefficient(&rewired));
    assert!(c >= 0.9 * c0, "C {c} vs {c0}");
    assert!(l < 0.5 * l0, "L {l} vs {l0}");
}
