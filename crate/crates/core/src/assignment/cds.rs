use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Disjoint connected dominating sets of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdsPartition {
    /// Pairwise disjoint CDS in discovery order. Nodes outside every CDS
    /// found by the search have been added to the largest one.
    pub cds_list: Vec<Vec<usize>>,
    /// Nodes that were merged into the largest CDS.
    pub extras: Vec<usize>,
}

impl CdsPartition {
    pub fn len(&self) -> usize {
        self.cds_list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cds_list.is_empty()
    }
}

/// Non-empty, induces a connected subgraph and every node is in the set or
/// adjacent to it.
pub fn is_cds(g: &Graph, set: &[usize]) -> bool {
    if set.is_empty() || set.iter().any(|&v| v >= g.node_count()) {
        return false;
    }
    let inside = g.mask(set);
    let outside: Vec<bool> = inside.iter().map(|&b| !b).collect();
    if !g.is_connected_masked(&outside) {
        return false;
    }
    (0..g.node_count()).all(|v| inside[v] || g.neighbors(v).iter().any(|&w| inside[w]))
}

/// Greedy family of disjoint connected dominating sets.
///
/// Each round seeds from the highest-degree unused node of every component
/// of the unused nodes in turn, grows the seed by the unused neighbor that
/// dominates the most new nodes (walking to the nearest useful node when no
/// neighbor helps), and prunes the result to a minimal CDS. The search ends
/// when no seed yields a CDS.
pub fn greedy_cds_partition(g: &Graph) -> Result<CdsPartition> {
    if g.node_count() == 0 {
        return Err(Error::TooSmall(0));
    }
    if !g.is_connected(&[]) {
        return Err(Error::Disconnected);
    }
    let n = g.node_count();
    let mut used = vec![false; n];
    let mut cds_list: Vec<Vec<usize>> = Vec::new();
    loop {
        let mut seeds: Vec<usize> = g
            .connected_components_masked(&used)
            .iter()
            .map(|comp| {
                *comp
                    .iter()
                    .max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v)))
                    .expect("components are non-empty")
            })
            .collect();
        seeds.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let found = seeds.into_iter().find_map(|seed| grow(g, &used, seed));
        match found {
            Some(set) => {
                debug_assert!(is_cds(g, &set));
                for &v in &set {
                    used[v] = true;
                }
                cds_list.push(set);
            }
            None => break,
        }
    }
    let extras: Vec<usize> = (0..n).filter(|&v| !used[v]).collect();
    if !extras.is_empty() {
        let largest = (0..cds_list.len())
            .max_by_key(|&i| (cds_list[i].len(), std::cmp::Reverse(i)))
            .expect("a connected graph has at least one CDS");
        cds_list[largest].extend_from_slice(&extras);
        cds_list[largest].sort_unstable();
    }
    Ok(CdsPartition { cds_list, extras })
}

fn grow(g: &Graph, used: &[bool], seed: usize) -> Option<Vec<usize>> {
    let n = g.node_count();
    let mut in_set = vec![false; n];
    let mut dominated = vec![false; n];
    let mut set = Vec::new();
    let mut remaining = n;
    let add = |v: usize, set: &mut Vec<usize>, in_set: &mut [bool], dominated: &mut [bool]| {
        in_set[v] = true;
        set.push(v);
        let mut fresh = 0;
        for w in std::iter::once(v).chain(g.neighbors(v).iter().copied()) {
            if !dominated[w] {
                dominated[w] = true;
                fresh += 1;
            }
        }
        fresh
    };
    remaining -= add(seed, &mut set, &mut in_set, &mut dominated);
    let gain = |v: usize, dominated: &[bool]| {
        usize::from(!dominated[v]) + g.neighbors(v).iter().filter(|&&w| !dominated[w]).count()
    };
    while remaining > 0 {
        let best = set
            .iter()
            .flat_map(|&u| g.neighbors(u).iter().copied())
            .filter(|&w| !used[w] && !in_set[w])
            .map(|w| (gain(w, &dominated), w))
            .max_by_key(|&(gn, w)| (gn, std::cmp::Reverse(w)));
        match best {
            Some((gn, w)) if gn > 0 => remaining -= add(w, &mut set, &mut in_set, &mut dominated),
            _ => {
                let path = path_to_gain(g, used, &in_set, &dominated)?;
                for v in path {
                    remaining -= add(v, &mut set, &mut in_set, &mut dominated);
                }
            }
        }
    }
    prune(g, &mut set);
    is_cds(g, &set).then(|| {
        set.sort_unstable();
        set
    })
}

/// Unused nodes leading from the set to the nearest node with positive
/// gain, that node included.
fn path_to_gain(
    g: &Graph,
    used: &[bool],
    in_set: &[bool],
    dominated: &[bool],
) -> Option<Vec<usize>> {
    let n = g.node_count();
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for v in 0..n {
        if in_set[v] {
            parent[v] = v;
            queue.push_back(v);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if used[w] || parent[w] != usize::MAX {
                continue;
            }
            parent[w] = u;
            let useful = !dominated[w] || g.neighbors(w).iter().any(|&x| !dominated[x]);
            if useful {
                let mut path = vec![w];
                let mut x = u;
                while !in_set[x] {
                    path.push(x);
                    x = parent[x];
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(w);
        }
    }
    None
}

/// Drops nodes while the set stays a CDS, lowest degree first.
fn prune(g: &Graph, set: &mut Vec<usize>) {
    let mut order = set.clone();
    order.sort_by_key(|&v| (g.degree(v), v));
    for v in order {
        if set.len() == 1 {
            break;
        }
        let trial: Vec<usize> = set.iter().copied().filter(|&w| w != v).collect();
        if is_cds(g, &trial) {
            *set = trial;
        }
    }
}
