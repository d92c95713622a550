//! Simple undirected graphs with dense node indices and the classical
//! connectivity queries built on them.

mod flow;

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub(crate) use flow::NodeSplitFlow;

/// Simple undirected graph on nodes `0..node_count`.
///
/// Adjacency lists are kept sorted, which makes every traversal (and every
/// witness derived from one) deterministic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new(node_count: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); node_count],
            edge_count: 0,
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(node_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(node_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            g.adj[u] = (0..n).filter(|&v| v != u).collect();
        }
        g.edge_count = n * n.saturating_sub(1) / 2;
        g
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0).expect("valid cycle");
        }
        g
    }

    /// Appends an isolated node and returns its index.
    pub fn add_node(&mut self) -> usize {
        self.adj.push(Vec::new());
        if let Some(labels) = &mut self.labels {
            labels.push(String::new());
        }
        self.adj.len() - 1
    }

    /// Inserts edge `{u, v}`. Returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_node(u)?;
        self.check_node(v)?;
        if u == v {
            return Err(Error::Invalid(format!("self-loop on node {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.edge_count += 1;
                Ok(true)
            }
        }
    }

    pub(crate) fn check_node(&self, v: usize) -> Result<()> {
        if v < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node: v,
                node_count: self.node_count(),
            })
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.node_count() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.node_count();
        self.edge_count == n * n.saturating_sub(1) / 2
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.node_count() {
            return Err(Error::Invalid(format!(
                "{} labels for {} nodes",
                labels.len(),
                self.node_count()
            )));
        }
        self.labels = Some(labels);
        Ok(())
    }

    pub fn clear_labels(&mut self) {
        self.labels = None;
    }

    pub(crate) fn mask(&self, nodes: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.node_count()];
        for &v in nodes {
            mask[v] = true;
        }
        mask
    }

    /// True iff the surviving nodes induce exactly one connected component.
    /// Zero or one survivor counts as connected.
    pub fn is_connected(&self, removed: &[usize]) -> bool {
        self.is_connected_masked(&self.mask(removed))
    }

    pub fn is_connected_masked(&self, removed: &[bool]) -> bool {
        let Some(start) = (0..self.node_count()).find(|&v| !removed[v]) else {
            return true;
        };
        let survivors = removed.iter().filter(|&&r| !r).count();
        self.reach_masked(start, removed)
            .iter()
            .filter(|&&r| r)
            .count()
            == survivors
    }

    /// Nodes reachable from `start` without entering `removed` nodes.
    pub(crate) fn reach_masked(&self, start: usize, removed: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.node_count()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] && !removed[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Maximal connected node sets of the graph minus `removed`, each sorted,
    /// ordered by smallest member.
    pub fn connected_components(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        self.connected_components_masked(&self.mask(removed))
    }

    pub fn connected_components_masked(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.node_count()];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.node_count() {
            if removed[start] || comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for &v in &self.adj[u] {
                    if !removed[v] && comp[v] == usize::MAX {
                        comp[v] = id;
                        members.push(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Shortest path from `s` to `t` whose internal nodes avoid `removed`.
    /// Ties are broken towards smaller node indices.
    pub(crate) fn shortest_path_avoiding(
        &self,
        s: usize,
        t: usize,
        removed: &[bool],
    ) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.node_count()];
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if parent[v] != usize::MAX {
                    continue;
                }
                if v == t {
                    parent[t] = u;
                    let mut path = vec![t];
                    let mut x = u;
                    while x != s {
                        path.push(x);
                        x = parent[x];
                    }
                    path.push(s);
                    path.reverse();
                    return Some(path);
                }
                if !removed[v] {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        None
    }

    fn check_pair(&self, s: usize, t: usize) -> Result<()> {
        self.check_node(s)?;
        self.check_node(t)?;
        if s == t {
            return Err(Error::SameNode(s));
        }
        if self.has_edge(s, t) {
            return Err(Error::AdjacentPair(s, t));
        }
        Ok(())
    }

    /// Minimum s-t node cut and a maximum family of internally node-disjoint
    /// s-t paths, which have equal size.
    pub fn st_node_connectivity(&self, s: usize, t: usize) -> Result<StConnectivity> {
        self.check_pair(s, t)?;
        let mut net = NodeSplitFlow::new(self, s, t);
        let value = net.run(usize::MAX);
        let cut = net.min_cut();
        debug_assert_eq!(cut.len(), value);
        Ok(StConnectivity {
            value,
            cut: NodeCut {
                nodes: cut,
                kind: CutKind::Separating,
                witness_pair: Some((s, t)),
            },
            paths: net.paths(),
        })
    }

    /// Global node connectivity and a witness cut. A complete graph has
    /// connectivity `n - 1` witnessed by a trivializing cut.
    pub fn node_connectivity(&self) -> Result<(usize, NodeCut)> {
        let n = self.node_count();
        if n < 2 {
            return Err(Error::TooSmall(n));
        }
        let mut best = n - 1;
        let mut best_cut = NodeCut {
            nodes: (1..n).collect(),
            kind: CutKind::Trivializing,
            witness_pair: None,
        };
        // Some node among the first best+1 lies outside a minimum cut and is
        // separated by it from a node of larger index.
        let mut i = 0;
        while i <= best && i < n {
            for j in i + 1..n {
                if self.has_edge(i, j) {
                    continue;
                }
                let mut net = NodeSplitFlow::new(self, i, j);
                let k = net.run(best);
                if k < best {
                    best = k;
                    best_cut = NodeCut {
                        nodes: net.min_cut(),
                        kind: CutKind::Separating,
                        witness_pair: Some((i, j)),
                    };
                }
            }
            i += 1;
        }
        Ok((best, best_cut))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CutKind {
    /// Leaves at least two components, with the witness pair split.
    Separating,
    /// Leaves at most one surviving node.
    Trivializing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeCut {
    pub nodes: Vec<usize>,
    pub kind: CutKind,
    pub witness_pair: Option<(usize, usize)>,
}

impl NodeCut {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Checks the cut against its kind on `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let removed = g.mask(&self.nodes);
        match self.kind {
            CutKind::Trivializing => g.node_count() - self.nodes.len() <= 1,
            CutKind::Separating => match self.witness_pair {
                Some((u, v)) => !removed[u] && !removed[v] && !g.reach_masked(u, &removed)[v],
                None => !g.is_connected_masked(&removed),
            },
        }
    }
}

#[derive(Clone, Debug)]
pub struct StConnectivity {
    pub value: usize,
    pub cut: NodeCut,
    /// Paths from `s` to `t` inclusive, pairwise sharing only the endpoints.
    pub paths: Vec<Vec<usize>>,
}
