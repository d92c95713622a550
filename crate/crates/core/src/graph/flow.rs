//! Unit-capacity max flow on the node-split digraph.
//!
//! Every node `v` becomes an arc `in(v) -> out(v)` of capacity 1 and every
//! undirected edge `{u, v}` becomes the two uncapacitated arcs
//! `out(u) -> in(v)` and `out(v) -> in(u)`. Flow is pushed from `out(s)` to `in(t)`, so the
//! endpoints are never charged. Augmentation is Dinic-style: BFS layers,
//! then blocking unit paths found with an iterative DFS.

use std::collections::VecDeque;

use super::Graph;

#[derive(Clone, Copy, Debug)]
struct Arc {
    to: usize,
    cap: u8,
}

pub(crate) struct NodeSplitFlow<'g> {
    graph: &'g Graph,
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    source: usize,
    sink: usize,
    value: usize,
}

const EDGE_CAP: u8 = u8::MAX;

#[inline]
fn node_in(v: usize) -> usize {
    2 * v
}

#[inline]
fn node_out(v: usize) -> usize {
    2 * v + 1
}

impl<'g> NodeSplitFlow<'g> {
    pub(crate) fn new(graph: &'g Graph, s: usize, t: usize) -> Self {
        let n = graph.node_count();
        let mut net = NodeSplitFlow {
            graph,
            arcs: Vec::with_capacity(2 * n + 4 * graph.edge_count()),
            out: vec![Vec::new(); 2 * n],
            source: node_out(s),
            sink: node_in(t),
            value: 0,
        };
        for v in 0..n {
            if v != s && v != t {
                net.add_arc(node_in(v), node_out(v), 1);
            }
        }
        // edge arcs are never saturated by a node-disjoint flow, so every
        // minimum cut consists of node arcs
        for (u, v) in graph.edges() {
            net.add_arc(node_out(u), node_in(v), EDGE_CAP);
            net.add_arc(node_out(v), node_in(u), EDGE_CAP);
        }
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u8) {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap });
        self.arcs.push(Arc { to: from, cap: 0 });
        self.out[from].push(id);
        self.out[to].push(id + 1);
    }

    fn levels(&self) -> Option<Vec<u32>> {
        let mut level = vec![u32::MAX; self.out.len()];
        let mut queue = VecDeque::new();
        level[self.source] = 0;
        queue.push_back(self.source);
        while let Some(x) = queue.pop_front() {
            for &a in &self.out[x] {
                let arc = self.arcs[a];
                if arc.cap > 0 && level[arc.to] == u32::MAX {
                    level[arc.to] = level[x] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
        (level[self.sink] != u32::MAX).then_some(level)
    }

    /// Augments until the flow value reaches `limit` or no augmenting path
    /// exists. Returns the flow value.
    pub(crate) fn run(&mut self, limit: usize) -> usize {
        while self.value < limit {
            let Some(level) = self.levels() else { break };
            let mut next = vec![0usize; self.out.len()];
            let mut stack: Vec<usize> = Vec::new();
            'phase: while self.value < limit {
                stack.clear();
                let mut x = self.source;
                loop {
                    if x == self.sink {
                        for &a in &stack {
                            self.arcs[a].cap -= 1;
                            self.arcs[a ^ 1].cap += 1;
                        }
                        self.value += 1;
                        break;
                    }
                    let mut advanced = false;
                    while next[x] < self.out[x].len() {
                        let a = self.out[x][next[x]];
                        let arc = self.arcs[a];
                        if arc.cap > 0 && level[arc.to] == level[x] + 1 {
                            stack.push(a);
                            x = arc.to;
                            advanced = true;
                            break;
                        }
                        next[x] += 1;
                    }
                    if !advanced {
                        // dead end: retreat and skip the arc that led here
                        match stack.pop() {
                            Some(a) => {
                                x = self.arcs[a ^ 1].to;
                                next[x] += 1;
                            }
                            None => break 'phase,
                        }
                    }
                }
            }
        }
        self.value
    }

    /// Nodes whose `in` copy is reachable from the source in the residual
    /// network but whose `out` copy is not. After a maximum flow this is a
    /// minimum s-t node cut.
    pub(crate) fn min_cut(&self) -> Vec<usize> {
        let mut seen = vec![false; self.out.len()];
        let mut queue = VecDeque::new();
        seen[self.source] = true;
        queue.push_back(self.source);
        while let Some(x) = queue.pop_front() {
            for &a in &self.out[x] {
                let arc = self.arcs[a];
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    queue.push_back(arc.to);
                }
            }
        }
        (0..self.graph.node_count())
            .filter(|&v| seen[node_in(v)] && !seen[node_out(v)])
            .collect()
    }

    /// Decomposes the current flow into internally node-disjoint paths, each
    /// listed from `s` to `t`.
    pub(crate) fn paths(&self) -> Vec<Vec<usize>> {
        let s = self.source / 2;
        let t = self.sink / 2;
        let flows_on = |a: usize| a.is_multiple_of(2) && self.arcs[a ^ 1].cap > 0;
        let mut paths = Vec::with_capacity(self.value);
        for &first in &self.out[self.source] {
            if !flows_on(first) {
                continue;
            }
            let mut path = vec![s];
            let mut x = self.arcs[first].to;
            while x != self.sink {
                // x = in(v): step over the node arc, then follow the unique
                // outgoing edge arc that carries flow
                let v = x / 2;
                path.push(v);
                let out_v = node_out(v);
                let a = self.out[out_v]
                    .iter()
                    .copied()
                    .find(|&a| flows_on(a))
                    .expect("flow conservation violated");
                x = self.arcs[a].to;
            }
            path.push(t);
            paths.push(path);
        }
        paths
    }
}
