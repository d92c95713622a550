#![allow(dead_code)]

use interdep::{ColoredGraph, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

/// Random spanning tree plus independent extra edges with probability `p`.
pub fn connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut g = Graph::new(n);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        g.add_edge(order[i], order[j]).unwrap();
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_colored<R: Rng>(rng: &mut R, n: usize, n_c: usize, p: f64) -> ColoredGraph {
    let g = connected_graph(rng, n, p);
    let colors = (0..n).map(|_| rng.gen_range(0..n_c)).collect();
    ColoredGraph::new(g, colors, n_c).unwrap()
}

/// Colors grown as random connected regions, so every class is connected.
pub fn connected_classes<R: Rng>(rng: &mut R, n: usize, p: f64) -> ColoredGraph {
    let g = connected_graph(rng, n, p);
    let mut color = vec![usize::MAX; n];
    let mut seeds: Vec<usize> = (0..n).collect();
    seeds.shuffle(rng);
    let mut next = 0;
    for &seed in &seeds {
        if color[seed] != usize::MAX {
            continue;
        }
        let c = next;
        next += 1;
        let target = rng.gen_range(1..=3);
        let mut region = vec![seed];
        color[seed] = c;
        while region.len() < target {
            let frontier: Vec<usize> = region
                .iter()
                .flat_map(|&u| g.neighbors(u).iter().copied())
                .filter(|&w| color[w] == usize::MAX)
                .collect();
            match frontier.choose(rng) {
                Some(&w) => {
                    color[w] = c;
                    region.push(w);
                }
                None => break,
            }
        }
    }
    ColoredGraph::new(g, color, next).unwrap()
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.node_count())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect()
}

fn reach(adj: &[u32], from: usize, alive: u32) -> u32 {
    let mut seen = 1u32 << from;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        next &= alive & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Exhaustive color-cut oracle built directly from the definition: a color
/// set is a cut when some subset of the nodes it covers is a node cut.
/// Works on graphs of at most 16 nodes.
pub struct CutOracle {
    n: usize,
    colors: Vec<usize>,
    color_count: usize,
    /// `contains[m]`: some subset of node mask `m` is a cut.
    contains: Vec<bool>,
    protected: u32,
}

impl CutOracle {
    pub fn global(cg: &ColoredGraph) -> Self {
        let g = cg.graph();
        let n = g.node_count();
        assert!(n <= 16);
        let adj = adjacency_masks(g);
        let full = (1u32 << n) - 1;
        let is_cut = |removed: u32| {
            let alive = full & !removed;
            if alive.count_ones() <= 1 {
                return true;
            }
            reach(&adj, alive.trailing_zeros() as usize, alive) != alive
        };
        Self::build(cg, is_cut, 0)
    }

    pub fn st(cg: &ColoredGraph, s: usize, t: usize) -> Self {
        let g = cg.graph();
        let n = g.node_count();
        assert!(n <= 16);
        let adj = adjacency_masks(g);
        let full = (1u32 << n) - 1;
        let ends = (1u32 << s) | (1u32 << t);
        let is_cut =
            |removed: u32| removed & ends == 0 && reach(&adj, s, full & !removed) & (1 << t) == 0;
        Self::build(cg, is_cut, ends)
    }

    fn build(cg: &ColoredGraph, is_cut: impl Fn(u32) -> bool, protected: u32) -> Self {
        let n = cg.node_count();
        let size = 1usize << n;
        let mut contains = vec![false; size];
        for m in 0..size {
            let mut hit = is_cut(m as u32);
            let mut rest = m;
            while !hit && rest != 0 {
                let b = rest.trailing_zeros();
                rest &= rest - 1;
                hit = contains[m & !(1 << b)];
            }
            contains[m] = hit;
        }
        CutOracle {
            n,
            colors: cg.colors().to_vec(),
            color_count: cg.color_count(),
            contains,
            protected,
        }
    }

    pub fn is_cut(&self, colors: &[usize]) -> bool {
        let mut cover = 0u32;
        for v in 0..self.n {
            if colors.contains(&self.colors[v]) {
                cover |= 1 << v;
            }
        }
        self.contains[(cover & !self.protected) as usize]
    }

    /// Minimum number of colors forming a cut.
    pub fn min_value(&self) -> usize {
        let k = self.color_count;
        assert!(k <= 16);
        let mut best = usize::MAX;
        for subset in 0u32..(1 << k) {
            let size = subset.count_ones() as usize;
            if size >= best {
                continue;
            }
            let chosen: Vec<usize> = (0..k).filter(|&c| subset & (1 << c) != 0).collect();
            if self.is_cut(&chosen) {
                best = size;
            }
        }
        best
    }
}

pub fn min_vertex_cover(g: &Graph) -> usize {
    let n = g.node_count();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0u32..1 << n)
        .filter(|m| {
            edges
                .iter()
                .all(|&(u, v)| m & (1 << u) != 0 || m & (1 << v) != 0)
        })
        .map(u32::count_ones)
        .min()
        .unwrap() as usize
}

pub fn min_hitting_set(universe: usize, sets: &[Vec<usize>]) -> usize {
    (0u32..1 << universe)
        .filter(|m| sets.iter().all(|s| s.iter().any(|&e| m & (1 << e) != 0)))
        .map(u32::count_ones)
        .min()
        .unwrap() as usize
}

/// A non-adjacent pair, if the graph has one.
pub fn non_adjacent_pair<R: Rng>(rng: &mut R, g: &Graph) -> Option<(usize, usize)> {
    let n = g.node_count();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    pairs.choose(rng).copied()
}

/// Internally disjoint s-t paths counted by exhaustive node-cut search.
pub fn st_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    let cg = ColoredGraph::with_distinct_colors(g.clone());
    CutOracle::st(&cg, s, t).min_value()
}
