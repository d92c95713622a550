//! Colored graphs whose minimum color cuts solve vertex cover and hitting
//! set instances.

use crate::colored::ColoredGraph;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Ring of four cliques whose global minimum color cut equals the minimum
/// vertex cover of `g`.
///
/// With `m` edges (one edge is listed twice when `m` is odd), each clique
/// has `m` nodes split into halves A and B, and the rings joins are perfect
/// matchings Q0.B-Q1.A, Q1.B-Q2.A, Q2.B-Q3.A and Q3.B-Q0.A. The matching
/// edges of Q0.B-Q1.A and Q2.B-Q3.A stand for the edges of `g` and carry
/// the colors of their endpoints (node `v` of `g` is color `v`). All other
/// nodes get distinct colors from `g.node_count()` up.
pub fn gen_vertex_cover_gadget(g: &Graph) -> Result<ColoredGraph> {
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.is_empty() {
        return Err(Error::Invalid("the graph needs at least one edge".into()));
    }
    if edges.len() % 2 == 1 {
        edges.push(edges[0]);
    }
    let m = edges.len();
    let half = m / 2;
    let node = |clique: usize, i: usize| clique * m + i;
    let mut graph = Graph::new(4 * m);
    for q in 0..4 {
        for i in 0..m {
            for j in i + 1..m {
                graph.add_edge(node(q, i), node(q, j))?;
            }
        }
    }
    let mut color = vec![usize::MAX; 4 * m];
    for q in 0..4 {
        let next = (q + 1) % 4;
        for i in 0..half {
            // half B of clique q is matched to half A of the next clique
            let (b, a) = (node(q, half + i), node(next, i));
            graph.add_edge(b, a)?;
            if q % 2 == 0 {
                let (u, v) = edges[(q / 2) * half + i];
                color[b] = u;
                color[a] = v;
            }
        }
    }
    let mut fresh = g.node_count();
    for c in color.iter_mut().filter(|c| **c == usize::MAX) {
        *c = fresh;
        fresh += 1;
    }
    ColoredGraph::new(graph, color, fresh)
}

/// `p` internally disjoint s-t paths, one per set, whose nodes carry the
/// set's elements as colors. The minimum color s-t cut is a minimum hitting
/// set. Returns the graph, `s` and `t`; the endpoints get two fresh colors.
pub fn gen_hitting_set_gadget(
    universe: usize,
    sets: &[Vec<usize>],
) -> Result<(ColoredGraph, usize, usize)> {
    if sets.is_empty() || sets.iter().any(Vec::is_empty) {
        return Err(Error::EmptySet);
    }
    if let Some(&e) = sets.iter().flatten().find(|&&e| e >= universe) {
        return Err(Error::Invalid(format!(
            "element {e} outside a universe of {universe}"
        )));
    }
    let (s, t) = (0, 1);
    let mut color = vec![universe, universe + 1];
    let mut edges = Vec::new();
    for set in sets {
        let mut prev = s;
        for &e in set {
            let v = color.len();
            color.push(e);
            edges.push((prev, v));
            prev = v;
        }
        edges.push((prev, t));
    }
    let graph = Graph::from_edges(color.len(), edges)?;
    Ok((ColoredGraph::new(graph, color, universe + 2)?, s, t))
}

/// The seven-node graph of the ring-of-cliques worked example, with nodes
/// labelled 1 to 7 stored at indices 0 to 6. Its unique minimum vertex
/// cover is {2, 4, 5}.
pub fn worked_example_cover_graph() -> Graph {
    let labelled = [
        (1, 2),
        (1, 4),
        (2, 5),
        (2, 7),
        (3, 5),
        (4, 6),
        (4, 7),
        (5, 7),
    ];
    let mut g =
        Graph::from_edges(7, labelled.iter().map(|&(u, v)| (u - 1, v - 1))).expect("valid edges");
    g.set_labels((1..=7).map(|i| i.to_string()).collect())
        .expect("one label per node");
    g
}
