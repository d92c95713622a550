//! Polynomial-time color cuts by contracting color classes.
//!
//! When every color class induces a connected subgraph, contracting each
//! class to a single node turns color cuts into ordinary node cuts, so a
//! max-flow computation is exact. In general each connected piece of a
//! class is contracted separately; the resulting cut uses at most `q` times
//! the optimal number of colors, where `q` is the largest number of pieces
//! of any class.

use crate::colored::{ColorCutResult, ColoredGraph, CutMode, Method};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Connected pieces of every color class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassComponents {
    /// Indexed by color; each piece is a sorted node list.
    pub components: Vec<Vec<Vec<usize>>>,
    /// Largest number of pieces of any class; 1 for a graph without nodes.
    pub q: usize,
}

pub fn color_class_components(cg: &ColoredGraph) -> ClassComponents {
    let g = cg.graph();
    let mut components = Vec::with_capacity(cg.color_count());
    for members in cg.class_members() {
        let mut outside = vec![true; g.node_count()];
        for &v in &members {
            outside[v] = false;
        }
        components.push(g.connected_components_masked(&outside));
    }
    let q = components.iter().map(Vec::len).max().unwrap_or(0).max(1);
    ClassComponents { components, q }
}

/// Graph with one node per contracted unit, plus a fresh source and target
/// when a pair was given.
#[derive(Clone, Debug)]
pub struct Contracted {
    pub graph: Graph,
    /// Color of each unit; `None` for the fresh endpoints.
    pub color_of: Vec<Option<usize>>,
    pub endpoints: Option<(usize, usize)>,
}

/// Contraction of a colored graph, computed once and wired to endpoints per
/// query.
#[derive(Clone, Debug)]
pub struct ContractionCore {
    core: Graph,
    unit_of: Vec<usize>,
    unit_color: Vec<usize>,
    q: usize,
}

impl ContractionCore {
    /// Contracts every color class, or every connected piece of a class when
    /// `per_component` is set.
    pub fn new(cg: &ColoredGraph, per_component: bool) -> Self {
        let g = cg.graph();
        let classes = color_class_components(cg);
        let mut unit_of = vec![usize::MAX; g.node_count()];
        let mut unit_color = Vec::new();
        for (color, pieces) in classes.components.iter().enumerate() {
            if pieces.is_empty() {
                continue;
            }
            if per_component {
                for piece in pieces {
                    for &v in piece {
                        unit_of[v] = unit_color.len();
                    }
                    unit_color.push(color);
                }
            } else {
                for piece in pieces {
                    for &v in piece {
                        unit_of[v] = unit_color.len();
                    }
                }
                unit_color.push(color);
            }
        }
        let mut core = Graph::new(unit_color.len());
        for (u, v) in g.edges() {
            let (a, b) = (unit_of[u], unit_of[v]);
            if a != b {
                core.add_edge(a, b).expect("units are in range");
            }
        }
        ContractionCore {
            core,
            unit_of,
            unit_color,
            q: classes.q,
        }
    }

    pub fn unit_count(&self) -> usize {
        self.unit_color.len()
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Adds `s'` adjacent to the units containing a neighbor of `s`, and
    /// `t'` likewise.
    pub fn wire(&self, g: &Graph, s: usize, t: usize) -> Contracted {
        let units = self.unit_count();
        let mut graph = self.core.clone();
        let s2 = graph.add_node();
        let t2 = graph.add_node();
        for (end, fresh) in [(s, s2), (t, t2)] {
            for &w in g.neighbors(end) {
                graph
                    .add_edge(fresh, self.unit_of[w])
                    .expect("units are in range");
            }
        }
        let mut color_of: Vec<Option<usize>> = self.unit_color.iter().map(|&c| Some(c)).collect();
        color_of.extend([None, None]);
        debug_assert_eq!(color_of.len(), units + 2);
        Contracted {
            graph,
            color_of,
            endpoints: Some((s2, t2)),
        }
    }

    /// Minimum `s't'` node cut, returned as units.
    fn st_cut_units(&self, g: &Graph, s: usize, t: usize) -> Vec<usize> {
        let c = self.wire(g, s, t);
        let (s2, t2) = c.endpoints.expect("wired");
        c.graph
            .st_node_connectivity(s2, t2)
            .expect("fresh endpoints are distinct and non-adjacent")
            .cut
            .nodes
    }

    fn colors_of_units(&self, units: &[usize]) -> Vec<usize> {
        let mut colors: Vec<usize> = units.iter().map(|&u| self.unit_color[u]).collect();
        colors.sort_unstable();
        colors.dedup();
        colors
    }
}

/// Contracted graph for a query. With a pair, `s` and `t` must be
/// non-adjacent.
pub fn contract_classes(
    cg: &ColoredGraph,
    st: Option<(usize, usize)>,
    per_component: bool,
) -> Result<Contracted> {
    let core = ContractionCore::new(cg, per_component);
    match st {
        Some((s, t)) => {
            cg.check_pair(s, t)?;
            Ok(core.wire(cg.graph(), s, t))
        }
        None => Ok(Contracted {
            graph: core.core.clone(),
            color_of: core.unit_color.iter().map(|&c| Some(c)).collect(),
            endpoints: None,
        }),
    }
}

fn require_connected_classes(core: &ContractionCore) -> Result<()> {
    if core.q > 1 {
        return Err(Error::ClassesNotConnected(core.q));
    }
    Ok(())
}

/// Exact minimum color s-t cut when every color class is connected.
pub fn min_color_st_cut_connected(cg: &ColoredGraph, s: usize, t: usize) -> Result<ColorCutResult> {
    cg.check_pair(s, t)?;
    let core = ContractionCore::new(cg, false);
    require_connected_classes(&core)?;
    let colors = core.colors_of_units(&core.st_cut_units(cg.graph(), s, t));
    st_result(cg, s, t, colors.len(), colors, Method::PolyExact, 1)
}

/// Exact global minimum color cut when every color class is connected.
pub fn min_color_cut_connected(cg: &ColoredGraph) -> Result<ColorCutResult> {
    cg.require_global()?;
    let core = ContractionCore::new(cg, false);
    require_connected_classes(&core)?;
    let (colors, _) = global_sweep(cg, &core);
    global_result(cg, colors.len(), colors, Method::PolyExact, 1)
}

/// Color cut within a factor `q` of optimal, for any colored graph.
pub fn min_color_cut_qapprox(cg: &ColoredGraph, mode: CutMode) -> Result<ColorCutResult> {
    let core = ContractionCore::new(cg, true);
    let q = core.q;
    match mode {
        CutMode::St { s, t } => {
            cg.check_pair(s, t)?;
            let units = core.st_cut_units(cg.graph(), s, t);
            let colors = core.colors_of_units(&units);
            let lower = units.len().div_ceil(q).max(1);
            st_result(cg, s, t, lower, colors, Method::QApprox, q)
        }
        CutMode::Global => {
            cg.require_global()?;
            let (colors, min_units) = global_sweep(cg, &core);
            let trivial = cg.trivializing_cover().len();
            let lower = match min_units {
                Some(k) => trivial.min(k.div_ceil(q)),
                None => trivial,
            }
            .max(1);
            global_result(cg, lower, colors, Method::QApprox, q)
        }
    }
}

/// Best colors over the trivializing cover and every non-adjacent pair, and
/// the smallest unit cut seen.
fn global_sweep(cg: &ColoredGraph, core: &ContractionCore) -> (Vec<usize>, Option<usize>) {
    let g = cg.graph();
    let mut best = cg.trivializing_cover();
    let mut min_units: Option<usize> = None;
    for s in 0..g.node_count() {
        for t in s + 1..g.node_count() {
            if g.has_edge(s, t) {
                continue;
            }
            let units = core.st_cut_units(g, s, t);
            min_units = Some(min_units.map_or(units.len(), |m| m.min(units.len())));
            let colors = core.colors_of_units(&units);
            if colors.len() < best.len() {
                best = colors;
            }
        }
    }
    (best, min_units)
}

fn st_result(
    cg: &ColoredGraph,
    s: usize,
    t: usize,
    lower: usize,
    colors: Vec<usize>,
    method: Method,
    q: usize,
) -> Result<ColorCutResult> {
    let witness_cut = cg
        .color_st_cut_witness(&colors, s, t)?
        .expect("contracted cuts are color cuts");
    Ok(ColorCutResult {
        value: colors.len(),
        lower_bound: lower.min(colors.len()),
        colors,
        witness_cut,
        mode: CutMode::St { s, t },
        method,
        q: Some(q),
    })
}

fn global_result(
    cg: &ColoredGraph,
    lower: usize,
    colors: Vec<usize>,
    method: Method,
    q: usize,
) -> Result<ColorCutResult> {
    let witness_cut = cg
        .color_cut_witness(&colors)?
        .expect("contracted cuts are color cuts");
    Ok(ColorCutResult {
        value: colors.len(),
        lower_bound: lower.min(colors.len()),
        colors,
        witness_cut,
        mode: CutMode::Global,
        method,
        q: Some(q),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_components() {
        let g = Graph::path(4);
        let cg = ColoredGraph::new(g, vec![0, 0, 1, 0], 2).unwrap();
        let cc = color_class_components(&cg);
        assert_eq!(cc.q, 2);
        assert_eq!(cc.components[0], vec![vec![0, 1], vec![3]]);
        assert_eq!(cc.components[1], vec![vec![2]]);
    }

    #[test]
    fn path_contracts_to_edge() {
        let cg = ColoredGraph::new(Graph::path(3), vec![1, 1, 2], 3).unwrap();
        let c = contract_classes(&cg, None, false).unwrap();
        assert_eq!(c.graph.node_count(), 2);
        assert_eq!(c.graph.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(c.color_of, vec![Some(1), Some(2)]);
    }

    #[test]
    fn distinct_colors_match_connectivity() {
        let g = Graph::cycle(7);
        let cg = ColoredGraph::with_distinct_colors(g.clone());
        let r = min_color_st_cut_connected(&cg, 0, 3).unwrap();
        assert_eq!(r.value, g.st_node_connectivity(0, 3).unwrap().value);
        let r = min_color_cut_connected(&cg).unwrap();
        assert_eq!(r.value, 2);
    }

    #[test]
    fn split_class_rejected() {
        let cg = ColoredGraph::new(Graph::path(4), vec![0, 1, 2, 0], 3).unwrap();
        assert!(matches!(
            min_color_cut_connected(&cg),
            Err(Error::ClassesNotConnected(2))
        ));
        let r = min_color_cut_qapprox(&cg, CutMode::Global).unwrap();
        assert_eq!(r.q, Some(2));
        assert!(r.lower_bound <= r.value);
    }

    #[test]
    fn one_color_trivializes() {
        let cg = ColoredGraph::new(Graph::cycle(5), vec![0; 5], 1).unwrap();
        assert_eq!(min_color_cut_connected(&cg).unwrap().value, 1);
    }
}
