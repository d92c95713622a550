//! Colored graphs, demand/supply systems and the color-cut feasibility
//! oracles.
//!
//! A set of colors is a *color node cut* when the nodes it covers contain a
//! node cut: removing some subset of them either disconnects the graph or
//! leaves at most one node. In the s-t variant the endpoints are never
//! removed even when their own color is selected.

use crate::error::{Error, Result};
use crate::graph::{CutKind, Graph, NodeCut};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    graph: Graph,
    color_of: Vec<usize>,
    color_count: usize,
}

impl ColoredGraph {
    pub fn new(graph: Graph, color_of: Vec<usize>, color_count: usize) -> Result<Self> {
        if color_of.len() != graph.node_count() {
            return Err(Error::Invalid(format!(
                "{} colors for {} nodes",
                color_of.len(),
                graph.node_count()
            )));
        }
        if let Some((v, &c)) = color_of.iter().enumerate().find(|(_, &c)| c >= color_count) {
            return Err(Error::Invalid(format!(
                "node {v} has color {c} but only {color_count} colors exist"
            )));
        }
        Ok(ColoredGraph {
            graph,
            color_of,
            color_count,
        })
    }

    /// Every node gets its own color, so color cuts are plain node cuts.
    pub fn with_distinct_colors(graph: Graph) -> Self {
        let n = graph.node_count();
        ColoredGraph {
            graph,
            color_of: (0..n).collect(),
            color_count: n,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn node_count(&self) -> usize {
        self.graph.node_count()
    }

    pub fn color_of(&self, v: usize) -> usize {
        self.color_of[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.color_of
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    /// Nodes of each color, indexed by color id. Unused colors map to an
    /// empty list.
    pub fn class_members(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.color_count];
        for (v, &c) in self.color_of.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    pub fn used_colors(&self) -> Vec<usize> {
        let mut used = vec![false; self.color_count];
        for &c in &self.color_of {
            used[c] = true;
        }
        (0..self.color_count).filter(|&c| used[c]).collect()
    }

    /// Distinct colors among `nodes`, ascending.
    pub fn colors_of_nodes(&self, nodes: &[usize]) -> Vec<usize> {
        let mut cs: Vec<usize> = nodes.iter().map(|&v| self.color_of[v]).collect();
        cs.sort_unstable();
        cs.dedup();
        cs
    }

    pub fn covered(&self, colors: &[usize]) -> Vec<bool> {
        let mut selected = vec![false; self.color_count];
        for &c in colors {
            if c < self.color_count {
                selected[c] = true;
            }
        }
        self.color_of.iter().map(|&c| selected[c]).collect()
    }

    pub(crate) fn check_pair(&self, s: usize, t: usize) -> Result<()> {
        self.graph.check_node(s)?;
        self.graph.check_node(t)?;
        if s == t {
            return Err(Error::SameNode(s));
        }
        if self.graph.has_edge(s, t) {
            return Err(Error::AdjacentPair(s, t));
        }
        Ok(())
    }

    pub(crate) fn require_global(&self) -> Result<()> {
        if self.node_count() < 2 {
            return Err(Error::TooSmall(self.node_count()));
        }
        if !self.graph.is_connected(&[]) {
            return Err(Error::Disconnected);
        }
        Ok(())
    }

    /// True iff removing the nodes covered by `colors`, except `s` and `t`,
    /// disconnects `s` from `t`.
    pub fn is_color_st_cut(&self, colors: &[usize], s: usize, t: usize) -> Result<bool> {
        Ok(self.color_st_cut_witness(colors, s, t)?.is_some())
    }

    /// Separating set inside the covered nodes when `colors` is a color s-t
    /// cut: the covered nodes bordering the component of `s`.
    pub fn color_st_cut_witness(
        &self,
        colors: &[usize],
        s: usize,
        t: usize,
    ) -> Result<Option<NodeCut>> {
        self.check_pair(s, t)?;
        let mut removed = self.covered(colors);
        removed[s] = false;
        removed[t] = false;
        let reach = self.graph.reach_masked(s, &removed);
        if reach[t] {
            return Ok(None);
        }
        Ok(Some(boundary_cut(&self.graph, &reach, &removed, (s, t))))
    }

    /// True iff the nodes covered by `colors` contain a node cut.
    pub fn is_color_cut(&self, colors: &[usize]) -> Result<bool> {
        Ok(self.color_cut_witness(colors)?.is_some())
    }

    /// A node cut contained in the covered nodes, if one exists.
    ///
    /// Checks the trivializing case, then whether the uncovered nodes are
    /// already split, then one search per covered node `u` for a partner it
    /// can be separated from while both stay protected. Pairs of uncovered
    /// nodes need no search once the uncovered remainder is connected.
    pub fn color_cut_witness(&self, colors: &[usize]) -> Result<Option<NodeCut>> {
        let n = self.node_count();
        if n < 2 {
            return Err(Error::TooSmall(n));
        }
        let covered = self.covered(colors);
        let covered_nodes: Vec<usize> = (0..n).filter(|&v| covered[v]).collect();
        if n - covered_nodes.len() <= 1 {
            return Ok(Some(NodeCut {
                nodes: covered_nodes,
                kind: CutKind::Trivializing,
                witness_pair: None,
            }));
        }
        let comps = self.graph.connected_components_masked(&covered);
        if comps.len() >= 2 {
            let pair = (comps[0][0], comps[1][0]);
            let reach = self.graph.reach_masked(pair.0, &covered);
            return Ok(Some(boundary_cut(&self.graph, &reach, &covered, pair)));
        }
        let mut removed = covered;
        for &u in &covered_nodes {
            removed[u] = false;
            let reach = self.graph.reach_masked(u, &removed);
            let partner = (0..n).find(|&v| {
                v != u && !reach[v] && !self.graph.neighbors(v).iter().any(|&w| reach[w])
            });
            if let Some(v) = partner {
                removed[v] = false;
                return Ok(Some(boundary_cut(&self.graph, &reach, &removed, (u, v))));
            }
            removed[u] = true;
        }
        Ok(None)
    }

    /// Smallest color set covering at least `n - 1` nodes: every used
    /// color, minus one color carried by a single node if there is one.
    pub fn trivializing_cover(&self) -> Vec<usize> {
        let mut count = vec![0usize; self.color_count];
        for &c in &self.color_of {
            count[c] += 1;
        }
        let singleton = (0..self.color_count).find(|&c| count[c] == 1);
        (0..self.color_count)
            .filter(|&c| count[c] > 0 && Some(c) != singleton)
            .collect()
    }

    pub fn trivializing_cut(&self) -> ColorCutResult {
        let colors = self.trivializing_cover();
        let covered = self.covered(&colors);
        let nodes: Vec<usize> = (0..self.node_count()).filter(|&v| covered[v]).collect();
        ColorCutResult {
            value: colors.len(),
            lower_bound: colors.len(),
            colors,
            witness_cut: NodeCut {
                nodes,
                kind: CutKind::Trivializing,
                witness_pair: None,
            },
            mode: CutMode::Global,
            method: Method::Exact,
            q: None,
        }
    }
}

/// Nodes of `removed` adjacent to the `reach` region, which separate
/// `pair.0` from `pair.1`.
fn boundary_cut(g: &Graph, reach: &[bool], removed: &[bool], pair: (usize, usize)) -> NodeCut {
    let nodes = (0..g.node_count())
        .filter(|&v| removed[v] && !reach[v] && g.neighbors(v).iter().any(|&w| reach[w]))
        .collect();
    NodeCut {
        nodes,
        kind: CutKind::Separating,
        witness_pair: Some(pair),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CutMode {
    Global,
    St { s: usize, t: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Proven optimum from the general solver or enumeration.
    Exact,
    /// Proven optimum from the contraction algorithm (connected classes).
    PolyExact,
    /// Feasible cut within factor `q` of the optimum.
    QApprox,
    /// Budget ran out; `lower_bound..=value` brackets the optimum.
    Bound,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::PolyExact => "poly_exact",
            Method::QApprox => "q_approx",
            Method::Bound => "bound",
        }
    }
}

/// A feasible color cut with its provenance. `value == colors.len()` is an
/// upper bound on the optimum and `lower_bound` a proven lower bound; they
/// coincide for exact methods.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorCutResult {
    pub colors: Vec<usize>,
    pub value: usize,
    pub lower_bound: usize,
    pub witness_cut: NodeCut,
    pub mode: CutMode,
    pub method: Method,
    /// Largest number of components of a color class, for approximations.
    pub q: Option<usize>,
}

impl ColorCutResult {
    pub fn is_exact(&self) -> bool {
        self.lower_bound == self.value
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    OneWay,
    Bidirectional,
}

/// A demand graph whose nodes each depend on one or more supply nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependencySystem {
    demand: Graph,
    supply_count: usize,
    supply_graph: Option<Graph>,
    supplies_of: Vec<Vec<usize>>,
    direction: Direction,
}

/// Output of [`DependencySystem::transform`].
#[derive(Clone, Debug)]
pub struct Transformed {
    pub colored: ColoredGraph,
    /// Copies of each demand node in the colored graph, one per distinct
    /// supply, ordered by supply id.
    pub copy_map: Vec<Vec<usize>>,
}

impl DependencySystem {
    pub fn new(
        demand: Graph,
        supply_count: usize,
        supply_graph: Option<Graph>,
        supplies_of: Vec<Vec<usize>>,
        direction: Direction,
    ) -> Result<Self> {
        if supplies_of.len() != demand.node_count() {
            return Err(Error::Invalid(format!(
                "supply lists for {} of {} demand nodes",
                supplies_of.len(),
                demand.node_count()
            )));
        }
        for (v, list) in supplies_of.iter().enumerate() {
            if list.is_empty() {
                return Err(Error::Invalid(format!("demand node {v} has no supply")));
            }
            if let Some(&s) = list.iter().find(|&&s| s >= supply_count) {
                return Err(Error::Invalid(format!(
                    "demand node {v} depends on supply {s} of {supply_count}"
                )));
            }
        }
        if let Some(g) = &supply_graph {
            if g.node_count() != supply_count {
                return Err(Error::Invalid(format!(
                    "supply graph has {} nodes, expected {supply_count}",
                    g.node_count()
                )));
            }
        }
        if direction == Direction::Bidirectional && supply_graph.is_none() {
            return Err(Error::Invalid(
                "bidirectional systems need the supply topology".into(),
            ));
        }
        Ok(DependencySystem {
            demand,
            supply_count,
            supply_graph,
            supplies_of,
            direction,
        })
    }

    pub fn demand(&self) -> &Graph {
        &self.demand
    }

    pub fn supply_count(&self) -> usize {
        self.supply_count
    }

    pub fn supply_graph(&self) -> Option<&Graph> {
        self.supply_graph.as_ref()
    }

    pub fn supplies_of(&self, v: usize) -> &[usize] {
        &self.supplies_of[v]
    }

    pub fn supply_lists(&self) -> &[Vec<usize>] {
        &self.supplies_of
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// One colored copy of each demand node per distinct supply; copies of
    /// one node are mutually non-adjacent and copies of adjacent nodes are
    /// completely joined. Duplicate supply entries are collapsed first.
    pub fn transform(&self) -> Transformed {
        let mut color_of = Vec::new();
        let mut copy_map = Vec::with_capacity(self.demand.node_count());
        for list in &self.supplies_of {
            let mut distinct = list.clone();
            distinct.sort_unstable();
            distinct.dedup();
            let first = color_of.len();
            color_of.extend_from_slice(&distinct);
            copy_map.push((first..color_of.len()).collect::<Vec<_>>());
        }
        let mut graph = Graph::new(color_of.len());
        for (u, v) in self.demand.edges() {
            for &a in &copy_map[u] {
                for &b in &copy_map[v] {
                    graph.add_edge(a, b).expect("copies are distinct nodes");
                }
            }
        }
        Transformed {
            colored: ColoredGraph {
                graph,
                color_of,
                color_count: self.supply_count,
            },
            copy_map,
        }
    }

    /// Demand nodes all of whose supplies are in `removed_supplies`.
    pub fn failed_demand_nodes(&self, removed_supplies: &[usize]) -> Vec<usize> {
        let mut gone = vec![false; self.supply_count];
        for &s in removed_supplies {
            if s < self.supply_count {
                gone[s] = true;
            }
        }
        (0..self.demand.node_count())
            .filter(|&v| self.supplies_of[v].iter().all(|&s| gone[s]))
            .collect()
    }

    /// Whether removing `supplies` induces a node cut of the demand graph,
    /// evaluated on the transformed colored graph.
    pub fn is_supply_cut(&self, supplies: &[usize]) -> Result<bool> {
        self.transform().colored.is_color_cut(supplies)
    }

    /// s-t variant, evaluated between the first copies of `s` and `t`.
    pub fn is_supply_st_cut(&self, supplies: &[usize], s: usize, t: usize) -> Result<bool> {
        self.demand.check_node(s)?;
        self.demand.check_node(t)?;
        if s == t {
            return Err(Error::SameNode(s));
        }
        if self.demand.has_edge(s, t) {
            return Err(Error::AdjacentPair(s, t));
        }
        let tr = self.transform();
        tr.colored
            .is_color_st_cut(supplies, tr.copy_map[s][0], tr.copy_map[t][0])
    }
}
