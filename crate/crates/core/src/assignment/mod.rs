//! Supply assignment strategies that keep supply node connectivity high.
//!
//! One-way plans give every demand node a single supply, i.e. a color.
//! Bidirectional plans wire two networks to each other so that every node
//! of network `i` has `n_si` supplies in the other network.

mod cds;
mod groups;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::colored::{ColoredGraph, DependencySystem, Direction};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use cds::{greedy_cds_partition, is_cds, CdsPartition};
pub use groups::{group_hitting_bound, partition_into_groups, GroupLayout, GroupState};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    PathBased,
    CdsBased,
    Random,
    BidirCds,
    BidirRandom,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::PathBased => "path_based",
            Provenance::CdsBased => "cds_based",
            Provenance::Random => "random",
            Provenance::BidirCds => "bidir_cds",
            Provenance::BidirRandom => "bidir_random",
        }
    }
}

/// Structures a plan was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structures {
    None,
    /// Internally disjoint s-t paths, endpoints included.
    Paths(Vec<Vec<usize>>),
    Cds(CdsPartition),
    Groups {
        cds: CdsPartition,
        layout: GroupLayout,
        /// Lower bound on the full groups that must fail before every CDS
        /// loses a node: `min(ceil((h - 1) / 2), groups)`.
        group_hitting_bound: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssignmentPlan {
    /// Supplies of every demand node, ascending and distinct.
    pub supplies_of: Vec<Vec<usize>>,
    pub supply_count: usize,
    pub provenance: Provenance,
    pub structures: Structures,
    /// Proven lower bound on the minimum color cut of the resulting system
    /// (the s-t cut for path-based plans).
    pub guaranteed_lower_bound: usize,
}

impl AssignmentPlan {
    /// Colors of a single-supply plan.
    pub fn colors(&self) -> Option<Vec<usize>> {
        self.supplies_of
            .iter()
            .map(|s| (s.len() == 1).then(|| s[0]))
            .collect()
    }

    /// The demand graph colored by a single-supply plan.
    pub fn colored(&self, demand: &Graph) -> Result<ColoredGraph> {
        let colors = self
            .colors()
            .ok_or_else(|| Error::Invalid("plan has several supplies per node".into()))?;
        ColoredGraph::new(demand.clone(), colors, self.supply_count)
    }

    /// Dependency system of `demand` under this plan.
    pub fn system(&self, demand: &Graph, supply_graph: Option<&Graph>) -> Result<DependencySystem> {
        let direction = match self.provenance {
            Provenance::BidirCds | Provenance::BidirRandom => Direction::Bidirectional,
            _ => Direction::OneWay,
        };
        DependencySystem::new(
            demand.clone(),
            self.supply_count,
            supply_graph.cloned(),
            self.supplies_of.clone(),
            direction,
        )
    }
}

/// Fewest supplies whose loss fails every demand node except one. Any cut
/// that leaves some connected dominating set with a surviving node costs at
/// least this much.
pub fn all_but_one_cost(supplies_of: &[Vec<usize>], supply_count: usize) -> usize {
    let mut users = vec![0usize; supply_count];
    for list in supplies_of {
        for &s in list {
            users[s] += 1;
        }
    }
    let used = users.iter().filter(|&&u| u > 0).count();
    let exclusive = supplies_of
        .iter()
        .map(|list| list.iter().filter(|&&s| users[s] == 1).count())
        .max()
        .unwrap_or(0);
    used - exclusive
}

/// Colors the paths of a maximum family of internally disjoint s-t paths
/// with distinct colors; paths beyond `n_c`, endpoints and nodes off the
/// paths get color 0. The s-t color cut is then `min(k_st, n_c)`.
pub fn assign_path_based(g: &Graph, s: usize, t: usize, n_c: usize) -> Result<AssignmentPlan> {
    require_colors(n_c)?;
    let st = g.st_node_connectivity(s, t)?;
    let mut color = vec![0usize; g.node_count()];
    for (i, path) in st.paths.iter().enumerate() {
        let c = if i < n_c { i } else { 0 };
        for &v in &path[1..path.len() - 1] {
            color[v] = c;
        }
    }
    Ok(AssignmentPlan {
        supplies_of: color.into_iter().map(|c| vec![c]).collect(),
        supply_count: n_c,
        provenance: Provenance::PathBased,
        guaranteed_lower_bound: st.value.min(n_c),
        structures: Structures::Paths(st.paths),
    })
}

/// One color per disjoint CDS, distinct up to `n_c`; surplus CDS and
/// merged leftover nodes get color 0.
pub fn assign_cds_based(g: &Graph, n_c: usize) -> Result<AssignmentPlan> {
    require_colors(n_c)?;
    let cds = greedy_cds_partition(g)?;
    let mut color = vec![0usize; g.node_count()];
    for (i, set) in cds.cds_list.iter().enumerate() {
        let c = if i < n_c { i } else { 0 };
        for &v in set {
            color[v] = c;
        }
    }
    for &v in &cds.extras {
        color[v] = 0;
    }
    let supplies_of: Vec<Vec<usize>> = color.into_iter().map(|c| vec![c]).collect();
    let bound = cds.len().min(n_c).min(all_but_one_cost(&supplies_of, n_c));
    Ok(AssignmentPlan {
        supplies_of,
        supply_count: n_c,
        provenance: Provenance::CdsBased,
        structures: Structures::Cds(cds),
        guaranteed_lower_bound: bound,
    })
}

/// Independent uniform colors from a seeded generator.
pub fn assign_random(g: &Graph, n_c: usize, seed: u64) -> Result<AssignmentPlan> {
    require_colors(n_c)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let supplies_of = (0..g.node_count())
        .map(|_| vec![rng.gen_range(0..n_c)])
        .collect();
    Ok(AssignmentPlan {
        supplies_of,
        supply_count: n_c,
        provenance: Provenance::Random,
        structures: Structures::None,
        guaranteed_lower_bound: lower_bound_for(g),
    })
}

/// Group-based wiring of two networks. Nodes of `g1` are packed CDS by CDS
/// into groups of `ns2` nodes and nodes of `g2` into groups of `ns1`; both
/// sides get the same number of groups, and group `i` of one side depends
/// on every node of group `i` of the other. Leftover nodes are wired by
/// dealing the leftover stubs of `g1` round-robin over the leftover nodes
/// of `g2`, which makes every leftover node depend on all leftover nodes
/// of the other side.
pub fn assign_bidirectional_cds(
    g1: &Graph,
    g2: &Graph,
    ns1: usize,
    ns2: usize,
) -> Result<(AssignmentPlan, AssignmentPlan)> {
    check_stubs(g1, g2, ns1, ns2)?;
    let cds1 = greedy_cds_partition(g1)?;
    let cds2 = greedy_cds_partition(g2)?;
    let layout1 = partition_into_groups(&cds1.cds_list, ns2);
    let layout2 = partition_into_groups(&cds2.cds_list, ns1);
    debug_assert_eq!(layout1.group_count(), layout2.group_count());
    let (r1, r2) = (layout1.remainder.len(), layout2.remainder.len());
    // r1 * ns1 == r2 * ns2, so one side has leftovers exactly when the other does
    debug_assert_eq!(r1 == 0, r2 == 0);

    let mut sup1 = vec![Vec::new(); g1.node_count()];
    let mut sup2 = vec![Vec::new(); g2.node_count()];
    for (p1, p2) in layout1.groups.iter().zip(&layout2.groups) {
        for &a in p1 {
            for &b in p2 {
                sup1[a].push(b);
                sup2[b].push(a);
            }
        }
    }
    let stubs1: Vec<usize> = layout1
        .remainder
        .iter()
        .flat_map(|&a| std::iter::repeat_n(a, ns1))
        .collect();
    for (i, &a) in stubs1.iter().enumerate() {
        let b = layout2.remainder[i % r2];
        sup1[a].push(b);
        sup2[b].push(a);
    }
    normalize(&mut sup1);
    normalize(&mut sup2);

    let plan1 = bidir_cds_plan(
        sup1,
        g2.node_count(),
        ns1,
        r2,
        cds1,
        layout1,
        g1.node_count(),
    );
    let plan2 = bidir_cds_plan(
        sup2,
        g1.node_count(),
        ns2,
        r1,
        cds2,
        layout2,
        g2.node_count(),
    );
    Ok((plan1, plan2))
}

fn bidir_cds_plan(
    supplies_of: Vec<Vec<usize>>,
    supply_count: usize,
    ns: usize,
    other_remainder: usize,
    cds: CdsPartition,
    layout: GroupLayout,
    node_count: usize,
) -> AssignmentPlan {
    let half = group_hitting_bound(cds.len(), layout.group_count());
    // a group fails only when all ns nodes of its partner group fail; a
    // leftover node fails only when the whole other remainder fails
    let in_remainder = {
        let mut m = vec![false; node_count];
        for &v in &layout.remainder {
            m[v] = true;
        }
        m
    };
    let by_groups = layout
        .min_groups_hitting(node_count, |_| true)
        .map(|a| ns * a);
    let with_remainder = (other_remainder > 0)
        .then(|| {
            layout
                .min_groups_hitting(node_count, |set| !set.iter().any(|&v| in_remainder[v]))
                .map(|b| ns * b + other_remainder)
        })
        .flatten();
    let hitting = [by_groups, with_remainder].into_iter().flatten().min();
    let cap = all_but_one_cost(&supplies_of, supply_count);
    let bound = hitting.map_or(cap, |h| h.min(cap));
    AssignmentPlan {
        supplies_of,
        supply_count,
        provenance: Provenance::BidirCds,
        structures: Structures::Groups {
            cds,
            layout,
            group_hitting_bound: half,
        },
        guaranteed_lower_bound: bound,
    }
}

/// Uniform random matching of the `ns1` stubs of every `g1` node with the
/// `ns2` stubs of every `g2` node. Repeated pairs collapse, so a node may
/// end up with fewer distinct supplies.
pub fn assign_bidirectional_random(
    g1: &Graph,
    g2: &Graph,
    ns1: usize,
    ns2: usize,
    seed: u64,
) -> Result<(AssignmentPlan, AssignmentPlan)> {
    check_stubs(g1, g2, ns1, ns2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs2: Vec<usize> = (0..g2.node_count())
        .flat_map(|b| std::iter::repeat_n(b, ns2))
        .collect();
    stubs2.shuffle(&mut rng);
    let mut sup1 = vec![Vec::new(); g1.node_count()];
    let mut sup2 = vec![Vec::new(); g2.node_count()];
    let stubs1 = (0..g1.node_count()).flat_map(|a| std::iter::repeat_n(a, ns1));
    for (a, b) in stubs1.zip(stubs2) {
        sup1[a].push(b);
        sup2[b].push(a);
    }
    normalize(&mut sup1);
    normalize(&mut sup2);
    let plan = |supplies_of, supply_count, g: &Graph| AssignmentPlan {
        supplies_of,
        supply_count,
        provenance: Provenance::BidirRandom,
        structures: Structures::None,
        guaranteed_lower_bound: lower_bound_for(g),
    };
    Ok((
        plan(sup1, g2.node_count(), g1),
        plan(sup2, g1.node_count(), g2),
    ))
}

fn lower_bound_for(g: &Graph) -> usize {
    // a connected graph with two nodes needs at least one removal
    usize::from(g.node_count() >= 2 && g.is_connected(&[]))
}

fn require_colors(n_c: usize) -> Result<()> {
    if n_c == 0 {
        return Err(Error::Invalid("at least one color is required".into()));
    }
    Ok(())
}

fn check_stubs(g1: &Graph, g2: &Graph, ns1: usize, ns2: usize) -> Result<()> {
    let (n1, n2) = (g1.node_count(), g2.node_count());
    if ns1 == 0 || ns2 == 0 || n1 * ns1 != n2 * ns2 {
        return Err(Error::StubMismatch { n1, ns1, n2, ns2 });
    }
    Ok(())
}

fn normalize(lists: &mut [Vec<usize>]) {
    for list in lists {
        list.sort_unstable();
        list.dedup();
    }
}
