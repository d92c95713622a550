//! Exact minimum color cuts.
//!
//! The s-t problem is solved as an implicit hitting set: every s-t path
//! that survives a candidate color set contributes the colors of its
//! internal nodes as a constraint that any color cut must hit. A minimum
//! hitting set of the collected constraints is a lower bound; once it is
//! also a cut it is optimal. The global problem takes the minimum of the
//! closed-form trivializing cover and the s-t optimum over all non-adjacent
//! pairs.

mod brute;
mod hitting;
mod lp;

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::colored::{ColorCutResult, ColoredGraph, CutMode, Method};
use crate::error::Result;

pub use brute::{brute_force_min_cut, DEFAULT_BRUTE_FORCE_LIMIT};
pub(crate) use hitting::{HittingSet, HsOutcome};
pub use lp::{export_milp, write_lp};

#[derive(Clone, Debug)]
pub struct ExactOptions {
    /// Wall-clock budget per query; `None` runs to completion.
    pub budget: Option<Duration>,
    /// Worker threads for the global pair sweep. Results are deterministic
    /// only with a single worker.
    pub workers: usize,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            budget: Some(Duration::from_secs(60)),
            workers: 1,
        }
    }
}

impl ExactOptions {
    pub fn unbounded() -> Self {
        ExactOptions {
            budget: None,
            workers: 1,
        }
    }

    fn deadline(&self) -> Option<Instant> {
        self.budget.map(|b| Instant::now() + b)
    }
}

/// Minimum color s-t node cut.
pub fn min_color_st_cut_exact(
    cg: &ColoredGraph,
    s: usize,
    t: usize,
    opts: &ExactOptions,
) -> Result<ColorCutResult> {
    cg.check_pair(s, t)?;
    let deadline = opts.deadline();
    let g = cg.graph();
    let by_s = cg.colors_of_nodes(g.neighbors(s));
    let by_t = cg.colors_of_nodes(g.neighbors(t));
    let fallback = if by_s.len() <= by_t.len() { by_s } else { by_t };

    let mut solver = PairSolver::new(cg, s, t);
    let outcome = solver.solve(fallback.len(), &[], deadline);
    let (colors, lower, method) = match outcome {
        PairOutcome::Improved(colors) => {
            let k = colors.len();
            (colors, k, Method::Exact)
        }
        PairOutcome::NoBetter => {
            let k = fallback.len();
            (fallback, k, Method::Exact)
        }
        PairOutcome::TimedOut { lower } => (fallback, lower, Method::Bound),
    };
    let witness_cut = cg
        .color_st_cut_witness(&colors, s, t)?
        .expect("solver returns feasible cuts");
    let method = if lower == colors.len() {
        method
    } else {
        Method::Bound
    };
    Ok(ColorCutResult {
        value: colors.len(),
        lower_bound: lower,
        colors,
        witness_cut,
        mode: CutMode::St { s, t },
        method,
        q: None,
    })
}

/// Global minimum color node cut of a connected colored graph.
pub fn min_color_cut_exact(cg: &ColoredGraph, opts: &ExactOptions) -> Result<ColorCutResult> {
    cg.require_global()?;
    let deadline = opts.deadline();
    let g = cg.graph();
    let n = g.node_count();

    // incumbent: trivializing cover, then the cheapest closed neighborhood
    // that isolates a node from some non-neighbor
    let mut best_colors = cg.trivializing_cover();
    for v in 0..n {
        if g.degree(v) + 1 < n {
            let cs = cg.colors_of_nodes(g.neighbors(v));
            if cs.len() < best_colors.len() {
                best_colors = cs;
            }
        }
    }

    let pairs = candidate_pairs(cg);
    let initial = best_colors.len();
    // cheap per-pair lower bounds from color-disjoint paths
    let bounds: Vec<usize> = if opts.workers > 1 {
        pool(opts.workers).install(|| {
            pairs
                .par_iter()
                .map(|&(s, t)| disjoint_path_bound(cg, s, t, initial).0)
                .collect()
        })
    } else {
        pairs
            .iter()
            .map(|&(s, t)| disjoint_path_bound(cg, s, t, initial).0)
            .collect()
    };

    let shared = Shared {
        best_value: AtomicUsize::new(best_colors.len()),
        best: Mutex::new(best_colors),
        pool: Mutex::new(PathPool::default()),
        unresolved_lower: AtomicUsize::new(usize::MAX),
        timed_out: AtomicBool::new(false),
    };
    let work: Vec<(usize, usize, usize)> = pairs
        .iter()
        .zip(&bounds)
        .map(|(&(s, t), &b)| (s, t, b))
        .collect();

    let process = |&(s, t, bound): &(usize, usize, usize)| {
        let upper = shared.best_value.load(Ordering::SeqCst);
        if bound >= upper {
            return;
        }
        if shared.timed_out.load(Ordering::SeqCst) || deadline.is_some_and(|d| Instant::now() >= d)
        {
            shared.timed_out.store(true, Ordering::SeqCst);
            shared.unresolved_lower.fetch_min(bound, Ordering::SeqCst);
            return;
        }
        let seeds = shared.pool.lock().unwrap().constraints_for(cg, s, t);
        let mut solver = PairSolver::new(cg, s, t);
        let outcome = solver.solve(upper, &seeds, deadline);
        shared.pool.lock().unwrap().extend(solver.found_paths);
        match outcome {
            PairOutcome::Improved(colors) => {
                let mut best = shared.best.lock().unwrap();
                if colors.len() < best.len() {
                    shared.best_value.store(colors.len(), Ordering::SeqCst);
                    *best = colors;
                }
            }
            PairOutcome::NoBetter => {}
            PairOutcome::TimedOut { lower } => {
                shared.timed_out.store(true, Ordering::SeqCst);
                shared.unresolved_lower.fetch_min(lower, Ordering::SeqCst);
            }
        }
    };
    if opts.workers > 1 {
        pool(opts.workers).install(|| work.par_iter().for_each(process));
    } else {
        work.iter().for_each(process);
    }

    let colors = shared.best.into_inner().unwrap();
    let value = colors.len();
    let lower = value.min(shared.unresolved_lower.into_inner()).max(1);
    let witness_cut = cg
        .color_cut_witness(&colors)?
        .expect("solver returns feasible cuts");
    Ok(ColorCutResult {
        value,
        lower_bound: lower,
        colors,
        witness_cut,
        mode: CutMode::Global,
        method: if lower == value {
            Method::Exact
        } else {
            Method::Bound
        },
        q: None,
    })
}

struct Shared {
    best_value: AtomicUsize,
    best: Mutex<Vec<usize>>,
    pool: Mutex<PathPool>,
    unresolved_lower: AtomicUsize,
    timed_out: AtomicBool,
}

fn pool(workers: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool")
}

/// One representative pair per class of equivalent pairs, ordered by degree
/// sum. Nodes with identical open neighborhoods (false twins) have the same
/// s-t cut values against every third node, so a pair of twin classes is
/// evaluated once, plus one pair inside each class with several members.
fn candidate_pairs(cg: &ColoredGraph) -> Vec<(usize, usize)> {
    let g = cg.graph();
    let mut class_of: HashMap<&[usize], usize> = HashMap::new();
    let mut reps: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.node_count() {
        let id = *class_of.entry(g.neighbors(v)).or_insert_with(|| {
            reps.push(Vec::new());
            reps.len() - 1
        });
        reps[id].push(v);
    }
    let mut pairs = Vec::new();
    for (i, a) in reps.iter().enumerate() {
        if a.len() >= 2 {
            pairs.push((a[0], a[1]));
        }
        for b in &reps[i + 1..] {
            let (s, t) = (a[0].min(b[0]), a[0].max(b[0]));
            if !g.has_edge(s, t) {
                pairs.push((s, t));
            }
        }
    }
    pairs.sort_by_key(|&(s, t)| (g.degree(s) + g.degree(t), s, t));
    pairs
}

/// Greedy family of s-t paths with pairwise disjoint internal color sets,
/// stopping at `cap` paths. Its size bounds the s-t optimum from below.
fn disjoint_path_bound(
    cg: &ColoredGraph,
    s: usize,
    t: usize,
    cap: usize,
) -> (usize, Vec<Vec<usize>>) {
    let g = cg.graph();
    let mut used = vec![false; cg.color_count()];
    let mut removed = vec![false; g.node_count()];
    let mut constraints = Vec::new();
    while constraints.len() < cap {
        let Some(path) = g.shortest_path_avoiding(s, t, &removed) else {
            break;
        };
        let colors = cg.colors_of_nodes(&path[1..path.len() - 1]);
        for &c in &colors {
            used[c] = true;
        }
        for v in 0..g.node_count() {
            removed[v] = v != s && v != t && used[cg.color_of(v)];
        }
        constraints.push(colors);
    }
    (constraints.len(), constraints)
}

/// Counterexample paths remembered across pairs. A stored path through both
/// `a` and `b` yields its sub-path between them as a constraint for `(a, b)`.
#[derive(Default)]
struct PathPool {
    paths: Vec<Vec<usize>>,
    through: HashMap<usize, Vec<(usize, usize)>>,
}

impl PathPool {
    const MAX_PATHS: usize = 200_000;

    fn extend(&mut self, paths: Vec<Vec<usize>>) {
        for path in paths {
            if self.paths.len() >= Self::MAX_PATHS {
                return;
            }
            let id = self.paths.len();
            for (pos, &v) in path.iter().enumerate() {
                self.through.entry(v).or_default().push((id, pos));
            }
            self.paths.push(path);
        }
    }

    fn constraints_for(&self, cg: &ColoredGraph, a: usize, b: usize) -> Vec<Vec<usize>> {
        let Some(hits) = self.through.get(&a) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for &(id, pa) in hits {
            let path = &self.paths[id];
            if let Some(pb) = path.iter().position(|&v| v == b) {
                let (lo, hi) = (pa.min(pb), pa.max(pb));
                if hi > lo + 1 {
                    out.push(cg.colors_of_nodes(&path[lo + 1..hi]));
                }
            }
        }
        out
    }
}

enum PairOutcome {
    /// Optimal cut strictly below the requested upper bound.
    Improved(Vec<usize>),
    /// No cut below the upper bound exists.
    NoBetter,
    TimedOut {
        lower: usize,
    },
}

struct PairSolver<'a> {
    cg: &'a ColoredGraph,
    s: usize,
    t: usize,
    constraints: HittingSet,
    found_paths: Vec<Vec<usize>>,
}

impl<'a> PairSolver<'a> {
    fn new(cg: &'a ColoredGraph, s: usize, t: usize) -> Self {
        PairSolver {
            cg,
            s,
            t,
            constraints: HittingSet::new(cg.color_count()),
            found_paths: Vec::new(),
        }
    }

    /// Searches for a color s-t cut with fewer than `upper` colors.
    fn solve(
        &mut self,
        upper: usize,
        seeds: &[Vec<usize>],
        deadline: Option<Instant>,
    ) -> PairOutcome {
        let (_, disjoint) = disjoint_path_bound(self.cg, self.s, self.t, upper);
        for c in disjoint.iter().chain(seeds) {
            self.constraints.add(c);
        }
        let mut lower = self.constraints.packing_bound();
        let g = self.cg.graph();
        loop {
            if lower >= upper {
                return PairOutcome::NoBetter;
            }
            if deadline.is_some_and(|d| Instant::now() >= d) {
                return PairOutcome::TimedOut { lower };
            }
            let candidate = match self.constraints.solve(lower, upper - 1, deadline) {
                HsOutcome::Found(h) => h,
                HsOutcome::NoneWithin => return PairOutcome::NoBetter,
                HsOutcome::TimedOut { lower } => return PairOutcome::TimedOut { lower },
            };
            lower = lower.max(candidate.len());

            // collect surviving paths, each blocked in turn, until the
            // candidate plus their colors disconnects s from t
            let mut removed = self.cg.covered(&candidate);
            removed[self.s] = false;
            removed[self.t] = false;
            let mut fresh = 0;
            while let Some(path) = g.shortest_path_avoiding(self.s, self.t, &removed) {
                let colors = self.cg.colors_of_nodes(&path[1..path.len() - 1]);
                let selected = self.cg.covered(&colors);
                for v in 0..g.node_count() {
                    if selected[v] && v != self.s && v != self.t {
                        removed[v] = true;
                    }
                }
                if self.constraints.add(&colors) {
                    fresh += 1;
                }
                self.found_paths.push(path);
            }
            if fresh == 0 {
                return PairOutcome::Improved(candidate);
            }
        }
    }
}
