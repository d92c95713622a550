//! Branch and bound for minimum hitting set over small color universes.

use std::time::Instant;

use fixedbitset::FixedBitSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum HsOutcome {
    /// A minimum hitting set, ascending.
    Found(Vec<usize>),
    /// No hitting set of size `<= limit` exists.
    NoneWithin,
    /// Deadline reached; the optimum is at least `lower`.
    TimedOut { lower: usize },
}

#[derive(Clone, Debug)]
pub(crate) struct HittingSet {
    universe: usize,
    constraints: Vec<FixedBitSet>,
}

impl HittingSet {
    pub(crate) fn new(universe: usize) -> Self {
        HittingSet {
            universe,
            constraints: Vec::new(),
        }
    }

    /// Adds a constraint; returns false for an exact duplicate.
    pub(crate) fn add(&mut self, elements: &[usize]) -> bool {
        let mut set = FixedBitSet::with_capacity(self.universe);
        for &e in elements {
            set.insert(e);
        }
        if self.constraints.contains(&set) {
            return false;
        }
        self.constraints.push(set);
        true
    }

    #[cfg(test)]
    pub(crate) fn is_hit_by(&self, chosen: &[usize]) -> bool {
        let mut set = FixedBitSet::with_capacity(self.universe);
        for &e in chosen {
            set.insert(e);
        }
        self.constraints.iter().all(|c| !c.is_disjoint(&set))
    }

    /// Size of a greedily packed family of pairwise disjoint constraints.
    pub(crate) fn packing_bound(&self) -> usize {
        let banned = FixedBitSet::with_capacity(self.universe);
        let all: Vec<usize> = (0..self.constraints.len()).collect();
        packing(&self.constraints, &all, &banned)
    }

    /// Minimum hitting set of size at most `limit`. `lower` is a known lower
    /// bound on the optimum; the search stops as soon as it is met.
    pub(crate) fn solve(&self, lower: usize, limit: usize, deadline: Option<Instant>) -> HsOutcome {
        let mut search = Search {
            sets: &self.constraints,
            best: None,
            best_size: limit + 1,
            target: lower,
            deadline,
            nodes: 0,
            timed_out: false,
        };
        let unhit: Vec<usize> = (0..self.constraints.len()).collect();
        let mut banned = FixedBitSet::with_capacity(self.universe);
        let mut chosen = Vec::new();
        search.run(&unhit, &mut banned, &mut chosen);
        match (search.best, search.timed_out) {
            (Some(mut best), false) => {
                best.sort_unstable();
                HsOutcome::Found(best)
            }
            (None, false) => HsOutcome::NoneWithin,
            (_, true) => HsOutcome::TimedOut { lower },
        }
    }
}

struct Search<'a> {
    sets: &'a [FixedBitSet],
    best: Option<Vec<usize>>,
    best_size: usize,
    target: usize,
    deadline: Option<Instant>,
    nodes: u64,
    timed_out: bool,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.timed_out || (self.best.is_some() && self.best_size <= self.target)
    }

    fn run(&mut self, unhit: &[usize], banned: &mut FixedBitSet, chosen: &mut Vec<usize>) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                    return;
                }
            }
        }
        if unhit.is_empty() {
            if chosen.len() < self.best_size {
                self.best_size = chosen.len();
                self.best = Some(chosen.clone());
            }
            return;
        }
        if chosen.len() + 1 >= self.best_size {
            return;
        }
        if chosen.len() + packing(self.sets, unhit, banned) >= self.best_size {
            return;
        }

        // branch on the constraint with the fewest admissible elements
        let (pick, width) = unhit
            .iter()
            .map(|&i| (i, self.sets[i].difference(banned).count()))
            .min_by_key(|&(i, w)| (w, i))
            .expect("unhit is non-empty");
        if width == 0 {
            return;
        }
        let mut freq = vec![0usize; banned.len()];
        for &i in unhit {
            for e in self.sets[i].ones() {
                freq[e] += 1;
            }
        }
        let mut candidates: Vec<usize> = self.sets[pick].difference(banned).collect();
        candidates.sort_by_key(|&e| (std::cmp::Reverse(freq[e]), e));

        let mut newly_banned = Vec::with_capacity(candidates.len());
        for e in candidates {
            let rest: Vec<usize> = unhit
                .iter()
                .copied()
                .filter(|&i| !self.sets[i].contains(e))
                .collect();
            chosen.push(e);
            self.run(&rest, banned, chosen);
            chosen.pop();
            if self.done() {
                break;
            }
            // later siblings exclude e: those subtrees were covered here
            banned.insert(e);
            newly_banned.push(e);
        }
        for e in newly_banned {
            banned.set(e, false);
        }
    }
}

/// Greedy family of constraints that are pairwise disjoint once banned
/// elements are discarded; smallest constraints first.
fn packing(sets: &[FixedBitSet], unhit: &[usize], banned: &FixedBitSet) -> usize {
    let mut avail: Vec<(usize, FixedBitSet)> = unhit
        .iter()
        .map(|&i| {
            let mut s = sets[i].clone();
            s.difference_with(banned);
            (s.count_ones(..), s)
        })
        .collect();
    avail.sort_by_key(|(w, _)| *w);
    let mut used = FixedBitSet::with_capacity(banned.len());
    let mut count = 0;
    for (w, s) in avail {
        if w == 0 {
            // an unhittable constraint: the branch is infeasible
            return usize::MAX / 2;
        }
        if s.is_disjoint(&used) {
            used.union_with(&s);
            count += 1;
        }
    }
    count
}
