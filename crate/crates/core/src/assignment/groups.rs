use crate::exact::{HittingSet, HsOutcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupState {
    Empty,
    Occupied,
    Full,
}

/// Nodes packed into groups of a fixed size, CDS by CDS.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupLayout {
    pub group_size: usize,
    /// Groups in creation order; all are full once packing ends.
    pub groups: Vec<Vec<usize>>,
    /// Nodes left over after every group filled up.
    pub remainder: Vec<usize>,
    /// The packed sets, sorted by size as packing consumed them.
    pub sets: Vec<Vec<usize>>,
}

impl GroupLayout {
    pub fn group_count(&self) -> usize {
        self.groups.len()
    }

    pub fn state(&self, g: usize) -> GroupState {
        match self.groups.get(g).map_or(0, Vec::len) {
            0 => GroupState::Empty,
            k if k < self.group_size => GroupState::Occupied,
            _ => GroupState::Full,
        }
    }

    /// Group index of every node, `None` for the remainder.
    pub fn group_of(&self, node_count: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; node_count];
        for (g, members) in self.groups.iter().enumerate() {
            for &v in members {
                out[v] = Some(g);
            }
        }
        out
    }

    /// For each set, the groups holding at least one of its nodes.
    pub fn groups_touching(&self, node_count: usize) -> Vec<Vec<usize>> {
        let group_of = self.group_of(node_count);
        self.sets
            .iter()
            .map(|set| {
                let mut gs: Vec<usize> = set.iter().filter_map(|&v| group_of[v]).collect();
                gs.sort_unstable();
                gs.dedup();
                gs
            })
            .collect()
    }

    /// Fewest groups whose removal leaves every set with a removed node;
    /// `None` when some set lies entirely in the remainder. Only sets
    /// selected by `keep` are considered.
    pub fn min_groups_hitting(
        &self,
        node_count: usize,
        keep: impl Fn(&[usize]) -> bool,
    ) -> Option<usize> {
        let mut hs = HittingSet::new(self.group_count());
        for (set, touching) in self.sets.iter().zip(self.groups_touching(node_count)) {
            if !keep(set) {
                continue;
            }
            if touching.is_empty() {
                return None;
            }
            hs.add(&touching);
        }
        match hs.solve(0, self.group_count(), None) {
            HsOutcome::Found(h) => Some(h.len()),
            other => unreachable!("unbounded search without deadline: {other:?}"),
        }
    }
}

/// `min(ceil((h - 1) / 2), groups)`: fewest full groups that must be removed
/// before every one of `h` packed sets loses a node.
pub fn group_hitting_bound(h: usize, groups: usize) -> usize {
    h.saturating_sub(1).div_ceil(2).min(groups)
}

/// Packs the sets into `floor(total / group_size)` groups. Sets go in
/// ascending size order; each starts in fresh groups when enough are left,
/// otherwise it fills the remaining fresh groups and then tops up
/// partially filled groups in creation order. Nodes that fit nowhere form
/// the remainder.
pub fn partition_into_groups(sets: &[Vec<usize>], group_size: usize) -> GroupLayout {
    assert!(group_size > 0, "group size must be positive");
    let mut sorted: Vec<Vec<usize>> = sets.to_vec();
    sorted.sort_by_key(Vec::len);
    let total: usize = sorted.iter().map(Vec::len).sum();
    let target = total / group_size;

    let mut groups: Vec<Vec<usize>> = Vec::with_capacity(target);
    let mut remainder = Vec::new();
    for set in &sorted {
        let empty = target - groups.len();
        let mut nodes = set.iter().copied();
        if empty >= set.len().div_ceil(group_size) {
            for chunk in set.chunks(group_size) {
                groups.push(chunk.to_vec());
            }
            continue;
        }
        for _ in 0..empty {
            groups.push(nodes.by_ref().take(group_size).collect());
        }
        for v in nodes {
            match groups.iter_mut().find(|g| g.len() < group_size) {
                Some(g) => g.push(v),
                None => remainder.push(v),
            }
        }
    }
    debug_assert!(groups.iter().all(|g| g.len() == group_size));
    debug_assert_eq!(remainder.len(), total % group_size);
    GroupLayout {
        group_size,
        groups,
        remainder,
        sets: sorted,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_walkthrough() {
        // sets of 2, 4 and 6 nodes into groups of 3
        let n1 = vec![0, 1];
        let n2 = vec![2, 3, 4, 5];
        let n3 = vec![6, 7, 8, 9, 10, 11];
        let layout = partition_into_groups(&[n3, n1, n2], 3);
        assert_eq!(
            layout.groups,
            vec![vec![0, 1, 9], vec![2, 3, 4], vec![5, 10, 11], vec![6, 7, 8]]
        );
        assert!(layout.remainder.is_empty());
        assert_eq!(layout.state(0), GroupState::Full);
        assert_eq!(layout.state(7), GroupState::Empty);
    }

    #[test]
    fn multiples_never_mix() {
        let sets = vec![vec![0, 1, 2, 3], vec![4, 5], vec![6, 7, 8, 9, 10, 11]];
        let layout = partition_into_groups(&sets, 2);
        for (set, touching) in layout.sets.iter().zip(layout.groups_touching(12)) {
            assert_eq!(touching.len(), set.len() / 2);
        }
    }

    #[test]
    fn remainder_size() {
        let sets = vec![vec![0, 1], vec![2, 3, 4], vec![5, 6, 7, 8]];
        let layout = partition_into_groups(&sets, 4);
        assert_eq!(layout.group_count(), 2);
        assert_eq!(layout.remainder.len(), 1);
    }

    #[test]
    fn group_hitting_bound_values() {
        assert_eq!(group_hitting_bound(0, 5), 0);
        assert_eq!(group_hitting_bound(1, 5), 0);
        assert_eq!(group_hitting_bound(4, 5), 2);
        assert_eq!(group_hitting_bound(9, 3), 3);
    }
}
