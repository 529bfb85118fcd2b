//! Maximum bipartite matching by augmenting paths, and the König vertex cover.

#[derive(Debug, Clone)]
pub struct Matching {
    pub left_to_right: Vec<Option<usize>>,
    pub right_to_left: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.left_to_right.iter().flatten().count()
    }

    /// Matched pairs sorted by left vertex.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.left_to_right
            .iter()
            .enumerate()
            .filter_map(|(l, r)| r.map(|r| (l, r)))
            .collect()
    }
}

/// `adj[l]` lists the right vertices adjacent to left vertex `l`. Left
/// vertices are tried in index order and their neighbours in list order, so
/// the result is deterministic.
pub fn maximum_matching(adj: &[Vec<usize>], right: usize) -> Matching {
    let mut m = Matching {
        left_to_right: vec![None; adj.len()],
        right_to_left: vec![None; right],
    };
    for l in 0..adj.len() {
        let mut seen = vec![false; right];
        augment(l, adj, &mut m, &mut seen);
    }
    m
}

fn augment(l: usize, adj: &[Vec<usize>], m: &mut Matching, seen: &mut [bool]) -> bool {
    for &r in &adj[l] {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        if m.right_to_left[r].is_none_or(|l2| augment(l2, adj, m, seen)) {
            m.left_to_right[l] = Some(r);
            m.right_to_left[r] = Some(l);
            return true;
        }
    }
    false
}

/// Minimum vertex cover `(left, right)` derived from a maximum matching.
pub fn minimum_vertex_cover(adj: &[Vec<usize>], right: usize, m: &Matching) -> (Vec<usize>, Vec<usize>) {
    // Alternating reachability from unmatched left vertices.
    let mut left_seen = vec![false; adj.len()];
    let mut right_seen = vec![false; right];
    let mut stack: Vec<usize> = (0..adj.len())
        .filter(|&l| m.left_to_right[l].is_none())
        .collect();
    for &l in &stack {
        left_seen[l] = true;
    }
    while let Some(l) = stack.pop() {
        for &r in &adj[l] {
            if right_seen[r] || m.left_to_right[l] == Some(r) {
                continue;
            }
            right_seen[r] = true;
            if let Some(l2) = m.right_to_left[r] {
                if !left_seen[l2] {
                    left_seen[l2] = true;
                    stack.push(l2);
                }
            }
        }
    }
    let left = (0..adj.len()).filter(|&l| !left_seen[l]).collect();
    let right = (0..right).filter(|&r| right_seen[r]).collect();
    (left, right)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_matching_needs_augmentation() {
        let adj = vec![vec![0, 1], vec![0]];
        let m = maximum_matching(&adj, 2);
        assert_eq!(m.size(), 2);
        assert_eq!(m.pairs(), vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn cover_size_equals_matching_size() {
        let adj = vec![vec![0, 1, 2], vec![0], vec![0], vec![2, 3]];
        let m = maximum_matching(&adj, 4);
        let (l, r) = minimum_vertex_cover(&adj, 4, &m);
        assert_eq!(l.len() + r.len(), m.size());
        for (a, rs) in adj.iter().enumerate() {
            for &b in rs {
                assert!(l.contains(&a) || r.contains(&b));
            }
        }
    }
}
