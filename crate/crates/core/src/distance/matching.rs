//! Hopcroft-Karp maximum matching with warm starts.

const NONE: usize = usize::MAX;

/// Bipartite matching state kept across successive graphs on the same
/// vertex sets, so a new threshold only needs to repair the old matching.
#[derive(Debug, Clone)]
pub struct HopcroftKarp {
    mate_left: Vec<usize>,
    mate_right: Vec<usize>,
    dist: Vec<usize>,
}

impl HopcroftKarp {
    pub fn new(left: usize, right: usize) -> Self {
        HopcroftKarp {
            mate_left: vec![NONE; left],
            mate_right: vec![NONE; right],
            dist: vec![0; left],
        }
    }

    pub fn mate_of_left(&self, u: usize) -> Option<usize> {
        let v = self.mate_left[u];
        (v != NONE).then_some(v)
    }

    /// Drops matched pairs that are no longer edges of `adj` or whose left
    /// vertex is inactive.
    fn prune(&mut self, adj: &[Vec<usize>], active: &[bool]) {
        for u in 0..self.mate_left.len() {
            let v = self.mate_left[u];
            if v != NONE && !(active[u] && adj[u].contains(&v)) {
                self.mate_left[u] = NONE;
                self.mate_right[v] = NONE;
            }
        }
    }

    /// Maximizes the matching between active left vertices and the right
    /// side; returns the number of matched active left vertices.
    pub fn solve(&mut self, adj: &[Vec<usize>], active: &[bool]) -> usize {
        self.prune(adj, active);
        loop {
            if !self.bfs(adj, active) {
                break;
            }
            let mut grew = false;
            for u in 0..adj.len() {
                if active[u] && self.mate_left[u] == NONE && self.dfs(u, adj) {
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        (0..adj.len())
            .filter(|&u| active[u] && self.mate_left[u] != NONE)
            .count()
    }

    /// Layers free active left vertices; true if some free right vertex is reachable.
    fn bfs(&mut self, adj: &[Vec<usize>], active: &[bool]) -> bool {
        let mut queue = std::collections::VecDeque::new();
        for u in 0..adj.len() {
            if active[u] && self.mate_left[u] == NONE {
                self.dist[u] = 0;
                queue.push_back(u);
            } else {
                self.dist[u] = NONE;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let w = self.mate_right[v];
                if w == NONE {
                    found = true;
                } else if self.dist[w] == NONE {
                    self.dist[w] = self.dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        found
    }

    fn dfs(&mut self, u: usize, adj: &[Vec<usize>]) -> bool {
        for &v in &adj[u] {
            let w = self.mate_right[v];
            if w == NONE || (self.dist[w] == self.dist[u] + 1 && self.dfs(w, adj)) {
                self.mate_left[u] = v;
                self.mate_right[v] = u;
                return true;
            }
        }
        self.dist[u] = NONE;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_max_matching(adj: &[Vec<usize>], right: usize) -> usize {
        fn go(u: usize, adj: &[Vec<usize>], used: &mut Vec<bool>) -> usize {
            if u == adj.len() {
                return 0;
            }
            let mut best = go(u + 1, adj, used);
            for &v in &adj[u] {
                if !used[v] {
                    used[v] = true;
                    best = best.max(1 + go(u + 1, adj, used));
                    used[v] = false;
                }
            }
            best
        }
        go(0, adj, &mut vec![false; right])
    }

    #[test]
    fn matches_exhaustive_search_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let (l, r) = (rng.random_range(1..7), rng.random_range(1..7));
            let adj: Vec<Vec<usize>> = (0..l)
                .map(|_| (0..r).filter(|_| rng.random_bool(0.35)).collect())
                .collect();
            let mut hk = HopcroftKarp::new(l, r);
            assert_eq!(hk.solve(&adj, &vec![true; l]), brute_max_matching(&adj, r));
        }
    }

    #[test]
    fn warm_start_after_edge_removal() {
        let full = vec![vec![0, 1], vec![0]];
        let mut hk = HopcroftKarp::new(2, 2);
        assert_eq!(hk.solve(&full, &[true, true]), 2);
        let fewer = vec![vec![1], vec![]];
        assert_eq!(hk.solve(&fewer, &[true, true]), 1);
        assert_eq!(hk.mate_of_left(0), Some(1));
        assert_eq!(hk.solve(&full, &[false, true]), 1);
    }
}
