use super::{DiagramPoint, DistanceMatrix, PersistenceDiagram};
use crate::scalar::Scalar;

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; false if already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

/// Zero-dimensional Vietoris-Rips diagram via Kruskal's algorithm: every
/// merge at edge length `w` kills a component born at 0.
pub fn h0_single_linkage<T: Scalar>(dm: &DistanceMatrix<T>) -> PersistenceDiagram<T> {
    h0_single_linkage_capped(dm, T::infinity())
}

/// As [`h0_single_linkage`], ignoring edges longer than `max_value`.
pub fn h0_single_linkage_capped<T: Scalar>(dm: &DistanceMatrix<T>, max_value: T) -> PersistenceDiagram<T> {
    let n = dm.len();
    let mut edges: Vec<(T, usize, usize)> = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let w = dm.get(i, j);
            if w <= max_value {
                edges.push((w, i, j));
            }
        }
    }
    edges.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite distances"));

    let mut uf = UnionFind::new(n);
    let mut points = Vec::with_capacity(n);
    for (w, i, j) in edges {
        if uf.union(i, j) {
            points.push(DiagramPoint {
                birth: T::zero(),
                death: w,
            });
            if points.len() + 1 == n {
                break;
            }
        }
    }
    let components = n - points.len();
    points.extend((0..components).map(|_| DiagramPoint {
        birth: T::zero(),
        death: T::infinity(),
    }));
    PersistenceDiagram::new(0, points)
}
