use std::cmp::Ordering;
use std::collections::HashMap;

use super::{DistanceMatrix, TdaError};
use crate::scalar::Scalar;

/// An abstract simplex: strictly increasing vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    pub fn new(mut vertices: Vec<usize>) -> Result<Self, TdaError> {
        if vertices.is_empty() {
            return Err(TdaError::InvalidSimplex("no vertices".into()));
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(TdaError::InvalidSimplex(format!("repeated vertex in {vertices:?}")));
        }
        Ok(Simplex(vertices))
    }

    pub fn vertex(v: usize) -> Self {
        Simplex(vec![v])
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// Codimension-one faces, each omitting one vertex.
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = if self.dim() == 0 { 0 } else { self.0.len() };
        (0..n).map(move |skip| {
            Simplex(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect(),
            )
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FilteredSimplex<T> {
    pub simplex: Simplex,
    pub value: T,
}

/// Simplices ordered by (value, dimension, vertices), every face preceding
/// its cofaces.
#[derive(Debug, Clone, PartialEq)]
pub struct Filtration<T> {
    simplices: Vec<FilteredSimplex<T>>,
}

fn filtration_order<T: Scalar>(a: &FilteredSimplex<T>, b: &FilteredSimplex<T>) -> Ordering {
    a.value
        .partial_cmp(&b.value)
        .unwrap_or(Ordering::Equal)
        .then_with(|| a.simplex.dim().cmp(&b.simplex.dim()))
        .then_with(|| a.simplex.cmp(&b.simplex))
}

impl<T: Scalar> Filtration<T> {
    /// Sorts the simplices into filtration order and checks that every face is
    /// present with a value no larger than its coface's.
    pub fn new(mut simplices: Vec<FilteredSimplex<T>>) -> Result<Self, TdaError> {
        if let Some(s) = simplices.iter().find(|s| !s.value.is_finite()) {
            return Err(TdaError::InvalidFiltration(format!(
                "non-finite value for {:?}",
                s.simplex
            )));
        }
        simplices.sort_by(filtration_order);
        let f = Filtration { simplices };
        f.check()?;
        Ok(f)
    }

    fn check(&self) -> Result<(), TdaError> {
        let index = self.index();
        if index.len() != self.simplices.len() {
            return Err(TdaError::InvalidFiltration("duplicate simplex".into()));
        }
        for (k, s) in self.simplices.iter().enumerate() {
            for face in s.simplex.facets() {
                match index.get(&face) {
                    Some(&i) if i < k => {}
                    _ => {
                        return Err(TdaError::InvalidFiltration(format!(
                            "face {:?} of {:?} missing or later",
                            face.vertices(),
                            s.simplex.vertices()
                        )))
                    }
                }
            }
        }
        Ok(())
    }

    pub fn index(&self) -> HashMap<&Simplex, usize> {
        self.simplices
            .iter()
            .enumerate()
            .map(|(i, s)| (&s.simplex, i))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn simplices(&self) -> &[FilteredSimplex<T>] {
        &self.simplices
    }

    pub fn get(&self, i: usize) -> &FilteredSimplex<T> {
        &self.simplices[i]
    }

    pub fn max_dim(&self) -> usize {
        self.simplices.iter().map(|s| s.simplex.dim()).max().unwrap_or(0)
    }

    /// Boundary columns over Z_2: sorted filtration indices of each facet.
    pub fn boundary_columns(&self) -> Vec<Vec<usize>> {
        let index = self.index();
        self.simplices
            .iter()
            .map(|s| {
                let mut col: Vec<usize> = s.simplex.facets().map(|f| index[&f]).collect();
                col.sort_unstable();
                col
            })
            .collect()
    }
}

/// Clique filtration of the neighbourhood graph `{ij : d(i,j) <= max_value}`.
/// Vertices enter at 0, a higher simplex at the largest of its edge lengths.
pub fn vietoris_rips<T: Scalar>(dm: &DistanceMatrix<T>, max_dim: usize, max_value: T) -> Filtration<T> {
    let n = dm.len();
    let neighbours: Vec<Vec<usize>> = (0..n)
        .map(|i| (i + 1..n).filter(|&j| dm.get(i, j) <= max_value).collect())
        .collect();

    let mut simplices = Vec::new();
    let mut stack = Vec::new();
    for v in 0..n {
        stack.push((vec![v], T::zero(), neighbours[v].clone()));
        while let Some((verts, value, candidates)) = stack.pop() {
            let dim = verts.len() - 1;
            if dim < max_dim {
                for (k, &u) in candidates.iter().enumerate() {
                    let new_value = verts.iter().fold(value, |acc, &w| acc.max(dm.get(w, u)));
                    let rest: Vec<usize> = candidates[k + 1..]
                        .iter()
                        .copied()
                        .filter(|w| neighbours[u].binary_search(w).is_ok())
                        .collect();
                    let mut next = verts.clone();
                    next.push(u);
                    stack.push((next, new_value, rest));
                }
            }
            simplices.push(FilteredSimplex {
                simplex: Simplex(verts),
                value,
            });
        }
    }
    simplices.sort_by(filtration_order);
    Filtration { simplices }
}
