//! Bottleneck distance between persistence diagrams.
//!
//! The exact value is the smallest threshold `ε` among the candidate costs
//! (pairwise L∞ distances and distances to the diagonal) at which the
//! diagrams admit a perfect matching where every point is moved by at most
//! `ε`, either to a point of the other diagram or to the diagonal.

mod matching;

use std::cmp::Ordering;

use thiserror::Error;

pub use matching::HopcroftKarp;

use crate::scalar::Scalar;
use crate::tda::{DiagramPoint, PersistenceDiagram};

#[derive(Debug, Error, PartialEq)]
pub enum DistanceError {
    #[error("cannot compare diagrams of dimensions {0} and {1}")]
    DimensionMismatch(usize, usize),
    #[error("diagrams have {0} and {1} essential points; no finite matching exists")]
    EssentialMismatch(usize, usize),
    #[error("brute force limited to {max} finite points, got {got}")]
    TooLarge { max: usize, got: usize },
}

/// Largest `|A| + |B|` accepted by [`bottleneck_bruteforce`].
pub const BRUTEFORCE_MAX_POINTS: usize = 12;

fn linf<T: Scalar>(a: &DiagramPoint<T>, b: &DiagramPoint<T>) -> T {
    (a.birth - b.birth).abs().max((a.death - b.death).abs())
}

fn diagonal_distance<T: Scalar>(p: &DiagramPoint<T>) -> T {
    (p.death - p.birth) / T::of(2.0)
}

/// Essential points must pair up among themselves; matching sorted births
/// is optimal for the resulting one-dimensional problem.
fn essential_cost<T: Scalar>(
    a: &PersistenceDiagram<T>,
    b: &PersistenceDiagram<T>,
) -> Result<T, DistanceError> {
    if a.dim != b.dim {
        return Err(DistanceError::DimensionMismatch(a.dim, b.dim));
    }
    let births = |d: &PersistenceDiagram<T>| {
        let mut v: Vec<T> = d.essential().map(|p| p.birth).collect();
        v.sort_by(|x, y| x.partial_cmp(y).unwrap_or(Ordering::Equal));
        v
    };
    let (ea, eb) = (births(a), births(b));
    if ea.len() != eb.len() {
        return Err(DistanceError::EssentialMismatch(ea.len(), eb.len()));
    }
    Ok(ea
        .iter()
        .zip(&eb)
        .fold(T::zero(), |m, (&x, &y)| m.max((x - y).abs())))
}

fn finite_points<T: Scalar>(d: &PersistenceDiagram<T>) -> Vec<DiagramPoint<T>> {
    d.off_diagonal().copied().collect()
}

/// Points of `b` sorted by death, for range queries on `|Δdeath| <= ε`.
struct DeathIndex<T> {
    order: Vec<usize>,
    deaths: Vec<T>,
}

impl<T: Scalar> DeathIndex<T> {
    fn new(points: &[DiagramPoint<T>]) -> Self {
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&i, &j| {
            points[i]
                .death
                .partial_cmp(&points[j].death)
                .unwrap_or(Ordering::Equal)
        });
        let deaths = order.iter().map(|&i| points[i].death).collect();
        DeathIndex { order, deaths }
    }

    /// Indices `j` with `linf(p, points[j]) <= eps`, in increasing order.
    fn within(&self, p: &DiagramPoint<T>, points: &[DiagramPoint<T>], eps: T, out: &mut Vec<usize>) {
        out.clear();
        let lo = self.deaths.partition_point(|&d| d < p.death - eps);
        for k in lo..self.deaths.len() {
            if self.deaths[k] > p.death + eps {
                break;
            }
            let j = self.order[k];
            if linf(p, &points[j]) <= eps {
                out.push(j);
            }
        }
        out.sort_unstable();
    }
}

/// One side of the feasibility test: can every point of `from` that is
/// farther than `eps` from the diagonal be matched into `to` within `eps`?
struct Side<T> {
    from: Vec<DiagramPoint<T>>,
    to: Vec<DiagramPoint<T>>,
    index: DeathIndex<T>,
    matcher: HopcroftKarp,
    adj: Vec<Vec<usize>>,
    active: Vec<bool>,
}

impl<T: Scalar> Side<T> {
    fn new(from: Vec<DiagramPoint<T>>, to: Vec<DiagramPoint<T>>) -> Self {
        let index = DeathIndex::new(&to);
        let matcher = HopcroftKarp::new(from.len(), to.len());
        let n = from.len();
        Side {
            from,
            to,
            index,
            matcher,
            adj: vec![Vec::new(); n],
            active: vec![false; n],
        }
    }

    fn covers(&mut self, eps: T) -> bool {
        let mut need = 0;
        for (u, p) in self.from.iter().enumerate() {
            let must = diagonal_distance(p) > eps;
            self.active[u] = must;
            if must {
                need += 1;
                self.index.within(p, &self.to, eps, &mut self.adj[u]);
            } else {
                self.adj[u].clear();
            }
        }
        need == 0 || self.matcher.solve(&self.adj, &self.active) == need
    }
}

/// Exact bottleneck distance.
///
/// Essential points (infinite death) are matched among themselves and the
/// counts must agree; for Rips H0 diagrams both carry one `(0, ∞)` point
/// and it contributes nothing. Zero-persistence points are ignored.
///
/// Feasibility at `ε` asks for a perfect matching of `A ∪ Δ` with `B ∪ Δ`.
/// Diagonal slots pair with each other at no cost, so this holds exactly
/// when some matching of `A` with `B` (edges of L∞ length `<= ε`) covers
/// every point farther than `ε` from the diagonal on both sides; by the
/// Mendelsohn-Dulmage theorem that is equivalent to covering each side's
/// far points separately, which is what is checked.
pub fn bottleneck<T: Scalar>(
    a: &PersistenceDiagram<T>,
    b: &PersistenceDiagram<T>,
) -> Result<T, DistanceError> {
    let essential = essential_cost(a, b)?;
    let (pa, pb) = (finite_points(a), finite_points(b));
    if pa.is_empty() && pb.is_empty() {
        return Ok(essential);
    }

    let mut candidates: Vec<T> = Vec::with_capacity(pa.len() * pb.len() + pa.len() + pb.len());
    candidates.extend(pa.iter().chain(&pb).map(diagonal_distance));
    for p in &pa {
        candidates.extend(pb.iter().map(|q| linf(p, q)));
    }
    candidates.sort_by(|x, y| x.partial_cmp(y).unwrap_or(Ordering::Equal));
    candidates.dedup();

    let mut forward = Side::new(pa.clone(), pb.clone());
    let mut backward = Side::new(pb, pa);
    let mut feasible = |eps: T| forward.covers(eps) && backward.covers(eps);

    // Matching everything to the diagonal is feasible at the largest
    // diagonal distance, which is a candidate, so the last one always works.
    let (mut lo, mut hi) = (0usize, candidates.len() - 1);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if feasible(candidates[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(candidates[lo].max(essential))
}

/// Bottleneck distance by exhaustive search over bijections between
/// `A ∪ proj(B)` and `B ∪ proj(A)`, where `proj` is the orthogonal
/// projection onto the diagonal. Projection-to-projection pairs cost 0.
///
/// The search is a dynamic program over subsets of the right side, which
/// visits every bijection's cost structure without listing the `n!`
/// permutations.
pub fn bottleneck_bruteforce<T: Scalar>(
    a: &PersistenceDiagram<T>,
    b: &PersistenceDiagram<T>,
) -> Result<T, DistanceError> {
    let essential = essential_cost(a, b)?;
    let (pa, pb) = (finite_points(a), finite_points(b));
    let n = pa.len() + pb.len();
    if n > BRUTEFORCE_MAX_POINTS {
        return Err(DistanceError::TooLarge {
            max: BRUTEFORCE_MAX_POINTS,
            got: n,
        });
    }
    if n == 0 {
        return Ok(essential);
    }
    let costs = padded_costs(&pa, &pb);
    let full = (1usize << n) - 1;
    let mut best = vec![T::infinity(); 1 << n];
    best[0] = T::zero();
    for mask in 0..full {
        if best[mask].is_infinite() {
            continue;
        }
        let row = mask.count_ones() as usize;
        for col in 0..n {
            if mask & (1 << col) == 0 {
                let next = mask | (1 << col);
                let c = best[mask].max(costs[row][col]);
                if c < best[next] {
                    best[next] = c;
                }
            }
        }
    }
    Ok(best[full].max(essential))
}

/// Cost matrix of the padded problem: rows `A ∪ proj(B)`, columns `B ∪ proj(A)`.
pub fn padded_costs<T: Scalar>(pa: &[DiagramPoint<T>], pb: &[DiagramPoint<T>]) -> Vec<Vec<T>> {
    let proj = |p: &DiagramPoint<T>| {
        let m = (p.birth + p.death) / T::of(2.0);
        DiagramPoint { birth: m, death: m }
    };
    let rows: Vec<(DiagramPoint<T>, bool)> = pa
        .iter()
        .map(|p| (*p, false))
        .chain(pb.iter().map(|p| (proj(p), true)))
        .collect();
    let cols: Vec<(DiagramPoint<T>, bool)> = pb
        .iter()
        .map(|p| (*p, false))
        .chain(pa.iter().map(|p| (proj(p), true)))
        .collect();
    rows.iter()
        .map(|(r, r_diag)| {
            cols.iter()
                .map(|(c, c_diag)| if *r_diag && *c_diag { T::zero() } else { linf(r, c) })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dgm(points: &[(f64, f64)]) -> PersistenceDiagram<f64> {
        PersistenceDiagram::new(
            0,
            points
                .iter()
                .map(|&(b, d)| DiagramPoint::new(b, d).unwrap())
                .collect(),
        )
    }

    #[test]
    fn single_point_against_empty() {
        let a = dgm(&[(1.0, 3.0)]);
        let e = dgm(&[]);
        assert_eq!(bottleneck(&a, &e).unwrap(), 1.0);
        assert_eq!(bottleneck(&e, &a).unwrap(), 1.0);
        assert_eq!(bottleneck_bruteforce(&a, &e).unwrap(), 1.0);
        assert_eq!(bottleneck(&e, &e).unwrap(), 0.0);
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(bottleneck_bruteforce(&dgm(&[(0.0, 2.0)]), &dgm(&[(0.0, 2.5)])).unwrap(), 0.5);
        let v = bottleneck_bruteforce(&dgm(&[(0.0, 1.0)]), &dgm(&[(5.0, 5.2)])).unwrap();
        assert!((v - 0.5).abs() < 1e-15);
        assert_eq!(bottleneck(&dgm(&[(0.0, 2.0)]), &dgm(&[(0.0, 2.5)])).unwrap(), 0.5);
        assert_eq!(bottleneck(&dgm(&[(0.0, 1.0)]), &dgm(&[(5.0, 5.2)])).unwrap(), 0.5);
    }

    #[test]
    fn identity() {
        let a = dgm(&[(0.0, 1.0), (0.0, 0.3), (0.2, 0.9), (0.0, f64::INFINITY)]);
        assert_eq!(bottleneck(&a, &a).unwrap(), 0.0);
        assert_eq!(bottleneck_bruteforce(&a, &a).unwrap(), 0.0);
    }

    #[test]
    fn essential_points() {
        let a = dgm(&[(0.0, 1.0), (0.0, f64::INFINITY)]);
        let b = dgm(&[(0.0, 1.5), (0.0, f64::INFINITY)]);
        assert_eq!(bottleneck(&a, &b).unwrap(), 0.5);
        let c = dgm(&[(0.0, 1.5)]);
        assert_eq!(bottleneck(&a, &c), Err(DistanceError::EssentialMismatch(1, 0)));
        let d = dgm(&[(2.0, f64::INFINITY)]);
        let e = dgm(&[(0.5, f64::INFINITY)]);
        assert_eq!(bottleneck(&d, &e).unwrap(), 1.5);
    }

    #[test]
    fn dimension_mismatch() {
        let a = dgm(&[(0.0, 1.0)]);
        let mut b = a.clone();
        b.dim = 1;
        assert_eq!(bottleneck(&a, &b), Err(DistanceError::DimensionMismatch(0, 1)));
    }

    #[test]
    fn bruteforce_size_limit() {
        let big: Vec<(f64, f64)> = (0..7).map(|i| (0.0, 1.0 + i as f64)).collect();
        assert!(matches!(
            bottleneck_bruteforce(&dgm(&big), &dgm(&big[..6])),
            Err(DistanceError::TooLarge { got: 13, .. })
        ));
    }

    #[test]
    fn diagonal_points_are_ignored() {
        let a = dgm(&[(0.0, 1.0), (0.0, 0.4)]);
        let mut b = a.clone();
        b.points.push(DiagramPoint::new(0.7, 0.7).unwrap());
        assert_eq!(bottleneck(&a, &b).unwrap(), 0.0);
    }
}
