use std::cmp::Ordering;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Filtration, Pairing, TdaError};
use crate::scalar::Scalar;

/// A point of a persistence diagram. Essential classes have `death = +∞`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiagramPoint<T> {
    pub birth: T,
    pub death: T,
}

impl<T: Scalar> DiagramPoint<T> {
    pub fn new(birth: T, death: T) -> Result<Self, TdaError> {
        if birth.is_nan() || death.is_nan() || !birth.is_finite() || death < birth {
            return Err(TdaError::InvalidPoint(format!("({birth}, {death})")));
        }
        Ok(DiagramPoint { birth, death })
    }

    pub fn is_essential(&self) -> bool {
        self.death.is_infinite()
    }

    /// Zero persistence: born and killed at the same filtration value.
    pub fn is_diagonal(&self) -> bool {
        self.birth == self.death
    }

    pub fn persistence(&self) -> T {
        self.death - self.birth
    }

    fn total_cmp(&self, other: &Self) -> Ordering {
        self.birth
            .partial_cmp(&other.birth)
            .unwrap_or(Ordering::Equal)
            .then(self.death.partial_cmp(&other.death).unwrap_or(Ordering::Equal))
    }
}

/// Multiset of (birth, death) points for one homology dimension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PersistenceDiagram<T> {
    pub dim: usize,
    pub points: Vec<DiagramPoint<T>>,
}

impl<T: Scalar> PersistenceDiagram<T> {
    pub fn new(dim: usize, points: Vec<DiagramPoint<T>>) -> Self {
        PersistenceDiagram { dim, points }
    }

    pub fn empty(dim: usize) -> Self {
        Self::new(dim, Vec::new())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn essential(&self) -> impl Iterator<Item = &DiagramPoint<T>> {
        self.points.iter().filter(|p| p.is_essential())
    }

    /// Finite points with positive persistence.
    pub fn off_diagonal(&self) -> impl Iterator<Item = &DiagramPoint<T>> {
        self.points.iter().filter(|p| !p.is_essential() && !p.is_diagonal())
    }

    /// Points sorted by (birth, death); equal multisets compare equal.
    pub fn canonical(&self) -> Vec<DiagramPoint<T>> {
        let mut pts = self.points.clone();
        pts.sort_by(DiagramPoint::total_cmp);
        pts
    }

    pub fn same_multiset(&self, other: &Self) -> bool {
        self.dim == other.dim && self.canonical() == other.canonical()
    }

    /// Persistence values in decreasing order (essential ones first).
    pub fn persistences_desc(&self) -> Vec<T> {
        let mut p: Vec<T> = self.points.iter().map(|p| p.persistence()).collect();
        p.sort_by(|a, b| b.partial_cmp(a).unwrap_or(Ordering::Equal));
        p
    }

    /// Number of classes alive at scale `a`: born at or before `a`, dying after.
    pub fn betti_at(&self, a: T) -> usize {
        self.points.iter().filter(|p| p.birth <= a && a < p.death).count()
    }
}

/// Reads dimension-`dim` points off a pairing of `filtration`.
pub fn persistence_diagram<T: Scalar>(
    filtration: &Filtration<T>,
    pairing: &Pairing,
    dim: usize,
) -> PersistenceDiagram<T> {
    let value = |i: usize| filtration.get(i).value;
    let is_dim = |i: usize| filtration.get(i).simplex.dim() == dim;
    let mut points: Vec<DiagramPoint<T>> = pairing
        .pairs
        .iter()
        .filter(|&&(b, _)| is_dim(b))
        .map(|&(b, d)| DiagramPoint {
            birth: value(b),
            death: value(d),
        })
        .collect();
    points.extend(
        pairing
            .unpaired
            .iter()
            .filter(|&&b| is_dim(b))
            .map(|&b| DiagramPoint {
                birth: value(b),
                death: T::infinity(),
            }),
    );
    PersistenceDiagram::new(dim, points)
}

/// Diagram file: `#` comment lines (header metadata) then one
/// `dim birth death` line per point, `inf` for an infinite death.
pub fn format_diagrams<T: Scalar>(header: &[(String, String)], diagrams: &[PersistenceDiagram<T>]) -> String {
    let mut out = String::new();
    for (k, v) in header {
        let _ = writeln!(out, "# {k}={v}");
    }
    for d in diagrams {
        for p in &d.points {
            let death = if p.is_essential() {
                "inf".to_string()
            } else {
                format_real(p.death)
            };
            let _ = writeln!(out, "{} {} {}", d.dim, format_real(p.birth), death);
        }
    }
    out
}

fn format_real<T: Scalar>(x: T) -> String {
    // f64 Display is the shortest string that parses back to the same value.
    format!("{}", x.to_f64_lossy())
}

/// Parsed diagram file: header key/values and one diagram per dimension
/// present, in increasing dimension order.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagramFile<T> {
    pub header: Vec<(String, String)>,
    pub diagrams: Vec<PersistenceDiagram<T>>,
}

impl<T: Scalar> DiagramFile<T> {
    pub fn diagram(&self, dim: usize) -> PersistenceDiagram<T> {
        self.diagrams
            .iter()
            .find(|d| d.dim == dim)
            .cloned()
            .unwrap_or_else(|| PersistenceDiagram::empty(dim))
    }
}

pub fn parse_diagrams<T: Scalar>(text: &str) -> Result<DiagramFile<T>, TdaError> {
    let mut header = Vec::new();
    let mut diagrams: Vec<PersistenceDiagram<T>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(c) = line.strip_prefix('#') {
            if let Some((k, v)) = c.trim().split_once('=') {
                header.push((k.trim().to_string(), v.trim().to_string()));
            }
            continue;
        }
        let err = |msg: String| TdaError::Parse { line: line_no, msg };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [dim, birth, death] = fields[..] else {
            return Err(err(format!("expected `dim birth death`, got {line:?}")));
        };
        let dim: usize = dim.parse().map_err(|_| err(format!("bad dimension {dim:?}")))?;
        let real = |s: &str| -> Result<T, TdaError> {
            let v: f64 = match s {
                "inf" | "+inf" | "Inf" | "infinity" => f64::INFINITY,
                _ => s.parse().map_err(|_| err(format!("bad number {s:?}")))?,
            };
            Ok(T::of(v))
        };
        let point = DiagramPoint::new(real(birth)?, real(death)?).map_err(|e| err(e.to_string()))?;
        match diagrams.iter_mut().find(|d| d.dim == dim) {
            Some(d) => d.points.push(point),
            None => diagrams.push(PersistenceDiagram::new(dim, vec![point])),
        }
    }
    diagrams.sort_by_key(|d| d.dim);
    Ok(DiagramFile { header, diagrams })
}
