//! Exhaustive checks of the two structural conditions that guarantee a
//! coefficient series for path counting exists: closure under entrywise
//! minimum and convexity along coordinate lines.

use std::fmt;

use super::GraphKind;
use crate::exponent::ExponentVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HypothesisReport {
    Ok,
    /// `min(u, w)` is not a vertex.
    NotMinimumClosed {
        u: ExponentVector,
        w: ExponentVector,
    },
    /// `u` and `w = u + m e_i` are vertices but `missing` between them is not.
    NotCoordinateConvex {
        u: ExponentVector,
        w: ExponentVector,
        missing: ExponentVector,
    },
}

impl HypothesisReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, HypothesisReport::Ok)
    }
}

impl fmt::Display for HypothesisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypothesisReport::Ok => write!(f, "ok"),
            HypothesisReport::NotMinimumClosed { u, w } => {
                write!(f, "min({u:?}, {w:?}) = {:?} is not a vertex", u.entrywise_min(w))
            }
            HypothesisReport::NotCoordinateConvex { u, w, missing } => {
                write!(f, "{u:?} and {w:?} are vertices but {missing:?} is not")
            }
        }
    }
}

pub fn check_minimum_closed(kind: &GraphKind, box_bound: i64) -> HypothesisReport {
    let vertices = kind.vertices_in_box(box_bound);
    for (a, u) in vertices.iter().enumerate() {
        for w in &vertices[a + 1..] {
            let m = u.entrywise_min(w);
            if !kind.contains_unchecked(m.entries()) {
                return HypothesisReport::NotMinimumClosed { u: u.clone(), w: w.clone() };
            }
        }
    }
    HypothesisReport::Ok
}

pub fn check_coordinate_convex(kind: &GraphKind, box_bound: i64) -> HypothesisReport {
    let vertices = kind.vertices_in_box(box_bound);
    for u in &vertices {
        for i in 0..kind.k() {
            for m in 2..=(box_bound - u[i]) {
                let w = u.shifted(i, m);
                if !kind.contains_unchecked(w.entries()) {
                    continue;
                }
                if let Some(s) = (1..m).find(|&s| !kind.contains_unchecked(u.shifted(i, s).entries())) {
                    return HypothesisReport::NotCoordinateConvex { u: u.clone(), w, missing: u.shifted(i, s) };
                }
            }
        }
    }
    HypothesisReport::Ok
}
