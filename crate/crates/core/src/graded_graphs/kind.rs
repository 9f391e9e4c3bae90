use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::{compositions, ExponentVector};

/// An induced subgraph of `Z^k` whose edges add one to a single coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphKind {
    /// All non-negative vectors.
    Pascal(usize),
    /// Strictly increasing non-negative vectors `0 <= c_1 < .. < c_k`;
    /// Young diagrams with at most `k` rows.
    RestrictedYoung(usize),
    /// Weakly increasing non-negative vectors whose repeated entries are all
    /// zero; strict partitions with at most `k` rows.
    StrictPartitions(usize),
    /// An explicit finite vertex set, used to exercise the hypothesis checks.
    CustomBox { k: usize, vertices: BTreeSet<ExponentVector> },
}

impl GraphKind {
    pub fn custom(k: usize, vertices: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        let vertices: BTreeSet<ExponentVector> = vertices.into_iter().collect();
        for v in &vertices {
            v.check_dim(k)?;
        }
        Ok(GraphKind::CustomBox { k, vertices })
    }

    pub fn k(&self) -> usize {
        match self {
            GraphKind::Pascal(k) | GraphKind::RestrictedYoung(k) | GraphKind::StrictPartitions(k) => *k,
            GraphKind::CustomBox { k, .. } => *k,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            GraphKind::Pascal(_) => "pascal",
            GraphKind::RestrictedYoung(_) => "young",
            GraphKind::StrictPartitions(_) => "strict",
            GraphKind::CustomBox { .. } => "custom",
        }
    }

    pub fn contains(&self, v: &ExponentVector) -> Result<bool> {
        v.check_dim(self.k())?;
        Ok(self.contains_unchecked(v.entries()))
    }

    pub(crate) fn contains_unchecked(&self, c: &[i64]) -> bool {
        match self {
            GraphKind::Pascal(_) => c.iter().all(|&x| x >= 0),
            GraphKind::RestrictedYoung(_) => c.first().is_none_or(|&x| x >= 0) && c.windows(2).all(|w| w[0] < w[1]),
            GraphKind::StrictPartitions(_) => {
                c.first().is_none_or(|&x| x >= 0) && c.windows(2).all(|w| w[0] < w[1] || (w[0] == 0 && w[1] == 0))
            }
            GraphKind::CustomBox { vertices, .. } => vertices.contains(&ExponentVector::from(c)),
        }
    }

    /// Vertices reached by one edge from `v`.
    pub fn out_neighbors(&self, v: &ExponentVector) -> Result<Vec<ExponentVector>> {
        if !self.contains(v)? {
            return Err(Error::NotAVertex(v.clone()));
        }
        Ok((0..self.k()).map(|i| v.shifted(i, 1)).filter(|w| self.contains_unchecked(w.entries())).collect())
    }

    /// Vertices with an edge into `v`.
    pub fn in_neighbors(&self, v: &ExponentVector) -> Result<Vec<ExponentVector>> {
        if !self.contains(v)? {
            return Err(Error::NotAVertex(v.clone()));
        }
        Ok((0..self.k()).map(|i| v.shifted(i, -1)).filter(|w| self.contains_unchecked(w.entries())).collect())
    }

    /// The vertex paths are usually counted from: the origin, or the
    /// staircase `(0, 1, .., k-1)` for the Young graph.
    pub fn base_vertex(&self) -> Option<ExponentVector> {
        match self {
            GraphKind::Pascal(k) | GraphKind::StrictPartitions(k) => Some(ExponentVector::zero(*k)),
            GraphKind::RestrictedYoung(k) => Some(ExponentVector::new((0..*k as i64).collect())),
            GraphKind::CustomBox { vertices, .. } => vertices.iter().next().cloned(),
        }
    }

    /// All vertices of total degree `d`, in ascending graded-lex order.
    pub fn vertices_of_degree(&self, d: i64) -> Vec<ExponentVector> {
        match self {
            GraphKind::CustomBox { vertices, .. } => vertices.iter().filter(|v| v.degree() == d).cloned().collect(),
            _ if d < 0 => Vec::new(),
            _ => {
                compositions(d as u64, self.k()).into_iter().filter(|v| self.contains_unchecked(v.entries())).collect()
            }
        }
    }

    /// All vertices inside the box `[0, bound]^k`.
    pub fn vertices_in_box(&self, bound: i64) -> Vec<ExponentVector> {
        match self {
            GraphKind::CustomBox { vertices, .. } => {
                vertices.iter().filter(|v| v.entries().iter().all(|&c| (0..=bound).contains(&c))).cloned().collect()
            }
            _ => {
                let k = self.k();
                let mut out = Vec::new();
                let mut cur = vec![0i64; k];
                loop {
                    if self.contains_unchecked(&cur) {
                        out.push(ExponentVector::from(cur.as_slice()));
                    }
                    let mut pos = k;
                    loop {
                        if pos == 0 {
                            return out;
                        }
                        pos -= 1;
                        if cur[pos] < bound {
                            cur[pos] += 1;
                            break;
                        }
                        cur[pos] = 0;
                    }
                }
            }
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name(), self.k())
    }
}
