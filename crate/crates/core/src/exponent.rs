//! Exponent vectors: lattice points of `Z^k`, read as Laurent monomials.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Index, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponents `(c_1, .., c_k)` of the monomial `x_1^c_1 .. x_k^c_k`.
///
/// Ordering is graded lexicographic: total degree first, then the entries
/// lexicographically. Every sparse map keyed by exponent vectors is therefore
/// sorted by degree.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(entries: Vec<i64>) -> Self {
        ExponentVector(entries)
    }

    pub fn zero(k: usize) -> Self {
        ExponentVector(vec![0; k])
    }

    /// The unit vector `e_i` (0-based index).
    pub fn unit(k: usize, i: usize) -> Self {
        let mut v = vec![0; k];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_non_negative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Entrywise minimum.
    pub fn entrywise_min(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// `self` majorates `other` when `entrywise_min(self, other) = other`.
    pub fn majorates(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// Adds `amount` to coordinate `i`.
    pub fn shifted(&self, i: usize, amount: i64) -> Self {
        let mut v = self.0.clone();
        v[i] += amount;
        ExponentVector(v)
    }

    pub fn reversed(&self) -> Self {
        ExponentVector(self.0.iter().rev().copied().collect())
    }

    /// Suffix sums `s_r = c_r + .. + c_k`, one per coordinate.
    pub fn suffix_sums(&self) -> Vec<i64> {
        let mut out = vec![0; self.0.len()];
        let mut acc = 0;
        for (r, c) in self.0.iter().enumerate().rev() {
            acc += c;
            out[r] = acc;
        }
        out
    }

    pub fn check_dim(&self, k: usize) -> Result<()> {
        if self.dim() == k {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: k, found: self.dim() })
        }
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        ExponentVector(v)
    }
}

impl From<&[i64]> for ExponentVector {
    fn from(v: &[i64]) -> Self {
        ExponentVector(v.to_vec())
    }
}

impl<const N: usize> From<[i64; N]> for ExponentVector {
    fn from(v: [i64; N]) -> Self {
        ExponentVector(v.to_vec())
    }
}

impl Index<usize> for ExponentVector {
    type Output = i64;

    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &ExponentVector {
    type Output = ExponentVector;

    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ExponentVector {
    type Output = ExponentVector;

    fn sub(self, rhs: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.len().cmp(&other.0.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses comma-separated integers, e.g. `0,1,3`.
impl FromStr for ExponentVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Err(Error::Parse(format!("empty vertex '{s}'")));
        }
        s.split(',')
            .map(|p| p.trim().parse::<i64>().map_err(|e| Error::Parse(format!("bad entry '{p}': {e}"))))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }
}

/// All non-negative vectors of length `k` with entries summing to `total`,
/// in lexicographic order.
pub fn compositions(total: u64, k: usize) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; k];
    fn rec(pos: usize, left: u64, cur: &mut Vec<i64>, out: &mut Vec<ExponentVector>) {
        let k = cur.len();
        if pos + 1 == k {
            cur[pos] = left as i64;
            out.push(ExponentVector(cur.clone()));
            return;
        }
        for v in 0..=left {
            cur[pos] = v as i64;
            rec(pos + 1, left - v, cur, out);
        }
    }
    if k == 0 {
        if total == 0 {
            out.push(ExponentVector(Vec::new()));
        }
        return out;
    }
    rec(0, total, &mut cur, &mut out);
    out
}

/// Points of the standard simplex: non-negative vectors with sum at most `n`.
pub fn simplex_points(k: usize, n: u64) -> Vec<ExponentVector> {
    (0..=n).flat_map(|d| compositions(d, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_order_puts_degree_first() {
        let a = ExponentVector::from([3, 0]);
        let b = ExponentVector::from([0, 4]);
        let c = ExponentVector::from([1, 2]);
        assert!(a > c);
        assert!(b > a);
    }

    #[test]
    fn min_and_majorates() {
        let u = ExponentVector::from([1, 5, -2]);
        let w = ExponentVector::from([3, 2, 0]);
        let m = u.entrywise_min(&w);
        assert_eq!(m, ExponentVector::from([1, 2, -2]));
        assert!(u.majorates(&m) && w.majorates(&m));
        assert!(!u.majorates(&w));
    }

    #[test]
    fn suffix_sums_and_parse() {
        let v: ExponentVector = "2, -1,3".parse().unwrap();
        assert_eq!(v.suffix_sums(), vec![4, 2, 3]);
        assert!("1,x".parse::<ExponentVector>().is_err());
    }

    #[test]
    fn simplex_size_is_binomial() {
        // |Delta_k^n| = C(n + k, k)
        assert_eq!(simplex_points(2, 2).len(), 6);
        assert_eq!(simplex_points(3, 4).len(), 35);
        assert_eq!(compositions(0, 3), vec![ExponentVector::zero(3)]);
    }
}
