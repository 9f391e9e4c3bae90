use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::graded_graphs::GraphKind;

/// A Young diagram: weakly decreasing positive row lengths.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    rows: Vec<u64>,
}

/// A diagram with strictly decreasing positive row lengths.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct StrictPartition {
    rows: Vec<u64>,
}

impl Partition {
    pub fn new(rows: Vec<u64>) -> Result<Self> {
        if rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{rows:?} is not weakly decreasing and positive")));
        }
        Ok(Partition { rows })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> u64 {
        self.rows.iter().sum()
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Partition {
        let width = self.rows.first().copied().unwrap_or(0);
        let rows = (0..width).map(|j| self.rows.iter().filter(|&&r| r > j).count() as u64).collect();
        Partition { rows }
    }
}

impl StrictPartition {
    pub fn new(rows: Vec<u64>) -> Result<Self> {
        if rows.contains(&0) || rows.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidPartition(format!("{rows:?} is not strictly decreasing and positive")));
        }
        Ok(StrictPartition { rows })
    }

    pub fn empty() -> Self {
        StrictPartition::default()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.rows.iter().sum()
    }

    /// Rows followed by zeros, `k` entries in all.
    pub fn padded(&self, k: usize) -> Result<Vec<u64>> {
        if self.rows.len() > k {
            return Err(Error::InvalidPartition(format!("{self} has more than {k} rows")));
        }
        let mut out = self.rows.clone();
        out.resize(k, 0);
        Ok(out)
    }
}

fn parse_rows(s: &str) -> Result<Vec<u64>> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| part.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad row length {part:?} in {s:?}"))))
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_rows(s)?)
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::new(parse_rows(s)?)
    }
}

fn write_rows(rows: &[u64], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if rows.is_empty() {
        return write!(f, "-");
    }
    let text: Vec<String> = rows.iter().map(u64::to_string).collect();
    write!(f, "{}", text.join(","))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(&self.rows, f)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(&self.rows, f)
    }
}

/// Row `i` (ascending) of the diagram has `c_i - (i - 1)` cells.
pub fn young_vertex_to_partition(v: &ExponentVector) -> Result<Partition> {
    let k = v.dim();
    if !GraphKind::RestrictedYoung(k).contains(v)? {
        return Err(Error::NotAVertex(v.clone()));
    }
    let rows = v.entries().iter().enumerate().rev().map(|(i, &c)| (c - i as i64) as u64).filter(|&r| r > 0).collect();
    Partition::new(rows)
}

pub fn partition_to_young_vertex(lambda: &Partition, k: usize) -> Result<ExponentVector> {
    if lambda.len() > k {
        return Err(Error::InvalidPartition(format!("{lambda} has more than {k} rows")));
    }
    let mut rows = lambda.rows().to_vec();
    rows.resize(k, 0);
    rows.reverse();
    Ok(ExponentVector::new(rows.iter().enumerate().map(|(i, &r)| r as i64 + i as i64).collect()))
}

/// The non-zero entries of a strict vertex, read in decreasing order.
pub fn strict_vertex_to_partition(v: &ExponentVector) -> Result<StrictPartition> {
    if !GraphKind::StrictPartitions(v.dim()).contains(v)? {
        return Err(Error::NotAVertex(v.clone()));
    }
    StrictPartition::new(v.entries().iter().rev().filter(|&&c| c > 0).map(|&c| c as u64).collect())
}

pub fn strict_partition_to_vertex(sigma: &StrictPartition, k: usize) -> Result<ExponentVector> {
    let mut rows = sigma.padded(k)?;
    rows.reverse();
    Ok(ExponentVector::new(rows.into_iter().map(|r| r as i64).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev<const N: usize>(v: [i64; N]) -> ExponentVector {
        ExponentVector::from(v)
    }

    #[test]
    fn parsing() {
        assert_eq!("3,2,1".parse::<Partition>().unwrap().rows(), &[3, 2, 1]);
        assert_eq!("2, 2".parse::<Partition>().unwrap().size(), 4);
        assert!("".parse::<Partition>().unwrap().is_empty());
        assert!("-".parse::<StrictPartition>().unwrap().is_empty());
        assert!("2,2".parse::<StrictPartition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(Partition::empty().to_string(), "-");
        assert_eq!("3,1".parse::<StrictPartition>().unwrap().to_string(), "3,1");
    }

    #[test]
    fn young_codec() {
        assert!(young_vertex_to_partition(&ev([0, 1])).unwrap().is_empty());
        assert_eq!(young_vertex_to_partition(&ev([1, 3])).unwrap().rows(), &[2, 1]);
        let lambda = young_vertex_to_partition(&ev([0, 2, 4])).unwrap();
        assert_eq!(partition_to_young_vertex(&lambda, 3).unwrap(), ev([0, 2, 4]));
        assert!(young_vertex_to_partition(&ev([1, 1])).is_err());
        assert!(partition_to_young_vertex(&"1,1,1".parse().unwrap(), 2).is_err());
    }

    #[test]
    fn strict_codec() {
        assert_eq!(strict_vertex_to_partition(&ev([0, 1, 2])).unwrap().rows(), &[2, 1]);
        assert!(strict_vertex_to_partition(&ev([0, 0, 0])).unwrap().is_empty());
        let sigma: StrictPartition = "3,1".parse().unwrap();
        assert_eq!(strict_partition_to_vertex(&sigma, 4).unwrap(), ev([0, 0, 1, 3]));
        assert_eq!(strict_vertex_to_partition(&ev([0, 0, 1, 3])).unwrap(), sigma);
        assert!(strict_partition_to_vertex(&sigma, 1).is_err());
    }

    #[test]
    fn conjugate() {
        let lambda: Partition = "3,1".parse().unwrap();
        assert_eq!(lambda.conjugate().rows(), &[2, 1, 1]);
        assert_eq!(lambda.conjugate().conjugate(), lambda);
    }
}
