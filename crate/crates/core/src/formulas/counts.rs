use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{partition_to_young_vertex, Partition, StrictPartition};
use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::graded_graphs::GraphKind;
use crate::laurent::{eval_with_limits, phi_v_builder};
use crate::multipoly::alternant_b_at;
use crate::scalar::{factorial, multinomial, rat_from_big, to_integer};

fn integral(q: BigRational, what: &str) -> Result<BigInt> {
    to_integer(&q).ok_or_else(|| Error::NotIntegral(format!("{what} evaluates to {q}")))
}

fn require(kind: GraphKind, v: &ExponentVector) -> Result<()> {
    if kind.contains(v)? {
        Ok(())
    } else {
        Err(Error::NotAVertex(v.clone()))
    }
}

fn as_rows(v: &ExponentVector) -> Vec<u64> {
    v.entries().iter().map(|&c| c as u64).collect()
}

/// `n! / prod m_i!`, the number of lattice paths from the origin to `m`.
pub fn multinomial_paths(m: &[u64]) -> BigInt {
    multinomial(m)
}

/// Standard tableaux of the diagram encoded by `v`, counted from the
/// staircase `(0, 1, .., k-1)`: `n! / prod n_i! * prod_{i<j} (n_j - n_i)`.
pub fn syt_count(v: &ExponentVector) -> Result<BigInt> {
    let k = v.dim();
    require(GraphKind::RestrictedYoung(k), v)?;
    let n = v.degree() - (k * k.saturating_sub(1) / 2) as i64;
    let mut num = factorial(n as u64);
    for i in 0..k {
        for j in i + 1..k {
            num *= BigInt::from(v[j] - v[i]);
        }
    }
    let den: BigInt = v.entries().iter().map(|&c| factorial(c as u64)).product();
    integral(BigRational::new(num, den), "hook formula")
}

/// Hook lengths, cell by cell, row by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookSet {
    pub rows: Vec<Vec<u64>>,
}

impl HookSet {
    pub fn product(&self) -> BigInt {
        self.rows.iter().flatten().map(|&h| BigInt::from(h)).product()
    }

    pub fn first_column(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r[0]).collect()
    }
}

pub fn hook_lengths(lambda: &Partition) -> HookSet {
    let cols = lambda.conjugate();
    let rows = lambda
        .rows()
        .iter()
        .enumerate()
        .map(|(i, &len)| (0..len).map(|j| (len - j) + (cols.rows()[j as usize] - i as u64) - 1).collect())
        .collect();
    HookSet { rows }
}

/// `prod_{i<j} (n_j - n_i)` and `prod n_i!` for the encoding of `lambda` with
/// exactly as many coordinates as rows.
fn claim_sides(lambda: &Partition) -> (BigInt, BigInt) {
    let v = partition_to_young_vertex(lambda, lambda.len()).expect("row count fits");
    let n = v.entries();
    let mut diffs = BigInt::one();
    for i in 0..n.len() {
        for j in i + 1..n.len() {
            diffs *= BigInt::from(n[j] - n[i]);
        }
    }
    (diffs, n.iter().map(|&c| factorial(c as u64)).product())
}

/// Whether `hook_product * prod_{i<j} (n_j - n_i) = prod n_i!` holds.
pub fn hook_claim_holds(lambda: &Partition) -> bool {
    let (diffs, facts) = claim_sides(lambda);
    hook_lengths(lambda).product() * diffs == facts
}

pub fn hook_product(lambda: &Partition) -> BigInt {
    let product = hook_lengths(lambda).product();
    let (diffs, facts) = claim_sides(lambda);
    assert_eq!(&product * diffs, facts, "hook product of {lambda} disagrees with its first-column hooks");
    product
}

/// `n! / prod h`.
pub fn syt_count_hook(lambda: &Partition) -> BigInt {
    let product = hook_product(lambda);
    let n = factorial(lambda.size());
    assert!((&n % &product).is_zero(), "hook product does not divide n!");
    n / product
}

/// Paths from `v1` to `v2` in the Young graph: `n! / prod n_i! * b_m(n_1, .., n_k)`.
pub fn skew_syt_count(v1: &ExponentVector, v2: &ExponentVector) -> Result<BigInt> {
    let k = v1.dim();
    require(GraphKind::RestrictedYoung(k), v1)?;
    require(GraphKind::RestrictedYoung(k), v2)?;
    if !v2.majorates(v1) {
        return Ok(BigInt::zero());
    }
    let m = as_rows(v1);
    let n = as_rows(v2);
    let point: Vec<BigRational> = n.iter().map(|&c| rat_from_big(c.into())).collect();
    let det = alternant_b_at(&m, &point);
    let steps = v2.degree() - v1.degree();
    let den: BigInt = n.iter().map(|&c| factorial(c)).product();
    integral(det * BigRational::new(factorial(steps as u64), den), "skew formula")
}

/// `prod_{i<j} (m_i - m_j)/(m_i + m_j) * n! / prod m_i!` over the rows.
pub fn strict_count(sigma: &StrictPartition) -> BigInt {
    let m = sigma.rows();
    let mut value = BigRational::new(factorial(sigma.size()), m.iter().map(|&r| factorial(r)).product());
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            value *= BigRational::new(BigInt::from(m[i] - m[j]), BigInt::from(m[i] + m[j]));
        }
    }
    integral(value, "strict formula").expect("strict path count is an integer")
}

/// Paths from `from` to `to` in the strict graph with `k` coordinates:
/// `(n - m)! / prod n_i! * phi_v(n_1, .., n_k)`, rows aligned in decreasing
/// order and padded with zeros.
pub fn strict_skew_count(from: &StrictPartition, to: &StrictPartition, k: usize) -> Result<BigInt> {
    let m = from.padded(k)?;
    let n = to.padded(k)?;
    if m.iter().zip(&n).any(|(a, b)| b < a) {
        return Ok(BigInt::zero());
    }
    let phi = phi_v_builder(from, k)?;
    let point: Vec<BigRational> = n.iter().map(|&c| rat_from_big(c.into())).collect();
    let value = eval_with_limits(&phi, &point)?;
    let den: BigInt = n.iter().map(|&c| factorial(c)).product();
    integral(value * BigRational::new(factorial(to.size() - from.size()), den), "strict skew formula")
}
