use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::GraphKind;
use crate::error::{Error, Result};
use crate::exponent::ExponentVector;

/// Number of directed paths from `v` to `u`, by dynamic programming over the
/// box `v <= w <= u`. Edges only raise coordinates, so every path stays in it.
pub fn count_paths_dp(kind: &GraphKind, v: &ExponentVector, u: &ExponentVector) -> Result<BigInt> {
    for x in [v, u] {
        if !kind.contains(x)? {
            return Err(Error::NotAVertex(x.clone()));
        }
    }
    if u.degree() < v.degree() || !u.majorates(v) {
        return Ok(BigInt::zero());
    }
    let k = kind.k();
    let lens: Vec<usize> = (0..k).map(|i| (u[i] - v[i]) as usize + 1).collect();
    let mut strides = vec![1usize; k];
    for i in (0..k.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * lens[i + 1];
    }
    let size: usize = lens.iter().product();
    let mut counts = vec![BigInt::zero(); size];
    let mut offset = vec![0usize; k];
    let mut point: Vec<i64> = v.entries().to_vec();

    // Row-major order visits every predecessor w - e_i before w.
    for idx in 0..size {
        if idx > 0 {
            let mut pos = k - 1;
            loop {
                if offset[pos] + 1 < lens[pos] {
                    offset[pos] += 1;
                    point[pos] += 1;
                    break;
                }
                offset[pos] = 0;
                point[pos] = v[pos];
                pos -= 1;
            }
        }
        if !kind.contains_unchecked(&point) {
            continue;
        }
        if idx == 0 {
            counts[0] = BigInt::one();
            continue;
        }
        let mut acc = BigInt::zero();
        for i in 0..k {
            if offset[i] > 0 {
                acc += &counts[idx - strides[i]];
            }
        }
        counts[idx] = acc;
    }
    Ok(counts.pop().unwrap_or_default())
}

/// Path counts from `v` to every vertex of degree at most `max_degree`,
/// computed forward one level at a time.
pub fn count_paths_from(
    kind: &GraphKind,
    v: &ExponentVector,
    max_degree: i64,
) -> Result<BTreeMap<ExponentVector, BigInt>> {
    if !kind.contains(v)? {
        return Err(Error::NotAVertex(v.clone()));
    }
    let mut all = BTreeMap::new();
    let mut level: BTreeMap<ExponentVector, BigInt> = BTreeMap::new();
    if v.degree() <= max_degree {
        level.insert(v.clone(), BigInt::one());
    }
    while !level.is_empty() {
        let mut next: BTreeMap<ExponentVector, BigInt> = BTreeMap::new();
        for (w, c) in &level {
            if w.degree() < max_degree {
                for x in kind.out_neighbors(w)? {
                    *next.entry(x).or_default() += c;
                }
            }
        }
        all.append(&mut level);
        level = next;
    }
    Ok(all)
}
