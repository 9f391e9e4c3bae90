//! Interpolation on combinatorial simplices.
//!
//! A polynomial of degree at most `n` in `k` variables is pinned down by its
//! values on `{(a_{1 t_1}, .., a_{k t_k}) : t_1 + .. + t_k <= n}`. The
//! constructive direction adds one correction per simplex point, level by
//! level, using products `prod_i prod_{s < t_i} (x_i - a_{i s})` that vanish on
//! every other point of equal or lower level.

use std::collections::BTreeMap;

use super::{ff_poly, MultiPoly};
use crate::error::{Error, Result};
use crate::exponent::{compositions, simplex_points, ExponentVector};
use crate::scalar::Scalar;

/// Node sets `A_1, .., A_k`, each of `n + 1` distinct values.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexSpec<C> {
    node_sets: Vec<Vec<C>>,
    n: u64,
}

impl<C: Scalar> SimplexSpec<C> {
    pub fn new(node_sets: Vec<Vec<C>>, n: u64) -> Result<Self> {
        if node_sets.is_empty() {
            return Err(Error::SimplexValues("at least one variable is required".into()));
        }
        for (i, set) in node_sets.iter().enumerate() {
            if set.len() as u64 != n + 1 {
                return Err(Error::SimplexValues(format!(
                    "node set {} has {} entries, expected {}",
                    i + 1,
                    set.len(),
                    n + 1
                )));
            }
            for a in 0..set.len() {
                for b in a + 1..set.len() {
                    if set[a] == set[b] {
                        return Err(Error::SimplexValues(format!("node set {} repeats the value {}", i + 1, set[a])));
                    }
                }
            }
        }
        Ok(SimplexSpec { node_sets, n })
    }

    /// The standard simplex: every `A_i = {0, 1, .., n}`.
    pub fn standard(k: usize, n: u64) -> Self {
        let nodes: Vec<C> = (0..=n).map(C::from_uint).collect();
        SimplexSpec { node_sets: vec![nodes; k], n }
    }

    pub fn k(&self) -> usize {
        self.node_sets.len()
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Index tuples `t` with `sum t <= n`, ordered by level.
    pub fn indices(&self) -> Vec<Vec<usize>> {
        simplex_points(self.k(), self.n)
            .into_iter()
            .map(|e| e.entries().iter().map(|&c| c as usize).collect())
            .collect()
    }

    pub fn point(&self, t: &[usize]) -> Vec<C> {
        t.iter().enumerate().map(|(i, &ti)| self.node_sets[i][ti].clone()).collect()
    }

    /// Samples `p` on every simplex point.
    pub fn sample(&self, p: &MultiPoly<C>) -> Result<BTreeMap<Vec<usize>, C>> {
        self.indices().into_iter().map(|t| p.eval(&self.point(&t)).map(|v| (t, v))).collect()
    }
}

/// The unique polynomial of degree at most `spec.n()` taking the given values.
pub fn interpolate_simplex<C: Scalar>(spec: &SimplexSpec<C>, values: &BTreeMap<Vec<usize>, C>) -> Result<MultiPoly<C>> {
    let k = spec.k();
    let indices = spec.indices();
    if let Some(extra) = values
        .keys()
        .find(|t| t.len() != k || t.iter().sum::<usize>() as u64 > spec.n || t.iter().any(|&ti| ti as u64 > spec.n))
    {
        return Err(Error::SimplexValues(format!("value given at {extra:?}, which is not a simplex point")));
    }
    if let Some(missing) = indices.iter().find(|t| !values.contains_key(*t)) {
        return Err(Error::SimplexValues(format!("no value at simplex point {missing:?}")));
    }

    let mut f = MultiPoly::zero(k);
    for t in &indices {
        let point = spec.point(t);
        let target = values[t].clone();
        let current = f.eval(&point)?;
        if target == current {
            continue;
        }
        let mut basis = MultiPoly::one(k);
        let mut basis_at_point = C::one();
        for (i, &ti) in t.iter().enumerate() {
            for s in 0..ti {
                let node = spec.node_sets[i][s].clone();
                basis = basis * (MultiPoly::var(k, i) - MultiPoly::constant(k, node.clone()));
                basis_at_point = basis_at_point * (point[i].clone() - node);
            }
        }
        let scale = (target - current) / basis_at_point;
        f = f + basis.scalar_mul(&scale);
    }
    Ok(f)
}

/// Expands `f` in the falling-factorial basis of its top level:
/// `sum_{c_1+..+c_k = n} f(c) / prod c_i! * prod x_i^(c_i)`.
///
/// Requires `deg f <= n` and `f = 0` on the standard simplex of level `n - 1`;
/// both are checked, and the result is asserted equal to `f`.
pub fn lemma3_expand<C: Scalar>(f: &MultiPoly<C>, n: u64) -> Result<MultiPoly<C>> {
    let k = f.nvars();
    if let Some(d) = f.degree() {
        if d > n as i64 {
            return Err(Error::Precondition { witness: format!("degree {d}"), reason: format!("degree exceeds {n}") });
        }
    }
    if n > 0 {
        for c in simplex_points(k, n - 1) {
            let point = as_scalars::<C>(&c);
            let value = f.eval(&point)?;
            if !value.is_zero() {
                return Err(Error::Precondition {
                    witness: format!("{c:?}"),
                    reason: format!("polynomial takes the value {value} below level {n}"),
                });
            }
        }
    }

    let mut out = MultiPoly::zero(k);
    for c in compositions(n, k) {
        let value = f.eval(&as_scalars::<C>(&c))?;
        if value.is_zero() {
            continue;
        }
        let mut term = MultiPoly::one(k);
        let mut denom = C::one();
        for (i, &ci) in c.entries().iter().enumerate() {
            term = term * ff_poly(k, i, ci as u64);
            denom = denom * scalar_factorial::<C>(ci as u64);
        }
        out = out + term.scalar_mul(&(value / denom));
    }
    assert!(out == *f, "falling-factorial expansion disagrees with its input");
    Ok(out)
}

fn as_scalars<C: Scalar>(c: &ExponentVector) -> Vec<C> {
    c.entries().iter().map(|&x| C::from_int(x)).collect()
}

fn scalar_factorial<C: Scalar>(n: u64) -> C {
    (1..=n).fold(C::one(), |acc, i| acc * C::from_uint(i))
}
