use std::collections::BTreeMap;

use super::RationalFn;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Value at a point with non-negative coordinates. Zero coordinates are
/// replaced, left to right, by `t, t^2, ..` and the limit `t -> +0` is taken,
/// so that e.g. `x_2 / (x_1 + x_2)` is `0` at the origin.
pub fn eval_with_limits<C: Scalar + PartialOrd>(f: &RationalFn<C>, point: &[C]) -> Result<C> {
    let k = f.nvars();
    if point.len() != k {
        return Err(Error::DimensionMismatch { expected: k, found: point.len() });
    }
    if let Some(x) = point.iter().find(|x| **x < C::zero()) {
        return Err(Error::Precondition { witness: format!("{x}"), reason: "coordinates must be non-negative".into() });
    }
    // order of t carried by each coordinate; 0 for positive ones
    let mut order = vec![0i64; k];
    let mut next = 1;
    for (i, x) in point.iter().enumerate() {
        if x.is_zero() {
            order[i] = next;
            next += 1;
        }
    }

    let mut num: BTreeMap<i64, C> = BTreeMap::new();
    for (e, c) in f.numerator().terms() {
        let mut power = 0i64;
        let mut value = c.clone();
        for (i, &ei) in e.entries().iter().enumerate() {
            if order[i] > 0 {
                power += order[i] * ei;
            } else {
                for _ in 0..ei {
                    value = value * point[i].clone();
                }
            }
        }
        let slot = num.entry(power).or_insert_with(C::zero);
        *slot = slot.clone() + value;
    }
    let Some((&num_order, num_lead)) = num.iter().find(|(_, c)| !c.is_zero()) else {
        return Ok(C::zero());
    };

    let mut den_order = 0i64;
    let mut den_lead = C::one();
    for (&(i, j), &p) in f.denom_powers() {
        let (o, lead) = match (order[i], order[j]) {
            (0, 0) => (0, point[i].clone() + point[j].clone()),
            (0, _) => (0, point[i].clone()),
            (_, 0) => (0, point[j].clone()),
            (a, b) => (a.min(b), C::one()),
        };
        for _ in 0..p {
            den_order += o;
            den_lead = den_lead * lead.clone();
        }
    }

    match num_order.cmp(&den_order) {
        std::cmp::Ordering::Greater => Ok(C::zero()),
        std::cmp::Ordering::Equal => Ok(num_lead.clone() / den_lead),
        std::cmp::Ordering::Less => Err(Error::InfiniteLimit(format!(
            "numerator vanishes to order {num_order} but the denominator to order {den_order}"
        ))),
    }
}
