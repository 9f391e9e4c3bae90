//! Rational functions with denominators `prod (x_i + x_j)^p`, `i < j`, and
//! their Laurent expansion in `x_1, x_2/x_1, .., x_k/x_{k-1}`:
//! `(x_i + x_j)^{-1} = x_i^{-1} - x_j x_i^{-2} + x_j^2 x_i^{-3} - ..`.
//!
//! In the ratio variables `y_1 = x_1`, `y_r = x_r / x_{r-1}` the monomial
//! `x^c` is `prod y_r^{s_r}` with `s_r = c_r + .. + c_k`. Every correction
//! term of a factor raises the suffix sums `s_{i+1}, .., s_j` and lowers none,
//! so the coefficient at `e` only sees terms whose suffix sums stay below
//! those of `e`. Expansions keep exactly the terms inside such a window.

mod limits;
mod pfaffian;
mod strict;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::multipoly::MultiPoly;
use crate::scalar::Scalar;

pub use limits::eval_with_limits;
pub(crate) use pfaffian::pfaffian_product;
pub use pfaffian::{pfaffian_matchings, verify_pfaffian_product, SignedMatching};
pub use strict::{
    check_antipoly_vanishes, check_negative_leading_coeffs, f_n_builder, g_builder, negative_tail_probes,
    phi_v_builder, strict_phi_ascending, tanh_product,
};

/// `numerator / prod_{i<j} (x_i + x_j)^{p_ij}`.
#[derive(Clone, PartialEq)]
pub struct RationalFn<C> {
    numerator: MultiPoly<C>,
    denom_powers: BTreeMap<(usize, usize), u32>,
}

impl<C: Scalar> std::fmt::Debug for RationalFn<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}) /", self.numerator)?;
        for (&(i, j), &p) in &self.denom_powers {
            write!(f, " (x{}+x{})^{p}", i + 1, j + 1)?;
        }
        Ok(())
    }
}

impl<C: Scalar> RationalFn<C> {
    pub fn new(numerator: MultiPoly<C>, denom_powers: BTreeMap<(usize, usize), u32>) -> Result<Self> {
        let k = numerator.nvars();
        for &(i, j) in denom_powers.keys() {
            if i >= j || j >= k {
                return Err(Error::Parse(format!(
                    "denominator factor ({}, {}) is not a pair i < j <= {k}",
                    i + 1,
                    j + 1
                )));
            }
        }
        let denom_powers = denom_powers.into_iter().filter(|&(_, p)| p > 0).collect();
        Ok(RationalFn { numerator, denom_powers })
    }

    pub fn polynomial(p: MultiPoly<C>) -> Self {
        RationalFn { numerator: p, denom_powers: BTreeMap::new() }
    }

    /// `numerator / prod_{i<j} (x_i + x_j)`.
    pub fn over_all_pairs(numerator: MultiPoly<C>) -> Self {
        let k = numerator.nvars();
        let denom_powers = (0..k).flat_map(|i| (i + 1..k).map(move |j| ((i, j), 1))).collect();
        RationalFn { numerator, denom_powers }
    }

    pub fn nvars(&self) -> usize {
        self.numerator.nvars()
    }

    pub fn numerator(&self) -> &MultiPoly<C> {
        &self.numerator
    }

    pub fn denom_powers(&self) -> &BTreeMap<(usize, usize), u32> {
        &self.denom_powers
    }

    /// Total degree of the denominator.
    pub fn denominator_degree(&self) -> i64 {
        self.denom_powers.values().map(|&p| p as i64).sum()
    }

    /// Multiplies the numerator by a polynomial.
    pub fn mul_poly(&self, p: &MultiPoly<C>) -> Result<Self> {
        Ok(RationalFn { numerator: self.numerator.checked_mul(p)?, denom_powers: self.denom_powers.clone() })
    }

    /// Lowest suffix sums over all expansion terms, coordinate by coordinate.
    fn suffix_floor(&self) -> Vec<i64> {
        let k = self.nvars();
        let shift = self.base_shift();
        let mut floor = vec![i64::MAX; k];
        for (e, _) in self.numerator.terms() {
            let s = (e + &shift).suffix_sums();
            for q in 0..k {
                floor[q] = floor[q].min(s[q]);
            }
        }
        floor
    }

    fn base_shift(&self) -> ExponentVector {
        let mut shift = vec![0i64; self.nvars()];
        for (&(i, _), &p) in &self.denom_powers {
            shift[i] -= p as i64;
        }
        ExponentVector::new(shift)
    }
}

/// Exclusive upper bounds on the suffix sums `s_2, .., s_k` of kept terms.
/// `s_1`, the total degree, is left free: expansion never changes it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    pub upper: Vec<i64>,
}

impl Window {
    pub fn contains(&self, e: &ExponentVector) -> bool {
        let s = e.suffix_sums();
        (1..s.len()).all(|q| s[q] < self.upper[q])
    }

    /// The smallest window holding every listed exponent.
    pub fn covering<'a>(k: usize, exps: impl IntoIterator<Item = &'a ExponentVector>) -> Self {
        let mut upper = vec![i64::MIN; k];
        upper[0] = i64::MAX;
        for e in exps {
            let s = e.suffix_sums();
            for q in 1..k {
                upper[q] = upper[q].max(s[q] + 1);
            }
        }
        Window { upper }
    }

    pub fn widened(&self, by: i64) -> Self {
        Window {
            upper: self.upper.iter().enumerate().map(|(q, &u)| if q == 0 { u } else { u.saturating_add(by) }).collect(),
        }
    }
}

/// A Laurent expansion restricted to a window; every stored coefficient is
/// exact, and coefficients inside the window that are absent are zero.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentSeries<C> {
    pub terms: BTreeMap<ExponentVector, C>,
    /// Number of terms kept from each geometric factor, in the worst direction.
    pub trunc: u64,
    pub window: Window,
}

impl<C: Scalar> LaurentSeries<C> {
    /// `None` outside the certified window.
    pub fn coefficient(&self, e: &ExponentVector) -> Option<C> {
        self.window.contains(e).then(|| self.terms.get(e).cloned().unwrap_or_else(C::zero))
    }

    /// Terms with every exponent non-negative.
    pub fn polynomial_part(&self, k: usize) -> MultiPoly<C> {
        MultiPoly::from_terms(
            k,
            self.terms.iter().filter(|(e, _)| e.is_non_negative()).map(|(e, c)| (e.clone(), c.clone())),
        )
    }
}

/// Expansion keeping `T` terms of every factor: the window sits `T` above the
/// lowest suffix sums the function can produce, in every direction some
/// factor moves along.
pub fn expand<C: Scalar>(f: &RationalFn<C>, trunc: u64) -> LaurentSeries<C> {
    let floor = f.suffix_floor();
    // directions no factor moves along need no bound at all
    let upper: Vec<i64> = (0..f.nvars())
        .map(|q| {
            let moved = f.denom_powers.keys().any(|&(i, j)| i < q && q <= j);
            if moved {
                floor[q].saturating_add(trunc as i64)
            } else {
                i64::MAX
            }
        })
        .collect();
    expand_within(f, &Window { upper })
}

/// Expansion restricted to `window`. Exact there, since no term outside it can
/// come back in.
pub fn expand_within<C: Scalar>(f: &RationalFn<C>, window: &Window) -> LaurentSeries<C> {
    let k = f.nvars();
    let shift = f.base_shift();
    let mut current: BTreeMap<ExponentVector, C> = BTreeMap::new();
    for (e, c) in f.numerator.terms() {
        let e = e + &shift;
        if window.contains(&e) {
            current.insert(e, c.clone());
        }
    }
    let floor = f.suffix_floor();
    let mut trunc = 0u64;
    for (&(i, j), &p) in &f.denom_powers {
        trunc =
            trunc.max((i + 1..=j).map(|q| window.upper[q].saturating_sub(floor[q]).max(0) as u64).min().unwrap_or(0));
        let mut next: BTreeMap<ExponentVector, C> = BTreeMap::new();
        for (e, c) in &current {
            let s = e.suffix_sums();
            // t more steps of x_j / x_i raise s_{i+1..=j} by t
            let room = (i + 1..=j).map(|q| window.upper[q] - s[q]).min().unwrap_or(0);
            let mut weight = C::one();
            let mut exps = e.entries().to_vec();
            for t in 0..room.max(0) {
                if t > 0 {
                    // (-1)^t binom(t + p - 1, p - 1), updated in place
                    weight = -weight * C::from_int(t + p as i64 - 1) / C::from_int(t);
                    exps[i] -= 1;
                    exps[j] += 1;
                }
                let key = ExponentVector::from(exps.as_slice());
                let term = c.clone() * weight.clone();
                let slot = next.entry(key).or_insert_with(C::zero);
                *slot = slot.clone() + term;
            }
        }
        next.retain(|_, c| !c.is_zero());
        current = next;
    }
    debug_assert!(current.keys().all(|e| e.dim() == k && window.contains(e)));
    LaurentSeries { terms: current, trunc, window: window.clone() }
}

/// Coefficient of `x^e`, computed in the smallest window holding `e` and
/// confirmed by a second expansion in a wider one.
pub fn coefficient<C: Scalar>(f: &RationalFn<C>, e: &ExponentVector) -> Result<C> {
    e.check_dim(f.nvars())?;
    Ok(coefficients(f, std::slice::from_ref(e))?.remove(0))
}

/// Several coefficients from one shared expansion, stabilization-checked.
pub fn coefficients<C: Scalar>(f: &RationalFn<C>, exps: &[ExponentVector]) -> Result<Vec<C>> {
    let k = f.nvars();
    for e in exps {
        e.check_dim(k)?;
    }
    let window = Window::covering(k, exps);
    let first = expand_within(f, &window);
    let second = expand_within(f, &window.widened(1));
    exps.iter()
        .map(|e| {
            let a = first.coefficient(e).expect("window covers its own exponents");
            let b = second.coefficient(e).expect("widened window covers the original");
            if a != b {
                return Err(Error::Stabilization(e.clone()));
            }
            Ok(a)
        })
        .collect()
}

/// `P[f]`: the terms of the expansion with no negative exponent, all of which
/// must have total degree at most `degree_bound`.
pub fn polynomial_component<C: Scalar>(f: &RationalFn<C>, degree_bound: i64) -> Result<MultiPoly<C>> {
    let k = f.nvars();
    // a non-negative exponent has every suffix sum at most its degree
    let upper: Vec<i64> = (0..k).map(|q| if q == 0 { i64::MAX } else { degree_bound.max(0) + 1 }).collect();
    let window = Window { upper };
    let keep = |s: &LaurentSeries<C>| {
        MultiPoly::from_terms(
            k,
            s.terms
                .iter()
                .filter(|(e, _)| e.is_non_negative() && e.degree() <= degree_bound)
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    };
    let first = keep(&expand_within(f, &window));
    let second = keep(&expand_within(f, &window.widened(1)));
    if let Some((e, _, _)) = first.first_difference(&second) {
        return Err(Error::Stabilization(e));
    }
    Ok(first)
}
