use super::MultiPoly;
use crate::scalar::Scalar;

/// `x (x - 1) .. (x - n + 1)`; equals one for `n = 0`.
pub fn falling_factorial<C: Scalar>(x: &C, n: u64) -> C {
    (0..n).fold(C::one(), |acc, s| acc * (x.clone() - C::from_uint(s)))
}

/// Falling factorial of an arbitrary polynomial: `p (p - 1) .. (p - n + 1)`.
pub fn ff_of<C: Scalar>(p: &MultiPoly<C>, n: u64) -> MultiPoly<C> {
    let k = p.nvars();
    (0..n).fold(MultiPoly::one(k), |acc, s| acc * (p - &MultiPoly::constant(k, C::from_uint(s))))
}

/// Falling factorial of the single variable `x_{i+1}` in a `k`-variable ring.
pub fn ff_poly<C: Scalar>(k: usize, i: usize, n: u64) -> MultiPoly<C> {
    ff_of(&MultiPoly::var(k, i), n)
}
