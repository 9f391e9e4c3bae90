//! Sparse multivariate polynomials with exact coefficients.
//!
//! Terms live in a `BTreeMap` keyed by [`ExponentVector`], whose ordering is
//! graded lexicographic, so iteration and the text form are deterministic.

mod alternant;
mod falling;
mod interpolate;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::scalar::Scalar;

pub use alternant::{alternant_a, alternant_b, alternant_b_at, permutations_with_sign};
pub use falling::{falling_factorial, ff_of, ff_poly};
pub use interpolate::{interpolate_simplex, lemma3_expand, SimplexSpec};

#[derive(Clone, PartialEq)]
pub struct MultiPoly<C> {
    nvars: usize,
    terms: BTreeMap<ExponentVector, C>,
}

impl<C: Scalar> MultiPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(ExponentVector::zero(nvars), c)
    }

    /// The variable `x_{i+1}` (0-based `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        Self::monomial(ExponentVector::unit(nvars, i), C::one())
    }

    /// `c * x^exps`. Panics on negative exponents.
    pub fn monomial(exps: ExponentVector, c: C) -> Self {
        assert!(exps.is_non_negative(), "polynomial exponents must be non-negative: {exps:?}");
        let nvars = exps.dim();
        let mut p = MultiPoly { nvars, terms: BTreeMap::new() };
        p.add_term(exps, c);
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing repeats.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (ExponentVector, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.dim(), nvars);
            assert!(e.is_non_negative(), "polynomial exponents must be non-negative: {e:?}");
            p.add_term(e, c);
        }
        p
    }

    /// `x_1 + .. + x_k`.
    pub fn sum_of_vars(nvars: usize) -> Self {
        (0..nvars).fold(Self::zero(nvars), |acc, i| acc + Self::var(nvars, i))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &ExponentVector) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    /// Total degree; `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().map(|e| e.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub(crate) fn add_term(&mut self, exps: ExponentVector, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.nvars, found: other.nvars })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea + eb, ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a.clone() * c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, point: &[C]) -> Result<C> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: point.len() });
        }
        let mut powers: Vec<Vec<C>> = point.iter().map(|x| vec![C::one(), x.clone()]).collect();
        let mut total = C::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &d) in e.entries().iter().enumerate() {
                let d = d as usize;
                while powers[i].len() <= d {
                    let next = powers[i].last().unwrap().clone() * point[i].clone();
                    powers[i].push(next);
                }
                term = term * powers[i][d].clone();
            }
            total = total + term;
        }
        Ok(total)
    }

    /// Replaces each variable `x_i` by `images[i]`; the result lives in the
    /// ring of the images.
    pub fn substitute(&self, images: &[MultiPoly<C>]) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: images.len() });
        }
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        for img in images {
            if img.nvars != target {
                return Err(Error::DimensionMismatch { expected: target, found: img.nvars });
            }
        }
        let mut powers: Vec<Vec<MultiPoly<C>>> = images.iter().map(|p| vec![Self::one(target), p.clone()]).collect();
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (i, &d) in e.entries().iter().enumerate() {
                let d = d as usize;
                while powers[i].len() <= d {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][d];
            }
            out = out + term;
        }
        Ok(out)
    }

    /// Renames variables: `x_i` becomes `x_{perm[i]}`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; self.nvars];
            for (i, &d) in e.entries().iter().enumerate() {
                ne[perm[i]] = d;
            }
            out.add_term(ExponentVector::new(ne), c.clone());
        }
        out
    }

    /// Sum of the terms of maximal total degree.
    pub fn leading_homogeneous(&self) -> Result<Self> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        Ok(MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(e, _)| e.degree() == d).map(|(e, c)| (e.clone(), c.clone())).collect(),
        })
    }

    /// Exact quotient by the linear form `x_a - x_b`.
    pub fn div_exact_difference(&self, a: usize, b: usize) -> Result<Self> {
        assert!(a != b && a < self.nvars && b < self.nvars);
        // Write p = sum_d p_d x_a^d and q = sum_d q_d x_a^d; then
        // p_d = q_{d-1} - x_b q_d, solved from the top degree down.
        let mut slices: BTreeMap<i64, Self> = BTreeMap::new();
        for (e, c) in &self.terms {
            let d = e[a];
            let rest = e.shifted(a, -d);
            slices.entry(d).or_insert_with(|| Self::zero(self.nvars)).add_term(rest, c.clone());
        }
        let top = match slices.keys().next_back() {
            Some(&t) => t,
            None => return Ok(Self::zero(self.nvars)),
        };
        let xb = Self::var(self.nvars, b);
        let mut quotient = Self::zero(self.nvars);
        let mut carry = Self::zero(self.nvars); // q_d for the degree just above
        for d in (0..=top).rev() {
            let p_d = slices.remove(&d).unwrap_or_else(|| Self::zero(self.nvars));
            // q_{d-1} = p_d + x_b q_d
            let q_below = p_d + &xb * &carry;
            if d == 0 {
                if !q_below.is_zero() {
                    return Err(Error::NotDivisible(format!("non-zero remainder dividing by x{} - x{}", a + 1, b + 1)));
                }
                break;
            }
            let mut lifted = Self::zero(self.nvars);
            for (e, c) in &q_below.terms {
                lifted.add_term(e.shifted(a, d - 1), c.clone());
            }
            quotient = quotient + lifted;
            carry = q_below;
        }
        Ok(quotient)
    }

    /// The smallest monomial (graded-lex) at which two polynomials differ.
    pub fn first_difference(&self, other: &Self) -> Option<(ExponentVector, C, C)> {
        let diff = self - other;
        diff.terms.keys().next().map(|e| (e.clone(), self.coefficient(e), other.coefficient(e)))
    }

    pub fn map_coefficients<D: Scalar>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        MultiPoly::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }
}

impl<C: Scalar> fmt::Display for MultiPoly<C> {
    /// Terms from highest to lowest in graded-lex order, each written as
    /// `coeff * x1^a1*x2^a2`, with zero exponents omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .entries()
                    .iter()
                    .enumerate()
                    .filter(|(_, &d)| d != 0)
                    .map(|(i, d)| format!("x{}^{}", i + 1, d))
                    .collect();
                if vars.is_empty() {
                    format!("{c}")
                } else {
                    format!("{c} * {}", vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

impl<C: Scalar> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.nvars, self)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<C: Scalar> $trait<&MultiPoly<C>> for &MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $method(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
                self.$checked(rhs).expect("polynomials over different variable counts")
            }
        }
        impl<C: Scalar> $trait<MultiPoly<C>> for MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $method(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
                (&self).$method(&rhs)
            }
        }
        impl<C: Scalar> $trait<&MultiPoly<C>> for MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $method(self, rhs: &MultiPoly<C>) -> MultiPoly<C> {
                (&self).$method(rhs)
            }
        }
        impl<C: Scalar> $trait<MultiPoly<C>> for &MultiPoly<C> {
            type Output = MultiPoly<C>;
            fn $method(self, rhs: MultiPoly<C>) -> MultiPoly<C> {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<C: Scalar> Neg for MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        self.scalar_mul(&-C::one())
    }
}

impl<C: Scalar> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        self.scalar_mul(&-C::one())
    }
}

impl<C: Scalar> std::iter::Sum for MultiPoly<C> {
    /// Panics on an empty iterator, which has no variable count.
    fn sum<I: Iterator<Item = Self>>(mut iter: I) -> Self {
        let first = iter.next().expect("cannot sum an empty sequence of polynomials");
        iter.fold(first, |acc, p| acc + p)
    }
}
