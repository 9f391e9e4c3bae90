use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::multipoly::MultiPoly;
use crate::report::VerifyReport;
use crate::scalar::format_rational;

/// A perfect matching of `0..2d` with its sign in the Pfaffian expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedMatching {
    /// Pairs `(a, b)` with `a < b`, sorted by `a`.
    pub pairs: Vec<(usize, usize)>,
    pub sign: i8,
}

/// All `(n - 1)!!` perfect matchings of `0..n`, `n` even.
pub fn pfaffian_matchings(n: usize) -> Vec<SignedMatching> {
    assert!(n.is_multiple_of(2), "matchings need an even index set");
    let mut out = Vec::new();
    let rest: Vec<usize> = (0..n).collect();
    collect(&rest, &mut Vec::new(), 1, &mut out);
    out
}

fn collect(rest: &[usize], pairs: &mut Vec<(usize, usize)>, sign: i8, out: &mut Vec<SignedMatching>) {
    let Some((&first, tail)) = rest.split_first() else {
        out.push(SignedMatching { pairs: pairs.clone(), sign });
        return;
    };
    for (idx, &partner) in tail.iter().enumerate() {
        let remaining: Vec<usize> = tail.iter().copied().filter(|&x| x != partner).collect();
        pairs.push((first, partner));
        let s = if idx % 2 == 0 { sign } else { -sign };
        collect(&remaining, pairs, s, out);
        pairs.pop();
    }
}

/// Checks `Pf((x_i - x_j)/(x_i + x_j)) = eps * prod_{i<j} (x_i - x_j)/(x_i + x_j)`
/// with `eps = +-1`, after multiplying both sides by `prod_{i<j} (x_i + x_j)`.
pub fn verify_pfaffian_product(k: usize) -> VerifyReport {
    pfaffian_product(k, false)
}

/// With `perturb`, the first matching is counted twice.
pub(crate) fn pfaffian_product(k: usize, perturb: bool) -> VerifyReport {
    let mut report = VerifyReport::new("pfaffian_product").param("k", k);
    if k == 0 || k % 2 == 1 || k > 8 {
        report.fail(format!("k = {k} must be even and between 2 and 8"));
        return report;
    }
    type P = MultiPoly<BigRational>;
    let x = |i: usize| P::var(k, i);
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();

    let mut lhs = P::zero(k);
    let matchings = pfaffian_matchings(k);
    for (idx, m) in matchings.iter().enumerate() {
        let sign = if perturb && idx == 0 { 2 * m.sign } else { m.sign };
        let mut term = P::constant(k, BigRational::from_integer(sign.into()));
        for &(i, j) in &pairs {
            term = if m.pairs.contains(&(i, j)) { term * (x(i) - x(j)) } else { term * (x(i) + x(j)) };
        }
        lhs = lhs + term;
    }
    let rhs = pairs.iter().fold(P::one(k), |acc, &(i, j)| acc * (x(i) - x(j)));

    // both sides share their top monomial up to the sign
    let Some((e, r)) = rhs.terms().next_back() else {
        report.fail("right-hand side vanished");
        return report;
    };
    let ratio = lhs.coefficient(e) / r;
    report.detail("matchings", matchings.len());
    report.detail("epsilon", format_rational(&ratio));
    if !(ratio.abs().is_one()) {
        report.fail(format!("ratio at {e:?} is {}", format_rational(&ratio)));
        return report;
    }
    let diff = lhs - rhs.scalar_mul(&ratio);
    if let Some((e, c)) = diff.terms().next() {
        debug_assert!(!c.is_zero());
        report.fail(format!("{e:?}"));
    }
    report
}
