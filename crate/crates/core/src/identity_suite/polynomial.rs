use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{compare, factorial_ratio, ff_monomial, join, power_monomial};
use crate::error::{Error, Result};
use crate::exponent::compositions;
use crate::multipoly::{alternant_a, alternant_b, alternant_b_at, ff_of};
use crate::report::{timed, VerifyReport};
use crate::scalar::{factorial, rat_from_big};
use crate::Poly;

fn require_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Precondition { witness: "k = 0".into(), reason: "at least one variable is needed".into() });
    }
    Ok(())
}

fn shifted_sum(k: usize, shift: u64) -> Poly {
    Poly::sum_of_vars(k) - Poly::constant(k, rat_from_big(shift.into()))
}

/// Both sides of the falling-factorial and the homogeneous form of a
/// determinant identity.
struct Sides {
    lhs_ff: Poly,
    rhs_ff: Poly,
    lhs_lead: Poly,
    rhs_lead: Poly,
}

impl Sides {
    fn check(&self, report: &mut VerifyReport, perturb: bool) {
        compare(report, "falling factorial form", &self.lhs_ff, &self.rhs_ff, perturb);
        compare(report, "leading form", &self.lhs_lead, &self.rhs_lead, perturb);
    }
}

/// `prod_{i<j} (x_j - x_i)`.
fn vandermonde_det(k: usize) -> Poly {
    let mut p = Poly::one(k);
    for i in 0..k {
        for j in i + 1..k {
            p = p * (Poly::var(k, j) - Poly::var(k, i));
        }
    }
    p
}

fn hook_sides(k: usize, n: u64) -> Sides {
    let shift = (k * (k - 1) / 2) as u64;
    let det = vandermonde_det(k);
    let mut rhs_ff = Poly::zero(k);
    let mut rhs_lead = Poly::zero(k);
    for c in compositions(n + shift, k) {
        let mut coef = factorial_ratio(n, &c);
        for i in 0..k {
            for j in i + 1..k {
                coef *= BigRational::from_integer(BigInt::from(c[j] - c[i]));
            }
        }
        rhs_ff = rhs_ff + ff_monomial(&c).scalar_mul(&coef);
        rhs_lead = rhs_lead + power_monomial(&c).scalar_mul(&coef);
    }
    Sides {
        lhs_ff: &det * &ff_of(&shifted_sum(k, shift), n),
        rhs_ff,
        lhs_lead: &det * &Poly::sum_of_vars(k).pow(n as u32),
        rhs_lead,
    }
}

fn skew_sides(m: &[u64], n: u64) -> Sides {
    let k = m.len();
    let shift: u64 = m.iter().sum();
    let mut rhs_ff = Poly::zero(k);
    let mut rhs_lead = Poly::zero(k);
    for c in compositions(n + shift, k) {
        let point: Vec<BigRational> = c.entries().iter().map(|&ci| rat_from_big(ci.into())).collect();
        let coef = factorial_ratio(n, &c) * alternant_b_at(m, &point);
        rhs_ff = rhs_ff + ff_monomial(&c).scalar_mul(&coef);
        rhs_lead = rhs_lead + power_monomial(&c).scalar_mul(&coef);
    }
    Sides {
        lhs_ff: alternant_b::<BigRational>(m) * ff_of(&shifted_sum(k, shift), n),
        rhs_ff,
        lhs_lead: alternant_a::<BigRational>(m) * Poly::sum_of_vars(k).pow(n as u32),
        rhs_lead,
    }
}

/// Chu–Vandermonde, in binomial and in falling-factorial form.
pub fn check_vandermonde(k: usize, n: u64) -> Result<VerifyReport> {
    vandermonde(k, n, false)
}

pub(super) fn vandermonde(k: usize, n: u64, perturb: bool) -> Result<VerifyReport> {
    require_k(k)?;
    Ok(timed(|| {
        let mut report = VerifyReport::new("vandermonde").param("k", k).param("n", n);
        let sum = Poly::sum_of_vars(k);
        let falling = ff_of(&sum, n);
        let mut binomial_rhs = Poly::zero(k);
        let mut falling_rhs = Poly::zero(k);
        for c in compositions(n, k) {
            let term = ff_monomial(&c);
            binomial_rhs = binomial_rhs + term.scalar_mul(&factorial_ratio(0, &c));
            falling_rhs = falling_rhs + term.scalar_mul(&factorial_ratio(n, &c));
        }
        let binomial_lhs = falling.scalar_mul(&BigRational::new(BigInt::one(), factorial(n)));
        compare(&mut report, "binomial form", &binomial_lhs, &binomial_rhs, perturb);
        compare(&mut report, "falling factorial form", &falling, &falling_rhs, perturb);
        report
    }))
}

/// `(x_1 + .. + x_k)^n = sum n!/prod m_i! prod x_i^m_i`.
pub fn check_multinomial(k: usize, n: u64) -> Result<VerifyReport> {
    multinomial(k, n, false)
}

pub(super) fn multinomial(k: usize, n: u64, perturb: bool) -> Result<VerifyReport> {
    require_k(k)?;
    Ok(timed(|| {
        let mut report = VerifyReport::new("multinomial").param("k", k).param("n", n);
        let lhs = Poly::sum_of_vars(k).pow(n as u32);
        let rhs: Poly = compositions(n, k).iter().map(|c| power_monomial(c).scalar_mul(&factorial_ratio(n, c))).sum();
        compare(&mut report, "multinomial", &lhs, &rhs, perturb);
        report
    }))
}

/// The Vandermonde-weighted identity behind the hook length formula, in both
/// its falling-factorial and its leading homogeneous form.
pub fn check_hook_identity(k: usize, n: u64) -> Result<VerifyReport> {
    hook_identity(k, n, false)
}

pub(super) fn hook_identity(k: usize, n: u64, perturb: bool) -> Result<VerifyReport> {
    require_k(k)?;
    Ok(timed(|| {
        let mut report = VerifyReport::new("hook_identity").param("k", k).param("n", n);
        hook_sides(k, n).check(&mut report, perturb);
        report
    }))
}

/// The alternant identity for a strictly increasing `m`, in both forms. Also
/// checks that the staircase `m = (0, .., k-1)` gives literally the
/// polynomials of [`check_hook_identity`].
pub fn check_skew_identity(k: usize, m: &[u64], n: u64) -> Result<VerifyReport> {
    if m.len() != k {
        return Err(Error::DimensionMismatch { expected: k, found: m.len() });
    }
    skew_identity(m, n, false)
}

pub(super) fn skew_identity(m: &[u64], n: u64, perturb: bool) -> Result<VerifyReport> {
    let k = m.len();
    require_k(k)?;
    if m.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Precondition {
            witness: format!("m = ({})", join(m)),
            reason: "m must be strictly increasing".into(),
        });
    }
    Ok(timed(|| {
        let mut report = VerifyReport::new("skew_identity").param("k", k).param("m", join(m)).param("n", n);
        skew_sides(m, n).check(&mut report, perturb);
        let staircase: Vec<u64> = (0..k as u64).collect();
        let special = skew_sides(&staircase, n);
        let hook = hook_sides(k, n);
        compare(&mut report, "staircase lhs", &special.lhs_ff, &hook.lhs_ff, false);
        compare(&mut report, "staircase rhs", &special.rhs_ff, &hook.rhs_ff, false);
        compare(&mut report, "staircase leading lhs", &special.lhs_lead, &hook.lhs_lead, false);
        compare(&mut report, "staircase leading rhs", &special.rhs_lead, &hook.rhs_lead, false);
        report
    }))
}
