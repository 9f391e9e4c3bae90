use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{compare, factorial_ratio, ff_monomial};
use crate::error::{Error, Result};
use crate::exponent::{compositions, ExponentVector};
use crate::formulas::StrictPartition;
use crate::laurent::{
    check_antipoly_vanishes, check_negative_leading_coeffs, eval_with_limits, f_n_builder, g_builder, phi_v_builder,
    polynomial_component, RationalFn,
};
use crate::report::{timed, VerifyReport};
use crate::scalar::rat_from_big;
use crate::Poly;

/// Negative-tail probes range over `[-PROBE_RADIUS, PROBE_RADIUS]^k`.
pub const PROBE_RADIUS: i64 = 3;

/// `prod_{i<j} (c_i - c_j)/(c_i + c_j)` with `0/0 = 1`.
fn tanh_at(c: &ExponentVector) -> BigRational {
    let mut value = BigRational::one();
    for i in 0..c.dim() {
        for j in i + 1..c.dim() {
            if c[i] + c[j] != 0 {
                value *= BigRational::new(BigInt::from(c[i] - c[j]), BigInt::from(c[i] + c[j]));
            }
        }
    }
    value
}

/// Antipolynomial vanishing on the simplex and the negative-tail probes of
/// every degree up to `n`.
fn laurent_subchecks(report: &mut VerifyReport, f: &RationalFn<BigRational>, p: &Poly, n: u64) {
    report.absorb(&check_antipoly_vanishes(f, p, n));
    let mut probes = 0usize;
    for d in 0..=n as i64 {
        let sub = check_negative_leading_coeffs(f, d, PROBE_RADIUS);
        probes += sub.details.get("probes").and_then(|s| s.parse::<usize>().ok()).unwrap_or(0);
        report.absorb(&sub);
    }
    report.details.remove("negative_leading_coeffs.probes");
    report.detail("negative_leading_coeffs.probes", probes);
}

/// `P[f_n]` against its closed form in the falling-factorial basis, then the
/// two vanishing statements about the antipolynomial part of `f_n`.
pub fn check_polycomponent(k: usize, n: u64) -> Result<VerifyReport> {
    polycomponent(k, n, false)
}

pub(super) fn polycomponent(k: usize, n: u64, perturb: bool) -> Result<VerifyReport> {
    if k == 0 || k > 4 || n > 4 {
        return Err(Error::Precondition {
            witness: format!("k = {k}, n = {n}"),
            reason: "needs 1 <= k <= 4 and n <= 4".into(),
        });
    }
    Ok(timed(|| {
        let mut report = VerifyReport::new("polycomponent").param("k", k).param("n", n);
        let f = f_n_builder(k, n);
        let p = match polynomial_component(&f, n as i64) {
            Ok(p) => p,
            Err(e) => {
                report.fail(e.to_string());
                return report;
            }
        };
        let closed: Poly =
            compositions(n, k).iter().map(|c| ff_monomial(c).scalar_mul(&(tanh_at(c) * factorial_ratio(n, c)))).sum();
        compare(&mut report, "polynomial component", &p, &closed, perturb);
        if !perturb {
            laurent_subchecks(&mut report, &f, &p, n);
        }
        report
    }))
}

/// `P[g]` for `g = phi_v (x_1 + .. + x_k - m)^(n - m)` against the expansion
/// `sum (n - m)!/prod c_i! phi_v(c) prod x_i^(c_i)`, with `phi_v(c)` taken as a
/// limit where coordinates vanish; then antipolynomial vanishing on the
/// simplex and the negative-tail probes.
pub fn check_ivanov_identity(sigma: &StrictPartition, k: usize, n: u64) -> Result<VerifyReport> {
    ivanov_identity(sigma, k, n, false)
}

pub(super) fn ivanov_identity(sigma: &StrictPartition, k: usize, n: u64, perturb: bool) -> Result<VerifyReport> {
    let m = sigma.size();
    if k == 0 || k > 4 || n < m || sigma.len() > k {
        return Err(Error::Precondition {
            witness: format!("sigma = {sigma}, k = {k}, n = {n}"),
            reason: "needs 1 <= k <= 4, at most k rows and n >= |sigma|".into(),
        });
    }
    let g = g_builder(sigma, k, n)?;
    let phi = phi_v_builder(sigma, k)?;
    Ok(timed(|| {
        let mut report = VerifyReport::new("ivanov_identity").param("sigma", sigma).param("k", k).param("n", n);
        let p = match polynomial_component(&g, n as i64) {
            Ok(p) => p,
            Err(e) => {
                report.fail(e.to_string());
                return report;
            }
        };
        let mut expansion = Poly::zero(k);
        for (idx, c) in compositions(n, k).iter().enumerate() {
            let point: Vec<BigRational> = c.entries().iter().map(|&ci| rat_from_big(ci.into())).collect();
            let mut value = match eval_with_limits(&phi, &point) {
                Ok(v) => v,
                Err(e) => {
                    report.fail(format!("phi_v at {c:?}: {e}"));
                    return report;
                }
            };
            if perturb && idx == 0 {
                value += BigRational::one();
            }
            if !value.is_zero() {
                expansion = expansion + ff_monomial(c).scalar_mul(&(value * factorial_ratio(n - m, c)));
            }
        }
        compare(&mut report, "polynomial component", &p, &expansion, false);
        if !perturb {
            laurent_subchecks(&mut report, &g, &p, n);
        }
        report
    }))
}
