//! Exact machine checks of the polynomial identities behind the closed
//! formulas, and bulk comparison of those formulas with the path oracle.
//!
//! Every check compares both sides coefficient by coefficient. Each one also
//! has a negative control ([`Check::run_control`]) that perturbs the right-hand
//! side and must fail with a witness.

mod cross;
mod polynomial;
mod series;
mod sweep;

pub use cross::{cross_validate, Sample};
pub use polynomial::{check_hook_identity, check_multinomial, check_skew_identity, check_vandermonde};
pub use series::{check_ivanov_identity, check_polycomponent, PROBE_RADIUS};
pub use sweep::{default_sweep, run_all, sweep_m_vectors, sweep_sigmas, Check};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::exponent::ExponentVector;
use crate::multipoly::ff_poly;
use crate::report::VerifyReport;
use crate::scalar::{factorial, format_rational};
use crate::Poly;

/// `prod_i x_i^(c_i)`.
fn ff_monomial(c: &ExponentVector) -> Poly {
    let k = c.dim();
    c.entries().iter().enumerate().fold(Poly::one(k), |acc, (i, &ci)| acc * ff_poly(k, i, ci as u64))
}

fn power_monomial(c: &ExponentVector) -> Poly {
    Poly::monomial(c.clone(), BigRational::one())
}

/// `top! / prod c_i!`.
fn factorial_ratio(top: u64, c: &ExponentVector) -> BigRational {
    let den: BigInt = c.entries().iter().map(|&ci| factorial(ci as u64)).product();
    BigRational::new(factorial(top), den)
}

/// Adds one to the leading coefficient (or the constant term of zero).
fn perturbed(p: &Poly) -> Poly {
    let e = p.terms().next_back().map(|(e, _)| e.clone()).unwrap_or_else(|| ExponentVector::zero(p.nvars()));
    p + &Poly::monomial(e, BigRational::one())
}

/// Records the first monomial where the sides disagree.
fn compare(report: &mut VerifyReport, form: &str, lhs: &Poly, rhs: &Poly, perturb: bool) {
    let rhs = if perturb { perturbed(rhs) } else { rhs.clone() };
    if let Some((e, l, r)) = lhs.first_difference(&rhs) {
        report.fail(format!("{form} at {e:?}: lhs {}, rhs {}", format_rational(&l), format_rational(&r)));
    }
}

fn join(m: &[u64]) -> String {
    m.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}
