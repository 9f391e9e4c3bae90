//! The functions behind strict-partition path counts.
//!
//! Formulas here are written in decreasing coordinates `m_1 > m_2 > ..`, the
//! order in which the expansion `x_1, x_2/x_1, ..` makes sense; the strict graph
//! itself stores vertices increasingly, so [`strict_phi_ascending`] reverses.

use num_rational::BigRational;
use num_traits::Zero;

use super::{coefficients, eval_with_limits, expand_within, RationalFn, Window};
use crate::error::{Error, Result};
use crate::exponent::{simplex_points, ExponentVector};
use crate::formulas::{psi_polynomial, StrictPartition};
use crate::graded_graphs::{PhiSource, Reversed};
use crate::multipoly::ff_of;
use crate::report::VerifyReport;
use crate::scalar::{format_rational, multinomial_signed};
use crate::Poly;

fn differences(k: usize) -> Poly {
    let mut p = Poly::one(k);
    for i in 0..k {
        for j in i + 1..k {
            p = p * (Poly::var(k, i) - Poly::var(k, j));
        }
    }
    p
}

/// `prod_{i<j} (x_i - x_j)/(x_i + x_j)`.
pub fn tanh_product(k: usize) -> RationalFn<BigRational> {
    RationalFn::over_all_pairs(differences(k))
}

/// `f_n = prod_{i<j} (x_i - x_j)/(x_i + x_j) * (x_1 + .. + x_k)^(n)`.
pub fn f_n_builder(k: usize, n: u64) -> RationalFn<BigRational> {
    RationalFn::over_all_pairs(differences(k) * ff_of(&Poly::sum_of_vars(k), n))
}

/// `phi_v = prod_{i<j} (x_i - x_j)/(x_i + x_j) * psi_v`.
pub fn phi_v_builder(sigma: &StrictPartition, k: usize) -> Result<RationalFn<BigRational>> {
    Ok(RationalFn::over_all_pairs(differences(k) * psi_polynomial(sigma, k)?))
}

/// `g = phi_v * (x_1 + .. + x_k - m)^(n - m)` with `m = |sigma|`.
pub fn g_builder(sigma: &StrictPartition, k: usize, n: u64) -> Result<RationalFn<BigRational>> {
    let m = sigma.size();
    if n < m {
        return Err(Error::Precondition {
            witness: format!("n = {n}"),
            reason: format!("n must be at least |{sigma}| = {m}"),
        });
    }
    let shifted = Poly::sum_of_vars(k) - Poly::constant(k, BigRational::from_integer(m.into()));
    phi_v_builder(sigma, k)?.mul_poly(&ff_of(&shifted, n - m))
}

/// `phi_v` read on increasing coordinates, for use with the strict graph.
pub fn strict_phi_ascending(sigma: &StrictPartition, k: usize) -> Result<Reversed<RationalFn<BigRational>>> {
    Ok(Reversed(phi_v_builder(sigma, k)?))
}

impl PhiSource for RationalFn<BigRational> {
    fn dim(&self) -> usize {
        self.nvars()
    }

    fn product_coefficient(&self, w: &ExponentVector, m: u64) -> Result<BigRational> {
        w.check_dim(self.nvars())?;
        // only terms c <= w contribute, and those have suffix sums below w's
        let window = Window::covering(self.nvars(), [w]);
        let target = w.degree() - m as i64;
        let sum = |widen: i64| {
            let series = expand_within(self, &window.widened(widen));
            let mut acc = BigRational::zero();
            for (c, coef) in &series.terms {
                if c.degree() == target {
                    let mult = multinomial_signed((w - c).entries());
                    if !mult.is_zero() {
                        acc += coef * BigRational::from_integer(mult);
                    }
                }
            }
            acc
        };
        let first = sum(0);
        if first != sum(1) {
            return Err(Error::Stabilization(w.clone()));
        }
        Ok(first)
    }
}

/// Checks that `f` and its polynomial component `p_f` agree at every point of
/// the standard simplex of level `n`, i.e. that the antipolynomial component
/// vanishes there.
pub fn check_antipoly_vanishes(f: &RationalFn<BigRational>, p_f: &Poly, n: u64) -> VerifyReport {
    let k = f.nvars();
    let mut report = VerifyReport::new("antipoly_vanishes").param("k", k).param("n", n);
    let points = simplex_points(k, n);
    report.detail("points", points.len());
    report.detail("zero_order", "left to right");
    for c in points {
        let point: Vec<BigRational> = c.entries().iter().map(|&x| BigRational::from_integer(x.into())).collect();
        let lhs = match eval_with_limits(f, &point) {
            Ok(v) => v,
            Err(e) => {
                report.fail(format!("{c:?}: {e}"));
                return report;
            }
        };
        let rhs = p_f.eval(&point).expect("dimensions agree");
        if lhs != rhs {
            report.fail(format!("{c:?}: f = {}, P[f] = {}", format_rational(&lhs), format_rational(&rhs)));
            return report;
        }
    }
    report
}

/// Exponents in `[-probe, probe]^k` of total degree `d` whose last non-zero
/// entry is negative: some `c_j < 0` with `c_i <= 0` for every `i > j`.
pub fn negative_tail_probes(k: usize, d: i64, probe: i64) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut cur = vec![-probe; k];
    if k == 0 {
        return out;
    }
    loop {
        if cur.iter().sum::<i64>() == d && cur.iter().rev().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
            out.push(ExponentVector::from(cur.as_slice()));
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if cur[pos] < probe {
                cur[pos] += 1;
                break;
            }
            cur[pos] = -probe;
        }
    }
}

/// Every coefficient of `f` at a probe exponent of degree `d` (see
/// [`negative_tail_probes`]) must vanish.
pub fn check_negative_leading_coeffs(f: &RationalFn<BigRational>, d: i64, probe: i64) -> VerifyReport {
    let k = f.nvars();
    let mut report =
        VerifyReport::new("negative_leading_coeffs").param("k", k).param("degree", d).param("probe", probe);
    let probes = negative_tail_probes(k, d, probe);
    report.detail("probes", probes.len());
    match coefficients(f, &probes) {
        Ok(values) => {
            if let Some((e, c)) = probes.iter().zip(&values).find(|(_, c)| !c.is_zero()) {
                report.fail(format!("{e:?}: {}", format_rational(c)));
            }
        }
        Err(e) => report.fail(e.to_string()),
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{coefficient, polynomial_component};
    use crate::scalar::rat;

    fn ev<const N: usize>(v: [i64; N]) -> ExponentVector {
        ExponentVector::from(v)
    }

    #[test]
    fn builders() {
        assert_eq!(f_n_builder(2, 0), tanh_product(2));
        let f1 = f_n_builder(2, 1);
        assert_eq!(polynomial_component(&f1, 1).unwrap(), Poly::var(2, 0) - Poly::var(2, 1));
        assert_eq!(f1.numerator(), &((Poly::var(2, 0) - Poly::var(2, 1)) * Poly::sum_of_vars(2)));
        assert_eq!(g_builder(&StrictPartition::empty(), 3, 2).unwrap(), f_n_builder(3, 2));
        assert!(g_builder(&"2,1".parse().unwrap(), 2, 2).is_err());
    }

    #[test]
    fn closed_form_coefficients() {
        // [x^m] prod (x_i - x_j)/(x_i + x_j) (x_1 + .. + x_k)^n
        let k = 3;
        let n = 5;
        let f = tanh_product(k).mul_poly(&Poly::sum_of_vars(k).pow(n as u32)).unwrap();
        for m in crate::exponent::compositions(n, k) {
            let mut expected = BigRational::from_integer(crate::scalar::multinomial_signed(m.entries()));
            for i in 0..k {
                for j in i + 1..k {
                    if m[i] + m[j] > 0 {
                        expected *= BigRational::new((m[i] - m[j]).into(), (m[i] + m[j]).into());
                    }
                }
            }
            assert_eq!(coefficient(&f, &m).unwrap(), expected, "{m:?}");
        }
    }

    #[test]
    fn antipoly_checks() {
        let f = f_n_builder(2, 2);
        let p = polynomial_component(&f, 2).unwrap();
        assert!(check_antipoly_vanishes(&f, &p, 2).passed());
        // 1/(x1+x2) has no polynomial part but equals 1 at (1,0)
        let inv = RationalFn::over_all_pairs(Poly::one(2));
        let r = check_antipoly_vanishes(&inv, &Poly::zero(2), 2);
        assert!(!r.passed());
        let g = g_builder(&"1".parse().unwrap(), 2, 2).unwrap();
        let pg = polynomial_component(&g, 2).unwrap();
        assert!(check_antipoly_vanishes(&g, &pg, 2).passed());
    }

    #[test]
    fn negative_tail_vanishing() {
        assert_eq!(coefficient(&f_n_builder(2, 1), &ev([2, -1])).unwrap(), rat(0));
        assert!(check_negative_leading_coeffs(&f_n_builder(3, 0), 0, 3).passed());
        let g = g_builder(&"1".parse().unwrap(), 2, 2).unwrap();
        assert_eq!(coefficient(&g, &ev([3, -1])).unwrap(), rat(0));
        for d in 0..=3 {
            assert!(check_negative_leading_coeffs(&f_n_builder(3, 3), d, 3).passed());
            assert!(check_negative_leading_coeffs(&g, d, 3).passed());
        }
        // with a positive entry after the negative one the coefficient need not vanish
        assert_eq!(coefficient(&f_n_builder(2, 0), &ev([-1, 1])).unwrap(), rat(-2));
        // 1/(x1+x2) starts with x1^-1
        let inv = RationalFn::over_all_pairs(Poly::one(2));
        let r = check_negative_leading_coeffs(&inv, -1, 2);
        assert_eq!(r.witness.as_deref(), Some("(-1,0): 1"));
    }

    #[test]
    fn phi_v_counts_strict_paths() {
        use crate::formulas::strict_partition_to_vertex;
        use crate::graded_graphs::{coefficient_path_count, count_paths_dp, verify_phi_conditions, GraphKind};
        let kind = GraphKind::StrictPartitions(3);
        for sigma in ["", "1", "2,1", "3"] {
            let sigma: StrictPartition = sigma.parse().unwrap();
            let v = strict_partition_to_vertex(&sigma, 3).unwrap();
            let phi = strict_phi_ascending(&sigma, 3).unwrap();
            let top = v.degree() + 4;
            let report = verify_phi_conditions(&kind, &v, &phi, top);
            assert!(report.passed(), "{sigma}: {report:?}");
            for u in kind.vertices_in_box(top) {
                if u.degree() <= top && u.majorates(&v) {
                    assert_eq!(
                        coefficient_path_count(&kind, &phi, &v, &u).unwrap(),
                        count_paths_dp(&kind, &v, &u).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn probes_follow_the_pattern() {
        let probes = negative_tail_probes(2, 0, 2);
        assert_eq!(probes, vec![ev([1, -1]), ev([2, -2])]);
        assert!(negative_tail_probes(3, 1, 2).contains(&ev([2, -1, 0])));
        assert!(!negative_tail_probes(3, 0, 2).contains(&ev([-1, 1, 0])));
    }
}
