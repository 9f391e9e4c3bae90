use num_rational::BigRational;

use super::StrictPartition;
use crate::error::{Error, Result};
use crate::multipoly::ff_poly;
use crate::Poly;

/// Largest `k` the symmetrization is attempted for.
pub const PSI_MAX_K: usize = 7;

/// `psi_sigma = 1/(k - l)! SYM( prod_{i<=l} x_i^(m_i) prod_{i<=l, i<j} (x_i + x_j)/(x_i - x_j) )`.
///
/// A permutation only matters through the images of the first `l` positions,
/// so the sum runs over injections and the `(k - l)!` cancels. Every summand is
/// brought over the Vandermonde `prod_{a<b} (x_a - x_b)`, and the total is
/// divided back exactly.
pub fn psi_polynomial(sigma: &StrictPartition, k: usize) -> Result<Poly> {
    let l = sigma.len();
    if l > k {
        return Err(Error::InvalidPartition(format!("{sigma} has more than {k} rows")));
    }
    if k > PSI_MAX_K {
        return Err(Error::Budget(format!("symmetrization over {k}! permutations exceeds the limit k <= {PSI_MAX_K}")));
    }
    let m = sigma.rows();
    let x = |i: usize| Poly::var(k, i);
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).collect();

    let mut total = Poly::zero(k);
    for image in injections(k, l) {
        // pairs (p, q) whose ratio (x_p + x_q)/(x_p - x_q) appears, p first
        let mut ratio_pairs: Vec<(usize, usize)> = Vec::new();
        for i in 0..l {
            let p = image[i];
            for &q in &image[i + 1..] {
                ratio_pairs.push((p, q));
            }
            for q in (0..k).filter(|q| !image.contains(q)) {
                ratio_pairs.push((p, q));
            }
        }
        let mut term = Poly::one(k);
        for (i, &p) in image.iter().enumerate() {
            term = term * ff_poly(k, p, m[i]);
        }
        for &(a, b) in &pairs {
            term = match ratio_pairs.iter().find(|&&(p, q)| (p, q) == (a, b) || (p, q) == (b, a)) {
                // (x_p - x_q) cancels against (x_a - x_b) up to orientation
                Some(&(p, _)) if p == a => term * (x(a) + x(b)),
                Some(_) => -(term * (x(a) + x(b))),
                None => term * (x(a) - x(b)),
            };
        }
        total = total + term;
    }
    for &(a, b) in &pairs {
        total = total.div_exact_difference(a, b)?;
    }
    Ok(total)
}

/// Ordered `l`-tuples of distinct indices below `k`.
fn injections(k: usize, l: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..l {
        let mut next = Vec::new();
        for prefix in &out {
            for i in (0..k).filter(|i| !prefix.contains(i)) {
                let mut longer = prefix.clone();
                longer.push(i);
                next.push(longer);
            }
        }
        out = next;
    }
    out
}

/// `psi` at a point whose coordinates are pairwise distinct, straight from the
/// symmetrization; an independent check on [`psi_polynomial`].
pub fn psi_at_distinct_point(sigma: &StrictPartition, point: &[BigRational]) -> BigRational {
    let k = point.len();
    let m = sigma.rows();
    let mut total = BigRational::from_integer(0.into());
    for image in injections(k, sigma.len()) {
        let mut term = BigRational::from_integer(1.into());
        for (i, &p) in image.iter().enumerate() {
            term *= crate::multipoly::falling_factorial(&point[p], m[i]);
            let later = image[i + 1..].iter().copied().chain((0..k).filter(|q| !image.contains(q)));
            for q in later {
                term *= (&point[p] + &point[q]) / (&point[p] - &point[q]);
            }
        }
        total += term;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::permutations_with_sign;
    use crate::scalar::rat;

    fn strict(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(psi_polynomial(&strict("1"), 2).unwrap(), Poly::var(2, 0) + Poly::var(2, 1));
        assert_eq!(psi_polynomial(&strict(""), 3).unwrap(), Poly::one(3));
        let s = Poly::sum_of_vars(2);
        assert_eq!(psi_polynomial(&strict("2"), 2).unwrap(), &s * &(&s - &Poly::one(2)));
        assert!(psi_polynomial(&strict("2,1"), 1).is_err());
        assert!(matches!(psi_polynomial(&strict("1"), 8), Err(Error::Budget(_))));
    }

    #[test]
    fn matches_pointwise_symmetrization() {
        let points = [vec![rat(2), rat(5), rat(7)], vec![rat(0), rat(3), rat(-4)], vec![rat(1), rat(6), rat(11)]];
        for sigma in ["1", "2", "2,1", "3,1", "3,2,1"] {
            let sigma = strict(sigma);
            let psi = psi_polynomial(&sigma, 3).unwrap();
            for p in &points {
                assert_eq!(psi.eval(p).unwrap(), psi_at_distinct_point(&sigma, p), "{sigma} at {p:?}");
            }
        }
    }

    #[test]
    fn degree_and_symmetry() {
        for (sigma, k) in [("1", 3), ("2,1", 3), ("3,1", 4), ("4,2,1", 3), ("3", 4)] {
            let sigma = strict(sigma);
            let psi = psi_polynomial(&sigma, k).unwrap();
            assert_eq!(psi.degree(), Some(sigma.size() as i64));
            for (perm, _) in permutations_with_sign(k) {
                assert_eq!(psi.permute_vars(&perm), psi);
            }
        }
    }
}
