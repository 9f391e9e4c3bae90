use super::{falling_factorial, ff_poly, MultiPoly};
use crate::exponent::ExponentVector;
use crate::scalar::Scalar;

/// All permutations of `0..k` in lexicographic order, with their signs.
pub fn permutations_with_sign(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i64)>) {
        if prefix.len() == used.len() {
            let mut inversions = 0;
            for a in 0..prefix.len() {
                for b in a + 1..prefix.len() {
                    if prefix[a] > prefix[b] {
                        inversions += 1;
                    }
                }
            }
            out.push((prefix.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(k), &mut vec![false; k], &mut out);
    out
}

/// `det(x_i^{m_j})`, expanded over all permutations.
pub fn alternant_a<C: Scalar>(m: &[u64]) -> MultiPoly<C> {
    let k = m.len();
    let mut out = MultiPoly::zero(k);
    for (perm, sign) in permutations_with_sign(k) {
        let exps: Vec<i64> = perm.iter().map(|&j| m[j] as i64).collect();
        out.add_term(ExponentVector::new(exps), C::from_int(sign));
    }
    out
}

/// `det(x_i^(m_j))` with falling factorials in place of powers.
pub fn alternant_b<C: Scalar>(m: &[u64]) -> MultiPoly<C> {
    let k = m.len();
    let mut out = MultiPoly::zero(k);
    for (perm, sign) in permutations_with_sign(k) {
        let term = perm.iter().enumerate().fold(MultiPoly::one(k), |acc, (i, &j)| acc * ff_poly(k, i, m[j]));
        out = out + term.scalar_mul(&C::from_int(sign));
    }
    out
}

/// Numeric value of `det(point_i^(m_j))`, by Gaussian elimination.
pub fn alternant_b_at<C: Scalar>(m: &[u64], point: &[C]) -> C {
    assert_eq!(m.len(), point.len());
    let k = m.len();
    let mut a: Vec<Vec<C>> = point.iter().map(|x| m.iter().map(|&mj| falling_factorial(x, mj)).collect()).collect();
    let mut det = C::from_int(1);
    for col in 0..k {
        let Some(pivot) = (col..k).find(|&r| !a[r][col].is_zero()) else {
            return C::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det = det * p.clone();
        let (top, below) = a.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in below.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone() / p.clone();
            for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = x.clone() - y.clone() * factor.clone();
            }
        }
    }
    det
}
