//! Coefficient series whose products with powers of `x_1 + .. + x_k` count
//! paths, and the constructive existence argument for them.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::GraphKind;
use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::multipoly::MultiPoly;
use crate::report::VerifyReport;
use crate::scalar::{multinomial_signed, to_integer};

/// Anything that can report `[w](phi * (x_1 + .. + x_k)^m)`.
pub trait PhiSource {
    fn dim(&self) -> usize;

    fn product_coefficient(&self, w: &ExponentVector, m: u64) -> Result<BigRational>;

    /// Highest target degree the source is known to be valid for; `None` when
    /// it is an exact closed form.
    fn degree_bound(&self) -> Option<i64> {
        None
    }
}

/// A series homogeneous of degree `deg base`, truncated: it only carries the
/// coefficients needed up to `degree_bound`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiSeries {
    pub base: ExponentVector,
    pub coeffs: BTreeMap<ExponentVector, BigRational>,
    pub degree_bound: i64,
}

impl PhiSeries {
    pub fn coefficient(&self, w: &ExponentVector) -> BigRational {
        self.coeffs.get(w).cloned().unwrap_or_else(BigRational::zero)
    }
}

fn product_from_terms<'a>(
    terms: impl Iterator<Item = (&'a ExponentVector, &'a BigRational)>,
    w: &ExponentVector,
    m: u64,
) -> BigRational {
    let target = w.degree() - m as i64;
    let mut acc = BigRational::zero();
    for (c, coef) in terms {
        if c.degree() != target {
            continue;
        }
        let diff = w - c;
        let mult = multinomial_signed(diff.entries());
        if !mult.is_zero() {
            acc += coef * BigRational::from_integer(mult);
        }
    }
    acc
}

impl PhiSource for PhiSeries {
    fn dim(&self) -> usize {
        self.base.dim()
    }

    fn product_coefficient(&self, w: &ExponentVector, m: u64) -> Result<BigRational> {
        w.check_dim(self.dim())?;
        Ok(product_from_terms(self.coeffs.iter(), w, m))
    }

    fn degree_bound(&self) -> Option<i64> {
        Some(self.degree_bound)
    }
}

impl PhiSource for MultiPoly<BigRational> {
    fn dim(&self) -> usize {
        self.nvars()
    }

    fn product_coefficient(&self, w: &ExponentVector, m: u64) -> Result<BigRational> {
        w.check_dim(self.nvars())?;
        Ok(product_from_terms(self.terms(), w, m))
    }
}

/// Reads `phi` with its variables in reverse order, for formulas stated in
/// descending coordinates.
#[derive(Debug, Clone)]
pub struct Reversed<P>(pub P);

impl<P: PhiSource> PhiSource for Reversed<P> {
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn product_coefficient(&self, w: &ExponentVector, m: u64) -> Result<BigRational> {
        self.0.product_coefficient(&w.reversed(), m)
    }

    fn degree_bound(&self) -> Option<i64> {
        self.0.degree_bound()
    }
}

impl<P: PhiSource + ?Sized> PhiSource for &P {
    fn dim(&self) -> usize {
        (**self).dim()
    }

    fn product_coefficient(&self, w: &ExponentVector, m: u64) -> Result<BigRational> {
        (**self).product_coefficient(w, m)
    }

    fn degree_bound(&self) -> Option<i64> {
        (**self).degree_bound()
    }
}

fn require_vertex(kind: &GraphKind, v: &ExponentVector) -> Result<()> {
    if kind.contains(v)? {
        Ok(())
    } else {
        Err(Error::NotAVertex(v.clone()))
    }
}

/// Monomials `w` outside the graph, of degree `deg v ..= max_degree`, that
/// step into it along some edge.
pub fn boundary_monomials(kind: &GraphKind, v: &ExponentVector, max_degree: i64) -> Result<Vec<ExponentVector>> {
    require_vertex(kind, v)?;
    let mut out = BTreeSet::new();
    for d in v.degree() + 1..=max_degree + 1 {
        for x in kind.vertices_of_degree(d) {
            for i in 0..kind.k() {
                let w = x.shifted(i, -1);
                if !kind.contains_unchecked(w.entries()) {
                    out.insert(w);
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Special monomials for `(V, v)` up to degree `max_degree`: vertices of degree
/// `deg v`, and the boundary monomials above them. Sorted by degree.
pub fn special_monomials(kind: &GraphKind, v: &ExponentVector, max_degree: i64) -> Result<Vec<ExponentVector>> {
    let mut out: BTreeSet<ExponentVector> = kind.vertices_of_degree(v.degree()).into_iter().collect();
    out.extend(boundary_monomials(kind, v, max_degree)?);
    Ok(out.into_iter().collect())
}

/// The son of a special monomial: itself on the base level, otherwise
/// `x_i^{-(deg u - deg v)} u` for the smallest `i` with `x_i u` a vertex.
pub fn son(kind: &GraphKind, v: &ExponentVector, u: &ExponentVector) -> Option<ExponentVector> {
    let d = u.degree() - v.degree();
    if d == 0 {
        return Some(u.clone());
    }
    if d < 0 || kind.contains_unchecked(u.entries()) {
        return None;
    }
    (0..kind.k()).find(|&i| kind.contains_unchecked(u.shifted(i, 1).entries())).map(|i| u.shifted(i, -d))
}

/// Builds a series satisfying the path-counting conditions for every special
/// monomial of degree at most `max_degree`, fixing one coefficient per special
/// monomial in order of increasing degree.
pub fn construct_phi(kind: &GraphKind, v: &ExponentVector, max_degree: i64) -> Result<PhiSeries> {
    require_vertex(kind, v)?;
    let specials = special_monomials(kind, v, max_degree)?;
    let mut coeffs: BTreeMap<ExponentVector, BigRational> = BTreeMap::new();
    let mut fixed: BTreeSet<ExponentVector> = BTreeSet::new();

    for u in &specials {
        let s = son(kind, v, u).ok_or_else(|| Error::Hypothesis(u.clone(), "special monomial has no son".into()))?;
        if !fixed.insert(s.clone()) {
            return Err(Error::Hypothesis(u.clone(), format!("son {s:?} is already taken")));
        }
        let m = (u.degree() - v.degree()) as u64;
        let target = if u == v { BigRational::one() } else { BigRational::zero() };
        // the son enters its own relation with multinomial weight 1
        let current = product_from_terms(coeffs.iter().filter(|(c, _)| **c != s), u, m);
        let value = target - current;
        if value.is_zero() {
            coeffs.remove(&s);
        } else {
            coeffs.insert(s, value);
        }
    }

    let phi = PhiSeries { base: v.clone(), coeffs, degree_bound: max_degree };
    // a later son may still sit under an earlier relation when the hypotheses fail
    for u in &specials {
        let m = (u.degree() - v.degree()) as u64;
        let expected = if u == v { BigRational::one() } else { BigRational::zero() };
        if phi.product_coefficient(u, m)? != expected {
            return Err(Error::Hypothesis(u.clone(), "relation broken by a later coefficient".into()));
        }
    }
    Ok(phi)
}

/// Checks the three path-counting conditions for `phi` at base vertex `v`, the
/// boundary condition on every boundary monomial of degree at most
/// `max_degree`, with exponent `deg w - deg v`.
pub fn verify_phi_conditions<P: PhiSource + ?Sized>(
    kind: &GraphKind,
    v: &ExponentVector,
    phi: &P,
    max_degree: i64,
) -> VerifyReport {
    let mut report =
        VerifyReport::new("phi_conditions").param("kind", kind).param("v", v).param("max_degree", max_degree);
    let outcome = (|| -> Result<Option<String>> {
        require_vertex(kind, v)?;
        v.check_dim(phi.dim())?;
        if max_degree < v.degree() {
            return Err(Error::DegreeBound { need: v.degree(), have: max_degree });
        }
        if let Some(bound) = phi.degree_bound() {
            if bound < max_degree {
                return Err(Error::DegreeBound { need: max_degree, have: bound });
            }
        }
        let c = phi.product_coefficient(v, 0)?;
        if !c.is_one() {
            return Ok(Some(format!("condition 1: coefficient at {v:?} is {c}")));
        }
        for w in kind.vertices_of_degree(v.degree()) {
            if &w == v {
                continue;
            }
            let c = phi.product_coefficient(&w, 0)?;
            if !c.is_zero() {
                return Ok(Some(format!("condition 2: coefficient at {w:?} is {c}")));
            }
        }
        let boundary = boundary_monomials(kind, v, max_degree)?;
        for w in &boundary {
            let c = phi.product_coefficient(w, (w.degree() - v.degree()) as u64)?;
            if !c.is_zero() {
                return Ok(Some(format!("condition 3: coefficient at {w:?} is {c}")));
            }
        }
        Ok(None)
    })();
    match outcome {
        Ok(None) => report,
        Ok(Some(witness)) => {
            report.fail(witness);
            report
        }
        Err(e) => {
            report.fail(e.to_string());
            report
        }
    }
}

/// Path count read off as `[u](phi * (x_1 + .. + x_k)^{deg u - deg v})`.
pub fn coefficient_path_count<P: PhiSource + ?Sized>(
    kind: &GraphKind,
    phi: &P,
    v: &ExponentVector,
    u: &ExponentVector,
) -> Result<BigInt> {
    require_vertex(kind, v)?;
    require_vertex(kind, u)?;
    if u.degree() < v.degree() {
        return Ok(BigInt::zero());
    }
    if let Some(bound) = phi.degree_bound() {
        if u.degree() > bound {
            return Err(Error::DegreeBound { need: u.degree(), have: bound });
        }
    }
    let c = phi.product_coefficient(u, (u.degree() - v.degree()) as u64)?;
    to_integer(&c).ok_or_else(|| Error::NotIntegral(format!("coefficient at {u:?} is {c}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded_graphs::count_paths_dp;
    use crate::scalar::rat;

    type P = MultiPoly<BigRational>;

    fn ev<const N: usize>(v: [i64; N]) -> ExponentVector {
        ExponentVector::from(v)
    }

    fn vandermonde(k: usize) -> P {
        let mut p = P::one(k);
        for i in 0..k {
            for j in i + 1..k {
                p = p * (P::var(k, j) - P::var(k, i));
            }
        }
        p
    }

    /// Specials straight from the definition, over a box wide enough to hold them.
    fn brute_specials(kind: &GraphKind, v: &ExponentVector, max_degree: i64) -> Vec<ExponentVector> {
        let k = kind.k();
        let lo = -1i64;
        let hi = max_degree + 1;
        let mut out = Vec::new();
        let mut cur = vec![lo; k];
        loop {
            let u = ExponentVector::from(cur.as_slice());
            let d = u.degree();
            let in_v = kind.contains_unchecked(&cur);
            let special = (in_v && d == v.degree())
                || (!in_v
                    && d >= v.degree()
                    && d <= max_degree
                    && (0..k).any(|i| kind.contains_unchecked(u.shifted(i, 1).entries())));
            if special {
                out.push(u);
            }
            let mut pos = k;
            loop {
                if pos == 0 {
                    out.sort();
                    return out;
                }
                pos -= 1;
                if cur[pos] < hi {
                    cur[pos] += 1;
                    break;
                }
                cur[pos] = lo;
            }
        }
    }

    #[test]
    fn specials_match_definition() {
        for kind in [
            GraphKind::Pascal(2),
            GraphKind::RestrictedYoung(2),
            GraphKind::StrictPartitions(3),
            GraphKind::RestrictedYoung(3),
        ] {
            let v = kind.base_vertex().unwrap();
            let d = v.degree() + 4;
            assert_eq!(special_monomials(&kind, &v, d).unwrap(), brute_specials(&kind, &v, d), "{kind}");
        }
        // boundary monomials on the base level are special too
        assert_eq!(
            special_monomials(&GraphKind::Pascal(2), &ev([0, 0]), 0).unwrap(),
            vec![ev([-1, 1]), ev([0, 0]), ev([1, -1])]
        );
        let young = special_monomials(&GraphKind::RestrictedYoung(2), &ev([0, 1]), 2).unwrap();
        assert_eq!(young, vec![ev([-1, 2]), ev([0, 1]), ev([-1, 3]), ev([1, 1])]);
        // (-1,2) steps into (0,2)
        assert!(special_monomials(&GraphKind::StrictPartitions(2), &ev([0, 0]), 2).unwrap().contains(&ev([-1, 2])));
    }

    #[test]
    fn key_claim_on_sons() {
        for kind in [GraphKind::Pascal(3), GraphKind::RestrictedYoung(3), GraphKind::StrictPartitions(3)] {
            let v = kind.base_vertex().unwrap();
            let specials = special_monomials(&kind, &v, v.degree() + 5).unwrap();
            for u in &specials {
                let s = son(&kind, &v, u).unwrap();
                for w in &specials {
                    if w != u && w.majorates(&s) {
                        assert!(w.degree() > u.degree(), "{kind}: {w:?} majorates S({u:?}) = {s:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn pascal_phi_is_one() {
        let phi = construct_phi(&GraphKind::Pascal(3), &ev([0, 0, 0]), 4).unwrap();
        assert_eq!(phi.coeffs, BTreeMap::from([(ev([0, 0, 0]), rat(1))]));
        assert!(verify_phi_conditions(&GraphKind::Pascal(3), &ev([0, 0, 0]), &P::one(3), 6).passed());
    }

    #[test]
    fn vandermonde_is_a_young_phi() {
        let kind = GraphKind::RestrictedYoung(3);
        let v = ev([0, 1, 2]);
        let phi = vandermonde(3);
        assert!(verify_phi_conditions(&kind, &v, &phi, 9).passed());
        assert_eq!(
            coefficient_path_count(&GraphKind::RestrictedYoung(2), &vandermonde(2), &ev([0, 1]), &ev([1, 3])).unwrap(),
            BigInt::from(2)
        );
        for u in kind.vertices_of_degree(8) {
            assert_eq!(coefficient_path_count(&kind, &phi, &v, &u).unwrap(), count_paths_dp(&kind, &v, &u).unwrap());
        }
    }

    #[test]
    fn constant_two_fails_condition_one() {
        let report = verify_phi_conditions(&GraphKind::Pascal(2), &ev([0, 0]), &P::constant(2, rat(2)), 3);
        assert!(!report.passed());
        assert!(report.witness.as_deref().unwrap().starts_with("condition 1"));
    }

    #[test]
    fn constructed_phi_counts_paths() {
        for kind in [GraphKind::RestrictedYoung(3), GraphKind::StrictPartitions(3), GraphKind::Pascal(2)] {
            let v = kind.base_vertex().unwrap();
            let d = v.degree() + 5;
            let phi = construct_phi(&kind, &v, d).unwrap();
            assert_eq!(phi.coefficient(&v), rat(1));
            assert!(phi.coeffs.keys().all(|c| c.degree() == v.degree()));
            assert!(verify_phi_conditions(&kind, &v, &phi, d).passed(), "{kind}");
            for u in kind.vertices_in_box(d) {
                if u.degree() <= d && u.degree() >= v.degree() {
                    assert_eq!(
                        coefficient_path_count(&kind, &phi, &v, &u).unwrap(),
                        count_paths_dp(&kind, &v, &u).unwrap(),
                        "{kind} {u:?}"
                    );
                }
            }
        }
        let kind = GraphKind::StrictPartitions(2);
        let phi = construct_phi(&kind, &ev([0, 0]), 3).unwrap();
        assert_eq!(coefficient_path_count(&kind, &phi, &ev([0, 0]), &ev([1, 2])).unwrap(), BigInt::from(1));
    }

    #[test]
    fn non_base_vertex() {
        let kind = GraphKind::RestrictedYoung(3);
        let v = ev([0, 2, 3]);
        let phi = construct_phi(&kind, &v, 9).unwrap();
        for u in kind.vertices_of_degree(9) {
            assert_eq!(
                coefficient_path_count(&kind, &phi, &v, &u).unwrap(),
                count_paths_dp(&kind, &v, &u).unwrap(),
                "{u:?}"
            );
        }
    }

    #[test]
    fn degree_bound_is_enforced() {
        let kind = GraphKind::RestrictedYoung(2);
        let phi = construct_phi(&kind, &ev([0, 1]), 3).unwrap();
        assert_eq!(
            coefficient_path_count(&kind, &phi, &ev([0, 1]), &ev([0, 4])),
            Err(Error::DegreeBound { need: 4, have: 3 })
        );
        assert!(!verify_phi_conditions(&kind, &ev([0, 1]), &phi, 5).passed());
    }

    #[test]
    fn reversed_reads_descending_coordinates() {
        // x_1 - x_2 in descending order is x_2 - x_1 in ascending order
        let phi = Reversed(P::var(2, 0) - P::var(2, 1));
        assert!(verify_phi_conditions(&GraphKind::RestrictedYoung(2), &ev([0, 1]), &phi, 6).passed());
    }
}
