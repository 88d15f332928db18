//! Quivers with potentials, Jacobian ideals and truncated Jacobian algebras.
//!
//! The Jacobian ideal is not homogeneous, so the quotient is graded through
//! the `m`-adic filtration: the dimension reported in degree `d` is that of
//! `(m^d + J) / (m^{d+1} + J)`. It is computed by spanning the ideal modulo
//! `m^{N-1}` and counting lowest-degree leading monomials of an echelon
//! basis.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::pathalg::{cyclic_derivative, paths_of_degree, path_counts, AlgebraElement, Path, Potential};
use crate::quiver::Quiver;

/// A quiver with potential, truncated at the potential's order.
///
/// `exact` records that the potential is a polynomial whose terms of degree
/// at least `order` all vanish, so its order may be raised freely. Results
/// of reduction are truncated series and are not exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Qp {
    potential: Potential,
    exact: bool,
}

impl Qp {
    pub fn new(potential: Potential, exact: bool) -> Self {
        Qp { potential, exact }
    }

    /// A QP whose potential is a polynomial.
    pub fn exact(potential: Potential) -> Self {
        Self::new(potential, true)
    }

    pub fn with_zero_potential(quiver: Arc<Quiver>, order: usize) -> Self {
        Self::exact(Potential::zero(quiver, order))
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        self.potential.quiver()
    }

    pub fn potential(&self) -> &Potential {
        &self.potential
    }

    pub fn order(&self) -> usize {
        self.potential.order()
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn is_reduced(&self) -> bool {
        self.potential.is_reduced()
    }

    /// Same QP at another truncation order. Raising the order requires an
    /// exact potential.
    pub fn with_order(&self, order: usize) -> Result<Qp> {
        if order <= self.order() {
            let exact = self.exact && self.potential.element().max_degree().is_none_or(|d| d < order);
            return Ok(Qp::new(self.potential.truncate(order), exact));
        }
        if !self.exact {
            return Err(Error::NotExact(order));
        }
        Ok(Qp::new(self.potential.lift_order(order), true))
    }
}

/// Truncated Jacobian algebra: per-degree standard monomials and dimensions
/// of the associated graded quotient in degrees `0..trusted_below_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedQuotient {
    pub order: usize,
    pub dims: Vec<usize>,
    pub bases: Vec<Vec<Path>>,
    pub trusted_below_degree: usize,
}

impl TruncatedQuotient {
    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn report(&self) -> DimsReport {
        DimsReport { order: self.order, dims: self.dims.clone(), trusted_below_degree: self.trusted_below_degree }
    }
}

/// JSON shape of a dimension report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsReport {
    pub order: usize,
    pub dims: Vec<usize>,
    pub trusted_below_degree: usize,
}

/// One generator `∂_a S` per arrow, in arrow order; each valid modulo
/// `m^{N-1}`.
pub fn jacobian_generators(qp: &Qp) -> Vec<AlgebraElement> {
    let q = qp.quiver();
    q.arrows().iter().map(|a| cyclic_derivative(qp.potential(), &a.id).expect("arrow of the quiver")).collect()
}

pub fn jacobian_dims(qp: &Qp) -> TruncatedQuotient {
    let work = qp.order().saturating_sub(1);
    let gens = jacobian_generators(qp);
    let mut tq = quotient_dims(qp.quiver(), &gens, work);
    tq.order = qp.order();
    tq
}

/// Dimensions of `R<<A>> / (I + m^work)` per degree, where `I` is the
/// two-sided ideal generated by `generators`.
pub fn quotient_dims(q: &Arc<Quiver>, generators: &[AlgebraElement], work: usize) -> TruncatedQuotient {
    let ideal = IdealSpan::generate(q, generators, work);
    let counts = path_counts(q, work);
    let mut dims = Vec::with_capacity(work);
    let mut bases = Vec::with_capacity(work);
    let leads = ideal.leading_monomials();
    for (d, &count) in counts.iter().enumerate() {
        let killed = leads.iter().filter(|p| p.degree() == d).count();
        dims.push(count as usize - killed);
        let basis: Vec<Path> = if killed as u128 == count {
            Vec::new()
        } else {
            paths_of_degree(q, d).into_iter().filter(|p| !leads.contains(p)).collect()
        };
        bases.push(basis);
    }
    TruncatedQuotient { order: work + 1, dims, bases, trusted_below_degree: work }
}

/// Echelon basis of a two-sided ideal modulo `m^work`, keyed by each row's
/// lowest monomial.
struct IdealSpan {
    rows: BTreeMap<Path, BTreeMap<Path, Rational>>,
}

impl IdealSpan {
    fn generate(q: &Arc<Quiver>, generators: &[AlgebraElement], work: usize) -> IdealSpan {
        let mut span = IdealSpan { rows: BTreeMap::new() };
        let mut queue: VecDeque<BTreeMap<Path, Rational>> = generators
            .iter()
            .map(|g| g.truncate(work).terms().clone())
            .filter(|t| !t.is_empty())
            .collect();
        while let Some(v) = queue.pop_front() {
            let Some(row) = span.insert(v) else { continue };
            for a in 0..q.num_arrows() {
                let arrow = Path::arrow(q, a);
                let left = multiply_by_arrow(&row, |p| arrow.concat(p), work);
                if !left.is_empty() {
                    queue.push_back(left);
                }
                let right = multiply_by_arrow(&row, |p| p.concat(&arrow), work);
                if !right.is_empty() {
                    queue.push_back(right);
                }
            }
        }
        span
    }

    /// Reduces `v` and stores it if it is new; returns the stored row.
    fn insert(&mut self, mut v: BTreeMap<Path, Rational>) -> Option<BTreeMap<Path, Rational>> {
        loop {
            let (lead, c) = match v.iter().next() {
                Some((p, c)) => (p.clone(), c.clone()),
                None => return None,
            };
            match self.rows.get(&lead) {
                Some(row) => {
                    for (p, r) in row {
                        let e = v.entry(p.clone()).or_insert_with(Rational::zero);
                        *e -= &c * r;
                        if e.is_zero() {
                            v.remove(p);
                        }
                    }
                }
                None => {
                    let inv = Rational::one() / c;
                    for x in v.values_mut() {
                        *x *= &inv;
                    }
                    self.rows.insert(lead, v.clone());
                    return Some(v);
                }
            }
        }
    }

    fn leading_monomials(&self) -> BTreeSet<Path> {
        self.rows.keys().cloned().collect()
    }
}

fn multiply_by_arrow(
    row: &BTreeMap<Path, Rational>,
    op: impl Fn(&Path) -> Option<Path>,
    work: usize,
) -> BTreeMap<Path, Rational> {
    row.iter()
        .filter(|(p, _)| p.degree() + 1 < work)
        .filter_map(|(p, c)| op(p).map(|np| (np, c.clone())))
        .collect()
}

/// A QP is trivial when splitting leaves no reduced arrows.
pub fn is_trivial_qp(qp: &Qp) -> bool {
    let split = crate::reduction::split(qp);
    split.reduced.quiver().num_arrows() == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, RatMatrix};
    use crate::pathalg::canonicalize_potential;
    use crate::pathalg::Substitution;
    use proptest::prelude::*;

    fn two_cycle() -> Arc<Quiver> {
        Arc::new(Quiver::build(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap())
    }

    fn triangle() -> Arc<Quiver> {
        Arc::new(Quiver::build(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")]).unwrap())
    }

    /// Dense oracle: rref over every sandwich `p·g·q` of degree below
    /// `work`, with columns ordered by ascending path order so pivots are
    /// lowest monomials.
    fn brute_force_dims(q: &Arc<Quiver>, gens: &[AlgebraElement], work: usize) -> Vec<usize> {
        let all: Vec<Path> = (0..work).flat_map(|d| paths_of_degree(q, d)).collect();
        let col: BTreeMap<&Path, usize> = all.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut rows = Vec::new();
        for g in gens {
            let g = g.truncate(work);
            for p in &all {
                for r in &all {
                    let mut row = vec![Rational::zero(); all.len()];
                    let mut any = false;
                    for (m, c) in g.terms() {
                        if p.degree() + m.degree() + r.degree() >= work {
                            continue;
                        }
                        if let Some(pm) = p.concat(m).and_then(|pm| pm.concat(r)) {
                            row[col[&pm]] += c;
                            any = true;
                        }
                    }
                    if any {
                        rows.push(row);
                    }
                }
            }
        }
        let pivots = if rows.is_empty() {
            Vec::new()
        } else {
            RatMatrix::from_rows(rows).unwrap().rref().pivots
        };
        (0..work)
            .map(|d| {
                let total = all.iter().filter(|p| p.degree() == d).count();
                total - pivots.iter().filter(|&&i| all[i].degree() == d).count()
            })
            .collect()
    }

    #[test]
    fn trivial_two_cycle_generators_and_dims() {
        let q = two_cycle();
        let qp = Qp::exact(Potential::single(q.clone(), 6, &["b", "a"]).unwrap());
        let gens = jacobian_generators(&qp);
        assert_eq!(gens[0], AlgebraElement::path(q.clone(), 5, &["b"]).unwrap());
        assert_eq!(gens[1], AlgebraElement::path(q.clone(), 5, &["a"]).unwrap());
        let tq = jacobian_dims(&qp);
        assert_eq!(tq.dims, vec![2, 0, 0, 0, 0]);
        assert_eq!(tq.total(), 2);
        assert_eq!(tq.trusted_below_degree, 5);
        assert!(is_trivial_qp(&qp));
    }

    #[test]
    fn zero_potential_generators_vanish() {
        let qp = Qp::with_zero_potential(triangle(), 6);
        assert!(jacobian_generators(&qp).iter().all(AlgebraElement::is_zero));
    }

    #[test]
    fn free_path_algebra_of_a2() {
        let q = Arc::new(Quiver::build(&["1", "2"], &[("a", "1", "2")]).unwrap());
        let tq = jacobian_dims(&Qp::with_zero_potential(q, 6));
        assert_eq!(tq.dims, vec![2, 1, 0, 0, 0]);
        assert_eq!(tq.bases[1].len(), 1);
        assert!(!is_trivial_qp(&Qp::with_zero_potential(
            Arc::new(Quiver::build(&["1", "2"], &[("a", "1", "2")]).unwrap()),
            6
        )));
    }

    #[test]
    fn triangle_generators_and_dims() {
        let q = triangle();
        let qp = Qp::exact(Potential::single(q.clone(), 6, &["c", "b", "a"]).unwrap());
        let gens = jacobian_generators(&qp);
        let expect = |ids: &[&str]| AlgebraElement::path(q.clone(), 5, ids).unwrap();
        assert_eq!(gens, vec![expect(&["c", "b"]), expect(&["a", "c"]), expect(&["b", "a"])]);
        let tq = jacobian_dims(&qp);
        assert_eq!(brute_force_dims(&q, &gens, 5), vec![3, 3, 0, 0, 0]);
        assert_eq!(tq.dims, vec![3, 3, 0, 0, 0]);
    }

    #[test]
    fn lifting_requires_exactness() {
        let qp = Qp::new(Potential::zero(triangle(), 5), false);
        assert_eq!(qp.with_order(8), Err(Error::NotExact(8)));
        assert_eq!(qp.with_order(4).unwrap().order(), 4);
        let ex = Qp::exact(Potential::single(triangle(), 5, &["c", "b", "a"]).unwrap());
        assert_eq!(ex.with_order(9).unwrap().order(), 9);
        assert!(ex.with_order(3).unwrap().potential().is_zero());
        assert!(!ex.with_order(3).unwrap().is_exact());
    }

    /// Quiver with two 3-cycles through a shared arrow and a 4-cycle.
    fn rich_quiver() -> Arc<Quiver> {
        Arc::new(
            Quiver::build(
                &["1", "2", "3", "4"],
                &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1"), ("d", "3", "4"), ("e", "4", "1"), ("f", "1", "2")],
            )
            .unwrap(),
        )
    }

    fn rich_potential() -> impl Strategy<Value = Potential> {
        let q = rich_quiver();
        let cycles = crate::pathalg::cyclic_classes(&q, 6);
        proptest::collection::vec((0..cycles.len(), -4i64..5), 1..5).prop_map(move |ts| {
            let x = AlgebraElement::from_terms(q.clone(), 7, ts.into_iter().map(|(i, c)| (cycles[i].clone(), rat(c))));
            canonicalize_potential(&x).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn closure_matches_dense_oracle(s in rich_potential()) {
            let qp = Qp::exact(s);
            let gens = jacobian_generators(&qp);
            prop_assert_eq!(jacobian_dims(&qp).dims, brute_force_dims(qp.quiver(), &gens, 6));
        }

        #[test]
        fn dims_invariant_under_invertible_substitution(s in rich_potential(), c in 1i64..4, m in -2i64..3, u in -2i64..3) {
            let q = s.quiver().clone();
            let a = q.arrow_index("a").unwrap();
            let f = q.arrow_index("f").unwrap();
            // a ↦ c·a + m·f + u·(c·e·d·b·...) stays in e_2 m e_1
            let mut img = AlgebraElement::monomial(q.clone(), 7, Path::arrow(&q, a), rat(c));
            img.add_term(Path::arrow(&q, f), rat(m));
            img.add_term(Path::from_ids(&q, &["a", "e", "d", "b", "a"]).unwrap(), rat(u));
            let phi = Substitution::new(q.clone(), 7, [(a, img)]).unwrap();
            prop_assert!(phi.is_invertible());
            let before = jacobian_dims(&Qp::exact(s.clone()));
            let after = jacobian_dims(&Qp::new(phi.apply_potential(&s).unwrap(), false));
            prop_assert_eq!(before.dims, after.dims);
        }

        #[test]
        fn more_generators_shrink_the_quotient(s in rich_potential(), extra in 0usize..6) {
            let qp = Qp::exact(s);
            let mut gens = jacobian_generators(&qp);
            let base = quotient_dims(qp.quiver(), &gens, 6);
            gens.push(AlgebraElement::monomial(qp.quiver().clone(), 6, Path::arrow(qp.quiver(), extra), rat(1)));
            let more = quotient_dims(qp.quiver(), &gens, 6);
            for (x, y) in more.dims.iter().zip(&base.dims) {
                prop_assert!(x <= y);
            }
        }
    }
}
