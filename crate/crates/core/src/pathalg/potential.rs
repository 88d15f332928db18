use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::One;

use super::{AlgebraElement, Path};
use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::quiver::Quiver;

/// A potential in cyclic-equivalence normal form: every term is a cyclic
/// path of degree at least 2 stored in its least rotation, so no two stored
/// paths are rotations of one another.
#[derive(Clone, PartialEq, Eq)]
pub struct Potential(AlgebraElement);

impl fmt::Debug for Potential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Potential({:?})", self.0)
    }
}

impl fmt::Display for Potential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Merges rotations of the same cyclic path into the canonical rotation.
pub fn canonicalize_potential(x: &AlgebraElement) -> Result<Potential> {
    let q = x.quiver().clone();
    let mut out = AlgebraElement::zero(q.clone(), x.order());
    for (p, c) in x.terms() {
        if !p.is_cyclic() || p.degree() < 2 {
            return Err(Error::NonCyclicTerm(p.display(&q)));
        }
        out.add_term(p.canonical_rotation(&q), c.clone());
    }
    Ok(Potential(out))
}

impl Potential {
    pub fn zero(quiver: Arc<Quiver>, order: usize) -> Self {
        Potential(AlgebraElement::zero(quiver, order))
    }

    /// Potential from `(coefficient, arrow ids in written order)` pairs.
    pub fn from_cycles(quiver: Arc<Quiver>, order: usize, cycles: &[(Rational, &[&str])]) -> Result<Self> {
        let mut x = AlgebraElement::zero(quiver.clone(), order);
        for (c, ids) in cycles {
            x.add_term(Path::from_ids(&quiver, ids)?, c.clone());
        }
        canonicalize_potential(&x)
    }

    pub fn element(&self) -> &AlgebraElement {
        &self.0
    }

    pub fn into_element(self) -> AlgebraElement {
        self.0
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        self.0.quiver()
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn terms(&self) -> &BTreeMap<Path, Rational> {
        self.0.terms()
    }

    pub fn add(&self, other: &Potential) -> Result<Potential> {
        // canonical terms stay canonical under addition
        Ok(Potential(self.0.add(&other.0)?))
    }

    pub fn sub(&self, other: &Potential) -> Result<Potential> {
        Ok(Potential(self.0.sub(&other.0)?))
    }

    pub fn scale(&self, c: &Rational) -> Potential {
        Potential(self.0.scale(c))
    }

    pub fn truncate(&self, order: usize) -> Potential {
        Potential(self.0.truncate(order))
    }

    pub fn lift_order(&self, order: usize) -> Potential {
        Potential(self.0.lift_order(order))
    }

    /// Reduced potentials have no quadratic terms.
    pub fn is_reduced(&self) -> bool {
        self.0.valuation().is_none_or(|v| v >= 3)
    }

    /// Number of terms in each degree.
    pub fn degree_profile(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for p in self.terms().keys() {
            *m.entry(p.degree()).or_insert(0) += 1;
        }
        m
    }
}

/// Cyclic derivative with respect to the dual form of one arrow:
/// `∂_a(a_1 ... a_d) = Σ_{a_k = a} a_{k+1} ... a_d a_1 ... a_{k-1}`.
/// The result is valid modulo `m^{N-1}`.
pub fn cyclic_derivative(s: &Potential, arrow: &str) -> Result<AlgebraElement> {
    let a = s.quiver().arrow_index(arrow)?;
    Ok(cyclic_derivative_at(s, a))
}

pub(crate) fn cyclic_derivative_at(s: &Potential, a: usize) -> AlgebraElement {
    let q = s.quiver().clone();
    let order = s.order().saturating_sub(1);
    let mut out = AlgebraElement::zero(q.clone(), order);
    for (p, c) in s.terms() {
        let arrows = p.arrows();
        for (k, &x) in arrows.iter().enumerate() {
            if x != a {
                continue;
            }
            let rest: Vec<usize> = arrows[k + 1..].iter().chain(&arrows[..k]).copied().collect();
            out.add_term(Path::from_arrows_unchecked(&q, rest), c.clone());
        }
    }
    out
}

/// Rotation of `p` that makes `arrows[0]` the first arrow `a` with
/// `pred(a)`, returned as `(a, rest)`.
pub(crate) fn split_at_first(p: &Path, mut pred: impl FnMut(usize) -> bool) -> Option<(usize, Vec<usize>)> {
    let arrows = p.arrows();
    let k = arrows.iter().position(|&x| pred(x))?;
    let rest = arrows[k + 1..].iter().chain(&arrows[..k]).copied().collect();
    Some((arrows[k], rest))
}

impl Potential {
    pub fn single(quiver: Arc<Quiver>, order: usize, ids: &[&str]) -> Result<Self> {
        Self::from_cycles(quiver, order, &[(Rational::one(), ids)])
    }
}
