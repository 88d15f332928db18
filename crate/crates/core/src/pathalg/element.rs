use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::Path;
use crate::error::{Error, Result};
use crate::linalg::{format_rational, Rational};
use crate::quiver::Quiver;

/// A truncated element of the complete path algebra, known modulo `m^order`.
///
/// Every stored path has degree below `order`; zero coefficients are never
/// stored. Binary operations return an element of order `min(N_x, N_y)`.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    quiver: Arc<Quiver>,
    order: usize,
    terms: BTreeMap<Path, Rational>,
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (mod m^{})", self.order)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (p, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            if n > 0 {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            } else if neg {
                write!(f, "-")?;
            }
            let abs = if neg { -c.clone() } else { c.clone() };
            if !abs.is_one() {
                write!(f, "{} ", format_rational(&abs))?;
            }
            write!(f, "{}", p.display(&self.quiver))?;
        }
        Ok(())
    }
}

impl AlgebraElement {
    pub fn zero(quiver: Arc<Quiver>, order: usize) -> Self {
        AlgebraElement { quiver, order, terms: BTreeMap::new() }
    }

    /// Sum of all vertex idempotents.
    pub fn one(quiver: Arc<Quiver>, order: usize) -> Self {
        let terms = (0..quiver.num_vertices()).map(|v| (Path::vertex(v), Rational::one()));
        Self::from_terms(quiver, order, terms)
    }

    pub fn from_terms(quiver: Arc<Quiver>, order: usize, terms: impl IntoIterator<Item = (Path, Rational)>) -> Self {
        let mut x = Self::zero(quiver, order);
        for (p, c) in terms {
            x.add_term(p, c);
        }
        x
    }

    pub fn monomial(quiver: Arc<Quiver>, order: usize, path: Path, coeff: Rational) -> Self {
        Self::from_terms(quiver, order, [(path, coeff)])
    }

    /// The path with the given arrow ids (written order) and coefficient 1.
    pub fn path(quiver: Arc<Quiver>, order: usize, ids: &[&str]) -> Result<Self> {
        let p = Path::from_ids(&quiver, ids)?;
        Ok(Self::monomial(quiver, order, p, Rational::one()))
    }

    pub fn idempotent(quiver: Arc<Quiver>, order: usize, vertex: &str) -> Result<Self> {
        let v = quiver.vertex_index(vertex)?;
        Ok(Self::monomial(quiver, order, Path::vertex(v), Rational::one()))
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<Path, Rational> {
        &self.terms
    }

    pub fn coeff(&self, p: &Path) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Least degree of a stored term.
    pub fn valuation(&self) -> Option<usize> {
        self.terms.keys().next().map(Path::degree)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Path::degree)
    }

    pub(crate) fn same_quiver(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.quiver, &other.quiver) || *self.quiver == *other.quiver
    }

    pub(crate) fn check_quiver(&self, other: &Self) -> Result<()> {
        if self.same_quiver(other) {
            Ok(())
        } else {
            Err(Error::QuiverMismatch)
        }
    }

    /// Adds `c · p`, dropping it if `p` is beyond the truncation order.
    pub fn add_term(&mut self, p: Path, c: Rational) {
        if p.degree() >= self.order || c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// `self += c · other`, keeping `self`'s order lowered to `other`'s.
    pub(crate) fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if other.order < self.order {
            self.truncate_in_place(other.order);
        }
        if c.is_zero() {
            return;
        }
        for (p, d) in &other.terms {
            self.add_term(p.clone(), d * c);
        }
    }

    pub(crate) fn set_order(&mut self, order: usize) {
        self.order = order;
    }

    fn truncate_in_place(&mut self, order: usize) {
        self.order = order;
        self.terms.retain(|p, _| p.degree() < order);
    }

    /// Reduces the truncation order. Raising it is not allowed here, use
    /// [`AlgebraElement::lift_order`].
    pub fn truncate(&self, order: usize) -> Self {
        let mut x = self.clone();
        if order < x.order {
            x.truncate_in_place(order);
        }
        x
    }

    /// Declares the element exact up to `order`. Only meaningful for
    /// polynomials: the missing tail is taken to be zero.
    pub fn lift_order(&self, order: usize) -> Self {
        let mut x = self.clone();
        if order < x.order {
            x.truncate_in_place(order);
        } else {
            x.order = order;
        }
        x
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_quiver(other)?;
        let mut x = self.clone();
        x.add_scaled(other, &Rational::one());
        Ok(x)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_quiver(other)?;
        let mut x = self.clone();
        x.add_scaled(other, &-Rational::one());
        Ok(x)
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.quiver.clone(), self.order);
        }
        AlgebraElement {
            quiver: self.quiver.clone(),
            order: self.order,
            terms: self.terms.iter().map(|(p, d)| (p.clone(), d * c)).collect(),
        }
    }

    /// Concatenation product, truncated to `min(N_x, N_y)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_quiver(other)?;
        Ok(self.mul_unchecked(other, self.order.min(other.order)))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self, order: usize) -> Self {
        let mut out = Self::zero(self.quiver.clone(), order);
        for (p, c) in &self.terms {
            if p.degree() >= order {
                break;
            }
            for (q, d) in &other.terms {
                if p.degree() + q.degree() >= order {
                    break;
                }
                if let Some(pq) = p.concat(q) {
                    out.add_term(pq, c * d);
                }
            }
        }
        out
    }

    /// Terms of exactly degree `d`.
    pub fn homogeneous(&self, d: usize) -> Self {
        self.filter(|p| p.degree() == d)
    }

    pub fn filter(&self, mut keep: impl FnMut(&Path) -> bool) -> Self {
        AlgebraElement {
            quiver: self.quiver.clone(),
            order: self.order,
            terms: self.terms.iter().filter(|(p, _)| keep(p)).map(|(p, c)| (p.clone(), c.clone())).collect(),
        }
    }

    /// Equality of the truncated representations at the common order.
    pub fn eq_mod(&self, other: &Self) -> bool {
        let n = self.order.min(other.order);
        self.same_quiver(other) && self.truncate(n).terms == other.truncate(n).terms
    }

    /// Re-expresses the element over another quiver with the same vertices,
    /// mapping arrow indices through `arrow_map`.
    pub(crate) fn reindex(&self, quiver: Arc<Quiver>, arrow_map: &[Option<usize>]) -> Result<Self> {
        let mut out = Self::zero(quiver.clone(), self.order);
        for (p, c) in &self.terms {
            let np = if p.degree() == 0 {
                p.clone()
            } else {
                let arrows = p
                    .arrows()
                    .iter()
                    .map(|&a| arrow_map[a].ok_or_else(|| Error::UnknownArrow(self.quiver.arrow(a).id.clone())))
                    .collect::<Result<Vec<_>>>()?;
                Path::from_arrows_unchecked(&quiver, arrows)
            };
            out.add_term(np, c.clone());
        }
        Ok(out)
    }
}
