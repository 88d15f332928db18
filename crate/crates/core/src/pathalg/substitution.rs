use std::fmt;
use std::sync::Arc;

use num_traits::One;

use super::{canonicalize_potential, AlgebraElement, Path, Potential};
use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, Rational};
use crate::quiver::Quiver;

/// A continuous algebra endomorphism fixing the vertex idempotents,
/// determined by the images of the arrows. The image of `a` lives in
/// `e_{h(a)} m e_{t(a)}`.
#[derive(Clone, PartialEq, Eq)]
pub struct Substitution {
    quiver: Arc<Quiver>,
    order: usize,
    images: Vec<AlgebraElement>,
}

impl fmt::Debug for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (i, img) in self.images.iter().enumerate() {
            m.entry(&self.quiver.arrow(i).id, &img.to_string());
        }
        m.finish()
    }
}

/// Whether `img` is exactly the arrow `a` with coefficient 1.
fn is_arrow(img: &AlgebraElement, a: usize) -> bool {
    img.len() == 1
        && img.terms().iter().next().is_some_and(|(p, c)| p.degree() == 1 && p.arrows()[0] == a && c.is_one())
}

impl Substitution {
    pub fn identity(quiver: Arc<Quiver>, order: usize) -> Self {
        let images = (0..quiver.num_arrows())
            .map(|i| AlgebraElement::monomial(quiver.clone(), order, Path::arrow(&quiver, i), Rational::one()))
            .collect();
        Substitution { quiver, order, images }
    }

    /// Identity except on the listed arrows (by index).
    pub fn new(
        quiver: Arc<Quiver>,
        order: usize,
        assignments: impl IntoIterator<Item = (usize, AlgebraElement)>,
    ) -> Result<Self> {
        let mut s = Self::identity(quiver.clone(), order);
        for (a, img) in assignments {
            if !Arc::ptr_eq(img.quiver(), &quiver) && **img.quiver() != *quiver {
                return Err(Error::QuiverMismatch);
            }
            let arrow = quiver.arrow(a);
            for p in img.terms().keys() {
                if p.degree() == 0 || p.tail() != arrow.tail || p.head() != arrow.head {
                    return Err(Error::InvalidSubstitution(format!(
                        "image of {} contains {}, which is not a path of positive length {} -> {}",
                        arrow.id,
                        p.display(&quiver),
                        quiver.vertices()[arrow.tail],
                        quiver.vertices()[arrow.head]
                    )));
                }
            }
            s.images[a] = img.truncate(order);
        }
        s.order = s.images.iter().map(AlgebraElement::order).min().unwrap_or(order).min(order);
        for img in &mut s.images {
            *img = img.truncate(s.order);
        }
        Ok(s)
    }

    pub fn from_ids(quiver: Arc<Quiver>, order: usize, assignments: &[(&str, AlgebraElement)]) -> Result<Self> {
        let pairs = assignments
            .iter()
            .map(|(id, img)| Ok((quiver.arrow_index(id)?, img.clone())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(quiver, order, pairs)
    }

    /// A substitution that only mixes arrows linearly: `a_i ↦ Σ_j m[j][i] a_j`.
    pub fn linear(quiver: Arc<Quiver>, order: usize, m: &RatMatrix) -> Result<Self> {
        let n = quiver.num_arrows();
        if m.rows() != n || m.cols() != n {
            return Err(Error::ShapeMismatch(format!("linear substitution needs a {n}x{n} matrix")));
        }
        let assignments = (0..n).map(|i| {
            let terms = (0..n).filter(|&j| !m[(j, i)].is_zero()).map(|j| (Path::arrow(&quiver, j), m[(j, i)].clone()));
            (i, AlgebraElement::from_terms(quiver.clone(), order, terms))
        });
        Self::new(quiver.clone(), order, assignments.collect::<Vec<_>>())
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn image(&self, arrow: usize) -> &AlgebraElement {
        &self.images[arrow]
    }

    pub fn images(&self) -> &[AlgebraElement] {
        &self.images
    }

    /// `φ(a_1 ... a_d) = φ(a_1) ... φ(a_d)`, extended linearly; idempotents
    /// are fixed.
    pub fn apply(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        if !Arc::ptr_eq(x.quiver(), &self.quiver) && **x.quiver() != *self.quiver {
            return Err(Error::QuiverMismatch);
        }
        Ok(self.apply_unchecked(x))
    }

    pub(crate) fn apply_unchecked(&self, x: &AlgebraElement) -> AlgebraElement {
        let order = x.order().min(self.order);
        let fixed: Vec<bool> = self.images.iter().enumerate().map(|(i, img)| is_arrow(img, i)).collect();
        let mut out = AlgebraElement::zero(self.quiver.clone(), order);
        for (p, c) in x.terms() {
            let d = p.degree();
            if d >= order {
                break;
            }
            if p.arrows().iter().all(|&a| fixed[a]) {
                out.add_term(p.clone(), c.clone());
                continue;
            }
            // every remaining factor adds at least one degree
            let arrows = p.arrows();
            let budget = order - (d - 1);
            let mut acc = self.images[arrows[0]].filter(|q| q.degree() < budget);
            acc.set_order(budget);
            for (i, &a) in arrows.iter().enumerate().skip(1) {
                if acc.is_zero() {
                    break;
                }
                acc = acc.mul_unchecked(&self.images[a], order - (d - 1 - i));
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// Image of a potential, re-canonicalized.
    pub fn apply_potential(&self, s: &Potential) -> Result<Potential> {
        canonicalize_potential(&self.apply(s.element())?)
    }

    /// `phi ∘ psi`, i.e. `a ↦ phi(psi(a))`.
    pub fn compose(phi: &Substitution, psi: &Substitution) -> Result<Substitution> {
        if *phi.quiver != *psi.quiver {
            return Err(Error::QuiverMismatch);
        }
        let order = phi.order.min(psi.order);
        let images = psi.images.iter().map(|img| phi.apply_unchecked(img).truncate(order)).collect();
        Ok(Substitution { quiver: phi.quiver.clone(), order, images })
    }

    /// Matrix of the degree-one part: entry `(j, i)` is the coefficient of
    /// arrow `j` in the image of arrow `i`.
    pub fn linear_part(&self) -> RatMatrix {
        let n = self.quiver.num_arrows();
        let mut m = RatMatrix::zeros(n, n);
        for (i, img) in self.images.iter().enumerate() {
            for (p, c) in img.terms() {
                if p.degree() == 1 {
                    m[(p.arrows()[0], i)] = c.clone();
                }
            }
        }
        m
    }

    /// Degree-one part equals the identity.
    pub fn is_unitriangular(&self) -> bool {
        self.linear_part() == RatMatrix::identity(self.quiver.num_arrows())
    }

    pub fn is_invertible(&self) -> bool {
        self.linear_part().is_invertible()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.quiver.clone(), self.order)
    }

    /// Inverse modulo `m^order`, or `None` when the degree-one part is
    /// singular. The linear part is inverted exactly; the unitriangular
    /// remainder by fixed-point iteration.
    pub fn inverse(&self) -> Option<Substitution> {
        let linv = self.linear_part().invert().expect("square")?;
        let lin = Substitution::linear(self.quiver.clone(), self.order, &linv).expect("blocks respect endpoints");
        let chi = Substitution::compose(self, &lin).expect("same quiver");
        let rho = chi.unitriangular_inverse();
        Some(Substitution::compose(&lin, &rho).expect("same quiver"))
    }

    /// For unitriangular `self = id + h`, solves `self(y_a) = a` through
    /// `y ← a - h(y)`; each round fixes one more degree.
    fn unitriangular_inverse(&self) -> Substitution {
        debug_assert!(self.is_unitriangular());
        let id = Substitution::identity(self.quiver.clone(), self.order);
        let mut y = id.images.clone();
        for _ in 0..self.order {
            let next: Vec<AlgebraElement> = y
                .iter()
                .zip(&id.images)
                .map(|(yi, a)| {
                    let image = self.apply_unchecked(yi);
                    let h = image.sub(yi).expect("same quiver");
                    a.sub(&h).expect("same quiver")
                })
                .collect();
            if next == y {
                break;
            }
            y = next;
        }
        Substitution { quiver: self.quiver.clone(), order: self.order, images: y }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use proptest::prelude::*;

    fn el(q: &Arc<Quiver>, order: usize, ids: &[&str]) -> AlgebraElement {
        AlgebraElement::path(q.clone(), order, ids).unwrap()
    }

    /// `a, c: 1 -> 2` and `b: 2 -> 1`.
    fn kronecker_with_return() -> Arc<Quiver> {
        Arc::new(Quiver::build(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1"), ("c", "1", "2")]).unwrap())
    }

    #[test]
    fn identity_fixes_everything() {
        let q = kronecker_with_return();
        let id = Substitution::identity(q.clone(), 8);
        let x = el(&q, 8, &["b", "a"]).add(&el(&q, 8, &["c", "b", "c"])).unwrap();
        assert_eq!(id.apply(&x).unwrap(), x);
        assert!(id.is_unitriangular());
        assert!(id.is_identity());
    }

    #[test]
    fn substitution_into_two_cycle() {
        // a ↦ a + c·b·c sends b·a to b·a + b·c·b·c
        let q = kronecker_with_return();
        let phi = Substitution::from_ids(q.clone(), 8, &[("a", el(&q, 8, &["a"]).add(&el(&q, 8, &["c", "b", "c"])).unwrap())])
            .unwrap();
        assert!(phi.is_unitriangular());
        let s = Potential::single(q.clone(), 8, &["b", "a"]).unwrap();
        let expected = Potential::from_cycles(
            q.clone(),
            8,
            &[(rat(1), &["b", "a"][..]), (rat(1), &["b", "c", "b", "c"][..])],
        )
        .unwrap();
        assert_eq!(phi.apply_potential(&s).unwrap(), expected);
    }

    #[test]
    fn scaling_substitution() {
        let q = kronecker_with_return();
        let phi = Substitution::from_ids(q.clone(), 8, &[("a", el(&q, 8, &["a"]).scale(&rat(2)))]).unwrap();
        assert_eq!(phi.apply(&el(&q, 8, &["a"])).unwrap(), el(&q, 8, &["a"]).scale(&rat(2)));
        assert!(!phi.is_unitriangular());
        assert!(phi.is_invertible());
    }

    #[test]
    fn images_must_respect_endpoints() {
        let q = kronecker_with_return();
        let bad = Substitution::from_ids(q.clone(), 8, &[("a", el(&q, 8, &["b"]))]);
        assert!(matches!(bad, Err(Error::InvalidSubstitution(_))));
        let idem = AlgebraElement::idempotent(q.clone(), 8, "1").unwrap();
        assert!(Substitution::from_ids(q, 8, &[("a", idem)]).is_err());
    }

    #[test]
    fn composing_opposite_shifts_leaves_higher_residue() {
        // (a ↦ a + cba) ∘ (a ↦ a - cba) sends a to a - c·b·c·b·a
        let q = kronecker_with_return();
        let u = el(&q, 8, &["c", "b", "a"]);
        let a = el(&q, 8, &["a"]);
        let phi = Substitution::from_ids(q.clone(), 8, &[("a", a.add(&u).unwrap())]).unwrap();
        let psi = Substitution::from_ids(q.clone(), 8, &[("a", a.sub(&u).unwrap())]).unwrap();
        let comp = Substitution::compose(&phi, &psi).unwrap();
        let expected = a.sub(&el(&q, 8, &["c", "b", "c", "b", "a"])).unwrap();
        assert_eq!(comp.image(0), &expected);
        let low = Substitution::compose(&phi.truncated(5), &psi.truncated(5)).unwrap();
        assert!(low.is_identity());
        let id = Substitution::identity(q, 8);
        assert_eq!(Substitution::compose(&id, &phi).unwrap(), phi);
    }

    impl Substitution {
        fn truncated(&self, order: usize) -> Substitution {
            Substitution {
                quiver: self.quiver.clone(),
                order,
                images: self.images.iter().map(|i| i.truncate(order)).collect(),
            }
        }
    }

    fn two_triangles() -> Arc<Quiver> {
        Arc::new(
            Quiver::build(
                &["1", "2", "3", "4"],
                &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1"), ("d", "3", "4"), ("e", "4", "2"), ("f", "1", "2")],
            )
            .unwrap(),
        )
    }

    /// Random substitution: each arrow's image is a random combination of
    /// parallel arrows (invertible with `scale`) plus random longer paths.
    fn substitution(order: usize, unitriangular: bool) -> impl Strategy<Value = Substitution> {
        let q = two_triangles();
        let n = q.num_arrows();
        let paths: Vec<Vec<Path>> = (0..n)
            .map(|i| {
                let a = q.arrow(i);
                (2..4)
                    .flat_map(|d| crate::pathalg::paths_of_degree(&q, d))
                    .filter(|p| p.head() == a.head && p.tail() == a.tail)
                    .collect()
            })
            .collect();
        proptest::collection::vec((1i64..4, proptest::collection::vec((0usize..100, -3i64..4), 0..3), -2i64..3), n)
            .prop_map(move |spec| {
                let assignments: Vec<(usize, AlgebraElement)> = spec
                    .into_iter()
                    .enumerate()
                    .map(|(i, (scale, extra, mix))| {
                        let lead = if unitriangular { 1 } else { scale };
                        let mut img = AlgebraElement::monomial(q.clone(), order, Path::arrow(&q, i), rat(lead));
                        // mix a with the parallel arrow f (both 1 -> 2)
                        if !unitriangular && q.arrow(i).id == "a" {
                            img.add_term(Path::arrow(&q, q.arrow_index("f").unwrap()), rat(mix));
                        }
                        for (k, c) in extra {
                            if !paths[i].is_empty() {
                                img.add_term(paths[i][k % paths[i].len()].clone(), rat(c));
                            }
                        }
                        (i, img)
                    })
                    .collect();
                Substitution::new(q.clone(), order, assignments).unwrap()
            })
    }

    fn element(order: usize) -> impl Strategy<Value = AlgebraElement> {
        let q = two_triangles();
        let paths: Vec<Path> = (0..order).flat_map(|d| crate::pathalg::paths_of_degree(&q, d)).collect();
        proptest::collection::vec((0..paths.len(), -3i64..4), 1..5).prop_map(move |ts| {
            AlgebraElement::from_terms(q.clone(), order, ts.into_iter().map(|(i, c)| (paths[i].clone(), rat(c))))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn unitriangular_preserves_valuation(phi in substitution(7, true), x in element(7)) {
            prop_assert!(phi.is_unitriangular());
            prop_assert_eq!(phi.apply(&x).unwrap().valuation(), x.valuation());
        }

        #[test]
        fn inverse_composes_to_identity(phi in substitution(7, false)) {
            let inv = phi.inverse().unwrap();
            prop_assert!(Substitution::compose(&phi, &inv).unwrap().is_identity());
            prop_assert!(Substitution::compose(&inv, &phi).unwrap().is_identity());
        }

        #[test]
        fn respects_cyclic_equivalence(phi in substitution(8, false), r in 0usize..6) {
            let q = phi.quiver().clone();
            for cycle in crate::pathalg::cyclic_classes(&q, 6) {
                let p = AlgebraElement::monomial(q.clone(), 8, cycle.clone(), rat(1));
                let rotated = AlgebraElement::monomial(q.clone(), 8, cycle.rotate(&q, r % cycle.degree()), rat(1));
                let lhs = canonicalize_potential(&phi.apply(&p).unwrap()).unwrap();
                let rhs = canonicalize_potential(&phi.apply(&rotated).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
