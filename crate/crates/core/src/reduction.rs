//! Splitting a QP into a trivial part and a reduced part.
//!
//! Stage 1 changes arrow bases linearly, one vertex pair at a time, so that
//! the quadratic part of the potential becomes `Σ b_k a_k` over matched
//! pairs. Stage 2 removes every higher-degree term that still contains a
//! matched arrow: a term is rotated to start at its first matched arrow,
//! `t · u`, and the partner `s` of `t` is replaced by `s - c·u`. This kills
//! the term against the quadratic pair and only creates terms of larger
//! degree, so at most `N` passes are needed modulo `m^N`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::One;

use crate::jacobian::Qp;
use crate::linalg::{RatMatrix, Rational};
use crate::pathalg::split_at_first;
use crate::pathalg::{canonicalize_potential, AlgebraElement, Path, Potential, Substitution};
use crate::quiver::Quiver;

/// Outcome of [`split`]. Arrow indices refer to the input quiver.
#[derive(Debug, Clone)]
pub struct SplitResult {
    /// Matched pairs `(a_k, b_k)`; the trivial potential is `Σ b_k a_k`.
    pub trivial_pairs: Vec<(usize, usize)>,
    /// Indices of the unmatched arrows, which span the reduced part.
    pub reduced_arrows: Vec<usize>,
    /// The reduced QP on the subquiver of unmatched arrows.
    pub reduced: Qp,
    /// Right-equivalence sending the input potential to the direct sum,
    /// kept as the sequence of substitutions applied in order: the linear
    /// basis change first, then one step per stage-2 pass.
    pub steps: Vec<Substitution>,
    /// Number of stage-2 passes applied.
    pub passes: usize,
}

impl SplitResult {
    pub fn quiver(&self) -> &Arc<Quiver> {
        self.steps[0].quiver()
    }

    /// Degree-one part of the witness.
    pub fn basis_change(&self) -> &Substitution {
        &self.steps[0]
    }

    /// The witness as one substitution, `ψ_n ∘ ... ∘ ψ_1 ∘ φ`. Composing is
    /// costly at high orders, so it is done on demand.
    pub fn witness(&self) -> Substitution {
        let mut w = self.steps[0].clone();
        for step in &self.steps[1..] {
            w = Substitution::compose(step, &w).expect("same quiver");
        }
        w
    }

    /// `Σ b_k a_k`, over the input quiver.
    pub fn trivial_potential(&self) -> Potential {
        let q = self.quiver().clone();
        let order = self.reduced.order();
        let mut x = AlgebraElement::zero(q.clone(), order);
        for &(a, b) in &self.trivial_pairs {
            let p = Path::from_arrows(&q, vec![b, a]).expect("matched arrows form a 2-cycle");
            x.add_term(p, Rational::one());
        }
        canonicalize_potential(&x).expect("2-cycles are cyclic")
    }

    /// The reduced potential re-expressed over the input quiver.
    pub fn embedded_reduced_potential(&self) -> Potential {
        let q = self.quiver().clone();
        let sub = self.reduced.quiver();
        let map: Vec<Option<usize>> =
            sub.arrows().iter().map(|a| Some(q.arrow_index(&a.id).expect("subquiver arrow"))).collect();
        let x = self.reduced.potential().element().reindex(q, &map).expect("total map");
        canonicalize_potential(&x).expect("cyclic terms stay cyclic")
    }

    /// `S_triv + S_red` over the input quiver.
    pub fn direct_sum_potential(&self) -> Potential {
        self.trivial_potential().add(&self.embedded_reduced_potential()).expect("same quiver")
    }

    pub fn trivial_pair_ids(&self) -> Vec<(String, String)> {
        let q = self.quiver();
        self.trivial_pairs.iter().map(|&(a, b)| (q.arrow(a).id.clone(), q.arrow(b).id.clone())).collect()
    }
}

/// Splits `qp` into trivial and reduced parts modulo `m^N`.
pub fn split(qp: &Qp) -> SplitResult {
    let q = qp.quiver().clone();
    let order = qp.order();
    let (basis_change, pairs) = match_quadratic_part(qp.potential());
    let mut current = basis_change.apply_potential(qp.potential()).expect("same quiver");
    let mut steps = vec![basis_change];

    let mut partner = vec![None; q.num_arrows()];
    for &(a, b) in &pairs {
        partner[a] = Some(b);
        partner[b] = Some(a);
    }

    let mut passes = 0;
    while passes < order {
        let mut corrections: BTreeMap<usize, AlgebraElement> = BTreeMap::new();
        for (p, c) in current.terms() {
            if p.degree() < 3 {
                continue;
            }
            let Some((lead, rest)) = split_at_first(p, |x| partner[x].is_some()) else { continue };
            let s = partner[lead].expect("matched");
            let entry = corrections
                .entry(s)
                .or_insert_with(|| AlgebraElement::monomial(q.clone(), order, Path::arrow(&q, s), Rational::one()));
            entry.add_term(Path::from_arrows(&q, rest).expect("rotation of a cycle"), -c.clone());
        }
        if corrections.is_empty() {
            break;
        }
        let step = Substitution::new(q.clone(), order, corrections).expect("corrections respect endpoints");
        current = step.apply_potential(&current).expect("same quiver");
        steps.push(step);
        passes += 1;
    }

    let reduced_arrows: Vec<usize> = (0..q.num_arrows()).filter(|&x| partner[x].is_none()).collect();
    let sub = Arc::new(q.subquiver(&reduced_arrows));
    let mut map = vec![None; q.num_arrows()];
    for (new, &old) in reduced_arrows.iter().enumerate() {
        map[old] = Some(sub.arrow_index(&q.arrow(old).id).unwrap_or(new));
    }
    let remainder = current.element().filter(|p| p.arrows().iter().all(|&x| partner[x].is_none()));
    let reduced_potential =
        canonicalize_potential(&remainder.reindex(sub, &map).expect("only reduced arrows remain")).expect("cyclic");
    let reduced = Qp::new(reduced_potential, qp.is_exact() && passes == 0);

    SplitResult { trivial_pairs: pairs, reduced_arrows, reduced, steps, passes }
}

/// Stage 1: per vertex pair `{i, j}` with arrows `x: i -> j` and
/// `y: j -> i`, the quadratic part is `y^T C x`. Row-reduce `E C = R`, then
/// clear non-pivot columns with `F`, so `E C F` has a single 1 per pivot.
/// Substituting `x ↦ F x`, `y ↦ E^T y` makes the quadratic part
/// `Σ_k y_k x_{pivot(k)}`.
fn match_quadratic_part(s: &Potential) -> (Substitution, Vec<(usize, usize)>) {
    let q = s.quiver().clone();
    let n = q.num_arrows();
    let mut m = RatMatrix::identity(n);
    let mut pairs = Vec::new();
    let quadratic = s.element().homogeneous(2);
    for i in 0..q.num_vertices() {
        for j in i + 1..q.num_vertices() {
            let xs: Vec<usize> = (0..n).filter(|&a| q.arrow(a).tail == i && q.arrow(a).head == j).collect();
            let ys: Vec<usize> = (0..n).filter(|&a| q.arrow(a).tail == j && q.arrow(a).head == i).collect();
            if xs.is_empty() || ys.is_empty() {
                continue;
            }
            let c = RatMatrix::from_fn(ys.len(), xs.len(), |si, ri| {
                let p = Path::from_arrows(&q, vec![ys[si], xs[ri]]).expect("2-cycle").canonical_rotation(&q);
                quadratic.coeff(&p)
            });
            if c.is_zero() {
                continue;
            }
            let ext = c.hstack(&RatMatrix::identity(ys.len())).expect("rows agree").rref();
            let r = ext.matrix.submatrix(0..ys.len(), 0..xs.len());
            let e = ext.matrix.submatrix(0..ys.len(), xs.len()..xs.len() + ys.len());
            let pivots: Vec<usize> = ext.pivots.iter().copied().filter(|&p| p < xs.len()).collect();
            // x_r ↦ Σ F[r][r'] x_r' with F = I - (pivot rows of R on free columns)
            for (k, &pc) in pivots.iter().enumerate() {
                for col in 0..xs.len() {
                    if !pivots.contains(&col) && !r[(k, col)].is_zero() {
                        m[(xs[col], xs[pc])] = -r[(k, col)].clone();
                    }
                }
            }
            // y_s ↦ Σ E[s'][s] y_s'
            for (si, &ya) in ys.iter().enumerate() {
                for (sj, &yb) in ys.iter().enumerate() {
                    m[(yb, ya)] = e[(sj, si)].clone();
                }
            }
            for (k, &pc) in pivots.iter().enumerate() {
                pairs.push((xs[pc], ys[k]));
            }
        }
    }
    let phi = Substitution::linear(q, s.order(), &m).expect("square matrix");
    (phi, pairs)
}

/// Checks that the witness steps are invertible and carry the input
/// potential to the direct sum of the trivial and reduced parts, cyclically
/// and modulo `m^N`, and that the reduced part has no quadratic terms.
pub fn verify_split(qp: &Qp, sr: &SplitResult) -> bool {
    if sr.steps.is_empty() || !sr.reduced.is_reduced() || !sr.steps.iter().all(Substitution::is_invertible) {
        return false;
    }
    let mut image = qp.potential().clone();
    for step in &sr.steps {
        match step.apply_potential(&image) {
            Ok(next) => image = next,
            Err(_) => return false,
        }
    }
    let target = sr.direct_sum_potential();
    let n = image.order().min(target.order());
    image.truncate(n) == target.truncate(n)
}

/// Number of matched pairs per unordered vertex pair.
pub fn pair_counts(sr: &SplitResult) -> BTreeMap<(usize, usize), usize> {
    let q = sr.quiver();
    let mut out = BTreeMap::new();
    for &(a, _) in &sr.trivial_pairs {
        let arrow = q.arrow(a);
        let key = (arrow.tail.min(arrow.head), arrow.tail.max(arrow.head));
        *out.entry(key).or_insert(0) += 1;
    }
    out
}

/// Cheap check used by callers that only need to know whether a potential
/// has a quadratic part.
pub fn has_quadratic_part(s: &Potential) -> bool {
    !s.element().homogeneous(2).is_zero()
}
