//! Mutation of quivers with potentials at an arbitrary vertex.
//!
//! Premutation builds `[S] + Δ` on the arrow span produced by the first two
//! steps of quiver mutation; mutation then splits off the trivial part.
//!
//! Truncation orders are tracked honestly. Replacing a passage `b·a` through
//! `k` by one composite arrow lowers degree by one, and without a 2-cycle at
//! `k` a cycle of degree `d` has at most `d / 3` passages. So a potential
//! known modulo `m^N` yields `[S]` known modulo `m^{N - ⌊N/3⌋}`. Exact
//! (polynomial) potentials lose nothing.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::jacobian::{jacobian_dims, Qp};
use crate::linalg::Rational;
use crate::pathalg::{canonicalize_potential, cyclic_classes, AlgebraElement, Path, Potential};
use crate::quiver::{premutate_quiver, quivers_equal, ArrowOrigin, Quiver};
use crate::reduction::{split, SplitResult};

/// Default truncation order for mutation experiments.
pub const MUTATION_ORDER: usize = 8;

/// Lowest order a truncated series needs so that its premutation still
/// determines the quadratic part.
pub const MIN_SERIES_ORDER: usize = 4;

/// `(Ã, [S] + Δ)` together with the origin of every new arrow.
#[derive(Debug, Clone)]
pub struct PremutationResult {
    pub qp_tilde: Qp,
    pub provenance: BTreeMap<String, ArrowOrigin>,
}

/// Full record of one mutation step.
#[derive(Debug, Clone)]
pub struct MutationTrace {
    pub vertex: String,
    pub premutation: PremutationResult,
    pub split: SplitResult,
}

impl MutationTrace {
    pub fn result(&self) -> &Qp {
        &self.split.reduced
    }
}

/// Order to which `[S]` remains valid when `S` is a series known modulo
/// `m^order`.
pub fn premutation_validity(order: usize) -> usize {
    order - order / 3
}

/// Smallest input order whose premutation is valid modulo `m^target`.
pub fn required_series_order(target: usize) -> usize {
    (target..).find(|&n| premutation_validity(n) >= target).expect("validity is unbounded")
}

/// `μ̃_k`: premutation of a reduced QP at `k`.
pub fn premutate(qp: &Qp, k: &str) -> Result<PremutationResult> {
    let q = qp.quiver();
    let k_idx = q.vertex_index(k)?;
    if !qp.is_reduced() {
        return Err(Error::NotReduced);
    }
    let pre = premutate_quiver(q, k)?;
    let order = if qp.is_exact() {
        qp.order()
    } else {
        if qp.order() < MIN_SERIES_ORDER {
            return Err(Error::InsufficientOrder { have: qp.order(), need: MIN_SERIES_ORDER });
        }
        premutation_validity(qp.order())
    };
    let new_q = Arc::new(pre.quiver.clone());
    let composite: HashMap<(usize, usize), usize> = pre.composites.iter().map(|&(c, b, a)| ((b, a), c)).collect();

    let mut x = AlgebraElement::zero(new_q.clone(), order);
    for (p, c) in qp.potential().terms() {
        let arrows = rotate_off(q, p, k_idx);
        let mut out = Vec::with_capacity(arrows.len());
        let mut i = 0;
        while i < arrows.len() {
            let b = arrows[i];
            if q.arrow(b).tail == k_idx {
                // no cycle ends at k, so the arrow into k follows b
                let a = arrows[i + 1];
                out.push(composite[&(b, a)]);
                i += 2;
            } else {
                out.push(pre.image[b]);
                i += 1;
            }
        }
        x.add_term(Path::from_arrows_unchecked(&new_q, out), c.clone());
    }
    for &(c, b, a) in &pre.composites {
        let p = Path::from_arrows_unchecked(&new_q, vec![c, pre.image[a], pre.image[b]]);
        x.add_term(p, Rational::one());
    }
    let potential = canonicalize_potential(&x)?;
    Ok(PremutationResult { qp_tilde: Qp::new(potential, qp.is_exact()), provenance: pre.origins })
}

/// Rotation of a cycle through `k` that neither starts nor ends at `k`.
fn rotate_off(q: &Quiver, p: &Path, k: usize) -> Vec<usize> {
    let d = p.degree();
    let arrows = p.arrows();
    let r = (0..d).find(|&r| q.arrow(arrows[r]).head != k).unwrap_or(0);
    arrows[r..].iter().chain(&arrows[..r]).copied().collect()
}

/// `μ_k(A, S)`: the reduced part of the premutation.
pub fn mutate_qp(qp: &Qp, k: &str) -> Result<Qp> {
    Ok(mutate_qp_traced(qp, k)?.split.reduced)
}

pub fn mutate_qp_traced(qp: &Qp, k: &str) -> Result<MutationTrace> {
    let premutation = premutate(qp, k)?;
    let split = split(&premutation.qp_tilde);
    Ok(MutationTrace { vertex: k.to_string(), premutation, split })
}

/// Applies a sequence of mutations, stopping at the first error.
pub fn mutate_sequence(qp: &Qp, vertices: &[&str]) -> Result<Qp> {
    let mut cur = qp.clone();
    for k in vertices {
        cur = mutate_qp(&cur, k)?;
    }
    Ok(cur)
}

/// Comparison of a QP with its double mutation at one vertex.
#[derive(Debug, Clone, Serialize)]
pub struct InvolutionReport {
    pub vertex: String,
    /// Order at which both sides were compared.
    pub order: usize,
    pub arrows_match: bool,
    pub original_arrows: Vec<Vec<usize>>,
    pub twice_arrows: Vec<Vec<usize>>,
    pub dims_match: bool,
    pub original_dims: Vec<usize>,
    pub twice_dims: Vec<usize>,
    pub trusted_below_degree: usize,
    pub profile_match: bool,
    pub original_profile: BTreeMap<usize, usize>,
    pub twice_profile: BTreeMap<usize, usize>,
}

impl InvolutionReport {
    pub fn passed(&self) -> bool {
        self.arrows_match && self.dims_match && self.profile_match
    }
}

/// Compares `qp` with `μ_k²(qp)` on arrow multiplicities, truncated
/// Jacobian dimensions and potential degree profiles.
///
/// Exact inputs are lifted first so that the double mutation is still known
/// modulo `m^N`; truncated series are compared at the lower order that
/// survives.
pub fn check_involution(qp: &Qp, k: &str) -> Result<InvolutionReport> {
    let n = qp.order();
    let start = if qp.is_exact() { qp.with_order(required_series_order(n))? } else { qp.clone() };
    let once = mutate_qp(&start, k)?;
    if once.quiver().two_cycle_at(once.quiver().vertex_index(k)?) {
        return Err(Error::ObstructedSecondMutation(k.to_string()));
    }
    let twice = mutate_qp(&once, k)?;
    let order = n.min(twice.order());
    let lhs = qp.with_order(order)?;
    let rhs = twice.with_order(order)?;

    let original_arrows = lhs.quiver().multiplicity_matrix();
    let twice_arrows = rhs.quiver().multiplicity_matrix();
    let dl = jacobian_dims(&lhs);
    let dr = jacobian_dims(&rhs);
    let original_profile = lhs.potential().degree_profile();
    let twice_profile = rhs.potential().degree_profile();
    Ok(InvolutionReport {
        vertex: k.to_string(),
        order,
        arrows_match: quivers_equal(lhs.quiver(), rhs.quiver()),
        original_arrows,
        twice_arrows,
        dims_match: dl.dims == dr.dims,
        original_dims: dl.dims,
        twice_dims: dr.dims,
        trusted_below_degree: dl.trusted_below_degree,
        profile_match: original_profile == twice_profile,
        original_profile,
        twice_profile,
    })
}

/// Random potential with one term per cyclic class of degree
/// `2..=max_degree`, each with a nonzero integer coefficient in
/// `[-10^6, 10^6]` drawn from `seed`. The result is a polynomial of order
/// `max_degree + 1`.
pub fn random_potential(q: &Arc<Quiver>, max_degree: usize, seed: u64) -> Potential {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = max_degree + 1;
    let mut x = AlgebraElement::zero(q.clone(), order);
    for p in cyclic_classes(q, max_degree) {
        let mut c: i64 = 0;
        while c == 0 {
            c = rng.gen_range(-1_000_000..=1_000_000);
        }
        x.add_term(p, Rational::from(c));
    }
    canonicalize_potential(&x).expect("cyclic classes are cycles")
}

/// Vertices at which `qp` can be mutated: those without a 2-cycle.
pub fn admissible_vertices(q: &Quiver) -> Vec<String> {
    (0..q.num_vertices()).filter(|&v| !q.two_cycle_at(v)).map(|v| q.vertices()[v].clone()).collect()
}

/// Whether the premutation's quadratic part pairs exactly as many arrows as
/// step (3) of quiver mutation cancels.
pub fn cancels_like_quiver(trace: &MutationTrace) -> bool {
    let q = trace.premutation.qp_tilde.quiver();
    let reduced = trace.split.reduced.quiver();
    let expected = crate::quiver::cancel_two_cycles(q);
    quivers_equal(&expected, reduced)
}

/// Sum of absolute values of coefficients; handy for reporting.
pub fn coefficient_height(s: &Potential) -> Rational {
    s.terms().values().fold(Rational::zero(), |acc, c| if c < &Rational::zero() { acc - c } else { acc + c })
}
