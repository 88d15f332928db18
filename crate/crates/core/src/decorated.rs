//! Representations, decorated representations and their mutation at sinks
//! and sources by reflection.

use std::sync::Arc;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::jacobian::{jacobian_generators, Qp};
use crate::linalg::{RatMatrix, Rational};
use crate::pathalg::{AlgebraElement, Path};
use crate::quiver::{premutate_quiver, Quiver};

/// Default number of random intertwiners tried by [`is_isomorphic`].
pub const ISO_TRIALS: usize = 8;

/// A representation: a space `M(i)` per vertex and a matrix
/// `M(a): M(t a) -> M(h a)` of shape `dim M(h a) x dim M(t a)` per arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    quiver: Arc<Quiver>,
    dims: Vec<usize>,
    maps: Vec<RatMatrix>,
}

impl Representation {
    /// `dims` by vertex index, `maps` by arrow index.
    pub fn new(quiver: Arc<Quiver>, dims: Vec<usize>, maps: Vec<RatMatrix>) -> Result<Self> {
        if dims.len() != quiver.num_vertices() || maps.len() != quiver.num_arrows() {
            return Err(Error::ShapeMismatch(format!(
                "{} dimensions and {} maps for {} vertices and {} arrows",
                dims.len(),
                maps.len(),
                quiver.num_vertices(),
                quiver.num_arrows()
            )));
        }
        for (i, (a, m)) in quiver.arrows().iter().zip(&maps).enumerate() {
            if m.rows() != dims[a.head] || m.cols() != dims[a.tail] {
                return Err(Error::ShapeMismatch(format!(
                    "map of {} is {}x{}, expected {}x{}",
                    quiver.arrow(i).id,
                    m.rows(),
                    m.cols(),
                    dims[a.head],
                    dims[a.tail]
                )));
            }
        }
        Ok(Representation { quiver, dims, maps })
    }

    /// Builds from vertex and arrow ids; unlisted vertices get dimension 0
    /// and unlisted arrows the zero map.
    pub fn from_ids(quiver: Arc<Quiver>, dims: &[(&str, usize)], maps: &[(&str, RatMatrix)]) -> Result<Self> {
        let mut d = vec![0; quiver.num_vertices()];
        for (v, n) in dims {
            d[quiver.vertex_index(v)?] = *n;
        }
        let mut m: Vec<RatMatrix> = quiver.arrows().iter().map(|a| RatMatrix::zeros(d[a.head], d[a.tail])).collect();
        for (id, mat) in maps {
            m[quiver.arrow_index(id)?] = mat.clone();
        }
        Self::new(quiver, d, m)
    }

    pub fn zero(quiver: Arc<Quiver>) -> Self {
        let d = vec![0; quiver.num_vertices()];
        Self::new(quiver.clone(), d, quiver.arrows().iter().map(|_| RatMatrix::zeros(0, 0)).collect())
            .expect("zero shapes")
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: &str) -> Result<usize> {
        Ok(self.dims[self.quiver.vertex_index(v)?])
    }

    pub fn maps(&self) -> &[RatMatrix] {
        &self.maps
    }

    pub fn map(&self, id: &str) -> Result<&RatMatrix> {
        Ok(&self.maps[self.quiver.arrow_index(id)?])
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// `M(a_1) ··· M(a_d)` for the path `a_1 ... a_d`.
    pub fn evaluate_path(&self, p: &Path) -> RatMatrix {
        let mut out = RatMatrix::identity(self.dims[p.tail()]);
        for &a in p.arrows().iter().rev() {
            out = self.maps[a].mul(&out).expect("composable path");
        }
        out
    }

    /// Evaluation of an element all of whose terms run from `tail` to `head`.
    pub fn evaluate(&self, x: &AlgebraElement, tail: usize, head: usize) -> Result<RatMatrix> {
        if !Arc::ptr_eq(x.quiver(), &self.quiver) && **x.quiver() != *self.quiver {
            return Err(Error::QuiverMismatch);
        }
        let mut out = RatMatrix::zeros(self.dims[head], self.dims[tail]);
        for (p, c) in x.terms() {
            if p.tail() != tail || p.head() != head {
                return Err(Error::ShapeMismatch(format!("term {} leaves the block", p.display(&self.quiver))));
            }
            out = out.add(&self.evaluate_path(p).scale(c))?;
        }
        Ok(out)
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if *self.quiver != *other.quiver {
            return Err(Error::QuiverMismatch);
        }
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.direct_sum(b)).collect();
        Representation::new(self.quiver.clone(), dims, maps)
    }

    /// Whether every path of length `bound` acts as zero.
    pub fn is_nilpotent(&self, bound: usize) -> bool {
        let q = &self.quiver;
        // spaces[v]: span of images of paths of the current length ending at v
        let mut spaces: Vec<RatMatrix> = self.dims.iter().map(|&d| RatMatrix::identity(d)).collect();
        for _ in 0..bound {
            let mut next: Vec<RatMatrix> = self.dims.iter().map(|&d| RatMatrix::zeros(d, 0)).collect();
            for (i, a) in q.arrows().iter().enumerate() {
                let img = self.maps[i].mul(&spaces[a.tail]).expect("shapes agree");
                next[a.head] = next[a.head].hstack(&img).expect("rows agree");
            }
            spaces = next.into_iter().map(|m| m.image_basis()).collect();
            if spaces.iter().all(|m| m.cols() == 0) {
                return true;
            }
        }
        spaces.iter().all(|m| m.cols() == 0)
    }
}

/// A representation with a decoration space `V(i)` at each vertex, stored
/// by dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecoratedRep {
    pub rep: Representation,
    pub decoration: Vec<usize>,
}

impl DecoratedRep {
    pub fn new(rep: Representation, decoration: Vec<usize>) -> Result<Self> {
        if decoration.len() != rep.quiver.num_vertices() {
            return Err(Error::ShapeMismatch(format!(
                "{} decoration dimensions for {} vertices",
                decoration.len(),
                rep.quiver.num_vertices()
            )));
        }
        Ok(DecoratedRep { rep, decoration })
    }

    pub fn undecorated(rep: Representation) -> Self {
        let n = rep.quiver.num_vertices();
        DecoratedRep { rep, decoration: vec![0; n] }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.rep.quiver
    }

    pub fn direct_sum(&self, other: &DecoratedRep) -> Result<DecoratedRep> {
        let rep = self.rep.direct_sum(&other.rep)?;
        let decoration = self.decoration.iter().zip(&other.decoration).map(|(a, b)| a + b).collect();
        Ok(DecoratedRep { rep, decoration })
    }
}

/// Default nilpotency bound: total dimension plus one.
pub fn default_nilpotency_bound(m: &Representation) -> usize {
    m.total_dim() + 1
}

/// Whether `m` is a module over the truncated Jacobian algebra: paths of
/// length `nilpotency_bound` act as zero and every cyclic derivative of the
/// potential evaluates to zero.
pub fn check_relations(m: &Representation, qp: &Qp, nilpotency_bound: usize) -> Result<bool> {
    if **qp.quiver() != *m.quiver {
        return Err(Error::ShapeMismatch("representation and QP live on different quivers".into()));
    }
    if !m.is_nilpotent(nilpotency_bound) {
        return Ok(false);
    }
    let rebased = Representation { quiver: qp.quiver().clone(), dims: m.dims.clone(), maps: m.maps.clone() };
    for (a, g) in jacobian_generators(qp).iter().enumerate() {
        let arrow = qp.quiver().arrow(a);
        // ∂_a S runs from h(a) to t(a)
        if !rebased.evaluate(g, arrow.head, arrow.tail)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_vertex(q: &Quiver, k: &str) -> Result<usize> {
    q.vertex_index(k)
}

/// Mutation at a sink `k`: `M̄(k) = ker α ⊕ V(k)`, `V̄(k) = coker α`, where
/// `α: ⊕_{h a = k} M(t a) -> M(k)` stacks the incoming maps in ascending
/// arrow-id order.
pub fn reflect_sink(dm: &DecoratedRep, k: &str) -> Result<DecoratedRep> {
    let q = dm.quiver();
    let kv = check_vertex(q, k)?;
    if !q.is_sink(kv) {
        return Err(Error::NotASink(k.to_string()));
    }
    let incoming = q.incoming(kv);
    let m = &dm.rep;
    let alpha = incoming.iter().fold(RatMatrix::zeros(m.dims[kv], 0), |acc, &a| acc.hstack(&m.maps[a]).expect("rows agree"));
    let kernel = alpha.kernel_basis();
    let rank = alpha.cols() - kernel.cols();
    let new_dim = kernel.cols() + dm.decoration[kv];

    let pre = premutate_quiver(q, k)?;
    let new_q = Arc::new(pre.quiver);
    let mut dims = m.dims.clone();
    dims[kv] = new_dim;
    let mut maps = vec![RatMatrix::zeros(0, 0); new_q.num_arrows()];
    let mut offset = 0;
    for (i, a) in q.arrows().iter().enumerate() {
        let ni = pre.image[i];
        if a.head == kv {
            let d = m.dims[a.tail];
            let block = kernel.submatrix(offset..offset + d, 0..kernel.cols());
            maps[ni] = block.hstack(&RatMatrix::zeros(d, dm.decoration[kv])).expect("rows agree");
            offset += d;
        } else {
            maps[ni] = m.maps[i].clone();
        }
    }
    let mut decoration = dm.decoration.clone();
    decoration[kv] = m.dims[kv] - rank;
    DecoratedRep::new(Representation::new(new_q, dims, maps)?, decoration)
}

/// Mutation at a source `k`: `M̄(k) = coker β ⊕ V(k)`, `V̄(k) = ker β`,
/// where `β: M(k) -> ⊕_{t b = k} M(h b)` stacks the outgoing maps in
/// ascending arrow-id order. The cokernel is the quotient by the pivot
/// columns of `β`, complemented by the first standard basis vectors.
pub fn reflect_source(dm: &DecoratedRep, k: &str) -> Result<DecoratedRep> {
    let q = dm.quiver();
    let kv = check_vertex(q, k)?;
    if !q.is_source(kv) {
        return Err(Error::NotASource(k.to_string()));
    }
    let outgoing = q.outgoing(kv);
    let m = &dm.rep;
    let beta = outgoing.iter().fold(RatMatrix::zeros(0, m.dims[kv]), |acc, &b| acc.vstack(&m.maps[b]).expect("cols agree"));
    let image = beta.image_basis();
    let complement = image.complement_basis();
    let rank = image.cols();
    let total = beta.rows();
    let change = image.hstack(&complement)?.invert()?.expect("image plus complement is a basis");
    let projection = change.submatrix(rank..total, 0..total);
    let coker = total - rank;
    let new_dim = coker + dm.decoration[kv];

    let pre = premutate_quiver(q, k)?;
    let new_q = Arc::new(pre.quiver);
    let mut dims = m.dims.clone();
    dims[kv] = new_dim;
    let mut maps = vec![RatMatrix::zeros(0, 0); new_q.num_arrows()];
    let mut offset = 0;
    for (i, a) in q.arrows().iter().enumerate() {
        let ni = pre.image[i];
        if a.tail == kv {
            let d = m.dims[a.head];
            let block = projection.submatrix(0..coker, offset..offset + d);
            maps[ni] = block.vstack(&RatMatrix::zeros(dm.decoration[kv], d)).expect("cols agree");
            offset += d;
        } else {
            maps[ni] = m.maps[i].clone();
        }
    }
    let mut decoration = dm.decoration.clone();
    decoration[kv] = m.dims[kv] - rank;
    DecoratedRep::new(Representation::new(new_q, dims, maps)?, decoration)
}

/// Mutation of a decorated representation at a sink or a source. The
/// general-vertex construction is not implemented and is reported as an
/// error.
pub fn mutate_decorated(dm: &DecoratedRep, k: &str) -> Result<DecoratedRep> {
    let q = dm.quiver();
    let kv = check_vertex(q, k)?;
    if q.is_sink(kv) {
        reflect_sink(dm, k)
    } else if q.is_source(kv) {
        reflect_source(dm, k)
    } else {
        Err(Error::NotSinkOrSource(k.to_string()))
    }
}

/// Basis of the intertwiners `φ` with `M2(a) φ(t a) = φ(h a) M1(a)`, each
/// returned as one matrix per vertex.
pub fn intertwiners(m1: &Representation, m2: &Representation) -> Result<Vec<Vec<RatMatrix>>> {
    if *m1.quiver != *m2.quiver {
        return Err(Error::ShapeMismatch("representations live on different quivers".into()));
    }
    let q = &m1.quiver;
    // variables: φ(v)[r][c] for r < dim2(v), c < dim1(v), vertex-major
    let mut offsets = Vec::with_capacity(q.num_vertices());
    let mut nvars = 0;
    for v in 0..q.num_vertices() {
        offsets.push(nvars);
        nvars += m2.dims[v] * m1.dims[v];
    }
    let var = |v: usize, r: usize, c: usize| offsets[v] + r * m1.dims[v] + c;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (i, a) in q.arrows().iter().enumerate() {
        let (t, h) = (a.tail, a.head);
        let (a1, a2) = (&m1.maps[i], &m2.maps[i]);
        // entry (r, c) of M2(a) φ(t) - φ(h) M1(a), shape dim2(h) x dim1(t)
        for r in 0..m2.dims[h] {
            for c in 0..m1.dims[t] {
                let mut row = vec![Rational::zero(); nvars];
                for s in 0..m2.dims[t] {
                    row[var(t, s, c)] += a2[(r, s)].clone();
                }
                for s in 0..m1.dims[h] {
                    row[var(h, r, s)] -= a1[(s, c)].clone();
                }
                rows.push(row);
            }
        }
    }
    let system = RatMatrix::from_rows_with_shape(rows.len(), nvars, rows)?;
    let kernel = system.kernel_basis();
    Ok((0..kernel.cols())
        .map(|j| {
            (0..q.num_vertices())
                .map(|v| RatMatrix::from_fn(m2.dims[v], m1.dims[v], |r, c| kernel[(var(v, r, c), j)].clone()))
                .collect()
        })
        .collect())
}

/// One-sided randomized isomorphism test: samples `trials` random integer
/// combinations of a basis of intertwiners and reports whether any is
/// invertible at every vertex. A `true` answer is certain; `false` may be
/// wrong with small probability.
pub fn is_isomorphic(m1: &Representation, m2: &Representation, trials: usize) -> Result<bool> {
    is_isomorphic_seeded(m1, m2, trials, 0)
}

pub fn is_isomorphic_seeded(m1: &Representation, m2: &Representation, trials: usize, seed: u64) -> Result<bool> {
    if *m1.quiver != *m2.quiver {
        return Err(Error::ShapeMismatch("representations live on different quivers".into()));
    }
    if m1.dims != m2.dims {
        return Ok(false);
    }
    let basis = intertwiners(m1, m2)?;
    let n = m1.quiver.num_vertices();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut phi: Vec<RatMatrix> = (0..n).map(|v| RatMatrix::zeros(m1.dims[v], m1.dims[v])).collect();
        for b in &basis {
            let c = Rational::from(rng.gen_range(-1000i64..=1000));
            for v in 0..n {
                phi[v] = phi[v].add(&b[v].scale(&c))?;
            }
        }
        if phi.iter().all(RatMatrix::is_invertible) {
            return Ok(true);
        }
    }
    Ok(false)
}
