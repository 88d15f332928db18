//! Loop-free quivers, the three-step mutation and skew-symmetric exchange
//! matrices.
//!
//! Exchange matrices use the convention
//! `b[i][j] = #{arrows j -> i} - #{arrows i -> j}` everywhere in the crate.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An arrow `id: tail -> head`; endpoints are vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub id: String,
    pub tail: usize,
    pub head: usize,
}

/// A finite quiver without loops.
///
/// The vertex list keeps the order it was built with. Arrows are kept sorted
/// by id, so arrow indices follow the lexicographic order of ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "QuiverJson", into = "QuiverJson")]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

#[derive(Serialize, Deserialize)]
struct ArrowJson {
    id: String,
    tail: String,
    head: String,
}

#[derive(Serialize, Deserialize)]
struct QuiverJson {
    vertices: Vec<String>,
    arrows: Vec<ArrowJson>,
}

impl TryFrom<QuiverJson> for Quiver {
    type Error = Error;
    fn try_from(j: QuiverJson) -> Result<Self> {
        Quiver::new(j.vertices, j.arrows.into_iter().map(|a| (a.id, a.tail, a.head)))
    }
}

impl From<Quiver> for QuiverJson {
    fn from(q: Quiver) -> Self {
        let arrows = q
            .arrows
            .iter()
            .map(|a| ArrowJson {
                id: a.id.clone(),
                tail: q.vertices[a.tail].clone(),
                head: q.vertices[a.head].clone(),
            })
            .collect();
        QuiverJson { vertices: q.vertices, arrows }
    }
}

impl Quiver {
    /// Builds a quiver from vertex ids and `(id, tail, head)` triples.
    pub fn new<I, S>(vertices: Vec<String>, arrows: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, S, S)>,
        S: Into<String>,
    {
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.as_str(), i).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let mut out = Vec::new();
        for (id, tail, head) in arrows {
            let (id, tail, head) = (id.into(), tail.into(), head.into());
            let t = *index.get(tail.as_str()).ok_or_else(|| Error::UnknownVertex(tail.clone()))?;
            let h = *index.get(head.as_str()).ok_or_else(|| Error::UnknownVertex(head.clone()))?;
            if t == h {
                return Err(Error::Loop(id));
            }
            out.push(Arrow { id, tail: t, head: h });
        }
        Self::from_parts(vertices, out)
    }

    fn from_parts(vertices: Vec<String>, mut arrows: Vec<Arrow>) -> Result<Self> {
        arrows.sort_by(|a, b| a.id.cmp(&b.id));
        for w in arrows.windows(2) {
            if w[0].id == w[1].id {
                return Err(Error::DuplicateArrow(w[0].id.clone()));
            }
        }
        if let Some(a) = arrows.iter().find(|a| a.head == a.tail) {
            return Err(Error::Loop(a.id.clone()));
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Shorthand used throughout tests and examples.
    pub fn build(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        Self::new(vertices.iter().map(|v| v.to_string()).collect(), arrows.iter().copied())
    }

    /// Same vertex set, different arrows (given with vertex indices).
    pub fn with_arrows(&self, arrows: Vec<Arrow>) -> Result<Self> {
        Self::from_parts(self.vertices.clone(), arrows)
    }

    /// The quiver on the same vertices keeping only the listed arrows.
    pub fn subquiver(&self, keep: &[usize]) -> Quiver {
        let arrows = keep.iter().map(|&i| self.arrows[i].clone()).collect();
        Self::from_parts(self.vertices.clone(), arrows).expect("subset of a valid quiver")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn vertex_index(&self, v: &str) -> Result<usize> {
        self.vertices.iter().position(|x| x == v).ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }

    pub fn arrow_index(&self, id: &str) -> Result<usize> {
        self.arrows
            .binary_search_by(|a| a.id.as_str().cmp(id))
            .map_err(|_| Error::UnknownArrow(id.to_string()))
    }

    /// Indices of arrows `a` with `h(a) = k`.
    pub fn incoming(&self, k: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&i| self.arrows[i].head == k).collect()
    }

    /// Indices of arrows `b` with `t(b) = k`.
    pub fn outgoing(&self, k: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&i| self.arrows[i].tail == k).collect()
    }

    pub fn is_sink(&self, k: usize) -> bool {
        self.arrows.iter().all(|a| a.tail != k)
    }

    pub fn is_source(&self, k: usize) -> bool {
        self.arrows.iter().all(|a| a.head != k)
    }

    /// Number of arrows `i -> j`.
    pub fn multiplicity(&self, i: usize, j: usize) -> usize {
        self.arrows.iter().filter(|a| a.tail == i && a.head == j).count()
    }

    /// `m[i][j]` = number of arrows `i -> j`.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut m = vec![vec![0; n]; n];
        for a in &self.arrows {
            m[a.tail][a.head] += 1;
        }
        m
    }

    pub fn has_two_cycle_through(&self, k: &str) -> Result<bool> {
        let k = self.vertex_index(k)?;
        Ok(self.two_cycle_at(k))
    }

    pub(crate) fn two_cycle_at(&self, k: usize) -> bool {
        let m = self.multiplicity_matrix();
        (0..self.vertices.len()).any(|j| m[k][j] > 0 && m[j][k] > 0)
    }

    pub fn is_two_acyclic(&self) -> bool {
        self.first_two_cycle().is_none()
    }

    fn first_two_cycle(&self) -> Option<(usize, usize)> {
        let m = self.multiplicity_matrix();
        let n = self.vertices.len();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| m[i][j] > 0 && m[j][i] > 0)
    }

    pub fn arrow_label(&self, i: usize) -> String {
        let a = &self.arrows[i];
        format!("{}:{}->{}", a.id, self.vertices[a.tail], self.vertices[a.head])
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows: Vec<String> = (0..self.arrows.len()).map(|i| self.arrow_label(i)).collect();
        write!(f, "[{}] {{{}}}", self.vertices.join(","), arrows.join(", "))
    }
}

/// Multiplicity-level equality: same vertices and the same number of arrows
/// between every ordered pair. Arrow ids are ignored.
pub fn quivers_equal(q1: &Quiver, q2: &Quiver) -> bool {
    q1.vertices == q2.vertices && q1.multiplicity_matrix() == q2.multiplicity_matrix()
}

/// Where an arrow of a premutated quiver came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ArrowOrigin {
    /// An arrow not incident to the mutated vertex.
    Kept { arrow: String },
    /// The reversal `a*` of an arrow at the mutated vertex.
    Reversed { arrow: String },
    /// The composite `[b∘a]` of `a: j -> k` and `b: k -> i`.
    Composite { outer: String, inner: String },
}

/// Reversed-arrow id: appends a star, or strips one so that reversing twice
/// restores the original id.
pub fn reversed_id(id: &str) -> String {
    match id.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{id}*"),
    }
}

pub fn composite_id(outer: &str, inner: &str) -> String {
    format!("[{outer}∘{inner}]")
}

fn fresh(mut id: String, taken: &mut HashSet<String>) -> String {
    while taken.contains(&id) {
        id.push('\'');
    }
    taken.insert(id.clone());
    id
}

/// Result of the first two mutation steps: the new quiver and, for every
/// new arrow index, its origin.
#[derive(Debug, Clone)]
pub struct Premutation {
    pub quiver: Quiver,
    pub origins: BTreeMap<String, ArrowOrigin>,
    /// `(composite, outer b, inner a)` arrow indices: composite in the new
    /// quiver, `b`, `a` in the old one.
    pub composites: Vec<(usize, usize, usize)>,
    /// Old arrow index -> new arrow index for every arrow at `k` (reversed)
    /// and every arrow away from `k` (kept).
    pub image: Vec<usize>,
}

/// Steps (1) and (2) of quiver mutation at `k` with no cancellation.
pub fn premutate_quiver(q: &Quiver, k: &str) -> Result<Premutation> {
    let k_idx = q.vertex_index(k)?;
    if q.two_cycle_at(k_idx) {
        return Err(Error::TwoCycleAtVertex(k.to_string()));
    }
    let mut taken: HashSet<String> = q.arrows.iter().map(|a| a.id.clone()).collect();
    let mut new_ids = Vec::with_capacity(q.arrows.len());
    let mut arrows = Vec::new();
    let mut origins = BTreeMap::new();
    for a in &q.arrows {
        if a.head == k_idx || a.tail == k_idx {
            taken.remove(&a.id);
        }
    }
    for a in &q.arrows {
        let (id, origin, arrow) = if a.head == k_idx || a.tail == k_idx {
            let id = fresh(reversed_id(&a.id), &mut taken);
            (id.clone(), ArrowOrigin::Reversed { arrow: a.id.clone() }, Arrow { id, tail: a.head, head: a.tail })
        } else {
            (a.id.clone(), ArrowOrigin::Kept { arrow: a.id.clone() }, a.clone())
        };
        new_ids.push(id.clone());
        origins.insert(id, origin);
        arrows.push(arrow);
    }
    let mut composite_ids = Vec::new();
    for &ai in &q.incoming(k_idx) {
        for &bi in &q.outgoing(k_idx) {
            let (a, b) = (&q.arrows[ai], &q.arrows[bi]);
            let id = fresh(composite_id(&b.id, &a.id), &mut taken);
            origins.insert(id.clone(), ArrowOrigin::Composite { outer: b.id.clone(), inner: a.id.clone() });
            arrows.push(Arrow { id: id.clone(), tail: a.tail, head: b.head });
            composite_ids.push((id, bi, ai));
        }
    }
    let quiver = q.with_arrows(arrows)?;
    let image = new_ids.iter().map(|id| quiver.arrow_index(id).expect("just inserted")).collect();
    let composites = composite_ids
        .into_iter()
        .map(|(id, b, a)| (quiver.arrow_index(&id).expect("just inserted"), b, a))
        .collect();
    Ok(Premutation { quiver, origins, composites, image })
}

/// Step (3): removes a maximal disjoint union of oriented 2-cycles. For each
/// vertex pair, `min(#i->j, #j->i)` arrows in each direction are removed,
/// taking the smallest ids first.
pub fn cancel_two_cycles(q: &Quiver) -> Quiver {
    let n = q.num_vertices();
    let mut drop = HashSet::new();
    for i in 0..n {
        for j in i + 1..n {
            let fwd: Vec<usize> = (0..q.arrows.len()).filter(|&x| q.arrows[x].tail == i && q.arrows[x].head == j).collect();
            let bwd: Vec<usize> = (0..q.arrows.len()).filter(|&x| q.arrows[x].tail == j && q.arrows[x].head == i).collect();
            let m = fwd.len().min(bwd.len());
            drop.extend(fwd[..m].iter().copied());
            drop.extend(bwd[..m].iter().copied());
        }
    }
    let keep: Vec<usize> = (0..q.arrows.len()).filter(|x| !drop.contains(x)).collect();
    q.subquiver(&keep)
}

/// Quiver mutation at `k`.
pub fn mutate_quiver(q: &Quiver, k: &str) -> Result<Quiver> {
    Ok(cancel_two_cycles(&premutate_quiver(q, k)?.quiver))
}

/// Skew-symmetric integer matrix indexed by the vertices of a quiver.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExchangeMatrix {
    pub vertices: Vec<String>,
    pub entries: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    pub fn new(vertices: Vec<String>, entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = vertices.len();
        if entries.len() != n || entries.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch(format!("exchange matrix must be {n}x{n}")));
        }
        if (0..n).any(|i| (0..n).any(|j| entries[i][j] != -entries[j][i])) {
            return Err(Error::NotSkewSymmetric);
        }
        Ok(ExchangeMatrix { vertices, entries })
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// Realizes the matrix as a 2-acyclic quiver. Arrows are named
    /// `"{tail}-{head}.{n}"`.
    pub fn to_quiver(&self) -> Quiver {
        let n = self.vertices.len();
        let mut arrows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                // b[i][j] > 0 counts arrows j -> i
                for m in 0..self.entries[i][j].max(0) {
                    arrows.push(Arrow { id: format!("{}-{}.{}", self.vertices[j], self.vertices[i], m), tail: j, head: i });
                }
            }
        }
        Quiver::from_parts(self.vertices.clone(), arrows).expect("generated ids are distinct")
    }
}

pub fn to_matrix(q: &Quiver) -> Result<ExchangeMatrix> {
    if let Some((i, j)) = q.first_two_cycle() {
        return Err(Error::TwoCycle(q.vertices[i].clone(), q.vertices[j].clone()));
    }
    let m = q.multiplicity_matrix();
    let n = q.num_vertices();
    let entries = (0..n).map(|i| (0..n).map(|j| m[j][i] as i64 - m[i][j] as i64).collect()).collect();
    Ok(ExchangeMatrix { vertices: q.vertices.clone(), entries })
}

/// Matrix mutation in direction `k`:
/// `b'[i][j] = -b[i][j]` if `k` is `i` or `j`, otherwise
/// `b[i][j] + sgn(b[i][k]) * max(b[i][k] * b[k][j], 0)`.
pub fn matrix_mutate(b: &ExchangeMatrix, k: &str) -> Result<ExchangeMatrix> {
    let k = b.vertices.iter().position(|v| v == k).ok_or_else(|| Error::UnknownVertex(k.to_string()))?;
    let n = b.vertices.len();
    let e = &b.entries;
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == k || j == k {
                        -e[i][j]
                    } else {
                        e[i][j] + e[i][k].signum() * (e[i][k] * e[k][j]).max(0)
                    }
                })
                .collect()
        })
        .collect();
    Ok(ExchangeMatrix { vertices: b.vertices.clone(), entries })
}
