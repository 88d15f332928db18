//! Truncated complete path algebra.
//!
//! Elements are finite sums of paths with rational coefficients, known
//! modulo `m^N` where `m` is the ideal spanned by paths of positive length
//! and `N` is the element's truncation order. Paths compose right to left:
//! the path `a_1 a_2 ... a_d` requires `t(a_k) = h(a_{k+1})`, starts at
//! `t(a_d)` and ends at `h(a_1)`.

mod element;
mod potential;
mod substitution;

pub use element::AlgebraElement;
pub use potential::{canonicalize_potential, cyclic_derivative, Potential};
pub(crate) use potential::split_at_first;
pub use substitution::Substitution;

use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::quiver::Quiver;

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 10;

/// A path in a quiver, stored as arrow indices in written order
/// (`a_1` first). Degree-0 paths are the vertex idempotents `e_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    head: usize,
    tail: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn vertex(v: usize) -> Path {
        Path { head: v, tail: v, arrows: Vec::new() }
    }

    pub fn arrow(q: &Quiver, i: usize) -> Path {
        let a = q.arrow(i);
        Path { head: a.head, tail: a.tail, arrows: vec![i] }
    }

    /// Path from arrow indices in written order; checks composability.
    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<Path> {
        let first = *arrows.first().ok_or_else(|| Error::NotComposable("empty arrow list".into()))?;
        for w in arrows.windows(2) {
            if q.arrow(w[0]).tail != q.arrow(w[1]).head {
                return Err(Error::NotComposable(format!(
                    "t({}) != h({})",
                    q.arrow(w[0]).id,
                    q.arrow(w[1]).id
                )));
            }
        }
        let last = *arrows.last().expect("nonempty");
        Ok(Path { head: q.arrow(first).head, tail: q.arrow(last).tail, arrows })
    }

    pub fn from_ids(q: &Quiver, ids: &[&str]) -> Result<Path> {
        let arrows = ids.iter().map(|id| q.arrow_index(id)).collect::<Result<Vec<_>>>()?;
        Self::from_arrows(q, arrows)
    }

    /// Builds a path assumed to be composable.
    pub(crate) fn from_arrows_unchecked(q: &Quiver, arrows: Vec<usize>) -> Path {
        debug_assert!(!arrows.is_empty());
        let head = q.arrow(arrows[0]).head;
        let tail = q.arrow(*arrows.last().unwrap()).tail;
        Path { head, tail, arrows }
    }

    pub fn degree(&self) -> usize {
        self.arrows.len()
    }

    pub fn head(&self) -> usize {
        self.head
    }

    pub fn tail(&self) -> usize {
        self.tail
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    /// Closed path of positive length.
    pub fn is_cyclic(&self) -> bool {
        !self.arrows.is_empty() && self.head == self.tail
    }

    pub fn contains_arrow(&self, a: usize) -> bool {
        self.arrows.contains(&a)
    }

    /// `self · other`, when `t(self) = h(other)`.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.tail != other.head {
            return None;
        }
        let mut arrows = Vec::with_capacity(self.arrows.len() + other.arrows.len());
        arrows.extend_from_slice(&self.arrows);
        arrows.extend_from_slice(&other.arrows);
        Some(Path { head: self.head, tail: other.tail, arrows })
    }

    /// Rotation `a_{r+1} ... a_d a_1 ... a_r` of a cyclic path.
    pub fn rotate(&self, q: &Quiver, r: usize) -> Path {
        debug_assert!(self.is_cyclic());
        let mut arrows = self.arrows[r..].to_vec();
        arrows.extend_from_slice(&self.arrows[..r]);
        Self::from_arrows_unchecked(q, arrows)
    }

    /// Lexicographically least rotation of a cyclic path.
    pub fn canonical_rotation(&self, q: &Quiver) -> Path {
        let d = self.arrows.len();
        let best = (1..d).fold(0, |best, r| {
            let cand = self.arrows[r..].iter().chain(&self.arrows[..r]);
            let cur = self.arrows[best..].iter().chain(&self.arrows[..best]);
            if cand.cmp(cur) == Ordering::Less {
                r
            } else {
                best
            }
        });
        if best == 0 {
            self.clone()
        } else {
            self.rotate(q, best)
        }
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e{}", q.vertices()[self.head]);
        }
        let mut s = String::new();
        for (n, &a) in self.arrows.iter().enumerate() {
            if n > 0 {
                s.push('·');
            }
            let _ = write!(s, "{}", q.arrow(a).id);
        }
        s
    }

    pub fn arrow_ids(&self, q: &Quiver) -> Vec<String> {
        self.arrows.iter().map(|&a| q.arrow(a).id.clone()).collect()
    }
}

impl Ord for Path {
    /// Degree first, then the arrow sequence, then endpoints.
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.head.cmp(&other.head))
            .then_with(|| self.tail.cmp(&other.tail))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All paths of exactly `degree` arrows, in [`Path`] order.
pub fn paths_of_degree(q: &Quiver, degree: usize) -> Vec<Path> {
    if degree == 0 {
        return (0..q.num_vertices()).map(Path::vertex).collect();
    }
    let mut layer: Vec<Path> = (0..q.num_arrows()).map(|i| Path::arrow(q, i)).collect();
    for _ in 1..degree {
        let mut next = Vec::new();
        for p in &layer {
            for b in 0..q.num_arrows() {
                if q.arrow(b).head == p.tail {
                    let mut arrows = p.arrows.clone();
                    arrows.push(b);
                    next.push(Path { head: p.head, tail: q.arrow(b).tail, arrows });
                }
            }
        }
        layer = next;
    }
    layer.sort();
    layer
}

/// Number of paths of each degree `0..n`, by transfer-matrix counting.
pub fn path_counts(q: &Quiver, n: usize) -> Vec<u128> {
    let v = q.num_vertices();
    // by_tail[x]: paths of the current degree with tail x
    let mut by_tail = vec![1u128; v];
    let mut out = Vec::with_capacity(n);
    for d in 0..n {
        if d == 0 {
            out.push(v as u128);
            continue;
        }
        let mut next = vec![0u128; v];
        for a in q.arrows() {
            next[a.tail] += by_tail[a.head];
        }
        by_tail = next;
        out.push(by_tail.iter().sum());
    }
    out
}

/// Canonical cyclic paths (one per rotation class) of degree `2..=max_degree`.
pub fn cyclic_classes(q: &Quiver, max_degree: usize) -> Vec<Path> {
    let mut out = Vec::new();
    for d in 2..=max_degree {
        for p in paths_of_degree(q, d) {
            if p.is_cyclic() && p.canonical_rotation(q) == p {
                out.push(p);
            }
        }
    }
    out
}
