//! JSON file formats.
//!
//! Every writer emits keys and terms in a canonical order, so reading a
//! file back and writing it again reproduces it byte for byte. Rationals are
//! strings, `"p/q"` or `"p"`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::decorated::{DecoratedRep, Representation};
use crate::error::{Error, Result};
use crate::jacobian::Qp;
use crate::linalg::{format_rational, parse_rational, RatMatrix};
use crate::pathalg::{canonicalize_potential, AlgebraElement, Path, Potential, Substitution};
use crate::quiver::{ArrowOrigin, Quiver};
use crate::reduction::SplitResult;

/// One term: a path in written order, or a vertex idempotent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TermJson {
    Path { path: Vec<String>, coeff: String },
    Vertex { vertex: String, coeff: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub order: usize,
    pub terms: Vec<TermJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cyclic: Option<bool>,
}

/// A quiver with potential. `exact` marks a polynomial potential; a
/// missing flag means exact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QpJson {
    pub quiver: Quiver,
    pub potential: ElementJson,
    #[serde(default = "default_exact")]
    pub exact: bool,
}

fn default_exact() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubstitutionJson {
    pub order: usize,
    pub images: BTreeMap<String, ElementJson>,
}

/// A split with its full witness, for external audit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitJson {
    pub trivial_pairs: Vec<[String; 2]>,
    pub reduced_arrows: Vec<String>,
    pub reduced: QpJson,
    pub passes: usize,
    pub witness: SubstitutionJson,
}

/// Output of one QP mutation: the result and where its arrows came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutationJson {
    pub vertex: String,
    pub qp: QpJson,
    pub provenance: BTreeMap<String, ArrowOrigin>,
    pub trivial_pairs: Vec<[String; 2]>,
}

/// Decorated representation. The quiver is optional on input; readers
/// fall back to a quiver supplied separately.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quiver: Option<Quiver>,
    pub dims: BTreeMap<String, usize>,
    pub maps: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default)]
    pub decoration: BTreeMap<String, usize>,
}

pub fn element_to_json(x: &AlgebraElement) -> ElementJson {
    let q = x.quiver();
    let terms = x
        .terms()
        .iter()
        .map(|(p, c)| {
            let coeff = format_rational(c);
            if p.degree() == 0 {
                TermJson::Vertex { vertex: q.vertices()[p.head()].clone(), coeff }
            } else {
                TermJson::Path { path: p.arrow_ids(q), coeff }
            }
        })
        .collect();
    ElementJson { order: x.order(), terms, cyclic: None }
}

pub fn element_from_json(q: &Arc<Quiver>, j: &ElementJson) -> Result<AlgebraElement> {
    let mut x = AlgebraElement::zero(q.clone(), j.order);
    for t in &j.terms {
        let (p, c) = match t {
            TermJson::Path { path, coeff } => {
                let ids: Vec<&str> = path.iter().map(String::as_str).collect();
                (Path::from_ids(q, &ids)?, coeff)
            }
            TermJson::Vertex { vertex, coeff } => (Path::vertex(q.vertex_index(vertex)?), coeff),
        };
        if p.degree() < j.order {
            x.add_term(p, parse_rational(c)?);
        }
    }
    Ok(x)
}

pub fn potential_to_json(s: &Potential) -> ElementJson {
    ElementJson { cyclic: Some(true), ..element_to_json(s.element()) }
}

pub fn potential_from_json(q: &Arc<Quiver>, j: &ElementJson) -> Result<Potential> {
    if j.cyclic == Some(false) {
        return Err(Error::Parse("potential is marked as not cyclic".into()));
    }
    canonicalize_potential(&element_from_json(q, j)?)
}

pub fn qp_to_json(qp: &Qp) -> QpJson {
    QpJson { quiver: (**qp.quiver()).clone(), potential: potential_to_json(qp.potential()), exact: qp.is_exact() }
}

pub fn qp_from_json(j: &QpJson) -> Result<Qp> {
    let q = Arc::new(j.quiver.clone());
    Ok(Qp::new(potential_from_json(&q, &j.potential)?, j.exact))
}

pub fn substitution_to_json(phi: &Substitution) -> SubstitutionJson {
    let q = phi.quiver();
    let images = phi.images().iter().enumerate().map(|(i, img)| (q.arrow(i).id.clone(), element_to_json(img))).collect();
    SubstitutionJson { order: phi.order(), images }
}

pub fn substitution_from_json(q: &Arc<Quiver>, j: &SubstitutionJson) -> Result<Substitution> {
    let images = j
        .images
        .iter()
        .map(|(id, img)| Ok((q.arrow_index(id)?, element_from_json(q, img)?)))
        .collect::<Result<Vec<_>>>()?;
    Substitution::new(q.clone(), j.order, images)
}

fn pair_ids(q: &Quiver, pairs: &[(usize, usize)]) -> Vec<[String; 2]> {
    pairs.iter().map(|&(a, b)| [q.arrow(a).id.clone(), q.arrow(b).id.clone()]).collect()
}

/// Serializes a split, composing its witness into one substitution.
pub fn split_to_json(sr: &SplitResult) -> SplitJson {
    let q = sr.quiver();
    SplitJson {
        trivial_pairs: pair_ids(q, &sr.trivial_pairs),
        reduced_arrows: sr.reduced_arrows.iter().map(|&a| q.arrow(a).id.clone()).collect(),
        reduced: qp_to_json(&sr.reduced),
        passes: sr.passes,
        witness: substitution_to_json(&sr.witness()),
    }
}

pub fn mutation_to_json(trace: &crate::mutation::MutationTrace) -> MutationJson {
    MutationJson {
        vertex: trace.vertex.clone(),
        qp: qp_to_json(trace.result()),
        provenance: trace.premutation.provenance.clone(),
        trivial_pairs: pair_ids(trace.split.quiver(), &trace.split.trivial_pairs),
    }
}

pub fn rep_to_json(dm: &DecoratedRep) -> RepJson {
    let q = dm.quiver();
    let rep = &dm.rep;
    let dims = q.vertices().iter().cloned().zip(rep.dims().iter().copied()).collect();
    let maps = q
        .arrows()
        .iter()
        .zip(rep.maps())
        .map(|(a, m)| (a.id.clone(), m.to_rows().iter().map(|r| r.iter().map(format_rational).collect()).collect()))
        .collect();
    let decoration = q.vertices().iter().cloned().zip(dm.decoration.iter().copied()).collect();
    RepJson { quiver: Some((**q).clone()), dims, maps, decoration }
}

/// Reads a decorated representation over its own quiver, or over
/// `fallback` when the file has none. Unlisted vertices get dimension 0 and
/// unlisted arrows the zero map.
pub fn rep_from_json(j: &RepJson, fallback: Option<&Arc<Quiver>>) -> Result<DecoratedRep> {
    let q = match (&j.quiver, fallback) {
        (Some(q), _) => Arc::new(q.clone()),
        (None, Some(q)) => q.clone(),
        (None, None) => return Err(Error::Parse("representation has no quiver".into())),
    };
    let mut dims = vec![0; q.num_vertices()];
    for (v, &d) in &j.dims {
        dims[q.vertex_index(v)?] = d;
    }
    let mut maps: Vec<RatMatrix> = q.arrows().iter().map(|a| RatMatrix::zeros(dims[a.head], dims[a.tail])).collect();
    for (id, rows) in &j.maps {
        let i = q.arrow_index(id)?;
        let a = q.arrow(i);
        let data = rows.iter().map(|r| r.iter().map(|s| parse_rational(s)).collect()).collect::<Result<Vec<_>>>()?;
        maps[i] = RatMatrix::from_rows_with_shape(dims[a.head], dims[a.tail], data)
            .map_err(|e| Error::ShapeMismatch(format!("map of {id}: {e}")))?;
    }
    let mut decoration = vec![0; q.num_vertices()];
    for (v, &d) in &j.decoration {
        decoration[q.vertex_index(v)?] = d;
    }
    DecoratedRep::new(Representation::new(q, dims, maps)?, decoration)
}

/// Parses JSON text, mapping syntax errors to [`Error::Parse`].
pub fn from_str<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

/// Pretty JSON with a trailing newline.
pub fn to_string<T: Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(x).expect("formats serialize infallibly");
    s.push('\n');
    s
}
