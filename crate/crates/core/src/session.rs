//! Exploration sessions: a history tree of QP mutations.
//!
//! Node ids are assigned in creation order (`n0` is the root), and repeating
//! a mutation that was already explored moves to the existing child instead
//! of growing the tree. So replaying the same actions from the same initial
//! QP always yields the same tree.

use std::collections::BTreeMap;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::{qp_from_json, qp_to_json, QpJson};
use crate::jacobian::{jacobian_dims, DimsReport, Qp};
use crate::mutation::mutate_qp;
use crate::quiver::Quiver;

#[derive(Debug, Clone)]
struct Node {
    parent: Option<usize>,
    vertex: Option<String>,
    qp: Qp,
    children: BTreeMap<String, usize>,
}

#[derive(Debug, Clone)]
pub struct Session {
    id: String,
    created_at: u64,
    nodes: Vec<Node>,
    current: usize,
}

/// One history node as reported to clients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeSummary {
    pub id: String,
    pub parent: Option<String>,
    /// Vertex mutated to reach this node from its parent.
    pub vertex: Option<String>,
    pub children: Vec<String>,
    pub num_arrows: usize,
    pub num_terms: usize,
    pub order: usize,
    pub two_acyclic: bool,
}

/// Full session state returned by the server.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionState {
    pub id: String,
    pub created_at: u64,
    pub current: String,
    pub history: Vec<NodeSummary>,
    pub quiver: Quiver,
    pub qp: QpJson,
    pub jacobian_dims: DimsReport,
}

/// Persistent form of a session.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SessionSnapshot {
    pub id: String,
    pub created_at: u64,
    pub current: String,
    pub nodes: Vec<NodeSnapshot>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NodeSnapshot {
    pub parent: Option<String>,
    pub vertex: Option<String>,
    pub qp: QpJson,
}

fn node_id(i: usize) -> String {
    format!("n{i}")
}

fn parse_node_id(s: &str, len: usize) -> Result<usize> {
    s.strip_prefix('n')
        .and_then(|n| n.parse::<usize>().ok())
        .filter(|&i| i < len && node_id(i) == s)
        .ok_or_else(|| Error::UnknownNode(s.to_string()))
}

impl Session {
    pub fn new(id: impl Into<String>, qp: Qp) -> Self {
        let created_at = SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs());
        let root = Node { parent: None, vertex: None, qp, children: BTreeMap::new() };
        Session { id: id.into(), created_at, nodes: vec![root], current: 0 }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn current_id(&self) -> String {
        node_id(self.current)
    }

    pub fn current_qp(&self) -> &Qp {
        &self.nodes[self.current].qp
    }

    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    /// Mutates the current QP at `k` and moves to the result.
    pub fn mutate(&mut self, k: &str) -> Result<String> {
        if let Some(&child) = self.nodes[self.current].children.get(k) {
            self.current = child;
            return Ok(node_id(child));
        }
        let qp = mutate_qp(self.current_qp(), k)?;
        let i = self.nodes.len();
        self.nodes.push(Node { parent: Some(self.current), vertex: Some(k.to_string()), qp, children: BTreeMap::new() });
        self.nodes[self.current].children.insert(k.to_string(), i);
        self.current = i;
        Ok(node_id(i))
    }

    pub fn checkout(&mut self, node: &str) -> Result<()> {
        self.current = parse_node_id(node, self.nodes.len())?;
        Ok(())
    }

    /// The history tree alone, without the current QP.
    pub fn history(&self) -> Vec<NodeSummary> {
        self.nodes
            .iter()
            .enumerate()
            .map(|(i, n)| NodeSummary {
                id: node_id(i),
                parent: n.parent.map(node_id),
                vertex: n.vertex.clone(),
                children: n.children.values().copied().map(node_id).collect(),
                num_arrows: n.qp.quiver().num_arrows(),
                num_terms: n.qp.potential().terms().len(),
                order: n.qp.order(),
                two_acyclic: n.qp.quiver().is_two_acyclic(),
            })
            .collect()
    }

    pub fn state(&self) -> SessionState {
        let qp = self.current_qp();
        SessionState {
            id: self.id.clone(),
            created_at: self.created_at,
            current: self.current_id(),
            history: self.history(),
            quiver: (**qp.quiver()).clone(),
            qp: qp_to_json(qp),
            jacobian_dims: jacobian_dims(qp).report(),
        }
    }

    pub fn snapshot(&self) -> SessionSnapshot {
        SessionSnapshot {
            id: self.id.clone(),
            created_at: self.created_at,
            current: self.current_id(),
            nodes: self
                .nodes
                .iter()
                .map(|n| NodeSnapshot { parent: n.parent.map(node_id), vertex: n.vertex.clone(), qp: qp_to_json(&n.qp) })
                .collect(),
        }
    }

    pub fn restore(s: &SessionSnapshot) -> Result<Self> {
        let mut nodes: Vec<Node> = Vec::with_capacity(s.nodes.len());
        for (i, n) in s.nodes.iter().enumerate() {
            let parent = n.parent.as_deref().map(|p| parse_node_id(p, i)).transpose()?;
            let vertex = n.vertex.clone();
            match (parent, &vertex) {
                (Some(p), Some(v)) => {
                    nodes[p].children.insert(v.clone(), i);
                }
                (None, None) if i == 0 => {}
                _ => return Err(Error::Parse(format!("malformed history node {}", node_id(i)))),
            }
            nodes.push(Node { parent, vertex, qp: qp_from_json(&n.qp)?, children: BTreeMap::new() });
        }
        if nodes.is_empty() {
            return Err(Error::Parse("session without a root node".into()));
        }
        let current = parse_node_id(&s.current, nodes.len())?;
        Ok(Session { id: s.id.clone(), created_at: s.created_at, nodes, current })
    }
}
