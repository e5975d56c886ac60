//! Directed graphs whose edges carry a positive integer color.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Vertices plus a set of colored edges `(source, target, color)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DigraphRepr", into = "DigraphRepr")]
pub struct ColoredDigraph {
    vertices: Vec<String>,
    edges: Vec<(usize, usize, u32)>,
}

#[derive(Serialize, Deserialize)]
struct DigraphRepr {
    vertices: Vec<String>,
    edges: Vec<(String, String, u32)>,
}

impl TryFrom<DigraphRepr> for ColoredDigraph {
    type Error = Error;

    fn try_from(r: DigraphRepr) -> Result<Self> {
        ColoredDigraph::new(r.vertices, r.edges)
    }
}

impl From<ColoredDigraph> for DigraphRepr {
    fn from(d: ColoredDigraph) -> Self {
        let edges = d
            .edges
            .iter()
            .map(|&(s, t, c)| (d.vertices[s].clone(), d.vertices[t].clone(), c))
            .collect();
        DigraphRepr {
            vertices: d.vertices,
            edges,
        }
    }
}

impl ColoredDigraph {
    pub fn new<S: Into<String>>(vertices: Vec<String>, edges: Vec<(S, S, u32)>) -> Result<Self> {
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicatePoint(v.clone()));
            }
        }
        let find = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::NoSuchVertex(name.to_string()))
        };
        let mut indexed = Vec::with_capacity(edges.len());
        for (s, t, c) in edges {
            let (s, t) = (s.into(), t.into());
            indexed.push((find(&s)?, find(&t)?, c));
        }
        ColoredDigraph::from_indexed(vertices, indexed)
    }

    /// Builds from vertex-index edges, validating loops, colors and
    /// duplicates.
    pub fn from_indexed(vertices: Vec<String>, mut edges: Vec<(usize, usize, u32)>) -> Result<Self> {
        for &(s, t, c) in &edges {
            if s >= vertices.len() {
                return Err(Error::NoSuchVertex(s.to_string()));
            }
            if t >= vertices.len() {
                return Err(Error::NoSuchVertex(t.to_string()));
            }
            if s == t {
                return Err(Error::SelfLoop(vertices[s].clone()));
            }
            if c == 0 {
                return Err(Error::ZeroColor);
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            let (s, t, c) = w[0];
            return Err(Error::DuplicateEdge(vertices[s].clone(), vertices[t].clone(), c));
        }
        Ok(ColoredDigraph { vertices, edges })
    }

    /// Unnamed vertices `"0"`, `"1"`, ...
    pub fn with_vertex_count(n: usize, edges: Vec<(usize, usize, u32)>) -> Result<Self> {
        ColoredDigraph::from_indexed((0..n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// Edges sorted by `(source, target, color)`.
    pub fn edges(&self) -> &[(usize, usize, u32)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.1 == v).count()
    }

    /// Same graph with every edge recolored to 1 (duplicates merged).
    pub fn uncolored(&self) -> ColoredDigraph {
        let mut edges: Vec<_> = self.edges.iter().map(|&(s, t, _)| (s, t, 1)).collect();
        edges.sort_unstable();
        edges.dedup();
        ColoredDigraph {
            vertices: self.vertices.clone(),
            edges,
        }
    }

    /// Whether `perm` maps the edge set onto itself, colors included.
    pub fn is_automorphism(&self, perm: &Permutation) -> bool {
        if perm.degree() != self.vertex_count() {
            return false;
        }
        let set: HashSet<(usize, usize, u32)> = self.edges.iter().copied().collect();
        self.edges
            .iter()
            .all(|&(s, t, c)| set.contains(&(perm.apply(s), perm.apply(t), c)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("digraph serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}
