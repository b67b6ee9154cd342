use std::collections::{BTreeMap, BTreeSet};

use crate::arith::is_prime;
use crate::error::{Error, Result};

/// A Gruenberg-Kegel graph: vertices are primes, edges unordered pairs.
///
/// Vertices are kept ascending and each edge is stored once as
/// `(smaller, larger)`, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GkGraph {
    vertices: Vec<u64>,
    edges: BTreeSet<(u64, u64)>,
}

impl GkGraph {
    /// Builds a graph, rejecting non-prime vertices, self-loops and edges
    /// with an endpoint outside the vertex set.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = u64>,
        E: IntoIterator<Item = (u64, u64)>,
    {
        let vertices: BTreeSet<u64> = vertices.into_iter().collect();
        if let Some(v) = vertices.iter().find(|v| !is_prime(*v)) {
            return Err(Error::InvalidGraph(format!("vertex {v} is not prime")));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at {a}")));
            }
            for v in [a, b] {
                if !vertices.contains(&v) {
                    return Err(Error::InvalidGraph(format!(
                        "edge {a}--{b} has endpoint {v} outside the vertex set"
                    )));
                }
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Self {
            vertices: vertices.into_iter().collect(),
            edges: set,
        })
    }

    pub fn edgeless<V: IntoIterator<Item = u64>>(vertices: V) -> Result<Self> {
        Self::new(vertices, [])
    }

    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    /// Edges as `(smaller, larger)`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.edges.iter().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: u64) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn has_edge(&self, a: u64, b: u64) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub(crate) fn index_of(&self, v: u64) -> Result<usize> {
        self.vertices
            .binary_search(&v)
            .map_err(|_| Error::NotAVertex(v))
    }

    /// Neighbors of `v`, ascending.
    pub fn neighbors(&self, v: u64) -> Result<Vec<u64>> {
        self.index_of(v)?;
        Ok(self
            .vertices
            .iter()
            .copied()
            .filter(|&u| u != v && self.has_edge(u, v))
            .collect())
    }

    pub fn degree(&self, v: u64) -> Result<usize> {
        self.neighbors(v).map(|n| n.len())
    }

    /// Vertices other than `v` not adjacent to `v`, ascending.
    pub fn nonneighbors(&self, v: u64) -> Result<Vec<u64>> {
        self.index_of(v)?;
        Ok(self
            .vertices
            .iter()
            .copied()
            .filter(|&u| u != v && !self.has_edge(u, v))
            .collect())
    }

    /// Connected components, each ascending, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<u64>> {
        let mut parent: BTreeMap<u64, u64> = self.vertices.iter().map(|&v| (v, v)).collect();
        fn root(parent: &mut BTreeMap<u64, u64>, v: u64) -> u64 {
            let mut r = v;
            while parent[&r] != r {
                r = parent[&r];
            }
            parent.insert(v, r);
            r
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
            if ra != rb {
                parent.insert(ra.max(rb), ra.min(rb));
            }
        }
        let mut groups: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for &v in &self.vertices {
            let r = root(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// True when every pair of distinct vertices in `set` is adjacent.
    pub fn is_clique(&self, set: &[u64]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &a)| set[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    /// True when no two vertices in `set` are adjacent.
    pub fn is_coclique(&self, set: &[u64]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &a)| set[i + 1..].iter().all(|&b| a != b && !self.has_edge(a, b)))
    }

    /// Adds an edge; both endpoints must already be vertices.
    pub fn with_edge(&self, a: u64, b: u64) -> Result<Self> {
        Self::new(
            self.vertices.iter().copied(),
            self.edges().chain(std::iter::once((a, b))),
        )
    }
}

/// Vertices of `graph` other than `v` that are not adjacent to `v`.
pub fn nonneighbors_of(graph: &GkGraph, v: u64) -> Result<Vec<u64>> {
    graph.nonneighbors(v)
}
