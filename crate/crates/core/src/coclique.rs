//! Exact maximum cocliques (independent sets) of prime graphs.
//!
//! Graphs are small (at most 64 vertices), so vertex sets are `u64` masks
//! indexed by position in the ascending vertex list. The independence number
//! comes from a branch-and-bound search; the witness is then built greedily
//! in ascending vertex order, taking each vertex whenever a maximum coclique
//! still extends the current choice. That yields the lexicographically
//! smallest maximum coclique.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gkgraph::GkGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CocliqueResult {
    pub size: usize,
    /// Ascending.
    pub witness: Vec<u64>,
    pub anchored_at: Option<u64>,
}

struct Masks {
    /// `adj[i]` has bit `j` set iff vertices `i` and `j` are adjacent.
    adj: Vec<u64>,
    all: u64,
}

impl Masks {
    fn new(graph: &GkGraph) -> Result<Self> {
        let n = graph.vertex_count();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > 64 {
            return Err(Error::GraphTooLarge(n));
        }
        let mut adj = vec![0u64; n];
        for (a, b) in graph.edges() {
            let (i, j) = (graph.index_of(a)?, graph.index_of(b)?);
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Ok(Self { adj, all })
    }

    /// Independence number of the subgraph induced on `candidates`.
    fn alpha(&self, candidates: u64) -> usize {
        let mut best = 0;
        self.branch(candidates, 0, &mut best);
        best
    }

    fn branch(&self, mut candidates: u64, taken: usize, best: &mut usize) {
        // vertices with no neighbor among the candidates are always taken
        let mut taken = taken;
        let mut scan = candidates;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            if self.adj[v] & candidates == 0 {
                candidates &= !(1 << v);
                taken += 1;
            }
        }
        if taken + candidates.count_ones() as usize <= *best {
            return;
        }
        if candidates == 0 {
            *best = taken;
            return;
        }
        // branch on the candidate of highest degree
        let mut v = candidates.trailing_zeros() as usize;
        let mut deg = 0;
        let mut scan = candidates;
        while scan != 0 {
            let u = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let d = (self.adj[u] & candidates).count_ones();
            if d > deg {
                deg = d;
                v = u;
            }
        }
        let without_v = candidates & !(1 << v);
        self.branch(without_v & !self.adj[v], taken + 1, best);
        self.branch(without_v, taken, best);
    }

    /// Lexicographically smallest coclique of size `target` that contains
    /// `forced` and lies inside `forced | candidates`.
    fn lex_smallest(&self, forced: u64, candidates: u64, target: usize) -> u64 {
        let mut chosen = forced;
        let mut pool = candidates;
        for v in 0..self.adj.len() {
            let bit = 1u64 << v;
            if chosen & bit != 0 || pool & bit == 0 {
                continue;
            }
            let next_pool = pool & !self.adj[v] & !(bit | (bit - 1));
            let have = chosen.count_ones() as usize + 1;
            if have + self.alpha(next_pool) >= target {
                chosen |= bit;
                pool = next_pool;
            } else {
                pool &= !bit;
            }
        }
        chosen
    }
}

fn mask_to_vertices(graph: &GkGraph, mask: u64) -> Vec<u64> {
    graph
        .vertices()
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, &v)| v)
        .collect()
}

/// Independence number with the lexicographically smallest maximum coclique.
pub fn max_coclique(graph: &GkGraph) -> Result<CocliqueResult> {
    let masks = Masks::new(graph)?;
    let size = masks.alpha(masks.all);
    let witness = masks.lex_smallest(0, masks.all, size);
    Ok(CocliqueResult {
        size,
        witness: mask_to_vertices(graph, witness),
        anchored_at: None,
    })
}

/// Largest coclique that contains `v`.
pub fn max_coclique_containing(graph: &GkGraph, v: u64) -> Result<CocliqueResult> {
    let masks = Masks::new(graph)?;
    let i = graph.index_of(v)?;
    let forced = 1u64 << i;
    let pool = masks.all & !masks.adj[i] & !forced;
    let size = 1 + masks.alpha(pool);
    let witness = masks.lex_smallest(forced, pool, size);
    Ok(CocliqueResult {
        size,
        witness: mask_to_vertices(graph, witness),
        anchored_at: Some(v),
    })
}
