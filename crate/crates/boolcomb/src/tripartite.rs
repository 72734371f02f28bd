//! Partitions of the edge set of K_n into two complete tripartite subgraphs.
//!
//! A complete tripartite subgraph is given by three disjoint (possibly empty)
//! vertex parts; its edges join vertices in different parts. Edge sets are
//! bitmasks over the pairs {u, v}, u < v, in lexicographic order.

use std::collections::BTreeMap;

use crate::canon::permutations;
use crate::CombError;

pub const MAX_VERTICES: usize = 7;

/// Three vertex parts, each a bitmask over vertices 0..n.
pub type Parts = [u32; 3];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripartitePair {
    pub first: Parts,
    pub second: Parts,
    pub first_edges: u32,
    pub second_edges: u32,
}

pub fn edge_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    // pairs before row u, then offset within the row
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

pub fn edges_of(n: usize, parts: &Parts) -> u32 {
    let mut e = 0;
    for u in 0..n {
        for v in u + 1..n {
            let pu = parts.iter().position(|p| p >> u & 1 == 1);
            let pv = parts.iter().position(|p| p >> v & 1 == 1);
            if let (Some(a), Some(b)) = (pu, pv) {
                if a != b {
                    e |= 1 << edge_index(n, u, v);
                }
            }
        }
    }
    e
}

fn complete(n: usize) -> u32 {
    let m = n * (n - 1) / 2;
    if m == 0 {
        0
    } else {
        u32::MAX >> (32 - m)
    }
}

/// All unordered pairs of complete tripartite edge sets partitioning E(K_n),
/// one representative parts triple per edge set.
pub fn tripartite_2_partitions(n: usize) -> Result<Vec<TripartitePair>, CombError> {
    if !(2..=MAX_VERTICES).contains(&n) {
        return Err(CombError::SizeCap(format!("tripartite search supports 2..={MAX_VERTICES} vertices, got {n}")));
    }
    let mut by_edges: BTreeMap<u32, Parts> = BTreeMap::new();
    for code in 0..4usize.pow(n as u32) {
        let mut parts = [0u32; 3];
        let mut c = code;
        for v in 0..n {
            let label = c % 4;
            c /= 4;
            if label > 0 {
                parts[label - 1] |= 1 << v;
            }
        }
        by_edges.entry(edges_of(n, &parts)).or_insert(parts);
    }
    let all = complete(n);
    let mut out = Vec::new();
    for (&e, &p) in &by_edges {
        let rest = all & !e;
        if e <= rest {
            if let Some(&q) = by_edges.get(&rest) {
                out.push(TripartitePair { first: p, second: q, first_edges: e, second_edges: rest });
            }
        }
    }
    Ok(out)
}

fn permute_edges(n: usize, e: u32, perm: &[usize]) -> u32 {
    let mut out = 0;
    for u in 0..n {
        for v in u + 1..n {
            if e >> edge_index(n, u, v) & 1 == 1 {
                out |= 1 << edge_index(n, perm[u], perm[v]);
            }
        }
    }
    out
}

/// Least (sorted) pair of edge masks over all vertex relabelings.
pub fn canonical_pair(n: usize, a: u32, b: u32) -> (u32, u32) {
    permutations(n)
        .iter()
        .map(|p| {
            let (x, y) = (permute_edges(n, a, p), permute_edges(n, b, p));
            (x.min(y), x.max(y))
        })
        .min()
        .unwrap()
}
