//! The graphs G_2n (even-weight strings) and H_2n (odd-weight strings) with
//! edges between strings at Hamming distance 2, and independent sets in them.
//!
//! A string x_1..x_m is stored as an integer with x_1 the most significant bit.

use std::collections::HashMap;

use crate::bits::Bits;
use crate::CombError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// Largest string length accepted by the graph constructors.
pub const MAX_LEN: usize = 10;

#[derive(Debug, Clone)]
pub struct BitGraph {
    len: usize,
    parity: Parity,
    vertices: Vec<u32>,
    index: HashMap<u32, usize>,
    adj: Vec<Bits>,
}

pub fn weight(x: u32) -> u32 {
    x.count_ones()
}

/// Render a string of the given length, x_1 first.
pub fn to_bitstring(x: u32, len: usize) -> String {
    (0..len).map(|k| if x >> (len - 1 - k) & 1 == 1 { '1' } else { '0' }).collect()
}

pub fn from_bitstring(s: &str) -> Option<u32> {
    if s.is_empty() || s.len() > 32 {
        return None;
    }
    s.chars().try_fold(0u32, |acc, c| match c {
        '0' => Some(acc << 1),
        '1' => Some(acc << 1 | 1),
        _ => None,
    })
}

impl BitGraph {
    pub fn new(len: usize, parity: Parity) -> Result<Self, CombError> {
        if len == 0 || len % 2 == 1 || len > MAX_LEN {
            return Err(CombError::SizeCap(format!("string length {len} must be even and at most {MAX_LEN}")));
        }
        let want = if parity == Parity::Even { 0 } else { 1 };
        let vertices: Vec<u32> = (0..1u32 << len).filter(|&x| weight(x) % 2 == want).collect();
        let index: HashMap<u32, usize> = vertices.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut adj = vec![Bits::new(vertices.len()); vertices.len()];
        for (i, &u) in vertices.iter().enumerate() {
            for a in 0..len {
                for b in a + 1..len {
                    let v = u ^ (1 << a) ^ (1 << b);
                    adj[i].insert(index[&v]);
                }
            }
        }
        Ok(BitGraph { len, parity, vertices, index, adj })
    }

    /// G_2n.
    pub fn even(len: usize) -> Result<Self, CombError> {
        Self::new(len, Parity::Even)
    }

    /// H_2n.
    pub fn odd(len: usize) -> Result<Self, CombError> {
        Self::new(len, Parity::Odd)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn contains(&self, x: u32) -> bool {
        self.index.contains_key(&x)
    }

    pub fn adjacent(&self, u: u32, v: u32) -> bool {
        weight(u ^ v) == 2
    }

    pub fn degree(&self, x: u32) -> usize {
        self.adj[self.index[&x]].count()
    }

    pub fn is_independent(&self, set: &[u32]) -> bool {
        set.iter().all(|&u| self.contains(u))
            && set.iter().enumerate().all(|(k, &u)| set[k + 1..].iter().all(|&v| u != v && !self.adjacent(u, v)))
    }

    /// True when `map` (given on every vertex) is a bijective graph automorphism.
    pub fn is_automorphism(&self, map: &HashMap<u32, u32>) -> bool {
        if map.len() != self.vertices.len() {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        for &u in &self.vertices {
            match map.get(&u) {
                Some(&v) if self.contains(v) && seen.insert(v) => {}
                _ => return false,
            }
        }
        self.vertices.iter().all(|&u| {
            self.vertices.iter().all(|&v| self.adjacent(u, v) == self.adjacent(map[&u], map[&v]))
        })
    }

    /// Exact maximum independent set by branch and bound with a greedy
    /// clique-cover bound. Returns the size and a witness.
    pub fn max_independent_set(&self) -> Result<(usize, Vec<u32>), CombError> {
        if self.len > EXACT_MIS_LEN {
            return Err(CombError::SizeCap(format!(
                "exact independence number is supported up to length {EXACT_MIS_LEN}; use independence_bounds"
            )));
        }
        let mut s = Search::new(self, Mode::Maximum, usize::MAX);
        s.run();
        let w = s.best_set.iter().map(|&i| self.vertices[i]).collect();
        Ok((s.best, w))
    }

    /// Every independent set of exactly `size` vertices, assuming no larger one exists.
    pub fn all_independent_sets_of_size(&self, size: usize) -> Result<Vec<Vec<u32>>, CombError> {
        if self.len > EXACT_MIS_LEN {
            return Err(CombError::SizeCap(format!("enumeration is supported up to length {EXACT_MIS_LEN}")));
        }
        let mut s = Search::new(self, Mode::AllOfSize(size), usize::MAX);
        s.run();
        Ok(s.found.into_iter().map(|set| set.into_iter().map(|i| self.vertices[i]).collect()).collect())
    }

    /// Best independent set found within a node budget (a lower bound only).
    pub fn greedy_search(&self, node_budget: usize) -> Vec<u32> {
        let mut s = Search::new(self, Mode::Maximum, node_budget);
        s.run();
        s.best_set.iter().map(|&i| self.vertices[i]).collect()
    }
}

/// Longest strings for which the exact search is run.
pub const EXACT_MIS_LEN: usize = 8;

enum Mode {
    Maximum,
    AllOfSize(usize),
}

struct Search<'g> {
    g: &'g BitGraph,
    mode: Mode,
    best: usize,
    best_set: Vec<usize>,
    found: Vec<Vec<usize>>,
    current: Vec<usize>,
    nodes: usize,
    budget: usize,
}

impl<'g> Search<'g> {
    fn new(g: &'g BitGraph, mode: Mode, budget: usize) -> Self {
        Search { g, mode, best: 0, best_set: vec![], found: vec![], current: vec![], nodes: 0, budget }
    }

    fn run(&mut self) {
        let all = Bits::full(self.g.vertex_count());
        self.expand(all);
    }

    // Partition the candidates into cliques; each clique holds at most one
    // member of an independent set. Returns vertices with their class number.
    fn clique_cover(&self, cand: &Bits) -> Vec<(usize, usize)> {
        let mut rest = cand.clone();
        let mut order = Vec::new();
        let mut class = 0;
        while !rest.is_empty() {
            class += 1;
            let mut open = rest.clone();
            while let Some(v) = open.first() {
                open.remove(v);
                rest.remove(v);
                open.and_with(&self.g.adj[v]);
                order.push((v, class));
            }
        }
        order
    }

    fn expand(&mut self, mut cand: Bits) {
        self.nodes += 1;
        if self.nodes > self.budget {
            return;
        }
        let order = self.clique_cover(&cand);
        for &(v, bound) in order.iter().rev() {
            let reach = self.current.len() + bound;
            match self.mode {
                Mode::Maximum if reach <= self.best => return,
                Mode::AllOfSize(k) if reach < k => return,
                _ => {}
            }
            self.current.push(v);
            let mut next = cand.clone();
            next.and_not_with(&self.g.adj[v]);
            next.remove(v);
            let size = self.current.len();
            match self.mode {
                Mode::Maximum => {
                    if size > self.best {
                        self.best = size;
                        self.best_set = self.current.clone();
                    }
                }
                Mode::AllOfSize(k) => {
                    if size == k {
                        let mut s = self.current.clone();
                        s.sort_unstable();
                        self.found.push(s);
                    }
                }
            }
            if !next.is_empty() && !matches!(self.mode, Mode::AllOfSize(k) if size >= k) {
                self.expand(next);
            }
            self.current.pop();
            cand.remove(v);
            if self.nodes > self.budget {
                return;
            }
        }
    }
}

/// Bounds on the independence number of G_len.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceBounds {
    pub len: usize,
    pub lower: usize,
    pub witness: Vec<u32>,
    pub upper: usize,
}

impl IndependenceBounds {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// Outcome of splitting G_len by its first two coordinates into four copies
/// of G_{len-2} / H_{len-2} and asking whether every copy can hold a maximum
/// independent set simultaneously.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitReport {
    /// Independence number of G_{len-2}.
    pub part_alpha: usize,
    /// Number of maximum independent sets of G_{len-2}.
    pub part_optima: usize,
    /// Whether an independent set of size 4 * part_alpha exists in G_len.
    pub four_fold_attained: bool,
}

/// Decide whether alpha(G_len) reaches 4 * alpha(G_{len-2}).
///
/// The four parts (prefix 00, 01, 10, 11) induce G, H, H, G on the suffix.
/// A set of size 4 * alpha must restrict to a maximum independent set on each
/// part, so it is enough to combine all optimal sets of the parts subject to
/// the cross constraints: prefixes 00/11 (and 01/10) need disjoint suffix
/// sets, and mixed-parity prefixes forbid suffixes at distance 1.
pub fn split_bound(len: usize) -> Result<SplitReport, CombError> {
    if len < 4 || len % 2 == 1 || len > EXACT_MIS_LEN + 2 {
        return Err(CombError::SizeCap(format!("split bound needs even length in 4..={}", EXACT_MIS_LEN + 2)));
    }
    let sub = len - 2;
    let g = BitGraph::even(sub)?;
    let (alpha, _) = g.max_independent_set()?;
    let evens = g.all_independent_sets_of_size(alpha)?;
    // flipping the first suffix bit is an isomorphism onto H_{len-2}
    let flip = 1u32 << (sub - 1);
    let odds: Vec<Vec<u32>> = evens.iter().map(|s| s.iter().map(|&x| x ^ flip).collect()).collect();

    let mask = |s: &Vec<u32>| {
        let mut b = Bits::new(1 << sub);
        for &x in s {
            b.insert(x as usize);
        }
        b
    };
    let even_masks: Vec<Bits> = evens.iter().map(mask).collect();
    let odd_masks: Vec<Bits> = odds.iter().map(mask).collect();
    // neighbourhood at distance 1 of each even optimum
    let even_shadow: Vec<Bits> = evens
        .iter()
        .map(|s| {
            let mut b = Bits::new(1 << sub);
            for &x in s {
                for k in 0..sub {
                    b.insert((x ^ (1 << k)) as usize);
                }
            }
            b
        })
        .collect();
    let compatible: Vec<Vec<usize>> = even_shadow
        .iter()
        .map(|sh| (0..odds.len()).filter(|&j| !sh.intersects(&odd_masks[j])).collect())
        .collect();

    let mut attained = false;
    'outer: for a in 0..evens.len() {
        for d in a + 1..evens.len() {
            if even_masks[a].intersects(&even_masks[d]) {
                continue;
            }
            let both: Vec<usize> = compatible[a].iter().copied().filter(|j| compatible[d].contains(j)).collect();
            for (p, &b) in both.iter().enumerate() {
                for &c in &both[p + 1..] {
                    if !odd_masks[b].intersects(&odd_masks[c]) {
                        attained = true;
                        break 'outer;
                    }
                }
            }
        }
    }
    Ok(SplitReport { part_alpha: alpha, part_optima: evens.len(), four_fold_attained: attained })
}

/// Independence number of G_len: exact up to length 8; for length 10 an
/// exact upper bound from `split_bound` and a searched lower bound.
pub fn independence_bounds(len: usize, lower_budget: usize) -> Result<IndependenceBounds, CombError> {
    if len <= EXACT_MIS_LEN {
        let g = BitGraph::even(len)?;
        let (a, w) = g.max_independent_set()?;
        return Ok(IndependenceBounds { len, lower: a, witness: w, upper: a });
    }
    if len > MAX_LEN {
        return Err(CombError::SizeCap(format!("length {len} exceeds {MAX_LEN}")));
    }
    let rep = split_bound(len)?;
    let upper = if rep.four_fold_attained { 4 * rep.part_alpha } else { 4 * rep.part_alpha - 1 };
    let g = BitGraph::even(len)?;
    let witness = g.greedy_search(lower_budget);
    Ok(IndependenceBounds { len, lower: witness.len(), witness, upper })
}

/// The set I_6 = {000000, 001111, 110011, 111100}.
pub fn i6() -> Vec<u32> {
    ["000000", "001111", "110011", "111100"].iter().map(|s| from_bitstring(s).unwrap()).collect()
}

/// The 16 strings of I_8 (the support of the signature f_8).
pub fn i8_set() -> Vec<u32> {
    [
        "00000000", "00001111", "00110011", "00111100", "01010101", "01011010", "01100110", "01101001",
        "10010110", "10011001", "10100101", "10101010", "11000011", "11001100", "11110000", "11111111",
    ]
    .iter()
    .map(|s| from_bitstring(s).unwrap())
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape() {
        let g = BitGraph::even(6).unwrap();
        assert_eq!(g.vertex_count(), 32);
        assert!(g.vertices().iter().all(|&x| g.degree(x) == 15));
        assert!(BitGraph::even(7).is_err());
        assert!(BitGraph::even(12).is_err());
    }

    #[test]
    fn small_alphas() {
        assert_eq!(BitGraph::even(4).unwrap().max_independent_set().unwrap().0, 2);
        let (a, w) = BitGraph::even(6).unwrap().max_independent_set().unwrap();
        assert_eq!(a, 4);
        assert!(BitGraph::even(6).unwrap().is_independent(&w));
    }

    #[test]
    fn listed_sets_are_independent() {
        assert!(BitGraph::even(6).unwrap().is_independent(&i6()));
        assert!(BitGraph::even(8).unwrap().is_independent(&i8_set()));
    }

    #[test]
    fn bitstrings() {
        assert_eq!(to_bitstring(0b0011, 4), "0011");
        assert_eq!(from_bitstring("0011"), Some(3));
        assert_eq!(from_bitstring("01x"), None);
    }
}
