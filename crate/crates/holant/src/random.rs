//! Seeded generators for signatures, grids and tensor products. All draws go
//! through a caller-supplied RNG so runs are reproducible.

use rand::seq::SliceRandom;
use rand::Rng;

use exact_field::ExactNumber;

use crate::factor::is_irreducible;
use crate::gadget::SignatureGrid;
use crate::holographic::Transform2x2;
use crate::signature::Signature;

/// Integer entries drawn uniformly from -k..=k.
pub fn small_int_signature<R: Rng>(rng: &mut R, arity: usize, k: i64) -> Signature {
    let vals: Vec<i64> = (0..1usize << arity).map(|_| rng.gen_range(-k..=k)).collect();
    Signature::from_ints(&vals)
}

/// A nonzero irreducible signature of the given arity (arity >= 1).
pub fn irreducible_signature<R: Rng>(rng: &mut R, arity: usize) -> Signature {
    loop {
        let s = small_int_signature(rng, arity, 3);
        if !s.is_zero() && is_irreducible(&s).unwrap_or(false) {
            return s;
        }
    }
}

/// A tensor product of irreducible blocks over a random partition of 1..=arity.
/// Returns the product and its blocks (ascending variables, block signature).
pub fn random_product<R: Rng>(rng: &mut R, arity: usize, max_block: usize) -> (Signature, Vec<(Vec<usize>, Signature)>) {
    let mut vars: Vec<usize> = (1..=arity).collect();
    vars.shuffle(rng);
    let mut blocks = Vec::new();
    let mut rest = &vars[..];
    while !rest.is_empty() {
        let k = rng.gen_range(1..=max_block.min(rest.len()));
        let (head, tail) = rest.split_at(k);
        let mut b = head.to_vec();
        b.sort_unstable();
        blocks.push((b.clone(), irreducible_signature(rng, k)));
        rest = tail;
    }
    let mut f = Signature::scalar(ExactNumber::one());
    // f's variables are always the ascending list `placed`
    let mut placed: Vec<usize> = Vec::new();
    for (b, s) in &blocks {
        let mut next = placed.clone();
        next.extend(b.iter().copied());
        next.sort_unstable();
        let rank = |v: &usize| next.iter().position(|w| w == v).unwrap() + 1;
        let placement: Vec<usize> = placed.iter().chain(b.iter()).map(rank).collect();
        f = f.tensor_placed(s, &placement).expect("valid placement");
        placed = next;
    }
    (f, blocks)
}

/// A closed bipartite grid with at most `max_edges` edges and integer
/// signatures. Returns the grid and the side flags (true = left).
pub fn random_bipartite_grid<R: Rng>(rng: &mut R, max_edges: usize) -> (SignatureGrid, Vec<bool>) {
    let edges = rng.gen_range(1..=max_edges);
    let (nl, nr) = (rng.gen_range(1..=3usize), rng.gen_range(1..=3usize));
    let pairs: Vec<(usize, usize)> = (0..edges).map(|_| (rng.gen_range(0..nl), rng.gen_range(0..nr))).collect();
    let mut degree = vec![0usize; nl + nr];
    for &(l, r) in &pairs {
        degree[l] += 1;
        degree[nl + r] += 1;
    }
    let mut grid = SignatureGrid::new();
    let mut index = vec![usize::MAX; nl + nr];
    let mut side = Vec::new();
    for v in 0..nl + nr {
        if degree[v] > 0 {
            let s = small_int_signature(rng, degree[v], 2);
            index[v] = grid.add_vertex(format!("v{v}"), "random", s);
            side.push(v < nl);
        }
    }
    let mut used = vec![0usize; nl + nr];
    for &(l, r) in &pairs {
        used[l] += 1;
        used[nl + r] += 1;
        grid.add_edge((index[l], used[l]), (index[nl + r], used[nl + r]));
    }
    (grid, side)
}

pub fn pick<'a, R: Rng, T>(rng: &mut R, items: &'a [T]) -> &'a T {
    items.choose(rng).expect("nonempty choice")
}

/// Random variable permutation and random flips of some variables.
pub fn shuffle_and_flip<R: Rng>(rng: &mut R, f: &Signature) -> Signature {
    let mut perm: Vec<usize> = (1..=f.arity()).collect();
    perm.shuffle(rng);
    let mut g = f.permute_vars(&perm).expect("permutation");
    for i in 1..=f.arity() {
        if rng.gen_bool(0.5) {
            g = g.flip_var(i).expect("variable in range");
        }
    }
    g
}

pub fn orthogonal_transforms(catalog: &[Transform2x2]) -> Vec<Transform2x2> {
    catalog.iter().filter(|t| t.is_real() && t.is_orthogonal()).cloned().collect()
}
