//! Quadratic parts of products of two affine forms are exactly the complete
//! tripartite edge sets.

use std::collections::HashSet;

use boolcomb::tripartite::{edge_index, edges_of};
use boolcomb::{tripartite_2_partitions, twice_linear_partition, MultilinearPoly};

fn vars(mask: u32, n: usize) -> Vec<usize> {
    (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect()
}

/// Degree-2 monomials of p as an edge mask over 0-based vertices.
fn quadratic_edges(p: &MultilinearPoly, n: usize) -> u32 {
    p.monomials().filter(|m| m.count_ones() == 2).fold(0, |e, m| {
        let u = m.trailing_zeros() as usize;
        let v = 31 - m.leading_zeros() as usize;
        e | 1 << edge_index(n, u, v)
    })
}

#[test]
fn product_quadratics_are_tripartite() {
    for n in 2..=5 {
        let mut from_products = HashSet::new();
        for a in 0u32..1 << n {
            for b in 0u32..1 << n {
                for c in [false, true] {
                    let p = MultilinearPoly::linear(n, &vars(a, n), c).mul(&MultilinearPoly::linear(n, &vars(b, n), false));
                    let q = quadratic_edges(&p, n);
                    assert_eq!(q, edges_of(n, &[a & !b, b & !a, a & b]), "n={n} a={a:b} b={b:b}");
                    from_products.insert(q);
                }
            }
        }
        // and every complete tripartite edge set arises
        let mut all = HashSet::new();
        for code in 0..4usize.pow(n as u32) {
            let mut parts = [0u32; 3];
            for v in 0..n {
                let k = code / 4usize.pow(v as u32) % 4;
                if k < 3 {
                    parts[k] |= 1 << v;
                }
            }
            all.insert(edges_of(n, &parts));
        }
        assert_eq!(from_products, all, "n={n}");
    }
}

#[test]
fn twice_linear_up_to_affine_exactly_when_a_tripartite_split_exists() {
    for n in 2..=6 {
        let split = !tripartite_2_partitions(n).unwrap().is_empty();
        // the split fixes only the quadratic part, so allow any affine remainder
        let q = MultilinearPoly::complete_quadratic(n);
        let twice = (0u32..1 << n).any(|l| {
            let f = q.add(&MultilinearPoly::linear(n, &vars(l, n), false));
            twice_linear_partition(&f).unwrap().is_some()
        });
        assert_eq!(split, twice, "n={n}");
    }
}
