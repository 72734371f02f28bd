use std::collections::HashMap;
use std::time::Instant;

use boolcomb::graph::{from_bitstring, i6, i8_set, to_bitstring, weight};
use boolcomb::{canonical_form, independence_bounds, is_flip_permutation, split_bound, BitGraph};

#[test]
fn alpha_g6_is_four_with_unique_optimum_orbit() {
    let g = BitGraph::even(6).unwrap();
    let (a, _) = g.max_independent_set().unwrap();
    assert_eq!(a, 4);
    let target = canonical_form(&i6(), 6).unwrap();
    for s in g.all_independent_sets_of_size(4).unwrap() {
        assert_eq!(canonical_form(&s, 6).unwrap(), target);
    }
}

#[test]
fn alpha_g8_is_sixteen_and_every_optimum_is_i8() {
    let t = Instant::now();
    let g = BitGraph::even(8).unwrap();
    let (a, w) = g.max_independent_set().unwrap();
    assert_eq!(a, 16);
    assert!(g.is_independent(&w));
    let all = g.all_independent_sets_of_size(16).unwrap();
    let target = canonical_form(&i8_set(), 8).unwrap();
    for s in &all {
        assert!(g.is_independent(s));
        assert_eq!(canonical_form(s, 8).unwrap(), target);
    }
    eprintln!("G8: {} optima, {:?}", all.len(), t.elapsed());
}

#[test]
fn alpha_g10_below_sixty_four() {
    let t = Instant::now();
    let rep = split_bound(10).unwrap();
    assert_eq!(rep.part_alpha, 16);
    assert!(!rep.four_fold_attained);
    let b = independence_bounds(10, 20_000).unwrap();
    assert_eq!(b.upper, 63);
    assert!(BitGraph::even(10).unwrap().is_independent(&b.witness));
    eprintln!("G10: {} <= alpha <= {}, {:?}", b.lower, b.upper, t.elapsed());
}

#[test]
fn four_fold_split_inequality() {
    // alpha(G_8) = 4 alpha(G_6) is attained
    let rep = split_bound(8).unwrap();
    assert_eq!(rep.part_alpha, 4);
    assert!(rep.four_fold_attained);
}

#[test]
fn odd_flip_is_isomorphism_onto_odd_graph() {
    for len in [6usize, 8] {
        let g = BitGraph::even(len).unwrap();
        let h = BitGraph::odd(len).unwrap();
        for s in [1u32, 0b111, (1 << len) - 2] {
            assert_eq!(weight(s) % 2, 1);
            for &u in g.vertices() {
                assert!(h.contains(u ^ s));
            }
            for &u in g.vertices().iter().take(40) {
                for &v in g.vertices() {
                    assert_eq!(g.adjacent(u, v), h.adjacent(u ^ s, v ^ s));
                }
            }
        }
    }
}

#[test]
fn length_four_has_an_extra_automorphism() {
    let g = BitGraph::even(4).unwrap();
    let map: HashMap<u32, u32> = g
        .vertices()
        .iter()
        .map(|&x| (x, if weight(x) == 2 { x ^ 0b1111 } else { x }))
        .collect();
    assert!(g.is_automorphism(&map));
    assert!(!is_flip_permutation(&map, 4));
}

#[test]
fn flips_and_permutations_are_automorphisms() {
    let g = BitGraph::even(6).unwrap();
    let map: HashMap<u32, u32> =
        g.vertices().iter().map(|&x| (x, boolcomb::permute_bits(x ^ 0b100100, &[2, 0, 1, 5, 3, 4]))).collect();
    assert!(g.is_automorphism(&map));
    assert!(is_flip_permutation(&map, 6));
}

#[test]
fn canonical_form_is_flip_invariant() {
    let moved: Vec<u32> = i8_set().iter().map(|&x| x ^ 0b1100_0000).collect();
    assert_eq!(canonical_form(&moved, 8).unwrap(), canonical_form(&i8_set(), 8).unwrap());
    assert_eq!(to_bitstring(from_bitstring("00110011").unwrap(), 8), "00110011");
}
