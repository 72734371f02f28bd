use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use holant::catalog::{self, bell};
use holant::classify::classify;
use holant::factor::{is_associate, prime_factorize, ScalarDomain};
use holant::gadget::{h4_gadget, mate_matrix, merge, Connector};
use holant::holographic::{conjugate_by_z, transform_catalog, z_inv};
use holant::props::{first_orth, second_orth};
use holant::random::{orthogonal_transforms, random_bipartite_grid, random_product, shuffle_and_flip, small_int_signature};
use holant::{ExactNumber, Signature};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn int(n: i64) -> ExactNumber {
    ExactNumber::from_int(n)
}

/// Position of variable v once u and w are merged away.
fn shifted(v: usize, u: usize, w: usize) -> usize {
    v - usize::from(u < v) - usize::from(w < v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn real_signatures_have_ars_after_zinv(seed in any::<u64>(), n in 1usize..=6) {
        let f = small_int_signature(&mut rng(seed), n, 3);
        prop_assert!(z_inv().apply(&f).ars_check());
    }

    #[test]
    fn single_variable_view_stacks_the_two_blocks(seed in any::<u64>(), n in 1usize..=5) {
        let f = small_int_signature(&mut rng(seed), n, 3);
        let i = rng(seed ^ 1).gen_range(1..=n);
        let m = f.matrix_view(&[i]).unwrap();
        prop_assert_eq!(m.row(0), &f.block(&[i], 0).unwrap()[..]);
        prop_assert_eq!(m.row(1), &f.block(&[i], 1).unwrap()[..]);
    }

    #[test]
    fn merge_commutes_with_h4(seed in any::<u64>(), n in 4usize..=6, b in 0usize..4) {
        let mut r = rng(seed);
        let f = small_int_signature(&mut r, n, 2);
        let mut vars: Vec<usize> = (1..=n).collect();
        rand::seq::SliceRandom::shuffle(&mut vars[..], &mut r);
        let (i, j, u, v) = (vars[0], vars[1], vars[2], vars[3]);
        let bin = &bell()[b];
        let left = merge(&h4_gadget(&f, i, j).unwrap(), u, v, bin).unwrap();
        let right = h4_gadget(&merge(&f, u, v, bin).unwrap(), shifted(i, u, v), shifted(j, u, v)).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn mating_matrix_is_positive_semidefinite(seed in any::<u64>(), n in 2usize..=6) {
        let f = small_int_signature(&mut rng(seed), n, 3);
        let i = rng(!seed).gen_range(1..=n);
        let m = mate_matrix(&f, &[i], Connector::Eq).unwrap();
        prop_assert_eq!(m.get(0, 1), m.get(1, 0));
        let det = &(m.get(0, 0) * m.get(1, 1)) - &(m.get(0, 1) * m.get(1, 0));
        for x in [m.get(0, 0).clone(), m.get(1, 1).clone(), det] {
            prop_assert!(x.real_sign().unwrap() >= 0);
        }
    }

    #[test]
    fn zinv_turns_equality_merges_into_disequality_merges(seed in any::<u64>(), n in 2usize..=6) {
        let f = small_int_signature(&mut rng(seed), n, 3);
        let mut r = rng(seed.rotate_left(7));
        let i = r.gen_range(1..=n);
        let j = loop {
            let j = r.gen_range(1..=n);
            if j != i { break j; }
        };
        let zi = z_inv();
        let hat_of_merge = zi.apply(&merge(&f, i, j, &catalog::eq2()).unwrap());
        prop_assert_eq!(merge(&zi.apply(&f), i, j, &catalog::neq2()).unwrap(), hat_of_merge);
    }

    #[test]
    fn holant_value_survives_bipartite_transforms(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (grid, side) = random_bipartite_grid(&mut r, 8);
        let cat = transform_catalog();
        let t = &cat[r.gen_range(0..cat.len())];
        prop_assert_eq!(grid.evaluate().unwrap(), grid.transform_bipartite(&side, t).evaluate().unwrap());
    }

    #[test]
    fn two_stretch_preserves_the_value(seed in any::<u64>()) {
        let (grid, _) = random_bipartite_grid(&mut rng(seed), 8);
        let (stretched, side) = grid.two_stretch();
        prop_assert!(stretched.is_bipartite_by(&side));
        prop_assert_eq!(stretched.evaluate().unwrap(), grid.evaluate().unwrap());
    }

    #[test]
    fn orthogonal_transforms_commute_with_zinv(seed in any::<u64>(), n in 1usize..=5) {
        let mut r = rng(seed);
        let f = small_int_signature(&mut r, n, 3);
        let qs = orthogonal_transforms(&transform_catalog());
        let q = &qs[r.gen_range(0..qs.len())];
        prop_assert_eq!(conjugate_by_z(q).apply(&z_inv().apply(&f)), z_inv().apply(&q.apply(&f)));
    }

    #[test]
    fn orthogonality_is_invariant_under_zinv(seed in any::<u64>(), pick in 0usize..4) {
        let mut r = rng(seed);
        let f = match pick {
            0 => shuffle_and_flip(&mut r, &catalog::f6()),
            1 => shuffle_and_flip(&mut r, &catalog::g8()),
            2 => catalog::eq2().tensor(&catalog::neq2()).tensor(&small_int_signature(&mut r, 1, 2)),
            _ => small_int_signature(&mut r, 4, 1),
        };
        if f.is_zero() {
            return Ok(());
        }
        let g = z_inv().apply(&f);
        let (a, b) = (first_orth(&f).unwrap(), first_orth(&g).unwrap());
        prop_assert_eq!(a.passes, b.passes);
        let (a, b) = (second_orth(&f).unwrap(), second_orth(&g).unwrap());
        prop_assert_eq!(a.passes, b.passes);
        prop_assert_eq!(a.constant, b.constant);
    }

    #[test]
    fn bell_merges_keep_parity(seed in any::<u64>(), n in 3usize..=6, odd in any::<bool>()) {
        let mut r = rng(seed);
        let vals: Vec<i64> = (0..1usize << n)
            .map(|x| if (x.count_ones() % 2 == 1) == odd { r.gen_range(-2..=2) } else { 0 })
            .collect();
        let f = Signature::from_ints(&vals);
        for i in 1..=n {
            for j in i + 1..=n {
                for b in bell() {
                    prop_assert!(merge(&f, i, j, &b).unwrap().has_parity());
                }
            }
        }
    }

    #[test]
    fn factorization_round_trip_under_permutation_and_scaling(seed in any::<u64>(), n in 1usize..=8) {
        let mut r = rng(seed);
        let (f, blocks) = random_product(&mut r, n, 3);
        let s = int(r.gen_range(1..=5) * if r.gen_bool(0.5) { -1 } else { 1 });
        let mut perm: Vec<usize> = (1..=n).collect();
        rand::seq::SliceRandom::shuffle(&mut perm[..], &mut r);
        let g = f.permute_vars(&perm).unwrap().scale(&s);
        let fz = prime_factorize(&g).unwrap();
        prop_assert_eq!(fz.recompose(), g.clone());
        let mut want: Vec<Vec<usize>> = blocks.iter().map(|(v, _)| {
            let mut w: Vec<usize> = v.iter().map(|&k| perm[k - 1]).collect();
            w.sort_unstable();
            w
        }).collect();
        want.sort();
        prop_assert_eq!(fz.partition(), want);
        for (v, sig) in &blocks {
            let moved: Vec<usize> = v.iter().map(|&k| perm[k - 1]).collect();
            let factor = fz.factor_containing(moved[0]).unwrap();
            let order: Vec<usize> = moved.iter().map(|m| factor.vars.iter().position(|x| x == m).unwrap() + 1).collect();
            prop_assert!(is_associate(&sig.permute_vars(&order).unwrap(), &factor.signature, ScalarDomain::Real));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn classification_ignores_permutation_and_real_scaling(seed in any::<u64>(), pick in 0usize..5) {
        let mut r = rng(seed);
        let f = match pick {
            0 => catalog::f6(),
            1 => catalog::h4(),
            2 => catalog::eq2().tensor(&catalog::neq2_minus()),
            3 => small_int_signature(&mut r, 3, 1),
            _ => small_int_signature(&mut r, 4, 2),
        };
        let mut perm: Vec<usize> = (1..=f.arity()).collect();
        rand::seq::SliceRandom::shuffle(&mut perm[..], &mut r);
        let g = f.permute_vars(&perm).unwrap().scale(&int(r.gen_range(2..=4) * if r.gen_bool(0.5) { -1 } else { 1 }));
        let a = classify(&[("f".to_string(), f.clone())]).unwrap();
        let b = classify(&[("f".to_string(), g.clone())]).unwrap();
        prop_assert_eq!(a.outcome, b.outcome);
        let name = |v: &holant::classify::Verdict| v.certificate.as_ref().map(|c| (c.clause, c.transform.name().to_string()));
        prop_assert_eq!(name(&a), name(&b));
        let tags = |v: &holant::classify::Verdict| {
            let mut t: Vec<&str> = v.diagnostics.iter().map(|d| d.tag).collect();
            t.sort_unstable();
            t.dedup();
            t
        };
        prop_assert_eq!(tags(&a), tags(&b));
        for (v, s) in [(&a, &f), (&b, &g)] {
            if let Some(c) = &v.certificate {
                prop_assert!(c.verify(std::slice::from_ref(s)).unwrap());
            }
        }
    }
}

#[test]
fn bell_trace_identities() {
    let m = |s: &Signature| s.matrix_view(&[1]).unwrap();
    let tr = |a: &holant::Matrix| a.get(0, 0) + a.get(1, 1);
    for (b, sq) in [(catalog::eq2_minus(), 2), (catalog::neq2(), 2), (catalog::neq2_minus(), -2)] {
        let x = m(&b);
        assert_eq!(tr(&x.mul(&x.transpose())), int(2));
        assert_eq!(tr(&x.mul(&x)), int(sq));
    }
}
