//! Brute-force oracles for factorization, product type and affine recognition.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use holant::catalog;
use holant::factor::{prime_factorize, splits_at};
use holant::props::{is_affine, is_product_type};
use holant::random::random_product;
use holant::{ExactNumber, Signature};

/// Rank of a matrix of field entries by plain elimination.
fn rank(mut rows: Vec<Vec<ExactNumber>>) -> usize {
    let mut r = 0;
    let cols = rows.first().map_or(0, |x| x.len());
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inv().unwrap();
        for k in 0..rows.len() {
            if k != r && !rows[k][c].is_zero() {
                let m = &rows[k][c] * &inv;
                for t in c..cols {
                    let d = &m * &rows[r][t];
                    rows[k][t] = &rows[k][t] - &d;
                }
            }
        }
        r += 1;
    }
    r
}

fn view_rank(f: &Signature, s: &[usize]) -> usize {
    let m = f.matrix_view(s).unwrap();
    rank((0..m.rows()).map(|r| m.row(r).to_vec()).collect())
}

#[test]
fn splits_agree_with_rank_for_every_bipartition() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..40 {
        let n = rng.gen_range(2..=6);
        let (f, _) = random_product(&mut rng, n, 3);
        let parts = prime_factorize(&f).unwrap().partition();
        for mask in 1..(1usize << n) - 1 {
            let s: Vec<usize> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
            let by_rank = view_rank(&f, &s) <= 1;
            assert_eq!(splits_at(&f, &s), by_rank, "{s:?}");
            // S splits iff it is a union of prime blocks
            let union = parts.iter().all(|b| b.iter().all(|v| s.contains(v)) || b.iter().all(|v| !s.contains(v)));
            assert_eq!(by_rank, union, "{s:?} against {parts:?}");
        }
    }
}

#[test]
fn random_tables_split_exactly_where_rank_is_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..60 {
        let n = rng.gen_range(2..=5);
        // sparse tables hit the zero-pattern shortcut as well as the rank test
        let vals: Vec<i64> = (0..1 << n).map(|_| if rng.gen_bool(0.6) { 0 } else { rng.gen_range(-2..=2) }).collect();
        let f = Signature::from_ints(&vals);
        for mask in 1..(1usize << n) - 1 {
            let s: Vec<usize> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
            assert_eq!(splits_at(&f, &s), view_rank(&f, &s) <= 1);
        }
    }
}

/// Product type by definition: zero, or every prime factor supported on a
/// complementary pair {a, not a} (a generalized equality after flips).
fn product_oracle(f: &Signature) -> bool {
    if f.is_zero() {
        return true;
    }
    prime_factorize(f).unwrap().factors.iter().all(|g| {
        let s = g.signature.support();
        let all = (1usize << g.signature.arity()) - 1;
        s.len() <= 2 && (s.len() < 2 || s[0] ^ s[1] == all)
    })
}

fn random_generalized_equality(rng: &mut ChaCha8Rng, k: usize) -> Signature {
    let a = rng.gen_range(0..1usize << k);
    let all = (1usize << k) - 1;
    let (x, y) = (rng.gen_range(1..=3), rng.gen_range(-3..=3));
    Signature::from_fn(k, |z| {
        if z == a {
            ExactNumber::from_int(x)
        } else if z == a ^ all {
            ExactNumber::from_int(y)
        } else {
            ExactNumber::zero()
        }
    })
}

#[test]
fn product_type_matches_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut positives = 0;
    for round in 0..300 {
        let f = if round % 2 == 0 {
            let mut f = Signature::scalar(ExactNumber::one());
            let n = rng.gen_range(1..=6);
            let mut left = n;
            while left > 0 {
                let k = rng.gen_range(1..=left.min(3));
                f = f.tensor(&random_generalized_equality(&mut rng, k));
                left -= k;
            }
            let mut perm: Vec<usize> = (1..=n).collect();
            rand::seq::SliceRandom::shuffle(&mut perm[..], &mut rng);
            f.permute_vars(&perm).unwrap()
        } else {
            let n = rng.gen_range(1..=4);
            let vals: Vec<i64> = (0..1 << n).map(|_| if rng.gen_bool(0.75) { 0 } else { rng.gen_range(-2..=2) }).collect();
            Signature::from_ints(&vals)
        };
        let want = product_oracle(&f);
        positives += usize::from(want);
        assert_eq!(is_product_type(&f), want, "{f:?}");
    }
    assert!(positives > 150);
}

/// All affine tables i^{Q(x)} on affine subspaces of F_2^n, normalized to
/// value 1 at the first support point; entries are Z_4 exponents, -1 off support.
fn affine_oracle(n: usize) -> HashSet<Vec<i8>> {
    let size = 1usize << n;
    let mut spaces: HashSet<Vec<usize>> = HashSet::new();
    for gens in 0u32..1 << size {
        if gens.count_ones() > n as u32 {
            continue;
        }
        let mut span = vec![0usize];
        for v in (0..size).filter(|v| gens >> v & 1 == 1) {
            let more: Vec<usize> = span.iter().map(|s| s ^ v).collect();
            span.extend(more);
        }
        span.sort_unstable();
        span.dedup();
        for off in 0..size {
            let mut a: Vec<usize> = span.iter().map(|s| s ^ off).collect();
            a.sort_unstable();
            spaces.insert(a);
        }
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut out = HashSet::new();
    for a in &spaces {
        for lin in 0..4usize.pow(n as u32) {
            for cross in 0..1usize << pairs.len() {
                let q = |x: usize| -> usize {
                    let bit = |k: usize| x >> (n - 1 - k) & 1;
                    let mut e = 0;
                    for k in 0..n {
                        e += (lin / 4usize.pow(k as u32) % 4) * bit(k);
                    }
                    for (p, &(u, v)) in pairs.iter().enumerate() {
                        e += 2 * (cross >> p & 1) * bit(u) * bit(v);
                    }
                    e % 4
                };
                let base = q(a[0]);
                let mut t = vec![-1i8; size];
                for &x in a {
                    t[x] = ((q(x) + 4 - base) % 4) as i8;
                }
                out.insert(t);
            }
        }
    }
    out
}

fn unit(e: i8) -> ExactNumber {
    ExactNumber::i_pow(i64::from(e))
}

/// Normalized exponent table when every nonzero entry is lambda * i^k.
fn exponents(f: &Signature) -> Option<Vec<i8>> {
    let first = f.entries().iter().find(|x| !x.is_zero())?;
    f.entries()
        .iter()
        .map(|x| {
            if x.is_zero() {
                return Some(-1);
            }
            let r = x / first;
            (0..4).find(|&k| unit(k) == r)
        })
        .collect()
}

fn oracle_says(oracle: &HashSet<Vec<i8>>, f: &Signature) -> bool {
    f.is_zero() || exponents(f).is_some_and(|t| oracle.contains(&t))
}

#[test]
fn affine_matches_oracle_exhaustively_on_three_variables() {
    let oracle = affine_oracle(3);
    for code in 0..3usize.pow(8) {
        let vals: Vec<i64> = (0..8).map(|k| (code / 3usize.pow(k) % 3) as i64 - 1).collect();
        let f = Signature::from_ints(&vals);
        assert_eq!(is_affine(&f), oracle_says(&oracle, &f), "{vals:?}");
    }
}

#[test]
fn affine_matches_oracle_on_sampled_four_variable_tables() {
    let oracle = affine_oracle(4);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let members: Vec<&Vec<i8>> = oracle.iter().collect();
    let mut hits = 0;
    for round in 0..4000 {
        let f = if round % 2 == 0 {
            // a member, scaled, with one entry perturbed a quarter of the time
            let t = members[rng.gen_range(0..members.len())];
            let scale = &ExactNumber::from_int(rng.gen_range(1..=3)) * &unit(rng.gen_range(0..4));
            let mut e: Vec<ExactNumber> = t.iter().map(|&k| if k < 0 { ExactNumber::zero() } else { &scale * &unit(k) }).collect();
            if rng.gen_bool(0.25) {
                let p = rng.gen_range(0..16);
                e[p] = unit(rng.gen_range(0..4));
            }
            Signature::new(4, e).unwrap()
        } else {
            let vals: Vec<i64> = (0..16).map(|_| rng.gen_range(-1..=1)).collect();
            Signature::from_ints(&vals)
        };
        let want = oracle_says(&oracle, &f);
        hits += usize::from(want);
        assert_eq!(is_affine(&f), want, "{:?}", f.entry_strings());
    }
    assert!(hits > 1000);
}

#[test]
fn bell_tensors_and_f6_merges_are_affine() {
    let b = catalog::bell();
    for x in &b {
        for y in &b {
            assert!(is_affine(&x.tensor(y)));
        }
    }
    let f6 = catalog::f6();
    for i in 1..=6 {
        for j in i + 1..=6 {
            for x in &b {
                assert!(is_affine(&holant::gadget::merge(&f6, i, j, x).unwrap()));
            }
        }
    }
}
