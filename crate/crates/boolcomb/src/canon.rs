//! Canonical forms of string sets under the maps phi_S o pi, where phi_S
//! flips the coordinates in an even-size set S and pi permutes coordinates.
//! For length at least 6 these maps are exactly the automorphisms of G_len.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::bits::Bits;
use crate::graph::weight;
use crate::CombError;

/// Apply the coordinate permutation: coordinate k (0-based, x_1 first) of the
/// input moves to coordinate perm[k].
pub fn permute_bits(x: u32, perm: &[usize]) -> u32 {
    let len = perm.len();
    let mut y = 0;
    for (k, &p) in perm.iter().enumerate() {
        if x >> (len - 1 - k) & 1 == 1 {
            y |= 1 << (len - 1 - p);
        }
    }
    y
}

/// All permutations of 0..n in Heap's order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

// Per-permutation lookup tables for short strings.
fn tables(len: usize) -> &'static Vec<Vec<u32>> {
    static CACHE: [OnceLock<Vec<Vec<u32>>>; 9] = [const { OnceLock::new() }; 9];
    CACHE[len].get_or_init(|| {
        permutations(len)
            .iter()
            .map(|p| (0..1u32 << len).map(|x| permute_bits(x, p)).collect())
            .collect()
    })
}

/// Lexicographically least sorted image of `set` over all phi_S o pi with |S| even.
pub fn canonical_form(set: &[u32], len: usize) -> Result<Vec<u32>, CombError> {
    if len == 0 || len > 10 {
        return Err(CombError::SizeCap(format!("canonical form supports lengths 1..=10, got {len}")));
    }
    if set.is_empty() {
        return Ok(vec![]);
    }
    if set.iter().any(|&x| x >> len != 0) {
        return Err(CombError::Invalid("string longer than the declared length".into()));
    }
    // The least image starts with the smallest reachable string: 0 when some
    // member has even weight, otherwise a weight-1 string. Only flips that
    // send a member there can produce it.
    let has_even = set.iter().any(|&x| weight(x).is_multiple_of(2));
    let mut flips: Vec<u32> = if has_even {
        set.iter().copied().filter(|&x| weight(x).is_multiple_of(2)).collect()
    } else {
        set.iter().flat_map(|&x| (0..len).map(move |k| x ^ (1 << k))).collect()
    };
    flips.sort_unstable();
    flips.dedup();

    let words = 1usize << len;
    let mut best: Option<Bits> = None;
    let mut consider = |img: Bits| {
        let better = match &best {
            None => true,
            Some(b) => img.lex_less(b),
        };
        if better {
            best = Some(img);
        }
    };
    if len <= 8 {
        let tabs = tables(len);
        let mut best_small: Option<[u64; 4]> = None;
        for &s in &flips {
            let shifted: Vec<u32> = set.iter().map(|&x| x ^ s).collect();
            for t in tabs {
                let mut img = [0u64; 4];
                for &x in &shifted {
                    let y = t[x as usize] as usize;
                    img[y / 64] |= 1 << (y % 64);
                }
                if best_small.is_none_or(|b| small_less(&img, &b)) {
                    best_small = Some(img);
                }
            }
        }
        let b = best_small.unwrap();
        return Ok((0..256u32).filter(|&y| b[y as usize / 64] >> (y % 64) & 1 == 1).collect());
    } else {
        let perms = permutations(len);
        for &s in &flips {
            let shifted: Vec<u32> = set.iter().map(|&x| x ^ s).collect();
            for p in &perms {
                let mut img = Bits::new(words);
                for &x in &shifted {
                    img.insert(permute_bits(x, p) as usize);
                }
                consider(img);
            }
        }
    }
    Ok(best.unwrap().iter().map(|i| i as u32).collect())
}

fn small_less(a: &[u64; 4], b: &[u64; 4]) -> bool {
    for k in 0..4 {
        let x = a[k] ^ b[k];
        if x != 0 {
            return a[k] >> x.trailing_zeros() & 1 == 1;
        }
    }
    false
}

/// True when `map` agrees with phi_S o pi for some even S and permutation pi.
pub fn is_flip_permutation(map: &HashMap<u32, u32>, len: usize) -> bool {
    let perms = permutations(len);
    for s in 0..1u32 << len {
        if weight(s) % 2 == 1 {
            continue;
        }
        for p in &perms {
            if map.iter().all(|(&x, &y)| permute_bits(x ^ s, p) == y) {
                return true;
            }
        }
    }
    false
}
