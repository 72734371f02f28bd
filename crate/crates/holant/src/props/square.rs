//! Distance-2 squares and their canonical types.

use std::collections::HashMap;

use exact_field::ExactNumber;

use crate::error::{HolantError, Result};
use crate::signature::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SquareKind {
    I,
    II,
    III,
    NonCanonical,
}

/// The moves taking the input square to its canonical form: permute the
/// four positions, multiply rows and columns by signs, divide by a scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareTrail {
    /// canonical-before-scaling[k] = input[perm[k]] * sign
    pub perm: [usize; 4],
    pub row_signs: [i8; 2],
    pub col_signs: [i8; 2],
    pub scalar: ExactNumber,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareType {
    pub kind: SquareKind,
    /// Canonical matrix [x, y, z, w] row-major; present unless NonCanonical.
    pub canonical: Option<[ExactNumber; 4]>,
    pub trail: Option<SquareTrail>,
}

impl SquareType {
    /// Undo the trail on the canonical form.
    pub fn replay(&self) -> Option<[ExactNumber; 4]> {
        let (c, t) = (self.canonical.as_ref()?, self.trail.as_ref()?);
        let mut out: [ExactNumber; 4] = Default::default();
        for k in 0..4 {
            let s = i64::from(t.row_signs[k / 2] * t.col_signs[k % 2]);
            out[t.perm[k]] = &(&c[k] * &t.scalar) * &ExactNumber::from_int(s);
        }
        Some(out)
    }
}

/// The symmetries of a 2x2 array generated by row swap, column swap, transpose.
const PERMS: [[usize; 4]; 8] =
    [[0, 1, 2, 3], [2, 3, 0, 1], [1, 0, 3, 2], [3, 2, 1, 0], [0, 2, 1, 3], [1, 3, 0, 2], [2, 0, 3, 1], [3, 1, 2, 0]];

fn type_one_forms() -> Vec<[i64; 4]> {
    vec![[0, 0, 0, 0], [1, 0, 0, 0], [1, 1, 0, 0], [1, 0, 0, 1], [1, 1, 1, 1], [1, 1, 1, -1]]
}

fn ints(v: [i64; 4]) -> [ExactNumber; 4] {
    v.map(ExactNumber::from_int)
}

fn match_form(m: &[ExactNumber; 4]) -> Option<SquareKind> {
    if type_one_forms().into_iter().any(|f| ints(f) == *m) {
        return Some(SquareKind::I);
    }
    if *m == ints([1, 1, 3, -1]) {
        return Some(SquareKind::III);
    }
    let one = ExactNumber::one();
    if m[0] == one && m[3] == one && m[1] == m[2] && m[1].real_cmp(&one) == Some(std::cmp::Ordering::Greater) {
        return Some(SquareKind::II);
    }
    None
}

/// Classify [[x, y], [z, w]] up to the allowed normalization moves.
pub fn classify_square(x: &ExactNumber, y: &ExactNumber, z: &ExactNumber, w: &ExactNumber) -> Result<SquareType> {
    let input = [x, y, z, w];
    if input.iter().any(|v| !v.is_real()) {
        return Err(HolantError::Invalid("distance-2 squares are classified for real entries".into()));
    }
    if input.iter().all(|v| v.is_zero()) {
        return Ok(SquareType {
            kind: SquareKind::I,
            canonical: Some(ints([0, 0, 0, 0])),
            trail: Some(SquareTrail { perm: PERMS[0], row_signs: [1, 1], col_signs: [1, 1], scalar: ExactNumber::one() }),
        });
    }
    let mut best: Option<SquareType> = None;
    for perm in PERMS {
        for signs in 0..16u8 {
            let sg = |b: u8| if signs >> b & 1 == 1 { -1i8 } else { 1 };
            let (rs, cs) = ([sg(0), sg(1)], [sg(2), sg(3)]);
            let moved: [ExactNumber; 4] =
                std::array::from_fn(|k| input[perm[k]] * &ExactNumber::from_int(i64::from(rs[k / 2] * cs[k % 2])));
            if moved[0].is_zero() {
                continue;
            }
            let inv = moved[0].inv().expect("nonzero");
            let m = moved.clone().map(|v| &v * &inv);
            if let Some(kind) = match_form(&m) {
                let cand = SquareType {
                    kind,
                    canonical: Some(m),
                    trail: Some(SquareTrail { perm, row_signs: rs, col_signs: cs, scalar: moved[0].clone() }),
                };
                let better = match &best {
                    None => true,
                    Some(b) => lex_less(cand.canonical.as_ref().unwrap(), b.canonical.as_ref().unwrap()),
                };
                if better {
                    best = Some(cand);
                }
            }
        }
    }
    Ok(best.unwrap_or(SquareType { kind: SquareKind::NonCanonical, canonical: None, trail: None }))
}

fn lex_less(a: &[ExactNumber; 4], b: &[ExactNumber; 4]) -> bool {
    for (x, y) in a.iter().zip(b) {
        match x.real_cmp(y) {
            Some(std::cmp::Ordering::Less) => return true,
            Some(std::cmp::Ordering::Greater) => return false,
            _ => {}
        }
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Square {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub delta: usize,
    pub kind: SquareKind,
}

/// All ordered (alpha, beta, gamma, delta) with wt(alpha^beta) = wt(alpha^gamma) = 2,
/// delta = alpha^beta^gamma and wt(alpha^delta) = 4, with the type of
/// [[f(alpha), f(beta)], [f(gamma), f(delta)]].
pub fn enumerate_distance2_squares(f: &Signature) -> Result<Vec<Square>> {
    let n = f.arity();
    if n < 4 {
        return Err(HolantError::Arity("distance-2 squares need arity >= 4".into()));
    }
    if !f.is_real() {
        return Err(HolantError::Invalid("distance-2 squares are classified for real signatures".into()));
    }
    let pairs: Vec<usize> = (0..n).flat_map(|a| (a + 1..n).map(move |b| 1usize << a | 1 << b)).collect();
    let mut cache: HashMap<[ExactNumber; 4], SquareKind> = HashMap::new();
    let mut out = Vec::new();
    for alpha in 0..1usize << n {
        for &p in &pairs {
            for &q in &pairs {
                if p & q != 0 {
                    continue;
                }
                let (beta, gamma) = (alpha ^ p, alpha ^ q);
                let delta = alpha ^ p ^ q;
                let key = [f.get(alpha).clone(), f.get(beta).clone(), f.get(gamma).clone(), f.get(delta).clone()];
                let kind = match cache.get(&key) {
                    Some(k) => *k,
                    None => {
                        let k = classify_square(&key[0], &key[1], &key[2], &key[3])?.kind;
                        cache.insert(key, k);
                        k
                    }
                };
                out.push(Square { alpha, beta, gamma, delta, kind });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(v: [i64; 4]) -> SquareType {
        let e = ints(v);
        classify_square(&e[0], &e[1], &e[2], &e[3]).unwrap()
    }

    #[test]
    fn canonical_examples() {
        let t = sq([1, 3, 3, 1]);
        assert_eq!(t.kind, SquareKind::II);
        assert_eq!(sq([1, 1, 3, -1]).kind, SquareKind::III);
        assert_eq!(sq([0, 0, 0, 0]).kind, SquareKind::I);
        assert_eq!(sq([-3, 1, 1, 1]).kind, SquareKind::III);
        assert_eq!(sq([2, 0, 0, -2]).kind, SquareKind::I);
        assert_eq!(sq([1, 2, 3, 4]).kind, SquareKind::NonCanonical);
        for v in [[1, 3, 3, 1], [-3, 1, 1, 1], [0, 5, 0, 0], [2, -2, 2, 2], [1, 2, 3, 4]] {
            let t = sq(v);
            if t.kind != SquareKind::NonCanonical {
                assert_eq!(t.replay().unwrap(), ints(v));
            }
        }
    }

    #[test]
    fn all_ones_squares_are_type_one() {
        let f = Signature::from_fn(4, |_| ExactNumber::one());
        let s = enumerate_distance2_squares(&f).unwrap();
        assert_eq!(s.len(), 16 * 6);
        assert!(s.iter().all(|q| q.kind == SquareKind::I));
    }
}
