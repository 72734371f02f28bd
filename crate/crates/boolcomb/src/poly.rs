//! Multilinear polynomials over Z_2.
//!
//! A monomial is a bitmask of variables: bit k stands for x_{k+1}. The empty
//! mask is the constant 1.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::CombError;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultilinearPoly {
    nvars: usize,
    monomials: BTreeSet<u32>,
}

pub fn var_bit(i: usize) -> u32 {
    1 << (i - 1)
}

impl MultilinearPoly {
    pub fn zero(nvars: usize) -> Self {
        MultilinearPoly { nvars, monomials: BTreeSet::new() }
    }

    pub fn constant(nvars: usize, c: bool) -> Self {
        let mut p = Self::zero(nvars);
        if c {
            p.monomials.insert(0);
        }
        p
    }

    /// The variable x_i (1-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_monomials(nvars, [var_bit(i)])
    }

    /// Sum of monomials; repeated monomials cancel in pairs.
    pub fn from_monomials(nvars: usize, monos: impl IntoIterator<Item = u32>) -> Self {
        let mut p = Self::zero(nvars);
        for m in monos {
            p.toggle(m);
        }
        p
    }

    /// Affine form c + sum of the listed variables (1-based).
    pub fn linear(nvars: usize, vars: &[usize], c: bool) -> Self {
        let mut p = Self::constant(nvars, c);
        for &v in vars {
            p.toggle(var_bit(v));
        }
        p
    }

    /// Sum over all pairs i<j of x_i x_j.
    pub fn complete_quadratic(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        for i in 1..=nvars {
            for j in i + 1..=nvars {
                p.toggle(var_bit(i) | var_bit(j));
            }
        }
        p
    }

    /// Sum over all triples of x_i x_j x_k.
    pub fn complete_cubic(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        for i in 1..=nvars {
            for j in i + 1..=nvars {
                for k in j + 1..=nvars {
                    p.toggle(var_bit(i) | var_bit(j) | var_bit(k));
                }
            }
        }
        p
    }

    /// Algebraic normal form of a truth table indexed with x_1 as the most significant bit.
    pub fn from_truth_table(nvars: usize, table: &[bool]) -> Self {
        assert_eq!(table.len(), 1 << nvars);
        // reindex so that bit k of the index is x_{k+1}
        let mut t: Vec<bool> = (0..1usize << nvars)
            .map(|m| {
                let idx = (0..nvars).fold(0, |acc, k| acc | ((m >> k & 1) << (nvars - 1 - k)));
                table[idx]
            })
            .collect();
        for k in 0..nvars {
            for m in 0..t.len() {
                if m >> k & 1 == 1 {
                    t[m] ^= t[m ^ (1 << k)];
                }
            }
        }
        Self::from_monomials(nvars, (0..t.len() as u32).filter(|&m| t[m as usize]))
    }

    fn toggle(&mut self, m: u32) {
        if !self.monomials.remove(&m) {
            self.monomials.insert(m);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn monomials(&self) -> impl Iterator<Item = u32> + '_ {
        self.monomials.iter().copied()
    }

    pub fn contains(&self, m: u32) -> bool {
        self.monomials.contains(&m)
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    /// `Some(c)` when the polynomial is the constant c.
    pub fn as_constant(&self) -> Option<bool> {
        match self.monomials.len() {
            0 => Some(false),
            1 if self.monomials.contains(&0) => Some(true),
            _ => None,
        }
    }

    /// Degree; the zero polynomial has degree 0 here as in the usual d(F) convention.
    pub fn degree(&self) -> u32 {
        self.monomials.iter().map(|m| m.count_ones()).max().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        p.nvars = p.nvars.max(o.nvars);
        for &m in &o.monomials {
            p.toggle(m);
        }
        p
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = Self::zero(self.nvars.max(o.nvars));
        for &a in &self.monomials {
            for &b in &o.monomials {
                p.toggle(a | b);
            }
        }
        p
    }

    pub fn eval(&self, x: u32) -> bool {
        self.monomials.iter().filter(|&&m| x & m == m).count() % 2 == 1
    }

    /// Variables occurring in some monomial, as a mask.
    pub fn support_mask(&self) -> u32 {
        self.monomials.iter().fold(0, |a, &m| a | m)
    }

    /// Set x_i := a.
    pub fn restrict(&self, i: usize, a: bool) -> Self {
        let bit = var_bit(i);
        let mut p = Self::zero(self.nvars);
        for &m in &self.monomials {
            if m & bit == 0 {
                p.toggle(m);
            } else if a {
                p.toggle(m & !bit);
            }
        }
        p
    }

    /// Set x_i := g, where g does not involve x_i.
    pub fn substitute(&self, i: usize, g: &Self) -> Self {
        let bit = var_bit(i);
        let mut p = Self::zero(self.nvars.max(g.nvars));
        for &m in &self.monomials {
            if m & bit == 0 {
                p.toggle(m);
            } else {
                let rest = Self::from_monomials(p.nvars, [m & !bit]);
                p = p.add(&rest.mul(g));
            }
        }
        p
    }

    /// F^{ab}_{ij} + F^{(1-a)(1-b)}_{ij}: `same = true` gives 00+11, otherwise 01+10.
    pub fn pair_sum(&self, i: usize, j: usize, same: bool) -> Self {
        let f = |a: bool, b: bool| self.restrict(i, a).restrict(j, b);
        if same {
            f(false, false).add(&f(true, true))
        } else {
            f(false, true).add(&f(true, false))
        }
    }

    /// Degree 2 and every pair x_i x_j present.
    pub fn is_complete_quadratic(&self) -> bool {
        self.degree() == 2 && (1..=self.nvars).all(|i| (i + 1..=self.nvars).all(|j| self.contains(var_bit(i) | var_bit(j))))
    }

    /// Degree 3 and every triple present.
    pub fn is_complete_cubic(&self) -> bool {
        self.is_complete_cubic_on(&(1..=self.nvars).collect::<Vec<_>>())
    }

    /// Degree 3, only the listed variables occur, and every triple of them is present.
    pub fn is_complete_cubic_on(&self, vars: &[usize]) -> bool {
        let allowed: u32 = vars.iter().map(|&v| var_bit(v)).fold(0, |a, b| a | b);
        if self.degree() != 3 || self.support_mask() & !allowed != 0 {
            return false;
        }
        for (x, &i) in vars.iter().enumerate() {
            for (y, &j) in vars.iter().enumerate().skip(x + 1) {
                for &k in &vars[y + 1..] {
                    if !self.contains(var_bit(i) | var_bit(j) | var_bit(k)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl fmt::Display for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return write!(f, "0");
        }
        let mut ms: Vec<u32> = self.monomials.iter().copied().collect();
        ms.sort_by_key(|m| (m.count_ones(), m.reverse_bits()));
        let terms: Vec<String> = ms
            .iter()
            .map(|&m| {
                if m == 0 {
                    "1".to_string()
                } else {
                    (0..32).filter(|k| m >> k & 1 == 1).map(|k| format!("x{}", k + 1)).collect::<Vec<_>>().join("")
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Witness F = L1*L2 + L3*L4 with affine L's.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwiceLinear {
    pub l: [MultilinearPoly; 4],
}

/// Dense form for at most 6 variables: bit m set when monomial m is present.
fn dense(p: &MultilinearPoly) -> u64 {
    p.monomials().fold(0, |a, m| a | 1 << m)
}

fn dense_mul_affine(x: u32, y: u32, nvars: usize) -> u64 {
    // affine forms as masks: bit 0..n-1 variables, bit n the constant
    let terms = |l: u32| {
        let mut v: Vec<u32> = (0..nvars).filter(|k| l >> k & 1 == 1).map(|k| 1 << k).collect();
        if l >> nvars & 1 == 1 {
            v.push(0);
        }
        v
    };
    let mut out = 0u64;
    for a in terms(x) {
        for b in terms(y) {
            out ^= 1 << (a | b);
        }
    }
    out
}

fn affine_poly(l: u32, nvars: usize) -> MultilinearPoly {
    let vars: Vec<usize> = (0..nvars).filter(|k| l >> k & 1 == 1).map(|k| k + 1).collect();
    MultilinearPoly::linear(nvars, &vars, l >> nvars & 1 == 1)
}

/// Exhaustive search for F = L1*L2 + L3*L4.
pub fn twice_linear_partition(f: &MultilinearPoly) -> Result<Option<TwiceLinear>, CombError> {
    let n = f.nvars();
    if n > 6 {
        return Err(CombError::SizeCap(format!("twice-linear search supports at most 6 variables, got {n}")));
    }
    let forms = 1u32 << (n + 1);
    let mut products: HashMap<u64, (u32, u32)> = HashMap::new();
    for x in 0..forms {
        for y in x..forms {
            products.entry(dense_mul_affine(x, y, n)).or_insert((x, y));
        }
    }
    let target = dense(f);
    let mut keys: Vec<&u64> = products.keys().collect();
    keys.sort_unstable();
    for &p in keys {
        if let Some(&(c, d)) = products.get(&(target ^ p)) {
            let (a, b) = products[&p];
            return Ok(Some(TwiceLinear {
                l: [affine_poly(a, n), affine_poly(b, n), affine_poly(c, n), affine_poly(d, n)],
            }));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Congruity {
    /// Constant ratio +1 or -1.
    Congruity(i8),
    /// Ratio (-1)^{L'} for an affine-linear, nonconstant L'.
    SemiCongruity(MultilinearPoly),
    Neither,
}

/// Classify Q(.., L, ..) + Q(.., L+1, ..), with L placed at the pivot variable.
pub fn congruity_test(q: &MultilinearPoly, l: &MultilinearPoly, pivot: usize) -> Result<Congruity, CombError> {
    if l.support_mask() & var_bit(pivot) != 0 {
        return Err(CombError::Invalid("L must not involve the pivot variable".into()));
    }
    if l.degree() > 1 {
        return Err(CombError::Invalid("L must be affine linear".into()));
    }
    let n = q.nvars().max(l.nvars());
    let l1 = l.add(&MultilinearPoly::constant(n, true));
    let g = q.substitute(pivot, l).add(&q.substitute(pivot, &l1));
    Ok(match (g.as_constant(), g.degree()) {
        (Some(false), _) => Congruity::Congruity(1),
        (Some(true), _) => Congruity::Congruity(-1),
        (None, 1) => Congruity::SemiCongruity(g),
        _ => Congruity::Neither,
    })
}

/// Substitute x_1 := x_{n+1} + L in a polynomial on n variables and test
/// whether the result is a complete cubic on x_2..x_{n+1}.
pub fn cubic_substitution_check(f: &MultilinearPoly, l: &MultilinearPoly) -> Result<bool, CombError> {
    let n = f.nvars();
    if !(4..=6).contains(&n) {
        return Err(CombError::SizeCap(format!("cubic substitution check needs 4..=6 variables, got {n}")));
    }
    if l.support_mask() & 1 != 0 || l.degree() > 1 || l.support_mask() >> n != 0 {
        return Err(CombError::Invalid("L must be affine linear in x2..xn".into()));
    }
    let shifted = MultilinearPoly::var(n + 1, n + 1).add(l);
    let g = f.substitute(1, &shifted);
    Ok(g.is_complete_cubic_on(&(2..=n + 1).collect::<Vec<_>>()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_algebra() {
        let x1x2 = MultilinearPoly::from_monomials(2, [0b11]);
        assert_eq!(x1x2.pair_sum(1, 2, true).as_constant(), Some(true));
        let f = MultilinearPoly::from_monomials(3, [0b011, 0b100]);
        assert_eq!(f.restrict(1, false), MultilinearPoly::var(3, 3));
        assert_eq!(MultilinearPoly::complete_quadratic(5).degree(), 2);
        assert!(MultilinearPoly::complete_quadratic(5).is_complete_quadratic());
        assert!(!MultilinearPoly::from_monomials(3, [0b011, 0b110]).is_complete_quadratic());
    }

    #[test]
    fn truth_table_round_trip() {
        let f = MultilinearPoly::from_monomials(3, [0b011, 0b100, 0]);
        let table: Vec<bool> = (0..8u32)
            .map(|idx| {
                let x = (0..3).fold(0, |a, k| a | ((idx >> (2 - k) & 1) << k));
                f.eval(x)
            })
            .collect();
        assert_eq!(MultilinearPoly::from_truth_table(3, &table), f);
    }

    #[test]
    fn squares_reduce() {
        let x = MultilinearPoly::var(2, 1);
        assert_eq!(x.mul(&x), x);
        let s = MultilinearPoly::linear(2, &[1, 2], true);
        assert_eq!(s.mul(&s), s);
    }

    #[test]
    fn twice_linear_examples() {
        // the displayed five-variable form, with a = b = c = d = 0
        let l = |v: &[usize]| MultilinearPoly::linear(5, v, false);
        let f = l(&[1, 2]).mul(&l(&[2, 3])).add(&l(&[1, 2, 3, 4]).mul(&l(&[1, 2, 3, 5])));
        assert!(f.is_complete_quadratic());
        let w = twice_linear_partition(&f).unwrap().unwrap();
        assert_eq!(w.l[0].mul(&w.l[1]).add(&w.l[2].mul(&w.l[3])), f);
        assert!(twice_linear_partition(&MultilinearPoly::complete_quadratic(6)).unwrap().is_none());
        let w = twice_linear_partition(&MultilinearPoly::zero(3)).unwrap().unwrap();
        assert!(w.l[0].mul(&w.l[1]).add(&w.l[2].mul(&w.l[3])).is_zero());
    }

    #[test]
    fn congruity_examples() {
        let q = MultilinearPoly::from_monomials(2, [0b11]);
        let r = congruity_test(&q, &MultilinearPoly::zero(2), 2).unwrap();
        assert_eq!(r, Congruity::SemiCongruity(MultilinearPoly::var(2, 1)));
        let lin = MultilinearPoly::linear(3, &[1, 3], true);
        assert!(matches!(congruity_test(&lin, &MultilinearPoly::var(3, 1), 3).unwrap(), Congruity::Congruity(_)));
        assert_eq!(congruity_test(&MultilinearPoly::constant(3, true), &MultilinearPoly::zero(3), 1).unwrap(), Congruity::Congruity(1));
    }

    #[test]
    fn cubic_substitution_examples() {
        let c5 = MultilinearPoly::complete_cubic(5);
        assert!(!cubic_substitution_check(&c5, &MultilinearPoly::var(5, 2)).unwrap());
        let c4 = MultilinearPoly::complete_cubic(4);
        assert!(cubic_substitution_check(&c4, &MultilinearPoly::linear(4, &[2, 3], false)).unwrap());
        for n in 4..=6 {
            let c = MultilinearPoly::complete_cubic(n);
            assert!(cubic_substitution_check(&c, &MultilinearPoly::constant(n, true)).unwrap());
        }
    }
}
