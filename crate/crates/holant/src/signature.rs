//! Signatures: functions {0,1}^n -> Q(sqrt2, i) stored as truth tables.
//!
//! Entries are indexed by x_1..x_n with x_1 the most significant bit.
//! Variables are numbered from 1 throughout the public API.

use std::fmt;

use exact_field::ExactNumber;

use crate::error::{HolantError, Result};
use crate::matrix::Matrix;

/// Largest arity that may be stored.
pub const MAX_ARITY: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    arity: usize,
    entries: Vec<ExactNumber>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    /// Zero signature: support is empty, so both parities hold.
    Both,
    None,
}

/// Bit of variable `i` (1-based) in an index of arity `n`.
pub fn var_mask(n: usize, i: usize) -> usize {
    1 << (n - i)
}

/// Render an index of arity n as a 0/1 string, x_1 first.
pub fn bitstring(x: usize, n: usize) -> String {
    (1..=n).map(|i| if x & var_mask(n, i) != 0 { '1' } else { '0' }).collect()
}

pub fn parse_bitstring(s: &str) -> Result<usize> {
    s.chars().try_fold(0usize, |acc, c| match c {
        '0' => Ok(acc << 1),
        '1' => Ok(acc << 1 | 1),
        _ => Err(HolantError::Invalid(format!("bad bit '{c}' in '{s}'"))),
    })
}

/// Inner product sum_k u_k * conj(v_k).
pub fn inner(u: &[ExactNumber], v: &[ExactNumber]) -> ExactNumber {
    let mut acc = ExactNumber::zero();
    for (a, b) in u.iter().zip(v) {
        if !a.is_zero() && !b.is_zero() {
            acc += &(a * &b.conj());
        }
    }
    acc
}

pub fn norm_sq(u: &[ExactNumber]) -> ExactNumber {
    u.iter().map(|x| x.norm_sq()).sum()
}

impl Signature {
    pub fn new(arity: usize, entries: Vec<ExactNumber>) -> Result<Self> {
        if arity > MAX_ARITY {
            return Err(HolantError::Cap(format!("arity {arity} exceeds storage cap {MAX_ARITY}")));
        }
        if entries.len() != 1 << arity {
            return Err(HolantError::Arity(format!("{} entries for arity {arity}", entries.len())));
        }
        Ok(Signature { arity, entries })
    }

    /// Build from a table of integers; the length fixes the arity.
    pub fn from_ints(vals: &[i64]) -> Self {
        let n = vals.len().trailing_zeros() as usize;
        assert_eq!(1 << n, vals.len(), "table length must be a power of two");
        Signature { arity: n, entries: vals.iter().map(|&v| ExactNumber::from_int(v)).collect() }
    }

    pub fn from_fn(arity: usize, f: impl Fn(usize) -> ExactNumber) -> Self {
        assert!(arity <= MAX_ARITY);
        Signature { arity, entries: (0..1usize << arity).map(f).collect() }
    }

    pub fn zero(arity: usize) -> Self {
        Self::from_fn(arity, |_| ExactNumber::zero())
    }

    pub fn scalar(x: ExactNumber) -> Self {
        Signature { arity: 0, entries: vec![x] }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn entries(&self) -> &[ExactNumber] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<ExactNumber> {
        self.entries
    }

    pub fn get(&self, idx: usize) -> &ExactNumber {
        &self.entries[idx]
    }

    /// Value at an assignment given as a 0/1 string.
    pub fn eval(&self, alpha: &str) -> Result<ExactNumber> {
        if alpha.len() != self.arity {
            return Err(HolantError::Arity(format!("input of length {} for arity {}", alpha.len(), self.arity)));
        }
        Ok(self.entries[parse_bitstring(alpha)?].clone())
    }

    /// Value of an arity-0 signature.
    pub fn scalar_value(&self) -> Option<&ExactNumber> {
        (self.arity == 0).then(|| &self.entries[0])
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(|x| x.is_real())
    }

    /// Indices of nonzero entries, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.entries.len()).filter(|&k| !self.entries[k].is_zero()).collect()
    }

    pub fn scale(&self, s: &ExactNumber) -> Signature {
        Signature { arity: self.arity, entries: self.entries.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, o: &Signature) -> Result<Signature> {
        self.same_arity(o)?;
        Ok(Signature { arity: self.arity, entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, o: &Signature) -> Result<Signature> {
        self.same_arity(o)?;
        Ok(Signature { arity: self.arity, entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a - b).collect() })
    }

    /// Pointwise product (same variables).
    pub fn pointwise(&self, o: &Signature) -> Result<Signature> {
        self.same_arity(o)?;
        Ok(Signature { arity: self.arity, entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a * b).collect() })
    }

    pub fn conj(&self) -> Signature {
        Signature { arity: self.arity, entries: self.entries.iter().map(|x| x.conj()).collect() }
    }

    fn same_arity(&self, o: &Signature) -> Result<()> {
        if self.arity != o.arity {
            return Err(HolantError::Arity(format!("{} vs {}", self.arity, o.arity)));
        }
        Ok(())
    }

    pub(crate) fn check_var(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.arity {
            return Err(HolantError::Index(format!("variable {i} for arity {}", self.arity)));
        }
        Ok(())
    }

    fn check_distinct(&self, vars: &[usize]) -> Result<()> {
        for (k, &v) in vars.iter().enumerate() {
            self.check_var(v)?;
            if vars[..k].contains(&v) {
                return Err(HolantError::Index(format!("variable {v} repeated")));
            }
        }
        Ok(())
    }

    /// Variables not in `vars`, ascending.
    pub fn complement(&self, vars: &[usize]) -> Vec<usize> {
        (1..=self.arity).filter(|v| !vars.contains(v)).collect()
    }

    /// Compose an index from the values of an ordered variable list.
    /// `bits` carries the values with the first listed variable most significant.
    pub fn scatter(&self, vars: &[usize], bits: usize) -> usize {
        let k = vars.len();
        let mut idx = 0;
        for (p, &v) in vars.iter().enumerate() {
            if bits >> (k - 1 - p) & 1 == 1 {
                idx |= var_mask(self.arity, v);
            }
        }
        idx
    }

    /// Read the values of an ordered variable list from an index.
    pub fn gather(&self, vars: &[usize], idx: usize) -> usize {
        vars.iter().fold(0, |acc, &v| acc << 1 | usize::from(idx & var_mask(self.arity, v) != 0))
    }

    /// M_S(f): rows indexed by the variables in `rows` (in the given order),
    /// columns by the remaining variables in ascending order.
    pub fn matrix_view(&self, rows: &[usize]) -> Result<Matrix> {
        self.check_distinct(rows)?;
        let cols = self.complement(rows);
        let (nr, nc) = (1usize << rows.len(), 1usize << cols.len());
        let mut data = Vec::with_capacity(nr * nc);
        for r in 0..nr {
            let base = self.scatter(rows, r);
            for c in 0..nc {
                data.push(self.entries[base | self.scatter(&cols, c)].clone());
            }
        }
        Ok(Matrix::new(nr, nc, data))
    }

    /// Fix the listed variables to the given values; remaining variables keep order.
    pub fn restrict(&self, fixed: &[(usize, bool)]) -> Result<Signature> {
        let vars: Vec<usize> = fixed.iter().map(|&(v, _)| v).collect();
        self.check_distinct(&vars)?;
        let base = fixed.iter().filter(|&&(_, b)| b).fold(0, |acc, &(v, _)| acc | var_mask(self.arity, v));
        let rest = self.complement(&vars);
        Ok(Signature::from_fn(rest.len(), |c| self.entries[base | self.scatter(&rest, c)].clone()))
    }

    /// The row vector f_S^{bits} as a plain vector.
    pub fn block(&self, vars: &[usize], bits: usize) -> Result<Vec<ExactNumber>> {
        let fixed: Vec<(usize, bool)> =
            vars.iter().enumerate().map(|(p, &v)| (v, bits >> (vars.len() - 1 - p) & 1 == 1)).collect();
        Ok(self.restrict(&fixed)?.entries)
    }

    /// Tensor product placing f's variables at `placement[..f.arity]` and g's at the rest.
    pub fn tensor_placed(&self, g: &Signature, placement: &[usize]) -> Result<Signature> {
        let n = self.arity + g.arity;
        if placement.len() != n {
            return Err(HolantError::Invalid(format!("placement of length {} for {n} variables", placement.len())));
        }
        let mut seen = vec![false; n + 1];
        for &p in placement {
            if p == 0 || p > n || seen[p] {
                return Err(HolantError::Invalid("placement is not a bijection onto 1..n".into()));
            }
            seen[p] = true;
        }
        if n > MAX_ARITY {
            return Err(HolantError::Cap(format!("arity {n} exceeds storage cap {MAX_ARITY}")));
        }
        let out = Signature::zero(n);
        let (pf, pg) = placement.split_at(self.arity);
        let entries = (0..1usize << n)
            .map(|idx| {
                let a = out.gather(pf, idx);
                let b = out.gather(pg, idx);
                &self.entries[a] * &g.entries[b]
            })
            .collect();
        Ok(Signature { arity: n, entries })
    }

    /// f (x) g with g's variables after f's.
    pub fn tensor(&self, g: &Signature) -> Signature {
        let placement: Vec<usize> = (1..=self.arity + g.arity).collect();
        self.tensor_placed(g, &placement).expect("identity placement")
    }

    /// Move variable k to position perm[k-1]: result(y) = f(x) with x_k = y_{perm[k-1]}.
    pub fn permute_vars(&self, perm: &[usize]) -> Result<Signature> {
        if perm.len() != self.arity {
            return Err(HolantError::Invalid("permutation length differs from arity".into()));
        }
        let mut seen = vec![false; self.arity + 1];
        for &p in perm {
            if p == 0 || p > self.arity || seen[p] {
                return Err(HolantError::Invalid("not a permutation".into()));
            }
            seen[p] = true;
        }
        let mut entries = vec![ExactNumber::zero(); self.entries.len()];
        for (x, e) in self.entries.iter().enumerate() {
            let mut y = 0;
            for (k, &p) in perm.iter().enumerate() {
                if x & var_mask(self.arity, k + 1) != 0 {
                    y |= var_mask(self.arity, p);
                }
            }
            entries[y] = e.clone();
        }
        Ok(Signature { arity: self.arity, entries })
    }

    /// Swap the roles of 0 and 1 on variable i.
    pub fn flip_var(&self, i: usize) -> Result<Signature> {
        self.check_var(i)?;
        let m = var_mask(self.arity, i);
        Ok(Signature::from_fn(self.arity, |x| self.entries[x ^ m].clone()))
    }

    /// Negate the entries with x_i = 1.
    pub fn negate_var(&self, i: usize) -> Result<Signature> {
        self.check_var(i)?;
        let m = var_mask(self.arity, i);
        Ok(Signature::from_fn(self.arity, |x| if x & m != 0 { -self.entries[x].clone() } else { self.entries[x].clone() }))
    }

    /// Arrow reversal symmetry: conj(f(x)) = f(complement of x).
    pub fn ars_check(&self) -> bool {
        let all = (1usize << self.arity) - 1;
        (0..self.entries.len()).all(|x| self.entries[x].conj() == self.entries[x ^ all])
    }

    pub fn parity(&self) -> Parity {
        let supp = self.support();
        if supp.is_empty() {
            return Parity::Both;
        }
        let even = supp.iter().all(|x| x.count_ones() % 2 == 0);
        let odd = supp.iter().all(|x| x.count_ones() % 2 == 1);
        match (even, odd) {
            (true, _) => Parity::Even,
            (_, true) => Parity::Odd,
            _ => Parity::None,
        }
    }

    pub fn has_parity(&self) -> bool {
        self.parity() != Parity::None
    }

    /// Support inside the half-weight strings (an EO signature).
    pub fn is_eo(&self) -> Result<bool> {
        if self.arity % 2 == 1 {
            return Err(HolantError::Arity("EO signatures have even arity".into()));
        }
        let half = (self.arity / 2) as u32;
        Ok(self.support().iter().all(|x| x.count_ones() == half))
    }

    /// Table as compact number tokens.
    pub fn entry_strings(&self) -> Vec<String> {
        self.entries.iter().map(|x| x.to_compact_string()).collect()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.entry_strings().join(", "))
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Signature[{}]{}", self.arity, self)
    }
}
