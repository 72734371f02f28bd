//! Tensor factorization: divisibility, associates, and unique prime factorization.

use exact_field::ExactNumber;

use crate::error::{HolantError, Result};
use crate::signature::Signature;

/// Largest arity accepted by `prime_factorize`.
pub const FACTOR_ARITY_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScalarDomain {
    #[default]
    Real,
    Complex,
}

/// One prime factor on an ascending set of 1-based variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub vars: Vec<usize>,
    pub signature: Signature,
}

/// f = scalar * (tensor of factors). Each factor is normalized so that its
/// first nonzero entry is 1, which keeps the factors real when f is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub arity: usize,
    pub scalar: ExactNumber,
    pub factors: Vec<Factor>,
}

impl Factorization {
    /// Factor arities sorted ascending.
    pub fn arities(&self) -> Vec<usize> {
        let mut a: Vec<usize> = self.factors.iter().map(|f| f.signature.arity()).collect();
        a.sort_unstable();
        a
    }

    /// The variable partition, each block ascending, blocks sorted.
    pub fn partition(&self) -> Vec<Vec<usize>> {
        let mut p: Vec<Vec<usize>> = self.factors.iter().map(|f| f.vars.clone()).collect();
        p.sort();
        p
    }

    pub fn factor_containing(&self, var: usize) -> Option<&Factor> {
        self.factors.iter().find(|f| f.vars.contains(&var))
    }

    /// scalar * tensor of the factors, placed at their variables.
    pub fn recompose(&self) -> Signature {
        let scratch = Signature::zero(self.arity);
        Signature::from_fn(self.arity, |x| {
            let mut v = self.scalar.clone();
            for f in &self.factors {
                let e = f.signature.get(scratch.gather(&f.vars, x));
                if e.is_zero() {
                    return ExactNumber::zero();
                }
                v = &v * e;
            }
            v
        })
    }
}

/// Whether M_S(f) has rank at most one.
pub fn splits_at(f: &Signature, rows: &[usize]) -> bool {
    let cols = f.complement(rows);
    let rs: Vec<usize> = (0..1usize << rows.len()).map(|r| f.scatter(rows, r)).collect();
    let cs: Vec<usize> = (0..1usize << cols.len()).map(|c| f.scatter(&cols, c)).collect();
    let mut row_nz = vec![false; rs.len()];
    let mut col_nz = vec![false; cs.len()];
    for (r, &ro) in rs.iter().enumerate() {
        for (c, &co) in cs.iter().enumerate() {
            if !f.get(ro | co).is_zero() {
                row_nz[r] = true;
                col_nz[c] = true;
            }
        }
    }
    // zero pattern must be a combinatorial rectangle
    for (r, &ro) in rs.iter().enumerate() {
        for (c, &co) in cs.iter().enumerate() {
            if f.get(ro | co).is_zero() == (row_nz[r] && col_nz[c]) {
                return false;
            }
        }
    }
    let Some(r0) = row_nz.iter().position(|&b| b) else {
        return true;
    };
    let c0 = col_nz.iter().position(|&b| b).expect("nonzero row has a nonzero column");
    let pivot = f.get(rs[r0] | cs[c0]);
    for (r, &ro) in rs.iter().enumerate() {
        if !row_nz[r] || r == r0 {
            continue;
        }
        let k = f.get(ro | cs[c0]) / pivot;
        for (c, &co) in cs.iter().enumerate() {
            if col_nz[c] && *f.get(ro | co) != &k * f.get(rs[r0] | co) {
                return false;
            }
        }
    }
    true
}

/// Whether f = g (x) h with g on the variables `placement` (in g's order),
/// or f = lambda g when `placement` covers every variable.
pub fn divides(g: &Signature, f: &Signature, placement: &[usize]) -> Result<bool> {
    if g.is_zero() {
        return Err(HolantError::ZeroSignature("divisor must be nonzero".into()));
    }
    if placement.len() != g.arity() {
        return Err(HolantError::Arity(format!("placement of {} variables for a divisor of arity {}", placement.len(), g.arity())));
    }
    let m = f.matrix_view(placement)?;
    let p = g.entries().iter().position(|x| !x.is_zero()).expect("nonzero divisor");
    for c in 0..m.cols() {
        let lambda = m.get(p, c) / g.get(p);
        for r in 0..m.rows() {
            if *m.get(r, c) != &lambda * g.get(r) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// f = lambda g for some nonzero lambda in `domain`. Two zero signatures of
/// the same arity are associates.
pub fn is_associate(f: &Signature, g: &Signature, domain: ScalarDomain) -> bool {
    if f.arity() != g.arity() {
        return false;
    }
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return true,
        (false, false) => {}
        _ => return false,
    }
    let p = g.entries().iter().position(|x| !x.is_zero()).expect("nonzero");
    let lambda = f.get(p) / g.get(p);
    if domain == ScalarDomain::Real && !lambda.is_real() {
        return false;
    }
    f.entries().iter().zip(g.entries()).all(|(a, b)| *a == &lambda * b)
}

fn normalize(s: Signature) -> (ExactNumber, Signature) {
    let p = s.entries().iter().position(|x| !x.is_zero()).expect("nonzero factor");
    let lead = s.get(p).clone();
    let inv = lead.inv().expect("nonzero lead");
    (lead, s.scale(&inv))
}

/// Unique prime factorization of a nonzero signature.
pub fn prime_factorize(f: &Signature) -> Result<Factorization> {
    prime_factorize_with_cap(f, FACTOR_ARITY_CAP)
}

pub fn prime_factorize_with_cap(f: &Signature, cap: usize) -> Result<Factorization> {
    if f.is_zero() {
        return Err(HolantError::ZeroSignature("the zero signature has no prime factorization".into()));
    }
    if f.arity() > cap {
        return Err(HolantError::Cap(format!("arity {} exceeds the factorization cap {cap}", f.arity())));
    }
    let mut scalar = ExactNumber::one();
    let mut factors = Vec::new();
    let mut cur = f.clone();
    let mut vars: Vec<usize> = (1..=f.arity()).collect();
    while !vars.is_empty() {
        let n = cur.arity();
        // The smallest splitting set containing the first variable is the
        // prime block of that variable.
        let block = (0..n.saturating_sub(1))
            .flat_map(|k| {
                (0..1usize << (n - 1)).filter(move |m| m.count_ones() as usize == k).map(|m| {
                    let mut s = vec![1];
                    s.extend((2..=n).filter(|v| m >> (v - 2) & 1 == 1));
                    s
                })
            })
            .find(|s| splits_at(&cur, s));
        let Some(s) = block else {
            let (lead, sig) = normalize(cur);
            scalar = &scalar * &lead;
            factors.push(Factor { vars, signature: sig });
            break;
        };
        let rest = cur.complement(&s);
        let m = cur.matrix_view(&s)?;
        let (r0, c0) = (0..m.rows())
            .flat_map(|r| (0..m.cols()).map(move |c| (r, c)))
            .find(|&(r, c)| !m.get(r, c).is_zero())
            .expect("nonzero signature");
        let g = Signature::new(s.len(), (0..m.rows()).map(|r| m.get(r, c0).clone()).collect())?;
        let inv = m.get(r0, c0).inv()?;
        let h = Signature::new(rest.len(), m.row(r0).iter().map(|x| x * &inv).collect())?;
        let (lead, g) = normalize(g);
        scalar = &scalar * &lead;
        factors.push(Factor { vars: s.iter().map(|&k| vars[k - 1]).collect(), signature: g });
        vars = rest.iter().map(|&k| vars[k - 1]).collect();
        cur = h;
    }
    if f.arity() == 0 {
        scalar = f.get(0).clone();
    }
    Ok(Factorization { arity: f.arity(), scalar, factors })
}

/// No f = g (x) h. Zero signatures of arity above one count as reducible.
pub fn is_irreducible(f: &Signature) -> Result<bool> {
    if f.is_zero() {
        if f.arity() > 1 {
            return Ok(false);
        }
        return Err(HolantError::ZeroSignature("irreducibility of a zero signature of arity <= 1".into()));
    }
    Ok(prime_factorize(f)?.factors.len() == 1)
}
