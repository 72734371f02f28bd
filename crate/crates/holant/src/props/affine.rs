//! Affine signatures: lambda * chi_{AX=0} * i^{Q(X)} with even cross terms.

use exact_field::ExactNumber;

use crate::signature::{var_mask, Signature};

/// Certificate for membership in the affine class. On the support, the free
/// variables determine the point; Q is written in those variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineCertificate {
    pub arity: usize,
    pub lambda: ExactNumber,
    /// A support point (as an index, x_1 most significant).
    pub offset: usize,
    /// Basis of the direction space, in reduced echelon form.
    pub basis: Vec<usize>,
    /// 1-based free variables, one per basis vector.
    pub free_vars: Vec<usize>,
    /// Linear coefficients of Q in Z_4, one per free variable.
    pub linear: Vec<u8>,
    /// Cross terms (k, l, c) over free-variable positions, c in {2} (mod 4).
    pub cross: Vec<(usize, usize, u8)>,
}

impl AffineCertificate {
    fn support_point(&self, y: usize) -> usize {
        let r = self.free_vars.len();
        let mut x = self.offset;
        for (k, &v) in self.free_vars.iter().enumerate() {
            let want = y >> (r - 1 - k) & 1 == 1;
            let have = x & var_mask(self.arity, v) != 0;
            if want != have {
                x ^= self.basis[k];
            }
        }
        x
    }

    fn q(&self, y: usize) -> u8 {
        let r = self.free_vars.len();
        let bit = |k: usize| (y >> (r - 1 - k) & 1) as u32;
        let mut q = 0u32;
        for (k, &a) in self.linear.iter().enumerate() {
            q += u32::from(a) * bit(k);
        }
        for &(k, l, c) in &self.cross {
            q += u32::from(c) * bit(k) * bit(l);
        }
        (q % 4) as u8
    }

    /// lambda * chi * i^Q as a table.
    pub fn reconstruct(&self) -> Signature {
        let mut out = Signature::zero(self.arity).into_entries();
        if !self.lambda.is_zero() {
            for y in 0..1usize << self.free_vars.len() {
                out[self.support_point(y)] = &self.lambda * &ExactNumber::i_pow(i64::from(self.q(y)));
            }
        }
        Signature::new(self.arity, out).expect("arity already checked")
    }
}

/// Exponent k with x = i^k, if any.
fn i_exponent(x: &ExactNumber) -> Option<u8> {
    (0..4).find(|&k| *x == ExactNumber::i_pow(i64::from(k)))
}

/// Reduced row echelon basis over GF(2); returns (basis, pivot bit for each).
fn echelon(vectors: impl Iterator<Item = usize>) -> Vec<(usize, usize)> {
    let mut basis: Vec<(usize, usize)> = Vec::new();
    for mut v in vectors {
        for &(b, p) in &basis {
            if v & p != 0 {
                v ^= b;
            }
        }
        if v == 0 {
            continue;
        }
        let p = 1usize << (usize::BITS - 1 - v.leading_zeros());
        for (b, _) in basis.iter_mut() {
            if *b & p != 0 {
                *b ^= v;
            }
        }
        basis.push((v, p));
    }
    basis.sort_by(|a, b| b.1.cmp(&a.1));
    basis
}

/// Decide membership in the affine class, with a certificate or a reason.
pub fn affine_check(f: &Signature) -> std::result::Result<AffineCertificate, String> {
    let n = f.arity();
    let supp = f.support();
    let Some(&base) = supp.first() else {
        return Ok(AffineCertificate {
            arity: n,
            lambda: ExactNumber::zero(),
            offset: 0,
            basis: vec![],
            free_vars: vec![],
            linear: vec![],
            cross: vec![],
        });
    };
    let n0 = f.get(base).norm_sq();
    if let Some(&x) = supp.iter().find(|&&x| f.get(x).norm_sq() != n0) {
        return Err(format!(
            "entries of different norms: |f({})|^2 = {} vs {}",
            crate::signature::bitstring(x, n),
            f.get(x).norm_sq().to_compact_string(),
            n0.to_compact_string()
        ));
    }
    let eb = echelon(supp.iter().map(|&x| x ^ base));
    if supp.len() != 1 << eb.len() {
        return Err(format!("support of size {} is not an affine subspace", supp.len()));
    }
    let lambda = f.get(base).clone();
    let inv = lambda.inv().expect("support entry is nonzero");
    let mut cert = AffineCertificate {
        arity: n,
        lambda: lambda.clone(),
        offset: base,
        basis: eb.iter().map(|&(b, _)| b).collect(),
        free_vars: eb.iter().map(|&(_, p)| n - p.trailing_zeros() as usize).collect(),
        linear: vec![],
        cross: vec![],
    };
    let r = eb.len();
    let exp_at = |cert: &AffineCertificate, y: usize| -> std::result::Result<u8, String> {
        let x = cert.support_point(y);
        let ratio = f.get(x) * &inv;
        i_exponent(&ratio).ok_or_else(|| format!("f({}) is not a power of i times the base value", crate::signature::bitstring(x, n)))
    };
    // The base point may not be y = 0; fix lambda at y = 0.
    let e0 = exp_at(&cert, 0)?;
    cert.lambda = &lambda * &ExactNumber::i_pow(i64::from(e0));
    let shift = (4 - e0) % 4;
    let e = |cert: &AffineCertificate, y: usize| -> std::result::Result<u8, String> { Ok((exp_at(cert, y)? + shift) % 4) };
    for k in 0..r {
        cert.linear.push(e(&cert, 1 << (r - 1 - k))?);
    }
    for k in 0..r {
        for l in k + 1..r {
            let v = e(&cert, 1 << (r - 1 - k) | 1 << (r - 1 - l))?;
            let c = (v + 8 - cert.linear[k] - cert.linear[l]) % 4;
            if c % 2 == 1 {
                return Err(format!("odd cross term between x{} and x{}", cert.free_vars[k], cert.free_vars[l]));
            }
            if c != 0 {
                cert.cross.push((k, l, c));
            }
        }
    }
    for y in 0..1usize << r {
        if e(&cert, y)? != cert.q(y) {
            return Err(format!(
                "phase at {} is not quadratic",
                crate::signature::bitstring(cert.support_point(y), n)
            ));
        }
    }
    Ok(cert)
}

pub fn is_affine(f: &Signature) -> bool {
    affine_check(f).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;

    #[test]
    fn catalog_members() {
        for s in [eq2(), neq2(), eq2_minus(), f6(), f6_hat(), f8(), h4()] {
            let c = affine_check(&s).unwrap();
            assert_eq!(c.reconstruct(), s);
        }
        assert!(affine_check(&eq2()).unwrap().cross.is_empty());
        assert!(!is_affine(&g8()));
        assert!(!is_affine(&h8()));
        assert!(is_affine(&Signature::zero(3)));
        assert!(!is_affine(&Signature::from_ints(&[1, 1, 1, 0])));
        let t = Signature::new(2, vec![ExactNumber::one(), ExactNumber::zero(), ExactNumber::zero(), ExactNumber::i()]).unwrap();
        assert!(is_affine(&t));
        let a = Signature::new(1, vec![ExactNumber::one(), ExactNumber::alpha()]).unwrap();
        assert!(!is_affine(&a));
    }
}
