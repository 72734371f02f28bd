//! A sound, deliberately incomplete classifier for the tractability
//! condition: F inside T, or P/A/L-transformable by a catalog transform.
//! NOT_CERTIFIED never claims hardness; it lists the evidence found.

use std::fmt;

use crate::catalog::{bell, BELL_NAMES};
use crate::error::Result;
use crate::factor::prime_factorize;
use crate::gadget::merge;
use crate::holographic::{binary_image_of_eq2, identity, transform_catalog, Transform2x2};
use crate::props::{class_membership, is_affine, is_local_affine, is_product_type, second_orth, SigClass};
use crate::signature::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Clause {
    /// Every signature is a tensor product of unaries and binaries.
    Tensor,
    Product,
    Affine,
    LocalAffine,
}

impl Clause {
    pub fn name(self) -> &'static str {
        match self {
            Clause::Tensor => "T",
            Clause::Product => "P",
            Clause::Affine => "A",
            Clause::LocalAffine => "L",
        }
    }

    pub fn holds(self, f: &Signature) -> Result<bool> {
        Ok(match self {
            Clause::Tensor => class_membership(f, SigClass::T)?,
            Clause::Product => is_product_type(f),
            Clause::Affine => is_affine(f),
            Clause::LocalAffine => is_local_affine(f),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Tractable,
    NotCertified,
}

#[derive(Debug, Clone)]
pub struct Certificate {
    pub clause: Clause,
    pub transform: Transform2x2,
}

impl Certificate {
    /// Re-check the clause after the transform, including the image of =2.
    pub fn verify(&self, sigs: &[Signature]) -> Result<bool> {
        if self.clause == Clause::Tensor {
            for f in sigs {
                if !self.clause.holds(f)? {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        if !self.clause.holds(&binary_image_of_eq2(&self.transform))? {
            return Ok(false);
        }
        for f in sigs {
            if !self.clause.holds(&self.transform.apply(f))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub tag: &'static str,
    pub message: String,
}

#[derive(Debug, Clone)]
pub struct Verdict {
    pub outcome: Outcome,
    pub certificate: Option<Certificate>,
    pub diagnostics: Vec<Diagnostic>,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.outcome, &self.certificate) {
            (Outcome::Tractable, Some(c)) => writeln!(f, "TRACTABLE clause={} transform={}", c.clause.name(), c.transform.name())?,
            _ => writeln!(f, "NOT_CERTIFIED")?,
        }
        for d in &self.diagnostics {
            writeln!(f, "  [{}] {}", d.tag, d.message)?;
        }
        Ok(())
    }
}

/// Find a certificate using the given transform list.
pub fn certify(sigs: &[Signature], transforms: &[Transform2x2]) -> Result<Option<Certificate>> {
    let mut all_t = true;
    for f in sigs {
        if !Clause::Tensor.holds(f)? {
            all_t = false;
            break;
        }
    }
    if all_t {
        return Ok(Some(Certificate { clause: Clause::Tensor, transform: identity() }));
    }
    for clause in [Clause::Product, Clause::Affine, Clause::LocalAffine] {
        'transform: for t in transforms {
            if !clause.holds(&binary_image_of_eq2(t))? {
                continue;
            }
            for f in sigs {
                if !clause.holds(&t.apply(f))? {
                    continue 'transform;
                }
            }
            return Ok(Some(Certificate { clause, transform: t.clone() }));
        }
    }
    Ok(None)
}

fn diag(tag: &'static str, message: String) -> Diagnostic {
    Diagnostic { tag, message }
}

/// Evidence gathered for one signature that resisted certification.
fn observations(name: &str, f: &Signature, out: &mut Vec<Diagnostic>) -> Result<()> {
    let n = f.arity();
    if f.is_zero() {
        return Ok(());
    }
    if n >= 2 && !f.has_parity() {
        out.push(diag("observation:no-parity", format!("{name} has no parity")));
    }
    if n % 2 == 1 {
        out.push(diag("observation:odd-arity", format!("{name} has odd arity {n}")));
    }
    if n == 2 && f.is_real() && !class_membership(f, SigClass::O)? {
        out.push(diag("observation:binary-not-orthogonal", format!("{name} is a real binary outside O")));
    }
    if n >= 4 && n.is_multiple_of(2) && f.is_real() && !class_membership(f, SigClass::OTensor)? {
        out.push(diag("observation:not-O-tensor", format!("{name} of arity {n} is not a tensor product of orthogonal binaries")));
    }
    if n < 4 || prime_factorize(f)?.factors.len() != 1 {
        return Ok(());
    }
    let r = second_orth(f)?;
    if !r.passes {
        out.push(diag(
            "hardness:second-order-orthogonality",
            format!("{name} is irreducible and fails 2nd-Orth ({})", r.violation.unwrap_or_default()),
        ));
    }
    if n < 6 {
        return Ok(());
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for (bname, b) in BELL_NAMES.iter().zip(bell()) {
                let m = merge(f, i, j, &b)?;
                if m.is_zero() || prime_factorize(&m)?.factors.len() != 1 {
                    continue;
                }
                let r = second_orth(&m)?;
                if !r.passes {
                    out.push(diag(
                        "hardness:second-order-orthogonality",
                        format!(
                            "merge({name},{i},{j},{bname}) is irreducible and fails 2nd-Orth ({})",
                            r.violation.unwrap_or_default()
                        ),
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Hardness-relevant evidence for each signature, independent of the verdict.
pub fn observe(named: &[(String, Signature)]) -> Result<Vec<Diagnostic>> {
    let mut out = Vec::new();
    for (name, f) in named {
        observations(name, f, &mut out)?;
    }
    Ok(out)
}

pub fn classify(named: &[(String, Signature)]) -> Result<Verdict> {
    classify_with(named, &transform_catalog())
}

pub fn classify_with(named: &[(String, Signature)], transforms: &[Transform2x2]) -> Result<Verdict> {
    let sigs: Vec<Signature> = named.iter().map(|(_, s)| s.clone()).collect();
    if let Some(c) = certify(&sigs, transforms)? {
        return Ok(Verdict { outcome: Outcome::Tractable, certificate: Some(c), diagnostics: vec![] });
    }
    let mut diagnostics = vec![diag(
        "scope:finite-catalog",
        format!(
            "no clause certified over {} catalog transforms; transforms outside the catalog (e.g. diagonal phases at angles other than multiples of pi/4) are not searched",
            transforms.len()
        ),
    )];
    diagnostics.extend(observe(named)?);
    Ok(Verdict { outcome: Outcome::NotCertified, certificate: None, diagnostics })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;

    fn one(name: &str, s: Signature) -> Vec<(String, Signature)> {
        vec![(name.to_string(), s)]
    }

    #[test]
    fn equality_is_tensor() {
        let v = classify(&one("eq2", eq2())).unwrap();
        assert_eq!(v.outcome, Outcome::Tractable);
        assert_eq!(v.certificate.unwrap().clause, Clause::Tensor);
    }

    #[test]
    fn f6_is_affine() {
        let v = classify(&one("f6", f6())).unwrap();
        let c = v.certificate.unwrap();
        assert_eq!(c.clause, Clause::Affine);
        assert!(c.verify(&[f6()]).unwrap());
    }

    #[test]
    fn g8_alone_is_affine_transformable() {
        let v = classify(&one("g8", g8())).unwrap();
        let c = v.certificate.unwrap();
        assert_eq!((c.clause, c.transform.name()), (Clause::Affine, "Talpha^1*Z"));
        assert!(c.verify(&[g8()]).unwrap());
        let d = observe(&one("g8", g8())).unwrap();
        assert!(d.iter().any(|d| d.tag == "hardness:second-order-orthogonality"
            && d.message.starts_with("merge(g8,1,5,eq2) is irreducible and fails 2nd-Orth")));
    }
}
