//! Class membership, the Bell properties, and merge-closure checks.

use std::fmt;
use std::str::FromStr;

use exact_field::ExactNumber;

use crate::catalog::{bell, neq2, BELL_NAMES};
use crate::error::{HolantError, Result};
use crate::factor::{is_associate, prime_factorize, Factorization, ScalarDomain};
use crate::gadget::merge;
use crate::props::affine::is_affine;
use crate::signature::Signature;

/// Multiply the entry at x by alpha^{<sigma, x>} and test for affine.
pub fn is_local_affine(f: &Signature) -> bool {
    f.support().into_iter().all(|sigma| {
        let g = Signature::from_fn(f.arity(), |x| {
            let e = f.get(x);
            if e.is_zero() {
                return ExactNumber::zero();
            }
            e * &ExactNumber::alpha_pow(i64::from((sigma & x).count_ones()))
        });
        is_affine(&g)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigClass {
    /// Real orthogonal binaries (and the binary zero signature).
    O,
    OTensor,
    /// Tensor products of binaries with ARS and parity.
    OHatTensor,
    /// Real nonzero associates of the Bell binaries.
    B,
    BTensor,
    /// Tensor powers of !=2, up to a real scalar.
    DTensor,
    /// Tensor products of unary and binary signatures.
    T,
    EO,
}

impl SigClass {
    pub const ALL: [SigClass; 8] =
        [SigClass::O, SigClass::OTensor, SigClass::OHatTensor, SigClass::B, SigClass::BTensor, SigClass::DTensor, SigClass::T, SigClass::EO];

    pub fn name(self) -> &'static str {
        match self {
            SigClass::O => "O",
            SigClass::OTensor => "O-tensor",
            SigClass::OHatTensor => "Ohat-tensor",
            SigClass::B => "B",
            SigClass::BTensor => "B-tensor",
            SigClass::DTensor => "D-tensor",
            SigClass::T => "T",
            SigClass::EO => "EO",
        }
    }
}

impl fmt::Display for SigClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SigClass {
    type Err = HolantError;
    fn from_str(s: &str) -> Result<Self> {
        SigClass::ALL.into_iter().find(|c| c.name().eq_ignore_ascii_case(s)).ok_or_else(|| HolantError::Unknown(format!("class '{s}'")))
    }
}

/// Real binary with M M^T = lambda I, lambda > 0, or the binary zero signature.
pub fn is_orthogonal_binary(f: &Signature) -> bool {
    if f.arity() != 2 || !f.is_real() {
        return false;
    }
    if f.is_zero() {
        return true;
    }
    let m = f.matrix_view(&[1]).expect("binary");
    m.mul(&m.transpose()).scalar_multiple_of_identity().is_some_and(|l| l.real_sign() == Some(1))
}

fn is_bell_associate(f: &Signature) -> bool {
    f.arity() == 2 && !f.is_zero() && bell().iter().any(|b| is_associate(f, b, ScalarDomain::Real))
}

fn binary_factors(fz: &Factorization) -> bool {
    fz.factors.iter().all(|x| x.signature.arity() == 2)
}

/// Rebuild the tensor product of the chosen binaries at the factor
/// positions and compare up to a real nonzero scalar.
fn matches_binaries(f: &Signature, fz: &Factorization, allowed: &[Signature]) -> bool {
    if !binary_factors(fz) {
        return false;
    }
    let mut chosen = Vec::new();
    for x in &fz.factors {
        match allowed.iter().find(|b| is_associate(&x.signature, b, ScalarDomain::Complex)) {
            Some(b) => chosen.push((x.vars.clone(), b.clone())),
            None => return false,
        }
    }
    let rebuilt = Factorization {
        arity: f.arity(),
        scalar: ExactNumber::one(),
        factors: chosen.into_iter().map(|(vars, signature)| crate::factor::Factor { vars, signature }).collect(),
    }
    .recompose();
    is_associate(f, &rebuilt, ScalarDomain::Real)
}

/// Nonzero f equal to lambda * (tensor of copies of b), lambda real.
pub fn in_single_tensor(f: &Signature, b: &Signature) -> Result<bool> {
    if f.is_zero() || f.arity() % 2 == 1 {
        return Ok(false);
    }
    let fz = prime_factorize(f)?;
    Ok(matches_binaries(f, &fz, std::slice::from_ref(b)))
}

pub fn class_membership(f: &Signature, class: SigClass) -> Result<bool> {
    let n = f.arity();
    match class {
        SigClass::O => {
            if n != 2 {
                return Err(HolantError::Arity(format!("class O holds binaries, got arity {n}")));
            }
            Ok(is_orthogonal_binary(f))
        }
        SigClass::B => {
            if n != 2 {
                return Err(HolantError::Arity(format!("class B holds binaries, got arity {n}")));
            }
            Ok(is_bell_associate(f))
        }
        SigClass::EO => f.is_eo(),
        SigClass::T => {
            if f.is_zero() {
                return Ok(true);
            }
            Ok(prime_factorize(f)?.factors.iter().all(|x| x.signature.arity() <= 2))
        }
        SigClass::OTensor => {
            if f.is_zero() {
                return Ok(n.is_multiple_of(2));
            }
            if !f.is_real() {
                return Ok(false);
            }
            let fz = prime_factorize(f)?;
            Ok(binary_factors(&fz) && fz.factors.iter().all(|x| is_orthogonal_binary(&x.signature)))
        }
        SigClass::OHatTensor => {
            if f.is_zero() {
                return Ok(n.is_multiple_of(2));
            }
            // With f ARS, factors with parity can each be rescaled to be ARS.
            if !f.ars_check() {
                return Ok(false);
            }
            let fz = prime_factorize(f)?;
            Ok(binary_factors(&fz) && fz.factors.iter().all(|x| x.signature.has_parity()))
        }
        SigClass::BTensor => {
            if f.is_zero() || n % 2 == 1 {
                return Ok(false);
            }
            let fz = prime_factorize(f)?;
            Ok(matches_binaries(f, &fz, &bell()))
        }
        SigClass::DTensor => in_single_tensor(f, &neq2()),
    }
}

/// First failing (i, j, binary name), if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeReport {
    pub passes: bool,
    pub violation: Option<(usize, usize, &'static str)>,
}

impl MergeReport {
    fn ok() -> Self {
        MergeReport { passes: true, violation: None }
    }
}

fn all_merges(
    f: &Signature,
    binaries: &[(&'static str, Signature)],
    mut accept: impl FnMut(&Signature, &Signature) -> Result<bool>,
) -> Result<MergeReport> {
    for i in 1..=f.arity() {
        for j in i + 1..=f.arity() {
            for (name, b) in binaries {
                let m = merge(f, i, j, b)?;
                if !accept(&m, b)? {
                    return Ok(MergeReport { passes: false, violation: Some((i, j, name)) });
                }
            }
        }
    }
    Ok(MergeReport::ok())
}

fn bell_named() -> Vec<(&'static str, Signature)> {
    BELL_NAMES.into_iter().zip(bell()).collect()
}

fn needs_four(f: &Signature, what: &str) -> Result<()> {
    if f.arity() < 4 {
        return Err(HolantError::Arity(format!("{what} needs arity >= 4")));
    }
    Ok(())
}

/// Irreducible, and every Bell merge of every pair lies in the Bell tensor class.
/// A zero signature passes vacuously.
pub fn bell_property(f: &Signature) -> Result<MergeReport> {
    needs_four(f, "the Bell property")?;
    if f.is_zero() {
        return Ok(MergeReport::ok());
    }
    if prime_factorize(f)?.factors.len() != 1 {
        return Ok(MergeReport { passes: false, violation: None });
    }
    all_merges(f, &bell_named(), |m, _| class_membership(m, SigClass::BTensor))
}

/// Every merge through b is a tensor power of b, up to a real scalar.
pub fn strong_bell_property(f: &Signature) -> Result<MergeReport> {
    needs_four(f, "the strong Bell property")?;
    if f.is_zero() {
        return Ok(MergeReport::ok());
    }
    all_merges(f, &bell_named(), in_single_tensor)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureFamily {
    /// !=2 merges land in the Ohat tensor class.
    HatOTensor,
    /// !=2 merges land in the D tensor class.
    HatDTensor,
    /// All Bell merges are affine.
    BellAffine,
}

impl FromStr for ClosureFamily {
    type Err = HolantError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hat-O" | "int-ohat" => Ok(ClosureFamily::HatOTensor),
            "hat-D" | "int-dhat" => Ok(ClosureFamily::HatDTensor),
            "bell-A" | "int-bell-a" => Ok(ClosureFamily::BellAffine),
            _ => Err(HolantError::Unknown(format!("closure family '{s}' (use hat-O, hat-D or bell-A)"))),
        }
    }
}

pub fn closure_check(f: &Signature, family: ClosureFamily) -> Result<MergeReport> {
    needs_four(f, "a closure check")?;
    if f.is_zero() {
        return Ok(MergeReport::ok());
    }
    match family {
        ClosureFamily::HatOTensor => all_merges(f, &[("neq2", neq2())], |m, _| class_membership(m, SigClass::OHatTensor)),
        ClosureFamily::HatDTensor => all_merges(f, &[("neq2", neq2())], |m, _| class_membership(m, SigClass::DTensor)),
        ClosureFamily::BellAffine => all_merges(f, &bell_named(), |m, _| Ok(is_affine(m))),
    }
}
