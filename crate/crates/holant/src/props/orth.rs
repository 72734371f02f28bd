//! First and second order orthogonality.

use exact_field::ExactNumber;

use crate::error::{HolantError, Result};
use crate::signature::{inner, norm_sq, Signature};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthReport {
    pub passes: bool,
    /// mu for first order, lambda for second order; set when passing.
    pub constant: Option<ExactNumber>,
    /// First violation, human readable.
    pub violation: Option<String>,
}

impl OrthReport {
    fn pass(c: ExactNumber) -> Self {
        OrthReport { passes: true, constant: Some(c), violation: None }
    }

    fn fail(msg: String) -> Self {
        OrthReport { passes: false, constant: None, violation: Some(msg) }
    }
}

/// <f^{a}_{vars}, f^{b}_{vars}> with a, b read with the first listed variable most significant.
pub fn block_inner(f: &Signature, vars: &[usize], a: usize, b: usize) -> Result<ExactNumber> {
    Ok(inner(&f.block(vars, a)?, &f.block(vars, b)?))
}

fn bits(v: usize, k: usize) -> String {
    crate::signature::bitstring(v, k)
}

/// Checks that the 2^k row blocks over `vars` all have squared norm `c` and are
/// pairwise orthogonal. Updates `c` on first use.
fn orthonormal_blocks(f: &Signature, vars: &[usize], c: &mut Option<ExactNumber>) -> Result<Option<String>> {
    let k = vars.len();
    let blocks: Vec<Vec<ExactNumber>> = (0..1usize << k).map(|a| f.block(vars, a)).collect::<Result<_>>()?;
    let label = vars.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
    for (a, u) in blocks.iter().enumerate() {
        let n = norm_sq(u);
        match c {
            None => *c = Some(n),
            Some(m) if *m != n => {
                return Ok(Some(format!("|f[{label}={}]|^2 = {} differs from {}", bits(a, k), n.to_compact_string(), m.to_compact_string())));
            }
            _ => {}
        }
    }
    if c.as_ref().is_some_and(|m| m.is_zero()) {
        return Ok(Some(format!("blocks over {label} have zero norm")));
    }
    for a in 0..blocks.len() {
        for b in a + 1..blocks.len() {
            let ip = inner(&blocks[a], &blocks[b]);
            if !ip.is_zero() {
                return Ok(Some(format!(
                    "<f[{label}={}], f[{label}={}]> = {}",
                    bits(a, k),
                    bits(b, k),
                    ip.to_compact_string()
                )));
            }
        }
    }
    Ok(None)
}

/// |f_i^0|^2 = |f_i^1|^2 = mu != 0 and <f_i^0, f_i^1> = 0 for every i.
pub fn first_orth(f: &Signature) -> Result<OrthReport> {
    if f.arity() < 2 {
        return Err(HolantError::Arity("first order orthogonality needs arity >= 2".into()));
    }
    if f.is_zero() {
        return Err(HolantError::ZeroSignature("orthogonality of the zero signature".into()));
    }
    let mut mu = None;
    for i in 1..=f.arity() {
        if let Some(v) = orthonormal_blocks(f, &[i], &mut mu)? {
            return Ok(OrthReport::fail(v));
        }
    }
    Ok(OrthReport::pass(mu.expect("at least one variable")))
}

/// For every pair {i, j}, the four blocks f_{ij}^{ab} share one nonzero
/// squared norm lambda and are pairwise orthogonal.
pub fn second_orth(f: &Signature) -> Result<OrthReport> {
    if f.arity() < 4 {
        return Err(HolantError::Arity("second order orthogonality needs arity >= 4".into()));
    }
    let mut lambda = None;
    for i in 1..=f.arity() {
        for j in i + 1..=f.arity() {
            if let Some(v) = orthonormal_blocks(f, &[i, j], &mut lambda)? {
                return Ok(OrthReport::fail(v));
            }
        }
    }
    Ok(OrthReport::pass(lambda.expect("at least one pair")))
}

/// Outcome of checking the norm and orthogonality identities implied by
/// 2nd-Orth for a signature with ARS.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsequenceReport {
    pub holds: bool,
    pub lambda: Option<ExactNumber>,
    /// Number of individual equalities checked.
    pub checked: usize,
    pub violation: Option<String>,
}

fn tuple_label(vars: &[usize], a: usize) -> String {
    let v = vars.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
    format!("f[{v}={}]", bits(a, vars.len()))
}

/// Checks, for a signature passing 2nd-Orth with constant lambda:
/// every pair block has norm lambda and splits over any third variable into
/// two parts summing to lambda; every triple block has norm lambda/2 and
/// splits over any fourth variable into parts summing to lambda/2; on every
/// ordered quadruple the norms of 0000, 0011, 1100, 1111 agree, as do those of
/// 0001, 0010, 1101, 1110; and distinct pair blocks are orthogonal.
pub fn second_orth_consequences(f: &Signature) -> Result<ConsequenceReport> {
    let r = second_orth(f)?;
    let fail = |checked, msg: String| ConsequenceReport { holds: false, lambda: None, checked, violation: Some(msg) };
    let Some(lambda) = r.constant else {
        return Ok(fail(0, r.violation.unwrap_or_default()));
    };
    let n = f.arity();
    let half = &lambda * &ExactNumber::from_ratio(1, 2);
    let norm = |vars: &[usize], a: usize| -> Result<ExactNumber> { Ok(norm_sq(&f.block(vars, a)?)) };
    let mut checked = 0;
    let distinct = |t: &[usize]| (0..t.len()).all(|p| (p + 1..t.len()).all(|q| t[p] != t[q]));

    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                if !distinct(&[i, j, k]) {
                    continue;
                }
                for ab in 0..4 {
                    let pair = norm(&[i, j], ab)?;
                    let split = &norm(&[i, j, k], ab << 1)? + &norm(&[i, j, k], ab << 1 | 1)?;
                    checked += 2;
                    if pair != lambda || split != lambda {
                        return Ok(fail(checked, format!("{} splits over x{k} to {}, expected {}", tuple_label(&[i, j], ab), split.to_compact_string(), lambda.to_compact_string())));
                    }
                }
                for abc in 0..8 {
                    let t = norm(&[i, j, k], abc)?;
                    checked += 1;
                    if t != half {
                        return Ok(fail(checked, format!("|{}|^2 = {}, expected lambda/2 = {}", tuple_label(&[i, j, k], abc), t.to_compact_string(), half.to_compact_string())));
                    }
                }
                for l in 1..=n {
                    if !distinct(&[i, j, k, l]) {
                        continue;
                    }
                    let q = [i, j, k, l];
                    let sq: Vec<ExactNumber> = (0..16).map(|a| norm(&q, a)).collect::<Result<_>>()?;
                    for abc in 0..8 {
                        checked += 1;
                        if &sq[abc << 1] + &sq[abc << 1 | 1] != half {
                            return Ok(fail(checked, format!("{} does not split over x{l} into lambda/2", tuple_label(&[i, j, k], abc))));
                        }
                    }
                    for group in [[0b0000, 0b0011, 0b1100, 0b1111], [0b0001, 0b0010, 0b1101, 0b1110]] {
                        checked += 1;
                        if group.iter().any(|&a| sq[a] != sq[group[0]]) {
                            let shown: Vec<String> = group.iter().map(|&a| format!("|{}|^2 = {}", tuple_label(&q, a), sq[a].to_compact_string())).collect();
                            return Ok(fail(checked, shown.join(", ")));
                        }
                    }
                }
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for a in 0..4 {
                for b in a + 1..4 {
                    checked += 1;
                    let ip = block_inner(f, &[i, j], a, b)?;
                    if !ip.is_zero() {
                        return Ok(fail(checked, format!("<{}, {}> = {}", tuple_label(&[i, j], a), tuple_label(&[i, j], b), ip.to_compact_string())));
                    }
                }
            }
        }
    }
    Ok(ConsequenceReport { holds: true, lambda: Some(lambda), checked, violation: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;
    use crate::gadget::merge;

    #[test]
    fn first_order() {
        let r = first_orth(&neq2()).unwrap();
        assert!(r.passes);
        assert_eq!(r.constant, Some(ExactNumber::one()));
        assert!(!first_orth(&Signature::from_ints(&[1, 0, 0, 2])).unwrap().passes);
        assert!(first_orth(&f6()).unwrap().passes);
        assert!(first_orth(&Signature::zero(2)).is_err());
    }

    #[test]
    fn second_order() {
        let r = second_orth(&f8()).unwrap();
        assert!(r.passes);
        assert_eq!(r.constant, Some(ExactNumber::from_int(4)));
        assert!(!second_orth(&eq2().tensor(&eq2())).unwrap().passes);
        assert!(second_orth(&f6()).unwrap().passes);
        let h = merge(&g8(), 1, 5, &eq2()).unwrap().scale(&ExactNumber::from_ratio(1, 2));
        let r = second_orth(&h).unwrap();
        assert!(!r.passes);
        assert_eq!(block_inner(&h, &[1, 4], 0, 3).unwrap(), ExactNumber::from_int(8));
    }

    #[test]
    fn consequences_of_second_order() {
        let r = second_orth_consequences(&f8()).unwrap();
        assert!(r.holds, "{:?}", r.violation);
        assert_eq!(r.lambda, Some(ExactNumber::from_int(4)));
        assert!(second_orth_consequences(&f6_hat()).unwrap().holds);
        assert!(!second_orth_consequences(&eq2().tensor(&eq2())).unwrap().holds);
    }
}
