//! Named signatures.

use exact_field::ExactNumber;

use crate::error::{HolantError, Result};
use crate::holographic;
use crate::signature::{var_mask, Signature};

fn bit(n: usize, x: usize, i: usize) -> bool {
    x & var_mask(n, i) != 0
}

fn sign(odd: bool) -> ExactNumber {
    ExactNumber::from_int(if odd { -1 } else { 1 })
}

/// =_n.
pub fn eq(n: usize) -> Signature {
    let all = (1usize << n) - 1;
    Signature::from_fn(n, |x| ExactNumber::from_int(i64::from(x == 0 || x == all)))
}

/// !=_{2k}: x_1 != x_2, x_3 != x_4, ...
pub fn neq(n: usize) -> Signature {
    assert!(n.is_multiple_of(2), "disequality has even arity");
    Signature::from_fn(n, |x| ExactNumber::from_int(i64::from((1..=n).step_by(2).all(|i| bit(n, x, i) != bit(n, x, i + 1)))))
}

pub fn eq2() -> Signature {
    Signature::from_ints(&[1, 0, 0, 1])
}

/// =_2^- = (1, 0, 0, -1).
pub fn eq2_minus() -> Signature {
    Signature::from_ints(&[1, 0, 0, -1])
}

pub fn neq2() -> Signature {
    Signature::from_ints(&[0, 1, 1, 0])
}

/// !=_2^- = (0, 1, -1, 0).
pub fn neq2_minus() -> Signature {
    Signature::from_ints(&[0, 1, -1, 0])
}

/// The four Bell binaries in the order =2, =2^-, !=2, !=2^-.
pub fn bell() -> [Signature; 4] {
    [eq2(), eq2_minus(), neq2(), neq2_minus()]
}

pub const BELL_NAMES: [&str; 4] = ["eq2", "eq2m", "neq2", "neq2m"];

fn even_weight(x: usize) -> bool {
    x.count_ones().is_multiple_of(2)
}

// x1x2 + x2x3 + x1x3 + x1x4 + x2x5 + x3x6
fn f6_quadratic(x: usize) -> bool {
    let b = |i| bit(6, x, i);
    (b(1) & b(2)) ^ (b(2) & b(3)) ^ (b(1) & b(3)) ^ (b(1) & b(4)) ^ (b(2) & b(5)) ^ (b(3) & b(6))
}

/// The 6-ary signature on even-weight inputs with sign (-1)^{x1x2+x2x3+x1x3+x1x4+x2x5+x3x6}.
pub fn f6_hat() -> Signature {
    Signature::from_fn(6, |x| if even_weight(x) { sign(f6_quadratic(x)) } else { ExactNumber::zero() })
}

/// f6 with the extra linear terms x1 + x2 + x3 in the exponent.
pub fn f6() -> Signature {
    Signature::from_fn(6, |x| {
        if even_weight(x) {
            sign(f6_quadratic(x) ^ bit(6, x, 1) ^ bit(6, x, 2) ^ bit(6, x, 3))
        } else {
            ExactNumber::zero()
        }
    })
}

/// H f6 with H = (1/sqrt2)[[1, 1], [-1, 1]].
pub fn f6_h() -> Signature {
    holographic::h().apply(&f6())
}

/// Hhat f6hat.
pub fn f6_hat_h() -> Signature {
    holographic::h_hat().apply(&f6_hat())
}

// Solutions of x1+x2+x3+x4 = x5+x6+x7+x8 = x1+x2+x5+x6 = x1+x3+x5+x7 = 0.
fn in_t(x: usize) -> bool {
    let b = |i| bit(8, x, i);
    !(b(1) ^ b(2) ^ b(3) ^ b(4))
        && !(b(5) ^ b(6) ^ b(7) ^ b(8))
        && !(b(1) ^ b(2) ^ b(5) ^ b(6))
        && !(b(1) ^ b(3) ^ b(5) ^ b(7))
}

/// Indicator of the 16-point affine subspace T.
pub fn f8() -> Signature {
    Signature::from_fn(8, |x| ExactNumber::from_int(i64::from(in_t(x))))
}

/// Even-weight indicator times (-1)^{sum_{i<j} x_i x_j}.
pub fn q8() -> Signature {
    Signature::from_fn(8, |x| {
        if even_weight(x) {
            let w = x.count_ones();
            sign((w * (w - w.min(1)) / 2) % 2 == 1)
        } else {
            ExactNumber::zero()
        }
    })
}

/// Even-weight indicator minus 4 f8.
pub fn g8() -> Signature {
    Signature::from_fn(8, |x| ExactNumber::from_int(i64::from(even_weight(x)) - 4 * i64::from(in_t(x))))
}

/// q8 - 4 f8.
pub fn g8_prime() -> Signature {
    q8().sub(&f8().scale(&ExactNumber::from_int(4))).unwrap()
}

/// chi_T times (-1)^{x1x2x3 + x1x2x5 + x1x3x5 + x2x3x5}.
pub fn h8() -> Signature {
    Signature::from_fn(8, |x| {
        if !in_t(x) {
            return ExactNumber::zero();
        }
        let b = |i| bit(8, x, i);
        sign((b(1) & b(2) & b(3)) ^ (b(1) & b(2) & b(5)) ^ (b(1) & b(3) & b(5)) ^ (b(2) & b(3) & b(5)))
    })
}

/// The 4-ary signature with M_{12,34} = H4.
pub fn h4() -> Signature {
    Signature::from_ints(&[1, 0, 0, 1, 0, 1, 1, 0, 0, 1, -1, 0, 1, 0, 0, -1])
}

/// Look a signature up by its catalog name.
pub fn by_name(name: &str) -> Result<Signature> {
    let s = match name {
        "eq2m" => eq2_minus(),
        "neq2m" => neq2_minus(),
        "f6" => f6(),
        "f6H" => f6_h(),
        "f6hat" => f6_hat(),
        "f6hatH" => f6_hat_h(),
        "f8" => f8(),
        "q8" => q8(),
        "g8" => g8(),
        "g8p" => g8_prime(),
        "h8" => h8(),
        "h4" => h4(),
        _ => {
            if let Some(k) = name.strip_prefix("neq").and_then(|k| k.parse::<usize>().ok()) {
                if k >= 2 && k % 2 == 0 && k <= 16 {
                    return Ok(neq(k));
                }
            }
            if let Some(k) = name.strip_prefix("eq").and_then(|k| k.parse::<usize>().ok()) {
                if (1..=16).contains(&k) {
                    return Ok(eq(k));
                }
            }
            return Err(HolantError::Unknown(format!("signature '{name}'")));
        }
    };
    Ok(s)
}

pub const NAMES: [&str; 14] =
    ["eq<n>", "neq<2n>", "eq2m", "neq2m", "f6", "f6H", "f6hat", "f6hatH", "f8", "q8", "g8", "g8p", "h8", "h4"];
