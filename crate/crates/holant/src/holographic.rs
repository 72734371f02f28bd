//! 2x2 holographic transformations acting as T^{(x)n} on signatures.

use std::collections::HashSet;
use std::fmt;

use exact_field::ExactNumber;

use crate::error::{HolantError, Result};
use crate::matrix::Matrix;
use crate::signature::{var_mask, Signature};

/// Invertible 2x2 matrix, row-major, with its inverse cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Transform2x2 {
    name: String,
    m: [ExactNumber; 4],
    inv: [ExactNumber; 4],
}

fn n(v: i64) -> ExactNumber {
    ExactNumber::from_int(v)
}

impl Transform2x2 {
    pub fn new(name: impl Into<String>, m: [ExactNumber; 4]) -> Result<Self> {
        let det = &(&m[0] * &m[3]) - &(&m[1] * &m[2]);
        if det.is_zero() {
            return Err(HolantError::Singular);
        }
        let di = det.inv()?;
        let inv = [&m[3] * &di, -(&m[1] * &di), -(&m[2] * &di), &m[0] * &di];
        Ok(Transform2x2 { name: name.into(), m, inv })
    }

    pub fn from_matrix(name: impl Into<String>, m: &Matrix) -> Result<Self> {
        if m.rows() != 2 || m.cols() != 2 {
            return Err(HolantError::Invalid("transform must be 2x2".into()));
        }
        Self::new(name, [m.get(0, 0).clone(), m.get(0, 1).clone(), m.get(1, 0).clone(), m.get(1, 1).clone()])
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn entries(&self) -> &[ExactNumber; 4] {
        &self.m
    }

    pub fn get(&self, r: usize, c: usize) -> &ExactNumber {
        &self.m[2 * r + c]
    }

    pub fn matrix(&self) -> Matrix {
        Matrix::new(2, 2, self.m.to_vec())
    }

    pub fn inverse(&self) -> Transform2x2 {
        Transform2x2 { name: format!("inv({})", self.name), m: self.inv.clone(), inv: self.m.clone() }
    }

    pub fn transpose(&self) -> Transform2x2 {
        let t = |a: &[ExactNumber; 4]| [a[0].clone(), a[2].clone(), a[1].clone(), a[3].clone()];
        Transform2x2 { name: format!("({})^T", self.name), m: t(&self.m), inv: t(&self.inv) }
    }

    pub fn compose(&self, o: &Transform2x2) -> Transform2x2 {
        let p = self.matrix().mul(&o.matrix());
        let q = o.inverse().matrix().mul(&self.inverse().matrix());
        let arr = |x: &Matrix| [x.get(0, 0).clone(), x.get(0, 1).clone(), x.get(1, 0).clone(), x.get(1, 1).clone()];
        Transform2x2 { name: format!("{}*{}", self.name, o.name), m: arr(&p), inv: arr(&q) }
    }

    pub fn same_matrix(&self, o: &Transform2x2) -> bool {
        self.m == o.m
    }

    pub fn is_real(&self) -> bool {
        self.m.iter().all(|x| x.is_real())
    }

    /// Real with T T^T = I.
    pub fn is_orthogonal(&self) -> bool {
        self.is_real() && self.matrix().mul(&self.matrix().transpose()) == Matrix::identity(2)
    }

    /// Tf = T^{(x)n} f with f as a column vector.
    pub fn apply(&self, f: &Signature) -> Signature {
        let a = f.arity();
        let mut cur: Vec<ExactNumber> = f.entries().to_vec();
        for i in 1..=a {
            let bit = var_mask(a, i);
            let mut next = vec![ExactNumber::zero(); cur.len()];
            for x in 0..cur.len() {
                if x & bit != 0 {
                    continue;
                }
                let (v0, v1) = (&cur[x], &cur[x | bit]);
                if v0.is_zero() && v1.is_zero() {
                    continue;
                }
                next[x] = lin(&self.m[0], v0, &self.m[1], v1);
                next[x | bit] = lin(&self.m[2], v0, &self.m[3], v1);
            }
            cur = next;
        }
        Signature::new(a, cur).expect("same shape")
    }

    /// fT^{-1} with f as a row vector: the image of a left-side signature.
    pub fn apply_row_inverse(&self, f: &Signature) -> Signature {
        self.inverse().transpose().apply(f)
    }
}

fn lin(a: &ExactNumber, x: &ExactNumber, b: &ExactNumber, y: &ExactNumber) -> ExactNumber {
    let mut s = ExactNumber::zero();
    if !a.is_zero() && !x.is_zero() {
        s += &(a * x);
    }
    if !b.is_zero() && !y.is_zero() {
        s += &(b * y);
    }
    s
}

impl fmt::Display for Transform2x2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.m.iter().map(|x| x.to_compact_string()).collect();
        write!(f, "{} = [[{}, {}], [{}, {}]]", self.name, e[0], e[1], e[2], e[3])
    }
}

impl fmt::Debug for Transform2x2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub fn identity() -> Transform2x2 {
    Transform2x2::new("I", [n(1), n(0), n(0), n(1)]).unwrap()
}

/// Z = (1/sqrt2) [[1, 1], [i, -i]].
pub fn z() -> Transform2x2 {
    let h = ExactNumber::inv_sqrt2();
    let hi = &h * &ExactNumber::i();
    Transform2x2::new("Z", [h.clone(), h, hi.clone(), -hi]).unwrap()
}

/// Z^{-1} = (1/sqrt2) [[1, -i], [1, i]].
pub fn z_inv() -> Transform2x2 {
    z().inverse().with_name("Zinv")
}

/// H = (1/sqrt2) [[1, 1], [-1, 1]].
pub fn h() -> Transform2x2 {
    let s = ExactNumber::inv_sqrt2();
    Transform2x2::new("H", [s.clone(), s.clone(), -s.clone(), s]).unwrap()
}

pub fn h_hat() -> Transform2x2 {
    conjugate_by_z(&h()).with_name("Hhat")
}

/// T_{alpha^s} = diag(1, alpha^s).
pub fn t_alpha(s: i64) -> Transform2x2 {
    Transform2x2::new(format!("Talpha^{}", s.rem_euclid(8)), [n(1), n(0), n(0), ExactNumber::alpha_pow(s)]).unwrap()
}

/// diag(alpha^s, conj(alpha)^s).
pub fn d_alpha(s: i64) -> Transform2x2 {
    Transform2x2::new(
        format!("Dalpha^{}", s.rem_euclid(8)),
        [ExactNumber::alpha_pow(s), n(0), n(0), ExactNumber::alpha_pow(-s)],
    )
    .unwrap()
}

// cos and sin of k*pi/4
fn cos_sin(k: i64) -> (ExactNumber, ExactNumber) {
    let r = ExactNumber::inv_sqrt2();
    let table = [(n(1), n(0)), (r.clone(), r.clone()), (n(0), n(1)), (-r.clone(), r.clone())];
    let k = k.rem_euclid(8);
    let (c, s) = table[(k % 4) as usize].clone();
    if k >= 4 {
        (-c, -s)
    } else {
        (c, s)
    }
}

/// Rotation by k*pi/4: [[cos, -sin], [sin, cos]].
pub fn rotation(k: i64) -> Transform2x2 {
    let (c, s) = cos_sin(k);
    Transform2x2::new(format!("Rot^{}", k.rem_euclid(8)), [c.clone(), -s.clone(), s, c]).unwrap()
}

/// Reflection [[cos, sin], [sin, -cos]] at angle k*pi/4.
pub fn reflection(k: i64) -> Transform2x2 {
    let (c, s) = cos_sin(k);
    Transform2x2::new(format!("Ref^{}", k.rem_euclid(8)), [c.clone(), s.clone(), s, -c]).unwrap()
}

pub fn n2() -> Transform2x2 {
    Transform2x2::new("N2", [n(0), n(1), n(1), n(0)]).unwrap()
}

/// Z^{-1} Q Z.
pub fn conjugate_by_z(q: &Transform2x2) -> Transform2x2 {
    let t = z_inv().compose(q).compose(&z());
    t.with_name(format!("hat({})", q.name()))
}

/// The binary (=2)(T^{-1})^{(x)2}.
pub fn binary_image_of_eq2(t: &Transform2x2) -> Signature {
    t.apply_row_inverse(&Signature::from_ints(&[1, 0, 0, 1]))
}

/// The named generators of the search catalog.
pub fn generators() -> Vec<Transform2x2> {
    let mut g = vec![identity(), z(), z_inv(), h(), h_hat(), n2()];
    for s in 0..8 {
        g.push(t_alpha(s));
        g.push(d_alpha(s));
        g.push(rotation(s));
        g.push(reflection(s));
    }
    dedup(g)
}

fn dedup(v: Vec<Transform2x2>) -> Vec<Transform2x2> {
    let mut seen: HashSet<[ExactNumber; 4]> = HashSet::new();
    v.into_iter().filter(|t| seen.insert(t.m.clone())).collect()
}

/// Words of length at most `depth` in the generators, without repeats,
/// closed under inverse.
pub fn transform_catalog_with_depth(depth: usize) -> Vec<Transform2x2> {
    let gens = generators();
    let mut all = vec![identity()];
    let mut layer = vec![identity()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for w in &layer {
            for g in &gens {
                next.push(if w.name() == "I" { g.clone() } else { w.compose(g) });
            }
        }
        all.extend(next.iter().cloned());
        all = dedup(all);
        layer = next;
    }
    let inverses: Vec<Transform2x2> = all.iter().map(|t| t.inverse()).collect();
    all.extend(inverses);
    dedup(all)
}

pub fn transform_catalog() -> Vec<Transform2x2> {
    transform_catalog_with_depth(2)
}

/// Resolve a transform by generator name, product of names joined by '*',
/// or an inline matrix "a,b,c,d".
pub fn parse_transform(text: &str) -> Result<Transform2x2> {
    let text = text.trim();
    if text.contains(',') {
        let parts: Vec<&str> = text.trim_matches(|c| c == '[' || c == ']').split(',').collect();
        if parts.len() != 4 {
            return Err(HolantError::Invalid(format!("inline transform needs 4 entries, got {}", parts.len())));
        }
        let mut m = Vec::new();
        for p in parts {
            m.push(ExactNumber::parse(p.trim())?);
        }
        return Transform2x2::new(text, [m[0].clone(), m[1].clone(), m[2].clone(), m[3].clone()]);
    }
    let gens = generators();
    let lookup = |name: &str| -> Result<Transform2x2> {
        match name {
            "Z" => return Ok(z()),
            "Zinv" => return Ok(z_inv()),
            "H" => return Ok(h()),
            "Hhat" => return Ok(h_hat()),
            _ => {}
        }
        gens.iter()
            .find(|t| t.name() == name)
            .cloned()
            .ok_or_else(|| HolantError::Unknown(format!("transform '{name}'")))
    };
    let mut t: Option<Transform2x2> = None;
    for part in text.split('*') {
        let g = lookup(part.trim())?;
        t = Some(match t {
            None => g,
            Some(a) => a.compose(&g),
        });
    }
    t.ok_or_else(|| HolantError::Unknown("empty transform".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_inverse_has_expected_entries() {
        let r = ExactNumber::inv_sqrt2();
        let ri = &r * &ExactNumber::i();
        assert_eq!(z_inv().entries(), &[r.clone(), -ri.clone(), r, ri]);
    }

    #[test]
    fn h_hat_is_diagonal() {
        let a = ExactNumber::alpha();
        assert_eq!(h_hat().entries(), &[a.clone(), n(0), n(0), a.conj()]);
    }

    #[test]
    fn eq2_images() {
        assert_eq!(binary_image_of_eq2(&rotation(1)), Signature::from_ints(&[1, 0, 0, 1]));
        assert_eq!(binary_image_of_eq2(&z_inv()), Signature::from_ints(&[0, 1, 1, 0]));
        let d = Transform2x2::new("d", [n(1), n(0), n(0), n(2)]).unwrap();
        let q = ExactNumber::from_ratio(1, 4);
        assert_eq!(binary_image_of_eq2(&d), Signature::new(2, vec![n(1), n(0), n(0), q]).unwrap());
    }

    #[test]
    fn z_inverse_of_equality_is_disequality() {
        assert_eq!(z_inv().apply(&Signature::from_ints(&[1, 0, 0, 1])), Signature::from_ints(&[0, 1, 1, 0]));
    }

    #[test]
    fn parse_names() {
        assert_eq!(parse_transform("Talpha^3").unwrap(), t_alpha(3));
        assert!(parse_transform("Zinv").unwrap().same_matrix(&z_inv()));
        assert!(parse_transform("1,0,0,i").unwrap().same_matrix(&t_alpha(2)));
        assert!(parse_transform("Z*Zinv").unwrap().same_matrix(&identity()));
        assert!(parse_transform("Q").is_err());
        assert!(parse_transform("1,1,1,1").is_err());
    }
}
