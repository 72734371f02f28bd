//! Product-type signatures: support cut out by pins and (dis)equalities of
//! variable pairs, values a product of unary weights on the support.

use exact_field::ExactNumber;

use crate::signature::{var_mask, Signature};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductWitness {
    pub lambda: ExactNumber,
    /// (variable, value) for variables constant on the support.
    pub pins: Vec<(usize, bool)>,
    /// (representative, variable, differs) links of each component.
    pub links: Vec<(usize, usize, bool)>,
    /// (representative, w1/w0) unary weight on each component.
    pub weights: Vec<(usize, ExactNumber)>,
}

/// Union-find with parity to the parent.
struct ParityDsu {
    parent: Vec<usize>,
    parity: Vec<bool>,
}

impl ParityDsu {
    fn new(n: usize) -> Self {
        ParityDsu { parent: (0..n).collect(), parity: vec![false; n] }
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        if self.parent[x] == x {
            return (x, false);
        }
        let (r, p) = self.find(self.parent[x]);
        self.parent[x] = r;
        self.parity[x] ^= p;
        (r, self.parity[x])
    }

    fn union(&mut self, a: usize, b: usize, differ: bool) {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
            self.parity[hi] = pa ^ pb ^ differ;
        }
    }
}

pub fn product_type_check(f: &Signature) -> Option<ProductWitness> {
    let n = f.arity();
    let supp = f.support();
    let Some(&first) = supp.first() else {
        return Some(ProductWitness { lambda: ExactNumber::zero(), pins: vec![], links: vec![], weights: vec![] });
    };
    let bit = |x: usize, v: usize| x & var_mask(n, v) != 0;
    let mut pins = Vec::new();
    let mut free = Vec::new();
    for v in 1..=n {
        if supp.iter().all(|&x| bit(x, v) == bit(first, v)) {
            pins.push((v, bit(first, v)));
        } else {
            free.push(v);
        }
    }
    let mut dsu = ParityDsu::new(n + 1);
    for (a, &u) in free.iter().enumerate() {
        for &v in &free[a + 1..] {
            let d = bit(first, u) != bit(first, v);
            if supp.iter().all(|&x| (bit(x, u) != bit(x, v)) == d) {
                dsu.union(u, v, d);
            }
        }
    }
    let reps: Vec<usize> = free.iter().copied().filter(|&v| dsu.find(v).0 == v).collect();
    if supp.len() != 1 << reps.len() {
        return None;
    }
    // The point where each representative takes value y (first rep most significant).
    let mut point = |y: usize| -> usize {
        let mut x = 0;
        for &(v, b) in &pins {
            if b {
                x |= var_mask(n, v);
            }
        }
        for &v in &free {
            let (r, p) = dsu.find(v);
            let k = reps.iter().position(|&q| q == r).expect("rep");
            if (y >> (reps.len() - 1 - k) & 1 == 1) ^ p {
                x |= var_mask(n, v);
            }
        }
        x
    };
    let m = reps.len();
    let lambda = f.get(point(0)).clone();
    if lambda.is_zero() {
        return None;
    }
    let inv = lambda.inv().ok()?;
    let ratios: Vec<ExactNumber> = (0..m).map(|k| f.get(point(1 << (m - 1 - k))) * &inv).collect();
    for y in 0..1usize << m {
        let mut v = lambda.clone();
        for (k, r) in ratios.iter().enumerate() {
            if y >> (m - 1 - k) & 1 == 1 {
                v = &v * r;
            }
        }
        if *f.get(point(y)) != v {
            return None;
        }
    }
    let links = free
        .iter()
        .filter_map(|&v| {
            let (r, p) = dsu.find(v);
            (r != v).then_some((r, v, p))
        })
        .collect();
    Some(ProductWitness { lambda, pins, links, weights: reps.into_iter().zip(ratios).collect() })
}

pub fn is_product_type(f: &Signature) -> bool {
    product_type_check(f).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;

    #[test]
    fn examples() {
        let w = product_type_check(&neq2_minus()).unwrap();
        assert_eq!(w.links, vec![(1, 2, true)]);
        assert!(!is_product_type(&f6()));
        assert!(is_product_type(&eq(3)));
        assert!(is_product_type(&Signature::from_ints(&[1, 2, 3, 6])));
        assert!(!is_product_type(&Signature::from_ints(&[1, 2, 3, 5])));
        assert!(!is_product_type(&Signature::from_ints(&[1, 1, 1, 0])));
        assert!(is_product_type(&Signature::zero(2)));
    }
}
