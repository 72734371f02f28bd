//! Gadget constructions (merging, mating, extending, the H4 gadget) and
//! brute-force evaluation of signature grids.

use exact_field::ExactNumber;

use crate::error::{HolantError, Result};
use crate::matrix::Matrix;
use crate::signature::Signature;

fn check_binary(b: &Signature) -> Result<()> {
    if b.arity() != 2 {
        return Err(HolantError::Arity(format!("connector must be binary, got arity {}", b.arity())));
    }
    Ok(())
}

/// Connect variables i and j of f through the binary b:
/// sum over s, t of b(s, t) * f with x_i = s, x_j = t.
pub fn merge(f: &Signature, i: usize, j: usize, b: &Signature) -> Result<Signature> {
    check_binary(b)?;
    if i == j {
        return Err(HolantError::Index("merge needs two distinct variables".into()));
    }
    f.check_var(i)?;
    f.check_var(j)?;
    let rest = f.complement(&[i, j]);
    let mut out = Signature::zero(rest.len()).into_entries();
    for st in 0..4 {
        let w = b.get(st);
        if w.is_zero() {
            continue;
        }
        let base = f.scatter(&[i, j], st);
        for (c, slot) in out.iter_mut().enumerate() {
            let v = f.get(base | f.scatter(&rest, c));
            if !v.is_zero() {
                *slot += &(w * v);
            }
        }
    }
    Signature::new(rest.len(), out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connector {
    /// =2 on internal edges: M C^{(x)m} M^T with C = I_2.
    Eq,
    /// !=2 on internal edges: C = N_2.
    Neq,
}

/// M_D(f) C^{(x)(n-|D|)} M_D(f)^T for the mating gadget on the dangling set D.
pub fn mate_matrix(f: &Signature, dangling: &[usize], connector: Connector) -> Result<Matrix> {
    if dangling.is_empty() || dangling.len() > 2 {
        return Err(HolantError::Invalid(format!("mating needs 1 or 2 dangling variables, got {}", dangling.len())));
    }
    let m = f.matrix_view(dangling)?;
    let (r, c) = (m.rows(), m.cols());
    let mut out = Matrix::zeros(r, r);
    for a in 0..r {
        for b in 0..r {
            let mut s = ExactNumber::zero();
            for k in 0..c {
                let k2 = match connector {
                    Connector::Eq => k,
                    Connector::Neq => c - 1 - k,
                };
                let (x, y) = (m.get(a, k), m.get(b, k2));
                if !x.is_zero() && !y.is_zero() {
                    s += &(x * y);
                }
            }
            out.set(a, b, s);
        }
    }
    Ok(out)
}

/// The mating gadget's signature (arity 2|D|: first copy's variables, then the second's).
pub fn mate(f: &Signature, dangling: &[usize], connector: Connector) -> Result<Signature> {
    let m = mate_matrix(f, dangling, connector)?;
    Signature::new(2 * dangling.len(), m.data().to_vec())
}

/// Attach b to variable i of f through `connector`: x_i meets b's first
/// variable, and b's second variable takes position i.
pub fn extend(f: &Signature, i: usize, b: &Signature, connector: &Signature) -> Result<Signature> {
    check_binary(b)?;
    check_binary(connector)?;
    f.check_var(i)?;
    // g(s, y) = sum_t connector(s, t) b(t, y)
    let g = connector.matrix_view(&[1])?.mul(&b.matrix_view(&[1])?);
    let n = f.arity();
    let rest = f.complement(&[i]);
    let mut out = Signature::zero(n).into_entries();
    for c in 0..1usize << rest.len() {
        let base = f.scatter(&rest, c);
        for y in 0..2 {
            let mut s = ExactNumber::zero();
            for x in 0..2 {
                let w = g.get(x, y);
                let v = f.get(base | f.scatter(&[i], x));
                if !w.is_zero() && !v.is_zero() {
                    s += &(w * v);
                }
            }
            out[base | f.scatter(&[i], y)] = s;
        }
    }
    Signature::new(n, out)
}

/// H4 = M_{12,34}(h4).
pub fn h4_matrix() -> Matrix {
    Matrix::from_ints(4, 4, &[1, 0, 0, 1, 0, 1, 1, 0, 0, 1, -1, 0, 1, 0, 0, -1])
}

/// The signature with M_{ij} equal to H4 M_{ij}(f).
pub fn h4_gadget(f: &Signature, i: usize, j: usize) -> Result<Signature> {
    if i == j {
        return Err(HolantError::Index("H4 gadget needs two distinct variables".into()));
    }
    let m = h4_matrix().mul(&f.matrix_view(&[i, j])?);
    let rest = f.complement(&[i, j]);
    let mut out = Signature::zero(f.arity()).into_entries();
    for r in 0..4 {
        for c in 0..m.cols() {
            out[f.scatter(&[i, j], r) | f.scatter(&rest, c)] = m.get(r, c).clone();
        }
    }
    Signature::new(f.arity(), out)
}

/// A port of a vertex: (vertex index, 1-based port).
pub type Port = (usize, usize);

pub const DEFAULT_EDGE_CAP: usize = 26;

#[derive(Debug, Clone)]
pub struct Vertex {
    pub id: String,
    pub label: String,
    pub signature: Signature,
}

#[derive(Debug, Clone, Default)]
pub struct SignatureGrid {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(Port, Port)>,
    pub dangling: Vec<Port>,
}

impl SignatureGrid {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, id: impl Into<String>, label: impl Into<String>, signature: Signature) -> usize {
        self.vertices.push(Vertex { id: id.into(), label: label.into(), signature });
        self.vertices.len() - 1
    }

    pub fn add_edge(&mut self, a: Port, b: Port) {
        self.edges.push((a, b));
    }

    pub fn add_dangling(&mut self, p: Port) {
        self.dangling.push(p);
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    fn port_name(&self, (v, p): Port) -> String {
        match self.vertices.get(v) {
            Some(x) => format!("{}.{}", x.id, p),
            None => format!("#{v}.{p}"),
        }
    }

    /// Every port used exactly once, all references in range.
    pub fn validate(&self) -> Result<()> {
        let mut used: Vec<Vec<u8>> = self.vertices.iter().map(|v| vec![0; v.signature.arity()]).collect();
        let ends = self.edges.iter().flat_map(|&(a, b)| [a, b]).chain(self.dangling.iter().copied());
        for (v, p) in ends {
            let name = self.port_name((v, p));
            let slots = used.get_mut(v).ok_or_else(|| HolantError::Index(format!("unknown vertex in port {name}")))?;
            if p == 0 || p > slots.len() {
                return Err(HolantError::Index(format!("port {name} out of range 1..={}", slots.len())));
            }
            slots[p - 1] += 1;
            if slots[p - 1] > 1 {
                return Err(HolantError::Invalid(format!("port {name} used more than once")));
            }
        }
        for (v, slots) in used.iter().enumerate() {
            if let Some(p) = slots.iter().position(|&c| c == 0) {
                return Err(HolantError::Invalid(format!("port {} is not connected", self.port_name((v, p + 1)))));
            }
        }
        Ok(())
    }

    /// The Holant value of a closed grid.
    pub fn evaluate(&self) -> Result<ExactNumber> {
        self.evaluate_with_cap(DEFAULT_EDGE_CAP)
    }

    pub fn evaluate_with_cap(&self, cap: usize) -> Result<ExactNumber> {
        if !self.dangling.is_empty() {
            return Err(HolantError::Invalid("grid has dangling edges; use gate_signature".into()));
        }
        let g = self.gate_signature_with_cap(cap)?;
        Ok(g.get(0).clone())
    }

    pub fn gate_signature(&self) -> Result<Signature> {
        self.gate_signature_with_cap(DEFAULT_EDGE_CAP)
    }

    /// For each assignment of the dangling edges (first dangling edge most
    /// significant), sum over internal edge assignments.
    pub fn gate_signature_with_cap(&self, cap: usize) -> Result<Signature> {
        self.validate()?;
        let ne = self.edges.len();
        let nd = self.dangling.len();
        if ne > cap {
            return Err(HolantError::Cap(format!("{ne} internal edges exceed the cap of {cap}")));
        }
        // wire[v][p] = global bit position: internal edges first, then dangling
        let mut wire: Vec<Vec<usize>> = self.vertices.iter().map(|v| vec![0; v.signature.arity()]).collect();
        for (e, &((a, pa), (b, pb))) in self.edges.iter().enumerate() {
            wire[a][pa - 1] = e;
            wire[b][pb - 1] = e;
        }
        for (d, &(v, p)) in self.dangling.iter().enumerate() {
            wire[v][p - 1] = ne + d;
        }
        let mut out = Vec::with_capacity(1 << nd);
        for dmask in 0..1usize << nd {
            // dangling bit for slot d sits at ne + d, ordered first-most-significant
            let dbits: usize = (0..nd).filter(|&d| dmask >> (nd - 1 - d) & 1 == 1).fold(0, |acc, d| acc | 1 << (ne + d));
            let mut total = ExactNumber::zero();
            'assign: for emask in 0..1usize << ne {
                let sigma = emask | dbits;
                let mut prod = ExactNumber::one();
                for (v, vert) in self.vertices.iter().enumerate() {
                    let idx = wire[v].iter().fold(0usize, |acc, &w| acc << 1 | (sigma >> w & 1));
                    let val = vert.signature.get(idx);
                    if val.is_zero() {
                        continue 'assign;
                    }
                    if !val.is_one() {
                        prod = &prod * val;
                    }
                }
                total += &prod;
            }
            out.push(total);
        }
        Signature::new(nd, out)
    }

    /// Subdivide every internal edge with a new =2 vertex. Returns the new
    /// grid and a flag per vertex: true for the original vertices.
    pub fn two_stretch(&self) -> (SignatureGrid, Vec<bool>) {
        let mut g = SignatureGrid { vertices: self.vertices.clone(), edges: vec![], dangling: self.dangling.clone() };
        let mut side = vec![true; self.vertices.len()];
        for (k, &(a, b)) in self.edges.iter().enumerate() {
            let m = g.add_vertex(format!("s{k}"), "eq2", crate::catalog::eq2());
            side.push(false);
            g.add_edge(a, (m, 1));
            g.add_edge((m, 2), b);
        }
        (g, side)
    }

    /// True when every internal edge joins vertices on different sides.
    pub fn is_bipartite_by(&self, side: &[bool]) -> bool {
        self.edges.iter().all(|&((a, _), (b, _))| side[a] != side[b])
    }

    /// Replace left-side signatures f by fT^{-1} and right-side ones g by Tg.
    pub fn transform_bipartite(&self, side: &[bool], t: &crate::holographic::Transform2x2) -> SignatureGrid {
        let mut g = self.clone();
        for (v, vert) in g.vertices.iter_mut().enumerate() {
            vert.signature = if side[v] { t.apply_row_inverse(&vert.signature) } else { t.apply(&vert.signature) };
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;

    #[test]
    fn merge_examples() {
        // The two restrictions sum to twice (!=2^-)(x3,x6) (x) (!=2)(x4,x5).
        let f = f6();
        let r00 = f.block(&[1, 2], 0).unwrap();
        let r11 = f.block(&[1, 2], 3).unwrap();
        let ints = |v: &[i64]| v.iter().map(|&x| ExactNumber::from_int(x)).collect::<Vec<_>>();
        assert_eq!(r00, ints(&[1, 0, 0, 1, 0, 1, 1, 0, 0, 1, -1, 0, -1, 0, 0, 1]));
        assert_eq!(r11, ints(&[-1, 0, 0, 1, 0, 1, -1, 0, 0, -1, -1, 0, -1, 0, 0, -1]));
        let m = merge(&f, 1, 2, &eq2()).unwrap();
        assert_eq!(m, Signature::from_ints(&[0, 0, 0, 2, 0, 2, 0, 0, 0, 0, -2, 0, -2, 0, 0, 0]));
        let s = merge(&eq2(), 1, 2, &eq2()).unwrap();
        assert_eq!(s.scalar_value(), Some(&ExactNumber::from_int(2)));
        assert!(merge(&eq2(), 1, 1, &eq2()).is_err());
    }

    #[test]
    fn mate_examples() {
        assert_eq!(mate_matrix(&eq2(), &[1], Connector::Eq).unwrap(), Matrix::identity(2));
        let m = mate_matrix(&Signature::from_ints(&[1, 2, 2, 4]), &[1], Connector::Eq).unwrap();
        assert!((m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0)).is_zero());
        assert!(mate(&eq2(), &[1, 2, 1], Connector::Eq).is_err());
    }

    #[test]
    fn extend_examples() {
        assert_eq!(extend(&eq2(), 1, &eq2(), &eq2()).unwrap(), eq2());
        assert_eq!(extend(&f6(), 1, &eq2_minus(), &eq2()).unwrap(), f6().negate_var(1).unwrap());
        assert_eq!(extend(&f6_hat(), 3, &neq2(), &neq2()).unwrap(), f6_hat());
    }

    #[test]
    fn grid_basics() {
        let mut g = SignatureGrid::new();
        let a = g.add_vertex("a", "eq2", eq2());
        let b = g.add_vertex("b", "eq2", eq2());
        g.add_edge((a, 1), (b, 1));
        g.add_edge((a, 2), (b, 2));
        assert_eq!(g.evaluate().unwrap(), ExactNumber::from_int(2));
        let (s, side) = g.two_stretch();
        assert!(s.is_bipartite_by(&side));
        assert_eq!(s.evaluate().unwrap(), ExactNumber::from_int(2));

        let mut t = SignatureGrid::new();
        let v: Vec<usize> = (0..3).map(|k| t.add_vertex(format!("v{k}"), "neq2", neq2())).collect();
        t.add_edge((v[0], 2), (v[1], 1));
        t.add_edge((v[1], 2), (v[2], 1));
        t.add_edge((v[2], 2), (v[0], 1));
        assert!(t.evaluate().unwrap().is_zero());
    }

    #[test]
    fn gate_examples() {
        let mut g = SignatureGrid::new();
        let a = g.add_vertex("a", "f6", f6());
        for p in 1..=6 {
            g.add_dangling((a, p));
        }
        assert_eq!(g.gate_signature().unwrap(), f6());

        let mut c = SignatureGrid::new();
        let x = c.add_vertex("x", "neq2", neq2());
        let y = c.add_vertex("y", "neq2", neq2());
        c.add_edge((x, 2), (y, 1));
        c.add_dangling((x, 1));
        c.add_dangling((y, 2));
        assert_eq!(c.gate_signature().unwrap(), eq2());
    }

    #[test]
    fn grid_validation_names_ports() {
        let mut g = SignatureGrid::new();
        let a = g.add_vertex("a", "eq2", eq2());
        g.add_dangling((a, 1));
        g.add_dangling((a, 3));
        let e = g.validate().unwrap_err().to_string();
        assert!(e.contains("a.3"), "{e}");
    }
}
