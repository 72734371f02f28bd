use std::fmt;

use exact_field::ExactNumber;

/// Dense row-major matrix over Q(sqrt2, i).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<ExactNumber>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<ExactNumber>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![ExactNumber::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.data[k * n + k] = ExactNumber::one();
        }
        m
    }

    /// Antidiagonal permutation matrix (N_2 for n = 2, N_2 (x) N_2 for n = 4).
    pub fn anti_identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.data[k * n + (n - 1 - k)] = ExactNumber::one();
        }
        m
    }

    pub fn from_ints(rows: usize, cols: usize, vals: &[i64]) -> Self {
        Self::new(rows, cols, vals.iter().map(|&v| ExactNumber::from_int(v)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &ExactNumber {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: ExactNumber) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[ExactNumber] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn data(&self) -> &[ExactNumber] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut m = Self::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = o.get(k, c);
                    if !b.is_zero() {
                        m.data[r * o.cols + c] += &(a * b);
                    }
                }
            }
        }
        m
    }

    pub fn scale(&self, s: &ExactNumber) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn kron(&self, o: &Matrix) -> Matrix {
        let mut m = Self::zeros(self.rows * o.rows, self.cols * o.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                for r2 in 0..o.rows {
                    for c2 in 0..o.cols {
                        m.set(r * o.rows + r2, c * o.cols + c2, self.get(r, c) * o.get(r2, c2));
                    }
                }
            }
        }
        m
    }

    pub fn kron_power(&self, k: usize) -> Matrix {
        let mut m = Matrix::identity(1);
        for _ in 0..k {
            m = m.kron(self);
        }
        m
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(|x| x.is_real())
    }

    /// `Some(lambda)` when the matrix is lambda times the identity.
    pub fn scalar_multiple_of_identity(&self) -> Option<ExactNumber> {
        if self.rows != self.cols || self.rows == 0 {
            return None;
        }
        let l = self.get(0, 0).clone();
        (*self == Matrix::identity(self.rows).scale(&l)).then_some(l)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_compact_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
