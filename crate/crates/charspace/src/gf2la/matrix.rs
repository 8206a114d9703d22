use std::fmt;

use super::subspace::Subspace;
use super::vector::BitVector;

/// A dense matrix over GF(2), stored as bit-packed rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitMatrix {
    rows: Vec<BitVector>,
    cols: usize,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            rows: vec![BitVector::zero(cols); rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<BitVector>, cols: usize) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols, "row length mismatch");
        }
        BitMatrix { rows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVector::is_zero)
    }

    pub fn column(&self, j: usize) -> BitVector {
        let mut c = BitVector::zero(self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            if r.get(j) {
                c.set(i, true);
            }
        }
        c
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.support() {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Matrix-vector product `M x`.
    pub fn apply(&self, x: &BitVector) -> BitVector {
        assert_eq!(x.len(), self.cols, "vector length mismatch in apply");
        let mut y = BitVector::zero(self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            if r.dot(x) {
                y.set(i, true);
            }
        }
        y
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.nrows(), "inner dimension mismatch in mul");
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = BitVector::zero(other.ncols());
                for k in r.support() {
                    acc.xor_assign(other.row(k));
                }
                acc
            })
            .collect();
        BitMatrix::from_rows(rows, other.ncols())
    }

    pub fn xor_assign(&mut self, other: &BitMatrix) {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.nrows(), other.nrows());
        for (r, o) in self.rows.iter_mut().zip(&other.rows) {
            r.xor_assign(o);
        }
    }

    pub fn xor(&self, other: &BitMatrix) -> BitMatrix {
        let mut m = self.clone();
        m.xor_assign(other);
        m
    }

    /// `self^k` for a square matrix; `k = 0` gives the identity.
    pub fn pow(&self, k: usize) -> BitMatrix {
        assert_eq!(self.nrows(), self.cols, "pow needs a square matrix");
        let mut acc = BitMatrix::identity(self.cols);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn commutes_with(&self, other: &BitMatrix) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// Reduced row echelon form together with the pivot columns.
    ///
    /// The RREF over GF(2) is unique, so the result is a canonical
    /// representative of the row space.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
                continue;
            };
            rows.swap(r, p);
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        (BitMatrix::from_rows(rows, self.cols), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.nrows() == self.cols && self.rank() == self.cols
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix({}x{})", self.nrows(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}

/// Basis of the right kernel `{x : Mx = 0}` as a canonical subspace of the
/// column-index space.
pub fn kernel_basis(m: &BitMatrix) -> Subspace {
    let n = m.ncols();
    let (rref, pivots) = m.rref();
    let mut basis = Vec::new();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    for j in 0..n {
        if is_pivot[j] {
            continue;
        }
        let mut v = BitVector::unit(n, j);
        for (i, &p) in pivots.iter().enumerate() {
            if rref.get(i, j) {
                v.set(p, true);
            }
        }
        basis.push(v);
    }
    Subspace::from_span(&basis, n)
}

/// Column space of `M` as a canonical subspace of the row-index space.
pub fn image_basis(m: &BitMatrix) -> Subspace {
    let cols: Vec<BitVector> = (0..m.ncols()).map(|j| m.column(j)).collect();
    Subspace::from_span(&cols, m.nrows())
}
