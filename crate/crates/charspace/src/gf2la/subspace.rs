use std::fmt;

use super::matrix::{kernel_basis, BitMatrix};
use super::vector::BitVector;

/// A subspace of GF(2)^n held as a canonical reduced-row-echelon basis.
///
/// The basis has no zero rows, pivot columns strictly increase row to row,
/// and each pivot column contains exactly one 1.  Because the RREF is
/// unique, two `Subspace` values are equal as sets if and only if they are
/// equal bit for bit, so the type can serve as a set or map key.  The zero
/// subspace keeps its ambient dimension with an empty basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<BitVector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_span(
            &(0..ambient).map(|i| BitVector::unit(ambient, i)).collect::<Vec<_>>(),
            ambient,
        )
    }

    /// Canonical span of the given vectors.
    pub fn from_span(vectors: &[BitVector], ambient: usize) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "ambient dimension mismatch in span");
        }
        let (rref, pivots) = BitMatrix::from_rows(vectors.to_vec(), ambient).rref();
        Subspace {
            ambient,
            rows: rref.rows().to_vec(),
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis_rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis in place; `v` becomes zero exactly when
    /// it lies in the subspace.
    pub fn reduce(&self, v: &mut BitVector) {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch in sum");
        let mut all = self.rows.clone();
        all.extend_from_slice(&other.rows);
        Subspace::from_span(&all, self.ambient)
    }

    /// Intersection via the kernel of the stacked-basis system: a vector is
    /// in both spans exactly when some coefficient pair (λ, ν) satisfies
    /// `λ·A + ν·B = 0` with the sign absorbed by characteristic 2.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch in intersect");
        let a = self.dim();
        let b = other.dim();
        if a == 0 || b == 0 {
            return Subspace::zero(self.ambient);
        }
        // Columns are the basis rows of A then B; kernel vectors give the
        // coefficients of a common element.
        let mut system = BitMatrix::zeros(self.ambient, a + b);
        for (j, row) in self.rows.iter().enumerate() {
            for i in row.support() {
                system.set(i, j, true);
            }
        }
        for (j, row) in other.rows.iter().enumerate() {
            for i in row.support() {
                system.set(i, a + j, true);
            }
        }
        let coeffs = kernel_basis(&system);
        let vectors: Vec<BitVector> = coeffs
            .basis_rows()
            .iter()
            .map(|c| {
                let mut v = BitVector::zero(self.ambient);
                for j in c.support().take_while(|&j| j < a) {
                    v.xor_assign(&self.rows[j]);
                }
                v
            })
            .collect();
        Subspace::from_span(&vectors, self.ambient)
    }

    /// All `2^dim` member vectors.  Intended for small subspaces; panics
    /// above 2^24 members as a guard against accidental blowup.
    pub fn members(&self) -> Vec<BitVector> {
        let k = self.dim();
        assert!(k <= 24, "member enumeration capped at dimension 24");
        let mut out = Vec::with_capacity(1 << k);
        let mut current = BitVector::zero(self.ambient);
        out.push(current.clone());
        // Gray-code walk: one basis-row XOR per member.
        for g in 1u32..1 << k {
            let flip = g.trailing_zeros() as usize;
            current.xor_assign(&self.rows[flip]);
            out.push(current.clone());
        }
        out
    }

    pub fn basis_bitstrings(&self) -> Vec<String> {
        self.rows.iter().map(BitVector::bitstring).collect()
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} of {}; [{}])",
            self.dim(),
            self.ambient,
            self.basis_bitstrings().join(", ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> BitVector {
        BitVector::from_bitstring(s).unwrap()
    }

    #[test]
    fn empty_span_is_zero_subspace() {
        let s = Subspace::from_span(&[], 4);
        assert_eq!(s.dim(), 0);
        assert_eq!(s.ambient(), 4);
        assert!(s.contains(&BitVector::zero(4)));
    }

    #[test]
    fn example_span_contains_e4() {
        // span{e1+e3, e1+e3+e4} in dim 4 contains e4 = their sum.
        let s = Subspace::from_span(&[v("1010"), v("1011")], 4);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&v("0001")));
        assert!(!s.contains(&v("1000")));
    }

    #[test]
    fn span_of_all_units_is_full() {
        let s = Subspace::full(4);
        assert_eq!(s.dim(), 4);
    }

    #[test]
    fn sum_and_intersection_idempotent() {
        let a = Subspace::from_span(&[v("110"), v("011")], 3);
        assert_eq!(a.sum(&a), a);
        assert_eq!(a.intersect(&a), a);
    }

    #[test]
    fn coordinate_intersection() {
        let a = Subspace::from_span(&[v("100"), v("010")], 3);
        let b = Subspace::from_span(&[v("010"), v("001")], 3);
        let i = a.intersect(&b);
        assert_eq!(i, Subspace::from_span(&[v("010")], 3));
    }

    #[test]
    fn members_gray_walk() {
        let a = Subspace::from_span(&[v("100"), v("010")], 3);
        let mut ms: Vec<String> = a.members().iter().map(BitVector::bitstring).collect();
        ms.sort();
        assert_eq!(ms, vec!["000", "010", "100", "110"]);
    }
}
