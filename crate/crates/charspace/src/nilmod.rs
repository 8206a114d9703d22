//! The canonical nilpotent module for a prescribed list of block sizes.
//!
//! For block sizes `t_1 <= ... <= t_m` the module carries the block-diagonal
//! lower-shift map `f` on coordinates laid out block by block: block `i`
//! occupies `o_i .. o_i + t_i`, with position `o_i + k` holding `f^k u_i`,
//! so the generator `u_i` is the unit vector at the block offset.  Exponent,
//! height and indicator (Ulm sequence) of a vector read off directly from
//! this layout.

use std::fmt;

use crate::gf2la::{BitMatrix, BitVector, Subspace};
use crate::{Error, Result};

/// Nondecreasing list of Jordan block sizes; determines the module up to
/// isomorphism.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SegreChar {
    parts: Vec<usize>,
}

impl SegreChar {
    /// Builds from a list of sizes, sorting into nondecreasing order (stable,
    /// so equal sizes keep their input order).  Zero parts are rejected; an
    /// empty list is allowed as the characteristic of the zero map on the
    /// zero space.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&t| t == 0) {
            return Err(Error::InvalidSegre("block sizes must be positive".into()));
        }
        parts.sort_unstable();
        Ok(SegreChar { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of blocks.
    pub fn block_count(&self) -> usize {
        self.parts.len()
    }

    /// Total dimension.
    pub fn dim(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Multiplicity of `r` among the block sizes.
    pub fn multiplicity(&self, r: usize) -> usize {
        self.parts.iter().filter(|&&t| t == r).count()
    }

    /// Sizes occurring exactly once, in increasing order.
    pub fn unrepeated_parts(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .parts
            .iter()
            .copied()
            .filter(|&t| self.multiplicity(t) == 1)
            .collect();
        out.dedup();
        out
    }

    /// Dimension of the commutant algebra: sum of `min(t_i, t_j)` over all
    /// ordered block pairs.
    pub fn commutant_dim(&self) -> usize {
        self.parts
            .iter()
            .flat_map(|&a| self.parts.iter().map(move |&b| a.min(b)))
            .sum()
    }
}

impl fmt::Display for SegreChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.parts.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

impl fmt::Debug for SegreChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SegreChar{self}")
    }
}

/// Height of a vector: the largest `q` with `x` in the image of `f^q`.
/// The zero vector has height `NegInf`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Height {
    NegInf,
    Finite(usize),
}

impl Height {
    pub fn finite(self) -> Option<usize> {
        match self {
            Height::NegInf => None,
            Height::Finite(q) => Some(q),
        }
    }
}

impl fmt::Display for Height {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Height::NegInf => f.write_str("-inf"),
            Height::Finite(q) => write!(f, "{q}"),
        }
    }
}

/// The Ulm sequence `(h(x), h(fx), ...)` of a vector.
///
/// Only the entries below the exponent are finite; rendered at full length
/// the tail is the infinity sentinel.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Indicator {
    exponent: usize,
    heights: Vec<usize>,
    ambient: usize,
}

impl Indicator {
    pub fn exponent(&self) -> usize {
        self.exponent
    }

    /// Finite height entries `h(f^j x)` for `j < e(x)`.
    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    /// True when `h(f^j x) > 1 + h(f^(j-1) x)` for some `1 <= j < e(x)`.
    pub fn has_gap(&self) -> bool {
        self.heights.windows(2).any(|w| w[1] > 1 + w[0])
    }

    /// Entries at full ambient length, with `None` standing for infinity.
    pub fn entries(&self) -> Vec<Option<usize>> {
        let mut out: Vec<Option<usize>> = self.heights.iter().copied().map(Some).collect();
        out.resize(self.ambient, None);
        out
    }

    /// Rendering used by the CLI and JSON reports: finite entries as
    /// numbers, the tail as `"inf"`.
    pub fn entry_strings(&self) -> Vec<String> {
        self.entries()
            .iter()
            .map(|e| match e {
                Some(q) => q.to_string(),
                None => "inf".to_string(),
            })
            .collect()
    }
}

impl fmt::Display for Indicator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.entry_strings().join(", "))
    }
}

/// The canonical module: coordinates, the matrix of `f`, and the generators.
#[derive(Clone)]
pub struct ModuleSpace {
    segre: SegreChar,
    block_offsets: Vec<usize>,
    f_matrix: BitMatrix,
    generators: Vec<BitVector>,
}

/// Builds the canonical module for the given block sizes.
pub fn build_module(segre: &SegreChar) -> Result<ModuleSpace> {
    if segre.block_count() == 0 {
        return Err(Error::InvalidSegre("empty block-size list".into()));
    }
    Ok(ModuleSpace::new(segre.clone()))
}

impl ModuleSpace {
    fn new(segre: SegreChar) -> Self {
        let n = segre.dim();
        let mut block_offsets = Vec::with_capacity(segre.block_count());
        let mut f_matrix = BitMatrix::zeros(n, n);
        let mut offset = 0;
        for &t in segre.parts() {
            block_offsets.push(offset);
            // lower-shift block: f maps position o+k to o+k+1
            for k in 0..t - 1 {
                f_matrix.set(offset + k + 1, offset + k, true);
            }
            offset += t;
        }
        let generators = block_offsets.iter().map(|&o| BitVector::unit(n, o)).collect();
        ModuleSpace {
            segre,
            block_offsets,
            f_matrix,
            generators,
        }
    }

    pub fn segre(&self) -> &SegreChar {
        &self.segre
    }

    pub fn dim(&self) -> usize {
        self.segre.dim()
    }

    pub fn block_count(&self) -> usize {
        self.segre.block_count()
    }

    pub fn block_offsets(&self) -> &[usize] {
        &self.block_offsets
    }

    /// Offset and size of block `i`.
    pub fn block(&self, i: usize) -> (usize, usize) {
        (self.block_offsets[i], self.segre.parts()[i])
    }

    pub fn f_matrix(&self) -> &BitMatrix {
        &self.f_matrix
    }

    /// The canonical generator `u_i`.
    pub fn generator(&self, i: usize) -> &BitVector {
        &self.generators[i]
    }

    pub fn generators(&self) -> &[BitVector] {
        &self.generators
    }

    /// `f^k u_i`, the unit vector at depth `k` of block `i`; zero when
    /// `k >= t_i`.
    pub fn shifted_generator(&self, i: usize, k: usize) -> BitVector {
        let (o, t) = self.block(i);
        if k < t {
            BitVector::unit(self.dim(), o + k)
        } else {
            BitVector::zero(self.dim())
        }
    }

    pub fn apply_f(&self, x: &BitVector) -> BitVector {
        assert_eq!(x.len(), self.dim(), "ambient dimension mismatch");
        let mut y = BitVector::zero(self.dim());
        for idx in x.support() {
            let (i, k) = self.locate(idx);
            let (o, t) = self.block(i);
            if k + 1 < t {
                y.set(o + k + 1, true);
            }
        }
        y
    }

    pub fn apply_f_pow(&self, x: &BitVector, k: usize) -> BitVector {
        assert_eq!(x.len(), self.dim(), "ambient dimension mismatch");
        let mut y = BitVector::zero(self.dim());
        for idx in x.support() {
            let (i, d) = self.locate(idx);
            let (o, t) = self.block(i);
            if d + k < t {
                y.set(o + d + k, true);
            }
        }
        y
    }

    /// Block index and in-block depth of a coordinate.
    fn locate(&self, idx: usize) -> (usize, usize) {
        let i = match self.block_offsets.binary_search(&idx) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        (i, idx - self.block_offsets[i])
    }

    /// Least `l >= 0` with `f^l x = 0`; the zero vector has exponent 0.
    pub fn exponent(&self, x: &BitVector) -> usize {
        assert_eq!(x.len(), self.dim(), "ambient dimension mismatch");
        x.support()
            .map(|idx| {
                let (i, k) = self.locate(idx);
                self.segre.parts()[i] - k
            })
            .max()
            .unwrap_or(0)
    }

    /// Height of `x`: a coordinate at depth `k` of its block witnesses
    /// membership in the image of `f^k` and no deeper power, so the height
    /// is the minimum depth over the support.
    pub fn height(&self, x: &BitVector) -> Height {
        assert_eq!(x.len(), self.dim(), "ambient dimension mismatch");
        x.support()
            .map(|idx| self.locate(idx).1)
            .min()
            .map_or(Height::NegInf, Height::Finite)
    }

    pub fn indicator(&self, x: &BitVector) -> Indicator {
        let e = self.exponent(x);
        let mut heights = Vec::with_capacity(e);
        let mut y = x.clone();
        for _ in 0..e {
            match self.height(&y) {
                Height::Finite(q) => heights.push(q),
                Height::NegInf => unreachable!("zero below the exponent"),
            }
            y = self.apply_f(&y);
        }
        Indicator {
            exponent: e,
            heights,
            ambient: self.dim(),
        }
    }

    /// Ulm invariant `d(r)` for `1 <= r <= n`: the dimension drop of
    /// `Ker f ∩ Im f^(r-1)` over `Ker f ∩ Im f^r`, computed from the raw
    /// kernel/image subspaces.  It equals the multiplicity of `r` among the
    /// block sizes, which the tests assert.
    pub fn ulm_invariant(&self, r: usize) -> usize {
        assert!(r >= 1 && r <= self.dim(), "r out of range 1..=n");
        let ker = crate::gf2la::kernel_basis(&self.f_matrix);
        let im_lo = crate::gf2la::image_basis(&self.f_matrix.pow(r - 1));
        let im_hi = crate::gf2la::image_basis(&self.f_matrix.pow(r));
        ker.intersect(&im_lo).dim() - ker.intersect(&im_hi).dim()
    }

    /// True when `u` generates a direct cyclic summand: `u` is nonzero, its
    /// exponent is one of the block sizes, and `h(f^j u) = j` below the
    /// exponent (an indicator free of gaps, starting at height 0).
    pub fn is_generator(&self, u: &BitVector) -> bool {
        if u.is_zero() {
            return false;
        }
        let t = self.exponent(u);
        if self.segre.multiplicity(t) == 0 {
            return false;
        }
        let ind = self.indicator(u);
        ind.heights().iter().enumerate().all(|(j, &h)| h == j)
    }

    /// Component of `x` in block `i` (coordinate mask).
    pub fn project(&self, x: &BitVector, i: usize) -> BitVector {
        assert!(i < self.block_count(), "block index out of range");
        assert_eq!(x.len(), self.dim(), "ambient dimension mismatch");
        let (o, t) = self.block(i);
        let mut y = BitVector::zero(self.dim());
        for idx in x.support() {
            if idx >= o && idx < o + t {
                y.set(idx, true);
            }
        }
        y
    }

    /// The cyclic subspace `span{f^j x}`, of dimension `e(x)`.
    pub fn cyclic(&self, x: &BitVector) -> Subspace {
        let mut vs = Vec::new();
        let mut y = x.clone();
        while !y.is_zero() {
            vs.push(y.clone());
            y = self.apply_f(&y);
        }
        Subspace::from_span(&vs, self.dim())
    }

    /// Block `i` as a coordinate subspace.
    pub fn block_subspace(&self, i: usize) -> Subspace {
        let (o, t) = self.block(i);
        let basis: Vec<BitVector> = (o..o + t).map(|j| BitVector::unit(self.dim(), j)).collect();
        Subspace::from_span(&basis, self.dim())
    }

    /// Law check for a block decomposition `x = x_1 + ... + x_m`: returns
    /// (min height, max exponent) over the nonzero components, which must
    /// equal the height and exponent of the sum.
    pub fn min_max_laws(&self, components: &[BitVector]) -> Result<(Height, usize)> {
        if components.len() != self.block_count() {
            return Err(Error::PreconditionViolated(format!(
                "expected {} components, got {}",
                self.block_count(),
                components.len()
            )));
        }
        for (i, c) in components.iter().enumerate() {
            if self.project(c, i) != *c {
                return Err(Error::PreconditionViolated(format!(
                    "component {i} is not inside block {i}"
                )));
            }
        }
        let nonzero: Vec<&BitVector> = components.iter().filter(|c| !c.is_zero()).collect();
        if nonzero.is_empty() {
            return Err(Error::PreconditionViolated("all components are zero".into()));
        }
        let h = nonzero.iter().map(|c| self.height(c)).min().unwrap();
        let e = nonzero.iter().map(|c| self.exponent(c)).max().unwrap();
        Ok((h, e))
    }

    /// Block sizes of `f` restricted to an invariant subspace, from the rank
    /// sequence `r_k = dim f^k X` by second differences.
    pub fn segre_of_restriction(&self, x: &Subspace) -> Result<SegreChar> {
        let fx_rows: Vec<BitVector> = x.basis_rows().iter().map(|v| self.apply_f(v)).collect();
        let fx = Subspace::from_span(&fx_rows, self.dim());
        if !fx.is_subspace_of(x) {
            return Err(Error::PreconditionViolated("subspace is not invariant".into()));
        }
        let mut ranks = vec![x.dim()];
        let mut current = x.clone();
        while current.dim() > 0 {
            let rows: Vec<BitVector> = current.basis_rows().iter().map(|v| self.apply_f(v)).collect();
            current = Subspace::from_span(&rows, self.dim());
            ranks.push(current.dim());
        }
        ranks.push(0);
        let mut parts = Vec::new();
        for s in 1..ranks.len() - 1 {
            let mult = ranks[s - 1] + ranks[s + 1] - 2 * ranks[s];
            parts.extend(std::iter::repeat(s).take(mult));
        }
        SegreChar::new(parts)
    }

    /// Builds the vector `sum of f^k u_i` from `(power, block)` terms.
    /// Duplicate terms cancel over GF(2).
    pub fn vector_from_terms(&self, terms: &[(usize, usize)]) -> Result<BitVector> {
        let mut v = BitVector::zero(self.dim());
        for &(power, block) in terms {
            if block >= self.block_count() {
                return Err(Error::Semantic(format!(
                    "block u{} does not exist (module has {} blocks)",
                    block + 1,
                    self.block_count()
                )));
            }
            let t = self.segre.parts()[block];
            if power >= t {
                return Err(Error::Semantic(format!(
                    "power f^{power} annihilates u{} (block size {t})",
                    block + 1
                )));
            }
            let (o, _) = self.block(block);
            let idx = o + power;
            let mut term = BitVector::zero(self.dim());
            term.set(idx, true);
            v.xor_assign(&term);
        }
        Ok(v)
    }

    /// The submodule spanned by the chosen blocks, together with the
    /// coordinate positions embedding it back into this module.  Block
    /// indices must be strictly increasing so sub-block order matches the
    /// parent's nondecreasing size order.
    pub fn submodule(&self, blocks: &[usize]) -> (ModuleSpace, Embedding) {
        assert!(
            blocks.windows(2).all(|w| w[0] < w[1]),
            "block indices must be strictly increasing"
        );
        let parts: Vec<usize> = blocks.iter().map(|&i| self.segre.parts()[i]).collect();
        let sub = ModuleSpace::new(SegreChar::new(parts).expect("valid sub-partition"));
        let mut positions = Vec::with_capacity(sub.dim());
        for &i in blocks {
            let (o, t) = self.block(i);
            positions.extend(o..o + t);
        }
        (sub, Embedding { positions, ambient: self.dim() })
    }
}

/// Coordinate embedding of a submodule into its parent module.
pub struct Embedding {
    positions: Vec<usize>,
    ambient: usize,
}

impl Embedding {
    pub fn embed(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.positions.len());
        let mut out = BitVector::zero(self.ambient);
        for i in v.support() {
            out.set(self.positions[i], true);
        }
        out
    }

    /// Pulls a parent vector back to submodule coordinates; `None` when the
    /// vector has support outside the embedded blocks.
    pub fn restrict(&self, v: &BitVector) -> Option<BitVector> {
        assert_eq!(v.len(), self.ambient);
        let mut out = BitVector::zero(self.positions.len());
        for idx in v.support() {
            let j = self.positions.binary_search(&idx).ok()?;
            out.set(j, true);
        }
        Some(out)
    }

    pub fn embed_subspace(&self, s: &Subspace) -> Subspace {
        let rows: Vec<BitVector> = s.basis_rows().iter().map(|r| self.embed(r)).collect();
        Subspace::from_span(&rows, self.ambient)
    }

    pub fn restrict_subspace(&self, s: &Subspace) -> Option<Subspace> {
        let rows: Vec<BitVector> = s
            .basis_rows()
            .iter()
            .map(|r| self.restrict(r))
            .collect::<Option<_>>()?;
        Some(Subspace::from_span(&rows, self.positions.len()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn module(parts: &[usize]) -> ModuleSpace {
        build_module(&SegreChar::new(parts.to_vec()).unwrap()).unwrap()
    }

    fn ev(n: usize, idxs: &[usize]) -> BitVector {
        BitVector::from_indices(n, idxs)
    }

    #[test]
    fn build_examples() {
        // shape (1,3): the 4x4 block-diagonal shift, f e2 = e3, f e3 = e4
        let m = module(&[1, 3]);
        assert_eq!(m.dim(), 4);
        assert!(m.apply_f(&ev(4, &[0])).is_zero());
        assert_eq!(m.apply_f(&ev(4, &[1])), ev(4, &[2]));
        assert_eq!(m.apply_f(&ev(4, &[2])), ev(4, &[3]));
        assert!(m.f_matrix().pow(4).is_zero());

        let single = module(&[1]);
        assert!(single.f_matrix().is_zero());

        let twos = module(&[2, 2]);
        assert!(twos.f_matrix().pow(2).is_zero());
        assert!(!twos.f_matrix().is_zero());

        assert!(build_module(&SegreChar::new(vec![]).unwrap()).is_err());
    }

    #[test]
    fn exponent_examples() {
        let m = module(&[1, 3]);
        assert_eq!(m.exponent(&ev(4, &[0])), 1);
        assert_eq!(m.exponent(&ev(4, &[1])), 3);
        assert_eq!(m.exponent(&BitVector::zero(4)), 0);

        let m135 = module(&[1, 3, 5]);
        let z = m135.vector_from_terms(&[(0, 0), (1, 1), (2, 2)]).unwrap();
        assert_eq!(m135.exponent(&z), 3);
    }

    #[test]
    fn height_examples() {
        let m = module(&[1, 3]);
        assert_eq!(m.height(&BitVector::zero(4)), Height::NegInf);
        assert_eq!(m.height(&ev(4, &[0, 2])), Height::Finite(0));
        assert_eq!(m.height(&ev(4, &[0, 2, 3])), Height::Finite(0));
        assert_eq!(m.height(&ev(4, &[3])), Height::Finite(2));
        assert_eq!(m.height(&ev(4, &[2])), Height::Finite(1));
        // strict superadditivity of height on sums:
        // x1 = e1+e3, x2 = e1+e4 both have height 0 but x1+x2 = e3+e4 has height 1.
        let x1 = ev(4, &[0, 2]);
        let x2 = ev(4, &[0, 3]);
        assert_eq!(m.height(&x1), Height::Finite(0));
        assert_eq!(m.height(&x2), Height::Finite(0));
        assert_eq!(m.height(&x1.xor(&x2)), Height::Finite(1));
    }

    #[test]
    fn indicator_and_gap() {
        let m = module(&[1, 3]);
        let z = ev(4, &[0, 2]); // e1 + e3
        let ind = m.indicator(&z);
        assert_eq!(ind.exponent(), 2);
        assert_eq!(ind.heights(), &[0, 2]);
        assert_eq!(ind.entry_strings(), vec!["0", "2", "inf", "inf"]);
        assert!(ind.has_gap());

        let m135 = module(&[1, 3, 5]);
        let z = m135.vector_from_terms(&[(0, 0), (1, 1), (2, 2)]).unwrap();
        let ind = m135.indicator(&z);
        assert_eq!(ind.heights(), &[0, 2, 4]);
        assert!(ind.has_gap());

        // canonical generators have gap-free indicators 0,1,...,t-1
        for i in 0..2 {
            let ind = m.indicator(m.generator(i));
            assert!(!ind.has_gap());
            let t = m.segre().parts()[i];
            assert_eq!(ind.heights(), (0..t).collect::<Vec<_>>().as_slice());
        }
    }

    #[test]
    fn ulm_invariants_match_multiplicities() {
        let m = module(&[1, 3, 7, 7]);
        assert_eq!(m.ulm_invariant(1), 1);
        assert_eq!(m.ulm_invariant(2), 0);
        assert_eq!(m.ulm_invariant(3), 1);
        assert_eq!(m.ulm_invariant(7), 2);
        let m5 = module(&[5]);
        assert_eq!(m5.ulm_invariant(5), 1);
    }

    #[test]
    fn generator_tests() {
        let m = module(&[1, 3]);
        assert!(m.is_generator(&ev(4, &[1])));
        assert!(!m.is_generator(&ev(4, &[0, 2]))); // gapped indicator
        assert!(m.is_generator(&ev(4, &[0, 1]))); // u2 + u1
        assert!(!m.is_generator(&BitVector::zero(4)));
        // e3 has exponent 2 which is not a block size of (1,3)
        assert!(!m.is_generator(&ev(4, &[2])));
    }

    #[test]
    fn projections() {
        let m = module(&[1, 3]);
        let z = ev(4, &[0, 2]);
        assert_eq!(m.project(&z, 0), ev(4, &[0]));
        assert_eq!(m.project(&z, 1), ev(4, &[2]));
        assert!(m.project(&BitVector::zero(4), 0).is_zero());
    }

    #[test]
    fn cyclic_dimension_is_exponent() {
        let m = module(&[1, 3]);
        assert_eq!(m.cyclic(&BitVector::zero(4)).dim(), 0);
        let c = m.cyclic(&ev(4, &[1]));
        assert_eq!(c.dim(), 3);
        assert!(c.contains(&ev(4, &[2])));
        assert!(c.contains(&ev(4, &[3])));

        let m135 = module(&[1, 3, 5]);
        let z = m135.vector_from_terms(&[(0, 0), (1, 1), (2, 2)]).unwrap();
        assert_eq!(m135.cyclic(&z).dim(), 3);
    }

    #[test]
    fn min_max_law_examples() {
        let m = module(&[1, 3]);
        let comps = vec![ev(4, &[0]), ev(4, &[2])];
        let (h, e) = m.min_max_laws(&comps).unwrap();
        assert_eq!((h, e), (Height::Finite(0), 2));
        // single nonzero component
        let comps = vec![BitVector::zero(4), ev(4, &[2])];
        let (h, e) = m.min_max_laws(&comps).unwrap();
        assert_eq!((h, e), (Height::Finite(1), 2));

        let m4 = module(&[1, 3, 7, 7]);
        let comps: Vec<BitVector> = vec![
            m4.shifted_generator(0, 0),
            m4.shifted_generator(1, 1),
            m4.shifted_generator(2, 2),
            m4.shifted_generator(3, 2),
        ];
        let (h, e) = m4.min_max_laws(&comps).unwrap();
        assert_eq!((h, e), (Height::Finite(0), 5));

        // component outside its block is rejected
        let bad = vec![ev(4, &[1]), ev(4, &[2])];
        assert!(m.min_max_laws(&bad).is_err());
        // all-zero rejected
        assert!(m.min_max_laws(&[BitVector::zero(4), BitVector::zero(4)]).is_err());
    }

    #[test]
    fn restriction_segre() {
        let m = module(&[2, 5]);
        assert_eq!(m.segre_of_restriction(&Subspace::full(7)).unwrap(), *m.segre());
        assert_eq!(
            m.segre_of_restriction(&Subspace::zero(7)).unwrap().parts(),
            &[] as &[usize]
        );
        // non-invariant subspace rejected
        let s = Subspace::from_span(&[ev(7, &[2])], 7); // span{u2}, f u2 != 0
        assert!(m.segre_of_restriction(&s).is_err());
    }

    #[test]
    fn term_vector_errors() {
        let m = module(&[1, 3]);
        assert!(m.vector_from_terms(&[(0, 5)]).is_err());
        assert!(m.vector_from_terms(&[(3, 1)]).is_err());
        // duplicate terms cancel
        let v = m.vector_from_terms(&[(1, 1), (1, 1)]).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn submodule_round_trip() {
        let m = module(&[1, 3, 7, 7]);
        let (sub, emb) = m.submodule(&[0, 1]);
        assert_eq!(sub.dim(), 4);
        let v = sub.vector_from_terms(&[(0, 0), (1, 1)]).unwrap();
        let up = emb.embed(&v);
        assert_eq!(emb.restrict(&up).unwrap(), v);
        // vectors outside the embedded blocks do not restrict
        assert!(emb.restrict(&ev(18, &[5])).is_none());
    }
}
