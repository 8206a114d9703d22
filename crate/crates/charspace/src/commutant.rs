//! The commutant algebra of the module map, its unit group, and the three
//! membership tests (invariant / characteristic / hyperinvariant).
//!
//! The algebra has the basis of elementary maps `phi_{i,j,k}` sending
//! `u_i -> f^k u_j` (zero on the other generators), valid for
//! `max(0, t_j - t_i) <= k < t_j`; there are `min(t_i, t_j)` of them per
//! ordered block pair.  The unipotent transvections `I + phi` (excluding the
//! singular `(i, i, 0)` triples) serve as generators of the automorphism
//! group.  That family's completeness is not assumed silently: it is
//! validated against full unit enumeration wherever the commutant dimension
//! permits, and the validation is wired to fail loudly.

use std::collections::{BTreeSet, VecDeque};

use crate::gf2la::{BitMatrix, BitVector, Subspace};
use crate::nilmod::ModuleSpace;
use crate::{Error, Result};

/// Default cap on materialized orbit sizes.
pub const DEFAULT_ORBIT_CAP: usize = 1 << 20;

/// Basis of the algebra of endomorphisms commuting with `f`.
pub struct EndoBasis {
    elements: Vec<BitMatrix>,
    dim: usize,
}

impl EndoBasis {
    pub fn elements(&self) -> &[BitMatrix] {
        &self.elements
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// How an automorphism generating set was produced.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Provenance {
    TransvectionFamily,
    FullEnumeration,
}

/// Generating set for the group of automorphisms commuting with `f`.
pub struct AutGenSet {
    generators: Vec<BitMatrix>,
    provenance: Provenance,
}

impl AutGenSet {
    pub fn generators(&self) -> &[BitMatrix] {
        &self.generators
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }
}

/// The elementary commuting map `u_i -> f^k u_j` as a matrix.
fn phi(v: &ModuleSpace, i: usize, j: usize, k: usize) -> BitMatrix {
    let n = v.dim();
    let (oi, ti) = v.block(i);
    let (oj, tj) = v.block(j);
    let mut m = BitMatrix::zeros(n, n);
    // column o_i + a carries the image of f^a u_i, which is f^(k+a) u_j
    for a in 0..ti {
        if k + a < tj {
            m.set(oj + k + a, oi + a, true);
        }
    }
    m
}

fn phi_triples(v: &ModuleSpace) -> Vec<(usize, usize, usize)> {
    let parts = v.segre().parts();
    let m = parts.len();
    let mut out = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let lo = parts[j].saturating_sub(parts[i]);
            for k in lo..parts[j] {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// Basis of the commutant; its length is `sum min(t_i, t_j)`.
pub fn endo_basis(v: &ModuleSpace) -> EndoBasis {
    let elements: Vec<BitMatrix> = phi_triples(v)
        .into_iter()
        .map(|(i, j, k)| phi(v, i, j, k))
        .collect();
    debug_assert!(elements.iter().all(|e| e.commutes_with(v.f_matrix())));
    debug_assert_eq!(elements.len(), v.segre().commutant_dim());
    let dim = elements.len();
    EndoBasis { elements, dim }
}

/// The transvection family `I + phi_{i,j,k}` over all valid triples except
/// the singular `(i, i, 0)` ones.  Every member is unipotent, hence
/// invertible.
pub fn aut_generators(v: &ModuleSpace) -> AutGenSet {
    let id = BitMatrix::identity(v.dim());
    let generators: Vec<BitMatrix> = phi_triples(v)
        .into_iter()
        .filter(|&(i, j, k)| !(i == j && k == 0))
        .map(|(i, j, k)| id.xor(&phi(v, i, j, k)))
        .collect();
    debug_assert!(generators.iter().all(BitMatrix::is_invertible));
    AutGenSet {
        generators,
        provenance: Provenance::TransvectionFamily,
    }
}

/// Every invertible element of the commutant, enumerated by a Gray-code walk
/// over all basis combinations.  Fails with `BudgetExceeded` when
/// `2^dim > budget`.
pub fn enumerate_aut(v: &ModuleSpace, budget: u128) -> Result<Vec<BitMatrix>> {
    let basis = endo_basis(v);
    let d = basis.dim();
    if d >= 127 || (1u128 << d) > budget {
        return Err(Error::BudgetExceeded {
            needed: if d >= 127 { u128::MAX } else { 1u128 << d },
            budget,
        });
    }
    let total: u128 = 1u128 << d;
    let chunks = chunk_starts(total);
    let units = crate::par::map_vec(chunks, |(start, end)| {
        let mut out = Vec::new();
        let mut current = combo_matrix(&basis, gray(start));
        let mut code = gray(start);
        if current.is_invertible() {
            out.push(current.clone());
        }
        for c in start + 1..end {
            let next = gray(c);
            let flip = (next ^ code).trailing_zeros() as usize;
            code = next;
            current.xor_assign(&basis.elements()[flip]);
            if current.is_invertible() {
                out.push(current.clone());
            }
        }
        out
    });
    Ok(units.into_iter().flatten().collect())
}

fn gray(i: u128) -> u128 {
    i ^ (i >> 1)
}

fn combo_matrix(basis: &EndoBasis, mask: u128) -> BitMatrix {
    let n = basis.elements()[0].ncols();
    let mut m = BitMatrix::zeros(n, n);
    for (b, e) in basis.elements().iter().enumerate() {
        if mask >> b & 1 == 1 {
            m.xor_assign(e);
        }
    }
    m
}

fn chunk_starts(total: u128) -> Vec<(u128, u128)> {
    let chunk = ((total + 63) / 64).max(1024);
    let mut out = Vec::new();
    let mut s = 0;
    while s < total {
        out.push((s, (s + chunk).min(total)));
        s += chunk;
    }
    out
}

/// `f(X) ⊆ X`.
pub fn is_invariant(v: &ModuleSpace, x: &Subspace) -> bool {
    x.basis_rows().iter().all(|r| x.contains(&v.apply_f(r)))
}

/// Invariance under every endomorphism commuting with `f`.  Checking the
/// spanning set suffices: a subspace closed under two maps is closed under
/// their sum.
pub fn is_hyperinvariant(v: &ModuleSpace, x: &Subspace) -> bool {
    if !is_invariant(v, x) {
        return false;
    }
    endo_basis(v)
        .elements()
        .iter()
        .all(|e| x.basis_rows().iter().all(|r| x.contains(&e.apply(r))))
}

/// Invariance under every automorphism commuting with `f`, tested on the
/// transvection generators.  Closure under a generating set extends to the
/// whole finite group, where inverses appear as positive powers.
pub fn is_characteristic(v: &ModuleSpace, x: &Subspace) -> bool {
    if !is_invariant(v, x) {
        return false;
    }
    aut_generators(v)
        .generators()
        .iter()
        .all(|g| x.basis_rows().iter().all(|r| x.contains(&g.apply(r))))
}

/// Smallest subspace containing `seeds` that is closed under `f` and under
/// every automorphism commuting with `f`.
///
/// Fixpoint over basis rows: the image of a subspace under a linear map is
/// determined by the images of a basis, so applying the generators to the
/// current canonical basis and re-spanning until the dimension stabilizes
/// yields the closure.
pub fn characteristic_hull(v: &ModuleSpace, seeds: &[BitVector]) -> Subspace {
    let gens = aut_generators(v);
    let mut vectors: Vec<BitVector> = Vec::new();
    for s in seeds {
        assert_eq!(s.len(), v.dim(), "ambient dimension mismatch");
        let mut y = s.clone();
        while !y.is_zero() {
            vectors.push(y.clone());
            y = v.apply_f(&y);
        }
    }
    let mut current = Subspace::from_span(&vectors, v.dim());
    loop {
        let mut next_rows: Vec<BitVector> = current.basis_rows().to_vec();
        for row in current.basis_rows() {
            next_rows.push(v.apply_f(row));
            for g in gens.generators() {
                next_rows.push(g.apply(row));
            }
        }
        let next = Subspace::from_span(&next_rows, v.dim());
        if next.dim() == current.dim() {
            return next;
        }
        current = next;
    }
}

/// Orbit of `x` under the automorphism group: breadth-first closure of `{x}`
/// under the generators.  The group being finite, generator applications
/// alone reach every group element's image.
pub fn orbit(v: &ModuleSpace, x: &BitVector, cap: usize) -> Result<BTreeSet<BitVector>> {
    assert_eq!(x.len(), v.dim(), "ambient dimension mismatch");
    let gens = aut_generators(v);
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(x.clone());
    queue.push_back(x.clone());
    while let Some(y) = queue.pop_front() {
        for g in gens.generators() {
            let z = g.apply(&y);
            if seen.insert(z.clone()) {
                if seen.len() > cap {
                    return Err(Error::OrbitTooLarge { cap });
                }
                queue.push_back(z);
            }
        }
    }
    Ok(seen)
}

/// The largest hyperinvariant subspace contained in a characteristic
/// subspace: the direct sum over blocks of `X ∩ <u_i>`.
pub fn largest_hyperinvariant_inside(v: &ModuleSpace, x: &Subspace) -> Result<Subspace> {
    if !is_characteristic(v, x) {
        return Err(Error::PreconditionViolated("subspace is not characteristic".into()));
    }
    let mut acc = Subspace::zero(v.dim());
    for i in 0..v.block_count() {
        acc = acc.sum(&x.intersect(&v.block_subspace(i)));
    }
    Ok(acc)
}
