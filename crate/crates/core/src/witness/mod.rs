//! Equivariant maps, isomorphism witnesses and short exact sequences.

mod constructions;

pub use constructions::*;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::elements;
use crate::int::Integer;
use crate::lattice::{DnLattice, LatticeDoc};
use crate::linalg::{cokernel_invariants, det, hnf_column_span, kernel_basis, solve_integer};
use crate::matrix::{IntMatrix, MatrixDoc};

/// A homomorphism `src → dst` given by a `dst.rank × src.rank` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeMap {
    pub src: DnLattice,
    pub dst: DnLattice,
    pub mat: IntMatrix,
    pub label: String,
}

impl LatticeMap {
    /// Checks shapes only; see [`LatticeMap::equivariant`].
    pub fn new(src: DnLattice, dst: DnLattice, mat: IntMatrix) -> Result<LatticeMap> {
        if src.n != dst.n {
            return Err(Error::InvalidParameter(format!("map from a D_{} to a D_{} lattice", src.n, dst.n)));
        }
        if mat.rows() != dst.rank || mat.cols() != src.rank {
            return Err(Error::Dimension(format!(
                "{}x{} matrix for a map from rank {} to rank {}",
                mat.rows(),
                mat.cols(),
                src.rank,
                dst.rank
            )));
        }
        let label = format!("{} -> {}", src.label, dst.label);
        Ok(LatticeMap { src, dst, mat, label })
    }

    /// As [`LatticeMap::new`], but rejects a matrix that fails to commute with
    /// the action of some group element.
    pub fn equivariant(src: DnLattice, dst: DnLattice, mat: IntMatrix) -> Result<LatticeMap> {
        let m = LatticeMap::new(src, dst, mat)?;
        let (a, b) = (m.src.actions(), m.dst.actions());
        for (g, (x, y)) in elements(m.src.n).into_iter().zip(a.iter().zip(&b)) {
            if m.mat.mm(x) != y.mm(&m.mat) {
                return Err(Error::InvalidParameter(format!("{}: not equivariant at {g}", m.label)));
            }
        }
        Ok(m)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> LatticeMap {
        self.label = label.into();
        self
    }

    pub fn identity(l: &DnLattice) -> LatticeMap {
        LatticeMap::new(l.clone(), l.clone(), IntMatrix::identity(l.rank)).expect("square")
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &LatticeMap) -> Result<LatticeMap> {
        if first.dst.rank != self.src.rank {
            return Err(Error::Dimension("composition of incompatible maps".into()));
        }
        LatticeMap::new(first.src.clone(), self.dst.clone(), self.mat.mul(&first.mat)?)
    }

    pub fn dsum(&self, other: &LatticeMap) -> Result<LatticeMap> {
        LatticeMap::new(
            self.src.dsum(&other.src)?,
            self.dst.dsum(&other.dst)?,
            IntMatrix::block_diag(&[&self.mat, &other.mat]),
        )
    }

    pub fn is_injective(&self) -> bool {
        kernel_basis(&self.mat).cols() == 0
    }

    pub fn is_surjective(&self) -> bool {
        cokernel_invariants(&self.mat).is_trivial()
    }

    pub fn to_doc(&self, provenance: &str) -> WitnessDoc {
        WitnessDoc {
            source: self.src.to_doc(),
            target: self.dst.to_doc(),
            matrix: self.mat.to_doc(),
            provenance: provenance.to_string(),
        }
    }
}

/// Export form of a map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub source: LatticeDoc,
    pub target: LatticeDoc,
    pub matrix: MatrixDoc,
    pub provenance: String,
}

/// `mat·ρ_src(σ) = ρ_dst(σ)·mat` and the same for `τ`.
pub fn verify_equivariant(m: &LatticeMap) -> bool {
    let fits = m.mat.rows() == m.dst.rank
        && m.mat.cols() == m.src.rank
        && m.src.sigma.rows() == m.src.rank
        && m.dst.sigma.rows() == m.dst.rank;
    fits && m.mat.mm(&m.src.sigma) == m.dst.sigma.mm(&m.mat) && m.mat.mm(&m.src.tau) == m.dst.tau.mm(&m.mat)
}

/// An equivariant map with a unimodular square matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub map: LatticeMap,
}

impl IsoWitness {
    pub fn new(map: LatticeMap) -> Result<IsoWitness> {
        if !map.mat.is_square() {
            return Err(Error::Dimension(format!("{}: witness matrix is not square", map.label)));
        }
        let d = det(&map.mat)?;
        if !d.is_unit() {
            return Err(Error::InvalidParameter(format!("{}: determinant {d}", map.label)));
        }
        let m = LatticeMap::equivariant(map.src, map.dst, map.mat)?.with_label(map.label);
        Ok(IsoWitness { map: m })
    }

    pub fn det(&self) -> Integer {
        det(&self.map.mat).expect("square")
    }
}

/// Equivariant, square and `|det| = 1`.
pub fn verify_iso(w: &IsoWitness) -> bool {
    verify_equivariant(&w.map) && w.map.mat.is_square() && det(&w.map.mat).map(|d| d.is_unit()).unwrap_or(false)
}

/// `0 → A → M → Q → 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortExactSequence {
    pub inj: LatticeMap,
    pub surj: LatticeMap,
}

impl ShortExactSequence {
    pub fn new(inj: LatticeMap, surj: LatticeMap) -> Result<ShortExactSequence> {
        let s = ShortExactSequence { inj, surj };
        if let Some(why) = ses_violation(&s) {
            return Err(Error::InvalidParameter(format!("{}: {why}", s.label())));
        }
        Ok(s)
    }

    pub fn label(&self) -> String {
        format!("0 -> {} -> {} -> {} -> 0", self.inj.src.label, self.inj.dst.label, self.surj.dst.label)
    }

    /// Block sum of two sequences.
    pub fn dsum(&self, other: &ShortExactSequence) -> Result<ShortExactSequence> {
        ShortExactSequence::new(self.inj.dsum(&other.inj)?, self.surj.dsum(&other.surj)?)
    }

    /// The split sequence `0 → A → A ⊕ Q → Q → 0`.
    pub fn split(a: &DnLattice, q: &DnLattice) -> Result<ShortExactSequence> {
        let m = a.dsum(q)?;
        let mut i = IntMatrix::zeros(m.rank, a.rank);
        i.set_block(0, 0, &IntMatrix::identity(a.rank));
        let mut p = IntMatrix::zeros(q.rank, m.rank);
        p.set_block(0, a.rank, &IntMatrix::identity(q.rank));
        ShortExactSequence::new(LatticeMap::new(a.clone(), m.clone(), i)?, LatticeMap::new(m, q.clone(), p)?)
    }
}

/// First violated exactness condition, if any.
pub fn ses_violation(s: &ShortExactSequence) -> Option<String> {
    let (i, p) = (&s.inj, &s.surj);
    if i.dst.sigma != p.src.sigma || i.dst.tau != p.src.tau {
        return Some("middle lattices differ".into());
    }
    if !verify_equivariant(i) {
        return Some("injection is not equivariant".into());
    }
    if !verify_equivariant(p) {
        return Some("surjection is not equivariant".into());
    }
    if i.src.rank + p.dst.rank != i.dst.rank {
        return Some(format!("ranks {} + {} != {}", i.src.rank, p.dst.rank, i.dst.rank));
    }
    if !i.is_injective() {
        return Some("injection has a kernel".into());
    }
    if !p.is_surjective() {
        return Some(format!("surjection has cokernel {}", cokernel_invariants(&p.mat)));
    }
    if hnf_column_span(&i.mat) != hnf_column_span(&kernel_basis(&p.mat)) {
        return Some("image of the injection differs from the kernel of the surjection".into());
    }
    None
}

pub fn verify_ses(s: &ShortExactSequence) -> bool {
    ses_violation(s).is_none()
}

/// Whether some equivariant `X : Q → M` has `surj · X = 1`.
///
/// Unknowns are the entries of `X`; the three matrix equations are stacked
/// into one integer system.
pub fn has_section(s: &ShortExactSequence) -> Result<bool> {
    let p = &s.surj;
    let (m, q) = (&p.src, &p.dst);
    let (rm, rq) = (m.rank, q.rank);
    let var = |i: usize, j: usize| i * rq + j;
    let nvars = rm * rq;
    let mut rows: Vec<Vec<(usize, Integer)>> = Vec::new();
    let mut rhs: Vec<Integer> = Vec::new();
    // p X = 1
    for a in 0..rq {
        for b in 0..rq {
            let row = (0..rm)
                .filter(|&k| !p.mat[(a, k)].is_zero())
                .map(|k| (var(k, b), p.mat[(a, k)].clone()))
                .collect();
            rows.push(row);
            rhs.push(if a == b { Integer::ONE } else { Integer::ZERO });
        }
    }
    // X ρ_Q(g) - ρ_M(g) X = 0 for g = σ, τ
    for (gq, gm) in [(&q.sigma, &m.sigma), (&q.tau, &m.tau)] {
        for a in 0..rm {
            for b in 0..rq {
                let mut row: Vec<(usize, Integer)> = Vec::new();
                for k in 0..rq {
                    if !gq[(k, b)].is_zero() {
                        row.push((var(a, k), gq[(k, b)].clone()));
                    }
                }
                for k in 0..rm {
                    if !gm[(a, k)].is_zero() {
                        row.push((var(k, b), -&gm[(a, k)]));
                    }
                }
                rows.push(row);
                rhs.push(Integer::ZERO);
            }
        }
    }
    let mut a = IntMatrix::zeros(rows.len(), nvars);
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row {
            a[(r, *c)] += v;
        }
    }
    let b = IntMatrix::column_vector(&rhs);
    Ok(solve_integer(&a, &b)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{m_minus, m_plus, n_plus, triv};

    #[test]
    fn identity_maps() {
        let l = n_plus(5).unwrap();
        assert!(verify_equivariant(&LatticeMap::identity(&l)));
        let w = IsoWitness::new(LatticeMap::identity(&l)).unwrap();
        assert!(verify_iso(&w));
        assert_eq!(w.det(), Integer::ONE);
    }

    #[test]
    fn sign_mismatch_is_not_equivariant() {
        let m = LatticeMap::new(m_plus(3).unwrap(), m_minus(3).unwrap(), IntMatrix::identity(3)).unwrap();
        assert!(!verify_equivariant(&m));
        assert!(LatticeMap::equivariant(m.src.clone(), m.dst.clone(), m.mat.clone()).is_err());
    }

    #[test]
    fn determinant_two_is_not_iso() {
        let l = triv(3).unwrap();
        let m = LatticeMap::new(l.clone(), l, IntMatrix::from_rows(&[[2]])).unwrap();
        assert!(verify_equivariant(&m));
        assert!(IsoWitness::new(m.clone()).is_err());
        assert!(!verify_iso(&IsoWitness { map: m }));
    }

    #[test]
    fn split_sequence_has_section() {
        let s = ShortExactSequence::split(&n_plus(3).unwrap(), &m_minus(3).unwrap()).unwrap();
        assert!(verify_ses(&s));
        assert!(has_section(&s).unwrap());
        let t = ShortExactSequence::split(&triv(3).unwrap(), &triv(3).unwrap()).unwrap();
        assert!(has_section(&s.dsum(&t).unwrap()).unwrap());
    }
}
