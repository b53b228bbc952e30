//! The relation module `R^ab` of `1 → R → F_2 → D_n → 1`, `s1 ↦ σ`, `s2 ↦ τ`.
//!
//! Built twice: from closed-form action matrices, and by rewriting the
//! conjugates of the free generators of `R` through the Schreier transversal
//! `{s1^i s2^j}`.

mod fox;
mod rewrite;
mod word;

pub use fox::{epsilon, fox_derivative, fox_embedding, nu_map, GroupRingVector};
pub use rewrite::{FiniteGroup, SchreierSystem};
pub use word::FreeWord;

use crate::error::{Error, Result};
use crate::group::{elements, GroupElement};
use crate::int::Integer;
use crate::lattice::DnLattice;
use crate::linalg::solve_integer_many;
use crate::matrix::IntMatrix;

/// Free generators `a`, `b_0..b_{n-1}`, `c_0..c_{n-1}` of `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelGenerators {
    pub a: FreeWord,
    pub b: Vec<FreeWord>,
    pub c: Vec<FreeWord>,
}

impl RelGenerators {
    /// In basis order `a, b_0.., c_0..`.
    pub fn all(&self) -> Vec<FreeWord> {
        std::iter::once(self.a.clone())
            .chain(self.b.iter().cloned())
            .chain(self.c.iter().cloned())
            .collect()
    }
}

fn s1() -> FreeWord {
    FreeWord::generator(1)
}

fn s2() -> FreeWord {
    FreeWord::generator(2)
}

/// `a = s1^n`, `b_i = s1^i s2 s1 s2^-1 s1^-(i-1)`, `c_i = s1^i s2^2 s1^-i`.
///
/// `b_0 = s2 s1 s2^-1 s1` is the Schreier generator at `s2` times `a`.
pub fn schreier_generators(n: u32) -> RelGenerators {
    let k = i64::from(n);
    let bend = s2().mul(&s1()).mul(&s2().inverse());
    RelGenerators {
        a: s1().pow(k),
        b: (0..k).map(|i| s1().pow(i).mul(&bend).mul(&s1().pow(-(i - 1)))).collect(),
        c: (0..k).map(|i| s1().pow(i).mul(&s2().pow(2)).mul(&s1().pow(-i))).collect(),
    }
}

fn basis_labels(n: usize) -> Vec<String> {
    std::iter::once("a".to_string())
        .chain((0..n).map(|i| format!("b{i}")))
        .chain((0..n).map(|i| format!("c{i}")))
        .collect()
}

/// `R^ab` on the basis `ā, b̄_0..b̄_{n-1}, c̄_0..c̄_{n-1}`, matrices written out directly.
pub fn relation_module(n: u32) -> Result<DnLattice> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n = {n}; D_n needs n >= 2")));
    }
    let k = n as usize;
    let (a, b, c) = (0usize, |i: usize| 1 + i % k, |i: usize| 1 + k + i % k);
    let mut sigma = IntMatrix::zeros(2 * k + 1, 2 * k + 1);
    sigma[(a, a)] = Integer::ONE;
    for i in 0..k {
        sigma[(b(i + 1), b(i))] = Integer::ONE;
        sigma[(c(i + 1), c(i))] = Integer::ONE;
    }
    let mut tau = IntMatrix::zeros(2 * k + 1, 2 * k + 1);
    let mut set = |row: usize, col: usize, v: i64| tau[(row, col)] += &Integer::from(v);
    set(a, a, -1);
    for i in 0..k {
        set(b(i), a, 1);
    }
    // τ b̄_i = b̄_{1-i} + c̄_{-i} - c̄_{1-i}, indices mod n
    for i in 0..k {
        let m = |j: i64| j.rem_euclid(k as i64) as usize;
        let ii = i as i64;
        set(b(m(1 - ii)), b(i), 1);
        set(c(m(-ii)), b(i), 1);
        set(c(m(1 - ii)), b(i), -1);
        set(c(m(-ii)), c(i), 1);
    }
    DnLattice::new(n, sigma, tau, "R^ab", basis_labels(k))
}

/// The Schreier system of `D_n` with transversal `s1^i s2^j`.
pub fn dihedral_schreier_system(n: u32) -> SchreierSystem {
    let els = elements(n);
    let table = els
        .iter()
        .map(|a| els.iter().map(|b| a.mul(*b, n).index(n)).collect())
        .collect();
    let group = FiniteGroup {
        table,
        identity: 0,
        gen_images: vec![GroupElement::sigma().index(n), GroupElement::tau().index(n)],
    };
    let transversal = els
        .iter()
        .map(|g| s1().pow(i64::from(g.rot)).mul(&s2().pow(i64::from(g.flip))))
        .collect();
    SchreierSystem::new(group, transversal).expect("s1^i s2^j is a Schreier transversal")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjugator {
    S1,
    S2,
}

impl Conjugator {
    fn word(self) -> FreeWord {
        match self {
            Conjugator::S1 => s1(),
            Conjugator::S2 => s2(),
        }
    }
}

/// Rewrites conjugates of `a, b_i, c_i` in the free basis of `R` and converts
/// the abelianized result back to the basis `ā, b̄_i, c̄_i`.
pub struct DihedralRewriter {
    n: u32,
    system: SchreierSystem,
    basis: Vec<FreeWord>,
    /// Columns: the basis words in Schreier coordinates.
    change: IntMatrix,
}

impl DihedralRewriter {
    pub fn new(n: u32) -> Result<DihedralRewriter> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("n = {n}; D_n needs n >= 2")));
        }
        let system = dihedral_schreier_system(n);
        let basis = schreier_generators(n).all();
        if system.rank() != basis.len() {
            return Err(Error::Internal(format!(
                "relation subgroup has rank {}, expected {}",
                system.rank(),
                basis.len()
            )));
        }
        let cols: Vec<Vec<Integer>> = basis
            .iter()
            .map(|w| {
                system
                    .rewrite_abelian(w)
                    .map(|v| v.into_iter().map(Integer::from).collect())
            })
            .collect::<Result<_>>()?;
        let change = IntMatrix::from_columns(basis.len(), &cols);
        Ok(DihedralRewriter {
            n,
            system,
            basis,
            change,
        })
    }

    pub fn system(&self) -> &SchreierSystem {
        &self.system
    }

    /// Coordinates of `x · g · x^{-1}` in `ā, b̄_i, c̄_i`, for `g` the basis word at `gen_index`.
    pub fn conjugate(&self, gen_index: usize, conjugator: Conjugator) -> Result<Vec<Integer>> {
        let g = self.basis.get(gen_index).ok_or_else(|| {
            Error::InvalidParameter(format!("generator index {gen_index} out of range for n = {}", self.n))
        })?;
        let w = conjugator.word().conjugate(g);
        let v: Vec<Integer> = self.system.rewrite_abelian(&w)?.into_iter().map(Integer::from).collect();
        let x = solve_integer_many(&self.change, &IntMatrix::from_columns(v.len(), &[v]))?
            .ok_or_else(|| Error::Internal("relation words do not form a basis".into()))?;
        Ok(x.column(0))
    }

    /// Matrices of `σ` and `τ` assembled from [`DihedralRewriter::conjugate`].
    pub fn action_matrices(&self) -> Result<(IntMatrix, IntMatrix)> {
        let r = self.basis.len();
        let build = |x: Conjugator| -> Result<IntMatrix> {
            let cols = (0..r).map(|j| self.conjugate(j, x)).collect::<Result<Vec<_>>>()?;
            Ok(IntMatrix::from_columns(r, &cols))
        };
        Ok((build(Conjugator::S1)?, build(Conjugator::S2)?))
    }
}

pub fn rewrite_conjugate(n: u32, gen_index: usize, conjugator: Conjugator) -> Result<Vec<Integer>> {
    DihedralRewriter::new(n)?.conjugate(gen_index, conjugator)
}

/// Whether the rewritten action agrees entrywise with [`relation_module`].
pub fn verify_rewritten_action(n: u32) -> Result<bool> {
    let (s, t) = DihedralRewriter::new(n)?.action_matrices()?;
    let r = relation_module(n)?;
    Ok(s == r.sigma && t == r.tau)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_lie_in_the_kernel() {
        for n in 2..=9 {
            let gens = schreier_generators(n);
            assert_eq!(gens.all().len(), 2 * n as usize + 1);
            for w in gens.all() {
                assert!(epsilon(&w, n).is_identity(), "{w}");
            }
        }
        let g = schreier_generators(3);
        assert_eq!(g.b[1].to_string(), "s1 s2 s1 s2^-1");
        assert_eq!(g.c[0].to_string(), "s2 s2");
        assert_eq!(g.b[0].to_string(), "s2 s1 s2^-1 s1");
    }

    #[test]
    fn conjugation_examples() {
        let n = 5;
        let unit = |i: usize| {
            let mut v = vec![Integer::ZERO; 11];
            v[i] = Integer::ONE;
            v
        };
        assert_eq!(rewrite_conjugate(n, 0, Conjugator::S1).unwrap(), unit(0));
        // b_{n-1} ↦ a b_0 a^{-1}
        assert_eq!(rewrite_conjugate(n, 5, Conjugator::S1).unwrap(), unit(1));
        assert_eq!(rewrite_conjugate(n, 6, Conjugator::S2).unwrap(), unit(6));
        assert!(rewrite_conjugate(n, 11, Conjugator::S2).is_err());
    }

    #[test]
    fn transcription_matches_rewriting() {
        for n in 2..=8 {
            assert!(verify_rewritten_action(n).unwrap(), "n={n}");
            let r = relation_module(n).unwrap();
            assert!(r.is_valid());
            assert!(r.is_faithful());
        }
    }
}
