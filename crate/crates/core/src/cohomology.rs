//! Tate cohomology `Ĥ⁻¹`, `Ĥ⁰` and `H¹` of a lattice over a subgroup of `D_n`.
//!
//! Every quotient goes the same way: a kernel basis `K`, the numerator
//! generators written in `K`-coordinates by an integer solve, then the
//! invariant factors of the resulting cokernel.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{subgroups, GroupElement, Subgroup};
use crate::int::Integer;
use crate::lattice::DnLattice;
use crate::linalg::{cokernel_invariants, kernel_basis, kernel_basis_rows, solve_integer_many, AbelianInvariants};
use crate::matrix::IntMatrix;

/// `Σ_{g ∈ s} ρ(g)`.
pub fn norm_matrix(l: &DnLattice, s: &Subgroup) -> Result<IntMatrix> {
    let mut acc = IntMatrix::zeros(l.rank, l.rank);
    for (_, m) in l.restrict(s)? {
        acc = acc.add(&m)?;
    }
    Ok(acc)
}

/// Invariants of `span(gens) / span(k)`-style quotients: `gens` must lie in
/// the column span of the basis `k`.
fn quotient(k: &IntMatrix, gens: &IntMatrix, what: &str) -> Result<AbelianInvariants> {
    if k.cols() == 0 {
        return Ok(AbelianInvariants::trivial());
    }
    let coords = if gens.cols() == 0 {
        IntMatrix::zeros(k.cols(), 0)
    } else {
        solve_integer_many(k, gens)?
            .ok_or_else(|| Error::Internal(format!("{what}: a generator is outside the kernel")))?
    };
    let inv = cokernel_invariants(&coords);
    if !inv.is_finite() {
        return Err(Error::Internal(format!("{what}: quotient has free rank {}", inv.free_rank)));
    }
    Ok(inv)
}

/// `Ĥ⁻¹(s, l) = ker N / span{(ρ(g) - 1)m}`.
pub fn tate_minus1(l: &DnLattice, s: &Subgroup) -> Result<AbelianInvariants> {
    let norm = norm_matrix(l, s)?;
    let k = kernel_basis(&norm);
    let id = IntMatrix::identity(l.rank);
    let blocks = l
        .restrict(s)?
        .into_iter()
        .filter(|(g, _)| !g.is_identity())
        .map(|(_, m)| m.sub(&id))
        .collect::<Result<Vec<_>>>()?;
    let gens = if blocks.is_empty() {
        IntMatrix::zeros(l.rank, 0)
    } else {
        IntMatrix::hstack(&blocks.iter().collect::<Vec<_>>())?
    };
    quotient(&k, &gens, "Ĥ⁻¹")
}

/// `Ĥ⁰(s, l) = l^s / N l`.
pub fn tate_zero_hat(l: &DnLattice, s: &Subgroup) -> Result<AbelianInvariants> {
    let id = IntMatrix::identity(l.rank);
    let rows = s
        .generators()
        .into_iter()
        .map(|g| l.act(g).sub(&id))
        .collect::<Result<Vec<_>>>()?;
    let stacked = IntMatrix::vstack(&rows.iter().collect::<Vec<_>>())?;
    let fixed = kernel_basis(&stacked);
    quotient(&fixed, &norm_matrix(l, s)?, "Ĥ⁰")
}

/// `H¹(s, l) = Z¹ / B¹`, cocycles solved from the condition on every pair.
pub fn h1(l: &DnLattice, s: &Subgroup) -> Result<AbelianInvariants> {
    let res = l.restrict(s)?;
    let r = l.rank;
    let n = l.n;
    let pos: BTreeMap<GroupElement, usize> = res.iter().enumerate().map(|(i, (g, _))| (*g, i)).collect();
    let nvars = res.len() * r;
    // f(gh) - f(g) - ρ(g) f(h) = 0
    let mut rows = Vec::with_capacity(res.len() * res.len() * r);
    for (gi, (g, mg)) in res.iter().enumerate() {
        for (hi, (h, _)) in res.iter().enumerate() {
            let ghi = pos[&g.mul(*h, n)];
            for i in 0..r {
                let mut acc: BTreeMap<usize, Integer> = BTreeMap::new();
                *acc.entry(ghi * r + i).or_insert(Integer::ZERO) += &Integer::ONE;
                *acc.entry(gi * r + i).or_insert(Integer::ZERO) -= &Integer::ONE;
                for (j, v) in mg.row(i).iter().enumerate() {
                    if !v.is_zero() {
                        *acc.entry(hi * r + j).or_insert(Integer::ZERO) -= v;
                    }
                }
                let row: Vec<(usize, Integer)> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    let z1 = kernel_basis_rows(nvars, rows);
    // coboundary of e_j: g ↦ (ρ(g) - 1) e_j
    let cols: Vec<Vec<Integer>> = (0..r)
        .map(|j| {
            let mut v = Vec::with_capacity(nvars);
            for (_, m) in &res {
                for i in 0..r {
                    let mut x = m[(i, j)].clone();
                    if i == j {
                        x -= &Integer::ONE;
                    }
                    v.push(x);
                }
            }
            v
        })
        .collect();
    quotient(&z1, &IntMatrix::from_columns(nvars, &cols), "H¹")
}

/// The three groups at one subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyTriple {
    pub h_minus1: AbelianInvariants,
    pub h0_hat: AbelianInvariants,
    pub h1: AbelianInvariants,
}

pub fn triple(l: &DnLattice, s: &Subgroup) -> Result<CohomologyTriple> {
    Ok(CohomologyTriple {
        h_minus1: tate_minus1(l, s)?,
        h0_hat: tate_zero_hat(l, s)?,
        h1: h1(l, s)?,
    })
}

/// All three groups at every subgroup, keyed by subgroup label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyProfile {
    pub n: u32,
    pub entries: Vec<(Subgroup, CohomologyTriple)>,
}

impl CohomologyProfile {
    pub fn get(&self, label: &str) -> Option<&CohomologyTriple> {
        self.entries.iter().find(|(s, _)| s.label() == label).map(|(_, t)| t)
    }

    pub fn is_trivial(&self) -> bool {
        self.entries
            .iter()
            .all(|(_, t)| t.h_minus1.is_trivial() && t.h0_hat.is_trivial() && t.h1.is_trivial())
    }

    /// Label to rendered groups, in subgroup order.
    pub fn to_report(&self) -> Vec<ProfileRow> {
        self.entries
            .iter()
            .map(|(s, t)| ProfileRow {
                subgroup: s.label(),
                order: s.order(),
                h_minus1: t.h_minus1.to_string(),
                h0_hat: t.h0_hat.to_string(),
                h1: t.h1.to_string(),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileRow {
    pub subgroup: String,
    pub order: usize,
    pub h_minus1: String,
    pub h0_hat: String,
    pub h1: String,
}

/// The full profile, subgroups computed in parallel.
pub fn profile(l: &DnLattice) -> Result<CohomologyProfile> {
    let subs = subgroups(l.n);
    let entries = subs
        .par_iter()
        .map(|s| triple(l, s).map(|t| (*s, t)))
        .collect::<Result<Vec<_>>>()?;
    Ok(CohomologyProfile { n: l.n, entries })
}

/// Outcome of a vanishing test over all subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Vanishing {
    Holds,
    /// First subgroup (in enumeration order) with a nonzero group.
    FailsAt(Subgroup, AbelianInvariants),
}

impl Vanishing {
    pub fn holds(&self) -> bool {
        matches!(self, Vanishing::Holds)
    }
}

fn vanishing(
    l: &DnLattice,
    f: impl Fn(&DnLattice, &Subgroup) -> Result<AbelianInvariants> + Sync,
) -> Result<Vanishing> {
    let subs = subgroups(l.n);
    let groups = subs.par_iter().map(|s| f(l, s)).collect::<Result<Vec<_>>>()?;
    Ok(subs
        .into_iter()
        .zip(groups)
        .find(|(_, g)| !g.is_trivial())
        .map_or(Vanishing::Holds, |(s, g)| Vanishing::FailsAt(s, g)))
}

/// `Ĥ⁻¹(S, l) = 0` for every subgroup `S`.
pub fn is_flabby(l: &DnLattice) -> Result<Vanishing> {
    vanishing(l, tate_minus1)
}

/// `H¹(S, l) = 0` for every subgroup `S`.
pub fn is_coflabby(l: &DnLattice) -> Result<Vanishing> {
    vanishing(l, h1)
}

/// `M₁ = ker N_G` as a basis, together with the rank of `M / M₁`.
pub fn anisotropic_part(l: &DnLattice) -> Result<(IntMatrix, usize)> {
    let k = kernel_basis(&norm_matrix(l, &Subgroup::whole(l.n))?);
    let q = l.rank - k.cols();
    Ok((k, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{regular, triv, triv_minus};

    fn tau_subgroup(n: u32) -> Subgroup {
        Subgroup::dihedral(n, n, 0).unwrap()
    }

    #[test]
    fn sign_lattice() {
        let l = triv_minus(3).unwrap();
        let t = tau_subgroup(3);
        assert_eq!(norm_matrix(&l, &t).unwrap(), IntMatrix::from_rows(&[[0]]));
        assert_eq!(tate_minus1(&l, &t).unwrap(), AbelianInvariants::cyclic(2));
        assert!(tate_zero_hat(&l, &t).unwrap().is_trivial());
    }

    #[test]
    fn trivial_lattice() {
        for n in [2u32, 3, 6] {
            let l = triv(n).unwrap();
            let g = Subgroup::whole(n);
            assert_eq!(norm_matrix(&l, &g).unwrap(), IntMatrix::from_rows(&[[2 * i64::from(n)]]));
            assert_eq!(tate_zero_hat(&l, &g).unwrap(), AbelianInvariants::cyclic(2 * i64::from(n)));
            assert!(h1(&l, &tau_subgroup(n)).unwrap().is_trivial());
            assert!(tate_minus1(&l, &g).unwrap().is_trivial());
        }
        assert_eq!(norm_matrix(&triv(4).unwrap(), &Subgroup::trivial(4)).unwrap(), IntMatrix::identity(1));
    }

    #[test]
    fn free_module_is_acyclic() {
        for n in 2..=4 {
            let p = profile(&regular(n).unwrap()).unwrap();
            assert_eq!(p.entries.len(), subgroups(n).len());
            assert!(p.is_trivial());
        }
    }

    #[test]
    fn anisotropic_examples() {
        let (k, q) = anisotropic_part(&triv(5).unwrap()).unwrap();
        assert_eq!((k.cols(), q), (0, 1));
        let (k, q) = anisotropic_part(&crate::lattice::m_minus(5).unwrap()).unwrap();
        assert_eq!((k.cols(), q), (5, 0));
    }
}
