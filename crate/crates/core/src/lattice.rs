//! `D_n`-lattices as pairs of integer matrices, and the named families.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{elements, subgroups, GroupElement, Subgroup};
use crate::int::Integer;
use crate::matrix::{IntMatrix, MatrixDoc};

/// A `D_n`-lattice given by the matrices of `σ` and `τ` on a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DnLattice {
    pub n: u32,
    pub rank: usize,
    pub sigma: IntMatrix,
    pub tau: IntMatrix,
    pub label: String,
    pub basis: Vec<String>,
}

/// Export form of a lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDoc {
    pub n: u32,
    pub rank: usize,
    pub label: String,
    pub basis: Vec<String>,
    pub sigma: MatrixDoc,
    pub tau: MatrixDoc,
}

fn elem_label(g: GroupElement) -> String {
    g.to_string()
}

fn pow_label(sym: &str, k: usize, suffix: &str) -> String {
    match k {
        0 => format!("{suffix}"),
        1 => format!("{sym}{suffix}"),
        _ => format!("{sym}^{k}{suffix}"),
    }
}

fn require_n(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n = {n}; D_n needs n >= 2")));
    }
    Ok(())
}

fn require_odd(n: u32, what: &str) -> Result<()> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "{what} is defined only for odd n >= 3, got n = {n}"
        )));
    }
    Ok(())
}

fn cyclic_shift(n: usize) -> IntMatrix {
    let mut a = IntMatrix::zeros(n, n);
    for k in 0..n {
        a[((k + 1) % n, k)] = Integer::ONE;
    }
    a
}

/// `B`: the basis vector `σ^{k+1}u` goes to `σ^{-(k+1)}u`.
fn reflection_b(n: usize) -> IntMatrix {
    let mut b = IntMatrix::zeros(n, n);
    for k in 0..n {
        b[((2 * n - k - 2) % n, k)] = Integer::ONE;
    }
    b
}

impl DnLattice {
    pub fn new(
        n: u32,
        sigma: IntMatrix,
        tau: IntMatrix,
        label: impl Into<String>,
        basis: Vec<String>,
    ) -> Result<DnLattice> {
        require_n(n)?;
        let r = sigma.rows();
        if !sigma.is_square() || tau.rows() != r || tau.cols() != r || basis.len() != r {
            return Err(Error::Dimension(format!(
                "sigma {}x{}, tau {}x{}, {} basis labels",
                sigma.rows(),
                sigma.cols(),
                tau.rows(),
                tau.cols(),
                basis.len()
            )));
        }
        Ok(DnLattice {
            n,
            rank: r,
            sigma,
            tau,
            label: label.into(),
            basis,
        })
    }

    /// `σ^n = 1`, `τ^2 = 1` and `τστ = σ^{-1}` as exact matrix identities.
    pub fn is_valid(&self) -> bool {
        let id = IntMatrix::identity(self.rank);
        self.sigma.pow(self.n as usize).is_identity()
            && self.tau.mm(&self.tau).is_identity()
            && self.tau.mm(&self.sigma).mm(&self.tau).mm(&self.sigma) == id
    }

    pub fn act(&self, g: GroupElement) -> IntMatrix {
        let s = self.sigma.pow(g.rot as usize);
        if g.flip == 1 {
            s.mm(&self.tau)
        } else {
            s
        }
    }

    /// Action matrices of all `2n` elements, indexed by `GroupElement::index`.
    pub fn actions(&self) -> Vec<IntMatrix> {
        let n = self.n as usize;
        let mut rots = Vec::with_capacity(n);
        let mut cur = IntMatrix::identity(self.rank);
        for _ in 0..n {
            let next = self.sigma.mm(&cur);
            rots.push(cur);
            cur = next;
        }
        let flips: Vec<IntMatrix> = rots.iter().map(|r| r.mm(&self.tau)).collect();
        rots.into_iter().chain(flips).collect()
    }

    pub fn dual(&self) -> DnLattice {
        let sigma_inv = self.sigma.pow(self.n as usize - 1);
        DnLattice {
            n: self.n,
            rank: self.rank,
            sigma: sigma_inv.transpose(),
            tau: self.tau.transpose(),
            label: format!("dual({})", self.label),
            basis: self.basis.iter().map(|b| format!("{b}*")).collect(),
        }
    }

    fn same_n(&self, other: &DnLattice) -> Result<()> {
        if self.n != other.n {
            return Err(Error::InvalidParameter(format!(
                "lattices over D_{} and D_{}",
                self.n, other.n
            )));
        }
        Ok(())
    }

    pub fn dsum(&self, other: &DnLattice) -> Result<DnLattice> {
        self.same_n(other)?;
        Ok(DnLattice {
            n: self.n,
            rank: self.rank + other.rank,
            sigma: IntMatrix::block_diag(&[&self.sigma, &other.sigma]),
            tau: IntMatrix::block_diag(&[&self.tau, &other.tau]),
            label: format!("{} + {}", self.label, other.label),
            basis: self.basis.iter().chain(&other.basis).cloned().collect(),
        })
    }

    /// Direct sum of `k` copies.
    pub fn power(&self, k: usize) -> DnLattice {
        let sigmas: Vec<&IntMatrix> = (0..k).map(|_| &self.sigma).collect();
        let taus: Vec<&IntMatrix> = (0..k).map(|_| &self.tau).collect();
        DnLattice {
            n: self.n,
            rank: self.rank * k,
            sigma: IntMatrix::block_diag(&sigmas),
            tau: IntMatrix::block_diag(&taus),
            label: format!("({})^{k}", self.label),
            basis: (0..k)
                .flat_map(|c| self.basis.iter().map(move |b| format!("{b}[{c}]")))
                .collect(),
        }
    }

    pub fn tensor(&self, other: &DnLattice) -> Result<DnLattice> {
        self.same_n(other)?;
        let basis = self
            .basis
            .iter()
            .flat_map(|a| other.basis.iter().map(move |b| format!("{a}⊗{b}")))
            .collect();
        Ok(DnLattice {
            n: self.n,
            rank: self.rank * other.rank,
            sigma: self.sigma.kron(&other.sigma),
            tau: self.tau.kron(&other.tau),
            label: format!("{} ⊗ {}", self.label, other.label),
            basis,
        })
    }

    /// Every element of `s` with its action matrix.
    pub fn restrict(&self, s: &Subgroup) -> Result<Vec<(GroupElement, IntMatrix)>> {
        if s.n != self.n {
            return Err(Error::NotASubgroup {
                n: self.n,
                spec: format!("{} (a subgroup of D_{})", s.label(), s.n),
            });
        }
        Ok(s.elements().into_iter().map(|g| (g, self.act(g))).collect())
    }

    pub fn is_faithful(&self) -> bool {
        self.actions()
            .iter()
            .enumerate()
            .all(|(i, m)| i == 0 || !m.is_identity())
    }

    /// When both generators act by permutation matrices in the given basis,
    /// the stabilizer of the first basis vector of each orbit, so that the
    /// lattice is the sum of the corresponding `Z[G/H]`. No basis search.
    pub fn literal_permutation_decomposition(&self) -> Option<Vec<Subgroup>> {
        if !self.sigma.is_permutation() || !self.tau.is_permutation() {
            return None;
        }
        let n = self.n;
        let images: Vec<Vec<usize>> = self
            .actions()
            .iter()
            .map(|m| m.permutation_images().expect("products of permutations"))
            .collect();
        let all = subgroups(n);
        let mut seen = vec![false; self.rank];
        let mut out = Vec::new();
        for b in 0..self.rank {
            if seen[b] {
                continue;
            }
            for img in &images {
                seen[img[b]] = true;
            }
            let stab: Vec<GroupElement> = elements(n)
                .into_iter()
                .filter(|g| images[g.index(n)][b] == b)
                .collect();
            let h = all
                .iter()
                .find(|s| s.elements() == stab)
                .expect("stabilizers are subgroups");
            out.push(*h);
        }
        Some(out)
    }

    pub fn to_doc(&self) -> LatticeDoc {
        LatticeDoc {
            n: self.n,
            rank: self.rank,
            label: self.label.clone(),
            basis: self.basis.clone(),
            sigma: self.sigma.to_doc(),
            tau: self.tau.to_doc(),
        }
    }

    pub fn from_doc(doc: &LatticeDoc) -> Result<DnLattice> {
        let l = DnLattice::new(
            doc.n,
            IntMatrix::from_doc(&doc.sigma)?,
            IntMatrix::from_doc(&doc.tau)?,
            doc.label.clone(),
            doc.basis.clone(),
        )?;
        if l.rank != doc.rank {
            return Err(Error::Dimension(format!("rank {} but matrices of size {}", doc.rank, l.rank)));
        }
        Ok(l)
    }
}

/// `Z` with trivial action.
pub fn triv(n: u32) -> Result<DnLattice> {
    require_n(n)?;
    DnLattice::new(n, IntMatrix::identity(1), IntMatrix::identity(1), "Z", vec!["w".into()])
}

/// `Z_-`: `σ` trivial, `τ = -1`.
pub fn triv_minus(n: u32) -> Result<DnLattice> {
    require_n(n)?;
    DnLattice::new(
        n,
        IntMatrix::identity(1),
        IntMatrix::from_rows(&[[-1]]),
        "Z_-",
        vec!["w'".into()],
    )
}

/// `Z[G]` on the basis `σ^0..σ^{n-1}, τ, στ, .., σ^{n-1}τ` by left multiplication.
pub fn regular(n: u32) -> Result<DnLattice> {
    require_n(n)?;
    let els = elements(n);
    let left_mul = |g: GroupElement| {
        let mut m = IntMatrix::zeros(els.len(), els.len());
        for h in &els {
            m[(g.mul(*h, n).index(n), h.index(n))] = Integer::ONE;
        }
        m
    };
    DnLattice::new(
        n,
        left_mul(GroupElement::sigma()),
        left_mul(GroupElement::tau()),
        "Z[G]",
        els.iter().map(|g| elem_label(*g)).collect(),
    )
}

/// `Z[G/⟨σ⟩]` on the cosets `⟨σ⟩, τ⟨σ⟩`.
pub fn perm_mod_sigma(n: u32) -> Result<DnLattice> {
    require_n(n)?;
    DnLattice::new(
        n,
        IntMatrix::identity(2),
        IntMatrix::from_rows(&[[0, 1], [1, 0]]),
        "Z[G/<σ>]",
        vec!["<σ>".into(), "τ<σ>".into()],
    )
}

/// `Z[G/⟨τ⟩]` on the cosets `σ^i⟨τ⟩`, `i = 0..n-1`.
pub fn perm_mod_tau(n: u32) -> Result<DnLattice> {
    require_n(n)?;
    let k = n as usize;
    let mut t = IntMatrix::zeros(k, k);
    for i in 0..k {
        t[((k - i) % k, i)] = Integer::ONE;
    }
    DnLattice::new(
        n,
        cyclic_shift(k),
        t,
        "Z[G/<τ>]",
        (0..k).map(|i| pow_label("σ", i, "<τ>")).collect(),
    )
}

/// Augmentation ideal `I_G` on the basis `g - 1`, `g ≠ 1`, in group order.
pub fn aug_ideal(n: u32) -> Result<DnLattice> {
    require_n(n)?;
    let els: Vec<GroupElement> = elements(n).into_iter().skip(1).collect();
    let r = els.len();
    // h(g - 1) = (hg - 1) - (h - 1)
    let action = |h: GroupElement| {
        let mut m = IntMatrix::zeros(r, r);
        for g in &els {
            let col = g.index(n) - 1;
            let hg = h.mul(*g, n);
            if !hg.is_identity() {
                m[(hg.index(n) - 1, col)] += &Integer::ONE;
            }
            if !h.is_identity() {
                m[(h.index(n) - 1, col)] -= &Integer::ONE;
            }
        }
        m
    };
    DnLattice::new(
        n,
        action(GroupElement::sigma()),
        action(GroupElement::tau()),
        "I_G",
        els.iter().map(|g| format!("{g}-1")).collect(),
    )
}

/// `M_+ = Ind_{⟨τ⟩}^G Z` on the basis `σ^{k+1}u`, `k = 0..n-1`.
pub fn m_plus(n: u32) -> Result<DnLattice> {
    require_odd(n, "M_+")?;
    let k = n as usize;
    DnLattice::new(
        n,
        cyclic_shift(k),
        reflection_b(k),
        "M_+",
        (0..k).map(|i| pow_label("σ", (i + 1) % k, "u")).collect(),
    )
}

/// `M_- = Ind_{⟨τ⟩}^G Z_-` with `σ ↦ A`, `τ ↦ -B`.
pub fn m_minus(n: u32) -> Result<DnLattice> {
    require_odd(n, "M_-")?;
    let k = n as usize;
    DnLattice::new(
        n,
        cyclic_shift(k),
        reflection_b(k).neg(),
        "M_-",
        (0..k).map(|i| pow_label("σ", (i + 1) % k, "u'")).collect(),
    )
}

fn a_prime(n: usize) -> IntMatrix {
    let r = n - 1;
    let mut a = IntMatrix::zeros(r, r);
    for i in 0..r - 1 {
        a[(i + 1, i)] = Integer::ONE;
    }
    for i in 0..r {
        a[(i, r - 1)] = Integer::from(-1);
    }
    a
}

fn b_prime(n: usize) -> IntMatrix {
    let r = n - 1;
    let mut b = IntMatrix::zeros(r, r);
    for i in 0..r {
        b[(r - 1 - i, i)] = Integer::ONE;
    }
    b
}

/// `N_+ = M_+ / f(σ)M_+` on the images of `σ^i u`, `i = 1..n-1`.
pub fn n_plus(n: u32) -> Result<DnLattice> {
    require_odd(n, "N_+")?;
    let k = n as usize;
    DnLattice::new(
        n,
        a_prime(k),
        b_prime(k),
        "N_+",
        (1..k).map(|i| pow_label("σ", i, "u")).collect(),
    )
}

/// `N_- = M_- / f(σ)M_-` with `σ ↦ A'`, `τ ↦ -B'`.
pub fn n_minus(n: u32) -> Result<DnLattice> {
    require_odd(n, "N_-")?;
    let k = n as usize;
    DnLattice::new(
        n,
        a_prime(k),
        b_prime(k).neg(),
        "N_-",
        (1..k).map(|i| pow_label("σ", i, "u'")).collect(),
    )
}

fn a_tilde(n: usize) -> IntMatrix {
    IntMatrix::block_diag(&[&cyclic_shift(n), &IntMatrix::identity(1)])
}

fn b_tilde(n: usize) -> IntMatrix {
    let mut b = IntMatrix::zeros(n + 1, n + 1);
    b.set_block(0, 0, &reflection_b(n));
    for i in 0..n {
        b[(i, n)] = Integer::ONE;
    }
    b[(n, n)] = Integer::from(-1);
    b
}

/// Rank `n+1` extension of `Z` by `M_+`: `σ ↦ Ã`, `τ ↦ B̃`.
pub fn mtilde_plus(n: u32) -> Result<DnLattice> {
    require_odd(n, "M~_+")?;
    let k = n as usize;
    let mut basis: Vec<String> = (0..k).map(|i| format!("w{i}")).collect();
    basis.push("w".into());
    DnLattice::new(n, a_tilde(k), b_tilde(k), "M~_+", basis)
}

/// `σ ↦ Ã`, `τ ↦ -B̃`.
pub fn mtilde_minus(n: u32) -> Result<DnLattice> {
    require_odd(n, "M~_-")?;
    let k = n as usize;
    let mut basis: Vec<String> = (0..k).map(|i| format!("w'{i}")).collect();
    basis.push("w'".into());
    DnLattice::new(n, a_tilde(k), b_tilde(k).neg(), "M~_-", basis)
}

/// Names accepted by [`lattice_by_name`], besides `dual:<name>`.
pub const LATTICE_NAMES: &[&str] = &[
    "triv",
    "triv_minus",
    "regular",
    "perm_mod_sigma",
    "perm_mod_tau",
    "aug_ideal",
    "m_plus",
    "m_minus",
    "n_plus",
    "n_minus",
    "mtilde_plus",
    "mtilde_minus",
    "Rab",
    "IG",
    "IG2",
];

/// Look up a lattice by constructor name; also `Rab`, `IG`, `IG2` and `dual:<name>`.
pub fn lattice_by_name(name: &str, n: u32) -> Result<DnLattice> {
    if let Some(inner) = name.strip_prefix("dual:") {
        return Ok(lattice_by_name(inner, n)?.dual());
    }
    match name {
        "triv" => triv(n),
        "triv_minus" => triv_minus(n),
        "regular" => regular(n),
        "perm_mod_sigma" => perm_mod_sigma(n),
        "perm_mod_tau" => perm_mod_tau(n),
        "aug_ideal" | "IG" => aug_ideal(n),
        "IG2" => {
            let ig = aug_ideal(n)?;
            ig.tensor(&ig)
        }
        "m_plus" => m_plus(n),
        "m_minus" => m_minus(n),
        "n_plus" => n_plus(n),
        "n_minus" => n_minus(n),
        "mtilde_plus" => mtilde_plus(n),
        "mtilde_minus" => mtilde_minus(n),
        "Rab" | "relation_module" => crate::relation::relation_module(n),
        _ => Err(Error::UnknownLattice(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_plus_three_explicit_matrices() {
        let m = m_plus(3).unwrap();
        assert_eq!(m.sigma, IntMatrix::from_rows(&[[0, 0, 1], [1, 0, 0], [0, 1, 0]]));
        assert_eq!(m.tau, IntMatrix::from_rows(&[[0, 1, 0], [1, 0, 0], [0, 0, 1]]));
        assert_eq!(m.act(GroupElement::sigma()), m.sigma);
    }

    #[test]
    fn n_plus_three_explicit_matrices() {
        let m = n_plus(3).unwrap();
        assert_eq!(m.sigma, IntMatrix::from_rows(&[[0, -1], [1, -1]]));
        assert_eq!(m.tau, IntMatrix::from_rows(&[[0, 1], [1, 0]]));
    }

    #[test]
    fn mtilde_plus_last_column() {
        for n in [3u32, 5, 7] {
            let m = mtilde_plus(n).unwrap();
            let k = n as usize;
            let mut expected: Vec<Integer> = vec![Integer::ONE; k];
            expected.push(Integer::from(-1));
            assert_eq!(m.tau.column(k), expected);
            assert_eq!(m.sigma, IntMatrix::block_diag(&[&m_plus(n).unwrap().sigma, &IntMatrix::identity(1)]));
            assert_eq!(m.tau.submatrix(0..k, 0..k), m_plus(n).unwrap().tau);
        }
    }

    #[test]
    fn odd_only_families_reject_even_n() {
        assert!(m_plus(4).is_err());
        assert!(n_minus(2).is_err());
        assert!(mtilde_minus(6).is_err());
        assert!(regular(2).is_ok());
        assert!(regular(1).is_err());
    }

    #[test]
    fn regular_is_faithful_and_permutation() {
        for n in 2..=6 {
            let r = regular(n).unwrap();
            assert!(r.is_faithful());
            let d = r.literal_permutation_decomposition().unwrap();
            assert_eq!(d, vec![Subgroup::trivial(n)]);
            let dr = r.dual();
            assert!(dr.sigma.is_permutation() && dr.tau.is_permutation());
        }
        assert!(!triv(4).unwrap().is_faithful());
    }

    #[test]
    fn m_plus_is_one_orbit_with_reflection_stabilizer() {
        for n in [3u32, 5, 9] {
            let d = m_plus(n).unwrap().literal_permutation_decomposition().unwrap();
            assert_eq!(d.len(), 1);
            assert_eq!(d[0].order(), 2);
            assert_eq!(d[0].kind, crate::group::SubgroupKind::Dihedral);
            assert!(n_plus(n).unwrap().literal_permutation_decomposition().is_none());
        }
    }

    #[test]
    fn tensor_and_dual_identities() {
        let n = 5;
        let l = n_plus(n).unwrap();
        let dd = l.dual().dual();
        assert_eq!((dd.sigma, dd.tau), (l.sigma.clone(), l.tau.clone()));
        let t = triv(n).unwrap().tensor(&l).unwrap();
        assert_eq!((t.sigma, t.tau), (l.sigma, l.tau));
        let m = triv_minus(n).unwrap();
        let mm = m.tensor(&m).unwrap();
        assert_eq!(mm.tau, IntMatrix::identity(1));
        let ig = aug_ideal(3).unwrap();
        assert_eq!(ig.tensor(&ig).unwrap().rank, 25);
        assert_eq!(m_plus(5).unwrap().dsum(&mtilde_plus(5).unwrap()).unwrap().rank, 11);
    }

    #[test]
    fn restriction_sizes() {
        let r = regular(4).unwrap();
        let s = Subgroup::dihedral(4, 2, 0).unwrap();
        let res = r.restrict(&s).unwrap();
        assert_eq!(res.len(), 4);
        assert!(res.iter().all(|(_, m)| m.is_permutation()));
        let m = m_plus(3).unwrap();
        let res = m.restrict(&Subgroup::dihedral(3, 3, 0).unwrap()).unwrap();
        assert_eq!(res.len(), 2);
        assert_eq!(res[1].1, m.tau);
        let t = m.restrict(&Subgroup::trivial(3)).unwrap();
        assert_eq!(t, vec![(GroupElement::IDENTITY, IntMatrix::identity(3))]);
        assert!(m.restrict(&Subgroup::trivial(5)).is_err());
    }

    #[test]
    fn doc_round_trip() {
        let l = mtilde_plus(3).unwrap();
        let json = serde_json::to_string(&l.to_doc()).unwrap();
        let back = DnLattice::from_doc(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, l);
        assert_eq!(back.rank, 4);
    }
}
