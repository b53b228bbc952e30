//! Explicit isomorphisms and exact sequences among the named lattices, each
//! built from closed-form elements in fixed bases.

use crate::cohomology::{profile, CohomologyProfile};
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::int::Integer;
use crate::lattice::{
    aug_ideal, m_minus, m_plus, mtilde_minus, mtilde_plus, n_minus, n_plus, perm_mod_sigma, perm_mod_tau, regular,
    triv, triv_minus, DnLattice,
};
use crate::linalg::solve_integer_many;
use crate::matrix::IntMatrix;
use crate::relation::{fox_derivative, fox_embedding, nu_map, relation_module, schreier_generators, GroupRingVector};
use crate::witness::{IsoWitness, LatticeMap, ShortExactSequence};

fn require_odd(n: u32) -> Result<()> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidParameter(format!("requires odd n >= 3, got n = {n}")));
    }
    Ok(())
}

fn half(n: u32) -> i64 {
    i64::from(n - 1) / 2
}

/// A vector of length `len` with the given `(position, value)` entries added up.
fn vector(len: usize, terms: impl IntoIterator<Item = (usize, i64)>) -> Vec<Integer> {
    let mut v = vec![Integer::ZERO; len];
    for (i, c) in terms {
        v[i] += &Integer::from(c);
    }
    v
}

fn modn(i: i64, n: u32) -> usize {
    i.rem_euclid(i64::from(n)) as usize
}

/// `σ^k v` in `l`.
fn sigma_orbit(l: &DnLattice, v: &[Integer]) -> Vec<Vec<Integer>> {
    let mut out = Vec::with_capacity(l.n as usize);
    let mut cur = v.to_vec();
    for _ in 0..l.n {
        out.push(cur.clone());
        cur = l.sigma.mul_vec(&cur);
    }
    out
}

/// Columns `σ^{k+1} v`, `k = 0..n-1`: the images of the basis `σ^{k+1}u` of
/// an induced lattice when `u ↦ v`.
fn induced_columns(l: &DnLattice, v: &[Integer]) -> Vec<Vec<Integer>> {
    let mut orbit = sigma_orbit(l, v);
    orbit.rotate_left(1);
    orbit
}

fn cyclic_shift(n: usize) -> IntMatrix {
    let mut a = IntMatrix::zeros(n, n);
    for k in 0..n {
        a[((k + 1) % n, k)] = Integer::ONE;
    }
    a
}

fn iso(src: DnLattice, dst: DnLattice, cols: &[Vec<Integer>], label: &str) -> Result<IsoWitness> {
    let mat = IntMatrix::from_columns(dst.rank, cols);
    IsoWitness::new(LatticeMap::new(src, dst, mat)?.with_label(label))
}

/// `M̃₊ ⊕ Z ≅ Z[G/⟨σ⟩] ⊕ Z[G/⟨τ⟩]`.
///
/// Target basis `u_0, u_1, v_0..v_{n-1}`; the columns are
/// `σx, .., σ^{n-1}x, x, y, t` with `t = u_0 + u_1 + Σv`, `x = t - v_0`,
/// `y = h u_0 + (h+1) u_1 + h Σv`, `h = (n-1)/2`.
pub fn iso_mtilde_plus_with_trivial(n: u32) -> Result<IsoWitness> {
    require_odd(n)?;
    let h = half(n);
    let k = n as usize;
    let dst = perm_mod_sigma(n)?.dsum(&perm_mod_tau(n)?)?;
    let len = k + 2;
    let v = |i: usize| 2 + i;
    let t = vector(len, [(0, 1), (1, 1)].into_iter().chain((0..k).map(|i| (v(i), 1))));
    let x = vector(len, [(0, 1), (1, 1)].into_iter().chain((1..k).map(|i| (v(i), 1))));
    let y = vector(len, [(0, h), (1, h + 1)].into_iter().chain((0..k).map(|i| (v(i), h))));
    let mut cols = induced_columns(&dst, &x);
    cols.push(y);
    cols.push(t);
    iso(mtilde_plus(n)?.dsum(&triv(n)?)?, dst, &cols, "M~+ + Z ~ Z[G/<σ>] + Z[G/<τ>]")
}

/// `M̃₋ ⊕ Z[G/⟨τ⟩] ≅ Z[G] ⊕ Z`.
///
/// Target basis `u_i = σ^i`, `v_j = σ^jτ`, `t`; columns
/// `σx, .., σ^{n-1}x, x, y, z, σz, .., σ^{n-1}z` with `x = u_0 - v_0`,
/// `y = Σu + t`, `z = Σ_{1..h} u_i + Σ_{h+1..n-1} v_j + t`.
pub fn iso_mtilde_minus_with_cosets(n: u32) -> Result<IsoWitness> {
    require_odd(n)?;
    let h = half(n) as usize;
    let k = n as usize;
    let dst = regular(n)?.dsum(&triv(n)?)?;
    let len = 2 * k + 1;
    let (u, v, t) = (|i: usize| i, |j: usize| k + j, 2 * k);
    let x = vector(len, [(u(0), 1), (v(0), -1)]);
    let y = vector(len, (0..k).map(|i| (u(i), 1)).chain([(t, 1)]));
    let z = vector(
        len,
        (1..=h).map(|i| (u(i), 1)).chain((h + 1..k).map(|j| (v(j), 1))).chain([(t, 1)]),
    );
    let mut cols = induced_columns(&dst, &x);
    cols.push(y);
    cols.extend(sigma_orbit(&dst, &z));
    iso(mtilde_minus(n)?.dsum(&perm_mod_tau(n)?)?, dst, &cols, "M~- + Z[G/<τ>] ~ Z[G] + Z")
}

struct MtildeSumElements {
    dst: DnLattice,
    x0: Vec<Integer>,
    y0: Vec<Integer>,
    z0: Vec<Integer>,
    y1: Vec<Integer>,
}

fn mtilde_sum_elements(n: u32) -> Result<MtildeSumElements> {
    let h = half(n);
    let hs = h as usize;
    let k = n as usize;
    let dst = regular(n)?.dsum(&perm_mod_sigma(n)?)?;
    let len = 2 * k + 2;
    let (u, v, t0, t1) = (|i: usize| i, |j: usize| k + j, 2 * k, 2 * k + 1);
    let upper_u = || (hs + 1..k).map(|i| (u(i), 1));
    let x0 = vector(len, upper_u().chain((1..=hs).map(|j| (v(j), 1))).chain([(t0, 1), (t1, 1)]));
    let y0 = vector(len, (0..k).map(|j| (v(j), h)).chain([(t0, 1), (t1, 2 * h)]));
    let z0 = vector(
        len,
        [(u(0), 1)]
            .into_iter()
            .chain(upper_u())
            .chain((0..=hs).map(|j| (v(j), -1)))
            .chain([(t0, 1), (t1, -1)]),
    );
    let y1 = vector(
        len,
        (0..k)
            .map(|i| (u(i), 1))
            .chain((0..k).map(|j| (v(j), -h)))
            .chain([(t0, 1), (t1, -2 * h)]),
    );
    Ok(MtildeSumElements { dst, x0, y0, z0, y1 })
}

/// `M̃₊ ⊕ M̃₋ ≅ Z[G] ⊕ Z[G/⟨σ⟩]` from the elements `x_0, y_0, z_0, y_1`;
/// target basis `u_i, v_j, t_0, t_1`.
pub fn iso_mtilde_sum(n: u32) -> Result<IsoWitness> {
    require_odd(n)?;
    let e = mtilde_sum_elements(n)?;
    let mut cols = induced_columns(&e.dst, &e.x0);
    cols.push(e.y0.clone());
    cols.extend(induced_columns(&e.dst, &e.z0));
    cols.push(e.y1.clone());
    iso(mtilde_plus(n)?.dsum(&mtilde_minus(n)?)?, e.dst, &cols, "M~+ + M~- ~ Z[G] + Z[G/<σ>]")
}

/// The same elements with each `σ`-orbit listed from `σ^{(n-1)/2}` on.
pub fn mtilde_sum_centered_matrix(n: u32) -> Result<IntMatrix> {
    require_odd(n)?;
    let e = mtilde_sum_elements(n)?;
    let h = half(n) as usize;
    let mut cols = Vec::new();
    for (gen, extra) in [(&e.x0, &e.y0), (&e.z0, &e.y1)] {
        let mut orbit = sigma_orbit(&e.dst, gen);
        orbit.rotate_left(h);
        cols.extend(orbit);
        cols.push(extra.clone());
    }
    Ok(IntMatrix::from_columns(e.dst.rank, &cols))
}

/// Matrices used to move `R^ab` into block form, together with the
/// expected intermediate forms.
#[derive(Clone, Debug)]
pub struct RelationModuleBasisChange {
    pub n: u32,
    /// Reorders `ā, b̄_0.., c̄_0..` to `b̄_1..b̄_{n-1}, b̄_0, c̄_1..c̄_{n-1}, c̄_0, ā`.
    pub reorder: IntMatrix,
    pub p1: IntMatrix,
    pub p2: IntMatrix,
    pub p3: IntMatrix,
    pub p1_inv: IntMatrix,
    pub p2_inv: IntMatrix,
}

impl RelationModuleBasisChange {
    pub fn new(n: u32) -> Result<RelationModuleBasisChange> {
        require_odd(n)?;
        let k = n as usize;
        let h = half(n) as usize;
        let r = 2 * k + 1;
        let mut reorder = IntMatrix::zeros(r, r);
        for j in 0..k {
            reorder[(j, 1 + (j + 1) % k)] = Integer::ONE;
            reorder[(k + j, 1 + k + (j + 1) % k)] = Integer::ONE;
        }
        reorder[(2 * k, 0)] = Integer::ONE;
        let a = cyclic_shift(k);
        let id = IntMatrix::identity(k);
        let one = IntMatrix::identity(1);
        let lower = id.sub(&a.pow(h))?;
        let block2 = |tl: &IntMatrix, bl: &IntMatrix, tr: &IntMatrix, br: &IntMatrix| {
            let mut m = IntMatrix::zeros(r, r);
            m.set_block(0, 0, tl);
            m.set_block(k, 0, bl);
            m.set_block(0, k, tr);
            m.set_block(k, k, br);
            m[(2 * k, 2 * k)] = Integer::ONE;
            m
        };
        let zero = IntMatrix::zeros(k, k);
        let p1 = block2(&id, &lower, &zero, &id);
        let p1_inv = block2(&id, &lower.neg(), &zero, &id);
        let p2 = IntMatrix::block_diag(&[&a.pow(h), &id, &one]);
        let p2_inv = IntMatrix::block_diag(&[&a.pow(k - h), &id, &one]);
        let p3 = block2(&zero, &id, &id, &zero);
        Ok(RelationModuleBasisChange {
            n,
            reorder,
            p1,
            p2,
            p3,
            p1_inv,
            p2_inv,
        })
    }

    /// `P₃P₂P₁Π`.
    pub fn total(&self) -> IntMatrix {
        self.p3.mm(&self.p2).mm(&self.p1).mm(&self.reorder)
    }

    /// `C` written out entrywise: `1` at `(i, n-2-i)`, `-1` at `(i, n-1-i)`
    /// for `i < n-1`, and `-1, 1` at the two ends of the last row.
    pub fn c_explicit(&self) -> IntMatrix {
        let k = self.n as usize;
        let mut c = IntMatrix::zeros(k, k);
        for i in 0..k - 1 {
            c[(i, k - 2 - i)] += &Integer::ONE;
            c[(i, k - 1 - i)] -= &Integer::ONE;
        }
        c[(k - 1, 0)] -= &Integer::ONE;
        c[(k - 1, k - 1)] += &Integer::ONE;
        c
    }

    /// First mismatch between the conjugated matrices and the expected block
    /// forms at each stage, or `None`.
    pub fn check_forms(&self) -> Result<Option<String>> {
        let n = self.n;
        let k = n as usize;
        let r = relation_module(n)?;
        let a = cyclic_shift(k);
        let b = m_plus(n)?.tau;
        let ab = a.mm(&b);
        let one = IntMatrix::identity(1);
        let c = self.c_explicit();
        if c != b.sub(&ab)? {
            return Ok(Some("C differs from B - AB".into()));
        }
        let tau_form = |tl: &IntMatrix, bl: &IntMatrix, corner_top: bool| {
            let mut m = IntMatrix::zeros(2 * k + 1, 2 * k + 1);
            m.set_block(0, 0, tl);
            m.set_block(k, 0, bl);
            m.set_block(k, k, &b);
            let rows = if corner_top { 0..k } else { k..2 * k };
            for i in rows {
                m[(i, 2 * k)] = Integer::ONE;
            }
            m[(2 * k, 2 * k)] = Integer::from(-1);
            m
        };
        let sigma_form = IntMatrix::block_diag(&[&a, &a, &one]);
        let zero = IntMatrix::zeros(k, k);
        let stages: [(&str, IntMatrix, IntMatrix, IntMatrix); 4] = [
            ("reordered", self.reorder.clone(), self.reorder.transpose(), tau_form(&ab, &c, true)),
            ("after P1", self.p1.clone(), self.p1_inv.clone(), tau_form(&ab, &zero, true)),
            ("after P2", self.p2.clone(), self.p2_inv.clone(), tau_form(&b, &zero, true)),
            ("after P3", self.p3.clone(), self.p3.clone(), tau_form(&b, &zero, false)),
        ];
        let (mut s, mut t) = (r.sigma.clone(), r.tau.clone());
        for (name, p, p_inv, expected_tau) in stages {
            if !p.mm(&p_inv).is_identity() {
                return Ok(Some(format!("{name}: inverse is wrong")));
            }
            s = p.mm(&s).mm(&p_inv);
            t = p.mm(&t).mm(&p_inv);
            if s != sigma_form {
                return Ok(Some(format!("{name}: σ is not block-diag(A, A, 1)")));
            }
            if t != expected_tau {
                return Ok(Some(format!("{name}: τ differs from the expected block form")));
            }
        }
        let target = m_plus(n)?.dsum(&mtilde_plus(n)?)?;
        if s != target.sigma || t != target.tau {
            return Ok(Some("final form is not M+ + M~+".into()));
        }
        Ok(None)
    }
}

/// `R^ab ≅ M₊ ⊕ M̃₊` by `P₃P₂P₁Π`.
pub fn iso_relation_module(n: u32) -> Result<IsoWitness> {
    let bc = RelationModuleBasisChange::new(n)?;
    let src = relation_module(n)?;
    let dst = m_plus(n)?.dsum(&mtilde_plus(n)?)?;
    IsoWitness::new(LatticeMap::new(src, dst, bc.total())?.with_label("R^ab ~ M+ + M~+"))
}

/// `R^ab ⊕ Z ≅ Z[G/⟨σ⟩] ⊕ Z[G/⟨τ⟩] ⊕ Z[G/⟨τ⟩]`, composing
/// [`iso_relation_module`] with [`iso_mtilde_plus_with_trivial`] and
/// `M₊ ≅ Z[G/⟨τ⟩]`, `σ^{k+1}u ↦ σ^{k+1}⟨τ⟩`.
pub fn iso_relation_module_permutation(n: u32) -> Result<IsoWitness> {
    let k = n as usize;
    let r = iso_relation_module(n)?;
    let t = iso_mtilde_plus_with_trivial(n)?;
    let z = triv(n)?;
    let step1 = r.map.dsum(&LatticeMap::identity(&z))?;
    let m_to_cosets = LatticeMap::new(m_plus(n)?, perm_mod_tau(n)?, cyclic_shift(k))?;
    let step2 = m_to_cosets.dsum(&t.map)?;
    // Z[G/<τ>] + Z[G/<σ>] + Z[G/<τ>]  ->  Z[G/<σ>] + Z[G/<τ>] + Z[G/<τ>]
    let total = 2 * k + 2;
    let mut swap = IntMatrix::zeros(total, total);
    for i in 0..2 {
        swap[(i, k + i)] = Integer::ONE;
    }
    for i in 0..k {
        swap[(2 + i, i)] = Integer::ONE;
        swap[(2 + k + i, k + 2 + i)] = Integer::ONE;
    }
    let dst = perm_mod_sigma(n)?.dsum(&perm_mod_tau(n)?)?.dsum(&perm_mod_tau(n)?)?;
    let step3 = LatticeMap::new(step2.dst.clone(), dst, swap)?;
    let composite = step3.after(&step2.after(&step1)?)?;
    IsoWitness::new(composite.with_label("R^ab + Z ~ Z[G/<σ>] + Z[G/<τ>]^2"))
}

/// `u_i = x_{h+i} - x_{h+1+i}` in an induced lattice whose basis vector at
/// position `i` is `x_{i+1} = σ^{i+1}u`.
fn difference_columns(n: u32, len: usize) -> Vec<Vec<Integer>> {
    let h = half(n);
    let pos = |j: i64| modn(j - 1, n);
    (1..i64::from(n))
        .map(|i| vector(len, [(pos(h + i), 1), (pos(h + 1 + i), -1)]))
        .collect()
}

fn ses(
    sub: DnLattice,
    mid: DnLattice,
    quo: DnLattice,
    inj_cols: &[Vec<Integer>],
    surj: IntMatrix,
) -> Result<ShortExactSequence> {
    let inj = IntMatrix::from_columns(mid.rank, inj_cols);
    ShortExactSequence::new(LatticeMap::new(sub, mid.clone(), inj)?, LatticeMap::new(mid, quo, surj)?)
}

/// `0 → N₋ → M₊ → Z → 0` and `0 → N₊ → M₋ → Z₋ → 0`, kernels spanned by
/// `σ^i(x_{(n-1)/2} - x_{(n+1)/2})`, quotient maps summing coordinates.
pub fn ses_induced_quotients(n: u32) -> Result<(ShortExactSequence, ShortExactSequence)> {
    require_odd(n)?;
    let k = n as usize;
    let ones = IntMatrix::from_vec(1, k, vec![Integer::ONE; k])?;
    let plus = ses(n_minus(n)?, m_plus(n)?, triv(n)?, &difference_columns(n, k), ones.clone())?;
    let minus = ses(n_plus(n)?, m_minus(n)?, triv_minus(n)?, &difference_columns(n, k), ones)?;
    Ok((plus, minus))
}

/// `0 → N₋ → M̃₊ → Z[G/⟨σ⟩] → 0` and `0 → N₊ → M̃₋ → Z[G/⟨σ⟩] → 0`.
///
/// The quotient basis is `w̄_0, w̄_1` with `w_0 = -h t + w`, `w_1 = (h+1) t - w`
/// (`t = x_h`), and for `M̃₋` `w_0 = h t - w`, `w_1 = (h+1) t - w`.
pub fn ses_mtilde_quotients(n: u32) -> Result<(ShortExactSequence, ShortExactSequence)> {
    require_odd(n)?;
    let h = half(n);
    let k = n as usize;
    let surj = |xi: [i64; 2], w: [i64; 2]| {
        let mut p = IntMatrix::zeros(2, k + 1);
        for row in 0..2 {
            for i in 0..k {
                p[(row, i)] = Integer::from(xi[row]);
            }
            p[(row, k)] = Integer::from(w[row]);
        }
        p
    };
    let plus = ses(
        n_minus(n)?,
        mtilde_plus(n)?,
        perm_mod_sigma(n)?,
        &difference_columns(n, k + 1),
        surj([1, 1], [h + 1, h]),
    )?;
    let minus = ses(
        n_plus(n)?,
        mtilde_minus(n)?,
        perm_mod_sigma(n)?,
        &difference_columns(n, k + 1),
        surj([-1, 1], [-(h + 1), h]),
    )?;
    Ok((plus, minus))
}

/// `u_i` and `v_i` of the kernel of `Z[G] → Z[G/⟨σ⟩]` in the group basis.
fn mod_sigma_kernel_elements(n: u32) -> (Vec<Vec<Integer>>, Vec<Vec<Integer>>) {
    let h = half(n);
    let k = n as usize;
    let len = 2 * k;
    let rot = |j: i64| modn(j, n);
    let flip = |j: i64| k + modn(j, n);
    let u = (0..i64::from(n))
        .map(|i| vector(len, [(rot(h + i), 1), (rot(h + 1 + i), -1)]))
        .collect();
    let v = (0..i64::from(n))
        .map(|i| vector(len, [(flip(h + 1 + i), 1), (flip(h + i), -1)]))
        .collect();
    (u, v)
}

fn add(a: &[Integer], b: &[Integer], sign: i64) -> Vec<Integer> {
    let s = Integer::from(sign);
    a.iter().zip(b).map(|(x, y)| x + &(&s * y)).collect()
}

/// `0 → N₊ ⊕ N₋ → Z[G] → Z[G/⟨σ⟩] → 0` with `σ^i ↦ t_0`, `σ^iτ ↦ t_1`;
/// the kernel basis is `x_i = u_i + v_i`, `y_i = u_{i-1} - v_{i+1}`, `1 <= i < n`.
pub fn ses_group_ring_mod_sigma(n: u32) -> Result<ShortExactSequence> {
    require_odd(n)?;
    let k = n as usize;
    let (u, v) = mod_sigma_kernel_elements(n);
    let mut cols: Vec<Vec<Integer>> = (1..k).map(|i| add(&u[i], &v[i], 1)).collect();
    cols.extend((1..k).map(|i| add(&u[i - 1], &v[(i + 1) % k], -1)));
    let mut surj = IntMatrix::zeros(2, 2 * k);
    for i in 0..k {
        surj[(0, i)] = Integer::ONE;
        surj[(1, k + i)] = Integer::ONE;
    }
    ses(n_plus(n)?.dsum(&n_minus(n)?)?, regular(n)?, perm_mod_sigma(n)?, &cols, surj)
}

/// Transpose of the coefficient matrix of `x_1.., y_1..` with respect to
/// `u_1..u_{n-1}, v_1..v_{n-1}`, using `u_0 = -Σu_i`, `v_0 = -Σv_i`.
pub fn mod_sigma_kernel_matrix(n: u32) -> Result<IntMatrix> {
    require_odd(n)?;
    let k = n as usize;
    let m = k - 1;
    // coordinates of u_j / v_j (j mod n) in the reduced basis
    let coord = |j: usize, second: bool| -> Vec<(usize, i64)> {
        let off = if second { m } else { 0 };
        if j % k == 0 {
            (0..m).map(|i| (off + i, -1)).collect()
        } else {
            vec![(off + j % k - 1, 1)]
        }
    };
    let mut rows = Vec::new();
    for i in 1..k {
        rows.push(vector(2 * m, coord(i, false).into_iter().chain(coord(i, true))));
    }
    for i in 1..k {
        let neg = coord(i + 1, true).into_iter().map(|(p, c)| (p, -c));
        rows.push(vector(2 * m, coord(i - 1, false).into_iter().chain(neg)));
    }
    Ok(IntMatrix::from_columns(2 * m, &rows).transpose())
}

fn group_ring_coords(x: &GroupRingVector) -> Vec<Integer> {
    x.to_vec()
}

/// Coordinates of an augmentation-zero element in the basis `g - 1` of `I_G`.
fn aug_coords(x: &GroupRingVector) -> Result<Vec<Integer>> {
    if !x.augmentation().is_zero() {
        return Err(Error::Internal(format!("{x} is not in the augmentation ideal")));
    }
    Ok(x.to_vec().into_iter().skip(1).collect())
}

fn el(rot: i64, flip: u8, n: u32) -> GroupRingVector {
    GroupRingVector::element(GroupElement::new(rot, flip, n), n)
}

/// `I_G ≅ M₋ ⊕ N₋` together with `0 → M₊ → Z[G] → M₋ → 0` and
/// `0 → M̃₊ → Z[G] → N₋ → 0`.
///
/// `M₋` goes to `Σ Z σ^i(1 - τ)`. `N₋` goes to the complement generated by
/// `(1 - σ)a`, `a = Σ_{0..h} σ^k - Σ_{1..h} σ^kτ`, with basis vector `i`
/// sent to `σ^{i+h}(1 - σ)a`.
pub fn augmentation_ideal_witnesses(n: u32) -> Result<(IsoWitness, ShortExactSequence, ShortExactSequence)> {
    require_odd(n)?;
    let h = half(n);
    let k = n as usize;
    let one = GroupRingVector::one(n);
    let tau = el(0, 1, n);
    let one_minus_tau = &one - &tau;
    let one_plus_tau = &one + &tau;
    let mut a = GroupRingVector::zero(n);
    for j in 0..=h {
        a = &a + &el(j, 0, n);
    }
    for j in 1..=h {
        a = &a - &el(j, 1, n);
    }
    let b = &(&one - &el(1, 0, n)) * &a;

    let mut cols = Vec::new();
    for j in 1..=i64::from(n) {
        cols.push(aug_coords(&(&el(j, 0, n) * &one_minus_tau))?);
    }
    for i in 1..i64::from(n) {
        cols.push(aug_coords(&(&el(i + h, 0, n) * &b))?);
    }
    let w = iso(m_minus(n)?.dsum(&n_minus(n)?)?, aug_ideal(n)?, &cols, "I_G ~ M- + N-")?;

    let plus_cols: Vec<Vec<Integer>> = (1..=i64::from(n))
        .map(|j| group_ring_coords(&(&el(j, 0, n) * &one_plus_tau)))
        .collect();
    // σ^i ↦ σ^i u', σ^iτ ↦ -σ^i u'; basis vector σ^{j}u' sits at j - 1
    let mut to_m = IntMatrix::zeros(k, 2 * k);
    for i in 0..k {
        let p = modn(i as i64 - 1, n);
        to_m[(p, i)] = Integer::ONE;
        to_m[(p, k + i)] = Integer::from(-1);
    }
    let s1 = ses(m_plus(n)?, regular(n)?, m_minus(n)?, &plus_cols, to_m)?;

    let mut tilde_cols = plus_cols;
    tilde_cols.push(group_ring_coords(&GroupRingVector::sum_of(
        (0..n).map(|j| GroupElement::new(i64::from(j), 1, n)),
        n,
    )));
    // same map into N₋ = M₋ / f(σ)M₋, where σ^0 u' = -Σ_{i>=1} σ^i u'
    let mut to_n = IntMatrix::zeros(k - 1, 2 * k);
    for i in 0..k {
        for (col, sign) in [(i, 1), (k + i, -1)] {
            if i == 0 {
                for r in 0..k - 1 {
                    to_n[(r, col)] = Integer::from(-sign);
                }
            } else {
                to_n[(i - 1, col)] = Integer::from(sign);
            }
        }
    }
    let s2 = ses(mtilde_plus(n)?, regular(n)?, n_minus(n)?, &tilde_cols, to_n)?;
    Ok((w, s1, s2))
}

/// `0 → M₊ → R^ab → M̃₊ → 0` read off the Fox coordinates: the kernel of
/// `r ↦ ε(∂r/∂s1)` is spanned by the `c̄_i`, and the image of that map has
/// basis `σ^{k+1}X`, `Σσ^i` with `X = σ^h(1 + στ)`.
pub fn ses_relation_module_split(n: u32) -> Result<ShortExactSequence> {
    require_odd(n)?;
    let h = half(n);
    let k = n as usize;
    let r = relation_module(n)?;
    let inj_cols: Vec<Vec<Integer>> = (0..k).map(|j| vector(2 * k + 1, [(1 + k + (j + 1) % k, 1)])).collect();

    let x = &el(h, 0, n) + &el(h + 1, 1, n);
    let mut basis: Vec<Vec<Integer>> = (1..=i64::from(n)).map(|j| (&el(j, 0, n) * &x).to_vec()).collect();
    basis.push(GroupRingVector::sum_of((0..n).map(|j| GroupElement::new(i64::from(j), 0, n)), n).to_vec());
    let basis = IntMatrix::from_columns(2 * k, &basis);
    let d1: Vec<Vec<Integer>> = schreier_generators(n)
        .all()
        .iter()
        .map(|w| fox_derivative(w, 1, n).to_vec())
        .collect();
    let surj = solve_integer_many(&basis, &IntMatrix::from_columns(2 * k, &d1))?
        .ok_or_else(|| Error::Internal("first Fox coordinate leaves the expected image".into()))?;
    ses(m_plus(n)?, r, mtilde_plus(n)?, &inj_cols, surj)
}

/// `0 → R^ab → Z[G]² → I_G → 0` from Fox derivatives.
pub fn ses_fox(n: u32) -> Result<ShortExactSequence> {
    ShortExactSequence::new(fox_embedding(n)?, nu_map(n)?)
}

/// Ranks and cohomology profiles of `R^ab ⊕ Z[G]^{(2n-1)}` and `I_G^{⊗2} ⊕ Z[G]^{(2)}`.
#[derive(Clone, Debug)]
pub struct SchanuelReport {
    pub n: u32,
    pub left_rank: usize,
    pub right_rank: usize,
    pub left: CohomologyProfile,
    pub right: CohomologyProfile,
}

impl SchanuelReport {
    pub fn ranks_agree(&self) -> bool {
        let n = self.n as usize;
        self.left_rank == self.right_rank && self.left_rank == (2 * n + 1) + 2 * n * (2 * n - 1)
    }

    pub fn profiles_agree(&self) -> bool {
        self.left == self.right
    }

    pub fn consistent(&self) -> bool {
        self.ranks_agree() && self.profiles_agree()
    }
}

/// Consistency check only: equal ranks and equal profiles, no isomorphism.
pub fn schanuel_consistency(n: u32) -> Result<SchanuelReport> {
    let z = regular(n)?;
    let left = relation_module(n)?.dsum(&z.power(2 * n as usize - 1))?;
    let ig = aug_ideal(n)?;
    let right = ig.tensor(&ig)?.dsum(&z.power(2))?;
    Ok(SchanuelReport {
        n,
        left_rank: left.rank,
        right_rank: right.rank,
        left: profile(&left)?,
        right: profile(&right)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::{has_section, verify_iso, verify_ses};

    const ODD: [u32; 4] = [3, 5, 7, 9];

    #[test]
    fn isomorphisms_verify() {
        for n in ODD {
            for w in [
                iso_mtilde_plus_with_trivial(n).unwrap(),
                iso_mtilde_minus_with_cosets(n).unwrap(),
                iso_mtilde_sum(n).unwrap(),
                iso_relation_module(n).unwrap(),
                iso_relation_module_permutation(n).unwrap(),
                augmentation_ideal_witnesses(n).unwrap().0,
            ] {
                assert!(verify_iso(&w), "{} at n={n}", w.map.label);
                assert!(w.det().is_unit());
            }
        }
    }

    #[test]
    fn determinant_signs() {
        for n in ODD {
            assert_eq!(iso_mtilde_plus_with_trivial(n).unwrap().det(), 1);
            assert_eq!(iso_mtilde_sum(n).unwrap().det(), -1);
        }
    }

    #[test]
    fn mtilde_minus_matrix_for_three() {
        let w = iso_mtilde_minus_with_cosets(3).unwrap();
        let expected = IntMatrix::from_rows(&[
            [0, 0, 1, 1, 0, 0, 1],
            [1, 0, 0, 1, 1, 0, 0],
            [0, 1, 0, 1, 0, 1, 0],
            [0, 0, -1, 0, 0, 1, 0],
            [-1, 0, 0, 0, 0, 0, 1],
            [0, -1, 0, 0, 1, 0, 0],
            [0, 0, 0, 1, 1, 1, 1],
        ]);
        assert_eq!(w.map.mat, expected);
    }

    #[test]
    fn mtilde_sum_centered_for_three() {
        let expected = IntMatrix::from_rows(&[
            [1, 0, 0, 0, 1, 0, 1, 1],
            [0, 1, 0, 0, 1, 1, 0, 1],
            [0, 0, 1, 0, 0, 1, 1, 1],
            [0, 1, 0, 1, 0, -1, -1, -1],
            [0, 0, 1, 1, -1, 0, -1, -1],
            [1, 0, 0, 1, -1, -1, 0, -1],
            [1, 1, 1, 1, 1, 1, 1, 1],
            [1, 1, 1, 2, -1, -1, -1, -2],
        ]);
        assert_eq!(mtilde_sum_centered_matrix(3).unwrap(), expected);
    }

    #[test]
    fn relation_module_block_forms() {
        for n in ODD {
            let bc = RelationModuleBasisChange::new(n).unwrap();
            assert_eq!(bc.check_forms().unwrap(), None, "n={n}");
        }
    }

    #[test]
    fn exact_sequences_verify_and_do_not_split() {
        for n in [3, 5, 7] {
            let (a, b) = ses_induced_quotients(n).unwrap();
            let (c, d) = ses_mtilde_quotients(n).unwrap();
            let e = ses_group_ring_mod_sigma(n).unwrap();
            let (_, f, g) = augmentation_ideal_witnesses(n).unwrap();
            for s in [&a, &b, &c, &d, &e, &f, &g] {
                assert!(verify_ses(s), "{} at n={n}", s.label());
                assert!(!has_section(s).unwrap(), "{} splits at n={n}", s.label());
            }
        }
    }

    #[test]
    fn relation_module_sequence_splits() {
        for n in [3, 5, 7] {
            let s = ses_relation_module_split(n).unwrap();
            assert!(verify_ses(&s));
            assert!(has_section(&s).unwrap());
            assert!(verify_ses(&ses_fox(n).unwrap()));
        }
    }

    #[test]
    fn mod_sigma_kernel_matrix_for_three() {
        let expected = IntMatrix::from_rows(&[[1, 0, 1, 0], [0, 1, 0, 1], [-1, -1, 0, -1], [1, 0, 1, 1]]);
        let p = mod_sigma_kernel_matrix(3).unwrap();
        assert_eq!(p, expected);
        assert!(crate::linalg::det(&p).unwrap().is_unit());
    }

    #[test]
    fn explicit_matrices_for_five() {
        let q = IntMatrix::from_rows(&[
            [1, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 1],
            [1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1],
            [0, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 1],
            [0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 0, 1],
            [0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 1],
            [0, 1, 1, 0, 0, 2, 0, -1, -1, -1, 0, -2],
            [0, 0, 1, 1, 0, 2, 0, 0, -1, -1, -1, -2],
            [0, 0, 0, 1, 1, 2, -1, 0, 0, -1, -1, -2],
            [1, 0, 0, 0, 1, 2, -1, -1, 0, 0, -1, -2],
            [1, 1, 0, 0, 0, 2, -1, -1, -1, 0, 0, -2],
            [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
            [1, 1, 1, 1, 1, 4, -1, -1, -1, -1, -1, -4],
        ]);
        assert_eq!(mtilde_sum_centered_matrix(5).unwrap(), q);
        let p = IntMatrix::from_rows(&[
            [1, 0, 0, 0, 1, 0, 0, 0],
            [0, 1, 0, 0, 0, 1, 0, 0],
            [0, 0, 1, 0, 0, 0, 1, 0],
            [0, 0, 0, 1, 0, 0, 0, 1],
            [-1, -1, -1, -1, 0, -1, 0, 0],
            [1, 0, 0, 0, 0, 0, -1, 0],
            [0, 1, 0, 0, 0, 0, 0, -1],
            [0, 0, 1, 0, 1, 1, 1, 1],
        ]);
        assert_eq!(mod_sigma_kernel_matrix(5).unwrap(), p);
        let c = IntMatrix::from_rows(&[
            [0, 0, 0, 1, -1],
            [0, 0, 1, -1, 0],
            [0, 1, -1, 0, 0],
            [1, -1, 0, 0, 0],
            [-1, 0, 0, 0, 1],
        ]);
        assert_eq!(RelationModuleBasisChange::new(5).unwrap().c_explicit(), c);
    }

    #[test]
    fn mod_sigma_kernel_matrix_is_unimodular() {
        for n in [3, 5, 7, 9, 11, 13] {
            assert_eq!(crate::linalg::det(&mod_sigma_kernel_matrix(n).unwrap()).unwrap(), 1, "n={n}");
        }
    }

    #[test]
    fn schanuel_small() {
        let r = schanuel_consistency(3).unwrap();
        assert!(r.consistent());
    }
}
