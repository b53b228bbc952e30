//! Group ring elements, abelianized Fox derivatives and the maps they induce.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::group::{elements, GroupElement};
use crate::int::Integer;
use crate::lattice::{aug_ideal, regular};
use crate::matrix::IntMatrix;
use crate::relation::word::FreeWord;
use crate::relation::{relation_module, schreier_generators};
use crate::error::Result;
use crate::witness::LatticeMap;

/// An element of `Z[D_n]` with finite support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingVector {
    pub n: u32,
    pub coeffs: BTreeMap<GroupElement, Integer>,
}

impl GroupRingVector {
    pub fn zero(n: u32) -> GroupRingVector {
        GroupRingVector {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn element(g: GroupElement, n: u32) -> GroupRingVector {
        let mut v = GroupRingVector::zero(n);
        v.add_term(g, &Integer::ONE);
        v
    }

    pub fn one(n: u32) -> GroupRingVector {
        GroupRingVector::element(GroupElement::IDENTITY, n)
    }

    /// Sum of the given elements.
    pub fn sum_of(gs: impl IntoIterator<Item = GroupElement>, n: u32) -> GroupRingVector {
        let mut v = GroupRingVector::zero(n);
        for g in gs {
            v.add_term(g, &Integer::ONE);
        }
        v
    }

    pub fn add_term(&mut self, g: GroupElement, c: &Integer) {
        let e = self.coeffs.entry(g).or_insert(Integer::ZERO);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&g);
        }
    }

    pub fn coeff(&self, g: GroupElement) -> Integer {
        self.coeffs.get(&g).cloned().unwrap_or(Integer::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient sum.
    pub fn augmentation(&self) -> Integer {
        self.coeffs.values().cloned().sum()
    }

    pub fn left_mul(&self, g: GroupElement) -> GroupRingVector {
        let mut v = GroupRingVector::zero(self.n);
        for (h, c) in &self.coeffs {
            v.add_term(g.mul(*h, self.n), c);
        }
        v
    }

    /// Coordinates in the basis of [`regular`].
    pub fn to_vec(&self) -> Vec<Integer> {
        let mut out = vec![Integer::ZERO; 2 * self.n as usize];
        for (g, c) in &self.coeffs {
            out[g.index(self.n)] = c.clone();
        }
        out
    }

    pub fn from_vec(v: &[Integer], n: u32) -> GroupRingVector {
        let mut r = GroupRingVector::zero(n);
        for (i, c) in v.iter().enumerate() {
            r.add_term(GroupElement::from_index(i, n), c);
        }
        r
    }
}

impl Add for &GroupRingVector {
    type Output = GroupRingVector;
    fn add(self, rhs: &GroupRingVector) -> GroupRingVector {
        let mut v = self.clone();
        for (g, c) in &rhs.coeffs {
            v.add_term(*g, c);
        }
        v
    }
}

impl Neg for &GroupRingVector {
    type Output = GroupRingVector;
    fn neg(self) -> GroupRingVector {
        GroupRingVector {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(g, c)| (*g, -c)).collect(),
        }
    }
}

impl Sub for &GroupRingVector {
    type Output = GroupRingVector;
    fn sub(self, rhs: &GroupRingVector) -> GroupRingVector {
        self + &(-rhs)
    }
}

impl Mul for &GroupRingVector {
    type Output = GroupRingVector;
    fn mul(self, rhs: &GroupRingVector) -> GroupRingVector {
        let mut v = GroupRingVector::zero(self.n);
        for (g, a) in &self.coeffs {
            for (h, b) in &rhs.coeffs {
                v.add_term(g.mul(*h, self.n), &(a * b));
            }
        }
        v
    }
}

impl fmt::Display for GroupRingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match (a.is_one(), g.is_identity()) {
                (true, _) => write!(f, "{g}")?,
                (false, true) => write!(f, "{a}")?,
                (false, false) => write!(f, "{a}{g}")?,
            }
        }
        Ok(())
    }
}

/// `s1 ↦ σ`, `s2 ↦ τ`.
pub fn epsilon(w: &FreeWord, n: u32) -> GroupElement {
    let image = |l: i32| {
        let g = if l.unsigned_abs() == 1 {
            GroupElement::sigma()
        } else {
            GroupElement::tau()
        };
        if l > 0 {
            g
        } else {
            g.inverse(n)
        }
    };
    w.eval(GroupElement::IDENTITY, image, |a, b| a.mul(b, n))
}

/// `ε(∂w/∂s_gen)` in `Z[D_n]` for a word in `s1, s2`.
pub fn fox_derivative(w: &FreeWord, gen: u32, n: u32) -> GroupRingVector {
    let mut out = GroupRingVector::zero(n);
    let mut prefix = GroupElement::IDENTITY;
    for &l in w.letters() {
        let single = FreeWord::from_letters([l]);
        let g = epsilon(&single, n);
        if l.unsigned_abs() == gen {
            if l > 0 {
                out.add_term(prefix, &Integer::ONE);
            } else {
                // d(s^{-1}) = -s^{-1}
                out.add_term(prefix.mul(g, n), &Integer::from(-1));
            }
        }
        prefix = prefix.mul(g, n);
    }
    out
}

/// `R^ab → Z[G] ⊕ Z[G]`, each relation word `r ↦ (ε(∂r/∂s1), ε(∂r/∂s2))`.
pub fn fox_embedding(n: u32) -> Result<LatticeMap> {
    let src = relation_module(n)?;
    let z = regular(n)?;
    let dst = z.dsum(&z)?;
    let cols: Vec<Vec<Integer>> = schreier_generators(n)
        .all()
        .iter()
        .map(|r| {
            let mut c = fox_derivative(r, 1, n).to_vec();
            c.extend(fox_derivative(r, 2, n).to_vec());
            c
        })
        .collect();
    let mat = IntMatrix::from_columns(4 * n as usize, &cols);
    Ok(LatticeMap::new(src, dst, mat)?.with_label("fox embedding"))
}

/// `Z[G] ⊕ Z[G] → I_G`, `(α, β) ↦ α(1 - σ) + β(1 - τ)`, in the basis `g - 1`.
pub fn nu_map(n: u32) -> Result<LatticeMap> {
    let z = regular(n)?;
    let src = z.dsum(&z)?;
    let dst = aug_ideal(n)?;
    let k = 2 * n as usize;
    let mut mat = IntMatrix::zeros(k - 1, 2 * k);
    // g(1 - s) = (g - 1) - (gs - 1)
    let mut put = |col: usize, h: GroupElement, c: i64| {
        if !h.is_identity() {
            mat[(h.index(n) - 1, col)] += &Integer::from(c);
        }
    };
    for (block, s) in [GroupElement::sigma(), GroupElement::tau()].into_iter().enumerate() {
        for g in elements(n) {
            let col = block * k + g.index(n);
            put(col, g, 1);
            put(col, g.mul(s, n), -1);
        }
    }
    Ok(LatticeMap::new(src, dst, mat)?.with_label("nu"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivatives_of_small_words() {
        let n = 5;
        let s1 = FreeWord::generator(1);
        let s2 = FreeWord::generator(2);
        assert_eq!(fox_derivative(&s1, 1, n), GroupRingVector::one(n));
        assert!(fox_derivative(&s1, 2, n).is_zero());
        let norm = GroupRingVector::sum_of((0..n).map(|i| GroupElement::new(i64::from(i), 0, n)), n);
        assert_eq!(fox_derivative(&s1.pow(n as i64), 1, n), norm);
        let one_plus_tau = GroupRingVector::sum_of([GroupElement::IDENTITY, GroupElement::tau()], n);
        assert_eq!(fox_derivative(&s2.pow(2), 2, n), one_plus_tau);
        assert_eq!(fox_derivative(&s1.inverse(), 1, n).to_string(), "-σ^4");
    }

    #[test]
    fn fundamental_formula() {
        // w - 1 = sum_i ∂w/∂s_i (s_i - 1) after ε
        let n = 4;
        let w: FreeWord = "s1 s2 s1^-1 s1^-1 s2 s2 s1".parse().unwrap();
        let one = GroupRingVector::one(n);
        let lhs = &GroupRingVector::element(epsilon(&w, n), n) - &one;
        let d1 = fox_derivative(&w, 1, n);
        let d2 = fox_derivative(&w, 2, n);
        let rhs = &(&d1 * &(&GroupRingVector::element(GroupElement::sigma(), n) - &one))
            + &(&d2 * &(&GroupRingVector::element(GroupElement::tau(), n) - &one));
        assert_eq!(lhs, rhs);
    }
}
