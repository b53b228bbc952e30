//! The dihedral group `D_n` and its subgroups.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The element `σ^rot τ^flip` of `D_n`, with `0 <= rot < n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    pub rot: u32,
    pub flip: u8,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { rot: 0, flip: 0 };

    pub fn new(rot: i64, flip: u8, n: u32) -> GroupElement {
        GroupElement {
            rot: rot.rem_euclid(i64::from(n)) as u32,
            flip: flip % 2,
        }
    }

    pub fn sigma() -> GroupElement {
        GroupElement { rot: 1, flip: 0 }
    }

    pub fn tau() -> GroupElement {
        GroupElement { rot: 0, flip: 1 }
    }

    pub fn is_identity(&self) -> bool {
        self.rot == 0 && self.flip == 0
    }

    /// `(σ^i τ^s)(σ^j τ^t) = σ^{i + (-1)^s j} τ^{s+t}`.
    pub fn mul(self, other: GroupElement, n: u32) -> GroupElement {
        let j = if self.flip == 0 {
            i64::from(other.rot)
        } else {
            -i64::from(other.rot)
        };
        GroupElement::new(i64::from(self.rot) + j, self.flip + other.flip, n)
    }

    pub fn inverse(self, n: u32) -> GroupElement {
        if self.flip == 1 {
            self
        } else {
            GroupElement::new(-i64::from(self.rot), 0, n)
        }
    }

    pub fn pow(self, e: u32, n: u32) -> GroupElement {
        let mut r = GroupElement::IDENTITY;
        for _ in 0..e {
            r = r.mul(self, n);
        }
        r
    }

    pub fn order(self, n: u32) -> u32 {
        if self.flip == 1 {
            return 2;
        }
        n / gcd(self.rot, n)
    }

    /// Position in the basis order `σ^0..σ^{n-1}, τ, στ, .., σ^{n-1}τ`.
    pub fn index(self, n: u32) -> usize {
        self.rot as usize + n as usize * self.flip as usize
    }

    pub fn from_index(i: usize, n: u32) -> GroupElement {
        let n = n as usize;
        GroupElement {
            rot: (i % n) as u32,
            flip: (i / n) as u8,
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rot, self.flip) {
            (0, 0) => write!(f, "1"),
            (0, 1) => write!(f, "τ"),
            (1, 0) => write!(f, "σ"),
            (1, 1) => write!(f, "στ"),
            (r, 0) => write!(f, "σ^{r}"),
            (r, _) => write!(f, "σ^{r}τ"),
        }
    }
}

/// All `2n` elements in basis order.
pub fn elements(n: u32) -> Vec<GroupElement> {
    (0..2 * n as usize).map(|i| GroupElement::from_index(i, n)).collect()
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SubgroupKind {
    Rotation,
    Dihedral,
}

/// `⟨σ^d⟩` or `⟨σ^d, σ^offset τ⟩` inside `D_n`, with `d | n` and `offset < d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subgroup {
    pub n: u32,
    pub d: u32,
    pub kind: SubgroupKind,
    pub offset: u32,
}

impl Subgroup {
    pub fn rotation(n: u32, d: u32) -> Result<Subgroup> {
        Subgroup::check(n, d, 0)?;
        Ok(Subgroup {
            n,
            d,
            kind: SubgroupKind::Rotation,
            offset: 0,
        })
    }

    pub fn dihedral(n: u32, d: u32, offset: u32) -> Result<Subgroup> {
        Subgroup::check(n, d, offset)?;
        Ok(Subgroup {
            n,
            d,
            kind: SubgroupKind::Dihedral,
            offset,
        })
    }

    fn check(n: u32, d: u32, offset: u32) -> Result<()> {
        if n < 1 || d == 0 || n % d != 0 || offset >= d {
            return Err(Error::NotASubgroup {
                n,
                spec: format!("d={d} offset={offset}"),
            });
        }
        Ok(())
    }

    pub fn trivial(n: u32) -> Subgroup {
        Subgroup::rotation(n, n).unwrap()
    }

    pub fn whole(n: u32) -> Subgroup {
        Subgroup::dihedral(n, 1, 0).unwrap()
    }

    pub fn order(&self) -> usize {
        let r = (self.n / self.d) as usize;
        match self.kind {
            SubgroupKind::Rotation => r,
            SubgroupKind::Dihedral => 2 * r,
        }
    }

    /// Elements sorted in basis order.
    pub fn elements(&self) -> Vec<GroupElement> {
        let n = self.n;
        let mut out: Vec<GroupElement> = (0..n / self.d)
            .map(|k| GroupElement::new(i64::from(k * self.d), 0, n))
            .collect();
        if self.kind == SubgroupKind::Dihedral {
            out.extend((0..n / self.d).map(|k| GroupElement::new(i64::from(k * self.d + self.offset), 1, n)));
        }
        out.sort();
        out
    }

    /// A generating set: `σ^d` and, for dihedral subgroups, `σ^offset τ`.
    pub fn generators(&self) -> Vec<GroupElement> {
        let mut g = vec![GroupElement::new(i64::from(self.d), 0, self.n)];
        if self.kind == SubgroupKind::Dihedral {
            g.push(GroupElement::new(i64::from(self.offset), 1, self.n));
        }
        g
    }

    pub fn contains(&self, g: GroupElement) -> bool {
        match g.flip {
            0 => g.rot % self.d == 0,
            _ => self.kind == SubgroupKind::Dihedral && g.rot % self.d == self.offset,
        }
    }

    /// `"rot:d"` or `"dih:d:i"`.
    pub fn label(&self) -> String {
        match self.kind {
            SubgroupKind::Rotation => format!("rot:{}", self.d),
            SubgroupKind::Dihedral => format!("dih:{}:{}", self.d, self.offset),
        }
    }

    pub fn parse(n: u32, spec: &str) -> Result<Subgroup> {
        let bad = || Error::NotASubgroup {
            n,
            spec: spec.to_string(),
        };
        let parts: Vec<&str> = spec.trim().split(':').collect();
        let num = |s: &str| s.parse::<u32>().map_err(|_| bad());
        let s = match parts.as_slice() {
            ["rot", d] => Subgroup::rotation(n, num(d)?),
            ["dih", d, i] => Subgroup::dihedral(n, num(d)?, num(i)?),
            _ => return Err(bad()),
        };
        s.map_err(|_| bad())
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Every subgroup of `D_n` once, sorted by (order, kind, offset).
pub fn subgroups(n: u32) -> Vec<Subgroup> {
    let mut out = Vec::new();
    for d in divisors(n) {
        out.push(Subgroup::rotation(n, d).unwrap());
        for i in 0..d {
            out.push(Subgroup::dihedral(n, d, i).unwrap());
        }
    }
    out.sort_by_key(|s| (s.order(), s.kind, s.offset, s.d));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn multiplication_rules() {
        let n = 5;
        let s = GroupElement::sigma();
        let t = GroupElement::tau();
        assert_eq!(t.mul(s, n), GroupElement::new(4, 1, n));
        let st = s.mul(t, n);
        assert!(st.mul(st, n).is_identity());
        assert_eq!(s.pow(5, n), GroupElement::IDENTITY);
        for a in elements(n) {
            assert!(a.mul(a.inverse(n), n).is_identity());
        }
    }

    /// Brute force: close every subset of at most two generators.
    fn brute_force_subgroups(n: u32) -> BTreeSet<Vec<GroupElement>> {
        let els = elements(n);
        let mut found = BTreeSet::new();
        for a in &els {
            for b in &els {
                let mut set: BTreeSet<GroupElement> = [GroupElement::IDENTITY, *a, *b].into();
                loop {
                    let cur: Vec<_> = set.iter().copied().collect();
                    let before = set.len();
                    for x in &cur {
                        for y in &cur {
                            set.insert(x.mul(*y, n));
                        }
                    }
                    if set.len() == before {
                        break;
                    }
                }
                found.insert(set.into_iter().collect());
            }
        }
        found
    }

    #[test]
    fn enumeration_matches_brute_force() {
        // every subgroup of a dihedral group is generated by at most two elements
        for n in 2..=8 {
            let ours: BTreeSet<Vec<GroupElement>> = subgroups(n).iter().map(|s| s.elements()).collect();
            assert_eq!(ours.len(), subgroups(n).len(), "duplicates at n={n}");
            assert_eq!(ours, brute_force_subgroups(n), "n={n}");
        }
        assert_eq!(subgroups(2).len(), 5);
        assert_eq!(subgroups(3).len(), 6);
        assert_eq!(subgroups(6).len(), 16);
    }

    #[test]
    fn labels_round_trip() {
        for s in subgroups(12) {
            assert_eq!(Subgroup::parse(12, &s.label()).unwrap(), s);
        }
        assert!(Subgroup::parse(6, "rot:4").is_err());
        assert!(Subgroup::parse(6, "dih:3:3").is_err());
        assert!(Subgroup::parse(6, "klein").is_err());
    }
}
