//! Reidemeister-Schreier rewriting over a finite group given by its table.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::relation::word::FreeWord;

/// A finite group by multiplication table, with the images of the free generators.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    /// `table[a][b]` is the index of `a·b`.
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    /// Image of `s_{k+1}` at position `k`.
    pub gen_images: Vec<usize>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.table[a][b] == self.identity)
            .expect("every element of a group table has an inverse")
    }

    fn letter_image(&self, l: i32) -> usize {
        let g = self.gen_images[l.unsigned_abs() as usize - 1];
        if l > 0 {
            g
        } else {
            self.inverse(g)
        }
    }

    pub fn eval(&self, w: &FreeWord) -> usize {
        w.eval(self.identity, |l| self.letter_image(l), |a, b| self.mul(a, b))
    }
}

/// A Schreier transversal together with the free basis of the relation
/// subgroup it determines: the nontrivial words `u s Φ(u s)^{-1}`.
#[derive(Clone, Debug)]
pub struct SchreierSystem {
    group: FiniteGroup,
    transversal: Vec<FreeWord>,
    generators: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl SchreierSystem {
    /// `transversal[g]` must evaluate to `g` and the set must be prefix closed.
    pub fn new(group: FiniteGroup, transversal: Vec<FreeWord>) -> Result<SchreierSystem> {
        if transversal.len() != group.order() {
            return Err(Error::Dimension(format!(
                "{} transversal words for a group of order {}",
                transversal.len(),
                group.order()
            )));
        }
        for (g, w) in transversal.iter().enumerate() {
            if group.eval(w) != g {
                return Err(Error::InvalidParameter(format!("transversal word {w} does not evaluate to element {g}")));
            }
            for k in 0..w.len() {
                let prefix = FreeWord::from_letters(w.letters()[..k].iter().copied());
                if transversal[group.eval(&prefix)] != prefix {
                    return Err(Error::InvalidParameter(format!("transversal is not prefix closed at {w}")));
                }
            }
        }
        let mut sys = SchreierSystem {
            group,
            transversal,
            generators: Vec::new(),
            index: HashMap::new(),
        };
        for u in 0..sys.group.order() {
            for k in 0..sys.group.gen_images.len() {
                if !sys.raw_generator(u, k).is_empty() {
                    sys.index.insert((u, k), sys.generators.len());
                    sys.generators.push((u, k));
                }
            }
        }
        Ok(sys)
    }

    fn raw_generator(&self, u: usize, k: usize) -> FreeWord {
        let us = self.group.mul(u, self.group.gen_images[k]);
        self.transversal[u]
            .mul(&FreeWord::generator(k as u32 + 1))
            .mul(&self.transversal[us].inverse())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// The transversal word representing group element `g`.
    pub fn transversal_word(&self, g: usize) -> &FreeWord {
        &self.transversal[g]
    }

    /// Rank of the relation subgroup.
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_word(&self, i: usize) -> FreeWord {
        let (u, k) = self.generators[i];
        self.raw_generator(u, k)
    }

    /// The word `w` of the relation subgroup as a product of free generators,
    /// each entry `(generator, ±1)`.
    pub fn rewrite(&self, w: &FreeWord) -> Result<Vec<(usize, i32)>> {
        let g = &self.group;
        let mut coset = g.identity;
        let mut out = Vec::new();
        for &l in w.letters() {
            let k = l.unsigned_abs() as usize - 1;
            if l > 0 {
                if let Some(&i) = self.index.get(&(coset, k)) {
                    out.push((i, 1));
                }
                coset = g.mul(coset, g.gen_images[k]);
            } else {
                coset = g.mul(coset, g.inverse(g.gen_images[k]));
                if let Some(&i) = self.index.get(&(coset, k)) {
                    out.push((i, -1));
                }
            }
        }
        if coset != g.identity {
            return Err(Error::InvalidParameter(format!("{w} is not in the relation subgroup")));
        }
        Ok(out)
    }

    /// Exponent-sum vector of [`SchreierSystem::rewrite`].
    pub fn rewrite_abelian(&self, w: &FreeWord) -> Result<Vec<i64>> {
        let mut v = vec![0i64; self.rank()];
        for (i, e) in self.rewrite(w)? {
            v[i] += i64::from(e);
        }
        Ok(v)
    }

    /// Multiply out a rewritten word, to check the rewriting.
    pub fn expand(&self, parts: &[(usize, i32)]) -> FreeWord {
        parts.iter().fold(FreeWord::identity(), |acc, &(i, e)| {
            let g = self.generator_word(i);
            acc.mul(&if e > 0 { g } else { g.inverse() })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Z/3 = <s1> with the rank-2 free group mapping s2 to the identity.
    fn cyclic3() -> SchreierSystem {
        let table = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
        let group = FiniteGroup {
            table,
            identity: 0,
            gen_images: vec![1, 0],
        };
        let s1 = FreeWord::generator(1);
        SchreierSystem::new(group, vec![FreeWord::identity(), s1.clone(), s1.pow(2)]).unwrap()
    }

    #[test]
    fn rank_is_one_plus_d_minus_one_times_order() {
        let sys = cyclic3();
        assert_eq!(sys.rank(), 1 + 3);
    }

    #[test]
    fn rewriting_multiplies_back() {
        let sys = cyclic3();
        let w: FreeWord = "s2 s1 s2 s1^-1 s1 s1 s1 s2^-1".parse().unwrap();
        let parts = sys.rewrite(&w).unwrap();
        assert_eq!(sys.expand(&parts), w);
        assert!(sys.rewrite(&FreeWord::generator(1)).is_err());
    }

    #[test]
    fn rejects_non_prefix_closed() {
        let sys = cyclic3();
        let s1 = FreeWord::generator(1);
        let bad = vec![FreeWord::identity(), s1.pow(-2), s1.pow(2)];
        assert!(SchreierSystem::new(sys.group().clone(), bad).is_err());
    }
}
