//! Freely reduced words in a free group.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A freely reduced word. Letter `k > 0` is the generator `s_k`, `-k` its inverse.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeWord {
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn identity() -> FreeWord {
        FreeWord::default()
    }

    /// The word `s_k`, `k >= 1`.
    pub fn generator(k: u32) -> FreeWord {
        assert!(k >= 1, "generators are numbered from 1");
        FreeWord {
            letters: vec![k as i32],
        }
    }

    pub fn from_letters(letters: impl IntoIterator<Item = i32>) -> FreeWord {
        let mut w = FreeWord::default();
        for l in letters {
            w.push(l);
        }
        w
    }

    fn push(&mut self, l: i32) {
        assert!(l != 0, "letter 0 is not a generator");
        if self.letters.last() == Some(&-l) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn pow(&self, e: i64) -> FreeWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut w = FreeWord::identity();
        for _ in 0..e.unsigned_abs() {
            w = w.mul(&base);
        }
        w
    }

    /// `self · other · self^{-1}`.
    pub fn conjugate(&self, other: &FreeWord) -> FreeWord {
        self.mul(other).mul(&self.inverse())
    }

    /// Image in a group given the images of the generators and their inverses.
    pub fn eval<T: Copy>(&self, one: T, image: impl Fn(i32) -> T, mul: impl Fn(T, T) -> T) -> T {
        self.letters.iter().fold(one, |acc, &l| mul(acc, image(l)))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *l > 0 {
                write!(f, "s{l}")?;
            } else {
                write!(f, "s{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

impl FromStr for FreeWord {
    type Err = Error;

    /// Parses `"s1 s2 s1 s2^-1"`; `"1"` or the empty string is the identity.
    fn from_str(s: &str) -> Result<FreeWord> {
        let mut w = FreeWord::identity();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let bad = || Error::Parse(format!("bad letter {tok:?} in word {s:?}"));
            let body = tok.strip_prefix('s').ok_or_else(bad)?;
            let (num, inv) = match body.strip_suffix("^-1") {
                Some(b) => (b, true),
                None => (body, false),
            };
            let k: i32 = num.parse().map_err(|_| bad())?;
            if k <= 0 {
                return Err(bad());
            }
            w.push(if inv { -k } else { k });
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction() {
        let s1 = FreeWord::generator(1);
        let s2 = FreeWord::generator(2);
        assert!(s1.mul(&s1.inverse()).is_empty());
        let w = s1.mul(&s2).mul(&s2.inverse()).mul(&s1);
        assert_eq!(w, s1.pow(2));
        assert_eq!(s1.pow(-3).len(), 3);
        assert_eq!(s2.conjugate(&s1).to_string(), "s2 s1 s2^-1");
    }

    #[test]
    fn parse_round_trip() {
        let w: FreeWord = "s1 s2 s1 s2^-1".parse().unwrap();
        assert_eq!(w.to_string(), "s1 s2 s1 s2^-1");
        assert_eq!("s1 s1^-1".parse::<FreeWord>().unwrap(), FreeWord::identity());
        assert_eq!(FreeWord::identity().to_string(), "1");
        assert!("t1".parse::<FreeWord>().is_err());
        assert!("s0".parse::<FreeWord>().is_err());
    }
}
