//! Permutations of `[k]` for `k <= 4`, stored as image words.
//!
//! Colours are 0-based internally; the textual image word is 1-based
//! (`"231"` maps 1 to 2, 2 to 3 and 3 to 1). Composition is right to left:
//! `a.compose(b)` is the map `x -> a(b(x))`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub const MAX_K: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("k = {0} is not supported (1..=4)")]
    BadK(usize),
    #[error("`{0}` is not a permutation word")]
    BadWord(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    k: u8,
    images: [u8; MAX_K],
}

impl Perm {
    pub fn identity(k: usize) -> Self {
        assert!((1..=MAX_K).contains(&k), "k out of range");
        let mut images = [0; MAX_K];
        for (i, slot) in images.iter_mut().enumerate() {
            *slot = i as u8;
        }
        Perm { k: k as u8, images }
    }

    /// From 0-based images.
    pub fn from_images(images: &[u8]) -> Result<Self, PermError> {
        let k = images.len();
        if !(1..=MAX_K).contains(&k) {
            return Err(PermError::BadK(k));
        }
        let mut seen = [false; MAX_K];
        let mut out = [0; MAX_K];
        for (i, &x) in images.iter().enumerate() {
            let x = x as usize;
            if x >= k || seen[x] {
                return Err(PermError::BadWord(format!("{images:?}")));
            }
            seen[x] = true;
            out[i] = x as u8;
        }
        for (i, slot) in out.iter_mut().enumerate().skip(k) {
            *slot = i as u8;
        }
        Ok(Perm { k: k as u8, images: out })
    }

    /// The transposition of the 0-based colours `a` and `b`.
    pub fn transposition(k: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(k);
        p.images.swap(a, b);
        p
    }

    pub fn k(&self) -> usize {
        self.k as usize
    }

    pub fn apply(&self, x: u8) -> u8 {
        self.images[x as usize]
    }

    pub fn images(&self) -> &[u8] {
        &self.images[..self.k()]
    }

    pub fn is_identity(&self) -> bool {
        self.images().iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = *self;
        for i in 0..self.k() {
            inv.images[self.images[i] as usize] = i as u8;
        }
        inv
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Self {
        debug_assert_eq!(self.k, other.k);
        let mut out = *self;
        for i in 0..self.k() {
            out.images[i] = self.images[other.images[i] as usize];
        }
        out
    }

    pub fn conjugate_by(&self, s: &Perm) -> Self {
        s.compose(self).compose(&s.inverse())
    }

    /// All of `S_k` in lexicographic order of image words.
    pub fn all(k: usize) -> Vec<Perm> {
        fn rec(k: usize, prefix: &mut Vec<u8>, used: &mut [bool; MAX_K], out: &mut Vec<Perm>) {
            if prefix.len() == k {
                out.push(Perm::from_images(prefix).expect("bijection"));
                return;
            }
            for x in 0..k {
                if !used[x] {
                    used[x] = true;
                    prefix.push(x as u8);
                    rec(k, prefix, used, out);
                    prefix.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(k, &mut Vec::new(), &mut [false; MAX_K], &mut out);
        out
    }

    /// 1-based image word, e.g. `"231"`.
    pub fn word(&self) -> String {
        self.images()
            .iter()
            .map(|&x| char::from(b'1' + x))
            .collect()
    }
}

impl FromStr for Perm {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let images: Option<Vec<u8>> = s
            .chars()
            .map(|c| c.to_digit(10).and_then(|d| (d as u8).checked_sub(1)))
            .collect();
        let images = images.ok_or_else(|| PermError::BadWord(s.to_string()))?;
        Perm::from_images(&images).map_err(|_| PermError::BadWord(s.to_string()))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({})", self.word())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn word_round_trip() {
        let p: Perm = "231".parse().unwrap();
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(1), 2);
        assert_eq!(p.apply(2), 0);
        assert_eq!(p.to_string(), "231");
        assert!("221".parse::<Perm>().is_err());
        assert!("12345".parse::<Perm>().is_err());
    }

    #[test]
    fn composition_is_right_to_left() {
        let a: Perm = "213".parse().unwrap();
        let b: Perm = "132".parse().unwrap();
        // a(b(1)) = a(1) = 2, a(b(2)) = a(3) = 3, a(b(3)) = a(2) = 1
        assert_eq!(a.compose(&b).to_string(), "231");
    }

    #[test]
    fn sym_group_sizes() {
        assert_eq!(Perm::all(1).len(), 1);
        assert_eq!(Perm::all(3).len(), 6);
        assert_eq!(Perm::all(4).len(), 24);
        assert!(Perm::all(3)[0].is_identity());
    }

    fn perm3() -> impl Strategy<Value = Perm> {
        (0usize..6).prop_map(|i| Perm::all(3)[i])
    }

    proptest! {
        #[test]
        fn inverse_cancels(p in perm3(), q in perm3()) {
            prop_assert!(p.compose(&p.inverse()).is_identity());
            prop_assert_eq!(p.compose(&q).inverse(), q.inverse().compose(&p.inverse()));
        }
    }
}
