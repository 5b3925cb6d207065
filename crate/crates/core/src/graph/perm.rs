use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `0..n` in one-line notation: `v -> image[v]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for (i, &x) in image.iter().enumerate() {
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "value {x} at index {i} is out of range 0..{n}"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!(
                    "value {x} repeated (second time at index {i})"
                )));
            }
        }
        Ok(Self { image })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            image: (0..n).collect(),
        }
    }

    /// `v -> v + shift (mod n)`
    pub fn rotation(n: usize, shift: usize) -> Self {
        Self {
            image: (0..n).map(|v| (v + shift) % n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (v, &w) in self.image.iter().enumerate() {
            inv[w] = v;
        }
        Permutation { image: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.len() == other.len() && (0..self.len()).all(|v| self.apply(other.apply(v)) == other.apply(self.apply(v)))
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.image
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.image)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        assert!(Permutation::new(vec![]).is_ok());
    }

    #[test]
    fn compose_and_inverse() {
        let p = Permutation::new(vec![1, 2, 0, 3]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        let q = Permutation::new(vec![0, 1, 3, 2]).unwrap();
        // q ∘ p sends 1 -> 2 -> 3
        assert_eq!(q.compose(&p).apply(1), 3);
    }

    #[test]
    fn transpositions_that_share_a_point_do_not_commute() {
        let s = Permutation::new(vec![1, 0, 2, 3]).unwrap();
        let t = Permutation::new(vec![0, 2, 1, 3]).unwrap();
        assert!(!s.commutes_with(&t));
        assert!(s.commutes_with(&Permutation::identity(4)));
    }
}
