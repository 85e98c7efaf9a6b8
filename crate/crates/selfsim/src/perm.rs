//! Permutations of the tree alphabet [0, m).

use std::fmt;

use crate::error::{Error, Result};

/// A bijection of [0, m), stored as the image array.
///
/// Composition is left-to-right: `g.compose(&h)` applies g first, then h,
/// matching the right-action convention on coset representatives.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &i in &images {
            if i >= m || seen[i] {
                return Err(Error::InvalidParameter("not a bijection".into()));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(m: usize) -> Self {
        Permutation((0..m).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Apply `self`, then `then`.
    pub fn compose(&self, then: &Permutation) -> Permutation {
        assert_eq!(self.degree(), then.degree(), "degree mismatch");
        Permutation(self.0.iter().map(|&i| then.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut wrote = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            let mut sep = "";
            loop {
                write!(f, "{sep}{i}")?;
                sep = ",";
                seen[i] = true;
                i = self.0[i];
                if i == start {
                    break;
                }
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_left_to_right() {
        let g = Permutation::new(vec![1, 0, 2]).unwrap();
        let h = Permutation::new(vec![0, 2, 1]).unwrap();
        let gh = g.compose(&h);
        // 0 -g-> 1 -h-> 2
        assert_eq!(gh.apply(0), 2);
        assert!(g.compose(&g.inverse()).is_identity());
    }

    #[test]
    fn cycle_display() {
        let g = Permutation::new(vec![2, 3, 0, 1]).unwrap();
        assert_eq!(g.to_string(), "(0,2)(1,3)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
        let a = Permutation::new(vec![1, 0, 3, 2]).unwrap();
        assert_eq!(a.to_string(), "(0,1)(2,3)");
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3]).is_err());
    }
}
