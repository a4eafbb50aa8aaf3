use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{0, .., degree-1}`, stored by its images.
///
/// Composition follows function composition: `a.compose(&b)` applies `b`
/// first, so `a.compose(&b).apply(x) == a.apply(b.apply(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let x = x as usize;
            if x >= images.len() {
                return Err(Error::InvalidPermutation(format!(
                    "image {x} out of range for degree {}",
                    images.len()
                )));
            }
            if seen[x] {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from disjoint or overlapping cycles; cycles are
    /// applied right to left like any product of permutations.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut acc = Permutation::identity(degree);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            let mut seen = std::collections::HashSet::new();
            for (k, &x) in cycle.iter().enumerate() {
                if x as usize >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} out of range for degree {degree}"
                    )));
                }
                if !seen.insert(x) {
                    return Err(Error::InvalidPermutation(format!("point {x} repeated in a cycle")));
                }
                images[x as usize] = cycle[(k + 1) % cycle.len()];
            }
            acc = Permutation { images }.compose(&acc);
        }
        Ok(acc)
    }

    /// Parses cycle notation such as `(0 1 2)(3 4)`; `()` or an empty string is
    /// the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::InvalidPermutation(format!("expected `(` in `{text}`")));
            };
            let Some(end) = body.find(')') else {
                return Err(Error::InvalidPermutation(format!("unclosed cycle in `{text}`")));
            };
            let points = body[..end]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<u32>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad point `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = body[end + 1..].trim_start();
        }
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn compose(&self, first: &Permutation) -> Permutation {
        assert_eq!(self.degree(), first.degree(), "degree mismatch in composition");
        Permutation { images: first.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y as usize] = x as u32;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3]).is_err());
        assert!(Permutation::new(vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn cycle_round_trip() {
        let p = Permutation::parse_cycles(5, "(0 1 2)(3 4)").unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3]);
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
        assert_eq!(Permutation::parse_cycles(3, "()").unwrap(), Permutation::identity(3));
        assert_eq!(Permutation::parse_cycles(3, "").unwrap(), Permutation::identity(3));
    }

    #[test]
    fn composition_applies_right_first() {
        let a = Permutation::parse_cycles(3, "(0 1)").unwrap();
        let b = Permutation::parse_cycles(3, "(1 2)").unwrap();
        let ab = a.compose(&b);
        for x in 0..3 {
            assert_eq!(ab.apply(x), a.apply(b.apply(x)));
        }
        assert!(ab.compose(&ab.inverse()).is_identity());
    }

    #[test]
    fn overlapping_cycles_multiply() {
        // (0 1)(1 2): apply (1 2) first.
        let p = Permutation::parse_cycles(3, "(0 1)(1 2)").unwrap();
        assert_eq!(p.apply(1), 2);
        assert_eq!(p.apply(2), 0);
    }

    #[test]
    fn bad_cycle_text() {
        assert!(Permutation::parse_cycles(3, "(0 1").is_err());
        assert!(Permutation::parse_cycles(3, "0 1").is_err());
        assert!(Permutation::parse_cycles(3, "(0 3)").is_err());
        assert!(Permutation::parse_cycles(3, "(0 0)").is_err());
    }
}
