use std::fmt;

use crate::error::{Error, Result};
use crate::num::{factorize, prime_of_power};

/// A finitely generated abelian group `Z^k ⊕ Z/d₁ ⊕ … ⊕ Z/d_t` in primary
/// form: every `dᵢ` is a prime power, factors sorted by prime and then by
/// decreasing exponent.
///
/// Coordinates always list the free factors first, then the torsion
/// factors in stored order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AbGroup {
    free_rank: usize,
    torsion: Vec<u64>,
}

impl AbGroup {
    /// Accepts any torsion orders `≥ 2` (invariant factors, primary parts or
    /// a mixture) and converts them to primary form.
    pub fn new(free_rank: usize, torsion: &[u64]) -> Result<Self> {
        let mut primary = Vec::new();
        for &d in torsion {
            if d < 2 {
                return Err(Error::Validation {
                    entry: format!("{d}"),
                    message: "torsion orders must be at least 2".into(),
                });
            }
            for (p, e) in factorize(d) {
                primary.push(p.pow(e));
            }
        }
        primary.sort_by(|&a, &b| {
            let (pa, pb) = (prime_of_power(a).unwrap(), prime_of_power(b).unwrap());
            pa.cmp(&pb).then(b.cmp(&a))
        });
        Ok(AbGroup { free_rank, torsion: primary })
    }

    /// Reads a factor list where `0` stands for a free factor `Z`.
    pub fn from_spec(spec: &[u64]) -> Result<Self> {
        let free = spec.iter().filter(|&&d| d == 0).count();
        let tors: Vec<u64> = spec.iter().copied().filter(|&d| d != 1 && d != 0).collect();
        if spec.contains(&1) {
            return Err(Error::Validation { entry: "1".into(), message: "factor Z/1 is not allowed".into() });
        }
        AbGroup::new(free, &tors)
    }

    pub fn trivial() -> Self {
        AbGroup { free_rank: 0, torsion: Vec::new() }
    }

    pub fn cyclic(n: u64) -> Self {
        if n == 1 {
            return AbGroup::trivial();
        }
        AbGroup::new(0, &[n]).expect("n >= 2")
    }

    pub fn free(rank: usize) -> Self {
        AbGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn elementary(p: u64, rank: usize) -> Self {
        AbGroup { free_rank: 0, torsion: vec![p; rank] }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    /// Total number of cyclic factors.
    pub fn num_factors(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Order of factor `i` in coordinate order; `None` for a free factor.
    pub fn factor_modulus(&self, i: usize) -> Option<u64> {
        if i < self.free_rank {
            None
        } else {
            Some(self.torsion[i - self.free_rank])
        }
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn order(&self) -> Option<u64> {
        self.is_finite().then(|| self.torsion_order())
    }

    pub fn torsion_order(&self) -> u64 {
        self.torsion.iter().product()
    }

    pub fn torsion_subgroup(&self) -> AbGroup {
        AbGroup { free_rank: 0, torsion: self.torsion.clone() }
    }

    /// Primes dividing the torsion order, increasing.
    pub fn primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self.torsion.iter().map(|&d| prime_of_power(d).unwrap()).collect();
        ps.dedup();
        ps
    }

    /// `Some(p)` when this is a nontrivial finite `p`-group.
    pub fn p_group_prime(&self) -> Option<u64> {
        match (self.free_rank, self.primes().as_slice()) {
            (0, [p]) => Some(*p),
            _ => None,
        }
    }

    pub fn exponent(&self) -> u64 {
        let mut e = 1u64;
        for &d in &self.torsion {
            e = e / crate::num::gcd(e, d) * d;
        }
        e
    }

    /// Coordinate ranges of the `p`-primary blocks: `(p, first, end)` with
    /// coordinate indices (free factors excluded).
    pub(crate) fn primary_blocks(&self) -> Vec<(u64, usize, usize)> {
        let mut out: Vec<(u64, usize, usize)> = Vec::new();
        for (k, &d) in self.torsion.iter().enumerate() {
            let p = prime_of_power(d).unwrap();
            let i = self.free_rank + k;
            match out.last_mut() {
                Some(last) if last.0 == p => last.2 = i + 1,
                _ => out.push((p, i, i + 1)),
            }
        }
        out
    }

    /// Short ASCII name such as `Z4xZ2` or `ZxZ4`; `Z1` for the trivial group.
    pub fn short_name(&self) -> String {
        if self.is_trivial() {
            return "Z1".into();
        }
        let mut parts = Vec::new();
        for _ in 0..self.free_rank {
            parts.push("Z".to_string());
        }
        for d in &self.torsion {
            parts.push(format!("Z{d}"));
        }
        parts.join("x")
    }
}

impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbGroup({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primary_form() {
        let a = AbGroup::new(0, &[12, 2]).unwrap();
        assert_eq!(a.torsion(), &[4, 2, 3]);
        assert_eq!(a.order(), Some(24));
        assert_eq!(a.primes(), vec![2, 3]);
        assert_eq!(a.exponent(), 12);
        assert_eq!(a.primary_blocks(), vec![(2, 0, 2), (3, 2, 3)]);
        assert_eq!(a.to_string(), "Z/4 + Z/2 + Z/3");
    }

    #[test]
    fn free_factors() {
        let a = AbGroup::from_spec(&[0, 4, 0]).unwrap();
        assert_eq!(a.free_rank(), 2);
        assert!(!a.is_finite());
        assert_eq!(a.order(), None);
        assert_eq!(a.factor_modulus(0), None);
        assert_eq!(a.factor_modulus(2), Some(4));
        assert_eq!(a.short_name(), "ZxZxZ4");
        assert_eq!(a.primary_blocks(), vec![(2, 2, 3)]);
    }

    #[test]
    fn rejects_unit_factors() {
        assert!(AbGroup::new(0, &[1]).is_err());
        assert!(AbGroup::from_spec(&[1]).is_err());
    }

    #[test]
    fn p_groups() {
        assert_eq!(AbGroup::new(0, &[8, 2]).unwrap().p_group_prime(), Some(2));
        assert_eq!(AbGroup::new(0, &[6]).unwrap().p_group_prime(), None);
        assert_eq!(AbGroup::trivial().p_group_prime(), None);
        assert_eq!(AbGroup::new(1, &[4]).unwrap().p_group_prime(), None);
    }
}
