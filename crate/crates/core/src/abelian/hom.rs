use std::fmt;

use super::group::AbGroup;
use crate::error::{Error, Result};
use crate::num::gcd;

/// A homomorphism of finitely generated abelian groups as an integer matrix.
///
/// Rows index target factors, columns index source factors (free factors
/// first on both sides). Column `j` is the image of the `j`-th generator.
/// Entries into a torsion row `Z/dᵢ` are stored reduced mod `dᵢ`, so
/// equality of homomorphisms is entrywise equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AbHom {
    source: AbGroup,
    target: AbGroup,
    matrix: Vec<Vec<i64>>,
}

/// The residues an entry `(i, j)` may take: multiples of `step` modulo
/// `modulus` (`None` means any integer), or forced zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum EntryRange {
    Integer,
    Zero,
    Multiples { step: u64, modulus: u64 },
}

pub(crate) fn entry_range(target_mod: Option<u64>, source_mod: Option<u64>) -> EntryRange {
    match (target_mod, source_mod) {
        (None, None) => EntryRange::Integer,
        (None, Some(_)) => EntryRange::Zero,
        (Some(di), None) => EntryRange::Multiples { step: 1, modulus: di },
        // dᵢ | m·dⱼ  ⇔  m ≡ 0 mod dᵢ / gcd(dᵢ, dⱼ)
        (Some(di), Some(dj)) => EntryRange::Multiples { step: di / gcd(di, dj), modulus: di },
    }
}

impl AbHom {
    pub fn new(source: AbGroup, target: AbGroup, matrix: Vec<Vec<i64>>) -> Result<Self> {
        if matrix.len() != target.num_factors() || matrix.iter().any(|r| r.len() != source.num_factors()) {
            return Err(Error::ShapeMismatch(format!(
                "expected a {}x{} matrix",
                target.num_factors(),
                source.num_factors()
            )));
        }
        let mut matrix = matrix;
        for (i, row) in matrix.iter_mut().enumerate() {
            for (j, m) in row.iter_mut().enumerate() {
                match entry_range(target.factor_modulus(i), source.factor_modulus(j)) {
                    EntryRange::Integer => {}
                    EntryRange::Zero => {
                        if *m != 0 {
                            return Err(Error::InvalidHom(format!(
                                "entry ({i},{j}) maps a torsion factor into Z and must be 0"
                            )));
                        }
                    }
                    EntryRange::Multiples { step, modulus } => {
                        *m = m.rem_euclid(modulus as i64);
                        if !(*m as u64).is_multiple_of(step) {
                            return Err(Error::InvalidHom(format!(
                                "entry ({i},{j}) = {m} must be a multiple of {step} modulo {modulus}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(AbHom { source, target, matrix })
    }

    pub(crate) fn from_reduced_unchecked(source: AbGroup, target: AbGroup, matrix: Vec<Vec<i64>>) -> Self {
        AbHom { source, target, matrix }
    }

    pub fn identity(a: &AbGroup) -> Self {
        let n = a.num_factors();
        let matrix = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        AbHom { source: a.clone(), target: a.clone(), matrix }
    }

    /// Multiplication by an integer on every factor.
    pub fn scalar(a: &AbGroup, k: i64) -> Self {
        let n = a.num_factors();
        let matrix = (0..n).map(|i| (0..n).map(|j| if i == j { k } else { 0 }).collect()).collect();
        AbHom::new(a.clone(), a.clone(), matrix).expect("scalars are always valid")
    }

    pub fn source(&self) -> &AbGroup {
        &self.source
    }

    pub fn target(&self) -> &AbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    pub fn is_identity(&self) -> bool {
        self.is_endomorphism() && *self == AbHom::identity(&self.source)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &AbHom) -> Result<AbHom> {
        if first.target != self.source {
            return Err(Error::ShapeMismatch("composition of incompatible homomorphisms".into()));
        }
        let rows = self.target.num_factors();
        let cols = first.source.num_factors();
        let inner = self.source.num_factors();
        let mut matrix = vec![vec![0i64; cols]; rows];
        for (i, row) in matrix.iter_mut().enumerate() {
            let modulus = self.target.factor_modulus(i).map(i128::from);
            for (k, out) in row.iter_mut().enumerate() {
                let mut acc: i128 = 0;
                for j in 0..inner {
                    acc += self.matrix[i][j] as i128 * first.matrix[j][k] as i128;
                    if let Some(m) = modulus {
                        acc = acc.rem_euclid(m);
                    }
                }
                *out = i64::try_from(acc).map_err(|_| Error::ShapeMismatch("integer overflow in composition".into()))?;
            }
        }
        Ok(AbHom { source: first.source.clone(), target: self.target.clone(), matrix })
    }

    /// Image of an element given in coordinates.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.source.num_factors());
        (0..self.target.num_factors())
            .map(|i| {
                let acc: i128 = (0..x.len()).map(|j| self.matrix[i][j] as i128 * x[j] as i128).sum();
                match self.target.factor_modulus(i) {
                    Some(m) => acc.rem_euclid(m as i128) as i64,
                    None => acc as i64,
                }
            })
            .collect()
    }

    /// The square block on the free factors.
    pub fn free_block(&self) -> Vec<Vec<i64>> {
        let k = self.source.free_rank().min(self.target.free_rank());
        self.matrix[..k].iter().map(|r| r[..k].to_vec()).collect()
    }

    /// Restriction to the torsion subgroups (an endomorphism of the torsion
    /// part when `self` is an endomorphism).
    pub fn torsion_block(&self) -> AbHom {
        let (fs, ft) = (self.source.free_rank(), self.target.free_rank());
        let matrix = self.matrix[ft..].iter().map(|r| r[fs..].to_vec()).collect();
        AbHom {
            source: self.source.torsion_subgroup(),
            target: self.target.torsion_subgroup(),
            matrix,
        }
    }

    /// An endomorphism is invertible iff its free block has determinant ±1 and, for every prime
    /// `p`, its `p`-primary block is invertible modulo `p`.
    pub fn is_automorphism(&self) -> Result<bool> {
        if !self.is_endomorphism() {
            return Err(Error::ShapeMismatch("automorphism check needs an endomorphism".into()));
        }
        let det = determinant(&self.free_block());
        if det != 1 && det != -1 {
            return Ok(false);
        }
        for (p, lo, hi) in self.source.primary_blocks() {
            let block: Vec<Vec<i64>> = self.matrix[lo..hi].iter().map(|r| r[lo..hi].to_vec()).collect();
            if rank_mod_p(&block, p) != hi - lo {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for AbHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.matrix.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = row.iter().map(i64::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for AbHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbHom({} -> {}: {self})", self.source, self.target)
    }
}

/// Exact integer determinant by fraction-free elimination.
pub fn determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Rank over `F_p` of an integer matrix reduced mod `p`.
pub fn rank_mod_p(m: &[Vec<i64>], p: u64) -> usize {
    let p = p as i64;
    let mut a: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p)).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = crate::num::inverse_mod(a[rank][c], p).expect("p is prime");
        for j in 0..cols {
            a[rank][j] = a[rank][j] * inv % p;
        }
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c];
                for j in 0..cols {
                    a[r][j] = (a[r][j] - f * a[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> AbGroup {
        AbGroup::cyclic(4)
    }

    #[test]
    fn automorphisms_of_z4() {
        assert!(AbHom::scalar(&z4(), 3).is_automorphism().unwrap());
        assert!(AbHom::identity(&z4()).is_automorphism().unwrap());
        assert!(!AbHom::scalar(&z4(), 2).is_automorphism().unwrap());
    }

    #[test]
    fn validity_conditions() {
        let a = AbGroup::new(0, &[4, 2]).unwrap();
        // Z/2 -> Z/4 must land in {0, 2}
        assert!(AbHom::new(a.clone(), a.clone(), vec![vec![1, 1], vec![0, 1]]).is_err());
        let f = AbHom::new(a.clone(), a.clone(), vec![vec![1, 2], vec![1, 1]]).unwrap();
        assert!(f.is_automorphism().unwrap());
        // torsion into free is zero
        let b = AbGroup::from_spec(&[0, 4]).unwrap();
        assert!(AbHom::new(b.clone(), b.clone(), vec![vec![1, 1], vec![0, 1]]).is_err());
        assert!(AbHom::new(b.clone(), b.clone(), vec![vec![1, 0], vec![5, 1]]).unwrap().entry(1, 0) == 1);
        assert!(AbHom::new(a.clone(), b, vec![vec![0, 0]]).is_err());
    }

    #[test]
    fn composition_reduces() {
        let f = AbHom::scalar(&z4(), 3);
        let ff = f.compose(&f).unwrap();
        assert!(ff.is_identity());
        let g = AbHom::scalar(&AbGroup::cyclic(8), 3);
        assert!(f.compose(&g).is_err());
        assert!(ff.is_automorphism().unwrap());
    }

    #[test]
    fn free_blocks_need_unit_determinant() {
        let z2 = AbGroup::free(2);
        let m = AbHom::new(z2.clone(), z2.clone(), vec![vec![1, 2], vec![0, 1]]).unwrap();
        assert!(m.is_automorphism().unwrap());
        let m = AbHom::new(z2.clone(), z2.clone(), vec![vec![2, 1], vec![1, 1]]).unwrap();
        assert!(m.is_automorphism().unwrap());
        let m = AbHom::new(z2.clone(), z2, vec![vec![2, 0], vec![0, 1]]).unwrap();
        assert!(!m.is_automorphism().unwrap());
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&[vec![2, 1], vec![1, 1]]), 1);
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(determinant(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]), -3);
        assert_eq!(determinant(&[]), 1);
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_mod_p(&[vec![1, 1], vec![1, 1]], 2), 1);
        assert_eq!(rank_mod_p(&[vec![1, 2], vec![2, 1]], 3), 1);
        assert_eq!(rank_mod_p(&[vec![1, 2], vec![2, 1]], 5), 2);
    }
}
