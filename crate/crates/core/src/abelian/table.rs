use super::group::AbGroup;
use super::hom::AbHom;
use crate::error::{Error, Result};
use crate::grpcore::{GroupTable, Permutation};

/// A finite abelian group materialized as a [`GroupTable`], with the
/// coordinate system of its cyclic factors.
///
/// Element indices are mixed-radix numbers over the factor coordinates, the
/// last factor varying fastest; index 0 is the zero vector.
#[derive(Debug, Clone)]
pub struct AbelianTable {
    pub group: AbGroup,
    pub table: GroupTable,
    moduli: Vec<u64>,
    strides: Vec<u64>,
}

impl AbelianTable {
    pub fn index_of(&self, coords: &[i64]) -> u32 {
        coords
            .iter()
            .zip(&self.moduli)
            .zip(&self.strides)
            .map(|((&x, &m), &s)| x.rem_euclid(m as i64) as u64 * s)
            .sum::<u64>() as u32
    }

    pub fn coords(&self, index: u32) -> Vec<i64> {
        let i = index as u64;
        self.moduli.iter().zip(&self.strides).map(|(&m, &s)| ((i / s) % m) as i64).collect()
    }

    /// The permutation of element indices induced by an endomorphism.
    pub fn permutation_of(&self, f: &AbHom) -> Result<Permutation> {
        if f.source() != &self.group || f.target() != &self.group {
            return Err(Error::ShapeMismatch("homomorphism does not act on this group".into()));
        }
        let n = self.table.order() as u32;
        let images: Vec<u32> = (0..n).map(|x| self.index_of(&f.apply(&self.coords(x)))).collect();
        Permutation::new(images).map_err(|_| Error::NotAutomorphism)
    }

    /// The element-level map of a homomorphism (not necessarily bijective).
    pub fn map_of(&self, f: &AbHom) -> Vec<u32> {
        (0..self.table.order() as u32).map(|x| self.index_of(&f.apply(&self.coords(x)))).collect()
    }
}

/// `ab_to_table`: the direct sum of the cyclic factors as a table.
pub fn ab_to_table(a: &AbGroup, cap: usize) -> Result<AbelianTable> {
    let Some(order) = a.order() else {
        return Err(Error::NotApplicable(format!("{a} is infinite")));
    };
    if order as u128 > cap as u128 {
        return Err(Error::TooLarge { what: "abelian group", size: order as u128, limit: cap as u128 });
    }
    let moduli: Vec<u64> = a.torsion().to_vec();
    let mut strides = vec![1u64; moduli.len()];
    for k in (0..moduli.len().saturating_sub(1)).rev() {
        strides[k] = strides[k + 1] * moduli[k + 1];
    }
    let n = order as usize;
    let coords: Vec<Vec<u64>> = (0..n as u64)
        .map(|i| moduli.iter().zip(&strides).map(|(&m, &s)| (i / s) % m).collect())
        .collect();
    let mut mul = Vec::with_capacity(n * n);
    for x in &coords {
        for y in &coords {
            let idx: u64 = x
                .iter()
                .zip(y)
                .zip(moduli.iter().zip(&strides))
                .map(|((&u, &v), (&m, &s))| ((u + v) % m) * s)
                .sum();
            mul.push(idx as u32);
        }
    }
    let inv = coords
        .iter()
        .map(|x| {
            x.iter().zip(moduli.iter().zip(&strides)).map(|(&u, (&m, &s))| ((m - u) % m) * s).sum::<u64>() as u32
        })
        .collect();
    let gens = strides.iter().map(|&s| s as u32).collect();
    let labels = coords
        .iter()
        .map(|x| format!("({})", x.iter().map(u64::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    let table = GroupTable::from_parts(n, mul, inv, gens, Some(labels));
    Ok(AbelianTable { group: a.clone(), table, moduli, strides })
}
