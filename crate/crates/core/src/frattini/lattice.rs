use std::collections::HashSet;

use crate::abelian::{ab_to_table, tensor_survivors, AbGroup, AbelianTable};
use crate::error::{Error, Result};
use crate::grpcore::{quotient, GroupTable, Quotient, Subgroup};
use crate::Limits;

fn check_lattice_cap(g: &GroupTable, limits: &Limits) -> Result<()> {
    if g.order() > limits.lattice_cap {
        return Err(Error::TooLarge {
            what: "group for subgroup enumeration",
            size: g.order() as u128,
            limit: limits.lattice_cap as u128,
        });
    }
    Ok(())
}

/// Every subgroup is a join of cyclic subgroups, so closing the cyclic
/// subgroups under joins with one more cyclic subgroup reaches all of them.
/// A proper subgroup is maximal exactly when each such join is `H` or `G`.
fn lattice(g: &GroupTable) -> (Vec<Subgroup>, Vec<Subgroup>) {
    let mut cyclic: Vec<Subgroup> = Vec::new();
    let mut seen_cyclic = HashSet::new();
    for x in g.elements().skip(1) {
        let c = g.closure([x]);
        if seen_cyclic.insert(c.clone()) {
            cyclic.push(c);
        }
    }
    let mut all = vec![g.trivial()];
    let mut seen: HashSet<Subgroup> = all.iter().cloned().collect();
    let mut maximal = Vec::new();
    let mut head = 0;
    while head < all.len() {
        let h = all[head].clone();
        head += 1;
        let mut is_max = !h.is_whole();
        for c in &cyclic {
            if c.is_subgroup_of(&h) {
                continue;
            }
            let j = h.join(g, c).expect("same parent");
            if !j.is_whole() {
                is_max = false;
            }
            if seen.insert(j.clone()) {
                all.push(j);
            }
        }
        if is_max {
            maximal.push(h);
        }
    }
    let key = |s: &Subgroup| (s.order(), s.members().to_vec());
    all.sort_by_key(key);
    maximal.sort_by_key(key);
    (all, maximal)
}

/// All subgroups, ordered by size and then by member list.
pub fn all_subgroups(g: &GroupTable, limits: &Limits) -> Result<Vec<Subgroup>> {
    check_lattice_cap(g, limits)?;
    Ok(lattice(g).0)
}

/// All maximal proper subgroups; empty for the trivial group.
pub fn maximal_subgroups(g: &GroupTable, limits: &Limits) -> Result<Vec<Subgroup>> {
    check_lattice_cap(g, limits)?;
    Ok(lattice(g).1)
}

/// `Φ(G)`, the intersection of the maximal subgroups. The trivial group
/// has no maximal subgroups and is its own Frattini subgroup.
pub fn frattini_subgroup(g: &GroupTable, limits: &Limits) -> Result<Subgroup> {
    let maximal = maximal_subgroups(g, limits)?;
    let mut phi = g.whole();
    for m in &maximal {
        phi = phi.intersection(g, m)?;
    }
    Ok(phi)
}

/// `G/Φ(G)` with its projection.
pub fn frattini_factor(g: &GroupTable, limits: &Limits) -> Result<Quotient> {
    let phi = frattini_subgroup(g, limits)?;
    quotient(g, &phi).map_err(|e| Error::InternalInvariantViolation(format!("Φ(G) is not normal: {e}")))
}

/// The Frattini factor of a finite abelian `p`-group together with its
/// identification with `A ⊗ Z/p`.
#[derive(Debug, Clone)]
pub struct AbelianFrattini {
    pub table: AbelianTable,
    pub factor: Quotient,
    pub prime: u64,
    /// `to_tensor[c]`: coordinates in `A ⊗ Z/p` of the coset `c`.
    pub to_tensor: Vec<Vec<i64>>,
}

impl AbelianFrattini {
    /// Reduction `A → A ⊗ Z/p` computed directly on coordinates.
    pub fn reduce(&self, x: u32) -> Vec<i64> {
        let coords = self.table.coords(x);
        tensor_survivors(&self.table.group, self.prime)
            .into_iter()
            .map(|i| coords[i].rem_euclid(self.prime as i64))
            .collect()
    }
}

/// [`frattini_factor`] for a finite abelian `p`-group, with the
/// identification `A/Φ(A) ≅ A ⊗ Z/p` checked to be a well-defined bijection
/// commuting with the two projections.
pub fn frattini_factor_abelian(a: &AbGroup, limits: &Limits) -> Result<AbelianFrattini> {
    let p = a.p_group_prime().ok_or_else(|| Error::NotApplicable(format!("{a} is not a finite p-group")))?;
    let table = ab_to_table(a, limits.order_cap)?;
    let factor = frattini_factor(&table.table, limits)?;
    let mut out = AbelianFrattini { table, factor, prime: p, to_tensor: Vec::new() };
    let mut to_tensor: Vec<Option<Vec<i64>>> = vec![None; out.factor.table.order()];
    for x in out.table.table.elements() {
        let c = out.factor.projection[x as usize] as usize;
        let r = out.reduce(x);
        match &to_tensor[c] {
            None => to_tensor[c] = Some(r),
            Some(prev) if *prev == r => {}
            Some(_) => {
                return Err(Error::InternalInvariantViolation("Φ(A) is not the kernel of reduction mod p".into()))
            }
        }
    }
    let to_tensor: Vec<Vec<i64>> = to_tensor.into_iter().map(Option::unwrap).collect();
    let distinct: HashSet<&Vec<i64>> = to_tensor.iter().collect();
    let tensor_order = (p as usize).pow(tensor_survivors(a, p).len() as u32);
    if distinct.len() != to_tensor.len() || to_tensor.len() != tensor_order {
        return Err(Error::InternalInvariantViolation("A/Φ(A) and A ⊗ Z/p differ in size".into()));
    }
    out.to_tensor = to_tensor;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grpcore::{group_from_perms, Permutation};

    fn s3() -> GroupTable {
        let gens = [Permutation::parse_cycles(3, "(0 1)").unwrap(), Permutation::parse_cycles(3, "(0 1 2)").unwrap()];
        group_from_perms(3, &gens, 10).unwrap().0
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn maximal_examples() {
        let m = maximal_subgroups(&s3(), &lim()).unwrap();
        assert_eq!(m.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![2, 2, 2, 3]);
        let m = maximal_subgroups(&GroupTable::cyclic(4), &lim()).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].members(), &[0, 2]);
        assert!(maximal_subgroups(&GroupTable::trivial_group(), &lim()).unwrap().is_empty());
        assert_eq!(all_subgroups(&s3(), &lim()).unwrap().len(), 6);
        assert!(matches!(maximal_subgroups(&GroupTable::cyclic(97), &lim()), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn frattini_examples() {
        assert_eq!(frattini_subgroup(&GroupTable::cyclic(4), &lim()).unwrap().members(), &[0, 2]);
        assert!(frattini_subgroup(&s3(), &lim()).unwrap().is_trivial());
        let e = ab_to_table(&AbGroup::elementary(2, 3), 100).unwrap();
        assert!(frattini_subgroup(&e.table, &lim()).unwrap().is_trivial());
        let t = GroupTable::trivial_group();
        assert!(frattini_subgroup(&t, &lim()).unwrap().is_whole());
        assert_eq!(frattini_factor(&GroupTable::cyclic(8), &lim()).unwrap().table.order(), 2);
    }

    #[test]
    fn abelian_identification() {
        let f = frattini_factor_abelian(&AbGroup::cyclic(4), &lim()).unwrap();
        assert_eq!(f.factor.table.order(), 2);
        let f = frattini_factor_abelian(&AbGroup::elementary(2, 2), &lim()).unwrap();
        assert_eq!(f.factor.table.order(), 4);
        let f = frattini_factor_abelian(&AbGroup::new(0, &[8, 2]).unwrap(), &lim()).unwrap();
        assert_eq!(f.factor.table.order(), 4);
        assert!(frattini_factor_abelian(&AbGroup::cyclic(6), &lim()).is_err());
    }
}
