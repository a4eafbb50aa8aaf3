//! Localization of finite nilpotent groups at a prime: the Sylow
//! `p`-subgroup with the projection `g ↦` (the `p`-part of `g`).
//!
//! Rationalization (`p = 0`) of a finite group is the trivial group.

use serde::Serialize;

use crate::actions::{gamma_series_default, nil_order, Action};
use crate::error::{Error, Result};
use crate::grpcore::{is_homomorphism, is_nilpotent_group, lower_central_series_default, GroupTable, SubTable, Subgroup};
use crate::num::{factorize, is_prime};

fn require_nilpotent(g: &GroupTable) -> Result<()> {
    if is_nilpotent_group(g) {
        Ok(())
    } else {
        Err(Error::NotNilpotent)
    }
}

fn check_prime_or_zero(p: u64) -> Result<()> {
    if p == 0 || is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidPrime(p))
    }
}

/// The `p`-part `g^u` of `g`, where `|g| = pᵃm` and `u ≡ 1 mod pᵃ`,
/// `u ≡ 0 mod m`. No nilpotency check.
pub(crate) fn p_part(g: &GroupTable, x: u32, p: u64) -> u32 {
    if p == 0 {
        return 0;
    }
    let order = g.element_order(x);
    let mut pa = 1u64;
    let mut m = order;
    while m.is_multiple_of(p) {
        m /= p;
        pa *= p;
    }
    if pa == 1 {
        return 0;
    }
    // u = m·(m⁻¹ mod pᵃ) is ≡ 0 mod m and ≡ 1 mod pᵃ
    let inv = crate::num::inverse_mod((m % pa) as i64, pa as i64).expect("coprime") as u64;
    g.pow(x, (m * inv) % order)
}

pub fn p_component(g: &GroupTable, x: u32, p: u64) -> Result<u32> {
    check_prime_or_zero(p)?;
    require_nilpotent(g)?;
    Ok(p_part(g, x, p))
}

/// `G_(p)` inside `G`, with the localization morphism.
#[derive(Debug, Clone)]
pub struct Localization {
    pub prime: u64,
    /// The `p`-elements of `G`.
    pub subgroup: Subgroup,
    pub table: SubTable,
    /// `morphism[g]` is the index in `table` of the `p`-part of `g`.
    pub morphism: Vec<u32>,
}

pub fn localize_group(g: &GroupTable, p: u64) -> Result<Localization> {
    check_prime_or_zero(p)?;
    require_nilpotent(g)?;
    let parts: Vec<u32> = g.elements().map(|x| p_part(g, x, p)).collect();
    let mut members = parts.clone();
    members.sort_unstable();
    members.dedup();
    let subgroup = g.closure(members.iter().copied());
    if subgroup.order() != members.len() {
        return Err(Error::InternalInvariantViolation("p-elements of a nilpotent group do not form a group".into()));
    }
    let table = g.subtable(&subgroup);
    let morphism: Vec<u32> = parts.iter().map(|&y| table.position(y).expect("p-part lies in G_(p)")).collect();
    if !is_homomorphism(g, &table.table, &morphism) {
        return Err(Error::InternalInvariantViolation("localization map is not a homomorphism".into()));
    }
    Ok(Localization { prime: p, subgroup, table, morphism })
}

/// The induced action on `A_(p)` (the same group `G`, restricted to the
/// `p`-elements of `A`).
pub fn localize_action(action: &Action, p: u64) -> Result<(Action, Localization)> {
    let loc = localize_group(action.target(), p)?;
    let (local, emb) =
        action.on_subgroup(&loc.subgroup).map_err(|e| Error::InternalInvariantViolation(e.to_string()))?;
    debug_assert_eq!(emb, loc.table.embedding);
    Ok((local, loc))
}

/// `Γᵐ_G(A)_(p) = Γᵐ_G(A_(p))`, compared inside `A`.
pub fn check_lema2(action: &Action, p: u64, m: usize) -> Result<bool> {
    let (local, loc) = localize_action(action, p)?;
    let global = gamma_series_default(action);
    let lhs = global.term(m).expect("default cap reaches a verdict");
    let mut lhs_p: Vec<u32> = lhs.members().iter().map(|&x| p_part(action.target(), x, p)).collect();
    lhs_p.sort_unstable();
    lhs_p.dedup();
    let localized = gamma_series_default(&local);
    let rhs = localized.term(m).expect("default cap reaches a verdict");
    let mut rhs_in_a: Vec<u32> = rhs.members().iter().map(|&x| loc.table.embedding[x as usize]).collect();
    rhs_in_a.sort_unstable();
    Ok(lhs_p == rhs_in_a)
}

/// Nilpotency of the action on `A` against nilpotency at each prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UfReport {
    pub holds: bool,
    pub nilpotent: bool,
    /// `(p, nil_G(A_(p)))` for `p = 0` and each prime dividing `|A|`.
    pub local: Vec<(u64, Option<usize>)>,
}

/// `G` acts nilpotently on `A` iff it acts nilpotently on every `A_(p)`
/// (`p` prime or zero). For finite `A` only the primes dividing `|A|`
/// contribute, so the bound on the orders is automatic.
pub fn check_uf(action: &Action) -> Result<UfReport> {
    require_nilpotent(action.target())?;
    let nilpotent = nil_order(action).is_some();
    let mut local = Vec::new();
    let primes = std::iter::once(0).chain(factorize(action.target().order() as u64).into_iter().map(|(q, _)| q));
    for p in primes {
        let (l, _) = localize_action(action, p)?;
        local.push((p, nil_order(&l)));
    }
    let all_local = local.iter().all(|(_, r)| r.is_some());
    Ok(UfReport { holds: nilpotent == all_local, nilpotent, local })
}

/// For a faithful action on a finite nilpotent `A`: nilpotent on every
/// `A_(p)` (orders automatically bounded) implies `G` nilpotent.
pub fn check_dos(action: &Action) -> Result<bool> {
    if !action.is_faithful() {
        return Err(Error::NotApplicable("the action is not faithful".into()));
    }
    let uf = check_uf(action).map_err(|_| Error::NotApplicable("the target group is not nilpotent".into()))?;
    if uf.local.iter().any(|(_, r)| r.is_none()) {
        return Err(Error::NotApplicable("some localized action is not nilpotent".into()));
    }
    Ok(lower_central_series_default(action.actor()).is_nilpotent())
}

/// Reassembles `G` from its Sylow subgroups: `|G| = ∏ |G_(p)|` and every
/// `g` is the product of its `p`-parts.
pub fn is_product_of_localizations(g: &GroupTable) -> Result<bool> {
    require_nilpotent(g)?;
    let primes: Vec<u64> = factorize(g.order() as u64).into_iter().map(|(p, _)| p).collect();
    let locs = primes.iter().map(|&p| localize_group(g, p)).collect::<Result<Vec<_>>>()?;
    let product: usize = locs.iter().map(|l| l.subgroup.order()).product();
    let rebuilt = g.elements().all(|x| primes.iter().fold(0, |acc, &p| g.mul(acc, p_part(g, x, p))) == x);
    Ok(product == g.order() && rebuilt)
}

/// `Φ(A)_(p) = Φ(A_(p))` inside `A`, for a finite nilpotent `A`.
pub fn check_frattini_localization(g: &GroupTable, p: u64, limits: &crate::Limits) -> Result<bool> {
    let loc = localize_group(g, p)?;
    let phi = crate::frattini::frattini_subgroup(g, limits)?;
    let mut lhs: Vec<u32> = phi.members().iter().map(|&x| p_part(g, x, p)).collect();
    lhs.sort_unstable();
    lhs.dedup();
    let local_phi = crate::frattini::frattini_subgroup(&loc.table.table, limits)?;
    let mut rhs: Vec<u32> = local_phi.members().iter().map(|&x| loc.table.embedding[x as usize]).collect();
    rhs.sort_unstable();
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::{ab_to_table, AbGroup, AbHom};
    use crate::grpcore::{find_isomorphism, group_from_perms, Permutation};

    fn mult_action(n: u64, k: i64, actor_order: usize) -> Action {
        let t = ab_to_table(&AbGroup::cyclic(n), 1000).unwrap();
        Action::from_matrices(GroupTable::cyclic(actor_order), &t, &[AbHom::scalar(&AbGroup::cyclic(n), k)]).unwrap()
    }

    #[test]
    fn components() {
        let z6 = GroupTable::cyclic(6);
        assert_eq!(p_component(&z6, 1, 2).unwrap(), 3);
        assert_eq!(p_component(&z6, 0, 2).unwrap(), 0);
        assert_eq!(p_component(&GroupTable::cyclic(4), 1, 2).unwrap(), 1);
        let gens = [Permutation::parse_cycles(3, "(0 1)").unwrap(), Permutation::parse_cycles(3, "(0 1 2)").unwrap()];
        let s3 = group_from_perms(3, &gens, 10).unwrap().0;
        assert_eq!(p_component(&s3, 1, 2), Err(Error::NotNilpotent));
        assert_eq!(p_component(&z6, 1, 4), Err(Error::InvalidPrime(4)));
    }

    #[test]
    fn groups() {
        let l = localize_group(&GroupTable::cyclic(12), 2).unwrap();
        assert!(find_isomorphism(&l.table.table, &GroupTable::cyclic(4)).is_some());
        assert_eq!(localize_group(&GroupTable::cyclic(9), 2).unwrap().subgroup.order(), 1);
        assert_eq!(localize_group(&GroupTable::cyclic(9), 0).unwrap().subgroup.order(), 1);
        let q8 = crate::grpcore::group_from_perms(
            8,
            &[
                Permutation::parse_cycles(8, "(0 2 1 3)(4 6 5 7)").unwrap(),
                Permutation::parse_cycles(8, "(0 4 1 5)(2 7 3 6)").unwrap(),
            ],
            10,
        )
        .unwrap()
        .0;
        assert!(localize_group(&q8, 2).unwrap().subgroup.is_whole());
        assert!(is_product_of_localizations(&GroupTable::cyclic(60)).unwrap());
        for p in [2, 3, 5] {
            assert!(check_frattini_localization(&GroupTable::cyclic(60), p, &crate::Limits::default()).unwrap());
        }
        assert!(check_frattini_localization(&q8, 2, &crate::Limits::default()).unwrap());
    }

    #[test]
    fn actions() {
        // 5 has order 2 mod 12
        let a = mult_action(12, 5, 2);
        let (l, _) = localize_action(&a, 2).unwrap();
        assert_eq!(l.target().order(), 4);
        assert!(l.is_trivial());
        let (l, _) = localize_action(&a, 5).unwrap();
        assert_eq!(l.target().order(), 1);
        let b = mult_action(4, 3, 2);
        let (l, _) = localize_action(&b, 2).unwrap();
        assert_eq!(l.target().order(), 4);
        assert!(!l.is_trivial());
    }

    #[test]
    fn lema2_and_uf() {
        let a = mult_action(12, 5, 2);
        for m in 0..4 {
            for p in [2, 3] {
                assert!(check_lema2(&a, p, m).unwrap());
            }
        }
        let uf = check_uf(&a).unwrap();
        assert!(uf.holds);
        assert!(!uf.nilpotent);
        let t = Action::trivial(GroupTable::cyclic(3), GroupTable::cyclic(6));
        assert!(check_uf(&t).unwrap().holds && check_uf(&t).unwrap().nilpotent);
    }
}
