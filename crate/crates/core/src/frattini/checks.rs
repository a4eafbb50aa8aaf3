use super::lattice::{frattini_factor_abelian, frattini_subgroup};
use crate::abelian::{induced_tensor, AbGroup};
use crate::actions::{gamma_series_default, nil_order, Action, Bound};
use crate::error::{Error, Result};
use crate::grpcore::{is_invariant_under, is_nilpotent_group, GroupTable, Permutation, Subgroup};
use crate::num::{is_power_of, prime_of_power};
use crate::Limits;

/// The induced action on `A/Φ(A)`. `Φ(A)` is checked to be invariant
/// first.
pub fn frattini_action(action: &Action, limits: &Limits) -> Result<Action> {
    let phi = frattini_subgroup(action.target(), limits)?;
    if !action.is_invariant(&phi) {
        return Err(Error::InternalInvariantViolation("Φ(A) is not invariant under the action".into()));
    }
    Ok(action.on_quotient(&phi)?.0)
}

/// The prime `p` when the table is a nontrivial abelian `p`-group.
pub fn abelian_p_prime(t: &GroupTable) -> Option<u64> {
    if !t.is_abelian() {
        return None;
    }
    prime_of_power(t.order() as u64)
}

/// `pA = {pa}` in an abelian table.
pub fn p_multiples(t: &GroupTable, p: u64) -> Subgroup {
    t.closure(t.elements().map(|x| t.pow(x, p)).filter(|&y| y != 0))
}

/// The induced action on `A/pA = A ⊗ Z/p` for an abelian target.
pub fn tensor_action(action: &Action, p: u64) -> Result<Action> {
    if !action.target().is_abelian() {
        return Err(Error::NotApplicable("the target group is not abelian".into()));
    }
    Ok(action.on_quotient(&p_multiples(action.target(), p))?.0)
}

/// If `G` acts nilpotently on the Frattini factor of a finite nilpotent
/// `A`, it acts nilpotently on `A`.
pub fn check_nuevolema(action: &Action, limits: &Limits) -> Result<bool> {
    if !is_nilpotent_group(action.target()) {
        return Err(Error::NotApplicable("the target group is not nilpotent".into()));
    }
    let factor = frattini_action(action, limits)?;
    if nil_order(&factor).is_none() {
        return Err(Error::NotApplicable("the action on the Frattini factor is not nilpotent".into()));
    }
    Ok(nil_order(action).is_some())
}

/// `nil_G(A) ≤ n · nil_G(A ⊗ Z/p)` for an abelian `p`-group `A` of exponent
/// `pⁿ`.
pub fn check_propodos(action: &Action) -> Result<Bound> {
    let p = abelian_p_prime(action.target())
        .ok_or_else(|| Error::NotApplicable("the target is not an abelian p-group".into()))?;
    let t = action.target();
    let exponent = t.elements().map(|x| t.element_order(x)).max().unwrap_or(1);
    let n = exponent.ilog(p) as usize;
    let tensor = tensor_action(action, p)?;
    let nil_tensor =
        nil_order(&tensor).ok_or_else(|| Error::NotApplicable("the action on A ⊗ Z/p is not nilpotent".into()))?;
    match nil_order(action) {
        Some(nil) => Ok(Bound::new(nil, n * nil_tensor)),
        // a non-nilpotent action exceeds every finite bound
        None => Ok(Bound { holds: false, lhs: usize::MAX, rhs: n * nil_tensor }),
    }
}

fn propouno_hypotheses(action: &Action) -> Result<u64> {
    let p = abelian_p_prime(action.target())
        .ok_or_else(|| Error::NotApplicable("the target is not a finite abelian p-group".into()))?;
    if !action.is_faithful() {
        return Err(Error::NotApplicable("the action is not faithful, so G is not a subgroup of Aut(A)".into()));
    }
    if !tensor_action(action, p)?.is_trivial() {
        return Err(Error::NotApplicable("some element of G acts nontrivially on A ⊗ Z/p".into()));
    }
    Ok(p)
}

/// A group of automorphisms of a finite abelian `p`-group that is trivial
/// on `A ⊗ Z/p` is a `p`-group.
pub fn check_propouno(action: &Action) -> Result<bool> {
    let p = propouno_hypotheses(action)?;
    Ok(is_power_of(action.actor().order() as u64, p))
}

/// Under the same hypotheses, the action on `A` is nilpotent.
pub fn check_corolario(action: &Action) -> Result<bool> {
    propouno_hypotheses(action)?;
    Ok(gamma_series_default(action).is_nilpotent())
}

/// For a faithful action on a finite nilpotent group: nilpotent on the
/// Frattini factor implies `G` nilpotent.
pub fn check_uno(action: &Action, limits: &Limits) -> Result<bool> {
    if !action.is_faithful() {
        return Err(Error::NotApplicable("the action is not faithful".into()));
    }
    if !is_nilpotent_group(action.target()) {
        return Err(Error::NotApplicable("the target group is not nilpotent".into()));
    }
    if nil_order(&frattini_action(action, limits)?).is_none() {
        return Err(Error::NotApplicable("the action on the Frattini factor is not nilpotent".into()));
    }
    Ok(is_nilpotent_group(action.actor()))
}

/// Whether `A/Φ(A) ≅ A ⊗ Z/p` intertwines the action of every automorphism
/// in `maps` on the two sides.
pub fn frattini_naturality(a: &AbGroup, maps: &[crate::abelian::AbHom], limits: &Limits) -> Result<bool> {
    let f = frattini_factor_abelian(a, limits)?;
    for sigma in maps {
        let induced = induced_tensor(sigma, f.prime)?;
        for c in 0..f.factor.table.order() {
            let rep = f.factor.representatives[c];
            let image = f.table.index_of(&sigma.apply(&f.table.coords(rep)));
            let lhs = &f.to_tensor[f.factor.projection[image as usize] as usize];
            let rhs = induced.apply(&f.to_tensor[c]);
            if *lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Φ(G)` is mapped into itself by every automorphism in `autos` (each a
/// permutation of the index set of `g`).
pub fn check_frattini_characteristic(g: &GroupTable, autos: &[Permutation], limits: &Limits) -> Result<bool> {
    let phi = frattini_subgroup(g, limits)?;
    Ok(is_invariant_under(&phi, autos))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::{ab_to_table, aut_group, tensor_kernel, AbHom};

    fn scalar_action(n: u64, k: i64, lim: &Limits) -> Action {
        let a = AbGroup::cyclic(n);
        let aut = crate::abelian::AutGroup::generated_by(&a, &[AbHom::scalar(&a, k)], lim.order_cap).unwrap();
        Action::tautological(&aut, lim.order_cap).unwrap().0
    }

    #[test]
    fn frattini_action_examples() {
        let lim = Limits::default();
        let aut = aut_group(&AbGroup::cyclic(8), &lim).unwrap();
        let act = Action::tautological(&aut, 100).unwrap().0;
        let f = frattini_action(&act, &lim).unwrap();
        assert_eq!(f.target().order(), 2);
        assert!(f.is_trivial());
        let klein = aut_group(&AbGroup::elementary(2, 2), &lim).unwrap();
        let act = Action::tautological(&klein, 100).unwrap().0;
        assert_eq!(frattini_action(&act, &lim).unwrap().target().order(), 4);
    }

    #[test]
    fn nuevolema_and_propodos() {
        let lim = Limits::default();
        assert!(check_nuevolema(&scalar_action(4, 3, &lim), &lim).unwrap());
        assert!(check_nuevolema(&scalar_action(8, 5, &lim), &lim).unwrap());
        assert_eq!(check_propodos(&scalar_action(4, 3, &lim)).unwrap(), Bound { holds: true, lhs: 2, rhs: 2 });
        // ×(p^{r-1}+1) moves Z/p^r only into its socle, ×(p+1) one layer at a time
        assert_eq!(check_propodos(&scalar_action(27, 10, &lim)).unwrap(), Bound { holds: true, lhs: 2, rhs: 3 });
        assert_eq!(check_propodos(&scalar_action(27, 4, &lim)).unwrap(), Bound { holds: true, lhs: 3, rhs: 3 });
        assert_eq!(check_propodos(&scalar_action(5, 1, &lim)).unwrap(), Bound { holds: true, lhs: 1, rhs: 1 });
        let klein = aut_group(&AbGroup::elementary(2, 2), &lim).unwrap();
        let act = Action::tautological(&klein, 100).unwrap().0;
        assert!(matches!(check_propodos(&act), Err(Error::NotApplicable(_))));
        assert!(matches!(check_nuevolema(&act, &lim), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn propouno_examples() {
        let lim = Limits::default();
        let full = aut_group(&AbGroup::cyclic(8), &lim).unwrap();
        let act = Action::tautological(&full, 100).unwrap().0;
        assert!(check_propouno(&act).unwrap());
        assert!(check_corolario(&act).unwrap());
        let a = AbGroup::new(0, &[4, 2]).unwrap();
        let k = tensor_kernel(&a, 2, &lim).unwrap();
        let act = Action::tautological(&k, 100).unwrap().0;
        assert!(check_propouno(&act).unwrap());
        assert!(check_corolario(&act).unwrap());
        let act = scalar_action(5, 2, &lim);
        assert!(matches!(check_propouno(&act), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn naturality_of_the_identification() {
        let lim = Limits::default();
        for spec in [&[4u64, 2][..], &[8], &[9, 3], &[2, 2]] {
            let a = AbGroup::new(0, spec).unwrap();
            let aut = aut_group(&a, &lim).unwrap();
            assert!(frattini_naturality(&a, aut.maps(), &lim).unwrap());
        }
    }

    #[test]
    fn p_multiples_of_z8() {
        let t = ab_to_table(&AbGroup::cyclic(8), 100).unwrap();
        assert_eq!(p_multiples(&t.table, 2).order(), 4);
        assert!(check_uno(&Action::trivial(GroupTable::trivial_group(), t.table.clone()), &Limits::default()).unwrap());
        let autos = crate::grpcore::table_automorphisms(&t.table, 1000).unwrap();
        assert_eq!(autos.len(), 4);
        assert!(check_frattini_characteristic(&t.table, &autos, &Limits::default()).unwrap());
    }
}
