use serde::Serialize;

use super::cuatro::{gl2_commutator_witness, gl2_witness_generators};
use super::em::{esharp, eshp, fg_mod_p_identity, self_equivalences, EMSpace};
use crate::abelian::{AbGroup, AbHom, AutGroup};
use crate::actions::{nil_order, Action};
use crate::error::{Error, Result};
use crate::frattini::tensor_action;
use crate::grpcore::{lower_central_series_default, GroupTable, Subgroup, Verdict};
use crate::num::factorize;
use crate::Limits;

/// `A[p] = {a : pa = 0}` in an abelian table.
pub fn p_torsion(t: &GroupTable, p: u64) -> Subgroup {
    t.closure(t.elements().filter(|&x| x != 0 && t.pow(x, p) == 0))
}

fn faithful_abelian(action: &Action) -> Result<Vec<u64>> {
    if !action.target().is_abelian() {
        return Err(Error::NotApplicable("the target group is not abelian".into()));
    }
    if !action.is_faithful() {
        return Err(Error::NotApplicable("the action is not faithful, so G is not a subgroup of Aut(A)".into()));
    }
    Ok(factorize(action.target().order() as u64).into_iter().map(|(p, _)| p).collect())
}

/// Outcome of [`check_nuevo`] and [`check_coeficientes`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub actor_nilpotent: bool,
    /// `nil_G(A)` for the action on `π_n = A` itself.
    pub action_nil: Option<usize>,
}

impl ReductionReport {
    pub fn holds(&self) -> bool {
        self.actor_nilpotent && self.action_nil.is_some()
    }
}

/// `G ≤ Aut(A) = 𝓔(K(A, n))` acting nilpotently on `A ⊗ Z/p` for every
/// prime `p` is nilpotent, and so is its action on `A`. Primes not
/// dividing `|A|` give a trivial tensor product.
pub fn check_nuevo(action: &Action) -> Result<ReductionReport> {
    for p in faithful_abelian(action)? {
        if nil_order(&tensor_action(action, p)?).is_none() {
            return Err(Error::NotApplicable(format!("the action on A ⊗ Z/{p} is not nilpotent")));
        }
    }
    Ok(ReductionReport {
        actor_nilpotent: lower_central_series_default(action.actor()).is_nilpotent(),
        action_nil: nil_order(action),
    })
}

/// The same conclusion from nilpotency on `π_*(K(A, n); Z/p)`, whose two
/// nonzero groups are `A[p]` in degree `n` and `A/pA` in degree `n − 1`.
pub fn check_coeficientes(action: &Action) -> Result<ReductionReport> {
    for p in faithful_abelian(action)? {
        let (on_torsion, _) = action.on_subgroup(&p_torsion(action.target(), p))?;
        if nil_order(&on_torsion).is_none() {
            return Err(Error::NotApplicable(format!("the action on A[{p}] is not nilpotent")));
        }
        if nil_order(&tensor_action(action, p)?).is_none() {
            return Err(Error::NotApplicable(format!("the action on A/{p}A is not nilpotent")));
        }
    }
    Ok(ReductionReport {
        actor_nilpotent: lower_central_series_default(action.actor()).is_nilpotent(),
        action_nil: nil_order(action),
    })
}

/// `∩ 𝓔♯ₚ` over the primes dividing `|A|`. At any other prime both
/// coefficient groups vanish and `𝓔♯ₚ = 𝓔`, so this is the intersection
/// over all primes.
pub fn eshp_intersection(x: &EMSpace, limits: &Limits) -> Result<AutGroup> {
    let a = x.coeff();
    let mut maps: Vec<AbHom> = self_equivalences(x, limits)?.maps().to_vec();
    for p in a.primes() {
        let e = eshp(x, p, limits)?;
        maps.retain(|f| e.index_of(f).is_some());
    }
    AutGroup::from_elements(a, maps, limits.order_cap)
}

/// `K(Z/pʳ, n)`: `𝓔♯` is trivial while `ρ = ×(p^{r−1} + 1)` is a nontrivial
/// element of `𝓔♯ₚ`, hence of `∩ 𝓔♯ₚ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImportanteReport {
    pub prime: u64,
    pub exponent: u32,
    pub rho: u64,
    pub esharp_order: usize,
    pub eshp_order: usize,
    pub intersection_order: usize,
    pub rho_in_eshp: bool,
    pub rho_nontrivial: bool,
    /// `𝓔♯ₚ` at the next prime, which should be all of `𝓔`.
    pub other_prime_is_everything: bool,
}

impl ImportanteReport {
    pub fn holds(&self) -> bool {
        self.esharp_order == 1
            && self.rho_in_eshp
            && self.rho_nontrivial
            && self.intersection_order > self.esharp_order
            && self.other_prime_is_everything
    }
}

pub fn check_importante(p: u64, r: u32, degree: u32, limits: &Limits) -> Result<ImportanteReport> {
    if !crate::num::is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    if r < 2 {
        return Err(Error::NotApplicable(format!("Z/{p}^{r} needs exponent at least 2")));
    }
    let n = p.checked_pow(r).ok_or(Error::TooLarge { what: "cyclic group", size: u128::MAX, limit: u64::MAX as u128 })?;
    let a = AbGroup::cyclic(n);
    let x = EMSpace::new(a.clone(), degree)?;
    let rho_value = p.pow(r - 1) + 1;
    let rho = AbHom::scalar(&a, rho_value as i64);
    let e = eshp(&x, p, limits)?;
    let all = self_equivalences(&x, limits)?;
    let q = crate::num::next_prime_above(p);
    let other = eshp(&x, q, limits)?;
    Ok(ImportanteReport {
        prime: p,
        exponent: r,
        rho: rho_value,
        esharp_order: esharp(&x).order(),
        eshp_order: e.order(),
        intersection_order: eshp_intersection(&x, limits)?.order(),
        rho_in_eshp: e.index_of(&rho).is_some(),
        rho_nontrivial: !rho.is_identity(),
        other_prime_is_everything: other.order() == all.order(),
    })
}

/// `K((Z/2)², n)` and the GL₂(Z) matrices `I + 2E₁₂`, `I + 2E₂₁`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RemarkFinalReport {
    pub e_order: usize,
    pub e_nilpotent: bool,
    /// Order of the term at which the lower central series of `𝓔` stops.
    pub stable_order: Option<usize>,
    pub eshp3_is_everything: bool,
    pub witnesses_in_eshp2: bool,
    pub witnesses_fail_at_3: bool,
    pub depth: usize,
    pub nontrivial_through_depth: bool,
}

impl RemarkFinalReport {
    pub fn holds(&self) -> bool {
        self.e_order == 6
            && !self.e_nilpotent
            && self.stable_order == Some(3)
            && self.eshp3_is_everything
            && self.witnesses_in_eshp2
            && self.witnesses_fail_at_3
            && self.nontrivial_through_depth
    }
}

pub fn check_remark_final(degree: u32, depth: usize, limits: &Limits) -> Result<RemarkFinalReport> {
    let x = EMSpace::new(AbGroup::elementary(2, 2), degree)?;
    let e = self_equivalences(&x, limits)?;
    let lcs = lower_central_series_default(&e.table);
    let stable_order = match lcs.verdict {
        Verdict::StabilizedNontrivial { .. } => lcs.stabilized().map(Subgroup::order),
        _ => None,
    };
    let e3 = eshp(&x, 3, limits)?;
    let gens = gl2_witness_generators();
    let mut in2 = true;
    let mut fail3 = true;
    for g in &gens {
        in2 &= fg_mod_p_identity(g, 2)?;
        fail3 &= !fg_mod_p_identity(g, 3)?;
    }
    let w = gl2_commutator_witness(depth);
    Ok(RemarkFinalReport {
        e_order: e.order(),
        e_nilpotent: lcs.is_nilpotent(),
        stable_order,
        eshp3_is_everything: e3.order() == e.order(),
        witnesses_in_eshp2: in2,
        witnesses_fail_at_3: fail3,
        depth,
        nontrivial_through_depth: w.nontrivial_through_depth(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::{aut_group, ab_to_table};

    fn tautological(a: &AbGroup, gens: &[AbHom]) -> Action {
        let aut = AutGroup::generated_by(a, gens, 1000).unwrap();
        Action::tautological(&aut, 1000).unwrap().0
    }

    #[test]
    fn nuevo_and_coeficientes() {
        let a = AbGroup::new(0, &[4, 3]).unwrap();
        // ×7 is ×3 on Z/4 and ×1 on Z/3; ×5 is ×1 on Z/4 and ×2 on Z/3
        let act = tautological(&AbGroup::cyclic(12), &[AbHom::scalar(&AbGroup::cyclic(12), 7)]);
        let r = check_nuevo(&act).unwrap();
        assert!(r.holds());
        assert!(check_coeficientes(&act).unwrap().holds());
        let act = tautological(&AbGroup::cyclic(12), &[AbHom::scalar(&AbGroup::cyclic(12), 5)]);
        assert!(matches!(check_nuevo(&act), Err(Error::NotApplicable(_))));
        let klein = Action::tautological(&aut_group(&AbGroup::elementary(2, 2), &Limits::default()).unwrap(), 100).unwrap().0;
        assert!(matches!(check_coeficientes(&klein), Err(Error::NotApplicable(_))));
        let t = ab_to_table(&a, 100).unwrap();
        assert_eq!(p_torsion(&t.table, 2).order(), 2);
    }

    #[test]
    fn importante() {
        let r = check_importante(2, 2, 2, &Limits::default()).unwrap();
        assert!(r.holds());
        assert_eq!((r.rho, r.eshp_order, r.intersection_order), (3, 2, 2));
        for (p, e) in [(3, 2), (2, 3), (5, 2), (3, 3)] {
            assert!(check_importante(p, e, 3, &Limits::default()).unwrap().holds(), "p={p} r={e}");
        }
    }

    #[test]
    fn remark_final() {
        let r = check_remark_final(2, 8, &Limits::default()).unwrap();
        assert!(r.holds(), "{r:?}");
    }
}
