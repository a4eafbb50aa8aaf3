use serde::Serialize;

use super::action::Action;
use crate::error::{Error, Result};
use crate::grpcore::{commutator_subgroup, lower_central_series_default, GroupTable, Quotient, SeriesReport, Subgroup};

/// `[g, a] = (g·a⁻¹)·a`, an element of `A`.
pub fn mixed(action: &Action, g: u32, a: u32) -> u32 {
    let t = action.target();
    t.mul(action.act(g, t.inv(a)), a)
}

/// `[a, g] = a⁻¹·(g·a)`, an element of `A`.
pub fn mixed_rev(action: &Action, a: u32, g: u32) -> u32 {
    let t = action.target();
    t.mul(t.inv(a), action.act(g, a))
}

/// `[S, B]`: the subgroup of `A` generated by `[s, b]` for `s ∈ S`, `b ∈ B`.
/// `B` need not be invariant.
pub fn mixed_commutator(action: &Action, s: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    if !s.belongs_to(action.actor()) || !b.belongs_to(action.target()) {
        return Err(Error::MismatchedParents);
    }
    let seed = s.members().iter().flat_map(|&g| b.members().iter().map(move |&a| mixed(action, g, a)));
    Ok(action.target().closure(seed.filter(|&c| c != 0)))
}

/// `Γⁿ_G(A)` for `n ≤ depth_cap`, with a verdict.
pub fn gamma_series(action: &Action, depth_cap: usize) -> SeriesReport {
    let whole_g = action.actor().whole();
    SeriesReport::descend(action.target().whole(), depth_cap, |prev| {
        mixed_commutator(action, &whole_g, prev).expect("same parents")
    })
}

/// [`gamma_series`] with depth cap `|A|`.
pub fn gamma_series_default(action: &Action) -> SeriesReport {
    gamma_series(action, action.target().order().max(1))
}

/// `nil_G(A)`, if the action is nilpotent.
pub fn nil_order(action: &Action) -> Option<usize> {
    gamma_series_default(action).nil_order()
}

/// `A/Γ¹_G(A)` with its induced action, checked to be trivial.
///
/// The returned flag is `true` whenever the call succeeds; a failure of
/// normality or triviality is an [`Error::InternalInvariantViolation`].
pub fn quotient_action(action: &Action) -> Result<(Quotient, Action, bool)> {
    let g1 = mixed_commutator(action, &action.actor().whole(), &action.target().whole())?;
    if !crate::grpcore::is_normal(action.target(), &g1) {
        return Err(Error::InternalInvariantViolation("Γ¹ is not normal in A".into()));
    }
    let (induced, q) = action.on_quotient(&g1).map_err(|e| Error::InternalInvariantViolation(e.to_string()))?;
    if !induced.is_trivial() {
        return Err(Error::InternalInvariantViolation("action on A/Γ¹ is not trivial".into()));
    }
    Ok((q, induced, true))
}

/// The Witt–Hall type identity
/// `[[f⁻¹,g⁻¹], g·b] · b⁻¹ · [[g,b⁻¹], f] · b · [[f,b], f g f⁻¹] = 1`.
pub fn check_witt_hall(action: &Action, f: u32, g: u32, b: u32) -> bool {
    witt_hall_value(action, f, g, b) == 0
}

/// The left side of [`check_witt_hall`], for witnesses.
pub fn witt_hall_value(action: &Action, f: u32, g: u32, b: u32) -> u32 {
    let (gg, a) = (action.actor(), action.target());
    let fg = gg.commutator(gg.inv(f), gg.inv(g));
    let x1 = mixed(action, fg, action.act(g, b));
    let x2 = a.inv(b);
    let x3 = mixed_rev(action, mixed(action, g, a.inv(b)), f);
    let x4 = b;
    let x5 = mixed_rev(action, mixed(action, f, b), gg.conjugate(f, g));
    [x2, x3, x4, x5].into_iter().fold(x1, |acc, x| a.mul(acc, x))
}

/// First triple violating the identity, if any.
pub fn witt_hall_counterexample(action: &Action) -> Option<(u32, u32, u32)> {
    for f in action.actor().elements() {
        for g in action.actor().elements() {
            for b in action.target().elements() {
                if !check_witt_hall(action, f, g, b) {
                    return Some((f, g, b));
                }
            }
        }
    }
    None
}

fn normal_in(g: &GroupTable, h: &Subgroup, k: &Subgroup) -> bool {
    k.is_subgroup_of(h)
        && h.generators().iter().all(|&x| k.generators().iter().all(|&y| k.contains(g.conjugate(x, y))))
}

/// Both parts of the universal property of `A/Γ¹_G(A)`: the induced
/// action on it is trivial, and every invariant normal `N` with trivial
/// action on `A/N` contains `Γ¹`. The second part runs over the whole
/// subgroup lattice of `A`, so it covers every equivariant map to a group
/// with trivial action.
pub fn check_lema1(action: &Action, limits: &crate::Limits) -> Result<bool> {
    let (_, _, trivial) = quotient_action(action)?;
    let g1 = mixed_commutator(action, &action.actor().whole(), &action.target().whole())?;
    let t = action.target();
    for n in crate::frattini::all_subgroups(t, limits)? {
        if !crate::grpcore::is_normal(t, &n) || !action.is_invariant(&n) {
            continue;
        }
        if action.on_quotient(&n)?.0.is_trivial() && !g1.is_subgroup_of(&n) {
            return Ok(false);
        }
    }
    Ok(trivial)
}

/// `[[H,K],A] ⊆ ⟨[K,[H,A]], [H,[K,A]]⟩` for `K` normal in `H`.
pub fn check_jo2(action: &Action, h: &Subgroup, k: &Subgroup) -> Result<bool> {
    let g = action.actor();
    if !h.belongs_to(g) || !k.belongs_to(g) {
        return Err(Error::MismatchedParents);
    }
    if !normal_in(g, h, k) {
        return Err(Error::NotNormal);
    }
    let whole_a = action.target().whole();
    let hk = commutator_subgroup(g, h, k)?;
    let lhs = mixed_commutator(action, &hk, &whole_a)?;
    let ha = mixed_commutator(action, h, &whole_a)?;
    let ka = mixed_commutator(action, k, &whole_a)?;
    let r1 = mixed_commutator(action, k, &ha)?;
    let r2 = mixed_commutator(action, h, &ka)?;
    let rhs = r1.join(action.target(), &r2)?;
    Ok(lhs.is_subgroup_of(&rhs))
}

/// `[Γⁿ(G), Γᵐ_G(A)] ⊆ Γⁿ⁺ᵐ⁺¹_G(A)` for every `n + m + 1 ≤ nil_G(A)`.
///
/// Returns the first failing `(n, m)`.
pub fn jo3_counterexample(action: &Action) -> Result<Option<(usize, usize)>> {
    let gamma = gamma_series_default(action);
    let Some(r) = gamma.nil_order() else {
        return Err(Error::NotApplicable("the action is not nilpotent".into()));
    };
    let lcs = lower_central_series_default(action.actor());
    for n in 0..r {
        for m in 0..r - n {
            let gn = lcs.term(n).expect("default cap reaches a verdict");
            let lhs = mixed_commutator(action, gn, gamma.term(m).unwrap())?;
            if !lhs.is_subgroup_of(gamma.term(n + m + 1).unwrap()) {
                return Ok(Some((n, m)));
            }
        }
    }
    Ok(None)
}

pub fn check_jo3(action: &Action) -> Result<bool> {
    Ok(jo3_counterexample(action)?.is_none())
}

/// `Γᵐ_G(Γⁿ_G(A)) = Γᵐ⁺ⁿ_G(A)` for all `m + n` up to the nilpotency order,
/// or up to one past the stabilization depth. Returns the first failing
/// `(n, m)`.
pub fn gamma_functoriality_counterexample(action: &Action) -> Option<(usize, usize)> {
    let gamma = gamma_series_default(action);
    let top = gamma.nil_order().unwrap_or(gamma.terms.len());
    for n in 0..=top {
        let term = gamma.term(n)?;
        let (sub, emb) = action.on_subgroup(term).expect("terms are invariant");
        let inner = gamma_series(&sub, top.max(1));
        for m in 0..=top - n {
            let inner_term = inner.term(m)?;
            let mapped: Vec<u32> = {
                let mut v: Vec<u32> = inner_term.members().iter().map(|&x| emb[x as usize]).collect();
                v.sort_unstable();
                v
            };
            if mapped.as_slice() != gamma.term(n + m)?.members() {
                return Some((n, m));
            }
        }
    }
    None
}

/// An inequality `lhs ≤ rhs` together with both sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub holds: bool,
    pub lhs: usize,
    pub rhs: usize,
}

impl Bound {
    pub fn new(lhs: usize, rhs: usize) -> Self {
        Bound { holds: lhs <= rhs, lhs, rhs }
    }
}

/// `nil G ≤ nil_G(A) − 1` for a faithful nilpotent action.
///
/// Faithfulness is what makes `G` a subgroup of `Aut(A)`. The trivial
/// target is excluded: there the right side would be `−1`.
pub fn nil_bound_check(action: &Action) -> Result<Bound> {
    if !action.is_faithful() {
        return Err(Error::NotApplicable("the action is not faithful, so G is not a subgroup of Aut(A)".into()));
    }
    if action.target().order() == 1 {
        return Err(Error::NotApplicable("the target group is trivial".into()));
    }
    let r = nil_order(action).ok_or_else(|| Error::NotApplicable("the action is not nilpotent".into()))?;
    let class = lower_central_series_default(action.actor())
        .nil_order()
        .ok_or_else(|| Error::InternalInvariantViolation("G acts nilpotently but is not nilpotent".into()))?;
    Ok(Bound::new(class, r - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::{ab_to_table, AbGroup, AbHom};
    use crate::grpcore::{group_from_perms, Permutation, Verdict};

    fn times3_on_z4() -> Action {
        let z4 = ab_to_table(&AbGroup::cyclic(4), 100).unwrap();
        Action::from_matrices(GroupTable::cyclic(2), &z4, &[AbHom::scalar(&AbGroup::cyclic(4), 3)]).unwrap()
    }

    #[test]
    fn lema1_examples() {
        let lim = crate::Limits::default();
        assert!(check_lema1(&times3_on_z4(), &lim).unwrap());
        assert!(check_lema1(&Action::conjugation(&s3()), &lim).unwrap());
        assert!(check_lema1(&Action::trivial(s3(), GroupTable::cyclic(6)), &lim).unwrap());
    }

    fn s3() -> GroupTable {
        let gens = [Permutation::parse_cycles(3, "(0 1)").unwrap(), Permutation::parse_cycles(3, "(0 1 2)").unwrap()];
        group_from_perms(3, &gens, 10).unwrap().0
    }

    #[test]
    fn gamma_examples() {
        let t = Action::trivial(s3(), GroupTable::cyclic(5));
        assert_eq!(gamma_series_default(&t).verdict, Verdict::NilpotentOfOrder { order: 1 });

        let r = gamma_series_default(&times3_on_z4());
        assert_eq!(r.verdict, Verdict::NilpotentOfOrder { order: 2 });
        assert_eq!(r.orders(), vec![4, 2, 1]);

        let c = Action::conjugation(&s3());
        let r = gamma_series_default(&c);
        assert_eq!(r.verdict, Verdict::StabilizedNontrivial { depth: 1 });
        assert_eq!(r.stabilized().unwrap().order(), 3);
    }

    #[test]
    fn quotient_examples() {
        let (q, induced, ok) = quotient_action(&times3_on_z4()).unwrap();
        assert!(ok && induced.is_trivial());
        assert_eq!(q.table.order(), 2);
        let (q, _, _) = quotient_action(&Action::trivial(s3(), GroupTable::cyclic(4))).unwrap();
        assert_eq!(q.table.order(), 4);
        let (q, _, _) = quotient_action(&Action::conjugation(&s3())).unwrap();
        assert_eq!(q.table.order(), 2);
    }

    #[test]
    fn mixed_commutator_examples() {
        let a = times3_on_z4();
        let b = a.target().closure([2]);
        assert!(mixed_commutator(&a, &a.actor().trivial(), &a.target().whole()).unwrap().is_trivial());
        assert!(mixed_commutator(&a, &a.actor().whole(), &b).unwrap().is_trivial());
        let c = Action::conjugation(&s3());
        let g1 = mixed_commutator(&c, &c.actor().whole(), &c.target().whole()).unwrap();
        assert_eq!(&g1, gamma_series_default(&c).term(1).unwrap());
    }

    #[test]
    fn witt_hall_is_an_identity() {
        assert_eq!(witt_hall_counterexample(&times3_on_z4()), None);
        assert_eq!(witt_hall_counterexample(&Action::conjugation(&s3())), None);
        assert!(check_witt_hall(&times3_on_z4(), 0, 0, 3));
    }

    #[test]
    fn jo2_examples() {
        let a = times3_on_z4();
        let g = a.actor();
        assert!(check_jo2(&a, &g.whole(), &g.trivial()).unwrap());
        assert!(check_jo2(&a, &g.whole(), &g.whole()).unwrap());
        let c = Action::conjugation(&s3());
        let a3 = c.actor().closure([c.actor().generators()[1]]);
        assert!(check_jo2(&c, &c.actor().whole(), &a3).unwrap());
        let two = c.actor().closure([c.actor().generators()[0]]);
        assert_eq!(check_jo2(&c, &c.actor().whole(), &two), Err(Error::NotNormal));
    }

    #[test]
    fn gamma_is_functorial() {
        assert_eq!(gamma_functoriality_counterexample(&times3_on_z4()), None);
        assert_eq!(gamma_functoriality_counterexample(&Action::conjugation(&s3())), None);
    }

    #[test]
    fn jo3_and_bound() {
        assert!(check_jo3(&times3_on_z4()).unwrap());
        assert!(check_jo3(&Action::trivial(s3(), GroupTable::cyclic(4))).unwrap());
        assert!(matches!(check_jo3(&Action::conjugation(&s3())), Err(Error::NotApplicable(_))));
        assert_eq!(nil_bound_check(&times3_on_z4()).unwrap(), Bound { holds: true, lhs: 1, rhs: 1 });
        let t = Action::trivial(GroupTable::trivial_group(), GroupTable::cyclic(3));
        assert_eq!(nil_bound_check(&t).unwrap(), Bound { holds: true, lhs: 0, rhs: 0 });
    }
}
