use serde::Serialize;

use super::subgroup::{commutator_subgroup, Subgroup};
use super::table::GroupTable;

/// How a descending series ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    /// `terms[r]` is trivial and `r` is minimal.
    NilpotentOfOrder { order: usize },
    /// `terms[depth + 1] == terms[depth]` and both are nontrivial.
    StabilizedNontrivial { depth: usize },
    /// Neither trivial nor stable after `depth` steps.
    DepthCapReached { depth: usize },
}

/// A descending chain of subgroups, indexed from the whole group at term 0.
#[derive(Debug, Clone)]
pub struct SeriesReport {
    pub terms: Vec<Subgroup>,
    pub verdict: Verdict,
}

impl SeriesReport {
    /// Runs `step` from `start` until the terms become trivial, repeat, or
    /// `depth_cap` steps have been taken.
    pub(crate) fn descend<F>(start: Subgroup, depth_cap: usize, mut step: F) -> SeriesReport
    where
        F: FnMut(&Subgroup) -> Subgroup,
    {
        let mut terms = vec![start];
        if terms[0].is_trivial() {
            return SeriesReport { terms, verdict: Verdict::NilpotentOfOrder { order: 0 } };
        }
        for n in 1..=depth_cap {
            let next = step(&terms[n - 1]);
            if next.is_trivial() {
                terms.push(next);
                return SeriesReport { terms, verdict: Verdict::NilpotentOfOrder { order: n } };
            }
            if next == terms[n - 1] {
                return SeriesReport { terms, verdict: Verdict::StabilizedNontrivial { depth: n - 1 } };
            }
            terms.push(next);
        }
        SeriesReport { terms, verdict: Verdict::DepthCapReached { depth: depth_cap } }
    }

    pub fn nil_order(&self) -> Option<usize> {
        match self.verdict {
            Verdict::NilpotentOfOrder { order } => Some(order),
            _ => None,
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nil_order().is_some()
    }

    /// The nontrivial subgroup the series got stuck on, if it stabilized.
    pub fn stabilized(&self) -> Option<&Subgroup> {
        match self.verdict {
            Verdict::StabilizedNontrivial { depth } => Some(&self.terms[depth]),
            _ => None,
        }
    }

    /// Term `n`, extended past the end of the stored chain: trivial after a
    /// nilpotent verdict, the stable term after stabilization.
    pub fn term(&self, n: usize) -> Option<&Subgroup> {
        if n < self.terms.len() {
            return Some(&self.terms[n]);
        }
        match self.verdict {
            Verdict::NilpotentOfOrder { .. } | Verdict::StabilizedNontrivial { .. } => self.terms.last(),
            Verdict::DepthCapReached { .. } => None,
        }
    }

    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }
}

/// `Γ⁰(G) = G`, `Γⁿ(G) = [G, Γⁿ⁻¹(G)]`.
pub fn lower_central_series(g: &GroupTable, depth_cap: usize) -> SeriesReport {
    let whole = g.whole();
    SeriesReport::descend(whole.clone(), depth_cap, |prev| {
        commutator_subgroup(g, &whole, prev).expect("terms share the parent")
    })
}

/// Default depth cap: a strictly descending chain in `G` has at most
/// `log₂|G|` steps, so `|G|` always suffices.
pub fn lower_central_series_default(g: &GroupTable) -> SeriesReport {
    lower_central_series(g, g.order().max(1))
}

pub fn is_nilpotent_group(g: &GroupTable) -> bool {
    lower_central_series_default(g).is_nilpotent()
}

/// Nilpotency class in the `Γʳ = {1}` convention (`None` if not nilpotent).
pub fn nilpotency_class(g: &GroupTable) -> Option<usize> {
    lower_central_series_default(g).nil_order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grpcore::{group_from_perms, is_normal, Permutation};

    #[test]
    fn q8_and_s3_series() {
        let i = Permutation::parse_cycles(8, "(0 2 1 3)(4 6 5 7)").unwrap();
        let j = Permutation::parse_cycles(8, "(0 4 1 5)(2 7 3 6)").unwrap();
        let q8 = group_from_perms(8, &[i, j], 100).unwrap().0;
        let r = lower_central_series_default(&q8);
        assert_eq!(r.verdict, Verdict::NilpotentOfOrder { order: 2 });
        assert_eq!(r.orders(), vec![8, 2, 1]);
        assert!(r.terms.iter().all(|t| is_normal(&q8, t)));

        let gens = [Permutation::parse_cycles(3, "(0 1)").unwrap(), Permutation::parse_cycles(3, "(0 1 2)").unwrap()];
        let s3 = group_from_perms(3, &gens, 100).unwrap().0;
        let r = lower_central_series_default(&s3);
        assert_eq!(r.verdict, Verdict::StabilizedNontrivial { depth: 1 });
        assert_eq!(r.stabilized().unwrap().order(), 3);
        assert_eq!(r.term(7).unwrap().order(), 3);
    }

    #[test]
    fn trivial_and_abelian() {
        let t = GroupTable::trivial_group();
        assert_eq!(lower_central_series_default(&t).verdict, Verdict::NilpotentOfOrder { order: 0 });
        assert_eq!(nilpotency_class(&GroupTable::cyclic(5)), Some(1));
    }

    #[test]
    fn depth_cap() {
        let i = Permutation::parse_cycles(8, "(0 1 2 3 4 5 6 7)").unwrap();
        let j = Permutation::parse_cycles(8, "(1 7)(2 6)(3 5)").unwrap();
        let d16 = group_from_perms(8, &[i, j], 100).unwrap().0;
        assert_eq!(nilpotency_class(&d16), Some(3));
        let r = lower_central_series(&d16, 2);
        assert_eq!(r.verdict, Verdict::DepthCapReached { depth: 2 });
        assert_eq!(r.term(5), None);
    }
}
