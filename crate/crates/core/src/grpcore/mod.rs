//! Finite groups as explicit multiplication tables, with subgroup closure,
//! commutators, normality, quotients and the lower central series.

mod morphism;
mod perm;
mod series;
mod subgroup;
mod table;

pub use morphism::{find_isomorphism, is_homomorphism, table_automorphisms};
pub use perm::Permutation;
pub use series::{
    is_nilpotent_group, lower_central_series, lower_central_series_default, nilpotency_class, SeriesReport,
    Verdict,
};
pub use subgroup::{
    center, commutator_subgroup, is_invariant_under, is_normal, quotient, Quotient, Subgroup,
};
pub use table::{group_from_perms, AxiomViolation, GroupTable, SubTable};

/// `subgroup_closure`: the smallest subgroup of `g` containing `seed`.
pub fn subgroup_closure<I: IntoIterator<Item = u32>>(g: &GroupTable, seed: I) -> Subgroup {
    g.closure(seed)
}
