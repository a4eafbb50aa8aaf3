//! Actions of finite groups on finite groups by automorphisms, the
//! `G`-commutator series `Γⁿ_G(A)` and the commutator identities it obeys.
//!
//! Conventions, fixed throughout: `[g, a] = (g·a⁻¹)·a` and
//! `[a, g] = a⁻¹·(g·a)` for `g ∈ G`, `a ∈ A`; `[f, g] = f⁻¹g⁻¹fg` in `G`;
//! products are read left to right.

mod action;
mod series;

pub use action::Action;
pub use series::{
    check_jo2, check_jo3, check_lema1, check_witt_hall, gamma_functoriality_counterexample, gamma_series, gamma_series_default, jo3_counterexample, mixed,
    mixed_commutator, mixed_rev, nil_bound_check, nil_order, quotient_action, witt_hall_counterexample,
    witt_hall_value, Bound,
};
