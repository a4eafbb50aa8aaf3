//! Maximal subgroups, the Frattini subgroup `Φ(G)` and the Frattini factor
//! `G/Φ(G)`, with the nilpotency criteria that pass through it.

mod checks;
mod lattice;

pub use checks::{
    abelian_p_prime, check_corolario, check_frattini_characteristic, check_nuevolema, check_propodos, check_propouno, check_uno, frattini_action,
    frattini_naturality, p_multiples, tensor_action,
};
pub use lattice::{
    all_subgroups, frattini_factor, frattini_factor_abelian, frattini_subgroup, maximal_subgroups, AbelianFrattini,
};
