//! Finitely generated abelian groups in primary form, homomorphisms as
//! integer matrices, automorphism enumeration and the `Z/p` functors.

mod aut;
mod functors;
mod group;
mod hom;
mod table;

pub use aut::{aut_group, aut_order, automorphisms, for_each_automorphism, tensor_kernel, AutGroup};
pub(crate) use aut::collect_constrained;
pub use functors::{
    ext_tensor_iso, ext_zp, hom_survivors, hom_zp, hom_zp_generators, induced_ext, induced_hom, induced_tensor,
    tensor_survivors, tensor_zp,
};
pub(crate) use functors::hom_coefficient;
pub use group::AbGroup;
pub use hom::{determinant, rank_mod_p, AbHom};
pub use table::{ab_to_table, AbelianTable};
