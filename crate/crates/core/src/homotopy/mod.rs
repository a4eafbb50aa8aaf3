//! Self-equivalences of Eilenberg–MacLane spaces `K(A, n)`, `n ≥ 2`.
//!
//! For these spaces `𝓔(K(A, n)) = Aut(A)` and the only nonzero homotopy
//! groups with `Z/p` coefficients are `π_n = Hom(Z/p, A) = A[p]` and
//! `π_{n−1} = Ext(Z/p, A) = A/pA`, so every subgroup defined by a kernel
//! condition on `π_{≤N}` reduces to a condition on those two degrees.

mod cuatro;
mod em;
mod remarks;

pub use cuatro::{check_cuatro, gl2_commutator_witness, gl2_witness_generators, CandidateVerdict, CuatroReport, Gl2Witness};
pub use em::{
    check_tres, coeff_homotopy, eshp, eshp_by_definition, esharp, fg_mod_p_identity, forcing_primes, self_equivalences,
    CoeffHomotopy, EMSpace, TresReport,
};
pub use remarks::{
    check_coeficientes, check_importante, check_nuevo, check_remark_final, eshp_intersection, p_torsion,
    ImportanteReport, ReductionReport, RemarkFinalReport,
};
