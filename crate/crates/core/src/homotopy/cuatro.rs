use num_bigint::BigInt;
use serde::Serialize;

use super::em::{fg_mod_p_identity, forcing_primes};
use crate::abelian::{ab_to_table, AbGroup, AbHom};
use crate::actions::{mixed_commutator, Action};
use crate::error::{Error, Result};
use crate::grpcore::{GroupTable, SeriesReport};
use crate::num::is_prime;
use crate::Limits;

/// One candidate's fate in [`check_cuatro`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateVerdict {
    pub matrix: Vec<Vec<i64>>,
    /// Every prime up to the largest forcing prime was tested.
    pub primes_tested: Vec<u64>,
    /// The first prime at which the candidate is not the identity mod `p`.
    pub rejected_at: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CuatroReport {
    pub group: String,
    pub candidates: Vec<CandidateVerdict>,
    pub survivors: usize,
    /// Order of the group generated by the survivors.
    pub generated_order: usize,
    pub free_block_identity: bool,
    pub gamma1_in_torsion: bool,
    /// `nil` of the generated group acting on `A`, if nilpotent.
    pub nil: Option<usize>,
}

impl CuatroReport {
    pub fn holds(&self) -> bool {
        self.free_block_identity && self.gamma1_in_torsion && self.nil.is_some()
    }
}

fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&q| is_prime(q)).collect()
}

/// Filters `candidates` down to `∩ₚ 𝓔♯ₚ(K(A, n))` and checks that the group
/// they generate acts nilpotently on `A`.
///
/// Membership for all primes is decided on the finite set of primes up to
/// the largest element of [`forcing_primes`]. A survivor then has identity
/// free block, so `σ(a) − a` is torsion and the series below `Γ¹` lives in
/// the finite torsion subgroup.
pub fn check_cuatro(a: &AbGroup, candidates: &[AbHom], limits: &Limits) -> Result<CuatroReport> {
    let mut verdicts = Vec::new();
    let mut survivors = Vec::new();
    for m in candidates {
        if m.source() != a || !m.is_endomorphism() || !m.is_automorphism()? {
            return Err(Error::NotAutomorphism);
        }
        let top = *forcing_primes(m)?.last().expect("at least one forcing prime");
        let primes_tested = primes_up_to(top);
        let mut rejected_at = None;
        for &p in &primes_tested {
            if !fg_mod_p_identity(m, p)? {
                rejected_at = Some(p);
                break;
            }
        }
        if rejected_at.is_none() {
            survivors.push(m.clone());
        }
        verdicts.push(CandidateVerdict { matrix: m.matrix().to_vec(), primes_tested, rejected_at });
    }

    let k = a.free_rank();
    let ident: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| i64::from(i == j)).collect()).collect();
    let free_block_identity = survivors.iter().all(|s| s.free_block() == ident);
    if !free_block_identity {
        return Err(Error::InternalInvariantViolation("a survivor has a non-identity free block".into()));
    }

    // free block I makes the generated group finite: (I,0;B,T) only ever
    // changes B and T, both reduced mod the torsion
    let (gen_table, elements) =
        GroupTable::generate(AbHom::identity(a), &survivors, |x, y| x.compose(y).expect("endomorphisms"), limits.order_cap)?;

    let n = a.num_factors();
    let mut gamma1 = Vec::new();
    let mut gamma1_in_torsion = true;
    for s in &elements {
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 1;
            let mut d = s.apply(&e);
            d[j] -= 1;
            let d = AbHom::identity(a).apply(&d);
            if d[..k].iter().any(|&x| x != 0) {
                gamma1_in_torsion = false;
            }
            gamma1.push(d[k..].to_vec());
        }
    }

    let torsion = a.torsion_subgroup();
    let t = ab_to_table(&torsion, limits.order_cap)?;
    let images: Vec<AbHom> = gen_table.generators().iter().map(|&g| elements[g as usize].torsion_block()).collect();
    let action = Action::from_matrices(gen_table.clone(), &t, &images)?;
    let nil = if a.is_trivial() {
        Some(0)
    } else if !gamma1_in_torsion {
        None
    } else {
        let start = t.table.closure(gamma1.iter().map(|c| t.index_of(c)).filter(|&x| x != 0));
        let whole = action.actor().whole();
        let rest = SeriesReport::descend(start, t.table.order().max(1), |prev| {
            mixed_commutator(&action, &whole, prev).expect("same parents")
        });
        rest.nil_order().map(|r| r + 1)
    };

    Ok(CuatroReport {
        group: a.to_string(),
        candidates: verdicts,
        survivors: survivors.len(),
        generated_order: gen_table.order(),
        free_block_identity,
        gamma1_in_torsion,
        nil,
    })
}

type Mat2 = [[BigInt; 2]; 2];

fn mat_mul(x: &Mat2, y: &Mat2) -> Mat2 {
    let e = |i: usize, j: usize| &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// Inverse of a determinant-one matrix: its adjugate.
fn mat_inv(x: &Mat2) -> Mat2 {
    [[x[1][1].clone(), -x[0][1].clone()], [-x[1][0].clone(), x[0][0].clone()]]
}

fn mat_comm(x: &Mat2, y: &Mat2) -> Mat2 {
    mat_mul(&mat_mul(&mat_inv(x), &mat_inv(y)), &mat_mul(x, y))
}

fn mat(r: [[i64; 2]; 2]) -> Mat2 {
    r.map(|row| row.map(BigInt::from))
}

/// Iterated commutators in `⟨I + 2E₁₂, I + 2E₂₁⟩ ≤ GL₂(Z)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gl2Witness {
    pub depth: usize,
    /// `nontrivial[k-1]`: whether `c_k = [c_{k−1}, x_k]` differs from `I`,
    /// which places a non-identity element in the `(k+1)`-st lower central
    /// term.
    pub nontrivial: Vec<bool>,
    /// Decimal digits of the largest entry of `c_depth`.
    pub largest_entry_digits: usize,
}

impl Gl2Witness {
    /// The lower central series is nontrivial through `depth`.
    pub fn nontrivial_through_depth(&self) -> bool {
        self.nontrivial.len() == self.depth && self.nontrivial.iter().all(|&b| b)
    }
}

/// `c₁ = [a, b]`, `c_{k+1} = [c_k, a]` or `[c_k, b]` alternately, with
/// `a = I + 2E₁₂` and `b = I + 2E₂₁`. Exact integer arithmetic.
pub fn gl2_commutator_witness(depth: usize) -> Gl2Witness {
    let a = mat([[1, 2], [0, 1]]);
    let b = mat([[1, 0], [2, 1]]);
    let id = mat([[1, 0], [0, 1]]);
    let mut nontrivial = Vec::with_capacity(depth);
    let mut c = mat_comm(&a, &b);
    for k in 1..=depth {
        if k > 1 {
            let x = if k % 2 == 0 { &a } else { &b };
            c = mat_comm(&c, x);
        }
        nontrivial.push(c != id);
    }
    let largest_entry_digits = if depth == 0 {
        0
    } else {
        c.iter().flatten().map(|e| e.magnitude().to_string().len()).max().unwrap_or(0)
    };
    Gl2Witness { depth, nontrivial, largest_entry_digits }
}

/// The two witness matrices as automorphisms of `Z²`.
pub fn gl2_witness_generators() -> [AbHom; 2] {
    let z2 = AbGroup::free(2);
    [
        AbHom::new(z2.clone(), z2.clone(), vec![vec![1, 2], vec![0, 1]]).expect("valid matrix"),
        AbHom::new(z2.clone(), z2, vec![vec![1, 0], vec![2, 1]]).expect("valid matrix"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hom(a: &AbGroup, m: Vec<Vec<i64>>) -> AbHom {
        AbHom::new(a.clone(), a.clone(), m).unwrap()
    }

    #[test]
    fn z_plus_z4() {
        let a = AbGroup::new(1, &[4]).unwrap();
        let cands = vec![
            hom(&a, vec![vec![1, 0], vec![0, 3]]),
            hom(&a, vec![vec![1, 0], vec![0, 1]]),
            hom(&a, vec![vec![1, 0], vec![2, 1]]),
            hom(&a, vec![vec![1, 0], vec![1, 1]]),
            hom(&a, vec![vec![-1, 0], vec![0, 1]]),
        ];
        let r = check_cuatro(&a, &cands, &Limits::default()).unwrap();
        assert!(r.holds());
        // ×3 on Z/4 fixes A/2A and A[2]; e₀ ↦ e₀ + e₁ moves A/2A; −1 on Z is 1 mod 2
        let rej: Vec<_> = r.candidates.iter().map(|c| c.rejected_at).collect();
        assert_eq!(rej, vec![None, None, None, Some(2), Some(3)]);
        assert_eq!(r.survivors, 3);
        assert_eq!(r.generated_order, 4);
        assert_eq!(r.nil, Some(2));
    }

    #[test]
    fn identity_only() {
        let a = AbGroup::new(1, &[4]).unwrap();
        let r = check_cuatro(&a, &[AbHom::identity(&a)], &Limits::default()).unwrap();
        assert!(r.holds());
        assert_eq!(r.nil, Some(1));
        let r = check_cuatro(&AbGroup::trivial(), &[], &Limits::default()).unwrap();
        assert_eq!(r.nil, Some(0));
    }

    #[test]
    fn gl2_witnesses_filtered() {
        let z2 = AbGroup::free(2);
        let r = check_cuatro(&z2, &gl2_witness_generators(), &Limits::default()).unwrap();
        assert_eq!(r.survivors, 0);
        assert!(r.candidates.iter().all(|c| c.rejected_at == Some(3)));
        assert!(r.holds());
        let w = gl2_commutator_witness(8);
        assert!(w.nontrivial_through_depth());
        assert!(w.largest_entry_digits > 20);
    }

    #[test]
    fn non_automorphism_rejected() {
        let z = AbGroup::free(1);
        let twice = hom(&z, vec![vec![2]]);
        assert_eq!(check_cuatro(&z, &[twice], &Limits::default()), Err(Error::NotAutomorphism));
    }
}
