//! The functors `− ⊗ Z/p`, `Hom(Z/p, −)` and `Ext(Z/p, −)` on finitely
//! generated abelian groups in primary form.
//!
//! All three act factorwise. A factor `Z` contributes `Z/p` to the tensor
//! and Ext sides and nothing to Hom; a factor `Z/d` contributes `Z/p` to
//! each side when `p | d` and nothing otherwise.

use super::group::AbGroup;
use super::hom::AbHom;
use crate::error::{Error, Result};
use crate::num::is_prime;

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidPrime(p))
    }
}

/// Factor indices that survive `− ⊗ Z/p` (equivalently `Ext(Z/p, −)`).
pub fn tensor_survivors(a: &AbGroup, p: u64) -> Vec<usize> {
    (0..a.num_factors()).filter(|&i| a.factor_modulus(i).is_none_or(|d| d % p == 0)).collect()
}

/// Factor indices that survive `Hom(Z/p, −)`.
pub fn hom_survivors(a: &AbGroup, p: u64) -> Vec<usize> {
    (a.free_rank()..a.num_factors()).filter(|&i| a.factor_modulus(i).is_some_and(|d| d % p == 0)).collect()
}

pub fn tensor_zp(a: &AbGroup, p: u64) -> Result<AbGroup> {
    check_prime(p)?;
    Ok(AbGroup::elementary(p, tensor_survivors(a, p).len()))
}

/// The map `f ⊗ Z/p`: entrywise reduction mod `p` on surviving factors.
pub fn induced_tensor(f: &AbHom, p: u64) -> Result<AbHom> {
    let src = tensor_survivors(f.source(), p);
    let tgt = tensor_survivors(f.target(), p);
    let matrix = tgt.iter().map(|&i| src.iter().map(|&j| f.entry(i, j).rem_euclid(p as i64)).collect()).collect();
    AbHom::new(tensor_zp(f.source(), p)?, tensor_zp(f.target(), p)?, matrix)
}

/// `Hom(Z/p, A) = A[p]`, the elements of order dividing `p`.
pub fn hom_zp(a: &AbGroup, p: u64) -> Result<AbGroup> {
    check_prime(p)?;
    Ok(AbGroup::elementary(p, hom_survivors(a, p).len()))
}

/// The basis of `A[p]` inside `A`: `(dᵢ/p)·eᵢ` for each surviving factor.
pub fn hom_zp_generators(a: &AbGroup, p: u64) -> Vec<Vec<i64>> {
    hom_survivors(a, p)
        .into_iter()
        .map(|i| {
            let mut v = vec![0i64; a.num_factors()];
            v[i] = (a.factor_modulus(i).unwrap() / p) as i64;
            v
        })
        .collect()
}

/// Coefficient of the `A[p]` basis vector of factor `i` in the image of the
/// basis vector of factor `j` under an entry `m`.
pub(crate) fn hom_coefficient(m: i64, di: u64, dj: u64, p: u64) -> i64 {
    let image = (m as i128 * (dj / p) as i128).rem_euclid(di as i128);
    let unit = (di / p) as i128;
    debug_assert_eq!(image % unit, 0);
    ((image / unit) % p as i128) as i64
}

/// The map `Hom(Z/p, f)`: restriction of `f` to `A[p]`.
pub fn induced_hom(f: &AbHom, p: u64) -> Result<AbHom> {
    let src = hom_survivors(f.source(), p);
    let tgt = hom_survivors(f.target(), p);
    let matrix = tgt
        .iter()
        .map(|&i| {
            let di = f.target().factor_modulus(i).unwrap();
            src.iter().map(|&j| hom_coefficient(f.entry(i, j), di, f.source().factor_modulus(j).unwrap(), p)).collect()
        })
        .collect();
    AbHom::new(hom_zp(f.source(), p)?, hom_zp(f.target(), p)?, matrix)
}

/// `Ext(Z/p, A) = A/pA`.
pub fn ext_zp(a: &AbGroup, p: u64) -> Result<AbGroup> {
    tensor_zp(a, p)
}

/// The map `Ext(Z/p, f)` induced on `A/pA`.
pub fn induced_ext(f: &AbHom, p: u64) -> Result<AbHom> {
    induced_tensor(f, p)
}

/// The natural isomorphism `Ext(Z/p, A) → A ⊗ Z/p`. Both sides are the
/// cokernel of multiplication by `p` with the same factor basis, so the
/// matrix is the identity.
pub fn ext_tensor_iso(a: &AbGroup, p: u64) -> Result<AbHom> {
    Ok(AbHom::identity(&ext_zp(a, p)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::{ab_to_table, aut_group};
    use crate::Limits;

    #[test]
    fn tensor_examples() {
        assert_eq!(tensor_zp(&AbGroup::cyclic(8), 2).unwrap(), AbGroup::cyclic(2));
        assert!(tensor_zp(&AbGroup::cyclic(9), 2).unwrap().is_trivial());
        assert_eq!(tensor_zp(&AbGroup::from_spec(&[0, 4]).unwrap(), 2).unwrap(), AbGroup::elementary(2, 2));
        assert_eq!(tensor_zp(&AbGroup::cyclic(8), 6), Err(Error::InvalidPrime(6)));
    }

    #[test]
    fn hom_and_ext_examples() {
        let z4 = AbGroup::cyclic(4);
        assert_eq!(hom_zp(&z4, 2).unwrap(), AbGroup::cyclic(2));
        assert_eq!(hom_zp_generators(&z4, 2), vec![vec![2]]);
        assert!(hom_zp(&AbGroup::free(3), 5).unwrap().is_trivial());
        assert_eq!(ext_zp(&z4, 2).unwrap(), AbGroup::cyclic(2));
        let rho = AbHom::scalar(&z4, 3);
        assert!(induced_ext(&rho, 2).unwrap().is_identity());
        assert!(induced_hom(&rho, 2).unwrap().is_identity());
        let a = AbGroup::from_spec(&[0, 4]).unwrap();
        assert_eq!(hom_zp(&a, 2).unwrap(), AbGroup::cyclic(2));
        assert_eq!(ext_zp(&a, 2).unwrap(), AbGroup::elementary(2, 2));
    }

    #[test]
    fn hom_side_is_the_p_torsion() {
        let a = AbGroup::new(0, &[8, 2, 3]).unwrap();
        let t = ab_to_table(&a, 100).unwrap();
        let gens: Vec<u32> = hom_zp_generators(&a, 2).iter().map(|v| t.index_of(v)).collect();
        let sub = t.table.closure(gens);
        let torsion: Vec<u32> = t.table.elements().filter(|&x| 2 % t.table.element_order(x) == 0).collect();
        assert_eq!(sub.members(), torsion.as_slice());
    }

    #[test]
    fn functoriality_and_naturality() {
        let a = AbGroup::new(0, &[4, 2]).unwrap();
        let aut = aut_group(&a, &Limits::default()).unwrap();
        let iso = ext_tensor_iso(&a, 2).unwrap();
        for f in aut.maps() {
            for g in aut.maps() {
                let fg = f.compose(g).unwrap();
                let lhs = induced_tensor(&fg, 2).unwrap();
                assert_eq!(lhs, induced_tensor(f, 2).unwrap().compose(&induced_tensor(g, 2).unwrap()).unwrap());
                let lhs = induced_hom(&fg, 2).unwrap();
                assert_eq!(lhs, induced_hom(f, 2).unwrap().compose(&induced_hom(g, 2).unwrap()).unwrap());
            }
            let e = induced_ext(f, 2).unwrap();
            assert_eq!(iso.compose(&e).unwrap(), induced_tensor(f, 2).unwrap().compose(&iso).unwrap());
        }
        assert_eq!(hom_zp(&a, 2).unwrap().num_factors(), ext_zp(&a, 2).unwrap().num_factors());
    }
}
