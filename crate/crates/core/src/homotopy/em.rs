use serde::Serialize;

use crate::abelian::{
    aut_group, collect_constrained, ext_zp, hom_coefficient, hom_zp, induced_ext, induced_hom, AbGroup, AbHom,
    AutGroup,
};
use crate::error::{Error, Result};
use crate::grpcore::lower_central_series_default;
use crate::num::{is_power_of, is_prime};
use crate::Limits;

/// An Eilenberg–MacLane space `K(A, n)` with `n ≥ 2`, described by its one
/// homotopy group. Its self-equivalence group is `Aut(A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EMSpace {
    coeff: AbGroup,
    degree: u32,
}

impl EMSpace {
    pub fn new(coeff: AbGroup, degree: u32) -> Result<Self> {
        if degree < 2 {
            return Err(Error::NotApplicable(format!("K(A, {degree}) needs degree at least 2")));
        }
        Ok(EMSpace { coeff, degree })
    }

    pub fn coeff(&self) -> &AbGroup {
        &self.coeff
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `π_i`: `A` in degree `n`, trivial elsewhere.
    pub fn pi(&self, i: u32) -> AbGroup {
        if i == self.degree {
            self.coeff.clone()
        } else {
            AbGroup::trivial()
        }
    }
}

/// `π_i(X; Z/p)` split as `Hom(Z/p, π_i) ⊕ Ext(Z/p, π_{i+1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffHomotopy {
    pub degree: u32,
    pub hom_part: AbGroup,
    pub ext_part: AbGroup,
}

impl CoeffHomotopy {
    pub fn total(&self) -> AbGroup {
        let p = self.hom_part.torsion().iter().chain(self.ext_part.torsion()).copied().collect::<Vec<_>>();
        AbGroup::new(0, &p).expect("elementary factors")
    }

    pub fn is_trivial(&self) -> bool {
        self.hom_part.is_trivial() && self.ext_part.is_trivial()
    }
}

pub fn coeff_homotopy(x: &EMSpace, p: u64, i: u32) -> Result<CoeffHomotopy> {
    Ok(CoeffHomotopy { degree: i, hom_part: hom_zp(&x.pi(i), p)?, ext_part: ext_zp(&x.pi(i + 1), p)? })
}

/// `𝓔(K(A, n)) = Aut(A)`.
pub fn self_equivalences(x: &EMSpace, limits: &Limits) -> Result<AutGroup> {
    aut_group(&x.coeff, limits)
}

/// `𝓔♯(K(A, n))`: classes inducing the identity on `π_n = A`, i.e. the
/// identity alone.
pub fn esharp(x: &EMSpace) -> AutGroup {
    AutGroup::from_elements(&x.coeff, vec![AbHom::identity(&x.coeff)], 1).expect("the identity is a group")
}

/// `𝓔♯ₚ(K(A, n))`: automorphisms inducing the identity on
/// `π_n(X; Z/p) = A[p]` and on `π_{n−1}(X; Z/p) = A/pA`.
///
/// Both conditions constrain single matrix entries, so the kernel is
/// enumerated directly rather than filtered out of `Aut(A)`.
pub fn eshp(x: &EMSpace, p: u64, limits: &Limits) -> Result<AutGroup> {
    if !is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    let a = &x.coeff;
    let maps = collect_constrained(a, limits, |i, j, m| {
        match (a.factor_modulus(i), a.factor_modulus(j)) {
            (Some(di), Some(dj)) if di % p == 0 && dj % p == 0 => {
                let delta = i64::from(i == j);
                m.rem_euclid(p as i64) == delta && hom_coefficient(m, di, dj, p) == delta
            }
            _ => true,
        }
    })?;
    AutGroup::from_elements(a, maps, limits.order_cap)
}

/// Membership in `𝓔♯ₚ(K(A, n))` for an automorphism of a finitely generated
/// `A`: identity on `Hom(Z/p, A)` and on `Ext(Z/p, A) = A/pA`, the latter
/// including the mod-`p` reduction of the free block.
pub fn fg_mod_p_identity(m: &AbHom, p: u64) -> Result<bool> {
    if !m.is_endomorphism() || !m.is_automorphism()? {
        return Err(Error::NotAutomorphism);
    }
    if !is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    Ok(induced_hom(m, p)?.is_identity() && induced_ext(m, p)?.is_identity())
}

/// A finite set of primes such that being the identity modulo each of them
/// forces the free block to be the identity: the least prime above
/// `1 + max |F − I|`, together with the primes of the torsion.
pub fn forcing_primes(m: &AbHom) -> Result<Vec<u64>> {
    if !m.is_endomorphism() || !m.is_automorphism()? {
        return Err(Error::NotAutomorphism);
    }
    let free = m.free_block();
    let spread = free
        .iter()
        .enumerate()
        .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, &x)| (x - i64::from(i == j)).unsigned_abs()))
        .max()
        .unwrap_or(0);
    let mut primes = vec![crate::num::next_prime_above(1 + spread)];
    primes.extend(m.source().primes());
    primes.sort_unstable();
    primes.dedup();
    Ok(primes)
}

/// What [`check_tres`] established about `𝓔♯ₚ(K(A, n))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TresReport {
    pub prime: u64,
    pub order: usize,
    pub class: Option<usize>,
    pub esharp_order: usize,
    pub quotient_order: usize,
    pub order_is_p_power: bool,
    pub quotient_is_p_group: bool,
}

impl TresReport {
    pub fn holds(&self) -> bool {
        self.order_is_p_power && self.class.is_some() && self.quotient_is_p_group
    }
}

/// Nilpotency of `𝓔♯ₚ(K(A, n))` for an abelian `p`-group `A`, and the
/// quotient by `𝓔♯` being a `p`-group.
pub fn check_tres(x: &EMSpace, p: u64, limits: &Limits) -> Result<TresReport> {
    if x.coeff.p_group_prime() != Some(p) {
        return Err(Error::NotApplicable(format!("{} is not a {p}-group", x.coeff)));
    }
    let e = eshp(x, p, limits)?;
    let sharp = esharp(x);
    let order = e.order();
    let class = lower_central_series_default(&e.table).nil_order();
    let quotient_order = order / sharp.order();
    Ok(TresReport {
        prime: p,
        order,
        class,
        esharp_order: sharp.order(),
        quotient_order,
        order_is_p_power: is_power_of(order as u64, p),
        quotient_is_p_group: is_power_of(quotient_order as u64, p),
    })
}

/// `𝓔♯ₚ` recomputed from its definition: filter every automorphism through
/// its induced maps on `π_n(X; Z/p)` and `π_{n−1}(X; Z/p)`, the only
/// nonzero coefficient groups of `K(A, n)`.
pub fn eshp_by_definition(x: &EMSpace, p: u64, limits: &Limits) -> Result<Vec<AbHom>> {
    let top = coeff_homotopy(x, p, x.degree)?;
    let below = coeff_homotopy(x, p, x.degree - 1)?;
    if !top.ext_part.is_trivial() || !below.hom_part.is_trivial() {
        return Err(Error::InternalInvariantViolation("K(A, n) has homotopy outside degree n".into()));
    }
    let mut out = Vec::new();
    let mut err = None;
    crate::abelian::for_each_automorphism(&x.coeff, limits, |f| {
        match (induced_hom(f, p), induced_ext(f, p)) {
            (Ok(h), Ok(e)) => {
                debug_assert!(h.source() == &top.hom_part && e.source() == &below.ext_part);
                if h.is_identity() && e.is_identity() {
                    out.push(f.clone());
                }
                true
            }
            (Err(e), _) | (_, Err(e)) => {
                err = Some(e);
                false
            }
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grpcore::Verdict;

    fn lim() -> Limits {
        Limits::default()
    }

    fn k(spec: &[u64]) -> EMSpace {
        EMSpace::new(AbGroup::from_spec(spec).unwrap(), 3).unwrap()
    }

    #[test]
    fn degree_is_at_least_two() {
        assert!(EMSpace::new(AbGroup::cyclic(2), 1).is_err());
        assert!(EMSpace::new(AbGroup::cyclic(2), 2).is_ok());
    }

    #[test]
    fn self_equivalence_examples() {
        assert_eq!(self_equivalences(&k(&[2, 2]), &lim()).unwrap().order(), 6);
        assert_eq!(self_equivalences(&k(&[2]), &lim()).unwrap().order(), 1);
        assert_eq!(self_equivalences(&k(&[4]), &lim()).unwrap().order(), 2);
    }

    #[test]
    fn coefficient_groups() {
        let x = k(&[8]);
        let top = coeff_homotopy(&x, 2, 3).unwrap();
        let below = coeff_homotopy(&x, 2, 2).unwrap();
        assert_eq!(top.total(), AbGroup::cyclic(2));
        assert_eq!(below.total(), AbGroup::cyclic(2));
        assert!(coeff_homotopy(&x, 2, 5).unwrap().is_trivial());
        assert!(coeff_homotopy(&x, 2, 1).unwrap().is_trivial());
        let y = k(&[0, 4]);
        assert_eq!(coeff_homotopy(&y, 2, 3).unwrap().hom_part, AbGroup::cyclic(2));
        assert_eq!(coeff_homotopy(&y, 2, 2).unwrap().ext_part, AbGroup::elementary(2, 2));
    }

    #[test]
    fn eshp_examples() {
        let x = k(&[4]);
        let e = eshp(&x, 2, &lim()).unwrap();
        assert_eq!(e.order(), 2);
        assert!(e.index_of(&AbHom::scalar(x.coeff(), 3)).is_some());
        assert_eq!(esharp(&x).order(), 1);
        let klein = k(&[2, 2]);
        assert_eq!(eshp(&klein, 3, &lim()).unwrap().order(), 6);
        assert_eq!(eshp(&k(&[2]), 2, &lim()).unwrap().order(), 1);
    }

    #[test]
    fn two_paths_agree() {
        for spec in [&[4u64][..], &[8, 2], &[4, 2, 2], &[9, 3], &[2, 2, 2], &[25], &[4, 4]] {
            let x = k(spec);
            let p = x.coeff().p_group_prime().unwrap();
            let mut direct: Vec<AbHom> = eshp(&x, p, &lim()).unwrap().maps().to_vec();
            let mut by_def = eshp_by_definition(&x, p, &lim()).unwrap();
            let key = |f: &AbHom| f.matrix().to_vec();
            direct.sort_by_key(key);
            by_def.sort_by_key(key);
            assert_eq!(direct, by_def, "{spec:?}");
        }
    }

    #[test]
    fn tres_examples() {
        let r = check_tres(&k(&[4]), 2, &lim()).unwrap();
        assert_eq!((r.order, r.class, r.quotient_order), (2, Some(1), 2));
        assert!(r.holds());
        let r = check_tres(&k(&[2]), 2, &lim()).unwrap();
        assert_eq!((r.order, r.class), (1, Some(0)));
        assert!(check_tres(&k(&[4, 2]), 2, &lim()).unwrap().holds());
        assert!(matches!(check_tres(&k(&[4]), 3, &lim()), Err(Error::NotApplicable(_))));
        let full = eshp(&k(&[2, 2]), 3, &lim()).unwrap();
        let lcs = lower_central_series_default(&full.table);
        assert_eq!(lcs.verdict, Verdict::StabilizedNontrivial { depth: 1 });
        assert_eq!(lcs.stabilized().unwrap().order(), 3);
    }

    #[test]
    fn mod_p_identity() {
        let z2 = AbGroup::free(2);
        let m = AbHom::new(z2.clone(), z2.clone(), vec![vec![1, 2], vec![0, 1]]).unwrap();
        assert!(fg_mod_p_identity(&m, 2).unwrap());
        assert!(!fg_mod_p_identity(&m, 3).unwrap());
        assert!(fg_mod_p_identity(&AbHom::identity(&z2), 7).unwrap());
        assert_eq!(forcing_primes(&AbHom::identity(&z2)).unwrap(), vec![2]);
        let bad = AbHom::new(z2.clone(), z2.clone(), vec![vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!(fg_mod_p_identity(&bad, 2), Err(Error::NotAutomorphism));
        let m = AbHom::new(z2.clone(), z2.clone(), vec![vec![4, 3], vec![-3, -2]]).unwrap();
        assert_eq!(forcing_primes(&m).unwrap(), vec![5]);
        assert!(!fg_mod_p_identity(&m, 5).unwrap());
        // |entries| ≤ 4 gives |M − I| ≤ 5 < 7, so M ≡ I mod 7 only for M = I
        let mut id_mod_7 = 0;
        for a in -4i64..=4 {
            for b in -4i64..=4 {
                for c in -4i64..=4 {
                    for d in -4i64..=4 {
                        if (a * d - b * c).abs() != 1 {
                            continue;
                        }
                        let m = AbHom::new(z2.clone(), z2.clone(), vec![vec![a, b], vec![c, d]]).unwrap();
                        if fg_mod_p_identity(&m, 7).unwrap() {
                            id_mod_7 += 1;
                            assert!(m.is_identity());
                        }
                    }
                }
            }
        }
        assert_eq!(id_mod_7, 1);
    }
}
