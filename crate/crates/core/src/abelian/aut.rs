use std::collections::HashMap;

use super::group::AbGroup;
use super::hom::{entry_range, rank_mod_p, AbHom, EntryRange};
use crate::error::{Error, Result};
use crate::grpcore::{GroupTable, Subgroup};
use crate::num::prime_of_power;
use crate::Limits;

/// A group of automorphisms of a finite abelian group, as a table whose
/// index `i` is the matrix `maps()[i]`; the product `a·b` is `a ∘ b`.
#[derive(Debug, Clone)]
pub struct AutGroup {
    pub group: AbGroup,
    pub table: GroupTable,
    maps: Vec<AbHom>,
    index: HashMap<AbHom, u32>,
}

impl AutGroup {
    /// Builds the table of a set of automorphisms already known to form a
    /// group. Fails if the set turns out not to be closed.
    pub fn from_elements(group: &AbGroup, elements: Vec<AbHom>, cap: usize) -> Result<Self> {
        let id = AbHom::identity(group);
        let mut gens: Vec<AbHom> = Vec::new();
        let mut closed: Option<(GroupTable, Vec<AbHom>)> = None;
        let mut have: std::collections::HashSet<AbHom> = std::iter::once(id.clone()).collect();
        for f in &elements {
            if have.contains(f) {
                continue;
            }
            gens.push(f.clone());
            let (t, els) = GroupTable::generate(id.clone(), &gens, compose_maps, cap)?;
            have = els.iter().cloned().collect();
            closed = Some((t, els));
        }
        let (table, maps) = match closed {
            Some(c) => c,
            None => (GroupTable::trivial_group(), vec![id]),
        };
        if maps.len() != elements.len().max(1) {
            return Err(Error::InternalInvariantViolation(format!(
                "{} automorphisms generate a group of order {}",
                elements.len(),
                maps.len()
            )));
        }
        Ok(AutGroup::assemble(group, table, maps))
    }

    /// The subgroup of `Aut(A)` generated by `gens`.
    pub fn generated_by(group: &AbGroup, gens: &[AbHom], cap: usize) -> Result<Self> {
        for f in gens {
            if f.source() != group || f.target() != group || !f.is_automorphism()? {
                return Err(Error::NotAutomorphism);
            }
        }
        let (table, maps) = GroupTable::generate(AbHom::identity(group), gens, compose_maps, cap)?;
        Ok(AutGroup::assemble(group, table, maps))
    }

    fn assemble(group: &AbGroup, table: GroupTable, maps: Vec<AbHom>) -> Self {
        let labels = maps.iter().map(ToString::to_string).collect();
        let table = table.with_labels(labels);
        let index = maps.iter().cloned().enumerate().map(|(i, f)| (f, i as u32)).collect();
        AutGroup { group: group.clone(), table, maps, index }
    }

    pub fn order(&self) -> usize {
        self.maps.len()
    }

    pub fn map(&self, i: u32) -> &AbHom {
        &self.maps[i as usize]
    }

    pub fn maps(&self) -> &[AbHom] {
        &self.maps
    }

    pub fn index_of(&self, f: &AbHom) -> Option<u32> {
        self.index.get(f).copied()
    }

    /// The subgroup of this table generated by the given automorphisms.
    pub fn subgroup(&self, gens: &[AbHom]) -> Result<Subgroup> {
        let idx = gens
            .iter()
            .map(|f| self.index_of(f).ok_or(Error::NotAutomorphism))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.table.closure(idx))
    }
}

fn compose_maps(a: &AbHom, b: &AbHom) -> AbHom {
    a.compose(b).expect("automorphisms of one group compose")
}

/// `|Aut(A)|` for a finite abelian group, from the closed formula for the
/// automorphism count of an abelian `p`-group, multiplied over primes.
pub fn aut_order(a: &AbGroup) -> Option<u128> {
    if !a.is_finite() {
        return None;
    }
    let mut total: u128 = 1;
    for (p, lo, hi) in a.primary_blocks() {
        let p = p as u128;
        let mut es: Vec<u32> = a.torsion()[lo..hi].iter().map(|&d| exponent_of(d)).collect();
        es.sort_unstable();
        let n = es.len();
        for k in 0..n {
            let e = es[k];
            let d = es.iter().rposition(|&x| x == e).unwrap() + 1;
            let c = es.iter().position(|&x| x == e).unwrap() + 1;
            total *= p.pow(d as u32) - p.pow(k as u32);
            total *= p.pow(e * (n - d) as u32);
            total *= p.pow((e - 1) * (n - c + 1) as u32);
        }
    }
    Some(total)
}

fn exponent_of(d: u64) -> u32 {
    let p = prime_of_power(d).expect("primary factor");
    let (mut e, mut x) = (0, d);
    while x > 1 {
        x /= p;
        e += 1;
    }
    e
}

/// One row of one primary block in the backtracking search.
struct Slot {
    block: usize,
    row: usize,
    lo: usize,
    options: Vec<Vec<i64>>,
}

/// Visits every automorphism of a finite `A` whose entries `(i, j)` all
/// satisfy `accept(i, j, m)`. Entries outside the primary blocks are zero
/// for every homomorphism and are not offered to `accept`.
///
/// `visit` returns `false` to stop early.
pub(crate) fn for_each_constrained<P, V>(a: &AbGroup, limits: &Limits, accept: P, mut visit: V) -> Result<()>
where
    P: Fn(usize, usize, i64) -> bool,
    V: FnMut(&AbHom) -> bool,
{
    let Some(order) = a.order() else {
        return Err(Error::NotApplicable("automorphisms are enumerated for finite groups only".into()));
    };
    if order > limits.aut_source_cap {
        return Err(Error::TooLarge {
            what: "source group for automorphism enumeration",
            size: order as u128,
            limit: limits.aut_source_cap as u128,
        });
    }
    let blocks = a.primary_blocks();
    let mut slots = Vec::new();
    for (b, &(p, lo, hi)) in blocks.iter().enumerate() {
        for i in lo..hi {
            let mut options: Vec<Vec<i64>> = vec![Vec::new()];
            for j in lo..hi {
                let values: Vec<i64> = match entry_range(a.factor_modulus(i), a.factor_modulus(j)) {
                    EntryRange::Multiples { step, modulus } => {
                        (0..modulus).step_by(step as usize).map(|m| m as i64).filter(|&m| accept(i, j, m)).collect()
                    }
                    _ => unreachable!("finite groups have only torsion entries"),
                };
                options = options
                    .into_iter()
                    .flat_map(|row| {
                        values.iter().map(move |&m| {
                            let mut r = row.clone();
                            r.push(m);
                            r
                        })
                    })
                    .collect();
            }
            options.retain(|r| r.iter().any(|&m| m.rem_euclid(p as i64) != 0));
            slots.push(Slot { block: b, row: i - lo, lo, options });
        }
    }
    let n = a.num_factors();
    let mut matrix = vec![vec![0i64; n]; n];
    let primes: Vec<u64> = blocks.iter().map(|b| b.0).collect();
    let mut search = Search { a, slots: &slots, primes: &primes, matrix: &mut matrix, stopped: false };
    search.run(0, &mut visit);
    Ok(())
}

struct Search<'a> {
    a: &'a AbGroup,
    slots: &'a [Slot],
    primes: &'a [u64],
    matrix: &'a mut Vec<Vec<i64>>,
    stopped: bool,
}

impl Search<'_> {
    fn run<V: FnMut(&AbHom) -> bool>(&mut self, k: usize, visit: &mut V) {
        if self.stopped {
            return;
        }
        if k == self.slots.len() {
            let f = AbHom::from_reduced_unchecked(self.a.clone(), self.a.clone(), self.matrix.clone());
            if !visit(&f) {
                self.stopped = true;
            }
            return;
        }
        let slot = &self.slots[k];
        let p = self.primes[slot.block];
        let width = slot.options[0].len();
        let first_row = slot.lo;
        let i = slot.lo + slot.row;
        for opt in &slot.options {
            self.matrix[i][slot.lo..slot.lo + width].copy_from_slice(opt);
            if slot.row > 0 {
                let rows: Vec<Vec<i64>> =
                    (first_row..=i).map(|r| self.matrix[r][slot.lo..slot.lo + width].to_vec()).collect();
                if rank_mod_p(&rows, p) != slot.row + 1 {
                    continue;
                }
            }
            self.run(k + 1, visit);
            if self.stopped {
                return;
            }
        }
        self.matrix[i][slot.lo..slot.lo + width].iter_mut().for_each(|m| *m = 0);
    }
}

/// Visits every automorphism of a finite abelian group without storing
/// them.
pub fn for_each_automorphism<V: FnMut(&AbHom) -> bool>(a: &AbGroup, limits: &Limits, visit: V) -> Result<()> {
    for_each_constrained(a, limits, |_, _, _| true, visit)
}

/// All automorphisms, in enumeration order. Refuses when `|Aut(A)|`
/// exceeds the order cap.
pub fn automorphisms(a: &AbGroup, limits: &Limits) -> Result<Vec<AbHom>> {
    let size = aut_order(a)
        .ok_or_else(|| Error::NotApplicable("automorphisms are enumerated for finite groups only".into()))?;
    if size > limits.order_cap as u128 {
        return Err(Error::TooLarge { what: "automorphism group", size, limit: limits.order_cap as u128 });
    }
    collect_constrained(a, limits, |_, _, _| true)
}

pub(crate) fn collect_constrained<P>(a: &AbGroup, limits: &Limits, accept: P) -> Result<Vec<AbHom>>
where
    P: Fn(usize, usize, i64) -> bool,
{
    let mut out = Vec::new();
    let mut over = false;
    for_each_constrained(a, limits, accept, |f| {
        out.push(f.clone());
        over = out.len() > limits.order_cap;
        !over
    })?;
    if over {
        return Err(Error::TooLarge {
            what: "automorphism subgroup",
            size: out.len() as u128,
            limit: limits.order_cap as u128,
        });
    }
    Ok(out)
}

/// `aut_group`: the full automorphism group of a finite abelian group.
pub fn aut_group(a: &AbGroup, limits: &Limits) -> Result<AutGroup> {
    let maps = automorphisms(a, limits)?;
    AutGroup::from_elements(a, maps, limits.order_cap)
}

/// The kernel of `Aut(A) → Aut(A ⊗ Z/p)`: automorphisms congruent to the
/// identity modulo `p` on every factor of order divisible by `p`.
pub fn tensor_kernel(a: &AbGroup, p: u64, limits: &Limits) -> Result<AutGroup> {
    if !crate::num::is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    let maps = collect_constrained(a, limits, |i, j, m| {
        let divisible = |k: usize| a.factor_modulus(k).is_some_and(|d| d % p == 0);
        if divisible(i) && divisible(j) {
            m.rem_euclid(p as i64) == i64::from(i == j)
        } else {
            true
        }
    })?;
    AutGroup::from_elements(a, maps, limits.order_cap)
}
