use std::fmt;

use super::table::GroupTable;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub(crate) fn new(n: usize) -> Self {
        BitSet { words: vec![0; n.div_ceil(64)] }
    }

    #[inline]
    pub(crate) fn contains(&self, x: u32) -> bool {
        self.words[(x / 64) as usize] >> (x % 64) & 1 == 1
    }

    /// Returns true if `x` was not present before.
    #[inline]
    pub(crate) fn insert(&mut self, x: u32) -> bool {
        let w = &mut self.words[(x / 64) as usize];
        let bit = 1u64 << (x % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub(crate) fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub(crate) fn intersect(&self, other: &BitSet) -> BitSet {
        BitSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros();
                w &= w - 1;
                Some(k as u32 * 64 + t)
            })
        })
    }
}

/// A subgroup of a [`GroupTable`], stored as a sorted member list with a
/// generating set as witness.
///
/// Two subgroups are equal when they have the same parent and the same
/// members; generators are ignored.
#[derive(Clone)]
pub struct Subgroup {
    parent: u64,
    parent_order: usize,
    members: Vec<u32>,
    generators: Vec<u32>,
    bits: BitSet,
}

impl Subgroup {
    pub(crate) fn from_bits(parent: &GroupTable, bits: BitSet, generators: Vec<u32>) -> Self {
        let members: Vec<u32> = bits.iter().collect();
        Subgroup {
            parent: parent.fingerprint(),
            parent_order: parent.order(),
            members,
            generators,
            bits,
        }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.parent_order
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        (x as usize) < self.parent_order && self.bits.contains(x)
    }

    pub fn belongs_to(&self, g: &GroupTable) -> bool {
        self.parent == g.fingerprint() && self.parent_order == g.order()
    }

    pub fn same_parent(&self, other: &Subgroup) -> bool {
        self.parent == other.parent && self.parent_order == other.parent_order
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.same_parent(other) && self.bits.is_subset(&other.bits)
    }

    pub fn intersection(&self, g: &GroupTable, other: &Subgroup) -> Result<Subgroup> {
        if !self.same_parent(other) || !self.belongs_to(g) {
            return Err(Error::MismatchedParents);
        }
        let bits = self.bits.intersect(&other.bits);
        let members: Vec<u32> = bits.iter().collect();
        Ok(g.subgroup_from_members(&members))
    }

    pub fn join(&self, g: &GroupTable, other: &Subgroup) -> Result<Subgroup> {
        if !self.same_parent(other) || !self.belongs_to(g) {
            return Err(Error::MismatchedParents);
        }
        Ok(g.closure(self.generators.iter().chain(other.generators.iter()).copied()))
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_parent(other) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.parent.hash(state);
        self.members.hash(state);
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.members.len())
            .field("members", &self.members)
            .finish()
    }
}

/// `[H, K]`: the subgroup generated by `h⁻¹k⁻¹hk`.
pub fn commutator_subgroup(g: &GroupTable, h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
    if !h.belongs_to(g) || !k.belongs_to(g) {
        return Err(Error::MismatchedParents);
    }
    let mut seen = BitSet::new(g.order());
    let mut seed = Vec::new();
    for &a in h.members() {
        for &b in k.members() {
            let c = g.commutator(a, b);
            if seen.insert(c) {
                seed.push(c);
            }
        }
    }
    Ok(g.closure(seed))
}

pub fn center(g: &GroupTable) -> Subgroup {
    let members: Vec<u32> = g
        .elements()
        .filter(|&z| g.generators().iter().all(|&x| g.mul(z, x) == g.mul(x, z)))
        .collect();
    g.subgroup_from_members(&members)
}

pub fn is_normal(g: &GroupTable, h: &Subgroup) -> bool {
    assert!(h.belongs_to(g), "subgroup of a different parent");
    g.generators()
        .iter()
        .all(|&x| h.generators().iter().all(|&y| h.contains(g.conjugate(x, y))))
}

/// Whether `h` is mapped into itself by every permutation in `maps` (each a
/// map on the parent's index set).
pub fn is_invariant_under<'a, I>(h: &Subgroup, maps: I) -> bool
where
    I: IntoIterator<Item = &'a super::perm::Permutation>,
{
    maps.into_iter().all(|m| h.generators().iter().all(|&y| h.contains(m.apply(y))))
}

/// A quotient group together with its projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub table: GroupTable,
    /// `projection[g]` is the coset containing `g`.
    pub projection: Vec<u32>,
    /// One representative per coset, `representatives[0] = identity`.
    pub representatives: Vec<u32>,
}

pub fn quotient(g: &GroupTable, h: &Subgroup) -> Result<Quotient> {
    if !h.belongs_to(g) {
        return Err(Error::MismatchedParents);
    }
    if !is_normal(g, h) {
        return Err(Error::NotNormal);
    }
    let mut projection = vec![u32::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if projection[x as usize] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        for &m in h.members() {
            projection[g.mul(x, m) as usize] = c;
        }
    }
    let q = reps.len();
    let mut mul = Vec::with_capacity(q * q);
    for &a in &reps {
        for &b in &reps {
            mul.push(projection[g.mul(a, b) as usize]);
        }
    }
    let inv = reps.iter().map(|&a| projection[g.inv(a) as usize]).collect();
    let gens = g.generators().iter().map(|&x| projection[x as usize]).collect();
    let labels = reps.iter().map(|&r| format!("{}·H", g.label(r))).collect();
    let table = GroupTable::from_parts(q, mul, inv, gens, Some(labels));
    Ok(Quotient { table, projection, representatives: reps })
}
