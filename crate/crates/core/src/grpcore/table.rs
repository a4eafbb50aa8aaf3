use std::collections::hash_map::{DefaultHasher, Entry};
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use super::perm::Permutation;
use super::subgroup::{BitSet, Subgroup};
use crate::error::{Error, Result};

/// A finite group given by its full multiplication table.
///
/// Element `0` is always the identity. `mul(a, b)` is the product `a·b`.
/// Tables are immutable once built, so any `Subgroup` can refer back to
/// its parent through a content fingerprint.
#[derive(Clone)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<u32>,
    labels: Option<Vec<String>>,
    fingerprint: u64,
}

/// The axiom that failed in [`GroupTable::check_axioms`], with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    NotAssociative { a: u32, b: u32, c: u32 },
    IdentityFails { a: u32 },
    InverseFails { a: u32 },
    NotGenerating { span: usize },
}

impl GroupTable {
    /// Validates a Cayley table (rows are left factors) and builds a group.
    ///
    /// Runs the full `O(n³)` axiom check, so intended for hand-supplied or
    /// small tables; the internal constructors skip it because their
    /// multiplication is inherited from an associative representation.
    pub fn from_cayley(rows: Vec<Vec<u32>>, generators: Vec<u32>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        let mut mul = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::InvalidTable("table is not square".into()));
            }
            if row.iter().any(|&x| x as usize >= n) {
                return Err(Error::InvalidTable("entry out of range".into()));
            }
            mul.extend_from_slice(row);
        }
        let mut inv = vec![u32::MAX; n];
        for a in 0..n {
            if let Some(b) = (0..n).find(|&b| mul[a * n + b] == 0) {
                inv[a] = b as u32;
            }
        }
        if inv.contains(&u32::MAX) {
            return Err(Error::InvalidTable("some element has no right inverse for element 0".into()));
        }
        if generators.iter().any(|&g| g as usize >= n) {
            return Err(Error::InvalidTable("generator out of range".into()));
        }
        let table = GroupTable::from_parts(n, mul, inv, generators, None);
        if let Err(v) = table.check_axioms() {
            return Err(Error::InvalidTable(format!("{v:?}")));
        }
        Ok(table)
    }

    pub(crate) fn from_parts(
        order: usize,
        mul: Vec<u32>,
        inv: Vec<u32>,
        mut generators: Vec<u32>,
        labels: Option<Vec<String>>,
    ) -> Self {
        generators.retain(|&g| g != 0);
        let mut seen = BitSet::new(order);
        generators.retain(|&g| seen.insert(g));
        let mut h = DefaultHasher::new();
        order.hash(&mut h);
        mul.hash(&mut h);
        GroupTable { order, mul, inv, generators, labels, fingerprint: h.finish() }
    }

    /// Closes `gens` under `compose` and returns the resulting table
    /// together with the concrete element behind each index.
    ///
    /// `compose(a, b)` must be an associative product with two-sided
    /// `identity`; the table is filled from the right Cayley graph, so only
    /// `|G|·|gens|` calls to `compose` are made.
    pub fn generate<T, F>(identity: T, gens: &[T], compose: F, cap: usize) -> Result<(Self, Vec<T>)>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<T, u32> = HashMap::new();
        index.insert(identity, 0);
        // parent[x] = (p, s) with x = p·gens[s]
        let mut parent: Vec<(u32, u32)> = vec![(0, 0)];
        let mut right: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            for (s, g) in gens.iter().enumerate() {
                let y = compose(&x, g);
                let next = elements.len() as u32;
                let idx = match index.entry(y) {
                    Entry::Occupied(e) => *e.get(),
                    Entry::Vacant(e) => {
                        if elements.len() >= cap {
                            return Err(Error::ClosureExceedsCap { cap });
                        }
                        elements.push(e.key().clone());
                        e.insert(next);
                        parent.push((head as u32, s as u32));
                        next
                    }
                };
                right[s].push(idx);
            }
            head += 1;
        }
        let n = elements.len();
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            mul[a * n] = a as u32;
        }
        for b in 1..n {
            let (p, s) = parent[b];
            for a in 0..n {
                let ap = mul[a * n + p as usize];
                mul[a * n + b] = right[s as usize][ap as usize];
            }
        }
        let mut inv = vec![0u32; n];
        for a in 0..n {
            inv[a] = (0..n).find(|&b| mul[a * n + b] == 0).expect("finite closure has inverses") as u32;
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        Ok((GroupTable::from_parts(n, mul, inv, generators, None), elements))
    }

    /// The trivial group.
    pub fn trivial_group() -> Self {
        GroupTable::from_parts(1, vec![0], vec![0], Vec::new(), None)
    }

    /// The cyclic group `Z/n` with element `k` standing for `k`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let mul = (0..n).flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32)).collect();
        let inv = (0..n).map(|a| ((n - a) % n) as u32).collect();
        let gens = if n > 1 { vec![1] } else { Vec::new() };
        GroupTable::from_parts(n, mul, inv, gens, None)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> u32 {
        0
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    /// The group commutator `a⁻¹b⁻¹ab`.
    #[inline]
    pub fn commutator(&self, a: u32, b: u32) -> u32 {
        let ab = self.mul(a, b);
        self.mul(self.mul(self.inv(a), self.inv(b)), ab)
    }

    /// `a·x·a⁻¹`.
    #[inline]
    pub fn conjugate(&self, a: u32, x: u32) -> u32 {
        self.mul(self.mul(a, x), self.inv(a))
    }

    pub fn pow(&self, a: u32, mut k: u64) -> u32 {
        let mut base = a;
        let mut acc = 0;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: u32) -> u64 {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order as u32
    }

    pub fn label(&self, a: u32) -> String {
        match &self.labels {
            Some(l) => l[a as usize].clone(),
            None => a.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub(crate) fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn is_abelian(&self) -> bool {
        // generators commuting pairwise is enough
        self.generators
            .iter()
            .all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Exhaustive check of associativity, identity, inverses and that the
    /// generator list spans the group.
    pub fn check_axioms(&self) -> Result<(), AxiomViolation> {
        let n = self.order as u32;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(AxiomViolation::IdentityFails { a });
            }
            let ia = self.inv(a);
            if self.mul(a, ia) != 0 || self.mul(ia, a) != 0 {
                return Err(AxiomViolation::InverseFails { a });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(AxiomViolation::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let span = self.closure(self.generators.iter().copied()).order();
        if span != self.order {
            return Err(AxiomViolation::NotGenerating { span });
        }
        Ok(())
    }

    /// The smallest subgroup containing `seed`.
    pub fn closure<I: IntoIterator<Item = u32>>(&self, seed: I) -> Subgroup {
        let mut bits = BitSet::new(self.order);
        bits.insert(0);
        let mut members = vec![0u32];
        let mut gens: Vec<u32> = Vec::new();
        for s in seed {
            assert!((s as usize) < self.order, "seed element {s} out of range");
            if bits.contains(s) {
                continue;
            }
            gens.push(s);
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                for &g in &gens {
                    let y = self.mul(x, g);
                    if bits.insert(y) {
                        members.push(y);
                    }
                }
                head += 1;
            }
        }
        Subgroup::from_bits(self, bits, gens)
    }

    pub fn whole(&self) -> Subgroup {
        let mut bits = BitSet::new(self.order);
        for a in 0..self.order as u32 {
            bits.insert(a);
        }
        Subgroup::from_bits(self, bits, self.generators.clone())
    }

    pub fn trivial(&self) -> Subgroup {
        let mut bits = BitSet::new(self.order);
        bits.insert(0);
        Subgroup::from_bits(self, bits, Vec::new())
    }

    /// Builds a subgroup from a member set already known to be closed.
    pub(crate) fn subgroup_from_members(&self, members: &[u32]) -> Subgroup {
        let mut bits = BitSet::new(self.order);
        for &m in members {
            bits.insert(m);
        }
        let gens = self.generating_set(members);
        Subgroup::from_bits(self, bits, gens)
    }

    fn generating_set(&self, members: &[u32]) -> Vec<u32> {
        self.closure(members.iter().copied()).generators().to_vec()
    }

    /// Materializes a subgroup as a group in its own right. The returned
    /// embedding sends each new index to its index in `self`.
    pub fn subtable(&self, h: &Subgroup) -> SubTable {
        assert!(h.belongs_to(self), "subgroup of a different parent");
        let members = h.members();
        let m = members.len();
        let mut pos = vec![u32::MAX; self.order];
        for (k, &x) in members.iter().enumerate() {
            pos[x as usize] = k as u32;
        }
        let mut mul = Vec::with_capacity(m * m);
        for &a in members {
            for &b in members {
                mul.push(pos[self.mul(a, b) as usize]);
            }
        }
        let inv = members.iter().map(|&a| pos[self.inv(a) as usize]).collect();
        let gens = h.generators().iter().map(|&g| pos[g as usize]).collect();
        let labels = self.labels.as_ref().map(|l| members.iter().map(|&a| l[a as usize].clone()).collect());
        SubTable {
            table: GroupTable::from_parts(m, mul, inv, gens, labels),
            embedding: members.to_vec(),
        }
    }

    /// The left regular representation of every element, as permutations of
    /// the index set.
    pub fn regular_permutation(&self, a: u32) -> Permutation {
        Permutation::from_images_unchecked((0..self.order as u32).map(|x| self.mul(a, x)).collect())
    }
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupTable")
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for GroupTable {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}

impl Eq for GroupTable {}

/// A subgroup materialized as its own table.
#[derive(Debug, Clone)]
pub struct SubTable {
    pub table: GroupTable,
    /// `embedding[k]` is the parent index of subtable element `k`.
    pub embedding: Vec<u32>,
}

impl SubTable {
    /// Parent index to subtable index.
    pub fn position(&self, parent_index: u32) -> Option<u32> {
        self.embedding.binary_search(&parent_index).ok().map(|k| k as u32)
    }
}

/// `group_from_perms`: closes a set of permutations of the given degree.
pub fn group_from_perms(degree: usize, gens: &[Permutation], cap: usize) -> Result<(GroupTable, Vec<Permutation>)> {
    if degree == 0 {
        return Err(Error::InvalidPermutation("degree must be positive".into()));
    }
    for g in gens {
        if g.degree() != degree {
            return Err(Error::InvalidPermutation(format!(
                "generator {g} has degree {} instead of {degree}",
                g.degree()
            )));
        }
    }
    let (table, elements) = GroupTable::generate(Permutation::identity(degree), gens, |a, b| a.compose(b), cap)?;
    let labels = elements.iter().map(|p| p.to_string()).collect();
    Ok((table.with_labels(labels), elements))
}
