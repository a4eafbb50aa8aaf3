use crate::abelian::{ab_to_table, AbHom, AbelianTable, AutGroup};
use crate::error::{Error, Result};
use crate::grpcore::{group_from_perms, quotient, GroupTable, Permutation, Quotient, Subgroup};

/// A left action of a finite group `G` on a finite group `A` by
/// automorphisms.
///
/// Only generator images are supplied; the image of every element of `G`
/// is computed and validated once, at construction.
#[derive(Debug, Clone)]
pub struct Action {
    actor: GroupTable,
    target: GroupTable,
    full: Vec<Permutation>,
}

fn is_automorphism_of(a: &GroupTable, p: &Permutation) -> bool {
    p.degree() == a.order()
        && p.apply(0) == 0
        && a.generators().iter().all(|&s| a.elements().all(|x| p.apply(a.mul(x, s)) == a.mul(p.apply(x), p.apply(s))))
}

impl Action {
    /// `images[k]` is the automorphism assigned to `actor.generators()[k]`.
    pub fn new(actor: GroupTable, target: GroupTable, images: Vec<Permutation>) -> Result<Self> {
        if images.len() != actor.generators().len() {
            return Err(Error::InvalidAction(format!(
                "{} generator images given for {} generators",
                images.len(),
                actor.generators().len()
            )));
        }
        for (k, p) in images.iter().enumerate() {
            if !is_automorphism_of(&target, p) {
                return Err(Error::InvalidAction(format!("image of generator {k} is not an automorphism")));
            }
        }
        let n = actor.order();
        let mut full: Vec<Option<Permutation>> = vec![None; n];
        full[0] = Some(Permutation::identity(target.order()));
        let mut queue = vec![0u32];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (k, &s) in actor.generators().iter().enumerate() {
                let y = actor.mul(x, s);
                if full[y as usize].is_none() {
                    full[y as usize] = Some(full[x as usize].as_ref().unwrap().compose(&images[k]));
                    queue.push(y);
                }
            }
        }
        let full: Vec<Permutation> = full
            .into_iter()
            .map(|p| p.ok_or_else(|| Error::InvalidAction("generators do not generate the actor".into())))
            .collect::<Result<_>>()?;
        // consistency along every Cayley edge makes the extension a homomorphism
        for x in actor.elements() {
            for (k, &s) in actor.generators().iter().enumerate() {
                if full[actor.mul(x, s) as usize] != full[x as usize].compose(&images[k]) {
                    return Err(Error::InvalidAction("generator images violate a relation of the actor".into()));
                }
            }
        }
        Ok(Action { actor, target, full })
    }

    pub fn trivial(actor: GroupTable, target: GroupTable) -> Self {
        let id = Permutation::identity(target.order());
        let full = vec![id; actor.order()];
        Action { actor, target, full }
    }

    /// `G` acting on itself by `g·a = g a g⁻¹`.
    pub fn conjugation(g: &GroupTable) -> Self {
        let full = g
            .elements()
            .map(|x| Permutation::from_images_unchecked(g.elements().map(|a| g.conjugate(x, a)).collect()))
            .collect();
        Action { actor: g.clone(), target: g.clone(), full }
    }

    /// The group generated by some automorphisms of `target`, acting on it.
    pub fn from_permutations(target: GroupTable, perms: &[Permutation], cap: usize) -> Result<Self> {
        for p in perms {
            if !is_automorphism_of(&target, p) {
                return Err(Error::InvalidAction(format!("{p} is not an automorphism")));
            }
        }
        let (actor, elements) = group_from_perms(target.order(), perms, cap)?;
        Ok(Action { actor, target, full: elements })
    }

    /// A group of automorphisms of a finite abelian group acting on it.
    pub fn tautological(aut: &AutGroup, cap: usize) -> Result<(Self, AbelianTable)> {
        let t = ab_to_table(&aut.group, cap)?;
        let full = aut.maps().iter().map(|f| t.permutation_of(f)).collect::<Result<Vec<_>>>()?;
        Ok((Action { actor: aut.table.clone(), target: t.table.clone(), full }, t))
    }

    /// An action on an abelian table given by one matrix per actor generator.
    pub fn from_matrices(actor: GroupTable, target: &AbelianTable, images: &[AbHom]) -> Result<Self> {
        let perms = images.iter().map(|f| target.permutation_of(f)).collect::<Result<Vec<_>>>()?;
        Action::new(actor, target.table.clone(), perms)
    }

    pub fn actor(&self) -> &GroupTable {
        &self.actor
    }

    pub fn target(&self) -> &GroupTable {
        &self.target
    }

    pub fn act(&self, g: u32, a: u32) -> u32 {
        self.full[g as usize].apply(a)
    }

    /// The automorphism of `A` assigned to `g`.
    pub fn automorphism(&self, g: u32) -> &Permutation {
        &self.full[g as usize]
    }

    /// Images of the actor's generators.
    pub fn generator_images(&self) -> Vec<&Permutation> {
        self.actor.generators().iter().map(|&s| &self.full[s as usize]).collect()
    }

    pub fn is_faithful(&self) -> bool {
        self.full.iter().skip(1).all(|p| !p.is_identity())
    }

    pub fn is_trivial(&self) -> bool {
        self.full.iter().all(Permutation::is_identity)
    }

    /// The image of `G` in `Aut(A)` as a permutation group on `A`.
    pub fn image_group(&self, cap: usize) -> Result<GroupTable> {
        let gens: Vec<Permutation> = self.generator_images().into_iter().cloned().collect();
        Ok(group_from_perms(self.target.order(), &gens, cap)?.0)
    }

    /// True when every element of `G` maps `b` into itself.
    pub fn is_invariant(&self, b: &Subgroup) -> bool {
        self.generator_images().iter().all(|p| b.generators().iter().all(|&x| b.contains(p.apply(x))))
    }

    /// The same action of a subgroup of `G`.
    pub fn restrict(&self, h: &Subgroup) -> Result<Action> {
        if !h.belongs_to(&self.actor) {
            return Err(Error::MismatchedParents);
        }
        let sub = self.actor.subtable(h);
        let full = sub.embedding.iter().map(|&x| self.full[x as usize].clone()).collect();
        Ok(Action { actor: sub.table, target: self.target.clone(), full })
    }

    /// The action on a `G`-invariant subgroup `B` of `A`, with `B` as its own
    /// table. Returns the embedding of `B` into `A` as well.
    pub fn on_subgroup(&self, b: &Subgroup) -> Result<(Action, Vec<u32>)> {
        if !b.belongs_to(&self.target) {
            return Err(Error::MismatchedParents);
        }
        if !self.is_invariant(b) {
            return Err(Error::InvalidAction("subgroup is not invariant under the action".into()));
        }
        let sub = self.target.subtable(b);
        let full = self
            .full
            .iter()
            .map(|p| {
                Permutation::from_images_unchecked(
                    sub.embedding.iter().map(|&x| sub.position(p.apply(x)).expect("invariant")).collect(),
                )
            })
            .collect();
        Ok((Action { actor: self.actor.clone(), target: sub.table, full }, sub.embedding))
    }

    /// The induced action on `A/N` for a normal `G`-invariant `N`.
    pub fn on_quotient(&self, n: &Subgroup) -> Result<(Action, Quotient)> {
        if !n.belongs_to(&self.target) {
            return Err(Error::MismatchedParents);
        }
        if !self.is_invariant(n) {
            return Err(Error::InvalidAction("subgroup is not invariant under the action".into()));
        }
        let q = quotient(&self.target, n)?;
        let full = self
            .full
            .iter()
            .map(|p| {
                Permutation::from_images_unchecked(
                    q.representatives.iter().map(|&r| q.projection[p.apply(r) as usize]).collect(),
                )
            })
            .collect();
        Ok((Action { actor: self.actor.clone(), target: q.table.clone(), full }, q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::{aut_group, AbGroup};
    use crate::Limits;

    fn s3() -> GroupTable {
        let gens = [Permutation::parse_cycles(3, "(0 1)").unwrap(), Permutation::parse_cycles(3, "(0 1 2)").unwrap()];
        group_from_perms(3, &gens, 10).unwrap().0
    }

    #[test]
    fn act_examples() {
        let t = Action::trivial(s3(), GroupTable::cyclic(4));
        assert!(t.actor().elements().all(|g| t.target().elements().all(|a| t.act(g, a) == a)));

        let aut = aut_group(&AbGroup::cyclic(4), &Limits::default()).unwrap();
        let (act, z4) = Action::tautological(&aut, 100).unwrap();
        let three = aut.index_of(&AbHom::scalar(&AbGroup::cyclic(4), 3)).unwrap();
        assert_eq!(act.act(three, z4.index_of(&[1])), z4.index_of(&[3]));

        let g = s3();
        let c = Action::conjugation(&g);
        for x in g.elements() {
            for a in g.elements() {
                assert_eq!(c.act(x, a), g.mul(g.mul(x, a), g.inv(x)));
            }
        }
    }

    #[test]
    fn left_action_law() {
        let g = s3();
        let c = Action::conjugation(&g);
        for x in g.elements() {
            for y in g.elements() {
                for a in g.elements() {
                    assert_eq!(c.act(g.mul(x, y), a), c.act(x, c.act(y, a)));
                }
            }
        }
    }

    #[test]
    fn validation() {
        let z4 = ab_to_table(&AbGroup::cyclic(4), 100).unwrap();
        // a generator of order 2 cannot act by an automorphism whose order does not divide 2
        let c2 = GroupTable::cyclic(2);
        assert!(Action::from_matrices(c2.clone(), &z4, &[AbHom::scalar(&AbGroup::cyclic(4), 3)]).is_ok());
        let z5 = ab_to_table(&AbGroup::cyclic(5), 100).unwrap();
        assert!(matches!(
            Action::from_matrices(c2, &z5, &[AbHom::scalar(&AbGroup::cyclic(5), 2)]),
            Err(Error::InvalidAction(_))
        ));
        let not_aut = Permutation::parse_cycles(4, "(1 2)").unwrap();
        assert!(Action::new(GroupTable::cyclic(2), z4.table.clone(), vec![not_aut]).is_err());
    }

    #[test]
    fn faithfulness_and_subactions() {
        let c = Action::conjugation(&s3());
        assert!(c.is_faithful());
        let r = c.restrict(&c.actor().closure([c.actor().generators()[1]])).unwrap();
        assert_eq!(r.actor().order(), 3);
        let a3 = c.target().closure([c.target().generators()[1]]);
        let (on_a3, emb) = c.on_subgroup(&a3).unwrap();
        assert_eq!(on_a3.target().order(), 3);
        assert_eq!(emb.len(), 3);
        let (on_q, q) = c.on_quotient(&a3).unwrap();
        assert_eq!(q.table.order(), 2);
        assert!(on_q.is_trivial());
        assert_eq!(c.image_group(100).unwrap().order(), 6);
    }
}
