use super::perm::Permutation;
use super::table::GroupTable;
use crate::error::{Error, Result};

/// Spanning tree of the right Cayley graph: every non-identity `x` is
/// `parent·generators[gen]`.
struct WordTree {
    order_of_visit: Vec<u32>,
    parent: Vec<(u32, usize)>,
}

impl WordTree {
    fn new(g: &GroupTable) -> Self {
        let n = g.order();
        let mut parent = vec![(u32::MAX, 0); n];
        parent[0] = (0, 0);
        let mut order_of_visit = vec![0u32];
        let mut head = 0;
        while head < order_of_visit.len() {
            let x = order_of_visit[head];
            for (k, &s) in g.generators().iter().enumerate() {
                let y = g.mul(x, s);
                if parent[y as usize].0 == u32::MAX {
                    parent[y as usize] = (x, k);
                    order_of_visit.push(y);
                }
            }
            head += 1;
        }
        WordTree { order_of_visit, parent }
    }

    /// Extends generator images to the whole group; `None` when the
    /// extension is not a homomorphism.
    fn extend(&self, g: &GroupTable, h: &GroupTable, images: &[u32]) -> Option<Vec<u32>> {
        let mut phi = vec![0u32; g.order()];
        for &x in self.order_of_visit.iter().skip(1) {
            let (p, k) = self.parent[x as usize];
            phi[x as usize] = h.mul(phi[p as usize], images[k]);
        }
        for x in g.elements() {
            for (k, &s) in g.generators().iter().enumerate() {
                if phi[g.mul(x, s) as usize] != h.mul(phi[x as usize], images[k]) {
                    return None;
                }
            }
        }
        Some(phi)
    }
}

/// Iterates over all assignments of generator images, each drawn from its
/// candidate list, calling `visit` until it returns `false`.
fn for_each_assignment(cands: &[Vec<u32>], mut visit: impl FnMut(&[u32]) -> bool) {
    if cands.iter().any(Vec::is_empty) {
        return;
    }
    let mut idx = vec![0usize; cands.len()];
    let mut cur: Vec<u32> = cands.iter().map(|c| c[0]).collect();
    loop {
        if !visit(&cur) {
            return;
        }
        let mut k = 0;
        loop {
            if k == cands.len() {
                return;
            }
            idx[k] += 1;
            if idx[k] < cands[k].len() {
                cur[k] = cands[k][idx[k]];
                break;
            }
            idx[k] = 0;
            cur[k] = cands[k][0];
            k += 1;
        }
    }
}

fn candidates(g: &GroupTable, h: &GroupTable) -> Vec<Vec<u32>> {
    g.generators()
        .iter()
        .map(|&s| {
            let o = g.element_order(s);
            h.elements().filter(|&y| h.element_order(y) == o).collect()
        })
        .collect()
}

fn search_size(cands: &[Vec<u32>]) -> u128 {
    cands.iter().map(|c| c.len() as u128).product()
}

/// All automorphisms of `g`, as permutations of its index set, found by
/// trying every order-preserving assignment of generator images.
pub fn table_automorphisms(g: &GroupTable, search_limit: u128) -> Result<Vec<Permutation>> {
    let tree = WordTree::new(g);
    let cands = candidates(g, g);
    let size = search_size(&cands);
    if size > search_limit {
        return Err(Error::TooLarge { what: "automorphism search space", size, limit: search_limit });
    }
    let mut out = Vec::new();
    let mut seen = vec![false; g.order()];
    for_each_assignment(&cands, |imgs| {
        if let Some(phi) = tree.extend(g, g, imgs) {
            seen.iter_mut().for_each(|s| *s = false);
            if phi.iter().all(|&y| !std::mem::replace(&mut seen[y as usize], true)) {
                out.push(Permutation::from_images_unchecked(phi));
            }
        }
        true
    });
    Ok(out)
}

/// An isomorphism `g → h` as an index map, if one exists.
pub fn find_isomorphism(g: &GroupTable, h: &GroupTable) -> Option<Vec<u32>> {
    if g.order() != h.order() {
        return None;
    }
    let tree = WordTree::new(g);
    let cands = candidates(g, h);
    let mut found = None;
    let mut seen = vec![false; g.order()];
    for_each_assignment(&cands, |imgs| {
        if let Some(phi) = tree.extend(g, h, imgs) {
            seen.iter_mut().for_each(|s| *s = false);
            if phi.iter().all(|&y| !std::mem::replace(&mut seen[y as usize], true)) {
                found = Some(phi);
                return false;
            }
        }
        true
    });
    found
}

pub fn is_homomorphism(g: &GroupTable, h: &GroupTable, map: &[u32]) -> bool {
    map.len() == g.order()
        && map[0] == 0
        && g.elements().all(|a| g.elements().all(|b| map[g.mul(a, b) as usize] == h.mul(map[a as usize], map[b as usize])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grpcore::group_from_perms;

    #[test]
    fn automorphisms_of_small_groups() {
        let gens = [Permutation::parse_cycles(3, "(0 1)").unwrap(), Permutation::parse_cycles(3, "(0 1 2)").unwrap()];
        let s3 = group_from_perms(3, &gens, 100).unwrap().0;
        assert_eq!(table_automorphisms(&s3, 1000).unwrap().len(), 6);
        assert_eq!(table_automorphisms(&GroupTable::cyclic(8), 1000).unwrap().len(), 4);
        assert_eq!(table_automorphisms(&GroupTable::cyclic(1), 1000).unwrap().len(), 1);
        assert!(table_automorphisms(&s3, 2).is_err());
    }

    #[test]
    fn isomorphism_search() {
        let (c6, _) = group_from_perms(5, &[Permutation::parse_cycles(5, "(0 1 2)(3 4)").unwrap()], 10).unwrap();
        let phi = find_isomorphism(&c6, &GroupTable::cyclic(6)).unwrap();
        assert!(is_homomorphism(&c6, &GroupTable::cyclic(6), &phi));
        let gens = [Permutation::parse_cycles(3, "(0 1)").unwrap(), Permutation::parse_cycles(3, "(0 1 2)").unwrap()];
        let s3 = group_from_perms(3, &gens, 100).unwrap().0;
        assert!(find_isomorphism(&s3, &GroupTable::cyclic(6)).is_none());
    }
}
