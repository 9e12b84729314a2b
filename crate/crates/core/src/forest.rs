//! Labeled rooted forests and their correspondence with nilpotent partial
//! transformations.

use crate::error::{Error, Result};
use crate::odun::{Odun, RootedTree};
use crate::transform::PartialTransformation;

/// A rooted forest on the vertex set `[n]`, given by its parent map.
/// Roots have no parent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledForest {
    parent: Vec<Option<usize>>,
}

impl LabeledForest {
    /// Checks that the parent map is acyclic.
    pub fn new(parent: Vec<Option<usize>>) -> Result<Self> {
        let n = parent.len();
        if let Some((i, &Some(p))) = parent.iter().enumerate().find(|(_, p)| matches!(p, Some(v) if *v == 0 || *v > n)) {
            return Err(Error::EntryOutOfRange { position: i + 1, value: p, n });
        }
        let as_map = PartialTransformation::from_raw(parent.iter().map(|p| p.unwrap_or(0)).collect());
        if !as_map.is_nilpotent() {
            return Err(Error::CyclicParent);
        }
        Ok(Self { parent })
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v - 1]
    }

    pub fn roots(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&v| self.parent[v - 1].is_none()).collect()
    }

    pub fn component_count(&self) -> usize {
        self.parent.iter().filter(|p| p.is_none()).count()
    }

    /// Children of every vertex, indexed by `v - 1`, in increasing order.
    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut ch = vec![Vec::new(); self.n()];
        for (i, p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                ch[p - 1].push(i + 1);
            }
        }
        ch
    }
}

/// The forest with an edge `i -> f(i)` for each `i` in the domain of `f`.
pub fn forest_of(f: &PartialTransformation) -> Result<LabeledForest> {
    if !f.is_nilpotent() {
        return Err(Error::NotNilpotent(f.to_string()));
    }
    Ok(LabeledForest { parent: f.image().iter().map(|&v| (v != 0).then_some(v)).collect() })
}

pub fn transformation_of(forest: &LabeledForest) -> PartialTransformation {
    PartialTransformation::from_raw(forest.parent.iter().map(|p| p.unwrap_or(0)).collect())
}

/// The canonical unlabeled forest underlying `forest`.
pub fn odun_of(forest: &LabeledForest) -> Odun {
    let children = forest.children();
    // process vertices deepest-first so every child is built before its parent
    let order = bottom_up_order(forest, &children);
    let mut built: Vec<Option<RootedTree>> = vec![None; forest.n()];
    for v in order {
        let kids = children[v - 1]
            .iter()
            .map(|&c| built[c - 1].take().expect("child built first"))
            .collect();
        built[v - 1] = Some(RootedTree::from_children(kids));
    }
    Odun::from_trees(forest.roots().into_iter().map(|r| built[r - 1].take().unwrap()).collect())
}

fn bottom_up_order(forest: &LabeledForest, children: &[Vec<usize>]) -> Vec<usize> {
    let mut order = Vec::with_capacity(forest.n());
    let mut stack = forest.roots();
    while let Some(v) = stack.pop() {
        order.push(v);
        stack.extend(&children[v - 1]);
    }
    order.reverse();
    order
}

/// Labels an odun's vertices in preorder, trees taken in canonical order.
/// Useful as an orbit representative.
pub fn labeled_representative(odun: &Odun) -> LabeledForest {
    fn walk(t: &RootedTree, parent: Option<usize>, out: &mut Vec<Option<usize>>) {
        out.push(parent);
        let me = out.len();
        for c in t.children() {
            walk(c, Some(me), out);
        }
    }
    let mut parent = Vec::with_capacity(odun.vertex_count());
    for t in odun.trees() {
        walk(t, None, &mut parent);
    }
    LabeledForest { parent }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::{all_permutations, conjugate_action, enumerate_nilpotent};
    use std::collections::{BTreeSet, HashSet};

    fn pt(image: &[usize]) -> PartialTransformation {
        PartialTransformation::new(image.to_vec()).unwrap()
    }

    #[test]
    fn forest_examples() {
        let zero = forest_of(&PartialTransformation::zero(4)).unwrap();
        assert_eq!(zero.component_count(), 4);
        assert_eq!(transformation_of(&zero), PartialTransformation::zero(4));

        let cherry = forest_of(&pt(&[0, 1, 1])).unwrap();
        assert_eq!(cherry.roots(), vec![1]);
        assert_eq!(cherry.children()[0], vec![2, 3]);
        assert_eq!(odun_of(&cherry).code(), "(()())");

        let chain = forest_of(&pt(&[0, 1, 2])).unwrap();
        assert_eq!(chain.parent(3), Some(2));
        assert_eq!(chain.parent(2), Some(1));
        assert_eq!(odun_of(&chain).code(), "((()))");
        assert_eq!(transformation_of(&chain), pt(&[0, 1, 2]));

        assert!(matches!(forest_of(&pt(&[2, 1])), Err(Error::NotNilpotent(_))));
        assert!(matches!(LabeledForest::new(vec![Some(2), Some(1)]), Err(Error::CyclicParent)));
    }

    #[test]
    fn bijection_and_component_count() {
        for n in 1..=6 {
            for k in 0..n {
                for f in enumerate_nilpotent(n, k) {
                    let forest = forest_of(&f).unwrap();
                    assert_eq!(forest.component_count(), n - k);
                    assert_eq!(transformation_of(&forest), f);
                }
            }
        }
    }

    #[test]
    fn relabelings_share_an_odun() {
        assert_eq!(
            odun_of(&forest_of(&pt(&[0, 1, 1])).unwrap()),
            odun_of(&forest_of(&pt(&[2, 0, 2])).unwrap())
        );
        assert_ne!(
            odun_of(&forest_of(&pt(&[0, 1, 2])).unwrap()),
            odun_of(&forest_of(&pt(&[0, 1, 1])).unwrap())
        );
    }

    #[test]
    fn oduns_are_exactly_the_orbits() {
        for n in 1..=5 {
            let perms = all_permutations(n);
            for k in 0..n {
                let elements: Vec<_> = enumerate_nilpotent(n, k).collect();
                let mut seen = HashSet::new();
                let mut orbit_oduns = BTreeSet::new();
                for f in &elements {
                    if seen.contains(f) {
                        continue;
                    }
                    let o = odun_of(&forest_of(f).unwrap());
                    for w in &perms {
                        let g = conjugate_action(w, f).unwrap();
                        assert_eq!(odun_of(&forest_of(&g).unwrap()), o);
                        seen.insert(g);
                    }
                    // distinct orbits never share an odun
                    assert!(orbit_oduns.insert(o.code()));
                }
                assert_eq!(seen.len(), elements.len());
            }
        }
    }

    #[test]
    fn representative_has_the_right_odun() {
        for o in crate::odun::enumerate_oduns(6, None) {
            assert_eq!(odun_of(&labeled_representative(&o)), o);
        }
    }
}
