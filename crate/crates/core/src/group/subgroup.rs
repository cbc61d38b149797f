use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::FiniteGroup;

/// A subgroup stored as its sorted element indices plus a membership mask.
#[derive(Clone)]
pub struct Subgroup {
    elements: Vec<usize>,
    mask: Vec<u64>,
}

impl Subgroup {
    pub(crate) fn from_sorted(group_order: usize, elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let mut mask = vec![0u64; group_order.div_ceil(64)];
        for &e in &elements {
            mask[e / 64] |= 1 << (e % 64);
        }
        Subgroup { elements, mask }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.mask
            .get(g / 64)
            .is_some_and(|w| w & (1 << (g % 64)) != 0)
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.mask.iter().zip(&other.mask).all(|(a, b)| a & !b == 0)
    }

    pub fn is_proper_subset_of(&self, other: &Subgroup) -> bool {
        self.order() < other.order() && self.is_subset_of(other)
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.elements)
    }
}

/// Sorted element list, e.g. `{0,3,6}`.
impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// One conjugacy class of subgroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupClass {
    members: Vec<Subgroup>,
}

impl SubgroupClass {
    pub(crate) fn new(mut members: Vec<Subgroup>) -> Self {
        members.sort_by(|a, b| a.elements.cmp(&b.elements));
        SubgroupClass { members }
    }

    /// The member with the lexicographically smallest element list.
    pub fn representative(&self) -> &Subgroup {
        &self.members[0]
    }

    pub fn members(&self) -> &[Subgroup] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, h: &Subgroup) -> bool {
        self.members.contains(h)
    }
}

/// Joins subgroups with cyclic subgroups until nothing new appears. Every
/// subgroup is generated by its cyclic subgroups, so the fixpoint is the
/// whole lattice.
pub(super) fn enumerate(g: &FiniteGroup) -> Vec<Subgroup> {
    let n = g.order();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    // (subgroup, generators)
    let mut found: Vec<(Subgroup, Vec<usize>)> = Vec::new();
    let mut cyclic: Vec<(Subgroup, usize)> = Vec::new();
    for x in 0..n {
        let els = g.closure(&[x]);
        if seen.insert(els.clone()) {
            let s = Subgroup::from_sorted(n, els);
            cyclic.push((s.clone(), x));
            found.push((s, if x == 0 { vec![] } else { vec![x] }));
        }
    }
    let mut frontier: Vec<usize> = (0..found.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for idx in frontier {
            for (c, x) in &cyclic {
                let (h, gens) = &found[idx];
                if c.is_subset_of(h) {
                    continue;
                }
                let mut new_gens = gens.clone();
                new_gens.push(*x);
                let els = g.closure(&new_gens);
                if seen.insert(els.clone()) {
                    found.push((Subgroup::from_sorted(n, els), new_gens));
                    next.push(found.len() - 1);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Subgroup> = found.into_iter().map(|(s, _)| s).collect();
    out.sort();
    out
}
