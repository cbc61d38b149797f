use std::sync::Arc;

use super::{FiniteGroup, GroupRef, Subgroup};
use crate::error::{argument, Result};

/// `over / normal` for subgroups of an ambient group, with cosets indexed by
/// their minimal element (so the identity coset is index 0).
#[derive(Debug, Clone)]
pub struct QuotientGroup {
    group: GroupRef,
    over: Subgroup,
    normal: Subgroup,
    projection: Vec<Option<usize>>,
    lifts: Vec<usize>,
}

impl QuotientGroup {
    pub fn new(ambient: &FiniteGroup, over: &Subgroup, normal: &Subgroup) -> Result<Self> {
        if !ambient.is_normal_in(normal, over) {
            return argument("quotient by a subgroup that is not normal");
        }
        let mut projection = vec![None; ambient.order()];
        let mut lifts = Vec::new();
        for &x in over.elements() {
            if projection[x].is_some() {
                continue;
            }
            let c = lifts.len();
            lifts.push(x);
            for &n in normal.elements() {
                projection[ambient.mul(x, n)] = Some(c);
            }
        }
        let m = lifts.len();
        let mut mul = vec![0u32; m * m];
        for (a, &la) in lifts.iter().enumerate() {
            for (b, &lb) in lifts.iter().enumerate() {
                mul[a * m + b] =
                    projection[ambient.mul(la, lb)].expect("closed under products") as u32;
            }
        }
        Ok(QuotientGroup {
            group: Arc::new(FiniteGroup::from_trusted_table(m, mul)),
            over: over.clone(),
            normal: normal.clone(),
            projection,
            lifts,
        })
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn over(&self) -> &Subgroup {
        &self.over
    }

    pub fn normal(&self) -> &Subgroup {
        &self.normal
    }

    /// Coset of an ambient element, if it lies in `over`.
    pub fn project(&self, g: usize) -> Option<usize> {
        self.projection[g]
    }

    /// Minimal ambient element of a coset.
    pub fn lift(&self, c: usize) -> usize {
        self.lifts[c]
    }

    pub fn lifts(&self) -> &[usize] {
        &self.lifts
    }
}

/// `W_G(H) = N_G(H) / H`.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    subgroup: Subgroup,
    normalizer: Subgroup,
    quotient: QuotientGroup,
}

impl WeylGroup {
    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn normalizer(&self) -> &Subgroup {
        &self.normalizer
    }

    pub fn group(&self) -> &GroupRef {
        self.quotient.group()
    }

    pub fn quotient(&self) -> &QuotientGroup {
        &self.quotient
    }

    pub fn project(&self, g: usize) -> Option<usize> {
        self.quotient.project(g)
    }

    pub fn lift(&self, w: usize) -> usize {
        self.quotient.lift(w)
    }
}

impl FiniteGroup {
    pub fn quotient(&self, normal: &Subgroup) -> Result<QuotientGroup> {
        QuotientGroup::new(self, &self.whole(), normal)
    }

    pub fn weyl_group(&self, h: &Subgroup) -> WeylGroup {
        let normalizer = self.normalizer(h);
        let quotient =
            QuotientGroup::new(self, &normalizer, h).expect("H is normal in its normalizer");
        WeylGroup {
            subgroup: h.clone(),
            normalizer,
            quotient,
        }
    }
}

/// A subgroup realized as a group in its own right, with the embedding of
/// its elements into the parent. Sub-elements are indexed in increasing
/// parent order, so index 0 is the identity.
#[derive(Debug, Clone)]
pub struct SubgroupInclusion {
    sub: GroupRef,
    parent: GroupRef,
    subgroup: Subgroup,
    embedding: Vec<usize>,
}

impl SubgroupInclusion {
    pub fn new(parent: &GroupRef, h: &Subgroup) -> Result<Self> {
        if h.elements().last().is_some_and(|&e| e >= parent.order()) {
            return argument("subgroup does not belong to this group");
        }
        if h.order() == parent.order() {
            return Ok(Self::identity(parent));
        }
        let els = h.elements();
        let mut index = vec![usize::MAX; parent.order()];
        for (i, &e) in els.iter().enumerate() {
            index[e] = i;
        }
        let m = els.len();
        let mut mul = vec![0u32; m * m];
        for (a, &ea) in els.iter().enumerate() {
            for (b, &eb) in els.iter().enumerate() {
                let prod = index[parent.mul(ea, eb)];
                if prod == usize::MAX {
                    return argument("element set is not closed under multiplication");
                }
                mul[a * m + b] = prod as u32;
            }
        }
        let mut sub = FiniteGroup::from_trusted_table(m, mul);
        if let Some(labels) = parent.labels() {
            sub = sub.with_labels(els.iter().map(|&e| labels[e].clone()).collect())?;
        }
        Ok(SubgroupInclusion {
            sub: Arc::new(sub),
            parent: parent.clone(),
            subgroup: h.clone(),
            embedding: els.to_vec(),
        })
    }

    pub fn identity(parent: &GroupRef) -> Self {
        SubgroupInclusion {
            sub: parent.clone(),
            parent: parent.clone(),
            subgroup: parent.whole(),
            embedding: (0..parent.order()).collect(),
        }
    }

    pub fn sub(&self) -> &GroupRef {
        &self.sub
    }

    pub fn parent(&self) -> &GroupRef {
        &self.parent
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    #[inline]
    pub fn embed(&self, i: usize) -> usize {
        self.embedding[i]
    }

    pub fn embedding(&self) -> &[usize] {
        &self.embedding
    }

    /// Index in the subgroup of a parent element, if it belongs to it.
    pub fn index_of(&self, g: usize) -> Option<usize> {
        self.embedding.binary_search(&g).ok()
    }

    /// Maps a subgroup of the sub-group to the corresponding parent subgroup.
    pub fn push_forward(&self, k: &Subgroup) -> Subgroup {
        let mut els: Vec<usize> = k.elements().iter().map(|&i| self.embedding[i]).collect();
        els.sort_unstable();
        Subgroup::from_sorted(self.parent.order(), els)
    }

    /// Intersects a parent subgroup with this subgroup, in sub-indices.
    pub fn pull_back(&self, k: &Subgroup) -> Subgroup {
        let els = self
            .embedding
            .iter()
            .enumerate()
            .filter(|(_, &e)| k.contains(e))
            .map(|(i, _)| i)
            .collect();
        Subgroup::from_sorted(self.sub.order(), els)
    }

    pub fn into_parts(self) -> (GroupRef, Vec<usize>) {
        (self.sub, self.embedding)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{catalog, isomorphic, IsoType};

    #[test]
    fn weyl_of_center_in_q8_is_klein_four() {
        let q8 = catalog("Q8").unwrap();
        let w = q8.weyl_group(&q8.center());
        assert_eq!(w.group().order(), 4);
        assert_eq!(
            w.group().iso_type(),
            IsoType::ElementaryAbelian { prime: 2, rank: 2 }
        );
    }

    #[test]
    fn weyl_of_trivial_is_the_group() {
        for name in ["S3", "Q8", "A4", "D8", "SL2F3"] {
            let g = catalog(name).unwrap();
            let w = g.weyl_group(&g.trivial_subgroup());
            assert!(isomorphic(w.group(), &g).unwrap(), "{name}");
        }
    }

    #[test]
    fn weyl_in_cyclic_groups() {
        // H_i of index p^i in C_{p^n}; W = C_{p^n} / H_i is cyclic of order p^i
        let g = catalog("C27").unwrap();
        for h in g.all_subgroups().unwrap() {
            let w = g.weyl_group(h);
            let expected = crate::group::FiniteGroup::cyclic(27 / h.order());
            assert!(isomorphic(w.group(), &expected).unwrap());
        }
    }

    #[test]
    fn projection_is_a_homomorphism_with_kernel_n() {
        let g = catalog("SL2F3").unwrap();
        let z = g.center();
        let q = g.quotient(&z).unwrap();
        assert_eq!(q.group().order(), 12);
        for a in g.elements() {
            assert_eq!(q.project(a) == Some(0), z.contains(a));
            for b in g.elements() {
                let lhs = q.project(g.mul(a, b)).unwrap();
                let rhs = q.group().mul(q.project(a).unwrap(), q.project(b).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn inclusion_roundtrip() {
        let s4 = catalog("S4").unwrap();
        let p = s4.sylow_subgroup(2).unwrap();
        let inc = SubgroupInclusion::new(&s4, &p).unwrap();
        assert_eq!(inc.sub().order(), 8);
        let whole = inc.sub().whole();
        assert_eq!(inc.push_forward(&whole), p);
        assert_eq!(inc.pull_back(&s4.whole()), whole);
        for i in inc.sub().elements() {
            assert_eq!(inc.index_of(inc.embed(i)), Some(i));
        }
    }
}
