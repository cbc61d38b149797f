//! Finite groups as multiplication tables.
//!
//! Element `0` is always the identity. Everything the rest of the crate
//! needs (subgroups, normalizers, Weyl groups, Sylow subgroups) is derived
//! from the table by exhaustive search, which is cheap at the orders the
//! catalog covers.

mod catalog;
mod classify;
mod quotient;
mod subgroup;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{validation, Error, Result};

pub use catalog::{catalog, catalog_names, parse_catalog_entry, CatalogEntry, CATALOG_DIR_ENV};
pub use classify::{isomorphic, IsoType, ISOMORPHISM_ORDER_LIMIT};
pub use quotient::{QuotientGroup, SubgroupInclusion, WeylGroup};
pub use subgroup::{Subgroup, SubgroupClass};

/// Default bound on `|G|` for subgroup-lattice enumeration.
pub const DEFAULT_SUBGROUP_BOUND: usize = 1024;

pub type GroupRef = Arc<FiniteGroup>;

pub struct FiniteGroup {
    name: Option<String>,
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    labels: Option<Vec<String>>,
    generators: Vec<usize>,
    subgroups: OnceLock<Vec<Subgroup>>,
}

impl FiniteGroup {
    /// Validates a multiplication table: identity at index 0, every row and
    /// column a permutation, and associativity (an `O(n^3)` check).
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return validation("empty multiplication table");
        }
        if table.iter().any(|r| r.len() != n) {
            return validation("multiplication table is not square");
        }
        if table.iter().flatten().any(|&v| v >= n) {
            return validation("multiplication table entry out of range");
        }
        for (a, row) in table.iter().enumerate() {
            if table[0][a] != a || row[0] != a {
                return validation("element 0 is not the identity");
            }
        }
        let mut seen = vec![usize::MAX; n];
        for (a, row) in table.iter().enumerate() {
            for &v in row {
                if seen[v] == a {
                    return validation(format!("row {a} is not a permutation"));
                }
                seen[v] = a;
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return validation(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        let mul = table.into_iter().flatten().map(|v| v as u32).collect();
        Ok(Self::from_trusted_table(n, mul))
    }

    /// Builds the group generated by permutations of `{0..degree-1}`.
    /// Elements are ordered lexicographically as permutations (so the
    /// identity comes first); `max_order` aborts runaway closures.
    pub fn from_permutations(
        degree: usize,
        generators: &[Vec<usize>],
        max_order: usize,
    ) -> Result<Self> {
        Self::from_permutations_indexed(degree, generators, max_order).map(|(g, _)| g)
    }

    /// Like [`FiniteGroup::from_permutations`], also returning the element
    /// index of each generator.
    pub fn from_permutations_indexed(
        degree: usize,
        generators: &[Vec<usize>],
        max_order: usize,
    ) -> Result<(Self, Vec<usize>)> {
        for (i, g) in generators.iter().enumerate() {
            if g.len() != degree {
                return validation(format!(
                    "generator {i} has length {}, expected {degree}",
                    g.len()
                ));
            }
            let mut hit = vec![false; degree];
            for &v in g {
                if v >= degree || hit[v] {
                    return validation(format!(
                        "generator {i} is not a permutation of 0..{degree}"
                    ));
                }
                hit[v] = true;
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut perms = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        // parent[y] = (generator, x) with y = s * x
        let mut parent: Vec<Option<(usize, usize)>> = vec![None];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (s, g) in generators.iter().enumerate() {
                let y: Vec<usize> = perms[x].iter().map(|&v| g[v]).collect();
                if !index.contains_key(&y) {
                    if perms.len() >= max_order {
                        return Err(Error::Resource(format!(
                            "generated group exceeds order bound {max_order}"
                        )));
                    }
                    index.insert(y.clone(), perms.len());
                    perms.push(y);
                    parent.push(Some((s, x)));
                    queue.push_back(perms.len() - 1);
                }
            }
        }
        let n = perms.len();
        let mut sorted: Vec<usize> = (0..n).collect();
        sorted.sort_by(|&a, &b| perms[a].cmp(&perms[b]));
        let mut rank = vec![0usize; n];
        for (new, &old) in sorted.iter().enumerate() {
            rank[old] = new;
        }
        // rows of the generators, in discovery indexing
        let gen_rows: Vec<Vec<usize>> = generators
            .iter()
            .map(|g| {
                (0..n)
                    .map(|x| {
                        let y: Vec<usize> = perms[x].iter().map(|&v| g[v]).collect();
                        index[&y]
                    })
                    .collect()
            })
            .collect();
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); n];
        rows[0] = (0..n).collect();
        // BFS order guarantees parents come first
        for y in 1..n {
            let (s, x) = parent[y].expect("non-identity element has a parent");
            rows[y] = rows[x].iter().map(|&z| gen_rows[s][z]).collect();
        }
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[rank[a] * n + rank[b]] = rank[rows[a][b]] as u32;
            }
        }
        let gen_index = generators.iter().map(|g| rank[index[g]]).collect();
        Ok((Self::from_trusted_table(n, mul), gen_index))
    }

    /// Table already known to be a group (quotients, subgroups, products).
    pub(crate) fn from_trusted_table(order: usize, mul: Vec<u32>) -> Self {
        let mut inv = vec![0u32; order];
        for a in 0..order {
            for b in 0..order {
                if mul[a * order + b] == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
        }
        let mut g = FiniteGroup {
            name: None,
            order,
            mul,
            inv,
            labels: None,
            generators: Vec::new(),
            subgroups: OnceLock::new(),
        };
        g.generators = g.choose_generators();
        g
    }

    pub fn trivial() -> Self {
        Self::from_trusted_table(1, vec![0])
    }

    pub fn cyclic(n: usize) -> Self {
        let mul = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
        Self::from_trusted_table(n, mul)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return validation("label count differs from group order");
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(l) => l[g].clone(),
            None => g.to_string(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g x g^-1`
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// A small deterministic generating set.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    fn choose_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = vec![0usize];
        while current.len() < self.order {
            let mut inside = vec![false; self.order];
            for &x in &current {
                inside[x] = true;
            }
            let mut best: Option<(usize, Vec<usize>)> = None;
            for (g, &done) in inside.iter().enumerate() {
                if done {
                    continue;
                }
                let mut trial = gens.clone();
                trial.push(g);
                let closure = self.closure(&trial);
                if best.as_ref().is_none_or(|(_, b)| closure.len() > b.len()) {
                    best = Some((g, closure));
                }
            }
            let (g, closure) = best.expect("a non-member exists while the closure is proper");
            gens.push(g);
            current = closure;
        }
        gens
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut members = vec![0usize];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &s in gens {
                let y = self.mul(s, x);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        Subgroup::from_sorted(self.order, self.closure(gens))
    }

    /// Validates that `elements` is closed under multiplication and inverses.
    pub fn subgroup(&self, mut elements: Vec<usize>) -> Result<Subgroup> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) {
            return validation("subgroup must contain the identity");
        }
        if elements.iter().any(|&e| e >= self.order) {
            return validation("subgroup element out of range");
        }
        let s = Subgroup::from_sorted(self.order, elements);
        for &a in s.elements() {
            if !s.contains(self.inv(a)) {
                return validation("subset is not closed under inverses");
            }
            for &b in s.elements() {
                if !s.contains(self.mul(a, b)) {
                    return validation("subset is not closed under multiplication");
                }
            }
        }
        Ok(s)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted(self.order, vec![0])
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted(self.order, (0..self.order).collect())
    }

    /// `g H g^-1`
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: usize) -> Subgroup {
        let mut els: Vec<usize> = h.elements().iter().map(|&x| self.conj(g, x)).collect();
        els.sort_unstable();
        Subgroup::from_sorted(self.order, els)
    }

    /// Every subgroup exactly once, sorted by order then by element list.
    /// Fails when `|G|` exceeds [`DEFAULT_SUBGROUP_BOUND`].
    pub fn all_subgroups(&self) -> Result<&[Subgroup]> {
        self.all_subgroups_bounded(DEFAULT_SUBGROUP_BOUND)
    }

    pub fn all_subgroups_bounded(&self, bound: usize) -> Result<&[Subgroup]> {
        if self.order > bound {
            return Err(Error::Resource(format!(
                "subgroup enumeration bound {bound} exceeded by a group of order {}",
                self.order
            )));
        }
        Ok(self.subgroups.get_or_init(|| subgroup::enumerate(self)))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.is_normal_in(h, &self.whole())
    }

    /// Whether `k` is a normal subgroup of `h` (with `k` contained in `h`).
    pub fn is_normal_in(&self, k: &Subgroup, h: &Subgroup) -> bool {
        k.is_subset_of(h)
            && h.elements()
                .iter()
                .all(|&g| k.elements().iter().all(|&x| k.contains(self.conj(g, x))))
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let els = (0..self.order)
            .filter(|&g| h.elements().iter().all(|&x| h.contains(self.conj(g, x))))
            .collect();
        Subgroup::from_sorted(self.order, els)
    }

    pub fn centralizer(&self, h: &Subgroup) -> Subgroup {
        let els = (0..self.order)
            .filter(|&g| {
                h.elements()
                    .iter()
                    .all(|&x| self.mul(g, x) == self.mul(x, g))
            })
            .collect();
        Subgroup::from_sorted(self.order, els)
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(&self.whole())
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let els = a
            .elements()
            .iter()
            .copied()
            .filter(|&x| b.contains(x))
            .collect();
        Subgroup::from_sorted(self.order, els)
    }

    /// Subgroups of `h` (as subgroups of the ambient group).
    pub fn subgroups_of(&self, h: &Subgroup) -> Result<Vec<Subgroup>> {
        Ok(self
            .all_subgroups()?
            .iter()
            .filter(|k| k.is_subset_of(h))
            .cloned()
            .collect())
    }

    pub fn p_subgroups(&self, p: usize) -> Result<Vec<Subgroup>> {
        Ok(self
            .all_subgroups()?
            .iter()
            .filter(|h| is_power_of(h.order(), p))
            .cloned()
            .collect())
    }

    /// G-conjugacy classes of p-subgroups, each with its lexicographically
    /// smallest member as representative. Classes are sorted by the order and
    /// then the element list of their representatives.
    pub fn conjugacy_classes_of_p_subgroups(&self, p: usize) -> Result<Vec<SubgroupClass>> {
        let subs = self.p_subgroups(p)?;
        self.conjugacy_classes_among(subs)
    }

    pub fn conjugacy_classes_of_subgroups(&self) -> Result<Vec<SubgroupClass>> {
        let subs = self.all_subgroups()?.to_vec();
        self.conjugacy_classes_among(subs)
    }

    fn conjugacy_classes_among(&self, subs: Vec<Subgroup>) -> Result<Vec<SubgroupClass>> {
        let mut assigned: HashMap<Subgroup, usize> = HashMap::new();
        let mut classes: Vec<SubgroupClass> = Vec::new();
        for h in subs {
            if assigned.contains_key(&h) {
                continue;
            }
            let mut members: Vec<Subgroup> = (0..self.order)
                .map(|g| self.conjugate_subgroup(&h, g))
                .collect();
            members.sort();
            members.dedup();
            for m in &members {
                assigned.insert(m.clone(), classes.len());
            }
            classes.push(SubgroupClass::new(members));
        }
        classes.sort_by(|a, b| a.representative().cmp(b.representative()));
        Ok(classes)
    }

    /// Canonical representative of the conjugacy class of `h`.
    pub fn class_representative(&self, h: &Subgroup) -> Subgroup {
        (0..self.order)
            .map(|g| self.conjugate_subgroup(h, g))
            .min()
            .expect("nonempty group")
    }

    pub fn are_conjugate(&self, a: &Subgroup, b: &Subgroup) -> bool {
        a.order() == b.order() && (0..self.order).any(|g| &self.conjugate_subgroup(a, g) == b)
    }

    /// A Sylow p-subgroup: the lexicographically smallest p-subgroup of
    /// maximal order.
    pub fn sylow_subgroup(&self, p: usize) -> Result<Subgroup> {
        let target = p_part(self.order, p);
        Ok(self
            .all_subgroups()?
            .iter()
            .find(|h| h.order() == target)
            .cloned()
            .expect("Sylow subgroups exist"))
    }

    /// Intersection of all maximal subgroups of `h`.
    pub fn frattini_of(&self, h: &Subgroup) -> Result<Subgroup> {
        let subs = self.subgroups_of(h)?;
        let proper: Vec<&Subgroup> = subs.iter().filter(|k| k.order() < h.order()).collect();
        let maximal: Vec<&Subgroup> = proper
            .iter()
            .copied()
            .filter(|k| {
                !proper
                    .iter()
                    .any(|l| l.order() > k.order() && k.is_subset_of(l))
            })
            .collect();
        let mut acc = h.clone();
        for m in maximal {
            acc = self.intersection(&acc, m);
        }
        Ok(acc)
    }

    pub fn frattini_subgroup(&self) -> Result<Subgroup> {
        self.frattini_of(&self.whole())
    }

    pub fn is_p_group(&self, p: usize) -> bool {
        is_power_of(self.order, p)
    }

    pub fn count_subgroups_of_order(&self, order: usize) -> Result<usize> {
        Ok(self
            .all_subgroups()?
            .iter()
            .filter(|h| h.order() == order)
            .count())
    }

    pub fn has_unique_order_p_subgroup(&self, p: usize) -> Result<bool> {
        Ok(self.count_subgroups_of_order(p)? == 1)
    }

    pub fn has_unique_index_p_subgroup(&self, p: usize) -> Result<bool> {
        if !self.order.is_multiple_of(p) {
            return Ok(false);
        }
        Ok(self.count_subgroups_of_order(self.order / p)? == 1)
    }

    /// Largest rank of an elementary abelian p-subgroup.
    pub fn p_rank(&self, p: usize) -> Result<usize> {
        Ok(self
            .all_subgroups()?
            .iter()
            .filter(|h| is_power_of(h.order(), p) && self.is_elementary_abelian_subgroup(h, p))
            .map(|h| log_p(h.order(), p))
            .max()
            .unwrap_or(0))
    }

    pub fn is_elementary_abelian_subgroup(&self, h: &Subgroup, p: usize) -> bool {
        let els = h.elements();
        els.iter().all(|&a| self.pow(a, p) == 0)
            && els
                .iter()
                .all(|&a| els.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Whether `h / k` is elementary abelian of exponent `p` (trivial allowed).
    /// Requires `k` normal in `h`.
    pub fn is_elementary_abelian_section(&self, h: &Subgroup, k: &Subgroup, p: usize) -> bool {
        let els = h.elements();
        els.iter().all(|&a| k.contains(self.pow(a, p)))
            && els.iter().all(|&a| {
                els.iter().all(|&b| {
                    let comm = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                    k.contains(comm)
                })
            })
    }

    /// `N_G(H, P) = { g : g^-1 H g <= P }`.
    pub fn transporter(&self, h: &Subgroup, p: &Subgroup) -> Subgroup {
        let els = (0..self.order)
            .filter(|&g| {
                let gi = self.inv(g);
                h.elements().iter().all(|&x| p.contains(self.conj(gi, x)))
            })
            .collect();
        // not a subgroup in general; the Subgroup type is used as a sorted set
        Subgroup::from_sorted(self.order, els)
    }

    /// Human-readable name: catalog name, else the recognized iso type,
    /// else the order.
    pub fn display_name(&self) -> String {
        if let Some(n) = &self.name {
            return n.clone();
        }
        match self.iso_type() {
            IsoType::Other { order } => format!("group of order {order}"),
            t => t.to_string(),
        }
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

pub fn same_group(a: &GroupRef, b: &GroupRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub fn is_power_of(n: usize, p: usize) -> bool {
    let mut n = n;
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: usize, p: usize) -> usize {
    let mut acc = 1;
    while n.is_multiple_of(p) {
        n /= p;
        acc *= p;
    }
    acc
}

pub fn log_p(n: usize, p: usize) -> usize {
    let mut n = n;
    let mut k = 0;
    while n > 1 {
        n /= p;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q8() -> GroupRef {
        catalog("Q8").unwrap()
    }

    #[test]
    fn table_validation_rejects_non_groups() {
        assert!(FiniteGroup::from_table(vec![]).is_err());
        // identity not at 0
        assert!(FiniteGroup::from_table(vec![vec![1, 0], vec![0, 1]]).is_err());
        // Latin square failure
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]).is_err());
        // loop that is not associative: order 5 Latin square with identity
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_table(t),
            Err(Error::Validation(_))
        ));
        let c3 =
            FiniteGroup::from_table(vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
        assert_eq!(c3.order(), 3);
        assert_eq!(c3.inv(1), 2);
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(catalog("C2").unwrap().all_subgroups().unwrap().len(), 2);
        assert_eq!(q8().all_subgroups().unwrap().len(), 6);
        assert_eq!(catalog("V4").unwrap().all_subgroups().unwrap().len(), 5);
        assert_eq!(catalog("S4").unwrap().all_subgroups().unwrap().len(), 30);
        assert_eq!(catalog("A4").unwrap().all_subgroups().unwrap().len(), 10);
    }

    #[test]
    fn subgroup_bound_is_enforced() {
        let g = catalog("S4").unwrap();
        assert!(matches!(
            g.all_subgroups_bounded(10),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn conjugacy_classes() {
        assert_eq!(q8().conjugacy_classes_of_p_subgroups(2).unwrap().len(), 6);
        let s3 = catalog("S3").unwrap();
        assert_eq!(s3.conjugacy_classes_of_p_subgroups(3).unwrap().len(), 2);
        assert_eq!(s3.conjugacy_classes_of_p_subgroups(2).unwrap().len(), 2);
        let c9 = catalog("C9").unwrap();
        let classes = c9.conjugacy_classes_of_p_subgroups(5).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].representative().order(), 1);
    }

    #[test]
    fn center_normalizer_centralizer() {
        let g = q8();
        assert_eq!(g.center().order(), 2);
        assert_eq!(g.normalizer(&g.whole()), g.whole());
        let v4 = catalog("V4").unwrap();
        for h in v4.all_subgroups().unwrap() {
            assert_eq!(v4.centralizer(h), v4.whole());
        }
    }

    #[test]
    fn sylow_and_frattini() {
        let s4 = catalog("S4").unwrap();
        let p = s4.sylow_subgroup(2).unwrap();
        assert_eq!(p.order(), 8);
        let (d, _) = SubgroupInclusion::new(&s4, &p).unwrap().into_parts();
        assert_eq!(d.iso_type(), IsoType::Dihedral { n: 3 });
        let c8 = catalog("C8").unwrap();
        assert_eq!(c8.frattini_subgroup().unwrap().order(), 4);
        let v4 = catalog("V4").unwrap();
        assert_eq!(v4.frattini_subgroup().unwrap().order(), 1);
    }

    #[test]
    fn unique_subgroup_counts() {
        let q16 = catalog("Q16").unwrap();
        assert!(q16.has_unique_order_p_subgroup(2).unwrap());
        let c8 = catalog("C8").unwrap();
        assert!(c8.has_unique_index_p_subgroup(2).unwrap());
        let v4 = catalog("V4").unwrap();
        assert!(!v4.has_unique_order_p_subgroup(2).unwrap());
        assert!(!v4.has_unique_index_p_subgroup(2).unwrap());
    }

    #[test]
    fn p_rank() {
        assert_eq!(catalog("Q8").unwrap().p_rank(2).unwrap(), 1);
        assert_eq!(catalog("C2xC2xC2").unwrap().p_rank(2).unwrap(), 3);
        assert_eq!(catalog("S4").unwrap().p_rank(2).unwrap(), 2);
        assert_eq!(catalog("S4").unwrap().p_rank(3).unwrap(), 1);
    }

    #[test]
    fn generators_generate() {
        for name in ["Q8_semidirect_F3sq", "SL2F3", "C2xC2xC2", "C625"] {
            let g = catalog(name).unwrap();
            assert_eq!(g.closure(g.generators()).len(), g.order(), "{name}");
        }
    }

    #[test]
    fn cyclic_constructor() {
        let c6 = FiniteGroup::cyclic(6);
        assert_eq!(c6.element_order(1), 6);
        assert!(c6.is_abelian());
    }
}
