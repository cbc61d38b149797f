//! The category of elementary abelian sections `(H, K)` of p-subgroups, its
//! connected components, and the bottleneck analysis of p-groups.

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{argument, Error, Result};
use crate::group::{
    catalog, catalog_names, is_power_of, isomorphic, log_p, FiniteGroup, GroupRef, IsoType,
    QuotientGroup, Subgroup, SubgroupInclusion, ISOMORPHISM_ORDER_LIMIT,
};

/// A section `K <| H` with `H` a p-subgroup and `H/K` elementary abelian of
/// the given rank (0 for the trivial sections `H = K`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SectionObject {
    pub h: Subgroup,
    pub k: Subgroup,
    pub rank: usize,
}

impl SectionObject {
    pub fn is_trivial(&self) -> bool {
        self.h == self.k
    }

    /// The quotient `H/K` as a group in its own right.
    pub fn quotient(&self, g: &FiniteGroup) -> Result<QuotientGroup> {
        QuotientGroup::new(g, &self.h, &self.k)
    }
}

/// A morphism `source -> target` of sections witnessed by `element`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionMorphismWitness {
    pub source: SectionObject,
    pub target: SectionObject,
    pub element: usize,
}

/// All elementary abelian sections of p-subgroups, ordered by `(H, K)`.
pub fn enumerate_sections(g: &FiniteGroup, p: usize) -> Result<Vec<SectionObject>> {
    let mut out = Vec::new();
    for h in g.p_subgroups(p)? {
        for k in g.subgroups_of(&h)? {
            if g.is_normal_in(&k, &h) && g.is_elementary_abelian_section(&h, &k, p) {
                let rank = log_p(h.order() / k.order(), p);
                out.push(SectionObject {
                    h: h.clone(),
                    k,
                    rank,
                });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `g` with `K' <= g^-1 K g` and `g^-1 H g <= H'`, first in element order.
pub fn find_morphism(
    g: &FiniteGroup,
    src: &SectionObject,
    dst: &SectionObject,
) -> Option<SectionMorphismWitness> {
    morphism_element(g, src, dst).map(|element| SectionMorphismWitness {
        source: src.clone(),
        target: dst.clone(),
        element,
    })
}

/// Whether `x` satisfies the morphism condition for `src -> dst`.
pub fn is_morphism(g: &FiniteGroup, src: &SectionObject, dst: &SectionObject, x: usize) -> bool {
    let xi = g.inv(x);
    dst.k
        .elements()
        .iter()
        .all(|&y| src.k.contains(g.conj(x, y)))
        && src
            .h
            .elements()
            .iter()
            .all(|&y| dst.h.contains(g.conj(xi, y)))
}

fn morphism_element(g: &FiniteGroup, src: &SectionObject, dst: &SectionObject) -> Option<usize> {
    g.elements().find(|&x| is_morphism(g, src, dst, x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionEdge {
    pub source: usize,
    pub target: usize,
    pub witness: usize,
}

/// Nontrivial sections as nodes, an edge `a -> b` for the first morphism
/// between them in either direction, and connected components.
#[derive(Debug, Clone)]
pub struct SectionGraph {
    pub prime: usize,
    pub nodes: Vec<SectionObject>,
    pub edges: Vec<SectionEdge>,
    /// Component id of each node, numbered by first appearance.
    pub components: Vec<usize>,
    pub component_count: usize,
}

impl SectionGraph {
    pub fn component_of(&self, s: &SectionObject) -> Option<usize> {
        self.nodes
            .iter()
            .position(|n| n == s)
            .map(|i| self.components[i])
    }

    pub fn members(&self, component: usize) -> Vec<&SectionObject> {
        self.nodes
            .iter()
            .zip(&self.components)
            .filter(|(_, &c)| c == component)
            .map(|(n, _)| n)
            .collect()
    }
}

/// Conjugation table on p-subgroups: `conj[s][x]` is the id of `x^-1 S x`.
struct ConjugationTable {
    subgroups: Vec<Subgroup>,
    id: HashMap<Vec<usize>, usize>,
    conj: Vec<Vec<u32>>,
}

impl ConjugationTable {
    fn new(g: &FiniteGroup, p: usize) -> Result<Self> {
        let subgroups = g.p_subgroups(p)?;
        let id: HashMap<Vec<usize>, usize> = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.elements().to_vec(), i))
            .collect();
        let conj = subgroups
            .iter()
            .map(|s| {
                g.elements()
                    .map(|x| id[g.conjugate_subgroup(s, g.inv(x)).elements()] as u32)
                    .collect()
            })
            .collect();
        Ok(ConjugationTable {
            subgroups,
            id,
            conj,
        })
    }

    fn morphism(&self, g: &FiniteGroup, src: (usize, usize), dst: (usize, usize)) -> Option<usize> {
        let (sh, sk) = src;
        let (dh, dk) = dst;
        g.elements().find(|&x| {
            self.subgroups[dk].is_subset_of(&self.subgroups[self.conj[sk][x] as usize])
                && self.subgroups[self.conj[sh][x] as usize].is_subset_of(&self.subgroups[dh])
        })
    }
}

pub fn section_graph(g: &FiniteGroup, p: usize) -> Result<SectionGraph> {
    let nodes: Vec<SectionObject> = enumerate_sections(g, p)?
        .into_iter()
        .filter(|s| !s.is_trivial())
        .collect();
    let table = ConjugationTable::new(g, p)?;
    let ids: Vec<(usize, usize)> = nodes
        .iter()
        .map(|s| (table.id[s.h.elements()], table.id[s.k.elements()]))
        .collect();
    let mut edges = Vec::new();
    let mut uf = UnionFind::<usize>::new(nodes.len());
    for a in 0..nodes.len() {
        for b in (a + 1)..nodes.len() {
            let found = table
                .morphism(g, ids[a], ids[b])
                .map(|w| SectionEdge {
                    source: a,
                    target: b,
                    witness: w,
                })
                .or_else(|| {
                    table.morphism(g, ids[b], ids[a]).map(|w| SectionEdge {
                        source: b,
                        target: a,
                        witness: w,
                    })
                });
            if let Some(e) = found {
                uf.union(a, b);
                edges.push(e);
            }
        }
    }
    let mut label: HashMap<usize, usize> = HashMap::new();
    let components: Vec<usize> = (0..nodes.len())
        .map(|i| {
            let next = label.len();
            *label.entry(uf.find(i)).or_insert(next)
        })
        .collect();
    Ok(SectionGraph {
        prime: p,
        nodes,
        edges,
        components,
        component_count: label.len(),
    })
}

pub fn component_count(g: &FiniteGroup, p: usize) -> Result<usize> {
    Ok(section_graph(g, p)?.component_count)
}

/// Graphviz rendering of the section graph, one cluster per component.
pub fn section_graph_dot(name: &str, graph: &SectionGraph) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    let _ = writeln!(out, "graph sections {{");
    let _ = writeln!(
        out,
        "  graph [label=\"elementary abelian sections of {name} at p = {}\"];",
        graph.prime
    );
    let _ = writeln!(out, "  node [shape=box, fontname=\"Helvetica\"];");
    for c in 0..graph.component_count {
        let _ = writeln!(out, "  subgraph cluster_{c} {{");
        let _ = writeln!(out, "    label=\"component {c}\";");
        for (i, n) in graph
            .nodes
            .iter()
            .enumerate()
            .filter(|(i, _)| graph.components[*i] == c)
        {
            let _ = writeln!(
                out,
                "    s{i} [label=\"H = {}\\nK = {}\\nrank {}\"];",
                n.h, n.k, n.rank
            );
        }
        let _ = writeln!(out, "  }}");
    }
    for e in &graph.edges {
        let _ = writeln!(
            out,
            "  s{} -- s{} [label=\"{}\"];",
            e.source, e.target, e.witness
        );
    }
    let _ = writeln!(out, "}}");
    out
}

/// A section `K' <| H'` with `K' < H < H'` and `H'/K'` elementary abelian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurroundingSection {
    pub k: Subgroup,
    pub h: Subgroup,
    pub rank: usize,
}

fn check_p_group(pg: &FiniteGroup, p: usize) -> Result<()> {
    if !is_power_of(pg.order(), p) {
        return argument(format!("expected a {p}-group, got order {}", pg.order()));
    }
    Ok(())
}

/// Overgroups `H' >= H` with `[H' : H] = p`.
fn index_p_overgroups(pg: &FiniteGroup, h: &Subgroup, p: usize) -> Result<Vec<Subgroup>> {
    Ok(pg
        .all_subgroups()?
        .iter()
        .filter(|s| s.order() == h.order() * p && h.is_subset_of(s))
        .cloned()
        .collect())
}

fn is_cyclic_subgroup(pg: &FiniteGroup, s: &Subgroup) -> bool {
    s.elements()
        .iter()
        .any(|&x| pg.element_order(x) == s.order())
}

/// For a proper nontrivial `H` of a p-group: first a non-cyclic index-p
/// overgroup `H'` with `K' = Frattini(H')`, else an exhaustive search.
pub fn surrounding_section(
    pg: &FiniteGroup,
    p: usize,
    h: &Subgroup,
) -> Result<Option<SurroundingSection>> {
    check_p_group(pg, p)?;
    if h.is_trivial() || h.order() == pg.order() {
        return argument("surrounding sections need a proper nontrivial subgroup");
    }
    for over in index_p_overgroups(pg, h, p)? {
        if is_cyclic_subgroup(pg, &over) {
            continue;
        }
        let k = pg.frattini_of(&over)?;
        if k.is_proper_subset_of(h) {
            let rank = log_p(over.order() / k.order(), p);
            debug_assert!(rank >= 2);
            return Ok(Some(SurroundingSection { k, h: over, rank }));
        }
    }
    for over in pg
        .all_subgroups()?
        .iter()
        .filter(|s| h.is_proper_subset_of(s))
    {
        for k in pg.subgroups_of(over)? {
            if k.is_proper_subset_of(h)
                && pg.is_normal_in(&k, over)
                && pg.is_elementary_abelian_section(over, &k, p)
            {
                let rank = log_p(over.order() / k.order(), p);
                return Ok(Some(SurroundingSection {
                    k,
                    h: over.clone(),
                    rank,
                }));
            }
        }
    }
    Ok(None)
}

/// Some proper nontrivial `H` whose index-p overgroups are all cyclic.
pub fn bottleneck_subgroup(pg: &FiniteGroup, p: usize) -> Result<Option<Subgroup>> {
    check_p_group(pg, p)?;
    for h in pg.all_subgroups()? {
        if h.is_trivial() || h.order() == pg.order() {
            continue;
        }
        if index_p_overgroups(pg, h, p)?
            .iter()
            .all(|s| is_cyclic_subgroup(pg, s))
        {
            return Ok(Some(h.clone()));
        }
    }
    Ok(None)
}

pub fn bottleneck_holds(pg: &FiniteGroup, p: usize) -> Result<bool> {
    Ok(bottleneck_subgroup(pg, p)?.is_some())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VerdictKind {
    /// `p` does not divide `|G|`: the category is zero.
    Zero,
    Indecomposable,
    CyclicSylow {
        n: usize,
    },
    QuaternionSylow {
        n: usize,
    },
}

impl std::fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VerdictKind::Zero => write!(f, "zero"),
            VerdictKind::Indecomposable => write!(f, "indecomposable"),
            VerdictKind::CyclicSylow { n } => write!(f, "cyclic_sylow({n})"),
            VerdictKind::QuaternionSylow { n } => write!(f, "quaternion_sylow({n})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionVerdict {
    pub kind: VerdictKind,
    pub sylow_type: IsoType,
    /// Predicted from the Sylow type.
    pub route_a_components: usize,
    /// Counted in the section graph.
    pub route_b_components: usize,
    pub factors: Vec<String>,
    pub notes: Vec<String>,
}

impl DecompositionVerdict {
    pub fn consistent(&self) -> bool {
        self.route_a_components == self.route_b_components
    }

    pub fn components(&self) -> usize {
        self.route_a_components
    }

    /// `Err` when the two routes disagree.
    pub fn checked(self) -> Result<Self> {
        if self.consistent() {
            Ok(self)
        } else {
            Err(Error::Inconsistency(format!(
                "Sylow type {} predicts {} components, section graph has {}",
                self.sylow_type, self.route_a_components, self.route_b_components
            )))
        }
    }
}

/// Short name: recognized type, else the group's own name, else a catalog
/// group it is isomorphic to, else its order.
pub fn describe_group(g: &FiniteGroup) -> String {
    match g.iso_type() {
        IsoType::Other { order } => {
            if let Some(n) = g.name() {
                return n.to_string();
            }
            if order <= ISOMORPHISM_ORDER_LIMIT {
                for name in catalog_names().unwrap_or_default() {
                    if let Ok(c) = catalog(&name) {
                        if c.order() == order && isomorphic(&c, g).unwrap_or(false) {
                            return name;
                        }
                    }
                }
            }
            format!("group of order {order}")
        }
        t => t.to_string(),
    }
}

pub fn decomposability_verdict(g: &GroupRef, p: usize) -> Result<DecompositionVerdict> {
    let sylow = g.sylow_subgroup(p)?;
    let sylow_group = SubgroupInclusion::new(g, &sylow)?;
    let sylow_type = sylow_group.sub().iso_type();
    let route_b = component_count(g, p)?;
    let mut factors = Vec::new();
    let mut notes = Vec::new();
    let (kind, route_a) = match sylow_type {
        IsoType::Trivial => (VerdictKind::Zero, 0),
        IsoType::Cyclic { exponent: n, .. } => {
            // H_i is the subgroup of order p^(n-i) of the Sylow, i = 1..n
            for i in 1..=n {
                let order = p.pow((n - i) as u32);
                let hi = g
                    .subgroups_of(&sylow)?
                    .into_iter()
                    .find(|s| s.order() == order)
                    .expect("cyclic p-group has a subgroup of each order");
                let w = g.weyl_group(&hi);
                factors.push(format!("StMod(k{})", describe_group(w.group())));
            }
            notes.push(format!(
                "factors are StMod(k W_G(H_i)) for i = 1..{n}, where H_i is the subgroup of index p^i \
                 in the Sylow; the factor for i = {n} is StMod(kG); a range ending at i = {} would omit it",
                n - 1
            ));
            (VerdictKind::CyclicSylow { n }, n)
        }
        IsoType::GeneralizedQuaternion { n } => {
            let z = g.intersection(&g.centralizer(&sylow), &sylow);
            let w = g.weyl_group(&z);
            factors.push(format!("StPerm({};k)", describe_group(w.group())));
            factors.push(format!("StMod(k{})", describe_group(g)));
            (VerdictKind::QuaternionSylow { n }, 2)
        }
        _ => (VerdictKind::Indecomposable, 1),
    };
    if !g.order().is_multiple_of(p) {
        notes.push(format!(
            "{p} does not divide |G| = {}: every complex is perfect",
            g.order()
        ));
    }
    Ok(DecompositionVerdict {
        kind,
        sylow_type,
        route_a_components: route_a,
        route_b_components: route_b,
        factors,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub_of_order(g: &FiniteGroup, order: usize) -> Vec<Subgroup> {
        g.all_subgroups()
            .unwrap()
            .iter()
            .filter(|s| s.order() == order)
            .cloned()
            .collect()
    }

    #[test]
    fn sections_of_cyclic_groups() {
        let c3 = catalog("C3").unwrap();
        let s = enumerate_sections(&c3, 3).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.iter().filter(|x| !x.is_trivial()).count(), 1);
        let c27 = catalog("C27").unwrap();
        let nontrivial: Vec<_> = enumerate_sections(&c27, 3)
            .unwrap()
            .into_iter()
            .filter(|x| !x.is_trivial())
            .collect();
        assert_eq!(nontrivial.len(), 3);
        assert!(nontrivial.iter().all(|x| x.h.order() == 3 * x.k.order()));
    }

    #[test]
    fn sections_of_q8() {
        let q8 = catalog("Q8").unwrap();
        let s: Vec<_> = enumerate_sections(&q8, 2)
            .unwrap()
            .into_iter()
            .filter(|x| !x.is_trivial())
            .collect();
        assert_eq!(s.len(), 8);
        assert_eq!(s.iter().filter(|x| x.rank == 2).count(), 1);
    }

    #[test]
    fn morphism_examples() {
        let q8 = catalog("Q8").unwrap();
        let z = q8.center();
        let c4 = sub_of_order(&q8, 4)[0].clone();
        let a = SectionObject {
            h: c4,
            k: z.clone(),
            rank: 1,
        };
        let b = SectionObject {
            h: q8.whole(),
            k: z,
            rank: 2,
        };
        assert_eq!(find_morphism(&q8, &a, &a).unwrap().element, 0);
        assert_eq!(find_morphism(&q8, &a, &b).unwrap().element, 0);
        assert!(find_morphism(&q8, &b, &a).is_none());
        assert_eq!(a.quotient(&q8).unwrap().group().order(), 2);
    }

    #[test]
    fn component_counts() {
        for (name, p, expected) in [
            ("C27", 3, 3),
            ("Q8", 2, 2),
            ("A4", 2, 1),
            ("V4", 2, 1),
            ("S3", 3, 1),
            ("S3", 5, 0),
        ] {
            let g = catalog(name).unwrap();
            assert_eq!(component_count(&g, p).unwrap(), expected, "{name} at {p}");
        }
        let q8 = catalog("Q8").unwrap();
        let graph = section_graph(&q8, 2).unwrap();
        let zc = graph
            .component_of(&SectionObject {
                h: q8.center(),
                k: q8.trivial_subgroup(),
                rank: 1,
            })
            .unwrap();
        assert_eq!(graph.members(zc).len(), 1);
        let dot = section_graph_dot("Q8", &graph);
        assert_eq!(dot.matches("subgraph cluster_").count(), 2);
    }

    #[test]
    fn surrounding_examples() {
        let d8 = catalog("D8").unwrap();
        for h in sub_of_order(&d8, 2) {
            let s = surrounding_section(&d8, 2, &h).unwrap().unwrap();
            assert!(s.rank >= 2);
        }
        let q8 = catalog("Q8").unwrap();
        assert_eq!(surrounding_section(&q8, 2, &q8.center()).unwrap(), None);
        let c8 = catalog("C8").unwrap();
        assert_eq!(
            surrounding_section(&c8, 2, &sub_of_order(&c8, 2)[0]).unwrap(),
            None
        );
    }

    #[test]
    fn bottleneck_examples() {
        assert!(bottleneck_holds(&catalog("Q16").unwrap(), 2).unwrap());
        assert!(!bottleneck_holds(&catalog("V4").unwrap(), 2).unwrap());
        assert!(bottleneck_holds(&catalog("C9").unwrap(), 3).unwrap());
        assert!(!bottleneck_holds(&catalog("C3").unwrap(), 3).unwrap());
        assert!(bottleneck_holds(&catalog("S3").unwrap(), 2).is_err());
    }

    #[test]
    fn verdict_examples() {
        let v = decomposability_verdict(&catalog("C9").unwrap(), 3)
            .unwrap()
            .checked()
            .unwrap();
        assert_eq!(v.kind, VerdictKind::CyclicSylow { n: 2 });
        assert_eq!(v.factors, vec!["StMod(kC_3)", "StMod(kC_9)"]);
        let v = decomposability_verdict(&catalog("Q8").unwrap(), 2)
            .unwrap()
            .checked()
            .unwrap();
        assert_eq!(v.kind, VerdictKind::QuaternionSylow { n: 3 });
        assert_eq!(v.factors, vec!["StPerm(V_4;k)", "StMod(kQ_8)"]);
        let v = decomposability_verdict(&catalog("S4").unwrap(), 2)
            .unwrap()
            .checked()
            .unwrap();
        assert_eq!(v.kind, VerdictKind::Indecomposable);
        assert_eq!(v.components(), 1);
    }
}
