//! Finite spectra of cyclic p-groups, stratification skeletons for arbitrary
//! groups, puncturing at the closed points, and DOT / JSON emitters.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{argument, Result};
use crate::group::{log_p, FiniteGroup, GroupRef, IsoType, Subgroup, SubgroupInclusion};
use crate::sections::{describe_group, section_graph};

pub const SPECTRUM_SCHEMA: &str = "spectrum.v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StratumShape {
    /// Only the closed point.
    Point,
    /// A generic point specializing to the closed point.
    SierpinskiPair,
    /// A projective space of the given dimension with one closed point on top.
    ExtendedProjective { dimension: usize },
}

impl StratumShape {
    fn for_weyl(sylow_type: &IsoType, p_rank: usize) -> Self {
        if p_rank == 0 {
            StratumShape::Point
        } else if sylow_type.is_cyclic() || sylow_type.is_generalized_quaternion() {
            StratumShape::SierpinskiPair
        } else {
            StratumShape::ExtendedProjective {
                dimension: p_rank - 1,
            }
        }
    }
}

impl std::fmt::Display for StratumShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StratumShape::Point => write!(f, "1 point"),
            StratumShape::SierpinskiPair => write!(f, "2 points"),
            StratumShape::ExtendedProjective { dimension } => {
                write!(f, "infinite, extended projective of dimension {dimension}")
            }
        }
    }
}

/// The stratum of one conjugacy class of p-subgroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub representative: Subgroup,
    pub class_size: usize,
    pub weyl_group: String,
    pub weyl_order: usize,
    pub sylow_type: IsoType,
    pub p_rank: usize,
    pub shape: StratumShape,
    pub closed_point: usize,
    pub open_point: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointKind {
    Closed,
    Generic,
    /// Symbolic stand-in for the open part of an infinite stratum.
    OpenStratum,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumPoint {
    pub id: usize,
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alias: Option<String>,
    pub kind: PointKind,
    pub stratum: usize,
}

/// Points grouped by stratum, with specializations `a ~> b` listed as
/// covering pairs `(a, b)`. `order_complete` is set only when the full
/// order is known; otherwise only the relations inside each stratum appear.
#[derive(Debug, Clone)]
pub struct SpectrumPoset {
    pub group: GroupRef,
    pub prime: usize,
    pub strata: Vec<Stratum>,
    pub points: Vec<SpectrumPoint>,
    pub order: Vec<(usize, usize)>,
    pub order_complete: bool,
}

/// A skeleton is a poset whose order is only known inside strata.
pub type StratumSkeleton = SpectrumPoset;

impl SpectrumPoset {
    pub fn group_name(&self) -> String {
        self.group
            .name()
            .map_or_else(|| self.group.display_name(), str::to_string)
    }

    pub fn closed_points(&self) -> impl Iterator<Item = &SpectrumPoint> {
        self.points.iter().filter(|p| p.kind == PointKind::Closed)
    }

    /// Reflexive-transitive closure of the listed relations.
    pub fn specializes(&self, a: usize, b: usize) -> bool {
        let mut seen = vec![false; self.points.len()];
        let mut stack = vec![a];
        while let Some(x) = stack.pop() {
            if x == b {
                return true;
            }
            if std::mem::replace(&mut seen[x], true) {
                continue;
            }
            stack.extend(self.order.iter().filter(|(s, _)| *s == x).map(|(_, t)| *t));
        }
        false
    }

    pub fn is_partial_order(&self) -> bool {
        self.order
            .iter()
            .all(|&(a, b)| a != b && !self.specializes(b, a))
    }

    /// Closed points admit no further specialization.
    pub fn closed_points_are_maximal(&self) -> bool {
        self.order
            .iter()
            .all(|&(a, _)| self.points[a].kind != PointKind::Closed)
    }
}

fn point_label(prefix: &str, h: &Subgroup) -> String {
    format!("{prefix}({h})")
}

/// One stratum per conjugacy class of p-subgroups, with its closed point
/// and, when the Weyl group has order divisible by `p`, its open part.
pub fn skeleton(g: &GroupRef, p: usize) -> Result<StratumSkeleton> {
    if p < 2 || (2..p).any(|d| p.is_multiple_of(d)) {
        return argument(format!("{p} is not a prime"));
    }
    let mut strata = Vec::new();
    let mut points = Vec::new();
    let mut order = Vec::new();
    for class in g.conjugacy_classes_of_p_subgroups(p)? {
        let h = class.representative().clone();
        let w = g.weyl_group(&h);
        let wg = w.group();
        let sylow = wg.sylow_subgroup(p)?;
        let sylow_type = SubgroupInclusion::new(wg, &sylow)?.sub().iso_type();
        let p_rank = wg.p_rank(p)?;
        let shape = StratumShape::for_weyl(&sylow_type, p_rank);
        let index = strata.len();
        let closed = points.len();
        points.push(SpectrumPoint {
            id: closed,
            label: point_label("M", &h),
            alias: None,
            kind: PointKind::Closed,
            stratum: index,
        });
        let open_point = match shape {
            StratumShape::Point => None,
            _ => {
                let id = points.len();
                let kind = if shape == StratumShape::SierpinskiPair {
                    PointKind::Generic
                } else {
                    PointKind::OpenStratum
                };
                points.push(SpectrumPoint {
                    id,
                    label: point_label("gen", &h),
                    alias: None,
                    kind,
                    stratum: index,
                });
                order.push((id, closed));
                Some(id)
            }
        };
        strata.push(Stratum {
            representative: h,
            class_size: class.len(),
            weyl_group: describe_group(wg),
            weyl_order: wg.order(),
            sylow_type,
            p_rank,
            shape,
            closed_point: closed,
            open_point,
        });
    }
    Ok(SpectrumPoset {
        group: g.clone(),
        prime: p,
        strata,
        points,
        order,
        order_complete: false,
    })
}

/// The `2n + 1` point spectrum for `C_{p^n}`: closed points `m_0..m_n`,
/// generic points `p_1..p_n`, with `p_i ~> m_{i-1}` and `p_i ~> m_i`.
/// Here `m_i` is the closed point of the subgroup of index `p^i`.
pub fn cyclic_spectrum(n: usize, p: usize) -> Result<SpectrumPoset> {
    let order = u32::try_from(n).ok().and_then(|e| p.checked_pow(e));
    let Some(order) = order else {
        return argument(format!("C_{{{p}^{n}}} is too large"));
    };
    let g: GroupRef = FiniteGroup::cyclic(order)
        .with_name(format!("C{order}"))
        .into();
    complete_cyclic(skeleton(&g, p)?, n)
}

/// Adds the cross-stratum relations of a cyclic p-group of order `p^n`.
fn complete_cyclic(mut s: SpectrumPoset, n: usize) -> Result<SpectrumPoset> {
    let p = s.prime;
    let index_of = |st: &Stratum| n - log_p(st.representative.order(), p);
    let mut closed_by_index = vec![0; n + 1];
    for st in &s.strata {
        closed_by_index[index_of(st)] = st.closed_point;
    }
    let strata = s.strata.clone();
    for st in &strata {
        let i = index_of(st);
        s.points[st.closed_point].alias = Some(format!("m_{i}"));
        if let Some(gp) = st.open_point {
            s.points[gp].alias = Some(format!("p_{i}"));
            s.order.push((gp, closed_by_index[i - 1]));
        }
    }
    s.order.sort_unstable();
    s.order_complete = true;
    Ok(s)
}

/// The full poset when `g` is a cyclic p-group, the skeleton otherwise.
pub fn spectrum(g: &GroupRef, p: usize) -> Result<SpectrumPoset> {
    let s = skeleton(g, p)?;
    match g.iso_type() {
        IsoType::Trivial => complete_cyclic(s, 0),
        IsoType::Cyclic { prime, exponent } if prime == p => complete_cyclic(s, exponent),
        _ => Ok(s),
    }
}

/// Plain-text listing of strata, points and punctured components.
pub fn emit_text(s: &SpectrumPoset, punctured: &PuncturedSkeleton) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "spectrum of {} at p = {}", s.group_name(), s.prime);
    let _ = writeln!(
        out,
        "{} strata, {} points, order {}",
        s.strata.len(),
        s.points.len(),
        if s.order_complete {
            "complete"
        } else {
            "within strata only"
        }
    );
    for st in &s.strata {
        let _ = writeln!(
            out,
            "  M({}) x{}  W = {} (order {}), Sylow {}, p-rank {}: {}",
            st.representative,
            st.class_size,
            st.weyl_group,
            st.weyl_order,
            st.sylow_type,
            st.p_rank,
            st.shape
        );
    }
    for &(a, b) in &s.order {
        let name = |i: usize| {
            s.points[i]
                .alias
                .clone()
                .unwrap_or_else(|| s.points[i].label.clone())
        };
        let _ = writeln!(out, "  {} ~> {}", name(a), name(b));
    }
    let _ = writeln!(out, "punctured: {}", punctured.summary());
    let _ = writeln!(out, "components: {}", punctured.component_count);
    for (c, members) in punctured.clusters().iter().enumerate() {
        let labels: Vec<&str> = members
            .iter()
            .map(|&m| s.points[punctured.survivors[m].point].label.as_str())
            .collect();
        let _ = writeln!(out, "  component {c}: {}", labels.join(", "));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SurvivorShape {
    Point,
    ProjectiveSpace { dimension: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Survivor {
    pub stratum: usize,
    pub point: usize,
    pub shape: SurvivorShape,
    /// Section-graph components of the sections `(H', H)` with `H` the
    /// stratum representative.
    pub components: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuncturedSkeleton {
    pub survivors: Vec<Survivor>,
    pub component_count: usize,
}

impl PuncturedSkeleton {
    /// Survivor ids per component, components in increasing id order.
    pub fn clusters(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.component_count];
        for (i, s) in self.survivors.iter().enumerate() {
            for &c in &s.components {
                out[c].push(i);
            }
        }
        out
    }

    /// E.g. `P^1 plus 3 points`.
    pub fn summary(&self) -> String {
        let mut dims: Vec<usize> = self
            .survivors
            .iter()
            .filter_map(|s| match s.shape {
                SurvivorShape::ProjectiveSpace { dimension } => Some(dimension),
                SurvivorShape::Point => None,
            })
            .collect();
        dims.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts: Vec<String> = dims.iter().map(|d| format!("P^{d}")).collect();
        let points = self
            .survivors
            .iter()
            .filter(|s| s.shape == SurvivorShape::Point)
            .count();
        match points {
            0 => {}
            1 => parts.push("1 point".into()),
            k => parts.push(format!("{k} points")),
        }
        if parts.is_empty() {
            "empty".into()
        } else {
            parts.join(" plus ")
        }
    }
}

/// Removes the closed points. Components are those of the section graph,
/// renumbered by first appearance among the survivors.
pub fn puncture(s: &SpectrumPoset) -> Result<PuncturedSkeleton> {
    let graph = section_graph(&s.group, s.prime)?;
    let mut renumber: Vec<Option<usize>> = vec![None; graph.component_count];
    let mut next = 0;
    let mut survivors = Vec::new();
    for (index, st) in s.strata.iter().enumerate() {
        let Some(point) = st.open_point else { continue };
        let found: BTreeSet<usize> = graph
            .nodes
            .iter()
            .zip(&graph.components)
            .filter(|(node, _)| node.k == st.representative)
            .map(|(_, &c)| c)
            .collect();
        let components = found
            .into_iter()
            .map(|c| {
                *renumber[c].get_or_insert_with(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect();
        let shape = match st.shape {
            StratumShape::ExtendedProjective { dimension } => {
                SurvivorShape::ProjectiveSpace { dimension }
            }
            _ => SurvivorShape::Point,
        };
        survivors.push(Survivor {
            stratum: index,
            point,
            shape,
            components,
        });
    }
    Ok(PuncturedSkeleton {
        survivors,
        component_count: next,
    })
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn dot_node(out: &mut String, indent: &str, s: &SpectrumPoset, id: usize) {
    let pt = &s.points[id];
    let label = match &pt.alias {
        Some(a) => format!("{a}\\n{}", dot_escape(&pt.label)),
        None => dot_escape(&pt.label),
    };
    let style = match pt.kind {
        PointKind::Closed => "shape=doublecircle, style=filled, fillcolor=\"#d0d0d0\"",
        PointKind::Generic => "shape=circle",
        PointKind::OpenStratum => "shape=box, style=rounded",
    };
    let extra = match s.strata[pt.stratum].shape {
        StratumShape::ExtendedProjective { dimension } if pt.kind == PointKind::OpenStratum => {
            format!(", xlabel=\"P^{dimension}\"")
        }
        _ => String::new(),
    };
    let _ = writeln!(out, "{indent}n{id} [label=\"{label}\", {style}{extra}];");
}

/// Graphviz rendering: closed points double-circled and grey, surviving
/// points grouped into one cluster per component.
pub fn emit_dot(s: &SpectrumPoset, punctured: &PuncturedSkeleton) -> String {
    let mut out = String::new();
    let title = format!("Spc {} at p = {}", s.group_name(), s.prime);
    let _ = writeln!(out, "digraph spectrum {{");
    let _ = writeln!(
        out,
        "  graph [label=\"{}\", rankdir=BT];",
        dot_escape(&title)
    );
    let _ = writeln!(out, "  node [fontname=\"Helvetica\"];");
    let mut clustered = vec![false; s.points.len()];
    for (c, members) in punctured.clusters().iter().enumerate() {
        let _ = writeln!(out, "  subgraph cluster_{c} {{");
        let _ = writeln!(out, "    label=\"component {c}\";");
        let _ = writeln!(out, "    style=dashed;");
        for &m in members {
            let id = punctured.survivors[m].point;
            if !std::mem::replace(&mut clustered[id], true) {
                dot_node(&mut out, "    ", s, id);
            }
        }
        let _ = writeln!(out, "  }}");
    }
    for (id, &done) in clustered.iter().enumerate() {
        if !done {
            dot_node(&mut out, "  ", s, id);
        }
    }
    for &(a, b) in &s.order {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    let _ = writeln!(out, "}}");
    out
}

#[derive(Serialize)]
struct StratumDoc<'a> {
    id: usize,
    representative: &'a [usize],
    class_size: usize,
    weyl_group: &'a str,
    weyl_order: usize,
    sylow_type: &'a IsoType,
    sylow_type_name: String,
    p_rank: usize,
    shape: StratumShape,
    description: String,
    closed_point: usize,
    open_point: Option<usize>,
}

#[derive(Serialize)]
struct ComponentDoc {
    id: usize,
    points: Vec<usize>,
    strata: Vec<usize>,
}

#[derive(Serialize)]
struct SpectrumDoc<'a> {
    schema: &'static str,
    group: String,
    group_order: usize,
    prime: usize,
    order_complete: bool,
    strata: Vec<StratumDoc<'a>>,
    points: &'a [SpectrumPoint],
    order: &'a [(usize, usize)],
    components: Vec<ComponentDoc>,
    punctured_summary: String,
}

/// The `spectrum.v1` document.
pub fn emit_json(s: &SpectrumPoset, punctured: &PuncturedSkeleton) -> String {
    let doc = SpectrumDoc {
        schema: SPECTRUM_SCHEMA,
        group: s.group_name(),
        group_order: s.group.order(),
        prime: s.prime,
        order_complete: s.order_complete,
        strata: s
            .strata
            .iter()
            .enumerate()
            .map(|(id, st)| StratumDoc {
                id,
                representative: st.representative.elements(),
                class_size: st.class_size,
                weyl_group: &st.weyl_group,
                weyl_order: st.weyl_order,
                sylow_type: &st.sylow_type,
                sylow_type_name: st.sylow_type.to_string(),
                p_rank: st.p_rank,
                shape: st.shape,
                description: st.shape.to_string(),
                closed_point: st.closed_point,
                open_point: st.open_point,
            })
            .collect(),
        points: &s.points,
        order: &s.order,
        components: punctured
            .clusters()
            .into_iter()
            .enumerate()
            .map(|(id, members)| ComponentDoc {
                id,
                points: members
                    .iter()
                    .map(|&m| punctured.survivors[m].point)
                    .collect(),
                strata: members
                    .iter()
                    .map(|&m| punctured.survivors[m].stratum)
                    .collect(),
            })
            .collect(),
        punctured_summary: punctured.summary(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("spectrum document serializes");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog;

    #[test]
    fn cyclic_point_counts() {
        for p in [2, 3, 5] {
            for n in 0..=3 {
                let s = cyclic_spectrum(n, p).unwrap();
                assert_eq!(s.points.len(), 2 * n + 1);
                assert_eq!(s.order.len(), 2 * n);
                assert!(s.is_partial_order() && s.closed_points_are_maximal());
                let pu = puncture(&s).unwrap();
                assert_eq!(pu.component_count, n);
                assert!(pu.survivors.iter().all(|x| x.components.len() == 1));
            }
        }
    }

    #[test]
    fn cyclic_zigzag() {
        let s = cyclic_spectrum(2, 3).unwrap();
        let by_alias = |a: &str| {
            s.points
                .iter()
                .find(|p| p.alias.as_deref() == Some(a))
                .unwrap()
                .id
        };
        let (m0, m1, m2, p1, p2) = (
            by_alias("m_0"),
            by_alias("m_1"),
            by_alias("m_2"),
            by_alias("p_1"),
            by_alias("p_2"),
        );
        assert!(s.specializes(p1, m0) && s.specializes(p1, m1));
        assert!(s.specializes(p2, m1) && s.specializes(p2, m2));
        assert!(!s.specializes(p1, m2) && !s.specializes(p2, m0) && !s.specializes(p1, p2));
        assert_eq!(s.points[m0].label, "M({0,1,2,3,4,5,6,7,8})");
        assert_eq!(s.points[m2].label, "M({0})");
    }

    #[test]
    fn v4_skeleton() {
        let g = catalog("V4").unwrap();
        let s = skeleton(&g, 2).unwrap();
        assert_eq!(s.strata.len(), 5);
        let ranks: Vec<usize> = s.strata.iter().map(|x| x.p_rank).collect();
        assert_eq!(ranks, vec![2, 1, 1, 1, 0]);
        assert_eq!(
            s.strata[0].shape,
            StratumShape::ExtendedProjective { dimension: 1 }
        );
        let pu = puncture(&s).unwrap();
        assert_eq!(pu.summary(), "P^1 plus 3 points");
        assert_eq!(pu.component_count, 1);
    }

    #[test]
    fn q8_skeleton() {
        let g = catalog("Q8").unwrap();
        let s = skeleton(&g, 2).unwrap();
        assert_eq!(s.closed_points().count(), 6);
        assert_eq!(s.strata[0].shape, StratumShape::SierpinskiPair);
        let pu = puncture(&s).unwrap();
        assert_eq!(pu.component_count, 2);
        let clusters = pu.clusters();
        let single = clusters.iter().find(|c| c.len() == 1).unwrap();
        assert!(s.strata[pu.survivors[single[0]].stratum]
            .representative
            .is_trivial());
        let dot = emit_dot(&s, &pu);
        assert_eq!(dot.matches("subgraph cluster_").count(), 2);
    }

    #[test]
    fn dot_and_json_shapes() {
        let s = cyclic_spectrum(1, 2).unwrap();
        let pu = puncture(&s).unwrap();
        let dot = emit_dot(&s, &pu);
        assert_eq!(
            dot.lines()
                .filter(|l| l.trim_start().starts_with('n') && l.contains("[label="))
                .count(),
            3
        );
        assert_eq!(dot.matches(" -> ").count(), 2);
        assert_eq!(dot, emit_dot(&s, &pu));
        let v: serde_json::Value = serde_json::from_str(&emit_json(&s, &pu)).unwrap();
        for key in ["group", "prime", "strata", "points", "order", "components"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["schema"], SPECTRUM_SCHEMA);
    }

    #[test]
    fn spectrum_dispatch() {
        let c8 = catalog("C8").unwrap();
        let s = spectrum(&c8, 2).unwrap();
        assert!(s.order_complete);
        assert_eq!(s.points.len(), 7);
        let q8 = catalog("Q8").unwrap();
        assert!(!spectrum(&q8, 2).unwrap().order_complete);
        let text = emit_text(&s, &puncture(&s).unwrap());
        assert!(text.contains("components: 3"));
    }

    #[test]
    fn coprime_prime_gives_a_single_point() {
        let g = catalog("C3").unwrap();
        let s = skeleton(&g, 2).unwrap();
        assert_eq!(s.points.len(), 1);
        assert_eq!(puncture(&s).unwrap().component_count, 0);
        assert!(skeleton(&g, 4).is_err());
    }
}
