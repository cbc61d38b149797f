//! The `report.v1` analysis document and the p-group survey.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;

use crate::error::Result;
use crate::group::{catalog, catalog_names, is_power_of, GroupRef, IsoType, SubgroupInclusion};
use crate::gset::{brauer_quotient_map, coset_gset, hom_basis, EquivariantMap, GSetRef};
use crate::linalg::PrimeField;
use crate::sections::{
    bottleneck_subgroup, decomposability_verdict, describe_group, section_graph,
    surrounding_section, VerdictKind,
};
use crate::spectrum::{puncture, skeleton, StratumShape};
use crate::stable::SupportProfile;

pub const REPORT_SCHEMA: &str = "report.v1";

#[derive(Debug, Clone, Serialize)]
pub struct GroupSummary {
    pub name: String,
    pub order: usize,
    pub iso_type: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SylowSummary {
    pub order: usize,
    pub iso_type: IsoType,
    pub description: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassSummary {
    pub representative: Vec<usize>,
    pub order: usize,
    pub class_size: usize,
    pub weyl_order: usize,
    pub weyl_group: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SectionCensus {
    pub total: usize,
    pub nontrivial: usize,
    /// Number of nontrivial sections per rank of `H/K`.
    pub by_rank: BTreeMap<usize, usize>,
    pub edges: usize,
    pub components: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct BottleneckFinding {
    /// Whether the Sylow subgroup has order at least `p^2`.
    pub applicable: bool,
    pub holds: bool,
    /// A bottleneck subgroup, as elements of the ambient group.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictSummary {
    pub kind: VerdictKind,
    pub route_a_components: usize,
    pub route_b_components: usize,
    pub consistent: bool,
    pub factors: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct StratumSummary {
    pub representative: Vec<usize>,
    pub p_rank: usize,
    pub shape: StratumShape,
}

#[derive(Debug, Clone, Serialize)]
pub struct SkeletonSummary {
    pub closed_points: usize,
    pub strata: Vec<StratumSummary>,
    pub punctured: String,
    pub punctured_components: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub schema: &'static str,
    pub group: GroupSummary,
    pub prime: usize,
    pub sylow: SylowSummary,
    pub p_subgroup_classes: Vec<ClassSummary>,
    pub sections: SectionCensus,
    pub bottleneck: BottleneckFinding,
    pub verdict: VerdictSummary,
    pub skeleton: SkeletonSummary,
    pub notes: Vec<String>,
}

impl AnalysisReport {
    pub fn consistent(&self) -> bool {
        self.verdict.consistent
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "group      {} (order {}, {})",
            self.group.name, self.group.order, self.group.iso_type
        );
        let _ = writeln!(out, "prime      {}", self.prime);
        let _ = writeln!(
            out,
            "sylow      {} (order {})",
            self.sylow.description, self.sylow.order
        );
        let _ = writeln!(out, "p-subgroup classes: {}", self.p_subgroup_classes.len());
        for c in &self.p_subgroup_classes {
            let _ = writeln!(
                out,
                "  {:?} order {} x{}  W = {} (order {})",
                c.representative, c.order, c.class_size, c.weyl_group, c.weyl_order
            );
        }
        let ranks: Vec<String> = self
            .sections
            .by_rank
            .iter()
            .map(|(r, n)| format!("rank {r}: {n}"))
            .collect();
        let _ = writeln!(
            out,
            "sections   {} total, {} nontrivial ({}), {} edges, {} components",
            self.sections.total,
            self.sections.nontrivial,
            ranks.join(", "),
            self.sections.edges,
            self.sections.components
        );
        if self.bottleneck.applicable {
            let _ = writeln!(
                out,
                "bottleneck {}{}",
                self.bottleneck.holds,
                self.bottleneck
                    .witness
                    .as_ref()
                    .map_or(String::new(), |w| format!(" at {w:?}"))
            );
        } else {
            let _ = writeln!(out, "bottleneck not applicable (Sylow order below p^2)");
        }
        let _ = writeln!(
            out,
            "verdict    {} (components: route A {}, route B {}{})",
            self.verdict.kind,
            self.verdict.route_a_components,
            self.verdict.route_b_components,
            if self.verdict.consistent {
                ""
            } else {
                ", INCONSISTENT"
            }
        );
        if !self.verdict.factors.is_empty() {
            let _ = writeln!(out, "factors    {}", self.verdict.factors.join(" x "));
        }
        let _ = writeln!(
            out,
            "skeleton   {} closed points; punctured: {} in {} component(s)",
            self.skeleton.closed_points,
            self.skeleton.punctured,
            self.skeleton.punctured_components
        );
        for n in &self.notes {
            let _ = writeln!(out, "note       {n}");
        }
        out
    }
}

pub fn group_label(g: &GroupRef) -> String {
    g.name().map_or_else(|| g.display_name(), str::to_string)
}

pub fn analyze(g: &GroupRef, p: usize) -> Result<AnalysisReport> {
    let verdict = decomposability_verdict(g, p)?;
    let sylow = g.sylow_subgroup(p)?;
    let inc = SubgroupInclusion::new(g, &sylow)?;
    let classes = g
        .conjugacy_classes_of_p_subgroups(p)?
        .iter()
        .map(|c| {
            let w = g.weyl_group(c.representative());
            ClassSummary {
                representative: c.representative().elements().to_vec(),
                order: c.representative().order(),
                class_size: c.len(),
                weyl_order: w.group().order(),
                weyl_group: describe_group(w.group()),
            }
        })
        .collect();
    let graph = section_graph(g, p)?;
    let mut by_rank = BTreeMap::new();
    for n in &graph.nodes {
        *by_rank.entry(n.rank).or_insert(0) += 1;
    }
    let total = crate::sections::enumerate_sections(g, p)?.len();
    let applicable = sylow.order() >= p * p;
    let witness = if applicable {
        bottleneck_subgroup(inc.sub(), p)?
    } else {
        None
    };
    let skel = skeleton(g, p)?;
    let punctured = puncture(&skel)?;
    let notes = verdict.notes.clone();
    Ok(AnalysisReport {
        schema: REPORT_SCHEMA,
        group: GroupSummary {
            name: group_label(g),
            order: g.order(),
            iso_type: describe_group(g),
        },
        prime: p,
        sylow: SylowSummary {
            order: sylow.order(),
            iso_type: verdict.sylow_type,
            description: describe_group(inc.sub()),
        },
        p_subgroup_classes: classes,
        sections: SectionCensus {
            total,
            nontrivial: graph.nodes.len(),
            by_rank,
            edges: graph.edges.len(),
            components: graph.component_count,
        },
        bottleneck: BottleneckFinding {
            applicable,
            holds: witness.is_some(),
            witness: witness.map(|h| inc.push_forward(&h).elements().to_vec()),
        },
        verdict: VerdictSummary {
            kind: verdict.kind,
            route_a_components: verdict.route_a_components,
            route_b_components: verdict.route_b_components,
            consistent: verdict.consistent(),
            factors: verdict.factors.clone(),
        },
        skeleton: SkeletonSummary {
            closed_points: skel.closed_points().count(),
            strata: skel
                .strata
                .iter()
                .map(|s| StratumSummary {
                    representative: s.representative.elements().to_vec(),
                    p_rank: s.p_rank,
                    shape: s.shape,
                })
                .collect(),
            punctured: punctured.summary(),
            punctured_components: punctured.component_count,
        },
        notes,
    })
}

/// Text rendering of a support profile.
pub fn profile_text(profile: &SupportProfile, acyclic: bool) -> String {
    let mut out = String::new();
    for e in &profile.entries {
        let _ = writeln!(
            out,
            "  {} (x{}): {}",
            e.representative, e.class_size, e.kind
        );
    }
    let _ = writeln!(out, "acyclic    {acyclic}");
    let _ = writeln!(out, "perfect    {}", profile.is_perfect());
    let _ = writeln!(out, "eq-perf    {}", profile.is_eq_perf());
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct SurveyRow {
    pub group: String,
    pub order: usize,
    pub iso_type: String,
    pub bottleneck: bool,
    pub expected_bottleneck: bool,
    /// Proper nontrivial subgroups checked for a surrounding section.
    pub subgroups_checked: usize,
    pub surrounding_found: usize,
    pub verdict: VerdictKind,
    pub components: usize,
    pub pass: bool,
}

/// Every catalog p-group of order at most `max_order`.
pub fn survey(max_order: usize, p: usize) -> Result<Vec<SurveyRow>> {
    let mut rows = Vec::new();
    for name in catalog_names()? {
        let g = catalog(&name)?;
        if g.order() > max_order || !is_power_of(g.order(), p) {
            continue;
        }
        let t = g.iso_type();
        let big = g.order() >= p * p;
        let special = t.is_cyclic() || t.is_generalized_quaternion();
        let bottleneck = bottleneck_subgroup(&g, p)?.is_some();
        let (mut checked, mut found) = (0, 0);
        let mut pass = !big || bottleneck == special;
        if big && !special {
            for h in g.all_subgroups()? {
                if h.is_trivial() || h.order() == g.order() {
                    continue;
                }
                checked += 1;
                match surrounding_section(&g, p, h)? {
                    Some(s) if s.rank >= 2 => found += 1,
                    _ => pass = false,
                }
            }
        }
        let v = decomposability_verdict(&g, p)?;
        pass &= v.consistent();
        rows.push(SurveyRow {
            group: name,
            order: g.order(),
            iso_type: t.to_string(),
            bottleneck,
            expected_bottleneck: big && special,
            subgroups_checked: checked,
            surrounding_found: found,
            verdict: v.kind,
            components: v.route_b_components,
            pass,
        });
    }
    rows.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.group.cmp(&b.group)));
    Ok(rows)
}

pub fn survey_text(rows: &[SurveyRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<20} {:>5} {:<12} {:<10} {:<12} {:<22} {:>4} status",
        "group", "order", "type", "bottleneck", "surrounding", "verdict", "comp"
    );
    for r in rows {
        let surrounding = if r.subgroups_checked == 0 {
            "-".to_string()
        } else {
            format!("{}/{}", r.surrounding_found, r.subgroups_checked)
        };
        let _ = writeln!(
            out,
            "{:<20} {:>5} {:<12} {:<10} {:<12} {:<22} {:>4} {}",
            r.group,
            r.order,
            r.iso_type,
            r.bottleneck,
            surrounding,
            r.verdict.to_string(),
            r.components,
            if r.pass { "PASS" } else { "FAIL" }
        );
    }
    out
}

/// Cross-route verdict agreement on the whole catalog, and functoriality
/// of the Brauer quotient on hom bases between small coset G-sets. Returns
/// the list of failures.
pub fn self_check() -> Result<Vec<String>> {
    let mut failures = Vec::new();
    for name in catalog_names()? {
        let g = catalog(&name)?;
        for p in (2..=g.order()).filter(|&q| g.order() % q == 0 && (2..q).all(|d| q % d != 0)) {
            let v = decomposability_verdict(&g, p)?;
            if !v.consistent() {
                failures.push(format!(
                    "{name} at {p}: route A {} components, route B {}",
                    v.route_a_components, v.route_b_components
                ));
            }
        }
    }
    for (name, p) in [("S3", 3u32), ("S3", 2), ("D8", 2), ("A4", 2)] {
        let g = catalog(name)?;
        let field = PrimeField::new(p)?;
        let sets: Vec<GSetRef> = g
            .conjugacy_classes_of_subgroups()?
            .iter()
            .take(4)
            .map(|c| Arc::new(coset_gset(&g, c.representative())))
            .collect();
        for class in g.conjugacy_classes_of_p_subgroups(p as usize)? {
            let weyl = g.weyl_group(class.representative());
            for x in &sets {
                for y in &sets {
                    for z in &sets {
                        let fs = hom_basis(x, y, field)?;
                        let gs = hom_basis(y, z, field)?;
                        for f in fs.iter().take(2) {
                            for h in gs.iter().take(2) {
                                let f = EquivariantMap::new(x, y, f.clone())?;
                                let h = EquivariantMap::new(y, z, h.clone())?;
                                let lhs = brauer_quotient_map(&h.compose(&f)?, &weyl)?;
                                let rhs = brauer_quotient_map(&h, &weyl)?
                                    .compose(&brauer_quotient_map(&f, &weyl)?)?;
                                if lhs.matrix() != rhs.matrix() {
                                    failures.push(format!(
                                        "{name}: Brauer quotient at {} does not preserve a composite",
                                        class.representative()
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analyze_examples() {
        let r = analyze(&catalog("C9").unwrap(), 3).unwrap();
        assert_eq!(r.verdict.kind, VerdictKind::CyclicSylow { n: 2 });
        assert_eq!(r.verdict.route_b_components, 2);
        assert!(r.bottleneck.holds);
        let r = analyze(&catalog("Q8").unwrap(), 2).unwrap();
        assert_eq!(r.skeleton.closed_points, 6);
        assert_eq!(r.skeleton.punctured_components, 2);
        assert!(r.to_text().contains("StMod(kQ_8)"));
        let r = analyze(&catalog("S3").unwrap(), 5).unwrap();
        assert_eq!(r.verdict.kind, VerdictKind::Zero);
        assert!(r.consistent());
    }

    #[test]
    fn survey_rows() {
        let rows = survey(32, 2).unwrap();
        assert!(rows.iter().all(|r| r.pass));
        let q16 = rows.iter().find(|r| r.group == "Q16").unwrap();
        assert!(q16.bottleneck);
        let d8 = rows.iter().find(|r| r.group == "D8").unwrap();
        assert!(
            !d8.bottleneck
                && d8.surrounding_found == d8.subgroups_checked
                && d8.subgroups_checked > 0
        );
        let rows3 = survey(27, 3).unwrap();
        assert!(rows3
            .iter()
            .filter(|r| r.bottleneck)
            .all(|r| r.iso_type.starts_with("C_")));
        assert!(self_check().unwrap().is_empty());
        assert!(survey(1, 7).unwrap().iter().all(|r| r.order == 1));
    }
}
