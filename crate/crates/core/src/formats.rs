//! The `complex.v1` JSON document describing a bounded complex of
//! permutation modules.
//!
//! Each term is a disjoint union of coset G-sets `G/H`, listed orbit by
//! orbit. Within one orbit the cosets are ordered by their smallest element,
//! and the basis of a term is the concatenation of its orbits. A differential
//! of degree `i` maps the degree `i` term to the degree `i - 1` term; its
//! matrix has one row per point of the target and one column per point of
//! the source. Degrees without a listed differential carry the zero map.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::complexes::PermComplex;
use crate::error::{validation, Error, Result};
use crate::group::{catalog, CatalogEntry, FiniteGroup, GroupRef, Subgroup, SubgroupInclusion};
use crate::gset::{coset_gset, disjoint_union, left_cosets, GSet, GSetRef};
use crate::linalg::{Matrix, PrimeField};

pub const COMPLEX_SCHEMA: &str = "complex.v1";

const MAX_TERMS: usize = 64;
const MAX_TERM_SIZE: usize = 2048;
const MAX_DOCUMENT_BYTES: usize = 16 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexSpec {
    pub schema: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub prime: u32,
    pub group: GroupSpec,
    pub terms: Vec<TermSpec>,
    #[serde(default)]
    pub differentials: Vec<DifferentialSpec>,
}

/// A catalog name or an inline catalog entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Catalog(String),
    Inline(CatalogEntry),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub degree: i64,
    pub orbits: Vec<SubgroupSpec>,
}

/// `"1"`, `"G"`, `"Z"`, an isomorphism type with an optional 1-based index
/// among the subgroups of that type (`"C4"`, `"C4#2"`, `"V_4#1"`), or an
/// explicit sorted or unsorted element list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SubgroupSpec {
    Name(String),
    Elements(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DifferentialSpec {
    pub degree: i64,
    pub matrix: Vec<Vec<u32>>,
}

impl GroupSpec {
    pub fn resolve(&self) -> Result<GroupRef> {
        match self {
            GroupSpec::Catalog(name) => catalog(name),
            GroupSpec::Inline(entry) => {
                entry.validate()?;
                Ok(Arc::new(entry.build()?))
            }
        }
    }
}

fn normalize(name: &str) -> String {
    name.chars().filter(|c| *c != '_').collect()
}

fn sub_iso_name(group: &GroupRef, h: &Subgroup) -> Result<String> {
    Ok(normalize(
        &SubgroupInclusion::new(group, h)?
            .sub()
            .iso_type()
            .to_string(),
    ))
}

impl SubgroupSpec {
    pub fn resolve(&self, group: &GroupRef) -> Result<Subgroup> {
        match self {
            SubgroupSpec::Elements(els) => {
                if els.iter().any(|&e| e >= group.order()) {
                    return validation(format!(
                        "subgroup {els:?} names elements outside the group"
                    ));
                }
                group
                    .subgroup(els.clone())
                    .map_err(|e| Error::Validation(format!("{els:?} is not a subgroup: {e}")))
            }
            SubgroupSpec::Name(name) => match name.as_str() {
                "1" => Ok(group.trivial_subgroup()),
                "G" => Ok(group.whole()),
                "Z" => Ok(group.center()),
                _ => resolve_named(group, name),
            },
        }
    }
}

fn resolve_named(group: &GroupRef, name: &str) -> Result<Subgroup> {
    let (kind, index) = match name.split_once('#') {
        Some((k, i)) => match i.parse::<usize>() {
            Ok(i) if i >= 1 => (k, Some(i)),
            _ => return validation(format!("bad subgroup index in `{name}`")),
        },
        None => (name, None),
    };
    let wanted = normalize(kind);
    let mut matches = Vec::new();
    for h in group.all_subgroups()? {
        if sub_iso_name(group, h)? == wanted {
            matches.push(h.clone());
        }
    }
    match (index, matches.len()) {
        (_, 0) => validation(format!("no subgroup of type `{kind}`")),
        (None, 1) => Ok(matches.remove(0)),
        (None, n) => validation(format!(
            "ambiguous subgroup spec `{name}`: {n} subgroups of that type, write `{kind}#k`"
        )),
        (Some(i), n) if i > n => {
            validation(format!("`{name}`: only {n} subgroups of type `{kind}`"))
        }
        (Some(i), _) => Ok(matches.swap_remove(i - 1)),
    }
}

/// The G-set of a term: cosets of each listed subgroup in turn.
pub fn term_gset(group: &GroupRef, orbits: &[Subgroup]) -> Result<GSet> {
    let total: usize = orbits.iter().map(|h| group.order() / h.order()).sum();
    if total > MAX_TERM_SIZE {
        return Err(Error::Resource(format!(
            "term of size {total} exceeds {MAX_TERM_SIZE}"
        )));
    }
    let parts: Vec<GSet> = orbits.iter().map(|h| coset_gset(group, h)).collect();
    disjoint_union(group, &parts.iter().collect::<Vec<_>>())
}

impl ComplexSpec {
    pub fn parse(text: &str) -> Result<Self> {
        if text.len() > MAX_DOCUMENT_BYTES {
            return Err(Error::Resource(format!(
                "document exceeds {MAX_DOCUMENT_BYTES} bytes"
            )));
        }
        let spec: ComplexSpec =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if spec.schema != COMPLEX_SCHEMA {
            return validation(format!(
                "schema `{}`, expected `{COMPLEX_SCHEMA}`",
                spec.schema
            ));
        }
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("complex spec serializes");
        text.push('\n');
        text
    }

    /// Builds the complex, checking equivariance and `d^2 = 0`.
    pub fn build(&self) -> Result<PermComplex> {
        let field =
            PrimeField::new(self.prime).map_err(|e| Error::Validation(format!("prime: {e}")))?;
        let group = self.group.resolve()?;
        if self.terms.len() > MAX_TERMS {
            return Err(Error::Resource(format!("more than {MAX_TERMS} terms")));
        }
        let lo = self.terms.first().map_or(0, |t| t.degree);
        for (k, t) in self.terms.iter().enumerate() {
            if lo.checked_add(k as i64) != Some(t.degree) {
                return validation("term degrees must be consecutive and increasing");
            }
        }
        let terms: Vec<GSetRef> = self
            .terms
            .iter()
            .map(|t| {
                let subs = t
                    .orbits
                    .iter()
                    .map(|o| o.resolve(&group))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Arc::new(term_gset(&group, &subs)?))
            })
            .collect::<Result<_>>()?;
        let mut given: BTreeMap<i64, &DifferentialSpec> = BTreeMap::new();
        for d in &self.differentials {
            let k = d.degree.checked_sub(lo);
            if !matches!(k, Some(k) if k >= 1 && (k as usize) < terms.len()) {
                return validation(format!(
                    "differential of degree {} has no source or target term",
                    d.degree
                ));
            }
            if given.insert(d.degree, d).is_some() {
                return validation(format!("differential of degree {} given twice", d.degree));
            }
        }
        let mut matrices = Vec::with_capacity(terms.len().saturating_sub(1));
        for k in 1..terms.len() {
            let degree = lo + k as i64;
            let (rows, cols) = (terms[k - 1].size(), terms[k].size());
            let m = match given.get(&degree) {
                None => Matrix::zeros(field, rows, cols),
                Some(d) => {
                    if d.matrix.len() != rows || d.matrix.iter().any(|r| r.len() != cols) {
                        return validation(format!("d_{degree} must be {rows}x{cols}"));
                    }
                    let data: Vec<u8> = d
                        .matrix
                        .iter()
                        .flatten()
                        .map(|&v| u8::try_from(v).ok().filter(|&v| u32::from(v) < field.p()))
                        .collect::<Option<_>>()
                        .ok_or_else(|| {
                            Error::Validation(format!(
                                "d_{degree} has an entry outside 0..{}",
                                field.p()
                            ))
                        })?;
                    Matrix::from_entries(field, rows, cols, data)?
                }
            };
            matrices.push(m);
        }
        PermComplex::new(&group, field, lo, terms, matrices).map_err(|e| match e {
            Error::Argument(m) => Error::Validation(m),
            other => other,
        })
    }

    /// Describes `c` in the coset basis. Terms of `c` are re-expressed orbit
    /// by orbit through the stabilizer of each orbit representative.
    pub fn from_complex(c: &PermComplex, group: GroupSpec) -> Result<Self> {
        let g = c.group();
        let mut terms = Vec::new();
        let mut relabel = Vec::new();
        for (k, x) in c.terms().iter().enumerate() {
            let (orbits, perm) = coset_form(g, x);
            terms.push(TermSpec {
                degree: c.lo() + k as i64,
                orbits: orbits.iter().map(|h| subgroup_spec(g, h)).collect(),
            });
            relabel.push(perm);
        }
        let differentials = c
            .differentials()
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.matrix().is_zero())
            .map(|(k, d)| {
                let (rows, cols) = (&relabel[k], &relabel[k + 1]);
                let m = d.matrix();
                let mut out = vec![vec![0u32; m.cols()]; m.rows()];
                for r in 0..m.rows() {
                    for col in 0..m.cols() {
                        out[rows[r]][cols[col]] = u32::from(m.get(r, col));
                    }
                }
                DifferentialSpec {
                    degree: c.lo() + k as i64 + 1,
                    matrix: out,
                }
            })
            .collect();
        Ok(ComplexSpec {
            schema: COMPLEX_SCHEMA.to_string(),
            description: None,
            prime: c.field().p(),
            group,
            terms,
            differentials,
        })
    }
}

fn subgroup_spec(g: &FiniteGroup, h: &Subgroup) -> SubgroupSpec {
    if h.order() == g.order() {
        SubgroupSpec::Name("G".into())
    } else if h.is_trivial() {
        SubgroupSpec::Name("1".into())
    } else {
        SubgroupSpec::Elements(h.elements().to_vec())
    }
}

/// Orbit stabilizers of `x` and the map from points of `x` to their index in
/// the coset realization.
fn coset_form(g: &GroupRef, x: &GSet) -> (Vec<Subgroup>, Vec<usize>) {
    let mut perm = vec![0; x.size()];
    let mut stabilizers = Vec::new();
    let mut offset = 0;
    for orbit in x.orbits() {
        let (reps, coset_of) = left_cosets(g, &orbit.stabilizer);
        for el in g.elements() {
            perm[x.act(el, orbit.representative)] = offset + coset_of[el];
        }
        offset += reps.len();
        stabilizers.push(orbit.stabilizer.clone());
    }
    (stabilizers, perm)
}

/// Parses and builds in one step.
pub fn load_complex(text: &str) -> Result<(ComplexSpec, PermComplex)> {
    let spec = ComplexSpec::parse(text)?;
    let c = spec.build()?;
    Ok((spec, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{cyclic_acyclic_complex, koszul_object};

    fn v4() -> GroupRef {
        catalog("V4").unwrap()
    }

    #[test]
    fn named_subgroups() {
        let g = v4();
        assert!(SubgroupSpec::Name("1".into())
            .resolve(&g)
            .unwrap()
            .is_trivial());
        assert_eq!(
            SubgroupSpec::Name("G".into()).resolve(&g).unwrap().order(),
            4
        );
        let e = SubgroupSpec::Name("C2".into()).resolve(&g).unwrap_err();
        assert!(e.to_string().contains("ambiguous"), "{e}");
        let a = SubgroupSpec::Name("C2#1".into()).resolve(&g).unwrap();
        let b = SubgroupSpec::Name("C_2#3".into()).resolve(&g).unwrap();
        assert!(a.order() == 2 && b.order() == 2 && a != b);
        assert!(SubgroupSpec::Name("C2#4".into()).resolve(&g).is_err());
        assert!(SubgroupSpec::Name("C2#0".into()).resolve(&g).is_err());
        assert!(SubgroupSpec::Elements(vec![0, 1, 2]).resolve(&g).is_err());
        let q8 = catalog("Q8").unwrap();
        assert_eq!(
            SubgroupSpec::Name("Z".into()).resolve(&q8).unwrap().order(),
            2
        );
        assert_eq!(
            SubgroupSpec::Name("C4#2".into())
                .resolve(&q8)
                .unwrap()
                .order(),
            4
        );
    }

    #[test]
    fn round_trip_through_coset_form() {
        for c in [
            cyclic_acyclic_complex(3).unwrap(),
            koszul_object(&v4(), PrimeField::new(2).unwrap()).unwrap(),
        ] {
            let name = c.group().name().unwrap().to_string();
            let spec = ComplexSpec::from_complex(&c, GroupSpec::Catalog(name)).unwrap();
            let built = spec.build().unwrap();
            assert_eq!(built.dims(), c.dims());
            assert_eq!(built.homology(), c.homology());
            let again = ComplexSpec::parse(&spec.to_json()).unwrap();
            assert_eq!(again, spec);
        }
    }

    #[test]
    fn load_errors_name_the_invariant() {
        let base = r#"{"schema":"complex.v1","prime":2,"group":"C2","terms":[{"degree":0,"orbits":["G"]},{"degree":1,"orbits":["1"]}],"differentials":[{"degree":1,"matrix":[[1,0]]}]}"#;
        let e = load_complex(base).unwrap_err();
        assert!(matches!(e, Error::Validation(_)), "{e}");
        let fixed = base.replace("[[1,0]]", "[[1,1]]");
        assert!(load_complex(&fixed).is_ok());
        let bad_entry = base.replace("[[1,0]]", "[[1,2]]");
        assert!(load_complex(&bad_entry)
            .unwrap_err()
            .to_string()
            .contains("outside"));
        let bad_shape = base.replace("[[1,0]]", "[[1]]");
        assert!(load_complex(&bad_shape)
            .unwrap_err()
            .to_string()
            .contains("1x2"));
        assert!(matches!(load_complex("{"), Err(Error::Parse(_))));
        let gap = base.replace(r#""degree":1,"orbits""#, r#""degree":2,"orbits""#);
        assert!(load_complex(&gap).is_err());
        let unknown = base.replace(r#""C2""#, r#""Nope""#);
        assert!(matches!(load_complex(&unknown), Err(Error::Argument(_))));
    }

    #[test]
    fn inline_group() {
        let text = r#"{"schema":"complex.v1","prime":3,"group":{"name":"c3","order":3,"generators":[[1,2,0]]},
            "terms":[{"degree":0,"orbits":[[0]]}]}"#;
        let (_, c) = load_complex(text).unwrap();
        assert_eq!(c.dims(), vec![3]);
    }
}
