//! Bounded complexes of permutation modules, homological convention
//! (`d_i : C_i -> C_{i-1}`).

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{argument, validation, Error, Result};
use crate::group::{same_group, FiniteGroup, GroupRef, SubgroupInclusion, WeylGroup};
use crate::gset::{
    self, brauer_between, check_p_subgroup, fixed_points, EquivariantMap, FormalGSet, GSet, GSetRef,
};
use crate::linalg::{Matrix, PrimeField};

/// Largest group accepted by [`koszul_object`]; its terms have `2^|G|` basis
/// vectors in total and are stored densely.
pub const KOSZUL_ORDER_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct PermComplex {
    group: GroupRef,
    field: PrimeField,
    lo: i64,
    terms: Vec<GSetRef>,
    /// `differentials[k]` is `d_{lo+k+1} : terms[k+1] -> terms[k]`.
    differentials: Vec<EquivariantMap>,
}

/// `dim H_i` for `i` in `lo..=hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyReport {
    pub lo: i64,
    pub dims: Vec<usize>,
}

impl HomologyReport {
    pub fn dim(&self, i: i64) -> usize {
        if i < self.lo {
            return 0;
        }
        self.dims.get((i - self.lo) as usize).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Degrees with nonzero homology.
    pub fn support(&self) -> Vec<i64> {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(k, _)| self.lo + k as i64)
            .collect()
    }
}

impl PermComplex {
    /// `terms[k]` sits in degree `lo + k`; `differentials[k]` is the matrix of
    /// `d_{lo+k+1}`. Checks equivariance and `d^2 = 0`.
    pub fn new(
        group: &GroupRef,
        field: PrimeField,
        lo: i64,
        terms: Vec<GSetRef>,
        differentials: Vec<Matrix>,
    ) -> Result<Self> {
        if terms.iter().any(|t| !same_group(t.group(), group)) {
            return argument("complex terms are over a different group");
        }
        let expected = terms.len().saturating_sub(1);
        if differentials.len() != expected {
            return argument(format!(
                "{} terms need {expected} differentials, got {}",
                terms.len(),
                differentials.len()
            ));
        }
        let mut maps = Vec::with_capacity(expected);
        for (k, m) in differentials.into_iter().enumerate() {
            if m.field() != field {
                return argument("differential over a different field");
            }
            let degree = lo + k as i64 + 1;
            let map = EquivariantMap::new(&terms[k + 1], &terms[k], m)
                .map_err(|e| Error::Validation(format!("d_{degree}: {e}")))?;
            maps.push(map);
        }
        let c = PermComplex {
            group: group.clone(),
            field,
            lo,
            terms,
            differentials: maps,
        };
        c.check_square_zero()?;
        Ok(c)
    }

    pub(crate) fn from_parts(
        group: &GroupRef,
        field: PrimeField,
        lo: i64,
        terms: Vec<GSetRef>,
        differentials: Vec<EquivariantMap>,
    ) -> Self {
        let c = PermComplex {
            group: group.clone(),
            field,
            lo,
            terms,
            differentials,
        };
        debug_assert!(c.check_square_zero().is_ok());
        c
    }

    fn check_square_zero(&self) -> Result<()> {
        for k in 1..self.differentials.len() {
            let dd = self.differentials[k - 1]
                .matrix()
                .checked_mul(self.differentials[k].matrix())?;
            if !dd.is_zero() {
                return validation(format!(
                    "d_{} . d_{} is not zero",
                    self.lo + k as i64,
                    self.lo + k as i64 + 1
                ));
            }
        }
        Ok(())
    }

    pub fn zero(group: &GroupRef, field: PrimeField) -> Self {
        Self::from_parts(group, field, 0, Vec::new(), Vec::new())
    }

    /// A single permutation module in one degree.
    pub fn concentrated(x: GSetRef, degree: i64, field: PrimeField) -> Self {
        let group = x.group().clone();
        Self::from_parts(&group, field, degree, vec![x], Vec::new())
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Top degree; `lo - 1` for the empty complex.
    pub fn hi(&self) -> i64 {
        self.lo + self.terms.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[GSetRef] {
        &self.terms
    }

    pub fn term(&self, i: i64) -> Option<&GSetRef> {
        if i < self.lo {
            return None;
        }
        self.terms.get((i - self.lo) as usize)
    }

    pub fn differentials(&self) -> &[EquivariantMap] {
        &self.differentials
    }

    /// `d_i : C_i -> C_{i-1}`, if both terms exist.
    pub fn differential(&self, i: i64) -> Option<&EquivariantMap> {
        if i <= self.lo {
            return None;
        }
        self.differentials.get((i - self.lo - 1) as usize)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.size()).collect()
    }

    /// True when every term is the zero module.
    pub fn is_zero_object(&self) -> bool {
        self.terms.iter().all(|t| t.is_empty())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.terms
            .iter()
            .enumerate()
            .map(|(k, t)| {
                if (self.lo + k as i64).rem_euclid(2) == 0 {
                    t.size() as i64
                } else {
                    -(t.size() as i64)
                }
            })
            .sum()
    }

    pub fn formal_terms(&self) -> Vec<(i64, FormalGSet)> {
        self.terms
            .iter()
            .enumerate()
            .map(|(k, t)| (self.lo + k as i64, t.formal()))
            .collect()
    }

    pub fn homology(&self) -> HomologyReport {
        let ranks: Vec<usize> = self
            .differentials
            .iter()
            .map(|d| d.matrix().rank())
            .collect();
        let dims = (0..self.terms.len())
            .map(|k| {
                let out = if k > 0 { ranks[k - 1] } else { 0 };
                let inc = ranks.get(k).copied().unwrap_or(0);
                self.terms[k].size() - out - inc
            })
            .collect();
        HomologyReport { lo: self.lo, dims }
    }

    pub fn is_acyclic(&self) -> bool {
        self.homology().is_zero()
    }

    /// Applies `f` to every term and the matching matrix map to every differential.
    fn map_terms(
        &self,
        group: &GroupRef,
        mut on_term: impl FnMut(&GSetRef) -> Result<GSetRef>,
        mut on_matrix: impl FnMut(&Matrix) -> Matrix,
    ) -> Result<PermComplex> {
        let terms: Vec<GSetRef> = self.terms.iter().map(&mut on_term).collect::<Result<_>>()?;
        let diffs = self
            .differentials
            .iter()
            .enumerate()
            .map(|(k, d)| {
                EquivariantMap::from_parts(&terms[k + 1], &terms[k], on_matrix(d.matrix()))
            })
            .collect();
        Ok(PermComplex::from_parts(
            group, self.field, self.lo, terms, diffs,
        ))
    }

    pub fn shift(&self, k: i64) -> PermComplex {
        let mut c = self.clone();
        c.lo += k;
        c
    }
}

/// Degreewise Brauer quotient at the p-subgroup `weyl.subgroup()`; a complex
/// over `W_G(H)`.
pub fn apply_brauer(c: &PermComplex, weyl: &WeylGroup) -> Result<PermComplex> {
    check_p_subgroup(weyl.subgroup(), c.field)?;
    let fixed: Vec<_> = c.terms.iter().map(|t| fixed_points(t, weyl)).collect();
    let diffs = c
        .differentials
        .iter()
        .enumerate()
        .map(|(k, d)| brauer_between(d, &fixed[k + 1], &fixed[k]))
        .collect();
    let terms = fixed.into_iter().map(|f| f.gset).collect();
    Ok(PermComplex::from_parts(
        weyl.group(),
        c.field,
        c.lo,
        terms,
        diffs,
    ))
}

pub fn restrict_complex(c: &PermComplex, inc: &SubgroupInclusion) -> Result<PermComplex> {
    c.map_terms(
        inc.sub(),
        |t| Ok(Arc::new(gset::restrict(t, inc)?)),
        Matrix::clone,
    )
}

pub fn induce_complex(c: &PermComplex, inc: &SubgroupInclusion) -> Result<PermComplex> {
    let index = inc.parent().order() / inc.sub().order();
    let eye = Matrix::identity(c.field, index);
    c.map_terms(
        inc.parent(),
        |t| Ok(Arc::new(gset::induce(t, inc)?.gset)),
        |m| eye.kronecker(m),
    )
}

/// Conjugation by `g` of a complex over `H = inc.sub()`; the result lives
/// over `gHg^-1`, described by the returned inclusion.
pub fn conjugate_complex(
    c: &PermComplex,
    inc: &SubgroupInclusion,
    g: usize,
) -> Result<(SubgroupInclusion, PermComplex)> {
    let parent = inc.parent();
    let target = parent.conjugate_subgroup(inc.subgroup(), g);
    let cinc = SubgroupInclusion::new(parent, &target)?;
    let sub = cinc.sub().clone();
    let out = c.map_terms(
        &sub,
        |t| {
            let (_, x) = gset::conjugate(t, inc, g)?;
            Ok(Arc::new(rebase(&x, &sub)))
        },
        Matrix::clone,
    )?;
    Ok((cinc, out))
}

/// The same action table over an equal group object.
fn rebase(x: &GSet, group: &GroupRef) -> GSet {
    let action = (0..group.order())
        .flat_map(|g| (0..x.size()).map(move |pt| x.act(g, pt) as u32))
        .collect();
    GSet::from_trusted(group, x.size(), action)
}

/// Total complex of `C (x) D`, summands of degree `n` ordered by the degree
/// of the `C` factor, with sign `(-1)^i` on `d_D`.
pub fn tensor_complex(c: &PermComplex, d: &PermComplex) -> Result<PermComplex> {
    if !same_group(&c.group, &d.group) || c.field != d.field {
        return argument("tensor product of complexes over different groups or fields");
    }
    let field = c.field;
    if c.is_empty() || d.is_empty() {
        return Ok(PermComplex::zero(&c.group, field));
    }
    let lo = c.lo + d.lo;
    let hi = c.hi() + d.hi();
    // for each total degree: the (i, j) summands, their G-sets and offsets
    let mut summands: Vec<Vec<(i64, i64, usize)>> = Vec::new();
    let mut terms = Vec::new();
    for n in lo..=hi {
        let mut parts = Vec::new();
        let mut sets = Vec::new();
        let mut offset = 0;
        for i in c.lo..=c.hi() {
            let j = n - i;
            if j < d.lo || j > d.hi() {
                continue;
            }
            let x = gset::tensor(c.term(i).unwrap(), d.term(j).unwrap())?;
            parts.push((i, j, offset));
            offset += x.size();
            sets.push(x);
        }
        let refs: Vec<&GSet> = sets.iter().collect();
        terms.push(Arc::new(gset::disjoint_union(&c.group, &refs)?));
        summands.push(parts);
    }
    let mut diffs = Vec::new();
    for n in (lo + 1)..=hi {
        let src = &summands[(n - lo) as usize];
        let tgt = &summands[(n - 1 - lo) as usize];
        let tgt_offset: HashMap<(i64, i64), usize> =
            tgt.iter().map(|&(i, j, o)| ((i, j), o)).collect();
        let mut m = Matrix::zeros(
            field,
            terms[(n - 1 - lo) as usize].size(),
            terms[(n - lo) as usize].size(),
        );
        for &(i, j, so) in src {
            let (ci, dj) = (c.term(i).unwrap().size(), d.term(j).unwrap().size());
            if let (Some(dc), Some(&to)) = (c.differential(i), tgt_offset.get(&(i - 1, j))) {
                let block = dc.matrix().kronecker(&Matrix::identity(field, dj));
                paste(&mut m, &block, to, so);
            }
            if let (Some(dd), Some(&to)) = (d.differential(j), tgt_offset.get(&(i, j - 1))) {
                let mut block = Matrix::identity(field, ci).kronecker(dd.matrix());
                if i.rem_euclid(2) == 1 {
                    block = block.scale(-1);
                }
                paste(&mut m, &block, to, so);
            }
        }
        diffs.push(m);
    }
    let maps = diffs
        .into_iter()
        .enumerate()
        .map(|(k, m)| EquivariantMap::from_parts(&terms[k + 1], &terms[k], m))
        .collect();
    Ok(PermComplex::from_parts(&c.group, field, lo, terms, maps))
}

fn paste(dst: &mut Matrix, block: &Matrix, r0: usize, c0: usize) {
    for r in 0..block.rows() {
        for (k, &v) in block.row(r).iter().enumerate() {
            if v != 0 {
                dst.set(r0 + r, c0 + k, v);
            }
        }
    }
}

pub fn direct_sum(c: &PermComplex, d: &PermComplex) -> Result<PermComplex> {
    if !same_group(&c.group, &d.group) || c.field != d.field {
        return argument("direct sum of complexes over different groups or fields");
    }
    if c.is_empty() {
        return Ok(d.clone());
    }
    if d.is_empty() {
        return Ok(c.clone());
    }
    let field = c.field;
    let lo = c.lo.min(d.lo);
    let hi = c.hi().max(d.hi());
    let empty = Arc::new(GSet::empty(&c.group));
    let pick = |x: &PermComplex, i: i64| x.term(i).cloned().unwrap_or_else(|| empty.clone());
    let terms: Vec<GSetRef> = (lo..=hi)
        .map(|i| {
            Ok(Arc::new(gset::disjoint_union(
                &c.group,
                &[&pick(c, i), &pick(d, i)],
            )?))
        })
        .collect::<Result<_>>()?;
    let block = |x: &PermComplex, i: i64| match x.differential(i) {
        Some(m) => m.matrix().clone(),
        None => Matrix::zeros(field, pick(x, i - 1).size(), pick(x, i).size()),
    };
    let maps = ((lo + 1)..=hi)
        .map(|i| {
            let m = Matrix::block_diagonal(field, &[&block(c, i), &block(d, i)]);
            let k = (i - lo) as usize;
            EquivariantMap::from_parts(&terms[k], &terms[k - 1], m)
        })
        .collect();
    Ok(PermComplex::from_parts(&c.group, field, lo, terms, maps))
}

/// The Koszul object at `p = 2`: degree `i` is `k` on the `i`-element subsets
/// of `G` (left translation), with the subset boundary as differential.
/// Lives in degrees `0..=|G|` and is acyclic.
pub fn koszul_object(group: &GroupRef, field: PrimeField) -> Result<PermComplex> {
    if field.p() != 2 {
        return Err(Error::Unsupported(
            "the Koszul object is only implemented at p = 2".into(),
        ));
    }
    let n = group.order();
    if n > KOSZUL_ORDER_LIMIT {
        return Err(Error::Resource(format!(
            "Koszul object limited to |G| <= {KOSZUL_ORDER_LIMIT}"
        )));
    }
    // subsets of each size as bitmasks, in increasing numeric order
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for mask in 0u32..(1u32 << n) {
        by_size[mask.count_ones() as usize].push(mask);
    }
    let index: Vec<HashMap<u32, usize>> = by_size
        .iter()
        .map(|v| v.iter().enumerate().map(|(i, &m)| (m, i)).collect())
        .collect();
    let translate = |g: usize, mask: u32| -> u32 {
        (0..n)
            .filter(|&s| mask & (1 << s) != 0)
            .fold(0, |acc, s| acc | (1 << group.mul(g, s)))
    };
    let terms: Vec<GSetRef> = by_size
        .iter()
        .enumerate()
        .map(|(i, subsets)| {
            let (index, translate) = (&index, &translate);
            let action = group
                .elements()
                .flat_map(|g| {
                    subsets
                        .iter()
                        .map(move |&m| index[i][&translate(g, m)] as u32)
                })
                .collect();
            Arc::new(GSet::from_trusted(group, subsets.len(), action))
        })
        .collect();
    let diffs = (1..=n)
        .map(|i| {
            let mut m = Matrix::zeros(field, by_size[i - 1].len(), by_size[i].len());
            for (col, &mask) in by_size[i].iter().enumerate() {
                for s in (0..n).filter(|&s| mask & (1 << s) != 0) {
                    m.set(index[i - 1][&(mask & !(1 << s))], col, 1);
                }
            }
            EquivariantMap::from_parts(&terms[i], &terms[i - 1], m)
        })
        .collect();
    Ok(PermComplex::from_parts(group, field, 0, terms, diffs))
}

/// `0 -> k -> kC_p -> kC_p -> k -> 0` in degrees `3..0` over the cyclic group
/// of order `p`: norm, `1 - g`, augmentation.
pub fn cyclic_acyclic_complex(p: u32) -> Result<PermComplex> {
    let field = PrimeField::new(p)?;
    let n = p as usize;
    let group: GroupRef = Arc::new(FiniteGroup::cyclic(n).with_name(format!("C{p}")));
    let pt = Arc::new(GSet::point(&group));
    let reg = Arc::new(GSet::regular(&group));
    let aug = Matrix::from_fn(field, 1, n, |_, _| 1);
    let g = 1;
    let one_minus_g = Matrix::from_fn(field, n, n, |r, c| {
        let mut v = 0;
        if r == c {
            v += 1;
        }
        if r == reg.act(g, c) {
            v -= 1;
        }
        v
    });
    let norm = Matrix::from_fn(field, n, 1, |_, _| 1);
    PermComplex::new(
        &group,
        field,
        0,
        vec![pt.clone(), reg.clone(), reg, pt],
        vec![aug, one_minus_g, norm],
    )
}

/// `kG` in degree 0.
pub fn free_complex(group: &GroupRef, field: PrimeField) -> PermComplex {
    PermComplex::concentrated(Arc::new(GSet::regular(group)), 0, field)
}
