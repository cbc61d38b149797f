//! Projectivity, perfection and eq-perfection tests.
//!
//! Perfection of a bounded complex over `kG` is decided through a single
//! module: the complex is reduced from the bottom, each step covering the
//! cokernel of the lowest differential by a free module and replacing the
//! next term by a kernel. Every step changes the complex by a perfect
//! complex, so the final module (in the top degree) is projective exactly
//! when the complex is perfect. Since `kG` is self-injective, finite
//! projective dimension forces projectivity, and projectivity is detected
//! on a Sylow p-subgroup `P`, where a module `M` is free iff
//! `rank(N_P on M) * |P| = dim M` for the norm element `N_P`.

use serde::{Deserialize, Serialize};

use crate::complexes::{apply_brauer, restrict_complex, PermComplex};
use crate::error::{argument, validation, Result};
use crate::group::{same_group, GroupRef, Subgroup, SubgroupInclusion};
use crate::gset::GSet;
use crate::linalg::{Kernel, Matrix, PrimeField};

/// A finite-dimensional `F_p[G]`-module, with the matrix of every element.
#[derive(Debug, Clone, PartialEq)]
pub struct GModule {
    group: GroupRef,
    field: PrimeField,
    dim: usize,
    elements: Vec<Matrix>,
}

impl GModule {
    /// Builds the module from matrices for `group.generators()`, extends to
    /// all elements along words, and checks every relation `M(s) M(x) = M(sx)`.
    pub fn new(group: &GroupRef, field: PrimeField, generators: Vec<Matrix>) -> Result<Self> {
        let gens = group.generators();
        if generators.len() != gens.len() {
            return argument(format!(
                "expected {} generator matrices, got {}",
                gens.len(),
                generators.len()
            ));
        }
        let dim = match generators.first() {
            Some(m) => m.rows(),
            None => 0,
        };
        if generators
            .iter()
            .any(|m| m.rows() != dim || m.cols() != dim || m.field() != field)
        {
            return argument("generator matrices must be square of one size over one field");
        }
        let n = group.order();
        let mut elements: Vec<Option<Matrix>> = vec![None; n];
        elements[0] = Some(Matrix::identity(field, dim));
        let mut queue = vec![0usize];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for (k, &s) in gens.iter().enumerate() {
                let y = group.mul(s, x);
                let prod = generators[k].checked_mul(elements[x].as_ref().expect("visited"))?;
                match &elements[y] {
                    None => {
                        elements[y] = Some(prod);
                        queue.push(y);
                    }
                    Some(m) if *m != prod => {
                        return validation("generator matrices do not satisfy the group relations");
                    }
                    Some(_) => {}
                }
            }
            i += 1;
        }
        let elements = elements
            .into_iter()
            .map(|m| m.expect("generators generate"))
            .collect();
        Ok(GModule {
            group: group.clone(),
            field,
            dim,
            elements,
        })
    }

    pub(crate) fn from_elements(
        group: &GroupRef,
        field: PrimeField,
        dim: usize,
        elements: Vec<Matrix>,
    ) -> Self {
        debug_assert_eq!(elements.len(), group.order());
        GModule {
            group: group.clone(),
            field,
            dim,
            elements,
        }
    }

    pub fn permutation(x: &GSet, field: PrimeField) -> Self {
        let elements = x
            .group()
            .elements()
            .map(|g| x.permutation_matrix(field, g))
            .collect();
        Self::from_elements(x.group(), field, x.size(), elements)
    }

    pub fn regular(group: &GroupRef, field: PrimeField) -> Self {
        Self::permutation(&GSet::regular(group), field)
    }

    pub fn trivial(group: &GroupRef, field: PrimeField) -> Self {
        Self::permutation(&GSet::point(group), field)
    }

    pub fn zero(group: &GroupRef, field: PrimeField) -> Self {
        let elements = vec![Matrix::zeros(field, 0, 0); group.order()];
        Self::from_elements(group, field, 0, elements)
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, g: usize) -> &Matrix {
        &self.elements[g]
    }

    pub fn restrict(&self, inc: &SubgroupInclusion) -> Result<GModule> {
        if !same_group(&self.group, inc.parent()) {
            return argument("restriction along an inclusion into a different group");
        }
        let elements = inc
            .embedding()
            .iter()
            .map(|&g| self.elements[g].clone())
            .collect();
        Ok(Self::from_elements(
            inc.sub(),
            self.field,
            self.dim,
            elements,
        ))
    }

    pub fn direct_sum(&self, other: &GModule) -> Result<GModule> {
        if !same_group(&self.group, &other.group) || self.field != other.field {
            return argument("direct sum of modules over different groups or fields");
        }
        let elements = self
            .elements
            .iter()
            .zip(&other.elements)
            .map(|(a, b)| Matrix::block_diagonal(self.field, &[a, b]))
            .collect();
        Ok(Self::from_elements(
            &self.group,
            self.field,
            self.dim + other.dim,
            elements,
        ))
    }

    /// Base change by an invertible matrix `t`: the new action is `t A t^-1`.
    pub fn conjugate_basis(&self, t: &Matrix) -> Result<GModule> {
        let ti = t
            .inverse()
            .ok_or_else(|| crate::Error::Argument("basis change is not invertible".into()))?;
        let elements = self
            .elements
            .iter()
            .map(|a| t.checked_mul(a)?.checked_mul(&ti))
            .collect::<Result<_>>()?;
        Ok(Self::from_elements(
            &self.group,
            self.field,
            self.dim,
            elements,
        ))
    }

    /// `f : self -> other` commutes with the action.
    pub fn is_homomorphism_to(&self, other: &GModule, f: &Matrix) -> bool {
        f.rows() == other.dim
            && f.cols() == self.dim
            && self.group.generators().iter().all(|&g| {
                other.elements[g].checked_mul(f).ok() == f.checked_mul(&self.elements[g]).ok()
            })
    }

    /// The submodule spanned by the columns of a reduced kernel basis; a
    /// vector's coordinates are its entries in the free rows.
    pub fn kernel_submodule(&self, kernel: &Kernel) -> Result<GModule> {
        let k = kernel.basis.cols();
        let elements = self
            .elements
            .iter()
            .map(|a| {
                Ok(a.checked_mul(&kernel.basis)?
                    .select_rows(&kernel.free_columns))
            })
            .collect::<Result<_>>()?;
        Ok(Self::from_elements(&self.group, self.field, k, elements))
    }

    /// Kernel of a homomorphism `f : self -> target`.
    pub fn kernel_of(&self, f: &Matrix) -> Result<GModule> {
        if f.cols() != self.dim {
            return argument("map does not start at this module");
        }
        self.kernel_submodule(&f.kernel())
    }

    /// The submodule spanned by the columns of `span` (must be G-stable).
    pub fn span_submodule(&self, span: &Matrix) -> Result<GModule> {
        let cols = span.independent_columns();
        let basis = span.select_columns(&cols);
        let elements = self
            .elements
            .iter()
            .map(|a| {
                let image = a.checked_mul(&basis)?;
                basis
                    .solve(&image)?
                    .ok_or_else(|| crate::Error::Argument("span is not a submodule".into()))
            })
            .collect::<Result<_>>()?;
        Ok(Self::from_elements(
            &self.group,
            self.field,
            cols.len(),
            elements,
        ))
    }

    /// Sum of all element matrices.
    pub fn norm(&self) -> Matrix {
        let mut acc = Matrix::zeros(self.field, self.dim, self.dim);
        for a in &self.elements {
            acc = acc.checked_add(a).expect("same shape");
        }
        acc
    }
}

/// A bounded complex of modules, `d_i : C_i -> C_{i-1}`.
#[derive(Debug, Clone)]
pub struct GComplex {
    group: GroupRef,
    field: PrimeField,
    lo: i64,
    modules: Vec<GModule>,
    differentials: Vec<Matrix>,
}

impl GComplex {
    pub fn new(lo: i64, modules: Vec<GModule>, differentials: Vec<Matrix>) -> Result<Self> {
        let Some(first) = modules.first() else {
            return argument("a module complex needs at least one term");
        };
        let (group, field) = (first.group.clone(), first.field);
        if modules
            .iter()
            .any(|m| !same_group(&m.group, &group) || m.field != field)
        {
            return argument("complex terms over different groups or fields");
        }
        if differentials.len() + 1 != modules.len() {
            return argument("wrong number of differentials");
        }
        for (k, d) in differentials.iter().enumerate() {
            if !modules[k + 1].is_homomorphism_to(&modules[k], d) {
                return validation(format!(
                    "d_{} is not a module homomorphism",
                    lo + k as i64 + 1
                ));
            }
            if k > 0 && !differentials[k - 1].checked_mul(d)?.is_zero() {
                return validation(format!(
                    "d_{} . d_{} is not zero",
                    lo + k as i64,
                    lo + k as i64 + 1
                ));
            }
        }
        Ok(GComplex {
            group,
            field,
            lo,
            modules,
            differentials,
        })
    }

    pub fn single(module: GModule, degree: i64) -> Self {
        GComplex {
            group: module.group.clone(),
            field: module.field,
            lo: degree,
            modules: vec![module],
            differentials: Vec::new(),
        }
    }

    pub fn from_perm(c: &PermComplex) -> Self {
        let modules = c
            .terms()
            .iter()
            .map(|t| GModule::permutation(t, c.field()))
            .collect();
        let differentials = c
            .differentials()
            .iter()
            .map(|d| d.matrix().clone())
            .collect();
        GComplex {
            group: c.group().clone(),
            field: c.field(),
            lo: c.lo(),
            modules,
            differentials,
        }
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.modules.len() as i64 - 1
    }

    pub fn modules(&self) -> &[GModule] {
        &self.modules
    }

    pub fn differentials(&self) -> &[Matrix] {
        &self.differentials
    }

    pub fn is_acyclic(&self) -> bool {
        let ranks: Vec<usize> = self.differentials.iter().map(Matrix::rank).collect();
        (0..self.modules.len()).all(|k| {
            let out = if k > 0 { ranks[k - 1] } else { 0 };
            let inc = ranks.get(k).copied().unwrap_or(0);
            self.modules[k].dim == out + inc
        })
    }

    pub fn restrict(&self, inc: &SubgroupInclusion) -> Result<GComplex> {
        let modules = self
            .modules
            .iter()
            .map(|m| m.restrict(inc))
            .collect::<Result<_>>()?;
        Ok(GComplex {
            group: inc.sub().clone(),
            field: self.field,
            lo: self.lo,
            modules,
            differentials: self.differentials.clone(),
        })
    }
}

/// Higman's criterion: `M` is projective iff `sum_g g phi g^-1 = id` has a
/// solution `phi`, solved as a linear system in the `dim^2` entries of `phi`.
pub fn higman_projective(m: &GModule) -> bool {
    let d = m.dim;
    if d == 0 {
        return true;
    }
    let f = m.field;
    let g = &m.group;
    // row-major vec(A X B) = (A kron B^T) vec(X)
    let mut system = Matrix::zeros(f, d * d, d * d);
    for x in g.elements() {
        let a = &m.elements[x];
        let b = &m.elements[g.inv(x)];
        for i in 0..d {
            for k in 0..d {
                let aik = a.get(i, k);
                if aik == 0 {
                    continue;
                }
                for j in 0..d {
                    for l in 0..d {
                        let blj = b.get(l, j);
                        if blj == 0 {
                            continue;
                        }
                        let (r, c) = (i * d + j, k * d + l);
                        system.set(r, c, f.add(system.get(r, c), f.mul(aik, blj)));
                    }
                }
            }
        }
    }
    let rhs = Matrix::from_fn(f, d * d, 1, |r, _| if r / d == r % d { 1 } else { 0 });
    matches!(system.solve(&rhs), Ok(Some(_)))
}

/// `F = (kG)^{dim M} -> M`, the copy `c` sending `g` to `g e_c`.
#[derive(Debug, Clone)]
pub struct FreeCover {
    pub free: GModule,
    pub map: Matrix,
    pub kernel: GModule,
}

pub fn free_cover(m: &GModule) -> Result<FreeCover> {
    let generators: Vec<usize> = (0..m.dim).collect();
    let (free, map) = free_module_on(m, &generators);
    let kernel = free.kernel_of(&map)?;
    Ok(FreeCover { free, map, kernel })
}

/// The free module on the given basis vectors of `m` and its map to `m`.
fn free_module_on(m: &GModule, generators: &[usize]) -> (GModule, Matrix) {
    let g = &m.group;
    let n = g.order();
    let rank = generators.len();
    let mut map = Matrix::zeros(m.field, m.dim, rank * n);
    for (c, &e) in generators.iter().enumerate() {
        for x in 0..n {
            for r in 0..m.dim {
                map.set(r, c * n + x, m.elements[x].get(r, e));
            }
        }
    }
    let regular = GSet::regular(g);
    let elements = g
        .elements()
        .map(|x| Matrix::identity(m.field, rank).kronecker(&regular.permutation_matrix(m.field, x)))
        .collect();
    (GModule::from_elements(g, m.field, rank * n, elements), map)
}

/// Incremental row-echelon basis used to grow spans vector by vector.
struct Echelon {
    field: PrimeField,
    rows: Vec<(usize, Vec<u8>)>,
}

impl Echelon {
    fn new(field: PrimeField) -> Self {
        Echelon {
            field,
            rows: Vec::new(),
        }
    }

    fn reduce(&self, v: &mut [u8]) {
        let f = self.field;
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c != 0 {
                for (a, &b) in v.iter_mut().zip(row) {
                    *a = f.sub(*a, f.mul(c, b));
                }
            }
        }
    }

    fn contains(&self, v: &[u8]) -> bool {
        let mut v = v.to_vec();
        self.reduce(&mut v);
        v.iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns whether it was new.
    fn insert(&mut self, mut v: Vec<u8>) -> bool {
        let f = self.field;
        self.reduce(&mut v);
        let Some(pivot) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[pivot]);
        v.iter_mut().for_each(|a| *a = f.mul(*a, inv));
        self.rows.push((pivot, v));
        true
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// Reduces `C` from the bottom to one module `Z` in the top degree with
/// `C ~ Z[hi]` modulo perfect complexes. The zero module stands for a
/// perfect complex.
pub fn resolve_and_syzygy(c: &GComplex) -> Result<GModule> {
    let field = c.field;
    let group = c.group.clone();
    let mut bottom = c.modules[0].clone();
    // map from the next term into `bottom`
    let mut incoming: Option<Matrix> = c.differentials.first().cloned();
    for k in 1..c.modules.len() {
        let next = &c.modules[k];
        let d = incoming.take().expect("one differential per step");
        // greedy generators of bottom modulo the image of d
        let mut span = Echelon::new(field);
        for col in 0..d.cols() {
            span.insert(d.column(col));
        }
        let mut gens = Vec::new();
        for e in 0..bottom.dim {
            if span.dim() == bottom.dim {
                break;
            }
            let mut unit = vec![0u8; bottom.dim];
            unit[e] = 1;
            if span.contains(&unit) {
                continue;
            }
            gens.push(e);
            for x in group.elements() {
                span.insert(bottom.elements[x].column(e));
            }
        }
        let (free, pi) = free_module_on(&bottom, &gens);
        let combined = Matrix::hstack(field, bottom.dim, &[&d, &pi]);
        let kernel = combined.kernel();
        let sum = next.direct_sum(&free)?;
        let new_bottom = sum.kernel_submodule(&kernel)?;
        incoming = c.differentials.get(k).map(|up| {
            // coordinates of d_{k+1} columns inside the kernel: free rows of [up; 0]
            Matrix::from_fn(field, kernel.free_columns.len(), up.cols(), |r, col| {
                let row = kernel.free_columns[r];
                if row < next.dim {
                    up.get(row, col) as i64
                } else {
                    0
                }
            })
        });
        bottom = new_bottom;
    }
    Ok(bottom)
}

/// Projectivity through a Sylow p-subgroup and the norm-rank criterion.
pub fn is_projective(m: &GModule) -> Result<bool> {
    let p = m.field.p() as usize;
    let g = &m.group;
    let sylow = g.sylow_subgroup(p)?;
    if sylow.order() == 1 || m.dim == 0 {
        return Ok(true);
    }
    let inc = SubgroupInclusion::new(g, &sylow)?;
    let r = m.restrict(&inc)?;
    Ok(is_free_over_p_group(&r))
}

/// For a module over a p-group: the rank of the norm counts free summands.
fn is_free_over_p_group(m: &GModule) -> bool {
    if !m.dim.is_multiple_of(m.group.order()) {
        return false;
    }
    m.norm().rank() * m.group.order() == m.dim
}

pub fn is_perfect(c: &GComplex) -> Result<bool> {
    if c.is_acyclic() {
        return Ok(true);
    }
    let p = c.field.p() as usize;
    let sylow = c.group.sylow_subgroup(p)?;
    if sylow.order() == 1 {
        return Ok(true);
    }
    let inc = SubgroupInclusion::new(&c.group, &sylow)?;
    let restricted = c.restrict(&inc)?;
    let z = resolve_and_syzygy(&restricted)?;
    Ok(is_free_over_p_group(&z))
}

/// Perfection of a permutation complex over its own group, restricting the
/// G-sets to a Sylow subgroup before building matrices.
pub fn is_perfect_perm(c: &PermComplex) -> Result<bool> {
    if c.is_empty() || c.is_acyclic() {
        return Ok(true);
    }
    let p = c.field().p() as usize;
    let g = c.group();
    let sylow = g.sylow_subgroup(p)?;
    if sylow.order() == 1 {
        return Ok(true);
    }
    let inc = SubgroupInclusion::new(g, &sylow)?;
    let restricted = GComplex::from_perm(&restrict_complex(c, &inc)?);
    let z = resolve_and_syzygy(&restricted)?;
    Ok(is_free_over_p_group(&z))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SupportKind {
    /// `Psi^H(C)` is acyclic.
    Absent,
    /// Perfect over `W_G(H)` but not acyclic.
    ClosedOnly,
    /// Not perfect over `W_G(H)`.
    Open,
}

impl std::fmt::Display for SupportKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SupportKind::Absent => "absent",
            SupportKind::ClosedOnly => "closed_only",
            SupportKind::Open => "open",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportEntry {
    pub representative: Subgroup,
    pub class_size: usize,
    pub kind: SupportKind,
}

/// One entry per conjugacy class of p-subgroups, in the order of
/// `conjugacy_classes_of_p_subgroups`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportProfile {
    pub prime: u32,
    pub entries: Vec<SupportEntry>,
}

impl SupportProfile {
    pub fn is_eq_perf(&self) -> bool {
        self.entries.iter().all(|e| e.kind != SupportKind::Open)
    }

    /// The entry of the trivial subgroup: perfection over `kG` itself.
    pub fn trivial_entry(&self) -> SupportKind {
        self.entries
            .iter()
            .find(|e| e.representative.is_trivial())
            .map(|e| e.kind)
            .expect("trivial class is present")
    }

    pub fn is_perfect(&self) -> bool {
        self.trivial_entry() != SupportKind::Open
    }

    pub fn kind_of(&self, h: &Subgroup) -> Option<SupportKind> {
        self.entries
            .iter()
            .find(|e| &e.representative == h)
            .map(|e| e.kind)
    }
}

/// Classifies `Psi^H(C)` over `W_G(H)` for one p-subgroup `H`.
pub fn classify_at(c: &PermComplex, h: &Subgroup) -> Result<SupportKind> {
    let weyl = c.group().weyl_group(h);
    let b = apply_brauer(c, &weyl)?;
    if b.is_acyclic() {
        return Ok(SupportKind::Absent);
    }
    Ok(if is_perfect_perm(&b)? {
        SupportKind::ClosedOnly
    } else {
        SupportKind::Open
    })
}

pub fn support_profile(c: &PermComplex) -> Result<SupportProfile> {
    let p = c.field().p();
    let classes = c.group().conjugacy_classes_of_p_subgroups(p as usize)?;
    let entries = classes
        .iter()
        .map(|cls| {
            Ok(SupportEntry {
                representative: cls.representative().clone(),
                class_size: cls.len(),
                kind: classify_at(c, cls.representative())?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(SupportProfile { prime: p, entries })
}

pub fn is_eq_perf(c: &PermComplex) -> Result<bool> {
    Ok(support_profile(c)?.is_eq_perf())
}

/// Jordan block sizes of a unipotent matrix, largest first.
pub fn jordan_block_sizes(a: &Matrix) -> Vec<usize> {
    let d = a.rows();
    let nil = a
        .checked_sub(&Matrix::identity(a.field(), d))
        .expect("square");
    let mut ranks = vec![d];
    let mut power = Matrix::identity(a.field(), d);
    while *ranks.last().unwrap() > 0 {
        power = power.checked_mul(&nil).expect("square");
        let r = power.rank();
        if r == *ranks.last().unwrap() {
            break;
        }
        ranks.push(r);
    }
    // blocks of size >= k: ranks[k-1] - ranks[k]
    let mut sizes = Vec::new();
    for k in (1..ranks.len()).rev() {
        let at_least = ranks[k - 1] - ranks[k];
        let larger = if k + 1 < ranks.len() {
            ranks[k] - ranks[k + 1]
        } else {
            0
        };
        sizes.extend(std::iter::repeat_n(k, at_least - larger));
    }
    sizes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{cyclic_acyclic_complex, free_complex, koszul_object};
    use crate::group::catalog;

    fn fp(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn higman_examples() {
        let c3 = catalog("C3").unwrap();
        assert!(higman_projective(&GModule::regular(&c3, fp(3))));
        assert!(!higman_projective(&GModule::trivial(&c3, fp(3))));
        // Maschke
        assert!(higman_projective(&GModule::trivial(&c3, fp(2))));
        let s3 = catalog("S3").unwrap();
        assert!(!higman_projective(&GModule::trivial(&s3, fp(3))));
        assert!(higman_projective(&GModule::trivial(&s3, fp(5))));
    }

    #[test]
    fn free_cover_examples() {
        let c2 = catalog("C2").unwrap();
        let k = GModule::trivial(&c2, fp(2));
        let cover = free_cover(&k).unwrap();
        assert_eq!(cover.kernel.dim(), 1);
        assert_eq!(cover.kernel.action(1), &Matrix::identity(fp(2), 1));
        let reg = GModule::regular(&c2, fp(2));
        let cover = free_cover(&reg).unwrap();
        assert_eq!(cover.kernel.dim(), 2 * 2 - 2);
        let zero = GModule::zero(&c2, fp(2));
        assert_eq!(free_cover(&zero).unwrap().free.dim(), 0);
    }

    #[test]
    fn generator_matrices_must_satisfy_relations() {
        let c2 = catalog("C2").unwrap();
        let m = Matrix::from_rows(fp(3), &[vec![1, 1], vec![0, 1]]).unwrap();
        assert!(GModule::new(&c2, fp(3), vec![m]).is_err());
        let swap = Matrix::from_rows(fp(3), &[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(GModule::new(&c2, fp(3), vec![swap]).is_ok());
    }

    #[test]
    fn perfect_single_modules() {
        let c3 = catalog("C3").unwrap();
        let reg = GComplex::single(GModule::regular(&c3, fp(3)), 0);
        assert!(is_perfect(&reg).unwrap());
        assert!(projective_syzygy(&reg));
        let triv = GComplex::single(GModule::trivial(&c3, fp(3)), 0);
        assert!(!is_perfect(&triv).unwrap());
    }

    fn projective_syzygy(c: &GComplex) -> bool {
        higman_projective(&resolve_and_syzygy(c).unwrap())
    }

    #[test]
    fn cyclic_example_profile() {
        for p in [2, 3, 5] {
            let c = cyclic_acyclic_complex(p).unwrap();
            assert!(is_perfect(&GComplex::from_perm(&c)).unwrap());
            let prof = support_profile(&c).unwrap();
            assert_eq!(prof.entries.len(), 2);
            assert_eq!(prof.entries[0].kind, SupportKind::Absent);
            assert_eq!(prof.entries[1].kind, SupportKind::ClosedOnly);
            assert!(prof.is_eq_perf());
        }
    }

    #[test]
    fn free_module_profile() {
        let q8 = catalog("Q8").unwrap();
        let prof = support_profile(&free_complex(&q8, fp(2))).unwrap();
        for e in &prof.entries {
            let expected = if e.representative.is_trivial() {
                SupportKind::ClosedOnly
            } else {
                SupportKind::Absent
            };
            assert_eq!(e.kind, expected);
        }
    }

    #[test]
    fn koszul_v4_is_perfect_not_eq_perf() {
        let v4 = catalog("V4").unwrap();
        let k = koszul_object(&v4, fp(2)).unwrap();
        let prof = support_profile(&k).unwrap();
        assert_eq!(prof.trivial_entry(), SupportKind::Absent);
        assert!(prof.is_perfect());
        assert!(!prof.is_eq_perf());
        assert!(prof
            .entries
            .iter()
            .any(|e| e.representative.order() == 2 && e.kind == SupportKind::Open));
    }

    #[test]
    fn jordan_blocks() {
        let c3 = catalog("C3").unwrap();
        let reg = GModule::regular(&c3, fp(3));
        assert_eq!(jordan_block_sizes(reg.action(1)), vec![3]);
        let triv = GModule::trivial(&c3, fp(3));
        assert_eq!(jordan_block_sizes(triv.action(1)), vec![1]);
        let sum = reg.direct_sum(&triv).unwrap();
        assert_eq!(jordan_block_sizes(sum.action(1)), vec![3, 1]);
    }
}
