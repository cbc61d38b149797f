//! Finite G-sets, permutation modules `k(X)` and equivariant maps between them.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{argument, validation, Result};
use crate::group::{
    is_power_of, same_group, FiniteGroup, GroupRef, Subgroup, SubgroupInclusion, WeylGroup,
};
use crate::linalg::{Matrix, PrimeField};

pub type GSetRef = Arc<GSet>;

/// Above this many (element, nonzero entry) checks, equivariance is verified
/// on generators only, which already implies it for every element.
const EXHAUSTIVE_EQUIVARIANCE_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub representative: usize,
    pub stabilizer: Subgroup,
    pub points: Vec<usize>,
}

/// A finite left G-set on points `0..size`.
#[derive(Clone)]
pub struct GSet {
    group: GroupRef,
    size: usize,
    action: Vec<u32>,
    orbits: Vec<Orbit>,
    orbit_of: Vec<usize>,
}

impl std::fmt::Debug for GSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GSet")
            .field("group_order", &self.group.order())
            .field("size", &self.size)
            .field("orbits", &self.orbits.len())
            .finish()
    }
}

impl PartialEq for GSet {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
            && self.action == other.action
            && same_group(&self.group, &other.group)
    }
}

impl GSet {
    /// `action[g * size + x]` is `g . x`. Checks the identity law and
    /// compatibility with every generator, which together give a group action.
    pub fn new(group: &GroupRef, size: usize, action: Vec<usize>) -> Result<Self> {
        let n = group.order();
        if action.len() != n * size {
            return validation(format!(
                "action table has {} entries, expected {}",
                action.len(),
                n * size
            ));
        }
        if action.iter().any(|&v| v >= size) {
            return validation("action table entry out of range");
        }
        for (x, &y) in action[..size].iter().enumerate() {
            if y != x {
                return validation(format!("identity moves point {x}"));
            }
        }
        for &s in group.generators() {
            for g in 0..n {
                let sg = group.mul(s, g);
                for x in 0..size {
                    if action[sg * size + x] != action[s * size + action[g * size + x]] {
                        return validation(format!(
                            "action is not compatible with multiplication at point {x}"
                        ));
                    }
                }
            }
        }
        Ok(Self::from_trusted(
            group,
            size,
            action.into_iter().map(|v| v as u32).collect(),
        ))
    }

    pub fn from_fn(
        group: &GroupRef,
        size: usize,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = group.order();
        let mut action = Vec::with_capacity(n * size);
        for g in 0..n {
            for x in 0..size {
                action.push(f(g, x));
            }
        }
        Self::new(group, size, action)
    }

    pub(crate) fn from_trusted(group: &GroupRef, size: usize, action: Vec<u32>) -> Self {
        let n = group.order();
        let mut orbit_of = vec![usize::MAX; size];
        let mut orbits = Vec::new();
        for x in 0..size {
            if orbit_of[x] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut points = Vec::new();
            let mut stab = Vec::new();
            for g in 0..n {
                let y = action[g * size + x] as usize;
                if y == x {
                    stab.push(g);
                }
                if orbit_of[y] == usize::MAX {
                    orbit_of[y] = id;
                    points.push(y);
                }
            }
            points.sort_unstable();
            orbits.push(Orbit {
                representative: x,
                stabilizer: Subgroup::from_sorted(n, stab),
                points,
            });
        }
        GSet {
            group: group.clone(),
            size,
            action,
            orbits,
            orbit_of,
        }
    }

    /// The one-point G-set (trivial module `k`).
    pub fn point(group: &GroupRef) -> Self {
        Self::from_trusted(group, 1, vec![0; group.order()])
    }

    pub fn empty(group: &GroupRef) -> Self {
        Self::from_trusted(group, 0, Vec::new())
    }

    pub fn regular(group: &GroupRef) -> Self {
        coset_gset(group, &group.trivial_subgroup())
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[g * self.size + x] as usize
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn orbit_of(&self, x: usize) -> usize {
        self.orbit_of[x]
    }

    pub fn stabilizer(&self, x: usize) -> Subgroup {
        let els = self
            .group
            .elements()
            .filter(|&g| self.act(g, x) == x)
            .collect();
        Subgroup::from_sorted(self.group.order(), els)
    }

    pub fn is_fixed(&self, x: usize, h: &Subgroup) -> bool {
        h.elements().iter().all(|&g| self.act(g, x) == x)
    }

    /// `X^H` in increasing point order.
    pub fn fixed(&self, h: &Subgroup) -> Vec<usize> {
        (0..self.size).filter(|&x| self.is_fixed(x, h)).collect()
    }

    /// Matrix of `g` on `k(X)`: column `x` is the basis vector `g . x`.
    pub fn permutation_matrix(&self, field: PrimeField, g: usize) -> Matrix {
        let mut m = Matrix::zeros(field, self.size, self.size);
        for x in 0..self.size {
            m.set(self.act(g, x), x, 1);
        }
        m
    }

    /// Orbit multiset by conjugacy class of stabilizers.
    pub fn formal(&self) -> FormalGSet {
        let mut counts: BTreeMap<Subgroup, usize> = BTreeMap::new();
        for o in &self.orbits {
            *counts
                .entry(self.group.class_representative(&o.stabilizer))
                .or_default() += 1;
        }
        FormalGSet {
            orbits: counts.into_iter().collect(),
        }
    }
}

/// A disjoint union of orbits `G/H`, one entry per conjugacy class of `H`
/// (keyed by class representative) with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalGSet {
    pub orbits: Vec<(Subgroup, usize)>,
}

impl FormalGSet {
    pub fn size(&self, group: &FiniteGroup) -> usize {
        self.orbits
            .iter()
            .map(|(h, m)| m * (group.order() / h.order()))
            .sum()
    }

    pub fn realize(&self, group: &GroupRef) -> GSet {
        let parts: Vec<GSet> = self
            .orbits
            .iter()
            .flat_map(|(h, m)| std::iter::repeat_n(h, *m))
            .map(|h| coset_gset(group, h))
            .collect();
        disjoint_union(group, &parts.iter().collect::<Vec<_>>()).expect("same group")
    }
}

/// Left cosets `gH` in the order of their minimal elements, together with
/// the coset index of every element.
pub fn left_cosets(group: &FiniteGroup, h: &Subgroup) -> (Vec<usize>, Vec<usize>) {
    let n = group.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for g in 0..n {
        if coset_of[g] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(g);
        for &x in h.elements() {
            coset_of[group.mul(g, x)] = c;
        }
    }
    (reps, coset_of)
}

/// `G/H` with left multiplication; points are cosets sorted by minimal element.
pub fn coset_gset(group: &GroupRef, h: &Subgroup) -> GSet {
    let (reps, coset_of) = left_cosets(group, h);
    let m = reps.len();
    let mut action = Vec::with_capacity(group.order() * m);
    for g in group.elements() {
        for &r in &reps {
            action.push(coset_of[group.mul(g, r)] as u32);
        }
    }
    GSet::from_trusted(group, m, action)
}

/// Points of the first set come first, then the second, and so on.
pub fn disjoint_union(group: &GroupRef, parts: &[&GSet]) -> Result<GSet> {
    if parts.iter().any(|x| !same_group(x.group(), group)) {
        return argument("disjoint union of G-sets over different groups");
    }
    let size: usize = parts.iter().map(|x| x.size()).sum();
    let mut action = Vec::with_capacity(group.order() * size);
    for g in group.elements() {
        let mut offset = 0;
        for x in parts {
            action.extend((0..x.size()).map(|pt| (offset + x.act(g, pt)) as u32));
            offset += x.size();
        }
    }
    Ok(GSet::from_trusted(group, size, action))
}

/// `X x Y` with the diagonal action; the pair `(a, b)` has index `a * |Y| + b`,
/// matching the row order of a Kronecker product.
pub fn tensor(x: &GSet, y: &GSet) -> Result<GSet> {
    if !same_group(x.group(), y.group()) {
        return argument("tensor product of G-sets over different groups");
    }
    let (nx, ny) = (x.size(), y.size());
    let mut action = Vec::with_capacity(x.group.order() * nx * ny);
    for g in x.group.elements() {
        for a in 0..nx {
            let ga = x.act(g, a);
            for b in 0..ny {
                action.push((ga * ny + y.act(g, b)) as u32);
            }
        }
    }
    Ok(GSet::from_trusted(x.group(), nx * ny, action))
}

/// Restriction along an inclusion `H <= G`; the result is an `H`-set on the
/// same points.
pub fn restrict(x: &GSet, inc: &SubgroupInclusion) -> Result<GSet> {
    if !same_group(x.group(), inc.parent()) {
        return argument("restriction along an inclusion into a different group");
    }
    let size = x.size();
    let mut action = Vec::with_capacity(inc.sub().order() * size);
    for i in inc.sub().elements() {
        let g = inc.embed(i);
        action.extend((0..size).map(|pt| x.act(g, pt) as u32));
    }
    Ok(GSet::from_trusted(inc.sub(), size, action))
}

/// `G x_H X` for an `H`-set `X`, realized on pairs `(t_i, x)` with index
/// `i * |X| + x`, where `t_i` runs over the recorded left transversal.
#[derive(Debug, Clone)]
pub struct Induced {
    pub gset: GSet,
    pub transversal: Vec<usize>,
}

pub fn induce(x: &GSet, inc: &SubgroupInclusion) -> Result<Induced> {
    if !same_group(x.group(), inc.sub()) {
        return argument("induction of a G-set that is not over the subgroup");
    }
    let g = inc.parent();
    let (reps, coset_of) = left_cosets(g, inc.subgroup());
    let m = x.size();
    let mut action = Vec::with_capacity(g.order() * reps.len() * m);
    for a in g.elements() {
        for &t in &reps {
            let at = g.mul(a, t);
            let j = coset_of[at];
            let h = g.mul(g.inv(reps[j]), at);
            let hi = inc.index_of(h).expect("t_j^-1 a t_i lies in H");
            action.extend((0..m).map(|pt| (j * m + x.act(hi, pt)) as u32));
        }
    }
    Ok(Induced {
        gset: GSet::from_trusted(g, reps.len() * m, action),
        transversal: reps,
    })
}

/// Conjugation `c_g`: an `H`-set `X` becomes a `gHg^-1`-set on the same
/// points, with `g h g^-1` acting as `h`. For `H = G` the result is the
/// twisted G-set over the same group.
pub fn conjugate(x: &GSet, inc: &SubgroupInclusion, g: usize) -> Result<(SubgroupInclusion, GSet)> {
    if !same_group(x.group(), inc.sub()) {
        return argument("conjugation of a G-set that is not over the subgroup");
    }
    let parent = inc.parent();
    if g >= parent.order() {
        return argument("conjugating element out of range");
    }
    let target = parent.conjugate_subgroup(inc.subgroup(), g);
    let cinc = SubgroupInclusion::new(parent, &target)?;
    let gi = parent.inv(g);
    let size = x.size();
    let mut action = Vec::with_capacity(cinc.sub().order() * size);
    for j in cinc.sub().elements() {
        let h = parent.conj(gi, cinc.embed(j));
        let hi = inc.index_of(h).expect("g^-1 (gHg^-1) g = H");
        action.extend((0..size).map(|pt| x.act(hi, pt) as u32));
    }
    let gset = GSet::from_trusted(cinc.sub(), size, action);
    Ok((cinc, gset))
}

/// `X^H` as a set over `W_G(H)`, with the indices of the fixed points in `X`.
#[derive(Debug, Clone)]
pub struct FixedPoints {
    pub gset: GSetRef,
    pub points: Vec<usize>,
}

pub fn fixed_points(x: &GSet, weyl: &WeylGroup) -> FixedPoints {
    let points = x.fixed(weyl.subgroup());
    let mut index = vec![usize::MAX; x.size()];
    for (i, &pt) in points.iter().enumerate() {
        index[pt] = i;
    }
    let w = weyl.group();
    let m = points.len();
    let mut action = Vec::with_capacity(w.order() * m);
    for c in w.elements() {
        let g = weyl.lift(c);
        action.extend(points.iter().map(|&pt| index[x.act(g, pt)] as u32));
    }
    FixedPoints {
        gset: Arc::new(GSet::from_trusted(w, m, action)),
        points,
    }
}

/// An equivariant linear map `k(X) -> k(Y)`, stored as a `|Y| x |X|` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivariantMap {
    source: GSetRef,
    target: GSetRef,
    matrix: Matrix,
}

impl EquivariantMap {
    pub fn new(source: &GSetRef, target: &GSetRef, matrix: Matrix) -> Result<Self> {
        if !same_group(source.group(), target.group()) {
            return argument("source and target are over different groups");
        }
        if matrix.rows() != target.size() || matrix.cols() != source.size() {
            return argument(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.size(),
                source.size()
            ));
        }
        check_equivariant(source, target, &matrix)?;
        Ok(Self::from_parts(source, target, matrix))
    }

    pub(crate) fn from_parts(source: &GSetRef, target: &GSetRef, matrix: Matrix) -> Self {
        debug_assert!(check_equivariant(source, target, &matrix).is_ok());
        EquivariantMap {
            source: source.clone(),
            target: target.clone(),
            matrix,
        }
    }

    pub fn identity(x: &GSetRef, field: PrimeField) -> Self {
        Self::from_parts(x, x, Matrix::identity(field, x.size()))
    }

    pub fn zero(source: &GSetRef, target: &GSetRef, field: PrimeField) -> Self {
        Self::from_parts(
            source,
            target,
            Matrix::zeros(field, target.size(), source.size()),
        )
    }

    pub fn source(&self) -> &GSetRef {
        &self.source
    }

    pub fn target(&self) -> &GSetRef {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn field(&self) -> PrimeField {
        self.matrix.field()
    }

    /// `self . other` (first `other`, then `self`).
    pub fn compose(&self, other: &EquivariantMap) -> Result<EquivariantMap> {
        if other.target.size() != self.source.size()
            || !same_group(other.target.group(), self.source.group())
        {
            return argument("maps are not composable");
        }
        let m = self.matrix.checked_mul(&other.matrix)?;
        Ok(Self::from_parts(&other.source, &self.target, m))
    }
}

/// `M[g y, g x] = M[y, x]` for all `g`: checked on the nonzero entries, since
/// `(y, x) -> (g y, g x)` permutes the index pairs.
fn check_equivariant(source: &GSet, target: &GSet, matrix: &Matrix) -> Result<()> {
    let group = source.group();
    let mut nonzero = Vec::new();
    for y in 0..matrix.rows() {
        for (x, &v) in matrix.row(y).iter().enumerate() {
            if v != 0 {
                nonzero.push((y, x, v));
            }
        }
    }
    let all: Vec<usize>;
    let elements: &[usize] = if group.order() * nonzero.len() <= EXHAUSTIVE_EQUIVARIANCE_LIMIT {
        all = group.elements().collect();
        &all
    } else {
        group.generators()
    };
    for &g in elements {
        for &(y, x, v) in &nonzero {
            if matrix.get(target.act(g, y), source.act(g, x)) != v {
                return validation(format!("matrix is not equivariant for group element {g}"));
            }
        }
    }
    Ok(())
}

/// Rows `Y^H`, columns `X^H` of an equivariant map: the Brauer quotient at a
/// p-subgroup `H`, as a map over `W_G(H)`.
pub fn brauer_quotient_map(f: &EquivariantMap, weyl: &WeylGroup) -> Result<EquivariantMap> {
    check_p_subgroup(weyl.subgroup(), f.field())?;
    let src = fixed_points(f.source(), weyl);
    let tgt = fixed_points(f.target(), weyl);
    Ok(brauer_between(f, &src, &tgt))
}

pub(crate) fn brauer_between(
    f: &EquivariantMap,
    src: &FixedPoints,
    tgt: &FixedPoints,
) -> EquivariantMap {
    let m = f.matrix().submatrix(&tgt.points, &src.points);
    EquivariantMap::from_parts(&src.gset, &tgt.gset, m)
}

pub(crate) fn check_p_subgroup(h: &Subgroup, field: PrimeField) -> Result<()> {
    if !is_power_of(h.order(), field.p() as usize) {
        return argument(format!(
            "Brauer quotient needs a {}-subgroup, got a subgroup of order {}",
            field.p(),
            h.order()
        ));
    }
    Ok(())
}

pub fn restrict_map(f: &EquivariantMap, inc: &SubgroupInclusion) -> Result<EquivariantMap> {
    let s = Arc::new(restrict(f.source(), inc)?);
    let t = Arc::new(restrict(f.target(), inc)?);
    Ok(EquivariantMap::from_parts(&s, &t, f.matrix().clone()))
}

/// Block-diagonal extension over the transversal: `(t_i, x) -> sum f[y,x] (t_i, y)`.
pub fn induce_map(f: &EquivariantMap, inc: &SubgroupInclusion) -> Result<EquivariantMap> {
    let s = Arc::new(induce(f.source(), inc)?.gset);
    let t = Arc::new(induce(f.target(), inc)?.gset);
    let index = inc.parent().order() / inc.sub().order();
    let m = Matrix::identity(f.field(), index).kronecker(f.matrix());
    Ok(EquivariantMap::from_parts(&s, &t, m))
}

pub fn conjugate_map(
    f: &EquivariantMap,
    inc: &SubgroupInclusion,
    g: usize,
) -> Result<(SubgroupInclusion, EquivariantMap)> {
    let (cinc, s) = conjugate(f.source(), inc, g)?;
    let (_, t) = conjugate(f.target(), inc, g)?;
    let s = Arc::new(s);
    let t = Arc::new(GSet::from_trusted(s.group(), t.size, t.action));
    Ok((cinc, EquivariantMap::from_parts(&s, &t, f.matrix().clone())))
}

pub fn tensor_map(f: &EquivariantMap, g: &EquivariantMap) -> Result<EquivariantMap> {
    let s = Arc::new(tensor(f.source(), g.source())?);
    let t = Arc::new(tensor(f.target(), g.target())?);
    Ok(EquivariantMap::from_parts(
        &s,
        &t,
        f.matrix().kronecker(g.matrix()),
    ))
}

/// Same multiset of stabilizer conjugacy classes.
pub fn gset_isomorphic(x: &GSet, y: &GSet) -> Result<bool> {
    if !same_group(x.group(), y.group()) {
        return argument("G-sets over different groups");
    }
    Ok(x.size() == y.size() && x.formal() == y.formal())
}

/// Minimal elements of the double cosets `K g H`.
pub fn double_coset_representatives(group: &FiniteGroup, k: &Subgroup, h: &Subgroup) -> Vec<usize> {
    let mut seen = vec![false; group.order()];
    let mut reps = Vec::new();
    for g in group.elements() {
        if seen[g] {
            continue;
        }
        reps.push(g);
        for &a in k.elements() {
            let ag = group.mul(a, g);
            for &b in h.elements() {
                seen[group.mul(ag, b)] = true;
            }
        }
    }
    reps
}

/// A basis of `Hom_G(k(X), k(Y))`: one 0/1 matrix per G-orbit on `Y x X`.
pub fn hom_basis(x: &GSet, y: &GSet, field: PrimeField) -> Result<Vec<Matrix>> {
    if !same_group(x.group(), y.group()) {
        return argument("G-sets over different groups");
    }
    let (nx, ny) = (x.size(), y.size());
    let mut seen = vec![false; nx * ny];
    let mut basis = Vec::new();
    for b in 0..ny {
        for a in 0..nx {
            if seen[b * nx + a] {
                continue;
            }
            let mut m = Matrix::zeros(field, ny, nx);
            for g in x.group().elements() {
                let (gb, ga) = (y.act(g, b), x.act(g, a));
                seen[gb * nx + ga] = true;
                m.set(gb, ga, 1);
            }
            basis.push(m);
        }
    }
    Ok(basis)
}
