//! Random objects shared by the integration tests and the acceptance suite.
#![allow(dead_code)]

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use stperm_core::group::{GroupRef, Subgroup, SubgroupInclusion};
use stperm_core::gset::{
    brauer_quotient_map, coset_gset, disjoint_union, double_coset_representatives, gset_isomorphic,
    hom_basis, restrict, tensor_map, EquivariantMap, GSet, GSetRef,
};
use stperm_core::linalg::{Matrix, PrimeField};
use stperm_core::stable::GModule;

/// A disjoint union of coset G-sets of total size at most `max_size`
/// (at least one orbit when `G` itself fits).
pub fn random_gset(g: &GroupRef, rng: &mut impl Rng, max_size: usize) -> GSet {
    let subs: Vec<Subgroup> = g
        .all_subgroups()
        .unwrap()
        .iter()
        .filter(|h| g.order() / h.order() <= max_size)
        .cloned()
        .collect();
    let mut parts = Vec::new();
    let mut size = 0;
    for _ in 0..rng.gen_range(1..=3) {
        let h = subs.choose(rng).unwrap();
        let n = g.order() / h.order();
        if size + n <= max_size {
            parts.push(coset_gset(g, h));
            size += n;
        }
    }
    disjoint_union(g, &parts.iter().collect::<Vec<_>>()).unwrap()
}

/// A random linear combination of the standard basis of `Hom_G(k(X), k(Y))`.
pub fn random_map(
    x: &GSetRef,
    y: &GSetRef,
    field: PrimeField,
    rng: &mut impl Rng,
) -> EquivariantMap {
    let basis = hom_basis(x, y, field).unwrap();
    let mut m = Matrix::zeros(field, y.size(), x.size());
    for b in &basis {
        let c = rng.gen_range(0..field.p() as i64);
        m = m.checked_add(&b.scale(c)).unwrap();
    }
    EquivariantMap::new(x, y, m).unwrap()
}

pub fn random_invertible(field: PrimeField, n: usize, rng: &mut impl Rng) -> Matrix {
    loop {
        let t = Matrix::from_fn(field, n, n, |_, _| rng.gen_range(0..field.p() as i64));
        if t.inverse().is_some() {
            return t;
        }
    }
}

/// A module of dimension at most `max_dim`: a permutation module, or the
/// kernel or image of a random endomorphism of one, in a random basis.
pub fn random_module(
    g: &GroupRef,
    field: PrimeField,
    rng: &mut impl Rng,
    max_dim: usize,
) -> GModule {
    loop {
        let x: GSetRef = Arc::new(random_gset(g, rng, max_dim));
        let perm = GModule::permutation(&x, field);
        let m = match rng.gen_range(0..3) {
            0 => perm,
            1 => perm
                .kernel_of(random_map(&x, &x, field, rng).matrix())
                .unwrap(),
            _ => perm
                .span_submodule(random_map(&x, &x, field, rng).matrix())
                .unwrap(),
        };
        if m.dim() == 0 {
            continue;
        }
        let t = random_invertible(field, m.dim(), rng);
        return m.conjugate_basis(&t).unwrap();
    }
}

/// `Psi(h . f) = Psi(h) . Psi(f)` for random `f : X -> Y`, `h : Y -> Z`.
pub fn brauer_functorial(
    g: &GroupRef,
    field: PrimeField,
    h: &Subgroup,
    rng: &mut impl Rng,
) -> bool {
    let weyl = g.weyl_group(h);
    let sets: Vec<GSetRef> = (0..3).map(|_| Arc::new(random_gset(g, rng, 12))).collect();
    let f = random_map(&sets[0], &sets[1], field, rng);
    let k = random_map(&sets[1], &sets[2], field, rng);
    let lhs = brauer_quotient_map(&k.compose(&f).unwrap(), &weyl).unwrap();
    let rhs = brauer_quotient_map(&k, &weyl)
        .unwrap()
        .compose(&brauer_quotient_map(&f, &weyl).unwrap())
        .unwrap();
    lhs.matrix() == rhs.matrix()
}

/// `Psi(f (x) k) = Psi(f) (x) Psi(k)` in the lexicographic pair basis.
pub fn brauer_monoidal(g: &GroupRef, field: PrimeField, h: &Subgroup, rng: &mut impl Rng) -> bool {
    let weyl = g.weyl_group(h);
    let sets: Vec<GSetRef> = (0..4).map(|_| Arc::new(random_gset(g, rng, 6))).collect();
    let f = random_map(&sets[0], &sets[1], field, rng);
    let k = random_map(&sets[2], &sets[3], field, rng);
    let lhs = brauer_quotient_map(&tensor_map(&f, &k).unwrap(), &weyl).unwrap();
    let pf = brauer_quotient_map(&f, &weyl).unwrap();
    let pk = brauer_quotient_map(&k, &weyl).unwrap();
    let rhs = pf.matrix().kronecker(pk.matrix());
    *lhs.matrix() == rhs
        && gset_isomorphic(lhs.source(), tensor_map(&pf, &pk).unwrap().source()).unwrap()
}

/// `Res_K (G/H)` is the disjoint union over `K g H` of `K / (K cap gHg^-1)`.
pub fn mackey_holds(g: &GroupRef, k: &Subgroup, h: &Subgroup) -> bool {
    let inc = SubgroupInclusion::new(g, k).unwrap();
    let lhs = restrict(&coset_gset(g, h), &inc).unwrap();
    let parts: Vec<GSet> = double_coset_representatives(g, k, h)
        .into_iter()
        .map(|x| {
            let conj = g.conjugate_subgroup(h, x);
            let meet = g.intersection(k, &conj);
            coset_gset(inc.sub(), &inc.pull_back(&meet))
        })
        .collect();
    let rhs = disjoint_union(inc.sub(), &parts.iter().collect::<Vec<_>>()).unwrap();
    gset_isomorphic(&lhs, &rhs).unwrap()
}
