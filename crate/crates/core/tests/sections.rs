use proptest::prelude::*;
use stperm_core::group::{catalog, catalog_names, is_power_of, IsoType};
use stperm_core::sections::{
    bottleneck_holds, component_count, decomposability_verdict, enumerate_sections, find_morphism,
    is_morphism, surrounding_section, VerdictKind,
};

fn primes_dividing(n: usize) -> Vec<usize> {
    (2..=n)
        .filter(|&q| n.is_multiple_of(q) && (2..q).all(|d| q % d != 0))
        .collect()
}

#[test]
fn routes_agree_on_the_whole_catalog() {
    for name in catalog_names().unwrap() {
        let g = catalog(&name).unwrap();
        for p in primes_dividing(g.order()) {
            let v = decomposability_verdict(&g, p).unwrap();
            assert!(v.consistent(), "{name} at {p}: {v:?}");
            assert!(v.components() >= 1);
        }
    }
}

#[test]
fn named_component_counts() {
    let expect = [
        ("Q8", 2, 2),
        ("Q16", 2, 2),
        ("Q32", 2, 2),
        ("SL2F3", 2, 2),
        ("Q8_semidirect_F3sq", 2, 2),
        ("S3", 3, 1),
        ("C9", 3, 2),
        ("C27", 3, 3),
        ("V4", 2, 1),
        ("D8", 2, 1),
        ("D16", 2, 1),
        ("SD16", 2, 1),
        ("A4", 2, 1),
        ("S4", 2, 1),
        ("C2xC4", 2, 1),
        ("C3xC3", 3, 1),
        ("C2xC2xC2", 2, 1),
    ];
    for (name, p, n) in expect {
        assert_eq!(
            component_count(&catalog(name).unwrap(), p).unwrap(),
            n,
            "{name}"
        );
    }
    let v = decomposability_verdict(&catalog("Q8_semidirect_F3sq").unwrap(), 2).unwrap();
    assert_eq!(v.kind, VerdictKind::QuaternionSylow { n: 3 });
    assert_eq!(v.factors[0], "StPerm(V_4;k)");
}

#[test]
fn bottleneck_matches_iso_type_exhaustively() {
    for name in catalog_names().unwrap() {
        let g = catalog(&name).unwrap();
        let Some(&p) = primes_dividing(g.order()).first() else {
            continue;
        };
        if !is_power_of(g.order(), p) || g.order() < p * p {
            continue;
        }
        let t = g.iso_type();
        let special = t.is_cyclic() || t.is_generalized_quaternion();
        assert_eq!(bottleneck_holds(&g, p).unwrap(), special, "{name}");
        if !special {
            for h in g.all_subgroups().unwrap() {
                if h.is_trivial() || h.order() == g.order() {
                    continue;
                }
                let s = surrounding_section(&g, p, h)
                    .unwrap()
                    .unwrap_or_else(|| panic!("{name}: {h:?}"));
                assert!(s.rank >= 2);
                assert!(s.k.is_proper_subset_of(h) && h.is_proper_subset_of(&s.h));
                assert!(
                    g.is_normal_in(&s.k, &s.h) && g.is_elementary_abelian_section(&s.h, &s.k, p)
                );
            }
        }
    }
}

#[test]
fn cyclic_sections_form_a_chain() {
    for (name, p, n) in [("C8", 2, 3), ("C27", 3, 3), ("C25", 5, 2)] {
        let g = catalog(name).unwrap();
        let s: Vec<_> = enumerate_sections(&g, p)
            .unwrap()
            .into_iter()
            .filter(|x| !x.is_trivial())
            .collect();
        assert_eq!(s.len(), n);
        for a in &s {
            for b in &s {
                assert_eq!(find_morphism(&g, a, b).is_some(), a == b);
            }
        }
    }
}

#[test]
fn sylow_type_of_quaternion_groups() {
    for name in ["Q8", "Q16", "Q32"] {
        let g = catalog(name).unwrap();
        assert!(matches!(
            g.iso_type(),
            IsoType::GeneralizedQuaternion { .. }
        ));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn witnesses_compose(name in prop::sample::select(vec!["S3", "D8", "A4", "Q8", "S4"]), seed in any::<[usize; 3]>()) {
        let g = catalog(name).unwrap();
        let p = 2.min(primes_dividing(g.order())[0]);
        let s = enumerate_sections(&g, p).unwrap();
        let (a, b, c) = (&s[seed[0] % s.len()], &s[seed[1] % s.len()], &s[seed[2] % s.len()]);
        if let (Some(f), Some(h)) = (find_morphism(&g, a, b), find_morphism(&g, b, c)) {
            prop_assert!(is_morphism(&g, a, c, g.mul(f.element, h.element)));
        }
    }
}
