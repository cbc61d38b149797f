use stperm_core::group::{
    catalog, catalog_names, is_power_of, isomorphic, FiniteGroup, IsoType, SubgroupInclusion,
};

fn primes_dividing(n: usize) -> Vec<usize> {
    (2..=n)
        .filter(|&q| n.is_multiple_of(q) && (2..q).all(|d| q % d != 0))
        .collect()
}

#[test]
fn lagrange_and_sylow_counts() {
    for name in catalog_names().unwrap() {
        let g = catalog(&name).unwrap();
        if g.order() > 128 {
            continue;
        }
        for h in g.all_subgroups().unwrap() {
            assert_eq!(g.order() % h.order(), 0, "{name}");
        }
        for p in primes_dividing(g.order()) {
            let sylow = g.sylow_subgroup(p).unwrap();
            assert!(
                is_power_of(sylow.order(), p) && !(g.order() / sylow.order()).is_multiple_of(p)
            );
            let count = g.count_subgroups_of_order(sylow.order()).unwrap();
            assert_eq!(count % p, 1, "{name} at {p}");
            assert_eq!((g.order() / sylow.order()) % count, 0, "{name} at {p}");
            let normalizer = g.normalizer(&sylow);
            assert_eq!(count, g.order() / normalizer.order(), "{name} at {p}");
        }
    }
}

#[test]
fn catalog_iso_types() {
    let expect = [
        ("C1", IsoType::Trivial),
        (
            "C9",
            IsoType::Cyclic {
                prime: 3,
                exponent: 2,
            },
        ),
        (
            "C625",
            IsoType::Cyclic {
                prime: 5,
                exponent: 4,
            },
        ),
        ("V4", IsoType::ElementaryAbelian { prime: 2, rank: 2 }),
        ("C2xC2xC2", IsoType::ElementaryAbelian { prime: 2, rank: 3 }),
        ("C3xC3", IsoType::ElementaryAbelian { prime: 3, rank: 2 }),
        ("Q8", IsoType::GeneralizedQuaternion { n: 3 }),
        ("Q16", IsoType::GeneralizedQuaternion { n: 4 }),
        ("Q32", IsoType::GeneralizedQuaternion { n: 5 }),
        ("D8", IsoType::Dihedral { n: 3 }),
        ("D16", IsoType::Dihedral { n: 4 }),
        ("SD16", IsoType::Other { order: 16 }),
        ("M16", IsoType::Other { order: 16 }),
        ("C2xQ8", IsoType::Other { order: 16 }),
    ];
    for (name, t) in expect {
        assert_eq!(catalog(name).unwrap().iso_type(), t, "{name}");
    }
}

#[test]
fn unique_subgroup_detection() {
    for name in ["Q8", "Q16", "Q32", "C8", "C16"] {
        let g = catalog(name).unwrap();
        assert!(g.has_unique_order_p_subgroup(2).unwrap(), "{name}");
    }
    for name in ["D8", "V4", "SD16", "C2xC4"] {
        assert!(
            !catalog(name)
                .unwrap()
                .has_unique_order_p_subgroup(2)
                .unwrap(),
            "{name}"
        );
    }
    for name in ["C8", "C27"] {
        let g = catalog(name).unwrap();
        let p = primes_dividing(g.order())[0];
        assert!(g.has_unique_index_p_subgroup(p).unwrap());
    }
    assert!(!catalog("Q8")
        .unwrap()
        .has_unique_index_p_subgroup(2)
        .unwrap());
}

#[test]
fn quaternion_sylows_in_the_catalog() {
    for (name, order) in [("SL2F3", 24), ("Q8_semidirect_F3sq", 72)] {
        let g = catalog(name).unwrap();
        assert_eq!(g.order(), order);
        let s = g.sylow_subgroup(2).unwrap();
        let inc = SubgroupInclusion::new(&g, &s).unwrap();
        assert_eq!(
            inc.sub().iso_type(),
            IsoType::GeneralizedQuaternion { n: 3 }
        );
        assert!(isomorphic(inc.sub(), &catalog("Q8").unwrap()).unwrap());
    }
}

#[test]
fn weyl_groups() {
    let q8 = catalog("Q8").unwrap();
    let w = q8.weyl_group(&q8.center());
    assert_eq!(
        w.group().iso_type(),
        IsoType::ElementaryAbelian { prime: 2, rank: 2 }
    );
    let s4 = catalog("S4").unwrap();
    let v = s4.sylow_subgroup(2).unwrap();
    assert_eq!(s4.weyl_group(&v).group().order(), 1);
    let s3 = catalog("S3").unwrap();
    let c3 = s3.sylow_subgroup(3).unwrap();
    assert_eq!(s3.weyl_group(&c3).group().order(), 2);
}

#[test]
fn cyclic_constructor_matches_catalog() {
    for n in [2, 3, 4, 8, 9, 25] {
        let g = FiniteGroup::cyclic(n);
        let c = catalog(&format!("C{n}")).unwrap();
        assert!(isomorphic(&g, &c).unwrap());
    }
}
