//! The example documents under `data/complexes` match the library
//! constructions. Run with `STPERM_BLESS=1` to rewrite them.

use std::path::PathBuf;

use stperm_core::complexes::{cyclic_acyclic_complex, free_complex, koszul_object, PermComplex};
use stperm_core::formats::{load_complex, ComplexSpec, GroupSpec};
use stperm_core::group::catalog;
use stperm_core::linalg::PrimeField;
use stperm_core::stable::{support_profile, SupportKind};

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/complexes")
}

fn expected() -> Vec<(&'static str, &'static str, PermComplex)> {
    let f2 = PrimeField::new(2).unwrap();
    vec![
        (
            "cp_acyclic",
            "0 -> k -> kC3 -> kC3 -> k -> 0 (norm, 1 - g, augmentation), acyclic",
            cyclic_acyclic_complex(3).unwrap(),
        ),
        (
            "v4_koszul",
            "Koszul object over V4: subsets of G by size, subset boundary map",
            koszul_object(&catalog("V4").unwrap(), f2).unwrap(),
        ),
        (
            "kg_free",
            "the free module kQ8 in degree 0",
            free_complex(&catalog("Q8").unwrap(), f2),
        ),
    ]
}

#[test]
fn shipped_documents_match_constructions() {
    let bless = std::env::var_os("STPERM_BLESS").is_some();
    for (name, description, c) in expected() {
        let group = GroupSpec::Catalog(c.group().name().unwrap().to_string());
        let mut spec = ComplexSpec::from_complex(&c, group).unwrap();
        spec.description = Some(description.to_string());
        let path = dir().join(format!("{name}.json"));
        if bless {
            std::fs::write(&path, spec.to_json()).unwrap();
        }
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text, spec.to_json(), "{name}");
        let (loaded, built) = load_complex(&text).unwrap();
        assert_eq!(loaded, spec);
        assert_eq!(built.dims(), c.dims());
        assert_eq!(built.homology(), c.homology());
        let reloaded = ComplexSpec::parse(&loaded.to_json()).unwrap();
        assert_eq!(reloaded, loaded);
        assert_eq!(reloaded.build().unwrap(), built);
    }
}

#[test]
fn shipped_profiles() {
    let load = |n: &str| {
        load_complex(&std::fs::read_to_string(dir().join(format!("{n}.json"))).unwrap())
            .unwrap()
            .1
    };
    let cp = support_profile(&load("cp_acyclic")).unwrap();
    assert!(cp.is_eq_perf());
    let kinds: Vec<SupportKind> = cp.entries.iter().map(|e| e.kind).collect();
    assert_eq!(kinds, vec![SupportKind::Absent, SupportKind::ClosedOnly]);
    let kz = support_profile(&load("v4_koszul")).unwrap();
    assert!(kz.is_perfect() && !kz.is_eq_perf());
    assert!(support_profile(&load("kg_free")).unwrap().is_eq_perf());
}
