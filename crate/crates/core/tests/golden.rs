//! Byte-exact comparison of the dihedral example against `fixtures/`.
//! Set `MLA_BLESS=1` to rewrite the files from the current serializers.

use std::path::PathBuf;

use mla_core::cohomology::{CohomologyGroup, SearchOptions};
use mla_core::extensions::{extract_center_data, extract_general_data, extract_lie_center_data};
use mla_core::io::{self, GeneralSystem};
use mla_core::samples::{d4_extension, d4_mla, d4_section};
use mla_core::{FiniteGroup, MultLieAlgebra};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn check(name: &str, text: &str) {
    let path = fixture(name);
    if std::env::var_os("MLA_BLESS").is_some() {
        std::fs::write(&path, text).unwrap();
    }
    let stored = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(stored, text, "{name} differs from its serialization");
    assert_eq!(io::serialize(&io::parse(&stored).unwrap()), stored);
}

#[test]
fn z2() {
    check("z2.mla", &io::serialize_mla(&MultLieAlgebra::trivial_star(FiniteGroup::cyclic(2))));
}

#[test]
fn dihedral_algebra() {
    check("d4.mla", &io::serialize_mla(&d4_mla()));
}

#[test]
fn dihedral_extension_and_section() {
    let ext = d4_extension().unwrap();
    let t = d4_section(&ext).unwrap();
    check("d4-ext.doc", &io::serialize_extension(&ext));
    check("d4-section.doc", &io::serialize_map(t.map()));
    check("d4-quotient.mla", &io::serialize_mla(ext.quotient()));
}

#[test]
fn dihedral_factor_systems() {
    let ext = d4_extension().unwrap();
    let t = d4_section(&ext).unwrap();
    let center = extract_center_data(&ext, &t).unwrap();
    check("d4-fs-center.doc", &io::serialize_factor_system(&center));
    assert!(extract_lie_center_data(&ext, &t).is_err(), "b² does not star-commute");
    check(
        "d4-fs-general.doc",
        &io::serialize_general(&GeneralSystem {
            k: ext.quotient().clone(),
            h: ext.kernel_group().clone(),
            data: extract_general_data(&ext, &t).unwrap(),
        }),
    );
    let report = CohomologyGroup::compute(&center.setting, SearchOptions::default())
        .unwrap()
        .report();
    check("d4-cohomology.doc", &io::serialize_cohomology_report(&report));
}
