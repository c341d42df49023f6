use super::*;
use crate::cohomology::{CohomologyGroup, SearchOptions};
use crate::extensions::{extract_center_data, extract_general_data};
use crate::samples::{d4_extension, d4_mla, d4_section, desk_scale_quotients};

fn roundtrip(text: &str) {
    let doc = parse(text).unwrap();
    assert_eq!(serialize(&doc), text);
}

#[test]
fn z2_group_bytes() {
    let text = serialize_group(&FiniteGroup::cyclic(2));
    assert_eq!(text, "mla-kit v1\nkind group\norder 2\nmul\n0 1\n1 0\n");
    assert_eq!(parse_group(&text).unwrap(), FiniteGroup::cyclic(2));
}

#[test]
fn three_entry_row_in_a_two_by_two_table() {
    let text = "mla-kit v1\nkind group\norder 2\nmul\n0 1 0\n1 0 1\n";
    match parse(text) {
        Err(Error::Parse(e)) => assert_eq!(e.line, 5),
        other => panic!("expected a syntax error, got {other:?}"),
    }
}

#[test]
fn semantic_errors_are_not_syntax_errors() {
    let out_of_range = "mla-kit v1\nkind group\norder 2\nmul\n0 1\n1 2\n";
    assert!(matches!(parse(out_of_range), Err(Error::Malformed(_))));
    let not_a_group = "mla-kit v1\nkind group\norder 2\nmul\n0 1\n1 1\n";
    assert!(matches!(
        parse(not_a_group),
        Err(Error::Invalid { .. }) | Err(Error::Malformed(_))
    ));
    let bad_star = "mla-kit v1\nkind mla\norder 2\nmul\n0 1\n1 0\nstar\n0 1\n1 0\n";
    assert!(matches!(parse(bad_star), Err(Error::Invalid { .. })));
}

#[test]
fn unknown_kind_and_version() {
    assert!(matches!(parse("mla-kit v1\nkind ring\n"), Err(Error::Parse(_))));
    assert!(matches!(parse("mla-kit v0\nkind group\n"), Err(Error::Parse(_))));
}

#[test]
fn every_kind_round_trips() {
    let ext = d4_extension().unwrap();
    let t = d4_section(&ext).unwrap();
    let fs = extract_center_data(&ext, &t).unwrap();
    let general = GeneralSystem {
        k: ext.quotient().clone(),
        h: ext.kernel_group().clone(),
        data: extract_general_data(&ext, &t).unwrap(),
    };
    let report = CohomologyGroup::compute(&fs.setting, SearchOptions::default())
        .unwrap()
        .report();
    let texts = [
        serialize_mla(&d4_mla()),
        serialize_map(t.map()),
        serialize_pairfn(fs.mul_part()),
        serialize_factor_system(&fs),
        serialize_general(&general),
        serialize_extension(&ext),
        serialize_cohomology_report(&report),
    ];
    for text in &texts {
        roundtrip(text);
        assert!(!text.contains(" \n") && !text.contains('\r'));
    }
    assert_eq!(parse_factor_system(&texts[3]).unwrap(), fs);
    assert_eq!(parse_cohomology_report(&texts[6]).unwrap(), report);
}

#[test]
fn report_carries_the_order_line() {
    let k = MultLieAlgebra::trivial_star(FiniteGroup::cyclic(2));
    let s = Setting::new(
        k,
        FiniteGroup::cyclic(2),
        Twist::trivial(Mode::Center, 2, 2),
    )
    .unwrap();
    let r = CohomologyGroup::compute(&s, SearchOptions::default()).unwrap().report();
    assert!(serialize_cohomology_report(&r).lines().any(|l| l == "|H2| 2"));
}

#[test]
fn distinct_structures_serialize_differently() {
    let texts: Vec<String> = desk_scale_quotients()
        .iter()
        .map(|(_, m)| serialize_mla(m))
        .collect();
    for i in 0..texts.len() {
        for j in i + 1..texts.len() {
            assert_ne!(texts[i], texts[j]);
        }
    }
}

#[test]
fn fs_kind_must_match_the_twist() {
    let ext = d4_extension().unwrap();
    let fs = extract_center_data(&ext, &d4_section(&ext).unwrap()).unwrap();
    let text = serialize_factor_system(&fs).replace("kind fs-center", "kind fs-lie");
    assert!(matches!(parse(&text), Err(Error::Parse(_))));
}

#[test]
fn labels_do_not_affect_content() {
    let text = "mla-kit v1\nkind group\nlabels e a\norder 2\nmul\n0 1\n1 0\n";
    assert_eq!(serialize(&parse(text).unwrap()), serialize_group(&FiniteGroup::cyclic(2)));
}

#[test]
fn bare_group_reads_as_trivial_star() {
    let m = parse_algebra(&serialize_group(&FiniteGroup::cyclic(3))).unwrap();
    assert!(m.has_trivial_star());
}
