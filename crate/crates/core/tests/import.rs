mod common;

use std::collections::BTreeMap;

use ontocm::cot::parse_cot;
use ontocm::daml::import_damlxml;
use ontocm::pipeline::run_pipeline;
use ontocm::transform::{FlagKind, TransformConfig};

#[test]
fn census_matches_hand_count() {
    for (file, translated, skipped) in common::census() {
        let report = import_damlxml(common::fixture_text(file).as_bytes()).unwrap();
        assert_eq!(report.translated_total(), translated, "{file}");
        let got: BTreeMap<_, _> = report
            .skipped
            .iter()
            .map(|s| (s.element.as_str(), s.count))
            .collect();
        let want: BTreeMap<_, _> = skipped.into_iter().collect();
        assert_eq!(got, want, "{file}");
    }
}

#[test]
fn skipped_elements_reach_the_report() {
    for (file, _, skipped) in common::census() {
        let report = import_damlxml(common::fixture_text(file).as_bytes()).unwrap();
        let out =
            run_pipeline(&report.ontology, Some(&report), &TransformConfig::default()).unwrap();
        let subjects: Vec<_> = out
            .report
            .of_kind(FlagKind::UnmappedConstruct)
            .map(|i| i.subject.as_str())
            .collect();
        for (element, _) in skipped {
            assert!(
                subjects.contains(&element),
                "{file}: {element} missing from report"
            );
        }
    }
}

#[test]
fn protein_dna_import_matches_cot_fixture() {
    let report = import_damlxml(common::fixture_text("protein-dna.daml").as_bytes()).unwrap();
    let cot = parse_cot(&common::fixture_text("protein-dna-only.cot")).unwrap();
    let a = run_pipeline(&report.ontology, None, &TransformConfig::default()).unwrap();
    let b = run_pipeline(&cot, None, &TransformConfig::default()).unwrap();
    assert_eq!(a.model.relationships, b.model.relationships);
}

#[test]
fn tambis_excerpt_content() {
    let report = import_damlxml(common::fixture_text("tambis-excerpt.daml").as_bytes()).unwrap();
    let ont = &report.ontology;
    assert!(ont.class("Protein").is_some());
    assert!(!ont.axioms.is_empty());
    common::check_invariants(
        &run_pipeline(ont, Some(&report), &TransformConfig::default()).unwrap(),
    )
    .unwrap();
}

#[test]
fn malformed_xml_is_an_error() {
    assert!(import_damlxml(b"<rdf:RDF xmlns:rdf='x'>").is_err());
    assert!(import_damlxml(&[0xff, 0xfe, 0x00]).is_err());
}
