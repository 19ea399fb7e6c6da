mod common;

use ontocm::cot::parse_cot;
use ontocm::emit::emit_model_json;
use ontocm::pipeline::run_pipeline;
use ontocm::transform::TransformConfig;

#[test]
fn model_json_matches_golden_files() {
    let mut failures = Vec::new();
    for stem in common::GOLDEN_FIXTURES {
        let text = common::fixture_text(&format!("{stem}.cot"));
        let ont = parse_cot(&text).unwrap();
        let out = run_pipeline(&ont, None, &TransformConfig::default()).unwrap();
        let expected = common::fixture_text(&format!("golden/{stem}.model.json"));
        if emit_model_json(&out.model) != expected {
            failures.push(stem);
        }
    }
    assert!(failures.is_empty(), "mismatched goldens: {failures:?}");
}

#[test]
fn rule_fixtures_stay_minimal() {
    for stem in common::GOLDEN_FIXTURES
        .iter()
        .filter(|s| s.starts_with("rule"))
    {
        let n = common::statements(&common::fixture_text(&format!("{stem}.cot")));
        assert!(n <= 5, "{stem} has {n} statements");
    }
}
