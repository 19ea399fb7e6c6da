use crate::bww::BwwReport;
use crate::model::ConceptualModel;

fn pretty<T: serde::Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("model types always serialize");
    out.push('\n');
    out
}

/// Model as JSON with two-space indentation and a trailing newline.
pub fn emit_model_json(cm: &ConceptualModel) -> String {
    pretty(cm)
}

pub fn parse_model_json(text: &str) -> Result<ConceptualModel, serde_json::Error> {
    serde_json::from_str(text)
}

pub fn emit_bww_json(report: &BwwReport) -> String {
    pretty(report)
}
