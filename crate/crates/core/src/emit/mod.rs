//! Serializers for conceptual models, validation reports and BWW reports.
//!
//! Every emitter is a pure function of its input and produces UTF-8 text
//! with LF line endings and no timestamps, so equal inputs give
//! byte-identical output.

mod diagram;
mod json;
mod report;

pub use diagram::{emit_dot, emit_plantuml};
pub use json::{emit_bww_json, emit_model_json, parse_model_json};
pub use report::emit_report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EmitFormat {
    ModelJson,
    PlantUml,
    Dot,
    ReportMarkdown,
    BwwJson,
}

impl EmitFormat {
    pub const ALL: [EmitFormat; 5] = [
        EmitFormat::ModelJson,
        EmitFormat::PlantUml,
        EmitFormat::Dot,
        EmitFormat::ReportMarkdown,
        EmitFormat::BwwJson,
    ];

    /// Name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            EmitFormat::ModelJson => "json",
            EmitFormat::PlantUml => "plantuml",
            EmitFormat::Dot => "dot",
            EmitFormat::ReportMarkdown => "report",
            EmitFormat::BwwJson => "bww",
        }
    }

    pub fn from_name(name: &str) -> Option<EmitFormat> {
        EmitFormat::ALL.into_iter().find(|f| f.name() == name)
    }

    /// File name suffix appended to the input stem.
    pub fn extension(self) -> &'static str {
        match self {
            EmitFormat::ModelJson => "model.json",
            EmitFormat::PlantUml => "puml",
            EmitFormat::Dot => "dot",
            EmitFormat::ReportMarkdown => "report.md",
            EmitFormat::BwwJson => "bww.json",
        }
    }
}
