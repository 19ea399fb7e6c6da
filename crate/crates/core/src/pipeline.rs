//! End-to-end pipeline: load, validate, collapse, classify, transform.

use std::path::Path;

use thiserror::Error;

use crate::bww::{classify_ontology, BwwReport};
use crate::cot::parse_cot_named;
use crate::daml::{import_damlxml, ImportReport};
use crate::error::{ImportError, ParseError};
use crate::model::{check_model, ConceptualModel, ModelDefect};
use crate::ontology::{
    collapse_equivalences, validate_ontology, Collapsed, Ontology, OntologyDefect,
};
use crate::transform::{transform_with, Provenance, TransformConfig, ValidationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Cot,
    DamlXml,
}

impl InputFormat {
    pub fn from_name(name: &str) -> Option<InputFormat> {
        match name {
            "cot" => Some(InputFormat::Cot),
            "damlxml" | "daml" | "xml" | "rdf" => Some(InputFormat::DamlXml),
            _ => None,
        }
    }

    /// Guesses the format from a file extension; anything unknown is COT.
    pub fn from_path(path: &Path) -> InputFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("daml" | "xml" | "rdf" | "owl") => InputFormat::DamlXml,
            _ => InputFormat::Cot,
        }
    }
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Import(#[from] ImportError),
    #[error("ontology has {} defect(s)", .0.len())]
    Invalid(Vec<OntologyDefect>),
    #[error("conceptual model violates {} invariant(s)", .0.len())]
    Internal(Vec<ModelDefect>),
}

#[derive(Debug, Clone)]
pub struct Loaded {
    pub ontology: Ontology,
    pub import: Option<ImportReport>,
}

pub fn load(bytes: &[u8], format: InputFormat, source_name: &str) -> Result<Loaded, PipelineError> {
    match format {
        InputFormat::Cot => {
            let text = String::from_utf8_lossy(bytes);
            Ok(Loaded {
                ontology: parse_cot_named(&text, source_name)?,
                import: None,
            })
        }
        InputFormat::DamlXml => {
            let report = import_damlxml(bytes)?;
            Ok(Loaded {
                ontology: report.ontology.clone(),
                import: Some(report),
            })
        }
    }
}

/// Validates, normalizes restriction axioms and merges subsumption cycles.
pub fn prepare(ont: &Ontology) -> Result<Collapsed, PipelineError> {
    let defects = validate_ontology(ont);
    if !defects.is_empty() {
        return Err(PipelineError::Invalid(defects));
    }
    Ok(collapse_equivalences(&ont.normalize_restrictions()))
}

#[derive(Debug, Clone)]
pub struct PipelineOutput {
    pub collapsed: Collapsed,
    pub bww: BwwReport,
    pub model: ConceptualModel,
    pub report: ValidationReport,
}

pub fn run_pipeline(
    ont: &Ontology,
    import: Option<&ImportReport>,
    cfg: &TransformConfig,
) -> Result<PipelineOutput, PipelineError> {
    let collapsed = prepare(ont)?;
    let bww = classify_ontology(&collapsed.ontology);
    let provenance = Provenance {
        cycles: collapsed.cycles.clone(),
        skipped: import.map(|r| r.skipped.clone()).unwrap_or_default(),
    };
    let (model, report) = transform_with(&collapsed.ontology, &bww, cfg, &provenance);
    let defects = check_model(&model);
    if !defects.is_empty() {
        return Err(PipelineError::Internal(defects));
    }
    Ok(PipelineOutput {
        collapsed,
        bww,
        model,
        report,
    })
}
