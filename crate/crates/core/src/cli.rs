//! Command-line front end. [`run`] returns the process exit code:
//! 0 success, 1 read/parse/import error, 2 ontology defects,
//! 3 internal invariant violation.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bww::classify_ontology;
use crate::cot::serialize_cot;
use crate::daml::{import_damlxml, ImportReport};
use crate::emit::{
    emit_bww_json, emit_dot, emit_model_json, emit_plantuml, emit_report, EmitFormat,
};
use crate::ontology::validate_ontology;
use crate::pipeline::{load, prepare, run_pipeline, InputFormat, PipelineError, PipelineOutput};
use crate::transform::TransformConfig;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_DEFECTS: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "ontocm",
    version,
    about = "Turn domain ontologies into conceptual data models"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Cot,
    Damlxml,
}

impl From<FormatArg> for InputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Cot => InputFormat::Cot,
            FormatArg::Damlxml => InputFormat::DamlXml,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TargetArg {
    Cot,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Ontology file (.cot, or .daml/.rdf/.xml/.owl for DAML+OIL RDF/XML)
    input: PathBuf,
    /// Input format; guessed from the extension when absent
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

impl InputArgs {
    fn format(&self) -> InputFormat {
        self.format
            .map(Into::into)
            .unwrap_or_else(|| InputFormat::from_path(&self.input))
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the full pipeline and write model artifacts
    Transform {
        #[command(flatten)]
        input: InputArgs,
        /// Output directory, or `-` for standard output (single format only)
        #[arg(long, default_value = ".")]
        out: String,
        /// Comma-separated subset of json, plantuml, dot, report, bww
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "json,plantuml,dot,report"
        )]
        emit: Vec<String>,
        /// Mark whole-part properties as composition or aggregation
        #[arg(long, value_enum, default_value = "on")]
        composition_heuristics: Switch,
        /// Leave individuals out of the model
        #[arg(long)]
        no_instances: bool,
    },
    /// Print the BWW classification of every class and property
    Classify {
        #[command(flatten)]
        input: InputArgs,
        /// Output directory; standard output when absent or `-`
        #[arg(long)]
        out: Option<String>,
    },
    /// Validate the ontology and list its defects
    Check {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Convert DAML+OIL RDF/XML into COT text
    Import {
        input: PathBuf,
        #[arg(long, value_enum)]
        to: TargetArg,
        /// Output file; standard output when absent or `-`
        #[arg(long)]
        out: Option<String>,
    },
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("model")
        .to_string()
}

fn read(path: &Path) -> Result<Vec<u8>, i32> {
    fs::read(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        EXIT_INPUT
    })
}

fn report_error(err: &PipelineError) -> i32 {
    match err {
        PipelineError::Parse(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
        PipelineError::Import(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
        PipelineError::Invalid(defects) => {
            for d in defects {
                eprintln!("defect: {d}");
            }
            eprintln!("{err}");
            EXIT_DEFECTS
        }
        PipelineError::Internal(defects) => {
            for d in defects {
                eprintln!("internal: {d}");
            }
            eprintln!("error: {err}");
            EXIT_INTERNAL
        }
    }
}

fn write_stdout(text: &str) -> Result<(), i32> {
    io::stdout().write_all(text.as_bytes()).map_err(|e| {
        eprintln!("error: cannot write to standard output: {e}");
        EXIT_INPUT
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), i32> {
    fs::write(path, text).map_err(|e| {
        eprintln!("error: cannot write {}: {e}", path.display());
        EXIT_INPUT
    })
}

fn describe_import(report: &ImportReport) {
    eprintln!(
        "imported {} element(s), skipped {}",
        report.translated_total(),
        report.skipped_total()
    );
    for s in &report.skipped {
        eprintln!(
            "  skipped {} x{} (first at {})",
            s.element, s.count, s.first_location
        );
    }
    for n in &report.notes {
        eprintln!("  note: {n}");
    }
}

fn render(format: EmitFormat, out: &PipelineOutput) -> String {
    match format {
        EmitFormat::ModelJson => emit_model_json(&out.model),
        EmitFormat::PlantUml => emit_plantuml(&out.model),
        EmitFormat::Dot => emit_dot(&out.model),
        EmitFormat::ReportMarkdown => emit_report(&out.report),
        EmitFormat::BwwJson => emit_bww_json(&out.bww),
    }
}

fn transform_command(
    input: &InputArgs,
    out: &str,
    emit: &[String],
    cfg: &TransformConfig,
) -> Result<(), i32> {
    let mut formats = Vec::new();
    for name in emit {
        match EmitFormat::from_name(name.trim()) {
            Some(f) if !formats.contains(&f) => formats.push(f),
            Some(_) => {}
            None => {
                eprintln!("error: unknown emit format `{name}` (expected json, plantuml, dot, report or bww)");
                return Err(EXIT_INPUT);
            }
        }
    }
    if formats.is_empty() {
        eprintln!("error: --emit needs at least one format");
        return Err(EXIT_INPUT);
    }
    if out == "-" && formats.len() != 1 {
        eprintln!("error: --out - needs exactly one --emit format");
        return Err(EXIT_INPUT);
    }

    let bytes = read(&input.input)?;
    let source = input.input.display().to_string();
    let loaded = load(&bytes, input.format(), &source).map_err(|e| report_error(&e))?;
    if let Some(r) = &loaded.import {
        describe_import(r);
    }
    let result = run_pipeline(&loaded.ontology, loaded.import.as_ref(), cfg)
        .map_err(|e| report_error(&e))?;
    eprintln!(
        "{}: {} entity type(s), {} relationship(s), {} generalization(s), {} constraint(s), {} flagged item(s)",
        result.model.name,
        result.model.entity_types.len(),
        result.model.relationships.len(),
        result.model.generalizations.len(),
        result.model.constraints.len(),
        result.report.items.len()
    );

    if out == "-" {
        return write_stdout(&render(formats[0], &result));
    }
    let dir = Path::new(out);
    fs::create_dir_all(dir).map_err(|e| {
        eprintln!("error: cannot create {}: {e}", dir.display());
        EXIT_INPUT
    })?;
    let stem = stem(&input.input);
    for f in formats {
        let path = dir.join(format!("{stem}.{}", f.extension()));
        write_file(&path, &render(f, &result))?;
        eprintln!("wrote {}", path.display());
    }
    Ok(())
}

fn classify_command(input: &InputArgs, out: Option<&str>) -> Result<(), i32> {
    let bytes = read(&input.input)?;
    let loaded = load(&bytes, input.format(), &input.input.display().to_string())
        .map_err(|e| report_error(&e))?;
    let collapsed = prepare(&loaded.ontology).map_err(|e| report_error(&e))?;
    let report = classify_ontology(&collapsed.ontology);
    if let Some(rate) = report.natural_kind_rate() {
        eprintln!(
            "{} class(es), natural-kind rate {:.1}%",
            report.concepts.len(),
            rate * 100.0
        );
    }
    let text = emit_bww_json(&report);
    match out {
        None | Some("-") => write_stdout(&text),
        Some(dir) => {
            let dir = Path::new(dir);
            fs::create_dir_all(dir).map_err(|e| {
                eprintln!("error: cannot create {}: {e}", dir.display());
                EXIT_INPUT
            })?;
            let path = dir.join(format!(
                "{}.{}",
                stem(&input.input),
                EmitFormat::BwwJson.extension()
            ));
            write_file(&path, &text)
        }
    }
}

fn check_command(input: &InputArgs) -> Result<(), i32> {
    let bytes = read(&input.input)?;
    let loaded = load(&bytes, input.format(), &input.input.display().to_string())
        .map_err(|e| report_error(&e))?;
    let defects = validate_ontology(&loaded.ontology);
    if defects.is_empty() {
        eprintln!("{}: no defects", input.input.display());
        return Ok(());
    }
    Err(report_error(&PipelineError::Invalid(defects)))
}

fn import_command(input: &Path, out: Option<&str>) -> Result<(), i32> {
    let bytes = read(input)?;
    let report = import_damlxml(&bytes).map_err(|e| {
        eprintln!("error: {}: {e}", input.display());
        EXIT_INPUT
    })?;
    describe_import(&report);
    let text = serialize_cot(&report.ontology);
    match out {
        None | Some("-") => write_stdout(&text),
        Some(path) => write_file(Path::new(path), &text),
    }
}

/// Parses `argv` (program name first) and runs one command.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let result = match &cli.command {
        Command::Transform {
            input,
            out,
            emit,
            composition_heuristics,
            no_instances,
        } => {
            let cfg = TransformConfig {
                composition_heuristics: matches!(composition_heuristics, Switch::On),
                include_instances: !no_instances,
                ..TransformConfig::default()
            };
            transform_command(input, out, emit, &cfg)
        }
        Command::Classify { input, out } => classify_command(input, out.as_deref()),
        Command::Check { input } => check_command(input),
        Command::Import {
            input,
            to: TargetArg::Cot,
            out,
        } => import_command(input, out.as_deref()),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(code) => code,
    }
}
