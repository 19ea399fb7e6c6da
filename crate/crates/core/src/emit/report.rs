use std::fmt::Write;

use crate::transform::{FlagKind, FlaggedItem, ValidationReport};

const HEADER: &str = "# Validation report\n";

/// Markdown listing of flagged items, one section per kind in
/// [`FlagKind::ALL`] order. An empty report renders as the header alone.
pub fn emit_report(report: &ValidationReport) -> String {
    let mut out = String::from(HEADER);
    for kind in FlagKind::ALL {
        let mut items: Vec<&FlaggedItem> = report.of_kind(kind).collect();
        if items.is_empty() {
            continue;
        }
        items.sort_by(|a, b| (&a.subject, &a.detail, a.rule).cmp(&(&b.subject, &b.detail, b.rule)));
        let _ = write!(
            out,
            "\n## {} ({})\n\nSuggested action: {}.\n\n",
            kind.as_str(),
            items.len(),
            kind.suggested_action()
        );
        for item in items {
            let _ = writeln!(
                out,
                "- `{}`: {} (rule: {})",
                item.subject,
                item.detail,
                item.rule.as_str()
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::RuleTag;

    fn item(kind: FlagKind, subject: &str) -> FlaggedItem {
        FlaggedItem {
            kind,
            subject: subject.into(),
            detail: "d".into(),
            rule: RuleTag::Constraints,
        }
    }

    #[test]
    fn empty_report_is_header_only() {
        assert_eq!(emit_report(&ValidationReport::default()), HEADER);
    }

    #[test]
    fn one_exclusive_relation() {
        let report = ValidationReport {
            items: vec![item(FlagKind::ExclusiveRelation, "rel:binds:Protein:DNA")],
        };
        let text = emit_report(&report);
        assert_eq!(text.matches("\n## ").count(), 1);
        let bullets: Vec<_> = text.lines().filter(|l| l.starts_with("- ")).collect();
        assert_eq!(bullets.len(), 1);
        assert!(bullets[0].contains("rel:binds:Protein:DNA"));
    }

    #[test]
    fn sections_follow_fixed_order() {
        let report = ValidationReport {
            items: vec![
                item(FlagKind::ZeroPropertyEntity, "et:A"),
                item(FlagKind::DroppedProperty, "p"),
                item(FlagKind::ExclusiveRelation, "rel:p:A:B"),
            ],
        };
        let headings: Vec<_> = emit_report(&report)
            .lines()
            .filter(|l| l.starts_with("## "))
            .map(str::to_string)
            .collect();
        assert_eq!(
            headings,
            vec![
                "## exclusiveRelation (1)",
                "## droppedProperty (1)",
                "## zeroPropertyEntity (1)"
            ]
        );
    }
}
