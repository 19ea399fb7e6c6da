//! Ontology to conceptual model transformation.
//!
//! Classes become entity types, datatype properties become attributes,
//! object properties and subsumption become relationships and
//! generalizations, restrictions and disjointness become multiplicities and
//! constraints, and whole-part properties are marked as composition or
//! aggregation candidates. Individuals are mapped last. Anything the
//! mapping cannot represent is reported as a [`FlaggedItem`] rather than an
//! error.

mod engine;

use std::fmt;

use crate::bww::BwwReport;
use crate::daml::SkippedElement;
use crate::model::ConceptualModel;
use crate::ontology::{CollapsedCycle, Ontology};

pub const DEFAULT_COMPOSITION_TOKENS: [&str; 5] =
    ["partof", "haspart", "contains", "componentof", "composedof"];

/// Tokens naming a property whose domain side is the part.
const PART_FIRST_TOKENS: [&str; 2] = ["partof", "componentof"];

/// Lowercases a property name and drops `-` and `_` separators.
pub fn normalize_token(name: &str) -> String {
    name.chars()
        .filter(|c| *c != '-' && *c != '_')
        .flat_map(char::to_lowercase)
        .collect()
}

pub fn part_is_domain_side(token: &str) -> bool {
    PART_FIRST_TOKENS.contains(&token)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformConfig {
    pub composition_heuristics: bool,
    pub composition_tokens: Vec<String>,
    pub include_instances: bool,
}

impl Default for TransformConfig {
    fn default() -> Self {
        TransformConfig {
            composition_heuristics: true,
            composition_tokens: DEFAULT_COMPOSITION_TOKENS
                .iter()
                .map(|t| t.to_string())
                .collect(),
            include_instances: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FlagKind {
    ExclusiveRelation,
    CompositionCandidate,
    AggregationCandidate,
    DroppedProperty,
    UnmappedConstruct,
    UnsatisfiableMultiplicity,
    EquivalenceCollapsed,
    MultiDomainProperty,
    NameCollision,
    ZeroPropertyEntity,
    /// A restriction target replaces a declared range that does not subsume it.
    RangeOverride,
    /// One model element produced by several kinds of ontology statement.
    ConstructOverload,
    /// Members of a union definition turned into subtypes of the defined class.
    UnionSpecialization,
}

impl FlagKind {
    /// Every kind, in report order.
    pub const ALL: [FlagKind; 13] = [
        FlagKind::ExclusiveRelation,
        FlagKind::CompositionCandidate,
        FlagKind::AggregationCandidate,
        FlagKind::DroppedProperty,
        FlagKind::UnmappedConstruct,
        FlagKind::UnsatisfiableMultiplicity,
        FlagKind::EquivalenceCollapsed,
        FlagKind::MultiDomainProperty,
        FlagKind::NameCollision,
        FlagKind::ZeroPropertyEntity,
        FlagKind::RangeOverride,
        FlagKind::ConstructOverload,
        FlagKind::UnionSpecialization,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FlagKind::ExclusiveRelation => "exclusiveRelation",
            FlagKind::CompositionCandidate => "compositionCandidate",
            FlagKind::AggregationCandidate => "aggregationCandidate",
            FlagKind::DroppedProperty => "droppedProperty",
            FlagKind::UnmappedConstruct => "unmappedConstruct",
            FlagKind::UnsatisfiableMultiplicity => "unsatisfiableMultiplicity",
            FlagKind::EquivalenceCollapsed => "equivalenceCollapsed",
            FlagKind::MultiDomainProperty => "multiDomainProperty",
            FlagKind::NameCollision => "nameCollision",
            FlagKind::ZeroPropertyEntity => "zeroPropertyEntity",
            FlagKind::RangeOverride => "rangeOverride",
            FlagKind::ConstructOverload => "constructOverload",
            FlagKind::UnionSpecialization => "unionSpecialization",
        }
    }

    /// What a domain specialist should do about an item of this kind.
    pub fn suggested_action(self) -> &'static str {
        match self {
            FlagKind::ExclusiveRelation => {
                "confirm the target is the only admissible type, or relax to a plain association"
            }
            FlagKind::CompositionCandidate => {
                "confirm whole/part semantics or demote to association"
            }
            FlagKind::AggregationCandidate => {
                "decide between aggregation and composition; the part is shared with other relationships"
            }
            FlagKind::DroppedProperty => "add the missing domain or range, or accept the omission",
            FlagKind::UnmappedConstruct => {
                "model the construct by hand or accept that it has no counterpart"
            }
            FlagKind::UnsatisfiableMultiplicity => {
                "reconcile the conflicting cardinality restrictions"
            }
            FlagKind::EquivalenceCollapsed => {
                "check that the merged classes really denote the same concept"
            }
            FlagKind::MultiDomainProperty => {
                "check whether the property means the same thing for every domain"
            }
            FlagKind::NameCollision => "choose distinct names for the renamed entity types",
            FlagKind::ZeroPropertyEntity => "add properties or drop the entity type",
            FlagKind::RangeOverride => {
                "check whether the restriction target or the declared range is correct"
            }
            FlagKind::ConstructOverload => "remove the redundant ontology statements",
            FlagKind::UnionSpecialization => {
                "confirm the union members are subtypes, or model the union another way"
            }
        }
    }
}

impl fmt::Display for FlagKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Mapping step that raised an item.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleTag {
    Classes,
    Attributes,
    Relationships,
    Constraints,
    Composition,
    Individuals,
    Diagnostics,
}

impl RuleTag {
    pub fn as_str(self) -> &'static str {
        match self {
            RuleTag::Classes => "classes to entity types",
            RuleTag::Attributes => "datatype properties to attributes",
            RuleTag::Relationships => "object properties and subsumption to relationships",
            RuleTag::Constraints => "restrictions and axioms to constraints",
            RuleTag::Composition => "whole-part detection",
            RuleTag::Individuals => "individuals to instances",
            RuleTag::Diagnostics => "excess and overload diagnostics",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlaggedItem {
    pub kind: FlagKind,
    pub subject: String,
    pub detail: String,
    pub rule: RuleTag,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub items: Vec<FlaggedItem>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn of_kind(&self, kind: FlagKind) -> impl Iterator<Item = &FlaggedItem> {
        self.items.iter().filter(move |i| i.kind == kind)
    }

    pub fn count(&self, kind: FlagKind) -> usize {
        self.of_kind(kind).count()
    }
}

/// What happened to the ontology before it reached the transformation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Provenance {
    pub cycles: Vec<CollapsedCycle>,
    pub skipped: Vec<SkippedElement>,
}

/// Maps a validated, cycle-free ontology to a conceptual model.
pub fn transform(
    ont: &Ontology,
    bww: &BwwReport,
    cfg: &TransformConfig,
) -> (ConceptualModel, ValidationReport) {
    transform_with(ont, bww, cfg, &Provenance::default())
}

/// [`transform`] with knowledge of collapsed cycles and skipped import elements,
/// which are reported as diagnostics.
pub fn transform_with(
    ont: &Ontology,
    bww: &BwwReport,
    cfg: &TransformConfig,
    provenance: &Provenance,
) -> (ConceptualModel, ValidationReport) {
    engine::Engine::new(ont, bww, cfg).run(provenance)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens() {
        assert_eq!(normalize_token("has_part"), "haspart");
        assert_eq!(normalize_token("Part-Of"), "partof");
        assert_eq!(normalize_token("hasName"), "hasname");
        assert!(part_is_domain_side("partof"));
        assert!(!part_is_domain_side("contains"));
    }

    #[test]
    fn kinds_are_listed_once() {
        let mut all = FlagKind::ALL.to_vec();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), FlagKind::ALL.len());
    }
}
