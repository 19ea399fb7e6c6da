//! Classification of ontology classes and properties into
//! Bunge-Wand-Weber structural constructs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::OntologyError;
use crate::ontology::{Axiom, Hierarchy, Ontology, PropertyCategory, PropertyDefinition};

/// Structural category of a class, ordered by how much structure it carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum BwwCategory {
    /// No property at all.
    ThingSet,
    /// Exactly one property.
    BwwClass,
    /// Two or more properties and no laws.
    Kind,
    /// Two or more properties restricted by at least one law.
    NaturalKind,
}

impl BwwCategory {
    pub fn as_str(self) -> &'static str {
        match self {
            BwwCategory::ThingSet => "thingSet",
            BwwCategory::BwwClass => "bwwClass",
            BwwCategory::Kind => "kind",
            BwwCategory::NaturalKind => "naturalKind",
        }
    }

    pub fn from_counts(property_count: usize, law_count: usize) -> BwwCategory {
        match (property_count, law_count) {
            (0, _) => BwwCategory::ThingSet,
            (1, _) => BwwCategory::BwwClass,
            (_, 0) => BwwCategory::Kind,
            _ => BwwCategory::NaturalKind,
        }
    }
}

impl fmt::Display for BwwCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum PropertyNature {
    Intrinsic,
    Mutual,
}

impl PropertyNature {
    pub fn as_str(self) -> &'static str {
        match self {
            PropertyNature::Intrinsic => "intrinsic",
            PropertyNature::Mutual => "mutual",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConceptEntry {
    pub category: BwwCategory,
    pub property_count: usize,
    pub law_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct BwwReport {
    pub concepts: BTreeMap<String, ConceptEntry>,
    pub properties: BTreeMap<String, PropertyNature>,
    pub notes: Vec<String>,
}

impl BwwReport {
    pub fn category(&self, class: &str) -> Option<BwwCategory> {
        self.concepts.get(class).map(|e| e.category)
    }

    /// Share of classes classified as natural kinds, or `None` for an empty report.
    pub fn natural_kind_rate(&self) -> Option<f64> {
        if self.concepts.is_empty() {
            return None;
        }
        let natural = self
            .concepts
            .values()
            .filter(|e| e.category == BwwCategory::NaturalKind)
            .count();
        Some(natural as f64 / self.concepts.len() as f64)
    }
}

pub fn classify_property(prop: &PropertyDefinition) -> PropertyNature {
    match prop.category {
        PropertyCategory::Datatype => PropertyNature::Intrinsic,
        PropertyCategory::Object => PropertyNature::Mutual,
    }
}

fn disjoint_counts(ont: &Ontology) -> BTreeMap<&str, usize> {
    let mut counts = BTreeMap::new();
    for axiom in &ont.axioms {
        if let Axiom::DisjointWith { first, second } = axiom {
            *counts.entry(first.as_str()).or_default() += 1;
            if second != first {
                *counts.entry(second.as_str()).or_default() += 1;
            }
        }
    }
    counts
}

fn concept_entry(
    hierarchy: &Hierarchy,
    disjoint: &BTreeMap<&str, usize>,
    class: &str,
) -> Result<ConceptEntry, OntologyError> {
    let property_count = hierarchy.property_count(class)?;
    let laws: BTreeSet<_> = hierarchy
        .effective_restrictions(class)?
        .into_iter()
        .map(|(r, _)| r)
        .collect();
    let law_count = laws.len() + disjoint.get(class).copied().unwrap_or(0);
    Ok(ConceptEntry {
        category: BwwCategory::from_counts(property_count, law_count),
        property_count,
        law_count,
    })
}

/// Category, distinct property count and law count of one class.
///
/// Properties and restrictions inherited through asserted superclasses
/// count. Laws are the distinct restrictions reaching the class plus the
/// disjointness axioms that mention it.
pub fn classify_concept(
    ont: &Ontology,
    class: &str,
) -> Result<(BwwCategory, usize, usize), OntologyError> {
    let e = concept_entry(&Hierarchy::new(ont), &disjoint_counts(ont), class)?;
    Ok((e.category, e.property_count, e.law_count))
}

pub fn classify_ontology(ont: &Ontology) -> BwwReport {
    let hierarchy = Hierarchy::new(ont);
    let disjoint = disjoint_counts(ont);
    let mut report = BwwReport::default();
    for class in &ont.classes {
        let entry = concept_entry(&hierarchy, &disjoint, &class.name)
            .expect("declared classes are known to the hierarchy");
        if entry.property_count == 1 && entry.law_count > 0 {
            report.notes.push(format!(
                "{} has {} law(s) but a single property; classified as bwwClass",
                class.name, entry.law_count
            ));
        }
        report.concepts.insert(class.name.clone(), entry);
    }
    for prop in &ont.properties {
        report
            .properties
            .insert(prop.name.clone(), classify_property(prop));
    }
    report
}
