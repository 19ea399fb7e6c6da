//! Conceptual data model: entity types, relationships, attributes,
//! constraints and instances, plus well-formedness checks and a canonical
//! ordering for stable output.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::bww::BwwCategory;
use crate::ontology::{strongly_connected, Datatype};

pub fn entity_id(name: &str) -> String {
    format!("et:{name}")
}

pub fn relationship_id(property: &str, source: &str, target: &str) -> String {
    format!("rel:{property}:{source}:{target}")
}

/// Cardinality interval. `upper == None` means unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Multiplicity {
    pub lower: u32,
    #[serde(serialize_with = "ser_upper", deserialize_with = "de_upper")]
    pub upper: Option<u32>,
}

fn ser_upper<S: Serializer>(upper: &Option<u32>, s: S) -> Result<S::Ok, S::Error> {
    match upper {
        Some(n) => s.serialize_u32(*n),
        None => s.serialize_str("*"),
    }
}

fn de_upper<'de, D: Deserializer<'de>>(d: D) -> Result<Option<u32>, D::Error> {
    struct UpperVisitor;
    impl Visitor<'_> for UpperVisitor {
        type Value = Option<u32>;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("a non-negative integer or \"*\"")
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<Self::Value, E> {
            u32::try_from(v).map(Some).map_err(E::custom)
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<Self::Value, E> {
            u32::try_from(v).map(Some).map_err(E::custom)
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<Self::Value, E> {
            if v == "*" {
                Ok(None)
            } else {
                Err(E::invalid_value(de::Unexpected::Str(v), &self))
            }
        }
    }
    d.deserialize_any(UpperVisitor)
}

impl Multiplicity {
    pub const ANY: Multiplicity = Multiplicity {
        lower: 0,
        upper: None,
    };

    pub fn new(lower: u32, upper: Option<u32>) -> Self {
        Multiplicity { lower, upper }
    }

    pub fn exactly(n: u32) -> Self {
        Multiplicity::new(n, Some(n))
    }

    /// Interval intersection: the larger lower bound and the smaller upper bound.
    pub fn intersect(self, other: Multiplicity) -> Multiplicity {
        let upper = match (self.upper, other.upper) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, None) => a,
            (None, b) => b,
        };
        Multiplicity::new(self.lower.max(other.lower), upper)
    }

    pub fn is_satisfiable(self) -> bool {
        self.upper.is_none_or(|u| self.lower <= u)
    }
}

impl Default for Multiplicity {
    fn default() -> Self {
        Multiplicity::ANY
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.upper {
            Some(u) => write!(f, "{}..{}", self.lower, u),
            None => write!(f, "{}..*", self.lower),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum DefinitionKind {
    Primitive,
    Defined,
}

impl DefinitionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DefinitionKind::Primitive => "primitive",
            DefinitionKind::Defined => "defined",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Attribute {
    pub name: String,
    #[serde(with = "datatype_serde")]
    pub datatype: Datatype,
    pub multiplicity: Multiplicity,
    pub origin_property: String,
}

mod datatype_serde {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use crate::ontology::Datatype;

    pub fn serialize<S: Serializer>(dt: &Datatype, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(dt.as_str())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Datatype, D::Error> {
        let name = String::deserialize(d)?;
        Datatype::from_name(&name)
            .ok_or_else(|| de::Error::custom(format!("unknown datatype `{name}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EntityType {
    pub id: String,
    pub name: String,
    pub origin_class: String,
    pub bww: BwwCategory,
    pub definition_kind: DefinitionKind,
    pub attributes: Vec<Attribute>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum RelationshipKind {
    Association,
    Aggregation,
    Composition,
}

impl RelationshipKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RelationshipKind::Association => "association",
            RelationshipKind::Aggregation => "aggregation",
            RelationshipKind::Composition => "composition",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Relationship {
    pub id: String,
    pub name: String,
    pub source_id: String,
    pub target_id: String,
    pub source_mult: Multiplicity,
    pub target_mult: Multiplicity,
    pub exclusive: bool,
    pub kind: RelationshipKind,
    /// Whole-part relationships only: true when the source is the part.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub part_is_source: bool,
    pub group_id: Option<String>,
}

impl Relationship {
    /// `(whole, part)` endpoint ids.
    pub fn whole_and_part(&self) -> (&str, &str) {
        if self.part_is_source {
            (&self.target_id, &self.source_id)
        } else {
            (&self.source_id, &self.target_id)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Generalization {
    pub sub_id: String,
    pub super_id: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ConstraintKind {
    AndGroup,
    OrGroup,
    Disjoint,
}

impl ConstraintKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ConstraintKind::AndGroup => "andGroup",
            ConstraintKind::OrGroup => "orGroup",
            ConstraintKind::Disjoint => "disjoint",
        }
    }

    /// Notation used in diagrams: `and`, `or`, `disjoint`.
    pub fn label(self) -> &'static str {
        match self {
            ConstraintKind::AndGroup => "and",
            ConstraintKind::OrGroup => "or",
            ConstraintKind::Disjoint => "disjoint",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SemanticConstraint {
    pub id: String,
    pub kind: ConstraintKind,
    pub member_ids: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Instance {
    pub name: String,
    pub type_ids: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConceptualModel {
    pub name: String,
    pub entity_types: Vec<EntityType>,
    pub relationships: Vec<Relationship>,
    pub generalizations: Vec<Generalization>,
    pub constraints: Vec<SemanticConstraint>,
    pub instances: Vec<Instance>,
}

impl ConceptualModel {
    pub fn new(name: impl Into<String>) -> Self {
        ConceptualModel {
            name: name.into(),
            ..ConceptualModel::default()
        }
    }

    pub fn entity(&self, id: &str) -> Option<&EntityType> {
        self.entity_types.iter().find(|e| e.id == id)
    }

    pub fn entity_by_name(&self, name: &str) -> Option<&EntityType> {
        self.entity_types.iter().find(|e| e.name == name)
    }

    pub fn relationship(&self, id: &str) -> Option<&Relationship> {
        self.relationships.iter().find(|r| r.id == id)
    }

    /// Every relationship or attribute multiplicity whose lower bound exceeds
    /// its upper bound, as `(owner id, member name)`.
    pub fn inverted_multiplicities(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for e in &self.entity_types {
            for a in &e.attributes {
                if !a.multiplicity.is_satisfiable() {
                    out.push((e.id.clone(), a.name.clone()));
                }
            }
        }
        for r in &self.relationships {
            if !r.source_mult.is_satisfiable() || !r.target_mult.is_satisfiable() {
                out.push((r.id.clone(), r.name.clone()));
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModelDefectKind {
    DuplicateId,
    DuplicateAttribute,
    DanglingReference,
    SelfGeneralization,
    DuplicateGeneralization,
    GeneralizationCycle,
    MalformedConstraint,
    InconsistentGroup,
    UnexpectedKind,
}

impl ModelDefectKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ModelDefectKind::DuplicateId => "duplicate-id",
            ModelDefectKind::DuplicateAttribute => "duplicate-attribute",
            ModelDefectKind::DanglingReference => "dangling-reference",
            ModelDefectKind::SelfGeneralization => "self-generalization",
            ModelDefectKind::DuplicateGeneralization => "duplicate-generalization",
            ModelDefectKind::GeneralizationCycle => "generalization-cycle",
            ModelDefectKind::MalformedConstraint => "malformed-constraint",
            ModelDefectKind::InconsistentGroup => "inconsistent-group",
            ModelDefectKind::UnexpectedKind => "unexpected-kind",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelDefect {
    pub kind: ModelDefectKind,
    pub subject: String,
    pub detail: String,
}

impl fmt::Display for ModelDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {}",
            self.kind.as_str(),
            self.subject,
            self.detail
        )
    }
}

struct Checker {
    defects: Vec<ModelDefect>,
}

impl Checker {
    fn push(&mut self, kind: ModelDefectKind, subject: &str, detail: impl Into<String>) {
        self.defects.push(ModelDefect {
            kind,
            subject: subject.to_string(),
            detail: detail.into(),
        });
    }
}

/// Lists every violated well-formedness rule; empty means well-formed.
///
/// Multiplicities with lower > upper are not defects here: the
/// transformation keeps them and reports them separately.
pub fn check_model(cm: &ConceptualModel) -> Vec<ModelDefect> {
    use ModelDefectKind::*;
    let mut c = Checker {
        defects: Vec::new(),
    };

    let mut ids = HashSet::new();
    let all_ids = cm
        .entity_types
        .iter()
        .map(|e| &e.id)
        .chain(cm.relationships.iter().map(|r| &r.id))
        .chain(cm.constraints.iter().map(|k| &k.id));
    for id in all_ids {
        if !ids.insert(id.as_str()) {
            c.push(DuplicateId, id, "identifier used more than once");
        }
    }
    let entities: HashMap<&str, usize> = cm
        .entity_types
        .iter()
        .enumerate()
        .map(|(i, e)| (e.id.as_str(), i))
        .collect();
    let relationships: HashSet<&str> = cm.relationships.iter().map(|r| r.id.as_str()).collect();
    let constraints: HashMap<&str, &SemanticConstraint> =
        cm.constraints.iter().map(|k| (k.id.as_str(), k)).collect();

    for e in &cm.entity_types {
        let mut names = HashSet::new();
        for a in &e.attributes {
            if !names.insert(a.name.as_str()) {
                c.push(
                    DuplicateAttribute,
                    &e.id,
                    format!("attribute `{}` repeated", a.name),
                );
            }
        }
    }

    for r in &cm.relationships {
        for (end, id) in [("source", &r.source_id), ("target", &r.target_id)] {
            if !entities.contains_key(id.as_str()) {
                c.push(
                    DanglingReference,
                    &r.id,
                    format!("{end} `{id}` is not an entity type"),
                );
            }
        }
        if let Some(g) = &r.group_id {
            match constraints.get(g.as_str()) {
                None => c.push(
                    DanglingReference,
                    &r.id,
                    format!("group `{g}` does not exist"),
                ),
                Some(k) if k.kind == ConstraintKind::Disjoint => c.push(
                    InconsistentGroup,
                    &r.id,
                    format!("group `{g}` is a disjointness constraint"),
                ),
                Some(k) if !k.member_ids.contains(&r.id) => c.push(
                    InconsistentGroup,
                    &r.id,
                    format!("group `{g}` does not list it"),
                ),
                Some(_) => {}
            }
        }
        if r.part_is_source && r.kind == RelationshipKind::Association {
            c.push(
                UnexpectedKind,
                &r.id,
                "plain association marked with a part side",
            );
        }
    }

    let mut adjacency = vec![Vec::new(); cm.entity_types.len()];
    let mut seen = HashSet::new();
    for g in &cm.generalizations {
        let subject = format!("{} -> {}", g.sub_id, g.super_id);
        if g.sub_id == g.super_id {
            c.push(
                SelfGeneralization,
                &subject,
                "entity type generalizes itself",
            );
            continue;
        }
        if !seen.insert(g) {
            c.push(
                DuplicateGeneralization,
                &subject,
                "edge listed more than once",
            );
        }
        match (
            entities.get(g.sub_id.as_str()),
            entities.get(g.super_id.as_str()),
        ) {
            (Some(&a), Some(&b)) => adjacency[a].push(b),
            _ => c.push(
                DanglingReference,
                &subject,
                "endpoint is not an entity type",
            ),
        }
    }
    for component in strongly_connected(&adjacency) {
        if component.len() > 1 {
            let mut names: Vec<&str> = component
                .iter()
                .map(|&i| cm.entity_types[i].id.as_str())
                .collect();
            names.sort_unstable();
            c.push(
                GeneralizationCycle,
                names[0],
                format!("cycle through {}", names.join(", ")),
            );
        }
    }

    for k in &cm.constraints {
        if k.member_ids.len() < 2 {
            c.push(MalformedConstraint, &k.id, "fewer than two members");
        }
        let distinct: BTreeSet<&String> = k.member_ids.iter().collect();
        if distinct.len() != k.member_ids.len() {
            c.push(MalformedConstraint, &k.id, "repeated member");
        }
        let in_rels = k
            .member_ids
            .iter()
            .filter(|m| relationships.contains(m.as_str()))
            .count();
        let in_ents = k
            .member_ids
            .iter()
            .filter(|m| entities.contains_key(m.as_str()))
            .count();
        for m in &k.member_ids {
            if !relationships.contains(m.as_str()) && !entities.contains_key(m.as_str()) {
                c.push(
                    DanglingReference,
                    &k.id,
                    format!("member `{m}` does not exist"),
                );
            }
        }
        let homogeneous = match k.kind {
            ConstraintKind::Disjoint => in_rels == 0,
            _ => in_rels == 0 || in_ents == 0,
        };
        if !homogeneous {
            c.push(
                MalformedConstraint,
                &k.id,
                match k.kind {
                    ConstraintKind::Disjoint => "disjointness between non-entity members",
                    _ => "group mixes relationships and entity types",
                },
            );
        }
    }

    for i in &cm.instances {
        for t in &i.type_ids {
            if !entities.contains_key(t.as_str()) {
                c.push(
                    DanglingReference,
                    &i.name,
                    format!("type `{t}` is not an entity type"),
                );
            }
        }
    }
    c.defects
}

/// Sorts every collection of the model into its canonical order. Idempotent;
/// never changes membership.
pub fn canonical_order(cm: &ConceptualModel) -> ConceptualModel {
    let mut out = cm.clone();
    for e in &mut out.entity_types {
        e.attributes.sort_by(|a, b| a.name.cmp(&b.name));
    }
    out.entity_types
        .sort_by(|a, b| (&a.name, &a.id).cmp(&(&b.name, &b.id)));
    out.relationships.sort_by(|a, b| {
        (&a.name, &a.source_id, &a.target_id, &a.id).cmp(&(
            &b.name,
            &b.source_id,
            &b.target_id,
            &b.id,
        ))
    });
    out.generalizations.sort();
    for k in &mut out.constraints {
        k.member_ids.sort();
    }
    out.constraints.sort_by(|a, b| a.id.cmp(&b.id));
    for i in &mut out.instances {
        i.type_ids.sort();
    }
    out.instances
        .sort_by(|a, b| (&a.name, &a.type_ids).cmp(&(&b.name, &b.type_ids)));
    out
}

/// Count of relationships touching each entity id, endpoints counted once
/// per relationship.
pub fn relationship_census(cm: &ConceptualModel) -> BTreeMap<&str, usize> {
    let mut census = BTreeMap::new();
    for r in &cm.relationships {
        *census.entry(r.source_id.as_str()).or_default() += 1;
        if r.target_id != r.source_id {
            *census.entry(r.target_id.as_str()).or_default() += 1;
        }
    }
    census
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entity(name: &str) -> EntityType {
        EntityType {
            id: entity_id(name),
            name: name.to_string(),
            origin_class: name.to_string(),
            bww: BwwCategory::ThingSet,
            definition_kind: DefinitionKind::Primitive,
            attributes: Vec::new(),
        }
    }

    fn rel(name: &str, s: &str, t: &str) -> Relationship {
        Relationship {
            id: relationship_id(name, s, t),
            name: name.to_string(),
            source_id: entity_id(s),
            target_id: entity_id(t),
            source_mult: Multiplicity::ANY,
            target_mult: Multiplicity::ANY,
            exclusive: false,
            kind: RelationshipKind::Association,
            part_is_source: false,
            group_id: None,
        }
    }

    fn gen(sub: &str, sup: &str) -> Generalization {
        Generalization {
            sub_id: entity_id(sub),
            super_id: entity_id(sup),
        }
    }

    #[test]
    fn empty_model_is_well_formed() {
        assert!(check_model(&ConceptualModel::new("m")).is_empty());
    }

    #[test]
    fn unknown_target() {
        let mut cm = ConceptualModel::new("m");
        cm.entity_types.push(entity("Protein"));
        cm.relationships.push(rel("binds", "Protein", "DNA"));
        let d = check_model(&cm);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].kind, ModelDefectKind::DanglingReference);
    }

    #[test]
    fn two_cycle_is_one_defect() {
        let mut cm = ConceptualModel::new("m");
        cm.entity_types.push(entity("A"));
        cm.entity_types.push(entity("B"));
        cm.generalizations.push(gen("A", "B"));
        cm.generalizations.push(gen("B", "A"));
        let d = check_model(&cm);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].kind, ModelDefectKind::GeneralizationCycle);
    }

    #[test]
    fn group_must_list_its_members() {
        let mut cm = ConceptualModel::new("m");
        for n in ["P", "D", "R"] {
            cm.entity_types.push(entity(n));
        }
        let mut a = rel("binds", "P", "D");
        a.group_id = Some("grp:or:P:binds:1".into());
        let b = rel("binds", "P", "R");
        cm.constraints.push(SemanticConstraint {
            id: "grp:or:P:binds:1".into(),
            kind: ConstraintKind::OrGroup,
            member_ids: vec![b.id.clone(), "et:D".into()],
        });
        cm.relationships.push(a);
        cm.relationships.push(b);
        let kinds: Vec<_> = check_model(&cm).into_iter().map(|d| d.kind).collect();
        assert_eq!(
            kinds,
            vec![
                ModelDefectKind::InconsistentGroup,
                ModelDefectKind::MalformedConstraint
            ]
        );
    }

    #[test]
    fn canonical_order_sorts_and_is_idempotent() {
        let mut cm = ConceptualModel::new("m");
        cm.entity_types.push(entity("Protein"));
        cm.entity_types.push(entity("DNA"));
        let once = canonical_order(&cm);
        let names: Vec<_> = once.entity_types.iter().map(|e| e.name.as_str()).collect();
        assert_eq!(names, vec!["DNA", "Protein"]);
        assert_eq!(canonical_order(&once), once);
    }

    #[test]
    fn multiplicity_intersection() {
        let min1 = Multiplicity::new(1, None);
        let max4 = Multiplicity::new(0, Some(4));
        assert_eq!(min1.intersect(max4), Multiplicity::new(1, Some(4)));
        let bad = Multiplicity::new(5, None).intersect(max4);
        assert_eq!(bad, Multiplicity::new(5, Some(4)));
        assert!(!bad.is_satisfiable());
        assert_eq!(bad.to_string(), "5..4");
    }

    #[test]
    fn multiplicity_json() {
        let m = Multiplicity::ANY;
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"lower":0,"upper":"*"}"#);
        assert_eq!(serde_json::from_str::<Multiplicity>(&s).unwrap(), m);
        let m = Multiplicity::exactly(3);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(serde_json::from_str::<Multiplicity>(&s).unwrap(), m);
        assert!(serde_json::from_str::<Multiplicity>(r#"{"lower":0,"upper":"n"}"#).is_err());
    }
}
