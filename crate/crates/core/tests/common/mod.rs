#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use proptest::collection::vec;
use proptest::prelude::*;
use proptest::sample::subsequence;

use ontocm::bww::BwwCategory;
use ontocm::model::{check_model, RelationshipKind};
use ontocm::ontology::{
    validate_ontology, Axiom, ClassDefinition, ClassExpression, ClassKind, Individual, Ontology,
    PropertyCategory, PropertyDefinition, Restriction, RestrictionFlavor,
};
use ontocm::pipeline::{run_pipeline, PipelineOutput};
use ontocm::transform::{FlagKind, TransformConfig};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

const CLASS_POOL: [&str; 10] = [
    "Protein", "DNA", "Gene", "Enzyme", "Cell", "protein", "Reaction", "Motif", "Organism", "RNA",
];
const PROPERTY_POOL: [&str; 10] = [
    "binds",
    "has_part",
    "part-of",
    "contains",
    "name",
    "length",
    "regulates",
    "encodes",
    "componentOf",
    "weight",
];
const DATATYPES: [&str; 5] = ["string", "integer", "decimal", "boolean", "date"];

type PropertyPlan = (bool, Vec<u8>, Option<u8>, u8);
type RestrictionPlan = (u8, u8, u8, u32, u8, Vec<u8>);
type DefinitionPlan = (u8, bool, Vec<u8>, bool);

#[derive(Debug, Clone)]
struct Plan {
    classes: Vec<&'static str>,
    properties: Vec<&'static str>,
    property_plans: Vec<PropertyPlan>,
    subclass: Vec<(u8, u8)>,
    axioms: Vec<(u8, u8, u8)>,
    restrictions: Vec<RestrictionPlan>,
    definitions: Vec<DefinitionPlan>,
    individuals: Vec<(u8, Vec<u8>, bool)>,
}

fn pick<T>(items: &[T], i: u8) -> &T {
    &items[i as usize % items.len()]
}

fn named_members(classes: &[&str], idx: &[u8]) -> Vec<ClassExpression> {
    let mut names: Vec<&str> = idx.iter().map(|i| *pick(classes, *i)).collect();
    names.sort_unstable();
    names.dedup();
    names.into_iter().map(ClassExpression::named).collect()
}

fn group(union: bool, members: Vec<ClassExpression>) -> ClassExpression {
    match members.len() {
        1 => members.into_iter().next().unwrap(),
        _ if union => ClassExpression::Union(members),
        _ => ClassExpression::Intersection(members),
    }
}

fn restriction(plan: &Plan, props: &[PropertyDefinition], r: &RestrictionPlan) -> Restriction {
    let (_, p, flavor, k, target_kind, members) = r;
    let prop = pick(props, *p);
    let flavor = match flavor % 5 {
        0 | 1 => {
            let target = if prop.category == PropertyCategory::Datatype {
                ClassExpression::named(*pick(&DATATYPES, *target_kind))
            } else {
                match target_kind % 6 {
                    0..=2 => ClassExpression::named(*pick(&plan.classes, members[0])),
                    3 => group(false, named_members(&plan.classes, members)),
                    4 => group(true, named_members(&plan.classes, members)),
                    _ => ClassExpression::complement(ClassExpression::named(*pick(
                        &plan.classes,
                        members[0],
                    ))),
                }
            };
            if flavor % 5 == 0 {
                RestrictionFlavor::HasClass(target)
            } else {
                RestrictionFlavor::ToClass(target)
            }
        }
        2 => RestrictionFlavor::Cardinality(*k),
        3 => RestrictionFlavor::MinCardinality(*k),
        _ => RestrictionFlavor::MaxCardinality(*k),
    };
    Restriction::new(prop.name.clone(), flavor)
}

fn build(plan: Plan) -> Ontology {
    let mut ont = Ontology::new("generated");
    for c in &plan.classes {
        ont.classes.push(ClassDefinition::primitive(*c));
    }
    for (name, (object, domains, range, dt)) in plan.properties.iter().zip(&plan.property_plans) {
        let mut p = if *object {
            PropertyDefinition::object(*name)
        } else {
            PropertyDefinition::datatype(*name)
        };
        for d in domains {
            let d = pick(&plan.classes, *d).to_string();
            if !p.domains.contains(&d) {
                p.domains.push(d);
            }
        }
        p.range = match (object, range) {
            (true, Some(r)) => Some(pick(&plan.classes, *r).to_string()),
            (false, Some(_)) => Some(pick(&DATATYPES, *dt).to_string()),
            (_, None) => None,
        };
        ont.properties.push(p);
    }
    for (a, b) in &plan.subclass {
        ont.axioms.push(Axiom::subclass(
            *pick(&plan.classes, *a),
            ClassExpression::named(*pick(&plan.classes, *b)),
        ));
    }
    for (kind, a, b) in &plan.axioms {
        let (a, b) = (*pick(&plan.classes, *a), *pick(&plan.classes, *b));
        ont.axioms.push(if kind % 2 == 0 {
            Axiom::same_class(a, ClassExpression::named(b))
        } else {
            Axiom::disjoint(a, b)
        });
    }
    let mut budget = 6usize;
    if !ont.properties.is_empty() {
        for r in &plan.restrictions {
            if budget == 0 {
                break;
            }
            budget -= 1;
            let built = restriction(&plan, &ont.properties, r);
            let class = pick(&plan.classes, r.0).to_string();
            let c = ont.classes.iter_mut().find(|c| c.name == class).unwrap();
            if !c.local_restrictions.contains(&built) {
                c.local_restrictions.push(built);
            }
        }
    }
    for (class, union, members, with_restriction) in &plan.definitions {
        let class = pick(&plan.classes, *class).to_string();
        let mut parts = named_members(&plan.classes, members);
        parts.retain(|m| m.as_named() != Some(class.as_str()));
        if !union && *with_restriction && budget > 0 && !ont.properties.is_empty() {
            if let Some(r) = plan.restrictions.first() {
                budget -= 1;
                parts.push(ClassExpression::restriction(restriction(
                    &plan,
                    &ont.properties,
                    r,
                )));
            }
        }
        if parts.len() < 2 {
            continue;
        }
        let def = if *union {
            ClassExpression::Union(parts)
        } else {
            ClassExpression::Intersection(parts)
        };
        let c = ont.classes.iter_mut().find(|c| c.name == class).unwrap();
        if c.definition.is_none() {
            c.kind = ClassKind::Defined;
            c.definition = Some(def);
        }
    }
    for (i, (_, types, anonymous)) in plan.individuals.iter().enumerate() {
        let mut ty = group(false, named_members(&plan.classes, types));
        if *anonymous && !ont.properties.is_empty() {
            if let Some(r) = plan.restrictions.first() {
                ty = ClassExpression::restriction(restriction(&plan, &ont.properties, r));
            }
        }
        ont.individuals
            .push(Individual::new(format!("i{i}"), vec![ty]));
    }
    ont
}

/// Valid ontologies with at most 8 classes, 6 properties and 6 restrictions.
pub fn arb_ontology() -> impl Strategy<Value = Ontology> {
    (1usize..=8, 0usize..=6)
        .prop_flat_map(|(nc, np)| {
            (
                subsequence(CLASS_POOL.to_vec(), nc),
                subsequence(PROPERTY_POOL.to_vec(), np),
                vec(
                    (
                        any::<bool>(),
                        vec(any::<u8>(), 0..3),
                        proptest::option::of(any::<u8>()),
                        any::<u8>(),
                    ),
                    np,
                ),
                vec((any::<u8>(), any::<u8>()), 0..6),
                vec((any::<u8>(), any::<u8>(), any::<u8>()), 0..3),
                vec(
                    (
                        any::<u8>(),
                        any::<u8>(),
                        any::<u8>(),
                        0u32..4,
                        any::<u8>(),
                        vec(any::<u8>(), 1..3),
                    ),
                    0..=6,
                ),
                vec(
                    (
                        any::<u8>(),
                        any::<bool>(),
                        vec(any::<u8>(), 1..4),
                        any::<bool>(),
                    ),
                    0..2,
                ),
                vec(
                    (
                        any::<u8>(),
                        vec(any::<u8>(), 1..3),
                        proptest::bool::weighted(0.2),
                    ),
                    0..3,
                ),
            )
        })
        .prop_map(
            |(
                classes,
                properties,
                property_plans,
                subclass,
                axioms,
                restrictions,
                definitions,
                individuals,
            )| {
                build(Plan {
                    classes,
                    properties,
                    property_plans,
                    subclass,
                    axioms,
                    restrictions,
                    definitions,
                    individuals,
                })
            },
        )
        .prop_filter("generated ontology must validate", |o| {
            validate_ontology(o).is_empty()
        })
}

/// Brute-force reference for class structure: asserted superclass edges,
/// restrictions and properties recomputed from the raw statements.
pub struct Oracle<'o> {
    ont: &'o Ontology,
    supers: BTreeMap<&'o str, BTreeSet<&'o str>>,
    restrictions: BTreeMap<&'o str, BTreeSet<&'o Restriction>>,
}

fn flatten<'o>(
    expr: &'o ClassExpression,
    named: &mut Vec<&'o str>,
    restr: &mut Vec<&'o Restriction>,
) {
    match expr {
        ClassExpression::Named(n) => named.push(n),
        ClassExpression::Restriction(r) => restr.push(r),
        ClassExpression::Intersection(ms) => {
            for m in ms {
                flatten(m, named, restr);
            }
        }
        _ => {}
    }
}

impl<'o> Oracle<'o> {
    pub fn new(ont: &'o Ontology) -> Self {
        let mut supers: BTreeMap<&str, BTreeSet<&str>> = BTreeMap::new();
        let mut restrictions: BTreeMap<&str, BTreeSet<&Restriction>> = BTreeMap::new();
        let mut add = |class: &'o str, expr: &'o ClassExpression| {
            let (mut named, mut restr) = (Vec::new(), Vec::new());
            flatten(expr, &mut named, &mut restr);
            supers.entry(class).or_default().extend(named);
            restrictions.entry(class).or_default().extend(restr);
        };
        for c in &ont.classes {
            match &c.definition {
                Some(ClassExpression::Union(_)) | None => {}
                Some(def) => add(&c.name, def),
            }
        }
        for a in &ont.axioms {
            match a {
                Axiom::SubClassOf { sub, sup } => add(sub, sup),
                Axiom::SameClassAs { class, same } => add(class, same),
                Axiom::DisjointWith { .. } => {}
            }
        }
        for c in &ont.classes {
            if let Some(ClassExpression::Union(ms)) = &c.definition {
                for m in ms {
                    if let ClassExpression::Named(n) = m {
                        supers.entry(n).or_default().insert(&c.name);
                    }
                }
            }
            restrictions
                .entry(&c.name)
                .or_default()
                .extend(c.local_restrictions.iter());
        }
        Oracle {
            ont,
            supers,
            restrictions,
        }
    }

    /// The class and all its transitive superclasses.
    pub fn up_set(&self, class: &'o str) -> BTreeSet<&'o str> {
        let mut set = BTreeSet::from([class]);
        loop {
            let next: BTreeSet<&str> = set
                .iter()
                .flat_map(|c| self.supers.get(c).into_iter().flatten().copied())
                .chain(set.iter().copied())
                .collect();
            if next.len() == set.len() {
                return set;
            }
            set = next;
        }
    }

    pub fn effective_restrictions(&self, class: &'o str) -> BTreeSet<&'o Restriction> {
        self.up_set(class)
            .into_iter()
            .flat_map(|c| self.restrictions.get(c).into_iter().flatten().copied())
            .collect()
    }

    pub fn properties(&self, class: &'o str) -> BTreeSet<&'o str> {
        let up = self.up_set(class);
        let mut out: BTreeSet<&str> = self
            .ont
            .properties
            .iter()
            .filter(|p| p.domains.iter().any(|d| up.contains(d.as_str())))
            .map(|p| p.name.as_str())
            .collect();
        out.extend(
            self.effective_restrictions(class)
                .into_iter()
                .map(|r| r.on_property.as_str()),
        );
        out
    }

    pub fn classify(&self, class: &'o str) -> (BwwCategory, usize, usize) {
        let props = self.properties(class).len();
        let disjoint = self
            .ont
            .axioms
            .iter()
            .filter(|a| matches!(a, Axiom::DisjointWith { first, second } if first == class || second == class))
            .count();
        let laws = self.effective_restrictions(class).len() + disjoint;
        let category = if props == 0 {
            BwwCategory::ThingSet
        } else if props == 1 {
            BwwCategory::BwwClass
        } else if laws == 0 {
            BwwCategory::Kind
        } else {
            BwwCategory::NaturalKind
        };
        (category, props, laws)
    }
}

/// Checks every structural invariant of one pipeline run. Returns the
/// first violation as text.
pub fn check_invariants(out: &PipelineOutput) -> Result<(), String> {
    let ont = &out.collapsed.ontology;
    let model = &out.model;

    let defects = check_model(model);
    if !defects.is_empty() {
        return Err(format!("check_model: {:?}", defects));
    }

    let classes: BTreeSet<&str> = ont.classes.iter().map(|c| c.name.as_str()).collect();
    let origins: BTreeSet<&str> = model
        .entity_types
        .iter()
        .map(|e| e.origin_class.as_str())
        .collect();
    if model.entity_types.len() != ont.classes.len() || origins != classes {
        return Err("class bijection".into());
    }
    let names: BTreeSet<String> = model
        .entity_types
        .iter()
        .map(|e| e.name.to_lowercase())
        .collect();
    if names.len() != model.entity_types.len() {
        return Err("entity names collide".into());
    }

    let origin_of = |id: &str| {
        model
            .entity_types
            .iter()
            .find(|e| e.id == id)
            .map(|e| e.origin_class.as_str())
            .unwrap()
    };

    for p in &ont.properties {
        let represented = model
            .entity_types
            .iter()
            .any(|e| e.attributes.iter().any(|a| a.origin_property == p.name))
            || model.relationships.iter().any(|r| r.name == p.name);
        let dropped = out
            .report
            .of_kind(FlagKind::DroppedProperty)
            .filter(|i| i.subject == p.name)
            .count();
        if represented == (dropped == 1) || dropped > 1 {
            return Err(format!(
                "conservation of {}: represented={represented}, dropped flags={dropped}",
                p.name
            ));
        }
    }

    for e in &model.entity_types {
        for a in &e.attributes {
            let prop = ont
                .property(&a.origin_property)
                .ok_or("attribute without property")?;
            if prop.category != PropertyCategory::Datatype {
                return Err(format!("attribute {} from object property", a.name));
            }
        }
    }

    let oracle = Oracle::new(ont);
    for r in &model.relationships {
        let source = origin_of(&r.source_id);
        let expected = oracle
            .effective_restrictions(source)
            .iter()
            .any(|x| x.on_property == r.name && matches!(x.flavor, RestrictionFlavor::ToClass(_)));
        if r.exclusive != expected {
            return Err(format!("exclusive soundness on {}", r.id));
        }
        if r.kind == RelationshipKind::Composition {
            let (_, part) = r.whole_and_part();
            let touching = model
                .relationships
                .iter()
                .filter(|x| x.source_id == part || x.target_id == part)
                .count();
            if touching != 1 {
                return Err(format!("composition {} part is not isolated", r.id));
            }
        }
    }

    for (owner, member) in model.inverted_multiplicities() {
        let flagged = out
            .report
            .of_kind(FlagKind::UnsatisfiableMultiplicity)
            .any(|i| {
                i.subject == owner && (owner.starts_with("rel:") || i.detail.contains(&member))
            });
        if !flagged {
            return Err(format!(
                "inverted multiplicity on {owner} {member} not flagged"
            ));
        }
    }
    Ok(())
}

pub fn pipeline(ont: &Ontology) -> PipelineOutput {
    run_pipeline(ont, None, &TransformConfig::default()).expect("generated ontologies transform")
}

/// Synthetic ontology of the given size: a forest of subclasses, half object
/// and half datatype properties, restrictions spread over all classes.
pub fn synthetic(classes: usize, properties: usize, restrictions: usize) -> Ontology {
    let mut ont = Ontology::new("synthetic");
    for i in 0..classes {
        ont.classes
            .push(ClassDefinition::primitive(format!("C{i}")));
        if i > 0 {
            ont.axioms.push(Axiom::subclass(
                format!("C{i}"),
                ClassExpression::named(format!("C{}", (i - 1) / 3)),
            ));
        }
    }
    for i in 0..properties {
        let domain = format!("C{}", (i * 7) % classes);
        let p = if i % 2 == 0 {
            PropertyDefinition::object(format!("p{i}"))
                .with_domain(domain)
                .with_range(format!("C{}", (i * 13 + 5) % classes))
        } else {
            PropertyDefinition::datatype(format!("d{i}"))
                .with_domain(domain)
                .with_range("string")
        };
        ont.properties.push(p);
    }
    for i in 0..restrictions {
        let class = (i * 11) % classes;
        let prop = &ont.properties[(i * 3) % properties];
        let flavor = match (i % 4, prop.category) {
            (0, PropertyCategory::Object) => RestrictionFlavor::HasClass(ClassExpression::named(
                format!("C{}", (i * 17) % classes),
            )),
            (1, PropertyCategory::Object) => RestrictionFlavor::ToClass(ClassExpression::named(
                format!("C{}", (i * 19) % classes),
            )),
            (2, _) => RestrictionFlavor::MinCardinality((i % 3) as u32),
            _ => RestrictionFlavor::MaxCardinality((i % 5 + 1) as u32),
        };
        let r = Restriction::new(prop.name.clone(), flavor);
        ont.classes[class].local_restrictions.push(r);
    }
    ont
}

/// Fixtures with a golden model JSON file.
pub const GOLDEN_FIXTURES: [&str; 10] = [
    "protein-dna",
    "protein-dna-only",
    "rule1-individuals",
    "rule2-defined",
    "rule2-same-class",
    "rule3-attributes",
    "rule4-relationships",
    "rule5-cardinality",
    "rule5-union",
    "rule6-composition",
];

/// Statement count of a COT text, header and comments excluded.
pub fn statements(text: &str) -> usize {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with("ontology "))
        .count()
}

/// File, translated total, and skipped elements with counts.
pub type CensusRow = (&'static str, usize, Vec<(&'static str, usize)>);

/// Element totals counted by hand from the fixture files, excluding the
/// `rdf:RDF` root.
pub fn census() -> Vec<CensusRow> {
    vec![
        (
            "protein-dna.daml",
            12,
            vec![
                ("daml:Ontology", 1),
                ("daml:versionInfo", 1),
                ("rdfs:comment", 1),
                ("rdfs:label", 1),
            ],
        ),
        (
            "tambis-excerpt.daml",
            42,
            vec![
                ("Strand", 2),
                ("daml:Ontology", 1),
                ("daml:TransitiveProperty", 1),
                ("daml:imports", 1),
                ("daml:inverseOf", 1),
                ("daml:oneOf", 1),
                ("rdfs:comment", 1),
            ],
        ),
    ]
}
