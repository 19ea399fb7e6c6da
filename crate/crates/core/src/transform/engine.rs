use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use super::{
    normalize_token, part_is_domain_side, FlagKind, FlaggedItem, Provenance, RuleTag,
    TransformConfig, ValidationReport,
};
use crate::bww::{BwwCategory, BwwReport};
use crate::cot::expression_to_string;
use crate::model::{
    canonical_order, entity_id, relationship_census, relationship_id, Attribute, ConceptualModel,
    ConstraintKind, DefinitionKind, EntityType, Generalization, Instance, Multiplicity,
    Relationship, RelationshipKind, SemanticConstraint,
};
use crate::ontology::{
    taxonomy_edges, Axiom, ClassExpression, ClassKind, Datatype, EdgeSource, Hierarchy, Ontology,
    PropertyDefinition, Restriction, RestrictionFlavor, SourcedRestriction, SuperclassParts,
};

fn render(expr: &ClassExpression) -> String {
    expression_to_string(expr)
}

fn render_restriction(r: &Restriction) -> String {
    render(&ClassExpression::restriction(r.clone()))
}

fn cardinality(flavor: &RestrictionFlavor) -> Option<Multiplicity> {
    match flavor {
        RestrictionFlavor::Cardinality(k) => Some(Multiplicity::exactly(*k)),
        RestrictionFlavor::MinCardinality(k) => Some(Multiplicity::new(*k, None)),
        RestrictionFlavor::MaxCardinality(k) => Some(Multiplicity::new(0, Some(*k))),
        RestrictionFlavor::HasClass(_) | RestrictionFlavor::ToClass(_) => None,
    }
}

/// Outermost complement nodes of an expression.
fn complements<'e>(expr: &'e ClassExpression, out: &mut Vec<&'e ClassExpression>) {
    match expr {
        ClassExpression::Named(_) => {}
        ClassExpression::Complement(_) => out.push(expr),
        ClassExpression::Intersection(ms) | ClassExpression::Union(ms) => {
            for m in ms {
                complements(m, out);
            }
        }
        ClassExpression::Restriction(r) => {
            if let Some(t) = r.flavor.target() {
                complements(t, out);
            }
        }
    }
}

pub(super) struct Engine<'a> {
    ont: &'a Ontology,
    bww: &'a BwwReport,
    cfg: &'a TransformConfig,
    hierarchy: Hierarchy<'a>,
    model: ConceptualModel,
    flags: Vec<FlaggedItem>,
    /// Class name to entity type name.
    names: HashMap<&'a str, String>,
    /// Class name to index in `model.entity_types`.
    entity_index: HashMap<&'a str, usize>,
    /// Property name to classes carrying a direct restriction on it.
    restricted_by: HashMap<&'a str, BTreeSet<&'a str>>,
    sourced: HashMap<usize, Vec<SourcedRestriction<'a>>>,
    used: HashSet<(&'a str, &'a Restriction)>,
    dropped: Vec<&'a str>,
    group_seq: HashMap<(ConstraintKind, &'a str, &'a str), usize>,
    generalization_sources: BTreeMap<(String, String), BTreeSet<EdgeSource>>,
}

impl<'a> Engine<'a> {
    pub(super) fn new(ont: &'a Ontology, bww: &'a BwwReport, cfg: &'a TransformConfig) -> Self {
        let hierarchy = Hierarchy::new(ont);
        let mut restricted_by: HashMap<&str, BTreeSet<&str>> = HashMap::new();
        for (id, class) in ont.classes.iter().enumerate() {
            for r in hierarchy.direct_restrictions_of(id) {
                restricted_by
                    .entry(r.on_property.as_str())
                    .or_default()
                    .insert(class.name.as_str());
            }
        }
        Engine {
            ont,
            bww,
            cfg,
            hierarchy,
            model: ConceptualModel::new(ont.name.clone()),
            flags: Vec::new(),
            names: HashMap::new(),
            entity_index: HashMap::new(),
            restricted_by,
            sourced: HashMap::new(),
            used: HashSet::new(),
            dropped: Vec::new(),
            group_seq: HashMap::new(),
            generalization_sources: BTreeMap::new(),
        }
    }

    pub(super) fn run(mut self, provenance: &Provenance) -> (ConceptualModel, ValidationReport) {
        self.map_classes();
        self.map_attributes();
        self.map_relationships();
        self.map_disjointness();
        self.detect_composition();
        if self.cfg.include_instances {
            self.map_individuals();
        }
        self.diagnose(provenance);

        let mut items = self.flags;
        items.sort();
        items.dedup();
        (canonical_order(&self.model), ValidationReport { items })
    }

    fn flag(
        &mut self,
        kind: FlagKind,
        rule: RuleTag,
        subject: impl Into<String>,
        detail: impl Into<String>,
    ) {
        self.flags.push(FlaggedItem {
            kind,
            subject: subject.into(),
            detail: detail.into(),
            rule,
        });
    }

    fn entity_id_of(&self, class: &str) -> String {
        entity_id(&self.names[class])
    }

    fn restrictions_on(&mut self, class: &'a str, property: &str) -> Vec<SourcedRestriction<'a>> {
        let id = self
            .hierarchy
            .class_id(class)
            .expect("validated ontology declares every referenced class");
        let hierarchy = &self.hierarchy;
        self.sourced
            .entry(id)
            .or_insert_with(|| hierarchy.sourced_restrictions(id))
            .iter()
            .filter(|s| s.restriction.on_property == property)
            .copied()
            .collect()
    }

    /// Classes a property applies to directly: its domains plus classes
    /// restricting it, sorted by name.
    fn applicable_classes(&self, prop: &'a PropertyDefinition) -> BTreeSet<&'a str> {
        let mut classes: BTreeSet<&str> = prop.domains.iter().map(String::as_str).collect();
        if let Some(r) = self.restricted_by.get(prop.name.as_str()) {
            classes.extend(r.iter().copied());
        }
        classes
    }

    fn drop_property(&mut self, prop: &'a PropertyDefinition, rule: RuleTag, reason: &str) {
        self.dropped.push(&prop.name);
        self.flag(FlagKind::DroppedProperty, rule, &prop.name, reason);
    }

    fn assign_names(&mut self) {
        let mut sorted: Vec<&str> = self.ont.classes.iter().map(|c| c.name.as_str()).collect();
        sorted.sort_unstable();
        let mut keeper: HashMap<String, &str> = HashMap::new();
        let mut renamed = Vec::new();
        for name in sorted {
            match keeper.get(&name.to_lowercase()) {
                None => {
                    keeper.insert(name.to_lowercase(), name);
                    self.names.insert(name, name.to_string());
                }
                Some(&k) => renamed.push((name, k)),
            }
        }
        for (name, kept) in renamed {
            let mut n = 2;
            let candidate = loop {
                let c = format!("{name}_{n}");
                if !keeper.contains_key(&c.to_lowercase()) {
                    break c;
                }
                n += 1;
            };
            keeper.insert(candidate.to_lowercase(), name);
            self.flag(
                FlagKind::NameCollision,
                RuleTag::Classes,
                name,
                format!("differs from {kept} only by case; entity type named {candidate}"),
            );
            self.names.insert(name, candidate);
        }
    }

    fn flag_residue(&mut self, owner: &str, residue: &[&ClassExpression], context: &str) {
        for expr in residue {
            if !expr.contains_complement() {
                self.flag(
                    FlagKind::UnmappedConstruct,
                    RuleTag::Classes,
                    owner,
                    format!("{context} {} has no structural reading", render(expr)),
                );
            }
        }
    }

    fn map_classes(&mut self) {
        self.assign_names();
        let ont = self.ont;
        for class in &ont.classes {
            let name = self.names[class.name.as_str()].clone();
            let bww = self
                .bww
                .category(&class.name)
                .unwrap_or(BwwCategory::ThingSet);
            if bww == BwwCategory::ThingSet {
                self.flag(
                    FlagKind::ZeroPropertyEntity,
                    RuleTag::Classes,
                    entity_id(&name),
                    format!("{} has no property", class.name),
                );
            }
            self.entity_index
                .insert(&class.name, self.model.entity_types.len());
            self.model.entity_types.push(EntityType {
                id: entity_id(&name),
                name,
                origin_class: class.name.clone(),
                bww,
                definition_kind: match class.kind {
                    ClassKind::Primitive => DefinitionKind::Primitive,
                    ClassKind::Defined => DefinitionKind::Defined,
                },
                attributes: Vec::new(),
            });
        }

        for class in &ont.classes {
            match &class.definition {
                Some(ClassExpression::Union(members)) => {
                    self.map_union_definition(&class.name, members)
                }
                Some(def) => {
                    let parts = SuperclassParts::of(def);
                    self.flag_residue(&class.name, &parts.residue, "definition part");
                }
                None => {}
            }
        }
        for axiom in &ont.axioms {
            match axiom {
                Axiom::SubClassOf { sub, sup } => {
                    let parts = SuperclassParts::of(sup);
                    self.flag_residue(sub, &parts.residue, "superclass");
                }
                Axiom::SameClassAs { class, same } => {
                    let parts = SuperclassParts::of(same);
                    self.flag_residue(class, &parts.residue, "equivalent class");
                }
                Axiom::DisjointWith { .. } => {}
            }
        }

        for edge in taxonomy_edges(ont) {
            let key = (self.entity_id_of(edge.sub), self.entity_id_of(edge.sup));
            self.generalization_sources
                .entry(key)
                .or_default()
                .insert(edge.source);
        }
        self.model.generalizations = self
            .generalization_sources
            .keys()
            .map(|(sub, sup)| Generalization {
                sub_id: sub.clone(),
                super_id: sup.clone(),
            })
            .collect();
    }

    fn map_union_definition(&mut self, class: &'a str, members: &'a [ClassExpression]) {
        let mut named: Vec<&str> = Vec::new();
        for m in members {
            match m.as_named() {
                Some(n) if n != class => {
                    if !named.contains(&n) {
                        named.push(n);
                    }
                }
                Some(_) => {}
                None if m.contains_complement() => {}
                None => self.flag(
                    FlagKind::UnmappedConstruct,
                    RuleTag::Classes,
                    class,
                    format!("union member {} has no entity type", render(m)),
                ),
            }
        }
        if named.is_empty() {
            return;
        }
        self.flag(
            FlagKind::UnionSpecialization,
            RuleTag::Classes,
            self.entity_id_of(class),
            format!("{} become subtypes of {class}", named.join(", ")),
        );
        if named.len() >= 2 {
            let mut member_ids: Vec<String> = named.iter().map(|n| self.entity_id_of(n)).collect();
            member_ids.sort();
            self.model.constraints.push(SemanticConstraint {
                id: format!("grp:or:{}:subtypes", self.names[class]),
                kind: ConstraintKind::OrGroup,
                member_ids,
            });
        }
    }

    fn map_attributes(&mut self) {
        let ont = self.ont;
        for prop in ont.properties.iter().filter(|p| p.is_datatype()) {
            let classes = self.applicable_classes(prop);
            if classes.is_empty() {
                self.drop_property(
                    prop,
                    RuleTag::Attributes,
                    "datatype property with no domain and no restriction",
                );
                continue;
            }
            if prop.domains.len() > 1 {
                self.flag(
                    FlagKind::MultiDomainProperty,
                    RuleTag::Attributes,
                    &prop.name,
                    format!("attribute repeated on {}", prop.domains.join(", ")),
                );
            }
            for class in classes {
                let restrictions = self.restrictions_on(class, &prop.name);
                let mut multiplicity = Multiplicity::ANY;
                let mut from_restriction = None;
                for s in &restrictions {
                    self.used.insert((s.declared_by, s.restriction));
                    match cardinality(&s.restriction.flavor) {
                        Some(m) => multiplicity = multiplicity.intersect(m),
                        None => {
                            if from_restriction.is_none() {
                                from_restriction = s
                                    .restriction
                                    .flavor
                                    .target()
                                    .and_then(ClassExpression::as_named)
                                    .and_then(Datatype::from_name);
                            }
                        }
                    }
                }
                let datatype = prop
                    .range
                    .as_deref()
                    .and_then(Datatype::from_name)
                    .or(from_restriction)
                    .unwrap_or(Datatype::String);
                let owner = self.entity_id_of(class);
                if !multiplicity.is_satisfiable() {
                    self.flag(
                        FlagKind::UnsatisfiableMultiplicity,
                        RuleTag::Constraints,
                        &owner,
                        format!("attribute {} has multiplicity {multiplicity}", prop.name),
                    );
                }
                let index = self.entity_index[class];
                self.model.entity_types[index].attributes.push(Attribute {
                    name: prop.name.clone(),
                    datatype,
                    multiplicity,
                    origin_property: prop.name.clone(),
                });
            }
        }
    }

    fn next_group_id(&mut self, kind: ConstraintKind, class: &'a str, prop: &'a str) -> String {
        let seq = self.group_seq.entry((kind, class, prop)).or_default();
        *seq += 1;
        let tag = match kind {
            ConstraintKind::AndGroup => "and",
            ConstraintKind::OrGroup => "or",
            ConstraintKind::Disjoint => "dis",
        };
        format!("grp:{tag}:{}:{prop}:{}", self.names[class], seq)
    }

    /// Relationship targets of one restriction on `(class, prop)`.
    fn restriction_targets(
        &mut self,
        class: &'a str,
        prop: &'a PropertyDefinition,
        target: &'a ClassExpression,
        out: &mut Vec<(&'a str, Option<String>)>,
    ) -> bool {
        let members = match target {
            ClassExpression::Named(n) => {
                out.push((n, None));
                return true;
            }
            ClassExpression::Intersection(ms) => (ConstraintKind::AndGroup, ms),
            ClassExpression::Union(ms) => (ConstraintKind::OrGroup, ms),
            ClassExpression::Complement(_) => return false,
            ClassExpression::Restriction(_) => {
                if !target.contains_complement() {
                    self.flag(
                        FlagKind::UnmappedConstruct,
                        RuleTag::Constraints,
                        class,
                        format!(
                            "nested restriction {} on {} has no relationship counterpart",
                            render(target),
                            prop.name
                        ),
                    );
                }
                return false;
            }
        };
        let (kind, members) = members;
        let mut named: Vec<&str> = Vec::new();
        for m in members {
            match m.as_named() {
                Some(n) => {
                    if !named.contains(&n) {
                        named.push(n);
                    }
                }
                None if m.contains_complement() => {}
                None => self.flag(
                    FlagKind::UnmappedConstruct,
                    RuleTag::Constraints,
                    class,
                    format!(
                        "member {} of the {} target on {} is not a named class",
                        render(m),
                        kind.label(),
                        prop.name
                    ),
                ),
            }
        }
        match named.len() {
            0 => false,
            1 => {
                out.push((named[0], None));
                true
            }
            _ => {
                let id = self.next_group_id(kind, class, &prop.name);
                let source = &self.names[class];
                let mut member_ids: Vec<String> = named
                    .iter()
                    .map(|t| relationship_id(&prop.name, source, &self.names[t]))
                    .collect();
                member_ids.sort();
                self.model.constraints.push(SemanticConstraint {
                    id: id.clone(),
                    kind,
                    member_ids,
                });
                out.extend(named.into_iter().map(|t| (t, Some(id.clone()))));
                true
            }
        }
    }

    fn map_relationships(&mut self) {
        let ont = self.ont;
        for prop in ont.properties.iter().filter(|p| !p.is_datatype()) {
            let classes = self.applicable_classes(prop);
            if classes.is_empty() {
                self.drop_property(
                    prop,
                    RuleTag::Relationships,
                    "object property with no domain and no restriction",
                );
                continue;
            }
            if prop.domains.len() > 1 {
                self.flag(
                    FlagKind::MultiDomainProperty,
                    RuleTag::Relationships,
                    &prop.name,
                    format!("relationship repeated from {}", prop.domains.join(", ")),
                );
            }
            let mut mapped = false;
            for class in classes {
                mapped |= self.relationships_from(class, prop);
            }
            if !mapped {
                self.drop_property(
                    prop,
                    RuleTag::Relationships,
                    "object property with no range and no restriction target",
                );
            }
        }
    }

    fn relationships_from(&mut self, class: &'a str, prop: &'a PropertyDefinition) -> bool {
        let restrictions = self.restrictions_on(class, &prop.name);
        let mut multiplicity = Multiplicity::ANY;
        let mut exclusive = false;
        let mut by_value: BTreeMap<&'a Restriction, Vec<&'a str>> = BTreeMap::new();
        let has_direct_value = restrictions
            .iter()
            .any(|s| !s.origin.is_inherited() && s.restriction.flavor.target().is_some());
        for s in &restrictions {
            match cardinality(&s.restriction.flavor) {
                Some(m) => multiplicity = multiplicity.intersect(m),
                None => {
                    exclusive |= matches!(s.restriction.flavor, RestrictionFlavor::ToClass(_));
                    // Own value restrictions refine inherited ones.
                    if has_direct_value && s.origin.is_inherited() {
                        continue;
                    }
                    by_value
                        .entry(s.restriction)
                        .or_default()
                        .push(s.declared_by);
                }
            }
        }

        let mut targets: Vec<(&'a str, Option<String>)> = Vec::new();
        for (r, declared_by) in by_value {
            let target = r
                .flavor
                .target()
                .expect("value restrictions carry a target");
            if self.restriction_targets(class, prop, target, &mut targets) {
                for d in declared_by {
                    self.used.insert((d, r));
                }
            }
        }
        let overrides_range = !targets.is_empty();
        if targets.is_empty() {
            match prop.range.as_deref() {
                Some(range) => targets.push((range, None)),
                None => return false,
            }
        }
        for s in &restrictions {
            if cardinality(&s.restriction.flavor).is_some() {
                self.used.insert((s.declared_by, s.restriction));
            }
        }

        let source_name = self.names[class].clone();
        let mut seen = HashSet::new();
        for (target, group_id) in targets {
            if !seen.insert(target) {
                continue;
            }
            let target_name = self.names[target].clone();
            let id = relationship_id(&prop.name, &source_name, &target_name);
            if overrides_range {
                if let Some(range) = prop.range.as_deref() {
                    if !self.hierarchy.is_ancestor_or_self(range, target) {
                        self.flag(
                            FlagKind::RangeOverride,
                            RuleTag::Constraints,
                            &id,
                            format!(
                                "target {target} is not subsumed by the declared range {range}"
                            ),
                        );
                    }
                }
            }
            if exclusive {
                self.flag(
                    FlagKind::ExclusiveRelation,
                    RuleTag::Constraints,
                    &id,
                    format!("{class} {} only {target}", prop.name),
                );
            }
            if !multiplicity.is_satisfiable() {
                self.flag(
                    FlagKind::UnsatisfiableMultiplicity,
                    RuleTag::Constraints,
                    &id,
                    format!("target multiplicity {multiplicity}"),
                );
            }
            self.model.relationships.push(Relationship {
                id,
                name: prop.name.clone(),
                source_id: entity_id(&source_name),
                target_id: entity_id(&target_name),
                source_mult: Multiplicity::ANY,
                target_mult: multiplicity,
                exclusive,
                kind: RelationshipKind::Association,
                part_is_source: false,
                group_id,
            });
        }
        true
    }

    fn map_disjointness(&mut self) {
        let ont = self.ont;
        let mut seen = HashSet::new();
        for axiom in &ont.axioms {
            let Axiom::DisjointWith { first, second } = axiom else {
                continue;
            };
            if first == second {
                self.flag(
                    FlagKind::UnmappedConstruct,
                    RuleTag::Constraints,
                    first,
                    "class declared disjoint with itself",
                );
                continue;
            }
            let mut pair = [
                self.names[first.as_str()].clone(),
                self.names[second.as_str()].clone(),
            ];
            pair.sort();
            let id = format!("dis:{}:{}", pair[0], pair[1]);
            if seen.insert(id.clone()) {
                self.model.constraints.push(SemanticConstraint {
                    id,
                    kind: ConstraintKind::Disjoint,
                    member_ids: pair.iter().map(|n| entity_id(n)).collect(),
                });
            }
        }
    }

    fn detect_composition(&mut self) {
        if !self.cfg.composition_heuristics {
            return;
        }
        let tokens: HashSet<String> = self
            .cfg
            .composition_tokens
            .iter()
            .map(|t| normalize_token(t))
            .collect();
        let census: HashMap<String, usize> = relationship_census(&self.model)
            .into_iter()
            .map(|(id, n)| (id.to_string(), n))
            .collect();
        let mut raised = Vec::new();
        for rel in &mut self.model.relationships {
            let token = normalize_token(&rel.name);
            if !tokens.contains(&token) {
                continue;
            }
            rel.part_is_source = part_is_domain_side(&token);
            let (whole, part) = rel.whole_and_part();
            let detail = format!("whole {whole}, part {part}");
            if census.get(part).copied().unwrap_or(0) == 1 {
                rel.kind = RelationshipKind::Composition;
                raised.push((FlagKind::CompositionCandidate, rel.id.clone(), detail));
            } else {
                rel.kind = RelationshipKind::Aggregation;
                raised.push((
                    FlagKind::AggregationCandidate,
                    rel.id.clone(),
                    format!("{detail}; the part takes part in other relationships"),
                ));
            }
        }
        for (kind, subject, detail) in raised {
            self.flag(kind, RuleTag::Composition, subject, detail);
        }
    }

    fn map_individuals(&mut self) {
        let ont = self.ont;
        for individual in &ont.individuals {
            let mut types = BTreeSet::new();
            let mut ignored = Vec::new();
            for t in &individual.types {
                match t {
                    ClassExpression::Named(n) => {
                        types.insert(self.entity_id_of(n));
                    }
                    ClassExpression::Intersection(ms) => {
                        for m in ms {
                            match m.as_named() {
                                Some(n) => {
                                    types.insert(self.entity_id_of(n));
                                }
                                None => ignored.push(m),
                            }
                        }
                    }
                    other => ignored.push(other),
                }
            }
            ignored.retain(|e| !e.contains_complement());
            if types.is_empty() {
                self.flag(
                    FlagKind::UnmappedConstruct,
                    RuleTag::Individuals,
                    &individual.name,
                    "individual has no named type; instance left untyped",
                );
            } else if !ignored.is_empty() {
                let parts: Vec<String> = ignored.iter().map(|e| render(e)).collect();
                self.flag(
                    FlagKind::UnmappedConstruct,
                    RuleTag::Individuals,
                    &individual.name,
                    format!("anonymous type parts ignored: {}", parts.join("; ")),
                );
            }
            self.model.instances.push(Instance {
                name: individual.name.clone(),
                type_ids: types.into_iter().collect(),
            });
        }
    }

    fn diagnose(&mut self, provenance: &Provenance) {
        let ont = self.ont;
        for prop in std::mem::take(&mut self.dropped) {
            self.flag(
                FlagKind::UnmappedConstruct,
                RuleTag::Diagnostics,
                prop,
                "property has no attribute or relationship counterpart",
            );
        }
        for s in &provenance.skipped {
            self.flag(
                FlagKind::UnmappedConstruct,
                RuleTag::Diagnostics,
                &s.element,
                format!(
                    "{} element(s) skipped on import, first at {}",
                    s.count, s.first_location
                ),
            );
        }

        let mut owned: Vec<(&str, &ClassExpression)> = Vec::new();
        for class in &ont.classes {
            if let Some(def) = &class.definition {
                owned.push((&class.name, def));
            }
            for r in &class.local_restrictions {
                if let Some(t) = r.flavor.target() {
                    owned.push((&class.name, t));
                }
            }
        }
        for axiom in &ont.axioms {
            match axiom {
                Axiom::SubClassOf { sub, sup } => owned.push((sub, sup)),
                Axiom::SameClassAs { class, same } => owned.push((class, same)),
                Axiom::DisjointWith { .. } => {}
            }
        }
        for individual in &ont.individuals {
            for t in &individual.types {
                owned.push((&individual.name, t));
            }
        }
        for (owner, expr) in owned {
            let mut found = Vec::new();
            complements(expr, &mut found);
            for c in found {
                self.flag(
                    FlagKind::UnmappedConstruct,
                    RuleTag::Diagnostics,
                    owner,
                    format!(
                        "complement {} has no conceptual-model counterpart",
                        render(c)
                    ),
                );
            }
        }

        for (id, class) in ont.classes.iter().enumerate() {
            for r in self.hierarchy.direct_restrictions_of(id).to_vec() {
                let has_complement = r
                    .flavor
                    .target()
                    .is_some_and(ClassExpression::contains_complement);
                if !has_complement && !self.used.contains(&(class.name.as_str(), r)) {
                    self.flag(
                        FlagKind::UnmappedConstruct,
                        RuleTag::Diagnostics,
                        &class.name,
                        format!("{} is not represented in the model", render_restriction(r)),
                    );
                }
            }
        }

        let overloads: Vec<_> = self
            .generalization_sources
            .iter()
            .filter(|(_, sources)| sources.len() > 1)
            .map(|((sub, sup), sources)| {
                let kinds: Vec<&str> = sources.iter().map(|s| s.as_str()).collect();
                (
                    sub.clone(),
                    format!(
                        "generalization {sub} -> {sup} stated by {}",
                        kinds.join(" and ")
                    ),
                )
            })
            .collect();
        for (subject, detail) in overloads {
            self.flag(
                FlagKind::ConstructOverload,
                RuleTag::Diagnostics,
                subject,
                detail,
            );
        }

        for cycle in &provenance.cycles {
            self.flag(
                FlagKind::EquivalenceCollapsed,
                RuleTag::Diagnostics,
                entity_id(
                    &self
                        .names
                        .get(cycle.representative.as_str())
                        .cloned()
                        .unwrap_or_else(|| cycle.representative.clone()),
                ),
                format!(
                    "cyclic subsumption merged {} into {}",
                    cycle.members.join(", "),
                    cycle.representative
                ),
            );
        }
    }
}
