//! Reader for DAML+OIL (March 2001) ontologies serialized as RDF/XML.
//!
//! Only a closed subset of elements is translated. Every other element is
//! counted in [`ImportReport::skipped`] together with the location of its
//! first occurrence, so nothing disappears without a trace.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use roxmltree::{Document, Node, ParsingOptions};
use url::Url;

use crate::cot::is_valid_name;
use crate::error::ImportError;
use crate::ontology::{
    validate_ontology, Axiom, ClassDefinition, ClassExpression, ClassKind, Datatype, Individual,
    Ontology, PropertyCategory, PropertyDefinition, Restriction, RestrictionFlavor,
};

pub const DAML_NS: &str = "http://www.daml.org/2001/03/daml+oil#";
pub const RDF_NS: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
pub const RDFS_NS: &str = "http://www.w3.org/2000/01/rdf-schema#";
pub const XSD_NS: &str = "http://www.w3.org/2001/XMLSchema#";
pub const XSD_2000_NS: &str = "http://www.w3.org/2000/10/XMLSchema#";
const XML_NS: &str = "http://www.w3.org/XML/1998/namespace";
const DEFAULT_BASE: &str = "http://localhost/document";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkippedElement {
    pub element: String,
    pub count: usize,
    /// `line:column` of the first skipped occurrence.
    pub first_location: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImportReport {
    pub ontology: Ontology,
    /// Translated element names with their counts, sorted by name.
    pub translated: Vec<(String, usize)>,
    /// Skipped element names, sorted by name.
    pub skipped: Vec<SkippedElement>,
    pub notes: Vec<String>,
}

impl ImportReport {
    pub fn translated_total(&self) -> usize {
        self.translated.iter().map(|(_, n)| n).sum()
    }

    pub fn skipped_total(&self) -> usize {
        self.skipped.iter().map(|s| s.count).sum()
    }

    pub fn skipped_count(&self, element: &str) -> usize {
        self.skipped
            .iter()
            .find(|s| s.element == element)
            .map_or(0, |s| s.count)
    }
}

fn is_xsd(ns: &str) -> bool {
    ns == XSD_NS || ns == XSD_2000_NS
}

fn qualified_name(node: Node) -> String {
    let tag = node.tag_name();
    let local = tag.name();
    match tag.namespace() {
        Some(DAML_NS) => format!("daml:{local}"),
        Some(RDF_NS) => format!("rdf:{local}"),
        Some(RDFS_NS) => format!("rdfs:{local}"),
        Some(ns) if is_xsd(ns) => format!("xsd:{local}"),
        Some(ns) => match node.lookup_prefix(ns) {
            Some(prefix) if !prefix.is_empty() => format!("{prefix}:{local}"),
            _ => local.to_string(),
        },
        None => local.to_string(),
    }
}

fn is(node: Node, ns: &str, local: &str) -> bool {
    node.is_element() && node.tag_name().namespace() == Some(ns) && node.tag_name().name() == local
}

fn elements<'a, 'i>(node: Node<'a, 'i>) -> impl Iterator<Item = Node<'a, 'i>> {
    node.children().filter(Node::is_element)
}

#[derive(Default)]
struct Census {
    translated: BTreeMap<String, usize>,
    skipped: BTreeMap<String, (usize, String)>,
}

struct Importer<'a, 'i> {
    doc: &'a Document<'i>,
    classes: Vec<ClassDefinition>,
    class_ids: HashMap<String, usize>,
    properties: Vec<PropertyDefinition>,
    property_ids: HashMap<String, usize>,
    axioms: Vec<Axiom>,
    individuals: Vec<Individual>,
    individual_ids: HashMap<String, usize>,
    referenced_classes: BTreeSet<String>,
    referenced_properties: BTreeSet<String>,
    notes: Vec<String>,
    census: Census,
}

type Staged<'a, 'i> = Vec<Node<'a, 'i>>;

impl<'a, 'i> Importer<'a, 'i> {
    fn location(&self, node: Node) -> String {
        let pos = self.doc.text_pos_at(node.range().start);
        format!("{}:{}", pos.row, pos.col)
    }

    fn translated(&mut self, node: Node) {
        *self
            .census
            .translated
            .entry(qualified_name(node))
            .or_default() += 1;
    }

    fn commit(&mut self, staged: Staged) {
        for node in staged {
            self.translated(node);
        }
    }

    fn skip(&mut self, node: Node) {
        for n in node.descendants().filter(Node::is_element) {
            let location = self.location(n);
            let entry = self
                .census
                .skipped
                .entry(qualified_name(n))
                .or_insert((0, location));
            entry.0 += 1;
        }
    }

    fn unsupported(&self, node: Node, message: impl Into<String>) -> ImportError {
        ImportError::Unsupported {
            location: self.location(node),
            message: message.into(),
        }
    }

    fn base(&self, node: Node) -> Url {
        let mut chain: Vec<&str> = node
            .ancestors()
            .filter_map(|n| n.attribute((XML_NS, "base")))
            .collect();
        chain.reverse();
        let mut base = Url::parse(DEFAULT_BASE).expect("default base is a valid URL");
        for b in chain {
            if let Ok(u) = base.join(b) {
                base = u;
            }
        }
        base
    }

    fn resolve(&self, node: Node, reference: &str) -> String {
        match self.base(node).join(reference) {
            Ok(u) => u.to_string(),
            Err(_) => reference.to_string(),
        }
    }

    fn local_name(&mut self, iri: &str) -> Option<String> {
        let raw = match iri.rsplit_once('#') {
            Some((_, frag)) if !frag.is_empty() => frag,
            Some((rest, _)) => rest.trim_end_matches('/').rsplit('/').next().unwrap_or(""),
            None => iri.trim_end_matches('/').rsplit('/').next().unwrap_or(""),
        };
        if raw.is_empty() {
            return None;
        }
        if is_valid_name(raw) {
            return Some(raw.to_string());
        }
        let mut name: String = raw
            .chars()
            .map(|c| {
                if c.is_ascii_alphanumeric() || c == '_' || c == '-' {
                    c
                } else {
                    '_'
                }
            })
            .collect();
        if !name.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_') {
            name.insert(0, '_');
        }
        self.notes.push(format!(
            "name `{raw}` is not a valid identifier; renamed to `{name}`"
        ));
        Some(name)
    }

    /// Local name of the resource a node describes (`rdf:ID` or `rdf:about`).
    fn subject_name(&mut self, node: Node) -> Option<String> {
        if let Some(id) = node.attribute((RDF_NS, "ID")) {
            let iri = self.resolve(node, &format!("#{id}"));
            return self.local_name(&iri);
        }
        let about = node.attribute((RDF_NS, "about"))?;
        let iri = self.resolve(node, about);
        self.local_name(&iri)
    }

    fn resource_iri(&self, node: Node) -> Option<String> {
        node.attribute((RDF_NS, "resource"))
            .map(|r| self.resolve(node, r))
    }

    fn declare_class(&mut self, name: &str) -> usize {
        if let Some(&id) = self.class_ids.get(name) {
            return id;
        }
        self.classes.push(ClassDefinition::primitive(name));
        self.class_ids
            .insert(name.to_string(), self.classes.len() - 1);
        self.classes.len() - 1
    }

    fn class_ref(&mut self, iri: &str) -> Option<ClassExpression> {
        if let Some((ns, local)) = iri.rsplit_once('#') {
            if is_xsd(&format!("{ns}#")) {
                return Some(ClassExpression::named(
                    datatype_for(local).unwrap_or(Datatype::String).as_str(),
                ));
            }
        }
        let name = self.local_name(iri)?;
        self.referenced_classes.insert(name.clone());
        Some(ClassExpression::Named(name))
    }

    /// Value of a property element: `rdf:resource` or a single nested node.
    fn value_expr(
        &mut self,
        prop: Node<'a, 'i>,
        staged: &mut Staged<'a, 'i>,
    ) -> Result<Option<ClassExpression>, ImportError> {
        if let Some(iri) = self.resource_iri(prop) {
            staged.push(prop);
            return Ok(self.class_ref(&iri));
        }
        let mut children = elements(prop);
        let (Some(child), None) = (children.next(), children.next()) else {
            return Ok(None);
        };
        let expr = self.node_expr(child, staged)?;
        if expr.is_some() {
            staged.push(prop);
        }
        Ok(expr)
    }

    fn node_expr(
        &mut self,
        node: Node<'a, 'i>,
        staged: &mut Staged<'a, 'i>,
    ) -> Result<Option<ClassExpression>, ImportError> {
        if is(node, DAML_NS, "Restriction") {
            return self.restriction_expr(node, staged);
        }
        if !(is(node, DAML_NS, "Class") || is(node, RDF_NS, "Description")) {
            return Ok(None);
        }
        if node.has_attribute((RDF_NS, "ID")) || node.has_attribute((RDF_NS, "about")) {
            if elements(node).next().is_some() {
                return Ok(None);
            }
            let Some(name) = self.subject_name(node) else {
                return Ok(None);
            };
            self.referenced_classes.insert(name.clone());
            staged.push(node);
            return Ok(Some(ClassExpression::Named(name)));
        }
        let mut children = elements(node);
        let (Some(body), None) = (children.next(), children.next()) else {
            return Ok(None);
        };
        let expr = self.constructor_expr(body, staged)?;
        if expr.is_some() {
            staged.push(node);
        }
        Ok(expr)
    }

    /// `daml:intersectionOf`, `daml:unionOf` or `daml:complementOf`.
    fn constructor_expr(
        &mut self,
        node: Node<'a, 'i>,
        staged: &mut Staged<'a, 'i>,
    ) -> Result<Option<ClassExpression>, ImportError> {
        if is(node, DAML_NS, "complementOf") {
            return Ok(self
                .value_expr(node, staged)?
                .map(ClassExpression::complement));
        }
        let union = is(node, DAML_NS, "unionOf");
        if !union && !is(node, DAML_NS, "intersectionOf") {
            return Ok(None);
        }
        let mut local = Vec::new();
        let mut members = Vec::new();
        for child in elements(node) {
            match self.node_expr(child, &mut local)? {
                Some(e) => members.push(e),
                None => return Ok(None),
            }
        }
        let expr = match members.len() {
            0 => return Ok(None),
            1 => members.pop(),
            _ if union => Some(ClassExpression::Union(members)),
            _ => Some(ClassExpression::Intersection(members)),
        };
        staged.extend(local);
        staged.push(node);
        Ok(expr)
    }

    fn restriction_expr(
        &mut self,
        node: Node<'a, 'i>,
        staged: &mut Staged<'a, 'i>,
    ) -> Result<Option<ClassExpression>, ImportError> {
        let mut local = vec![node];
        let mut property = None;
        let mut facets = Vec::new();
        for child in elements(node) {
            let tag = child.tag_name();
            if tag.namespace() != Some(DAML_NS) {
                return Ok(None);
            }
            match tag.name() {
                "onProperty" => {
                    let iri = self.resource_iri(child).ok_or_else(|| {
                        self.unsupported(child, "daml:onProperty without rdf:resource")
                    })?;
                    let name = self.local_name(&iri).ok_or_else(|| {
                        self.unsupported(child, "daml:onProperty names no property")
                    })?;
                    property = Some(name);
                    local.push(child);
                }
                "hasClass" | "toClass" => {
                    let Some(target) = self.value_expr(child, &mut local)? else {
                        return Ok(None);
                    };
                    facets.push(if tag.name() == "hasClass" {
                        RestrictionFlavor::HasClass(target)
                    } else {
                        RestrictionFlavor::ToClass(target)
                    });
                }
                "cardinality" | "minCardinality" | "maxCardinality" => {
                    let text = child.text().unwrap_or("").trim();
                    let k: u32 = text.parse().map_err(|_| {
                        self.unsupported(
                            child,
                            format!(
                                "daml:{} value `{text}` is not a non-negative integer",
                                tag.name()
                            ),
                        )
                    })?;
                    facets.push(match tag.name() {
                        "cardinality" => RestrictionFlavor::Cardinality(k),
                        "minCardinality" => RestrictionFlavor::MinCardinality(k),
                        _ => RestrictionFlavor::MaxCardinality(k),
                    });
                    local.push(child);
                }
                _ => return Ok(None),
            }
        }
        let property = property
            .ok_or_else(|| self.unsupported(node, "daml:Restriction without daml:onProperty"))?;
        if facets.is_empty() {
            return Err(self.unsupported(node, "daml:Restriction without a supported facet"));
        }
        self.referenced_properties.insert(property.clone());
        let mut restrictions: Vec<ClassExpression> = facets
            .into_iter()
            .map(|f| ClassExpression::restriction(Restriction::new(property.clone(), f)))
            .collect();
        staged.extend(local);
        Ok(Some(if restrictions.len() == 1 {
            restrictions.pop().expect("one restriction")
        } else {
            ClassExpression::Intersection(restrictions)
        }))
    }

    fn add_superclass(&mut self, class: &str, expr: ClassExpression) {
        match expr {
            ClassExpression::Restriction(r) => {
                let id = self.declare_class(class);
                if !self.classes[id].local_restrictions.contains(&r) {
                    self.classes[id].local_restrictions.push(*r);
                }
            }
            ClassExpression::Intersection(ms)
                if ms
                    .iter()
                    .all(|m| matches!(m, ClassExpression::Restriction(_))) =>
            {
                for m in ms {
                    self.add_superclass(class, m);
                }
            }
            other => {
                let axiom = Axiom::subclass(class, other);
                if !self.axioms.contains(&axiom) {
                    self.axioms.push(axiom);
                }
            }
        }
    }

    fn set_definition(&mut self, class: &str, expr: ClassExpression) {
        let id = self.declare_class(class);
        let c = &mut self.classes[id];
        if c.definition.is_none() {
            c.kind = ClassKind::Defined;
            c.definition = Some(expr);
        } else {
            self.axioms.push(Axiom::same_class(class, expr));
        }
    }

    fn class_element(&mut self, node: Node<'a, 'i>, name: String) -> Result<(), ImportError> {
        self.translated(node);
        self.declare_class(&name);
        for child in elements(node) {
            let mut staged = Vec::new();
            let tag = child.tag_name();
            let ns = tag.namespace().unwrap_or("");
            let handled = match (ns, tag.name()) {
                (RDFS_NS, "subClassOf") => match self.value_expr(child, &mut staged)? {
                    Some(e) => {
                        self.add_superclass(&name, e);
                        true
                    }
                    None => false,
                },
                (DAML_NS, "sameClassAs") => match self.value_expr(child, &mut staged)? {
                    Some(e @ ClassExpression::Named(_)) => {
                        self.axioms.push(Axiom::same_class(name.clone(), e));
                        true
                    }
                    Some(e) => {
                        self.set_definition(&name, e);
                        true
                    }
                    None => false,
                },
                (DAML_NS, "intersectionOf" | "unionOf" | "complementOf") => {
                    match self.constructor_expr(child, &mut staged)? {
                        Some(e) => {
                            self.set_definition(&name, e);
                            true
                        }
                        None => false,
                    }
                }
                (DAML_NS, "disjointWith") => match self.value_expr(child, &mut staged)? {
                    Some(ClassExpression::Named(other)) => {
                        self.axioms.push(Axiom::disjoint(name.clone(), other));
                        true
                    }
                    Some(_) => {
                        self.notes.push(format!(
                            "disjointWith on {name} with an anonymous class is not supported"
                        ));
                        false
                    }
                    None => false,
                },
                (RDF_NS, "type") => {
                    staged.push(child);
                    true
                }
                _ => false,
            };
            if handled {
                self.commit(staged);
            } else {
                self.skip(child);
            }
        }
        Ok(())
    }

    fn declare_property(&mut self, name: &str, category: PropertyCategory) -> usize {
        if let Some(&id) = self.property_ids.get(name) {
            if self.properties[id].category != category {
                self.notes.push(format!(
                    "property {name} declared as both object and datatype property; keeping the first"
                ));
            }
            return id;
        }
        self.properties.push(PropertyDefinition {
            name: name.to_string(),
            category,
            domains: Vec::new(),
            range: None,
        });
        self.property_ids
            .insert(name.to_string(), self.properties.len() - 1);
        self.properties.len() - 1
    }

    /// IRI of a `rdfs:domain`/`rdfs:range` value: a resource or a nested named class.
    fn reference_iri(&self, node: Node) -> Option<String> {
        if let Some(iri) = self.resource_iri(node) {
            return Some(iri);
        }
        let mut children = elements(node);
        match (children.next(), children.next()) {
            (Some(c), None) if is(c, DAML_NS, "Class") && elements(c).next().is_none() => {
                let about = c
                    .attribute((RDF_NS, "about"))
                    .map(str::to_string)
                    .or_else(|| c.attribute((RDF_NS, "ID")).map(|id| format!("#{id}")))?;
                Some(self.resolve(c, &about))
            }
            _ => None,
        }
    }

    fn datatype_range(&mut self, iri: &str) -> Datatype {
        let mapped = iri
            .rsplit_once('#')
            .filter(|(ns, _)| is_xsd(&format!("{ns}#")))
            .and_then(|(_, local)| datatype_for(local));
        mapped.unwrap_or_else(|| {
            self.notes.push(format!(
                "datatype <{iri}> is not supported; mapped to string"
            ));
            Datatype::String
        })
    }

    fn property_element(
        &mut self,
        node: Node<'a, 'i>,
        name: String,
        category: PropertyCategory,
    ) -> Result<(), ImportError> {
        self.translated(node);
        let id = self.declare_property(&name, category);
        let category = self.properties[id].category;
        for child in elements(node) {
            let is_domain = is(child, RDFS_NS, "domain");
            let is_range = is(child, RDFS_NS, "range");
            if !(is_domain || is_range) {
                self.skip(child);
                continue;
            }
            let Some(iri) = self.reference_iri(child) else {
                self.skip(child);
                continue;
            };
            let value = if is_range && category == PropertyCategory::Datatype {
                Some(self.datatype_range(&iri).as_str().to_string())
            } else if iri
                .rsplit_once('#')
                .is_some_and(|(ns, _)| is_xsd(&format!("{ns}#")))
            {
                self.notes.push(format!(
                    "object property {name} uses datatype <{iri}> as {}; ignored",
                    if is_domain { "domain" } else { "range" }
                ));
                None
            } else {
                self.local_name(&iri).inspect(|n| {
                    self.referenced_classes.insert(n.clone());
                })
            };
            let Some(value) = value else {
                self.skip(child);
                continue;
            };
            let prop = &mut self.properties[id];
            if is_domain {
                if !prop.domains.contains(&value) {
                    prop.domains.push(value);
                }
            } else if prop.range.as_ref().is_some_and(|r| r != &value) {
                self.notes.push(format!(
                    "property {name} has more than one range; keeping {}",
                    prop.range.as_deref().unwrap_or_default()
                ));
                self.skip(child);
                continue;
            } else {
                prop.range = Some(value);
            }
            self.translated(child);
            for n in child.descendants().skip(1).filter(Node::is_element) {
                self.translated(n);
            }
        }
        Ok(())
    }

    fn add_individual(&mut self, name: &str, ty: ClassExpression) {
        if let Some(n) = ty.as_named() {
            self.referenced_classes.insert(n.to_string());
        }
        let id = match self.individual_ids.get(name) {
            Some(&id) => id,
            None => {
                self.individuals.push(Individual::new(name, Vec::new()));
                self.individual_ids
                    .insert(name.to_string(), self.individuals.len() - 1);
                self.individuals.len() - 1
            }
        };
        if !self.individuals[id].types.contains(&ty) {
            self.individuals[id].types.push(ty);
        }
    }

    fn individual_children(&mut self, node: Node<'a, 'i>, name: &str) {
        for child in elements(node) {
            if is(child, RDF_NS, "type") {
                if let Some(ty) = self
                    .resource_iri(child)
                    .and_then(|iri| self.class_ref(&iri))
                {
                    self.add_individual(name, ty);
                    self.translated(child);
                    continue;
                }
            }
            self.skip(child);
        }
    }

    fn description(&mut self, node: Node<'a, 'i>, name: String) -> Result<(), ImportError> {
        let types: Vec<String> = elements(node)
            .filter(|c| is(*c, RDF_NS, "type"))
            .filter_map(|c| self.resource_iri(c))
            .collect();
        let daml = |local: &str| types.iter().any(|t| *t == format!("{DAML_NS}{local}"));
        if daml("Class") {
            return self.class_element(node, name);
        }
        for (local, category) in [
            ("ObjectProperty", PropertyCategory::Object),
            ("DatatypeProperty", PropertyCategory::Datatype),
        ] {
            if daml(local) {
                self.property_element(node, name, category)?;
                for child in elements(node).filter(|c| is(*c, RDF_NS, "type")) {
                    if let Some(e) = self.census.skipped.get_mut(&qualified_name(child)) {
                        e.0 -= 1;
                    }
                    self.translated(child);
                }
                self.census.skipped.retain(|_, (n, _)| *n > 0);
                return Ok(());
            }
        }
        if types.is_empty() {
            self.skip(node);
            return Ok(());
        }
        self.translated(node);
        self.individual_children(node, &name);
        Ok(())
    }

    fn top_level(&mut self, node: Node<'a, 'i>) -> Result<(), ImportError> {
        let tag = node.tag_name();
        let ns = tag.namespace().unwrap_or("");
        let named = node.has_attribute((RDF_NS, "ID")) || node.has_attribute((RDF_NS, "about"));
        let name = if named { self.subject_name(node) } else { None };
        match (ns, tag.name(), name) {
            (DAML_NS, "Class", Some(name)) => self.class_element(node, name),
            (DAML_NS, "ObjectProperty", Some(name)) => {
                self.property_element(node, name, PropertyCategory::Object)
            }
            (DAML_NS, "DatatypeProperty", Some(name)) => {
                self.property_element(node, name, PropertyCategory::Datatype)
            }
            (RDF_NS, "Description", Some(name)) => self.description(node, name),
            (DAML_NS | RDF_NS | RDFS_NS, _, _) => {
                self.skip(node);
                Ok(())
            }
            (_, local, Some(name)) if !ns.is_empty() => {
                let type_iri = format!("{ns}{local}");
                match self.class_ref(&type_iri) {
                    Some(ty) => {
                        self.translated(node);
                        self.add_individual(&name, ty);
                        self.individual_children(node, &name);
                    }
                    None => self.skip(node),
                }
                Ok(())
            }
            _ => {
                self.skip(node);
                Ok(())
            }
        }
    }
}

fn datatype_for(xsd_local: &str) -> Option<Datatype> {
    Datatype::from_name(xsd_local)
}

/// Translates a DAML+OIL RDF/XML document into an [`Ontology`].
///
/// Classes and properties referenced but never declared are declared
/// implicitly (primitive classes, object properties) with a note. The
/// resulting ontology always validates; if it would not, the import fails.
pub fn import_damlxml(doc: &[u8]) -> Result<ImportReport, ImportError> {
    let text = std::str::from_utf8(doc).map_err(ImportError::Encoding)?;
    let options = ParsingOptions {
        allow_dtd: true,
        ..ParsingOptions::default()
    };
    let document = Document::parse_with_options(text, options)?;
    let root = document.root_element();
    let mut importer = Importer {
        doc: &document,
        classes: Vec::new(),
        class_ids: HashMap::new(),
        properties: Vec::new(),
        property_ids: HashMap::new(),
        axioms: Vec::new(),
        individuals: Vec::new(),
        individual_ids: HashMap::new(),
        referenced_classes: BTreeSet::new(),
        referenced_properties: BTreeSet::new(),
        notes: Vec::new(),
        census: Census::default(),
    };
    if !is(root, RDF_NS, "RDF") {
        return Err(importer.unsupported(root, "document element must be rdf:RDF"));
    }

    let mut name = None;
    for node in elements(root) {
        if is(node, DAML_NS, "Ontology") && name.is_none() {
            if let Some(about) = node.attribute((RDF_NS, "about")) {
                let iri = importer.resolve(node, about);
                name = importer.local_name(&iri);
            }
        }
        importer.top_level(node)?;
    }

    for class in std::mem::take(&mut importer.referenced_classes) {
        if !importer.class_ids.contains_key(&class) {
            importer.notes.push(format!(
                "class {class} is referenced but not declared; declared as primitive"
            ));
            importer.declare_class(&class);
        }
    }
    for prop in std::mem::take(&mut importer.referenced_properties) {
        if !importer.property_ids.contains_key(&prop) {
            importer.notes.push(format!(
                "property {prop} is restricted but not declared; declared as object property"
            ));
            importer.declare_property(&prop, PropertyCategory::Object);
        }
    }

    let ontology = Ontology {
        name: name.unwrap_or_else(|| "imported".to_string()),
        classes: importer.classes,
        properties: importer.properties,
        axioms: importer.axioms,
        individuals: importer.individuals,
    };
    let defects = validate_ontology(&ontology);
    if let Some(first) = defects.first() {
        return Err(ImportError::Invalid {
            count: defects.len(),
            first: first.to_string(),
        });
    }
    Ok(ImportReport {
        ontology,
        translated: importer.census.translated.into_iter().collect(),
        skipped: importer
            .census
            .skipped
            .into_iter()
            .map(|(element, (count, first_location))| SkippedElement {
                element,
                count,
                first_location,
            })
            .collect(),
        notes: importer.notes,
    })
}
