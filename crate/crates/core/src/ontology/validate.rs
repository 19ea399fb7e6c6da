use std::collections::HashSet;
use std::fmt;

use super::model::{
    Axiom, ClassExpression, ClassKind, Datatype, Ontology, PropertyCategory, Restriction,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DefectKind {
    DuplicateName,
    DanglingClass,
    DanglingProperty,
    MalformedExpression,
    /// `kind` and `definition` disagree on a class.
    KindMismatch,
    UntypedIndividual,
    UnsupportedDatatype,
    /// Restriction target does not fit the property category.
    CategoryMismatch,
}

impl DefectKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DefectKind::DuplicateName => "duplicateName",
            DefectKind::DanglingClass => "danglingClass",
            DefectKind::DanglingProperty => "danglingProperty",
            DefectKind::MalformedExpression => "malformedExpression",
            DefectKind::KindMismatch => "kindMismatch",
            DefectKind::UntypedIndividual => "untypedIndividual",
            DefectKind::UnsupportedDatatype => "unsupportedDatatype",
            DefectKind::CategoryMismatch => "categoryMismatch",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OntologyDefect {
    pub kind: DefectKind,
    pub subject: String,
    pub detail: String,
}

impl fmt::Display for OntologyDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} `{}`: {}",
            self.kind.as_str(),
            self.subject,
            self.detail
        )
    }
}

struct Validator<'o> {
    ont: &'o Ontology,
    classes: HashSet<&'o str>,
    defects: Vec<OntologyDefect>,
}

impl<'o> Validator<'o> {
    fn defect(&mut self, kind: DefectKind, subject: &str, detail: String) {
        self.defects.push(OntologyDefect {
            kind,
            subject: subject.to_string(),
            detail,
        });
    }

    fn duplicates<'a>(&mut self, names: impl Iterator<Item = &'a str>, what: &str) {
        let mut seen = HashSet::new();
        for name in names {
            if !seen.insert(name) {
                self.defect(
                    DefectKind::DuplicateName,
                    name,
                    format!("{what} declared more than once"),
                );
            }
        }
    }

    fn class_ref(&mut self, name: &str, context: &str) {
        if !self.classes.contains(name) {
            self.defect(
                DefectKind::DanglingClass,
                name,
                format!("undeclared class referenced by {context}"),
            );
        }
    }

    fn expression(&mut self, expr: &ClassExpression, context: &str) {
        match expr {
            ClassExpression::Named(n) => self.class_ref(n, context),
            ClassExpression::Intersection(ms) | ClassExpression::Union(ms) => {
                if ms.len() < 2 {
                    let op = if matches!(expr, ClassExpression::Union(_)) {
                        "union"
                    } else {
                        "intersection"
                    };
                    self.defect(
                        DefectKind::MalformedExpression,
                        context,
                        format!("{op} needs at least two members, found {}", ms.len()),
                    );
                }
                for m in ms {
                    self.expression(m, context);
                }
            }
            ClassExpression::Complement(inner) => self.expression(inner, context),
            ClassExpression::Restriction(r) => self.restriction(r, context),
        }
    }

    fn restriction(&mut self, r: &Restriction, context: &str) {
        let prop = self.ont.property(&r.on_property);
        if prop.is_none() {
            self.defect(
                DefectKind::DanglingProperty,
                &r.on_property,
                format!("undeclared property restricted in {context}"),
            );
        }
        let Some(target) = r.flavor.target() else {
            return;
        };
        match prop.map(|p| p.category) {
            Some(PropertyCategory::Datatype) => {
                let ok = target
                    .as_named()
                    .is_some_and(|n| Datatype::from_name(n).is_some());
                if !ok {
                    self.defect(
                        DefectKind::CategoryMismatch,
                        &r.on_property,
                        format!(
                            "{} restriction on a datatype property must name a datatype ({context})",
                            r.flavor.keyword()
                        ),
                    );
                }
            }
            _ => self.expression(target, context),
        }
    }

    fn run(mut self) -> Vec<OntologyDefect> {
        let ont = self.ont;
        self.duplicates(ont.classes.iter().map(|c| c.name.as_str()), "class");
        self.duplicates(ont.properties.iter().map(|p| p.name.as_str()), "property");
        self.duplicates(
            ont.individuals.iter().map(|i| i.name.as_str()),
            "individual",
        );

        for class in &ont.classes {
            let context = format!("class {}", class.name);
            match (class.kind, &class.definition) {
                (ClassKind::Defined, None) => self.defect(
                    DefectKind::KindMismatch,
                    &class.name,
                    "defined class without a definition".into(),
                ),
                (ClassKind::Primitive, Some(_)) => self.defect(
                    DefectKind::KindMismatch,
                    &class.name,
                    "primitive class carries a definition".into(),
                ),
                _ => {}
            }
            if let Some(def) = &class.definition {
                self.expression(def, &context);
            }
            for r in &class.local_restrictions {
                self.restriction(r, &context);
            }
        }

        for prop in &ont.properties {
            let context = format!("property {}", prop.name);
            for d in &prop.domains {
                self.class_ref(d, &context);
            }
            if let Some(range) = &prop.range {
                match prop.category {
                    PropertyCategory::Object => self.class_ref(range, &context),
                    PropertyCategory::Datatype => {
                        if Datatype::from_name(range).is_none() {
                            self.defect(
                                DefectKind::UnsupportedDatatype,
                                range,
                                format!("range of {context} is not a supported datatype"),
                            );
                        }
                    }
                }
            }
        }

        for axiom in &ont.axioms {
            match axiom {
                Axiom::SubClassOf { sub, sup } => {
                    let context = format!("subclass axiom on {sub}");
                    self.class_ref(sub, &context);
                    self.expression(sup, &context);
                }
                Axiom::SameClassAs { class, same } => {
                    let context = format!("same-class axiom on {class}");
                    self.class_ref(class, &context);
                    self.expression(same, &context);
                }
                Axiom::DisjointWith { first, second } => {
                    let context = format!("disjoint axiom {first}/{second}");
                    self.class_ref(first, &context);
                    self.class_ref(second, &context);
                }
            }
        }

        for ind in &ont.individuals {
            let context = format!("individual {}", ind.name);
            if ind.types.is_empty() {
                self.defect(
                    DefectKind::UntypedIndividual,
                    &ind.name,
                    "individual has no type".into(),
                );
            }
            for t in &ind.types {
                self.expression(t, &context);
            }
        }
        self.defects
    }
}

/// Reports every duplicate name, dangling reference and malformed
/// expression. An empty result means the ontology is well-formed.
pub fn validate_ontology(ont: &Ontology) -> Vec<OntologyDefect> {
    Validator {
        ont,
        classes: ont.classes.iter().map(|c| c.name.as_str()).collect(),
        defects: Vec::new(),
    }
    .run()
}
