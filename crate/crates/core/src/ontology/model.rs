use std::fmt;

/// Datatypes an attribute or datatype property range may carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Datatype {
    String,
    Integer,
    Decimal,
    Boolean,
    Date,
}

impl Datatype {
    pub const ALL: [Datatype; 5] = [
        Datatype::String,
        Datatype::Integer,
        Datatype::Decimal,
        Datatype::Boolean,
        Datatype::Date,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Datatype::String => "string",
            Datatype::Integer => "integer",
            Datatype::Decimal => "decimal",
            Datatype::Boolean => "boolean",
            Datatype::Date => "date",
        }
    }

    pub fn from_name(name: &str) -> Option<Datatype> {
        Datatype::ALL.into_iter().find(|d| d.as_str() == name)
    }
}

impl fmt::Display for Datatype {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A parsed domain ontology: concepts, properties, axioms and individuals.
///
/// Restrictions live on the classes they constrain
/// ([`ClassDefinition::local_restrictions`]) or inside class expressions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Ontology {
    pub name: String,
    pub classes: Vec<ClassDefinition>,
    pub properties: Vec<PropertyDefinition>,
    pub axioms: Vec<Axiom>,
    pub individuals: Vec<Individual>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassKind {
    Primitive,
    Defined,
}

impl ClassKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassKind::Primitive => "primitive",
            ClassKind::Defined => "defined",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassDefinition {
    pub name: String,
    pub kind: ClassKind,
    /// Necessary and sufficient membership condition; present iff `kind` is defined.
    pub definition: Option<ClassExpression>,
    pub local_restrictions: Vec<Restriction>,
}

impl ClassDefinition {
    pub fn primitive(name: impl Into<String>) -> Self {
        ClassDefinition {
            name: name.into(),
            kind: ClassKind::Primitive,
            definition: None,
            local_restrictions: Vec::new(),
        }
    }

    pub fn defined(name: impl Into<String>, definition: ClassExpression) -> Self {
        ClassDefinition {
            name: name.into(),
            kind: ClassKind::Defined,
            definition: Some(definition),
            local_restrictions: Vec::new(),
        }
    }

    pub fn with_restriction(mut self, restriction: Restriction) -> Self {
        self.local_restrictions.push(restriction);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassExpression {
    Named(String),
    Intersection(Vec<ClassExpression>),
    Union(Vec<ClassExpression>),
    Complement(Box<ClassExpression>),
    Restriction(Box<Restriction>),
}

impl ClassExpression {
    pub fn named(name: impl Into<String>) -> Self {
        ClassExpression::Named(name.into())
    }

    pub fn restriction(restriction: Restriction) -> Self {
        ClassExpression::Restriction(Box::new(restriction))
    }

    pub fn complement(inner: ClassExpression) -> Self {
        ClassExpression::Complement(Box::new(inner))
    }

    pub fn as_named(&self) -> Option<&str> {
        match self {
            ClassExpression::Named(n) => Some(n),
            _ => None,
        }
    }

    /// Visits every class name referenced anywhere in the expression,
    /// including inside nested restriction targets.
    pub fn for_each_class_name<'a>(&'a self, f: &mut impl FnMut(&'a str)) {
        match self {
            ClassExpression::Named(n) => f(n),
            ClassExpression::Intersection(ms) | ClassExpression::Union(ms) => {
                for m in ms {
                    m.for_each_class_name(f);
                }
            }
            ClassExpression::Complement(inner) => inner.for_each_class_name(f),
            ClassExpression::Restriction(r) => {
                if let Some(target) = r.flavor.target() {
                    target.for_each_class_name(f);
                }
            }
        }
    }

    /// Rewrites every class name with `f`.
    pub fn map_names(&self, f: &impl Fn(&str) -> String) -> ClassExpression {
        match self {
            ClassExpression::Named(n) => ClassExpression::Named(f(n)),
            ClassExpression::Intersection(ms) => {
                ClassExpression::Intersection(ms.iter().map(|m| m.map_names(f)).collect())
            }
            ClassExpression::Union(ms) => {
                ClassExpression::Union(ms.iter().map(|m| m.map_names(f)).collect())
            }
            ClassExpression::Complement(inner) => ClassExpression::complement(inner.map_names(f)),
            ClassExpression::Restriction(r) => ClassExpression::restriction(r.map_names(f)),
        }
    }

    pub fn contains_complement(&self) -> bool {
        match self {
            ClassExpression::Named(_) => false,
            ClassExpression::Complement(_) => true,
            ClassExpression::Intersection(ms) | ClassExpression::Union(ms) => {
                ms.iter().any(ClassExpression::contains_complement)
            }
            ClassExpression::Restriction(r) => r
                .flavor
                .target()
                .is_some_and(ClassExpression::contains_complement),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PropertyCategory {
    Object,
    Datatype,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PropertyDefinition {
    pub name: String,
    pub category: PropertyCategory,
    pub domains: Vec<String>,
    /// A class name for object properties, a datatype name for datatype properties.
    pub range: Option<String>,
}

impl PropertyDefinition {
    pub fn object(name: impl Into<String>) -> Self {
        PropertyDefinition {
            name: name.into(),
            category: PropertyCategory::Object,
            domains: Vec::new(),
            range: None,
        }
    }

    pub fn datatype(name: impl Into<String>) -> Self {
        PropertyDefinition {
            name: name.into(),
            category: PropertyCategory::Datatype,
            domains: Vec::new(),
            range: None,
        }
    }

    pub fn with_domain(mut self, class: impl Into<String>) -> Self {
        self.domains.push(class.into());
        self
    }

    pub fn with_range(mut self, range: impl Into<String>) -> Self {
        self.range = Some(range.into());
        self
    }

    pub fn is_datatype(&self) -> bool {
        self.category == PropertyCategory::Datatype
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Restriction {
    pub on_property: String,
    pub flavor: RestrictionFlavor,
}

impl Restriction {
    pub fn new(on_property: impl Into<String>, flavor: RestrictionFlavor) -> Self {
        Restriction {
            on_property: on_property.into(),
            flavor,
        }
    }

    pub fn has_class(on_property: impl Into<String>, target: ClassExpression) -> Self {
        Restriction::new(on_property, RestrictionFlavor::HasClass(target))
    }

    pub fn to_class(on_property: impl Into<String>, target: ClassExpression) -> Self {
        Restriction::new(on_property, RestrictionFlavor::ToClass(target))
    }

    pub fn map_names(&self, f: &impl Fn(&str) -> String) -> Restriction {
        let flavor = match &self.flavor {
            RestrictionFlavor::HasClass(t) => RestrictionFlavor::HasClass(t.map_names(f)),
            RestrictionFlavor::ToClass(t) => RestrictionFlavor::ToClass(t.map_names(f)),
            other => other.clone(),
        };
        Restriction {
            on_property: self.on_property.clone(),
            flavor,
        }
    }
}

/// `HasClass` is the existential ("some") restriction, `ToClass` the universal ("only") one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RestrictionFlavor {
    HasClass(ClassExpression),
    ToClass(ClassExpression),
    Cardinality(u32),
    MinCardinality(u32),
    MaxCardinality(u32),
}

impl RestrictionFlavor {
    pub fn target(&self) -> Option<&ClassExpression> {
        match self {
            RestrictionFlavor::HasClass(t) | RestrictionFlavor::ToClass(t) => Some(t),
            _ => None,
        }
    }

    pub fn keyword(&self) -> &'static str {
        match self {
            RestrictionFlavor::HasClass(_) => "some",
            RestrictionFlavor::ToClass(_) => "only",
            RestrictionFlavor::Cardinality(_) => "exactly",
            RestrictionFlavor::MinCardinality(_) => "min",
            RestrictionFlavor::MaxCardinality(_) => "max",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    SubClassOf {
        sub: String,
        sup: ClassExpression,
    },
    SameClassAs {
        class: String,
        same: ClassExpression,
    },
    DisjointWith {
        first: String,
        second: String,
    },
}

impl Axiom {
    pub fn subclass(sub: impl Into<String>, sup: ClassExpression) -> Self {
        Axiom::SubClassOf {
            sub: sub.into(),
            sup,
        }
    }

    pub fn same_class(class: impl Into<String>, same: ClassExpression) -> Self {
        Axiom::SameClassAs {
            class: class.into(),
            same,
        }
    }

    pub fn disjoint(first: impl Into<String>, second: impl Into<String>) -> Self {
        Axiom::DisjointWith {
            first: first.into(),
            second: second.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Individual {
    pub name: String,
    pub types: Vec<ClassExpression>,
}

impl Individual {
    pub fn new(name: impl Into<String>, types: Vec<ClassExpression>) -> Self {
        Individual {
            name: name.into(),
            types,
        }
    }
}

impl Ontology {
    pub fn new(name: impl Into<String>) -> Self {
        Ontology {
            name: name.into(),
            ..Ontology::default()
        }
    }

    pub fn class(&self, name: &str) -> Option<&ClassDefinition> {
        self.classes.iter().find(|c| c.name == name)
    }

    pub fn property(&self, name: &str) -> Option<&PropertyDefinition> {
        self.properties.iter().find(|p| p.name == name)
    }

    /// Returns a copy with every collection sorted, so two ontologies that
    /// differ only in statement order compare equal.
    pub fn canonical(&self) -> Ontology {
        let mut out = self.clone();
        for class in &mut out.classes {
            class.local_restrictions.sort();
        }
        out.classes.sort();
        out.properties.sort();
        out.axioms.sort();
        out.individuals.sort();
        out
    }

    /// Structural equality up to statement order.
    pub fn equivalent(&self, other: &Ontology) -> bool {
        self.canonical() == other.canonical()
    }

    /// Moves `subClassOf(C, restriction)` axioms into `C`'s local restrictions.
    /// Axioms naming an undeclared class are left in place so validation still reports them.
    pub fn normalize_restrictions(&self) -> Ontology {
        let mut out = self.clone();
        let mut kept = Vec::with_capacity(out.axioms.len());
        for axiom in std::mem::take(&mut out.axioms) {
            if let Axiom::SubClassOf {
                sub,
                sup: ClassExpression::Restriction(r),
            } = &axiom
            {
                if let Some(class) = out.classes.iter_mut().find(|c| &c.name == sub) {
                    if !class.local_restrictions.contains(r) {
                        class.local_restrictions.push((**r).clone());
                    }
                    continue;
                }
            }
            kept.push(axiom);
        }
        out.axioms = kept;
        out
    }
}

/// Pieces of a class expression used in superclass position.
///
/// Intersections are flattened; named conjuncts become superclasses and
/// restriction conjuncts become laws on the subclass. Anything else
/// (unions, complements) is residue with no structural reading.
#[derive(Debug, Default)]
pub struct SuperclassParts<'a> {
    pub named: Vec<&'a str>,
    pub restrictions: Vec<&'a Restriction>,
    pub residue: Vec<&'a ClassExpression>,
}

impl<'a> SuperclassParts<'a> {
    pub fn of(expr: &'a ClassExpression) -> Self {
        let mut parts = SuperclassParts::default();
        parts.collect(expr);
        parts
    }

    fn collect(&mut self, expr: &'a ClassExpression) {
        match expr {
            ClassExpression::Named(n) => self.named.push(n),
            ClassExpression::Restriction(r) => self.restrictions.push(r),
            ClassExpression::Intersection(ms) => {
                for m in ms {
                    self.collect(m);
                }
            }
            ClassExpression::Union(_) | ClassExpression::Complement(_) => self.residue.push(expr),
        }
    }
}
