use std::collections::{BTreeSet, HashMap, VecDeque};

use super::model::{
    Axiom, ClassExpression, Ontology, PropertyDefinition, Restriction, SuperclassParts,
};
use crate::error::OntologyError;

/// Where an asserted superclass edge came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeSource {
    SubClassOf,
    SameClassAs,
    /// Named conjunct of a defined class's definition.
    Definition,
    /// Named member of a union used as a class definition; the member is the subclass.
    UnionMember,
}

impl EdgeSource {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeSource::SubClassOf => "subClassOf",
            EdgeSource::SameClassAs => "sameClassAs",
            EdgeSource::Definition => "definition",
            EdgeSource::UnionMember => "unionOf",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaxonomyEdge<'o> {
    pub sub: &'o str,
    pub sup: &'o str,
    pub source: EdgeSource,
}

/// Every asserted named superclass edge, in statement order. Self-loops are omitted.
pub fn taxonomy_edges<'o>(ont: &'o Ontology) -> Vec<TaxonomyEdge<'o>> {
    let mut edges = Vec::new();
    let mut push = |sub: &'o str, sup: &'o str, source| {
        if sub != sup {
            edges.push(TaxonomyEdge { sub, sup, source });
        }
    };
    for class in &ont.classes {
        match &class.definition {
            Some(ClassExpression::Union(members)) => {
                for m in members {
                    if let Some(n) = m.as_named() {
                        push(n, class.name.as_str(), EdgeSource::UnionMember);
                    }
                }
            }
            Some(def) => {
                for n in SuperclassParts::of(def).named {
                    push(class.name.as_str(), n, EdgeSource::Definition);
                }
            }
            None => {}
        }
    }
    for axiom in &ont.axioms {
        match axiom {
            Axiom::SubClassOf { sub, sup } => {
                for n in SuperclassParts::of(sup).named {
                    push(sub.as_str(), n, EdgeSource::SubClassOf);
                }
            }
            Axiom::SameClassAs { class, same } => {
                for n in SuperclassParts::of(same).named {
                    push(class.as_str(), n, EdgeSource::SameClassAs);
                }
            }
            Axiom::DisjointWith { .. } => {}
        }
    }
    edges
}

/// Restrictions a class carries directly: its local restrictions plus
/// restriction conjuncts of its superclass, equivalence and definition expressions.
pub fn direct_restrictions(ont: &Ontology) -> HashMap<&str, Vec<&Restriction>> {
    let mut out: HashMap<&str, Vec<&Restriction>> = HashMap::new();
    for class in &ont.classes {
        let entry = out.entry(class.name.as_str()).or_default();
        entry.extend(class.local_restrictions.iter());
        if let Some(def) = &class.definition {
            if !matches!(def, ClassExpression::Union(_)) {
                entry.extend(SuperclassParts::of(def).restrictions);
            }
        }
    }
    for axiom in &ont.axioms {
        let (class, expr) = match axiom {
            Axiom::SubClassOf { sub, sup } => (sub, sup),
            Axiom::SameClassAs { class, same } => (class, same),
            Axiom::DisjointWith { .. } => continue,
        };
        out.entry(class.as_str())
            .or_default()
            .extend(SuperclassParts::of(expr).restrictions);
    }
    for list in out.values_mut() {
        let mut seen = BTreeSet::new();
        list.retain(|r| seen.insert(*r));
    }
    out
}

/// How a property or restriction reaches a class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Origin {
    DirectDomain,
    InheritedDomain,
    DirectRestriction,
    InheritedRestriction,
}

impl Origin {
    pub fn is_inherited(self) -> bool {
        matches!(self, Origin::InheritedDomain | Origin::InheritedRestriction)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Origin::DirectDomain => "direct-domain",
            Origin::InheritedDomain => "inherited-domain",
            Origin::DirectRestriction => "direct-restriction",
            Origin::InheritedRestriction => "inherited-restriction",
        }
    }
}

/// A restriction reachable from a class, with the class that declares it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourcedRestriction<'o> {
    pub restriction: &'o Restriction,
    pub origin: Origin,
    pub declared_by: &'o str,
}

/// Indexed view of the asserted class hierarchy of one ontology.
///
/// Built once and queried per class; all lookups assume the ontology has
/// been validated. Unknown names in edges and domains are ignored.
pub struct Hierarchy<'o> {
    ont: &'o Ontology,
    class_ids: HashMap<&'o str, usize>,
    supers: Vec<Vec<usize>>,
    subs: Vec<Vec<usize>>,
    restrictions: Vec<Vec<&'o Restriction>>,
    domain_properties: Vec<Vec<usize>>,
}

impl<'o> Hierarchy<'o> {
    pub fn new(ont: &'o Ontology) -> Self {
        let class_ids: HashMap<&str, usize> = ont
            .classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.name.as_str(), i))
            .collect();
        let n = ont.classes.len();
        let mut supers = vec![BTreeSet::new(); n];
        let mut subs = vec![BTreeSet::new(); n];
        for edge in taxonomy_edges(ont) {
            if let (Some(&a), Some(&b)) = (class_ids.get(edge.sub), class_ids.get(edge.sup)) {
                supers[a].insert(b);
                subs[b].insert(a);
            }
        }
        let mut direct = direct_restrictions(ont);
        let restrictions = ont
            .classes
            .iter()
            .map(|c| direct.remove(c.name.as_str()).unwrap_or_default())
            .collect();
        let mut domain_properties = vec![Vec::new(); n];
        for (pi, prop) in ont.properties.iter().enumerate() {
            for d in &prop.domains {
                if let Some(&ci) = class_ids.get(d.as_str()) {
                    if !domain_properties[ci].contains(&pi) {
                        domain_properties[ci].push(pi);
                    }
                }
            }
        }
        Hierarchy {
            ont,
            class_ids,
            supers: supers
                .into_iter()
                .map(|s| s.into_iter().collect())
                .collect(),
            subs: subs.into_iter().map(|s| s.into_iter().collect()).collect(),
            restrictions,
            domain_properties,
        }
    }

    pub fn ontology(&self) -> &'o Ontology {
        self.ont
    }

    pub fn class_id(&self, name: &str) -> Option<usize> {
        self.class_ids.get(name).copied()
    }

    fn require(&self, name: &str) -> Result<usize, OntologyError> {
        self.class_id(name)
            .ok_or_else(|| OntologyError::UnknownClass(name.to_string()))
    }

    pub fn class_name(&self, id: usize) -> &'o str {
        &self.ont.classes[id].name
    }

    fn closure(&self, start: usize, edges: &[Vec<usize>]) -> Vec<usize> {
        let mut seen = vec![false; edges.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut out = Vec::new();
        while let Some(c) = queue.pop_front() {
            for &next in &edges[c] {
                if !seen[next] {
                    seen[next] = true;
                    out.push(next);
                    queue.push_back(next);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Transitive asserted superclasses, excluding the class itself.
    pub fn ancestors(&self, id: usize) -> Vec<usize> {
        self.closure(id, &self.supers)
    }

    /// Transitive asserted subclasses, excluding the class itself.
    pub fn descendants(&self, id: usize) -> Vec<usize> {
        self.closure(id, &self.subs)
    }

    pub fn is_ancestor_or_self(&self, ancestor: &str, of: &str) -> bool {
        match (self.class_id(ancestor), self.class_id(of)) {
            (Some(a), Some(c)) => a == c || self.ancestors(c).contains(&a),
            _ => false,
        }
    }

    pub fn direct_restrictions_of(&self, id: usize) -> &[&'o Restriction] {
        &self.restrictions[id]
    }

    /// Every property reaching `class` by domain or restriction, sorted by
    /// property name and then origin.
    pub fn effective_properties(
        &self,
        class: &str,
    ) -> Result<Vec<(&'o PropertyDefinition, Origin)>, OntologyError> {
        let id = self.require(class)?;
        let mut found: BTreeSet<(&str, Origin)> = BTreeSet::new();
        let mut visit = |cid: usize, domain: Origin, restriction: Origin| {
            for &pi in &self.domain_properties[cid] {
                found.insert((self.ont.properties[pi].name.as_str(), domain));
            }
            for r in &self.restrictions[cid] {
                found.insert((r.on_property.as_str(), restriction));
            }
        };
        visit(id, Origin::DirectDomain, Origin::DirectRestriction);
        for a in self.ancestors(id) {
            visit(a, Origin::InheritedDomain, Origin::InheritedRestriction);
        }
        Ok(found
            .into_iter()
            .filter_map(|(name, origin)| self.ont.property(name).map(|p| (p, origin)))
            .collect())
    }

    /// Distinct property names reaching `class`.
    pub fn property_count(&self, class: &str) -> Result<usize, OntologyError> {
        let props = self.effective_properties(class)?;
        Ok(props
            .iter()
            .map(|(p, _)| p.name.as_str())
            .collect::<BTreeSet<_>>()
            .len())
    }

    /// Restrictions reaching the class with their declaring class, in
    /// declaration order: own restrictions first, then each ancestor's.
    pub fn sourced_restrictions(&self, id: usize) -> Vec<SourcedRestriction<'o>> {
        let mut out: Vec<SourcedRestriction<'o>> = self.restrictions[id]
            .iter()
            .map(|r| SourcedRestriction {
                restriction: r,
                origin: Origin::DirectRestriction,
                declared_by: self.class_name(id),
            })
            .collect();
        for a in self.ancestors(id) {
            out.extend(self.restrictions[a].iter().map(|r| SourcedRestriction {
                restriction: r,
                origin: Origin::InheritedRestriction,
                declared_by: self.class_name(a),
            }));
        }
        out
    }

    /// Distinct `(restriction, origin)` pairs reaching `class`, sorted by
    /// property name, origin, then restriction.
    pub fn effective_restrictions(
        &self,
        class: &str,
    ) -> Result<Vec<(Restriction, Origin)>, OntologyError> {
        let id = self.require(class)?;
        let set: BTreeSet<(&str, Origin, &Restriction)> = self
            .sourced_restrictions(id)
            .into_iter()
            .map(|s| (s.restriction.on_property.as_str(), s.origin, s.restriction))
            .collect();
        Ok(set
            .into_iter()
            .map(|(_, origin, r)| (r.clone(), origin))
            .collect())
    }
}
