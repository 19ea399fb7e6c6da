use std::collections::{BTreeMap, HashMap};

use super::hierarchy::taxonomy_edges;
use super::model::{Axiom, ClassDefinition, ClassExpression, Individual, Ontology};

/// Maps each collapsed class name to the representative that absorbed it.
/// Representatives never appear as keys.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AliasMap(BTreeMap<String, String>);

impl AliasMap {
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, alias: &str) -> Option<&str> {
        self.0.get(alias).map(String::as_str)
    }

    pub fn resolve<'a>(&'a self, name: &'a str) -> &'a str {
        self.get(name).unwrap_or(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.0.iter().map(|(a, r)| (a.as_str(), r.as_str()))
    }
}

/// One cycle of mutually subsuming classes merged into a single class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapsedCycle {
    pub representative: String,
    /// All members, representative included, sorted by name.
    pub members: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collapsed {
    pub ontology: Ontology,
    pub aliases: AliasMap,
    pub cycles: Vec<CollapsedCycle>,
}

/// Strongly connected components of a digraph given as adjacency lists
/// (iterative Tarjan). Components come out in reverse topological order.
pub(crate) fn strongly_connected(adjacency: &[Vec<usize>]) -> Vec<Vec<usize>> {
    const UNVISITED: usize = usize::MAX;
    let n = adjacency.len();
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut components = Vec::new();
    let mut next = 0;

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        let mut work = vec![(root, 0usize)];
        while let Some(&mut (v, ref mut child)) = work.last_mut() {
            if *child == 0 && index[v] == UNVISITED {
                index[v] = next;
                low[v] = next;
                next += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if let Some(&w) = adjacency[v].get(*child) {
                *child += 1;
                if index[w] == UNVISITED {
                    work.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            work.pop();
            if let Some(&(parent, _)) = work.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut component = Vec::new();
                while let Some(w) = stack.pop() {
                    on_stack[w] = false;
                    component.push(w);
                    if w == v {
                        break;
                    }
                }
                components.push(component);
            }
        }
    }
    components
}

/// Merges every cycle of asserted named superclass edges into its
/// lexicographically least member and re-points all references.
///
/// `sameClassAs(A, B)` with both named is kept as an axiom; it only
/// disappears when it closes a cycle. Alias definitions survive as
/// `sameClassAs(representative, definition)` axioms and alias restrictions
/// move to the representative.
pub fn collapse_equivalences(ont: &Ontology) -> Collapsed {
    let ids: HashMap<&str, usize> = ont
        .classes
        .iter()
        .enumerate()
        .map(|(i, c)| (c.name.as_str(), i))
        .collect();
    let mut adjacency = vec![Vec::new(); ont.classes.len()];
    for edge in taxonomy_edges(ont) {
        if let (Some(&a), Some(&b)) = (ids.get(edge.sub), ids.get(edge.sup)) {
            adjacency[a].push(b);
        }
    }

    let mut aliases = BTreeMap::new();
    let mut cycles = Vec::new();
    for component in strongly_connected(&adjacency) {
        if component.len() < 2 {
            continue;
        }
        let mut members: Vec<String> = component
            .iter()
            .map(|&i| ont.classes[i].name.clone())
            .collect();
        members.sort();
        let representative = members[0].clone();
        for alias in &members[1..] {
            aliases.insert(alias.clone(), representative.clone());
        }
        cycles.push(CollapsedCycle {
            representative,
            members,
        });
    }
    cycles.sort_by(|a, b| a.representative.cmp(&b.representative));

    if aliases.is_empty() {
        return Collapsed {
            ontology: ont.clone(),
            aliases: AliasMap::default(),
            cycles,
        };
    }

    let rename = |n: &str| aliases.get(n).cloned().unwrap_or_else(|| n.to_string());
    let mut out = Ontology::new(ont.name.clone());
    let mut extra_axioms = Vec::new();
    let mut merged_restrictions: BTreeMap<String, Vec<_>> = BTreeMap::new();
    for class in &ont.classes {
        let restrictions: Vec<_> = class
            .local_restrictions
            .iter()
            .map(|r| r.map_names(&rename))
            .collect();
        if let Some(rep) = aliases.get(&class.name) {
            merged_restrictions
                .entry(rep.clone())
                .or_default()
                .extend(restrictions);
            if let Some(def) = &class.definition {
                extra_axioms.push(Axiom::same_class(rep.clone(), def.map_names(&rename)));
            }
            continue;
        }
        out.classes.push(ClassDefinition {
            name: class.name.clone(),
            kind: class.kind,
            definition: class.definition.as_ref().map(|d| d.map_names(&rename)),
            local_restrictions: restrictions,
        });
    }
    for class in &mut out.classes {
        if let Some(extra) = merged_restrictions.remove(&class.name) {
            for r in extra {
                if !class.local_restrictions.contains(&r) {
                    class.local_restrictions.push(r);
                }
            }
        }
    }

    for prop in &ont.properties {
        let mut p = prop.clone();
        if !p.is_datatype() {
            p.range = p.range.as_deref().map(rename);
        }
        let mut domains: Vec<String> = Vec::new();
        for d in &prop.domains {
            let d = rename(d);
            if !domains.contains(&d) {
                domains.push(d);
            }
        }
        p.domains = domains;
        out.properties.push(p);
    }

    for axiom in ont.axioms.iter().cloned().chain(extra_axioms) {
        let axiom = match axiom {
            Axiom::SubClassOf { sub, sup } => Axiom::SubClassOf {
                sub: rename(&sub),
                sup: sup.map_names(&rename),
            },
            Axiom::SameClassAs { class, same } => Axiom::SameClassAs {
                class: rename(&class),
                same: same.map_names(&rename),
            },
            Axiom::DisjointWith { first, second } => Axiom::DisjointWith {
                first: rename(&first),
                second: rename(&second),
            },
        };
        let self_loop = match &axiom {
            Axiom::SubClassOf {
                sub,
                sup: ClassExpression::Named(n),
            } => sub == n,
            Axiom::SameClassAs {
                class,
                same: ClassExpression::Named(n),
            } => class == n,
            _ => false,
        };
        if !self_loop && !out.axioms.contains(&axiom) {
            out.axioms.push(axiom);
        }
    }

    out.individuals = ont
        .individuals
        .iter()
        .map(|i| Individual {
            name: i.name.clone(),
            types: i.types.iter().map(|t| t.map_names(&rename)).collect(),
        })
        .collect();

    Collapsed {
        ontology: out,
        aliases: AliasMap(aliases),
        cycles,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(edges: &[(&str, &str)], classes: &[&str]) -> Ontology {
        let mut ont = Ontology::new("t");
        for c in classes {
            ont.classes.push(ClassDefinition::primitive(*c));
        }
        for (a, b) in edges {
            ont.axioms
                .push(Axiom::subclass(*a, ClassExpression::named(*b)));
        }
        ont
    }

    #[test]
    fn two_cycle_collapses_to_least_name() {
        let ont = chain(&[("A", "B"), ("B", "A")], &["A", "B"]);
        let c = collapse_equivalences(&ont);
        assert_eq!(c.ontology.classes.len(), 1);
        assert_eq!(c.ontology.classes[0].name, "A");
        assert_eq!(c.aliases.iter().collect::<Vec<_>>(), vec![("B", "A")]);
        assert!(c.ontology.axioms.is_empty());
        assert_eq!(c.cycles.len(), 1);
    }

    #[test]
    fn acyclic_hierarchy_is_unchanged() {
        let ont = chain(&[("A", "B"), ("B", "C")], &["A", "B", "C"]);
        let c = collapse_equivalences(&ont);
        assert_eq!(c.ontology, ont);
        assert!(c.aliases.is_empty());
        assert!(c.cycles.is_empty());
    }

    #[test]
    fn three_cycle_collapses() {
        let ont = chain(&[("A", "B"), ("B", "C"), ("C", "A")], &["C", "B", "A"]);
        let c = collapse_equivalences(&ont);
        let names: Vec<_> = c.ontology.classes.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, vec!["A"]);
        assert_eq!(
            c.aliases.iter().collect::<Vec<_>>(),
            vec![("B", "A"), ("C", "A")]
        );
    }

    #[test]
    fn references_are_repointed() {
        use crate::ontology::model::{PropertyDefinition, Restriction};
        let mut ont = chain(&[("B", "C"), ("C", "B"), ("D", "C")], &["B", "C", "D"]);
        ont.properties.push(
            PropertyDefinition::object("p")
                .with_domain("C")
                .with_domain("B")
                .with_range("C"),
        );
        ont.classes[1]
            .local_restrictions
            .push(Restriction::has_class("p", ClassExpression::named("D")));
        let c = collapse_equivalences(&ont);
        assert_eq!(c.ontology.properties[0].domains, vec!["B".to_string()]);
        assert_eq!(c.ontology.properties[0].range.as_deref(), Some("B"));
        assert_eq!(c.ontology.classes[0].local_restrictions.len(), 1);
        assert_eq!(
            c.ontology.axioms,
            vec![Axiom::subclass("D", ClassExpression::named("B"))]
        );
    }

    #[test]
    fn tarjan_on_small_graph() {
        let adj = vec![vec![1], vec![2], vec![0, 3], vec![]];
        let mut comps: Vec<Vec<usize>> = strongly_connected(&adj)
            .into_iter()
            .map(|mut c| {
                c.sort();
                c
            })
            .collect();
        comps.sort();
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3]]);
    }
}
