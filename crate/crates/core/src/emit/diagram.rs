use std::collections::HashMap;
use std::fmt::Write;

use crate::model::{ConceptualModel, ConstraintKind, Relationship, RelationshipKind};

struct Names<'m> {
    entities: HashMap<&'m str, &'m str>,
    relationships: HashMap<&'m str, &'m Relationship>,
}

impl<'m> Names<'m> {
    fn new(cm: &'m ConceptualModel) -> Self {
        Names {
            entities: cm
                .entity_types
                .iter()
                .map(|e| (e.id.as_str(), e.name.as_str()))
                .collect(),
            relationships: cm
                .relationships
                .iter()
                .map(|r| (r.id.as_str(), r))
                .collect(),
        }
    }

    fn entity<'a>(&self, id: &'a str) -> &'a str
    where
        'm: 'a,
    {
        self.entities.get(id).copied().unwrap_or(id)
    }

    /// Constraint member as readable text.
    fn member(&self, id: &str) -> String {
        match self.relationships.get(id) {
            Some(r) => format!(
                "{}: {} -> {}",
                r.name,
                self.entity(&r.source_id),
                self.entity(&r.target_id)
            ),
            None => self.entity(id).to_string(),
        }
    }
}

fn uml_name(name: &str) -> String {
    if name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        name.to_string()
    } else {
        format!("\"{name}\"")
    }
}

fn alias(id: &str) -> String {
    id.chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

/// PlantUML class diagram.
pub fn emit_plantuml(cm: &ConceptualModel) -> String {
    let names = Names::new(cm);
    let mut out = String::from("@startuml\n");
    for e in &cm.entity_types {
        let _ = write!(
            out,
            "class {} <<{}>>",
            uml_name(&e.name),
            e.definition_kind.as_str()
        );
        if e.attributes.is_empty() {
            out.push('\n');
            continue;
        }
        out.push_str(" {\n");
        for a in &e.attributes {
            let _ = writeln!(
                out,
                "  {} : {} [{}]",
                a.name,
                a.datatype.as_str(),
                a.multiplicity
            );
        }
        out.push_str("}\n");
    }
    for g in &cm.generalizations {
        let _ = writeln!(
            out,
            "{} <|-- {}",
            uml_name(names.entity(&g.super_id)),
            uml_name(names.entity(&g.sub_id))
        );
    }
    for r in &cm.relationships {
        let suffix = if r.exclusive { " {exclusive}" } else { "" };
        match r.kind {
            RelationshipKind::Association => {
                let _ = writeln!(
                    out,
                    "{} \"{}\" --> \"{}\" {} : {}{suffix}",
                    uml_name(names.entity(&r.source_id)),
                    r.source_mult,
                    r.target_mult,
                    uml_name(names.entity(&r.target_id)),
                    r.name
                );
            }
            RelationshipKind::Composition | RelationshipKind::Aggregation => {
                let (whole, part) = r.whole_and_part();
                let arrow = if r.kind == RelationshipKind::Composition {
                    "*--"
                } else {
                    "o--"
                };
                let _ = writeln!(
                    out,
                    "{} {arrow} {} : {}{suffix}",
                    uml_name(names.entity(whole)),
                    uml_name(names.entity(part)),
                    r.name
                );
            }
        }
    }
    for k in &cm.constraints {
        let _ = writeln!(out, "note as {}", alias(&k.id));
        let _ = writeln!(out, "  {{{}}}", k.kind.label());
        for m in &k.member_ids {
            let _ = writeln!(out, "  {}", names.member(m));
        }
        out.push_str("end note\n");
    }
    for i in &cm.instances {
        let types: Vec<&str> = i.type_ids.iter().map(|t| names.entity(t)).collect();
        let label = if types.is_empty() {
            i.name.clone()
        } else {
            format!("{} : {}", i.name, types.join(", "))
        };
        let _ = writeln!(
            out,
            "object \"{label}\" as {}",
            alias(&format!("inst:{}", i.name))
        );
    }
    out.push_str("@enduml\n");
    out
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            _ => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Graphviz digraph with the same content as [`emit_plantuml`].
pub fn emit_dot(cm: &ConceptualModel) -> String {
    let names = Names::new(cm);
    let mut out = format!("digraph {} {{\n", quote(&cm.name));
    out.push_str("  node [shape=box];\n");
    for e in &cm.entity_types {
        let mut label = format!("{}\n<<{}>>", e.name, e.definition_kind.as_str());
        for a in &e.attributes {
            let _ = write!(
                label,
                "\n{} : {} [{}]",
                a.name,
                a.datatype.as_str(),
                a.multiplicity
            );
        }
        let _ = writeln!(out, "  {} [label={}];", quote(&e.id), quote(&label));
    }
    for g in &cm.generalizations {
        let _ = writeln!(
            out,
            "  {} -> {} [arrowhead=onormal];",
            quote(&g.sub_id),
            quote(&g.super_id)
        );
    }
    for r in &cm.relationships {
        let label = if r.exclusive {
            format!("{} {{exclusive}}", r.name)
        } else {
            r.name.clone()
        };
        match r.kind {
            RelationshipKind::Association => {
                let _ = writeln!(
                    out,
                    "  {} -> {} [label={}, taillabel={}, headlabel={}];",
                    quote(&r.source_id),
                    quote(&r.target_id),
                    quote(&label),
                    quote(&r.source_mult.to_string()),
                    quote(&r.target_mult.to_string())
                );
            }
            RelationshipKind::Composition | RelationshipKind::Aggregation => {
                let (whole, part) = r.whole_and_part();
                let tail = if r.kind == RelationshipKind::Composition {
                    "diamond"
                } else {
                    "odiamond"
                };
                let _ = writeln!(
                    out,
                    "  {} -> {} [label={}, dir=back, arrowtail={tail}];",
                    quote(whole),
                    quote(part),
                    quote(&label)
                );
            }
        }
    }
    for k in &cm.constraints {
        let mut label = format!("{{{}}}", k.kind.label());
        for m in &k.member_ids {
            let _ = write!(label, "\n{}", names.member(m));
        }
        let _ = writeln!(
            out,
            "  {} [shape=note, label={}];",
            quote(&k.id),
            quote(&label)
        );
        if k.kind == ConstraintKind::Disjoint {
            for m in &k.member_ids {
                let _ = writeln!(
                    out,
                    "  {} -> {} [style=dashed, arrowhead=none];",
                    quote(&k.id),
                    quote(m)
                );
            }
        }
    }
    for i in &cm.instances {
        let id = format!("inst:{}", i.name);
        let _ = writeln!(
            out,
            "  {} [shape=ellipse, label={}];",
            quote(&id),
            quote(&i.name)
        );
        for t in &i.type_ids {
            let _ = writeln!(
                out,
                "  {} -> {} [style=dotted, label=\"instanceOf\"];",
                quote(&id),
                quote(t)
            );
        }
    }
    out.push_str("}\n");
    out
}
