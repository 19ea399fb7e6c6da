//! Canonical Ontology Text: a line-oriented ontology format.
//!
//! ```text
//! ontology tambis
//! class Protein
//! defined-class Enzyme = and(Protein, restriction(catalyses, some, Reaction))
//! objprop binds domain Protein range DNA
//! dataprop accession domain Protein range string
//! subclass Enzyme Protein
//! disjoint Protein DNA
//! restriction Protein binds only DNA
//! individual p53 type Protein
//! ```
//!
//! `#` starts a comment. References may point forward; resolution is left to
//! [`validate_ontology`](crate::ontology::validate_ontology).

use std::fmt::Write as _;

use crate::error::ParseError;
use crate::ontology::{
    Axiom, ClassDefinition, ClassExpression, ClassKind, Individual, Ontology, PropertyCategory,
    PropertyDefinition, Restriction, RestrictionFlavor,
};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    Int(u32),
    LParen,
    RParen,
    Comma,
    Equals,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    column: usize,
}

fn is_name_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '-'
}

/// True when `s` matches `[A-Za-z_][A-Za-z0-9_-]*`.
pub fn is_valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(is_name_start) && chars.all(is_name_char)
}

struct Line<'a> {
    source: &'a str,
    number: usize,
    tokens: Vec<Token>,
    pos: usize,
    end_column: usize,
}

impl<'a> Line<'a> {
    fn error(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            source_name: self.source.to_string(),
            line: self.number,
            column,
            message: message.into(),
        }
    }

    fn lex(source: &'a str, number: usize, text: &str) -> Result<Self, ParseError> {
        let chars: Vec<char> = text.chars().collect();
        let mut tokens = Vec::new();
        let mut i = 0;
        let mut line = Line {
            source,
            number,
            tokens: Vec::new(),
            pos: 0,
            end_column: chars.len() + 1,
        };
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            let tok = match c {
                c if c.is_whitespace() => {
                    i += 1;
                    continue;
                }
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                '=' => Tok::Equals,
                c if c.is_ascii_digit() => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let digits: String = chars[start..i].iter().collect();
                    let value = digits.parse().map_err(|_| {
                        line.error(column, format!("integer `{digits}` out of range"))
                    })?;
                    tokens.push(Token {
                        tok: Tok::Int(value),
                        column,
                    });
                    continue;
                }
                c if is_name_start(c) => {
                    let start = i;
                    while i < chars.len() && is_name_char(chars[i]) {
                        i += 1;
                    }
                    tokens.push(Token {
                        tok: Tok::Word(chars[start..i].iter().collect()),
                        column,
                    });
                    continue;
                }
                other => return Err(line.error(column, format!("unexpected character `{other}`"))),
            };
            tokens.push(Token { tok, column });
            i += 1;
        }
        line.tokens = tokens;
        Ok(line)
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn column(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map_or(self.end_column, |t| t.column)
    }

    fn next(&mut self, expected: &str) -> Result<Token, ParseError> {
        let t = self.tokens.get(self.pos).cloned().ok_or_else(|| {
            self.error(
                self.end_column,
                format!("expected {expected}, found end of line"),
            )
        })?;
        self.pos += 1;
        Ok(t)
    }

    fn name(&mut self, what: &str) -> Result<String, ParseError> {
        let t = self.next(what)?;
        match t.tok {
            Tok::Word(w) => Ok(w),
            _ => Err(self.error(t.column, format!("expected {what}"))),
        }
    }

    fn int(&mut self) -> Result<u32, ParseError> {
        let t = self.next("a non-negative integer")?;
        match t.tok {
            Tok::Int(v) => Ok(v),
            _ => Err(self.error(t.column, "expected a non-negative integer")),
        }
    }

    fn punct(&mut self, want: Tok, shown: &str) -> Result<(), ParseError> {
        let t = self.next(&format!("`{shown}`"))?;
        if t.tok == want {
            Ok(())
        } else {
            Err(self.error(t.column, format!("expected `{shown}`")))
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        let t = self.next(&format!("`{kw}`"))?;
        match &t.tok {
            Tok::Word(w) if w == kw => Ok(()),
            _ => Err(self.error(t.column, format!("expected `{kw}`"))),
        }
    }

    fn at_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Some(Tok::Word(w)) if w == kw)
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.pos < self.tokens.len() {
            Err(self.error(self.column(), "unexpected trailing input"))
        } else {
            Ok(())
        }
    }

    fn expression(&mut self) -> Result<ClassExpression, ParseError> {
        let start = self.column();
        let head = self.name("a class expression")?;
        if self.peek() != Some(&Tok::LParen) {
            return Ok(ClassExpression::Named(head));
        }
        match head.as_str() {
            "and" | "or" => {
                self.pos += 1;
                let mut members = vec![self.expression()?];
                while self.peek() == Some(&Tok::Comma) {
                    self.pos += 1;
                    members.push(self.expression()?);
                }
                self.punct(Tok::RParen, ")")?;
                Ok(if head == "and" {
                    ClassExpression::Intersection(members)
                } else {
                    ClassExpression::Union(members)
                })
            }
            "not" => {
                self.pos += 1;
                let inner = self.expression()?;
                self.punct(Tok::RParen, ")")?;
                Ok(ClassExpression::complement(inner))
            }
            "restriction" => {
                self.pos += 1;
                let prop = self.name("a property name")?;
                self.punct(Tok::Comma, ",")?;
                let flavor_col = self.column();
                let flavor = self.name("a restriction keyword")?;
                self.punct(Tok::Comma, ",")?;
                let flavor = self.flavor(&flavor, flavor_col)?;
                self.punct(Tok::RParen, ")")?;
                Ok(ClassExpression::restriction(Restriction::new(prop, flavor)))
            }
            other => Err(self.error(start, format!("unknown constructor `{other}(`"))),
        }
    }

    fn flavor(&mut self, keyword: &str, column: usize) -> Result<RestrictionFlavor, ParseError> {
        Ok(match keyword {
            "some" => RestrictionFlavor::HasClass(self.expression()?),
            "only" => RestrictionFlavor::ToClass(self.expression()?),
            "min" => RestrictionFlavor::MinCardinality(self.int()?),
            "max" => RestrictionFlavor::MaxCardinality(self.int()?),
            "exactly" => RestrictionFlavor::Cardinality(self.int()?),
            other => {
                return Err(self.error(
                    column,
                    format!("expected some, only, min, max or exactly, found `{other}`"),
                ))
            }
        })
    }
}

/// Parses a COT document. The first error aborts.
pub fn parse_cot(text: &str) -> Result<Ontology, ParseError> {
    parse_cot_named(text, "<input>")
}

/// Like [`parse_cot`], with `source_name` used in error messages.
pub fn parse_cot_named(text: &str, source_name: &str) -> Result<Ontology, ParseError> {
    let mut ont: Option<Ontology> = None;
    let mut pending: Vec<(String, Restriction)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut line = Line::lex(source_name, idx + 1, content)?;
        if line.tokens.is_empty() {
            continue;
        }
        let kw_col = line.column();
        let keyword = line.name("a statement keyword")?;
        let Some(ont) = ont.as_mut() else {
            if keyword != "ontology" {
                return Err(line.error(kw_col, "document must start with `ontology NAME`"));
            }
            let name = line.name("an ontology name")?;
            line.finish()?;
            ont = Some(Ontology::new(name));
            continue;
        };
        match keyword.as_str() {
            "ontology" => return Err(line.error(kw_col, "duplicate `ontology` header")),
            "class" => {
                let name = line.name("a class name")?;
                ont.classes.push(ClassDefinition::primitive(name));
            }
            "defined-class" => {
                let name = line.name("a class name")?;
                line.punct(Tok::Equals, "=")?;
                let def = line.expression()?;
                ont.classes.push(ClassDefinition::defined(name, def));
            }
            "objprop" | "dataprop" => {
                let name = line.name("a property name")?;
                let mut prop = if keyword == "objprop" {
                    PropertyDefinition::object(name)
                } else {
                    PropertyDefinition::datatype(name)
                };
                if line.at_keyword("domain") {
                    line.pos += 1;
                    prop.domains.push(line.name("a domain class")?);
                    while line.peek() == Some(&Tok::Comma) {
                        line.pos += 1;
                        prop.domains.push(line.name("a domain class")?);
                    }
                }
                if line.at_keyword("range") {
                    line.pos += 1;
                    prop.range = Some(line.name("a range")?);
                }
                ont.properties.push(prop);
            }
            "subclass" => {
                let sub = line.name("a class name")?;
                let sup = line.expression()?;
                ont.axioms.push(Axiom::subclass(sub, sup));
            }
            "same-class" => {
                let class = line.name("a class name")?;
                let same = line.expression()?;
                ont.axioms.push(Axiom::same_class(class, same));
            }
            "disjoint" => {
                let a = line.name("a class name")?;
                let b = line.name("a class name")?;
                ont.axioms.push(Axiom::disjoint(a, b));
            }
            "restriction" => {
                let class = line.name("a class name")?;
                let prop = line.name("a property name")?;
                let col = line.column();
                let kw = line.name("a restriction keyword")?;
                let flavor = line.flavor(&kw, col)?;
                pending.push((class, Restriction::new(prop, flavor)));
            }
            "individual" => {
                let name = line.name("an individual name")?;
                line.keyword("type")?;
                let mut types = vec![line.expression()?];
                while line.peek() == Some(&Tok::Comma) {
                    line.pos += 1;
                    types.push(line.expression()?);
                }
                ont.individuals.push(Individual::new(name, types));
            }
            other => return Err(line.error(kw_col, format!("unknown statement `{other}`"))),
        }
        line.finish()?;
    }

    let mut ont = ont.ok_or_else(|| ParseError {
        source_name: source_name.to_string(),
        line: text.lines().count().max(1),
        column: 1,
        message: "missing `ontology NAME` header".into(),
    })?;
    for (class, restriction) in pending {
        match ont.classes.iter_mut().find(|c| c.name == class) {
            Some(c) => c.local_restrictions.push(restriction),
            None => ont.axioms.push(Axiom::subclass(
                class,
                ClassExpression::restriction(restriction),
            )),
        }
    }
    Ok(ont)
}

fn write_expr(out: &mut String, expr: &ClassExpression) {
    match expr {
        ClassExpression::Named(n) => out.push_str(n),
        ClassExpression::Intersection(ms) | ClassExpression::Union(ms) => {
            out.push_str(if matches!(expr, ClassExpression::Union(_)) {
                "or("
            } else {
                "and("
            });
            for (i, m) in ms.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_expr(out, m);
            }
            out.push(')');
        }
        ClassExpression::Complement(inner) => {
            out.push_str("not(");
            write_expr(out, inner);
            out.push(')');
        }
        ClassExpression::Restriction(r) => {
            let _ = write!(
                out,
                "restriction({}, {}, ",
                r.on_property,
                r.flavor.keyword()
            );
            write_flavor_value(out, &r.flavor);
            out.push(')');
        }
    }
}

fn write_flavor_value(out: &mut String, flavor: &RestrictionFlavor) {
    match flavor {
        RestrictionFlavor::HasClass(t) | RestrictionFlavor::ToClass(t) => write_expr(out, t),
        RestrictionFlavor::Cardinality(k)
        | RestrictionFlavor::MinCardinality(k)
        | RestrictionFlavor::MaxCardinality(k) => {
            let _ = write!(out, "{k}");
        }
    }
}

/// Renders a class expression in COT syntax.
pub fn expression_to_string(expr: &ClassExpression) -> String {
    let mut s = String::new();
    write_expr(&mut s, expr);
    s
}

/// Emits canonical COT: classes, properties, axioms, restrictions and
/// individuals, each group sorted lexicographically.
pub fn serialize_cot(ont: &Ontology) -> String {
    let mut classes = Vec::new();
    let mut restrictions = Vec::new();
    for c in &ont.classes {
        match (c.kind, &c.definition) {
            (ClassKind::Defined, Some(def)) => classes.push(format!(
                "defined-class {} = {}",
                c.name,
                expression_to_string(def)
            )),
            _ => classes.push(format!("class {}", c.name)),
        }
        for r in &c.local_restrictions {
            let mut line = format!(
                "restriction {} {} {} ",
                c.name,
                r.on_property,
                r.flavor.keyword()
            );
            write_flavor_value(&mut line, &r.flavor);
            restrictions.push(line);
        }
    }
    let mut properties: Vec<String> = ont
        .properties
        .iter()
        .map(|p| {
            let mut line = String::from(match p.category {
                PropertyCategory::Object => "objprop ",
                PropertyCategory::Datatype => "dataprop ",
            });
            line.push_str(&p.name);
            if !p.domains.is_empty() {
                line.push_str(" domain ");
                line.push_str(&p.domains.join(", "));
            }
            if let Some(r) = &p.range {
                line.push_str(" range ");
                line.push_str(r);
            }
            line
        })
        .collect();
    let mut axioms: Vec<String> = ont
        .axioms
        .iter()
        .map(|a| match a {
            Axiom::SubClassOf { sub, sup } => {
                format!("subclass {sub} {}", expression_to_string(sup))
            }
            Axiom::SameClassAs { class, same } => {
                format!("same-class {class} {}", expression_to_string(same))
            }
            Axiom::DisjointWith { first, second } => format!("disjoint {first} {second}"),
        })
        .collect();
    let mut individuals: Vec<String> = ont
        .individuals
        .iter()
        .map(|i| {
            let types: Vec<String> = i.types.iter().map(expression_to_string).collect();
            format!("individual {} type {}", i.name, types.join(", "))
        })
        .collect();

    let mut out = format!("ontology {}\n", ont.name);
    for group in [
        &mut classes,
        &mut properties,
        &mut axioms,
        &mut restrictions,
        &mut individuals,
    ] {
        group.sort();
        for line in group.iter() {
            out.push_str(line);
            out.push('\n');
        }
    }
    out
}
