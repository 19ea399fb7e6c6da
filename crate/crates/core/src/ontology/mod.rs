//! In-memory ontology model.
//!
//! Holds the concepts, properties, restrictions, individuals and axioms of a
//! source ontology, together with referential validation, collapse of
//! subsumption cycles, and resolution of inherited properties and
//! restrictions over the asserted hierarchy. No description-logic inference
//! happens here: subsumption is whatever the axioms state.

mod collapse;
mod hierarchy;
mod model;
mod validate;

pub(crate) use collapse::strongly_connected;
pub use collapse::{collapse_equivalences, AliasMap, Collapsed, CollapsedCycle};
pub use hierarchy::{
    direct_restrictions, taxonomy_edges, EdgeSource, Hierarchy, Origin, SourcedRestriction,
    TaxonomyEdge,
};
pub use model::{
    Axiom, ClassDefinition, ClassExpression, ClassKind, Datatype, Individual, Ontology,
    PropertyCategory, PropertyDefinition, Restriction, RestrictionFlavor, SuperclassParts,
};
pub use validate::{validate_ontology, DefectKind, OntologyDefect};

use crate::error::OntologyError;

/// Properties reaching `class` through its own or inherited domains and restrictions.
pub fn effective_properties<'o>(
    ont: &'o Ontology,
    class: &str,
) -> Result<Vec<(&'o PropertyDefinition, Origin)>, OntologyError> {
    Hierarchy::new(ont).effective_properties(class)
}

/// Restrictions reaching `class`, tagged direct or inherited.
pub fn effective_restrictions(
    ont: &Ontology,
    class: &str,
) -> Result<Vec<(Restriction, Origin)>, OntologyError> {
    Hierarchy::new(ont).effective_restrictions(class)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn protein() -> Ontology {
        let mut ont = Ontology::new("t");
        ont.classes.push(ClassDefinition::primitive("Protein"));
        ont.classes.push(ClassDefinition::primitive("DNA"));
        ont.classes.push(ClassDefinition::primitive("Enzyme"));
        ont.axioms
            .push(Axiom::subclass("Enzyme", ClassExpression::named("Protein")));
        ont.properties
            .push(PropertyDefinition::datatype("name").with_domain("Protein"));
        ont.properties.push(
            PropertyDefinition::object("binds")
                .with_domain("Protein")
                .with_range("DNA"),
        );
        ont
    }

    #[test]
    fn no_properties_anywhere() {
        let ont = protein();
        assert!(effective_properties(&ont, "DNA").unwrap().is_empty());
        assert!(effective_restrictions(&ont, "DNA").unwrap().is_empty());
    }

    #[test]
    fn direct_domains_sorted_by_name() {
        let ont = protein();
        let got: Vec<_> = effective_properties(&ont, "Protein")
            .unwrap()
            .into_iter()
            .map(|(p, o)| (p.name.as_str(), o))
            .collect();
        assert_eq!(
            got,
            vec![
                ("binds", Origin::DirectDomain),
                ("name", Origin::DirectDomain)
            ]
        );
    }

    #[test]
    fn inherited_domain_through_subclass() {
        let ont = protein();
        let got: Vec<_> = effective_properties(&ont, "Enzyme")
            .unwrap()
            .into_iter()
            .map(|(p, o)| (p.name.as_str(), o))
            .collect();
        assert_eq!(
            got,
            vec![
                ("binds", Origin::InheritedDomain),
                ("name", Origin::InheritedDomain)
            ]
        );
    }

    #[test]
    fn restriction_origins() {
        let mut ont = protein();
        let r = Restriction::has_class("binds", ClassExpression::named("DNA"));
        ont.classes[0].local_restrictions.push(r.clone());
        assert_eq!(
            effective_restrictions(&ont, "Protein").unwrap(),
            vec![(r.clone(), Origin::DirectRestriction)]
        );
        assert_eq!(
            effective_restrictions(&ont, "Enzyme").unwrap(),
            vec![(r, Origin::InheritedRestriction)]
        );
    }

    #[test]
    fn restriction_in_superclass_expression_counts_as_direct() {
        let mut ont = protein();
        let r = Restriction::to_class("binds", ClassExpression::named("DNA"));
        ont.axioms.push(Axiom::subclass(
            "Enzyme",
            ClassExpression::Intersection(vec![
                ClassExpression::named("Protein"),
                ClassExpression::restriction(r.clone()),
            ]),
        ));
        assert_eq!(
            effective_restrictions(&ont, "Enzyme").unwrap(),
            vec![(r, Origin::DirectRestriction)]
        );
    }

    #[test]
    fn unknown_class_is_an_error() {
        let ont = protein();
        assert_eq!(
            effective_properties(&ont, "Nope").unwrap_err(),
            OntologyError::UnknownClass("Nope".into())
        );
    }

    #[test]
    fn normalization_moves_restriction_axioms() {
        let mut ont = protein();
        let r = Restriction::new("binds", RestrictionFlavor::MinCardinality(1));
        ont.axioms.push(Axiom::subclass(
            "Protein",
            ClassExpression::restriction(r.clone()),
        ));
        ont.axioms.push(Axiom::subclass(
            "Ghost",
            ClassExpression::restriction(r.clone()),
        ));
        let n = ont.normalize_restrictions();
        assert_eq!(n.classes[0].local_restrictions, vec![r]);
        assert_eq!(n.axioms.len(), 2);
    }
}
