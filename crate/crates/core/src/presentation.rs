//! Generators-and-relations presentations of *-algebras.

use std::collections::BTreeSet;

use crate::error::AlgebraError;
use crate::expr::{Letter, NCExpr};

/// How the involution acts on a generator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum GeneratorKind {
    /// `g* = g`.
    SelfAdjoint,
    /// `g* = other`, where `other` is another generator.
    AdjointOf(String),
    /// `g*` is an independent letter.
    Free,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Generator {
    pub name: String,
    pub kind: GeneratorKind,
}

impl Generator {
    pub fn self_adjoint(name: impl Into<String>) -> Self {
        Generator { name: name.into(), kind: GeneratorKind::SelfAdjoint }
    }

    pub fn free(name: impl Into<String>) -> Self {
        Generator { name: name.into(), kind: GeneratorKind::Free }
    }

    pub fn adjoint_of(name: impl Into<String>, other: impl Into<String>) -> Self {
        Generator { name: name.into(), kind: GeneratorKind::AdjointOf(other.into()) }
    }
}

/// Generators plus relations, each relation read as `expr = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Presentation {
    generators: Vec<Generator>,
    relations: Vec<NCExpr>,
}

impl Presentation {
    pub fn new(generators: Vec<Generator>, relations: Vec<NCExpr>) -> Result<Self, AlgebraError> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if !seen.insert(g.name.as_str()) {
                return Err(AlgebraError::DuplicateGenerator(g.name.clone()));
            }
        }
        let mut paired = BTreeSet::new();
        for g in &generators {
            if let GeneratorKind::AdjointOf(other) = &g.kind {
                // the partner must be a free generator claimed by no one else
                let target_free = generators
                    .iter()
                    .any(|h| &h.name == other && h.kind == GeneratorKind::Free);
                if !target_free || !paired.insert(other.as_str()) {
                    return Err(AlgebraError::BadAdjointPairing(g.name.clone(), other.clone()));
                }
            }
        }
        for r in &relations {
            for n in r.generator_names() {
                if !seen.contains(n.as_str()) {
                    return Err(AlgebraError::UnknownGenerator(n));
                }
            }
        }
        Ok(Presentation { generators, relations })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator_names(&self) -> impl Iterator<Item = &str> {
        self.generators.iter().map(|g| g.name.as_str())
    }

    pub fn generator(&self, name: &str) -> Option<&Generator> {
        self.generators.iter().find(|g| g.name == name)
    }

    /// The explicitly listed relations.
    pub fn relations(&self) -> &[NCExpr] {
        &self.relations
    }

    /// Relations implied by the generator kinds: `g - g*` for self-adjoint
    /// generators and `w - z*` for `w` declared adjoint of `z`.
    pub fn involution_relations(&self) -> Vec<NCExpr> {
        self.generators
            .iter()
            .filter_map(|g| match &g.kind {
                GeneratorKind::SelfAdjoint => Some(
                    NCExpr::generator(&g.name).sub(&NCExpr::letter(Letter::star(&g.name))),
                ),
                GeneratorKind::AdjointOf(z) => {
                    Some(NCExpr::generator(&g.name).sub(&NCExpr::letter(Letter::star(z))))
                }
                GeneratorKind::Free => None,
            })
            .collect()
    }

    /// Involution relations followed by the listed relations.
    pub fn all_relations(&self) -> Vec<NCExpr> {
        let mut v = self.involution_relations();
        v.extend(self.relations.iter().cloned());
        v
    }

    /// Rename every generator, keeping kinds and relations consistent.
    pub fn renamed(&self, f: impl Fn(&str) -> String) -> Presentation {
        let generators = self
            .generators
            .iter()
            .map(|g| Generator {
                name: f(&g.name),
                kind: match &g.kind {
                    GeneratorKind::AdjointOf(z) => GeneratorKind::AdjointOf(f(z)),
                    k => k.clone(),
                },
            })
            .collect();
        let relations = self.relations.iter().map(|r| r.rename(&f)).collect();
        Presentation { generators, relations }
    }

    /// Disjoint union of generators and relations (names must not collide).
    pub fn disjoint_union(parts: &[Presentation]) -> Result<Presentation, AlgebraError> {
        let generators = parts.iter().flat_map(|p| p.generators.iter().cloned()).collect();
        let relations = parts.iter().flat_map(|p| p.relations.iter().cloned()).collect();
        Presentation::new(generators, relations)
    }

    pub fn with_relations(mut self, extra: impl IntoIterator<Item = NCExpr>) -> Presentation {
        self.relations.extend(extra);
        self
    }

    /// Rewrite letters so that self-adjoint generators are never starred and
    /// paired generators appear unstarred.
    pub fn normalize(&self, e: &NCExpr) -> NCExpr {
        e.map_letters(|l| {
            if !l.starred {
                return l.clone();
            }
            match self.generator(&l.name).map(|g| &g.kind) {
                Some(GeneratorKind::SelfAdjoint) => Letter::plain(&l.name),
                Some(GeneratorKind::AdjointOf(z)) => Letter::plain(z),
                _ => {
                    // z* where some w is declared adjoint of z
                    match self.generators.iter().find(
                        |g| matches!(&g.kind, GeneratorKind::AdjointOf(z) if *z == l.name),
                    ) {
                        Some(w) => Letter::plain(&w.name),
                        None => l.clone(),
                    }
                }
            }
        })
    }
}
