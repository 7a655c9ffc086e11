//! Free *-algebras: words in generators and their adjoints, no relations.

use crate::expr::{Letter, NCExpr};
use crate::presentation::{Generator, GeneratorKind};

/// A letter of a free *-algebra word: generator index plus star flag.
pub type FreeLetter = (usize, bool);

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FreeStarAlgebra {
    generators: Vec<Generator>,
}

impl FreeStarAlgebra {
    pub(crate) fn new(generators: Vec<Generator>) -> Self {
        FreeStarAlgebra { generators }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    fn index(&self, name: &str) -> usize {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .expect("generator of this algebra")
    }

    /// Canonical letter: self-adjoint generators are never starred, paired
    /// generators are written through their partner.
    pub(crate) fn normalize(&self, (i, starred): FreeLetter) -> FreeLetter {
        if !starred {
            return (i, false);
        }
        match &self.generators[i].kind {
            GeneratorKind::SelfAdjoint => (i, false),
            GeneratorKind::AdjointOf(z) => (self.index(z), false),
            GeneratorKind::Free => {
                let name = &self.generators[i].name;
                match self
                    .generators
                    .iter()
                    .position(|g| matches!(&g.kind, GeneratorKind::AdjointOf(z) if z == name))
                {
                    Some(w) => (w, false),
                    None => (i, true),
                }
            }
        }
    }

    pub(crate) fn star_word(&self, w: &[FreeLetter]) -> Vec<FreeLetter> {
        w.iter().rev().map(|&(i, s)| self.normalize((i, !s))).collect()
    }

    pub(crate) fn letter_expr(&self, (i, s): FreeLetter) -> NCExpr {
        NCExpr::letter(Letter { name: self.generators[i].name.clone(), starred: s })
    }

    pub(crate) fn word_label(&self, w: &[FreeLetter]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|&(i, s)| {
                let n = &self.generators[i].name;
                if s {
                    format!("{n}'")
                } else {
                    n.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}
