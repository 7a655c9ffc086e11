//! Noncommutative *-polynomial expressions over named generators.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// A generator name, possibly starred.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub name: String,
    pub starred: bool,
}

impl Letter {
    pub fn plain(name: impl Into<String>) -> Self {
        Letter { name: name.into(), starred: false }
    }

    pub fn star(name: impl Into<String>) -> Self {
        Letter { name: name.into(), starred: true }
    }

    pub fn adjoint(&self) -> Self {
        Letter { name: self.name.clone(), starred: !self.starred }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.starred {
            write!(f, "{}'", self.name)
        } else {
            write!(f, "{}", self.name)
        }
    }
}

/// A finite product of letters; the empty word is the unit.
///
/// Ordered by length first, then lexicographically on letters.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Word(v)
    }

    pub fn adjoint(&self) -> Word {
        Word(self.0.iter().rev().map(Letter::adjoint).collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A formal noncommutative *-polynomial in canonical form: distinct words,
/// no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct NCExpr {
    terms: BTreeMap<Word, Scalar>,
}

impl NCExpr {
    pub fn zero() -> Self {
        NCExpr::default()
    }

    pub fn one() -> Self {
        NCExpr::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        NCExpr::term(c, Word::unit())
    }

    pub fn generator(name: impl Into<String>) -> Self {
        NCExpr::term(Scalar::one(), Word(vec![Letter::plain(name)]))
    }

    pub fn letter(l: Letter) -> Self {
        NCExpr::term(Scalar::one(), Word(vec![l]))
    }

    pub fn term(c: Scalar, w: Word) -> Self {
        let mut e = NCExpr::zero();
        e.add_term(w, &c);
        e
    }

    /// Product of plain generators, e.g. `word(&["p", "q"])` is `p q`.
    pub fn word(names: &[&str]) -> Self {
        NCExpr::term(Scalar::one(), Word(names.iter().map(|n| Letter::plain(*n)).collect()))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Scalar, Word)>) -> Self {
        let mut e = NCExpr::zero();
        for (c, w) in terms {
            e.add_term(w, &c);
        }
        e
    }

    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    /// Names of all generators occurring in the expression.
    pub fn generator_names(&self) -> Vec<String> {
        let mut names: Vec<String> = self
            .terms
            .keys()
            .flat_map(|w| w.0.iter().map(|l| l.name.clone()))
            .collect();
        names.sort();
        names.dedup();
        names
    }

    pub fn scale(&self, c: &Scalar) -> NCExpr {
        NCExpr::from_terms(self.terms.iter().map(|(w, v)| (v * c, w.clone())))
    }

    pub fn add(&self, other: &NCExpr) -> NCExpr {
        let mut e = self.clone();
        for (w, c) in &other.terms {
            e.add_term(w.clone(), c);
        }
        e
    }

    pub fn sub(&self, other: &NCExpr) -> NCExpr {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NCExpr {
        self.scale(&-Scalar::one())
    }

    pub fn mul(&self, other: &NCExpr) -> NCExpr {
        let mut e = NCExpr::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                e.add_term(w1.concat(w2), &(c1 * c2));
            }
        }
        e
    }

    /// The formal adjoint: conjugate coefficients, reverse words, toggle stars.
    pub fn star(&self) -> NCExpr {
        NCExpr::from_terms(self.terms.iter().map(|(w, c)| (c.conj(), w.adjoint())))
    }

    /// Rewrite every letter through `f`, re-canonicalizing.
    pub fn map_letters(&self, mut f: impl FnMut(&Letter) -> Letter) -> NCExpr {
        NCExpr::from_terms(
            self.terms
                .iter()
                .map(|(w, c)| (c.clone(), Word(w.0.iter().map(&mut f).collect()))),
        )
    }

    pub fn rename(&self, mut f: impl FnMut(&str) -> String) -> NCExpr {
        self.map_letters(|l| Letter { name: f(&l.name), starred: l.starred })
    }

    /// Product of a list of expressions (the unit for an empty list).
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a NCExpr>) -> NCExpr {
        factors.into_iter().fold(NCExpr::one(), |acc, f| acc.mul(f))
    }
}

impl fmt::Display for NCExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = if c.is_simple() && c.is_negative_lead() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coef = if mag.is_simple() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            if w.is_unit() {
                write!(f, "{coef}")?;
            } else if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{coef} {w}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_is_anti_multiplicative() {
        let x = NCExpr::word(&["z", "p"]);
        let y = NCExpr::word(&["q"]).add(&NCExpr::constant(Scalar::i()));
        assert_eq!(x.mul(&y).star(), y.star().mul(&x.star()));
        assert_eq!(x.star().star(), x);
        assert_eq!(x.star().to_string(), "p' z'");
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = NCExpr::word(&["p", "q"]);
        assert!(x.sub(&x).is_zero());
        assert_eq!(x.add(&x).num_terms(), 1);
    }

    #[test]
    fn display_orders_by_length_then_lex() {
        let e = NCExpr::word(&["p"])
            .sub(&NCExpr::word(&["p", "p"]))
            .sub(&NCExpr::word(&["z"]).star().mul(&NCExpr::word(&["z"])));
        assert_eq!(e.to_string(), "p - p p - z' z");
        let c = NCExpr::constant(Scalar::ratio(1, 2) + Scalar::i()).mul(&NCExpr::generator("u"));
        assert_eq!(c.to_string(), "(1/2 + 1i) u");
    }
}
