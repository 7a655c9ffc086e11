//! Algebra objects with exact element arithmetic.
//!
//! Every [`Algebra`] has a canonical linear basis indexed by [`Key`]s and a
//! canonical [`Presentation`]. Elements are finite maps from keys to exact
//! scalars. The four kinds of objects are finite-dimensional algebras given
//! by structure constants, free *-algebras, unital free products, and
//! multi-leg tensor products.

mod element;
mod fd;
mod free_star;

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

pub use element::{eval_ncexpr, Element};
pub(crate) use element::eval_with_cache as element_eval_cached;
pub use fd::{cn_structure, matrix_structure, FiniteDimAlgebra};
pub use free_star::{FreeLetter, FreeStarAlgebra};

use crate::error::AlgebraError;
use crate::expr::NCExpr;
use crate::presentation::{Generator, Presentation};
use crate::products::{FreeProductAlgebra, TensorAlgebra};
use crate::scalar::Scalar;

pub type AlgebraRef = Arc<Algebra>;

/// Index of a canonical basis element.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Key {
    /// Basis element of a finite-dimensional algebra (or complement index
    /// when used as a free-product letter).
    Idx(usize),
    /// Word of a free *-algebra.
    Word(Vec<FreeLetter>),
    /// Reduced alternating word of a free product: `(factor, complement key)`.
    Reduced(Vec<(usize, Key)>),
    /// One key per tensor leg.
    Tuple(Vec<Key>),
}

impl Key {
    fn rank(&self) -> u8 {
        match self {
            Key::Idx(_) => 0,
            Key::Word(_) => 1,
            Key::Reduced(_) => 2,
            Key::Tuple(_) => 3,
        }
    }
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Key::Idx(a), Key::Idx(b)) => a.cmp(b),
            (Key::Word(a), Key::Word(b)) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
            (Key::Reduced(a), Key::Reduced(b)) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
            (Key::Tuple(a), Key::Tuple(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse coordinates against a canonical basis; zero entries are never stored.
pub type Coords = BTreeMap<Key, Scalar>;

pub(crate) fn add_into(map: &mut Coords, key: Key, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
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

pub(crate) fn single(key: Key) -> Coords {
    let mut m = Coords::new();
    m.insert(key, Scalar::one());
    m
}

#[derive(Debug)]
pub enum Kind {
    FiniteDim(FiniteDimAlgebra),
    FreeStar(FreeStarAlgebra),
    FreeProduct(FreeProductAlgebra),
    Tensor(TensorAlgebra),
}

/// An algebra object: a kind-specific structure plus its canonical
/// presentation and the coordinates of every presentation generator.
#[derive(Debug)]
pub struct Algebra {
    signature: String,
    presentation: Presentation,
    generator_coords: Vec<Coords>,
    kind: Kind,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.signature == other.signature
    }
}

impl Eq for Algebra {}

/// True when two references denote the same algebra object.
pub fn same_algebra(a: &AlgebraRef, b: &AlgebraRef) -> bool {
    Arc::ptr_eq(a, b) || a.signature == b.signature
}

impl Algebra {
    pub(crate) fn assemble(
        signature: String,
        presentation: Presentation,
        generator_coords: Vec<Coords>,
        kind: Kind,
    ) -> AlgebraRef {
        debug_assert_eq!(presentation.generators().len(), generator_coords.len());
        Arc::new(Algebra { signature, presentation, generator_coords, kind })
    }

    /// Wrap a finite-dimensional structure; `signature` identifies the object.
    pub fn finite_dim(fd: FiniteDimAlgebra, signature: Option<String>) -> AlgebraRef {
        let signature = signature.unwrap_or_else(|| {
            let mut h = DefaultHasher::new();
            fd.hash(&mut h);
            format!("FD{}[{:016x}]", fd.dim(), h.finish())
        });
        let presentation = fd.canonical_presentation();
        let generator_coords = (0..fd.dim()).map(|i| single(Key::Idx(i))).collect();
        Algebra::assemble(signature, presentation, generator_coords, Kind::FiniteDim(fd))
    }

    pub fn signature(&self) -> &str {
        &self.signature
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn kind(&self) -> &Kind {
        &self.kind
    }

    pub fn as_finite_dim(&self) -> Option<&FiniteDimAlgebra> {
        match &self.kind {
            Kind::FiniteDim(f) => Some(f),
            _ => None,
        }
    }

    pub fn as_free_product(&self) -> Option<&FreeProductAlgebra> {
        match &self.kind {
            Kind::FreeProduct(f) => Some(f),
            _ => None,
        }
    }

    pub fn as_tensor(&self) -> Option<&TensorAlgebra> {
        match &self.kind {
            Kind::Tensor(t) => Some(t),
            _ => None,
        }
    }

    pub fn as_free_star(&self) -> Option<&FreeStarAlgebra> {
        match &self.kind {
            Kind::FreeStar(f) => Some(f),
            _ => None,
        }
    }

    /// Coordinates of the named presentation generator.
    pub fn generator_coords(&self, name: &str) -> Option<&Coords> {
        let i = self.presentation.generators().iter().position(|g| g.name == name)?;
        Some(&self.generator_coords[i])
    }

    pub fn unit_coords(&self) -> Coords {
        match &self.kind {
            Kind::FiniteDim(f) => dense_to_coords(f.unit_vector()),
            Kind::FreeStar(_) => single(Key::Word(Vec::new())),
            Kind::FreeProduct(_) => single(Key::Reduced(Vec::new())),
            Kind::Tensor(t) => t.unit_coords(),
        }
    }

    pub fn mul_keys(&self, a: &Key, b: &Key) -> Coords {
        match (&self.kind, a, b) {
            (Kind::FiniteDim(f), Key::Idx(i), Key::Idx(j)) => {
                dense_to_coords(&f.structure_constants()[*i][*j])
            }
            (Kind::FreeStar(_), Key::Word(u), Key::Word(v)) => {
                let mut w = u.clone();
                w.extend(v.iter().copied());
                single(Key::Word(w))
            }
            (Kind::FreeProduct(fp), Key::Reduced(u), Key::Reduced(v)) => fp.mul_words(u, v),
            (Kind::Tensor(t), Key::Tuple(u), Key::Tuple(v)) => t.mul_tuples(u, v),
            _ => panic!("key {a:?} / {b:?} does not belong to {}", self.signature),
        }
    }

    pub fn star_key(&self, a: &Key) -> Coords {
        match (&self.kind, a) {
            (Kind::FiniteDim(f), Key::Idx(i)) => dense_to_coords(f.involution_of(*i)),
            (Kind::FreeStar(fs), Key::Word(u)) => single(Key::Word(fs.star_word(u))),
            (Kind::FreeProduct(fp), Key::Reduced(u)) => fp.star_word(u),
            (Kind::Tensor(t), Key::Tuple(u)) => t.star_tuple(u),
            _ => panic!("key {a:?} does not belong to {}", self.signature),
        }
    }

    pub fn mul_coords(&self, x: &Coords, y: &Coords) -> Coords {
        let mut out = Coords::new();
        for (a, ca) in x {
            for (b, cb) in y {
                let c = ca * cb;
                for (k, v) in self.mul_keys(a, b) {
                    add_into(&mut out, k, &(&c * &v));
                }
            }
        }
        out
    }

    pub fn star_coords(&self, x: &Coords) -> Coords {
        let mut out = Coords::new();
        for (a, ca) in x {
            let c = ca.conj();
            for (k, v) in self.star_key(a) {
                add_into(&mut out, k, &(&c * &v));
            }
        }
        out
    }

    /// Expressions in the presentation generators whose product is the basis
    /// element `key`.
    pub fn basis_factors(&self, key: &Key) -> Vec<NCExpr> {
        match (&self.kind, key) {
            (Kind::FiniteDim(f), Key::Idx(i)) => vec![NCExpr::generator(&f.names()[*i])],
            (Kind::FreeStar(fs), Key::Word(u)) => u.iter().map(|&l| fs.letter_expr(l)).collect(),
            (Kind::FreeProduct(fp), Key::Reduced(u)) => fp.word_factors(u),
            (Kind::Tensor(t), Key::Tuple(u)) => t.tuple_factors(u),
            _ => panic!("key {key:?} does not belong to {}", self.signature),
        }
    }

    /// The basis element `key` written in the presentation generators.
    pub fn basis_expression(&self, key: &Key) -> NCExpr {
        NCExpr::product(self.basis_factors(key).iter())
    }

    pub fn key_label(&self, key: &Key) -> String {
        match (&self.kind, key) {
            (Kind::FiniteDim(f), Key::Idx(i)) => f.names()[*i].clone(),
            (Kind::FreeStar(fs), Key::Word(u)) => fs.word_label(u),
            (Kind::FreeProduct(fp), Key::Reduced(u)) => fp.word_label(u),
            (Kind::Tensor(t), Key::Tuple(u)) => t.tuple_label(u),
            _ => format!("{key:?}"),
        }
    }

    // ---- unit/complement splitting, used when the algebra is a free-product factor

    pub(crate) fn supports_complement(&self) -> bool {
        !matches!(self.kind, Kind::Tensor(_))
    }

    /// Write `x = λ·1 + c` with `c` in the chosen complement of `ℂ1`.
    pub(crate) fn split_unit(&self, x: &Coords) -> (Scalar, Coords) {
        match &self.kind {
            Kind::FiniteDim(f) => {
                let v = f.split(&coords_to_dense(x, f.dim()));
                let mut comp = Coords::new();
                for (j, c) in v.iter().enumerate().skip(1) {
                    add_into(&mut comp, Key::Idx(j - 1), c);
                }
                (v[0].clone(), comp)
            }
            Kind::FreeStar(_) | Kind::FreeProduct(_) => {
                let unit = match &self.kind {
                    Kind::FreeStar(_) => Key::Word(Vec::new()),
                    _ => Key::Reduced(Vec::new()),
                };
                let mut comp = x.clone();
                let lam = comp.remove(&unit).unwrap_or_default();
                (lam, comp)
            }
            Kind::Tensor(_) => unreachable!("tensor products are not free-product factors"),
        }
    }

    pub(crate) fn complement_coords(&self, c: &Key) -> Coords {
        match (&self.kind, c) {
            (Kind::FiniteDim(f), Key::Idx(j)) => dense_to_coords(&f.complement()[*j]),
            _ => single(c.clone()),
        }
    }

    pub(crate) fn complement_factors(&self, c: &Key) -> Vec<NCExpr> {
        match (&self.kind, c) {
            (Kind::FiniteDim(f), Key::Idx(j)) => vec![f.vec_expr(&f.complement()[*j])],
            _ => self.basis_factors(c),
        }
    }

    pub(crate) fn complement_label(&self, c: &Key) -> String {
        match (&self.kind, c) {
            (Kind::FiniteDim(f), Key::Idx(j)) => f.complement_label(*j),
            (Kind::FreeProduct(_), Key::Reduced(u)) if u.len() > 1 => {
                format!("({})", self.key_label(c))
            }
            _ => self.key_label(c),
        }
    }

    pub(crate) fn complement_mul(&self, a: &Key, b: &Key) -> (Scalar, Coords) {
        let x = self.mul_coords(&self.complement_coords(a), &self.complement_coords(b));
        self.split_unit(&x)
    }

    pub(crate) fn complement_star(&self, a: &Key) -> (Scalar, Coords) {
        self.split_unit(&self.star_coords(&self.complement_coords(a)))
    }
}

pub(crate) fn dense_to_coords(v: &[Scalar]) -> Coords {
    let mut m = Coords::new();
    for (i, c) in v.iter().enumerate() {
        add_into(&mut m, Key::Idx(i), c);
    }
    m
}

pub(crate) fn coords_to_dense(x: &Coords, d: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); d];
    for (k, c) in x {
        match k {
            Key::Idx(i) if *i < d => v[*i] = c.clone(),
            _ => panic!("key {k:?} is not a basis index below {d}"),
        }
    }
    v
}

/// `ℂⁿ` with minimal projections `e1 … en`.
pub fn make_cn(n: usize) -> Result<AlgebraRef, AlgebraError> {
    Ok(Algebra::finite_dim(cn_structure(n)?, Some(format!("C^{n}"))))
}

/// `M_n(ℂ)` with matrix units `E11, E12, …`.
pub fn make_matrix_algebra(n: usize) -> Result<AlgebraRef, AlgebraError> {
    Ok(Algebra::finite_dim(matrix_structure(n)?, Some(format!("M_{n}"))))
}

/// The one-dimensional algebra `ℂ`, target of characters.
pub fn scalars() -> AlgebraRef {
    make_cn(1).expect("n = 1 is valid")
}

/// Free *-algebra on the given generators.
pub fn make_free_star(generators: Vec<Generator>) -> Result<AlgebraRef, AlgebraError> {
    make_presented(Presentation::new(generators, Vec::new())?)
}

/// The algebra presented by `presentation`.
///
/// Elements are represented by words of the free *-algebra on the
/// generators; no normal form modulo the relations is attempted, so
/// `is_zero` is only a sufficient test for vanishing. Morphisms out of this
/// object are checked against the relations.
pub fn make_presented(presentation: Presentation) -> Result<AlgebraRef, AlgebraError> {
    let generators = presentation.generators().to_vec();
    let fs = FreeStarAlgebra::new(generators);
    let mut signature = format!(
        "Free<{}>",
        presentation
            .generators()
            .iter()
            .map(|g| format!("{}:{:?}", g.name, g.kind))
            .collect::<Vec<_>>()
            .join(",")
    );
    if !presentation.relations().is_empty() {
        let rels: Vec<String> = presentation.relations().iter().map(|r| r.to_string()).collect();
        signature = format!("{signature}/({})", rels.join("; "));
    }
    let generator_coords = (0..fs.generators().len())
        .map(|i| single(Key::Word(vec![(i, false)])))
        .collect();
    Ok(Algebra::assemble(signature, presentation, generator_coords, Kind::FreeStar(fs)))
}

#[cfg(test)]
mod tests;
