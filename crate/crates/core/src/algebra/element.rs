use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{add_into, same_algebra, single, AlgebraRef, Coords, Key};
use crate::error::AlgebraError;
use crate::expr::{Letter, NCExpr};
use crate::scalar::Scalar;

/// A finite scalar combination of canonical basis elements of its owner.
#[derive(Clone, Debug)]
pub struct Element {
    owner: AlgebraRef,
    coords: Coords,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.owner, &other.owner) && self.coords == other.coords
    }
}

impl Element {
    pub fn from_coords(owner: &AlgebraRef, mut coords: Coords) -> Self {
        coords.retain(|_, c| !c.is_zero());
        Element { owner: owner.clone(), coords }
    }

    pub fn zero(owner: &AlgebraRef) -> Self {
        Element { owner: owner.clone(), coords: Coords::new() }
    }

    pub fn one(owner: &AlgebraRef) -> Self {
        Element { owner: owner.clone(), coords: owner.unit_coords() }
    }

    pub fn scalar(owner: &AlgebraRef, c: Scalar) -> Self {
        Element::one(owner).scale(&c)
    }

    pub fn basis(owner: &AlgebraRef, key: Key) -> Self {
        Element { owner: owner.clone(), coords: single(key) }
    }

    /// The named presentation generator.
    pub fn generator(owner: &AlgebraRef, name: &str) -> Result<Self, AlgebraError> {
        let c = owner
            .generator_coords(name)
            .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))?;
        Ok(Element { owner: owner.clone(), coords: c.clone() })
    }

    pub fn owner(&self) -> &AlgebraRef {
        &self.owner
    }

    pub fn coords(&self) -> &Coords {
        &self.coords
    }

    pub fn coefficient(&self, key: &Key) -> Scalar {
        self.coords.get(key).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coords.len()
    }

    fn check_owner(&self, other: &Element) -> Result<(), AlgebraError> {
        if same_algebra(&self.owner, &other.owner) {
            Ok(())
        } else {
            Err(AlgebraError::OwnerMismatch(
                self.owner.signature().to_string(),
                other.owner.signature().to_string(),
            ))
        }
    }

    pub fn try_add(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check_owner(other)?;
        let mut coords = self.coords.clone();
        for (k, c) in &other.coords {
            add_into(&mut coords, k.clone(), c);
        }
        Ok(Element { owner: self.owner.clone(), coords })
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check_owner(other)?;
        let coords = self.owner.mul_coords(&self.coords, &other.coords);
        Ok(Element { owner: self.owner.clone(), coords })
    }

    pub fn star(&self) -> Element {
        Element { owner: self.owner.clone(), coords: self.owner.star_coords(&self.coords) }
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        let mut coords = Coords::new();
        for (k, v) in &self.coords {
            add_into(&mut coords, k.clone(), &(v * c));
        }
        Element { owner: self.owner.clone(), coords }
    }

    pub fn neg(&self) -> Element {
        self.scale(&-Scalar::one())
    }

    pub fn pow(&self, n: u32) -> Element {
        (0..n).fold(Element::one(&self.owner), |acc, _| &acc * self)
    }

    /// The element written in the owner's presentation generators.
    pub fn to_expression(&self) -> NCExpr {
        self.coords.iter().fold(NCExpr::zero(), |acc, (k, c)| {
            acc.add(&self.owner.basis_expression(k).scale(c))
        })
    }

    /// Coefficient of the unit, if the element is a scalar multiple of it.
    pub fn as_scalar(&self) -> Option<Scalar> {
        let unit = self.owner.unit_coords();
        let (k, u) = unit.iter().next()?;
        let lam = &self.coefficient(k) / u;
        if Element::one(&self.owner).scale(&lam) == *self {
            Some(lam)
        } else {
            None
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.coords.iter().enumerate() {
            let label = self.owner.key_label(k);
            let neg = c.is_simple() && c.is_negative_lead();
            let mag = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let coef = if mag.is_simple() { mag.to_string() } else { format!("({mag})") };
            if label == "1" {
                write!(f, "{coef}")?;
            } else if mag.is_one() {
                write!(f, "{label}")?;
            } else {
                write!(f, "{coef}·{label}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Element {
    type Output = Element;
    /// Panics when the operands belong to different algebras; see [`Element::try_add`].
    fn add(self, rhs: &Element) -> Element {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element::neg(self)
    }
}

/// Substitute generator images into `expr` and evaluate inside `target`.
///
/// Starred letters evaluate to the adjoint of the assigned image.
pub fn eval_ncexpr(
    expr: &NCExpr,
    target: &AlgebraRef,
    assignment: &BTreeMap<String, Element>,
) -> Result<Element, AlgebraError> {
    let mut cache: HashMap<Letter, Element> = HashMap::new();
    eval_with_cache(expr, target, assignment, &mut cache)
}

pub(crate) fn eval_with_cache(
    expr: &NCExpr,
    target: &AlgebraRef,
    assignment: &BTreeMap<String, Element>,
    cache: &mut HashMap<Letter, Element>,
) -> Result<Element, AlgebraError> {
    let mut out = Element::zero(target);
    for (w, c) in expr.terms() {
        let mut acc = Element::one(target);
        for l in &w.0 {
            if !cache.contains_key(l) {
                let img = assignment
                    .get(&l.name)
                    .ok_or_else(|| AlgebraError::Unassigned(l.name.clone()))?;
                let probe = Element::zero(target);
                probe.check_owner(img)?;
                let v = if l.starred { img.star() } else { img.clone() };
                cache.insert(l.clone(), v);
            }
            acc = acc.try_mul(&cache[l])?;
        }
        out = out.try_add(&acc.scale(c))?;
    }
    Ok(out)
}
