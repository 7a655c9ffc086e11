//! Unital *-homomorphisms given by generator images.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::algebra::{eval_ncexpr, same_algebra, AlgebraRef, Element, Key};
use crate::algebra::{element_eval_cached, make_cn};
use crate::error::AlgebraError;
use crate::expr::NCExpr;
use crate::products::{
    contract_leg, copy_name, embed_legs, iota, leg_name, legs_of, tensor,
};
use crate::scalar::Scalar;

/// A relation of the domain whose image is not zero.
#[derive(Clone, Debug)]
pub struct Violation {
    pub relation: NCExpr,
    pub residue: Element,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ↦ {}", self.relation, self.residue)
    }
}

/// A generator on which two maps disagree.
#[derive(Clone, Debug)]
pub struct Disagreement {
    pub generator: String,
    pub difference: Element,
}

impl fmt::Display for Disagreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "on {}: difference {}", self.generator, self.difference)
    }
}

/// A unital *-homomorphism `domain → codomain`, determined by the images of
/// the domain's presentation generators.
#[derive(Clone, Debug)]
pub struct Morphism {
    domain: AlgebraRef,
    codomain: AlgebraRef,
    images: BTreeMap<String, Element>,
}

impl Morphism {
    pub fn new(
        domain: &AlgebraRef,
        codomain: &AlgebraRef,
        images: BTreeMap<String, Element>,
    ) -> Result<Self, AlgebraError> {
        for g in domain.presentation().generator_names() {
            let img = images.get(g).ok_or_else(|| AlgebraError::Unassigned(g.to_string()))?;
            if !same_algebra(img.owner(), codomain) {
                return Err(AlgebraError::OwnerMismatch(
                    codomain.signature().to_string(),
                    img.owner().signature().to_string(),
                ));
            }
        }
        if let Some(extra) = images.keys().find(|k| domain.presentation().generator(k).is_none()) {
            return Err(AlgebraError::UnknownGenerator(extra.clone()));
        }
        Ok(Morphism { domain: domain.clone(), codomain: codomain.clone(), images })
    }

    /// Build from a function giving the image of each generator name.
    pub fn from_fn(
        domain: &AlgebraRef,
        codomain: &AlgebraRef,
        mut f: impl FnMut(&str) -> Result<Element, AlgebraError>,
    ) -> Result<Self, AlgebraError> {
        let mut images = BTreeMap::new();
        for g in domain.presentation().generator_names() {
            images.insert(g.to_string(), f(g)?);
        }
        Morphism::new(domain, codomain, images)
    }

    pub fn identity(a: &AlgebraRef) -> Morphism {
        Morphism::from_fn(a, a, |g| Element::generator(a, g)).expect("generators of a")
    }

    pub fn domain(&self) -> &AlgebraRef {
        &self.domain
    }

    pub fn codomain(&self) -> &AlgebraRef {
        &self.codomain
    }

    pub fn images(&self) -> &BTreeMap<String, Element> {
        &self.images
    }

    pub fn image(&self, generator: &str) -> Option<&Element> {
        self.images.get(generator)
    }

    /// Evaluate on an arbitrary domain element through the basis expressions.
    pub fn eval(&self, x: &Element) -> Result<Element, AlgebraError> {
        if !same_algebra(x.owner(), &self.domain) {
            return Err(AlgebraError::OwnerMismatch(
                self.domain.signature().to_string(),
                x.owner().signature().to_string(),
            ));
        }
        let mut letters = HashMap::new();
        let mut factors: HashMap<NCExpr, Element> = HashMap::new();
        let mut out = Element::zero(&self.codomain);
        for (key, c) in x.coords() {
            let mut acc = Element::one(&self.codomain);
            for f in self.domain.basis_factors(key) {
                let v = match factors.get(&f) {
                    Some(v) => v.clone(),
                    None => {
                        let v = element_eval_cached(&f, &self.codomain, &self.images, &mut letters)?;
                        factors.insert(f, v.clone());
                        v
                    }
                };
                acc = acc.try_mul(&v)?;
            }
            out = out.try_add(&acc.scale(c))?;
        }
        Ok(out)
    }

    /// Evaluate a generator expression of the domain.
    pub fn eval_expr(&self, e: &NCExpr) -> Result<Element, AlgebraError> {
        eval_ncexpr(e, &self.codomain, &self.images)
    }

    /// Every domain relation (including the involution relations implied by
    /// generator kinds) must map to exact zero.
    pub fn check_well_defined(&self) -> Result<(), Vec<Violation>> {
        let mut bad = Vec::new();
        for r in self.domain.presentation().all_relations() {
            let residue = self.eval_expr(&r).expect("all generators are assigned");
            if !residue.is_zero() {
                bad.push(Violation { relation: r, residue });
            }
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(bad)
        }
    }

    /// Generator-wise comparison with a map of the same shape.
    pub fn agrees_with(&self, other: &Morphism) -> Result<(), Disagreement> {
        assert!(
            same_algebra(&self.domain, &other.domain) && same_algebra(&self.codomain, &other.codomain),
            "comparing morphisms of different shapes"
        );
        for (g, x) in &self.images {
            let d = x - &other.images[g];
            if !d.is_zero() {
                return Err(Disagreement { generator: g.clone(), difference: d });
            }
        }
        Ok(())
    }

    /// `g ∘ f`.
    pub fn compose(g: &Morphism, f: &Morphism) -> Result<Morphism, AlgebraError> {
        if !same_algebra(&g.domain, &f.codomain) {
            return Err(AlgebraError::ShapeMismatch(format!(
                "cannot compose {} → … after … → {}",
                g.domain.signature(),
                f.codomain.signature()
            )));
        }
        let mut images = BTreeMap::new();
        for (name, x) in &f.images {
            images.insert(name.clone(), g.eval(x)?);
        }
        Morphism::new(&f.domain, &g.codomain, images)
    }

    /// `m₁ ⊗ … ⊗ mₖ` acting leg-wise; domains and codomains are flattened.
    pub fn tensor(ms: &[Morphism]) -> Result<Morphism, AlgebraError> {
        if ms.is_empty() {
            return Err(AlgebraError::EmptyLegList);
        }
        if ms.len() == 1 {
            return Ok(ms[0].clone());
        }
        let domain = tensor(&ms.iter().map(|m| m.domain.clone()).collect::<Vec<_>>())?;
        let codomain = tensor(&ms.iter().map(|m| m.codomain.clone()).collect::<Vec<_>>())?;
        let mut images = BTreeMap::new();
        let (mut doff, mut coff) = (0, 0);
        for m in ms {
            let dlegs = legs_of(&m.domain);
            let dom_is_tensor = m.domain.as_tensor().is_some();
            for (j, leg) in dlegs.iter().enumerate() {
                for h in leg.presentation().generator_names() {
                    let old = if dom_is_tensor { leg_name(h, j) } else { h.to_string() };
                    let img = embed_legs(&codomain, coff, &m.images[&old])?;
                    images.insert(leg_name(h, doff + j), img);
                }
            }
            doff += dlegs.len();
            coff += legs_of(&m.codomain).len();
        }
        Morphism::new(&domain, &codomain, images)
    }
}

/// The inclusion `ι_k: A_k → A_1 ⋆ … ⋆ A_n` (0-based `k`) as a morphism.
pub fn iota_morphism(product: &AlgebraRef, k: usize) -> Result<Morphism, AlgebraError> {
    let fp = product
        .as_free_product()
        .ok_or_else(|| AlgebraError::ShapeMismatch("not a free product".into()))?;
    let factor = fp
        .factors()
        .get(k)
        .ok_or(AlgebraError::IndexOutOfRange { index: k, size: fp.num_factors() })?
        .clone();
    Morphism::from_fn(&factor, product, |g| iota(product, k, &Element::generator(&factor, g)?))
}

/// The unique `Λ: A_1 ⋆ … ⋆ A_n → D` with `Λ ∘ ι_k = Ψ_k`.
pub fn factor_through_free_product(
    product: &AlgebraRef,
    psis: &[Morphism],
) -> Result<Morphism, AlgebraError> {
    let fp = product
        .as_free_product()
        .ok_or_else(|| AlgebraError::ShapeMismatch("not a free product".into()))?;
    if psis.len() != fp.num_factors() {
        return Err(AlgebraError::ShapeMismatch(format!(
            "{} maps for {} factors",
            psis.len(),
            fp.num_factors()
        )));
    }
    let target = psis[0].codomain.clone();
    let mut images = BTreeMap::new();
    for (k, (psi, factor)) in psis.iter().zip(fp.factors()).enumerate() {
        if !same_algebra(&psi.domain, factor) || !same_algebra(&psi.codomain, &target) {
            return Err(AlgebraError::ShapeMismatch(format!(
                "map {} does not go from factor {} to the common target",
                k + 1,
                k + 1
            )));
        }
        for (g, x) in &psi.images {
            images.insert(copy_name(g, k), x.clone());
        }
    }
    Morphism::new(product, &target, images)
}

/// Split `Ψ: A → ℂⁿ ⊗ D` as `Ψ(a) = Σ eᵢ ⊗ Ψᵢ(a)`.
pub fn decompose_over_cn(psi: &Morphism) -> Result<Vec<Morphism>, AlgebraError> {
    let legs = legs_of(&psi.codomain);
    let n = match legs.first().and_then(|l| l.as_finite_dim()) {
        Some(f) if psi.codomain.as_tensor().is_some() && legs.len() >= 2 => f.dim(),
        _ => return Err(AlgebraError::ShapeMismatch("codomain is not ℂⁿ ⊗ D".into())),
    };
    if !same_algebra(&legs[0], &make_cn(n)?) {
        return Err(AlgebraError::ShapeMismatch(format!(
            "first leg {} is not ℂ^{n}",
            legs[0].signature()
        )));
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut images = BTreeMap::new();
        let mut target = None;
        for (g, x) in &psi.images {
            let y = contract_leg(x, 0, |k| if *k == Key::Idx(i) { Scalar::one() } else { Scalar::zero() })?;
            target = Some(y.owner().clone());
            images.insert(g.clone(), y);
        }
        let target = match target {
            Some(t) => t,
            None => {
                let rest = legs[1..].to_vec();
                if rest.len() == 1 { rest[0].clone() } else { tensor(&rest)? }
            }
        };
        out.push(Morphism::new(&psi.domain, &target, images)?);
    }
    Ok(out)
}

/// `π: A ⋆ … ⋆ A → A`, identifying all canonical copies of `A`.
pub fn pi(product: &AlgebraRef) -> Result<Morphism, AlgebraError> {
    let fp = product
        .as_free_product()
        .ok_or_else(|| AlgebraError::ShapeMismatch("not a free product".into()))?;
    let a = fp.factors()[0].clone();
    if fp.factors().iter().any(|f| !same_algebra(f, &a)) {
        return Err(AlgebraError::ShapeMismatch("π needs copies of a single algebra".into()));
    }
    let mut images = BTreeMap::new();
    for k in 0..fp.num_factors() {
        for g in a.presentation().generator_names() {
            images.insert(copy_name(g, k), Element::generator(&a, g)?);
        }
    }
    Morphism::new(product, &a, images)
}

/// The multiplication map `μ: B ⊗ B → B`, `b ⊗ b′ ↦ b b′`.
///
/// Fails with [`AlgebraError::NotAHomomorphism`] when the cross-leg
/// commutation relations are not respected, i.e. when `B` is noncommutative.
pub fn mu(b: &AlgebraRef) -> Result<Morphism, AlgebraError> {
    let bb = tensor(&[b.clone(), b.clone()])?;
    let mut images = BTreeMap::new();
    for g in b.presentation().generator_names() {
        let x = Element::generator(b, g)?;
        images.insert(leg_name(g, 0), x.clone());
        images.insert(leg_name(g, 1), x);
    }
    let m = Morphism::new(&bb, b, images)?;
    match m.check_well_defined() {
        Ok(()) => Ok(m),
        Err(v) => Err(AlgebraError::NotAHomomorphism(format!(
            "multiplication on {} violates {} relation(s), first: {}",
            b.signature(),
            v.len(),
            v[0]
        ))),
    }
}

/// `A → B ⊗ A`, `a ↦ 1 ⊗ a`.
pub fn unital_embed(b: &AlgebraRef, a: &AlgebraRef) -> Result<Morphism, AlgebraError> {
    let target = tensor(&[b.clone(), a.clone()])?;
    Morphism::from_fn(a, &target, |g| embed_legs(&target, 1, &Element::generator(a, g)?))
}

#[cfg(test)]
mod tests;
