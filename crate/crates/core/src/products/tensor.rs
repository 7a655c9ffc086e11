//! Multi-leg algebraic tensor products.

use crate::algebra::{add_into, same_algebra, Algebra, AlgebraRef, Coords, Element, Key, Kind};
use crate::error::AlgebraError;
use crate::expr::{Letter, NCExpr};
use crate::presentation::{GeneratorKind, Presentation};
use crate::scalar::Scalar;

#[derive(Debug)]
pub struct TensorAlgebra {
    legs: Vec<AlgebraRef>,
}

/// Name of generator `g` of leg `k` (0-based) inside a tensor product.
pub fn leg_name(g: &str, k: usize) -> String {
    format!("L{}.{g}", k + 1)
}

/// Outer product of per-leg coordinates.
pub(crate) fn outer(parts: Vec<Coords>) -> Coords {
    let mut acc: Vec<(Vec<Key>, Scalar)> = vec![(Vec::new(), Scalar::one())];
    for part in parts {
        let mut next = Vec::with_capacity(acc.len() * part.len());
        for (prefix, c) in &acc {
            for (k, v) in &part {
                let mut key = prefix.clone();
                key.push(k.clone());
                next.push((key, c * v));
            }
        }
        acc = next;
    }
    let mut out = Coords::new();
    for (k, c) in acc {
        add_into(&mut out, Key::Tuple(k), &c);
    }
    out
}

impl TensorAlgebra {
    pub fn legs(&self) -> &[AlgebraRef] {
        &self.legs
    }

    pub(crate) fn unit_coords(&self) -> Coords {
        outer(self.legs.iter().map(|l| l.unit_coords()).collect())
    }

    pub(crate) fn mul_tuples(&self, u: &[Key], v: &[Key]) -> Coords {
        outer(
            self.legs
                .iter()
                .zip(u.iter().zip(v))
                .map(|(leg, (a, b))| leg.mul_keys(a, b))
                .collect(),
        )
    }

    pub(crate) fn star_tuple(&self, u: &[Key]) -> Coords {
        outer(self.legs.iter().zip(u).map(|(leg, a)| leg.star_key(a)).collect())
    }

    pub(crate) fn tuple_factors(&self, u: &[Key]) -> Vec<NCExpr> {
        self.legs
            .iter()
            .zip(u)
            .enumerate()
            .flat_map(|(k, (leg, a))| {
                leg.basis_factors(a).into_iter().map(move |e| e.rename(|n| leg_name(n, k)))
            })
            .collect()
    }

    pub(crate) fn tuple_label(&self, u: &[Key]) -> String {
        self.legs
            .iter()
            .zip(u)
            .map(|(leg, a)| {
                let s = leg.key_label(a);
                if s.contains(' ') {
                    format!("({s})")
                } else {
                    s
                }
            })
            .collect::<Vec<_>>()
            .join("⊗")
    }
}

/// The legs of `a`: its tensor legs, or `a` itself.
pub fn legs_of(a: &AlgebraRef) -> Vec<AlgebraRef> {
    match a.as_tensor() {
        Some(t) => t.legs.clone(),
        None => vec![a.clone()],
    }
}

/// Tensor product of `legs`; nested tensor products are flattened.
///
/// The canonical presentation renames generator `g` of leg `k` to `Lk.g`
/// (1-based) and adds commutation relations between generators (and their
/// adjoints) of distinct legs.
pub fn tensor(legs: &[AlgebraRef]) -> Result<AlgebraRef, AlgebraError> {
    if legs.is_empty() {
        return Err(AlgebraError::EmptyLegList);
    }
    let legs: Vec<AlgebraRef> = legs.iter().flat_map(legs_of).collect();
    let parts: Vec<Presentation> = legs
        .iter()
        .enumerate()
        .map(|(k, l)| l.presentation().renamed(|n| leg_name(n, k)))
        .collect();
    let mut commutators = Vec::new();
    let letters_of = |p: &Presentation| -> Vec<Letter> {
        p.generators()
            .iter()
            .flat_map(|g| {
                let mut v = vec![Letter::plain(&g.name)];
                if g.kind == GeneratorKind::Free {
                    v.push(Letter::star(&g.name));
                }
                v
            })
            .collect()
    };
    for a in 0..parts.len() {
        for b in a + 1..parts.len() {
            for x in letters_of(&parts[a]) {
                for y in letters_of(&parts[b]) {
                    let (x, y) = (NCExpr::letter(x.clone()), NCExpr::letter(y));
                    commutators.push(x.mul(&y).sub(&y.mul(&x)));
                }
            }
        }
    }
    let presentation = Presentation::disjoint_union(&parts)?.with_relations(commutators);
    let t = TensorAlgebra { legs: legs.clone() };
    let mut generator_coords = Vec::new();
    for (k, l) in legs.iter().enumerate() {
        for g in l.presentation().generators() {
            let c = l.generator_coords(&g.name).expect("leg generator").clone();
            let parts = legs
                .iter()
                .enumerate()
                .map(|(j, lj)| if j == k { c.clone() } else { lj.unit_coords() })
                .collect();
            generator_coords.push(outer(parts));
        }
    }
    let signature = format!(
        "T({})",
        legs.iter().map(|l| l.signature()).collect::<Vec<_>>().join(" ⊗ ")
    );
    Ok(Algebra::assemble(signature, presentation, generator_coords, Kind::Tensor(t)))
}

/// `x₁ ⊗ x₂ ⊗ …`, owned by the (flattened) tensor product of the owners.
pub fn tensor_elements(xs: &[Element]) -> Result<Element, AlgebraError> {
    let owners: Vec<AlgebraRef> = xs.iter().map(|x| x.owner().clone()).collect();
    let target = tensor(&owners)?;
    tensor_elements_in(&target, xs)
}

/// Like [`tensor_elements`] but into an existing target object.
pub fn tensor_elements_in(target: &AlgebraRef, xs: &[Element]) -> Result<Element, AlgebraError> {
    let legs = legs_of(target);
    let mut parts = Vec::new();
    let mut pos = 0;
    for x in xs {
        let xl = legs_of(x.owner());
        check_legs(&legs, pos, &xl)?;
        parts.push(split_tuple_coords(x, xl.len()));
        pos += xl.len();
    }
    if pos != legs.len() {
        return Err(AlgebraError::ShapeMismatch(format!(
            "{} legs supplied for a {}-leg tensor",
            pos,
            legs.len()
        )));
    }
    Ok(Element::from_coords(target, concat_outer(parts)))
}

fn check_legs(target_legs: &[AlgebraRef], offset: usize, legs: &[AlgebraRef]) -> Result<(), AlgebraError> {
    if offset + legs.len() > target_legs.len() {
        return Err(AlgebraError::IndexOutOfRange { index: offset + legs.len() - 1, size: target_legs.len() });
    }
    for (j, l) in legs.iter().enumerate() {
        if !same_algebra(&target_legs[offset + j], l) {
            return Err(AlgebraError::OwnerMismatch(
                target_legs[offset + j].signature().to_string(),
                l.signature().to_string(),
            ));
        }
    }
    Ok(())
}

/// Coordinates of `x` as (leg-key tuple, coefficient) pairs.
fn split_tuple_coords(x: &Element, nlegs: usize) -> Vec<(Vec<Key>, Scalar)> {
    x.coords()
        .iter()
        .map(|(k, c)| match k {
            Key::Tuple(v) if x.owner().as_tensor().is_some() => (v.clone(), c.clone()),
            _ => {
                debug_assert_eq!(nlegs, 1);
                (vec![k.clone()], c.clone())
            }
        })
        .collect()
}

fn concat_outer(parts: Vec<Vec<(Vec<Key>, Scalar)>>) -> Coords {
    let mut acc: Vec<(Vec<Key>, Scalar)> = vec![(Vec::new(), Scalar::one())];
    for part in parts {
        let mut next = Vec::new();
        for (prefix, c) in &acc {
            for (k, v) in &part {
                let mut key = prefix.clone();
                key.extend(k.iter().cloned());
                next.push((key, c * v));
            }
        }
        acc = next;
    }
    let mut out = Coords::new();
    for (k, c) in acc {
        add_into(&mut out, Key::Tuple(k), &c);
    }
    out
}

/// Place `x` into `target` starting at leg `offset` (0-based); every other
/// leg carries the unit.
pub fn embed_legs(target: &AlgebraRef, offset: usize, x: &Element) -> Result<Element, AlgebraError> {
    let legs = legs_of(target);
    let xl = legs_of(x.owner());
    check_legs(&legs, offset, &xl)?;
    let unit_part = |l: &AlgebraRef| -> Vec<(Vec<Key>, Scalar)> {
        l.unit_coords().into_iter().map(|(k, c)| (vec![k], c)).collect()
    };
    let mut parts: Vec<Vec<(Vec<Key>, Scalar)>> = legs[..offset].iter().map(unit_part).collect();
    parts.push(split_tuple_coords(x, xl.len()));
    parts.extend(legs[offset + xl.len()..].iter().map(unit_part));
    Ok(Element::from_coords(target, concat_outer(parts)))
}

/// Embed a single-leg element in leg `k` (0-based).
pub fn leg_embed(target: &AlgebraRef, k: usize, x: &Element) -> Result<Element, AlgebraError> {
    if x.owner().as_tensor().is_some() {
        return Err(AlgebraError::ShapeMismatch("leg_embed expects a single-leg element".into()));
    }
    embed_legs(target, k, x)
}

/// Exchange legs `k` and `l` (0-based) on every basis tuple.
pub fn flip_legs(x: &Element, k: usize, l: usize) -> Result<Element, AlgebraError> {
    let t = x
        .owner()
        .as_tensor()
        .ok_or_else(|| AlgebraError::ShapeMismatch("flip needs a tensor element".into()))?;
    let n = t.legs.len();
    if k >= n || l >= n {
        return Err(AlgebraError::IndexOutOfRange { index: k.max(l), size: n });
    }
    if k == l {
        return Err(AlgebraError::ShapeMismatch("flip needs two distinct legs".into()));
    }
    let mut legs = t.legs.clone();
    legs.swap(k, l);
    let target = tensor(&legs)?;
    let mut out = Coords::new();
    for (key, c) in x.coords() {
        let Key::Tuple(mut v) = key.clone() else { unreachable!("tensor keys are tuples") };
        v.swap(k, l);
        add_into(&mut out, Key::Tuple(v), c);
    }
    Ok(Element::from_coords(&target, out))
}

/// Apply a linear functional (given on basis keys) to leg `leg` of `x`; the
/// result lives in the tensor product of the remaining legs (or the single
/// remaining leg itself).
pub fn contract_leg(
    x: &Element,
    leg: usize,
    functional: impl Fn(&Key) -> Scalar,
) -> Result<Element, AlgebraError> {
    let legs = legs_of(x.owner());
    if x.owner().as_tensor().is_none() || legs.len() < 2 {
        return Err(AlgebraError::ShapeMismatch("contraction needs at least two legs".into()));
    }
    if leg >= legs.len() {
        return Err(AlgebraError::IndexOutOfRange { index: leg, size: legs.len() });
    }
    let mut rest = legs.clone();
    rest.remove(leg);
    let target = if rest.len() == 1 { rest[0].clone() } else { tensor(&rest)? };
    let mut out = Coords::new();
    for (key, c) in x.coords() {
        let Key::Tuple(v) = key else { unreachable!("tensor keys are tuples") };
        let f = functional(&v[leg]);
        if f.is_zero() {
            continue;
        }
        let mut v = v.clone();
        v.remove(leg);
        let k = if v.len() == 1 { v.pop().expect("one key") } else { Key::Tuple(v) };
        add_into(&mut out, k, &(c * &f));
    }
    Ok(Element::from_coords(&target, out))
}

/// Identify every one-dimensional leg with `ℂ`, dropping it.
pub fn collapse_scalar_legs(x: &Element) -> Result<Element, AlgebraError> {
    let mut cur = x.clone();
    loop {
        let legs = legs_of(cur.owner());
        if cur.owner().as_tensor().is_none() || legs.len() < 2 {
            return Ok(cur);
        }
        let Some(i) = legs.iter().position(|l| l.as_finite_dim().is_some_and(|f| f.dim() == 1)) else {
            return Ok(cur);
        };
        // ℂ's only basis element is the unit, whose coordinate vector is [1]
        cur = contract_leg(&cur, i, |_| Scalar::one())?;
    }
}
