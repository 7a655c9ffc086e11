//! Unital free products in reduced-word normal form.
//!
//! Each factor `A_k` is split as `ℂ1 ⊕ Å_k` using its complement basis. A
//! basis of `A_1 ⋆ … ⋆ A_n` is given by the reduced words
//! `a_1 a_2 … a_m` with every `a_j` a complement basis letter of some factor
//! and consecutive letters from different factors; the empty word is the unit.

use crate::algebra::{add_into, single, Algebra, AlgebraRef, Coords, Element, Key, Kind};
use crate::error::AlgebraError;
use crate::expr::NCExpr;
use crate::presentation::Presentation;
use crate::scalar::Scalar;

pub type Letter = (usize, Key);

#[derive(Debug)]
pub struct FreeProductAlgebra {
    factors: Vec<AlgebraRef>,
}

/// Name of generator `g` of factor `k` (0-based) inside the free product.
pub fn copy_name(g: &str, k: usize) -> String {
    format!("{g}@{}", k + 1)
}

impl FreeProductAlgebra {
    pub fn factors(&self) -> &[AlgebraRef] {
        &self.factors
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    /// Product of two reduced words, expanded back into reduced words.
    pub(crate) fn mul_words(&self, u: &[Letter], v: &[Letter]) -> Coords {
        let mut out = Coords::new();
        self.mul_words_into(u, v, &Scalar::one(), &mut out);
        out
    }

    fn mul_words_into(&self, u: &[Letter], v: &[Letter], coef: &Scalar, out: &mut Coords) {
        let (Some((k, a)), Some((l, b))) = (u.last(), v.first()) else {
            add_into(out, Key::Reduced(concat(u, v)), coef);
            return;
        };
        if k != l {
            add_into(out, Key::Reduced(concat(u, v)), coef);
            return;
        }
        let (head, tail) = (&u[..u.len() - 1], &v[1..]);
        // a·b = λ·1 + Σ c_j r_j inside factor k
        let (lam, comp) = self.factors[*k].complement_mul(a, b);
        for (c, cc) in comp {
            let mut w = head.to_vec();
            w.push((*k, c));
            w.extend(tail.iter().cloned());
            add_into(out, Key::Reduced(w), &(coef * &cc));
        }
        if !lam.is_zero() {
            debug_assert!(head.len() + tail.len() < u.len() + v.len());
            self.mul_words_into(head, tail, &(coef * &lam), out);
        }
    }

    pub(crate) fn mul_coords(&self, x: &Coords, y: &Coords) -> Coords {
        let mut out = Coords::new();
        for (a, ca) in x {
            for (b, cb) in y {
                let (Key::Reduced(u), Key::Reduced(v)) = (a, b) else {
                    panic!("free-product coordinates must be reduced words");
                };
                self.mul_words_into(u, v, &(ca * cb), &mut out);
            }
        }
        out
    }

    fn letter_coords(&self, k: usize, lam: Scalar, comp: Coords) -> Coords {
        let mut out = Coords::new();
        add_into(&mut out, Key::Reduced(Vec::new()), &lam);
        for (c, v) in comp {
            add_into(&mut out, Key::Reduced(vec![(k, c)]), &v);
        }
        out
    }

    /// `(a_1 … a_m)* = a_m* … a_1*`, each letter adjoint split in its factor.
    pub(crate) fn star_word(&self, u: &[Letter]) -> Coords {
        let mut acc = single(Key::Reduced(Vec::new()));
        for (k, a) in u.iter().rev() {
            let (lam, comp) = self.factors[*k].complement_star(a);
            acc = self.mul_coords(&acc, &self.letter_coords(*k, lam, comp));
        }
        acc
    }

    pub(crate) fn word_factors(&self, u: &[Letter]) -> Vec<NCExpr> {
        u.iter()
            .flat_map(|(k, c)| {
                self.factors[*k]
                    .complement_factors(c)
                    .into_iter()
                    .map(move |e| e.rename(|n| copy_name(n, *k)))
            })
            .collect()
    }

    pub(crate) fn word_label(&self, u: &[Letter]) -> String {
        if u.is_empty() {
            return "1".into();
        }
        u.iter()
            .map(|(k, c)| format!("{}@{}", self.factors[*k].complement_label(c), k + 1))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Coordinates of `ι_k(x)` for factor coordinates `x`.
    pub(crate) fn embed_coords(&self, k: usize, x: &Coords) -> Coords {
        let (lam, comp) = self.factors[k].split_unit(x);
        self.letter_coords(k, lam, comp)
    }
}

fn concat(u: &[Letter], v: &[Letter]) -> Vec<Letter> {
    let mut w = u.to_vec();
    w.extend(v.iter().cloned());
    w
}

/// The unital free product of `factors`, amalgamated over the units.
///
/// The canonical presentation is the disjoint union of the factor
/// presentations, generator `g` of factor `k` renamed to `g@k` (1-based).
pub fn free_product(factors: &[AlgebraRef]) -> Result<AlgebraRef, AlgebraError> {
    if factors.is_empty() {
        return Err(AlgebraError::EmptyFactorList);
    }
    if let Some(bad) = factors.iter().find(|f| !f.supports_complement()) {
        return Err(AlgebraError::UnsupportedFactor(bad.signature().to_string()));
    }
    let parts: Vec<Presentation> = factors
        .iter()
        .enumerate()
        .map(|(k, f)| f.presentation().renamed(|n| copy_name(n, k)))
        .collect();
    let presentation = Presentation::disjoint_union(&parts)?;
    let fp = FreeProductAlgebra { factors: factors.to_vec() };
    let mut generator_coords = Vec::new();
    for (k, f) in factors.iter().enumerate() {
        for g in f.presentation().generators() {
            let c = f.generator_coords(&g.name).expect("factor generator");
            generator_coords.push(fp.embed_coords(k, c));
        }
    }
    let signature = format!(
        "FP({})",
        factors.iter().map(|f| f.signature()).collect::<Vec<_>>().join(" * ")
    );
    Ok(Algebra::assemble(signature, presentation, generator_coords, Kind::FreeProduct(fp)))
}

/// `n` copies of the same factor.
pub fn free_power(factor: &AlgebraRef, n: usize) -> Result<AlgebraRef, AlgebraError> {
    free_product(&vec![factor.clone(); n])
}

/// The canonical inclusion `ι_k` (0-based `k`) of a factor element.
pub fn iota(product: &AlgebraRef, k: usize, x: &Element) -> Result<Element, AlgebraError> {
    let fp = product
        .as_free_product()
        .ok_or_else(|| AlgebraError::ShapeMismatch(format!("{} is not a free product", product.signature())))?;
    let size = fp.num_factors();
    let factor = fp.factors.get(k).ok_or(AlgebraError::IndexOutOfRange { index: k, size })?;
    if !crate::algebra::same_algebra(factor, x.owner()) {
        return Err(AlgebraError::OwnerMismatch(
            factor.signature().to_string(),
            x.owner().signature().to_string(),
        ));
    }
    Ok(Element::from_coords(product, fp.embed_coords(k, x.coords())))
}
