//! `ℂ² ⋆ ℂ²` as continuous functions `[0, 1] → M₂(ℂ)` with diagonal
//! end-point values, generated by `p(t)` and `q(t)`. Used as a numeric
//! zero-test oracle for the exact free-product arithmetic.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{eval_ncexpr, make_cn, same_algebra, AlgebraRef, Element};
use crate::error::AlgebraError;
use crate::expr::NCExpr;
use crate::products::{free_power, legs_of};
use crate::qsg::{composition_qsg_qmap2, free_product_qsg, group_function_qsg, FiniteGroup};
use crate::scalar::Scalar;

pub type CMat = DMatrix<Complex64>;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn check_t(t: f64) -> Result<(), AlgebraError> {
    if (0.0..=1.0).contains(&t) {
        Ok(())
    } else {
        Err(AlgebraError::Other(format!("sample point {t} outside [0, 1]")))
    }
}

/// `p(t) = diag(0, 1)`.
pub fn sample_p(t: f64) -> Result<CMat, AlgebraError> {
    check_t(t)?;
    Ok(CMat::from_row_slice(2, 2, &[c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]))
}

/// `q(t) = ½ [[1 − cos 2πt, i sin 2πt], [−i sin 2πt, 1 + cos 2πt]]`.
pub fn sample_q(t: f64) -> Result<CMat, AlgebraError> {
    check_t(t)?;
    let (s, co) = (2.0 * PI * t).sin_cos();
    Ok(CMat::from_row_slice(
        2,
        2,
        &[c((1.0 - co) / 2.0, 0.0), c(0.0, s / 2.0), c(0.0, -s / 2.0), c((1.0 + co) / 2.0, 0.0)],
    ))
}

/// Largest entry modulus.
pub fn max_abs(m: &CMat) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

/// The two-projection algebra `ℂ² ⋆ ℂ²` with `p = e1@1`, `q = e1@2`.
pub fn two_projections() -> AlgebraRef {
    free_power(&make_cn(2).expect("n = 2"), 2).expect("two factors")
}

/// Generator values at `t`: `e1@1 ↦ p`, `e2@1 ↦ 1 − p`, `e1@2 ↦ q`, `e2@2 ↦ 1 − q`.
pub fn generator_values(t: f64) -> Result<BTreeMap<String, CMat>, AlgebraError> {
    let (p, q) = (sample_p(t)?, sample_q(t)?);
    let id = CMat::identity(2, 2);
    Ok([
        ("e1@1".to_string(), p.clone()),
        ("e2@1".to_string(), &id - &p),
        ("e1@2".to_string(), q.clone()),
        ("e2@2".to_string(), &id - &q),
    ]
    .into_iter()
    .collect())
}

/// Evaluate an expression with matrix values; starred letters use the
/// conjugate transpose.
pub fn eval_numeric(e: &NCExpr, values: &BTreeMap<String, CMat>, dim: usize) -> Result<CMat, AlgebraError> {
    let mut total = CMat::zeros(dim, dim);
    for (w, coef) in e.terms() {
        let mut m = CMat::identity(dim, dim) * coef.to_complex64();
        for l in &w.0 {
            let v = values.get(&l.name).ok_or_else(|| AlgebraError::Unassigned(l.name.clone()))?;
            m = if l.starred { m * v.adjoint() } else { m * v };
        }
        total += m;
    }
    Ok(total)
}

fn require_model(x: &Element) -> Result<(), AlgebraError> {
    let model = two_projections();
    if same_algebra(x.owner(), &model) {
        Ok(())
    } else {
        Err(AlgebraError::OwnerMismatch(model.signature().to_string(), x.owner().signature().to_string()))
    }
}

/// `x(t)` for `x ∈ ℂ² ⋆ ℂ²`.
pub fn evaluate_element(x: &Element, t: f64) -> Result<CMat, AlgebraError> {
    require_model(x)?;
    eval_numeric(&x.to_expression(), &generator_values(t)?, 2)
}

/// `x(s, t)` for `x` in a tensor power of `ℂ² ⋆ ℂ²`, leg `k` sampled at
/// `params[k]`; the result is the Kronecker product matrix.
pub fn evaluate_tensor(x: &Element, params: &[f64]) -> Result<CMat, AlgebraError> {
    let legs = legs_of(x.owner());
    if legs.len() != params.len() {
        return Err(AlgebraError::ShapeMismatch(format!("{} legs, {} parameters", legs.len(), params.len())));
    }
    let model = two_projections();
    if legs.iter().any(|l| !same_algebra(l, &model)) {
        return Err(AlgebraError::OwnerMismatch(model.signature().to_string(), x.owner().signature().to_string()));
    }
    if x.owner().as_tensor().is_none() {
        return evaluate_element(x, params[0]);
    }
    let values: Vec<BTreeMap<String, CMat>> = params.iter().map(|&t| generator_values(t)).collect::<Result<_, _>>()?;
    let n = 1usize << legs.len();
    let mut total = CMat::zeros(n, n);
    let mut cache: BTreeMap<(usize, crate::algebra::Key), CMat> = BTreeMap::new();
    for (key, coef) in x.coords() {
        let crate::algebra::Key::Tuple(parts) = key else { unreachable!("tensor keys are tuples") };
        let mut m = CMat::identity(1, 1) * coef.to_complex64();
        for (k, part) in parts.iter().enumerate() {
            let leg = cache.entry((k, part.clone())).or_insert_with(|| {
                eval_numeric(&legs[k].basis_expression(part), &values[k], 2).expect("model generators")
            });
            m = m.kronecker(leg);
        }
        total += m;
    }
    Ok(total)
}

/// `samples` points of `[0, 1]`: a uniform grid through both endpoints,
/// followed by golden-ratio offsets.
pub fn sample_points(samples: usize) -> Vec<f64> {
    let samples = samples.max(2);
    let uniform = samples.div_ceil(2).max(2);
    let golden = (5f64.sqrt() - 1.0) / 2.0;
    let mut pts: Vec<f64> = (0..uniform).map(|i| i as f64 / (uniform - 1) as f64).collect();
    pts.extend((1..=samples - uniform).map(|k| (k as f64 * golden).fract()));
    pts
}

/// Largest entry of `x(t)` over the sample points.
pub fn oracle_residual(x: &Element, samples: usize) -> Result<f64, AlgebraError> {
    require_model(x)?;
    expr_residual(&x.to_expression(), samples)
}

fn expr_residual(e: &NCExpr, samples: usize) -> Result<f64, AlgebraError> {
    let mut worst: f64 = 0.0;
    for t in sample_points(samples) {
        worst = worst.max(max_abs(&eval_numeric(e, &generator_values(t)?, 2)?));
    }
    Ok(worst)
}

pub fn oracle_is_zero(x: &Element, samples: usize, tol: f64) -> Result<bool, AlgebraError> {
    Ok(oracle_residual(x, samples)? <= tol)
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ModelReport {
    pub samples: usize,
    pub pairs: usize,
    pub p_idempotent: f64,
    pub q_idempotent: f64,
    pub self_adjoint: f64,
    pub endpoint_off_diagonal: f64,
    pub delta_idempotent: f64,
    pub delta_self_adjoint: f64,
    pub composition_idempotent: f64,
    pub composition_self_adjoint: f64,
}

impl ModelReport {
    pub fn ok(&self, tol: f64, endpoint_tol: f64) -> bool {
        [
            self.p_idempotent,
            self.q_idempotent,
            self.self_adjoint,
            self.delta_idempotent,
            self.delta_self_adjoint,
            self.composition_idempotent,
            self.composition_self_adjoint,
        ]
        .iter()
        .all(|&r| r <= tol)
            && self.endpoint_off_diagonal <= endpoint_tol
    }
}

/// `(s, t)` pairs: both endpoints crossed, then golden-ratio points.
pub fn sample_pairs(pairs: usize) -> Vec<(f64, f64)> {
    let g1 = (5f64.sqrt() - 1.0) / 2.0;
    let g2 = 2f64.sqrt() - 1.0;
    let mut out = vec![(0.0, 0.0), (0.0, 1.0), (1.0, 0.0), (1.0, 1.0), (0.25, 1.0 / 3.0)];
    let mut k = 1;
    while out.len() < pairs {
        out.push(((k as f64 * g1).fract(), (k as f64 * g2).fract()));
        k += 1;
    }
    out.truncate(pairs);
    out
}

/// The model's defining properties: `p(t)`, `q(t)` self-adjoint idempotents
/// with diagonal end-point values, and both comultiplications of `p`
/// self-adjoint idempotents as `4 × 4` matrix functions.
pub fn verify_model(samples: usize, pairs: usize) -> Result<ModelReport, AlgebraError> {
    let mut r = ModelReport {
        samples,
        pairs,
        p_idempotent: 0.0,
        q_idempotent: 0.0,
        self_adjoint: 0.0,
        endpoint_off_diagonal: 0.0,
        delta_idempotent: 0.0,
        delta_self_adjoint: 0.0,
        composition_idempotent: 0.0,
        composition_self_adjoint: 0.0,
    };
    let uniform: Vec<f64> = (0..samples.max(2)).map(|i| i as f64 / (samples.max(2) - 1) as f64).collect();
    for &t in &uniform {
        let (p, q) = (sample_p(t)?, sample_q(t)?);
        r.p_idempotent = r.p_idempotent.max(max_abs(&(&p * &p - &p)));
        r.q_idempotent = r.q_idempotent.max(max_abs(&(&q * &q - &q)));
        r.self_adjoint = r.self_adjoint.max(max_abs(&(p.adjoint() - &p)).max(max_abs(&(q.adjoint() - &q))));
    }
    for t in [0.0, 1.0] {
        let (p, q) = (sample_p(t)?, sample_q(t)?);
        for m in [p, q] {
            r.endpoint_off_diagonal = r.endpoint_off_diagonal.max(m[(0, 1)].norm()).max(m[(1, 0)].norm());
        }
    }
    let z2 = group_function_qsg(&FiniteGroup::cyclic(2)?)?;
    let free = free_product_qsg(&[z2.clone(), z2]).map_err(|e| AlgebraError::Other(e.to_string()))?;
    let comp = composition_qsg_qmap2()?;
    for (s, t) in sample_pairs(pairs) {
        for (d, idem, sa) in [
            (free.delta("e1@1"), &mut r.delta_idempotent, &mut r.delta_self_adjoint),
            (comp.delta("e1@1"), &mut r.composition_idempotent, &mut r.composition_self_adjoint),
        ] {
            let m = evaluate_tensor(d, &[s, t])?;
            *idem = idem.max(max_abs(&(&m * &m - &m)));
            *sa = sa.max(max_abs(&(m.adjoint() - &m)));
        }
    }
    Ok(r)
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CrossCheckReport {
    pub zero_corpus: usize,
    pub nonzero_corpus: usize,
    /// Exactly zero, numerically not.
    pub soundness_violations: usize,
    /// Exactly nonzero, numerically below the detection threshold.
    pub missed_nonzeros: usize,
    /// Zero-corpus expressions whose exact value was not zero.
    pub construction_failures: usize,
    /// Raw expressions whose numeric value differs from that of their exact
    /// canonical form.
    pub reduction_disagreements: usize,
    pub max_zero_residual: f64,
    pub min_nonzero_residual: f64,
}

impl CrossCheckReport {
    pub fn ok(&self) -> bool {
        self.soundness_violations == 0
            && self.missed_nonzeros == 0
            && self.construction_failures == 0
            && self.reduction_disagreements == 0
    }
}

const GENS: [&str; 4] = ["e1@1", "e2@1", "e1@2", "e2@2"];

fn random_coefficient(rng: &mut ChaCha8Rng) -> Scalar {
    // magnitude at least 1/8
    let num = rng.gen_range(1..=16) * if rng.gen_bool(0.5) { 1 } else { -1 };
    let re = Scalar::ratio(num, 8);
    if rng.gen_bool(0.3) {
        &re + &(&Scalar::i() * &Scalar::ratio(rng.gen_range(-8..=8), 8))
    } else {
        re
    }
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> NCExpr {
    let len = rng.gen_range(0..=max_len);
    let names: Vec<&str> = (0..len).map(|_| GENS[rng.gen_range(0..4)]).collect();
    NCExpr::word(&names)
}

/// A relation of the model, as an expression that must vanish.
fn random_relation(rng: &mut ChaCha8Rng) -> NCExpr {
    let k = rng.gen_range(1..=2);
    let e1 = NCExpr::generator(format!("e1@{k}"));
    let e2 = NCExpr::generator(format!("e2@{k}"));
    match rng.gen_range(0..4) {
        0 => e1.mul(&e1).sub(&e1),
        1 => e1.mul(&e2),
        2 => e1.add(&e2).sub(&NCExpr::one()),
        _ => e2.mul(&e1),
    }
}

/// An alternating word in `p`, `q` of length `len`.
fn reduced_word(rng: &mut ChaCha8Rng, len: usize) -> NCExpr {
    let mut k = rng.gen_range(0..2);
    let mut names = Vec::with_capacity(len);
    for _ in 0..len {
        names.push(if k == 0 { "e1@1" } else { "e1@2" });
        k ^= 1;
    }
    NCExpr::word(&names)
}

/// Soundness and effectiveness of the numeric oracle against the exact
/// arithmetic on seeded random corpora.
///
/// Zero corpus: sums of `u · r · v` with `r` a model relation, as raw
/// expressions; each must be exactly zero and numerically `≤ tol`.
/// Nonzero corpus: combinations of distinct reduced words of length ≤ 4 with
/// coefficients of modulus ≥ 1/8, multiplied out from a random raw
/// expression; each must have oracle residual `≥ detect`.
pub fn cross_check(seed: u64, corpus: usize, samples: usize, tol: f64, detect: f64) -> Result<CrossCheckReport, AlgebraError> {
    let model = two_projections();
    let mut asg = BTreeMap::new();
    for g in GENS {
        asg.insert(g.to_string(), Element::generator(&model, g)?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = CrossCheckReport {
        zero_corpus: corpus,
        nonzero_corpus: corpus,
        soundness_violations: 0,
        missed_nonzeros: 0,
        construction_failures: 0,
        reduction_disagreements: 0,
        max_zero_residual: 0.0,
        min_nonzero_residual: f64::INFINITY,
    };
    for _ in 0..corpus {
        let mut e = NCExpr::zero();
        for _ in 0..rng.gen_range(1..=3) {
            let term = random_word(&mut rng, 2).mul(&random_relation(&mut rng)).mul(&random_word(&mut rng, 2));
            e = e.add(&term.scale(&random_coefficient(&mut rng)));
        }
        let exact = eval_ncexpr(&e, &model, &asg)?;
        if !exact.is_zero() {
            r.construction_failures += 1;
            continue;
        }
        let res = expr_residual(&e, samples)?;
        r.max_zero_residual = r.max_zero_residual.max(res);
        if res > tol {
            r.soundness_violations += 1;
        }
    }
    for _ in 0..corpus {
        // distinct reduced words, each with a coefficient of modulus ≥ 1/8
        let mut target = NCExpr::zero();
        let mut used = Vec::new();
        for _ in 0..rng.gen_range(1..=3) {
            let len = rng.gen_range(0..=4);
            let w = reduced_word(&mut rng, len);
            if !used.contains(&w) {
                used.push(w.clone());
                target = target.add(&w.scale(&random_coefficient(&mut rng)));
            }
        }
        // disguise it with a vanishing raw expression
        let noise = random_word(&mut rng, 2).mul(&random_relation(&mut rng)).mul(&random_word(&mut rng, 1));
        let raw = target.add(&noise);
        let exact = eval_ncexpr(&raw, &model, &asg)?;
        if exact.is_zero() {
            r.construction_failures += 1;
            continue;
        }
        let canonical = exact.to_expression();
        for t in sample_points(8) {
            let v = generator_values(t)?;
            let d = max_abs(&(eval_numeric(&raw, &v, 2)? - eval_numeric(&canonical, &v, 2)?));
            if d > tol {
                r.reduction_disagreements += 1;
                break;
            }
        }
        let res = oracle_residual(&exact, samples)?;
        r.min_nonzero_residual = r.min_nonzero_residual.min(res);
        if res < detect {
            r.missed_nonzeros += 1;
        }
    }
    Ok(r)
}
