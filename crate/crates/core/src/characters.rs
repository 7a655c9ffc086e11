//! Numeric characters of small presentations: scalar solutions of the
//! relations, found by a grid scan followed by Gauss–Newton refinement, and
//! grouped into connected components.

use std::collections::{BTreeMap, BTreeSet};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::expr::NCExpr;
use crate::presentation::{GeneratorKind, Presentation};

/// Generator values of a scalar character.
pub type CharacterAssignment = BTreeMap<String, Complex64>;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum SolveError {
    #[error("generator {0} has no value")]
    Unassigned(String),
    #[error("{0} real unknowns exceed the limit of {MAX_UNKNOWNS}")]
    TooManyUnknowns(usize),
    #[error("empty solution cloud")]
    EmptyCloud,
    #[error("invalid solver options: {0}")]
    BadOptions(String),
    #[error("parameter outside the family's domain: {0}")]
    OutOfDomain(String),
}

pub const MAX_UNKNOWNS: usize = 6;

fn eval_expr(e: &NCExpr, value: &impl Fn(&str, bool) -> Result<Complex64, SolveError>) -> Result<Complex64, SolveError> {
    let mut total = Complex64::new(0.0, 0.0);
    for (w, c) in e.terms() {
        let mut t = c.to_complex64();
        for l in &w.0 {
            t *= value(&l.name, l.starred)?;
        }
        total += t;
    }
    Ok(total)
}

/// Largest modulus of a relation (involution relations included) with the
/// generators read as scalars and `*` as complex conjugation.
pub fn residual(pres: &Presentation, a: &CharacterAssignment) -> Result<f64, SolveError> {
    let value = |name: &str, starred: bool| {
        let v = *a.get(name).ok_or_else(|| SolveError::Unassigned(name.to_string()))?;
        Ok(if starred { v.conj() } else { v })
    };
    let mut worst: f64 = 0.0;
    for r in pres.all_relations() {
        worst = worst.max(eval_expr(&r, &value)?.norm());
    }
    Ok(worst)
}

/// How a generator's value is read off the real coordinate vector.
#[derive(Clone, Copy, Debug)]
enum Source {
    Real(usize),
    Complex(usize),
    ConjOf(usize),
}

/// A letter as a function of the coordinates: value plus partial derivatives
/// with respect to the (at most two) coordinates it depends on.
#[derive(Clone, Copy, Debug)]
struct CLetter {
    coords: [usize; 2],
    arity: usize,
    conj: bool,
}

impl CLetter {
    fn value(&self, x: &[f64]) -> Complex64 {
        match self.arity {
            1 => Complex64::new(x[self.coords[0]], 0.0),
            _ => {
                let im = if self.conj { -x[self.coords[1]] } else { x[self.coords[1]] };
                Complex64::new(x[self.coords[0]], im)
            }
        }
    }

    fn partial(&self, slot: usize) -> Complex64 {
        match (slot, self.conj) {
            (0, _) => Complex64::new(1.0, 0.0),
            (_, false) => Complex64::new(0.0, 1.0),
            (_, true) => Complex64::new(0.0, -1.0),
        }
    }
}

#[derive(Clone, Debug)]
struct CRelation {
    terms: Vec<(Complex64, Vec<CLetter>)>,
}

impl CRelation {
    fn value(&self, x: &[f64]) -> Complex64 {
        self.terms
            .iter()
            .map(|(c, ls)| ls.iter().fold(*c, |acc, l| acc * l.value(x)))
            .sum()
    }

    /// Adds `∂/∂x_j` of this relation into `grad`.
    fn gradient(&self, x: &[f64], grad: &mut [Complex64]) {
        for (c, ls) in &self.terms {
            let vals: Vec<Complex64> = ls.iter().map(|l| l.value(x)).collect();
            for (i, l) in ls.iter().enumerate() {
                let others = vals
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .fold(*c, |acc, (_, v)| acc * v);
                for slot in 0..l.arity {
                    grad[l.coords[slot]] += others * l.partial(slot);
                }
            }
        }
    }
}

/// A presentation compiled into a real polynomial system.
#[derive(Clone, Debug)]
pub struct CharacterSystem {
    names: Vec<String>,
    sources: Vec<Source>,
    labels: Vec<String>,
    relations: Vec<CRelation>,
}

impl CharacterSystem {
    pub fn new(pres: &Presentation) -> Result<Self, SolveError> {
        let gens = pres.generators();
        let index = |n: &str| gens.iter().position(|g| g.name == n).expect("paired generator exists");
        let mut sources = Vec::with_capacity(gens.len());
        let mut labels = Vec::new();
        for g in gens {
            let s = match &g.kind {
                GeneratorKind::SelfAdjoint => {
                    labels.push(g.name.clone());
                    Source::Real(labels.len() - 1)
                }
                GeneratorKind::Free => {
                    labels.push(format!("Re {}", g.name));
                    labels.push(format!("Im {}", g.name));
                    Source::Complex(labels.len() - 2)
                }
                GeneratorKind::AdjointOf(z) => Source::ConjOf(index(z)),
            };
            sources.push(s);
        }
        if labels.len() > MAX_UNKNOWNS {
            return Err(SolveError::TooManyUnknowns(labels.len()));
        }
        let names: Vec<String> = gens.iter().map(|g| g.name.clone()).collect();
        let letter = |name: &str, starred: bool| -> CLetter {
            let i = names.iter().position(|n| n == name).expect("relation generator is declared");
            let (src, flip) = match sources[i] {
                Source::ConjOf(j) => (sources[j], true),
                s => (s, false),
            };
            match src {
                Source::Real(k) => CLetter { coords: [k, k], arity: 1, conj: false },
                Source::Complex(k) => CLetter { coords: [k, k + 1], arity: 2, conj: starred ^ flip },
                Source::ConjOf(_) => unreachable!("pairing targets are never paired themselves"),
            }
        };
        let relations = pres
            .all_relations()
            .iter()
            .map(|r| CRelation {
                terms: r
                    .terms()
                    .map(|(w, c)| (c.to_complex64(), w.0.iter().map(|l| letter(&l.name, l.starred)).collect()))
                    .collect(),
            })
            .collect();
        Ok(CharacterSystem { names, sources, labels, relations })
    }

    /// Number of real unknowns.
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Coordinate labels such as `p`, `Re z`, `Im z`.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn residual_at(&self, x: &[f64]) -> f64 {
        self.relations.iter().fold(0.0, |m, r| m.max(r.value(x).norm()))
    }

    pub fn assignment(&self, x: &[f64]) -> CharacterAssignment {
        let own = |s: Source| match s {
            Source::Real(k) => Complex64::new(x[k], 0.0),
            Source::Complex(k) => Complex64::new(x[k], x[k + 1]),
            Source::ConjOf(_) => unreachable!(),
        };
        self.names
            .iter()
            .zip(&self.sources)
            .map(|(n, &s)| {
                let v = match s {
                    Source::ConjOf(j) => own(self.sources[j]).conj(),
                    s => own(s),
                };
                (n.clone(), v)
            })
            .collect()
    }

    pub fn coordinates(&self, a: &CharacterAssignment) -> Result<Vec<f64>, SolveError> {
        let mut x = vec![0.0; self.dim()];
        for (n, s) in self.names.iter().zip(&self.sources) {
            let v = *a.get(n).ok_or_else(|| SolveError::Unassigned(n.clone()))?;
            match *s {
                Source::Real(k) => x[k] = v.re,
                Source::Complex(k) => {
                    x[k] = v.re;
                    x[k + 1] = v.im;
                }
                Source::ConjOf(_) => {}
            }
        }
        Ok(x)
    }

    /// Real and imaginary parts of every relation, and their Jacobian.
    fn linearize(&self, x: &[f64]) -> (DVector<f64>, DMatrix<f64>) {
        let m = self.relations.len();
        let d = self.dim();
        let mut f = DVector::zeros(2 * m);
        let mut jac = DMatrix::zeros(2 * m, d);
        let mut grad = vec![Complex64::new(0.0, 0.0); d];
        for (i, r) in self.relations.iter().enumerate() {
            let v = r.value(x);
            f[2 * i] = v.re;
            f[2 * i + 1] = v.im;
            grad.iter_mut().for_each(|g| *g = Complex64::new(0.0, 0.0));
            r.gradient(x, &mut grad);
            for (j, g) in grad.iter().enumerate() {
                jac[(2 * i, j)] = g.re;
                jac[(2 * i + 1, j)] = g.im;
            }
        }
        (f, jac)
    }

    /// Gauss–Newton with minimum-norm steps; `None` if the residual does not
    /// reach `tol` within `max_iter` steps.
    pub fn refine(&self, start: &[f64], tol: f64, max_iter: usize) -> Option<Vec<f64>> {
        let mut x = start.to_vec();
        for _ in 0..max_iter {
            if self.residual_at(&x) <= tol {
                return Some(x);
            }
            let (f, jac) = self.linearize(&x);
            let pinv = jac.pseudo_inverse(1e-12).ok()?;
            let step = pinv * f;
            for (xi, s) in x.iter_mut().zip(step.iter()) {
                *xi -= s;
            }
            if x.iter().any(|v| !v.is_finite()) {
                return None;
            }
        }
        (self.residual_at(&x) <= tol).then_some(x)
    }
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Per-coordinate search interval.
    pub bounds: Vec<(f64, f64)>,
    pub step: f64,
    /// Grid points with residual below this are refined. Defaults to the
    /// step: a grid point within half a cell of the solution set has a
    /// residual of that order.
    pub coarse: f64,
    /// Accepted residual after refinement.
    pub tol: f64,
    pub max_iter: usize,
}

impl SolveOptions {
    /// The same interval on every coordinate.
    pub fn cube(dim: usize, lo: f64, hi: f64, step: f64, tol: f64) -> Self {
        SolveOptions { bounds: vec![(lo, hi); dim], step, coarse: step, tol, max_iter: 50 }
    }
}

#[derive(Clone, Debug)]
pub struct SolutionCloud {
    pub labels: Vec<String>,
    pub points: Vec<Vec<f64>>,
    pub grid_points: usize,
    pub coarse_hits: usize,
    /// Refinements that did not converge.
    pub dropped: usize,
}

/// Scan a grid, refine every promising point and deduplicate.
pub fn solve_grid(pres: &Presentation, opts: &SolveOptions) -> Result<SolutionCloud, SolveError> {
    let sys = CharacterSystem::new(pres)?;
    let d = sys.dim();
    if opts.bounds.len() != d {
        return Err(SolveError::BadOptions(format!("{} intervals for {} unknowns", opts.bounds.len(), d)));
    }
    if !(opts.step > 0.0) || opts.bounds.iter().any(|(lo, hi)| !(lo <= hi)) {
        return Err(SolveError::BadOptions("step must be positive and intervals nonempty".into()));
    }
    let axes: Vec<Vec<f64>> = opts
        .bounds
        .iter()
        .map(|&(lo, hi)| {
            let n = ((hi - lo) / opts.step + 1e-9).floor() as usize;
            (0..=n).map(|i| lo + i as f64 * opts.step).collect()
        })
        .collect();
    let total: usize = axes.iter().map(|a| a.len()).product();
    let mut idx = vec![0usize; d];
    let mut x: Vec<f64> = axes.iter().map(|a| a[0]).collect();
    let mut hits = Vec::new();
    for _ in 0..total {
        if sys.residual_at(&x) < opts.coarse {
            hits.push(x.clone());
        }
        for k in (0..d).rev() {
            idx[k] += 1;
            if idx[k] < axes[k].len() {
                x[k] = axes[k][idx[k]];
                break;
            }
            idx[k] = 0;
            x[k] = axes[k][0];
        }
    }
    let coarse_hits = hits.len();
    let mut dropped = 0;
    let mut seen = BTreeSet::new();
    let mut points = Vec::new();
    for h in hits {
        match sys.refine(&h, opts.tol, opts.max_iter) {
            Some(p) => {
                let key: Vec<i64> = p.iter().map(|v| (v * 1e7).round() as i64).collect();
                if seen.insert(key) {
                    points.push(p);
                }
            }
            None => dropped += 1,
        }
    }
    points.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
    Ok(SolutionCloud { labels: sys.labels().to_vec(), points, grid_points: total, coarse_hits, dropped })
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Component {
    pub samples: usize,
    pub representative: Vec<f64>,
    pub diameter: f64,
    pub isolated: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ComponentReport {
    pub labels: Vec<String>,
    pub merge_radius: f64,
    pub component_count: usize,
    pub isolated_count: usize,
    pub components: Vec<Component>,
}

/// Single-linkage clustering at `merge_radius`.
pub fn cluster_components(
    points: &[Vec<f64>],
    labels: &[String],
    merge_radius: f64,
) -> Result<ComponentReport, SolveError> {
    if points.is_empty() {
        return Err(SolveError::EmptyCloud);
    }
    let n = points.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            if dist(&points[i], &points[j]) < merge_radius {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let components: Vec<Component> = groups
        .values()
        .map(|members| {
            let mut diameter: f64 = 0.0;
            for (a, &i) in members.iter().enumerate() {
                for &j in &members[a + 1..] {
                    diameter = diameter.max(dist(&points[i], &points[j]));
                }
            }
            Component {
                samples: members.len(),
                representative: points[members[0]].clone(),
                diameter,
                isolated: diameter < merge_radius / 2.0,
            }
        })
        .collect();
    Ok(ComponentReport {
        labels: labels.to_vec(),
        merge_radius,
        component_count: components.len(),
        isolated_count: components.iter().filter(|c| c.isolated).count(),
        components,
    })
}

/// The closed-form character families of the `p, q, z` presentation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Family {
    /// `p = ½ + √(¼ − |ζ|²)`, `q = 1 − p`, `z = ζ`, `|ζ| < ½`.
    Plus(Complex64),
    /// `p = ½ − √(¼ − |ζ|²)`, `q = 1 − p`, `z = ζ`, `|ζ| < ½`.
    Minus(Complex64),
    /// `p = q = ½`, `z = ζ`, `|ζ| = ½`.
    Zero(Complex64),
    /// `p = q = k`, `z = 0`, `k ∈ {0, 1}`.
    Omega(u8),
}

fn pqz(p: f64, q: f64, z: Complex64) -> CharacterAssignment {
    [
        ("p".to_string(), Complex64::new(p, 0.0)),
        ("q".to_string(), Complex64::new(q, 0.0)),
        ("z".to_string(), z),
    ]
    .into_iter()
    .collect()
}

pub fn noqg_family(f: Family) -> Result<CharacterAssignment, SolveError> {
    match f {
        Family::Plus(z) | Family::Minus(z) => {
            if z.norm() >= 0.5 {
                return Err(SolveError::OutOfDomain(format!("|ζ| = {} is not below 1/2", z.norm())));
            }
            let r = (0.25 - z.norm_sqr()).sqrt();
            let p = if matches!(f, Family::Plus(_)) { 0.5 + r } else { 0.5 - r };
            Ok(pqz(p, 1.0 - p, z))
        }
        Family::Zero(z) => {
            if (z.norm() - 0.5).abs() > 1e-12 {
                return Err(SolveError::OutOfDomain(format!("|ζ| = {} is not 1/2", z.norm())));
            }
            Ok(pqz(0.5, 0.5, z))
        }
        Family::Omega(k) => {
            if k > 1 {
                return Err(SolveError::OutOfDomain(format!("k = {k} is not 0 or 1")));
            }
            Ok(pqz(k as f64, k as f64, Complex64::new(0.0, 0.0)))
        }
    }
}

fn assignment_distance(a: &CharacterAssignment, b: &CharacterAssignment) -> f64 {
    a.iter().map(|(k, v)| (v - b[k]).norm_sqr()).sum::<f64>().sqrt()
}

/// Distance from `a` to a nearby member of the closed-form families, with
/// that member. The candidate with `ζ = z` (radially projected when
/// `|z| ≥ ½`) is used for the sphere families.
pub fn nearest_family_member(a: &CharacterAssignment) -> (f64, Family) {
    let z = a["z"];
    let mut candidates = vec![Family::Omega(0), Family::Omega(1)];
    if z.norm() < 0.5 {
        candidates.push(Family::Plus(z));
        candidates.push(Family::Minus(z));
    } else {
        candidates.push(Family::Zero(z * (0.5 / z.norm())));
    }
    candidates
        .into_iter()
        .map(|f| (assignment_distance(a, &noqg_family(f).expect("in domain")), f))
        .min_by(|x, y| x.0.total_cmp(&y.0))
        .expect("nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Generator;
    use crate::qsg::noqg_presentation;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn idempotent() -> Presentation {
        let p = NCExpr::generator("p");
        Presentation::new(vec![Generator::self_adjoint("p")], vec![p.mul(&p).sub(&p)]).unwrap()
    }

    fn circle() -> Presentation {
        let u = NCExpr::generator("u");
        let us = u.star();
        Presentation::new(
            vec![Generator::free("u")],
            vec![us.mul(&u).sub(&NCExpr::one()), u.mul(&us).sub(&NCExpr::one())],
        )
        .unwrap()
    }

    #[test]
    fn residuals_of_family_members() {
        let pres = noqg_presentation();
        assert_eq!(residual(&pres, &noqg_family(Family::Omega(0)).unwrap()).unwrap(), 0.0);
        let chi0 = noqg_family(Family::Zero(c(0.5, 0.0))).unwrap();
        assert!(residual(&pres, &chi0).unwrap() < 1e-15);
        let plus0 = noqg_family(Family::Plus(c(0.0, 0.0))).unwrap();
        assert_eq!(plus0, pqz(1.0, 0.0, c(0.0, 0.0)));
        assert_eq!(residual(&pres, &plus0).unwrap(), 0.0);
        let mut missing = plus0.clone();
        missing.remove("z");
        assert_eq!(residual(&pres, &missing), Err(SolveError::Unassigned("z".into())));
    }

    #[test]
    fn family_formulas() {
        let plus = noqg_family(Family::Plus(c(0.3, 0.0))).unwrap();
        assert!((plus["p"] - c(0.9, 0.0)).norm() < 1e-15);
        assert!((plus["q"] - c(0.1, 0.0)).norm() < 1e-15);
        assert_eq!(noqg_family(Family::Zero(c(0.0, 0.5))).unwrap(), pqz(0.5, 0.5, c(0.0, 0.5)));
        assert_eq!(noqg_family(Family::Omega(1)).unwrap(), pqz(1.0, 1.0, c(0.0, 0.0)));
        assert!(noqg_family(Family::Plus(c(0.5, 0.0))).is_err());
        assert!(noqg_family(Family::Zero(c(0.3, 0.0))).is_err());
        assert!(noqg_family(Family::Omega(2)).is_err());
    }

    #[test]
    fn jacobian_matches_finite_differences() {
        let sys = CharacterSystem::new(&noqg_presentation()).unwrap();
        let x = [0.3, 0.6, -0.2, 0.4];
        let (f, jac) = sys.linearize(&x);
        let h = 1e-6;
        for j in 0..4 {
            let mut xp = x;
            xp[j] += h;
            let (fp, _) = sys.linearize(&xp);
            for i in 0..f.len() {
                assert!(((fp[i] - f[i]) / h - jac[(i, j)]).abs() < 1e-4, "entry ({i}, {j})");
            }
        }
    }

    #[test]
    fn adjoint_pairs_are_derived() {
        let pres = Presentation::new(
            vec![Generator::free("z"), Generator::adjoint_of("w", "z")],
            vec![NCExpr::word(&["w", "z"]).sub(&NCExpr::one())],
        )
        .unwrap();
        let sys = CharacterSystem::new(&pres).unwrap();
        assert_eq!(sys.dim(), 2);
        let a = sys.assignment(&[0.6, 0.8]);
        assert_eq!(a["w"], c(0.6, -0.8));
        assert!(sys.residual_at(&[0.6, 0.8]) < 1e-15);
        assert!(residual(&pres, &a).unwrap() < 1e-15);
    }

    #[test]
    fn too_many_unknowns_rejected() {
        let gens = (0..4).map(|i| Generator::free(format!("z{i}"))).collect();
        let pres = Presentation::new(gens, vec![]).unwrap();
        assert_eq!(CharacterSystem::new(&pres).unwrap_err(), SolveError::TooManyUnknowns(8));
    }

    #[test]
    fn idempotent_scalars() {
        let pres = idempotent();
        let cloud = solve_grid(&pres, &SolveOptions::cube(1, -1.5, 1.5, 0.1, 1e-10)).unwrap();
        assert_eq!(cloud.points.len(), 2);
        assert!(cloud.points[0][0].abs() < 1e-10);
        assert!((cloud.points[1][0] - 1.0).abs() < 1e-10);
        let report = cluster_components(&cloud.points, &cloud.labels, 0.25).unwrap();
        assert_eq!(report.component_count, 2);
        assert_eq!(report.isolated_count, 2);
    }

    #[test]
    fn unit_circle_is_one_component() {
        let cloud = solve_grid(&circle(), &SolveOptions::cube(2, -1.5, 1.5, 0.1, 1e-10)).unwrap();
        assert!(cloud.points.len() > 20);
        for p in &cloud.points {
            assert!((p[0].hypot(p[1]) - 1.0).abs() < 1e-9);
        }
        let report = cluster_components(&cloud.points, &cloud.labels, 0.25).unwrap();
        assert_eq!(report.component_count, 1);
        assert!(!report.components[0].isolated);
    }

    #[test]
    fn noqg_characters_are_a_sphere_and_two_points() {
        let pres = noqg_presentation();
        let sys = CharacterSystem::new(&pres).unwrap();
        for step in [0.1, 0.05] {
            let cloud = solve_grid(&pres, &SolveOptions::cube(4, -1.5, 1.5, step, 1e-10)).unwrap();
            assert_eq!(cloud.dropped, 0);
            let report = cluster_components(&cloud.points, &cloud.labels, 2.5 * step).unwrap();
            assert_eq!(report.component_count, 3);
            assert_eq!(report.isolated_count, 2);
            for p in &cloud.points {
                assert!(nearest_family_member(&sys.assignment(p)).0 < 1e-5);
            }
            // the equator |z| = 1/2 glues the two hemispheres at p = q = 1/2
            for p in cloud.points.iter().filter(|p| p[2].hypot(p[3]) > 0.499) {
                assert!((p[0] - 0.5).abs() < 0.05 && (p[1] - 0.5).abs() < 0.05);
            }
        }
    }

    #[test]
    fn empty_cloud_rejected() {
        assert_eq!(cluster_components(&[], &[], 0.25).unwrap_err(), SolveError::EmptyCloud);
    }

    #[test]
    fn bad_options_rejected() {
        let mut o = SolveOptions::cube(1, -1.0, 1.0, 0.0, 1e-10);
        assert!(solve_grid(&idempotent(), &o).is_err());
        o.step = 0.1;
        o.bounds.push((0.0, 1.0));
        assert!(solve_grid(&idempotent(), &o).is_err());
    }

    #[test]
    fn nearest_member_of_perturbed_points() {
        let mut a = noqg_family(Family::Minus(c(0.1, -0.2))).unwrap();
        assert!(nearest_family_member(&a).0 < 1e-15);
        a.insert("p".into(), c(a["p"].re + 1e-3, 0.0));
        let (d, f) = nearest_family_member(&a);
        assert!((d - 1e-3).abs() < 1e-9);
        assert!(matches!(f, Family::Minus(_)));
    }
}
