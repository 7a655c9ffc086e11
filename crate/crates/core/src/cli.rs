//! Expression and presentation-file parsing, named verification suites and
//! their JSON reports.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{make_cn, make_matrix_algebra, AlgebraRef, Element, Key};
use crate::characters::{self, Family, SolveOptions};
use crate::error::AlgebraError;
use crate::expr::{Letter, NCExpr};
use crate::funcmodel;
use crate::morphism::{
    decompose_over_cn, factor_through_free_product, iota_morphism, mu, pi, unital_embed, Morphism,
};
use crate::presentation::{Generator, GeneratorKind, Presentation};
use crate::products::{free_power, free_product, iota, tensor, tensor_elements_in};
use crate::qsg::{self, CheckFailure, FiniteGroup, QuantumSemigroup};
use crate::scalar::Scalar;

// ---------------------------------------------------------------- parsing

#[derive(Error, Debug, Clone, PartialEq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigRational, bool),
    Name(String),
    Plus,
    Minus,
    Star,
    Prime,
    Open,
    Close,
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '@' | '.')
}

fn err(column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line: 1, column, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            _ if c.is_whitespace() => i += 1,
            '+' => (out.push((col, Tok::Plus)), i += 1).1,
            '-' => (out.push((col, Tok::Minus)), i += 1).1,
            '*' => (out.push((col, Tok::Star)), i += 1).1,
            '\'' => (out.push((col, Tok::Prime)), i += 1).1,
            '(' => (out.push((col, Tok::Open)), i += 1).1,
            ')' => (out.push((col, Tok::Close)), i += 1).1,
            _ if c.is_ascii_digit() => {
                let digits = |i: &mut usize| {
                    let s = *i;
                    while *i < chars.len() && chars[*i].is_ascii_digit() {
                        *i += 1;
                    }
                    chars[s..*i].iter().collect::<String>()
                };
                let num: BigInt = digits(&mut i).parse().expect("digits");
                let mut value = BigRational::from_integer(num);
                if i < chars.len() && chars[i] == '/' {
                    i += 1;
                    if i >= chars.len() || !chars[i].is_ascii_digit() {
                        return Err(err(i + 1, "expected a denominator after '/'"));
                    }
                    let den: BigInt = digits(&mut i).parse().expect("digits");
                    if den.is_zero() {
                        return Err(err(col, "zero denominator"));
                    }
                    value /= BigRational::from_integer(den);
                }
                let imaginary = i < chars.len() && chars[i] == 'i' && !chars.get(i + 1).is_some_and(|&c| is_ident(c));
                if imaginary {
                    i += 1;
                }
                if i < chars.len() && is_ident_start(chars[i]) {
                    return Err(err(i + 1, "a number must be separated from a name"));
                }
                out.push((col, Tok::Num(value, imaginary)));
            }
            _ if is_ident_start(c) => {
                let s = i;
                while i < chars.len() && is_ident(chars[i]) {
                    i += 1;
                }
                out.push((col, Tok::Name(chars[s..i].iter().collect())));
            }
            _ => return Err(err(col, format!("unexpected character '{c}'"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(c, _)| *c)
    }

    fn expression(&mut self) -> Result<NCExpr, ParseError> {
        let mut acc = NCExpr::zero();
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -1
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc.sub(&t) } else { acc.add(&t) };
            sign = match self.peek() {
                Some(Tok::Plus) => 1,
                Some(Tok::Minus) => -1,
                _ => return Ok(acc),
            };
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<NCExpr, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Num(..) | Tok::Name(_) | Tok::Open) => acc = acc.mul(&self.factor()?),
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<NCExpr, ParseError> {
        let col = self.column();
        let mut f = match self.toks.get(self.pos).map(|(_, t)| t.clone()) {
            Some(Tok::Num(v, imaginary)) => {
                self.pos += 1;
                let s = if imaginary {
                    Scalar::new(BigRational::zero(), v)
                } else {
                    Scalar::from_rational(v)
                };
                NCExpr::constant(s)
            }
            Some(Tok::Name(n)) => {
                self.pos += 1;
                NCExpr::generator(n)
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let e = self.expression()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(err(self.column(), "expected ')'"));
                }
                self.pos += 1;
                e
            }
            Some(t) => return Err(err(col, format!("unexpected {t:?}"))),
            None => return Err(err(col, "unexpected end of expression")),
        };
        while self.peek() == Some(&Tok::Prime) {
            self.pos += 1;
            f = f.star();
        }
        Ok(f)
    }
}

/// Parse an expression such as `p - p p - z' z` or `1/2 (1 - u)`.
///
/// Juxtaposition (or `*`) is the noncommutative product, a postfix `'` the
/// adjoint, and coefficients are exact rationals optionally suffixed by `i`.
pub fn parse_expression(text: &str) -> Result<NCExpr, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(err(1, "empty expression"));
    }
    let mut p = Parser { toks, pos: 0, end: text.chars().count() + 1 };
    let e = p.expression()?;
    if p.pos < p.toks.len() {
        return Err(err(p.column(), "unexpected trailing input"));
    }
    Ok(e)
}

/// Parse a presentation file:
///
/// ```text
/// # comment
/// gen p selfadjoint
/// gen z
/// gen w adjoint_of z
/// rel p - p p - z' z
/// rel z p = z - q z
/// ```
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut gens = Vec::new();
    let mut rels = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let at = |column: usize, message: String| ParseError { line: ln + 1, column, message };
        let trimmed = line.trim_start();
        let indent = line.len() - trimmed.len();
        let Some(keyword) = trimmed.split_whitespace().next() else { continue };
        let rest = &trimmed[keyword.len()..];
        let rest_col = indent + keyword.len() + 1;
        match keyword {
            "gen" => {
                let words: Vec<&str> = rest.split_whitespace().collect();
                let kind = match words.as_slice() {
                    [_] => GeneratorKind::Free,
                    [_, "selfadjoint"] => GeneratorKind::SelfAdjoint,
                    [_, "adjoint_of", other] => GeneratorKind::AdjointOf(other.to_string()),
                    _ => return Err(at(rest_col, "expected: gen NAME [selfadjoint | adjoint_of OTHER]".into())),
                };
                let name = words[0];
                if !name.starts_with(is_ident_start) || !name.chars().all(is_ident) {
                    return Err(at(rest_col, format!("invalid generator name '{name}'")));
                }
                gens.push(Generator { name: name.to_string(), kind });
            }
            "rel" => {
                let sides: Vec<&str> = rest.split('=').collect();
                let shift = |e: ParseError, offset: usize| at(rest_col + offset + e.column - 1, e.message);
                let lhs = parse_expression(sides[0]).map_err(|e| shift(e, 0))?;
                let e = match sides.len() {
                    1 => lhs,
                    2 => lhs.sub(&parse_expression(sides[1]).map_err(|e| shift(e, sides[0].chars().count() + 1))?),
                    _ => return Err(at(rest_col, "at most one '=' per relation".into())),
                };
                rels.push(e);
            }
            other => return Err(at(indent + 1, format!("unknown keyword '{other}'"))),
        }
    }
    Presentation::new(gens, rels).map_err(|e| ParseError { line: 0, column: 0, message: e.to_string() })
}

/// The canonical text of a presentation; parsing it gives the same value.
pub fn print_presentation(p: &Presentation) -> String {
    let mut out = String::new();
    for g in p.generators() {
        match &g.kind {
            GeneratorKind::SelfAdjoint => out.push_str(&format!("gen {} selfadjoint\n", g.name)),
            GeneratorKind::Free => out.push_str(&format!("gen {}\n", g.name)),
            GeneratorKind::AdjointOf(z) => out.push_str(&format!("gen {} adjoint_of {}\n", g.name, z)),
        }
    }
    for r in p.relations() {
        out.push_str(&format!("rel {r}\n"));
    }
    out
}

// ---------------------------------------------------------------- reports

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Residual {
    Number(f64),
    Text(String),
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Number(x) => write!(f, "{x:e}"),
            Residual::Text(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub residual: Residual,
    pub millis: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckRecord>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<serde_json::Value>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport { suite: suite.to_string(), checks: Vec::new(), status: Status::Ok, details: None }
    }

    pub fn ok(&self) -> bool {
        self.status == Status::Ok
    }

    /// Run a check; `Ok` carries the residual of a passing check, `Err` the
    /// reason for failure.
    fn run(&mut self, id: &str, anchor: &str, f: impl FnOnce() -> Result<Residual, String>) {
        let start = Instant::now();
        let result = f();
        let millis = start.elapsed().as_secs_f64() * 1e3;
        let (status, residual) = match result {
            Ok(r) => (Status::Ok, r),
            Err(e) => (Status::Fail, Residual::Text(e)),
        };
        if status == Status::Fail {
            self.status = Status::Fail;
        }
        self.checks.push(CheckRecord { id: id.into(), anchor: anchor.into(), status, residual, millis });
    }

    fn absorb(&mut self, other: SuiteReport) {
        if !other.ok() {
            self.status = Status::Fail;
        }
        self.checks.extend(other.checks.into_iter().map(|mut c| {
            c.id = format!("{}/{}", other.suite, c.id);
            c
        }));
        if let Some(d) = other.details {
            let map = self.details.get_or_insert_with(|| serde_json::json!({}));
            map[other.suite] = d;
        }
    }

    /// One line per check, then the overall verdict.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let s = if c.status == Status::Ok { "ok  " } else { "FAIL" };
            out.push_str(&format!("{s} {:<40} {:>9.1} ms  {}  [{}]\n", c.id, c.millis, c.residual, c.anchor));
        }
        let s = if self.ok() { "ok" } else { "FAIL" };
        out.push_str(&format!("{}: {s} ({} checks)\n", self.suite, self.checks.len()));
        out
    }
}

fn exact() -> Result<Residual, String> {
    Ok(Residual::Number(0.0))
}

fn verdict(v: qsg::Verdict) -> Result<Residual, String> {
    v.map_err(|e| e.to_string()).and_then(|_| exact())
}

fn expect(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn s<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

// ---------------------------------------------------------------- options

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub group: Option<FiniteGroup>,
    pub group_name: Option<String>,
    pub copies: usize,
    pub step: f64,
    pub tol: f64,
    pub samples: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { group: None, group_name: None, copies: 2, step: 0.1, tol: 1e-10, samples: 0, seed: 20100101 }
    }
}

pub const SUITES: [&str; 13] = [
    "freeprod-arith",
    "qfam-universal",
    "wang-coassoc",
    "sadr-gamma",
    "counit",
    "pi-morphism",
    "composition-semigroup",
    "character-monoid",
    "noqg-phi",
    "noqg-characters",
    "funcmodel",
    "oracle-crosscheck",
    "all",
];

#[derive(Error, Debug)]
pub enum CliError {
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("bad group '{0}': {1}")]
    BadGroup(String, String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Io(String),
}

/// `Z<n>` or a file of `n` lines of `n` indices (0-based, first row and
/// column the identity's).
pub fn parse_group(arg: &str) -> Result<FiniteGroup, CliError> {
    let bad = |m: String| CliError::BadGroup(arg.to_string(), m);
    if let Some(n) = arg.strip_prefix('Z').and_then(|n| n.parse::<usize>().ok()) {
        return FiniteGroup::cyclic(n).map_err(|e| bad(e.to_string()));
    }
    let text = std::fs::read_to_string(arg).map_err(|e| bad(e.to_string()))?;
    parse_group_table(&text).map_err(|e| bad(e.to_string()))
}

pub fn parse_group_table(text: &str) -> Result<FiniteGroup, AlgebraError> {
    let rows = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|x| x.parse::<usize>().map_err(|e| AlgebraError::InvalidGroup(e.to_string())))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    FiniteGroup::from_table(rows)
}

// ---------------------------------------------------------------- helpers

fn z(n: usize) -> Result<QuantumSemigroup, String> {
    qsg::group_function_qsg(&FiniteGroup::cyclic(n).map_err(s)?).map_err(s)
}

fn gen(a: &AlgebraRef, name: &str) -> Result<Element, String> {
    Element::generator(a, name).map_err(s)
}

/// A random element: up to `max_terms` products of up to `max_len`
/// generators, with small Gaussian-rational coefficients.
pub fn random_element(a: &AlgebraRef, rng: &mut impl Rng, max_terms: usize, max_len: usize) -> Element {
    let gens: Vec<Element> = a
        .presentation()
        .generator_names()
        .map(|g| Element::generator(a, g).expect("own generator"))
        .collect();
    let mut x = Element::zero(a);
    for _ in 0..rng.gen_range(1..=max_terms) {
        let c = &Scalar::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3))
            + &(&Scalar::i() * &Scalar::from_int(rng.gen_range(-1..=1)));
        let mut w = Element::scalar(a, c);
        for _ in 0..rng.gen_range(0..=max_len) {
            w = &w * &gens[rng.gen_range(0..gens.len())];
        }
        x = &x + &w;
    }
    x
}

/// A random rational projection of `M₂`: `0`, `1` or `v v* / (v* v)`.
pub fn random_projection(m: &AlgebraRef, rng: &mut impl Rng) -> Element {
    match rng.gen_range(0..4) {
        0 => Element::zero(m),
        1 => Element::one(m),
        _ => {
            let mut v = [
                Scalar::from_int(rng.gen_range(-3..=3)),
                &Scalar::from_int(rng.gen_range(-3..=3)) + &(&Scalar::i() * &Scalar::from_int(rng.gen_range(-3..=3))),
            ];
            if v[0].is_zero() && v[1].is_zero() {
                v[0] = Scalar::one();
            }
            let norm = Scalar::from_rational(v[0].norm_sqr() + v[1].norm_sqr());
            let names = [["E11", "E12"], ["E21", "E22"]];
            let mut x = Element::zero(m);
            for i in 0..2 {
                for j in 0..2 {
                    let c = &(&v[i] * &v[j].conj()) / &norm;
                    x = &x + &Element::generator(m, names[i][j]).expect("matrix unit").scale(&c);
                }
            }
            x
        }
    }
}

/// A random `Ψ: ℂ² → ℂ² ⊗ M₂`, `Ψ(e₁) = e₁ ⊗ P₁ + e₂ ⊗ P₂` with random
/// projections `P₁`, `P₂`.
pub fn random_qmap(rng: &mut impl Rng) -> Result<Morphism, AlgebraError> {
    let a = make_cn(2)?;
    let m = make_matrix_algebra(2)?;
    let target = tensor(&[a.clone(), m.clone()])?;
    let ps = [random_projection(&m, rng), random_projection(&m, rng)];
    let img = &tensor_elements_in(&target, &[Element::generator(&a, "e1")?, ps[0].clone()])?
        + &tensor_elements_in(&target, &[Element::generator(&a, "e2")?, ps[1].clone()])?;
    Morphism::from_fn(&a, &target, |g| Ok(if g == "e1" { img.clone() } else { &Element::one(&target) - &img }))
}

/// The universal-property round trip for `Ψ`: decompose over `ℂⁿ`, factor
/// through the free product, and compare `(id ⊗ Λ) ∘ Φ` with `Ψ`.
pub fn universal_round_trip(psi: &Morphism) -> Result<(), String> {
    let a = psi.domain().clone();
    let parts = decompose_over_cn(psi).map_err(s)?;
    let (c, phi) = qsg::quantum_family_of_maps(&a, parts.len()).map_err(s)?;
    let lam = factor_through_free_product(&c, &parts).map_err(s)?;
    lam.check_well_defined().map_err(|v| format!("Λ is not well defined: {}", v[0]))?;
    let b = make_cn(parts.len()).map_err(s)?;
    let id_lam = Morphism::tensor(&[Morphism::identity(&b), lam]).map_err(s)?;
    let lhs = Morphism::compose(&id_lam, &phi).map_err(s)?;
    lhs.agrees_with(psi).map_err(s)
}

/// A random expression over a few generator names, for parser round trips.
pub fn random_expression(rng: &mut impl Rng) -> NCExpr {
    const NAMES: [&str; 5] = ["p", "q", "z", "e1@2", "L1.x"];
    let mut e = NCExpr::zero();
    for _ in 0..rng.gen_range(0..=4) {
        let c = &Scalar::ratio(rng.gen_range(-9..=9), rng.gen_range(1..=6))
            + &(&Scalar::i() * &Scalar::ratio(rng.gen_range(-2..=2), rng.gen_range(1..=3)));
        let mut w = NCExpr::constant(c);
        for _ in 0..rng.gen_range(0..=3) {
            let name = NAMES[rng.gen_range(0..NAMES.len())];
            let l = if rng.gen_bool(0.3) { Letter::star(name) } else { Letter::plain(name) };
            w = w.mul(&NCExpr::letter(l));
        }
        e = e.add(&w);
    }
    e
}

// ---------------------------------------------------------------- suites

fn suite_freeprod(o: &SuiteOptions) -> SuiteReport {
    let mut r = SuiteReport::new("freeprod-arith");
    r.run("reduction-examples", "free product normal form", || {
        let c = free_power(&make_cn(2).map_err(s)?, 2).map_err(s)?;
        let (p, q) = (gen(&c, "e1@1")?, gen(&c, "e1@2")?);
        let pq = &p * &q;
        let pqp = &pq * &p;
        expect(&pq * &(&q * &p) == pqp, || "(pq)(qp) ≠ pqp".into())?;
        expect(&p * &p == p, || "p² ≠ p".into())?;
        let x = &(&pq * &(&Element::one(&c) - &q)) * &p;
        expect(x.is_zero(), || format!("pq(1−q)p = {x}"))?;
        exact()
    });
    for n in [2, 3] {
        r.run(&format!("associativity-c{n}"), "free product associativity", || {
            let c = free_power(&make_cn(n).map_err(s)?, 2).map_err(s)?;
            let mut rng = ChaCha8Rng::seed_from_u64(o.seed + n as u64);
            for i in 0..500 {
                let (x, y, w) = (
                    random_element(&c, &mut rng, 3, 3),
                    random_element(&c, &mut rng, 3, 3),
                    random_element(&c, &mut rng, 3, 3),
                );
                let d = &(&(&x * &y) * &w) - &(&x * &(&y * &w));
                expect(d.is_zero(), || format!("triple {i}: difference {d}"))?;
                let d = &(&x * &y).star() - &(&y.star() * &x.star());
                expect(d.is_zero(), || format!("pair {i}: involution difference {d}"))?;
            }
            exact()
        });
    }
    r.run("inclusions-multiplicative", "canonical inclusions", || {
        let m = make_matrix_algebra(2).map_err(s)?;
        let c = free_product(&[make_cn(3).map_err(s)?, m.clone()]).map_err(s)?;
        let basis: Vec<Element> = (0..4).map(|i| Element::basis(&m, Key::Idx(i))).collect();
        for x in &basis {
            for y in &basis {
                let lhs = iota(&c, 1, &(x * y)).map_err(s)?;
                let rhs = &iota(&c, 1, x).map_err(s)? * &iota(&c, 1, y).map_err(s)?;
                expect(lhs == rhs, || format!("ι({x}·{y})"))?;
            }
            expect(iota(&c, 1, &x.star()).map_err(s)? == iota(&c, 1, x).map_err(s)?.star(), || format!("ι({x}*)"))?;
        }
        exact()
    });
    r
}

fn suite_qfam(o: &SuiteOptions) -> SuiteReport {
    let mut r = SuiteReport::new("qfam-universal");
    r.run("phi-formula", "quantum family of all maps", || {
        let a = make_cn(2).map_err(s)?;
        let (c, phi) = qsg::quantum_family_of_maps(&a, 2).map_err(s)?;
        phi.check_well_defined().map_err(|v| v[0].to_string())?;
        let b = make_cn(2).map_err(s)?;
        let bc = phi.codomain().clone();
        let t = |x: Element, y: Element| tensor_elements_in(&bc, &[x, y]).map_err(s);
        let expected = &t(gen(&b, "e1")?, gen(&c, "e1@1")?)? + &t(gen(&b, "e2")?, gen(&c, "e1@2")?)?;
        let d = phi.image("e1").expect("e1") - &expected;
        expect(d.is_zero(), || format!("Φ(e1) differs by {d}"))?;
        exact()
    });
    r.run("universal-round-trip", "universal property of the family", || {
        let mut rng = ChaCha8Rng::seed_from_u64(o.seed);
        for i in 0..20 {
            let psi = random_qmap(&mut rng).map_err(s)?;
            universal_round_trip(&psi).map_err(|e| format!("map {i}: {e}"))?;
        }
        Ok(Residual::Text("20 maps, exact".into()))
    });
    r
}

fn group_list(o: &SuiteOptions) -> Result<Vec<(String, Vec<QuantumSemigroup>)>, String> {
    Ok(match &o.group {
        Some(g) => {
            let q = qsg::group_function_qsg(g).map_err(s)?;
            let name = o.group_name.clone().unwrap_or_else(|| "G".into());
            vec![(format!("{name}^{}", o.copies), vec![q; o.copies])]
        }
        None => vec![
            ("Z2^2".into(), vec![z(2)?; 2]),
            ("Z2^3".into(), vec![z(2)?; 3]),
            ("Z3^2".into(), vec![z(3)?; 2]),
            ("Z2*Z3".into(), vec![z(2)?, z(3)?]),
        ],
    })
}

fn suite_wang(o: &SuiteOptions) -> SuiteReport {
    let mut r = SuiteReport::new("wang-coassoc");
    match group_list(o) {
        Ok(list) => {
            for (name, factors) in list {
                r.run(&format!("free-product-{name}"), "free product of quantum semigroups", || {
                    // well-definedness, coassociativity and the inclusions
                    // are all verified by the constructor
                    qsg::free_product_qsg(&factors).map_err(s)?;
                    exact()
                });
            }
        }
        Err(e) => r.run("setup", "free product of quantum semigroups", || Err(e)),
    }
    r
}

fn suite_gamma(o: &SuiteOptions) -> SuiteReport {
    let mut r = SuiteReport::new("sadr-gamma");
    let cases: Vec<(String, Result<QuantumSemigroup, String>, usize)> = match &o.group {
        Some(g) => vec![(
            o.group_name.clone().unwrap_or_else(|| "G".into()),
            qsg::group_function_qsg(g).map_err(s),
            o.copies,
        )],
        None => vec![("Z2".into(), z(2), o.copies)],
    };
    for (name, a, n) in cases {
        let a = match a {
            Ok(a) => a,
            Err(e) => {
                r.run("setup", "comultiplication through the family", || Err(e));
                continue;
            }
        };
        let gamma = match qsg::sadr_comultiplication(&a, n) {
            Ok(g) => g,
            Err(e) => {
                r.run(&format!("{name}^{n}/gamma"), "comultiplication through the family", || Err(e.to_string()));
                continue;
            }
        };
        r.run(&format!("{name}^{n}/gamma-well-defined"), "comultiplication through the family", || {
            gamma.check_well_defined().map_err(|v| v[0].to_string())?;
            exact()
        });
        let delta = match qsg::free_product_qsg(&vec![a.clone(); n]) {
            Ok(d) => d,
            Err(e) => {
                r.run(&format!("{name}^{n}/delta"), "free product comultiplication", || Err(e.to_string()));
                continue;
            }
        };
        for (g, img) in gamma.images() {
            r.run(&format!("{name}^{n}/gamma=delta:{g}"), "the two comultiplications coincide", || {
                let d = img - delta.delta(g);
                expect(d.is_zero(), || format!("difference {d}"))?;
                exact()
            });
        }
    }
    r
}

fn suite_counit(o: &SuiteOptions) -> SuiteReport {
    let mut r = SuiteReport::new("counit");
    let cases: Vec<(String, Result<FiniteGroup, String>, Vec<usize>)> = match &o.group {
        Some(g) => vec![(o.group_name.clone().unwrap_or_else(|| "G".into()), Ok(g.clone()), vec![o.copies])],
        None => vec![
            ("Z2".into(), FiniteGroup::cyclic(2).map_err(s), vec![2, 3]),
            ("Z3".into(), FiniteGroup::cyclic(3).map_err(s), vec![2, 3]),
        ],
    };
    for (name, g, copies) in cases {
        for n in copies {
            r.run(&format!("{name}^{n}/induced-counit"), "counits pass to free products", || {
                let g = g.clone()?;
                let a = qsg::group_function_qsg(&g).map_err(s)?;
                let eps = qsg::group_counit(&g).map_err(s)?;
                qsg::check_counit(&a, &eps).map_err(s)?;
                let c = qsg::free_product_qsg(&vec![a.clone(); n]).map_err(s)?;
                let eps_c = qsg::counit_of_free_product(&vec![eps; n], &c).map_err(s)?;
                qsg::check_counit(&c, &eps_c).map_err(s)?;
                for (k, e) in qsg::restrict_to_factors(&eps_c).map_err(s)?.iter().enumerate() {
                    qsg::check_counit(&a, e).map_err(|e| format!("restriction to factor {}: {e}", k + 1))?;
                }
                exact()
            });
        }
    }
    r.run("zero-character-is-not-a-counit", "counit axioms", || {
        let c = qsg::free_product_qsg(&[z(2)?, z(2)?]).map_err(s)?;
        let chars = qsg::projection_characters(c.algebra()).map_err(s)?;
        expect(qsg::check_counit(&c, &chars[0]).is_err(), || "ε(p) = ε(q) = 0 passed".into())?;
        exact()
    });
    r
}

fn suite_pi(_: &SuiteOptions) -> SuiteReport {
    let mut r = SuiteReport::new("pi-morphism");
    r.run("pi-after-iota", "identification of the copies", || {
        let a = make_cn(2).map_err(s)?;
        let c = free_power(&a, 2).map_err(s)?;
        let p = pi(&c).map_err(s)?;
        for k in 0..2 {
            Morphism::compose(&p, &iota_morphism(&c, k).map_err(s)?)
                .map_err(s)?
                .agrees_with(&Morphism::identity(&a))
                .map_err(s)?;
        }
        exact()
    });
    r.run("pi-quantum-semigroup-morphism", "identification of the copies", || {
        let a = z(2)?;
        let c = qsg::free_product_qsg(&[a.clone(), a.clone()]).map_err(s)?;
        verdict(qsg::check_qsg_morphism(&pi(c.algebra()).map_err(s)?, &c, &a))
    });
    r.run("pi-not-a-morphism-for-composition", "identification of the copies", || {
        let a = z(2)?;
        let comp = qsg::composition_qsg_qmap2().map_err(s)?;
        match qsg::check_qsg_morphism(&pi(comp.algebra()).map_err(s)?, &comp, &a) {
            Err(CheckFailure::Mismatch(_)) => exact(),
            other => Err(format!("expected a mismatch, got {other:?}")),
        }
    });
    r.run("mu-noncommutative", "multiplication is a homomorphism only for commutative algebras", || {
        mu(&make_cn(2).map_err(s)?).map_err(s)?;
        match mu(&make_matrix_algebra(2).map_err(s)?) {
            Err(AlgebraError::NotAHomomorphism(_)) => exact(),
            other => Err(format!("expected NotAHomomorphism, got {other:?}")),
        }
    });
    r.run("unital-embedding", "projection of the family of maps", || {
        let a = make_cn(2).map_err(s)?;
        let b = make_cn(2).map_err(s)?;
        let (c, phi) = qsg::quantum_family_of_maps(&a, 2).map_err(s)?;
        let id_pi = Morphism::tensor(&[Morphism::identity(&b), pi(&c).map_err(s)?]).map_err(s)?;
        let lhs = Morphism::compose(&id_pi, &phi).map_err(s)?;
        lhs.agrees_with(&unital_embed(&b, &a).map_err(s)?).map_err(s)?;
        exact()
    });
    r
}

fn suite_composition(_: &SuiteOptions) -> SuiteReport {
    let mut r = SuiteReport::new("composition-semigroup");
    let comp = match qsg::composition_qsg_qmap2() {
        Ok(c) => c,
        Err(e) => {
            r.run("construct", "composition of maps on two points", || Err(e.to_string()));
            return r;
        }
    };
    r.run("coassociative", "composition of maps on two points", || verdict(comp.verify()));
    r.run("delta-p-idempotent", "composition of maps on two points", || {
        let d = comp.delta("e1@1");
        let x = &(d * d) - d;
        expect(x.is_zero(), || format!("Δc(p)² − Δc(p) = {x}"))?;
        exact()
    });
    r.run("differs-from-free-product", "composition of maps on two points", || {
        let f = qsg::free_product_qsg(&[z(2)?, z(2)?]).map_err(s)?;
        let d = comp.delta("e1@1") - f.delta("e1@1");
        expect(!d.is_zero(), || "Δc(p) = Δ(p)".into())?;
        Ok(Residual::Text(format!("{} nonzero terms", d.num_terms())))
    });
    r.run("counit", "composition of maps on two points", || {
        let chars = qsg::projection_characters(comp.algebra()).map_err(s)?;
        verdict(qsg::check_counit(&comp, &chars[2]))
    });
    r
}

fn table_text(t: &[Vec<usize>]) -> String {
    t.iter()
        .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" / ")
}

fn suite_monoid(_: &SuiteOptions) -> SuiteReport {
    let mut r = SuiteReport::new("character-monoid");
    r.run("free-product-group", "character monoid of the free product", || {
        let c = qsg::free_product_qsg(&[z(2)?, z(2)?]).map_err(s)?;
        let chars = qsg::projection_characters(c.algebra()).map_err(s)?;
        let t = qsg::character_monoid(&c, &chars).map_err(s)?;
        expect(qsg::is_group(&t), || format!("not a group: {}", table_text(&t)))?;
        Ok(Residual::Text(format!("group {}", table_text(&t))))
    });
    r.run("composition-not-a-group", "character monoid of the composition structure", || {
        let c = qsg::composition_qsg_qmap2().map_err(s)?;
        let chars = qsg::projection_characters(c.algebra()).map_err(s)?;
        let t = qsg::character_monoid(&c, &chars).map_err(s)?;
        expect(qsg::monoid_identity(&t).is_some(), || "no identity".into())?;
        expect(!qsg::is_group(&t), || format!("unexpectedly a group: {}", table_text(&t)))?;
        Ok(Residual::Text(format!("monoid {}", table_text(&t))))
    });
    r
}

fn suite_noqg_phi(_: &SuiteOptions) -> SuiteReport {
    let mut r = SuiteReport::new("noqg-phi");
    r.run("derived-relations", "idempotency of the matrix of generators", || {
        let pres = qsg::noqg_presentation();
        let derived = qsg::derive_noqg_relations().map_err(s)?;
        let rels = pres.relations();
        let expected = [
            rels[0].clone(),
            pres.normalize(&rels[2].star()),
            rels[2].clone(),
            rels[1].clone(),
        ];
        expect(derived == expected, || {
            format!("derived {}", derived.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("; "))
        })?;
        Ok(Residual::Text(derived.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("; ")))
    });
    r.run("phi-well-defined", "idempotency of the matrix of generators", || {
        let phi = qsg::noqg_phi().map_err(s)?;
        verdict(qsg::check_well_defined_modulo(&phi, &qsg::noqg_presentation()))
    });
    r
}

fn suite_noqg_chars(o: &SuiteOptions) -> SuiteReport {
    let mut r = SuiteReport::new("noqg-characters");
    let pres = qsg::noqg_presentation();
    r.run("family-residuals", "closed-form character families", || {
        let mut worst: f64 = 0.0;
        for k in 0..=20 {
            let rad = 0.499 * k as f64 / 20.0;
            for j in 0..12 {
                let z = num_complex::Complex64::from_polar(rad, j as f64 * std::f64::consts::PI / 6.0);
                for f in [Family::Plus(z), Family::Minus(z)] {
                    worst = worst.max(characters::residual(&pres, &characters::noqg_family(f).map_err(s)?).map_err(s)?);
                }
                let z0 = num_complex::Complex64::from_polar(0.5, j as f64 * std::f64::consts::PI / 6.0);
                let a = characters::noqg_family(Family::Zero(z0)).map_err(s)?;
                worst = worst.max(characters::residual(&pres, &a).map_err(s)?);
            }
        }
        for k in 0..2 {
            let a = characters::noqg_family(Family::Omega(k)).map_err(s)?;
            worst = worst.max(characters::residual(&pres, &a).map_err(s)?);
        }
        expect(worst <= 1e-12, || format!("residual {worst:e}"))?;
        Ok(Residual::Number(worst))
    });
    let opts = SolveOptions::cube(4, -1.5, 1.5, o.step, o.tol);
    let cloud = characters::solve_grid(&pres, &opts);
    let sys = characters::CharacterSystem::new(&pres);
    r.run("solutions-in-families", "every character lies in a closed-form family", || {
        let cloud = cloud.as_ref().map_err(s)?;
        let sys = sys.as_ref().map_err(s)?;
        expect(!cloud.points.is_empty(), || "no solutions".into())?;
        let worst = cloud
            .points
            .iter()
            .map(|p| characters::nearest_family_member(&sys.assignment(p)).0)
            .fold(0.0, f64::max);
        expect(worst <= 1e-5, || format!("distance {worst:e}"))?;
        Ok(Residual::Number(worst))
    });
    let mut details = None;
    r.run("component-count", "a two-sphere and two points", || {
        let cloud = cloud.as_ref().map_err(s)?;
        let rep = characters::cluster_components(&cloud.points, &cloud.labels, 2.5 * o.step).map_err(s)?;
        details = Some(serde_json::json!({
            "grid_points": cloud.grid_points,
            "coarse_hits": cloud.coarse_hits,
            "solutions": cloud.points.len(),
            "dropped": cloud.dropped,
            "components": rep,
        }));
        expect(rep.component_count == 3 && rep.isolated_count == 2, || {
            format!("{} components, {} isolated", rep.component_count, rep.isolated_count)
        })?;
        Ok(Residual::Text(format!("component_count = 3, isolated = 2, {} solutions", cloud.points.len())))
    });
    r.details = details;
    r
}

fn suite_funcmodel(o: &SuiteOptions) -> SuiteReport {
    let mut r = SuiteReport::new("funcmodel");
    let samples = if o.samples == 0 { 1000 } else { o.samples };
    let mut details = None;
    r.run("model", "two projections as matrix functions", || {
        let rep = funcmodel::verify_model(samples, 100).map_err(s)?;
        details = Some(serde_json::to_value(&rep).map_err(s)?);
        expect(rep.ok(1e-12, 1e-15), || format!("{rep:?}"))?;
        let worst = [
            rep.p_idempotent,
            rep.q_idempotent,
            rep.self_adjoint,
            rep.delta_idempotent,
            rep.delta_self_adjoint,
            rep.composition_idempotent,
            rep.composition_self_adjoint,
        ]
        .into_iter()
        .fold(rep.endpoint_off_diagonal, f64::max);
        Ok(Residual::Number(worst))
    });
    r.details = details;
    r
}

fn suite_oracle(o: &SuiteOptions) -> SuiteReport {
    let mut r = SuiteReport::new("oracle-crosscheck");
    let samples = if o.samples == 0 { 200 } else { o.samples };
    let mut details = None;
    r.run("exact-vs-numeric", "two projections as matrix functions", || {
        let rep = funcmodel::cross_check(o.seed, 200, samples, 1e-9, 1e-4).map_err(s)?;
        details = Some(serde_json::to_value(&rep).map_err(s)?);
        expect(rep.ok(), || format!("{rep:?}"))?;
        Ok(Residual::Number(rep.max_zero_residual))
    });
    r.details = details;
    r
}

/// Run a named suite.
pub fn run_suite(name: &str, o: &SuiteOptions) -> Result<SuiteReport, CliError> {
    Ok(match name {
        "freeprod-arith" => suite_freeprod(o),
        "qfam-universal" => suite_qfam(o),
        "wang-coassoc" => suite_wang(o),
        "sadr-gamma" => suite_gamma(o),
        "counit" => suite_counit(o),
        "pi-morphism" => suite_pi(o),
        "composition-semigroup" => suite_composition(o),
        "character-monoid" => suite_monoid(o),
        "noqg-phi" => suite_noqg_phi(o),
        "noqg-characters" => suite_noqg_chars(o),
        "funcmodel" => suite_funcmodel(o),
        "oracle-crosscheck" => suite_oracle(o),
        "all" => {
            let mut all = SuiteReport::new("all");
            for n in &SUITES[..SUITES.len() - 1] {
                all.absorb(run_suite(n, o)?);
            }
            all
        }
        other => return Err(CliError::UnknownSuite(other.to_string())),
    })
}

// ---------------------------------------------------------------- solver

#[derive(Clone, Debug, Serialize)]
pub struct SolveReport {
    pub generators: Vec<String>,
    pub coordinates: Vec<String>,
    pub grid_points: usize,
    pub coarse_hits: usize,
    pub dropped: usize,
    pub solutions: Vec<BTreeMap<String, [f64; 2]>>,
    pub components: characters::ComponentReport,
}

/// Solve for the characters of a presentation over `[-bound, bound]` per
/// real coordinate.
pub fn solve_characters(pres: &Presentation, bound: f64, step: f64, tol: f64) -> Result<SolveReport, characters::SolveError> {
    let sys = characters::CharacterSystem::new(pres)?;
    let opts = SolveOptions::cube(sys.dim(), -bound, bound, step, tol);
    let cloud = characters::solve_grid(pres, &opts)?;
    let components = characters::cluster_components(&cloud.points, &cloud.labels, 2.5 * step)?;
    let solutions = cloud
        .points
        .iter()
        .map(|p| sys.assignment(p).into_iter().map(|(k, v)| (k, [v.re, v.im])).collect())
        .collect();
    Ok(SolveReport {
        generators: pres.generator_names().map(String::from).collect(),
        coordinates: cloud.labels.clone(),
        grid_points: cloud.grid_points,
        coarse_hits: cloud.coarse_hits,
        dropped: cloud.dropped,
        solutions,
        components,
    })
}
