//! Quantum semigroup structures and checks of their axioms.
//!
//! A quantum semigroup is an algebra `C` with a unital *-homomorphism
//! `Δ: C → C ⊗ C` satisfying `(Δ ⊗ id)∘Δ = (id ⊗ Δ)∘Δ`. All checks are
//! exact and generator-wise: two homomorphisms that agree on generators
//! agree everywhere.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{make_cn, make_free_star, make_matrix_algebra, same_algebra, scalars};
use crate::algebra::{AlgebraRef, Element, Key};
use crate::error::AlgebraError;
use crate::expr::{Letter, NCExpr};
use crate::morphism::{factor_through_free_product, iota_morphism, mu, Disagreement, Morphism, Violation};
use crate::presentation::{Generator, Presentation};
use crate::products::{
    collapse_scalar_legs, contract_leg, copy_name, flip_legs, free_power, free_product, iota,
    legs_of, tensor, tensor_elements_in,
};
use crate::scalar::Scalar;

/// Why an exact check failed.
#[derive(Clone, Debug)]
pub enum CheckFailure {
    IllDefined(Vec<Violation>),
    Mismatch(Disagreement),
    Structure(String),
}

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckFailure::IllDefined(v) => {
                write!(f, "{} relation(s) violated", v.len())?;
                if let Some(first) = v.first() {
                    write!(f, "; first: {first}")?;
                }
                Ok(())
            }
            CheckFailure::Mismatch(d) => write!(f, "{d}"),
            CheckFailure::Structure(s) => write!(f, "{s}"),
        }
    }
}

impl From<AlgebraError> for CheckFailure {
    fn from(e: AlgebraError) -> Self {
        CheckFailure::Structure(e.to_string())
    }
}

pub type Verdict = Result<(), CheckFailure>;

fn compare(generator: &str, lhs: &Element, rhs: &Element) -> Verdict {
    let d = lhs.try_sub(rhs)?;
    if d.is_zero() {
        Ok(())
    } else {
        Err(CheckFailure::Mismatch(Disagreement { generator: generator.to_string(), difference: d }))
    }
}

/// A finite group given by its multiplication table on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, AlgebraError> {
        let n = table.len();
        let bad = |m: &str| AlgebraError::InvalidGroup(m.to_string());
        if n == 0 {
            return Err(bad("empty table"));
        }
        if table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(bad("table must be n×n with entries below n"));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| bad("no identity element"))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad("not associative"));
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|g| (0..n).find(|&h| table[g][h] == identity && table[h][g] == identity))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| bad("missing inverse"))?;
        Ok(FiniteGroup { table, identity, inverse })
    }

    /// `ℤ_n` under addition.
    pub fn cyclic(n: usize) -> Result<Self, AlgebraError> {
        FiniteGroup::from_table((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect())
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }
}

/// An algebra with a comultiplication `Δ: C → C ⊗ C`.
#[derive(Clone, Debug)]
pub struct QuantumSemigroup {
    algebra: AlgebraRef,
    comult: Morphism,
}

impl QuantumSemigroup {
    /// Wrap a comultiplication; its shape is checked, its axioms are not.
    pub fn new(comult: Morphism) -> Result<Self, AlgebraError> {
        let algebra = comult.domain().clone();
        let cc = tensor(&[algebra.clone(), algebra.clone()])?;
        if !same_algebra(comult.codomain(), &cc) {
            return Err(AlgebraError::ShapeMismatch(format!(
                "comultiplication must map into {}",
                cc.signature()
            )));
        }
        Ok(QuantumSemigroup { algebra, comult })
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn comult(&self) -> &Morphism {
        &self.comult
    }

    /// `Δ` applied to the named generator.
    pub fn delta(&self, generator: &str) -> &Element {
        self.comult.image(generator).expect("generator of the algebra")
    }

    pub fn check_well_defined(&self) -> Verdict {
        self.comult.check_well_defined().map_err(CheckFailure::IllDefined)
    }

    /// `(Δ ⊗ id)(Δ(g)) = (id ⊗ Δ)(Δ(g))` for every generator `g`.
    pub fn check_coassociativity(&self) -> Verdict {
        self.check_well_defined()?;
        let id = Morphism::identity(&self.algebra);
        let left = Morphism::tensor(&[self.comult.clone(), id.clone()])?;
        let right = Morphism::tensor(&[id, self.comult.clone()])?;
        for (g, d) in self.comult.images() {
            compare(g, &left.eval(d)?, &right.eval(d)?)?;
        }
        Ok(())
    }

    /// Well-definedness followed by coassociativity.
    pub fn verify(&self) -> Verdict {
        self.check_coassociativity()
    }
}

/// A character `C → ℂ`.
#[derive(Clone, Debug)]
pub struct Character(Morphism);

impl Character {
    pub fn new(m: Morphism) -> Result<Self, AlgebraError> {
        if !same_algebra(m.codomain(), &scalars()) {
            return Err(AlgebraError::ShapeMismatch("a character maps into ℂ".into()));
        }
        Ok(Character(m))
    }

    /// The character with the given generator values.
    pub fn from_values(algebra: &AlgebraRef, values: &BTreeMap<String, Scalar>) -> Result<Self, AlgebraError> {
        let c = scalars();
        let m = Morphism::from_fn(algebra, &c, |g| {
            let v = values.get(g).ok_or_else(|| AlgebraError::Unassigned(g.to_string()))?;
            Ok(Element::scalar(&c, v.clone()))
        })?;
        Character::new(m)
    }

    pub fn morphism(&self) -> &Morphism {
        &self.0
    }

    pub fn value(&self, generator: &str) -> Scalar {
        self.0
            .image(generator)
            .expect("generator of the domain")
            .coefficient(&Key::Idx(0))
    }

    pub fn eval(&self, x: &Element) -> Result<Scalar, AlgebraError> {
        Ok(self.0.eval(x)?.coefficient(&Key::Idx(0)))
    }

    pub fn check_well_defined(&self) -> Verdict {
        self.0.check_well_defined().map_err(CheckFailure::IllDefined)
    }

    fn same_values(&self, other: &Character) -> bool {
        self.0.agrees_with(&other.0).is_ok()
    }
}

/// The function algebra `C(G) = ℂ^{|G|}` with `Δ(δ_g) = Σ_h δ_h ⊗ δ_{h⁻¹g}`.
///
/// Basis element `e{g+1}` is the indicator `δ_g`.
pub fn group_function_qsg(g: &FiniteGroup) -> Result<QuantumSemigroup, AlgebraError> {
    let n = g.order();
    let a = make_cn(n)?;
    let aa = tensor(&[a.clone(), a.clone()])?;
    let delta = |i: usize| Element::generator(&a, &format!("e{}", i + 1)).expect("basis generator");
    let mut images = BTreeMap::new();
    for x in 0..n {
        let mut img = Element::zero(&aa);
        for h in 0..n {
            let t = tensor_elements_in(&aa, &[delta(h), delta(g.mul(g.inv(h), x))])?;
            img = &img + &t;
        }
        images.insert(format!("e{}", x + 1), img);
    }
    QuantumSemigroup::new(Morphism::new(&a, &aa, images)?)
}

/// Evaluation at the identity element, the counit of `C(G)`.
pub fn group_counit(g: &FiniteGroup) -> Result<Character, AlgebraError> {
    let a = make_cn(g.order())?;
    let values = (0..g.order())
        .map(|x| (format!("e{}", x + 1), if x == g.identity() { Scalar::one() } else { Scalar::zero() }))
        .collect();
    Character::from_values(&a, &values)
}

/// The quantum family of all maps from `n` points into `A`: the free power
/// `C = A^{⋆n}` and `Φ: A → ℂⁿ ⊗ C`, `Φ(a) = Σ eᵢ ⊗ ιᵢ(a)`.
pub fn quantum_family_of_maps(a: &AlgebraRef, n: usize) -> Result<(AlgebraRef, Morphism), AlgebraError> {
    let b = make_cn(n)?;
    let c = free_power(a, n)?;
    let bc = tensor(&[b.clone(), c.clone()])?;
    let phi = Morphism::from_fn(a, &bc, |g| {
        let x = Element::generator(a, g)?;
        let mut img = Element::zero(&bc);
        for i in 0..n {
            let e = Element::generator(&b, &format!("e{}", i + 1))?;
            img = &img + &tensor_elements_in(&bc, &[e, iota(&c, i, &x)?])?;
        }
        Ok(img)
    })?;
    Ok((c, phi))
}

/// `Δ_C` on the free product of quantum semigroups: the unique
/// comultiplication with `Δ_C ∘ ιₖ = (ιₖ ⊗ ιₖ) ∘ Δₖ`.
///
/// Every input is verified first; the result is verified to be coassociative
/// and every inclusion to be a quantum semigroup morphism.
pub fn free_product_qsg(factors: &[QuantumSemigroup]) -> Result<QuantumSemigroup, CheckFailure> {
    for (k, q) in factors.iter().enumerate() {
        q.verify().map_err(|e| CheckFailure::Structure(format!("factor {} rejected: {e}", k + 1)))?;
    }
    let algebras: Vec<AlgebraRef> = factors.iter().map(|q| q.algebra.clone()).collect();
    let c = free_product(&algebras)?;
    let cc = tensor(&[c.clone(), c.clone()])?;
    let mut images = BTreeMap::new();
    for (k, q) in factors.iter().enumerate() {
        let ik = iota_morphism(&c, k)?;
        let ikik = Morphism::tensor(&[ik.clone(), ik])?;
        for (g, d) in q.comult.images() {
            images.insert(copy_name(g, k), ikik.eval(d)?);
        }
    }
    let q = QuantumSemigroup::new(Morphism::new(&c, &cc, images)?)?;
    q.verify()?;
    for (k, f) in factors.iter().enumerate() {
        check_qsg_morphism(&iota_morphism(&c, k)?, f, &q)?;
    }
    Ok(q)
}

/// `(Θ ⊗ Θ) ∘ Δ_dom = Δ_cod ∘ Θ` on generators.
pub fn check_qsg_morphism(theta: &Morphism, dom: &QuantumSemigroup, cod: &QuantumSemigroup) -> Verdict {
    if !same_algebra(theta.domain(), &dom.algebra) || !same_algebra(theta.codomain(), &cod.algebra) {
        return Err(CheckFailure::Structure("morphism does not match the semigroups".into()));
    }
    theta.check_well_defined().map_err(CheckFailure::IllDefined)?;
    let tt = Morphism::tensor(&[theta.clone(), theta.clone()])?;
    for (g, d) in dom.comult.images() {
        let lhs = tt.eval(d)?;
        let rhs = cod.comult.eval(theta.image(g).expect("generator"))?;
        compare(g, &lhs, &rhs)?;
    }
    Ok(())
}

/// The comultiplication `Γ` on `C = A^{⋆n}` defined through the quantum
/// family of maps: for each generator `a` of `A`,
/// `X = (μ ⊗ id ⊗ id)(id ⊗ χ ⊗ id)(Φ ⊗ Φ)(Δ_A(a)) = Σₖ eₖ ⊗ Yₖ` and
/// `Γ(ιₖ(a)) = Yₖ`.
pub fn sadr_comultiplication(a_qsg: &QuantumSemigroup, n: usize) -> Result<Morphism, AlgebraError> {
    let a = a_qsg.algebra();
    let b = make_cn(n)?;
    let (c, phi) = quantum_family_of_maps(a, n)?;
    let cc = tensor(&[c.clone(), c.clone()])?;
    let phi_phi = Morphism::tensor(&[phi.clone(), phi])?;
    let id_c = Morphism::identity(&c);
    let mu_id_id = Morphism::tensor(&[mu(&b)?, id_c.clone(), id_c])?;
    let mut images = BTreeMap::new();
    for (g, d) in a_qsg.comult().images() {
        // B ⊗ C ⊗ B ⊗ C → B ⊗ B ⊗ C ⊗ C → B ⊗ C ⊗ C
        let x = phi_phi.eval(d)?;
        let x = flip_legs(&x, 1, 2)?;
        let x = mu_id_id.eval(&x)?;
        for k in 0..n {
            let y = contract_leg(&x, 0, |key| if *key == Key::Idx(k) { Scalar::one() } else { Scalar::zero() })?;
            if !same_algebra(y.owner(), &cc) {
                return Err(AlgebraError::ShapeMismatch("Γ image does not decompose over ℂⁿ ⊗ C ⊗ C".into()));
            }
            images.insert(copy_name(g, k), y);
        }
    }
    Morphism::new(&c, &cc, images)
}

/// `Γ = Δ` exactly on every generator of `A^{⋆n}`.
pub fn verify_gamma_equals_delta(a_qsg: &QuantumSemigroup, n: usize) -> Verdict {
    let gamma = sadr_comultiplication(a_qsg, n)?;
    gamma.check_well_defined().map_err(CheckFailure::IllDefined)?;
    let delta = free_product_qsg(&vec![a_qsg.clone(); n])?;
    gamma.agrees_with(delta.comult()).map_err(CheckFailure::Mismatch)
}

/// The character of the free product induced by characters of the factors.
pub fn counit_of_free_product(counits: &[Character], c_qsg: &QuantumSemigroup) -> Result<Character, AlgebraError> {
    let maps: Vec<Morphism> = counits.iter().map(|e| e.0.clone()).collect();
    Character::new(factor_through_free_product(c_qsg.algebra(), &maps)?)
}

/// `(ε ⊗ id)∘Δ = id = (id ⊗ ε)∘Δ` on generators.
pub fn check_counit(q: &QuantumSemigroup, eps: &Character) -> Verdict {
    eps.check_well_defined()?;
    let id = Morphism::identity(&q.algebra);
    let left = Morphism::tensor(&[eps.0.clone(), id.clone()])?;
    let right = Morphism::tensor(&[id, eps.0.clone()])?;
    for (g, d) in q.comult.images() {
        let x = Element::generator(&q.algebra, g)?;
        compare(g, &collapse_scalar_legs(&left.eval(d)?)?, &x)?;
        compare(g, &collapse_scalar_legs(&right.eval(d)?)?, &x)?;
    }
    Ok(())
}

/// `ε_C ∘ ιₖ` for every factor `k`.
pub fn restrict_to_factors(eps: &Character) -> Result<Vec<Character>, AlgebraError> {
    let c = eps.0.domain();
    let fp = c
        .as_free_product()
        .ok_or_else(|| AlgebraError::ShapeMismatch("not a free product".into()))?;
    (0..fp.num_factors())
        .map(|k| Character::new(Morphism::compose(&eps.0, &iota_morphism(c, k)?)?))
        .collect()
}

/// The composition structure on the quantum space of all maps from two
/// points to itself, on `ℂ² ⋆ ℂ²` with `p = ι₁(e₁)`, `q = ι₂(e₁)`:
/// `p ↦ p⊗p + (1−p)⊗q`, `q ↦ q⊗p + (1−q)⊗q`.
pub fn composition_qsg_qmap2() -> Result<QuantumSemigroup, AlgebraError> {
    let c2 = make_cn(2)?;
    let c = free_power(&c2, 2)?;
    let cc = tensor(&[c.clone(), c.clone()])?;
    let p = Element::generator(&c, "e1@1")?;
    let q = Element::generator(&c, "e1@2")?;
    let one = Element::one(&c);
    let t = |x: &Element, y: &Element| tensor_elements_in(&cc, &[x.clone(), y.clone()]);
    let dp = &t(&p, &p)? + &t(&(&one - &p), &q)?;
    let dq = &t(&q, &p)? + &t(&(&one - &q), &q)?;
    let one_one = Element::one(&cc);
    let mut images = BTreeMap::new();
    images.insert("e1@1".to_string(), dp.clone());
    images.insert("e2@1".to_string(), &one_one - &dp);
    images.insert("e1@2".to_string(), dq.clone());
    images.insert("e2@2".to_string(), &one_one - &dq);
    QuantumSemigroup::new(Morphism::new(&c, &cc, images)?)
}

/// `Δ(a) = a ⊗ 1`.
pub fn trivial_qsg(a: &AlgebraRef) -> Result<QuantumSemigroup, AlgebraError> {
    let aa = tensor(&[a.clone(), a.clone()])?;
    let one = Element::one(a);
    let m = Morphism::from_fn(a, &aa, |g| tensor_elements_in(&aa, &[Element::generator(a, g)?, one.clone()]))?;
    QuantumSemigroup::new(m)
}

/// `(χ ⋆ χ′)(x) = (χ ⊗ χ′)(Δ(x))`.
pub fn convolve_characters(chi: &Character, chi2: &Character, q: &QuantumSemigroup) -> Result<Character, AlgebraError> {
    let tt = Morphism::tensor(&[chi.0.clone(), chi2.0.clone()])?;
    let mut values = BTreeMap::new();
    for (g, d) in q.comult.images() {
        let v = collapse_scalar_legs(&tt.eval(d)?)?;
        values.insert(g.clone(), v.coefficient(&Key::Idx(0)));
    }
    Character::from_values(&q.algebra, &values)
}

/// Multiplication table of the given characters under convolution:
/// `table[i][j]` is the index of `chars[i] ⋆ chars[j]`.
pub fn character_monoid(q: &QuantumSemigroup, chars: &[Character]) -> Result<Vec<Vec<usize>>, AlgebraError> {
    let mut table = Vec::with_capacity(chars.len());
    for (i, a) in chars.iter().enumerate() {
        let mut row = Vec::with_capacity(chars.len());
        for (j, b) in chars.iter().enumerate() {
            let c = convolve_characters(a, b, q)?;
            let idx = chars.iter().position(|x| x.same_values(&c)).ok_or_else(|| {
                AlgebraError::Other(format!("characters not closed under convolution: {i} ⋆ {j}"))
            })?;
            row.push(idx);
        }
        table.push(row);
    }
    Ok(table)
}

/// Index of a two-sided identity in a multiplication table.
pub fn monoid_identity(table: &[Vec<usize>]) -> Option<usize> {
    let n = table.len();
    (0..n).find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
}

/// Whether the table is an associative operation with identity and inverses.
pub fn is_group(table: &[Vec<usize>]) -> bool {
    let n = table.len();
    let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| table[table[a][b]][c] == table[a][table[b][c]])));
    let Some(e) = monoid_identity(table) else { return false };
    assoc && (0..n).all(|g| (0..n).any(|h| table[g][h] == e && table[h][g] == e))
}

/// The presentation of the quantum space of all maps from the noncommutative
/// two-point space `M₂` into `ℤ₂`: self-adjoint `p`, `q` and a free `z` with
/// `p = p² + z*z`, `q = q² + zz*`, `zp = (1−q)z`.
pub fn noqg_presentation() -> Presentation {
    let g = |s: &str| NCExpr::generator(s);
    let zs = NCExpr::letter(Letter::star("z"));
    let rels = vec![
        g("p").mul(&g("p")).add(&zs.mul(&g("z"))).sub(&g("p")),
        g("q").mul(&g("q")).add(&g("z").mul(&zs)).sub(&g("q")),
        g("z").mul(&g("p")).add(&g("q").mul(&g("z"))).sub(&g("z")),
    ];
    Presentation::new(
        vec![Generator::self_adjoint("p"), Generator::self_adjoint("q"), Generator::free("z")],
        rels,
    )
    .expect("static presentation")
}

/// `Φ: ℂ² → M₂ ⊗ F` with `Φ(e₁) = [[p, z*], [z, q]]`, where `F` is the free
/// *-algebra on `p, q, z` (the relations of [`noqg_presentation`] hold only
/// modulo the ideal they generate).
pub fn noqg_phi() -> Result<Morphism, AlgebraError> {
    let b = make_matrix_algebra(2)?;
    let f = make_free_star(noqg_presentation().generators().to_vec())?;
    let bf = tensor(&[b.clone(), f.clone()])?;
    let t = |e: &str, x: Element| -> Result<Element, AlgebraError> {
        tensor_elements_in(&bf, &[Element::generator(&b, e)?, x])
    };
    let p = Element::generator(&f, "p")?;
    let q = Element::generator(&f, "q")?;
    let z = Element::generator(&f, "z")?;
    let big_p = [
        t("E11", p)?,
        t("E12", z.star())?,
        t("E21", z)?,
        t("E22", q)?,
    ]
    .iter()
    .fold(Element::zero(&bf), |acc, x| &acc + x);
    let c2 = make_cn(2)?;
    let mut images = BTreeMap::new();
    images.insert("e2".to_string(), &Element::one(&bf) - &big_p);
    images.insert("e1".to_string(), big_p);
    Morphism::new(&c2, &bf, images)
}

/// Matrix entries (row-major) of an element of `M_n ⊗ F`, as expressions in
/// the generators of `F`.
pub fn matrix_entries(x: &Element) -> Result<Vec<NCExpr>, AlgebraError> {
    let legs = legs_of(x.owner());
    let n2 = legs[0]
        .as_finite_dim()
        .map(|f| f.dim())
        .ok_or_else(|| AlgebraError::ShapeMismatch("first leg must be a matrix algebra".into()))?;
    (0..n2)
        .map(|i| {
            let e = contract_leg(x, 0, |k| if *k == Key::Idx(i) { Scalar::one() } else { Scalar::zero() })?;
            Ok(e.to_expression())
        })
        .collect()
}

/// Entries of `Φ(e₁)² − Φ(e₁)` and `Φ(e₁)* − Φ(e₁)` computed in `M₂ ⊗ F`,
/// nonzero ones only, in row-major order.
pub fn derive_noqg_relations() -> Result<Vec<NCExpr>, AlgebraError> {
    let phi = noqg_phi()?;
    let p = phi.image("e1").expect("e1").clone();
    let idem = &(&p * &p) - &p;
    let sa = &p.star() - &p;
    let mut out = Vec::new();
    for x in [idem, sa] {
        out.extend(matrix_entries(&x)?.into_iter().filter(|e| !e.is_zero()));
    }
    Ok(out)
}

/// Well-definedness of a map into `M_n ⊗ F` modulo a set of relations of the
/// free algebra `F`: every violated relation must leave residue entries that
/// are, up to sign, one of `relations` or its adjoint.
pub fn check_well_defined_modulo(m: &Morphism, relations: &Presentation) -> Verdict {
    let Err(violations) = m.check_well_defined() else { return Ok(()) };
    let normalize = |e: &NCExpr| relations.normalize(e);
    let mut allowed = Vec::new();
    for r in relations.all_relations() {
        for e in [r.clone(), r.star()] {
            allowed.push(normalize(&e));
            allowed.push(normalize(&e.neg()));
        }
    }
    let mut unexplained = Vec::new();
    for v in violations {
        let entries = matrix_entries(&v.residue)?;
        if entries.iter().any(|e| !e.is_zero() && !allowed.contains(&normalize(e))) {
            unexplained.push(v);
        }
    }
    if unexplained.is_empty() {
        Ok(())
    } else {
        Err(CheckFailure::IllDefined(unexplained))
    }
}

/// The four characters of `ℂ² ⋆ ℂ²` sending `p ↦ a`, `q ↦ b` with `a, b ∈ {0, 1}`,
/// in the order (0,0), (0,1), (1,0), (1,1).
pub fn projection_characters(c: &AlgebraRef) -> Result<Vec<Character>, AlgebraError> {
    let mut out = Vec::new();
    for a in 0..2i64 {
        for b in 0..2i64 {
            let mut v = BTreeMap::new();
            v.insert("e1@1".to_string(), Scalar::from_int(a));
            v.insert("e2@1".to_string(), Scalar::from_int(1 - a));
            v.insert("e1@2".to_string(), Scalar::from_int(b));
            v.insert("e2@2".to_string(), Scalar::from_int(1 - b));
            out.push(Character::from_values(c, &v)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
