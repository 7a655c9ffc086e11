use super::*;
use crate::algebra::{make_cn, make_free_star, make_matrix_algebra, make_presented, scalars};
use crate::presentation::{Generator, Presentation};
use crate::products::{free_power, tensor_elements, tensor_elements_in};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn gen(a: &AlgebraRef, name: &str) -> Element {
    Element::generator(a, name).unwrap()
}

fn idempotent_domain() -> AlgebraRef {
    let p = NCExpr::generator("p");
    make_presented(Presentation::new(vec![Generator::self_adjoint("p")], vec![p.sub(&p.mul(&p))]).unwrap()).unwrap()
}

fn single_image(dom: &AlgebraRef, cod: &AlgebraRef, x: Element) -> Morphism {
    Morphism::new(dom, cod, [("p".to_string(), x)].into_iter().collect()).unwrap()
}

/// A random rational projection in M₂: 0, 1, or `v v* / (v* v)`.
pub(crate) fn random_projection(m: &AlgebraRef, rng: &mut impl Rng) -> Element {
    match rng.gen_range(0..4) {
        0 => Element::zero(m),
        1 => Element::one(m),
        _ => {
            let a = Scalar::from_int(rng.gen_range(-3..=3));
            let b = &Scalar::from_int(rng.gen_range(-3..=3)) + &(&Scalar::i() * &Scalar::from_int(rng.gen_range(-3..=3)));
            let v = [if a.is_zero() && b.is_zero() { Scalar::one() } else { a }, b];
            let norm = Scalar::from_rational(v[0].norm_sqr() + v[1].norm_sqr());
            let names = [["E11", "E12"], ["E21", "E22"]];
            let mut x = Element::zero(m);
            for i in 0..2 {
                for j in 0..2 {
                    let c = &(&v[i] * &v[j].conj()) / &norm;
                    x = &x + &gen(m, names[i][j]).scale(&c);
                }
            }
            x
        }
    }
}

#[test]
fn well_definedness_examples() {
    let dom = idempotent_domain();
    let m = make_matrix_algebra(2).unwrap();
    assert!(single_image(&dom, &m, gen(&m, "E11")).check_well_defined().is_ok());
    let bad = single_image(&dom, &m, gen(&m, "E12")).check_well_defined().unwrap_err();
    // E12 is not self-adjoint either, so the involution relation fails too
    let idem = bad.iter().find(|v| v.relation == NCExpr::generator("p").sub(&NCExpr::word(&["p", "p"]))).unwrap();
    assert_eq!(idem.residue, gen(&m, "E12"));
    assert_eq!(bad.len(), 2);
}

#[test]
fn construction_errors() {
    let dom = idempotent_domain();
    let m = make_matrix_algebra(2).unwrap();
    let c2 = make_cn(2).unwrap();
    assert!(matches!(Morphism::new(&dom, &m, BTreeMap::new()), Err(AlgebraError::Unassigned(_))));
    assert!(matches!(
        Morphism::new(&dom, &m, [("p".to_string(), gen(&c2, "e1"))].into_iter().collect()),
        Err(AlgebraError::OwnerMismatch(..))
    ));
    let mut extra: BTreeMap<String, Element> = [("p".to_string(), gen(&m, "E11"))].into_iter().collect();
    extra.insert("w".into(), gen(&m, "E11"));
    assert!(matches!(Morphism::new(&dom, &m, extra), Err(AlgebraError::UnknownGenerator(_))));
}

#[test]
fn identity_is_identity_on_random_elements() {
    let c = free_power(&make_cn(2).unwrap(), 2).unwrap();
    let id = Morphism::identity(&c);
    let gens: Vec<Element> = ["e1@1", "e2@1", "e1@2", "e2@2"].iter().map(|g| gen(&c, g)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let mut x = Element::zero(&c);
        for _ in 0..rng.gen_range(1..4) {
            let mut w = Element::scalar(&c, Scalar::ratio(rng.gen_range(-5..6), rng.gen_range(1..4)));
            for _ in 0..rng.gen_range(0..5) {
                w = &w * &gens[rng.gen_range(0..4)];
            }
            x = &x + &w;
        }
        assert_eq!(id.eval(&x).unwrap(), x);
    }
}

#[test]
fn characters_are_multiplicative() {
    let c = free_power(&make_cn(2).unwrap(), 2).unwrap();
    let s = scalars();
    let eps = Morphism::from_fn(&c, &s, |g| {
        Ok(if g.starts_with("e1") { Element::one(&s) } else { Element::zero(&s) })
    })
    .unwrap();
    let eps2 = Morphism::from_fn(&c, &s, |g| {
        Ok(if g == "e1@1" || g == "e2@2" { Element::one(&s) } else { Element::zero(&s) })
    })
    .unwrap();
    let (p, q) = (gen(&c, "e1@1"), gen(&c, "e1@2"));
    let pqp = &(&p * &q) * &p;
    for e in [&eps, &eps2] {
        assert!(e.check_well_defined().is_ok());
        let lhs = e.eval(&pqp).unwrap();
        let rhs = &(&e.eval(&p).unwrap() * &e.eval(&q).unwrap()) * &e.eval(&p).unwrap();
        assert_eq!(lhs, rhs);
    }
    assert!(eps2.eval(&pqp).unwrap().is_zero());
}

#[test]
fn tensor_of_identities_is_identity() {
    let c2 = make_cn(2).unwrap();
    let m = make_matrix_algebra(2).unwrap();
    let t = Morphism::tensor(&[Morphism::identity(&c2), Morphism::identity(&m)]).unwrap();
    let tt = tensor(&[c2.clone(), m.clone()]).unwrap();
    assert!(t.agrees_with(&Morphism::identity(&tt)).is_ok());
    let x = tensor_elements(&[gen(&c2, "e1"), gen(&m, "E12")]).unwrap();
    assert_eq!(t.eval(&x).unwrap(), x);
}

#[test]
fn compose_with_iota_and_pi() {
    let a = make_cn(2).unwrap();
    let c = free_power(&a, 2).unwrap();
    let p = pi(&c).unwrap();
    assert!(p.check_well_defined().is_ok());
    for k in 0..2 {
        let i = iota_morphism(&c, k).unwrap();
        assert!(i.check_well_defined().is_ok());
        assert!(Morphism::compose(&p, &i).unwrap().agrees_with(&Morphism::identity(&a)).is_ok());
    }
    assert!(iota_morphism(&c, 2).is_err());
}

#[test]
fn factor_through_identities_is_pi() {
    let a = make_cn(2).unwrap();
    let c = free_power(&a, 2).unwrap();
    let id = Morphism::identity(&a);
    let lam = factor_through_free_product(&c, &[id.clone(), id]).unwrap();
    assert!(lam.agrees_with(&pi(&c).unwrap()).is_ok());

    let c1 = free_power(&a, 1).unwrap();
    let psi = Morphism::identity(&a);
    let lam1 = factor_through_free_product(&c1, &[psi.clone()]).unwrap();
    assert!(Morphism::compose(&lam1, &iota_morphism(&c1, 0).unwrap()).unwrap().agrees_with(&psi).is_ok());
    assert!(factor_through_free_product(&c, &[Morphism::identity(&a)]).is_err());
}

#[test]
fn factor_through_characters() {
    let a = make_cn(2).unwrap();
    let c = free_power(&a, 2).unwrap();
    let s = scalars();
    let chi = |v: i64| {
        Morphism::from_fn(&a, &s, |g| {
            let x = if g == "e1" { v } else { 1 - v };
            Ok(Element::scalar(&s, Scalar::from_int(x)))
        })
        .unwrap()
    };
    for (x, y) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        let lam = factor_through_free_product(&c, &[chi(x), chi(y)]).unwrap();
        assert!(lam.check_well_defined().is_ok());
        assert_eq!(lam.eval(&gen(&c, "e1@1")).unwrap(), Element::scalar(&s, Scalar::from_int(x)));
        assert_eq!(lam.eval(&gen(&c, "e1@2")).unwrap(), Element::scalar(&s, Scalar::from_int(y)));
    }
}

#[test]
fn decompose_and_reassemble_random_maps() {
    let a = make_cn(2).unwrap();
    let c2 = make_cn(2).unwrap();
    let m = make_matrix_algebra(2).unwrap();
    let target = tensor(&[c2.clone(), m.clone()]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let ps = [random_projection(&m, &mut rng), random_projection(&m, &mut rng)];
        let img = &tensor_elements_in(&target, &[gen(&c2, "e1"), ps[0].clone()]).unwrap()
            + &tensor_elements_in(&target, &[gen(&c2, "e2"), ps[1].clone()]).unwrap();
        let psi = Morphism::from_fn(&a, &target, |g| {
            Ok(if g == "e1" { img.clone() } else { &Element::one(&target) - &img })
        })
        .unwrap();
        assert!(psi.check_well_defined().is_ok());
        let parts = decompose_over_cn(&psi).unwrap();
        assert_eq!(parts.len(), 2);
        for g in ["e1", "e2"] {
            let mut sum = Element::zero(&target);
            for (i, part) in parts.iter().enumerate() {
                assert!(part.check_well_defined().is_ok());
                let e = gen(&c2, &format!("e{}", i + 1));
                sum = &sum + &tensor_elements_in(&target, &[e, part.image(g).unwrap().clone()]).unwrap();
            }
            assert_eq!(&sum, psi.image(g).unwrap());
        }
    }
}

#[test]
fn decompose_over_c1_drops_the_leg() {
    let a = make_cn(2).unwrap();
    let c1 = make_cn(1).unwrap();
    let m = make_matrix_algebra(2).unwrap();
    let target = tensor(&[c1.clone(), m.clone()]).unwrap();
    let psi = Morphism::from_fn(&a, &target, |g| {
        let x = if g == "e1" { gen(&m, "E11") } else { gen(&m, "E22") };
        tensor_elements_in(&target, &[Element::one(&c1), x])
    })
    .unwrap();
    let parts = decompose_over_cn(&psi).unwrap();
    assert_eq!(parts.len(), 1);
    assert_eq!(parts[0].image("e1").unwrap(), &gen(&m, "E11"));
    let bad = Morphism::identity(&a);
    assert!(decompose_over_cn(&bad).is_err());
}

#[test]
fn multiplication_map() {
    let c2 = make_cn(2).unwrap();
    let m = mu(&c2).unwrap();
    let x = tensor_elements(&[gen(&c2, "e1"), gen(&c2, "e2")]).unwrap();
    assert!(m.eval(&x).unwrap().is_zero());
    let y = tensor_elements(&[gen(&c2, "e1"), Element::one(&c2)]).unwrap();
    assert_eq!(m.eval(&y).unwrap(), gen(&c2, "e1"));
    let err = mu(&make_matrix_algebra(2).unwrap()).unwrap_err();
    assert!(matches!(err, AlgebraError::NotAHomomorphism(_)));
}

#[test]
fn unital_embed_matches_pi_after_phi() {
    // (id ⊗ π) ∘ Φ = (a ↦ 1 ⊗ a)
    let a = make_cn(2).unwrap();
    let (c, phi) = crate::qsg::quantum_family_of_maps(&a, 2).unwrap();
    let b = make_cn(2).unwrap();
    let lhs = Morphism::compose(&Morphism::tensor(&[Morphism::identity(&b), pi(&c).unwrap()]).unwrap(), &phi).unwrap();
    let rhs = unital_embed(&b, &a).unwrap();
    assert!(rhs.check_well_defined().is_ok());
    assert!(lhs.agrees_with(&rhs).is_ok());
}

#[test]
fn morphisms_are_multiplicative_on_basis_pairs() {
    let a = make_matrix_algebra(2).unwrap();
    let c = free_power(&a, 2).unwrap();
    let p = pi(&c).unwrap();
    let i2 = iota_morphism(&c, 1).unwrap();
    let basis: Vec<Element> = (0..4).map(|i| Element::basis(&a, Key::Idx(i))).collect();
    for x in &basis {
        assert_eq!(i2.eval(&x.star()).unwrap(), i2.eval(x).unwrap().star());
        for y in &basis {
            let xy = i2.eval(&(x * y)).unwrap();
            assert_eq!(xy, &i2.eval(x).unwrap() * &i2.eval(y).unwrap());
            assert_eq!(p.eval(&xy).unwrap(), x * y);
        }
    }
    assert_eq!(i2.eval(&Element::one(&a)).unwrap(), Element::one(&c));
}

#[test]
fn free_star_images_are_checked_against_involution() {
    let f = make_free_star(vec![Generator::free("z")]).unwrap();
    let m = make_matrix_algebra(2).unwrap();
    let phi = Morphism::new(&f, &m, [("z".to_string(), gen(&m, "E12"))].into_iter().collect()).unwrap();
    assert!(phi.check_well_defined().is_ok());
    let zzs = &gen(&f, "z") * &gen(&f, "z").star();
    assert_eq!(phi.eval(&zzs).unwrap(), gen(&m, "E11"));
}
