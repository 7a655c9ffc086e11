use super::*;
use crate::expr::Letter;
use crate::presentation::Generator;

fn gen(a: &AlgebraRef, name: &str) -> Element {
    Element::generator(a, name).unwrap()
}

fn identity_assignment(a: &AlgebraRef) -> BTreeMap<String, Element> {
    a.presentation().generator_names().map(|g| (g.to_string(), gen(a, g))).collect()
}

#[test]
fn cn_relations_hold() {
    let c2 = make_cn(2).unwrap();
    let (e1, e2) = (gen(&c2, "e1"), gen(&c2, "e2"));
    assert!((&e1 * &e2).is_zero());
    assert_eq!(&e1 + &e2, Element::one(&c2));
    assert_eq!(e1.star(), e1);
    assert_eq!(e2.star(), e2);
    assert!(make_cn(0).is_err());
}

#[test]
fn c1_is_the_scalars() {
    let c = scalars();
    assert_eq!(Element::one(&c), gen(&c, "e1"));
    assert_eq!(c.as_finite_dim().unwrap().dim(), 1);
    assert!(c.as_finite_dim().unwrap().complement().is_empty());
}

#[test]
fn matrix_unit_relations() {
    let m = make_matrix_algebra(2).unwrap();
    let e = |s| gen(&m, s);
    assert_eq!(&e("E12") * &e("E21"), e("E11"));
    assert!((&e("E12") * &e("E12")).is_zero());
    assert_eq!(&e("E11") * &e("E12"), e("E12"));
    let one = &e("E11") + &e("E22");
    for b in ["E11", "E12", "E21", "E22"] {
        assert_eq!(&one * &e(b), e(b));
        assert_eq!(&e(b) * &one, e(b));
    }
    assert_eq!(e("E12").star(), e("E21"));
    assert_eq!(e("E21").star(), e("E12"));
}

#[test]
fn free_star_words() {
    let f = make_free_star(vec![Generator::self_adjoint("p"), Generator::free("z")]).unwrap();
    let (p, z) = (gen(&f, "p"), gen(&f, "z"));
    let zs_p = &z.star() * &p;
    let p_zs = &p * &z.star();
    assert_ne!(zs_p, p_zs);
    assert_eq!(zs_p.num_terms(), 1);
    assert_eq!((&z * &p).star(), p_zs);
    assert_eq!(p.star(), p);
    assert!(make_free_star(vec![Generator::free("z"), Generator::free("z")]).is_err());
}

#[test]
fn empty_free_star_is_scalars() {
    let f = make_free_star(vec![]).unwrap();
    let x = Element::scalar(&f, Scalar::ratio(3, 4));
    assert_eq!(x.as_scalar(), Some(Scalar::ratio(3, 4)));
    assert_eq!(f.presentation().generators().len(), 0);
}

#[test]
fn arithmetic_basics() {
    let m = make_matrix_algebra(2).unwrap();
    let x = &gen(&m, "E12") + &gen(&m, "E11").scale(&Scalar::i());
    assert!((&x + &x.scale(&Scalar::from_int(-1))).is_zero());
    let f = make_free_star(vec![Generator::free("a"), Generator::free("b"), Generator::self_adjoint("c")]).unwrap();
    let (a, b, c) = (gen(&f, "a"), gen(&f, "b"), gen(&f, "c"));
    let w = &(&a * &b) * &c;
    assert_eq!(w.star(), &(&c.star() * &b.star()) * &a.star());
}

#[test]
fn owner_mismatch_is_an_error() {
    let a = make_cn(2).unwrap();
    let b = make_cn(3).unwrap();
    assert!(matches!(gen(&a, "e1").try_mul(&gen(&b, "e1")), Err(AlgebraError::OwnerMismatch(..))));
    assert!(matches!(gen(&a, "e1").try_add(&gen(&b, "e1")), Err(AlgebraError::OwnerMismatch(..))));
}

#[test]
fn eval_ncexpr_examples() {
    let m = make_matrix_algebra(2).unwrap();
    let p = NCExpr::generator("p");
    let expr = p.mul(&p).sub(&p);
    let mut asg = BTreeMap::new();
    asg.insert("p".to_string(), gen(&m, "E11"));
    assert!(eval_ncexpr(&expr, &m, &asg).unwrap().is_zero());
    asg.insert("p".to_string(), gen(&m, "E12"));
    assert_eq!(eval_ncexpr(&expr, &m, &asg).unwrap(), gen(&m, "E12").neg());

    let c2 = make_cn(2).unwrap();
    let sum = NCExpr::generator("e1").add(&NCExpr::generator("e2")).sub(&NCExpr::one());
    assert!(eval_ncexpr(&sum, &c2, &identity_assignment(&c2)).unwrap().is_zero());

    let unassigned = eval_ncexpr(&NCExpr::generator("w"), &c2, &identity_assignment(&c2));
    assert_eq!(unassigned.unwrap_err(), AlgebraError::Unassigned("w".into()));
}

#[test]
fn starred_letters_use_the_involution_of_images() {
    let m = make_matrix_algebra(2).unwrap();
    let mut asg = BTreeMap::new();
    asg.insert("z".to_string(), gen(&m, "E21"));
    let zs_z = NCExpr::letter(Letter::star("z")).mul(&NCExpr::generator("z"));
    assert_eq!(eval_ncexpr(&zs_z, &m, &asg).unwrap(), gen(&m, "E11"));
}

#[test]
fn presentations_are_self_consistent() {
    for a in [make_cn(1).unwrap(), make_cn(3).unwrap(), make_matrix_algebra(2).unwrap(), make_matrix_algebra(3).unwrap()] {
        let asg = identity_assignment(&a);
        for r in a.presentation().all_relations() {
            assert!(eval_ncexpr(&r, &a, &asg).unwrap().is_zero(), "{} in {}", r, a.signature());
        }
        let d = a.as_finite_dim().unwrap().dim();
        for i in 0..d {
            let e = a.basis_expression(&Key::Idx(i));
            assert_eq!(eval_ncexpr(&e, &a, &asg).unwrap(), Element::basis(&a, Key::Idx(i)));
        }
    }
}

#[test]
fn builtin_algebras_satisfy_the_axioms_elementwise() {
    for a in [make_cn(3).unwrap(), make_matrix_algebra(2).unwrap()] {
        let d = a.as_finite_dim().unwrap().dim();
        let b = |i| Element::basis(&a, Key::Idx(i));
        let one = Element::one(&a);
        for i in 0..d {
            assert_eq!(&one * &b(i), b(i));
            assert_eq!(&b(i) * &one, b(i));
            assert_eq!(b(i).star().star(), b(i));
            for j in 0..d {
                assert_eq!((&b(i) * &b(j)).star(), &b(j).star() * &b(i).star());
                for k in 0..d {
                    assert_eq!(&(&b(i) * &b(j)) * &b(k), &b(i) * &(&b(j) * &b(k)));
                }
            }
        }
    }
}

#[test]
fn canonical_form_is_idempotent() {
    let m = make_matrix_algebra(2).unwrap();
    let x = &gen(&m, "E12") + &gen(&m, "E21").scale(&Scalar::ratio(1, 3));
    let again = Element::from_coords(&m, x.coords().clone());
    assert_eq!(again, x);
    let e = x.to_expression();
    assert_eq!(NCExpr::from_terms(e.terms().map(|(w, c)| (c.clone(), w.clone()))), e);
}
