use super::*;
use crate::morphism::{factor_through_free_product, iota_morphism, pi};
use crate::products::free_power;

fn z(n: usize) -> QuantumSemigroup {
    group_function_qsg(&FiniteGroup::cyclic(n).unwrap()).unwrap()
}

fn gen(a: &AlgebraRef, name: &str) -> Element {
    Element::generator(a, name).unwrap()
}

fn tt(target: &AlgebraRef, x: &Element, y: &Element) -> Element {
    tensor_elements_in(target, &[x.clone(), y.clone()]).unwrap()
}

/// `2 p⊗p − p⊗1 − 1⊗p + 1⊗1`, assembled by hand.
fn expected_delta(c: &AlgebraRef, p: &Element) -> Element {
    let cc = tensor(&[c.clone(), c.clone()]).unwrap();
    let one = Element::one(c);
    let two = Scalar::from_int(2);
    &(&(&tt(&cc, p, p).scale(&two) - &tt(&cc, p, &one)) - &tt(&cc, &one, p)) + &tt(&cc, &one, &one)
}

#[test]
fn group_tables_are_validated() {
    assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]).is_err());
    assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1]]).is_err());
    let g = FiniteGroup::from_table(vec![vec![0, 1], vec![1, 0]]).unwrap();
    assert_eq!(g.identity(), 0);
    assert_eq!(g.inv(1), 1);
    let z4 = FiniteGroup::cyclic(4).unwrap();
    assert_eq!(z4.mul(3, 2), 1);
    assert_eq!(z4.inv(1), 3);
}

#[test]
fn z2_comultiplication() {
    let q = z(2);
    let a = q.algebra().clone();
    let aa = tensor(&[a.clone(), a.clone()]).unwrap();
    let (d0, d1) = (gen(&a, "e1"), gen(&a, "e2"));
    assert_eq!(q.delta("e1"), &(&tt(&aa, &d0, &d0) + &tt(&aa, &d1, &d1)));
    assert_eq!(q.delta("e1"), &expected_delta(&a, &d0));
    assert!(q.verify().is_ok());
    assert!(z(3).verify().is_ok());
    assert!(z(4).verify().is_ok());
}

#[test]
fn trivial_structure() {
    let c2 = make_cn(2).unwrap();
    let q = trivial_qsg(&c2).unwrap();
    assert!(q.verify().is_ok());
    let cc = tensor(&[c2.clone(), c2.clone()]).unwrap();
    assert_eq!(q.comult().eval(&Element::one(&c2)).unwrap(), Element::one(&cc));
    // (ε ⊗ id)Δ(g) = ε(g)·1 can never return g on ℂ²
    for v in [(1, 0), (0, 1)] {
        let values = [("e1".to_string(), Scalar::from_int(v.0)), ("e2".to_string(), Scalar::from_int(v.1))];
        let eps = Character::from_values(&c2, &values.into_iter().collect()).unwrap();
        assert!(check_counit(&q, &eps).is_err());
    }
}

#[test]
fn corrupted_comultiplication_fails_coassociativity() {
    let c = free_power(&make_cn(2).unwrap(), 2).unwrap();
    let cc = tensor(&[c.clone(), c.clone()]).unwrap();
    let (p, qq) = (gen(&c, "e1@1"), gen(&c, "e1@2"));
    let good = free_product_qsg(&[z(2), z(2)]).unwrap();
    let mut images = good.comult().images().clone();
    let bad_p = tt(&cc, &p, &qq);
    images.insert("e2@1".into(), &Element::one(&cc) - &bad_p);
    images.insert("e1@1".into(), bad_p);
    let bad = QuantumSemigroup::new(Morphism::new(&c, &cc, images).unwrap()).unwrap();
    assert!(bad.check_well_defined().is_ok());
    match bad.check_coassociativity() {
        Err(CheckFailure::Mismatch(d)) => assert!(!d.difference.is_zero()),
        other => panic!("expected a mismatch, got {other:?}"),
    }
}

#[test]
fn quantum_family_of_two_points() {
    let a = make_cn(2).unwrap();
    let (c, phi) = quantum_family_of_maps(&a, 2).unwrap();
    assert!(phi.check_well_defined().is_ok());
    let b = make_cn(2).unwrap();
    let bc = phi.codomain().clone();
    let expected = &tt(&bc, &gen(&b, "e1"), &gen(&c, "e1@1")) + &tt(&bc, &gen(&b, "e2"), &gen(&c, "e1@2"));
    assert_eq!(phi.image("e1").unwrap(), &expected);

    let (c1, phi1) = quantum_family_of_maps(&a, 1).unwrap();
    let e1 = gen(&make_cn(1).unwrap(), "e1");
    assert_eq!(phi1.image("e2").unwrap(), &tt(phi1.codomain(), &e1, &gen(&c1, "e2@1")));
}

#[test]
fn decompose_phi_gives_the_inclusions() {
    let a = make_cn(3).unwrap();
    let (c, phi) = quantum_family_of_maps(&a, 2).unwrap();
    let parts = crate::morphism::decompose_over_cn(&phi).unwrap();
    for (k, part) in parts.iter().enumerate() {
        assert!(part.agrees_with(&iota_morphism(&c, k).unwrap()).is_ok());
    }
}

#[test]
fn free_product_comultiplications() {
    let two = free_product_qsg(&[z(2), z(2)]).unwrap();
    let c = two.algebra().clone();
    assert_eq!(two.delta("e1@1"), &expected_delta(&c, &gen(&c, "e1@1")));
    assert_eq!(two.delta("e1@2"), &expected_delta(&c, &gen(&c, "e1@2")));
    assert!(free_product_qsg(&[z(2), z(3)]).is_ok());

    let triv = trivial_qsg(&make_cn(2).unwrap()).unwrap();
    let t3 = free_product_qsg(&[triv.clone(), triv.clone(), triv]).unwrap();
    let c = t3.algebra().clone();
    let cc = tensor(&[c.clone(), c.clone()]).unwrap();
    for g in c.presentation().generator_names() {
        assert_eq!(t3.delta(g), &tt(&cc, &gen(&c, g), &Element::one(&c)));
    }
}

#[test]
fn non_coassociative_factor_rejected() {
    let c = free_power(&make_cn(2).unwrap(), 2).unwrap();
    let cc = tensor(&[c.clone(), c.clone()]).unwrap();
    let good = free_product_qsg(&[z(2), z(2)]).unwrap();
    let mut images = good.comult().images().clone();
    let p = gen(&c, "e1@1");
    let q = gen(&c, "e1@2");
    let bad_p = tt(&cc, &p, &q);
    images.insert("e2@1".into(), &Element::one(&cc) - &bad_p);
    images.insert("e1@1".into(), bad_p);
    let bad = QuantumSemigroup::new(Morphism::new(&c, &cc, images).unwrap()).unwrap();
    assert!(matches!(free_product_qsg(&[bad, z(2)]), Err(CheckFailure::Structure(_))));
}

#[test]
fn gamma_for_z2() {
    let gamma = sadr_comultiplication(&z(2), 2).unwrap();
    let c = gamma.domain().clone();
    let cc = gamma.codomain().clone();
    let p = gen(&c, "e1@1");
    let np = &Element::one(&c) - &p;
    assert_eq!(gamma.image("e1@1").unwrap(), &(&tt(&cc, &p, &p) + &tt(&cc, &np, &np)));
    assert_eq!(gamma.eval(&Element::one(&c)).unwrap(), Element::one(&cc));
}

#[test]
fn gamma_replays_the_inclusion_formula() {
    let a = z(3);
    let gamma = sadr_comultiplication(&a, 2).unwrap();
    let c = gamma.domain().clone();
    let i1 = iota_morphism(&c, 0).unwrap();
    let i1i1 = Morphism::tensor(&[i1.clone(), i1]).unwrap();
    for g in ["e1", "e2", "e3"] {
        assert_eq!(gamma.image(&copy_name(g, 0)).unwrap(), &i1i1.eval(a.delta(g)).unwrap());
    }
}

#[test]
fn gamma_equals_delta() {
    assert!(verify_gamma_equals_delta(&z(2), 2).is_ok());
    assert!(verify_gamma_equals_delta(&z(2), 3).is_ok());
    assert!(verify_gamma_equals_delta(&z(3), 2).is_ok());
}

#[test]
fn counit_transfer() {
    for (n, copies) in [(2, 2), (2, 3), (3, 2)] {
        let g = FiniteGroup::cyclic(n).unwrap();
        let a = z(n);
        let eps = group_counit(&g).unwrap();
        assert!(check_counit(&a, &eps).is_ok());
        let c = free_product_qsg(&vec![a.clone(); copies]).unwrap();
        let eps_c = counit_of_free_product(&vec![eps; copies], &c).unwrap();
        assert!(check_counit(&c, &eps_c).is_ok());
        for r in restrict_to_factors(&eps_c).unwrap() {
            assert!(check_counit(&a, &r).is_ok());
        }
    }
}

#[test]
fn counit_examples_on_two_projections() {
    let fp = free_product_qsg(&[z(2), z(2)]).unwrap();
    let chars = projection_characters(fp.algebra()).unwrap();
    assert_eq!(chars[3].value("e1@1"), Scalar::one());
    assert!(check_counit(&fp, &chars[3]).is_ok());
    assert!(check_counit(&fp, &chars[0]).is_err());
    let comp = composition_qsg_qmap2().unwrap();
    assert!(check_counit(&comp, &chars[2]).is_ok());
    assert!(check_counit(&comp, &chars[3]).is_err());
}

#[test]
fn qsg_morphisms() {
    let a = z(2);
    let fp = free_product_qsg(&[a.clone(), a.clone()]).unwrap();
    let c = fp.algebra().clone();
    for k in 0..2 {
        assert!(check_qsg_morphism(&iota_morphism(&c, k).unwrap(), &a, &fp).is_ok());
    }
    assert!(check_qsg_morphism(&pi(&c).unwrap(), &fp, &a).is_ok());
    let comp = composition_qsg_qmap2().unwrap();
    assert!(matches!(check_qsg_morphism(&pi(&c).unwrap(), &comp, &a), Err(CheckFailure::Mismatch(_))));
}

#[test]
fn factoring_characters_keeps_the_morphism_property() {
    let g = FiniteGroup::cyclic(2).unwrap();
    let a = z(2);
    let s = trivial_qsg(&scalars()).unwrap();
    let eps = group_counit(&g).unwrap();
    assert!(check_qsg_morphism(eps.morphism(), &a, &s).is_ok());
    let fp = free_product_qsg(&[a.clone(), a.clone()]).unwrap();
    let theta = factor_through_free_product(fp.algebra(), &[eps.morphism().clone(), eps.morphism().clone()]).unwrap();
    assert!(check_qsg_morphism(&theta, &fp, &s).is_ok());
    for k in 0..2 {
        let back = Morphism::compose(&theta, &iota_morphism(fp.algebra(), k).unwrap()).unwrap();
        assert!(back.agrees_with(eps.morphism()).is_ok());
    }
}

#[test]
fn composition_structure() {
    let comp = composition_qsg_qmap2().unwrap();
    assert!(comp.verify().is_ok());
    let dp = comp.delta("e1@1");
    assert_eq!(&(dp * dp), dp);
    let fp = free_product_qsg(&[z(2), z(2)]).unwrap();
    assert!(!(dp - fp.delta("e1@1")).is_zero());
}

#[test]
fn character_monoids() {
    let fp = free_product_qsg(&[z(2), z(2)]).unwrap();
    let chars = projection_characters(fp.algebra()).unwrap();
    let t = character_monoid(&fp, &chars).unwrap();
    for (i, x) in chars.iter().enumerate() {
        for (j, y) in chars.iter().enumerate() {
            let (a, a2) = (x.value("e1@1"), y.value("e1@1"));
            let expect = &(&(&(&a * &a2) * &Scalar::from_int(2)) - &a) - &a2;
            assert_eq!(chars[t[i][j]].value("e1@1"), &expect + &Scalar::one());
        }
    }
    assert!(is_group(&t));
    assert_eq!(monoid_identity(&t), Some(3));

    let comp = composition_qsg_qmap2().unwrap();
    let t = character_monoid(&comp, &chars).unwrap();
    for (i, x) in chars.iter().enumerate() {
        for (j, y) in chars.iter().enumerate() {
            let (a, a2, b2) = (x.value("e1@1"), y.value("e1@1"), y.value("e1@2"));
            let expect = &(&a * &a2) + &(&(&Scalar::one() - &a) * &b2);
            assert_eq!(chars[t[i][j]].value("e1@1"), expect);
        }
    }
    assert!(!is_group(&t));
    assert_eq!(monoid_identity(&t), Some(2));
    // the constant maps are non-invertible idempotents
    for c in [0, 3] {
        assert_eq!(t[c][c], c);
    }
}

#[test]
fn convolution_outside_the_set_is_reported() {
    let fp = free_product_qsg(&[z(2), z(2)]).unwrap();
    let chars = projection_characters(fp.algebra()).unwrap();
    assert!(character_monoid(&fp, &chars[..2]).is_err());
}

#[test]
fn noqg_relations_from_phi() {
    let rels = derive_noqg_relations().unwrap();
    let pres = noqg_presentation();
    let expected = pres.relations();
    assert_eq!(rels.len(), 4);
    assert_eq!(rels[0], expected[0]);
    assert_eq!(rels[1], pres.normalize(&expected[2].star()));
    assert_eq!(rels[2], expected[2]);
    assert_eq!(rels[3], expected[1]);
    let phi = noqg_phi().unwrap();
    assert!(phi.check_well_defined().is_err());
    assert!(check_well_defined_modulo(&phi, &pres).is_ok());
    assert!(check_well_defined_modulo(&phi, &Presentation::new(pres.generators().to_vec(), vec![]).unwrap()).is_err());
}

#[test]
fn noqg_entries_are_readable() {
    let rels = derive_noqg_relations().unwrap();
    assert_eq!(rels[0].to_string(), "-p + p p + z' z");
    assert_eq!(rels[2].to_string(), "-z + q z + z p");
}
