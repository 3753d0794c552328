use proptest::prelude::*;

use super::*;
use crate::field::make_field;
use crate::poly::{jacobian, parse, Monomial};

const LOCAL: MonomialOrder = MonomialOrder::LocalNegDegRevLex;
const GLOBAL: MonomialOrder = MonomialOrder::GlobalDegRevLex;

fn fp(p: u64) -> FieldSpec {
    make_field(p, None).unwrap()
}

fn poly(src: &str, p: u64, ord: MonomialOrder) -> Polynomial {
    parse(src, fp(p), ord).unwrap()
}

fn vecp(srcs: &[&str], p: u64, ord: MonomialOrder) -> VectorPoly {
    VectorPoly::new(srcs.iter().map(|s| poly(s, p, ord)).collect())
}

fn ideal(srcs: &[&str], p: u64, ord: MonomialOrder) -> GeneratorSet {
    GeneratorSet::ideal(Ring::new(fp(p), ord), srcs.iter().map(|s| poly(s, p, ord)).collect())
}

fn opts() -> StdOptions {
    StdOptions::default()
}

#[test]
fn monomial_ideal_is_its_own_standard_basis() {
    for ord in [LOCAL, GLOBAL] {
        let b = std(&ideal(&["x^2", "y^2", "z^2"], 2, ord), opts()).unwrap();
        let mut got: Vec<String> = b.polys().iter().map(|p| p.to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["x^2", "y^2", "z^2"]);

        let b = std(&ideal(&["x", "y"], 3, ord), opts()).unwrap();
        assert_eq!(b.len(), 2);
    }
}

#[test]
fn single_generator_is_standard() {
    let f = poly("z^2+x^3+y^5", 2, LOCAL);
    let b = std(&GeneratorSet::ideal(Ring::new(fp(2), LOCAL), vec![f.clone()]), opts()).unwrap();
    assert_eq!(b.polys(), vec![f.clone()]);
    assert!(normal_form_poly(&f, &b).is_zero());
    assert!(normal_form_poly(&f.mul(&poly("1 + x*y", 2, LOCAL)), &b).is_zero());
}

#[test]
fn fedder_normal_forms() {
    let fed = std(&ideal(&["x^2", "y^2", "z^2"], 2, LOCAL), opts()).unwrap();
    assert!(normal_form_poly(&poly("z^2+x^3+y^5", 2, LOCAL), &fed).is_zero());
    let xyz = poly("x*y*z", 2, LOCAL);
    assert_eq!(normal_form_poly(&xyz, &fed), xyz);
}

#[test]
fn membership_by_construction() {
    let b = std(&ideal(&["x", "y"], 5, GLOBAL), opts()).unwrap();
    let g = poly("x*(y^3 + z + 2) + y*(x*z - 1)", 5, GLOBAL);
    assert!(normal_form_poly(&g, &b).is_zero());
    let bl = std(&ideal(&["x", "y"], 5, LOCAL), opts()).unwrap();
    assert!(normal_form_poly(&g.with_order(LOCAL), &bl).is_zero());
}

#[test]
fn local_membership_sees_units() {
    // (1 + x) * y is in (y) locally and globally; y is in ((1 + x) * y) only locally
    let gl = std(&ideal(&["y + x*y"], 3, GLOBAL), opts()).unwrap();
    let lo = std(&ideal(&["y + x*y"], 3, LOCAL), opts()).unwrap();
    assert!(!normal_form_poly(&poly("y", 3, GLOBAL), &gl).is_zero());
    assert!(normal_form_poly(&poly("y", 3, LOCAL), &lo).is_zero());
}

#[test]
fn koszul_syzygy() {
    let g = ideal(&["x", "y"], 2, GLOBAL);
    let s = syz(&g, opts()).unwrap();
    assert_eq!(s.len(), 1);
    assert_eq!(s.elems[0], vecp(&["y", "x"], 2, GLOBAL));

    let s3 = syz(&ideal(&["x", "y"], 3, LOCAL), opts()).unwrap();
    assert_eq!(s3.len(), 1);
    let v = &s3.elems[0];
    assert!(v.dot(&[poly("x", 3, LOCAL), poly("y", 3, LOCAL)]).is_zero());
}

#[test]
fn unit_has_no_syzygies() {
    for ord in [LOCAL, GLOBAL] {
        assert!(syz(&ideal(&["1"], 3, ord), opts()).unwrap().is_empty());
    }
}

fn jacobian_module(src: &str, p: u64, ord: MonomialOrder) -> (Polynomial, GeneratorSet) {
    let f = poly(src, p, ord);
    let j = jacobian(&f).into_components();
    let ring = Ring::quotient(&f, ord);
    (f, GeneratorSet::ideal(ring, j))
}

#[test]
fn e8_tangent_syzygies() {
    for ord in [LOCAL, GLOBAL] {
        let (f, jac) = jacobian_module("z^2+x^3+y^5", 2, ord);
        let t = syz(&jac, opts()).unwrap();
        let ring = Ring::quotient(&f, LOCAL);
        for expected in [vecp(&["0", "0", "1"], 2, ord), vecp(&["y^4", "x^2", "0"], 2, ord)] {
            let sb = std(&GeneratorSet::module(ring.clone(), 3, t.elems.clone()), opts()).unwrap();
            assert!(contains(&sb, &expected), "{expected} missing under {ord:?}");
        }
        let m = minimal_generators(&t, opts()).unwrap();
        assert_eq!(m.len(), 2);
        let expected_basis = vec![vecp(&["0", "0", "1"], 2, LOCAL), vecp(&["y^4", "x^2", "0"], 2, LOCAL)];
        assert!(modules_equal(&ring, 3, &m.elems, &expected_basis, opts()).unwrap());
    }
}

#[test]
fn e8_coindex_three_needs_four_generators() {
    for ord in [LOCAL, GLOBAL] {
        let (_, jac) = jacobian_module("z^2+x^3+y^5+y^3*z", 2, ord);
        let t = syz(&jac, opts()).unwrap();
        assert_eq!(minimal_generators(&t, opts()).unwrap().len(), 4, "{ord:?}");
    }
}

#[test]
fn unit_entry_elimination() {
    let ring = Ring::new(fp(3), LOCAL);
    let m = GeneratorSet::module(ring, 2, vec![vecp(&["1", "0"], 3, LOCAL), vecp(&["x", "0"], 3, LOCAL)]);
    let min = minimal_generators(&m, opts()).unwrap();
    assert_eq!(min.elems, vec![vecp(&["1", "0"], 3, LOCAL)]);
}

#[test]
fn minimal_generators_idempotent_and_unit_free() {
    for (src, p) in [("z^2+x^2*y+x*y^3+x*y*z", 2), ("x*y+z^3", 3), ("z^2+x^3+y^4", 3)] {
        let (_, jac) = jacobian_module(src, p, LOCAL);
        let t = syz(&jac, opts()).unwrap();
        let m1 = minimal_generators(&t, opts()).unwrap();
        assert!(!has_unit_entries(&m1, opts()).unwrap());
        let m2 = minimal_generators(&m1, opts()).unwrap();
        assert_eq!(m1.elems, m2.elems);
    }
}

#[test]
fn syzygies_satisfy_relation_mod_f() {
    for (src, p) in [("z^2+x^3+y^5+x*y*z", 2), ("z^2+x^3+x*y^3+x^2*y^2", 3), ("x*y+z^5", 5)] {
        for ord in [LOCAL, GLOBAL] {
            let (f, jac) = jacobian_module(src, p, ord);
            let row: Vec<Polynomial> = jac.elems.iter().map(|v| v.component(0).clone()).collect();
            let fb = std(&GeneratorSet::ideal(Ring::new(fp(p), GLOBAL), vec![f.with_order(GLOBAL)]), opts()).unwrap();
            for s in syz(&jac, opts()).unwrap().elems {
                let val = s.dot(&row).with_order(GLOBAL);
                assert!(normal_form_poly(&val, &fb).is_zero(), "{s} is not a syzygy of {src}");
            }
        }
    }
}

#[test]
fn quotient_kills_multiples_of_f() {
    let f = poly("z^2+x^3+y^5", 2, LOCAL);
    let ring = Ring::quotient(&f, LOCAL);
    let b = std(&GeneratorSet::module(ring, 3, vec![vecp(&["x", "y", "z"], 2, LOCAL)]), opts()).unwrap();
    for i in 0..3 {
        let mut comps = vec![Polynomial::zero(fp(2), LOCAL); 3];
        comps[i] = f.clone();
        assert!(contains(&b, &VectorPoly::new(comps)));
    }
}

#[test]
fn pair_budget_is_enforced() {
    let g = ideal(&["x^3 + y^2*z", "y^3 + x*z^2", "z^3 + x^2*y"], 5, GLOBAL);
    let err = std(&g, StdOptions { pair_budget: 1 }).unwrap_err();
    assert_eq!(err, crate::error::Error::ResourceLimit(1));
}

#[test]
fn global_and_local_counts_agree_on_graded_input() {
    // homogeneous f: the graded and local minimal counts coincide
    for (src, p) in [("x^3 + y^3 + z^3", 2), ("x*y*z + x^3 + y^3", 5)] {
        let counts: Vec<usize> = [LOCAL, GLOBAL]
            .iter()
            .map(|&ord| {
                let (_, jac) = jacobian_module(src, p, ord);
                minimal_generators(&syz(&jac, opts()).unwrap(), opts()).unwrap().len()
            })
            .collect();
        assert_eq!(counts[0], counts[1], "{src}");
    }
}

/// Syntactic oracle: a polynomial lies in a monomial ideal iff every term
/// is divisible by a generator.
fn in_monomial_ideal(g: &Polynomial, gens: &[Monomial]) -> bool {
    g.terms().iter().all(|(m, _)| gens.iter().any(|q| q.divides(m)))
}

proptest! {
    #[test]
    fn monomial_membership_matches_oracle(
        p in prop::sample::select(vec![2u64, 3, 5]),
        gens in proptest::collection::vec(proptest::array::uniform3(0u16..4), 1..4),
        terms in proptest::collection::vec((proptest::array::uniform3(0u16..5), 1u64..5), 0..6),
        local in any::<bool>(),
    ) {
        let k = fp(p);
        let ord = if local { LOCAL } else { GLOBAL };
        let gm: Vec<Monomial> = gens.iter().map(|e| Monomial::from_exponents(e)).collect();
        let ideal = GeneratorSet::ideal(Ring::new(k, ord), gm.iter().map(|m| Polynomial::monomial(k, ord, *m)).collect());
        let b = std(&ideal, opts()).unwrap();
        let g = Polynomial::from_terms(k, ord, terms.iter().map(|(e, c)| (Monomial::from_exponents(e), k.from_u64(*c))));
        prop_assert_eq!(normal_form_poly(&g, &b).is_zero(), in_monomial_ideal(&g, &gm));
    }

    #[test]
    fn inputs_reduce_to_zero(
        coeffs in proptest::collection::vec((proptest::array::uniform3(0u16..3), 1u64..3), 2..6),
        split in 1usize..4,
        local in any::<bool>(),
    ) {
        let k = fp(3);
        let ord = if local { LOCAL } else { GLOBAL };
        let cut = split.min(coeffs.len() - 1);
        let mk = |ts: &[([u16; 3], u64)]| Polynomial::from_terms(k, ord, ts.iter().map(|(e, c)| (Monomial::from_exponents(e), k.from_u64(*c))));
        let a = mk(&coeffs[..cut]);
        let b = mk(&coeffs[cut..]);
        let c = a.add(&b).mul(&Polynomial::var(k, ord, 0));
        let ideal = GeneratorSet::ideal(Ring::new(k, ord), vec![a.clone(), b.clone(), c.clone()]);
        let sb = std(&ideal, opts()).unwrap();
        for g in [a, b, c] {
            prop_assert!(normal_form_poly(&g, &sb).is_zero());
        }
    }
}
