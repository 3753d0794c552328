use proptest::prelude::*;

use super::*;
use crate::field::make_field;
use crate::poly::{parse, var_index, Monomial, MonomialOrder};

fn fp(p: u64) -> FieldSpec {
    make_field(p, None).unwrap()
}

fn poly(src: &str, k: FieldSpec) -> Polynomial {
    parse(src, k, GLOBAL).unwrap()
}

fn rf(src: &str, k: FieldSpec) -> RatFunc {
    parse_ratfunc(src, k).unwrap()
}

fn form(src: &str, k: FieldSpec) -> ReflexiveForm {
    parse_form(src, k).unwrap()
}

fn v(name: &str) -> usize {
    var_index(name).unwrap()
}

/// The map `v = w^2/(u*(u+1))`.
fn blowup_chart(k: FieldSpec) -> RationalMap {
    RationalMap::new(vec![(v("v"), rf("w^2/(u*(u+1))", k))])
}

#[test]
fn gcd_and_reduction() {
    let k = fp(5);
    let g = gcd(&poly("(x+y)*(x-z)", k), &poly("(x+y)*(y+1)", k));
    assert_eq!(g, poly("x+y", k));
    let q = rf("(x^2-y^2)/(2*x+2*y)", k);
    assert_eq!(q, rf("3*x - 3*y", k));
    assert!(q.is_polynomial());
    assert_eq!(rf("(u^2+u)/(u*w)", fp(2)).to_string(), "(u+1)/w");
    assert_eq!(gcd(&poly("x^3*y", k), &poly("x*y^2 + x*y", k)), poly("x*y", k));
}

#[test]
fn pullback_of_sigma() {
    let k = fp(2);
    let phi = blowup_chart(k);
    for n in 2..=5i64 {
        let sigma = form(&format!("v^-{n}*d(v)"), k);
        let pulled = pullback(&sigma, &phi).unwrap();
        let expected = form(&format!("(u*(u+1))^{}*d(u)/w^{}", n - 2, 2 * n - 2), k);
        assert_eq!(pulled, expected, "n = {n}");
        assert_eq!(pole_order(&pulled, v("w")), (2 * n - 2) as u32);
    }
    let p2 = pullback(&form("v^-2*d(v)", k), &phi).unwrap();
    assert_eq!(p2.to_string(), "du/w^2");
    let p3 = pullback(&form("v^-3*d(v)", k), &phi).unwrap();
    assert_eq!(p3.to_string(), "(u^2+u)*du/w^4");
}

#[test]
fn identity_pullback_and_pole_orders() {
    let k = fp(3);
    let w = pullback(&form("d(u*w)", k), &RationalMap::identity()).unwrap();
    assert_eq!(w, form("w*d(u) + u*d(w)", k));
    assert_eq!(pole_order(&form("d(u)", k), v("w")), 0);
    assert_eq!(pole_order(&form("w^3*d(u)/w^5 + d(w)", k), v("w")), 2);
}

#[test]
fn dual_basis_pairing() {
    let k = fp(2);
    for n in 2..=4 {
        let f = poly(&format!("z^2+x^2*y+x*y^{n}+x*y*z"), k);
        let v1 = Derivation::parse("0", "y", &format!("x+z+{n}*y^{}", n - 1), k).unwrap();
        let v2 = Derivation::parse("x", "0", &format!("z+y^{}", n - 1), k).unwrap();
        let alphas = [form("d(y)/y", k), form("d(x)/x", k)];
        for (i, a) in alphas.iter().enumerate() {
            for (j, d) in [&v1, &v2].iter().enumerate() {
                let val = pair(a, d, &f).unwrap();
                let expected = if i == j { RatFunc::one(k) } else { RatFunc::zero(k) };
                assert_eq!(val, expected, "n={n} i={i} j={j}");
            }
        }
    }
}

#[test]
fn pairing_with_exact_forms_differentiates() {
    let k = fp(3);
    let f = poly("z^2+x^3+y^4", k);
    let d = Derivation::parse("x*y", "z", "y+1", k).unwrap();
    let g = poly("x^2*y + z^3 + y", k);
    let val = pair(&ReflexiveForm::d(&RatFunc::from_poly(&g)), &d, &f).unwrap();
    assert!(functions_equal_on(&val, &RatFunc::from_poly(&d.apply(&g)), &f));
}

#[test]
fn pairing_rejects_denominators_on_the_surface() {
    let k = fp(3);
    let f = poly("x*y + z^2", k);
    let a = form("d(x)/(x*y + z^2)", k);
    let d = Derivation::parse("1", "0", "0", k).unwrap();
    assert!(matches!(pair(&a, &d, &f), Err(Error::DivisionUndefined(_))));
}

#[test]
fn kahler_relations() {
    let k2 = fp(2);
    let r = verify_relation(&poly("z^2+x^2*y+x*y^2", k2)).unwrap();
    assert!(r.vanishes);
    assert_eq!(r.to_string(), "y^2*dx + x^2*dy = 0");
    let k3 = fp(3);
    let r = verify_relation(&poly("z^2+x^3+y^4", k3)).unwrap();
    assert_eq!(r.terms.iter().map(|t| t.0).collect::<Vec<_>>(), vec![1, 2]);
    assert_eq!(r.to_string(), "y^3*dy - z*dz = 0");
    let r = verify_relation(&poly("x", k3)).unwrap();
    assert_eq!(r.to_string(), "dx = 0");
    assert!(r.vanishes);
}

#[test]
fn generator_presentations_agree() {
    let cases: [(u64, &str, &str, &str); 4] = [
        (2, "z^2+x^3+y^2*z", "y^-2*d(x)", "x^-2*d(z)"),
        (2, "z^2+x^3+x*y^3", "x^-1*y^-2*d(x)", "d(y)/(x^2+y^3)"),
        (3, "z^2+x^3+y^4", "z^-1*d(y)", "y^-3*d(z)"),
        (3, "z^2+x^3+x*y^3", "z^-1*d(x)", "y^-3*d(z)"),
    ];
    for (p, f, a, b) in cases {
        let k = fp(p);
        let f = poly(f, k);
        assert!(forms_equal_on(&form(a, k), &form(b, k), &f).unwrap(), "{a} vs {b}");
        assert!(!forms_equal_on(&form(a, k), &form("d(x)", k), &f).unwrap());
    }
    let k = fp(2);
    for n in 2..=5 {
        let f = poly(&format!("z^2+x^2*y+y^{n}*z"), k);
        let a = form(&format!("y^-{n}*d(y)"), k);
        let b = form(&format!("d(z)/(x^2 + {n}*y^{}*z)", n - 1), k);
        assert!(forms_equal_on(&a, &b, &f).unwrap(), "n = {n}");
    }
}

#[test]
fn parse_errors() {
    let k = fp(2);
    assert!(parse_form("x + d(y)", k).is_err());
    assert!(parse_form("d(x)*d(y)", k).is_err());
    assert!(parse_form("x", k).is_err());
    assert!(parse_ratfunc("d(x)", k).is_err());
    assert!(matches!(parse_ratfunc("1/(x - x)", k), Err(Error::DivisionUndefined(_))));
    assert!(parse_form("0", k).unwrap().is_zero());
}

fn arb_poly(vars: &'static [usize], k: FieldSpec) -> impl Strategy<Value = Polynomial> {
    let p = k.characteristic() as u64;
    proptest::collection::vec((proptest::collection::vec(0u16..3, vars.len()), 1..p.max(2)), 0..5).prop_map(
        move |ts| {
            Polynomial::from_terms(
                k,
                GLOBAL,
                ts.into_iter().map(|(e, c)| {
                    let mut m = Monomial::ONE;
                    for (v, x) in vars.iter().zip(e) {
                        m = m.mul(&Monomial::var_pow(*v, x));
                    }
                    (m, k.from_u64(c))
                }),
            )
        },
    )
}

const UVW: &[usize] = &[3, 4, 5];
const XYZ: &[usize] = &[0, 1, 2];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pullback_commutes_with_d(g in arb_poly(UVW, make_field(2, None).unwrap())) {
        let k = fp(2);
        let phi = blowup_chart(k);
        let g = RatFunc::from_poly(&g);
        let lhs = pullback(&ReflexiveForm::d(&g), &phi).unwrap();
        let rhs = ReflexiveForm::d(&phi.apply(&g).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gcd_divides_and_is_maximal(a in arb_poly(XYZ, make_field(3, None).unwrap()),
                                  b in arb_poly(XYZ, make_field(3, None).unwrap()),
                                  c in arb_poly(XYZ, make_field(3, None).unwrap())) {
        prop_assume!(!c.is_zero() && !(a.is_zero() && b.is_zero()));
        let (ac, bc) = (a.mul(&c), b.mul(&c));
        let g = gcd(&ac, &bc);
        prop_assert!(div_exact(&ac, &g).is_some());
        prop_assert!(div_exact(&bc, &g).is_some());
        prop_assert!(div_exact(&g, &c).is_some());
    }

    #[test]
    fn pairing_is_additive(a in arb_poly(XYZ, make_field(3, None).unwrap()),
                           b in arb_poly(XYZ, make_field(3, None).unwrap())) {
        let k = fp(3);
        let f = parse("z^2+x^3+y^4", k, MonomialOrder::GlobalDegRevLex).unwrap();
        let d = Derivation::parse("y", "x*z", "1", k).unwrap();
        let (fa, fb) = (RatFunc::from_poly(&a), RatFunc::from_poly(&b));
        let (da, db) = (ReflexiveForm::d(&fa), ReflexiveForm::d(&fb));
        let lhs = pair(&da.add(&db), &d, &f).unwrap();
        let rhs = pair(&da, &d, &f).unwrap().add(&pair(&db, &d, &f).unwrap());
        prop_assert!(functions_equal_on(&lhs, &rhs, &f));
    }
}
