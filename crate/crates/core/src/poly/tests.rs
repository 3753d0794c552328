use proptest::prelude::*;

use super::*;
use crate::error::Error;
use crate::field::{make_field, FieldSpec};

const LOCAL: MonomialOrder = MonomialOrder::LocalNegDegRevLex;
const GLOBAL: MonomialOrder = MonomialOrder::GlobalDegRevLex;

fn fp(p: u64) -> FieldSpec {
    make_field(p, None).unwrap()
}

fn f9() -> FieldSpec {
    make_field(3, Some("a^2 - a - 1")).unwrap()
}

#[test]
fn parses_session_equation() {
    let f = parse("z^2+x^3+y^5", fp(2), LOCAL).unwrap();
    assert_eq!(f.len(), 3);
    assert_eq!(f.to_string(), "z^2+x^3+y^5");
    assert!(parse("x - x", fp(5), LOCAL).unwrap().is_zero());
}

#[test]
fn parses_cone_over_f9() {
    let k = f9();
    let f = parse("y^2*z - x*(x - a*z)*(x + z)", k, GLOBAL).unwrap();
    // -x^3 + (a-1) x^2 z + a x z^2 + y^2 z
    assert_eq!(f.len(), 4);
    let g = parse("y^2*z - x^3 + (a - 1)*x^2*z + a*x*z^2", k, GLOBAL).unwrap();
    assert_eq!(f, g);
}

#[test]
fn parse_errors_carry_positions() {
    let k = fp(3);
    assert!(matches!(parse("x + q", k, GLOBAL), Err(Error::UnknownVariable { pos: 4, .. })));
    assert!(matches!(parse("xy", k, GLOBAL), Err(Error::UnknownVariable { pos: 0, .. })));
    assert!(matches!(parse("x y", k, GLOBAL), Err(Error::Syntax { pos: 2, .. })));
    assert!(matches!(parse("x + ", k, GLOBAL), Err(Error::Syntax { .. })));
    assert!(matches!(parse("(x + y", k, GLOBAL), Err(Error::Syntax { pos: 6, .. })));
    assert!(matches!(parse("x/y", k, GLOBAL), Err(Error::Syntax { pos: 1, .. })));
    assert!(matches!(parse("x^-1", k, GLOBAL), Err(Error::Syntax { .. })));
    assert!(matches!(parse("a*x", k, GLOBAL), Err(Error::UnknownVariable { .. })));
    assert!(matches!(parse("", k, GLOBAL), Err(Error::Syntax { .. })));
}

#[test]
fn leading_terms_by_order() {
    let k = fp(2);
    let f = parse("z^2+x^3+y^5", k, LOCAL).unwrap();
    assert_eq!(f.leading_term().unwrap().0, Monomial::var_pow(2, 2));
    let g = f.with_order(GLOBAL);
    assert_eq!(g.leading_term().unwrap().0, Monomial::var_pow(1, 5));
    let h = parse("x + y", k, LOCAL).unwrap();
    assert_eq!(h.leading_term().unwrap().0, Monomial::var(0));
    assert_eq!(Polynomial::zero(k, LOCAL).leading_term(), Err(Error::ZeroPolynomial));
}

#[test]
fn jacobian_in_char_p() {
    let k = fp(2);
    let f = parse("z^2+x^3+y^5", k, LOCAL).unwrap();
    let j = jacobian(&f);
    assert_eq!(j.component(0), &parse("x^2", k, LOCAL).unwrap());
    assert_eq!(j.component(1), &parse("y^4", k, LOCAL).unwrap());
    assert!(j.component(2).is_zero());

    for n in 2..6u32 {
        let src = format!("z^2 + x^2*y + x*y^{n}");
        let f = parse(&src, k, LOCAL).unwrap();
        let j = jacobian(&f);
        assert_eq!(j.component(0), &parse(&format!("y^{n}"), k, LOCAL).unwrap());
        let fy = format!("x^2 + {n}*x*y^{}", n - 1);
        assert_eq!(j.component(1), &parse(&fy, k, LOCAL).unwrap());
        assert!(j.component(2).is_zero());
    }

    let c = parse("1", k, LOCAL).unwrap();
    assert!(jacobian(&c).is_zero());
}

#[test]
fn powers() {
    let k = fp(2);
    let s = parse("x + y", k, GLOBAL).unwrap();
    assert_eq!(power_poly(&s, 2), parse("x^2 + y^2", k, GLOBAL).unwrap());
    assert_eq!(power_poly(&s, 1), s);
    for p in [3u64, 5, 7] {
        let k = fp(p);
        for n in 1..5 {
            let f = parse(&format!("x*y + z^{}", n + 1), k, LOCAL).unwrap();
            let g = power_poly(&f, (p - 1) as u32);
            let witness = Monomial::from_exponents(&[(p - 1) as u16, (p - 1) as u16, 0]);
            assert!(g.coeff(&witness).is_one());
        }
    }
}

#[test]
fn printing_round_trips_with_signs_and_extension_coefficients() {
    let k = f9();
    let f = parse("a^5*y + x - a^6*z + 2*x^2", k, LOCAL).unwrap();
    let printed = f.to_string();
    assert_eq!(parse(&printed, k, LOCAL).unwrap(), f);
    let k7 = fp(7);
    let g = parse("x - 3*y^2 + 6*z", k7, GLOBAL).unwrap();
    assert_eq!(g.to_string(), "-3*y^2+x-z");
    assert_eq!(parse(&g.to_string(), k7, GLOBAL).unwrap(), g);
}

fn arb_poly(p: u64) -> impl Strategy<Value = Polynomial> {
    let k = fp(p);
    proptest::collection::vec((proptest::array::uniform3(0u16..4), 0..p), 0..6).prop_map(move |ts| {
        Polynomial::from_terms(
            k,
            LOCAL,
            ts.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), k.from_u64(c))),
        )
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(5), b in arb_poly(5), c in arb_poly(5)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn jacobian_leibniz(a in arb_poly(3), b in arb_poly(3)) {
        let lhs = jacobian(&a.mul(&b));
        let rhs = jacobian(&b).scale(&a).add(&jacobian(&a).scale(&b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn print_parse_identity(a in arb_poly(7)) {
        prop_assert_eq!(parse(&a.to_string(), fp(7), LOCAL).unwrap(), a);
    }

    #[test]
    fn terms_sorted_descending(a in arb_poly(2)) {
        for w in a.terms().windows(2) {
            prop_assert_eq!(LOCAL.cmp(&w[0].0, &w[1].0), std::cmp::Ordering::Greater);
        }
    }
}
