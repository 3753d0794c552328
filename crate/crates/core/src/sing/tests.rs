use super::*;
use crate::field::{make_field, FieldSpec};
use crate::poly::parse;

fn fp(p: u64) -> FieldSpec {
    make_field(p, None).unwrap()
}

fn poly(src: &str, k: FieldSpec) -> Polynomial {
    parse(src, k, LOCAL).unwrap()
}

fn der(a: &str, b: &str, c: &str, k: FieldSpec) -> Derivation {
    Derivation::parse(a, b, c, k).unwrap()
}

fn opts() -> StdOptions {
    StdOptions::default()
}

fn assert_tangent(f: &Polynomial, gens: &[Derivation]) {
    let fb = f.with_order(MonomialOrder::GlobalDegRevLex);
    for d in gens {
        let r = reduce_mod(&VectorPoly::new(vec![d.apply(f)]), &fb);
        assert!(r.is_zero(), "{d} does not preserve ({f})");
    }
}

#[test]
fn fedder_examples() {
    let k = fp(2);
    assert!(!is_f_pure(&poly("z^2+x^3+y^5", k)).unwrap());
    assert!(is_f_pure(&poly("z^2+x^3+y^5+x*y*z", k)).unwrap());
    for p in [2, 3, 5, 7] {
        for n in 1..=6 {
            assert!(is_f_pure(&poly(&format!("x*y + z^{}", n + 1), fp(p))).unwrap());
        }
    }
    assert_eq!(is_f_pure(&poly("1 + x", k)), Err(Error::NotAtOrigin));
}

#[test]
fn fedder_truncated_power_matches_full_expansion() {
    for (src, p) in [("z^2+x^3+y^5+y^3*z", 2), ("z^2+x^3+x*y^3+x^2*y^2", 3), ("z^2+x^3+y^5+x*y^4", 5), ("z^2+x^3+y^5", 5)] {
        let k = fp(p);
        let f = poly(src, k);
        let full = crate::poly::power_poly(&f, (p - 1) as u32);
        let witness = full.terms().iter().any(|(m, _)| (0..3).all(|i| (m.exponent(i) as u64) < p));
        assert_eq!(is_f_pure(&f).unwrap(), witness, "{src}");
    }
}

#[test]
fn session_tangent_module() {
    let k = fp(2);
    let f = poly("z^2+x^3+y^5", k);
    let gens = tangent_module(&f, opts()).unwrap();
    assert_eq!(gens.len(), 2);
    assert_eq!(gens[0].to_string(), "d/dz");
    assert_eq!(gens[1].to_string(), "y^4*d/dx + x^2*d/dy");
    assert_tangent(&f, &gens);
    assert!(is_tangent_free(&f, opts()).unwrap());
}

#[test]
fn lipman_node_in_char_two() {
    let k = fp(2);
    let f = poly("x*y + z^2", k);
    let gens = tangent_module(&f, opts()).unwrap();
    assert_eq!(gens.len(), 2);
    let expected = [der("x", "-y", "0", k), der("0", "0", "1", k)];
    assert!(derivations_equal(&f, &gens, &expected, opts()).unwrap());
}

#[test]
fn d6_coindex_two_basis() {
    let k = fp(2);
    let n = 3;
    let f = poly(&format!("z^2+x^2*y+x*y^{n}+x*y*z"), k);
    let gens = tangent_module(&f, opts()).unwrap();
    assert_eq!(gens.len(), 2);
    let expected = [
        der("0", "y", &format!("x+z+{n}*y^{}", n - 1), k),
        der("x", "0", &format!("z+y^{}", n - 1), k),
    ];
    assert_tangent(&f, &expected);
    assert!(derivations_equal(&f, &gens, &expected, opts()).unwrap());
}

#[test]
fn e8_char_two_generator_counts() {
    let k = fp(2);
    let tails = ["", "+x*y^3*z", "+x*y^2*z", "+y^3*z", "+x*y*z"];
    let counts: Vec<usize> =
        tails.iter().map(|t| tangent_module(&poly(&format!("z^2+x^3+y^5{t}"), k), opts()).unwrap().len()).collect();
    assert_eq!(counts, vec![2, 2, 2, 4, 4]);
}

#[test]
fn cone_over_f9() {
    let k = make_field(3, Some("a^2 - a - 1")).unwrap();
    let f = parse("y^2*z - x*(x - a*z)*(x + z)", k, LOCAL).unwrap();
    let gens = tangent_module(&f, opts()).unwrap();
    assert_eq!(gens.len(), 2);
    let expected = [der("x", "y", "z", k), der("a^5*y", "x + a^6*z", "0", k)];
    assert_tangent(&f, &expected);
    assert!(derivations_equal(&f, &gens, &expected, opts()).unwrap());
}

#[test]
fn verdicts() {
    let k = fp(2);
    assert_eq!(lz_verdict(&poly("x", k), opts()).unwrap(), LzVerdict::Smooth);
    assert_eq!(lz_verdict(&poly("x*y + z^4", k), opts()).unwrap(), LzVerdict::ViolatesLZ);
    assert_eq!(lz_verdict(&poly("x*y + z^3", k), opts()).unwrap(), LzVerdict::SatisfiesLZ);
    assert_eq!(lz_verdict(&poly("x*y + 1", k), opts()), Err(Error::NotAtOrigin));
}

#[test]
fn isolatedness() {
    assert!(check_isolated(&poly("z^2+x^3+y^5", fp(2))));
    for p in [2, 3, 5] {
        assert!(!check_isolated(&poly("x^2", fp(p))));
    }
    assert!(check_isolated(&poly("x*y + z^2", fp(3))));
    assert!(check_isolated(&poly("x", fp(3))));
}

#[test]
fn smooth_germ_has_free_tangent_module() {
    let r = analyze(&poly("x + y^2", fp(3)), opts()).unwrap();
    assert!(!r.singular_at_origin);
    assert_eq!(r.min_gen_count, 2);
    assert_eq!(r.verdict(), LzVerdict::Smooth);
}

#[test]
fn count_invariant_under_unit_and_permutation() {
    let k = fp(3);
    for src in ["z^2+x^3+y^4", "z^2+x^3+x*y^3+x^2*y^2", "z^2+x^2*y+y^4"] {
        let f = poly(src, k);
        let base = tangent_module(&f, opts()).unwrap().len();
        let unit = poly("1 + x + 2*y*z", k);
        assert_eq!(tangent_module(&f.mul(&unit), opts()).unwrap().len(), base, "{src}");
        let perm = f.substitute(&[(0, poly("y", k)), (1, poly("z", k)), (2, poly("x", k))]);
        assert_eq!(tangent_module(&perm, opts()).unwrap().len(), base, "{src}");
        assert_eq!(is_f_pure(&perm).unwrap(), is_f_pure(&f).unwrap());
    }
}

#[test]
fn derivation_rendering() {
    let k = fp(5);
    assert_eq!(der("x", "-y", "0", k).to_string(), "x*d/dx - y*d/dy");
    assert_eq!(der("0", "0", "-1", k).to_string(), "-d/dz");
    assert_eq!(der("0", "x+y^2", "0", k).to_string(), "(x+y^2)*d/dy");
}

#[test]
fn report_json_shape() {
    let r = analyze(&poly("z^2+x^3+y^5", fp(2)), opts()).unwrap();
    let j = r.to_json();
    assert_eq!(j["characteristic"], 2);
    assert!(j["extension"].is_null());
    assert_eq!(j["f_pure"], false);
    assert_eq!(j["tangent"]["free"], true);
    assert_eq!(j["tangent"]["generators"][0], serde_json::json!(["0", "0", "1"]));
}

#[test]
fn batch_keeps_order() {
    let k = fp(2);
    let fs: Vec<Polynomial> = ["x*y+z^2", "x*y+z^3", "1+x"].iter().map(|s| poly(s, k)).collect();
    let out = analyze_batch(&fs, opts());
    assert!(out[0].as_ref().unwrap().tangent_free);
    assert!(!out[1].as_ref().unwrap().tangent_free);
    assert!(out[2].is_err());
}
