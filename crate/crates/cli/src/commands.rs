use serde_json::json;

use lzsing_core::catalog::{self, AdeType, DualGraph};
use lzsing_core::field::is_prime;
use lzsing_core::forms::{pair as pair_form, parse_form, parse_ratfunc, pole_order, pullback as pull, RationalMap};
use lzsing_core::poly::var_index;
use lzsing_core::sing::{derivations_equal, tangent_module};
use lzsing_core::{analyze, make_field, parse, Derivation, Error, GermReport, MonomialOrder, Result, StdOptions};

use crate::Outcome;

const MAX_TABLE_N: u32 = 12;

fn mark(b: bool) -> &'static str {
    if b {
        "✓"
    } else {
        "---"
    }
}

pub fn render_check(r: &GermReport) -> String {
    let mut out = String::new();
    let over = match r.f.field().min_poly_string() {
        Some(mu) => format!(" over F_{}[a]/({mu})", r.p),
        None => String::new(),
    };
    out.push_str(&format!("f = {} in characteristic p = {}{over}\n", r.f, r.p));
    if !r.singular_at_origin {
        out.push_str("X is smooth at the origin.\n");
    }
    if !r.isolated {
        out.push_str("The singularity at the origin is not isolated.\n");
    }
    let fp = if r.f_pure { "is F-pure." } else { "is not F-pure." };
    out.push_str(&format!("X = {{ f = 0 }} {fp}\n"));
    out.push_str(if r.tangent_free { "T_X is free.\n" } else { "T_X is not free.\n" });
    out.push_str("Minimal generating set for T_X:\n");
    for d in &r.tangent_generators {
        out.push_str(&format!("{d}\n"));
    }
    out
}

pub fn check(f: &str, p: u64, ext: Option<&str>, as_json: bool, opts: StdOptions) -> Result<Outcome> {
    let field = make_field(p, ext)?;
    let f = parse(f, field, MonomialOrder::LocalNegDegRevLex)?;
    let report = analyze(&f, opts)?;
    if as_json {
        println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("serializable"));
    } else {
        print!("{}", render_check(&report));
    }
    Ok(Outcome::Ok)
}

pub fn table(p: u32, max_n: u32, as_json: bool, opts: StdOptions) -> Result<Outcome> {
    if max_n > MAX_TABLE_N {
        return Err(Error::OutOfRange(format!("--max-n is at most {MAX_TABLE_N}")));
    }
    let ds = catalog::entries(p, max_n)?;
    let computed = catalog::compute_all(&ds, opts)?;
    let mut rows = Vec::new();
    let mut mismatches = 0;
    for (d, c) in ds.iter().zip(&computed) {
        let mut diff = Vec::new();
        if c.f_pure != d.literature.f_pure {
            diff.push("F-pure");
        }
        if c.lz_holds() != d.literature.lz_holds {
            diff.push("LZ");
        }
        if !diff.is_empty() {
            mismatches += 1;
        }
        rows.push((d, c, diff));
    }
    if as_json {
        let rows: Vec<_> = rows
            .iter()
            .map(|(d, c, diff)| {
                json!({
                    "name": d.name(),
                    "equation": d.equation_string(),
                    "f_pure": c.f_pure,
                    "lz_holds": c.lz_holds(),
                    "min_generators": c.min_gens,
                    "almost_equivariant": d.literature.almost_equivariant,
                    "diff": diff,
                })
            })
            .collect();
        let doc = json!({ "characteristic": p, "max_n": max_n, "rows": rows, "mismatches": mismatches });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        let eq_width = rows.iter().map(|(d, _, _)| d.equation_string().len()).max().unwrap_or(8).max(8);
        println!("characteristic p = {p}, family parameter n <= {max_n}");
        println!("{:<8}  {:<eq_width$}  {:<6}  {:<8}  {:<13}  diff", "name", "equation", "F-pure", "LZ holds", "almost equiv.");
        for (d, c, diff) in &rows {
            println!(
                "{:<8}  {:<eq_width$}  {:<6}  {:<8}  {:<13}  {}",
                d.name(),
                d.equation_string(),
                mark(c.f_pure),
                mark(c.lz_holds()),
                mark(d.literature.almost_equivariant),
                diff.join(",")
            );
        }
        println!("mismatches: {mismatches}");
    }
    Ok(if mismatches == 0 { Outcome::Ok } else { Outcome::Mismatch })
}

pub fn tame(ade_type: &str, n: u32, p: u32) -> Result<Outcome> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let t: AdeType = ade_type.parse()?;
    let g = DualGraph::new(t, n)?;
    let verdict = if g.is_tame(p) { "tame" } else { "not tame" };
    println!("{t}_{n}: |det| = {}, {verdict} in characteristic p = {p}", g.tame_determinant());
    Ok(Outcome::Ok)
}

pub fn pullback(n: u32, p: u32) -> Result<Outcome> {
    if p != 2 {
        return Err(Error::WrongCharacteristic { p, what: "the pullback computation is set in characteristic 2".into() });
    }
    if n < 2 {
        return Err(Error::OutOfRange("n must be at least 2".into()));
    }
    let k = make_field(2, None)?;
    let sigma = parse_form(&format!("v^-{n}*d(v)"), k)?;
    let v = var_index("v").expect("variable v");
    let phi = RationalMap::new(vec![(v, parse_ratfunc("w^2/(u*(u+1))", k)?)]);
    let pulled = pull(&sigma, &phi)?;
    let closed = format!("(u*(u+1))^{}*d(u)/w^{}", n - 2, 2 * n - 2);
    let expected = parse_form(&closed, k)?;
    let order = pole_order(&pulled, var_index("w").expect("variable w"));
    println!("sigma = {sigma}, v = w^2/(u*(u+1)), p = 2, n = {n}");
    println!("pullback: {pulled}");
    println!("expected: {closed}");
    println!("pole order along w: {order} (expected {})", 2 * n - 2);
    let ok = pulled == expected && order == 2 * n - 2;
    println!("{}", if ok { "MATCH" } else { "MISMATCH" });
    Ok(if ok { Outcome::Ok } else { Outcome::Mismatch })
}

pub fn pair(n: u32, opts: StdOptions) -> Result<Outcome> {
    if n < 2 {
        return Err(Error::OutOfRange("n must be at least 2".into()));
    }
    let d = catalog::lookup(AdeType::D, 2 * n, Some(n - 1), 2)?;
    let f = catalog::equation(&d)?;
    let k = f.field();
    let v1 = Derivation::parse("0", "y", &format!("x+z+{n}*y^{}", n - 1), k)?;
    let v2 = Derivation::parse("x", "0", &format!("z+y^{}", n - 1), k)?;
    let alphas = [("alpha1", "d(y)/y"), ("alpha2", "d(x)/x")];
    println!("{} with n = {n}: f = {f}, p = 2", d.name());
    println!("v1 = {v1}");
    println!("v2 = {v2}");
    println!("alpha1 = dy/y, alpha2 = dx/x");
    println!("        v1  v2");
    let mut identity = true;
    for (i, (name, src)) in alphas.iter().enumerate() {
        let a = parse_form(src, k)?;
        let vals = [pair_form(&a, &v1, &f)?, pair_form(&a, &v2, &f)?];
        for (j, val) in vals.iter().enumerate() {
            let want = if i == j { "1" } else { "0" };
            identity &= val.to_string() == want;
        }
        println!("{name}  {:<3} {}", vals[0].to_string(), vals[1]);
    }
    let basis = derivations_equal(&f, &[v1, v2], &tangent_module(&f, opts)?, opts)?;
    println!("identity: {}", if identity { "yes" } else { "no" });
    println!("v1, v2 generate T_X: {}", if basis { "yes" } else { "no" });
    Ok(if identity && basis { Outcome::Ok } else { Outcome::Mismatch })
}

pub fn catalog(ps: &[u32], max_n: u32, opts: StdOptions) -> Result<Outcome> {
    if max_n > MAX_TABLE_N {
        return Err(Error::OutOfRange(format!("--max-n is at most {MAX_TABLE_N}")));
    }
    let doc = catalog::export_json(ps, max_n, opts)?;
    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    Ok(Outcome::Ok)
}
