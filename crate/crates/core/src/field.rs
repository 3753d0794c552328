//! Prime fields `F_p` and small extensions `F_p[a]/(mu(a))`.
//!
//! Elements are stored as up to four residues (the coefficients of
//! `1, a, a^2, a^3`), so both [`FieldSpec`] and [`FieldElement`] are `Copy`
//! and cheap to pass around inside polynomial kernels.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_EXT_DEGREE: usize = 4;

/// Largest supported characteristic (exclusive).
pub const MAX_CHAR: u64 = 1 << 31;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldSpec {
    p: u32,
    degree: u8,
    /// Low coefficients `c_0..c_{m-1}` of the monic minimal polynomial.
    modulus: [u32; MAX_EXT_DEGREE],
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct FieldElement([u32; MAX_EXT_DEGREE]);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement([0; MAX_EXT_DEGREE]);
    pub const ONE: FieldElement = FieldElement([1, 0, 0, 0]);

    pub fn is_zero(&self) -> bool {
        self.0 == [0; MAX_EXT_DEGREE]
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    /// Residues of `1, a, a^2, a^3`; entries beyond the field degree are zero.
    pub fn coeffs(&self) -> [u32; MAX_EXT_DEGREE] {
        self.0
    }

    /// True if the element lies in the prime field.
    pub fn is_prime_field(&self) -> bool {
        self.0[1..].iter().all(|&c| c == 0)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if p >= MAX_CHAR {
            return Err(Error::InvalidField(format!("characteristic {p} exceeds 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec { p: p as u32, degree: 1, modulus: [0; MAX_EXT_DEGREE] })
    }

    /// Extension by a monic polynomial given by its coefficients, lowest first
    /// (`coeffs.len() == m + 1`, last entry 1 after reduction mod p).
    pub fn extension(p: u64, coeffs: &[u64]) -> Result<FieldSpec> {
        let base = FieldSpec::prime(p)?;
        let mut c: Vec<u64> = coeffs.iter().map(|&v| v % p).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        let m = c.len().saturating_sub(1);
        if m < 2 || m > MAX_EXT_DEGREE {
            return Err(Error::InvalidField(format!(
                "minimal polynomial must have degree 2..={MAX_EXT_DEGREE}, got {m}"
            )));
        }
        if c[m] != 1 {
            return Err(Error::InvalidField("minimal polynomial must be monic".into()));
        }
        let mut modulus = [0u32; MAX_EXT_DEGREE];
        for (i, v) in c[..m].iter().enumerate() {
            modulus[i] = *v as u32;
        }
        let spec = FieldSpec { p: base.p, degree: m as u8, modulus };
        if !upoly::is_irreducible(&c, p) {
            return Err(Error::Reducible(upoly::format(&c, p)));
        }
        Ok(spec)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    pub fn is_prime_field(&self) -> bool {
        self.degree == 1
    }

    /// Number of elements `p^m`.
    pub fn size(&self) -> u128 {
        (self.p as u128).pow(self.degree as u32)
    }

    /// Minimal polynomial coefficients, lowest first, including the leading 1.
    pub fn min_poly(&self) -> Option<Vec<u32>> {
        if self.degree == 1 {
            return None;
        }
        let mut v = self.modulus[..self.degree()].to_vec();
        v.push(1);
        Some(v)
    }

    /// String form of the minimal polynomial in the generator `a`.
    pub fn min_poly_string(&self) -> Option<String> {
        self.min_poly().map(|c| {
            let c: Vec<u64> = c.into_iter().map(u64::from).collect();
            upoly::format(&c, self.p as u64)
        })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// The generator `a` of an extension field.
    pub fn generator(&self) -> Option<FieldElement> {
        if self.degree == 1 {
            None
        } else {
            let mut e = [0; MAX_EXT_DEGREE];
            e[1] = 1;
            Some(FieldElement(e))
        }
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        let r = n.rem_euclid(self.p as i64) as u32;
        FieldElement([r, 0, 0, 0])
    }

    pub fn from_u64(&self, n: u64) -> FieldElement {
        FieldElement([(n % self.p as u64) as u32, 0, 0, 0])
    }

    /// Build an element from residues of `1, a, a^2, ...`; powers at or
    /// above the field degree are reduced by the minimal polynomial.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> FieldElement {
        match self.generator() {
            None => coeffs.first().map_or(FieldElement::ZERO, |&c| self.from_u64(c)),
            Some(a) => coeffs
                .iter()
                .rev()
                .fold(FieldElement::ZERO, |acc, &c| self.add(self.mul(acc, a), self.from_u64(c))),
        }
    }

    #[inline]
    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let p = self.p as u64;
        let mut r = [0u32; MAX_EXT_DEGREE];
        for i in 0..self.degree() {
            r[i] = ((x.0[i] as u64 + y.0[i] as u64) % p) as u32;
        }
        FieldElement(r)
    }

    #[inline]
    pub fn neg(&self, x: FieldElement) -> FieldElement {
        let mut r = [0u32; MAX_EXT_DEGREE];
        for i in 0..self.degree() {
            r[i] = if x.0[i] == 0 { 0 } else { self.p - x.0[i] };
        }
        FieldElement(r)
    }

    #[inline]
    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let p = self.p as u64;
        if self.degree == 1 {
            return FieldElement([((x.0[0] as u64 * y.0[0] as u64) % p) as u32, 0, 0, 0]);
        }
        let m = self.degree();
        let mut prod = [0u64; 2 * MAX_EXT_DEGREE - 1];
        for i in 0..m {
            if x.0[i] == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] = (prod[i + j] + x.0[i] as u64 * y.0[j] as u64) % p;
            }
        }
        // a^m = -(c_0 + c_1 a + ... + c_{m-1} a^{m-1})
        for k in (m..2 * m - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..m {
                let sub = c * self.modulus[i] as u64 % p;
                prod[k - m + i] = (prod[k - m + i] + p - sub) % p;
            }
        }
        let mut r = [0u32; MAX_EXT_DEGREE];
        for i in 0..m {
            r[i] = prod[i] as u32;
        }
        FieldElement(r)
    }

    fn pow_u128(&self, x: FieldElement, mut k: u128) -> FieldElement {
        let mut base = x;
        let mut acc = FieldElement::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow_u128(x, self.size() - 2))
    }

    /// `x^k`; negative exponents invert first.
    pub fn power(&self, x: FieldElement, k: i64) -> Result<FieldElement> {
        if k >= 0 {
            Ok(self.pow_u128(x, k as u128))
        } else {
            let inv = self.inv(x)?;
            Ok(self.pow_u128(inv, k.unsigned_abs() as u128))
        }
    }

    pub fn frobenius(&self, x: FieldElement) -> FieldElement {
        self.pow_u128(x, self.p as u128)
    }

    pub fn div(&self, x: FieldElement, y: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// Residue as a signed integer in `(-p/2, p/2]`, for prime-field elements.
    pub fn signed(&self, x: FieldElement) -> i64 {
        let r = x.0[0] as i64;
        if r > self.p as i64 / 2 {
            r - self.p as i64
        } else {
            r
        }
    }

    /// Human-readable element: an integer in the prime field, otherwise a
    /// polynomial in `a`.
    pub fn format(&self, x: FieldElement) -> String {
        if x.is_prime_field() {
            return self.signed(x).to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for i in (0..self.degree()).rev() {
            let c = x.0[i];
            if c == 0 {
                continue;
            }
            let cs = self.signed(FieldElement([c, 0, 0, 0]));
            let (neg, mag) = (cs < 0, cs.unsigned_abs());
            let body = match (i, mag) {
                (0, m) => m.to_string(),
                (1, 1) => "a".to_string(),
                (1, m) => format!("{m}*a"),
                (e, 1) => format!("a^{e}"),
                (e, m) => format!("{m}*a^{e}"),
            };
            if parts.is_empty() {
                parts.push(if neg { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{} {body}", if neg { "-" } else { "+" }));
            }
        }
        parts.join(" ")
    }

    /// Iterate over all field elements (intended for small fields).
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let total = self.size() as u64;
        let p = self.p as u64;
        (0..total).map(move |mut idx| {
            let mut e = [0u32; MAX_EXT_DEGREE];
            for slot in e.iter_mut().take(self.degree()) {
                *slot = (idx % p) as u32;
                idx /= p;
            }
            FieldElement(e)
        })
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.min_poly_string() {
            None => write!(f, "F_{}", self.p),
            Some(mu) => write!(f, "F_{}[a]/({mu})", self.p),
        }
    }
}

/// Build a field from a characteristic and an optional minimal polynomial in
/// the generator `a`, written in the polynomial grammar.
pub fn make_field(p: u64, min_poly: Option<&str>) -> Result<FieldSpec> {
    match min_poly {
        None => FieldSpec::prime(p),
        Some(src) => {
            let base = FieldSpec::prime(p)?;
            let coeffs = crate::poly::parse::parse_univariate_in_generator(src, base)?;
            FieldSpec::extension(p, &coeffs)
        }
    }
}

/// Dense univariate polynomials over `F_p`, only what the irreducibility
/// test needs.
pub(crate) mod upoly {
    fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    fn inv(a: u64, p: u64) -> u64 {
        let mut r = 1u64;
        let mut b = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let lc_inv = inv(m[dm], p);
        while r.len() > dm {
            let top = r.len() - 1;
            let c = r[top] * lc_inv % p;
            for i in 0..=dm {
                let idx = top - dm + i;
                r[idx] = (r[idx] + p - c * m[i] % p) % p;
            }
            trim(&mut r);
        }
        r
    }

    fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        rem(&prod, m, p)
    }

    /// `x^(p^k) mod m`.
    fn frob_power_of_x(k: u32, m: &[u64], p: u64) -> Vec<u64> {
        let mut cur = rem(&[0, 1], m, p);
        for _ in 0..k {
            let mut acc = vec![1u64];
            let mut base = cur.clone();
            let mut e = p;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulmod(&acc, &base, m, p);
                }
                base = mulmod(&base, &base, m, p);
                e >>= 1;
            }
            cur = acc;
        }
        cur
    }

    fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    fn sub_x(a: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        if r.len() < 2 {
            r.resize(2, 0);
        }
        r[1] = (r[1] + p - 1) % p;
        trim(&mut r);
        r
    }

    /// Rabin's test: `x^(p^m) = x mod mu` and `gcd(x^(p^(m/q)) - x, mu) = 1`
    /// for every prime `q | m`.
    pub fn is_irreducible(mu: &[u64], p: u64) -> bool {
        let m = (mu.len() - 1) as u32;
        let full = frob_power_of_x(m, mu, p);
        if !sub_x(&full, p).is_empty() {
            return false;
        }
        for q in [2u32, 3] {
            if m % q == 0 {
                let h = sub_x(&frob_power_of_x(m / q, mu, p), p);
                if gcd(mu, &h, p).len() != 1 {
                    return false;
                }
            }
        }
        true
    }

    pub fn format(c: &[u64], p: u64) -> String {
        let mut out = String::new();
        for i in (0..c.len()).rev() {
            let v = c[i] % p;
            if v == 0 {
                continue;
            }
            let (neg, mag) = if v > p / 2 { (true, p - v) } else { (false, v) };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body = match (i, mag) {
                (0, m) => m.to_string(),
                (1, 1) => "a".into(),
                (1, m) => format!("{m}*a"),
                (e, 1) => format!("a^{e}"),
                (e, m) => format!("{m}*a^{e}"),
            };
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> FieldSpec {
        make_field(3, Some("a^2 - a - 1")).unwrap()
    }

    #[test]
    fn prime_field_basics() {
        let f2 = make_field(2, None).unwrap();
        assert_eq!(f2.size(), 2);
        assert_eq!(f2.frobenius(f2.one()), f2.one());
        assert_eq!(make_field(4, None), Err(Error::NotPrime(4)));
        assert!(matches!(make_field(1, None), Err(Error::NotPrime(1))));
    }

    #[test]
    fn reducible_min_poly_rejected() {
        assert!(matches!(make_field(3, Some("a^2 - 1")), Err(Error::Reducible(_))));
        // a^2 + 1 has no roots mod 3
        assert!(make_field(3, Some("a^2 + 1")).is_ok());
        // (a^2+1)^2 over F_3 has no roots but is reducible
        assert!(matches!(make_field(3, Some("a^4 + 2*a^2 + 1")), Err(Error::Reducible(_))));
    }

    #[test]
    fn f9_powers_of_generator() {
        let k = f9();
        let a = k.generator().unwrap();
        assert_eq!(k.power(a, 2).unwrap(), k.add(a, k.one()));
        assert_eq!(k.power(a, 4).unwrap(), k.from_int(2));
        assert_eq!(k.power(a, 8).unwrap(), k.one());
        // order exactly 8
        for e in 1..8 {
            assert_ne!(k.power(a, e).unwrap(), k.one());
        }
        assert_eq!(k.frobenius(a), k.add(k.mul(k.from_int(2), a), k.one()));
    }

    #[test]
    fn zero_inverse_errors() {
        let k = f9();
        assert_eq!(k.power(k.zero(), -1), Err(Error::ZeroInverse));
        assert_eq!(k.power(k.zero(), 0).unwrap(), k.one());
    }

    #[test]
    fn unit_group_and_inverses() {
        for k in [f9(), make_field(5, None).unwrap(), make_field(2, Some("a^3 + a + 1")).unwrap()] {
            let q = k.size() as i64;
            for x in k.elements().filter(|x| !x.is_zero()) {
                assert_eq!(k.mul(x, k.inv(x).unwrap()), k.one());
                assert_eq!(k.power(x, q - 1).unwrap(), k.one());
            }
        }
    }

    #[test]
    fn prime_field_matches_integer_arithmetic() {
        for p in [2u64, 3, 5, 7] {
            let k = make_field(p, None).unwrap();
            for a in 0..p {
                for b in 0..p {
                    let (x, y) = (k.from_u64(a), k.from_u64(b));
                    assert_eq!(k.add(x, y), k.from_u64(a + b));
                    assert_eq!(k.mul(x, y), k.from_u64(a * b));
                    assert_eq!(k.sub(x, y), k.from_int(a as i64 - b as i64));
                    assert_eq!(k.frobenius(x), x);
                }
            }
        }
    }

    #[test]
    fn freshmans_dream_exhaustive_small_fields() {
        for k in [f9(), make_field(2, Some("a^4 + a + 1")).unwrap()] {
            for x in k.elements() {
                for y in k.elements() {
                    assert_eq!(k.frobenius(k.add(x, y)), k.add(k.frobenius(x), k.frobenius(y)));
                }
            }
        }
    }

    #[test]
    fn large_prime_accepted() {
        let k = make_field(2_147_483_647, None).unwrap();
        let x = k.from_u64(123_456_789);
        assert_eq!(k.mul(x, k.inv(x).unwrap()), k.one());
        assert!(make_field(1 << 31, None).is_err());
    }

    #[test]
    fn element_formatting() {
        let k = f9();
        let a = k.generator().unwrap();
        assert_eq!(k.format(a), "a");
        assert_eq!(k.format(k.frobenius(a)), "-a + 1");
        assert_eq!(k.format(k.from_int(2)), "-1");
        assert_eq!(k.min_poly_string().unwrap(), "a^2 - a - 1");
    }
}
