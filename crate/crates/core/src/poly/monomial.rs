use std::cmp::Ordering;
use std::fmt;

/// Ring variables in order of precedence: x > y > z > u > v > w.
pub const NVARS: usize = 6;
pub const VAR_NAMES: [&str; NVARS] = ["x", "y", "z", "u", "v", "w"];

pub fn var_index(name: &str) -> Option<usize> {
    VAR_NAMES.iter().position(|&v| v == name)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Monomial(pub [u16; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(i: usize) -> Monomial {
        Self::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, e: u16) -> Monomial {
        let mut m = [0; NVARS];
        m[i] = e;
        Monomial(m)
    }

    pub fn from_exponents(exps: &[u16]) -> Monomial {
        let mut m = [0; NVARS];
        m[..exps.len()].copy_from_slice(exps);
        Monomial(m)
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; NVARS]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0.iter()) {
            *a = a.checked_add(*b).expect("monomial exponent overflow");
        }
        Monomial(m)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut m = [0; NVARS];
        for i in 0..NVARS {
            m[i] = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Monomial(m))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0.iter()) {
            *a = (*a).max(*b);
        }
        Monomial(m)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// If this is a pure power of a single variable, return that variable.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", VAR_NAMES[i])?;
            } else {
                write!(f, "{}^{}", VAR_NAMES[i], e)?;
            }
        }
        Ok(())
    }
}

/// Monomial orders. `Greater` means "larger in the order", so the leading
/// term of a polynomial is its maximum.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    /// Degree first (higher wins), ties by reverse lexicographic.
    #[default]
    GlobalDegRevLex,
    /// Lower total degree wins, ties by degrevlex. `1` is the largest monomial.
    LocalNegDegRevLex,
}

/// Tie-break shared by both orders on monomials of equal degree: the one
/// with the smaller exponent in the last differing variable is larger.
fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    for i in (0..NVARS).rev() {
        if a.0[i] != b.0[i] {
            return b.0[i].cmp(&a.0[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (da, db) = (a.degree(), b.degree());
        match self {
            MonomialOrder::GlobalDegRevLex => da.cmp(&db).then_with(|| revlex(a, b)),
            MonomialOrder::LocalNegDegRevLex => db.cmp(&da).then_with(|| revlex(a, b)),
        }
    }

    pub fn is_global(&self) -> bool {
        matches!(self, MonomialOrder::GlobalDegRevLex)
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::GlobalDegRevLex => "dp",
            MonomialOrder::LocalNegDegRevLex => "ds",
        }
    }
}
