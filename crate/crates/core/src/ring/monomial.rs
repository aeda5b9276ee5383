use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) type Exponents = SmallVec<[u32; 6]>;

/// A power product `x1^e1 * ... * xn^en` with its total degree cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn new(exponents: &[u32]) -> Self {
        let degree = exponents.iter().sum();
        Monomial {
            exps: Exponents::from_slice(exponents),
            degree,
        }
    }

    pub(crate) fn from_exps(exps: Exponents) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![0; nvars],
            degree: 0,
        }
    }

    /// The variable `x_{index+1}` (zero-based index).
    pub fn var(nvars: usize, index: usize) -> Self {
        Self::var_pow(nvars, index, 1)
    }

    pub fn var_pow(nvars: usize, index: usize, exp: u32) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = exp;
        m.degree = exp;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// `Some(i)` when the monomial is a pure power of `x_{i+1}`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps: Exponents = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a - b)
            .collect();
        Some(Monomial {
            exps,
            degree: self.degree - other.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_exps(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// `self : other`, the monomial `lcm(self, other) / other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial::from_exps(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    pub(crate) fn with_exponent(&self, index: usize, exp: u32) -> Monomial {
        let mut exps = self.exps.clone();
        exps[index] = exp;
        Monomial::from_exps(exps)
    }

    /// Prepends `extra` leading variables with the given exponents.
    pub(crate) fn prepend(&self, leading: &[u32]) -> Monomial {
        let mut exps = Exponents::from_slice(leading);
        exps.extend_from_slice(&self.exps);
        Monomial::from_exps(exps)
    }

    pub(crate) fn drop_leading(&self, count: usize) -> Monomial {
        Monomial::from_exps(Exponents::from_slice(&self.exps[count..]))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Monomial orders with `x1 > x2 > ... > xn`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    DegRevLex,
    /// Block order eliminating the first `k` variables: compares the total
    /// degree in those variables first, then breaks ties by degrevlex.
    Elimination(usize),
}

impl MonomialOrder {
    /// Compares two monomials with the same number of variables.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::Elimination(k) => {
                let wa: u32 = a.exps[..*k].iter().sum();
                let wb: u32 = b.exps[..*k].iter().sum();
                wa.cmp(&wb).then_with(|| degrevlex(a, b))
            }
        }
    }
}

fn degrevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree.cmp(&b.degree) {
        Ordering::Equal => {
            for (x, y) in a.exps.iter().rev().zip(b.exps.iter().rev()) {
                if x != y {
                    // smaller exponent in the last differing variable wins
                    return y.cmp(x);
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

/// Compares `m1` and `m2` under `order`, rejecting monomials from different rings.
pub fn compare(m1: &Monomial, m2: &Monomial, order: MonomialOrder) -> Result<Ordering> {
    if m1.nvars() != m2.nvars() {
        return Err(Error::DimensionMismatch {
            expected: m1.nvars(),
            found: m2.nvars(),
        });
    }
    Ok(order.cmp(m1, m2))
}

/// All monomials of total degree `degree` in `nvars` variables, in decreasing lex order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fill_lex(&mut exps, 0, degree, &mut out);
    out
}

fn fill_lex(exps: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == exps.len() {
        exps[pos] = remaining;
        out.push(Monomial::new(exps));
        return;
    }
    for e in (0..=remaining).rev() {
        exps[pos] = e;
        fill_lex(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}
