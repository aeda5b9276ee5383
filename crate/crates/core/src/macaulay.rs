//! Macaulay binomial expansions and the hyperplane-restriction estimates built on them.

use std::fmt;

/// `C(x, y)` with the convention `C(x, y) = 0` for `x < y` or negative arguments.
///
/// Panics on `u64` overflow, which only happens far outside the supported scale.
pub fn binomial(x: i64, y: i64) -> u64 {
    if y < 0 || x < y {
        return 0;
    }
    let y = y.min(x - y);
    let mut acc: u128 = 1;
    for i in 0..y {
        acc = acc * (x - i) as u128 / (i as u128 + 1);
        assert!(acc <= u64::MAX as u128, "binomial C({x}, {y}) overflows u64");
    }
    acc as u64
}

/// `a = C(a_1, D) + C(a_2, D-1) + ... + C(a_k, D-k+1)` with each `a_i` greedy-maximal.
///
/// Terms that would contribute zero are not stored, so `coefficients` may be
/// shorter than `D`; the `i`-th coefficient always sits at position `D - i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacaulayExpansion {
    degree: u32,
    coefficients: Vec<u64>,
}

impl MacaulayExpansion {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    /// `(a_i, position)` pairs, position running `D, D-1, ...`.
    pub fn terms(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.coefficients
            .iter()
            .enumerate()
            .map(move |(i, &a)| (a, self.degree - i as u32))
    }

    /// The integer the expansion represents.
    pub fn value(&self) -> u64 {
        self.shifted_value(0)
    }

    /// `Σ C(a_i - k, pos_i)`.
    fn shifted_value(&self, k: u64) -> u64 {
        self.terms()
            .map(|(a, pos)| binomial(a as i64 - k as i64, pos as i64))
            .sum()
    }
}

impl fmt::Display for MacaulayExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(a, pos)| format!("C({a},{pos})")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The `degree`-th Macaulay expansion of `a`.
///
/// Panics when `degree == 0`.
pub fn expand(a: u64, degree: u32) -> MacaulayExpansion {
    assert!(degree >= 1, "Macaulay expansions need a positive degree");
    let mut rest = a;
    let mut coefficients = Vec::new();
    for pos in (1..=degree).rev() {
        if rest == 0 {
            break;
        }
        let top = if pos == 1 {
            rest
        } else {
            // largest x with C(x, pos) <= rest; C(x, pos) grows in x
            let mut x = pos as u64;
            let mut value: u128 = 1;
            loop {
                let next = value * (x as u128 + 1) / (x as u128 + 1 - pos as u128);
                if next > rest as u128 {
                    break;
                }
                value = next;
                x += 1;
            }
            x
        };
        rest -= binomial(top as i64, pos as i64);
        coefficients.push(top);
    }
    MacaulayExpansion { degree, coefficients }
}

/// `Σ C(a_i - k, pos_i)`: the bound obtained by restricting `k` times to a
/// general hyperplane. Non-increasing in `k`; `k = 0` returns the value itself.
pub fn green_bound(expansion: &MacaulayExpansion, k: u64) -> u64 {
    expansion.shifted_value(k)
}

/// Upper bound for `HF(S/(J + (y)); D)` given `c = HF(S/J; D)` for a general linear form `y`.
pub fn cprime_from_c(c: u64, degree: u32) -> u64 {
    green_bound(&expand(c, degree), 1)
}
