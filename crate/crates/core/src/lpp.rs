//! Lex-plus-powers ideals `(x_1^{d_1}, ..., x_h^{d_h}) + L` with `L` a lex
//! segment in a single degree, their closed-form regularity, and the
//! regularity bounds conditional on the Eisenbud–Green–Harris conjecture.

use crate::error::{Error, Result};
use crate::groebner::{Ideal, MonomialIdeal};
use crate::oracle::{monomial_regularity, regularity_exact, OracleBudget, Regularity};
use crate::ring::{monomials_of_degree, Monomial, PolyRing};

/// A lex-plus-powers ideal whose quotient has a prescribed Hilbert function value in degree `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LppIdeal {
    nvars: usize,
    degree: u32,
    powers: Vec<u32>,
    target: u64,
    segment: Vec<Monomial>,
}

impl LppIdeal {
    /// Builds `(x_1^{d_1}, ..., x_h^{d_h}) + L` with `HF(S/𝓛; D) = c`, where `L`
    /// is the largest lex segment of degree-`D` monomials achieving it.
    ///
    /// `degrees` must be non-decreasing, positive, and at most `n` long.
    pub fn construct(nvars: usize, c: u64, degree: u32, degrees: &[u32]) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::InvalidArgument("need at least one variable".into()));
        }
        if degrees.len() > nvars {
            return Err(Error::InvalidArgument(format!(
                "{} power degrees for {nvars} variables",
                degrees.len()
            )));
        }
        if degrees.contains(&0) || degrees.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidArgument(
                "power degrees must be positive and non-decreasing".into(),
            ));
        }
        let monomials = monomials_of_degree(nvars, degree);
        let in_powers = |m: &Monomial| degrees.iter().enumerate().any(|(i, &d)| m.exponent(i) >= d);
        let outside = monomials.iter().filter(|m| !in_powers(m)).count() as u64;
        if c > outside {
            return Err(Error::InvalidArgument(format!(
                "c = {c} exceeds HF = {outside} of the power ideal quotient in degree {degree}"
            )));
        }
        let mut segment = Vec::new();
        if c < outside {
            let mut count = outside;
            for m in &monomials {
                let powered = in_powers(m);
                if !powered && count == c {
                    break;
                }
                if !powered {
                    count -= 1;
                }
                segment.push(m.clone());
            }
        }
        Ok(LppIdeal {
            nvars,
            degree,
            powers: degrees.to_vec(),
            target: c,
            segment,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// The degree `D` of the lex segment.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn powers(&self) -> &[u32] {
        &self.powers
    }

    /// `HF(S/𝓛; D)`.
    pub fn target(&self) -> u64 {
        self.target
    }

    /// The lex segment `L`, largest monomial first.
    pub fn segment(&self) -> &[Monomial] {
        &self.segment
    }

    /// `u`: the lex-smallest monomial of `L`.
    pub fn smallest_monomial(&self) -> Option<&Monomial> {
        self.segment.last()
    }

    /// Smallest monomial of `L` outside `(x_1^{d_1}, ..., x_h^{d_h})`.
    ///
    /// The maximal segment may end in monomials of the power ideal; those do
    /// not affect `𝓛`, and reading `(a, t_a)` off them breaks the closed form
    /// (for `n = 3`, `D = 4`, degrees `(3,3,3)`, `c = 3` it would give 4, not 5).
    pub fn pivot_monomial(&self) -> Option<&Monomial> {
        self.segment.iter().rev().find(|m| !self.in_powers(m))
    }

    fn in_powers(&self, m: &Monomial) -> bool {
        self.powers.iter().enumerate().any(|(i, &d)| m.exponent(i) >= d)
    }

    /// `(a, t_a)`: the 1-based index of the first variable dividing the
    /// [`pivot_monomial`](Self::pivot_monomial) and its exponent.
    pub fn leading_index(&self) -> Option<(usize, u32)> {
        let u = self.pivot_monomial()?;
        let a = (0..self.nvars).find(|&i| u.exponent(i) > 0)?;
        Some((a + 1, u.exponent(a)))
    }

    /// Minimal monomial generators of `𝓛`.
    pub fn monomial_ideal(&self) -> MonomialIdeal {
        let mut gens: Vec<Monomial> = self
            .powers
            .iter()
            .enumerate()
            .map(|(i, &d)| Monomial::var_pow(self.nvars, i, d))
            .collect();
        gens.extend(self.segment.iter().cloned());
        MonomialIdeal::new(self.nvars, gens)
    }

    pub fn ideal(&self, ring: PolyRing) -> Result<Ideal> {
        if ring.nvars() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: ring.nvars(),
            });
        }
        Ideal::from_monomials(ring, self.monomial_ideal().generators())
    }

    /// Whether the closed form applies: all `n` powers present, `D >= 2`,
    /// `D <= Σ(d_i - 1)` and `L` not contained in the power ideal.
    pub fn closed_form_applies(&self) -> bool {
        let slack: u64 = self.powers.iter().map(|&d| d as u64 - 1).sum();
        self.powers.len() == self.nvars
            && self.degree >= 2
            && self.degree as u64 <= slack
            && self.target < self.outside_count()
    }

    fn outside_count(&self) -> u64 {
        monomials_of_degree(self.nvars, self.degree)
            .iter()
            .filter(|m| !self.in_powers(m))
            .count() as u64
    }

    /// `t_a - 1 + Σ_{i > a} (d_i - 1)` when [`closed_form_applies`](Self::closed_form_applies).
    pub fn closed_form_regularity(&self) -> Option<u32> {
        if !self.closed_form_applies() {
            return None;
        }
        let (a, t_a) = self.leading_index()?;
        Some(t_a - 1 + self.powers[a..].iter().map(|&d| d - 1).sum::<u32>())
    }

    /// `reg(S/𝓛)`: the closed form when it applies, otherwise the exact oracle.
    pub fn regularity(&self, prime: u32) -> Regularity {
        if let Some(r) = self.closed_form_regularity() {
            return Regularity::Value(r);
        }
        log::warn!(
            "closed form does not apply to LPP ideal (n={}, D={}, degrees={:?}); using the Koszul oracle",
            self.nvars,
            self.degree,
            self.powers
        );
        self.oracle_regularity(prime)
    }

    /// `reg(S/𝓛)` from the Betti numbers of the monomial ideal.
    pub fn oracle_regularity(&self, prime: u32) -> Regularity {
        monomial_regularity(&self.monomial_ideal(), prime)
    }
}

/// `(n - a)(D - 1) + t_a - 1`, the regularity bound that holds if the EGH conjecture does.
pub fn egh_corollary_bound(nvars: usize, degree: u32, a: usize, t_a: u32) -> Result<u64> {
    if a == 0 || a > nvars || t_a == 0 || t_a > degree {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= a <= n and 1 <= t_a <= D, got a={a}, t_a={t_a}"
        )));
    }
    Ok((nvars - a) as u64 * (degree as u64 - 1) + t_a as u64 - 1)
}

/// Whether `d_{i+1} >= Σ_{j <= i} (d_j - 1)` for every `i`: a degree pattern
/// for which the EGH conjecture is known.
pub fn egh_known_by_degrees(degrees: &[u32]) -> bool {
    let mut sum = 0u64;
    for w in degrees.windows(2) {
        sum += w[0] as u64 - 1;
        if (w[1] as u64) < sum {
            return false;
        }
    }
    true
}

/// One comparison of `reg(S/I)` against `reg(S/LPP(I; D))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakEghReport {
    pub degree: u32,
    pub c: u64,
    pub reg_ideal: u32,
    pub reg_lpp: u32,
    pub closed_form_used: bool,
    pub holds: bool,
}

/// Compares `reg(S/I)` with `reg(S/LPP(I; D))` for an Artinian `I`, where
/// `D` is the largest minimal generator degree and all powers have degree `D`.
///
/// A violation is logged, not returned as an error.
pub fn weak_egh_experiment(ideal: &Ideal, budget: &OracleBudget) -> Result<WeakEghReport> {
    let (d, _) = ideal.dim_and_height()?;
    if d != 0 {
        return Err(Error::InvalidArgument(format!(
            "weak EGH comparison needs an Artinian quotient, got dimension {d}"
        )));
    }
    let n = ideal.ring().nvars();
    let degree = ideal.max_generator_degree();
    let c = ideal.hilbert_function(degree as i64)?;
    let lpp = LppIdeal::construct(n, c, degree, &vec![degree; n])?;
    let reg_ideal = regularity_exact(ideal, budget)?
        .value()
        .ok_or_else(|| Error::InvalidArgument("the unit ideal is not proper".into()))?;
    let closed = lpp.closed_form_regularity();
    let reg_lpp = match closed {
        Some(r) => r,
        None => lpp
            .oracle_regularity(ideal.ring().prime())
            .value()
            .ok_or_else(|| Error::InvariantViolation("LPP ideal is the unit ideal".into()))?,
    };
    let holds = reg_ideal <= reg_lpp;
    if !holds {
        log::warn!("weak EGH comparison fails: reg(S/I) = {reg_ideal} > reg(S/LPP) = {reg_lpp} (D={degree}, c={c})");
    }
    Ok(WeakEghReport {
        degree,
        c,
        reg_ideal,
        reg_lpp,
        closed_form_used: closed.is_some(),
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::hilbert_series;

    const P: u32 = PolyRing::DEFAULT_PRIME;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn construction_example() {
        let l = LppIdeal::construct(3, 2, 3, &[3, 3, 3]).unwrap();
        assert_eq!(l.smallest_monomial(), Some(&mono(&[0, 3, 0])));
        assert_eq!(l.pivot_monomial(), Some(&mono(&[1, 0, 2])));
        assert_eq!(l.leading_index(), Some((1, 1)));
        assert_eq!(l.closed_form_regularity(), Some(4));
        assert_eq!(l.oracle_regularity(P), Regularity::Value(4));
        assert_eq!(hilbert_series(&l.monomial_ideal()).value(3).unwrap(), 2);
    }

    #[test]
    fn segment_tail_inside_powers() {
        let l = LppIdeal::construct(3, 3, 4, &[3, 3, 3]).unwrap();
        assert_eq!(l.smallest_monomial(), Some(&mono(&[1, 3, 0])));
        assert_eq!(l.pivot_monomial(), Some(&mono(&[2, 0, 2])));
        assert_eq!(l.closed_form_regularity(), Some(5));
        assert_eq!(l.oracle_regularity(P), Regularity::Value(5));
    }

    #[test]
    fn extreme_targets() {
        // all of degree D outside the powers: L is empty
        let full = LppIdeal::construct(3, 7, 3, &[3, 3, 3]).unwrap();
        assert!(full.segment().is_empty());
        assert_eq!(full.closed_form_regularity(), None);
        assert_eq!(full.regularity(P), Regularity::Value(6));

        let zero = LppIdeal::construct(3, 0, 3, &[3, 3, 3]).unwrap();
        assert_eq!(zero.smallest_monomial(), Some(&mono(&[0, 0, 3])));
        assert_eq!(zero.leading_index(), Some((2, 1)));
        assert_eq!(zero.closed_form_regularity(), Some(2));
        assert_eq!(zero.oracle_regularity(P), Regularity::Value(2));

        assert!(matches!(
            LppIdeal::construct(3, 8, 3, &[3, 3, 3]),
            Err(Error::InvalidArgument(_))
        ));
        assert!(LppIdeal::construct(3, 1, 3, &[3, 2]).is_err());
    }

    #[test]
    fn segment_is_maximal() {
        for c in 0..7u64 {
            let l = LppIdeal::construct(3, c, 3, &[3, 3, 3]).unwrap();
            assert_eq!(hilbert_series(&l.monomial_ideal()).value(3).unwrap(), c);
            let all = monomials_of_degree(3, 3);
            if let Some(next) = all.get(l.segment().len()) {
                let mut gens = l.monomial_ideal().generators().to_vec();
                gens.push(next.clone());
                let bigger = MonomialIdeal::new(3, gens);
                assert_ne!(hilbert_series(&bigger).value(3).unwrap(), c, "c={c}");
            }
        }
    }

    #[test]
    fn closed_form_matches_oracle_small_range() {
        for degree in 2..=3u32 {
            let outside = LppIdeal::construct(3, 0, degree, &[degree; 3]).unwrap().outside_count();
            for c in 0..outside {
                let l = LppIdeal::construct(3, c, degree, &[degree; 3]).unwrap();
                assert_eq!(
                    l.closed_form_regularity().map(Regularity::Value),
                    Some(l.oracle_regularity(P)),
                    "D={degree} c={c}"
                );
                if c < degree as u64 {
                    assert_eq!(l.closed_form_regularity(), Some(c as u32 + degree - 1));
                }
            }
        }
    }

    #[test]
    fn smaller_powers_give_smaller_hilbert_function() {
        let cases: &[(u32, &[u32])] = &[(3, &[2, 3, 3]), (3, &[2, 2, 3]), (4, &[2, 3, 4]), (3, &[1, 3, 3])];
        for &(degree, degrees) in cases {
            let mixed_max = LppIdeal::construct(3, 0, degree, degrees).unwrap().outside_count();
            let top: u32 = degrees.iter().map(|d| d - 1).sum::<u32>() + 1;
            for c in 0..=mixed_max {
                let equal = LppIdeal::construct(3, c, degree, &[degree; 3]).unwrap();
                let mixed = LppIdeal::construct(3, c, degree, degrees).unwrap();
                let he = hilbert_series(&equal.monomial_ideal());
                let hm = hilbert_series(&mixed.monomial_ideal());
                for j in 0..=top.max(degree + 1) as i64 {
                    assert!(hm.value(j).unwrap() <= he.value(j).unwrap(), "D={degree} {degrees:?} c={c} j={j}");
                }
            }
        }
    }

    #[test]
    fn corollary_bound_examples() {
        assert_eq!(egh_corollary_bound(3, 3, 2, 3).unwrap(), 4);
        assert_eq!(egh_corollary_bound(4, 3, 4, 2).unwrap(), 1);
        assert_eq!(egh_corollary_bound(4, 3, 1, 1).unwrap(), 6);
        assert!(egh_corollary_bound(3, 3, 0, 1).is_err());
        assert!(egh_corollary_bound(3, 3, 1, 4).is_err());
    }

    #[test]
    fn known_degree_patterns() {
        assert!(egh_known_by_degrees(&[2, 2]));
        assert!(egh_known_by_degrees(&[2, 100, 1000]));
        assert!(!egh_known_by_degrees(&[3, 3, 3]));
        assert!(egh_known_by_degrees(&[4]));
    }

    #[test]
    fn weak_egh_examples() {
        let budget = OracleBudget::default();
        let r = PolyRing::with_default_prime(3).unwrap();
        let squares: Vec<Monomial> = (0..3).map(|i| Monomial::var_pow(3, i, 2)).collect();
        let i = Ideal::from_monomials(r, &squares).unwrap();
        let report = weak_egh_experiment(&i, &budget).unwrap();
        assert_eq!((report.c, report.reg_ideal), (3, 3));
        assert!(report.holds);

        let m = Ideal::maximal_power(r, 3);
        let report = weak_egh_experiment(&m, &budget).unwrap();
        assert_eq!((report.reg_ideal, report.reg_lpp), (2, 2));

        let not_artinian = Ideal::from_monomials(r, &squares[..2]).unwrap();
        assert!(matches!(weak_egh_experiment(&not_artinian, &budget), Err(Error::InvalidArgument(_))));
    }
}
