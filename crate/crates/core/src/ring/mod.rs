//! The ambient ring `F_p[x1, ..., xn]`: monomials, orders and sparse polynomials.

mod monomial;
mod polynomial;

pub use monomial::{compare, monomials_of_degree, Monomial, MonomialOrder};
pub use polynomial::Polynomial;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field;

/// Standard graded polynomial ring over a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    nvars: usize,
    prime: u32,
}

impl PolyRing {
    pub const DEFAULT_PRIME: u32 = 32003;
    /// Largest accepted characteristic; keeps products of residues inside `u64`.
    pub const MAX_PRIME: u32 = 1 << 31;

    pub fn new(nvars: usize, prime: u32) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::InvalidArgument("a ring needs at least one variable".into()));
        }
        if prime > Self::MAX_PRIME || !field::is_prime(prime) {
            return Err(Error::InvalidArgument(format!(
                "characteristic {prime} is not a prime below 2^31"
            )));
        }
        Ok(PolyRing { nvars, prime })
    }

    pub fn with_default_prime(nvars: usize) -> Result<Self> {
        Self::new(nvars, Self::DEFAULT_PRIME)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(*self)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::constant(*self, 1)
    }

    /// The variable `x_{index+1}`.
    pub fn var(&self, index: usize) -> Polynomial {
        assert!(index < self.nvars, "variable index {index} out of range");
        Polynomial::monomial(*self, Monomial::var(self.nvars, index), 1)
    }

    pub fn monomial(&self, exponents: &[u32]) -> Result<Polynomial> {
        if exponents.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: exponents.len(),
            });
        }
        Ok(Polynomial::monomial(*self, Monomial::new(exponents), 1))
    }

    /// The linear form `sum coeffs[i] * x_{i+1}`.
    pub fn linear_form(&self, coeffs: &[u32]) -> Result<Polynomial> {
        if coeffs.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: coeffs.len(),
            });
        }
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| (Monomial::var(self.nvars, i), c % self.prime));
        Ok(Polynomial::from_terms(*self, MonomialOrder::DegRevLex, terms))
    }

    /// A ring with `extra` additional variables placed before `x1`.
    pub(crate) fn with_leading_vars(&self, extra: usize) -> PolyRing {
        PolyRing {
            nvars: self.nvars + extra,
            prime: self.prime,
        }
    }
}

/// A linear form with coefficients drawn uniformly from `F_p`, reproducible from `seed`.
pub fn random_linear_form(ring: PolyRing, seed: u64) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_linear_form_with(ring, &mut rng)
}

/// Draws coefficients from `rng` until the form is nonzero.
pub fn random_linear_form_with<R: Rng + ?Sized>(ring: PolyRing, rng: &mut R) -> Polynomial {
    loop {
        let coeffs: Vec<u32> = (0..ring.nvars()).map(|_| rng.gen_range(0..ring.prime())).collect();
        if coeffs.iter().any(|&c| c != 0) {
            return ring.linear_form(&coeffs).expect("length matches ring");
        }
    }
}

/// A uniformly random homogeneous form of the given degree supported on at most
/// `max_terms` distinct monomials (all monomials when `max_terms` is `None`).
pub fn random_form_with<R: Rng + ?Sized>(
    ring: PolyRing,
    degree: u32,
    max_terms: Option<usize>,
    rng: &mut R,
) -> Polynomial {
    let mons = monomials_of_degree(ring.nvars(), degree);
    loop {
        let support: Vec<&Monomial> = match max_terms {
            None => mons.iter().collect(),
            Some(k) => {
                let count = rng.gen_range(1..=k.min(mons.len()));
                rand::seq::index::sample(rng, mons.len(), count)
                    .into_iter()
                    .map(|i| &mons[i])
                    .collect()
            }
        };
        let terms = support
            .into_iter()
            .map(|m| (m.clone(), rng.gen_range(0..ring.prime())));
        let f = Polynomial::from_terms(ring, MonomialOrder::DegRevLex, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_validation() {
        assert!(PolyRing::new(0, 7).is_err());
        assert!(PolyRing::new(2, 8).is_err());
        assert!(PolyRing::new(2, 4_294_967_291).is_err());
        let r = PolyRing::with_default_prime(3).unwrap();
        assert_eq!(r.prime(), 32003);
    }

    #[test]
    fn random_forms_are_reproducible() {
        let r = PolyRing::with_default_prime(2).unwrap();
        let a = random_linear_form(r, 11);
        assert_eq!(a, random_linear_form(r, 11));
        assert_ne!(a, random_linear_form(r, 12));
        assert_eq!(a.homogeneous_degree(), Some(1));
    }

    #[test]
    fn random_form_in_one_variable_is_nonzero() {
        let r = PolyRing::new(1, 2).unwrap();
        for seed in 0..50 {
            let f = random_linear_form(r, seed);
            assert_eq!(f.terms().len(), 1);
        }
    }

    #[test]
    fn sparse_forms_respect_support() {
        let r = PolyRing::with_default_prime(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let f = random_form_with(r, 3, Some(2), &mut rng);
            assert!(f.terms().len() <= 2 && !f.is_zero());
            assert_eq!(f.homogeneous_degree(), Some(3));
        }
    }
}
