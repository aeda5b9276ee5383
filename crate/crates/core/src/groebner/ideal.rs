use std::sync::OnceLock;

use super::buchberger::{buchberger, normal_form};
use crate::error::{Error, Result};
use crate::hilbert::HilbertSeries;
use crate::ring::{Monomial, MonomialOrder, PolyRing, Polynomial};

/// A homogeneous ideal of `F_p[x1..xn]` with lazily cached Gröbner data.
///
/// Caches are `OnceLock`s, so an `Ideal` can be shared between threads and
/// whichever thread first needs a basis computes it.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: PolyRing,
    generators: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
    gb_lex: OnceLock<Vec<Polynomial>>,
    minimal: OnceLock<Vec<Polynomial>>,
    initial: OnceLock<MonomialIdeal>,
    pub(crate) series: OnceLock<HilbertSeries>,
}

impl Ideal {
    /// Validates that every generator is homogeneous and lives in `ring`; zero generators are dropped.
    pub fn new(ring: PolyRing, generators: Vec<Polynomial>) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.ring() != ring {
                return Err(if g.ring().nvars() != ring.nvars() {
                    Error::DimensionMismatch {
                        expected: ring.nvars(),
                        found: g.ring().nvars(),
                    }
                } else {
                    Error::RingMismatch
                });
            }
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(Error::InvalidArgument(format!("generator `{g}` is not homogeneous")));
            }
            gens.push(g.with_order(MonomialOrder::DegRevLex));
        }
        Ok(Ideal {
            ring,
            generators: gens,
            gb: OnceLock::new(),
            gb_lex: OnceLock::new(),
            minimal: OnceLock::new(),
            initial: OnceLock::new(),
            series: OnceLock::new(),
        })
    }

    pub fn from_monomials(ring: PolyRing, monomials: &[Monomial]) -> Result<Self> {
        Ideal::new(
            ring,
            monomials.iter().map(|m| Polynomial::monomial(ring, m.clone(), 1)).collect(),
        )
    }

    pub fn zero(ring: PolyRing) -> Self {
        Ideal::new(ring, Vec::new()).unwrap()
    }

    /// The irrelevant ideal `(x1, ..., xn)` raised to the power `degree`.
    pub fn maximal_power(ring: PolyRing, degree: u32) -> Self {
        let mons = crate::ring::monomials_of_degree(ring.nvars(), degree);
        Ideal::from_monomials(ring, &mons).unwrap()
    }

    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Reduced Gröbner basis in degrevlex.
    pub fn groebner_basis(&self) -> &[Polynomial] {
        self.gb
            .get_or_init(|| buchberger(&self.generators, MonomialOrder::DegRevLex))
    }

    pub fn groebner_basis_in(&self, order: MonomialOrder) -> Vec<Polynomial> {
        match order {
            MonomialOrder::DegRevLex => self.groebner_basis().to_vec(),
            MonomialOrder::Lex => self
                .gb_lex
                .get_or_init(|| buchberger(&self.generators, MonomialOrder::Lex))
                .clone(),
            other => buchberger(&self.generators, other),
        }
    }

    /// Degrevlex initial ideal.
    pub fn initial_ideal(&self) -> &MonomialIdeal {
        self.initial.get_or_init(|| {
            MonomialIdeal::new(
                self.ring.nvars(),
                self.groebner_basis()
                    .iter()
                    .map(|g| g.leading_monomial().unwrap().clone())
                    .collect(),
            )
        })
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, self.groebner_basis())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().iter().any(Polynomial::is_constant)
    }

    /// Equality as ideals, decided by comparing reduced Gröbner bases.
    pub fn same_as(&self, other: &Ideal) -> bool {
        self.ring == other.ring && self.groebner_basis() == other.groebner_basis()
    }

    /// A minimal homogeneous generating set, chosen greedily by increasing degree.
    pub fn minimal_generators(&self) -> &[Polynomial] {
        self.minimal.get_or_init(|| {
            let mut gens = self.generators.clone();
            gens.sort_by_key(|g| g.homogeneous_degree());
            let mut kept: Vec<Polynomial> = Vec::new();
            let mut kept_gb: Vec<Polynomial> = Vec::new();
            for g in gens {
                if !normal_form(&g, &kept_gb).is_zero() {
                    kept.push(g);
                    kept_gb = buchberger(&kept, MonomialOrder::DegRevLex);
                }
            }
            kept
        })
    }

    /// Largest degree of a minimal generator (the `D` of the regularity bounds); 0 for the zero ideal.
    pub fn max_generator_degree(&self) -> u32 {
        self.minimal_generators()
            .iter()
            .filter_map(Polynomial::homogeneous_degree)
            .max()
            .unwrap_or(0)
    }

    /// `self + (extra)`.
    pub fn sum_with(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(self.ring, gens)
    }
}

/// Monomial ideal stored by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes `generators`: no generator divides another.
    pub fn new(nvars: usize, generators: Vec<Monomial>) -> Self {
        let mut gens = generators;
        assert!(gens.iter().all(|m| m.nvars() == nvars), "monomial lives in a different ring");
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.exponents().cmp(a.exponents())));
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        MonomialIdeal {
            nvars,
            generators: minimal,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// `self + (m)`.
    pub fn add(&self, m: &Monomial) -> MonomialIdeal {
        let mut gens = self.generators.clone();
        gens.push(m.clone());
        MonomialIdeal::new(self.nvars, gens)
    }

    /// `self : (m)`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.generators.iter().map(|g| g.colon(m)).collect())
    }

    /// Least common multiple of all generators (`1` for the zero ideal).
    pub fn lcm(&self) -> Monomial {
        self.generators
            .iter()
            .fold(Monomial::one(self.nvars), |acc, g| acc.lcm(g))
    }
}
