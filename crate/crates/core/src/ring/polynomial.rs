use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Monomial, MonomialOrder, PolyRing};
use crate::error::{Error, Result};
use crate::field;

/// Sparse polynomial over `F_p`.
///
/// Terms are kept sorted in decreasing order with respect to `order`, with
/// no zero coefficients, so the leading term is always `terms[0]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: PolyRing,
    order: MonomialOrder,
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub fn zero(ring: PolyRing) -> Self {
        Polynomial {
            ring,
            order: MonomialOrder::DegRevLex,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: PolyRing, c: u32) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn monomial(ring: PolyRing, m: Monomial, c: u32) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial lives in a different ring");
        let c = c % ring.prime();
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring,
            order: MonomialOrder::DegRevLex,
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates and
    /// dropping zero coefficients.
    pub fn from_terms<I>(ring: PolyRing, order: MonomialOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, u32)>,
    {
        let p = ring.prime();
        let mut raw: Vec<(Monomial, u32)> = terms
            .into_iter()
            .inspect(|(m, _)| assert_eq!(m.nvars(), ring.nvars(), "monomial lives in a different ring"))
            .map(|(m, c)| (m, c % p))
            .filter(|(_, c)| *c != 0)
            .collect();
        raw.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field::add(*lc, c, p),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        Polynomial { ring, order, terms: out }
    }

    pub(crate) fn from_sorted_terms(ring: PolyRing, order: MonomialOrder, terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| *c != 0));
        Polynomial { ring, order, terms }
    }

    #[inline]
    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, u32)> {
        self.terms.first().map(|(m, c)| (m, *c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<u32> {
        self.terms.first().map(|(_, c)| *c)
    }

    /// Maximum total degree of a term, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    /// Common degree of all terms; `None` for zero or inhomogeneous polynomials.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        if self.is_zero() || !self.is_homogeneous() {
            None
        } else {
            self.degree()
        }
    }

    /// Coefficient of `m` (zero when absent).
    pub fn coeff(&self, m: &Monomial) -> u32 {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| *c)
            .unwrap_or(0)
    }

    /// The same polynomial with terms re-sorted for `order`.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            ring: self.ring,
            order,
            terms,
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring.nvars() != other.ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.nvars(),
                found: other.ring.nvars(),
            });
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let other = other.with_order(self.order);
        Ok(self.merge(&other.terms, 1, None))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let other = other.with_order(self.order);
        Ok(self.merge(&other.terms, self.ring.prime() - 1, None))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let p = self.ring.prime();
        let mut products = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                products.push((a.mul(b), field::mul(*ca, *cb, p)));
            }
        }
        Ok(Polynomial::from_terms(self.ring, self.order, products))
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let p = self.ring.prime();
        let c = c % p;
        if c == 0 {
            return Polynomial { terms: Vec::new(), ..self.clone() };
        }
        Polynomial {
            ring: self.ring,
            order: self.order,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), field::mul(*a, c, p))).collect(),
        }
    }

    /// `c * m * self`; term order is preserved by monomial multiplication.
    pub fn mul_term(&self, m: &Monomial, c: u32) -> Polynomial {
        let p = self.ring.prime();
        let c = c % p;
        if c == 0 {
            return Polynomial { terms: Vec::new(), ..self.clone() };
        }
        Polynomial {
            ring: self.ring,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), field::mul(*a, c, p)))
                .collect(),
        }
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(field::inv(c, self.ring.prime())),
        }
    }

    /// `self - c * m * g`, with `g` already sorted for `self.order`.
    pub(crate) fn sub_mul_term(&self, c: u32, m: &Monomial, g: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.order, g.order);
        let p = self.ring.prime();
        self.merge(&g.terms, field::neg(c % p, p), Some(m))
    }

    /// `self + scale * shift * rhs` by merging two sorted term lists.
    fn merge(&self, rhs: &[(Monomial, u32)], scale: u32, shift: Option<&Monomial>) -> Polynomial {
        let p = self.ring.prime();
        let order = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + rhs.len());
        let mut a = self.terms.iter().peekable();
        let mut b = rhs
            .iter()
            .map(|(m, c)| {
                let m = match shift {
                    Some(s) => m.mul(s),
                    None => m.clone(),
                };
                (m, field::mul(*c, scale, p))
            })
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let t = b.next().unwrap();
                    if t.1 != 0 {
                        out.push(t);
                    }
                }
                (Some((ma, _)), Some((mb, _))) => match order.cmp(ma, mb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => {
                        let t = b.next().unwrap();
                        if t.1 != 0 {
                            out.push(t);
                        }
                    }
                    Ordering::Equal => {
                        let (m, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let c = field::add(*ca, cb, p);
                        if c != 0 {
                            out.push((m.clone(), c));
                        }
                    }
                },
            }
        }
        Polynomial {
            ring: self.ring,
            order,
            terms: out,
        }
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let divisor = divisor.with_order(self.order);
        let (lm, lc) = divisor.leading_term()?;
        let p = self.ring.prime();
        let lc_inv = field::inv(lc, p);
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.leading_term() {
            let q = m.div(lm)?;
            let qc = field::mul(c, lc_inv, p);
            rest = rest.sub_mul_term(qc, &q, &divisor);
            quotient.push((q, qc));
        }
        Some(Polynomial::from_sorted_terms(self.ring, self.order, quotient))
    }

    /// Substitutes `x_i -> images[i]` for every variable.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.nvars(),
                found: images.len(),
            });
        }
        let target = images.first().map(|f| f.ring).unwrap_or(self.ring);
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|f| vec![Polynomial::constant(target, 1).with_order(self.order), f.with_order(self.order)])
            .collect();
        let mut acc = Polynomial::zero(target).with_order(self.order);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, *c).with_order(self.order);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().try_mul(&powers[i][1])?;
                    powers[i].push(next);
                }
                term = term.try_mul(&powers[i][e as usize])?;
            }
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }

    /// Re-embeds into a ring with `leading.len()` new variables in front,
    /// multiplying every term by the monomial with exponents `leading`.
    pub(crate) fn embed_with_leading(&self, ring: PolyRing, order: MonomialOrder, leading: &[u32]) -> Polynomial {
        Polynomial::from_terms(
            ring,
            order,
            self.terms.iter().map(|(m, c)| (m.prepend(leading), *c)),
        )
    }

    /// Drops the first `count` variables, which must not occur.
    pub(crate) fn project_dropping(&self, ring: PolyRing, count: usize) -> Polynomial {
        Polynomial::from_terms(
            ring,
            MonomialOrder::DegRevLex,
            self.terms.iter().map(|(m, c)| {
                debug_assert!(m.exponents()[..count].iter().all(|&e| e == 0));
                (m.drop_leading(count), *c)
            }),
        )
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Prints in the ideal file syntax; residues above `p/2` are shown as negatives.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let p = self.ring.prime();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (negative, abs) = if *c > p / 2 { (true, p - c) } else { (false, *c) };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomials from different rings")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomials from different rings")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomials from different rings")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.ring.prime() - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(n: usize) -> PolyRing {
        PolyRing::with_default_prime(n).unwrap()
    }

    #[test]
    fn additive_inverse() {
        let r = ring(2);
        let (x1, x2) = (r.var(0), r.var(1));
        let s = &(&x1 + &x2) + &(-&x1);
        assert_eq!(s, x2);
    }

    #[test]
    fn binomial_square() {
        let r = ring(2);
        let s = &r.var(0) + &r.var(1);
        let sq = &s * &s;
        assert_eq!(sq.to_string(), "x1^2 + 2*x1*x2 + x2^2");
    }

    #[test]
    fn zero_annihilates() {
        let r = ring(2);
        assert!((&r.var(0) * &r.zero()).is_zero());
    }

    #[test]
    fn mixed_rings_rejected() {
        let a = ring(2).var(0);
        let b = ring(3).var(0);
        assert!(matches!(a.try_add(&b), Err(Error::DimensionMismatch { .. })));
        let c = PolyRing::new(2, 7).unwrap().var(0);
        assert_eq!(a.try_mul(&c), Err(Error::RingMismatch));
    }

    #[test]
    fn negative_display() {
        let r = ring(2);
        let f = &(&r.var(0) * &r.var(0)) - &(&r.var(1) * &r.var(1));
        assert_eq!(f.to_string(), "x1^2 - x2^2");
        assert_eq!((-&r.one()).to_string(), "-1");
    }

    #[test]
    fn exact_division() {
        let r = ring(2);
        let f = &r.var(0) + &r.var(1);
        let g = &r.var(0) - &r.var(1);
        let prod = &f * &g;
        assert_eq!(prod.exact_div(&f), Some(g.clone()));
        assert_eq!((&prod + &r.var(0)).exact_div(&f), None);
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((proptest::collection::vec(0u32..3, n), 0u32..32003), 0..6).prop_map(move |ts| {
            Polynomial::from_terms(
                ring(n),
                MonomialOrder::DegRevLex,
                ts.into_iter().map(|(e, c)| (Monomial::new(&e), c)),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
            prop_assert!(a.terms().iter().all(|(_, c)| *c != 0));
        }

        #[test]
        fn order_change_is_lossless(a in arb_poly(3)) {
            let lex = a.with_order(MonomialOrder::Lex);
            prop_assert_eq!(lex.with_order(MonomialOrder::DegRevLex), a);
        }
    }
}
