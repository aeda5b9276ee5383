//! Ideal quotients, saturations and intersections.

use super::buchberger::buchberger;
use super::ideal::Ideal;
use crate::error::{Error, Result};
use crate::linalg::inverse_mod_p;
use crate::ring::{MonomialOrder, Polynomial};

/// An invertible linear change of coordinates sending `x_n` to a given linear form.
///
/// `backward` substitutes `x_n -> y` (and, when `x_n` does not occur in `y`,
/// swaps in the last variable that does); `forward` is its inverse, so
/// `forward(y) = x_n`.
pub(crate) struct LinearChange {
    forward: Vec<Polynomial>,
    backward: Vec<Polynomial>,
}

impl LinearChange {
    pub(crate) fn moving_to_last(y: &Polynomial) -> LinearChange {
        let ring = y.ring();
        let n = ring.nvars();
        let p = ring.prime();
        let coeffs: Vec<u32> = (0..n)
            .map(|i| y.coeff(&crate::ring::Monomial::var(n, i)))
            .collect();
        let k = (0..n).rev().find(|&i| coeffs[i] != 0).expect("nonzero linear form");
        let last = n - 1;
        // column j holds the image of x_j
        let mut matrix: Vec<Vec<u32>> = (0..n)
            .map(|i| (0..n).map(|j| u32::from(i == j && j != last)).collect())
            .collect();
        for (i, &c) in coeffs.iter().enumerate() {
            matrix[i][last] = c;
        }
        if k != last {
            matrix[k][k] = 0;
            matrix[last][k] = 1;
        }
        let inverse = inverse_mod_p(&matrix, p).expect("coordinate change is invertible");
        let images = |m: &[Vec<u32>]| -> Vec<Polynomial> {
            (0..n)
                .map(|j| {
                    let col: Vec<u32> = (0..n).map(|i| m[i][j]).collect();
                    ring.linear_form(&col).unwrap()
                })
                .collect()
        };
        LinearChange {
            forward: images(&inverse),
            backward: images(&matrix),
        }
    }

    pub(crate) fn forward(&self, f: &Polynomial) -> Polynomial {
        f.substitute(&self.forward).expect("same ring")
    }

    pub(crate) fn backward(&self, f: &Polynomial) -> Polynomial {
        f.substitute(&self.backward).expect("same ring")
    }
}

/// Divides every element of a degrevlex basis by `x_n`, once (`full = false`)
/// or as often as possible (`full = true`).
fn divide_by_last_variable(basis: &[Polynomial], full: bool) -> Vec<Polynomial> {
    let last = basis.first().map_or(0, |g| g.ring().nvars() - 1);
    basis
        .iter()
        .map(|g| {
            let common = g
                .terms()
                .iter()
                .map(|(m, _)| m.exponent(last))
                .min()
                .unwrap_or(0);
            let k = if full { common } else { common.min(1) };
            if k == 0 {
                return g.clone();
            }
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| (m.with_exponent(last, m.exponent(last) - k), *c));
            Polynomial::from_terms(g.ring(), MonomialOrder::DegRevLex, terms)
        })
        .collect()
}

/// `I : y` or `I : y^inf` for a linear form `y`: move `y` to the last variable,
/// where dividing a reverse-lex Gröbner basis by powers of it computes the quotient.
fn quotient_by_linear(ideal: &Ideal, y: &Polynomial, full: bool) -> Ideal {
    let change = LinearChange::moving_to_last(y);
    let moved: Vec<Polynomial> = ideal.groebner_basis().iter().map(|g| change.forward(g)).collect();
    let gb = buchberger(&moved, MonomialOrder::DegRevLex);
    let divided = divide_by_last_variable(&gb, full);
    let back: Vec<Polynomial> = divided.iter().map(|g| change.backward(g)).collect();
    Ideal::new(ideal.ring(), back).expect("homogeneous images")
}

fn check_homogeneous_nonzero(f: &Polynomial) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("quotient by the zero polynomial".into()));
    }
    f.homogeneous_degree()
        .ok_or_else(|| Error::InvalidArgument(format!("`{f}` is not homogeneous")))
}

impl Ideal {
    /// `I : f = { g : g f in I }`.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal> {
        self.check_same_ring(f)?;
        match check_homogeneous_nonzero(f)? {
            0 => Ok(self.clone()),
            1 => Ok(quotient_by_linear(self, f, false)),
            _ => self.colon_by_elimination(f),
        }
    }

    /// `I : f` through `I ∩ (f)`, valid for any homogeneous `f`.
    pub fn colon_by_elimination(&self, f: &Polynomial) -> Result<Ideal> {
        self.check_same_ring(f)?;
        check_homogeneous_nonzero(f)?;
        let principal = Ideal::new(self.ring(), vec![f.clone()])?;
        let meet = self.intersect(&principal)?;
        let quotients = meet
            .groebner_basis()
            .iter()
            .map(|g| {
                g.exact_div(f)
                    .ok_or_else(|| Error::InvariantViolation(format!("`{f}` does not divide `{g}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(self.ring(), quotients)
    }

    /// `I : y^inf`, iterating single colons until the chain stabilizes.
    pub fn saturate(&self, y: &Polynomial) -> Result<Ideal> {
        let mut current = self.clone();
        let mut steps = 0usize;
        let mut cap = 1 + basis_degree(&current);
        loop {
            let next = current.colon(y)?;
            if next.same_as(&current) {
                return Ok(next);
            }
            steps += 1;
            cap = cap.max(1 + basis_degree(&next));
            if steps > cap {
                return Err(Error::InternalLimit(format!(
                    "saturation by `{y}` did not stabilize after {steps} colon steps"
                )));
            }
            current = next;
        }
    }

    /// `I ∩ J` by eliminating `t` from `t I + (1 - t) J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch);
        }
        let ring = self.ring();
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(ring));
        }
        let big = ring.with_leading_vars(1);
        let order = MonomialOrder::Elimination(1);
        let mut gens = Vec::new();
        for f in self.groebner_basis() {
            gens.push(f.embed_with_leading(big, order, &[1]));
        }
        for g in other.groebner_basis() {
            let plain = g.embed_with_leading(big, order, &[0]);
            let with_t = g.embed_with_leading(big, order, &[1]);
            gens.push(&plain - &with_t);
        }
        let gb = buchberger(&gens, order);
        let kept: Vec<Polynomial> = gb
            .iter()
            .filter(|g| g.leading_monomial().unwrap().exponent(0) == 0)
            .map(|g| g.project_dropping(ring, 1))
            .collect();
        Ideal::new(ring, kept)
    }

    /// `I : m^inf` for the irrelevant ideal `m = (x1..xn)`, computed as the
    /// intersection of the saturations by each coordinate variable.
    pub fn saturate_maximal(&self) -> Result<Ideal> {
        let ring = self.ring();
        if self.is_unit() || self.is_zero() {
            return Ok(self.clone());
        }
        let mut acc: Option<Ideal> = None;
        for i in 0..ring.nvars() {
            let sat = quotient_by_linear(self, &ring.var(i), true);
            acc = Some(match acc {
                None => sat,
                Some(prev) => prev.intersect(&sat)?,
            });
        }
        Ok(acc.unwrap())
    }

    fn check_same_ring(&self, f: &Polynomial) -> Result<()> {
        if f.ring() == self.ring() {
            Ok(())
        } else if f.ring().nvars() != self.ring().nvars() {
            Err(Error::DimensionMismatch {
                expected: self.ring().nvars(),
                found: f.ring().nvars(),
            })
        } else {
            Err(Error::RingMismatch)
        }
    }
}

fn basis_degree(ideal: &Ideal) -> usize {
    ideal
        .groebner_basis()
        .iter()
        .filter_map(Polynomial::degree)
        .max()
        .unwrap_or(0) as usize
}
