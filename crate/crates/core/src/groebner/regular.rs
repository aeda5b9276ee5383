//! Filter-regular elements and linear systems of parameters.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::ideal::Ideal;
use crate::error::{Error, Result};
use crate::ring::{random_linear_form_with, Polynomial};

pub const DEFAULT_MAX_RETRIES: usize = 32;

impl Ideal {
    /// Whether the linear form `y` is filter regular on `S/I`, i.e. `(I : y)/I`
    /// has finite length. Decided by checking that `S/I` and `S/(I : y)` have
    /// the same Hilbert polynomial.
    pub fn is_filter_regular(&self, y: &Polynomial) -> Result<bool> {
        if y.is_zero() {
            return Err(Error::InvalidArgument("the zero form is never filter regular".into()));
        }
        if y.homogeneous_degree() != Some(1) {
            return Err(Error::InvalidArgument(format!("`{y}` is not a linear form")));
        }
        if self.is_unit() {
            return Ok(true);
        }
        let colon = self.colon(y)?;
        Ok(self.hilbert_series().differs_by_polynomial(colon.hilbert_series()))
    }

    /// Draws `d = dim S/I` random linear forms forming a filter-regular
    /// linear system of parameters. Each step retries up to `max_retries`
    /// times; the result is a deterministic function of `seed`.
    pub fn filter_regular_lsop(&self, seed: u64, max_retries: usize) -> Result<Vec<Polynomial>> {
        let (d, _) = self.dim_and_height()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut current = self.clone();
        let mut forms = Vec::with_capacity(d);
        for step in 0..d {
            let mut accepted = None;
            for _ in 0..max_retries {
                let y = random_linear_form_with(self.ring(), &mut rng);
                if !current.is_filter_regular(&y)? {
                    continue;
                }
                let next = current.sum_with(std::slice::from_ref(&y))?;
                if next.dim_and_height()?.0 + step + 1 != d {
                    continue;
                }
                accepted = Some((y, next));
                break;
            }
            let (y, next) = accepted.ok_or(Error::GenericityFailure {
                step: step + 1,
                retries: max_retries,
            })?;
            forms.push(y);
            current = next;
        }
        Ok(forms)
    }
}
