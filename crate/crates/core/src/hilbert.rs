//! Hilbert series of monomial ideals by pivot recursion, and the numerical
//! invariants derived from them: dimension, height, multiplicity and lengths.

use crate::error::{Error, Result};
use crate::groebner::{Ideal, MonomialIdeal};
use crate::ring::{Monomial, Polynomial};

/// Which variable the pivot recursion splits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PivotStrategy {
    /// The variable shared by the most generators, lowest index on ties.
    #[default]
    MostFrequent,
    /// The lowest-index variable shared by two generators.
    FirstVariable,
}

/// `HS(S/I)(t) = Q(t) / (1 - t)^dim` with `Q(1) != 0`.
///
/// The zero module (unit ideal) has an empty numerator and dimension 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    nvars: usize,
    numerator: Vec<i64>,
    dim: usize,
}

impl HilbertSeries {
    /// Simplifies `raw / (1 - t)^nvars`.
    pub fn from_raw(nvars: usize, raw: Vec<i64>) -> Self {
        let mut q = trim(raw);
        let mut dim = nvars;
        if q.is_empty() {
            return HilbertSeries { nvars, numerator: q, dim: 0 };
        }
        while dim > 0 && q.iter().sum::<i64>() == 0 {
            q = divide_one_minus_t(&q);
            dim -= 1;
        }
        HilbertSeries { nvars, numerator: q, dim }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Coefficients of `Q(t)`, lowest degree first.
    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    /// Krull dimension; the exponent of `1 - t` in the simplified denominator.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero_module(&self) -> bool {
        self.numerator.is_empty()
    }

    /// `Q(1)`: the multiplicity, or the total length in dimension zero.
    pub fn multiplicity(&self) -> i64 {
        self.numerator.iter().sum()
    }

    /// Numerator over `(1 - t)^nvars`, i.e. `Q(t) (1 - t)^(nvars - dim)`.
    pub fn raw_numerator(&self) -> Vec<i64> {
        let mut q = self.numerator.clone();
        for _ in self.dim..self.nvars {
            q = mul_one_minus_t_pow(&q, 1);
        }
        trim(q)
    }

    /// `HF(j)`, expanding `Q(t)/(1-t)^dim`.
    pub fn value(&self, j: i64) -> Result<u64> {
        if j < 0 {
            return Ok(0);
        }
        let d = self.dim as i64;
        let mut total: i128 = 0;
        for (k, &q) in self.numerator.iter().enumerate() {
            let k = k as i64;
            if k > j {
                break;
            }
            let coeff = if d == 0 {
                i128::from(k == j)
            } else {
                binomial_i128(j - k + d - 1, d - 1).ok_or(Error::Overflow("Hilbert function"))?
            };
            total = total
                .checked_add(coeff.checked_mul(q as i128).ok_or(Error::Overflow("Hilbert function"))?)
                .ok_or(Error::Overflow("Hilbert function"))?;
        }
        u64::try_from(total).map_err(|_| Error::InvariantViolation(format!("negative Hilbert function value {total} at {j}")))
    }

    /// Whether `self - other` is a polynomial, i.e. the two series share a Hilbert polynomial.
    pub fn differs_by_polynomial(&self, other: &HilbertSeries) -> bool {
        let a = self.raw_numerator();
        let b = other.raw_numerator();
        let len = a.len().max(b.len());
        let mut diff: Vec<i64> = (0..len)
            .map(|i| a.get(i).copied().unwrap_or(0) - b.get(i).copied().unwrap_or(0))
            .collect();
        diff = trim(diff);
        for _ in 0..self.nvars {
            if diff.is_empty() {
                return true;
            }
            if diff.iter().sum::<i64>() != 0 {
                return false;
            }
            diff = divide_one_minus_t(&diff);
        }
        true
    }
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// `q / (1 - t)`, assuming `q(1) = 0`: prefix sums.
fn divide_one_minus_t(q: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(q.len().saturating_sub(1));
    let mut acc = 0i64;
    for &c in &q[..q.len() - 1] {
        acc += c;
        out.push(acc);
    }
    trim(out)
}

fn mul_one_minus_t_pow(q: &[i64], k: usize) -> Vec<i64> {
    let mut out = vec![0i64; q.len() + k];
    for (i, &c) in q.iter().enumerate() {
        out[i] += c;
        out[i + k] -= c;
    }
    out
}

fn add_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

pub(crate) fn binomial_i128(n: i64, k: i64) -> Option<i128> {
    if k < 0 || n < k {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as i128)? / (i as i128 + 1);
    }
    Some(acc)
}

/// Numerator of `HS(S/M)` over `(1 - t)^n`.
pub fn hilbert_numerator(ideal: &MonomialIdeal, strategy: PivotStrategy) -> Vec<i64> {
    trim(numerator_rec(ideal, strategy))
}

fn numerator_rec(ideal: &MonomialIdeal, strategy: PivotStrategy) -> Vec<i64> {
    let gens = ideal.generators();
    if gens.is_empty() {
        return vec![1];
    }
    if ideal.is_unit() {
        return Vec::new();
    }
    let n = ideal.nvars();
    let mut shared = vec![0usize; n];
    for g in gens {
        for (v, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                shared[v] += 1;
            }
        }
    }
    let candidates = (0..n).filter(|&v| shared[v] >= 2);
    let pivot_var = match strategy {
        PivotStrategy::MostFrequent => candidates.max_by(|&a, &b| shared[a].cmp(&shared[b]).then(b.cmp(&a))),
        PivotStrategy::FirstVariable => candidates.min(),
    };
    let Some(v) = pivot_var else {
        // pairwise coprime generators: a complete intersection
        let mut q = vec![1i64];
        for g in gens {
            q = mul_one_minus_t_pow(&q, g.degree() as usize);
        }
        return q;
    };
    let e = gens
        .iter()
        .map(|g| g.exponent(v))
        .filter(|&x| x > 0)
        .min()
        .unwrap();
    let pivot = Monomial::var_pow(n, v, e);
    let mut q = numerator_rec(&ideal.add(&pivot), strategy);
    let inner = numerator_rec(&ideal.colon(&pivot), strategy);
    add_shifted(&mut q, &inner, e as usize);
    q
}

pub fn hilbert_series(ideal: &MonomialIdeal) -> HilbertSeries {
    hilbert_series_with(ideal, PivotStrategy::default())
}

pub fn hilbert_series_with(ideal: &MonomialIdeal, strategy: PivotStrategy) -> HilbertSeries {
    HilbertSeries::from_raw(ideal.nvars(), hilbert_numerator(ideal, strategy))
}

/// `ℓ(R/(y_1..y_d)) - e(R)` with both sides of the identity computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LengthDefect {
    pub artinian_length: u64,
    pub multiplicity: u64,
    /// `ℓ(R^(d)) - e(R)`.
    pub defect: u64,
    /// `ℓ(((I + (y_1..y_{d-1}))^sat + (y_d)) / (I + (y_1..y_d)))`, computed
    /// through a coordinate saturation and independent of `e(R)`.
    pub saturated_side: u64,
}

impl Ideal {
    /// Hilbert series of `S/I`, via the degrevlex initial ideal.
    pub fn hilbert_series(&self) -> &HilbertSeries {
        self.series.get_or_init(|| hilbert_series(self.initial_ideal()))
    }

    /// `HF(S/I; j)`; zero for negative `j`.
    pub fn hilbert_function(&self, j: i64) -> Result<u64> {
        self.hilbert_series().value(j)
    }

    /// `(dim S/I, height I)`.
    pub fn dim_and_height(&self) -> Result<(usize, usize)> {
        let hs = self.hilbert_series();
        if hs.is_zero_module() {
            return Err(Error::EmptyScheme);
        }
        Ok((hs.dim(), self.ring().nvars() - hs.dim()))
    }

    /// `e(S/I)`.
    pub fn multiplicity(&self) -> Result<u64> {
        let hs = self.hilbert_series();
        if hs.is_zero_module() {
            return Err(Error::EmptyScheme);
        }
        u64::try_from(hs.multiplicity())
            .map_err(|_| Error::InvariantViolation("non-positive multiplicity".into()))
    }

    /// `ℓ(S/I)` for an Artinian quotient.
    pub fn artinian_length(&self) -> Result<u64> {
        let hs = self.hilbert_series();
        if hs.is_zero_module() {
            return Ok(0);
        }
        if hs.dim() != 0 {
            return Err(Error::InvalidArgument(format!(
                "quotient has dimension {}, not finite length",
                hs.dim()
            )));
        }
        Ok(hs.multiplicity() as u64)
    }

    /// `HF(S/(I + (y_1..y_t)); j)`.
    pub fn section_hf(&self, forms: &[Polynomial], j: i64) -> Result<u64> {
        self.sum_with(forms)?.hilbert_function(j)
    }

    /// Length defect of a filter-regular linear system of parameters, checking
    /// that both sides of the length identity agree.
    pub fn length_defect(&self, lsop: &[Polynomial]) -> Result<LengthDefect> {
        let (d, _) = self.dim_and_height()?;
        if lsop.len() != d {
            return Err(Error::InvalidArgument(format!(
                "expected {d} linear forms, got {}",
                lsop.len()
            )));
        }
        let full = self.sum_with(lsop)?;
        if full.dim_and_height().map(|(k, _)| k).unwrap_or(0) != 0 {
            return Err(Error::InvalidArgument("the forms are not a system of parameters".into()));
        }
        let artinian_length = full.artinian_length()?;
        let multiplicity = self.multiplicity()?;
        let defect = artinian_length.checked_sub(multiplicity).ok_or_else(|| {
            Error::InvariantViolation(format!(
                "multiplicity {multiplicity} exceeds Artinian length {artinian_length}"
            ))
        })?;
        if d == 0 {
            return Ok(LengthDefect {
                artinian_length,
                multiplicity,
                defect,
                saturated_side: 0,
            });
        }
        let partial = self.sum_with(&lsop[..d - 1])?;
        let saturated = partial.saturate_maximal()?.sum_with(&lsop[d - 1..])?;
        let saturated_length = saturated.artinian_length()?;
        let saturated_side = artinian_length.checked_sub(saturated_length).ok_or_else(|| {
            Error::InvariantViolation("saturated quotient longer than the Artinian reduction".into())
        })?;
        if saturated_side != defect {
            return Err(Error::InvariantViolation(format!(
                "length identity fails: saturated side {saturated_side} vs l(R^(d)) - e(R) = {defect}"
            )));
        }
        Ok(LengthDefect {
            artinian_length,
            multiplicity,
            defect,
            saturated_side,
        })
    }
}
