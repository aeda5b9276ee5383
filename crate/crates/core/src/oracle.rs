//! Exact graded Betti numbers and Castelnuovo–Mumford regularity of `S/I`.
//!
//! `Tor_i(k, S/I)_j` is the homology of the degree-`j` strand of the Koszul
//! complex `∧^i k^n ⊗ (S/I)_{j-i}`, computed by ranks of dense matrices over
//! `F_p`. Monomial ideals use the finer multigrading, where every strand is
//! tiny; that path computes `reg(S/in(I))`, which caps the scan for `S/I`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groebner::{normal_form, Ideal, MonomialIdeal};
use crate::hilbert::binomial_i128;
use crate::linalg::rank_mod_p;
use crate::ring::{monomials_of_degree, Monomial, MonomialOrder, Polynomial};

pub const DEFAULT_MAX_STRAND_DIM: usize = 1500;

/// Largest Koszul strand the oracle is willing to row-reduce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_strand_dim: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_strand_dim: DEFAULT_MAX_STRAND_DIM,
        }
    }
}

/// `reg(S/I)`, with `-inf` for the unit ideal (`S/I = 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regularity {
    NegInfinity,
    Value(u32),
}

impl Regularity {
    pub fn value(self) -> Option<u32> {
        match self {
            Regularity::NegInfinity => None,
            Regularity::Value(v) => Some(v),
        }
    }
}

impl fmt::Display for Regularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regularity::NegInfinity => write!(f, "-inf"),
            Regularity::Value(v) => write!(f, "{v}"),
        }
    }
}

/// Graded Betti numbers `β_{i,j} = dim Tor_i(k, S/I)_j`, stored by row `j - i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    nvars: usize,
    rows: Vec<Vec<u64>>,
}

impl BettiTable {
    fn new(nvars: usize, nrows: usize) -> Self {
        BettiTable {
            nvars,
            rows: vec![vec![0; nvars + 1]; nrows],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of rows `j - i = 0, 1, ...` stored.
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// `β_{i,j}`; zero outside the stored range.
    pub fn get(&self, i: usize, j: u32) -> u64 {
        if i > self.nvars || (j as usize) < i {
            return 0;
        }
        self.rows
            .get(j as usize - i)
            .map_or(0, |row| row[i])
    }

    fn add(&mut self, i: usize, j: u32, value: u64) {
        let r = j as usize - i;
        if r >= self.rows.len() {
            self.rows.resize(r + 1, vec![0; self.nvars + 1]);
        }
        self.rows[r][i] += value;
    }

    /// Nonzero entries as `(i, j, β_{i,j})`.
    pub fn entries(&self) -> Vec<(usize, u32, u64)> {
        let mut out = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            for (i, &b) in row.iter().enumerate() {
                if b != 0 {
                    out.push((i, (i + r) as u32, b));
                }
            }
        }
        out.sort();
        out
    }

    /// `max{j - i : β_{i,j} != 0}`.
    pub fn regularity(&self) -> Regularity {
        self.rows
            .iter()
            .rposition(|row| row.iter().any(|&b| b != 0))
            .map_or(Regularity::NegInfinity, |r| Regularity::Value(r as u32))
    }

    /// `Σ_{i,j} (-1)^i β_{i,j} t^j`, which equals the numerator of the Hilbert
    /// series of `S/I` over `(1 - t)^n`.
    pub fn euler_polynomial(&self) -> Vec<i64> {
        let mut poly = vec![0i64; self.rows.len() + self.nvars];
        for (i, j, b) in self.entries() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            poly[j as usize] += sign * b as i64;
        }
        while poly.last() == Some(&0) {
            poly.pop();
        }
        poly
    }

    fn truncate_rows(&mut self, nrows: usize) {
        self.rows.truncate(nrows);
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cell = |b: u64| if b == 0 { ".".to_string() } else { b.to_string() };
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|&b| cell(b).len())
            .max()
            .unwrap_or(1)
            .max(self.nvars.to_string().len());
        write!(f, "{:>7}", "")?;
        for i in 0..=self.nvars {
            write!(f, " {i:>width$}")?;
        }
        writeln!(f)?;
        let totals: Vec<u64> = (0..=self.nvars)
            .map(|i| self.rows.iter().map(|row| row[i]).sum())
            .collect();
        write!(f, "{:>7}", "total:")?;
        for t in totals {
            write!(f, " {:>width$}", t)?;
        }
        writeln!(f)?;
        for (r, row) in self.rows.iter().enumerate() {
            write!(f, "{:>7}", format!("{r}:"))?;
            for &b in row {
                write!(f, " {:>width$}", cell(b))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Betti table of `S/M` over `F_p`, one multidegree at a time.
///
/// Only multidegrees in the lcm lattice of the generators can carry homology,
/// and there the Koszul strand has a basis of squarefree `σ ⊆ supp(α)` with
/// `x^(α-σ) ∉ M`.
pub fn monomial_betti_table(ideal: &MonomialIdeal, prime: u32) -> BettiTable {
    let n = ideal.nvars();
    let mut lattice: HashSet<Monomial> = HashSet::new();
    lattice.insert(Monomial::one(n));
    for g in ideal.generators() {
        let extended: Vec<Monomial> = lattice.iter().map(|m| m.lcm(g)).collect();
        lattice.extend(extended);
    }
    let mut degrees: Vec<Monomial> = lattice.into_iter().collect();
    degrees.sort_by(|a, b| a.exponents().cmp(b.exponents()));
    let contributions: Vec<Vec<(usize, u32, u64)>> = degrees
        .par_iter()
        .map(|alpha| multigraded_betti(ideal, alpha, prime))
        .collect();
    let mut table = BettiTable::new(n, 1);
    for (i, j, b) in contributions.into_iter().flatten() {
        table.add(i, j, b);
    }
    if let Regularity::Value(r) = table.regularity() {
        table.truncate_rows(r as usize + 1);
    }
    table
}

fn multigraded_betti(ideal: &MonomialIdeal, alpha: &Monomial, prime: u32) -> Vec<(usize, u32, u64)> {
    let n = ideal.nvars();
    let support: Vec<usize> = (0..n).filter(|&v| alpha.exponent(v) > 0).collect();
    let s = support.len();
    // bases[i]: masks over `support` of size i whose complement monomial survives in S/M
    let mut bases: Vec<Vec<u32>> = vec![Vec::new(); s + 1];
    for mask in 0u32..(1 << s) {
        let mut exps = alpha.exponents().to_vec();
        for (bit, &v) in support.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                exps[v] -= 1;
            }
        }
        if !ideal.contains(&Monomial::new(&exps)) {
            bases[mask.count_ones() as usize].push(mask);
        }
    }
    let rank = |i: usize| -> usize {
        // ∂_i : bases[i] -> bases[i-1]
        if i == 0 || i > s || bases[i].is_empty() || bases[i - 1].is_empty() {
            return 0;
        }
        let target: HashMap<u32, usize> = bases[i - 1].iter().enumerate().map(|(k, &m)| (m, k)).collect();
        let rows = bases[i]
            .iter()
            .map(|&mask| {
                let mut row = vec![0u32; target.len()];
                let mut r = 0;
                for bit in 0..s {
                    if mask & (1 << bit) == 0 {
                        continue;
                    }
                    if let Some(&k) = target.get(&(mask & !(1 << bit))) {
                        row[k] = if r % 2 == 0 { 1 } else { prime - 1 };
                    }
                    r += 1;
                }
                row
            })
            .collect();
        rank_mod_p(rows, prime)
    };
    let ranks: Vec<usize> = (0..=s + 1).map(rank).collect();
    (0..=s)
        .filter_map(|i| {
            let b = bases[i].len() - ranks[i] - ranks[i + 1];
            (b > 0).then_some((i, alpha.degree(), b as u64))
        })
        .collect()
}

/// `reg(S/M)` for a monomial ideal.
pub fn monomial_regularity(ideal: &MonomialIdeal, prime: u32) -> Regularity {
    monomial_betti_table(ideal, prime).regularity()
}

/// Sparse vector of `(index, coefficient)` pairs over a standard-monomial basis.
type SparseVec = Vec<(usize, u32)>;

/// Standard monomials by degree and the multiplication-by-variable table on them.
struct StrandContext {
    nvars: usize,
    prime: u32,
    standard: Vec<Vec<Monomial>>,
    /// `times[t][k][v]`: normal form of `x_v * standard[t][k]` over `standard[t + 1]`.
    times: Vec<Vec<Vec<SparseVec>>>,
}

impl StrandContext {
    fn new(ideal: &Ideal, order: MonomialOrder, top_degree: u32) -> Result<Self> {
        let n = ideal.ring().nvars();
        if n > 24 {
            return Err(Error::InternalLimit(format!("Koszul strands over {n} variables")));
        }
        let basis = ideal.groebner_basis_in(order);
        let initial = MonomialIdeal::new(n, basis.iter().map(|g| g.leading_monomial().unwrap().clone()).collect());
        let standard: Vec<Vec<Monomial>> = (0..=top_degree)
            .map(|t| {
                monomials_of_degree(n, t)
                    .into_iter()
                    .filter(|m| !initial.contains(m))
                    .collect()
            })
            .collect();
        let index: Vec<HashMap<&Monomial, usize>> = standard
            .iter()
            .map(|ms| ms.iter().enumerate().map(|(k, m)| (m, k)).collect())
            .collect();
        let ring = ideal.ring();
        let times = (0..top_degree as usize)
            .map(|t| {
                standard[t]
                    .iter()
                    .map(|m| {
                        (0..n)
                            .map(|v| {
                                let product = m.mul(&Monomial::var(n, v));
                                if let Some(&k) = index[t + 1].get(&product) {
                                    return vec![(k, 1)];
                                }
                                let f = Polynomial::monomial(ring, product, 1).with_order(order);
                                normal_form(&f, &basis)
                                    .terms()
                                    .iter()
                                    .map(|(mono, c)| (index[t + 1][mono], *c))
                                    .collect()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(StrandContext {
            nvars: n,
            prime: ring.prime(),
            standard,
            times,
        })
    }

    fn subsets(&self, size: usize) -> Vec<u32> {
        (0u32..(1 << self.nvars))
            .filter(|m| m.count_ones() as usize == size)
            .collect()
    }

    /// `dim ∧^i ⊗ (S/I)_t`.
    fn dim(&self, i: usize, t: i64) -> usize {
        if t < 0 || i > self.nvars {
            return 0;
        }
        let count = self.standard.get(t as usize).map_or(0, Vec::len);
        binomial_i128(self.nvars as i64, i as i64).unwrap() as usize * count
    }

    /// Rank of `∂ : ∧^i ⊗ (S/I)_t -> ∧^(i-1) ⊗ (S/I)_(t+1)`.
    fn rank(&self, i: usize, t: i64, budget: &OracleBudget) -> Result<usize> {
        let source = self.dim(i, t);
        let target = self.dim(i.wrapping_sub(1), t + 1);
        if i == 0 || source == 0 || target == 0 {
            return Ok(0);
        }
        let largest = source.max(target);
        if largest > budget.max_strand_dim {
            return Err(Error::BudgetExceeded {
                dim: largest,
                limit: budget.max_strand_dim,
            });
        }
        let t = t as usize;
        let lower = self.subsets(i - 1);
        let lower_index: HashMap<u32, usize> = lower.iter().enumerate().map(|(k, &m)| (m, k)).collect();
        let width = self.standard[t + 1].len();
        let p = self.prime;
        let mut rows = Vec::with_capacity(source);
        for sigma in self.subsets(i) {
            for k in 0..self.standard[t].len() {
                let mut row = vec![0u32; target];
                let mut r = 0;
                for v in 0..self.nvars {
                    if sigma & (1 << v) == 0 {
                        continue;
                    }
                    let block = lower_index[&(sigma & !(1 << v))] * width;
                    for &(col, c) in &self.times[t][k][v] {
                        let c = if r % 2 == 0 { c } else { p - c };
                        let cell = &mut row[block + col];
                        *cell = crate::field::add(*cell, c, p);
                    }
                    r += 1;
                }
                rows.push(row);
            }
        }
        Ok(rank_mod_p(rows, p))
    }

    /// `β_{i,j}` from the ranks of the two adjacent differentials.
    fn betti(&self, i: usize, j: u32, budget: &OracleBudget) -> Result<u64> {
        let t = j as i64 - i as i64;
        let dim = self.dim(i, t);
        if dim == 0 {
            return Ok(0);
        }
        if dim > budget.max_strand_dim {
            return Err(Error::BudgetExceeded {
                dim,
                limit: budget.max_strand_dim,
            });
        }
        let out = self.rank(i, t, budget)?;
        let incoming = self.rank(i + 1, t - 1, budget)?;
        Ok((dim - out - incoming) as u64)
    }
}

/// `dim Tor_i(k, S/I)_j` from a single Koszul strand.
pub fn koszul_strand(ideal: &Ideal, i: usize, j: u32, budget: &OracleBudget) -> Result<u64> {
    if i > ideal.ring().nvars() || (j as usize) < i {
        return Ok(0);
    }
    let ctx = StrandContext::new(ideal, MonomialOrder::DegRevLex, j - i as u32 + 1)?;
    ctx.betti(i, j, budget)
}

/// Betti table of `S/I`, reading standard monomials off the degrevlex Gröbner basis.
pub fn betti_table(ideal: &Ideal, budget: &OracleBudget) -> Result<BettiTable> {
    betti_table_with_order(ideal, MonomialOrder::DegRevLex, budget)
}

/// Betti table of `S/I` with normal forms taken in `order`.
///
/// Rows `j - i` are scanned up to `reg(S/in(I))`; one extra row is computed
/// and must vanish, guarding the inequality `reg(S/I) <= reg(S/in(I))`.
pub fn betti_table_with_order(ideal: &Ideal, order: MonomialOrder, budget: &OracleBudget) -> Result<BettiTable> {
    let n = ideal.ring().nvars();
    if ideal.is_unit() {
        return Ok(BettiTable::new(n, 0));
    }
    let initial = MonomialIdeal::new(
        n,
        ideal
            .groebner_basis_in(order)
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect(),
    );
    let cap = monomial_regularity(&initial, ideal.ring().prime())
        .value()
        .expect("proper ideal has a proper initial ideal");
    let ctx = StrandContext::new(ideal, order, cap + 2)?;
    let rows = cap as i64 + 1;
    // ranks[i][t] for ∂ out of ∧^i ⊗ (S/I)_t, t in -1..=rows
    let cells: Vec<(usize, i64)> = (1..=n).flat_map(|i| (0..=rows).map(move |t| (i, t))).collect();
    let ranks: Vec<usize> = cells
        .par_iter()
        .map(|&(i, t)| {
            let dim = ctx.dim(i, t);
            if dim > budget.max_strand_dim {
                return Err(Error::BudgetExceeded {
                    dim,
                    limit: budget.max_strand_dim,
                });
            }
            ctx.rank(i, t, budget)
        })
        .collect::<Result<_>>()?;
    let rank_at = |i: usize, t: i64| -> usize {
        if i == 0 || i > n || t < 0 || t > rows {
            return 0;
        }
        ranks[(i - 1) * (rows as usize + 1) + t as usize]
    };
    let mut table = BettiTable::new(n, rows as usize + 1);
    for t in 0..=rows {
        for i in 0..=n {
            let dim = ctx.dim(i, t);
            if dim > budget.max_strand_dim {
                return Err(Error::BudgetExceeded {
                    dim,
                    limit: budget.max_strand_dim,
                });
            }
            let b = dim - rank_at(i, t) - rank_at(i + 1, t - 1);
            if b > 0 {
                table.add(i, (i as i64 + t) as u32, b as u64);
            }
        }
    }
    if table.rows[rows as usize].iter().any(|&b| b != 0) {
        return Err(Error::InvariantViolation(format!(
            "Betti numbers of S/I beyond reg(S/in(I)) = {cap}"
        )));
    }
    table.truncate_rows(cap as usize + 1);
    Ok(table)
}

/// `reg(S/I)` computed exactly.
pub fn regularity_exact(ideal: &Ideal, budget: &OracleBudget) -> Result<Regularity> {
    Ok(betti_table(ideal, budget)?.regularity())
}

/// `reg(I) = reg(S/I) + 1` for a proper nonzero ideal.
pub fn regularity_ideal(ideal: &Ideal, budget: &OracleBudget) -> Result<u32> {
    if ideal.is_zero() {
        return Err(Error::InvalidArgument("the zero ideal has no regularity as a module".into()));
    }
    match regularity_exact(ideal, budget)? {
        Regularity::Value(r) => Ok(r + 1),
        Regularity::NegInfinity => Err(Error::InvalidArgument("the unit ideal is not proper".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{random_form_with, PolyRing};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const P: u32 = PolyRing::DEFAULT_PRIME;

    fn ring(n: usize) -> PolyRing {
        PolyRing::with_default_prime(n).unwrap()
    }

    fn powers(n: usize, degs: &[u32]) -> Vec<Monomial> {
        degs.iter().enumerate().map(|(i, &d)| Monomial::var_pow(n, i, d)).collect()
    }

    #[test]
    fn quadric_complete_intersection_betti() {
        for n in 1..=3 {
            let r = ring(n);
            let i = Ideal::from_monomials(r, &powers(n, &vec![2; n])).unwrap();
            let table = betti_table(&i, &OracleBudget::default()).unwrap();
            for k in 0..=n {
                let expected = binomial_i128(n as i64, k as i64).unwrap() as u64;
                assert_eq!(table.get(k, 2 * k as u32), expected);
                assert_eq!(koszul_strand(&i, k, 2 * k as u32, &OracleBudget::default()).unwrap(), expected);
            }
            assert_eq!(table.regularity(), Regularity::Value(n as u32));
        }
    }

    #[test]
    fn regularity_examples() {
        let budget = OracleBudget::default();
        let r = ring(2);
        let i = Ideal::from_monomials(r, &[Monomial::new(&[2, 0]), Monomial::new(&[1, 1])]).unwrap();
        assert_eq!(regularity_exact(&i, &budget).unwrap(), Regularity::Value(1));
        let table = betti_table(&i, &budget).unwrap();
        assert_eq!(table.entries(), vec![(0, 0, 1), (1, 2, 2), (2, 3, 1)]);

        for d in 1..=3 {
            let m = Ideal::maximal_power(ring(3), d);
            assert_eq!(regularity_exact(&m, &budget).unwrap(), Regularity::Value(d - 1));
            assert_eq!(regularity_ideal(&m, &budget).unwrap(), d);
        }
        let unit = Ideal::new(r, vec![r.one()]).unwrap();
        assert_eq!(regularity_exact(&unit, &budget).unwrap(), Regularity::NegInfinity);
        assert!(matches!(regularity_ideal(&Ideal::zero(r), &budget), Err(Error::InvalidArgument(_))));
        assert_eq!(regularity_exact(&Ideal::zero(r), &budget).unwrap(), Regularity::Value(0));
    }

    #[test]
    fn first_syzygies_count_minimal_generators() {
        let budget = OracleBudget::default();
        let r = ring(3);
        let gens = [Monomial::new(&[2, 0, 0]), Monomial::new(&[1, 1, 0]), Monomial::new(&[0, 1, 2]), Monomial::new(&[0, 0, 3])];
        let i = Ideal::from_monomials(r, &gens).unwrap();
        for j in 0..5 {
            let expected = gens.iter().filter(|g| g.degree() == j).count() as u64;
            assert_eq!(koszul_strand(&i, 1, j, &budget).unwrap(), expected);
        }
        assert_eq!(koszul_strand(&i, 0, 0, &budget).unwrap(), 1);
    }

    #[test]
    fn monomial_path_matches_strands() {
        let budget = OracleBudget::default();
        let cases: Vec<(usize, Vec<Vec<u32>>)> = vec![
            (3, vec![vec![2, 0, 0], vec![1, 1, 0], vec![0, 2, 1], vec![0, 0, 3]]),
            (3, vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]),
            (4, vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1], vec![2, 0, 0, 0], vec![0, 0, 0, 3]]),
        ];
        for (n, gens) in cases {
            let monos: Vec<Monomial> = gens.iter().map(|e| Monomial::new(e)).collect();
            let ideal = Ideal::from_monomials(ring(n), &monos).unwrap();
            let fine = monomial_betti_table(&MonomialIdeal::new(n, monos), P);
            let coarse = betti_table(&ideal, &budget).unwrap();
            assert_eq!(fine, coarse);
        }
    }

    fn random_ideal(n: usize, seed: u64) -> Ideal {
        let r = ring(n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens = (0..3)
            .map(|k| random_form_with(r, 2 + (k as u32 % 2), Some(4), &mut rng))
            .collect();
        Ideal::new(r, gens).unwrap()
    }

    #[test]
    fn euler_characteristic_matches_hilbert_series() {
        let budget = OracleBudget::default();
        for seed in 0..10 {
            let i = random_ideal(3, seed);
            if i.is_unit() {
                continue;
            }
            let table = betti_table(&i, &budget).unwrap();
            assert_eq!(table.euler_polynomial(), i.hilbert_series().raw_numerator(), "seed {seed}");
            let initial = monomial_regularity(i.initial_ideal(), P);
            assert!(table.regularity().value() <= initial.value());
        }
    }

    #[test]
    fn strands_do_not_depend_on_order() {
        let budget = OracleBudget::default();
        for seed in 0..5 {
            let i = random_ideal(3, seed);
            if i.is_unit() {
                continue;
            }
            let a = betti_table_with_order(&i, MonomialOrder::DegRevLex, &budget).unwrap();
            let b = betti_table_with_order(&i, MonomialOrder::Lex, &budget).unwrap();
            // the lex table may scan further, but the nonzero entries agree
            assert_eq!(a.entries(), b.entries(), "seed {seed}");
        }
    }

    #[test]
    fn complete_intersections_of_equal_degree() {
        let budget = OracleBudget::default();
        for h in 2..=3usize {
            for d in 2..=3u32 {
                let r = ring(h);
                let mut rng = ChaCha8Rng::seed_from_u64(h as u64 * 10 + d as u64);
                let gens: Vec<Polynomial> = (0..h).map(|_| random_form_with(r, d, None, &mut rng)).collect();
                let i = Ideal::new(r, gens).unwrap();
                assert_eq!(i.dim_and_height().unwrap(), (0, h));
                assert_eq!(regularity_exact(&i, &budget).unwrap(), Regularity::Value((d - 1) * h as u32));
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let i = Ideal::zero(ring(4));
        let tight = OracleBudget { max_strand_dim: 2 };
        assert!(matches!(koszul_strand(&i, 2, 3, &tight), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn display_marks_zero_entries() {
        let table = monomial_betti_table(&MonomialIdeal::new(2, powers(2, &[2, 2])), P);
        let text = table.to_string();
        assert!(text.contains("total:"));
        assert!(text.contains('.'));
    }
}
