//! Regularity upper bounds from measured invariants, and the per-ideal
//! analysis that assembles them into a [`BoundReport`].

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::groebner::{Ideal, DEFAULT_MAX_RETRIES};
use crate::hilbert::LengthDefect;
use crate::lpp::{egh_corollary_bound, LppIdeal};
use crate::macaulay::{binomial, cprime_from_c, expand, green_bound};
use crate::oracle::{betti_table, regularity_exact, BettiTable, OracleBudget, Regularity};
use crate::ring::Polynomial;

/// Exponents `2^k` beyond this are refused rather than materialized.
const MAX_DOUBLING: u32 = 24;

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

fn doubling_power(base: BigInt, k: u32) -> Result<BigInt> {
    if k > MAX_DOUBLING {
        return Err(Error::Overflow("doubly exponential bound"));
    }
    Ok(num_traits::pow(base, 1usize << k))
}

/// `Φ(D, c', h) = D^h - C(D+h-1, h-1) + c' + h`, the bound on the length of
/// an Artinian reduction. Requires `c' <= C(D+h-1, h-1) - h`.
pub fn phi(degree: u32, cprime: u64, height: u32) -> Result<BigInt> {
    if degree == 0 || height == 0 {
        return Err(Error::InvalidArgument(format!(
            "Φ needs D >= 1 and h >= 1, got D={degree}, h={height}"
        )));
    }
    let top = binomial((degree + height - 1) as i64, (height - 1) as i64);
    if top < height as u64 || cprime > top - height as u64 {
        return Err(Error::InvalidArgument(format!(
            "c' = {cprime} outside [0, C(D+h-1,h-1) - h] for D={degree}, h={height}"
        )));
    }
    Ok(phi_unchecked(degree, cprime, height))
}

fn phi_unchecked(degree: u32, cprime: u64, height: u32) -> BigInt {
    let top = binomial((degree + height - 1) as i64, (height - 1) as i64);
    num_traits::pow(big(degree as u64), height as usize) - big(top) + big(cprime) + big(height as u64)
}

/// `D + c - 1`, the bound on `reg(S/I)` when `dim S/I <= 1`.
pub fn bound_dim_le1(degree: u32, c: u64) -> BigInt {
    big(degree as u64) + big(c) - 1
}

/// `((D + c - 1)(Φ(D, c', h) - e + 1))^(2^(d-2))` for `dim S/I = d >= 2`.
pub fn bound_dim_ge2(degree: u32, c: u64, cprime: u64, height: u32, e: u64, d: u32) -> Result<BigInt> {
    let length_bound = phi(degree, cprime, height)?;
    dim_ge2_from_length_bound(degree, c, length_bound, e, d)
}

/// The same bound with `D^h` in place of `Φ(D, c', h)`.
pub fn bound_dim_ge2_dh(degree: u32, c: u64, height: u32, e: u64, d: u32) -> Result<BigInt> {
    let length_bound = num_traits::pow(big(degree as u64), height as usize);
    dim_ge2_from_length_bound(degree, c, length_bound, e, d)
}

fn dim_ge2_from_length_bound(degree: u32, c: u64, length_bound: BigInt, e: u64, d: u32) -> Result<BigInt> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("needs dimension at least 2, got {d}")));
    }
    if e == 0 {
        return Err(Error::InvalidArgument("multiplicity must be positive".into()));
    }
    let second = length_bound - big(e) + 1;
    if second < BigInt::one() {
        return Err(Error::InvalidArgument(format!(
            "length bound minus multiplicity plus one is {second}, not positive"
        )));
    }
    doubling_power(bound_dim_le1(degree, c) * second, d - 2)
}

/// `D^(2^(n-2))`, a bound on `reg(I)` for `n >= 3`.
pub fn bound_corollary(degree: u32, nvars: usize) -> Result<BigInt> {
    if nvars < 3 {
        return Err(Error::InvalidArgument(format!("needs at least 3 variables, got {nvars}")));
    }
    doubling_power(big(degree as u64), nvars as u32 - 2)
}

/// `(2D)^(2^(n-2))`, the classical bound on `reg(I)`, for comparison.
pub fn bound_classical(degree: u32, nvars: usize) -> Result<BigInt> {
    if nvars < 2 {
        return Err(Error::InvalidArgument(format!("needs at least 2 variables, got {nvars}")));
    }
    doubling_power(big(2 * degree as u64), nvars as u32 - 2)
}

/// `max{D, reg R^(1)} + (Π_{i<d} reg R^(i)) · ℓ(((I+(y_1..y_{d-1}))^sat + (y_d)) / (I+(y_1..y_d)))`
/// with `R^(i) = S/(I + (y_1..y_i))`, every regularity computed exactly.
pub fn cs_recursive_bound(ideal: &Ideal, lsop: &[Polynomial], budget: &OracleBudget) -> Result<BigInt> {
    let (d, _) = ideal.dim_and_height()?;
    if d < 2 || lsop.len() != d {
        return Err(Error::InvalidArgument(format!(
            "needs dimension at least 2 and a full system of parameters (d={d}, {} forms)",
            lsop.len()
        )));
    }
    let defect = ideal.length_defect(lsop)?.saturated_side;
    cs_recursive_with_defect(ideal, lsop, defect, budget)
}

fn cs_recursive_with_defect(ideal: &Ideal, lsop: &[Polynomial], defect: u64, budget: &OracleBudget) -> Result<BigInt> {
    let d = lsop.len();
    let mut regs = Vec::with_capacity(d - 1);
    for i in 1..d {
        let section = ideal.sum_with(&lsop[..i])?;
        let reg = regularity_exact(&section, budget)?
            .value()
            .ok_or_else(|| Error::InvariantViolation("hyperplane section is the unit ideal".into()))?;
        regs.push(reg);
    }
    let degree = ideal.max_generator_degree();
    let product = regs.iter().fold(BigInt::one(), |acc, &r| acc * big(r as u64));
    Ok(big(degree.max(regs[0]) as u64) + product * big(defect))
}

/// Options for [`analyze`].
#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    /// Seed of the random linear system of parameters.
    pub seed: u64,
    /// Run the exact regularity oracle and produce verdicts.
    pub exact: bool,
    /// Keep the full Betti table (implies `exact`).
    pub betti: bool,
    pub budget: OracleBudget,
    pub max_retries: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            seed: 0,
            exact: false,
            betti: false,
            budget: OracleBudget::default(),
            max_retries: DEFAULT_MAX_RETRIES,
        }
    }
}

/// Measured invariants of `R = S/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub d: usize,
    pub h: usize,
    pub e: u64,
    /// `HF(S/I; D)`, the value Macaulay expansions start from.
    pub hf_degree: u64,
    pub c: u64,
    pub cprime: u64,
    pub lsop_seed: u64,
    pub length: LengthDefect,
}

/// Hyperplane-restriction estimates of `c` and `c'` from `HF(S/I; D)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenEstimates {
    pub c: u64,
    pub cprime: u64,
    /// Estimate of `c'` from the measured `c`.
    pub cprime_from_c: u64,
}

/// Every bound, `None` where its hypotheses do not hold.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bounds {
    pub dim_le1: Option<BigInt>,
    pub dim_ge2_phi: Option<BigInt>,
    pub dim_ge2_dh: Option<BigInt>,
    pub corollary: Option<BigInt>,
    pub classical: Option<BigInt>,
    pub green_variant: Option<BigInt>,
    /// Holds only if the EGH conjecture does; never part of the pass/fail verdict.
    pub egh_conditional: Option<BigInt>,
    pub cs_recursive: Option<BigInt>,
}

/// Internal consistency checks that do not need the exact regularity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checks {
    /// `ℓ(R^(d)) <= Φ(D, c', h) <= D^h`.
    pub artinian_length_bound: bool,
    /// `e(R) <= ℓ(R^(d))`.
    pub multiplicity_le_length: bool,
    /// `c <= Green estimate`, `d >= 1` only.
    pub green_c: Option<bool>,
    /// `c' <= Green estimate`, `d >= 1` only.
    pub green_cprime: Option<bool>,
    /// `c' <= cprime_from_c(c)`, `d >= 1` only.
    pub green_cprime_from_c: Option<bool>,
    /// `Σ (-1)^i β_ij t^j` equals the Hilbert series numerator (exact runs only).
    pub euler_identity: Option<bool>,
}

impl Checks {
    pub fn all_hold(&self) -> bool {
        self.artinian_length_bound
            && self.multiplicity_le_length
            && [self.green_c, self.green_cprime, self.green_cprime_from_c, self.euler_identity]
                .iter()
                .all(|c| c.unwrap_or(true))
    }
}

/// Exact regularity data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exact {
    pub reg_quotient: u32,
    pub reg_ideal: u32,
    pub betti: BettiTable,
}

/// Whether one bound holds against the exact regularity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub name: &'static str,
    pub holds: bool,
    /// Conditional verdicts (EGH) are reported but do not count as failures.
    pub conditional: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub nvars: usize,
    pub prime: u32,
    pub generators: Vec<String>,
    pub degree: u32,
    pub invariants: Invariants,
    pub phi: BigInt,
    pub green: GreenEstimates,
    pub bounds: Bounds,
    pub checks: Checks,
    pub exact: Option<Exact>,
    pub keep_betti: bool,
    pub verdicts: Vec<Verdict>,
    pub notes: Vec<String>,
}

impl BoundReport {
    /// True when every unconditional verdict and every internal check holds.
    pub fn all_hold(&self) -> bool {
        self.checks.all_hold() && self.verdicts.iter().all(|v| v.holds || v.conditional)
    }

    /// The report as JSON; every integer is a decimal string.
    pub fn to_json(&self) -> Value {
        let s = |x: &dyn ToString| Value::String(x.to_string());
        let opt = |x: &Option<BigInt>| x.as_ref().map_or(Value::Null, |v| Value::String(v.to_string()));
        let inv = &self.invariants;
        let b = &self.bounds;
        let mut verdicts = Map::new();
        for v in &self.verdicts {
            verdicts.insert(v.name.to_string(), Value::Bool(v.holds));
        }
        let opt_bool = |x: Option<bool>| x.map_or(Value::Null, Value::Bool);
        let mut report = json!({
            "ring": { "n": s(&self.nvars), "p": s(&self.prime) },
            "ideal": { "generators": self.generators, "D": s(&self.degree) },
            "invariants": {
                "d": s(&inv.d),
                "h": s(&inv.h),
                "e": s(&inv.e),
                "c": s(&inv.c),
                "cprime": s(&inv.cprime),
                "lsop_seed": s(&inv.lsop_seed),
                "length_artinian": s(&inv.length.artinian_length),
                "length_defect": s(&inv.length.defect),
                "hf_D": s(&inv.hf_degree),
                "phi": s(&self.phi),
            },
            "green": {
                "c": s(&self.green.c),
                "cprime": s(&self.green.cprime),
                "cprime_from_c": s(&self.green.cprime_from_c),
            },
            "bounds": {
                "dim_le1": opt(&b.dim_le1),
                "dim_ge2_phi": opt(&b.dim_ge2_phi),
                "dim_ge2_Dh": opt(&b.dim_ge2_dh),
                "corollary": opt(&b.corollary),
                "classical": opt(&b.classical),
                "green_variant": opt(&b.green_variant),
                "egh_conditional": opt(&b.egh_conditional),
                "cs_recursive": opt(&b.cs_recursive),
            },
            "exact": self.exact.as_ref().map_or(Value::Null, |e| json!({
                "reg_quotient": s(&e.reg_quotient),
                "reg_ideal": s(&e.reg_ideal),
            })),
            "verdicts": verdicts,
            "checks": {
                "artinian_length_bound": self.checks.artinian_length_bound,
                "multiplicity_le_length": self.checks.multiplicity_le_length,
                "green_c": opt_bool(self.checks.green_c),
                "green_cprime": opt_bool(self.checks.green_cprime),
                "green_cprime_from_c": opt_bool(self.checks.green_cprime_from_c),
                "euler_identity": opt_bool(self.checks.euler_identity),
            },
            "notes": self.notes,
        });
        if let (true, Some(exact)) = (self.keep_betti, &self.exact) {
            let entries: Vec<Value> = exact
                .betti
                .entries()
                .into_iter()
                .map(|(i, j, v)| json!({ "i": s(&i), "j": s(&j), "value": s(&v) }))
                .collect();
            report["betti"] = Value::Array(entries);
        }
        report
    }

    /// Plain-text rendering for terminals.
    pub fn render_text(&self) -> String {
        let inv = &self.invariants;
        let mut out = String::new();
        let line = |out: &mut String, k: &str, v: String| out.push_str(&format!("{k:<26}{v}\n"));
        line(&mut out, "ring", format!("n = {}, p = {}", self.nvars, self.prime));
        line(&mut out, "generators", self.generators.join(", "));
        line(&mut out, "D", self.degree.to_string());
        line(&mut out, "d, h", format!("{}, {}", inv.d, inv.h));
        line(&mut out, "e(R)", inv.e.to_string());
        line(&mut out, "c, c'", format!("{}, {}", inv.c, inv.cprime));
        line(&mut out, "l(R^(d))", inv.length.artinian_length.to_string());
        line(&mut out, "Phi(D,c',h)", self.phi.to_string());
        line(
            &mut out,
            "Green estimates",
            format!("c <= {}, c' <= {}, c' <= {} (from c)", self.green.c, self.green.cprime, self.green.cprime_from_c),
        );
        out.push('\n');
        let verdict = |name: &str| {
            self.verdicts
                .iter()
                .find(|v| v.name == name)
                .map_or(String::new(), |v| if v.holds { "  OK".into() } else { "  FAILS".into() })
        };
        let b = &self.bounds;
        let rows: [(&str, &str, &Option<BigInt>); 8] = [
            ("dim_le1", "dim <= 1: D+c-1", &b.dim_le1),
            ("dim_ge2_phi", "dim >= 2, Phi form", &b.dim_ge2_phi),
            ("dim_ge2_Dh", "dim >= 2, D^h form", &b.dim_ge2_dh),
            ("green_variant", "Green-estimated", &b.green_variant),
            ("cs_recursive", "recursive (exact)", &b.cs_recursive),
            ("corollary", "reg(I) <= D^(2^(n-2))", &b.corollary),
            ("classical", "reg(I) <= (2D)^(2^(n-2))", &b.classical),
            ("egh_conditional", "if EGH holds", &b.egh_conditional),
        ];
        for (key, label, value) in rows {
            if let Some(v) = value {
                line(&mut out, label, format!("{v}{}", verdict(key)));
            }
        }
        if let Some(exact) = &self.exact {
            out.push('\n');
            line(&mut out, "reg(S/I)", exact.reg_quotient.to_string());
            line(&mut out, "reg(I)", exact.reg_ideal.to_string());
            if self.keep_betti {
                out.push_str("\nBetti table (rows j-i, columns i):\n");
                out.push_str(&exact.betti.to_string());
            }
        }
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        out
    }
}

/// Computes every invariant and bound for a proper nonzero homogeneous ideal.
pub fn analyze(ideal: &Ideal, options: &AnalyzeOptions) -> Result<BoundReport> {
    if ideal.is_zero() {
        return Err(Error::InvalidArgument("the zero ideal has no bounds to check".into()));
    }
    if ideal.is_unit() {
        return Err(Error::InvalidArgument("the unit ideal is not proper".into()));
    }
    let ring = ideal.ring();
    let n = ring.nvars();
    let degree = ideal.max_generator_degree();
    let (d, h) = ideal.dim_and_height()?;
    let e = ideal.multiplicity()?;
    let lsop = ideal.filter_regular_lsop(options.seed, options.max_retries)?;
    let hf_degree = ideal.hilbert_function(degree as i64)?;
    let c = if d <= 1 {
        hf_degree
    } else {
        ideal.section_hf(&lsop[..d - 1], degree as i64)?
    };
    let cprime = ideal.section_hf(&lsop, degree as i64)?;
    let length = ideal.length_defect(&lsop)?;
    let mut notes = Vec::new();

    let phi_value = phi(degree, cprime, h as u32)?;
    let d_power_h = num_traits::pow(big(degree as u64), h);
    let ell = big(length.artinian_length);
    let artinian_length_bound = ell <= phi_value && phi_value <= d_power_h;
    let multiplicity_le_length = e <= length.artinian_length;
    if !artinian_length_bound || !multiplicity_le_length {
        return Err(Error::InvariantViolation(format!(
            "length bounds fail: e = {e}, l(R^(d)) = {}, Phi = {phi_value}, D^h = {d_power_h}",
            length.artinian_length
        )));
    }

    let expansion = expand(hf_degree, degree);
    let green = GreenEstimates {
        c: green_bound(&expansion, d.saturating_sub(1) as u64),
        cprime: green_bound(&expansion, d as u64),
        cprime_from_c: cprime_from_c(c, degree),
    };
    let green_checks = d >= 1;
    let mut checks = Checks {
        artinian_length_bound,
        multiplicity_le_length,
        green_c: green_checks.then_some(c <= green.c),
        green_cprime: green_checks.then_some(cprime <= green.cprime),
        green_cprime_from_c: green_checks.then_some(cprime <= green.cprime_from_c),
        euler_identity: None,
    };

    let mut bounds = Bounds {
        corollary: (n >= 3).then(|| bound_corollary(degree, n)).transpose()?,
        classical: (n >= 2).then(|| bound_classical(degree, n)).transpose()?,
        ..Bounds::default()
    };
    if d <= 1 {
        bounds.dim_le1 = Some(bound_dim_le1(degree, c));
    } else {
        let d32 = d as u32;
        bounds.dim_ge2_phi = Some(bound_dim_ge2(degree, c, cprime, h as u32, e, d32)?);
        bounds.dim_ge2_dh = Some(bound_dim_ge2_dh(degree, c, h as u32, e, d32)?);
        let green_phi = phi_unchecked(degree, green.cprime, h as u32);
        bounds.green_variant = Some(dim_ge2_from_length_bound(degree, green.c, green_phi, e, d32)?);
    }
    if d == 0 && n >= 2 {
        let lpp = LppIdeal::construct(n, hf_degree, degree, &vec![degree; n])?;
        if lpp.closed_form_applies() {
            let (a, t_a) = lpp.leading_index().expect("nonempty segment");
            bounds.egh_conditional = Some(big(egh_corollary_bound(n, degree, a, t_a)?));
        }
    }

    let mut exact = None;
    let mut verdicts = Vec::new();
    if options.exact || options.betti {
        let table = betti_table(ideal, &options.budget)?;
        let reg = match table.regularity() {
            Regularity::Value(r) => r,
            Regularity::NegInfinity => {
                return Err(Error::InvariantViolation("proper ideal with empty Betti table".into()))
            }
        };
        checks.euler_identity = Some(table.euler_polynomial() == ideal.hilbert_series().raw_numerator());
        if d >= 2 {
            match cs_recursive_with_defect(ideal, &lsop, length.saturated_side, &options.budget) {
                Ok(v) => bounds.cs_recursive = Some(v),
                Err(Error::BudgetExceeded { dim, limit }) => notes.push(format!(
                    "cs_recursive unavailable: section strand of dimension {dim} exceeds budget {limit}"
                )),
                Err(other) => return Err(other),
            }
        }
        let reg_q = big(reg as u64);
        let reg_i = big(reg as u64 + 1);
        let mut push = |name: &'static str, bound: &Option<BigInt>, value: &BigInt, conditional: bool| {
            if let Some(bound) = bound {
                verdicts.push(Verdict {
                    name,
                    holds: value <= bound,
                    conditional,
                });
            }
        };
        push("dim_le1", &bounds.dim_le1, &reg_q, false);
        push("dim_ge2_phi", &bounds.dim_ge2_phi, &reg_q, false);
        push("dim_ge2_Dh", &bounds.dim_ge2_dh, &reg_q, false);
        push("green_variant", &bounds.green_variant, &reg_q, false);
        push("cs_recursive", &bounds.cs_recursive, &reg_q, false);
        push("corollary", &bounds.corollary, &reg_i, false);
        push("classical", &bounds.classical, &reg_i, false);
        push("egh_conditional", &bounds.egh_conditional, &reg_q, true);
        for v in &verdicts {
            if !v.holds {
                if v.conditional {
                    log::warn!("conditional bound {} is below the exact regularity {reg}", v.name);
                } else {
                    log::error!("bound {} fails: exact reg(S/I) = {reg}", v.name);
                }
            }
        }
        exact = Some(Exact {
            reg_quotient: reg,
            reg_ideal: reg + 1,
            betti: table,
        });
    }
    if bounds.dim_ge2_phi.is_some() && bounds.dim_ge2_phi > bounds.dim_ge2_dh {
        return Err(Error::InvariantViolation("Φ-form bound exceeds the D^h form".into()));
    }

    Ok(BoundReport {
        nvars: n,
        prime: ring.prime(),
        generators: ideal.generators().iter().map(ToString::to_string).collect(),
        degree,
        invariants: Invariants {
            d,
            h,
            e,
            hf_degree,
            c,
            cprime,
            lsop_seed: options.seed,
            length,
        },
        phi: phi_value,
        green,
        bounds,
        checks,
        exact,
        keep_betti: options.betti,
        verdicts,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Monomial, PolyRing};

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(2, 1, 2).unwrap(), b(4));
        assert_eq!(phi(3, 0, 2).unwrap(), b(7));
        // c' at the top of its range gives D^h
        for (deg, h) in [(2u32, 2u32), (3, 3), (4, 2)] {
            let top = binomial((deg + h - 1) as i64, (h - 1) as i64) - h as u64;
            assert_eq!(phi(deg, top, h).unwrap(), num_traits::pow(b(deg as i64), h as usize));
        }
        assert!(matches!(phi(2, 2, 2), Err(Error::InvalidArgument(_))));
        assert!(phi(2, 0, 0).is_err());
    }

    #[test]
    fn simple_bounds() {
        assert_eq!(bound_dim_le1(3, 2), b(4));
        assert_eq!(bound_dim_le1(3, 0), b(2));
        assert_eq!(bound_dim_le1(2, 3), b(4));
        assert_eq!(bound_dim_ge2(2, 3, 1, 2, 2, 2).unwrap(), b(12));
        assert_eq!(bound_dim_ge2_dh(2, 3, 2, 2, 2).unwrap(), b(12));
        assert_eq!(bound_dim_ge2(2, 3, 1, 2, 2, 3).unwrap(), b(144));
        assert!(bound_dim_ge2(2, 3, 1, 2, 5, 2).is_err());
        assert!(bound_dim_ge2(2, 3, 1, 2, 2, 1).is_err());
        assert_eq!(bound_corollary(2, 4).unwrap(), b(16));
        assert_eq!(bound_corollary(2, 3).unwrap(), b(4));
        assert_eq!(bound_corollary(1, 5).unwrap(), b(1));
        assert!(bound_corollary(2, 2).is_err());
        assert_eq!(bound_classical(2, 4).unwrap(), b(256));
        assert_eq!(bound_classical(1, 3).unwrap(), b(4));
        assert_eq!(bound_classical(2, 4).unwrap() / bound_corollary(2, 4).unwrap(), b(16));
        // exceeds 64 bits
        assert!(bound_corollary(3, 8).unwrap() > b(i64::MAX));
    }

    fn exact_options() -> AnalyzeOptions {
        AnalyzeOptions {
            exact: true,
            ..AnalyzeOptions::default()
        }
    }

    #[test]
    fn analyze_quadric_complete_intersection() {
        let r = PolyRing::with_default_prime(3).unwrap();
        let gens: Vec<Monomial> = (0..3).map(|i| Monomial::var_pow(3, i, 2)).collect();
        let i = Ideal::from_monomials(r, &gens).unwrap();
        let report = analyze(&i, &exact_options()).unwrap();
        assert_eq!((report.degree, report.invariants.d, report.invariants.c), (2, 0, 3));
        assert_eq!(report.bounds.dim_le1, Some(b(4)));
        assert_eq!(report.exact.as_ref().unwrap().reg_quotient, 3);
        assert_eq!(report.bounds.corollary, Some(b(4)));
        assert_eq!(report.bounds.classical, Some(b(16)));
        assert!(report.all_hold());
        assert_eq!(report.checks.euler_identity, Some(true));
    }

    #[test]
    fn analyze_embedded_point() {
        let r = PolyRing::with_default_prime(2).unwrap();
        let i = Ideal::from_monomials(r, &[Monomial::new(&[2, 0]), Monomial::new(&[1, 1])]).unwrap();
        let report = analyze(&i, &exact_options()).unwrap();
        let inv = &report.invariants;
        assert_eq!((inv.d, inv.h, inv.e, inv.c, inv.cprime), (1, 1, 1, 1, 0));
        assert_eq!(inv.length.artinian_length, 2);
        assert_eq!(report.phi, b(2));
        assert_eq!(report.bounds.dim_le1, Some(b(2)));
        assert_eq!(report.exact.as_ref().unwrap().reg_quotient, 1);
        assert!(report.all_hold());
        assert_eq!(report.bounds.cs_recursive, None);
    }

    #[test]
    fn analyze_power_of_maximal_ideal() {
        let r = PolyRing::with_default_prime(3).unwrap();
        let m = Ideal::maximal_power(r, 3);
        let report = analyze(&m, &exact_options()).unwrap();
        assert_eq!(report.invariants.c, 0);
        assert_eq!(report.bounds.dim_le1, Some(b(2)));
        assert_eq!(report.exact.unwrap().reg_quotient, 2);
    }

    #[test]
    fn analyze_dimension_two() {
        let r = PolyRing::with_default_prime(4).unwrap();
        let (x1, x2, x3) = (r.var(0), r.var(1), r.var(2));
        let i = Ideal::new(r, vec![&x1 * &x1, &x1 * &x2, &(&x2 * &x2) * &x3]).unwrap();
        let report = analyze(&i, &exact_options()).unwrap();
        assert_eq!(report.invariants.d, 2);
        assert!(report.bounds.dim_ge2_phi.is_some());
        assert!(report.bounds.cs_recursive.is_some());
        assert!(report.bounds.dim_ge2_phi <= report.bounds.dim_ge2_dh);
        assert!(report.all_hold(), "{}", report.render_text());
        let json = report.to_json();
        for key in ["ring", "ideal", "invariants", "bounds", "exact", "verdicts"] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
        assert!(json["bounds"]["dim_ge2_Dh"].is_string());
        assert!(json["bounds"]["dim_le1"].is_null());
    }

    #[test]
    fn analyze_rejects_degenerate_ideals() {
        let r = PolyRing::with_default_prime(2).unwrap();
        assert!(matches!(analyze(&Ideal::zero(r), &AnalyzeOptions::default()), Err(Error::InvalidArgument(_))));
        let unit = Ideal::new(r, vec![r.one()]).unwrap();
        assert!(matches!(analyze(&unit, &AnalyzeOptions::default()), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn analyze_is_deterministic() {
        let r = PolyRing::with_default_prime(3).unwrap();
        let (x, y, z) = (r.var(0), r.var(1), r.var(2));
        let i = Ideal::new(r, vec![&(&x * &y) - &(&z * &z), &x * &x]).unwrap();
        let opts = AnalyzeOptions {
            seed: 17,
            ..exact_options()
        };
        let a = analyze(&i, &opts).unwrap().to_json();
        let b = analyze(&i, &opts).unwrap().to_json();
        assert_eq!(a, b);
    }
}
