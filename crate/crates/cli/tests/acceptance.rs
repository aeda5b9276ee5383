//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use regbound_core::bounds::{bound_classical, bound_corollary};
use regbound_core::oracle::regularity_exact;
use regbound_core::ring::{monomials_of_degree, random_form_with};
use regbound_core::{
    run_fuzz, DimFilter, FuzzConfig, FuzzSummary, Ideal, LppIdeal, Monomial, OracleBudget, PolyRing, Regularity,
    TrialRecord, TrialStatus,
};

struct Gate {
    failures: usize,
}

impl Gate {
    fn report(&mut self, id: u32, name: &str, outcome: Result<String, String>) {
        match outcome {
            Ok(detail) => println!("PASS {id:>2} {name}: {detail}"),
            Err(detail) => {
                self.failures += 1;
                println!("FAIL {id:>2} {name}: {detail}");
            }
        }
    }
}

fn passed(summary: &FuzzSummary) -> impl Iterator<Item = &TrialRecord> {
    summary.records.iter().filter(|r| r.status == TrialStatus::Passed)
}

/// Count of trials where `check` was evaluated, or the first violating trial.
fn tally(summaries: &[&FuzzSummary], check: &str) -> Result<usize, String> {
    let mut evaluated = 0;
    for summary in summaries {
        if summary.failed() > 0 {
            let r = summary.records.iter().find(|r| r.status == TrialStatus::Failed).unwrap();
            return Err(format!("trial {} failed: {}", r.index, r.failures.join("; ")));
        }
        for record in passed(summary) {
            for (name, held) in &record.checks {
                if name == check {
                    if !held {
                        return Err(format!("{check} fails on trial {}", record.index));
                    }
                    evaluated += 1;
                }
            }
        }
    }
    Ok(evaluated)
}

fn at_least(count: usize, minimum: usize, what: &str) -> Result<String, String> {
    if count >= minimum {
        Ok(format!("{count} {what}"))
    } else {
        Err(format!("only {count} {what}, need {minimum}"))
    }
}

fn fuzz(trials: usize, seed: u64, dim: DimFilter) -> FuzzSummary {
    let config = FuzzConfig {
        trials,
        seed,
        n_min: 2,
        n_max: 4,
        degree_max: 3,
        dim: Some(dim),
        ..FuzzConfig::default()
    };
    run_fuzz(&config).expect("valid fuzz config")
}

fn lpp_cases() -> Vec<(u32, Vec<u32>, u64)> {
    let mut cases = Vec::new();
    for degree in 2..=4u32 {
        for d1 in 1..=degree {
            for d2 in d1..=degree {
                for d3 in d2..=degree {
                    let degrees = vec![d1, d2, d3];
                    let total = monomials_of_degree(3, degree).len() as u64;
                    for c in 0..=total {
                        cases.push((degree, degrees.clone(), c));
                    }
                }
            }
        }
    }
    cases
}

fn criterion_lpp() -> (Result<String, String>, Result<String, String>) {
    let prime = PolyRing::DEFAULT_PRIME;
    let mut uniform = 0;
    let mut mixed = 0;
    let mut small_c = 0;
    let mut exact_err = None;
    let mut small_err = None;
    for (degree, degrees, c) in lpp_cases() {
        let Ok(lpp) = LppIdeal::construct(3, c, degree, &degrees) else {
            continue;
        };
        let Some(closed) = lpp.closed_form_regularity() else {
            continue;
        };
        let oracle = lpp.oracle_regularity(prime);
        if oracle != Regularity::Value(closed) && exact_err.is_none() {
            exact_err = Some(format!("D={degree}, degrees={degrees:?}, c={c}: closed {closed}, oracle {oracle}"));
        }
        if degrees.iter().all(|&d| d == degree) {
            uniform += 1;
            if c < degree as u64 {
                small_c += 1;
                let expected = c as u32 + degree - 1;
                if (closed != expected || oracle != Regularity::Value(expected)) && small_err.is_none() {
                    small_err = Some(format!("D={degree}, c={c}: closed {closed}, oracle {oracle}, expected {expected}"));
                }
            }
        } else {
            mixed += 1;
        }
    }
    let exact = match exact_err {
        Some(e) => Err(e),
        None if uniform == 0 || mixed == 0 => Err("no cases satisfied the closed-form hypotheses".into()),
        None => Ok(format!("{uniform} uniform and {mixed} mixed-degree cases agree with the oracle")),
    };
    let small = match small_err {
        Some(e) => Err(e),
        None => Ok(format!("{small_c} cases with c < D")),
    };
    (exact, small)
}

fn criterion_length_bound(summaries: &[&FuzzSummary]) -> Result<String, String> {
    let mut count = 0;
    for summary in summaries {
        for record in passed(summary) {
            let report = record.report.as_ref().unwrap();
            let length = BigInt::from(report.invariants.length.artinian_length);
            let power = BigInt::from(report.degree).pow(report.invariants.h as u32);
            if !(length <= report.phi && report.phi <= power) {
                return Err(format!("trial {}: l={length}, Phi={}, D^h={power}", record.index, report.phi));
            }
            count += 1;
        }
    }
    tally(summaries, "artinian_length_bound")?;
    at_least(count, 300, "instances")
}

fn criterion_corollary(summaries: &[&FuzzSummary]) -> Result<String, String> {
    let mut count = 0;
    for summary in summaries {
        for record in passed(summary) {
            if !(3..=4).contains(&record.nvars) {
                continue;
            }
            let report = record.report.as_ref().unwrap();
            let reg = report.exact.as_ref().unwrap().reg_quotient;
            let bound = bound_corollary(report.degree, record.nvars).map_err(|e| e.to_string())?;
            if BigInt::from(reg + 1) > bound {
                return Err(format!("trial {}: reg(I)={} > {bound}", record.index, reg + 1));
            }
            count += 1;
        }
    }
    let worked = [
        (3, bound_corollary(2, 3), bound_classical(2, 3), 4, 16),
        (4, bound_corollary(2, 4), bound_classical(2, 4), 16, 256),
    ];
    for (n, ours, classical, want_ours, want_classical) in worked {
        let (ours, classical) = (ours.map_err(|e| e.to_string())?, classical.map_err(|e| e.to_string())?);
        if ours != BigInt::from(want_ours) || classical != BigInt::from(want_classical) {
            return Err(format!("D=2, n={n}: got {ours} vs {classical}"));
        }
    }
    at_least(count, 100, "instances with n in {3,4}; D=2 gives 4/16 vs 16/256")
}

fn criterion_green(summaries: &[&FuzzSummary]) -> Result<String, String> {
    let c = tally(summaries, "green_c")?;
    let cprime = tally(summaries, "green_cprime")?;
    let from_c = tally(summaries, "green_cprime_from_c")?;
    if c != cprime || c != from_c {
        return Err(format!("uneven coverage: {c}/{cprime}/{from_c}"));
    }
    at_least(c, 100, "instances with d >= 1")
}

fn criterion_oracle(summaries: &[&FuzzSummary]) -> Result<String, String> {
    let euler = tally(summaries, "euler_identity")?;
    let budget = OracleBudget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for h in 2..=3usize {
        for degree in 2..=3u32 {
            let ring = PolyRing::with_default_prime(h).unwrap();
            let powers: Vec<_> = (0..h).map(|i| Monomial::var_pow(h, i, degree)).collect();
            let generic: Vec<_> = (0..h).map(|_| random_form_with(ring, degree, None, &mut rng)).collect();
            let ideals = [
                ("powers", Ideal::from_monomials(ring, &powers).unwrap()),
                ("generic", Ideal::new(ring, generic).unwrap()),
            ];
            for (kind, ideal) in ideals {
                let reg = regularity_exact(&ideal, &budget).map_err(|e| e.to_string())?;
                let expected = (degree - 1) * h as u32;
                if reg != Regularity::Value(expected) {
                    return Err(format!("{kind} CI h={h}, D={degree}: reg {reg}, expected {expected}"));
                }
            }
        }
    }
    at_least(euler, 300, "Euler identities; CIs with h, D in {2,3} have reg (D-1)h")
}

fn criterion_determinism() -> Result<String, String> {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_regbound"))
            .args(["fuzz", "--trials", "50", "--seed", "7", "--json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if !a.status.success() {
        return Err(format!("exit {:?}: {}", a.status.code(), String::from_utf8_lossy(&a.stderr)));
    }
    if a.stdout != b.stdout {
        return Err("summaries differ".into());
    }
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() -> ExitCode {
    let mut gate = Gate { failures: 0 };
    let budget = Duration::from_secs(300);

    let start = Instant::now();
    let low = fuzz(300, 2024, DimFilter::AtMost(1));
    let low_time = start.elapsed();
    let criterion1 = tally(&[&low], "dim_le1").and_then(|count| {
        if low_time > budget {
            Err(format!("took {low_time:?}"))
        } else {
            at_least(count, 200, &format!("instances in {:.1}s", low_time.as_secs_f64()))
        }
    });
    gate.report(1, "dim <= 1 bound is sound", criterion1);

    let high = fuzz(150, 2025, DimFilter::AtLeast(2));
    let criterion2 = tally(&[&high], "dim_ge2_phi").and_then(|phi| {
        let dh = tally(&[&high], "dim_ge2_Dh")?;
        at_least(phi.min(dh), 100, "instances, both forms")
    });
    gate.report(2, "dim >= 2 bounds are sound", criterion2);

    let (lpp_exact, lpp_small) = criterion_lpp();
    gate.report(3, "LPP closed form matches the oracle", lpp_exact);
    gate.report(4, "LPP with c < D has reg c+D-1", lpp_small);

    let all = [&low, &high];
    gate.report(5, "l(R^(d)) <= Phi <= D^h", criterion_length_bound(&all));
    gate.report(6, "length identity", tally(&all, "length_identity").and_then(|n| at_least(n, 100, "instances with d >= 1")));
    gate.report(7, "corollary bound", criterion_corollary(&all));
    gate.report(8, "Green estimates are sound", criterion_green(&all));
    gate.report(9, "oracle self-consistency", criterion_oracle(&all));
    gate.report(10, "fuzz determinism", criterion_determinism());

    if gate.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
