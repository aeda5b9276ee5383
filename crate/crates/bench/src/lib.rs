//! Fixed workloads shared by the benchmarks in `benches/`.

use regbound_core::parse::parse_ideal;
use regbound_core::ring::monomials_of_degree;
use regbound_core::{Ideal, MonomialIdeal, PolyRing};

fn ideal(text: &str) -> Ideal {
    let (ring, gens) = parse_ideal(text).expect("fixture parses");
    Ideal::new(ring, gens).expect("fixture is homogeneous")
}

/// Twisted cubic curve in P^3.
pub fn twisted_cubic() -> Ideal {
    ideal("ring n=4 p=32003\nx1*x3 - x2^2\nx1*x4 - x2*x3\nx2*x4 - x3^2\n")
}

/// Three dense cubics in four variables.
pub fn dense_cubics() -> Ideal {
    ideal(
        "ring n=4 p=32003\n\
         x1^3 + 2*x1*x2*x3 - x3^3 + 5*x2^2*x4 + x4^3\n\
         x2^3 - 3*x1^2*x4 + x1*x3*x4 + 7*x3^2*x2\n\
         x3^3 + x1*x2^2 - x2*x4^2 + 4*x1*x3^2 + x1^2*x2\n",
    )
}

/// Artinian complete intersection of pure powers.
pub fn powers(nvars: usize, degree: u32) -> Ideal {
    let ring = PolyRing::with_default_prime(nvars).expect("positive nvars");
    let gens: Vec<_> = (0..nvars).map(|i| regbound_core::Monomial::var_pow(nvars, i, degree)).collect();
    Ideal::from_monomials(ring, &gens).expect("monomials")
}

/// Every other monomial of one degree, a monomial ideal with many generators.
pub fn sparse_monomials(nvars: usize, degree: u32) -> MonomialIdeal {
    let gens = monomials_of_degree(nvars, degree).into_iter().step_by(2).collect();
    MonomialIdeal::new(nvars, gens)
}
