//! Commutative algebra over prime fields for Castelnuovo–Mumford regularity:
//! Gröbner bases, Hilbert series, exact regularity through Koszul homology,
//! lex-plus-powers ideals, Macaulay expansions and closed-form regularity bounds.

pub mod bounds;
pub mod error;
pub mod field;
pub mod fuzz;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod lpp;
pub mod macaulay;
pub mod oracle;
pub mod parse;
pub mod ring;

pub use bounds::{analyze, AnalyzeOptions, BoundReport};
pub use error::{Error, Result};
pub use fuzz::{run_fuzz, DimFilter, Experiment, FuzzConfig, FuzzSummary, TrialRecord, TrialStatus};
pub use groebner::{Ideal, MonomialIdeal};
pub use hilbert::{HilbertSeries, LengthDefect, PivotStrategy};
pub use lpp::LppIdeal;
pub use macaulay::MacaulayExpansion;
pub use oracle::{BettiTable, OracleBudget, Regularity};
pub use ring::{Monomial, MonomialOrder, PolyRing, Polynomial};
