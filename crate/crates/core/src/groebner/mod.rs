//! Buchberger engine, ideal arithmetic and filter-regular sequences.

mod buchberger;
mod ideal;
mod quotient;
mod regular;

pub use buchberger::{buchberger, normal_form};
pub use ideal::{Ideal, MonomialIdeal};
pub use regular::DEFAULT_MAX_RETRIES;
