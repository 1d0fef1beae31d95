//! Exact polynomial and power-series arithmetic.

mod bipoly;
mod series;

pub use bipoly::{q_int, q_poch_t, BiPoly, Term};
pub use series::{series_equal, series_exp, series_mul, TPolyQ, USeries};
