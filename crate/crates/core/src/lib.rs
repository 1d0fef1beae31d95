//! Descent statistics on the wreath products `C_a ≀ S_n` and the Euler–Mahonian
//! and Eulerian polynomials built from them.
//!
//! The crate is split into three layers:
//!
//! - [`perm`]: colored permutations in window notation, the order `<_L`
//!   determined by a color subset `L`, the statistics `des_L` / `rmaj_{L,n}`,
//!   the insertion bijection `φ_n` and exhaustive group enumeration.
//! - [`algebra`]: exact bivariate polynomials in `(t, q)` over big integers and
//!   truncated power series in `u` with rational polynomial-in-`t` coefficients.
//! - [`distributions`]: the generating polynomials `A^maj_{a,ℓ,n}(t,q)` and
//!   `A_{a,ℓ,n}(t)`, built by enumeration and by recurrence, plus an exact
//!   verifier for the identities relating them.

pub mod algebra;
pub mod distributions;
mod error;
pub mod perm;

pub use error::{Error, Result};
