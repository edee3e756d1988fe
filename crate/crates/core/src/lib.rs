//! Exact construction of the partition polynomials `P_n(x)`, whose values at
//! positive integers `k` count `k`-colored partitions of `n`, together with
//! real-root isolation, certified analytic bounds, and exhaustive verification
//! sweeps for Bessenrodt-Ono type inequalities.
//!
//! Everything that decides a pass/fail outcome is computed in exact rational
//! arithmetic or with certified rational enclosures of transcendental
//! quantities. Floating point only appears in reporting and in the
//! all-roots sweep used for plotting.

pub mod bounds;
pub mod error;
pub mod exactnum;
pub mod partpoly;
pub mod roots;
pub mod verify;

pub use error::{Error, Result};
pub use exactnum::{Poly, Rational};
pub use partpoly::{ColoredCountTable, PolyCache};
