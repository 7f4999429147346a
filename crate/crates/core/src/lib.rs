//! Exact combinatory analysis in the style of MacMahon.
//!
//! Everything here is exact unless a function says otherwise: integers are
//! [`BigInt`], rationals are [`BigRat`], and polynomials carry rational
//! coefficients over a fixed, named list of indeterminates. Floating point
//! appears only in the electoral approximations and in tiling geometry.
//!
//! Modules:
//! - [`exactcore`]: polynomials, truncated series, determinants, linear solving
//! - [`partitions`]: partition counts, enumeration and the older recurrences
//! - [`compositions`]: compositions, conjugates, lines of route, Newcomb's deal
//! - [`masterthm`]: the Master Theorem and the rencontres family
//! - [`invariants`]: Ω/O operators on binary quantics, seminvariants, syzygants
//! - [`probelect`]: ballot probabilities and the electoral sampling model
//! - [`recreations`]: cubes, tiles, stamps, Latin squares, rulers, weights
//! - [`patterns`]: edge profiles, repeat tiles, tilings and polyhedral checks
//! - [`divisors`]: divisor series, potency, factorizations, the totient

pub mod compositions;
pub mod divisors;
mod error;
pub mod exactcore;
pub mod invariants;
pub mod masterthm;
pub mod partitions;
pub mod patterns;
pub mod probelect;
pub mod recreations;

pub use error::{Error, Result};
pub use exactcore::{BigInt, BigRat, MultiPoly, TruncSeries};
