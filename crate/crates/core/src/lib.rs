//! Exact arithmetic for the correspondence between rank-one Kummer
//! local-system indices on the multiplicative group and depth-bounded
//! characters of the p-adic units.
//!
//! The library is organized around the objects that appear on the two
//! sides of that correspondence and the bridge between them:
//!
//! * [`algebra`] — modular integers, finite fields `F_{p^k}`, Frobenius,
//!   norm/trace, discrete logarithms, CRT.
//! * [`padic`] — truncated p-adic units: Teichmüller lifts, exact
//!   truncated log/exp, unit coordinates.
//! * [`witt`] — Witt vectors of finite length: the universal addition and
//!   multiplication polynomials, ghost components, `W_n(F_p) ≅ Z/p^n`,
//!   Witt trace over extensions, and the unit splitting of `(Z/p^{n+1})^×`.
//! * [`characters`] — exact roots of unity and characters of
//!   `Z/(p-1) × Z/p^n` evaluated on p-adic units, with depth.
//! * [`lang`] — the Lang isogeny on `G_m × W_n` over finite fields:
//!   fibers, deck translations, and the trace-of-Frobenius function.
//! * [`kummer`] — the exponent-matrix side: the monomial maps θ, m, γ, α,
//!   Smith normal form kernels, Cartesian-square checks, and the
//!   index ↔ character dictionary (`padic_trace` / `geometrize`).
//! * [`verify`] — exhaustive and randomized verification suites over the
//!   desk-scale parameter ranges.
//! * [`report`] — serializable result types shared with the CLI.
//!
//! All arithmetic is exact; there are no floating-point values anywhere.

pub mod algebra;
pub mod characters;
pub mod error;
pub mod kummer;
pub mod lang;
pub mod padic;
pub mod report;
pub mod verify;
pub mod witt;

pub use error::{Error, Result};
