//! Exact evaluation and machine verification of binomial Fibonacci and
//! Lucas power sums.
//!
//! The crate is layered bottom-up:
//!
//! - [`integers`]: Fibonacci/Lucas values for any integer index, exact
//!   binomials, and the term-by-term [`direct_sum`] oracle.
//! - [`quad`]: exact arithmetic in ℚ(α), α the golden ratio, in the basis
//!   `(1, α)`.
//! - [`transform`]: the power-reduction engine that rewrites
//!   `Σ g_k z^{f_k} W_{j f_k}^m` as a signed combination of kernel
//!   evaluations at powers of α and β.
//! - [`closed_forms`]: the identity catalog, one closed form per named
//!   identity and parity branch, each paired with its left-hand side.
//! - [`verify`]: exhaustive, deterministic grid verification with JSON-lines
//!   reports.
//! - [`bench`]: timing of the oracle against a closed form.
//!
//! ```
//! use binofib::{fib, lucas};
//!
//! assert_eq!(fib(10).to_string(), "55");
//! assert_eq!(fib(-8).to_string(), "-21");
//! assert_eq!(lucas(6).to_string(), "18");
//! ```

pub mod bench;
pub mod closed_forms;
mod error;
pub mod integers;
pub mod quad;
pub mod transform;
pub mod verify;

pub use closed_forms::{
    applicable, catalog, eval_pair, EvalPair, IdentityDescriptor, IdentityId, IdentityParams,
    LhsEmbedding, Slot,
};
pub use error::{Error, Result};
pub use integers::{
    binomial, direct_sum, fib, fib_pair, lucas, BigInt, Index, Rational, SequenceKind,
};
pub use quad::{alpha_pow, beta_pow, QuadNum};
pub use transform::{binomial_rhs, kernel_eval, reduce_f, reduce_l, BinomialKernel, Kernel};
pub use verify::{run_grid, summarize, GridSpec, IntRange, Report, VerificationRecord};
