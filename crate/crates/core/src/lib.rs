//! Practical sets, A-practical numbers, and the Pr self-map.
//!
//! A finite set A of positive integers is *practical* when every integer up
//! to the sum of A is a sum of distinct elements of A; a number n is
//! *A-practical* when `D(n) ∩ A` is practical, and `Pr(A)` collects all
//! A-practical numbers. This crate makes those notions executable:
//!
//! * [`arith`] — divisor arithmetic: the smallest-prime-factor sieve,
//!   σ/aliquot sums, the factorization criterion for practical numbers.
//! * [`pset`] — practical sets: the prefix characterization, the
//!   definitional subset-sum oracle, greedy representations, extension and
//!   product laws.
//! * [`window`] / [`rule`] — exact computation on windows `{1..N}` and the
//!   symbolic rules that materialize (possibly infinite) sets onto them.
//! * [`pr`] — A-practical membership and `Pr(A)` on windows, data-parallel
//!   with the `parallel` feature (on by default).
//! * [`order`] — the partial order A ≺ B, decided exactly for finite sets
//!   via lcm periodicity, plus minimality, expansion, and removal checkers.
//! * [`dynamics`] — the Pr map as a dynamical system: the 1/min-difference
//!   metric, orbits and period detection, two-periodic pair construction,
//!   finite-Pr constructions, and the full-image preimage search.
//! * [`suites`] — the named verification suites (T1–T15) behind the CLI's
//!   `verify` command and the acceptance tests.

mod bits;

pub mod arith;
pub mod dynamics;
pub mod error;
pub mod order;
pub mod pr;
pub mod pset;
pub mod rule;
pub mod suites;
pub mod window;

pub use arith::FactorSieve;
pub use error::{Error, Result};
pub use pset::{FiniteSet, PracticalityVerdict};
pub use rule::SetRule;
pub use window::WindowSet;
