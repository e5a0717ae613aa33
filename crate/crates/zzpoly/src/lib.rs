//! Exact Zhang-Zhang (Clar covering) polynomials of benzenoids.
//!
//! The ZZ polynomial of a benzenoid counts its Clar covers by the number
//! of aromatic rings: the coefficient of `x^k` is the number of covers
//! with exactly `k` rings. This crate computes it three independent ways
//! and cross-checks them:
//!
//! * [`closed_form`]: closed formulas for parallelograms `M(m, n)` and
//!   ribbons `Rb(n1, n2, m1, m2)`, plus the Kekulé / Clar-cover / Clar
//!   number specializations.
//! * [`engine`]: a memoized recursive decomposition that works on any
//!   benzenoid-like subgraph of the hexagonal lattice.
//! * [`covers`]: direct enumeration of every Clar cover, the slow oracle
//!   the other two are verified against.
//!
//! [`interfaces`] implements the interface view of a ribbon (fragment
//! shapes, interface orders, and the central-interface decomposition
//! that proves the ribbon formula), and [`cli`] backs the `zz` binary.

pub mod cli;
pub mod closed_form;
pub mod covers;
pub mod engine;
pub mod interfaces;
pub mod lattice;
pub mod poly;

pub use closed_form::{zz_parallelogram, zz_ribbon, ZzInvariants};
pub use lattice::{Benzenoid, Edge, Hex, ParallelogramParams, RibbonParams, Vertex};
pub use poly::Polynomial;
