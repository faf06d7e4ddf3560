//! Exact-arithmetic computer algebra for representations of Yangians and
//! twisted Yangians realized on Fock spaces of Howe dual pairs.
//!
//! Everything is computed over the rationals (or rational functions of one
//! formal variable); there is no floating point anywhere. The layers are:
//!
//! * [`exact`] — rationals, univariate polynomials, rational functions and
//!   dense matrices over any of them, with kernel / rank / commutant /
//!   algebra-closure routines;
//! * [`roots`] — root data, weights and (extended) Weyl groups for the
//!   classical types `gl_m`, `sp_2m`, `so_2m`;
//! * [`fock`] — the polynomial or Grassmann algebra on `C^m (x) C^n`, its
//!   multidegree components and the Howe homomorphism as explicit matrices;
//! * [`projector`] — truncated extremal projectors and Shapovalov Gram
//!   matrices on Fock components;
//! * [`yangian`] — action matrices for evaluation modules, twisted actions,
//!   relation checkers and the Olshanski homomorphism checks;
//! * [`repclass`] — highest vectors, Drinfeld data, irreducibility and
//!   splitting;
//! * [`intertwine`] — intertwining operators, kernel identification and
//!   quotient construction.

pub mod exact;
pub mod fock;
pub mod intertwine;
pub mod projector;
pub mod repclass;
pub mod roots;
pub mod yangian;

pub use exact::{rat, rat_int, Rat};
