//! A workbench for many-valued matrix logics.
//!
//! The crate covers five value domains (finite levels, exact rationals in
//! `[0,1]`, fixed-precision p-adic integers, symbolic non-Archimedean
//! "hyper" values, and interval-neutrosophic triples), formula evaluation
//! and tautology checking over them, Hilbert / sequent / hypersequent
//! proof checking, many-sided sequent rule generation from truth tables
//! with a bounded cut-free prover, and p-adic ensemble/formula
//! probability.
//!
//! All arithmetic is exact; there are no floating-point values anywhere.

pub mod dsm;
pub mod hyper;
pub mod matrices;
pub mod neutro;
pub mod padic;
pub mod prob;
pub mod proofs;
pub mod rational;
pub mod syntax;
