//! Proof checking for Hilbert systems, many-sided sequents with rule
//! generation and bounded search, and sequent/hypersequent calculi.

pub mod axioms;
pub mod hilbert;
pub mod nseq;
pub mod prover;
pub mod rulegen;
pub mod script;
pub mod semantics;
pub mod sequent;
