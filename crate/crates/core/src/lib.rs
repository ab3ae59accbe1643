//! Commutative read-once oblivious algebraic branching programs.
//!
//! Polynomials over the rationals are compiled into commutative ROABPs whose
//! coefficient matrices are the multiplication tables of the apolar ideal
//! `f^⊥`. Every artifact can be checked: commutativity, evaluation in any layer
//! order, exact symbolic expansion, and Nisan width bounds. Diagonal ROABPs
//! from Waring decompositions and commutative set-multilinear ABPs are built
//! from the same machinery.

pub mod abp;
pub mod apolar;
pub mod cli;
pub mod construct;
pub mod det;
pub mod error;
pub mod linalg;
pub mod nisan;
pub mod partials;
pub mod poly;
pub mod sampling;

pub use error::{Error, Result};
