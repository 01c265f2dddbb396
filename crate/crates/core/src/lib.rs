//! Exact arithmetic for odd symmetric functions.
//!
//! The crate implements the skew polynomial ring `OPol_n`, the ring of odd
//! symmetric functions with its `e`, `h` and Schur bases, the signed (odd)
//! plactic ring, and four independent ways of computing odd
//! Littlewood-Richardson coefficients: direct expansion, a signed count of
//! Yamanouchi skew tableaux, and signed lattice-point sums over
//! Littlewood-Richardson triangles and Knutson-Tao hives.

pub mod diagrams;
pub mod error;
pub mod linalg;
pub mod lr;
pub mod oddsym;
pub mod opol;
pub mod plactic;
pub mod polytopes;
pub mod schur;
pub mod sign;
pub mod tableaux;
pub mod verify;

pub use diagrams::{Partition, SkewShape};
pub use error::{Error, Result};
pub use oddsym::{Basis, SymFunction};
pub use opol::{Monomial, SkewPolynomial};
pub use sign::Sign;
pub use tableaux::{SkewTableau, Tableau, Word};
