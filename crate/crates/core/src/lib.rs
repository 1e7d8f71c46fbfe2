//! Counting rational geodesics, fractions and Ford horoballs over the
//! rationals and imaginary quadratic fields `Q(√-d)`.
//!
//! The modules build on each other:
//!
//! * [`field`]: ring arithmetic in `O = Z[ω]`, the splitting character,
//!   `ζ_K(2)`, class numbers and residues.
//! * [`ideal`]: ideals as Hermite normal form lattices, factorization, the
//!   Möbius function and lattice-point enumeration.
//! * [`counting`]: the fraction count `φ_O(x)` by brute force and by Möbius
//!   sieve, the lattice sums `S` and `T`, and the quadratic main term.
//! * [`geodesics`]: depths of rational geodesics, their counting function,
//!   Ford horoball packings and Poincaré series partial sums.
//! * [`cli`]: the `horocount` command line front end.
//!
//! ```
//! use horocount::{counting, field::FieldSpec};
//!
//! let gauss = FieldSpec::imaginary_quadratic(1).unwrap();
//! assert_eq!(counting::phi(&gauss, 2.0), 2);
//! assert_eq!(counting::phi_mobius(&gauss, 100.0).unwrap(), counting::phi(&gauss, 100.0));
//! ```

pub mod cli;
pub mod counting;
pub mod error;
pub mod field;
pub mod geodesics;
pub mod ideal;
pub mod numeric;

pub use error::{Error, Result};
pub use field::{FieldSpec, RingElement};
pub use ideal::LatticeIdeal;
