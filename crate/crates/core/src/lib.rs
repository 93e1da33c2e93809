//! Categorical construction of the root system A(n,m) from coloured Dynkin
//! diagrams: super-representations of coloured quivers, super reflection
//! functors, the root-object construction X_α, the periodic Auslander-Reiten
//! quiver, and the Z₂-graded path/preprojective algebra — all over exact
//! rational arithmetic.

pub mod error;
pub mod gabriel;
pub mod linalg;
pub mod parity;
pub mod pathalg;
pub mod quiver;
pub mod rep;
pub mod roots;
pub mod scalar;
pub mod srep;

pub use error::Error;
pub use parity::Parity;
pub use scalar::{Fp, Rat};

/// Concrete default instantiations over the exact rationals.
pub type Matrix = linalg::Matrix<Rat>;
pub type GradedMap = linalg::GradedMap<Rat>;
pub type Representation = rep::Representation<Rat>;
pub type SuperRep = srep::SuperRep<Rat>;
