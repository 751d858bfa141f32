pub mod bergman;
pub mod error;
pub mod json;
pub mod linalg;
pub mod matroid;
pub mod rational;
pub mod sample;
pub mod set;
pub mod treespace;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use matroid::{verify_basis_exchange, BasisFamily, Matroid};
pub use rational::Rational;
pub use set::ElementSet;
