//! Exact exterior-form, Clifford and spinor computations for G₂, Spin(7)
//! and generalized G₂ structures.

pub mod clifford;
pub mod exterior;
pub mod generalized;
pub mod gstructures;
pub mod liegeom;
pub mod linalg;
pub mod scalars;
pub mod spinreps;

pub use exterior::{Blade, FormError, Multivector, Space, SpaceDescriptor};
pub use linalg::Matrix;
pub use scalars::{CScalar, QuadScalar, Scalar, ScalarError};
pub use spinreps::{MatrixRep, Spinor};
