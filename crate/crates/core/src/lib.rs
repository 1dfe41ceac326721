//! Exact computations with apolarity of binary forms and the parameter
//! spaces of graded artin level algebras.
//!
//! Everything is computed over the rationals with arbitrary precision; no
//! floating point is used anywhere. The crate is organised bottom-up:
//!
//! * [`exact`]: rationals, dense homogeneous forms, matrices, subspaces.
//! * [`apolarity`]: the differentiation action, catalecticant maps,
//!   annihilators, Hilbert functions, socles, Jordan's apolar bases.
//! * [`level_hf`]: level Hilbert functions in two variables, their
//!   enumeration, generator profiles and Hilbert–Burch witnesses.
//! * [`tangent`]: tangent spaces to the level strata by linear algebra.
//! * [`secant`]: secant planes to the rational normal curve, generalized
//!   additive decompositions and simultaneous Waring problems.
//! * [`schubert`]: Grassmannian cohomology, Porteous classes, Bott's
//!   algorithm, Kronecker coefficients and Lascoux resolutions.
//!
//! Sweeps over many independent inputs run on rayon when the `parallel`
//! feature is enabled (the default); see [`exec`].

pub mod apolarity;
pub mod error;
pub mod exact;
pub mod exec;
pub mod level_hf;
pub mod schubert;
pub mod secant;
pub mod tangent;

pub use error::{Error, Result};
pub use exact::{Form, MatrixQ, Rational, Ring, Subspace};
pub use exec::Exec;
pub use level_hf::HilbertFunction;
