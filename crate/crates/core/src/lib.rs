//! Exact computation of analytic invariants of finite holomorphic map germs
//! f: (C^n, 0) -> (C^p, 0) with p = 2n (and p = 2n-1 where the theory covers it).
//!
//! The crate provides:
//!
//! - sparse multivariate polynomials over arbitrary-precision rationals,
//!   with "primed" variable doubling, divided differences and minors
//!   ([`poly`], [`matrix`]);
//! - a local standard-basis kernel (Mora normal form, Buchberger-style
//!   completion) and the ideal measurements built on it: colengths,
//!   Hilbert-Samuel truncations and lengths of finite quotients ([`sbasis`]);
//! - the double-point ideal of a map germ and the double-point number d(f)
//!   by three independent routes ([`double_point`]);
//! - closed-form d(f) for quasihomogeneous germs ([`quasihomog`]);
//! - polar multiplicities and the local Euler obstruction of the image via
//!   Le-Greuel Milnor numbers ([`polar`]);
//! - a sampled Whitney-equisingularity report for 1-parameter families
//!   ([`family`]);
//! - a job-file front end used by the `mapgerm` binary ([`job`], [`report`]).
//!
//! All values are immutable after construction and all operations are pure;
//! everything is exact rational arithmetic, never floating point.

pub mod double_point;
pub mod error;
pub mod family;
pub mod job;
pub mod matrix;
pub mod order;
pub mod parse;
pub mod polar;
pub mod poly;
pub mod quasihomog;
pub mod report;
pub mod sbasis;
pub mod variables;

pub use error::Error;
pub use order::MonomialOrder;
pub use poly::{ExponentVector, Polynomial};
pub use sbasis::{BasisConfig, Colength, Ideal, StandardBasis};
pub use variables::{VarRole, VariableSet};
