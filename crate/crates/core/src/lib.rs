//! Exact computations for generalized Kummer-type Calabi–Yau manifolds.
//!
//! * [`fracpoly`]: bivariate polynomials with exponents in `(1/12)·Z`.
//! * [`orbifold`]: Chen–Ruan Hodge numbers of `X_{d,n}` by enumeration and
//!   by closed form.
//! * [`toric`]: junior elements, crepant chart certificates and junior
//!   simplex triangulations for cyclic quotient singularities.
//! * [`invariants`]: invariant monomials of diagonal abelian actions.

pub mod error;
pub mod fracpoly;
pub mod invariants;
pub mod orbifold;
pub mod toric;

pub use error::{DiamondError, FracPolyError, InvariantsError, OrbifoldError, ToricError};
pub use fracpoly::{FracExp, FracPoly};
