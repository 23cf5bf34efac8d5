//! Hodge numbers of the Kummer-type Calabi–Yau manifolds `X_{d,n}`, the
//! crepant resolutions of `E_d^n / G_{d,n}`.
//!
//! Two independent routes are provided: [`chen_ruan_poincare`] sums the
//! orbifold formula over the group by brute force, and
//! [`closed_form_poincare`] expands the closed generating polynomial. Their
//! integer-exponent coefficients must agree.

mod closed;
mod cohomology;
mod diamond;
mod fixed;
mod group;

pub use closed::{closed_form_invariant_dims, closed_form_poincare, euler_closed};
pub use cohomology::{
    chen_ruan_poincare, invariant_cohomology_dims, orbits_and_stabilizers, span_generators, Budget, OrbifoldModel,
    OrbitInfo, Parallelism,
};
pub use diamond::{hodge_diamond, DiamondJson, HodgeDiamond, Method};
pub use fixed::{act_on_labels, fixed_locus, FixedLocus, FixedPointTable};
pub use group::{age, enumerate_group, group_generators, GroupElement, Modulus};
