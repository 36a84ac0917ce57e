//! The birational contactomorphism between the point-hyperplane flag
//! variety and projective space, and the constructions built on it:
//! conormal lifts, the homaloidal parametrization, and the general position
//! checks for surfaces.

mod conormal;
pub mod facts;
mod gradient;
mod phi;
mod psi;
mod pullback;
mod surface;

pub use conormal::{
    bryant_transform, bryant_transform_implicit, conormal_chart, HypersurfaceData, ImplicitCheck, PatchChoice,
};
pub use gradient::{
    gradient_degree_sample, gradient_fiber, gradient_fiber_enumerated, GradientSample, ENUMERATION_BUDGET,
};
pub use phi::{phi_forward, phi_inverse, phi_polys, projectively_equal, FlagPoint, PhiImage};
pub use psi::{psi_chart, psi_form, psi_homogeneous, self_duality_check, HomaloidalCandidate};
pub use pullback::{contact_pullback_check, OneForm, PullbackReport};
pub use surface::{
    general_position_report, indeterminacy_points, local_equation, second_form_local, second_form_witness, Check,
    PositionReport, SecondForm, Status, TangencyPolynomial, CHECK_BITANGENT, CHECK_C_SMOOTH, CHECK_GAUSS,
    CHECK_NODES_OFF_H0, CHECK_NODES_SINGULAR, CHECK_P0_OFF_Z, CHECK_TANGENTS, CHECK_TRANSVERSAL,
};
