//! Legendrian charts: polynomial parametrizations of affine cone patches,
//! symplectic forms they are isotropic for, Pfaff graphs and their
//! fundamental forms.

mod chart;
mod pfaff;
mod symplectic;

pub use chart::ChartMap;
pub use pfaff::{
    base_locus_member, base_locus_via_quadrics, contact_line_test, cubic_part, fundamental_form, normalize_jet,
    pfaff_graph, JetData, LineContact,
};
pub use symplectic::{
    find_symplectic_forms, is_legendrian, omega_pairing, FormSearch, LegendrianReport, SymplecticForm, Violation,
};
