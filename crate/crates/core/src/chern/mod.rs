//! Chern class identities forced by a Legendrian embedding.
//!
//! For `X^n` Legendrian in `P^{2n+1}` with hyperplane class `h`, the contact
//! sequences give `e^{-h} ch(TX) + e^h ch(Omega_X) + e^h + e^{-h} = 2n + 2`,
//! whose even components are the classes `sigma_{2m}(X, h) = 0`. Treating
//! them as polynomials in `h` and eliminating `h` gives the resultants
//! `R_{l,m}`. The remaining functions are the numerical consequences for
//! surfaces.

mod numerology;
mod resultant;
mod sigma;
mod variety;

pub use numerology::{
    codegree_pair, kodaira0_constraints, ruled_obstruction, CodegreePair, Kodaira0, RuledObstruction,
};
pub use resultant::{
    compare_c8, expand_in_n1, resultant_degree, resultant_on_variety, resultant_rlm, resultant_symbolic, C8Report,
    C8Row, TermVerdict, PRINTED_C8,
};
pub use sigma::{
    chern_algebra, chern_names, sigma_class, sigma_class_binomial, sigma_from_generating_identity, sigma_symbolic,
    SigmaPolynomial, SigmaVariant, H, N1,
};
pub use variety::{
    catalog, check_sigma, k3_blowup_12, p1_times_quadric, p1xp1_h_2hprime, projective_space, twisted_cubic,
    veronese_surface, SigmaCheck, VarietyChernData, CATALOG,
};
