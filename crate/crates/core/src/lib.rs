//! Support-cone geometry for smooth strictly convex bodies.
//!
//! The crate models convex bodies through their support functions, extracts
//! grazes (shadow boundaries) and support double-cones seen from external
//! apexes, tests translation-congruence of cone pairs, fits (inverse)
//! homotheties between corresponded grazes, and assembles those pieces into
//! symmetry verdicts for a body `K` nested inside a star-shaped hypersurface
//! `L`. A separate planar module handles isoptic curves, where the analogous
//! congruence hypothesis provably does not force symmetry.
//!
//! `no_std` with `alloc`; all operations are pure functions of immutable
//! inputs and safe to call concurrently.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod body;
pub mod cone;
pub mod error;
pub mod grid;
pub mod homothety;
pub mod isoptic;
pub mod linalg;
pub mod neldermead;
pub mod rootfind;
pub mod surface;
pub mod verifier;

pub use body::{central_asymmetry, estimate_center, ConvexBody, Hyperplane};
pub use cone::{
    cone_translation_distance, direction_set, graze, graze_diameter, tangency_gap, Contact,
    DoubleCone, Graze,
};
pub use error::{GeomError, Result};
pub use homothety::{
    homothety_fit, paired_graze, parallel_defect, unit_inverse_check, CorrespondedPair,
    HomothetyFit,
};
pub use isoptic::{isoptic_curve, remark2_report, visual_angle, IsopticCurve, PlanarBody, Remark2Report};
pub use surface::{Perturbation, StarSurface, SurfacePath};
pub use verifier::{
    appendix_path_search, check_theorem, conjecture1_scan, find_partner, verify_conclusion,
    verify_hypothesis, ApexRecord, Conclusion, Conjecture1Record, Partner, PartnerContext,
    PathRecord, Scenario, TheoremReport, Tolerances, Verdict,
};
