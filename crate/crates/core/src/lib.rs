pub mod classes;
pub mod cli;
pub mod error;
pub mod radii;
pub mod series;
pub mod verify;

pub use classes::{ClassParams, HarmonicModel};
pub use error::{Error, Result};
pub use series::{eval_alternating, eval_tail_bounded, Enclosure, TermRule};
pub use radii::{solve_q1_closed_form, solve_radius, q_value, RadiusProblem, RootResult};
pub use verify::{
    area_ratio, bohr_sum, check_theorem, fuzz_theorem, membership_spot_check, modulus_sup,
    sample_admissible_model, sharpness_gap, sharpness_report, theorem_b_functional, FuzzOptions,
    FuzzSummary, SharpnessReport, Status, Verdict,
};
