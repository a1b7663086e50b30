//! Anti-power structure of the Thue-Morse word.
//!
//! A word is a k-anti-power when it splits into k blocks of equal length that
//! are pairwise distinct. For the Thue-Morse word 𝐭 and a shift j, this crate
//! decides whether the j-fix 𝐭_{j+1} ⋯ 𝐭_{j+km} is a k-anti-power, computes
//! the threshold functions
//!
//! * 𝔎_j(m): the smallest k at which the (j, k, m) word stops being an
//!   anti-power,
//! * γ_j(k): the smallest block length that makes a k-anti-power,
//! * Γ_j(k): the largest odd block length that fails to,
//!
//! and verifies the family of exact upper/lower bounds, divisibility
//! properties and explicit constructions that pin down the linear growth of
//! γ_j and Γ_j. The [`scan`] module turns the point operations into
//! deterministic grid sweeps.
//!
//! 𝐭 itself is served by the [`tm`] module through two independent routes
//! (popcount letter rule and doubling generator), and all bound comparisons
//! are exact rationals: nothing in the crate rounds.
//!
//! ```
//! use antipower::{ApQuery, TmBuffer};
//!
//! let mut buf = TmBuffer::new();
//! // t_3..t_14 split into three blocks of four letters: 1010 0110 0101
//! assert!(antipower::is_anti_power(&mut buf, &ApQuery { j: 2, k: 3, m: 4 }).unwrap());
//! assert_eq!(antipower::gamma(&mut buf, 0, 3).unwrap(), 5);
//! assert_eq!(antipower::big_gamma(&mut buf, 0, 3).unwrap(), Some(3));
//! assert_eq!(antipower::frak_k(&mut buf, 0, 13).unwrap(), 27);
//! ```

pub mod antipower;
pub mod bounds;
pub mod error;
pub mod rational;
pub mod scan;
pub mod tm;

pub use antipower::{
    ap_membership_pair, big_gamma, first_repeat_index, frak_k, gamma, is_anti_power, ApQuery,
    BlockFingerprint,
};
pub use bounds::{
    asymptotic_envelopes, check_gencor, check_lower_bound_gen47, check_prop_yvy, check_upper_bound,
    chi, construction_for, delta_of, ell_of, envelope_f, envelope_h, envelopes_interleave,
    family_point, verify_construction, BoundCheck, Comparison, ConstructionTuple,
    ConstructionVerdict, Envelopes, Family, FamilyPoint, LemmaId,
};
pub use error::{Error, Result};
pub use rational::Ratio;
pub use scan::{
    conjecture_scan, conjecture_sweep, family_probe, mean_violation_count, ratio_sweep,
    ConjectureReport, FamilyProbePoint, RatioRow,
};
pub use tm::{mu_apply, sigma_apply, tm_letter, Bits, Segment, TmBuffer};
