//! Exact brute-force computations used as ground truth at desk scale.

mod ccw;
mod orientation;
mod star;
mod udim;

pub use ccw::{ccw_exact, is_unit_incomparability};
pub use orientation::{find_transitive_orientation, verify_transitive, Orientation};
pub use star::{s_exact, s_exact_with_limits, StarCertificate};
pub use udim::udim_tiny;
