//! Special functions and root bracketing shared by the interval machinery.
//!
//! Everything here is a pure function of its arguments.

mod lambert;
mod normal;
mod root;

pub use lambert::{lambert_w0, lambert_wm1, BRANCH_POINT};
pub(crate) use normal::log_two_sided_p;
pub use normal::{log_norm_sf, norm_cdf, norm_pdf, norm_quantile, norm_sf};
pub use root::{find_root, Bracket};

/// Inputs this close to a domain boundary are snapped onto it.
pub(crate) const BOUNDARY_CLAMP: f64 = 1e-15;
