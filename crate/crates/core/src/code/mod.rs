//! Classical local codes, Tanner codes and the CSS pair of a square complex.

mod alist;
mod css;
mod distance;
mod linear;
mod tanner;

pub use alist::{from_alist, to_alist};
pub use css::{
    cayley_complex, cayley_quantum_tanner, css_dimension, css_from_complex, css_violations, ldpc_report,
    local_parities, CssCode, LdpcReport, MatrixWeights,
};
pub use distance::{
    css_distances, css_distances_or_cap, min_weight_outside, random_information_set_bound, CssDistances, Distance,
    DistanceBound, DistanceOptions, DEFAULT_CAP,
};
pub use linear::{dual_parity, tensor_parity, LinearCode};
pub use tanner::{tanner_parity, LocalViews};
