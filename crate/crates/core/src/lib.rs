//! Tornheim's double zeta function, its Mellin–Barnes A-function, exact values
//! at non-positive integers, the SU(3) Witten zeta function, and the
//! functional equation of Euler's double zeta function.

pub mod appendix;
pub mod closed_forms;
pub mod contour;
pub mod error;
pub mod quad;
pub mod special;
pub mod suites;
pub mod tornheim;
pub mod value;
pub mod witten;

pub use error::{Error, Result};
pub use value::{c, cr, Approx, CVal, EvalOptions};
