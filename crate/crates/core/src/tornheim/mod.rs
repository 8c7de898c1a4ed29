//! Tornheim's double zeta function and the A- and Z-functions.

mod afunc;
mod direct;
mod euler;
mod point;
mod zfunc;

pub use direct::{tornheim_direct, tornheim_partial_sum};
pub(crate) use point::lattice_distance;
pub(crate) use zfunc::continued_unguarded;
pub(crate) use afunc::a_shifted_raw;
pub use point::{delta, is_convergent, singular_flags, Hyperplane, Region, SingularFlag, TornheimPoint};
pub use afunc::{a_pole_set, auto_k, A_contour, A_shifted, NEAR_SINGULAR};
pub use zfunc::{tornheim_continued, z_decompose, ZDecomposition, Z_def};
pub use euler::euler_double_zeta;
pub(crate) use euler::{euler_mb, euler_residue_term, EulerContour};
