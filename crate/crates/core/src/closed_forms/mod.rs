//! Exact and closed-form values at integer points: the finite sums `F`,
//! closed A-values, the parity formula, values at non-positive integers
//! and their path-dependent limits, and the convolution formula.

mod exact;
mod formal;
mod laurent;
pub mod limits;
mod parity;
mod values;

pub use exact::{ExactValue, ZetaSymbol};
pub use formal::{convolution_check_formal, even_product_residual, p_tilde_series, FormalCheck};
pub use laurent::RationalLaurent;
pub use parity::parity_eval;
pub use values::{
    bridging_residual, convolution_check, corollary_values, lemma41_A_int, lemma41_A_negb, lemma41_limit_t,
    lemma41_limit_u, nonpositive_ab, nonpositive_bc_limit, nonpositive_c, F_eval, F_exact, LimitPath,
};
