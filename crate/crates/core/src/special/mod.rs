//! Complex special functions and exact Bernoulli arithmetic.

pub mod bernoulli;
pub mod divisor;
pub mod gamma;
pub mod jet;
pub mod pochhammer;
pub mod psi;
pub mod rational;
pub mod zeta;

pub use bernoulli::{bernoulli, zeta_even_over_pi_power, zeta_nonpos_exact};
pub use divisor::sigma_complex;
pub use gamma::gamma;
pub use pochhammer::{binom_general, pochhammer, pochhammer_shift_deriv};
pub use psi::confluent_psi;
pub use rational::Rational;
pub use zeta::{riemann_zeta, riemann_zeta_deriv};
