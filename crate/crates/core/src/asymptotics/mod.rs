//! The measure S_{u,q}, the cycle index of GL(n, q), and exact Plancherel
//! sampling for GL(n, q) through independent cuspidal components.

pub mod certified;
pub mod cycle_index;
pub mod sampler;
pub mod suq;

pub use cycle_index::{
    cycle_index_check, cycle_index_lhs, cycle_index_rhs, CycleIndexCheck, MarkedSeries, Marker,
};
pub use sampler::{acceptance_probability, default_u, gl_plancherel_sample, Attempt, GlSampler};
pub use suq::{limit_marginal, suq_mass, suq_normalizer, suq_weight, SuqMeasure};
