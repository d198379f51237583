//! Random walk on the irreducible representations of S_n driven by tensoring
//! with the defining representation.

pub mod bounds;
pub mod distribution;
pub mod kernel;
pub mod moments;
pub mod sample;
pub mod space;
pub mod spectrum;

pub use bounds::{
    sn_cutoff_ceiling, sn_cutoff_steps, sn_l2_sum, sn_lower_bound_estimate, sn_upper_bound,
};
pub use distribution::{
    eta_power_multiplicities, plancherel_sn, tv_curve, tv_to_plancherel, walk_distribution, Mode,
    TvPoint, WalkDistribution,
};
pub use kernel::{kernel_downup, kernel_from_tensor, tensor_multiplicities, SparseKernel};
pub use moments::{
    class_walk_probability, moment_fc, moment_fc_direct, moment_transposition_closed_form,
};
pub use sample::{rsk_oracle, sample_plancherel_sn, sample_walk};
pub use space::{state_space, Distribution, Scalar, StateSpace};
pub use spectrum::{spectrum_sn, SpectrumEntry};
