//! Irreducible representations of GL(n, q) as families of partitions over
//! cuspidal labels, with dimensions, Plancherel masses and mixing bounds.

pub mod bounds;
pub mod counts;
pub mod cuspidal;
pub mod irreps;

pub use bounds::{
    gl_l2_sum, gl_lower_bound, gl_upper_bound, unipotent_mass_bound, unipotent_tail_bound,
    GlLowerBound,
};
pub use counts::fixed_space_counts;
pub use cuspidal::{cuspidal_count, CuspidalLabel};
pub use irreps::{
    dimension_gl, enumerate_gl_irreps, gl_order, parse_descriptor, plancherel_gl,
    unipotent_marginal, GLIrrep, GLPlancherelEntry,
};
