//! Weighted factorizations as points of the order complex `O_g` and the
//! interval complex `K_g`, with exact rational positions.

mod complex;
mod multiset;
pub mod position;
mod weighted;

pub use complex::{build_interval_complex, build_order_complex, ComplexSummary, CoverDegree};
pub use multiset::Multiset;
pub use position::{parse_position, Position};
pub use weighted::{
    circular_normalize, column_normalize, face_shape, ortho_coordinates, rho, simplex_distance,
    support_vector_p, WeightedCircularFactorization, WeightedLinearFactorization,
};
