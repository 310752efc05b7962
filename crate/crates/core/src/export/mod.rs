//! Deterministic text exports: DOT Hasse diagrams and SVG chord diagrams.

mod dot;
mod svg;

pub use dot::hasse_dot;
pub use svg::render_ncs_svg;
