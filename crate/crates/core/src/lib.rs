//! Optimal non-crossing perfect matchings of planar point sets in special
//! configurations: general position, convex position, points on a circle and
//! doubly collinear bichromatic sets.
//!
//! All decisions are made in exact rational arithmetic.

pub mod circle;
pub mod convex;
pub mod dc;
pub mod dispatch;
pub mod error;
pub mod general;
pub mod generate;
pub mod geom;
pub mod instance;
pub mod io;
pub mod model;
pub mod oracle;
pub mod render;
pub mod scalar;
pub mod scaling;

pub use error::{Error, Result};
pub use geom::{Orientation, Point2};
pub use instance::{CircleInstance, DcInstance, Instance, Kind, PlanarInstance};
pub use model::{
    objective_value, validate_matching, Color, Extremum, Matching, MatchingGeometry, Measure, Mode, Pair,
    SolveOutcome, ValidationReport, Variant,
};
pub use scalar::Scalar;
