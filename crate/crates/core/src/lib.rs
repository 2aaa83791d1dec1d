//! Limit shapes of restricted integer partitions.
//!
//! Exact enumeration, tilted-geometric exact sampling, linear partition
//! bijections, closed-form and quadrature limit-shape curves with their
//! constants, and a numeric calculus of monotone curves.

pub mod biject;
pub mod class;
pub mod curveops;
pub mod enumerate;
pub mod numerics;
pub mod shape;
pub mod partition;
pub mod sampler;
pub mod sizes;

pub use class::{ClassSpec, Mult};
pub use partition::{MultiplicityVector, Partition};
pub use sizes::PartSizeSet;
