//! Classical D2Q5 lattice Boltzmann solver for the coupled vorticity
//! transport and stream-function Poisson equations, on the lid-driven
//! cavity geometry.
//!
//! Streaming is periodic in both axes; wall nodes are overwritten right
//! after streaming by the boundary treatment. That combination keeps the
//! solver node-for-node comparable with a cyclic-shift implementation of
//! the propagation step.

mod config;
mod dist;
mod field;
mod lattice;
mod solver;

pub use config::SimConfig;
pub use dist::DistributionSet;
pub use field::{Field, FieldRole, LbmError};
pub use lattice::LatticeSpec;
pub use solver::{
    apply_boundaries, collide, equilibrium_f, equilibrium_g, macros, stream, velocity_from_stream,
    CavityState,
};
