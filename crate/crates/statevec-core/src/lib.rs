//! Exact statevector simulation over a fixed register convention.
//!
//! The simulator keeps the full `2^n` complex amplitude vector and applies
//! gates in place over strided index pairs. Controls carry a polarity, so
//! open-circle (trigger on |0⟩) controls are native rather than synthesized
//! with X sandwiches. Post-selection is exact projection; there is no shot
//! sampling.
//!
//! Bit order is little-endian throughout: qubit `k` is bit `k` of the basis
//! index. [`RegisterLayout`] fixes the grid convention used by the flow
//! circuits: x-coordinate in the lowest bits, then y, then a 5-qubit block
//! selector, then two ancillas.

mod layout;
mod op;
mod state;

pub use layout::RegisterLayout;
pub use op::{Circuit, CircuitOp, Control, GateKind};
pub use state::{read_slice, StateError, Statevector};

pub type Amplitude = num_complex::Complex64;
