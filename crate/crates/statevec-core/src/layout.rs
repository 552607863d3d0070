//! Register layout for grid-encoded states.

use crate::state::StateError;

/// Number of block-selector qubits; addresses 32 grid-sized blocks.
pub const BLOCK_QUBITS: usize = 5;

/// Qubit assignment for a state holding 32 blocks of an `nx × ny` grid plus
/// two ancillas.
///
/// Basis index `k` decodes as `k = block·(nx·ny) + y·nx + x` with the
/// x-register in the lowest `m_x` bits, the y-register above it, the block
/// selector above that, and ancillas `a1`, `a2` on top.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegisterLayout {
    pub m_x: usize,
    pub m_y: usize,
}

impl RegisterLayout {
    /// Layout for an `nx × ny` grid. Both sizes must be powers of two.
    pub fn for_grid(nx: usize, ny: usize) -> Result<Self, StateError> {
        if nx < 2 || !nx.is_power_of_two() || ny < 2 || !ny.is_power_of_two() {
            return Err(StateError::GridNotPowerOfTwo { nx, ny });
        }
        Ok(Self {
            m_x: nx.trailing_zeros() as usize,
            m_y: ny.trailing_zeros() as usize,
        })
    }

    pub fn nx(&self) -> usize {
        1 << self.m_x
    }

    pub fn ny(&self) -> usize {
        1 << self.m_y
    }

    /// Grid nodes per block.
    pub fn nodes(&self) -> usize {
        self.nx() * self.ny()
    }

    /// Main-register width: `log2(32 · nx · ny)`.
    pub fn n_main(&self) -> usize {
        self.m_x + self.m_y + BLOCK_QUBITS
    }

    /// Total width including both ancillas.
    pub fn n_total(&self) -> usize {
        self.n_main() + 2
    }

    pub fn a1(&self) -> usize {
        self.n_main()
    }

    pub fn a2(&self) -> usize {
        self.n_main() + 1
    }

    /// Qubit indices of the x-register, lowest first.
    pub fn x_qubits(&self) -> Vec<usize> {
        (0..self.m_x).collect()
    }

    /// Qubit indices of the y-register, lowest first.
    pub fn y_qubits(&self) -> Vec<usize> {
        (self.m_x..self.m_x + self.m_y).collect()
    }

    /// Qubit index of block-selector bit `j` (0 ≤ j < 5, j=4 is the top main qubit).
    pub fn block_bit(&self, j: usize) -> usize {
        debug_assert!(j < BLOCK_QUBITS);
        self.m_x + self.m_y + j
    }

    /// All main-register qubits, lowest first.
    pub fn main_qubits(&self) -> Vec<usize> {
        (0..self.n_main()).collect()
    }

    /// Basis index of `(block, x, y)` in the main register.
    pub fn index(&self, block: usize, x: usize, y: usize) -> usize {
        debug_assert!(block < 32 && x < self.nx() && y < self.ny());
        block * self.nodes() + y * self.nx() + x
    }
}
