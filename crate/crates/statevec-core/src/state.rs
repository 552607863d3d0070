//! Statevector storage, gate application, projection and readout.

use num_complex::Complex64;
use thiserror::Error;

use crate::layout::RegisterLayout;
use crate::op::{CircuitOp, Control, GateKind};

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Imaginary residue allowed when reading a block that should be real.
const IMAG_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum StateError {
    #[error("qubit {qubit} out of range for {n_qubits}-qubit state")]
    QubitOutOfRange { qubit: usize, n_qubits: usize },
    #[error("qubit {qubit} appears more than once in targets/controls")]
    DuplicateQubit { qubit: usize },
    #[error("payload length {got}, expected {expected}")]
    PayloadLength { expected: usize, got: usize },
    #[error("diagonal entry {index} has modulus {modulus}, expected 1")]
    NonUnitDiagonal { index: usize, modulus: f64 },
    #[error("cannot encode the zero vector")]
    ZeroVector,
    #[error("target register is not in |0...0> (residual weight {weight:.3e})")]
    RegisterNotGround { weight: f64 },
    #[error("post-selected branch has zero norm")]
    ImpossibleOutcome,
    #[error("block {block} read has imaginary residue {max_imag:.3e}")]
    ImaginaryResidue { block: usize, max_imag: f64 },
    #[error("block {block} out of range (32 blocks)")]
    BlockOutOfRange { block: usize },
    #[error("grid {nx}x{ny} is not a power-of-two grid")]
    GridNotPowerOfTwo { nx: usize, ny: usize },
    #[error("outcome length {got} does not match {expected} ancillas")]
    OutcomeLength { expected: usize, got: usize },
}

/// Full complex amplitude vector over `n_qubits` qubits.
#[derive(Debug, Clone)]
pub struct Statevector {
    amps: Vec<Complex64>,
    n_qubits: usize,
}

impl Statevector {
    /// |0...0⟩ on `n_qubits` qubits.
    pub fn new(n_qubits: usize) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amps[0] = Complex64::new(1.0, 0.0);
        Self { amps, n_qubits }
    }

    /// Wrap an explicit amplitude vector; length must be a power of two.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Self {
        assert!(amps.len().is_power_of_two() && !amps.is_empty());
        let n_qubits = amps.len().trailing_zeros() as usize;
        Self { amps, n_qubits }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Apply one gate in place.
    pub fn apply(&mut self, op: &CircuitOp) -> Result<(), StateError> {
        op.validate(self.n_qubits)?;
        let (cmask, cval) = control_mask(&op.controls);
        match &op.kind {
            GateKind::H { target } => self.apply_h(*target, cmask, cval),
            GateKind::X { target } => self.apply_x(*target, cmask, cval),
            GateKind::Swap { a, b } => self.apply_swap(*a, *b, cmask, cval),
            GateKind::Diagonal { targets, entries } => {
                self.apply_diagonal(targets, entries, cmask, cval)
            }
            GateKind::Prepare {
                targets,
                amplitudes,
            } => return self.prepare(targets, amplitudes).map(|_| ()),
        }
        Ok(())
    }

    pub fn apply_all<'a, I: IntoIterator<Item = &'a CircuitOp>>(
        &mut self,
        ops: I,
    ) -> Result<(), StateError> {
        for op in ops {
            self.apply(op)?;
        }
        Ok(())
    }

    fn apply_h(&mut self, target: usize, cmask: usize, cval: usize) {
        let t = 1usize << target;
        for i in 0..self.amps.len() {
            if i & t == 0 && i & cmask == cval {
                let j = i | t;
                let a = self.amps[i];
                let b = self.amps[j];
                self.amps[i] = (a + b) * FRAC_1_SQRT_2;
                self.amps[j] = (a - b) * FRAC_1_SQRT_2;
            }
        }
    }

    fn apply_x(&mut self, target: usize, cmask: usize, cval: usize) {
        let t = 1usize << target;
        for i in 0..self.amps.len() {
            if i & t == 0 && i & cmask == cval {
                self.amps.swap(i, i | t);
            }
        }
    }

    fn apply_swap(&mut self, a: usize, b: usize, cmask: usize, cval: usize) {
        let (abit, bbit) = (1usize << a, 1usize << b);
        for i in 0..self.amps.len() {
            // Representative of each swapped pair: a-bit set, b-bit clear.
            if i & abit != 0 && i & bbit == 0 && i & cmask == cval {
                self.amps.swap(i, i ^ abit ^ bbit);
            }
        }
    }

    fn apply_diagonal(
        &mut self,
        targets: &[usize],
        entries: &[Complex64],
        cmask: usize,
        cval: usize,
    ) {
        for i in 0..self.amps.len() {
            if i & cmask == cval {
                self.amps[i] *= entries[gather_bits(i, targets)];
            }
        }
    }

    /// Encode `vector / ‖vector‖` into the target register, which must be in
    /// |0…0⟩. Returns the norm used, for classical bookkeeping.
    pub fn prepare(&mut self, targets: &[usize], vector: &[f64]) -> Result<f64, StateError> {
        if vector.len() != 1usize << targets.len() {
            return Err(StateError::PayloadLength {
                expected: 1usize << targets.len(),
                got: vector.len(),
            });
        }
        let norm_sq: f64 = vector.iter().map(|v| v * v).sum();
        if norm_sq == 0.0 {
            return Err(StateError::ZeroVector);
        }
        let norm = norm_sq.sqrt();

        let tmask: usize = targets.iter().map(|t| 1usize << t).sum();
        let off_ground: f64 = self
            .amps
            .iter()
            .enumerate()
            .filter(|(i, _)| i & tmask != 0)
            .map(|(_, a)| a.norm_sqr())
            .sum();
        if off_ground > 1e-24 {
            return Err(StateError::RegisterNotGround { weight: off_ground });
        }

        for base in 0..self.amps.len() {
            if base & tmask != 0 {
                continue;
            }
            let parent = self.amps[base];
            for (k, v) in vector.iter().enumerate() {
                self.amps[base | scatter_bits(k, targets)] = parent * (v / norm);
            }
        }
        Ok(norm)
    }

    /// Project the listed ancillas onto the given outcome bits and renormalize
    /// the surviving branch. Returns the pre-renormalization squared norm of
    /// the branch (the post-selection success probability).
    pub fn project(&mut self, ancillas: &[usize], outcome: &[bool]) -> Result<f64, StateError> {
        if ancillas.len() != outcome.len() {
            return Err(StateError::OutcomeLength {
                expected: ancillas.len(),
                got: outcome.len(),
            });
        }
        for &q in ancillas {
            if q >= self.n_qubits {
                return Err(StateError::QubitOutOfRange {
                    qubit: q,
                    n_qubits: self.n_qubits,
                });
            }
        }
        let mut mask = 0usize;
        let mut val = 0usize;
        for (&q, &b) in ancillas.iter().zip(outcome) {
            mask |= 1 << q;
            if b {
                val |= 1 << q;
            }
        }
        let mut prob = 0.0;
        for (i, a) in self.amps.iter().enumerate() {
            if i & mask == val {
                prob += a.norm_sqr();
            }
        }
        if prob <= f64::MIN_POSITIVE {
            return Err(StateError::ImpossibleOutcome);
        }
        let scale = 1.0 / prob.sqrt();
        for (i, a) in self.amps.iter_mut().enumerate() {
            if i & mask == val {
                *a *= scale;
            } else {
                *a = Complex64::new(0.0, 0.0);
            }
        }
        Ok(prob)
    }

    /// Squared norm of the branch where every listed qubit is |0⟩, by direct
    /// summation; the state is left untouched.
    pub fn branch_probability(&self, zero_qubits: &[usize]) -> f64 {
        let mask: usize = zero_qubits.iter().map(|q| 1usize << q).sum();
        self.amps
            .iter()
            .enumerate()
            .filter(|(i, _)| i & mask == 0)
            .map(|(_, a)| a.norm_sqr())
            .sum()
    }
}

/// Real parts of one grid block, in field order (x fastest). The ancillas
/// must already be projected; an imaginary residue above 1e-9 signals an
/// encoding bookkeeping fault and is an error.
pub fn read_slice(
    state: &Statevector,
    block: usize,
    layout: &RegisterLayout,
) -> Result<Vec<f64>, StateError> {
    if block >= 32 {
        return Err(StateError::BlockOutOfRange { block });
    }
    let nodes = layout.nodes();
    let base = block * nodes;
    let mut out = Vec::with_capacity(nodes);
    let mut max_imag = 0.0f64;
    for node in 0..nodes {
        let amp = state.amplitudes()[base + node];
        max_imag = max_imag.max(amp.im.abs());
        out.push(amp.re);
    }
    if max_imag > IMAG_TOL {
        return Err(StateError::ImaginaryResidue { block, max_imag });
    }
    Ok(out)
}

fn control_mask(controls: &[Control]) -> (usize, usize) {
    let mut mask = 0usize;
    let mut val = 0usize;
    for c in controls {
        mask |= 1 << c.qubit;
        if c.value {
            val |= 1 << c.qubit;
        }
    }
    (mask, val)
}

/// Collect the bits of `index` at `positions` into a compact integer,
/// `positions[0]` becoming bit 0.
fn gather_bits(index: usize, positions: &[usize]) -> usize {
    let mut out = 0usize;
    for (j, &p) in positions.iter().enumerate() {
        out |= ((index >> p) & 1) << j;
    }
    out
}

/// Inverse of [`gather_bits`]: spread bit `j` of `compact` to `positions[j]`.
fn scatter_bits(compact: usize, positions: &[usize]) -> usize {
    let mut out = 0usize;
    for (j, &p) in positions.iter().enumerate() {
        out |= ((compact >> j) & 1) << p;
    }
    out
}
