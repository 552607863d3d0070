//! Gate descriptors and circuit containers.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use crate::state::StateError;

const UNIT_MODULUS_TOL: f64 = 1e-12;

/// One control qubit with its trigger polarity. `value = false` is an
/// open-circle control (fires on |0⟩).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Control {
    pub qubit: usize,
    pub value: bool,
}

impl Control {
    pub fn on(qubit: usize) -> Self {
        Self { qubit, value: true }
    }

    pub fn off(qubit: usize) -> Self {
        Self {
            qubit,
            value: false,
        }
    }
}

/// Gate body; controls are attached at the [`CircuitOp`] level.
#[derive(Debug, Clone, PartialEq)]
pub enum GateKind {
    H { target: usize },
    X { target: usize },
    Swap { a: usize, b: usize },
    /// Unit-modulus diagonal over the listed target qubits. Payload bit `j`
    /// corresponds to `targets[j]`.
    Diagonal {
        targets: Vec<usize>,
        entries: Vec<Complex64>,
    },
    /// Amplitude encoding of a real vector into a target register that must
    /// currently hold |0…0⟩. Payload bit `j` corresponds to `targets[j]`.
    Prepare {
        targets: Vec<usize>,
        amplitudes: Vec<f64>,
    },
}

/// One gate: kind plus polarity-tagged controls.
#[derive(Debug, Clone, PartialEq)]
pub struct CircuitOp {
    pub kind: GateKind,
    pub controls: Vec<Control>,
}

impl CircuitOp {
    pub fn h(target: usize) -> Self {
        Self {
            kind: GateKind::H { target },
            controls: Vec::new(),
        }
    }

    pub fn x(target: usize) -> Self {
        Self {
            kind: GateKind::X { target },
            controls: Vec::new(),
        }
    }

    pub fn swap(a: usize, b: usize) -> Self {
        Self {
            kind: GateKind::Swap { a, b },
            controls: Vec::new(),
        }
    }

    /// Diagonal gate; every entry must have unit modulus. Validated here so
    /// application never re-checks the payload.
    pub fn diagonal(targets: Vec<usize>, entries: Vec<Complex64>) -> Result<Self, StateError> {
        if entries.len() != 1usize << targets.len() {
            return Err(StateError::PayloadLength {
                expected: 1usize << targets.len(),
                got: entries.len(),
            });
        }
        for (index, entry) in entries.iter().enumerate() {
            let modulus = entry.norm();
            if (modulus - 1.0).abs() > UNIT_MODULUS_TOL {
                return Err(StateError::NonUnitDiagonal { index, modulus });
            }
        }
        Ok(Self {
            kind: GateKind::Diagonal { targets, entries },
            controls: Vec::new(),
        })
    }

    pub fn prepare(targets: Vec<usize>, amplitudes: Vec<f64>) -> Result<Self, StateError> {
        if amplitudes.len() != 1usize << targets.len() {
            return Err(StateError::PayloadLength {
                expected: 1usize << targets.len(),
                got: amplitudes.len(),
            });
        }
        if amplitudes.iter().all(|a| *a == 0.0) {
            return Err(StateError::ZeroVector);
        }
        Ok(Self {
            kind: GateKind::Prepare {
                targets,
                amplitudes,
            },
            controls: Vec::new(),
        })
    }

    pub fn with_controls(mut self, controls: Vec<Control>) -> Self {
        self.controls = controls;
        self
    }

    pub fn control(mut self, qubit: usize, value: bool) -> Self {
        self.controls.push(Control { qubit, value });
        self
    }

    pub fn targets(&self) -> Vec<usize> {
        match &self.kind {
            GateKind::H { target } | GateKind::X { target } => vec![*target],
            GateKind::Swap { a, b } => vec![*a, *b],
            GateKind::Diagonal { targets, .. } | GateKind::Prepare { targets, .. } => {
                targets.clone()
            }
        }
    }

    /// Name in the reporting vocabulary; controlled variants get their MC- prefix.
    pub fn kind_name(&self) -> &'static str {
        let controlled = !self.controls.is_empty();
        match (&self.kind, controlled) {
            (GateKind::H { .. }, false) => "H",
            (GateKind::H { .. }, true) => "MC-H",
            (GateKind::X { .. }, false) => "X",
            (GateKind::X { .. }, true) => "MCX",
            (GateKind::Swap { .. }, false) => "SWAP",
            (GateKind::Swap { .. }, true) => "MC-SWAP",
            (GateKind::Diagonal { .. }, _) => "Diagonal",
            (GateKind::Prepare { .. }, _) => "Prepare",
        }
    }

    /// Targets and control qubits must be pairwise disjoint and in range.
    pub fn validate(&self, n_qubits: usize) -> Result<(), StateError> {
        let mut seen = 0u64;
        debug_assert!(n_qubits <= 64);
        for q in self
            .targets()
            .into_iter()
            .chain(self.controls.iter().map(|c| c.qubit))
        {
            if q >= n_qubits {
                return Err(StateError::QubitOutOfRange { qubit: q, n_qubits });
            }
            let bit = 1u64 << q;
            if seen & bit != 0 {
                return Err(StateError::DuplicateQubit { qubit: q });
            }
            seen |= bit;
        }
        Ok(())
    }

    /// Exact inverse. `None` for Prepare, which discards the prior register
    /// content and has no gate-level inverse.
    pub fn inverse(&self) -> Option<CircuitOp> {
        let kind = match &self.kind {
            GateKind::H { target } => GateKind::H { target: *target },
            GateKind::X { target } => GateKind::X { target: *target },
            GateKind::Swap { a, b } => GateKind::Swap { a: *a, b: *b },
            GateKind::Diagonal { targets, entries } => GateKind::Diagonal {
                targets: targets.clone(),
                entries: entries.iter().map(|e| e.conj()).collect(),
            },
            GateKind::Prepare { .. } => return None,
        };
        Some(CircuitOp {
            kind,
            controls: self.controls.clone(),
        })
    }
}

impl fmt::Display for CircuitOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind_name())?;
        let targets: Vec<String> = self.targets().iter().map(|t| t.to_string()).collect();
        write!(f, " t=[{}]", targets.join(","))?;
        if !self.controls.is_empty() {
            let ctrls: Vec<String> = self
                .controls
                .iter()
                .map(|c| format!("{}{}", if c.value { '+' } else { '-' }, c.qubit))
                .collect();
            write!(f, " c=[{}]", ctrls.join(","))?;
        }
        match &self.kind {
            GateKind::Diagonal { entries, .. } => {
                write!(f, " payload={}", payload_digest_complex(entries))?;
            }
            GateKind::Prepare { amplitudes, .. } => {
                write!(f, " payload={}", payload_digest_real(amplitudes))?;
            }
            _ => {}
        }
        Ok(())
    }
}

fn payload_digest_real(values: &[f64]) -> String {
    let mut h: u64 = 0xcbf29ce484222325;
    for v in values {
        for byte in v.to_bits().to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    }
    format!("{:016x}", h)
}

fn payload_digest_complex(values: &[Complex64]) -> String {
    let flat: Vec<f64> = values.iter().flat_map(|c| [c.re, c.im]).collect();
    payload_digest_real(&flat)
}

/// Ordered gate list with counting and dump support.
#[derive(Debug, Clone, Default)]
pub struct Circuit {
    ops: Vec<CircuitOp>,
}

impl Circuit {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, op: CircuitOp) {
        self.ops.push(op);
    }

    pub fn extend(&mut self, other: Circuit) {
        self.ops.extend(other.ops);
    }

    pub fn ops(&self) -> &[CircuitOp] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Gate counts by reporting name.
    pub fn gate_counts(&self) -> BTreeMap<String, usize> {
        let mut counts = BTreeMap::new();
        for op in &self.ops {
            *counts.entry(op.kind_name().to_string()).or_insert(0) += 1;
        }
        counts
    }

    /// Reversed op list with conjugated diagonals. `None` if any op is a Prepare.
    pub fn inverse(&self) -> Option<Circuit> {
        let mut ops = Vec::with_capacity(self.ops.len());
        for op in self.ops.iter().rev() {
            ops.push(op.inverse()?);
        }
        Some(Circuit { ops })
    }

    /// Textual dump, one gate per line, for debugging and regression diffs.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for op in &self.ops {
            out.push_str(&op.to_string());
            out.push('\n');
        }
        out
    }
}

impl FromIterator<CircuitOp> for Circuit {
    fn from_iter<T: IntoIterator<Item = CircuitOp>>(iter: T) -> Self {
        Circuit {
            ops: iter.into_iter().collect(),
        }
    }
}
