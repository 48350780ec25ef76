//! Gate-level circuit IR, lattice-to-circuit synthesis, gate
//! decompositions, and the classical/unitary simulators used as oracles.

mod decompose;
mod sim;
mod synth;

pub use decompose::{decompose_swap, decompose_swat, decompose_toffoli, DecompositionStyle};
pub use sim::{circuit_unitary, simulate_classical, unitary_equal_up_to_phase};
pub use synth::{synthesize_from_lattice, verify_synthesis, SynthesizedCircuit};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GateKind {
    #[serde(rename = "x")]
    X,
    #[serde(rename = "h")]
    H,
    #[serde(rename = "t")]
    T,
    #[serde(rename = "tdg")]
    Tdg,
    #[serde(rename = "v")]
    V,
    #[serde(rename = "vdg")]
    Vdg,
    #[serde(rename = "cx")]
    Cnot,
    #[serde(rename = "cz")]
    Cz,
    #[serde(rename = "swap")]
    Swap,
    #[serde(rename = "ccx")]
    Toffoli,
}

impl GateKind {
    pub fn arity(self) -> usize {
        match self {
            GateKind::X | GateKind::H | GateKind::T | GateKind::Tdg | GateKind::V | GateKind::Vdg => 1,
            GateKind::Cnot | GateKind::Cz | GateKind::Swap => 2,
            GateKind::Toffoli => 3,
        }
    }

    pub fn mnemonic(self) -> &'static str {
        match self {
            GateKind::X => "x",
            GateKind::H => "h",
            GateKind::T => "t",
            GateKind::Tdg => "tdg",
            GateKind::V => "v",
            GateKind::Vdg => "vdg",
            GateKind::Cnot => "cx",
            GateKind::Cz => "cz",
            GateKind::Swap => "swap",
            GateKind::Toffoli => "ccx",
        }
    }

    /// Permutation gates map computational basis states to basis states.
    pub fn is_permutation(self) -> bool {
        matches!(self, GateKind::X | GateKind::Cnot | GateKind::Swap | GateKind::Toffoli)
    }
}

/// One gate; controls are listed before targets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gate {
    pub kind: GateKind,
    pub qubits: Vec<usize>,
}

impl Gate {
    pub fn new(kind: GateKind, qubits: Vec<usize>) -> Self {
        assert_eq!(qubits.len(), kind.arity(), "operand count must match gate arity");
        for (i, q) in qubits.iter().enumerate() {
            assert!(!qubits[..i].contains(q), "gate operands must be distinct");
        }
        Gate { kind, qubits }
    }

    pub fn x(q: usize) -> Self {
        Gate::new(GateKind::X, vec![q])
    }

    pub fn h(q: usize) -> Self {
        Gate::new(GateKind::H, vec![q])
    }

    pub fn t(q: usize) -> Self {
        Gate::new(GateKind::T, vec![q])
    }

    pub fn tdg(q: usize) -> Self {
        Gate::new(GateKind::Tdg, vec![q])
    }

    pub fn v(q: usize) -> Self {
        Gate::new(GateKind::V, vec![q])
    }

    pub fn vdg(q: usize) -> Self {
        Gate::new(GateKind::Vdg, vec![q])
    }

    pub fn cnot(control: usize, target: usize) -> Self {
        Gate::new(GateKind::Cnot, vec![control, target])
    }

    pub fn cz(a: usize, b: usize) -> Self {
        Gate::new(GateKind::Cz, vec![a, b])
    }

    pub fn swap(a: usize, b: usize) -> Self {
        Gate::new(GateKind::Swap, vec![a, b])
    }

    pub fn toffoli(c1: usize, c2: usize, target: usize) -> Self {
        Gate::new(GateKind::Toffoli, vec![c1, c2, target])
    }
}

/// Ordered gate sequence over indexed qubits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Circuit {
    pub n_qubits: usize,
    pub labels: Vec<String>,
    pub gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n_qubits: usize) -> Self {
        Circuit {
            n_qubits,
            labels: (0..n_qubits).map(|i| format!("q{i}")).collect(),
            gates: Vec::new(),
        }
    }

    pub fn with_labels(labels: Vec<String>) -> Self {
        Circuit { n_qubits: labels.len(), labels, gates: Vec::new() }
    }

    pub fn push(&mut self, gate: Gate) {
        assert!(
            gate.qubits.iter().all(|&q| q < self.n_qubits),
            "gate operand out of range"
        );
        self.gates.push(gate);
    }

    pub fn count_kind(&self, kind: GateKind) -> usize {
        self.gates.iter().filter(|g| g.kind == kind).count()
    }

    /// Undirected pairs of qubits touched by two-qubit gates (Toffolis are
    /// not flattened; use a decomposition first to get its footprint).
    pub fn interaction_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = self
            .gates
            .iter()
            .filter(|g| g.kind.arity() == 2)
            .map(|g| {
                let (a, b) = (g.qubits[0], g.qubits[1]);
                (a.min(b), a.max(b))
            })
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        pairs
    }

    /// QASM-like text, one gate per line: `ccx q[0],q[1],q[2]`.
    pub fn to_qasm(&self) -> String {
        let mut out = String::new();
        for g in &self.gates {
            let ops: Vec<String> = g.qubits.iter().map(|q| format!("q[{q}]")).collect();
            out.push_str(&format!("{} {}\n", g.kind.mnemonic(), ops.join(",")));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n_qubits": self.n_qubits,
            "labels": self.labels,
            "gates": self.gates,
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let n_qubits = value["n_qubits"]
            .as_u64()
            .ok_or_else(|| Error::InconsistentReport("missing n_qubits".into()))?
            as usize;
        let labels: Vec<String> = serde_json::from_value(value["labels"].clone())
            .map_err(|e| Error::InconsistentReport(format!("bad labels: {e}")))?;
        let gates: Vec<Gate> = serde_json::from_value(value["gates"].clone())
            .map_err(|e| Error::InconsistentReport(format!("bad gates: {e}")))?;
        for (i, g) in gates.iter().enumerate() {
            let distinct =
                g.qubits.iter().enumerate().all(|(j, q)| !g.qubits[..j].contains(q));
            if g.qubits.len() != g.kind.arity()
                || !distinct
                || g.qubits.iter().any(|&q| q >= n_qubits)
            {
                return Err(Error::InconsistentReport(format!("malformed gate {i}")));
            }
        }
        Ok(Circuit { n_qubits, labels, gates })
    }
}

/// A SWAP on two data qubits followed by a Toffoli with one variable
/// control: the repeating block of lattice-synthesized circuits.
///
/// Expanded form: `SWAP(data_hi, data_lo)` then
/// `TOFFOLI(ctrl, data_lo → data_hi)`.  On basis states the block computes
/// `hi' = lo_old ⊕ ctrl·hi_old`, `lo' = hi_old`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwatBlock {
    pub data_hi: usize,
    pub data_lo: usize,
    pub ctrl: usize,
    /// Lattice level this block realizes (bottom level emitted first).
    pub level: usize,
}

impl SwatBlock {
    pub fn new(data_hi: usize, data_lo: usize, ctrl: usize, level: usize) -> Self {
        assert!(
            data_hi != data_lo && data_hi != ctrl && data_lo != ctrl,
            "SWAT operands must be distinct"
        );
        SwatBlock { data_hi, data_lo, ctrl, level }
    }

    pub fn gates(&self) -> [Gate; 2] {
        [
            Gate::swap(self.data_hi, self.data_lo),
            Gate::toffoli(self.ctrl, self.data_lo, self.data_hi),
        ]
    }
}
