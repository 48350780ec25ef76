//! Lattice-to-circuit synthesis.
//!
//! An n-level lattice becomes a circuit over n+1 data qubits d0..dn and one
//! variable qubit per level.  Data qubits load the leaf constants through X
//! gates (dj holds the leaf at diagonal position n−j), then the n(n+1)/2
//! SWAT blocks run bottom level first, left-to-right within a level.  Each
//! block computes one lattice node while the SWAP twists the carried value
//! onto the runner line, so the finished function arrives on d0.

use super::{decompose_swat, simulate_classical, Circuit, DecompositionStyle, Gate, SwatBlock};
use crate::boolfn::EsopFunction;
use crate::error::{Error, Result};
use crate::lattice::DavioLattice;

/// Synthesis keeps the circuit within 2·12+1 qubits.
pub const MAX_SYNTH_LEVELS: usize = 12;

/// A synthesized circuit with its SWAT-block structure and wire roles.
#[derive(Debug, Clone)]
pub struct SynthesizedCircuit {
    /// Undecomposed form: X initialization then SWAP/TOFFOLI pairs.
    pub circuit: Circuit,
    pub blocks: Vec<SwatBlock>,
    /// Data line carrying f after execution (always d0).
    pub output_line: usize,
    pub data_lines: Vec<usize>,
    /// (wire, variable index) for each level's control line.
    pub var_wires: Vec<(usize, usize)>,
    /// Expansion variable name per lattice level, root level first.
    pub level_vars: Vec<String>,
    pub n_levels: usize,
}

impl SynthesizedCircuit {
    /// Whether some variable drives more than one level; mapping formulas
    /// are upper bounds in that case.
    pub fn has_repeated_vars(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.var_wires.iter().any(|&(_, v)| !seen.insert(v))
    }

    /// Replace every SWAT block by its decomposition, keeping the X prefix.
    pub fn flattened(&self, style: DecompositionStyle) -> Circuit {
        let mut c = Circuit::with_labels(self.circuit.labels.clone());
        for g in &self.circuit.gates {
            if g.kind == super::GateKind::X {
                c.push(g.clone());
            } else {
                break;
            }
        }
        for block in &self.blocks {
            for g in decompose_swat(block, style) {
                c.push(g);
            }
        }
        c
    }

    /// Exhaustive functional check against `f` (the lattice oracle's twin).
    pub fn verify(&self, f: &EsopFunction) -> Result<bool> {
        let base = vec![false; self.circuit.n_qubits];
        verify_synthesis(&self.circuit, f, self.output_line, &base, &self.var_wires)
    }
}

/// Build the SWAT circuit for a fully built lattice.
pub fn synthesize_from_lattice(lattice: &DavioLattice) -> Result<SynthesizedCircuit> {
    let m = lattice.n_levels();
    if m > MAX_SYNTH_LEVELS {
        return Err(Error::QubitBudgetExceeded { levels: m });
    }
    let n_qubits = if m == 0 { 1 } else { 2 * m + 1 };

    let level_vars = lattice.level_var_names();
    let mut labels: Vec<String> = (0..=m).map(|j| format!("d{j}")).collect();
    for t in 0..m {
        let level = m - 1 - t;
        let name = &level_vars[level];
        let repeated = level_vars.iter().filter(|n| *n == name).count() > 1;
        labels.push(if repeated { format!("{name}#{level}") } else { name.clone() });
    }
    debug_assert_eq!(labels.len(), n_qubits);

    let mut circuit = Circuit::with_labels(labels);
    let leaves = lattice.leaves();
    // dj holds the leaf at diagonal position m − j, so f lands on d0
    for j in 0..=m {
        if leaves[m - j] {
            circuit.push(Gate::x(j));
        }
    }

    let var_wire = |level: usize| m + 1 + (m - 1 - level);
    let mut blocks = Vec::with_capacity(m * (m + 1) / 2);
    for level in (0..m).rev() {
        for i in 0..=level {
            let block = SwatBlock::new(level - i, level + 1, var_wire(level), level);
            for g in block.gates() {
                circuit.push(g);
            }
            blocks.push(block);
        }
    }

    let var_wires: Vec<(usize, usize)> =
        (0..m).map(|level| (var_wire(level), lattice.level_var(level))).collect();

    Ok(SynthesizedCircuit {
        circuit,
        blocks,
        output_line: 0,
        data_lines: (0..=m).collect(),
        var_wires,
        level_vars,
        n_levels: m,
    })
}

/// True iff for every assignment the simulated output line equals f's truth
/// table entry.  `base_input` supplies the non-variable wires (normally all
/// zero; leaf constants enter through the circuit's X gates) and
/// `var_wires` maps wires to variable indices.
pub fn verify_synthesis(
    circuit: &Circuit,
    f: &EsopFunction,
    output_line: usize,
    base_input: &[bool],
    var_wires: &[(usize, usize)],
) -> Result<bool> {
    let tt = f.to_truth_table();
    let n = f.vars().len();
    for a in 0u32..1 << n {
        let mut input = base_input.to_vec();
        for &(wire, var) in var_wires {
            input[wire] = a >> var & 1 == 1;
        }
        let out = simulate_classical(circuit, &input)?;
        if out[output_line] != tt.get(a) {
            return Ok(false);
        }
    }
    Ok(true)
}
