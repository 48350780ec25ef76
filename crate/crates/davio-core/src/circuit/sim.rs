//! Simulation oracles.
//!
//! Synthesized circuits contain only X/CNOT/SWAP/TOFFOLI permutation gates,
//! so a classical bit-vector simulator is an exact oracle for them.  The
//! unitary builder covers the full gate set for verifying decompositions
//! (little-endian: qubit 0 is the least significant state-index bit).

use num_complex::Complex64;

use super::{Circuit, Gate, GateKind};
use crate::error::{Error, Result};

/// Propagate a classical basis state through a permutation-gate circuit.
pub fn simulate_classical(circuit: &Circuit, input: &[bool]) -> Result<Vec<bool>> {
    assert_eq!(input.len(), circuit.n_qubits, "input width must match the circuit");
    let mut state = input.to_vec();
    for g in &circuit.gates {
        apply_classical(&mut state, g)?;
    }
    Ok(state)
}

fn apply_classical(state: &mut [bool], gate: &Gate) -> Result<()> {
    match gate.kind {
        GateKind::X => state[gate.qubits[0]] ^= true,
        GateKind::Cnot => {
            let c = state[gate.qubits[0]];
            state[gate.qubits[1]] ^= c;
        }
        GateKind::Swap => state.swap(gate.qubits[0], gate.qubits[1]),
        GateKind::Toffoli => {
            let c = state[gate.qubits[0]] && state[gate.qubits[1]];
            state[gate.qubits[2]] ^= c;
        }
        other => return Err(Error::NonPermutationGate(other.mnemonic().to_string())),
    }
    Ok(())
}

/// Full 2^n × 2^n unitary of the circuit as the sequence product of
/// per-gate unitaries.  Row-major; entry (r, c) at index `r * dim + c`.
pub fn circuit_unitary(circuit: &Circuit) -> Result<Vec<Complex64>> {
    if circuit.n_qubits > 10 {
        return Err(Error::DimensionLimit(circuit.n_qubits));
    }
    let dim = 1usize << circuit.n_qubits;
    // Columns are basis-state evolutions; build U column by column.
    let mut columns: Vec<Vec<Complex64>> = (0..dim)
        .map(|c| {
            let mut v = vec![Complex64::ZERO; dim];
            v[c] = Complex64::ONE;
            v
        })
        .collect();
    for gate in &circuit.gates {
        for col in &mut columns {
            apply_to_state(col, gate);
        }
    }
    let mut u = vec![Complex64::ZERO; dim * dim];
    for (c, col) in columns.iter().enumerate() {
        for (r, amp) in col.iter().enumerate() {
            u[r * dim + c] = *amp;
        }
    }
    Ok(u)
}

fn apply_to_state(state: &mut [Complex64], gate: &Gate) {
    let q = &gate.qubits;
    match gate.kind {
        GateKind::X => permute(state, |i| i ^ (1 << q[0])),
        GateKind::Cnot => permute(state, |i| {
            if i >> q[0] & 1 == 1 {
                i ^ (1 << q[1])
            } else {
                i
            }
        }),
        GateKind::Swap => permute(state, |i| {
            let (a, b) = (i >> q[0] & 1, i >> q[1] & 1);
            if a != b {
                i ^ (1 << q[0]) ^ (1 << q[1])
            } else {
                i
            }
        }),
        GateKind::Toffoli => permute(state, |i| {
            if i >> q[0] & 1 == 1 && i >> q[1] & 1 == 1 {
                i ^ (1 << q[2])
            } else {
                i
            }
        }),
        GateKind::Cz => {
            for (i, amp) in state.iter_mut().enumerate() {
                if i >> q[0] & 1 == 1 && i >> q[1] & 1 == 1 {
                    *amp = -*amp;
                }
            }
        }
        GateKind::T => phase_gate(state, q[0], Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4)),
        GateKind::Tdg => {
            phase_gate(state, q[0], Complex64::from_polar(1.0, -std::f64::consts::FRAC_PI_4))
        }
        GateKind::H => {
            let s = std::f64::consts::FRAC_1_SQRT_2;
            one_qubit(state, q[0], [
                Complex64::new(s, 0.0),
                Complex64::new(s, 0.0),
                Complex64::new(s, 0.0),
                Complex64::new(-s, 0.0),
            ]);
        }
        GateKind::V => {
            // square root of X: V² = X
            let p = Complex64::new(0.5, 0.5);
            let m = Complex64::new(0.5, -0.5);
            one_qubit(state, q[0], [p, m, m, p]);
        }
        GateKind::Vdg => {
            let p = Complex64::new(0.5, 0.5);
            let m = Complex64::new(0.5, -0.5);
            one_qubit(state, q[0], [m, p, p, m]);
        }
    }
}

fn permute(state: &mut [Complex64], f: impl Fn(usize) -> usize) {
    let mut out = vec![Complex64::ZERO; state.len()];
    for (i, amp) in state.iter().enumerate() {
        out[f(i)] = *amp;
    }
    state.copy_from_slice(&out);
}

fn phase_gate(state: &mut [Complex64], qubit: usize, phase: Complex64) {
    for (i, amp) in state.iter_mut().enumerate() {
        if i >> qubit & 1 == 1 {
            *amp *= phase;
        }
    }
}

/// Apply a 2×2 matrix [m00 m01; m10 m11] to one qubit.
fn one_qubit(state: &mut [Complex64], qubit: usize, m: [Complex64; 4]) {
    let bit = 1usize << qubit;
    for i in 0..state.len() {
        if i & bit == 0 {
            let (a, b) = (state[i], state[i | bit]);
            state[i] = m[0] * a + m[1] * b;
            state[i | bit] = m[2] * a + m[3] * b;
        }
    }
}

/// Max-norm equality after normalizing away a global phase, taken from the
/// largest-magnitude entry of `a`.
pub fn unitary_equal_up_to_phase(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    assert_eq!(a.len(), b.len());
    let k = (0..a.len())
        .max_by(|&i, &j| a[i].norm().partial_cmp(&a[j].norm()).unwrap())
        .unwrap();
    if a[k].norm() < tol || b[k].norm() < tol {
        return false;
    }
    let phase = b[k] / a[k];
    if (phase.norm() - 1.0).abs() > tol {
        return false;
    }
    a.iter().zip(b).all(|(&x, &y)| (x * phase - y).norm() <= tol)
}
