//! SWAP, Toffoli and SWAT decompositions into single- and two-qubit gates.
//!
//! Every style's gate list equals the Toffoli unitary up to global phase.
//! The triangle styles interact on all three qubit pairs; `LinearNn` never
//! touches the control-control pair, so a SWAT decomposed with it only
//! needs the upside-down V connectivity (target adjacent to both controls).

use serde::{Deserialize, Serialize};

use super::{Gate, GateKind, SwatBlock};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DecompositionStyle {
    /// Standard 6-CNOT, 7-T network.
    #[serde(rename = "qiskit-standard")]
    QiskitStandard,
    /// Controlled-V/V† construction; V is the square root of NOT.
    #[serde(rename = "barenco")]
    Barenco,
    /// Phase-polynomial form: CCZ conjugated by Hadamards on the target.
    #[serde(rename = "amy")]
    Amy,
    /// Phase-polynomial form routed so no two-qubit gate acts on the
    /// (control, control) pair.
    #[serde(rename = "linear-nn")]
    LinearNn,
}

impl DecompositionStyle {
    pub const ALL: [DecompositionStyle; 4] = [
        DecompositionStyle::QiskitStandard,
        DecompositionStyle::Barenco,
        DecompositionStyle::Amy,
        DecompositionStyle::LinearNn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DecompositionStyle::QiskitStandard => "qiskit-standard",
            DecompositionStyle::Barenco => "barenco",
            DecompositionStyle::Amy => "amy",
            DecompositionStyle::LinearNn => "linear-nn",
        }
    }
}

impl std::str::FromStr for DecompositionStyle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DecompositionStyle::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| Error::InconsistentReport(format!("unknown decomposition style `{s}`")))
    }
}

/// Three alternating CNOTs.
pub fn decompose_swap(gate: &Gate) -> Result<Vec<Gate>> {
    if gate.kind != GateKind::Swap {
        return Err(Error::WrongGateKind {
            expected: "swap".into(),
            found: gate.kind.mnemonic().into(),
        });
    }
    let (a, b) = (gate.qubits[0], gate.qubits[1]);
    Ok(vec![Gate::cnot(a, b), Gate::cnot(b, a), Gate::cnot(a, b)])
}

/// Controlled-V(c → t), exact: H·CS·H with CS built from T gates.
fn controlled_v(c: usize, t: usize) -> Vec<Gate> {
    vec![
        Gate::h(t),
        Gate::t(c),
        Gate::t(t),
        Gate::cnot(c, t),
        Gate::tdg(t),
        Gate::cnot(c, t),
        Gate::h(t),
    ]
}

fn controlled_vdg(c: usize, t: usize) -> Vec<Gate> {
    vec![
        Gate::h(t),
        Gate::cnot(c, t),
        Gate::t(t),
        Gate::cnot(c, t),
        Gate::tdg(t),
        Gate::tdg(c),
        Gate::h(t),
    ]
}

pub fn decompose_toffoli(gate: &Gate, style: DecompositionStyle) -> Result<Vec<Gate>> {
    if gate.kind != GateKind::Toffoli {
        return Err(Error::WrongGateKind {
            expected: "ccx".into(),
            found: gate.kind.mnemonic().into(),
        });
    }
    let (c1, c2, t) = (gate.qubits[0], gate.qubits[1], gate.qubits[2]);
    Ok(match style {
        DecompositionStyle::QiskitStandard => vec![
            Gate::h(t),
            Gate::cnot(c2, t),
            Gate::tdg(t),
            Gate::cnot(c1, t),
            Gate::t(t),
            Gate::cnot(c2, t),
            Gate::tdg(t),
            Gate::cnot(c1, t),
            Gate::t(c2),
            Gate::t(t),
            Gate::h(t),
            Gate::cnot(c1, c2),
            Gate::t(c1),
            Gate::tdg(c2),
            Gate::cnot(c1, c2),
        ],
        DecompositionStyle::Barenco => {
            let mut g = controlled_v(c2, t);
            g.push(Gate::cnot(c1, c2));
            g.extend(controlled_vdg(c2, t));
            g.push(Gate::cnot(c1, c2));
            g.extend(controlled_v(c1, t));
            g
        }
        DecompositionStyle::Amy => {
            // CCZ as a phase polynomial (T on a, b, c, a⊕b⊕c; T† on the
            // pairwise parities), conjugated by H on the target.
            let (a, b, c) = (c1, c2, t);
            vec![
                Gate::h(t),
                Gate::cnot(b, c),
                Gate::tdg(c),
                Gate::cnot(a, c),
                Gate::t(c),
                Gate::cnot(b, c),
                Gate::tdg(c),
                Gate::cnot(a, c),
                Gate::t(c),
                Gate::cnot(a, b),
                Gate::tdg(b),
                Gate::t(a),
                Gate::cnot(a, b),
                Gate::t(b),
                Gate::h(t),
            ]
        }
        DecompositionStyle::LinearNn => {
            // Same phase polynomial, with the a⊕b parity computed on the
            // target wire so the controls never interact directly.
            let (a, b) = (c1, c2);
            vec![
                Gate::h(t),
                Gate::t(a),
                Gate::t(b),
                Gate::t(t),
                Gate::cnot(a, t), // t: a⊕c
                Gate::tdg(t),
                Gate::cnot(b, t), // t: a⊕b⊕c
                Gate::t(t),
                Gate::cnot(a, t), // t: b⊕c
                Gate::tdg(t),
                Gate::cnot(b, t), // t: c
                Gate::cnot(t, a), // a: a⊕c
                Gate::cnot(a, t), // t: a
                Gate::cnot(b, t), // t: a⊕b
                Gate::tdg(t),
                Gate::cnot(b, t), // t: a
                Gate::cnot(a, t), // t: c
                Gate::cnot(t, a), // a: a
                Gate::h(t),
            ]
        }
    })
}

/// SWAP decomposition followed by the chosen Toffoli decomposition.
pub fn decompose_swat(block: &SwatBlock, style: DecompositionStyle) -> Vec<Gate> {
    let [swap, toffoli] = block.gates();
    let mut gates = decompose_swap(&swap).expect("block swap is a swap");
    gates.extend(decompose_toffoli(&toffoli, style).expect("block toffoli is a toffoli"));
    gates
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::sim::{circuit_unitary, simulate_classical, unitary_equal_up_to_phase};
    use crate::circuit::Circuit;

    fn unitary_of(gates: &[Gate], n: usize) -> Vec<num_complex::Complex64> {
        let mut c = Circuit::new(n);
        for g in gates {
            c.push(g.clone());
        }
        circuit_unitary(&c).unwrap()
    }

    #[test]
    fn swap_decomposition_is_three_alternating_cnots() {
        let g = Gate::swap(0, 1);
        let d = decompose_swap(&g).unwrap();
        assert_eq!(d, vec![Gate::cnot(0, 1), Gate::cnot(1, 0), Gate::cnot(0, 1)]);
        let u = unitary_of(&d, 2);
        let su = unitary_of(std::slice::from_ref(&g), 2);
        assert!(unitary_equal_up_to_phase(&u, &su, 1e-9));
    }

    #[test]
    fn swap_applied_twice_is_identity() {
        let mut c = Circuit::new(2);
        for g in decompose_swap(&Gate::swap(0, 1)).unwrap() {
            c.push(g);
        }
        for g in decompose_swap(&Gate::swap(0, 1)).unwrap() {
            c.push(g);
        }
        for input in 0..4u8 {
            let bits = vec![input & 1 == 1, input & 2 == 2];
            assert_eq!(simulate_classical(&c, &bits).unwrap(), bits);
        }
    }

    #[test]
    fn wrong_kind_errors() {
        assert!(matches!(
            decompose_swap(&Gate::cnot(0, 1)),
            Err(Error::WrongGateKind { .. })
        ));
        assert!(matches!(
            decompose_toffoli(&Gate::swap(0, 1), DecompositionStyle::Barenco),
            Err(Error::WrongGateKind { .. })
        ));
    }

    #[test]
    fn every_style_matches_ccx_up_to_phase() {
        let ccx = unitary_of(&[Gate::toffoli(0, 1, 2)], 3);
        for style in DecompositionStyle::ALL {
            let d = decompose_toffoli(&Gate::toffoli(0, 1, 2), style).unwrap();
            let u = unitary_of(&d, 3);
            assert!(
                unitary_equal_up_to_phase(&u, &ccx, 1e-9),
                "style {} does not match CCX",
                style.name()
            );
        }
    }

    #[test]
    fn basis_columns_flip_target_iff_both_controls() {
        for style in DecompositionStyle::ALL {
            let d = decompose_toffoli(&Gate::toffoli(0, 1, 2), style).unwrap();
            let u = unitary_of(&d, 3);
            for input in 0..8usize {
                let expected = if input & 0b011 == 0b011 { input ^ 0b100 } else { input };
                let amp = u[expected * 8 + input];
                assert!((amp.norm() - 1.0).abs() < 1e-9, "style {}", style.name());
            }
        }
    }

    fn pairs_of(gates: &[Gate]) -> Vec<(usize, usize)> {
        let mut c = Circuit::new(3);
        for g in gates {
            c.push(g.clone());
        }
        c.interaction_pairs()
    }

    #[test]
    fn triangle_styles_touch_all_three_pairs() {
        for style in [
            DecompositionStyle::QiskitStandard,
            DecompositionStyle::Barenco,
            DecompositionStyle::Amy,
        ] {
            let d = decompose_toffoli(&Gate::toffoli(0, 1, 2), style).unwrap();
            assert_eq!(pairs_of(&d), vec![(0, 1), (0, 2), (1, 2)], "style {}", style.name());
        }
    }

    #[test]
    fn linear_nn_avoids_the_control_control_pair() {
        let d = decompose_toffoli(&Gate::toffoli(0, 1, 2), DecompositionStyle::LinearNn).unwrap();
        assert_eq!(pairs_of(&d), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn swat_decomposition_is_swap_then_toffoli() {
        let block = SwatBlock::new(0, 1, 2, 0);
        for style in DecompositionStyle::ALL {
            let d = decompose_swat(&block, style);
            let expected = unitary_of(&block.gates(), 3);
            let got = unitary_of(&d, 3);
            assert!(unitary_equal_up_to_phase(&got, &expected, 1e-9));
        }
    }

    #[test]
    fn swat_linear_nn_interactions_form_a_v() {
        // hi = 0, lo = 1, ctrl = 2: edges (0,1) and (0,2) only
        let block = SwatBlock::new(0, 1, 2, 0);
        let d = decompose_swat(&block, DecompositionStyle::LinearNn);
        assert_eq!(pairs_of(&d), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn swat_classical_semantics() {
        // (hi, lo) swapped, then hi ⊕= ctrl·lo
        let block = SwatBlock::new(0, 1, 2, 0);
        let mut c = Circuit::new(3);
        for g in block.gates() {
            c.push(g);
        }
        for input in 0..8u8 {
            let hi = input & 1 == 1;
            let lo = input & 2 == 2;
            let ctrl = input & 4 == 4;
            let out = simulate_classical(&c, &[hi, lo, ctrl]).unwrap();
            assert_eq!(out[0], lo ^ (ctrl && hi));
            assert_eq!(out[1], hi);
            assert_eq!(out[2], ctrl);
        }
    }

    #[test]
    fn swat_decomposition_agrees_with_block_on_basis_states() {
        let block = SwatBlock::new(0, 1, 2, 0);
        let mut block_c = Circuit::new(3);
        for g in block.gates() {
            block_c.push(g);
        }
        let block_u = circuit_unitary(&block_c).unwrap();
        for style in DecompositionStyle::ALL {
            let u = unitary_of(&decompose_swat(&block, style), 3);
            // compare the permutation action column by column
            for input in 0..8usize {
                let expected_out = (0..8)
                    .find(|&r| (block_u[r * 8 + input].norm() - 1.0).abs() < 1e-9)
                    .unwrap();
                assert!((u[expected_out * 8 + input].norm() - 1.0).abs() < 1e-9);
            }
        }
    }
}
