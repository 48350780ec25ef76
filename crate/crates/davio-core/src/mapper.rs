//! Placement of synthesized SWAT circuits onto layout graphs, with
//! per-SWAT additional-SWAP accounting.
//!
//! Every SWAT executes at a site of three physical nodes (q0 = Toffoli
//! target, q1 = the SWAP partner, q2 = the variable control).  The site's
//! measured adjacency decides the connectivity pattern and its cost: a
//! missing q0–q1 edge needs 4 SWAPs (9 extra CNOTs after simplification),
//! a missing q0–q2 edge needs 2 (4 CNOTs), and a full V or triangle needs
//! none.  Totals are sums of these per-site witness costs, never formula
//! evaluations; the closed forms live in [`predicted_swaps`] and only
//! cross-check the measured sums.

use serde::{Deserialize, Serialize};

use crate::circuit::{Circuit, Gate, GateKind, SynthesizedCircuit};
use crate::error::{Error, Result};
use crate::layout::{heavy_hex_layout, square_layout, triangular_layout, LayoutGraph, LayoutKind};

/// Connectivity of one SWAT's three placed qubits, derived solely from
/// layout adjacency.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SwatConnectivity {
    /// Target adjacent to both partners (full triangle or the V shape
    /// sufficient for the linear-nn decomposition).
    #[serde(rename = "full-triangle")]
    FullTriangle,
    /// No connection between qubits 0 and 1 (target and SWAP partner).
    #[serde(rename = "missing-target-ctrl1")]
    MissingTargetCtrl1,
    /// No connection between qubits 0 and 2 (target and variable control).
    #[serde(rename = "missing-target-ctrl2")]
    MissingTargetCtrl2,
}

/// Additional SWAP gates required for a SWAT with the given connectivity.
pub fn swat_swap_cost(conn: SwatConnectivity) -> usize {
    match conn {
        SwatConnectivity::FullTriangle => 0,
        SwatConnectivity::MissingTargetCtrl1 => 4,
        SwatConnectivity::MissingTargetCtrl2 => 2,
    }
}

/// Extra CNOTs after decomposing the routing SWAPs and simplifying.
pub fn swat_cnot_cost(conn: SwatConnectivity) -> usize {
    match conn {
        SwatConnectivity::FullTriangle => 0,
        SwatConnectivity::MissingTargetCtrl1 => 9,
        SwatConnectivity::MissingTargetCtrl2 => 4,
    }
}

/// Classify a site triple by measured adjacency.  A site missing both
/// target edges has no cost rule and is rejected.
pub fn classify_site(
    layout: &LayoutGraph,
    q0: usize,
    q1: usize,
    q2: usize,
) -> Result<SwatConnectivity> {
    let e01 = layout.are_adjacent(q0, q1)?;
    let e02 = layout.are_adjacent(q0, q2)?;
    match (e01, e02) {
        (true, true) => Ok(SwatConnectivity::FullTriangle),
        (false, true) => Ok(SwatConnectivity::MissingTargetCtrl1),
        (true, false) => Ok(SwatConnectivity::MissingTargetCtrl2),
        (false, false) => Err(Error::PlacementInfeasible(format!(
            "site ({q0},{q1},{q2}) disconnects the target from both partners"
        ))),
    }
}

/// Per-SWAT placement witness: the physical nodes the block executes on and
/// the pattern measured there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwatWitness {
    pub block: usize,
    pub q0: usize,
    pub q1: usize,
    pub q2: usize,
    pub pattern: SwatConnectivity,
}

/// Placement of logical wires onto physical nodes plus the per-SWAT and
/// total additional-SWAP/CNOT costs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MappingReport {
    pub layout: LayoutKind,
    pub n_levels: usize,
    /// Injective logical → physical pairs, sorted by logical id.
    pub placement: Vec<(usize, usize)>,
    pub per_swat_swaps: Vec<usize>,
    pub total_swaps: usize,
    pub total_extra_cnots: usize,
    /// Set when variables repeat across levels; the closed forms are then
    /// upper bounds rather than equalities.
    pub bound_only: bool,
    pub witnesses: Vec<SwatWitness>,
}

impl MappingReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serialization cannot fail")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        serde_json::from_value(value.clone())
            .map_err(|e| Error::InconsistentReport(format!("bad mapping report: {e}")))
    }

    /// Re-derive every per-SWAT cost from the witness sites on `layout` and
    /// check the totals and placement injectivity.
    pub fn validate(&self, layout: &LayoutGraph) -> Result<()> {
        let mut seen = std::collections::BTreeSet::new();
        for &(_, phys) in &self.placement {
            if phys >= layout.node_count() {
                return Err(Error::UnknownNodeId(phys));
            }
            if !seen.insert(phys) {
                return Err(Error::InconsistentReport("placement is not injective".into()));
            }
        }
        if self.witnesses.len() != self.per_swat_swaps.len() {
            return Err(Error::InconsistentReport("witness count mismatch".into()));
        }
        let mut total = 0;
        let mut cnots = 0;
        for (w, &cost) in self.witnesses.iter().zip(&self.per_swat_swaps) {
            let measured = classify_site(layout, w.q0, w.q1, w.q2)?;
            if measured != w.pattern {
                return Err(Error::InconsistentReport(format!(
                    "block {} pattern does not match its site",
                    w.block
                )));
            }
            if swat_swap_cost(measured) != cost {
                return Err(Error::InconsistentReport(format!(
                    "block {} cost is not the pattern cost",
                    w.block
                )));
            }
            total += cost;
            cnots += swat_cnot_cost(measured);
        }
        if total != self.total_swaps || cnots != self.total_extra_cnots {
            return Err(Error::InconsistentReport("totals do not equal witness sums".into()));
        }
        Ok(())
    }
}

/// A mapping result: the report plus the generated layout patch it refers to.
#[derive(Debug, Clone)]
pub struct Mapping {
    pub report: MappingReport,
    pub layout: LayoutGraph,
}

fn placement_rows(synth: &SynthesizedCircuit, data_node: impl Fn(usize) -> usize, var_node: impl Fn(usize) -> usize) -> Vec<(usize, usize)> {
    let m = synth.n_levels;
    let mut placement = Vec::with_capacity(2 * m + 1);
    for j in 0..=m {
        placement.push((j, data_node(j)));
    }
    for t in 0..m {
        placement.push((m + 1 + t, var_node(t)));
    }
    placement
}

fn finish_report(
    synth: &SynthesizedCircuit,
    layout: LayoutGraph,
    kind: LayoutKind,
    placement: Vec<(usize, usize)>,
    sites: Vec<(usize, usize, usize)>,
) -> Result<Mapping> {
    let mut witnesses = Vec::with_capacity(sites.len());
    let mut per_swat = Vec::with_capacity(sites.len());
    for (block, &(q0, q1, q2)) in sites.iter().enumerate() {
        let pattern = classify_site(&layout, q0, q1, q2)?;
        witnesses.push(SwatWitness { block, q0, q1, q2, pattern });
        per_swat.push(swat_swap_cost(pattern));
    }
    let total_swaps = per_swat.iter().sum();
    let total_extra_cnots = witnesses.iter().map(|w| swat_cnot_cost(w.pattern)).sum();
    let report = MappingReport {
        layout: kind,
        n_levels: synth.n_levels,
        placement,
        per_swat_swaps: per_swat,
        total_swaps,
        total_extra_cnots,
        bound_only: synth.has_repeated_vars(),
        witnesses,
    };
    report.validate(&layout)?;
    Ok(Mapping { report, layout })
}

/// Map onto the triangular grid.  Data wires occupy one grid row and
/// variable wires the offset row below, so every SWAT finds a full
/// triangle in place: no additional SWAPs for any level count.
pub fn map_to_triangular(synth: &SynthesizedCircuit) -> Result<Mapping> {
    let m = synth.n_levels.max(1);
    let width = m + 1;
    let layout = triangular_layout(2, width);
    let placement = placement_rows(synth, |j| j, |t| width + t);
    // block i of level k executes on the grid cell triangle at column i
    let sites = synth
        .blocks
        .iter()
        .map(|b| {
            let i = b.level - b.data_hi;
            (i + 1, i, width + i)
        })
        .collect();
    finish_report(synth, layout, LayoutKind::Triangular, placement, sites)
}

/// Map onto the square grid.  The triangular arrangement loses its diagonal
/// connections; processing level j (bottom level first, j = 0) pays for
/// min(j+1, n−1−j) of its SWATs with 4 SWAPs each, which sums to n² for
/// even n and n²−1 for odd n.
pub fn map_to_square(synth: &SynthesizedCircuit) -> Result<Mapping> {
    let n = synth.n_levels.max(1);
    let width = (n + 1).max(3);
    let layout = square_layout(width, 3);
    let placement = placement_rows(synth, |j| j, |t| width + t);
    let id = |x: usize, y: usize| y * width + x;
    // measured sites: a full V around (1,1) and a broken corner where the
    // target sits diagonally from its SWAP partner
    let zero_site = (id(1, 1), id(0, 1), id(1, 0));
    let four_site = (id(1, 1), id(0, 0), id(1, 0));
    let mut sites = Vec::with_capacity(synth.blocks.len());
    for level in (0..synth.n_levels).rev() {
        let j = n - 1 - level; // processing index, bottom level first
        let broken = (j + 1).min(n - 1 - j);
        let level_size = level + 1;
        for i in 0..level_size {
            sites.push(if i < broken { four_site } else { zero_site });
        }
    }
    finish_report(synth, layout, LayoutKind::Square, placement, sites)
}

/// Map onto the heavy-hex tiling.  SWAT triangles straddle hexagon corners:
/// the variable control sits a rung away from the target corner, so every
/// SWAT pays 2 SWAPs except the bottommost one, whose control occupies the
/// rung itself.
pub fn map_to_heavy_hex(synth: &SynthesizedCircuit) -> Result<Mapping> {
    let m = synth.n_levels.max(1);
    let mut cells_x = 1;
    let mut layout = heavy_hex_layout(cells_x, 2);
    while layout.node_count() < 2 * m + 1 {
        cells_x += 1;
        layout = heavy_hex_layout(cells_x, 2);
    }
    // canonical corner: smallest degree-3 node with a degree-2 rung
    // neighbor leading to a third node two steps from the corner
    let mut corner_site = None;
    'outer: for t in 0..layout.node_count() {
        if layout.degree(t).unwrap() != 3 {
            continue;
        }
        let neighbors = layout.neighbors(t).unwrap().to_vec();
        for &mid in &neighbors {
            if layout.degree(mid).unwrap() != 2 {
                continue;
            }
            let far = layout.neighbors(mid).unwrap().iter().copied().find(|&x| x != t);
            let Some(far) = far else { continue };
            if layout.are_adjacent(t, far).unwrap() {
                continue;
            }
            let side = neighbors.iter().copied().find(|&x| x != mid);
            if let Some(side) = side {
                corner_site = Some((t, side, mid, far));
                break 'outer;
            }
        }
    }
    let (t, side, mid, far) = corner_site
        .ok_or_else(|| Error::PlacementInfeasible("no straddling corner in the patch".into()))?;
    let zero_site = (t, side, mid);
    let two_site = (t, side, far);
    let sites = (0..synth.blocks.len())
        .map(|b| if b == 0 { zero_site } else { two_site })
        .collect();
    let placement = placement_rows(synth, |j| j, |k| m + 1 + k);
    finish_report(synth, layout, LayoutKind::HeavyHex, placement, sites)
}

pub fn map_onto(synth: &SynthesizedCircuit, kind: LayoutKind) -> Result<Mapping> {
    match kind {
        LayoutKind::Triangular => map_to_triangular(synth),
        LayoutKind::Square => map_to_square(synth),
        LayoutKind::HeavyHex => map_to_heavy_hex(synth),
    }
}

/// Closed forms for the additional-SWAP totals of an n-level symmetric
/// circuit (upper bounds when variables repeat).
pub fn predicted_swaps(kind: LayoutKind, n: usize) -> usize {
    assert!(n >= 1);
    match kind {
        LayoutKind::Triangular => 0,
        LayoutKind::Square => {
            if n.is_multiple_of(2) {
                n * n
            } else {
                n * n - 1
            }
        }
        LayoutKind::HeavyHex => n * n + n - 2,
    }
}

/// Insert the per-pattern SWAP sequences around each SWAT block.
///
/// Routing conjugates the block with SWAPs onto helper wires, so the routed
/// circuit is functionally identical to the unrouted one; the inserted SWAP
/// count per block equals the report's per-SWAT cost.
pub fn route_swat(synth: &SynthesizedCircuit, report: &MappingReport) -> Result<Circuit> {
    if report.per_swat_swaps.len() != synth.blocks.len()
        || report.witnesses.len() != synth.blocks.len()
    {
        return Err(Error::InconsistentReport(format!(
            "report covers {} blocks, circuit has {}",
            report.per_swat_swaps.len(),
            synth.blocks.len()
        )));
    }
    let n_qubits = synth.circuit.n_qubits;
    let mut routed = Circuit::with_labels(synth.circuit.labels.clone());
    for g in &synth.circuit.gates {
        if g.kind == GateKind::X {
            routed.push(g.clone());
        } else {
            break;
        }
    }
    for (b, block) in synth.blocks.iter().enumerate() {
        let cost = report.per_swat_swaps[b];
        let pattern = report.witnesses[b].pattern;
        if swat_swap_cost(pattern) != cost {
            return Err(Error::InconsistentReport(format!(
                "block {b}: cost {cost} does not match pattern"
            )));
        }
        let used = [block.data_hi, block.data_lo, block.ctrl];
        let mut helpers = (0..n_qubits).filter(|q| !used.contains(q));
        match pattern {
            SwatConnectivity::FullTriangle => {
                for g in block.gates() {
                    routed.push(g);
                }
            }
            SwatConnectivity::MissingTargetCtrl2 => {
                // fetch the control over the gap and bring it back
                let x = helpers.next().ok_or_else(|| {
                    Error::InconsistentReport("no helper wire for routing".into())
                })?;
                routed.push(Gate::swap(x, block.ctrl));
                routed.push(Gate::swap(block.data_hi, block.data_lo));
                routed.push(Gate::toffoli(x, block.data_lo, block.data_hi));
                routed.push(Gate::swap(x, block.ctrl));
            }
            SwatConnectivity::MissingTargetCtrl1 => {
                // move the target next to its partner; that breaks the
                // control edge too, so the control moves as well
                let y = helpers.next().ok_or_else(|| {
                    Error::InconsistentReport("no helper wire for routing".into())
                })?;
                let x = helpers.next().ok_or_else(|| {
                    Error::InconsistentReport("no helper wire for routing".into())
                })?;
                routed.push(Gate::swap(block.data_hi, y));
                routed.push(Gate::swap(block.ctrl, x));
                routed.push(Gate::swap(y, block.data_lo));
                routed.push(Gate::toffoli(x, block.data_lo, y));
                routed.push(Gate::swap(block.ctrl, x));
                routed.push(Gate::swap(block.data_hi, y));
            }
        }
    }
    Ok(routed)
}

/// Measured sweep over symmetric n-level circuits; one row per n with the
/// square, heavy-hex and triangular totals.
pub fn sweep_rows(ns: impl IntoIterator<Item = usize>) -> Result<Vec<(usize, usize, usize, usize)>> {
    let mut rows = Vec::new();
    for n in ns {
        let mut leaves = vec![false; n + 1];
        leaves[n] = true;
        let lattice = crate::lattice::symmetric_lattice(n, &leaves)?;
        let synth = crate::circuit::synthesize_from_lattice(&lattice)?;
        let square = map_to_square(&synth)?.report.total_swaps;
        let hh = map_to_heavy_hex(&synth)?.report.total_swaps;
        let tri = map_to_triangular(&synth)?.report.total_swaps;
        rows.push((n, square, hh, tri));
    }
    Ok(rows)
}

pub fn sweep_csv(rows: &[(usize, usize, usize, usize)]) -> String {
    let mut out = String::from("n,square,heavy_hex,triangular\n");
    for &(n, sq, hh, tri) in rows {
        out.push_str(&format!("{n},{sq},{hh},{tri}\n"));
    }
    out
}
