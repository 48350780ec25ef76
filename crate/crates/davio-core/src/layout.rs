//! Physical-connectivity graph generators: triangular grid, square grid,
//! and heavy-hex tilings, with 2D integer coordinates per qubit.
//!
//! Generators are deterministic: the same parameters produce identical
//! node and edge sets.  Patches are finite with no wraparound.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LayoutKind {
    #[serde(rename = "triangular")]
    Triangular,
    #[serde(rename = "square")]
    Square,
    #[serde(rename = "heavy-hex")]
    HeavyHex,
}

impl LayoutKind {
    pub fn name(self) -> &'static str {
        match self {
            LayoutKind::Triangular => "triangular",
            LayoutKind::Square => "square",
            LayoutKind::HeavyHex => "heavy-hex",
        }
    }
}

impl std::str::FromStr for LayoutKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "triangular" => Ok(LayoutKind::Triangular),
            "square" => Ok(LayoutKind::Square),
            "heavy-hex" => Ok(LayoutKind::HeavyHex),
            _ => Err(Error::InconsistentReport(format!("unknown layout `{s}`"))),
        }
    }
}

/// Undirected connectivity graph over physical qubit ids with coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayoutGraph {
    kind: LayoutKind,
    coords: Vec<(i64, i64)>,
    edges: Vec<(usize, usize)>, // a < b, sorted
    adjacency: Vec<Vec<usize>>,
}

impl LayoutGraph {
    fn build(kind: LayoutKind, coords: Vec<(i64, i64)>, mut edges: Vec<(usize, usize)>) -> Self {
        edges.iter_mut().for_each(|e| {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        });
        edges.sort_unstable();
        edges.dedup();
        let mut adjacency = vec![Vec::new(); coords.len()];
        for &(a, b) in &edges {
            assert_ne!(a, b, "self-loop");
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        adjacency.iter_mut().for_each(|n| n.sort_unstable());
        let g = LayoutGraph { kind, coords, edges, adjacency };
        debug_assert!(g.is_connected(), "generated layouts must be connected");
        g
    }

    pub fn kind(&self) -> LayoutKind {
        self.kind
    }

    pub fn node_count(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[(i64, i64)] {
        &self.coords
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, id: usize) -> Result<&[usize]> {
        self.adjacency
            .get(id)
            .map(|v| v.as_slice())
            .ok_or(Error::UnknownNodeId(id))
    }

    pub fn are_adjacent(&self, a: usize, b: usize) -> Result<bool> {
        if a >= self.node_count() {
            return Err(Error::UnknownNodeId(a));
        }
        if b >= self.node_count() {
            return Err(Error::UnknownNodeId(b));
        }
        Ok(a != b && self.adjacency[a].binary_search(&b).is_ok())
    }

    pub fn degree(&self, id: usize) -> Result<usize> {
        Ok(self.neighbors(id)?.len())
    }

    /// Shortest-path distance by breadth-first search.
    pub fn distance(&self, a: usize, b: usize) -> Result<Option<usize>> {
        if a >= self.node_count() {
            return Err(Error::UnknownNodeId(a));
        }
        if b >= self.node_count() {
            return Err(Error::UnknownNodeId(b));
        }
        let mut dist = vec![usize::MAX; self.node_count()];
        dist[a] = 0;
        let mut queue = std::collections::VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            if u == b {
                return Ok(Some(dist[u]));
            }
            for &v in &self.adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        Ok(None)
    }

    pub fn is_connected(&self) -> bool {
        if self.coords.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.node_count()];
        let mut queue = std::collections::VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.node_count()
    }

    /// All 3-cycles (a < b < c).
    pub fn triangles(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            for &c in &self.adjacency[a] {
                if c > b && self.adjacency[b].binary_search(&c).is_ok() {
                    out.push((a, b, c));
                }
            }
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("graph {} {{\n  node [shape=circle];\n", self.kind.name().replace('-', "_"));
        for (id, &(x, y)) in self.coords.iter().enumerate() {
            out.push_str(&format!("  q{id} [pos=\"{x},{y}!\"];\n"));
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("  q{a} -- q{b};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": self.kind,
            "nodes": self.coords.iter().enumerate()
                .map(|(id, &(x, y))| serde_json::json!({"id": id, "x": x, "y": y}))
                .collect::<Vec<_>>(),
            "edges": self.edges,
        })
    }
}

/// Triangular grid patch: `rows` rows of `row_width` nodes with odd rows
/// offset, so every interior node has degree 6 and every cell is a
/// triangle.  Axial coordinates map to integers as x = 2c + (r mod 2).
pub fn triangular_layout(rows: usize, row_width: usize) -> LayoutGraph {
    assert!(rows >= 1 && row_width >= 1);
    let id = |r: usize, c: usize| r * row_width + c;
    let mut coords = Vec::with_capacity(rows * row_width);
    for r in 0..rows {
        for c in 0..row_width {
            coords.push((2 * c as i64 + (r % 2) as i64, r as i64));
        }
    }
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..row_width {
            if c + 1 < row_width {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                if r % 2 == 0 {
                    // even rows link down-left and down-right
                    if c > 0 {
                        edges.push((id(r, c), id(r + 1, c - 1)));
                    }
                    edges.push((id(r, c), id(r + 1, c)));
                } else {
                    edges.push((id(r, c), id(r + 1, c)));
                    if c + 1 < row_width {
                        edges.push((id(r, c), id(r + 1, c + 1)));
                    }
                }
            }
        }
    }
    LayoutGraph::build(LayoutKind::Triangular, coords, edges)
}

/// Square grid graph: interior degree 4, no triangles.
pub fn square_layout(width: usize, height: usize) -> LayoutGraph {
    assert!(width >= 2 && height >= 2);
    let id = |x: usize, y: usize| y * width + x;
    let mut coords = Vec::with_capacity(width * height);
    for y in 0..height {
        for x in 0..width {
            coords.push((x as i64, y as i64));
        }
    }
    let mut edges = Vec::new();
    for y in 0..height {
        for x in 0..width {
            if x + 1 < width {
                edges.push((id(x, y), id(x + 1, y)));
            }
            if y + 1 < height {
                edges.push((id(x, y), id(x, y + 1)));
            }
        }
    }
    LayoutGraph::build(LayoutKind::Square, coords, edges)
}

/// Heavy-hex tiling: a brick wall of hexagons with one extra qubit on every
/// hexagon side.  Corner qubits have degree at most 3, edge qubits degree 2,
/// and the graph is triangle-free.  `cells_x` × `cells_y` hexagonal cells.
pub fn heavy_hex_layout(cells_x: usize, cells_y: usize) -> LayoutGraph {
    assert!(cells_x >= 1 && cells_y >= 1);
    // Brick corners on an integer grid (hexagon (i, j) spans x = 2i+off ..
    // 2i+off+2 at rows j, j+1), then each edge is subdivided by a midpoint.
    // Coordinates are doubled so midpoints stay integral.
    let mut ids: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    let mut edges_raw: Vec<((i64, i64), (i64, i64))> = Vec::new();
    for j in 0..cells_y as i64 {
        let off = j % 2;
        for i in 0..cells_x as i64 {
            let x0 = 2 * i + off;
            let (yb, yt) = (j, j + 1);
            let corners_bottom = [(x0, yb), (x0 + 1, yb), (x0 + 2, yb)];
            let corners_top = [(x0, yt), (x0 + 1, yt), (x0 + 2, yt)];
            for w in corners_bottom.windows(2) {
                edges_raw.push((w[0], w[1]));
            }
            for w in corners_top.windows(2) {
                edges_raw.push((w[0], w[1]));
            }
            edges_raw.push(((x0, yb), (x0, yt)));
            edges_raw.push(((x0 + 2, yb), (x0 + 2, yt)));
        }
    }
    // subdivide: corner coords double, midpoints in between
    let mut coords: Vec<(i64, i64)> = Vec::new();
    let intern = |ids: &mut BTreeMap<(i64, i64), usize>, coords: &mut Vec<(i64, i64)>, p: (i64, i64)| {
        *ids.entry(p).or_insert_with(|| {
            coords.push(p);
            coords.len() - 1
        })
    };
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen_edges = std::collections::BTreeSet::new();
    for (a, b) in edges_raw {
        let key = if a <= b { (a, b) } else { (b, a) };
        if !seen_edges.insert(key) {
            continue;
        }
        let pa = (2 * a.0, 2 * a.1);
        let pb = (2 * b.0, 2 * b.1);
        let mid = ((pa.0 + pb.0) / 2, (pa.1 + pb.1) / 2);
        let ia = intern(&mut ids, &mut coords, pa);
        let ib = intern(&mut ids, &mut coords, pb);
        let im = intern(&mut ids, &mut coords, mid);
        edges.push((ia, im));
        edges.push((im, ib));
    }
    LayoutGraph::build(LayoutKind::HeavyHex, coords, edges)
}
