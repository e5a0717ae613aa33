//! Hexagonal-lattice geometry: hexagon coordinates, an integer brick
//! embedding of the vertex graph, and the benzenoid families.
//!
//! Hexagons live on an oblique grid with the `q` axis pointing south-east
//! and the `r` axis south-west, so `q + r` is the row depth in the
//! drawing: all hexagons of one horizontal row share it, and east
//! neighbors `(q+1, r-1)` share vertical edges. Vertices use a brick
//! embedding with `y` growing downward: hexagon `(q, r)` has center
//! `(q - r, 3(q + r))`, and its two vertical edges cross the horizontal
//! line `y = 3(q + r)`. Everything stays in integers, so geometric
//! predicates are exact.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("invalid parameter {field}: must be at least 1")]
    InvalidParameter { field: &'static str },
    #[error("duplicate hexagon ({q}, {r})")]
    DuplicateHexagon { q: i32, r: i32 },
    #[error("hexagon list is empty")]
    EmptyHexagonList,
    #[error("hexagon coordinate ({q}, {r}) out of supported range")]
    CoordinateOutOfRange { q: i64, r: i64 },
    #[error("malformed benzenoid document: {0}")]
    Parse(#[from] serde_json::Error),
}

// ---- Hexagon coordinates ----

/// Oblique hexagon coordinate; `q` runs south-east, `r` south-west.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hex {
    pub q: i32,
    pub r: i32,
}

impl Hex {
    pub fn new(q: i32, r: i32) -> Self {
        Hex { q, r }
    }

    /// Row depth in the drawing; one horizontal row per value.
    pub fn depth(&self) -> i32 {
        self.q + self.r
    }

    pub fn center(&self) -> Vertex {
        Vertex::new(self.q - self.r, 3 * (self.q + self.r))
    }

    /// Recovers the hexagon with the given center, if one exists there.
    pub fn from_center(x: i32, y: i32) -> Option<Hex> {
        if y.rem_euclid(3) != 0 {
            return None;
        }
        let d = y / 3;
        if (x + d).rem_euclid(2) != 0 {
            return None;
        }
        let q = (x + d) / 2;
        Some(Hex::new(q, d - q))
    }

    /// The six corners in clockwise order starting from the top.
    pub fn vertices(&self) -> [Vertex; 6] {
        let c = self.center();
        [
            Vertex::new(c.x, c.y - 2),
            Vertex::new(c.x + 1, c.y - 1),
            Vertex::new(c.x + 1, c.y + 1),
            Vertex::new(c.x, c.y + 2),
            Vertex::new(c.x - 1, c.y + 1),
            Vertex::new(c.x - 1, c.y - 1),
        ]
    }

    pub fn edges(&self) -> [Edge; 6] {
        let v = self.vertices();
        [
            Edge::new(v[0], v[1]),
            Edge::new(v[1], v[2]),
            Edge::new(v[2], v[3]),
            Edge::new(v[3], v[4]),
            Edge::new(v[4], v[5]),
            Edge::new(v[5], v[0]),
        ]
    }

    pub fn east_edge(&self) -> Edge {
        let c = self.center();
        Edge::new(Vertex::new(c.x + 1, c.y - 1), Vertex::new(c.x + 1, c.y + 1))
    }

    pub fn west_edge(&self) -> Edge {
        let c = self.center();
        Edge::new(Vertex::new(c.x - 1, c.y - 1), Vertex::new(c.x - 1, c.y + 1))
    }
}

impl fmt::Display for Hex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.q, self.r)
    }
}

// ---- Vertices and edges ----

/// Brick-embedding vertex; ordered by `(y, x)` so iteration sweeps the
/// drawing top to bottom, left to right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub x: i32,
    pub y: i32,
}

impl Vertex {
    pub fn new(x: i32, y: i32) -> Self {
        Vertex { x, y }
    }

    /// The up-to-three hexagons whose boundary contains this vertex.
    pub fn hex_candidates(&self) -> Vec<Hex> {
        let (x, y) = (self.x, self.y);
        let centers = match y.rem_euclid(3) {
            // top corner, or south-east/south-west corner of a row above
            1 => [(x, y + 2), (x - 1, y - 1), (x + 1, y - 1)],
            // bottom corner, or north-east/north-west corner of a row below
            2 => [(x, y - 2), (x - 1, y + 1), (x + 1, y + 1)],
            _ => return Vec::new(),
        };
        centers
            .iter()
            .filter_map(|&(cx, cy)| Hex::from_center(cx, cy))
            .collect()
    }
}

impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Undirected edge, stored with its smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    a: Vertex,
    b: Vertex,
}

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Self {
        debug_assert!(u != v, "degenerate edge");
        if u <= v {
            Edge { a: u, b: v }
        } else {
            Edge { a: v, b: u }
        }
    }

    /// The vertical edge crossing cut line `y = 3 * depth` at abscissa `x`.
    pub fn vertical(x: i32, depth: i32) -> Self {
        Edge {
            a: Vertex::new(x, 3 * depth - 1),
            b: Vertex::new(x, 3 * depth + 1),
        }
    }

    pub fn a(&self) -> Vertex {
        self.a
    }

    pub fn b(&self) -> Vertex {
        self.b
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.a, self.b)
    }

    pub fn is_vertical(&self) -> bool {
        self.a.x == self.b.x
    }

    /// Row depth of a vertical edge (the cut line it crosses).
    pub fn row_depth(&self) -> Option<i32> {
        if self.is_vertical() {
            Some((self.a.y + 1).div_euclid(3))
        } else {
            None
        }
    }

    /// The up-to-two hexagons whose boundary contains this edge.
    pub fn hex_candidates(&self) -> Vec<Hex> {
        let ha = self.a.hex_candidates();
        self.b
            .hex_candidates()
            .into_iter()
            .filter(|h| ha.contains(h))
            .collect()
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

// ---- Family parameters ----

/// Parallelogram `M(m, n)`: `m` hexagons along the south-east axis by `n`
/// along the south-west axis. Either side may be zero (empty structure).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParallelogramParams {
    pub m: u32,
    pub n: u32,
}

impl ParallelogramParams {
    pub fn new(m: u32, n: u32) -> Self {
        ParallelogramParams { m, n }
    }

    pub fn hexagon_count(&self) -> u64 {
        self.m as u64 * self.n as u64
    }
}

impl fmt::Display for ParallelogramParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({}, {})", self.m, self.n)
    }
}

/// Ribbon `Rb(n1, n2, m1, m2)`: a parallelogram `M(m1, n1 + n2)` whose
/// last `n1` rows widen east by `m2` further columns. All four parameters
/// must be at least 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RibbonParams {
    n1: u32,
    n2: u32,
    m1: u32,
    m2: u32,
}

impl RibbonParams {
    pub fn new(n1: u32, n2: u32, m1: u32, m2: u32) -> Result<Self, LatticeError> {
        for (value, field) in [(n1, "n1"), (n2, "n2"), (m1, "m1"), (m2, "m2")] {
            if value == 0 {
                return Err(LatticeError::InvalidParameter { field });
            }
        }
        Ok(RibbonParams { n1, n2, m1, m2 })
    }

    pub fn n1(&self) -> u32 {
        self.n1
    }

    pub fn n2(&self) -> u32 {
        self.n2
    }

    pub fn m1(&self) -> u32 {
        self.m1
    }

    pub fn m2(&self) -> u32 {
        self.m2
    }

    /// Parameters with the roles of the two axes exchanged; the built
    /// structures are mirror images.
    pub fn swapped(&self) -> RibbonParams {
        RibbonParams {
            n1: self.m1,
            n2: self.m2,
            m1: self.n1,
            m2: self.n2,
        }
    }

    pub fn hexagon_count(&self) -> u64 {
        self.m1 as u64 * (self.n1 as u64 + self.n2 as u64) + self.m2 as u64 * self.n1 as u64
    }

    /// Number of fragments a full horizontal sweep cuts the ribbon into.
    pub fn fragment_count(&self) -> u32 {
        self.n1 + self.n2 + self.m1 + self.m2
    }

    /// Index of the central interface in the sweep (`i_k` for this `k`).
    pub fn central_interface_index(&self) -> u32 {
        self.m1 + self.n2
    }
}

impl fmt::Display for RibbonParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rb({}, {}, {}, {})", self.n1, self.n2, self.m1, self.m2)
    }
}

// ---- Benzenoid ----

/// A set of hexagons together with the vertex graph it spans and the
/// hexagonal faces whose six edges are all present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Benzenoid {
    hexagons: BTreeSet<Hex>,
    vertices: BTreeSet<Vertex>,
    edges: BTreeSet<Edge>,
    faces: BTreeSet<Hex>,
}

impl Benzenoid {
    pub fn from_hexagons(hexagons: impl IntoIterator<Item = Hex>) -> Self {
        let hexagons: BTreeSet<Hex> = hexagons.into_iter().collect();
        let mut vertices = BTreeSet::new();
        let mut edges = BTreeSet::new();
        for h in &hexagons {
            vertices.extend(h.vertices());
            edges.extend(h.edges());
        }
        let faces = derive_faces(&edges);
        Benzenoid {
            hexagons,
            vertices,
            edges,
            faces,
        }
    }

    pub fn empty() -> Self {
        Benzenoid::from_hexagons([])
    }

    pub fn parallelogram(p: ParallelogramParams) -> Self {
        let mut hexagons = Vec::new();
        for q in 0..p.m as i32 {
            for r in 0..p.n as i32 {
                hexagons.push(Hex::new(q, r));
            }
        }
        Benzenoid::from_hexagons(hexagons)
    }

    pub fn ribbon(p: &RibbonParams) -> Self {
        let (n1, n2, m1, m2) = (p.n1 as i32, p.n2 as i32, p.m1 as i32, p.m2 as i32);
        let mut hexagons = Vec::new();
        for q in 0..m1 {
            for r in 0..n1 + n2 {
                hexagons.push(Hex::new(q, r));
            }
        }
        for q in m1..m1 + m2 {
            for r in n2..n1 + n2 {
                hexagons.push(Hex::new(q, r));
            }
        }
        Benzenoid::from_hexagons(hexagons)
    }

    pub fn hexagons(&self) -> &BTreeSet<Hex> {
        &self.hexagons
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    /// Hexagonal faces with all six edges present. For the families built
    /// here this equals the hexagon set; it is derived from the edge set
    /// so that subgraphs obtained by deletions stay consistent.
    pub fn faces(&self) -> &BTreeSet<Hex> {
        &self.faces
    }

    pub fn hexagon_count(&self) -> usize {
        self.hexagons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hexagons.is_empty()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.contains(&Edge::new(u, v))
    }

    pub fn translate(&self, dq: i32, dr: i32) -> Self {
        Benzenoid::from_hexagons(self.hexagons.iter().map(|h| Hex::new(h.q + dq, h.r + dr)))
    }

    /// Reflection across a horizontal axis: `(q, r) -> (-r, -q)`. It
    /// exchanges the roles of the two oblique axes, so mirrored family
    /// structures are translates of the family with swapped parameters.
    pub fn mirror(&self) -> Self {
        Benzenoid::from_hexagons(self.hexagons.iter().map(|h| Hex::new(-h.r, -h.q)))
    }

    /// Translation-normal form of the vertex graph; equal keys exactly for
    /// lattice translates. Mirror images keep distinct keys.
    pub fn canonical_key(&self) -> Vec<u8> {
        canonical_graph_key(self.vertices.iter().copied(), |u, v| self.has_edge(u, v))
    }

    // ---- Document form ----

    /// Serializes as `{"hexagons": [[q, r], ...]}` in sorted order.
    pub fn to_json(&self) -> String {
        let hexagons: Vec<[i32; 2]> = self.hexagons.iter().map(|h| [h.q, h.r]).collect();
        serde_json::to_string(&serde_json::json!({ "hexagons": hexagons }))
            .expect("benzenoid document serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, LatticeError> {
        #[derive(Deserialize)]
        struct Doc {
            hexagons: Vec<(i64, i64)>,
        }
        let doc: Doc = serde_json::from_str(text)?;
        if doc.hexagons.is_empty() {
            return Err(LatticeError::EmptyHexagonList);
        }
        let mut hexagons = BTreeSet::new();
        for &(q, r) in &doc.hexagons {
            let (Ok(qi), Ok(ri)) = (i32::try_from(q), i32::try_from(r)) else {
                return Err(LatticeError::CoordinateOutOfRange { q, r });
            };
            if !hexagons.insert(Hex::new(qi, ri)) {
                return Err(LatticeError::DuplicateHexagon { q: qi, r: ri });
            }
        }
        Ok(Benzenoid::from_hexagons(hexagons))
    }
}

/// All hexagon positions whose six edges are present in the edge set.
/// Every such face is found through its west vertical edge.
pub fn derive_faces(edges: &BTreeSet<Edge>) -> BTreeSet<Hex> {
    let mut faces = BTreeSet::new();
    for e in edges {
        if !e.is_vertical() {
            continue;
        }
        let center_y = e.a().y + 1;
        if let Some(h) = Hex::from_center(e.a().x + 1, center_y) {
            if h.edges().iter().all(|d| edges.contains(d)) {
                faces.insert(h);
            }
        }
    }
    faces
}

/// Serializes a vertex graph into a translation-normal byte key: vertices
/// in `(y, x)` order, each with its coordinates relative to a normalized
/// origin and a mask of the three forward edge directions. Lattice
/// translations shift `y` by multiples of 3 and `x` by a matching parity,
/// so the normalization quotients out exactly those.
pub fn canonical_graph_key<I, F>(vertices: I, has_edge: F) -> Vec<u8>
where
    I: Iterator<Item = Vertex> + Clone,
    F: Fn(Vertex, Vertex) -> bool,
{
    let mut min_x = i32::MAX;
    let mut min_y = i32::MAX;
    let mut count = 0usize;
    for v in vertices.clone() {
        min_x = min_x.min(v.x);
        min_y = min_y.min(v.y);
        count += 1;
    }
    if count == 0 {
        return Vec::new();
    }
    let dy = min_y - min_y.rem_euclid(3);
    let row_shift = dy / 3;
    let dx = if (min_x - row_shift).rem_euclid(2) == 0 {
        min_x
    } else {
        min_x - 1
    };
    let mut key = Vec::with_capacity(count * 9);
    for v in vertices {
        key.extend_from_slice(&(v.x - dx).to_le_bytes());
        key.extend_from_slice(&(v.y - dy).to_le_bytes());
        let mut mask = 0u8;
        if has_edge(v, Vertex::new(v.x, v.y + 2)) {
            mask |= 1;
        }
        if has_edge(v, Vertex::new(v.x + 1, v.y + 1)) {
            mask |= 2;
        }
        if has_edge(v, Vertex::new(v.x + 1, v.y - 1)) {
            mask |= 4;
        }
        key.push(mask);
    }
    key
}
