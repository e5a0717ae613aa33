//! Recursive ZZ computation for arbitrary subgraphs of the hexagonal
//! lattice.
//!
//! For a chosen edge `e = {u, v}` the Clar covers split three ways: those
//! not using `e` at all, those taking `e` as a double bond, and those
//! running an aromatic ring through `e`. Hence
//!
//! ```text
//! ZZ(g) = ZZ(g - e) + ZZ(g - {u, v}) + x * Σ_h ZZ(g - V(h))
//! ```
//!
//! summed over the (at most two) hexagonal faces `h` containing `e` with
//! all six edges present. Forced moves (a degree-1 vertex must take its
//! only edge as a double bond; a degree-0 vertex kills the branch) are
//! propagated before every split, results are memoized under a
//! translation-normal key, and disconnected graphs factor into products.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::lattice::{canonical_graph_key, Benzenoid, Edge, Hex, Vertex};
use crate::poly::Polynomial;

/// Mutable vertex graph the decomposition works on. Neighbor lists stay
/// sorted, so iteration order (and thus edge selection) is deterministic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoverGraph {
    adj: BTreeMap<Vertex, Vec<Vertex>>,
}

impl CoverGraph {
    pub fn from_benzenoid(b: &Benzenoid) -> CoverGraph {
        CoverGraph::from_parts(b.vertices().iter().copied(), b.edges().iter().copied())
    }

    /// Graph with exactly the given vertices and edges. Edge endpoints
    /// must appear in the vertex list.
    pub fn from_parts(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> CoverGraph {
        let mut g = CoverGraph::default();
        for v in vertices {
            g.adj.entry(v).or_default();
        }
        for e in edges {
            assert!(
                g.adj.contains_key(&e.a()) && g.adj.contains_key(&e.b()),
                "edge {e} has an endpoint outside the vertex set"
            );
            g.insert_edge(e.a(), e.b());
        }
        g
    }

    fn insert_edge(&mut self, u: Vertex, v: Vertex) {
        let nu = self.adj.get_mut(&u).expect("endpoint present");
        if let Err(pos) = nu.binary_search(&v) {
            nu.insert(pos, v);
            let nv = self.adj.get_mut(&v).expect("endpoint present");
            let pos = nv.binary_search(&u).expect_err("matching half-edge");
            nv.insert(pos, u);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + Clone + '_ {
        self.adj.keys().copied()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, Vec::len)
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        self.adj.get(&v).map_or(&[], Vec::as_slice)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj
            .get(&u)
            .is_some_and(|nb| nb.binary_search(&v).is_ok())
    }

    /// Removes the edge, keeping both endpoints.
    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        for (a, b) in [(u, v), (v, u)] {
            if let Some(nb) = self.adj.get_mut(&a) {
                if let Ok(pos) = nb.binary_search(&b) {
                    nb.remove(pos);
                }
            }
        }
    }

    /// Removes the vertex and every incident edge. Missing vertices are
    /// ignored, so face deletions compose without bookkeeping.
    pub fn remove_vertex(&mut self, v: Vertex) {
        if let Some(nb) = self.adj.remove(&v) {
            for u in nb {
                let nu = self.adj.get_mut(&u).expect("symmetric adjacency");
                if let Ok(pos) = nu.binary_search(&v) {
                    nu.remove(pos);
                }
            }
        }
    }

    /// Hexagonal faces containing this edge with all six edges present:
    /// the candidate sextet positions of the R-branch.
    pub fn eligible_faces_with_edge(&self, e: &Edge) -> Vec<Hex> {
        e.hex_candidates()
            .into_iter()
            .filter(|h| {
                h.edges()
                    .iter()
                    .all(|edge| self.has_edge(edge.a(), edge.b()))
            })
            .collect()
    }

    /// Connected components as separate graphs.
    pub fn components(&self) -> Vec<CoverGraph> {
        let mut seen: BTreeSet<Vertex> = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.adj.keys().copied() {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = CoverGraph::default();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                comp.adj.insert(v, self.adj[&v].clone());
                for &u in &self.adj[&v] {
                    if seen.insert(u) {
                        queue.push_back(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Translation-normal byte key; equal keys mean equal graphs up to
    /// lattice translation.
    pub fn canonical_key(&self) -> Vec<u8> {
        canonical_graph_key(self.vertices(), |u, v| self.has_edge(u, v))
    }

    /// Vertex and edge sets, e.g. for feeding the enumeration oracle.
    pub fn to_parts(&self) -> (BTreeSet<Vertex>, BTreeSet<Edge>) {
        let vertices: BTreeSet<Vertex> = self.adj.keys().copied().collect();
        let mut edges = BTreeSet::new();
        for (&v, nb) in &self.adj {
            for &u in nb {
                edges.insert(Edge::new(v, u));
            }
        }
        (vertices, edges)
    }
}

/// Applies every forced move: a degree-0 vertex cannot be covered
/// (infeasible), a degree-1 vertex must take its only edge as a double
/// bond (no hexagon can pass through it). Returns the reduced graph and
/// whether the branch is still feasible; forced double bonds carry weight
/// 1, so no multiplier accompanies them.
pub fn reduce_forced(mut g: CoverGraph) -> (CoverGraph, bool) {
    let mut queue: VecDeque<Vertex> = g.vertices().collect();
    while let Some(v) = queue.pop_front() {
        let nb = match g.adj.get(&v) {
            Some(nb) => nb,
            None => continue,
        };
        match nb.len() {
            0 => return (g, false),
            1 => {
                let u = nb[0];
                g.remove_vertex(v);
                let rest = g.adj.get(&u).cloned().unwrap_or_default();
                g.remove_vertex(u);
                queue.extend(rest);
            }
            _ => {}
        }
    }
    (g, true)
}

/// Deterministic split edge: the vertical edge whose lower endpoint is
/// least in `(y, x)` order (topmost row, then leftmost), falling back to
/// the least edge overall for graphs without vertical edges.
pub fn select_edge(g: &CoverGraph) -> Option<Edge> {
    for (&v, nb) in &g.adj {
        let above = Vertex::new(v.x, v.y + 2);
        if nb.binary_search(&above).is_ok() {
            return Some(Edge::new(v, above));
        }
    }
    g.adj
        .iter()
        .find(|(_, nb)| !nb.is_empty())
        .map(|(&v, nb)| Edge::new(v, nb[0]))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CacheStats {
    pub hits: u64,
    pub misses: u64,
    pub max_depth: usize,
}

/// Decomposition driver holding the memo cache.
pub struct Engine {
    memo: HashMap<Vec<u8>, Polynomial>,
    memo_enabled: bool,
    stats: CacheStats,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new()
    }
}

impl Engine {
    pub fn new() -> Engine {
        Engine {
            memo: HashMap::new(),
            memo_enabled: true,
            stats: CacheStats::default(),
        }
    }

    /// Engine that recomputes every subproblem; only useful for checking
    /// that caching does not change results.
    pub fn without_memo() -> Engine {
        Engine {
            memo_enabled: false,
            ..Engine::new()
        }
    }

    pub fn stats(&self) -> CacheStats {
        self.stats
    }

    pub fn zz_decompose(&mut self, b: &Benzenoid) -> Polynomial {
        self.zz(CoverGraph::from_benzenoid(b))
    }

    pub fn zz(&mut self, g: CoverGraph) -> Polynomial {
        self.zz_at(g, 0)
    }

    fn zz_at(&mut self, g: CoverGraph, depth: usize) -> Polynomial {
        self.stats.max_depth = self.stats.max_depth.max(depth);
        let (g, feasible) = reduce_forced(g);
        if !feasible {
            return Polynomial::zero();
        }
        if g.is_empty() {
            return Polynomial::one();
        }

        let key = if self.memo_enabled {
            match self.memo_entry(g.canonical_key()) {
                Ok(cached) => return cached,
                Err(key) => Some(key),
            }
        } else {
            None
        };

        let components = g.components();
        let result = if components.len() > 1 {
            let mut acc = Polynomial::one();
            for comp in components {
                acc = &acc * &self.zz_at(comp, depth + 1);
                if acc.is_zero() {
                    break;
                }
            }
            acc
        } else {
            let e = select_edge(&g).expect("a reduced nonempty graph has edges");
            let (u, v) = (e.a(), e.b());

            let mut skip = g.clone();
            skip.remove_edge(u, v);
            let mut acc = self.zz_at(skip, depth + 1);

            let mut double = g.clone();
            double.remove_vertex(u);
            double.remove_vertex(v);
            acc += &self.zz_at(double, depth + 1);

            for h in g.eligible_faces_with_edge(&e) {
                let mut ring = g.clone();
                for w in h.vertices() {
                    ring.remove_vertex(w);
                }
                acc += &self.zz_at(ring, depth + 1).mul_xpow(1);
            }
            acc
        };

        if let Some(key) = key {
            self.memo.insert(key, result.clone());
        }
        result
    }

    fn memo_entry(&mut self, key: Vec<u8>) -> Result<Polynomial, Vec<u8>> {
        match self.memo.entry(key) {
            std::collections::hash_map::Entry::Occupied(hit) => {
                self.stats.hits += 1;
                Ok(hit.get().clone())
            }
            std::collections::hash_map::Entry::Vacant(miss) => {
                self.stats.misses += 1;
                Err(miss.into_key())
            }
        }
    }
}

/// One-shot decomposition with a fresh memoizing engine.
pub fn zz_decompose(b: &Benzenoid) -> Polynomial {
    Engine::new().zz_decompose(b)
}
