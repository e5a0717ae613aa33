//! Clar covers and their brute-force enumeration.
//!
//! A Clar cover is a spanning subgraph whose components are single edges
//! (double bonds) and hexagonal faces (aromatic rings); a cover with no
//! ring is a Kekulé structure. The enumerator below is the ground truth
//! that every formula and decomposition route is checked against: it
//! branches on how the least uncovered vertex is covered, so each cover
//! is visited exactly once, and it works on arbitrary vertex/edge
//! subgraphs, not only whole benzenoids.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::lattice::{derive_faces, Benzenoid, Edge, Hex, Vertex};
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClarCover {
    pub double_bonds: BTreeSet<Edge>,
    pub aromatic_rings: BTreeSet<Hex>,
}

impl ClarCover {
    /// Number of aromatic rings; the cover contributes to this
    /// coefficient of the ZZ polynomial.
    pub fn order(&self) -> usize {
        self.aromatic_rings.len()
    }

    /// One-line JSON form: `{"k2": [[[x,y],[x,y]],...], "c6": [[q,r],...]}`.
    pub fn to_json_line(&self) -> String {
        #[derive(serde::Serialize)]
        struct Doc {
            k2: Vec<[[i32; 2]; 2]>,
            c6: Vec<[i32; 2]>,
        }
        let doc = Doc {
            k2: self
                .double_bonds
                .iter()
                .map(|e| [[e.a().x, e.a().y], [e.b().x, e.b().y]])
                .collect(),
            c6: self.aromatic_rings.iter().map(|h| [h.q, h.r]).collect(),
        };
        serde_json::to_string(&doc).expect("cover serialization cannot fail")
    }
}

#[derive(Debug, Error)]
pub enum CoverError {
    #[error("double bond {0} is not an edge of the structure")]
    EdgeNotInGraph(Edge),
    #[error("aromatic ring {0} is not a face of the structure")]
    RingNotAFace(Hex),
    #[error("vertex {0} is not covered")]
    VertexUncovered(Vertex),
    #[error("vertex {0} is covered more than once")]
    VertexMultiplyCovered(Vertex),
}

/// Checks that `c` is an exact cover of `b`: every double bond an edge,
/// every ring a face, every vertex covered exactly once.
pub fn validate_cover(b: &Benzenoid, c: &ClarCover) -> Result<(), CoverError> {
    let mut hits: BTreeMap<Vertex, u32> = BTreeMap::new();
    for e in &c.double_bonds {
        if !b.edges().contains(e) {
            return Err(CoverError::EdgeNotInGraph(*e));
        }
        *hits.entry(e.a()).or_default() += 1;
        *hits.entry(e.b()).or_default() += 1;
    }
    for h in &c.aromatic_rings {
        if !b.faces().contains(h) {
            return Err(CoverError::RingNotAFace(*h));
        }
        for v in h.vertices() {
            *hits.entry(v).or_default() += 1;
        }
    }
    for (&v, &n) in &hits {
        if n > 1 {
            return Err(CoverError::VertexMultiplyCovered(v));
        }
    }
    for &v in b.vertices() {
        if !hits.contains_key(&v) {
            return Err(CoverError::VertexUncovered(v));
        }
    }
    Ok(())
}

// ---- Depth-first enumeration ----

struct Search {
    verts: Vec<Vertex>,
    adj: Vec<Vec<usize>>,
    faces: Vec<(Hex, [usize; 6])>,
    vertex_faces: Vec<Vec<usize>>,
    covered: Vec<bool>,
    rings_enabled: bool,
    k2: Vec<(usize, usize)>,
    rings: Vec<usize>,
}

impl Search {
    fn new(vertices: &BTreeSet<Vertex>, edges: &BTreeSet<Edge>, rings_enabled: bool) -> Self {
        let verts: Vec<Vertex> = vertices.iter().copied().collect();
        let index: BTreeMap<Vertex, usize> = verts.iter().copied().zip(0..).collect();
        let mut adj = vec![Vec::new(); verts.len()];
        for e in edges {
            let (a, b) = (index[&e.a()], index[&e.b()]);
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut faces = Vec::new();
        let mut vertex_faces = vec![Vec::new(); verts.len()];
        if rings_enabled {
            for h in derive_faces(edges) {
                let ids = h.vertices().map(|v| index[&v]);
                for id in ids {
                    vertex_faces[id].push(faces.len());
                }
                faces.push((h, ids));
            }
        }
        Search {
            covered: vec![false; verts.len()],
            verts,
            adj,
            faces,
            vertex_faces,
            rings_enabled,
            k2: Vec::new(),
            rings: Vec::new(),
        }
    }

    fn descend(&mut self, from: usize, visit: &mut impl FnMut(&Search)) {
        let Some(v) = (from..self.verts.len()).find(|&i| !self.covered[i]) else {
            visit(self);
            return;
        };
        self.covered[v] = true;
        for i in 0..self.adj[v].len() {
            let u = self.adj[v][i];
            if self.covered[u] {
                continue;
            }
            self.covered[u] = true;
            self.k2.push((v, u));
            self.descend(v + 1, visit);
            self.k2.pop();
            self.covered[u] = false;
        }
        if self.rings_enabled {
            for i in 0..self.vertex_faces[v].len() {
                let f = self.vertex_faces[v][i];
                let ids = self.faces[f].1;
                if ids.iter().any(|&u| u != v && self.covered[u]) {
                    continue;
                }
                for &u in &ids {
                    self.covered[u] = true;
                }
                self.rings.push(f);
                self.descend(v + 1, visit);
                self.rings.pop();
                for &u in &ids {
                    self.covered[u] = false;
                }
                self.covered[v] = true;
            }
        }
        self.covered[v] = false;
    }

    fn cover(&self) -> ClarCover {
        ClarCover {
            double_bonds: self
                .k2
                .iter()
                .map(|&(a, b)| Edge::new(self.verts[a], self.verts[b]))
                .collect(),
            aromatic_rings: self.rings.iter().map(|&f| self.faces[f].0).collect(),
        }
    }
}

/// Visits every Clar cover of an arbitrary vertex/edge subgraph once.
pub fn enumerate_covers_in(
    vertices: &BTreeSet<Vertex>,
    edges: &BTreeSet<Edge>,
    mut visit: impl FnMut(&ClarCover),
) {
    let mut search = Search::new(vertices, edges, true);
    search.descend(0, &mut |s| visit(&s.cover()));
}

/// Visits every Clar cover of the benzenoid once.
pub fn enumerate_covers(b: &Benzenoid, visit: impl FnMut(&ClarCover)) {
    enumerate_covers_in(b.vertices(), b.edges(), visit);
}

/// ZZ polynomial of an arbitrary vertex/edge subgraph, assembled directly
/// from the cover counts per order.
pub fn zz_brute_in(vertices: &BTreeSet<Vertex>, edges: &BTreeSet<Edge>) -> Polynomial {
    let mut counts: Vec<BigUint> = Vec::new();
    let mut search = Search::new(vertices, edges, true);
    search.descend(0, &mut |s| {
        let order = s.rings.len();
        if counts.len() <= order {
            counts.resize(order + 1, BigUint::zero());
        }
        counts[order] += BigUint::one();
    });
    Polynomial::from_coeffs(counts)
}

pub fn zz_brute(b: &Benzenoid) -> Polynomial {
    zz_brute_in(b.vertices(), b.edges())
}

/// Number of perfect matchings, counted by the same search with the ring
/// branch disabled.
pub fn kekule_count(b: &Benzenoid) -> BigUint {
    let mut count = BigUint::zero();
    let mut search = Search::new(b.vertices(), b.edges(), false);
    search.descend(0, &mut |_| count += BigUint::one());
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{ParallelogramParams, RibbonParams};

    fn parallelogram(m: u32, n: u32) -> Benzenoid {
        Benzenoid::parallelogram(ParallelogramParams::new(m, n))
    }

    fn ribbon(n1: u32, n2: u32, m1: u32, m2: u32) -> Benzenoid {
        Benzenoid::ribbon(&RibbonParams::new(n1, n2, m1, m2).unwrap())
    }

    #[test]
    fn benzene_has_three_covers() {
        let b = parallelogram(1, 1);
        let mut covers = Vec::new();
        enumerate_covers(&b, |c| covers.push(c.clone()));
        assert_eq!(covers.len(), 3);
        assert_eq!(covers.iter().filter(|c| c.order() == 0).count(), 2);
        assert_eq!(covers.iter().filter(|c| c.order() == 1).count(), 1);
        assert_eq!(zz_brute(&b), Polynomial::from_u64_coeffs(&[2, 1]));
        assert_eq!(kekule_count(&b), BigUint::from(2u32));
    }

    #[test]
    fn small_fixtures() {
        assert_eq!(zz_brute(&parallelogram(2, 1)), Polynomial::from_u64_coeffs(&[3, 2]));
        assert_eq!(
            zz_brute(&parallelogram(2, 2)),
            Polynomial::from_u64_coeffs(&[6, 6, 1])
        );
        // phenanthrene
        assert_eq!(
            zz_brute(&ribbon(1, 1, 1, 1)),
            Polynomial::from_u64_coeffs(&[5, 5, 1])
        );
        assert_eq!(
            zz_brute(&ribbon(2, 1, 1, 2)),
            Polynomial::from_u64_coeffs(&[16, 24, 10, 1])
        );
    }

    #[test]
    fn empty_structure_has_one_empty_cover() {
        let b = Benzenoid::empty();
        let mut n = 0;
        enumerate_covers(&b, |c| {
            assert_eq!(c.order(), 0);
            assert!(c.double_bonds.is_empty());
            n += 1;
        });
        assert_eq!(n, 1);
        assert_eq!(zz_brute(&b), Polynomial::one());
    }

    #[test]
    fn odd_subgraph_has_no_covers() {
        // benzene minus one vertex cannot be covered
        let b = parallelogram(1, 1);
        let dropped = *b.vertices().iter().next().unwrap();
        let vertices: BTreeSet<Vertex> = b.vertices().iter().copied().filter(|&v| v != dropped).collect();
        let edges: BTreeSet<Edge> = b
            .edges()
            .iter()
            .copied()
            .filter(|e| e.a() != dropped && e.b() != dropped)
            .collect();
        assert!(zz_brute_in(&vertices, &edges).is_zero());
    }

    #[test]
    fn every_emitted_cover_is_valid() {
        for b in [parallelogram(2, 2), ribbon(1, 1, 1, 1), ribbon(2, 1, 1, 2)] {
            let mut checked = 0;
            enumerate_covers(&b, |c| {
                validate_cover(&b, c).unwrap();
                checked += 1;
            });
            assert!(checked > 0);
        }
    }

    #[test]
    fn validate_rejects_bad_covers() {
        let b = parallelogram(1, 1);
        let empty = ClarCover {
            double_bonds: BTreeSet::new(),
            aromatic_rings: BTreeSet::new(),
        };
        assert!(matches!(
            validate_cover(&b, &empty),
            Err(CoverError::VertexUncovered(_))
        ));

        let foreign_ring = ClarCover {
            double_bonds: BTreeSet::new(),
            aromatic_rings: [Hex::new(5, 5)].into_iter().collect(),
        };
        assert!(matches!(
            validate_cover(&b, &foreign_ring),
            Err(CoverError::RingNotAFace(_))
        ));

        let hex = Hex::new(0, 0);
        let overlapping = ClarCover {
            double_bonds: [hex.west_edge()].into_iter().collect(),
            aromatic_rings: [hex].into_iter().collect(),
        };
        assert!(matches!(
            validate_cover(&b, &overlapping),
            Err(CoverError::VertexMultiplyCovered(_))
        ));

        let foreign_edge = ClarCover {
            double_bonds: [Edge::vertical(99, 0)].into_iter().collect(),
            aromatic_rings: BTreeSet::new(),
        };
        assert!(matches!(
            validate_cover(&b, &foreign_edge),
            Err(CoverError::EdgeNotInGraph(_))
        ));
    }

    #[test]
    fn mirror_preserves_the_polynomial() {
        for b in [parallelogram(3, 2), ribbon(2, 1, 1, 2), ribbon(1, 2, 2, 1)] {
            assert_eq!(zz_brute(&b.mirror()), zz_brute(&b));
        }
    }

    #[test]
    fn kekule_count_matches_constant_term() {
        for b in [parallelogram(2, 2), parallelogram(3, 2), ribbon(1, 1, 1, 1)] {
            assert_eq!(kekule_count(&b), zz_brute(&b).coeff(0));
        }
    }

    #[test]
    fn cover_json_line_shape() {
        let b = parallelogram(1, 1);
        let mut lines = Vec::new();
        enumerate_covers(&b, |c| lines.push(c.to_json_line()));
        lines.sort();
        assert_eq!(lines.len(), 3);
        // the aromatic cover has no double bonds and a single ring
        assert!(lines.contains(&r#"{"k2":[],"c6":[[0,0]]}"#.to_string()));
        for line in &lines {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert!(v.get("k2").is_some() && v.get("c6").is_some());
        }
    }
}
