//! Interface view of a benzenoid: horizontal cut lines split it into
//! fragments, each fragment's shape drives the interface orders, and for
//! ribbons the central interface classifies every Clar cover into one of
//! `2 min(m1, n1) + 1` classes whose free regions are parallelograms.
//!
//! Orders are half-integers (an aromatic ring contributes 1/2 through
//! each of its two vertical edges), so everything below carries them in
//! doubled units: 0, 1, 2 per edge, exact at all times.

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::closed_form::zz_parallelogram;
use crate::covers::{validate_cover, ClarCover, CoverError};
use crate::lattice::{Benzenoid, Edge, Hex, ParallelogramParams, RibbonParams};
use crate::poly::Polynomial;

#[derive(Debug, Error)]
pub enum InterfaceError {
    #[error("structure has no hexagons")]
    EmptyStructure,
    #[error("row at depth {depth} is not contiguous")]
    NonContiguousRow { depth: i32 },
    #[error("no row at depth {missing} between occupied depths")]
    DepthGap { missing: i32 },
    #[error("rows at depths {depth} and {} share no vertex", depth + 1)]
    RowsDisconnected { depth: i32 },
    #[error(
        "interface orders do not close (final order {final_order}); \
         the structure admits no Clar covers"
    )]
    OrdersDoNotClose { final_order: i64 },
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error("central interface pattern matches no class: {0}")]
    UnrecognizedPattern(String),
}

// ---- Rows ----

/// One row of hexagons: all hexagons of a fixed depth `q + r`, contiguous
/// in `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RowSpan {
    pub depth: i32,
    pub qlo: i32,
    pub qhi: i32,
}

impl RowSpan {
    /// x of the row's leftmost vertical edge.
    pub fn x_lo(&self) -> i32 {
        2 * self.qlo - self.depth - 1
    }

    /// x of the row's rightmost vertical edge.
    pub fn x_hi(&self) -> i32 {
        2 * self.qhi - self.depth + 1
    }

    /// Number of vertical edges: one west edge per hexagon plus the east
    /// edge of the last.
    pub fn edge_count(&self) -> u32 {
        (self.qhi - self.qlo + 2) as u32
    }

    /// The row's vertical edges in ascending x.
    pub fn vertical_edges(&self) -> Vec<Edge> {
        (self.x_lo()..=self.x_hi())
            .step_by(2)
            .map(|x| Edge::vertical(x, self.depth))
            .collect()
    }
}

/// Rows by increasing depth. Errors reject geometry the fragment-shape
/// analysis does not cover: rows with holes, missing depths, or
/// consecutive rows that do not touch.
pub fn row_spans(b: &Benzenoid) -> Result<Vec<RowSpan>, InterfaceError> {
    if b.hexagons().is_empty() {
        return Err(InterfaceError::EmptyStructure);
    }
    let mut by_depth: BTreeMap<i32, (i32, i32, usize)> = BTreeMap::new();
    for h in b.hexagons() {
        let d = h.depth();
        let entry = by_depth.entry(d).or_insert((h.q, h.q, 0));
        entry.0 = entry.0.min(h.q);
        entry.1 = entry.1.max(h.q);
        entry.2 += 1;
    }
    let mut rows = Vec::with_capacity(by_depth.len());
    for (&depth, &(qlo, qhi, count)) in &by_depth {
        if count != (qhi - qlo + 1) as usize {
            return Err(InterfaceError::NonContiguousRow { depth });
        }
        rows.push(RowSpan { depth, qlo, qhi });
    }
    for pair in rows.windows(2) {
        let (upper, lower) = (pair[0], pair[1]);
        if lower.depth != upper.depth + 1 {
            return Err(InterfaceError::DepthGap {
                missing: upper.depth + 1,
            });
        }
        // hexagons (q, d-q) and (q', d+1-q') are adjacent iff q' ∈ {q, q+1}
        if lower.qlo > upper.qhi + 1 || upper.qlo > lower.qhi {
            return Err(InterfaceError::RowsDisconnected { depth: upper.depth });
        }
    }
    Ok(rows)
}

// ---- Fragments and interface orders ----

/// How a fragment's extremal vertical edges sit relative to its two
/// bounding interfaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FragmentShape {
    /// Both extremal edges in the lower interface: the structure widens.
    Wider,
    /// Both in the upper interface: it narrows.
    Narrower,
    /// Leftmost edge above, rightmost below: it shifts right.
    Right,
    /// Leftmost edge below, rightmost above: it shifts left.
    Left,
}

impl FragmentShape {
    pub fn symbol(&self) -> char {
        match self {
            FragmentShape::Wider => 'W',
            FragmentShape::Narrower => 'N',
            FragmentShape::Right => 'R',
            FragmentShape::Left => 'L',
        }
    }

    pub fn from_symbol(c: char) -> Option<FragmentShape> {
        match c {
            'W' => Some(FragmentShape::Wider),
            'N' => Some(FragmentShape::Narrower),
            'R' => Some(FragmentShape::Right),
            'L' => Some(FragmentShape::Left),
            _ => None,
        }
    }

    /// Change in interface order across the fragment, top to bottom.
    pub fn order_delta(&self) -> i64 {
        match self {
            FragmentShape::Wider => 1,
            FragmentShape::Narrower => -1,
            FragmentShape::Right | FragmentShape::Left => 0,
        }
    }
}

impl std::fmt::Display for FragmentShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Shapes, orders, and vertical-edge counts of one structure.
///
/// For `R` rows there are `R + 1` fragments (index `i` lies between row
/// `i - 1` and row `i`) and `R + 2` interfaces: interface 0 and the last
/// one are empty sentinels above and below the structure, and interface
/// `i + 1` is the vertical-edge layer of row `i`. `orders` and
/// `edge_counts` are indexed by interface, `shapes` by fragment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterfaceReport {
    pub shapes: Vec<FragmentShape>,
    pub orders: Vec<u32>,
    pub edge_counts: Vec<u32>,
}

impl InterfaceReport {
    pub fn shapes_string(&self) -> String {
        self.shapes.iter().map(FragmentShape::symbol).collect()
    }
}

impl Serialize for InterfaceReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("InterfaceReport", 3)?;
        s.serialize_field("shapes", &self.shapes_string())?;
        s.serialize_field("orders", &self.orders)?;
        s.serialize_field("edge_counts", &self.edge_counts)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for InterfaceReport {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Doc {
            shapes: String,
            orders: Vec<u32>,
            edge_counts: Vec<u32>,
        }
        let doc = Doc::deserialize(deserializer)?;
        let shapes = doc
            .shapes
            .chars()
            .map(|c| {
                FragmentShape::from_symbol(c)
                    .ok_or_else(|| D::Error::custom(format!("unknown shape symbol {c:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(InterfaceReport {
            shapes,
            orders: doc.orders,
            edge_counts: doc.edge_counts,
        })
    }
}

fn shape_of(upper: Option<RowSpan>, lower: Option<RowSpan>) -> FragmentShape {
    match (upper, lower) {
        (None, Some(_)) => FragmentShape::Wider,
        (Some(_), None) => FragmentShape::Narrower,
        (Some(u), Some(l)) => {
            // adjacent depths give opposite x parities, so never equal
            let first_in_lower = l.x_lo() < u.x_lo();
            let last_in_lower = l.x_hi() > u.x_hi();
            match (first_in_lower, last_in_lower) {
                (true, true) => FragmentShape::Wider,
                (false, false) => FragmentShape::Narrower,
                (false, true) => FragmentShape::Right,
                (true, false) => FragmentShape::Left,
            }
        }
        (None, None) => unreachable!("a fragment borders at least one row"),
    }
}

/// Fragment shapes, the interface orders obtained by folding them, and
/// per-interface vertical-edge counts.
pub fn analyze(b: &Benzenoid) -> Result<InterfaceReport, InterfaceError> {
    let rows = row_spans(b)?;
    let fragment_count = rows.len() + 1;

    let mut shapes = Vec::with_capacity(fragment_count);
    for i in 0..fragment_count {
        let upper = if i > 0 { Some(rows[i - 1]) } else { None };
        let lower = rows.get(i).copied();
        shapes.push(shape_of(upper, lower));
    }

    let mut orders = Vec::with_capacity(fragment_count + 1);
    let mut acc: i64 = 0;
    orders.push(0u32);
    for s in &shapes {
        acc += s.order_delta();
        if acc < 0 {
            return Err(InterfaceError::OrdersDoNotClose { final_order: acc });
        }
        orders.push(acc as u32);
    }
    if acc != 0 {
        return Err(InterfaceError::OrdersDoNotClose { final_order: acc });
    }

    let mut edge_counts = Vec::with_capacity(fragment_count + 1);
    edge_counts.push(0);
    edge_counts.extend(rows.iter().map(RowSpan::edge_count));
    edge_counts.push(0);

    Ok(InterfaceReport {
        shapes,
        orders,
        edge_counts,
    })
}

pub fn fragment_shapes(b: &Benzenoid) -> Result<Vec<FragmentShape>, InterfaceError> {
    Ok(analyze(b)?.shapes)
}

pub fn interface_orders(b: &Benzenoid) -> Result<Vec<u32>, InterfaceError> {
    Ok(analyze(b)?.orders)
}

// ---- Per-cover covering orders ----

/// Covering order of every vertical edge under one Clar cover, in doubled
/// units (double bond 2, aromatic-ring edge 1, single bond 0), plus the
/// per-interface sums in the same units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverOrders {
    pub edge_orders: BTreeMap<Edge, u8>,
    pub interface_sums: Vec<u32>,
}

fn doubled_order(e: &Edge, c: &ClarCover) -> u8 {
    if c.double_bonds.contains(e) {
        2
    } else if e.hex_candidates().iter().any(|h| c.aromatic_rings.contains(h)) {
        1
    } else {
        0
    }
}

pub fn cover_edge_orders(b: &Benzenoid, c: &ClarCover) -> Result<CoverOrders, InterfaceError> {
    validate_cover(b, c)?;
    let rows = row_spans(b)?;
    let dmin = rows[0].depth;
    let mut edge_orders = BTreeMap::new();
    let mut interface_sums = vec![0u32; rows.len() + 2];
    for row in &rows {
        for e in row.vertical_edges() {
            debug_assert!(b.has_edge(e.a(), e.b()));
            let ord = doubled_order(&e, c);
            interface_sums[(row.depth - dmin + 1) as usize] += ord as u32;
            edge_orders.insert(e, ord);
        }
    }
    Ok(CoverOrders {
        edge_orders,
        interface_sums,
    })
}

/// Checks that every Clar cover reproduces the interface orders: for each
/// cover, the per-interface sum of edge orders equals the order obtained
/// from the shape fold.
pub fn verify_first_rule(b: &Benzenoid) -> Result<bool, InterfaceError> {
    let report = analyze(b)?;
    let expected: Vec<u32> = report.orders.iter().map(|&o| 2 * o).collect();
    let mut all_match = true;
    crate::covers::enumerate_covers(b, |c| {
        if all_match {
            let sums = cover_edge_orders(b, c)
                .expect("enumerated cover is valid")
                .interface_sums;
            all_match = sums == expected;
        }
    });
    Ok(all_match)
}

// ---- Central-interface decomposition of ribbons ----

/// What the central interface of a ribbon looks like under one cover:
/// either exactly one single bond (the rest double), or one aromatic
/// sextet spanning two adjacent edges (the rest double).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CentralKind {
    SingleBond,
    Sextet,
}

/// One class of the central-interface partition. Edge positions are
/// numbered right to left (descending x): position `k` means the single
/// bond sits on edge `e_k`, or the sextet spans `e_{k-1}` and `e_k`.
/// Fixing the class freezes a staircase of bonds and leaves two
/// independent parallelogram-shaped free regions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CentralClass {
    pub kind: CentralKind,
    pub k: u32,
    pub upper: ParallelogramParams,
    pub lower: ParallelogramParams,
}

impl CentralClass {
    /// The class at position `k`; `k` ranges over `0..=N` for single
    /// bonds and `1..=N` for sextets, `N = min(m1, n1)`.
    pub fn new(kind: CentralKind, k: u32, p: &RibbonParams) -> CentralClass {
        let n = p.m1().min(p.n1());
        assert!(k <= n, "class position {k} out of range (N = {n})");
        let (upper, lower) = match kind {
            CentralKind::SingleBond => (
                ParallelogramParams::new(p.m1() - k, p.n2() + k),
                ParallelogramParams::new(p.m2() + k, p.n1() - k),
            ),
            CentralKind::Sextet => {
                assert!(k >= 1, "sextet classes start at position 1");
                (
                    ParallelogramParams::new(p.m1() - k, p.n2() - 1 + k),
                    ParallelogramParams::new(p.m2() - 1 + k, p.n1() - k),
                )
            }
        };
        CentralClass {
            kind,
            k,
            upper,
            lower,
        }
    }

    /// `x` for a sextet class (its covers carry one central ring), else 1.
    pub fn weight(&self) -> Polynomial {
        match self.kind {
            CentralKind::SingleBond => Polynomial::one(),
            CentralKind::Sextet => Polynomial::x(),
        }
    }

    /// Generating polynomial of the class: weight times the ZZ
    /// polynomials of the two free regions.
    pub fn zz(&self) -> Polynomial {
        let free = &zz_parallelogram(self.upper.m, self.upper.n)
            * &zz_parallelogram(self.lower.m, self.lower.n);
        &self.weight() * &free
    }
}

/// All `2 min(m1, n1) + 1` central-interface classes. Their generating
/// polynomials sum to the ribbon's ZZ polynomial.
pub fn central_decomposition(p: &RibbonParams) -> Vec<CentralClass> {
    let n = p.m1().min(p.n1());
    let mut classes = Vec::with_capacity(2 * n as usize + 1);
    for k in 0..=n {
        classes.push(CentralClass::new(CentralKind::SingleBond, k, p));
    }
    for k in 1..=n {
        classes.push(CentralClass::new(CentralKind::Sextet, k, p));
    }
    classes
}

/// Vertical edges of the ribbon's central interface, rightmost first
/// (descending x), matching the class position numbering.
pub fn central_edges(p: &RibbonParams) -> Vec<Edge> {
    let depth = (p.m1() + p.n2()) as i32 - 1;
    let b = Benzenoid::ribbon(p);
    let rows = row_spans(&b).expect("ribbon rows are contiguous");
    let row = rows
        .iter()
        .find(|r| r.depth == depth)
        .expect("central row exists");
    let mut edges = row.vertical_edges();
    edges.reverse();
    edges
}

/// Which central class a cover belongs to, decided by the covering orders
/// of the central interface's edges. Every valid cover matches exactly
/// one pattern; an unrecognized pattern means the cover is not a Clar
/// cover of this ribbon (caught by validation) or a bug.
pub fn classify_cover(p: &RibbonParams, c: &ClarCover) -> Result<CentralClass, InterfaceError> {
    let b = Benzenoid::ribbon(p);
    validate_cover(&b, c)?;
    let edges = central_edges(p);
    let orders: Vec<u8> = edges.iter().map(|e| doubled_order(e, c)).collect();

    let zeros: Vec<usize> = (0..orders.len()).filter(|&i| orders[i] == 0).collect();
    let halves: Vec<usize> = (0..orders.len()).filter(|&i| orders[i] == 1).collect();

    if halves.is_empty() && zeros.len() == 1 {
        return Ok(CentralClass::new(
            CentralKind::SingleBond,
            zeros[0] as u32,
            p,
        ));
    }
    if zeros.is_empty() && halves.len() == 2 && halves[1] == halves[0] + 1 {
        let k = halves[1];
        // the two half-order edges must flank one aromatic hexagon
        let west = &edges[k];
        let aromatic = Hex::from_center(west.a().x + 1, west.a().y + 1)
            .is_some_and(|h| c.aromatic_rings.contains(&h));
        if aromatic {
            return Ok(CentralClass::new(CentralKind::Sextet, k as u32, p));
        }
    }
    Err(InterfaceError::UnrecognizedPattern(format!(
        "doubled orders {orders:?} on {} central edges",
        orders.len()
    )))
}
