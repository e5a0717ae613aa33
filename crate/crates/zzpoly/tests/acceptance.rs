//! Acceptance gate: every numbered check prints one PASS line, or fails
//! the build with a FAIL line carrying the first counterexample. Run with
//! `cargo test --test acceptance -- --nocapture` to see the matrix.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use zzpoly::closed_form::{
    binid_check, clar_cover_count_ribbon, clar_number_formula, kekule_ribbon, zz_ribbon_special,
};
use zzpoly::covers::{enumerate_covers, zz_brute};
use zzpoly::engine::Engine;
use zzpoly::interfaces::{
    analyze, central_decomposition, central_edges, classify_cover, cover_edge_orders, CentralKind,
};
use zzpoly::{
    zz_parallelogram, zz_ribbon, Benzenoid, ParallelogramParams, Polynomial, RibbonParams,
};

fn criterion(number: u32, name: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("acceptance {number:02} ({name}): PASS"),
        Err(detail) => panic!("acceptance {number:02} ({name}): FAIL - {detail}"),
    }
}

fn within(limit: Duration, started: Instant, what: &str) -> Result<(), String> {
    let took = started.elapsed();
    if took <= limit {
        Ok(())
    } else {
        Err(format!("{what} took {took:?}, limit {limit:?}"))
    }
}

fn ribbon_box(max: u32) -> Vec<RibbonParams> {
    let mut out = Vec::new();
    for n1 in 1..=max {
        for n2 in 1..=max {
            for m1 in 1..=max {
                for m2 in 1..=max {
                    out.push(RibbonParams::new(n1, n2, m1, m2).expect("positive"));
                }
            }
        }
    }
    out
}

#[test]
fn acceptance_01_triple_oracle_agreement() {
    criterion(1, "triple-oracle agreement on the [1,3]^4 box", || {
        let started = Instant::now();
        let mut engine = Engine::new();
        for p in ribbon_box(3) {
            let closed = zz_ribbon(&p);
            let b = Benzenoid::ribbon(&p);
            let decomposed = engine.zz_decompose(&b);
            let brute = zz_brute(&b);
            if closed != decomposed || closed != brute {
                return Err(format!(
                    "{p}: closed {closed}, engine {decomposed}, brute {brute}"
                ));
            }
        }
        within(Duration::from_secs(60), started, "81 ribbons")
    });
}

#[test]
fn acceptance_02_parallelogram_formula() {
    criterion(2, "parallelogram formula vs enumeration", || {
        let started = Instant::now();
        for m in 0..=4 {
            for n in 0..=4 {
                let closed = zz_parallelogram(m, n);
                let brute = zz_brute(&Benzenoid::parallelogram(ParallelogramParams::new(m, n)));
                if closed != brute {
                    return Err(format!("M({m}, {n}): closed {closed}, brute {brute}"));
                }
                if n == 0 && closed != Polynomial::one() {
                    return Err(format!("M({m}, 0) gave {closed}, expected 1"));
                }
            }
        }
        within(Duration::from_secs(5), started, "25 parallelograms")
    });
}

#[test]
fn acceptance_03_published_interface_fixtures() {
    criterion(3, "published shape and order sequences", || {
        let p = RibbonParams::new(3, 6, 5, 4).expect("positive");
        let report = analyze(&Benzenoid::ribbon(&p)).map_err(|e| e.to_string())?;
        if report.shapes_string() != "WWWWWLLLLNNRRRRNNN" {
            return Err(format!("Rb(3, 6, 5, 4) shapes {}", report.shapes_string()));
        }
        let expected = vec![0, 1, 2, 3, 4, 5, 5, 5, 5, 5, 4, 3, 3, 3, 3, 3, 2, 1, 0];
        if report.orders != expected {
            return Err(format!("Rb(3, 6, 5, 4) orders {:?}", report.orders));
        }

        let p = RibbonParams::new(6, 9, 5, 4).expect("positive");
        let report = analyze(&Benzenoid::ribbon(&p)).map_err(|e| e.to_string())?;
        let expected = vec![
            0, 1, 2, 3, 4, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 6, 6, 6, 6, 5, 4, 3, 2, 1, 0,
        ];
        if report.orders != expected {
            return Err(format!("Rb(6, 9, 5, 4) orders {:?}", report.orders));
        }
        Ok(())
    });
}

#[test]
fn acceptance_04_central_interface_theorem() {
    criterion(4, "central interface classification", || {
        let started = Instant::now();
        for p in ribbon_box(2) {
            let b = Benzenoid::ribbon(&p);
            let n_min = p.m1().min(p.n1());

            let edges = central_edges(&p);
            if edges.len() != (n_min + 1) as usize {
                return Err(format!("{p}: {} central edges", edges.len()));
            }
            let report = analyze(&b).map_err(|e| e.to_string())?;
            let central_order = report.orders[p.central_interface_index() as usize];
            if central_order != n_min {
                return Err(format!("{p}: central order {central_order}, want {n_min}"));
            }

            // every cover lands in exactly one class, classes partition
            let mut per_class: BTreeMap<(CentralKind, u32), Polynomial> = BTreeMap::new();
            let mut unclassified = None;
            enumerate_covers(&b, |c| {
                if unclassified.is_some() {
                    return;
                }
                match classify_cover(&p, c) {
                    Ok(class) => {
                        *per_class
                            .entry((class.kind, class.k))
                            .or_insert_with(Polynomial::zero) +=
                            &Polynomial::x().pow(c.order() as u32);
                    }
                    Err(e) => unclassified = Some(e.to_string()),
                }
            });
            if let Some(e) = unclassified {
                return Err(format!("{p}: {e}"));
            }

            let mut grand = Polynomial::zero();
            for class in central_decomposition(&p) {
                let expected = class.weight()
                    * zz_parallelogram(class.upper.m, class.upper.n)
                    * zz_parallelogram(class.lower.m, class.lower.n);
                grand += &expected;
                match per_class.remove(&(class.kind, class.k)) {
                    Some(got) if got == expected => {}
                    Some(got) => {
                        return Err(format!(
                            "{p} class ({:?}, {}): enumerated {got}, product {expected}",
                            class.kind, class.k
                        ));
                    }
                    None if expected.is_zero() => {}
                    None => {
                        return Err(format!(
                            "{p} class ({:?}, {}): no covers, product {expected}",
                            class.kind, class.k
                        ));
                    }
                }
            }
            if !per_class.is_empty() {
                return Err(format!("{p}: covers outside the decomposition"));
            }
            if grand != zz_ribbon(&p) {
                return Err(format!("{p}: class sum {grand} != ZZ"));
            }
        }
        within(Duration::from_secs(30), started, "16 ribbons")
    });
}

#[test]
fn acceptance_05_first_rule_of_interface_orders() {
    criterion(5, "per-cover order sums and shape deltas", || {
        let mut structures: Vec<Benzenoid> =
            ribbon_box(2).iter().map(Benzenoid::ribbon).collect();
        for m in 1..=3 {
            for n in 1..=3 {
                structures.push(Benzenoid::parallelogram(ParallelogramParams::new(m, n)));
            }
        }
        for (i, b) in structures.iter().enumerate() {
            let report = analyze(b).map_err(|e| e.to_string())?;
            for (j, shape) in report.shapes.iter().enumerate() {
                let delta = report.orders[j + 1] as i64 - report.orders[j] as i64;
                if delta != shape.order_delta() {
                    return Err(format!(
                        "structure #{i} fragment {j}: shape {shape} but order step {delta}"
                    ));
                }
            }
            let expected: Vec<u32> = report.orders.iter().map(|&o| 2 * o).collect();
            let mut bad = None;
            enumerate_covers(b, |c| {
                if bad.is_some() {
                    return;
                }
                let sums = cover_edge_orders(b, c)
                    .expect("enumerated covers are valid")
                    .interface_sums;
                if sums != expected {
                    bad = Some(format!("structure #{i}: sums {sums:?}, orders {expected:?}"));
                }
            });
            if let Some(e) = bad {
                return Err(e);
            }
        }
        Ok(())
    });
}

#[test]
fn acceptance_06_special_case_recurrences() {
    criterion(6, "short-arm recurrences match the closed form", || {
        for n1 in 1..=2 {
            for n2 in 1..=3 {
                for m1 in 1..=3 {
                    for m2 in 1..=3 {
                        let p = RibbonParams::new(n1, n2, m1, m2).expect("positive");
                        let special = zz_ribbon_special(&p).map_err(|e| e.to_string())?;
                        let closed = zz_ribbon(&p);
                        if special != closed {
                            return Err(format!("{p}: special {special}, closed {closed}"));
                        }
                    }
                }
            }
        }
        Ok(())
    });
}

#[test]
fn acceptance_07_arm_swap_symmetry() {
    criterion(7, "closed form is symmetric under arm swap", || {
        let started = Instant::now();
        for p in ribbon_box(4) {
            if zz_ribbon(&p) != zz_ribbon(&p.swapped()) {
                return Err(format!("{p} vs {}", p.swapped()));
            }
        }
        within(Duration::from_secs(5), started, "256 ribbons")
    });
}

#[test]
fn acceptance_08_invariant_formulas() {
    criterion(8, "count formulas vs polynomial evaluations", || {
        for p in ribbon_box(4) {
            let zz = zz_ribbon(&p);
            if kekule_ribbon(&p) != zz.eval_u64(0) {
                return Err(format!("{p}: Kekulé count"));
            }
            if clar_cover_count_ribbon(&p) != zz.eval_u64(1) {
                return Err(format!("{p}: Clar cover count"));
            }
            let degree = zz.degree().expect("ribbons have covers");
            if clar_number_formula(&p) as usize != degree {
                return Err(format!(
                    "{p}: Clar number formula {}, degree {degree}",
                    clar_number_formula(&p)
                ));
            }
        }
        Ok(())
    });
}

#[test]
fn acceptance_09_binomial_identity() {
    criterion(9, "binomial convolution identity", || {
        for v in 0..=12 {
            for b in 0..=v {
                if !binid_check(v, b).map_err(|e| e.to_string())? {
                    return Err(format!("v = {v}, b = {b}"));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn acceptance_10_decomposition_at_scale() {
    criterion(10, "57-hexagon decomposition under the time cap", || {
        let p = RibbonParams::new(3, 6, 5, 4).expect("positive");
        let closed = zz_ribbon(&p);
        let started = Instant::now();
        let decomposed = Engine::new().zz_decompose(&Benzenoid::ribbon(&p));
        if decomposed != closed {
            return Err(format!("engine {decomposed}, closed {closed}"));
        }
        within(Duration::from_secs(120), started, "Rb(3, 6, 5, 4)")
    });
}
