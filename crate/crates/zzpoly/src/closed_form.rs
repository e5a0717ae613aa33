//! Closed-form ZZ polynomials for parallelogram and ribbon benzenoids,
//! and the invariants they determine.
//!
//! A parallelogram `M(m, n)` has
//! `ZZ = sum_j C(m, j) C(n, j) (1 + x)^j`, and a ribbon decomposes over
//! its central interface into pairs of free parallelograms:
//!
//! ```text
//! ZZ(Rb) = sum_{k=0}^{min(n1,m1)} ZZ(M(m1-k, n2+k)) ZZ(M(m2+k, n1-k))
//!        + x sum_{k=1}^{min(n1,m1)} ZZ(M(m1-k, n2-1+k)) ZZ(M(m2-1+k, n1-k))
//! ```
//!
//! The fully expanded triple sum is kept as an independent evaluation
//! path, and the Kekulé / cover-count / Clar-number expressions are
//! implemented directly so they can be checked against evaluations of the
//! polynomial itself.

use std::cmp::min;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::lattice::{LatticeError, RibbonParams};
use crate::poly::Polynomial;

#[derive(Debug, Error)]
pub enum ClosedFormError {
    #[error("no special-case recurrence for n1 = {n1}; only n1 = 1 and n1 = 2 have one")]
    UnsupportedSpecialCase { n1: u32 },
    #[error("invalid substitution: {0}")]
    InvalidSubstitution(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("zero polynomial has no covers, so no invariants")]
    NonKekulean,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

// ---- Binomial coefficients ----

static PASCAL: OnceLock<RwLock<Vec<Vec<BigUint>>>> = OnceLock::new();

/// Exact binomial coefficient from a memoized Pascal table; zero for
/// `k > n`, so printed summation bounds are safe to use verbatim.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let n = n as usize;
    let k = k as usize;
    let table = PASCAL.get_or_init(|| RwLock::new(vec![vec![BigUint::one()]]));
    {
        let rows = table.read().expect("pascal table poisoned");
        if let Some(row) = rows.get(n) {
            return row[k].clone();
        }
    }
    let mut rows = table.write().expect("pascal table poisoned");
    while rows.len() <= n {
        let prev = rows.last().expect("table starts nonempty");
        let mut row = vec![BigUint::one(); prev.len() + 1];
        for i in 1..prev.len() {
            row[i] = &prev[i - 1] + &prev[i];
        }
        rows.push(row);
    }
    rows[n][k].clone()
}

// ---- Parallelograms ----

pub fn zz_parallelogram(m: u32, n: u32) -> Polynomial {
    let jmax = min(m, n) as u64;
    let one_plus_x = Polynomial::from_u64_coeffs(&[1, 1]);
    let mut power = Polynomial::one();
    let mut acc = Polynomial::zero();
    for j in 0..=jmax {
        let c = binomial(m as u64, j) * binomial(n as u64, j);
        acc += &power.scaled(&c);
        if j < jmax {
            power = &power * &one_plus_x;
        }
    }
    acc
}

/// `ZZ(M(m, n))` extended to out-of-range sides: a parallelogram with a
/// negative side does not exist and admits no covers at all.
fn zz_m(m: i64, n: i64) -> Polynomial {
    if m < 0 || n < 0 {
        Polynomial::zero()
    } else {
        zz_parallelogram(m as u32, n as u32)
    }
}

// ---- Ribbons ----

/// Closed form: sum over the central-interface classes of weighted
/// products of free-parallelogram polynomials.
pub fn zz_ribbon(p: &RibbonParams) -> Polynomial {
    let (n1, n2, m1, m2) = (p.n1() as i64, p.n2() as i64, p.m1() as i64, p.m2() as i64);
    let kmax = min(n1, m1);
    let mut acc = Polynomial::zero();
    for k in 0..=kmax {
        acc += &(&zz_m(m1 - k, n2 + k) * &zz_m(m2 + k, n1 - k));
    }
    for k in 1..=kmax {
        let t = &zz_m(m1 - k, n2 - 1 + k) * &zz_m(m2 - 1 + k, n1 - k);
        acc += &t.mul_xpow(1);
    }
    acc
}

/// The same polynomial with the parallelogram factors expanded into
/// binomials, as an independent evaluation path.
pub fn zz_ribbon_triple_sum(p: &RibbonParams) -> Polynomial {
    let (n1, n2, m1, m2) = (p.n1() as u64, p.n2() as u64, p.m1() as u64, p.m2() as u64);
    let kmax = min(n1, m1);

    let mut powers = vec![Polynomial::one()];
    let one_plus_x = Polynomial::from_u64_coeffs(&[1, 1]);
    for _ in 0..m1 + n1 {
        powers.push(powers.last().unwrap() * &one_plus_x);
    }

    let mut acc = Polynomial::zero();
    for k in 0..=kmax {
        for j in 0..=m1 - k {
            let cj = binomial(m1 - k, j) * binomial(n2 + k, j);
            if cj.is_zero() {
                continue;
            }
            for i in 0..=n1 - k {
                let c = &cj * binomial(m2 + k, i) * binomial(n1 - k, i);
                acc += &powers[(i + j) as usize].scaled(&c);
            }
        }
    }
    let mut rings = Polynomial::zero();
    for k in 1..=kmax {
        for j in 0..=m1 - k {
            let cj = binomial(m1 - k, j) * binomial(n2 - 1 + k, j);
            if cj.is_zero() {
                continue;
            }
            for i in 0..=n1 - k {
                let c = &cj * binomial(m2 - 1 + k, i) * binomial(n1 - k, i);
                rings += &powers[(i + j) as usize].scaled(&c);
            }
        }
    }
    acc + rings.mul_xpow(1)
}

/// Short recurrences for one- and two-row overhangs (`n1 = 1` or `2`).
/// Terms whose parallelogram parameters fall below zero describe
/// structures that do not exist and contribute nothing.
pub fn zz_ribbon_special(p: &RibbonParams) -> Result<Polynomial, ClosedFormError> {
    let (n2, m1, m2) = (p.n2() as i64, p.m1() as i64, p.m2() as i64);
    match p.n1() {
        1 => Ok(&(&zz_m(m1, n2) * &zz_m(m2, 1)) + &(&zz_m(m1 - 1, n2 + 1)
            + &zz_m(m1 - 1, n2).mul_xpow(1))),
        2 => {
            let mut acc = &zz_m(m1, n2) * &zz_m(m2, 2);
            acc += &(&zz_m(m1 - 1, n2 + 1) * &zz_m(m2 + 1, 1));
            acc += &(&zz_m(m1 - 1, n2) * &zz_m(m2, 1)).mul_xpow(1);
            acc += &zz_m(m1 - 2, n2 + 2);
            acc += &zz_m(m1 - 2, n2 + 1).mul_xpow(1);
            Ok(acc)
        }
        n1 => Err(ClosedFormError::UnsupportedSpecialCase { n1 }),
    }
}

// ---- Vertex-notation wrappers ----

/// The three-parameter ribbon `V(k, m, n)`, an `m`-by-`n` parallelogram
/// frame with the corner cut at `k`.
pub fn v3_ribbon(k: u32, m: u32, n: u32) -> Result<RibbonParams, ClosedFormError> {
    if k < 1 || m <= k || n <= k {
        return Err(ClosedFormError::InvalidSubstitution(format!(
            "V({k}, {m}, {n}) requires 1 <= k, k < m, k < n"
        )));
    }
    Ok(RibbonParams::new(k, n - k, k, m - k)?)
}

pub fn zz_v3(k: u32, m: u32, n: u32) -> Result<Polynomial, ClosedFormError> {
    Ok(zz_ribbon(&v3_ribbon(k, m, n)?))
}

/// The four-parameter form `V(k1, k2, m, n)` with independent cut depths
/// along the two axes.
pub fn v4_ribbon(k1: u32, k2: u32, m: u32, n: u32) -> Result<RibbonParams, ClosedFormError> {
    if k1 < 1 || k2 < 1 || n <= k1 || m <= k2 {
        return Err(ClosedFormError::InvalidSubstitution(format!(
            "V({k1}, {k2}, {m}, {n}) requires 1 <= k1 < n and 1 <= k2 < m"
        )));
    }
    Ok(RibbonParams::new(k1, n - k1, k2, m - k2)?)
}

pub fn zz_v4(k1: u32, k2: u32, m: u32, n: u32) -> Result<Polynomial, ClosedFormError> {
    Ok(zz_ribbon(&v4_ribbon(k1, k2, m, n)?))
}

// ---- Invariant counts ----

/// Kekulé structure count: the ring-free class sums with every cover
/// weighted 1.
pub fn kekule_ribbon(p: &RibbonParams) -> BigUint {
    let (n1, n2, m1, m2) = (p.n1() as u64, p.n2() as u64, p.m1() as u64, p.m2() as u64);
    let mut acc = BigUint::zero();
    for k in 0..=min(n1, m1) {
        for j in 0..=m1 - k {
            let cj = binomial(m1 - k, j) * binomial(n2 + k, j);
            for i in 0..=n1 - k {
                acc += &cj * binomial(m2 + k, i) * binomial(n1 - k, i);
            }
        }
    }
    acc
}

/// Total Clar cover count: both class sums with every cover weighted
/// `2^(i+j)`.
pub fn clar_cover_count_ribbon(p: &RibbonParams) -> BigUint {
    let (n1, n2, m1, m2) = (p.n1() as u64, p.n2() as u64, p.m1() as u64, p.m2() as u64);
    let kmax = min(n1, m1);
    let mut acc = BigUint::zero();
    for k in 0..=kmax {
        for j in 0..=m1 - k {
            let cj = binomial(m1 - k, j) * binomial(n2 + k, j);
            for i in 0..=n1 - k {
                acc += (&cj * binomial(m2 + k, i) * binomial(n1 - k, i)) << (i + j);
            }
        }
    }
    for k in 1..=kmax {
        for j in 0..=m1 - k {
            let cj = binomial(m1 - k, j) * binomial(n2 - 1 + k, j);
            for i in 0..=n1 - k {
                acc += (&cj * binomial(m2 - 1 + k, i) * binomial(n1 - k, i)) << (i + j);
            }
        }
    }
    acc
}

/// Clar number: the largest class degree, maximized separately over the
/// ring-free and ring classes.
pub fn clar_number_formula(p: &RibbonParams) -> u32 {
    let (n1, n2, m1, m2) = (p.n1() as i64, p.n2() as i64, p.m1() as i64, p.m2() as i64);
    let kmax = min(n1, m1);
    let straight = (0..=kmax)
        .map(|k| min(m1 - k, n2 + k) + min(n1 - k, m2 + k))
        .max()
        .unwrap_or(0);
    let ring = (1..=kmax)
        .map(|k| 1 + min(m1 - k, n2 - 1 + k) + min(n1 - k, m2 - 1 + k))
        .max()
        .unwrap_or(0);
    straight.max(ring) as u32
}

/// The counts a nonzero ZZ polynomial carries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZzInvariants {
    /// Kekulé structures: covers with no ring, `ZZ(0)`.
    pub kekule: BigUint,
    /// All Clar covers, `ZZ(1)`.
    pub clar_covers: BigUint,
    /// Clar number: the largest attainable ring count, `deg ZZ`.
    pub clar_number: usize,
    /// Covers attaining the Clar number: the leading coefficient.
    pub clar_structures: BigUint,
}

pub fn invariants_from_zz(zz: &Polynomial) -> Result<ZzInvariants, ClosedFormError> {
    let clar_number = zz.degree().ok_or(ClosedFormError::NonKekulean)?;
    Ok(ZzInvariants {
        kekule: zz.coeff(0),
        clar_covers: zz.eval_u64(1),
        clar_number,
        clar_structures: zz
            .leading_coeff()
            .expect("nonzero polynomial has a leading coefficient")
            .clone(),
    })
}

/// Checks `sum_j C(b, j) C(v-b, j) = C(v, b)` exactly.
pub fn binid_check(v: u64, b: u64) -> Result<bool, ClosedFormError> {
    if b > v {
        return Err(ClosedFormError::Precondition(format!(
            "binid_check requires b <= v, got v = {v}, b = {b}"
        )));
    }
    let mut lhs = BigUint::zero();
    for j in 0..=b {
        lhs += binomial(b, j) * binomial(v - b, j);
    }
    Ok(lhs == binomial(v, b))
}
