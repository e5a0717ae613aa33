//! Dense univariate counting polynomials with arbitrary-precision
//! nonnegative integer coefficients.
//!
//! `coeffs[k]` counts the objects of order `k` (for a ZZ polynomial, the
//! Clar covers with `k` aromatic rings), so coefficients are nonnegative
//! and quickly outgrow fixed-width integers. Coefficients are stored in
//! ascending degree order; the vector is empty for the zero polynomial and
//! otherwise ends with a nonzero entry. The zero polynomial has no degree
//! (`degree()` is `None`), which keeps "no covers at all" distinct from
//! the constant polynomials of genuine structures.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigUint>,
}

// ---- Constructors ----

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigUint::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial {
            coeffs: vec![BigUint::zero(), BigUint::one()],
        }
    }

    pub fn constant(c: BigUint) -> Self {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { coeffs: vec![c] }
        }
    }

    /// Builds from coefficients in ascending degree order, stripping
    /// trailing zeros so equal polynomials compare equal.
    pub fn from_coeffs(coeffs: Vec<BigUint>) -> Self {
        let mut p = Polynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_u64_coeffs(coeffs: &[u64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

// ---- Queries ----

impl Polynomial {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading_coeff(&self) -> Option<&BigUint> {
        self.coeffs.last()
    }

    /// Coefficient of `x^k` (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> BigUint {
        self.coeffs.get(k).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Coefficients in ascending degree order, without trailing zeros.
    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Evaluates at a nonnegative integer point by Horner's rule.
    pub fn eval(&self, t: &BigUint) -> BigUint {
        let mut acc = BigUint::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_u64(&self, t: u64) -> BigUint {
        self.eval(&BigUint::from(t))
    }
}

// ---- Arithmetic ----

impl Polynomial {
    /// Multiplies every coefficient by `c`.
    pub fn scaled(&self, c: &BigUint) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn mul_xpow(&self, k: usize) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigUint::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        // sum of nonnegative coefficients never needs renormalizing
        Polynomial { coeffs }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigUint::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigUint::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial { coeffs }
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

// ---- Formatting and serialization ----

impl fmt::Display for Polynomial {
    /// Renders in ascending degree order with zero terms omitted,
    /// e.g. `5 + 5x + x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{c}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    /// Serializes as an ascending array of decimal strings, `["5","5","1"]`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(BigUint::to_string))
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(raw.len());
        for s in &raw {
            let c = BigUint::from_str(s)
                .map_err(|_| D::Error::custom(format!("invalid coefficient {s:?}")))?;
            coeffs.push(c);
        }
        Ok(Polynomial::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(cs: &[u64]) -> Polynomial {
        Polynomial::from_u64_coeffs(cs)
    }

    #[test]
    fn zero_is_canonical() {
        assert!(Polynomial::zero().is_zero());
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(Polynomial::zero().leading_coeff(), None);
        assert_eq!(p(&[0, 0, 0]), Polynomial::zero());
        assert_eq!(Polynomial::constant(BigUint::zero()), Polynomial::zero());
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        let q = p(&[5, 5, 1, 0, 0]);
        assert_eq!(q.degree(), Some(2));
        assert_eq!(q.coeffs().len(), 3);
        assert_eq!(q, p(&[5, 5, 1]));
    }

    #[test]
    fn degree_and_leading() {
        assert_eq!(Polynomial::one().degree(), Some(0));
        assert_eq!(Polynomial::x().degree(), Some(1));
        let q = p(&[5, 5, 1]);
        assert_eq!(q.degree(), Some(2));
        assert_eq!(q.leading_coeff(), Some(&BigUint::one()));
        assert_eq!(q.coeff(0), BigUint::from(5u32));
        assert_eq!(q.coeff(7), BigUint::zero());
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p(&[2, 1]) + &p(&[3, 2]), p(&[5, 3]));
        assert_eq!(&p(&[1]) + &Polynomial::zero(), p(&[1]));
        assert_eq!(&Polynomial::zero() + &Polynomial::zero(), Polynomial::zero());
    }

    #[test]
    fn mul_examples() {
        // (2 + x)^2 = 4 + 4x + x^2
        assert_eq!(&p(&[2, 1]) * &p(&[2, 1]), p(&[4, 4, 1]));
        assert_eq!(&p(&[2, 1]) * &Polynomial::zero(), Polynomial::zero());
        assert_eq!(&p(&[2, 1]) * &Polynomial::one(), p(&[2, 1]));
    }

    #[test]
    fn eval_examples() {
        let q = p(&[5, 5, 1]);
        assert_eq!(q.eval_u64(0), BigUint::from(5u32));
        assert_eq!(q.eval_u64(1), BigUint::from(11u32));
        assert_eq!(q.eval_u64(2), BigUint::from(19u32));
        assert_eq!(Polynomial::zero().eval_u64(7), BigUint::zero());
    }

    #[test]
    fn scaled_and_shifted() {
        assert_eq!(p(&[1, 2]).scaled(&BigUint::from(3u32)), p(&[3, 6]));
        assert_eq!(p(&[1, 2]).scaled(&BigUint::zero()), Polynomial::zero());
        assert_eq!(p(&[1, 2]).mul_xpow(2), p(&[0, 0, 1, 2]));
        assert_eq!(Polynomial::zero().mul_xpow(3), Polynomial::zero());
    }

    #[test]
    fn pow_examples() {
        let one_plus_x = p(&[1, 1]);
        assert_eq!(one_plus_x.pow(0), Polynomial::one());
        assert_eq!(one_plus_x.pow(3), p(&[1, 3, 3, 1]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::one().to_string(), "1");
        assert_eq!(p(&[5, 5, 1]).to_string(), "5 + 5x + x^2");
        assert_eq!(p(&[0, 2, 0, 1]).to_string(), "2x + x^3");
    }

    #[test]
    fn json_round_trip() {
        let q = p(&[5, 5, 1]);
        let js = serde_json::to_string(&q).unwrap();
        assert_eq!(js, r#"["5","5","1"]"#);
        let back: Polynomial = serde_json::from_str(&js).unwrap();
        assert_eq!(back, q);

        let zero: Polynomial = serde_json::from_str("[]").unwrap();
        assert!(zero.is_zero());
        assert_eq!(serde_json::to_string(&zero).unwrap(), "[]");
    }

    #[test]
    fn json_rejects_bad_coefficients() {
        assert!(serde_json::from_str::<Polynomial>(r#"["-3"]"#).is_err());
        assert!(serde_json::from_str::<Polynomial>(r#"["abc"]"#).is_err());
        assert!(serde_json::from_str::<Polynomial>(r#"[3]"#).is_err());
    }

    fn poly_strategy() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(0u64..1000, 0..6).prop_map(|cs| Polynomial::from_u64_coeffs(&cs))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn add_commutes(a in poly_strategy(), b in poly_strategy()) {
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn mul_commutes(a in poly_strategy(), b in poly_strategy()) {
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn mul_distributes(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn mul_associates(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn degree_of_product_adds(a in poly_strategy(), b in poly_strategy()) {
            match (a.degree(), b.degree()) {
                (Some(da), Some(db)) => prop_assert_eq!((&a * &b).degree(), Some(da + db)),
                _ => prop_assert!((&a * &b).is_zero()),
            }
        }

        #[test]
        fn eval_is_ring_homomorphism(a in poly_strategy(), b in poly_strategy(), t in 0u64..5) {
            let t = BigUint::from(t);
            prop_assert_eq!((&a + &b).eval(&t), a.eval(&t) + b.eval(&t));
            prop_assert_eq!((&a * &b).eval(&t), a.eval(&t) * b.eval(&t));
        }

        #[test]
        fn serde_round_trips(a in poly_strategy()) {
            let js = serde_json::to_string(&a).unwrap();
            let back: Polynomial = serde_json::from_str(&js).unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
