//! Exact arithmetic in `Z[q]` and `Q(q)` where `q` is a primitive `N`-th root
//! of unity for a prime `N`.
//!
//! Elements are stored over the power basis `1, q, ..., q^{N-2}` of
//! `Z[x] / (1 + x + ... + x^{N-1})`. Because `N` is prime this polynomial is
//! the `N`-th cyclotomic polynomial, so the quotient is exactly the ring in
//! which `[N]_q = 0` while `[k]_q != 0` for `0 < k < N`. The representation is
//! canonical: two elements are equal iff their coefficient vectors are equal.
//!
//! The coefficient type is generic; [`CyclotomicInt`] and
//! [`CyclotomicRational`] are the two instances used throughout the crate.

mod qnumbers;

pub use qnumbers::{
    invert_qbasic, permutation_sum, qbasic, qbinomial, qbinomial_extended, qfactorial,
    qfactorial_extended, QNumberTable, MAX_PERMUTATION_N,
};

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A validated prime order `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Order(u32);

impl Order {
    pub fn new(n: u32) -> Result<Self> {
        if is_prime(n as u64) {
            Ok(Order(n))
        } else {
            Err(Error::NotPrime(n as u64))
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Number of basis coefficients, `N - 1`.
    #[inline]
    pub fn dim(self) -> usize {
        self.0 as usize - 1
    }

    /// Reduces an integer exponent of `q` into `0..N`.
    #[inline]
    pub fn exponent(self, e: i64) -> usize {
        e.rem_euclid(self.0 as i64) as usize
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element `sum c_i q^i` (`0 <= i <= N-2`) of the cyclotomic ring over `T`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclotomic<T> {
    order: Order,
    coeffs: Vec<T>,
}

/// Elements of `Z[q]`.
pub type CyclotomicInt = Cyclotomic<BigInt>;
/// Elements of the fraction field `Q(q)`.
pub type CyclotomicRational = Cyclotomic<BigRational>;

impl<T: Clone + Num> Cyclotomic<T> {
    pub fn zero(order: Order) -> Self {
        Cyclotomic {
            order,
            coeffs: vec![T::zero(); order.dim()],
        }
    }

    pub fn one(order: Order) -> Self {
        Self::constant(order, T::one())
    }

    pub fn constant(order: Order, c: T) -> Self {
        let mut coeffs = vec![T::zero(); order.dim()];
        coeffs[0] = c;
        Cyclotomic { order, coeffs }
    }

    /// `q^e` for any integer exponent (negative exponents use `q^N = 1`).
    pub fn q_pow(order: Order, e: i64) -> Self {
        let mut poly = vec![T::zero(); order.get() as usize];
        poly[order.exponent(e)] = T::one();
        Self::from_poly(order, poly)
    }

    /// Builds an element from canonical coefficients; the length must be `N - 1`.
    pub fn from_coeffs(order: Order, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len() != order.dim() {
            return Err(Error::Shape(format!(
                "order {} needs {} coefficients, got {}",
                order,
                order.dim(),
                coeffs.len()
            )));
        }
        Ok(Cyclotomic { order, coeffs })
    }

    /// Reduces an arbitrary polynomial `sum p_i x^i` into canonical form.
    pub fn from_poly(order: Order, poly: impl IntoIterator<Item = T>) -> Self {
        let n = order.get() as usize;
        let mut folded = vec![T::zero(); n];
        for (i, c) in poly.into_iter().enumerate() {
            let slot = &mut folded[i % n];
            *slot = slot.clone() + c;
        }
        // x^{N-1} = -(1 + x + ... + x^{N-2})
        let top = folded.pop().unwrap_or_else(T::zero);
        let coeffs = folded.into_iter().map(|c| c - top.clone()).collect();
        Cyclotomic { order, coeffs }
    }

    #[inline]
    pub fn order(&self) -> Order {
        self.order
    }

    #[inline]
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Returns the rational constant when the element lies in the prime field.
    pub fn as_constant(&self) -> Option<&T> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Image under the Galois automorphism `q -> q^a`, `gcd(a, N) = 1`.
    pub fn conjugate(&self, a: u32) -> Self {
        let n = self.order.get() as usize;
        let mut poly = vec![T::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            let slot = &mut poly[(i * a as usize) % n];
            *slot = slot.clone() + c.clone();
        }
        Self::from_poly(self.order, poly)
    }

    /// Product of all nontrivial conjugates; `self * adjugate()` is the norm.
    fn adjugate(&self) -> Self {
        (2..self.order.get()).fold(Self::one(self.order), |acc, a| &acc * &self.conjugate(a))
    }

    /// Field norm down to the coefficient ring.
    pub fn norm(&self) -> T {
        let n = self * &self.adjugate();
        debug_assert!(n.as_constant().is_some(), "norm must be rational");
        n.coeffs[0].clone()
    }

    /// Multiplicative inverse, if it exists with coefficients in `T`.
    ///
    /// Over a field this succeeds for every nonzero element. Over `Z` it
    /// succeeds exactly for units.
    pub fn inverse(&self) -> Option<Self> {
        let adj = self.adjugate();
        let norm = (self * &adj).coeffs[0].clone();
        if norm.is_zero() {
            return None;
        }
        let mut coeffs = Vec::with_capacity(adj.coeffs.len());
        for c in adj.coeffs {
            let quot = c.clone() / norm.clone();
            if quot.clone() * norm.clone() != c {
                return None;
            }
            coeffs.push(quot);
        }
        Some(Cyclotomic {
            order: self.order,
            coeffs,
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|inv| self * &inv)
    }

    fn assert_same_order(&self, rhs: &Self) {
        assert_eq!(
            self.order, rhs.order,
            "cyclotomic arithmetic across different orders"
        );
    }
}

impl CyclotomicInt {
    pub fn to_rational(&self) -> CyclotomicRational {
        Cyclotomic {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }

    pub fn from_i64s(order: Order, coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(order, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }
}

impl CyclotomicRational {
    /// Returns the element as a member of `Z[q]` when all coefficients are integral.
    pub fn to_integer(&self) -> Option<CyclotomicInt> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()?;
        Some(Cyclotomic {
            order: self.order,
            coeffs,
        })
    }

    pub fn from_i64s(order: Order, coeffs: &[i64]) -> Result<Self> {
        CyclotomicInt::from_i64s(order, coeffs).map(|c| c.to_rational())
    }

    pub fn from_integer(order: Order, n: i64) -> Self {
        Self::constant(order, BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<CyclotomicInt> for CyclotomicRational {
    fn from(value: CyclotomicInt) -> Self {
        value.to_rational()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a, T: Clone + Num> $trait<&'a Cyclotomic<T>> for &'a Cyclotomic<T> {
            type Output = Cyclotomic<T>;
            fn $method(self, rhs: &'a Cyclotomic<T>) -> Cyclotomic<T> {
                self.assert_same_order(rhs);
                #[allow(clippy::redundant_closure_call)]
                ($body)(self, rhs)
            }
        }
        impl<T: Clone + Num> $trait<Cyclotomic<T>> for Cyclotomic<T> {
            type Output = Cyclotomic<T>;
            fn $method(self, rhs: Cyclotomic<T>) -> Cyclotomic<T> {
                (&self).$method(&rhs)
            }
        }
        impl<'a, T: Clone + Num> $trait<&'a Cyclotomic<T>> for Cyclotomic<T> {
            type Output = Cyclotomic<T>;
            fn $method(self, rhs: &'a Cyclotomic<T>) -> Cyclotomic<T> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Cyclotomic<T>, b: &Cyclotomic<T>| Cyclotomic {
    order: a.order,
    coeffs: a
        .coeffs
        .iter()
        .zip(&b.coeffs)
        .map(|(x, y)| x.clone() + y.clone())
        .collect(),
});

forward_binop!(Sub, sub, |a: &Cyclotomic<T>, b: &Cyclotomic<T>| Cyclotomic {
    order: a.order,
    coeffs: a
        .coeffs
        .iter()
        .zip(&b.coeffs)
        .map(|(x, y)| x.clone() - y.clone())
        .collect(),
});

forward_binop!(Mul, mul, |a: &Cyclotomic<T>, b: &Cyclotomic<T>| {
    let d = a.coeffs.len();
    let mut poly = vec![T::zero(); 2 * d.max(1)];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            poly[i + j] = poly[i + j].clone() + x.clone() * y.clone();
        }
    }
    Cyclotomic::from_poly(a.order, poly)
});

impl<'a> Div<&'a CyclotomicRational> for &'a CyclotomicRational {
    type Output = CyclotomicRational;

    /// Panics on division by zero.
    fn div(self, rhs: &'a CyclotomicRational) -> CyclotomicRational {
        self.checked_div(rhs).expect("division by zero in Q(q)")
    }
}

impl Div for CyclotomicRational {
    type Output = CyclotomicRational;
    fn div(self, rhs: CyclotomicRational) -> CyclotomicRational {
        &self / &rhs
    }
}

impl<T: Clone + Num + Neg<Output = T>> Neg for Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Cyclotomic<T> {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl<T: Clone + Num + Neg<Output = T>> Neg for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Cyclotomic<T> {
        -self.clone()
    }
}

impl<T: Clone + Num> AddAssign<&Cyclotomic<T>> for Cyclotomic<T> {
    fn add_assign(&mut self, rhs: &Cyclotomic<T>) {
        self.assert_same_order(rhs);
        for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *x = x.clone() + y.clone();
        }
    }
}

impl<T: Clone + Num> SubAssign<&Cyclotomic<T>> for Cyclotomic<T> {
    fn sub_assign(&mut self, rhs: &Cyclotomic<T>) {
        self.assert_same_order(rhs);
        for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *x = x.clone() - y.clone();
        }
    }
}

impl<T: Clone + Num> MulAssign<&Cyclotomic<T>> for Cyclotomic<T> {
    fn mul_assign(&mut self, rhs: &Cyclotomic<T>) {
        *self = &*self * rhs;
    }
}

impl<T: fmt::Display> fmt::Display for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// Renders an element as a polynomial in `q`, e.g. `1 + q - 2q^3`.
pub struct Polynomial<'a, T>(&'a Cyclotomic<T>);

impl<T> Cyclotomic<T> {
    pub fn polynomial(&self) -> Polynomial<'_, T> {
        Polynomial(self)
    }
}

impl<T: Clone + Num + Signed + fmt::Display> fmt::Display for Polynomial<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.0.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, sign) {
                (true, "-") => f.write_str("-")?,
                (true, _) => {}
                (false, s) => write!(f, " {s} ")?,
            }
            first = false;
            let a = c.abs();
            let unit = a.is_one();
            match i {
                0 => write!(f, "{a}")?,
                _ if unit => {}
                _ if a.to_string().contains('/') => write!(f, "({a})")?,
                _ => write!(f, "{a}")?,
            }
            match i {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Parses the canonical coefficient list `[c0, c1, ...]`; the order is
/// inferred from the length (`N = len + 1`).
impl<T: Clone + Num + FromStr> FromStr for Cyclotomic<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected `[c0, c1, ...]`, got `{s}`")))?;
        let coeffs = inner
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<T>()
                    .map_err(|_| Error::Parse(format!("bad coefficient `{t}` in `{s}`")))
            })
            .collect::<Result<Vec<T>>>()?;
        let order = Order::new(coeffs.len() as u32 + 1)?;
        Cyclotomic::from_coeffs(order, coeffs)
    }
}

impl<T: fmt::Display> Serialize for Cyclotomic<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de, T: Clone + Num + FromStr> Deserialize<'de> for Cyclotomic<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
