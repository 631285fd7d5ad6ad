//! The scalar abstraction used by the linear algebra.
//!
//! A cyclotomic zero cannot be produced from nothing (it needs the order `N`),
//! so every field carries a small copyable context from which its constants
//! are built.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cyclotomic::{CyclotomicRational, Order};

pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    type Ctx: Copy + PartialEq + fmt::Debug + Send + Sync;

    fn ctx(&self) -> Self::Ctx;
    fn zero_in(ctx: Self::Ctx) -> Self;
    fn one_in(ctx: Self::Ctx) -> Self;
    fn is_zero(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Panics on zero.
    fn inv(&self) -> Self;
}

impl Field for BigRational {
    type Ctx = ();

    fn ctx(&self) {}

    fn zero_in(_: ()) -> Self {
        BigRational::zero()
    }

    fn one_in(_: ()) -> Self {
        BigRational::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Self {
        self.recip()
    }
}

impl Field for CyclotomicRational {
    type Ctx = Order;

    fn ctx(&self) -> Order {
        self.order()
    }

    fn zero_in(order: Order) -> Self {
        CyclotomicRational::zero(order)
    }

    fn one_in(order: Order) -> Self {
        CyclotomicRational::one(order)
    }

    fn is_zero(&self) -> bool {
        CyclotomicRational::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Self {
        self.inverse().expect("inverse of zero in Q(q)")
    }
}
