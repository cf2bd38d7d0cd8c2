//! Coefficient-ring abstraction for truncated power series.
//!
//! Every ring here is a commutative Q-algebra: series reversion, exp and
//! log all divide by integers, so `from_rat` is part of the contract.

use std::fmt::{Debug, Display};

use num_traits::{One, Zero};

use crate::rational::Rat;

pub trait Ring: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rat(r: &Rat) -> Self;
    /// Multiplicative inverse, when one exists in the ring.
    fn inv(&self) -> Option<Self>;

    fn mul_rat(&self, r: &Rat) -> Self {
        self.mul(&Self::from_rat(r))
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
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
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}
