//! Exact arithmetic in cyclotomic rings `Q[zeta_d]`, power-basis
//! coordinates modulo the d-th cyclotomic polynomial.
//!
//! Order 1 is the rationals; arithmetic silently promotes order-1
//! operands, so rational constants mix freely with roots of unity of any
//! single order. Mixing two orders both > 1 is an error.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{fmt_rat, is_integer, Rat};
use crate::ring::Ring;

pub fn euler_phi(d: u32) -> u32 {
    let mut n = d;
    let mut phi = d;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            phi = phi / p * (p - 1);
        }
        p += 1;
    }
    if n > 1 {
        phi = phi / n * (n - 1);
    }
    phi
}

/// Monic d-th cyclotomic polynomial, ascending coefficients, computed by
/// exact division of x^d - 1 by the cyclotomic polynomials of the proper
/// divisors of d.
pub fn cyclotomic_poly(d: u32) -> Vec<Rat> {
    // x^d - 1
    let mut num = vec![Rat::zero(); d as usize + 1];
    num[0] = -Rat::one();
    num[d as usize] = Rat::one();
    for e in 1..d {
        if d % e == 0 {
            num = poly_div_exact(&num, &cyclotomic_poly(e));
        }
    }
    num
}

/// Exact univariate division (remainder must vanish).
fn poly_div_exact(num: &[Rat], den: &[Rat]) -> Vec<Rat> {
    let mut rem: Vec<Rat> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd] == Rat::one(), "divisor must be monic");
    let mut quot = vec![Rat::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        quot[k] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            let v = rem[k + j].clone() - &c * dj;
            rem[k + j] = v;
        }
    }
    assert!(rem.iter().all(|r| r.is_zero()), "non-exact division");
    quot
}

/// Element of `Q[zeta_d]` in the power basis `1, zeta, ..., zeta^{phi(d)-1}`.
#[derive(Clone, Debug)]
pub struct CycloElem {
    order: u32,
    coords: Vec<Rat>,
}

/// Elements at different orders compare equal iff both are rational and
/// agree; within one order, coordinate-wise.
impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coords == other.coords;
        }
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }
}

impl CycloElem {
    pub fn new(order: u32, mut coords: Vec<Rat>) -> Result<Self> {
        let phi = euler_phi(order) as usize;
        if coords.len() > phi {
            return Err(Error::Input(format!(
                "expected at most {phi} coordinates for order {order}, got {}",
                coords.len()
            )));
        }
        coords.resize(phi, Rat::zero());
        Ok(CycloElem { order, coords })
    }

    pub fn from_rat_order(order: u32, r: Rat) -> Self {
        let mut coords = vec![Rat::zero(); euler_phi(order) as usize];
        coords[0] = r;
        CycloElem { order, coords }
    }

    pub fn rational(r: Rat) -> Self {
        CycloElem { order: 1, coords: vec![r] }
    }

    /// The primitive d-th root of unity `zeta_d`.
    pub fn zeta(order: u32) -> Self {
        Self::zeta_pow(order, 1)
    }

    /// `zeta_d^e` (exponent taken mod d).
    pub fn zeta_pow(order: u32, e: i64) -> Self {
        let d = order as i64;
        let e = e.rem_euclid(d) as usize;
        let mut poly = vec![Rat::zero(); e + 1];
        poly[e] = Rat::one();
        Self::reduce(order, poly)
    }

    fn reduce(order: u32, mut poly: Vec<Rat>) -> Self {
        let modp = cyclotomic_poly(order);
        let deg = modp.len() - 1;
        // reduce degree-by-degree using zeta^deg = -(lower terms)
        while poly.len() > deg {
            let top = poly.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let k = poly.len() - deg;
            for j in 0..deg {
                let v = poly[k + j].clone() - &top * &modp[j];
                poly[k + j] = v;
            }
        }
        poly.resize(deg, Rat::zero());
        CycloElem { order, coords: poly }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// The underlying rational, when the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rat> {
        self.coords[1..]
            .iter()
            .all(|c| c.is_zero())
            .then(|| &self.coords[0])
    }

    /// True iff all power-basis coordinates are integers.
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(is_integer)
    }

    /// Promote to a common order; only 1 -> d promotions are possible.
    fn promote_pair(a: &Self, b: &Self) -> Result<(Self, Self)> {
        if a.order == b.order {
            return Ok((a.clone(), b.clone()));
        }
        if a.order == 1 {
            let a2 = Self::from_rat_order(b.order, a.coords[0].clone());
            return Ok((a2, b.clone()));
        }
        if b.order == 1 {
            let b2 = Self::from_rat_order(a.order, b.coords[0].clone());
            return Ok((a.clone(), b2));
        }
        Err(Error::OrderMismatch(a.order, b.order))
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        let (a, mut b) = Self::promote_pair(self, rhs)?;
        for (i, c) in a.coords.iter().enumerate() {
            let v = b.coords[i].clone() + c;
            b.coords[i] = v;
        }
        Ok(b)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        let (a, b) = Self::promote_pair(self, rhs)?;
        let mut poly = vec![Rat::zero(); a.coords.len() + b.coords.len()];
        for (i, ai) in a.coords.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coords.iter().enumerate() {
                let v = poly[i + j].clone() + ai * bj;
                poly[i + j] = v;
            }
        }
        Ok(Self::reduce(a.order, poly))
    }
}

impl Ring for CycloElem {
    fn zero() -> Self {
        CycloElem::rational(Rat::zero())
    }
    fn one() -> Self {
        CycloElem::rational(Rat::one())
    }
    fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
    fn add(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("cyclotomic order mismatch")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("cyclotomic order mismatch")
    }
    fn neg(&self) -> Self {
        CycloElem {
            order: self.order,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
    fn from_rat(r: &Rat) -> Self {
        CycloElem::rational(r.clone())
    }
    fn inv(&self) -> Option<Self> {
        // only rational elements need inversion in this crate
        if self.coords[1..].iter().all(|c| c.is_zero()) && !self.coords[0].is_zero() {
            Some(CycloElem::from_rat_order(self.order, self.coords[0].recip()))
        } else {
            None
        }
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = fmt_rat(c);
            let part = match i {
                0 => cs,
                1 if cs == "1" => "z".to_string(),
                1 => format!("{cs}*z"),
                _ if cs == "1" => format!("z^{i}"),
                _ => format!("{cs}*z^{i}"),
            };
            parts.push(part);
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
