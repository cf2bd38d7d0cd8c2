//! Big-rational scalars and small number-theoretic helpers.
//!
//! `Rat` is the base scalar of the whole crate: an arbitrary-precision
//! rational kept in lowest terms with positive denominator (the invariant
//! is maintained by `num-rational` itself).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Rational p/q from machine integers.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

/// Fractional part in `[0, 1)`: `r - floor(r)`.
pub fn frac_part(r: &Rat) -> Rat {
    r - r.floor()
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// p-adic condition used by the universal Kummer congruence: in lowest
/// terms, the denominator is coprime to `p` and the numerator is divisible
/// by `p`.
pub fn is_p_integral_and_divisible(r: &Rat, p: u64) -> bool {
    let p = Int::from(p);
    r.denom().gcd(&p).is_one() && r.numer().mod_floor(&p).is_zero()
}

pub fn factorial(n: usize) -> Int {
    let mut acc = Int::one();
    for k in 2..=n {
        acc *= Int::from(k);
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for j in 0..k {
        acc = acc * Int::from(n - j) / Int::from(j + 1);
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn primes_upto(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| is_prime(p)).collect()
}

/// Parse "p/q" or "p".
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::Input(format!("invalid rational '{s}'"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: Int = p.trim().parse().map_err(|_| bad())?;
            let q: Int = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
        None => {
            let p: Int = s.trim().parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(p))
        }
    }
}

/// Canonical "p/q" (or "p" when integral) text form.
pub fn fmt_rat(r: &Rat) -> String {
    if is_integer(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Residue of a rational with p-coprime denominator, in `0..p`.
pub fn mod_p(r: &Rat, p: u64) -> Option<u64> {
    let pb = Int::from(p);
    if !r.denom().gcd(&pb).is_one() {
        return None;
    }
    // numer * denom^{-1} mod p
    let d = r.denom().mod_floor(&pb);
    let mut inv = None;
    let du: u64 = d.try_into().ok()?;
    for x in 1..p {
        if du * x % p == 1 {
            inv = Some(x);
            break;
        }
    }
    let inv = inv?;
    let n = r.numer().mod_floor(&pb);
    let nu: u64 = n.try_into().ok()?;
    Some(nu * inv % p)
}

pub fn is_even_int(r: &Rat) -> bool {
    is_integer(r) && r.numer().is_even()
}

pub fn is_odd_int(r: &Rat) -> bool {
    is_integer(r) && r.numer().is_odd()
}

pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frac_part_is_in_unit_interval() {
        assert_eq!(frac_part(&ratio(-1, 2)), ratio(1, 2));
        assert_eq!(frac_part(&ratio(2, 3)), ratio(2, 3));
        assert_eq!(frac_part(&rat(3)), rat(0));
        assert_eq!(frac_part(&ratio(-7, 3)), ratio(2, 3));
    }

    #[test]
    fn p_integrality() {
        assert!(is_p_integral_and_divisible(&ratio(3, 5), 3));
        assert!(!is_p_integral_and_divisible(&ratio(1, 3), 3));
        assert!(!is_p_integral_and_divisible(&rat(2), 3));
    }

    #[test]
    fn binomials_and_primes() {
        assert_eq!(binomial(6, 2), Int::from(15));
        assert_eq!(binomial(4, 5), Int::zero());
        assert_eq!(primes_upto(12), vec![2, 3, 5, 7, 11]);
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rat("3/2").unwrap(), ratio(3, 2));
        assert_eq!(parse_rat("-4").unwrap(), rat(-4));
        assert!(parse_rat("1/0").is_err());
        assert_eq!(fmt_rat(&ratio(-3, 2)), "-3/2");
        assert_eq!(fmt_rat(&rat(7)), "7");
    }

    #[test]
    fn mod_p_inverse() {
        assert_eq!(mod_p(&ratio(1, 2), 5), Some(3));
        assert_eq!(mod_p(&ratio(1, 5), 5), None);
        assert_eq!(mod_p(&rat(-1), 3), Some(2));
    }
}
