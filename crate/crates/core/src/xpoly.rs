//! Dense univariate polynomials in `x` over the rationals, used for the
//! concrete (scalar-group) Bernoulli families and all congruence scans.

use std::fmt;

use num_traits::Zero;

use crate::rational::{fmt_rat, Rat};

/// Coefficients ascending in the power of `x`; no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct XPoly {
    coeffs: Vec<Rat>,
}

impl XPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![Rat::zero(), Rat::from_integer(1.into())])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(0)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(k, c)| c * Rat::from_integer((k + 1).into()))
            .collect();
        Self::new(coeffs)
    }

    /// True iff every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(crate::rational::is_integer)
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = fmt_rat(c);
            let term = match k {
                0 => cs,
                _ => {
                    let xs = if k == 1 { "x".to_string() } else { format!("x^{k}") };
                    if cs == "1" {
                        xs
                    } else if cs == "-1" {
                        format!("-{xs}")
                    } else {
                        format!("{cs}*{xs}")
                    }
                }
            };
            if out.is_empty() {
                out = term;
            } else if let Some(rest) = term.strip_prefix('-') {
                out = format!("{out} - {rest}");
            } else {
                out = format!("{out} + {term}");
            }
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn eval_and_derivative() {
        // B_2(x) = x^2 - x + 1/6
        let b2 = XPoly::new(vec![ratio(1, 6), rat(-1), rat(1)]);
        assert_eq!(b2.eval(&ratio(1, 2)), ratio(-1, 12));
        assert_eq!(b2.derivative(), XPoly::new(vec![rat(-1), rat(2)]));
        assert_eq!(b2.to_string(), "x^2 - x + 1/6");
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = XPoly::new(vec![rat(1), rat(0), rat(0)]);
        assert_eq!(p.degree(), 0);
        assert!(XPoly::new(vec![rat(0)]).is_zero());
    }
}
