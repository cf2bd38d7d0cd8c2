//! Sparse polynomials in the graded indeterminates `c1, c2, ...` and `x`.
//!
//! The monomial `x^a * c1^e1 * ... * cW^eW` has weight `a + sum(i * ei)`;
//! universal Bernoulli polynomials are isobaric in this grading. Terms are
//! kept in graded-lex order so printing is deterministic.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{frac_part, is_p_integral_and_divisible, Rat};
use crate::ring::Ring;

/// Exponent vector of `x^x_exp * c1^{c[0]} * c2^{c[1]} * ...`.
/// Trailing zero exponents are trimmed so equal monomials compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    x_exp: u32,
    c: Vec<u32>,
}

impl Monomial {
    pub fn new(x_exp: u32, mut c: Vec<u32>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        Monomial { x_exp, c }
    }

    pub fn one() -> Self {
        Monomial { x_exp: 0, c: Vec::new() }
    }

    pub fn x_exp(&self) -> u32 {
        self.x_exp
    }

    /// Exponent of `c_i` (1-based index).
    pub fn c_exp(&self, i: u32) -> u32 {
        self.c.get(i as usize - 1).copied().unwrap_or(0)
    }

    /// The raw c-exponent vector (entry i-1 belongs to `c_i`).
    pub fn c_exps(&self) -> &[u32] {
        &self.c
    }

    pub fn is_constant(&self) -> bool {
        self.x_exp == 0 && self.c.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.x_exp as u64
            + self
                .c
                .iter()
                .enumerate()
                .map(|(i, &e)| (i as u64 + 1) * e as u64)
                .sum::<u64>()
    }

    fn mul(&self, rhs: &Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        let mut c = vec![0u32; n];
        for (i, e) in c.iter_mut().enumerate() {
            *e = self.c.get(i).copied().unwrap_or(0) + rhs.c.get(i).copied().unwrap_or(0);
        }
        Monomial::new(self.x_exp + rhs.x_exp, c)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.x_exp.cmp(&other.x_exp))
            .then_with(|| self.c.cmp(&other.c))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.x_exp {
            0 => {}
            1 => parts.push("x".to_string()),
            e => parts.push(format!("x^{e}")),
        }
        for (i, &e) in self.c.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("c{}", i + 1)),
                e => parts.push(format!("c{}^{e}", i + 1)),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Sparse polynomial over a coefficient ring `C` (rationals by default).
/// No zero coefficients are ever stored.
#[derive(Clone, Debug, PartialEq)]
pub struct CPoly<C: Ring = Rat> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Ring> CPoly<C> {
    pub fn zero() -> Self {
        CPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: C) -> Self {
        let mut p = CPoly::zero();
        p.insert(Monomial::one(), c);
        p
    }

    pub fn var_x() -> Self {
        let mut p = CPoly::zero();
        p.insert(Monomial::new(1, Vec::new()), C::one());
        p
    }

    /// The indeterminate `c_i`, `i >= 1`.
    pub fn var_c(i: u32) -> Self {
        assert!(i >= 1, "c-indices are 1-based");
        let mut c = vec![0u32; i as usize];
        c[i as usize - 1] = 1;
        let mut p = CPoly::zero();
        p.insert(Monomial::new(0, c), C::one());
        p
    }

    pub fn monomial(m: Monomial, coeff: C) -> Self {
        let mut p = CPoly::zero();
        p.insert(m, coeff);
        p
    }

    fn insert(&mut self, m: Monomial, c: C) {
        if !c.is_zero() {
            self.terms.insert(m, c);
        }
    }

    fn add_term(&mut self, m: Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c.clone());
            }
            Some(old) => {
                let s = old.add(c);
                self.insert(m, s);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest c-index that occurs (the effective weight cap `W`).
    pub fn weight_cap(&self) -> u32 {
        self.terms.keys().map(|m| m.c.len() as u32).max().unwrap_or(0)
    }

    pub fn degree_x(&self) -> u32 {
        self.terms.keys().map(|m| m.x_exp).max().unwrap_or(0)
    }

    /// True iff every monomial has the given weight (vacuously true for 0).
    pub fn is_isobaric(&self, weight: u64) -> bool {
        self.terms.keys().all(|m| m.weight() == weight)
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = CPoly::zero();
        for (m, a) in &self.terms {
            out.add_term(m.clone(), &a.mul(c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = CPoly::constant(C::one());
        for _ in 0..e {
            acc = Ring::mul(&acc, self);
        }
        acc
    }

    /// Constant-polynomial view, if there is nothing but a constant term.
    pub fn as_scalar(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_constant().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// d/dx.
    pub fn derivative_x(&self) -> Self {
        let mut out = CPoly::zero();
        for (m, c) in &self.terms {
            if m.x_exp > 0 {
                let dm = Monomial::new(m.x_exp - 1, m.c.clone());
                out.add_term(dm, &c.mul_rat(&Rat::from_integer(m.x_exp.into())));
            }
        }
        out
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> CPoly<D> {
        let mut out = CPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c));
        }
        out
    }
}

impl CPoly<Rat> {
    /// Substitute scalars for the `c_i` (and optionally for `x`).
    /// Every occurring c-index must be covered by the assignment.
    pub fn specialize(
        &self,
        assignment: &BTreeMap<u32, Rat>,
        x_value: Option<&Rat>,
    ) -> Result<CPoly<Rat>> {
        let mut out = CPoly::zero();
        for (m, coeff) in &self.terms {
            let mut c = coeff.clone();
            for (i, &e) in m.c.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let idx = i as u32 + 1;
                let v = assignment.get(&idx).ok_or(Error::MissingAssignment(idx))?;
                for _ in 0..e {
                    c *= v;
                }
            }
            let residual = match x_value {
                Some(xv) => {
                    for _ in 0..m.x_exp {
                        c *= xv;
                    }
                    Monomial::one()
                }
                None => Monomial::new(m.x_exp, Vec::new()),
            };
            out.add_term(residual, &c);
        }
        Ok(out)
    }

    /// Canonical representative modulo `Z[c1, ..., cW][x]`: every
    /// coefficient replaced by its fractional part in `[0, 1)`.
    pub fn residue_mod_z(&self) -> CPoly<Rat> {
        let mut out = CPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &frac_part(c));
        }
        out
    }

    /// Membership in `p * Z_p[c1, c2, ...][x]`.
    pub fn is_p_integral_and_divisible(&self, p: u64) -> bool {
        self.terms.values().all(|c| is_p_integral_and_divisible(c, p))
    }

    /// Substitute `x -> x + y` (binomial shift); the c's are untouched.
    pub fn shift_x(&self, y: &Rat) -> CPoly<Rat> {
        let mut out = CPoly::zero();
        for (m, c) in &self.terms {
            let n = m.x_exp;
            let mut ypow = Rat::from_integer(1.into());
            // x^n -> sum_j C(n,j) x^j y^{n-j}, built from the top power down
            let mut coeffs = Vec::with_capacity(n as usize + 1);
            for j in (0..=n).rev() {
                let b = crate::rational::binomial(n as usize, j as usize);
                coeffs.push((j, Rat::from_integer(b) * &ypow * c));
                ypow *= y;
            }
            for (j, v) in coeffs {
                out.add_term(Monomial::new(j, m.c.clone()), &v);
            }
        }
        out
    }
}

impl<C: Ring> Ring for CPoly<C> {
    fn zero() -> Self {
        CPoly::zero()
    }
    fn one() -> Self {
        CPoly::constant(C::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut out = CPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &ca.mul(cb));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        let mut out = CPoly::zero();
        for (m, c) in &self.terms {
            out.insert(m.clone(), c.neg());
        }
        out
    }
    fn from_rat(r: &Rat) -> Self {
        CPoly::constant(C::from_rat(r))
    }
    fn inv(&self) -> Option<Self> {
        self.as_scalar().and_then(|c| c.inv()).map(CPoly::constant)
    }
}

impl<C: Ring> fmt::Display for CPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        // highest weight first, to match the usual table layout
        for (m, c) in self.terms.iter().rev() {
            let cs = c.to_string();
            let needs_parens = cs.contains('+') || cs.contains(' ') || cs[1..].contains('-');
            let term = if m.is_constant() {
                if needs_parens {
                    format!("({cs})")
                } else {
                    cs
                }
            } else if needs_parens {
                format!("({cs})*{m}")
            } else if cs == "1" {
                m.to_string()
            } else if cs == "-1" {
                format!("-{m}")
            } else {
                format!("{cs}*{m}")
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

    pub(crate) fn x() -> CPoly<Rat> {
        CPoly::var_x()
    }
    pub(crate) fn c(i: u32) -> CPoly<Rat> {
        CPoly::var_c(i)
    }

    #[test]
    fn monomial_product() {
        // c1 * c1 = c1^2
        let p = Ring::mul(&c(1), &c(1));
        assert_eq!(p, c(1).pow(2));
        assert_eq!(p.to_string(), "c1^2");
    }

    #[test]
    fn appendix_b1_subtraction() {
        // (x + c1/2) - x = c1/2
        let b1 = x().add(&c(1).scale(&ratio(1, 2)));
        let d = b1.sub(&x());
        assert_eq!(d, c(1).scale(&ratio(1, 2)));
    }

    #[test]
    fn additive_inverse_gives_empty_term_map() {
        let p = c(1).pow(2).scale(&ratio(1, 2));
        let s = p.add(&p.neg());
        assert!(Ring::is_zero(&s));
        assert_eq!(s.num_terms(), 0);
    }

    #[test]
    fn specialize_classical_b1() {
        // c1/2 with c1 = -1  ->  -1/2
        let p = c(1).scale(&ratio(1, 2));
        let mut a = BTreeMap::new();
        a.insert(1, rat(-1));
        let v = p.specialize(&a, None).unwrap();
        assert_eq!(v.as_scalar().unwrap(), ratio(-1, 2));
    }

    #[test]
    fn specialize_missing_assignment() {
        let p = c(2);
        let a = BTreeMap::new();
        assert!(matches!(p.specialize(&a, None), Err(Error::MissingAssignment(2))));
    }

    #[test]
    fn residue_mod_z_examples() {
        // 3c2 + c1/2 -> c1/2
        let p = c(2).scale(&rat(3)).add(&c(1).scale(&ratio(1, 2)));
        assert_eq!(p.residue_mod_z(), c(1).scale(&ratio(1, 2)));
        // -c1^2/2 + 2c2/3 -> c1^2/2 + 2c2/3
        let q = c(1).pow(2).scale(&ratio(-1, 2)).add(&c(2).scale(&ratio(2, 3)));
        let want = c(1).pow(2).scale(&ratio(1, 2)).add(&c(2).scale(&ratio(2, 3)));
        assert_eq!(q.residue_mod_z(), want);
        // integral polynomial -> 0
        assert!(Ring::is_zero(&c(2).residue_mod_z()));
    }

    #[test]
    fn residue_is_idempotent_difference() {
        let p = c(1).scale(&ratio(-7, 3)).add(&x().scale(&ratio(5, 4)));
        let d = p.sub(&p.residue_mod_z());
        assert!(Ring::is_zero(&d.residue_mod_z()));
    }

    #[test]
    fn p_divisibility() {
        assert!(c(2).scale(&ratio(3, 5)).is_p_integral_and_divisible(3));
        assert!(!c(1).scale(&ratio(1, 3)).is_p_integral_and_divisible(3));
        assert!(!c(2).scale(&rat(2)).is_p_integral_and_divisible(3));
    }

    #[test]
    fn weights() {
        // x^2*c1*c3 has weight 2 + 1 + 3 = 6
        let m = Monomial::new(2, vec![1, 0, 1]);
        assert_eq!(m.weight(), 6);
        let p = CPoly::monomial(m, rat(1));
        assert!(p.is_isobaric(6));
        assert!(!p.add(&x()).is_isobaric(6));
    }

    #[test]
    fn derivative_and_shift() {
        // d/dx (x^3 + c1 x) = 3x^2 + c1
        let p = x().pow(3).add(&Ring::mul(&c(1), &x()));
        let d = p.derivative_x();
        assert_eq!(d, x().pow(2).scale(&rat(3)).add(&c(1)));
        // shift x -> x + 1 on x^2: x^2 + 2x + 1
        let s = x().pow(2).shift_x(&rat(1));
        let want = x().pow(2).add(&x().scale(&rat(2))).add(&CPoly::constant(rat(1)));
        assert_eq!(s, want);
    }

    #[test]
    fn display_canonical() {
        let p = x()
            .pow(2)
            .add(&Ring::mul(&x(), &c(1)))
            .add(&c(1).pow(2).scale(&ratio(-1, 2)))
            .add(&c(2).scale(&ratio(2, 3)));
        assert_eq!(p.to_string(), "x^2 + x*c1 - 1/2*c1^2 + 2/3*c2");
    }
}
