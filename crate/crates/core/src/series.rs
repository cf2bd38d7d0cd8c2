//! Truncated formal power series over a generic coefficient ring, plus a
//! small truncated multivariate polynomial type used for group laws.
//!
//! Truncation order is explicit everywhere: a series of order `M` stores
//! exactly the coefficients of `t^0 ... t^M`, trailing zeros included.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<C: Ring> {
    coeffs: Vec<C>,
}

impl<C: Ring> TruncSeries<C> {
    pub fn zero(order: usize) -> Self {
        TruncSeries { coeffs: vec![C::zero(); order + 1] }
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    /// The series `t`.
    pub fn identity(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = C::one();
        }
        s
    }

    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(C::zero());
        }
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, c: C) {
        self.coeffs[k] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Smallest k with nonzero coefficient, or `order + 1` when the series
    /// is identically zero to this order.
    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<C> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, C::zero());
        TruncSeries { coeffs }
    }

    fn common_order(&self, rhs: &Self) -> usize {
        self.order().min(rhs.order())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let m = self.common_order(rhs);
        let coeffs = (0..=m)
            .map(|k| self.coeffs[k].add(&rhs.coeffs[k]))
            .collect();
        TruncSeries { coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn scale_rat(&self, r: &Rat) -> Self {
        self.scale(&C::from_rat(r))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let m = self.common_order(rhs);
        let mut coeffs = vec![C::zero(); m + 1];
        for (i, a) in self.coeffs.iter().take(m + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(m + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        TruncSeries { coeffs }
    }

    /// Exact quotient through order `M - valuation(den)`; the common
    /// factor `t^valuation(den)` is shifted out first.
    pub fn div(&self, den: &Self) -> Result<Self> {
        let m = self.common_order(den);
        let num = self.truncate(m);
        let den = den.truncate(m);
        let dv = den.valuation();
        if dv > m {
            return Err(Error::Shape("division by zero series".into()));
        }
        if num.is_zero() {
            return Ok(TruncSeries::zero(m - dv));
        }
        let nv = num.valuation();
        if nv < dv {
            return Err(Error::NotAPowerSeries { num: nv, den: dv });
        }
        let n: Vec<C> = num.coeffs[dv..].to_vec();
        let d: Vec<C> = den.coeffs[dv..].to_vec();
        let d0inv = d[0]
            .inv()
            .ok_or_else(|| Error::Shape("denominator unit is not invertible".into()))?;
        let mut q = vec![C::zero(); m - dv + 1];
        for k in 0..q.len() {
            let mut acc = n[k].clone();
            for j in 1..=k {
                acc = acc.sub(&d[j].mul(&q[k - j]));
            }
            q[k] = acc.mul(&d0inv);
        }
        Ok(TruncSeries { coeffs: q })
    }

    /// Composition `self(inner)`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeff(0).is_zero() {
            return Err(Error::Shape("composition inner series has nonzero constant term".into()));
        }
        let m = self.common_order(inner);
        let outer = self.truncate(m);
        let inner = inner.truncate(m);
        let mut acc = TruncSeries::constant(outer.coeffs[m].clone(), m);
        for k in (0..m).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0].add(&outer.coeffs[k]);
        }
        Ok(acc)
    }

    /// Compositional inverse of a series `t + a2 t^2 + ...` (constant term
    /// zero, unit linear coefficient), by Lagrange inversion:
    /// `[t^n] g = (1/n) [s^(n-1)] (s/f)^n`.
    pub fn revert(&self) -> Result<Self> {
        let m = self.order();
        if m < 1 || !self.coeff(0).is_zero() || self.coeff(1) != C::one() {
            return Err(Error::Shape(
                "reversion requires zero constant term and unit linear coefficient".into(),
            ));
        }
        // u = s/f as a unit series of order m-1
        let f_over_s = TruncSeries::from_coeffs(self.coeffs[1..].to_vec());
        let u = TruncSeries::one(m - 1).div(&f_over_s)?;
        let mut g = TruncSeries::zero(m);
        let mut pow = TruncSeries::one(m - 1);
        for n in 1..=m {
            pow = pow.mul(&u);
            g.coeffs[n] = pow.coeff(n - 1).mul_rat(&Rat::new(1.into(), n.into()));
        }
        Ok(g)
    }

    /// Termwise derivative (order drops by one).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        let coeffs = (1..=self.order())
            .map(|k| self.coeffs[k].mul_rat(&Rat::from_integer(k.into())))
            .collect();
        TruncSeries { coeffs }
    }

    /// Exponential of a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeff(0).is_zero() {
            return Err(Error::Shape("exp requires zero constant term".into()));
        }
        let m = self.order();
        let mut e = vec![C::zero(); m + 1];
        e[0] = C::one();
        for k in 1..=m {
            let mut acc = C::zero();
            for j in 1..=k {
                let jf = self.coeffs[j].mul_rat(&Rat::from_integer(j.into()));
                acc = acc.add(&jf.mul(&e[k - j]));
            }
            e[k] = acc.mul_rat(&Rat::new(1.into(), k.into()));
        }
        Ok(TruncSeries { coeffs: e })
    }

    /// Logarithm of a series with unit constant term.
    pub fn log(&self) -> Result<Self> {
        if self.coeff(0) != C::one() {
            return Err(Error::Shape("log requires unit constant term".into()));
        }
        let m = self.order();
        let mut l = vec![C::zero(); m + 1];
        for k in 1..=m {
            let mut acc = self.coeffs[k].mul_rat(&Rat::from_integer(k.into()));
            for j in 1..k {
                let jl = l[j].mul_rat(&Rat::from_integer(j.into()));
                acc = acc.sub(&jl.mul(&self.coeffs[k - j]));
            }
            l[k] = acc.mul_rat(&Rat::new(1.into(), k.into()));
        }
        Ok(TruncSeries { coeffs: l })
    }

    /// Integer power; negative exponents go through series division.
    pub fn pow_i(&self, e: i64) -> Result<Self> {
        let mut acc = TruncSeries::one(self.order());
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(self);
        }
        if e >= 0 {
            Ok(acc)
        } else {
            TruncSeries::one(self.order()).div(&acc)
        }
    }

    /// Rational power `f^alpha = exp(alpha * log f)` of a unit series.
    pub fn pow_rat(&self, alpha: &Rat) -> Result<Self> {
        if crate::rational::is_integer(alpha) {
            let e: i64 = alpha
                .numer()
                .try_into()
                .map_err(|_| Error::Input("exponent overflow".into()))?;
            if self.coeff(0) == C::one() || e >= 0 {
                return self.pow_i(e);
            }
        }
        self.log()?.scale_rat(alpha).exp()
    }
}

impl<C: Ring> fmt::Display for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let needs_parens = cs.contains('+') || cs.contains(' ') || cs[1..].contains('-');
            let term = match k {
                0 => {
                    if needs_parens {
                        format!("({cs})")
                    } else {
                        cs
                    }
                }
                _ => {
                    let t = if k == 1 { "t".to_string() } else { format!("t^{k}") };
                    if needs_parens {
                        format!("({cs})*{t}")
                    } else if cs == "1" {
                        t
                    } else if cs == "-1" {
                        format!("-{t}")
                    } else {
                        format!("{cs}*{t}")
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
        if out.is_empty() {
            out = "0".to_string();
        }
        write!(f, "{out}")
    }
}

/// Multivariate polynomial truncated at a total degree, used for the
/// bivariate group law `Phi(s1, s2)` and the trivariate associativity
/// check. Exponent vectors have fixed length `nvars`.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiSeries<C: Ring> {
    nvars: usize,
    order: usize,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Ring> MultiSeries<C> {
    pub fn zero(nvars: usize, order: usize) -> Self {
        MultiSeries { nvars, order, terms: BTreeMap::new() }
    }

    pub fn constant(c: C, nvars: usize, order: usize) -> Self {
        let mut s = Self::zero(nvars, order);
        s.insert(vec![0; nvars], c);
        s
    }

    /// The variable `s_{idx}` (0-based).
    pub fn var(idx: usize, nvars: usize, order: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        let mut s = Self::zero(nvars, order);
        s.insert(e, C::one());
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    fn insert(&mut self, e: Vec<u32>, c: C) {
        if !c.is_zero() && e.iter().map(|&x| x as usize).sum::<usize>() <= self.order {
            self.terms.insert(e, c);
        }
    }

    fn add_term(&mut self, e: Vec<u32>, c: &C) {
        if c.is_zero() || e.iter().map(|&x| x as usize).sum::<usize>() > self.order {
            return;
        }
        match self.terms.remove(&e) {
            None => {
                self.terms.insert(e, c.clone());
            }
            Some(old) => {
                let s = old.add(c);
                self.insert(e, s);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        out.order = self.order.min(rhs.order);
        out.terms.retain(|e, _| e.iter().map(|&x| x as usize).sum::<usize>() <= out.order);
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.nvars, self.order);
        for (e, c) in &self.terms {
            out.insert(e.clone(), c.neg());
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Self::zero(self.nvars, self.order.min(rhs.order));
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, &ca.mul(cb));
            }
        }
        out
    }

    /// Lowest total degree of a nonzero term (order + 1 when zero).
    pub fn valuation(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .min()
            .unwrap_or(self.order + 1)
    }

    /// Substitute zero for variable `idx`.
    pub fn set_var_zero(&self, idx: usize) -> Self {
        let mut out = Self::zero(self.nvars, self.order);
        for (e, c) in &self.terms {
            if e[idx] == 0 {
                out.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// Re-index variables: new exponent vector has `nvars_new` slots and
    /// variable `i` of `self` becomes variable `mapping[i]`.
    pub fn embed(&self, nvars_new: usize, mapping: &[usize]) -> Self {
        let mut out = Self::zero(nvars_new, self.order);
        for (e, c) in &self.terms {
            let mut ne = vec![0u32; nvars_new];
            for (i, &x) in e.iter().enumerate() {
                ne[mapping[i]] += x;
            }
            out.insert(ne, c.clone());
        }
        out
    }

    /// Evaluate a univariate series at this argument (which must have
    /// positive valuation), by Horner's scheme.
    pub fn substitute_into(&self, outer: &TruncSeries<C>) -> Result<Self> {
        if self.valuation() == 0 {
            return Err(Error::Shape("substitution argument has a constant term".into()));
        }
        let m = self.order.min(outer.order());
        let mut acc = Self::constant(outer.coeff(m), self.nvars, m);
        let arg = {
            let mut a = self.clone();
            a.order = m;
            a.terms.retain(|e, _| e.iter().map(|&x| x as usize).sum::<usize>() <= m);
            a
        };
        for k in (0..m).rev() {
            acc = acc.mul(&arg);
            acc.add_term(vec![0; self.nvars], &outer.coeff(k));
        }
        Ok(acc)
    }

    /// Evaluate a bivariate polynomial at two arguments of positive
    /// valuation: `sum_{i,j} phi_ij a^i b^j`.
    pub fn eval_bivariate(phi: &MultiSeries<C>, a: &Self, b: &Self) -> Result<Self> {
        assert_eq!(phi.nvars, 2);
        assert_eq!(a.nvars, b.nvars);
        if a.valuation() == 0 || b.valuation() == 0 {
            return Err(Error::Shape("substitution argument has a constant term".into()));
        }
        let m = a.order.min(b.order).min(phi.order);
        let mut apow = Vec::with_capacity(m + 1);
        let mut bpow = Vec::with_capacity(m + 1);
        apow.push(Self::constant(C::one(), a.nvars, m));
        bpow.push(Self::constant(C::one(), a.nvars, m));
        for k in 1..=m {
            apow.push(apow[k - 1].mul(a));
            bpow.push(bpow[k - 1].mul(b));
        }
        let mut out = Self::zero(a.nvars, m);
        for (e, c) in &phi.terms {
            let (i, j) = (e[0] as usize, e[1] as usize);
            if i + j > m {
                continue;
            }
            let term = apow[i].mul(&bpow[j]).scale(c);
            out = out.add(&term);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.nvars, self.order);
        for (e, a) in &self.terms {
            out.insert(e.clone(), a.mul(c));
        }
        out
    }
}

impl<C: Ring> fmt::Display for MultiSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let mut mono = Vec::new();
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => mono.push(format!("s{}", i + 1)),
                    _ => mono.push(format!("s{}^{}", i + 1, x)),
                }
            }
            let cs = c.to_string();
            let needs_parens = cs.contains('+') || cs.contains(' ') || cs[1..].contains('-');
            let cs = if needs_parens { format!("({cs})") } else { cs };
            if mono.is_empty() {
                parts.push(cs);
            } else if cs == "1" {
                parts.push(mono.join("*"));
            } else {
                parts.push(format!("{}*{}", cs, mono.join("*")));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}
