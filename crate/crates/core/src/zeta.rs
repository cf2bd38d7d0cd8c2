//! Special values of generalized Hurwitz-type zeta functions at
//! non-positive integers, Dirichlet-character Bernoulli numbers over
//! cyclotomic rings, L-values and their integrality checks.
//!
//! The driving identity: with `G'(t) = -G(-t)`,
//! `zeta^G(-m, a) = -B_{m+1}^{G'}(a) / (m+1)`.

use num_integer::Integer;

use crate::bernoulli::{bernoulli_of_group, universal_bernoulli};
use crate::congruence::CongruenceVerdict;
use crate::cpoly::{CPoly, Monomial};
use crate::cyclo::CycloElem;
use crate::error::{Error, Result};
use crate::fgl::FormalGroup;
use crate::rational::{fmt_rat, is_integer, primes_upto, Rat};
use crate::ring::Ring;
use crate::series::TruncSeries;

/// The reflected group with exponential `G'(t) = -G(-t)`, i.e. the
/// gamma-coefficients flip sign at odd indices.
pub fn reflect(g: &FormalGroup<Rat>) -> FormalGroup<Rat> {
    let coeffs: Vec<Rat> = g
        .exp()
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 0 { -c } else { c.clone() })
        .collect();
    let mut out = FormalGroup::from_exp(TruncSeries::from_coeffs(coeffs))
        .expect("reflection preserves the exponential shape");
    if let Some(name) = g.name() {
        out = out.with_name(format!("reflect({name})"));
    }
    out
}

/// `zeta^G(-m, a)` for integer m >= 0 and rational a > 0.
pub fn zeta_neg(g: &FormalGroup<Rat>, m: usize, a: &Rat) -> Result<Rat> {
    if a <= &Rat::zero() {
        return Err(Error::Input("a must be positive".into()));
    }
    let b = bernoulli_of_group(&reflect(g), m + 1)?;
    Ok(-b.eval(a) / Rat::from_integer((m as i64 + 1).into()))
}

fn pow_rat(base: &Rat, e: usize) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

/// Integrality of `n k^n zeta^G(1-n, h/k)` for odd n >= 3; for even n
/// (and n = 1) the von Staudt correction sum of the reflected group is
/// subtracted first, mirroring the Bartz-Rutkowski shape.
/// `strict` requires `c_{p-1} = 1` mod every odd prime; otherwise the
/// 0-residue branch is admitted too.
pub fn th3_check(
    g: &FormalGroup<Rat>,
    n: usize,
    h: u64,
    k: u64,
    strict: bool,
) -> Result<CongruenceVerdict> {
    let params = [
        ("n", n.to_string()),
        ("h", h.to_string()),
        ("k", k.to_string()),
    ];
    let v = CongruenceVerdict::new("th3", &params);
    if n == 0 {
        return Ok(v.inapplicable("n must be positive".into()));
    }
    let rep = g.check_hypotheses(n as u64 + 1);
    let ok = if strict { rep.strict_ok() } else { rep.th1_ok() };
    if !ok {
        return Ok(v.inapplicable(format!(
            "hypotheses unmet: c integral = {}, parity = {}, failing primes {:?}",
            rep.c_integral,
            rep.parity_condition,
            rep.failures()
        )));
    }
    let a = Rat::new(h.into(), k.into());
    let mut value = Rat::from_integer(n.into()) * pow_rat(&Rat::from_integer(k.into()), n)
        * zeta_neg(g, n - 1, &a)?;
    if n % 2 == 0 || n == 1 {
        let refl = reflect(g);
        for p in primes_upto(n as u64 + 1) {
            if n as u64 % (p - 1) != 0 || k % p == 0 {
                continue;
            }
            let e = n / (p - 1) as usize;
            value -= pow_rat(&refl.c()[(p - 1) as usize], e) / Rat::from_integer(p.into());
        }
    }
    Ok(if is_integer(&value) {
        v
    } else {
        v.fail(fmt_rat(&value))
    })
}

/// A Dirichlet character mod N with values in the d-th roots of unity,
/// given as an exponent table for residues 1..=N (`None` where the
/// residue shares a factor with N).
#[derive(Clone, Debug, PartialEq)]
pub struct DirichletCharacter {
    modulus: u32,
    order: u32,
    exponents: Vec<Option<u32>>,
}

impl DirichletCharacter {
    pub fn new(modulus: u32, order: u32, exponents: Vec<Option<u32>>) -> Result<Self> {
        if modulus == 0 || order == 0 {
            return Err(Error::Character("modulus and order must be positive".into()));
        }
        if exponents.len() != modulus as usize {
            return Err(Error::Character(format!(
                "expected {} values, got {}",
                modulus,
                exponents.len()
            )));
        }
        let chi = DirichletCharacter { modulus, order, exponents };
        chi.validate()?;
        Ok(chi)
    }

    fn validate(&self) -> Result<()> {
        let n = self.modulus as u64;
        for a in 1..=n {
            let coprime = a.gcd(&n) == 1;
            let val = self.exponent(a);
            if coprime && val.is_none() {
                return Err(Error::Character(format!("chi({a}) must be nonzero")));
            }
            if !coprime && val.is_some() {
                return Err(Error::Character(format!("chi({a}) must be zero")));
            }
        }
        if self.exponent(1) != Some(0) {
            return Err(Error::Character("chi(1) must be 1".into()));
        }
        // complete multiplicativity on the coprime residues
        for a in 1..=n {
            for b in a..=n {
                if let (Some(ea), Some(eb)) = (self.exponent(a), self.exponent(b)) {
                    let eab = self
                        .exponent(a * b % n)
                        .ok_or_else(|| Error::Character("product left the unit group".into()))?;
                    if (ea + eb) % self.order != eab % self.order {
                        return Err(Error::Character(format!(
                            "chi({a})chi({b}) != chi({})",
                            a * b % n
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Parse the structured text form
    /// `{"modulus": N, "order": d, "values": [e or null, ...]}`.
    pub fn from_json_str(s: &str) -> Result<Self> {
        #[derive(serde::Deserialize)]
        struct Raw {
            modulus: u32,
            order: u32,
            values: Vec<Option<u32>>,
        }
        let raw: Raw = serde_json::from_str(s)
            .map_err(|e| Error::Character(format!("bad character file: {e}")))?;
        Self::new(raw.modulus, raw.order, raw.values)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    fn exponent(&self, a: u64) -> Option<u32> {
        let idx = ((a + self.modulus as u64 - 1) % self.modulus as u64) as usize;
        self.exponents[idx]
    }

    /// `chi(a)` as an element of `Q[zeta_d]`.
    pub fn value(&self, a: u64) -> CycloElem {
        match self.exponent(a) {
            Some(e) => CycloElem::zeta_pow(self.order, e as i64),
            None => CycloElem::zero(),
        }
    }

    /// True iff N is the true period of the value table (a necessary
    /// condition for primitivity; proper induced characters are flagged).
    pub fn has_full_period(&self) -> bool {
        let n = self.modulus;
        (1..n).filter(|d| n % d == 0).all(|d| {
            (1..=n as u64).any(|a| self.exponent(a) != self.exponent(a + d as u64))
        })
    }
}

/// `B_{n,chi}^G = N^{n-1} sum_a chi(a) B_n^G(a/N)`.
pub fn chi_numbers(g: &FormalGroup<Rat>, chi: &DirichletCharacter, n: usize) -> Result<CycloElem> {
    let nn = chi.modulus() as u64;
    let b = bernoulli_of_group(g, n)?;
    let mut sum = CycloElem::zero();
    for a in 1..=nn {
        let val = chi.value(a);
        if val.is_zero() {
            continue;
        }
        let ba = b.eval(&Rat::new(a.into(), nn.into()));
        sum = sum.try_add(&val.mul(&CycloElem::rational(ba)))?;
    }
    let scale = if n >= 1 {
        pow_rat(&Rat::from_integer(nn.into()), n - 1)
    } else {
        Rat::new(1.into(), nn.into())
    };
    sum.try_mul(&CycloElem::rational(scale))
}

/// Substitute `x -> x0` in a symbolic polynomial, keeping the c's.
fn eval_x(p: &CPoly<Rat>, x0: &Rat) -> CPoly<Rat> {
    let mut out = CPoly::zero();
    for (m, coeff) in p.terms() {
        let scaled = coeff * pow_rat(x0, m.x_exp() as usize);
        out = out.add(&CPoly::monomial(
            Monomial::new(0, m.c_exps().to_vec()),
            scaled,
        ));
    }
    out
}

/// Universal chi-numbers: `N^{n-1} sum_a chi(a) B^_n(a/N)`, a polynomial
/// in the c's with cyclotomic coefficients.
pub fn chi_numbers_universal(
    chi: &DirichletCharacter,
    n: usize,
    w: usize,
) -> Result<CPoly<CycloElem>> {
    let nn = chi.modulus() as u64;
    let b = universal_bernoulli(n, &Rat::one(), w)?;
    let mut sum: CPoly<CycloElem> = CPoly::zero();
    for a in 1..=nn {
        let val = chi.value(a);
        if val.is_zero() {
            continue;
        }
        let ba = eval_x(&b, &Rat::new(a.into(), nn.into()));
        let lifted = ba.map_coeffs(|c| CycloElem::rational(c.clone()).mul(&val));
        sum = sum.add(&lifted);
    }
    let scale = if n >= 1 {
        pow_rat(&Rat::from_integer(nn.into()), n - 1)
    } else {
        Rat::new(1.into(), nn.into())
    };
    Ok(sum.scale(&CycloElem::rational(scale)))
}

/// `L(G, chi, 1-n) = N^{n-1} sum_j chi(j) zeta^G(1-n, j/N)`, checked
/// internally against the equivalent `-B_{n,chi}^{G'}/n`.
pub fn l_value_neg(
    g: &FormalGroup<Rat>,
    chi: &DirichletCharacter,
    n: usize,
) -> Result<CycloElem> {
    if n == 0 {
        return Err(Error::Input("n must be positive".into()));
    }
    let nn = chi.modulus() as u64;
    let mut sum = CycloElem::zero();
    for j in 1..=nn {
        let val = chi.value(j);
        if val.is_zero() {
            continue;
        }
        let z = zeta_neg(g, n - 1, &Rat::new(j.into(), nn.into()))?;
        sum = sum.try_add(&val.mul(&CycloElem::rational(z)))?;
    }
    let scale = pow_rat(&Rat::from_integer(nn.into()), n - 1);
    let route1 = sum.try_mul(&CycloElem::rational(scale))?;

    let bchi = chi_numbers(&reflect(g), chi, n)?;
    let route2 =
        bchi.try_mul(&CycloElem::rational(-Rat::new(1.into(), n.into())))?;
    if route1 != route2 {
        return Err(Error::Shape(format!(
            "L-value routes disagree: {route1} vs {route2}"
        )));
    }
    Ok(route1)
}

/// Integrality of `n N L(G, chi, 1-n)` in `Z[zeta_d]` for odd n >= 3.
pub fn th4_check(
    g: &FormalGroup<Rat>,
    chi: &DirichletCharacter,
    n: usize,
    strict: bool,
) -> Result<CongruenceVerdict> {
    let params = [
        ("n", n.to_string()),
        ("modulus", chi.modulus().to_string()),
    ];
    let v = CongruenceVerdict::new("th4", &params);
    if n < 3 || n % 2 == 0 {
        return Ok(v.inapplicable("n must be odd and >= 3".into()));
    }
    let rep = g.check_hypotheses(n as u64 + 1);
    let ok = if strict { rep.strict_ok() } else { rep.th1_ok() };
    if !ok {
        return Ok(v.inapplicable("hypotheses unmet".into()));
    }
    let l = l_value_neg(g, chi, n)?;
    let scaled = l.try_mul(&CycloElem::rational(Rat::from_integer(
        (n as u64 * chi.modulus() as u64).into(),
    )))?;
    Ok(if scaled.is_integral() {
        v
    } else {
        v.fail(scaled.to_string())
    })
}
