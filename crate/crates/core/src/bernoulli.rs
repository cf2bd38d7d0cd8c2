//! Bernoulli-type polynomials and numbers attached to a formal group:
//! the universal (symbolic-c) family, concrete families over the
//! rationals, genus polynomial families, and the Cauchy-formula
//! extraction of the s-coefficients of a characteristic series.
//!
//! Everything is driven by the generating relation
//! `(t/G(t))^alpha e^{xt} = sum B_n^(alpha)(x) t^n/n!`.

use std::fmt;

use num_traits::ToPrimitive;

use crate::cpoly::{CPoly, Monomial};
use crate::error::{Error, Result};
use crate::fgl::{catalog, universal_group, FormalGroup};
use crate::rational::{binomial, factorial, Rat};
use crate::ring::Ring;
use crate::series::TruncSeries;
use crate::xpoly::XPoly;

/// `Q^alpha` for a series with unit constant term: integer exponents by
/// repeated multiplication/division, fractional ones via exp(alpha log Q).
fn series_pow_alpha<C: Ring>(q: &TruncSeries<C>, alpha: &Rat) -> Result<TruncSeries<C>> {
    if alpha.is_integer() {
        let e = alpha
            .numer()
            .to_i64()
            .ok_or_else(|| Error::Input("exponent too large".into()))?;
        q.pow_i(e)
    } else {
        q.pow_rat(alpha)
    }
}

/// Assemble `n! [t^n] (Q e^{xt})` from the coefficients of Q: the
/// coefficient of `x^k` is `n!/k! * q_{n-k}`.
fn appell_coeffs<C: Ring>(q: &TruncSeries<C>, n: usize) -> Vec<C> {
    (0..=n)
        .map(|k| {
            q.coeff(n - k)
                .mul_rat(&Rat::new(factorial(n), factorial(k)))
        })
        .collect()
}

/// The n-th universal Bernoulli polynomial of order `alpha`, symbolic in
/// `c_1, ..., c_w` (w >= n; only c-indices up to n can occur).
pub fn universal_bernoulli(n: usize, alpha: &Rat, w: usize) -> Result<CPoly<Rat>> {
    if w < n {
        return Err(Error::Input(format!("weight cap {w} below degree {n}")));
    }
    let q = universal_group(w + 1).characteristic_series();
    let q = series_pow_alpha(&q, alpha)?;
    let mut out = CPoly::zero();
    for (k, coeff) in appell_coeffs(&q, n).into_iter().enumerate() {
        let xk = CPoly::monomial(Monomial::new(k as u32, Vec::new()), Rat::one());
        out = out.add(&coeff.mul(&xk));
    }
    Ok(out)
}

/// `B_n^G(x) = n! [t^n] (t/G) e^{xt}` for a concrete group.
pub fn bernoulli_of_group(g: &FormalGroup<Rat>, n: usize) -> Result<XPoly> {
    if g.order() <= n {
        return Err(Error::Input(format!(
            "group order {} too small for degree {n}",
            g.order()
        )));
    }
    Ok(XPoly::new(appell_coeffs(&g.characteristic_series(), n)))
}

/// The n-th Bernoulli number of the group, `B_n^G = B_n^G(0)`.
pub fn bernoulli_number(g: &FormalGroup<Rat>, n: usize) -> Result<Rat> {
    Ok(bernoulli_of_group(g, n)?.constant_term())
}

/// `B~_n^G(x) = B_n^G(x) - B_n^G`.
pub fn tilde_of_group(g: &FormalGroup<Rat>, n: usize) -> Result<XPoly> {
    let b = bernoulli_of_group(g, n)?;
    let c = b.constant_term();
    Ok(b.sub(&XPoly::constant(c)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenusKind {
    Alpha,
    Lambda,
    AlphaTilde,
    LambdaTilde,
}

impl GenusKind {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "alpha" => GenusKind::Alpha,
            "lambda" => GenusKind::Lambda,
            "alpha_tilde" => GenusKind::AlphaTilde,
            "lambda_tilde" => GenusKind::LambdaTilde,
            _ => return Err(Error::Input(format!("unknown genus kind '{s}'"))),
        })
    }
}

/// Genus polynomial families: alpha from `2t e^{yt}/sinh 2t` (the
/// A-genus kernel), lambda from `t e^{yt}/tanh t` (the L-genus kernel);
/// tilde variants subtract the value at y = 0.
pub fn genus_polynomial(kind: GenusKind, n: usize) -> Result<XPoly> {
    let (group, tilde) = match kind {
        GenusKind::Alpha => ("A", false),
        GenusKind::AlphaTilde => ("A", true),
        GenusKind::Lambda => ("L", false),
        GenusKind::LambdaTilde => ("L", true),
    };
    let g = catalog(group, n + 1)?;
    if tilde {
        tilde_of_group(&g, n)
    } else {
        bernoulli_of_group(&g, n)
    }
}

/// The s-coefficients of a characteristic series by the Cauchy formula
/// `1 - z d/dz log Q(z) = sum (-1)^j s_j z^j`; `s_0 = 1`.
pub fn s_sequence(q: &TruncSeries<Rat>, n_max: usize) -> Result<Vec<Rat>> {
    if q.coeff(0) != Rat::one() {
        return Err(Error::Input("characteristic series must start at 1".into()));
    }
    if q.order() < n_max {
        return Err(Error::Input(format!(
            "series order {} below requested {n_max}",
            q.order()
        )));
    }
    let l = q.log()?;
    let mut out = vec![Rat::one()];
    for j in 1..=n_max {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let v = -l.coeff(j) * Rat::from_integer((j as i64 * sign).into());
        out.push(v);
    }
    Ok(out)
}

/// The polynomial shape shared by concrete (XPoly) and universal (CPoly)
/// Bernoulli families: enough structure to state the Appell and binomial
/// identities.
pub trait AppellLike: Clone + PartialEq + fmt::Display {
    fn ddx(&self) -> Self;
    /// substitute x -> x + y for a rational y
    fn shift(&self, y: &Rat) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn times(&self, c: &Rat) -> Self;
    fn nothing() -> Self;
}

impl AppellLike for XPoly {
    fn ddx(&self) -> Self {
        self.derivative()
    }
    fn shift(&self, y: &Rat) -> Self {
        let mut out = vec![Rat::zero(); self.coeffs().len()];
        for (k, c) in self.coeffs().iter().enumerate() {
            let mut ypow = Rat::one();
            for j in (0..=k).rev() {
                out[j] += c * Rat::from_integer(binomial(k, j)) * &ypow;
                ypow *= y;
            }
        }
        XPoly::new(out)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn times(&self, c: &Rat) -> Self {
        self.scale(c)
    }
    fn nothing() -> Self {
        XPoly::zero()
    }
}

impl AppellLike for CPoly<Rat> {
    fn ddx(&self) -> Self {
        self.derivative_x()
    }
    fn shift(&self, y: &Rat) -> Self {
        self.shift_x(y)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn times(&self, c: &Rat) -> Self {
        self.scale(c)
    }
    fn nothing() -> Self {
        CPoly::zero()
    }
}

/// A run of Bernoulli-type polynomials `B_0, ..., B_{n_max}` for one
/// order parameter alpha.
#[derive(Clone, Debug)]
pub struct BernoulliFamily<P> {
    pub alpha: Rat,
    pub polys: Vec<P>,
}

impl BernoulliFamily<CPoly<Rat>> {
    pub fn universal(n_max: usize, alpha: &Rat, w: usize) -> Result<Self> {
        let polys = (0..=n_max)
            .map(|n| universal_bernoulli(n, alpha, w.max(n)))
            .collect::<Result<_>>()?;
        Ok(BernoulliFamily { alpha: alpha.clone(), polys })
    }
}

impl BernoulliFamily<XPoly> {
    pub fn of_group(g: &FormalGroup<Rat>, n_max: usize, alpha: &Rat) -> Result<Self> {
        if g.order() <= n_max {
            return Err(Error::Input(format!(
                "group order {} too small for degree {n_max}",
                g.order()
            )));
        }
        let q = series_pow_alpha(&g.characteristic_series(), alpha)?;
        let polys = (0..=n_max)
            .map(|n| XPoly::new(appell_coeffs(&q, n)))
            .collect();
        Ok(BernoulliFamily { alpha: alpha.clone(), polys })
    }
}

#[derive(Clone, Debug, Default)]
pub struct AppellReport {
    pub appell_ok: bool,
    pub binomial_ok: bool,
    pub failures: Vec<String>,
}

impl AppellReport {
    pub fn all_pass(&self) -> bool {
        self.appell_ok && self.binomial_ok
    }
}

impl<P: AppellLike> BernoulliFamily<P> {
    /// Verify the Appell identity `d/dx B_n = n B_{n-1}` symbolically and
    /// the binomial identity `B_n(x+y) = sum C(n,m) B_m(x) y^{n-m}` at
    /// the supplied y-samples (x stays symbolic). With more distinct
    /// samples than the top degree, the binomial check is a proof.
    pub fn check(&self, y_samples: &[Rat]) -> AppellReport {
        let mut report = AppellReport { appell_ok: true, binomial_ok: true, failures: vec![] };
        for n in 1..self.polys.len() {
            let want = self.polys[n - 1].times(&Rat::from_integer((n as i64).into()));
            if self.polys[n].ddx() != want {
                report.appell_ok = false;
                report.failures.push(format!("appell: n={n}"));
            }
            for y in y_samples {
                let lhs = self.polys[n].shift(y);
                let mut rhs = P::nothing();
                let mut ypow = Rat::one();
                for m in (0..=n).rev() {
                    let c = Rat::from_integer(binomial(n, m)) * &ypow;
                    rhs = rhs.plus(&self.polys[m].times(&c));
                    ypow *= y;
                }
                if lhs != rhs {
                    report.binomial_ok = false;
                    report.failures.push(format!("binomial: n={n}, y={y}"));
                }
            }
        }
        report
    }
}

/// Classical Bernoulli polynomials by the standard recurrence
/// `B_n(x) = x^n - sum_{k<n} C(n,k) B_k(x)/(n-k+1)`; independent of the
/// series machinery, used as an oracle in tests and scans.
pub fn classical_bernoulli_poly(n: usize) -> XPoly {
    let mut polys: Vec<XPoly> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut coeffs = vec![Rat::zero(); m + 1];
        coeffs[m] = Rat::one();
        let mut p = XPoly::new(coeffs);
        for (k, bk) in polys.iter().enumerate() {
            let c = Rat::new(binomial(m, k), (m - k + 1).into());
            p = p.sub(&bk.scale(&c));
        }
        polys.push(p);
    }
    polys.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfexpr;
    use crate::rational::{rat, ratio};
    use std::collections::BTreeMap;

    fn ub(n: usize) -> CPoly<Rat> {
        universal_bernoulli(n, &rat(1), n.max(1)).unwrap()
    }

    #[test]
    fn first_universal_polynomials() {
        assert_eq!(ub(0), CPoly::constant(rat(1)));
        // B_1 = x + c1/2
        let want1 = CPoly::var_x().add(&CPoly::var_c(1).scale(&ratio(1, 2)));
        assert_eq!(ub(1), want1);
        // B_2 = x^2 + x c1 - c1^2/2 + 2/3 c2
        let x = CPoly::var_x();
        let c1 = CPoly::var_c(1);
        let c2 = CPoly::var_c(2);
        let want2 = x
            .pow(2)
            .add(&x.mul(&c1))
            .add(&c1.pow(2).scale(&ratio(-1, 2)))
            .add(&c2.scale(&ratio(2, 3)));
        assert_eq!(ub(2), want2);
    }

    #[test]
    fn universal_isobaric_and_monic() {
        for n in 0..=6u64 {
            let b = ub(n as usize);
            assert!(b.is_isobaric(n), "B_{n} not isobaric: {b}");
            let top = Monomial::new(n as u32, Vec::new());
            assert_eq!(b.coeff(&top), rat(1));
        }
    }

    #[test]
    fn classical_specialization() {
        let mut assign = BTreeMap::new();
        for i in 1..=10u32 {
            assign.insert(i, rat(if i % 2 == 0 { 1 } else { -1 }));
        }
        let g = catalog("classical", 12).unwrap();
        for n in 0..=10 {
            let spec = ub(n).specialize(&assign, None).unwrap();
            let want = bernoulli_of_group(&g, n).unwrap();
            let got = XPoly::new(
                (0..=n)
                    .map(|k| spec.coeff(&Monomial::new(k as u32, Vec::new())))
                    .collect(),
            );
            assert_eq!(got, want, "n = {n}");
            // and against the recurrence oracle
            assert_eq!(want, classical_bernoulli_poly(n), "oracle n = {n}");
        }
    }

    #[test]
    fn todd_linear() {
        let g = catalog("todd", 3).unwrap();
        let b1 = bernoulli_of_group(&g, 1).unwrap();
        assert_eq!(b1, XPoly::new(vec![ratio(1, 2), rat(1)]));
    }

    #[test]
    fn tilde_base_cases() {
        for name in ["classical", "todd", "L", "A", "BV", "BVII"] {
            let g = catalog(name, 3).unwrap();
            assert!(tilde_of_group(&g, 0).unwrap().is_zero(), "{name}");
            assert_eq!(tilde_of_group(&g, 1).unwrap(), XPoly::x(), "{name}");
        }
    }

    #[test]
    fn genus_values() {
        assert_eq!(genus_polynomial(GenusKind::Alpha, 0).unwrap(), XPoly::constant(rat(1)));
        assert!(genus_polynomial(GenusKind::AlphaTilde, 0).unwrap().is_zero());
        // 2t/sinh 2t = 1 - (2/3)t^2 + ..., times 2!
        assert_eq!(
            genus_polynomial(GenusKind::Alpha, 2).unwrap().constant_term(),
            ratio(-4, 3)
        );
        // t/tanh t = 1 + t^2/3 - ..., times 2!
        assert_eq!(
            genus_polynomial(GenusKind::Lambda, 2).unwrap().constant_term(),
            ratio(2, 3)
        );
    }

    #[test]
    fn a_genus_matches_group_family() {
        let g = catalog("A", 8).unwrap();
        let q = gfexpr::eval_str("2*t/sinh(2*t)", 7).unwrap();
        for n in 0..=7 {
            let via_kernel = XPoly::new(appell_coeffs(&q, n));
            assert_eq!(bernoulli_of_group(&g, n).unwrap(), via_kernel, "n = {n}");
        }
    }

    #[test]
    fn s_sequence_values() {
        assert_eq!(
            s_sequence(&TruncSeries::one(4), 4).unwrap(),
            vec![rat(1), rat(0), rat(0), rat(0), rat(0)]
        );
        let todd = catalog("todd", 5).unwrap().characteristic_series();
        let s = s_sequence(&todd, 2).unwrap();
        assert_eq!(s[1], ratio(1, 2));
        assert_eq!(s[2], ratio(1, 12));
        let l = catalog("L", 5).unwrap().characteristic_series();
        assert_eq!(s_sequence(&l, 3).unwrap()[1], rat(0));
    }

    #[test]
    fn appell_binomial_universal() {
        let fam = BernoulliFamily::universal(5, &rat(1), 5).unwrap();
        let samples: Vec<Rat> = (0..=6).map(rat).collect();
        let report = fam.check(&samples);
        assert!(report.all_pass(), "{:?}", report.failures);
    }

    #[test]
    fn appell_binomial_concrete() {
        let g = catalog("classical", 12).unwrap();
        let fam = BernoulliFamily::of_group(&g, 10, &rat(1)).unwrap();
        let samples: Vec<Rat> = (-5..=6).map(rat).collect();
        assert!(fam.check(&samples).all_pass());
        // alpha = 0: every polynomial is x^n
        let triv = BernoulliFamily::of_group(&g, 6, &rat(0)).unwrap();
        for (n, p) in triv.polys.iter().enumerate() {
            let mut coeffs = vec![Rat::zero(); n + 1];
            coeffs[n] = Rat::one();
            assert_eq!(*p, XPoly::new(coeffs));
        }
        assert!(triv.check(&samples).all_pass());
    }

    #[test]
    fn fractional_alpha_family() {
        // (t/G)^(1/2) squared must equal t/G term by term
        let g = catalog("classical", 9).unwrap();
        let q = g.characteristic_series();
        let h = series_pow_alpha(&q, &ratio(1, 2)).unwrap();
        assert_eq!(h.mul(&h), q);
        let fam = BernoulliFamily::of_group(&g, 6, &ratio(1, 2)).unwrap();
        let samples: Vec<Rat> = (0..=7).map(rat).collect();
        assert!(fam.check(&samples).all_pass());
    }

    #[test]
    fn recurrence_oracle_sanity() {
        assert_eq!(classical_bernoulli_poly(2), XPoly::new(vec![ratio(1, 6), rat(-1), rat(1)]));
        assert_eq!(
            classical_bernoulli_poly(3),
            XPoly::new(vec![rat(0), ratio(1, 2), ratio(-3, 2), rat(1)])
        );
    }
}
