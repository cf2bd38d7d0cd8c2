//! Integer sequences and integer-coefficient Appell polynomials from
//! differences of formal group characteristic series: with
//! `f = t/G_1 - t/G_2` (or any explicit generating function of
//! valuation >= 1),
//!
//! `N_k = 2 k! [t^k] f` and `N_k(x) = 2 k! [t^k] (f e^{xt})`.
//!
//! When both groups have integral c-lists agreeing at every `c_{p-1}`
//! mod p, all terms and coefficients are integers.

use crate::error::{Error, Result};
use crate::fgl::FormalGroup;
use crate::gfexpr;
use crate::rational::{factorial, fmt_rat, is_integer, Int, Rat};
use crate::ring::Ring;
use crate::series::TruncSeries;
use crate::xpoly::XPoly;

#[derive(Clone, Debug)]
pub struct NkSequence {
    /// human-readable provenance (group pair or expression)
    pub source: String,
    /// N_1 .. N_count as exact rationals
    pub terms: Vec<Rat>,
    /// None for expression sources; Some(ok) for group pairs
    pub hypotheses_ok: Option<bool>,
    /// primes where the pair hypothesis fails
    pub failing_primes: Vec<u64>,
}

impl NkSequence {
    /// The terms as integers, if all of them are integral.
    pub fn integer_terms(&self) -> Option<Vec<Int>> {
        self.terms
            .iter()
            .map(|t| is_integer(t).then(|| t.numer().clone()))
            .collect()
    }

    pub fn display_terms(&self) -> String {
        self.terms.iter().map(fmt_rat).collect::<Vec<_>>().join(", ")
    }
}

/// `2 k! [t^k] f` for k = 1..=count.
fn numbers_of_series(f: &TruncSeries<Rat>, count: usize) -> Vec<Rat> {
    (1..=count)
        .map(|k| f.coeff(k) * Rat::from_integer(factorial(k) * Int::from(2)))
        .collect()
}

/// The Appell polynomials `2 k! [t^k] (f e^{xt})` for k = 0..=n_max;
/// the coefficient of x^m in the k-th polynomial is `2 k!/m! f_{k-m}`.
fn polynomials_of_series(f: &TruncSeries<Rat>, n_max: usize) -> Vec<XPoly> {
    (0..=n_max)
        .map(|k| {
            let coeffs = (0..=k)
                .map(|m| {
                    f.coeff(k - m)
                        * Rat::new(factorial(k) * Int::from(2), factorial(m))
                })
                .collect();
            XPoly::new(coeffs)
        })
        .collect()
}

fn diff_series(g1: &FormalGroup<Rat>, g2: &FormalGroup<Rat>, order: usize) -> Result<TruncSeries<Rat>> {
    if g1.order() <= order || g2.order() <= order {
        return Err(Error::Input(format!(
            "group orders ({}, {}) too small for {order} terms",
            g1.order(),
            g2.order()
        )));
    }
    Ok(g1
        .characteristic_series()
        .truncate(order)
        .sub(&g2.characteristic_series().truncate(order)))
}

fn pair_source(g1: &FormalGroup<Rat>, g2: &FormalGroup<Rat>) -> String {
    format!(
        "{} - {}",
        g1.name().unwrap_or("<anonymous>"),
        g2.name().unwrap_or("<anonymous>")
    )
}

/// The number sequence of a group pair. Hypotheses are checked for all
/// primes p <= count + 1 (larger primes cannot touch the first `count`
/// von Staudt denominators); terms are computed either way.
pub fn nk_from_groups(
    g1: &FormalGroup<Rat>,
    g2: &FormalGroup<Rat>,
    count: usize,
) -> Result<NkSequence> {
    let f = diff_series(g1, g2, count)?;
    let (ok, failing) = g1.pair_hypotheses(g2, count as u64 + 1);
    Ok(NkSequence {
        source: pair_source(g1, g2),
        terms: numbers_of_series(&f, count),
        hypotheses_ok: Some(ok),
        failing_primes: failing,
    })
}

/// The number sequence of an explicit generating function.
pub fn nk_from_expr(expr: &str, count: usize) -> Result<NkSequence> {
    let f = gfexpr::eval_str(expr, count)?;
    Ok(NkSequence {
        source: expr.to_string(),
        terms: numbers_of_series(&f, count),
        hypotheses_ok: None,
        failing_primes: Vec::new(),
    })
}

/// Appell polynomials `N_k(x)` of a group pair, k = 0..=n_max (the k = 0
/// entry is always the zero polynomial since the difference series has
/// no constant term).
pub fn nk_polynomials(
    g1: &FormalGroup<Rat>,
    g2: &FormalGroup<Rat>,
    n_max: usize,
) -> Result<Vec<XPoly>> {
    let f = diff_series(g1, g2, n_max)?;
    Ok(polynomials_of_series(&f, n_max))
}

/// Appell polynomials of an explicit generating function, in the printed
/// convention of the printed tables: the expression must vanish at
/// t = 0, and the returned `p_j` is `N_{j+1}` (the identically-zero
/// leading entry is dropped).
pub fn nk_polynomials_from_expr(expr: &str, n_max: usize) -> Result<Vec<XPoly>> {
    let f = gfexpr::eval_str(expr, n_max + 1)?;
    if !f.coeff(0).is_zero() {
        return Err(Error::Input(
            "generating function must vanish at t = 0".into(),
        ));
    }
    let mut polys = polynomials_of_series(&f, n_max + 1);
    polys.remove(0);
    Ok(polys)
}

/// True iff every coefficient of every polynomial is an integer.
pub fn all_integral(polys: &[XPoly]) -> bool {
    polys.iter().all(XPoly::is_integral)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgl::catalog;
    use crate::rational::rat;

    const B1_EXPR: &str = "t*(1+exp(t))/(2*(1+exp(t)-exp(2*t)))";
    const B2_EXPR: &str = "(-2*t*(1+2*cosh(t)+4*cosh(2*t)-6*sinh(t)))/((-6+8*cosh(t))*(2+cosh(t)-cosh(2*t)-sinh(t)+sinh(2*t)+2*sinh(3*t)))";
    const GENF1_EXPR: &str = "-(t*exp(-3*t/2)*sech(t/2)*(4+exp(t)*(1+2*exp(t)*(-1+exp(t)))))/(2*(-3+4*cosh(t))*(1+(-2+4*cosh(t))*sinh(t)))";

    fn ints(seq: &NkSequence) -> Vec<i64> {
        seq.terms
            .iter()
            .map(|t| {
                assert!(is_integer(t), "non-integer term {t}");
                use num_traits::ToPrimitive;
                t.numer().to_i64().unwrap()
            })
            .collect()
    }

    #[test]
    fn sequence_a() {
        let l = catalog("L", 11).unwrap();
        let todd = catalog("todd", 11).unwrap();
        let seq = nk_from_groups(&l, &todd, 10).unwrap();
        assert_eq!(ints(&seq), vec![-1, 1, 0, -1, 0, 3, 0, -17, 0, 155]);
        // hypotheses fail at p = 2 (c1 differs), terms still integral here
        assert_eq!(seq.hypotheses_ok, Some(false));
        assert_eq!(seq.failing_primes, vec![2]);
    }

    #[test]
    fn sequence_b1() {
        let seq = nk_from_expr(B1_EXPR, 6).unwrap();
        assert_eq!(ints(&seq), vec![2, 6, 39, 324, 3365, 41958]);
    }

    #[test]
    fn sequence_b2() {
        let seq = nk_from_expr(B2_EXPR, 6).unwrap();
        assert_eq!(ints(&seq), vec![-7, 61, -642, 10127, -207110, 5001663]);
    }

    #[test]
    fn trivial_sequences() {
        let g = catalog("A", 6).unwrap();
        let seq = nk_from_groups(&g, &g, 5).unwrap();
        assert!(seq.terms.iter().all(|t| t.is_zero()));
        assert_eq!(seq.hypotheses_ok, Some(true));
        let t = nk_from_expr("t", 4).unwrap();
        assert_eq!(ints(&t), vec![2, 0, 0, 0]);
    }

    #[test]
    fn classical_vs_todd() {
        // the kernels differ by exactly -t
        let g1 = catalog("classical", 6).unwrap();
        let g2 = catalog("todd", 6).unwrap();
        let seq = nk_from_groups(&g1, &g2, 5).unwrap();
        assert_eq!(ints(&seq), vec![-2, 0, 0, 0, 0]);
        assert_eq!(seq.hypotheses_ok, Some(true));
        // N_k(x) = -2k x^{k-1}
        let polys = nk_polynomials(&g1, &g2, 3).unwrap();
        assert!(polys[0].is_zero());
        assert_eq!(polys[1], XPoly::constant(rat(-2)));
        assert_eq!(polys[2], XPoly::x().scale(&rat(-4)));
        assert_eq!(polys[3], XPoly::new(vec![rat(0), rat(0), rat(-6)]));
    }

    #[test]
    fn genf1_polynomials() {
        let polys = nk_polynomials_from_expr(GENF1_EXPR, 3).unwrap();
        assert_eq!(polys[0], XPoly::constant(rat(-5)));
        assert_eq!(polys[1], XPoly::new(vec![rat(29), rat(-10)]));
        assert_eq!(polys[2], XPoly::new(vec![rat(-150), rat(87), rat(-15)]));
        assert_eq!(
            polys[3],
            XPoly::new(vec![rat(1279), rat(-600), rat(174), rat(-20)])
        );
        assert!(all_integral(&polys));
    }

    #[test]
    fn appell_and_constant_term_properties() {
        let g1 = catalog("L", 14).unwrap();
        let g2 = catalog("A", 14).unwrap();
        let polys = nk_polynomials(&g1, &g2, 12).unwrap();
        let seq = nk_from_groups(&g1, &g2, 12).unwrap();
        assert_eq!(seq.hypotheses_ok, Some(true), "{:?}", seq.failing_primes);
        for k in 1..=12usize {
            // numbers are the constant terms
            assert_eq!(polys[k].constant_term(), seq.terms[k - 1]);
            // d/dx N_k = k N_{k-1}
            assert_eq!(
                polys[k].derivative(),
                polys[k - 1].scale(&rat(k as i64)),
                "k = {k}"
            );
            assert!(polys[k].is_integral(), "k = {k}: {}", polys[k]);
        }
    }

    #[test]
    fn expr_polynomials_need_vanishing_constant() {
        assert!(nk_polynomials_from_expr("1+t", 3).is_err());
    }
}
