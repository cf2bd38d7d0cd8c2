//! Congruence verifiers: universal von Staudt and Kummer congruences for
//! the symbolic Bernoulli numbers, the generalized Almkvist-Meurman
//! integrality theorem and its satellite lemmas for concrete groups, the
//! Hermite-Bachmann binomial congruence, the Bartz-Rutkowski
//! generalization, Fermat-type sums, and Granville-class scans over
//! polynomial sequences.
//!
//! Every check returns a [`CongruenceVerdict`] carrying the exact
//! residual object as a witness when it fails; scans iterate parameters
//! in lexicographic order so output is reproducible.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::bernoulli::{genus_polynomial, tilde_of_group, GenusKind};
use crate::cpoly::CPoly;
use crate::error::{Error, Result};
use crate::fgl::FormalGroup;
use crate::rational::{binomial, factorial, fmt_rat, is_integer, primes_upto, Int, Rat};
use crate::ring::Ring;
use crate::xpoly::XPoly;

#[derive(Clone, Debug)]
pub struct CongruenceVerdict {
    pub name: String,
    pub params: BTreeMap<String, String>,
    /// vacuously true when `applicable` is false
    pub holds: bool,
    pub applicable: bool,
    pub witness: Option<String>,
}

impl CongruenceVerdict {
    pub(crate) fn new(name: &str, params: &[(&str, String)]) -> Self {
        CongruenceVerdict {
            name: name.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            holds: true,
            applicable: true,
            witness: None,
        }
    }

    pub(crate) fn fail(mut self, witness: String) -> Self {
        self.holds = false;
        self.witness = Some(witness);
        self
    }

    pub(crate) fn inapplicable(mut self, why: String) -> Self {
        self.applicable = false;
        self.witness = Some(why);
        self
    }

    pub fn csv_row(&self) -> String {
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        format!(
            "{},{},{},{}",
            self.name,
            params,
            if !self.holds { "FAILS" } else if !self.applicable { "inapplicable" } else { "holds" },
            self.witness.as_deref().unwrap_or("")
        )
    }

    pub fn json(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "params": self.params,
            "holds": self.holds,
            "applicable": self.applicable,
            "witness": self.witness,
        })
    }
}

/// Primes p with p - 1 dividing n.
fn staudt_primes(n: usize) -> Vec<u64> {
    primes_upto(n as u64 + 1)
        .into_iter()
        .filter(|p| n as u64 % (p - 1) == 0)
        .collect()
}

/// The symbolic Bernoulli numbers `B_0(0), ..., B_w(0)` of the universal
/// group, computed in one series pass.
pub fn universal_numbers(w: usize) -> Vec<CPoly<Rat>> {
    let q = crate::fgl::universal_group(w + 1).characteristic_series();
    (0..=w)
        .map(|n| q.coeff(n).scale(&Rat::from_integer(factorial(n))))
        .collect()
}

fn von_staudt_inner(n: usize, numbers: &[CPoly<Rat>]) -> CongruenceVerdict {
    let v = CongruenceVerdict::new("von_staudt", &[("n", n.to_string())]);
    let bn = &numbers[n];
    if n == 0 {
        return if *bn == CPoly::constant(Rat::one()) {
            v
        } else {
            v.fail(bn.to_string())
        };
    }
    if n == 1 {
        let want = CPoly::var_c(1).scale(&Rat::new(1.into(), 2.into()));
        return if *bn == want { v } else { v.fail(bn.to_string()) };
    }
    let residual = if n % 2 == 0 {
        // B_n + sum over p-1 | n of c_{p-1}^{n/(p-1)} / p
        let mut r = bn.clone();
        for p in staudt_primes(n) {
            let e = n as u32 / (p as u32 - 1);
            let term = CPoly::var_c(p as u32 - 1)
                .pow(e)
                .scale(&Rat::new(1.into(), p.into()));
            r = r.add(&term);
        }
        r
    } else {
        // B_n - (c1^n + c1^{n-3} c3) / 2
        let c1 = CPoly::var_c(1);
        let half = Rat::new(1.into(), 2.into());
        let rhs = c1
            .pow(n as u32)
            .add(&c1.pow(n as u32 - 3).mul(&CPoly::var_c(3)))
            .scale(&half);
        bn.sub(&rhs)
    };
    let residue = residual.residue_mod_z();
    if residue.is_zero() {
        v
    } else {
        v.fail(residue.to_string())
    }
}

/// Universal von Staudt congruence for `B_n(0)`: the even case subtracts
/// the von Staudt denominators, the odd case the `(c1^n + c1^{n-3} c3)/2`
/// principal part; the remainder must lie in `Z[c1, c2, ...]`.
pub fn von_staudt_check(n: usize, w: usize) -> Result<CongruenceVerdict> {
    if w < n {
        return Err(Error::Input(format!("weight cap {w} below n = {n}")));
    }
    Ok(von_staudt_inner(n, &universal_numbers(w)))
}

fn kummer_inner(n: usize, p: u64, numbers: &[CPoly<Rat>]) -> CongruenceVerdict {
    let v = CongruenceVerdict::new(
        "kummer",
        &[("n", n.to_string()), ("p", p.to_string())],
    );
    let r = n as u64 % (p - 1);
    if n < 2 || r == 0 || r == 1 {
        return v.inapplicable(format!("n = {r} mod p-1"));
    }
    let m = n + (p - 1) as usize;
    let diff = numbers[m]
        .scale(&Rat::new(1.into(), m.into()))
        .sub(
            &numbers[n]
                .mul(&CPoly::var_c(p as u32 - 1))
                .scale(&Rat::new(1.into(), n.into())),
        );
    if diff.is_p_integral_and_divisible(p) {
        v
    } else {
        v.fail(diff.to_string())
    }
}

/// Universal Kummer congruence: for n not 0 or 1 mod p-1,
/// `B_{n+p-1}/(n+p-1) - c_{p-1} B_n/n` lies in `p Z_p[c1, c2, ...]`.
pub fn kummer_check(n: usize, p: u64, w: usize) -> Result<CongruenceVerdict> {
    let m = n + p as usize - 1;
    if w < m {
        return Err(Error::Input(format!("weight cap {w} below n+p-1 = {m}")));
    }
    Ok(kummer_inner(n, p, &universal_numbers(w)))
}

fn rat_u64(v: u64) -> Rat {
    Rat::from_integer(v.into())
}

fn pow_rat(base: &Rat, e: usize) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

fn integrality_verdict(name: &str, params: &[(&str, String)], value: Rat) -> CongruenceVerdict {
    let v = CongruenceVerdict::new(name, params);
    if is_integer(&value) {
        v
    } else {
        v.fail(fmt_rat(&value))
    }
}

/// When the theorem's hypotheses are unmet the verdict is marked
/// inapplicable, but the underlying numeric check still runs: a failing
/// witness on a constructed group is worth surfacing, and an accidental
/// hold is reported as such.
fn hypothesis_gate(g: &FormalGroup<Rat>, p_max: u64) -> Option<String> {
    let rep = g.check_hypotheses(p_max);
    if rep.th1_ok() {
        None
    } else {
        Some(format!(
            "hypotheses unmet: c integral = {}, parity = {}, failing primes {:?}",
            rep.c_integral,
            rep.parity_condition,
            rep.failures()
        ))
    }
}

fn apply_gate(mut v: CongruenceVerdict, note: Option<String>) -> CongruenceVerdict {
    if let Some(note) = note {
        v.applicable = false;
        v.witness = Some(match v.witness.take() {
            Some(w) => format!("{w}; {note}"),
            None => note,
        });
    }
    v
}

/// Generalized Almkvist-Meurman: `k^n B~_n^G(h/k)` is an integer.
pub fn am_check(g: &FormalGroup<Rat>, n: usize, h: u64, k: u64) -> Result<CongruenceVerdict> {
    let params = [
        ("n", n.to_string()),
        ("h", h.to_string()),
        ("k", k.to_string()),
    ];
    let note = hypothesis_gate(g, n as u64 + 1);
    let tilde = tilde_of_group(g, n)?;
    let value = pow_rat(&rat_u64(k), n) * tilde.eval(&Rat::new(h.into(), k.into()));
    Ok(apply_gate(integrality_verdict("am", &params, value), note))
}

/// The inductive engine of the AM theorem:
/// `sum_{m=0}^{n-1} C(n,m) k^m B_m^G` is an integer.
pub fn lemma4_check(g: &FormalGroup<Rat>, n: usize, k: u64) -> Result<CongruenceVerdict> {
    let params = [("n", n.to_string()), ("k", k.to_string())];
    let note = hypothesis_gate(g, n as u64 + 1);
    let q = g.characteristic_series();
    let mut sum = Rat::zero();
    for m in 0..n {
        let bm = q.coeff(m) * Rat::from_integer(factorial(m));
        sum += Rat::from_integer(binomial(n, m)) * pow_rat(&rat_u64(k), m) * bm;
    }
    Ok(apply_gate(integrality_verdict("lemma4", &params, sum), note))
}

/// Hermite-Bachmann: `sum of C(n,m) over 1 <= m <= n-1 with p-1 | m` is
/// divisible by p.
pub fn hermite_bachmann(n: usize, p: u64) -> CongruenceVerdict {
    let params = [("n", n.to_string()), ("p", p.to_string())];
    let mut sum = Int::from(0);
    let mut m = (p - 1) as usize;
    while m <= n.saturating_sub(1) {
        sum += binomial(n, m);
        m += (p - 1) as usize;
    }
    let v = CongruenceVerdict::new("hermite_bachmann", &params);
    if sum.mod_floor(&Int::from(p)) == Int::from(0) {
        v
    } else {
        v.fail(sum.to_string())
    }
}

/// Bartz-Rutkowski generalization: for n even or n = 1,
/// `k^n B_n^G(h/k) + sum_{p-1 | n, p not dividing k} c_{p-1}^{n/(p-1)}/p`
/// is an integer; for odd n >= 3, `k^n B_n^G(h/k)` itself is.
pub fn br_check(g: &FormalGroup<Rat>, n: usize, h: u64, k: u64) -> Result<CongruenceVerdict> {
    let params = [
        ("n", n.to_string()),
        ("h", h.to_string()),
        ("k", k.to_string()),
    ];
    let note = hypothesis_gate(g, n as u64 + 1);
    let bn = crate::bernoulli::bernoulli_of_group(g, n)?;
    let mut value = pow_rat(&rat_u64(k), n) * bn.eval(&Rat::new(h.into(), k.into()));
    if n % 2 == 0 || n == 1 {
        for p in staudt_primes(n) {
            if k % p == 0 {
                continue;
            }
            let e = n / (p - 1) as usize;
            value += pow_rat(&g.c()[(p - 1) as usize], e) / rat_u64(p);
        }
    }
    Ok(apply_gate(integrality_verdict("br", &params, value), note))
}

/// Fermat-type sum: `(s^n - 1) sum_{p-1 | n, p not dividing s}
/// c_{p-1}^{n/(p-1)}/p` is an integer.
pub fn fermat_sum_check(g: &FormalGroup<Rat>, n: usize, s: u64) -> Result<CongruenceVerdict> {
    let params = [("n", n.to_string()), ("s", s.to_string())];
    let note = hypothesis_gate(g, n as u64 + 1);
    let mut sum = Rat::zero();
    for p in staudt_primes(n) {
        if s % p == 0 {
            continue;
        }
        let e = n / (p - 1) as usize;
        let cpm1 = g
            .c()
            .get((p - 1) as usize)
            .cloned()
            .ok_or_else(|| Error::Input(format!("group order too small for p = {p}")))?;
        sum += pow_rat(&cpm1, e) / rat_u64(p);
    }
    let value = (pow_rat(&rat_u64(s), n) - Rat::one()) * sum;
    Ok(apply_gate(integrality_verdict("fermat_sum", &params, value), note))
}

/// Property (G): `k^n P_n(h/k)` integral for every n <= len, h <= h_max,
/// k <= k_max; `polys[n]` is P_n. The witness records the first failure.
pub fn granville_scan(polys: &[XPoly], h_max: u64, k_max: u64) -> CongruenceVerdict {
    let params = [
        ("n_max", polys.len().saturating_sub(1).to_string()),
        ("h_max", h_max.to_string()),
        ("k_max", k_max.to_string()),
    ];
    let v = CongruenceVerdict::new("granville", &params);
    for (n, poly) in polys.iter().enumerate() {
        for h in 1..=h_max {
            for k in 1..=k_max {
                let value = pow_rat(&rat_u64(k), n) * poly.eval(&Rat::new(h.into(), k.into()));
                if !is_integer(&value) {
                    return v.fail(format!("n={n}, h={h}, k={k}: {}", fmt_rat(&value)));
                }
            }
        }
    }
    v
}

/// Parameter scope shared by all registered verifiers; each verifier
/// reads the fields it needs.
#[derive(Clone, Debug)]
pub struct ScanScope {
    pub group: Option<FormalGroup<Rat>>,
    pub n_max: usize,
    pub h_max: u64,
    pub k_max: u64,
    pub primes: Vec<u64>,
    pub s_max: u64,
    pub genus_kind: Option<GenusKind>,
    pub stop_on_failure: bool,
}

impl Default for ScanScope {
    fn default() -> Self {
        ScanScope {
            group: None,
            n_max: 10,
            h_max: 5,
            k_max: 5,
            primes: vec![3, 5, 7],
            s_max: 5,
            genus_kind: None,
            stop_on_failure: false,
        }
    }
}

impl ScanScope {
    fn require_group(&self) -> Result<&FormalGroup<Rat>> {
        self.group
            .as_ref()
            .ok_or_else(|| Error::Input("this verifier needs a group".into()))
    }
}

/// A named congruence family runnable over a parameter scope; results
/// come back in lexicographic parameter order.
pub trait Verifier: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run(&self, scope: &ScanScope) -> Result<Vec<CongruenceVerdict>>;
}

fn collect<I>(scope: &ScanScope, it: I) -> Vec<CongruenceVerdict>
where
    I: IntoIterator<Item = CongruenceVerdict>,
{
    let mut out = Vec::new();
    for v in it {
        let bad = !v.holds;
        out.push(v);
        if bad && scope.stop_on_failure {
            break;
        }
    }
    out
}

macro_rules! verifier {
    ($ty:ident, $name:literal, $desc:literal, |$scope:ident| $body:expr) => {
        struct $ty;
        impl Verifier for $ty {
            fn name(&self) -> &'static str {
                $name
            }
            fn description(&self) -> &'static str {
                $desc
            }
            fn run(&self, $scope: &ScanScope) -> Result<Vec<CongruenceVerdict>> {
                $body
            }
        }
    };
}

verifier!(
    StaudtVerifier,
    "staudt",
    "universal von Staudt congruence for B_n, n = 0..n_max",
    |scope| {
        let numbers = universal_numbers(scope.n_max);
        Ok(collect(
            scope,
            (0..=scope.n_max).map(|n| von_staudt_inner(n, &numbers)),
        ))
    }
);

verifier!(
    KummerVerifier,
    "kummer",
    "universal Kummer congruence over n = 2..n_max and the listed primes",
    |scope| {
        let p_top = scope.primes.iter().copied().max().unwrap_or(3);
        let numbers = universal_numbers(scope.n_max + p_top as usize - 1);
        let mut out = Vec::new();
        'outer: for n in 2..=scope.n_max {
            for &p in &scope.primes {
                let v = kummer_inner(n, p, &numbers);
                let bad = !v.holds;
                out.push(v);
                if bad && scope.stop_on_failure {
                    break 'outer;
                }
            }
        }
        Ok(out)
    }
);

verifier!(
    AmVerifier,
    "am",
    "k^n B~_n(h/k) integrality over the (n, h, k) grid",
    |scope| {
        let g = scope.require_group()?;
        let mut out = Vec::new();
        'outer: for n in 0..=scope.n_max {
            for h in 1..=scope.h_max {
                for k in 1..=scope.k_max {
                    let v = am_check(g, n, h, k)?;
                    let bad = !v.holds;
                    out.push(v);
                    if bad && scope.stop_on_failure {
                        break 'outer;
                    }
                }
            }
        }
        Ok(out)
    }
);

verifier!(
    BrVerifier,
    "br",
    "Bartz-Rutkowski-type integrality over the (n, h, k) grid",
    |scope| {
        let g = scope.require_group()?;
        let mut out = Vec::new();
        'outer: for n in 1..=scope.n_max {
            for h in 1..=scope.h_max {
                for k in 1..=scope.k_max {
                    let v = br_check(g, n, h, k)?;
                    let bad = !v.holds;
                    out.push(v);
                    if bad && scope.stop_on_failure {
                        break 'outer;
                    }
                }
            }
        }
        Ok(out)
    }
);

verifier!(
    Lemma4Verifier,
    "lemma4",
    "binomial Bernoulli sum integrality over the (n, k) grid",
    |scope| {
        let g = scope.require_group()?;
        let mut out = Vec::new();
        'outer: for n in 1..=scope.n_max {
            for k in 1..=scope.k_max {
                let v = lemma4_check(g, n, k)?;
                let bad = !v.holds;
                out.push(v);
                if bad && scope.stop_on_failure {
                    break 'outer;
                }
            }
        }
        Ok(out)
    }
);

verifier!(
    HbVerifier,
    "hb",
    "Hermite-Bachmann binomial congruence over n and the listed primes",
    |scope| {
        let mut out = Vec::new();
        'outer: for n in 2..=scope.n_max {
            for &p in &scope.primes {
                let v = hermite_bachmann(n, p);
                let bad = !v.holds;
                out.push(v);
                if bad && scope.stop_on_failure {
                    break 'outer;
                }
            }
        }
        Ok(out)
    }
);

verifier!(
    FermatVerifier,
    "fermat",
    "Fermat-type sum integrality over the (n, s) grid",
    |scope| {
        let g = scope.require_group()?;
        let mut out = Vec::new();
        'outer: for n in 1..=scope.n_max {
            for s in 1..=scope.s_max {
                let v = fermat_sum_check(g, n, s)?;
                let bad = !v.holds;
                out.push(v);
                if bad && scope.stop_on_failure {
                    break 'outer;
                }
            }
        }
        Ok(out)
    }
);

verifier!(
    GranvilleVerifier,
    "granville",
    "property (G) scan for a genus tilde polynomial family",
    |scope| {
        let kind = scope
            .genus_kind
            .ok_or_else(|| Error::Input("granville scan needs a genus kind".into()))?;
        let polys = (0..=scope.n_max)
            .map(|n| genus_polynomial(kind, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(vec![granville_scan(&polys, scope.h_max, scope.k_max)])
    }
);

static VERIFIERS: &[&dyn Verifier] = &[
    &StaudtVerifier,
    &KummerVerifier,
    &AmVerifier,
    &BrVerifier,
    &Lemma4Verifier,
    &HbVerifier,
    &FermatVerifier,
    &GranvilleVerifier,
];

pub fn verifiers() -> impl Iterator<Item = &'static dyn Verifier> {
    VERIFIERS.iter().copied()
}

pub fn verifier(name: &str) -> Result<&'static dyn Verifier> {
    VERIFIERS
        .iter()
        .copied()
        .find(|v| v.name() == name)
        .ok_or_else(|| Error::Input(format!("unknown verifier '{name}'")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgl::catalog;
    use crate::rational::{rat, ratio};

    #[test]
    fn von_staudt_small() {
        for n in 0..=8 {
            let v = von_staudt_check(n, 8).unwrap();
            assert!(v.holds, "n = {n}: {:?}", v.witness);
        }
    }

    #[test]
    fn von_staudt_oracle_n2_n3() {
        // n=2: B_2 + c1^2/2 + c2/3 = c2 exactly (integral)
        let numbers = universal_numbers(3);
        let lhs = numbers[2]
            .add(&CPoly::var_c(1).pow(2).scale(&ratio(1, 2)))
            .add(&CPoly::var_c(2).scale(&ratio(1, 3)));
        assert_eq!(lhs, CPoly::var_c(2));
        // n=3: B_3 - (c1^3 + c3)/2 = c1^3 - 3 c1 c2 + c3
        let rhs = CPoly::var_c(1)
            .pow(3)
            .add(&CPoly::var_c(3))
            .scale(&ratio(1, 2));
        let want = CPoly::var_c(1)
            .pow(3)
            .sub(&CPoly::var_c(1).mul(&CPoly::var_c(2)).scale(&rat(3)))
            .add(&CPoly::var_c(3));
        assert_eq!(numbers[3].sub(&rhs), want);
    }

    #[test]
    fn kummer_examples() {
        assert!(kummer_check(2, 5, 8).unwrap().holds);
        assert!(kummer_check(3, 7, 10).unwrap().holds);
        let v = kummer_check(4, 5, 9).unwrap();
        assert!(!v.applicable && v.holds);
        // p = 3 is always inapplicable: n mod 2 is 0 or 1
        assert!(!kummer_check(5, 3, 8).unwrap().applicable);
    }

    #[test]
    fn am_examples() {
        let g = catalog("classical", 6).unwrap();
        // 4 B~_2(1/2) = 4 (B_2(1/2) - B_2) = 4(-1/12 - 1/6) = -1
        let tilde = tilde_of_group(&g, 2).unwrap();
        assert_eq!(tilde.eval(&ratio(1, 2)) * rat(4), rat(-1));
        assert!(am_check(&g, 2, 1, 2).unwrap().holds);
        let l = catalog("L", 6).unwrap();
        assert!(am_check(&l, 4, 3, 2).unwrap().holds);
    }

    #[test]
    fn am_hypothesis_gate() {
        let g = FormalGroup::from_c(&[rat(-1), rat(2), rat(-1), rat(1)], 6).unwrap();
        let v = am_check(&g, 4, 1, 3).unwrap();
        assert!(!v.applicable);
        assert!(v.witness.unwrap().contains("hypotheses unmet"));
    }

    #[test]
    fn lemma4_examples() {
        let g = catalog("classical", 6).unwrap();
        // n=3, k=1: 1 + 3(-1/2) + 3(1/6) = 0
        assert!(lemma4_check(&g, 3, 1).unwrap().holds);
        let todd = catalog("todd", 6).unwrap();
        assert!(lemma4_check(&todd, 4, 3).unwrap().holds);
        assert!(lemma4_check(&todd, 1, 7).unwrap().holds);
    }

    #[test]
    fn hermite_bachmann_examples() {
        assert!(hermite_bachmann(4, 3).holds); // C(4,2) = 6
        assert!(hermite_bachmann(2, 5).holds); // empty sum
        assert!(hermite_bachmann(6, 3).holds); // 15 + 15 = 30
        assert!(hermite_bachmann(9, 5).holds);
    }

    #[test]
    fn br_examples() {
        let g = catalog("classical", 6).unwrap();
        // n=2, h=1, k=1: B_2(1) + 1/2 + 1/3 = 1
        assert!(br_check(&g, 2, 1, 1).unwrap().holds);
        // n=3, h=1, k=2: 8 B_3(1/2) = 0
        assert!(br_check(&g, 3, 1, 2).unwrap().holds);
        // n=1, h=1, k=2: p=2 divides k, no correction; 2 B_1(1/2) = 0
        assert!(br_check(&g, 1, 1, 2).unwrap().holds);
    }

    #[test]
    fn fermat_examples() {
        let g = catalog("classical", 6).unwrap();
        // n=2, s=5: 24 (1/2 + 1/3) = 20
        assert!(fermat_sum_check(&g, 2, 5).unwrap().holds);
        assert!(fermat_sum_check(&g, 3, 2).unwrap().holds);
        assert!(fermat_sum_check(&g, 4, 1).unwrap().holds);
    }

    #[test]
    fn granville_counterexample() {
        // P_n = x^n/2 fails immediately
        let polys: Vec<XPoly> = (0..3)
            .map(|n| {
                let mut coeffs = vec![Rat::zero(); n + 1];
                coeffs[n] = ratio(1, 2);
                XPoly::new(coeffs)
            })
            .collect();
        let v = granville_scan(&polys, 2, 2);
        assert!(!v.holds);
        assert!(v.witness.unwrap().contains("1/2"));
    }

    #[test]
    fn registry_runs() {
        assert!(verifier("staudt").is_ok());
        assert!(verifier("nope").is_err());
        let scope = ScanScope {
            group: Some(catalog("classical", 8).unwrap()),
            n_max: 6,
            h_max: 3,
            k_max: 3,
            primes: vec![3, 5],
            s_max: 3,
            genus_kind: Some(GenusKind::AlphaTilde),
            ..ScanScope::default()
        };
        for v in verifiers() {
            let verdicts = v.run(&scope).unwrap();
            assert!(!verdicts.is_empty(), "{}", v.name());
            for verdict in verdicts {
                assert!(verdict.holds, "{}: {}", v.name(), verdict.csv_row());
            }
        }
    }
}
