//! `fgcalc`: batch CLI over the formal-group calculus library.
//!
//! Exit codes: 0 = all checks hold / output produced, 1 = usage or input
//! error, 2 = a mathematical check failed (the witness is in the output).

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use fgcalc_core::bernoulli::{
    bernoulli_of_group, genus_polynomial, s_sequence, universal_bernoulli, BernoulliFamily,
    GenusKind,
};
use fgcalc_core::congruence::{verifier, CongruenceVerdict, ScanScope};
use fgcalc_core::fgl::{catalog, catalog_entries, FormalGroup};
use fgcalc_core::gfexpr;
use fgcalc_core::rational::{fmt_rat, parse_rat, Rat};
use fgcalc_core::sequences::{
    nk_from_expr, nk_from_groups, nk_polynomials, nk_polynomials_from_expr,
};
use fgcalc_core::zeta::{
    chi_numbers, l_value_neg, th3_check, th4_check, zeta_neg, DirichletCharacter,
};
use fgcalc_core::TruncSeries;

#[derive(Parser)]
#[command(name = "fgcalc", version, about = "exact calculus of formal group laws")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// write output to a file instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// inspect formal groups and their law
    Fgl {
        #[command(subcommand)]
        sub: FglCmd,
    },
    /// Bernoulli-type polynomials, numbers and genus tables
    Bernoulli {
        #[command(subcommand)]
        sub: BernoulliCmd,
    },
    /// congruence verifiers over parameter grids
    Congruence {
        #[command(subcommand)]
        sub: CongruenceCmd,
    },
    /// integer sequences and Appell polynomial tables
    Sequence {
        #[command(subcommand)]
        sub: SequenceCmd,
    },
    /// Hurwitz-type zeta special values and L-series checks
    Zeta {
        #[command(subcommand)]
        sub: ZetaCmd,
    },
}

/// One of the four ways to hand a formal group to a command.
#[derive(Args, Clone)]
struct GroupSpec {
    /// catalog name (classical, todd, L, A, BV, BVII)
    #[arg(long)]
    group: Option<String>,
    /// comma-separated c-list "c1,c2,..."
    #[arg(long, allow_hyphen_values = true)]
    clist: Option<String>,
    /// closed-form exponential G(t)
    #[arg(long, allow_hyphen_values = true)]
    exp: Option<String>,
    /// characteristic series Q(t) = t/G(t); G is derived as t/Q
    #[arg(long = "char", allow_hyphen_values = true)]
    charq: Option<String>,
}

impl GroupSpec {
    fn build(&self, order: usize) -> Result<FormalGroup<Rat>> {
        let given = [
            self.group.is_some(),
            self.clist.is_some(),
            self.exp.is_some(),
            self.charq.is_some(),
        ]
        .iter()
        .filter(|b| **b)
        .count();
        if given != 1 {
            bail!("exactly one of --group / --clist / --exp / --char is required");
        }
        if let Some(name) = &self.group {
            return Ok(catalog(name, order)?);
        }
        if let Some(list) = &self.clist {
            let cs = list
                .split(',')
                .map(|s| parse_rat(s.trim()))
                .collect::<fgcalc_core::Result<Vec<_>>>()?;
            return Ok(FormalGroup::from_c(&cs, order)?.with_name("clist"));
        }
        if let Some(expr) = &self.exp {
            let g = gfexpr::eval_str(expr, order)?;
            return Ok(FormalGroup::from_exp(g)?.with_name("exp"));
        }
        let q = gfexpr::eval_str(self.charq.as_ref().unwrap(), order)?;
        let g = TruncSeries::identity(order).div(&q)?;
        Ok(FormalGroup::from_exp(g.truncate(order))?.with_name("char"))
    }

    fn describe(&self) -> String {
        self.group
            .clone()
            .or_else(|| self.clist.as_ref().map(|c| format!("clist {c}")))
            .or_else(|| self.exp.as_ref().map(|e| format!("exp {e}")))
            .or_else(|| self.charq.as_ref().map(|q| format!("char {q}")))
            .unwrap_or_default()
    }
}

/// Group selection for zeta commands, where --char is the character
/// file; the Q-form entry point is not available here.
#[derive(Args, Clone)]
struct ZetaGroupSpec {
    /// catalog name (classical, todd, L, A, BV, BVII)
    #[arg(long)]
    group: Option<String>,
    /// comma-separated c-list "c1,c2,..."
    #[arg(long, allow_hyphen_values = true)]
    clist: Option<String>,
    /// closed-form exponential G(t)
    #[arg(long, allow_hyphen_values = true)]
    exp: Option<String>,
}

impl ZetaGroupSpec {
    fn build(&self, order: usize) -> Result<FormalGroup<Rat>> {
        GroupSpec {
            group: self.group.clone(),
            clist: self.clist.clone(),
            exp: self.exp.clone(),
            charq: None,
        }
        .build(order)
    }

    fn describe(&self) -> String {
        GroupSpec {
            group: self.group.clone(),
            clist: self.clist.clone(),
            exp: self.exp.clone(),
            charq: None,
        }
        .describe()
    }
}

#[derive(Subcommand)]
enum FglCmd {
    /// print F, G, c and gamma
    Show {
        #[command(flatten)]
        spec: GroupSpec,
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// build the group law and verify its axioms
    Axioms {
        #[command(flatten)]
        spec: GroupSpec,
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
    /// list the catalog
    List,
}

#[derive(Subcommand)]
enum BernoulliCmd {
    /// B_n^(alpha)(x) for a group or the universal group
    Poly {
        #[command(flatten)]
        spec: GroupSpec,
        /// symbolic c-coefficients instead of a concrete group
        #[arg(long, conflicts_with_all = ["group", "clist", "exp", "charq"])]
        universal: bool,
        #[arg(long)]
        n: usize,
        /// order parameter alpha, as p/q
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        alpha: String,
    },
    /// the numbers B_0 .. B_n
    Numbers {
        #[command(flatten)]
        spec: GroupSpec,
        #[arg(long)]
        n: usize,
    },
    /// genus polynomial families and s-coefficient tables
    Genus {
        /// alpha, lambda, alpha_tilde, lambda_tilde, or s
        #[arg(long)]
        kind: String,
        /// characteristic series Q(t) for --kind s
        #[arg(long = "char")]
        charq: Option<String>,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Clone)]
struct ScanArgs {
    #[arg(long, default_value_t = 10)]
    n_max: usize,
    #[arg(long, default_value_t = 5)]
    h_max: u64,
    #[arg(long, default_value_t = 5)]
    k_max: u64,
    /// comma-separated primes for the p-indexed scans
    #[arg(long, default_value = "3,5,7")]
    primes: String,
    #[arg(long, default_value_t = 5)]
    s_max: u64,
    /// stop at the first failing verdict
    #[arg(long)]
    stop_on_failure: bool,
}

#[derive(Subcommand)]
enum CongruenceCmd {
    /// universal von Staudt over n = 0..n_max
    Staudt(ScanArgs),
    /// universal Kummer over n and primes
    Kummer(ScanArgs),
    /// Almkvist-Meurman integrality over (n, h, k)
    Am {
        #[command(flatten)]
        spec: GroupSpec,
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// Bartz-Rutkowski integrality over (n, h, k)
    Br {
        #[command(flatten)]
        spec: GroupSpec,
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// binomial Bernoulli sums over (n, k)
    Lemma4 {
        #[command(flatten)]
        spec: GroupSpec,
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// Hermite-Bachmann binomial congruence
    Hb(ScanArgs),
    /// property (G) scan for a genus tilde family
    Granville {
        /// alpha_tilde or lambda_tilde
        #[arg(long)]
        kind: String,
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// Fermat-type sums over (n, s)
    Fermat {
        #[command(flatten)]
        spec: GroupSpec,
        #[command(flatten)]
        scan: ScanArgs,
    },
}

#[derive(Subcommand)]
enum SequenceCmd {
    /// the numbers N_1 .. N_count
    Numbers {
        /// first catalog group of the pair
        #[arg(long, required_unless_present = "expr", conflicts_with = "expr")]
        g1: Option<String>,
        /// second catalog group of the pair
        #[arg(long, requires = "g1", conflicts_with = "expr")]
        g2: Option<String>,
        /// explicit generating function instead of a group pair
        #[arg(long, allow_hyphen_values = true)]
        expr: Option<String>,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// the Appell polynomials N_k(x)
    Polys {
        #[arg(long, required_unless_present = "expr", conflicts_with = "expr")]
        g1: Option<String>,
        #[arg(long, requires = "g1", conflicts_with = "expr")]
        g2: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        expr: Option<String>,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
}

#[derive(Subcommand)]
enum ZetaCmd {
    /// zeta^G(-m, a)
    Value {
        #[command(flatten)]
        spec: ZetaGroupSpec,
        #[arg(long)]
        m: usize,
        /// second argument a, as p/q
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// integrality of n k^n zeta^G(1-n, h/k)
    Th3 {
        #[command(flatten)]
        spec: ZetaGroupSpec,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        h: u64,
        #[arg(long)]
        k: u64,
        /// admit the c_{p-1} = 0 residue branch too
        #[arg(long)]
        lenient: bool,
    },
    /// Bernoulli chi-numbers
    Chi {
        #[command(flatten)]
        spec: ZetaGroupSpec,
        /// character file {modulus, order, values}
        #[arg(long = "char")]
        char_file: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// L(G, chi, 1-n)
    L {
        #[command(flatten)]
        spec: ZetaGroupSpec,
        #[arg(long = "char")]
        char_file: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// integrality of n N L(G, chi, 1-n)
    Th4 {
        #[command(flatten)]
        spec: ZetaGroupSpec,
        #[arg(long = "char")]
        char_file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lenient: bool,
    },
}

/// Everything a command produces, rendered per --format. Results are
/// (label, value) pairs; verdicts drive the exit code.
struct Report {
    command: String,
    params: BTreeMap<String, String>,
    results: Vec<(String, String)>,
    verdicts: Vec<CongruenceVerdict>,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            params: BTreeMap::new(),
            results: Vec::new(),
            verdicts: Vec::new(),
        }
    }

    fn param(&mut self, k: &str, v: impl ToString) -> &mut Self {
        self.params.insert(k.to_string(), v.to_string());
        self
    }

    fn result(&mut self, label: impl ToString, value: impl ToString) -> &mut Self {
        self.results.push((label.to_string(), value.to_string()));
        self
    }

    fn failed(&self) -> bool {
        self.verdicts.iter().any(|v| !v.holds)
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut out = String::new();
                for (label, value) in &self.results {
                    out.push_str(&format!("{label}: {value}\n"));
                }
                for v in &self.verdicts {
                    out.push_str(&v.csv_row());
                    out.push('\n');
                }
                out
            }
            Format::Csv => {
                let mut out = String::new();
                for (label, value) in &self.results {
                    out.push_str(&format!("{label},{value}\n"));
                }
                for v in &self.verdicts {
                    out.push_str(&v.csv_row());
                    out.push('\n');
                }
                out
            }
            Format::Json => {
                let results: Vec<_> = self
                    .results
                    .iter()
                    .map(|(l, v)| serde_json::json!({"label": l, "value": v}))
                    .collect();
                let verdicts: Vec<_> = self.verdicts.iter().map(|v| v.json()).collect();
                let doc = serde_json::json!({
                    "command": self.command,
                    "params": self.params,
                    "results": results,
                    "verdicts": verdicts,
                    "version": env!("CARGO_PKG_VERSION"),
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
                s.push('\n');
                s
            }
        }
    }
}

fn parse_primes(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|e| anyhow!("bad prime '{p}': {e}")))
        .collect()
}

fn run_fgl(sub: FglCmd) -> Result<Report> {
    match sub {
        FglCmd::Show { spec, order } => {
            let g = spec.build(order)?;
            let mut r = Report::new("fgl show");
            r.param("group", spec.describe()).param("order", order);
            r.result("F", g.log());
            r.result("G", g.exp());
            r.result(
                "c",
                g.c().iter().map(fmt_rat).collect::<Vec<_>>().join(", "),
            );
            r.result(
                "gamma",
                g.gamma().iter().map(fmt_rat).collect::<Vec<_>>().join(", "),
            );
            Ok(r)
        }
        FglCmd::Axioms { spec, order } => {
            let g = spec.build(order)?;
            let (phi, axioms) = g.group_law(order)?;
            let mut r = Report::new("fgl axioms");
            r.param("group", spec.describe()).param("order", order);
            r.result("Phi", phi);
            r.verdicts.push(CongruenceVerdict {
                name: "axioms".into(),
                params: r.params.clone(),
                holds: axioms.all_pass(),
                applicable: true,
                witness: (!axioms.all_pass()).then(|| axioms.to_string()),
            });
            Ok(r)
        }
        FglCmd::List => {
            let mut r = Report::new("fgl list");
            for entry in catalog_entries() {
                r.result(entry.name(), entry.description());
            }
            Ok(r)
        }
    }
}

fn run_bernoulli(sub: BernoulliCmd) -> Result<Report> {
    match sub {
        BernoulliCmd::Poly { spec, universal, n, alpha } => {
            let alpha = parse_rat(&alpha)?;
            let mut r = Report::new("bernoulli poly");
            r.param("n", n).param("alpha", fmt_rat(&alpha));
            if universal {
                r.param("group", "universal");
                for m in 0..=n {
                    let b = universal_bernoulli(m, &alpha, n.max(1))?;
                    r.result(format!("B_{m}(x)"), b);
                }
            } else {
                r.param("group", spec.describe());
                let g = spec.build(n + 2)?;
                let fam = BernoulliFamily::of_group(&g, n, &alpha)?;
                for (m, b) in fam.polys.iter().enumerate() {
                    r.result(format!("B_{m}(x)"), b);
                }
            }
            Ok(r)
        }
        BernoulliCmd::Numbers { spec, n } => {
            let g = spec.build(n + 2)?;
            let mut r = Report::new("bernoulli numbers");
            r.param("group", spec.describe()).param("n", n);
            for m in 0..=n {
                r.result(
                    format!("B_{m}"),
                    fmt_rat(&bernoulli_of_group(&g, m)?.constant_term()),
                );
            }
            Ok(r)
        }
        BernoulliCmd::Genus { kind, charq, n } => {
            let mut r = Report::new("bernoulli genus");
            r.param("kind", &kind).param("n", n);
            if kind == "s" {
                let q_expr = charq
                    .context("--kind s needs --char with the characteristic series Q(t)")?;
                r.param("char", &q_expr);
                let q = gfexpr::eval_str(&q_expr, n)?;
                for (j, s) in s_sequence(&q, n)?.iter().enumerate() {
                    r.result(format!("s_{j}"), fmt_rat(s));
                }
            } else {
                let kind = GenusKind::parse(&kind)?;
                for m in 0..=n {
                    r.result(format!("P_{m}(x)"), genus_polynomial(kind, m)?);
                }
            }
            Ok(r)
        }
    }
}

fn run_congruence(sub: CongruenceCmd) -> Result<Report> {
    let (name, spec, scan, kind): (&str, Option<GroupSpec>, ScanArgs, Option<String>) = match sub {
        CongruenceCmd::Staudt(s) => ("staudt", None, s, None),
        CongruenceCmd::Kummer(s) => ("kummer", None, s, None),
        CongruenceCmd::Am { spec, scan } => ("am", Some(spec), scan, None),
        CongruenceCmd::Br { spec, scan } => ("br", Some(spec), scan, None),
        CongruenceCmd::Lemma4 { spec, scan } => ("lemma4", Some(spec), scan, None),
        CongruenceCmd::Hb(s) => ("hb", None, s, None),
        CongruenceCmd::Fermat { spec, scan } => ("fermat", Some(spec), scan, None),
        CongruenceCmd::Granville { kind, scan } => ("granville", None, scan, Some(kind)),
    };
    let mut r = Report::new(&format!("congruence {name}"));
    r.param("n_max", scan.n_max)
        .param("h_max", scan.h_max)
        .param("k_max", scan.k_max);
    let group = match &spec {
        Some(s) => {
            r.param("group", s.describe());
            Some(s.build(scan.n_max + 2)?)
        }
        None => None,
    };
    let genus_kind = match &kind {
        Some(k) => {
            r.param("kind", k);
            Some(GenusKind::parse(k)?)
        }
        None => None,
    };
    let scope = ScanScope {
        group,
        n_max: scan.n_max,
        h_max: scan.h_max,
        k_max: scan.k_max,
        primes: parse_primes(&scan.primes)?,
        s_max: scan.s_max,
        genus_kind,
        stop_on_failure: scan.stop_on_failure,
    };
    r.verdicts = verifier(name)?.run(&scope)?;
    Ok(r)
}

fn run_sequence(sub: SequenceCmd) -> Result<Report> {
    match sub {
        SequenceCmd::Numbers { g1, g2, expr, count } => {
            let mut r = Report::new("sequence numbers");
            r.param("count", count);
            let seq = if let Some(expr) = expr {
                r.param("expr", &expr);
                nk_from_expr(&expr, count)?
            } else {
                let g1name = g1.unwrap();
                let g2name = g2.context("--g2 is required with --g1")?;
                r.param("g1", &g1name).param("g2", &g2name);
                let a = catalog(&g1name, count + 1)?;
                let b = catalog(&g2name, count + 1)?;
                nk_from_groups(&a, &b, count)?
            };
            if let Some(ok) = seq.hypotheses_ok {
                r.param("hypotheses", if ok { "pass" } else { "fail" });
                if !ok {
                    r.param("failing_primes", format!("{:?}", seq.failing_primes));
                }
            }
            r.result("terms", seq.display_terms());
            Ok(r)
        }
        SequenceCmd::Polys { g1, g2, expr, n_max } => {
            let mut r = Report::new("sequence polys");
            r.param("n_max", n_max);
            let polys = if let Some(expr) = expr {
                r.param("expr", &expr);
                nk_polynomials_from_expr(&expr, n_max)?
            } else {
                let g1name = g1.unwrap();
                let g2name = g2.context("--g2 is required with --g1")?;
                r.param("g1", &g1name).param("g2", &g2name);
                let a = catalog(&g1name, n_max + 1)?;
                let b = catalog(&g2name, n_max + 1)?;
                nk_polynomials(&a, &b, n_max)?
            };
            for (k, p) in polys.iter().enumerate() {
                r.result(format!("p_{k}(x)"), p);
            }
            Ok(r)
        }
    }
}

fn load_character(path: &PathBuf) -> Result<DirichletCharacter> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read character file {}", path.display()))?;
    Ok(DirichletCharacter::from_json_str(&text)?)
}

fn run_zeta(sub: ZetaCmd) -> Result<Report> {
    match sub {
        ZetaCmd::Value { spec, m, a } => {
            let a = parse_rat(&a)?;
            let g = spec.build(m + 3)?;
            let mut r = Report::new("zeta value");
            r.param("group", spec.describe())
                .param("m", m)
                .param("a", fmt_rat(&a));
            r.result(format!("zeta(-{m}, {})", fmt_rat(&a)), fmt_rat(&zeta_neg(&g, m, &a)?));
            Ok(r)
        }
        ZetaCmd::Th3 { spec, n, h, k, lenient } => {
            let g = spec.build(n + 3)?;
            let mut r = Report::new("zeta th3");
            r.param("group", spec.describe())
                .param("n", n)
                .param("h", h)
                .param("k", k);
            r.verdicts.push(th3_check(&g, n, h, k, !lenient)?);
            Ok(r)
        }
        ZetaCmd::Chi { spec, char_file, n } => {
            let chi = load_character(&char_file)?;
            let g = spec.build(n + 2)?;
            let mut r = Report::new("zeta chi");
            r.param("group", spec.describe())
                .param("modulus", chi.modulus())
                .param("n", n);
            r.result(format!("B_{n},chi"), chi_numbers(&g, &chi, n)?);
            Ok(r)
        }
        ZetaCmd::L { spec, char_file, n } => {
            let chi = load_character(&char_file)?;
            let g = spec.build(n + 3)?;
            let mut r = Report::new("zeta l");
            r.param("group", spec.describe())
                .param("modulus", chi.modulus())
                .param("n", n);
            r.result(format!("L(1-{n})"), l_value_neg(&g, &chi, n)?);
            Ok(r)
        }
        ZetaCmd::Th4 { spec, char_file, n, lenient } => {
            let chi = load_character(&char_file)?;
            let g = spec.build(n + 3)?;
            let mut r = Report::new("zeta th4");
            r.param("group", spec.describe())
                .param("modulus", chi.modulus())
                .param("n", n);
            r.verdicts.push(th4_check(&g, &chi, n, !lenient)?);
            Ok(r)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let report = match cli.cmd {
        Cmd::Fgl { sub } => run_fgl(sub)?,
        Cmd::Bernoulli { sub } => run_bernoulli(sub)?,
        Cmd::Congruence { sub } => run_congruence(sub)?,
        Cmd::Sequence { sub } => run_sequence(sub)?,
        Cmd::Zeta { sub } => run_zeta(sub)?,
    };
    let rendered = report.render(cli.format);
    match &cli.output {
        Some(path) => std::fs::write(path, rendered)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(if report.failed() { 2 } else { 0 })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
