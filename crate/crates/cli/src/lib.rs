//! Command-line front end for `affsat`.
//!
//! [`run`] parses an argument vector, executes one subcommand and returns the
//! process exit code: 0 when the output is consistent, 1 when a counterexample
//! was found, 2 on input or validation errors.

use std::io::Write;

use affsat::cone::{cone_membership, saturation_scan, Verdict};
use affsat::delta_max::{delta_max_dominant_set, delta_max_shift, n_k_closed_form};
use affsat::multiplicity::DEFAULT_CACHE_CAPACITY;
use affsat::schubert::{
    cup_coefficient, deformed_product_coefficient, generate_conjecture_inequalities,
    schubert_word, Parabolic,
};
use affsat::selftest;
use affsat::tensor::{coset_central_charge, decompose_tensor};
use affsat::weight::{fmt_rational_pq, parse_rational};
use affsat::{Algebra, Error, Oracle, Weight};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use serde::{Deserialize, Serialize};

/// Environment variable overriding the memo cache capacity.
pub const CACHE_ENV: &str = "AFFSAT_CACHE_CAPACITY";

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Table,
}

#[derive(Parser, Debug)]
#[command(name = "affsat", version, about = "Tensor products and saturated tensor cones for A1^(1) and A2^(2)")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct AlgebraArg {
    /// a1_1 or a2_2.
    #[arg(long, value_parser = parse_algebra)]
    pub algebra: Algebra,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decompose L(lhs) ⊗ L(rhs) into δ-strings of irreducibles.
    Decompose {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        /// δ-levels below the top of the product.
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// δ-maximal weights of L(weight).
    DeltaMax {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        weight: String,
        /// Range of k in weight + kα.
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// Decide (λ, μ, ν) ∈ Γ₂ and audit the inequality description.
    ConeCheck {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        /// Longest Weyl word used in the audit.
        #[arg(long, default_value_t = 10)]
        audit_len: u32,
    },
    /// Check saturation factors over a grid of member triples.
    SaturationScan {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Largest level of λ and μ, e.g. "3/2".
        #[arg(long, value_parser = parse_rational_arg)]
        level_bound: Rational64,
        /// Comma-separated factors. Defaults to 2,3 for a1_1 and 4 for a2_2.
        #[arg(long, value_delimiter = ',')]
        d0: Vec<i64>,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        /// Largest ñ checked on each δ-line (defaults to depth).
        #[arg(long)]
        coord_bound: Option<i64>,
    },
    /// Cup and deformed products of Schubert classes of A1^(1)/P.
    Schubert {
        #[arg(long, value_parser = parse_parabolic)]
        parabolic: Parabolic,
        #[arg(long)]
        u: u32,
        #[arg(long)]
        v: u32,
        /// Also report the τ-exponent and the ⊙₀ coefficient.
        #[arg(long)]
        deformed: bool,
    },
    /// Inequalities with ⊙₀-coefficient one, optionally evaluated on a triple.
    Inequalities {
        #[arg(long, default_value_t = 6)]
        len_bound: u32,
        /// "λ;μ;ν" in A1^(1) weight syntax.
        #[arg(long)]
        triple: Option<String>,
    },
    /// Run the acceptance criteria.
    Selftest,
}

fn parse_algebra(s: &str) -> Result<Algebra, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_parabolic(s: &str) -> Result<Parabolic, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_rational_arg(s: &str) -> Result<Rational64, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Resolved configuration for one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub algebra: Option<Algebra>,
    pub depth: usize,
    /// `|k|` range for δ-maximal listings.
    pub window: i64,
    pub audit_len: u32,
    pub d0_list: Vec<i64>,
    pub format: Format,
    pub jobs: usize,
    pub cache_capacity: usize,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli, cache_env: Option<&str>) -> Result<Self, String> {
        let cache_capacity = match cache_env {
            None => DEFAULT_CACHE_CAPACITY,
            Some(s) => s
                .trim()
                .parse()
                .map_err(|_| format!("{CACHE_ENV} must be a nonnegative integer, got '{s}'"))?,
        };
        let mut cfg = RunConfig {
            algebra: None,
            depth: 1,
            window: 1,
            audit_len: 10,
            d0_list: Vec::new(),
            format: cli.format,
            jobs: cli.jobs,
            cache_capacity,
        };
        match &cli.command {
            Command::Decompose { algebra, depth, .. } | Command::DeltaMax { algebra, depth, .. } => {
                cfg.algebra = Some(algebra.algebra);
                cfg.depth = *depth;
                cfg.window = *depth as i64;
            }
            Command::ConeCheck { algebra, audit_len, .. } => {
                cfg.algebra = Some(algebra.algebra);
                cfg.audit_len = *audit_len;
            }
            Command::SaturationScan {
                algebra,
                d0,
                depth,
                coord_bound,
                ..
            } => {
                cfg.algebra = Some(algebra.algebra);
                cfg.depth = *depth;
                cfg.window = coord_bound.unwrap_or(*depth as i64);
                cfg.d0_list = if d0.is_empty() {
                    match algebra.algebra {
                        Algebra::A11 => vec![2, 3],
                        Algebra::A22 => vec![4],
                    }
                } else {
                    d0.clone()
                };
            }
            Command::Schubert { .. } | Command::Selftest => {}
            Command::Inequalities { len_bound, .. } => cfg.audit_len = *len_bound,
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.depth < 1 {
            return Err("depth must be at least 1".into());
        }
        if self.window < 0 {
            return Err("window must be nonnegative".into());
        }
        if let Some(d) = self.d0_list.iter().find(|&&d| d < 1) {
            return Err(format!("saturation factors must be positive, got {d}"));
        }
        Ok(())
    }

    fn oracle(&self, algebra: Algebra) -> Oracle<i64> {
        Oracle::with_capacity(algebra, self.cache_capacity)
    }
}

// ---- JSON documents -------------------------------------------------------

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct ComponentOut {
    pub component: String,
    pub top_delta: i64,
    pub string: Vec<i64>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct DecomposeOut {
    pub algebra: String,
    pub lhs: String,
    pub rhs: String,
    pub depth: usize,
    pub components: Vec<ComponentOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub central_charge: Option<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct DeltaLineOut {
    pub k: i64,
    /// `None` when no δ-shift of `Λ + kα` is a weight.
    pub shift: Option<i64>,
    pub weight: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<i64>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct DeltaMaxOut {
    pub algebra: String,
    pub weight: String,
    pub dominant: Vec<String>,
    pub lines: Vec<DeltaLineOut>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct InequalityOut {
    pub word: String,
    pub index: u8,
    pub family: String,
    pub value: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct ConeOut {
    pub algebra: String,
    pub lambda: String,
    pub mu: String,
    pub nu: String,
    /// "member", "non-member" or "parity-failure".
    pub verdict: String,
    pub n1: Option<i64>,
    pub n2: Option<i64>,
    pub n_tilde: Option<i64>,
    pub consistent: bool,
    pub audit_len: u32,
    pub audited: usize,
    pub violations: Vec<InequalityOut>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct CounterexampleOut {
    pub lambda: String,
    pub mu: String,
    pub nu: String,
    pub d0: i64,
    pub n_tilde: i64,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct SaturationOut {
    pub algebra: String,
    pub level_bound: String,
    pub d0: Vec<i64>,
    pub depth: usize,
    pub coord_bound: i64,
    pub checked: usize,
    pub skipped: usize,
    pub beyond_depth: usize,
    pub counterexamples: Vec<CounterexampleOut>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct SchubertOut {
    pub parabolic: String,
    pub u: String,
    pub v: String,
    pub product: String,
    pub coefficient: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponent: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau_zero_coefficient: Option<u64>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct ConjectureOut {
    pub parabolic: String,
    pub w1: u32,
    pub w2: u32,
    pub v: u32,
    pub text: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct InequalitiesOut {
    pub len_bound: u32,
    pub inequalities: Vec<ConjectureOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub member: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violated: Option<usize>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct CriterionOut {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub budget_seconds: u64,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SelftestOut {
    pub criteria: Vec<CriterionOut>,
}

// ---- commands ---------------------------------------------------------------

struct Output {
    text: String,
    code: i32,
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

fn weight(algebra: Algebra, text: &str) -> Result<Weight, Error> {
    Weight::parse(algebra, text)
}

fn decompose(cfg: &RunConfig, algebra: Algebra, lhs: &str, rhs: &str) -> Result<Output, Error> {
    let (lhs, rhs) = (weight(algebra, lhs)?, weight(algebra, rhs)?);
    let oracle = cfg.oracle(algebra);
    let d = decompose_tensor(&oracle, &lhs, &rhs, cfg.depth)?;
    let central_charge = match algebra {
        Algebra::A11 => Some(fmt_rational_pq(coset_central_charge(algebra, lhs.level(), rhs.level())?)),
        Algebra::A22 => None,
    };
    let doc = DecomposeOut {
        algebra: algebra.to_string(),
        lhs: lhs.format(algebra),
        rhs: rhs.format(algebra),
        depth: cfg.depth,
        components: d
            .components
            .iter()
            .map(|c| ComponentOut {
                component: c.highest.format(algebra),
                top_delta: c.string.top,
                string: c.string.coeffs.clone(),
            })
            .collect(),
        central_charge,
    };
    let text = match cfg.format {
        Format::Json => json(&doc),
        Format::Table => {
            let mut t = format!("L({}) x L({}) down to delta depth {}\n", doc.lhs, doc.rhs, doc.depth);
            if let Some(c) = &doc.central_charge {
                t += &format!("central charge {c}\n");
            }
            let w = doc.components.iter().map(|c| c.component.len()).max().unwrap_or(9).max(9);
            t += &format!("{:<w$}  {:>8}  string\n", "component", "topDelta");
            for c in &doc.components {
                let s: Vec<String> = c.string.iter().map(|x| x.to_string()).collect();
                t += &format!("{:<w$}  {:>8}  [{}] (truncated)\n", c.component, c.top_delta, s.join(", "));
            }
            t
        }
    };
    Ok(Output { text, code: EXIT_OK })
}

fn delta_max(cfg: &RunConfig, algebra: Algebra, text: &str) -> Result<Output, Error> {
    let lambda = weight(algebra, text)?;
    let set = delta_max_dominant_set(algebra, &lambda)?;
    let mut lines = Vec::new();
    for k in -cfg.window..=cfg.window {
        let gamma = lambda + Weight::ALPHA * k;
        let shift = delta_max_shift(algebra, &lambda, &gamma)?;
        let closed_form = match algebra {
            Algebra::A11 => Some(n_k_closed_form(algebra, &lambda, k)?),
            Algebra::A22 => None,
        };
        lines.push(DeltaLineOut {
            k,
            shift,
            weight: shift.map(|n| gamma.shift_delta(n).format(algebra)),
            closed_form,
        });
    }
    let doc = DeltaMaxOut {
        algebra: algebra.to_string(),
        weight: lambda.format(algebra),
        dominant: set.members.iter().map(|m| m.format(algebra)).collect(),
        lines,
    };
    let text = match cfg.format {
        Format::Json => json(&doc),
        Format::Table => {
            let mut t = format!("dominant delta-maximal weights of L({})\n", doc.weight);
            for m in &doc.dominant {
                t += &format!("  {m}\n");
            }
            t += &format!("{:>4}  {:>6}  weight\n", "k", "shift");
            for l in &doc.lines {
                let shift = l.shift.map_or("-".to_string(), |n| n.to_string());
                t += &format!("{:>4}  {:>6}  {}\n", l.k, shift, l.weight.as_deref().unwrap_or("none"));
            }
            t
        }
    };
    Ok(Output { text, code: EXIT_OK })
}

fn cone_check(cfg: &RunConfig, algebra: Algebra, l: &str, m: &str, n: &str) -> Result<Output, Error> {
    let (l, m, n) = (weight(algebra, l)?, weight(algebra, m)?, weight(algebra, n)?);
    let r = cone_membership(algebra, &l, &m, &n, cfg.audit_len)?;
    let doc = ConeOut {
        algebra: algebra.to_string(),
        lambda: l.format(algebra),
        mu: m.format(algebra),
        nu: n.format(algebra),
        verdict: match r.verdict {
            Verdict::Member => "member",
            Verdict::NonMember => "non-member",
            Verdict::ParityFailure => "parity-failure",
        }
        .into(),
        n1: r.n1,
        n2: r.n2,
        n_tilde: r.n_tilde,
        consistent: r.consistent(),
        audit_len: cfg.audit_len,
        audited: r.audit.len(),
        violations: r
            .violations()
            .map(|a| InequalityOut {
                word: a.w.to_string(),
                index: a.i,
                family: a.family.to_string(),
                value: fmt_rational_pq(a.value),
            })
            .collect(),
    };
    let code = if doc.consistent { EXIT_OK } else { EXIT_COUNTEREXAMPLE };
    let text = match cfg.format {
        Format::Json => json(&doc),
        Format::Table => {
            let opt = |x: Option<i64>| x.map_or("-".to_string(), |v| v.to_string());
            let mut t = format!("({}; {}; {}): {}\n", doc.lambda, doc.mu, doc.nu, doc.verdict);
            t += &format!("n1 {}  n2 {}  n~ {}\n", opt(doc.n1), opt(doc.n2), opt(doc.n_tilde));
            t += &format!(
                "{} inequalities audited (words up to length {}), {} violated\n",
                doc.audited,
                doc.audit_len,
                doc.violations.len()
            );
            for v in &doc.violations {
                t += &format!("  {} {} i={} value {}\n", v.family, v.word, v.index, v.value);
            }
            if !doc.consistent {
                t += "INCONSISTENT: dominance verdict disagrees with n~\n";
            }
            t
        }
    };
    Ok(Output { text, code })
}

fn scan(cfg: &RunConfig, algebra: Algebra, level_bound: Rational64) -> Result<Output, Error> {
    let oracle = cfg.oracle(algebra);
    let r = saturation_scan(&oracle, level_bound, cfg.window, &cfg.d0_list, cfg.depth)?;
    let mut bad = r.counterexamples.clone();
    bad.sort();
    let doc = SaturationOut {
        algebra: algebra.to_string(),
        level_bound: fmt_rational_pq(level_bound),
        d0: cfg.d0_list.clone(),
        depth: cfg.depth,
        coord_bound: cfg.window,
        checked: r.checked,
        skipped: r.skipped,
        beyond_depth: r.beyond_depth,
        counterexamples: bad
            .iter()
            .map(|c| CounterexampleOut {
                lambda: c.lambda.format(algebra),
                mu: c.mu.format(algebra),
                nu: c.nu.format(algebra),
                d0: c.d0,
                n_tilde: c.n_tilde,
            })
            .collect(),
    };
    let code = if doc.counterexamples.is_empty() { EXIT_OK } else { EXIT_COUNTEREXAMPLE };
    let text = match cfg.format {
        Format::Json => json(&doc),
        Format::Table => {
            let d0: Vec<String> = doc.d0.iter().map(|d| d.to_string()).collect();
            let mut t = format!(
                "{} level <= {}, d0 {}: {} checked, {} skipped, {} lines beyond depth {}, {} counterexamples\n",
                doc.algebra,
                doc.level_bound,
                d0.join(","),
                doc.checked,
                doc.skipped,
                doc.beyond_depth,
                doc.depth,
                doc.counterexamples.len()
            );
            for c in &doc.counterexamples {
                t += &format!("  d0={} n~={}  ({}; {}; {})\n", c.d0, c.n_tilde, c.lambda, c.mu, c.nu);
            }
            t
        }
    };
    Ok(Output { text, code })
}

fn schubert(cfg: &RunConfig, p: Parabolic, u: u32, v: u32, deformed: bool) -> Result<Output, Error> {
    let coefficient = u64::try_from(cup_coefficient(p, u, v))
        .map_err(|_| Error::Arithmetic(format!("C({}, {u}) exceeds 64 bits", u + v)))?;
    let term = deformed.then(|| deformed_product_coefficient(p, u, v));
    let doc = SchubertOut {
        parabolic: p.to_string(),
        u: schubert_word(p, u).to_string(),
        v: schubert_word(p, v).to_string(),
        product: schubert_word(p, u + v).to_string(),
        coefficient,
        exponent: term.map(|t| t.exponent),
        tau_zero_coefficient: term.map(|t| t.at_tau_zero() as u64),
    };
    let text = match cfg.format {
        Format::Json => json(&doc),
        Format::Table => {
            let mut t = format!(
                "{}: e^{} . e^{} = {} e^{}\n",
                doc.parabolic, doc.u, doc.v, doc.coefficient, doc.product
            );
            if let (Some(e), Some(c0)) = (doc.exponent, doc.tau_zero_coefficient) {
                t += &format!("deformed: tau^{e}, coefficient at tau = 0: {c0}\n");
            }
            t
        }
    };
    Ok(Output { text, code: EXIT_OK })
}

fn inequalities(cfg: &RunConfig, len_bound: u32, triple: Option<&str>) -> Result<Output, Error> {
    let alg = Algebra::A11;
    let parsed = triple
        .map(|t| {
            let parts: Vec<&str> = t.split(';').collect();
            if parts.len() != 3 {
                return Err(Error::Parse(format!("expected 'lambda;mu;nu', got '{t}'")));
            }
            Ok((weight(alg, parts[0])?, weight(alg, parts[1])?, weight(alg, parts[2])?))
        })
        .transpose()?;
    let member = parsed
        .map(|(l, m, n)| cone_membership(alg, &l, &m, &n, 0).map(|r| r.is_member()))
        .transpose()?;
    let gen = generate_conjecture_inequalities(len_bound);
    let mut violated = 0;
    let inequalities = gen
        .iter()
        .map(|g| {
            let value = parsed.map(|(l, m, n)| g.evaluate(&l, &m, &n));
            if value.is_some_and(|v| v < Rational64::from(0)) {
                violated += 1;
            }
            ConjectureOut {
                parabolic: g.parabolic.to_string(),
                w1: g.w1,
                w2: g.w2,
                v: g.v,
                text: g.to_string(),
                value: value.map(fmt_rational_pq),
            }
        })
        .collect();
    let doc = InequalitiesOut {
        len_bound,
        inequalities,
        member,
        violated: parsed.map(|_| violated),
    };
    // a member violating a coefficient-one inequality refutes the description
    let code = if member == Some(true) && violated > 0 {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_OK
    };
    let text = match cfg.format {
        Format::Json => json(&doc),
        Format::Table => {
            let mut t = String::new();
            for g in &doc.inequalities {
                match &g.value {
                    Some(v) => t += &format!("{}   [{v}]\n", g.text),
                    None => t += &format!("{}\n", g.text),
                }
            }
            if let (Some(m), Some(v)) = (doc.member, doc.violated) {
                t += &format!("{} inequalities, triple is {}, {v} violated\n", doc.inequalities.len(), if m { "a member" } else { "not a member" });
            }
            t
        }
    };
    Ok(Output { text, code })
}

fn run_selftest(cfg: &RunConfig) -> Output {
    let outcomes = selftest::run_all();
    let code = if outcomes.iter().all(|o| o.passed) {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    };
    let text = match cfg.format {
        Format::Json => json(&SelftestOut {
            criteria: outcomes
                .iter()
                .map(|o| CriterionOut {
                    id: o.id,
                    name: o.name.to_string(),
                    passed: o.passed,
                    detail: o.detail.clone(),
                    budget_seconds: o.budget.as_secs(),
                })
                .collect(),
        }),
        Format::Table => outcomes.iter().map(|o| format!("{o}\n")).collect(),
    };
    Output { text, code }
}

fn execute(cli: &Cli, cfg: &RunConfig) -> Result<Output, Error> {
    match &cli.command {
        Command::Decompose { algebra, lhs, rhs, .. } => decompose(cfg, algebra.algebra, lhs, rhs),
        Command::DeltaMax { algebra, weight, .. } => delta_max(cfg, algebra.algebra, weight),
        Command::ConeCheck {
            algebra, lambda, mu, nu, ..
        } => cone_check(cfg, algebra.algebra, lambda, mu, nu),
        Command::SaturationScan {
            algebra, level_bound, ..
        } => scan(cfg, algebra.algebra, *level_bound),
        Command::Schubert {
            parabolic,
            u,
            v,
            deformed,
        } => schubert(cfg, *parabolic, *u, *v, *deformed),
        Command::Inequalities { len_bound, triple } => inequalities(cfg, *len_bound, triple.as_deref()),
        Command::Selftest => Ok(run_selftest(cfg)),
    }
}

/// Runs one command line, writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(argv: I, cache_env: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let cfg = match RunConfig::from_cli(&cli, cache_env) {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_INPUT;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    match pool.install(|| execute(&cli, &cfg)) {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}
