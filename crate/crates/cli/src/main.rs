//! Command-line front end for the `liouville` library.
//!
//! Every subcommand adapts one library operation. Data goes to stdout (or
//! `--out`), diagnostics to stderr. Exit codes: 0 success, 1 negative
//! verdict or library error, 2 usage error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use liouville::classical::{self, NamedFunction};
use liouville::factorization::{self, FactorizationClaim, Verdict};
use liouville::lattice::{self, DivisorPoset};
use liouville::{io, ArithFunc, DivisionVerdict, Domain, Error, Rank};
use serde_json::{json, Value};

const DEFAULT_BOUND: usize = 1000;

#[derive(Parser)]
#[command(
    name = "liouville",
    version,
    about = "Exact Dirichlet-convolution rings and divisor lattices"
)]
struct Cli {
    /// Truncation bound N. Defaults to the bound of any file operand, else 1000.
    #[arg(long, global = true)]
    bound: Option<usize>,
    /// Coefficient domain. Defaults to the domain of any file operand, else Q.
    #[arg(long, global = true)]
    domain: Option<Domain>,
    /// Function file used when a command's operand is omitted.
    #[arg(long = "in", global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Write output here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

/// Function operands are a built-in name (`mobius`, `sigma_2`, ...),
/// `nu_<r>`, `omega`, or a path to a `.json` or `.csv` function file.
#[derive(Subcommand)]
enum Command {
    /// Build a named function at the bound.
    FnBuild { name: String },
    /// Print a function, or its values at the given indices.
    FnEval {
        #[arg(long = "fn", value_name = "FUNC")]
        func: Option<String>,
        indices: Vec<usize>,
    },
    /// Pointwise sum.
    Add {
        #[arg(long)]
        lhs: Option<String>,
        #[arg(long)]
        rhs: String,
    },
    /// Dirichlet convolution.
    Conv {
        #[arg(long)]
        lhs: Option<String>,
        #[arg(long)]
        rhs: String,
    },
    /// Convolution inverse of a unit.
    Inv { func: Option<String> },
    /// Exact division num = den ∗ q.
    Div {
        #[arg(long)]
        num: Option<String>,
        #[arg(long)]
        den: String,
    },
    /// Least index with a nonzero value.
    Rank { func: Option<String> },
    /// Whether the function is a unit.
    Unit { func: Option<String> },
    /// Whether each function divides the other.
    Associates {
        #[arg(long)]
        lhs: Option<String>,
        #[arg(long)]
        rhs: String,
    },
    /// Irreducibility certificate.
    Certify { func: Option<String> },
    /// Check a claimed factorization unit ∗ factor ∗ ⋯ ∗ factor.
    VerifyFact {
        #[arg(long)]
        target: Option<String>,
        #[arg(long, default_value = "epsilon")]
        unit: String,
        #[arg(long = "factor", required = true)]
        factors: Vec<String>,
    },
    /// Check the classical convolution identities at the bound.
    IdentitySuite,
    /// Lattice properties of the divisors of A.
    LatticeReport { a: u64 },
    /// Minimum chain partition and a maximum antichain.
    LatticeChains { a: u64 },
    /// Hasse diagram in Graphviz format.
    LatticeDot {
        a: u64,
        /// Color nodes by chain.
        #[arg(long)]
        chains: bool,
    },
    /// Irreducible factors of N by descending divisor chains.
    Euclid { n: u64 },
    /// Check p | ab ⇒ p | a or p | b for all 1 ≤ a, b ≤ MAX.
    PrimeCheck {
        p: u64,
        #[arg(long, default_value_t = 200)]
        max: u64,
    },
}

/// Rendered output plus whether the verdict was positive.
struct Output {
    body: String,
    ok: bool,
}

impl Output {
    fn ok(body: String) -> Output {
        Output { body, ok: true }
    }
}

enum Failure {
    Usage(String),
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Failure {
        Failure::Runtime(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Runtime(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|out| emit(&cli, &out).map(|()| out.ok)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => Cli::command()
            .error(ErrorKind::ArgumentConflict, msg)
            .exit(),
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn emit(cli: &Cli, out: &Output) -> Result<(), Failure> {
    let mut body = out.body.clone();
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &cli.out {
        Some(path) => {
            fs::write(path, body).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{body}"),
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let ctx = Env::new(cli);
    match &cli.command {
        Command::FnBuild { name } => {
            let [f] = ctx.resolve([Some(name.as_str())])?;
            ctx.function(&f)
        }
        Command::FnEval { func, indices } => {
            let [f] = ctx.resolve([func.as_deref()])?;
            if indices.is_empty() {
                return ctx.function(&f);
            }
            let mut pairs = Vec::with_capacity(indices.len());
            for &n in indices {
                let v = f.at(n).ok_or(Error::IndexOutOfRange {
                    index: n,
                    bound: f.bound(),
                })?;
                pairs.push((n, v.to_string()));
            }
            ctx.render(
                || {
                    json!(pairs
                        .iter()
                        .map(|(n, v)| json!({"index": n, "value": v}))
                        .collect::<Vec<_>>())
                },
                || Ok(pairs.iter().map(|(n, v)| format!("{n},{v}\n")).collect()),
                || pairs.iter().map(|(n, v)| format!("{n}: {v}\n")).collect(),
            )
        }
        Command::Add { lhs, rhs } => {
            let [a, b] = ctx.resolve([lhs.as_deref(), Some(rhs)])?;
            ctx.function(&a.add(&b)?)
        }
        Command::Conv { lhs, rhs } => {
            let [a, b] = ctx.resolve([lhs.as_deref(), Some(rhs)])?;
            ctx.function(&a.convolve(&b)?)
        }
        Command::Inv { func } => {
            let [f] = ctx.resolve([func.as_deref()])?;
            ctx.function(&f.inverse()?)
        }
        Command::Div { num, den } => {
            let [a, b] = ctx.resolve([num.as_deref(), Some(den)])?;
            match a.divide(&b)? {
                DivisionVerdict::Quotient(q) => ctx.function(&q),
                DivisionVerdict::NotDivisibleAtBound { witness } => {
                    let out = ctx.render(
                        || json!({"verdict": "not_divisible_at_bound", "witness": witness}),
                        || {
                            Err(Failure::Usage(
                                "csv output needs a function; this verdict has none".into(),
                            ))
                        },
                        || format!("NotDivisibleAtBound({witness})"),
                    )?;
                    Ok(Output { ok: false, ..out })
                }
            }
        }
        Command::Rank { func } => {
            let [f] = ctx.resolve([func.as_deref()])?;
            let rank = f.rank();
            ctx.render(
                || match &rank {
                    Rank::Detected { index, leading } => {
                        json!({"rank": index, "leading": leading.to_string()})
                    }
                    Rank::NotVisibleAtBound => json!({"rank": null, "bound": f.bound()}),
                },
                || Err(Failure::Usage("csv output is for functions".into())),
                || match &rank {
                    Rank::Detected { index, leading } => format!("Detected({index}, {leading})"),
                    Rank::NotVisibleAtBound => "NotVisibleAtBound".into(),
                },
            )
        }
        Command::Unit { func } => {
            let [f] = ctx.resolve([func.as_deref()])?;
            ctx.predicate("unit", f.is_unit())
        }
        Command::Associates { lhs, rhs } => {
            let [a, b] = ctx.resolve([lhs.as_deref(), Some(rhs)])?;
            ctx.predicate("associates", a.are_associates(&b)?)
        }
        Command::Certify { func } => {
            let [f] = ctx.resolve([func.as_deref()])?;
            let verdict = factorization::certify(&f);
            let report = verdict.report();
            ctx.render(
                || serde_json::to_value(&report).expect("report serializes"),
                || Err(Failure::Usage("csv output is for functions".into())),
                || verdict_text(&verdict),
            )
        }
        Command::VerifyFact {
            target,
            unit,
            factors,
        } => {
            let specs: Vec<Option<&str>> = [target.as_deref(), Some(unit.as_str())]
                .into_iter()
                .chain(factors.iter().map(|s| Some(s.as_str())))
                .collect();
            let mut parts = ctx.resolve_many(&specs)?.into_iter();
            let alpha = parts.next().expect("target resolved");
            let claim = FactorizationClaim {
                unit_part: parts.next().expect("unit resolved"),
                irreducibles: parts.collect(),
            };
            let report = factorization::verify_factorization(&alpha, &claim)?;
            let passed = report.passed();
            let out = ctx.render(
                || {
                    let mut v = serde_json::to_value(&report).expect("report serializes");
                    v["passed"] = json!(passed);
                    v
                },
                || Err(Failure::Usage("csv output is for functions".into())),
                || {
                    let mut s = format!("unit_ok: {}\n", report.unit_ok);
                    for (i, status) in report.factors.iter().enumerate() {
                        let status = match status {
                            factorization::FactorStatus::Certified { reason } => {
                                format!("certified {reason}")
                            }
                            factorization::FactorStatus::Unverified { .. } => "unverified".into(),
                        };
                        s.push_str(&format!("factor {}: {status}\n", i + 1));
                    }
                    s.push_str(&format!("product_matches: {}\n", report.product_matches));
                    if let Some(i) = report.first_mismatch {
                        s.push_str(&format!("first_mismatch: {i}\n"));
                    }
                    s.push_str(&format!("passed: {passed}"));
                    s
                },
            )?;
            Ok(Output { ok: passed, ..out })
        }
        Command::IdentitySuite => {
            let outcomes = classical::identity_suite(ctx.bound.unwrap_or(DEFAULT_BOUND))?;
            let all = outcomes.iter().all(|o| o.holds);
            let out = ctx.render(
                || serde_json::to_value(&outcomes).expect("outcomes serialize"),
                || Err(Failure::Usage("csv output is for functions".into())),
                || {
                    outcomes
                        .iter()
                        .map(|o| match o.first_failure {
                            None => format!("pass  {}\n", o.formula),
                            Some(i) => format!("FAIL  {}  first failure at {i}\n", o.formula),
                        })
                        .collect()
                },
            )?;
            Ok(Output { ok: all, ..out })
        }
        Command::LatticeReport { a } => {
            let poset = lattice::co_ideal(*a)?;
            let report = poset.report();
            ctx.render_or_dot(
                &poset,
                || serde_json::to_value(&report).expect("report serializes"),
                || {
                    format!(
                        "a: {}\nelements: {}\natoms: {}\nwidth: {}\nchains: {}\nboolean: {}\ndistributive: {}\ncomplemented: {}",
                        report.a,
                        join(&report.elements),
                        join(&report.atoms),
                        report.width,
                        report.chains.iter().map(|c| join(c)).collect::<Vec<_>>().join("; "),
                        report.boolean,
                        report.distributive,
                        report.complemented,
                    )
                },
            )
        }
        Command::LatticeChains { a } => {
            let poset = lattice::co_ideal(*a)?;
            let cover = lattice::chain_cover(&poset);
            ctx.render_or_dot(
                &poset,
                || json!({"a": a, "width": cover.width(), "chains": cover.chains, "antichain": cover.antichain}),
                || {
                    let mut s = format!("width: {}\n", cover.width());
                    for chain in &cover.chains {
                        s.push_str(&format!("chain: {}\n", join(chain)));
                    }
                    s.push_str(&format!("antichain: {}", join(&cover.antichain)));
                    s
                },
            )
        }
        Command::LatticeDot { a, chains } => {
            let poset = lattice::co_ideal(*a)?;
            match ctx.format {
                Format::Dot | Format::Text => {}
                _ => return Err(Failure::Usage("lattice-dot only writes dot".into())),
            }
            let cover = chains.then(|| lattice::chain_cover(&poset));
            Ok(Output::ok(lattice::to_dot(&poset, cover.as_ref())))
        }
        Command::Euclid { n } => {
            let factors = lattice::euclid_factorization(*n)?;
            ctx.render(
                || json!({"n": n, "factors": factors}),
                || Err(Failure::Usage("csv output is for functions".into())),
                || join(&factors),
            )
        }
        Command::PrimeCheck { p, max } => {
            let max = *max;
            let pairs = (1..=max).flat_map(|a| (1..=max).map(move |b| (a, b)));
            let counterexample = lattice::prime_property_counterexample(*p, pairs);
            let holds = *p != 0 && counterexample.is_none();
            let out = ctx.render(
                || json!({"p": p, "max": max, "holds": holds, "counterexample": counterexample}),
                || Err(Failure::Usage("csv output is for functions".into())),
                || match counterexample {
                    Some((a, b)) => format!("fails: {p} | {a}·{b} but divides neither"),
                    None => format!("holds: {holds}"),
                },
            )?;
            Ok(Output { ok: holds, ..out })
        }
    }
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Zero => "Zero".into(),
        Verdict::Unit => "Unit".into(),
        Verdict::Irreducible(reason) => format!("Irreducible({reason:?})"),
        Verdict::Reducible(b, c) => format!("Reducible({b}, {c})"),
        Verdict::Unknown => "Unknown".into(),
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Global flags plus operand resolution.
struct Env<'a> {
    bound: Option<usize>,
    domain: Option<Domain>,
    input: Option<&'a Path>,
    format: Format,
}

enum Operand {
    Named(NamedFunction),
    Nu(usize),
    Omega,
    File(ArithFunc),
}

impl<'a> Env<'a> {
    fn new(cli: &'a Cli) -> Self {
        Env {
            bound: cli.bound,
            domain: cli.domain,
            input: cli.input.as_deref(),
            format: cli.format,
        }
    }

    fn resolve<const K: usize>(&self, specs: [Option<&str>; K]) -> Result<[ArithFunc; K], Failure> {
        let v = self.resolve_many(&specs)?;
        Ok(v.try_into().unwrap_or_else(|_| unreachable!()))
    }

    /// Files are parsed first so that built-ins can adopt their bound and
    /// domain when the flags are absent. Explicit flags win: files are
    /// restricted to `--bound` and converted to `--domain`.
    fn resolve_many(&self, specs: &[Option<&str>]) -> Result<Vec<ArithFunc>, Failure> {
        let operands = specs
            .iter()
            .map(|spec| match spec {
                Some(s) => parse_operand(s, self.domain),
                None => match self.input {
                    Some(path) => load_file(path, self.domain).map(Operand::File),
                    None => Err(Failure::Usage(
                        "missing function operand (give one or use --in)".into(),
                    )),
                },
            })
            .collect::<Result<Vec<_>, _>>()?;
        let files = || {
            operands.iter().filter_map(|o| match o {
                Operand::File(f) => Some(f),
                _ => None,
            })
        };
        let bound = self
            .bound
            .or_else(|| files().map(ArithFunc::bound).min())
            .unwrap_or(DEFAULT_BOUND);
        let domain = self
            .domain
            .or_else(|| files().next().map(ArithFunc::domain))
            .unwrap_or(Domain::Rational);
        operands
            .into_iter()
            .map(|o| {
                Ok(match o {
                    Operand::Named(name) => classical::build_in(name, bound, domain)?,
                    Operand::Nu(r) => ArithFunc::nu(r, bound, domain)?,
                    Operand::Omega => ArithFunc::omega(bound, domain)?,
                    Operand::File(f) => f.restrict(bound)?.to_domain(domain)?,
                })
            })
            .collect()
    }

    fn render(
        &self,
        json: impl FnOnce() -> Value,
        csv: impl FnOnce() -> Result<String, Failure>,
        text: impl FnOnce() -> String,
    ) -> Result<Output, Failure> {
        Ok(Output::ok(match self.format {
            Format::Json => serde_json::to_string_pretty(&json()).expect("json value serializes"),
            Format::Csv => csv()?,
            Format::Text => text(),
            Format::Dot => {
                return Err(Failure::Usage(
                    "dot output is only for lattice commands".into(),
                ))
            }
        }))
    }

    fn render_or_dot(
        &self,
        poset: &DivisorPoset,
        json: impl FnOnce() -> Value,
        text: impl FnOnce() -> String,
    ) -> Result<Output, Failure> {
        if self.format == Format::Dot {
            let cover = lattice::chain_cover(poset);
            return Ok(Output::ok(lattice::to_dot(poset, Some(&cover))));
        }
        self.render(
            json,
            || Err(Failure::Usage("csv output is for functions".into())),
            text,
        )
    }

    fn function(&self, f: &ArithFunc) -> Result<Output, Failure> {
        self.render(
            || serde_json::from_str(&io::to_json(f)).expect("function json parses"),
            || Ok(io::to_csv(f)),
            || f.to_string(),
        )
    }

    fn predicate(&self, key: &str, holds: bool) -> Result<Output, Failure> {
        let out = self.render(
            || json!({ key: holds }),
            || Err(Failure::Usage("csv output is for functions".into())),
            || holds.to_string(),
        )?;
        Ok(Output { ok: holds, ..out })
    }
}

fn parse_operand(spec: &str, csv_domain: Option<Domain>) -> Result<Operand, Failure> {
    if let Some(r) = spec.strip_prefix("nu_") {
        let r = r.parse().map_err(|_| anyhow!("bad index in {spec:?}"))?;
        return Ok(Operand::Nu(r));
    }
    if spec == "omega" || spec == "zero" {
        return Ok(Operand::Omega);
    }
    match spec.parse::<NamedFunction>() {
        Ok(name) => Ok(Operand::Named(name)),
        Err(Error::UnknownName(_)) => {
            let path = Path::new(spec);
            if !path.exists() {
                return Err(anyhow!("{spec:?} is neither a built-in function nor a file").into());
            }
            load_file(path, csv_domain).map(Operand::File)
        }
        Err(e) => Err(e.into()),
    }
}

/// `.csv` files use `--domain` (default Q); anything else is read as JSON.
fn load_file(path: &Path, csv_domain: Option<Domain>) -> Result<ArithFunc, Failure> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let parsed = match path.extension().and_then(|e| e.to_str()) {
        Some("csv") => io::from_csv(&text, csv_domain.unwrap_or(Domain::Rational)),
        _ => io::from_json(&text),
    };
    parsed
        .with_context(|| format!("in {}", path.display()))
        .map_err(Failure::Runtime)
}
