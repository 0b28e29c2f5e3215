//! Command implementations behind the `omegaseq` binary. Each command builds
//! a serializable report and renders it as text, JSON or CSV.

pub mod parse;

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use omegaseq::cyclotomic::{factor_w_against, omega};
use omegaseq::fppoly::DEFAULT_SEED;
use omegaseq::galois::{
    condition_c, even_quartic_class, omega_galois_report, Branch, ConditionCVerdict, FailReason,
    QuarticClass,
};
use omegaseq::intpoly::bigint_string;
use omegaseq::monogenicity::{
    field_disc_real_cyclotomic, monogenic_verdict_seeded, MonogenicSummary, Verdict,
};
use omegaseq::numtheory::factor_u64;
use omegaseq::sequences::{term, SeqKind, SequenceTable, MAX_TERM_INDEX};
use omegaseq::verify::{self, corpus_polys, Suite, SweepConfig, SweepReport};
use omegaseq::IntPoly;

pub use parse::{parse_poly, ParseError};

#[derive(Parser, Debug)]
#[command(
    name = "omegaseq",
    version,
    about = "Factor w_n into the Ω_d, check monogenicity and Galois cyclicity, and run verification sweeps"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for sweeps; reports do not depend on it.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256))]
    pub threads: u64,
    /// Seed for the randomized finite-field splitter.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Factor w_n into the Ω_d, d | 2n-1, d > 1.
    Factor {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=MAX_TERM_INDEX))]
        n: u64,
    },
    /// Ω_d with its discriminant, monogenicity and Galois data.
    Omega {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..=50_000))]
        d: u64,
    },
    /// Evaluate Condition C for N.
    ConditionC {
        #[arg(long = "N", value_parser = clap::value_parser!(u64).range(2..))]
        n: u64,
    },
    /// Discriminant of the real cyclotomic field of conductor N.
    DiscField {
        #[arg(long = "N", value_parser = clap::value_parser!(u64).range(3..=100_000))]
        n: u64,
    },
    /// Run a verification sweep; exits 1 if any case fails.
    Verify {
        /// products, discs, condition-c, dedekind, field-disc, primitive,
        /// eisenstein, distinctness, corpus, kernel, or all
        #[arg(long, value_parser = parse_suite)]
        suite: SuiteArg,
        /// Upper end of the swept range (ignored by `all`).
        #[arg(long)]
        max: Option<u64>,
    },
    /// One row per n in [2, max].
    Table {
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(2..=MAX_TERM_INDEX))]
        max: u64,
    },
    /// Galois group of an irreducible x^4 + p x^2 + q.
    ClassifyQuartic {
        #[arg(
            long,
            allow_hyphen_values = true,
            requires = "q",
            conflicts_with = "poly"
        )]
        p: Option<BigInt>,
        #[arg(long, allow_hyphen_values = true, requires = "p")]
        q: Option<BigInt>,
        /// The quartic, as a JSON coefficient array or in printed form.
        #[arg(long, allow_hyphen_values = true, required_unless_present = "p")]
        poly: Option<String>,
    },
    /// Known example polynomials and their verdicts.
    Corpus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteArg {
    One(Suite),
    All,
}

fn parse_suite(s: &str) -> Result<SuiteArg, String> {
    if s == "all" {
        Ok(SuiteArg::All)
    } else {
        s.parse().map(SuiteArg::One)
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] omegaseq::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("verification failed")]
    VerificationFailed,
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => 2,
            CliError::Core(e) => match e {
                omegaseq::Error::InternalInconsistency(_) | omegaseq::Error::ProductMismatch(_) => {
                    1
                }
                _ => 2,
            },
            CliError::Io(_) | CliError::Csv(_) | CliError::VerificationFailed => 1,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorReport {
    pub n: u64,
    pub modulus: u64,
    pub condition_c: bool,
    pub factors: Vec<FactorRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRow {
    pub d: u64,
    pub degree: usize,
    pub poly: IntPoly,
    #[serde(with = "bigint_string")]
    pub disc: BigInt,
    pub verdict: Verdict,
    /// Galois group of `Ω_d` is cyclic.
    pub condition_c: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaReport {
    pub d: u64,
    pub degree: usize,
    pub group_order: u64,
    pub cyclic: bool,
    #[serde(with = "bigint_string")]
    pub field_disc: BigInt,
    pub monogenicity: MonogenicSummary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDiscReport {
    #[serde(rename = "N")]
    pub n: u64,
    #[serde(with = "bigint_string")]
    pub disc: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: u64,
    pub modulus: u64,
    /// e.g. `3^2*7`
    pub factorization: String,
    pub condition_c: bool,
    pub divisors: Vec<u64>,
    pub degrees: Vec<usize>,
    pub field_discs: Vec<String>,
    pub all_monogenic: bool,
    pub all_cyclic: bool,
}

/// Column order of `table --format csv`; list-valued cells are `;`-joined.
pub const TABLE_COLUMNS: [&str; 9] = [
    "n",
    "modulus",
    "factorization",
    "condition_c",
    "divisors",
    "degrees",
    "field_discs",
    "all_monogenic",
    "all_cyclic",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuarticReport {
    #[serde(with = "bigint_string")]
    pub p: BigInt,
    #[serde(with = "bigint_string")]
    pub q: BigInt,
    pub class: QuarticClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub poly: IntPoly,
    #[serde(with = "bigint_string")]
    pub disc: BigInt,
    pub verdict: Verdict,
    /// Galois group, for even quartics.
    pub class: Option<QuarticClass>,
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    let fmt = cli.format;
    let seed = cli.seed;
    match &cli.command {
        Command::Factor { n } => emit(
            out,
            fmt,
            &factor_report(*n, seed)?,
            render_factor,
            csv_factor,
        ),
        Command::Omega { d } => emit(out, fmt, &omega_report(*d, seed)?, render_omega, csv_omega),
        Command::ConditionC { n } => emit(
            out,
            fmt,
            &condition_c(*n)?,
            render_condition_c,
            csv_condition_c,
        ),
        Command::DiscField { n } => {
            let r = FieldDiscReport {
                n: *n,
                disc: field_disc_real_cyclotomic(*n)?,
            };
            emit(
                out,
                fmt,
                &r,
                |r| format!("disc of Q(ζ_{0} + ζ_{0}^-1) = {1}\n", r.n, r.disc),
                |w, r| {
                    w.write_record(["N", "disc"])?;
                    w.write_record([r.n.to_string(), r.disc.to_string()])?;
                    Ok(())
                },
            )
        }
        Command::Verify { suite, max } => {
            let cfg = SweepConfig {
                max: *max,
                threads: cli.threads as usize,
                seed,
            };
            let reports = match suite {
                SuiteArg::One(s) => vec![verify::run(*s, &cfg)],
                SuiteArg::All => verify::run_all(&cfg),
            };
            match suite {
                SuiteArg::One(_) => emit(
                    out,
                    fmt,
                    &reports[0],
                    |r| render_sweeps(std::slice::from_ref(r)),
                    |w, r| csv_sweeps(w, std::slice::from_ref(r)),
                )?,
                SuiteArg::All => emit(
                    out,
                    fmt,
                    &reports,
                    |r| render_sweeps(r),
                    |w, r| csv_sweeps(w, r),
                )?,
            }
            if reports.iter().all(SweepReport::passed) {
                Ok(())
            } else {
                Err(CliError::VerificationFailed)
            }
        }
        Command::Table { max } => emit(
            out,
            fmt,
            &table_rows(*max, seed)?,
            |r| render_table(r),
            |w, r| csv_table(w, r),
        ),
        Command::ClassifyQuartic { p, q, poly } => {
            let (p, q) = match (p, q, poly) {
                (Some(p), Some(q), None) => (p.clone(), q.clone()),
                (None, None, Some(text)) => even_quartic_coeffs(&parse_poly(text)?)?,
                _ => return Err(CliError::Usage("give either --p and --q or --poly".into())),
            };
            let class = even_quartic_class(&p, &q);
            emit(
                out,
                fmt,
                &QuarticReport { p, q, class },
                |r| {
                    let f = IntPoly::new(vec![
                        r.q.clone(),
                        BigInt::from(0),
                        r.p.clone(),
                        BigInt::from(0),
                        BigInt::from(1),
                    ]);
                    format!("{f}: {:?}\n", r.class)
                },
                |w, r| {
                    w.write_record(["p", "q", "class"])?;
                    w.write_record([r.p.to_string(), r.q.to_string(), format!("{:?}", r.class)])?;
                    Ok(())
                },
            )
        }
        Command::Corpus => emit(
            out,
            fmt,
            &corpus_entries(seed)?,
            |r| render_corpus(r),
            |w, r| csv_corpus(w, r),
        ),
    }
}

fn emit<T: Serialize + ?Sized>(
    out: &mut dyn Write,
    fmt: Format,
    value: &T,
    text: impl Fn(&T) -> String,
    csv: impl Fn(&mut csv::Writer<&mut dyn Write>, &T) -> CliResult<()>,
) -> CliResult<()> {
    match fmt {
        Format::Text => out.write_all(text(value).as_bytes())?,
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, value).map_err(io::Error::from)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            csv(&mut w, value)?;
            w.flush()?;
        }
    }
    Ok(())
}

fn c_holds(d: u64) -> CliResult<bool> {
    Ok(condition_c(d)?.satisfied)
}

pub fn factor_report(n: u64, seed: u64) -> CliResult<FactorReport> {
    let fac = factor_w_against(n, &term(SeqKind::WSmall, n)?)?;
    let mut factors = Vec::new();
    for (d, f) in &fac.factors {
        let mono = monogenic_verdict_seeded(&f.poly, seed)?;
        factors.push(FactorRow {
            d: *d,
            degree: f.degree(),
            poly: f.poly.clone(),
            disc: mono.disc,
            verdict: mono.verdict,
            condition_c: c_holds(*d)?,
        });
    }
    Ok(FactorReport {
        n,
        modulus: fac.modulus(),
        condition_c: c_holds(fac.modulus())?,
        factors,
    })
}

pub fn omega_report(d: u64, seed: u64) -> CliResult<OmegaReport> {
    let om = omega(d)?;
    let galois = omega_galois_report(d)?;
    Ok(OmegaReport {
        d,
        degree: om.degree(),
        group_order: galois.group_order,
        cyclic: galois.cyclic,
        field_disc: field_disc_real_cyclotomic(2 * d)?,
        monogenicity: monogenic_verdict_seeded(&om.poly, seed)?.summary(),
    })
}

pub fn table_rows(max: u64, seed: u64) -> CliResult<Vec<TableRow>> {
    struct PerDivisor {
        degree: usize,
        field_disc: BigInt,
        monogenic: bool,
        cyclic: bool,
    }
    let mut cache: HashMap<u64, PerDivisor> = HashMap::new();
    let mut w = SequenceTable::new(SeqKind::WSmall);
    let mut rows = Vec::new();
    for n in 2..=max {
        let fac = factor_w_against(n, w.get(n)?)?;
        let modulus = fac.modulus();
        for (d, f) in &fac.factors {
            if !cache.contains_key(d) {
                let entry = PerDivisor {
                    degree: f.degree(),
                    field_disc: field_disc_real_cyclotomic(2 * d)?,
                    monogenic: monogenic_verdict_seeded(&f.poly, seed)?.verdict
                        == Verdict::Monogenic,
                    cyclic: c_holds(*d)?,
                };
                cache.insert(*d, entry);
            }
        }
        let per: Vec<&PerDivisor> = fac.factors.keys().map(|d| &cache[d]).collect();
        rows.push(TableRow {
            n,
            modulus,
            factorization: factor_u64(modulus)
                .into_iter()
                .map(|(p, e)| {
                    if e == 1 {
                        p.to_string()
                    } else {
                        format!("{p}^{e}")
                    }
                })
                .collect::<Vec<_>>()
                .join("*"),
            condition_c: c_holds(modulus)?,
            divisors: fac.factors.keys().copied().collect(),
            degrees: per.iter().map(|p| p.degree).collect(),
            field_discs: per.iter().map(|p| p.field_disc.to_string()).collect(),
            all_monogenic: per.iter().all(|p| p.monogenic),
            all_cyclic: per.iter().all(|p| p.cyclic),
        });
    }
    Ok(rows)
}

/// `(p, q)` of a monic `x^4 + p x^2 + q`.
fn even_quartic_coeffs(f: &IntPoly) -> CliResult<(BigInt, BigInt)> {
    let zero = BigInt::from(0);
    if f.degree() != Some(4) || !f.is_monic() || f.coeff(1) != zero || f.coeff(3) != zero {
        return Err(CliError::Usage(format!(
            "{f} is not of the form x^4 + p x^2 + q"
        )));
    }
    Ok((f.coeff(2), f.coeff(0)))
}

pub fn corpus_entries(seed: u64) -> CliResult<Vec<CorpusEntry>> {
    let mut list: Vec<(String, IntPoly)> = vec![
        ("F_5".into(), corpus_polys::fib5()),
        ("factor of F_14".into(), corpus_polys::fib14_factor()),
        ("factor of L_15".into(), corpus_polys::lucas15_factor()),
        ("psi_11".into(), corpus_polys::psi11_quintic()),
    ];
    for k in 1..=4 {
        list.push((format!("L_{}", 1u64 << k), term(SeqKind::Lucas, 1 << k)?));
    }
    list.into_iter()
        .map(|(name, poly)| {
            let report = monogenic_verdict_seeded(&poly, seed)?;
            let class = even_quartic_coeffs(&poly)
                .ok()
                .map(|(p, q)| even_quartic_class(&p, &q));
            Ok(CorpusEntry {
                name,
                disc: report.disc,
                verdict: report.verdict,
                class,
                poly,
            })
        })
        .collect()
}

fn render_factor(r: &FactorReport) -> String {
    let mut s = format!("w_{} = product of Ω_d over d | {}, d > 1\n", r.n, r.modulus);
    for f in &r.factors {
        let _ = writeln!(s, "  Ω_{} = {}", f.d, f.poly);
        let _ = writeln!(
            s,
            "      degree {}, disc {}, {:?}, condition C {}",
            f.degree,
            f.disc,
            f.verdict,
            if f.condition_c { "holds" } else { "fails" }
        );
    }
    s
}

fn csv_factor(w: &mut csv::Writer<&mut dyn Write>, r: &FactorReport) -> CliResult<()> {
    w.write_record(["n", "d", "degree", "poly", "disc", "verdict", "condition_c"])?;
    for f in &r.factors {
        w.write_record([
            r.n.to_string(),
            f.d.to_string(),
            f.degree.to_string(),
            f.poly.to_string(),
            f.disc.to_string(),
            format!("{:?}", f.verdict),
            f.condition_c.to_string(),
        ])?;
    }
    Ok(())
}

fn render_omega(r: &OmegaReport) -> String {
    let m = &r.monogenicity;
    let mut s = format!("Ω_{} = {}\n", r.d, m.poly);
    let _ = writeln!(
        s,
        "  degree {}, disc {}, field disc {}",
        r.degree, m.disc, r.field_disc
    );
    let _ = writeln!(s, "  {:?}", m.verdict);
    for o in &m.per_prime {
        let _ = writeln!(
            s,
            "    Dedekind at {}: {}",
            o.p,
            if o.passed { "passed" } else { "failed" }
        );
    }
    let _ = writeln!(
        s,
        "  Galois group of order {}, {}",
        r.group_order,
        if r.cyclic { "cyclic" } else { "not cyclic" }
    );
    s
}

fn csv_omega(w: &mut csv::Writer<&mut dyn Write>, r: &OmegaReport) -> CliResult<()> {
    w.write_record([
        "d",
        "degree",
        "poly",
        "disc",
        "field_disc",
        "verdict",
        "group_order",
        "cyclic",
    ])?;
    w.write_record([
        r.d.to_string(),
        r.degree.to_string(),
        r.monogenicity.poly.to_string(),
        r.monogenicity.disc.to_string(),
        r.field_disc.to_string(),
        format!("{:?}", r.monogenicity.verdict),
        r.group_order.to_string(),
        r.cyclic.to_string(),
    ])?;
    Ok(())
}

fn pp(p: u64, a: u32) -> String {
    if a == 1 {
        p.to_string()
    } else {
        format!("{p}^{a}")
    }
}

fn describe_branch(b: &Branch) -> String {
    match b {
        Branch::PrimePower { p, a } => format!("N = {}", pp(*p, *a)),
        Branch::TwoPrimePower { p, a } => format!("N = 2*{}", pp(*p, *a)),
        Branch::PrimePowerPair { p, a, q, b, gamma } => {
            format!("N = {}*{}, gamma = {gamma}", pp(*p, *a), pp(*q, *b))
        }
        Branch::TwoPrimePowerPair { p, a, q, b, gamma } => {
            format!("N = 2*{}*{}, gamma = {gamma}", pp(*p, *a), pp(*q, *b))
        }
        Branch::Fails { reason } => match reason {
            FailReason::DivisibleByFour => "4 divides N".into(),
            FailReason::NoOddPart => "N has no odd prime factor".into(),
            FailReason::TooManyPrimes { count } => format!("{count} distinct odd primes"),
            FailReason::GammaNotTwo { p, a, q, b, gamma } => {
                format!("gcd(phi({}), phi({})) = {gamma}", pp(*p, *a), pp(*q, *b))
            }
        },
    }
}

fn render_condition_c(v: &ConditionCVerdict) -> String {
    format!(
        "N = {}: condition C {} ({})\n",
        v.n,
        if v.satisfied { "holds" } else { "fails" },
        describe_branch(&v.branch)
    )
}

fn csv_condition_c(w: &mut csv::Writer<&mut dyn Write>, v: &ConditionCVerdict) -> CliResult<()> {
    w.write_record(["N", "satisfied", "detail"])?;
    w.write_record([
        v.n.to_string(),
        v.satisfied.to_string(),
        describe_branch(&v.branch),
    ])?;
    Ok(())
}

fn render_sweeps(reports: &[SweepReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let _ = writeln!(
            s,
            "{} {}: {} cases, {} failures, {} ms ({})",
            if r.passed() { "PASS" } else { "FAIL" },
            r.suite,
            r.cases,
            r.failures.len(),
            r.wall_time_ms,
            r.range
        );
        for f in &r.failures {
            let _ = writeln!(
                s,
                "    {}: expected {}, got {}",
                f.case, f.expected, f.actual
            );
        }
        for n in &r.notes {
            let _ = writeln!(s, "    note: {n}");
        }
    }
    s
}

fn csv_sweeps(w: &mut csv::Writer<&mut dyn Write>, reports: &[SweepReport]) -> CliResult<()> {
    w.write_record([
        "suite",
        "range",
        "cases",
        "failures",
        "wall_time_ms",
        "passed",
    ])?;
    for r in reports {
        w.write_record([
            r.suite.clone(),
            r.range.clone(),
            r.cases.to_string(),
            r.failures.len().to_string(),
            r.wall_time_ms.to_string(),
            r.passed().to_string(),
        ])?;
    }
    Ok(())
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(";")
}

fn render_table(rows: &[TableRow]) -> String {
    let mut s = format!(
        "{:>5} {:>7} {:>12} {:>4} {:>5} {:>5}  {}\n",
        "n", "2n-1", "factored", "C", "mono", "cyc", "divisors (degree)"
    );
    for r in rows {
        let divs: Vec<String> = r
            .divisors
            .iter()
            .zip(&r.degrees)
            .map(|(d, g)| format!("{d}({g})"))
            .collect();
        let yn = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(
            s,
            "{:>5} {:>7} {:>12} {:>4} {:>5} {:>5}  {}",
            r.n,
            r.modulus,
            r.factorization,
            yn(r.condition_c),
            yn(r.all_monogenic),
            yn(r.all_cyclic),
            divs.join(" ")
        );
    }
    s
}

fn csv_table(w: &mut csv::Writer<&mut dyn Write>, rows: &[TableRow]) -> CliResult<()> {
    w.write_record(TABLE_COLUMNS)?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            r.modulus.to_string(),
            r.factorization.clone(),
            r.condition_c.to_string(),
            join(&r.divisors),
            join(&r.degrees),
            r.field_discs.join(";"),
            r.all_monogenic.to_string(),
            r.all_cyclic.to_string(),
        ])?;
    }
    Ok(())
}

fn render_corpus(entries: &[CorpusEntry]) -> String {
    let mut s = String::new();
    for e in entries {
        let _ = write!(
            s,
            "{}: {}\n    disc {}, {:?}",
            e.name, e.poly, e.disc, e.verdict
        );
        if let Some(c) = e.class {
            let _ = write!(s, ", Galois group {c:?}");
        }
        s.push('\n');
    }
    s
}

fn csv_corpus(w: &mut csv::Writer<&mut dyn Write>, entries: &[CorpusEntry]) -> CliResult<()> {
    w.write_record(["name", "poly", "disc", "verdict", "class"])?;
    for e in entries {
        w.write_record([
            e.name.clone(),
            e.poly.to_string(),
            e.disc.to_string(),
            format!("{:?}", e.verdict),
            e.class.map(|c| format!("{c:?}")).unwrap_or_default(),
        ])?;
    }
    Ok(())
}
