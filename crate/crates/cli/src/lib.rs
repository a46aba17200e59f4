//! Command-line front-end: argument parsing, the polynomial and field text
//! formats, and the JSON report. [`run`] is the whole program; `main` only
//! forwards the process arguments and exit code.

pub mod args;
pub mod parse;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use casas_core::arith::{Field, IntegralDomain, Ring};
use casas_core::casas::{
    check_ca, elimination_cascade, exhaustive_search, identically_zero_resultants, quad_closure,
    quad_poly, quad_scan, theorem_coverage, verify_m, verify_quad_point, CaInstance, CaVerdict,
    CheckpointConfig, CoverageVerdict, QuadOptions, SearchOptions, SearchReport,
};
use casas_core::multipoly::{
    buchberger_is_gb, generic_resultant, is_weighted_homogeneous, leading_monomial, GbBudget,
    GbCertificate, MultiPoly, SymbolicLimits, WeightedOrder,
};
use casas_core::{Error, FieldDescriptor, Integers, Prime};
use clap::Parser;
use num_bigint::{BigInt, BigUint};

use args::{Cli, Command, ExpectHits, Global, QuadCommand, SearchArgs};
pub use parse::{parse_field, parse_poly, AnyField, ParseError};
pub use report::{JsonReport, Payload, SymbolicEntry, SymbolicResult, Timings, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_EXPECTATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Runs one invocation. `argv[0]` is the program name. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let command: Vec<String> = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let start = Instant::now();
    let outcome = match execute(&cli) {
        Ok(outcome) => outcome,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            return failure.code;
        }
    };
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let g = &cli.global;
    let written = if g.json {
        let report = JsonReport {
            schema_version: SCHEMA_VERSION,
            command,
            field: outcome.field,
            payload: outcome.payload,
            timings: g.timings.then_some(Timings { wall_ms }),
        };
        serde_json::to_string_pretty(&report)
            .map_err(std::io::Error::other)
            .and_then(|text| writeln!(out, "{text}"))
    } else {
        write_text(out, g, &outcome.lines, &outcome.verdict, wall_ms)
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    match outcome.violation {
        Some(message) => {
            let _ = writeln!(err, "expectation violated: {message}");
            EXIT_EXPECTATION
        }
        None => EXIT_OK,
    }
}

fn write_text(
    out: &mut dyn Write,
    g: &Global,
    lines: &[String],
    verdict: &str,
    wall_ms: f64,
) -> std::io::Result<()> {
    if !g.quiet {
        for line in lines {
            writeln!(out, "{line}")?;
        }
        if g.timings {
            writeln!(out, "time: {wall_ms:.3} ms")?;
        }
    }
    writeln!(out, "verdict: {verdict}")
}

struct Outcome {
    field: Option<FieldDescriptor>,
    payload: Payload,
    lines: Vec<String>,
    verdict: String,
    violation: Option<String>,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Budget { .. } => EXIT_BUDGET,
            Error::Inconsistent(_) => EXIT_EXPECTATION,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        match e {
            ParseError::Core(e) => e.into(),
            other => usage(other.to_string()),
        }
    }
}

type Outcomes = Result<Outcome, Failure>;

/// Calls `$body` with `$f` bound to the concrete field inside `$field`.
macro_rules! with_field {
    ($field:expr, $f:ident => $body:expr) => {
        match $field {
            AnyField::Rationals($f) => $body,
            AnyField::Prime($f) => $body,
            AnyField::BigPrime($f) => $body,
            AnyField::Extension($f) => $body,
        }
    };
}

fn execute(cli: &Cli) -> Outcomes {
    let g = &cli.global;
    match &cli.command {
        Command::Check {
            field,
            poly,
            expect_counterexample,
            expect_no_counterexample,
        } => {
            let field = parse_field(field)?;
            let (polynomial, verdict) = with_field!(&field, f => check_text(f, poly))?;
            let expect = expectation(*expect_counterexample, *expect_no_counterexample);
            Ok(verdict_outcome(
                field.descriptor(),
                polynomial,
                verdict,
                expect,
                |polynomial, verdict| Payload::Check {
                    polynomial,
                    verdict,
                },
            ))
        }
        Command::Hasse { field, poly, index } => {
            let field = parse_field(field)?;
            let (polynomial, derivatives) = with_field!(&field, f => hasse(f, poly, *index))?;
            let mut lines = vec![
                format!("field: {}", field.descriptor()),
                format!("P = {polynomial}"),
            ];
            lines.extend(
                derivatives
                    .iter()
                    .map(|h| format!("P_{} = {}", h.i, h.derivative)),
            );
            let verdict = format!("{} Hasse derivatives", derivatives.len());
            Ok(Outcome {
                field: Some(field.descriptor()),
                payload: Payload::Hasse {
                    polynomial,
                    derivatives,
                },
                lines,
                verdict,
                violation: None,
            })
        }
        Command::Search(args) => search(g, args),
        Command::Cascade { degree, prime } => cascade(*degree, *prime),
        Command::Coverage { max } => Ok(coverage(*max)),
        Command::Symbolic {
            degree,
            index,
            field,
            gb,
            long,
        } => symbolic(*degree, *index, field.as_deref(), *gb, *long),
        Command::Quad(q) => quad(g, q),
        Command::VerifyM => Ok(verify_m_outcome()),
    }
}

fn check_text<F: Field>(field: &F, text: &str) -> Result<(String, CaVerdict), Failure> {
    let poly = parse_poly(text, field)?;
    let verdict = check_ca(&CaInstance::new(poly.clone())?);
    Ok((poly.to_string(), verdict))
}

fn expectation(yes: bool, no: bool) -> Option<bool> {
    match (yes, no) {
        (true, _) => Some(true),
        (_, true) => Some(false),
        _ => None,
    }
}

fn verdict_outcome(
    field: FieldDescriptor,
    polynomial: String,
    verdict: CaVerdict,
    expect: Option<bool>,
    payload: impl FnOnce(String, CaVerdict) -> Payload,
) -> Outcome {
    let profile: Vec<String> = verdict
        .gcd_profile
        .iter()
        .map(|e| e.gcd_degree.to_string())
        .collect();
    let lines = vec![
        format!("field: {field}"),
        format!("polynomial: {polynomial}"),
        format!(
            "gcd(P, P_i) degrees for i = 1..{}: [{}]",
            verdict.degree.saturating_sub(1),
            profile.join(", ")
        ),
        match &verdict.linear_power_root {
            Some(alpha) => format!(
                "linear power: (X - alpha)^{} with alpha = {alpha}",
                verdict.degree
            ),
            None => "linear power: no".to_string(),
        },
    ];
    let text = if verdict.is_counterexample {
        "counterexample"
    } else {
        "not a counterexample"
    };
    let violation = match expect {
        Some(e) if e != verdict.is_counterexample => {
            Some(format!("expected {}, got {text}", describe(e)))
        }
        _ => None,
    };
    Outcome {
        field: Some(field),
        payload: payload(polynomial, verdict),
        lines,
        verdict: text.into(),
        violation,
    }
}

fn describe(counterexample: bool) -> &'static str {
    if counterexample {
        "a counterexample"
    } else {
        "no counterexample"
    }
}

fn hasse<F: Field>(
    field: &F,
    text: &str,
    index: Option<usize>,
) -> Result<(String, Vec<report::HasseEntry>), Failure> {
    let poly = parse_poly(text, field)?;
    let indices: Vec<usize> = match index {
        Some(i) => vec![i],
        None => (1..poly.degree().unwrap_or(0)).collect(),
    };
    let derivatives = indices
        .into_iter()
        .map(|i| report::HasseEntry {
            i,
            derivative: poly.hasse_derivative(i).to_string(),
        })
        .collect();
    Ok((poly.to_string(), derivatives))
}

fn parse_range(text: &str) -> Result<(u64, u64), Failure> {
    let bad = || usage(format!("invalid range {text:?}; expected START..END"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    Ok((a, b))
}

fn search(g: &Global, args: &SearchArgs) -> Outcomes {
    let field = parse_field(&args.field)?;
    let options = SearchOptions {
        budget: g.budget,
        range: args.range.as_deref().map(parse_range).transpose()?,
        block_size: args.block_size,
        threads: g.threads.map(|t| t as usize),
        checkpoint: args
            .checkpoint
            .as_ref()
            .map(|path: &PathBuf| CheckpointConfig {
                path: path.clone(),
                interval: Duration::from_secs(args.checkpoint_interval),
                resume: args.resume,
            }),
        consistency_stride: args.consistency_stride,
        timings: g.timings,
    };
    let report = match &field {
        AnyField::Prime(f) => exhaustive_search(args.degree, f, &options)?,
        AnyField::Extension(f) => exhaustive_search(args.degree, f, &options)?,
        AnyField::Rationals(_) => return Err(usage("search needs a finite field")),
        AnyField::BigPrime(f) => {
            let exponent = args.degree.saturating_sub(1) as u32;
            let required = f.modulus().pow(exponent);
            return Err(Error::budget("exhaustive search", required, g.budget).into());
        }
    };
    let mut lines = vec![
        format!("field: {}", report.field),
        format!("degree: {}", report.degree),
    ];
    lines.extend(search_lines(&report));
    Ok(hit_outcome(report, &args.expect, Payload::Search, lines))
}

fn search_lines(report: &SearchReport) -> Vec<String> {
    let [start, end] = report.range;
    let mut lines = vec![format!(
        "candidates: {} tested in {start}..{end} of {}{}",
        report.candidates_tested,
        report.enumeration_size,
        if report.complete { "" } else { " (incomplete)" }
    )];
    lines.extend(report.hits.iter().map(|h| format!("hit: {}", h.polynomial)));
    lines
}

fn hit_outcome(
    report: SearchReport,
    expect: &ExpectHits,
    payload: fn(SearchReport) -> Payload,
    lines: Vec<String>,
) -> Outcome {
    let n = report.hits.len();
    let verdict = format!("{n} hit{}", if n == 1 { "" } else { "s" });
    let violation = if expect.expect_empty && n > 0 {
        Some(format!("expected no hits, found {n}"))
    } else if expect.expect_hits && n == 0 {
        Some("expected hits, found none".to_string())
    } else {
        None
    };
    Outcome {
        field: Some(report.field.clone()),
        payload: payload(report),
        lines,
        verdict,
        violation,
    }
}

fn cascade(degree: u64, prime: u64) -> Outcomes {
    let trace = elimination_cascade(degree, Prime::new(prime)?)?;
    let mut lines = vec![format!(
        "d = {} = {} * {}^{}",
        trace.d, trace.n, trace.p, trace.k
    )];
    for step in &trace.steps {
        let binomials: Vec<String> = step
            .vanishing
            .iter()
            .map(|b| format!("C({}, {})", b.n, b.k))
            .collect();
        let via = if binomials.is_empty() {
            String::new()
        } else {
            format!(", vanishing mod {}: {}", trace.p, binomials.join(" "))
        };
        lines.push(format!(
            "a_{} = 0 from P_{}{via}",
            step.index, step.witness_derivative
        ));
    }
    lines.push(format!("residual: {}", trace.residual));
    let verdict = if trace.complete_certificate {
        format!(
            "complete certificate, no counterexample of degree {} in characteristic {}",
            trace.d, trace.p
        )
    } else if trace.reduces_to_degree_two {
        "descends to degree 2, no counterexample".to_string()
    } else {
        format!(
            "descends to degree {}, inconclusive",
            trace.descended_degree
        )
    };
    Ok(Outcome {
        field: None,
        payload: Payload::Cascade(trace),
        lines,
        verdict,
        violation: None,
    })
}

fn coverage(max: u64) -> Outcome {
    let verdicts: Vec<CoverageVerdict> = (1..max).map(theorem_coverage).collect();
    let open: Vec<u64> = verdicts
        .iter()
        .filter(|v| !v.is_covered())
        .map(|v| v.degree())
        .collect();
    let lines = verdicts
        .iter()
        .map(|v| match v {
            CoverageVerdict::Covered {
                d,
                decomposition: w,
            } => format!("d = {d}: covered, {} * {}^{}", w.n, w.p, w.k),
            CoverageVerdict::Open { d } => format!("d = {d}: open"),
        })
        .collect();
    let verdict = if open.is_empty() {
        format!("no open degrees below {max}")
    } else {
        let list: Vec<String> = open.iter().map(u64::to_string).collect();
        format!("open degrees {}", list.join(", "))
    };
    Outcome {
        field: None,
        payload: Payload::Coverage {
            max,
            open,
            verdicts,
        },
        lines,
        verdict,
        violation: None,
    }
}

fn symbolic_entries<R: IntegralDomain>(
    base: R,
    d: usize,
    indices: &[usize],
    limits: &SymbolicLimits,
) -> Result<(Vec<SymbolicEntry>, Vec<MultiPoly<R>>), Failure> {
    let order = WeightedOrder::new(d.saturating_sub(1));
    let mut entries = Vec::new();
    let mut polys = Vec::new();
    for &i in indices {
        let r = generic_resultant(base.clone(), d, i, limits)?;
        entries.push(SymbolicEntry {
            i,
            terms: r.len(),
            weighted_degree: is_weighted_homogeneous(&r).degree(),
            expected_weighted_degree: (d * (d - i)) as u32,
            leading_monomial: if r.is_zero() {
                None
            } else {
                Some(leading_monomial(&r, &order)?.to_string())
            },
            resultant: r.to_string(),
        });
        polys.push(r);
    }
    Ok((entries, polys))
}

fn groebner<F: Field>(gens: &[MultiPoly<F>], d: usize) -> Result<GbCertificate, Failure> {
    Ok(buchberger_is_gb(
        gens,
        &WeightedOrder::new(d - 1),
        &GbBudget::default(),
    )?)
}

fn symbolic(d: usize, index: Option<usize>, field: Option<&str>, gb: bool, long: bool) -> Outcomes {
    let limits = if long {
        SymbolicLimits::unlimited()
    } else {
        SymbolicLimits::default()
    };
    let indices: Vec<usize> = match index {
        Some(i) => vec![i],
        None => (1..d).collect(),
    };
    let field = field.map(parse_field).transpose()?;
    let (entries, certificate) = match &field {
        None if gb => return Err(usage("--gb needs a coefficient field")),
        None => (
            symbolic_entries(Integers::new(), d, &indices, &limits)?.0,
            None,
        ),
        #[allow(clippy::clone_on_copy)]
        Some(field) => with_field!(field, f => {
            let (entries, polys) = symbolic_entries(f.clone(), d, &indices, &limits)?;
            let certificate = if gb { Some(groebner(&polys, d)?) } else { None };
            (entries, certificate)
        }),
    };
    let descriptor = field.as_ref().map(AnyField::descriptor);
    let base = descriptor
        .as_ref()
        .map_or_else(|| "Z".to_string(), ToString::to_string);
    let mut lines = vec![format!("generic degree {d} over {base}")];
    for e in &entries {
        let degree = e
            .weighted_degree
            .map_or_else(|| "mixed".to_string(), |w| w.to_string());
        let lead = e.leading_monomial.as_deref().unwrap_or("none");
        lines.push(format!(
            "Res(P, P_{}): {} term{}, weighted degree {degree} (expected {}), leading monomial {lead}",
            e.i,
            e.terms,
            if e.terms == 1 { "" } else { "s" },
            e.expected_weighted_degree
        ));
    }
    let homogeneous = entries
        .iter()
        .all(|e| e.weighted_degree == Some(e.expected_weighted_degree));
    let mut verdict = if homogeneous {
        "weighted-homogeneous of the expected degrees".to_string()
    } else {
        "not weighted-homogeneous of the expected degrees".to_string()
    };
    if let Some(c) = &certificate {
        lines.push(format!(
            "S-pairs: {} reduced, {} skipped by the coprime criterion",
            c.checked(),
            c.skipped()
        ));
        verdict.push_str(if c.is_groebner_basis {
            "; Groebner basis"
        } else {
            "; not a Groebner basis"
        });
    }
    let result = SymbolicResult {
        degree: d,
        base,
        resultants: entries,
        groebner: certificate,
    };
    Ok(Outcome {
        field: descriptor,
        payload: Payload::Symbolic(result),
        lines,
        verdict,
        violation: None,
    })
}

fn quad(g: &Global, command: &QuadCommand) -> Outcomes {
    match command {
        QuadCommand::Scan { prime, expect } => {
            let options = QuadOptions {
                budget: g.budget,
                threads: g.threads.map(|t| t as usize),
                seed: g.seed,
                timings: g.timings,
            };
            let report = quad_scan(Prime::new(*prime)?, &options)?;
            let mut lines = vec![
                format!("field: {}", report.field),
                "family: X^6 + a*X^4 + X^3 + b*X^2".to_string(),
            ];
            lines.extend(search_lines(&report));
            Ok(hit_outcome(report, expect, Payload::QuadScan, lines))
        }
        QuadCommand::Closure {
            prime,
            expect_point,
            expect_no_point,
        } => {
            let report = quad_closure(Prime::new(*prime)?, g.seed)?;
            let factors: Vec<String> = report
                .eliminant_factor_degrees
                .iter()
                .map(|(m, count)| format!("{count} of degree {m}"))
                .collect();
            let mut lines = vec![
                format!("eliminant degree: {}", report.eliminant_degree),
                format!(
                    "irreducible factors: {}",
                    if factors.is_empty() {
                        "none".to_string()
                    } else {
                        factors.join(", ")
                    }
                ),
            ];
            if let Some(point) = &report.point {
                lines.push(format!("field: {}", point.field));
                lines.push(format!("a = {}", point.a));
                lines.push(format!("b = {}", point.b));
            }
            let verdict = match (&report.point, report.has_point) {
                (Some(point), _) if point.extension_degree == 1 => {
                    format!("counterexample over F_{}", report.p)
                }
                (Some(point), _) => format!(
                    "counterexample over F_{{{}^{}}}",
                    report.p, point.extension_degree
                ),
                (None, true) => {
                    "counterexample over an extension beyond the realization limit".to_string()
                }
                (None, false) => "no counterexample over the algebraic closure".to_string(),
            };
            let violation = match expectation(*expect_point, *expect_no_point) {
                Some(e) if e != report.has_point => {
                    Some(format!("expected {}, got {verdict}", describe(e)))
                }
                _ => None,
            };
            let field = FieldDescriptor::Prime { p: report.p.into() };
            Ok(Outcome {
                field: Some(field),
                payload: Payload::QuadClosure(report),
                lines,
                verdict,
                violation,
            })
        }
        QuadCommand::Point {
            prime,
            a,
            b,
            expect_counterexample,
            expect_no_counterexample,
        } => {
            let p: BigUint = prime
                .trim()
                .parse()
                .map_err(|_| usage(format!("invalid prime {prime:?}")))?;
            let field = parse_field(&format!("p={p}"))?;
            let reduce = |text: &str| -> Result<BigUint, Failure> {
                let v: BigInt = text
                    .trim()
                    .parse()
                    .map_err(|_| usage(format!("invalid integer {text:?}")))?;
                let p = BigInt::from(p.clone());
                Ok(((v % &p + &p) % &p)
                    .to_biguint()
                    .expect("reduced residue is non-negative"))
            };
            let (a, b) = (reduce(a)?, reduce(b)?);
            let verdict = verify_quad_point(&p, &a, &b)?;
            let polynomial = with_field!(&field, f => {
                let lift = |v: &BigUint| f.from_bigint(&BigInt::from(v.clone()));
                quad_poly(f, lift(&a), lift(&b)).to_string()
            });
            let expect = expectation(*expect_counterexample, *expect_no_counterexample);
            let (a, b) = (a.to_string(), b.to_string());
            Ok(verdict_outcome(
                field.descriptor(),
                polynomial,
                verdict,
                expect,
                |polynomial, verdict| Payload::QuadPoint {
                    a,
                    b,
                    polynomial,
                    verdict,
                },
            ))
        }
        QuadCommand::Resultants { samples } => {
            let r = identically_zero_resultants(*samples, g.seed)?;
            let mut lines: Vec<String> = r
                .resultants
                .iter()
                .map(|q| format!("Res(P, P_{}) = {}", q.i, q.resultant))
                .collect();
            lines.push(format!(
                "specialization checks: {}",
                r.specialization_checks
            ));
            let zero: Vec<String> = r.zero.iter().map(usize::to_string).collect();
            let verdict = format!(
                "identically zero for i in {{{}}}, {} nonzero generators",
                zero.join(", "),
                r.nonzero.len()
            );
            Ok(Outcome {
                field: None,
                payload: Payload::QuadResultants(r),
                lines,
                verdict,
                violation: None,
            })
        }
    }
}

fn verify_m_outcome() -> Outcome {
    let report = verify_m();
    let mut lines: Vec<String> = report
        .factors
        .iter()
        .map(|f| {
            format!(
                "{}^{}: {}",
                f.prime,
                f.exponent,
                if f.is_prime { "prime" } else { "NOT prime" }
            )
        })
        .collect();
    lines.push(format!("M = {}", report.m));
    lines.push(format!("digits: {}", report.digits));
    let ok = report.all_prime && report.matches_constant;
    let verdict = if ok {
        "M reconstructed, every factor prime".to_string()
    } else {
        "M does not match its factorization".to_string()
    };
    let violation = (!ok).then(|| verdict.clone());
    Outcome {
        field: None,
        payload: Payload::VerifyM(report),
        lines,
        verdict,
        violation,
    }
}
