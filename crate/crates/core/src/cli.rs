//! Command-line front end.
//!
//! Exit codes: 0 when the verdict is pass, 1 when an algebraic law or claim
//! fails, 2 for unusable input (bad flags, unreadable files, unmet
//! preconditions).

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::constructions::{
    enumerate_lcrngs, product_ring, ring_homs, semidirect_null, validate_ring, zmod, CensusOptions,
    FiniteCommRing, RingHom,
};
use crate::format::{emit_structure, parse_structure, Document, Structure};
use crate::hlring::{diassociativity_report, from_lcrng, hl_halo, is_hl_commutative, validate_hlring};
use crate::ideals::{classify, enumerate_ideals, is_subrng, spectrum, GradedIdeal, Primality, SubrngMode};
use crate::integrality::graded_integral_witnesses;
use crate::kernel::{Elem, Subset};
use crate::lcrng::{decompose, left_identities, validate_lcrng, LcRng};
use crate::lyingover::{embed_check, verify_lying_over_all, LyingOverError};
use crate::violation::Axiom;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "lcrng", version, about = "Workbench for finite left commutative rngs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Format {
    #[default]
    Text,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Semidirect,
    Ring,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check every axiom of a structure file
    Verify { file: PathBuf },
    /// Print the grading R = R0 + R1 and each element's components
    Decompose {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List all ideals with their primality
    Ideals {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List the Hu-Liu prime ideals
    Spectrum {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Find monic relations for elements over a subrng
    Integral {
        file: PathBuf,
        #[arg(long)]
        subset: String,
        #[arg(long)]
        lenient: bool,
        #[arg(long)]
        max_degree: Option<usize>,
        /// Only this element (default: all)
        #[arg(long)]
        element: Option<Elem>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Verify lying-over for a subrng
    LyingOver {
        file: PathBuf,
        #[arg(long)]
        subset: String,
        #[arg(long)]
        lenient: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Build a structure and write it as JSON
    Construct {
        #[arg(long, value_enum, default_value = "semidirect")]
        family: Family,
        /// Ring spec such as zmod:4 or zmod:2xzmod:2
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: Option<String>,
        /// auto, id, reduce, proj:<i> or map:<i,j,...>
        #[arg(long, default_value = "auto")]
        phi: String,
        #[arg(long)]
        name: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Search all structures on an additive group
    Enumerate {
        /// Ring spec whose additive group is searched
        #[arg(long)]
        group: String,
        #[arg(long)]
        no_dedup: bool,
        #[arg(long)]
        max_candidates: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Turn a left commutative rng into a ring with the Hu-Liu product
    Bridge {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a ring with the Hu-Liu product
    HlVerify { file: PathBuf },
}

/// Outcome of one command, rendered as text or CSV.
#[derive(Debug, Default)]
pub struct Report {
    command: String,
    failed: bool,
    lines: Vec<String>,
    header: Option<String>,
    rows: Vec<String>,
    /// Written verbatim instead of the report, e.g. an emitted document.
    payload: Option<String>,
}

impl Report {
    fn new(command: String) -> Self {
        Report {
            command,
            ..Report::default()
        }
    }

    fn info(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    fn violation(&mut self, line: impl std::fmt::Display) {
        self.failed = true;
        self.lines.push(format!("violation: {line}"));
    }

    fn table(&mut self, header: &str) {
        self.header = Some(header.to_owned());
    }

    fn row(&mut self, row: String) {
        self.rows.push(row);
    }

    pub fn passed(&self) -> bool {
        !self.failed
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed {
            EXIT_FAIL
        } else {
            EXIT_PASS
        }
    }

    fn render(&self, format: Format) -> String {
        let mut out = String::new();
        if format == Format::Text {
            let _ = writeln!(out, "command: {}", self.command);
            let _ = writeln!(out, "verdict: {}", if self.failed { "fail" } else { "pass" });
            for l in &self.lines {
                let _ = writeln!(out, "{l}");
            }
        }
        if let Some(h) = &self.header {
            if format == Format::Text && !self.rows.is_empty() {
                out.push('\n');
            }
            let _ = writeln!(out, "{h}");
            for r in &self.rows {
                let _ = writeln!(out, "{r}");
            }
        }
        out
    }
}

/// Unusable input; maps to exit code 2.
#[derive(Debug)]
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<(Report, Format), InputError>;

/// Runs the workbench on `args` (program name first) and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let echo = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    match dispatch(cli.command, echo) {
        Ok((report, format)) => {
            let text = match &report.payload {
                Some(p) => p.clone(),
                None => report.render(format),
            };
            let _ = out.write_all(text.as_bytes());
            if report.payload.is_some() {
                // the verdict still goes somewhere visible
                let _ = err.write_all(report.render(Format::Text).as_bytes());
            }
            report.exit_code()
        }
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn dispatch(command: Command, echo: String) -> CmdResult {
    let mut report = Report::new(echo);
    match command {
        Command::Verify { file } => {
            verify(&read_document(&file)?, &mut report);
            Ok((report, Format::Text))
        }
        Command::Decompose { file, format } => {
            let Some(r) = load_lcrng(&file, &mut report)? else {
                return Ok((report, format));
            };
            let d = decompose(&r)?;
            report.info(format!("R0: {}", d.r0));
            report.info(format!("R1: {}", d.r1));
            report.table("element;comp0;comp1");
            for a in 0..r.order() {
                report.row(format!("{a};{};{}", d.comp0[a], d.comp1[a]));
            }
            Ok((report, format))
        }
        Command::Ideals { file, format } => {
            let Some(r) = load_lcrng(&file, &mut report)? else {
                return Ok((report, format));
            };
            let ideals = enumerate_ideals(&r);
            report.info(format!("{} ideals", ideals.len()));
            ideal_rows(&mut report, ideals.into_iter().map(|i| classify(&r, i)));
            Ok((report, format))
        }
        Command::Spectrum { file, format } => {
            let Some(r) = load_lcrng(&file, &mut report)? else {
                return Ok((report, format));
            };
            let spec = spectrum(&r);
            report.info(format!("{} Hu-Liu prime ideals", spec.len()));
            ideal_rows(&mut report, spec.primes.into_iter());
            Ok((report, format))
        }
        Command::Integral {
            file,
            subset,
            lenient,
            max_degree,
            element,
            format,
        } => {
            let Some(u) = load_lcrng(&file, &mut report)? else {
                return Ok((report, format));
            };
            let s = parse_subset(&subset, u.order())?;
            let mode = mode(lenient);
            is_subrng(&u, &s, mode).map_err(|v| InputError(format!("NotASubrng: {v}")))?;
            let max = max_degree.unwrap_or(u.order());
            let elements: Vec<Elem> = match element {
                Some(e) if e < u.order() => vec![e],
                Some(e) => return Err(InputError(format!("element {e} out of range"))),
                None => (0..u.order()).collect(),
            };
            report.table("element;degree0;coefficients0;degree1;coefficients1");
            for x in elements {
                let (w0, w1) = graded_integral_witnesses(&u, &s, x, max)?;
                let cell = |w: &Option<crate::integrality::IntegralWitness>| match w {
                    Some(w) => (w.degree.to_string(), list(&w.coefficients)),
                    None => ("none".to_owned(), String::new()),
                };
                let ((d0, c0), (d1, c1)) = (cell(&w0), cell(&w1));
                if w0.is_none() || w1.is_none() {
                    report.violation(format!("{x} is not graded integral up to degree {max}"));
                }
                report.row(format!("{x};{d0};{c0};{d1};{c1}"));
            }
            Ok((report, format))
        }
        Command::LyingOver {
            file,
            subset,
            lenient,
            format,
        } => {
            let Some(u) = load_lcrng(&file, &mut report)? else {
                return Ok((report, format));
            };
            let s = parse_subset(&subset, u.order())?;
            let pair = match embed_check(&u, &s, mode(lenient)) {
                Ok(p) => p,
                Err(LyingOverError::NotASubrng(v)) => {
                    return Err(InputError(format!("NotASubrng: {v}")))
                }
                Err(e @ LyingOverError::NotGradedIntegral { .. }) => {
                    return Err(InputError(format!("NotGradedIntegral: {e}")))
                }
                Err(e) => return Err(e.into()),
            };
            let lo = verify_lying_over_all(&pair);
            report.table("p;witnesses;maximal");
            for row in &lo.rows {
                if row.witnesses.is_empty() {
                    report.violation(format!("no prime of U lies over {}", row.p));
                }
                for m in &row.maximal {
                    if !m.lies_over {
                        report.violation(format!("maximal {} of T does not meet R in {}", m.q, row.p));
                    }
                    if !m.prime {
                        report.violation(format!("maximal {} of T over {} is not prime", m.q, row.p));
                    }
                    if !m.complement_closed {
                        report.violation(format!(
                            "maximal {} of T over {} has a complement that is not closed",
                            m.q, row.p
                        ));
                    }
                }
                report.row(format!(
                    "{};{};{}",
                    row.p.to_list_string(),
                    row.witnesses.iter().map(|q| q.to_list_string()).collect::<Vec<_>>().join("|"),
                    row.maximal.iter().map(|m| m.q.to_list_string()).collect::<Vec<_>>().join("|"),
                ));
            }
            report.info(format!("{} primes of R checked", lo.rows.len()));
            Ok((report, format))
        }
        Command::Construct {
            family,
            a,
            b,
            phi,
            name,
            output,
        } => {
            let ring_a = parse_ring_spec(&a)?;
            let doc = match family {
                Family::Ring => Document::ring(name.unwrap_or_else(|| a.clone()), &ring_a),
                Family::Semidirect => {
                    let b = b.ok_or_else(|| InputError("--b is required for semidirect".into()))?;
                    let ring_b = parse_ring_spec(&b)?;
                    let hom = parse_phi(&phi, &a, &ring_a, &ring_b)?;
                    let raw = semidirect_null(&ring_a, &ring_b, &hom)?;
                    let r = match validate_lcrng(raw) {
                        Ok(r) => r,
                        Err(e) => {
                            report.violation(e);
                            return Ok((report, Format::Text));
                        }
                    };
                    let mut doc = Document::lcrng(name.unwrap_or_else(|| format!("{a} ⋉ {b}")), &r);
                    doc.metadata.insert("family".into(), "semidirect_null".into());
                    doc.metadata.insert("a".into(), a.clone().into());
                    doc.metadata.insert("b".into(), b.clone().into());
                    doc.metadata.insert("phi".into(), serde_json::json!(hom.images()));
                    doc
                }
            };
            emit(doc, output, &mut report)?;
            Ok((report, Format::Text))
        }
        Command::Enumerate {
            group,
            no_dedup,
            max_candidates,
            format,
        } => {
            let ring = parse_ring_spec(&group)?;
            let defaults = CensusOptions::default();
            let options = CensusOptions {
                dedup: !no_dedup,
                max_candidates: max_candidates.or(defaults.max_candidates),
            };
            let found = enumerate_lcrngs(ring.group(), &options)?;
            report.info(format!("{} structures", found.len()));
            report.table("index;left_identity;left_identities;halo;local_identity");
            for (i, r) in found.iter().enumerate() {
                report.row(format!(
                    "{i};{};{};{};{}",
                    r.left_identity(),
                    left_identities(r).to_list_string(),
                    r.halo().to_list_string(),
                    r.local_identity()
                ));
            }
            Ok((report, format))
        }
        Command::Bridge { file, output } => {
            let Some(r) = load_lcrng(&file, &mut report)? else {
                return Ok((report, Format::Text));
            };
            match from_lcrng(&r) {
                Ok(h) => {
                    report.info(format!("halo: {}", hl_halo(&h)));
                    report.info("Hu-Liu commutative: yes");
                    let doc = Document::hlring(format!("{} (Hu-Liu)", document_name(&file)?), &h);
                    emit(doc, output, &mut report)?;
                }
                Err(e) => {
                    for v in e.violations() {
                        report.violation(v);
                    }
                }
            }
            Ok((report, Format::Text))
        }
        Command::HlVerify { file } => {
            let doc = read_document(&file)?;
            let Structure::HlRing(raw) = doc.structure else {
                return Err(InputError(format!("expected kind \"hlring\", found {:?}", doc.structure.kind())));
            };
            match validate_hlring(raw) {
                Ok(h) => {
                    report.info(format!("identity: {}", h.sigma()));
                    report.info(format!("halo: {}", hl_halo(&h)));
                    match is_hl_commutative(&h) {
                        Ok(()) => report.info("Hu-Liu commutative: yes"),
                        Err(v) => report.info(format!("Hu-Liu commutative: no ({v})")),
                    }
                    for s in diassociativity_report(&h) {
                        let status = match s.witness {
                            None => "holds".to_owned(),
                            Some([x, y, z]) => format!("fails at ({x},{y},{z})"),
                        };
                        report.info(format!("diassociative {}: {status}", s.identity.formula()));
                    }
                }
                Err(e) => report_errors(&mut report, e.violations(), &e),
            }
            Ok((report, Format::Text))
        }
    }
}

fn report_errors(report: &mut Report, violations: &[crate::violation::Violation], e: &dyn std::fmt::Display) {
    if violations.is_empty() {
        report.violation(e);
    }
    for v in violations {
        report.violation(v);
    }
}

fn verify(doc: &Document, report: &mut Report) {
    match &doc.structure {
        Structure::LcRng(raw) => match validate_lcrng(raw.clone()) {
            Ok(r) => {
                for axiom in LCRNG_AXIOMS {
                    report.info(format!("ok: {axiom}"));
                }
                report.info(format!("halo: {}", r.halo()));
                report.info(format!("local identity: {}", r.local_identity()));
                report.info(format!("left identities: {}", left_identities(&r)));
            }
            Err(e) => report_errors(report, e.violations(), &e),
        },
        Structure::HlRing(raw) => match validate_hlring(raw.clone()) {
            Ok(h) => {
                for axiom in HLRING_AXIOMS {
                    report.info(format!("ok: {axiom}"));
                }
                report.info(format!("halo: {}", hl_halo(&h)));
            }
            Err(e) => report_errors(report, e.violations(), &e),
        },
        Structure::Ring(raw) => match validate_ring(raw.group.clone(), raw.mul.clone(), raw.one) {
            Ok(_) => report.info("ok: commutative ring with identity"),
            Err(e) => match &e {
                crate::constructions::ConstructionError::Violations(v) => report_errors(report, v, &e),
                _ => report.violation(&e),
            },
        },
    }
}

const LCRNG_AXIOMS: &[Axiom] = &[
    Axiom::LeftDistributive,
    Axiom::RightDistributive,
    Axiom::MulAssociative,
    Axiom::LeftCommutative,
    Axiom::LeftIdentity,
    Axiom::TwoSidedIdentityExists,
    Axiom::HaloNotSubgroup,
    Axiom::EmptyHalo,
    Axiom::LocalMulOutsideHalo,
    Axiom::LocalMulUndefinedOnHalo,
    Axiom::LocalMulNotClosed,
    Axiom::LocalMulCommutative,
    Axiom::LocalMulAssociative,
    Axiom::LocalMulDistributive,
    Axiom::NoLocalIdentity,
    Axiom::LocalTriassociative,
];

const HLRING_AXIOMS: &[Axiom] = &[
    Axiom::BulletAssociative,
    Axiom::BulletDistributive,
    Axiom::BulletIdentity,
    Axiom::HuLiuDecomposition,
    Axiom::TriassociativeMixed,
    Axiom::TriassociativeRight,
    Axiom::TriassociativeLeft,
    Axiom::RarrowDistributive,
    Axiom::LarrowDistributive,
    Axiom::RarrowAssociative,
    Axiom::LarrowAssociative,
];

fn ideal_rows(report: &mut Report, ideals: impl Iterator<Item = GradedIdeal>) {
    report.table("subset;is_prime;components");
    for i in ideals {
        let prime = match i.prime {
            Primality::Prime => "true",
            Primality::NotPrime => "false",
            Primality::Unknown => "unknown",
        };
        report.row(format!(
            "{};{prime};{}/{}",
            i.carrier.to_list_string(),
            i.i0.to_list_string(),
            i.i1.to_list_string()
        ));
    }
}

fn list(xs: &[Elem]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn mode(lenient: bool) -> SubrngMode {
    if lenient {
        SubrngMode::Lenient
    } else {
        SubrngMode::Strict
    }
}

fn read_document(path: &PathBuf) -> Result<Document, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_structure(&text)?)
}

fn document_name(path: &PathBuf) -> Result<String, InputError> {
    Ok(read_document(path)?.name)
}

/// Loads and validates a left commutative rng; validation failures go into the
/// report and yield `None`.
fn load_lcrng(path: &PathBuf, report: &mut Report) -> Result<Option<LcRng>, InputError> {
    let doc = read_document(path)?;
    let Structure::LcRng(raw) = doc.structure else {
        return Err(InputError(format!(
            "expected kind \"lcrng\", found {:?}",
            doc.structure.kind()
        )));
    };
    match validate_lcrng(raw) {
        Ok(r) => Ok(Some(r)),
        Err(e) => {
            report_errors(report, e.violations(), &e);
            Ok(None)
        }
    }
}

fn emit(doc: Document, output: Option<PathBuf>, report: &mut Report) -> Result<(), InputError> {
    let text = emit_structure(&doc);
    match output {
        Some(path) => {
            std::fs::write(&path, &text)
                .map_err(|e| InputError(format!("cannot write {}: {e}", path.display())))?;
            report.info(format!("wrote {}", path.display()));
        }
        None => report.payload = Some(text),
    }
    Ok(())
}

/// Parses `i,j,k`: ascending, distinct, each below `order`.
pub fn parse_subset(text: &str, order: usize) -> Result<Subset, String> {
    let mut prev: Option<usize> = None;
    let mut s = Subset::empty(order);
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let i: usize = part
            .parse()
            .map_err(|_| format!("subset entry {part:?} is not an index"))?;
        if i >= order {
            return Err(format!("subset entry {i} is not below the order {order}"));
        }
        if prev.is_some_and(|p| p >= i) {
            return Err(format!("subset must be strictly ascending at {i}"));
        }
        prev = Some(i);
        s.insert(i);
    }
    Ok(s)
}

/// `zmod:N` factors joined by `x`, e.g. `zmod:2xzmod:2`.
pub fn parse_ring_spec(spec: &str) -> Result<FiniteCommRing, String> {
    let mut ring: Option<FiniteCommRing> = None;
    for factor in spec.split('x') {
        let n: usize = factor
            .strip_prefix("zmod:")
            .and_then(|n| n.parse().ok())
            .filter(|n| (1..=crate::kernel::MAX_ORDER).contains(n))
            .ok_or_else(|| format!("bad ring spec {factor:?}; expected zmod:<n>"))?;
        let f = zmod(n);
        ring = Some(match ring {
            None => f,
            Some(r) => product_ring(&r, &f).map_err(|e| e.to_string())?,
        });
    }
    ring.ok_or_else(|| "empty ring spec".to_owned())
}

fn factor_orders(spec: &str) -> Vec<usize> {
    spec.split('x')
        .filter_map(|f| f.strip_prefix("zmod:").and_then(|n| n.parse().ok()))
        .collect()
}

/// Reads a homomorphism spec (`auto`, `id`, `reduce`, `proj:<i>`, `map:<i,j,...>`);
/// `a_spec` is the ring spec `a` was built from, used by `proj`.
pub fn parse_phi(
    spec: &str,
    a_spec: &str,
    a: &FiniteCommRing,
    b: &FiniteCommRing,
) -> Result<RingHom, String> {
    let images: Vec<Elem> = if spec == "auto" {
        return ring_homs(a, b)
            .into_iter()
            .next()
            .ok_or_else(|| "no unital homomorphism A → B exists".to_owned());
    } else if spec == "id" {
        (0..a.order()).collect()
    } else if spec == "reduce" {
        (0..a.order()).map(|x| x % b.order()).collect()
    } else if let Some(i) = spec.strip_prefix("proj:") {
        let i: usize = i.parse().map_err(|_| format!("bad projection {spec:?}"))?;
        let orders = factor_orders(a_spec);
        if i >= orders.len() {
            return Err(format!("projection index {i} out of range"));
        }
        let stride: usize = orders[..i].iter().product();
        (0..a.order()).map(|x| (x / stride) % orders[i]).collect()
    } else if let Some(m) = spec.strip_prefix("map:") {
        m.split(',')
            .map(|p| p.trim().parse().map_err(|_| format!("bad map entry {p:?}")))
            .collect::<Result<_, _>>()?
    } else {
        return Err(format!("unknown homomorphism spec {spec:?}"));
    };
    RingHom::new(a, b, images).map_err(|e| e.to_string())
}
