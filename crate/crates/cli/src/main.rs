//! `chainring`: build chain rings and simplex codes, print weight
//! distributions and Gray images, and run the verification suite.
//!
//! Exit codes: 0 success, 1 a verification check failed or I/O error,
//! 2 invalid input, 3 a size cap was hit, 4 empirical and predicted results differ.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use chainring::export::{matrix_to_text, write_gray_image};
use chainring::verify::{default_sweep, run_suite, Sweep};
use chainring::weights::{
    empirical_distribution, gray_image_distribution, is_trivial, predicted_distribution, predicted_gray_parameters,
    GrayParameters,
};
use chainring::{CodeFamily, Error, Family, Limits, Ring, RingSpec, SimplexCode, WeightDistribution, WeightKind};
use clap::{Args, Parser, Subcommand, ValueEnum};

const CODEWORD_ENV: &str = "CHAINRING_MAX_CODEWORDS";

#[derive(Parser)]
#[command(name = "chainring", version, about = "Simplex codes over finite chain rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a ring: parameters, elements and ideal chain.
    Ring {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Build a generator matrix and print its type.
    Construct {
        #[command(flatten)]
        code: CodeArgs,
        /// Write the matrix here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Weight distribution of a simplex code.
    Weights {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = KindArg::Hamming)]
        kind: KindArg,
        #[arg(long, group = "mode")]
        empirical: bool,
        #[arg(long, group = "mode")]
        predicted: bool,
        /// Compute both and compare (the default).
        #[arg(long, group = "mode")]
        both: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Gray image of a simplex code and its parameters.
    Gray {
        #[command(flatten)]
        code: CodeArgs,
        /// Write the image here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suite.
    Verify {
        /// TOML sweep file with `[[instance]]` tables.
        #[arg(long, conflicts_with = "default_sweep")]
        sweep: Option<PathBuf>,
        #[arg(long)]
        default_sweep: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        caps: CapArgs,
    },
}

#[derive(Args)]
struct RingArgs {
    /// Ring family: zps, gr or fqu.
    #[arg(long, default_value = "zps")]
    family: String,
    #[arg(short = 'p')]
    p: Option<u32>,
    #[arg(short = 'r', default_value_t = 1)]
    r: u32,
    #[arg(short = 's')]
    s: Option<u32>,
    /// Modulus coefficients, low to high, e.g. `1,1,1`.
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
    /// TOML ring spec; replaces the inline flags.
    #[arg(long)]
    ring_file: Option<PathBuf>,
}

#[derive(Args)]
struct CapArgs {
    #[arg(long)]
    max_elements: Option<u64>,
    #[arg(long)]
    max_codewords: Option<u64>,
    #[arg(long)]
    max_columns: Option<u64>,
}

#[derive(Args)]
struct CodeArgs {
    /// Code family.
    #[arg(value_enum, value_name = "CODE")]
    code_family: FamilyArg,
    #[arg(short = 'k')]
    k: u32,
    #[command(flatten)]
    ring: RingArgs,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Alpha,
    Beta,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Hamming,
    Homogeneous,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnsupportedSize { .. } | Error::SizeCapExceeded { .. } | Error::EnumerationCapExceeded { .. } => 3,
            Error::VerificationMismatch { .. } | Error::ParameterMismatch { .. } => 4,
            Error::Io(_) => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

impl CapArgs {
    fn limits(&self) -> Result<Limits, Failure> {
        let mut limits = Limits::default();
        if let Ok(v) = std::env::var(CODEWORD_ENV) {
            limits.max_codewords = v.trim().parse().map_err(|_| invalid(format!("{CODEWORD_ENV}={v:?} is not a count")))?;
        }
        if let Some(v) = self.max_elements {
            limits.max_elements = v;
        }
        if let Some(v) = self.max_codewords {
            limits.max_codewords = v;
        }
        if let Some(v) = self.max_columns {
            limits.max_columns = v;
        }
        if limits.max_elements == 0 || limits.max_codewords == 0 || limits.max_columns == 0 {
            return Err(invalid("caps must be positive"));
        }
        Ok(limits)
    }
}

impl RingArgs {
    fn spec(&self) -> Result<RingSpec, Failure> {
        if let Some(path) = &self.ring_file {
            let text = fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
            return Ok(RingSpec::from_toml(&text)?);
        }
        let family: Family = self.family.parse()?;
        let (Some(p), Some(s)) = (self.p, self.s) else {
            return Err(invalid("-p and -s are required (or --ring-file)"));
        };
        let spec = RingSpec { family, p, r: self.r, s, modulus: self.modulus.clone() };
        Ok(spec)
    }

    fn ring(&self, limits: &Limits) -> Result<Arc<Ring>, Failure> {
        Ok(Arc::new(Ring::with_cap(self.spec()?, limits.max_elements)?))
    }
}

impl CodeArgs {
    fn build(&self) -> Result<(SimplexCode, Limits), Failure> {
        let limits = self.caps.limits()?;
        let ring = self.ring.ring(&limits)?;
        let family = match self.code_family {
            FamilyArg::Alpha => CodeFamily::Alpha,
            FamilyArg::Beta => CodeFamily::Beta,
        };
        Ok((SimplexCode::new(ring, family, self.k, &limits)?, limits))
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_ring(ring: &RingArgs, caps: &CapArgs) -> Result<(), Failure> {
    let limits = caps.limits()?;
    let r = ring.ring(&limits)?;
    let mut out = String::new();
    out.push_str(&format!("ring: {}\n", r.spec()));
    out.push_str(&format!("p = {}\nr = {}\nq = {}\ns = {}\n|R| = {}\n", r.p(), r.r(), r.q(), r.s(), r.size()));
    if r.s() == 1 {
        out.push_str(&format!("the field F_{}\n", r.q()));
    }
    let shown: Vec<String> = r.elements().take(64).map(|x| r.pretty(x)).collect();
    let more = if r.size() > 64 { format!(" ... ({} more)", r.size() - 64) } else { String::new() };
    out.push_str(&format!("elements: {}{more}\n", shown.join(" ")));
    let chain: Vec<String> = (0..=r.s()).map(|j| (r.size() / r.q_pow(j)).to_string()).collect();
    out.push_str(&format!("ideals: {}\n", chain.join(" ⊃ ")));
    emit(&None, &out)
}

fn cmd_construct(code: &CodeArgs, out: &Option<PathBuf>) -> Result<(), Failure> {
    let (c, _) = code.build()?;
    emit(out, &matrix_to_text(c.generator()))?;
    println!("type {}", c.type_string());
    Ok(())
}

fn render(dist: &WeightDistribution, format: Format, ring: &str, family: CodeFamily, k: u32, note: Option<&str>) -> String {
    match format {
        Format::Csv => dist.to_csv(),
        Format::Json => dist.to_json(ring, family, k, note) + "\n",
        Format::Text => {
            let d = dist.min_distance().map_or("-".to_string(), |d| d.to_string());
            format!("{} n={} {}\nW(X,Y) = {}\nminimum {} weight {d}\n", dist.kind, dist.length, dist, dist.enumerator(), dist.kind)
        }
    }
}

fn cmd_weights(
    code: &CodeArgs,
    kind: KindArg,
    empirical: bool,
    predicted: bool,
    format: Format,
    out: &Option<PathBuf>,
) -> Result<(), Failure> {
    let (c, limits) = code.build()?;
    let kind = match kind {
        KindArg::Hamming => WeightKind::Hamming,
        KindArg::Homogeneous => WeightKind::Homogeneous,
    };
    let (family, k) = (c.family(), c.k());
    let spec = c.ring().spec().to_string();
    let note = is_trivial(family, k).then_some("trivial for k=1: the code is R itself");
    let want = (!empirical).then(|| predicted_distribution(family, kind, c.q() as u64, c.s(), k)).transpose()?;
    let found = (!predicted).then(|| empirical_distribution(&c, kind, &limits)).transpose()?;
    let mut text = String::new();
    if let (Some(note), Format::Text) = (note, format) {
        text.push_str(note);
        text.push('\n');
    }
    let shown = found.as_ref().or(want.as_ref()).expect("one mode is active");
    if format == Format::Text {
        if let (Some(w), Some(_)) = (&want, &found) {
            text.push_str(&format!("predicted {w}\n"));
        }
    }
    text.push_str(&render(shown, format, &spec, family, k, note));
    let verdict = match (&want, &found) {
        (Some(w), Some(f)) => Some(w.first_difference(f)),
        _ => None,
    };
    if let (Some(None), Format::Text) = (&verdict, format) {
        text.push_str("MATCH\n");
    }
    emit(out, &text)?;
    if let Some(Some((weight, expected, found))) = verdict {
        return Err(Error::VerificationMismatch { weight, expected, found }.into());
    }
    if let (Some(None), false) = (&verdict, format == Format::Text) {
        eprintln!("MATCH");
    }
    Ok(())
}

fn cmd_gray(code: &CodeArgs, out: &Option<PathBuf>) -> Result<(), Failure> {
    let (c, limits) = code.build()?;
    let predicted = predicted_gray_parameters(c.family(), c.q() as u64, c.s(), c.k())?;
    match out {
        Some(path) => {
            let mut file = io::BufWriter::new(fs::File::create(path)?);
            write_gray_image(c.generator(), &limits, &mut file)?;
            file.flush()?;
        }
        None => {
            let mut stdout = io::BufWriter::new(io::stdout().lock());
            write_gray_image(c.generator(), &limits, &mut stdout)?;
            stdout.flush()?;
        }
    }
    let summary = gray_image_distribution(&c, &limits)?;
    let found = GrayParameters {
        length: summary.distribution.length,
        size: summary.distinct,
        distance: summary.distribution.min_distance()?,
    };
    println!("{found}");
    if found != predicted {
        return Err(Failure { code: 4, message: format!("image parameters {found}, predicted {predicted}") });
    }
    let hom = predicted_distribution(c.family(), WeightKind::Homogeneous, c.q() as u64, c.s(), c.k())?;
    if let Some((weight, expected, found)) = hom.first_difference(&summary.distribution) {
        return Err(Error::VerificationMismatch { weight, expected, found }.into());
    }
    Ok(())
}

fn cmd_verify(sweep: &Option<PathBuf>, use_default: bool, format: Format, caps: &CapArgs) -> Result<(), Failure> {
    let limits = caps.limits()?;
    let sweep = match (sweep, use_default) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
            Sweep::from_toml(&text)?
        }
        (None, true) => default_sweep(),
        (None, false) => return Err(invalid("give --sweep FILE or --default-sweep")),
    };
    let report = run_suite(&sweep, &limits);
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    let failed = report.failures().count();
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Csv => {
            println!("name,instance,passed,detail");
            for r in &report.results {
                println!("{},{},{},{}", r.name, r.instance, r.passed, r.detail.replace(',', ";"));
            }
        }
        Format::Text => {
            for r in &report.results {
                println!("{r}");
            }
            println!("{} checks, {} passed, {failed} failed", report.results.len(), report.results.len() - failed);
        }
    }
    if failed > 0 {
        return Err(Failure { code: 1, message: format!("{failed} checks failed") });
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Ring { ring, caps } => cmd_ring(ring, caps),
        Command::Construct { code, out } => cmd_construct(code, out),
        Command::Weights { code, kind, empirical, predicted, both: _, format, out } => {
            cmd_weights(code, *kind, *empirical, *predicted, *format, out)
        }
        Command::Gray { code, out } => cmd_gray(code, out),
        Command::Verify { sweep, default_sweep, format, caps } => cmd_verify(sweep, *default_sweep, *format, caps),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
