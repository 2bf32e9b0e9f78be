//! Command-line front end: field construction, code parameters, ideal
//! generation, basis computation, verification, and decoding, with stable
//! text output in either a human layout or line-oriented `key=value`
//! records for scripting.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::code::{new_code, CodeError, LinearCode};
use crate::crossing::{CrossingError, TermOrder};
use crate::decode::{
    decode, decode_via_leader_map, gb_codeword_coverage, minimal_support_codewords, word_at,
    DecodeError,
};
use crate::field::{build_field, FieldElement, FieldError, FieldSpec};
use crate::gbasis::{
    compute_reduced_gb, is_groebner, reduced_gb, verify_membership, Classification, GbError,
    GbOptions,
};
use crate::ideal::assemble_generators;
use crate::textio::{
    format_vector, parse_field_file, parse_matrix_file, parse_order_file, parse_vector_tokens,
    ParseError,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Field(#[from] FieldError),
    #[error("{0}")]
    Code(#[from] CodeError),
    #[error("{0}")]
    Gb(#[from] GbError),
    #[error("{0}")]
    Decode(#[from] DecodeError),
    #[error("{0}")]
    Order(#[from] CrossingError),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Input(String),
}

impl CliError {
    /// One-line machine-parsable reason, printed on exit code 1.
    pub fn reason_line(&self) -> String {
        let kind = match self {
            CliError::Field(FieldError::NotPrime(_)) => "NotPrime",
            CliError::Field(FieldError::NotIrreducible { .. }) => "NotIrreducible",
            CliError::Field(FieldError::NotPrimitive { .. }) => "NotPrimitive",
            CliError::Field(FieldError::TooLarge { .. }) => "TooLarge",
            CliError::Field(FieldError::MalformedPolynomial(_)) => "MalformedPolynomial",
            CliError::Field(FieldError::DivisionByZero) => "DivisionByZero",
            CliError::Code(CodeError::RankDeficient) => "RankDeficient",
            CliError::Code(CodeError::DimensionMismatch(_)) => "DimensionMismatch",
            CliError::Code(CodeError::TooLarge { .. }) => "TooLarge",
            CliError::Gb(GbError::TooLarge { .. }) => "TooLarge",
            CliError::Gb(GbError::InternalOrderViolation) => "InternalOrderViolation",
            CliError::Decode(DecodeError::ScanTooLarge { .. }) => "ScanTooLarge",
            CliError::Decode(DecodeError::TooLarge(_)) => "TooLarge",
            CliError::Order(_) => "BadOrder",
            CliError::Parse(_) => "ParseError",
            CliError::Io { .. } => "IoError",
            CliError::Input(_) => "BadInput",
        };
        format!("error={kind} detail=\"{self}\"")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Tables and labeled values for reading.
    Human,
    /// One `key=value` record per line for scripting.
    Lines,
}

#[derive(Debug, Parser)]
#[command(name = "codeal", version, about = "Binomial code ideals and deglex Groebner bases")]
pub struct RunConfig {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "human")]
    pub format: OutputFormat,
    /// Seed for all randomized verification sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    /// Field spec file: `p r` then modulus coefficients, low degree first.
    pub field: PathBuf,
    /// Matrix file: `n k` then k generator rows.
    pub matrix: PathBuf,
    /// Variable precedence file overriding the default order.
    #[arg(long)]
    pub order_file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the power and additive tables of a field.
    FieldInfo { field: PathBuf },
    /// Print n, k, minimum distance, and error-correcting capability.
    CodeInfo {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Emit the generating set of the code ideal, one binomial per line.
    MakeIdeal {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Compute the reduced Groebner basis; nonzero exit if the internal
    /// verification fails.
    Gb {
        #[command(flatten)]
        code: CodeArgs,
        /// Log every introduced term with its image and classification.
        #[arg(long)]
        trace: bool,
        /// Cap on the number of cosets.
        #[arg(long, default_value_t = 100_000)]
        coset_cap: u64,
        /// Emit validated scalar multiples of found binomials eagerly.
        #[arg(long)]
        eager: bool,
    },
    /// Decode received words, or sweep the whole space against the
    /// brute-force oracle with --all.
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        /// Received word, one element token per coordinate.
        #[arg(long, num_args = 1.., conflicts_with = "all")]
        word: Option<Vec<String>>,
        /// Exhaustive (or 10^4-sample) oracle-equivalence scan.
        #[arg(long)]
        all: bool,
    },
    /// Run the membership-identity and Buchberger verifications.
    Verify {
        #[command(flatten)]
        code: CodeArgs,
        /// Sample count for the randomized membership check.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Print the minimal-support codeword classes and basis coverage.
    Minsupp {
        #[command(flatten)]
        code: CodeArgs,
    },
}

/// Rendered output plus whether every internal check passed; the process
/// exit code is 0 only when `ok` holds.
#[derive(Debug)]
pub struct CommandOutput {
    pub text: String,
    pub ok: bool,
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Load and validate the field and matrix files.
pub fn parse_inputs(
    field_path: &PathBuf,
    matrix_path: &PathBuf,
) -> Result<(FieldSpec, LinearCode), CliError> {
    let (p, r, coeffs) = parse_field_file(&read(field_path)?, &field_path.display().to_string())?;
    let spec = build_field(p, r, &coeffs)?;
    let rows = parse_matrix_file(
        &read(matrix_path)?,
        &matrix_path.display().to_string(),
        &spec,
    )?;
    let code = new_code(spec.clone(), rows)?;
    Ok((spec, code))
}

fn load_order(args: &CodeArgs, code: &LinearCode) -> Result<TermOrder, CliError> {
    match &args.order_file {
        None => Ok(TermOrder::deglex_default(code.n(), code.q())),
        Some(path) => {
            let prec = parse_order_file(
                &read(path)?,
                &path.display().to_string(),
                code.n(),
                code.q(),
            )?;
            Ok(TermOrder::deglex_with_precedence(code.n(), code.q(), prec)?)
        }
    }
}

pub fn run(config: &RunConfig) -> Result<CommandOutput, CliError> {
    match &config.command {
        Command::FieldInfo { field } => field_info(config, field),
        Command::CodeInfo { code } => code_info(config, code),
        Command::MakeIdeal { code } => make_ideal(config, code),
        Command::Gb {
            code,
            trace,
            coset_cap,
            eager,
        } => gb_command(config, code, *trace, *coset_cap, *eager),
        Command::Decode { code, word, all } => decode_command(config, code, word.as_deref(), *all),
        Command::Verify { code, samples } => verify_command(config, code, *samples),
        Command::Minsupp { code } => minsupp_command(config, code),
    }
}

fn field_info(config: &RunConfig, field_path: &PathBuf) -> Result<CommandOutput, CliError> {
    let (p, r, coeffs) = parse_field_file(&read(field_path)?, &field_path.display().to_string())?;
    let spec = build_field(p, r, &coeffs)?;
    let q = spec.q();
    let mut out = String::new();
    let coeff_str = coeffs
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    match config.format {
        OutputFormat::Lines => {
            writeln!(out, "p={p}").unwrap();
            writeln!(out, "r={r}").unwrap();
            writeln!(out, "q={q}").unwrap();
            writeln!(out, "modulus={coeff_str}").unwrap();
            for j in 1..=q - 1 {
                let el = FieldElement::Pow(j);
                let cs = spec
                    .coeffs_of(el)
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                writeln!(out, "power_{j}={cs}").unwrap();
            }
            for u in 1..=q - 1 {
                for v in u..=q - 1 {
                    let sum = spec.add(
                        FieldElement::Pow(u),
                        FieldElement::Pow(v),
                    );
                    let w = sum.exponent().unwrap_or(0);
                    writeln!(out, "add_{u}_{v}={w}").unwrap();
                }
            }
        }
        OutputFormat::Human => {
            writeln!(out, "F_{q} = F_{p}[x]/(f), f = {coeff_str} (low degree first)").unwrap();
            writeln!(out, "g (the class of x) is primitive; g^{} = 1", q - 1).unwrap();
            writeln!(out, "powers:").unwrap();
            for j in 1..=q - 1 {
                let el = FieldElement::Pow(j);
                writeln!(out, "  g^{j} = {}", spec.format_element_poly(el)).unwrap();
            }
            writeln!(out, "additive table (w: g^u + g^v = g^w; 0: sum is zero):").unwrap();
            let mut header = String::from("T+ |");
            for v in 1..=q - 1 {
                write!(header, "{v:>3}").unwrap();
            }
            writeln!(out, "{header}").unwrap();
            for u in 1..=q - 1 {
                let mut row = format!("{u:>2} |");
                for v in 1..=q - 1 {
                    if v < u {
                        row.push_str("   ");
                    } else {
                        let sum = spec.add(
                            FieldElement::Pow(u),
                            FieldElement::Pow(v),
                        );
                        write!(row, "{:>3}", sum.exponent().unwrap_or(0)).unwrap();
                    }
                }
                writeln!(out, "{}", row.trim_end()).unwrap();
            }
        }
    }
    Ok(CommandOutput { text: out, ok: true })
}

fn code_info(config: &RunConfig, args: &CodeArgs) -> Result<CommandOutput, CliError> {
    let (_, code) = parse_inputs(&args.field, &args.matrix)?;
    let d = code.min_distance()?;
    let t = code.capability()?;
    let mut out = String::new();
    match config.format {
        OutputFormat::Lines => {
            writeln!(out, "n={}", code.n()).unwrap();
            writeln!(out, "k={}", code.k()).unwrap();
            writeln!(out, "q={}", code.q()).unwrap();
            writeln!(out, "d={d}").unwrap();
            writeln!(out, "t={t}").unwrap();
        }
        OutputFormat::Human => {
            writeln!(
                out,
                "[{},{}] code over F_{}: minimum distance {}, corrects {} errors",
                code.n(),
                code.k(),
                code.q(),
                d,
                t
            )
            .unwrap();
        }
    }
    Ok(CommandOutput { text: out, ok: true })
}

fn make_ideal(config: &RunConfig, args: &CodeArgs) -> Result<CommandOutput, CliError> {
    let (_, code) = parse_inputs(&args.field, &args.matrix)?;
    let ord = load_order(args, &code)?;
    let gens = assemble_generators(&code, &ord);
    let mut out = String::new();
    match config.format {
        OutputFormat::Lines => {
            writeln!(out, "row_binomials={}", gens.row_binomials.len()).unwrap();
            writeln!(out, "table_relations={}", gens.table_relations.len()).unwrap();
            for b in gens.all() {
                writeln!(out, "element={b}").unwrap();
            }
        }
        OutputFormat::Human => {
            writeln!(
                out,
                "generators of the ideal of the [{},{}] code over F_{} ({} total):",
                code.n(),
                code.k(),
                code.q(),
                gens.len()
            )
            .unwrap();
            writeln!(out, "{} row multiples:", gens.row_binomials.len()).unwrap();
            for b in &gens.row_binomials {
                writeln!(out, "  {b}").unwrap();
            }
            writeln!(out, "{} additive-table relations:", gens.table_relations.len()).unwrap();
            for b in &gens.table_relations {
                writeln!(out, "  {b}").unwrap();
            }
        }
    }
    Ok(CommandOutput { text: out, ok: true })
}

fn gb_command(
    config: &RunConfig,
    args: &CodeArgs,
    trace: bool,
    coset_cap: u64,
    eager: bool,
) -> Result<CommandOutput, CliError> {
    let (spec, code) = parse_inputs(&args.field, &args.matrix)?;
    let ord = load_order(args, &code)?;
    let opts = GbOptions {
        coset_cap,
        collect_trace: trace,
        eager_multiples: eager,
    };
    let result = compute_reduced_gb(&code, &ord, &opts)?;
    let gb = &result.basis;
    let gens = assemble_generators(&code, &ord);
    let check = is_groebner(gb, &gens) && gb.is_reduced();

    let mut out = String::new();
    let check_word = if check { "pass" } else { "fail" };
    match config.format {
        OutputFormat::Lines => {
            writeln!(out, "n={}", code.n()).unwrap();
            writeln!(out, "k={}", code.k()).unwrap();
            writeln!(out, "q={}", code.q()).unwrap();
            writeln!(out, "basis_size={}", gb.len()).unwrap();
            writeln!(out, "standard_count={}", gb.standard_monomials().len()).unwrap();
            writeln!(out, "groebner_check={check_word}").unwrap();
            for b in gb.elements() {
                writeln!(out, "element={b}").unwrap();
            }
            if let Some(tr) = &result.trace {
                for e in &tr.entries {
                    let kind = match &e.kind {
                        Classification::Standard => "standard".to_string(),
                        Classification::Emitted { trail } => format!("emitted|{trail}"),
                        Classification::SkippedMultiple => "skipped".to_string(),
                    };
                    writeln!(
                        out,
                        "trace={}|{}|{kind}",
                        e.term,
                        format_vector(&e.image, &spec)
                    )
                    .unwrap();
                }
            }
        }
        OutputFormat::Human => {
            writeln!(
                out,
                "reduced Groebner basis of the [{},{}] code over F_{}:",
                code.n(),
                code.k(),
                code.q()
            )
            .unwrap();
            writeln!(out, "basis elements: {}", gb.len()).unwrap();
            writeln!(out, "standard monomials: {}", gb.standard_monomials().len()).unwrap();
            writeln!(out, "groebner check: {check_word}").unwrap();
            for b in gb.elements() {
                writeln!(out, "  {b}").unwrap();
            }
            if let Some(tr) = &result.trace {
                writeln!(out, "trace:").unwrap();
                for e in &tr.entries {
                    let kind = match &e.kind {
                        Classification::Standard => "standard".to_string(),
                        Classification::Emitted { trail } => {
                            format!("basis element, trail {trail}")
                        }
                        Classification::SkippedMultiple => "skipped (lead multiple)".to_string(),
                    };
                    writeln!(
                        out,
                        "  introduce {}: image ({}) -> {kind}",
                        e.term,
                        format_vector(&e.image, &spec)
                    )
                    .unwrap();
                }
            }
        }
    }
    Ok(CommandOutput {
        text: out,
        ok: check,
    })
}

fn decode_command(
    config: &RunConfig,
    args: &CodeArgs,
    word: Option<&[String]>,
    all: bool,
) -> Result<CommandOutput, CliError> {
    if word.is_none() && !all {
        return Err(CliError::Input("pass --word <elements> or --all".into()));
    }
    let (spec, code) = parse_inputs(&args.field, &args.matrix)?;
    let ord = load_order(args, &code)?;
    let gb = reduced_gb(&code, &ord)?;
    let mut out = String::new();

    if let Some(tokens) = word {
        let y = parse_vector_tokens(tokens, &spec).map_err(CliError::Input)?;
        if y.len() != code.n() {
            return Err(CliError::Input(format!(
                "word has {} coordinates, code length is {}",
                y.len(),
                code.n()
            )));
        }
        let res = decode(&gb, &y);
        let via_map = decode_via_leader_map(&gb, &y);
        let agree = res == via_map;
        match config.format {
            OutputFormat::Lines => {
                writeln!(out, "received={}", format_vector(&res.received, &spec)).unwrap();
                writeln!(out, "error={}", format_vector(&res.error, &spec)).unwrap();
                writeln!(out, "codeword={}", format_vector(&res.codeword, &spec)).unwrap();
                writeln!(out, "weight={}", res.weight).unwrap();
                writeln!(out, "paths_agree={}", if agree { "pass" } else { "fail" }).unwrap();
            }
            OutputFormat::Human => {
                writeln!(out, "received: {}", format_vector(&res.received, &spec)).unwrap();
                writeln!(out, "error:    {}", format_vector(&res.error, &spec)).unwrap();
                writeln!(out, "codeword: {}", format_vector(&res.codeword, &spec)).unwrap();
                writeln!(out, "weight:   {}", res.weight).unwrap();
                if !agree {
                    writeln!(out, "paths_agree: fail").unwrap();
                }
            }
        }
        return Ok(CommandOutput { text: out, ok: agree });
    }

    // Oracle-equivalence sweep: exhaustive when q^n <= 10^4, otherwise
    // 10^4 seeded random words. Checks both decode paths against each
    // other and the decoded weight against the brute-force coset leader.
    let total_words = (0..code.n()).fold(1u64, |acc, _| acc.saturating_mul(code.q() as u64));
    let exhaustive = total_words <= 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let checked: u64 = if exhaustive { total_words } else { 10_000 };
    let mut mismatches = 0u64;
    for i in 0..checked {
        let idx = if exhaustive {
            i
        } else {
            rand::Rng::random_range(&mut rng, 0..total_words)
        };
        let y = word_at(&code, idx);
        let res = decode(&gb, &y);
        let via_map = decode_via_leader_map(&gb, &y);
        let leader = code.coset_leader_bruteforce(&y, &ord)?;
        if res != via_map || res.weight != leader.weight() || res.error != leader {
            mismatches += 1;
        }
    }
    let ok = mismatches == 0;
    writeln!(out, "mode={}", if exhaustive { "exhaustive" } else { "sampled" }).unwrap();
    writeln!(out, "checked={checked}").unwrap();
    writeln!(out, "mismatches={mismatches}").unwrap();
    writeln!(out, "result={}", if ok { "pass" } else { "fail" }).unwrap();
    Ok(CommandOutput { text: out, ok })
}

fn verify_command(
    config: &RunConfig,
    args: &CodeArgs,
    samples: usize,
) -> Result<CommandOutput, CliError> {
    let (_, code) = parse_inputs(&args.field, &args.matrix)?;
    let ord = load_order(args, &code)?;
    let gb = reduced_gb(&code, &ord)?;
    let gens = assemble_generators(&code, &ord);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let report = verify_membership(&code, &gb, samples, &mut rng);
    let groebner_ok = is_groebner(&gb, &gens) && gb.is_reduced();
    let t1 = if report.passed() { "pass" } else { "fail" };
    let sg = if groebner_ok { "pass" } else { "fail" };
    let mut out = String::new();
    writeln!(out, "theorem1={t1}").unwrap();
    writeln!(out, "sgroebner={sg}").unwrap();
    if config.format == OutputFormat::Lines {
        writeln!(out, "pairs_checked={}", report.pairs_checked).unwrap();
        writeln!(out, "elements_checked={}", report.elements_checked).unwrap();
    }
    Ok(CommandOutput {
        text: out,
        ok: report.passed() && groebner_ok,
    })
}

fn minsupp_command(config: &RunConfig, args: &CodeArgs) -> Result<CommandOutput, CliError> {
    let (spec, code) = parse_inputs(&args.field, &args.matrix)?;
    let ord = TermOrder::deglex_default(code.n(), code.q());
    let gb = reduced_gb(&code, &ord)?;
    let classes = minimal_support_codewords(&code)?;
    let coverage = gb_codeword_coverage(&gb, &code)?;
    let covered: std::collections::HashSet<Vec<usize>> = coverage
        .covered
        .iter()
        .map(|c| c.support.clone())
        .collect();
    let mut out = String::new();
    match config.format {
        OutputFormat::Lines => {
            writeln!(out, "classes={}", classes.len()).unwrap();
            for (i, class) in classes.iter().enumerate() {
                let sup = class
                    .support
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                let cov = if covered.contains(&class.support) {
                    "yes"
                } else {
                    "no"
                };
                writeln!(
                    out,
                    "class={} support={sup} size={} in_basis={cov}",
                    i + 1,
                    class.members.len()
                )
                .unwrap();
                for m in &class.members {
                    writeln!(out, "member={}", format_vector(m, &spec)).unwrap();
                }
            }
        }
        OutputFormat::Human => {
            writeln!(
                out,
                "minimal-support codeword classes of the [{},{}] code over F_{}:",
                code.n(),
                code.k(),
                code.q()
            )
            .unwrap();
            for (i, class) in classes.iter().enumerate() {
                let sup = class
                    .support
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                let cov = if covered.contains(&class.support) {
                    "covered by basis codewords"
                } else {
                    "not among basis codewords"
                };
                writeln!(
                    out,
                    "class {} (support {{{sup}}}, {} members, {cov}):",
                    i + 1,
                    class.members.len()
                )
                .unwrap();
                for m in &class.members {
                    writeln!(out, "  {}", format_vector(m, &spec)).unwrap();
                }
            }
        }
    }
    Ok(CommandOutput { text: out, ok: true })
}
