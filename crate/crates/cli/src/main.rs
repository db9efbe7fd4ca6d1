//! Command-line front end for the `modular_braid` library.
//!
//! Matrices are written row-major as `a b c d`; words as space-separated
//! letters with optional exponents (`A^-3 B A^2`, `a b^-1`, `g1 g2^-1`).
//! With `--json` every input and output uses the JSON forms instead.

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use modular_braid::braid::{braid_equal, sigma};
use modular_braid::derived::{derived_member, f_in_free_gens, f_matrix, factor_derived};
use modular_braid::halfplane::{emit_tiling_svg, reduce_point, HPoint, SvgOptions, DEFAULT_TOL};
use modular_braid::presentation::{abelianize, abelianize_proj, word_of_matrix, AbClass};
use modular_braid::verify::{verify_presentation, DEFAULT_MAX_LEN, DEFAULT_SAMPLES};
use modular_braid::weierstrass::{wp, TorusPoint, WpReport};
use modular_braid::{BraidWord, FreeWord, GenWord, Mat2Z, ProjMat};
use serde_json::{json, Value};

const SEED_VAR: &str = "MODULAR_BRAID_SEED";

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] modular_braid::Error),

    #[error("parse error in {what} ({input:?}): {reason}")]
    Arg { what: &'static str, input: String, reason: String },

    #[error("invalid JSON input at line {line}, column {column}: {reason}")]
    Json { line: usize, column: usize, reason: String },

    #[error("{0}")]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(e) if !e.is_parse() => 1,
            CliError::Io(_) => 1,
            _ => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "modular-braid", version, about = "Exact computations in SL(2,Z), B3 and the modular torus")]
struct Cli {
    /// Read and write JSON forms instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a word in A, B to its matrix.
    MatrixOfWord {
        /// Word such as "A B^-1 A"; read from stdin if omitted.
        #[arg(allow_hyphen_values = true)]
        word: Option<String>,
    },
    /// A word in A, B evaluating exactly to the matrix "a b c d".
    WordOfMatrix {
        #[arg(allow_hyphen_values = true)]
        matrix: Option<String>,
    },
    /// Image of a braid word in a, b under sigma(a) = A, sigma(b) = B.
    BraidEval {
        #[arg(allow_hyphen_values = true)]
        word: Option<String>,
    },
    /// Decide equality of two braid words in B3.
    BraidEqual {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Class of a matrix in Z/12, or Z/6 with --psl.
    Abelianize {
        #[arg(allow_hyphen_values = true)]
        matrix: Option<String>,
        /// Abelianize in PSL(2,Z).
        #[arg(long)]
        psl: bool,
    },
    /// The matrix f_n = A^-(n+3) X A^n.
    FMatrix {
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// A word in g1 = f_-2, g2 = f_-1 evaluating to f_n.
    FFree {
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// Whether a matrix lies in the derived subgroup.
    DerivedMember {
        #[arg(allow_hyphen_values = true)]
        matrix: Option<String>,
    },
    /// The reduced word in g1, g2 for a derived-subgroup matrix.
    DerivedFactor {
        #[arg(allow_hyphen_values = true)]
        matrix: Option<String>,
    },
    /// Reduce a point of the upper half-plane to the standard domain.
    ///
    /// Prints the reduced point and a word w with w(z) equal to it.
    ReducePoint {
        /// `<re> <im>`, or one JSON object {"re": .., "im": ..} with --json.
        #[arg(allow_negative_numbers = true, num_args = 1..=2, required = true)]
        point: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Seeded randomized checks of the presentation and the braid word problem.
    VerifyPresentation {
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Defaults to $MODULAR_BRAID_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_MAX_LEN)]
        max_len: usize,
    },
    /// Write an SVG of the domains B_n and their images under short free words.
    HexagonSvg {
        /// Inclusive range `a..b` of domain indices.
        #[arg(long, default_value = "-2..3", allow_hyphen_values = true)]
        range: String,
        /// Maximum length of the free words whose images are drawn.
        #[arg(long, default_value_t = 1)]
        depth: usize,
        out: PathBuf,
    },
    /// Weierstrass p for the Gaussian lattice at z = re + i im.
    WpEval {
        /// `<re> <im>`, or one JSON object {"re": .., "im": ..} with --json.
        #[arg(allow_negative_numbers = true, num_args = 1..=2, required = true)]
        point: Vec<String>,
        #[arg(long, default_value_t = 60)]
        radius: u32,
    },
    /// Run every Weierstrass-p check and report the measurements.
    WpReport {
        #[arg(long, default_value_t = 60)]
        radius: u32,
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            drop(out);
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// Positional payload, or all of stdin when absent.
fn payload(arg: Option<String>) -> Result<String> {
    match arg {
        Some(s) => Ok(s),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s.trim().to_string())
        }
    }
}

fn parse_json(s: &str) -> Result<Value> {
    serde_json::from_str(s).map_err(|e| CliError::Json {
        line: e.line(),
        column: e.column(),
        reason: e.to_string(),
    })
}

struct Io {
    json: bool,
}

impl Io {
    fn matrix(&self, arg: Option<String>) -> Result<Mat2Z> {
        let s = payload(arg)?;
        Ok(if self.json { Mat2Z::from_json(&parse_json(&s)?)? } else { s.parse()? })
    }

    fn gen_word(&self, arg: Option<String>) -> Result<GenWord> {
        let s = payload(arg)?;
        Ok(if self.json { GenWord::from_json(&parse_json(&s)?)? } else { s.parse()? })
    }

    fn braid_word(&self, s: &str) -> Result<BraidWord> {
        Ok(if self.json { BraidWord::from_json(&parse_json(s)?)? } else { s.parse()? })
    }

    fn point(&self, args: &[String]) -> Result<(f64, f64)> {
        let number = |what: &'static str, s: &str| {
            s.parse::<f64>().map_err(|e| CliError::Arg { what, input: s.to_string(), reason: e.to_string() })
        };
        match (self.json, args) {
            (false, [re, im]) => Ok((number("real part", re)?, number("imaginary part", im)?)),
            (true, [obj]) => {
                let v = parse_json(obj)?;
                let field = |k: &str| {
                    v.get(k).and_then(Value::as_f64).ok_or_else(|| CliError::Arg {
                        what: "point",
                        input: obj.clone(),
                        reason: format!("expected a number field {k:?}"),
                    })
                };
                Ok((field("re")?, field("im")?))
            }
            _ => Err(CliError::Arg {
                what: "point",
                input: args.join(" "),
                reason: if self.json {
                    "expected one JSON object {\"re\": .., \"im\": ..}".into()
                } else {
                    "expected `<re> <im>`".into()
                },
            }),
        }
    }
}

fn bool_line(json: bool, key: &str, b: bool) -> String {
    if json {
        json!({ key: b }).to_string()
    } else {
        b.to_string()
    }
}

fn class_json(c: AbClass) -> Value {
    json!({ "value": c.value(), "modulus": c.modulus() })
}

fn point_json(z: HPoint) -> Value {
    json!({ "re": z.re(), "im": z.im() })
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>> {
    let bad = |reason: &str| CliError::Arg { what: "range", input: s.to_string(), reason: reason.to_string() };
    let (a, b) = s.split_once("..").ok_or_else(|| bad("expected `a..b`"))?;
    let a: i64 = a.trim().parse().map_err(|_| bad("start is not an integer"))?;
    let b: i64 = b.trim().parse().map_err(|_| bad("end is not an integer"))?;
    Ok(a..=b)
}

fn seed_from_env() -> Result<u64> {
    match std::env::var(SEED_VAR) {
        Ok(s) => s.trim().parse().map_err(|_| CliError::Arg {
            what: SEED_VAR,
            input: s,
            reason: "expected an unsigned integer".into(),
        }),
        Err(_) => Ok(0),
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8> {
    let io = Io { json: cli.json };
    let json = cli.json;
    let matrix_out = |m: &Mat2Z| if json { m.to_json().to_string() } else { m.to_string() };

    match cli.command {
        Command::MatrixOfWord { word } => {
            writeln!(out, "{}", matrix_out(&io.gen_word(word)?.eval()))?;
        }
        Command::WordOfMatrix { matrix } => {
            let w = word_of_matrix(&io.matrix(matrix)?);
            writeln!(out, "{}", if json { w.to_json().to_string() } else { w.to_string() })?;
        }
        Command::BraidEval { word } => {
            let w = io.braid_word(&payload(word)?)?;
            writeln!(out, "{}", matrix_out(&sigma(&w)))?;
        }
        Command::BraidEqual { u, v } => {
            let (u, v) = (io.braid_word(&u)?, io.braid_word(&v)?);
            writeln!(out, "{}", bool_line(json, "equal", braid_equal(&u, &v)))?;
        }
        Command::Abelianize { matrix, psl } => {
            let m = io.matrix(matrix)?;
            let c = if psl { abelianize_proj(&ProjMat::new(m)) } else { abelianize(&m) };
            writeln!(out, "{}", if json { class_json(c).to_string() } else { c.to_string() })?;
        }
        Command::FMatrix { n } => {
            writeln!(out, "{}", matrix_out(&f_matrix(n)))?;
        }
        Command::FFree { n } => {
            let w = f_in_free_gens(n);
            writeln!(out, "{}", if json { w.to_json().to_string() } else { w.to_string() })?;
        }
        Command::DerivedMember { matrix } => {
            let m = io.matrix(matrix)?;
            writeln!(out, "{}", bool_line(json, "member", derived_member(&m)))?;
        }
        Command::DerivedFactor { matrix } => {
            let w: FreeWord = factor_derived(&io.matrix(matrix)?)?;
            writeln!(out, "{}", if json { w.to_json().to_string() } else { w.to_string() })?;
        }
        Command::ReducePoint { point, tol } => {
            let (re, im) = io.point(&point)?;
            let (z, w) = reduce_point(HPoint::new(re, im)?, tol)?;
            if json {
                writeln!(out, "{}", json!({ "point": point_json(z), "word": w.to_json()["word"] }))?;
            } else {
                writeln!(out, "{z}\n{w}")?;
            }
        }
        Command::VerifyPresentation { samples, seed, max_len } => {
            let seed = match seed {
                Some(s) => s,
                None => seed_from_env()?,
            };
            let report = verify_presentation(samples, seed, max_len);
            if json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                let n = report.samples;
                writeln!(out, "seed {}", report.seed)?;
                writeln!(out, "samples {n}")?;
                writeln!(out, "relators_exact {}", report.relators_exact)?;
                for (name, k) in [
                    ("relator_insertion", report.relator_insertion),
                    ("surjectivity", report.surjectivity),
                    ("abelian_hom", report.abelian_hom),
                    ("sigma_hom", report.sigma_hom),
                    ("centrality", report.centrality),
                ] {
                    writeln!(out, "{name} {k}/{n}")?;
                }
                writeln!(out, "ok {}", report.all_passed())?;
            }
            if !report.all_passed() {
                return Ok(1);
            }
        }
        Command::HexagonSvg { range, depth, out: path } => {
            let range = parse_range(&range)?;
            let mut file = BufWriter::new(File::create(&path)?);
            emit_tiling_svg(range, depth, &SvgOptions::default(), &mut file)?;
            file.flush()?;
            if json {
                writeln!(out, "{}", json!({ "written": path.display().to_string() }))?;
            } else {
                writeln!(out, "{}", path.display())?;
            }
        }
        Command::WpEval { point, radius } => {
            let (re, im) = io.point(&point)?;
            let w = wp(TorusPoint::new(re, im), radius);
            writeln!(out, "{}", if json { w.to_json().to_string() } else { w.to_string() })?;
        }
        Command::WpReport { radius, tol } => {
            let r = WpReport::run(radius, tol);
            if json {
                writeln!(out, "{}", r.to_json())?;
            } else {
                writeln!(out, "radius {radius}")?;
                writeln!(out, "tol {tol}")?;
                for (name, w) in [("e_m", r.half.e_m), ("e_n", r.half.e_n), ("e_p", r.half.e_p)] {
                    writeln!(out, "{name} {} {}", w.re, w.im)?;
                }
                writeln!(out, "half_values_ok {}", r.half_values_ok)?;
                writeln!(out, "symmetry_error {:e}", r.symmetry.max())?;
                writeln!(out, "max_axis_error {:e}", r.axes.max_axis_error())?;
                for i in &r.axes.images {
                    writeln!(
                        out,
                        "axis {} stated {} error {:e} observed {}",
                        i.axis.name(),
                        i.stated.name(),
                        i.stated_error,
                        i.observed.map_or("none", |h| h.name())
                    )?;
                }
                for res in &r.half_turns.results {
                    writeln!(
                        out,
                        "half_turn {} {} -> {} {}",
                        res.claim.label,
                        res.claim.source.name(),
                        res.claim.target.name(),
                        if res.ok { "ok" } else { "FAILED" }
                    )?;
                }
                writeln!(out, "half_turn_ok A {} B {}", r.half_turns.ok_for("A"), r.half_turns.ok_for("B"))?;
            }
        }
    }
    Ok(0)
}
