//! The `zsurf` command line.
//!
//! Exit codes: 0 success, 1 a check failed, 2 malformed input.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::{quotient_size_1_0, standardness_report, surface_count, unknotting_report};
use crate::forms::{
    check_unknotting_condition, factor_out_z, standard_form, FormsError, HermMatrix, MatrixRecord, PolyMatrix,
};
use crate::homology::{h1_presentation, invariants, pk_module_ranks};
use crate::intmat::IntMatrix;
use crate::isometry::{
    decompose, decompose_11, decompose_definite, enumerate_orthogonal, eval_word, format_word, parse_word,
    random_realized_word, GeneratorToken, IsometryError, IsometryMatrix, SignClass, StdModuleContext,
};
use crate::laurent::LaurentPoly;
use crate::units::{classify_unit_group, disk_count, enumerate_unit_classes, UnitBounds};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "zsurf", version, about = "Exact algebra for immersed Z-surfaces")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    cmd: Top,
}

#[derive(Subcommand, Debug)]
enum Top {
    /// Unitary units modulo powers of t
    #[command(subcommand)]
    Units(UnitsCmd),
    /// Hermitian forms and the unknotting condition
    #[command(subcommand)]
    Forms(FormsCmd),
    /// Automorphisms of the standard boundary module
    #[command(subcommand)]
    Isometry(IsometryCmd),
    /// Twisted homology of the plumbed manifolds
    #[command(subcommand)]
    Homology(HomologyCmd),
    /// Disk and surface counts
    #[command(subcommand)]
    Classify(ClassifyCmd),
}

#[derive(Args, Debug, Clone, Copy)]
struct Shape {
    #[arg(long)]
    cpos: usize,
    #[arg(long)]
    cneg: usize,
    #[arg(long)]
    genus: usize,
}

#[derive(Args, Debug, Clone, Copy)]
struct Signs {
    #[arg(long)]
    cpos: usize,
    #[arg(long)]
    cneg: usize,
}

#[derive(Subcommand, Debug)]
enum UnitsCmd {
    /// Closed-form structure of U(Δ_n)/{t^k}
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Bounded search for unit classes, cross-checked against the closed form
    List {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long)]
        num_bound: Option<u64>,
        #[arg(long)]
        denom_power: Option<u32>,
        #[arg(long)]
        k_bound: Option<u32>,
    },
}

#[derive(Subcommand, Debug)]
enum FormsCmd {
    /// Print the standard form
    Standard {
        #[command(flatten)]
        shape: Shape,
    },
    /// Check size, hermitian symmetry, nondegeneracy and A(1) ≅ I_{c+,c-}
    CheckUnknotting {
        #[arg(long)]
        matrix: String,
        #[command(flatten)]
        signs: Signs,
        #[arg(long, default_value_t = 3)]
        entry_bound: usize,
    },
    /// Divide a hermitian matrix by z = 2 - t - t^-1
    FactorZ {
        #[arg(long)]
        matrix: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    General,
    Definite,
    Oneone,
}

#[derive(Subcommand, Debug)]
enum IsometryCmd {
    /// Write an isometry as realized generators times the image of an orthogonal matrix
    Decompose {
        #[arg(long)]
        matrix: String,
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_enum, default_value_t = Mode::General)]
        mode: Mode,
    },
    /// A seeded random word in the realized generators
    RandomWord {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        length: usize,
        #[command(flatten)]
        shape: Shape,
    },
    /// Evaluate a word to its integer matrix
    EvalWord {
        #[arg(long)]
        word: String,
        #[command(flatten)]
        shape: Shape,
    },
    /// All of O(c+, c-; Z) with entries bounded by the height
    EnumOrthogonal {
        #[command(flatten)]
        signs: Signs,
        #[arg(long)]
        height: usize,
    },
}

#[derive(Subcommand, Debug)]
enum HomologyCmd {
    /// Presentation of the first twisted homology
    Present {
        #[command(flatten)]
        shape: Shape,
    },
    /// Order, rank at t = 1 and filtration ranks
    Invariants {
        #[command(flatten)]
        shape: Shape,
        /// Alexander polynomial of a knot glued into the plumbing
        #[arg(long, allow_hyphen_values = true)]
        delta: Option<String>,
    },
}

fn parse_sign(s: &str) -> Result<SignClass, String> {
    match s {
        "+" | "+1" | "1" => Ok(SignClass::Plus),
        "-" | "-1" => Ok(SignClass::Minus),
        _ => Err(format!("sign must be + or -, got {s:?}")),
    }
}

#[derive(Subcommand, Debug)]
enum ClassifyCmd {
    /// Disks with one double point bounded by the twist knot with Δ_n
    Disks {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_sign)]
        sign: SignClass,
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        presentable: bool,
    },
    /// Surfaces sharing boundary and intersection form
    Surfaces {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        standard: bool,
    },
    /// Automorphisms modulo realized ones for one positive double point
    #[command(name = "quotient-10")]
    Quotient10 {
        #[arg(long, default_value_t = 10)]
        k_bound: usize,
    },
    /// Necessary conditions for a form to be standard, with an optional witness
    Standardness {
        #[arg(long)]
        matrix: String,
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        witness: Option<String>,
    },
    /// Unknotting report for A, or for B = zA
    Unknotting {
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        b: Option<String>,
        #[command(flatten)]
        signs: Signs,
        #[arg(long, default_value_t = 3)]
        entry_bound: usize,
    },
}

enum Failure {
    Malformed(String),
    Check(String),
}

impl From<IsometryError> for Failure {
    fn from(e: IsometryError) -> Self {
        match e {
            IsometryError::Shape { .. } | IsometryError::InvalidToken(_) | IsometryError::WrongContext(_) => {
                Failure::Malformed(e.to_string())
            }
            _ => Failure::Check(e.to_string()),
        }
    }
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
            ok: true,
        }
    }

    fn of<T: Serialize + std::fmt::Display>(v: &T) -> Self {
        Self::ok(v.to_string(), to_json(v))
    }
}

fn to_json<T: Serialize + ?Sized>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn read(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Malformed(format!("cannot read {path}: {e}")))
}

fn read_poly_matrix(path: &str) -> Result<PolyMatrix, Failure> {
    let rec: MatrixRecord = serde_json::from_str(&read(path)?)
        .map_err(|e| Failure::Malformed(format!("{path}: expected {{\"size\", \"rows\"}} matrix record: {e}")))?;
    PolyMatrix::from_record(&rec).map_err(|e| Failure::Malformed(format!("{path}: {e}")))
}

fn read_int_matrix(path: &str) -> Result<IntMatrix, Failure> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| Failure::Malformed(format!("{path}: expected a JSON array of integer rows: {e}")))
}

/// Word files hold either one token per line or a JSON token array.
fn read_word(path: &str) -> Result<Vec<GeneratorToken>, Failure> {
    let text = read(path)?;
    if text.trim_start().starts_with('[') {
        serde_json::from_str(&text).map_err(|e| Failure::Malformed(format!("{path}: {e}")))
    } else {
        parse_word(&text).map_err(|e| Failure::Malformed(format!("{path}: {e}")))
    }
}

fn matrix_text(m: &PolyMatrix) -> String {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
        .map(|r| format!("[{r}]"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn units(cmd: UnitsCmd) -> Result<Output, Failure> {
    match cmd {
        UnitsCmd::Classify { n } => {
            let c = classify_unit_group(n);
            let order = c.order();
            Ok(Output::ok(
                format!("n={n} classification={c}"),
                json!({ "n": n, "classification": c, "order": order }),
            ))
        }
        UnitsCmd::List {
            n,
            num_bound,
            denom_power,
            k_bound,
        } => {
            let d = UnitBounds::default();
            let r = enumerate_unit_classes(
                n,
                num_bound.unwrap_or(d.numerator_bound),
                denom_power.unwrap_or(d.denom_power_bound),
                k_bound.unwrap_or(d.k_bound),
            );
            let mut out = Output::of(&r);
            out.ok = r.consistent;
            Ok(out)
        }
    }
}

fn forms(cmd: FormsCmd) -> Result<Output, Failure> {
    match cmd {
        FormsCmd::Standard { shape } => {
            let s = standard_form(shape.cpos, shape.cneg, shape.genus);
            Ok(Output::ok(matrix_text(s.matrix()), to_json(&s.matrix().to_record())))
        }
        FormsCmd::CheckUnknotting {
            matrix,
            signs,
            entry_bound,
        } => {
            let a = read_poly_matrix(&matrix)?;
            let check = check_unknotting_condition(&a, signs.cpos, signs.cneg, entry_bound);
            let text: Vec<String> = check.rows.iter().map(ToString::to_string).collect();
            Ok(Output {
                text: text.join("\n"),
                json: json!({ "passed": check.passed(), "rows": check.rows, "witness": check.witness }),
                ok: check.passed(),
            })
        }
        FormsCmd::FactorZ { matrix } => {
            let b = read_poly_matrix(&matrix)?;
            let herm = HermMatrix::new(b).map_err(|e| Failure::Malformed(format!("{matrix}: {e}")))?;
            match factor_out_z(&herm) {
                Ok(a) => Ok(Output::ok(matrix_text(a.matrix()), to_json(&a.matrix().to_record()))),
                Err(e @ FormsError::NotDivisible { .. }) => Err(Failure::Check(e.to_string())),
                Err(e) => Err(Failure::Malformed(e.to_string())),
            }
        }
    }
}

fn word_json(word: &[GeneratorToken]) -> Value {
    to_json(word)
}

fn isometry(cmd: IsometryCmd) -> Result<Output, Failure> {
    match cmd {
        IsometryCmd::Decompose { matrix, shape, mode } => {
            let ctx = StdModuleContext::new(shape.cpos, shape.cneg, shape.genus);
            let m = read_int_matrix(&matrix)?;
            let f = IsometryMatrix::new(&ctx, m)?;
            match mode {
                Mode::General => {
                    let d = decompose(&f)?;
                    let text = format!("{}N = {}", format_word(&d.word), d.n.matrix());
                    Ok(Output::ok(
                        text,
                        json!({ "word": word_json(&d.word), "n": d.n.matrix() }),
                    ))
                }
                Mode::Definite => {
                    let (word, spw) = decompose_definite(&f)?;
                    let text = format!("{}# signed permutation\n{}", format_word(&word), format_word(&spw));
                    Ok(Output::ok(
                        text.trim_end(),
                        json!({ "word": word_json(&word), "signed_permutation": word_json(&spw) }),
                    ))
                }
                Mode::Oneone => {
                    let (word, signs) = decompose_11(&f)?;
                    let text = format!("{}# signs\n{}", format_word(&word), format_word(&signs));
                    Ok(Output::ok(
                        text.trim_end(),
                        json!({ "word": word_json(&word), "signs": word_json(&signs) }),
                    ))
                }
            }
        }
        IsometryCmd::RandomWord { seed, length, shape } => {
            let ctx = StdModuleContext::new(shape.cpos, shape.cneg, shape.genus);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let word = random_realized_word(&ctx, length, &mut rng);
            Ok(Output::ok(format_word(&word).trim_end(), word_json(&word)))
        }
        IsometryCmd::EvalWord { word, shape } => {
            let ctx = StdModuleContext::new(shape.cpos, shape.cneg, shape.genus);
            let w = read_word(&word)?;
            let m = eval_word(&w, &ctx)?;
            Ok(Output::ok(m.matrix().to_string(), to_json(m.matrix())))
        }
        IsometryCmd::EnumOrthogonal { signs, height } => {
            let all = enumerate_orthogonal(signs.cpos, signs.cneg, height);
            let mut text = format!("count={}", all.len());
            for n in &all {
                let _ = write!(text, "\n{}", n.matrix());
            }
            let mats: Vec<&IntMatrix> = all.iter().map(|n| n.matrix()).collect();
            Ok(Output::ok(text, json!({ "count": all.len(), "matrices": mats })))
        }
    }
}

fn homology(cmd: HomologyCmd) -> Result<Output, Failure> {
    match cmd {
        HomologyCmd::Present { shape } => {
            let p = h1_presentation(shape.genus, shape.cpos, shape.cneg);
            let ok = p.certificate.as_ref().is_none_or(|c| c.ok());
            let mut out = Output::of(&p);
            out.ok = ok;
            Ok(out)
        }
        HomologyCmd::Invariants { shape, delta } => {
            let p = h1_presentation(shape.genus, shape.cpos, shape.cneg);
            let inv = invariants(&p).map_err(|e| Failure::Check(e.to_string()))?;
            let mut text = inv.to_string();
            let mut js = json!({ "plumbed": inv });
            if let Some(d) = delta {
                let poly: LaurentPoly = d.parse().map_err(|e| Failure::Malformed(format!("--delta: {e}")))?;
                let pk = pk_module_ranks(shape.genus, shape.cpos, shape.cneg, &poly)
                    .map_err(|e| Failure::Malformed(format!("--delta: {e}")))?;
                let _ = write!(text, "\nwith knot: {pk}");
                js["with_knot"] = to_json(&pk);
            }
            Ok(Output {
                text,
                json: js,
                ok: inv.consistent(),
            })
        }
    }
}

fn classify(cmd: ClassifyCmd) -> Result<Output, Failure> {
    match cmd {
        ClassifyCmd::Disks { n, sign, presentable } => {
            let c = disk_count(n, sign, presentable);
            Ok(Output::ok(
                format!("n={n} sign={sign} presentable={presentable} count={c}"),
                json!({ "n": n, "sign": sign, "presentable": presentable, "count": c }),
            ))
        }
        ClassifyCmd::Surfaces { shape, standard } => Ok(Output::of(&surface_count(
            shape.cpos,
            shape.cneg,
            shape.genus,
            standard,
        ))),
        ClassifyCmd::Quotient10 { k_bound } => {
            let q = quotient_size_1_0(k_bound);
            Ok(Output::ok(format!("{}\n{q}", q.classes), to_json(&q)))
        }
        ClassifyCmd::Standardness { matrix, shape, witness } => {
            let lambda = read_poly_matrix(&matrix)?;
            let w = witness.as_deref().map(read_poly_matrix).transpose()?;
            let r = standardness_report(&lambda, shape.cpos, shape.cneg, shape.genus, w.as_ref());
            Ok(Output {
                text: r.to_string().trim_end().to_string(),
                json: to_json(&r),
                ok: r.passed(),
            })
        }
        ClassifyCmd::Unknotting {
            a,
            b,
            signs,
            entry_bound,
        } => {
            if a.is_none() && b.is_none() {
                return Err(Failure::Malformed("unknotting needs --a or --b".into()));
            }
            let a = a.as_deref().map(read_poly_matrix).transpose()?;
            let b = b.as_deref().map(read_poly_matrix).transpose()?;
            let r = unknotting_report(a.as_ref(), b.as_ref(), signs.cpos, signs.cneg, entry_bound);
            Ok(Output {
                text: r.to_string().trim_end().to_string(),
                json: to_json(&r),
                ok: r.verified(),
            })
        }
    }
}

/// Parses `argv` (program name first), runs the command and returns the exit
/// code with everything that should be printed.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    let result = match cli.cmd {
        Top::Units(c) => units(c),
        Top::Forms(c) => forms(c),
        Top::Isometry(c) => isometry(c),
        Top::Homology(c) => homology(c),
        Top::Classify(c) => classify(c),
    };
    match (result, cli.format) {
        (Ok(out), Format::Text) => (if out.ok { 0 } else { 1 }, format!("{}\n", out.text)),
        (Ok(out), Format::Json) => (
            if out.ok { 0 } else { 1 },
            format!(
                "{}\n",
                serde_json::to_string_pretty(&out.json).expect("values serialize")
            ),
        ),
        (Err(f), format) => {
            let (code, msg) = match f {
                Failure::Malformed(m) => (2, m),
                Failure::Check(m) => (1, m),
            };
            let text = match format {
                Format::Text => format!("error: {msg}\n"),
                Format::Json => format!("{}\n", json!({ "error": msg })),
            };
            (code, text)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &str) -> (i32, String) {
        run(std::iter::once("zsurf").chain(args.split_whitespace()))
    }

    #[test]
    fn negative_values_parse() {
        let (code, out) = go("units classify --n -9");
        assert_eq!(code, 0);
        assert_eq!(out, "n=-9 classification=Z4\n");
        let (code, out) = go("classify disks --n -1 --sign + --presentable true");
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("count=1"));
        let (code, _) = go("classify disks --n 3 --sign -");
        assert_eq!(code, 0);
    }

    #[test]
    fn malformed_is_two() {
        assert_eq!(go("units classify").0, 2);
        assert_eq!(go("classify disks --n 1 --sign x").0, 2);
        assert_eq!(go("forms factor-z --matrix /nonexistent.json").0, 2);
        assert_eq!(go("frobnicate").0, 2);
    }

    #[test]
    fn standard_text_and_json() {
        let (code, out) = go("forms standard --cpos 1 --cneg 0 --genus 0");
        assert_eq!((code, out.as_str()), (0, "[2 - t - t^-1]\n"));
        let (_, out) = go("forms standard --cpos 1 --cneg 0 --genus 0 --format json");
        let rec: MatrixRecord = serde_json::from_str(&out).unwrap();
        assert_eq!(rec.rows, vec![vec!["2 - t - t^-1".to_string()]]);
    }

    #[test]
    fn quotient_prints_two() {
        let (code, out) = go("classify quotient-10");
        assert_eq!(code, 0);
        assert!(out.starts_with("2\n"));
    }
}
