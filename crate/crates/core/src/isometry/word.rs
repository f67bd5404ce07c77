//! Text form of generator words and seeded random generation.
//!
//! One token per line: `scale_t i=1 k=-2`, `p i=1 i2=3 inv`, `q i=2 j=3`,
//! `sp rows=[[1,1],[0,1]]`, `neg i=1`, `perm sigma=[2,1,3] class=+`.

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use super::gen::{symplectic_j, GenKind, GeneratorToken, SignClass};
use super::orthogonal::{enumerate_orthogonal, IntOrthogonal};
use super::StdModuleContext;
use crate::intmat::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct WordParseError {
    pub line: usize,
    pub message: String,
}

fn fmt_list(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(","))
}

impl std::fmt::Display for GeneratorToken {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.kind {
            GenKind::ScaleT { i, k } => write!(f, "scale_t i={i} k={k}")?,
            GenKind::Pmove { i, i2 } => write!(f, "p i={i} i2={i2}")?,
            GenKind::Qmove { i, j } => write!(f, "q i={i} j={j}")?,
            GenKind::SpMove { a } => write!(f, "sp rows={a}")?,
            GenKind::NegX { i } => write!(f, "neg i={i}")?,
            GenKind::PermX { sigma, class } => write!(f, "perm sigma={} class={class}", fmt_list(sigma))?,
        }
        if self.inverse {
            f.write_str(" inv")?;
        }
        Ok(())
    }
}

pub fn format_word(word: &[GeneratorToken]) -> String {
    word.iter().map(|t| format!("{t}\n")).collect()
}

/// Splits on whitespace that is not inside brackets.
fn fields(line: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for ch in line.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            _ => {}
        }
        if ch.is_whitespace() {
            if depth == 0 && !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
            continue;
        }
        cur.push(ch);
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

pub fn parse_token(line: &str) -> Result<GeneratorToken, String> {
    let f = fields(line);
    let (name, rest) = f.split_first().ok_or("empty token")?;
    let mut inverse = false;
    let mut kv: Vec<(&str, &str)> = Vec::new();
    for item in rest {
        if item == "inv" {
            inverse = true;
            continue;
        }
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got {item:?}"))?;
        kv.push((k, v));
    }
    let get = |key: &str| -> Result<&str, String> {
        kv.iter()
            .find(|(k, _)| *k == key)
            .map(|(_, v)| *v)
            .ok_or_else(|| format!("{name} is missing {key}="))
    };
    let num = |key: &str| -> Result<usize, String> {
        get(key)?
            .parse::<usize>()
            .map_err(|_| format!("{key} must be a positive integer"))
    };
    let expect_keys = |keys: &[&str]| -> Result<(), String> {
        match kv.iter().find(|(k, _)| !keys.contains(k)) {
            Some((k, _)) => Err(format!("unknown key {k:?} for {name}")),
            None => Ok(()),
        }
    };
    let kind = match name.as_str() {
        "scale_t" => {
            expect_keys(&["i", "k"])?;
            let k = get("k")?
                .parse::<i64>()
                .map_err(|_| "k must be an integer".to_string())?;
            GenKind::ScaleT { i: num("i")?, k }
        }
        "p" => {
            expect_keys(&["i", "i2"])?;
            GenKind::Pmove {
                i: num("i")?,
                i2: num("i2")?,
            }
        }
        "q" => {
            expect_keys(&["i", "j"])?;
            GenKind::Qmove {
                i: num("i")?,
                j: num("j")?,
            }
        }
        "sp" => {
            expect_keys(&["rows"])?;
            let rows: Vec<Vec<i64>> =
                serde_json::from_str(get("rows")?).map_err(|e| format!("rows is not an integer matrix: {e}"))?;
            if rows.iter().any(|r| r.len() != rows.len()) {
                return Err("sp rows must form a square matrix".into());
            }
            GenKind::SpMove {
                a: IntMatrix::from_rows_i64(&rows),
            }
        }
        "neg" => {
            expect_keys(&["i"])?;
            GenKind::NegX { i: num("i")? }
        }
        "perm" => {
            expect_keys(&["sigma", "class"])?;
            let sigma: Vec<usize> =
                serde_json::from_str(get("sigma")?).map_err(|e| format!("sigma is not an index list: {e}"))?;
            let class = match get("class")? {
                "+" => SignClass::Plus,
                "-" => SignClass::Minus,
                other => return Err(format!("class must be + or -, got {other:?}")),
            };
            GenKind::PermX { sigma, class }
        }
        other => return Err(format!("unknown generator {other:?}")),
    };
    Ok(GeneratorToken { kind, inverse })
}

/// Parses one token per line; blank lines and `#` comments are skipped.
pub fn parse_word(text: &str) -> Result<Vec<GeneratorToken>, WordParseError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(n, l)| parse_token(l).map_err(|message| WordParseError { line: n + 1, message }))
        .collect()
}

/// A product of one to three symplectic transvections `x -> x + a ω(v, x) v`.
pub fn random_symplectic<R: Rng + ?Sized>(g: usize, rng: &mut R) -> IntMatrix {
    let dim = 2 * g;
    let j = symplectic_j(g);
    let mut a = IntMatrix::identity(dim);
    for _ in 0..rng.gen_range(1..=3) {
        let mut v: Vec<i64> = (0..dim).map(|_| rng.gen_range(-1..=1)).collect();
        if v.iter().all(|&x| x == 0) {
            v[rng.gen_range(0..dim)] = 1;
        }
        let s: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
        let col = IntMatrix::from_rows_i64(&v.iter().map(|&x| vec![x]).collect::<Vec<_>>());
        let outer = &(&col * &col.transpose()) * &j;
        let t = &IntMatrix::identity(dim) + &outer.scale(&s.into());
        a = &a * &t;
    }
    a
}

/// A random word in the realized generators (ScaleT, p, q, Sp) of `ctx`.
pub fn random_realized_word<R: Rng + ?Sized>(
    ctx: &StdModuleContext,
    length: usize,
    rng: &mut R,
) -> Vec<GeneratorToken> {
    let (c, g) = (ctx.c(), ctx.genus());
    let mut kinds: Vec<u8> = Vec::new();
    if c >= 1 {
        kinds.push(0);
    }
    if c >= 2 {
        kinds.push(1);
    }
    if c >= 1 && g >= 1 {
        kinds.push(2);
    }
    if g >= 1 {
        kinds.push(3);
    }
    if kinds.is_empty() {
        return Vec::new();
    }
    (0..length)
        .map(|_| {
            let kind = match kinds[rng.gen_range(0..kinds.len())] {
                0 => {
                    let mut k = rng.gen_range(-3..=2);
                    if k >= 0 {
                        k += 1;
                    }
                    GenKind::ScaleT {
                        i: rng.gen_range(1..=c),
                        k,
                    }
                }
                1 => {
                    let i = rng.gen_range(1..=c);
                    let mut i2 = rng.gen_range(1..c);
                    if i2 >= i {
                        i2 += 1;
                    }
                    GenKind::Pmove { i, i2 }
                }
                2 => GenKind::Qmove {
                    i: rng.gen_range(1..=c),
                    j: rng.gen_range(1..=2 * g),
                },
                _ => GenKind::SpMove {
                    a: random_symplectic(g, rng),
                },
            };
            GeneratorToken {
                kind,
                inverse: rng.gen_bool(0.5),
            }
        })
        .collect()
}

/// Random class-preserving permutations followed by random sign flips.
pub fn random_signed_perm_word<R: Rng + ?Sized>(ctx: &StdModuleContext, rng: &mut R) -> Vec<GeneratorToken> {
    let mut word = Vec::new();
    for (class, n) in [(SignClass::Plus, ctx.c_plus()), (SignClass::Minus, ctx.c_minus())] {
        if n >= 2 {
            let mut sigma: Vec<usize> = (1..=n).collect();
            sigma.shuffle(rng);
            word.push(GeneratorToken::new(GenKind::PermX { sigma, class }));
        }
    }
    for i in 1..=ctx.c() {
        if rng.gen_bool(0.5) {
            word.push(GeneratorToken::new(GenKind::NegX { i }));
        }
    }
    word
}

/// A uniformly chosen element of O(c+, c-; Z) with entries bounded by `height`.
pub fn random_orthogonal<R: Rng + ?Sized>(ctx: &StdModuleContext, height: usize, rng: &mut R) -> IntOrthogonal {
    let all = enumerate_orthogonal(ctx.c_plus(), ctx.c_minus(), height.max(1));
    all[rng.gen_range(0..all.len())].clone()
}
