//! Factoring an isometry as a word in realized generators times `∂(N)`.
//!
//! Write `f` in blocks over `(x, (t-1)x, y)`:
//!
//! ```text
//! [ F  0  0 ]
//! [ B  F  D ]
//! [ C  0  E ]
//! ```
//!
//! `N = S F S` is orthogonal and `g = f ∘ ∂(N)^-1` has `F = I`. We then
//! precompose `g` with right factors until it is the identity: an Sp move
//! normalizes `E`, q-moves paired with Sp corrections clear `C` one entry at
//! a time, `D` is forced to vanish, and ScaleT / p-moves clear `B`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::gen::{eval_word, gen, GenKind, GeneratorToken, SignClass};
use super::orthogonal::{boundary_of_orthogonal, IntOrthogonal};
use super::{IsometryError, IsometryMatrix, StdModuleContext, Violation};
use crate::intmat::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub word: Vec<GeneratorToken>,
    pub n: IntOrthogonal,
}

struct Reducer<'a> {
    ctx: &'a StdModuleContext,
    g: IntMatrix,
    right: Vec<GeneratorToken>,
}

impl Reducer<'_> {
    /// `g <- g * M(tok)^count`, recording the factors.
    fn apply(&mut self, tok: GeneratorToken, count: usize) -> Result<(), IsometryError> {
        if count == 0 {
            return Ok(());
        }
        let m = gen(&tok, self.ctx)?.into_matrix();
        let power = match tok.kind {
            // these are I + E with E^2 = 0, so the power is I + count*E
            GenKind::Pmove { .. } | GenKind::Qmove { .. } => {
                let id = IntMatrix::identity(self.ctx.dim());
                &id + &(&m - &id).scale(&BigInt::from(count))
            }
            _ => {
                let mut p = m.clone();
                for _ in 1..count {
                    p = &p * &m;
                }
                p
            }
        };
        self.g = &self.g * &power;
        self.right.extend(std::iter::repeat_n(tok, count));
        Ok(())
    }

    fn block(&self, r: std::ops::Range<usize>, c: std::ops::Range<usize>) -> IntMatrix {
        self.g.block(r.start, r.end, c.start, c.end)
    }

    fn small(&self, i: usize, j: usize) -> Result<i64, IsometryError> {
        self.g
            .get(i, j)
            .to_i64()
            .ok_or_else(|| IsometryError::InvalidToken("coefficient exceeds the i64 range".into()))
    }
}

fn signed_count(m: i64) -> (bool, usize) {
    (m < 0, m.unsigned_abs() as usize)
}

fn sp_token(e: &IntMatrix, inverse: bool) -> GeneratorToken {
    GeneratorToken {
        kind: GenKind::SpMove { a: e.clone() },
        inverse,
    }
}

/// `f = eval_word(word) ∘ ∂(N)`, with `word` in realized generators only.
pub fn decompose(f: &IsometryMatrix) -> Result<Decomposition, IsometryError> {
    let ctx = f.ctx();
    ctx.check(f.matrix())?;
    let (c, g2) = (ctx.c(), 2 * ctx.genus());
    let (xs, us, ys) = (0..c, c..2 * c, 2 * c..2 * c + g2);
    let s = ctx.sign_matrix();
    let fa = f.matrix().block(0, c, 0, c);
    let n = IntOrthogonal::new(ctx.c_plus(), ctx.c_minus(), &(&s * &fa) * &s)?;
    let dn_inv = boundary_of_orthogonal(&n.inverse(), ctx)?;
    let mut red = Reducer {
        ctx,
        g: f.matrix() * dn_inv.matrix(),
        right: Vec::new(),
    };
    if !red.block(xs.clone(), xs.clone()).is_identity() {
        return Err(IsometryError::Invariant(Violation::BlockShape("x/x")));
    }

    // E -> I
    let e = red.block(ys.clone(), ys.clone());
    if !e.is_identity() {
        red.apply(sp_token(&e, true), 1)?;
    }

    // clear C entry by entry; each q^m is followed by the Sp move undoing its E
    for i in 0..c {
        for j in 0..g2 {
            let m = -red.small(2 * c + j, i)?;
            if m == 0 {
                continue;
            }
            let (inv, count) = signed_count(m);
            let q = GeneratorToken {
                kind: GenKind::Qmove { i: i + 1, j: j + 1 },
                inverse: inv,
            };
            red.apply(q, count)?;
            let e = red.block(ys.clone(), ys.clone());
            if !e.is_identity() {
                red.apply(sp_token(&e, true), 1)?;
            }
        }
    }

    if !red.block(us.clone(), ys.clone()).is_zero() || !red.block(ys.clone(), xs.clone()).is_zero() {
        return Err(IsometryError::Invariant(Violation::BlockShape("(t-1)x/y")));
    }

    // B: diagonal by ScaleT, off-diagonal pairs by p-moves
    for i in 0..c {
        let k = red.small(c + i, i)?;
        if k != 0 {
            red.apply(GeneratorToken::new(GenKind::ScaleT { i: i + 1, k: -k }), 1)?;
        }
    }
    let eps = ctx.signs();
    for i in 0..c {
        for i2 in i + 1..c {
            let lower = red.small(c + i2, i)?;
            let upper = red.small(c + i, i2)?;
            let (ei, ei2) = (eps[i] as i64, eps[i2] as i64);
            if upper != ei * ei2 * lower {
                return Err(IsometryError::Invariant(Violation::BlockShape("(t-1)x/x")));
            }
            let m = -ei2 * lower;
            if m == 0 {
                continue;
            }
            let (inv, count) = signed_count(m);
            let p = GeneratorToken {
                kind: GenKind::Pmove { i: i + 1, i2: i2 + 1 },
                inverse: inv,
            };
            red.apply(p, count)?;
        }
    }
    if !red.g.is_identity() {
        return Err(IsometryError::Invariant(Violation::BlockShape("residual")));
    }

    let word: Vec<GeneratorToken> = red.right.iter().rev().map(GeneratorToken::inverted).collect();
    let recomposed = eval_word(&word, ctx)?.compose(&boundary_of_orthogonal(&n, ctx)?);
    debug_assert_eq!(recomposed.matrix(), f.matrix());
    if recomposed.matrix() != f.matrix() {
        return Err(IsometryError::Invariant(Violation::BlockShape("recomposition")));
    }
    Ok(Decomposition { word, n })
}

/// `[PermX(σ), NegX(..)]` evaluating to `∂(N)` for a signed permutation `N`
/// in a definite context (or a diagonal `N` for `(1, 1)`).
pub fn signed_perm_word(n: &IntOrthogonal, ctx: &StdModuleContext) -> Result<Vec<GeneratorToken>, IsometryError> {
    if !n.is_signed_permutation() {
        return Err(IsometryError::NotOrthogonal(n.matrix().clone()));
    }
    let c = ctx.c();
    let block = boundary_of_orthogonal(n, ctx)?.matrix().block(0, c, 0, c);
    // column i of the block is s_i x_{π(i)}
    let mut pi = vec![0usize; c];
    let mut neg = Vec::new();
    for i in 0..c {
        let row = (0..c)
            .find(|&r| !block.get(r, i).is_zero())
            .expect("signed permutation");
        pi[i] = row;
        if block.get(row, i).is_negative() {
            neg.push(i);
        }
    }
    let mut word = Vec::new();
    for class in [SignClass::Plus, SignClass::Minus] {
        let range = match class {
            SignClass::Plus => 0..ctx.c_plus(),
            SignClass::Minus => ctx.c_plus()..c,
        };
        if range.is_empty() {
            continue;
        }
        if range.clone().any(|i| !range.contains(&pi[i])) {
            return Err(IsometryError::WrongContext("permutation crosses sign classes".into()));
        }
        if range.clone().any(|i| pi[i] != i) {
            let sigma = range.clone().map(|i| pi[i] - range.start + 1).collect();
            word.push(GeneratorToken::new(GenKind::PermX { sigma, class }));
        }
    }
    word.extend(neg.into_iter().map(|i| GeneratorToken::new(GenKind::NegX { i: i + 1 })));
    Ok(word)
}

/// Definite contexts: `f = eval(word ++ signed_perm_word)`.
pub fn decompose_definite(f: &IsometryMatrix) -> Result<(Vec<GeneratorToken>, Vec<GeneratorToken>), IsometryError> {
    let ctx = f.ctx();
    if !ctx.is_definite() {
        return Err(IsometryError::WrongContext(format!(
            "definite decomposition needs c+ = 0 or c- = 0, got ({}, {})",
            ctx.c_plus(),
            ctx.c_minus()
        )));
    }
    let d = decompose(f)?;
    let spw = signed_perm_word(&d.n, ctx)?;
    Ok((d.word, spw))
}

/// The `(1, 1)` case, where `N` is always `diag(±1, ±1)`.
pub fn decompose_11(f: &IsometryMatrix) -> Result<(Vec<GeneratorToken>, Vec<GeneratorToken>), IsometryError> {
    let ctx = f.ctx();
    if (ctx.c_plus(), ctx.c_minus()) != (1, 1) {
        return Err(IsometryError::WrongContext(format!(
            "needs (c+, c-) = (1, 1), got ({}, {})",
            ctx.c_plus(),
            ctx.c_minus()
        )));
    }
    let d = decompose(f)?;
    let n = d.n.matrix();
    if !n.get(0, 1).is_zero() || !n.get(1, 0).is_zero() {
        return Err(IsometryError::NotOrthogonal(n.clone()));
    }
    let signs = (0..2)
        .filter(|&i| n.get(i, i).is_negative())
        .map(|i| GeneratorToken::new(GenKind::NegX { i: i + 1 }))
        .collect();
    Ok((d.word, signs))
}
