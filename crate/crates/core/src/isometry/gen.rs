//! Named generators of the isometry group and word evaluation.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{IsometryError, IsometryMatrix, StdModuleContext};
use crate::intmat::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SignClass {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl fmt::Display for SignClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignClass::Plus => "+",
            SignClass::Minus => "-",
        })
    }
}

/// Generator kinds. Indices are 1-based, as in the word format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GenKind {
    /// `x_i -> t^k x_i`.
    ScaleT { i: usize, k: i64 },
    /// `x_i -> x_i + ε_{i2}(t-1)x_{i2}`, `x_{i2} -> ε_i(t-1)x_i + x_{i2}`.
    Pmove { i: usize, i2: usize },
    /// Mixes `x_i` with the genus pair containing `y_j`.
    Qmove { i: usize, j: usize },
    /// `y -> A y` for `A` in Sp(2g, Z).
    SpMove { a: IntMatrix },
    /// `x_i -> -x_i`.
    NegX { i: usize },
    /// `x_{class[p]} -> x_{class[sigma(p)]}` inside one sign class.
    PermX { sigma: Vec<usize>, class: SignClass },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorToken {
    #[serde(flatten)]
    pub kind: GenKind,
    #[serde(default)]
    pub inverse: bool,
}

impl GeneratorToken {
    pub fn new(kind: GenKind) -> Self {
        GeneratorToken { kind, inverse: false }
    }

    pub fn inv(kind: GenKind) -> Self {
        GeneratorToken { kind, inverse: true }
    }

    /// The same generator with the inversion flag toggled.
    pub fn inverted(&self) -> Self {
        GeneratorToken {
            kind: self.kind.clone(),
            inverse: !self.inverse,
        }
    }

    /// Realized generators are the ones induced by surface homeomorphisms.
    pub fn is_realized(&self) -> bool {
        matches!(
            self.kind,
            GenKind::ScaleT { .. } | GenKind::Pmove { .. } | GenKind::Qmove { .. } | GenKind::SpMove { .. }
        )
    }
}

/// The standard symplectic form, `[[0, 1], [-1, 0]]` on each genus pair.
pub fn symplectic_j(g: usize) -> IntMatrix {
    let mut j = IntMatrix::zeros(2 * g, 2 * g);
    for k in 0..g {
        j.set(2 * k, 2 * k + 1, 1.into());
        j.set(2 * k + 1, 2 * k, (-1).into());
    }
    j
}

fn is_symplectic(a: &IntMatrix, g: usize) -> bool {
    let j = symplectic_j(g);
    a.rows() == 2 * g && a.cols() == 2 * g && &(&a.transpose() * &j) * a == j
}

fn class_indices(ctx: &StdModuleContext, class: SignClass) -> std::ops::Range<usize> {
    match class {
        SignClass::Plus => 0..ctx.c_plus(),
        SignClass::Minus => ctx.c_plus()..ctx.c(),
    }
}

fn bad(msg: String) -> IsometryError {
    IsometryError::InvalidToken(msg)
}

fn check_x_index(ctx: &StdModuleContext, i: usize, what: &str) -> Result<usize, IsometryError> {
    if i == 0 || i > ctx.c() {
        return Err(bad(format!("{what}={i} outside 1..={}", ctx.c())));
    }
    Ok(i - 1)
}

/// Matrix of the generator without the inversion flag.
fn forward_matrix(kind: &GenKind, ctx: &StdModuleContext) -> Result<IntMatrix, IsometryError> {
    let c = ctx.c();
    let g = ctx.genus();
    let eps = |i: usize| BigInt::from(ctx.signs()[i]);
    let mut m = IntMatrix::identity(ctx.dim());
    match kind {
        GenKind::ScaleT { i, k } => {
            let i = check_x_index(ctx, *i, "i")?;
            m.set(c + i, i, BigInt::from(*k));
        }
        GenKind::Pmove { i, i2 } => {
            let a = check_x_index(ctx, *i, "i")?;
            let b = check_x_index(ctx, *i2, "i2")?;
            if a == b {
                return Err(bad(format!("p needs distinct indices, got i=i2={i}")));
            }
            m.set(c + b, a, eps(b));
            m.set(c + a, b, eps(a));
        }
        GenKind::Qmove { i, j } => {
            let a = check_x_index(ctx, *i, "i")?;
            if *j == 0 || *j > 2 * g {
                return Err(bad(format!("q index j={j} outside 1..={}", 2 * g)));
            }
            let y = |jj: usize| 2 * c + jj - 1;
            if j % 2 == 1 {
                // x_i -> x_i + y_{2k-1}; y_{2k} -> ε_i (t-1)x_i - y_{2k-1} + y_{2k}
                let (odd, even) = (*j, *j + 1);
                m.set(y(odd), a, 1.into());
                m.set(c + a, y(even), eps(a));
                m.set(y(odd), y(even), (-1).into());
            } else {
                // x_i -> x_i + y_{2k}; y_{2k-1} -> -ε_i (t-1)x_i + y_{2k-1} + y_{2k}
                let (odd, even) = (*j - 1, *j);
                m.set(y(even), a, 1.into());
                m.set(c + a, y(odd), -eps(a));
                m.set(y(even), y(odd), 1.into());
            }
        }
        GenKind::SpMove { a } => {
            if !is_symplectic(a, g) {
                return Err(bad(format!("sp matrix {a} is not in Sp({}, Z)", 2 * g)));
            }
            m.set_block(2 * c, 2 * c, a);
        }
        GenKind::NegX { i } => {
            let i = check_x_index(ctx, *i, "i")?;
            m.set(i, i, (-1).into());
            m.set(c + i, c + i, (-1).into());
        }
        GenKind::PermX { sigma, class } => {
            let idx = class_indices(ctx, *class);
            let n = idx.len();
            let mut seen = vec![false; n];
            if sigma.len() != n
                || sigma
                    .iter()
                    .any(|&s| s == 0 || s > n || std::mem::replace(&mut seen[s - 1], true))
            {
                return Err(bad(format!(
                    "perm sigma={sigma:?} is not a permutation of the {n} generators in class {class}"
                )));
            }
            for (p, &s) in sigma.iter().enumerate() {
                let (from, to) = (idx.start + p, idx.start + s - 1);
                m.set(from, from, 0.into());
                m.set(c + from, c + from, 0.into());
                m.set(to, from, 1.into());
                m.set(c + to, c + from, 1.into());
            }
        }
    }
    Ok(m)
}

fn inverse_matrix(kind: &GenKind, ctx: &StdModuleContext, fwd: &IntMatrix) -> IntMatrix {
    let id = IntMatrix::identity(ctx.dim());
    match kind {
        GenKind::ScaleT { i, k } => forward_matrix(&GenKind::ScaleT { i: *i, k: -k }, ctx).expect("validated"),
        // M = I + E with E^2 = 0
        GenKind::Pmove { .. } | GenKind::Qmove { .. } => &(&id + &id) - fwd,
        GenKind::NegX { .. } => fwd.clone(),
        GenKind::PermX { .. } => fwd.transpose(),
        GenKind::SpMove { a } => {
            let j = symplectic_j(ctx.genus());
            let ainv = -&(&(&j * &a.transpose()) * &j);
            let mut m = id;
            m.set_block(2 * ctx.c(), 2 * ctx.c(), &ainv);
            m
        }
    }
}

/// The isometry implementing `token` in `ctx`.
pub fn gen(token: &GeneratorToken, ctx: &StdModuleContext) -> Result<IsometryMatrix, IsometryError> {
    let fwd = forward_matrix(&token.kind, ctx)?;
    let m = if token.inverse {
        inverse_matrix(&token.kind, ctx, &fwd)
    } else {
        fwd
    };
    Ok(IsometryMatrix::trusted(ctx, m))
}

/// `M(w_1) M(w_2) ... M(w_n)`, i.e. `w_1 ∘ ... ∘ w_n`; the empty word is the identity.
pub fn eval_word(word: &[GeneratorToken], ctx: &StdModuleContext) -> Result<IsometryMatrix, IsometryError> {
    let mut m = IntMatrix::identity(ctx.dim());
    for tok in word {
        m = &m * gen(tok, ctx)?.matrix();
    }
    Ok(IsometryMatrix::trusted(ctx, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(m: &IntMatrix, j: usize) -> Vec<i64> {
        (0..m.rows()).map(|i| m.get_i64(i, j)).collect()
    }

    #[test]
    fn scale_t_example() {
        let ctx = StdModuleContext::new(1, 0, 0);
        let m = gen(&GeneratorToken::new(GenKind::ScaleT { i: 1, k: 1 }), &ctx).unwrap();
        assert_eq!(col(m.matrix(), 0), vec![1, 1]);
        assert_eq!(col(m.matrix(), 1), vec![0, 1]);
        // t^1 acts exactly as the t-action
        assert_eq!(m.matrix(), ctx.t_action());
    }

    #[test]
    fn pmove_example() {
        let ctx = StdModuleContext::new(2, 0, 0);
        let m = gen(&GeneratorToken::new(GenKind::Pmove { i: 1, i2: 2 }), &ctx).unwrap();
        // basis x1, x2, u1, u2
        assert_eq!(col(m.matrix(), 0), vec![1, 0, 0, 1]);
        assert_eq!(col(m.matrix(), 1), vec![0, 1, 1, 0]);
        m.verify().unwrap();
    }

    #[test]
    fn qmove_example() {
        let ctx = StdModuleContext::new(1, 0, 1);
        let m = gen(&GeneratorToken::new(GenKind::Qmove { i: 1, j: 1 }), &ctx).unwrap();
        // basis x1, u1, y1, y2
        assert_eq!(col(m.matrix(), 0), vec![1, 0, 1, 0]);
        assert_eq!(col(m.matrix(), 2), vec![0, 0, 1, 0]);
        assert_eq!(col(m.matrix(), 3), vec![0, 1, -1, 1]);
        m.verify().unwrap();
        let m2 = gen(&GeneratorToken::new(GenKind::Qmove { i: 1, j: 2 }), &ctx).unwrap();
        assert_eq!(col(m2.matrix(), 0), vec![1, 0, 0, 1]);
        assert_eq!(col(m2.matrix(), 2), vec![0, -1, 1, 1]);
        m2.verify().unwrap();
    }

    #[test]
    fn invalid_tokens() {
        let ctx = StdModuleContext::new(1, 1, 1);
        let cases = [
            GenKind::ScaleT { i: 3, k: 1 },
            GenKind::Pmove { i: 1, i2: 1 },
            GenKind::Qmove { i: 1, j: 3 },
            GenKind::SpMove {
                a: IntMatrix::diag(&[2, 1]),
            },
            GenKind::NegX { i: 0 },
            GenKind::PermX {
                sigma: vec![1, 2],
                class: SignClass::Plus,
            },
        ];
        for k in cases {
            assert!(gen(&GeneratorToken::new(k.clone()), &ctx).is_err(), "{k:?}");
        }
    }

    #[test]
    fn token_times_inverse_is_identity() {
        let ctx = StdModuleContext::new(2, 1, 1);
        let toks = [
            GenKind::ScaleT { i: 2, k: -3 },
            GenKind::Pmove { i: 1, i2: 3 },
            GenKind::Qmove { i: 3, j: 2 },
            GenKind::SpMove {
                a: IntMatrix::from_rows_i64(&[vec![2, 1], vec![1, 1]]),
            },
            GenKind::NegX { i: 3 },
            GenKind::PermX {
                sigma: vec![2, 1],
                class: SignClass::Plus,
            },
        ];
        for k in toks {
            let t = GeneratorToken::new(k);
            let w = [t.clone(), t.inverted()];
            assert!(eval_word(&w, &ctx).unwrap().matrix().is_identity());
            let w = [t.inverted(), t];
            assert!(eval_word(&w, &ctx).unwrap().matrix().is_identity());
        }
        assert!(eval_word(&[], &ctx).unwrap().matrix().is_identity());
    }

    #[test]
    fn json_shape() {
        let t = GeneratorToken::inv(GenKind::Pmove { i: 1, i2: 3 });
        let js = serde_json::to_string(&t).unwrap();
        assert_eq!(js, r#"{"kind":"pmove","i":1,"i2":3,"inverse":true}"#);
        let back: GeneratorToken = serde_json::from_str(&js).unwrap();
        assert_eq!(back, t);
    }
}
