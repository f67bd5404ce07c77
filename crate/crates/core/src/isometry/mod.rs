//! Automorphisms of the standard boundary module
//! `(Z[t^±1]/(t-1)^2)^c ⊕ Z_ε^{2g}` with its linking form.
//!
//! Everything is written in the Z-basis
//! `(x_1..x_c, (t-1)x_1..(t-1)x_c, y_1..y_2g)`, and matrices act on columns:
//! column `j` holds the image of basis vector `j`.

mod decompose;
mod gen;
mod orthogonal;
mod word;

use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::intmat::IntMatrix;
use crate::laurent::LaurentPoly;
use crate::linking::{LinkingError, StdLinking};

pub use decompose::{decompose, decompose_11, decompose_definite, signed_perm_word, Decomposition};
pub use gen::{eval_word, gen, symplectic_j, GenKind, GeneratorToken, SignClass};
pub use orthogonal::{boundary_of_orthogonal, enumerate_orthogonal, IntOrthogonal};
pub use word::{
    format_word, parse_token, parse_word, random_orthogonal, random_realized_word, random_signed_perm_word,
    random_symplectic, WordParseError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsometryError {
    #[error("invalid generator: {0}")]
    InvalidToken(String),
    #[error("matrix is not an isometry: {0}")]
    Invariant(Violation),
    #[error("extracted integer matrix is not in O(c+,c-;Z): {0}")]
    NotOrthogonal(IntMatrix),
    #[error("wrong context: {0}")]
    WrongContext(String),
    #[error("matrix shape {rows}x{cols} does not fit a context of dimension {dim}")]
    Shape { rows: usize, cols: usize, dim: usize },
    #[error(transparent)]
    Linking(#[from] LinkingError),
}

/// Which isometry invariant failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("determinant is not ±1")]
    NotUnimodular,
    #[error("does not commute with the t-action")]
    NotEquivariant,
    #[error("linking form not preserved on basis pair ({0}, {1})")]
    FormNotPreserved(usize, usize),
    #[error("block {0} has the wrong shape for a t-equivariant map")]
    BlockShape(&'static str),
}

/// Linking values on the Z-basis: `Bl(e_r, e_s) = num[r][s] / den`.
#[derive(Debug)]
struct BasisGram {
    num: Vec<Vec<LaurentPoly>>,
    den: LaurentPoly,
}

#[derive(Debug, Clone)]
pub struct StdModuleContext {
    c_plus: usize,
    c_minus: usize,
    g: usize,
    signs: Vec<i8>,
    t_action: IntMatrix,
    gram: Arc<BasisGram>,
}

impl PartialEq for StdModuleContext {
    fn eq(&self, other: &Self) -> bool {
        (self.c_plus, self.c_minus, self.g) == (other.c_plus, other.c_minus, other.g)
    }
}

impl Eq for StdModuleContext {}

impl StdModuleContext {
    pub fn new(c_plus: usize, c_minus: usize, g: usize) -> Self {
        let c = c_plus + c_minus;
        let signs: Vec<i8> = std::iter::repeat_n(1, c_plus)
            .chain(std::iter::repeat_n(-1, c_minus))
            .collect();
        let dim = 2 * c + 2 * g;
        let mut t_action = IntMatrix::identity(dim);
        for i in 0..c {
            t_action.set(c + i, i, 1.into());
        }
        let bl = StdLinking::new(&signs, g).expect("signs are ±1");
        let lm = bl.linking_matrix();
        // coefficient of each Z-basis vector against the presentation generators
        let tm1 = LaurentPoly::t_minus_one();
        let coef = |r: usize| -> (usize, LaurentPoly) {
            if r < c {
                (r, LaurentPoly::one())
            } else if r < 2 * c {
                (r - c, tm1.clone())
            } else {
                (r - c, LaurentPoly::one())
            }
        };
        let num = (0..dim)
            .map(|r| {
                let (gr, pr) = coef(r);
                (0..dim)
                    .map(|s| {
                        let (gs, ps) = coef(s);
                        &(&pr * &ps.involute()) * lm.adj_entry(gr, gs)
                    })
                    .collect()
            })
            .collect();
        StdModuleContext {
            c_plus,
            c_minus,
            g,
            signs,
            t_action,
            gram: Arc::new(BasisGram {
                num,
                den: lm.det().clone(),
            }),
        }
    }

    pub fn c_plus(&self) -> usize {
        self.c_plus
    }

    pub fn c_minus(&self) -> usize {
        self.c_minus
    }

    pub fn c(&self) -> usize {
        self.c_plus + self.c_minus
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn dim(&self) -> usize {
        2 * self.c() + 2 * self.g
    }

    pub fn t_action(&self) -> &IntMatrix {
        &self.t_action
    }

    /// `I_{c+,c-}`.
    pub fn sign_matrix(&self) -> IntMatrix {
        IntMatrix::diag(&self.signs.iter().map(|&s| s as i64).collect::<Vec<_>>())
    }

    pub fn is_definite(&self) -> bool {
        self.c_plus == 0 || self.c_minus == 0
    }

    /// Checks unimodularity, t-equivariance and form preservation.
    pub fn check(&self, m: &IntMatrix) -> Result<(), IsometryError> {
        let dim = self.dim();
        if m.rows() != dim || m.cols() != dim {
            return Err(IsometryError::Shape {
                rows: m.rows(),
                cols: m.cols(),
                dim,
            });
        }
        if !m.det().expect("square").abs().is_one() {
            return Err(IsometryError::Invariant(Violation::NotUnimodular));
        }
        if &self.t_action * m != m * &self.t_action {
            return Err(IsometryError::Invariant(Violation::NotEquivariant));
        }
        if let Some((p, q)) = self.first_unpreserved_pair(m) {
            return Err(IsometryError::Invariant(Violation::FormNotPreserved(p, q)));
        }
        Ok(())
    }

    /// `Bl(m e_p, m e_q) ≡ Bl(e_p, e_q)` for all basis pairs, else the first failure.
    fn first_unpreserved_pair(&self, m: &IntMatrix) -> Option<(usize, usize)> {
        let dim = self.dim();
        let gram = &self.gram;
        // h = G m, entries h[r][q] = Σ_s G[r][s] m[s][q]
        let h: Vec<Vec<LaurentPoly>> = (0..dim)
            .map(|r| {
                (0..dim)
                    .map(|q| {
                        let mut acc = LaurentPoly::zero();
                        for s in 0..dim {
                            let f = m.get(s, q);
                            if !f.is_zero() && !gram.num[r][s].is_zero() {
                                acc += &gram.num[r][s].scale(f);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        for p in 0..dim {
            for q in 0..dim {
                let mut acc = -&gram.num[p][q];
                for r in 0..dim {
                    let f = m.get(r, p);
                    if !f.is_zero() && !h[r][q].is_zero() {
                        acc += &h[r][q].scale(f);
                    }
                }
                if !gram.den.divides(&acc) {
                    return Some((p, q));
                }
            }
        }
        None
    }
}

/// An automorphism of the standard boundary module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsometryMatrix {
    ctx: StdModuleContext,
    m: IntMatrix,
}

impl IsometryMatrix {
    /// Validates every invariant.
    pub fn new(ctx: &StdModuleContext, m: IntMatrix) -> Result<Self, IsometryError> {
        ctx.check(&m)?;
        Ok(IsometryMatrix { ctx: ctx.clone(), m })
    }

    pub(crate) fn trusted(ctx: &StdModuleContext, m: IntMatrix) -> Self {
        IsometryMatrix { ctx: ctx.clone(), m }
    }

    pub fn identity(ctx: &StdModuleContext) -> Self {
        Self::trusted(ctx, IntMatrix::identity(ctx.dim()))
    }

    pub fn ctx(&self) -> &StdModuleContext {
        &self.ctx
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.m
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.m
    }

    pub fn verify(&self) -> Result<(), IsometryError> {
        self.ctx.check(&self.m)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &IsometryMatrix) -> IsometryMatrix {
        Self::trusted(&self.ctx, &self.m * &other.m)
    }

    pub fn inverse(&self) -> IsometryMatrix {
        Self::trusted(
            &self.ctx,
            self.m.inverse_unimodular().expect("isometries are unimodular"),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_action_is_unipotent() {
        for (cp, cm, g) in [(0, 0, 0), (1, 0, 0), (2, 1, 1), (0, 3, 2)] {
            let ctx = StdModuleContext::new(cp, cm, g);
            let n = ctx.t_action() - &IntMatrix::identity(ctx.dim());
            assert!((&n * &n).is_zero());
        }
    }

    #[test]
    fn identity_and_rejections() {
        let ctx = StdModuleContext::new(1, 1, 1);
        assert!(IsometryMatrix::new(&ctx, IntMatrix::identity(6)).is_ok());
        let mut bad = IntMatrix::identity(6);
        bad.set(0, 0, 2.into());
        assert_eq!(
            IsometryMatrix::new(&ctx, bad).unwrap_err(),
            IsometryError::Invariant(Violation::NotUnimodular)
        );
        // x1 -> x1 + y1 alone moves the form
        let mut m = IntMatrix::identity(6);
        m.set(4, 0, 1.into());
        assert!(matches!(
            IsometryMatrix::new(&ctx, m).unwrap_err(),
            IsometryError::Invariant(Violation::FormNotPreserved(..))
        ));
        // swapping x and (t-1)x breaks equivariance
        let mut sw = IntMatrix::zeros(2, 2);
        sw.set(0, 1, 1.into());
        sw.set(1, 0, 1.into());
        let c1 = StdModuleContext::new(1, 0, 0);
        assert_eq!(
            IsometryMatrix::new(&c1, sw).unwrap_err(),
            IsometryError::Invariant(Violation::NotEquivariant)
        );
        // swapping x1, x2 across sign classes is not form preserving
        let c2 = StdModuleContext::new(1, 1, 0);
        let mut p = IntMatrix::zeros(4, 4);
        for (a, b) in [(0, 1), (1, 0), (2, 3), (3, 2)] {
            p.set(a, b, 1.into());
        }
        assert!(IsometryMatrix::new(&c2, p).is_err());
    }
}
