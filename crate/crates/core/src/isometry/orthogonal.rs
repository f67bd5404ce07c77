//! The integer orthogonal group O(c+, c-; Z) and its boundary action.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{IsometryError, IsometryMatrix, StdModuleContext};
use crate::intmat::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntOrthogonal {
    c_plus: usize,
    c_minus: usize,
    n: IntMatrix,
}

impl IntOrthogonal {
    /// Checks `N I_{c+,c-} Nᵀ = I_{c+,c-}`.
    pub fn new(c_plus: usize, c_minus: usize, n: IntMatrix) -> Result<Self, IsometryError> {
        let c = c_plus + c_minus;
        if n.rows() != c || n.cols() != c {
            return Err(IsometryError::Shape {
                rows: n.rows(),
                cols: n.cols(),
                dim: c,
            });
        }
        let s = sign_matrix(c_plus, c_minus);
        if &(&n * &s) * &n.transpose() != s {
            return Err(IsometryError::NotOrthogonal(n));
        }
        Ok(IntOrthogonal { c_plus, c_minus, n })
    }

    pub fn identity(c_plus: usize, c_minus: usize) -> Self {
        IntOrthogonal {
            c_plus,
            c_minus,
            n: IntMatrix::identity(c_plus + c_minus),
        }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.n
    }

    pub fn c_plus(&self) -> usize {
        self.c_plus
    }

    pub fn c_minus(&self) -> usize {
        self.c_minus
    }

    pub fn mul(&self, other: &IntOrthogonal) -> IntOrthogonal {
        IntOrthogonal {
            c_plus: self.c_plus,
            c_minus: self.c_minus,
            n: &self.n * &other.n,
        }
    }

    /// `N^-1 = S Nᵀ S`.
    pub fn inverse(&self) -> IntOrthogonal {
        let s = sign_matrix(self.c_plus, self.c_minus);
        IntOrthogonal {
            c_plus: self.c_plus,
            c_minus: self.c_minus,
            n: &(&s * &self.n.transpose()) * &s,
        }
    }

    /// Exactly one ±1 per row and column.
    pub fn is_signed_permutation(&self) -> bool {
        let c = self.n.rows();
        (0..c).all(|i| {
            let row_nz = (0..c).filter(|&j| !self.n.get(i, j).is_zero()).count();
            let col_nz = (0..c).filter(|&j| !self.n.get(j, i).is_zero()).count();
            row_nz == 1 && col_nz == 1
        }) && (0..c).all(|i| (0..c).all(|j| self.n.get(i, j).abs() <= BigInt::one()))
    }
}

fn sign_matrix(c_plus: usize, c_minus: usize) -> IntMatrix {
    let d: Vec<i64> = std::iter::repeat_n(1, c_plus)
        .chain(std::iter::repeat_n(-1, c_minus))
        .collect();
    IntMatrix::diag(&d)
}

/// The induced boundary isometry: `(Nᵀ)^-1 = S N S` on the x and (t-1)x blocks, identity on y.
pub fn boundary_of_orthogonal(n: &IntOrthogonal, ctx: &StdModuleContext) -> Result<IsometryMatrix, IsometryError> {
    if (n.c_plus, n.c_minus) != (ctx.c_plus(), ctx.c_minus()) {
        return Err(IsometryError::WrongContext(format!(
            "orthogonal matrix for ({}, {}) used in context ({}, {})",
            n.c_plus,
            n.c_minus,
            ctx.c_plus(),
            ctx.c_minus()
        )));
    }
    let c = ctx.c();
    let s = ctx.sign_matrix();
    let block = &(&s * &n.n) * &s;
    let mut m = IntMatrix::identity(ctx.dim());
    m.set_block(0, 0, &block);
    m.set_block(c, c, &block);
    Ok(IsometryMatrix::trusted(ctx, m))
}

/// Every `N` with `N S Nᵀ = S` and entries in `[-height, height]`.
///
/// Rows are chosen one at a time; each must have norm `S_ii` and be
/// orthogonal to the rows already chosen.
pub fn enumerate_orthogonal(c_plus: usize, c_minus: usize, height: usize) -> Vec<IntOrthogonal> {
    let c = c_plus + c_minus;
    if c == 0 {
        return vec![IntOrthogonal::identity(0, 0)];
    }
    let h = height as i64;
    let sign: Vec<i64> = (0..c).map(|i| if i < c_plus { 1 } else { -1 }).collect();
    let norm = |v: &[i64]| -> i64 { v.iter().zip(&sign).map(|(x, s)| s * x * x).sum() };
    let mut by_norm: [Vec<Vec<i64>>; 2] = [Vec::new(), Vec::new()];
    let mut v = vec![-h; c];
    loop {
        match norm(&v) {
            1 => by_norm[0].push(v.clone()),
            -1 => by_norm[1].push(v.clone()),
            _ => {}
        }
        // odometer step; stop after the last vector
        let mut k = 0;
        while k < c && v[k] == h {
            v[k] = -h;
            k += 1;
        }
        if k == c {
            break;
        }
        v[k] += 1;
    }
    let mut out = Vec::new();
    let mut rows: Vec<&Vec<i64>> = Vec::with_capacity(c);
    extend(&by_norm, &sign, (c_plus, c_minus), &mut rows, &mut out);
    out
}

fn extend<'a>(
    by_norm: &'a [Vec<Vec<i64>>; 2],
    sign: &[i64],
    (c_plus, c_minus): (usize, usize),
    rows: &mut Vec<&'a Vec<i64>>,
    out: &mut Vec<IntOrthogonal>,
) {
    let i = rows.len();
    let c = sign.len();
    if i == c {
        let n = IntMatrix::from_rows_i64(&rows.iter().map(|r| (*r).clone()).collect::<Vec<_>>());
        out.push(IntOrthogonal { c_plus, c_minus, n });
        return;
    }
    let pool = if i < c_plus { &by_norm[0] } else { &by_norm[1] };
    for cand in pool {
        let ok = rows
            .iter()
            .all(|r| r.iter().zip(cand).zip(sign).map(|((a, b), s)| s * a * b).sum::<i64>() == 0);
        if ok {
            rows.push(cand);
            extend(by_norm, sign, (c_plus, c_minus), rows, out);
            rows.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn definite_counts() {
        for (c, expect) in [(1, 2), (2, 8), (3, 48)] {
            let all = enumerate_orthogonal(c, 0, 1);
            assert_eq!(all.len(), expect);
            assert!(all.iter().all(IntOrthogonal::is_signed_permutation));
            assert_eq!(enumerate_orthogonal(0, c, 2).len(), expect);
        }
    }

    #[test]
    fn one_one_is_diagonal() {
        for h in 1..=4 {
            let all = enumerate_orthogonal(1, 1, h);
            assert_eq!(all.len(), 4);
            assert!(all
                .iter()
                .all(|n| n.matrix().get(0, 1).is_zero() && n.matrix().get(1, 0).is_zero()));
        }
    }

    #[test]
    fn two_one_grows() {
        assert!(enumerate_orthogonal(2, 1, 10).len() > enumerate_orthogonal(2, 1, 3).len());
    }

    #[test]
    fn boundary_examples() {
        let ctx = StdModuleContext::new(1, 0, 0);
        let id = boundary_of_orthogonal(&IntOrthogonal::identity(1, 0), &ctx).unwrap();
        assert!(id.matrix().is_identity());
        let neg = IntOrthogonal::new(1, 0, IntMatrix::diag(&[-1])).unwrap();
        let m = boundary_of_orthogonal(&neg, &ctx).unwrap();
        assert_eq!(m.matrix(), &IntMatrix::diag(&[-1, -1]));
        let ctx2 = StdModuleContext::new(2, 0, 0);
        let sw = IntOrthogonal::new(2, 0, IntMatrix::from_rows_i64(&[vec![0, 1], vec![1, 0]])).unwrap();
        let m = boundary_of_orthogonal(&sw, &ctx2).unwrap();
        assert_eq!(m.matrix().get_i64(1, 0), 1);
        assert_eq!(m.matrix().get_i64(3, 2), 1);
        m.verify().unwrap();
        assert!(IntOrthogonal::new(1, 1, IntMatrix::from_rows_i64(&[vec![0, 1], vec![1, 0]])).is_err());
    }

    #[test]
    fn boundary_is_a_homomorphism() {
        let ctx = StdModuleContext::new(2, 1, 0);
        let all = enumerate_orthogonal(2, 1, 2);
        for a in all.iter().step_by(7) {
            for b in all.iter().step_by(5) {
                let lhs = boundary_of_orthogonal(&a.mul(b), &ctx).unwrap();
                let rhs = boundary_of_orthogonal(a, &ctx)
                    .unwrap()
                    .compose(&boundary_of_orthogonal(b, &ctx).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }
}
