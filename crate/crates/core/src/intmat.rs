//! Dense integer matrices with exact linear algebra: Bareiss determinants,
//! rank, Smith normal form, unimodular inverses, integer solving and the
//! signature of symmetric matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntMatError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("matrix is not square")]
    NotSquare,
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn diag(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &d) in entries.iter().enumerate() {
            m.set(i, i, BigInt::from(d));
        }
        m
    }

    /// Builds from row slices; panics on ragged input.
    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, IntMatError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(IntMatError::Dimension("ragged rows".into()));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn get_i64(&self, i: usize, j: usize) -> i64 {
        self.get(i, j).to_i64().expect("entry exceeds i64")
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Rows as i64, `None` if any entry overflows.
    pub fn to_rows_i64(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(ToPrimitive::to_i64).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Copy of the block `rows r0..r1`, `cols c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        let mut b = Self::zeros(r1 - r0, c1 - c0);
        for i in r0..r1 {
            for j in c0..c1 {
                b.set(i - r0, j - c0, self.get(i, j).clone());
            }
        }
        b
    }

    /// Writes `b` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, b: &IntMatrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix, IntMatError> {
        if self.cols != rhs.rows {
            return Err(IntMatError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn det(&self) -> Result<BigInt, IntMatError> {
        if !self.is_square() {
            return Err(IntMatError::NotSquare);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    /// Rank over Q.
    pub fn rank(&self) -> usize {
        let mut a = self.to_rows();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for r in rank + 1..rows {
                if a[r][col].is_zero() {
                    continue;
                }
                let (f, g) = (a[rank][col].clone(), a[r][col].clone());
                for c in col..cols {
                    let v = &a[r][c] * &f - &a[rank][c] * &g;
                    a[r][c] = v;
                }
                let cont = a[r].iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
                if !cont.is_zero() && !cont.is_one() {
                    a[r].iter_mut().for_each(|x| *x /= &cont);
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }

    /// Nonzero invariant factors of the Smith normal form, ascending by divisibility.
    pub fn smith_invariants(&self) -> Vec<BigInt> {
        let mut a = self.to_rows();
        let (m, n) = (self.rows, self.cols);
        let mut out = Vec::new();
        let mut t = 0;
        while t < m.min(n) {
            // pick smallest nonzero entry in the remaining block as pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            loop {
                let mut changed = false;
                for i in t + 1..m {
                    if a[i][t].is_zero() {
                        continue;
                    }
                    let q = a[i][t].div_floor(&a[t][t]);
                    for j in t..n {
                        let v = &a[i][j] - &q * &a[t][j];
                        a[i][j] = v;
                    }
                    if !a[i][t].is_zero() {
                        a.swap(t, i);
                        changed = true;
                    }
                }
                for j in t + 1..n {
                    if a[t][j].is_zero() {
                        continue;
                    }
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut().skip(t) {
                        let v = &row[j] - &q * &row[t];
                        row[j] = v;
                    }
                    if !a[t][j].is_zero() {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                        changed = true;
                    }
                }
                if changed {
                    continue;
                }
                // pivot must divide the rest of the block
                let bad = (t + 1..m)
                    .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_multiple_of(&a[t][t]));
                match bad {
                    Some((i, _)) => {
                        for j in t..n {
                            let v = &a[t][j] + &a[i][j];
                            a[t][j] = v;
                        }
                    }
                    None => break,
                }
            }
            out.push(a[t][t].abs());
            t += 1;
        }
        out
    }

    /// Inverse of a unimodular matrix, via rational Gauss-Jordan.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix, IntMatError> {
        if !self.is_square() {
            return Err(IntMatError::NotSquare);
        }
        let n = self.rows;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut row: Vec<BigRational> = self
                    .row(i)
                    .iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect();
                row.extend((0..n).map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                }));
                row
            })
            .collect();
        for col in 0..n {
            let p = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(IntMatError::NotUnimodular)?;
            a.swap(col, p);
            let piv = a[col][col].clone();
            a[col].iter_mut().for_each(|x| *x /= &piv);
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let v = &a[r][c] - &f * &a[col][c];
                    a[r][c] = v;
                }
            }
        }
        let mut inv = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let v = &a[i][n + j];
                if !v.is_integer() {
                    return Err(IntMatError::NotUnimodular);
                }
                inv.set(i, j, v.to_integer());
            }
        }
        Ok(inv)
    }

    /// Some integer solution `x` of `self * x = b`, or `None`.
    ///
    /// Column-style Hermite reduction: `self * U = H` with `U` unimodular and
    /// `H` in column echelon form, then forward substitution.
    pub fn solve_integer(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let (m, n) = (self.rows, self.cols);
        // work on columns: h[j] is column j of H, u[j] is column j of U
        let mut h: Vec<Vec<BigInt>> = (0..n)
            .map(|j| (0..m).map(|i| self.get(i, j).clone()).collect())
            .collect();
        let mut u: Vec<Vec<BigInt>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| if i == j { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
        let mut col = 0;
        for row in 0..m {
            if col == n {
                break;
            }
            // gcd-combine all columns col.. on this row into column col
            for j in col + 1..n {
                if h[j][row].is_zero() {
                    continue;
                }
                let (a, bb) = (h[col][row].clone(), h[j][row].clone());
                let e = a.extended_gcd(&bb);
                let (g, x, y) = (e.gcd, e.x, e.y);
                let (p, q) = (&a / &g, &bb / &g);
                // [col, j] <- [x*col + y*j, -q*col + p*j]; determinant x*p + y*q = 1
                let newc: Vec<BigInt> = (0..m).map(|i| &x * &h[col][i] + &y * &h[j][i]).collect();
                let newj: Vec<BigInt> = (0..m).map(|i| &p * &h[j][i] - &q * &h[col][i]).collect();
                h[col] = newc;
                h[j] = newj;
                let newc: Vec<BigInt> = (0..n).map(|i| &x * &u[col][i] + &y * &u[j][i]).collect();
                let newj: Vec<BigInt> = (0..n).map(|i| &p * &u[j][i] - &q * &u[col][i]).collect();
                u[col] = newc;
                u[j] = newj;
            }
            if !h[col][row].is_zero() {
                pivots.push((row, col));
                col += 1;
            }
        }
        // forward substitution on H y = b
        let mut rem: Vec<BigInt> = b.to_vec();
        let mut y = vec![BigInt::zero(); n];
        for &(row, c) in &pivots {
            let (q, r) = rem[row].div_rem(&h[c][row]);
            if !r.is_zero() {
                return None;
            }
            for i in 0..m {
                let v = &rem[i] - &q * &h[c][i];
                rem[i] = v;
            }
            y[c] = q;
        }
        if rem.iter().any(|v| !v.is_zero()) {
            return None;
        }
        let mut x = vec![BigInt::zero(); n];
        for (c, yc) in y.iter().enumerate() {
            if yc.is_zero() {
                continue;
            }
            for i in 0..n {
                x[i] += yc * &u[c][i];
            }
        }
        Some(x)
    }

    /// `(positive, negative, zero)` eigenvalue counts of a symmetric matrix,
    /// by symmetric Gaussian elimination over Q (Sylvester's law of inertia).
    pub fn signature(&self) -> (usize, usize, usize) {
        assert!(self.is_symmetric(), "signature needs a symmetric matrix");
        let n = self.rows;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect()
            })
            .collect();
        let (mut pos, mut neg) = (0, 0);
        let mut remaining: Vec<usize> = (0..n).collect();
        while !remaining.is_empty() {
            let p = match remaining.iter().copied().find(|&i| !a[i][i].is_zero()) {
                Some(p) => p,
                None => {
                    // all remaining diagonals vanish; look for an off-diagonal entry
                    let pair = remaining
                        .iter()
                        .flat_map(|&i| remaining.iter().map(move |&j| (i, j)))
                        .find(|&(i, j)| i != j && !a[i][j].is_zero());
                    let Some((i, j)) = pair else { break };
                    // replace e_i by e_i + e_j: diagonal becomes 2 a_ij
                    for c in 0..n {
                        let v = &a[i][c] + &a[j][c];
                        a[i][c] = v;
                    }
                    for r in 0..n {
                        let v = &a[r][i] + &a[r][j];
                        a[r][i] = v;
                    }
                    i
                }
            };
            let d = a[p][p].clone();
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            remaining.retain(|&r| r != p);
            for &r in &remaining {
                if a[r][p].is_zero() {
                    continue;
                }
                let f = &a[r][p] / &d;
                for c in 0..n {
                    let v = &a[r][c] - &f * &a[p][c];
                    a[r][c] = v;
                }
                for rr in 0..n {
                    let v = &a[rr][r] - &f * &a[rr][p];
                    a[rr][r] = v;
                }
            }
        }
        (pos, neg, n - pos - neg)
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix dimension mismatch")
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;
    fn neg(self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{self}")
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|v| v.to_string()).collect())
            .collect();
        match self.to_rows_i64() {
            Some(r) => r.serialize(s),
            None => rows.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Cell {
            Small(i64),
            Big(String),
        }
        let rows: Vec<Vec<Cell>> = Vec::deserialize(d)?;
        let rows = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|c| match c {
                        Cell::Small(v) => Ok(BigInt::from(v)),
                        Cell::Big(s) => s.parse::<BigInt>().map_err(serde::de::Error::custom),
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        IntMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows_i64(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    // permutation expansion, fine for n <= 5
    fn leibniz(a: &IntMatrix) -> BigInt {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = a.rows();
        perms(n)
            .into_iter()
            .map(|p| {
                let inv = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| p[i] > p[j])
                    .count();
                let prod: BigInt = (0..n).map(|i| a.get(i, p[i]).clone()).product();
                if inv % 2 == 0 {
                    prod
                } else {
                    -prod
                }
            })
            .sum()
    }

    #[test]
    fn det_matches_leibniz() {
        let a = m(&[&[0, 2, 1], &[3, 0, -1], &[4, 5, 0]]);
        assert_eq!(a.det().unwrap(), leibniz(&a));
        let sing = m(&[&[1, 2], &[2, 4]]);
        assert!(sing.det().unwrap().is_zero());
        assert!(IntMatrix::zeros(0, 0).det().unwrap().is_one());
    }

    #[test]
    fn rank_and_smith() {
        let a = m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        assert_eq!(a.rank(), 3);
        let inv: Vec<i64> = a.smith_invariants().iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(inv, vec![2, 6, 12]);
        let z = IntMatrix::zeros(3, 2);
        assert_eq!(z.rank(), 0);
        assert!(z.smith_invariants().is_empty());
    }

    #[test]
    fn unimodular_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse_unimodular().unwrap();
        assert!((&a * &inv).is_identity());
        assert_eq!(
            m(&[&[2, 0], &[0, 1]]).inverse_unimodular(),
            Err(IntMatError::NotUnimodular)
        );
    }

    #[test]
    fn integer_solve() {
        let a = m(&[&[2, 4], &[0, 3]]);
        let b: Vec<BigInt> = vec![BigInt::from(2), BigInt::from(3)];
        let x = a.solve_integer(&b).unwrap();
        assert_eq!(x, vec![BigInt::from(-1), BigInt::from(1)]);
        // 2x = 1 has no integer solution
        assert!(m(&[&[2]]).solve_integer(&[BigInt::one()]).is_none());
        // underdetermined: 6x + 10y = 2
        let x = m(&[&[6, 10]]).solve_integer(&[BigInt::from(2)]).unwrap();
        assert_eq!(&x[0] * 6 + &x[1] * 10, BigInt::from(2));
    }

    #[test]
    fn signature_counts() {
        assert_eq!(m(&[&[0, 1], &[1, 0]]).signature(), (1, 1, 0));
        assert_eq!(IntMatrix::diag(&[1, -1, 0, 3]).signature(), (2, 1, 1));
        assert_eq!(m(&[&[2, 1], &[1, 2]]).signature(), (2, 0, 0));
        assert_eq!(m(&[&[0, 0], &[0, 0]]).signature(), (0, 0, 2));
    }
}
