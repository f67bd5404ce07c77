//! Values of boundary linking forms in Q(t)/Z[t, t^-1].
//!
//! Convention: linear in the first slot, conjugate-linear in the second,
//! `Bl(p u, v) = p Bl(u, v)` and `Bl(u, p v) = p̄ Bl(u, v)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::forms::{FormsError, HermMatrix, PolyMatrix};
use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkingError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("the matrix is degenerate (determinant 0)")]
    Degenerate,
    #[error("index ({0}, {1}) out of range")]
    Index(usize, usize),
    #[error("sign vector entries must be +1 or -1")]
    BadSign,
    #[error("element shape does not match the context")]
    Shape,
    #[error(transparent)]
    Forms(#[from] FormsError),
}

/// An element of Q(t)/Z[t, t^-1], stored as an unreduced fraction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FracValue {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl FracValue {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, LinkingError> {
        if den.is_zero() {
            return Err(LinkingError::ZeroDenominator);
        }
        Ok(FracValue { num, den })
    }

    pub fn integral(p: LaurentPoly) -> Self {
        FracValue {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    /// True when the value vanishes in Q(t)/Z[t, t^-1].
    pub fn is_integral(&self) -> bool {
        self.den.divides(&self.num)
    }

    pub fn add(&self, other: &FracValue) -> FracValue {
        if self.den == other.den {
            return FracValue {
                num: &self.num + &other.num,
                den: self.den.clone(),
            };
        }
        FracValue {
            num: &self.num * &other.den + &other.num * &self.den,
            den: &self.den * &other.den,
        }
    }

    pub fn neg(&self) -> FracValue {
        FracValue {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &FracValue) -> FracValue {
        self.add(&other.neg())
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> FracValue {
        FracValue {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    pub fn involute(&self) -> FracValue {
        FracValue {
            num: self.num.involute(),
            den: self.den.involute(),
        }
    }
}

/// Equality modulo Z[t, t^-1].
pub fn frac_equal(v: &FracValue, w: &FracValue) -> bool {
    v.sub(w).is_integral()
}

impl fmt::Display for FracValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl Serialize for FracValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Rec {
            num: String,
            den: String,
        }
        Rec {
            num: self.num.to_string(),
            den: self.den.to_string(),
        }
        .serialize(s)
    }
}

/// `A^-1` stored as `adj(A) / det(A)` for repeated value queries.
#[derive(Clone, Debug)]
pub struct LinkingMatrix {
    adj: PolyMatrix,
    det: LaurentPoly,
}

impl LinkingMatrix {
    pub fn new(a: &HermMatrix) -> Result<Self, LinkingError> {
        let det = a.matrix().det()?;
        if det.is_zero() {
            return Err(LinkingError::Degenerate);
        }
        Ok(LinkingMatrix {
            adj: a.matrix().adjugate()?,
            det,
        })
    }

    pub fn size(&self) -> usize {
        self.adj.rows()
    }

    pub fn det(&self) -> &LaurentPoly {
        &self.det
    }

    /// The adjugate entry `adj(A)_{ij}`; the value is this over `det`.
    pub fn adj_entry(&self, i: usize, j: usize) -> &LaurentPoly {
        self.adj.get(i, j)
    }

    /// `(A^-1)_{ij}` with 0-based indices.
    pub fn value(&self, i: usize, j: usize) -> Result<FracValue, LinkingError> {
        if i >= self.size() || j >= self.size() {
            return Err(LinkingError::Index(i, j));
        }
        Ok(FracValue {
            num: self.adj.get(i, j).clone(),
            den: self.det.clone(),
        })
    }

    /// `uᵀ A^-1 v̄` for coefficient vectors.
    pub fn pair(&self, u: &[LaurentPoly], v: &[LaurentPoly]) -> Result<FracValue, LinkingError> {
        if u.len() != self.size() || v.len() != self.size() {
            return Err(LinkingError::Shape);
        }
        let mut num = LaurentPoly::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                num += &(&(ui * &vj.involute()) * self.adj.get(i, j));
            }
        }
        Ok(FracValue {
            num,
            den: self.det.clone(),
        })
    }
}

/// Entry `(i, j)` (0-based) of `A^-1` as a fraction over `det A`.
pub fn boundary_form_value(a: &HermMatrix, i: usize, j: usize) -> Result<FracValue, LinkingError> {
    LinkingMatrix::new(a)?.value(i, j)
}

/// `Σ (a_i + b_i (t - 1)) x_i + Σ e_j y_j` in the standard boundary module.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StdCokerElem {
    pub a: Vec<BigInt>,
    pub b: Vec<BigInt>,
    pub e: Vec<BigInt>,
}

impl StdCokerElem {
    pub fn zero(c: usize, g: usize) -> Self {
        StdCokerElem {
            a: vec![BigInt::zero(); c],
            b: vec![BigInt::zero(); c],
            e: vec![BigInt::zero(); 2 * g],
        }
    }

    /// The generator `x_i` (0-based).
    pub fn x(i: usize, c: usize, g: usize) -> Self {
        let mut v = Self::zero(c, g);
        v.a[i] = 1.into();
        v
    }

    /// `(t - 1) x_i` (0-based).
    pub fn u(i: usize, c: usize, g: usize) -> Self {
        let mut v = Self::zero(c, g);
        v.b[i] = 1.into();
        v
    }

    /// The genus generator `y_j` (0-based, `j < 2g`).
    pub fn y(j: usize, c: usize, g: usize) -> Self {
        let mut v = Self::zero(c, g);
        v.e[j] = 1.into();
        v
    }

    /// From coordinates in the Z-basis `(x.., (t-1)x.., y..)`.
    pub fn from_coords(coords: &[BigInt], c: usize, g: usize) -> Result<Self, LinkingError> {
        if coords.len() != 2 * c + 2 * g {
            return Err(LinkingError::Shape);
        }
        Ok(StdCokerElem {
            a: coords[..c].to_vec(),
            b: coords[c..2 * c].to_vec(),
            e: coords[2 * c..].to_vec(),
        })
    }

    pub fn coords(&self) -> Vec<BigInt> {
        self.a.iter().chain(&self.b).chain(&self.e).cloned().collect()
    }

    /// Multiplication by `t - 1`: kills `(t-1)x_i` and `y_j`.
    pub fn times_t_minus_one(&self) -> Self {
        StdCokerElem {
            a: vec![BigInt::zero(); self.a.len()],
            b: self.a.clone(),
            e: vec![BigInt::zero(); self.e.len()],
        }
    }

    /// Coefficients against the generators `x_1.., y_1..` of the presentation.
    pub fn poly_vector(&self) -> Vec<LaurentPoly> {
        let tm1 = LaurentPoly::t_minus_one();
        self.a
            .iter()
            .zip(&self.b)
            .map(|(a, b)| &LaurentPoly::constant(a.clone()) + &tm1.scale(b))
            .chain(self.e.iter().map(|e| LaurentPoly::constant(e.clone())))
            .collect()
    }
}

/// The standard linking form for signs `ε` and genus `g`, with its inverse cached.
#[derive(Clone, Debug)]
pub struct StdLinking {
    signs: Vec<i8>,
    g: usize,
    inv: LinkingMatrix,
}

impl StdLinking {
    pub fn new(signs: &[i8], g: usize) -> Result<Self, LinkingError> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(LinkingError::BadSign);
        }
        let z = LaurentPoly::z();
        let diag: Vec<LaurentPoly> = signs.iter().map(|&s| if s > 0 { z.clone() } else { -&z }).collect();
        let mut m = PolyMatrix::diagonal(diag);
        for _ in 0..g {
            m = m.direct_sum(&crate::forms::h2_block());
        }
        let a = HermMatrix::new(m)?;
        Ok(StdLinking {
            signs: signs.to_vec(),
            g,
            inv: LinkingMatrix::new(&a)?,
        })
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn linking_matrix(&self) -> &LinkingMatrix {
        &self.inv
    }

    pub fn value(&self, u: &StdCokerElem, v: &StdCokerElem) -> Result<FracValue, LinkingError> {
        let c = self.signs.len();
        for w in [u, v] {
            if w.a.len() != c || w.b.len() != c || w.e.len() != 2 * self.g {
                return Err(LinkingError::Shape);
            }
        }
        self.inv.pair(&u.poly_vector(), &v.poly_vector())
    }
}

/// One-shot standard linking value; prefer [`StdLinking`] for repeated queries.
pub fn std_bl_value(u: &StdCokerElem, v: &StdCokerElem, signs: &[i8], g: usize) -> Result<FracValue, LinkingError> {
    StdLinking::new(signs, g)?.value(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::standard_form;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn frac(n: &str, d: &str) -> FracValue {
        FracValue::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn frac_equal_examples() {
        assert!(frac_equal(&frac("1", "t - 1"), &frac("t", "t - 1")));
        let z = LaurentPoly::z().to_string();
        assert!(!frac_equal(&frac("1", &z), &frac("-1", &z)));
        assert!(frac_equal(
            &FracValue::integral(p("3*t^2 - 1")),
            &FracValue::integral(LaurentPoly::zero())
        ));
        assert_eq!(
            FracValue::new(p("1"), LaurentPoly::zero()),
            Err(LinkingError::ZeroDenominator)
        );
    }

    #[test]
    fn boundary_values() {
        let v = boundary_form_value(&standard_form(1, 0, 0), 0, 0).unwrap();
        assert!(frac_equal(
            &v,
            &FracValue::new(LaurentPoly::one(), LaurentPoly::z()).unwrap()
        ));
        let w = boundary_form_value(&standard_form(0, 0, 1), 0, 1).unwrap();
        assert!(!w.is_integral());
        assert!(w.mul_poly(&LaurentPoly::t_minus_one()).is_integral());
        // y1, y2 pair to -1/(t - 1)
        assert!(frac_equal(&w, &frac("-1", "t - 1")));
        let unimod = HermMatrix::new(PolyMatrix::identity(2)).unwrap();
        assert!(boundary_form_value(&unimod, 0, 1).unwrap().is_integral());
        assert!(boundary_form_value(&unimod, 0, 0).unwrap().is_integral());
        let degenerate = HermMatrix::new(PolyMatrix::zeros(1, 1)).unwrap();
        assert_eq!(
            boundary_form_value(&degenerate, 0, 0).unwrap_err(),
            LinkingError::Degenerate
        );
    }

    #[test]
    fn std_values() {
        let signs = [1i8, -1, 1];
        let (c, g) = (3, 1);
        let bl = StdLinking::new(&signs, g).unwrap();
        for i in 0..c {
            let v = bl.value(&StdCokerElem::x(i, c, g), &StdCokerElem::x(i, c, g)).unwrap();
            let expect = FracValue::new(LaurentPoly::constant(signs[i] as i64), LaurentPoly::z()).unwrap();
            assert!(frac_equal(&v, &expect));
        }
        assert!(bl
            .value(&StdCokerElem::x(0, c, g), &StdCokerElem::x(1, c, g))
            .unwrap()
            .is_integral());
        assert!(bl
            .value(&StdCokerElem::x(0, c, g), &StdCokerElem::y(0, c, g))
            .unwrap()
            .is_integral());
        let one_shot = std_bl_value(&StdCokerElem::x(1, c, g), &StdCokerElem::x(1, c, g), &signs, g).unwrap();
        assert!(frac_equal(&one_shot, &frac("-1", &LaurentPoly::z().to_string())));
        assert_eq!(StdLinking::new(&[2], 0).unwrap_err(), LinkingError::BadSign);
    }

    #[test]
    fn matches_boundary_form_of_standard_matrix() {
        let bl = StdLinking::new(&[1, -1], 1).unwrap();
        let a = standard_form(1, 1, 1);
        for i in 0..4 {
            for j in 0..4 {
                let basis = |k: usize| {
                    if k < 2 {
                        StdCokerElem::x(k, 2, 1)
                    } else {
                        StdCokerElem::y(k - 2, 2, 1)
                    }
                };
                let v = bl.value(&basis(i), &basis(j)).unwrap();
                assert!(frac_equal(&v, &boundary_form_value(&a, i, j).unwrap()));
            }
        }
    }
}
