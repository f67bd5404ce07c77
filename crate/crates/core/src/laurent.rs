//! The Laurent ring Z[t, t^-1] with its involution t -> t^-1.
//!
//! Coefficients are arbitrary precision. A [`LaurentPoly`] is always kept in
//! trimmed form: no leading or trailing zero coefficients, and the zero
//! polynomial is the empty sequence with lowest exponent 0.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("the zero polynomial has no normalized associate")]
    ZeroInput,
    #[error("gcd(0, 0) is undefined")]
    ZeroGcd,
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(0, vec![c.into()])
    }

    /// `c * t^k`
    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        Self::from_coeffs(k, vec![c.into()])
    }

    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn t_inv() -> Self {
        Self::monomial(1, -1)
    }

    /// `t - 1`
    pub fn t_minus_one() -> Self {
        Self::from_coeffs(0, vec![BigInt::from(-1), BigInt::from(1)])
    }

    /// `z = (t - 1)(t^-1 - 1) = 2 - t - t^-1`
    pub fn z() -> Self {
        Self::from_i64s(-1, &[-1, 2, -1])
    }

    /// Builds a polynomial whose coefficient of `t^(low + i)` is `coeffs[i]`.
    pub fn from_coeffs(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(low: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn lowest_exponent(&self) -> i64 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient, `None` for zero.
    pub fn highest_exponent(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.low + self.coeffs.len() as i64 - 1)
        }
    }

    /// Difference between highest and lowest exponent (0 for zero and monomials).
    pub fn spread(&self) -> i64 {
        self.coeffs.len().saturating_sub(1) as i64
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        let idx = k - self.low;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Iterates `(exponent, coefficient)` over nonzero terms, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    /// The constant value if this polynomial has no `t`-terms.
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.is_zero() {
            Some(BigInt::zero())
        } else if self.low == 0 && self.coeffs.len() == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// `p(t^-1)`.
    pub fn involute(&self) -> Self {
        match self.highest_exponent() {
            None => Self::zero(),
            Some(hi) => {
                let mut c = self.coeffs.clone();
                c.reverse();
                LaurentPoly { low: -hi, coeffs: c }
            }
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.involute()
    }

    /// Value at `t = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// True for the units `±t^k` of the ring.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    /// Content: gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Exact quotient `self / d` in Z[t, t^-1].
    ///
    /// Runs integer long division on the shifted ordinary polynomials; any step
    /// whose leading coefficient is not divisible by `lc(d)` means the Q[t]
    /// quotient has a non-integral coefficient.
    pub fn exact_divide(&self, d: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        if d.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let q = poly_exact_div(&self.coeffs, &d.coeffs).ok_or(LaurentError::NotDivisible)?;
        Ok(LaurentPoly::from_coeffs(self.low - d.low, q))
    }

    pub fn divides(&self, p: &LaurentPoly) -> bool {
        p.exact_divide(self).is_ok()
    }

    /// Canonical associate: multiply by `±t^k` so the lowest exponent is 0
    /// and the lowest coefficient is positive.
    pub fn normalize_unit(&self) -> Result<LaurentPoly, LaurentError> {
        if self.is_zero() {
            return Err(LaurentError::ZeroInput);
        }
        let mut coeffs = self.coeffs.clone();
        if coeffs[0].is_negative() {
            coeffs.iter_mut().for_each(|c| *c = -&*c);
        }
        Ok(LaurentPoly { low: 0, coeffs })
    }

    /// `p ≐ q`: equal up to multiplication by a unit `±t^k`.
    pub fn associated(&self, other: &LaurentPoly) -> bool {
        match (self.normalize_unit(), other.normalize_unit()) {
            (Ok(a), Ok(b)) => a == b,
            (Err(_), Err(_)) => true,
            _ => false,
        }
    }

    /// Gcd in the UFD Z[t, t^-1], normalized by [`normalize_unit`](Self::normalize_unit).
    pub fn gcd(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(LaurentError::ZeroGcd),
            (true, false) => return other.normalize_unit(),
            (false, true) => return self.normalize_unit(),
            _ => {}
        }
        let content = self.content().gcd(&other.content());
        let a = primitive_part(&self.coeffs);
        let b = primitive_part(&other.coeffs);
        let g = primitive_gcd(a, b);
        LaurentPoly::from_coeffs(0, g.iter().map(|c| c * &content).collect()).normalize_unit()
    }

    /// `Δ_n = -n t + (2n + 1) - n t^-1`, the Alexander polynomial of the n-th twist knot.
    pub fn twist_alexander(n: impl Into<BigInt>) -> Self {
        let n: BigInt = n.into();
        let mid: BigInt = &n * 2 + 1;
        Self::from_coeffs(-1, vec![-&n, mid, -n])
    }
}

/// Integer long division of dense ascending coefficient vectors. `None` when
/// the quotient is not in Z[t] or the remainder is nonzero.
fn poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    // Both trimmed: num[0] and den[0] are nonzero, so t-powers already factored out.
    if num.len() < den.len() {
        return None;
    }
    let mut rem: Vec<BigInt> = num.to_vec();
    let dl = den.len();
    let lc = den.last().unwrap();
    let mut quot = vec![BigInt::zero(); num.len() - dl + 1];
    for k in (0..quot.len()).rev() {
        let top = &rem[k + dl - 1];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lc);
        if !r.is_zero() {
            return None;
        }
        for (j, dc) in den.iter().enumerate() {
            rem[k + j] -= &q * dc;
        }
        quot[k] = q;
    }
    if rem.iter().all(Zero::is_zero) {
        Some(quot)
    } else {
        None
    }
}

fn primitive_part(c: &[BigInt]) -> Vec<BigInt> {
    let cont = c.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let mut v: Vec<BigInt> = c.iter().map(|x| x / &cont).collect();
    strip_low_zeros(&mut v);
    v
}

fn strip_low_zeros(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    let lead = v.iter().take_while(|c| c.is_zero()).count();
    v.drain(..lead);
}

/// Pseudo-remainder of `a` by `b` (dense ascending, `b` nonzero).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r: Vec<BigInt> = a.to_vec();
    let bl = b.len();
    let lb = b.last().unwrap().clone();
    while r.len() >= bl {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - bl;
        for x in r.iter_mut() {
            *x *= &lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

/// Gcd of two primitive polynomials via the primitive remainder sequence.
fn primitive_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = if r.is_empty() { r } else { primitive_part(&r) };
    }
    a
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

fn add_scaled(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let low = a.low.min(b.low);
    let high = a.highest_exponent().unwrap().max(b.highest_exponent().unwrap());
    let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.low - low) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.low - low) as usize + i];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::from_coeffs(low, coeffs)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_scaled(self, rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_scaled(self, rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self - rhs;
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

// Rendering: terms ordered by |exponent|, positive exponent first, so the
// symmetric polynomials read `2 - t - t^-1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<(i64, &BigInt)> = self.terms().collect();
        terms.sort_by(|a, b| match a.0.abs().cmp(&b.0.abs()) {
            Ordering::Equal => b.0.cmp(&a.0),
            o => o,
        });
        for (idx, (k, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let var = match k {
                0 => None,
                1 => Some("t".to_string()),
                _ => Some(format!("t^{k}")),
            };
            match var {
                None => write!(f, "{mag}")?,
                Some(v) if mag.is_one() => f.write_str(&v)?,
                Some(v) => write!(f, "{mag}*{v}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    /// Accepts signed terms `c*t^k`, `c`, `t^k`, `t`, `c*t` joined by `+`/`-`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| LaurentError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        // Split into signed terms; a '-' right after '^' belongs to the exponent.
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut sign_neg = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev != Some('^') {
                if !cur.is_empty() {
                    terms.push((sign_neg, std::mem::take(&mut cur)));
                    sign_neg = ch == '-';
                } else if prev.is_none() || matches!(prev, Some('+') | Some('-')) {
                    if prev.is_some() {
                        return Err(err("doubled operator"));
                    }
                    sign_neg = ch == '-';
                } else {
                    return Err(err("misplaced operator"));
                }
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        if cur.is_empty() {
            return Err(err("trailing operator"));
        }
        terms.push((sign_neg, cur));

        let mut acc = LaurentPoly::zero();
        for (neg, body) in terms {
            let (coef, exp) = parse_term(&body).ok_or_else(|| err(&format!("bad term {body:?}")))?;
            let coef = if neg { -coef } else { coef };
            acc += &LaurentPoly::monomial(coef, exp);
        }
        Ok(acc)
    }
}

fn parse_term(body: &str) -> Option<(BigInt, i64)> {
    let (coef_part, var_part) = match body.find('t') {
        None => return body.parse::<BigInt>().ok().filter(|_| is_digits(body)).map(|c| (c, 0)),
        Some(pos) => (&body[..pos], &body[pos..]),
    };
    let coef = if coef_part.is_empty() {
        BigInt::one()
    } else {
        let c = coef_part.strip_suffix('*')?;
        if !is_digits(c) {
            return None;
        }
        c.parse::<BigInt>().ok()?
    };
    let exp = if var_part == "t" {
        1
    } else {
        let e = var_part.strip_prefix("t^")?;
        let digits = e.strip_prefix('-').unwrap_or(e);
        if !is_digits(digits) {
            return None;
        }
        e.parse::<i64>().ok()?
    };
    Some((coef, exp))
}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

/// Structured form: `{"lowest": k, "coeffs": [..]}`. Coefficients that fit in
/// an i64 are JSON numbers, larger ones are decimal strings.
#[derive(Serialize, Deserialize)]
struct LaurentRecord {
    lowest: i64,
    coeffs: Vec<IntRepr>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Small(i64),
    Big(String),
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LaurentRecord {
            lowest: self.low,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| match c.to_i64() {
                    Some(v) => IntRepr::Small(v),
                    None => IntRepr::Big(c.to_string()),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rec = LaurentRecord::deserialize(d)?;
        let coeffs = rec
            .coeffs
            .into_iter()
            .map(|c| match c {
                IntRepr::Small(v) => Ok(BigInt::from(v)),
                IntRepr::Big(s) => s.parse::<BigInt>().map_err(serde::de::Error::custom),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LaurentPoly::from_coeffs(rec.lowest, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    // brute-force convolution oracle over (exponent, coefficient) pairs
    fn convolve(a: &[(i64, i64)], b: &[(i64, i64)]) -> LaurentPoly {
        let mut acc = std::collections::BTreeMap::new();
        for &(ea, ca) in a {
            for &(eb, cb) in b {
                *acc.entry(ea + eb).or_insert(0i64) += ca * cb;
            }
        }
        acc.into_iter()
            .fold(LaurentPoly::zero(), |s, (e, c)| s + LaurentPoly::monomial(c, e))
    }

    #[test]
    fn arith_examples() {
        let prod = &p("t - 1") * &p("t^-1 - 1");
        assert_eq!(prod, convolve(&[(1, 1), (0, -1)], &[(-1, 1), (0, -1)]));
        assert_eq!(prod, p("2 - t - t^-1"));
        assert_eq!(prod, LaurentPoly::z());
        let q = p("3*t^2 - 7 + t^-4");
        assert_eq!(&q + &LaurentPoly::zero(), q);
        assert!((&LaurentPoly::t() * &LaurentPoly::t_inv()).is_one());
    }

    #[test]
    fn involute_examples() {
        assert_eq!(LaurentPoly::t().involute(), LaurentPoly::t_inv());
        let d6 = p("-6*t + 13 - 6*t^-1");
        assert_eq!(d6.involute(), d6);
        assert_eq!(p("1 + 2*t").involute(), p("1 + 2*t^-1"));
    }

    #[test]
    fn eval_one_examples() {
        for n in -20..=20 {
            assert_eq!(LaurentPoly::twist_alexander(n).eval_one(), BigInt::one());
        }
        assert!(LaurentPoly::z().eval_one().is_zero());
        assert!(LaurentPoly::zero().eval_one().is_zero());
    }

    #[test]
    fn exact_divide_examples() {
        let z = LaurentPoly::z();
        let tp1 = p("t + 1");
        assert_eq!((&z * &tp1).exact_divide(&z).unwrap(), tp1);
        assert_eq!(p("t - 1").exact_divide(&z), Err(LaurentError::NotDivisible));
        for n in -10..=10 {
            let q = (LaurentPoly::twist_alexander(n) - LaurentPoly::one())
                .exact_divide(&z)
                .unwrap();
            assert_eq!(q, LaurentPoly::constant(n));
        }
        assert_eq!(
            p("t").exact_divide(&LaurentPoly::zero()),
            Err(LaurentError::DivisionByZero)
        );
        // divisible over Q but not over Z
        assert_eq!(p("t + 1").exact_divide(&p("2*t + 2")), Err(LaurentError::NotDivisible));
    }

    #[test]
    fn twist_alexander_examples() {
        assert!(LaurentPoly::twist_alexander(0).is_one());
        assert_eq!(LaurentPoly::twist_alexander(-1), p("t - 1 + t^-1"));
        assert_eq!(LaurentPoly::twist_alexander(6), p("-6*t + 13 - 6*t^-1"));
    }

    #[test]
    fn gcd_examples() {
        let tm1 = LaurentPoly::t_minus_one();
        for n in [-5, -1, 1, 2, 6] {
            assert!(LaurentPoly::twist_alexander(n).gcd(&tm1).unwrap().is_unit());
        }
        let q = p("3*t^2 + 6*t - 9");
        assert_eq!(q.gcd(&q).unwrap(), q.normalize_unit().unwrap().scale(&BigInt::from(1)));
        let sq = tm1.pow(2);
        assert!(sq.gcd(&tm1.pow(3)).unwrap().associated(&sq));
        assert_eq!(p("4*t + 2").gcd(&p("6")).unwrap(), p("2"));
        assert_eq!(
            LaurentPoly::zero().gcd(&LaurentPoly::zero()),
            Err(LaurentError::ZeroGcd)
        );
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            LaurentPoly::z().normalize_unit().unwrap(),
            LaurentPoly::t_minus_one().pow(2)
        );
        assert!(LaurentPoly::one().normalize_unit().unwrap().is_one());
        assert!(p("-t^3").normalize_unit().unwrap().is_one());
        assert_eq!(LaurentPoly::zero().normalize_unit(), Err(LaurentError::ZeroInput));
    }

    #[test]
    fn render_and_parse() {
        assert_eq!(LaurentPoly::z().to_string(), "2 - t - t^-1");
        assert_eq!(LaurentPoly::twist_alexander(6).to_string(), "13 - 6*t - 6*t^-1");
        assert_eq!(p("-6*t^-1 + 13 - 6*t"), LaurentPoly::twist_alexander(6));
        assert_eq!(p("-t^-2"), LaurentPoly::monomial(-1, -2));
        assert_eq!(p("  5 "), LaurentPoly::constant(5));
        assert_eq!(p("0"), LaurentPoly::zero());
        for bad in ["", "t^", "2**t", "+ - t", "3 +", "x", "2t"] {
            assert!(bad.parse::<LaurentPoly>().is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn json_structured_form() {
        let q = p("-6*t + 13 - 6*t^-1");
        let js = serde_json::to_string(&q).unwrap();
        assert_eq!(js, r#"{"lowest":-1,"coeffs":[-6,13,-6]}"#);
        let back: LaurentPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, q);
        let big = LaurentPoly::constant(BigInt::from(10).pow(30));
        let back: LaurentPoly = serde_json::from_str(&serde_json::to_string(&big).unwrap()).unwrap();
        assert_eq!(back, big);
    }
}
