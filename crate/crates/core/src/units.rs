//! Unitary units `x(t) x(t^-1) = 1` in `Z[t^±1]/Δ_n` with `Δ_n = n(2 - t - t^-1) + 1`,
//! and in the truncated rings `Z[t^±1]/(t-1)^k`.
//!
//! For `n ≠ 0` the quotient is `Z[1/n]·1 ⊕ Z[1/n]·t` with `t² = ((2n+1)/n) t - 1`,
//! so every element has a unique normal form `a + b t`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::isometry::SignClass;
use crate::laurent::LaurentPoly;

/// An element `a + b t` of `Z[t^±1]/Δ_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadElem {
    n: i64,
    a: BigRational,
    b: BigRational,
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

impl QuadElem {
    /// Panics if `n == 0`, where the quotient ring is zero.
    pub fn new(n: i64, a: BigRational, b: BigRational) -> Self {
        assert!(n != 0, "the quadratic normal form needs n != 0");
        QuadElem { n, a, b }
    }

    pub fn from_ints(n: i64, a: i64, b: i64) -> Self {
        Self::new(n, rat(a), rat(b))
    }

    pub fn one(n: i64) -> Self {
        Self::from_ints(n, 1, 0)
    }

    pub fn t(n: i64) -> Self {
        Self::from_ints(n, 0, 1)
    }

    /// `t^-1 = (2n+1)/n - t`.
    pub fn t_inv(n: i64) -> Self {
        Self::new(n, trace(n), rat(-1))
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// The involution `t -> t^-1`.
    pub fn conj(&self) -> Self {
        QuadElem {
            n: self.n,
            a: &self.a + &self.b * trace(self.n),
            b: -&self.b,
        }
    }

    /// `x · x̄`, always a rational constant.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.a * &self.b * trace(self.n) + &self.b * &self.b
    }

    pub fn is_unitary(&self) -> bool {
        self.norm().is_one()
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.conj_inverse() } else { self.clone() };
        let mut out = Self::one(self.n);
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// `x^-1 = x̄ / N(x)`; panics on zero norm.
    fn conj_inverse(&self) -> Self {
        let nm = self.norm();
        assert!(!nm.is_zero(), "element is not invertible");
        let c = self.conj();
        QuadElem {
            n: self.n,
            a: c.a / &nm,
            b: c.b / nm,
        }
    }

    pub fn inverse(&self) -> Self {
        self.conj_inverse()
    }
}

/// `(2n+1)/n`, the trace of `t`.
fn trace(n: i64) -> BigRational {
    BigRational::new((2 * n + 1).into(), n.into())
}

impl Mul for &QuadElem {
    type Output = QuadElem;
    fn mul(self, o: &QuadElem) -> QuadElem {
        assert_eq!(self.n, o.n, "elements of different rings");
        // b b' t² = b b' (s t - 1)
        let bb = &self.b * &o.b;
        QuadElem {
            n: self.n,
            a: &self.a * &o.a - &bb,
            b: &self.a * &o.b + &self.b * &o.a + bb * trace(self.n),
        }
    }
}

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem {
            n: self.n,
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coef = |c: &BigRational| -> String {
            if c.is_one() {
                String::new()
            } else {
                format!("{c}*")
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) if self.b.is_negative() => write!(f, "-{}t", coef(&-&self.b)),
            (true, false) => write!(f, "{}t", coef(&self.b)),
            (false, false) => {
                let sign = if self.b.is_negative() { '-' } else { '+' };
                write!(f, "{} {sign} {}t", self.a, coef(&self.b.abs()))
            }
        }
    }
}

impl fmt::Debug for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadElem(n={}, {})", self.n, self)
    }
}

impl Serialize for QuadElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("QuadElem", 3)?;
        st.serialize_field("a", &self.a.to_string())?;
        st.serialize_field("b", &self.b.to_string())?;
        st.serialize_field("text", &self.to_string())?;
        st.end()
    }
}

/// `delta | x·x̄ - 1` in `Z[t^±1]`.
pub fn is_unitary(x: &LaurentPoly, delta: &LaurentPoly) -> bool {
    assert!(!delta.is_zero(), "is_unitary needs a nonzero modulus");
    let r = &(x * &x.involute()) - &LaurentPoly::one();
    delta.divides(&r)
}

/// Normal form of `p` in `Z[t^±1]/Δ_n`.
pub fn reduce_quadratic(p: &LaurentPoly, n: i64) -> QuadElem {
    let mut acc = QuadElem::from_ints(n, 0, 0);
    let t = QuadElem::t(n);
    let ti = QuadElem::t_inv(n);
    if p.is_zero() {
        return acc;
    }
    let low = p.lowest_exponent();
    // Horner in t starting from t^low
    let mut power = if low < 0 { ti.pow(-low) } else { t.pow(low) };
    for c in p.coeffs() {
        if !c.is_zero() {
            let term = QuadElem {
                n,
                a: &power.a * BigRational::from_integer(c.clone()),
                b: &power.b * BigRational::from_integer(c.clone()),
            };
            acc = QuadElem {
                n,
                a: acc.a + term.a,
                b: acc.b + term.b,
            };
        }
        power = &power * &t;
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum UnitClassification {
    Trivial,
    Z2,
    Z4,
    Infinite,
}

impl UnitClassification {
    /// Group order, `None` when infinite.
    pub fn order(self) -> Option<usize> {
        match self {
            UnitClassification::Trivial => Some(1),
            UnitClassification::Z2 => Some(2),
            UnitClassification::Z4 => Some(4),
            UnitClassification::Infinite => None,
        }
    }
}

impl fmt::Display for UnitClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            UnitClassification::Trivial => "Trivial",
            UnitClassification::Z2 => "Z2",
            UnitClassification::Z4 => "Z4",
            UnitClassification::Infinite => "Infinite",
        };
        f.write_str(s)
    }
}

/// `Some((p, k))` when `m = p^k` with `p` prime and `k ≥ 1`.
fn prime_power(m: u64) -> Option<(u64, u32)> {
    if m < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if p * p > m {
        return Some((m, 1));
    }
    let mut rest = m;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// Closed-form structure of `U(Δ_n)/{t^k}`.
pub fn classify_unit_group(n: i64) -> UnitClassification {
    match n {
        -1 | 0 => UnitClassification::Trivial,
        1 | 2 => UnitClassification::Z2,
        _ if n < 0 => match prime_power(n.unsigned_abs()) {
            Some((_, k)) if k % 2 == 1 => UnitClassification::Z2,
            Some(_) => UnitClassification::Z4,
            None => UnitClassification::Infinite,
        },
        _ => UnitClassification::Infinite,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UnitBounds {
    pub numerator_bound: u64,
    pub denom_power_bound: u32,
    pub k_bound: u32,
}

impl Default for UnitBounds {
    fn default() -> Self {
        UnitBounds {
            numerator_bound: 10_000,
            denom_power_bound: 6,
            k_bound: 40,
        }
    }
}

impl UnitBounds {
    fn raised(self) -> Self {
        UnitBounds {
            numerator_bound: self.numerator_bound * 10,
            denom_power_bound: self.denom_power_bound + 2,
            k_bound: self.k_bound * 2,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct UnitGroupReport {
    pub n: i64,
    /// The closed-form answer; bounded search never overrides it.
    pub classification: UnitClassification,
    /// One element per class found, pairwise inequivalent modulo `t^k`.
    pub representatives: Vec<QuadElem>,
    /// A unit outside `±t^k`, in the infinite case.
    pub witness: Option<QuadElem>,
    /// What the classes found by the search close up to, if they close up.
    pub observed: Option<UnitClassification>,
    pub consistent: bool,
    pub bounds: UnitBounds,
    pub retried: bool,
}

impl fmt::Display for UnitGroupReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let reps: Vec<String> = self.representatives.iter().map(ToString::to_string).collect();
        write!(
            f,
            "n={} classification={} representatives=[{}]",
            self.n,
            self.classification,
            reps.join(", ")
        )?;
        if let Some(w) = &self.witness {
            write!(f, " witness={w}")?;
        }
        if !self.consistent {
            let obs = self.observed.map_or("open".to_string(), |o| o.to_string());
            write!(f, " INCONSISTENT(search found {obs})")?;
        }
        Ok(())
    }
}

/// Integer solutions `(A, B)` of `nA² + (2n+1)AB + nB² = n^(2d+1)` with `|A|, |B| ≤ bound`.
fn norm_solutions(n: i64, d: u32, bound: u64) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::new();
    let big = |x: i64| BigInt::from(x);
    let nb = big(n);
    let rhs4 = BigInt::from(4) * nb.pow(2 * d + 2);
    let disc_lead = big(4 * n + 1);
    let small_rhs = rhs4.to_i128();
    let b_max = bound as i64;
    for b in -b_max..=b_max {
        // discriminant in A: (4n+1)B² + 4n^(2d+2)
        let root = match small_rhs.and_then(|r| {
            (4 * n as i128 + 1)
                .checked_mul((b as i128) * (b as i128))?
                .checked_add(r)
        }) {
            Some(disc) if disc < 0 => continue,
            Some(disc) => {
                let s = (disc as u128).sqrt();
                if s * s != disc as u128 {
                    continue;
                }
                BigInt::from(s)
            }
            None => {
                let disc = &disc_lead * big(b) * big(b) + &rhs4;
                if disc.is_negative() {
                    continue;
                }
                let s = disc.sqrt();
                if &s * &s != disc {
                    continue;
                }
                s
            }
        };
        let lin = -(big(2 * n + 1) * big(b));
        let den = big(2 * n);
        for s in [root.clone(), -root.clone()] {
            let num = &lin + &s;
            if num.is_multiple_of(&den) {
                let a = num / &den;
                if a.abs() <= BigInt::from(bound) {
                    out.push((a, big(b)));
                }
            }
            if root.is_zero() {
                break;
            }
        }
    }
    out
}

/// All unitary elements `(A + B t)/n^d` found within the bounds, in height order.
fn unitary_candidates(n: i64, bounds: UnitBounds) -> Vec<QuadElem> {
    let an = n.unsigned_abs();
    let max_d = if an == 1 { 0 } else { bounds.denom_power_bound };
    // |nA² + (2n+1)AB + nB²| ≤ (4|n|+1) N² caps the useful denominator power
    let cap = BigInt::from(4 * an + 1) * BigInt::from(bounds.numerator_bound).pow(2);
    let nb = BigInt::from(n);
    let mut found: Vec<(u32, BigInt, BigInt)> = Vec::new();
    for d in 0..=max_d {
        if BigInt::from(an).pow(2 * d + 1) > cap {
            break;
        }
        for (a, b) in norm_solutions(n, d, bounds.numerator_bound) {
            if d > 0 && a.is_multiple_of(&nb) && b.is_multiple_of(&nb) {
                continue;
            }
            found.push((d, a, b));
        }
    }
    found.sort_by(|x, y| {
        let key =
            |(d, a, b): &(u32, BigInt, BigInt)| (*d, a.abs().max(b.abs()), b.abs(), a.is_negative(), b.is_negative());
        key(x).cmp(&key(y))
    });
    found
        .into_iter()
        .map(|(d, a, b)| {
            let den = BigInt::from(n).pow(d);
            QuadElem::new(n, BigRational::new(a, den.clone()), BigRational::new(b, den))
        })
        .collect()
}

struct Classes {
    powers: HashMap<QuadElem, i64>,
    reps: Vec<QuadElem>,
}

impl Classes {
    fn new(n: i64, k_bound: u32) -> Self {
        let mut powers = HashMap::new();
        let t = QuadElem::t(n);
        let ti = QuadElem::t_inv(n);
        let (mut up, mut down) = (QuadElem::one(n), QuadElem::one(n));
        powers.insert(up.clone(), 0);
        for k in 1..=k_bound as i64 {
            up = &up * &t;
            down = &down * &ti;
            powers.entry(up.clone()).or_insert(k);
            powers.entry(down.clone()).or_insert(-k);
        }
        Classes {
            powers,
            reps: Vec::new(),
        }
    }

    /// Index of the class of unit `x` among the current representatives.
    fn find(&self, x: &QuadElem) -> Option<usize> {
        self.reps
            .iter()
            .position(|r| self.powers.contains_key(&(x * &r.conj())))
    }

    fn insert(&mut self, x: QuadElem) {
        if self.find(&x).is_none() {
            self.reps.push(x);
        }
    }

    /// Group structure if the representatives close up under multiplication.
    fn structure(&self) -> Option<UnitClassification> {
        let m = self.reps.len();
        if m > 4 {
            return Some(UnitClassification::Infinite);
        }
        let mut table = vec![vec![0; m]; m];
        for i in 0..m {
            for j in 0..m {
                table[i][j] = self.find(&(&self.reps[i] * &self.reps[j]))?;
            }
        }
        let e = self.find(&QuadElem::one(self.reps[0].n))?;
        let order = |i: usize| -> usize {
            let (mut x, mut k) = (i, 1);
            while x != e && k <= m {
                x = table[x][i];
                k += 1;
            }
            k
        };
        match m {
            1 => Some(UnitClassification::Trivial),
            2 => Some(UnitClassification::Z2),
            4 if (0..m).any(|i| order(i) == 4) => Some(UnitClassification::Z4),
            _ => None,
        }
    }
}

fn search(n: i64, bounds: UnitBounds) -> (Vec<QuadElem>, Option<UnitClassification>) {
    let mut classes = Classes::new(n, bounds.k_bound);
    classes.insert(QuadElem::one(n));
    for x in unitary_candidates(n, bounds) {
        classes.insert(x);
    }
    let obs = classes.structure();
    (classes.reps, obs)
}

/// Bounded search for `U(Δ_n)/{t^k}`, cross-checked against the closed form.
///
/// On disagreement the search is repeated once with larger bounds; a
/// remaining disagreement is reported, never resolved in favour of the search.
pub fn enumerate_unit_classes(n: i64, numerator_bound: u64, denom_power_bound: u32, k_bound: u32) -> UnitGroupReport {
    let classification = classify_unit_group(n);
    let mut bounds = UnitBounds {
        numerator_bound,
        denom_power_bound,
        k_bound,
    };
    if n == 0 {
        // Δ_0 = 1 and the quotient ring is zero
        return UnitGroupReport {
            n,
            classification,
            representatives: vec![QuadElem {
                n: 0,
                a: rat(1),
                b: rat(0),
            }],
            witness: None,
            observed: Some(UnitClassification::Trivial),
            consistent: true,
            bounds,
            retried: false,
        };
    }
    let mut retried = false;
    loop {
        let (reps, observed) = search(n, bounds);
        let minus_one = QuadElem::from_ints(n, -1, 0);
        let witness = if classification == UnitClassification::Infinite {
            let mut cl = Classes::new(n, bounds.k_bound);
            cl.reps = vec![QuadElem::one(n), minus_one];
            reps.iter().find(|r| cl.find(r).is_none()).cloned()
        } else {
            None
        };
        let consistent =
            observed == Some(classification) || (classification == UnitClassification::Infinite && witness.is_some());
        if consistent || retried {
            return UnitGroupReport {
                n,
                classification,
                representatives: reps,
                witness,
                observed,
                consistent,
                bounds,
                retried,
            };
        }
        bounds = bounds.raised();
        retried = true;
    }
}

pub fn enumerate_unit_classes_default(n: i64) -> UnitGroupReport {
    let b = UnitBounds::default();
    enumerate_unit_classes(n, b.numerator_bound, b.denom_power_bound, b.k_bound)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiskCount {
    Zero,
    Finite(usize),
    Infinite,
}

impl fmt::Display for DiskCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiskCount::Zero => write!(f, "0"),
            DiskCount::Finite(k) => write!(f, "{k}"),
            DiskCount::Infinite => write!(f, "infinite"),
        }
    }
}

/// Disks with one double point bounded by the twist knot with `Δ_n`.
///
/// `presentable` says whether the Blanchfield form is presented by `(ε Δ_n)`;
/// when it is, the count does not depend on the sign `ε`.
pub fn disk_count(n: i64, _sign: SignClass, presentable: bool) -> DiskCount {
    if !presentable {
        return DiskCount::Zero;
    }
    match classify_unit_group(n).order() {
        Some(k) => DiskCount::Finite(k),
        None => DiskCount::Infinite,
    }
}

/// Unitary units of `Z[t^±1]/(t-1)^k` written as `Σ a_i (t-1)^i`, `i < k`, `|a_i| ≤ bound`.
///
/// Exhaustive over `(2·bound+1)^k` candidates.
pub fn truncated_unitary(k: usize, bound: u64) -> Vec<LaurentPoly> {
    assert!(k >= 1, "truncation degree must be positive");
    let delta = LaurentPoly::t_minus_one().pow(k as u32);
    let basis: Vec<LaurentPoly> = (0..k).map(|i| LaurentPoly::t_minus_one().pow(i as u32)).collect();
    let b = bound as i64;
    let mut coeffs = vec![-b; k];
    let mut out = Vec::new();
    loop {
        let mut x = LaurentPoly::zero();
        for (c, p) in coeffs.iter().zip(&basis) {
            if *c != 0 {
                x += &p.scale(&BigInt::from(*c));
            }
        }
        if is_unitary(&x, &delta) {
            out.push(x);
        }
        let mut i = 0;
        while i < k && coeffs[i] == b {
            coeffs[i] = -b;
            i += 1;
        }
        if i == k {
            break;
        }
        coeffs[i] += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unitary_examples() {
        let tm1 = LaurentPoly::t_minus_one();
        let d = LaurentPoly::twist_alexander(5);
        assert!(is_unitary(&LaurentPoly::monomial(1, 3), &d));
        assert!(is_unitary(&LaurentPoly::constant(-1), &d));
        assert!(!is_unitary(&LaurentPoly::constant(2), &d));
        assert!(is_unitary(&(&LaurentPoly::one() + &tm1), &tm1.pow(2)));
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce_quadratic(&LaurentPoly::t(), 4), QuadElem::t(4));
        assert_eq!(
            reduce_quadratic(&LaurentPoly::t_inv(), 1),
            QuadElem::from_ints(1, 3, -1)
        );
        for n in [-7, -1, 1, 3, 10] {
            let r = reduce_quadratic(&LaurentPoly::twist_alexander(n), n);
            assert!(r.a.is_zero() && r.b.is_zero(), "n={n}");
        }
    }

    #[test]
    fn reduce_is_multiplicative() {
        let p: LaurentPoly = "2 - 3*t + t^-2".parse().unwrap();
        let q: LaurentPoly = "t^3 + 5*t^-1".parse().unwrap();
        for n in [-3, 2, 7] {
            assert_eq!(
                reduce_quadratic(&(&p * &q), n),
                &reduce_quadratic(&p, n) * &reduce_quadratic(&q, n)
            );
        }
    }

    #[test]
    fn norm_matches_definition() {
        for n in [-5, 1, 6] {
            let t = QuadElem::t(n);
            assert!(t.is_unitary());
            assert!((&t * &QuadElem::t_inv(n)).is_one());
            let x = QuadElem::from_ints(n, 2, 3);
            let prod = &x * &x.conj();
            assert!(prod.b.is_zero());
            assert_eq!(prod.a, x.norm());
        }
    }

    #[test]
    fn closed_form_table() {
        use UnitClassification::*;
        let expect = [
            (-1, Trivial),
            (0, Trivial),
            (1, Z2),
            (2, Z2),
            (3, Infinite),
            (6, Infinite),
            (-2, Z2),
            (-8, Z2),
            (-4, Z4),
            (-9, Z4),
            (-6, Infinite),
            (-12, Infinite),
            (-16, Z4),
            (-32, Z2),
        ];
        for (n, c) in expect {
            assert_eq!(classify_unit_group(n), c, "n={n}");
        }
    }

    #[test]
    fn small_searches() {
        let r = enumerate_unit_classes_default(-1);
        assert_eq!(r.classification, UnitClassification::Trivial);
        assert!(r.consistent);
        let r = enumerate_unit_classes_default(1);
        assert_eq!(r.representatives.len(), 2);
        assert!(r.representatives[0].is_one());
        assert_eq!(r.representatives[1], QuadElem::from_ints(1, -1, 0));
        let r = enumerate_unit_classes_default(-9);
        assert_eq!(r.observed, Some(UnitClassification::Z4));
        assert_eq!(r.to_string().split(' ').next(), Some("n=-9"));
    }

    #[test]
    fn infinite_witnesses() {
        for n in [6, -6, -12] {
            let r = enumerate_unit_classes_default(n);
            assert!(r.consistent, "{r}");
            let w = r.witness.expect("witness");
            assert!(w.is_unitary());
        }
    }

    #[test]
    fn disk_counts() {
        assert_eq!(disk_count(-1, SignClass::Plus, true), DiskCount::Finite(1));
        assert_eq!(disk_count(6, SignClass::Plus, true), DiskCount::Infinite);
        assert_eq!(disk_count(6, SignClass::Minus, false), DiskCount::Zero);
    }

    #[test]
    fn truncated_examples() {
        let one = truncated_unitary(1, 5);
        assert_eq!(one, vec![LaurentPoly::constant(-1), LaurentPoly::one()]);
        let two = truncated_unitary(2, 10);
        assert_eq!(two.len(), 42);
        let tm1 = LaurentPoly::t_minus_one();
        for b in -10..=10i64 {
            let x = &LaurentPoly::one() + &tm1.scale(&b.into());
            assert!(two.contains(&x) && two.contains(&-&x));
        }
    }
}
