//! Twisted homology of the plumbed 3-manifolds `P_g(c+, c-)` with coefficients
//! in `Z[t^±1]`, where the fibre maps to `t` and genus and plumbing loops to 1.
//!
//! Each plumbing block is an explicit equivariant cell complex. Its first
//! homology is certified by checking a fixed list of cycles against the
//! boundary map (no general kernel algorithm), and the blocks are then
//! assembled as a direct sum.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::forms::{MatrixRecord, PolyMatrix};
use crate::intmat::IntMatrix;
use crate::isometry::SignClass;
use crate::laurent::{LaurentError, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("presentation is not torsion: every maximal minor vanishes")]
    NonTorsion,
    #[error("not an Alexander polynomial: {0}")]
    BadAlexander(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

fn p(s: &str) -> LaurentPoly {
    s.parse().expect("literal polynomial")
}

/// `C_2 -> C_1 -> C_0` (or longer) over `Z[t^±1]`; `boundaries[d-1]` is `∂_d`.
#[derive(Debug, Clone)]
pub struct TwistedChainComplex {
    pub ranks: Vec<usize>,
    pub boundaries: Vec<PolyMatrix>,
    pub labels: Vec<Vec<String>>,
}

impl TwistedChainComplex {
    pub fn new(labels: Vec<Vec<&str>>, boundaries: Vec<PolyMatrix>) -> Result<Self, HomologyError> {
        let ranks: Vec<usize> = labels.iter().map(Vec::len).collect();
        if boundaries.len() + 1 != ranks.len() {
            return Err(HomologyError::Dimension(format!(
                "{} boundary maps for {} degrees",
                boundaries.len(),
                ranks.len()
            )));
        }
        for (d, b) in boundaries.iter().enumerate() {
            if b.rows() != ranks[d] || b.cols() != ranks[d + 1] {
                return Err(HomologyError::Dimension(format!(
                    "boundary in degree {} is {}x{}, expected {}x{}",
                    d + 1,
                    b.rows(),
                    b.cols(),
                    ranks[d],
                    ranks[d + 1]
                )));
            }
        }
        Ok(TwistedChainComplex {
            ranks,
            labels: labels
                .into_iter()
                .map(|l| l.into_iter().map(String::from).collect())
                .collect(),
            boundaries,
        })
    }

    /// `∂_d`, for `d ≥ 1`.
    pub fn boundary(&self, d: usize) -> &PolyMatrix {
        &self.boundaries[d - 1]
    }

    /// Every composite `∂_{d} ∂_{d+1}` is zero.
    pub fn is_chain_complex(&self) -> bool {
        self.boundaries.windows(2).all(|w| {
            let prod = w[0].checked_mul(&w[1]).expect("shapes checked at construction");
            (0..prod.rows()).all(|i| (0..prod.cols()).all(|j| prod.get(i, j).is_zero()))
        })
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.ranks
            .iter()
            .enumerate()
            .map(|(d, &r)| if d % 2 == 0 { r as i64 } else { -(r as i64) })
            .sum()
    }

    /// Largest `|exponent|` appearing in any boundary entry.
    fn degree_span(&self) -> i64 {
        self.boundaries
            .iter()
            .flat_map(|b| (0..b.rows()).flat_map(move |i| (0..b.cols()).map(move |j| b.get(i, j))))
            .map(exp_span)
            .max()
            .unwrap_or(0)
    }
}

fn exp_span(p: &LaurentPoly) -> i64 {
    match p.highest_exponent() {
        Some(h) => h.abs().max(p.lowest_exponent().abs()),
        None => 0,
    }
}

/// The Q-block: a disk with two holes times the circle, with the two
/// inner boundary tori glued according to the sign of the double point.
///
/// 0-cells `[z1v, zv]`, 1-cells `[α1v, ωv, z1e, β1, ξv, ze]`, 2-cells `[C1, C2, ξe, ωe]`.
pub fn build_q_block(sign: SignClass) -> TwistedChainComplex {
    let labels = vec![
        vec!["z1v", "zv"],
        vec!["a1v", "wv", "z1e", "b1", "xv", "ze"],
        vec!["C1", "C2", "xe", "we"],
    ];
    let z = LaurentPoly::zero;
    let tm1 = LaurentPoly::t_minus_one();
    let beta = match sign {
        SignClass::Plus => tm1.clone(),
        SignClass::Minus => p("t^-1 - 1"),
    };
    let d1 = PolyMatrix::from_rows(vec![
        vec![z(), z(), tm1.clone(), beta, LaurentPoly::one(), z()],
        vec![z(), z(), z(), z(), LaurentPoly::constant(-1), tm1],
    ])
    .expect("rectangular");
    let one_minus_t = p("1 - t");
    // columns are the lifted attaching words of C1, C2, ξe, ωe
    let cols: [[LaurentPoly; 6]; 4] = match sign {
        SignClass::Plus => [
            [LaurentPoly::t(), z(), p("1"), p("-1"), z(), z()],
            [p("1"), z(), p("1"), p("-1"), z(), z()],
            [z(), z(), p("1"), z(), one_minus_t.clone(), p("-1")],
            [z(), one_minus_t.clone(), p("-1"), p("1"), z(), z()],
        ],
        SignClass::Minus => [
            [p("1"), z(), p("-1"), p("-t"), z(), z()],
            [p("-1"), z(), LaurentPoly::t_inv(), p("1"), z(), z()],
            [z(), z(), p("1"), z(), one_minus_t.clone(), p("-1")],
            [z(), one_minus_t, p("-1"), p("-t"), z(), z()],
        ],
    };
    let d2 = PolyMatrix::from_rows((0..6).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect())
        .expect("rectangular");
    TwistedChainComplex::new(labels, vec![d1, d2]).expect("consistent shapes")
}

/// The cycles `h1..h4` spanning `ker ∂_1` of the Q-block.
pub fn q_block_kernel(sign: SignClass) -> Vec<Vec<LaurentPoly>> {
    let z = LaurentPoly::zero;
    let e = |k: usize| -> Vec<LaurentPoly> { (0..6).map(|i| if i == k { LaurentPoly::one() } else { z() }).collect() };
    let h3 = match sign {
        SignClass::Plus => vec![z(), z(), p("1"), p("-1"), z(), z()],
        SignClass::Minus => vec![z(), z(), p("1"), LaurentPoly::t(), z(), z()],
    };
    vec![e(0), e(1), h3, vec![z(), z(), p("1"), z(), p("1 - t"), p("-1")]]
}

/// A genus loop times the fibre: 0-cell `v`, 1-cells `[y, f]`, 2-cell `[yf]`.
pub fn build_genus_block() -> TwistedChainComplex {
    let d1 = PolyMatrix::from_rows(vec![vec![LaurentPoly::zero(), LaurentPoly::t_minus_one()]]).expect("rectangular");
    let d2 = PolyMatrix::from_rows(vec![vec![p("1 - t")], vec![LaurentPoly::zero()]]).expect("rectangular");
    TwistedChainComplex::new(vec![vec!["v"], vec!["y", "f"], vec!["yf"]], vec![d1, d2]).expect("consistent shapes")
}

pub fn genus_block_kernel() -> Vec<Vec<LaurentPoly>> {
    vec![vec![LaurentPoly::one(), LaurentPoly::zero()]]
}

fn apply(m: &PolyMatrix, v: &[LaurentPoly]) -> Vec<LaurentPoly> {
    (0..m.rows())
        .map(|i| {
            let mut acc = LaurentPoly::zero();
            for (j, x) in v.iter().enumerate() {
                if !x.is_zero() && !m.get(i, j).is_zero() {
                    acc += &(m.get(i, j) * x);
                }
            }
            acc
        })
        .collect()
}

/// Coefficients `p_k` with `Σ p_k gens[k] = target`, each `p_k` supported in `[-w, w]`.
fn solve_window(gens: &[Vec<LaurentPoly>], target: &[LaurentPoly], w: i64) -> Option<Vec<LaurentPoly>> {
    let m = target.len();
    let k = gens.len();
    let all = gens.iter().flatten().chain(target.iter()).filter(|x| !x.is_zero());
    let (mut lo, mut hi) = (0i64, 0i64);
    for x in all {
        lo = lo.min(x.lowest_exponent());
        hi = hi.max(x.highest_exponent().unwrap_or(0));
    }
    let (xlo, xhi) = (lo - w, hi + w);
    let nexp = (xhi - xlo + 1) as usize;
    let width = (2 * w + 1) as usize;
    let mut a = IntMatrix::zeros(m * nexp, k * width);
    let mut b = vec![BigInt::zero(); m * nexp];
    for i in 0..m {
        for x in xlo..=xhi {
            let row = i * nexp + (x - xlo) as usize;
            b[row] = target[i].coeff(x);
            for (kk, g) in gens.iter().enumerate() {
                for e in -w..=w {
                    let c = g[i].coeff(x - e);
                    if !c.is_zero() {
                        a.set(row, kk * width + (e + w) as usize, c);
                    }
                }
            }
        }
    }
    let sol = a.solve_integer(&b)?;
    Some(
        (0..k)
            .map(|kk| LaurentPoly::from_coeffs(-w, sol[kk * width..(kk + 1) * width].to_vec()))
            .collect(),
    )
}

/// Bounded-degree membership: tries window `w`, then `2w` once.
fn express(gens: &[Vec<LaurentPoly>], target: &[LaurentPoly], w: i64) -> Option<Vec<LaurentPoly>> {
    if target.iter().all(LaurentPoly::is_zero) {
        return Some(vec![LaurentPoly::zero(); gens.len()]);
    }
    solve_window(gens, target, w).or_else(|| solve_window(gens, target, 2 * w))
}

/// Result of checking a candidate generating set for `ker ∂_1`.
#[derive(Debug, Clone)]
pub struct KernelCertificate {
    /// `∂_1 h = 0` for every candidate.
    pub cycles: bool,
    /// Each column of `∂_2` written in the candidates, if found.
    pub expressions: Vec<Option<Vec<LaurentPoly>>>,
}

impl KernelCertificate {
    pub fn verified(&self) -> bool {
        self.cycles && self.expressions.iter().all(Option::is_some)
    }

    /// Relation matrix in candidate coordinates (columns are relators).
    pub fn relation_matrix(&self) -> Option<PolyMatrix> {
        let cols: Vec<&Vec<LaurentPoly>> = self.expressions.iter().map(Option::as_ref).collect::<Option<_>>()?;
        let k = cols.first().map_or(0, |c| c.len());
        let mut m = PolyMatrix::zeros(k, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Some(m)
    }
}

fn ansatz_window(cc: &TwistedChainComplex, candidates: &[Vec<LaurentPoly>]) -> i64 {
    let d = candidates
        .iter()
        .flatten()
        .map(exp_span)
        .max()
        .unwrap_or(0)
        .max(cc.degree_span());
    d + 2
}

pub fn kernel_certificate(
    cc: &TwistedChainComplex,
    candidates: &[Vec<LaurentPoly>],
) -> Result<KernelCertificate, HomologyError> {
    if cc.ranks.len() < 3 {
        return Err(HomologyError::Dimension("complex needs degrees 0, 1 and 2".into()));
    }
    let n1 = cc.ranks[1];
    if let Some(bad) = candidates.iter().find(|h| h.len() != n1) {
        return Err(HomologyError::Dimension(format!(
            "candidate has {} entries, C_1 has rank {n1}",
            bad.len()
        )));
    }
    let d1 = cc.boundary(1);
    let d2 = cc.boundary(2);
    let cycles = candidates.iter().all(|h| apply(d1, h).iter().all(LaurentPoly::is_zero));
    let w = ansatz_window(cc, candidates);
    let expressions = (0..d2.cols())
        .map(|j| {
            let col = d2.column(j);
            if candidates.is_empty() {
                col.iter().all(LaurentPoly::is_zero).then(Vec::new)
            } else {
                express(candidates, &col, w)
            }
        })
        .collect();
    Ok(KernelCertificate { cycles, expressions })
}

/// Candidates are cycles and `im ∂_2` lies in their span.
pub fn verify_kernel_generators(
    cc: &TwistedChainComplex,
    candidates: &[Vec<LaurentPoly>],
) -> Result<bool, HomologyError> {
    Ok(kernel_certificate(cc, candidates)?.verified())
}

/// Whether the chain `v` in `C_1` is a boundary, found by the bounded ansatz.
pub fn is_boundary(cc: &TwistedChainComplex, v: &[LaurentPoly]) -> bool {
    let d2 = cc.boundary(2);
    let cols: Vec<Vec<LaurentPoly>> = (0..d2.cols()).map(|j| d2.column(j)).collect();
    express(&cols, v, ansatz_window(cc, &[v.to_vec()])).is_some()
}

/// `s` with `[α1v] = s (t-1) [ω]` in the Q-block homology, if exactly one sign works.
pub fn alpha_relation_sign(cc: &TwistedChainComplex) -> Option<i8> {
    let tm1 = LaurentPoly::t_minus_one();
    let mut found = None;
    for s in [1i8, -1] {
        let mut v = vec![LaurentPoly::zero(); cc.ranks[1]];
        v[0] = LaurentPoly::one();
        v[1] = -&tm1.scale(&BigInt::from(s));
        if is_boundary(cc, &v) {
            if found.is_some() {
                return None;
            }
            found = Some(s);
        }
    }
    found
}

/// The lift of the outer boundary circle `ξ ᾱ1 ω ᾱ2 ω̄ ξ̄` to `C_1`, with `α2 = ᾱ1`.
pub fn q_block_outer_boundary_lift() -> Vec<LaurentPoly> {
    // (cell index, orientation) along the word; no letter involves the fibre
    let word: [(usize, i64); 6] = [(4, 1), (0, -1), (1, 1), (0, 1), (1, -1), (4, -1)];
    let mut v = vec![LaurentPoly::zero(); 6];
    for (cell, s) in word {
        v[cell] += &LaurentPoly::constant(s);
    }
    v
}

#[derive(Debug, Clone, Serialize)]
pub struct BlockCertificate {
    pub block: String,
    pub chain_complex: bool,
    pub kernel_verified: bool,
    /// Relation matrix in the kernel generators.
    pub relations: Option<MatrixRecord>,
    pub order: Option<LaurentPoly>,
    pub alpha_sign: Option<i8>,
    pub boundary_lift_zero: Option<bool>,
}

impl BlockCertificate {
    pub fn ok(&self) -> bool {
        self.chain_complex && self.kernel_verified && self.boundary_lift_zero != Some(false)
    }
}

fn certify(block: &str, cc: &TwistedChainComplex, kernel: &[Vec<LaurentPoly>], q: bool) -> BlockCertificate {
    let cert = kernel_certificate(cc, kernel).expect("fixed shapes");
    let rel = cert.relation_matrix();
    let order = rel
        .as_ref()
        .and_then(|r| r.det().ok())
        .and_then(|d| d.normalize_unit().ok());
    BlockCertificate {
        block: block.to_string(),
        chain_complex: cc.is_chain_complex(),
        kernel_verified: cert.verified(),
        relations: rel.map(|r| r.to_record()),
        order,
        alpha_sign: if q { alpha_relation_sign(cc) } else { None },
        boundary_lift_zero: q.then(|| q_block_outer_boundary_lift().iter().all(LaurentPoly::is_zero)),
    }
}

pub fn certify_q_block(sign: SignClass) -> BlockCertificate {
    let name = match sign {
        SignClass::Plus => "Q+",
        SignClass::Minus => "Q-",
    };
    certify(name, &build_q_block(sign), &q_block_kernel(sign), true)
}

pub fn certify_genus_block() -> BlockCertificate {
    certify("genus", &build_genus_block(), &genus_block_kernel(), false)
}

/// Per-block evidence behind an assembled presentation.
#[derive(Debug, Clone, Serialize)]
pub struct H1Certificate {
    pub blocks: Vec<BlockCertificate>,
    pub gluing: String,
}

impl H1Certificate {
    pub fn ok(&self) -> bool {
        self.blocks.iter().all(BlockCertificate::ok)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PlumbedSource {
    pub g: usize,
    pub c_plus: usize,
    pub c_minus: usize,
}

/// Generators and relators (columns of `relations`) of a `Z[t^±1]`-module.
#[derive(Debug, Clone)]
pub struct ModulePresentation {
    pub generators: Vec<String>,
    pub relations: PolyMatrix,
    pub source: Option<PlumbedSource>,
    pub certificate: Option<H1Certificate>,
}

impl ModulePresentation {
    pub fn new(generators: Vec<String>, relations: PolyMatrix) -> Result<Self, HomologyError> {
        if relations.rows() != generators.len() {
            return Err(HomologyError::Dimension(format!(
                "{} generators but relation matrix has {} rows",
                generators.len(),
                relations.rows()
            )));
        }
        Ok(ModulePresentation {
            generators,
            relations,
            source: None,
            certificate: None,
        })
    }
}

impl Serialize for ModulePresentation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ModulePresentation", 4)?;
        st.serialize_field("generators", &self.generators)?;
        st.serialize_field("relations", &self.relations.to_record())?;
        st.serialize_field("source", &self.source)?;
        st.serialize_field("certificate", &self.certificate)?;
        st.end()
    }
}

impl fmt::Display for ModulePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generators: [{}]", self.generators.join(", "))?;
        write!(f, "relations: {}", self.relations)
    }
}

/// `H_1(P_g(c+, c-); Z[t^±1])`: `Z_ε^{2g} ⊕ (Z[t^±1]/(t-1)^2)^c`.
pub fn h1_presentation(g: usize, c_plus: usize, c_minus: usize) -> ModulePresentation {
    let mut generators = Vec::new();
    let mut diag = Vec::new();
    for i in 1..=g {
        generators.push(format!("a{i}"));
        generators.push(format!("b{i}"));
        diag.push(LaurentPoly::t_minus_one());
        diag.push(LaurentPoly::t_minus_one());
    }
    for i in 1..=c_plus + c_minus {
        generators.push(format!("w{i}"));
        diag.push(LaurentPoly::t_minus_one().pow(2));
    }
    let mut blocks = Vec::new();
    if g > 0 {
        blocks.push(certify_genus_block());
    }
    if c_plus > 0 {
        blocks.push(certify_q_block(SignClass::Plus));
    }
    if c_minus > 0 {
        blocks.push(certify_q_block(SignClass::Minus));
    }
    let relations = PolyMatrix::diagonal(diag);
    ModulePresentation {
        generators,
        relations,
        source: Some(PlumbedSource { g, c_plus, c_minus }),
        certificate: Some(H1Certificate {
            blocks,
            gluing: "the outer boundary circle of each plumbing block lifts to the zero chain, so the \
                     Mayer-Vietoris sequence splits into a direct sum of block modules"
                .into(),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub order: LaurentPoly,
    pub rank_at_one: usize,
    pub untwisted_h1_rank: Option<usize>,
    /// Ranks of `M/(t-1)M` and `(t-1)M/(t-1)^2 M`.
    pub filtration: (usize, usize),
}

impl InvariantReport {
    pub fn consistent(&self) -> bool {
        self.filtration.0 == self.rank_at_one
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "order={} rank_at_one={} filtration=({}, {})",
            self.order, self.rank_at_one, self.filtration.0, self.filtration.1
        )?;
        if let Some(u) = self.untwisted_h1_rank {
            write!(f, " untwisted_h1_rank={u}")?;
        }
        Ok(())
    }
}

/// `p'(1) = Σ k c_k`.
fn derivative_at_one(p: &LaurentPoly) -> BigInt {
    p.terms().map(|(k, c)| c * BigInt::from(k)).sum()
}

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Order, rank at `t = 1` and the `(t-1)`-adic filtration ranks.
pub fn invariants(pres: &ModulePresentation) -> Result<InvariantReport, HomologyError> {
    let r = &pres.relations;
    let n = r.rows();
    if n > r.cols() {
        return Err(HomologyError::NonTorsion);
    }
    let order = if n == 0 {
        LaurentPoly::one()
    } else {
        let mut g = LaurentPoly::zero();
        for cols in choose(r.cols(), n) {
            let mut minor = PolyMatrix::zeros(n, n);
            for (jj, &j) in cols.iter().enumerate() {
                for i in 0..n {
                    minor.set(i, jj, r.get(i, j).clone());
                }
            }
            let d = minor.det().expect("square");
            if g.is_zero() {
                g = d;
            } else if !d.is_zero() {
                g = g.gcd(&d)?;
            }
            if g.is_unit() {
                break;
            }
        }
        if g.is_zero() {
            return Err(HomologyError::NonTorsion);
        }
        g.normalize_unit()?
    };
    let r0 = r.eval_one();
    let rank_at_one = n - r0.rank();
    // M/u²M over Z: generators (e_i, u e_i), relators ρ and uρ with ρ = ρ0 + ρ1 u
    let m = r.cols();
    let mut big = IntMatrix::zeros(2 * n, 2 * m);
    for i in 0..n {
        for j in 0..m {
            let e = r.get(i, j);
            let (c0, c1) = (e.eval_one(), derivative_at_one(e));
            big.set(i, j, c0.clone());
            big.set(n + i, j, c1);
            big.set(n + i, m + j, c0);
        }
    }
    let quot2 = 2 * n - big.rank();
    let untwisted_h1_rank = pres.source.map(|s| untwisted_ranks(s.g, s.c_plus, s.c_minus).1);
    Ok(InvariantReport {
        order,
        rank_at_one,
        untwisted_h1_rank,
        filtration: (rank_at_one, quot2 - rank_at_one),
    })
}

/// Ranks of `H_i(P_g(c+, c-); Z)` for `i = 0..3`.
pub fn untwisted_ranks(g: usize, c_plus: usize, c_minus: usize) -> (usize, usize, usize, usize) {
    let c = c_plus + c_minus;
    (1, 2 * g + c + 1, 2 * g + c, 0)
}

/// Invariants of the plumbed manifold after gluing in a knot exterior.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PkReport {
    pub untwisted_h1_rank: usize,
    pub order: LaurentPoly,
    /// `Δ_K` and `t - 1` generate the unit ideal up to associates.
    pub coprime: bool,
}

impl fmt::Display for PkReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "untwisted_h1_rank={} order={} coprime={}",
            self.untwisted_h1_rank, self.order, self.coprime
        )
    }
}

pub fn pk_module_ranks(
    g: usize,
    c_plus: usize,
    c_minus: usize,
    delta_k: &LaurentPoly,
) -> Result<PkReport, HomologyError> {
    let at_one = delta_k.eval_one();
    if at_one.abs() != BigInt::one() {
        return Err(HomologyError::BadAlexander(format!("Δ(1) = {at_one}, expected ±1")));
    }
    let delta = if at_one.is_negative() {
        -delta_k
    } else {
        delta_k.clone()
    };
    if !delta.associated(&delta.involute()) {
        return Err(HomologyError::BadAlexander(format!(
            "{delta} is not symmetric up to units"
        )));
    }
    let c = c_plus + c_minus;
    let order = (&delta * &LaurentPoly::t_minus_one().pow((2 * g + 2 * c) as u32)).normalize_unit()?;
    let coprime = delta.gcd(&LaurentPoly::t_minus_one())?.is_unit();
    Ok(PkReport {
        untwisted_h1_rank: untwisted_ranks(g, c_plus, c_minus).1,
        order,
        coprime,
    })
}
