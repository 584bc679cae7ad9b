//! Realness through semidefinite feasibility.
//!
//! For a left Gröbner basis `p_1..p_r` of maximal degree `d`, the ideal is
//! non-real iff there are a nonzero `G ⪰ 0` indexed by the standard words
//! of degree `< d` (words that are not left multiples of a leading word)
//! and multipliers `q_j` with `deg(q_j p_j) < 2d` such that
//!
//! ```text
//!     m* G m = Σ_j (q_j p_j + p_j* q_j*),        tr(G) = 1.
//! ```
//!
//! Restricting `G` to standard words loses nothing: replacing each square
//! root `r` by its normal form changes the SOS by elements of `I + I*`, and
//! a nonzero normal form is exactly an `r` outside the ideal. When every
//! basis element is homogeneous the problem splits by degree: the top
//! homogeneous part of a certificate is again a certificate, so one problem
//! per degree `e < d` with homogeneous `G` over standard words of degree `e`
//! suffices.
//!
//! The equality constraints are reduced exactly over the rationals first.
//! Diagonal entries forced to zero take their whole row and column with
//! them (a PSD matrix with a zero diagonal entry has a zero row), which
//! usually shrinks the numeric problem drastically; the same pass also
//! spots exact contradictions. The remaining affine slice is handed to the
//! alternating-projection solver. Feasible points are pushed into the
//! interior, rounded and completed exactly when possible, otherwise turned
//! into a numeric certificate.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{Exactness, Method, NonRealCertificate, RealTestConfig, RealnessVerdict, Status};
use crate::error::{Error, Result};
use crate::gram::{certificate_from_gram, SosCertificate};
use crate::ideal::LeftGroebnerBasis;
use crate::linalg::dense::{eigen_sym, Mat};
use crate::linalg::exact::{psd_check_exact, rref, PsdCheck, QMatrix, Rref, SparseRow};
use crate::poly::{Polynomial, Q};
use crate::sdp::{
    project_shifted_psd, solve_from, svec_index, svec_len, svec_pair, EntryConstraint, FeasibilityResult,
    FeasibilityStatus, SdpProblem, SolveOptions,
};
use crate::word::{words_of_degree, Word};

/// The exact linear system of one realness SDP.
///
/// Unknowns are numbered with the multiplier coefficients first
/// (`q_unknowns[i]` is column `i`) followed by the upper triangle of `G`
/// (`G(a, b)` is column `num_q() + svec_index(n, a, b)`).
#[derive(Clone, Debug)]
pub struct RealSdp {
    pub g: usize,
    /// Words indexing `G`.
    pub basis: Vec<Word>,
    /// The Gröbner basis elements `p_j`.
    pub gens: Vec<Polynomial>,
    /// `(j, u)`: the coefficient of `u` in `q_j`.
    pub q_unknowns: Vec<(usize, Word)>,
    /// One row per word, plus the trace normalisation.
    pub rows: Vec<SparseRow>,
    /// The degree of `G`'s words when the problem is graded.
    pub degree: Option<usize>,
}

impl RealSdp {
    pub fn n(&self) -> usize {
        self.basis.len()
    }

    pub fn num_q(&self) -> usize {
        self.q_unknowns.len()
    }

    pub fn num_cols(&self) -> usize {
        self.num_q() + svec_len(self.n())
    }

    pub fn g_col(&self, a: usize, b: usize) -> usize {
        self.num_q() + svec_index(self.n(), a, b)
    }

    /// `(a, b)` with `a ≤ b` for a `G` column.
    pub fn g_entry(&self, col: usize) -> (usize, usize) {
        svec_pair(self.n(), col - self.num_q())
    }

    fn assemble(g: usize, basis: Vec<Word>, gens: Vec<Polynomial>, q_unknowns: Vec<(usize, Word)>) -> RealSdp {
        let mut sdp = RealSdp { g, basis, gens, q_unknowns, rows: Vec::new(), degree: None };
        let n = sdp.n();
        let mut by_word: BTreeMap<Word, SparseRow> = BTreeMap::new();
        for a in 0..n {
            for b in a..n {
                let col = sdp.g_col(a, b);
                let w = &sdp.basis[a].star() * &sdp.basis[b];
                by_word.entry(w).or_default().add(col, Q::from_integer(1.into()));
                if a != b {
                    let w = &sdp.basis[b].star() * &sdp.basis[a];
                    by_word.entry(w).or_default().add(col, Q::from_integer(1.into()));
                }
            }
        }
        for (col, (j, u)) in sdp.q_unknowns.iter().enumerate() {
            let up = sdp.gens[*j].left_mul_word(u);
            let sym = &up + &up.star();
            for (w, c) in sym.terms() {
                by_word.entry(w.clone()).or_default().add(col, -c.clone());
            }
        }
        let mut trace = SparseRow::new();
        for a in 0..n {
            trace.add(sdp.g_col(a, a), Q::from_integer(1.into()));
        }
        trace.rhs = Q::from_integer(1.into());
        sdp.rows = by_word.into_values().filter(|r| !r.is_trivial()).collect();
        sdp.rows.push(trace);
        sdp
    }
}

fn standard_words(leads: &[Word], g: usize, degree: usize) -> impl Iterator<Item = Word> + '_ {
    words_of_degree(g, degree).into_iter().filter(move |w| !leads.iter().any(|l| w.is_left_multiple_of(l)))
}

fn checked_basis(b: &LeftGroebnerBasis) -> Result<(usize, Vec<Polynomial>, Vec<Word>)> {
    if b.is_empty() {
        return Err(Error::EmptyInput);
    }
    let g = b.num_vars().max(1);
    let gens: Vec<Polynomial> = b.polys.iter().map(|p| p.clone().with_num_vars(g)).collect();
    Ok((g, gens, b.leading_words()))
}

/// The SDP over standard words of degree `< d` with multipliers of degree
/// `≤ 2d − 1 − deg p_j`.
pub fn build_real_sdp(b: &LeftGroebnerBasis) -> Result<RealSdp> {
    let (g, gens, leads) = checked_basis(b)?;
    let d = b.max_degree();
    let basis: Vec<Word> = (0..d).flat_map(|k| standard_words(&leads, g, k)).collect();
    let mut q_unknowns = Vec::new();
    for (j, p) in gens.iter().enumerate() {
        let dj = p.degree().unwrap_or(0);
        for k in 0..(2 * d).saturating_sub(dj) {
            q_unknowns.extend(words_of_degree(g, k).into_iter().map(|u| (j, u)));
        }
    }
    Ok(RealSdp::assemble(g, basis, gens, q_unknowns))
}

/// The degree-`e` slice for a homogeneous basis: `G` over standard words of
/// degree `e`, `q_j` homogeneous of degree `2e − deg p_j`.
pub fn build_real_sdp_graded(b: &LeftGroebnerBasis, e: usize) -> Result<RealSdp> {
    let (g, gens, leads) = checked_basis(b)?;
    if !gens.iter().all(Polynomial::is_homogeneous) {
        return Err(Error::NotHomogeneous);
    }
    let basis: Vec<Word> = standard_words(&leads, g, e).collect();
    let mut q_unknowns = Vec::new();
    for (j, p) in gens.iter().enumerate() {
        let dj = p.degree().unwrap_or(0);
        if 2 * e >= dj {
            q_unknowns.extend(words_of_degree(g, 2 * e - dj).into_iter().map(|u| (j, u)));
        }
    }
    let mut sdp = RealSdp::assemble(g, basis, gens, q_unknowns);
    sdp.degree = Some(e);
    Ok(sdp)
}

/// An exact reason why no admissible `G` exists.
#[derive(Clone, Debug, PartialEq)]
pub enum ExactInfeasibility {
    /// The linear constraints alone have no solution.
    Inconsistent,
    /// The constraints pin a diagonal entry to a negative value.
    NegativeDiagonal { word: Word, value: Q },
    /// A constraint `Σ c_a G(a, a) = b` with all `c_a` of one strict sign
    /// and `b` of the other.
    SignedDiagonalRow,
    /// `G` is completely determined and not PSD.
    NotPsd,
    /// With one free parameter left, the diagonal entries cannot all be
    /// nonnegative at once.
    EmptyDiagonalInterval,
}

/// The reduced linear system after removing forced-zero rows and columns.
#[derive(Clone, Debug)]
pub struct Presolve {
    pub rref: Rref,
    /// `zero[a]`: row and column `a` of `G` vanish on every PSD solution.
    pub zero: Vec<bool>,
    pub infeasible: Option<ExactInfeasibility>,
}

impl Presolve {
    pub fn kept(&self) -> Vec<usize> {
        (0..self.zero.len()).filter(|&a| !self.zero[a]).collect()
    }
}

/// Exact elimination plus facial reduction on the diagonal.
pub fn presolve(sdp: &RealSdp) -> Presolve {
    let n = sdp.n();
    let nq = sdp.num_q();
    let ncols = sdp.num_cols();
    let mut zero = vec![false; n];
    let mut extra: Vec<SparseRow> = Vec::new();
    loop {
        let rr = rref(ncols, sdp.rows.iter().cloned().chain(extra.iter().cloned()), |c| usize::from(c >= nq));
        if !rr.consistent {
            return Presolve { rref: rr, zero, infeasible: Some(ExactInfeasibility::Inconsistent) };
        }
        let mut newly = Vec::new();
        for row in rr.rows.range(nq..).map(|(_, r)| r) {
            let mut diag = Vec::with_capacity(row.entries.len());
            for (&c, v) in &row.entries {
                let (a, b) = sdp.g_entry(c);
                if a != b {
                    diag.clear();
                    break;
                }
                diag.push((a, v));
            }
            if diag.is_empty() {
                continue;
            }
            let positive = diag.iter().all(|(_, v)| v.is_positive());
            let negative = diag.iter().all(|(_, v)| v.is_negative());
            if !positive && !negative {
                continue;
            }
            let opposite = if positive { row.rhs.is_negative() } else { row.rhs.is_positive() };
            if opposite {
                let why = if diag.len() == 1 {
                    ExactInfeasibility::NegativeDiagonal {
                        word: sdp.basis[diag[0].0].clone(),
                        value: &row.rhs / diag[0].1,
                    }
                } else {
                    ExactInfeasibility::SignedDiagonalRow
                };
                return Presolve { rref: rr, zero, infeasible: Some(why) };
            }
            if row.rhs.is_zero() {
                newly.extend(diag.iter().map(|(a, _)| *a).filter(|&a| !zero[a]));
            }
        }
        if newly.is_empty() {
            return Presolve { rref: rr, zero, infeasible: None };
        }
        for a in newly {
            if zero[a] {
                continue;
            }
            zero[a] = true;
            for b in 0..n {
                let mut r = SparseRow::new();
                r.add(sdp.g_col(a, b), Q::from_integer(1.into()));
                extra.push(r);
            }
        }
    }
}

fn free_g_columns(sdp: &RealSdp, rr: &Rref) -> Vec<usize> {
    (sdp.num_q()..sdp.num_cols()).filter(|&c| !rr.is_pivot(c)).collect()
}

/// The full `G` for given values of the free `G` columns.
fn exact_gram(sdp: &RealSdp, rr: &Rref, free: &BTreeMap<usize, Q>) -> QMatrix {
    let n = sdp.n();
    let mut m = vec![vec![Q::zero(); n]; n];
    for a in 0..n {
        for b in a..n {
            let v = rr.evaluate(sdp.g_col(a, b), free);
            m[b][a] = v.clone();
            m[a][b] = v;
        }
    }
    m
}

/// Exact arguments for infeasibility of the presolved problem.
pub fn exact_postcheck(sdp: &RealSdp, pre: &Presolve) -> Result<Option<ExactInfeasibility>> {
    if pre.infeasible.is_some() {
        return Ok(pre.infeasible.clone());
    }
    let rr = &pre.rref;
    let free = free_g_columns(sdp, rr);
    match free.len() {
        0 => {
            let gram = exact_gram(sdp, rr, &BTreeMap::new());
            if let PsdCheck::NotPsd(_) = psd_check_exact(&gram)? {
                return Ok(Some(ExactInfeasibility::NotPsd));
            }
        }
        1 => {
            // every diagonal entry is c + k t; intersect the half-lines c + k t ≥ 0
            let f = free[0];
            let (mut lo, mut hi): (Option<Q>, Option<Q>) = (None, None);
            for a in pre.kept() {
                let col = sdp.g_col(a, a);
                let (c, k) = if col == f {
                    (Q::zero(), Q::from_integer(1.into()))
                } else {
                    let row = &rr.rows[&col];
                    (row.rhs.clone(), -row.entries.get(&f).cloned().unwrap_or_else(Q::zero))
                };
                if k.is_zero() {
                    if c.is_negative() {
                        return Ok(Some(ExactInfeasibility::EmptyDiagonalInterval));
                    }
                    continue;
                }
                let bound = -c / &k;
                if k.is_positive() {
                    lo = Some(lo.map_or(bound.clone(), |l| if bound > l { bound.clone() } else { l }));
                } else {
                    hi = Some(hi.map_or(bound.clone(), |h| if bound < h { bound.clone() } else { h }));
                }
            }
            if let (Some(l), Some(h)) = (&lo, &hi) {
                if l > h {
                    return Ok(Some(ExactInfeasibility::EmptyDiagonalInterval));
                }
            }
        }
        _ => {}
    }
    Ok(None)
}

/// Numeric feasibility problem over the kept rows and columns of `G`.
pub struct NumericProblem {
    pub problem: SdpProblem,
    /// `kept[i]` is the index in `sdp.basis` of row `i`.
    pub kept: Vec<usize>,
}

pub fn numeric_problem(sdp: &RealSdp, pre: &Presolve) -> NumericProblem {
    let kept = pre.kept();
    let m = kept.len();
    let mut pos = vec![usize::MAX; sdp.n()];
    for (i, &a) in kept.iter().enumerate() {
        pos[a] = i;
    }
    let live = |c: usize| {
        let (a, b) = sdp.g_entry(c);
        (pos[a] != usize::MAX && pos[b] != usize::MAX).then(|| (pos[a], pos[b]))
    };
    let rr = &pre.rref;
    let g_rows: Vec<(usize, &SparseRow)> =
        rr.rows.range(sdp.num_q()..).map(|(&c, r)| (c, r)).filter(|&(c, _)| live(c).is_some()).collect();
    let free: Vec<usize> = free_g_columns(sdp, rr).into_iter().filter(|&c| live(c).is_some()).collect();

    let problem = if free.len() < g_rows.len() {
        let set = |mat: &mut Mat, (i, j): (usize, usize), v: f64| {
            mat[(i, j)] = v;
            mat[(j, i)] = v;
        };
        let mut particular = Mat::zeros(m, m);
        for &(c, row) in &g_rows {
            set(&mut particular, live(c).unwrap(), to_f64(&row.rhs));
        }
        let mut directions = Vec::with_capacity(free.len());
        for &f in &free {
            let mut d = Mat::zeros(m, m);
            set(&mut d, live(f).unwrap(), 1.0);
            for &(c, row) in &g_rows {
                if let Some(v) = row.entries.get(&f) {
                    set(&mut d, live(c).unwrap(), -to_f64(v));
                }
            }
            directions.push(d);
        }
        SdpProblem::from_parametrization(m, &particular, &directions)
    } else {
        let rows: Vec<EntryConstraint> = g_rows
            .iter()
            .map(|(_, row)| EntryConstraint {
                terms: row.entries.iter().filter_map(|(&c, v)| live(c).map(|(i, j)| (i, j, to_f64(v)))).collect(),
                rhs: to_f64(&row.rhs),
            })
            .collect();
        SdpProblem::from_constraints(m, &rows).expect("rows of an exact rref are consistent")
    };
    NumericProblem { problem, kept }
}

fn to_f64(q: &Q) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// `x` rounded to a multiple of `2^-bits`.
fn dyadic(x: f64, bits: u32) -> Q {
    let n = libm::round(libm::ldexp(x, bits as i32));
    Q::new(BigInt::from(n as i128), BigInt::from(1i128 << bits))
}

/// Multipliers `q_j` from the unknown values.
fn multipliers(sdp: &RealSdp, value: impl Fn(usize) -> Q) -> Vec<Polynomial> {
    let mut qs = vec![Polynomial::zero(sdp.g); sdp.gens.len()];
    for (col, (j, u)) in sdp.q_unknowns.iter().enumerate() {
        qs[*j].add_term(u.clone(), value(col));
    }
    qs
}

fn defect(sdp: &RealSdp, cert: &NonRealCertificate) -> Polynomial {
    cert.defect(&sdp.gens, sdp.g)
}

/// Free `G` values read off a numeric matrix over the kept indices.
fn free_values(
    sdp: &RealSdp,
    pre: &Presolve,
    np: &NumericProblem,
    gk: &Mat,
    round: impl Fn(f64) -> Q,
) -> BTreeMap<usize, Q> {
    let mut pos = vec![usize::MAX; sdp.n()];
    for (i, &a) in np.kept.iter().enumerate() {
        pos[a] = i;
    }
    let mut free = BTreeMap::new();
    for c in free_g_columns(sdp, &pre.rref) {
        let (a, b) = sdp.g_entry(c);
        if pos[a] != usize::MAX && pos[b] != usize::MAX {
            free.insert(c, round(gk[(pos[a], pos[b])]));
        }
    }
    free
}

/// Pushes a numeric solution into the interior of the feasible slice,
/// rounds its free coordinates to dyadic rationals and completes it
/// exactly. `None` when the slice has no room or rounding loses PSD-ness.
fn exact_certificate(
    sdp: &RealSdp,
    pre: &Presolve,
    np: &NumericProblem,
    gk: &Mat,
) -> Result<Option<NonRealCertificate>> {
    for delta in [1e-3, 1e-5, 1e-7] {
        let mut a = gk.clone();
        let mut interior = None;
        for _ in 0..300 {
            if eigen_sym(&a)?.min_value() >= delta / 2.0 {
                interior = Some(a);
                break;
            }
            let p = project_shifted_psd(&a, delta)?;
            a = np.problem.project_affine(&p);
        }
        let Some(a) = interior else { continue };
        let free = free_values(sdp, pre, np, &a, |x| dyadic(x, 30));
        let gram = exact_gram(sdp, &pre.rref, &free);
        let Some(sos) = certificate_from_gram(&sdp.basis, &gram, sdp.g)? else { continue };
        let qs = multipliers(sdp, |c| pre.rref.evaluate(c, &free));
        let cert = NonRealCertificate { multipliers: qs, sos, exactness: Exactness::Exact };
        if cert.sos.is_nonzero() && defect(sdp, &cert).is_zero() {
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

/// Eigen-decomposition certificate with coefficients rounded to `2^-40`;
/// the residual is measured exactly.
fn numeric_certificate(sdp: &RealSdp, pre: &Presolve, np: &NumericProblem, gk: &Mat) -> Result<NonRealCertificate> {
    const BITS: u32 = 40;
    let eig = eigen_sym(gk)?;
    let lmax = eig.values.last().copied().unwrap_or(0.0);
    let mut sos = SosCertificate::default();
    for (k, &lam) in eig.values.iter().enumerate() {
        let w = dyadic(lam, BITS);
        if lam <= 1e-12 * lmax || !w.is_positive() {
            continue;
        }
        let mut r = Polynomial::zero(sdp.g);
        for (i, &a) in np.kept.iter().enumerate() {
            r.add_term(sdp.basis[a].clone(), dyadic(eig.vectors[(i, k)], BITS));
        }
        if !r.is_zero() {
            sos.weights.push(w);
            sos.polys.push(r);
        }
    }
    let free: BTreeMap<usize, f64> =
        free_values(sdp, pre, np, gk, |x| dyadic(x, 64)).into_iter().map(|(c, v)| (c, to_f64(&v))).collect();
    let qs = multipliers(sdp, |col| match pre.rref.rows.get(&col) {
        None => Q::zero(),
        Some(row) => {
            let mut v = to_f64(&row.rhs);
            for (c, a) in &row.entries {
                if let Some(x) = free.get(c) {
                    v -= to_f64(a) * x;
                }
            }
            dyadic(v, BITS)
        }
    });
    let mut cert = NonRealCertificate { multipliers: qs, sos, exactness: Exactness::Exact };
    let residual = defect(sdp, &cert).terms().map(|(_, c)| to_f64(c).abs()).fold(0.0, f64::max);
    cert.exactness = Exactness::Numeric { residual };
    Ok(cert)
}

/// Outcome of one SDP (one degree slice for graded problems).
#[derive(Clone, Debug)]
pub struct SdpStage {
    pub degree: Option<usize>,
    /// Side of `G` before and after facial reduction.
    pub size: usize,
    pub reduced_size: usize,
    pub numeric: Option<FeasibilityResult>,
    pub exact_infeasibility: Option<ExactInfeasibility>,
    pub certificate: Option<NonRealCertificate>,
}

pub fn run_stage(sdp: &RealSdp, config: &RealTestConfig) -> Result<SdpStage> {
    let pre = presolve(sdp);
    let mut stage = SdpStage {
        degree: sdp.degree,
        size: sdp.n(),
        reduced_size: pre.kept().len(),
        numeric: None,
        exact_infeasibility: None,
        certificate: None,
    };
    if pre.infeasible == Some(ExactInfeasibility::Inconsistent) {
        stage.exact_infeasibility = pre.infeasible;
        return Ok(stage);
    }
    let np = numeric_problem(sdp, &pre);
    let opts =
        SolveOptions { tol: config.tol, max_iter: config.max_iter, window: config.window, stall_rtol: config.tol };
    let m = np.kept.len();
    let start = Mat::identity(m).scale(1.0 / m.max(1) as f64);
    let result = solve_from(&np.problem, &opts, &start)?;
    let feasible = match &result.status {
        FeasibilityStatus::Feasible { g } => Some(g.clone()),
        _ => None,
    };
    stage.numeric = Some(result);
    stage.exact_infeasibility = exact_postcheck(sdp, &pre)?;
    if let (Some(gk), None) = (feasible, &stage.exact_infeasibility) {
        stage.certificate = Some(match exact_certificate(sdp, &pre, &np, &gk)? {
            Some(c) => c,
            None => numeric_certificate(sdp, &pre, &np, &gk)?,
        });
    }
    Ok(stage)
}

#[derive(Clone, Debug)]
pub struct SdpReport {
    pub stages: Vec<SdpStage>,
    pub verdict: RealnessVerdict,
}

/// Runs the SDP route on a Gröbner basis (graded when every element is
/// homogeneous) and folds the stages into a verdict. Certificates refer to
/// the basis elements.
pub fn sdp_realness_report(basis: &LeftGroebnerBasis, config: &RealTestConfig) -> Result<SdpReport> {
    let graded = basis.polys.iter().all(Polynomial::is_homogeneous);
    let sdps: Vec<RealSdp> = if graded {
        (1..basis.max_degree()).map(|e| build_real_sdp_graded(basis, e)).collect::<Result<_>>()?
    } else {
        vec![build_real_sdp(basis)?]
    };
    let mut stages = Vec::with_capacity(sdps.len());
    for sdp in &sdps {
        let stage = run_stage(sdp, config)?;
        let done = stage.certificate.is_some();
        stages.push(stage);
        if done {
            break;
        }
    }
    let verdict = fold_stages(&stages, config);
    Ok(SdpReport { stages, verdict })
}

fn fold_stages(stages: &[SdpStage], config: &RealTestConfig) -> RealnessVerdict {
    if let Some(cert) = stages.iter().find_map(|s| s.certificate.clone()) {
        if let Exactness::Numeric { residual } = cert.exactness {
            if residual > config.certificate_tol() {
                return RealnessVerdict::new(Status::Inconclusive, Method::Sdp)
                    .with_note("numerically feasible, but the rounded certificate misses the tolerance");
            }
        }
        return RealnessVerdict::not_real(Method::Sdp, cert);
    }
    if stages.iter().all(|s| s.exact_infeasibility.is_some()) {
        let presolved = stages.iter().all(|s| s.numeric.is_none());
        return RealnessVerdict::real(if presolved { Method::SdpPresolve } else { Method::SdpExactPostcheck });
    }
    let open = || stages.iter().filter(|s| s.exact_infeasibility.is_none()).filter_map(|s| s.numeric.as_ref());
    let gap = open().map(|r| r.gap).fold(f64::INFINITY, f64::min);
    let likely = open().all(|r| matches!(r.status, FeasibilityStatus::LikelyInfeasible { .. }));
    let mut v = RealnessVerdict::new(if likely { Status::NumericallyReal } else { Status::Inconclusive }, Method::Sdp);
    v.residual = gap.is_finite().then_some(gap);
    if open().any(|r| matches!(r.status, FeasibilityStatus::MaxIterations { .. })) {
        v = v.with_note("the solver reached the iteration limit before the gap settled");
    } else if open().any(FeasibilityResult::is_feasible) {
        v = v.with_note("numerically feasible, but no certificate could be extracted");
    }
    v
}

/// [`sdp_realness_report`] without the per-stage details.
pub fn sdp_realness(basis: &LeftGroebnerBasis, config: &RealTestConfig) -> Result<RealnessVerdict> {
    Ok(sdp_realness_report(basis, config)?.verdict)
}
