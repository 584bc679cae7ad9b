//! PSD-cone ∩ affine-subspace feasibility by alternating projections.
//!
//! Symmetric `n × n` matrices are handled in `svec` coordinates: the upper
//! triangle in row-major order with off-diagonal entries scaled by `√2`, so
//! the Euclidean inner product of `svec`s is the Frobenius inner product.
//! Orthogonal projection onto an affine set is then ordinary least squares
//! in `svec` space; projection onto the PSD cone is eigenvalue clipping.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::dense::{dot, eigen_sym, Mat};

const SQRT2: f64 = core::f64::consts::SQRT_2;

/// Number of `svec` coordinates of an `n × n` symmetric matrix.
pub fn svec_len(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Position of entry `(i, j)` (either order) in `svec`.
pub fn svec_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * n - i * (i + 1) / 2 + j
}

/// `√2` for off-diagonal coordinates, 1 on the diagonal.
pub fn svec_weight(n: usize, k: usize) -> f64 {
    let (i, j) = svec_pair(n, k);
    if i == j {
        1.0
    } else {
        SQRT2
    }
}

/// Inverse of [`svec_index`].
pub fn svec_pair(n: usize, k: usize) -> (usize, usize) {
    let mut i = 0;
    let mut start = 0;
    while start + (n - i) <= k {
        start += n - i;
        i += 1;
    }
    (i, i + (k - start))
}

pub fn svec(s: &Mat) -> Vec<f64> {
    let n = s.rows();
    let mut out = Vec::with_capacity(svec_len(n));
    for i in 0..n {
        out.push(s[(i, i)]);
        for j in i + 1..n {
            out.push(SQRT2 * 0.5 * (s[(i, j)] + s[(j, i)]));
        }
    }
    out
}

pub fn smat(v: &[f64], n: usize) -> Mat {
    let mut m = Mat::zeros(n, n);
    let mut k = 0;
    for i in 0..n {
        m[(i, i)] = v[k];
        k += 1;
        for j in i + 1..n {
            let x = v[k] / SQRT2;
            m[(i, j)] = x;
            m[(j, i)] = x;
            k += 1;
        }
    }
    m
}

/// Orthonormal basis representation of the affine set.
#[derive(Clone, Debug)]
enum Affine {
    /// `{ s : qᵢ · s = βᵢ }` with orthonormal `qᵢ`.
    Rows { q: Vec<Vec<f64>>, beta: Vec<f64> },
    /// `{ s0 + N t }` with orthonormal columns of `N` and `s0 ⟂ N`.
    Null { s0: Vec<f64>, basis: Vec<Vec<f64>> },
}

/// One linear equation on the entries of a symmetric matrix:
/// `Σ c · G[i][j] = rhs`, each `(i, j, c)` naming an upper-triangle entry.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct EntryConstraint {
    pub terms: Vec<(usize, usize, f64)>,
    pub rhs: f64,
}

/// `{ G ⪰ 0 } ∩ { G : affine constraints }`.
#[derive(Clone, Debug)]
pub struct SdpProblem {
    pub n: usize,
    affine: Affine,
}

/// Modified Gram–Schmidt, run twice for stability. Returns the orthonormal
/// vectors and, for each input, either its index among them or `None` when
/// it was (numerically) dependent.
type Orthonormalized = (Vec<Vec<f64>>, Vec<Option<usize>>, Vec<Vec<f64>>);

fn orthonormalize(vectors: &[Vec<f64>], drop_tol: f64) -> Orthonormalized {
    let mut basis: Vec<Vec<f64>> = Vec::new();
    let mut which = Vec::with_capacity(vectors.len());
    // coefficients of each input against the basis built so far (for rhs bookkeeping)
    let mut coeffs: Vec<Vec<f64>> = Vec::with_capacity(vectors.len());
    for v in vectors {
        let scale = libm::sqrt(dot(v, v));
        let mut w = v.clone();
        let mut c = vec![0.0; basis.len()];
        for _ in 0..2 {
            for (k, b) in basis.iter().enumerate() {
                let a = dot(&w, b);
                c[k] += a;
                for (x, y) in w.iter_mut().zip(b) {
                    *x -= a * y;
                }
            }
        }
        let r = libm::sqrt(dot(&w, &w));
        if scale == 0.0 || r <= drop_tol * scale {
            which.push(None);
            coeffs.push(c);
        } else {
            for x in w.iter_mut() {
                *x /= r;
            }
            c.push(r);
            which.push(Some(basis.len()));
            coeffs.push(c);
            basis.push(w);
        }
    }
    (basis, which, coeffs)
}

impl SdpProblem {
    /// Problem with a single constraint `tr(G) = 1`.
    pub fn trace_only(n: usize) -> SdpProblem {
        let row = EntryConstraint { terms: (0..n).map(|i| (i, i, 1.0)).collect(), rhs: 1.0 };
        SdpProblem::from_constraints(n, &[row]).expect("trace constraint is consistent")
    }

    /// Builds the affine set from entry constraints. Dependent rows are
    /// dropped; an inconsistent system is an error.
    pub fn from_constraints(n: usize, rows: &[EntryConstraint]) -> Result<SdpProblem> {
        let dim = svec_len(n);
        let mut vecs = Vec::with_capacity(rows.len());
        for r in rows {
            let mut v = vec![0.0; dim];
            for &(i, j, c) in &r.terms {
                if i >= n || j >= n {
                    return Err(Error::Dimension(alloc::format!("entry ({i}, {j}) outside a {n}x{n} matrix")));
                }
                let k = svec_index(n, i, j);
                v[k] += c / svec_weight(n, k);
            }
            vecs.push(v);
        }
        let (q, which, coeffs) = orthonormalize(&vecs, 1e-10);
        // rhs of the orthonormal rows by forward substitution
        let mut beta: Vec<f64> = Vec::with_capacity(q.len());
        for (k, r) in rows.iter().enumerate() {
            let c = &coeffs[k];
            let known: f64 = c.iter().zip(&beta).map(|(a, b)| a * b).sum();
            match which[k] {
                Some(_) => {
                    let r_norm = *c.last().unwrap();
                    beta.push((r.rhs - known) / r_norm);
                }
                None => {
                    let scale = 1.0 + r.rhs.abs();
                    if (r.rhs - known).abs() > 1e-8 * scale {
                        return Err(Error::InvalidArgument(alloc::string::String::from(
                            "inconsistent affine constraints",
                        )));
                    }
                }
            }
        }
        Ok(SdpProblem { n, affine: Affine::Rows { q, beta } })
    }

    /// Builds the affine set `{ s0 + span(directions) }` from a particular
    /// solution and spanning directions, all given as symmetric matrices.
    pub fn from_parametrization(n: usize, particular: &Mat, directions: &[Mat]) -> SdpProblem {
        let dirs: Vec<Vec<f64>> = directions.iter().map(svec).collect();
        let (basis, _, _) = orthonormalize(&dirs, 1e-12);
        let mut s0 = svec(particular);
        for b in &basis {
            let a = dot(&s0, b);
            for (x, y) in s0.iter_mut().zip(b) {
                *x -= a * y;
            }
        }
        SdpProblem { n, affine: Affine::Null { s0, basis } }
    }

    /// Number of independent constraints (rows form) or `svec_len − dim`.
    pub fn codimension(&self) -> usize {
        match &self.affine {
            Affine::Rows { q, .. } => q.len(),
            Affine::Null { basis, .. } => svec_len(self.n) - basis.len(),
        }
    }

    /// Dimension of the affine set.
    pub fn dimension(&self) -> usize {
        svec_len(self.n) - self.codimension()
    }

    fn project_svec(&self, s: &[f64]) -> Vec<f64> {
        match &self.affine {
            Affine::Rows { q, beta } => {
                let mut out = s.to_vec();
                for (qi, bi) in q.iter().zip(beta) {
                    let a = dot(&out, qi) - bi;
                    for (x, y) in out.iter_mut().zip(qi) {
                        *x -= a * y;
                    }
                }
                out
            }
            Affine::Null { s0, basis } => {
                let mut out = s0.clone();
                for b in basis {
                    let a = dot(s, b);
                    for (x, y) in out.iter_mut().zip(b) {
                        *x += a * y;
                    }
                }
                out
            }
        }
    }

    /// Orthogonal (Frobenius) projection onto the affine set.
    pub fn project_affine(&self, s: &Mat) -> Mat {
        smat(&self.project_svec(&svec(s)), self.n)
    }

    /// Frobenius distance from `s` to the affine set.
    pub fn affine_residual(&self, s: &Mat) -> f64 {
        let v = svec(s);
        let p = self.project_svec(&v);
        libm::sqrt(v.iter().zip(&p).map(|(a, b)| (a - b) * (a - b)).sum::<f64>())
    }
}

/// Nearest PSD matrix in Frobenius norm: negative eigenvalues set to 0.
pub fn project_psd(s: &Mat) -> Result<Mat> {
    project_shifted_psd(s, 0.0)
}

/// Nearest matrix with all eigenvalues `≥ floor`.
pub fn project_shifted_psd(s: &Mat, floor: f64) -> Result<Mat> {
    let mut m = eigen_sym(s)?.reassemble(|x| x.max(floor));
    m.symmetrize();
    Ok(m)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolveOptions {
    pub tol: f64,
    pub max_iter: usize,
    /// Length of the window used to detect a stalled gap.
    pub window: usize,
    /// Stall when the gap fell by at most `stall_rtol · gap` over the window.
    pub stall_rtol: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { tol: 1e-8, max_iter: 20_000, window: 500, stall_rtol: 1e-8 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FeasibilityStatus {
    /// `g` lies on the affine set with `λmin(g) ≥ −tol`.
    Feasible {
        g: Mat,
    },
    /// The gap between the two sets stopped shrinking above `10·tol`.
    LikelyInfeasible {
        distance: f64,
    },
    MaxIterations {
        gap: f64,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct FeasibilityResult {
    pub status: FeasibilityStatus,
    pub iterations: usize,
    /// Last gap `‖A − P(A)‖_F` between the affine iterate and its PSD
    /// projection.
    pub gap: f64,
    /// Times the sequence of distances between successive iterates
    /// increased (beyond rounding); zero for a correct run.
    pub monotonicity_violations: usize,
}

impl FeasibilityResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self.status, FeasibilityStatus::Feasible { .. })
    }
}

/// Alternating projections started from `G₀ = I/n`.
///
/// Each round projects the affine iterate `A` onto the PSD cone and back.
/// The distances `‖A_k − P_k‖ ≥ ‖P_k − A_{k+1}‖ ≥ ‖A_{k+1} − P_{k+1}‖ ≥ …`
/// are non-increasing; increases beyond rounding are counted.
pub fn solve_feasibility(problem: &SdpProblem, opts: &SolveOptions) -> Result<FeasibilityResult> {
    solve_from(problem, opts, &Mat::identity(problem.n).scale(1.0 / problem.n.max(1) as f64))
}

/// As [`solve_feasibility`] from a given start.
pub fn solve_from(problem: &SdpProblem, opts: &SolveOptions, start: &Mat) -> Result<FeasibilityResult> {
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(Error::InvalidArgument(alloc::string::String::from("tolerance must be positive")));
    }
    let n = problem.n;
    if n == 0 {
        return Ok(FeasibilityResult {
            status: FeasibilityStatus::LikelyInfeasible { distance: f64::INFINITY },
            iterations: 0,
            gap: f64::INFINITY,
            monotonicity_violations: 0,
        });
    }
    let mut a = problem.project_affine(start);
    let mut gaps: Vec<f64> = Vec::new();
    let mut last_step = f64::INFINITY;
    let mut violations = 0;
    let slack = |x: f64| x * (1.0 + 1e-9) + 1e-14;
    for k in 0..opts.max_iter {
        let eig = eigen_sym(&a)?;
        let p = eig.reassemble(|x| x.max(0.0));
        let gap = a.sub(&p).frobenius();
        if gap > slack(last_step) {
            violations += 1;
        }
        if eig.min_value() >= -opts.tol {
            return Ok(FeasibilityResult {
                status: FeasibilityStatus::Feasible { g: a },
                iterations: k,
                gap,
                monotonicity_violations: violations,
            });
        }
        gaps.push(gap);
        if k >= opts.window && gap > 10.0 * opts.tol {
            let before = gaps[k - opts.window];
            if before - gap <= opts.stall_rtol * gap {
                return Ok(FeasibilityResult {
                    status: FeasibilityStatus::LikelyInfeasible { distance: gap },
                    iterations: k + 1,
                    gap,
                    monotonicity_violations: violations,
                });
            }
        }
        let next = problem.project_affine(&p);
        let step = p.sub(&next).frobenius();
        if step > slack(gap) {
            violations += 1;
        }
        last_step = step;
        a = next;
    }
    let gap = gaps.last().copied().unwrap_or(f64::INFINITY);
    Ok(FeasibilityResult {
        status: FeasibilityStatus::MaxIterations { gap },
        iterations: opts.max_iter,
        gap,
        monotonicity_violations: violations,
    })
}
