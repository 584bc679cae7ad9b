//! The realness decision engine.
//!
//! A finitely generated left ideal `I` is real (equivalently, has the left
//! Nullstellensatz property) unless some nonzero sum of squares
//! `Σ dᵢ rᵢ* rᵢ` with not all `rᵢ ∈ I` can be written as
//! `Σ_j (q_j p_j + p_j* q_j*)`. Every `NotReal` verdict carries such an
//! identity, checked by [`verify_nonreal_certificate`] before it is
//! returned.
//!
//! Exact procedures cover monomial, analytic, linear, univariate quadratic,
//! analytic-plus-antianalytic and homogeneous principal ideals; everything
//! else goes through the semidefinite feasibility problem in [`sdp_route`].

mod exact;
pub mod sdp_route;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::gram::SosCertificate;
use crate::ideal::{left_groebner, left_groebner_with_cofactors, LeftGroebnerBasis, MonomialOrder};
use crate::poly::Polynomial;

pub use exact::{
    analytic_fastpath, real_analytic_antianalytic, real_linear, real_monomial_ideal, real_principal_homogeneous,
    real_quadratic_univariate, realness_prefilter_principal, QuadraticCoefficients,
};
pub use sdp_route::{build_real_sdp, build_real_sdp_graded, sdp_realness, RealSdp};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Real,
    NotReal,
    /// The semidefinite problem looks infeasible but no exact proof was
    /// found.
    NumericallyReal,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Real => "Real",
            Status::NotReal => "NotReal",
            Status::NumericallyReal => "NumericallyReal",
            Status::Inconclusive => "Inconclusive",
        }
    }

    /// `Real` and `NotReal` are proofs; the others are not.
    pub fn is_decided(self) -> bool {
        matches!(self, Status::Real | Status::NotReal)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which procedure produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Zero ideal or an ideal containing a nonzero constant.
    Trivial,
    Monomial,
    Analytic,
    Linear,
    QuadraticUnivariate,
    PrincipalHomogeneous,
    AnalyticAntianalytic,
    Prefilter,
    /// Exact contradiction found while reducing the linear constraints,
    /// before any numerics.
    SdpPresolve,
    Sdp,
    /// Numeric infeasibility confirmed by an exact argument.
    SdpExactPostcheck,
    /// No applicable procedure (for `--method exact`).
    None,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Trivial => "trivial",
            Method::Monomial => "monomial",
            Method::Analytic => "analytic",
            Method::Linear => "linear",
            Method::QuadraticUnivariate => "quadratic-univariate",
            Method::PrincipalHomogeneous => "principal-homogeneous",
            Method::AnalyticAntianalytic => "analytic-antianalytic",
            Method::Prefilter => "leading-prefilter",
            Method::SdpPresolve => "sdp-presolve",
            Method::Sdp => "sdp",
            Method::SdpExactPostcheck => "sdp-exact-postcheck",
            Method::None => "none",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Exactness {
    Exact,
    /// Largest coefficient of `Σ dᵢ rᵢ* rᵢ − Σ (qp + p*q*)`.
    Numeric {
        residual: f64,
    },
}

/// `Σ dᵢ rᵢ* rᵢ = Σ_j (q_j p_j + p_j* q_j*)` with `multipliers[j] = q_j`
/// for the generators the certificate was issued against.
#[derive(Clone, Debug, PartialEq)]
pub struct NonRealCertificate {
    pub multipliers: Vec<Polynomial>,
    pub sos: SosCertificate,
    pub exactness: Exactness,
}

impl NonRealCertificate {
    pub fn is_exact(&self) -> bool {
        self.exactness == Exactness::Exact
    }

    /// `Σ dᵢ rᵢ* rᵢ − Σ_j (q_j p_j + p_j* q_j*)`.
    pub fn defect(&self, gens: &[Polynomial], g: usize) -> Polynomial {
        let mut rhs = Polynomial::zero(g);
        for (q, p) in self.multipliers.iter().zip(gens) {
            let qp = q * p;
            rhs = &rhs + &(&qp + &qp.star());
        }
        &self.sos.expand(g) - &rhs
    }

    /// Re-expresses multipliers for a Gröbner basis in terms of the
    /// generators it was computed from: if `b_i = Σ_k c_ik g_k` then
    /// `Σ_i q_i b_i = Σ_k (Σ_i q_i c_ik) g_k`.
    pub fn pull_back(&self, cofactors: &[Vec<Polynomial>], num_gens: usize, g: usize) -> NonRealCertificate {
        let mut out = alloc::vec![Polynomial::zero(g); num_gens];
        for (q, row) in self.multipliers.iter().zip(cofactors) {
            for (k, c) in row.iter().enumerate() {
                if !c.is_zero() && !q.is_zero() {
                    out[k] = &out[k] + &(q * c);
                }
            }
        }
        NonRealCertificate { multipliers: out, sos: self.sos.clone(), exactness: self.exactness }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RealnessVerdict {
    pub status: Status,
    pub method: Method,
    pub certificate: Option<NonRealCertificate>,
    /// Numeric diagnostics: the final gap of the SDP iteration, or the
    /// residual of a numeric certificate.
    pub residual: Option<f64>,
    /// Human-readable detail (witness words, failing conditions, …).
    pub note: Option<String>,
}

impl RealnessVerdict {
    pub fn new(status: Status, method: Method) -> RealnessVerdict {
        RealnessVerdict { status, method, certificate: None, residual: None, note: None }
    }

    pub fn real(method: Method) -> RealnessVerdict {
        RealnessVerdict::new(Status::Real, method)
    }

    pub fn not_real(method: Method, cert: NonRealCertificate) -> RealnessVerdict {
        let residual = match cert.exactness {
            Exactness::Exact => None,
            Exactness::Numeric { residual } => Some(residual),
        };
        RealnessVerdict { status: Status::NotReal, method, certificate: Some(cert), residual, note: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> RealnessVerdict {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MethodChoice {
    /// Exact procedures where they apply, SDP otherwise.
    #[default]
    Auto,
    /// Exact procedures only; `Inconclusive` when none applies.
    Exact,
    /// Skip the structural procedures and go straight to the SDP.
    Sdp,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RealTestConfig {
    pub tol: f64,
    pub max_iter: usize,
    /// Stall-detection window of the alternating-projection solver.
    pub window: usize,
    pub method: MethodChoice,
    pub order: MonomialOrder,
}

impl Default for RealTestConfig {
    fn default() -> Self {
        RealTestConfig {
            tol: 1e-8,
            max_iter: 20_000,
            window: 500,
            method: MethodChoice::Auto,
            order: MonomialOrder::deglex(),
        }
    }
}

impl RealTestConfig {
    /// Acceptance threshold for numeric certificates.
    pub fn certificate_tol(&self) -> f64 {
        50.0 * self.tol
    }
}

fn common_num_vars(gens: &[Polynomial]) -> Result<usize> {
    let mut g = 0;
    for p in gens {
        let h = p.num_vars();
        if g != 0 && h != g {
            return Err(Error::InvalidArgument(alloc::format!(
                "generators disagree on the number of variables ({g} vs {h})"
            )));
        }
        g = h;
    }
    Ok(g.max(gens.iter().map(Polynomial::max_var).max().unwrap_or(1)).max(1))
}

/// Checks a non-realness certificate for the left ideal generated by
/// `gens`:
///
/// * the SOS is well formed (positive weights) and nonzero;
/// * `Σ dᵢ rᵢ* rᵢ − Σ_j (q_j p_j + p_j* q_j*)` vanishes exactly, or for a
///   numeric certificate has every coefficient within `tol`;
/// * some `rᵢ` has a nonzero normal form, i.e. lies outside the ideal.
pub fn verify_nonreal_certificate(gens: &[Polynomial], cert: &NonRealCertificate, tol: f64) -> Result<bool> {
    if cert.multipliers.len() != gens.len() {
        return Err(Error::MalformedCertificate(alloc::format!(
            "{} multipliers for {} generators",
            cert.multipliers.len(),
            gens.len()
        )));
    }
    if cert.sos.weights.len() != cert.sos.polys.len() {
        return Err(Error::MalformedCertificate(String::from("weights and polys differ in length")));
    }
    if !cert.sos.is_nonzero() {
        return Ok(false);
    }
    let g = common_num_vars(gens)?
        .max(cert.multipliers.iter().map(Polynomial::max_var).max().unwrap_or(1))
        .max(cert.sos.polys.iter().map(Polynomial::max_var).max().unwrap_or(1));
    let defect = cert.defect(gens, g);
    let ok = match cert.exactness {
        Exactness::Exact => defect.is_zero(),
        Exactness::Numeric { .. } => defect.terms().all(|(_, c)| c.to_f64().is_some_and(|x| x.abs() <= tol)),
    };
    if !ok {
        return Ok(false);
    }
    let basis = left_groebner(gens, &MonomialOrder::deglex());
    Ok(cert.sos.polys.iter().any(|r| !basis.normal_form(r).is_zero()))
}

/// Largest absolute coefficient of the certificate identity's defect.
pub fn certificate_residual(gens: &[Polynomial], cert: &NonRealCertificate) -> f64 {
    let g = gens.iter().map(|p| p.num_vars().max(p.max_var())).max().unwrap_or(1);
    cert.defect(gens, g).terms().map(|(_, c)| c.to_f64().unwrap_or(f64::INFINITY).abs()).fold(0.0, f64::max)
}

/// Decides realness of the left ideal generated by `gens`.
///
/// Dispatch: trivial ideals; all monomials → [`real_monomial_ideal`]; all
/// analytic → [`analytic_fastpath`]; a single generator → linear,
/// univariate quadratic, homogeneous, analytic-plus-antianalytic, then the
/// leading-polynomial prefilter; anything left → Gröbner basis and SDP.
pub fn real_test(gens: &[Polynomial], config: &RealTestConfig) -> Result<RealnessVerdict> {
    if gens.is_empty() {
        return Err(Error::EmptyInput);
    }
    let g = common_num_vars(gens)?;
    let gens: Vec<Polynomial> = gens.iter().map(|p| p.clone().with_num_vars(g)).collect();
    let nonzero: Vec<&Polynomial> = gens.iter().filter(|p| !p.is_zero()).collect();
    if nonzero.is_empty() {
        return Ok(RealnessVerdict::real(Method::Trivial).with_note("zero ideal"));
    }
    if nonzero.iter().any(|p| p.is_constant()) {
        return Ok(RealnessVerdict::real(Method::Trivial).with_note("ideal contains 1"));
    }

    let verdict = match config.method {
        MethodChoice::Sdp => sdp_with_groebner(&gens, config)?,
        MethodChoice::Auto | MethodChoice::Exact => match exact_dispatch(&gens, &nonzero)? {
            Some(v) => v,
            None if config.method == MethodChoice::Exact => RealnessVerdict::new(Status::Inconclusive, Method::None)
                .with_note("no exact procedure applies to this generating set"),
            None => sdp_with_groebner(&gens, config)?,
        },
    };

    if let Some(cert) = &verdict.certificate {
        let tol = if cert.is_exact() { 0.0 } else { config.certificate_tol() };
        if verdict.status == Status::NotReal && !verify_nonreal_certificate(&gens, cert, tol)? {
            return Ok(RealnessVerdict::new(Status::Inconclusive, verdict.method)
                .with_note("a non-realness certificate was found but failed verification"));
        }
    }
    Ok(verdict)
}

fn exact_dispatch(gens: &[Polynomial], nonzero: &[&Polynomial]) -> Result<Option<RealnessVerdict>> {
    if nonzero.iter().all(|p| p.is_monomial()) {
        let words: Vec<_> = nonzero.iter().map(|p| p.leading_term().unwrap().0.clone()).collect();
        let v = real_monomial_ideal(&words)?;
        // multipliers were issued per nonzero generator; re-index to `gens`
        return Ok(Some(reindex(v, gens, nonzero)));
    }
    if let Some(v) = analytic_fastpath(gens) {
        return Ok(Some(v));
    }
    if nonzero.len() != 1 {
        return Ok(None);
    }
    let p = nonzero[0];
    let d = p.degree().unwrap();
    let single = if d == 1 {
        Some(real_linear(p)?)
    } else if d == 2 && p.max_var() <= 1 {
        Some(real_quadratic_univariate(p)?)
    } else if p.is_homogeneous() {
        Some(real_principal_homogeneous(p)?)
    } else if let Ok(v) = real_analytic_antianalytic(p) {
        Some(v)
    } else {
        realness_prefilter_principal(p)?
    };
    Ok(single.map(|v| reindex(v, gens, nonzero)))
}

/// Certificates from single-generator procedures refer to the nonzero
/// generators only; pad with zero multipliers for the zero generators.
fn reindex(mut v: RealnessVerdict, gens: &[Polynomial], nonzero: &[&Polynomial]) -> RealnessVerdict {
    if let Some(cert) = v.certificate.as_mut() {
        if cert.multipliers.len() == nonzero.len() && nonzero.len() != gens.len() {
            let g = gens[0].num_vars();
            let mut it = cert.multipliers.drain(..);
            let mut full = Vec::with_capacity(gens.len());
            for p in gens {
                full.push(if p.is_zero() { Polynomial::zero(g) } else { it.next().unwrap() });
            }
            drop(it);
            cert.multipliers = full;
        }
    }
    v
}

fn sdp_with_groebner(gens: &[Polynomial], config: &RealTestConfig) -> Result<RealnessVerdict> {
    let basis: LeftGroebnerBasis = left_groebner_with_cofactors(gens, &config.order);
    let mut v = sdp_realness(&basis, config)?;
    if let (Some(cert), Some(cof)) = (v.certificate.take(), basis.cofactors.as_ref()) {
        let g = basis.num_vars();
        let pulled = cert.pull_back(cof, gens.len(), g);
        v.certificate = Some(pulled);
    }
    Ok(v)
}

#[cfg(test)]
mod tests;
