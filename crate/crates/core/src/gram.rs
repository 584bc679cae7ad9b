//! Gram matrices of homogeneous polynomials and exact sum-of-squares tests.
//!
//! For `p` homogeneous of degree `d1 + d2` the `(d1, d2)`-Gram matrix is the
//! unique `A` with `p = Σ A[i][j] · wᵢ* uⱼ`, where `wᵢ` runs over the words of
//! degree `d1` and `uⱼ` over the words of degree `d2`. Uniqueness means a
//! symmetric homogeneous `p` of degree `2d` is a sum of squares exactly when
//! its `(d, d)`-Gram matrix is positive semidefinite, which is decided here
//! by exact `LDLᵀ`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::exact::{self, PsdCheck, QMatrix};
use crate::poly::{Polynomial, Q};
use crate::word::{words_of_degree, Word};

/// Position of `w` in [`words_of_degree`]`(g, w.degree())`.
pub fn word_index(w: &Word, g: usize) -> usize {
    w.iter().fold(0, |acc, l| acc * 2 * g + l.code())
}

#[derive(Clone, Debug, PartialEq)]
pub struct GramMatrix {
    pub g: usize,
    pub row_basis: Vec<Word>,
    pub col_basis: Vec<Word>,
    pub entries: QMatrix,
}

impl GramMatrix {
    /// `Σ A[i][j] · row[i]* col[j]`.
    pub fn expand(&self) -> Polynomial {
        let mut p = Polynomial::zero(self.g);
        for (i, r) in self.row_basis.iter().enumerate() {
            let rs = r.star();
            for (j, c) in self.col_basis.iter().enumerate() {
                let a = &self.entries[i][j];
                if !a.is_zero() {
                    p.add_term(&rs * c, a.clone());
                }
            }
        }
        p
    }

    pub fn rank(&self) -> usize {
        exact::rank(&self.entries)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.iter().all(Zero::is_zero))
    }
}

/// The `(d1, d2)`-Gram matrix of a homogeneous `p` with `deg p = d1 + d2`.
/// The zero polynomial has the zero Gram matrix for every `(d1, d2)`.
pub fn gram_matrix(p: &Polynomial, d1: usize, d2: usize) -> Result<GramMatrix> {
    let g = p.num_vars().max(p.max_var()).max(1);
    if !p.is_zero() {
        if !p.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let d = p.degree().unwrap();
        if d != d1 + d2 {
            return Err(Error::DegreeMismatch { expected: d1 + d2, found: d });
        }
    }
    let row_basis = words_of_degree(g, d1);
    let col_basis = words_of_degree(g, d2);
    let mut entries = vec![vec![Q::zero(); col_basis.len()]; row_basis.len()];
    for (w, c) in p.terms() {
        let (a, b) = w.split_at(d1);
        entries[word_index(&a.star(), g)][word_index(&b, g)] = c.clone();
    }
    Ok(GramMatrix { g, row_basis, col_basis, entries })
}

/// A weighted sum of squares `Σ dᵢ rᵢ* rᵢ` with positive rational weights.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct SosCertificate {
    pub weights: Vec<Q>,
    pub polys: Vec<Polynomial>,
}

impl SosCertificate {
    pub fn expand(&self, g: usize) -> Polynomial {
        let mut s = Polynomial::zero(g);
        for (d, r) in self.weights.iter().zip(&self.polys) {
            s = &s + &(&r.star() * r).scale(d);
        }
        s
    }

    /// Well formed: one positive weight per polynomial.
    pub fn is_well_formed(&self) -> bool {
        self.weights.len() == self.polys.len() && self.weights.iter().all(Signed::is_positive)
    }

    /// A well-formed certificate is a nonzero SOS iff some `rᵢ ≠ 0`.
    pub fn is_nonzero(&self) -> bool {
        self.is_well_formed() && self.polys.iter().any(|r| !r.is_zero())
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// `Σ dᵢ (rᵢ·t)* (rᵢ·t)`, i.e. the certificate of `t* s t`.
    pub fn right_mul(&self, t: &Polynomial) -> SosCertificate {
        SosCertificate { weights: self.weights.clone(), polys: self.polys.iter().map(|r| r * t).collect() }
    }

    pub fn scale(&self, c: &Q) -> SosCertificate {
        SosCertificate { weights: self.weights.iter().map(|w| w * c).collect(), polys: self.polys.clone() }
    }
}

/// `cᵀ A c < 0` for the listed Gram matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct GramWitness {
    pub gram: GramMatrix,
    pub vector: Vec<Q>,
}

impl GramWitness {
    pub fn value(&self) -> Q {
        exact::quad_form(&self.gram.entries, &self.vector)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SosCheck {
    Yes(SosCertificate),
    /// The witness is absent when the verdict follows from parity or
    /// asymmetry alone.
    No(Option<GramWitness>),
}

impl SosCheck {
    pub fn is_yes(&self) -> bool {
        matches!(self, SosCheck::Yes(_))
    }
}

/// Certificate `Σ dₖ rₖ* rₖ = m* G m` read off an exact `LDLᵀ` of a
/// symmetric `G` over the word vector `m`, or `None` when `G` is not PSD.
pub fn certificate_from_gram(basis: &[Word], gram: &[Vec<Q>], g: usize) -> Result<Option<SosCertificate>> {
    Ok(ldl_certificate(basis, gram, g)?.ok())
}

/// Like [`certificate_from_gram`] but returns the witness vector on failure.
/// Rows and columns that are identically zero are skipped before factoring.
fn ldl_certificate(basis: &[Word], gram: &[Vec<Q>], g: usize) -> Result<core::result::Result<SosCertificate, Vec<Q>>> {
    let n = gram.len();
    if basis.len() != n {
        return Err(Error::Dimension(alloc::format!("{} basis words for a {n}x{n} matrix", basis.len())));
    }
    let live: Vec<usize> = (0..n).filter(|&i| gram[i].iter().any(|a| !a.is_zero())).collect();
    let sub: QMatrix = live.iter().map(|&i| live.iter().map(|&j| gram[i][j].clone()).collect()).collect();
    match exact::psd_check_exact(&sub)? {
        PsdCheck::NotPsd(c) => {
            let mut full = vec![Q::zero(); n];
            for (k, &i) in live.iter().enumerate() {
                full[i] = c[k].clone();
            }
            Ok(Err(full))
        }
        PsdCheck::Psd(f) => {
            let m = live.len();
            let mut cert = SosCertificate::default();
            for k in 0..m {
                if f.d[k].is_zero() {
                    continue;
                }
                let mut r = Polynomial::zero(g);
                for i in 0..m {
                    if !f.l[i][k].is_zero() {
                        r.add_term(basis[live[f.perm[i]]].clone(), f.l[i][k].clone());
                    }
                }
                cert.weights.push(f.d[k].clone());
                cert.polys.push(r);
            }
            Ok(Ok(cert))
        }
    }
}

/// Exact SOS test for a homogeneous polynomial.
///
/// Odd degree and asymmetric inputs are `No` without a witness (a nonzero
/// SOS is symmetric of even degree); zero is `Yes` with the empty
/// certificate.
pub fn is_sos_homogeneous(p: &Polynomial) -> Result<SosCheck> {
    if p.is_zero() {
        return Ok(SosCheck::Yes(SosCertificate::default()));
    }
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let deg = p.degree().unwrap();
    if deg % 2 == 1 || !p.is_symmetric() {
        return Ok(SosCheck::No(None));
    }
    let gram = gram_matrix(p, deg / 2, deg / 2)?;
    Ok(match ldl_certificate(&gram.col_basis, &gram.entries, gram.g)? {
        Ok(cert) => SosCheck::Yes(cert),
        Err(vector) => SosCheck::No(Some(GramWitness { gram, vector })),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum PmSos {
    /// `p` is a nonzero SOS.
    Plus(SosCertificate),
    /// `-p` is a nonzero SOS.
    Minus(SosCertificate),
    Neither,
    Zero,
}

/// Whether `p` or `-p` is a nonzero sum of squares. Non-homogeneous inputs
/// are reported as `Neither`.
pub fn is_pm_sos_nonzero(p: &Polynomial) -> PmSos {
    if p.is_zero() {
        return PmSos::Zero;
    }
    if !p.is_homogeneous() {
        return PmSos::Neither;
    }
    if let Ok(SosCheck::Yes(c)) = is_sos_homogeneous(p) {
        return PmSos::Plus(c);
    }
    if let Ok(SosCheck::Yes(c)) = is_sos_homogeneous(&-p) {
        return PmSos::Minus(c);
    }
    PmSos::Neither
}

/// Coefficients `(a0, .., a4)` of
/// `p = a0 + a1 (x + x*) + a2 (x² + x*²) + a3 x x* + a4 x* x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymQuadratic(pub [Q; 5]);

impl SymQuadratic {
    pub fn from_ints(a: [i64; 5]) -> SymQuadratic {
        SymQuadratic(a.map(crate::poly::q_int))
    }

    pub fn to_poly(&self) -> Polynomial {
        let [a0, a1, a2, a3, a4] = &self.0;
        let x = Polynomial::var(1, false, 1);
        let xs = Polynomial::var(1, true, 1);
        let mut p = Polynomial::constant(a0.clone(), 1);
        p = &p + &(&x + &xs).scale(a1);
        p = &p + &(&(&x * &x) + &(&xs * &xs)).scale(a2);
        p = &p + &(&x * &xs).scale(a3);
        &p + &(&xs * &x).scale(a4)
    }

    /// Reads a symmetric univariate polynomial of degree ≤ 2.
    pub fn from_poly(p: &Polynomial) -> Option<SymQuadratic> {
        if p.max_var() > 1 || p.degree().is_some_and(|d| d > 2) || !p.is_symmetric() {
            return None;
        }
        let w = |s: &[(usize, bool)]| {
            Word::from_letters(s.iter().map(|&(i, st)| crate::word::Letter::new(i, st)).collect())
        };
        Some(SymQuadratic([
            p.constant_term(),
            p.coeff(&w(&[(1, false)])),
            p.coeff(&w(&[(1, false), (1, false)])),
            p.coeff(&w(&[(1, false), (1, true)])),
            p.coeff(&w(&[(1, true), (1, false)])),
        ]))
    }

    /// `G(λ)` over the basis `(1, x*, x)`; every Gram matrix of `p` over
    /// that basis has this form.
    pub fn gram_family(&self, lambda: &Q) -> QMatrix {
        let [a0, a1, a2, a3, a4] = &self.0;
        let mu = a1 - lambda;
        vec![
            vec![a0.clone(), lambda.clone(), mu.clone()],
            vec![lambda.clone(), a3.clone(), a2.clone()],
            vec![mu, a2.clone(), a4.clone()],
        ]
    }

    pub fn gram_basis() -> Vec<Word> {
        use crate::word::Letter;
        vec![Word::one(), Word::letter(Letter::new(1, true)), Word::letter(Letter::new(1, false))]
    }

    /// The only `λ` that can make `G(λ)` PSD (when any can).
    ///
    /// `G(λ) ⪰ 0` needs `a0 B − u uᵀ ⪰ 0` with `B = [[a3, a2], [a2, a4]]`
    /// and `u = (λ, a1 − λ)`; the set of admissible `u` is an ellipsoid
    /// (or degenerate), so it suffices to test the point of the line
    /// `u1 + u2 = a1` that minimises `uᵀ adj(B) u`. With
    /// `A = a3 + a4 + 2 a2 = (1,1) B (1,1)ᵀ` that is
    /// `λ = a1 (a2 + a3) / A`, and `λ = 0` when `A = 0`.
    pub fn best_lambda(&self) -> Q {
        let [_, a1, a2, a3, a4] = &self.0;
        let big_a = a3 + a4 + a2 + a2;
        if big_a.is_zero() {
            Q::zero()
        } else {
            a1 * (a2 + a3) / big_a
        }
    }
}

/// Closed-form SOS test for symmetric univariate quadratics:
/// `−a1² + a0 (2 a2 + a3 + a4) ≥ 0`, `a0 ≥ 0` and `[[a3, a2], [a2, a4]] ⪰ 0`.
pub fn sos_quadratic_univariate(a: &SymQuadratic) -> bool {
    let [a0, a1, a2, a3, a4] = &a.0;
    let two = Q::from_integer(2.into());
    let lead_psd = !a3.is_negative() && !a4.is_negative() && !(a3 * a4 - a2 * a2).is_negative();
    !(a0 * (&two * a2 + a3 + a4) - a1 * a1).is_negative() && !a0.is_negative() && lead_psd
}

/// SOS test through the `λ`-parametrised Gram family; returns the
/// certificate at the best `λ`.
pub fn sos_quadratic_lambda(a: &SymQuadratic) -> Option<(Q, SosCertificate)> {
    let lambda = a.best_lambda();
    let cert = certificate_from_gram(&SymQuadratic::gram_basis(), &a.gram_family(&lambda), 1).ok()??;
    Some((lambda, cert))
}
