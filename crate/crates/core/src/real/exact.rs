//! Closed-form realness procedures for special generating sets.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::{Exactness, Method, NonRealCertificate, RealnessVerdict};
use crate::error::{Error, Result};
use crate::factor::factor_homogeneous;
use crate::gram::{is_pm_sos_nonzero, is_sos_homogeneous, sos_quadratic_lambda, PmSos, SosCertificate, SymQuadratic};
use crate::poly::{q_int, Polynomial, Q};
use crate::word::{Letter, Word};

fn sign(x: &Q) -> Q {
    if x.is_negative() {
        -Q::one()
    } else {
        Q::one()
    }
}

fn exact_cert(multipliers: Vec<Polynomial>, sos: SosCertificate) -> NonRealCertificate {
    NonRealCertificate { multipliers, sos, exactness: Exactness::Exact }
}

/// Drops every word that is a left multiple `ω·w′` of another listed word
/// (and duplicates), keeping the index of each survivor in `words`.
fn minimalize(words: &[Word]) -> Vec<usize> {
    (0..words.len())
        .filter(|&i| {
            !(0..words.len()).any(|j| {
                j != i && words[i].is_left_multiple_of(&words[j]) && (words[j].degree() < words[i].degree() || j < i)
            })
        })
        .collect()
}

/// Monomial left ideals are real exactly when their minimal generators are
/// all left unshrinkable.
///
/// For a shrinkable minimal generator `w = u u* v` (with `u` as short as
/// possible) the certificate uses `q = v*/2` on `w` and the single square
/// `(u* v)* (u* v) = v* u u* v = v* w`. Every suffix of `u* v` is a suffix
/// of `w`, so minimality keeps `u* v` out of the ideal.
pub fn real_monomial_ideal(words: &[Word]) -> Result<RealnessVerdict> {
    if words.is_empty() {
        return Err(Error::EmptyInput);
    }
    if words.iter().any(Word::is_one) {
        return Err(Error::ConstantPolynomial);
    }
    let g = words.iter().map(Word::max_var).max().unwrap_or(1);
    for i in minimalize(words) {
        let w = &words[i];
        let Some(k) = w.shrink_length() else { continue };
        let u = w.prefix(k);
        let v = w.suffix(w.degree() - 2 * k);
        let mut multipliers = vec![Polynomial::zero(g); words.len()];
        multipliers[i] = Polynomial::monomial(Q::new(1.into(), 2.into()), v.star(), g);
        let r = Polynomial::word(&u.star() * &v, g);
        let sos = SosCertificate { weights: vec![Q::one()], polys: vec![r] };
        return Ok(RealnessVerdict::not_real(Method::Monomial, exact_cert(multipliers, sos))
            .with_note(alloc::format!("{w} = u u* v with u = {u}, v = {v}")));
    }
    Ok(RealnessVerdict::real(Method::Monomial))
}

/// Shared test for `p = a + b* + c` with `a, b` analytic: the ideal is
/// non-real iff `p + p* = 2c` is a nonzero constant.
fn sum_is_nonzero_constant(p: &Polynomial, method: Method) -> RealnessVerdict {
    let sum = p + &p.star();
    if sum.is_zero() || !sum.is_constant() {
        return RealnessVerdict::real(method);
    }
    // q = sign(c)/2 gives q p + p* q* = |c|
    let c = p.constant_term();
    let g = p.num_vars();
    let q = Polynomial::constant(sign(&c) / q_int(2), g);
    let sos = SosCertificate { weights: vec![c.abs()], polys: vec![Polynomial::one(g)] };
    RealnessVerdict::not_real(method, exact_cert(vec![q], sos))
}

/// Degree-one generators: non-real iff `p = a − a* + c` with `c ≠ 0`.
pub fn real_linear(p: &Polynomial) -> Result<RealnessVerdict> {
    match p.degree() {
        Some(1) => Ok(sum_is_nonzero_constant(p, Method::Linear)),
        Some(d) => Err(Error::DegreeMismatch { expected: 1, found: d }),
        None => Err(Error::ZeroPolynomial),
    }
}

/// Generators of the shape `a + b*` with `a, b` analytic: non-real iff
/// `b = −a` up to a nonzero constant.
pub fn real_analytic_antianalytic(p: &Polynomial) -> Result<RealnessVerdict> {
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if !p.words().all(|w| w.is_analytic() || w.is_antianalytic()) {
        return Err(Error::InvalidArgument(alloc::string::String::from(
            "polynomial is not a sum of an analytic and an antianalytic part",
        )));
    }
    Ok(sum_is_nonzero_constant(p, Method::AnalyticAntianalytic))
}

/// Finitely many analytic generators always generate a real ideal.
pub fn analytic_fastpath(gens: &[Polynomial]) -> Option<RealnessVerdict> {
    (!gens.is_empty() && gens.iter().all(Polynomial::is_analytic)).then(|| RealnessVerdict::real(Method::Analytic))
}

/// `p = a0 + a1 x + a2 x* + a3 x² + a4 x x* + a5 x* x + a6 x*²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticCoefficients(pub [Q; 7]);

impl QuadraticCoefficients {
    pub fn from_poly(p: &Polynomial) -> Result<QuadraticCoefficients> {
        if p.max_var() > 1 {
            return Err(Error::InvalidArgument(alloc::string::String::from("polynomial is not univariate")));
        }
        match p.degree() {
            Some(2) => {}
            Some(d) => return Err(Error::DegreeMismatch { expected: 2, found: d }),
            None => return Err(Error::ZeroPolynomial),
        }
        let x = Letter::new(1, false);
        let s = Letter::new(1, true);
        let w = |ls: &[Letter]| Word::from_letters(ls.to_vec());
        Ok(QuadraticCoefficients([
            p.constant_term(),
            p.coeff(&w(&[x])),
            p.coeff(&w(&[s])),
            p.coeff(&w(&[x, x])),
            p.coeff(&w(&[x, s])),
            p.coeff(&w(&[s, x])),
            p.coeff(&w(&[s, s])),
        ]))
    }
}

/// `[[a, b], [b, c]] ⪰ 0`.
fn psd2(a: &Q, b: &Q, c: &Q) -> bool {
    !a.is_negative() && !c.is_negative() && !(a * c - b * b).is_negative()
}

/// Certificate for `q p + p* q*` when that is a symmetric quadratic SOS.
fn quadratic_certificate(p: &Polynomial, q: Polynomial) -> Option<NonRealCertificate> {
    let qp = &q * p;
    let s = &qp + &qp.star();
    let (_, sos) = sos_quadratic_lambda(&SymQuadratic::from_poly(&s)?)?;
    sos.is_nonzero().then(|| exact_cert(vec![q], sos))
}

/// Univariate quadratics: the closed-form criterion with conditions (1)
/// and (2). Condition (1) additionally needs `p + p* ≠ 0`, since only
/// constant multipliers are possible there and `q0 (p + p*)` must be a
/// nonzero square sum.
pub fn real_quadratic_univariate(p: &Polynomial) -> Result<RealnessVerdict> {
    let QuadraticCoefficients([a0, a1, a2, a3, a4, a5, a6]) = QuadraticCoefficients::from_poly(p)?;
    let g = p.num_vars();
    let two = q_int(2);
    let s12 = &a1 + &a2;

    if !(&a4 + &a6).is_zero() || !(&a3 + &a5).is_zero() {
        let m = [&two * &a4, &a3 + &a6, &two * &a5];
        let disc = -(&s12 * &s12) + &q_int(4) * &a0 * (&a3 + &a4 + &a5 + &a6);
        let nonzero_sum = !(p + &p.star()).is_zero();
        for sigma in [Q::one(), -Q::one()] {
            let ok = psd2(&(&sigma * &m[0]), &(&sigma * &m[1]), &(&sigma * &m[2]))
                && !(&sigma * &a0).is_negative()
                && !disc.is_negative()
                && nonzero_sum;
            if ok {
                return Ok(match quadratic_certificate(p, Polynomial::constant(sigma, g)) {
                    Some(cert) => RealnessVerdict::not_real(Method::QuadraticUnivariate, cert),
                    None => RealnessVerdict::new(super::Status::Inconclusive, Method::QuadraticUnivariate)
                        .with_note("closed form says non-real but no certificate was produced"),
                });
            }
        }
        return Ok(RealnessVerdict::real(Method::QuadraticUnivariate));
    }

    // a5 = −a3, a6 = −a4: multipliers q = q0 + t (a4 x + a3 x*)
    let s34 = &a3 + &a4;
    let choice = if s34.is_zero() {
        let a2a4 = &a2 * &a4;
        if !s12.is_zero() {
            None
        } else if !a2a4.is_zero() {
            Some((Q::zero(), sign(&a2a4)))
        } else if !(&a0 * &a4).is_negative() && !(&a0 * &a0 + &a4 * &a4).is_zero() {
            Some((sign(&a4), Q::zero()))
        } else {
            None
        }
    } else if !s12.is_zero() && a0 == &s12 * (&a1 * &a4 - &a2 * &a3) / (&s34 * &s34) {
        let t = sign(&(&s12 * &s34));
        Some(((&a1 * &a4 - &a2 * &a3) * &t / &s34, t))
    } else {
        None
    };
    Ok(match choice {
        None => RealnessVerdict::real(Method::QuadraticUnivariate),
        Some((q0, t)) => {
            let mut q = Polynomial::constant(q0, g);
            q.add_term(Word::letter(Letter::new(1, false)), &t * &a4);
            q.add_term(Word::letter(Letter::new(1, true)), &t * &a3);
            match quadratic_certificate(p, q) {
                Some(cert) => RealnessVerdict::not_real(Method::QuadraticUnivariate, cert),
                None => RealnessVerdict::new(super::Status::Inconclusive, Method::QuadraticUnivariate)
                    .with_note("closed form says non-real but no certificate was produced"),
            }
        }
    })
}

/// Homogeneous principal ideals via factorization.
///
/// With `p = c f1 ⋯ fk`, the ideal is non-real iff for some prefix
/// `P = f1 ⋯ fℓ` the symmetric part `P + P*` or its negative is a nonzero
/// SOS `s`. Then with `T = f_{ℓ+1} ⋯ fk` and `q = (σ/c) T*`,
/// `q p + p* q* = T* (σ (P + P*)) T`, a square sum in the `rᵢ T`, all of
/// degree below `deg p` and hence outside the ideal.
pub fn real_principal_homogeneous(p: &Polynomial) -> Result<RealnessVerdict> {
    let f = factor_homogeneous(p)?;
    let g = p.num_vars();
    let k = f.factors.len();
    for l in 1..=k {
        let prefix = Polynomial::product(&f.factors[..l], g);
        let (sigma, sos) = match is_pm_sos_nonzero(&(&prefix + &prefix.star())) {
            PmSos::Plus(c) => (Q::one(), c),
            PmSos::Minus(c) => (-Q::one(), c),
            PmSos::Neither | PmSos::Zero => continue,
        };
        let tail = Polynomial::product(&f.factors[l..], g);
        let q = tail.star().scale(&(sigma / &f.scalar));
        let cert = exact_cert(vec![q], sos.right_mul(&tail));
        return Ok(RealnessVerdict::not_real(Method::PrincipalHomogeneous, cert)
            .with_note(alloc::format!("prefix of {l} of {k} irreducible factors")));
    }
    Ok(RealnessVerdict::real(Method::PrincipalHomogeneous))
}

/// Sufficient condition for realness from the leading polynomial: if for
/// every prefix `P` of its factorization neither `P + P*` nor its negative
/// is a sum of squares (zero included), the ideal is real.
pub fn realness_prefilter_principal(p: &Polynomial) -> Result<Option<RealnessVerdict>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let lead = p.leading_polynomial()?;
    let f = factor_homogeneous(&lead)?;
    let g = p.num_vars();
    for l in 1..=f.factors.len() {
        let prefix = Polynomial::product(&f.factors[..l], g);
        let sum = &prefix + &prefix.star();
        if sum.is_zero() || is_sos_homogeneous(&sum)?.is_yes() || is_sos_homogeneous(&-&sum)?.is_yes() {
            return Ok(None);
        }
    }
    Ok(Some(RealnessVerdict::real(Method::Prefilter)))
}
