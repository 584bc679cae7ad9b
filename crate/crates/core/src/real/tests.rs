use super::sdp_route::{presolve, sdp_realness_report, ExactInfeasibility};
use super::*;
use crate::gram::SosCertificate;
use crate::parse::{parse_poly, parse_word};
use crate::poly::q_int;
use crate::sdp::FeasibilityStatus;
use alloc::vec;

fn p(s: &str, g: usize) -> Polynomial {
    parse_poly(s, g).unwrap()
}

fn w(s: &str, g: usize) -> crate::word::Word {
    parse_word(s, g).unwrap()
}

fn run(gens: &[&str], g: usize) -> RealnessVerdict {
    let gens: Vec<Polynomial> = gens.iter().map(|s| p(s, g)).collect();
    real_test(&gens, &RealTestConfig::default()).unwrap()
}

fn run_sdp(gens: &[&str], g: usize) -> RealnessVerdict {
    let gens: Vec<Polynomial> = gens.iter().map(|s| p(s, g)).collect();
    let config = RealTestConfig { method: MethodChoice::Sdp, ..RealTestConfig::default() };
    real_test(&gens, &config).unwrap()
}

fn assert_verified(gens: &[&str], g: usize, v: &RealnessVerdict) {
    assert_eq!(v.status, Status::NotReal, "{v:?}");
    let gens: Vec<Polynomial> = gens.iter().map(|s| p(s, g)).collect();
    let cert = v.certificate.as_ref().unwrap();
    let tol = if cert.is_exact() { 0.0 } else { 50.0 * 1e-8 };
    assert!(verify_nonreal_certificate(&gens, cert, tol).unwrap());
}

#[test]
fn monomial_examples() {
    assert_eq!(real_monomial_ideal(&[w("x1 x2", 2)]).unwrap().status, Status::Real);

    let v = real_monomial_ideal(&[w("x1 x1* x2", 2)]).unwrap();
    assert_verified(&["x1 x1* x2"], 2, &v);
    assert_eq!(v.certificate.unwrap().sos.polys, vec![p("x1* x2", 2)]);

    let v = real_monomial_ideal(&[w("x1 x2* x2 x1", 2), w("x1 x2* x2 x2* x2 x1", 2)]).unwrap();
    assert_eq!(v.status, Status::Real);

    // x1* x1 x2 is a left multiple of x1 x2, so only x1 x2 remains
    assert_eq!(real_monomial_ideal(&[w("x1* x1 x2", 2), w("x1 x2", 2)]).unwrap().status, Status::Real);
    assert_eq!(real_monomial_ideal(&[]), Err(Error::EmptyInput));
}

#[test]
fn principal_homogeneous_examples() {
    let v = real_principal_homogeneous(&p("x1 x1* x2", 2)).unwrap();
    assert_verified(&["x1 x1* x2"], 2, &v);
    assert_eq!(real_principal_homogeneous(&p("x1^2 + x1*^2", 1)).unwrap().status, Status::Real);
    let v = real_principal_homogeneous(&p("x1* x1", 1)).unwrap();
    assert_verified(&["x1* x1"], 1, &v);
    assert_eq!(real_principal_homogeneous(&p("1", 1)), Err(Error::ConstantPolynomial));
}

#[test]
fn linear_and_analytic_antianalytic_examples() {
    assert_verified(&["x1 - x1* + 1"], 1, &real_linear(&p("x1 - x1* + 1", 1)).unwrap());
    assert_eq!(real_linear(&p("x1 + x1*", 1)).unwrap().status, Status::Real);
    assert_eq!(real_linear(&p("x1", 1)).unwrap().status, Status::Real);
    assert_eq!(real_linear(&p("x1^2", 1)), Err(Error::DegreeMismatch { expected: 1, found: 2 }));

    let s = "x1 x2 - x2* x1* + 3";
    assert_verified(&[s], 2, &real_analytic_antianalytic(&p(s, 2)).unwrap());
    assert_eq!(real_analytic_antianalytic(&p("x1 x2 - x2* x1*", 2)).unwrap().status, Status::Real);
    assert_eq!(real_analytic_antianalytic(&p("x1^2 + x2*", 2)).unwrap().status, Status::Real);
    assert!(real_analytic_antianalytic(&p("x1 x1* + 1", 1)).is_err());
}

#[test]
fn quadratic_examples() {
    assert_eq!(real_quadratic_univariate(&p("x1 x1* - x1* x1 - 1", 1)).unwrap().status, Status::Real);

    let s = "x1 x1* - x1*^2 + 2 x1 + 4";
    let v = real_quadratic_univariate(&p(s, 1)).unwrap();
    assert_verified(&[s], 1, &v);
    let cert = v.certificate.unwrap();
    assert_eq!(cert.multipliers, vec![p("x1 + 2", 1)]);
    assert_eq!(cert.sos.expand(1), &p("4 + 2 x1*", 1).star() * &p("4 + 2 x1*", 1));

    assert_verified(&["x1 x1*"], 1, &real_quadratic_univariate(&p("x1 x1*", 1)).unwrap());
    // p + p* = 0: the only multipliers are constants and give zero
    assert_eq!(real_quadratic_univariate(&p("x1^2 - x1*^2", 1)).unwrap().status, Status::Real);
}

#[test]
fn fastpath_and_prefilter_examples() {
    assert!(analytic_fastpath(&[p("x1 x2", 2), p("x1^3", 2)]).is_some());
    assert!(analytic_fastpath(&[p("x1", 1), p("x1*", 1)]).is_none());
    assert!(analytic_fastpath(&[]).is_none());

    assert!(realness_prefilter_principal(&p("x1 x2 + 1", 2)).unwrap().is_some());
    assert!(realness_prefilter_principal(&p("x1 x1* x2 + 1", 2)).unwrap().is_none());
    assert!(realness_prefilter_principal(&p("x1 - x1* + 1", 1)).unwrap().is_none());
}

#[test]
fn example_3_15_sdp_postcheck() {
    let gens = [p("x1 x1* - x1* x1 - 1", 1)];
    let basis = left_groebner(&gens, &MonomialOrder::deglex());
    let sdp = build_real_sdp(&basis).unwrap();
    assert_eq!(sdp.basis, vec![w("1", 1), w("x1", 1), w("x1*", 1)]);
    assert_eq!(sdp.num_q(), 3);

    let pre = presolve(&sdp);
    let fixed = |a: usize, b: usize| pre.rref.fixed_value(sdp.g_col(a, b));
    assert_eq!(fixed(0, 0), Some(q_int(1)));
    assert_eq!(fixed(1, 1), Some(q_int(1)));
    assert_eq!(fixed(2, 2), Some(q_int(-1)));
    assert_eq!(fixed(1, 2), Some(q_int(0)));

    let report = sdp_realness_report(&basis, &RealTestConfig::default()).unwrap();
    let stage = &report.stages[0];
    assert!(matches!(stage.numeric.as_ref().unwrap().status, FeasibilityStatus::LikelyInfeasible { .. }));
    assert_eq!(
        stage.exact_infeasibility,
        Some(ExactInfeasibility::NegativeDiagonal { word: w("x1*", 1), value: q_int(-1) })
    );
    assert_eq!(report.verdict.status, Status::Real);
    assert_eq!(report.verdict.method, Method::SdpExactPostcheck);
}

#[test]
fn sdp_small_examples() {
    // a single analytic letter: G = 0 is forced, contradicting tr G = 1
    let basis = left_groebner(&[p("x1", 1)], &MonomialOrder::deglex());
    let sdp = build_real_sdp(&basis).unwrap();
    assert_eq!(sdp.n(), 1);
    assert_eq!(sdp_realness(&basis, &RealTestConfig::default()).unwrap().status, Status::Real);

    let v = run_sdp(&["x1 x1*"], 1);
    assert_verified(&["x1 x1*"], 1, &v);
    let v = run_sdp(&["x1 x1* - x1*^2 + 2 x1 + 4"], 1);
    assert_verified(&["x1 x1* - x1*^2 + 2 x1 + 4"], 1, &v);
    let v = run_sdp(&["x1 x1* x2"], 2);
    assert_verified(&["x1 x1* x2"], 2, &v);
    assert!(matches!(run_sdp(&["x1 x1* - x1* x1 - 1"], 1).status, Status::Real | Status::NumericallyReal));
}

#[test]
fn dispatch_examples() {
    let v = run(&["x1 x1* - x1* x1 - 1"], 1);
    assert_eq!((v.status, v.method), (Status::Real, Method::QuadraticUnivariate));
    let v = run(&["x1 x1* x2"], 2);
    assert_eq!(v.method, Method::Monomial);
    assert_verified(&["x1 x1* x2"], 2, &v);
    assert_eq!(run(&["0", "x1 x2"], 2).method, Method::Monomial);
    assert_eq!(run(&["0"], 1).status, Status::Real);
    assert_eq!(run(&["x1", "3"], 1).method, Method::Trivial);
    assert_eq!(run(&["x1 x2 + x1", "x2^2"], 2).method, Method::Analytic);

    let gens = [p("x1", 1), p("x1 x2", 2)];
    assert!(matches!(real_test(&gens, &RealTestConfig::default()), Err(Error::InvalidArgument(_))));
    assert_eq!(real_test(&[], &RealTestConfig::default()), Err(Error::EmptyInput));

    let exact_only = RealTestConfig { method: MethodChoice::Exact, ..RealTestConfig::default() };
    let v = real_test(&[p("x1 x1* + x1", 1), p("x1^2", 1)], &exact_only).unwrap();
    assert_eq!(v.status, Status::Inconclusive);
}

#[test]
fn appendix_ideal_has_an_exact_certificate() {
    // (1 + x x* + x* x + x^2 x*^2)/4 lies in I + I*, and 1 is not in I
    let gens = ["x1^3 + 1", "x1^2 + x1*^2", "x1 x1* - x1*^2", "x1* x1 - 5"];
    let v = run(&gens, 1);
    assert_verified(&gens, 1, &v);
    let cert = v.certificate.unwrap();
    assert!(cert.is_exact());
    assert!(cert.sos.polys.iter().any(|r| *r == p("x1*^2", 1)));
}

#[test]
fn multi_generator_certificates_refer_to_generators() {
    // x1 x1* lies in the ideal generated by x1 x1* + x1 and x1
    let gens = ["x1 x1* + x1", "x1"];
    let v = run(&gens, 1);
    assert_verified(&gens, 1, &v);
}

#[test]
fn verify_rejects_bad_certificates() {
    let cert = NonRealCertificate {
        multipliers: vec![p("x1 + 2", 1)],
        sos: SosCertificate { weights: vec![q_int(1)], polys: vec![p("4 + 2 x1*", 1)] },
        exactness: Exactness::Exact,
    };
    assert!(verify_nonreal_certificate(&[p("x1 x1* - x1*^2 + 2 x1 + 4", 1)], &cert, 0.0).unwrap());
    assert!(!verify_nonreal_certificate(&[p("x1 x1* - x1* x1 - 1", 1)], &cert, 0.0).unwrap());

    let empty = NonRealCertificate { sos: SosCertificate::default(), ..cert.clone() };
    assert!(!verify_nonreal_certificate(&[p("x1 x1* - x1*^2 + 2 x1 + 4", 1)], &empty, 0.0).unwrap());

    let short = NonRealCertificate { multipliers: vec![], ..cert };
    assert!(matches!(verify_nonreal_certificate(&[p("x1", 1)], &short, 0.0), Err(Error::MalformedCertificate(_))));
}
