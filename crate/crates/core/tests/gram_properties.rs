//! Gram matrix reconstruction, exact SOS certificates and the three
//! equivalent SOS tests for univariate symmetric quadratics.

mod common;

use ncreal_core::eval::{evaluate, MatrixPoint};
use ncreal_core::gram::{
    gram_matrix, is_sos_homogeneous, sos_quadratic_lambda, sos_quadratic_univariate, SosCheck, SymQuadratic,
};
use ncreal_core::linalg::dense::eigen_sym;
use ncreal_core::poly::Q;
use ncreal_core::{Mat, Polynomial};
use num_traits::ToPrimitive;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

#[test]
fn gram_matrices_reconstruct_their_polynomial() {
    let mut rng = common::rng(11);
    for _ in 0..500 {
        let g = rng.gen_range(1..=2);
        let d = rng.gen_range(1..=6);
        let p = common::random_homogeneous(&mut rng, g, d, 6);
        for d1 in 0..=d {
            assert_eq!(gram_matrix(&p, d1, d - d1).unwrap().expand(), p);
        }
    }
}

#[test]
fn zero_polynomial_has_zero_gram_matrices() {
    for g in 1..=2 {
        for d1 in 0..=3 {
            for d2 in 0..=3 {
                assert!(gram_matrix(&Polynomial::zero(g), d1, d2).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn sos_certificates_expand_exactly() {
    let mut rng = common::rng(12);
    let mut yes = 0;
    for i in 0..300 {
        let g = rng.gen_range(1..=2);
        let d = rng.gen_range(1..=2);
        // half the cases are sums of squares by construction
        let p = if i % 2 == 0 {
            (0..rng.gen_range(1..=3)).fold(Polynomial::zero(g), |acc, _| {
                let r = common::random_homogeneous(&mut rng, g, d, 3);
                &acc + &(&r.star() * &r)
            })
        } else {
            let r = common::random_homogeneous(&mut rng, g, 2 * d, 4);
            &r + &r.star()
        };
        match is_sos_homogeneous(&p).unwrap() {
            SosCheck::Yes(cert) => {
                yes += 1;
                assert!(cert.is_well_formed());
                assert_eq!(cert.expand(g), p);
            }
            SosCheck::No(witness) => {
                assert!(i % 2 == 1, "a constructed SOS was rejected: {p}");
                let w = witness.expect("symmetric input of even degree carries a witness");
                assert!(w.value() < Q::from_integer(0.into()));
            }
        }
    }
    assert!(yes >= 150);
}

fn random_quadratic(rng: &mut ChaCha8Rng) -> SymQuadratic {
    if rng.gen_bool(0.5) {
        SymQuadratic::from_ints([0; 5].map(|_| rng.gen_range(-4..=4)))
    } else {
        // the form read off a random PSD Gram matrix B Bᵀ over (1, x*, x)
        let b: Vec<[i64; 3]> = (0..rng.gen_range(1..=3)).map(|_| [0; 3].map(|_| rng.gen_range(-2..=2))).collect();
        let gram = |i: usize, j: usize| b.iter().map(|r| r[i] * r[j]).sum::<i64>();
        SymQuadratic::from_ints([gram(0, 0), gram(0, 1) + gram(0, 2), gram(1, 2), gram(1, 1), gram(2, 2)])
    }
}

fn min_eigenvalue_at_random_matrix(p: &Polynomial, rng: &mut ChaCha8Rng) -> f64 {
    let x = Mat::from_fn(2, 2, |_, _| rng.gen_range(-3.0..3.0));
    let value = evaluate(p, &MatrixPoint::new(vec![x], vec![1.0, 0.0]).unwrap()).unwrap();
    eigen_sym(&value).unwrap().min_value()
}

#[test]
fn quadratic_sos_tests_agree() {
    let mut rng = common::rng(13);
    let mut refuted = 0;
    for _ in 0..200 {
        let a = random_quadratic(&mut rng);
        let closed = sos_quadratic_univariate(&a);
        let family = sos_quadratic_lambda(&a);
        assert_eq!(closed, family.is_some(), "{a:?}");
        let p = a.to_poly();
        if let Some((_, cert)) = &family {
            assert_eq!(cert.expand(1), p);
        }
        let scale = 1.0 + a.0.iter().map(|c| c.to_f64().unwrap().abs()).sum::<f64>() * 9.0;
        let negative = (0..1000).any(|_| min_eigenvalue_at_random_matrix(&p, &mut rng) < -1e-9 * scale);
        assert!(!(closed && negative), "sampling refuted an SOS verdict for {a:?}");
        refuted += usize::from(negative);
    }
    assert!(refuted > 0);
}

#[test]
fn quadratic_examples_from_the_closed_form() {
    assert!(sos_quadratic_univariate(&SymQuadratic::from_ints([1, 1, 0, 1, 0])));
    assert!(!sos_quadratic_univariate(&SymQuadratic::from_ints([-1, 0, 0, 1, -1])));
    let a = SymQuadratic::from_ints([4, 2, 0, 1, 1]);
    assert!(sos_quadratic_univariate(&a));
    assert_eq!(sos_quadratic_lambda(&a).unwrap().1.expand(1), a.to_poly());
}
