//! Ring, involution, printing and evaluation laws of the free *-algebra.

mod common;

use ncreal_core::eval::{evaluate, MatrixPoint};
use ncreal_core::parse::parse_poly;
use ncreal_core::poly::q_int;
use ncreal_core::word::{words_below_degree, Letter, Word};
use ncreal_core::{Mat, Polynomial};
use proptest::prelude::*;
use rand::Rng;

const G: usize = 3;

fn poly_strategy(max_terms: usize, max_deg: usize) -> impl Strategy<Value = Polynomial> {
    let term = (prop::collection::vec(0..2 * G, 0..=max_deg), -5i64..=5);
    prop::collection::vec(term, 0..=max_terms).prop_map(|terms| {
        Polynomial::from_terms(
            terms.into_iter().map(|(codes, c)| (codes.into_iter().map(Letter::from_code).collect::<Word>(), q_int(c))),
            G,
        )
    })
}

proptest! {
    #[test]
    fn ring_and_involution_laws(p in poly_strategy(4, 3), q in poly_strategy(4, 3), r in poly_strategy(4, 3)) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!((&p * &q).star(), &q.star() * &p.star());
        prop_assert_eq!(p.star().star(), p.clone());
        prop_assert_eq!((&p + &q).star(), &p.star() + &q.star());
        prop_assert_eq!(&p - &p, Polynomial::zero(G));
    }

    #[test]
    fn print_then_parse_is_identity(p in poly_strategy(6, 5)) {
        prop_assert_eq!(parse_poly(&p.to_string(), G).unwrap(), p);
    }
}

#[test]
fn degree_is_additive() {
    let mut rng = common::rng(1);
    for _ in 0..1000 {
        let g = rng.gen_range(1..=3);
        let p = common::random_poly(&mut rng, g, 5, 4);
        let q = common::random_poly(&mut rng, g, 5, 4);
        if p.is_zero() || q.is_zero() {
            continue;
        }
        assert_eq!((&p * &q).degree(), Some(p.degree().unwrap() + q.degree().unwrap()));
    }
}

fn random_point(rng: &mut impl Rng, g: usize, n: usize) -> MatrixPoint {
    let mats = (0..g).map(|_| Mat::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0))).collect();
    MatrixPoint::new(mats, (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()).unwrap()
}

fn close(a: &Mat, b: &Mat) -> bool {
    a.sub(b).max_abs() <= 1e-10 * (1.0 + a.max_abs().max(b.max_abs()))
}

#[test]
fn evaluation_is_a_unital_star_homomorphism() {
    let mut rng = common::rng(2);
    for _ in 0..200 {
        let g = rng.gen_range(1..=3);
        let p = common::random_poly(&mut rng, g, 3, 4);
        let q = common::random_poly(&mut rng, g, 3, 4);
        let pt = random_point(&mut rng, g, 3);
        let (ep, eq) = (evaluate(&p, &pt).unwrap(), evaluate(&q, &pt).unwrap());
        assert!(close(&evaluate(&(&p * &q), &pt).unwrap(), &ep.matmul(&eq)));
        assert!(close(&evaluate(&(&p + &q), &pt).unwrap(), &ep.add(&eq)));
        assert!(close(&evaluate(&p.star(), &pt).unwrap(), &ep.transpose()));
    }
    let pt = random_point(&mut common::rng(3), 2, 3);
    assert!(close(&evaluate(&Polynomial::one(2), &pt).unwrap(), &Mat::identity(3)));
}

/// Independent shrinkability test: try every split `w = u u* v`.
fn shrinkable_by_enumeration(w: &Word) -> bool {
    let n = w.degree();
    (1..=n / 2).any(|k| {
        let u = w.prefix(k);
        let rest = w.suffix(n - k);
        rest.prefix(k) == u.star()
    })
}

#[test]
fn unshrinkability_matches_enumeration() {
    for w in words_below_degree(2, 7) {
        assert_eq!(w.is_left_unshrinkable(), !shrinkable_by_enumeration(&w), "{w}");
    }
}
