//! Left Gröbner bases: interreduced leading words, membership of the
//! generators, cofactor bookkeeping and truncated linear bases.

mod common;

use std::collections::BTreeMap;

use ncreal_core::ideal::{leading_words_interreduced, left_groebner_with_cofactors};
use ncreal_core::linalg::exact::rank;
use ncreal_core::poly::Q;
use ncreal_core::{MonomialOrder, Polynomial, Word};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn random_generators(rng: &mut ChaCha8Rng) -> (usize, Vec<Polynomial>) {
    let g = rng.gen_range(1..=2);
    let gens = (0..rng.gen_range(1..=3)).map(|_| common::random_poly(rng, g, 3, 4)).collect();
    (g, gens)
}

fn coefficient_rows(polys: &[Polynomial]) -> Vec<Vec<Q>> {
    let mut columns: BTreeMap<Word, usize> = BTreeMap::new();
    for p in polys {
        for w in p.words() {
            let next = columns.len();
            columns.entry(w.clone()).or_insert(next);
        }
    }
    polys
        .iter()
        .map(|p| {
            let mut row = vec![Q::from_integer(0.into()); columns.len()];
            for (w, c) in p.terms() {
                row[columns[w]] = c.clone();
            }
            row
        })
        .collect()
}

#[test]
fn bases_are_interreduced_and_contain_the_generators() {
    let mut rng = common::rng(31);
    for case in 0..300 {
        let (g, gens) = random_generators(&mut rng);
        let order =
            if case % 2 == 0 { MonomialOrder::deglex() } else { MonomialOrder::parse("x1*, x1, x2*, x2", 2).unwrap() };
        let b = left_groebner_with_cofactors(&gens, &order);
        assert!(leading_words_interreduced(&b));
        for p in &gens {
            assert!(b.normal_form(p).is_zero(), "{p} not reduced to zero");
        }
        for p in &b.polys {
            assert_eq!(order.lead(p).unwrap().1, &Q::from_integer(1.into()));
        }
        let cofactors = b.cofactors.as_ref().unwrap();
        for (p, row) in b.polys.iter().zip(cofactors) {
            let combination = row.iter().zip(&gens).fold(Polynomial::zero(g), |acc, (q, h)| &acc + &(q * h));
            assert_eq!(&combination, p);
        }
        let r = common::random_poly(&mut rng, g, 4, 5);
        let (nf, q) = b.normal_form_with_cofactors(&r);
        let rebuilt = q.iter().zip(&b.polys).fold(nf.clone(), |acc, (q, h)| &acc + &(q * h));
        assert_eq!(rebuilt, r);
        let leads = b.leading_words();
        assert!(nf.words().all(|w| leads.iter().all(|l| w.strip_suffix(l).is_none())));
    }
}

#[test]
fn truncated_bases_are_linearly_independent() {
    let mut rng = common::rng(32);
    for _ in 0..100 {
        let (_, gens) = random_generators(&mut rng);
        let b = left_groebner_with_cofactors(&gens, &MonomialOrder::deglex());
        if b.is_empty() {
            continue;
        }
        let e = b.max_degree() + rng.gen_range(0..=1);
        let slice = b.truncated_basis(e).unwrap();
        assert_eq!(rank(&coefficient_rows(&slice)), slice.len());
        assert!(slice.iter().all(|p| b.contains(p)));
    }
}
