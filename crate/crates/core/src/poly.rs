//! Noncommutative polynomials with exact rational coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// Exact rational coefficient.
pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// An element of the free *-algebra in `g` variables.
///
/// Canonical form: no stored coefficient is zero. `g` is an upper bound on
/// the variable indices; binary operations take the larger of the two.
#[derive(Clone, Debug)]
pub struct Polynomial {
    terms: BTreeMap<Word, Q>,
    g: usize,
}

/// Equality ignores the declared variable count.
impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl core::hash::Hash for Polynomial {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(g: usize) -> Polynomial {
        Polynomial { terms: BTreeMap::new(), g }
    }

    pub fn one(g: usize) -> Polynomial {
        Polynomial::constant(Q::one(), g)
    }

    pub fn constant(c: Q, g: usize) -> Polynomial {
        Polynomial::monomial(c, Word::one(), g)
    }

    pub fn monomial(c: Q, w: Word, g: usize) -> Polynomial {
        let g = g.max(w.max_var());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Polynomial { terms, g }
    }

    pub fn word(w: Word, g: usize) -> Polynomial {
        Polynomial::monomial(Q::one(), w, g)
    }

    /// The letter `xi` (or `xi*`) as a polynomial.
    pub fn var(i: usize, starred: bool, g: usize) -> Polynomial {
        Polynomial::word(Word::letter(Letter::new(i, starred)), g)
    }

    /// Collects terms, summing repeated words and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Word, Q)>>(terms: I, g: usize) -> Polynomial {
        let mut p = Polynomial::zero(g);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.g
    }

    /// Same polynomial, viewed in at least `g` variables.
    pub fn with_num_vars(mut self, g: usize) -> Polynomial {
        self.g = self.g.max(g);
        self
    }

    pub fn add_term(&mut self, w: Word, c: Q) {
        if c.is_zero() {
            return;
        }
        self.g = self.g.max(w.max_var());
        match self.terms.entry(w) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending default monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Q)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn constant_term(&self) -> Q {
        self.coeff(&Word::one())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(|w| w.degree())
    }

    pub fn is_constant(&self) -> bool {
        self.degree().is_none_or(|d| d == 0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys();
        match it.next() {
            None => true,
            Some(first) => it.all(|w| w.degree() == first.degree()),
        }
    }

    /// Sum of the terms of degree exactly `k`.
    pub fn homogeneous_part(&self, k: usize) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().filter(|(w, _)| w.degree() == k).map(|(w, c)| (w.clone(), c.clone())).collect(),
            g: self.g,
        }
    }

    /// The highest-degree homogeneous part.
    pub fn leading_polynomial(&self) -> Result<Polynomial> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        Ok(self.homogeneous_part(d))
    }

    /// Largest word under the default order with its coefficient.
    pub fn leading_term(&self) -> Option<(&Word, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn is_analytic(&self) -> bool {
        self.terms.keys().all(Word::is_analytic)
    }

    pub fn is_antianalytic(&self) -> bool {
        self.terms.keys().all(Word::is_antianalytic)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// The involution: reverse every word, star every letter.
    pub fn star(&self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(w, c)| (w.star(), c.clone())).collect(), g: self.g }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.star()
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.g);
        }
        Polynomial { terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(), g: self.g }
    }

    /// Multiply every word on the left by `w`.
    pub fn left_mul_word(&self, w: &Word) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(u, c)| (w * u, c.clone())).collect(), g: self.g.max(w.max_var()) }
    }

    /// Largest variable index actually used.
    pub fn max_var(&self) -> usize {
        self.terms.keys().map(Word::max_var).max().unwrap_or(0)
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> + '_ {
        self.terms.keys()
    }

    /// Product of a list of polynomials; the empty product is `1`.
    pub fn product<'a, I: IntoIterator<Item = &'a Polynomial>>(factors: I, g: usize) -> Polynomial {
        factors.into_iter().fold(Polynomial::one(g), |acc, f| &acc * f)
    }

    /// Terms as `(word, coefficient)` pairs in descending order.
    pub fn to_terms_desc(&self) -> Vec<(Word, Q)> {
        self.terms.iter().rev().map(|(w, c)| (w.clone(), c.clone())).collect()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.g = out.g.max(rhs.g);
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.g = out.g.max(rhs.g);
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect(), g: self.g }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.g.max(rhs.g));
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u * v, a * b);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Grammar syntax, terms in descending monomial order: `x1 x2* - 3/2`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if w.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{mag} {w}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use alloc::format;
    use proptest::prelude::*;

    fn p(s: &str, g: usize) -> Polynomial {
        parse_poly(s, g).unwrap()
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(&p("x1", 2) * &p("x2", 2), p("x1 x2", 2));
        assert_eq!(&p("x1 + x1*", 1) * &p("x1 - x1*", 1), p("x1^2 - x1 x1* + x1* x1 - x1*^2", 1));
        assert!((&p("x1 + 3", 1) * &Polynomial::zero(1)).is_zero());
    }

    #[test]
    fn involution_examples() {
        assert_eq!(p("x1 x2", 2).star(), p("x2* x1*", 2));
        assert_eq!((&p("x1 - x2*", 3) * &p("x3", 3)).star(), p("x3* x1* - x3* x2", 3));
        let e315 = p("x1 x1* - x1* x1 - 1", 1);
        assert_eq!(e315.star(), e315);
        assert!(e315.is_symmetric());
    }

    #[test]
    fn leading_polynomial_examples() {
        assert_eq!(p("x1 x1* - x1*^2 + 2 x1 + 4", 1).leading_polynomial().unwrap(), p("x1 x1* - x1*^2", 1));
        let h = p("x1 x2 - 5 x2* x1", 2);
        assert_eq!(h.leading_polynomial().unwrap(), h);
        assert_eq!(p("5", 1).leading_polynomial().unwrap(), p("5", 1));
        assert_eq!(Polynomial::zero(1).leading_polynomial(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn analytic_examples() {
        assert!(p("1 + x1 x2 + x1^3 + x2^5", 2).is_analytic());
        assert!(!p("1 + x1* x2", 2).is_analytic());
        assert!(Polynomial::zero(2).is_analytic());
        assert!(p("x1* x2* + 1", 2).is_antianalytic());
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(Polynomial::zero(1).degree(), None);
        assert_eq!(p("3", 1).degree(), Some(0));
        assert_eq!(format!("{}", Polynomial::zero(1)), "0");
    }

    #[test]
    fn printing() {
        assert_eq!(format!("{}", p("x1 x2* - 3/2", 2)), "x1 x2* - 3/2");
        assert_eq!(format!("{}", p("-x1 + 2 x1 x1*^2", 1)), "2 x1 x1*^2 - x1");
    }

    pub(crate) fn arb_poly(g: usize, max_deg: usize, max_terms: usize) -> impl Strategy<Value = Polynomial> {
        let word = prop::collection::vec(0..2 * g, 0..=max_deg)
            .prop_map(|codes| codes.into_iter().map(Letter::from_code).collect::<Word>());
        let coef = (-5i64..=5, 1i64..=3).prop_map(|(n, d)| q_frac(n, d));
        prop::collection::vec((word, coef), 0..=max_terms).prop_map(move |ts| Polynomial::from_terms(ts, g))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn ring_laws(a in arb_poly(3, 3, 4), b in arb_poly(3, 3, 4), c in arb_poly(3, 2, 3)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!((&a * &b).star(), &b.star() * &a.star());
            prop_assert_eq!(a.star().star(), a.clone());
            prop_assert_eq!((&a + &b).star(), &a.star() + &b.star());
        }

        #[test]
        fn print_parse_round_trip(a in arb_poly(3, 5, 6)) {
            let text = format!("{a}");
            prop_assert_eq!(parse_poly(&text, 3).unwrap(), a);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn degree_is_additive(a in arb_poly(3, 5, 4), b in arb_poly(3, 5, 4)) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!((&a * &b).degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
        }
    }
}
