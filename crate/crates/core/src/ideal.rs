//! Left ideals: monomial orders, left Gröbner bases, normal forms and
//! truncated linear bases.
//!
//! In a left ideal the only overlaps between leading words are suffix
//! relations `lead(pⱼ) = ω · lead(pᵢ)`, so interreducing leading words until
//! none is a left multiple of another already yields a Gröbner basis; no
//! S-polynomials are needed.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::One;

use crate::error::{Error, Result};
use crate::parse::parse_word;
use crate::poly::{Polynomial, Q};
use crate::word::{words_below_degree, Letter, Word};

/// Degree-first order, ties broken left to right by a letter ranking.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MonomialOrder {
    /// `position[code]`: 0 for the largest letter.
    position: Vec<usize>,
}

impl MonomialOrder {
    /// `x1 ≻ x1* ≻ x2 ≻ x2* ≻ …`.
    pub fn deglex() -> MonomialOrder {
        MonomialOrder::default()
    }

    /// Ranking given from largest to smallest letter. Must be a
    /// permutation of the `2g` letters.
    pub fn from_ranking(letters: &[Letter]) -> Result<MonomialOrder> {
        let n = letters.len();
        let mut position = vec![usize::MAX; n];
        for (pos, l) in letters.iter().enumerate() {
            if l.code() >= n || position[l.code()] != usize::MAX {
                return Err(Error::InvalidArgument(String::from(
                    "letter ranking must list every letter x1, x1*, .., xg, xg* exactly once",
                )));
            }
            position[l.code()] = pos;
        }
        Ok(MonomialOrder { position })
    }

    /// Parses a comma-separated ranking such as `"x1,x1*,x2,x2*"`.
    pub fn parse(text: &str, g: usize) -> Result<MonomialOrder> {
        let letters = text
            .split(',')
            .map(|t| {
                let w = parse_word(t.trim(), g)?;
                match w.letters() {
                    [l] => Ok(*l),
                    _ => Err(Error::InvalidArgument(alloc::format!("'{}' is not a single letter", t.trim()))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if letters.len() != 2 * g {
            return Err(Error::InvalidArgument(alloc::format!(
                "ranking lists {} letters, expected {}",
                letters.len(),
                2 * g
            )));
        }
        MonomialOrder::from_ranking(&letters)
    }

    fn pos(&self, l: Letter) -> usize {
        self.position.get(l.code()).copied().unwrap_or(l.code())
    }

    pub fn cmp(&self, u: &Word, v: &Word) -> Ordering {
        u.degree().cmp(&v.degree()).then_with(|| {
            for (a, b) in u.iter().zip(v.iter()) {
                if a != b {
                    return self.pos(*b).cmp(&self.pos(*a));
                }
            }
            Ordering::Equal
        })
    }

    /// Leading word and coefficient.
    pub fn lead<'a>(&self, p: &'a Polynomial) -> Option<(&'a Word, &'a Q)> {
        if self.position.is_empty() {
            return p.leading_term();
        }
        p.terms().max_by(|a, b| self.cmp(a.0, b.0))
    }

    pub fn lead_word(&self, p: &Polynomial) -> Option<Word> {
        self.lead(p).map(|(w, _)| w.clone())
    }

    pub fn monic(&self, p: &Polynomial) -> Polynomial {
        match self.lead(p) {
            Some((_, c)) if !c.is_one() => p.scale(&(Q::one() / c)),
            _ => p.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LeftGroebnerBasis {
    pub polys: Vec<Polynomial>,
    pub order: MonomialOrder,
    /// When tracked, `polys[i] = Σₖ cofactors[i][k] · generators[k]`.
    pub cofactors: Option<Vec<Vec<Polynomial>>>,
    g: usize,
}

impl LeftGroebnerBasis {
    pub fn num_vars(&self) -> usize {
        self.g
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn max_degree(&self) -> usize {
        self.polys.iter().filter_map(Polynomial::degree).max().unwrap_or(0)
    }

    pub fn leading_words(&self) -> Vec<Word> {
        self.polys.iter().filter_map(|p| self.order.lead_word(p)).collect()
    }

    /// Remainder of `p` after full left reduction.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        self.reduce(p, false).0
    }

    /// `(r, q)` with `p = Σ qᵢ · polys[i] + r` and `r` fully reduced.
    pub fn normal_form_with_cofactors(&self, p: &Polynomial) -> (Polynomial, Vec<Polynomial>) {
        self.reduce(p, true)
    }

    fn reduce(&self, p: &Polynomial, track: bool) -> (Polynomial, Vec<Polynomial>) {
        let g = self.g.max(p.num_vars());
        let leads = self.leading_words();
        let mut q = if track { vec![Polynomial::zero(g); self.polys.len()] } else { Vec::new() };
        let mut rest = p.clone();
        let mut rem = Polynomial::zero(g);
        while let Some((w, c)) = self.order.lead(&rest).map(|(w, c)| (w.clone(), c.clone())) {
            let hit = leads.iter().enumerate().find_map(|(i, l)| w.strip_suffix(l).map(|omega| (i, omega)));
            match hit {
                Some((i, omega)) => {
                    let m = Polynomial::monomial(c, omega, g);
                    rest = &rest - &(&m * &self.polys[i]);
                    if track {
                        q[i] = &q[i] + &m;
                    }
                }
                None => {
                    rest.add_term(w.clone(), -c.clone());
                    rem.add_term(w, c);
                }
            }
        }
        (rem, q)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    /// `{ v · pᵢ : deg v ≤ e − deg pᵢ }`, a basis of the ideal's
    /// degree-`≤ e` slice.
    pub fn truncated_basis(&self, e: usize) -> Result<Vec<Polynomial>> {
        let dmax = self.max_degree();
        if e < dmax {
            return Err(Error::InvalidArgument(alloc::format!(
                "truncation degree {e} is below the basis degree {dmax}"
            )));
        }
        let mut out = Vec::new();
        for p in &self.polys {
            let d = p.degree().unwrap_or(0);
            for v in words_below_degree(self.g, e - d + 1) {
                out.push(p.left_mul_word(&v));
            }
        }
        Ok(out)
    }
}

/// Left Gröbner basis by leading-word interreduction.
///
/// While some `lead(pⱼ) = ω · lead(pᵢ)` with `i ≠ j` (for equal leading
/// words, `j` is the later one), replace `pⱼ` by the monic form of
/// `pⱼ − lc(pⱼ) ω pᵢ`, dropping it when it vanishes. Each step lowers a
/// leading word, so the loop terminates.
pub fn left_groebner(gens: &[Polynomial], order: &MonomialOrder) -> LeftGroebnerBasis {
    groebner_impl(gens, order, false)
}

/// As [`left_groebner`], also recording each basis element as a left
/// combination of the generators.
pub fn left_groebner_with_cofactors(gens: &[Polynomial], order: &MonomialOrder) -> LeftGroebnerBasis {
    groebner_impl(gens, order, true)
}

fn groebner_impl(gens: &[Polynomial], order: &MonomialOrder, track: bool) -> LeftGroebnerBasis {
    let g = gens.iter().map(|p| p.num_vars().max(p.max_var())).max().unwrap_or(1).max(1);
    let mut polys: Vec<Polynomial> = Vec::new();
    let mut cof: Vec<Vec<Polynomial>> = Vec::new();
    for (k, p) in gens.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let p = p.clone().with_num_vars(g);
        let (_, c) = order.lead(&p).unwrap();
        let inv = Q::one() / c;
        if track {
            let mut row = vec![Polynomial::zero(g); gens.len()];
            row[k] = Polynomial::constant(inv.clone(), g);
            cof.push(row);
        }
        polys.push(p.scale(&inv));
    }

    'outer: loop {
        let leads: Vec<Word> = polys.iter().map(|p| order.lead_word(p).unwrap()).collect();
        for j in 0..polys.len() {
            for i in 0..polys.len() {
                if i == j || (leads[i] == leads[j] && i > j) {
                    continue;
                }
                let Some(omega) = leads[j].strip_suffix(&leads[i]) else { continue };
                let c = order.lead(&polys[j]).unwrap().1.clone();
                let m = Polynomial::monomial(c, omega, g);
                let reduced = &polys[j] - &(&m * &polys[i]);
                if track {
                    let row: Vec<Polynomial> = cof[j].iter().zip(&cof[i]).map(|(a, b)| a - &(&m * b)).collect();
                    cof[j] = row;
                }
                if reduced.is_zero() {
                    polys.remove(j);
                    if track {
                        cof.remove(j);
                    }
                } else {
                    let lc = order.lead(&reduced).unwrap().1.clone();
                    let inv = Q::one() / lc;
                    if track {
                        for x in cof[j].iter_mut() {
                            *x = x.scale(&inv);
                        }
                    }
                    polys[j] = reduced.scale(&inv);
                }
                continue 'outer;
            }
        }
        break;
    }
    LeftGroebnerBasis { polys, order: order.clone(), cofactors: track.then_some(cof), g }
}

/// Whether `lead(pⱼ)` is never a left multiple of `lead(pᵢ)` for `i ≠ j`.
pub fn leading_words_interreduced(b: &LeftGroebnerBasis) -> bool {
    let leads = b.leading_words();
    (0..leads.len()).all(|j| (0..leads.len()).all(|i| i == j || !leads[j].is_left_multiple_of(&leads[i])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::exact::rank;
    use crate::parse::parse_poly;

    fn p(s: &str, g: usize) -> Polynomial {
        parse_poly(s, g).unwrap()
    }

    fn appendix() -> Vec<Polynomial> {
        ["x1^3 + 1", "x1^2 + x1*^2", "x1 x1* - x1*^2", "x1* x1 - 5"].iter().map(|s| p(s, 1)).collect()
    }

    #[test]
    fn order_examples() {
        let o = MonomialOrder::deglex();
        assert_eq!(o.cmp(&parse_word("x1*", 1).unwrap(), &parse_word("x1", 1).unwrap()), Ordering::Less);
        assert_eq!(o.cmp(&parse_word("x1", 1).unwrap(), &parse_word("x1* x1*", 1).unwrap()), Ordering::Less);
        let rev = MonomialOrder::parse("x1*, x1", 1).unwrap();
        assert_eq!(rev.cmp(&parse_word("x1*", 1).unwrap(), &parse_word("x1", 1).unwrap()), Ordering::Greater);
        assert!(MonomialOrder::parse("x1, x1", 1).is_err());
        assert!(MonomialOrder::parse("x1", 1).is_err());
    }

    #[test]
    fn groebner_examples() {
        let o = MonomialOrder::deglex();
        let b = left_groebner(&[p("x1^2", 1), p("x1", 1)], &o);
        assert_eq!(b.polys, vec![p("x1", 1)]);

        let b = left_groebner(&appendix(), &o);
        let want: Vec<Polynomial> =
            ["x1 x1*^2 - 1", "x1^2 + x1*^2", "x1 x1* - x1*^2", "x1* x1 - 5"].iter().map(|s| p(s, 1)).collect();
        assert_eq!(b.polys, want);
        assert!(leading_words_interreduced(&b));

        let b = left_groebner(&[p("x1", 2)], &o);
        assert_eq!(b.polys, vec![p("x1", 2)]);
        assert!(left_groebner(&[Polynomial::zero(1)], &o).is_empty());
    }

    #[test]
    fn cofactors_reconstruct_basis() {
        let gens = appendix();
        let b = left_groebner_with_cofactors(&gens, &MonomialOrder::deglex());
        for (pi, row) in b.polys.iter().zip(b.cofactors.as_ref().unwrap()) {
            let mut s = Polynomial::zero(1);
            for (q, gk) in row.iter().zip(&gens) {
                s = &s + &(q * gk);
            }
            assert_eq!(&s, pi);
        }
    }

    #[test]
    fn normal_forms_and_membership() {
        let o = MonomialOrder::deglex();
        let empty = left_groebner(&[], &o);
        assert_eq!(empty.normal_form(&p("x1 + 1", 1)), p("x1 + 1", 1));

        let b = left_groebner(&[p("x1^2 + x1*^2", 1)], &o);
        assert_eq!(b.normal_form(&p("x1^3 + 1", 1)), p("1 - x1 x1*^2", 1));
        assert!(b.contains(&(&p("x1", 1) * &b.polys[0])));

        let x = left_groebner(&[p("x1", 1)], &o);
        assert!(x.contains(&p("x1^2", 1)));
        assert!(!x.contains(&p("1", 1)));

        let s = left_groebner(&appendix(), &o);
        assert!(s.contains(&p("x1^3 + 1", 1)));

        let f = p("x1* x1^3 + 3 x1 x1* + 2", 1);
        let (r, q) = s.normal_form_with_cofactors(&f);
        let mut back = r.clone();
        for (qi, pi) in q.iter().zip(&s.polys) {
            back = &back + &(qi * pi);
        }
        assert_eq!(back, f);
    }

    #[test]
    fn truncated_bases() {
        let o = MonomialOrder::deglex();
        let b = left_groebner(&[p("x1", 1)], &o);
        let t = b.truncated_basis(2).unwrap();
        assert_eq!(t, vec![p("x1", 1), p("x1^2", 1), p("x1* x1", 1)]);
        assert_eq!(left_groebner(&[p("x1", 2)], &o).truncated_basis(1).unwrap(), vec![p("x1", 2)]);
        assert!(b.truncated_basis(0).is_err());

        let s = left_groebner(&appendix(), &o);
        let t = s.truncated_basis(3).unwrap();
        // words of degree ≤ 0, 1, 1, 1 for generators of degree 3, 2, 2, 2
        assert_eq!(t.len(), 1 + 3 * 3);
        let words: Vec<Word> = words_below_degree(1, 4);
        let m: Vec<Vec<Q>> = t.iter().map(|q| words.iter().map(|w| q.coeff(w)).collect()).collect();
        assert_eq!(rank(&m), t.len());
    }
}
