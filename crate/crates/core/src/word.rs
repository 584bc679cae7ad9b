//! Letters and words of the free monoid on `x1, x1*, .., xg, xg*`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Mul;

/// A letter `xi` or `xi*`.
///
/// Stored as `2 (i - 1) + starred`, so starring is flipping the low bit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter(u16);

impl Letter {
    /// `var` is 1-based.
    pub fn new(var: usize, starred: bool) -> Letter {
        assert!(var >= 1, "variables are numbered from 1");
        Letter((2 * (var - 1) + starred as usize) as u16)
    }

    pub fn from_code(code: usize) -> Letter {
        Letter(code as u16)
    }

    pub fn code(self) -> usize {
        self.0 as usize
    }

    pub fn var(self) -> usize {
        (self.0 as usize >> 1) + 1
    }

    pub fn is_starred(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn star(self) -> Letter {
        Letter(self.0 ^ 1)
    }
}

/// Default rank: `x1 ≻ x1* ≻ x2 ≻ x2* ≻ ..`.
impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.var())?;
        if self.is_starred() {
            f.write_str("*")?;
        }
        Ok(())
    }
}

/// A word; the empty word is the unit `1`.
///
/// Words are ordered by the default degree-lexicographic monomial order:
/// shorter words are smaller, equal-length words compare letter by letter
/// from the left using the default letter rank.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn one() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn letter(l: Letter) -> Word {
        Word(alloc::vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest variable index occurring in the word, 0 for the unit.
    pub fn max_var(&self) -> usize {
        self.0.iter().map(|l| l.var()).max().unwrap_or(0)
    }

    /// Reverse the word and star every letter.
    pub fn star(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.star()).collect())
    }

    pub fn is_analytic(&self) -> bool {
        self.0.iter().all(|l| !l.is_starred())
    }

    pub fn is_antianalytic(&self) -> bool {
        self.0.iter().all(|l| l.is_starred())
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    pub fn suffix(&self, len: usize) -> Word {
        Word(self.0[self.0.len() - len..].to_vec())
    }

    /// Split at `at`, returning `(prefix, suffix)`.
    pub fn split_at(&self, at: usize) -> (Word, Word) {
        (self.prefix(at), self.suffix(self.degree() - at))
    }

    /// `Some(ω)` when `self = ω · tail`.
    pub fn strip_suffix(&self, tail: &Word) -> Option<Word> {
        if self.0.ends_with(&tail.0) {
            Some(self.prefix(self.degree() - tail.degree()))
        } else {
            None
        }
    }

    /// True when `self = ω · tail` for some word `ω`.
    pub fn is_left_multiple_of(&self, tail: &Word) -> bool {
        self.0.ends_with(&tail.0)
    }

    /// Smallest `k ≥ 1` with `self = u u* v` and `deg u = k`, if any.
    pub fn shrink_length(&self) -> Option<usize> {
        let n = self.0.len();
        (1..=n / 2).find(|&k| (1..=k).all(|i| self.0[k + i - 1] == self.0[k - i].star()))
    }

    /// A word is left unshrinkable when it has no decomposition `u u* v`
    /// with `u` nonempty. The unit is unshrinkable.
    pub fn is_left_unshrinkable(&self) -> bool {
        self.shrink_length().is_none()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Letter> {
        self.0.iter()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for &Word {
    type Output = Word;

    // concatenation: the lengths add
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + rhs.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&rhs.0);
        Word(v)
    }
}

impl Mul for Word {
    type Output = Word;

    fn mul(mut self, rhs: Word) -> Word {
        self.0.extend(rhs.0);
        self
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Prints runs of equal letters as powers: `x1^2 x2*`. The unit prints as `1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        let mut first = true;
        while i < self.0.len() {
            let l = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == l {
                run += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{l}")?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// All words of degree `d` in `g` variables, in basis order
/// (lexicographic in letter code, i.e. descending default monomial order).
pub fn words_of_degree(g: usize, d: usize) -> Vec<Word> {
    let mut out = alloc::vec![Word::one()];
    for _ in 0..d {
        let mut next = Vec::with_capacity(out.len() * 2 * g);
        for w in &out {
            for code in 0..2 * g {
                let mut v = w.0.clone();
                v.push(Letter::from_code(code));
                next.push(Word(v));
            }
        }
        out = next;
    }
    out
}

/// All words of degree `< d`, grouped by ascending degree.
pub fn words_below_degree(g: usize, d: usize) -> Vec<Word> {
    (0..d).flat_map(|k| words_of_degree(g, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Letter {
        Letter::new(i, false)
    }
    fn xs(i: usize) -> Letter {
        Letter::new(i, true)
    }
    fn w(ls: &[Letter]) -> Word {
        Word::from_letters(ls.to_vec())
    }

    /// Independent check: try every nonempty `u` and every `v`.
    fn shrinkable_brute(word: &Word) -> bool {
        let n = word.degree();
        for k in 1..=n / 2 {
            let u = word.prefix(k);
            let v = word.suffix(n - 2 * k);
            if &(&u * &u.star()) * &v == *word {
                return true;
            }
        }
        false
    }

    #[test]
    fn star_is_involutive_and_antimultiplicative() {
        let u = w(&[x(1), xs(2)]);
        let v = w(&[x(3)]);
        assert_eq!(u.star().star(), u);
        assert_eq!((&u * &v).star(), &v.star() * &u.star());
        assert_eq!(w(&[x(1), x(2)]).star(), w(&[xs(2), xs(1)]));
    }

    #[test]
    fn unshrinkable_examples() {
        assert!(!w(&[x(1), xs(1), x(2)]).is_left_unshrinkable());
        assert!(w(&[x(1), xs(2), x(2), x(1)]).is_left_unshrinkable());
        assert!(Word::one().is_left_unshrinkable());
        assert_eq!(w(&[xs(1), x(1)]).shrink_length(), Some(1));
    }

    #[test]
    fn unshrinkable_matches_brute_force() {
        for d in 0..=5 {
            for word in words_of_degree(2, d) {
                assert_eq!(word.is_left_unshrinkable(), !shrinkable_brute(&word), "{word}");
            }
        }
    }

    #[test]
    fn order_is_degree_first_then_letter_rank() {
        assert!(w(&[xs(2)]) > Word::one());
        assert!(w(&[x(1)]) > w(&[xs(1)]));
        assert!(w(&[xs(1)]) > w(&[x(2)]));
        assert!(w(&[xs(2), xs(2)]) > w(&[x(1)]));
        assert!(w(&[x(1), xs(1)]) > w(&[xs(1), xs(1)]));
    }

    #[test]
    fn basis_enumeration() {
        let b = words_of_degree(1, 1);
        assert_eq!(b, alloc::vec![w(&[x(1)]), w(&[xs(1)])]);
        assert_eq!(words_of_degree(2, 3).len(), 64);
        assert_eq!(words_below_degree(1, 3).len(), 7);
        // Basis order is descending in the monomial order within a degree.
        let b2 = words_of_degree(2, 2);
        assert!(b2.windows(2).all(|p| p[0] > p[1]));
    }

    #[test]
    fn display_uses_powers() {
        let word = w(&[x(1), xs(1), xs(1)]);
        assert_eq!(alloc::format!("{word}"), "x1 x1*^2");
        assert_eq!(alloc::format!("{}", Word::one()), "1");
    }

    #[test]
    fn strip_suffix() {
        let word = w(&[x(1), x(1), x(1)]);
        assert_eq!(word.strip_suffix(&w(&[x(1), x(1)])), Some(w(&[x(1)])));
        assert_eq!(word.strip_suffix(&w(&[xs(1)])), None);
    }
}
