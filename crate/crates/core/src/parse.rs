//! Text grammar for polynomials.
//!
//! ```text
//! LETTER := 'x' INT ['*']
//! FACTOR := LETTER ['^' INT]
//! MONO   := FACTOR+                  (juxtaposition)
//! COEFF  := INT ['/' INT]
//! TERM   := COEFF [MONO] | MONO
//! POLY   := ['-'] TERM (('+'|'-') TERM)*
//! ```
//!
//! Whitespace between tokens is ignored. [`Polynomial`]'s `Display` impl is
//! the inverse printer.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Q};
use crate::word::{Letter, Word};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    g: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse::<BigInt>().unwrap())
    }

    fn small_int(&mut self) -> Result<usize> {
        let start = self.pos;
        let n = self.int()?;
        usize::try_from(n).or_else(|_| {
            self.pos = start;
            self.err("integer too large")
        })
    }

    fn letter(&mut self) -> Result<Letter> {
        if !self.eat(b'x') {
            return self.err("expected a letter 'x<i>'");
        }
        self.skip_ws();
        let at = self.pos;
        let index = self.small_int()?;
        if index == 0 || index > self.g {
            self.pos = at;
            return Err(Error::VariableOutOfRange { index, g: self.g });
        }
        let starred = self.eat(b'*');
        Ok(Letter::new(index, starred))
    }

    fn mono(&mut self) -> Result<Word> {
        let mut letters = Vec::new();
        while self.peek() == Some(b'x') {
            let l = self.letter()?;
            let power = if self.eat(b'^') { self.small_int()? } else { 1 };
            letters.extend(core::iter::repeat_n(l, power));
        }
        Ok(Word::from_letters(letters))
    }

    fn coeff(&mut self) -> Result<Q> {
        let num = self.int()?;
        if self.eat(b'/') {
            let at = self.pos;
            let den = self.int()?;
            if den.is_zero() {
                self.pos = at;
                return self.err("zero denominator");
            }
            Ok(Q::new(num, den))
        } else {
            Ok(Q::from_integer(num))
        }
    }

    fn term(&mut self) -> Result<(Word, Q)> {
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let c = self.coeff()?;
                let w = self.mono()?;
                Ok((w, c))
            }
            Some(b'x') => Ok((self.mono()?, Q::one())),
            Some(_) => self.err("expected a coefficient or a letter"),
            None => self.err("unexpected end of input"),
        }
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut p = Polynomial::zero(self.g);
        let mut negate = self.eat(b'-');
        loop {
            let (w, c) = self.term()?;
            p.add_term(w, if negate { -c } else { c });
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                break;
            }
        }
        if self.peek().is_some() {
            return self.err("unexpected character");
        }
        Ok(p)
    }
}

/// Parse a polynomial in `g` variables.
pub fn parse_poly(text: &str, g: usize) -> Result<Polynomial> {
    Parser { src: text.as_bytes(), pos: 0, g }.poly()
}

/// Parse a single word such as `x1 x2* x2 x1` (or `1` for the unit).
pub fn parse_word(text: &str, g: usize) -> Result<Word> {
    let p = parse_poly(text, g)?;
    match p.to_terms_desc().as_slice() {
        [(w, c)] if c.is_one() => Ok(w.clone()),
        _ => Err(Error::Parse { pos: 0, msg: String::from("expected a single word") }),
    }
}

/// Smallest `g` large enough for every `x<i>` in `text`; 1 when none occur.
///
/// Lets callers infer the variable count before parsing.
pub fn infer_num_vars(text: &str) -> usize {
    let b = text.as_bytes();
    let mut g = 1;
    let mut i = 0;
    while i < b.len() {
        if b[i] == b'x' {
            let mut j = i + 1;
            let mut n = 0usize;
            while j < b.len() && b[j].is_ascii_digit() {
                n = n.saturating_mul(10).saturating_add((b[j] - b'0') as usize);
                j += 1;
            }
            g = g.max(n);
            i = j;
        } else {
            i += 1;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{q_frac, q_int};

    fn w(code: &[(usize, bool)]) -> Word {
        code.iter().map(|&(i, s)| Letter::new(i, s)).collect()
    }

    #[test]
    fn parses_spec_examples() {
        let p = parse_poly("x1 x2* - 3/2", 2).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.coeff(&w(&[(1, false), (2, true)])), q_int(1));
        assert_eq!(p.constant_term(), q_frac(-3, 2));

        let p = parse_poly("x1^2 + x1*^2", 1).unwrap();
        assert_eq!(p.coeff(&w(&[(1, false), (1, false)])), q_int(1));
        assert_eq!(p.coeff(&w(&[(1, true), (1, true)])), q_int(1));

        assert!(parse_poly("0", 3).unwrap().is_zero());
    }

    #[test]
    fn whitespace_is_insignificant() {
        let a = parse_poly("x1x2*-3/2", 2).unwrap();
        let b = parse_poly("  x1 x 2 *  -  3 / 2 ", 2).unwrap();
        let c = parse_poly(" x1  x2*   - 3 /2", 2).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn coefficient_then_word_and_cancellation() {
        let p = parse_poly("2 x1 x1 - x1^2 - x1^2", 1).unwrap();
        assert!(p.is_zero());
        let p = parse_poly("-4/6 x1*", 1).unwrap();
        assert_eq!(p.coeff(&w(&[(1, true)])), q_frac(-2, 3));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_poly("x1 + x3", 2), Err(Error::VariableOutOfRange { index: 3, g: 2 }));
        match parse_poly("x1 + + x2", 2) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_poly("1/0", 1), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("", 1), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x", 1), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x1 )", 1), Err(Error::Parse { .. })));
    }

    #[test]
    fn words_and_inference() {
        assert_eq!(parse_word("x1 x2* x2 x1", 2).unwrap().degree(), 4);
        assert!(parse_word("2 x1", 1).is_err());
        assert_eq!(parse_word("1", 1).unwrap(), Word::one());
        assert_eq!(infer_num_vars("x1 x12* + 3"), 12);
        assert_eq!(infer_num_vars("7"), 1);
    }
}
