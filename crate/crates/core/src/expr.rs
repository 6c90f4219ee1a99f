//! A small expression language for free-algebra polynomials.
//!
//! ```text
//! expr  := ['-'] term (('+' | '-') term)*
//! term  := power ('*' power)*
//! power := atom ('^' n)?
//! atom  := rational | 'q' | 'w(' word ')' | 'E(' lyndon ')' | '(' expr ')' | '[' expr ',' expr ']'
//! ```
//!
//! `w(21)` is a word, `E(112)` a Lyndon-Shirshov basis element and `[a, b]` a commutator.

use crate::error::{Error, Result};
use crate::freepoly::FreePoly;
use crate::pbw::PbwEngine;
use crate::qsigma::QFree;
use crate::rings::{parse_rational, QPoly, Rational};
use crate::words::{Alphabet, LyndonWord, Word};

/// Intermediate results larger than this abort with [`Error::TermLimit`].
pub const TERM_LIMIT: usize = 2_000_000;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    alphabet: Alphabet,
    engine: PbwEngine,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected {c:?}")))
        }
    }

    fn guard(&self, p: QFree) -> Result<QFree> {
        if p.len() > TERM_LIMIT {
            Err(Error::TermLimit(TERM_LIMIT))
        } else {
            Ok(p)
        }
    }

    fn expr(&mut self) -> Result<QFree> {
        let mut acc = if self.eat('-') {
            self.term()?.neg_poly()
        } else {
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.try_add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.try_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<QFree> {
        let mut acc = self.power()?;
        while self.eat('*') {
            let rhs = self.power()?;
            acc = self.guard(acc.try_mul(&rhs)?)?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<QFree> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        self.skip_ws();
        let digits: String = self.src[self.pos..].chars().take_while(char::is_ascii_digit).collect();
        if digits.is_empty() {
            return Err(self.err("expected exponent"));
        }
        self.pos += digits.len();
        let e: u32 = digits.parse().map_err(|_| self.err("exponent too large"))?;
        let mut acc = FreePoly::one(self.alphabet);
        for _ in 0..e {
            acc = self.guard(acc.try_mul(&base)?)?;
        }
        Ok(acc)
    }

    fn delimited(&mut self) -> Result<&'a str> {
        self.expect('(')?;
        let rest = &self.src[self.pos..];
        let end = rest.find(')').ok_or_else(|| self.err("unterminated argument"))?;
        self.pos += end + 1;
        Ok(rest[..end].trim())
    }

    fn atom(&mut self) -> Result<QFree> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some('[') => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(']')?;
                self.guard(a.commutator(&b)?)
            }
            Some('q') => {
                self.pos += 1;
                Ok(FreePoly::monomial(self.alphabet, Word::empty(), QPoly::q_pow(1)))
            }
            Some('w') => {
                self.pos += 1;
                let inner = self.delimited()?;
                let w = if inner.is_empty() { Word::empty() } else { Word::parse(inner, self.alphabet)? };
                Ok(FreePoly::word(self.alphabet, w))
            }
            Some('E') => {
                self.pos += 1;
                let inner = self.delimited()?;
                let alpha = LyndonWord::parse(inner, self.alphabet)?;
                Ok(self.engine.basis_element(&alpha).map_coeffs(|c| QPoly::constant(c.clone())))
            }
            Some(c) if c.is_ascii_digit() => {
                let rest = &self.src[self.pos..];
                let len = rest
                    .char_indices()
                    .find(|(_, ch)| !(ch.is_ascii_digit() || *ch == '/'))
                    .map_or(rest.len(), |(i, _)| i);
                let value = parse_rational(&rest[..len])?;
                self.pos += len;
                Ok(FreePoly::monomial(self.alphabet, Word::empty(), QPoly::constant(value)))
            }
            _ => Err(self.err("unexpected input")),
        }
    }
}

/// Parses an expression with coefficients in `ℚ[q]`.
pub fn parse_q_expr(src: &str, alphabet: Alphabet) -> Result<QFree> {
    let mut p = Parser {
        src,
        pos: 0,
        alphabet,
        engine: PbwEngine::new(alphabet),
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

/// Parses an expression with rational coefficients; `q` is rejected.
pub fn parse_expr(src: &str, alphabet: Alphabet) -> Result<FreePoly<Rational>> {
    parse_q_expr(src, alphabet)?.try_map_coeffs(|c| {
        if c.is_zero() {
            return Ok(Rational::from_integer(0.into()));
        }
        match c.degree() {
            Some(0) => Ok(c.coeff(0)),
            _ => Err(Error::Parse(format!("coefficient {c} is not rational"))),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::rat_frac;

    #[test]
    fn parses_words_and_brackets() {
        let b = Alphabet::binary();
        let p = parse_expr("2*w(21) + w(12) - 3/2", b).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.coeff(&Word::empty()), Some(&rat_frac(-3, 2)));
        let c = parse_expr("[E(112), E(2)]", b).unwrap();
        assert_eq!(c, parse_expr("E(1122)", b).unwrap());
        let sq = parse_expr("(w(1)+w(2))^2", b).unwrap();
        assert_eq!(sq.len(), 4);
        assert!(parse_expr("q*w(1)", b).is_err());
        assert_eq!(parse_q_expr("q*w(1)", b).unwrap().len(), 1);
        assert!(parse_expr("w(13)", b).is_err());
        assert!(parse_expr("w(1) +", b).is_err());
    }
}
