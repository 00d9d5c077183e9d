//! Text syntax for rings, elements, ideals and primes.
//!
//! ```text
//! ring    := kring '+' 'X' '*' lfield '[' 'X' ']'
//! kring   := 'Z' | 'Q' | 'Z_(' prime ')' | 'Z[sqrt(' int ')]' | 'Q(sqrt(' int '))'
//! lfield  := 'Q' | 'Q(sqrt(' int '))'
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := factor ('*' factor)*
//! factor  := atom ['^' nat]
//! atom    := nat ['/' nat] | 'X' | 'sqrt(' int ')' | '(' expr ')'
//! ideal   := 'ideal(' expr ((';'|',') expr)* ')'
//! prime   := 'prime:' ('0' | 'M' | 'T(' expr ')' | 'K(' expr ((';'|',') expr)* ')')
//! ```
//!
//! Whitespace is ignored everywhere.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::composite::CompositeElement;
use crate::error::Error;
use crate::exactnum::{KTag, QuadElement, Rational};
use crate::ideals::FGIdeal;
use crate::poly::Poly;
use crate::ringdesc::{builtin_pair, CompositePair, LField};
use crate::spectrum::{KPrime, PrimeDescriptor};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    /// Character offset into the input.
    pub pos: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: expected {}, found {}", self.pos, self.expected.join(" or "), self.found)
    }
}

/// Failure to turn text into a value: malformed text, or well-formed text
/// naming something outside the ring.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InputError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Domain(#[from] Error),
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    /// Radicand of L; `sqrt(d)` must match it.
    radicand: i64,
}

type PResult<T> = std::result::Result<T, ParseError>;

impl Parser {
    fn new(src: &str, radicand: i64) -> Self {
        Parser { chars: src.chars().collect(), pos: 0, radicand }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn err<T>(&mut self, expected: &[&str]) -> PResult<T> {
        let found = match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        Err(ParseError { pos: self.pos, expected: expected.iter().map(|s| s.to_string()).collect(), found })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    /// Consumes `word` char by char, whitespace allowed between them.
    fn eat_word(&mut self, word: &str) -> bool {
        let save = self.pos;
        for c in word.chars() {
            if !self.eat(c) {
                self.pos = save;
                return false;
            }
        }
        true
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(&[&format!("'{c}'")])
        }
    }

    fn expect_word(&mut self, word: &str) -> PResult<()> {
        if self.eat_word(word) {
            Ok(())
        } else {
            self.err(&[&format!("'{word}'")])
        }
    }

    fn end(&mut self) -> PResult<()> {
        if self.peek().is_none() {
            Ok(())
        } else {
            self.err(&["end of input"])
        }
    }

    fn nat(&mut self) -> PResult<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(&["digit"]);
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits"))
    }

    fn int(&mut self) -> PResult<i64> {
        let neg = self.eat('-');
        let start = self.pos;
        let n = self.nat()?;
        let n = i64::try_from(n).map_err(|_| ParseError {
            pos: start,
            expected: vec!["integer of at most 64 bits".into()],
            found: "larger integer".into(),
        })?;
        Ok(if neg { -n } else { n })
    }

    fn small_nat(&mut self) -> PResult<u32> {
        let start = self.pos;
        let n = self.nat()?;
        u32::try_from(n).ok().filter(|&k| k <= 4096).ok_or(ParseError {
            pos: start,
            expected: vec!["exponent at most 4096".into()],
            found: "larger exponent".into(),
        })
    }

    fn expr(&mut self) -> PResult<Poly> {
        let mut acc = Poly::zero();
        let mut sign = if self.eat('-') {
            -1
        } else {
            self.eat('+');
            1
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> PResult<Poly> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> PResult<Poly> {
        let base = self.atom()?;
        if self.eat('^') {
            let k = self.small_nat()?;
            let mut out = Poly::one();
            for _ in 0..k {
                out = &out * &base;
            }
            return Ok(out);
        }
        Ok(base)
    }

    fn atom(&mut self) -> PResult<Poly> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.nat()?;
                if self.eat('/') {
                    let start = self.pos;
                    let d = self.nat()?;
                    if d == BigInt::from(0) {
                        return Err(ParseError { pos: start, expected: vec!["nonzero denominator".into()], found: "0".into() });
                    }
                    return Ok(Poly::constant(QuadElement::rational(Rational::from_big(n, d))));
                }
                Ok(Poly::constant(QuadElement::rational(Rational::from_bigint(n))))
            }
            Some('X') => {
                self.pos += 1;
                Ok(Poly::x_pow(1))
            }
            Some('s') => {
                let start = self.pos;
                self.expect_word("sqrt(")?;
                let d = self.int()?;
                self.expect(')')?;
                if d != self.radicand || d == 0 {
                    let want = if self.radicand == 0 {
                        "no square roots in this ring".to_string()
                    } else {
                        format!("sqrt({})", self.radicand)
                    };
                    return Err(ParseError { pos: start, expected: vec![want], found: format!("sqrt({d})") });
                }
                Ok(Poly::constant(QuadElement::sqrt(d)))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            _ => self.err(&["number", "'X'", "'sqrt('", "'('"]),
        }
    }

    fn list(&mut self) -> PResult<Vec<Poly>> {
        let mut out = vec![self.expr()?];
        while self.eat(';') || self.eat(',') {
            out.push(self.expr()?);
        }
        Ok(out)
    }

    fn quad_field(&mut self) -> PResult<i64> {
        self.expect_word("(sqrt(")?;
        let start = self.pos;
        let d = self.int()?;
        self.expect_word("))")?;
        self.check_radicand(start, d)?;
        Ok(d)
    }

    fn check_radicand(&mut self, start: usize, d: i64) -> PResult<()> {
        if d == 0 || d == 1 || !crate::exactnum::intmath::is_squarefree(d) {
            return Err(ParseError { pos: start, expected: vec!["squarefree integer other than 0, 1".into()], found: d.to_string() });
        }
        Ok(())
    }

    fn k_ring(&mut self) -> PResult<KTag> {
        if self.eat('Z') {
            if self.eat('_') {
                self.expect('(')?;
                let start = self.pos;
                let p = self.nat()?;
                self.expect(')')?;
                let p = u64::try_from(p).ok().filter(|&p| crate::exactnum::intmath::is_prime_u64(p));
                return match p {
                    Some(p) => Ok(KTag::LocalizedIntegers(p)),
                    None => Err(ParseError { pos: start, expected: vec!["prime".into()], found: "composite".into() }),
                };
            }
            if self.eat_word("[sqrt(") {
                let start = self.pos;
                let d = self.int()?;
                self.expect_word(")]")?;
                self.check_radicand(start, d)?;
                return Ok(KTag::QuadRing(d));
            }
            return Ok(KTag::Integers);
        }
        if self.eat('Q') {
            if self.peek() == Some('(') {
                return Ok(KTag::QuadField(self.quad_field()?));
            }
            return Ok(KTag::Rationals);
        }
        self.err(&["'Z'", "'Q'"])
    }

    fn l_field(&mut self) -> PResult<LField> {
        self.expect('Q')?;
        if self.peek() == Some('(') {
            return Ok(LField::Quadratic(self.quad_field()?));
        }
        Ok(LField::Rationals)
    }
}

/// Parses `K + X*L[X]` and looks it up in the fact table.
pub fn parse_ring(src: &str) -> Result<Arc<CompositePair>, InputError> {
    let mut p = Parser::new(src, 0);
    let k = p.k_ring()?;
    p.expect('+')?;
    p.expect_word("X*")?;
    let l = p.l_field()?;
    p.expect_word("[X]")?;
    p.end()?;
    Ok(Arc::new(builtin_pair(k, l).map_err(Error::from)?))
}

/// A polynomial over L, not yet checked against K.
pub fn parse_poly(src: &str, pair: &CompositePair) -> Result<Poly, ParseError> {
    let mut p = Parser::new(src, pair.l_field.radicand());
    let e = p.expr()?;
    p.end()?;
    Ok(e)
}

pub fn parse_element(src: &str, pair: &Arc<CompositePair>) -> Result<CompositeElement, InputError> {
    let poly = parse_poly(src, pair)?;
    Ok(CompositeElement::new(pair, poly)?)
}

pub fn parse_ideal(src: &str, pair: &Arc<CompositePair>) -> Result<FGIdeal, InputError> {
    let mut p = Parser::new(src, pair.l_field.radicand());
    p.expect_word("ideal(")?;
    let gens = p.list()?;
    p.expect(')')?;
    p.end()?;
    let els = gens.into_iter().map(|g| CompositeElement::new(pair, g)).collect::<Result<Vec<_>, _>>()?;
    Ok(FGIdeal::new(pair, els)?)
}

pub fn parse_prime(src: &str, pair: &Arc<CompositePair>) -> Result<PrimeDescriptor, InputError> {
    let mut p = Parser::new(src, pair.l_field.radicand());
    p.expect_word("prime:")?;
    let q = if p.eat('0') {
        PrimeDescriptor::ZeroIdeal
    } else if p.eat('M') {
        PrimeDescriptor::FromT(Poly::x_pow(1))
    } else if p.eat_word("T(") {
        let f = p.expr()?;
        p.expect(')')?;
        PrimeDescriptor::FromT(f)
    } else if p.eat_word("K(") {
        let gens = p.list()?;
        p.expect(')')?;
        p.end()?;
        let mut ks = Vec::with_capacity(gens.len());
        for g in gens {
            if g.degree().unwrap_or(0) > 0 {
                return Err(Error::NotPrime(format!("{g} is not an element of K")).into());
            }
            ks.push(g.constant_term());
        }
        return Ok(PrimeDescriptor::OverM(KPrime::from_gens(pair.k_tag, &ks)?));
    } else {
        return Err(p.err::<()>(&["'0'", "'M'", "'T('", "'K('"]).unwrap_err().into());
    };
    p.end()?;
    Ok(q)
}
