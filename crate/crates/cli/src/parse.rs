//! Polynomial input: the canonical JSON coefficient array
//! (`["-7","14","-7","1"]`, ascending) or the printed form (`x^3 - 7x^2 + 14x - 7`).

use num_bigint::BigInt;
use omegaseq::IntPoly;
use thiserror::Error;

/// Largest exponent accepted in the printed form.
const MAX_EXPONENT: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        pos,
        msg: msg.into(),
    })
}

pub fn parse_poly(text: &str) -> Result<IntPoly, ParseError> {
    let start = text.len() - text.trim_start().len();
    if text[start..].starts_with('[') {
        return serde_json::from_str::<IntPoly>(text).map_err(|e| ParseError {
            pos: json_offset(text, e.line(), e.column()),
            msg: e.to_string(),
        });
    }
    Parser {
        s: text.as_bytes(),
        i: 0,
    }
    .poly()
}

fn json_offset(text: &str, line: usize, column: usize) -> usize {
    let before: usize = text
        .split_inclusive('\n')
        .take(line.saturating_sub(1))
        .map(str::len)
        .sum();
    before + column.saturating_sub(1)
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn digits(&mut self) -> Option<&str> {
        let begin = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        (self.i > begin).then(|| std::str::from_utf8(&self.s[begin..self.i]).expect("ascii"))
    }

    fn poly(mut self) -> Result<IntPoly, ParseError> {
        let mut coeffs: Vec<BigInt> = Vec::new();
        if self.peek().is_none() {
            return err(self.i, "empty polynomial");
        }
        let mut first = true;
        while let Some(c) = self.peek() {
            let negative = match c {
                b'+' | b'-' => {
                    self.i += 1;
                    c == b'-'
                }
                _ if first => false,
                _ => return err(self.i, "expected `+` or `-`"),
            };
            first = false;
            let (coeff, exp) = self.term()?;
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, BigInt::from(0));
            }
            if negative {
                coeffs[exp] -= coeff;
            } else {
                coeffs[exp] += coeff;
            }
        }
        Ok(IntPoly::new(coeffs))
    }

    /// `c`, `c x`, `c*x`, `x`, each optionally followed by `^k`.
    fn term(&mut self) -> Result<(BigInt, usize), ParseError> {
        self.skip_ws();
        let coeff_pos = self.i;
        let coeff = self.digits().map(|d| d.parse::<BigInt>().expect("digits"));
        if coeff.is_some() && self.peek() == Some(b'*') {
            self.i += 1;
            if self.peek() != Some(b'x') {
                return err(self.i, "expected `x` after `*`");
            }
        }
        if self.peek() != Some(b'x') {
            return match coeff {
                Some(c) => Ok((c, 0)),
                None => err(coeff_pos, "expected a coefficient or `x`"),
            };
        }
        self.i += 1;
        let mut exp = 1;
        if self.peek() == Some(b'^') {
            self.i += 1;
            self.skip_ws();
            let pos = self.i;
            exp = match self.digits().map(str::parse::<usize>) {
                Some(Ok(e)) if e <= MAX_EXPONENT => e,
                Some(_) => return err(pos, format!("exponent exceeds {MAX_EXPONENT}")),
                None => return err(pos, "expected an exponent"),
            };
        }
        Ok((coeff.unwrap_or_else(|| BigInt::from(1)), exp))
    }
}
