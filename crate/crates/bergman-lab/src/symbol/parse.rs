//! Recursive-descent parser for the symbol grammar.
//!
//! ```text
//! symbol := [sign] term (sign term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := 'z' ['^' uint] | 'zbar' ['^' uint] | 'r^' float | 'log(r)' ['^' uint]
//! coeff  := float ['i'] | '(' float ('+'|'-') ufloat 'i' ')'
//! ```
//!
//! Whitespace is allowed between tokens. Errors carry the byte offset of the
//! first offending character. Powers are capped at 10000 so downstream
//! arithmetic cannot overflow integer exponents.

use num_complex::Complex64;

use super::{Symbol, Term};
use crate::{Error, Result};

const MAX_POW: u32 = 10_000;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

pub(super) fn parse_symbol(text: &str) -> Result<Symbol> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty symbol"));
    }

    let mut terms = Vec::new();
    let mut sign = match p.peek() {
        Some(b'+') => {
            p.pos += 1;
            1.0
        }
        Some(b'-') => {
            p.pos += 1;
            -1.0
        }
        _ => 1.0,
    };
    loop {
        p.skip_ws();
        let term = p.parse_term()?;
        terms.push(Term { coeff: term.coeff * sign, ..term });
        p.skip_ws();
        match p.peek() {
            None => break,
            Some(b'+') => {
                p.pos += 1;
                sign = 1.0;
            }
            Some(b'-') => {
                p.pos += 1;
                sign = -1.0;
            }
            Some(_) => return Err(p.error("expected '+', '-', or end of input")),
        }
    }
    Ok(Symbol::from_terms(terms))
}

impl<'a> Parser<'a> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, message: &str) -> Error {
        Error::SymbolParse {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, byte: u8, what: &str) -> Result<()> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(what))
        }
    }

    fn parse_term(&mut self) -> Result<Term> {
        let mut term = Term::new(Complex64::new(1.0, 0.0), 0, 0, 0.0, 0);
        let starts_with_coeff = matches!(self.peek(), Some(b) if b.is_ascii_digit() || b == b'(');
        if starts_with_coeff {
            term.coeff = self.parse_coeff()?;
        } else {
            self.apply_factor(&mut term)?;
        }
        loop {
            let mark = self.pos;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                self.apply_factor(&mut term)?;
            } else {
                self.pos = mark;
                return Ok(term);
            }
        }
    }

    fn apply_factor(&mut self, term: &mut Term) -> Result<()> {
        if self.eat("zbar") {
            term.zbar_pow += self.optional_uint_power()?;
        } else if self.eat("log(r)") {
            term.log_pow += self.optional_uint_power()?;
        } else if self.eat("z") {
            term.z_pow += self.optional_uint_power()?;
        } else if self.eat("r") {
            self.expect(b'^', "expected '^' after 'r'")?;
            term.r_pow += self.parse_signed_float()?;
        } else {
            return Err(self.error("expected factor (z, zbar, r^<float>, or log(r))"));
        }
        Ok(())
    }

    /// `['^' uint]`, defaulting to 1.
    fn optional_uint_power(&mut self) -> Result<u32> {
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.parse_uint()
        } else {
            Ok(1)
        }
    }

    fn parse_uint(&mut self) -> Result<u32> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected integer exponent"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match digits.parse::<u32>() {
            Ok(v) if v <= MAX_POW => Ok(v),
            _ => Err(Error::SymbolParse {
                offset: start,
                message: format!("exponent exceeds the maximum of {MAX_POW}"),
            }),
        }
    }

    /// Unsigned decimal: `digits ['.' digits] [('e'|'E') ['+'|'-'] digits]`.
    fn parse_unsigned_float(&mut self) -> Result<f64> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected number"));
        }
        if self.peek() == Some(b'.') {
            self.pos += 1;
            let frac_start = self.pos;
            while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
                self.pos += 1;
            }
            if self.pos == frac_start {
                return Err(self.error("expected digits after decimal point"));
            }
        }
        if matches!(self.peek(), Some(b'e') | Some(b'E')) {
            self.pos += 1;
            if matches!(self.peek(), Some(b'+') | Some(b'-')) {
                self.pos += 1;
            }
            let exp_start = self.pos;
            while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
                self.pos += 1;
            }
            if self.pos == exp_start {
                return Err(self.error("expected digits in exponent"));
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii number");
        text.parse::<f64>().map_err(|e| Error::SymbolParse {
            offset: start,
            message: format!("invalid number: {e}"),
        })
    }

    fn parse_signed_float(&mut self) -> Result<f64> {
        let sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1.0
            }
            Some(b'+') => {
                self.pos += 1;
                1.0
            }
            _ => 1.0,
        };
        Ok(sign * self.parse_unsigned_float()?)
    }

    /// `float ['i']` or `'(' float sign ufloat 'i' ')'`.
    fn parse_coeff(&mut self) -> Result<Complex64> {
        if self.peek() == Some(b'(') {
            self.pos += 1;
            self.skip_ws();
            let re = self.parse_signed_float()?;
            self.skip_ws();
            let sign = match self.peek() {
                Some(b'+') => 1.0,
                Some(b'-') => -1.0,
                _ => return Err(self.error("expected '+' or '-' in complex coefficient")),
            };
            self.pos += 1;
            self.skip_ws();
            let im = self.parse_unsigned_float()?;
            self.expect(b'i', "expected 'i' in complex coefficient")?;
            self.skip_ws();
            self.expect(b')', "expected ')' closing complex coefficient")?;
            Ok(Complex64::new(re, sign * im))
        } else {
            let value = self.parse_unsigned_float()?;
            if self.peek() == Some(b'i') {
                self.pos += 1;
                Ok(Complex64::new(0.0, value))
            } else {
                Ok(Complex64::new(value, 0.0))
            }
        }
    }
}
