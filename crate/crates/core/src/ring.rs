//! The ambient polynomial ring and the text syntax for monomials and ideals.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Largest supported number of variables; prime supports are `u64` bitmasks.
pub const MAX_VARS: usize = 64;

/// Characteristic of the coefficient field. Only homology looks at it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Characteristic {
    #[default]
    Zero,
    Prime(u32),
}

/// `S = K[x1..xn]` with display names for the variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingContext {
    nvars: usize,
    names: Vec<String>,
    characteristic: Characteristic,
}

impl RingContext {
    /// Ring on `x1..xn` over a characteristic zero field.
    pub fn new(nvars: usize) -> Result<Self> {
        let names = (1..=nvars).map(|i| format!("x{i}")).collect();
        Self::with_names(names)
    }

    pub fn with_names(names: Vec<String>) -> Result<Self> {
        let nvars = names.len();
        if nvars == 0 {
            return Err(Error::InvalidArgument("ring needs at least one variable".into()));
        }
        if nvars > MAX_VARS {
            return Err(Error::Resource {
                what: "variable count",
                limit: MAX_VARS,
                actual: nvars,
            });
        }
        for (i, name) in names.iter().enumerate() {
            let valid = name
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidArgument(format!("bad variable name `{name}`")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidArgument(format!("duplicate variable `{name}`")));
            }
        }
        Ok(RingContext {
            nvars,
            names,
            characteristic: Characteristic::Zero,
        })
    }

    pub fn with_characteristic(mut self, characteristic: Characteristic) -> Self {
        self.characteristic = characteristic;
        self
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn characteristic(&self) -> Characteristic {
        self.characteristic
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.nvars)
    }

    pub fn var(&self, i: usize) -> Monomial {
        Monomial::var(self.nvars, i)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        m.display_with(&self.names).to_string()
    }

    pub fn format_ideal(&self, ideal: &MonomialIdeal) -> String {
        if ideal.is_zero() {
            return "0".into();
        }
        ideal
            .gens()
            .iter()
            .map(|g| self.format_monomial(g))
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// Parse `x1^2*x2*x4` (or `1`).
    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        let mut p = Parser::new(self, text);
        p.skip_ws();
        let m = p.monomial()?;
        p.skip_ws();
        p.expect_end()?;
        Ok(m)
    }

    /// Parse a comma-separated list of monomials, keeping order and repeats.
    pub fn parse_monomial_list(&self, text: &str) -> Result<Vec<Monomial>> {
        let mut p = Parser::new(self, text);
        let mut out = Vec::new();
        loop {
            p.skip_ws();
            out.push(p.monomial()?);
            p.skip_ws();
            if p.eat(',') {
                continue;
            }
            p.expect_end()?;
            return Ok(out);
        }
    }

    /// Parse an ideal: `x1^2, x1*x2`, or `0` for the zero ideal.
    pub fn parse_ideal(&self, text: &str) -> Result<MonomialIdeal> {
        if text.trim() == "0" {
            return Ok(MonomialIdeal::zero(self.nvars));
        }
        let gens = self.parse_monomial_list(text)?;
        MonomialIdeal::new(self.nvars, gens)
    }
}

struct Parser<'a> {
    ring: &'a RingContext,
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(ring: &'a RingContext, text: &'a str) -> Self {
        Parser { ring, text, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let token: String = self
            .rest()
            .chars()
            .take_while(|c| !c.is_whitespace() && *c != ',')
            .collect();
        Error::Parse {
            token: if token.is_empty() { "<end>".into() } else { token },
            position: self.pos,
            message: message.into(),
        }
    }

    fn expect_end(&self) -> Result<()> {
        if self.pos == self.text.len() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(&pred) {
            self.pos += self.peek().map_or(0, char::len_utf8);
        }
        &self.text[start..self.pos]
    }

    fn monomial(&mut self) -> Result<Monomial> {
        let mut exps = vec![0u32; self.ring.nvars];
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let digits = self.take_while(|c| c.is_ascii_digit());
                if digits != "1" {
                    self.pos = start;
                    return Err(self.error("coefficients are not allowed"));
                }
                self.skip_ws();
                if self.peek() == Some('*') {
                    self.pos = start;
                    return Err(self.error("coefficients are not allowed"));
                }
                return Ok(Monomial::new(exps));
            }
            None | Some(',') => return Err(self.error("expected a monomial")),
            _ => {}
        }
        loop {
            self.skip_ws();
            let start = self.pos;
            let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
            if name.is_empty() {
                return Err(self.error("expected a variable"));
            }
            let Some(idx) = self.ring.names.iter().position(|n| n == name) else {
                self.pos = start;
                return Err(self.error(format!("unknown variable `{name}`")));
            };
            self.skip_ws();
            let mut e = 1u32;
            if self.eat('^') {
                self.skip_ws();
                if self.peek() == Some('-') {
                    return Err(self.error("negative exponents are not allowed"));
                }
                let digits = self.take_while(|c| c.is_ascii_digit());
                if digits.is_empty() {
                    return Err(self.error("expected an exponent"));
                }
                e = digits.parse().map_err(|_| Error::Overflow)?;
            }
            exps[idx] = exps[idx].checked_add(e).ok_or(Error::Overflow)?;
            self.skip_ws();
            if !self.eat('*') {
                return Ok(Monomial::new(exps));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        let r = RingContext::new(4).unwrap();
        let m = r.parse_monomial("x1^2*x2*x4").unwrap();
        assert_eq!(m.exponents(), &[2, 1, 0, 1]);
        assert_eq!(r.format_monomial(&m), "x1^2*x2*x4");
        assert!(r.parse_monomial("1").unwrap().is_one());
        let i = r.parse_ideal("x1^2, x1*x2").unwrap();
        assert_eq!(r.format_ideal(&i), "x1^2, x1*x2");
        assert!(r.parse_ideal("0").unwrap().is_zero());
    }

    #[test]
    fn repeated_variables_accumulate() {
        let r = RingContext::new(2).unwrap();
        assert_eq!(r.parse_monomial("x1*x1^2").unwrap().exponents(), &[3, 0]);
    }

    #[test]
    fn parser_rejections_carry_positions() {
        let r = RingContext::new(2).unwrap();
        match r.parse_ideal("x1, 3*x2") {
            Err(Error::Parse { token, position, .. }) => {
                assert_eq!(position, 4);
                assert_eq!(token, "3*x2");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(r.parse_monomial("x1^-2"), Err(Error::Parse { .. })));
        match r.parse_monomial("x1*y") {
            Err(Error::Parse { token, position, .. }) => {
                assert_eq!((token.as_str(), position), ("y", 3));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(r.parse_monomial("x1 x2").is_err());
        assert!(r.parse_ideal("x1,").is_err());
    }

    #[test]
    fn ring_validation() {
        assert!(RingContext::new(0).is_err());
        assert!(RingContext::with_names(vec!["x".into(), "x".into()]).is_err());
        let r = RingContext::with_names(vec!["x".into(), "y".into()]).unwrap();
        assert_eq!(r.parse_monomial("x^2*y").unwrap().exponents(), &[2, 1]);
    }
}
