//! Text grammar for morphisms and their linear combinations.
//!
//! The concrete syntax is the one the printers emit:
//!
//! ```text
//! morphism    := '[' words? ']' '_' nat          e.g.  [x1|x1x2x1^-1]_2
//! words       := word ('|' word)*
//! word        := 'e' | letter+                   'e' is the empty word
//! letter      := 'x' nat ('^' int)?              x3, x1^-1, x2^4
//! combination := '0' | sign? term (sign term)*   sign := '+' | '-'
//! term        := (coeff '*')? morphism
//! coeff       := nat ('/' nat)?                  2, 3/2
//! ```
//!
//! Whitespace may separate any two tokens, so `[x2 x1 x2]_2` and
//! `[x2x1x2]_2` parse alike. Exponents other than `±1` are accepted on
//! input and spelled out into repeated letters; printers only ever emit
//! `^-1`. Parsing is strict about everything else and reports the byte
//! position of the first offending character.
//!
//! A bare `0` denotes the zero combination; having no terms, it carries no
//! usable signature and is labelled `0 → 0`.

use super::linear::LinMorphism;
use super::morphism::GropMorphism;
use super::word::{FreeWord, Letter};
use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// Parse a single morphism, e.g. `[x2x3|e|x4x1]_4`.
pub fn parse_morphism(text: &str) -> Result<GropMorphism> {
    let mut p = Parser::new(text);
    p.skip_ws();
    let m = p.morphism()?;
    p.skip_ws();
    p.expect_end()?;
    Ok(m)
}

/// Parse a linear combination of morphisms, e.g.
/// `2*[x1|x1]_1 - [e|x1]_1`, with coefficients read in `field`.
pub fn parse_lin(text: &str, field: FieldSpec) -> Result<LinMorphism> {
    let mut p = Parser::new(text);
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("expected a morphism combination"));
    }
    let mut terms: Vec<(GropMorphism, crate::field::Scalar)> = Vec::new();
    let mut signature: Option<(usize, usize)> = None;
    let mut negative = match p.peek() {
        Some(b'-') => {
            p.bump();
            true
        }
        Some(b'+') => {
            p.bump();
            false
        }
        _ => false,
    };
    loop {
        p.skip_ws();
        let term_pos = p.pos;
        // Coefficient, if the term starts with digits.
        let coeff = if p.peek().is_some_and(|b| b.is_ascii_digit()) {
            let num = p.digits()?;
            let text = if p.peek_after_ws() == Some(b'/') {
                p.skip_ws();
                p.bump(); // '/'
                p.skip_ws();
                let den = p.digits()?;
                format!("{num}/{den}")
            } else {
                num
            };
            Some(
                field
                    .parse_scalar(&text)
                    .map_err(|_| Error::Parse {
                        pos: term_pos,
                        msg: format!("bad coefficient `{text}`"),
                    })?,
            )
        } else {
            None
        };
        p.skip_ws();
        // An explicit `*` between coefficient and morphism is conventional
        // but optional: `2[x1]_1` parses like `2*[x1]_1`.
        if coeff.is_some() && p.peek() == Some(b'*') {
            p.bump();
            p.skip_ws();
        }
        let starts_morphism = p.peek() == Some(b'[');
        match (&coeff, starts_morphism) {
            // A bare number is only legal as the literal zero combination.
            (Some(c), false) => {
                if !c.is_zero() {
                    return Err(Error::Parse {
                        pos: p.pos,
                        msg: "expected `*` and a morphism after a coefficient".into(),
                    });
                }
            }
            (None, false) => {
                return Err(p.error("expected a morphism `[...]_n`"));
            }
            _ => {}
        }
        if starts_morphism {
            let m = p.morphism()?;
            let c = coeff.unwrap_or_else(|| field.one());
            let c = if negative { c.neg() } else { c };
            match signature {
                None => signature = Some((m.source(), m.target())),
                Some(sig) => {
                    if sig != (m.source(), m.target()) {
                        return Err(Error::Parse {
                            pos: term_pos,
                            msg: format!(
                                "term {} has signature {} -> {}, expected {} -> {}",
                                m,
                                m.source(),
                                m.target(),
                                sig.0,
                                sig.1
                            ),
                        });
                    }
                }
            }
            terms.push((m, c));
        }
        p.skip_ws();
        match p.peek() {
            Some(b'+') => {
                p.bump();
                negative = false;
            }
            Some(b'-') => {
                p.bump();
                negative = true;
            }
            None => break,
            Some(_) => return Err(p.error("expected `+`, `-`, or end of input")),
        }
    }
    let (source, target) = signature.unwrap_or((0, 0));
    LinMorphism::from_terms(field, source, target, terms)
}

/// Handles the optional `*` in terms: peeks past whitespace without
/// consuming it.
struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn peek_after_ws(&self) -> Option<u8> {
        self.bytes[self.pos..]
            .iter()
            .copied()
            .find(|b| !b.is_ascii_whitespace())
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.bump();
        }
        // `*` separates a coefficient from a morphism; treating it as
        // whitespace-adjacent punctuation here would swallow legitimate
        // errors, so it is consumed explicitly where expected.
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", b as char)))
        }
    }

    fn expect_end(&self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    fn digits(&mut self) -> Result<String> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.error("expected digits"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ASCII")
            .to_string())
    }

    fn nat(&mut self) -> Result<usize> {
        let pos = self.pos;
        let s = self.digits()?;
        s.parse().map_err(|_| Error::Parse {
            pos,
            msg: format!("number `{s}` is too large"),
        })
    }

    /// `'[' words? ']' '_' nat`, with the variable-range check applied.
    fn morphism(&mut self) -> Result<GropMorphism> {
        let open = self.pos;
        self.expect(b'[')?;
        self.skip_ws();
        let mut words = Vec::new();
        if self.peek() != Some(b']') {
            loop {
                words.push(self.word()?);
                self.skip_ws();
                match self.peek() {
                    Some(b'|') => {
                        self.bump();
                        self.skip_ws();
                    }
                    Some(b']') => break,
                    _ => return Err(self.error("expected `|` or `]` in a word list")),
                }
            }
        }
        self.expect(b']')?;
        self.expect(b'_')?;
        let source = self.nat()?;
        GropMorphism::new(source, words).map_err(|e| Error::Parse {
            pos: open,
            msg: e.to_string(),
        })
    }

    /// `'e' | letter+`, whitespace allowed between letters.
    fn word(&mut self) -> Result<FreeWord> {
        let mut letters: Vec<Letter> = Vec::new();
        let mut saw_token = false;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'e') => {
                    self.bump();
                    saw_token = true;
                }
                Some(b'x') => {
                    self.bump();
                    let var_pos = self.pos;
                    let var = self.nat()?;
                    if var == 0 {
                        return Err(Error::Parse {
                            pos: var_pos,
                            msg: "variable indices start at x1".into(),
                        });
                    }
                    let exp: i64 = if self.peek() == Some(b'^') {
                        self.bump();
                        let negative = if self.peek() == Some(b'-') {
                            self.bump();
                            true
                        } else {
                            false
                        };
                        let mag = self.nat()? as i64;
                        if negative {
                            -mag
                        } else {
                            mag
                        }
                    } else {
                        1
                    };
                    letters.extend(
                        FreeWord::generator_power(var, exp).letters().iter().copied(),
                    );
                    saw_token = true;
                }
                _ => break,
            }
        }
        if !saw_token {
            return Err(self.error("expected a word: `e` or letters like `x1`, `x2^-1`"));
        }
        Ok(FreeWord::from_letters(letters))
    }
}
