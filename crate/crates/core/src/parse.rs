//! Parser for polynomial equations in one variable.
//!
//! ```text
//! equation := expr ('=' expr)?
//! expr     := term (('+' | '-') term)*
//! term     := unary (('*' | '/') unary | power)*     juxtaposition multiplies
//! unary    := ('+' | '-') unary | power
//! power    := primary (('^' | '**') integer)?
//! primary  := number | identifier | '(' expr ')'
//! ```
//!
//! Division is allowed by nonzero constants only. Decimal literals are
//! rejected unless [`ParseOptions::decimal_as_ratio`] is set, in which case
//! they are read as exact fractions.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{Polynomial, Rational};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedInput {
    pub polynomial: Polynomial,
    /// The identifier used as the variable, `x` when none appears.
    pub variable_name: String,
    pub source_text: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParseOptions {
    pub decimal_as_ratio: bool,
}

/// Positions are character offsets into the input, starting at 0.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("second variable '{second}' at position {pos}; the equation already uses '{first}'")]
    MultipleVariables {
        first: String,
        second: String,
        pos: usize,
    },
    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { pos, .. }
            | ParseError::MultipleVariables { pos, .. }
            | ParseError::NegativeExponent { pos } => *pos,
        }
    }
}

pub fn parse_polynomial(text: &str) -> Result<ParsedInput, ParseError> {
    parse_polynomial_with(text, ParseOptions::default())
}

pub fn parse_polynomial_with(text: &str, options: ParseOptions) -> Result<ParsedInput, ParseError> {
    let tokens = tokenize(text, options)?;
    let mut parser = Parser {
        tokens,
        at: 0,
        variable: None,
        end: text.chars().count(),
    };
    let lhs = parser.expr()?;
    let polynomial = if parser.eat(&Tok::Equals) {
        let rhs = parser.expr()?;
        lhs.sub(&rhs)
    } else {
        lhs
    };
    if let Some(t) = parser.tokens.get(parser.at) {
        return Err(syntax(t.pos, format!("unexpected {}", t.tok.describe())));
    }
    Ok(ParsedInput {
        polynomial,
        variable_name: parser
            .variable
            .map_or_else(|| "x".to_string(), |(name, _)| name),
        source_text: text.to_string(),
    })
}

fn syntax(pos: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        pos,
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Number(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Equals,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Number(n) => format!("number {n}"),
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Equals => "'='".into(),
        }
    }
}

struct Token {
    tok: Tok,
    pos: usize,
}

fn tokenize(text: &str, options: ParseOptions) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit()))
        {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let int_part: String = chars[start..i].iter().collect();
            let mut value = parse_digits(&int_part);
            if i < chars.len() && chars[i] == '.' {
                if !options.decimal_as_ratio {
                    return Err(syntax(
                        pos,
                        "decimal literals are not exact; write a fraction or enable decimal-as-ratio",
                    ));
                }
                i += 1;
                let frac_start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let frac: String = chars[frac_start..i].iter().collect();
                let scale = num_traits::pow(BigInt::from(10), frac.len());
                value += Rational::new(parse_digits(&frac).to_integer(), scale);
            }
            out.push(Token {
                tok: Tok::Number(value),
                pos,
            });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                pos,
            });
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' if chars.get(i + 1) == Some(&'*') => {
                i += 1;
                Tok::Caret
            }
            '*' | '\u{00b7}' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '=' => Tok::Equals,
            other => return Err(syntax(pos, format!("unexpected character '{other}'"))),
        };
        i += 1;
        out.push(Token { tok, pos });
    }
    Ok(out)
}

fn parse_digits(s: &str) -> Rational {
    if s.is_empty() {
        return Rational::zero();
    }
    Rational::from_integer(s.parse::<BigInt>().expect("ASCII digits"))
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
    variable: Option<(String, usize)>,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.at).map(|t| &t.tok)
    }

    fn pos(&self) -> usize {
        match self.tokens.get(self.at) {
            Some(t) => t.pos,
            None => self.end,
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = acc.add(&self.term()?);
            } else if self.eat(&Tok::Minus) {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.at += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Tok::Slash) => {
                    self.at += 1;
                    let pos = self.pos();
                    let d = self.unary()?;
                    let c = match d.degree() {
                        Some(0) => d.coeff(0),
                        None => return Err(syntax(pos, "division by zero")),
                        Some(_) => {
                            return Err(syntax(pos, "division by an expression in the variable"))
                        }
                    };
                    acc = acc.scale(&(Rational::one() / c));
                }
                Some(Tok::Number(_) | Tok::Ident(_) | Tok::LParen) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        if self.eat(&Tok::Minus) {
            return Ok(self.unary()?.neg());
        }
        if self.eat(&Tok::Plus) {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.primary()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Minus) => Err(ParseError::NegativeExponent { pos }),
            Some(Tok::Number(n)) => {
                self.at += 1;
                if !n.is_integer() {
                    return Err(syntax(pos, "exponent must be a nonnegative integer"));
                }
                match u32::try_from(n.to_integer()) {
                    Ok(k) if k <= MAX_EXPONENT => Ok(base.pow(k)),
                    _ => Err(syntax(pos, format!("exponent larger than {MAX_EXPONENT}"))),
                }
            }
            Some(t) => Err(syntax(
                pos,
                format!("expected an exponent, found {}", t.describe()),
            )),
            None => Err(syntax(pos, "expected an exponent, found end of input")),
        }
    }

    fn primary(&mut self) -> Result<Polynomial, ParseError> {
        let pos = self.pos();
        let Some(tok) = self.peek().cloned() else {
            return Err(syntax(pos, "unexpected end of input"));
        };
        self.at += 1;
        match tok {
            Tok::Number(n) => Ok(Polynomial::constant(n)),
            Tok::Ident(name) => {
                match &self.variable {
                    None => self.variable = Some((name, pos)),
                    Some((first, _)) if *first == name => {}
                    Some((first, _)) => {
                        return Err(ParseError::MultipleVariables {
                            first: first.clone(),
                            second: name,
                            pos,
                        })
                    }
                }
                Ok(Polynomial::x())
            }
            Tok::LParen => {
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    let pos = self.pos();
                    return Err(syntax(pos, "expected ')'"));
                }
                Ok(inner)
            }
            other => Err(syntax(pos, format!("unexpected {}", other.describe()))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn coeffs(text: &str) -> Vec<Rational> {
        parse_polynomial(text).unwrap().polynomial.coeffs().to_vec()
    }

    fn ints(c: &[i64]) -> Vec<Rational> {
        c.iter().map(|&n| rat(n, 1)).collect()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(coeffs("x^3 - 15x - 4"), ints(&[-4, -15, 0, 1]));
        assert_eq!(
            coeffs("x^4+2x^3+3x^2+2x=81600"),
            ints(&[-81600, 2, 3, 2, 1])
        );
        assert_eq!(coeffs("(x-1)^2 * (x+2)"), ints(&[2, -3, 0, 1]));
    }

    #[test]
    fn equations_and_juxtaposition() {
        assert_eq!(coeffs("x^3 = 15x + 4"), ints(&[-4, -15, 0, 1]));
        assert_eq!(coeffs("2(x+1)(x-1)"), ints(&[-2, 0, 2]));
        assert_eq!(coeffs("x**2 - -x"), ints(&[0, 1, 1]));
        assert_eq!(coeffs("-x^2"), ints(&[0, 0, -1]));
        assert_eq!(
            coeffs("x^2/2 - 1/3"),
            vec![rat(-1, 3), rat(0, 1), rat(1, 2)]
        );
        assert_eq!(coeffs("(1/2)x"), vec![rat(0, 1), rat(1, 2)]);
    }

    #[test]
    fn variable_name() {
        let p = parse_polynomial("y^4 - 7y^2 + 6y").unwrap();
        assert_eq!(p.variable_name, "y");
        assert_eq!(p.polynomial, Polynomial::from_ints(&[0, 6, -7, 0, 1]));
        assert_eq!(parse_polynomial("12 = 3").unwrap().variable_name, "x");
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_polynomial("x + y"),
            Err(ParseError::MultipleVariables {
                first: "x".into(),
                second: "y".into(),
                pos: 4
            })
        );
        assert_eq!(
            parse_polynomial("x^-2"),
            Err(ParseError::NegativeExponent { pos: 2 })
        );
        assert_eq!(parse_polynomial("x + ").unwrap_err().position(), 4);
        assert_eq!(parse_polynomial("x $ 1").unwrap_err().position(), 2);
        assert!(matches!(
            parse_polynomial("(x + 1"),
            Err(ParseError::Syntax { pos: 6, .. })
        ));
        assert!(matches!(
            parse_polynomial("1/x"),
            Err(ParseError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_polynomial("x/0"),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_polynomial("x = 1 = 2"),
            Err(ParseError::Syntax { pos: 6, .. })
        ));
        assert!(matches!(
            parse_polynomial(""),
            Err(ParseError::Syntax { pos: 0, .. })
        ));
        assert!(matches!(
            parse_polynomial("x^100"),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn decimals() {
        assert!(matches!(
            parse_polynomial("x - 1.5"),
            Err(ParseError::Syntax { pos: 4, .. })
        ));
        let opts = ParseOptions {
            decimal_as_ratio: true,
        };
        let p = parse_polynomial_with("x - 1.25", opts).unwrap();
        assert_eq!(p.polynomial.coeffs(), &[rat(-5, 4), rat(1, 1)]);
        let p = parse_polynomial_with(".5x", opts).unwrap();
        assert_eq!(p.polynomial.coeffs(), &[rat(0, 1), rat(1, 2)]);
    }

    #[test]
    fn rendering_reparses() {
        let f = Polynomial::new(vec![rat(-3, 7), rat(0, 1), rat(-1, 1), rat(5, 2)]);
        for var in ["x", "t"] {
            let text = f.display_with(var);
            assert_eq!(parse_polynomial(&text).unwrap().polynomial, f, "{text}");
        }
    }
}
