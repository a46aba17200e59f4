//! Polynomial and field-spec text formats.
//!
//! Polynomials are either a comma-separated coefficient list, highest degree
//! first (`"1,0,-1,0"`), or an expression over `X`, `^`, `*`, `+`, `-` and
//! integer literals. Whitespace is insignificant; errors carry the byte
//! offset of the offending token.

use casas_core::arith::{
    BigPrimeField, ExtField, Field, FieldDescriptor, PrimeField, Ring, FAST_PATH_LIMIT,
};
use casas_core::{Rationals, UniPoly};
use num_bigint::{BigInt, BigUint};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("invalid field spec {spec:?}: {message}")]
    Field { spec: String, message: String },
    #[error(transparent)]
    Core(#[from] casas_core::Error),
}

fn syntax(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        offset,
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigUint),
    X,
    Caret,
    Star,
    Plus,
    Minus,
    Comma,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut k = 0;
    while k < bytes.len() {
        let c = bytes[k];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                k += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = k;
                while k < bytes.len() && bytes[k].is_ascii_digit() {
                    k += 1;
                }
                let n = text[start..k].parse::<BigUint>().expect("ascii digits");
                out.push((start, Token::Int(n)));
                continue;
            }
            b'X' | b'x' => Token::X,
            b'^' => Token::Caret,
            b'*' => Token::Star,
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b',' => Token::Comma,
            _ => {
                let ch = text[k..].chars().next().unwrap();
                return Err(syntax(k, format!("unexpected character {ch:?}")));
            }
        };
        out.push((k, tok));
        k += 1;
    }
    Ok(out)
}

/// Integer coefficients, lowest degree first.
fn parse_integer_poly(text: &str) -> Result<Vec<BigInt>, ParseError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(syntax(0, "empty polynomial"));
    }
    if tokens.iter().any(|t| t.1 == Token::Comma) {
        parse_list(&tokens, text.len())
    } else {
        Parser {
            tokens: &tokens,
            pos: 0,
            end: text.len(),
        }
        .expression()
    }
}

fn parse_list(tokens: &[(usize, Token)], end: usize) -> Result<Vec<BigInt>, ParseError> {
    let mut coeffs = Vec::new();
    let mut k = 0;
    loop {
        let negative = matches!(tokens.get(k), Some((_, Token::Minus)));
        if negative || matches!(tokens.get(k), Some((_, Token::Plus))) {
            k += 1;
        }
        match tokens.get(k) {
            Some((_, Token::Int(n))) => {
                let n = BigInt::from(n.clone());
                coeffs.push(if negative { -n } else { n });
                k += 1;
            }
            Some((offset, _)) => return Err(syntax(*offset, "expected an integer coefficient")),
            None => return Err(syntax(end, "expected an integer coefficient")),
        }
        match tokens.get(k) {
            None => break,
            Some((_, Token::Comma)) => k += 1,
            Some((offset, _)) => return Err(syntax(*offset, "expected ','")),
        }
    }
    coeffs.reverse();
    Ok(coeffs)
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn expression(&mut self) -> Result<Vec<BigInt>, ParseError> {
        let mut acc: Vec<BigInt> = Vec::new();
        let mut sign = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                -1
            }
            Some(Token::Plus) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let (c, e) = self.term()?;
            if acc.len() <= e {
                acc.resize(e + 1, BigInt::from(0));
            }
            acc[e] += c * sign;
            sign = match self.peek() {
                None => break,
                Some(Token::Plus) => 1,
                Some(Token::Minus) => -1,
                Some(_) => return Err(syntax(self.offset(), "expected '+' or '-'")),
            };
            self.pos += 1;
        }
        Ok(acc)
    }

    /// `factor ('*' factor)*` as coefficient and exponent.
    fn term(&mut self) -> Result<(BigInt, usize), ParseError> {
        let (mut c, mut e) = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            let (c2, e2) = self.factor()?;
            c *= c2;
            e += e2;
        }
        Ok((c, e))
    }

    fn factor(&mut self) -> Result<(BigInt, usize), ParseError> {
        let offset = self.offset();
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                Ok((BigInt::from(n), 0))
            }
            Some(Token::X) => {
                self.pos += 1;
                if self.peek() != Some(&Token::Caret) {
                    return Ok((BigInt::from(1), 1));
                }
                self.pos += 1;
                let at = self.offset();
                match self.peek().cloned() {
                    Some(Token::Int(n)) => {
                        self.pos += 1;
                        let e = usize::try_from(&n)
                            .ok()
                            .filter(|&e| e <= 1 << 20)
                            .ok_or_else(|| syntax(at, "exponent too large"))?;
                        Ok((BigInt::from(1), e))
                    }
                    _ => Err(syntax(at, "expected an exponent")),
                }
            }
            _ => Err(syntax(offset, "expected an integer or X")),
        }
    }
}

/// Parses `text` and reduces its integer coefficients into `field`.
pub fn parse_poly<F: Ring>(text: &str, field: &F) -> Result<UniPoly<F>, ParseError> {
    let coeffs = parse_integer_poly(text)?;
    Ok(UniPoly::new(
        field.clone(),
        coeffs.iter().map(|c| field.from_bigint(c)).collect(),
    ))
}

/// A coefficient field chosen at run time.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyField {
    Rationals(Rationals),
    Prime(PrimeField),
    BigPrime(BigPrimeField),
    Extension(ExtField),
}

impl AnyField {
    pub fn descriptor(&self) -> FieldDescriptor {
        match self {
            AnyField::Rationals(f) => f.descriptor(),
            AnyField::Prime(f) => f.descriptor(),
            AnyField::BigPrime(f) => f.descriptor(),
            AnyField::Extension(f) => f.descriptor(),
        }
    }
}

/// `q`, `p=<prime>`, or `p=<prime>,m=<degree>[,mod=<poly>]`. The modulus is
/// an expression over `X` (commas separate spec entries).
pub fn parse_field(spec: &str) -> Result<AnyField, ParseError> {
    let bad = |message: &str| ParseError::Field {
        spec: spec.to_string(),
        message: message.to_string(),
    };
    let trimmed = spec.trim();
    if trimmed.eq_ignore_ascii_case("q") {
        return Ok(AnyField::Rationals(Rationals::new()));
    }
    let (mut p, mut m, mut modulus) = (None, None, None);
    for part in trimmed.split(',') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| bad("expected key=value"))?;
        let value = value.trim();
        match key.trim() {
            "p" if p.is_none() => {
                p = Some(
                    value
                        .parse::<BigUint>()
                        .map_err(|_| bad("p must be a positive integer"))?,
                )
            }
            "m" if m.is_none() => {
                m = Some(
                    value
                        .parse::<usize>()
                        .map_err(|_| bad("m must be a positive integer"))?,
                )
            }
            "mod" if modulus.is_none() => modulus = Some(value.to_string()),
            _ => return Err(bad("unknown or repeated key")),
        }
    }
    let p = p.ok_or_else(|| bad("missing p"))?;
    match (m, modulus) {
        (None, Some(_)) => Err(bad("mod requires m")),
        (None, None) | (Some(1), None) => match u64::try_from(&p) {
            Ok(small) if small < FAST_PATH_LIMIT => Ok(AnyField::Prime(PrimeField::new(small)?)),
            _ => Ok(AnyField::BigPrime(BigPrimeField::new(p)?)),
        },
        (Some(m), modulus) => {
            let small = u64::try_from(&p).map_err(|_| bad("extension fields need p below 2^63"))?;
            let base = PrimeField::new(small)?;
            let coeffs = match modulus {
                Some(text) => {
                    let poly = parse_poly(&text, &base)?;
                    Some(
                        poly.coeffs()
                            .iter()
                            .map(|c| base.to_u64(*c))
                            .collect::<Vec<_>>(),
                    )
                }
                None => None,
            };
            Ok(AnyField::Extension(ExtField::new(
                small,
                m,
                coeffs.as_deref(),
            )?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use casas_core::Integers;

    fn z(text: &str) -> Result<String, ParseError> {
        parse_poly(text, &Integers::new()).map(|p| p.to_string())
    }

    #[test]
    fn expressions_and_lists() {
        assert_eq!(z("1,0,-1,0").unwrap(), "X^3 - X");
        assert_eq!(z("X^3 + X^2").unwrap(), "X^3 + X^2");
        assert_eq!(z(" - x^2 * 3 + 2*X*X - 7").unwrap(), "-X^2 - 7");
        assert_eq!(z("5").unwrap(), "5");
        assert_eq!(z("X^2 - X^2").unwrap(), "0");
    }

    #[test]
    fn error_offsets() {
        assert_eq!(
            z("X^2++1").unwrap_err(),
            syntax(4, "expected an integer or X")
        );
        assert!(matches!(z(""), Err(ParseError::Syntax { offset: 0, .. })));
        assert!(matches!(z("X^"), Err(ParseError::Syntax { offset: 2, .. })));
        assert!(matches!(
            z("X 2"),
            Err(ParseError::Syntax { offset: 2, .. })
        ));
        assert!(matches!(
            z("X^2 + y"),
            Err(ParseError::Syntax { offset: 6, .. })
        ));
        assert!(matches!(
            z("1,,2"),
            Err(ParseError::Syntax { offset: 2, .. })
        ));
    }

    #[test]
    fn giant_prime_quadrinomial() {
        let AnyField::Prime(f) = parse_field("p=7390044713023799").unwrap() else {
            panic!()
        };
        let p = parse_poly("X^6+3144481702696843*X^4+X^3+2707944513497181*X^2", &f).unwrap();
        assert_eq!(
            p.to_string(),
            "X^6 + 3144481702696843*X^4 + X^3 + 2707944513497181*X^2"
        );
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(parse_poly("X - 1", &f5).unwrap().to_string(), "X + 4");
    }

    #[test]
    fn field_specs() {
        assert!(matches!(parse_field("q").unwrap(), AnyField::Rationals(_)));
        assert!(matches!(parse_field("p=2").unwrap(), AnyField::Prime(_)));
        let big = parse_field("p=170141183460469231731687303715884105727").unwrap();
        assert!(matches!(big, AnyField::BigPrime(_)));
        let AnyField::Extension(f) = parse_field("p=2,m=2,mod=X^2+X+1").unwrap() else {
            panic!()
        };
        assert_eq!(f.modulus(), vec![1, 1, 1]);
        assert!(matches!(
            parse_field("p=3,m=2").unwrap(),
            AnyField::Extension(_)
        ));
        assert!(parse_field("p=4").is_err());
        assert!(parse_field("p=2,m=2,mod=X^2+1").is_err());
        assert!(parse_field("r=5").is_err());
        assert!(parse_field("p=5,mod=X+1").is_err());
    }
}
