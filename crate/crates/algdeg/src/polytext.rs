//! Human-readable and JSON wire formats for integer polynomials.
//!
//! The text form accepts terms in any order, with `x` or `X`, an optional `*`
//! between coefficient and variable, and repeated exponents (coefficients
//! accumulate). `Display` on `IntPoly` already writes the canonical
//! descending form, so `parse` and `to_string` round-trip.
//!
//! The JSON form is an array of decimal strings, ascending by exponent, so
//! coefficients never lose precision in transit regardless of their size.

use crate::intpoly::IntPoly;
use num_bigint::BigInt;
use num_traits::Zero;
use std::str::FromStr;

/// Largest accepted exponent in polynomial text and JSON input. Generous for
/// any graph on up to 64 vertices while bounding memory on hostile input.
pub const MAX_EXPONENT: u32 = 65_536;

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum PolyTextError {
    #[error("empty polynomial text")]
    Empty,
    #[error("unexpected character at byte {0}")]
    UnexpectedChar(usize),
    #[error("malformed exponent at byte {0}")]
    BadExponent(usize),
    #[error("exponent at byte {pos} exceeds the cap of {cap}")]
    ExponentTooLarge { pos: usize, cap: u32 },
    #[error("invalid coefficient string {0:?}")]
    BadCoefficient(String),
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Scanner { bytes: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start)
            .then(|| std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits"))
    }
}

/// Parse polynomial text such as `X^5 - 10X^3 - 20X^2 - 15X - 4` or
/// `-4 - 15x + 3*x^2 + x^2`.
pub fn parse_poly(s: &str) -> Result<IntPoly, PolyTextError> {
    let mut sc = Scanner::new(s);
    let mut acc: Vec<BigInt> = Vec::new();
    let mut any_term = false;
    loop {
        sc.skip_ws();
        let Some(b) = sc.peek() else { break };
        // Sign (required between terms, optional before the first).
        let negative = match b {
            b'+' => {
                sc.bump();
                false
            }
            b'-' => {
                sc.bump();
                true
            }
            _ if any_term => return Err(PolyTextError::UnexpectedChar(sc.pos)),
            _ => false,
        };
        sc.skip_ws();
        let term_pos = sc.pos;
        let coeff_digits = sc.digits();
        let mut coeff = match coeff_digits {
            Some(d) => BigInt::from_str(d).expect("digit run"),
            None => BigInt::from(1),
        };
        if negative {
            coeff = -coeff;
        }
        sc.skip_ws();
        let starred = coeff_digits.is_some() && sc.peek() == Some(b'*');
        if starred {
            sc.bump();
            sc.skip_ws();
        }
        let has_var = matches!(sc.peek(), Some(b'x') | Some(b'X'));
        if !has_var {
            if starred {
                return Err(PolyTextError::UnexpectedChar(sc.pos));
            }
            if coeff_digits.is_none() {
                return Err(PolyTextError::UnexpectedChar(term_pos));
            }
            push_term(&mut acc, 0, coeff)?;
            any_term = true;
            continue;
        }
        sc.bump();
        sc.skip_ws();
        let exponent = if sc.peek() == Some(b'^') {
            sc.bump();
            sc.skip_ws();
            let exp_pos = sc.pos;
            let Some(d) = sc.digits() else {
                return Err(PolyTextError::BadExponent(exp_pos));
            };
            let e: u64 = d
                .parse()
                .map_err(|_| PolyTextError::ExponentTooLarge { pos: exp_pos, cap: MAX_EXPONENT })?;
            if e > MAX_EXPONENT as u64 {
                return Err(PolyTextError::ExponentTooLarge { pos: exp_pos, cap: MAX_EXPONENT });
            }
            e as usize
        } else {
            1
        };
        push_term(&mut acc, exponent, coeff)?;
        any_term = true;
    }
    if !any_term {
        return Err(PolyTextError::Empty);
    }
    Ok(IntPoly::from_coeffs(acc))
}

fn push_term(acc: &mut Vec<BigInt>, exp: usize, coeff: BigInt) -> Result<(), PolyTextError> {
    if acc.len() <= exp {
        acc.resize_with(exp + 1, BigInt::zero);
    }
    acc[exp] += coeff;
    Ok(())
}

impl FromStr for IntPoly {
    type Err = PolyTextError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

/// Canonical `numerator/denominator` text for an exact rational; the
/// denominator is always present, so the form round-trips unambiguously.
pub fn rational_string(r: &num_rational::BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Ascending coefficients as decimal strings; the zero polynomial is `["0"]`.
pub fn poly_to_json_coeffs(p: &IntPoly) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".to_owned()];
    }
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

/// Parse ascending decimal-string coefficients. Trailing zero entries are
/// tolerated and normalized away; an empty array is rejected.
pub fn poly_from_json_coeffs(strings: &[String]) -> Result<IntPoly, PolyTextError> {
    if strings.is_empty() {
        return Err(PolyTextError::Empty);
    }
    let mut coeffs = Vec::with_capacity(strings.len());
    for s in strings {
        if strings.len() > MAX_EXPONENT as usize + 1 {
            return Err(PolyTextError::ExponentTooLarge { pos: 0, cap: MAX_EXPONENT });
        }
        let c = BigInt::from_str(s.trim())
            .map_err(|_| PolyTextError::BadCoefficient(s.clone()))?;
        coeffs.push(c);
    }
    Ok(IntPoly::from_coeffs(coeffs))
}
