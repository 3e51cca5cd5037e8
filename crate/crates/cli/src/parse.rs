//! Text parsers for command-line arguments: univariate integer
//! polynomials in the variable x, and inclusive integer ranges.
//!
//! The polynomial grammar is the usual calculator notation, sign
//! handling included:
//!
//! ```text
//! poly := ws sign? term (sign term)* ws
//! term := integer (ws '*'? ws power)? | power
//! power := 'x' ('^' integer)?
//! ```
//!
//! Every error carries the byte offset where parsing stopped so shell
//! users can see exactly which character was rejected.

use monogen_core::{Error, IntPoly, Result};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// Reports a syntax error at `pos` (a byte offset into the input).
fn syntax(pos: usize, what: impl std::fmt::Display) -> Error {
    Error::Domain(format!("syntax error at byte {pos}: {what}"))
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(input: &'a str) -> Self {
        Scanner {
            bytes: input.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
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

    /// Consumes a run of decimal digits.
    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(match self.peek() {
                Some(b) => syntax(self.pos, format!("expected digits, found '{}'", b as char)),
                None => syntax(self.pos, "expected digits, found end of input"),
            });
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit runs parse as integers"))
    }

    /// Parses one term after its sign: coefficient, variable power, or
    /// both.  Returns (coefficient, exponent).
    fn term(&mut self) -> Result<(BigInt, usize)> {
        let coeff = if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            let c = self.integer()?;
            self.skip_ws();
            // An explicit multiplication sign must be followed by x.
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                if self.peek() != Some(b'x') {
                    return Err(syntax(self.pos, "expected 'x' after '*'"));
                }
            }
            Some(c)
        } else {
            None
        };

        if self.peek() == Some(b'x') {
            self.pos += 1;
            self.skip_ws();
            let exp = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.skip_ws();
                let at = self.pos;
                let e = self.integer()?;
                // Cap well below anything a dense coefficient vector
                // could hold; rejects absurd exponents without allocating.
                e.to_usize()
                    .filter(|&e| e <= 100_000)
                    .ok_or_else(|| syntax(at, "exponent out of range"))?
            } else {
                1
            };
            Ok((coeff.unwrap_or_else(|| BigInt::from(1)), exp))
        } else {
            match coeff {
                Some(c) => Ok((c, 0)),
                None => Err(match self.peek() {
                    Some(b) => syntax(
                        self.pos,
                        format!("expected a coefficient or 'x', found '{}'", b as char),
                    ),
                    None => syntax(self.pos, "expected a term, found end of input"),
                }),
            }
        }
    }
}

/// Parses calculator notation like `x^12 + 44x^3 + 36*x + 33` or
/// `-2x^2 - 5` into an integer polynomial.  Repeated powers are
/// summed.
pub fn parse_poly(input: &str) -> Result<IntPoly> {
    let mut sc = Scanner::new(input);
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut add = |c: BigInt, e: usize| {
        if coeffs.len() <= e {
            coeffs.resize(e + 1, BigInt::zero());
        }
        coeffs[e] += c;
    };

    sc.skip_ws();
    if sc.peek().is_none() {
        return Err(syntax(0, "empty polynomial"));
    }
    // Leading sign is optional; after the first term each sign is the
    // separator for the next.
    let mut negate = match sc.peek() {
        Some(b'-') => {
            sc.pos += 1;
            true
        }
        Some(b'+') => {
            sc.pos += 1;
            false
        }
        _ => false,
    };
    loop {
        sc.skip_ws();
        let (c, e) = sc.term()?;
        add(if negate { -c } else { c }, e);
        sc.skip_ws();
        match sc.bump() {
            None => break,
            Some(b'+') => negate = false,
            Some(b'-') => negate = true,
            Some(b) => {
                return Err(syntax(
                    sc.pos - 1,
                    format!("expected '+', '-', or end of input, found '{}'", b as char),
                ))
            }
        }
    }
    Ok(IntPoly::new(coeffs))
}

/// Parses `lo..hi` or `lo..=hi` as an inclusive integer range.
pub fn parse_range(input: &str) -> Result<(i64, i64)> {
    let (lo, hi) = input
        .split_once("..")
        .ok_or_else(|| Error::Domain(format!("range '{input}' must look like lo..hi")))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let parse = |s: &str, side| {
        s.trim().parse::<i64>().map_err(|_| {
            Error::Domain(format!("range '{input}' has a non-integer {side} endpoint"))
        })
    };
    let (lo, hi) = (parse(lo, "lower")?, parse(hi, "upper")?);
    if lo > hi {
        return Err(Error::Domain(format!("range '{input}' is empty")));
    }
    Ok((lo, hi))
}

/// Parses a comma-separated degree list like `6,9,12`.
pub fn parse_degrees(input: &str) -> Result<Vec<u32>> {
    input
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| Error::Domain(format!("'{part}' is not a degree")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs.iter().copied())
    }

    #[test]
    fn accepts_calculator_notation() {
        assert_eq!(parse_poly("x^2+3x+1").unwrap(), poly(&[1, 3, 1]));
        assert_eq!(parse_poly("x^12 + 44x^3 + 36*x + 33").unwrap(), {
            let mut v = vec![33, 36, 0, 44, 0, 0, 0, 0, 0, 0, 0, 0, 1];
            v.truncate(13);
            poly(&v)
        });
        assert_eq!(parse_poly("-5").unwrap(), poly(&[-5]));
        assert_eq!(parse_poly("x").unwrap(), poly(&[0, 1]));
        assert_eq!(parse_poly("-x + 1").unwrap(), poly(&[1, -1]));
        assert_eq!(parse_poly("2 * x ^ 3").unwrap(), poly(&[0, 0, 0, 2]));
        assert_eq!(parse_poly("x + x").unwrap(), poly(&[0, 2]));
        assert_eq!(parse_poly("x^2 - x^2").unwrap(), IntPoly::zero());
    }

    #[test]
    fn rejects_with_byte_offsets() {
        let err = parse_poly("x^2 + y").unwrap_err().to_string();
        assert!(err.contains("byte 6"), "{err}");
        let err = parse_poly("x^").unwrap_err().to_string();
        assert!(err.contains("byte 2"), "{err}");
        let err = parse_poly("3 *").unwrap_err().to_string();
        assert!(err.contains("byte 3"), "{err}");
        let err = parse_poly("").unwrap_err().to_string();
        assert!(err.contains("byte 0"), "{err}");
        // "x^2 2": the stray digit sits at byte 4.
        let err = parse_poly("x^2 2").unwrap_err().to_string();
        assert!(err.contains("byte 4"), "{err}");
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("-20..20").unwrap(), (-20, 20));
        assert_eq!(parse_range("-20..=20").unwrap(), (-20, 20));
        assert_eq!(parse_range("3..3").unwrap(), (3, 3));
        assert!(parse_range("5..1").is_err());
        assert!(parse_range("1-5").is_err());
    }

    #[test]
    fn degree_lists() {
        assert_eq!(parse_degrees("6,9, 12").unwrap(), vec![6, 9, 12]);
        assert!(parse_degrees("6,x").is_err());
    }
}
