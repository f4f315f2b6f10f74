//! Text formats: polynomial expressions, shapes and sequence files.
//!
//! Polynomials follow
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := [int] ('*'? factor)*
//! factor := var ('^' '-'? int)?
//! ```
//!
//! with `var` one of `u1`, `u2` (bivariate) or `t` (univariate). Whitespace
//! is ignored. Shapes are `(a,b);(c,d);...` and sequence files hold one
//! `j: (a,b);(c,d);...` tuple per line.

use crate::error::{Error, Result};
use crate::exponent::{ExponentVec, COORD_LIMIT};
use crate::field::{Field, FpPoly};
use crate::laurent::LaurentPoly;
use crate::mixing::SequenceEntry;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Vars {
    Bivariate,
    Univariate,
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    /// Line and column of `chars[0]` in the original text.
    origin: (usize, usize),
}

impl Cursor {
    fn new(text: &str, origin: (usize, usize)) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
            origin,
        }
    }

    fn location(&self, pos: usize) -> (usize, usize) {
        let (mut line, mut col) = self.origin;
        for &c in &self.chars[..pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        (line, col)
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> Error {
        let (line, column) = self.location(pos);
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        self.error_at(self.pos, message)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(match self.peek() {
                Some(got) => self.error(format!("expected '{c}', found '{got}'")),
                None => self.error(format!("expected '{c}', found end of input")),
            })
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    /// Digits at the cursor, with no sign; `None` if there are none.
    fn digits(&mut self) -> Option<(usize, &[char])> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| (start, &self.chars[start..self.pos]))
    }

    /// Nonnegative integer bounded by `limit`.
    fn bounded(&mut self, limit: i64, what: &str) -> Result<i64> {
        let Some((start, ds)) = self.digits() else {
            return Err(self.error(format!("expected {what}")));
        };
        let mut v: i64 = 0;
        for &d in ds {
            v = v * 10 + (d as i64 - '0' as i64);
            if v > limit {
                return Err(self.error_at(start, format!("{what} exceeds {limit}")));
            }
        }
        Ok(v)
    }

    /// Signed integer bounded by `limit` in absolute value.
    fn signed(&mut self, limit: i64, what: &str) -> Result<i64> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let v = self.bounded(limit, what)?;
        Ok(if neg { -v } else { v })
    }
}

struct Term {
    coeff: u32,
    exp: ExponentVec,
}

fn parse_expr(text: &str, field: Field, vars: Vars) -> Result<Vec<Term>> {
    let mut cur = Cursor::new(text, (1, 1));
    let mut terms = Vec::new();
    let mut negate = if cur.eat('-') {
        true
    } else {
        cur.eat('+');
        false
    };
    loop {
        let mut term = parse_term(&mut cur, field, vars)?;
        if negate {
            term.coeff = field.neg(term.coeff);
        }
        terms.push(term);
        if cur.eat('+') {
            negate = false;
        } else if cur.eat('-') {
            negate = true;
        } else if cur.at_end() {
            return Ok(terms);
        } else {
            let c = cur.peek().unwrap_or(' ');
            return Err(cur.error(format!("unexpected '{c}'")));
        }
    }
}

fn parse_term(cur: &mut Cursor, field: Field, vars: Vars) -> Result<Term> {
    let mut coeff = 1;
    let mut seen = false;
    if let Some((_, ds)) = cur.digits() {
        let p = field.p() as u64;
        coeff = ds
            .iter()
            .fold(0u64, |acc, &d| (acc * 10 + (d as u64 - '0' as u64)) % p) as u32;
        seen = true;
    }
    let mut exp = ExponentVec::ZERO;
    loop {
        let star = cur.eat('*');
        match cur.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                let (axis, at) = parse_var(cur, vars)?;
                let e = if cur.eat('^') {
                    let neg = cur.eat('-');
                    if neg && vars == Vars::Univariate {
                        return Err(cur.error_at(cur.pos - 1, "negative exponent in a polynomial in t"));
                    }
                    let v = cur.bounded(COORD_LIMIT, "exponent")?;
                    if neg {
                        -v
                    } else {
                        v
                    }
                } else {
                    1
                };
                exp = match axis {
                    0 => exp + ExponentVec::new(e, 0),
                    _ => exp + ExponentVec::new(0, e),
                };
                if !exp.within_limit() {
                    return Err(cur.error_at(at, "exponent exceeds 1048576"));
                }
                seen = true;
            }
            _ if star => return Err(cur.error("expected a variable after '*'")),
            _ => break,
        }
    }
    if !seen {
        return Err(match cur.peek() {
            Some(c) => cur.error(format!("expected a term, found '{c}'")),
            None => cur.error("expected a term, found end of input"),
        });
    }
    Ok(Term { coeff, exp })
}

/// Returns the axis (0 for `u1`/`t`, 1 for `u2`) and the start position.
fn parse_var(cur: &mut Cursor, vars: Vars) -> Result<(usize, usize)> {
    cur.skip_ws();
    let start = cur.pos;
    let at = |i: usize| cur.chars.get(i).copied().unwrap_or(' ');
    let mut end = start + 1;
    if at(start) == 'u' && at(end).is_ascii_digit() {
        while at(end).is_ascii_digit() {
            end += 1;
        }
    } else {
        while at(end).is_ascii_alphabetic() {
            end += 1;
        }
    }
    let name: String = cur.chars[start..end].iter().collect();
    let axis = match (name.as_str(), vars) {
        ("u1", Vars::Bivariate) | ("t", Vars::Univariate) => Some(0),
        ("u2", Vars::Bivariate) => Some(1),
        _ => None,
    };
    match axis {
        Some(a) => {
            cur.pos = end;
            Ok((a, start))
        }
        None => Err(cur.error_at(start, format!("unknown variable '{name}'"))),
    }
}

/// Parses a Laurent polynomial in `u1`, `u2` over `F_p`.
pub fn parse_poly(text: &str, field: Field) -> Result<LaurentPoly> {
    let terms = parse_expr(text, field, Vars::Bivariate)?;
    Ok(LaurentPoly::from_terms(
        field,
        terms.into_iter().map(|t| (t.exp, t.coeff as i64)),
    ))
}

/// Parses a polynomial in `t` over `F_p`.
pub fn parse_univariate(text: &str, field: Field) -> Result<FpPoly> {
    let terms = parse_expr(text, field, Vars::Univariate)?;
    let deg = terms.iter().map(|t| t.exp.e1 as usize).max().unwrap_or(0);
    let mut coeffs = vec![0u32; deg + 1];
    for t in terms {
        let i = t.exp.e1 as usize;
        coeffs[i] = field.add(coeffs[i], t.coeff);
    }
    Ok(FpPoly::from_residues(field, coeffs))
}

fn parse_points(cur: &mut Cursor) -> Result<Vec<ExponentVec>> {
    let mut points = Vec::new();
    loop {
        cur.expect('(')?;
        let a = cur.signed(COORD_LIMIT, "coordinate")?;
        cur.expect(',')?;
        let b = cur.signed(COORD_LIMIT, "coordinate")?;
        cur.expect(')')?;
        points.push(ExponentVec::new(a, b));
        if !cur.eat(';') || cur.at_end() {
            break;
        }
    }
    if !cur.at_end() {
        let c = cur.peek().unwrap_or(' ');
        return Err(cur.error(format!("unexpected '{c}' after point list")));
    }
    Ok(points)
}

/// Parses `(a,b);(c,d);...`; a trailing `;` is allowed.
pub fn parse_shape(text: &str) -> Result<Vec<ExponentVec>> {
    parse_points(&mut Cursor::new(text, (1, 1)))
}

/// Parses one `j: (a,b);(c,d);...` tuple per line. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_sequence_file(text: &str) -> Result<Vec<SequenceEntry>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut cur = Cursor::new(line, (i + 1, 1));
        let j = cur.signed(i64::MAX / 2, "index")?;
        cur.expect(':')?;
        let points = parse_points(&mut cur)?;
        out.push(SequenceEntry { j, points });
    }
    if out.is_empty() {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "no tuples".into(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn triangle_polynomial() {
        let g = parse_poly("u2 + u1 + u1^3*u2", f(2)).unwrap();
        let expected = LaurentPoly::from_terms(
            f(2),
            [((0, 1), 1), ((1, 0), 1), ((3, 1), 1)].map(|(e, c)| (e.into(), c)),
        );
        assert_eq!(g, expected);
        assert_eq!(parse_poly("u2+u1+u1^3u2", f(2)).unwrap(), expected);
    }

    #[test]
    fn cancellation_and_reduction() {
        assert!(parse_poly("u1 + u1", f(2)).unwrap().is_zero());
        assert_eq!(
            parse_poly("3u1^-2", f(2)).unwrap(),
            LaurentPoly::monomial(f(2), (-2, 0).into(), 1)
        );
        assert_eq!(
            parse_poly("-u1 + 2", f(5)).unwrap(),
            LaurentPoly::from_terms(f(5), [((0, 0).into(), 2), ((1, 0).into(), 4)])
        );
    }

    #[test]
    fn canonical_strings_round_trip() {
        for s in ["1+u1+u2+u2^2", "3*u2^-1 + u1^3*u2", "0", "u1^-4*u2^7 - 2"] {
            let g = parse_poly(s, f(7)).unwrap();
            assert_eq!(parse_poly(&g.to_string(), f(7)).unwrap(), g);
        }
    }

    #[test]
    fn syntax_errors_have_positions() {
        let err = parse_poly("1 + u3", f(2)).unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 1,
                column: 5,
                message: "unknown variable 'u3'".into()
            }
        );
        assert!(matches!(parse_poly("1 +", f(2)), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("u1^", f(2)), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("u1 ** u2", f(2)), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("t", f(2)), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("u1^2000000", f(2)), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("", f(2)), Err(Error::Parse { .. })));
    }

    #[test]
    fn univariate() {
        assert_eq!(
            parse_univariate("1 + t + t^2", f(2)).unwrap(),
            FpPoly::from_coeffs(f(2), &[1, 1, 1])
        );
        assert!(parse_univariate("t^-1", f(2)).is_err());
        assert!(parse_univariate("u1", f(2)).is_err());
    }

    #[test]
    fn shapes() {
        let s = parse_shape("(0,0); (1,0);(0,-2);").unwrap();
        assert_eq!(s, vec![(0, 0).into(), (1, 0).into(), (0, -2).into()]);
        assert!(parse_shape("(0,0);(1,0").is_err());
        assert!(parse_shape("").is_err());
        assert!(parse_shape("(0,0) x").is_err());
    }

    #[test]
    fn sequence_files() {
        let entries = parse_sequence_file("# family\n1: (0,0);(1,0)\n\n2: (0,0);(2,0)\n").unwrap();
        assert_eq!(entries.len(), 2);
        assert_eq!(entries[1].j, 2);
        let err = parse_sequence_file("1: (0,0)\n2 (0,0)").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }
}
