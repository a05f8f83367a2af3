//! The line-oriented system format and its printers.
//!
//! ```text
//! # comment
//! field 5
//! vars x1 x2 x3
//! x1^2 - x2
//! x2^3 - x3
//! ```
//!
//! A `field <p>` line, a `vars <names...>` line, then one polynomial per
//! line. Polynomials are sums of terms; a term is an optional integer
//! coefficient and variable powers, `*` optional between factors, `^` for
//! exponents. Printing canonicalizes (coefficients in [0, p), terms in
//! storage order), after which parse and print are mutually inverse. Point
//! lists and polynomial matrices reuse the same header.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::minrank::{GradingKind, PolyMatrix};
use crate::monomial::Monomial;
use crate::poly::{Ideal, Polynomial, Ring, RingRef};
use crate::solver::VarietyPoint;

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(idx) => &line[..idx],
        None => line,
    }
    .trim()
}

struct Header {
    ring: RingRef,
    /// index of the first body line
    body_start: usize,
}

fn parse_header(text: &str) -> Result<Header> {
    let mut lines = text.lines().enumerate();
    let mut field: Option<PrimeField> = None;
    let mut body_start = 0;
    let mut vars: Option<Vec<String>> = None;
    for (idx, raw) in &mut lines {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let mut words = line.split_whitespace();
        match (field.is_none(), words.next()) {
            (true, Some("field")) => {
                let value = words.next().ok_or(Error::Parse {
                    line: lineno,
                    msg: "expected `field <p>`".into(),
                })?;
                let p: u64 = value.parse().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("bad modulus `{value}`"),
                })?;
                field = Some(PrimeField::new(p)?);
            }
            (true, _) => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "expected `field <p>` first".into(),
                })
            }
            (false, Some("vars")) => {
                let names: Vec<String> = words.map(|w| w.to_string()).collect();
                if names.is_empty() {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "expected `vars <names...>`".into(),
                    });
                }
                vars = Some(names);
                body_start = idx + 1;
                break;
            }
            (false, _) => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "expected `vars <names...>` after the field line".into(),
                })
            }
        }
    }
    let (Some(field), Some(vars)) = (field, vars) else {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            msg: "missing `field`/`vars` header".into(),
        });
    };
    Ok(Header {
        ring: Ring::new(field, vars)?,
        body_start,
    })
}

/// Parse a full system file into an ideal, generators in file order.
pub fn parse_system(text: &str) -> Result<Ideal> {
    let header = parse_header(text)?;
    let mut gens = Vec::new();
    for (idx, raw) in text.lines().enumerate().skip(header.body_start) {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let poly = parse_polynomial(line, &header.ring, idx + 1)?;
        if poly.is_zero() {
            return Err(Error::Parse {
                line: idx + 1,
                msg: "polynomial is zero".into(),
            });
        }
        gens.push(poly);
    }
    if gens.is_empty() {
        return Err(Error::EmptySystem);
    }
    Ideal::new(header.ring, gens)
}

/// Parse one polynomial expression in the given ring.
pub fn parse_polynomial(text: &str, ring: &RingRef, lineno: usize) -> Result<Polynomial> {
    let tokens = tokenize(text, lineno)?;
    let n = ring.num_vars();
    let field = *ring.field();
    let mut terms: Vec<(Monomial, u64)> = Vec::new();

    let mut pos = 0usize;
    let mut sign_negative = false;
    // leading sign
    if let Some(Token::Plus) = tokens.get(pos) {
        pos += 1;
    } else if let Some(Token::Minus) = tokens.get(pos) {
        sign_negative = true;
        pos += 1;
    }
    loop {
        // one term: factors until +/- or end
        let mut coeff: u64 = 1;
        let mut exps = vec![0u32; n];
        let mut saw_factor = false;
        loop {
            match tokens.get(pos) {
                Some(Token::Integer(v)) => {
                    pos += 1;
                    let mut value = field.reduce(*v);
                    if let Some(Token::Caret) = tokens.get(pos) {
                        let e = expect_exponent(&tokens, &mut pos, lineno)?;
                        value = field.pow(value, e as u64);
                    }
                    coeff = field.mul(coeff, value);
                    saw_factor = true;
                }
                Some(Token::Ident(name)) => {
                    let Some(var) = ring.var_index(name) else {
                        return Err(Error::UnknownVariable {
                            line: lineno,
                            name: name.clone(),
                        });
                    };
                    pos += 1;
                    let e = if let Some(Token::Caret) = tokens.get(pos) {
                        expect_exponent(&tokens, &mut pos, lineno)?
                    } else {
                        1
                    };
                    exps[var] = exps[var].checked_add(e).ok_or(Error::Parse {
                        line: lineno,
                        msg: "exponent too large".into(),
                    })?;
                    saw_factor = true;
                }
                Some(Token::Star) => {
                    pos += 1;
                }
                _ => break,
            }
        }
        if !saw_factor {
            return Err(Error::Parse {
                line: lineno,
                msg: "empty term".into(),
            });
        }
        let coeff = if sign_negative { field.neg(coeff) } else { coeff };
        terms.push((Monomial::new(exps), coeff));

        match tokens.get(pos) {
            None => break,
            Some(Token::Plus) => {
                sign_negative = false;
                pos += 1;
            }
            Some(Token::Minus) => {
                sign_negative = true;
                pos += 1;
            }
            Some(t) => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("unexpected token {t:?}"),
                })
            }
        }
    }
    Ok(Polynomial::from_terms(ring.clone(), terms))
}

fn expect_exponent(tokens: &[Token], pos: &mut usize, lineno: usize) -> Result<u32> {
    *pos += 1; // consume caret
    match tokens.get(*pos) {
        Some(Token::Integer(v)) => {
            *pos += 1;
            u32::try_from(*v).map_err(|_| Error::Parse {
                line: lineno,
                msg: "exponent too large".into(),
            })
        }
        _ => Err(Error::Parse {
            line: lineno,
            msg: "expected an integer exponent after `^`".into(),
        }),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Integer(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(text: &str, lineno: usize) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '0'..='9' => {
                let mut value: u64 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d as u64))
                        .ok_or(Error::Parse {
                            line: lineno,
                            msg: "integer literal too large".into(),
                        })?;
                    chars.next();
                }
                out.push(Token::Integer(value));
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' {
                        name.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(name));
            }
            other => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

/// Canonical text for a system file; `parse_system` inverts it.
pub fn print_system(ideal: &Ideal) -> String {
    let ring = ideal.ring();
    let mut out = String::new();
    out.push_str(&format!("field {}\n", ring.field().modulus()));
    out.push_str(&format!("vars {}\n", ring.var_names().join(" ")));
    for g in ideal.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

/// Points file: the usual header, then one line of coordinates per point.
pub fn parse_points(text: &str) -> Result<(RingRef, Vec<VarietyPoint>)> {
    let header = parse_header(text)?;
    let n = header.ring.num_vars();
    let field = *header.ring.field();
    let mut points = Vec::new();
    for (idx, raw) in text.lines().enumerate().skip(header.body_start) {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let coords: Vec<u64> = line
            .split_whitespace()
            .map(|w| {
                w.parse::<i64>()
                    .map(|v| field.from_int(v))
                    .map_err(|_| Error::Parse {
                        line: idx + 1,
                        msg: format!("bad coordinate `{w}`"),
                    })
            })
            .collect::<Result<_>>()?;
        if coords.len() != n {
            return Err(Error::Parse {
                line: idx + 1,
                msg: format!("expected {n} coordinates, got {}", coords.len()),
            });
        }
        points.push(VarietyPoint::new(coords));
    }
    if points.is_empty() {
        return Err(Error::EmptySystem);
    }
    Ok((header.ring, points))
}

pub fn print_points(ring: &RingRef, points: &[VarietyPoint]) -> String {
    let mut out = String::new();
    out.push_str(&format!("field {}\n", ring.field().modulus()));
    out.push_str(&format!("vars {}\n", ring.var_names().join(" ")));
    for p in points {
        let words: Vec<String> = p.coords.iter().map(|c| c.to_string()).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out
}

/// Matrix file: the usual header, a `matrix <r> <s>` line, then r lines of
/// s polynomials separated by `;`.
pub fn parse_matrix(text: &str) -> Result<PolyMatrix> {
    let header = parse_header(text)?;
    let mut body = text
        .lines()
        .enumerate()
        .skip(header.body_start)
        .filter(|(_, raw)| !strip_comment(raw).is_empty());
    let (shape_idx, shape_raw) = body.next().ok_or(Error::EmptySystem)?;
    let shape_line = strip_comment(shape_raw);
    let words: Vec<&str> = shape_line.split_whitespace().collect();
    let (r, s) = match words.as_slice() {
        ["matrix", r, s] => {
            let parse = |w: &str| -> Result<usize> {
                w.parse().map_err(|_| Error::Parse {
                    line: shape_idx + 1,
                    msg: format!("bad dimension `{w}`"),
                })
            };
            (parse(r)?, parse(s)?)
        }
        _ => {
            return Err(Error::Parse {
                line: shape_idx + 1,
                msg: "expected `matrix <rows> <cols>`".into(),
            })
        }
    };
    let mut entries = Vec::with_capacity(r * s);
    let mut rows_read = 0;
    for (idx, raw) in body {
        let line = strip_comment(raw);
        let cells: Vec<&str> = line.split(';').map(|c| c.trim()).collect();
        if cells.len() != s {
            return Err(Error::Parse {
                line: idx + 1,
                msg: format!("expected {s} entries separated by `;`, got {}", cells.len()),
            });
        }
        for cell in cells {
            entries.push(parse_polynomial(cell, &header.ring, idx + 1)?);
        }
        rows_read += 1;
    }
    if rows_read != r {
        return Err(Error::Parse {
            line: text.lines().count(),
            msg: format!("expected {r} matrix rows, got {rows_read}"),
        });
    }
    PolyMatrix::new(header.ring, r, s, entries, GradingKind::Generic)
}

pub fn print_matrix(matrix: &PolyMatrix) -> String {
    let ring = matrix.ring();
    let mut out = String::new();
    out.push_str(&format!("field {}\n", ring.field().modulus()));
    out.push_str(&format!("vars {}\n", ring.var_names().join(" ")));
    out.push_str(&format!("matrix {} {}\n", matrix.num_rows(), matrix.num_cols()));
    for i in 0..matrix.num_rows() {
        let cells: Vec<String> = (0..matrix.num_cols())
            .map(|j| matrix.entry(i, j).to_string())
            .collect();
        out.push_str(&cells.join(" ; "));
        out.push('\n');
    }
    out
}
