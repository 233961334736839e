//! Text formats: group specs, cycle lists, polynomials, and config files.

use std::collections::BTreeMap;
use std::path::Path;

use minram::exact::{IntPoly, Poly};
use minram::permgroup::{named_group, AbstractGroup, GroupSpec, Perm, PermGroup};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("parse error at offset {offset}: {msg}")]
    At { offset: usize, msg: String },
    #[error("parse error at line {line}, column {column}: {msg}")]
    Line { line: usize, column: usize, msg: String },
    #[error("unknown group `{0}`")]
    UnknownName(String),
    #[error("{0}")]
    Other(String),
}

impl ParseError {
    pub fn offset(&self) -> Option<usize> {
        match self {
            ParseError::At { offset, .. } => Some(*offset),
            _ => None,
        }
    }
}

fn at(offset: usize, msg: impl Into<String>) -> ParseError {
    ParseError::At { offset, msg: msg.into() }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { s: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn at_end(&self) -> bool {
        self.pos >= self.s.len()
    }
}

/// Generators in 1-based cycle notation, separated by commas:
/// `(1 2 3)(4 5), (1 2)`. Points inside a cycle may be separated by spaces
/// or commas. Returns 0-based cycles per generator.
pub fn parse_cycle_list(text: &str) -> Result<Vec<Vec<Vec<usize>>>, ParseError> {
    let mut c = Cursor::new(text);
    let mut gens = Vec::new();
    loop {
        c.skip_ws();
        let mut cycles = Vec::new();
        if c.peek() != Some(b'(') {
            return Err(if c.at_end() { at(c.pos, "expected `(`, found end of input") } else { at(c.pos, "expected `(`") });
        }
        while c.peek() == Some(b'(') {
            c.pos += 1;
            let mut cyc = Vec::new();
            loop {
                c.skip_ws();
                if c.eat(b')') {
                    break;
                }
                if c.at_end() {
                    return Err(at(c.pos, "expected `)`, found end of input"));
                }
                if !cyc.is_empty() && c.eat(b',') {
                    c.skip_ws();
                }
                let start = c.pos;
                let Some(d) = c.digits() else {
                    return Err(at(c.pos, "expected a point"));
                };
                let p: usize = d.parse().map_err(|_| at(start, "point out of range"))?;
                if p == 0 {
                    return Err(at(start, "points are 1-based"));
                }
                if cyc.contains(&(p - 1)) {
                    return Err(at(start, format!("point {p} repeated in a cycle")));
                }
                cyc.push(p - 1);
            }
            if !cyc.is_empty() {
                cycles.push(cyc);
            }
            c.skip_ws();
        }
        gens.push(cycles);
        c.skip_ws();
        if c.at_end() {
            return Ok(gens);
        }
        if !c.eat(b',') {
            return Err(at(c.pos, "expected `,` between generators"));
        }
    }
}

/// Builds permutations of degree `n` (default: the largest point used).
pub fn perms_from_cycles(text: &str, n: Option<usize>) -> Result<Vec<Perm>, ParseError> {
    let gens = parse_cycle_list(text)?;
    let max = gens.iter().flatten().flatten().map(|&x| x + 1).max().unwrap_or(1);
    let n = match n {
        Some(n) if n < max => return Err(ParseError::Other(format!("point {max} exceeds the degree {n}"))),
        Some(n) => n,
        None => max,
    };
    gens.iter()
        .map(|cycles| Perm::from_cycles(n, cycles).map_err(|e| ParseError::Other(e.to_string())))
        .collect()
}

/// Multiplication table file: one row per line, 0-based entries, `#` comments.
pub fn parse_table(text: &str) -> Result<Vec<Vec<usize>>, ParseError> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap();
        if body.trim().is_empty() {
            continue;
        }
        let mut row = Vec::new();
        let mut col = 0;
        for tok in body.split(|ch: char| ch.is_whitespace() || ch == ',') {
            let column = col + 1;
            col += tok.len() + 1;
            if tok.is_empty() {
                continue;
            }
            let v = tok.parse().map_err(|_| ParseError::Line { line: i + 1, column, msg: format!("bad entry `{tok}`") })?;
            row.push(v);
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(ParseError::Line { line: 1, column: 1, msg: "empty table".into() });
    }
    Ok(rows)
}

/// A group as given on the command line, kept in a form that can be stored
/// and re-parsed without access to the original file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupInput {
    Text(String),
    Table(Vec<Vec<usize>>),
}

impl GroupInput {
    /// A name, a cycle list, or the path of a table file.
    pub fn read(arg: &str) -> Result<Self, ParseError> {
        let t = arg.trim();
        if t.is_empty() {
            return Err(ParseError::Other("empty group spec".into()));
        }
        if !t.starts_with('(') && Path::new(t).is_file() {
            let text = std::fs::read_to_string(t).map_err(|e| ParseError::Other(format!("{t}: {e}")))?;
            let body = text.trim();
            if body.starts_with('(') {
                return Ok(GroupInput::Text(body.lines().collect::<Vec<_>>().join(" ")));
            }
            return Ok(GroupInput::Table(parse_table(&text)?));
        }
        Ok(GroupInput::Text(t.to_string()))
    }

    pub fn spec(&self) -> Result<GroupSpec, ParseError> {
        match self {
            GroupInput::Table(rows) => {
                let group = AbstractGroup::from_table(rows.clone(), None).map_err(|e| ParseError::Other(e.to_string()))?;
                Ok(GroupSpec::Table { name: format!("table of order {}", rows.len()), group })
            }
            GroupInput::Text(t) if t.starts_with('(') => {
                let gens = perms_from_cycles(t, None)?;
                let n = gens[0].degree();
                let group = PermGroup::new(n, gens).map_err(|e| ParseError::Other(e.to_string()))?;
                Ok(GroupSpec::Perm { name: t.clone(), group })
            }
            GroupInput::Text(t) => {
                let group = named_group(t).map_err(|_| ParseError::UnknownName(t.clone()))?;
                Ok(GroupSpec::Perm { name: t.clone(), group })
            }
        }
    }
}

pub fn parse_group_spec(arg: &str) -> Result<GroupSpec, ParseError> {
    GroupInput::read(arg)?.spec()
}

/// Integer polynomial in one variable (`x`, `X`, `t` or `T`), e.g.
/// `x^5 - x - 1` or `3X^2+2*X-7`; or a lowest-first list `[-1, -1, 0, 0, 0, 1]`.
pub fn parse_poly(text: &str) -> Result<IntPoly, ParseError> {
    let t = text.trim();
    if let Some(inner) = t.strip_prefix('[') {
        let inner = inner.strip_suffix(']').ok_or_else(|| at(text.len(), "expected `]`"))?;
        let coeffs = inner
            .split(',')
            .map(|s| s.trim().parse::<BigInt>().map_err(|_| ParseError::Other(format!("bad coefficient `{}`", s.trim()))))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Poly::from_vec(coeffs));
    }
    let mut c = Cursor::new(text);
    let mut coeffs: BTreeMap<usize, BigInt> = BTreeMap::new();
    let mut var: Option<u8> = None;
    let mut first = true;
    loop {
        c.skip_ws();
        if c.at_end() {
            if first {
                return Err(at(c.pos, "empty polynomial"));
            }
            break;
        }
        let mut sign = BigInt::from(1);
        if c.eat(b'-') {
            sign = -sign;
        } else if !c.eat(b'+') && !first {
            return Err(at(c.pos, "expected `+` or `-`"));
        }
        first = false;
        c.skip_ws();
        let coef = c.digits().map(|d| d.parse::<BigInt>().unwrap());
        c.skip_ws();
        let star = c.eat(b'*');
        c.skip_ws();
        let deg = match c.peek() {
            Some(v @ (b'x' | b'X' | b't' | b'T')) => {
                if var.is_some_and(|w| w != v) {
                    return Err(at(c.pos, "mixed variable names"));
                }
                var = Some(v);
                c.pos += 1;
                c.skip_ws();
                if c.eat(b'^') {
                    c.skip_ws();
                    let p = c.pos;
                    c.digits().ok_or_else(|| at(p, "expected an exponent"))?.parse().map_err(|_| at(p, "exponent too large"))?
                } else {
                    1
                }
            }
            _ if star => return Err(at(c.pos, "expected the variable after `*`")),
            _ if coef.is_none() => return Err(at(c.pos, "expected a term")),
            _ => 0,
        };
        if deg > 10_000 {
            return Err(at(c.pos, "degree too large"));
        }
        let v = sign * coef.unwrap_or_else(|| BigInt::from(1));
        *coeffs.entry(deg).or_default() += v;
    }
    let top = *coeffs.keys().next_back().unwrap();
    let mut out = vec![BigInt::from(0); top + 1];
    for (d, v) in coeffs {
        out[d] = v;
    }
    Ok(Poly::from_vec(out))
}

/// `key = value` lines; `#` starts a comment.
pub fn parse_config(text: &str) -> Result<Vec<(String, String)>, ParseError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap();
        if body.trim().is_empty() {
            continue;
        }
        let Some(eq) = body.find('=') else {
            return Err(ParseError::Line { line: i + 1, column: 1, msg: "expected `key = value`".into() });
        };
        let key = body[..eq].trim().replace('_', "-");
        let value = body[eq + 1..].trim().trim_matches('"').to_string();
        if key.is_empty() {
            return Err(ParseError::Line { line: i + 1, column: 1, msg: "empty key".into() });
        }
        out.push((key, value));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named() {
        assert_eq!(parse_group_spec("S3").unwrap().order(), 6);
    }

    #[test]
    fn two_generators_on_five_points() {
        let g = perms_from_cycles("(1 2 3)(4 5), (1 2)", None).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g[0].degree(), 5);
        assert_eq!(g[0].to_cycle_string(), "(1 2 3)(4 5)");
        assert_eq!(parse_group_spec("(1 2 3)(4 5), (1 2)").unwrap().order(), 12);
    }

    #[test]
    fn unclosed_cycle() {
        let e = parse_group_spec("(1 2").unwrap_err();
        assert_eq!(e.offset(), Some(4));
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(parse_group_spec("K9"), Err(ParseError::UnknownName(_))));
    }

    #[test]
    fn gap_style_commas() {
        let g = perms_from_cycles("(1,2,3), (1,2)", None).unwrap();
        assert_eq!(g[0].to_cycle_string(), "(1 2 3)");
    }

    #[test]
    fn polynomials() {
        assert_eq!(parse_poly("x^5 - x - 1").unwrap(), Poly::from_i64s(&[-1, -1, 0, 0, 0, 1]));
        assert_eq!(parse_poly("3X^2+2*X-7").unwrap(), Poly::from_i64s(&[-7, 2, 3]));
        assert_eq!(parse_poly("[28, -15, 1]").unwrap(), Poly::from_i64s(&[28, -15, 1]));
        assert_eq!(parse_poly("x^4 + 1").unwrap(), Poly::from_i64s(&[1, 0, 0, 0, 1]));
        assert_eq!(parse_poly("x^2 + x y").unwrap_err().offset(), Some(8));
    }

    #[test]
    fn config_lines() {
        let c = parse_config("# budgets\nn_max = 6\nseed=3 # inline\n").unwrap();
        assert_eq!(c, vec![("n-max".into(), "6".into()), ("seed".into(), "3".into())]);
        assert!(parse_config("oops\n").is_err());
    }
}
