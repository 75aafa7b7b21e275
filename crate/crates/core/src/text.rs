//! Parser for the small expression language shared by scalars, structure
//! equations and connection tables.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor factor*          (juxtaposition is multiplication)
//! factor := INT ['/' INT] | 'r2' | ATOM | '(' expr ')'
//! ```
//!
//! Atoms are identifiers interpreted by the caller. A product may contain at
//! most one factor that involves atoms, so every expression is a linear
//! combination of atoms plus a constant.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// Linear combination of atoms with a constant term.
#[derive(Clone, Debug, PartialEq)]
pub struct LinComb<A: Ord> {
    pub constant: Scalar,
    pub terms: BTreeMap<A, Scalar>,
}

impl<A: Ord + Clone> LinComb<A> {
    fn constant(c: Scalar) -> Self {
        LinComb {
            constant: c,
            terms: BTreeMap::new(),
        }
    }

    fn atom(a: A) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(a, Scalar::one());
        LinComb {
            constant: Scalar::zero(),
            terms,
        }
    }

    fn is_constant(&self) -> bool {
        self.terms.is_empty()
    }

    fn scale(mut self, c: &Scalar) -> Self {
        self.constant = &self.constant * c;
        for v in self.terms.values_mut() {
            *v = &*v * c;
        }
        self.terms.retain(|_, v| !v.is_zero());
        self
    }

    fn add(mut self, o: LinComb<A>, sign: &Scalar) -> Self {
        self.constant += &(&o.constant * sign);
        for (k, v) in o.terms {
            let e = self.terms.entry(k).or_insert_with(Scalar::zero);
            *e += &(&v * sign);
        }
        self.terms.retain(|_, v| !v.is_zero());
        self
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Slash,
    LParen,
    RParen,
}

struct Lexed {
    toks: Vec<(Tok, usize)>,
    end: usize,
}

fn lex(src: &str, line: usize, col0: usize) -> Result<Lexed> {
    let mut toks = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                toks.push((Tok::Int(s.parse().expect("digits")), col));
                continue;
            }
            a if a.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
                continue;
            }
            other => {
                return Err(Error::Parse {
                    line,
                    column: col,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        toks.push((t, col));
        i += 1;
    }
    Ok(Lexed {
        toks,
        end: col0 + chars.len(),
    })
}

struct Parser<'a, A> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end: usize,
    atom: &'a dyn Fn(&str) -> Option<A>,
}

impl<'a, A: Ord + Clone> Parser<'a, A> {
    fn err(&self, message: impl Into<String>) -> Error {
        let column = self.toks.get(self.pos).map(|t| t.1).unwrap_or(self.end);
        Error::Parse {
            line: self.line,
            column,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn expr(&mut self) -> Result<LinComb<A>> {
        let mut sign = Scalar::one();
        match self.peek() {
            Some(Tok::Plus) => self.pos += 1,
            Some(Tok::Minus) => {
                self.pos += 1;
                sign = -sign;
            }
            _ => {}
        }
        let mut acc = LinComb::constant(Scalar::zero()).add(self.term()?, &sign);
        loop {
            let sign = match self.peek() {
                Some(Tok::Plus) => Scalar::one(),
                Some(Tok::Minus) => -Scalar::one(),
                _ => break,
            };
            self.pos += 1;
            acc = acc.add(self.term()?, &sign);
        }
        Ok(acc)
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen)
        )
    }

    fn term(&mut self) -> Result<LinComb<A>> {
        if !self.starts_factor() {
            return Err(self.err("expected a number, `r2`, a symbol or `(`"));
        }
        let mut acc = self.factor()?;
        while self.starts_factor() {
            let at = self.pos;
            let f = self.factor()?;
            acc = if f.is_constant() {
                acc.scale(&f.constant)
            } else if acc.is_constant() {
                f.scale(&acc.constant)
            } else {
                self.pos = at;
                return Err(self.err("product of two symbolic factors is not linear"));
            };
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LinComb<A>> {
        let (tok, _) = self.toks[self.pos].clone();
        match tok {
            Tok::Int(n) => {
                self.pos += 1;
                let mut q = Rational::from_integer(n);
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) if !d.is_zero() => {
                            self.pos += 1;
                            q /= Rational::from_integer(d);
                        }
                        _ => return Err(self.err("expected a nonzero integer denominator")),
                    }
                }
                Ok(LinComb::constant(Scalar::from_rational(q)))
            }
            Tok::Ident(name) => {
                if name == "r2" {
                    self.pos += 1;
                    return Ok(LinComb::constant(Scalar::sqrt2()));
                }
                match (self.atom)(&name) {
                    Some(a) => {
                        self.pos += 1;
                        Ok(LinComb::atom(a))
                    }
                    None => Err(self.err(format!("unknown symbol `{name}`"))),
                }
            }
            Tok::LParen => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

/// Parses a linear expression. `line` and `col0` locate `src` in a larger
/// document for error messages (columns are 1-based).
pub fn parse_linear<A: Ord + Clone>(
    src: &str,
    line: usize,
    col0: usize,
    atom: &dyn Fn(&str) -> Option<A>,
) -> Result<LinComb<A>> {
    let lexed = lex(src, line, col0)?;
    let mut p = Parser {
        toks: lexed.toks,
        pos: 0,
        line,
        end: lexed.end,
        atom,
    };
    if p.toks.is_empty() {
        return Err(p.err("empty expression"));
    }
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

/// Parses a scalar in the text syntax (any constant expression is accepted).
pub fn parse_scalar(src: &str) -> Result<Scalar> {
    let none = |_: &str| -> Option<()> { None };
    Ok(parse_linear(src, 1, 1, &none)?.constant)
}

/// Parses `b<i><j>...` (single-digit indices, 1-based) into 0-based indices.
pub fn parse_b_indices(name: &str, n: usize) -> Option<Vec<usize>> {
    let rest = name.strip_prefix('b')?;
    if rest.is_empty() {
        return None;
    }
    rest.chars()
        .map(|c| {
            let d = c.to_digit(10)? as usize;
            (1..=n).contains(&d).then(|| d - 1)
        })
        .collect()
}

/// Parses `b<j>_<i>`, the endomorphism `b_i (x) b^j`, into 0-based `(row i, col j)`.
pub fn parse_b_endo(name: &str, n: usize) -> Option<(usize, usize)> {
    let rest = name.strip_prefix('b')?;
    let (j, i) = rest.split_once('_')?;
    let j: usize = j.parse().ok()?;
    let i: usize = i.parse().ok()?;
    ((1..=n).contains(&i) && (1..=n).contains(&j)).then(|| (i - 1, j - 1))
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("1/2 r2").unwrap(), Scalar::quad(0, 1, 1, 2));
        assert_eq!(parse_scalar("-(1 + 1/2 r2)").unwrap(), Scalar::quad(-1, 1, -1, 2));
        assert_eq!(parse_scalar("2 (3 - r2)").unwrap(), Scalar::quad(6, 1, -2, 1));
    }

    #[test]
    fn linear_with_atoms() {
        let atom = |s: &str| parse_b_indices(s, 7);
        let e = parse_linear("-2 b15 - (1 - r2) b56 + b15", 1, 1, &atom).unwrap();
        assert_eq!(e.terms[&vec![0, 4]], Scalar::from_int(-1));
        assert_eq!(e.terms[&vec![4, 5]], Scalar::quad(-1, 1, 1, 1));
    }

    #[test]
    fn errors_carry_position() {
        let atom = |s: &str| parse_b_indices(s, 7);
        match parse_linear("b12 b34", 3, 9, &atom) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 13)),
            other => panic!("{other:?}"),
        }
        match parse_linear("1 + ", 2, 1, &atom) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 5)),
            other => panic!("{other:?}"),
        }
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn endo_atoms() {
        assert_eq!(parse_b_endo("b5_2", 7), Some((1, 4)));
        assert_eq!(parse_b_endo("b8_2", 7), None);
    }
}
