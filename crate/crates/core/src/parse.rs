//! Text input: polynomial expressions and ideal documents.
//!
//! An ideal document looks like
//!
//! ```text
//! ring x y z t
//! order grevlex
//! ideal x^2 - x*t, x*y, x*z,
//!       y^4*z, y^5
//! ```
//!
//! `ring` defaults to `x y z t` and `order` is optional. Expressions accept
//! integer and rational coefficients, `+ - * / ^`, parentheses and implicit
//! multiplication (`2xt`, `xy`, `3(x+y)`). Everything after `#` on a line is
//! ignored.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::groebner::GradedIdeal;
use crate::ring::{Coeff, Monomial, MonomialOrder, Polynomial, Ring};

#[derive(Clone, Debug)]
pub struct IdealDocument {
    pub ring: Ring,
    pub order: Option<MonomialOrder>,
    pub generators: Vec<Polynomial>,
}

impl IdealDocument {
    pub fn ideal(&self) -> GradedIdeal {
        GradedIdeal::new(self.ring.clone(), self.generators.clone())
            .expect("document generators are homogeneous")
    }
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    column: usize,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

fn err(pos: Pos, message: impl Into<String>) -> Error {
    Error::Parse {
        line: pos.line,
        column: pos.column,
        message: message.into(),
    }
}

fn lex(chars: &[(char, Pos)]) -> Result<Vec<(Tok, Pos)>> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (c, pos) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while i < chars.len() && chars[i].0.is_ascii_digit() {
                s.push(chars[i].0);
                i += 1;
            }
            out.push((Tok::Num(s.parse().unwrap()), pos));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while i < chars.len() && (chars[i].0.is_ascii_alphanumeric() || chars[i].0 == '_') {
                s.push(chars[i].0);
                i += 1;
            }
            out.push((Tok::Ident(s), pos));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            _ => return Err(err(pos, format!("unexpected character `{c}`"))),
        };
        out.push((t, pos));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    order: &'a MonomialOrder,
    toks: Vec<(Tok, Pos)>,
    i: usize,
    end: Pos,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.0)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.i).map(|t| t.1).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<(Tok, Pos)> {
        let t = self.toks.get(self.i).cloned();
        self.i += 1;
        t
    }

    fn constant(&self, c: Coeff) -> Polynomial {
        Polynomial::term(Monomial::one(self.ring.nvars()), c, self.order.clone())
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring.nvars(), self.order.clone());
        let mut sign = match self.peek() {
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc = if sign { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(Tok::Plus) => sign = false,
                Some(Tok::Minus) => sign = true,
                _ => return Ok(acc),
            }
            self.bump();
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::LParen))
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let pos = self.pos();
                    let f = self.factor()?;
                    let c = match f.terms() {
                        [(m, c)] if m.is_one() => c.clone(),
                        [] => return Err(err(pos, "division by zero")),
                        _ => return Err(err(pos, "can only divide by a nonzero constant")),
                    };
                    acc = acc.scale(&c.recip());
                }
                _ if self.starts_atom() => {
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        // in a run like `xzt^2` the exponent binds to the last variable only
        if let (Some(Tok::Ident(s)), Some(Tok::Caret)) = (
            self.peek().cloned(),
            self.toks.get(self.i + 1).map(|t| &t.0),
        ) {
            let pos = self.pos();
            let vars = self.split_identifier(&s, pos)?;
            if vars.len() > 1 {
                self.bump();
                let (last, head) = vars.split_last().unwrap();
                let mut exps = vec![0u16; self.ring.nvars()];
                for &v in head {
                    exps[v] += 1;
                }
                let prefix = Polynomial::from_monomial(Monomial::new(&exps), self.order.clone());
                self.toks[self.i - 1].0 = Tok::Ident(self.ring.names()[*last].clone());
                self.i -= 1;
                let rest = self.factor()?;
                return Ok(&prefix * &rest);
            }
        }
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let pos = self.pos();
            let e: u32 = match self.bump() {
                Some((Tok::Num(n), _)) => {
                    n.try_into().map_err(|_| err(pos, "exponent too large"))?
                }
                _ => return Err(err(pos, "expected a nonnegative integer exponent")),
            };
            if e > self.ring.degree_cap() {
                return Err(err(
                    pos,
                    format!("exponent exceeds the degree cap {}", self.ring.degree_cap()),
                ));
            }
            let mut acc = self.constant(Coeff::one());
            for _ in 0..e {
                acc = &acc * &base;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let pos = self.pos();
        match self.bump() {
            Some((Tok::Num(n), _)) => Ok(self.constant(Coeff::from_integer(n))),
            Some((Tok::Ident(s), p)) => self.identifier(&s, p),
            Some((Tok::LParen, _)) => {
                let e = self.expr()?;
                match self.bump() {
                    Some((Tok::RParen, _)) => Ok(e),
                    Some((_, p)) => Err(err(p, "expected `)`")),
                    None => Err(err(self.end, "expected `)`")),
                }
            }
            Some((t, p)) => Err(err(p, format!("unexpected {}", describe(&t)))),
            None => Err(err(pos, "unexpected end of input")),
        }
    }

    /// A known variable, or a run of variable names written without `*`.
    fn identifier(&self, s: &str, pos: Pos) -> Result<Polynomial> {
        let mut exps = vec![0u16; self.ring.nvars()];
        for v in self.split_identifier(s, pos)? {
            exps[v] += 1;
        }
        Ok(Polynomial::from_monomial(
            Monomial::new(&exps),
            self.order.clone(),
        ))
    }

    /// Variable indices of an identifier, longest names first.
    fn split_identifier(&self, s: &str, pos: Pos) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let hit = self
                .ring
                .names()
                .iter()
                .enumerate()
                .filter(|(_, n)| rest.starts_with(n.as_str()))
                .max_by_key(|(_, n)| n.len());
            match hit {
                Some((i, n)) => {
                    out.push(i);
                    rest = &rest[n.len()..];
                }
                None => return Err(err(pos, format!("unknown variable `{s}`"))),
            }
        }
        Ok(out)
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("number `{n}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Comma => "`,`".into(),
    }
}

fn located(text: &str, line: usize, column: usize) -> Vec<(char, Pos)> {
    text.chars()
        .enumerate()
        .map(|(k, c)| {
            (
                c,
                Pos {
                    line,
                    column: column + k,
                },
            )
        })
        .collect()
}

/// Parse one polynomial expression.
pub fn parse_polynomial(ring: &Ring, text: &str, order: &MonomialOrder) -> Result<Polynomial> {
    let chars = located(text, 1, 1);
    let end = Pos {
        line: 1,
        column: chars.len() + 1,
    };
    let toks = lex(&chars)?;
    let mut p = Parser {
        ring,
        order,
        toks,
        i: 0,
        end,
    };
    let e = p.expr()?;
    if let Some((t, pos)) = p.bump() {
        return Err(err(pos, format!("unexpected {}", describe(&t))));
    }
    Ok(e)
}

fn parse_generator_list(
    ring: &Ring,
    order: &MonomialOrder,
    chars: &[(char, Pos)],
    end: Pos,
    homogeneous: bool,
) -> Result<Vec<Polynomial>> {
    let toks = lex(chars)?;
    let mut p = Parser {
        ring,
        order,
        toks,
        i: 0,
        end,
    };
    let mut gens = Vec::new();
    if p.peek().is_none() {
        return Ok(gens);
    }
    loop {
        let start = p.pos();
        let g = p.expr()?;
        if !g.is_zero() {
            if homogeneous && g.homogeneous_degree().is_none() {
                return Err(err(
                    start,
                    format!("generator `{}` is not homogeneous", ring.fmt_polynomial(&g)),
                ));
            }
            if g.max_degree() > ring.degree_cap() {
                return Err(err(
                    start,
                    format!("generator exceeds the degree cap {}", ring.degree_cap()),
                ));
            }
            gens.push(g);
        }
        match p.bump() {
            None => return Ok(gens),
            Some((Tok::Comma, _)) => {}
            Some((t, pos)) => {
                return Err(err(pos, format!("expected `,` but found {}", describe(&t))))
            }
        }
    }
}

/// Parse a generator list such as `"x^2, x*y - x*t"` in a known ring.
pub fn parse_generators(ring: &Ring, text: &str, order: &MonomialOrder) -> Result<Vec<Polynomial>> {
    let chars = located(text, 1, 1);
    let end = Pos {
        line: 1,
        column: chars.len() + 1,
    };
    parse_generator_list(ring, order, &chars, end, true)
}

/// Parse a comma separated list of arbitrary expressions.
pub fn parse_expressions(
    ring: &Ring,
    text: &str,
    order: &MonomialOrder,
) -> Result<Vec<Polynomial>> {
    let chars = located(text, 1, 1);
    let end = Pos {
        line: 1,
        column: chars.len() + 1,
    };
    parse_generator_list(ring, order, &chars, end, false)
}

/// Parse a full ideal document.
pub fn parse_ideal_document(text: &str) -> Result<IdealDocument> {
    let mut ring: Option<Ring> = None;
    let mut order: Option<MonomialOrder> = None;
    let mut body: Option<Vec<(char, Pos)>> = None;
    let mut last = Pos { line: 1, column: 1 };

    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        last = Pos {
            line,
            column: content.chars().count() + 1,
        };
        let trimmed = content.trim_start();
        if trimmed.is_empty() {
            continue;
        }
        let indent = content.chars().count() - trimmed.chars().count();
        let word = trimmed.split_whitespace().next().unwrap();
        let after = &trimmed[word.len()..];
        let after_col = indent + word.chars().count() + 1;
        match word {
            "ring" => {
                if body.is_some() {
                    return Err(err(
                        Pos {
                            line,
                            column: indent + 1,
                        },
                        "`ring` must come before `ideal`",
                    ));
                }
                let names: Vec<&str> = after
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|s| !s.is_empty())
                    .collect();
                ring = Some(Ring::new(&names).map_err(|e| match e {
                    Error::Parse { message, .. } => err(
                        Pos {
                            line,
                            column: after_col,
                        },
                        message,
                    ),
                    other => other,
                })?);
            }
            "order" => {
                order = Some(MonomialOrder::parse(after.trim()).map_err(|_| {
                    err(
                        Pos {
                            line,
                            column: after_col,
                        },
                        format!("unknown order `{}`", after.trim()),
                    )
                })?);
            }
            "ideal" => {
                if body.is_some() {
                    return Err(err(
                        Pos {
                            line,
                            column: indent + 1,
                        },
                        "only one `ideal` statement is allowed",
                    ));
                }
                body = Some(located(after, line, after_col));
            }
            _ => match body.as_mut() {
                Some(b) => {
                    b.push((' ', Pos { line, column: 1 }));
                    b.extend(located(content, line, 1));
                }
                None => {
                    return Err(err(
                        Pos {
                            line,
                            column: indent + 1,
                        },
                        format!("expected `ring`, `order` or `ideal`, found `{word}`"),
                    ))
                }
            },
        }
    }

    let ring = ring.unwrap_or_else(Ring::xyzt);
    if let Some(MonomialOrder::Weight(w)) = &order {
        if w.weights.len() != ring.nvars() {
            return Err(err(
                last,
                format!("weight vector needs {} entries", ring.nvars()),
            ));
        }
    }
    let body = body.ok_or_else(|| err(last, "missing `ideal` statement"))?;
    let parse_order = order.clone().unwrap_or_default();
    let generators = parse_generator_list(&ring, &parse_order, &body, last, true)?;
    if generators.is_empty() {
        return Err(err(last, "the ideal has no nonzero generators"));
    }
    Ok(IdealDocument {
        ring,
        order,
        generators,
    })
}

/// Parse an integer list such as `0,0,3,9`.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .enumerate()
        .map(|(k, t)| {
            t.parse::<i64>().map_err(|_| Error::Parse {
                line: 1,
                column: k + 1,
                message: format!("`{t}` is not an integer"),
            })
        })
        .collect()
}
