use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{ExponentVector, Field, MonomialOrder, Polynomial, VarContext};

#[derive(Debug, Clone, PartialEq)]
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
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("number `{n}`"),
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_ascii_digit() => {
                let mut end = pos;
                while let Some(&(p, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = p + d.len_utf8();
                    chars.next();
                }
                if let Some(&(p, d)) = chars.peek() {
                    if d.is_alphabetic() || d == '_' {
                        return Err(Error::parse(p, "implicit multiplication is not allowed; use `*`"));
                    }
                }
                out.push((Tok::Num(text[pos..end].parse().expect("digits")), pos));
                continue;
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut end = pos;
                while let Some(&(p, d)) = chars.peek() {
                    if !(d.is_alphanumeric() || d == '_') {
                        break;
                    }
                    end = p + d.len_utf8();
                    chars.next();
                }
                out.push((Tok::Ident(text[pos..end].to_string()), pos));
                continue;
            }
            other => return Err(Error::parse(pos, format!("unexpected character `{other}`"))),
        };
        chars.next();
        out.push((tok, pos));
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    ctx: &'a Arc<VarContext>,
    field: Field,
    order: MonomialOrder,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn constant(&self, c: crate::poly::Scalar) -> Polynomial {
        Polynomial::constant(self.ctx, self.field, self.order, c)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    let (_, pos) = self.bump();
                    let divisor = self.unary()?;
                    if divisor.is_zero() {
                        return Err(Error::parse(pos, "division by zero"));
                    }
                    if divisor.len() != 1 || !divisor.terms()[0].exps.is_one() {
                        return Err(Error::parse(pos, "division by a non-constant"));
                    }
                    let inv = divisor.terms()[0]
                        .coeff
                        .inv()
                        .ok_or_else(|| Error::parse(pos, "division by zero"))?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (tok, pos) = self.bump();
        let Tok::Num(n) = tok else {
            return Err(Error::parse(pos, format!("expected an exponent, found {}", describe(&tok))));
        };
        let e: u32 = n
            .try_into()
            .map_err(|_| Error::parse(pos, "exponent too large"))?;
        if e == 0 {
            return Err(Error::parse(pos, "exponents must be positive"));
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let (tok, pos) = self.bump();
        match tok {
            Tok::Num(n) => Ok(self.constant(self.field.from_bigint(&n))),
            Tok::Ident(name) => match self.ctx.position(&name) {
                Some(i) => Ok(Polynomial::var(self.ctx, self.field, self.order, i)),
                None => Err(Error::parse(pos, format!("unknown variable `{name}`"))),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                let (close, cpos) = self.bump();
                if close != Tok::RParen {
                    return Err(Error::parse(cpos, format!("expected `)`, found {}", describe(&close))));
                }
                Ok(inner)
            }
            other => Err(Error::parse(pos, format!("expected a term, found {}", describe(&other)))),
        }
    }
}

/// Parses a polynomial over `ctx`. Grammar: integers, `/` by nonzero
/// constants, variables of `ctx`, `^` with positive integer exponents,
/// explicit `*`, `+`, `-` and parentheses. Errors carry the byte offset.
pub fn parse_polynomial(
    text: &str,
    ctx: &Arc<VarContext>,
    field: Field,
    order: MonomialOrder,
) -> Result<Polynomial> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
        ctx,
        field,
        order,
    };
    let f = p.expr()?;
    if *p.peek() != Tok::End {
        let pos = p.pos();
        return Err(Error::parse(pos, format!("unexpected {}", describe(p.peek()))));
    }
    Ok(f)
}

/// Parses a single monomial with coefficient 1, such as `x*t*a^2` or `1`.
pub fn parse_monomial(text: &str, ctx: &Arc<VarContext>) -> Result<ExponentVector> {
    let f = parse_polynomial(text, ctx, Field::Rational, MonomialOrder::GrevLex)?;
    match f.terms() {
        [t] if t.coeff.is_one() => Ok(t.exps.clone()),
        _ => Err(Error::parse(0, format!("`{}` is not a monomial", text.trim()))),
    }
}
