//! The poset expression language.
//!
//! ```text
//! expr  := "chain(" INT ")" | "antichain(" INT ")" | "osum(" args ")"
//!        | "dsum(" args ")" | "prod(" expr "," expr {"," expr} ")"
//!        | "diamonds(" INT "," INT ")" | "divisor(" INT ")"
//! args  := item {"," item}
//! item  := expr | INT          (a bare INT abbreviates antichain(INT))
//! ```
//!
//! Whitespace is ignored. Malformed text is a syntax error; wrong argument
//! counts and out-of-range integers are semantic errors. Both carry the
//! 1-based column they refer to.

use std::fmt;

use ics_core::Poset;
use thiserror::Error;

/// Largest argument accepted by `divisor(...)`; keeps factoring by trial
/// division instant.
pub const MAX_DIVISOR: u64 = 1_000_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PosetExpr {
    Chain(u64),
    Antichain(u64),
    Osum(Vec<PosetExpr>),
    Dsum(Vec<PosetExpr>),
    Prod(Vec<PosetExpr>),
    Diamonds(u64, u64),
    Divisor(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("semantic error at column {column}: {message}")]
    Semantic { column: usize, message: String },
    #[error("cannot build poset: {0}")]
    Build(#[from] ics_core::Error),
}

impl ExprError {
    pub fn column(&self) -> Option<usize> {
        match self {
            ExprError::Syntax { column, .. } | ExprError::Semantic { column, .. } => Some(*column),
            ExprError::Build(_) => None,
        }
    }

    /// The message followed by the input with a caret under the column.
    pub fn render(&self, text: &str) -> String {
        match self.column() {
            Some(column) => {
                let pad = " ".repeat(column.saturating_sub(1));
                format!("{self}\n  {text}\n  {pad}^")
            }
            None => self.to_string(),
        }
    }
}

const CONSTRUCTORS: &str = "chain, antichain, osum, dsum, prod, diamonds, divisor";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok<'a> {
    Ident(&'a str),
    Int(&'a str),
    Open,
    Close,
    Comma,
    End,
}

impl fmt::Display for Tok<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(s) => write!(f, "integer {s}"),
            Tok::Open => f.write_str("`(`"),
            Tok::Close => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    /// First semantic error; reported only if the text parses.
    semantic: Option<ExprError>,
}

enum Item {
    Expr(PosetExpr),
    Int(u64),
}

impl<'a> Parser<'a> {
    fn column(&self, byte: usize) -> usize {
        self.text[..byte].chars().count() + 1
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    /// Next token and its starting byte offset, without consuming it.
    fn peek(&mut self) -> Result<(Tok<'a>, usize), ExprError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let Some(c) = rest.chars().next() else {
            return Ok((Tok::End, start));
        };
        let word = |pred: fn(char) -> bool| {
            let len = rest.find(|ch: char| !pred(ch)).unwrap_or(rest.len());
            &rest[..len]
        };
        let tok = match c {
            '(' => Tok::Open,
            ')' => Tok::Close,
            ',' => Tok::Comma,
            c if c.is_ascii_digit() => Tok::Int(word(|ch| ch.is_ascii_digit())),
            c if c.is_ascii_alphabetic() => {
                Tok::Ident(word(|ch| ch.is_ascii_alphanumeric() || ch == '_'))
            }
            c => return Err(self.syntax(start, format!("unexpected character `{c}`"))),
        };
        Ok((tok, start))
    }

    fn bump(&mut self, tok: Tok<'_>) {
        self.pos += match tok {
            Tok::Ident(s) | Tok::Int(s) => s.len(),
            Tok::End => 0,
            _ => 1,
        };
    }

    fn syntax(&self, byte: usize, message: String) -> ExprError {
        ExprError::Syntax {
            column: self.column(byte),
            message,
        }
    }

    fn semantic(&mut self, byte: usize, message: String) {
        if self.semantic.is_none() {
            self.semantic = Some(ExprError::Semantic {
                column: self.column(byte),
                message,
            });
        }
    }

    fn expect(&mut self, want: Tok<'static>) -> Result<(), ExprError> {
        let (tok, at) = self.peek()?;
        if tok != want {
            return Err(self.syntax(at, format!("expected {want}, found {tok}")));
        }
        self.bump(tok);
        Ok(())
    }

    fn int(&mut self, digits: &str, at: usize) -> u64 {
        match digits.parse::<u64>() {
            Ok(0) => {
                self.semantic(at, "integers must be at least 1".to_string());
                1
            }
            Ok(v) => v,
            Err(_) => {
                self.semantic(at, format!("integer {digits} is too large"));
                1
            }
        }
    }

    fn item(&mut self) -> Result<(Item, usize), ExprError> {
        let (tok, at) = self.peek()?;
        match tok {
            Tok::Int(digits) => {
                self.bump(tok);
                Ok((Item::Int(self.int(digits, at)), at))
            }
            Tok::Ident(_) => Ok((Item::Expr(self.expr()?), at)),
            other => Err(self.syntax(
                at,
                format!("expected a poset expression or integer, found {other}"),
            )),
        }
    }

    /// `item {"," item} ")"`, consuming the closing parenthesis.
    fn items(&mut self) -> Result<Vec<(Item, usize)>, ExprError> {
        let mut out = vec![self.item()?];
        loop {
            let (tok, at) = self.peek()?;
            match tok {
                Tok::Comma => {
                    self.bump(tok);
                    out.push(self.item()?);
                }
                Tok::Close => {
                    self.bump(tok);
                    return Ok(out);
                }
                other => return Err(self.syntax(at, format!("expected `,` or `)`, found {other}"))),
            }
        }
    }

    fn ints(
        &mut self,
        name: &str,
        items: Vec<(Item, usize)>,
    ) -> Result<Vec<(u64, usize)>, ExprError> {
        items
            .into_iter()
            .map(|(item, at)| match item {
                Item::Int(v) => Ok((v, at)),
                Item::Expr(_) => Err(self.syntax(
                    at,
                    format!("{name} takes integers, found a poset expression"),
                )),
            })
            .collect()
    }

    fn arity(&mut self, name: &str, at: usize, got: usize, want: usize) {
        if got != want {
            let s = if want == 1 { "" } else { "s" };
            self.semantic(at, format!("{name} takes {want} argument{s}, got {got}"));
        }
    }

    fn expr(&mut self) -> Result<PosetExpr, ExprError> {
        let (tok, at) = self.peek()?;
        let name = match tok {
            Tok::Ident(name) => name,
            other => {
                return Err(self.syntax(at, format!("expected a poset expression, found {other}")))
            }
        };
        if !CONSTRUCTORS.split(", ").any(|c| c == name) {
            return Err(self.syntax(
                at,
                format!("unknown constructor `{name}` (expected one of {CONSTRUCTORS})"),
            ));
        }
        self.bump(tok);
        self.expect(Tok::Open)?;
        let items = self.items()?;
        let count = items.len();
        Ok(match name {
            "chain" | "antichain" | "divisor" => {
                let ints = self.ints(name, items)?;
                self.arity(name, at, count, 1);
                let (v, at_v) = ints[0];
                match name {
                    "chain" => PosetExpr::Chain(v),
                    "antichain" => PosetExpr::Antichain(v),
                    _ => {
                        if v > MAX_DIVISOR {
                            self.semantic(
                                at_v,
                                format!("divisor argument must be at most {MAX_DIVISOR}"),
                            );
                        }
                        PosetExpr::Divisor(v)
                    }
                }
            }
            "diamonds" => {
                let ints = self.ints(name, items)?;
                self.arity(name, at, count, 2);
                let (n, at_n) = ints[0];
                let (m, at_m) = ints.get(1).copied().unwrap_or((2, at));
                if n < 3 || n % 2 == 0 {
                    self.semantic(
                        at_n,
                        format!("diamonds needs an odd number of summands >= 3, got {n}"),
                    );
                }
                if m < 2 {
                    self.semantic(
                        at_m,
                        format!("diamonds needs middle layers of size >= 2, got {m}"),
                    );
                }
                PosetExpr::Diamonds(n, m)
            }
            "prod" => {
                let mut parts = Vec::with_capacity(count);
                for (item, at_item) in items {
                    match item {
                        Item::Expr(e) => parts.push(e),
                        Item::Int(_) => {
                            return Err(self.syntax(
                                at_item,
                                "prod takes poset expressions, found an integer".to_string(),
                            ))
                        }
                    }
                }
                if count < 2 {
                    self.semantic(at, format!("prod takes at least 2 arguments, got {count}"));
                }
                PosetExpr::Prod(parts)
            }
            _ => {
                let parts = items
                    .into_iter()
                    .map(|(item, _)| match item {
                        Item::Expr(e) => e,
                        Item::Int(k) => PosetExpr::Antichain(k),
                    })
                    .collect();
                if name == "osum" {
                    PosetExpr::Osum(parts)
                } else {
                    PosetExpr::Dsum(parts)
                }
            }
        })
    }
}

pub fn parse_expr(text: &str) -> Result<PosetExpr, ExprError> {
    let mut p = Parser {
        text,
        pos: 0,
        semantic: None,
    };
    let expr = p.expr()?;
    let (tok, at) = p.peek()?;
    if tok != Tok::End {
        return Err(p.syntax(at, format!("unexpected {tok} after the expression")));
    }
    match p.semantic {
        Some(e) => Err(e),
        None => Ok(expr),
    }
}

impl std::str::FromStr for PosetExpr {
    type Err = ExprError;

    fn from_str(s: &str) -> Result<Self, ExprError> {
        parse_expr(s)
    }
}

fn write_list(
    f: &mut fmt::Formatter<'_>,
    name: &str,
    parts: &[PosetExpr],
    bare: bool,
) -> fmt::Result {
    write!(f, "{name}(")?;
    for (k, part) in parts.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        match part {
            PosetExpr::Antichain(n) if bare => write!(f, "{n}")?,
            _ => write!(f, "{part}")?,
        }
    }
    f.write_str(")")
}

/// Canonical spelling: no whitespace, antichains inside sums written bare.
impl fmt::Display for PosetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetExpr::Chain(n) => write!(f, "chain({n})"),
            PosetExpr::Antichain(n) => write!(f, "antichain({n})"),
            PosetExpr::Osum(parts) => write_list(f, "osum", parts, true),
            PosetExpr::Dsum(parts) => write_list(f, "dsum", parts, true),
            PosetExpr::Prod(parts) => write_list(f, "prod", parts, false),
            PosetExpr::Diamonds(n, m) => write!(f, "diamonds({n},{m})"),
            PosetExpr::Divisor(d) => write!(f, "divisor({d})"),
        }
    }
}

fn divisor_count(mut d: u64) -> u128 {
    let mut count = 1u128;
    let mut p = 2u64;
    while p * p <= d {
        let mut e = 0;
        while d.is_multiple_of(p) {
            d /= p;
            e += 1;
        }
        count *= e + 1;
        p += 1;
    }
    if d > 1 {
        count *= 2;
    }
    count
}

fn to_usize(v: u64) -> Result<usize, ExprError> {
    usize::try_from(v).map_err(|_| {
        ExprError::Build(ics_core::Error::InvalidParameter(format!(
            "{v} does not fit in memory"
        )))
    })
}

impl PosetExpr {
    /// Number of elements, computed without building the poset. Saturates.
    pub fn element_count(&self) -> u128 {
        match self {
            PosetExpr::Chain(n) | PosetExpr::Antichain(n) => *n as u128,
            PosetExpr::Osum(parts) | PosetExpr::Dsum(parts) => parts
                .iter()
                .fold(0u128, |acc, p| acc.saturating_add(p.element_count())),
            PosetExpr::Prod(parts) => parts
                .iter()
                .fold(1u128, |acc, p| acc.saturating_mul(p.element_count())),
            PosetExpr::Diamonds(n, m) => {
                let (n, m) = (*n as u128, *m as u128);
                n.div_ceil(2) + (n / 2).saturating_mul(m)
            }
            PosetExpr::Divisor(d) => divisor_count(*d),
        }
    }

    /// Layer sizes when the expression is an ordinal sum of antichains.
    pub fn antichain_layers(&self) -> Option<Vec<usize>> {
        match self {
            PosetExpr::Osum(parts) => parts
                .iter()
                .map(|p| match p {
                    PosetExpr::Antichain(k) => usize::try_from(*k).ok(),
                    _ => None,
                })
                .collect(),
            PosetExpr::Diamonds(n, m) => Some(ics_core::poset::stacked_diamond_layers(
                usize::try_from(*n).ok()?,
                usize::try_from(*m).ok()?,
            )),
            _ => None,
        }
    }

    pub fn build(&self) -> Result<Poset, ExprError> {
        let parts = |ps: &[PosetExpr]| {
            ps.iter()
                .map(PosetExpr::build)
                .collect::<Result<Vec<_>, _>>()
        };
        Ok(match self {
            PosetExpr::Chain(n) => Poset::chain(to_usize(*n)?)?,
            PosetExpr::Antichain(n) => Poset::antichain(to_usize(*n)?)?,
            PosetExpr::Osum(ps) => Poset::ordinal_sum(&parts(ps)?)?,
            PosetExpr::Dsum(ps) => Poset::disjoint_union(&parts(ps)?)?,
            PosetExpr::Prod(ps) => Poset::product_of(&parts(ps)?)?,
            PosetExpr::Diamonds(n, m) => Poset::stacked_diamond(to_usize(*n)?, to_usize(*m)?)?,
            PosetExpr::Divisor(d) => Poset::divisor_poset(*d)?,
        })
    }
}
