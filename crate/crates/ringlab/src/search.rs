//! Boolean class expressions over catalog rings, e.g. `two_primal & !semicommutative`.
//!
//! Grammar: `expr := term ('|' term)*`, `term := factor ('&' factor)*`,
//! `factor := '!' factor | '(' expr ')' | predicate`.

use crate::catalog::{Catalog, RingEntry};
use crate::error::{LabError, LabResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predicate {
    Reduced,
    Semicommutative,
    TwoPrimal,
    Ni,
    NilpotentPp,
    DedekindFinite,
}

impl Predicate {
    pub const ALL: [Predicate; 6] = [
        Predicate::Reduced,
        Predicate::Semicommutative,
        Predicate::TwoPrimal,
        Predicate::Ni,
        Predicate::NilpotentPp,
        Predicate::DedekindFinite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::Reduced => "reduced",
            Predicate::Semicommutative => "semicommutative",
            Predicate::TwoPrimal => "two_primal",
            Predicate::Ni => "NI",
            Predicate::NilpotentPp => "nilpotent_pp",
            Predicate::DedekindFinite => "dedekind_finite",
        }
    }

    /// Case-insensitive, `-` accepted for `_`.
    pub fn parse(s: &str) -> Option<Predicate> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        Predicate::ALL
            .into_iter()
            .find(|p| p.name().to_ascii_lowercase() == key)
    }

    pub fn eval(self, e: &RingEntry) -> bool {
        let f = e.classes.flags;
        match self {
            Predicate::Reduced => f.reduced,
            Predicate::Semicommutative => f.semicommutative,
            Predicate::TwoPrimal => f.two_primal,
            Predicate::Ni => f.ni,
            Predicate::NilpotentPp => e.nilpotent_pp,
            Predicate::DedekindFinite => f.dedekind_finite,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Pred(Predicate),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn eval(&self, e: &RingEntry) -> bool {
        match self {
            Expr::Pred(p) => p.eval(e),
            Expr::Not(x) => !x.eval(e),
            Expr::And(a, b) => a.eval(e) && b.eval(e),
            Expr::Or(a, b) => a.eval(e) || b.eval(e),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Not,
    And,
    Or,
    Open,
    Close,
}

fn tokenize(s: &str) -> LabResult<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '!' | '~' => {
                chars.next();
                out.push(Token::Not);
            }
            '&' => {
                chars.next();
                if chars.peek() == Some(&'&') {
                    chars.next();
                }
                out.push(Token::And);
            }
            '|' => {
                chars.next();
                if chars.peek() == Some(&'|') {
                    chars.next();
                }
                out.push(Token::Or);
            }
            '(' => {
                chars.next();
                out.push(Token::Open);
            }
            ')' => {
                chars.next();
                out.push(Token::Close);
            }
            c if c.is_alphanumeric() || c == '_' || c == '-' => {
                let mut id = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' || c == '-' {
                        id.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(id));
            }
            other => {
                return Err(LabError::usage(format!(
                    "unexpected character `{other}` in class expression"
                )))
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn expr(&mut self) -> LabResult<Expr> {
        let mut lhs = self.term()?;
        while self.peek() == Some(&Token::Or) {
            self.pos += 1;
            lhs = Expr::Or(Box::new(lhs), Box::new(self.term()?));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> LabResult<Expr> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            lhs = Expr::And(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> LabResult<Expr> {
        let tok = self.peek().cloned();
        self.pos += 1;
        match tok {
            Some(Token::Not) => Ok(Expr::Not(Box::new(self.factor()?))),
            Some(Token::Open) => {
                let e = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(LabError::usage("missing `)` in class expression"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Token::Ident(id)) => Predicate::parse(&id).map(Expr::Pred).ok_or_else(|| {
                let known: Vec<&str> = Predicate::ALL.iter().map(|p| p.name()).collect();
                LabError::usage(format!(
                    "unknown class `{id}` (known: {})",
                    known.join(", ")
                ))
            }),
            _ => Err(LabError::usage("incomplete class expression")),
        }
    }
}

pub fn parse(s: &str) -> LabResult<Expr> {
    let mut p = Parser {
        tokens: tokenize(s)?,
        pos: 0,
    };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(LabError::usage("trailing input in class expression"));
    }
    Ok(e)
}

/// Catalog rings satisfying `expr`, in catalog order.
pub fn search<'a>(catalog: &'a Catalog, expr: &str) -> LabResult<Vec<&'a RingEntry>> {
    let e = parse(expr)?;
    Ok(catalog.rings.iter().filter(|r| e.eval(r)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let e = parse("reduced | NI & !two_primal").unwrap();
        assert_eq!(
            e,
            Expr::Or(
                Box::new(Expr::Pred(Predicate::Reduced)),
                Box::new(Expr::And(
                    Box::new(Expr::Pred(Predicate::Ni)),
                    Box::new(Expr::Not(Box::new(Expr::Pred(Predicate::TwoPrimal))))
                ))
            )
        );
        assert_eq!(parse("(reduced)").unwrap(), Expr::Pred(Predicate::Reduced));
    }

    #[test]
    fn errors() {
        for bad in [
            "",
            "reduced &",
            "(reduced",
            "reduced)",
            "commutative",
            "reduced $ NI",
        ] {
            assert!(parse(bad).unwrap_err().is_usage(), "{bad}");
        }
    }
}
