//! Expression parser for rational functions in the variable `t`.
//!
//! Grammar: integer literals, `t`, parentheses, unary minus, and the binary
//! operators `+ - * / ^` with the usual precedence (`^` binds tightest, then
//! unary minus, then `*` and `/`, then `+` and `-`). Binary `-` and `/` are
//! left associative, `^` is right associative and its exponent must be an
//! integer literal. Whitespace is insignificant; implicit multiplication is
//! not supported (`2t` is a syntax error, write `2*t`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::RationalFunction;
use crate::error::{Error, Result};

/// Syntax tree of an expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Constant(BigInt),
    Variable,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

impl Expr {
    /// Evaluates to a reduced rational function. Division by the zero
    /// function and zero raised to a negative power are rejected.
    pub fn eval(&self) -> Result<RationalFunction> {
        match self {
            Expr::Constant(c) => Ok(RationalFunction::constant(BigRational::from_integer(
                c.clone(),
            ))),
            Expr::Variable => Ok(RationalFunction::variable()),
            Expr::Neg(e) => Ok(-&e.eval()?),
            Expr::Add(a, b) => Ok(&a.eval()? + &b.eval()?),
            Expr::Sub(a, b) => Ok(&a.eval()? - &b.eval()?),
            Expr::Mul(a, b) => Ok(&a.eval()? * &b.eval()?),
            Expr::Div(a, b) => a.eval()?.div(&b.eval()?),
            Expr::Pow(a, k) => a.eval()?.pow(*k),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Variable,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let lit: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Token::Int(lit)));
            }
            't' => {
                out.push((i, Token::Variable));
                i += 1;
            }
            '+' => {
                out.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Token::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Token::Star));
                i += 1;
            }
            '/' => {
                out.push((i, Token::Slash));
                i += 1;
            }
            '^' => {
                out.push((i, Token::Caret));
                i += 1;
            }
            '(' => {
                out.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Token::RParen));
                i += 1;
            }
            other => {
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("unexpected character '{other}'"),
                });
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

const BP_ADD: u8 = 10;
const BP_MUL: u8 = 20;
const BP_UNARY: u8 = 30;

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn advance(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect_rparen(&mut self) -> Result<()> {
        match self.advance() {
            Some((_, Token::RParen)) => Ok(()),
            Some((p, _)) => Err(Error::Syntax {
                pos: p,
                msg: "expected ')'".into(),
            }),
            None => Err(Error::Syntax {
                pos: self.end,
                msg: "unbalanced parenthesis".into(),
            }),
        }
    }

    fn parse_primary(&mut self) -> Result<Expr> {
        match self.advance() {
            Some((_, Token::Int(v))) => Ok(Expr::Constant(v)),
            Some((_, Token::Variable)) => Ok(Expr::Variable),
            Some((_, Token::LParen)) => {
                let e = self.parse_expr(0)?;
                self.expect_rparen()?;
                Ok(e)
            }
            Some((_, Token::Minus)) => {
                let e = self.parse_expr(BP_UNARY)?;
                Ok(Expr::Neg(Box::new(e)))
            }
            Some((p, t)) => Err(Error::Syntax {
                pos: p,
                msg: format!("unexpected token {t:?}"),
            }),
            None => Err(Error::Syntax {
                pos: self.end,
                msg: "unexpected end of input".into(),
            }),
        }
    }

    /// Exponent after `^`: an optionally negated integer literal; a chain
    /// `a^b^c` folds right-associatively in integer arithmetic.
    fn parse_exponent(&mut self) -> Result<i64> {
        let negative = matches!(self.peek(), Some(Token::Minus));
        if negative {
            self.advance();
        }
        let at = self.here();
        let base = match self.advance() {
            Some((_, Token::Int(v))) => v,
            _ => return Err(Error::NonIntegerExponent { pos: at }),
        };
        let mut value = base
            .to_i64()
            .ok_or(Error::NonIntegerExponent { pos: at })?;
        if negative {
            value = -value;
        }
        if matches!(self.peek(), Some(Token::Caret)) {
            self.advance();
            let rhs = self.parse_exponent()?;
            if rhs < 0 && value.abs() != 1 {
                return Err(Error::NonIntegerExponent { pos: at });
            }
            value = checked_int_pow(value, rhs).ok_or(Error::Syntax {
                pos: at,
                msg: "exponent overflow".into(),
            })?;
        }
        Ok(value)
    }

    fn parse_expr(&mut self, min_bp: u8) -> Result<Expr> {
        let mut lhs = self.parse_primary()?;
        loop {
            let (lbp, tok) = match self.peek() {
                Some(Token::Plus) => (BP_ADD, Token::Plus),
                Some(Token::Minus) => (BP_ADD, Token::Minus),
                Some(Token::Star) => (BP_MUL, Token::Star),
                Some(Token::Slash) => (BP_MUL, Token::Slash),
                Some(Token::Caret) => {
                    // highest precedence, binds even under unary minus
                    self.advance();
                    let k = self.parse_exponent()?;
                    lhs = Expr::Pow(Box::new(lhs), k);
                    continue;
                }
                _ => break,
            };
            if lbp < min_bp {
                break;
            }
            self.advance();
            let rhs = self.parse_expr(lbp + 1)?;
            lhs = match tok {
                Token::Plus => Expr::Add(Box::new(lhs), Box::new(rhs)),
                Token::Minus => Expr::Sub(Box::new(lhs), Box::new(rhs)),
                Token::Star => Expr::Mul(Box::new(lhs), Box::new(rhs)),
                Token::Slash => Expr::Div(Box::new(lhs), Box::new(rhs)),
                _ => unreachable!(),
            };
        }
        Ok(lhs)
    }
}

fn checked_int_pow(base: i64, exp: i64) -> Option<i64> {
    if exp < 0 {
        return match base {
            1 => Some(1),
            -1 => Some(if exp % 2 == 0 { 1 } else { -1 }),
            _ => None,
        };
    }
    let e: u32 = exp.try_into().ok()?;
    base.checked_pow(e)
}

/// Parses an expression into its syntax tree.
pub fn parse_expression(text: &str) -> Result<Expr> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let e = parser.parse_expr(0)?;
    if let Some((p, t)) = parser.advance() {
        return Err(Error::Syntax {
            pos: p,
            msg: format!("trailing token {t:?}"),
        });
    }
    Ok(e)
}

/// Parses and evaluates to a reduced rational function.
pub fn parse_rational_function(text: &str) -> Result<RationalFunction> {
    parse_expression(text)?.eval()
}

/// Parses a rational constant such as `3`, `-1/2`, or `(2+3)/5`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let f = parse_rational_function(text)?;
    if !f.is_constant() {
        return Err(Error::Syntax {
            pos: 0,
            msg: format!("expected a rational constant, got {f}"),
        });
    }
    if f.is_zero() {
        return Ok(BigRational::zero());
    }
    Ok(f.num().coeff(0))
}
