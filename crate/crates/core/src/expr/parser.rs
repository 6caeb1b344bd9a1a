use std::collections::BTreeSet;

use super::ast::{ExpressionAST, Node};
use super::eval::{eval_node, Value};
use super::ExprError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Number { text: String, value: f64 },
    Ident(String),
    Sqrt,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    offset: usize,
}

fn syntax(offset: usize, message: impl Into<String>) -> ExprError {
    ExprError::Syntax {
        offset,
        message: message.into(),
    }
}

fn is_variable_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some('a'..='z')) && chars.all(|c| c.is_ascii_digit())
}

fn lex(text: &str) -> Result<Vec<Token>, ExprError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let simple = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'/' => Some(Tok::Slash),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            tokens.push(Token { tok, offset: start });
            i += 1;
            continue;
        }
        if c.is_ascii_digit() || c == b'.' {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i < bytes.len() && bytes[i] == b'.' {
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
            }
            let lexeme = &text[start..i];
            if lexeme == "." {
                return Err(syntax(start, "expected digits"));
            }
            let value: f64 = lexeme
                .parse()
                .map_err(|_| syntax(start, format!("malformed number '{lexeme}'")))?;
            if !value.is_finite() {
                return Err(syntax(start, format!("number '{lexeme}' is out of range")));
            }
            tokens.push(Token {
                tok: Tok::Number {
                    text: lexeme.to_string(),
                    value,
                },
                offset: start,
            });
            continue;
        }
        if c.is_ascii_lowercase() {
            while i < bytes.len() && (bytes[i].is_ascii_lowercase() || bytes[i].is_ascii_digit()) {
                i += 1;
            }
            let word = &text[start..i];
            let tok = if word == "sqrt" {
                Tok::Sqrt
            } else if is_variable_name(word) {
                Tok::Ident(word.to_string())
            } else {
                return Err(syntax(
                    start,
                    format!("'{word}' is not a variable (expected a letter followed by digits)"),
                ));
            };
            tokens.push(Token { tok, offset: start });
            continue;
        }
        let ch = text[start..].chars().next().unwrap_or('?');
        return Err(syntax(start, format!("unexpected character '{ch}'")));
    }
    tokens.push(Token {
        tok: Tok::End,
        offset: text.len(),
    });
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].offset
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ExprError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(syntax(self.offset(), format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<Node, ExprError> {
        let first = self.term()?;
        let mut terms = vec![first];
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    terms.push(self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    let t = self.term()?;
                    terms.push(Node::Neg(Box::new(t)));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().expect("one term")
        } else {
            Node::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<Node, ExprError> {
        let mut factors = vec![self.unary()?];
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    factors.push(self.unary()?);
                }
                Tok::Slash => {
                    let at = self.offset();
                    self.bump();
                    let den = self.unary()?;
                    if den.is_constant() {
                        let v = eval_node(&den, &[]);
                        if matches!(v, Value::Finite(z) if z.norm() == 0.0) {
                            return Err(ExprError::ZeroDenominator { offset: at });
                        }
                    }
                    let num = collapse_product(std::mem::take(&mut factors));
                    factors.push(Node::Quotient(Box::new(num), Box::new(den)));
                }
                _ => break,
            }
        }
        Ok(collapse_product(factors))
    }

    fn unary(&mut self) -> Result<Node, ExprError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            let inner = self.unary()?;
            return Ok(Node::Neg(Box::new(inner)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Node, ExprError> {
        let mut base = self.primary()?;
        while *self.peek() == Tok::Caret {
            let at = self.offset();
            self.bump();
            let e = self.exponent()?;
            if e < 0 && base.is_constant() {
                let v = eval_node(&base, &[]);
                if matches!(v, Value::Finite(z) if z.norm() == 0.0) {
                    return Err(ExprError::ZeroDenominator { offset: at });
                }
            }
            base = Node::Power(Box::new(base), e);
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i32, ExprError> {
        let at = self.offset();
        let parenthesized = *self.peek() == Tok::LParen;
        if parenthesized {
            self.bump();
        }
        let negative = *self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        let tok = self.bump();
        let magnitude = match tok.tok {
            Tok::Number { text, .. } => {
                if text.contains('.') {
                    return Err(ExprError::NonIntegerExponent { offset: tok.offset });
                }
                text.parse::<i32>()
                    .map_err(|_| syntax(tok.offset, "exponent out of range"))?
            }
            Tok::End => return Err(syntax(tok.offset, "expected exponent")),
            _ => return Err(ExprError::NonIntegerExponent { offset: tok.offset }),
        };
        if parenthesized {
            self.expect(Tok::RParen, "')'")?;
        }
        if magnitude == 0 {
            return Err(ExprError::ZeroExponent { offset: at });
        }
        Ok(if negative { -magnitude } else { magnitude })
    }

    fn primary(&mut self) -> Result<Node, ExprError> {
        let tok = self.bump();
        match tok.tok {
            Tok::Number { value, .. } => Ok(Node::Literal(value)),
            Tok::Ident(name) => {
                let idx = self
                    .vars
                    .binary_search(&name)
                    .expect("variables are collected before parsing");
                Ok(Node::Var(idx))
            }
            Tok::Sqrt => {
                self.expect(Tok::LParen, "'(' after sqrt")?;
                let arg = self.bump();
                let k = match arg.tok {
                    Tok::Number { text, .. } if !text.contains('.') => text
                        .parse::<u64>()
                        .map_err(|_| syntax(arg.offset, "sqrt argument out of range"))?,
                    _ => {
                        return Err(syntax(
                            arg.offset,
                            "sqrt takes a positive integer literal",
                        ))
                    }
                };
                if k == 0 {
                    return Err(syntax(arg.offset, "sqrt takes a positive integer literal"));
                }
                self.expect(Tok::RParen, "')'")?;
                Ok(Node::SqrtLiteral(k))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Tok::End => Err(syntax(tok.offset, "unexpected end of input")),
            _ => Err(syntax(tok.offset, "expected a number, variable, sqrt or '('")),
        }
    }
}

fn collapse_product(mut factors: Vec<Node>) -> Node {
    if factors.len() == 1 {
        factors.pop().expect("one factor")
    } else {
        Node::Product(factors)
    }
}

/// Parse an arithmetic expression into an [`ExpressionAST`].
///
/// Precedence, tightest first: `^`, unary `-`, `* /`, `+ -`. Binary operators
/// associate to the left. Sums and products are flattened within one
/// parenthesis level only.
pub fn parse(text: &str) -> Result<ExpressionAST, ExprError> {
    let tokens = lex(text)?;
    let vars: Vec<String> = tokens
        .iter()
        .filter_map(|t| match &t.tok {
            Tok::Ident(name) => Some(name.clone()),
            _ => None,
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut p = Parser {
        tokens,
        pos: 0,
        vars: &vars,
    };
    let root = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(syntax(p.offset(), "unexpected trailing input"));
    }
    Ok(ExpressionAST { root, vars })
}
