//! Truth tables and monotone Boolean expressions.
//!
//! Expressions use `x1..xn` or plain letter names for variables, `&`, `^`,
//! `*`, `·`, `∧` for AND, `|`, `v`, `+`, `∨` for OR, the constants `0`/`1`
//! and parentheses. AND binds tighter than OR. Letter names are numbered in
//! order of first appearance.

use std::fmt;

use lattice_threshold::bitset::BitSet;
use lattice_threshold::boolean_domain::{cube_size, MAX_ARITY};
use lattice_threshold::threshold::BooleanFunction;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    Unsupported,
}

/// A parse failure; `column` is 1-based and counts characters.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub column: Option<usize>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ParseErrorKind::Syntax => "syntax error",
            ParseErrorKind::Unsupported => "unsupported feature",
        };
        match self.column {
            Some(c) => write!(f, "{what} at column {c}: {}", self.message),
            None => write!(f, "{what}: {}", self.message),
        }
    }
}

fn syntax(column: Option<usize>, message: impl Into<String>) -> ParseError {
    ParseError {
        kind: ParseErrorKind::Syntax,
        column,
        message: message.into(),
    }
}

/// Parses a string of `2^n` characters `0`/`1`; position `k` is the point
/// whose bits are `k` (bit `i-1` holds `x_i`).
pub fn parse_truth_table(s: &str) -> Result<BooleanFunction, ParseError> {
    let s = s.trim();
    let mut truth = Vec::with_capacity(s.len());
    for (i, c) in s.chars().enumerate() {
        match c {
            '0' => truth.push(false),
            '1' => truth.push(true),
            _ => {
                return Err(syntax(
                    Some(i + 1),
                    format!("unexpected {c:?} in truth table"),
                ))
            }
        }
    }
    let len = truth.len();
    if len < 2 || !len.is_power_of_two() {
        return Err(syntax(
            None,
            format!("truth table length {len} is not a power of two (at least 2)"),
        ));
    }
    let n = len.trailing_zeros() as usize;
    if n > MAX_ARITY {
        return Err(syntax(None, format!("arity {n} exceeds {MAX_ARITY}")));
    }
    let set = BitSet::from_indices(len, (0..len).filter(|&i| truth[i]));
    Ok(BooleanFunction::new(n, set).expect("arity checked"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Expr {
    Const(bool),
    Var(usize),
    And(Vec<Expr>),
    Or(Vec<Expr>),
}

impl Expr {
    fn eval(&self, bits: usize) -> bool {
        match self {
            Expr::Const(b) => *b,
            Expr::Var(i) => bits >> i & 1 == 1,
            Expr::And(xs) => xs.iter().all(|e| e.eval(bits)),
            Expr::Or(xs) => xs.iter().any(|e| e.eval(bits)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    And,
    Or,
    Open,
    Close,
    Const(bool),
    Ident(String),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '&' | '^' | '*' | '·' | '∧' => Tok::And,
            '|' | '+' | '∨' => Tok::Or,
            '(' => Tok::Open,
            ')' => Tok::Close,
            '0' => Tok::Const(false),
            '1' => Tok::Const(true),
            '!' | '~' | '¬' | '-' | '\'' => {
                return Err(ParseError {
                    kind: ParseErrorKind::Unsupported,
                    column: Some(col),
                    message: format!("negation {c:?} is not allowed; expressions must be monotone"),
                })
            }
            c if c.is_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                let tok = if word == "v" {
                    Tok::Or
                } else {
                    Tok::Ident(word)
                };
                out.push((start + 1, tok));
                continue;
            }
            _ => return Err(syntax(Some(col), format!("unexpected {c:?}"))),
        };
        out.push((col, tok));
        i += 1;
    }
    Ok(out)
}

#[derive(Default)]
struct Names {
    indexed: bool,
    lettered: Vec<String>,
    max_index: usize,
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    names: Names,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(c, _)| *c)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some(&Tok::Or) {
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Expr::Or(terms)
        })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Expr::And(factors)
        })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let col = self.column();
        let Some((_, tok)) = self.toks.get(self.pos).cloned() else {
            return Err(syntax(Some(col), "unexpected end of expression"));
        };
        self.pos += 1;
        match tok {
            Tok::Const(b) => Ok(Expr::Const(b)),
            Tok::Ident(name) => self.variable(col, &name),
            Tok::Open => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(syntax(Some(self.column()), "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Tok::And | Tok::Or | Tok::Close => {
                Err(syntax(Some(col), "expected a variable, constant or '('"))
            }
        }
    }

    fn variable(&mut self, col: usize, name: &str) -> Result<Expr, ParseError> {
        let index = name
            .strip_prefix('x')
            .filter(|d| !d.is_empty() && d.chars().all(|c| c.is_ascii_digit()));
        if let Some(digits) = index {
            if !self.names.lettered.is_empty() {
                return Err(syntax(Some(col), "cannot mix x1..xn with letter names"));
            }
            let i: usize = digits
                .parse()
                .ok()
                .filter(|&i| (1..=MAX_ARITY).contains(&i))
                .ok_or_else(|| {
                    syntax(Some(col), format!("variable index must be 1..={MAX_ARITY}"))
                })?;
            self.names.indexed = true;
            self.names.max_index = self.names.max_index.max(i);
            return Ok(Expr::Var(i - 1));
        }
        if self.names.indexed {
            return Err(syntax(Some(col), "cannot mix x1..xn with letter names"));
        }
        let pos = match self.names.lettered.iter().position(|v| v == name) {
            Some(p) => p,
            None => {
                self.names.lettered.push(name.to_string());
                self.names.lettered.len() - 1
            }
        };
        if pos >= MAX_ARITY {
            return Err(syntax(
                Some(col),
                format!("more than {MAX_ARITY} variables"),
            ));
        }
        Ok(Expr::Var(pos))
    }
}

/// A parsed monotone expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expression {
    expr: Expr,
    /// Input names in coordinate order (`x1..xn`, or letters as they appear).
    variables: Vec<String>,
}

impl Expression {
    pub fn parse(s: &str) -> Result<Self, ParseError> {
        let toks = tokenize(s)?;
        let mut p = Parser {
            toks,
            pos: 0,
            end: s.chars().count() + 1,
            names: Names::default(),
        };
        let expr = p.expr()?;
        if p.pos < p.toks.len() {
            let msg = if p.peek() == Some(&Tok::Close) {
                "unmatched ')'"
            } else {
                "expected an operator"
            };
            return Err(syntax(Some(p.column()), msg));
        }
        let variables = if p.names.indexed {
            (1..=p.names.max_index).map(|i| format!("x{i}")).collect()
        } else {
            p.names.lettered
        };
        Ok(Expression { expr, variables })
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    /// Whether the names are letters rather than `x1..xn`.
    pub fn uses_letters(&self) -> bool {
        self.variables.first().is_some_and(|v| {
            v.strip_prefix('x')
                .is_none_or(|d| d.is_empty() || !d.chars().all(|c| c.is_ascii_digit()))
        })
    }

    /// The function on `n` variables, `n` defaulting to the number referenced.
    pub fn to_function(&self, n: Option<usize>) -> Result<BooleanFunction, ParseError> {
        let used = self.variables.len();
        let n = n.unwrap_or(used);
        if n < used {
            return Err(syntax(
                None,
                format!("expression uses {used} variables but n = {n}"),
            ));
        }
        if n == 0 {
            return Err(syntax(
                None,
                "expression references no variables; give the arity with --n",
            ));
        }
        if n > MAX_ARITY {
            return Err(syntax(None, format!("arity {n} exceeds {MAX_ARITY}")));
        }
        let size = cube_size(n);
        let set = BitSet::from_indices(size, (0..size).filter(|&x| self.expr.eval(x)));
        Ok(BooleanFunction::new(n, set).expect("arity checked"))
    }
}

/// Parses and tabulates an expression; arity is the highest variable used.
pub fn parse_expression(s: &str) -> Result<BooleanFunction, ParseError> {
    Expression::parse(s)?.to_function(None)
}
