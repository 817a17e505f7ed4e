//! The free distributive lattice on generators `w1..wn` with adjoined bounds.
//!
//! Elements are kept in conjunctive normal form: a meet of clauses, each
//! clause the join of the generators in an index set. The clause set is a
//! ⊆-antichain sorted by mask. The empty clause set is the top `1`; the
//! single empty clause `{∅}` is the bottom `0`.

use std::collections::HashMap;
use std::fmt;

use crate::bitset::BitSet;
use crate::boolean_domain::{check_arity, check_enumeration_arity, cube_size, Point, UpSet};
use crate::error::{Error, Result};
use crate::lattice::{FiniteLattice, Lattice};

/// A canonical element of the free distributive lattice on `n` generators.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FdlElement {
    n: u8,
    clauses: Vec<u32>,
}

fn clause_mask_fits(n: usize, clause: u32) -> bool {
    (clause as u64) >> n == 0
}

fn reduce(mut clauses: Vec<u32>) -> Vec<u32> {
    clauses.sort_unstable_by_key(|c| (c.count_ones(), *c));
    clauses.dedup();
    let mut kept: Vec<u32> = Vec::with_capacity(clauses.len());
    for c in clauses {
        if !kept.iter().any(|&k| k & !c == 0) {
            kept.push(c);
        }
    }
    kept.sort_unstable();
    kept
}

impl FdlElement {
    /// Reduces an arbitrary clause set to canonical form by absorption.
    pub fn canonicalize(n: usize, clauses: impl IntoIterator<Item = u32>) -> Result<Self> {
        check_arity(n)?;
        let clauses: Vec<u32> = clauses.into_iter().collect();
        if let Some(&bad) = clauses.iter().find(|&&c| !clause_mask_fits(n, c)) {
            return Err(Error::PointOutOfRange {
                n,
                bits: bad as u64,
            });
        }
        Ok(FdlElement {
            n: n as u8,
            clauses: reduce(clauses),
        })
    }

    pub fn top(n: usize) -> Result<Self> {
        check_arity(n)?;
        Ok(FdlElement {
            n: n as u8,
            clauses: Vec::new(),
        })
    }

    pub fn bottom(n: usize) -> Result<Self> {
        check_arity(n)?;
        Ok(FdlElement {
            n: n as u8,
            clauses: vec![0],
        })
    }

    /// The generator `w_i`, 1-based.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        check_arity(n)?;
        if i == 0 || i > n {
            return Err(Error::Malformed(format!("generator w{i} outside w1..w{n}")));
        }
        Ok(FdlElement {
            n: n as u8,
            clauses: vec![1 << (i - 1)],
        })
    }

    /// The single-clause element `⋁_{j ∈ mask} w_j` (bottom for `mask = 0`).
    pub fn join_of_generators(n: usize, mask: u32) -> Result<Self> {
        Self::canonicalize(n, [mask])
    }

    pub fn arity(&self) -> usize {
        self.n as usize
    }

    /// Clause masks; bit `j - 1` set means `w_j` occurs in the clause.
    pub fn clauses(&self) -> &[u32] {
        &self.clauses
    }

    pub fn is_top(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn is_bottom(&self) -> bool {
        self.clauses == [0]
    }

    fn same_arity(&self, other: &FdlElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            });
        }
        Ok(())
    }

    /// `self <= other` iff every clause of `other` contains a clause of `self`.
    pub fn leq(&self, other: &FdlElement) -> Result<bool> {
        self.same_arity(other)?;
        Ok(self.leq_unchecked(other))
    }

    fn leq_unchecked(&self, other: &FdlElement) -> bool {
        other
            .clauses
            .iter()
            .all(|&j| self.clauses.iter().any(|&i| i & !j == 0))
    }

    pub fn meet(&self, other: &FdlElement) -> Result<FdlElement> {
        self.same_arity(other)?;
        Ok(self.meet_unchecked(other))
    }

    fn meet_unchecked(&self, other: &FdlElement) -> FdlElement {
        let mut all = self.clauses.clone();
        all.extend_from_slice(&other.clauses);
        FdlElement {
            n: self.n,
            clauses: reduce(all),
        }
    }

    pub fn join(&self, other: &FdlElement) -> Result<FdlElement> {
        self.same_arity(other)?;
        Ok(self.join_unchecked(other))
    }

    fn join_unchecked(&self, other: &FdlElement) -> FdlElement {
        let mut all = Vec::with_capacity(self.clauses.len() * other.clauses.len());
        for &a in &self.clauses {
            for &b in &other.clauses {
                all.push(a | b);
            }
        }
        FdlElement {
            n: self.n,
            clauses: reduce(all),
        }
    }

    /// Evaluates the CNF with `w_i := x_i`.
    pub fn eval(&self, x: Point) -> Result<bool> {
        if x.arity() != self.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: x.arity(),
            });
        }
        Ok(self.eval_bits(x.bits()))
    }

    fn eval_bits(&self, bits: u32) -> bool {
        self.clauses.iter().all(|&c| c & bits != 0)
    }

    /// The true-set `{x : eval(x) = 1}`.
    pub fn to_up_set(&self) -> UpSet {
        let n = self.arity();
        let members = BitSet::from_indices(
            cube_size(n),
            (0..cube_size(n)).filter(|&x| self.eval_bits(x as u32)),
        );
        UpSet::new_unchecked(n, members)
    }

    /// Parses `^` (meet), `v` (join), `w1..wn`, `0`, `1` and parentheses.
    /// Meet binds tighter than join. When `n` is `None` the arity is the
    /// largest generator index mentioned (at least 1).
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let tokens = tokenize(text)?;
        let max_index = tokens
            .iter()
            .filter_map(|t| match t.kind {
                Tok::Gen(i) => Some(i),
                _ => None,
            })
            .max()
            .unwrap_or(1);
        let n = n.unwrap_or(max_index);
        check_arity(n)?;
        if max_index > n {
            return Err(Error::Malformed(format!(
                "generator w{max_index} exceeds arity {n}"
            )));
        }
        let mut parser = Parser {
            tokens: &tokens,
            pos: 0,
            n,
            text,
        };
        let e = parser.join_expr()?;
        if let Some(t) = tokens.get(parser.pos) {
            return Err(Error::Malformed(format!(
                "unexpected token at position {} in `{text}`",
                t.at
            )));
        }
        Ok(e)
    }
}

impl fmt::Display for FdlElement {
    /// Canonical text: `1`, `0`, or clauses joined by ` ^ `, each clause
    /// `w_i v w_j`, parenthesised when it has several generators and the
    /// element has several clauses.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_top() {
            return f.write_str("1");
        }
        if self.is_bottom() {
            return f.write_str("0");
        }
        let many = self.clauses.len() > 1;
        for (k, &c) in self.clauses.iter().enumerate() {
            if k > 0 {
                f.write_str(" ^ ")?;
            }
            let gens: Vec<String> = (0..self.arity())
                .filter(|j| c >> j & 1 == 1)
                .map(|j| format!("w{}", j + 1))
                .collect();
            if many && gens.len() > 1 {
                write!(f, "({})", gens.join(" v "))?;
            } else {
                f.write_str(&gens.join(" v "))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FdlElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FdlElement[n={}]({self})", self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Gen(usize),
    Zero,
    One,
    Meet,
    Join,
    Open,
    Close,
}

struct Token {
    kind: Tok,
    at: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (at, c) = chars[i];
        let kind = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '^' | '∧' => Tok::Meet,
            'v' | '∨' => Tok::Join,
            '(' => Tok::Open,
            ')' => Tok::Close,
            '0' => Tok::Zero,
            '1' => Tok::One,
            'w' => {
                let start = i + 1;
                let mut end = start;
                while end < chars.len() && chars[end].1.is_ascii_digit() {
                    end += 1;
                }
                let digits: String = chars[start..end].iter().map(|&(_, c)| c).collect();
                let index: usize = digits.parse().map_err(|_| {
                    Error::Malformed(format!(
                        "generator without index at position {at} in `{text}`"
                    ))
                })?;
                if index == 0 {
                    return Err(Error::Malformed(format!("generator w0 at position {at}")));
                }
                out.push(Token {
                    kind: Tok::Gen(index),
                    at,
                });
                i = end;
                continue;
            }
            other => {
                return Err(Error::Malformed(format!(
                    "unexpected character `{other}` at position {at} in `{text}`"
                )))
            }
        };
        out.push(Token { kind, at });
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    n: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<Tok> {
        self.tokens.get(self.pos).map(|t| t.kind)
    }

    fn error_here(&self, what: &str) -> Error {
        let at = self
            .tokens
            .get(self.pos)
            .map(|t| t.at)
            .unwrap_or(self.text.len());
        Error::Malformed(format!("{what} at position {at} in `{}`", self.text))
    }

    fn join_expr(&mut self) -> Result<FdlElement> {
        let mut acc = self.meet_expr()?;
        while self.peek() == Some(Tok::Join) {
            self.pos += 1;
            let rhs = self.meet_expr()?;
            acc = acc.join_unchecked(&rhs);
        }
        Ok(acc)
    }

    fn meet_expr(&mut self) -> Result<FdlElement> {
        let mut acc = self.atom()?;
        while self.peek() == Some(Tok::Meet) {
            self.pos += 1;
            let rhs = self.atom()?;
            acc = acc.meet_unchecked(&rhs);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<FdlElement> {
        let tok = self
            .peek()
            .ok_or_else(|| self.error_here("unexpected end"))?;
        self.pos += 1;
        match tok {
            Tok::Gen(i) => FdlElement::generator(self.n, i),
            Tok::Zero => FdlElement::bottom(self.n),
            Tok::One => FdlElement::top(self.n),
            Tok::Open => {
                let e = self.join_expr()?;
                if self.peek() != Some(Tok::Close) {
                    return Err(self.error_here("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            _ => {
                self.pos -= 1;
                Err(self.error_here("expected an operand"))
            }
        }
    }
}

/// Every canonical element for `n` generators, enumerated as antichains of
/// clause masks by backtracking (independently of the up-set enumeration).
pub fn enumerate_elements(n: usize) -> Result<Vec<FdlElement>> {
    check_enumeration_arity(n)?;
    let masks: Vec<u32> = (0..cube_size(n) as u32).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();

    fn extend(
        n: usize,
        start: usize,
        masks: &[u32],
        chosen: &mut Vec<u32>,
        out: &mut Vec<FdlElement>,
    ) {
        let mut clauses = chosen.clone();
        clauses.sort_unstable();
        out.push(FdlElement {
            n: n as u8,
            clauses,
        });
        for k in start..masks.len() {
            let c = masks[k];
            let comparable = chosen.iter().any(|&d| d & !c == 0 || c & !d == 0);
            if !comparable {
                chosen.push(c);
                extend(n, k + 1, masks, chosen, out);
                chosen.pop();
            }
        }
    }

    extend(n, 0, &masks, &mut chosen, &mut out);
    Ok(out)
}

/// The free distributive lattice on `n` generators, used symbolically.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreeDistributiveLattice {
    n: usize,
}

impl FreeDistributiveLattice {
    pub fn new(n: usize) -> Result<Self> {
        check_arity(n)?;
        Ok(FreeDistributiveLattice { n })
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> Vec<FdlElement> {
        (1..=self.n)
            .map(|i| FdlElement::generator(self.n, i).expect("index in range"))
            .collect()
    }

    /// Materializes the lattice as a [`FiniteLattice`] (Dedekind-number many
    /// elements). Labels are canonical texts.
    pub fn materialize(&self) -> Result<MaterializedFdl> {
        let elements = enumerate_elements(self.n)?;
        let size = elements.len();
        let sets: Vec<u64> = elements
            .iter()
            .map(|e| e.to_up_set().members().low_word())
            .collect();
        let index: HashMap<u64, usize> = sets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let up: Vec<BitSet> = sets
            .iter()
            .map(|&a| BitSet::from_indices(size, (0..size).filter(|&b| a & !sets[b] == 0)))
            .collect();
        let labels = elements.iter().map(|e| e.to_string()).collect();
        let lattice = FiniteLattice::from_operations(
            labels,
            up,
            |a, b| index[&(sets[a] & sets[b])],
            |a, b| index[&(sets[a] | sets[b])],
        );
        Ok(MaterializedFdl {
            lattice,
            elements,
            index: index.into_iter().collect(),
        })
    }
}

impl Lattice for FreeDistributiveLattice {
    type Elem = FdlElement;

    fn contains(&self, a: &FdlElement) -> bool {
        a.arity() == self.n
    }

    fn bottom(&self) -> FdlElement {
        FdlElement::bottom(self.n).expect("arity checked")
    }

    fn top(&self) -> FdlElement {
        FdlElement::top(self.n).expect("arity checked")
    }

    fn leq(&self, a: &FdlElement, b: &FdlElement) -> bool {
        a.leq_unchecked(b)
    }

    fn meet(&self, a: &FdlElement, b: &FdlElement) -> FdlElement {
        a.meet_unchecked(b)
    }

    fn join(&self, a: &FdlElement, b: &FdlElement) -> FdlElement {
        a.join_unchecked(b)
    }
}

/// A materialized free distributive lattice with its element table.
#[derive(Clone, Debug)]
pub struct MaterializedFdl {
    pub lattice: FiniteLattice,
    pub elements: Vec<FdlElement>,
    index: HashMap<u64, usize>,
}

impl MaterializedFdl {
    pub fn index_of(&self, e: &FdlElement) -> Option<usize> {
        if e.arity() != self.elements[0].arity() {
            return None;
        }
        self.index.get(&e.to_up_set().members().low_word()).copied()
    }
}
