//! Exact feasibility of systems `a · x >= b` by Fourier–Motzkin elimination.
//!
//! Rows carry integer coefficients and are normalized by their content, so
//! the arithmetic stays exact without rationals until back-substitution.
//! Derived rows remember which input rows they combine; after `k`
//! eliminations a row built from more than `k + 1` inputs is redundant
//! (Chernikov's rule) and is dropped.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::bitset::BitSet;

/// The inequality `coeffs · x >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inequality {
    pub coeffs: Vec<BigInt>,
    pub rhs: BigInt,
}

impl Inequality {
    pub fn new(coeffs: Vec<i64>, rhs: i64) -> Self {
        Inequality {
            coeffs: coeffs.into_iter().map(BigInt::from).collect(),
            rhs: BigInt::from(rhs),
        }
    }

    pub fn is_satisfied_by(&self, x: &[BigRational]) -> bool {
        let lhs: BigRational = self
            .coeffs
            .iter()
            .zip(x)
            .map(|(a, v)| BigRational::from_integer(a.clone()) * v)
            .sum();
        lhs >= BigRational::from_integer(self.rhs.clone())
    }
}

#[derive(Clone, Debug)]
struct Row {
    coeffs: Vec<BigInt>,
    rhs: BigInt,
    history: BitSet,
}

impl Row {
    fn normalize(mut self) -> Row {
        let mut g = self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            return self;
        }
        // Content over coefficients and rhs together, so rows stay integral.
        g = g.gcd(&self.rhs);
        if !g.is_one() {
            for c in &mut self.coeffs {
                *c = &*c / &g;
            }
            self.rhs = &self.rhs / &g;
        }
        self
    }
}

/// Solves `constraints` over `num_vars` real variables. Returns a rational
/// solution when the system is feasible.
pub fn solve(num_vars: usize, constraints: &[Inequality]) -> Option<Vec<BigRational>> {
    let inputs = constraints.len();
    let mut rows: Vec<Row> = constraints
        .iter()
        .enumerate()
        .map(|(i, c)| {
            assert_eq!(
                c.coeffs.len(),
                num_vars,
                "constraint {i} has the wrong width"
            );
            Row {
                coeffs: c.coeffs.clone(),
                rhs: c.rhs.clone(),
                history: BitSet::from_indices(inputs.max(1), [i]),
            }
            .normalize()
        })
        .collect();
    rows = prune(rows, usize::MAX)?;

    let mut remaining: Vec<usize> = (0..num_vars).collect();
    // (variable, system in which it was eliminated)
    let mut stages: Vec<(usize, Vec<Row>)> = Vec::with_capacity(num_vars);
    for step in 0..num_vars {
        let var = *remaining
            .iter()
            .min_by_key(|&&v| {
                let pos = rows.iter().filter(|r| r.coeffs[v].is_positive()).count();
                let neg = rows.iter().filter(|r| r.coeffs[v].is_negative()).count();
                (pos * neg, v)
            })
            .expect("variables remain");
        remaining.retain(|&v| v != var);

        let mut next = Vec::new();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for r in &rows {
            if r.coeffs[var].is_positive() {
                pos.push(r);
            } else if r.coeffs[var].is_negative() {
                neg.push(r);
            } else {
                next.push(r.clone());
            }
        }
        for p in &pos {
            for q in &neg {
                let history = p.history.union(&q.history);
                if history.count() > step + 2 {
                    continue;
                }
                let a = &p.coeffs[var];
                let b = -&q.coeffs[var];
                let coeffs = p
                    .coeffs
                    .iter()
                    .zip(&q.coeffs)
                    .map(|(pc, qc)| &b * pc + a * qc)
                    .collect();
                let rhs = &b * &p.rhs + a * &q.rhs;
                next.push(
                    Row {
                        coeffs,
                        rhs,
                        history,
                    }
                    .normalize(),
                );
            }
        }
        stages.push((var, rows));
        rows = prune(next, step + 2)?;
    }

    let mut values = vec![BigRational::zero(); num_vars];
    let mut known = vec![false; num_vars];
    for (var, system) in stages.iter().rev() {
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<BigRational> = None;
        for r in system {
            let a = &r.coeffs[*var];
            if a.is_zero() {
                continue;
            }
            let mut rest = BigRational::from_integer(r.rhs.clone());
            for (v, c) in r.coeffs.iter().enumerate() {
                if v != *var && !c.is_zero() {
                    debug_assert!(known[v]);
                    rest -= BigRational::from_integer(c.clone()) * &values[v];
                }
            }
            let bound = rest / BigRational::from_integer(a.clone());
            if a.is_positive() {
                if lo.as_ref().is_none_or(|l| bound > *l) {
                    lo = Some(bound);
                }
            } else if hi.as_ref().is_none_or(|h| bound < *h) {
                hi = Some(bound);
            }
        }
        values[*var] = simplest_in(lo, hi);
        known[*var] = true;
    }
    debug_assert!(constraints.iter().all(|c| c.is_satisfied_by(&values)));
    Some(values)
}

/// Drops duplicate and dominated rows and rows with too long a history;
/// returns `None` on a contradictory constant row.
fn prune(rows: Vec<Row>, max_history: usize) -> Option<Vec<Row>> {
    let mut best: HashMap<Vec<BigInt>, Row> = HashMap::new();
    let mut order = Vec::new();
    for r in rows {
        if r.coeffs.iter().all(Zero::is_zero) {
            if r.rhs.is_positive() {
                return None;
            }
            continue;
        }
        if r.history.count() > max_history {
            continue;
        }
        match best.get_mut(&r.coeffs) {
            Some(existing) => {
                if r.rhs > existing.rhs {
                    *existing = r;
                }
            }
            None => {
                order.push(r.coeffs.clone());
                best.insert(r.coeffs.clone(), r);
            }
        }
    }
    Some(
        order
            .into_iter()
            .map(|k| best.remove(&k).expect("present"))
            .collect(),
    )
}

/// A value in `[lo, hi]` of least magnitude, preferring integers.
fn simplest_in(lo: Option<BigRational>, hi: Option<BigRational>) -> BigRational {
    let zero = BigRational::zero();
    match (lo, hi) {
        (None, None) => zero,
        (Some(l), hi) if l.is_positive() => {
            let c = l.ceil();
            match hi {
                Some(h) if c > h => l,
                _ => c,
            }
        }
        (lo, Some(h)) if h.is_negative() => {
            let f = h.floor();
            match lo {
                Some(l) if f < l => h,
                _ => f,
            }
        }
        _ => zero,
    }
}
