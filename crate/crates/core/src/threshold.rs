//! Boolean functions, lattice-induced threshold functions, the universal
//! function `β̄` over the free distributive lattice, and classical
//! (real-weight) threshold recognition.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::bitset::BitSet;
use crate::boolean_domain::{
    self, check_arity, check_enumeration_arity, cube_size, minimal_elements, Point, UpSet,
};
use crate::closure_system::Domain;
use crate::error::{Error, Result};
use crate::fourier_motzkin::{self, Inequality};
use crate::free_distributive_lattice::{FdlElement, FreeDistributiveLattice, MaterializedFdl};
use crate::lattice::Lattice;
use crate::lattice_valued::LValuedFunction;

/// A map `{0,1}^n → {0,1}` stored as its truth table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: u8,
    truth: BitSet,
}

impl BooleanFunction {
    /// `truth` has one bit per point, indexed by the point's coordinate word.
    pub fn new(n: usize, truth: BitSet) -> Result<Self> {
        check_arity(n)?;
        if truth.len() != cube_size(n) {
            return Err(Error::SizeMismatch {
                expected: cube_size(n),
                got: truth.len(),
            });
        }
        Ok(BooleanFunction { n: n as u8, truth })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(Point) -> bool) -> Result<Self> {
        let truth = BitSet::from_indices(
            cube_size(n),
            Point::all(n)?.filter(|&x| f(x)).map(|x| x.index()),
        );
        Self::new(n, truth)
    }

    /// The characteristic function of an up-set.
    pub fn from_up_set(set: &UpSet) -> Self {
        BooleanFunction {
            n: set.arity() as u8,
            truth: set.members().clone(),
        }
    }

    pub fn constant(n: usize, value: bool) -> Result<Self> {
        let truth = if value {
            BitSet::full(cube_size(n))
        } else {
            BitSet::new(cube_size(n))
        };
        Self::new(n, truth)
    }

    pub fn arity(&self) -> usize {
        self.n as usize
    }

    pub fn value(&self, x: Point) -> bool {
        x.arity() == self.arity() && self.truth.contains(x.index())
    }

    pub fn true_set(&self) -> &BitSet {
        &self.truth
    }

    /// The `0`/`1` string with position `k` holding `f` at the point with bits `k`.
    pub fn to_table_string(&self) -> String {
        (0..cube_size(self.arity()))
            .map(|k| if self.truth.contains(k) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BooleanFunction[n={}]({})",
            self.n,
            self.to_table_string()
        )
    }
}

/// `w · x`: `w` when `x = 1`, bottom when `x = 0`.
pub fn scalar_mult<L: Lattice>(lattice: &L, w: &L::Elem, x: bool) -> L::Elem {
    if x {
        w.clone()
    } else {
        lattice.bottom()
    }
}

/// `⋁ (w_i · x_i)`.
pub fn linear_combination<L: Lattice>(
    lattice: &L,
    weights: &[L::Elem],
    x: Point,
) -> Result<L::Elem> {
    if weights.len() != x.arity() {
        return Err(Error::ArityMismatch {
            left: weights.len(),
            right: x.arity(),
        });
    }
    Ok(weights
        .iter()
        .enumerate()
        .fold(lattice.bottom(), |acc, (i, w)| {
            lattice.join(&acc, &scalar_mult(lattice, w, x.coord(i + 1)))
        }))
}

/// The L-valued function `x ↦ ⋁ (w_i · x_i)` on `{0,1}^n` for a finite lattice.
pub fn linear_combination_function(
    lattice: &crate::lattice::FiniteLattice,
    weights: &[usize],
) -> Result<LValuedFunction> {
    let n = weights.len();
    check_arity(n)?;
    if let Some(&w) = weights.iter().find(|&&w| w >= lattice.len()) {
        return Err(Error::UnknownElement(format!("#{w}")));
    }
    LValuedFunction::from_fn(Domain::Cube(n), lattice.clone(), |x| {
        linear_combination(lattice, weights, Point::from_index(n, x)).expect("arity matches")
    })
}

/// Weights `w_1..w_n` and threshold `t` in a lattice.
#[derive(Clone, Debug, PartialEq)]
pub struct ThresholdRepr<L: Lattice> {
    lattice: L,
    weights: Vec<L::Elem>,
    threshold: L::Elem,
}

impl<L: Lattice> ThresholdRepr<L> {
    pub fn new(lattice: L, weights: Vec<L::Elem>, threshold: L::Elem) -> Result<Self> {
        check_arity(weights.len())?;
        for e in weights.iter().chain(std::iter::once(&threshold)) {
            if !lattice.contains(e) {
                return Err(Error::UnknownElement(format!("{e:?}")));
            }
        }
        Ok(ThresholdRepr {
            lattice,
            weights,
            threshold,
        })
    }

    pub fn arity(&self) -> usize {
        self.weights.len()
    }

    pub fn lattice(&self) -> &L {
        &self.lattice
    }

    pub fn weights(&self) -> &[L::Elem] {
        &self.weights
    }

    pub fn threshold(&self) -> &L::Elem {
        &self.threshold
    }

    /// `f(x) = 1` iff `⋁ (w_i · x_i) >= t`.
    pub fn eval(&self, x: Point) -> Result<bool> {
        let lc = linear_combination(&self.lattice, &self.weights, x)?;
        Ok(self.lattice.leq(&self.threshold, &lc))
    }

    /// The induced Boolean function.
    pub fn to_boolean_function(&self) -> BooleanFunction {
        BooleanFunction::from_fn(self.arity(), |x| self.eval(x).expect("arity matches"))
            .expect("arity checked")
    }
}

/// A pair `x <= y` with `f(x) = 1`, `f(y) = 0`, found by comparing all pairs.
pub fn isotonicity_violation(f: &BooleanFunction) -> Option<(Point, Point)> {
    let n = f.arity();
    for x in f.true_set().iter() {
        for y in 0..cube_size(n) {
            if x & !y == 0 && !f.true_set().contains(y) {
                return Some((Point::from_index(n, x), Point::from_index(n, y)));
            }
        }
    }
    None
}

/// Whether `f` is monotone. Checks all comparable pairs and, separately,
/// upward closure of the true-set; the two must agree.
pub fn is_isotone(f: &BooleanFunction) -> Result<bool> {
    let direct = isotonicity_violation(f).is_none();
    let by_up_set = boolean_domain::is_up_set(f.arity(), f.true_set())?;
    if direct != by_up_set {
        return Err(Error::Inconsistent(format!(
            "pairwise monotonicity ({direct}) disagrees with up-set test ({by_up_set})"
        )));
    }
    Ok(direct)
}

/// Threshold representation over the free distributive lattice: weights are
/// the generators and `t = ⋀_k ⋁_{j ∈ I_k} w_j` with `I_k` the supports of the
/// minimal true points.
pub fn synthesize_threshold(f: &BooleanFunction) -> Result<ThresholdRepr<FreeDistributiveLattice>> {
    if let Some((lower, upper)) = isotonicity_violation(f) {
        return Err(Error::NotIsotone {
            lower: lower.to_string(),
            upper: upper.to_string(),
        });
    }
    let n = f.arity();
    let supports = minimal_elements(n, f.true_set())?
        .into_iter()
        .map(|m| m.bits());
    let threshold = FdlElement::canonicalize(n, supports)?;
    let lattice = FreeDistributiveLattice::new(n)?;
    let weights = lattice.generators();
    ThresholdRepr::new(lattice, weights, threshold)
}

/// `β̄(x) = ⋁ (w_i · x_i)` with generator weights: the single clause
/// `support(x)`, or bottom at the origin.
pub fn beta_bar_value(x: Point) -> FdlElement {
    FdlElement::join_of_generators(x.arity(), x.bits()).expect("point fits its arity")
}

/// `β̄` on the whole cube, symbolically.
pub fn beta_bar_symbolic(n: usize) -> Result<Vec<FdlElement>> {
    Ok(Point::all(n)?.map(beta_bar_value).collect())
}

/// `β̄` as an L-valued function into the materialized free distributive
/// lattice (for `n <= 5`).
#[derive(Clone, Debug)]
pub struct BetaBar {
    pub function: LValuedFunction,
    pub fdl: MaterializedFdl,
}

pub fn beta_bar(n: usize) -> Result<BetaBar> {
    check_enumeration_arity(n)?;
    let fdl = FreeDistributiveLattice::new(n)?.materialize()?;
    let function = LValuedFunction::from_fn(Domain::Cube(n), fdl.lattice.clone(), |x| {
        fdl.index_of(&beta_bar_value(Point::from_index(n, x)))
            .expect("β̄ values are lattice elements")
    })?;
    Ok(BetaBar { function, fdl })
}

/// Rational weights and threshold with `Σ w_i x_i >= t` exactly on true points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalWitness {
    pub weights: Vec<BigRational>,
    pub threshold: BigRational,
}

impl ClassicalWitness {
    pub fn weighted_sum(&self, x: Point) -> BigRational {
        self.weights
            .iter()
            .enumerate()
            .filter(|(i, _)| x.coord(i + 1))
            .map(|(_, w)| w.clone())
            .sum()
    }

    /// Checks the witness against `f`: true points reach `t`, false points
    /// stay at most `t - 1`.
    pub fn separates(&self, f: &BooleanFunction) -> bool {
        let one = BigRational::from_integer(BigInt::from(1));
        Point::all(f.arity()).expect("valid arity").all(|x| {
            let s = self.weighted_sum(x);
            if f.value(x) {
                s >= self.threshold
            } else {
                s <= &self.threshold - &one
            }
        })
    }

    pub fn has_nonnegative_weights(&self) -> bool {
        self.weights.iter().all(|w| !w.is_negative())
    }
}

/// Renders a rational as `p/q`, or `p` when integral.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for ClassicalWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ws: Vec<String> = self.weights.iter().map(format_rational).collect();
        write!(
            f,
            "weights = ({}), t = {}",
            ws.join(", "),
            format_rational(&self.threshold)
        )
    }
}

/// Decides whether `f` is a classical threshold function, returning a
/// witness when it is. Variables are `w_1..w_n, t`; the false side uses a
/// margin of 1.
pub fn is_classical_threshold(f: &BooleanFunction) -> Result<Option<ClassicalWitness>> {
    let n = f.arity();
    check_enumeration_arity(n)?;
    let constraints: Vec<Inequality> = Point::all(n)?
        .map(|x| {
            let sign: i64 = if f.value(x) { 1 } else { -1 };
            let mut coeffs: Vec<i64> = (1..=n).map(|i| if x.coord(i) { sign } else { 0 }).collect();
            coeffs.push(-sign);
            Inequality::new(coeffs, if sign > 0 { 0 } else { 1 })
        })
        .collect();
    let Some(mut solution) = fourier_motzkin::solve(n + 1, &constraints) else {
        return Ok(None);
    };
    let threshold = solution.pop().unwrap_or_else(BigRational::zero);
    let witness = ClassicalWitness {
        weights: solution,
        threshold,
    };
    if !witness.separates(f) {
        return Err(Error::Inconsistent(format!(
            "elimination produced a non-separating witness {witness}"
        )));
    }
    Ok(Some(witness))
}
