//! Deciding whether a closure system of up-sets on `{0,1}^n` is the cut
//! collection of a linear combination `x ↦ ⋁ (w_i · x_i)` over some lattice.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::boolean_domain::{self, cube_size, format_point_set, parse_point_set, Point};
use crate::closure_system::{closure_violation, ClosureSystem, Domain};
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::lattice_valued::{synthesize_from_closure_system, LValuedFunction};
use crate::threshold::linear_combination_function;

/// Checks that `members` is a closure system on `{0,1}^n` made of up-sets,
/// naming the first offending member or pair.
pub fn validate_closure_system_of_up_sets(n: usize, members: Vec<BitSet>) -> Result<ClosureSystem> {
    let domain = Domain::cube(n)?;
    for (i, m) in members.iter().enumerate() {
        if m.len() != cube_size(n) {
            return Err(Error::InvalidClosureSystem(format!(
                "member #{i} has the wrong size for the {n}-cube"
            )));
        }
        if !boolean_domain::is_up_set(n, m)? {
            return Err(Error::InvalidClosureSystem(format!(
                "member {} is not an up-set",
                domain.subset_label(m)
            )));
        }
    }
    if let Some(v) = closure_violation(&domain, &members) {
        return Err(Error::InvalidClosureSystem(v.describe(&domain, &members)));
    }
    Ok(ClosureSystem::from_sorted_unchecked(domain, members))
}

/// Wire form of a closure system of up-sets: members as lists of bit strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureSystemSpec {
    pub n: usize,
    pub members: Vec<Vec<String>>,
}

impl ClosureSystemSpec {
    pub fn to_system(&self) -> Result<ClosureSystem> {
        let members = self
            .members
            .iter()
            .map(|m| parse_point_set(self.n, m))
            .collect::<Result<Vec<_>>>()?;
        validate_closure_system_of_up_sets(self.n, members)
    }

    pub fn from_system(system: &ClosureSystem) -> Result<Self> {
        let n = system.domain().cube_arity().ok_or(Error::NotCube)?;
        Ok(ClosureSystemSpec {
            n,
            members: system
                .members()
                .iter()
                .map(|m| format_point_set(n, m))
                .collect(),
        })
    }
}

fn require_up_set_system(system: &ClosureSystem) -> Result<usize> {
    let n = system.domain().cube_arity().ok_or(Error::NotCube)?;
    if !system.consists_of_up_sets() {
        return Err(Error::InvalidClosureSystem(
            "members must be up-sets of the cube".into(),
        ));
    }
    Ok(n)
}

/// `x̄`: the least member containing `x`.
pub fn closure_of_point(system: &ClosureSystem, x: Point) -> Result<BitSet> {
    let n = system.domain().cube_arity().ok_or(Error::NotCube)?;
    if x.arity() != n {
        return Err(Error::ArityMismatch {
            left: n,
            right: x.arity(),
        });
    }
    Ok(system.closure_of_element(x.index()))
}

/// Outcome of one of the two pairwise conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionOutcome {
    pub holds: bool,
    /// The least failing pair in `(x, y)` index order.
    pub counterexample: Option<(Point, Point)>,
}

impl ConditionOutcome {
    fn from_counterexample(counterexample: Option<(Point, Point)>) -> Self {
        ConditionOutcome {
            holds: counterexample.is_none(),
            counterexample,
        }
    }
}

/// Both representability conditions for a closure system of up-sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conditions {
    /// `x̄ ⊆ ȳ` implies `closure(x ∨ y) = x̄`.
    pub condition_i: ConditionOutcome,
    /// `closure(x ∨ y) = x̄ ∩ ȳ`.
    pub condition_ii: ConditionOutcome,
}

pub fn check_conditions(system: &ClosureSystem) -> Result<Conditions> {
    let n = require_up_set_system(system)?;
    let size = cube_size(n);
    let bars: Vec<BitSet> = (0..size).map(|x| system.closure_of_element(x)).collect();
    let pt = |i| Point::from_index(n, i);

    let mut first_i = None;
    let mut first_ii = None;
    'scan: for x in 0..size {
        for y in 0..size {
            let joined = &bars[x | y];
            if first_i.is_none() && bars[x].is_subset(&bars[y]) && *joined != bars[x] {
                first_i = Some((pt(x), pt(y)));
            }
            if first_ii.is_none() && *joined != bars[x].intersection(&bars[y]) {
                first_ii = Some((pt(x), pt(y)));
            }
            if first_i.is_some() && first_ii.is_some() {
                break 'scan;
            }
        }
    }
    let conditions = Conditions {
        condition_i: ConditionOutcome::from_counterexample(first_i),
        condition_ii: ConditionOutcome::from_counterexample(first_ii),
    };
    if conditions.condition_i.holds != conditions.condition_ii.holds {
        return Err(Error::Inconsistent(format!(
            "condition (i) = {} but condition (ii) = {}",
            conditions.condition_i.holds, conditions.condition_ii.holds
        )));
    }
    Ok(conditions)
}

/// The first point where `μ(x) ≠ ⋁{μ(a_i) : x_i = 1}` (the origin first, where
/// the join is empty).
fn zero_join_violation(mu: &LValuedFunction) -> Result<Option<Point>> {
    let n = mu.domain().cube_arity().ok_or(Error::NotCube)?;
    let lattice = mu.codomain();
    let atoms: Vec<usize> = (0..n).map(|i| mu.value(1 << i)).collect();
    for x in 0..cube_size(n) {
        let expected = lattice.join_all((0..n).filter(|i| x >> i & 1 == 1).map(|i| atoms[i]));
        if mu.value(x) != expected {
            return Ok(Some(Point::from_index(n, x)));
        }
    }
    Ok(None)
}

/// Whether `μ` maps the origin to bottom and every join of atoms to the join
/// of their images.
pub fn is_zero_join_hom(mu: &LValuedFunction) -> Result<bool> {
    Ok(zero_join_violation(mu)?.is_none())
}

/// `w_i = μ(a_i)`; succeeds exactly for 0–∨–homomorphisms.
pub fn extract_weights(mu: &LValuedFunction) -> Result<Vec<usize>> {
    if let Some(p) = zero_join_violation(mu)? {
        return Err(Error::NotZeroJoinHom {
            point: p.to_string(),
        });
    }
    let n = mu.domain().cube_arity().ok_or(Error::NotCube)?;
    Ok((0..n).map(|i| mu.value(1 << i)).collect())
}

/// A linear-combination representation of a closure system.
#[derive(Clone, Debug)]
pub struct Representation {
    /// The closure system ordered dually to inclusion.
    pub lattice: FiniteLattice,
    pub system: ClosureSystem,
    /// Weight `w_i` as an element index of `lattice` (= member of `system`).
    pub weights: Vec<usize>,
}

impl Representation {
    pub fn function(&self) -> LValuedFunction {
        linear_combination_function(&self.lattice, &self.weights).expect("weights in range")
    }
}

#[derive(Clone, Debug)]
pub struct RepresentabilityReport {
    pub conditions: Conditions,
    pub representation: Option<Representation>,
}

impl RepresentabilityReport {
    pub fn is_representable(&self) -> bool {
        self.representation.is_some()
    }
}

/// Builds `μ(x) = x̄` into the closure system, extracts its atom weights and
/// confirms that the linear combination has exactly `system` as cuts. When
/// the conditions fail the report carries their counterexamples instead.
pub fn synthesize_linear_representation(system: &ClosureSystem) -> Result<RepresentabilityReport> {
    let conditions = check_conditions(system)?;
    if !conditions.condition_ii.holds {
        return Ok(RepresentabilityReport {
            conditions,
            representation: None,
        });
    }
    let mu = synthesize_from_closure_system(system);
    let weights = extract_weights(&mu).map_err(|e| {
        Error::Inconsistent(format!(
            "conditions hold but the closure map is not a homomorphism: {e}"
        ))
    })?;
    let representation = Representation {
        lattice: mu.codomain().clone(),
        system: system.clone(),
        weights,
    };
    let nu = representation.function();
    if nu.values() != mu.values() || nu.cut_collection() != *system {
        return Err(Error::Inconsistent(
            "linear combination does not reproduce the closure system".into(),
        ));
    }
    Ok(RepresentabilityReport {
        conditions,
        representation: Some(representation),
    })
}
