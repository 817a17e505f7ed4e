//! Lattice-valued functions `μ: B → L`, their cuts, the induced equivalence
//! on `L`, the quotient lattice and the canonical representation `μ̂`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::boolean_domain;
use crate::closure_system::{ClosureSystem, Domain};
use crate::error::{Error, Result};
use crate::lattice::{FiniteLattice, LatticeSpec};

/// A total map from a finite domain into a finite lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LValuedFunction {
    domain: Domain,
    codomain: FiniteLattice,
    values: Vec<usize>,
}

/// JSON form: `{ "domain": [...], "lattice": {...}, "values": {label: element} }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LValuedFunctionSpec {
    pub domain: Vec<String>,
    pub lattice: LatticeSpec,
    pub values: BTreeMap<String, String>,
}

impl LValuedFunction {
    pub fn new(domain: Domain, codomain: FiniteLattice, values: Vec<usize>) -> Result<Self> {
        if values.len() != domain.size() {
            return Err(Error::SizeMismatch {
                expected: domain.size(),
                got: values.len(),
            });
        }
        if let Some(&bad) = values.iter().find(|&&v| v >= codomain.len()) {
            return Err(Error::UnknownElement(format!("#{bad}")));
        }
        Ok(LValuedFunction {
            domain,
            codomain,
            values,
        })
    }

    pub fn from_fn(
        domain: Domain,
        codomain: FiniteLattice,
        f: impl FnMut(usize) -> usize,
    ) -> Result<Self> {
        let values = (0..domain.size()).map(f).collect();
        Self::new(domain, codomain, values)
    }

    pub fn from_spec(spec: &LValuedFunctionSpec) -> Result<Self> {
        let lattice = FiniteLattice::from_spec(&spec.lattice)?;
        let domain = Domain::from_label_list(spec.domain.clone())?;
        let mut values = vec![usize::MAX; domain.size()];
        for (label, element) in &spec.values {
            let x = domain.index_of(label)?;
            values[x] = lattice.index_of(element)?;
        }
        if let Some(x) = values.iter().position(|&v| v == usize::MAX) {
            return Err(Error::Malformed(format!(
                "no value given for domain element `{}`",
                domain.label(x)
            )));
        }
        Self::new(domain, lattice, values)
    }

    pub fn to_spec(&self) -> LValuedFunctionSpec {
        LValuedFunctionSpec {
            domain: self.domain.labels_vec(),
            lattice: self.codomain.to_spec(),
            values: (0..self.domain.size())
                .map(|x| {
                    (
                        self.domain.label(x),
                        self.codomain.label(self.values[x]).to_string(),
                    )
                })
                .collect(),
        }
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteLattice {
        &self.codomain
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn value(&self, x: usize) -> usize {
        self.values[x]
    }

    /// `μ(B)` as a subset of the codomain.
    pub fn image(&self) -> BitSet {
        BitSet::from_indices(self.codomain.len(), self.values.iter().copied())
    }

    /// The `p`-cut `{x : μ(x) >= p}`.
    pub fn cut(&self, p: usize) -> Result<BitSet> {
        let filter = self.codomain.up_filter(p)?;
        Ok(BitSet::from_indices(
            self.domain.size(),
            (0..self.domain.size()).filter(|&x| filter.contains(self.values[x])),
        ))
    }

    /// All distinct cuts, as a closure system.
    pub fn cut_collection(&self) -> ClosureSystem {
        let cuts = (0..self.codomain.len())
            .map(|p| self.cut(p).expect("p in range"))
            .collect();
        ClosureSystem::from_sorted_unchecked(self.domain.clone(), cuts)
    }

    fn require_cube(&self) -> Result<usize> {
        self.domain.cube_arity().ok_or(Error::NotCube)
    }

    /// Direct check: `x <= y` implies `μ(x) <= μ(y)`.
    pub fn is_order_preserving(&self) -> Result<bool> {
        let n = self.require_cube()?;
        let size = boolean_domain::cube_size(n);
        Ok((0..size).all(|x| {
            (0..n).all(|i| {
                let y = x | 1 << i;
                self.codomain.leq(self.values[x], self.values[y])
            })
        }))
    }

    /// Cut-based check: every cut is an up-set of the cube.
    pub fn cuts_are_up_sets(&self) -> Result<bool> {
        let n = self.require_cube()?;
        for p in 0..self.codomain.len() {
            if !boolean_domain::is_up_set(n, &self.cut(p)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `μ` is an L-valued up-set. Both characterizations are
    /// evaluated; disagreement is reported as an internal inconsistency.
    pub fn is_l_valued_up_set(&self) -> Result<bool> {
        let direct = self.is_order_preserving()?;
        let by_cuts = self.cuts_are_up_sets()?;
        if direct != by_cuts {
            return Err(Error::Inconsistent(format!(
                "order preservation ({direct}) disagrees with cut test ({by_cuts})"
            )));
        }
        Ok(direct)
    }

    /// `↑p ∩ μ(B)`.
    pub fn filter_image(&self, p: usize) -> Result<BitSet> {
        Ok(self.codomain.up_filter(p)?.intersection(&self.image()))
    }

    /// The partition of the codomain into classes of equal cuts.
    pub fn theta_classes(&self) -> ThetaPartition {
        let size = self.codomain.len();
        let cuts: Vec<BitSet> = (0..size).map(|p| self.cut(p).expect("in range")).collect();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = vec![usize::MAX; size];
        for p in 0..size {
            if class_of[p] != usize::MAX {
                continue;
            }
            let k = classes.len();
            let members: Vec<usize> = (p..size).filter(|&q| cuts[q] == cuts[p]).collect();
            for &q in &members {
                class_of[q] = k;
            }
            classes.push(members);
        }
        ThetaPartition { classes, class_of }
    }

    /// `⋁[p]`, the greatest element of the class of `p`.
    pub fn class_supremum(&self, p: usize) -> usize {
        let theta = self.theta_classes();
        self.codomain
            .join_all(theta.classes[theta.class_of[p]].iter().copied())
    }

    /// The lattice of classes, ordered by `[p] <= [q]` iff
    /// `↑q ∩ μ(B) ⊆ ↑p ∩ μ(B)`, with the isomorphism from the cut lattice.
    pub fn quotient_lattice(&self) -> Result<Quotient> {
        let theta = self.theta_classes();
        let k = theta.classes.len();
        let reps: Vec<usize> = theta.classes.iter().map(|c| c[0]).collect();
        let images: Vec<BitSet> = reps
            .iter()
            .map(|&p| self.filter_image(p))
            .collect::<Result<_>>()?;
        let up: Vec<BitSet> = (0..k)
            .map(|a| BitSet::from_indices(k, (0..k).filter(|&b| images[b].is_subset(&images[a]))))
            .collect();
        let labels = theta
            .classes
            .iter()
            .map(|c| {
                let names: Vec<&str> = c.iter().map(|&p| self.codomain.label(p)).collect();
                format!("[{}]", names.join(","))
            })
            .collect();
        let lattice = FiniteLattice::from_order(labels, up)?;
        let cuts = self.cut_collection();
        let cut_to_class = cuts
            .members()
            .iter()
            .map(|cut| {
                reps.iter()
                    .position(|&r| self.cut(r).expect("in range") == *cut)
                    .expect("every cut comes from some class")
            })
            .collect();
        Ok(Quotient {
            lattice,
            theta,
            cut_to_class,
        })
    }

    /// `μ̂(x) = ⋂{cuts containing x}`, valued in the cut lattice ordered
    /// dually to inclusion.
    pub fn canonical_representation(&self) -> LValuedFunction {
        synthesize_from_closure_system(&self.cut_collection())
    }
}

/// The equivalence classes of "same cut" on the codomain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaPartition {
    /// Classes in order of their least element index; each class sorted.
    pub classes: Vec<Vec<usize>>,
    /// `class_of[p]` is the index of the class containing `p`.
    pub class_of: Vec<usize>,
}

/// The quotient lattice of a function together with the cut isomorphism.
#[derive(Clone, Debug)]
pub struct Quotient {
    /// Element `k` is `theta.classes[k]`.
    pub lattice: FiniteLattice,
    pub theta: ThetaPartition,
    /// `cut_to_class[i]` is the class of the `i`-th member of the cut collection.
    pub cut_to_class: Vec<usize>,
}

/// The function `x ↦ ⋂{f ∈ F : x ∈ f}` into `F` ordered dually to inclusion.
/// Its cut collection is exactly `F`.
pub fn synthesize_from_closure_system(system: &ClosureSystem) -> LValuedFunction {
    let lattice = FiniteLattice::from_closure_system(system);
    let values = (0..system.domain().size())
        .map(|x| system.closure_index_of_element(x))
        .collect();
    LValuedFunction {
        domain: system.domain().clone(),
        codomain: lattice,
        values,
    }
}
