//! Finite domains and closure systems over them.

use std::collections::HashMap;
use std::fmt;

use crate::bitset::BitSet;
use crate::boolean_domain::{self, cube_size, format_point_set, Point};
use crate::error::{Error, Result};

/// The base set of a lattice-valued function or closure system.
///
/// `Cube(n)` indexes points by their coordinate word; `Labels` is a plain
/// finite set of named elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Domain {
    Cube(usize),
    Labels(Vec<String>),
}

impl Domain {
    pub fn cube(n: usize) -> Result<Self> {
        boolean_domain::check_arity(n)?;
        Ok(Domain::Cube(n))
    }

    /// A labelled domain. Labels must be distinct and non-empty in number.
    pub fn labels<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::Malformed("domain must not be empty".into()));
        }
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if let Some(j) = seen.insert(l.as_str(), i) {
                return Err(Error::Malformed(format!(
                    "duplicate domain label `{l}` at positions {j} and {i}"
                )));
            }
        }
        Ok(Domain::Labels(labels))
    }

    /// Interprets a label list as a cube when it lists exactly the
    /// bit-strings of one length; otherwise keeps it as labels.
    pub fn from_label_list(labels: Vec<String>) -> Result<Self> {
        let Domain::Labels(labels) = Domain::labels(labels)? else {
            unreachable!()
        };
        let n = labels[0].len();
        let looks_like_cube = (1..=boolean_domain::MAX_ARITY).contains(&n)
            && labels.len() == cube_size(n)
            && labels
                .iter()
                .all(|l| l.len() == n && l.parse::<Point>().is_ok());
        if looks_like_cube {
            Ok(Domain::Cube(n))
        } else {
            Ok(Domain::Labels(labels))
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Domain::Cube(n) => cube_size(*n),
            Domain::Labels(l) => l.len(),
        }
    }

    pub fn cube_arity(&self) -> Option<usize> {
        match self {
            Domain::Cube(n) => Some(*n),
            Domain::Labels(_) => None,
        }
    }

    pub fn label(&self, i: usize) -> String {
        match self {
            Domain::Cube(n) => Point::from_index(*n, i).to_string(),
            Domain::Labels(l) => l[i].clone(),
        }
    }

    pub fn labels_vec(&self) -> Vec<String> {
        (0..self.size()).map(|i| self.label(i)).collect()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        match self {
            Domain::Cube(n) => match label.parse::<Point>() {
                Ok(p) if p.arity() == *n => Ok(p.index()),
                _ => Err(Error::UnknownDomainElement(label.to_string())),
            },
            Domain::Labels(l) => l
                .iter()
                .position(|x| x == label)
                .ok_or_else(|| Error::UnknownDomainElement(label.to_string())),
        }
    }

    /// Renders a subset as its member labels. Cube subsets come out as
    /// lexicographically sorted bit-strings, labelled ones in domain order.
    pub fn format_subset(&self, set: &BitSet) -> Vec<String> {
        match self {
            Domain::Cube(n) => format_point_set(*n, set),
            Domain::Labels(l) => set.iter().map(|i| l[i].clone()).collect(),
        }
    }

    pub fn subset_label(&self, set: &BitSet) -> String {
        format!("{{{}}}", self.format_subset(set).join(","))
    }

    pub fn parse_subset<S: AsRef<str>>(&self, items: &[S]) -> Result<BitSet> {
        let mut set = BitSet::new(self.size());
        for item in items {
            set.insert(self.index_of(item.as_ref())?);
        }
        Ok(set)
    }
}

impl fmt::Debug for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Cube(n) => write!(f, "Cube({n})"),
            Domain::Labels(l) => f.debug_tuple("Labels").field(l).finish(),
        }
    }
}

/// A family of subsets of the domain containing the whole domain and closed
/// under pairwise intersection. Members are kept sorted by bitset value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosureSystem {
    domain: Domain,
    members: Vec<BitSet>,
}

/// Why a family of sets fails to be a closure system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureViolation {
    WrongSize { member: usize },
    MissingBase,
    NotIntersectionClosed { left: usize, right: usize },
}

impl ClosureViolation {
    pub fn describe(&self, domain: &Domain, members: &[BitSet]) -> String {
        match *self {
            ClosureViolation::WrongSize { member } => {
                format!("member #{member} has the wrong size for the domain")
            }
            ClosureViolation::MissingBase => "the whole domain is not a member".to_string(),
            ClosureViolation::NotIntersectionClosed { left, right } => format!(
                "intersection of {} and {} is not a member",
                domain.subset_label(&members[left]),
                domain.subset_label(&members[right])
            ),
        }
    }
}

/// Checks the closure-system axioms on a raw family, returning the first
/// violation (members and pairs in input order).
pub fn closure_violation(domain: &Domain, members: &[BitSet]) -> Option<ClosureViolation> {
    let size = domain.size();
    if let Some(member) = members.iter().position(|m| m.len() != size) {
        return Some(ClosureViolation::WrongSize { member });
    }
    if !members.iter().any(BitSet::is_full) {
        return Some(ClosureViolation::MissingBase);
    }
    let mut sorted: Vec<&BitSet> = members.iter().collect();
    sorted.sort();
    for left in 0..members.len() {
        for right in left + 1..members.len() {
            let meet = members[left].intersection(&members[right]);
            if sorted.binary_search(&&meet).is_err() {
                return Some(ClosureViolation::NotIntersectionClosed { left, right });
            }
        }
    }
    None
}

impl ClosureSystem {
    pub fn new(domain: Domain, members: Vec<BitSet>) -> Result<Self> {
        if let Some(v) = closure_violation(&domain, &members) {
            return Err(Error::InvalidClosureSystem(v.describe(&domain, &members)));
        }
        Ok(Self::from_sorted_unchecked(domain, members))
    }

    pub(crate) fn from_sorted_unchecked(domain: Domain, mut members: Vec<BitSet>) -> Self {
        members.sort();
        members.dedup();
        ClosureSystem { domain, members }
    }

    /// The smallest closure system containing `family`.
    pub fn generated_by(domain: Domain, family: Vec<BitSet>) -> Result<Self> {
        let size = domain.size();
        if let Some(i) = family.iter().position(|m| m.len() != size) {
            return Err(Error::InvalidClosureSystem(format!(
                "member #{i} has the wrong size for the domain"
            )));
        }
        let mut members = family;
        members.push(BitSet::full(size));
        members.sort();
        members.dedup();
        loop {
            let mut fresh = Vec::new();
            for i in 0..members.len() {
                for j in i + 1..members.len() {
                    let meet = members[i].intersection(&members[j]);
                    if members.binary_search(&meet).is_err() && !fresh.contains(&meet) {
                        fresh.push(meet);
                    }
                }
            }
            if fresh.is_empty() {
                break;
            }
            members.extend(fresh);
            members.sort();
        }
        Ok(ClosureSystem { domain, members })
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn members(&self) -> &[BitSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, set: &BitSet) -> Option<usize> {
        self.members.binary_search(set).ok()
    }

    pub fn contains(&self, set: &BitSet) -> bool {
        self.index_of(set).is_some()
    }

    /// The least member containing `set`.
    pub fn closure(&self, set: &BitSet) -> BitSet {
        let mut acc = BitSet::full(self.domain.size());
        for m in self.members.iter().filter(|m| set.is_subset(m)) {
            acc.intersect_with(m);
        }
        acc
    }

    /// `x̄`: the intersection of all members containing domain element `x`.
    pub fn closure_of_element(&self, x: usize) -> BitSet {
        let mut acc = BitSet::full(self.domain.size());
        for m in self.members.iter().filter(|m| m.contains(x)) {
            acc.intersect_with(m);
        }
        acc
    }

    /// Index of `x̄` within [`members`](Self::members).
    pub fn closure_index_of_element(&self, x: usize) -> usize {
        self.index_of(&self.closure_of_element(x))
            .expect("closure systems are intersection-closed")
    }

    /// True iff every member is an up-set of the cube domain.
    pub fn consists_of_up_sets(&self) -> bool {
        match self.domain {
            Domain::Cube(n) => self
                .members
                .iter()
                .all(|m| boolean_domain::is_up_set(n, m).unwrap_or(false)),
            Domain::Labels(_) => false,
        }
    }

    pub fn member_labels(&self) -> Vec<Vec<String>> {
        self.members
            .iter()
            .map(|m| self.domain.format_subset(m))
            .collect()
    }
}
