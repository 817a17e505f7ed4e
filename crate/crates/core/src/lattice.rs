//! Explicit finite lattices with precomputed meet and join tables.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::closure_system::ClosureSystem;
use crate::error::{Error, Result};

/// Operations shared by the explicit lattices here and the symbolic free
/// distributive lattice.
pub trait Lattice {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn contains(&self, a: &Self::Elem) -> bool;
    fn bottom(&self) -> Self::Elem;
    fn top(&self) -> Self::Elem;
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn join_all<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.bottom(), |acc, x| self.join(&acc, x))
    }

    fn meet_all<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.top(), |acc, x| self.meet(&acc, x))
    }
}

#[derive(Clone, PartialEq, Eq)]
enum Table {
    Narrow(Vec<u16>),
    Wide(Vec<u32>),
}

impl Table {
    fn build(size: usize, mut f: impl FnMut(usize, usize) -> usize) -> Table {
        if size <= u16::MAX as usize {
            let mut t = vec![0u16; size * size];
            for a in 0..size {
                for b in a..size {
                    let v = f(a, b) as u16;
                    t[a * size + b] = v;
                    t[b * size + a] = v;
                }
            }
            Table::Narrow(t)
        } else {
            let mut t = vec![0u32; size * size];
            for a in 0..size {
                for b in a..size {
                    let v = f(a, b) as u32;
                    t[a * size + b] = v;
                    t[b * size + a] = v;
                }
            }
            Table::Wide(t)
        }
    }

    fn get(&self, size: usize, a: usize, b: usize) -> usize {
        match self {
            Table::Narrow(t) => t[a * size + b] as usize,
            Table::Wide(t) => t[a * size + b] as usize,
        }
    }
}

/// Result of checking a finite relation for the lattice axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeReport {
    Valid,
    Empty,
    IndexOutOfRange { pair: (usize, usize) },
    NotAntisymmetric { pair: (usize, usize) },
    NoJoin { pair: (usize, usize) },
    NoMeet { pair: (usize, usize) },
}

impl LatticeReport {
    pub fn is_valid(&self) -> bool {
        *self == LatticeReport::Valid
    }

    fn describe(&self, labels: &[String]) -> String {
        let name = |i: usize| labels.get(i).cloned().unwrap_or_else(|| format!("#{i}"));
        match *self {
            LatticeReport::Valid => "valid".into(),
            LatticeReport::Empty => "no elements".into(),
            LatticeReport::IndexOutOfRange { pair: (a, b) } => {
                format!("order pair [{a}, {b}] refers to a missing element")
            }
            LatticeReport::NotAntisymmetric { pair: (a, b) } => {
                format!("{} and {} are mutually below each other", name(a), name(b))
            }
            LatticeReport::NoJoin { pair: (a, b) } => {
                format!("{} and {} have no least upper bound", name(a), name(b))
            }
            LatticeReport::NoMeet { pair: (a, b) } => {
                format!("{} and {} have no greatest lower bound", name(a), name(b))
            }
        }
    }
}

/// Reflexive-transitive closure of `pairs` on `size` elements, as up-set rows.
fn order_closure(
    size: usize,
    pairs: &[(usize, usize)],
) -> std::result::Result<Vec<BitSet>, LatticeReport> {
    let mut up: Vec<BitSet> = (0..size).map(|i| BitSet::from_indices(size, [i])).collect();
    for &(a, b) in pairs {
        if a >= size || b >= size {
            return Err(LatticeReport::IndexOutOfRange { pair: (a, b) });
        }
        up[a].insert(b);
    }
    // Warshall on rows.
    for k in 0..size {
        let row_k = up[k].clone();
        for row in up.iter_mut() {
            if row.contains(k) {
                row.union_with(&row_k);
            }
        }
    }
    Ok(up)
}

fn ranks(up: &[BitSet]) -> Vec<usize> {
    let size = up.len();
    let mut below = vec![0usize; size];
    for row in up {
        for j in row.iter() {
            below[j] += 1;
        }
    }
    below
}

/// Finds the least element of `set` under the order `up`, if one exists.
fn least_of(set: &BitSet, up: &[BitSet], rank: &[usize]) -> Option<usize> {
    let candidate = set.iter().min_by_key(|&i| rank[i])?;
    set.is_subset(&up[candidate]).then_some(candidate)
}

fn check_order(up: &[BitSet]) -> LatticeReport {
    let size = up.len();
    if size == 0 {
        return LatticeReport::Empty;
    }
    for a in 0..size {
        for b in up[a].iter() {
            if b != a && up[b].contains(a) {
                return LatticeReport::NotAntisymmetric {
                    pair: (a.min(b), a.max(b)),
                };
            }
        }
    }
    let down = transpose(up);
    let rank = ranks(up);
    let neg_rank: Vec<usize> = rank.iter().map(|r| size - r).collect();
    for a in 0..size {
        for b in a + 1..size {
            if least_of(&up[a].intersection(&up[b]), up, &rank).is_none() {
                return LatticeReport::NoJoin { pair: (a, b) };
            }
            if least_of(&down[a].intersection(&down[b]), &down, &neg_rank).is_none() {
                return LatticeReport::NoMeet { pair: (a, b) };
            }
        }
    }
    LatticeReport::Valid
}

fn transpose(up: &[BitSet]) -> Vec<BitSet> {
    let size = up.len();
    let mut down: Vec<BitSet> = (0..size).map(|_| BitSet::new(size)).collect();
    for (a, row) in up.iter().enumerate() {
        for b in row.iter() {
            down[b].insert(a);
        }
    }
    down
}

/// Checks that the reflexive-transitive closure of `pairs` on `size`
/// elements is a lattice, naming the first offending pair otherwise.
pub fn verify_lattice(size: usize, pairs: &[(usize, usize)]) -> LatticeReport {
    match order_closure(size, pairs) {
        Ok(up) => check_order(&up),
        Err(report) => report,
    }
}

/// JSON form of a finite lattice: element labels plus order pairs `[i, j]`
/// meaning `elements[i] <= elements[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSpec {
    pub elements: Vec<String>,
    pub leq: Vec<[usize; 2]>,
}

/// A finite lattice over opaque string labels.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    labels: Vec<String>,
    up: Vec<BitSet>,
    meet: Table,
    join: Table,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Builds a lattice from labels and order pairs (closure applied).
    pub fn from_relation(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        check_unique(&labels)?;
        let up = order_closure(labels.len(), pairs)
            .map_err(|r| Error::InvalidLattice(r.describe(&labels)))?;
        Self::from_order(labels, up)
    }

    /// Builds a lattice from labels and a complete order given as rows
    /// `up[i] = { j : i <= j }`.
    pub fn from_order(labels: Vec<String>, up: Vec<BitSet>) -> Result<Self> {
        check_unique(&labels)?;
        if up.len() != labels.len() || up.iter().any(|r| r.len() != labels.len()) {
            return Err(Error::InvalidLattice(
                "order matrix does not match labels".into(),
            ));
        }
        for (i, row) in up.iter().enumerate() {
            if !row.contains(i) {
                return Err(Error::InvalidLattice(format!(
                    "{} is not below itself",
                    labels[i]
                )));
            }
            for j in row.iter() {
                if !up[j].is_subset(row) {
                    return Err(Error::InvalidLattice(format!(
                        "order is not transitive at {}",
                        labels[j]
                    )));
                }
            }
        }
        let report = check_order(&up);
        if !report.is_valid() {
            return Err(Error::InvalidLattice(report.describe(&labels)));
        }
        let size = labels.len();
        let down = transpose(&up);
        let rank = ranks(&up);
        let neg_rank: Vec<usize> = rank.iter().map(|r| size - r).collect();
        let join = Table::build(size, |a, b| {
            least_of(&up[a].intersection(&up[b]), &up, &rank).expect("checked")
        });
        let meet = Table::build(size, |a, b| {
            least_of(&down[a].intersection(&down[b]), &down, &neg_rank).expect("checked")
        });
        Ok(Self::assemble(labels, up, meet, join))
    }

    /// Builds a lattice whose operations are known algebraically. The caller
    /// guarantees that `meet` and `join` are the lattice operations of `up`.
    pub(crate) fn from_operations(
        labels: Vec<String>,
        up: Vec<BitSet>,
        meet: impl FnMut(usize, usize) -> usize,
        join: impl FnMut(usize, usize) -> usize,
    ) -> Self {
        let size = labels.len();
        let meet = Table::build(size, meet);
        let join = Table::build(size, join);
        Self::assemble(labels, up, meet, join)
    }

    fn assemble(labels: Vec<String>, up: Vec<BitSet>, meet: Table, join: Table) -> Self {
        let size = labels.len();
        let bottom = (0..size)
            .find(|&i| up[i].is_full())
            .expect("lattice has a bottom");
        let top = (0..size)
            .find(|&i| up[i].count() == 1)
            .expect("lattice has a top");
        FiniteLattice {
            labels,
            up,
            meet,
            join,
            bottom,
            top,
        }
    }

    /// The closure system ordered dually to inclusion. Element `i` is
    /// `system.members()[i]`; join is intersection, meet is the closure of
    /// the union, and the bottom is the whole domain.
    pub fn from_closure_system(system: &ClosureSystem) -> Self {
        let members = system.members();
        let size = members.len();
        let labels: Vec<String> = members
            .iter()
            .map(|m| system.domain().subset_label(m))
            .collect();
        let up: Vec<BitSet> = members
            .iter()
            .map(|f| BitSet::from_indices(size, (0..size).filter(|&g| members[g].is_subset(f))))
            .collect();
        let index = |s: &BitSet| system.index_of(s).expect("member of closure system");
        FiniteLattice::from_operations(
            labels,
            up,
            |a, b| index(&system.closure(&members[a].union(&members[b]))),
            |a, b| index(&members[a].intersection(&members[b])),
        )
    }

    /// The chain `0 < 1 < ... < k-1` labelled by decimal indices.
    pub fn chain(k: usize) -> Result<Self> {
        let labels = (0..k).map(|i| i.to_string()).collect();
        let pairs: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
        Self::from_relation(labels, &pairs)
    }

    pub fn from_spec(spec: &LatticeSpec) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = spec.leq.iter().map(|&[a, b]| (a, b)).collect();
        Self::from_relation(spec.elements.clone(), &pairs)
    }

    /// Labels plus covering pairs.
    pub fn to_spec(&self) -> LatticeSpec {
        LatticeSpec {
            elements: self.labels.clone(),
            leq: self.covers().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet.get(self.len(), a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join.get(self.len(), a, b)
    }

    pub fn join_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items
            .into_iter()
            .fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn meet_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// The principal filter `↑p`.
    pub fn up_filter(&self, p: usize) -> Result<&BitSet> {
        self.up
            .get(p)
            .ok_or_else(|| Error::UnknownElement(format!("#{p}")))
    }

    pub fn down_set(&self, p: usize) -> BitSet {
        BitSet::from_indices(self.len(), (0..self.len()).filter(|&q| self.leq(q, p)))
    }

    /// Covering pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in self.up[a].iter() {
                if a == b {
                    continue;
                }
                let between = self.up[a]
                    .iter()
                    .any(|c| c != a && c != b && self.leq(c, b));
                if !between {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Graphviz rendering of the Hasse diagram, bottom element at the bottom.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph {name} {{");
        let _ = writeln!(s, "  rankdir=BT;");
        let _ = writeln!(s, "  node [shape=plaintext];");
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(
                s,
                "  n{i} [label=\"{}\"];",
                l.replace('\\', "\\\\").replace('"', "\\\"")
            );
        }
        for (a, b) in self.covers() {
            let _ = writeln!(s, "  n{a} -> n{b};");
        }
        s.push_str("}\n");
        s
    }

    /// An order isomorphism onto `other`, as `map[i] = image of i`.
    pub fn isomorphism_to(&self, other: &FiniteLattice) -> Option<Vec<usize>> {
        if self.len() != other.len() {
            return None;
        }
        let size = self.len();
        let sig = |l: &FiniteLattice, i: usize| (l.up[i].count(), l.down_set(i).count());
        let mine: Vec<_> = (0..size).map(|i| sig(self, i)).collect();
        let theirs: Vec<_> = (0..size).map(|i| sig(other, i)).collect();
        let mut order: Vec<usize> = (0..size).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(mine[i].0));
        let mut map = vec![usize::MAX; size];
        let mut used = vec![false; size];

        fn search(
            k: usize,
            order: &[usize],
            a: &FiniteLattice,
            b: &FiniteLattice,
            mine: &[(usize, usize)],
            theirs: &[(usize, usize)],
            map: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            let Some(&x) = order.get(k) else {
                return true;
            };
            for y in 0..b.len() {
                if used[y] || mine[x] != theirs[y] {
                    continue;
                }
                let consistent = order[..k]
                    .iter()
                    .all(|&z| a.leq(x, z) == b.leq(y, map[z]) && a.leq(z, x) == b.leq(map[z], y));
                if !consistent {
                    continue;
                }
                map[x] = y;
                used[y] = true;
                if search(k + 1, order, a, b, mine, theirs, map, used) {
                    return true;
                }
                used[y] = false;
                map[x] = usize::MAX;
            }
            false
        }

        search(0, &order, self, other, &mine, &theirs, &mut map, &mut used).then_some(map)
    }
}

fn check_unique(labels: &[String]) -> Result<()> {
    let mut seen = HashMap::new();
    for (i, l) in labels.iter().enumerate() {
        if let Some(j) = seen.insert(l.as_str(), i) {
            return Err(Error::InvalidLattice(format!(
                "duplicate element label `{l}` at positions {j} and {i}"
            )));
        }
    }
    Ok(())
}

impl fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteLattice")
            .field("elements", &self.labels)
            .field("covers", &self.covers())
            .finish()
    }
}

impl Lattice for FiniteLattice {
    type Elem = usize;

    fn contains(&self, a: &usize) -> bool {
        *a < self.len()
    }

    fn bottom(&self) -> usize {
        self.bottom
    }

    fn top(&self) -> usize {
        self.top
    }

    fn leq(&self, a: &usize, b: &usize) -> bool {
        FiniteLattice::leq(self, *a, *b)
    }

    fn meet(&self, a: &usize, b: &usize) -> usize {
        FiniteLattice::meet(self, *a, *b)
    }

    fn join(&self, a: &usize, b: &usize) -> usize {
        FiniteLattice::join(self, *a, *b)
    }
}
