//! The Boolean cube `{0,1}^n` under the componentwise order.
//!
//! A point is stored as a machine word in which bit `i - 1` holds the
//! coordinate `x_i`, so `x <= y` is a submask test. Subsets of the cube are
//! [`BitSet`]s of length `2^n` indexed by those words.

use std::fmt;
use std::str::FromStr;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Largest arity accepted for points.
pub const MAX_ARITY: usize = 24;

/// Largest arity for which up-sets (and free distributive lattice elements)
/// are enumerated exhaustively.
pub const MAX_ENUMERATION_ARITY: usize = 5;

/// Known Dedekind numbers D(0)..=D(9), used for capacity diagnostics.
const DEDEKIND: [&str; 10] = [
    "2",
    "3",
    "6",
    "20",
    "168",
    "7581",
    "7828354",
    "2414682040998",
    "56130437228687557907788",
    "286386577668298411128469151667598498812366",
];

/// The number of monotone Boolean functions of `n` variables, as a decimal
/// string, or a lower bound when it is not tabulated.
pub fn dedekind_number(n: usize) -> String {
    DEDEKIND
        .get(n)
        .map(|s| s.to_string())
        .unwrap_or_else(|| format!("more than {}", DEDEKIND[9]))
}

pub(crate) fn check_arity(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ARITY {
        return Err(Error::ArityOutOfRange { n, max: MAX_ARITY });
    }
    Ok(())
}

pub(crate) fn check_enumeration_arity(n: usize) -> Result<()> {
    check_arity(n)?;
    if n > MAX_ENUMERATION_ARITY {
        return Err(Error::Capacity {
            n,
            limit: MAX_ENUMERATION_ARITY,
            projected: dedekind_number(n),
        });
    }
    Ok(())
}

/// Number of points of the `n`-cube.
pub fn cube_size(n: usize) -> usize {
    1usize << n
}

/// A vertex `(x_1, ..., x_n)` of the Boolean cube.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    n: u8,
    bits: u32,
}

impl Point {
    pub fn new(n: usize, bits: u32) -> Result<Self> {
        check_arity(n)?;
        if (bits as u64) >> n != 0 {
            return Err(Error::PointOutOfRange {
                n,
                bits: bits as u64,
            });
        }
        Ok(Point { n: n as u8, bits })
    }

    /// Builds a point from an index that is already known to fit.
    pub(crate) fn from_index(n: usize, index: usize) -> Self {
        debug_assert!(n <= MAX_ARITY && index < cube_size(n));
        Point {
            n: n as u8,
            bits: index as u32,
        }
    }

    pub fn zero(n: usize) -> Result<Self> {
        Point::new(n, 0)
    }

    pub fn ones(n: usize) -> Result<Self> {
        check_arity(n)?;
        Point::new(n, ((1u64 << n) - 1) as u32)
    }

    /// The atom `a_i` with a single 1 in coordinate `i` (1-based).
    pub fn atom(n: usize, i: usize) -> Result<Self> {
        check_arity(n)?;
        if i == 0 || i > n {
            return Err(Error::Malformed(format!("atom index {i} outside 1..={n}")));
        }
        Point::new(n, 1 << (i - 1))
    }

    /// All points of the cube in index order.
    pub fn all(n: usize) -> Result<impl Iterator<Item = Point>> {
        check_arity(n)?;
        Ok((0..cube_size(n)).map(move |i| Point::from_index(n, i)))
    }

    pub fn arity(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn index(&self) -> usize {
        self.bits as usize
    }

    /// Coordinate `x_i`, 1-based.
    pub fn coord(&self, i: usize) -> bool {
        i >= 1 && i <= self.arity() && self.bits >> (i - 1) & 1 == 1
    }

    /// Number of coordinates equal to 1.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    fn same_arity(&self, other: &Point) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            });
        }
        Ok(())
    }

    /// Componentwise order.
    pub fn leq(&self, other: &Point) -> Result<bool> {
        self.same_arity(other)?;
        Ok(self.bits & !other.bits == 0)
    }

    pub fn join(&self, other: &Point) -> Result<Point> {
        self.same_arity(other)?;
        Ok(Point {
            n: self.n,
            bits: self.bits | other.bits,
        })
    }

    pub fn meet(&self, other: &Point) -> Result<Point> {
        self.same_arity(other)?;
        Ok(Point {
            n: self.n,
            bits: self.bits & other.bits,
        })
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.arity() {
            f.write_str(if self.coord(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Point({self})")
    }
}

impl FromStr for Point {
    type Err = Error;

    /// Parses a bit-string such as `"110"` (`x_1 = 1, x_2 = 1, x_3 = 0`).
    fn from_str(s: &str) -> Result<Self> {
        let n = s.chars().count();
        check_arity(n)?;
        let mut bits = 0u32;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                other => {
                    return Err(Error::Malformed(format!(
                        "bad character `{other}` at position {i} in point `{s}`"
                    )))
                }
            }
        }
        Point::new(n, bits)
    }
}

fn check_set_size(n: usize, set: &BitSet) -> Result<()> {
    if set.len() != cube_size(n) {
        return Err(Error::SizeMismatch {
            expected: cube_size(n),
            got: set.len(),
        });
    }
    Ok(())
}

/// Finds a member `x` and a single-bit superset `y` of `x` with `y` missing.
fn up_set_violation(n: usize, set: &BitSet) -> Option<(usize, usize)> {
    for x in set.iter() {
        for i in 0..n {
            let y = x | 1 << i;
            if !set.contains(y) {
                return Some((x, y));
            }
        }
    }
    None
}

/// True iff `set` (a subset of the `n`-cube) is closed upward.
pub fn is_up_set(n: usize, set: &BitSet) -> Result<bool> {
    check_arity(n)?;
    check_set_size(n, set)?;
    Ok(up_set_violation(n, set).is_none())
}

/// The principal filter `↑x`.
pub fn principal_filter(x: Point) -> BitSet {
    let n = x.arity();
    let mut set = BitSet::new(cube_size(n));
    for y in 0..cube_size(n) {
        if x.index() & !y == 0 {
            set.insert(y);
        }
    }
    set
}

/// Members of `set` with no strictly smaller member.
pub fn minimal_elements(n: usize, set: &BitSet) -> Result<Vec<Point>> {
    check_arity(n)?;
    check_set_size(n, set)?;
    if let Some((x, y)) = up_set_violation(n, set) {
        return Err(Error::NotUpSet {
            member: Point::from_index(n, x).to_string(),
            missing: Point::from_index(n, y).to_string(),
        });
    }
    // In an up-set it suffices to look at lower covers.
    Ok(set
        .iter()
        .filter(|&x| (0..n).all(|i| x >> i & 1 == 0 || !set.contains(x & !(1 << i))))
        .map(|x| Point::from_index(n, x))
        .collect())
}

/// An upward-closed subset of `{0,1}^n`; the true-set of an isotone function.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpSet {
    n: u8,
    members: BitSet,
}

impl UpSet {
    pub fn new(n: usize, members: BitSet) -> Result<Self> {
        check_arity(n)?;
        check_set_size(n, &members)?;
        if let Some((x, y)) = up_set_violation(n, &members) {
            return Err(Error::NotUpSet {
                member: Point::from_index(n, x).to_string(),
                missing: Point::from_index(n, y).to_string(),
            });
        }
        Ok(UpSet {
            n: n as u8,
            members,
        })
    }

    pub(crate) fn new_unchecked(n: usize, members: BitSet) -> Self {
        debug_assert!(up_set_violation(n, &members).is_none());
        UpSet {
            n: n as u8,
            members,
        }
    }

    pub fn empty(n: usize) -> Result<Self> {
        check_arity(n)?;
        Ok(UpSet::new_unchecked(n, BitSet::new(cube_size(n))))
    }

    pub fn full(n: usize) -> Result<Self> {
        check_arity(n)?;
        Ok(UpSet::new_unchecked(n, BitSet::full(cube_size(n))))
    }

    /// The smallest up-set containing all `generators`.
    pub fn generated_by(n: usize, generators: &[Point]) -> Result<Self> {
        check_arity(n)?;
        let mut members = BitSet::new(cube_size(n));
        for g in generators {
            if g.arity() != n {
                return Err(Error::ArityMismatch {
                    left: n,
                    right: g.arity(),
                });
            }
            members.union_with(&principal_filter(*g));
        }
        Ok(UpSet::new_unchecked(n, members))
    }

    pub fn arity(&self) -> usize {
        self.n as usize
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn into_members(self) -> BitSet {
        self.members
    }

    pub fn contains(&self, x: Point) -> bool {
        x.arity() == self.arity() && self.members.contains(x.index())
    }

    pub fn len(&self) -> usize {
        self.members.count()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        let n = self.arity();
        self.members.iter().map(move |i| Point::from_index(n, i))
    }

    pub fn minimal_elements(&self) -> Vec<Point> {
        minimal_elements(self.arity(), &self.members).expect("up-set invariant")
    }
}

impl fmt::Debug for UpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.points()).finish()
    }
}

/// All up-sets of `{0,1}^n`, sorted by member bitset value.
///
/// Built by splitting on the last coordinate: a subset is an up-set iff its
/// `x_n = 0` half and `x_n = 1` half are up-sets of the `(n-1)`-cube with the
/// former contained in the latter.
pub fn enumerate_up_sets(n: usize) -> Result<Vec<UpSet>> {
    check_enumeration_arity(n)?;
    // Up-sets of the one-point cube {0,1}^0.
    let mut masks: Vec<u64> = vec![0b0, 0b1];
    for k in 1..=n {
        let half = cube_size(k - 1);
        let mut next = Vec::new();
        for &lower in &masks {
            for &upper in &masks {
                if lower & !upper == 0 {
                    next.push(lower | upper << half);
                }
            }
        }
        next.sort_unstable();
        masks = next;
    }
    Ok(masks
        .into_iter()
        .map(|m| UpSet::new_unchecked(n, BitSet::from_mask(cube_size(n), m)))
        .collect())
}

/// Renders a cube subset as bit-strings sorted lexicographically.
pub fn format_point_set(n: usize, set: &BitSet) -> Vec<String> {
    let mut out: Vec<String> = set
        .iter()
        .map(|i| Point::from_index(n, i).to_string())
        .collect();
    out.sort();
    out
}

/// Parses a list of bit-strings into a subset of the `n`-cube.
pub fn parse_point_set<S: AsRef<str>>(n: usize, items: &[S]) -> Result<BitSet> {
    check_arity(n)?;
    let mut set = BitSet::new(cube_size(n));
    for item in items {
        let p: Point = item.as_ref().parse()?;
        if p.arity() != n {
            return Err(Error::ArityMismatch {
                left: n,
                right: p.arity(),
            });
        }
        set.insert(p.index());
    }
    Ok(set)
}
