//! Shared generators, brute-force oracles and property checks used by the
//! integration tests and the acceptance runner.
#![allow(dead_code)]

use std::collections::BTreeSet;

use lattice_threshold::bitset::BitSet;
use lattice_threshold::boolean_domain::{cube_size, enumerate_up_sets, Point};
use lattice_threshold::closure_system::{ClosureSystem, Domain};
use lattice_threshold::lattice::{verify_lattice, FiniteLattice};
use lattice_threshold::lattice_valued::{synthesize_from_closure_system, LValuedFunction};
use lattice_threshold::representability::{
    closure_of_point, synthesize_linear_representation, validate_closure_system_of_up_sets,
};
use lattice_threshold::threshold::{is_isotone, BooleanFunction, ThresholdRepr};
use rand::Rng;

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

// ---------------------------------------------------------------------------
// Plain oracles, written against bit masks only.

pub fn pt(n: usize, bits: usize) -> Point {
    Point::new(n, bits as u32).unwrap()
}

pub fn mask_set(len: usize, mask: u64) -> BitSet {
    BitSet::from_indices(len, (0..len).filter(|&i| mask >> i & 1 == 1))
}

pub fn set_to_vec(s: &BitSet) -> Vec<usize> {
    s.iter().collect()
}

/// `{y : x ⊆ y}` on the cube.
pub fn brute_filter(n: usize, x: usize) -> BTreeSet<usize> {
    (0..1 << n).filter(|&y| x & !y == 0).collect()
}

pub fn brute_is_up_set(n: usize, s: &BTreeSet<usize>) -> bool {
    s.iter().all(|&x| brute_filter(n, x).is_subset(s))
}

pub fn brute_is_monotone(n: usize, f: impl Fn(usize) -> bool) -> bool {
    (0..1usize << n).all(|x| (0..1usize << n).all(|y| x & !y != 0 || !f(x) || f(y)))
}

pub fn to_btree(s: &BitSet) -> BTreeSet<usize> {
    s.iter().collect()
}

/// `{x : μ(x) ≥ p}` straight from the order relation.
pub fn brute_cut(mu: &LValuedFunction, p: usize) -> BTreeSet<usize> {
    (0..mu.domain().size())
        .filter(|&x| mu.codomain().leq(p, mu.value(x)))
        .collect()
}

pub fn brute_cuts(mu: &LValuedFunction) -> BTreeSet<BTreeSet<usize>> {
    (0..mu.codomain().len()).map(|p| brute_cut(mu, p)).collect()
}

pub fn members_as_sets(f: &ClosureSystem) -> BTreeSet<BTreeSet<usize>> {
    f.members().iter().map(to_btree).collect()
}

/// Meets and joins of `l` are the greatest lower / least upper bounds of its
/// order, and the order is a partial order with bounds.
pub fn brute_lattice_laws(l: &FiniteLattice) -> Check {
    let n = l.len();
    for a in 0..n {
        ensure!(
            l.leq(l.bottom(), a) && l.leq(a, l.top()),
            "bounds fail at {a}"
        );
        for b in 0..n {
            ensure!(
                !(l.leq(a, b) && l.leq(b, a)) || a == b,
                "antisymmetry {a},{b}"
            );
            let j = l.join(a, b);
            let m = l.meet(a, b);
            ensure!(l.leq(a, j) && l.leq(b, j), "join not upper bound {a},{b}");
            ensure!(l.leq(m, a) && l.leq(m, b), "meet not lower bound {a},{b}");
            for c in 0..n {
                if l.leq(a, c) && l.leq(b, c) {
                    ensure!(l.leq(j, c), "join not least {a},{b} vs {c}");
                }
                if l.leq(c, a) && l.leq(c, b) {
                    ensure!(l.leq(c, m), "meet not greatest {a},{b} vs {c}");
                }
                if l.leq(a, b) && l.leq(b, c) {
                    ensure!(l.leq(a, c), "transitivity {a},{b},{c}");
                }
            }
        }
    }
    Ok(())
}

/// Every weight assignment into the lattice of `f` (ordered dually to
/// inclusion, so joins are intersections); true when one of them has
/// exactly `f` as its cuts. Written directly over sets.
pub fn brute_representable_over_own_lattice(n: usize, f: &ClosureSystem) -> bool {
    let members: Vec<BTreeSet<usize>> = f.members().iter().map(to_btree).collect();
    let full: BTreeSet<usize> = (0..1 << n).collect();
    let target: BTreeSet<BTreeSet<usize>> = members.iter().cloned().collect();
    let m = members.len();
    let total = m.pow(n as u32);
    (0..total).any(|code| {
        let mut c = code;
        let weights: Vec<&BTreeSet<usize>> = (0..n)
            .map(|_| {
                let w = &members[c % m];
                c /= m;
                w
            })
            .collect();
        let nu: Vec<BTreeSet<usize>> = (0..1usize << n)
            .map(|x| {
                let mut v = full.clone();
                for (i, w) in weights.iter().enumerate() {
                    if x >> i & 1 == 1 {
                        v = v.intersection(w).cloned().collect();
                    }
                }
                v
            })
            .collect();
        // cut at f: points whose value lies below f in inclusion.
        let cuts: BTreeSet<BTreeSet<usize>> = members
            .iter()
            .map(|g| (0..1usize << n).filter(|&x| nu[x].is_subset(g)).collect())
            .collect();
        cuts == target
    })
}

/// `x̄` computed as the intersection of members containing `x`.
pub fn brute_bar(members: &[BTreeSet<usize>], universe: usize, x: usize) -> BTreeSet<usize> {
    let mut acc: BTreeSet<usize> = (0..universe).collect();
    for m in members.iter().filter(|m| m.contains(&x)) {
        acc = acc.intersection(m).cloned().collect();
    }
    acc
}

pub fn brute_condition_i(n: usize, members: &[BTreeSet<usize>]) -> bool {
    let size = 1 << n;
    let bars: Vec<_> = (0..size).map(|x| brute_bar(members, size, x)).collect();
    (0..size).all(|x| (0..size).all(|y| !bars[x].is_subset(&bars[y]) || bars[x | y] == bars[x]))
}

pub fn brute_condition_ii(n: usize, members: &[BTreeSet<usize>]) -> bool {
    let size = 1 << n;
    let bars: Vec<_> = (0..size).map(|x| brute_bar(members, size, x)).collect();
    (0..size).all(|x| {
        (0..size).all(|y| bars[x | y] == bars[x].intersection(&bars[y]).cloned().collect())
    })
}

// ---------------------------------------------------------------------------
// Universes and generators.

/// All families of subsets of an `m`-point set that contain the whole set
/// and are closed under intersection.
pub fn all_moore_families(m: usize) -> Vec<Vec<u64>> {
    let subsets = 1usize << m;
    let full = (subsets - 1) as u64;
    let others: Vec<u64> = (0..full).collect();
    let mut out = Vec::new();
    for choice in 0u64..1 << others.len() {
        let mut fam: Vec<u64> = others
            .iter()
            .enumerate()
            .filter(|(i, _)| choice >> i & 1 == 1)
            .map(|(_, &s)| s)
            .collect();
        fam.push(full);
        let closed = fam
            .iter()
            .all(|&a| fam.iter().all(|&b| fam.contains(&(a & b))));
        if closed {
            out.push(fam);
        }
    }
    out
}

/// All closure systems of up-sets of the `n`-cube.
pub fn all_up_set_systems(n: usize) -> Vec<ClosureSystem> {
    let size = cube_size(n);
    let full_mask = (1u64 << size) - 1;
    let ups: Vec<u64> = enumerate_up_sets(n)
        .unwrap()
        .iter()
        .map(|u| u.members().iter().fold(0u64, |m, i| m | 1 << i))
        .filter(|&m| m != full_mask)
        .collect();
    let mut out = Vec::new();
    for choice in 0u64..1 << ups.len() {
        let mut fam: Vec<u64> = (0..ups.len())
            .filter(|i| choice >> i & 1 == 1)
            .map(|i| ups[i])
            .collect();
        fam.push(full_mask);
        if fam
            .iter()
            .all(|&a| fam.iter().all(|&b| fam.contains(&(a & b))))
        {
            let members = fam.iter().map(|&m| mask_set(size, m)).collect();
            out.push(validate_closure_system_of_up_sets(n, members).unwrap());
        }
    }
    out
}

fn strings(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

/// s < p, q < r < 1
pub fn five_element_lattice() -> FiniteLattice {
    FiniteLattice::from_relation(
        strings(&["s", "p", "q", "r", "1"]),
        &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)],
    )
    .unwrap()
}

/// A handful of small lattices covering chains, a Boolean square and the
/// two five-element non-distributive lattices.
pub fn small_lattices() -> Vec<(&'static str, FiniteLattice)> {
    let mut out: Vec<(&'static str, FiniteLattice)> = vec![
        ("chain1", FiniteLattice::chain(1).unwrap()),
        ("chain2", FiniteLattice::chain(2).unwrap()),
        ("chain3", FiniteLattice::chain(3).unwrap()),
    ];
    out.push((
        "square",
        FiniteLattice::from_relation(
            strings(&["0", "a", "b", "1"]),
            &[(0, 1), (0, 2), (1, 3), (2, 3)],
        )
        .unwrap(),
    ));
    out.push((
        "m3",
        FiniteLattice::from_relation(
            strings(&["0", "a", "b", "c", "1"]),
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        )
        .unwrap(),
    ));
    out.push((
        "n5",
        FiniteLattice::from_relation(
            strings(&["0", "a", "b", "c", "1"]),
            &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
        )
        .unwrap(),
    ));
    out.push(("five", five_element_lattice()));
    out
}

/// A random lattice: the lattice of a random closure system on up to four
/// points, so every small lattice shape can appear.
pub fn random_lattice(rng: &mut impl Rng) -> FiniteLattice {
    let k = rng.gen_range(1..=4);
    let domain = Domain::labels((0..k).map(|i| format!("u{i}"))).unwrap();
    let count = rng.gen_range(0..=5);
    let family = (0..count)
        .map(|_| mask_set(k, rng.gen_range(0..1u64 << k)))
        .collect();
    let system = ClosureSystem::generated_by(domain, family).unwrap();
    FiniteLattice::from_closure_system(&system)
}

pub fn random_function(rng: &mut impl Rng, n: usize, lattice: FiniteLattice) -> LValuedFunction {
    let len = lattice.len();
    LValuedFunction::from_fn(Domain::cube(n).unwrap(), lattice, |_| rng.gen_range(0..len)).unwrap()
}

/// A random order-preserving function: `μ(x) = ⋁ { v(y) : y ≤ x }` for random `v`.
pub fn random_up_set_function(
    rng: &mut impl Rng,
    n: usize,
    lattice: FiniteLattice,
) -> LValuedFunction {
    let size = cube_size(n);
    let seeds: Vec<usize> = (0..size)
        .map(|_| {
            if rng.gen_bool(0.5) {
                lattice.bottom()
            } else {
                rng.gen_range(0..lattice.len())
            }
        })
        .collect();
    let values = (0..size)
        .map(|x| lattice.join_all((0..size).filter(|&y| y & !x == 0).map(|y| seeds[y])))
        .collect();
    LValuedFunction::new(Domain::cube(n).unwrap(), lattice, values).unwrap()
}

pub fn random_boolean_function(rng: &mut impl Rng, n: usize) -> BooleanFunction {
    if rng.gen_bool(0.5) {
        BooleanFunction::from_fn(n, |_| rng.gen_bool(0.5)).unwrap()
    } else {
        // Monotone: the up-closure of a few random points.
        let gens: Vec<usize> = (0..rng.gen_range(0..4))
            .map(|_| rng.gen_range(0..1 << n))
            .collect();
        BooleanFunction::from_fn(n, |x| gens.iter().any(|&g| g & !(x.bits() as usize) == 0))
            .unwrap()
    }
}

/// A random closure system of up-sets of the cube; sometimes the cut
/// system of a linear combination, so representable systems show up often.
pub fn random_up_set_system(rng: &mut impl Rng, n: usize, ups: &[BitSet]) -> ClosureSystem {
    if rng.gen_bool(0.3) {
        let l = random_lattice(rng);
        let w: Vec<usize> = (0..n).map(|_| rng.gen_range(0..l.len())).collect();
        let mu = lattice_threshold::threshold::linear_combination_function(&l, &w).unwrap();
        return mu.cut_collection();
    }
    let count = rng.gen_range(0..=5);
    let family = (0..count)
        .map(|_| ups[rng.gen_range(0..ups.len())].clone())
        .collect();
    ClosureSystem::generated_by(Domain::cube(n).unwrap(), family).unwrap()
}

/// A random closure system of arbitrary subsets of the cube.
pub fn random_closure_system(rng: &mut impl Rng, n: usize) -> ClosureSystem {
    let size = cube_size(n);
    let count = rng.gen_range(0..=6);
    let family = (0..count)
        .map(|_| mask_set(size, rng.gen_range(0..1u64 << size)))
        .collect();
    ClosureSystem::generated_by(Domain::cube(n).unwrap(), family).unwrap()
}

pub fn up_set_masks(n: usize) -> Vec<BitSet> {
    enumerate_up_sets(n)
        .unwrap()
        .into_iter()
        .map(|u| u.into_members())
        .collect()
}

// ---------------------------------------------------------------------------
// Property checks, one per law.

/// For a closure system of up-sets: `x ≤ y ⇒ ȳ ⊆ x̄`, `x ∈ x̄`, `↑x ⊆ x̄` and
/// `z ∈ x̄ ⇒ z̄ ⊆ x̄`.
pub fn check_closure_point_laws(n: usize, f: &ClosureSystem) -> Check {
    let size = cube_size(n);
    let bars: Vec<BTreeSet<usize>> = (0..size)
        .map(|x| to_btree(&closure_of_point(f, pt(n, x)).unwrap()))
        .collect();
    let members: Vec<BTreeSet<usize>> = f.members().iter().map(to_btree).collect();
    for x in 0..size {
        ensure!(bars[x] == brute_bar(&members, size, x), "x̄ mismatch at {x}");
        ensure!(members.contains(&bars[x]), "x̄ not a member at {x}");
        ensure!(bars[x].contains(&x), "x ∉ x̄ at {x}");
        ensure!(brute_filter(n, x).is_subset(&bars[x]), "↑x ⊄ x̄ at {x}");
        for y in 0..size {
            if x & !y == 0 {
                ensure!(bars[y].is_subset(&bars[x]), "ȳ ⊄ x̄ for {x} ≤ {y}");
            }
            if bars[x].contains(&y) {
                ensure!(bars[y].is_subset(&bars[x]), "z̄ ⊄ x̄ for z={y}, x={x}");
            }
        }
    }
    Ok(())
}

/// The cuts form a closure system, agree with the definition, and are
/// antitone in the level.
pub fn check_cuts_closure_system(mu: &LValuedFunction) -> Check {
    let cuts = mu.cut_collection();
    let expected = brute_cuts(mu);
    ensure!(
        members_as_sets(&cuts) == expected,
        "cut collection differs from definition"
    );
    let size = mu.domain().size();
    let full: BTreeSet<usize> = (0..size).collect();
    ensure!(expected.contains(&full), "whole domain is not a cut");
    for a in &expected {
        for b in &expected {
            let meet: BTreeSet<usize> = a.intersection(b).cloned().collect();
            ensure!(
                expected.contains(&meet),
                "cuts not closed under intersection"
            );
        }
    }
    let l = mu.codomain();
    for p in 0..l.len() {
        ensure!(
            to_btree(&mu.cut(p).unwrap()) == brute_cut(mu, p),
            "cut({p}) wrong"
        );
        for q in 0..l.len() {
            if l.leq(p, q) {
                ensure!(
                    brute_cut(mu, q).is_subset(&brute_cut(mu, p)),
                    "cuts not antitone"
                );
            }
        }
    }
    Ok(())
}

/// Isotone iff the true-set is an up-set.
pub fn check_isotone_iff_up_set(f: &BooleanFunction) -> Check {
    let n = f.arity();
    let truth: BTreeSet<usize> = to_btree(f.true_set());
    let monotone = brute_is_monotone(n, |x| truth.contains(&x));
    let up = brute_is_up_set(n, &truth);
    ensure!(monotone == up, "monotone ({monotone}) vs up-set ({up})");
    ensure!(
        is_isotone(f).unwrap() == monotone,
        "is_isotone disagrees with brute force"
    );
    Ok(())
}

/// Order-preserving iff every cut is an up-set.
pub fn check_up_set_iff_cuts(mu: &LValuedFunction) -> Check {
    let n = mu.domain().cube_arity().expect("cube");
    let l = mu.codomain();
    let size = cube_size(n);
    let preserving =
        (0..size).all(|x| (0..size).all(|y| x & !y != 0 || l.leq(mu.value(x), mu.value(y))));
    let cuts_up = (0..l.len()).all(|p| brute_is_up_set(n, &brute_cut(mu, p)));
    ensure!(
        preserving == cuts_up,
        "order-preserving ({preserving}) vs cuts ({cuts_up})"
    );
    ensure!(
        mu.is_l_valued_up_set().unwrap() == preserving,
        "library disagrees"
    );
    Ok(())
}

/// For an order-preserving μ: if `↑a` is a cut and `μ(a) = p` then the cut at
/// `p` is `↑a`.
pub fn check_principal_cut(mu: &LValuedFunction) -> Check {
    let n = mu.domain().cube_arity().expect("cube");
    let cuts = brute_cuts(mu);
    for a in 0..cube_size(n) {
        let up = brute_filter(n, a);
        if cuts.contains(&up) {
            let got = to_btree(&mu.cut(mu.value(a)).unwrap());
            ensure!(got == up, "cut(μ({a})) = {got:?}, expected ↑{a} = {up:?}");
        }
    }
    Ok(())
}

/// A closure system is the cut system of the function into its own lattice,
/// and that lattice is a verified lattice whose join is intersection.
pub fn check_closure_system_realized(f: &ClosureSystem) -> Check {
    let l = FiniteLattice::from_closure_system(f);
    let pairs: Vec<(usize, usize)> = (0..l.len())
        .flat_map(|a| (0..l.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| f.members()[b].is_subset(&f.members()[a]))
        .collect();
    ensure!(
        verify_lattice(l.len(), &pairs).is_valid(),
        "dual inclusion order is not a lattice"
    );
    brute_lattice_laws(&l)?;
    for a in 0..l.len() {
        for b in 0..l.len() {
            let meet = f.members()[a].intersection(&f.members()[b]);
            ensure!(
                f.members()[l.join(a, b)] == meet,
                "join is not intersection"
            );
        }
    }
    let mu = synthesize_from_closure_system(f);
    ensure!(mu.cut_collection() == *f, "cuts differ from the system");
    for (i, m) in f.members().iter().enumerate() {
        ensure!(
            mu.cut(i).unwrap() == *m,
            "cut at member {i} is not the member"
        );
    }
    Ok(())
}

/// μ and μ̂ have the same cuts, and μ̂ is its own canonical representation.
pub fn check_canonical(mu: &LValuedFunction) -> Check {
    let hat = mu.canonical_representation();
    ensure!(brute_cuts(&hat) == brute_cuts(mu), "cut systems differ");
    let cuts: Vec<BTreeSet<usize>> = mu.cut_collection().members().iter().map(to_btree).collect();
    for x in 0..mu.domain().size() {
        let value = to_btree(&mu.cut_collection().members()[hat.value(x)]);
        ensure!(
            value == brute_bar(&cuts, mu.domain().size(), x),
            "μ̂({x}) is not x̄"
        );
    }
    let hathat = hat.canonical_representation();
    ensure!(hathat.values() == hat.values(), "μ̂ is not a fixpoint");
    ensure!(
        hathat.codomain().labels() == hat.codomain().labels(),
        "μ̂ codomain moved"
    );
    Ok(())
}

/// `μ(a) = μ(b) ∨ μ(c)` implies `μ̂(a) = μ̂(b) ∨ μ̂(c)`.
pub fn check_join_transfer(mu: &LValuedFunction) -> Check {
    let hat = mu.canonical_representation();
    let members = mu.cut_collection();
    let l = mu.codomain();
    let h = hat.codomain();
    let size = mu.domain().size();
    for a in 0..size {
        for b in 0..size {
            for c in 0..size {
                if mu.value(a) == l.join(mu.value(b), mu.value(c)) {
                    ensure!(
                        hat.value(a) == h.join(hat.value(b), hat.value(c)),
                        "join not transferred at ({a},{b},{c})"
                    );
                    let inter = members.members()[hat.value(b)]
                        .intersection(&members.members()[hat.value(c)]);
                    ensure!(
                        members.members()[hat.value(a)] == inter,
                        "μ̂ join is not intersection"
                    );
                }
            }
        }
    }
    Ok(())
}

/// Any threshold function induced by a lattice is isotone.
pub fn check_threshold_isotone(repr: &ThresholdRepr<FiniteLattice>) -> Check {
    let f = repr.to_boolean_function();
    let n = f.arity();
    let l = repr.lattice();
    // Direct evaluation as an oracle for the library evaluation.
    for x in 0..cube_size(n) {
        let lc = l.join_all(
            (0..n)
                .filter(|i| x >> i & 1 == 1)
                .map(|i| repr.weights()[i]),
        );
        ensure!(
            f.value(pt(n, x)) == l.leq(*repr.threshold(), lc),
            "evaluation wrong at {x}"
        );
    }
    ensure!(
        brute_is_monotone(n, |x| f.value(pt(n, x))),
        "induced function not isotone"
    );
    Ok(())
}

/// When a representation is produced, its own cut system satisfies the
/// implication condition and equals the input.
pub fn check_representation_necessary(n: usize, f: &ClosureSystem) -> Check {
    let report = synthesize_linear_representation(f).map_err(|e| e.to_string())?;
    let members: Vec<BTreeSet<usize>> = f.members().iter().map(to_btree).collect();
    ensure!(
        report.conditions.condition_i.holds == brute_condition_i(n, &members),
        "condition (i) disagrees with brute force"
    );
    ensure!(
        report.conditions.condition_ii.holds == brute_condition_ii(n, &members),
        "condition (ii) disagrees with brute force"
    );
    if let Some(rep) = report.representation {
        let nu = rep.function();
        ensure!(
            brute_cuts(&nu) == members_as_sets(f),
            "represented cuts differ from the system"
        );
        let cuts: Vec<BTreeSet<usize>> = brute_cuts(&nu).into_iter().collect();
        ensure!(
            brute_condition_i(n, &cuts),
            "condition (i) fails on produced cuts"
        );
    }
    Ok(())
}

/// `⋂ { cut(p) : p ∈ S } = cut(⋁ S)` for subsets `S` of the codomain (all of
/// them up to six elements, a sample of 64 otherwise).
pub fn check_cut_intersections(mu: &LValuedFunction, rng: &mut impl Rng) -> Check {
    let l = mu.codomain();
    let size = mu.domain().size();
    let subsets: Vec<u64> = if l.len() <= 6 {
        (0..1u64 << l.len()).collect()
    } else {
        (0..64)
            .map(|_| rng.gen::<u64>() & ((1u64 << l.len()) - 1))
            .collect()
    };
    for s in subsets {
        let picked: Vec<usize> = (0..l.len()).filter(|&p| s >> p & 1 == 1).collect();
        let mut inter: BTreeSet<usize> = (0..size).collect();
        for &p in &picked {
            inter = inter.intersection(&brute_cut(mu, p)).cloned().collect();
        }
        let sup = l.join_all(picked.iter().copied());
        ensure!(
            inter == to_btree(&mu.cut(sup).unwrap()),
            "intersection law fails for {picked:?}"
        );
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Suites: exhaustive small universes plus seeded random cube-3 instances.

pub struct SuiteOutcome {
    pub name: &'static str,
    pub exhaustive: usize,
    pub random: usize,
    pub failure: Option<String>,
}

fn all_functions(n: usize, l: &FiniteLattice) -> Vec<LValuedFunction> {
    let size = cube_size(n);
    let total = l.len().pow(size as u32);
    (0..total)
        .map(|mut code| {
            let values = (0..size)
                .map(|_| {
                    let v = code % l.len();
                    code /= l.len();
                    v
                })
                .collect();
            LValuedFunction::new(Domain::cube(n).unwrap(), l.clone(), values).unwrap()
        })
        .collect()
}

fn exhaustive_functions(up_sets_only: bool) -> Vec<LValuedFunction> {
    let mut out = Vec::new();
    for n in 1..=2 {
        for (_, l) in small_lattices() {
            for mu in all_functions(n, &l) {
                if !up_sets_only || mu.is_order_preserving().unwrap() {
                    out.push(mu);
                }
            }
        }
    }
    out
}

fn run_suite<T>(
    name: &'static str,
    exhaustive: Vec<T>,
    random_count: usize,
    mut make_random: impl FnMut(&mut rand_chacha::ChaCha8Rng) -> T,
    mut check: impl FnMut(&T, &mut rand_chacha::ChaCha8Rng) -> Check,
    seed: u64,
) -> SuiteOutcome {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut outcome = SuiteOutcome {
        name,
        exhaustive: exhaustive.len(),
        random: 0,
        failure: None,
    };
    for (i, item) in exhaustive.iter().enumerate() {
        if let Err(e) = check(item, &mut rng) {
            outcome.failure = Some(format!("exhaustive case #{i}: {e}"));
            return outcome;
        }
    }
    for i in 0..random_count {
        let item = make_random(&mut rng);
        if let Err(e) = check(&item, &mut rng) {
            outcome.failure = Some(format!("random case #{i} (seed {seed}): {e}"));
            return outcome;
        }
        outcome.random += 1;
    }
    outcome
}

/// Runs every law over the exhaustive `n ≤ 2` universes and `random_count`
/// random instances on the 3-cube.
pub fn run_all_suites(random_count: usize, seed: u64) -> Vec<SuiteOutcome> {
    let ups3 = up_set_masks(3);
    let mut out = Vec::new();

    let systems: Vec<(usize, ClosureSystem)> = (1..=2)
        .flat_map(|n| all_up_set_systems(n).into_iter().map(move |f| (n, f)))
        .collect();
    out.push(run_suite(
        "closure of a point",
        systems.clone(),
        random_count,
        |rng| (3, random_up_set_system(rng, 3, &ups3)),
        |(n, f), _| check_closure_point_laws(*n, f),
        seed,
    ));

    out.push(run_suite(
        "cuts form a closure system",
        exhaustive_functions(false),
        random_count,
        |rng| {
            let l = random_lattice(rng);
            random_function(rng, 3, l)
        },
        |mu, _| check_cuts_closure_system(mu),
        seed + 1,
    ));

    let boolean: Vec<BooleanFunction> = (1..=2)
        .flat_map(|n| {
            (0u64..1 << cube_size(n))
                .map(move |m| BooleanFunction::new(n, mask_set(cube_size(n), m)).unwrap())
        })
        .collect();
    out.push(run_suite(
        "isotone iff true-set is an up-set",
        boolean,
        random_count,
        |rng| random_boolean_function(rng, 3),
        |f, _| check_isotone_iff_up_set(f),
        seed + 2,
    ));

    out.push(run_suite(
        "order-preserving iff all cuts are up-sets",
        exhaustive_functions(false),
        random_count,
        |rng| {
            let l = random_lattice(rng);
            if rng.gen_bool(0.5) {
                random_up_set_function(rng, 3, l)
            } else {
                random_function(rng, 3, l)
            }
        },
        |mu, _| check_up_set_iff_cuts(mu),
        seed + 3,
    ));

    out.push(run_suite(
        "principal filter cuts",
        exhaustive_functions(true),
        random_count,
        |rng| {
            let l = random_lattice(rng);
            random_up_set_function(rng, 3, l)
        },
        |mu, _| check_principal_cut(mu),
        seed + 4,
    ));

    let moore: Vec<ClosureSystem> = (1..=2)
        .flat_map(|n| {
            all_moore_families(cube_size(n))
                .into_iter()
                .map(move |fam| {
                    let size = cube_size(n);
                    ClosureSystem::new(
                        Domain::cube(n).unwrap(),
                        fam.into_iter().map(|m| mask_set(size, m)).collect(),
                    )
                    .unwrap()
                })
        })
        .collect();
    out.push(run_suite(
        "closure systems are realized by their lattice",
        moore,
        random_count,
        |rng| random_closure_system(rng, 3),
        |f, _| check_closure_system_realized(f),
        seed + 5,
    ));

    out.push(run_suite(
        "canonical representation keeps the cuts",
        exhaustive_functions(false),
        random_count,
        |rng| {
            let l = random_lattice(rng);
            random_function(rng, 3, l)
        },
        |mu, _| check_canonical(mu),
        seed + 6,
    ));

    out.push(run_suite(
        "joins transfer to the canonical representation",
        exhaustive_functions(false),
        random_count,
        |rng| {
            let l = random_lattice(rng);
            random_function(rng, 3, l)
        },
        |mu, _| check_join_transfer(mu),
        seed + 7,
    ));

    let mut reprs = Vec::new();
    for n in 1..=2 {
        for (_, l) in small_lattices() {
            let k = l.len();
            for code in 0..k.pow(n as u32 + 1) {
                let mut c = code;
                let mut draw = || {
                    let v = c % k;
                    c /= k;
                    v
                };
                let weights: Vec<usize> = (0..n).map(|_| draw()).collect();
                let t = draw();
                reprs.push(ThresholdRepr::new(l.clone(), weights, t).unwrap());
            }
        }
    }
    out.push(run_suite(
        "lattice-induced threshold functions are isotone",
        reprs,
        random_count,
        |rng| {
            let l = random_lattice(rng);
            let w = (0..3).map(|_| rng.gen_range(0..l.len())).collect();
            let t = rng.gen_range(0..l.len());
            ThresholdRepr::new(l, w, t).unwrap()
        },
        |r, _| check_threshold_isotone(r),
        seed + 8,
    ));

    out.push(run_suite(
        "produced representations satisfy the conditions",
        systems,
        random_count,
        |rng| (3, random_up_set_system(rng, 3, &ups3)),
        |(n, f), _| check_representation_necessary(*n, f),
        seed + 9,
    ));

    out.push(run_suite(
        "intersections of cuts are cuts of joins",
        exhaustive_functions(false),
        random_count,
        |rng| {
            let l = random_lattice(rng);
            random_function(rng, 3, l)
        },
        check_cut_intersections,
        seed + 10,
    ));
    out
}
