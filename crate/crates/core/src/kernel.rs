//! Finite tables, element subsets and finite abelian groups.
//!
//! Elements of every structure are the indices `0..n`. The additive zero is
//! always index 0, which keeps subset reports stable across files and tools.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::violation::{first_pair, first_triple, Axiom, Violation};

/// An element of a finite structure, given by its index.
pub type Elem = usize;

/// Largest carrier the workbench accepts.
pub const MAX_ORDER: usize = 64;

/// Marks a table entry that is intentionally left undefined.
pub const UNDEFINED: Elem = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NonSquare { row: usize, len: usize, expected: usize },
    #[error("table is empty")]
    Empty,
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
}

/// An `n x n` table of element indices, stored row-major.
///
/// Entries may be [`UNDEFINED`] for partial products such as the local product.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteTable {
    order: usize,
    entries: Vec<Elem>,
}

impl FiniteTable {
    pub fn from_fn(order: usize, mut f: impl FnMut(Elem, Elem) -> Elem) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                entries.push(f(x, y));
            }
        }
        FiniteTable { order, entries }
    }

    pub fn undefined(order: usize) -> Self {
        FiniteTable {
            order,
            entries: vec![UNDEFINED; order * order],
        }
    }

    pub fn from_rows(rows: &[Vec<Elem>]) -> Result<Self, TableError> {
        Self::from_partial_rows(
            &rows
                .iter()
                .map(|r| r.iter().map(|&e| Some(e)).collect())
                .collect::<Vec<Vec<Option<Elem>>>>(),
        )
    }

    pub fn from_partial_rows(rows: &[Vec<Option<Elem>>]) -> Result<Self, TableError> {
        let order = rows.len();
        if order == 0 {
            return Err(TableError::Empty);
        }
        if order > MAX_ORDER {
            return Err(TableError::OrderTooLarge(order));
        }
        let mut entries = Vec::with_capacity(order * order);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != order {
                return Err(TableError::NonSquare {
                    row,
                    len: r.len(),
                    expected: order,
                });
            }
            entries.extend(r.iter().map(|e| e.unwrap_or(UNDEFINED)));
        }
        Ok(FiniteTable { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, x: Elem, y: Elem) -> Elem {
        self.entries[x * self.order + y]
    }

    #[inline]
    pub fn try_get(&self, x: Elem, y: Elem) -> Option<Elem> {
        match self.get(x, y) {
            UNDEFINED => None,
            e => Some(e),
        }
    }

    pub fn set(&mut self, x: Elem, y: Elem, value: Elem) {
        self.entries[x * self.order + y] = value;
    }

    pub fn is_total(&self) -> bool {
        self.entries.iter().all(|&e| e != UNDEFINED)
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.entries.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn partial_rows(&self) -> Vec<Vec<Option<Elem>>> {
        self.entries
            .chunks(self.order)
            .map(|r| {
                r.iter()
                    .map(|&e| if e == UNDEFINED { None } else { Some(e) })
                    .collect()
            })
            .collect()
    }

    /// First defined entry that is not a valid element, if any.
    pub fn out_of_range(&self) -> Option<[Elem; 2]> {
        first_pair(self.order, |x, y| {
            let e = self.get(x, y);
            e != UNDEFINED && e >= self.order
        })
    }

    /// First undefined entry, if any.
    pub fn first_undefined(&self) -> Option<[Elem; 2]> {
        first_pair(self.order, |x, y| self.get(x, y) == UNDEFINED)
    }
}

/// A set of element indices with bitset semantics.
///
/// Ordered by cardinality first, then lexicographically by the sorted member list.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    order: usize,
    bits: u64,
}

impl Subset {
    pub fn empty(order: usize) -> Self {
        debug_assert!(order <= MAX_ORDER);
        Subset { order, bits: 0 }
    }

    pub fn full(order: usize) -> Self {
        let bits = if order == 64 { u64::MAX } else { (1u64 << order) - 1 };
        Subset { order, bits }
    }

    pub fn zero(order: usize) -> Self {
        Subset::from_indices(order, [0])
    }

    /// Builds a subset, silently dropping indices `>= order`.
    pub fn from_indices(order: usize, indices: impl IntoIterator<Item = Elem>) -> Self {
        let mut s = Subset::empty(order);
        for i in indices {
            if i < order {
                s.insert(i);
            }
        }
        s
    }

    pub fn from_bits(order: usize, bits: u64) -> Self {
        Subset {
            order,
            bits: bits & Subset::full(order).bits,
        }
    }

    pub fn from_predicate(order: usize, mut pred: impl FnMut(Elem) -> bool) -> Self {
        Subset::from_indices(order, (0..order).filter(|&i| pred(i)))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn contains(&self, i: Elem) -> bool {
        i < self.order && self.bits >> i & 1 == 1
    }

    pub fn insert(&mut self, i: Elem) {
        assert!(i < self.order, "index {i} out of range for order {}", self.order);
        self.bits |= 1 << i;
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.order
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        let bits = self.bits;
        (0..self.order).filter(move |&i| bits >> i & 1 == 1)
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    pub fn union(&self, other: &Subset) -> Subset {
        Subset {
            order: self.order,
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        Subset {
            order: self.order,
            bits: self.bits & other.bits,
        }
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        Subset {
            order: self.order,
            bits: self.bits & !other.bits,
        }
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_proper_subset_of(&self, other: &Subset) -> bool {
        self.is_subset_of(other) && self.bits != other.bits
    }

    /// Comma-separated ascending index list, e.g. `0,2,4`.
    pub fn to_list_string(&self) -> String {
        self.iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
            .then_with(|| self.order.cmp(&other.order))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_list_string())
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_list_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("addition table is not square")]
    NonSquareTable,
    #[error("additive identity is {0}, but the zero must be element 0")]
    ZeroNotAtIndexZero(Elem),
    #[error("group axioms fail:\n{}", crate::violation::render_violations(.0))]
    Violations(Vec<Violation>),
}

/// A validated finite abelian group whose zero is element 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    add: FiniteTable,
    neg: Vec<Elem>,
}

/// Checks the abelian group axioms on an addition table.
pub fn validate_group(add: FiniteTable) -> Result<FiniteAbelianGroup, GroupError> {
    let n = add.order();
    if let Some([x, y]) = add.first_undefined() {
        return Err(GroupError::Violations(vec![Violation::new(
            Axiom::UndefinedEntry,
            [x, y],
            "addition must be total",
        )]));
    }
    if let Some([x, y]) = add.out_of_range() {
        return Err(GroupError::Violations(vec![Violation::new(
            Axiom::EntryOutOfRange,
            [x, y],
            format!("{x}+{y} = {}", add.get(x, y)),
        )]));
    }

    let is_neutral = |e: Elem| (0..n).all(|x| add.get(e, x) == x && add.get(x, e) == x);
    let mut violations = Vec::new();
    if !is_neutral(0) {
        if let Some(e) = (1..n).find(|&e| is_neutral(e)) {
            return Err(GroupError::ZeroNotAtIndexZero(e));
        }
        let x = (0..n)
            .find(|&x| add.get(0, x) != x || add.get(x, 0) != x)
            .unwrap_or(0);
        violations.push(Violation::new(
            Axiom::AddZeroNeutral,
            [x],
            format!("0+{x} = {}", add.get(0, x)),
        ));
    }
    if let Some([x, y]) = first_pair(n, |x, y| add.get(x, y) != add.get(y, x)) {
        violations.push(Violation::new(
            Axiom::AddCommutative,
            [x, y],
            format!("not commutative at ({x},{y})"),
        ));
    }
    if let Some([x, y, z]) = first_triple(n, |x, y, z| {
        add.get(add.get(x, y), z) != add.get(x, add.get(y, z))
    }) {
        violations.push(Violation::new(Axiom::AddAssociative, [x, y, z], ""));
    }
    let mut neg = vec![0; n];
    for (x, slot) in neg.iter_mut().enumerate() {
        match (0..n).find(|&y| add.get(x, y) == 0 && add.get(y, x) == 0) {
            Some(y) => *slot = y,
            None => {
                if violations.iter().all(|v| v.axiom != Axiom::AddInverse) {
                    violations.push(Violation::new(
                        Axiom::AddInverse,
                        [x],
                        format!("{x} has no additive inverse"),
                    ));
                }
            }
        }
    }
    if violations.is_empty() {
        Ok(FiniteAbelianGroup { add, neg })
    } else {
        Err(GroupError::Violations(violations))
    }
}

impl FiniteAbelianGroup {
    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn table(&self) -> &FiniteTable {
        &self.add
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.add.get(x, y)
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        self.neg[x]
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    /// `k·x` as a repeated sum.
    pub fn scale(&self, k: usize, x: Elem) -> Elem {
        (0..k).fold(0, |acc, _| self.add(acc, x))
    }

    pub fn sum(&self, items: impl IntoIterator<Item = Elem>) -> Elem {
        items.into_iter().fold(0, |acc, x| self.add(acc, x))
    }

    /// Additive order of `x`.
    pub fn element_order(&self, x: Elem) -> usize {
        let mut k = 1;
        let mut acc = x;
        while acc != 0 {
            acc = self.add(acc, x);
            k += 1;
        }
        k
    }

    pub fn carrier(&self) -> Subset {
        Subset::full(self.order())
    }

    /// Whether `s` contains 0 and is closed under addition and negation.
    pub fn is_subgroup(&self, s: &Subset) -> bool {
        s.contains(0)
            && s.iter().all(|x| s.contains(self.neg(x)))
            && s.iter().all(|x| s.iter().all(|y| s.contains(self.add(x, y))))
    }

    /// A generating set chosen greedily by largest additive order, smallest index first.
    pub fn generators(&self) -> Vec<Elem> {
        self.generators_of(&self.carrier())
    }

    /// Generators for the subgroup `h`, chosen the same way as [`Self::generators`].
    pub fn generators_of(&self, h: &Subset) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut span = Subset::zero(self.order());
        while span.len() < h.len() {
            let g = h
                .iter()
                .filter(|&x| !span.contains(x))
                .max_by(|&a, &b| {
                    self.element_order(a)
                        .cmp(&self.element_order(b))
                        .then(b.cmp(&a))
                })
                .expect("span is a proper subset of h");
            gens.push(g);
            span = subgroup_closure(self, &span.union(&Subset::from_indices(self.order(), [g])));
        }
        gens
    }

    /// For each element of the span of `gens`, one coefficient vector `c` with
    /// `x = sum c[i]·gens[i]`; `None` for elements outside the span.
    pub fn coordinates(&self, gens: &[Elem]) -> Vec<Option<Vec<usize>>> {
        let n = self.order();
        let mut coords: Vec<Option<Vec<usize>>> = vec![None; n];
        coords[0] = Some(vec![0; gens.len()]);
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            let cx = coords[x].clone().expect("queued elements have coordinates");
            for (i, &g) in gens.iter().enumerate() {
                let y = self.add(x, g);
                if coords[y].is_none() {
                    let mut cy = cx.clone();
                    cy[i] += 1;
                    coords[y] = Some(cy);
                    queue.push_back(y);
                }
            }
        }
        coords
    }
}

/// Smallest subgroup containing `seed`.
pub fn subgroup_closure(group: &FiniteAbelianGroup, seed: &Subset) -> Subset {
    let mut closed = Subset::zero(group.order()).union(seed);
    let mut frontier: Vec<Elem> = closed.to_vec();
    while let Some(x) = frontier.pop() {
        let members = closed.to_vec();
        for y in members {
            let s = group.add(x, y);
            if !closed.contains(s) {
                closed.insert(s);
                frontier.push(s);
            }
        }
    }
    // finite: closure under + already contains every negative
    closed
}

/// Every subgroup, each exactly once, in canonical order.
pub fn enumerate_subgroups(group: &FiniteAbelianGroup) -> Vec<Subset> {
    let n = group.order();
    let trivial = Subset::zero(n);
    let mut seen: HashSet<u64> = HashSet::from([trivial.bits()]);
    let mut queue = VecDeque::from([trivial]);
    let mut out = Vec::new();
    while let Some(h) = queue.pop_front() {
        for g in 0..n {
            if h.contains(g) {
                continue;
            }
            let mut seed = h;
            seed.insert(g);
            let bigger = subgroup_closure(group, &seed);
            if seen.insert(bigger.bits()) {
                queue.push_back(bigger);
            }
        }
        out.push(h);
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: usize) -> FiniteAbelianGroup {
        validate_group(FiniteTable::from_fn(n, |x, y| (x + y) % n)).unwrap()
    }

    fn klein() -> FiniteAbelianGroup {
        validate_group(FiniteTable::from_fn(4, |x, y| x ^ y)).unwrap()
    }

    #[test]
    fn klein_and_z4_are_groups() {
        assert_eq!(klein().order(), 4);
        let z4 = zn(4);
        assert_eq!(z4.neg(1), 3);
        assert_eq!(z4.element_order(2), 2);
    }

    #[test]
    fn non_commutative_table_reports_pair() {
        let mut t = FiniteTable::from_fn(4, |x, y| x ^ y);
        t.set(1, 2, 0);
        let Err(GroupError::Violations(v)) = validate_group(t) else {
            panic!("expected violations")
        };
        let comm = v.iter().find(|v| v.axiom == Axiom::AddCommutative).unwrap();
        assert_eq!(comm.witness, vec![1, 2]);
        assert!(comm.detail.contains("not commutative at (1,2)"));
    }

    #[test]
    fn zero_must_be_index_zero() {
        // Z2 with the neutral element at index 1
        let t = FiniteTable::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(validate_group(t), Err(GroupError::ZeroNotAtIndexZero(1)));
    }

    #[test]
    fn non_square_rows_rejected() {
        assert!(matches!(
            FiniteTable::from_rows(&[vec![0, 1], vec![1]]),
            Err(TableError::NonSquare { row: 1, .. })
        ));
    }

    #[test]
    fn closure_examples() {
        let z4 = zn(4);
        assert_eq!(subgroup_closure(&z4, &Subset::from_indices(4, [2])).to_vec(), vec![0, 2]);
        assert_eq!(subgroup_closure(&z4, &Subset::empty(4)).to_vec(), vec![0]);
        let k = klein();
        assert!(subgroup_closure(&k, &Subset::from_indices(4, [1, 2])).is_full());
    }

    #[test]
    fn subgroup_lattices() {
        let z4 = zn(4);
        let subs = enumerate_subgroups(&z4);
        assert_eq!(
            subs.iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
            vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]
        );
        assert_eq!(enumerate_subgroups(&klein()).len(), 5);
    }

    #[test]
    fn subset_order_is_size_then_lexicographic() {
        let a = Subset::from_indices(8, [0, 1]);
        let b = Subset::from_indices(8, [0, 2]);
        let c = Subset::from_indices(8, [0, 1, 7]);
        assert!(a < b && b < c);
    }

    #[test]
    fn generators_cover_group() {
        let g = validate_group(FiniteTable::from_fn(8, |x, y| {
            // Z2 x Z4 with index a + 2b
            let (a, b) = (x % 2, x / 2);
            let (c, d) = (y % 2, y / 2);
            (a + c) % 2 + 2 * ((b + d) % 4)
        }))
        .unwrap();
        let gens = g.generators();
        assert_eq!(gens.len(), 2);
        let coords = g.coordinates(&gens);
        for (x, c) in coords.iter().enumerate() {
            let c = c.as_ref().unwrap();
            let back = g.sum(gens.iter().zip(c).map(|(&gen, &k)| g.scale(k, gen)));
            assert_eq!(back, x);
        }
    }
}
