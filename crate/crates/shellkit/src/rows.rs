//! 012e-rows: wildcard-compressed families of subsets, and the solver that
//! writes the model set of a dual Horn formula as a disjoint union of rows.
//!
//! A row fixes some variables to 0 or 1, leaves the `2` positions free, and
//! carries disjoint e-bubbles that each demand "at least one 1 here". One
//! row thus stands for `2^|twos| * prod(2^|bubble| - 1)` subsets.

use num_bigint::BigUint;
use num_traits::One;

use crate::sets::{IndexSubset, SubsetIter};

/// One wildcard row over a variable set `universe`.
///
/// `zeros`, `ones`, `twos` and the bubbles partition the universe, and every
/// bubble has at least two positions (a one-position bubble is just a fixed
/// one and is normalized away on construction).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row012e {
    universe: IndexSubset,
    zeros: IndexSubset,
    ones: IndexSubset,
    twos: IndexSubset,
    bubbles: Vec<IndexSubset>,
}

impl Row012e {
    /// Builds a row, checking the partition invariant and promoting
    /// size-1 bubbles to ones. Panics on a malformed partition or an
    /// empty bubble; those are construction bugs, not data errors.
    pub fn new(
        universe: IndexSubset,
        zeros: IndexSubset,
        ones: IndexSubset,
        twos: IndexSubset,
        bubbles: Vec<IndexSubset>,
    ) -> Self {
        let mut ones = ones;
        let mut kept = Vec::with_capacity(bubbles.len());
        for b in bubbles {
            assert!(!b.is_empty(), "empty e-bubble");
            if b.len() == 1 {
                ones = ones.union(b);
            } else {
                kept.push(b);
            }
        }
        let row = Row012e {
            universe,
            zeros,
            ones,
            twos,
            bubbles: kept,
        };
        row.check_partition();
        row
    }

    /// The row of all subsets of `universe`.
    pub fn all_twos(universe: IndexSubset) -> Self {
        Row012e {
            universe,
            zeros: IndexSubset::EMPTY,
            ones: IndexSubset::EMPTY,
            twos: universe,
            bubbles: Vec::new(),
        }
    }

    /// The row containing exactly the empty set.
    pub fn only_empty_set(universe: IndexSubset) -> Self {
        Row012e {
            universe,
            zeros: universe,
            ones: IndexSubset::EMPTY,
            twos: IndexSubset::EMPTY,
            bubbles: Vec::new(),
        }
    }

    fn check_partition(&self) {
        let mut seen = self.zeros;
        assert!(seen.is_disjoint_from(self.ones), "zeros and ones overlap");
        seen = seen.union(self.ones);
        assert!(
            seen.is_disjoint_from(self.twos),
            "twos overlap fixed positions"
        );
        seen = seen.union(self.twos);
        for b in &self.bubbles {
            assert!(b.len() >= 2, "bubble of size < 2 after normalization");
            assert!(seen.is_disjoint_from(*b), "bubble overlaps other positions");
            seen = seen.union(*b);
        }
        assert_eq!(seen, self.universe, "positions do not cover the universe");
    }

    pub fn universe(&self) -> IndexSubset {
        self.universe
    }

    pub fn zeros(&self) -> IndexSubset {
        self.zeros
    }

    pub fn ones(&self) -> IndexSubset {
        self.ones
    }

    pub fn twos(&self) -> IndexSubset {
        self.twos
    }

    pub fn bubbles(&self) -> &[IndexSubset] {
        &self.bubbles
    }

    /// Membership: `a` avoids the zeros, includes the ones, and meets every
    /// bubble.
    pub fn contains(&self, a: IndexSubset) -> bool {
        debug_assert!(a.is_subset_of(self.universe));
        a.is_disjoint_from(self.zeros)
            && self.ones.is_subset_of(a)
            && self.bubbles.iter().all(|b| !b.is_disjoint_from(a))
    }

    /// `2^|twos| * prod over bubbles of (2^|b| - 1)`.
    pub fn cardinality(&self) -> BigUint {
        let mut count = BigUint::one() << self.twos.len();
        for b in &self.bubbles {
            count *= (BigUint::one() << b.len()) - BigUint::one();
        }
        count
    }

    /// Streams every member exactly once.
    pub fn members(&self) -> RowMembers<'_> {
        RowMembers::new(self)
    }

    /// Renders the row positionally over `positions` variables: `0`/`1`/`2`
    /// for fixed and free positions, one lowercase letter per bubble, and
    /// `.` for positions outside the row's universe.
    pub fn dump(&self, positions: usize) -> String {
        let mut out = String::with_capacity(positions);
        for p in 0..positions {
            let c = if !self.universe.contains(p) {
                '.'
            } else if self.zeros.contains(p) {
                '0'
            } else if self.ones.contains(p) {
                '1'
            } else if self.twos.contains(p) {
                '2'
            } else {
                let idx = self
                    .bubbles
                    .iter()
                    .position(|b| b.contains(p))
                    .expect("position in no component");
                if idx < 26 {
                    (b'a' + idx as u8) as char
                } else {
                    (b'A' + (idx - 26) as u8) as char
                }
            };
            out.push(c);
        }
        out
    }

    /// Sets position `i` to 0. Returns false when the row becomes
    /// unsatisfiable (the position was a fixed one, or would empty a
    /// bubble; bubble emptying cannot happen because a two-position bubble
    /// collapses to a fixed one first).
    fn assign_zero(&mut self, i: usize) -> bool {
        if self.zeros.contains(i) {
            return true;
        }
        if self.ones.contains(i) {
            return false;
        }
        if self.twos.contains(i) {
            self.twos = self.twos.without(i);
            self.zeros = self.zeros.with(i);
            return true;
        }
        let idx = self
            .bubbles
            .iter()
            .position(|b| b.contains(i))
            .expect("position in no component");
        self.zeros = self.zeros.with(i);
        let shrunk = self.bubbles[idx].without(i);
        if shrunk.len() == 1 {
            self.bubbles.swap_remove(idx);
            self.ones = self.ones.union(shrunk);
        } else {
            self.bubbles[idx] = shrunk;
        }
        true
    }

    /// Moves free positions `t` into a fresh bubble, demanding at least one
    /// 1 among them. A single position degenerates to a fixed one.
    fn add_bubble(&mut self, t: IndexSubset) {
        debug_assert!(t.is_subset_of(self.twos) && !t.is_empty());
        self.twos = self.twos.difference(t);
        if t.len() == 1 {
            self.ones = self.ones.union(t);
        } else {
            self.bubbles.push(t);
        }
    }

    /// Sets position `i` to 1. Returns false when `i` is a fixed zero.
    /// Assigning 1 inside a bubble satisfies it, so the rest of that bubble
    /// becomes free.
    fn assign_one(&mut self, i: usize) -> bool {
        if self.ones.contains(i) {
            return true;
        }
        if self.zeros.contains(i) {
            return false;
        }
        if self.twos.contains(i) {
            self.twos = self.twos.without(i);
            self.ones = self.ones.with(i);
            return true;
        }
        let idx = self
            .bubbles
            .iter()
            .position(|b| b.contains(i))
            .expect("position in no component");
        let b = self.bubbles.swap_remove(idx);
        self.ones = self.ones.with(i);
        self.twos = self.twos.union(b.without(i));
        true
    }
}

/// Exact symbolic disjointness of the set families two rows represent:
/// disjoint iff some variable is fixed 0 in one and 1 in the other, or a
/// bubble of one row lies entirely inside the zeros of the other.
pub fn rows_disjoint(a: &Row012e, b: &Row012e) -> bool {
    !a.zeros.intersect(b.ones).is_empty()
        || !a.ones.intersect(b.zeros).is_empty()
        || a.bubbles.iter().any(|bb| bb.is_subset_of(b.zeros))
        || b.bubbles.iter().any(|bb| bb.is_subset_of(a.zeros))
}

/// Odometer over the free choices of a row: a subset of the twos and a
/// nonempty subset of each bubble.
pub struct RowMembers<'a> {
    row: &'a Row012e,
    /// digit 0 iterates twos subsets, digits 1.. iterate bubble subsets
    digits: Vec<SubsetIter>,
    current: Vec<IndexSubset>,
    exhausted: bool,
}

impl<'a> RowMembers<'a> {
    fn new(row: &'a Row012e) -> Self {
        let mut digits = Vec::with_capacity(1 + row.bubbles.len());
        let mut current = Vec::with_capacity(1 + row.bubbles.len());
        let mut twos_iter = row.twos.subsets();
        current.push(twos_iter.next().expect("subset stream is never empty"));
        digits.push(twos_iter);
        for b in &row.bubbles {
            let mut it = b.subsets();
            it.next(); // skip the empty subset; bubbles demand at least one 1
            current.push(it.next().expect("bubble has nonempty subsets"));
            digits.push(it);
        }
        RowMembers {
            row,
            digits,
            current,
            exhausted: false,
        }
    }
}

impl Iterator for RowMembers<'_> {
    type Item = IndexSubset;

    fn next(&mut self) -> Option<IndexSubset> {
        if self.exhausted {
            return None;
        }
        let mut member = self.row.ones;
        for part in &self.current {
            member = member.union(*part);
        }
        // advance the odometer
        let mut pos = 0;
        loop {
            if pos == self.digits.len() {
                self.exhausted = true;
                break;
            }
            if let Some(next) = self.digits[pos].next() {
                self.current[pos] = next;
                break;
            }
            // wrap this digit and carry
            if pos == 0 {
                let mut it = self.row.twos.subsets();
                self.current[0] = it.next().unwrap();
                self.digits[0] = it;
            } else {
                let mut it = self.row.bubbles[pos - 1].subsets();
                it.next();
                self.current[pos] = it.next().unwrap();
                self.digits[pos] = it;
            }
            pos += 1;
        }
        Some(member)
    }
}

/// A dual Horn clause: at most one negated variable plus a disjunction of
/// positive ones. `positives` may be empty only when `negated` is present.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Clause {
    pub negated: Option<usize>,
    pub positives: IndexSubset,
}

impl Clause {
    pub fn positive(positives: IndexSubset) -> Self {
        assert!(!positives.is_empty(), "empty clause");
        Clause {
            negated: None,
            positives,
        }
    }

    pub fn implication(negated: usize, positives: IndexSubset) -> Self {
        Clause {
            negated: Some(negated),
            positives,
        }
    }

    pub fn satisfied_by(&self, a: IndexSubset) -> bool {
        if let Some(v) = self.negated {
            if !a.contains(v) {
                return true;
            }
        }
        !self.positives.is_disjoint_from(a)
    }
}

/// A conjunction of dual Horn clauses over `universe`, with an up-front set
/// of variables forced to 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualHornFormula {
    pub universe: IndexSubset,
    pub forced_zero: IndexSubset,
    pub clauses: Vec<Clause>,
}

impl DualHornFormula {
    pub fn new(universe: IndexSubset, forced_zero: IndexSubset, clauses: Vec<Clause>) -> Self {
        assert!(forced_zero.is_subset_of(universe));
        for c in &clauses {
            assert!(
                c.positives.is_subset_of(universe),
                "clause variable outside universe"
            );
            if let Some(v) = c.negated {
                assert!(universe.contains(v), "clause variable outside universe");
            } else {
                assert!(!c.positives.is_empty(), "empty clause");
            }
        }
        DualHornFormula {
            universe,
            forced_zero,
            clauses,
        }
    }

    pub fn satisfied_by(&self, a: IndexSubset) -> bool {
        a.is_disjoint_from(self.forced_zero) && self.clauses.iter().all(|c| c.satisfied_by(a))
    }
}

/// Restricts a disjoint row family to the members satisfying `clause`.
///
/// Inputs must be pairwise disjoint over one universe; outputs are again
/// pairwise disjoint and their union is exactly the satisfying members.
/// An unsatisfiable restriction yields an empty list.
pub fn impose_clause(rows: &[Row012e], clause: &Clause) -> Vec<Row012e> {
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        impose_on_row(row, clause, &mut out);
    }
    out
}

fn positive_part_satisfied(row: &Row012e, positives: IndexSubset) -> bool {
    !positives.intersect(row.ones()).is_empty()
        || row.bubbles().iter().any(|b| b.is_subset_of(positives))
}

fn impose_on_row(row: &Row012e, clause: &Clause, out: &mut Vec<Row012e>) {
    if positive_part_satisfied(row, clause.positives) {
        out.push(row.clone());
        return;
    }
    match clause.negated {
        Some(v) if row.zeros.contains(v) => out.push(row.clone()),
        Some(v) if row.ones.contains(v) => impose_positive(row, clause.positives, out),
        Some(v) => {
            // v is free or in a bubble: the v=0 half satisfies the clause
            // outright, the v=1 half must meet a positive literal.
            let mut low = row.clone();
            let feasible = low.assign_zero(v);
            debug_assert!(feasible);
            out.push(low);
            let mut high = row.clone();
            let feasible = high.assign_one(v);
            debug_assert!(feasible);
            impose_positive(&high, clause.positives, out);
        }
        None => impose_positive(row, clause.positives, out),
    }
}

/// Restricts `row` to the members meeting `positives`.
///
/// When the live positive literals all sit on free positions the
/// restriction is one fresh e-bubble over them — the compression this
/// formalism exists for. Only when they reach into existing bubbles does
/// the row split, by the position of the first literal set to 1: branch
/// `i` fixes candidates `0..i` to 0 and candidate `i` to 1, so the
/// branches are disjoint and together cover every satisfying member.
fn impose_positive(row: &Row012e, positives: IndexSubset, out: &mut Vec<Row012e>) {
    if positive_part_satisfied(row, positives) {
        out.push(row.clone());
        return;
    }
    if row.bubbles.iter().all(|b| b.is_disjoint_from(positives)) {
        let live = positives.intersect(row.twos);
        if !live.is_empty() {
            let mut sub = row.clone();
            sub.add_bubble(live);
            out.push(sub);
        }
        return;
    }
    let candidates: Vec<usize> = positives.difference(row.zeros).iter().collect();
    'branch: for (i, &hit) in candidates.iter().enumerate() {
        let mut sub = row.clone();
        for &miss in &candidates[..i] {
            if !sub.assign_zero(miss) {
                continue 'branch;
            }
        }
        if !sub.assign_one(hit) {
            continue 'branch;
        }
        out.push(sub);
    }
}

/// Computes the model set of `formula` as a disjoint union of 012e-rows.
///
/// The forced-zero variables are fixed once in the initial row, then the
/// clauses are imposed smallest positive part first; small clauses prune
/// early and the order affects only the compression, never the represented
/// family. An empty result means the formula is unsatisfiable.
pub fn solve_dual_horn(formula: &DualHornFormula) -> Vec<Row012e> {
    let mut start = Row012e::all_twos(formula.universe);
    for v in formula.forced_zero.iter() {
        let feasible = start.assign_zero(v);
        debug_assert!(feasible);
    }
    let mut rows = vec![start];
    let mut clauses: Vec<&Clause> = formula.clauses.iter().collect();
    clauses.sort_by_key(|c| c.positives.len());
    for clause in clauses {
        rows = impose_clause(&rows, clause);
        if rows.is_empty() {
            break;
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn set(ixs: &[usize]) -> IndexSubset {
        IndexSubset::from_indices(ixs)
    }

    /// The three rows compressing the 46 models of the worked four-clause
    /// example: forced zeros x1,x2 with (x5 | !x8) and (x3 | !x4 | x5 | x7)
    /// over eight variables (positions 0-based).
    fn example_rows() -> Vec<Row012e> {
        let u = IndexSubset::full(8);
        let r1 = Row012e::new(u, set(&[0, 1]), set(&[4]), set(&[2, 3, 5, 6, 7]), vec![]);
        let r2 = Row012e::new(u, set(&[0, 1, 2, 3, 4, 6, 7]), set(&[]), set(&[5]), vec![]);
        let r3 = Row012e::new(
            u,
            set(&[0, 1, 4, 7]),
            set(&[]),
            set(&[3, 5]),
            vec![set(&[2, 6])],
        );
        vec![r1, r2, r3]
    }

    fn example_formula() -> DualHornFormula {
        DualHornFormula::new(
            IndexSubset::full(8),
            set(&[0, 1]),
            vec![
                Clause::implication(7, set(&[4])),
                Clause::implication(3, set(&[2, 4, 6])),
            ],
        )
    }

    #[test]
    fn membership_conditions() {
        let rows = example_rows();
        assert!(rows[0].contains(set(&[4])));
        assert!(!rows[2].contains(set(&[3, 5]))); // bubble {3,7} unmet (1-based)
        assert!(rows[2].contains(set(&[2, 3, 5])));
        let all = Row012e::all_twos(IndexSubset::full(5));
        assert!(all.contains(set(&[])));
        assert!(all.contains(set(&[0, 4])));
    }

    #[test]
    fn cardinalities_of_example_rows() {
        let rows = example_rows();
        let counts: Vec<u64> = rows
            .iter()
            .map(|r| u64::try_from(&r.cardinality()).unwrap())
            .collect();
        assert_eq!(counts, vec![32, 2, 12]);
    }

    #[test]
    fn cardinality_corner_cases() {
        let u = IndexSubset::full(6);
        assert_eq!(Row012e::all_twos(u).cardinality(), 64u32.into());
        let pinned = Row012e::new(u, set(&[]), u, set(&[]), vec![]);
        assert_eq!(pinned.cardinality(), 1u32.into());
        let empty_universe = Row012e::all_twos(IndexSubset::EMPTY);
        assert_eq!(empty_universe.cardinality(), 1u32.into());
        assert!(empty_universe.contains(IndexSubset::EMPTY));
    }

    #[test]
    fn size_one_bubble_normalizes_to_a_one() {
        let u = IndexSubset::full(3);
        let row = Row012e::new(u, set(&[0]), set(&[]), set(&[2]), vec![set(&[1])]);
        assert!(row.bubbles().is_empty());
        assert_eq!(row.ones(), set(&[1]));
    }

    #[test]
    fn members_match_cardinality_and_containment() {
        let rows = example_rows();
        for row in &rows {
            let members: Vec<_> = row.members().collect();
            assert_eq!(
                members.len(),
                u64::try_from(&row.cardinality()).unwrap() as usize
            );
            let mut dedup = members.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), members.len(), "duplicate member emitted");
            assert!(members.iter().all(|&a| row.contains(a)));
        }
        // zeros everywhere except one free variable: exactly {} and {5}
        let mut two: Vec<_> = rows[1].members().collect();
        two.sort();
        assert_eq!(two, vec![set(&[]), set(&[5])]);
    }

    #[test]
    fn bubble_row_members() {
        let u = IndexSubset::full(2);
        let row = Row012e::new(u, set(&[]), set(&[]), set(&[]), vec![set(&[0, 1])]);
        let mut members: Vec<_> = row.members().collect();
        members.sort();
        assert_eq!(members, vec![set(&[0]), set(&[1]), set(&[0, 1])]);
    }

    #[test]
    fn single_member_row() {
        let u = IndexSubset::full(2);
        let row = Row012e::new(u, set(&[1]), set(&[0]), set(&[]), vec![]);
        assert_eq!(row.members().collect::<Vec<_>>(), vec![set(&[0])]);
    }

    #[test]
    fn impose_single_negative_clause() {
        let rows = vec![Row012e::all_twos(IndexSubset::full(8))];
        let out = impose_clause(&rows, &Clause::implication(0, IndexSubset::EMPTY));
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].zeros(), set(&[0]));
    }

    #[test]
    fn impose_positive_clause_total_three() {
        let rows = vec![Row012e::all_twos(IndexSubset::full(2))];
        let out = impose_clause(&rows, &Clause::positive(set(&[0, 1])));
        let total: u64 = out
            .iter()
            .map(|r| u64::try_from(&r.cardinality()).unwrap())
            .sum();
        assert_eq!(total, 3); // brute force over the 4 subsets of a 2-universe
        for i in 0..out.len() {
            for j in i + 1..out.len() {
                assert!(rows_disjoint(&out[i], &out[j]));
            }
        }
    }

    #[test]
    fn impose_clauses_sequentially_total_46() {
        let u = IndexSubset::full(8);
        let mut start = Row012e::all_twos(u);
        assert!(start.assign_zero(0) && start.assign_zero(1));
        let mut rows = vec![start];
        rows = impose_clause(&rows, &Clause::implication(7, set(&[4])));
        rows = impose_clause(&rows, &Clause::implication(3, set(&[2, 4, 6])));
        let total: u64 = rows
            .iter()
            .map(|r| u64::try_from(&r.cardinality()).unwrap())
            .sum();
        assert_eq!(total, 46);
    }

    #[test]
    fn solve_example_formula() {
        let formula = example_formula();
        let rows = solve_dual_horn(&formula);
        let total: u64 = rows
            .iter()
            .map(|r| u64::try_from(&r.cardinality()).unwrap())
            .sum();
        assert_eq!(total, 46);
        // every row keeps the forced zeros fixed, and x6 (0-based 5) free
        for r in &rows {
            assert!(formula.forced_zero.is_subset_of(r.zeros()));
            assert!(r.twos().contains(5));
        }
        let mut models: Vec<_> = rows.iter().flat_map(|r| r.members()).collect();
        models.sort();
        assert_eq!(models, oracle::dual_horn_models_brute(&formula));
    }

    #[test]
    fn solve_trivial_formulas() {
        let all = solve_dual_horn(&DualHornFormula::new(
            IndexSubset::full(3),
            IndexSubset::EMPTY,
            vec![],
        ));
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].cardinality(), 8u32.into());

        let contradiction = solve_dual_horn(&DualHornFormula::new(
            IndexSubset::full(1),
            IndexSubset::EMPTY,
            vec![
                Clause::positive(set(&[0])),
                Clause::implication(0, IndexSubset::EMPTY),
            ],
        ));
        assert!(contradiction.is_empty());
    }

    #[test]
    fn forced_zero_interacts_with_positives() {
        // positive clause over a forced-zero variable and a free one
        let formula = DualHornFormula::new(
            IndexSubset::full(3),
            set(&[0]),
            vec![Clause::positive(set(&[0, 1]))],
        );
        let rows = solve_dual_horn(&formula);
        let mut models: Vec<_> = rows.iter().flat_map(|r| r.members()).collect();
        models.sort();
        assert_eq!(models, oracle::dual_horn_models_brute(&formula));
        assert_eq!(models.len(), 2); // {1} and {1,2} in 0-based {1},{1,2}
    }

    #[test]
    fn tautological_clause_keeps_everything() {
        let formula = DualHornFormula::new(
            IndexSubset::full(2),
            IndexSubset::EMPTY,
            vec![Clause::implication(0, set(&[0, 1]))],
        );
        let rows = solve_dual_horn(&formula);
        let total: u64 = rows
            .iter()
            .map(|r| u64::try_from(&r.cardinality()).unwrap())
            .sum();
        assert_eq!(total, 4);
    }

    #[test]
    fn symbolic_disjointness_agrees_with_enumeration() {
        let u = IndexSubset::full(4);
        let rows = vec![
            Row012e::all_twos(u),
            Row012e::only_empty_set(u),
            Row012e::new(u, set(&[0]), set(&[1]), set(&[2, 3]), vec![]),
            Row012e::new(u, set(&[1]), set(&[]), set(&[3]), vec![set(&[0, 2])]),
            Row012e::new(u, set(&[0, 2]), set(&[]), set(&[]), vec![set(&[1, 3])]),
        ];
        for a in &rows {
            for b in &rows {
                let symbolic = rows_disjoint(a, b);
                let members_b: std::collections::HashSet<_> = b.members().collect();
                let enumerated = a.members().all(|m| !members_b.contains(&m));
                assert_eq!(symbolic, enumerated, "rows {a:?} vs {b:?}");
            }
        }
    }

    #[test]
    fn dump_renders_positionally() {
        let rows = example_rows();
        assert_eq!(rows[0].dump(8), "00221222");
        assert_eq!(rows[1].dump(8), "00000200");
        assert_eq!(rows[2].dump(8), "00a202a0");
        // suffix position outside the universe renders as '.'
        let partial = Row012e::all_twos(IndexSubset::full(4).without(1));
        assert_eq!(partial.dump(4), "2.22");
    }
}
