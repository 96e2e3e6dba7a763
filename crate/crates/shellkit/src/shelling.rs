//! The PSS-poset for shellings: cop/hooligan classification per suffix,
//! the dual Horn formula per suffix, and the compressed row family whose
//! union over suffix k is exactly the potential setments of k.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::family::FacetFamily;
use crate::rows::{solve_dual_horn, Clause, DualHornFormula, Row012e};
use crate::sets::IndexSubset;

/// Per-suffix classification of the other facet indices.
///
/// For a fixed suffix k, index j is a *cop* when `F_j ∩ F_k ≺ F_k`, and a
/// *hooligan* otherwise. A hooligan i is *policeable* when some cop j
/// covers it, `F_i ∩ F_k ⊆ F_j ∩ F_k`; its cop-set collects all such j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuffixClass {
    pub cops: IndexSubset,
    /// policeable hooligan -> all cops policing it (parallel vectors,
    /// hooligans ascending)
    pub policeable: Vec<(usize, IndexSubset)>,
    pub non_policeable: IndexSubset,
}

/// The cop/hooligan tables for every suffix.
#[derive(Clone, Debug)]
pub struct CopHooliganTable {
    pub per_suffix: Vec<SuffixClass>,
}

impl CopHooliganTable {
    pub fn len(&self) -> usize {
        self.per_suffix.len()
    }

    pub fn is_empty(&self) -> bool {
        self.per_suffix.is_empty()
    }

    pub fn suffix(&self, k: usize) -> &SuffixClass {
        &self.per_suffix[k]
    }
}

/// Classifies every pair (i, k): all pairwise intersections are computed
/// once, then each suffix gets its cops, policeable hooligans with full
/// cop-sets, and non-policeable hooligans.
#[allow(clippy::needless_range_loop)]
pub fn classify(fam: &FacetFamily) -> CopHooliganTable {
    let n = fam.len();
    let inter: Vec<Vec<crate::sets::VertexSet>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| fam.facet(i).intersection(fam.facet(j)))
                .collect()
        })
        .collect();
    let mut per_suffix = Vec::with_capacity(n);
    for k in 0..n {
        let fk_size = fam.facet(k).len();
        let mut cops = IndexSubset::EMPTY;
        for j in 0..n {
            if j != k && inter[j][k].len() + 1 == fk_size {
                cops = cops.with(j);
            }
        }
        let mut policeable = Vec::new();
        let mut non_policeable = IndexSubset::EMPTY;
        for i in 0..n {
            if i == k || cops.contains(i) {
                continue;
            }
            let mut cop_set = IndexSubset::EMPTY;
            for j in cops.iter() {
                if inter[i][k].is_subset_of(&inter[j][k]) {
                    cop_set = cop_set.with(j);
                }
            }
            if cop_set.is_empty() {
                non_policeable = non_policeable.with(i);
            } else {
                policeable.push((i, cop_set));
            }
        }
        per_suffix.push(SuffixClass {
            cops,
            policeable,
            non_policeable,
        });
    }
    CopHooliganTable { per_suffix }
}

/// The dual Horn formula whose models over `[n] \ {k}` are exactly the
/// potential setments of k: non-policeable hooligans are forced to 0 and
/// each policeable hooligan i contributes `¬x_i ∨ (cops policing i)`.
/// Cops appear only where referenced, so an idle cop stays free.
pub fn build_formula(table: &CopHooliganTable, k: usize) -> DualHornFormula {
    let n = table.len();
    let class = table.suffix(k);
    let universe = IndexSubset::full(n).without(k);
    let clauses = class
        .policeable
        .iter()
        .map(|&(hooligan, cop_set)| Clause::implication(hooligan, cop_set))
        .collect();
    DualHornFormula::new(universe, class.non_policeable, clauses)
}

/// The compressed PSS-poset of a shelling-mode family: for each suffix k a
/// disjoint list of 012e-rows over `[n] \ {k}` whose union is the set of
/// potential setments of k.
#[derive(Clone, Debug)]
pub struct PssRowFamily {
    rows: Vec<Vec<Row012e>>,
}

impl PssRowFamily {
    pub fn from_rows(rows: Vec<Vec<Row012e>>) -> Self {
        PssRowFamily { rows }
    }

    /// Number of suffixes n.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self, k: usize) -> &[Row012e] {
        &self.rows[k]
    }

    /// Membership test answered through the rows only.
    pub fn is_pss(&self, a: IndexSubset, k: usize) -> bool {
        debug_assert!(!a.contains(k));
        self.rows[k].iter().any(|r| r.contains(a))
    }

    /// Total number of potential setment-suffix pairs, summed over all
    /// suffixes via the row cardinality formula.
    pub fn pss_count(&self) -> BigUint {
        let mut total = BigUint::zero();
        for per_k in &self.rows {
            for row in per_k {
                total += row.cardinality();
            }
        }
        total
    }

    /// Number of pairs with a nonempty setment. Every suffix admits the
    /// empty setment, so this is the interesting part of the poset and the
    /// figure benchmark tables quote.
    pub fn nonempty_pss_count(&self) -> BigUint {
        let empties = (0..self.len())
            .filter(|&k| self.is_pss(IndexSubset::EMPTY, k))
            .count();
        self.pss_count() - BigUint::from(empties)
    }

    /// Total number of rows across all suffixes.
    pub fn row_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }
}

/// Builds the PSS rows of a shelling-mode family: one dual Horn solve per
/// suffix. The solves are independent; `threads > 1` runs them on a local
/// thread pool with results in suffix order either way.
pub fn pss_rows_with_threads(fam: &FacetFamily, threads: usize) -> PssRowFamily {
    let table = classify(fam);
    pss_rows_from_table(&table, threads)
}

pub fn pss_rows_from_table(table: &CopHooliganTable, threads: usize) -> PssRowFamily {
    let n = table.len();
    let solve_one = |k: usize| solve_dual_horn(&build_formula(table, k));
    let rows = if threads > 1 {
        crate::parallel::run_indexed(n, threads, solve_one)
    } else {
        (0..n).map(solve_one).collect()
    };
    PssRowFamily::from_rows(rows)
}

pub fn pss_rows(fam: &FacetFamily) -> PssRowFamily {
    pss_rows_with_threads(fam, 1)
}

/// Shellability failure modes.
///
/// Type 1: two or more suffixes without cops (each would have to come
/// first). Type 2: every suffix has a non-policeable hooligan (none can
/// come last). Type 3: no potential setment of full co-size, so no word
/// can reach length n. Type 4: no admissible n-chain at all; implied by
/// Type 3 and equivalent to the count being zero.
#[derive(Clone, Debug, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FailureReport {
    /// 1-based suffixes without cops, present when there are at least two
    #[serde(skip_serializing_if = "Option::is_none")]
    pub type1: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub type2: Option<bool>,
    /// per-suffix witness hooligans (1-based pairs), present when type2 holds
    #[serde(skip_serializing_if = "Option::is_none")]
    pub type2_witnesses: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub type3: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub type4: Option<bool>,
}

/// The suffixes with no cops, when at least two exist. Any cop-less suffix
/// must open every shelling, so two of them are irreconcilable.
pub fn detect_type1(table: &CopHooliganTable) -> Option<Vec<usize>> {
    let witnesses: Vec<usize> = (0..table.len())
        .filter(|&k| table.suffix(k).cops.is_empty())
        .collect();
    (witnesses.len() >= 2).then_some(witnesses)
}

/// True when every suffix has a non-policeable hooligan; the witnesses give
/// one such hooligan per suffix (0-based pairs).
pub fn detect_type2(table: &CopHooliganTable) -> (bool, Vec<(usize, usize)>) {
    let mut witnesses = Vec::with_capacity(table.len());
    for k in 0..table.len() {
        match table.suffix(k).non_policeable.iter().next() {
            Some(h) => witnesses.push((k, h)),
            None => return (false, Vec::new()),
        }
    }
    (true, witnesses)
}

/// True when no suffix admits its full complement as a potential setment,
/// so the language has no words of length n.
pub fn detect_type3(p: &PssRowFamily) -> bool {
    let n = p.len();
    let full = IndexSubset::full(n);
    (0..n).all(|k| !p.is_pss(full.without(k), k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{parse_facets, Mode};
    use crate::oracle;

    fn set(ixs: &[usize]) -> IndexSubset {
        IndexSubset::from_indices(ixs)
    }

    fn toy_complex() -> FacetFamily {
        parse_facets("a c d f\na b c f\na b c d e g\nc d e f g\n", Mode::Shelling).unwrap()
    }

    #[test]
    fn toy_complex_classification() {
        let table = classify(&toy_complex());
        // suffix 4 (0-based 3): only facet 3 is a cop, 1 and 2 are
        // non-policeable hooligans, so any shelling starts 3,4
        let k4 = table.suffix(3);
        assert_eq!(k4.cops, set(&[2]));
        assert!(k4.policeable.is_empty());
        assert_eq!(k4.non_policeable, set(&[0, 1]));
        // suffix 3: every other facet is a cop-less hooligan
        let k3 = table.suffix(2);
        assert!(k3.cops.is_empty());
        assert_eq!(k3.non_policeable, set(&[0, 1, 3]));
        // suffix 1: everyone is a cop
        let k1 = table.suffix(0);
        assert_eq!(k1.cops, set(&[1, 2, 3]));
        // suffix 2: facet 4 is a hooligan policed exactly by facet 1
        let k2 = table.suffix(1);
        assert_eq!(k2.cops, set(&[0, 2]));
        assert_eq!(k2.policeable, vec![(3, set(&[0]))]);
    }

    #[test]
    fn single_facet_classification() {
        let fam = parse_facets("x", Mode::Shelling).unwrap();
        let table = classify(&fam);
        assert_eq!(table.len(), 1);
        let only = table.suffix(0);
        assert!(only.cops.is_empty());
        assert!(only.policeable.is_empty());
        assert!(only.non_policeable.is_empty());
    }

    #[test]
    fn formula_of_the_nine_facet_scenario() {
        // suffix 9: hooligan 8 has cop 5; hooligan 4 has cops 3,5,7;
        // hooligans 1,2 have no cops; cop 6 polices nobody (0-based below)
        let mut per_suffix: Vec<SuffixClass> = (0..9)
            .map(|_| SuffixClass {
                cops: IndexSubset::EMPTY,
                policeable: Vec::new(),
                non_policeable: IndexSubset::EMPTY,
            })
            .collect();
        per_suffix[8] = SuffixClass {
            cops: set(&[2, 4, 5, 6]),
            policeable: vec![(3, set(&[2, 4, 6])), (7, set(&[4]))],
            non_policeable: set(&[0, 1]),
        };
        let table = CopHooliganTable { per_suffix };
        let formula = build_formula(&table, 8);
        assert_eq!(formula.universe, IndexSubset::full(9).without(8));
        assert_eq!(formula.forced_zero, set(&[0, 1]));
        let mut clauses = formula.clauses.clone();
        clauses.sort();
        assert_eq!(
            clauses,
            vec![
                Clause::implication(3, set(&[2, 4, 6])),
                Clause::implication(7, set(&[4])),
            ]
        );
        // the models count like the worked example: 46 of them
        let rows = solve_dual_horn(&formula);
        let total: u64 = rows
            .iter()
            .map(|r| u64::try_from(&r.cardinality()).unwrap())
            .sum();
        assert_eq!(total, 46);
    }

    #[test]
    fn formula_extremes() {
        // all others cops: no clauses, nothing forced
        let table = classify(&parse_facets("a b\nb c\nc a", Mode::Shelling).unwrap());
        let formula = build_formula(&table, 0);
        assert!(formula.clauses.is_empty());
        assert!(formula.forced_zero.is_empty());
        let rows = solve_dual_horn(&formula);
        let total: u64 = rows
            .iter()
            .map(|r| u64::try_from(&r.cardinality()).unwrap())
            .sum();
        assert_eq!(total, 4);
        // all others cop-less hooligans: only the empty setment survives
        let table = classify(&parse_facets("a b\nc d\ne f", Mode::Shelling).unwrap());
        let formula = build_formula(&table, 0);
        assert_eq!(formula.forced_zero, set(&[1, 2]));
        let rows = solve_dual_horn(&formula);
        let members: Vec<_> = rows.iter().flat_map(|r| r.members()).collect();
        assert_eq!(members, vec![IndexSubset::EMPTY]);
    }

    #[test]
    fn toy_complex_pss_membership() {
        let fam = toy_complex();
        let p = pss_rows(&fam);
        for k in 0..4 {
            assert!(p.is_pss(IndexSubset::EMPTY, k));
        }
        assert!(p.is_pss(set(&[2]), 3)); // facet 3 may precede facet 4
        assert!(!p.is_pss(set(&[0, 1, 3]), 2));
        assert!(!p.is_pss(set(&[3]), 1));
        assert!(p.is_pss(set(&[3, 0]), 1));
    }

    #[test]
    fn pss_rows_agree_with_direct_condition() {
        let fam = toy_complex();
        let p = pss_rows(&fam);
        let n = fam.len();
        for k in 0..n {
            for a in IndexSubset::full(n).without(k).subsets() {
                assert_eq!(
                    p.is_pss(a, k),
                    oracle::is_shelling_pss_direct(&fam, a, k),
                    "mismatch at ({a}, {})",
                    k + 1
                );
            }
        }
    }

    #[test]
    fn cops_iff_nonempty_setments() {
        let fams = [
            toy_complex(),
            parse_facets("a b\nc d\ne f", Mode::Shelling).unwrap(),
            parse_facets("a b\nb c\nc d", Mode::Shelling).unwrap(),
        ];
        for fam in &fams {
            let table = classify(fam);
            let p = pss_rows(fam);
            for k in 0..fam.len() {
                let has_cops = !table.suffix(k).cops.is_empty();
                let has_nonempty = IndexSubset::full(fam.len())
                    .without(k)
                    .subsets()
                    .any(|a| !a.is_empty() && p.is_pss(a, k));
                assert_eq!(has_cops, has_nonempty);
            }
        }
    }

    #[test]
    fn failure_detectors_on_toy_and_small_families() {
        let fam = toy_complex();
        let table = classify(&fam);
        assert!(detect_type1(&table).is_none()); // only suffix 3 is cop-less
        let (type2, _) = detect_type2(&table);
        assert!(!type2); // suffix 1 has no non-policeable hooligan
        assert!(!detect_type3(&pss_rows(&fam)));

        // three pairwise-disjoint 2-sets: every intersection is empty
        let disjoint = parse_facets("a b\nc d\ne f", Mode::Shelling).unwrap();
        let table = classify(&disjoint);
        assert_eq!(detect_type1(&table), Some(vec![0, 1, 2]));
        let (type2, witnesses) = detect_type2(&table);
        assert!(type2);
        assert_eq!(witnesses.len(), 3);
        assert!(detect_type3(&pss_rows(&disjoint)));

        // two disjoint facets: no level-1 setment at all
        let two = parse_facets("a b\nc d", Mode::Shelling).unwrap();
        assert!(detect_type3(&pss_rows(&two)));

        // single facet: nothing fails
        let one = parse_facets("x", Mode::Shelling).unwrap();
        let table = classify(&one);
        assert!(detect_type1(&table).is_none());
        assert!(!detect_type2(&table).0);
        assert!(!detect_type3(&pss_rows(&one))); // the empty setment has size n-1 = 0
    }

    #[test]
    fn monotone_policing_with_cops() {
        let fam = toy_complex();
        let table = classify(&fam);
        let p = pss_rows(&fam);
        let n = fam.len();
        for k in 0..n {
            let cops = table.suffix(k).cops;
            let others = IndexSubset::full(n).without(k);
            for a in others.subsets() {
                if !p.is_pss(a, k) {
                    continue;
                }
                for extra in cops.difference(a).subsets() {
                    assert!(p.is_pss(a.union(extra), k), "adding cops broke ({a}, {k})");
                }
            }
        }
    }
}
