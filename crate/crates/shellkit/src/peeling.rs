//! PSS-posets for peelings of arbitrary set families, and linear-extension
//! counting of posets through the peeling of principal ideals.
//!
//! A peeling orders the sets so that every set meets the union of its
//! predecessors in all but exactly one element. For suffix k that missing
//! element v decomposes the potential setments by which element of `F_k`
//! stays uncovered, and each piece is a set-covering problem: pick sets
//! avoiding v whose union covers `F_k \ {v}`. Coverings are pure-positive
//! clauses, so the dual Horn engine serves unchanged.

use num_bigint::BigUint;

use crate::family::{FacetFamily, Mode};
use crate::poset::{poset_to_ideals, Poset};
use crate::rows::{solve_dual_horn, Clause, DualHornFormula, Row012e};
use crate::search::{count_full_words, enumerate_full_words, FullWordIter, WordOrder};
use crate::sets::{IndexSubset, VertexSet};
use crate::shelling::PssRowFamily;

/// The covering problem of one (suffix, uncovered-element) pair.
#[derive(Clone, Debug)]
pub struct CoveringInstance {
    /// X = F_k \ {v}, the vertices that must be covered
    pub target: VertexSet,
    /// indices i != k with v not in F_i
    pub allowed: IndexSubset,
    /// x in X -> the allowed indices whose set contains x
    pub per_vertex: Vec<(usize, IndexSubset)>,
}

impl CoveringInstance {
    pub fn new(fam: &FacetFamily, k: usize, v: usize) -> Self {
        debug_assert!(fam.facet(k).contains(v));
        let mut target = fam.facet(k).clone();
        target.remove(v);
        let mut allowed = IndexSubset::EMPTY;
        for i in 0..fam.len() {
            if i != k && !fam.facet(i).contains(v) {
                allowed = allowed.with(i);
            }
        }
        let per_vertex = target
            .iter()
            .map(|x| {
                let mut covers = IndexSubset::EMPTY;
                for i in allowed.iter() {
                    if fam.facet(i).contains(x) {
                        covers = covers.with(i);
                    }
                }
                (x, covers)
            })
            .collect();
        CoveringInstance {
            target,
            allowed,
            per_vertex,
        }
    }

    /// The covering constraints as a formula over `[n] \ {k}`: indices whose
    /// set contains v are forced out, and every target vertex contributes
    /// one positive clause. Returns `None` when some vertex is coverable by
    /// nothing, i.e. the instance has no coverings.
    pub fn to_formula(&self, n: usize, k: usize) -> Option<DualHornFormula> {
        let universe = IndexSubset::full(n).without(k);
        let mut clauses = Vec::with_capacity(self.per_vertex.len());
        for &(_, covers) in &self.per_vertex {
            if covers.is_empty() {
                return None;
            }
            clauses.push(Clause::positive(covers));
        }
        Some(DualHornFormula::new(
            universe,
            universe.difference(self.allowed),
            clauses,
        ))
    }
}

fn rows_for_suffix(fam: &FacetFamily, k: usize) -> Vec<Row012e> {
    let n = fam.len();
    let mut rows = Vec::new();
    for v in fam.facet(k).iter() {
        if let Some(formula) = CoveringInstance::new(fam, k, v).to_formula(n, k) {
            rows.extend(solve_dual_horn(&formula));
        }
    }
    // The uncovered element determines v, so rows of distinct v are
    // disjoint. The empty setment shows up only through a singleton F_k;
    // larger sets get it adjoined, since any single set starts a peeling.
    if fam.facet(k).len() > 1 {
        rows.push(Row012e::only_empty_set(IndexSubset::full(n).without(k)));
    }
    rows
}

/// Builds the compressed PSS-poset of a peeling-mode family.
pub fn peeling_pss_rows_with_threads(fam: &FacetFamily, threads: usize) -> PssRowFamily {
    assert_eq!(
        fam.mode(),
        Mode::Peeling,
        "peeling rows need a peeling-mode family"
    );
    let n = fam.len();
    let rows = if threads > 1 {
        crate::parallel::run_indexed(n, threads, |k| rows_for_suffix(fam, k))
    } else {
        (0..n).map(|k| rows_for_suffix(fam, k)).collect()
    };
    PssRowFamily::from_rows(rows)
}

pub fn peeling_pss_rows(fam: &FacetFamily) -> PssRowFamily {
    peeling_pss_rows_with_threads(fam, 1)
}

/// Exact number of peelings of the family.
pub fn count_peelings(fam: &FacetFamily) -> BigUint {
    count_full_words(&peeling_pss_rows(fam))
}

/// Streams the peelings, up to `limit` when given.
pub fn enumerate_peelings(pss: &PssRowFamily, limit: Option<usize>) -> FullWordIter<'_> {
    enumerate_full_words(pss, limit, WordOrder::Lexicographic)
}

/// Number of linear extensions of a poset: the peelings of its family of
/// principal ideals are exactly the linear extensions.
pub fn count_linear_extensions(p: &Poset) -> BigUint {
    count_peelings(&poset_to_ideals(p))
}
