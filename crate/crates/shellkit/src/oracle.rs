//! Brute-force reference implementations.
//!
//! Everything in this module evaluates the defining conditions directly —
//! no 012e-rows, no PSS machinery, no level DP — so the main algorithms can
//! be cross-checked against it on small instances. The CLI `--oracle` flag
//! and the test suites both go through here.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::family::{FacetFamily, Mode, Word};
use crate::poset::Poset;
use crate::rows::DualHornFormula;
use crate::sets::{IndexSubset, VertexSet};

/// All permutations of `0..n` in lexicographic order. Intended for n <= 8.
pub fn permutations(n: usize) -> Vec<Vec<u8>> {
    fn rec(n: usize, current: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Vec<u8>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                current.push(i as u8);
                rec(n, current, used, out);
                current.pop();
                used[i] = false;
            }
        }
    }
    assert!(n <= 10, "permutation oracle is for small n only");
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Checks the shelling condition on a sequence of distinct facet indices:
/// for every position k >= 2 and every earlier i there is an earlier j with
/// `F_i ∩ F_k ⊆ F_j ∩ F_k ≺ F_k`. Prefixes of shellings pass too, so this
/// validates partial sequences as-is.
pub fn is_shelling_sequence(fam: &FacetFamily, seq: &[u8]) -> bool {
    for k_pos in 1..seq.len() {
        let fk = fam.facet(seq[k_pos] as usize);
        for i_pos in 0..k_pos {
            let fi_cap = fam.facet(seq[i_pos] as usize).intersection(fk);
            let policed = (0..k_pos).any(|j_pos| {
                let fj_cap = fam.facet(seq[j_pos] as usize).intersection(fk);
                fi_cap.is_subset_of(&fj_cap) && fj_cap.is_lower_neighbor_of(fk)
            });
            if !policed {
                return false;
            }
        }
    }
    true
}

/// Checks the peeling condition: for every position k >= 2,
/// `(G_1 ∪ .. ∪ G_{k-1}) ∩ G_k ≺ G_k`.
pub fn is_peeling_sequence(fam: &FacetFamily, seq: &[u8]) -> bool {
    if seq.is_empty() {
        return true;
    }
    let mut union = fam.facet(seq[0] as usize).clone();
    for &g in &seq[1..] {
        let gk = fam.facet(g as usize);
        if !union.intersection(gk).is_lower_neighbor_of(gk) {
            return false;
        }
        union.union_with(gk);
    }
    true
}

pub fn is_full_sequence(fam: &FacetFamily, seq: &[u8]) -> bool {
    match fam.mode() {
        Mode::Shelling => is_shelling_sequence(fam, seq),
        Mode::Peeling => is_peeling_sequence(fam, seq),
    }
}

/// Every full word of the family's language, by filtering all n!
/// permutations. Lexicographic order.
pub fn full_words_brute(fam: &FacetFamily) -> Vec<Word> {
    permutations(fam.len())
        .into_iter()
        .filter(|p| is_full_sequence(fam, p))
        .map(Word)
        .collect()
}

/// Direct evaluation of the potential-setment condition for shellings:
/// every member of `a` is policed inside `a` with respect to suffix `k`.
pub fn is_shelling_pss_direct(fam: &FacetFamily, a: IndexSubset, k: usize) -> bool {
    debug_assert!(!a.contains(k));
    let fk = fam.facet(k);
    a.iter().all(|i| {
        let fi_cap = fam.facet(i).intersection(fk);
        a.iter().any(|j| {
            let fj_cap = fam.facet(j).intersection(fk);
            fi_cap.is_subset_of(&fj_cap) && fj_cap.is_lower_neighbor_of(fk)
        })
    })
}

/// Direct evaluation of the potential-setment condition for peelings:
/// the empty setment always qualifies, a nonempty one must satisfy
/// `(∪_{i∈A} F_i) ∩ F_k ≺ F_k`.
pub fn is_peeling_pss_direct(fam: &FacetFamily, a: IndexSubset, k: usize) -> bool {
    debug_assert!(!a.contains(k));
    if a.is_empty() {
        return true;
    }
    let mut union = VertexSet::new(fam.vertex_count());
    for i in a.iter() {
        union.union_with(fam.facet(i));
    }
    union
        .intersection(fam.facet(k))
        .is_lower_neighbor_of(fam.facet(k))
}

pub fn is_pss_direct(fam: &FacetFamily, a: IndexSubset, k: usize) -> bool {
    match fam.mode() {
        Mode::Shelling => is_shelling_pss_direct(fam, a, k),
        Mode::Peeling => is_peeling_pss_direct(fam, a, k),
    }
}

/// All models of a dual Horn formula by testing every subset of the
/// universe. Sorted ascending.
pub fn dual_horn_models_brute(formula: &DualHornFormula) -> Vec<IndexSubset> {
    assert!(
        formula.universe.len() <= 20,
        "brute force is for small universes"
    );
    let mut models: Vec<IndexSubset> = formula
        .universe
        .subsets()
        .filter(|&a| formula.satisfied_by(a))
        .collect();
    models.sort();
    models
}

/// Number of linear extensions by the lattice-of-ideals DP: an ideal `I`
/// is extended by any element whose strict lower set lies inside `I`.
/// Independent of the peeling reduction.
pub fn linear_extensions_ideal_dp(p: &Poset) -> BigUint {
    let n = p.len();
    assert!(n <= 64);
    let below: Vec<u64> = (0..n)
        .map(|e| {
            let mut mask = 0u64;
            for b in 0..n {
                if b != e && p.leq(b, e) {
                    mask |= 1 << b;
                }
            }
            mask
        })
        .collect();
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let mut counts: HashMap<u64, BigUint> = HashMap::new();
    counts.insert(0, BigUint::one());
    // process ideals grouped by size so every predecessor is final
    let mut frontier: Vec<u64> = vec![0];
    for _ in 0..n {
        let mut next: HashMap<u64, BigUint> = HashMap::new();
        for ideal in frontier {
            let c = counts[&ideal].clone();
            for (e, &lower) in below.iter().enumerate() {
                let bit = 1u64 << e;
                if ideal & bit == 0 && lower & !ideal == 0 {
                    *next.entry(ideal | bit).or_insert_with(BigUint::zero) += &c;
                }
            }
        }
        frontier = next.keys().copied().collect();
        frontier.sort_unstable();
        counts.extend(next);
    }
    counts.remove(&full).unwrap_or_else(BigUint::zero)
}

/// Number of linear extensions by filtering all permutations for
/// order-preservation. For n <= 8.
pub fn linear_extensions_brute(p: &Poset) -> BigUint {
    let n = p.len();
    let count = permutations(n)
        .into_iter()
        .filter(|perm| {
            let mut position = vec![0usize; n];
            for (pos, &e) in perm.iter().enumerate() {
                position[e as usize] = pos;
            }
            (0..n).all(|a| (0..n).all(|b| !(p.leq(a, b) && a != b) || position[a] < position[b]))
        })
        .count();
    BigUint::from(count)
}
