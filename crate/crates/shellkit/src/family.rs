//! Facet families: the ordered input sets `F_1, .., F_n`, with vertex
//! interning, validation and the facet file format.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::sets::VertexSet;

/// How a family is interpreted.
///
/// In shelling mode the sets are the facets of a simplicial complex and must
/// be pairwise incomparable. Peeling mode admits arbitrary distinct sets,
/// comparable or not.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Shelling,
    Peeling,
}

/// An ordered family of distinct nonempty vertex sets, at most 64 of them.
///
/// Vertices are arbitrary string tokens interned to dense ids in
/// first-appearance order; all set arithmetic runs on the interned ids.
#[derive(Clone, Debug)]
pub struct FacetFamily {
    facets: Vec<VertexSet>,
    mode: Mode,
    vertex_names: Vec<String>,
}

impl FacetFamily {
    /// Builds a family from facets given as token lists, validating the mode
    /// invariants: no empty facet, no duplicates, at most 64 facets, and in
    /// shelling mode pairwise incomparability.
    pub fn from_tokens<S: AsRef<str>>(facets: &[Vec<S>], mode: Mode) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::NoFacets);
        }
        if facets.len() > 64 {
            return Err(Error::TooManyFacets { n: facets.len() });
        }
        let mut vertex_names: Vec<String> = Vec::new();
        let mut ids: HashMap<String, usize> = HashMap::new();
        let mut sets: Vec<VertexSet> = Vec::with_capacity(facets.len());
        for (index, tokens) in facets.iter().enumerate() {
            if tokens.is_empty() {
                return Err(Error::EmptyFacet { index: index + 1 });
            }
            let mut set = VertexSet::new(vertex_names.len());
            for token in tokens {
                let token = token.as_ref();
                let id = *ids.entry(token.to_string()).or_insert_with(|| {
                    vertex_names.push(token.to_string());
                    vertex_names.len() - 1
                });
                set.insert(id);
            }
            sets.push(set);
        }
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                if sets[i] == sets[j] {
                    return Err(Error::DuplicateFacet {
                        first: i + 1,
                        second: j + 1,
                    });
                }
                if mode == Mode::Shelling {
                    if sets[i].is_subset_of(&sets[j]) {
                        return Err(Error::ComparableFacets {
                            smaller: i + 1,
                            larger: j + 1,
                        });
                    }
                    if sets[j].is_subset_of(&sets[i]) {
                        return Err(Error::ComparableFacets {
                            smaller: j + 1,
                            larger: i + 1,
                        });
                    }
                }
            }
        }
        Ok(FacetFamily {
            facets: sets,
            mode,
            vertex_names,
        })
    }

    /// Number of facets `n`.
    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// The `i`-th facet, 0-based.
    pub fn facet(&self, i: usize) -> &VertexSet {
        &self.facets[i]
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Number of distinct vertices `|W|`.
    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn vertex_name(&self, id: usize) -> &str {
        &self.vertex_names[id]
    }

    /// Facet as original tokens, in interning order.
    pub fn facet_tokens(&self, i: usize) -> Vec<&str> {
        self.facets[i].iter().map(|v| self.vertex_name(v)).collect()
    }

    /// Writes the family in the facet file format, one facet per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.len() {
            let tokens = self.facet_tokens(i);
            out.push_str(&tokens.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for FacetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Splits facet file text into raw token lists: `#` starts a comment line,
/// each non-blank line is one facet of whitespace-separated vertex tokens.
pub fn facet_lines(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .map(str::trim)
        .filter(|line| !line.is_empty() && !line.starts_with('#'))
        .map(|line| line.split_whitespace().map(str::to_string).collect())
        .collect()
}

/// Parses the facet file format.
pub fn parse_facets(text: &str, mode: Mode) -> Result<FacetFamily> {
    FacetFamily::from_tokens(&facet_lines(text), mode)
}

/// Parses the JSON alternative: an array of arrays of strings.
pub fn parse_facets_json(text: &str, mode: Mode) -> Result<FacetFamily> {
    let parsed: Vec<Vec<String>> =
        serde_json::from_str(text).map_err(|e| Error::FacetJson(e.to_string()))?;
    FacetFamily::from_tokens(&parsed, mode)
}

/// Drops every set that is contained in a later or earlier one, keeping the
/// first occurrence of duplicates. Explicit repair for inputs that list
/// non-maximal faces; shelling-mode validation stays strict otherwise.
pub fn maximalize(facets: Vec<Vec<String>>) -> Vec<Vec<String>> {
    let as_sets: Vec<std::collections::BTreeSet<&String>> =
        facets.iter().map(|f| f.iter().collect()).collect();
    let mut keep = vec![true; facets.len()];
    for i in 0..facets.len() {
        for j in 0..facets.len() {
            if i == j || !keep[i] || !keep[j] {
                continue;
            }
            if as_sets[i] == as_sets[j] {
                if i > j {
                    keep[i] = false;
                }
            } else if as_sets[i].is_subset(&as_sets[j]) {
                keep[i] = false;
            }
        }
    }
    facets
        .into_iter()
        .zip(keep)
        .filter_map(|(f, k)| k.then_some(f))
        .collect()
}

/// A simple word over the facet-index alphabet: a sequence of distinct
/// 0-based indices. `Display` renders 1-based, comma-separated.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    /// The support: the set of letters.
    pub fn support(&self) -> crate::sets::IndexSubset {
        let mut s = crate::sets::IndexSubset::EMPTY;
        for &a in &self.0 {
            s = s.with(a as usize);
        }
        s
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, &a) in self.0.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", a + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}
