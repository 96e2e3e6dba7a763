//! Finite posets, their file format, and the reduction to principal ideals.

use crate::error::{Error, Result};
use crate::family::{FacetFamily, Mode};

/// A finite poset given by labelled elements and its cover relation.
///
/// Construction accepts any acyclic set of `a < b` pairs; the stored covers
/// are the transitive reduction of what was given.
#[derive(Clone, Debug)]
pub struct Poset {
    elements: Vec<String>,
    /// leq[a][b] is true iff a <= b (reflexive-transitive closure)
    leq: Vec<Vec<bool>>,
    covers: Vec<(usize, usize)>,
}

impl Poset {
    #[allow(clippy::needless_range_loop)]
    pub fn new<S: AsRef<str>>(elements: &[S], relations: &[(usize, usize)]) -> Result<Self> {
        let n = elements.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in relations {
            leq[a][b] = true;
        }
        // Warshall closure; n is small enough that cubic is fine.
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(Error::CycleDetected {
                        element: elements[a].as_ref().to_string(),
                    });
                }
            }
        }
        let mut covers = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || !leq[a][b] {
                    continue;
                }
                let implied = (0..n).any(|c| c != a && c != b && leq[a][c] && leq[c][b]);
                if !implied {
                    covers.push((a, b));
                }
            }
        }
        Ok(Poset {
            elements: elements.iter().map(|s| s.as_ref().to_string()).collect(),
            leq,
            covers,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// Cover pairs (lower, upper) of the transitive reduction.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// The principal ideal `p↓ = {b : b <= p}` as element indices.
    pub fn ideal(&self, p: usize) -> Vec<usize> {
        (0..self.len()).filter(|&b| self.leq[b][p]).collect()
    }
}

/// Parses the poset file format: an `elements <tok> <tok> ...` line followed
/// by zero or more `<tok> < <tok>` lines. `#` starts a comment line.
pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut elements: Option<Vec<String>> = None;
    let mut relations: Vec<(usize, usize)> = Vec::new();
    let index_of = |elements: &Option<Vec<String>>, token: &str| -> Result<usize> {
        elements
            .as_ref()
            .ok_or(Error::MissingElements)?
            .iter()
            .position(|e| e == token)
            .ok_or_else(|| Error::UnknownElement {
                token: token.to_string(),
            })
    };
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let first = parts.next().unwrap();
        if first == "elements" {
            elements = Some(parts.map(str::to_string).collect());
            continue;
        }
        let (lt, upper) = (parts.next(), parts.next());
        match (lt, upper, parts.next()) {
            (Some("<"), Some(upper), None) => {
                let a = index_of(&elements, first)?;
                let b = index_of(&elements, upper)?;
                if a == b {
                    return Err(Error::CycleDetected {
                        element: first.to_string(),
                    });
                }
                relations.push((a, b));
            }
            _ => {
                return Err(Error::MalformedPosetLine {
                    line: line.to_string(),
                })
            }
        }
    }
    let elements = elements.ok_or(Error::MissingElements)?;
    Poset::new(&elements, &relations)
}

/// The family of all principal ideals `p↓`, one per element, in element
/// order and in peeling mode. Peelings of this family are exactly the
/// linear extensions of the poset.
pub fn poset_to_ideals(p: &Poset) -> FacetFamily {
    let facets: Vec<Vec<&str>> = (0..p.len())
        .map(|e| p.ideal(e).into_iter().map(|b| p.element(b)).collect())
        .collect();
    FacetFamily::from_tokens(&facets, Mode::Peeling)
        .expect("principal ideals are distinct and nonempty")
}
