//! Benchmark family generators: rank-2 matroids, partition matroids,
//! graphic matroids (spanning trees), and chessboard complexes. Orderings
//! are fixed so facet indices, and hence enumerated words, are reproducible
//! across runs and platforms.
//!
//! Each generator has a raw form producing facet token lists — that is
//! what the CLI emits, with no size cap — and a `gen_*` form that builds a
//! validated [`FacetFamily`], which enforces the 64-facet analysis limit.

use crate::error::{Error, Result};
use crate::family::{FacetFamily, Mode};

fn into_family(facets: Vec<Vec<String>>) -> Result<FacetFamily> {
    FacetFamily::from_tokens(&facets, Mode::Shelling)
}

/// Facets of the simple rank-2 matroid complex on ground set `[m]`: all
/// 2-subsets, lexicographic.
pub fn m2m_facets(m: usize) -> Result<Vec<Vec<String>>> {
    if m < 3 {
        return Err(Error::GroundSetTooSmall { m });
    }
    let mut facets = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            facets.push(vec![i.to_string(), j.to_string()]);
        }
    }
    Ok(facets)
}

pub fn gen_m2m(m: usize) -> Result<FacetFamily> {
    into_family(m2m_facets(m)?)
}

/// Facets of a partition matroid complex: all transversals of the blocks
/// (one element per block), odometer order with the last block fastest.
pub fn partition_matroid_facets<S: AsRef<str>>(blocks: &[Vec<S>]) -> Result<Vec<Vec<String>>> {
    if blocks.iter().any(Vec::is_empty) || blocks.is_empty() {
        return Err(Error::EmptyBlock);
    }
    let mut seen = std::collections::HashSet::new();
    for block in blocks {
        for token in block {
            if !seen.insert(token.as_ref()) {
                return Err(Error::OverlappingBlocks {
                    token: token.as_ref().to_string(),
                });
            }
        }
    }
    let mut facets: Vec<Vec<String>> = Vec::new();
    let mut choice = vec![0usize; blocks.len()];
    loop {
        facets.push(
            blocks
                .iter()
                .zip(&choice)
                .map(|(block, &c)| block[c].as_ref().to_string())
                .collect(),
        );
        let mut pos = blocks.len();
        loop {
            if pos == 0 {
                return Ok(facets);
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < blocks[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

pub fn gen_partition_matroid<S: AsRef<str>>(blocks: &[Vec<S>]) -> Result<FacetFamily> {
    into_family(partition_matroid_facets(blocks)?)
}

/// Blocks of given sizes with canonical element names `a1, a2, .., b1, ..`.
pub fn named_blocks(sizes: &[usize]) -> Vec<Vec<String>> {
    sizes
        .iter()
        .enumerate()
        .map(|(b, &size)| {
            let letter = (b'a' + (b % 26) as u8) as char;
            (1..=size).map(|e| format!("{letter}{e}")).collect()
        })
        .collect()
}

/// Edge list of the complete graph on `m` vertices named `1..m`,
/// lexicographic.
pub fn complete_graph_edges(m: usize) -> Vec<(String, String)> {
    let mut edges = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            edges.push((i.to_string(), j.to_string()));
        }
    }
    edges
}

/// Facets of a graphic matroid complex: the edge sets of all spanning
/// trees, each edge named `u-v`, ordered by ascending edge-subset bitmask.
pub fn spanning_tree_facets(edges: &[(String, String)]) -> Result<Vec<Vec<String>>> {
    let m = edges.len();
    if m > 16 {
        return Err(Error::TooManyEdges { m });
    }
    let mut ids: std::collections::HashMap<&str, usize> = std::collections::HashMap::new();
    let mut ends = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (u, v) in edges {
        if u == v {
            return Err(Error::MalformedEdge {
                line: format!("{u} {v}"),
            });
        }
        let key = if u < v {
            (u.clone(), v.clone())
        } else {
            (v.clone(), u.clone())
        };
        if !seen.insert(key) {
            return Err(Error::MalformedEdge {
                line: format!("{u} {v}"),
            });
        }
        let next = ids.len();
        let a = *ids.entry(u.as_str()).or_insert(next);
        let next = ids.len();
        let b = *ids.entry(v.as_str()).or_insert(next);
        ends.push((a, b));
    }
    let nv = ids.len();
    if !spans(&ends, nv, (1u32 << m) - 1) {
        return Err(Error::DisconnectedGraph);
    }
    let mut facets: Vec<Vec<String>> = Vec::new();
    for mask in 0u32..1 << m {
        if mask.count_ones() as usize == nv - 1 && spans(&ends, nv, mask) {
            facets.push(
                (0..m)
                    .filter(|&e| mask >> e & 1 == 1)
                    .map(|e| format!("{}-{}", edges[e].0, edges[e].1))
                    .collect(),
            );
        }
    }
    Ok(facets)
}

pub fn gen_spanning_trees(edges: &[(String, String)]) -> Result<FacetFamily> {
    into_family(spanning_tree_facets(edges)?)
}

/// True when the edge subset connects all `nv` vertices.
fn spans(ends: &[(usize, usize)], nv: usize, mask: u32) -> bool {
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut parent: Vec<usize> = (0..nv).collect();
    let mut components = nv;
    for (e, &(a, b)) in ends.iter().enumerate() {
        if mask >> e & 1 == 1 {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                components -= 1;
            }
        }
    }
    components == 1
}

/// Left-aligned rows of weakly decreasing lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChessboardShape {
    row_lengths: Vec<usize>,
}

impl ChessboardShape {
    pub fn new(row_lengths: Vec<usize>) -> Result<Self> {
        if row_lengths.is_empty()
            || row_lengths.windows(2).any(|w| w[1] > w[0])
            || *row_lengths.last().unwrap() == 0
        {
            return Err(Error::InvalidBoardShape);
        }
        let squares: usize = row_lengths.iter().sum();
        if squares > 64 {
            return Err(Error::BoardTooLarge { squares });
        }
        Ok(ChessboardShape { row_lengths })
    }

    pub fn row_lengths(&self) -> &[usize] {
        &self.row_lengths
    }
}

/// Facets of the chessboard complex of a board: faces are non-taking rook
/// placements (no two rooks share a row or column) and the facets are the
/// inclusion-maximal ones. The complex need not be pure, so maximality is
/// under set inclusion, not cardinality. Squares are named `r<i>c<j>`,
/// 1-based; facets are ordered by ascending square-id bitmask.
pub fn chessboard_facets(shape: &ChessboardShape) -> Vec<Vec<String>> {
    fn rec(
        rows: &[usize],
        r: usize,
        used_cols: u64,
        current: &mut Vec<(usize, usize)>,
        placements: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if r == rows.len() {
            placements.push(current.clone());
            return;
        }
        rec(rows, r + 1, used_cols, current, placements); // no rook in row r
        for c in 0..rows[r] {
            if used_cols >> c & 1 == 0 {
                current.push((r, c));
                rec(rows, r + 1, used_cols | 1 << c, current, placements);
                current.pop();
            }
        }
    }
    let rows = shape.row_lengths();
    let n_rows = rows.len();
    let n_cols = rows[0];
    let mut placements: Vec<Vec<(usize, usize)>> = Vec::new();
    rec(rows, 0, 0, &mut Vec::new(), &mut placements);
    let square_id = |r: usize, c: usize| r * n_cols + c;
    let mut keyed: Vec<(u64, Vec<String>)> = placements
        .iter()
        .filter(|p| {
            let used_rows: u64 = p.iter().fold(0, |m, &(r, _)| m | 1 << r);
            let used_cols: u64 = p.iter().fold(0, |m, &(_, c)| m | 1 << c);
            // maximal iff no free square remains
            !(0..n_rows)
                .any(|r| used_rows >> r & 1 == 0 && (0..rows[r]).any(|c| used_cols >> c & 1 == 0))
        })
        .map(|p| {
            let key = p.iter().fold(0u64, |m, &(r, c)| m | 1 << square_id(r, c));
            let tokens = p
                .iter()
                .map(|&(r, c)| format!("r{}c{}", r + 1, c + 1))
                .collect();
            (key, tokens)
        })
        .collect();
    keyed.sort_unstable_by_key(|&(key, _)| key);
    keyed.into_iter().map(|(_, tokens)| tokens).collect()
}

pub fn gen_chessboard(shape: &ChessboardShape) -> Result<FacetFamily> {
    into_family(chessboard_facets(shape))
}
