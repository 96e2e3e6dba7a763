//! Exact shelling counts without enumerating: the level sweep over the
//! compressed poset, with counts by first and by last letter.
//!
//! ```bash
//! cargo run --release -p shellkit --example count_shellings
//! ```

use num_bigint::BigUint;
use shellkit::generators::{gen_chessboard, gen_m2m, ChessboardShape};
use shellkit::search::{count_by_first_letter, count_report, SearchOptions};
use shellkit::shelling::pss_rows;

fn main() {
    // every 2-subset of {1..4}: n = 6 facets, 576 of the 720 orderings shell
    let fam = gen_m2m(4).unwrap();
    let rows = pss_rows(&fam);
    let opts = SearchOptions::default();
    let outcome = count_report(&rows, &opts);
    println!(
        "rank-2 matroid on 4 points: {} shellings of {}! = 720",
        outcome.count,
        fam.len()
    );
    assert_eq!(outcome.count, BigUint::from(576u32));

    let by_first = count_by_first_letter(&rows, &opts);
    println!("  by first facet: {:?}", decimals(&by_first));
    println!("  by last facet:  {:?}", decimals(&outcome.by_last));
    let sum: BigUint = by_first.iter().sum();
    assert_eq!(sum, outcome.count);

    // a staircase chessboard: 14 maximal rook placements, 44 176 168 shellings
    let board = gen_chessboard(&ChessboardShape::new(vec![4, 3, 2, 1]).unwrap()).unwrap();
    let rows = pss_rows(&board);
    let outcome = count_report(&rows, &opts);
    println!(
        "\nstaircase board 4,3,2,1: {} facets, {} nonempty setments in {} rows",
        board.len(),
        rows.nonempty_pss_count(),
        rows.row_count()
    );
    println!("  exact count: {}", outcome.count);
    assert_eq!(outcome.count.to_string(), "44176168");
    assert_eq!(outcome.max_partial_length, board.len());
}

fn decimals(counts: &[BigUint]) -> Vec<String> {
    counts.iter().map(BigUint::to_string).collect()
}
