//! Shellability survey of chessboard complexes: facets are the maximal
//! non-taking rook placements. Some boards shell, some fail with an early
//! certificate, some only fail at search depth.
//!
//! ```bash
//! cargo run --release -p shellkit --example chessboard_survey
//! ```

use shellkit::generators::{gen_chessboard, ChessboardShape};
use shellkit::search::{count_report, SearchOptions};
use shellkit::shelling::{classify, detect_type1, detect_type2, detect_type3, pss_rows};

fn main() {
    let boards: &[&[usize]] = &[
        &[4, 3, 2, 1],
        &[3, 2, 2, 2, 1],
        &[3, 3, 2, 2],
        &[3, 3, 2, 1, 1],
        &[4, 4, 2, 2],
    ];
    for &lengths in boards {
        let shape = ChessboardShape::new(lengths.to_vec()).unwrap();
        let fam = gen_chessboard(&shape).unwrap();
        let table = classify(&fam);
        let rows = pss_rows(&fam);
        print!("board {lengths:?}: {} facets", fam.len());
        if let Some(witnesses) = detect_type1(&table) {
            // several suffixes each need to come first: settled before any search
            let pretty: Vec<usize> = witnesses.iter().map(|k| k + 1).collect();
            println!(
                " — unshellable, {} cop-less facets {:?}",
                pretty.len(),
                pretty
            );
            continue;
        }
        if detect_type2(&table).0 {
            println!(" — unshellable, no facet can come last");
            continue;
        }
        if detect_type3(&rows) {
            println!(" — unshellable, no setment of full co-size");
            continue;
        }
        let outcome = count_report(&rows, &SearchOptions::default());
        if outcome.count == 0u32.into() {
            println!(
                " — unshellable at search depth, longest partial {} of {}",
                outcome.max_partial_length,
                fam.len()
            );
        } else {
            println!(" — {} shellings", outcome.count);
        }
    }
}
