//! Walk through the basic pipeline on a four-facet complex: parse the
//! facets, classify cops and hooligans per suffix, compress the potential
//! setments, and enumerate every shelling.
//!
//! ```bash
//! cargo run -p shellkit --example toy_complex
//! ```

use shellkit::search::{enumerate_full_words, max_partial_length, WordOrder};
use shellkit::{classify, parse_facets, pss_rows, shelling, Mode};

fn main() {
    let fam = parse_facets("a c d f\na b c f\na b c d e g\nc d e f g\n", Mode::Shelling).unwrap();
    println!("facets:");
    for i in 0..fam.len() {
        println!("  F{} = {{{}}}", i + 1, fam.facet_tokens(i).join(" "));
    }

    // j is a cop for k when F_j ∩ F_k misses exactly one vertex of F_k;
    // cop-less suffixes can only open a shelling.
    let table = classify(&fam);
    println!("\nper-suffix classification:");
    for k in 0..fam.len() {
        let class = table.suffix(k);
        let cops: Vec<String> = class.cops.iter().map(|j| format!("F{}", j + 1)).collect();
        let bad: Vec<String> = class
            .non_policeable
            .iter()
            .map(|i| format!("F{}", i + 1))
            .collect();
        println!(
            "  k={}: cops [{}] non-policeable [{}]",
            k + 1,
            cops.join(" "),
            bad.join(" ")
        );
    }

    let rows = pss_rows(&fam);
    println!(
        "\ncompressed poset: {} setment-suffix pairs in {} rows",
        rows.pss_count(),
        rows.row_count()
    );
    println!(
        "longest partial shelling: {} of {}",
        max_partial_length(&rows),
        fam.len()
    );
    println!("type 1 failure: {:?}", shelling::detect_type1(&table));
    println!("type 2 failure: {}", shelling::detect_type2(&table).0);
    println!("type 3 failure: {}", shelling::detect_type3(&rows));

    println!("\nshellings:");
    let mut total = 0;
    for word in enumerate_full_words(&rows, None, WordOrder::Lexicographic) {
        let facets: Vec<String> = word
            .letters()
            .iter()
            .map(|&a| format!("F{}", a + 1))
            .collect();
        println!("  {word}   i.e. ({})", facets.join(","));
        total += 1;
    }
    assert_eq!(total, 1, "this complex has a unique shelling");
}
