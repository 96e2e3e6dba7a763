//! Peelings: orderings of arbitrary sets where each set meets the union of
//! its predecessors in all but exactly one element. The sets need not be
//! incomparable, and the same search machinery applies.
//!
//! ```bash
//! cargo run -p shellkit --example peelings
//! ```

use shellkit::oracle::is_peeling_sequence;
use shellkit::peeling::{count_peelings, enumerate_peelings, peeling_pss_rows};
use shellkit::{parse_facets, Mode};

fn main() {
    let fam = parse_facets("a b e\nd f\nb c e\nd e\n", Mode::Peeling).unwrap();
    let rows = peeling_pss_rows(&fam);
    println!("peelings of {{a,b,e}}, {{d,f}}, {{b,c,e}}, {{d,e}}:");
    for word in enumerate_peelings(&rows, None) {
        println!("  {word}");
        // peeling languages are hereditary: every prefix peels too
        for len in 0..=word.len() {
            assert!(is_peeling_sequence(&fam, &word.letters()[..len]));
        }
    }
    assert_eq!(count_peelings(&fam), 6u32.into());

    // comparable sets are fine in peeling mode
    let nested = parse_facets("a\na b\na b c\nx", Mode::Peeling).unwrap();
    let rows = peeling_pss_rows(&nested);
    println!("\npeelings of the nested family {{a}} ⊂ {{a,b}} ⊂ {{a,b,c}} plus {{x}}:");
    for word in enumerate_peelings(&rows, None) {
        println!("  {word}");
    }
    // the chain must appear in order, while the fresh singleton floats:
    // its intersection with any union is empty, one short of a singleton
    assert_eq!(count_peelings(&nested), 4u32.into());
}
