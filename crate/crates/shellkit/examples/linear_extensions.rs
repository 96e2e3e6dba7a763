//! Counting linear extensions: order the principal ideals of a poset and
//! peel them. A peeling of the ideal family is exactly a linear extension.
//!
//! ```bash
//! cargo run -p shellkit --example linear_extensions
//! ```

use num_bigint::BigUint;
use shellkit::oracle::linear_extensions_ideal_dp;
use shellkit::peeling::count_linear_extensions;
use shellkit::{parse_poset, poset_to_ideals};

fn main() {
    let inputs = [
        ("chain a<b<c<d", "elements a b c d\na < b\nb < c\nc < d\n"),
        ("antichain on 5", "elements a b c d e\n"),
        ("diamond", "elements o x y t\no < x\no < y\nx < t\ny < t\n"),
        ("fence a<b>c<d", "elements a b c d\na < b\nc < b\nc < d\n"),
        (
            "two chains sharing a top",
            "elements a b c d e\na < b\nb < e\nc < d\nd < e\n",
        ),
    ];
    for (name, text) in inputs {
        let p = parse_poset(text).unwrap();
        let ideals = poset_to_ideals(&p);
        let count = count_linear_extensions(&p);
        println!("{name}: {count} linear extensions");
        println!(
            "  ideal sizes: {:?}",
            (0..ideals.len())
                .map(|i| ideals.facet(i).len())
                .collect::<Vec<_>>()
        );
        // an independent dynamic program over order ideals agrees
        assert_eq!(count, linear_extensions_ideal_dp(&p));
    }

    // the n! identity on antichains
    let antichain = parse_poset("elements a b c d e f g\n").unwrap();
    assert_eq!(count_linear_extensions(&antichain), BigUint::from(5040u32));
    println!("antichain on 7: 5040 = 7!");
}
