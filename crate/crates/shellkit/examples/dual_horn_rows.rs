//! The 012e-row engine on its own: compress the model set of a dual Horn
//! formula into a few wildcard rows and check the compression exactly.
//!
//! ```bash
//! cargo run -p shellkit --example dual_horn_rows
//! ```

use num_bigint::BigUint;
use shellkit::oracle::dual_horn_models_brute;
use shellkit::rows::{solve_dual_horn, Clause, Row012e};
use shellkit::sets::IndexSubset;
use shellkit::DualHornFormula;

fn main() {
    // !x1 & !x2 & (x5 | !x8) & (x3 | !x4 | x5 | x7), positions 0-based
    let formula = DualHornFormula::new(
        IndexSubset::full(8),
        IndexSubset::from_indices(&[0, 1]),
        vec![
            Clause::implication(7, IndexSubset::from_indices(&[4])),
            Clause::implication(3, IndexSubset::from_indices(&[2, 4, 6])),
        ],
    );

    let rows = solve_dual_horn(&formula);
    println!("model set as disjoint 012e-rows (x1..x8):");
    for row in &rows {
        println!("  {}   |row| = {}", row.dump(8), row.cardinality());
    }
    let total: BigUint = rows.iter().map(Row012e::cardinality).sum();
    println!("total models: {total}");
    assert_eq!(total, BigUint::from(46u32));

    // the compression is exact: decompressing reproduces brute force
    let mut members: Vec<IndexSubset> = rows.iter().flat_map(Row012e::members).collect();
    members.sort();
    assert_eq!(members, dual_horn_models_brute(&formula));
    println!("decompressed members match the brute-force model set");

    // one row in detail: membership is three mask tests
    let sample = &rows[0];
    let a = IndexSubset::from_indices(&[4]);
    println!(
        "\nrow {} contains {{x5}}: {}",
        sample.dump(8),
        sample.contains(a)
    );
}
