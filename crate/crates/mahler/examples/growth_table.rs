//! Emits the growth-comparison table as CSV: at each volume, the
//! arithmetic triple-log systole floor next to the largest systole the
//! polynomial-regime construction permits.
//!
//! ```bash
//! cargo run --example growth_table > growth.csv
//! ```

use mahler::bounds::{growth_table, growth_table_csv, BoundConstants};

fn main() {
    let k = BoundConstants {
        dim_n: 4,
        ..BoundConstants::default()
    };
    let rows = growth_table(1e6, 1e18, 13, &k).unwrap();
    print!("{}", growth_table_csv(&rows));
}
