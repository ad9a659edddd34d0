//! Reproduces the smallest known Mahler measure above 1 by exhausting the
//! degree-10 reciprocal family with coefficients in {-1, 0, 1}, then
//! demonstrates checkpointed interruption and resumption.
//!
//! ```bash
//! cargo run --example search_record
//! ```

use mahler::search::{
    checkpoint_resume, checkpoint_save, finalize, run_search, search_min_measure, SearchSpec,
    SearchState,
};
use std::time::Instant;

fn main() {
    let spec = SearchSpec::new(10, 1, true, 1e-9).unwrap();
    println!(
        "family: monic degree 10, coefficients in [-1, 1], self-reciprocal ({} members)",
        spec.family_size()
    );

    let started = Instant::now();
    let record = search_min_measure(&spec).unwrap();
    println!("\nuninterrupted run ({:?}):", started.elapsed());
    println!("  best polynomial  {}", record.best_polynomial);
    println!("  Mahler measure   {:.12}", record.best_measure.value);
    println!(
        "  measured {} / skipped {} cyclotomic products",
        record.scanned, record.skipped_cyclotomic
    );

    // interrupt after 100 candidates, persist, resume elsewhere
    let path = std::env::temp_dir().join("mahler-example.ckpt");
    let mut state = SearchState::fresh(spec);
    let complete = run_search(&mut state, Some(100)).unwrap();
    checkpoint_save(&state, &path).unwrap();
    println!(
        "\ninterrupted after 100 candidates (complete = {complete}); checkpoint at {}",
        path.display()
    );

    let mut resumed = checkpoint_resume(&path).unwrap();
    run_search(&mut resumed, None).unwrap();
    let resumed_record = finalize(resumed).unwrap();
    println!(
        "resumed run finds the same record: {} with measure {:.12}",
        resumed_record.best_polynomial, resumed_record.best_measure.value
    );
    assert_eq!(resumed_record.best_polynomial, record.best_polynomial);
    std::fs::remove_file(&path).ok();

    // degree 2 is omitted: x^2 + cx + 1 with |c| <= 1 is always cyclotomic
    println!("\nsmallest measures by degree (reciprocal families, coefficients in [-1, 1]):");
    for degree in [4usize, 6, 8, 10] {
        let spec = SearchSpec::new(degree, 1, true, 1e-9).unwrap();
        let rec = search_min_measure(&spec).unwrap();
        println!(
            "  degree {degree:>2}: M = {:.10}  ({})",
            rec.best_measure.value, rec.best_polynomial
        );
    }
}
