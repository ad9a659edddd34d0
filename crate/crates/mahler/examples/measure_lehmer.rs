//! Computes the Mahler measure of Lehmer's degree-10 polynomial by all
//! three routes and shows that they agree.
//!
//! ```bash
//! cargo run --example measure_lehmer
//! ```

use mahler::measure::{graeffe_cross_check, jensen_measure, mahler_measure};
use mahler::IntPolynomial;

fn main() {
    let lehmer = IntPolynomial::parse("1,1,0,-1,-1,-1,-1,-1,0,1,1").unwrap();
    println!("P(x) = x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1");
    println!("wire form: {lehmer}\n");

    let roots = mahler_measure(&lehmer, 1e-12).unwrap();
    println!(
        "root product:      M(P) = {:.15}  (radius {:.2e})",
        roots.value, roots.error_radius
    );
    println!("                 log M(P) = {:.15}", roots.value.ln());

    let jensen = jensen_measure(&lehmer, 1 << 16).unwrap();
    println!(
        "Jensen quadrature: M(P) = {:.15}  (estimate radius {:.2e})",
        jensen.value, jensen.error_radius
    );

    let graeffe = graeffe_cross_check(&lehmer, 1e-12).unwrap();
    println!(
        "Graeffe square:    M(P) = {:.15}  (radius {:.2e})",
        graeffe.value, graeffe.error_radius
    );

    println!("\nroot moduli (snapped circle roots are exactly 1):");
    for m in roots.root_moduli.unwrap() {
        println!("  {m:.15}");
    }
}
