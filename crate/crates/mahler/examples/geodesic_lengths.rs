//! Translation lengths of hyperbolic elements from their trace data:
//! tr = u + 1/u with |u| > 1 gives displacement 2 log M(P) in dimension 2
//! and log M(P) in dimension 3, where P is the polynomial of u.
//!
//! ```bash
//! cargo run --example geodesic_lengths
//! ```

use mahler::geodesic::{displacement_from_trace, displacement_from_u_polynomial};
use mahler::IntPolynomial;

fn main() {
    println!("integer traces t (trace polynomial y - t):");
    println!(
        "{:>3}  {:>22}  {:>18}  {:>18}",
        "t", "u-polynomial", "length dim 2", "length dim 3"
    );
    for t in 3..=8i64 {
        let trace = IntPolynomial::from_i64(&[-t, 1]);
        let d = displacement_from_trace(&trace, 1e-10).unwrap();
        println!(
            "{t:>3}  {:>22}  {:>18.12}  {:>18.12}",
            d.u_polynomial.to_wire(),
            d.length_dim2,
            d.length_dim3
        );
    }

    println!("\nquadratic trace field: y^2 - y - 3 (trace (1+sqrt 13)/2)");
    let d = displacement_from_trace(&IntPolynomial::from_i64(&[-3, -1, 1]), 1e-10).unwrap();
    println!(
        "  lifts to {} (the smallest quartic Salem polynomial)",
        d.u_polynomial
    );
    println!("  length dim 2 = {:.12}", d.length_dim2);

    println!("\nLehmer's polynomial as the u-polynomial directly:");
    let lehmer = IntPolynomial::parse("1,1,0,-1,-1,-1,-1,-1,0,1,1").unwrap();
    let d = displacement_from_u_polynomial(&lehmer, 1e-10).unwrap();
    println!("  length dim 2 = {:.12}", d.length_dim2);
    println!("  length dim 3 = {:.12}", d.length_dim3);
    println!("  (the conjectural shortest geodesic of arithmetic 3-orbifolds)");

    println!("\nelliptic and parabolic traces are rejected:");
    for (name, wire) in [
        ("t = 1", "-1,1"),
        ("t = 2", "-2,1"),
        ("t^2 = t + 1", "-1,-1,1"),
    ] {
        let q = IntPolynomial::parse(wire).unwrap();
        match displacement_from_trace(&q, 1e-10) {
            Err(e) => println!("  {name}: {e}"),
            Ok(_) => unreachable!(),
        }
    }
}
