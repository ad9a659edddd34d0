//! Classifies a gallery of polynomials as cyclotomic products, Salem,
//! Pisot, or other, with the supporting certificate.
//!
//! ```bash
//! cargo run --example classify_gallery
//! ```

use mahler::classify::{classify, Certificate, PolyKind};
use mahler::IntPolynomial;

fn main() {
    let gallery = [
        ("x^4+x^3+x^2+x+1 (5th cyclotomic)", "1,1,1,1,1"),
        ("x^6-1", "-1,0,0,0,0,0,1"),
        (
            "Lehmer's degree-10 polynomial",
            "1,1,0,-1,-1,-1,-1,-1,0,1,1",
        ),
        ("x^4-x^3-x^2-x+1 (smallest quartic Salem)", "1,-1,-1,-1,1"),
        ("x^2-x-1 (golden ratio)", "-1,-1,1"),
        ("x^3-x-1 (plastic number)", "-1,-1,0,1"),
        ("x^2-2", "-2,0,1"),
        ("(x^2+x+1)(x^3-x-1)", "-1,-2,-2,0,1,1"),
    ];

    for (name, wire) in gallery {
        let p = IntPolynomial::parse(wire).unwrap();
        let class = classify(&p).unwrap();
        let kind = match class.kind {
            PolyKind::CyclotomicProduct => "cyclotomic product",
            PolyKind::Salem => "Salem",
            PolyKind::Pisot => "Pisot",
            PolyKind::Other => "other",
        };
        print!("{name}\n  -> {kind}");
        if let Some(root) = class.dominant_root {
            print!(", dominant root {root:.12}");
        }
        println!();
        match class.certificate {
            Certificate::Salem(c) => println!(
                "     trace polynomial {} has {} root above 2 and {} in (-2,2)",
                c.trace_polynomial.unwrap(),
                c.roots_above_two,
                c.roots_in_band
            ),
            Certificate::Pisot(c) => println!(
                "     other root moduli stay below 1 by a margin of {:.6}",
                c.margin.unwrap_or(f64::NAN)
            ),
            Certificate::Cyclotomic { removed_degree } => {
                println!("     all {removed_degree} roots lie on the unit circle or at 0")
            }
            Certificate::Other { note } => println!("     {note}"),
        }
        println!();
    }
}
