//! Walks the inequality chain: Dobrowolski's degree bound on log M, the
//! degree-volume bound, their composition into the triple-log systole
//! bound, and the polynomial-regime volume bound for dimensions >= 3.
//!
//! ```bash
//! cargo run --example bound_chain
//! ```

use mahler::bounds::{
    degree_volume_upper_bound, dobrowolski_formula, dobrowolski_lower_bound,
    field_degree_lower_bound, systole_volume_lower_bound, theorem1b_volume_lower_bound,
    BoundConstants,
};

fn main() {
    let k = BoundConstants::default();
    println!(
        "constants: c1 = {}, c2 = {}, c3 = {}, C = {}, C_n = {}, n = {}",
        k.c1, k.c2, k.c3, k.c_agg, k.c_n, k.dim_n
    );
    println!("(placeholders: the sources only assert these are computable)\n");

    println!("Dobrowolski lower bound on log M(P) by degree d:");
    for d in [2u32, 3, 5, 10, 20, 100, 1000] {
        let b = dobrowolski_lower_bound(d, &k).unwrap();
        let note = if b <= 0.0 { "  (vacuous)" } else { "" };
        println!("  d = {d:>5}: {b:>13.9}{note}");
    }

    println!("\nfield degree from the u-polynomial degree: deg(k) >= d/2");
    println!("  d = 10 -> {}", field_degree_lower_bound(10).unwrap());

    println!("\nsystole lower bound by volume (arithmetic case):");
    for vol in [1e6, 1e9, 1e12, 1e15] {
        let s = systole_volume_lower_bound(vol, &k).unwrap();
        let composed = dobrowolski_formula(degree_volume_upper_bound(vol, &k).unwrap(), k.c1);
        println!("  Vol = {vol:>6.0e}: bound {s:.9}  (composed chain gives {composed:.9})");
    }

    println!("\nvolume lower bound by systole (non-arithmetic construction, n = 4):");
    let k4 = BoundConstants { dim_n: 4, ..k };
    for s in [0.5, 0.1, 0.01, 0.001] {
        println!(
            "  Syst = {s:>5}: Vol >= {:.3e}",
            theorem1b_volume_lower_bound(s, &k4).unwrap()
        );
    }
    println!("\nthe arithmetic bound decays triple-logarithmically in volume;");
    println!("the constructed manifolds only need polynomial volume growth.");
}
