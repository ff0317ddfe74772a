// Persistent homology of evenly spaced circle samples, compared with the
// predicted odd spheres.
//
// ```bash
// cargo run -p equivart --example vr_oracle
// ```

use equivart::measure::Length;
use equivart::oracle::{
    build_filtration, compare_with_theory, persistent_homology, CoefficientField,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f = build_filtration(9, 2)?;
    let barcode = persistent_homology(&f, CoefficientField::F2);
    println!("9 points, max_dim 2: {} simplices", f.len());
    for bar in barcode.intervals.iter().filter(|b| b.dim < 2 && (b.dim > 0 || b.death.is_none())) {
        let death = bar.death.as_ref().map_or("inf".to_string(), |d| d.to_string());
        println!("  H{}: [{}, {})", bar.dim, bar.birth, death);
    }

    println!();
    for (n, r, max_dim) in [(9, Length::frac(1, 6), 3), (20, Length::frac(7, 20), 5), (12, Length::frac(1, 2), 4)] {
        let report = compare_with_theory(n, &r, max_dim, CoefficientField::F2)?;
        println!(
            "n={n:<3} r={r:<6} oracle {:?}  predicted {:?}  match {}{}",
            report.oracle_betti,
            report.predicted_betti,
            report.matches,
            if report.near_critical { "  (near a critical scale)" } else { "" }
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
