// Maps induced by inclusions `VR(r) ⊆ VR(r')`, the naive comparison and
// the per-degree barcode over scale.
//
// ```bash
// cargo run -p equivart --example structure_maps
// ```

use equivart::measure::Length;
use equivart::rings::{
    barcode_csv, barcode_over_scale, euler_class, graded_piece, naive_guess_ring, specialize,
    sphere_ring, structure_map, vr_ring, Field,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let r = Length::from_radians(2.2)?;
    let r_prime = Length::from_radians(2.6)?;
    let map = structure_map(&r, &r_prime)?;
    println!("{} -> {}", map.source, map.target);
    for degree in [0, 2, 4, 6, 8] {
        let m = map.in_degree(degree);
        println!("  H^{degree}: {} -> {} ({:?})", m.source, m.target, m.kind);
    }

    println!("\nnaive guess vs actual, band 1:");
    let naive = naive_guess_ring(&r);
    let actual = vr_ring(&r);
    for degree in [0, 2, 4, 6] {
        println!(
            "  H^{degree}: naive {}  actual {}",
            graded_piece(&naive, degree),
            graded_piece(&actual, degree)
        );
    }

    println!("\nsphere rings:");
    println!("  S(C ⊕ C^3)      = {}", sphere_ring(&[1, 3])?);
    println!("  S(C ⊕ C^0)      = {}", sphere_ring(&[1, 0])?);
    println!("  e(1,3,5,7)      = {}", euler_class(&[1, 3, 5, 7])?);

    println!("\nfield coefficients at 2.6 rad:");
    let ring = vr_ring(&r_prime);
    for field in [Field::Rationals, Field::Reals, Field::f2(), Field::prime(3)?] {
        match specialize(&ring, field) {
            Ok(fr) => println!("  {field}: {fr}"),
            Err(e) => println!("  {field}: {e}"),
        }
    }

    println!("\ndegree 4 over scale:");
    print!("{}", barcode_csv(&barcode_over_scale(4, None)?));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
