// The odd covering `z ↦ z^n` on measures and the square relating it to
// the map on join coordinates.
//
// ```bash
// cargo run -p equivart --example cover_square
// ```

use equivart::join::{commuting_square, fixed_by, g_n, h, phi, pulled_back_scale};
use equivart::measure::{rotate, Angle, CircleMeasure, Length};
use equivart::rational::ratio;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let r = Length::from_radians(2.3)?;
    let mu = CircleMeasure::new([
        (Angle::frac(0, 1), ratio(1, 2)),
        (Angle::frac(1, 3), ratio(1, 4)),
        (Angle::frac(2, 3), ratio(1, 4)),
    ])?;

    for n in [3, 5] {
        let lifted = g_n(&mu, n)?;
        let s = pulled_back_scale(&r, n)?;
        println!("n = {n}");
        println!("  g_n(mu) has {} atoms, diameter {}", lifted.len(), lifted.diameter());
        println!("  pulled-back scale {s}");
        println!(
            "  invariant under 1/{n} turn: {}",
            rotate(&lifted, &Angle::frac(1, n as i64)) == lifted
        );
        let image = h(&phi(&mu, &r)?, n)?;
        println!("  h(phi(mu)) fixed by Z/{n}: {}", fixed_by(&image, n)?);
        let square = commuting_square(&mu, &r, n)?;
        println!("  square commutes: {}", square.equal);
    }

    match g_n(&mu, 4) {
        Ok(_) => println!("even cover accepted"),
        Err(e) => println!("\neven cover rejected: {e}"),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
