// Finitely supported measures, thickening membership and W1 distance.
//
// ```bash
// cargo run -p equivart --example measures_and_transport
// ```

use equivart::measure::{rotate, vr_member, w1_distance, Angle, CircleMeasure, Length};
use equivart::rational::ratio;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mu = CircleMeasure::new([
        (Angle::frac(0, 1), ratio(1, 2)),
        (Angle::frac(1, 5), ratio(1, 3)),
        (Angle::frac(2, 5), ratio(1, 6)),
    ])?;
    println!("mu = {}", serde_json::to_string(&mu)?);
    println!("diameter = {}", mu.diameter());

    for r in [Length::frac(1, 5), Length::frac(2, 5), Length::from_radians(2.0)?] {
        println!("  in VR at {r}: {}", vr_member(&mu, &r));
    }

    let triangle = CircleMeasure::uniform_polygon(3, &Angle::zero());
    let nudged = rotate(&triangle, &Angle::frac(1, 200));
    println!("\nW1(triangle, rotated by 1/200) = {}", w1_distance(&triangle, &nudged));

    let a = CircleMeasure::uniform_polygon(2, &Angle::zero());
    let b = CircleMeasure::uniform_polygon(2, &Angle::frac(1, 4));
    println!("W1(antipodal pair, quarter-turned pair) = {}", w1_distance(&a, &b));
    println!("W1(mu, triangle) = {}", w1_distance(&mu, &triangle));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
