// Join coordinates of a measure, the circle action on them and a
// continuity trace along a segment of measures.
//
// ```bash
// cargo run -p equivart --example join_coordinates
// ```

use equivart::join::{act, continuity_report, phi, phi_trace};
use equivart::measure::{rotate, Angle, CircleMeasure, Length};
use equivart::rational::ratio;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let r = Length::from_radians(2.7)?;
    let mu = CircleMeasure::new([
        (Angle::frac(0, 1), ratio(3, 10)),
        (Angle::frac(1, 5), ratio(1, 5)),
        (Angle::frac(2, 5), ratio(1, 5)),
        (Angle::frac(3, 5), ratio(1, 10)),
        (Angle::frac(4, 5), ratio(1, 5)),
    ])?;

    let (point, steps) = phi_trace(&mu, &r)?;
    println!("peeling steps at r = {r}:");
    for step in &steps {
        println!("  stratum {}  t = {}  base = {}", step.stratum_k, step.t, step.base);
    }
    println!("join coordinates:");
    for c in point.components() {
        println!("  index {:>2}: t = {:<6} base = {}", c.index, c.t, c.base);
    }
    println!("{}", serde_json::to_string(&point)?);

    let theta = Angle::frac(3, 11);
    let rotated = phi(&rotate(&mu, &theta), &r)?;
    println!("\nequivariant under rotation by {theta}: {}", rotated == act(&theta, &point));

    let nu = CircleMeasure::dirac(Angle::zero());
    println!("\nsegment toward a Dirac mass:");
    for sample in continuity_report(&mu, &nu, &r, 8)? {
        println!(
            "  s = {:<4} stratum {}  step {:.4}",
            sample.s.to_string(),
            sample.stratum_k,
            sample.step
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
