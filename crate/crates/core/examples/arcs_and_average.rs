// Excluded regions, mu-arcs and the averaging map onto regular polygons.
//
// ```bash
// cargo run -p equivart --example arcs_and_average
// ```

use equivart::arcs::{
    arcs, average, excluded_region, polygon_decompose, quotient_eq, RegularPolygonalMeasure,
};
use equivart::measure::{rotate, Angle, CircleMeasure, Length};
use equivart::rational::ratio;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let r = Length::from_radians(2.2)?;
    let mu = CircleMeasure::new([
        (Angle::frac(0, 1), ratio(2, 5)),
        (Angle::frac(41, 120), ratio(3, 10)),
        (Angle::frac(79, 120), ratio(3, 10)),
    ])?;

    let excluded = excluded_region(&mu, &r)?;
    println!("excluded region at r = {r}:");
    for arc in &excluded.arcs {
        println!("  ({}, {})", arc.start, arc.end);
    }

    let decomposition = arcs(&mu, &r)?;
    println!("\n{} arcs, stratum {}", decomposition.count(), decomposition.stratum_k);
    for a in &decomposition.arcs {
        println!(
            "  [{}, {}]  mass {}  support hull [{}, {}]",
            a.arc.start, a.arc.end, a.mass, a.cluster.start, a.cluster.end
        );
    }

    let rho = average(&mu, &r)?;
    println!("\naverage: {}", serde_json::to_string(&rho)?);
    let split = polygon_decompose(&rho);
    println!("  uniform part t = {}", split.t);
    if let Some(boundary) = &split.boundary {
        println!("  boundary polygon: {}", serde_json::to_string(boundary)?);
    }

    let theta = Angle::frac(1, 7);
    let spun = average(&rotate(&mu, &theta), &r)?;
    let expected = RegularPolygonalMeasure::new(rho.k(), rho.base() + &theta, rho.weights().to_vec())?;
    println!("\naverage commutes with rotation: {}", spun == expected);
    println!("mu ~ mu under the quotient: {}", quotient_eq(&mu, &mu, &r)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
