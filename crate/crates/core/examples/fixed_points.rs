// Simplices fixed by cyclic subgroups and the scale at which they appear.
//
// ```bash
// cargo run -p equivart --example fixed_points
// ```

use equivart::oracle::{first_fixed_scale, fixed_subcomplex, regular_polygon_diameter};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>3} {:>3}  {:>8}  {:>8}", "n", "d", "onset", "d-gon");
    for (n, d) in [(15, 3), (15, 5), (14, 7), (12, 4), (8, 2), (30, 15)] {
        let onset = first_fixed_scale(n, d)?;
        println!(
            "{n:>3} {d:>3}  {:>8}  {:>8}",
            onset.to_string(),
            regular_polygon_diameter(d).to_string()
        );
    }

    let fixed = fixed_subcomplex(9, 3)?;
    println!("\nZ/3-invariant simplices on 9 points:");
    for s in fixed.simplices.iter().take(4) {
        println!("  {:?} at {}", s.vertices, fixed.value(s));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
