// Equivariant cohomology rings across the scale bands.
//
// ```bash
// cargo run -p equivart --example ring_bands
// ```

use equivart::measure::Length;
use equivart::rings::{band, critical_scale, graded_piece, vr_ring};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>8}  {:>5}  {:<16} degrees 0..8", "r (rad)", "band", "ring");
    for radians in [0.5, 1.0, 2.2, 2.6, 2.7, 2.9, std::f64::consts::PI] {
        let r = Length::from_radians(radians)?;
        let ring = vr_ring(&r);
        let pieces: Vec<String> = (0..=8)
            .step_by(2)
            .map(|d| graded_piece(&ring, d).to_string())
            .collect();
        let band = band(&r).map_or("-".to_string(), |k| k.to_string());
        println!("{radians:>8.4}  {band:>5}  {:<16} {}", ring.to_string(), pieces.join(" "));
    }

    println!("\ncritical scales 2πk/(2k+1):");
    for k in 0..5 {
        let c = critical_scale(k);
        println!("  k={k}: {} = {:.4} rad", c, c.radians());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
