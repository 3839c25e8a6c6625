//! Edit integration of the built-in encoders on seeded 16-bit inputs.

use integrated_info::aitk::{CachedEstimator, ToyEstimator};
use integrated_info::integration::{builtin_encoders, edit_integration, NeighborhoodSpec};
use integrated_info::rng::XorShift64Star;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let toy = CachedEstimator::new(ToyEstimator::default());
    let mut rng = XorShift64Star::new(11);
    let inputs: Vec<_> = (0..5).map(|_| rng.bits(16)).collect();

    for encoder in builtin_encoders() {
        let ratios = inputs
            .iter()
            .map(|z| {
                edit_integration(encoder.as_ref(), z, NeighborhoodSpec::FLIPS, &toy, false)
                    .map(|r| format!("{:.3}", r.ratio))
            })
            .collect::<Result<Vec<_>, _>>();
        match ratios {
            Ok(r) => println!("{:<12} {}", encoder.name(), r.join(" ")),
            Err(e) => println!("{:<12} skipped: {e}", encoder.name()),
        }
    }
    Ok(())
}
