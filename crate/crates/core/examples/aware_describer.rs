//! The invert-edit-encode describer and the violation witness.

use integrated_info::aitk::{CachedEstimator, ToyEstimator};
use integrated_info::bits::BitString;
use integrated_info::integration::{
    aware_conditional, edit_integration, integrating_violation_witness, Encoder, FeistelMix,
    NeighborhoodSpec,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let toy = CachedEstimator::new(ToyEstimator::default());
    let feistel = FeistelMix::default();
    let z: BitString = "1011000111010010".parse()?;
    let w = z.flipped(15);

    let (mz, mw) = (feistel.apply(&z)?, feistel.apply(&w)?);
    println!("m(z)  = {mz}\nm(z') = {mw}");
    let bits = aware_conditional(&feistel, &mw, &mz, NeighborhoodSpec::FLIPS)?;
    println!("aware C(m(z')|m(z)) <= {bits} bits");

    let plain = edit_integration(&feistel, &z, NeighborhoodSpec::FLIPS, &toy, false)?;
    let aware = edit_integration(&feistel, &z, NeighborhoodSpec::FLIPS, &toy, true)?;
    println!("ratio: blind {:.4}, aware {:.4}", plain.ratio, aware.ratio);

    let witness = integrating_violation_witness(&feistel, &z, NeighborhoodSpec::FLIPS, &toy, 0.0)?;
    println!(
        "witness: {:?}, best neighbor {} with margin {}",
        witness.status, witness.best.neighbor, witness.best.margin
    );
    Ok(())
}
