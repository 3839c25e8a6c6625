//! Complexity estimators behind one interface.

use integrated_info::aitk::{
    c_hat, c_hat_cond, is_random_estimate, mutual_info_hat, CachedEstimator, Registry,
    ToyEstimator, DEFAULT_SLACK_BITS,
};
use integrated_info::bits::BitString;
use integrated_info::rng::XorShift64Star;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let registry = Registry::default();
    let mut rng = XorShift64Star::new(7);
    let noise = rng.bits(2048);
    let periodic: BitString = "0110".repeat(512).parse()?;

    for name in registry.names() {
        if name == "toy" {
            continue; // exhaustive search is for short strings
        }
        let est = registry.get(name)?;
        println!(
            "{name}: C(noise) = {}, C(periodic) = {}, C(noise|noise) = {}, random(noise) = {}",
            c_hat(&noise, est.as_ref()),
            c_hat(&periodic, est.as_ref()),
            c_hat_cond(&noise, &noise, est.as_ref()),
            is_random_estimate(&noise, est.as_ref(), DEFAULT_SLACK_BITS)?,
        );
    }

    let toy = CachedEstimator::new(ToyEstimator::default());
    let x: BitString = "10110".parse()?;
    let y: BitString = "1011011".parse()?;
    let mi = mutual_info_hat(&x, &y, &toy, DEFAULT_SLACK_BITS);
    println!("toy: I(x:y) = {} / {} bits", mi.forward, mi.symmetric);
    Ok(())
}
