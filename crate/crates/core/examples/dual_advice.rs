//! One program that rebuilds `x·y` from either half.

use integrated_info::aitk::{CachedEstimator, ToyEstimator, DEFAULT_SLACK_BITS};
use integrated_info::synergy::{
    dual_advice_build, dual_advice_decode, normalized_halves, s0_bounds, TOY_HEADER_BITS,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (x, y) = normalized_halves(64, 3)?;
    let prog = dual_advice_build(&x, &y)?;
    println!("x    = {x}\ny    = {y}\nmask = {}", prog.mask);
    let z = x.concat(&y);
    assert_eq!(dual_advice_decode(&prog, &x)?, z);
    assert_eq!(dual_advice_decode(&prog, &y)?, z);
    println!("payload {} bits for a {}-bit output", prog.payload_bits(), z.len());

    let toy = CachedEstimator::new(ToyEstimator::default());
    let (x, y) = normalized_halves(8, 0)?;
    let e = s0_bounds(&x, &y, &toy, TOY_HEADER_BITS, DEFAULT_SLACK_BITS)?;
    println!(
        "n=8: S0 in [{}, {}] (C(z|x)={}, C(z|y)={}, C(z|xy)={})",
        e.lower, e.upper, e.given_x, e.given_y, e.given_both
    );
    Ok(())
}
