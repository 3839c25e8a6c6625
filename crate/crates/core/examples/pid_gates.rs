//! Partial information decomposition of the built-in two-input gates.
//!
//! Run with `cargo run --example pid_gates`.

use integrated_info::pid::{
    input_equivocation, lossless_check, pid_decompose, synergy_minus_redundancy, InputDistribution,
    TruthTable, TOLERANCE,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:<7} {:>7} {:>7} {:>7} {:>7} {:>8}  lossless", "table", "R", "U1", "U2", "S", "S-R");
    for name in ["xor", "and", "or", "copy", "concat"] {
        let dist = TruthTable::builtin(name)?.distribution(&InputDistribution::Uniform)?;
        let pid = pid_decompose(&dist);
        println!(
            "{name:<7} {:>7.4} {:>7.4} {:>7.4} {:>7.4} {:>8.4}  {}",
            pid.redundancy,
            pid.unique1,
            pid.unique2,
            pid.synergy,
            synergy_minus_redundancy(&dist),
            lossless_check(&dist, TOLERANCE),
        );
    }

    // Correlated inputs: copying both bits is lossless, so S - R = -I(X1;X2).
    let table = TruthTable::builtin("copy")?;
    let dist = table.distribution(&InputDistribution::Joint(vec![0.4, 0.1, 0.1, 0.4]))?;
    println!(
        "\ncorrelated copy: S-R = {:.6}, H(X1,X2|Y) = {:.6}",
        synergy_minus_redundancy(&dist),
        input_equivocation(&dist)
    );
    Ok(())
}
