//! Running toy-machine programs and searching for the shortest one.

use integrated_info::aitk::{toy_run, toy_shortest, ToyProgram};
use integrated_info::bits::BitString;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // EMIT1 EMIT1 ADVICE: two ones followed by the advice string.
    let code: BitString = "001 001 011".parse()?;
    let advice: BitString = "001".parse()?;
    let program = ToyProgram::decode(&code)?;
    println!("{program} on advice {advice} -> {}", toy_run(&code, &advice)?);

    for target in ["0000000000000000", "0110", "1011001110"] {
        let t: BitString = target.parse()?;
        let est = toy_shortest(&t, &BitString::new(), None);
        let witness = est.program().map(|p| p.mnemonics()).unwrap_or_default();
        println!(
            "C({target}) = {} bits ({}) via {witness}",
            est.value_bits,
            est.kind.as_str()
        );
    }

    // Advice makes a copy almost free.
    let t: BitString = "1011001110".parse()?;
    let est = toy_shortest(&t, &t, None);
    println!("C(t|t) = {} bits", est.value_bits);
    Ok(())
}
