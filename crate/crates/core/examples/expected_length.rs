// Expected interval length at n = 40 for every method.
//
// $ cargo run --example expected_length
use binom_ci::evaluate::{LengthModel, DEFAULT_QUAD_POINTS};
use binom_ci::intervals::{ConfidenceSpec, Method};

fn main() -> binom_ci::Result<()> {
    let spec = ConfidenceSpec::new(0.05)?;
    let ps = [0.05, 0.1, 0.2, 0.3, 0.5];
    print!("{:<18}", "p");
    for p in ps {
        print!("{p:>9}");
    }
    println!();
    for m in Method::ALL {
        let model = LengthModel::new(m, 40, &spec, DEFAULT_QUAD_POINTS)?;
        print!("{:<18}", m.name());
        for p in ps {
            print!("{:>9.4}", model.expected_length(p)?);
        }
        println!();
    }
    Ok(())
}
