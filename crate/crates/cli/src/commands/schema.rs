use clap::ValueEnum;

use crate::failure::Failure;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Name {
    Calibrate,
    Map,
    BfCurve,
    Design,
    Simulate,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Command whose output schema to print.
    #[arg(value_enum)]
    name: Name,
}

pub fn run(args: Args) -> Result<(), Failure> {
    let text = match args.name {
        Name::Calibrate => include_str!("../../schemas/calibrate.v1.json"),
        Name::Map => include_str!("../../schemas/map.v1.json"),
        Name::BfCurve => include_str!("../../schemas/bf-curve.v1.json"),
        Name::Design => include_str!("../../schemas/design.v1.json"),
        Name::Simulate => include_str!("../../schemas/simulate.v1.json"),
    };
    print!("{text}");
    Ok(())
}
