//! Reading and writing the text format.

use precubical::cohomology::cohomology_groups;
use precubical::complex::Coeff;
use precubical::cubical::builders;
use precubical::document::{parse, serialize};

const KLEIN: &str = include_str!("data/klein.txt");

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = parse(KLEIN)?;
    println!("{}", x.validate());
    print!("{}", serialize(&x));
    assert_eq!(parse(&serialize(&x))?, x);

    for ring in ["Z", "Z/2", "Z/3"] {
        let ring: Coeff = ring.parse()?;
        let groups = cohomology_groups(&x, &ring)?;
        let shown: Vec<String> = groups.iter().map(ToString::to_string).collect();
        println!("over {ring}: {}", shown.join(", "));
    }

    print!("{}", serialize(&builders::tensor_product(&builders::interval(), &builders::interval())));

    let broken = "dims:\n  0: o\n  1: t\nfaces:\n  t = [[o, x]]\n";
    match parse(broken) {
        Ok(_) => unreachable!(),
        Err(e) => println!("error: {e}"),
    }
    Ok(())
}
