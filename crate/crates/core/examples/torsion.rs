//! Torsion in a precubical set without subdivision: the Klein bottle, and
//! the class of its square under each coefficient ring.

use num_bigint::BigInt;
use precubical::cohomology::cohomology_groups;
use precubical::complex::{Coeff, Cochain};
use precubical::cubical::builders;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = builders::klein_bottle();
    let s = x.find(2, "s").unwrap();
    for ring in [Coeff::Integers, Coeff::IntegersMod(2), Coeff::IntegersMod(3)] {
        let groups = cohomology_groups(&x, &ring)?;
        let shown: Vec<String> = groups.iter().map(ToString::to_string).collect();
        println!("over {ring}: {}", shown.join(", "));
        let top = &groups[2];
        for k in 1..=3 {
            let z = Cochain::dual(&x, s, ring.clone())?.scale(&BigInt::from(k));
            println!("  [{k}·s*] = {:?}", top.class_of(&z)?);
        }
    }
    Ok(())
}
