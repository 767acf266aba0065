//! Graded commutativity fails for cochains but holds for the classes checked
//! here.

use precubical::complex::{cup, Coeff, Cochain};
use precubical::cubical::builders;
use precubical::propcheck::{anticommutativity_report, anticommutativity_survey, cochain_anticommutator, GenConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z = Coeff::Integers;
    let square = builders::standard_cube(2);
    let u = square.find(2, "**").unwrap();
    let phi = Cochain::dual(&square, square.find(1, "*0").unwrap(), z.clone())?;
    let psi = Cochain::dual(&square, square.find(1, "1*").unwrap(), z.clone())?;
    println!("on the square: (φ⌣ψ)(u) = {}, (ψ⌣φ)(u) = {}", cup(&square, &phi, &psi)?.value(u), cup(&square, &psi, &phi)?.value(u));
    println!("anticommutator {:?}", cochain_anticommutator(&square, &phi, &psi)?.values());

    let torus = anticommutativity_report(&builders::torus(), &z, 100, 0)?;
    println!("{torus}");
    let survey = anticommutativity_survey(&GenConfig::default(), 50)?;
    println!("{survey}");
    Ok(())
}
