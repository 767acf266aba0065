//! Cochain-level operations on the 3-cube: coboundaries, cup products, the
//! Leibniz rule and the diagonal.

use precubical::complex::{boundary, coboundary, cup, diagonal, Chain, Coeff};
use precubical::cubical::builders;
use precubical::propcheck::random_cochain;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = builders::standard_cube(3);
    let u = x.find(3, "***").unwrap();
    let c = Chain::cube(u);
    println!("∂u = {:?}", boundary(&x, &c)?);
    println!("Δu has {} terms", diagonal(&x, &c)?.terms().count());

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for ring in [Coeff::Integers, Coeff::IntegersMod(6)] {
        let phi = random_cochain(&x, 1, &ring, &mut rng);
        let psi = random_cochain(&x, 1, &ring, &mut rng);
        let lhs = coboundary(&x, &cup(&x, &phi, &psi)?)?;
        let rhs = cup(&x, &coboundary(&x, &phi)?, &psi)?.sub(&cup(&x, &phi, &coboundary(&x, &psi)?)?)?;
        println!("over {ring}: δ(φ⌣ψ) = {:?}", lhs.values());
        println!("over {ring}: δφ⌣ψ - φ⌣δψ = {:?}", rhs.values());
        assert_eq!(lhs, rhs);
    }
    Ok(())
}
