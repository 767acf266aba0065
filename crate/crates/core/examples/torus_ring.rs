//! The torus: cochain complex, cohomology groups and the cup-product table.

use precubical::cohomology::{cohomology_ring, delta_matrix};
use precubical::complex::{cup, Coeff, Cochain};
use precubical::cubical::builders;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = builders::torus();
    let z = Coeff::Integers;
    println!("cube counts {:?}", x.cube_counts());
    for n in 0..2 {
        println!("δ^{n} = {:?}", delta_matrix(&x, n, &z));
    }

    let t1 = x.find(1, "t1").unwrap();
    let t2 = x.find(1, "t2").unwrap();
    let v = x.find(2, "v").unwrap();
    let alpha = Cochain::dual(&x, t2, z.clone())?;
    let beta = Cochain::dual(&x, t1, z.clone())?;
    println!("(α⌣β)(v) = {}", cup(&x, &alpha, &beta)?.value(v));
    println!("(β⌣α)(v) = {}", cup(&x, &beta, &alpha)?.value(v));
    println!("(α⌣α)(v) = {}", cup(&x, &alpha, &alpha)?.value(v));

    let hr = cohomology_ring(&x, &z)?;
    for g in &hr.groups {
        println!("H^{} = {g}", g.degree());
    }
    let h1 = &hr.groups[1];
    for p in 0..h1.generator_count() {
        for q in 0..h1.generator_count() {
            println!("g1_{} ⌣ g1_{} = {:?} · g2_1", p + 1, q + 1, hr.table.product(1, p, 1, q));
        }
    }
    println!("unit class {:?}", hr.unit_class(&x)?);
    Ok(())
}
