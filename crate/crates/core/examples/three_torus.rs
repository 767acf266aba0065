//! The 3-torus as a tensor product of three circles: Betti numbers and the
//! exterior algebra on three degree-one generators.

use num_bigint::BigInt;
use precubical::cohomology::cohomology_ring;
use precubical::complex::Coeff;
use precubical::cubical::builders::{circle, tensor_product};
use precubical::linalg::{determinant, IntMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = circle();
    let x = tensor_product(&tensor_product(&c, &c), &c);
    println!("cube counts {:?}", x.cube_counts());
    let hr = cohomology_ring(&x, &Coeff::Integers)?;
    println!("Betti numbers {:?}", hr.betti_numbers());

    // The products g_i ⌣ g_j for i < j should form a basis of H^2.
    let mut columns = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            let prod = hr.table.product(1, i, 1, j).to_vec();
            println!("g1_{} ⌣ g1_{} = {:?}", i + 1, j + 1, prod);
            columns.push(prod);
        }
    }
    let m = IntMatrix::from_columns(3, &columns);
    println!("det of the degree-2 products: {}", determinant(&m)?);

    let g1g2 = hr.table.multiply(&hr.groups, 1, &unit(3, 0), 1, &unit(3, 1));
    let triple = hr.table.multiply(&hr.groups, 2, &g1g2, 1, &unit(3, 2));
    println!("g1_1 ⌣ g1_2 ⌣ g1_3 = {triple:?} · g3_1");
    Ok(())
}

fn unit(n: usize, i: usize) -> Vec<BigInt> {
    (0..n).map(|k| BigInt::from((k == i) as i64)).collect()
}
