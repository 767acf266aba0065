//! Smith normal form with unimodular transforms, and the prime-field variant.

use precubical::linalg::{determinant, kernel_basis, smith_normal_form, smith_normal_form_mod, IntMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let f = smith_normal_form(&a);
    println!("A = {a:?}");
    println!("S = {:?}", f.s);
    println!("invariant factors {:?}, rank {}", f.invariant_factors(), f.rank);
    println!("det U = {}, det V = {}", determinant(&f.u)?, determinant(&f.v)?);
    assert_eq!(f.u.mul(&a).mul(&f.v), f.s);

    let b = IntMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6]]);
    println!("kernel of {b:?}: {:?}", kernel_basis(&b));

    let g = smith_normal_form_mod(&a, 3)?;
    println!("over Z/3: diagonal {:?}, rank {}", g.diag, g.rank);
    Ok(())
}
