//! Homology and cohomology of the three-dimensional Leibniz algebra λ6.
//!
//! Run with `cargo run --example lambda6_cohomology`.

use leibcoh::catalog::lambda6;
use leibcoh::complexes::{boundary_matrix, cohomology, homology, CoefficientAlgebra};
use leibcoh::Field;

fn main() -> leibcoh::Result<()> {
    let g = lambda6();
    println!("λ6: dim {}, Leibniz identity violations: {}", g.dim(), g.check_leibniz_identity().len());

    let e = |i: usize| leibcoh::linalg::unit_vector(Field::Rational, 3, i);
    println!("[e1, e3] = {:?}", render(&g.bracket(&e(0), &e(2))?));
    println!("[e3, e3] = {:?}", render(&g.bracket(&e(2), &e(2))?));

    let d3 = boundary_matrix(&g, 3)?;
    let d2 = boundary_matrix(&g, 2)?;
    println!("d2 ∘ d3 = 0: {}", d2.mul(&d3).is_zero());

    for n in 1..=4 {
        let h = homology(&g, n)?;
        println!("HL_{n}: cycles {:>3} boundaries {:>3} betti {}", h.cycle_basis.len(), h.boundary_basis.len(), h.betti);
    }

    let k = CoefficientAlgebra::ground(Field::Rational);
    for n in 0..=4 {
        let h = cohomology(&g, &k, n)?;
        println!("HL^{n}: cocycles {:>3} coboundaries {:>3} betti {}", h.cocycle_basis.len(), h.coboundary_basis.len(), h.betti);
    }
    Ok(())
}

fn render(v: &[leibcoh::Scalar]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}
