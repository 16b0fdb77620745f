//! λ6 with Z/2 acting by diag(1, -1, -1): subgroups, fixed subalgebras,
//! the orbit category and equivariant cohomology for both built-in
//! coefficient systems.

use leibcoh::catalog::lambda6_z2;
use leibcoh::equivariant::{constant_coefficients, coset_function_coefficients, EquivariantComplex};
use leibcoh::Field;

fn main() -> leibcoh::Result<()> {
    let action = lambda6_z2();
    println!("action violations: {}", action.validate().len());

    let q = Field::Rational;
    for (label, coeffs) in [
        ("constant", constant_coefficients(q, &action.group)),
        ("coset functions", coset_function_coefficients(q, &action.group)),
    ] {
        let c = EquivariantComplex::new(&action, &coeffs)?;
        println!("\ncoefficients: {label}");
        for (h, f) in c.fixed.iter().enumerate() {
            println!("  H{}: elements {:?}, dim g^H = {}", h + 1, f.subgroup.elements(), f.dim());
        }
        for m in &c.orbit().morphisms {
            println!("  morphism G/H{} -> G/H{} via g{}", m.source + 1, m.target + 1, m.element);
        }
        for n in 0..=4 {
            let h = c.equivariant_cohomology(n)?;
            println!(
                "  HL^{n}_G: dim S^n_G = {:>3} (ambient {:>3}), betti {}",
                h.invariant_dim, h.ambient_dim, h.result.betti
            );
        }
    }
    Ok(())
}
