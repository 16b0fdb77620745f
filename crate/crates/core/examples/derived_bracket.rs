//! The derived bracket [x, y]_d = [x, dy] of a differential Lie algebra
//! over F_2, with the Z/2 action x ↦ x + y and its equivariant cohomology.

use leibcoh::catalog::{derived2_dgla, derived2_f2_z2};
use leibcoh::equivariant::{constant_coefficients, EquivariantComplex};

fn main() -> leibcoh::Result<()> {
    let dgla = derived2_dgla();
    dgla.validate()?;
    let g = dgla.derived_bracket_algebra()?;
    for i in 0..2 {
        for j in 0..2 {
            let b: Vec<String> = g.basis_bracket(i, j).iter().map(|x| x.to_string()).collect();
            println!("[e{}, e{}]_d = ({})", i + 1, j + 1, b.join(", "));
        }
    }
    println!("Leibniz identity violations: {}", g.check_leibniz_identity().len());

    let action = derived2_f2_z2()?;
    println!("action violations: {}", action.validate().len());
    let c = EquivariantComplex::new(&action, &constant_coefficients(g.field(), &action.group))?;
    println!("dim g^G = {}", c.fixed[1].dim());
    for n in 0..=4 {
        let h = c.equivariant_cohomology(n)?;
        println!("HL^{n}_G over F_2: dim S^n_G = {}, betti {}", h.invariant_dim, h.result.betti);
    }
    Ok(())
}
