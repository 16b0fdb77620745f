//! Cup products of equivariant cohomology classes and the zinbiel relation
//! ([a]∪[b])∪[c] = [a]∪([b]∪[c]) + (-1)^{qr} [a]∪([c]∪[b]).

use leibcoh::catalog::{derived2_f2_z2, lambda6_z2};
use leibcoh::equivariant::{constant_coefficients, coset_function_coefficients, EquivariantComplex};
use leibcoh::shuffle::{cohomology_classes, cup, zinbiel_check_on_cohomology};

fn main() -> leibcoh::Result<()> {
    let f2 = derived2_f2_z2()?;
    let z2 = lambda6_z2();
    let setups = [
        ("derived2_f2_z2, constant", EquivariantComplex::new(&f2, &constant_coefficients(f2.algebra.field(), &f2.group))?),
        ("lambda6_z2, coset functions", EquivariantComplex::new(&z2, &coset_function_coefficients(z2.algebra.field(), &z2.group))?),
    ];
    for (label, c) in &setups {
        println!("{label}");
        let one = cohomology_classes(c, 1)?;
        for a in &one {
            for b in &one {
                let ab = cup(c, &a.representative, &b.representative)?;
                let v = c.to_ambient(&ab);
                println!("  degree-1 cup: cocycle {}, coboundary {}", c.is_cocycle(2, &v)?, c.is_coboundary(2, &v)?);
            }
        }
        for (p, q, r) in [(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2)] {
            let (ca, cb, cc) = (cohomology_classes(c, p)?, cohomology_classes(c, q)?, cohomology_classes(c, r)?);
            let mut checked = 0;
            let mut ok = true;
            for a in &ca {
                for b in &cb {
                    for x in &cc {
                        ok &= zinbiel_check_on_cohomology(c, a, b, x)?.ok;
                        checked += 1;
                    }
                }
            }
            println!("  zinbiel relation ({p},{q},{r}): {checked} triples, all ok: {ok}");
        }
    }
    Ok(())
}
