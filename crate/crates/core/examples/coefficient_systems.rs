//! Coefficient systems over the orbit category of S3: the constant system,
//! functions on cosets, and a deliberately broken system.

use leibcoh::equivariant::{constant_coefficients, coset_function_coefficients};
use leibcoh::group::FiniteGroup;
use leibcoh::{Field, Matrix};

fn main() {
    let (s3, _) = FiniteGroup::symmetric(3);
    let q = Field::Rational;

    let constant = constant_coefficients(q, &s3);
    println!(
        "S3 orbit category: {} objects, {} morphisms",
        constant.orbit.object_count(),
        constant.orbit.morphisms.len()
    );
    println!("constant system violations: {}", constant.check().len());

    let cosets = coset_function_coefficients(q, &s3);
    let dims: Vec<usize> = cosets.algebras.iter().map(|a| a.dim()).collect();
    println!("coset-function algebra dims per subgroup: {dims:?}");
    println!("coset-function system violations: {}", cosets.check().len());

    let z2 = FiniteGroup::cyclic(2);
    let mut broken = coset_function_coefficients(q, &z2);
    let swap = broken.orbit.find(0, 0, 1).expect("non-identity automorphism of G/e");
    broken.maps[swap] = Matrix::from_ints(q, &[&[1, 0], &[1, 1]]);
    for v in broken.check() {
        println!("broken system: morphisms {:?}: {}", v.morphisms, v.detail);
    }
}
