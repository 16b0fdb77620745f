//! Truncated free Leibniz algebras and the letter-permuting action of S_d.

use leibcoh::algebra::free_leibniz_truncated;
use leibcoh::catalog::catalog;
use leibcoh::Field;

fn main() -> leibcoh::Result<()> {
    for (d, n) in [(1, 3), (2, 3), (2, 4), (3, 3)] {
        let free = free_leibniz_truncated(Field::Rational, d, n)?;
        println!(
            "free Leibniz on {d} letters up to degree {n}: dim {}, identity violations {}",
            free.algebra.dim(),
            free.algebra.check_leibniz_identity().len()
        );
    }

    let free = free_leibniz_truncated(Field::Rational, 1, 3)?;
    let word = |k: usize| free.words[k].iter().map(|_| "v").collect::<String>();
    for (i, j) in [(0, 0), (1, 0), (0, 1)] {
        let b: Vec<String> = free.algebra.basis_bracket(i, j).iter().map(|x| x.to_string()).collect();
        println!("[{}, {}] = ({})", word(i), word(j), b.join(", "));
    }

    let entry = catalog("free_leib(2,3)_perm")?;
    let action = entry.action.expect("bundled action");
    println!(
        "free_leib(2,3)_perm: group order {}, action violations {}",
        action.group.order(),
        action.validate().len()
    );
    Ok(())
}
